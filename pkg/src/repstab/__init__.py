"""Exact-arithmetic decompositions of classical representation sequences.

Subpackages by role:

- partitions: irreducible labels (partitions, pseudo-partitions, double
  partitions) and the padding convention
- symfunc: Littlewood-Richardson, Kostka, plethysm, weight-to-Schur expansion
- characters: S_n and W_n character theory (values, decomposition, Kronecker,
  induction, branching)
- repring: the GL/SL/Sp representation rings (tensor, branch, restrict, Schur
  functors, exact division)
- arrangements: Orlik-Solomon algebras of the braid and signed arrangements
- liehom: graded Lie algebra homology (free, nilpotent, Heisenberg)
- tableaux: tableau-statistic multiplicity theorems (coinvariants, Schubert,
  rank-selected Lefschetz)
- stability: multiplicity stability detection on decomposition sequences
- cli: the `repstab` command
"""

__version__ = "0.1.0"
