"""Exact character theory of the symmetric and hyperoctahedral groups.

S_n character values come from the Murnaghan-Nakayama recursion in the
beta-number (abacus) model, memoized on (shape, remaining cycles).  W_n
irreducible characters are built from the defining induced-representation
description: V_{(lam+,lam-)} is induced from the pullback of V_{lam+} boxed
with nu-twisted V_{lam-}, where nu is the character counting sign flips.
Conjugacy classes of W_n are indexed by pairs (alpha, beta): cycle types of
the positive and negative cycles of a signed permutation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import partitions as pt
from . import symfunc
from .config import LIMITS
from .decomp import Decomposition
from .errors import (NotARepresentationError, RepstabError, ResourceCapError)


# ---------------------------------------------------------------------------
# Symmetric group
# ---------------------------------------------------------------------------

def sym_classes(n: int) -> list:
    """Cycle types of S_n, decreasing lex."""
    return pt.enumerate_partitions(n)


def class_size_sym(rho) -> int:
    return factorial(sum(rho)) // pt.z_factor(rho)


def _border_strip_removals(lam: tuple, t: int):
    """(smaller shape, sign) for every border strip of size t removable from lam."""
    m = len(lam)
    betas = [lam[i] + (m - 1 - i) for i in range(m)]
    beta_set = set(betas)
    out = []
    for idx, beta in enumerate(betas):
        target = beta - t
        if target < 0 or target in beta_set:
            continue
        height = sum(1 for b in betas if target < b < beta)
        new_betas = sorted((b for b in betas if b != beta), reverse=True)
        new_betas.append(target)
        new_betas.sort(reverse=True)
        shape = tuple(new_betas[i] - (m - 1 - i) for i in range(m))
        shape = tuple(x for x in shape if x > 0)
        out.append((shape, -1 if height % 2 else 1))
    return out


@lru_cache(maxsize=None)
def character_sym(lam: tuple, rho: tuple) -> int:
    """chi_lam(rho) for lam, rho partitions of the same size."""
    lam, rho = tuple(lam), tuple(sorted(rho, reverse=True))
    if sum(lam) != sum(rho):
        raise RepstabError(f"character_sym: size mismatch {lam} vs {rho}")
    if not rho:
        return 1
    t, rest = rho[0], rho[1:]
    total = 0
    for shape, sign in _border_strip_removals(lam, t):
        total += sign * character_sym(shape, rest)
    return total


# Cached full tables; preloadable from disk by the CLI (versioned pickle).
_TABLES: dict = {}


def preload_tables(tables: dict):
    _TABLES.update(tables)


def export_tables() -> dict:
    return dict(_TABLES)


def sym_character_table(n: int) -> dict:
    """Full character table of S_n: table[lam][rho]."""
    key = (pt.SYM, n)
    if key in _TABLES:
        return _TABLES[key]
    if n > LIMITS.max_char_n:
        raise ResourceCapError(
            f"S_{n} character table exceeds cap n <= {LIMITS.max_char_n}")
    classes = sym_classes(n)
    table = {lam: {rho: character_sym(lam, rho) for rho in classes}
             for lam in classes}
    _TABLES[key] = table
    return table


# ---------------------------------------------------------------------------
# Hyperoctahedral group W_n = Z/2 wr S_n
# ---------------------------------------------------------------------------

SignedCycleType = tuple  # (alpha, beta): positive / negative cycle types


def hyp_classes(n: int) -> list:
    """Signed cycle types (alpha, beta) with |alpha| + |beta| = n."""
    out = []
    for k in range(n, -1, -1):
        for alpha in pt.enumerate_partitions(k):
            for beta in pt.enumerate_partitions(n - k):
                out.append((alpha, beta))
    return out


def z_factor_hyp(cls: SignedCycleType) -> int:
    alpha, beta = cls
    return (pt.z_factor(alpha) * pt.z_factor(beta)
            * 2 ** (len(alpha) + len(beta)))


def class_size_hyp(cls: SignedCycleType) -> int:
    n = sum(cls[0]) + sum(cls[1])
    return hyp_order(n) // z_factor_hyp(cls)


def hyp_order(n: int) -> int:
    return 2 ** n * factorial(n)


def _multiset_splits(parts: tuple):
    """All (left, right) multiset splits of a partition, as sorted tuples."""
    values = sorted(set(parts), reverse=True)
    mults = [parts.count(v) for v in values]
    for take in itertools.product(*(range(m + 1) for m in mults)):
        left, right = [], []
        for v, m, t in zip(values, mults, take):
            left += [v] * t
            right += [v] * (m - t)
        yield tuple(left), tuple(right)


@lru_cache(maxsize=None)
def character_hyp(label: tuple, cls: SignedCycleType) -> int:
    """Irreducible W_n character chi_{(lam+,lam-)} at class (alpha, beta).

    Computed from V_{(lam+,lam-)} = Ind_{W_k x W_{n-k}}^{W_n}
    (V_{(lam+,0)} boxtimes V_{(0,lam-)}): the pullback character of V_lam
    evaluates as chi_lam on the underlying cycle type, and the sign-flip
    character nu takes value (-1)^{number of negative cycles}.
    """
    plus, minus = label
    alpha, beta = cls
    k = sum(plus)
    n = k + sum(minus)
    if sum(alpha) + sum(beta) != n:
        raise RepstabError(f"character_hyp: size mismatch {label} vs {cls}")
    total = Fraction(0)
    for a1, a2 in _multiset_splits(alpha):
        for b1, b2 in _multiset_splits(beta):
            if sum(a1) + sum(b1) != k:
                continue
            c1 = pt.partition(sorted(a1 + b1, reverse=True))
            c2 = pt.partition(sorted(a2 + b2, reverse=True))
            val = (character_sym(plus, c1)
                   * (-1) ** len(b2)
                   * character_sym(minus, c2))
            if val:
                total += Fraction(val, z_factor_hyp((a1, b1))
                                  * z_factor_hyp((a2, b2)))
    total *= z_factor_hyp(cls)
    if total.denominator != 1:
        raise RepstabError(f"character_hyp: non-integral value {total}")
    return int(total)


def hyp_character_table(n: int) -> dict:
    """Full character table of W_n: table[(plus,minus)][(alpha,beta)]."""
    key = (pt.HYP, n)
    if key in _TABLES:
        return _TABLES[key]
    if n > LIMITS.max_char_n:
        raise ResourceCapError(
            f"W_{n} character table exceeds cap n <= {LIMITS.max_char_n}")
    classes = hyp_classes(n)
    labels = [(plus, minus)
              for k in range(n, -1, -1)
              for plus in pt.enumerate_partitions(k)
              for minus in pt.enumerate_partitions(n - k)]
    table = {lab: {c: character_hyp(lab, c) for c in classes} for lab in labels}
    _TABLES[key] = table
    return table


def dim_hyp(label: tuple) -> int:
    """Dimension of the W_n irreducible V_{(plus,minus)}."""
    plus, minus = label
    k, n = sum(plus), sum(plus) + sum(minus)
    return (factorial(n) // factorial(k) // factorial(n - k)
            * pt.syt_count(plus) * pt.syt_count(minus))


# ---------------------------------------------------------------------------
# Class functions and decomposition
# ---------------------------------------------------------------------------

@dataclass
class ClassFunction:
    """Exact rational class function on S_n (group=SYM) or W_n (group=HYP)."""
    group: str
    n: int
    values: dict

    def __post_init__(self):
        expected = (sym_classes(self.n) if self.group == pt.SYM
                    else hyp_classes(self.n))
        missing = [c for c in expected if c not in self.values]
        if missing:
            raise RepstabError(f"class function missing classes: {missing[:3]}...")


def irreducible_character(family: str, label, n: int) -> ClassFunction:
    if family == pt.SYM:
        padded = pt.pad(label, n)
        vals = {rho: character_sym(padded, rho) for rho in sym_classes(n)}
        return ClassFunction(pt.SYM, n, vals)
    padded = pt.pad_double(label, n)
    vals = {c: character_hyp(padded, c) for c in hyp_classes(n)}
    return ClassFunction(pt.HYP, n, vals)


def decompose(f: ClassFunction) -> Decomposition:
    """Inner products against every irreducible; errors on non-representations.

    Returns a padded-label Decomposition (partitions of n / double partitions
    of n); use .unpadded() for cross-rank coordinates.
    """
    if f.group == pt.SYM:
        table = sym_character_table(f.n)
        zs = {rho: pt.z_factor(rho) for rho in sym_classes(f.n)}
        family = pt.SYM
    else:
        table = hyp_character_table(f.n)
        zs = {c: z_factor_hyp(c) for c in hyp_classes(f.n)}
        family = pt.HYP
    terms = {}
    for label, chars in table.items():
        acc = Fraction(0)
        for cls, z in zs.items():
            v = f.values.get(cls, 0)
            if v:
                acc += Fraction(v) * chars[cls] / z
        if acc:
            if acc.denominator != 1 or acc < 0:
                raise NotARepresentationError(
                    f"multiplicity of {label} is {acc}; input is not a character")
            terms[label] = int(acc)
    return Decomposition(family, f.n, terms, padded=True)


# ---------------------------------------------------------------------------
# Kronecker products (stable range per Briand-Orellana-Rosas)
# ---------------------------------------------------------------------------

def kronecker(lam: tuple, mu: tuple, n: int) -> Decomposition:
    """Decomposition of V(lam)_n tensor V(mu)_n over S_n, unpadded."""
    lp, mp = pt.pad(lam, n), pt.pad(mu, n)
    values = {rho: character_sym(lp, rho) * character_sym(mp, rho)
              for rho in sym_classes(n)}
    return decompose(ClassFunction(pt.SYM, n, values)).unpadded()


def kronecker_bound(lam: tuple, mu: tuple) -> int:
    """Rank from which the Kronecker decomposition is constant."""
    first = lambda p: p[0] if p else 0
    return sum(lam) + sum(mu) + first(lam) + first(mu)


# ---------------------------------------------------------------------------
# Induction from Young-type subgroups (Hemmer's setting)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupClassData:
    """A subgroup H <= S_k given by class data only.

    classes: tuple of (cycle type in S_k, class size); sizes must sum to order.
    """
    k: int
    order: int
    classes: tuple
    name: str = "H"

    def __post_init__(self):
        if sum(size for _, size in self.classes) != self.order:
            raise RepstabError(
                f"subgroup class sizes sum to {sum(s for _, s in self.classes)}"
                f" != |H| = {self.order}")


@dataclass(frozen=True)
class SubgroupCharacter:
    """A character of H, rational-valued per class.

    galois > 1 marks the sum of a Galois orbit of complex irreducibles; the
    multiplicity of each member is the rational inner product divided by
    galois (always integral for rational class functions).
    """
    values: tuple
    galois: int = 1
    name: str = "V"


def induce_hemmer(subgroup: SubgroupClassData, chi: SubgroupCharacter,
                  n: int) -> Decomposition:
    """Decompose Ind_{H x S_{n-k}}^{S_n} (V boxtimes Q), unpadded coordinates.

    By Frobenius reciprocity the multiplicity of V(lam)_n equals
    <Res_{H x S_{n-k}} chi_{lam[n]}, chi_V boxtimes 1>.
    """
    k = subgroup.k
    if n < k:
        raise RepstabError(f"induce_hemmer: need n >= k = {k}")
    rest = n - k
    terms = {}
    for lam_padded in sym_classes(n):
        acc = Fraction(0)
        for (ctype, csize), value in zip(subgroup.classes, chi.values):
            if not value:
                continue
            for rho in pt.enumerate_partitions(rest):
                fused = pt.partition(sorted(ctype + rho, reverse=True))
                chi_val = character_sym(lam_padded, fused)
                if chi_val:
                    acc += (Fraction(csize, subgroup.order)
                            * Fraction(value) * chi_val / pt.z_factor(rho))
        if acc:
            acc /= chi.galois
            if acc.denominator != 1 or acc < 0:
                raise NotARepresentationError(
                    f"induced multiplicity of {lam_padded} is {acc}")
            core, _ = pt.unpad(lam_padded)
            terms[core] = int(acc)
    return Decomposition(pt.SYM, n, terms, padded=False)


def builtin_subgroups(k: int) -> list:
    """Conjugacy-class representatives of subgroups of S_k (k <= 3), with
    their irreducible characters (rational values; Galois pairs summed)."""
    if k == 1:
        triv = SubgroupClassData(1, 1, (((1,), 1),), "S1")
        return [(triv, [SubgroupCharacter((1,), 1, "triv")])]
    if k == 2:
        e = SubgroupClassData(2, 1, ((((1, 1)), 1),), "1<=S2")
        s2 = SubgroupClassData(2, 2, (((1, 1), 1), ((2,), 1)), "S2")
        return [
            (e, [SubgroupCharacter((1,), 1, "triv")]),
            (s2, [SubgroupCharacter((1, 1), 1, "triv"),
                  SubgroupCharacter((1, -1), 1, "sign")]),
        ]
    if k == 3:
        e = SubgroupClassData(3, 1, (((1, 1, 1), 1),), "1<=S3")
        c2 = SubgroupClassData(3, 2, (((1, 1, 1), 1), ((2, 1), 1)), "C2")
        c3 = SubgroupClassData(3, 3, (((1, 1, 1), 1), ((3,), 1), ((3,), 1)), "C3")
        s3 = SubgroupClassData(3, 6, (((1, 1, 1), 1), ((2, 1), 3), ((3,), 2)), "S3")
        return [
            (e, [SubgroupCharacter((1,), 1, "triv")]),
            (c2, [SubgroupCharacter((1, 1), 1, "triv"),
                  SubgroupCharacter((1, -1), 1, "sign")]),
            (c3, [SubgroupCharacter((1, 1, 1), 1, "triv"),
                  SubgroupCharacter((2, -1, -1), 2, "omega-pair")]),
            (s3, [SubgroupCharacter((1, 1, 1), 1, "triv"),
                  SubgroupCharacter((1, -1, 1), 1, "sign"),
                  SubgroupCharacter((2, 0, -1), 1, "std")]),
        ]
    raise RepstabError(f"builtin subgroups available only for k <= 3, got {k}")


# ---------------------------------------------------------------------------
# Branching (restriction to smaller symmetric groups)
# ---------------------------------------------------------------------------

def restrict_sym(lam: tuple, n: int, steps: int) -> Decomposition:
    """V(lam)_n restricted to S_{n-steps}, unpadded coordinates."""
    if steps >= n:
        raise RepstabError("restrict_sym: steps must be < n")
    current = {pt.pad(lam, n): 1}
    for _ in range(steps):
        nxt: dict = {}
        for shape, mult in current.items():
            for smaller in _remove_one_box(shape):
                nxt[smaller] = nxt.get(smaller, 0) + mult
        current = nxt
    terms = {}
    for shape, mult in current.items():
        core, _ = pt.unpad(shape)
        terms[core] = mult
    return Decomposition(pt.SYM, n - steps, terms, padded=False)


def _remove_one_box(shape: tuple):
    out = []
    for i in range(len(shape)):
        if i == len(shape) - 1 or shape[i] > shape[i + 1]:
            smaller = shape[:i] + (shape[i] - 1,) + shape[i + 1:]
            out.append(pt.partition(smaller))
    return out


# ---------------------------------------------------------------------------
# Hyperoctahedral induction products (Geck-Pfeiffer rule)
# ---------------------------------------------------------------------------

def induce_hyp_product(a: tuple, b: tuple) -> Decomposition:
    """Ind_{W_k x W_{n-k}}^{W_n} (V_a boxtimes V_b) via componentwise LR."""
    n = sum(a[0]) + sum(a[1]) + sum(b[0]) + sum(b[1])
    terms: dict = {}
    for nup, cp in symfunc.lr(a[0], b[0]).items():
        for num, cm in symfunc.lr(a[1], b[1]).items():
            terms[(nup, num)] = terms.get((nup, num), 0) + cp * cm
    return Decomposition(pt.HYP, n, terms, padded=True)
