"""Graded Lie algebras and their Chevalley-Eilenberg homology.

Free Lie algebras are modeled on Lyndon words with the standard-factorization
bracketing; brackets are expanded in the tensor algebra and rewritten into the
Lyndon basis by peeling lex-minimal words (which are always Lyndon for Lie
elements).  Homology is computed slice by slice: the differential preserves
both the grading and the torus weight, so each (degree, grading, weight)
block is a small exact-integer matrix.

The differential follows the convention
d(x_1 ^ ... ^ x_i) = sum_{j<k} (-1)^{j+k+1} [x_j, x_k] ^ x_1 ... ^x_j ... ^x_k ... x_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import partitions as pt
from . import spweights
from . import symfunc
from .config import LIMITS
from .decomp import Decomposition
from .errors import RepstabError, ResourceCapError
from .exactla import rank_sparse


# ---------------------------------------------------------------------------
# Lyndon words and the free Lie algebra
# ---------------------------------------------------------------------------

def lyndon_words(n: int, length: int) -> list:
    """All Lyndon words of the given length over 1..n, lex order (Duval)."""
    if length < 1 or n < 1:
        raise RepstabError("lyndon_words: need n >= 1 and length >= 1")
    out = []
    w = [0]
    while w:
        w[-1] += 1
        if len(w) == length:
            out.append(tuple(w))
        m = len(w)
        while len(w) < length:
            w.append(w[len(w) - m])
        while w and w[-1] == n:
            w.pop()
    return out


def _is_lyndon(w: tuple) -> bool:
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def word_weight(word: tuple, n: int) -> tuple:
    """Content vector: how many times each letter 1..n occurs."""
    counts = [0] * n
    for letter in word:
        counts[letter - 1] += 1
    return tuple(counts)


def necklace_count(n: int, j: int) -> int:
    """dim L_j(V_n) = (1/j) sum_{d | j} mu(d) n^{j/d}."""
    total = 0
    for d in range(1, j + 1):
        if j % d == 0:
            total += mobius(d) * n ** (j // d)
    assert total % j == 0
    return total // j


def mobius(d: int) -> int:
    if d == 1:
        return 1
    result, rest = 1, d
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            rest //= p
            if rest % p == 0:
                return 0
            result = -result
        p += 1
    if rest > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def standard_factorization(w: tuple) -> tuple:
    """w = uv with v the lex-least (equivalently longest Lyndon) proper suffix."""
    if len(w) < 2:
        raise RepstabError("standard_factorization: word too short")
    best = min(range(1, len(w)), key=lambda i: w[i:])
    return w[:best], w[best:]


@lru_cache(maxsize=None)
def bracket_tensor(w: tuple) -> tuple:
    """Standard bracketing of a Lyndon word expanded in the tensor algebra."""
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    left, right = dict(bracket_tensor(u)), dict(bracket_tensor(v))
    out: dict = {}
    for a, ca in left.items():
        for b, cb in right.items():
            out[a + b] = out.get(a + b, 0) + ca * cb
            out[b + a] = out.get(b + a, 0) - ca * cb
    return tuple(sorted((k, v) for k, v in out.items() if v))


def lie_to_lyndon(elt: dict) -> dict:
    """Rewrite a Lie element of the tensor algebra in the Lyndon basis."""
    remaining = {k: v for k, v in elt.items() if v}
    out: dict = {}
    while remaining:
        w = min(remaining)
        if not _is_lyndon(w):
            raise RepstabError(f"lex-minimal word {w} is not Lyndon; not a Lie element")
        c = remaining[w]
        out[w] = c
        for word, coeff in bracket_tensor(w):
            val = remaining.get(word, 0) - c * coeff
            if val:
                remaining[word] = val
            else:
                remaining.pop(word, None)
    return out


@lru_cache(maxsize=None)
def bracket_lyndon(u: tuple, v: tuple, truncation: int | None = None) -> tuple:
    """[b(u), b(v)] in the Lyndon basis; zero past the truncation step."""
    if truncation is not None and len(u) + len(v) > truncation:
        return ()
    if u == v:
        return ()
    left, right = dict(bracket_tensor(u)), dict(bracket_tensor(v))
    out: dict = {}
    for a, ca in left.items():
        for b, cb in right.items():
            out[a + b] = out.get(a + b, 0) + ca * cb
            out[b + a] = out.get(b + a, 0) - ca * cb
    return tuple(sorted(lie_to_lyndon(out).items()))


def bracket_normal_form(u: tuple, v: tuple, truncation: int | None = None) -> dict:
    """Public wrapper returning a dict Lyndon word -> coefficient."""
    cap = LIMITS.lie_max_grading
    if len(u) + len(v) > cap:
        raise ResourceCapError(
            f"bracket grading {len(u) + len(v)} exceeds cap {cap}")
    return dict(bracket_lyndon(tuple(u), tuple(v), truncation))


# ---------------------------------------------------------------------------
# Bakhturin's free Lie multiplicity formula
# ---------------------------------------------------------------------------

def bakhturin_multiplicity(lam: tuple) -> int:
    """Multiplicity of V(lam)_n in L_m(V_n), m = |lam|, for n >= l(lam)."""
    from .characters import character_sym
    lam = tuple(lam)
    m = sum(lam)
    if m < 1:
        raise RepstabError("bakhturin_multiplicity: need |lam| >= 1")
    total = 0
    for d in range(1, m + 1):
        if m % d == 0:
            # tau^{m/d} has m/d cycles of length d
            cycle_type = (d,) * (m // d)
            total += mobius(d) * character_sym(lam, cycle_type)
    assert total % m == 0
    return total // m


def free_lie_decomposition(m: int) -> dict:
    """lam -> multiplicity of V(lam)_n in L_m(V_n) (simply stable labels)."""
    return {lam: c for lam in pt.enumerate_partitions(m)
            if (c := bakhturin_multiplicity(lam))}


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg slices for graded Lie algebras on an indexed basis
# ---------------------------------------------------------------------------

@dataclass
class GradedBasis:
    """An ordered basis of a graded Lie algebra with weights and brackets."""
    elements: list            # hashable descriptors
    grading: list             # int per element
    weight: list              # tuple per element
    bracket: dict             # (i, j) i<j -> tuple of (index, coeff)

    def index(self):
        return {e: i for i, e in enumerate(self.elements)}


def free_nilpotent_basis(n: int, k: int) -> GradedBasis:
    """Lyndon model of N_k(n), brackets truncated past step k."""
    elements = []
    for j in range(1, k + 1):
        elements.extend(sorted(lyndon_words(n, j)))
    grading = [len(w) for w in elements]
    weight = [word_weight(w, n) for w in elements]
    idx = {w: i for i, w in enumerate(elements)}
    bracket = {}
    for a in range(len(elements)):
        for b in range(a + 1, len(elements)):
            if grading[a] + grading[b] > k:
                continue
            terms = bracket_lyndon(elements[a], elements[b], truncation=k)
            if terms:
                bracket[(a, b)] = tuple((idx[w], c) for w, c in terms)
    return GradedBasis(elements, grading, weight, bracket)


def heisenberg_basis(n: int) -> GradedBasis:
    """H_{2n+1}: a_1..a_n, b_1..b_n, central z with [a_i, b_i] = z.

    Graded with a, b in degree 1 and z in degree 2 (the bracket is graded);
    weights are the symplectic L-coordinates.
    """
    elements = [("a", t) for t in range(1, n + 1)] + \
               [("b", t) for t in range(1, n + 1)] + [("z",)]
    grading = [1] * (2 * n) + [2]
    weight = []
    for e in elements:
        v = [0] * n
        if e[0] == "a":
            v[e[1] - 1] = 1
        elif e[0] == "b":
            v[e[1] - 1] = -1
        weight.append(tuple(v))
    z_index = 2 * n
    bracket = {(t, n + t): ((z_index, 1),) for t in range(n)}
    return GradedBasis(elements, grading, weight, bracket)


@dataclass
class ChainSlice:
    """One (homological degree, grading, weight) block of the CE complex."""
    degree: int
    grading: int
    weight: tuple
    basis_here: list      # wedge monomials (ascending index tuples) in degree i
    basis_below: list     # degree i-1
    basis_above: list     # degree i+1
    d_here: list          # rows over basis_here -> coords in basis_below
    d_above: list         # rows over basis_above -> coords in basis_here

    def homology_dim(self) -> int:
        return (len(self.basis_here) - rank_sparse(self.d_here)
                - rank_sparse(self.d_above))

    def check_square_zero(self) -> bool:
        for row in self.d_above:
            acc: dict = {}
            for col, val in row.items():
                for c2, v2 in self.d_here[col].items():
                    acc[c2] = acc.get(c2, 0) + val * v2
            if any(acc.values()):
                return False
        return True


def _wedge_differential(mono: tuple, basis: GradedBasis) -> dict:
    """CE boundary of an ascending wedge monomial, as {monomial: coeff}."""
    out: dict = {}
    for p in range(len(mono)):
        for q in range(p + 1, len(mono)):
            pair = (mono[p], mono[q])
            terms = basis.bracket.get(pair)
            if not terms:
                continue
            sign = (-1) ** (p + q + 1)
            rest = mono[:p] + mono[p + 1:q] + mono[q + 1:]
            for idx, coeff in terms:
                if idx in rest:
                    continue
                merged, s = _insert_sorted(rest, idx)
                out[merged] = out.get(merged, 0) + sign * coeff * s
    return {k: v for k, v in out.items() if v}


def _insert_sorted(rest: tuple, idx: int):
    pos = 0
    while pos < len(rest) and rest[pos] < idx:
        pos += 1
    return rest[:pos] + (idx,) + rest[pos:], (-1) ** pos


def _wedge_monomials(basis: GradedBasis, size: int, grading, weight: tuple):
    """Ascending index tuples with the exact total weight (and grading if given)."""
    count = len(basis.elements)
    nonneg = all(all(x >= 0 for x in w) for w in basis.weight)
    out = []

    def rec(start, left_size, left_grading, weight_left, chosen):
        if left_size == 0:
            if (left_grading in (0, None)) and all(x == 0 for x in weight_left):
                out.append(tuple(chosen))
            return
        for pos in range(start, count):
            g = basis.grading[pos]
            if left_grading is not None and g > left_grading:
                continue
            w = basis.weight[pos]
            nw = tuple(a - b for a, b in zip(weight_left, w))
            if nonneg and any(x < 0 for x in nw):
                continue
            chosen.append(pos)
            rec(pos + 1, left_size - 1,
                None if left_grading is None else left_grading - g, nw, chosen)
            chosen.pop()

    rec(0, size, grading, weight, [])
    return out


def build_chain_slice(basis: GradedBasis, degree: int, grading,
                      weight: tuple) -> ChainSlice:
    """Chain block for one weight; pass grading=None to take all gradings."""
    here = _wedge_monomials(basis, degree, grading, weight)
    below = _wedge_monomials(basis, degree - 1, grading, weight) if degree else []
    above = _wedge_monomials(basis, degree + 1, grading, weight)
    below_pos = {m: i for i, m in enumerate(below)}
    here_pos = {m: i for i, m in enumerate(here)}
    d_here = []
    for mono in here:
        row = {}
        for m2, c in _wedge_differential(mono, basis).items():
            row[below_pos[m2]] = c
        d_here.append(row)
    d_above = []
    for mono in above:
        row = {}
        for m2, c in _wedge_differential(mono, basis).items():
            row[here_pos[m2]] = c
        d_above.append(row)
    return ChainSlice(degree, grading, weight, here, below, above, d_here, d_above)


# ---------------------------------------------------------------------------
# Free nilpotent homology (GL), Heisenberg homology (Sp)
# ---------------------------------------------------------------------------

def _check_lie_caps(n, k, i, j):
    if n > LIMITS.lie_max_n or k > LIMITS.lie_max_step:
        raise ResourceCapError(
            f"nilpotent homology caps: n <= {LIMITS.lie_max_n}, k <= {LIMITS.lie_max_step}")
    if i > LIMITS.lie_max_homdegree:
        raise ResourceCapError(f"homological degree cap {LIMITS.lie_max_homdegree}")
    if j is not None and j > LIMITS.lie_max_grading:
        raise ResourceCapError(f"grading cap {LIMITS.lie_max_grading}")


@lru_cache(maxsize=None)
def _nilpotent_basis_cached(n: int, k: int) -> GradedBasis:
    return free_nilpotent_basis(n, k)


def nilpotent_homology(n: int, k: int, i: int, j: int | None = None) -> Decomposition:
    """H_i(N_k(n); Q) as a GL_n decomposition; grading slice j or all gradings."""
    _check_lie_caps(n, k, i, j)
    if j is None and i * k > LIMITS.lie_max_grading:
        raise ResourceCapError(
            f"summing H_{i}(N_{k}) needs gradings up to {i * k} > cap "
            f"{LIMITS.lie_max_grading}")
    basis = _nilpotent_basis_cached(n, k)
    gradings = [j] if j is not None else list(range(max(i, 0), i * k + 1))
    total = Decomposition(pt.GL, n, {})
    for g in gradings:
        weights = {}
        for mu in pt.enumerate_partitions(g, max_length=n):
            mu_vec = tuple(mu) + (0,) * (n - len(mu))
            sl = build_chain_slice(basis, i, g, mu_vec)
            if not sl.check_square_zero():
                raise RepstabError(
                    f"d o d != 0 on slice (i={i}, j={g}, mu={mu}); internal error")
            h = sl.homology_dim()
            if h < 0:
                raise RepstabError("negative homology dimension; internal error")
            if h:
                weights[mu] = h
        if weights:
            expansion = symfunc.schur_expand_weights(weights, g, max_length=n)
            piece = Decomposition(pt.GL, n,
                                  {pt.pseudo_canon(lam): c
                                   for lam, c in expansion.items()})
            total = total.add(piece)
    return total


def kostant_two_step_prediction(n: int, i: int) -> dict:
    """Kostant's description of H_i(N_2(n)): self-conjugate shapes, one each.

    The matching statistic is the number of boxes weakly above the main
    diagonal (the on-diagonal boxes count); shapes with more than n rows do
    not occur at rank n.
    """
    out = {}
    for size in range(0, 2 * i + 1):
        for lam in pt.enumerate_partitions(size, max_length=n):
            if pt.is_self_conjugate(lam) and pt.arm_excess(lam) == i:
                out[pt.pseudo_canon(lam)] = 1
    return out


def sp_wedge_decomposition(n: int, i: int) -> Decomposition:
    """wedge^i of the standard Sp_{2n} module: V(1^i) + V(1^{i-2}) + ..."""
    if i > n:
        raise RepstabError(
            f"sp_wedge_decomposition: formula valid only for i <= n, got i={i}, n={n}")
    terms = {}
    size = i
    while size >= 0:
        terms[(1,) * size] = 1
        size -= 2
    return Decomposition(pt.SP, n, terms)


def heisenberg_homology(n: int, i: int) -> Decomposition:
    """H_i(H_{2n+1}; Q) as an Sp_{2n} decomposition."""
    if i > 2 * n + 1 or i < 0:
        raise RepstabError("heisenberg_homology: need 0 <= i <= 2n+1")
    if n > LIMITS.lie_max_n:
        raise ResourceCapError(f"heisenberg cap n <= {LIMITS.lie_max_n}")
    basis = heisenberg_basis(n)
    # the weight alone cuts the complex small enough; only dominant weights
    # are needed since homology is an Sp representation
    weights: dict = {}
    for mu in _dominant_weights_upto(n, i):
        sl = build_chain_slice(basis, i, None, mu)
        if not sl.check_square_zero():
            raise RepstabError("d o d != 0 on Heisenberg slice; internal error")
        h = sl.homology_dim()
        if h:
            weights[mu] = h
    return Decomposition(pt.SP, n, _sp_expand_dominant(weights, n))


def _dominant_weights_upto(n: int, i: int):
    out = []
    for total in range(0, i + 1):
        for mu in pt.enumerate_partitions(total, max_length=n, max_part=i):
            out.append(tuple(mu) + (0,) * (n - len(mu)))
    return out


def _sp_expand_dominant(weights: dict, n: int) -> dict:
    """Solve sum_lam c_lam m_lam(mu) = weights(mu) on the dominant sector."""
    remaining = {k: v for k, v in weights.items() if v}
    out: dict = {}
    while remaining:
        top = max(remaining, key=lambda w: (sum(w), w))
        mult = remaining[top]
        if mult < 0:
            raise RepstabError(f"negative dominant multiplicity at {top}")
        label = pt.partition(top)
        out[label] = mult
        for mu, m in spweights.weight_multiplicities(label, n).items():
            key = tuple(mu) + (0,) * (n - len(mu))
            val = remaining.get(key, 0) - mult * m
            if val:
                remaining[key] = val
            else:
                remaining.pop(key, None)
    return out
