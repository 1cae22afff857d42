"""Tableau statistics and the multiplicity theorems they control.

Standard tableaux are enumerated by corner removal (place n, then n-1, ...),
which keeps the stabilization arguments visible: row data is all the
statistics need.  Multiplicities in coinvariant algebras count tableaux by
major index (type A) and flag major index (type B); equivariant Schubert and
rank-selected Lefschetz multiplicities reduce to the same counts plus Bruhat
comparisons by the rank-matrix criterion.

Flag descent convention: the minus diagram sits above the padded plus
diagram; j < n is a flag descent when j+1 lies strictly lower, and n is a
flag descent exactly when n lies in the minus diagram.  The flag major index
is 2 * (sum of flag descents below n) + |minus|; the membership of n carries
no summand of its own (it is recorded by the |minus| term), which is the
normalization that reproduces the W_n coinvariant Hilbert series.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import partitions as pt
from .errors import RepstabError, ValidityBoundError


# ---------------------------------------------------------------------------
# Standard Young tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StandardTableau:
    shape: tuple
    rows: tuple  # rows[x-1] = row index (0-based) of the box labeled x

    def descent_set(self) -> frozenset:
        n = len(self.rows)
        return frozenset(j for j in range(1, n)
                         if self.rows[j] > self.rows[j - 1])

    def maj(self) -> int:
        return sum(self.descent_set())


def syt_iter(shape: tuple):
    """All standard tableaux of the given shape, by corner removal."""
    shape = pt.partition(shape)

    def rec(current):
        if not current:
            yield []
            return
        for r in range(len(current)):
            if r == len(current) - 1 or current[r] > current[r + 1]:
                smaller = pt.partition(current[:r] + (current[r] - 1,)
                                       + current[r + 1:])
                for rest in rec(smaller):
                    rest.append(r)
                    yield rest
                    rest.pop()

    for rows in rec(shape):
        yield StandardTableau(shape, tuple(rows))


@lru_cache(maxsize=None)
def descent_histogram(shape: tuple) -> dict:
    """descent set (sorted tuple) -> number of SYT of the shape."""
    out: dict = {}
    count = 0
    for t in syt_iter(shape):
        key = tuple(sorted(t.descent_set()))
        out[key] = out.get(key, 0) + 1
        count += 1
    if count != pt.syt_count(shape):
        raise RepstabError(f"SYT enumeration mismatch for {shape}")
    return out


@lru_cache(maxsize=None)
def maj_histogram(shape: tuple) -> dict:
    out: dict = {}
    for descents, c in descent_histogram(shape).items():
        m = sum(descents)
        out[m] = out.get(m, 0) + c
    return out


# ---------------------------------------------------------------------------
# Type A coinvariant algebra (Kraskiewicz-Weyman) and its character oracle
# ---------------------------------------------------------------------------

def coinv_mult(lam: tuple, n: int, degree: int) -> int:
    """Multiplicity of V(lam)_n in the degree-i piece of the coinvariant
    algebra: standard tableaux of shape lam[n] with major index i."""
    if degree > n * (n - 1) // 2:
        raise ValidityBoundError(
            f"coinv_mult: theorem valid only for i <= C(n,2) = {n*(n-1)//2}")
    shape = pt.pad(lam, n)
    return maj_histogram(shape).get(degree, 0)


def _poly_series_coeffs(n: int, cycle_type: tuple, upto: int) -> list:
    """Coefficients of prod_j (1 - q^j) / prod_c (1 - q^{l(c)}) up to q^upto."""
    coeffs = [0] * (upto + 1)
    coeffs[0] = 1
    for j in range(1, n + 1):  # multiply by (1 - q^j)
        for d in range(upto, j - 1, -1):
            coeffs[d] -= coeffs[d - j]
    for part in cycle_type:  # divide by (1 - q^part)
        for d in range(part, upto + 1):
            coeffs[d] += coeffs[d - part]
    return coeffs


def coinv_graded_character(rho: tuple, degree: int) -> int:
    """Trace of the class rho on R_i, from the graded trace series."""
    n = sum(rho)
    return _poly_series_coeffs(n, rho, degree)[degree]


# ---------------------------------------------------------------------------
# Type B coinvariant algebra (Stembridge)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _double_descent_histogram(plus_shape: tuple, minus_shape: tuple) -> dict:
    """(flag descent set, n in minus) histogram over double tableaux.

    Returns {(descents tuple, minus_size): count} where descents lists the
    full flag descent set (n included when it lies in the minus diagram).
    """
    n = sum(plus_shape) + sum(minus_shape)
    k = sum(minus_shape)
    minus_rows = [t.rows for t in syt_iter(minus_shape)] if minus_shape else [()]
    plus_rows = [t.rows for t in syt_iter(plus_shape)] if plus_shape else [()]
    offset = len(minus_shape)
    out: dict = {}
    for subset in itertools.combinations(range(1, n + 1), k):
        comp = [x for x in range(1, n + 1) if x not in subset]
        for mrows in minus_rows:
            for prows in plus_rows:
                row = [0] * (n + 1)
                for pos, x in enumerate(subset):
                    row[x] = mrows[pos]
                for pos, x in enumerate(comp):
                    row[x] = offset + prows[pos]
                descents = [j for j in range(1, n) if row[j + 1] > row[j]]
                if n in subset:
                    descents.append(n)
                key = tuple(descents)
                out[key] = out.get(key, 0) + 1
    return out


def flag_major_index(descents, minus_size: int, n: int) -> int:
    """2 * (sum of descents below n) + |minus|."""
    return 2 * sum(j for j in descents if j < n) + minus_size


def coinv_b_mult(label: tuple, n: int, degree: int) -> int:
    """Multiplicity of V(label)_n in the degree-i piece of the W_n
    coinvariant algebra: double tableaux of shape label[n] with flag major
    index i (valid while n^2 >= i)."""
    if degree > n * n:
        raise ValidityBoundError(
            f"coinv_b_mult: theorem valid only for i <= n^2 = {n*n}")
    plus_padded, minus = pt.pad_double(label, n)
    hist = _double_descent_histogram(plus_padded, minus)
    k = sum(minus)
    return sum(c for d, c in hist.items()
               if flag_major_index(d, k, n) == degree)


# ---------------------------------------------------------------------------
# Homogeneous polynomial modules
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bounded_partition_count(k: int, max_part: int) -> int:
    """Number of partitions of k with every part <= max_part."""
    if k == 0:
        return 1
    return len(pt.enumerate_partitions(k, max_part=max_part))


def poly_mult(lam: tuple, n: int, degree: int) -> int:
    """Multiplicity of V(lam)_n in degree-i homogeneous polynomials."""
    total = 0
    for j in range(degree + 1):
        c = coinv_mult(lam, n, j)
        if c:
            total += c * _bounded_partition_count(degree - j, n)
    return total


# ---------------------------------------------------------------------------
# Bruhat order and equivariant Schubert multiplicities
# ---------------------------------------------------------------------------

def perm_length(w: tuple) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
               if w[i] > w[j])


def _pad_perm(w: tuple, m: int) -> tuple:
    return tuple(w) + tuple(range(len(w) + 1, m + 1))


def bruhat_leq(v: tuple, w: tuple) -> bool:
    """v <= w in Bruhat order, by rank-matrix dominance.

    Permutations of different sizes are compared after appending fixed
    points (Bruhat order is stable under the inclusions S_n < S_{n+1}).
    """
    m = max(len(v), len(w))
    v, w = _pad_perm(v, m), _pad_perm(w, m)
    rv = [0] * (m + 1)
    rw = [0] * (m + 1)
    for i in range(m):
        # rank counts r(i, j) = #{a <= i : perm(a) <= j}, updated row by row
        for j in range(v[i], m + 1):
            rv[j] += 1
        for j in range(w[i], m + 1):
            rw[j] += 1
        if any(rv[j] < rw[j] for j in range(1, m + 1)):
            return False
    return True


@lru_cache(maxsize=None)
def bruhat_lower_set(w: tuple) -> tuple:
    """All v in S_m with v <= w, m = len(w)."""
    m = len(w)
    return tuple(v for v in itertools.permutations(range(1, m + 1))
                 if bruhat_leq(v, w))


def schubert_equivariant_mult(w: tuple, n: int, degree: int, lam: tuple) -> int:
    """Multiplicity of V(lam)_n in H^{2*degree}_T(X_w): Tymoczko's formula
    summed over the Bruhat interval below w (independent of n >= len(w))."""
    if len(w) > n:
        raise RepstabError(f"permutation {w} needs n >= {len(w)}")
    total = 0
    for v in bruhat_lower_set(tuple(w)):
        shift = degree - perm_length(v)
        if shift >= 0:
            total += poly_mult(lam, n, shift)
    return total


def schubert_betti(w: tuple, degree: int) -> int:
    """Ordinary Betti number of X_w: #{v <= w : l(v) = degree}."""
    return sum(1 for v in bruhat_lower_set(tuple(w))
               if perm_length(v) == degree)


# ---------------------------------------------------------------------------
# Rank-selected Lefschetz representations
# ---------------------------------------------------------------------------

def lefschetz_rank_selected(selected: frozenset, n: int, lam: tuple,
                            raw: bool = False) -> int:
    """Multiplicity of V(lam)_n in (-1)^{|S|-1} (L_n(S) + Q): standard
    tableaux of shape lam[n] with descent set exactly S intersect {1..n-1}.

    With raw=True, the multiplicity in the alternating sum L_n(S) itself.
    """
    target = tuple(sorted(j for j in selected if 1 <= j <= n - 1))
    shape = pt.pad(lam, n)
    count = descent_histogram(shape).get(target, 0)
    if not raw:
        return count
    sign = (-1) ** (len(set(selected)) - 1)
    return sign * count - (1 if lam == () else 0)


def cross_polytope_lefschetz(selected: frozenset, n: int, label: tuple,
                             raw: bool = False) -> int:
    """Type-B analogue over double tableaux and flag descent sets."""
    target = tuple(sorted(j for j in selected if 1 <= j <= n - 1))
    plus_padded, minus = pt.pad_double(label, n)
    hist = _double_descent_histogram(plus_padded, minus)
    count = sum(c for d, c in hist.items() if d == target)
    if not raw:
        return count
    sign = (-1) ** (len(set(selected)) - 1)
    return sign * count - (1 if label == ((), ()) else 0)


# ---------------------------------------------------------------------------
# Full-degree decompositions (used by the CLI)
# ---------------------------------------------------------------------------

def valid_cores(n: int):
    """All unpadded partitions lam with lam[n] defined."""
    for size in range(n + 1):
        for lam in pt.enumerate_partitions(size):
            if pt.pad_valid(lam, n):
                yield lam


def valid_double_cores(n: int):
    for size in range(n + 1):
        for k in range(size + 1):
            for plus in pt.enumerate_partitions(k):
                for minus in pt.enumerate_partitions(size - k):
                    if pt.pad_double_valid((plus, minus), n):
                        yield (plus, minus)
