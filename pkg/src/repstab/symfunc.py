"""Schur-basis symmetric function kernels: LR rule, Kostka numbers, plethysm.

Littlewood-Richardson coefficients are computed by direct enumeration of
lattice-word skew fillings (column strict, content fixed), memoized per
(inner, content) pair.  Plethysm goes through the power-sum basis, where
p_k o p_m = p_{km} extends algebraically; every intermediate rational must
clear to an integer on the way back to the Schur basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import partitions as pt
from .config import LIMITS
from .errors import RepstabError, ResourceCapError

SchurVector = dict  # Partition -> int, no zero entries


# ---------------------------------------------------------------------------
# Littlewood-Richardson by skew-filling enumeration
# ---------------------------------------------------------------------------

def _skew_cells(outer, inner):
    """Cells of outer/inner in row order; each row listed right-to-left."""
    cells = []
    for r, row_len in enumerate(outer):
        lo = inner[r] if r < len(inner) else 0
        if lo > row_len:
            return None
        for c in range(row_len - 1, lo - 1, -1):
            cells.append((r, c))
    return cells


def _count_lr_fillings(outer, inner, content=None, collect=None):
    """Count LR fillings of outer/inner; content fixes the letter counts.

    When `collect` is a dict, every filling's content is tallied there
    instead of counting against a fixed content.
    """
    cells = _skew_cells(outer, inner)
    if cells is None:
        return 0
    max_letter = len(content) if content is not None else len(cells)
    used = [0] * (max_letter + 1)
    grid = {}
    total = 0

    def rec(idx):
        nonlocal total
        if idx == len(cells):
            if collect is not None:
                key = tuple(used[1:])
                while key and key[-1] == 0:
                    key = key[:-1]
                collect[key] = collect.get(key, 0) + 1
            else:
                total += 1
            return
        r, c = cells[idx]
        right = grid.get((r, c + 1))
        above = grid.get((r - 1, c))
        hi = right if right is not None else max_letter
        for v in range(1, hi + 1):
            if content is not None and used[v] >= content[v - 1]:
                continue
            if above is not None and v <= above:
                continue
            # lattice word: after this letter, #v <= #(v-1)
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            used[v] += 1
            grid[(r, c)] = v
            rec(idx + 1)
            del grid[(r, c)]
            used[v] -= 1

    rec(0)
    return total


@lru_cache(maxsize=None)
def lr(lam: tuple, mu: tuple) -> SchurVector:
    """Expand s_lam * s_mu in the Schur basis: nu -> C^nu_{lam,mu}."""
    lam, mu = tuple(lam), tuple(mu)
    if not lam:
        return {mu: 1}
    if not mu:
        return {lam: 1}
    if sum(mu) > sum(lam):
        # enumerate against the smaller content for speed; lr is symmetric
        return lr(mu, lam)
    total = sum(lam) + sum(mu)
    out = {}
    for nu in pt.enumerate_partitions(total, max_length=len(lam) + len(mu)):
        if nu[0] > lam[0] + mu[0]:
            continue
        if len(nu) < len(lam) or any(nu[i] < lam[i] for i in range(len(lam))):
            continue
        c = _count_lr_fillings(nu, lam, content=mu)
        if c:
            out[nu] = c
    return out


def lr_coefficient(nu: tuple, lam: tuple, mu: tuple) -> int:
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    return lr(lam, mu).get(tuple(nu), 0)


@lru_cache(maxsize=None)
def skew_expand(outer: tuple, inner: tuple) -> SchurVector:
    """Expand the skew Schur function s_{outer/inner}: sigma -> C^outer_{inner,sigma}."""
    if any(inner[i] > outer[i] for i in range(len(inner))) or len(inner) > len(outer):
        return {}
    contents: dict = {}
    _count_lr_fillings(outer, inner, content=None, collect=contents)
    return {pt.partition(k): v for k, v in contents.items()}


def subpartitions(lam: tuple):
    """All partitions contained in lam (componentwise)."""
    out = [()]
    lam = tuple(lam)

    def rec(row, cap, prefix):
        if row == len(lam):
            return
        for part in range(min(cap, lam[row]), 0, -1):
            cur = prefix + (part,)
            out.append(cur)
            rec(row + 1, part, cur)

    rec(0, lam[0] if lam else 0, ())
    return out


# ---------------------------------------------------------------------------
# Kostka numbers by horizontal-strip recursion
# ---------------------------------------------------------------------------

def _horizontal_strip_removals(lam, k):
    """Partitions mu <= lam with lam/mu a horizontal strip of size k."""
    lam = tuple(lam)
    results = []

    def rec(i, remaining, prefix):
        if i == len(lam):
            if remaining == 0:
                results.append(pt.partition(prefix))
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        hi = lam[i]
        if i > 0:
            hi = min(hi, prefix[-1])
        for val in range(hi, lo - 1, -1):
            removed = lam[i] - val
            if removed > remaining:
                continue
            prefix.append(val)
            rec(i + 1, remaining - removed, prefix)
            prefix.pop()

    rec(0, k, [])
    return results


@lru_cache(maxsize=None)
def kostka(lam: tuple, mu: tuple) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise RepstabError(f"kostka: size mismatch {lam} vs {mu}")
    if not lam:
        return 1
    if not pt.dominates(lam, mu):
        return 0
    total = 0
    for smaller in _horizontal_strip_removals(lam, mu[-1]):
        total += kostka(smaller, mu[:-1])
    return total


# ---------------------------------------------------------------------------
# Power-sum engine and plethysm
# ---------------------------------------------------------------------------

def _merge_sorted(rho, sigma):
    return tuple(sorted(rho + sigma, reverse=True))


@lru_cache(maxsize=None)
def schur_to_powersum(lam: tuple) -> tuple:
    """s_lam = sum_rho chi_lam(rho)/z_rho p_rho, returned as a tuple of items."""
    from .characters import character_sym
    d = sum(lam)
    items = []
    for rho in pt.enumerate_partitions(d):
        chi = character_sym(lam, rho)
        if chi:
            items.append((rho, Fraction(chi, pt.z_factor(rho))))
    return tuple(items)


def powersum_to_schur(pvec: dict, degree: int) -> SchurVector:
    """Convert sum c_rho p_rho (degree-homogeneous) to the Schur basis."""
    from .characters import character_sym
    out = {}
    for nu in pt.enumerate_partitions(degree):
        coeff = Fraction(0)
        for rho, c in pvec.items():
            chi = character_sym(nu, rho)
            if chi:
                coeff += c * chi
        if coeff:
            if coeff.denominator != 1:
                raise RepstabError(
                    f"powersum_to_schur: non-integral Schur coefficient at {nu}: {coeff}")
            out[nu] = int(coeff)
    return out


def _p_multiply(f: dict, g: dict) -> dict:
    out: dict = {}
    for rho, a in f.items():
        for sigma, b in g.items():
            key = _merge_sorted(rho, sigma)
            out[key] = out.get(key, 0) + a * b
    return {k: v for k, v in out.items() if v}


def _p_pleth_single(k: int, g: dict) -> dict:
    """p_k o g for g written in the power-sum basis with rational coefficients."""
    return {tuple(k * part for part in rho): c for rho, c in g.items()}


def plethysm(lam: tuple, mu: tuple) -> SchurVector:
    """Plethysm coefficients: nu -> M^nu_{lam,mu} with |nu| = |lam|*|mu|."""
    lam, mu = tuple(lam), tuple(mu)
    if not lam:
        # the empty Schur functor is the constant Q
        return {(): 1}
    if not mu:
        # S_lam of the trivial one-dimensional module: Q iff lam has one row
        return {(): 1} if len(lam) <= 1 else {}
    degree = sum(lam) * sum(mu)
    if degree > LIMITS.plethysm_degree_cap:
        raise ResourceCapError(
            f"plethysm degree {degree} exceeds cap {LIMITS.plethysm_degree_cap}")
    if lam == (1,):
        return {mu: 1}
    g = dict(schur_to_powersum(mu))
    result: dict = {}
    for rho, c in schur_to_powersum(lam):
        term = {(): Fraction(1)}
        for part in rho:
            term = _p_multiply(term, _p_pleth_single(part, g))
        for key, val in term.items():
            result[key] = result.get(key, 0) + c * val
    result = {k: v for k, v in result.items() if v}
    out = powersum_to_schur(result, degree)
    if any(v < 0 for v in out.values()):
        raise RepstabError(f"plethysm produced a negative coefficient: {out}")
    return out


# ---------------------------------------------------------------------------
# Weight-multiplicity data -> Schur multiplicities (Kostka back-substitution)
# ---------------------------------------------------------------------------

def schur_expand_weights(weights: dict, degree: int,
                         max_length: int | None = None) -> SchurVector:
    """Solve sum_lam c_lam K_{lam,mu} = weights(mu) along decreasing lex order.

    `weights` maps partitions of `degree` (the dominant sector of a genuine
    polynomial module's weight system) to multiplicities.  For a module in
    n variables pass max_length=n: labels with more rows cannot occur and the
    weight function is undefined past n parts.  A negative c_lam during
    back-substitution means the input was not a module's weight system.
    """
    weights = {pt.partition(k): v for k, v in weights.items()}
    if any(sum(k) != degree for k in weights):
        raise RepstabError("schur_expand_weights: weight of wrong degree")
    if max_length is not None and any(len(k) > max_length for k in weights):
        raise RepstabError(
            f"schur_expand_weights: weight with more than {max_length} parts")
    out: SchurVector = {}
    for lam in pt.enumerate_partitions(degree, max_length=max_length):
        c = weights.get(lam, 0)
        for kappa, mult in out.items():
            c -= mult * kostka(kappa, lam)
        if c:
            if c < 0:
                raise RepstabError(
                    f"schur_expand_weights: negative multiplicity {c} at {lam}; "
                    "input is not the weight system of a module")
            out[lam] = c
    return out
