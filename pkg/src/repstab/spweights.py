"""Weight multiplicities for Sp_{2n} (type C_n) via the Freudenthal recursion.

Weights live in Z^n in the L_i coordinates; dominant means weakly decreasing
and nonnegative.  The Weyl group acts by permutations and sign flips, so the
dominant representative of any weight is its absolute values sorted
descending.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import RepstabError


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple:
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i], e[j] = 1, -1
            roots.append(tuple(e))
            e2 = [0] * n
            e2[i], e2[j] = 1, 1
            roots.append(tuple(e2))
    for i in range(n):
        e = [0] * n
        e[i] = 2
        roots.append(tuple(e))
    return tuple(roots)


def weyl_vector(n: int) -> tuple:
    return tuple(range(n, 0, -1))


def dominant_rep(vec) -> tuple:
    return tuple(sorted((abs(x) for x in vec), reverse=True))


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def weight_leq(mu: tuple, lam: tuple) -> bool:
    """Dominant mu below lam in the type-C root order."""
    if (sum(lam) - sum(mu)) % 2:
        return False
    total = 0
    for i in range(len(lam)):
        total += lam[i] - (mu[i] if i < len(mu) else 0)
        if total < 0:
            return False
    return True


@lru_cache(maxsize=None)
def weight_multiplicities(lam: tuple, n: int) -> dict:
    """Dominant-sector weight multiplicities of the Sp_{2n} irreducible V(lam)."""
    if len(lam) > n:
        raise RepstabError(f"Sp label {lam} needs rank >= {len(lam)}")
    lam_vec = tuple(lam) + (0,) * (n - len(lam))
    rho = weyl_vector(n)
    lam_rho = tuple(a + b for a, b in zip(lam_vec, rho))
    norm_top = _dot(lam_rho, lam_rho)
    roots = positive_roots(n)
    memo: dict = {lam_vec: 1}

    def mult(mu_vec: tuple) -> int:
        mu_dom = dominant_rep(mu_vec)
        if mu_dom in memo:
            return memo[mu_dom]
        if not weight_leq(mu_dom, lam_vec):
            memo[mu_dom] = 0
            return 0
        num = 0
        for alpha in roots:
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu_dom, alpha))
                if sum(abs(x) for x in nu) > sum(lam) + 2 * n * (lam[0] if lam else 0):
                    break
                m_nu = mult(nu)
                if m_nu:
                    num += m_nu * _dot(nu, alpha)
                # once dominant rep exceeds lam in every sense we can stop
                if max(abs(x) for x in nu) > (lam[0] if lam else 0):
                    break
                k += 1
        mu_rho = tuple(a + b for a, b in zip(mu_dom, rho))
        denom = norm_top - _dot(mu_rho, mu_rho)
        if denom <= 0:
            memo[mu_dom] = 0
            return 0
        val = Fraction(2 * num, denom)
        if val.denominator != 1:
            raise RepstabError(f"Freudenthal produced non-integer at {mu_dom}: {val}")
        memo[mu_dom] = int(val)
        return memo[mu_dom]

    # touch every dominant weight below lam
    for mu in _dominant_below(lam_vec):
        mult(mu)
    return {k: v for k, v in memo.items() if v}


def _dominant_below(lam_vec: tuple):
    """All dominant integer vectors mu <= lam in the root order."""
    n = len(lam_vec)
    top = lam_vec[0] if lam_vec else 0
    out = []

    def rec(i, prev, prefix):
        if i == n:
            if weight_leq(tuple(prefix), lam_vec):
                out.append(tuple(prefix))
            return
        for v in range(min(prev, top), -1, -1):
            prefix.append(v)
            # prune: partial sums must not exceed lam's
            if sum(prefix) <= sum(lam_vec[: i + 1]):
                rec(i + 1, v, prefix)
            prefix.pop()

    rec(0, top, [])
    return out


def orbit_size(mu_dom: tuple, n: int) -> int:
    """Size of the Weyl orbit (signed permutations) of a dominant weight."""
    full = tuple(mu_dom) + (0,) * (n - len(mu_dom))
    zeros = full.count(0)
    denom = factorial(zeros)
    for v in set(x for x in full if x):
        denom *= factorial(full.count(v))
    return factorial(n) // denom * 2 ** (n - zeros)


def full_weight_multiset(lam: tuple, n: int) -> dict:
    """Every weight of V(lam) with multiplicity (all Weyl translates)."""
    out: dict = {}
    for mu_dom, m in weight_multiplicities(lam, n).items():
        full = tuple(mu_dom) + (0,) * (n - len(mu_dom))
        seen = set()
        for perm in itertools.permutations(full):
            if perm in seen:
                continue
            seen.add(perm)
            nz = [i for i, x in enumerate(perm) if x]
            for signs in itertools.product((1, -1), repeat=len(nz)):
                w = list(perm)
                for i, s in zip(nz, signs):
                    w[i] *= s
                key = tuple(w)
                out[key] = out.get(key, 0) + m
    return out


def dim_from_weights(lam: tuple, n: int) -> int:
    return sum(m * orbit_size(mu, n)
               for mu, m in weight_multiplicities(lam, n).items())
