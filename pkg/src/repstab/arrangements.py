"""Orlik-Solomon algebras of the braid (type A) and signed (type B) arrangements.

Monomials are ascending tuples of generator indices with implicit positive
orientation; reordering signs are tracked explicitly.  Straightening onto the
no-broken-circuit basis is a terminating rewriting process: every application
of a circuit relation strictly lowers the index multiset, and the result is
the unique basis expansion because nbc monomials are independent.

Type A uses the Arnold triangle relations directly (generators ordered by
(max, min), so nbc = "all maxima distinct" and every rewrite is a triangle).
Type B runs the generic broken-circuit calculus with circuits found by exact
linear algebra on the defining forms.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from . import partitions as pt
from .characters import ClassFunction, decompose, hyp_classes, sym_classes
from .config import LIMITS
from .decomp import Decomposition
from .errors import RepstabError, ResourceCapError


def _sort_sign(seq):
    """(ascending tuple, sign) for a sequence of distinct items, else (None, 0)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return None, 0
    sign = 1
    # insertion sort; parity of swaps is the permutation sign
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    return tuple(seq), sign


# ---------------------------------------------------------------------------
# Type A: the braid arrangement
# ---------------------------------------------------------------------------

class BraidArrangement:
    """H^*(P_n; Q): generators w_{jk} = w_{kj}, Arnold triangle relations."""

    def __init__(self, n: int):
        self.n = n
        # generator order (k, j): equal maxima sit adjacent once sorted
        self.gens = [(j, k) for k in range(2, n + 1) for j in range(1, k)]
        self.index = {g: i for i, g in enumerate(self.gens)}
        self._memo = {}

    def basis(self, degree: int) -> list:
        """nbc monomials: maxima k_1 < ... < k_i, any j_m < k_m."""
        out = []

        def rec(min_k, chosen):
            if len(chosen) == degree:
                out.append(tuple(chosen))
                return
            for k in range(min_k, self.n + 1):
                for j in range(1, k):
                    chosen.append(self.index[(j, k)])
                    rec(k + 1, chosen)
                    chosen.pop()

        rec(2, [])
        for mono in out:
            assert tuple(sorted(mono)) == mono
        return out

    def straighten(self, mono: tuple) -> dict:
        """Expand an ascending monomial in the nbc basis."""
        cached = self._memo.get(mono)
        if cached is not None:
            return cached
        gens = self.gens
        clash = None
        for p in range(len(mono) - 1):
            if gens[mono[p]][1] == gens[mono[p + 1]][1]:
                clash = p
                break
        if clash is None:
            result = {mono: 1}
        else:
            a, b = mono[clash], mono[clash + 1]
            x, k = gens[a]
            y, _ = gens[b]
            # w_{xk} ^ w_{yk} = w_{xy} ^ w_{yk} - w_{xy} ^ w_{xk}, x < y < k
            c = self.index[(x, y)]
            rest = mono[:clash] + mono[clash + 2:]
            result = {}
            for kept, coeff in ((b, 1), (a, -1)):
                term, sign = _sort_sign(rest + (c, kept))
                if term is None:
                    continue
                for basis_mono, inner in self.straighten(term).items():
                    val = result.get(basis_mono, 0) + coeff * sign * inner
                    if val:
                        result[basis_mono] = val
                    else:
                        result.pop(basis_mono, None)
        self._memo[mono] = result
        return result

    def action_map(self, perm: tuple) -> list:
        """Index map of a permutation (one-line, 1-based) on the generators."""
        out = []
        for (j, k) in self.gens:
            a, b = perm[j - 1], perm[k - 1]
            out.append(self.index[(min(a, b), max(a, b))])
        return out


# ---------------------------------------------------------------------------
# Type B: the signed arrangement z_i = z_j, z_i = -z_j, z_i = 0
# ---------------------------------------------------------------------------

class SignedArrangement:
    """H^*(WP_n; Q): generic Orlik-Solomon straightening over the forms."""

    def __init__(self, n: int):
        self.n = n
        forms = []
        names = []
        for j in range(2, n + 1):
            for i in range(1, j):
                v = [0] * n
                v[i - 1], v[j - 1] = 1, -1
                forms.append(tuple(v))
                names.append(("diff", i, j))
        for j in range(2, n + 1):
            for i in range(1, j):
                v = [0] * n
                v[i - 1], v[j - 1] = 1, 1
                forms.append(tuple(v))
                names.append(("sum", i, j))
        for i in range(1, n + 1):
            v = [0] * n
            v[i - 1] = 1
            forms.append(tuple(v))
            names.append(("coord", i))
        self.forms = forms
        self.names = names
        self.index = {f: i for i, f in enumerate(forms)}
        self._memo = {}
        self._rank_memo = {}

    # -- exact linear algebra on the forms -----------------------------------

    def _rank(self, ids: frozenset) -> int:
        cached = self._rank_memo.get(ids)
        if cached is not None:
            return cached
        rows = [list(map(Fraction, self.forms[i])) for i in sorted(ids)]
        rank = 0
        for col in range(self.n):
            pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            pv = rows[rank][col]
            for r in range(rank + 1, len(rows)):
                if rows[r][col]:
                    f = rows[r][col] / pv
                    for c2 in range(col, self.n):
                        rows[r][c2] -= f * rows[rank][c2]
            rank += 1
        self._rank_memo[ids] = rank
        return rank

    def _fundamental_circuit(self, base: tuple, extra: int) -> tuple:
        """The unique circuit in base + {extra} (base independent, extra in closure)."""
        cols = list(base)
        mat = [[Fraction(self.forms[c][r]) for c in cols] for r in range(self.n)]
        rhs = [Fraction(self.forms[extra][r]) for r in range(self.n)]
        # solve mat * x = rhs
        m, k = self.n, len(cols)
        piv_rows = []
        row = 0
        for col in range(k):
            pivot = next((r for r in range(row, m) if mat[r][col]), None)
            if pivot is None:
                raise RepstabError("fundamental_circuit: dependent base")
            mat[row], mat[pivot] = mat[pivot], mat[row]
            rhs[row], rhs[pivot] = rhs[pivot], rhs[row]
            pv = mat[row][col]
            for r in range(m):
                if r != row and mat[r][col]:
                    f = mat[r][col] / pv
                    for c2 in range(k):
                        mat[r][c2] -= f * mat[row][c2]
                    rhs[r] -= f * rhs[row]
            piv_rows.append(row)
            row += 1
        xs = [rhs[piv_rows[c]] / mat[piv_rows[c]][c] for c in range(k)]
        support = {cols[c] for c in range(k) if xs[c]}
        support.add(extra)
        return tuple(sorted(support))

    def _broken_circuit(self, mono: tuple):
        """Return a circuit C (ascending) with min(C) absent and the rest in mono."""
        s = frozenset(mono)
        rk = len(mono)
        for h in range(mono[-1]):
            if h in s:
                continue
            if self._rank(s | {h}) == rk:
                circuit = self._fundamental_circuit(mono, h)
                if circuit[0] == h:
                    return circuit
        return None

    # -- straightening --------------------------------------------------------

    def straighten(self, mono: tuple) -> dict:
        cached = self._memo.get(mono)
        if cached is not None:
            return cached
        if self._rank(frozenset(mono)) < len(mono):
            result: dict = {}
        else:
            circuit = self._broken_circuit(mono)
            if circuit is None:
                result = {mono: 1}
            else:
                result = {}
                h = circuit[0]
                rest = tuple(x for x in mono if x not in circuit)
                # sum_j (-1)^j e_{C \ c_j} = 0  =>  e_{C \ c_0} = sum_{j>=1} (-1)^{j+1} e_{C \ c_j}
                broken = circuit[1:]
                _, eps = _sort_sign(broken + rest)
                for j in range(1, len(circuit)):
                    sub = circuit[:j] + circuit[j + 1:]
                    term, sign_j = _sort_sign(sub + rest)
                    if term is None:
                        continue
                    coeff = eps * ((-1) ** (j + 1)) * sign_j
                    for basis_mono, inner in self.straighten(term).items():
                        val = result.get(basis_mono, 0) + coeff * inner
                        if val:
                            result[basis_mono] = val
                        else:
                            result.pop(basis_mono, None)
        self._memo[mono] = result
        return result

    def basis(self, degree: int) -> list:
        out = []
        m = len(self.forms)

        def is_nbc(candidate: tuple) -> bool:
            if self._rank(frozenset(candidate)) < len(candidate):
                return False
            return self._broken_circuit(candidate) is None

        def rec(start, chosen):
            if len(chosen) == degree:
                out.append(tuple(chosen))
                return
            for h in range(start, m):
                chosen.append(h)
                if is_nbc(tuple(chosen)):
                    rec(h + 1, chosen)
                chosen.pop()

        rec(0, [])
        return out

    def action_map(self, perm: tuple, signs: tuple) -> list:
        """Index map of a signed permutation on the hyperplanes.

        The element sends e_i to signs[i] * e_{perm[i]} (1-based perm); a
        defining form maps to (g f)_{perm[i]} = signs[i] f_i, then is
        normalized (overall sign is immaterial for the hyperplane).
        """
        out = []
        for f in self.forms:
            img = [0] * self.n
            for i in range(self.n):
                img[perm[i] - 1] = signs[i] * f[i]
            lead = next(x for x in img if x)
            if lead < 0:
                img = [-x for x in img]
            out.append(self.index[tuple(img)])
        return out


# ---------------------------------------------------------------------------
# Slices, characters, decompositions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _arrangement(kind: str, n: int):
    if kind == "A":
        return BraidArrangement(n)
    if kind == "B":
        return SignedArrangement(n)
    raise RepstabError(f"unknown arrangement kind {kind!r}")


class OSAlgebraSlice:
    """Degree-i piece of the Orlik-Solomon algebra with its nbc basis."""

    def __init__(self, kind: str, n: int, degree: int):
        _check_caps(kind, n, degree)
        self.kind, self.n, self.degree = kind, n, degree
        self.arrangement = _arrangement(kind, n)
        self.nbc = self.arrangement.basis(degree)
        self.position = {mono: i for i, mono in enumerate(self.nbc)}

    def dim(self) -> int:
        return len(self.nbc)

    def straighten(self, mono) -> dict:
        term, sign = _sort_sign(mono)
        if term is None:
            return {}
        expansion = self.arrangement.straighten(term)
        return expansion if sign == 1 else {m: -c for m, c in expansion.items()}


def _check_caps(kind, n, degree):
    if n < 1:
        raise RepstabError("rank must be positive")
    hi = n - 1 if kind == "A" else n
    if not 0 <= degree <= hi:
        raise RepstabError(
            f"degree {degree} out of range 0..{hi} for type {kind} at n={n}")
    if n > LIMITS.braid_max_n or degree > LIMITS.braid_max_degree:
        raise ResourceCapError(
            f"arrangement slice ({kind}, n={n}, i={degree}) exceeds caps "
            f"n <= {LIMITS.braid_max_n}, i <= {LIMITS.braid_max_degree}")


@lru_cache(maxsize=None)
def nbc_basis(kind: str, n: int, degree: int) -> OSAlgebraSlice:
    return OSAlgebraSlice(kind, n, degree)


def _sym_class_rep(rho: tuple, n: int) -> tuple:
    """A permutation (one-line, 1-based) with cycle type rho."""
    perm = list(range(1, n + 1))
    start = 0
    for part in rho:
        for idx in range(part):
            perm[start + idx] = start + 1 + (idx + 1) % part
        start += part
    return tuple(perm)


def _hyp_class_rep(cls, n: int):
    """(perm, signs) with positive cycles alpha and negative cycles beta."""
    alpha, beta = cls
    perm = list(range(1, n + 1))
    signs = [1] * n
    start = 0
    for part in alpha:
        for idx in range(part):
            perm[start + idx] = start + 1 + (idx + 1) % part
        start += part
    for part in beta:
        for idx in range(part):
            perm[start + idx] = start + 1 + (idx + 1) % part
        signs[start] = -1
        start += part
    return tuple(perm), tuple(signs)


def _trace(slice_: OSAlgebraSlice, index_map: list) -> int:
    total = 0
    for mono in slice_.nbc:
        image = tuple(index_map[g] for g in mono)
        term, sign = _sort_sign(image)
        if term is None:
            continue
        total += sign * slice_.arrangement.straighten(term).get(mono, 0)
    return total


def braid_character(kind: str, n: int, degree: int) -> ClassFunction:
    """Character of S_n (type A) or W_n (type B) on the degree-i slice."""
    slice_ = nbc_basis(kind, n, degree)
    if kind == "A":
        values = {}
        for rho in sym_classes(n):
            perm = _sym_class_rep(rho, n)
            values[rho] = _trace(slice_, slice_.arrangement.action_map(perm))
        return ClassFunction(pt.SYM, n, values)
    values = {}
    for cls in hyp_classes(n):
        perm, signs = _hyp_class_rep(cls, n)
        values[cls] = _trace(slice_, slice_.arrangement.action_map(perm, signs))
    return ClassFunction(pt.HYP, n, values)


@lru_cache(maxsize=None)
def braid_decomposition(kind: str, n: int, degree: int) -> Decomposition:
    """Irreducible decomposition of H^i in unpadded coordinates."""
    return decompose(braid_character(kind, n, degree)).unpadded()


def twisted_braid_betti(n: int, degree: int, lam: tuple) -> int:
    """dim H_i(B_n; V(lam)_n): the multiplicity of lam in H^i(P_n; Q)."""
    if not pt.pad_valid(lam, n):
        raise RepstabError(f"label {lam} invalid at rank {n}")
    if degree > n - 1:
        return 0  # H^i(P_n) vanishes above the top degree n-1
    return braid_decomposition("A", n, degree).terms.get(tuple(lam), 0)
