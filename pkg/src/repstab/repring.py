"""The representation rings of GL_n, SL_n, and Sp_{2n} as executable operations.

GL labels are rank-free canonical pseudo-partitions (all zeros stripped);
at rank n a label renders as (positives, 0...0, negatives).  Tensor products
reduce to Littlewood-Richardson data after splitting off the determinant
twist; the symplectic product is the triple-LR sum; branching and restriction
follow the classical interleaving / even-multiplicity rules.  Division is lex
peeling: the lex-largest constituent of a product is the sum of the factors'
lex-largest labels, with multiplicity one.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import partitions as pt
from . import spweights
from . import symfunc
from .decomp import Decomposition
from .errors import (FamilyMismatchError, NotDivisibleError, RepstabError)

MixedLabel = tuple  # (lam, mu) pair of partitions


# ---------------------------------------------------------------------------
# Dimensions
# ---------------------------------------------------------------------------

def dim_gl(label: tuple, n: int) -> int:
    """Weyl dimension formula for GL_n at a (canonical) pseudo-partition."""
    a = pt.pseudo_at_rank(tuple(label), n)
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= a[i] - a[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def dim_sp(lam: tuple, n: int) -> int:
    """Weyl dimension formula for Sp_{2n} (type C_n)."""
    lam = tuple(lam)
    if len(lam) > n:
        raise RepstabError(f"Sp label {lam} invalid at rank {n}")
    l = [(lam[i] if i < len(lam) else 0) + n - i for i in range(n)]
    m = [n - i for i in range(n)]
    num = den = 1
    for i in range(n):
        num *= l[i]
        den *= m[i]
        for j in range(i + 1, n):
            num *= (l[i] - l[j]) * (l[i] + l[j])
            den *= (m[i] - m[j]) * (m[i] + m[j])
    assert num % den == 0
    return num // den


def dim_label(family: str, label, n: int, padded: bool = True) -> int:
    if family == pt.SYM:
        full = label if padded else pt.pad(label, n)
        return pt.syt_count(full)
    if family == pt.HYP:
        from .characters import dim_hyp
        full = label if padded else pt.pad_double(label, n)
        return dim_hyp(full)
    if family in (pt.GL, pt.SL):
        return dim_gl(label, n)
    if family == pt.SP:
        return dim_sp(label, n)
    raise RepstabError(f"unknown family {family}")


# ---------------------------------------------------------------------------
# Tensor products
# ---------------------------------------------------------------------------

def _gl_twist_split(label: tuple, n: int):
    """(partition part, determinant power) of a GL label at rank n."""
    vec = pt.pseudo_at_rank(tuple(label), n)
    ell = vec[-1]
    return pt.partition(x - ell for x in vec), ell


def _gl_label(bar: tuple, ell: int, n: int) -> tuple:
    vec = tuple(bar) + (0,) * (n - len(bar))
    return pt.pseudo_canon(tuple(x + ell for x in vec))


def tensor_gl(a: tuple, b: tuple, n: int) -> Decomposition:
    """V(a)_n tensor V(b)_n over GL_n; labels with > n rows are discarded."""
    abar, la = _gl_twist_split(a, n)
    bbar, lb = _gl_twist_split(b, n)
    terms = {}
    for nu, c in symfunc.lr(abar, bbar).items():
        if len(nu) <= n:
            terms[_gl_label(nu, la + lb, n)] = c
    return Decomposition(pt.GL, n, terms)


def _sl_normalize(nu: tuple, n: int):
    """Project a partition label into SL_n coordinates (last part zeroed)."""
    if len(nu) > n:
        return None
    if len(nu) == n:
        return pt.partition(x - nu[-1] for x in nu)
    return nu


def tensor_sl(a: tuple, b: tuple, n: int) -> Decomposition:
    terms: dict = {}
    for nu, c in symfunc.lr(tuple(a), tuple(b)).items():
        red = _sl_normalize(nu, n)
        if red is not None:
            terms[red] = terms.get(red, 0) + c
    return Decomposition(pt.SL, n, terms)


def tensor_sp(lam: tuple, mu: tuple, n: int, strict: bool = False) -> Decomposition:
    """Symplectic tensor product by the triple-LR sum; rows > n truncated."""
    lam, mu = tuple(lam), tuple(mu)
    terms: dict = {}
    dropped = 0
    for zeta in symfunc.subpartitions(lam):
        if sum(zeta) > sum(mu):
            continue
        sig = symfunc.skew_expand(lam, zeta)
        tau_exp = symfunc.skew_expand(mu, zeta)
        for sigma, c1 in sig.items():
            for tau, c2 in tau_exp.items():
                for nu, c3 in symfunc.lr(sigma, tau).items():
                    if len(nu) <= n:
                        terms[nu] = terms.get(nu, 0) + c1 * c2 * c3
                    else:
                        dropped += c1 * c2 * c3
    if strict and dropped:
        raise RepstabError(
            f"tensor_sp: {dropped} terms with more than n={n} rows were "
            f"truncated; the closed formula is exact only once n >= "
            f"{sum(lam) + sum(mu)}")
    return Decomposition(pt.SP, n, terms)


def tensor_labels(family: str, a, b, n: int, **kw) -> Decomposition:
    if family == pt.GL:
        return tensor_gl(a, b, n)
    if family == pt.SL:
        return tensor_sl(a, b, n)
    if family == pt.SP:
        return tensor_sp(a, b, n, **kw)
    raise FamilyMismatchError(f"tensor_labels: unsupported family {family}")


def tensor(A: Decomposition, B: Decomposition) -> Decomposition:
    """Bilinear extension of the irreducible tensor rules."""
    if A.family != B.family:
        raise FamilyMismatchError(f"{A.family} vs {B.family}")
    if A.n != B.n:
        raise RepstabError(f"cross-rank tensor: {A.n} vs {B.n}")
    out = Decomposition(A.family, A.n, {})
    for la, ma in A.terms.items():
        for lb, mb in B.terms.items():
            out = out.add(tensor_labels(A.family, la, lb, A.n).scale(ma * mb))
    return out


# ---------------------------------------------------------------------------
# Restriction and branching
# ---------------------------------------------------------------------------

def restrict_gl(label: tuple, n: int, k: int) -> Decomposition:
    """GL_n down to GL_{n-k}: coefficients sum_mu C^lam_{mu,nu} dim S_mu(Q^k)."""
    if not 0 < k < n:
        raise RepstabError("restrict_gl: need 0 < k < n")
    lbar, ell = _gl_twist_split(label, n)
    terms: dict = {}
    for mu in symfunc.subpartitions(lbar):
        if len(mu) > k:
            continue
        weight = dim_gl(pt.pseudo_canon(mu), k)
        if not weight:
            continue
        for nu, c in symfunc.skew_expand(lbar, mu).items():
            if len(nu) <= n - k:
                key = _gl_label(nu, ell, n - k)
                terms[key] = terms.get(key, 0) + weight * c
    return Decomposition(pt.GL, n - k, terms)


def branch_sp(lam: tuple, n: int) -> Decomposition:
    """Sp_{2n} down to Sp_{2n-2}: interleaving-sequence counts (literal rule)."""
    lam = tuple(lam)
    if n < 2:
        raise RepstabError("branch_sp: need n >= 2")
    if len(lam) > n:
        raise RepstabError(f"Sp label {lam} invalid at rank {n}")
    lam_full = lam + (0,) * (n - len(lam))
    terms: dict = {}

    def _accumulate_nu(p):
        # p_1 >= nu_1 >= p_2 >= ... >= nu_{n-1} >= p_n >= nu_n = 0
        def rec_nu(i, nu):
            if i == n - 1:
                key = pt.partition(nu)
                terms[key] = terms.get(key, 0) + 1
                return
            for v in range(p[i], p[i + 1] - 1, -1):
                nu.append(v)
                rec_nu(i + 1, nu)
                nu.pop()

        rec_nu(0, [])

    def rec_p(i, p):
        # lam_1 >= p_1 >= lam_2 >= p_2 >= ... >= lam_n >= p_n >= 0
        if i == n:
            _accumulate_nu(tuple(p))
            return
        hi = lam_full[i]
        lo = lam_full[i + 1] if i + 1 < n else 0
        for v in range(hi, lo - 1, -1):
            p.append(v)
            rec_p(i + 1, p)
            p.pop()

    rec_p(0, [])
    return Decomposition(pt.SP, n - 1, terms)


def _even_multiplicity_partitions(max_size: int, within: tuple):
    """Partitions contained in `within` where every value repeats evenly."""
    halves = []
    for e in range(0, max_size + 1, 2):
        for delta in pt.enumerate_partitions(e // 2):
            eta = tuple(sorted(delta + delta, reverse=True))
            if len(eta) <= len(within) and all(
                    eta[i] <= within[i] for i in range(len(eta))):
                halves.append(eta)
    return halves


def littlewood_restrict(lam: tuple, n: int) -> Decomposition:
    """GL_{2n} down to Sp_{2n}: sum over even-multiplicity eta of C^lam_{eta,mu}."""
    lam = tuple(lam)
    if len(lam) > n:
        raise RepstabError(f"littlewood_restrict: need l(lam) <= n, got {lam} at {n}")
    terms: dict = {}
    for eta in _even_multiplicity_partitions(sum(lam), lam):
        for mu, c in symfunc.skew_expand(lam, eta).items():
            if len(mu) <= n:
                terms[mu] = terms.get(mu, 0) + c
    return Decomposition(pt.SP, n, terms)


# ---------------------------------------------------------------------------
# Schur functors of irreducibles, sums, and tensor products
# ---------------------------------------------------------------------------

def _schur_single_gl(lam: tuple, label: tuple, n: int, family: str) -> Decomposition:
    bar, ell = _gl_twist_split(label, n) if family == pt.GL else (tuple(label), 0)
    terms: dict = {}
    for nu, c in symfunc.plethysm(lam, bar).items():
        if family == pt.GL:
            if len(nu) <= n:
                terms[_gl_label(nu, ell * sum(lam), n)] = c
        else:
            red = _sl_normalize(nu, n)
            if red is not None:
                terms[red] = terms.get(red, 0) + c
    return Decomposition(family, n, terms)


def _schur_single_sp(lam: tuple, label: tuple, n: int) -> Decomposition:
    """S_lam of a symplectic irreducible, via plethysm on its weight character."""
    if not lam:
        return Decomposition(pt.SP, n, {(): 1})
    ch = spweights.full_weight_multiset(tuple(label), n)
    result: dict = {}
    for rho, c in symfunc.schur_to_powersum(tuple(lam)):
        term = {(0,) * n: Fraction(1)}
        for part in rho:
            scaled = {tuple(part * x for x in w): m for w, m in ch.items()}
            term = _weight_convolve(term, scaled)
        for w, v in term.items():
            result[w] = result.get(w, 0) + c * v
    weights = {}
    for w, v in result.items():
        if v:
            if Fraction(v).denominator != 1:
                raise RepstabError(f"non-integral weight multiplicity {v} at {w}")
            weights[w] = int(v)
    return Decomposition(pt.SP, n, _peel_sp_weights(weights, n))


def _weight_convolve(a: dict, b: dict) -> dict:
    out: dict = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            key = tuple(x + y for x, y in zip(w1, w2))
            out[key] = out.get(key, 0) + m1 * m2
    return out


def _peel_sp_weights(weights: dict, n: int) -> dict:
    """Express a symplectic weight character as irreducible multiplicities."""
    remaining = dict(weights)
    out: dict = {}
    while True:
        dominant = [w for w, m in remaining.items()
                    if m and all(x >= y for x, y in zip(w, w[1:])) and w[-1] >= 0]
        if not dominant:
            break
        top = max(dominant, key=lambda w: (sum(w), w))
        mult = remaining[top]
        if mult < 0:
            raise RepstabError(f"negative leading multiplicity at {top}")
        label = pt.partition(top)
        out[label] = out.get(label, 0) + mult
        for w, m in spweights.full_weight_multiset(label, n).items():
            remaining[w] = remaining.get(w, 0) - mult * m
            if not remaining[w]:
                del remaining[w]
    if any(remaining.values()):
        raise RepstabError(f"weight character did not resolve: {remaining}")
    return out


@lru_cache(maxsize=None)
def _schur_of_label_list(lam: tuple, labels: tuple, family: str, n: int) -> tuple:
    """S_lam of a direct sum of irreducibles, as sorted term items."""
    if not labels:
        d = Decomposition(family, n, {(): 1} if not lam else {})
        return tuple(sorted(d.terms.items()))
    if len(labels) == 1:
        if family == pt.SP:
            d = _schur_single_sp(lam, labels[0], n)
        else:
            d = _schur_single_gl(lam, labels[0], n, family)
        return tuple(sorted(d.terms.items()))
    head, rest = labels[0], labels[1:]
    total = Decomposition(family, n, {})
    for (mu, nu), c in _lr_pairs(lam).items():
        left = Decomposition(family, n, dict(_schur_of_label_list(mu, (head,), family, n)))
        right = Decomposition(family, n, dict(_schur_of_label_list(nu, rest, family, n)))
        if left.terms and right.terms:
            total = total.add(tensor(left, right).scale(c))
    return tuple(sorted(total.terms.items()))


@lru_cache(maxsize=None)
def _lr_pairs(lam: tuple) -> dict:
    """C^lam_{mu,nu} over all (mu, nu), via skew expansions of lam."""
    out = {}
    for mu in symfunc.subpartitions(lam):
        for nu, c in symfunc.skew_expand(lam, mu).items():
            out[(mu, nu)] = c
    return out


def _flatten(A: Decomposition) -> tuple:
    labels = []
    for label, mult in A.sorted_terms():
        if mult < 0:
            raise RepstabError("Schur functors need genuine (non-virtual) input")
        labels.extend([label] * mult)
    return tuple(labels)


def schur_functor(lam: tuple, A: Decomposition) -> Decomposition:
    """Apply the Schur functor S_lam to a (reducible) module."""
    if A.family not in (pt.GL, pt.SL, pt.SP):
        raise FamilyMismatchError("schur_functor: GL, SL, or SP input required")
    terms = dict(_schur_of_label_list(tuple(lam), _flatten(A), A.family, A.n))
    return Decomposition(A.family, A.n, terms)


def schur_of_sum(lam: tuple, A: Decomposition, B: Decomposition) -> Decomposition:
    """S_lam(A + B) = sum C^lam_{mu,nu} S_mu(A) tensor S_nu(B)."""
    if A.family != B.family or A.n != B.n:
        raise FamilyMismatchError("schur_of_sum: mismatched inputs")
    return schur_functor(lam, A.add(B))


def _d_coefficients(lam: tuple) -> dict:
    """(mu, nu) -> D^lam_{mu,nu} = sum_eta chi chil chi / z_eta (|mu|=|nu|=|lam|)."""
    from .characters import character_sym
    d = sum(lam)
    parts = pt.enumerate_partitions(d)
    out = {}
    for mu in parts:
        for nu in parts:
            acc = Fraction(0)
            for eta in parts:
                val = (character_sym(tuple(lam), eta)
                       * character_sym(mu, eta) * character_sym(nu, eta))
                if val:
                    acc += Fraction(val, pt.z_factor(eta))
            if acc:
                if acc.denominator != 1:
                    raise RepstabError(f"D coefficient non-integral: {acc}")
                out[(mu, nu)] = int(acc)
    return out


def schur_of_tensor(lam: tuple, A: Decomposition, B: Decomposition) -> Decomposition:
    """S_lam(A tensor B) = sum D^lam_{mu,nu} S_mu(A) tensor S_nu(B)."""
    if A.family != B.family or A.n != B.n:
        raise FamilyMismatchError("schur_of_tensor: mismatched inputs")
    total = Decomposition(A.family, A.n, {})
    for (mu, nu), c in _d_coefficients(tuple(lam)).items():
        left = schur_functor(mu, A)
        right = schur_functor(nu, B)
        if left.terms and right.terms:
            total = total.add(tensor(left, right).scale(c))
    return total


# ---------------------------------------------------------------------------
# Representation-ring division by lex peeling
# ---------------------------------------------------------------------------

def _to_vec(label, family, n):
    if family == pt.GL:
        return pt.pseudo_at_rank(label, n)
    return tuple(label) + (0,) * (n - len(label))


def _from_vec(vec, family, n):
    if family == pt.GL:
        return pt.pseudo_canon(vec)
    return pt.partition(vec)


def divide(W: Decomposition, VW: Decomposition) -> Decomposition:
    """The unique X with X tensor W = VW, by lexicographic peeling."""
    if W.family != VW.family or W.n != VW.n:
        raise FamilyMismatchError("divide: W and VW must share family and rank")
    family, n = W.family, W.n
    if family not in (pt.GL, pt.SL, pt.SP):
        raise FamilyMismatchError("divide: GL, SL, or SP only")
    if not W.terms:
        raise NotDivisibleError("divide: W is zero")
    wmax = max(W.terms, key=lambda l: _to_vec(l, family, n))
    wcoeff = W.terms[wmax]
    wmax_vec = _to_vec(wmax, family, n)
    remainder = {_to_vec(l, family, n): m for l, m in VW.terms.items()}
    quotient: dict = {}
    while remainder:
        top = max(remainder)
        lam_vec = tuple(a - b for a, b in zip(top, wmax_vec))
        if any(lam_vec[i] < lam_vec[i + 1] for i in range(n - 1)) or (
                family != pt.GL and lam_vec[-1] < 0):
            raise NotDivisibleError(
                f"peeling produced non-label {lam_vec}; not divisible")
        count, rem = divmod(remainder[top], wcoeff)
        if rem or count <= 0:
            raise NotDivisibleError(
                f"leading multiplicity {remainder[top]} not a positive "
                f"multiple of {wcoeff}")
        lam = _from_vec(lam_vec, family, n)
        quotient[lam] = quotient.get(lam, 0) + count
        piece = tensor(Decomposition(family, n, {lam: 1}), W)
        for label, mult in piece.terms.items():
            vec = _to_vec(label, family, n)
            remainder[vec] = remainder.get(vec, 0) - count * mult
            if remainder[vec] == 0:
                del remainder[vec]
            elif remainder[vec] < 0:
                raise NotDivisibleError(
                    f"negative remainder at {label}; not divisible")
    return Decomposition(family, n, quotient)


# ---------------------------------------------------------------------------
# Mixed-tensor naming
# ---------------------------------------------------------------------------

def mixed_name(label: tuple, n: int) -> MixedLabel:
    """Pseudo-partition -> (lam; mu) mixed-tensor coordinates."""
    lam, mu = pt.pseudo_split(tuple(label))
    if len(lam) + len(mu) > n:
        raise RepstabError(f"mixed label ({lam};{mu}) needs rank >= {len(lam) + len(mu)}")
    return (lam, mu)


def mixed_to_pseudo(mixed: MixedLabel, n: int) -> tuple:
    lam, mu = mixed
    if len(lam) + len(mu) > n:
        raise RepstabError(f"mixed label {mixed} needs rank >= {len(lam) + len(mu)}")
    return pt.pseudo_join(lam, mu)


def dual_gl(label: tuple) -> tuple:
    """The dual of V(lam; mu) is V(mu; lam)."""
    lam, mu = pt.pseudo_split(tuple(label))
    return pt.pseudo_join(mu, lam)
