"""Partitions, pseudo-partitions, double partitions, and the padding convention.

A partition is a plain tuple of positive ints, weakly decreasing; the empty
tuple is the unique partition of 0.  Trailing zeros are never stored, so
equality is tuple equality.  A pseudo-partition is a weakly decreasing tuple
of ints, negatives allowed, stored with interior zeros stripped (the zeros are
reinserted when rendering at a fixed rank).  A double partition is a pair of
partitions.

The padding map lam -> (n - |lam|, lam_1, ..., lam_l) is what lets
multiplicities be compared across ranks; its validity range n >= |lam| + lam_1
is enforced, never silently normalized.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Optional

from .errors import PaddingRangeError, RepstabError

Partition = tuple  # weakly decreasing positive ints
DoublePartition = tuple  # (plus, minus) pair of partitions

# Families of groups whose irreducibles we label.
SYM = "SYM"
HYP = "HYP"
GL = "GL"
SL = "SL"
SP = "SP"
FAMILIES = (SYM, HYP, GL, SL, SP)


def partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize an iterable of parts into a partition tuple."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(a < b for a, b in zip(p, p[1:])):
        raise RepstabError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise RepstabError(f"negative part in partition: {p}")
    return p


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def pad(lam: Partition, n: int) -> Partition:
    """The padded partition lam[n] = (n - |lam|, lam_1, ..., lam_l)."""
    k = sum(lam)
    first = lam[0] if lam else 0
    if n < k + first:
        raise PaddingRangeError(f"pad: need n >= |lam|+lam_1 = {k + first}, got n={n}")
    if n == k:  # padded first row would be 0; only legal when lam is empty
        return lam
    return (n - k,) + lam


def unpad(mu: Partition) -> tuple[Partition, int]:
    """Inverse of pad: drop the first row, return (core, n)."""
    if not mu:
        raise RepstabError("unpad: empty partition has no rank")
    return mu[1:], sum(mu)


def pad_valid(lam: Partition, n: int) -> bool:
    return n >= sum(lam) + (lam[0] if lam else 0)


def pad_double(lam: DoublePartition, n: int) -> DoublePartition:
    """Padded double partition ((n-k, lam+), lam-), k the total size."""
    plus, minus = lam
    k = sum(plus) + sum(minus)
    first = plus[0] if plus else 0
    if n < k + first:
        raise PaddingRangeError(
            f"pad_double: need n >= {k + first}, got n={n}")
    return (pad(plus, n - sum(minus)), minus)


def unpad_double(mu: DoublePartition) -> tuple[DoublePartition, int]:
    plus, minus = mu
    core_plus, _ = unpad(plus) if plus else ((), 0)
    if not plus:
        raise RepstabError("unpad_double: empty plus component has no rank")
    return (core_plus, minus), sum(plus) + sum(minus)


def pad_double_valid(lam: DoublePartition, n: int) -> bool:
    plus, minus = lam
    k = sum(plus) + sum(minus)
    return n >= k + (plus[0] if plus else 0)


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram."""
    if not lam:
        return ()
    out = []
    for col in range(lam[0]):
        out.append(sum(1 for part in lam if part > col))
    return tuple(out)


def is_self_conjugate(lam: Partition) -> bool:
    return conjugate(lam) == tuple(lam)


def arm_excess(lam: Partition) -> int:
    """Number of boxes weakly above the main diagonal (column >= row)."""
    return sum(max(part - i, 0) for i, part in enumerate(lam))


def enumerate_partitions(d: int,
                         max_length: Optional[int] = None,
                         max_part: Optional[int] = None) -> list[Partition]:
    """All partitions of d within the constraints, in decreasing lex order."""
    if d < 0:
        raise RepstabError("enumerate_partitions: negative size")
    cap_len = d if max_length is None else max_length
    cap_part = d if max_part is None else max_part
    out: list[Partition] = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) >= cap_len:
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(d, cap_part, [])
    return out


def partitions_upto(d: int, **kw) -> Iterator[Partition]:
    """Partitions of every size 0..d, larger sizes first within each size."""
    for s in range(d + 1):
        yield from enumerate_partitions(s, **kw)


def lex_cmp(a: tuple, b: tuple) -> int:
    """Zero-padded lexicographic comparison (used for all label orderings)."""
    for x, y in itertools.zip_longest(a, b, fillvalue=0):
        if x != y:
            return -1 if x < y else 1
    return 0


def lex_key(label):
    """Sort key giving increasing zero-padded lex order for int tuples."""
    import functools
    return functools.cmp_to_key(lex_cmp)(label)


def label_sort_key(label):
    """Lex key that also handles double partitions (pairs of tuples)."""
    import functools

    def cmp(a, b):
        if isinstance(a, tuple) and a and isinstance(a[0], tuple):
            c = lex_cmp(a[0], b[0])
            return c if c else lex_cmp(a[1], b[1])
        return lex_cmp(a, b)

    return functools.cmp_to_key(cmp)(label)


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: partial sums of lam bound those of mu (equal sizes)."""
    total_l = total_m = 0
    for x, y in itertools.zip_longest(lam, mu, fillvalue=0):
        total_l += x
        total_m += y
        if total_l < total_m:
            return False
    return total_l == total_m


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
            for i in range(len(lam))]


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux f^lam, by the hook length formula."""
    num = factorial(sum(lam))
    for row in hook_lengths(lam):
        for h in row:
            num //= h
    return num


def z_factor(rho: Partition) -> int:
    """Centralizer order of the class with cycle type rho in S_|rho|."""
    z = 1
    for part, mult in _multiplicities(rho).items():
        z *= part ** mult * factorial(mult)
    return z


def _multiplicities(rho: Partition) -> dict:
    mult: dict = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    return mult


# ---------------------------------------------------------------------------
# Pseudo-partitions (GL labels).  Canonical storage strips all zeros; the
# positives-then-negatives shape is recovered by reinserting zeros at rank n.
# ---------------------------------------------------------------------------

def pseudo_canon(seq: Iterable[int]) -> tuple:
    """Canonical rank-free form of a weakly decreasing int sequence."""
    t = tuple(int(x) for x in seq)
    if any(a < b for a, b in zip(t, t[1:])):
        raise RepstabError(f"not weakly decreasing: {t}")
    return tuple(x for x in t if x != 0)


def pseudo_length(label: tuple) -> int:
    """Number of nonzero entries (the rank needed to realize the label)."""
    return len(label)


def pseudo_valid(label: tuple, n: int) -> bool:
    return len(label) <= n


def pseudo_at_rank(label: tuple, n: int) -> tuple:
    """Full length-n highest weight vector for a canonical GL label."""
    if len(label) > n:
        raise PaddingRangeError(f"GL label {label} needs rank >= {len(label)}")
    pos = tuple(x for x in label if x > 0)
    neg = tuple(x for x in label if x < 0)
    return pos + (0,) * (n - len(label)) + neg


def pseudo_split(label: tuple) -> tuple[Partition, Partition]:
    """Mixed-tensor coordinates (lam; mu): positives and reversed |negatives|."""
    pos = tuple(x for x in label if x > 0)
    neg = tuple(-x for x in reversed(label) if x < 0)
    return pos, neg


def pseudo_join(lam: Partition, mu: Partition) -> tuple:
    """Inverse of pseudo_split."""
    return tuple(lam) + tuple(-x for x in reversed(mu))


# ---------------------------------------------------------------------------
# Padded labels with per-family validity.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PaddedLabel:
    """A family-tagged irreducible name V(core)_n with its validity enforced."""
    family: str
    core: tuple
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RepstabError(f"unknown family {self.family!r}")
        if not self.is_valid():
            raise PaddingRangeError(
                f"label {self.core} invalid at rank {self.n} for {self.family}")

    def is_valid(self) -> bool:
        fam, core, n = self.family, self.core, self.n
        if fam == SYM:
            return pad_valid(core, n)
        if fam == HYP:
            return pad_double_valid(core, n)
        if fam == SL:
            return n > len(core)
        if fam == GL:
            return n >= pseudo_length(core)
        if fam == SP:
            return n >= len(core)
        return False

    def padded(self):
        if self.family == SYM:
            return pad(self.core, self.n)
        if self.family == HYP:
            return pad_double(self.core, self.n)
        return self.core


# ---------------------------------------------------------------------------
# Text syntax: `3,1`; empty partition `0`; double partition `3,1|2`;
# padded labels `V(3,1)@9`.
# ---------------------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    return partition(int(tok) for tok in text.split(","))


def parse_pseudo(text: str) -> tuple:
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    return pseudo_canon(int(tok) for tok in text.split(","))


def parse_double(text: str) -> DoublePartition:
    if "|" not in text:
        return (parse_partition(text), ())
    left, right = text.split("|", 1)
    return (parse_partition(left), parse_partition(right))


def parse_label(text: str, family: str):
    if family == HYP:
        return parse_double(text)
    if family in (GL, SL):
        return parse_pseudo(text)
    return parse_partition(text)


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam) if lam else "0"


def format_double(lam: DoublePartition) -> str:
    plus, minus = lam
    if not minus:
        return format_partition(plus) + "|0"
    return f"{format_partition(plus)}|{format_partition(minus)}"


def format_label(label, family: str) -> str:
    if family == HYP:
        return format_double(label)
    return format_partition(label)


_PADDED_RE = re.compile(r"^V\((?P<core>[^)]*)\)@(?P<n>\d+)$")


def parse_padded(text: str, family: str = SYM) -> PaddedLabel:
    m = _PADDED_RE.match(text.strip())
    if not m:
        raise RepstabError(f"cannot parse padded label {text!r}")
    core = parse_label(m.group("core"), family)
    return PaddedLabel(family, core, int(m.group("n")))


def format_padded(label: PaddedLabel) -> str:
    return f"V({format_label(label.core, label.family)})@{label.n}"
