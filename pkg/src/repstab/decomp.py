"""Sparse integer decompositions into irreducibles at a fixed rank.

For the finite families (SYM, HYP) a decomposition can be keyed either by
padded labels (partitions / double partitions of n itself) or by unpadded
cores; the `padded` flag records which, and `unpadded()` converts.  Both
appear naturally: raw character decompositions are padded, anything compared
across ranks is unpadded.  GL/SL/SP labels are rank-free already, so the flag
is ignored there.

Cross-rank or cross-family arithmetic is a hard error; V_n and V_{n+1} live
over different groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import partitions as pt
from .errors import FamilyMismatchError, RankMismatchError, RepstabError


def _is_double(label):
    return (isinstance(label, tuple) and len(label) == 2
            and all(isinstance(c, tuple) for c in label))


@dataclass
class Decomposition:
    family: str
    n: int
    terms: dict = field(default_factory=dict)
    virtual: bool = False
    padded: bool = True

    def __post_init__(self):
        self.terms = {k: int(v) for k, v in self.terms.items() if v}
        for label, mult in self.terms.items():
            self._check_label(label)
            if mult < 0 and not self.virtual:
                raise RepstabError(
                    f"negative multiplicity {mult} at {label} without virtual flag")

    def _check_label(self, label):
        fam, n = self.family, self.n
        if fam == pt.SYM:
            if self.padded:
                if sum(label) != n:
                    raise RepstabError(f"padded SYM label {label} is not a partition of {n}")
            elif not pt.pad_valid(label, n):
                raise RepstabError(f"SYM core {label} invalid at rank {n}")
        elif fam == pt.HYP:
            if not _is_double(label):
                raise RepstabError(f"HYP label must be a double partition: {label}")
            if self.padded:
                if sum(label[0]) + sum(label[1]) != n:
                    raise RepstabError(f"padded HYP label {label} has size != {n}")
            elif not pt.pad_double_valid(label, n):
                raise RepstabError(f"HYP core {label} invalid at rank {n}")
        elif fam == pt.GL:
            if len(label) > n or any(x == 0 for x in label):
                raise RepstabError(f"GL label {label} invalid at rank {n}")
        elif fam == pt.SL:
            if len(label) >= n:
                raise RepstabError(f"SL label {label} needs rank > {len(label)}")
        elif fam == pt.SP:
            if len(label) > n:
                raise RepstabError(f"SP label {label} invalid at rank {n}")
        else:
            raise RepstabError(f"unknown family {fam!r}")

    # -- conversions --------------------------------------------------------

    def unpadded(self) -> "Decomposition":
        """Rewrite SYM/HYP terms in unpadded (core) coordinates."""
        if self.family not in (pt.SYM, pt.HYP) or not self.padded:
            return self
        terms = {}
        for label, mult in self.terms.items():
            if self.family == pt.SYM:
                core, _ = pt.unpad(label)
            else:
                core, _ = pt.unpad_double(label)
            terms[core] = mult
        return Decomposition(self.family, self.n, terms,
                             virtual=self.virtual, padded=False)

    def padded_form(self) -> "Decomposition":
        if self.family not in (pt.SYM, pt.HYP) or self.padded:
            return self
        terms = {}
        for core, mult in self.terms.items():
            full = (pt.pad(core, self.n) if self.family == pt.SYM
                    else pt.pad_double(core, self.n))
            terms[full] = mult
        return Decomposition(self.family, self.n, terms,
                             virtual=self.virtual, padded=True)

    def core_dict(self) -> dict:
        """Plain label->mult dict in cross-rank (unpadded) coordinates."""
        return dict(self.unpadded().terms)

    # -- arithmetic ---------------------------------------------------------

    def _compatible(self, other: "Decomposition"):
        if self.family != other.family:
            raise FamilyMismatchError(f"{self.family} vs {other.family}")
        if self.n != other.n:
            raise RankMismatchError(f"rank {self.n} vs {other.n}")
        if self.padded != other.padded:
            raise RepstabError("mixed padded/unpadded arithmetic")

    def add(self, other: "Decomposition") -> "Decomposition":
        self._compatible(other)
        terms = dict(self.terms)
        for label, mult in other.terms.items():
            terms[label] = terms.get(label, 0) + mult
        return Decomposition(self.family, self.n, terms,
                             virtual=self.virtual or other.virtual,
                             padded=self.padded)

    def scale(self, k: int) -> "Decomposition":
        return Decomposition(self.family, self.n,
                             {l: k * m for l, m in self.terms.items()},
                             virtual=self.virtual or k < 0, padded=self.padded)

    def dim(self) -> int:
        from . import repring
        return sum(m * repring.dim_label(self.family, label, self.n,
                                         padded=self.padded)
                   for label, m in self.terms.items())

    # -- presentation -------------------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(),
                      key=lambda kv: pt.label_sort_key(kv[0]), reverse=True)

    def to_json(self) -> dict:
        """JSON form; SYM/HYP terms are always written in unpadded coordinates."""
        d = self.unpadded() if self.family in (pt.SYM, pt.HYP) else self
        items = []
        for label, mult in d.sorted_terms():
            if d.family == pt.HYP:
                lam = {"plus": list(label[0]), "minus": list(label[1])}
            else:
                lam = list(label)
            items.append({"lambda": lam, "mult": mult})
        return {"family": self.family, "n": self.n, "terms": items}

    @classmethod
    def from_json(cls, obj: dict) -> "Decomposition":
        family = obj["family"]
        terms = {}
        for item in obj["terms"]:
            lam = item["lambda"]
            if isinstance(lam, dict):
                label = (tuple(lam["plus"]), tuple(lam["minus"]))
            else:
                label = tuple(lam)
            terms[label] = item["mult"]
        return cls(family, obj["n"], terms,
                   padded=family not in (pt.SYM, pt.HYP))

    def __eq__(self, other):
        if not isinstance(other, Decomposition):
            return NotImplemented
        return (self.family == other.family and self.n == other.n
                and self.padded == other.padded and self.terms == other.terms)
