"""Multiplicity-stability detection on sequences of decompositions.

This operates on multiplicity data only (Condition III / multiplicity
stability); the injectivity and surjectivity conditions on connecting maps
are not visible from decompositions, so every report carries an empirical
caveat.  Absent labels count as multiplicity zero, except that a GL label
cannot occur below rank l(lambda) and simple stability is judged from that
rank on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import partitions as pt
from .config import LIMITS
from .decomp import Decomposition
from .errors import FamilyMismatchError, RepstabError


@dataclass
class DecompositionSequence:
    """Decompositions over a contiguous rank range, unpadded coordinates."""
    family: str
    entries: dict  # n -> {label: mult}
    provenance: str = ""

    def __post_init__(self):
        ranks = sorted(self.entries)
        if not ranks:
            raise RepstabError("empty decomposition sequence")
        if ranks != list(range(ranks[0], ranks[-1] + 1)):
            raise RepstabError(f"rank range not contiguous: {ranks}")
        norm = {}
        for n, entry in self.entries.items():
            if isinstance(entry, Decomposition):
                if entry.family != self.family:
                    raise FamilyMismatchError(
                        f"sequence family {self.family} vs entry {entry.family}")
                norm[n] = entry.core_dict()
            else:
                norm[n] = {k: v for k, v in entry.items() if v}
        self.entries = norm

    @property
    def ranks(self):
        return sorted(self.entries)

    def labels(self):
        out = set()
        for entry in self.entries.values():
            out.update(entry)
        return out

    def multiplicity(self, label, n) -> int:
        return self.entries[n].get(label, 0)


@dataclass
class StabilityReport:
    verdict: str  # stable | simply-stable | periodic(C) | unstable | inconclusive
    onsets: dict = field(default_factory=dict)
    uniform_onset: int | None = None
    period: int | None = None
    window: int = 0
    caveat: bool = True  # always: the verdict is empirical over a finite range

    def to_json(self) -> dict:
        onsets = []
        for label in sorted(self.onsets, key=pt.label_sort_key, reverse=True):
            if isinstance(label, tuple) and label and isinstance(label[0], tuple):
                lam = {"plus": list(label[0]), "minus": list(label[1])}
            else:
                lam = list(label)
            onsets.append({"lambda": lam, "onset": self.onsets[label]})
        out = {"verdict": self.verdict, "onsets": onsets,
               "uniform_onset": self.uniform_onset, "window": self.window,
               "caveat": self.caveat}
        if self.period is not None:
            out["period"] = self.period
        return out


def _onset(series: list, ranks: list) -> int:
    """First rank after which the series is constant through the end."""
    idx = len(series) - 1
    while idx > 0 and series[idx - 1] == series[-1]:
        idx -= 1
    return ranks[idx]


def _trailing_period(series_by_label: dict, ranks: list, c: int, span: int) -> bool:
    """Exact period-c agreement over the trailing `span` ranks."""
    tail = ranks[-span:]
    for series in series_by_label.values():
        offset = len(ranks) - span
        for i in range(span - c):
            if series[offset + i] != series[offset + i + c]:
                return False
    return True


def detect(seq: DecompositionSequence, window: int | None = None) -> StabilityReport:
    """Detect multiplicity stability / eventual periodicity over the range."""
    window = LIMITS.window if window is None else window
    ranks = seq.ranks
    if len(ranks) < window + 1:
        raise RepstabError(
            f"detect: need at least window+1 = {window + 1} ranks, got {len(ranks)}")
    series_by_label = {lab: [seq.multiplicity(lab, n) for n in ranks]
                       for lab in seq.labels()}
    onsets = {lab: _onset(series, ranks)
              for lab, series in series_by_label.items()}
    uniform = max(onsets.values(), default=ranks[0])
    if not series_by_label:
        return StabilityReport("stable", {}, ranks[0], None, window)
    # smallest period whose trailing span (two periods, at least window+1)
    # agrees exactly; period 1 is plain stability
    for c in range(1, len(ranks) // 2 + 1):
        span = max(2 * c, window + 1)
        if span > len(ranks):
            break
        if _trailing_period(series_by_label, ranks, c, span):
            if c == 1:
                return StabilityReport("stable", onsets, uniform, None, window)
            return StabilityReport(f"periodic({c})", onsets, uniform, c, window)
    return StabilityReport("unstable", onsets, None, None, window)


def detect_simple(seq: DecompositionSequence) -> StabilityReport:
    """Simple stability: each lambda constant from rank l(lambda) on (GL only)."""
    if seq.family != pt.GL:
        raise FamilyMismatchError("detect_simple: GL sequences only")
    ranks = seq.ranks
    onsets = {}
    ok = True
    for label in seq.labels():
        if any(x < 0 for x in label):
            ok = False
            continue
        ell = len(label)
        visible = [seq.multiplicity(label, n) for n in ranks if n >= ell]
        if not visible or any(v != visible[-1] for v in visible):
            ok = False
        onsets[label] = ell
    verdict = "simply-stable" if ok else "unstable"
    uniform = max(onsets.values(), default=ranks[0]) if ok else None
    return StabilityReport(verdict, onsets, uniform, None, 0)
