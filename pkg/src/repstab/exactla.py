"""Exact integer rank computation for sparse matrices.

Rows are dicts column->int.  Elimination is fraction-free (cross
multiplication) with per-row gcd normalization to keep entries small; pivots
are chosen deterministically as the sparsest available row in the lowest
unfinished column, so runs are reproducible.
"""

from __future__ import annotations

from math import gcd


def _normalize(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank_sparse(rows: list) -> int:
    """Rank over Q of a matrix given as a list of {column: int} rows."""
    work = [_normalize({c: v for c, v in r.items() if v}) for r in rows]
    work = [r for r in work if r]
    rank = 0
    while work:
        col = min(min(r) for r in work)
        candidates = [i for i, r in enumerate(work) if col in r]
        pivot_i = min(candidates, key=lambda i: len(work[i]))
        pivot = work.pop(pivot_i)
        pv = pivot[col]
        rank += 1
        nxt = []
        for r in work:
            if col in r:
                rv = r[col]
                new = {}
                for c in set(r) | set(pivot):
                    val = pv * r.get(c, 0) - rv * pivot.get(c, 0)
                    if val:
                        new[c] = val
                if new:
                    nxt.append(_normalize(new))
            else:
                nxt.append(r)
        work = nxt
    return rank


def rank_dense(matrix: list) -> int:
    """Rank over Q of a dense integer matrix (list of row lists)."""
    rows = [{j: v for j, v in enumerate(row) if v} for row in matrix]
    return rank_sparse(rows)
