"""Exact Gauss-Jordan elimination over any field, on sparse rows."""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from typing import Sequence

from .errors import InternalInconsistency, ReconstructionFailure


def _size(c) -> int:
    s = getattr(c, "size", None)
    return s() if s is not None else 1


@dataclass
class Reduced:
    """Result of row reduction: pivot rows hold x[col] + sum(other non-pivot cols) = rhs."""

    ncols: int
    pivots: dict = dfield(default_factory=dict)  # col -> (row dict, rhs)
    leftover: list = dfield(default_factory=list)  # rhs values of rows reduced to 0 = rhs

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def consistent(self) -> bool:
        return all(not r for r in self.leftover)

    def free_columns(self) -> list[int]:
        return [c for c in range(self.ncols) if c not in self.pivots]


def row_reduce(rows: Sequence[dict], rhs: Sequence, ncols: int, zero) -> Reduced:
    """Full pivoting: choose the smallest entry, breaking ties by fewest nonzeros."""
    work = [(dict(r), b) for r, b in zip(rows, rhs)]
    work = [(r, b) for r, b in work if r or b]
    active = list(range(len(work)))
    out = Reduced(ncols)
    while True:
        best = None
        for ri in active:
            r, _ = work[ri]
            nnz = len(r)
            for c, v in r.items():
                key = (_size(v), nnz)
                if best is None or key < best[0]:
                    best = (key, ri, c)
        if best is None:
            break
        _, pr, pc = best
        prow, pb = work[pr]
        inv = 1 / prow[pc]
        prow = {c: v * inv for c, v in prow.items()}
        pb = pb * inv
        work[pr] = (prow, pb)
        active.remove(pr)
        for ri in range(len(work)):
            if ri == pr:
                continue
            r, b = work[ri]
            f = r.get(pc)
            if f is None:
                continue
            for c, v in prow.items():
                nv = r.get(c, zero) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
            work[ri] = (r, b - f * pb)
        out.pivots[pc] = pr
    pivot_rows = set(out.pivots.values())
    for ri, (r, b) in enumerate(work):
        if ri not in pivot_rows:
            out.leftover.append(b)
    out.pivots = {c: work[ri] for c, ri in out.pivots.items()}
    return out


def solve_unique(rows: Sequence[dict], rhs: Sequence, ncols: int, zero) -> list:
    red = row_reduce(rows, rhs, ncols, zero)
    if not red.consistent():
        raise InternalInconsistency("overdetermined system has a nonzero residual")
    if red.rank < ncols:
        raise ReconstructionFailure(f"system has a {ncols - red.rank}-dimensional solution space")
    sol = [None] * ncols
    for c, (r, b) in red.pivots.items():
        sol[c] = b
    return sol


def rank(rows: Sequence[dict], ncols: int, zero) -> int:
    return row_reduce(rows, [zero] * len(rows), ncols, zero).rank
