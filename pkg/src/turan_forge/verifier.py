"""K_{2,t}-freeness by exhaustive pairwise codegree scanning.

A graph contains K_{2,t} exactly when some pair of vertices has ``t`` or more
common neighbours.  The scan ANDs packed adjacency rows and popcounts the
result for every unordered pair.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .bounds import pair_sum_bound
from .errors import InvalidParameterError
from .graph import TripartiteGraph, bits_to_ids

HISTOGRAM_CAP = 255


def codegree(graph: TripartiteGraph, u: int, v: int) -> int:
    """Number of common neighbours of ``u`` and ``v``."""
    nv = graph.num_vertices
    if not (0 <= u < nv and 0 <= v < nv):
        raise InvalidParameterError(f"vertex id out of range [0, {nv})")
    if u == v:
        raise InvalidParameterError("codegree needs two distinct vertices")
    return int(np.bitwise_count(graph.rows[u] & graph.rows[v]).sum())


def common_neighbors(graph: TripartiteGraph, u: int, v: int) -> list[int]:
    return bits_to_ids(graph.rows[u] & graph.rows[v], graph.num_vertices)


@dataclass
class CodegreeReport:
    max_codegree: int
    histogram: dict[int, int]
    overflow: int
    scanned_pairs: int
    complete_scan: bool
    witness: Optional[tuple[int, int, list[int]]] = None
    t: Optional[int] = None

    def to_dict(self) -> dict:
        hist = {str(k): v for k, v in sorted(self.histogram.items())}
        if self.overflow:
            hist[f">{HISTOGRAM_CAP}"] = self.overflow
        witness = None
        if self.witness is not None:
            u, v, common = self.witness
            witness = {"u": u, "v": v, "common_neighbors": common}
        return {
            "schema": "v1",
            "t": self.t,
            "max_codegree": self.max_codegree,
            "histogram": hist,
            "scanned_pairs": self.scanned_pairs,
            "complete_scan": self.complete_scan,
            "witness": witness,
        }


@dataclass
class _Partial:
    max_codegree: int = 0
    histogram: np.ndarray = field(default_factory=lambda: np.zeros(HISTOGRAM_CAP + 2, dtype=np.int64))
    scanned: int = 0
    first_bad: Optional[tuple[int, int]] = None
    stopped: bool = False


def _scan_range(rows: np.ndarray, start: int, stop: int, t: int, early_exit: bool) -> _Partial:
    out = _Partial()
    nv = rows.shape[0]
    for u in range(start, stop):
        if u + 1 >= nv:
            break
        cod = np.bitwise_count(rows[u + 1 :] & rows[u]).sum(axis=1, dtype=np.int64)
        out.scanned += len(cod)
        out.histogram += np.bincount(np.minimum(cod, HISTOGRAM_CAP + 1), minlength=HISTOGRAM_CAP + 2)
        top = int(cod.max())
        out.max_codegree = max(out.max_codegree, top)
        if top >= t and out.first_bad is None:
            out.first_bad = (u, u + 1 + int(np.argmax(cod >= t)))
            if early_exit:
                out.stopped = True
                break
    return out


def _chunks(nv: int, pieces: int) -> list[tuple[int, int]]:
    # balance by pair count: row u contributes nv-1-u pairs
    total = nv * (nv - 1) // 2
    bounds, acc, start = [], 0, 0
    for u in range(nv):
        acc += nv - 1 - u
        if acc >= total * (len(bounds) + 1) / pieces and len(bounds) < pieces - 1:
            bounds.append((start, u + 1))
            start = u + 1
    bounds.append((start, nv))
    return bounds


def scan_codegrees(
    graph: TripartiteGraph, t: int, threads: int = 1, early_exit: bool = False
) -> CodegreeReport:
    """Scan all unordered vertex pairs and summarise their codegrees.

    The witness, when present, is the lexicographically first pair with
    codegree ``>= t``, so the report is identical for any thread count.
    """
    if t < 2:
        raise InvalidParameterError("t must be at least 2")
    nv = graph.num_vertices
    ranges = _chunks(nv, max(1, threads) * 4) if threads > 1 else [(0, nv)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: _scan_range(graph.rows, r[0], r[1], t, early_exit), ranges))
    else:
        parts = [_scan_range(graph.rows, 0, nv, t, early_exit)]

    hist = sum((p.histogram for p in parts), np.zeros(HISTOGRAM_CAP + 2, dtype=np.int64))
    bad = [p.first_bad for p in parts if p.first_bad is not None]
    witness = None
    if bad:
        u, v = min(bad)
        witness = (u, v, common_neighbors(graph, u, v))
    stopped = any(p.stopped for p in parts)
    return CodegreeReport(
        max_codegree=max(p.max_codegree for p in parts),
        histogram={i: int(c) for i, c in enumerate(hist[: HISTOGRAM_CAP + 1]) if c},
        overflow=int(hist[HISTOGRAM_CAP + 1]),
        scanned_pairs=sum(p.scanned for p in parts),
        complete_scan=not stopped,
        witness=witness,
        t=t,
    )


def is_k2t_free(graph: TripartiteGraph, t: int, threads: int = 1) -> bool:
    return scan_codegrees(graph, t, threads=threads, early_exit=True).max_codegree <= t - 1


@dataclass
class CodegreeSumCheck:
    """Per-part codegree sums and pair-sum edge bounds for an n x n x n graph."""

    n: int
    t: int
    sums: tuple[int, int, int]
    sum_limit: int
    pair_sums: tuple[int, int, int]
    pair_limit: float

    @property
    def sums_ok(self) -> tuple[bool, bool, bool]:
        return tuple(s <= self.sum_limit for s in self.sums)

    @property
    def pair_sums_ok(self) -> tuple[bool, bool, bool]:
        return tuple(s <= self.pair_limit for s in self.pair_sums)

    @property
    def ok(self) -> bool:
        return all(self.sums_ok) and all(self.pair_sums_ok)


def codegree_sum_into(graph: TripartiteGraph, part: int) -> int:
    """Sum over vertices outside ``part`` of C(neighbours inside ``part``, 2)."""
    deg = graph.degrees_into(part)
    lo, hi = (part - 1) * graph.n, part * graph.n
    deg[lo:hi] = 0
    return int((deg * (deg - 1) // 2).sum())


def same_part_codegree_sum(graph: TripartiteGraph, part: int) -> int:
    """Sum of codegrees over all pairs inside ``part``, by direct row intersection.

    Double counting makes this equal to :func:`codegree_sum_into`.
    """
    lo, hi = (part - 1) * graph.n, part * graph.n
    rows = graph.rows[lo:hi]
    total = 0
    for i in range(len(rows) - 1):
        total += int(np.bitwise_count(rows[i + 1 :] & rows[i]).sum())
    return total


def check_codegree_sum(graph: TripartiteGraph, t: int) -> CodegreeSumCheck:
    """Check the counting inequalities behind the upper bound.

    For each part ``k`` the sum over outside vertices of C(deg into k, 2) must
    be at most ``(t-1) C(n, 2)``, and every sum of two pair-edge counts must
    respect :func:`turan_forge.bounds.pair_sum_bound`.
    """
    if not isinstance(graph, TripartiteGraph):
        raise InvalidParameterError("expected a TripartiteGraph with three equal parts")
    if t < 2:
        raise InvalidParameterError("t must be at least 2")
    n = graph.n
    m1, m2, m3 = graph.pair_edge_counts
    return CodegreeSumCheck(
        n=n,
        t=t,
        sums=tuple(codegree_sum_into(graph, k) for k in (1, 2, 3)),
        sum_limit=(t - 1) * math.comb(n, 2),
        pair_sums=(m1 + m2, m1 + m3, m2 + m3),
        pair_limit=pair_sum_bound(n, t),
    )
