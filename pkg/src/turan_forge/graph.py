"""Tripartite graph stored as packed adjacency bit-rows.

Vertex ids run over ``0 .. 3n-1``; part ``k`` (1-based) owns the block
``[(k-1)n, kn)``.  Row ``u`` is a little-endian bitset over all 3n vertices,
padded to a whole number of 64-bit words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import InvalidParameterError

WORD_BITS = 64


def pack_rows(num_vertices: int, edges: np.ndarray) -> np.ndarray:
    """Symmetric bit-row matrix of shape ``(num_vertices, words)`` from an edge array."""
    words = max(1, -(-num_vertices // WORD_BITS))
    rows = np.zeros((num_vertices, words), dtype=np.uint64)
    if len(edges):
        u = np.concatenate([edges[:, 0], edges[:, 1]]).astype(np.int64)
        v = np.concatenate([edges[:, 1], edges[:, 0]]).astype(np.int64)
        bits = np.left_shift(np.uint64(1), (v % WORD_BITS).astype(np.uint64))
        np.bitwise_or.at(rows, (u, v // WORD_BITS), bits)
    return rows


def canonical_edges(edges) -> np.ndarray:
    """Orient every edge as (min, max) and sort lexicographically."""
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    order = np.lexsort((hi, lo))
    return np.stack([lo[order], hi[order]], axis=1)


@dataclass(frozen=True)
class TripartiteGraph:
    """Simple 3-partite graph with three parts of size ``n``.

    ``edges`` is the sorted (min, max) edge array; ``rows`` the packed
    adjacency.  ``params`` is set for graphs produced by the algebraic
    construction and ``None`` otherwise.
    """

    n: int
    edges: np.ndarray
    rows: np.ndarray = field(repr=False)
    params: Optional[object] = None

    @classmethod
    def from_edges(cls, n: int, edges, params=None) -> TripartiteGraph:
        if n < 1:
            raise InvalidParameterError("part size must be positive")
        arr = canonical_edges(edges)
        if len(arr):
            if arr.min() < 0 or arr.max() >= 3 * n:
                raise InvalidParameterError("edge endpoint outside vertex range")
            if np.any(arr[:, 0] // n == arr[:, 1] // n):
                raise InvalidParameterError("edge inside a part (or self-loop)")
            if np.any(np.all(arr[1:] == arr[:-1], axis=1)):
                raise InvalidParameterError("duplicate edge")
        arr.setflags(write=False)
        rows = pack_rows(3 * n, arr)
        rows.setflags(write=False)
        return cls(n=n, edges=arr, rows=rows, params=params)

    @property
    def num_vertices(self) -> int:
        return 3 * self.n

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def part_of(self, v: int) -> int:
        """1-based part index of vertex ``v``."""
        return v // self.n + 1

    @property
    def pair_edge_counts(self) -> tuple[int, int, int]:
        """``(m_1, m_2, m_3)``: edges between V2-V3, V1-V3 and V1-V2."""
        parts = self.edges // self.n
        # the part left out of each edge's pair names the count it belongs to
        missing = 3 - parts[:, 0] - parts[:, 1]
        counts = np.bincount(missing, minlength=3)
        return int(counts[0]), int(counts[1]), int(counts[2])

    def degrees(self) -> np.ndarray:
        return np.bitwise_count(self.rows).sum(axis=1, dtype=np.int64)

    def degrees_into(self, part: int) -> np.ndarray:
        """Number of neighbours each vertex has inside ``part`` (1-based)."""
        lo, hi = (part - 1) * self.n, part * self.n
        deg = np.zeros(self.num_vertices, dtype=np.int64)
        for a, b in ((0, 1), (1, 0)):
            src, dst = self.edges[:, a], self.edges[:, b]
            mask = (dst >= lo) & (dst < hi)
            deg += np.bincount(src[mask], minlength=self.num_vertices)
        return deg

    def neighbors(self, v: int) -> list[int]:
        return bits_to_ids(self.rows[v], self.num_vertices)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u, v // WORD_BITS] >> np.uint64(v % WORD_BITS)) & np.uint64(1))


def bits_to_ids(row: np.ndarray, limit: int) -> list[int]:
    bits = np.unpackbits(row.view(np.uint8), bitorder="little")[:limit]
    return np.flatnonzero(bits).tolist()
