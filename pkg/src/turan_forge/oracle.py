"""Exact ex(n, n, n; K_{2,t}) for tiny n by branch and bound.

The search walks the ``3n^2`` cross-part vertex pairs in a fixed order and
decides include/exclude for each.  Codegrees are tracked incrementally, and a
``saturated`` bitmask per vertex records the partners it already shares
``t - 1`` neighbours with, so an edge ``uv`` is admissible iff
``N(u) & sat(v)`` and ``N(v) & sat(u)`` are both empty.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import edgelist
from .bounds import upper_bound_floor
from .errors import BudgetExceededError, InvalidParameterError

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class SearchResult:
    n: int
    t: int
    exact_value: int
    witness_edges: tuple[tuple[int, int], ...]
    nodes_explored: int

    def to_dict(self) -> dict:
        return {
            "schema": "v1",
            "n": self.n,
            "t": self.t,
            "exact_value": self.exact_value,
            "witness_edges": [list(e) for e in self.witness_edges],
            "nodes_explored": self.nodes_explored,
        }

    def edge_list_text(self) -> str:
        return edgelist.dumps(list(self.witness_edges), n=self.n, t=self.t)


def candidate_edges(n: int) -> list[tuple[int, int]]:
    """All cross-part pairs ``(u, v)``, ``u < v``, in lexicographic order."""
    return [(u, v) for u in range(3 * n) for v in range(u + 1, 3 * n) if u // n != v // n]


class _Search:
    def __init__(self, n, t, order, budget, symmetry):
        self.n, self.t = n, t
        self.cands = order
        self.budget = budget
        self.nv = 3 * n
        self.adj = [0] * self.nv
        self.cod = [[0] * self.nv for _ in range(self.nv)]
        self.sat = [0] * self.nv
        self.chosen = []
        self.best = -1
        self.best_edges = ()
        self.nodes = 0
        self.cap = upper_bound_floor(n, t)
        # symmetry rule: N(0) within parts 2 and 3 is an initial segment
        self.forced_prev = {}
        if symmetry:
            for v in range(n + 1, 3 * n):
                if v != 2 * n:
                    self.forced_prev[(0, v)] = (0, v - 1)

    def admissible(self, u, v):
        return not (self.adj[u] & self.sat[v]) and not (self.adj[v] & self.sat[u])

    def _bump(self, x, y, delta):
        self.cod[x][y] += delta
        self.cod[y][x] += delta
        if delta > 0 and self.cod[x][y] == self.t - 1:
            self.sat[x] |= 1 << y
            self.sat[y] |= 1 << x
        elif delta < 0 and self.cod[x][y] == self.t - 2:
            self.sat[x] &= ~(1 << y)
            self.sat[y] &= ~(1 << x)

    def _touched(self, u, v):
        nu = [w for w in range(self.nv) if self.adj[u] >> w & 1]
        nv_ = [w for w in range(self.nv) if self.adj[v] >> w & 1]
        return nu, nv_

    def add(self, u, v):
        nu, nv_ = self._touched(u, v)
        for w in nu:
            self._bump(v, w, 1)
        for w in nv_:
            self._bump(u, w, 1)
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        self.chosen.append((u, v))

    def remove(self, u, v):
        self.chosen.pop()
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)
        nu, nv_ = self._touched(u, v)
        for w in nu:
            self._bump(v, w, -1)
        for w in nv_:
            self._bump(u, w, -1)

    def run(self):
        self.excluded = set()
        self._dfs(0)

    def _dfs(self, i):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"node budget {self.budget} exhausted", best=max(self.best, 0), nodes_explored=self.nodes
            )
        count = len(self.chosen)
        if count > self.best:
            self.best = count
            self.best_edges = tuple(self.chosen)
        if i == len(self.cands) or self.best >= self.cap:
            return
        rest = self.cands[i:]
        optimistic = count + sum(1 for u, v in rest if (u, v) not in self.excluded and self.admissible(u, v))
        if optimistic <= self.best:
            return
        u, v = self.cands[i]
        prev = self.forced_prev.get((u, v))
        if self.admissible(u, v) and not (prev is not None and prev in self.excluded):
            self.add(u, v)
            self._dfs(i + 1)
            self.remove(u, v)
            if self.best >= self.cap:
                return
        self.excluded.add((u, v))
        self._dfs(i + 1)
        self.excluded.discard((u, v))


def exact_extremal(
    n: int, t: int, budget: int = DEFAULT_BUDGET, seed: int | None = None, symmetry: bool = True
) -> SearchResult:
    """Maximum edges of a K_{2,t}-free tripartite graph with parts of size ``n``.

    ``seed`` shuffles the candidate order (which turns symmetry pruning off);
    the optimum does not depend on it.  Raises :class:`BudgetExceededError`
    with the best count so far when more than ``budget`` nodes are needed.
    """
    if n < 1 or t < 2:
        raise InvalidParameterError("need n >= 1 and t >= 2")
    order = candidate_edges(n)
    if seed is not None:
        random.Random(seed).shuffle(order)
        symmetry = False
    search = _Search(n, t, order, budget, symmetry)
    search.run()
    return SearchResult(
        n=n,
        t=t,
        exact_value=search.best,
        witness_edges=tuple(sorted(search.best_edges)),
        nodes_explored=search.nodes,
    )


def brute_force_extremal(n: int, t: int) -> SearchResult:
    """Enumerate every subset of cross-part edges; feasible only for ``n <= 2``."""
    cands = candidate_edges(n)
    if len(cands) > 20:
        raise InvalidParameterError("brute force is limited to 2**20 subsets")
    nv = 3 * n
    best, best_mask = -1, 0
    for mask in range(1 << len(cands)):
        size = bin(mask).count("1")
        if size <= best:
            continue
        adj = [0] * nv
        for k, (u, v) in enumerate(cands):
            if mask >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        if all(bin(adj[x] & adj[y]).count("1") < t for x, y in itertools.combinations(range(nv), 2)):
            best, best_mask = size, mask
    witness = tuple(e for k, e in enumerate(cands) if best_mask >> k & 1)
    return SearchResult(n=n, t=t, exact_value=best, witness_edges=witness, nodes_explored=1 << len(cands))
