"""Algebraic K_{2,t}-free tripartite graphs over F_p for even t.

For a prime ``p`` with ``p - 1 = a(t - 1)`` and primitive root ``g``, the
three parts are copies of ``B x F_p`` where ``B = {g, ..., g^(a/2)}``.  A
vertex ``(b, x)`` of part ``i`` is joined to ``(c, y)`` of part ``i + 1``
(cyclically) when ``bc = g^w (x - y)`` for some ``w`` in
``W = {a, 2a, ..., (t-1)a}``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import edgelist
from .errors import InvalidParameterError, MemoryCapError
from .finite_field import PrimeModulus, discrete_log, is_prime, smallest_primitive_root
from .graph import TripartiteGraph

DEFAULT_MAX_VERTICES = 98_304


@dataclass(frozen=True)
class ConstructionParams:
    t: int
    modulus: PrimeModulus
    a: int
    n: int
    g: int

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def half_a(self) -> int:
        return self.a // 2

    def as_dict(self) -> dict:
        return {"t": self.t, "p": self.p, "a": self.a, "n": self.n, "g": self.g}


def derive_params(t: int, p: int) -> ConstructionParams:
    """Validate ``(t, p)`` and derive ``a``, the part size and ``g``."""
    if t < 2:
        raise InvalidParameterError("t must be at least 2")
    if t % 2:
        raise InvalidParameterError(
            f"t={t} is odd; the construction needs even t (odd t is out of scope)"
        )
    if p < 3 or not is_prime(p):
        raise InvalidParameterError(f"p={p} is not an odd prime")
    if (p - 1) % (t - 1):
        raise InvalidParameterError(f"t-1={t - 1} does not divide p-1={p - 1}")
    modulus = PrimeModulus.of(p)
    a = (p - 1) // (t - 1)
    return ConstructionParams(t=t, modulus=modulus, a=a, n=a // 2 * p, g=smallest_primitive_root(modulus))


@dataclass(frozen=True)
class GeneratorSets:
    """``B[e-1] = g^e`` for ``e = 1..a/2`` and ``W[j-1] = j*a`` for ``j = 1..t-1``.

    W keeps the raw exponents, so its last entry is ``p - 1`` (power 1).
    """

    B: tuple[int, ...]
    W: tuple[int, ...]


def build_generator_sets(params: ConstructionParams) -> GeneratorSets:
    p, g = params.p, params.g
    B = tuple(pow(g, e, p) for e in range(1, params.half_a + 1))
    W = tuple(j * params.a for j in range(1, params.t))
    return GeneratorSets(B=B, W=W)


def vertex_id(params: ConstructionParams, part: int, b_index: int, x: int) -> int:
    """Canonical id of ``(g^b_index, x)`` in part ``part`` (both 1-based)."""
    if part not in (1, 2, 3) or not 1 <= b_index <= params.half_a or not 0 <= x < params.p:
        raise InvalidParameterError("vertex label out of range")
    return (part - 1) * params.n + (b_index - 1) * params.p + x


def vertex_label(params: ConstructionParams, vid: int) -> tuple[int, int, int]:
    """Inverse of :func:`vertex_id`: ``(part, b_index, x)``."""
    if not 0 <= vid < 3 * params.n:
        raise InvalidParameterError(f"vertex id {vid} out of range")
    part, rest = divmod(vid, params.n)
    b0, x = divmod(rest, params.p)
    return part + 1, b0 + 1, x


def _part_edges(params: ConstructionParams, sets: GeneratorSets, part: int) -> np.ndarray:
    """Edges owned by ``part`` (0-based), i.e. those into the next part.

    Axes follow the fixed generation order: b index, x, c index, w index.
    """
    p, n = params.p, params.n
    B = np.array(sets.B, dtype=np.int64)
    g_inv_w = np.array([pow(params.g, -w, p) for w in sets.W], dtype=np.int64)
    bc = (B[:, None] * B[None, :]) % p
    coef = (bc[:, :, None] * g_inv_w[None, None, :]) % p  # (b, c, w)
    x = np.arange(p, dtype=np.int64)
    # y = x - bc g^{-w}
    y = (x[None, :, None, None] - coef[:, None, :, :]) % p
    k = len(sets.B)
    src = part * n + np.arange(k, dtype=np.int64)[:, None] * p + x[None, :]
    src = np.broadcast_to(src[:, :, None, None], y.shape)
    dst = ((part + 1) % 3) * n + np.arange(k, dtype=np.int64)[None, None, :, None] * p + y
    return np.stack([src.ravel(), dst.ravel()], axis=1)


def build_graph(
    params: ConstructionParams,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    threads: int = 1,
) -> TripartiteGraph:
    """Materialise the construction for ``params``.

    Each part is generated independently (optionally on ``threads`` worker
    threads); the merged edge list is sorted, so the result does not depend
    on the degree of parallelism.
    """
    if 3 * params.n > max_vertices:
        raise MemoryCapError(f"3n = {3 * params.n} vertices exceeds the cap of {max_vertices}")
    sets = build_generator_sets(params)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda i: _part_edges(params, sets, i), range(3)))
    else:
        chunks = [_part_edges(params, sets, i) for i in range(3)]
    return TripartiteGraph.from_edges(params.n, np.concatenate(chunks), params=params)


def expected_edge_count(params: ConstructionParams) -> int:
    return 3 * params.half_a**2 * (params.t - 1) * params.p


def edge_list_text(graph: TripartiteGraph) -> str:
    return edgelist.dumps(graph.edges, **graph.params.as_dict())


# --- the unique-representation lemma ------------------------------------


def decompose_field_element(f: int, params: ConstructionParams) -> tuple[int, int]:
    """``(c, d)`` with ``f = g^(ca + d)``, ``1 <= c <= t-1``, ``1 <= d <= a``."""
    return _split_exponent(discrete_log(f, params.g, params.p), params)


def _split_exponent(k: int, params: ConstructionParams) -> tuple[int, int]:
    d = (k - 1) % params.a + 1
    c = ((k - d) // params.a) % (params.t - 1) or params.t - 1
    return c, d


def solve_pf_nf(f: int, sets: GeneratorSets, params: ConstructionParams):
    """Brute-force solution sets of ``g^w b = f`` and ``g^w b = -f`` over W x B.

    Returns ``(P_f, N_f)`` as sets of ``(w, b)`` pairs.
    """
    p = params.p
    f %= p
    if f == 0:
        raise InvalidParameterError("f must be a nonzero field element")
    pos, neg = set(), set()
    for w in sets.W:
        gw = pow(params.g, w, p)
        for b in sets.B:
            v = gw * b % p
            if v == f:
                pos.add((w, b))
            if v == p - f:
                neg.add((w, b))
    return pos, neg


def predicted_solution(f: int, params: ConstructionParams, cd=None) -> tuple[str, tuple[int, int]]:
    """Where the lemma's proof says the unique solution for ``f`` sits.

    Returns ``("P", (w, b))`` or ``("N", (w, b))``.  ``cd`` may carry a
    precomputed decomposition of ``f``.
    """
    c, d = cd if cd is not None else decompose_field_element(f, params)
    a, t, g, p = params.a, params.t, params.g, params.p
    if d <= a // 2:
        return "P", (c * a, pow(g, d, p))
    b = pow(g, d - a // 2, p)
    if c <= t // 2 - 1:
        return "N", (c * a + t * a // 2, b)
    return "N", (c * a - t * a // 2 + a, b)


@dataclass(frozen=True)
class FieldCertificate:
    f: int
    c: int
    d: int
    p_size: int
    n_size: int
    solution: Optional[tuple[int, int]]
    side: Optional[str]
    closed_form_ok: bool

    @property
    def ok(self) -> bool:
        return {self.p_size, self.n_size} == {0, 1} and self.closed_form_ok


@dataclass(frozen=True)
class LemmaCertificate:
    params: ConstructionParams
    entries: tuple[FieldCertificate, ...]

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list[int]:
        return [e.f for e in self.entries if not e.ok]

    def to_dict(self) -> dict:
        return {
            "schema": "v1",
            "params": self.params.as_dict(),
            "verdict": "pass" if self.passed else "fail",
            "failures": self.failures,
            "certificates": [
                {
                    "f": e.f,
                    "c": e.c,
                    "d": e.d,
                    "P_size": e.p_size,
                    "N_size": e.n_size,
                    "side": e.side,
                    "solution": list(e.solution) if e.solution else None,
                    "closed_form_ok": e.closed_form_ok,
                }
                for e in self.entries
            ],
        }


def _product_table(sets: GeneratorSets, params: ConstructionParams) -> dict[int, list[tuple[int, int]]]:
    """Map each value ``g^w b`` to every ``(w, b)`` in W x B producing it."""
    p = params.p
    table: dict[int, list[tuple[int, int]]] = {}
    for w in sets.W:
        gw = pow(params.g, w, p)
        for b in sets.B:
            table.setdefault(gw * b % p, []).append((w, b))
    return table


def check_lemma1(params: ConstructionParams) -> LemmaCertificate:
    """Exhaustively check the {0,1} dichotomy for every ``f`` in F_p^*.

    W x B is enumerated once into a value table, so ``P_f`` and ``N_f`` are the
    table entries at ``f`` and ``-f``; this equals :func:`solve_pf_nf` for each
    ``f`` at O(p) total cost.  Each entry also confirms that the solution is
    the one the closed form in :func:`predicted_solution` points to.
    """
    sets = build_generator_sets(params)
    table = _product_table(sets, params)
    p = params.p
    log = [0] * p
    x = 1
    for k in range(1, p):
        x = x * params.g % p
        log[x] = k
    entries = []
    for f in range(1, p):
        pos, neg = table.get(f, []), table.get(p - f, [])
        c, d = _split_exponent(log[f], params)
        side, found = None, None
        if len(pos) == 1 and not neg:
            side, found = "P", pos[0]
        elif len(neg) == 1 and not pos:
            side, found = "N", neg[0]
        closed_form_ok = side is not None and predicted_solution(f, params, (c, d)) == (side, found)
        entries.append(FieldCertificate(f, c, d, len(pos), len(neg), found, side, closed_form_ok))
    return LemmaCertificate(params=params, entries=tuple(entries))
