"""Canonical forms and exhaustive enumeration of small connected graphs.

Canonical form = the minimum upper-triangle adjacency encoding over all
vertex orderings that respect the stable color-refinement partition (classes
ordered by their isomorphism-invariant signatures). Equal forms therefore
mean isomorphic graphs, and each isomorphism class has one representative.

The built-in generator covers 1 <= n <= 7 by repeatedly attaching one new
vertex to every smaller connected graph (every connected graph has a
non-cut vertex, so the extension is complete). Beyond 7, callers are
expected to stream externally produced graph6 input; `extend_connected` is
the helper that manufactures such streams one order at a time.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

from .graphs import Graph, GraphError, is_connected, iter_bits

MAX_BUILTIN_ORDER = 7

# connected graphs on 1..7 vertices; used as a completeness self-check
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}

_CANDIDATE_CAP = 1 << 22


def _refine_colors(g: Graph) -> list[int]:
    """Stable 1-dimensional color refinement with invariant class ids."""
    colors = [g.degree(v) for v in range(g.n)]
    ids = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [ids[c] for c in colors]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(g.adj[v]))))
            for v in range(g.n)
        ]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new_colors = [ids[s] for s in sigs]
        if new_colors == colors:
            return colors
        colors = new_colors


def _candidate_orders(g: Graph) -> Iterable[tuple[int, ...]]:
    colors = _refine_colors(g)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    ordered_classes = [classes[c] for c in sorted(classes)]
    total = 1
    for cls in ordered_classes:
        for i in range(2, len(cls) + 1):
            total *= i
        if total > _CANDIDATE_CAP:
            raise GraphError(
                f"canonical form search space too large ({total}+ orderings)"
            )

    def rec(i: int, prefix: tuple[int, ...]):
        if i == len(ordered_classes):
            yield prefix
            return
        for perm in permutations(ordered_classes[i]):
            yield from rec(i + 1, prefix + perm)

    yield from rec(0, ())


def canonical_form(g: Graph) -> int:
    """Minimum refinement-respecting adjacency encoding (an isomorphism key)."""
    n = g.n
    adj = g.adj
    best = None
    for order in _candidate_orders(g):
        bits = 0
        for i in range(n):
            row = adj[order[i]]
            for j in range(i + 1, n):
                bits = bits << 1 | (row >> order[j] & 1)
        if best is None or bits < best:
            best = bits
    return best if best is not None else 0


def _bits_to_graph(n: int, bits: int) -> Graph:
    rows = [0] * n
    pos = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            pos -= 1
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows, _checked=True)


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return _bits_to_graph(g.n, canonical_form(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def extend_connected(graphs: Sequence[Graph]) -> list[Graph]:
    """All connected graphs (canonical, deduplicated) on n+1 vertices
    obtainable from the given connected graphs on n vertices."""
    seen: dict[int, int] = {}  # canonical bits -> edge count
    out_n = None
    for g in graphs:
        n = g.n
        if out_n is None:
            out_n = n + 1
        elif out_n != n + 1:
            raise GraphError("extend_connected requires graphs of a single order")
        for nbhd in range(1, 1 << n):
            rows = list(g.adj) + [nbhd]
            for v in iter_bits(nbhd):
                rows[v] |= 1 << n
            h = Graph(n + 1, rows, _checked=True)
            bits = canonical_form(h)
            if bits not in seen:
                seen[bits] = h.edge_count()
    assert out_n is not None, "extend_connected needs at least one input graph"
    ordered = sorted(seen.items(), key=lambda kv: (kv[1], kv[0]))
    return [_bits_to_graph(out_n, bits) for bits, _ in ordered]


_builtin_cache: dict[int, list[Graph]] = {}


def enumerate_connected(n: int) -> list[Graph]:
    """All connected graphs on n vertices, one canonical representative per
    isomorphism class, in a fixed order (edge count, then encoding).

    The built-in generator stops at n = 7; stream externally generated
    graph6 input for larger orders.
    """
    if n < 1:
        raise GraphError(f"order must be >= 1, got {n}")
    if n > MAX_BUILTIN_ORDER:
        raise GraphError(
            f"built-in enumeration stops at n = {MAX_BUILTIN_ORDER}; "
            "stream external graph6 input for larger orders"
        )
    if n not in _builtin_cache:
        if n == 1:
            _builtin_cache[n] = [Graph(1, (0,), _checked=True)]
        else:
            _builtin_cache[n] = extend_connected(enumerate_connected(n - 1))
        count = len(_builtin_cache[n])
        if count != CONNECTED_COUNTS[n]:
            raise AssertionError(
                f"enumeration produced {count} graphs at n={n}, "
                f"expected {CONNECTED_COUNTS[n]}"
            )
    return list(_builtin_cache[n])
