"""Brute-force reference implementations of every invariant and predicate.

Everything here is written straight from the definitions: subsets by
increasing size, all set partitions, all vertex permutations, minors by
recursive contraction. These routines double-check the optimized solvers
and stay deliberately independent of them; they are only meant for small
orders (roughly n <= 8).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .graphs import Graph, iter_bits


# ---------------------------------------------------------------------------
# Predicates, straight from the definitions.


def dominates(g: Graph, d_mask: int) -> bool:
    """Every vertex is in the set or adjacent to it."""
    covered = d_mask
    for v in iter_bits(d_mask):
        covered |= g.adj[v]
    return covered == (1 << g.n) - 1


def totally_dominates(g: Graph, d_mask: int) -> bool:
    """Every vertex (members included) has a neighbor in the set."""
    covered = 0
    for v in iter_bits(d_mask):
        covered |= g.adj[v]
    return covered == (1 << g.n) - 1


def blocks_are_independent(g: Graph, blocks: tuple[int, ...]) -> bool:
    for block in blocks:
        for v in iter_bits(block):
            if g.adj[v] & block:
                return False
    return True


def vertex_dominates_block(g: Graph, v: int, block: int) -> bool:
    """Adjacent to all of the block, or the block is exactly {v}."""
    if block == 1 << v:
        return True
    return block & ~g.adj[v] == 0


def blocks_form_dominator_coloring(g: Graph, blocks: tuple[int, ...]) -> bool:
    for v in range(g.n):
        if not any(vertex_dominates_block(g, v, b) for b in blocks):
            return False
    return True


def blocks_form_dominated_coloring(g: Graph, blocks: tuple[int, ...]) -> bool:
    for block in blocks:
        if not any(block & ~g.adj[v] == 0 for v in range(g.n)):
            return False
    return True


# ---------------------------------------------------------------------------
# Invariants by exhaustive search.


def min_dominating_set(g: Graph) -> tuple[int, tuple[int, ...]]:
    """(gamma, lexicographically least witness) by subsets of increasing size."""
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if dominates(g, mask):
                return size, subset
    raise AssertionError("unreachable: V(G) always dominates")


def min_total_dominating_set(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """None when some vertex is isolated (no total dominating set exists)."""
    if any(row == 0 for row in g.adj):
        return None
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if totally_dominates(g, mask):
                return size, subset
    return None


def set_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of {0..n-1} as bitmask blocks ordered by minimum element."""
    if n == 0:
        yield ()
        return

    def extend(v: int, blocks: list[int]) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(blocks)
            return
        bit = 1 << v
        for i in range(len(blocks)):
            blocks[i] |= bit
            yield from extend(v + 1, blocks)
            blocks[i] &= ~bit
        blocks.append(bit)
        yield from extend(v + 1, blocks)
        blocks.pop()

    yield from extend(0, [])


def chromatic_number(g: Graph) -> int:
    best = g.n if g.n else 0
    for blocks in set_partitions(g.n):
        if len(blocks) < best and blocks_are_independent(g, blocks):
            best = len(blocks)
    return best if g.n else 0


def dominator_chromatic_number(g: Graph) -> int:
    best = g.n
    for blocks in set_partitions(g.n):
        if (
            len(blocks) < best
            and blocks_are_independent(g, blocks)
            and blocks_form_dominator_coloring(g, blocks)
        ):
            best = len(blocks)
    return best


def dominated_chromatic_number(g: Graph) -> int | None:
    """None when no dominated coloring exists (the single-vertex graph)."""
    best: int | None = None
    for blocks in set_partitions(g.n):
        if (
            (best is None or len(blocks) < best)
            and blocks_are_independent(g, blocks)
            and blocks_form_dominated_coloring(g, blocks)
        ):
            best = len(blocks)
    return best


def dominator_colorings(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All proper dominator colorings with exactly k blocks (canonical order)."""
    found = []
    for blocks in set_partitions(g.n):
        if (
            len(blocks) == k
            and blocks_are_independent(g, blocks)
            and blocks_form_dominator_coloring(g, blocks)
        ):
            found.append(blocks)
    return found


# ---------------------------------------------------------------------------
# Isomorphism-class machinery by full permutation search.


def adjacency_bits(g: Graph) -> int:
    """Upper-triangle adjacency packed into an int (row-major, msb first)."""
    bits = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            bits = bits << 1 | (g.adj[u] >> v & 1)
    return bits


def canonical_form(g: Graph) -> int:
    """Minimum adjacency encoding over all vertex permutations."""
    from itertools import permutations

    best = None
    for perm in permutations(range(g.n)):
        bits = 0
        for i in range(g.n):
            pi = perm[i]
            for j in range(i + 1, g.n):
                bits = bits << 1 | (g.adj[pi] >> perm[j] & 1)
        if best is None or bits < best:
            best = bits
    return best if best is not None else 0


def connected_graphs(n: int) -> list[int]:
    """Canonical forms of all connected graphs on n vertices (filter + dedupe)."""
    from .graphs import is_connected

    pairs = list(combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph(n, rows, _checked=True)
        if is_connected(g):
            forms.add(canonical_form(g))
    return sorted(forms)


# ---------------------------------------------------------------------------
# Planarity oracle: Kuratowski minors by recursive edge contraction.


def _has_k5_subgraph(g: Graph) -> bool:
    if g.n < 5:
        return False
    for subset in combinations(range(g.n), 5):
        if all(g.adj[u] >> v & 1 for u, v in combinations(subset, 2)):
            return True
    return False


def _has_k33_subgraph(g: Graph) -> bool:
    if g.n < 6:
        return False
    for subset in combinations(range(g.n), 6):
        for left in combinations(subset, 3):
            if subset[0] not in left:
                continue  # fix one side to halve the work
            right = tuple(v for v in subset if v not in left)
            if all(g.adj[u] >> v & 1 for u in left for v in right):
                return True
    return False


def _contract(g: Graph, u: int, v: int) -> Graph:
    """Contract edge uv; v merges into u, vertices reindexed densely."""
    keep = [w for w in range(g.n) if w != v]
    pos = {w: i for i, w in enumerate(keep)}
    rows = [0] * (g.n - 1)
    for w in keep:
        merged = g.adj[w]
        if w == u:
            merged |= g.adj[v]
        for x in iter_bits(merged):
            if x == v:
                x = u
            if x != w:
                rows[pos[w]] |= 1 << pos[x]
    return Graph(g.n - 1, rows, _checked=True)


_minor_cache: dict[tuple[int, tuple[int, ...]], bool] = {}


def has_kuratowski_minor(g: Graph) -> bool:
    """True iff G has a K_5 or K_{3,3} minor (so, iff G is non-planar)."""
    key = (g.n, g.adj)
    cached = _minor_cache.get(key)
    if cached is not None:
        return cached
    if _has_k5_subgraph(g) or _has_k33_subgraph(g):
        _minor_cache[key] = True
        return True
    result = False
    if g.n > 5:
        for u, v in g.edges():
            if has_kuratowski_minor(_contract(g, u, v)):
                result = True
                break
    elif g.n == 5:
        result = False  # K5 subgraph already checked; contractions only shrink
    _minor_cache[key] = result
    return result


def is_planar(g: Graph) -> bool:
    return not has_kuratowski_minor(g)
