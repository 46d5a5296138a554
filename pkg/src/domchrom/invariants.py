"""Exact computation of the five invariants: gamma, gamma_t, chi, chi_d, chi_dom.

Solver strategy: domination numbers by branch-and-bound on the set of
undominated vertices; chromatic numbers by iterative deepening on k seeded
with a maximum-clique lower bound; the dominator/dominated variants reuse
the coloring backtracking skeleton with their side constraint propagated
incrementally. Every solver is paired with a deterministic witness
extraction: the witness returned is the lexicographically least optimal one
(dominating sets compared as sorted vertex tuples, colorings by their
vertex-to-class assignment sequence with classes numbered in order of first
appearance).

Convention: a vertex dominates its own color class only when that class is
exactly the singleton {v}. Cross-class domination always means "adjacent to
every vertex of the class".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import Graph, GraphError, is_connected, iter_bits, mask_of


class DisconnectedError(GraphError):
    """Operation defined only for connected graphs."""


class UndefinedInvariantError(GraphError):
    """The requested invariant does not exist for this graph."""


# ---------------------------------------------------------------------------
# Domain types


@dataclass(frozen=True)
class Coloring:
    """Ordered partition into independent color classes.

    Classes are stored canonically: each class as a frozenset, classes
    ordered by their minimum vertex.
    """

    classes: tuple[frozenset[int], ...]

    @staticmethod
    def from_classes(classes: Iterable[Iterable[int]]) -> "Coloring":
        normalized = [frozenset(c) for c in classes]
        if any(not c for c in normalized):
            raise GraphError("color classes must be non-empty")
        normalized.sort(key=min)
        return Coloring(tuple(normalized))

    @staticmethod
    def from_masks(masks: Iterable[int]) -> "Coloring":
        return Coloring.from_classes(tuple(iter_bits(m)) for m in masks if m)

    @property
    def k(self) -> int:
        return len(self.classes)

    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(c) for c in self.classes)

    def assignment(self, n: int) -> tuple[int, ...]:
        assign = [-1] * n
        for i, cls in enumerate(self.classes):
            for v in cls:
                if not (0 <= v < n) or assign[v] != -1:
                    raise GraphError("classes do not partition 0..n-1")
                assign[v] = i
        if any(a == -1 for a in assign):
            raise GraphError("classes do not cover 0..n-1")
        return tuple(assign)

    def class_of(self, v: int) -> int:
        for i, cls in enumerate(self.classes):
            if v in cls:
                return i
        raise GraphError(f"vertex {v} is in no class")


@dataclass(frozen=True)
class DominatingWitness:
    vertices: frozenset[int]
    kind: str  # "plain" or "total"

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))


@dataclass(frozen=True)
class InvariantReport:
    """The five exact invariants with optimal witnesses.

    gamma_t and chi_dom are None exactly for the single-vertex graph, where
    no total dominating set and no dominated coloring exist.
    """

    n: int
    edge_count: int
    gamma: int
    gamma_t: int | None
    chi: int
    chi_d: int
    chi_dom: int | None
    dk: int | None
    gamma_witness: DominatingWitness
    gamma_t_witness: DominatingWitness | None
    chi_witness: Coloring
    chi_d_witness: Coloring
    chi_dom_witness: Coloring | None

    def record(self, graph6: str | None = None) -> dict[str, object]:
        """Flat key-value record (one CSV row / one JSON object)."""
        return {
            "n": self.n,
            "edge_count": self.edge_count,
            "gamma": self.gamma,
            "gamma_t": self.gamma_t,
            "chi": self.chi,
            "chi_d": self.chi_d,
            "chi_dom": self.chi_dom,
            "dk": self.dk,
            "graph6": graph6,
        }


# ---------------------------------------------------------------------------
# Predicates


def is_dominating_set(g: Graph, vertices: Iterable[int]) -> bool:
    mask = mask_of(vertices)
    covered = mask
    for v in iter_bits(mask):
        covered |= g.adj[v]
    return covered == (1 << g.n) - 1


def is_total_dominating_set(g: Graph, vertices: Iterable[int]) -> bool:
    mask = mask_of(vertices)
    covered = 0
    for v in iter_bits(mask):
        covered |= g.adj[v]
    return covered == (1 << g.n) - 1


def is_partition(g: Graph, coloring: Coloring) -> bool:
    total = 0
    for cls in coloring.classes:
        m = mask_of(cls)
        if m & total:
            return False
        total |= m
    return total == (1 << g.n) - 1


def is_proper_coloring(g: Graph, coloring: Coloring) -> bool:
    if not is_partition(g, coloring):
        return False
    for m in coloring.masks():
        for v in iter_bits(m):
            if g.adj[v] & m:
                return False
    return True


def dominates_class(g: Graph, v: int, coloring: Coloring, i: int) -> bool:
    """True iff v is adjacent to all of class i, or class i is exactly {v}."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range")
    if not (0 <= i < coloring.k):
        raise GraphError(f"class index {i} out of range for k={coloring.k}")
    m = mask_of(coloring.classes[i])
    if m == 1 << v:
        return True
    return m & ~g.adj[v] == 0


def is_dominator_coloring(g: Graph, coloring: Coloring) -> bool:
    if not is_proper_coloring(g, coloring):
        return False
    masks = coloring.masks()
    for v in range(g.n):
        bit = 1 << v
        if not any(m == bit or m & ~g.adj[v] == 0 for m in masks):
            return False
    return True


def is_dominated_coloring(g: Graph, coloring: Coloring) -> bool:
    if not is_proper_coloring(g, coloring):
        return False
    for m in coloring.masks():
        if not any(m & ~g.adj[v] == 0 for v in range(g.n)):
            return False
    return True


# ---------------------------------------------------------------------------
# Domination numbers


def _greedy_cover_size(n: int, covers: tuple[int, ...]) -> int:
    full = (1 << n) - 1
    covered = 0
    count = 0
    while covered != full:
        best_gain = -1
        best_v = -1
        for v in range(n):
            gain = (covers[v] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
        if best_gain <= 0:
            raise UndefinedInvariantError("no cover exists")
        covered |= covers[best_v]
        count += 1
    return count


def _min_cover_size(n: int, covers: tuple[int, ...], undom_covers: tuple[int, ...]) -> int:
    """Smallest set S with union(covers[v] for v in S) == all vertices.

    undom_covers[u] lists the vertices whose cover contains u (the branching
    candidates when u is the chosen undominated vertex).
    """
    full = (1 << n) - 1
    if full == 0:
        return 0
    best = _greedy_cover_size(n, covers)

    def search(count: int, covered: int) -> None:
        nonlocal best
        if covered == full:
            if count < best:
                best = count
            return
        if count + 1 >= best:
            return
        uncovered = full & ~covered
        max_gain = 0
        for v in range(n):
            gain = (covers[v] & uncovered).bit_count()
            if gain > max_gain:
                max_gain = gain
        need = (uncovered.bit_count() + max_gain - 1) // max_gain
        if count + need >= best:
            return
        # branch on the undominated vertex with fewest coverers
        branch_u = -1
        branch_size = n + 1
        for u in iter_bits(uncovered):
            size = undom_covers[u].bit_count()
            if size < branch_size:
                branch_size = size
                branch_u = u
        candidates = sorted(
            iter_bits(undom_covers[branch_u]),
            key=lambda w: (-(covers[w] & uncovered).bit_count(), w),
        )
        for w in candidates:
            search(count + 1, covered | covers[w])

    search(0, 0)
    return best


def _lex_min_cover(n: int, covers: tuple[int, ...], size: int) -> tuple[int, ...]:
    """Lexicographically least covering set of exactly the given size."""
    full = (1 << n) - 1
    latest_cover = [0] * n  # highest-index vertex covering u
    for u in range(n):
        for v in range(n):
            if covers[v] >> u & 1:
                latest_cover[u] = v

    def dfs(start: int, chosen: list[int], covered: int) -> tuple[int, ...] | None:
        if len(chosen) == size:
            return tuple(chosen) if covered == full else None
        remaining = size - len(chosen)
        uncovered = full & ~covered
        if uncovered:
            max_gain = 0
            for v in range(start, n):
                gain = (covers[v] & uncovered).bit_count()
                if gain > max_gain:
                    max_gain = gain
            if max_gain * remaining < uncovered.bit_count():
                return None
            for u in iter_bits(uncovered):
                if latest_cover[u] < start:
                    return None
        for v in range(start, n - remaining + 1):
            result = dfs(v + 1, chosen + [v], covered | covers[v])
            if result is not None:
                return result
        return None

    result = dfs(0, [], 0)
    if result is None:
        raise AssertionError("no witness at the optimal size; solver bug")
    return result


def domination_number(g: Graph) -> tuple[int, DominatingWitness]:
    if g.n == 0:
        raise GraphError("domination number is undefined for the empty graph")
    closed = tuple(g.adj[v] | 1 << v for v in range(g.n))
    gamma = _min_cover_size(g.n, closed, closed)
    witness = _lex_min_cover(g.n, closed, gamma)
    return gamma, DominatingWitness(frozenset(witness), "plain")


def total_domination_number(g: Graph) -> tuple[int, DominatingWitness]:
    if g.n == 0:
        raise GraphError("total domination number is undefined for the empty graph")
    for v in range(g.n):
        if g.adj[v] == 0:
            raise UndefinedInvariantError(
                f"total domination is undefined: vertex {v} is isolated"
            )
    gamma_t = _min_cover_size(g.n, g.adj, g.adj)
    witness = _lex_min_cover(g.n, g.adj, gamma_t)
    return gamma_t, DominatingWitness(frozenset(witness), "total")


# ---------------------------------------------------------------------------
# Clique lower bound


def max_clique(g: Graph) -> tuple[int, int]:
    """(size, mask) of a maximum clique; deterministic branch order."""
    best_size = 0
    best_mask = 0

    def expand(r_size: int, r_mask: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if cand == 0:
            if r_size > best_size:
                best_size = r_size
                best_mask = r_mask
            return
        while cand:
            if r_size + cand.bit_count() <= best_size:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(r_size + 1, r_mask | 1 << v, cand & g.adj[v])

    expand(0, 0, (1 << g.n) - 1)
    return best_size, best_mask


# ---------------------------------------------------------------------------
# Coloring backtracking skeletons

_MODE_PROPER = 0
_MODE_DOMINATOR = 1
_MODE_DOMINATED = 2


def _solve_coloring(
    g: Graph,
    k: int,
    mode: int,
    order: tuple[int, ...],
    enumerate_all: bool = False,
) -> Iterator[tuple[int, ...]]:
    """Backtracking over colorings with exactly k classes, following `order`.

    Yields the class member masks of each solution. With enumerate_all=False
    the search stops after the first solution. Classes are numbered in order
    of first use, so with `order = (0, 1, ..., n-1)` solutions appear in
    lexicographic order of their assignment sequences.
    """
    n = g.n
    if k <= 0 or k > n:
        return
    full = (1 << n) - 1
    adj = g.adj
    members = [0] * k
    cls = [-1] * n
    all_k = (1 << k) - 1
    # dominator mode: classes v could still fully dominate
    pot = [all_k] * n
    # dominated mode: vertices still adjacent to all of the class
    dominators = [full] * k

    def place(v: int, c: int) -> tuple[bool, list[tuple[int, int]]]:
        """Apply the assignment, returning (ok, undo log)."""
        undo: list[tuple[int, int]] = []
        prev = members[c]
        members[c] |= 1 << v
        cls[v] = c
        ok = True
        if mode == _MODE_DOMINATOR:
            cbit = 1 << c
            non_nbrs = full & ~adj[v]
            for u in iter_bits(non_nbrs):
                if pot[u] & cbit:
                    undo.append((u, pot[u]))
                    pot[u] &= ~cbit
                    if pot[u] == 0:
                        if cls[u] == -1:
                            ok = False
                        elif members[cls[u]] != 1 << u:
                            ok = False
            if ok and prev and prev.bit_count() == 1:
                w = prev.bit_length() - 1
                if pot[w] == 0:
                    ok = False
        elif mode == _MODE_DOMINATED:
            undo.append((c, dominators[c]))
            if prev == 0:
                dominators[c] = adj[v]
            else:
                dominators[c] &= adj[v]
            if dominators[c] == 0:
                ok = False
        return ok, undo

    def unplace(v: int, c: int, undo: list[tuple[int, int]]) -> None:
        members[c] &= ~(1 << v)
        cls[v] = -1
        if mode == _MODE_DOMINATOR:
            for u, old in undo:
                pot[u] = old
        elif mode == _MODE_DOMINATED:
            for c2, old in undo:
                dominators[c2] = old

    def backtrack(pos: int, used: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            if used == k:
                yield tuple(members)
            return
        if used + (n - pos) < k:
            return
        v = order[pos]
        limit = used + 1 if used < k else k
        for c in range(limit):
            if members[c] & adj[v]:
                continue
            ok, undo = place(v, c)
            if ok:
                yield from backtrack(pos + 1, max(used, c + 1))
            unplace(v, c, undo)

    if enumerate_all:
        yield from backtrack(0, 0)
    else:
        for solution in backtrack(0, 0):
            yield solution
            return


def _search_order(g: Graph, clique_mask: int) -> tuple[int, ...]:
    """Clique vertices first, then remaining by degree descending."""
    clique = sorted(iter_bits(clique_mask))
    rest = sorted(
        (v for v in range(g.n) if not clique_mask >> v & 1),
        key=lambda v: (-g.degree(v), v),
    )
    return tuple(clique + rest)


def _feasible(g: Graph, k: int, mode: int, order: tuple[int, ...]) -> bool:
    for _ in _solve_coloring(g, k, mode, order):
        return True
    return False


def _lex_witness(g: Graph, k: int, mode: int) -> Coloring:
    identity = tuple(range(g.n))
    for masks in _solve_coloring(g, k, mode, identity):
        return Coloring.from_masks(masks)
    raise AssertionError("no coloring at the optimal k; solver bug")


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    if g.n == 0:
        raise GraphError("chromatic number is undefined for the empty graph")
    lb, clique_mask = max_clique(g)
    order = _search_order(g, clique_mask)
    k = lb
    while not _feasible(g, k, _MODE_PROPER, order):
        k += 1
    return k, _lex_witness(g, k, _MODE_PROPER)


def dominator_chromatic_number(g: Graph) -> tuple[int, Coloring]:
    if g.n == 0:
        raise GraphError("dominator chromatic number is undefined for the empty graph")
    if not is_connected(g):
        raise DisconnectedError("dominator chromatic number requires a connected graph")
    lb, clique_mask = max_clique(g)
    order = _search_order(g, clique_mask)
    while not _feasible(g, lb, _MODE_PROPER, order):
        lb += 1
    k = lb  # chi(G) is a lower bound
    while not _feasible(g, k, _MODE_DOMINATOR, order):
        k += 1
    return k, _lex_witness(g, k, _MODE_DOMINATOR)


def dominated_chromatic_number(g: Graph) -> tuple[int, Coloring]:
    if g.n == 0:
        raise GraphError("dominated chromatic number is undefined for the empty graph")
    if g.n == 1:
        raise UndefinedInvariantError(
            "dominated chromatic number is undefined for the single-vertex graph"
        )
    if not is_connected(g):
        raise DisconnectedError("dominated chromatic number requires a connected graph")
    lb, clique_mask = max_clique(g)
    order = _search_order(g, clique_mask)
    while not _feasible(g, lb, _MODE_PROPER, order):
        lb += 1
    k = lb
    while not _feasible(g, k, _MODE_DOMINATED, order):
        k += 1
    return k, _lex_witness(g, k, _MODE_DOMINATED)


def enumerate_optimal_dominator_colorings(g: Graph, k: int) -> Iterator[Coloring]:
    """All dominator colorings with exactly k = chi_d(G) classes.

    Each coloring is produced exactly once, classes canonically ordered by
    minimum vertex, in lexicographic order of assignment sequences.
    """
    chi_d, _ = dominator_chromatic_number(g)
    if k != chi_d:
        raise GraphError(f"k={k} does not equal chi_d={chi_d}")
    identity = tuple(range(g.n))
    for masks in _solve_coloring(g, k, _MODE_DOMINATOR, identity, enumerate_all=True):
        yield Coloring.from_masks(masks)


# ---------------------------------------------------------------------------
# Classification


def invariant_values(g: Graph, early_exit_k: int | None = None) -> dict[str, int | None]:
    """The five values (no witnesses). With early_exit_k, stop and return a
    partial dict as soon as gamma, chi, or chi_d rules out D(early_exit_k)."""
    values: dict[str, int | None] = {}
    closed = tuple(g.adj[v] | 1 << v for v in range(g.n))
    values["gamma"] = _min_cover_size(g.n, closed, closed)
    if early_exit_k is not None and values["gamma"] != early_exit_k:
        return values
    lb, clique_mask = max_clique(g)
    order = _search_order(g, clique_mask)
    k = lb
    while not _feasible(g, k, _MODE_PROPER, order):
        k += 1
    values["chi"] = k
    if early_exit_k is not None and values["chi"] != early_exit_k:
        return values
    k = values["chi"]
    while not _feasible(g, k, _MODE_DOMINATOR, order):
        k += 1
    values["chi_d"] = k
    if early_exit_k is not None:
        return values
    if g.n == 1 or any(row == 0 for row in g.adj):
        # no dominated coloring and no total dominating set exist
        values["chi_dom"] = None
        values["gamma_t"] = None
        return values
    k = values["chi"]
    while not _feasible(g, k, _MODE_DOMINATED, order):
        k += 1
    values["chi_dom"] = k
    values["gamma_t"] = _min_cover_size(g.n, g.adj, g.adj)
    return values


def compute_report(g: Graph) -> InvariantReport:
    """Full report with witnesses; requires a connected graph."""
    if g.n == 0:
        raise GraphError("invariants are undefined for the empty graph")
    if not is_connected(g):
        raise DisconnectedError("invariant reports require a connected graph")
    gamma, gamma_w = domination_number(g)
    chi, chi_w = chromatic_number(g)
    chi_d, chi_d_w = dominator_chromatic_number(g)
    if g.n == 1:
        gamma_t: int | None = None
        gamma_t_w = None
        chi_dom: int | None = None
        chi_dom_w = None
    else:
        gamma_t, gamma_t_w = total_domination_number(g)
        chi_dom, chi_dom_w = dominated_chromatic_number(g)
    dk = gamma if gamma == chi == chi_d else None
    assert gamma_t is None or gamma <= gamma_t
    assert chi <= chi_d
    assert chi_dom is None or chi <= chi_dom
    return InvariantReport(
        n=g.n,
        edge_count=g.edge_count(),
        gamma=gamma,
        gamma_t=gamma_t,
        chi=chi,
        chi_d=chi_d,
        chi_dom=chi_dom,
        dk=dk,
        gamma_witness=gamma_w,
        gamma_t_witness=gamma_t_w,
        chi_witness=chi_w,
        chi_d_witness=chi_d_w,
        chi_dom_witness=chi_dom_w,
    )


def classify_dk(g: Graph) -> InvariantReport:
    """Full invariant report; report.dk is k when gamma = chi = chi_d = k."""
    return compute_report(g)
