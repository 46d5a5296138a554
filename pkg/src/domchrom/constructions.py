"""Builders for the named graph families, with role labelings preserved.

Families: the odd-parity family (order 4k-3+t), the even-parity family
(order 3k+t), complete bipartite graphs (in graphs.py), and the rule-based
class of candidate D(3) graphs described by a blueprint of free choices.

Vertex order is class by class in name order, so the emitted graph6 strings
are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .graphs import Graph, GraphError, VertexLabeling, from_edge_list

OPPOSITE = "opposite"
SINGLETON = "v3"


@dataclass(frozen=True)
class DOddSpec:
    """Parameters of the odd-parity family: odd k >= 3, order n >= 4k-3."""

    k: int
    n: int

    def __post_init__(self):
        if self.k % 2 == 0:
            raise GraphError(f"k must be odd, got {self.k}")
        if self.k < 3:
            raise GraphError(f"k must be >= 3, got {self.k}")
        if self.n < 4 * self.k - 3:
            raise GraphError(f"n must be >= 4k-3 = {4 * self.k - 3}, got {self.n}")

    @property
    def t(self) -> int:
        return self.n - (4 * self.k - 3)


@dataclass(frozen=True)
class DEvenSpec:
    """Parameters of the even-parity family: even k >= 4, order n >= 3k."""

    k: int
    n: int

    def __post_init__(self):
        if self.k % 2 == 1:
            raise GraphError(f"k must be even, got {self.k}")
        if self.k < 4:
            raise GraphError(f"k must be >= 4, got {self.k}")
        if self.n < 3 * self.k:
            raise GraphError(f"n must be >= 3k = {3 * self.k}, got {self.n}")

    @property
    def t(self) -> int:
        return self.n - 3 * self.k


def build_d_odd(spec: DOddSpec) -> tuple[Graph, VertexLabeling]:
    """Odd-parity family member on classes P_1..P_k.

    P_i = {x_i, y_i, z_i, w_i} for i < k (P_1 additionally holds the tail
    vertices u_1..u_t), P_k = {x_k}. Blocks P_{2i-1}, P_{2i} are joined
    K_{3,3}-style on their x/y/z triples with w-vertices attached to the
    opposite y/z pair; x_1..x_k form a clique; x_k picks up all w and u
    vertices; each u is also joined to y_2 and z_2.
    """
    k, n, t = spec.k, spec.n, spec.t
    roles: dict[str, object] = {}
    index = 0
    for i in range(1, k):
        for name in ("x", "y", "z", "w"):
            roles[f"{name}{i}"] = index
            index += 1
        if i == 1:
            for j in range(1, t + 1):
                roles[f"u{j}"] = index
                index += 1
    roles[f"x{k}"] = index
    index += 1
    assert index == n

    x = {i: roles[f"x{i}"] for i in range(1, k + 1)}
    y = {i: roles[f"y{i}"] for i in range(1, k)}
    z = {i: roles[f"z{i}"] for i in range(1, k)}
    w = {i: roles[f"w{i}"] for i in range(1, k)}
    u = [roles[f"u{j}"] for j in range(1, t + 1)]

    edges = []
    for i in range(1, (k - 1) // 2 + 1):
        lo, hi = 2 * i - 1, 2 * i
        for a in (x[hi], y[hi], z[hi]):
            for b in (x[lo], y[lo], z[lo]):
                edges.append((a, b))
        edges.append((w[lo], y[hi]))
        edges.append((w[lo], z[hi]))
        edges.append((w[hi], y[lo]))
        edges.append((w[hi], z[lo]))
    clique = [x[i] for i in range(1, k + 1)]
    for a_i in range(len(clique)):
        for b_i in range(a_i + 1, len(clique)):
            edges.append((clique[a_i], clique[b_i]))
    for vert in list(w.values()) + u:
        edges.append((x[k], vert))
    for uv in u:
        edges.append((uv, y[2]))
        edges.append((uv, z[2]))

    g = from_edge_list(n, edges)

    groups: dict[str, object] = {
        "X": [x[i] for i in range(1, k)],
        "Y": list(y.values()),
        "Z": list(z.values()),
        "W": list(w.values()),
        "U": u,
    }
    for i in range(1, k):
        members = [x[i], y[i], z[i], w[i]]
        if i == 1:
            members += u
        groups[f"P{i}"] = members
    groups[f"P{k}"] = [x[k]]
    labeling = VertexLabeling({**roles, **groups}, n=n)
    labeling.assert_disjoint(f"P{i}" for i in range(1, k + 1))
    return g, labeling


def build_d_even(spec: DEvenSpec) -> tuple[Graph, VertexLabeling]:
    """Even-parity family member: P_i = {x_i, y_i, z_i} (P_1 holds the tail),
    blocks P_{2i-1} x P_{2i} joined completely, x_1..x_k a clique."""
    k, n, t = spec.k, spec.n, spec.t
    roles: dict[str, object] = {}
    index = 0
    classes: dict[int, list[int]] = {}
    for i in range(1, k + 1):
        members = []
        for name in ("x", "y", "z"):
            roles[f"{name}{i}"] = index
            members.append(index)
            index += 1
        if i == 1:
            for j in range(1, t + 1):
                roles[f"u{j}"] = index
                members.append(index)
                index += 1
        classes[i] = members
    assert index == n

    edges = []
    for i in range(1, k // 2 + 1):
        for a in classes[2 * i]:
            for b in classes[2 * i - 1]:
                edges.append((a, b))
    xs = [roles[f"x{i}"] for i in range(1, k + 1)]
    for a_i in range(k):
        for b_i in range(a_i + 1, k):
            edges.append((xs[a_i], xs[b_i]))

    g = from_edge_list(n, edges)
    groups: dict[str, object] = {
        "X": xs,
        "Y": [roles[f"y{i}"] for i in range(1, k + 1)],
        "Z": [roles[f"z{i}"] for i in range(1, k + 1)],
        "U": [roles[f"u{j}"] for j in range(1, t + 1)],
    }
    for i in range(1, k + 1):
        groups[f"P{i}"] = classes[i]
    labeling = VertexLabeling({**roles, **groups}, n=n)
    labeling.assert_disjoint(f"P{i}" for i in range(1, k + 1))
    return g, labeling


# ---------------------------------------------------------------------------
# The rule-based class of candidate D(3) graphs.


@dataclass(frozen=True)
class D3Blueprint:
    """Free choices of the three-class construction.

    Canonical vertex indices: V1 = {x1=0, y2=1, 2..a-1}, V2 = {y1=a,
    y3=a+1, a+2..a+b-1}, V3 = {x3=a+b}. rule2_set are the extra neighbors
    of x1 in V2 (y3 excluded; listing y1 is a harmless no-op since rule 1
    already joins it); rule3_set are the extra neighbors of y3 in V1 (x1
    excluded; y2 likewise a no-op). rule4_assign maps every remaining
    vertex to "opposite" (joined to all of the opposite class) or "v3"
    (joined to x3).
    """

    a: int
    b: int
    rule2_set: frozenset[int] = frozenset()
    rule3_set: frozenset[int] = frozenset()
    rule4_assign: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rule2_set", frozenset(self.rule2_set))
        object.__setattr__(self, "rule3_set", frozenset(self.rule3_set))
        object.__setattr__(self, "rule4_assign", dict(self.rule4_assign))

    def __hash__(self):
        return hash(
            (self.a, self.b, self.rule2_set, self.rule3_set,
             tuple(sorted(self.rule4_assign.items())))
        )

    def __eq__(self, other):
        if not isinstance(other, D3Blueprint):
            return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and self.rule2_set == other.rule2_set
            and self.rule3_set == other.rule3_set
            and dict(self.rule4_assign) == dict(other.rule4_assign)
        )

    # Named indices in the canonical layout.
    @property
    def x1(self) -> int:
        return 0

    @property
    def y2(self) -> int:
        return 1

    @property
    def y1(self) -> int:
        return self.a

    @property
    def y3(self) -> int:
        return self.a + 1

    @property
    def x3(self) -> int:
        return self.a + self.b

    def v1_vertices(self) -> range:
        return range(0, self.a)

    def v2_vertices(self) -> range:
        return range(self.a, self.a + self.b)

    def v1_free(self) -> range:
        return range(2, self.a)

    def v2_free(self) -> range:
        return range(self.a + 2, self.a + self.b)


@dataclass(frozen=True)
class BlueprintVerdict:
    ok: bool
    violations: tuple[tuple[str, tuple | None], ...]

    def __bool__(self):
        return self.ok


def _blueprint_edges(bp: D3Blueprint) -> list[tuple[int, int]]:
    edges = []
    # rule 1: y1 joined to all of V1, y2 joined to all of V2
    for v in bp.v1_vertices():
        edges.append((bp.y1, v))
    for v in bp.v2_vertices():
        if v != bp.y1:
            edges.append((bp.y2, v))
    # rule 2: x1-x3 plus chosen extras in V2 - {y3}
    edges.append((bp.x1, bp.x3))
    for v in bp.rule2_set:
        edges.append((bp.x1, v))
    # rule 3: y3-x3 plus chosen extras in V1 - {x1}
    edges.append((bp.y3, bp.x3))
    for v in bp.rule3_set:
        edges.append((bp.y3, v))
    # rule 4: every remaining vertex joined to the opposite class or to x3
    for v in bp.v1_free():
        if bp.rule4_assign[v] == OPPOSITE:
            for uvert in bp.v2_vertices():
                edges.append((v, uvert))
        else:
            edges.append((v, bp.x3))
    for v in bp.v2_free():
        if bp.rule4_assign[v] == OPPOSITE:
            for uvert in bp.v1_vertices():
                edges.append((v, uvert))
        else:
            edges.append((v, bp.x3))
    return edges


def _check_shape(bp: D3Blueprint) -> None:
    """Reject structurally malformed blueprints (bad indices), not rule breaks."""
    v1_free = set(bp.v1_free())
    v2_free = set(bp.v2_free())
    if not bp.rule2_set <= set(bp.v2_vertices()) - {bp.y3}:
        raise GraphError("rule2_set must be a subset of V2 - {y3}")
    if not bp.rule3_set <= set(bp.v1_vertices()) - {bp.x1}:
        raise GraphError("rule3_set must be a subset of V1 - {x1}")
    if set(bp.rule4_assign) != v1_free | v2_free:
        raise GraphError(
            "rule4_assign must cover exactly (V1 - {x1, y2}) and (V2 - {y1, y3})"
        )
    for v, target in bp.rule4_assign.items():
        if target not in (OPPOSITE, SINGLETON):
            raise GraphError(f"rule4_assign[{v}] must be {OPPOSITE!r} or {SINGLETON!r}")


def validate_blueprint(bp: D3Blueprint) -> BlueprintVerdict:
    """Check the built graph against the class rules; list violations."""
    violations: list[tuple[str, tuple | None]] = []
    if bp.a < 3:
        violations.append(("size: a >= 3 required", (bp.a,)))
    if bp.b < 3:
        violations.append(("size: b >= 3 required", (bp.b,)))
    if violations:
        return BlueprintVerdict(False, tuple(violations))
    _check_shape(bp)
    g = from_edge_list(bp.a + bp.b + 1, _blueprint_edges(bp))
    v1_mask = sum(1 << v for v in bp.v1_vertices())
    v2_mask = sum(1 << v for v in bp.v2_vertices())
    x3 = bp.x3

    # rule 4, exclusivity: each assigned vertex dominates exactly one of the
    # opposite class and {x3} in the finished graph.
    for v in bp.v1_free():
        dominates_v2 = v2_mask & ~g.adj[v] == 0
        meets_x3 = bool(g.adj[v] >> x3 & 1)
        if dominates_v2 and meets_x3:
            violations.append(("rule4: dominates both V2 and V3", (v,)))
        if not dominates_v2 and not meets_x3:
            violations.append(("rule4: dominates neither V2 nor V3", (v,)))
    for v in bp.v2_free():
        dominates_v1 = v1_mask & ~g.adj[v] == 0
        meets_x3 = bool(g.adj[v] >> x3 & 1)
        if dominates_v1 and meets_x3:
            violations.append(("rule4: dominates both V1 and V3", (v,)))
        if not dominates_v1 and not meets_x3:
            violations.append(("rule4: dominates neither V1 nor V3", (v,)))

    # rule 4, tail: x3 keeps at least two non-neighbors in each of V1, V2.
    if (v1_mask & ~g.adj[x3]).bit_count() < 2:
        violations.append(("rule4-tail: x3 needs >= 2 non-neighbors in V1", None))
    if (v2_mask & ~g.adj[x3]).bit_count() < 2:
        violations.append(("rule4-tail: x3 needs >= 2 non-neighbors in V2", None))

    # rule 5: no mutually-unique non-adjacent cross pair.
    for v in bp.v1_vertices():
        non_nbrs = v2_mask & ~g.adj[v]
        for uvert in bp.v2_vertices():
            if g.adj[v] >> uvert & 1:
                continue
            x_other = non_nbrs & ~(1 << uvert)
            y_other = v1_mask & ~g.adj[uvert] & ~(1 << v)
            if x_other == 0 and y_other == 0:
                violations.append(("rule5: mutually unique non-neighbors", (v, uvert)))
    return BlueprintVerdict(not violations, tuple(violations))


def build_d3(bp: D3Blueprint) -> tuple[Graph, VertexLabeling]:
    """Build the blueprint's graph; raises when any class rule is violated."""
    verdict = validate_blueprint(bp)
    if not verdict.ok:
        details = "; ".join(
            name + (f" witness {w}" if w else "") for name, w in verdict.violations
        )
        raise GraphError(f"blueprint violates the class rules: {details}")
    n = bp.a + bp.b + 1
    g = from_edge_list(n, _blueprint_edges(bp))
    labeling = VertexLabeling(
        {
            "x1": bp.x1,
            "y2": bp.y2,
            "y1": bp.y1,
            "y3": bp.y3,
            "x3": bp.x3,
            "V1": bp.v1_vertices(),
            "V2": bp.v2_vertices(),
            "V3": [bp.x3],
        },
        n=n,
    )
    labeling.assert_disjoint(("V1", "V2", "V3"))
    return g, labeling


def enumerate_d3_blueprints(
    a: int, b: int, limit: int | None = None
) -> Iterator[D3Blueprint]:
    """Valid blueprints for class sizes (a, b) in a fixed deterministic order.

    The choice space is normalized: rule2/rule3 subsets range over the free
    vertices only (adding y1 or y2 never changes the built graph).
    """
    if a < 3 or b < 3:
        raise GraphError(f"class sizes must be >= 3, got ({a}, {b})")
    v1_free = list(range(2, a))
    v2_free = list(range(a + 2, a + b))
    n_free = len(v1_free) + len(v2_free)
    emitted = 0
    for r2_bits in range(1 << len(v2_free)):
        rule2 = frozenset(v for i, v in enumerate(v2_free) if r2_bits >> i & 1)
        for r3_bits in range(1 << len(v1_free)):
            rule3 = frozenset(v for i, v in enumerate(v1_free) if r3_bits >> i & 1)
            for assign_bits in range(1 << n_free):
                assign = {}
                for i, v in enumerate(v1_free + v2_free):
                    assign[v] = SINGLETON if assign_bits >> i & 1 else OPPOSITE
                bp = D3Blueprint(a, b, rule2, rule3, assign)
                if validate_blueprint(bp).ok:
                    yield bp
                    emitted += 1
                    if limit is not None and emitted >= limit:
                        return
