#!/usr/bin/env python3
"""Tour of the five exact invariants on small graphs.

gamma   = domination number
gamma_t = total domination number
chi     = chromatic number
chi_d   = dominator chromatic number (every vertex dominates a class)
chi_dom = dominated chromatic number (every class has a dominating vertex)

A graph with gamma = chi = chi_d = k is called a D(k) graph.
"""

from domchrom import (
    Coloring,
    complete_bipartite,
    compute_report,
    dominates_class,
    from_edge_list,
    to_graph6,
)


def show(name, g):
    r = compute_report(g)
    print(f"{name:14s} n={r.n:2d} gamma={r.gamma} gamma_t={r.gamma_t} "
          f"chi={r.chi} chi_d={r.chi_d} chi_dom={r.chi_dom} dk={r.dk}")
    return r


print("== basic zoo ==")
show("K_1", from_edge_list(1, []))
show("P_4", from_edge_list(4, [(0, 1), (1, 2), (2, 3)]))
show("C_4 = K_{2,2}", from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
show("C_5", from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]))
show("K_{2,3}", complete_bipartite(2, 3)[0])
show("K_{3,3}", complete_bipartite(3, 3)[0])

print()
print("== witnesses are optimal and deterministic ==")
p4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
r = show("P_4 again", p4)
print("  minimum dominating set:", r.gamma_witness.sorted_vertices())
print("  optimal dominator coloring:", [sorted(c) for c in r.chi_d_witness.classes])
print("  graph6:", to_graph6(p4))

print()
print("== the own-singleton convention ==")
# A vertex dominates its own class only when the class is exactly itself.
coloring = Coloring.from_classes([[0, 2], [1], [3]])
print("  P_4, classes {0,2},{1},{3}:")
print("  vertex 3 dominates its own singleton {3}:", dominates_class(p4, 3, coloring, 2))
print("  vertex 0 does not dominate its own class {0,2}:",
      not dominates_class(p4, 0, coloring, 0))

print()
print("== K_{2,q} graphs are the planar D(2) family ==")
for q in (2, 3, 4, 5):
    show(f"K_{{2,{q}}}", complete_bipartite(2, q)[0])
