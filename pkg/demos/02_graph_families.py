#!/usr/bin/env python3
"""The two parameterized D(k) families and their structure.

The odd-parity family needs order n >= 4k-3 (odd k >= 3); the even-parity
family needs n >= 3k (even k >= 4). Together they realize a D(k) graph of
every order n >= 4k-3 for every k >= 2.
"""

from domchrom import (
    DEvenSpec,
    DOddSpec,
    build_d_even,
    build_d_odd,
    compute_report,
    find_total_dominating_transversal,
    is_dominating_set,
    to_dot,
    to_graph6,
)
from domchrom.invariants import Coloring

print("== the odd family at (k, n) = (3, 9) ==")
g, lab = build_d_odd(DOddSpec(3, 9))
print("graph6:", to_graph6(g))
print("roles:", {k: v for k, v in sorted(lab.to_dict().items()) if isinstance(v, int)})
print("classes:", {k: v for k, v in sorted(lab.to_dict().items()) if k.startswith("P")})
r = compute_report(g)
print(f"invariants: gamma={r.gamma} gamma_t={r.gamma_t} chi={r.chi} "
      f"chi_d={r.chi_d} chi_dom={r.chi_dom} -> D({r.dk})")

xs = sorted(lab.group("X")) + [lab.vertex("x3")]
print("{x_1..x_k} dominates:", is_dominating_set(g, xs))

coloring = Coloring.from_classes([lab.group(f"P{i}") for i in (1, 2, 3)])
print("total dominating transversal of (P1,P2,P3):",
      find_total_dominating_transversal(g, coloring))

print()
print("== growing the order: the tail vertices ==")
for n in (9, 10, 11, 13):
    g, lab = build_d_odd(DOddSpec(3, n))
    print(f"  n={n}: edges={g.edge_count()}, still D({compute_report(g).dk})")

print()
print("== the even family ==")
for k, n in [(4, 12), (4, 13), (6, 18)]:
    g, lab = build_d_even(DEvenSpec(k, n))
    r = compute_report(g)
    print(f"  (k={k}, n={n}): edges={g.edge_count()}, D({r.dk}), "
          f"all five = {r.gamma == r.gamma_t == r.chi == r.chi_d == r.chi_dom == k}")

print()
print("== DOT output for external rendering ==")
g, lab = build_d_odd(DOddSpec(3, 9))
print("\n".join(to_dot(g, lab).splitlines()[:6]), "...")
