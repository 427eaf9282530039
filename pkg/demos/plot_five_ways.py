"""
Five ways to the same numbers
=============================

Rewriting, two graphs, a rook board and an alternating sum all give S_w(k).
"""

from weylorder import (
    board_of,
    build_g,
    build_h,
    chromatic_polynomial,
    closed_form_sw,
    graph_stirling,
    heights,
    normal_order,
    rook_count,
)
from weylorder.verify import five_way

w = "xxDxxDxDDD"
n = w.count("D")

g = build_g(w)   # vertices are x's, adjacent when their matched intervals nest
h = build_h(w)   # edges are the squares between the path and the diagonal
print("G_w edges", g.sorted_edges())
print("H_w edges", h.sorted_edges())

for k in range(n + 1):
    print(k, normal_order(w)[k], graph_stirling(g, k), graph_stirling(h, k),
          rook_count(board_of(w), n - k), closed_form_sw(w, k))

# the graphs differ but share a chromatic polynomial, prod (t - a_i)
print("heights", heights(w))
print(chromatic_polynomial(g).format("t"))
print(chromatic_polynomial(h).format("t"))

######################################################################
# The same check in one call, for every method at once:

print(five_way("xDxxDxDD"))
