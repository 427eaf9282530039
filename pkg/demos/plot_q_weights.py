"""
q-weights on partitions
=======================

Weighting each independent-set partition of G_w recovers the q-coefficients.
"""

from weylorder import (
    MatchMatrix,
    build_g,
    enumerate_partitions,
    matching_encode,
    matrix_weight,
    normal_order_q,
    partition_weight,
    q_graph_stirling,
    q_matching_sum,
    q_stirling_carlitz,
)
from weylorder.qweights import random_order, weight_split

w = "xxDxxDxDDD"
for p in enumerate_partitions(build_g(w), 4):
    print(p, partition_weight(w, p))
print(q_graph_stirling(w, 4).format("q"), "vs", normal_order_q(w)[4].format("q"))

# a different total order on blocks moves weights around, not the sum
order = random_order(5, seed=3)
print(q_graph_stirling(w, 4, order).format("q"))

# matching matrices carry the weight of a merge
m = MatchMatrix.from_ones(7, 6, [(2, 3), (4, 4), (5, 1), (6, 6)])
print(m)
print(matrix_weight(m), matching_encode(m), weight_split(m))

lhs, rhs = q_matching_sum(3, 3, 2)
print(lhs.format("q"), "==", rhs.format("q"))

print(q_stirling_carlitz(4, 2).format("q"))
