"""
Forests and threshold graphs
============================

|F(r,n,k)| counts increasing r-ary forests; it is also a coefficient of (x^r D)^n.
"""

from weylorder import (
    build_g_nr,
    enumerate_forests,
    forest_to_partition_g,
    forest_to_partition_h,
    graph_stirling,
    normal_order,
    partition_to_forest_g,
)

r, n = 2, 3
nf = normal_order(("x" * r + "D") * n)
print(nf)

for k in range(1, n + 1):
    fs = enumerate_forests(r, n, k)
    print(k, len(fs), nf[k], graph_stirling(build_g_nr(n, r), k + (r - 1) * n))

# the bijections start from decreasing forests
for f in enumerate_forests(r, n, 1, "decreasing"):
    pg = forest_to_partition_g(f, n, r)
    ph = forest_to_partition_h(f, n, r)
    assert partition_to_forest_g(pg, n, r) == f
    print(f"{str(f):22s} G: {pg}   H: {ph}")
