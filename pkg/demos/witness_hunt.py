"""Uncommonness hunt for the tailed triangle.

The target floor is 2^(1-4) = 1/8; a kernel with m below it shows the random
colouring is not optimal.  The brute grid scan over two-part kernels goes
first (no optimizer to mistrust), then projected gradient descent tries to
do better.

    python3 demos/witness_hunt.py
"""
from time import monotonic

from commonality.density import m
from commonality.graphs import catalog
from commonality.graphons import format_graphon
from commonality.search import MinimizeConfig, grid_minimum_two_parts, minimize_m

h = catalog("k3plus")
print("tailed triangle: v=%d e=%d, commonality floor 1/8" % (h.n, h.e))

t0 = monotonic()
grid_val, grid_w = grid_minimum_two_parts(h, resolution=64)
print("\ngrid floor over two-part kernels at 1/64 resolution: %.9f  (%.1fs)"
      % (grid_val, monotonic() - t0))
print(format_graphon(grid_w))

for parts, tuned in ((2, False), (2, True), (3, False)):
    t0 = monotonic()
    cfg = MinimizeConfig(parts=parts, restarts=32, optimize_weights=tuned)
    res = minimize_m(h, cfg)
    print("descent parts=%d%s: value %.9f  verdict %s  (restart %d, %.1fs)"
          % (parts, " +weights" if tuned else "        ", res.value,
             res.verdict, res.restart_index, monotonic() - t0))

print("\nbest kernel found with tuned weights:")
res = minimize_m(h, MinimizeConfig(parts=2, restarts=32, optimize_weights=True))
print(format_graphon(res.graphon))
print("recheck through the density module: m = %.9f" % m(h, res.graphon))

print("\nfor contrast, the same search on the plain triangle sits on its floor:")
res = minimize_m(catalog("k3"), MinimizeConfig(parts=3, restarts=16))
print("  value %.9f  target %s  verdict %s" % (res.value, res.target, res.verdict))
