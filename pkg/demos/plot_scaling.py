"""
Running time against instance size
==================================

Time recognition on glued instances and fit the log-log slope.
"""

import time

import numpy as np

from pentarec import random_pentangulation, recognize, saturate

sizes, times = [], []
for k in (50, 100, 200, 400, 800):
    g, _ = saturate(random_pentangulation(k, k))
    start = time.perf_counter()
    assert recognize(g).accepted
    times.append(time.perf_counter() - start)
    sizes.append(g.n)
    print(f"n={g.n:6d} seconds={times[-1]:.3f}")

slope = np.polyfit(np.log(sizes), np.log(times), 1)[0]
print(f"fitted exponent: {slope:.2f}")
