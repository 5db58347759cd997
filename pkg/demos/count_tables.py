"""Walk through the exact counting tables.

Builds one counting context and reads off the number of labeled connected
chordal graphs for every n up to a limit, then restricts the color budget and
prints the (n, omega) grid.  The same filled tables answer every query, so
the marginal cost of an extra row is near zero.

Run: python demos/count_tables.py [n_max]
"""

import sys
import time

from chordal_lab import CountingContext

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 16

print(f"== Labeled connected chordal graphs on n vertices (n <= {n_max}) ==")
t0 = time.time()
ctx = CountingContext(n_max, n_max)
for n in range(1, n_max + 1):
    print(f"  n={n:>2}: {ctx.count_connected(n)}")
print(f"(one table fill, {time.time() - t0:.2f}s)")

print()
print("== Including disconnected graphs ==")
for n in (0, 4, 8, min(12, n_max)):
    print(f"  n={n:>2}: {ctx.count_all(n)}")

grid_n = min(n_max, 9)
print()
print(f"== Color-budget grid: omega-colorable connected, n <= {grid_n} ==")
print("   (omega = 2 counts labeled trees: n^(n-2))")
header = "omega\\n " + "".join(f"{n:>12}" for n in range(2, grid_n + 1))
print(header)
for omega in range(2, grid_n + 1):
    ctx_w = CountingContext(grid_n, omega)
    row = [f"{ctx_w.count_connected(n):>12}" if n >= omega else " " * 12
           for n in range(2, grid_n + 1)]
    print(f"{omega:>7} " + "".join(row))
