"""Print upper-bound tables and watch them collapse to cyclic polytopes when r = 1.

    python3 demos/bound_tables.py
"""

from minkcayley.bounds import bound_table, cyclic_f

for d, r, n in [(3, 2, (4, 4)), (4, 2, (6, 6)), (4, 3, (5, 5, 5)), (5, 2, (7, 9))]:
    table = bound_table(d, r, n)
    row = ", ".join(str(table.minkowski[j]) for j in range(1, d + 1))
    print(f"d={d} r={r} n={n}: max f-vector of the sum ({row})")

for d, n in [(3, 6), (4, 8), (6, 10)]:
    table = bound_table(d, 1, (n,))
    print(f"r=1 d={d} n={n}: {[table.spans[k] for k in range(d + 1)]} vs cyclic {cyclic_f(d, n)}")
