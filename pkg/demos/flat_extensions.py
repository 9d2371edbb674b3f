"""
When does a flat extension need the full degree?
================================================

A flat extension to degree 2D has a Hankel matrix of size C(n+D, n), so it
must be at least as large as the Caratheodory number of the functional.
For the grid witness this pushes D all the way to 2d surprisingly early.
"""

import time

from moment_cara.flat import (flat_check, is_worst_case, minimal_worst_cases,
                              required_extension_degree, table_to_csv, worst_case_table)
from moment_cara.moments import AtomicMeasure, atomic_moments

print(table_to_csv(worst_case_table(range(6, 11), [2])))

reports = worst_case_table(range(1, 20), range(2, 8))
print("smallest worst-case n per d:", minimal_worst_cases(reports))

# exact big-integer comparison stays cheap for absurd degrees
t = time.perf_counter()
print("d=10^15: n=50", is_worst_case(50, 10 ** 15), " n=51", is_worst_case(51, 10 ** 15),
      f"({(time.perf_counter() - t) * 1e3:.2f} ms)")
print(required_extension_degree(51, 10 ** 15).required_D == 2 * 10 ** 15)

# an atomic measure is flat once the Hankel rank stops growing
s = atomic_moments(AtomicMeasure.unit([(0,), (1,), (3,)]), 1, 8)
for D in range(4):
    print(D, flat_check(s, D))
