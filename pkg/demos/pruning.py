"""
Caratheodory pruning of an atomic measure
=========================================

Any positive measure can be traded for one with at most as many atoms as
the rank of its evaluation matrix, keeping every moment exactly.
"""

import random
from fractions import Fraction

from moment_cara import AtomicMeasure, atomic_moments, prune
from moment_cara.witness import boundary_cara, default_candidates, interpolation_points

rnd = random.Random(0)
pts = sorted({(rnd.randint(-4, 4), rnd.randint(-4, 4)) for _ in range(25)})
m = AtomicMeasure.from_pairs([(p, Fraction(rnd.randint(1, 5), 3)) for p in pts])
print(len(m), "atoms, evaluation rank at degree 2:", boundary_cara(m, 2, 2))

small = prune(m, 2, 2)
print("after pruning:", len(small), "atoms")
print("moments unchanged:", atomic_moments(small, 2, 2) == atomic_moments(m, 2, 2))
for p, w in small.atoms:
    print("  ", tuple(map(str, p)), w)

# points whose evaluations span all functionals on quadratics in two variables
print(interpolation_points(2, 2, default_candidates(2)))
