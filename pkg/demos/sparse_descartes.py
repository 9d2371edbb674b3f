"""
Gaps, Descartes numbers and sparse bounds
=========================================

For polynomials in t^4, t^6, t^7 the exponents form a numerical semigroup.
Its conductor and gaps, together with the Descartes number (the most real
zeros the rule of signs can allow), pin the Caratheodory number down to
an interval of width at most two.
"""

from moment_cara import descartes_number, semigroup_invariants, sparse_cara_bounds
from moment_cara.sparse import nonneg_zero_bounds

ring = semigroup_invariants([4, 6, 7])
print("conductor", ring.conductor, "gaps", ring.gap_list)

res = descartes_number(ring, 7)
print("D_7 =", res.value, "with signs", res.witness_signs)
print("variations on the two half-axes:", res.variations())

# beyond the conductor every extra degree adds exactly one
c = ring.conductor
print([descartes_number(ring, c + k).value for k in range(5)])

for k in range(c, c + 4):
    print(f"k={k}: zeros of nonnegative elements {nonneg_zero_bounds(ring, k)},",
          f"Caratheodory bounds {sparse_cara_bounds(ring, k)}")

# t^2, t^3 loses nothing compared with R[t]
print([sparse_cara_bounds(semigroup_invariants([2, 3]), k) for k in range(3, 9)])
