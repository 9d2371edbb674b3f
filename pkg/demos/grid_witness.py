"""
Grid witnesses and their certified Caratheodory numbers
=======================================================

Unit masses on the grid {1..d}^n give a moment functional on polynomials of
degree 2d that sits on the boundary of the moment cone.  Its Caratheodory
number is the exact rank of the atom evaluation matrix.
"""

from moment_cara import build_grid_witness, grid_cara_closed_form
from moment_cara.core import binom

# In the plane the grid witness needs d^2 atoms
for d in (2, 3, 4):
    w = build_grid_witness(2, d, "even", "rn")
    print(f"n=2 d={d}: rank {w.certified_cara}, closed form {w.closed_form}")

# Five variables, degree 4: 32 grid points but only 31 of them are needed
w = build_grid_witness(5, 2, "even", "rn")
print(len(w.grid), "atoms, rank", w.certified_cara, "of", binom(5 + 4, 5), "monomials")

# The certificate sum_i f(x_i)^2 vanishes exactly on the grid, and L(p) = 0
cert = w.certificate()
print("factor f:", cert.factor, " L(p) =", w.certificate_value())
print("p at (1, 1, 1, 1, 3/2):", cert((1, 1, 1, 1, "3/2")))

# The cube grid {0..d}^n works the same way
for parity in ("even", "odd"):
    w = build_grid_witness(3, 2, parity, "cube")
    print(f"cube n=3 d=2 {parity}: {w.certified_cara} ==",
          grid_cara_closed_form(3, 2, parity, "cube"))
