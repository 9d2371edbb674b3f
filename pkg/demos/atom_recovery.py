"""
Recovering atoms from univariate moments
========================================

From s_0, ..., s_{2d+1} of a k-atomic measure the atoms are the roots of the
Prony polynomial and the weights follow from a Vandermonde solve.
"""

import numpy as np

from moment_cara import recover_atoms_1d

z = np.array([-0.8, -0.1, 0.35, 0.9])
c = np.array([1.0, 0.5, 2.0, 1.25])
s = (z[None, :] ** np.arange(10)[:, None]) @ c

r = recover_atoms_1d(s, 4)
print("atoms  ", r.atoms.real)
print("weights", r.weights.real)
print("residual %.1e  condition %.1e" % (r.residual, r.condition_estimate))

# complex atoms come out too
print(recover_atoms_1d([2, 0, -2, 0, 2, 0], 2).atoms)

# with almost-colliding atoms the Hankel block becomes too ill-conditioned
from moment_cara.errors import IllConditionedError
z = np.linspace(0, 1e-3, 6)
s = (z[None, :] ** np.arange(14)[:, None]) @ np.ones(6)
try:
    recover_atoms_1d(s, 6)
except IllConditionedError as exc:
    print("refused:", exc)
