"""Separating elements of a finite-dimensional C*-algebra, by hand."""
import numpy as np

from weakhopf import (
    BlockAlgebra,
    check_projection_characterizations,
    gauge_from_separating,
    is_orthogonal_in_gauged,
    is_separating,
    separating_from_gauge,
    symmetric_e,
)
from weakhopf.separating import op_adjoint

# %% M2 + C: one 2x2 block and one scalar block, 5-dimensional
N = BlockAlgebra((2, 1))
print(N, "dim", N.dim)

# %% the symmetric element e = sum 1/n e_ij^o (x) e_ji
e = symmetric_e(N).f
print(is_separating(N, e))
print("self-adjoint residual", (op_adjoint(N, e) - e).norm())

# %% other separating elements come from gauges with central expectation 1
g = N.element([np.diag([2.0, 0.0]), [[1.0]]])   # not invertible, still fine
f = separating_from_gauge(N, g).f
print(check_projection_characterizations(N, f))
print("gauge recovered:", np.allclose(gauge_from_separating(N, f).vec, g.vec))
print("f is a non-orthogonal projection:", (op_adjoint(N, f) - f).norm() > 1e-6)

# %% a strictly positive gauge makes f orthogonal for the rescaled involution
h = N.element([np.diag([1.5, 0.5]), [[1.0]]])
fh = separating_from_gauge(N, h).f
print("orthogonal for its own gauge:", is_orthogonal_in_gauged(N, fh, h))
print("orthogonal for the standard one:", is_orthogonal_in_gauged(N, fh, N.unit()))
