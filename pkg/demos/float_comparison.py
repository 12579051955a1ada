# Exact versus floating point
#
# K_N is a standard test matrix for floating-point eigensolvers.  It is not
# normal, and the rounding error in the computed eigenvalues grows with N.
# Needs numpy (pip install -e .[demos]).

# %%
import numpy as np

from kacspec import build_sylvester_kac, eigenvalues_general

for N in (10, 20, 30, 40):
    K = build_sylvester_kac(N)
    A = np.array([[float(x) for x in row] for row in K.to_dense()])
    approx = np.sort(np.linalg.eigvals(A).real)
    exact = np.array([float(m) for m in sorted(eigenvalues_general(1, 1, 1, -1, N))])
    print(f"N={N:2d}  max |float - exact| = {np.max(np.abs(approx - exact)):.3e}")

# %%
# the exact route has no error to report
from kacspec import char_poly
from kacspec.exactnum import Polynomial

K = build_sylvester_kac(40)
print(Polynomial.from_roots(eigenvalues_general(1, 1, 1, -1, 40)) == char_poly(K))
