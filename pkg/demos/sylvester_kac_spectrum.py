# Sylvester-Kac matrix: integer spectrum, exactly
#
# K_N has zero diagonal, 1..N above it and N..1 below it.  Its eigenvalues
# are -N, -N+2, ..., N.  Everything below is exact rational arithmetic.

# %%
from kacspec import build_sylvester_kac, char_poly, eigenvalues_general, eigenvector_general
from kacspec.exactnum import Polynomial
from kacspec.spectral import verify_eigenpair

N = 5
K = build_sylvester_kac(N)
for row in K.to_dense():
    print(" ".join(f"{int(x):3d}" for x in row))

# %%
# K_N is the general family at (alpha, beta, gamma, delta) = (1, 1, 1, -1)
mus = eigenvalues_general(1, 1, 1, -1, N)
print("eigenvalues:", [str(m) for m in mus])

# the characteristic polynomial factors over the integers
p = char_poly(K)
print("det(xI - K) =", p)
print("product of (x - mu) matches:", Polynomial.from_roots(mus) == p)

# %%
# closed-form eigenvectors, checked with a zero residual
for j in range(N + 1):
    v = eigenvector_general(1, 1, 1, -1, N, j)
    print(j, [str(x) for x in v], verify_eigenpair(K, mus[j], v))

# %%
# larger sizes are still instant
for N in (10, 20, 40):
    K = build_sylvester_kac(N)
    ok = Polynomial.from_roots(eigenvalues_general(1, 1, 1, -1, N)) == char_poly(K)
    print(f"N={N}: spectrum identity {ok}")
