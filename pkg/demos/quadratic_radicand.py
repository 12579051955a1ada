# Eigenvalues in Q(sqrt D)
#
# The matrix B_N(a, b, c) comes from the operator
# (a + b z + c z^2) d/dz - N c z.  When D = b^2 - 4ac is not a square the
# eigenvalues live in Q(sqrt D), and for D < 0 they are complex.

# %%
from kacspec import build_abc, char_poly, eigenvalues_abc, eigenvector_abc
from kacspec.exactnum import poly_eval
from kacspec.spectral import verify_eigenpair

a, b, c, N = 1, 1, 1, 4  # D = -3
B = build_abc(a, b, c, N)
print("det(xI - B) =", char_poly(B))

# %%
lams = eigenvalues_abc(a, b, c, N)
for j, lam in enumerate(lams):
    v = eigenvector_abc(a, b, c, N, j)
    print(f"lambda_{j} = {lam}")
    print("   root of char poly:", poly_eval(char_poly(B), lam) == 0)
    print("   eigenpair verifies:", verify_eigenpair(B, lam, v))

# %%
# named presets are just parameter choices
from kacspec.diffop import preset_abc

for name, kw in [("sylvester-kac", {}), ("painvin", {"a": "1/3"}), ("krawtchouk", {"p": "2/7"})]:
    abc = preset_abc(name, **kw)
    print(name, [str(x) for x in abc], [str(x) for x in eigenvalues_abc(*abc, 3)])
