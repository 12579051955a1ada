# Integer spectra of G_N, S_N, H_N
#
# K_{2N+2} splits its characteristic polynomial as Omega_0 * Omega_1.
# Omega_1 belongs to G_N and Omega_0 to S_{N+1}.  The Hahn matrix C_N(alpha)
# gives a second route to the same spectra.

# %%
from kacspec.appendix import (
    appendix_spectra,
    hahn_spectrum_check,
    omega_pair,
    pairing_audit,
    relation_check,
    s_identity_check,
)

for N in range(4):
    om = omega_pair(N)
    print(f"N={N}: Omega_0 = {om.omega0}")
    print(f"      Omega_1 = {om.omega1}")
    print("      S identity:", s_identity_check(N))

# %%
for kind in "GSH":
    print(kind, appendix_spectra(kind, 6))

# %%
# spectrum of C_N(alpha) does not depend on alpha
print([hahn_spectrum_check(alpha, 8) for alpha in ("-1/2", "1/2", "1/3", "2", "-2/5")])
print("H relation:", all(relation_check("H", n) for n in range(1, 9)))
print("G relation:", all(relation_check("G", n) for n in range(1, 9)))

# %%
# the printed right-vector formulas, matched against every eigenvalue
for kind in "HG":
    for N in range(1, 6):
        a = pairing_audit(kind, N)
        print(kind, N, a.mapping, "bijective" if a.all_verified else "not bijective")
