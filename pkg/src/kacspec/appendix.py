"""Integer spectra of G_N and S_N (H_N = S_N / 2) and their Hahn-matrix relatives.

Two independent routes are checked:

* characteristic polynomials: K_{2N+2} splits as Omega_0 * Omega_1 with
  Omega_1 = det(xI - G_N), and det(xI - S_{N+1}) = Omega_0;
* similarity to the Hahn recurrence matrix C_N(alpha), whose spectrum is
  {0, ..., N} for every admissible alpha.

The closed-form eigenvector sums for G_N and H_N are evaluated exactly
as printed.  Right-eigenvector formulas are audited against every
eigenvalue rather than trusted with a fixed index pairing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConsistencyError, DomainError
from .exactnum import Polynomial, binomial, pochhammer
from .matrices import (
    build_appendix_matrix,
    build_hahn,
    build_sylvester_kac,
    char_poly,
    diag_similarity,
    factorial_weights,
    is_persymmetric,
    reversal_similarity,
)
from .spectral import left_to_right, proportional, verify_eigenpair


@dataclass(frozen=True)
class OmegaPair:
    omega0: Polynomial
    omega1: Polynomial
    N: int


@dataclass(frozen=True)
class PairingAudit:
    family: str
    N: int
    mapping: tuple  # mapping[j] = j' or None when no eigenvalue verifies
    all_verified: bool
    failures: tuple = field(default=())  # (family, N, j, reason)
    left_right_agree: tuple = field(default=())  # per j, vs left_to_right(left_j')


def omega_pair(N: int) -> OmegaPair:
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    omega1 = char_poly(build_appendix_matrix("G", N))
    q, r = divmod(char_poly(build_sylvester_kac(2 * N + 2)), omega1)
    if not r.is_zero():
        raise ConsistencyError(f"det(xI - G_{N}) does not divide det(xI - K_{2 * N + 2}): remainder {r}")
    return OmegaPair(q, omega1, N)


def s_identity_check(N: int) -> bool:
    """det(xI - S_{N+1}) == Omega_0."""
    return char_poly(build_appendix_matrix("S", N + 1)) == omega_pair(N).omega0


def m_identity_check(N: int) -> bool:
    """det(xI - M) == (Omega_0 + x Omega_1) / 2, M the leading (N+2)x(N+2) block of K_{2N+2}."""
    om = omega_pair(N)
    M = build_sylvester_kac(2 * N + 2).leading(N + 2)
    return char_poly(M) == (om.omega0 + Polynomial.x() * om.omega1) * Fraction(1, 2)


def persymmetric_check(N: int) -> bool:
    """D K D^{-1} (factorial D) of K_{2N+2} is persymmetric with unit superdiagonal,
    and its leading (N+1)x(N+1) block is D_N G_N D_N^{-1}."""
    K = build_sylvester_kac(2 * N + 2)
    P = diag_similarity(K, factorial_weights(K.size))
    block = diag_similarity(build_appendix_matrix("G", N), factorial_weights(N + 1))
    return is_persymmetric(P) and all(x == 1 for x in P.sup) and P.leading(N + 1) == block


def appendix_eigenvalue(kind: str, N: int, j: int) -> int:
    kind = kind.upper()
    if kind in ("G", "S"):
        return 2 * (2 * j - N)
    if kind == "H":
        return 2 * j - N
    raise DomainError(f"unknown appendix matrix kind {kind!r}")


def appendix_spectra(kind: str, N: int) -> list:
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    values = [appendix_eigenvalue(kind, N, j) for j in range(N + 1)]
    if Polynomial.from_roots(values) != char_poly(build_appendix_matrix(kind, N)):
        raise ConsistencyError(f"spectrum of {kind}_{N} is not {values}")
    return values


def hahn_spectrum_check(alpha, N: int) -> bool:
    return char_poly(build_hahn(alpha, N)) == Polynomial.from_roots(range(N + 1))


def relation_weights(kind: str, N: int) -> list:
    """Anti-diagonal weights w (P[i, N-i] = w[i]) tying the appendix matrix to C_N.

    H: all ones.  G: w[i] = N + 1 - i, i.e. the entry in column j is j + 1.
    """
    kind = kind.upper()
    if kind == "H":
        return [1] * (N + 1)
    if kind == "G":
        return list(range(N + 1, 0, -1))
    raise DomainError(f"relation_check: kind must be H or G, got {kind!r}")


def relation_check(kind: str, N: int, weights=None) -> bool:
    """H_N^T = E [2 C_N(-1/2) - N I] E^{-1},  G_N^T = R [4 C_N(1/2) - 2N I] R^{-1}.

    E is the unit anti-diagonal and R the anti-diagonal from
    :func:`relation_weights`; pass ``weights`` to test another choice.
    """
    kind = kind.upper()
    if kind == "H":
        inner = build_hahn(Fraction(-1, 2), N).scaled(2).shifted(-N)
    elif kind == "G":
        inner = build_hahn(Fraction(1, 2), N).scaled(4).shifted(-2 * N)
    else:
        raise DomainError(f"relation_check: kind must be H or G, got {kind!r}")
    if weights is None:
        weights = relation_weights(kind, N)
    return build_appendix_matrix(kind, N).transpose() == reversal_similarity(inner, weights)


def _check_index(N: int, j: int):
    if N < 1 or not 0 <= j <= N:
        raise DomainError(f"eigenvector index j={j} not in 0..N for N={N}")


def _h_sum(N: int, j: int, k: int) -> Fraction:
    half = Fraction(1, 2)
    return sum(
        (
            (-1) ** (k + i)
            * binomial(N - k, i)
            * binomial(N - i, j - i)
            * pochhammer(N - k, i)
            / pochhammer(half, i)
            for i in range(min(N - k, j) + 1)
        ),
        Fraction(0),
    )


def _g_sum(N: int, j: int, k: int) -> Fraction:
    three_halves = Fraction(3, 2)
    return sum(
        (
            (-1) ** (k + i)
            * binomial(N - k, i)
            * binomial(N - i, j - i)
            * pochhammer(N + 1 - k, i + 1)
            / pochhammer(three_halves, i)
            for i in range(min(N - k, j) + 1)
        ),
        Fraction(0),
    )


def h_left_eigenvector(N: int, j: int) -> list:
    """Row vector u with u H_N = (2j - N) u."""
    _check_index(N, j)
    return [_h_sum(N, j, k) for k in range(N + 1)]


def g_left_eigenvector(N: int, j: int) -> list:
    """Row vector u with u G_N = 2(2j - N) u."""
    _check_index(N, j)
    return [_g_sum(N, j, k) for k in range(N + 1)]


def h_right_eigenvector(N: int, j: int) -> list:
    """Right-vector formula for H_N as printed, including the separate last entry
    (1/2) C(2N, N) C(N, j).  Which eigenvalue it belongs to is left to pairing_audit."""
    _check_index(N, j)
    v = [binomial(2 * N, k) * _h_sum(N, j, k) for k in range(N)]
    v.append(Fraction(binomial(2 * N, N) * binomial(N, j), 2))
    return v


def g_right_eigenvector(N: int, j: int) -> list:
    """Right-vector formula for G_N as printed (generic entry used for every k)."""
    _check_index(N, j)
    return [binomial(2 * N + 2, k) * _g_sum(N, j, k) for k in range(N + 1)]


_LEFT = {"H": h_left_eigenvector, "G": g_left_eigenvector}
_RIGHT = {"H": h_right_eigenvector, "G": g_right_eigenvector}


def right_eigenvector(family: str, N: int, j: int) -> list:
    """Right eigenvector for eigenvalue index j obtained from the verified left vector."""
    family = family.upper()
    return left_to_right(build_appendix_matrix(family, N), _LEFT[family](N, j))


def pairing_audit(family: str, N: int) -> PairingAudit:
    """Match every printed right-vector formula to the eigenvalue(s) it verifies against.

    A formula index with no verifying eigenvalue is recorded as a failure
    with its (family, N, j); the mapping entry is then None and
    ``all_verified`` is False.
    """
    family = family.upper()
    if family not in _RIGHT:
        raise DomainError(f"pairing_audit: family must be H or G, got {family!r}")
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    T = build_appendix_matrix(family, N)
    lams = [appendix_eigenvalue(family, N, jj) for jj in range(N + 1)]
    truth = [right_eigenvector(family, N, jj) for jj in range(N + 1)]
    mapping, failures, agree = [], [], []
    for j in range(N + 1):
        v = _RIGHT[family](N, j)
        hits = [jj for jj, lam in enumerate(lams) if verify_eigenpair(T, lam, v, "right")]
        if len(hits) == 1:
            mapping.append(hits[0])
            agree.append(proportional(v, truth[hits[0]]))
        else:
            mapping.append(None)
            agree.append(False)
            reason = "no eigenvalue verifies" if not hits else f"verifies against several: {hits}"
            failures.append((family, N, j, reason))
    bijective = None not in mapping and sorted(mapping) == list(range(N + 1))
    if None not in mapping and not bijective:
        failures.append((family, N, None, f"mapping {mapping} is not a permutation"))
    return PairingAudit(family, N, tuple(mapping), bijective and not failures, tuple(failures), tuple(agree))


def appendix_battery(N: int) -> dict:
    """Every appendix identity for sizes up to N, name -> bool."""
    out = {}
    for n in range(0, N + 1):
        omega_pair(n)
        out[f"omega_division[{n}]"] = True
        out[f"s_identity[{n}]"] = s_identity_check(n)
        out[f"m_identity[{n}]"] = m_identity_check(n)
        out[f"persymmetric[{n}]"] = persymmetric_check(n)
    for n in range(1, N + 1):
        for kind in ("G", "S", "H"):
            appendix_spectra(kind, n)
            out[f"spectrum_{kind}[{n}]"] = True
        for alpha in (Fraction(-1, 2), Fraction(1, 2), Fraction(1, 3), Fraction(2)):
            out[f"hahn_spectrum[{alpha},{n}]"] = hahn_spectrum_check(alpha, n)
        for kind in ("H", "G"):
            out[f"relation_{kind}[{n}]"] = relation_check(kind, n)
            T = build_appendix_matrix(kind, n)
            out[f"left_vectors_{kind}[{n}]"] = all(
                verify_eigenpair(T, appendix_eigenvalue(kind, n, j), _LEFT[kind](n, j), "left")
                for j in range(n + 1)
            )
    return out
