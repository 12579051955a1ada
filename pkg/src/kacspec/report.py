"""Family dispatch: matrix, eigenpairs and verdicts for one named family."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .appendix import appendix_eigenvalue, h_left_eigenvector, g_left_eigenvector
from .errors import DomainError
from .exactnum import Polynomial, QuadExt, rational_str, to_rational
from .matrices import (
    Tridiagonal,
    build_abc,
    build_appendix_matrix,
    build_general,
    build_hahn,
    build_sylvester_kac,
    char_poly,
)
from .serialize import poly_to_json, quad_to_json
from .spectral import (
    EigenPair,
    eigenvalues_abc,
    eigenvalues_general,
    eigenvector_abc,
    eigenvector_general,
    left_to_right,
    recurrence_eigenvector,
)

FAMILIES = ("kac", "general", "abc", "g", "s", "h", "hahn")
REQUIRED = {
    "general": ("alpha", "beta", "gamma", "delta"),
    "abc": ("a", "b", "c"),
    "hahn": ("alpha",),
}


@dataclass
class SpectralReport:
    family: str
    params: dict
    N: int
    matrix: Tridiagonal
    pairs: list
    char_poly: Polynomial
    radicand: Fraction | None = None
    extra: dict = field(default_factory=dict)

    @property
    def values(self):
        return [p.value for p in self.pairs]

    def all_verified(self) -> bool:
        return all(p.verified for p in self.pairs)

    def char_poly_identity(self) -> bool:
        """prod (x - lambda_j) == det(xI - T)."""
        return Polynomial.from_roots(self.values) == self.char_poly

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "params": {k: rational_str(v) for k, v in self.params.items()},
            "N": self.N,
        }
        if self.radicand is not None:
            out["radicand"] = rational_str(self.radicand)
        out["values"] = [str(v) for v in self.values]
        out["pairs"] = [
            {
                "j": p.index,
                "value": quad_to_json(p.value),
                "vector": [quad_to_json(x) for x in p.vector],
                "verified": p.verified,
            }
            for p in self.pairs
        ]
        out["char_poly"] = poly_to_json(self.char_poly)
        return out


def family_params(family: str, params: dict) -> dict:
    family = family.lower()
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    need = REQUIRED.get(family, ())
    missing = [k for k in need if params.get(k) is None]
    if missing:
        raise DomainError(f"family {family} needs parameters: {', '.join(missing)}")
    return {k: to_rational(params[k]) for k in need}


def build_matrix(family: str, N: int, params: dict) -> Tridiagonal:
    family = family.lower()
    p = family_params(family, params)
    if family == "kac":
        return build_sylvester_kac(N)
    if family == "general":
        return build_general(p["alpha"], p["beta"], p["gamma"], p["delta"], N)
    if family == "abc":
        return build_abc(p["a"], p["b"], p["c"], N)
    if family == "hahn":
        return build_hahn(p["alpha"], N)
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    return build_appendix_matrix(family.upper(), N)


def _closed_form(family, N, p, T):
    """(values, vector(j)) from the closed forms for this family."""
    if family in ("kac", "general"):
        args = (1, 1, 1, -1) if family == "kac" else (p["alpha"], p["beta"], p["gamma"], p["delta"])
        return eigenvalues_general(*args, N), lambda j: eigenvector_general(*args, N, j)
    if family == "abc":
        args = (p["a"], p["b"], p["c"])
        return eigenvalues_abc(*args, N), lambda j: eigenvector_abc(*args, N, j)
    if family in ("g", "s", "h"):
        left = g_left_eigenvector if family == "g" else h_left_eigenvector
        values = [appendix_eigenvalue(family, N, j) for j in range(N + 1)]
        return values, lambda j: left_to_right(T, left(N, j))
    if family == "hahn":
        values = list(range(N + 1))
        return values, lambda j: recurrence_eigenvector(T, j)
    raise DomainError(f"unknown family {family!r}")


def spectral_report(family: str, N: int, params: dict | None = None, only_j: int | None = None):
    family = family.lower()
    params = params or {}
    p = family_params(family, params)
    T = build_matrix(family, N, params)
    values, vector = _closed_form(family, N, p, T)
    radicand = p["b"] ** 2 - 4 * p["a"] * p["c"] if family == "abc" else None
    js = range(N + 1) if only_j is None else [only_j]
    if only_j is not None and not 0 <= only_j <= N:
        raise DomainError(f"j={only_j} not in 0..{N}")
    pairs = [EigenPair(j, QuadExt.coerce(values[j]), vector(j)).verify(T) for j in js]
    return SpectralReport(family, p, N, T, pairs, char_poly(T), radicand)
