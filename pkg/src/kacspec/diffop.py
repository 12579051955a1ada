"""First-order differential operators with polynomial eigenfunctions.

Two operators act on coefficient vectors here:

    L_N w       = (al + be z)(ga + de z) w' - be de N z w
    L_{a,b,c} u = (a + b z + c z^2) u' - N c z u

Both map polynomials of degree <= N into themselves.  Their matrices in the
monomial basis are ``build_general`` and ``build_abc``; the consistency
check below compares the two routes coefficient by coefficient.

Eigenfunctions for arbitrary integer j are rational, so they are kept in
factored form (scale, two roots, two integer exponents) and only expanded
into a Polynomial when 0 <= j <= N.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ConsistencyError, DomainError
from .exactnum import Polynomial, QuadExt, to_rational
from .matrices import build_general, matvec


@dataclass(frozen=True)
class OperatorParams:
    alpha: object
    beta: object
    gamma: object
    delta: object
    N: int

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if not isinstance(self.N, int) or self.N < 1:
            raise DomainError(f"N must be an integer >= 1, got {self.N!r}")

    @property
    def D(self):
        """al*de - be*ga; zero means the Moebius substitution is unavailable."""
        return self.alpha * self.delta - self.beta * self.gamma

    def as_tuple(self):
        return self.alpha, self.beta, self.gamma, self.delta


def _as_poly(p) -> Polynomial:
    return p if isinstance(p, Polynomial) else Polynomial(p)


def _check_degree(p: Polynomial, N: int):
    if p.degree is not None and p.degree > N:
        raise DomainError(f"polynomial degree {p.degree} exceeds N={N}")


def apply_operator(params: OperatorParams, p) -> Polynomial:
    p = _as_poly(p)
    _check_degree(p, params.N)
    al, be, ga, de = params.as_tuple()
    quad = Polynomial([al * ga, al * de + be * ga, be * de])
    out = quad * p.derivative() - Polynomial([0, be * de * params.N]) * p
    if out.degree is not None and out.degree > params.N:
        raise ConsistencyError(f"L_N raised the degree to {out.degree} > N={params.N}")
    return out


def apply_operator_abc(a, b, c, N: int, p) -> Polynomial:
    a, b, c = map(to_rational, (a, b, c))
    if not isinstance(N, int) or N < 0:
        raise DomainError(f"N must be a nonnegative integer, got {N!r}")
    p = _as_poly(p)
    _check_degree(p, N)
    out = Polynomial([a, b, c]) * p.derivative() - Polynomial([0, N * c]) * p
    if out.degree is not None and out.degree > N:
        raise ConsistencyError(f"L_abc raised the degree to {out.degree} > N={N}")
    return out


def apply_classic(p, N: int | None = None) -> Polynomial:
    """z u'(z): the a=0, b=1, c=0 member of the L_{a,b,c} family (no N z u term)."""
    p = _as_poly(p)
    return apply_operator_abc(0, 1, 0, p.degree or 0 if N is None else N, p)


def eigenpolynomial(params: OperatorParams, j: int) -> Polynomial:
    """w_j(z) = (al + be z)^j (ga + de z)^(N-j), expanded, for 0 <= j <= N."""
    if not isinstance(j, int) or not 0 <= j <= params.N:
        raise DomainError(f"eigenpolynomial index j={j!r} not in 0..{params.N}")
    al, be, ga, de = params.as_tuple()
    return Polynomial([al, be]) ** j * Polynomial([ga, de]) ** (params.N - j)


def mobius_eigen_map(params: OperatorParams, j: int):
    """Eigenvalue al*de*N - D*j of L_N belonging to w_j, any integer j."""
    if params.D == 0:
        raise DomainError("al*de - be*ga = 0: no Moebius correspondence")
    return params.alpha * params.delta * params.N - params.D * j


@dataclass(frozen=True)
class FactoredEigenfunction:
    """scale * (z - root1)^exponent1 * (z - root2)^exponent2."""

    j: int
    scale: QuadExt
    root1: QuadExt
    root2: QuadExt
    exponent1: int
    exponent2: int

    def is_pole(self, z) -> bool:
        z = QuadExt.coerce(z)
        return (self.exponent1 < 0 and z == self.root1) or (self.exponent2 < 0 and z == self.root2)

    def __call__(self, z) -> QuadExt:
        z = QuadExt.coerce(z)
        if self.is_pole(z):
            raise DomainError(f"z = {z} is a pole of the eigenfunction with j={self.j}")
        return self.scale * (z - self.root1) ** self.exponent1 * (z - self.root2) ** self.exponent2

    def derivative_at(self, z) -> QuadExt:
        """F'(z) via the logarithmic derivative; at a zero of a factor the product rule is used."""
        z = QuadExt.coerce(z)
        if self.is_pole(z):
            raise DomainError(f"z = {z} is a pole of the eigenfunction with j={self.j}")
        s, e1, e2 = self.scale, self.exponent1, self.exponent2
        f1, f2 = z - self.root1, z - self.root2
        # d/dz [s f1^e1 f2^e2] = s (e1 f1^(e1-1) f2^e2 + e2 f1^e1 f2^(e2-1))
        t1 = e1 * f1 ** (e1 - 1) * f2**e2 if e1 else QuadExt(0)
        t2 = e2 * f1**e1 * f2 ** (e2 - 1) if e2 else QuadExt(0)
        return s * (t1 + t2)

    def expand(self) -> Polynomial:
        if self.exponent1 < 0 or self.exponent2 < 0:
            raise DomainError(f"eigenfunction with j={self.j} is rational, not a polynomial")
        return (
            Polynomial([-self.root1, 1]) ** self.exponent1
            * Polynomial([-self.root2, 1]) ** self.exponent2
            * self.scale
        )


def eigenfunction(params: OperatorParams, j: int) -> FactoredEigenfunction:
    """w_j for any integer j in factored form (needs be, de != 0 so both factors have a root)."""
    al, be, ga, de = params.as_tuple()
    if be == 0 or de == 0:
        raise DomainError("factored eigenfunction needs beta != 0 and delta != 0")
    if params.D == 0:
        raise DomainError("al*de - be*ga = 0: no Moebius correspondence")
    N = params.N
    scale = QuadExt(be) ** j * QuadExt(de) ** (N - j)
    return FactoredEigenfunction(j, scale, QuadExt(-al / be), QuadExt(-ga / de), j, N - j)


def _abc_data(a, b, c, N):
    a, b, c = map(to_rational, (a, b, c))
    if a == 0 or c == 0:
        raise DomainError("rational eigenfunctions need a != 0 and c != 0")
    D = b * b - 4 * a * c
    if D == 0:
        raise DomainError("D = b^2 - 4ac = 0: degenerate case")
    return a, b, c, D, QuadExt.sqrt(D)


@lru_cache(maxsize=4096)
def rational_eigenfunction(a, b, c, N: int, j: int) -> FactoredEigenfunction:
    """Q_j(z) = (2c)^N / ((sqrtD - b)^j (sqrtD + b)^(N-j)) (z - r1)^j (z - r2)^(N-j).

    r1 = (sqrtD - b) / (2c), r2 = -(sqrtD + b) / (2c).  Normalized so that
    Q_j(0) = (-1)^j.
    """
    a, b, c, D, root = _abc_data(a, b, c, N)
    scale = (2 * c) ** N / ((root - b) ** j * (root + b) ** (N - j))
    return FactoredEigenfunction(j, scale, (root - b) / (2 * c), -(root + b) / (2 * c), j, N - j)


def rational_eigenfunction_eval(a, b, c, N: int, j: int, z) -> QuadExt:
    return rational_eigenfunction(a, b, c, N, j)(z)


@lru_cache(maxsize=4096)
def abc_eigenvalue(a, b, c, N: int, j: int) -> QuadExt:
    """j (b + sqrtD)/2 + (N - j)(b - sqrtD)/2, valid for every integer j."""
    a, b, c, D, root = _abc_data(a, b, c, N)
    return j * (b + root) / 2 + (N - j) * (b - root) / 2


def abc_eigen_residual(a, b, c, N: int, j: int, z) -> QuadExt:
    """(a + b z + c z^2) Q_j'(z) - N c z Q_j(z) - lambda_j Q_j(z) at one point."""
    a, b, c = map(to_rational, (a, b, c))
    Q = rational_eigenfunction(a, b, c, N, j)
    z = QuadExt.coerce(z)
    lam = abc_eigenvalue(a, b, c, N, j)
    q = Q(z)
    return (a + b * z + c * z * z) * Q.derivative_at(z) - N * c * z * q - lam * q


def operator_matrix_consistency(params: OperatorParams, p) -> bool:
    """Operator route and matrix route agree on the coefficients of L_N p."""
    p = _as_poly(p)
    _check_degree(p, params.N)
    lhs = apply_operator(params, p)
    coeffs = [p[k] for k in range(params.N + 1)]
    rhs = matvec(build_general(*params.as_tuple(), params.N), coeffs)
    return all(lhs[k] == rhs[k] for k in range(params.N + 1))


# named parameter presets for L_{a,b,c} / B_N(a,b,c)


def preset_abc(name: str, a=None, p=None):
    """(a, b, c) for a named particular case of B_N(a, b, c).

    sylvester-kac: a=1, b=0, c=-1
    painvin:       b=1, c=1-a  (a free, given by ``a``)
    krawtchouk:    a=1-p, b=2p-1, c=-p  (``p`` required)
    classic:       a=0, b=1, c=0  (z d/dz)
    """
    name = name.lower()
    if name == "sylvester-kac":
        return to_rational(1), to_rational(0), to_rational(-1)
    if name == "painvin":
        if a is None:
            raise DomainError("preset painvin needs --a")
        a = to_rational(a)
        return a, to_rational(1), 1 - a
    if name == "krawtchouk":
        if p is None:
            raise DomainError("preset krawtchouk needs --p")
        p = to_rational(p)
        return 1 - p, 2 * p - 1, -p
    if name == "classic":
        return to_rational(0), to_rational(1), to_rational(0)
    raise DomainError(f"unknown preset {name!r}")
