"""Closed-form eigendata of the generalized Sylvester-Kac matrices.

Eigenvectors are returned exactly as the sums produce them (first entry 1
for the four-parameter family), never normalized.  Use
:func:`proportional` to compare two eigenvectors up to a scalar.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConsistencyError, DomainError
from .exactnum import Polynomial, QuadExt, binomial, to_rational
from .matrices import Tridiagonal, build_general, char_poly, matvec, rank, vecmat


@dataclass(frozen=True)
class EigenPair:
    index: int
    value: QuadExt
    vector: tuple
    side: str = "right"
    verified: bool = False

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise DomainError(f"side must be 'left' or 'right', got {self.side!r}")
        vec = tuple(QuadExt.coerce(x) for x in self.vector)
        if not any(vec):
            raise DomainError("an eigenvector cannot be the zero vector")
        object.__setattr__(self, "vector", vec)
        object.__setattr__(self, "value", QuadExt.coerce(self.value))

    def verify(self, T: Tridiagonal) -> EigenPair:
        """Return a copy with ``verified`` set from an exact residual check."""
        ok = verify_eigenpair(T, self.value, self.vector, self.side)
        return EigenPair(self.index, self.value, self.vector, self.side, ok)


@dataclass(frozen=True)
class DegenerateReport:
    eigenvalue: QuadExt
    algebraic_multiplicity: int
    geometric_multiplicity: int
    eigenvector: tuple
    case_tag: str
    char_poly: Polynomial = field(default=None, compare=False)


def _params(*xs):
    return tuple(to_rational(x) for x in xs)


def eigenvalues_general(alpha, beta, gamma, delta, N: int) -> list:
    """mu_j = al*de*(N-j) + be*ga*j for j = 0..N (requires al*de != be*ga)."""
    al, be, ga, de = _params(alpha, beta, gamma, delta)
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if al * de == be * ga:
        raise DomainError("al*de - be*ga = 0: degenerate case, use degenerate_analysis")
    mus = [al * de * (N - j) + be * ga * j for j in range(N + 1)]
    if len(set(mus)) != len(mus):
        raise ConsistencyError(f"closed-form eigenvalues are not distinct: {mus}")
    return mus


def eigenvector_general(alpha, beta, gamma, delta, N: int, j: int) -> list:
    """Coefficients of (al+be z)^j (ga+de z)^(N-j) divided by al^j ga^(N-j)."""
    al, be, ga, de = _params(alpha, beta, gamma, delta)
    if not 0 <= j <= N:
        raise DomainError(f"eigenvector index j={j} not in 0..{N}")
    if al == 0 or ga == 0:
        raise DomainError(
            "closed-form eigenvectors divide by alpha and gamma; with alpha=0 or gamma=0 the "
            "matrix is triangular (use char_poly / verify_eigenpair directly)"
        )
    if al * de == be * ga:
        raise DomainError("al*de - be*ga = 0: degenerate case, use degenerate_analysis")
    r_dg, r_ba = de / ga, be / al
    return [
        sum(
            binomial(j, i) * binomial(N - j, k - i) * r_dg ** (k - i) * r_ba**i
            for i in range(min(k, j) + 1)
        )
        for k in range(N + 1)
    ]


def _abc_checked(a, b, c, N):
    a, b, c = _params(a, b, c)
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if a == 0 or c == 0:
        raise DomainError("closed forms for B_N(a,b,c) need a != 0 and c != 0")
    D = b * b - 4 * a * c
    if D == 0:
        raise DomainError("D = b^2 - 4ac = 0: degenerate case with a single eigenvector")
    return a, b, c, D, QuadExt.sqrt(D)


def eigenvalues_abc(a, b, c, N: int) -> list:
    """lambda_j = j (b+sqrt D)/2 + (N-j) (b-sqrt D)/2 in Q(sqrt D)."""
    a, b, c, D, root = _abc_checked(a, b, c, N)
    hi, lo = (b + root) / 2, (b - root) / 2
    lams = [j * hi + (N - j) * lo for j in range(N + 1)]
    if len(set(lams)) != len(lams):
        raise ConsistencyError(f"closed-form eigenvalues are not distinct: {lams}")
    return lams


def eigenvector_abc(a, b, c, N: int, j: int) -> list:
    a, b, c, D, root = _abc_checked(a, b, c, N)
    if not 0 <= j <= N:
        raise DomainError(f"eigenvector index j={j} not in 0..{N}")
    plus, minus = b + root, b - root
    scale, ratio = 2 * c / plus, plus / minus
    out = []
    for k in range(N + 1):
        s = sum(
            (binomial(j, i) * binomial(N - j, k - i) * ratio**i for i in range(min(k, j) + 1)),
            QuadExt(0, 0, D),
        )
        out.append(scale**k * s)
    return out


def degenerate_analysis(alpha, beta, gamma, delta, N: int) -> DegenerateReport:
    """Single-eigenvalue analysis of J_N when al*de = be*ga.

    Multiplicities are computed (characteristic polynomial and exact rank),
    not copied from theory; a mismatch with the expected (N+1, 1) raises
    ConsistencyError.
    """
    al, be, ga, de = _params(alpha, beta, gamma, delta)
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    if al * de != be * ga:
        raise DomainError("degenerate_analysis needs al*de - be*ga = 0")
    if be * de == 0:
        if be != 0 or de != 0 or al * ga == 0:
            raise DomainError(
                "operator is identically zero for these parameters; every vector is an eigenvector"
            )
        mu, vec, tag = to_rational(0), [1] + [0] * N, "beta_delta_zero"
    else:
        mu = al * de * N
        vec = [binomial(N, k) * al ** (N - k) * be**k for k in range(N + 1)]
        tag = "beta_delta_nonzero"

    J = build_general(al, be, ga, de, N)
    p = char_poly(J)
    expected = Polynomial([-mu, 1]) ** (N + 1)
    alg = N + 1 if p == expected else _root_multiplicity(p, mu)
    geo = (N + 1) - rank(J.shifted(-mu))
    if alg != N + 1 or geo != 1:
        raise ConsistencyError(
            f"degenerate case multiplicities ({alg}, {geo}) differ from ({N + 1}, 1)"
        )
    if not verify_eigenpair(J, mu, vec, "right"):
        raise ConsistencyError("degenerate eigenvector fails the exact residual check")
    return DegenerateReport(QuadExt(mu), alg, geo, tuple(QuadExt(x) for x in vec), tag, p)


def _root_multiplicity(p: Polynomial, r) -> int:
    lin = Polynomial([-QuadExt.coerce(r), 1])
    m = 0
    while not p.is_zero():
        q, rem = divmod(p, lin)
        if not rem.is_zero():
            break
        p, m = q, m + 1
    return m


def transpose_weights(T: Tridiagonal) -> list:
    """Diagonal d with d_0 = 1, d_{k+1} = d_k sup_k / sub_k, so diag(d) T diag(d)^{-1} = T^T."""
    if any(x == 0 for x in T.sub) or any(x == 0 for x in T.sup):
        raise DomainError("left/right conversion needs all off-diagonal entries nonzero")
    d = [to_rational(1)]
    for k in range(T.size - 1):
        d.append(d[-1] * T.sup[k] / T.sub[k])
    return d


def left_to_right(T: Tridiagonal, u) -> list:
    """Right eigenvector from a left eigenvector: v_k = u_k / d_k."""
    d = transpose_weights(T)
    if len(u) != T.size:
        raise DomainError(f"vector length {len(u)} does not match matrix size {T.size}")
    return [QuadExt.coerce(x) / w for x, w in zip(u, d)]


def right_to_left(T: Tridiagonal, v) -> list:
    d = transpose_weights(T)
    if len(v) != T.size:
        raise DomainError(f"vector length {len(v)} does not match matrix size {T.size}")
    return [QuadExt.coerce(x) * w for x, w in zip(v, d)]


def recurrence_eigenvector(T: Tridiagonal, lam) -> list:
    """Solve (T - lam I) v = 0 row by row with v_0 = 1.

    Works when every superdiagonal entry is nonzero; the last row is then
    the consistency condition, which holds exactly iff lam is an eigenvalue.
    """
    if any(x == 0 for x in T.sup):
        raise DomainError("recurrence eigenvector needs a nonzero superdiagonal")
    lam = QuadExt.coerce(lam)
    n = T.size
    v = [QuadExt(1, 0, lam.radicand)]
    for k in range(n - 1):
        acc = (lam - T.main[k]) * v[k]
        if k:
            acc = acc - T.sub[k - 1] * v[k - 1]
        v.append(acc / T.sup[k])
    return v


def verify_eigenpair(T: Tridiagonal, lam, v, side: str = "right") -> bool:
    """True iff v != 0 and T v = lam v (side='right') or v T = lam v (side='left') exactly."""
    if len(v) != T.size:
        raise DomainError(f"vector length {len(v)} does not match matrix size {T.size}")
    v = [QuadExt.coerce(x) for x in v]
    if not any(v):
        return False
    lam = QuadExt.coerce(lam)
    if side == "right":
        w = matvec(T, v)
    elif side == "left":
        w = vecmat(v, T)
    else:
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    return all(not (wk - lam * vk) for wk, vk in zip(w, v))


def proportional(u, v) -> bool:
    """Exact test u = c v for some nonzero scalar c (cross-multiplication)."""
    if len(u) != len(v):
        return False
    u = [QuadExt.coerce(x) for x in u]
    v = [QuadExt.coerce(x) for x in v]
    p = next((i for i, x in enumerate(v) if x), None)
    if p is None or not u[p]:
        return False
    return all(not (ui * v[p] - u[p] * vi) for ui, vi in zip(u, v))
