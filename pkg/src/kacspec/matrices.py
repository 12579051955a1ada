"""Exact tridiagonal matrices and the builders for the Sylvester-Kac family.

Indexing is 0-based.  For an n x n matrix ``T``:

    T.sub[k]  = entry (k+1, k),  k = 0..n-2
    T.main[k] = entry (k, k),    k = 0..n-1
    T.sup[k]  = entry (k, k+1),  k = 0..n-2

Formula-to-code table for the builders (N is the matrix order minus one):

    family                 sup[k]                   main[k]           sub[k]
    general(al,be,ga,de)   (k+1)*al*ga              k*(al*de+be*ga)   -(N-k)*be*de
    sylvester_kac          k+1                      0                 N-k
    abc(a,b,c)             (k+1)*a                  k*b               -(N-k)*c
    G                      k+1                      0                 2N+2-k
    S                      k+1 (last entry 2N)      0                 2N-k
    H                      S / 2
    hahn(alpha)            a_k (see build_hahn)     N/2               c_{k+1}
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactnum import Polynomial, QuadExt, to_rational


@dataclass(frozen=True)
class Tridiagonal:
    sub: tuple
    main: tuple
    sup: tuple

    def __post_init__(self):
        sub = tuple(to_rational(x) for x in self.sub)
        main = tuple(to_rational(x) for x in self.main)
        sup = tuple(to_rational(x) for x in self.sup)
        n = len(main)
        if n < 1:
            raise DomainError("tridiagonal matrix must have size >= 1")
        if len(sub) != n - 1 or len(sup) != n - 1:
            raise DomainError(
                f"diagonal lengths must be n-1, n, n-1; got {len(sub)}, {n}, {len(sup)}"
            )
        object.__setattr__(self, "sub", sub)
        object.__setattr__(self, "main", main)
        object.__setattr__(self, "sup", sup)

    @property
    def size(self) -> int:
        return len(self.main)

    def entry(self, i: int, j: int) -> Fraction:
        if i == j:
            return self.main[i]
        if j == i + 1:
            return self.sup[i]
        if i == j + 1:
            return self.sub[j]
        return Fraction(0)

    def to_dense(self) -> list[list[Fraction]]:
        n = self.size
        return [[self.entry(i, j) for j in range(n)] for i in range(n)]

    @classmethod
    def from_dense(cls, rows) -> Tridiagonal:
        n = len(rows)
        for i in range(n):
            for j in range(n):
                if abs(i - j) > 1 and to_rational(rows[i][j]) != 0:
                    raise DomainError(f"entry ({i},{j}) is outside the three diagonals")
        return cls(
            [rows[k + 1][k] for k in range(n - 1)],
            [rows[k][k] for k in range(n)],
            [rows[k][k + 1] for k in range(n - 1)],
        )

    def transpose(self) -> Tridiagonal:
        return Tridiagonal(self.sup, self.main, self.sub)

    def scaled(self, c) -> Tridiagonal:
        c = to_rational(c)
        return Tridiagonal(
            [c * x for x in self.sub], [c * x for x in self.main], [c * x for x in self.sup]
        )

    def shifted(self, c) -> Tridiagonal:
        """T + c*I."""
        c = to_rational(c)
        return Tridiagonal(self.sub, [x + c for x in self.main], self.sup)

    def leading(self, m: int) -> Tridiagonal:
        """Leading principal m x m submatrix."""
        if not 1 <= m <= self.size:
            raise DomainError(f"leading submatrix size {m} not in 1..{self.size}")
        return Tridiagonal(self.sub[: m - 1], self.main[:m], self.sup[: m - 1])


def _check_order(N: int, least: int = 1):
    if not isinstance(N, int) or N < least:
        raise DomainError(f"N must be an integer >= {least}, got {N!r}")


def build_general(alpha, beta, gamma, delta, N: int) -> Tridiagonal:
    """Matrix of the operator (al+be z)(ga+de z) d/dz - be de N z on polynomials of degree <= N."""
    _check_order(N)
    al, be, ga, de = map(to_rational, (alpha, beta, gamma, delta))
    return Tridiagonal(
        [-(N - k) * be * de for k in range(N)],
        [k * (al * de + be * ga) for k in range(N + 1)],
        [(k + 1) * al * ga for k in range(N)],
    )


def build_sylvester_kac(N: int) -> Tridiagonal:
    _check_order(N)
    return Tridiagonal(range(N, 0, -1), [0] * (N + 1), range(1, N + 1))


def build_abc(a, b, c, N: int) -> Tridiagonal:
    _check_order(N)
    a, b, c = map(to_rational, (a, b, c))
    return Tridiagonal(
        [-(N - k) * c for k in range(N)],
        [k * b for k in range(N + 1)],
        [(k + 1) * a for k in range(N)],
    )


def build_appendix_matrix(kind: str, N: int) -> Tridiagonal:
    """G_N, S_N or H_N = S_N / 2.  N = 0 gives the 1 x 1 zero matrix."""
    _check_order(N, least=0)
    kind = str(kind).upper()
    if kind == "G":
        return Tridiagonal([2 * N + 2 - k for k in range(N)], [0] * (N + 1), range(1, N + 1))
    if kind in ("S", "H"):
        sup = list(range(1, N)) + [2 * N] if N else []
        S = Tridiagonal([2 * N - k for k in range(N)], [0] * (N + 1), sup)
        return S if kind == "S" else S.scaled(Fraction(1, 2))
    raise DomainError(f"unknown appendix matrix kind {kind!r}; expected G, S or H")


def build_hahn(alpha, N: int) -> Tridiagonal:
    """Three-term recurrence matrix C_N(alpha) of the Hahn polynomials with equal parameters."""
    _check_order(N)
    al = to_rational(alpha)
    for i in range(1, N + 1):
        if 2 * i + 2 * al + 1 == 0:
            raise DomainError(f"build_hahn: denominator 2i+2*alpha+1 vanishes at i={i}")
    half_n = Fraction(N, 2)
    sup = [half_n] + [
        (i + 2 * al + 1) * (N - i) / (2 * (2 * i + 2 * al + 1)) for i in range(1, N)
    ]
    sub = [i * (i + 2 * al + N + 1) / (2 * (2 * i + 2 * al + 1)) for i in range(1, N + 1)]
    return Tridiagonal(sub, [half_n] * (N + 1), sup)


def matvec(T: Tridiagonal, v) -> list[QuadExt]:
    """Exact product T v."""
    n = T.size
    if len(v) != n:
        raise DomainError(f"vector length {len(v)} does not match matrix size {n}")
    v = [QuadExt.coerce(x) for x in v]
    out = []
    for k in range(n):
        acc = T.main[k] * v[k]
        if k > 0:
            acc = acc + T.sub[k - 1] * v[k - 1]
        if k < n - 1:
            acc = acc + T.sup[k] * v[k + 1]
        out.append(acc)
    return out


def vecmat(u, T: Tridiagonal) -> list[QuadExt]:
    """Exact row-vector product u T."""
    return matvec(T.transpose(), u)


def char_poly(T: Tridiagonal) -> Polynomial:
    """det(xI - T) by the three-term recurrence on leading principal minors."""
    # Fraction lists internally; wrapping in QuadExt happens once at the end.
    prev: list[Fraction] = [Fraction(1)]
    cur: list[Fraction] = [-T.main[0], Fraction(1)]
    for k in range(1, T.size):
        d, off = T.main[k], T.sup[k - 1] * T.sub[k - 1]
        nxt = [Fraction(0)] + cur  # x * cur
        for i, c in enumerate(cur):
            nxt[i] -= d * c
        if off:
            for i, c in enumerate(prev):
                nxt[i] -= off * c
        prev, cur = cur, nxt
    return Polynomial(cur)


def diag_similarity(T: Tridiagonal, d) -> Tridiagonal:
    """D T D^{-1} with D = diag(d)."""
    d = [to_rational(x) for x in d]
    if len(d) != T.size:
        raise DomainError(f"weight vector length {len(d)} does not match matrix size {T.size}")
    if any(x == 0 for x in d):
        raise DomainError("diagonal similarity weights must be nonzero")
    n = T.size
    return Tridiagonal(
        [T.sub[k] * d[k + 1] / d[k] for k in range(n - 1)],
        T.main,
        [T.sup[k] * d[k] / d[k + 1] for k in range(n - 1)],
    )


def reversal_similarity(T: Tridiagonal, w) -> Tridiagonal:
    """P T P^{-1} for the weighted anti-diagonal P[i, n-1-i] = w[i].

    Entry (i, j) of the result is w[i] * T[n-1-i, n-1-j] / w[j].
    """
    w = [to_rational(x) for x in w]
    n = T.size
    if len(w) != n:
        raise DomainError(f"weight vector length {len(w)} does not match matrix size {n}")
    if any(x == 0 for x in w):
        raise DomainError("reversal similarity weights must be nonzero")
    return Tridiagonal(
        [T.sup[n - 2 - i] * w[i + 1] / w[i] for i in range(n - 1)],
        T.main[::-1],
        [T.sub[n - 2 - i] * w[i] / w[i + 1] for i in range(n - 1)],
    )


def is_persymmetric(T: Tridiagonal) -> bool:
    n = T.size
    return (
        T.main == T.main[::-1]
        and all(T.sup[i] == T.sup[n - 2 - i] for i in range(n - 1))
        and all(T.sub[i] == T.sub[n - 2 - i] for i in range(n - 1))
    )


def factorial_weights(n: int) -> list[int]:
    """(0!, 1!, ..., (n-1)!)."""
    return [math.factorial(k) for k in range(n)]


def rank(rows) -> int:
    """Exact rank of a rational matrix by fraction-free (Bareiss) elimination.

    ``rows`` is a dense list of rows or a Tridiagonal.
    """
    if isinstance(rows, Tridiagonal):
        rows = rows.to_dense()
    # scale each row to integers so the Bareiss divisions stay exact
    m = []
    for row in rows:
        row = [to_rational(x) for x in row]
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        m.append([int(x * lcm) for x in row])
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    r, prev = 0, 1
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (p * m[i][j] - m[i][col] * m[r][j]) // prev
            m[i][col] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r
