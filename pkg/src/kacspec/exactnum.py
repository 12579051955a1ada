"""Exact scalars and polynomials.

``Fraction`` from the standard library is the rational type throughout.
On top of it this module adds elements of a quadratic extension
Q(sqrt(d)), dense univariate polynomials over such elements, and the two
combinatorial helpers the closed-form eigenvector sums need.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DomainError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_rational(x) -> Fraction:
    """Coerce ``x`` to a Fraction without ever going through floating point.

    Accepts ints, Fractions and strings of the form ``"p"`` or ``"p/q"``.
    Floats and decimal strings are rejected.
    """
    if isinstance(x, bool):
        raise DomainError(f"not a rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, QuadExt):
        if x.surd != 0:
            raise DomainError(f"irrational value {x} where a rational is required")
        return x.rat
    if isinstance(x, str):
        m = _RATIONAL_RE.match(x)
        if not m:
            raise DomainError(f"cannot parse {x!r} as an exact rational (use 'p' or 'p/q')")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise DomainError(f"zero denominator in {x!r}")
        return Fraction(num, den)
    raise DomainError(f"not an exact rational: {x!r} ({type(x).__name__})")


def rational_str(q) -> str:
    q = to_rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_sqrt(q) -> Fraction | None:
    """Return s >= 0 with s*s == q if q is the square of a rational, else None."""
    q = to_rational(q)
    if q < 0:
        return None
    p, d = q.numerator, q.denominator
    rp, rd = math.isqrt(p), math.isqrt(d)
    if rp * rp == p and rd * rd == d:
        return Fraction(rp, rd)
    return None


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise DomainError(f"binomial: negative n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(a, i: int) -> Fraction:
    """Rising factorial (a)_i = a (a+1) ... (a+i-1); (a)_0 = 1."""
    if i < 0:
        raise DomainError(f"pochhammer: negative length i={i}")
    a = to_rational(a)
    out = Fraction(1)
    for t in range(i):
        out *= a + t
    return out


_ZERO, _ONE = Fraction(0), Fraction(1)


class QuadExt:
    """Element rat + surd*sqrt(radicand) of Q(sqrt(radicand)).

    Perfect-square radicands are folded into the rational part on
    construction, so a nonzero ``surd`` always means a genuinely irrational
    (or non-real) value and equality is componentwise.  Values whose surd is
    zero combine with anything; two values with nonzero surds must share a
    radicand.
    """

    __slots__ = ("rat", "surd", "radicand")

    def __init__(self, rat=0, surd=0, radicand=0):
        rat, surd, radicand = to_rational(rat), to_rational(surd), to_rational(radicand)
        root = rational_sqrt(radicand)
        if root is not None:
            rat, surd, radicand = rat + surd * root, Fraction(0), Fraction(0)
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "surd", surd)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def _trusted(cls, rat, surd, radicand):
        # fields already Fractions and radicand already normalized
        obj = object.__new__(cls)
        object.__setattr__(obj, "rat", rat)
        object.__setattr__(obj, "surd", surd)
        object.__setattr__(obj, "radicand", radicand)
        return obj

    @classmethod
    def coerce(cls, x) -> QuadExt:
        if isinstance(x, QuadExt):
            return x
        return cls._trusted(to_rational(x), _ZERO, _ZERO)

    @classmethod
    def sqrt(cls, d) -> QuadExt:
        """+sqrt(d); for negative d this is i*sqrt(|d|)."""
        return cls(0, 1, d)

    # -- structure -----------------------------------------------------------------

    def is_rational(self) -> bool:
        return self.surd == 0

    def conjugate(self) -> QuadExt:
        return QuadExt._trusted(self.rat, -self.surd, self.radicand)

    def norm(self) -> Fraction:
        return self.rat * self.rat - self.surd * self.surd * self.radicand

    def _join(self, other: QuadExt) -> Fraction:
        if self.surd == 0 and other.surd == 0:
            return self.radicand if self.radicand != 0 else other.radicand
        if self.surd == 0:
            return other.radicand
        if other.surd == 0 or self.radicand == other.radicand:
            return self.radicand
        raise DomainError(
            f"incompatible radicands {rational_str(self.radicand)} and {rational_str(other.radicand)}"
        )

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other):
        try:
            other = QuadExt.coerce(other)
        except DomainError:
            return NotImplemented
        d = self._join(other)
        return QuadExt._trusted(self.rat + other.rat, self.surd + other.surd, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._trusted(-self.rat, -self.surd, self.radicand)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = QuadExt.coerce(other)
        except DomainError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QuadExt.coerce(other)
        except DomainError:
            return NotImplemented
        d = self._join(other)
        x1, y1, x2, y2 = self.rat, self.surd, other.rat, other.surd
        return QuadExt._trusted(x1 * x2 + y1 * y2 * d, x1 * y2 + x2 * y1, d)

    __rmul__ = __mul__

    def inverse(self) -> QuadExt:
        if self.rat == 0 and self.surd == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(d))")
        n = self.norm()
        # nonzero surd implies a non-square radicand, hence n != 0
        return QuadExt._trusted(self.rat / n, -self.surd / n, self.radicand)

    def __truediv__(self, other):
        try:
            other = QuadExt.coerce(other)
        except DomainError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadExt.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out, base = QuadExt._trusted(_ONE, _ZERO, self.radicand), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- comparison ----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QuadExt):
            try:
                other = QuadExt.coerce(other)
            except DomainError:
                return NotImplemented
        if self.surd == 0 and other.surd == 0:
            return self.rat == other.rat
        return self.rat == other.rat and self.surd == other.surd and self.radicand == other.radicand

    def __hash__(self):
        if self.surd == 0:
            return hash(self.rat)
        return hash((self.rat, self.surd, self.radicand))

    def __bool__(self):
        return self.rat != 0 or self.surd != 0

    def __repr__(self):
        if self.surd == 0:
            return f"QuadExt({rational_str(self.rat)})"
        return (
            f"QuadExt({rational_str(self.rat)}, {rational_str(self.surd)}, "
            f"{rational_str(self.radicand)})"
        )

    def __str__(self):
        if self.surd == 0:
            return rational_str(self.rat)
        root = f"sqrt({rational_str(self.radicand)})"
        s = "" if self.surd == 1 else "-" if self.surd == -1 else f"{rational_str(self.surd)}*"
        if self.rat == 0:
            return f"{s}{root}"
        sign = "+" if self.surd > 0 else "-"
        s = "" if abs(self.surd) == 1 else f"{rational_str(abs(self.surd))}*"
        return f"{rational_str(self.rat)} {sign} {s}{root}"


def quad_make(x, y, d) -> QuadExt:
    return QuadExt(x, y, d)


def quad_mul(u, v) -> QuadExt:
    return QuadExt.coerce(u) * QuadExt.coerce(v)


def quad_inv(u) -> QuadExt:
    return QuadExt.coerce(u).inverse()


class Polynomial:
    """Dense polynomial; ``coeffs[k]`` is the coefficient of z**k.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients
    and ``degree`` None.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [QuadExt.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c=1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls.monomial(1)

    @classmethod
    def from_roots(cls, roots) -> Polynomial:
        """Monic polynomial prod (z - r)."""
        out = cls([1])
        for r in roots:
            out = out * cls([-QuadExt.coerce(r), 1])
        return out

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> QuadExt:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return QuadExt(0)

    def leading(self) -> QuadExt:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- arithmetic ----------------------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self), len(other))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = QuadExt.coerce(other)
            return Polynomial(a * c for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [QuadExt(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = Polynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other):
        return poly_divide(self, self._lift(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> Polynomial:
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x) -> QuadExt:
        return poly_eval(self, x)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial([other])
            except DomainError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
            if c.is_rational():
                sign = "-" if c.rat < 0 else "+"
                mag = rational_str(abs(c.rat))
                body = mag if not mono else mono if mag == "1" else f"{mag}*{mono}"
            else:
                sign, body = "+", f"({c})" + (f"*{mono}" if mono else "")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_eval(p: Polynomial, x) -> QuadExt:
    """Horner evaluation; raises DomainError on incompatible radicands."""
    x = QuadExt.coerce(x)
    acc = QuadExt(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_divide(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Exact long division: num == q*den + r with deg r < deg den."""
    if den.is_zero():
        raise DomainError("polynomial division by the zero polynomial")
    rem = list(num.coeffs)
    dd = den.degree
    lead_inv = den.leading().inverse()
    if len(rem) <= dd:
        return Polynomial(), Polynomial(rem)
    quot = [QuadExt(0)] * (len(rem) - dd)
    for k in range(len(rem) - 1 - dd, -1, -1):
        c = rem[k + dd] * lead_inv
        quot[k] = c
        if c:
            for i, b in enumerate(den.coeffs):
                rem[k + i] = rem[k + i] - c * b
    return Polynomial(quot), Polynomial(rem[:dd])
