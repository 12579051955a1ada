import random
from fractions import Fraction

import pytest
import sympy as sp

from kacspec.exactnum import rational_sqrt


def rand_q(rng, lo=-9, hi=9, den=6, nonzero=True):
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if q or not nonzero:
            return q


def rand_general(rng):
    """(alpha, beta, gamma, delta), all nonzero, alpha*delta != beta*gamma."""
    while True:
        al, be, ga, de = (rand_q(rng) for _ in range(4))
        if al * de != be * ga:
            return al, be, ga, de


def rand_abc(rng, square=None):
    """(a, b, c) with ac != 0, D != 0; square=True/False forces D to be / not be a square."""
    while True:
        a, b, c = rand_q(rng), rand_q(rng, nonzero=False), rand_q(rng)
        D = b * b - 4 * a * c
        if D == 0:
            continue
        if square is None or (rational_sqrt(D) is not None) == square:
            return a, b, c


def sympy_char_poly(T):
    """Independent oracle: det(xI - T) via sympy's dense determinant; coefficients low->high."""
    x = sp.symbols("x")
    M = sp.Matrix(T.size, T.size, lambda i, j: sp.Rational(T.entry(i, j).numerator, T.entry(i, j).denominator))
    p = sp.Poly((x * sp.eye(T.size) - M).det(method="berkowitz"), x)
    return [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]


@pytest.fixture
def rng():
    return random.Random(20261019)
