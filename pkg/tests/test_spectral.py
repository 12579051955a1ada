import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from kacspec.errors import DomainError
from kacspec.exactnum import Polynomial, QuadExt
from kacspec.matrices import (
    Tridiagonal,
    build_abc,
    build_appendix_matrix,
    build_general,
    build_hahn,
    build_sylvester_kac,
    char_poly,
)
from kacspec.spectral import (
    EigenPair,
    degenerate_analysis,
    eigenvalues_abc,
    eigenvalues_general,
    eigenvector_abc,
    eigenvector_general,
    left_to_right,
    proportional,
    recurrence_eigenvector,
    right_to_left,
    verify_eigenpair,
)

from conftest import rand_abc, rand_general, rand_q, sympy_char_poly

K2 = build_sylvester_kac(2)


class TestGeneral:
    def test_eigenvalue_examples(self):
        assert eigenvalues_general(1, 1, 1, -1, 2) == [-2, 0, 2]
        assert eigenvalues_general(1, 1, 1, -1, 1) == [-1, 1]
        assert eigenvalues_general(2, 1, 1, 1, 3) == [6, 5, 4, 3]
        with pytest.raises(DomainError):
            eigenvalues_general(1, 1, 2, 2, 3)

    def test_eigenvector_examples(self):
        assert eigenvector_general(1, 1, 1, -1, 2, 0) == [1, -2, 1]
        assert eigenvector_general(1, 1, 1, -1, 2, 2) == [1, 2, 1]
        assert verify_eigenpair(K2, -2, [1, -2, 1])
        assert verify_eigenpair(K2, 2, [1, 2, 1])
        al, be, ga, de = map(Fraction, ("3/2", "-2", "5", "1/3"))
        from math import comb
        assert eigenvector_general(al, be, ga, de, 5, 0) == [comb(5, k) * (de / ga) ** k for k in range(6)]

    def test_eigenvector_rejects_zero_alpha_gamma(self):
        with pytest.raises(DomainError, match="triangular"):
            eigenvector_general(0, 1, 1, 1, 2, 1)
        with pytest.raises(DomainError):
            eigenvector_general(1, 1, 0, 1, 2, 1)
        with pytest.raises(DomainError):
            eigenvector_general(1, 1, 1, 1, 2, 3)

    def test_random_against_sympy(self):
        rng = random.Random(12)
        for _ in range(40):
            params = rand_general(rng)
            N = rng.randint(1, 7)
            T = build_general(*params, N)
            mus = eigenvalues_general(*params, N)
            assert list(Polynomial.from_roots(mus).coeffs) == sympy_char_poly(T)
            for j, mu in enumerate(mus):
                assert verify_eigenpair(T, mu, eigenvector_general(*params, N, j))

    @settings(max_examples=60, deadline=None)
    @given(
        st.tuples(*[st.fractions(-6, 6, max_denominator=5).filter(bool)] * 4).filter(
            lambda p: p[0] * p[3] != p[1] * p[2]
        ),
        st.integers(1, 6),
    )
    def test_property_eigenpairs(self, params, N):
        T = build_general(*params, N)
        mus = eigenvalues_general(*params, N)
        assert Polynomial.from_roots(mus) == char_poly(T)
        for j in range(N + 1):
            assert verify_eigenpair(T, mus[j], eigenvector_general(*params, N, j))


class TestABC:
    def test_eigenvalue_examples(self):
        assert eigenvalues_abc(1, 0, -1, 2) == [-2, 0, 2]
        w = eigenvalues_abc(1, 1, 1, 1)
        assert w == [QuadExt(Fraction(1, 2), Fraction(-1, 2), -3), QuadExt(Fraction(1, 2), Fraction(1, 2), -3)]
        assert w[0] + w[1] == 1
        p = char_poly(build_abc(1, 1, 1, 1))
        assert p == Polynomial([1, -1, 1]) and all(p(x) == 0 for x in w)

    def test_errors(self):
        with pytest.raises(DomainError):
            eigenvalues_abc(1, 2, 1, 3)  # D = 0
        with pytest.raises(DomainError):
            eigenvalues_abc(0, 1, 1, 3)
        with pytest.raises(DomainError):
            eigenvector_abc(1, 1, 0, 3, 1)

    def test_eigenvector_examples(self):
        K1 = build_sylvester_kac(1)
        assert eigenvector_abc(1, 0, -1, 1, 1) == [1, 1]
        assert eigenvector_abc(1, 0, -1, 1, 0) == [1, -1]
        assert eigenvector_abc(1, 0, -1, 2, 1) == [1, 0, -1]
        assert verify_eigenpair(K1, 1, [1, 1]) and verify_eigenpair(K1, -1, [1, -1])
        assert verify_eigenpair(K2, 0, [1, 0, -1])

    @pytest.mark.parametrize("square", [True, False])
    def test_random(self, square):
        rng = random.Random(13 + square)
        for _ in range(25):
            a, b, c = rand_abc(rng, square=square)
            N = rng.randint(1, 6)
            T = build_abc(a, b, c, N)
            p = char_poly(T)
            lams = eigenvalues_abc(a, b, c, N)
            for j, lam in enumerate(lams):
                assert p(lam) == 0
                assert verify_eigenpair(T, lam, eigenvector_abc(a, b, c, N, j))
            if square:
                assert all(l.is_rational() for l in lams)

    def test_branch_symmetry(self):
        # (sqrtD, j) -> (-sqrtD, N-j) maps the formula onto itself
        a, b, c, N = 2, 3, 5, 4
        lams = eigenvalues_abc(a, b, c, N)
        assert [l.conjugate() for l in lams] == lams[::-1]

    def test_consistent_with_general_under_substitution(self):
        rng = random.Random(14)
        for _ in range(30):
            a, b, c = rand_abc(rng, square=True)
            root = QuadExt.sqrt(b * b - 4 * a * c).rat
            if b + root == 0 or b - root == 0:
                continue
            N = rng.randint(1, 6)
            sub = ((b - root) / (4 * c), Fraction(1, 2), b + root, 2 * c)
            assert sorted(eigenvalues_general(*sub, N)) == sorted(l.rat for l in eigenvalues_abc(a, b, c, N))


class TestDegenerate:
    def test_beta_delta_zero(self):
        rep = degenerate_analysis(1, 0, 5, 0, 3)
        assert rep.eigenvalue == 0
        assert (rep.algebraic_multiplicity, rep.geometric_multiplicity) == (4, 1)
        assert rep.eigenvector == (1, 0, 0, 0) and rep.case_tag == "beta_delta_zero"

    def test_beta_delta_nonzero(self):
        rep = degenerate_analysis(1, 1, 2, 2, 2)
        assert rep.eigenvalue == 4 and rep.eigenvector == (1, 2, 1)
        assert rep.case_tag == "beta_delta_nonzero"
        rep = degenerate_analysis(1, 1, 1, 1, 1)
        assert rep.eigenvalue == 1 and rep.char_poly == Polynomial([1, -2, 1])

    def test_painvin_matrix(self):
        # al = -be = -1/2, ga = -de = 1
        rep = degenerate_analysis(Fraction(-1, 2), Fraction(1, 2), 1, -1, 5)
        assert rep.eigenvalue == Fraction(5, 2)

    def test_errors(self):
        with pytest.raises(DomainError):
            degenerate_analysis(1, 1, 1, -1, 2)
        with pytest.raises(DomainError, match="identically zero"):
            degenerate_analysis(0, 0, 1, 1, 2)

    def test_random_against_sympy_rank(self):
        rng = random.Random(15)
        for _ in range(20):
            al, be, t = rand_q(rng), rand_q(rng), rand_q(rng)
            ga, de = t * al, t * be
            N = rng.randint(1, 6)
            rep = degenerate_analysis(al, be, ga, de, N)
            J = build_general(al, be, ga, de, N)
            mu = rep.eigenvalue.rat
            assert sp.Matrix(J.shifted(-mu).to_dense()).rank() == N
            assert list((Polynomial([-mu, 1]) ** (N + 1)).coeffs) == sympy_char_poly(J)


class TestLeftRight:
    def test_examples(self):
        H1 = build_appendix_matrix("H", 1)
        assert left_to_right(H1, [1, -1]) == [1, -1]
        G1 = build_appendix_matrix("G", 1)
        v = left_to_right(G1, [2, -1])
        assert v == [2, -4] and verify_eigenpair(G1, -2, v)
        assert verify_eigenpair(G1, -2, [2, -1], side="left")
        assert left_to_right(G1, [6, -3]) == [3 * x for x in v]

    def test_zero_offdiagonal_rejected(self):
        with pytest.raises(DomainError):
            left_to_right(Tridiagonal([0], [1, 2], [1]), [1, 0])

    def test_random_round_trip(self):
        rng = random.Random(16)
        for _ in range(30):
            n = rng.randint(1, 7)
            T = Tridiagonal([rand_q(rng) for _ in range(n - 1)], [rand_q(rng, nonzero=False) for _ in range(n)], [rand_q(rng) for _ in range(n - 1)])
            u = [rand_q(rng) for _ in range(n)]
            assert right_to_left(T, left_to_right(T, u)) == u
            # converting with T and then with T^T is the identity
            assert left_to_right(T.transpose(), left_to_right(T, u)) == u

    def test_left_vectors_convert_for_general_family(self):
        rng = random.Random(17)
        for _ in range(20):
            params = rand_general(rng)
            N = rng.randint(1, 6)
            T = build_general(*params, N)
            for j, mu in enumerate(eigenvalues_general(*params, N)):
                # a right eigenvector of T^T is a left eigenvector of T
                u = recurrence_eigenvector(T.transpose(), mu)
                assert verify_eigenpair(T, mu, u, side="left")
                v = left_to_right(T, u)
                assert verify_eigenpair(T, mu, v)
                assert proportional(v, eigenvector_general(*params, N, j))


class TestVerify:
    def test_examples(self):
        assert verify_eigenpair(K2, -2, [1, -2, 1], "right")
        assert not verify_eigenpair(K2, -2, [1, 1, 1], "right")
        assert not verify_eigenpair(K2, 0, [0, 0, 0])
        with pytest.raises(DomainError):
            verify_eigenpair(K2, 0, [1, 0])

    def test_eigenpair_type(self):
        with pytest.raises(DomainError):
            EigenPair(0, 1, [0, 0])
        pair = EigenPair(0, -2, [1, -2, 1])
        assert not pair.verified and pair.verify(K2).verified

    def test_recurrence_eigenvector_for_hahn(self):
        for N in range(1, 7):
            C = build_hahn(Fraction(1, 3), N)
            for j in range(N + 1):
                assert verify_eigenpair(C, j, recurrence_eigenvector(C, j))

    def test_proportional(self):
        assert proportional([1, 2, 3], [-2, -4, -6])
        assert not proportional([1, 2, 3], [1, 2, 4])
        assert not proportional([0, 0], [0, 0])
        assert proportional([QuadExt(1, 1, 2), 1], [1, QuadExt(-1, 1, 2)])
