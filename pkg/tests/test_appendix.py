from fractions import Fraction

import pytest

from kacspec.appendix import (
    appendix_battery,
    appendix_spectra,
    g_left_eigenvector,
    g_right_eigenvector,
    h_left_eigenvector,
    h_right_eigenvector,
    hahn_spectrum_check,
    m_identity_check,
    omega_pair,
    pairing_audit,
    persymmetric_check,
    relation_check,
    right_eigenvector,
)
from kacspec.errors import DomainError
from kacspec.exactnum import Polynomial, binomial
from kacspec.matrices import build_appendix_matrix, build_sylvester_kac, char_poly
from kacspec.spectral import left_to_right, proportional, verify_eigenpair
from kacspec.appendix import s_identity_check


def test_omega_examples():
    om = omega_pair(0)
    assert om.omega1 == Polynomial([0, 1]) and om.omega0 == Polynomial([-4, 0, 1])
    om = omega_pair(1)
    assert om.omega1 == Polynomial([-4, 0, 1])
    assert om.omega0 * om.omega1 == char_poly(build_sylvester_kac(4))
    assert omega_pair(2).omega1 == Polynomial([0, -16, 0, 1])


@pytest.mark.parametrize("N", [0, 1, 5])
def test_s_and_m_identities(N):
    assert s_identity_check(N)
    assert m_identity_check(N)


def test_m_identity_by_hand_at_zero():
    M = build_sylvester_kac(2).leading(2)
    assert M.to_dense() == [[0, 1], [2, 0]]
    assert char_poly(M) == Polynomial([-2, 0, 1])


@pytest.mark.parametrize("N", range(0, 6))
def test_persymmetric_route(N):
    assert persymmetric_check(N)


def test_spectra_examples():
    assert appendix_spectra("G", 2) == [-4, 0, 4]
    assert appendix_spectra("S", 2) == [-4, 0, 4]
    assert appendix_spectra("H", 1) == [-1, 1]
    with pytest.raises(DomainError):
        appendix_spectra("X", 2)


def test_hahn_examples():
    assert hahn_spectrum_check(Fraction(-1, 2), 1)
    assert hahn_spectrum_check(Fraction(1, 2), 3)
    assert hahn_spectrum_check(Fraction(1, 3), 5)


def test_relation_examples():
    assert relation_check("H", 1)
    assert relation_check("G", 1)
    assert relation_check("H", 6)


@pytest.mark.parametrize("N", range(1, 8))
def test_printed_g_weights_fail(N):
    # R_N with weight i+1 in row i does not give G_N^T; weight j+1 in column j does
    assert not relation_check("G", N, weights=list(range(1, N + 2)))
    assert relation_check("G", N, weights=list(range(N + 1, 0, -1)))


def test_left_vector_examples():
    H1, G1 = build_appendix_matrix("H", 1), build_appendix_matrix("G", 1)
    assert h_left_eigenvector(1, 0) == [1, -1]
    assert verify_eigenpair(H1, -1, [1, -1], "left")
    assert h_left_eigenvector(1, 1) == [-1, -1]
    assert verify_eigenpair(H1, 1, [-1, -1], "left")
    assert g_left_eigenvector(1, 0) == [2, -1]
    assert verify_eigenpair(G1, -2, [2, -1], "left")
    with pytest.raises(DomainError):
        h_left_eigenvector(2, 3)


def test_right_vector_examples():
    G1, H1 = build_appendix_matrix("G", 1), build_appendix_matrix("H", 1)
    assert g_right_eigenvector(1, 0) == [2, -4]
    assert verify_eigenpair(G1, -2, [2, -4])
    assert h_right_eigenvector(1, 0) == [1, 1]
    assert verify_eigenpair(H1, 1, [1, 1])
    assert h_right_eigenvector(1, 1) == [-1, 1]
    assert verify_eigenpair(H1, -1, [-1, 1])


@pytest.mark.parametrize("N", range(1, 11))
@pytest.mark.parametrize("family", ["H", "G"])
def test_left_vectors_direct_pairing(family, N):
    T = build_appendix_matrix(family, N)
    left = h_left_eigenvector if family == "H" else g_left_eigenvector
    scale = 1 if family == "H" else 2
    for j in range(N + 1):
        assert verify_eigenpair(T, scale * (2 * j - N), left(N, j), "left")


def test_audit_examples():
    assert pairing_audit("G", 1).mapping == (0, 1)
    assert pairing_audit("H", 1).mapping == (1, 0)
    a = pairing_audit("G", 4)
    assert sorted(a.mapping) == list(range(5)) and a.all_verified
    assert all(a.left_right_agree)


@pytest.mark.parametrize("N", range(1, 11))
def test_g_right_formula_pairs_directly(N):
    audit = pairing_audit("G", N)
    assert audit.mapping == tuple(range(N + 1)) and audit.all_verified


@pytest.mark.parametrize("N", [2, 4, 6, 8, 10])
def test_h_right_formula_pairs_directly_for_even_n(N):
    audit = pairing_audit("H", N)
    assert audit.mapping == tuple(range(N + 1)) and all(audit.left_right_agree)


@pytest.mark.parametrize("N", [3, 5, 7, 9])
def test_h_right_formula_last_entry_sign_for_odd_n(N):
    """For odd N >= 3 the printed last entry has the wrong sign; every other entry is right."""
    audit = pairing_audit("H", N)
    assert not audit.all_verified
    assert [f[2] for f in audit.failures] == list(range(N + 1))
    H = build_appendix_matrix("H", N)
    for j in range(N + 1):
        v = h_right_eigenvector(N, j)
        v[-1] *= (-1) ** N
        assert verify_eigenpair(H, 2 * j - N, v)
        assert v[-1] == Fraction(binomial(2 * N, N), 2) * (-1) ** N * binomial(N, j)


@pytest.mark.parametrize("N", range(1, 9))
def test_left_to_right_ground_truth(N):
    H = build_appendix_matrix("H", N)
    for j in range(N + 1):
        v = left_to_right(H, h_left_eigenvector(N, j))
        assert verify_eigenpair(H, 2 * j - N, v)
        assert v == right_eigenvector("H", N, j)
        if N % 2 == 0:
            assert proportional(v, h_right_eigenvector(N, j))


def test_battery_small():
    results = appendix_battery(3)
    assert results and all(results.values())
