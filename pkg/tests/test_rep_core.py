import math

import numpy as np
import pytest

from su3intelligent.errors import OutOfDomainError
from su3intelligent.rep_core import (
    MAX_LAMBDA,
    BasisState,
    cartan_matrix,
    enumerate_basis,
    irrep_dim,
    ladder_matrix,
    lowest_weight,
    number_matrix,
    one_body_matrix,
)


@pytest.mark.parametrize("lam, dim", [(0, 1), (1, 3), (2, 6), (7, 36), (MAX_LAMBDA, 1891)])
def test_dimension(lam, dim):
    assert irrep_dim(lam) == dim
    assert enumerate_basis(lam).dim == dim


def test_canonical_order_lambda2():
    states = [tuple(s) for s in enumerate_basis(2).states]
    assert states == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def test_index_roundtrip():
    b = enumerate_basis(5)
    for k, s in enumerate(b.states):
        assert b.index[s] == k
        assert s.total == 5


@pytest.mark.parametrize("lam", [-1, MAX_LAMBDA + 1])
def test_lambda_out_of_range(lam):
    with pytest.raises((ValueError, OutOfDomainError)):
        enumerate_basis(lam)


def test_ladder_element():
    # <1,1,0| a1^dag a2 |0,2,0> = sqrt(1 * 2)
    b = enumerate_basis(2)
    m = ladder_matrix(1, 2, 2)
    assert m[b.index[BasisState(1, 1, 0)], b.index[BasisState(0, 2, 0)]] == pytest.approx(math.sqrt(2))


def test_ladder_same_mode_rejected():
    with pytest.raises(ValueError):
        ladder_matrix(2, 2, 3)


@pytest.mark.parametrize("lam", [1, 2, 4])
def test_ladder_adjoint_and_commutators(lam):
    # [C_ij, C_jk] = C_ik for distinct i, j, k; C_ji = C_ij^dagger
    for i, j, k in [(1, 2, 3), (2, 3, 1), (3, 1, 2)]:
        cij, cjk, cik = ladder_matrix(i, j, lam), ladder_matrix(j, k, lam), ladder_matrix(i, k, lam)
        np.testing.assert_allclose(cij @ cjk - cjk @ cij, cik, atol=1e-12)
        np.testing.assert_allclose(ladder_matrix(j, i, lam), cij.conj().T, atol=0)


@pytest.mark.parametrize("lam", [1, 3])
def test_ladder_number_commutator(lam):
    # [C_12, C_21] = N_1 - N_2
    c12, c21 = ladder_matrix(1, 2, lam), ladder_matrix(2, 1, lam)
    np.testing.assert_allclose(c12 @ c21 - c21 @ c12, number_matrix(1, lam) - number_matrix(2, lam), atol=1e-12)


def test_number_sum_is_lambda():
    lam = 4
    total = sum(number_matrix(i, lam) for i in (1, 2, 3))
    np.testing.assert_allclose(total, lam * np.eye(irrep_dim(lam)))


def test_one_body_diagonal_is_number():
    np.testing.assert_array_equal(one_body_matrix(2, 2, 3), number_matrix(2, 3))


def test_cartan_definitions():
    lam = 2
    np.testing.assert_array_equal(cartan_matrix(1, lam), number_matrix(2, lam) - number_matrix(1, lam))
    np.testing.assert_array_equal(cartan_matrix(2, lam), number_matrix(3, lam) - number_matrix(2, lam))


def test_matrices_are_read_only():
    m = ladder_matrix(1, 2, 2)
    with pytest.raises(ValueError):
        m[0, 0] = 1.0


def test_lowest_weight():
    v = lowest_weight(3)
    b = enumerate_basis(3)
    assert v[b.index[BasisState(0, 0, 3)]] == 1
    assert np.count_nonzero(v) == 1
