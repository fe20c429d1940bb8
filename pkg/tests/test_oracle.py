import warnings

import numpy as np
import pytest

from su3intelligent.analysis import predicted_eigenvalue
from su3intelligent.coupling import CouplingTriple, all_triples, enumerate_all_intelligent, intelligent_state_coupled
from su3intelligent.errors import ConstructionBug, DegenerateSpectrumWarning
from su3intelligent.oracle import direct_eigensystem, eigenspace_match, tensor_product_state
from su3intelligent.rep_core import irrep_dim

from conftest import GRID, INSIDE

WELL_CONDITIONED = (-0.5, -0.1, 0.1, 0.5, -2.0, 2.0, -5.0, 5.0)


def _multiplicity_pattern(lam):
    # Coupled eigenvalues depend only on lambda3 - lambda2.
    counts = {}
    for t in all_triples(lam):
        counts[t.lambda3 - t.lambda2] = counts.get(t.lambda3 - t.lambda2, 0) + 1
    return sorted(counts.values())


def test_lambda1_spectrum():
    d = direct_eigensystem(1, 0.5)
    kappa = (2 * np.pi / 3) * np.sqrt(0.75)
    np.testing.assert_allclose(sorted(np.real(d.eigenvalues)), [-kappa, 0, kappa], atol=1e-14)
    assert d.multiplicities == [1, 1, 1]


def test_lambda2_zero_cluster():
    d = direct_eigensystem(2, -0.5)
    k = int(np.argmin(np.abs(d.eigenvalues)))
    assert d.multiplicities[k] == 2
    assert np.linalg.matrix_rank(d.orthogonal_projector(k), tol=1e-8) == 2


@pytest.mark.parametrize("alpha", GRID)
@pytest.mark.parametrize("lam", [2, 3, 5])
def test_multiplicities(lam, alpha):
    d = direct_eigensystem(lam, alpha)
    assert sum(d.multiplicities) == irrep_dim(lam)
    assert sorted(d.multiplicities) == _multiplicity_pattern(lam)


@pytest.mark.parametrize("alpha", INSIDE)
def test_direct_eigenvalues_match_formula(alpha):
    lam = 4
    d = direct_eigensystem(lam, alpha)
    predicted = sorted({round(predicted_eigenvalue(t, alpha), 9) for t in all_triples(lam)})
    np.testing.assert_allclose(sorted(np.real(d.eigenvalues)), predicted, atol=1e-10)
    np.testing.assert_allclose(np.imag(d.eigenvalues), 0, atol=1e-10)


def test_imaginary_eigenvalues_outside():
    d = direct_eigensystem(3, 2.0)
    np.testing.assert_allclose(np.real(d.eigenvalues), 0, atol=1e-10)


@pytest.mark.parametrize("alpha", WELL_CONDITIONED)
@pytest.mark.parametrize("lam", [2, 4])
def test_riesz_projectors(lam, alpha):
    d = direct_eigensystem(lam, alpha)
    dim = irrep_dim(lam)
    np.testing.assert_allclose(sum(d.projectors), np.eye(dim), atol=1e-9)
    for i, p in enumerate(d.projectors):
        np.testing.assert_allclose(p @ p, p, atol=1e-9)
        assert np.trace(p).real == pytest.approx(d.multiplicities[i], abs=1e-9)
        for j, q in enumerate(d.projectors):
            if i != j:
                np.testing.assert_allclose(p @ q, 0, atol=1e-9)


@pytest.mark.parametrize("alpha", [-0.9, 0.9])
def test_riesz_projectors_near_singular(alpha):
    # Eigenvectors are nearly parallel here; errors scale with ||P||^2.
    d = direct_eigensystem(6, alpha)
    for p in d.projectors:
        scale = np.linalg.norm(p, 2) ** 2
        assert np.max(np.abs(p @ p - p)) < 1e-9 * scale


@pytest.mark.parametrize("alpha", GRID)
@pytest.mark.parametrize("lam", [1, 3, 5])
def test_coupled_matches_direct(lam, alpha):
    assert eigenspace_match(enumerate_all_intelligent(lam, alpha), direct_eigensystem(lam, alpha)) < 1e-9


def test_orthogonal_projectors_hermitian():
    d = direct_eigensystem(3, 0.7)
    for k in range(len(d.eigenvalues)):
        p = d.orthogonal_projector(k)
        np.testing.assert_allclose(p, p.conj().T, atol=1e-14)
        np.testing.assert_allclose(p @ p, p, atol=1e-12)


def test_match_detects_missing_state():
    states = enumerate_all_intelligent(2, 0.3)
    with pytest.raises(ConstructionBug):
        eigenspace_match(states[:-1], direct_eigensystem(2, 0.3))


def test_match_detects_wrong_state():
    # Duplicating a state puts two vectors in a multiplicity-one cluster.
    states = enumerate_all_intelligent(2, 0.3)
    top = [s for s in states if s.triple == (0, 0, 2)][0]
    bad = [s for s in states if s.triple != (1, 1, 0)] + [top]
    with pytest.raises(ConstructionBug):
        eigenspace_match(bad, direct_eigensystem(2, 0.3))


def test_match_rejects_mixed_inputs():
    with pytest.raises(ValueError):
        eigenspace_match(enumerate_all_intelligent(2, 0.3), direct_eigensystem(3, 0.3))
    with pytest.raises(ValueError):
        eigenspace_match(enumerate_all_intelligent(2, 0.3), direct_eigensystem(2, 0.4))
    with pytest.raises(ValueError):
        eigenspace_match([], direct_eigensystem(2, 0.4))


def test_degenerate_warning():
    with pytest.warns(DegenerateSpectrumWarning):
        direct_eigensystem(2, 0.5, rtol=0.05)


def test_no_warning_by_default():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        direct_eigensystem(4, 0.5)


@pytest.mark.parametrize("alpha", GRID)
def test_tensor_state_matches_coupled(alpha):
    for t in all_triples(4):
        v = tensor_product_state(t, alpha)
        s = intelligent_state_coupled(t, alpha)
        assert abs(np.vdot(v, s.vector)) > 1 - 1e-10


def test_tensor_state_lambda20():
    t = CouplingTriple(7, 6, 7)
    v = tensor_product_state(t, 0.3)
    assert v.shape == (irrep_dim(20),)
    assert abs(np.vdot(v, intelligent_state_coupled(t, 0.3).vector)) > 1 - 1e-10


@pytest.mark.parametrize("alpha", [-0.95, 0.0, 0.3, 7.0])
def test_match_lambda1(alpha):
    assert eigenspace_match(enumerate_all_intelligent(1, alpha), direct_eigensystem(1, alpha)) < 1e-10


def test_match_lambda4_alpha07():
    assert eigenspace_match(enumerate_all_intelligent(4, 0.7), direct_eigensystem(4, 0.7)) < 1e-9
