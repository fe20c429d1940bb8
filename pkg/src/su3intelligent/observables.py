"""
The fixed pair of 3x3 observables, the basis change that diagonalizes their
commutator, and the lift of one-body 3x3 matrices to collective operators on (lam, 0).
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .rep_core import enumerate_basis, one_body_matrix

SQRT3 = np.sqrt(3.0)
A_SCALE = 2 * np.pi / 3
C_SCALE = 4 * np.pi**2 / (9 * SQRT3)
ETA_PLUS = np.sqrt(2 / (3 + SQRT3))
ETA_MINUS = np.sqrt(2 / (3 - SQRT3))

HERMITIAN_TOL = 1e-12


def commutator(x, y):
    return x @ y - y @ x


def fix_phase(v):
    """Rotate the global phase so the largest-magnitude entry is real positive."""
    k = int(np.argmax(np.abs(v)))
    return v * (abs(v[k]) / v[k])


@dataclass(frozen=True)
class ObservableSet:
    a_prime: np.ndarray
    b_prime: np.ndarray
    c_prime: np.ndarray
    u: np.ndarray
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray


@lru_cache(maxsize=None)
def fundamental_observables():
    """Build A', B', C' = -i[A', B'], the transform U, and the rotated A, B, C."""
    a_prime = A_SCALE * np.diag([0.0, 1.0, -1.0]).astype(complex)
    b_prime = (2j * np.pi / (3 * SQRT3)) * np.array(
        [[0, -1, 1], [1, 0, -1], [-1, 1, 0]], dtype=complex
    )
    c_prime = -1j * commutator(a_prime, b_prime)

    sm, sp = np.sqrt(3 - SQRT3), np.sqrt(3 + SQRT3)
    u = np.array(
        [
            [0, (1 - SQRT3) / sm, (1 + SQRT3) / sp],
            [-1, 1 / sm, 1 / sp],
            [1, 1 / sm, 1 / sp],
        ],
        dtype=complex,
    ) / np.sqrt(2)
    # Closed forms of U^-1 (.) U; computing the products would leave ~1e-16
    # residue in the structural zeros of a and b.
    rm, rp = 1 / sm, 1 / sp
    a = -A_SCALE * np.array([[0, rm, rp], [rm, 0, 0], [rp, 0, 0]], dtype=complex)
    b = 1j * A_SCALE * np.array([[0, rm, -rp], [-rm, 0, 0], [rp, 0, 0]], dtype=complex)
    c = C_SCALE * np.diag([2.0, -1 - SQRT3, -1 + SQRT3]).astype(complex)
    mats = [a_prime, b_prime, c_prime, u, a, b, c]
    for m in mats:
        m.setflags(write=False)
    return ObservableSet(*mats)


def _sorted_eigvecs(h):
    w, v = np.linalg.eigh(h)
    order = np.argsort(w)
    return w[order], np.column_stack([fix_phase(v[:, k]) for k in order])


def mub_overlaps():
    """3x3 array of ``|<Psi_i^A'|Phi_j^B'>|^2``, eigenbases in ascending eigenvalue order."""
    obs = fundamental_observables()
    _, psi = _sorted_eigvecs(obs.a_prime)
    _, phi = _sorted_eigvecs(obs.b_prime)
    return np.abs(psi.conj().T @ phi) ** 2


def mub_overlap_check():
    """Largest deviation of the nine A'/B' eigenbasis overlaps from 1/3."""
    return float(np.max(np.abs(mub_overlaps() - 1 / 3)))


def promote(m, lam, hermitian=True):
    """
    Lift a one-body 3x3 matrix to (lam, 0) as ``sum_ij m_ij a_i^dagger a_j``.

    Parameters
    ----------
    m : array_like, shape (3, 3)
    lam : int
    hermitian : bool
        When True (default) ``m`` must be Hermitian to ``HERMITIAN_TOL``. Pass
        False for combinations such as ``a - 1j*alpha*b``.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {m.shape}")
    if hermitian and np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
        raise ValueError("matrix is not Hermitian; pass hermitian=False to promote it anyway")
    dim = enumerate_basis(lam).dim
    out = np.zeros((dim, dim), dtype=complex)
    for i in range(3):
        for j in range(3):
            if m[i, j] != 0:
                out += m[i, j] * one_body_matrix(i + 1, j + 1, lam)
    return out


@lru_cache(maxsize=None)
def collective_observables(lam):
    """Promoted ``(A, B, C)`` on (lam, 0); cached and read-only."""
    obs = fundamental_observables()
    mats = tuple(promote(x, lam) for x in (obs.a, obs.b, obs.c))
    for x in mats:
        x.setflags(write=False)
    return mats


def intelligence_operator(lam, alpha):
    """The non-Hermitian collective operator ``A - i alpha B`` on (lam, 0)."""
    a, b, _ = collective_observables(lam)
    return a - 1j * alpha * b
