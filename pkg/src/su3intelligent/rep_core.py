"""
Oscillator realization of the symmetric su(3) irreps (lambda, 0).

Basis states are occupation triples ``(n1, n2, n3)`` with ``n1 + n2 + n3 = lambda``.
Generators are returned as dense complex ``ndarray`` matrices acting on that basis.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np

MAX_LAMBDA = 60


class BasisState(NamedTuple):
    n1: int
    n2: int
    n3: int

    @property
    def total(self):
        return self.n1 + self.n2 + self.n3


@dataclass(frozen=True)
class IrrepBasis:
    lam: int
    states: tuple
    index: dict = field(repr=False, compare=False)

    @property
    def dim(self):
        return len(self.states)


def irrep_dim(lam):
    return (lam + 1) * (lam + 2) // 2


def _check_lambda(lam):
    if not isinstance(lam, (int, np.integer)) or lam < 0:
        raise ValueError(f"lambda must be a non-negative integer, got {lam!r}")
    if lam > MAX_LAMBDA:
        raise ValueError(f"lambda={lam} exceeds the cap MAX_LAMBDA={MAX_LAMBDA}")
    return int(lam)


@lru_cache(maxsize=None)
def enumerate_basis(lam):
    """
    Basis of the irrep (lambda, 0).

    States are ordered with ``n1`` descending from ``lambda`` to 0, then ``n2``
    descending; ``n3`` is fixed by the total.

    Parameters
    ----------
    lam : int
        Irrep label, ``0 <= lam <= MAX_LAMBDA``.

    Returns
    -------
    IrrepBasis
    """
    lam = _check_lambda(lam)
    states = tuple(
        BasisState(n1, n2, lam - n1 - n2)
        for n1 in range(lam, -1, -1)
        for n2 in range(lam - n1, -1, -1)
    )
    return IrrepBasis(lam, states, {s: k for k, s in enumerate(states)})


def _frozen(m):
    m.setflags(write=False)
    return m


@lru_cache(maxsize=None)
def _ladder(i, j, lam):
    basis = enumerate_basis(lam)
    m = np.zeros((basis.dim, basis.dim), dtype=complex)
    for col, s in enumerate(basis.states):
        n = list(s)
        if n[j - 1] == 0:
            continue
        amp = np.sqrt((n[i - 1] + 1) * n[j - 1])
        n[i - 1] += 1
        n[j - 1] -= 1
        m[basis.index[BasisState(*n)], col] = amp
    return _frozen(m)


def ladder_matrix(i, j, lam):
    """Matrix of ``C_ij = a_i^dagger a_j`` (``i != j``, modes numbered 1..3) on (lam, 0)."""
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise ValueError(f"mode indices must be in 1..3, got ({i}, {j})")
    if i == j:
        raise ValueError("ladder_matrix needs i != j; use number_matrix for a_i^dagger a_i")
    return _ladder(i, j, _check_lambda(lam))


@lru_cache(maxsize=None)
def _number(i, lam):
    basis = enumerate_basis(lam)
    return _frozen(np.diag([complex(s[i - 1]) for s in basis.states]))


def number_matrix(i, lam):
    """Diagonal matrix of the occupation ``a_i^dagger a_i``."""
    if i not in (1, 2, 3):
        raise ValueError(f"mode index must be in 1..3, got {i}")
    return _number(i, _check_lambda(lam))


def one_body_matrix(i, j, lam):
    """``a_i^dagger a_j`` for any pair of modes, diagonal included."""
    return number_matrix(i, lam) if i == j else ladder_matrix(i, j, lam)


def cartan_matrix(k, lam):
    """``h1 = n2 - n1`` for ``k=1``, ``h2 = n3 - n2`` for ``k=2``."""
    if k == 1:
        return number_matrix(2, lam) - number_matrix(1, lam)
    if k == 2:
        return number_matrix(3, lam) - number_matrix(2, lam)
    raise ValueError(f"Cartan index must be 1 or 2, got {k}")


def lowest_weight(lam):
    """Unit vector on ``|0 0 lam>``."""
    basis = enumerate_basis(lam)
    v = np.zeros(basis.dim, dtype=complex)
    v[basis.index[BasisState(0, 0, lam)]] = 1.0
    return v
