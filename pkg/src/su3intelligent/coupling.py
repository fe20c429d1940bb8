"""
Stretched Clebsch-Gordan coupling (p,0) x (q,0) -> (p+q,0) and assembly of the
intelligent states of (lam, 0) from three coherent states.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .coherent import (
    check_alpha,
    coherent_amplitudes,
    d_column_factored,
    fundamental_eigensystem,
    signed_betas,
)
from .errors import DegenerateConstructionError
from .observables import fix_phase
from .rep_core import BasisState, enumerate_basis


class CouplingTriple(NamedTuple):
    lambda1: int
    lambda2: int
    lambda3: int

    @property
    def total(self):
        return self.lambda1 + self.lambda2 + self.lambda3

    def swapped(self):
        """The triple with lambda2 and lambda3 exchanged."""
        return CouplingTriple(self.lambda1, self.lambda3, self.lambda2)


def make_triple(triple):
    t = CouplingTriple(*(int(x) for x in triple))
    if min(t) < 0:
        raise ValueError(f"coupling labels must be non-negative, got {tuple(t)}")
    return t


def all_triples(lam):
    """Every triple summing to ``lam``, in the same order as ``enumerate_basis(lam)``."""
    return [CouplingTriple(*s) for s in enumerate_basis(lam).states]


@dataclass(frozen=True)
class IntelligentState:
    triple: CouplingTriple
    alpha: float
    vector: np.ndarray
    kappa: complex
    pre_norm: float

    @property
    def lam(self):
        return self.triple.total


@lru_cache(maxsize=4096)
def cg_stretched(n, m):
    """
    Coefficient ``<n; m | n+m>`` coupling ``|n>`` of (p,0) and ``|m>`` of (q,0)
    to ``|n+m>`` of (p+q,0)::

        sqrt( p! q!/(p+q)! * prod_i (n_i+m_i)!/(n_i! m_i!) )

    The ratio is formed in exact integer arithmetic, so large labels neither
    overflow nor lose precision before the final square root.
    """
    n, m = tuple(int(x) for x in n), tuple(int(x) for x in m)
    if len(n) != 3 or len(m) != 3 or min(n + m) < 0:
        raise ValueError(f"need two non-negative occupation triples, got {n}, {m}")
    p, q = sum(n), sum(m)
    num = math.factorial(p) * math.factorial(q)
    den = math.factorial(p + q)
    for a, b in zip(n, m):
        num *= math.factorial(a + b)
        den *= math.factorial(a) * math.factorial(b)
    return math.sqrt(num / den)


def _fsum_complex(terms):
    # Exact summation keeps the result independent of term order.
    return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


def couple_stretched(left, p, right, q):
    """
    Project ``left (x) right`` from (p,0) x (q,0) onto (p+q,0).

    ``left`` and ``right`` are amplitude vectors in the canonical bases of
    (p,0) and (q,0); the result is in the canonical basis of (p+q,0).
    """
    bp, bq, bt = enumerate_basis(p), enumerate_basis(q), enumerate_basis(p + q)
    if len(left) != bp.dim or len(right) != bq.dim:
        raise ValueError("amplitude vectors do not match the irrep dimensions")
    terms = [[] for _ in range(bt.dim)]
    for i, n in enumerate(bp.states):
        if left[i] == 0:
            continue
        for j, m in enumerate(bq.states):
            if right[j] == 0:
                continue
            target = BasisState(n.n1 + m.n1, n.n2 + m.n2, n.n3 + m.n3)
            terms[bt.index[target]].append(cg_stretched(n, m) * (left[i] * right[j]))
    return np.array([_fsum_complex(t) for t in terms], dtype=complex)


def slot_amplitudes(k, lam_k, alpha):
    """
    ``D^{(lam_k,0)}_{nu; 0 0 lam_k}(omega_k)`` for every ``nu``: the coherent
    state of (lam_k, 0) whose (1,0) member is eigenvector ``k``.

    For |alpha| < 1 this is the product of little-d functions at the
    tabulated half-angles (phase angles zero, betas signed). For |alpha| > 1
    the column is generated from the eigenvector components directly.
    """
    if abs(alpha) < 1:
        return d_column_factored(lam_k, *signed_betas(k, alpha))
    return coherent_amplitudes(fundamental_eigensystem(alpha).vectors[:, k - 1], lam_k)


def intelligent_state_coupled(triple, alpha, assignment=(1, 2, 3)):
    """
    Intelligent state of (lam, 0), ``lam = lambda1 + lambda2 + lambda3``.

    Slot ``k`` carries ``lambda_k`` copies of the (1,0) eigenvector
    ``psi_{assignment[k]}``; the default puts ``psi_k`` in slot ``k``. Slots 2
    and 3 are coupled first to (lambda2+lambda3, 0), then slot 1 is coupled to
    that. The result is normalized with its largest entry made real positive.
    The eigenvalue is the sum of the single-particle kappas.
    """
    triple = make_triple(triple)
    alpha = check_alpha(alpha)
    if sorted(assignment) != [1, 2, 3]:
        raise ValueError(f"assignment must be a permutation of (1, 2, 3), got {assignment}")
    l1, l2, l3 = triple
    e1, e2, e3 = assignment
    inner = couple_stretched(slot_amplitudes(e2, l2, alpha), l2, slot_amplitudes(e3, l3, alpha), l3)
    raw = couple_stretched(slot_amplitudes(e1, l1, alpha), l1, inner, l2 + l3)
    norm = float(np.linalg.norm(raw))
    if norm == 0.0:
        raise DegenerateConstructionError(f"coupling sum vanished for {tuple(triple)} at alpha={alpha}")
    vec = fix_phase(raw / norm)
    vec.setflags(write=False)
    kappas = fundamental_eigensystem(alpha).kappas
    kappa = complex(sum(n * kappas[e - 1] for n, e in zip(triple, assignment)))
    return IntelligentState(triple, alpha, vec, kappa, norm)


def enumerate_all_intelligent(lam, alpha):
    """One coupled state per triple summing to ``lam``, ordered like the basis."""
    return [intelligent_state_coupled(t, alpha) for t in all_triples(lam)]


def gram_matrix(states):
    x = np.column_stack([s.vector for s in states])
    return x.conj().T @ x


def gram_condition_ratio(states):
    """Smallest over largest singular value of the Gram matrix."""
    sv = np.linalg.svd(gram_matrix(states), compute_uv=False)
    return float(sv[-1] / sv[0])
