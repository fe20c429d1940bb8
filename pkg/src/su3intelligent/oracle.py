"""
Independent checks on the coupled construction.

``direct_eigensystem`` diagonalizes ``A - i alpha B`` on (lam, 0) numerically and
groups the spectrum into eigenspaces. ``tensor_product_state`` builds the
symmetrized product of single-particle eigenvectors by polynomial expansion,
without Clebsch-Gordan coefficients or rotation matrices.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .coherent import check_alpha, fundamental_eigensystem
from .coupling import make_triple
from .errors import ConstructionBug, DegenerateSpectrumWarning
from .observables import fix_phase, intelligence_operator
from .rep_core import enumerate_basis

CLUSTER_RTOL = 1e-8


@dataclass(frozen=True)
class EigenspaceDecomposition:
    """
    Clustered spectrum of ``A - i alpha B``.

    ``projectors`` are the spectral (Riesz) projectors: idempotent, mutually
    annihilating and summing to the identity, but oblique because the operator
    is not normal. ``bases`` hold orthonormal bases of the eigenspaces, from
    which :meth:`orthogonal_projector` is built.
    """

    lam: int
    alpha: float
    eigenvalues: list
    projectors: list
    multiplicities: list
    bases: list

    def orthogonal_projector(self, k):
        q = self.bases[k]
        return q @ q.conj().T


def _cluster(values, tol):
    order = np.argsort(values.real + 1e-3 * values.imag)
    clusters = []
    for idx in order:
        for c in clusters:
            if abs(values[idx] - values[c[0]]) <= tol:
                c.append(idx)
                break
        else:
            clusters.append([idx])
    return clusters


def _null_basis(m, k):
    # Right singular vectors of the k smallest singular values.
    _, _, vh = np.linalg.svd(m)
    return vh[-k:].conj().T


def direct_eigensystem(lam, alpha, rtol=CLUSTER_RTOL):
    """Eigenvalues, multiplicities and eigenspace projectors of ``A - i alpha B`` on (lam, 0)."""
    alpha = check_alpha(alpha)
    m = intelligence_operator(lam, alpha)
    dim = m.shape[0]
    vals = np.linalg.eigvals(m)
    radius = float(np.max(np.abs(vals))) if dim else 0.0
    tol = rtol * max(radius, 1.0)
    clusters = _cluster(vals, tol)
    centers = [complex(np.mean(vals[c])) for c in clusters]

    gaps = [abs(x - y) for i, x in enumerate(centers) for y in centers[i + 1:]]
    if gaps and min(gaps) < 10 * tol:
        warnings.warn(
            f"eigenvalue clusters only {min(gaps):.3g} apart (tolerance {tol:.3g})",
            DegenerateSpectrumWarning,
            stacklevel=2,
        )

    bases = []
    for kappa, c in zip(centers, clusters):
        bases.append(_null_basis(m - kappa * np.eye(dim), len(c)))
    # Riesz projectors V E_k V^-1 from the full eigenvector matrix; they sum
    # to the identity up to cond(V) * eps.
    v = np.column_stack(bases)
    v_inv = np.linalg.inv(v)
    edges = np.cumsum([0] + [len(c) for c in clusters])
    projectors = [v[:, lo:hi] @ v_inv[lo:hi, :] for lo, hi in zip(edges[:-1], edges[1:])]
    return EigenspaceDecomposition(lam, alpha, centers, projectors, [len(c) for c in clusters], bases)


def _power_coefficients(z, power):
    """Coefficients of ``(z1 x1 + z2 x2 + z3 x3)^power`` keyed by exponent triple."""
    out = {}
    for n1 in range(power + 1):
        for n2 in range(power + 1 - n1):
            n3 = power - n1 - n2
            multinom = math.factorial(power) // (math.factorial(n1) * math.factorial(n2) * math.factorial(n3))
            out[(n1, n2, n3)] = multinom * (z[0] ** n1 * z[1] ** n2 * z[2] ** n3)
    return out


def _multiply(p, q):
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            key = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
            out[key] = out.get(key, 0) + x * y
    return out


def tensor_product_state(triple, alpha):
    """
    Symmetrized product of ``lambda_k`` copies of ``psi_k``, read off in (lam, 0).

    With boson operators the symmetrized product is
    ``prod_k (psi_k . a^dagger)^lambda_k |0>``, so the amplitude on
    ``|N1 N2 N3>`` is ``sqrt(N1! N2! N3!)`` times the coefficient of
    ``x^N`` in ``prod_k (psi_k . x)^lambda_k``. Normalized, largest entry real
    positive.
    """
    triple = make_triple(triple)
    alpha = check_alpha(alpha)
    vecs = fundamental_eigensystem(alpha).vectors
    poly = {(0, 0, 0): 1.0}
    for k, power in enumerate(triple):
        poly = _multiply(poly, _power_coefficients([complex(x) for x in vecs[:, k]], power))
    basis = enumerate_basis(triple.total)
    v = np.array(
        [poly.get(tuple(s), 0.0) * math.sqrt(math.factorial(s.n1) * math.factorial(s.n2) * math.factorial(s.n3))
         for s in basis.states],
        dtype=complex,
    )
    return fix_phase(v / np.linalg.norm(v))


def _orthogonal_span_projector(vectors, rcond):
    x = np.column_stack(vectors)
    return x @ np.linalg.pinv(x.conj().T @ x, rcond=rcond, hermitian=True) @ x.conj().T


def eigenspace_match(coupled, direct, rcond=1e-13):
    """
    Largest operator-norm distance between the orthogonal projector spanned by
    the coupled states of each eigenvalue cluster and the direct eigenspace
    projector.

    Each coupled state is assigned to the nearest cluster by its eigenvalue;
    a count that differs from the cluster multiplicity raises ConstructionBug.
    ``rcond`` is the cutoff of the Gram pseudo-inverse.
    """
    if not coupled:
        raise ValueError("no coupled states given")
    lam = coupled[0].lam
    if lam != direct.lam or any(s.lam != lam for s in coupled):
        raise ValueError("coupled states and direct decomposition belong to different irreps")
    if any(abs(s.alpha - direct.alpha) > 0 for s in coupled):
        raise ValueError("coupled states and direct decomposition use different alpha")

    centers = np.array(direct.eigenvalues)
    groups = [[] for _ in centers]
    for s in coupled:
        groups[int(np.argmin(np.abs(centers - s.kappa)))].append(s.vector)

    worst = 0.0
    for k, members in enumerate(groups):
        if len(members) != direct.multiplicities[k]:
            raise ConstructionBug(
                f"eigenvalue {centers[k]:.6g}: {len(members)} coupled states for multiplicity {direct.multiplicities[k]}"
            )
        diff = _orthogonal_span_projector(members, rcond) - direct.orthogonal_projector(k)
        worst = max(worst, float(np.linalg.norm(diff, 2)))
    return worst
