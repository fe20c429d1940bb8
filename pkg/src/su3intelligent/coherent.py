"""
SU(2) subgroup rotations, SU(3) coherent states of (lam, 0), the (1, 0)
eigenproblem for ``a - i alpha b`` and the d/D-functions built on it.

Rotation convention: for the mode pair ``(a, b)`` with ``a < b``,
``Jz = (n_a - n_b)/2`` and ``Jy = (a_a^dagger a_b - a_b^dagger a_a)/2i``;
``R_ab(phi, beta, chi) = exp(-i phi Jz) exp(-i beta Jy) exp(-i chi Jz)``.
With this choice ``R12(a1, b1, -a1) R23(a2, b2, -a2) |001>`` is the column
``(e^{-i(a1+a2)} s1 s2, -e^{-i a2} c1 s2, c2)``, ``s_k = sin(b_k/2)``, ``c_k = cos(b_k/2)``.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np
from scipy.linalg import expm

from .errors import OutOfDomainError, SingularParameterError
from .observables import A_SCALE, SQRT3
from .rep_core import (
    BasisState,
    cartan_matrix,
    enumerate_basis,
    ladder_matrix,
    lowest_weight,
    number_matrix,
)

GUARD_BAND = 1e-6

_PAIRS = {"12": (1, 2), "23": (2, 3)}


class CoherentAngles(NamedTuple):
    alpha1: float
    beta1: float
    alpha2: float
    beta2: float


def check_alpha(alpha, guard_band=GUARD_BAND):
    """Reject alpha inside the guard band around |alpha| = 1."""
    if not np.isfinite(alpha):
        raise ValueError(f"alpha must be finite, got {alpha!r}")
    # Slack so that 1 +- guard_band itself, after rounding, is accepted.
    if abs(abs(alpha) - 1.0) < guard_band * (1 - 1e-9):
        raise SingularParameterError(
            f"alpha={float(alpha)!r} lies within {guard_band:g} of |alpha|=1 where a - i alpha b is defective"
        )
    return float(alpha)


def mu(alpha):
    """``(1 + alpha)/sqrt(1 - alpha^2)``; real for |alpha| < 1, imaginary beyond."""
    check_alpha(alpha)
    if abs(alpha) < 1:
        return (1 + alpha) / math.sqrt(1 - alpha * alpha)
    return complex((1 + alpha) / np.sqrt(complex(1 - alpha * alpha)))


def su2_generators(pair, lam):
    """Collective ``(Jz, Jy)`` for the mode pair ``'12'`` or ``'23'``."""
    try:
        a, b = _PAIRS[pair]
    except KeyError:
        raise ValueError(f"pair must be '12' or '23', got {pair!r}") from None
    jz = 0.5 * (number_matrix(a, lam) - number_matrix(b, lam))
    jy = (ladder_matrix(a, b, lam) - ladder_matrix(b, a, lam)) / 2j
    return jz, jy


def su2_rotation(pair, theta, lam):
    """
    ``R_ab(phi, beta, chi)`` on (lam, 0).

    Parameters
    ----------
    pair : {'12', '23'}
    theta : tuple of float
        Euler angles ``(phi, beta, chi)`` in radians.
    lam : int
    """
    phi, beta, chi = theta
    jz, jy = su2_generators(pair, lam)
    m = np.real(np.diag(jz))
    left = np.exp(-1j * phi * m)
    right = np.exp(-1j * chi * m)
    return left[:, None] * expm(-1j * beta * jy) * right[None, :]


def coherent_state(omega, lam):
    """``R12(a1, b1, -a1) R23(a2, b2, -a2) |0 0 lam>``."""
    a1, b1, a2, b2 = omega
    v = su2_rotation("23", (a2, b2, -a2), lam) @ lowest_weight(lam)
    return su2_rotation("12", (a1, b1, -a1), lam) @ v


def coherent_amplitudes(z, lam):
    """
    Amplitudes of ``(z . a^dagger)^lam |0> / sqrt(lam!)`` on (lam, 0).

    For ``z = R|001>`` this is ``R|0 0 lam>``, i.e. the D-function column
    ``<n|R|0 0 lam> = sqrt(lam!/(n1! n2! n3!)) z1^n1 z2^n2 z3^n3``.
    """
    z = [complex(x) for x in z]
    basis = enumerate_basis(lam)
    out = np.empty(basis.dim, dtype=complex)
    for k, (n1, n2, n3) in enumerate(basis.states):
        coef = math.sqrt(math.factorial(lam) // (math.factorial(n1) * math.factorial(n2) * math.factorial(n3)))
        out[k] = coef * (z[0] ** n1 * z[1] ** n2 * z[2] ** n3)
    return out


def isotropy_check(alpha3, beta3, gamma1, gamma2, lam):
    """
    Deviation ``|| T |0 0 lam> - e^{i gamma2 lam} |0 0 lam> ||`` for
    ``T = R12(alpha3, beta3, -alpha3) exp(i gamma1 h1) exp(i gamma2 h2)``.
    """
    v0 = lowest_weight(lam)
    h1 = np.real(np.diag(cartan_matrix(1, lam)))
    h2 = np.real(np.diag(cartan_matrix(2, lam)))
    v = np.exp(1j * gamma1 * h1) * (np.exp(1j * gamma2 * h2) * v0)
    v = su2_rotation("12", (alpha3, beta3, -alpha3), lam) @ v
    return float(np.linalg.norm(v - np.exp(1j * gamma2 * lam) * v0))


@dataclass(frozen=True)
class FundamentalEigensystem:
    alpha: float
    vectors: np.ndarray  # columns psi_1, psi_2, psi_3
    kappas: np.ndarray


def fundamental_eigensystem(alpha):
    """
    Eigenvectors and eigenvalues of ``a - i alpha b`` on (1, 0).

    Closed forms with ``mu = (1+alpha)/sqrt(1-alpha^2)``:
    ``psi_1 ~ (0, (1-sqrt3) mu^2/sqrt2, 1)`` with kappa 0,
    ``psi_2 ~ (sqrt(3+sqrt3) mu, sqrt(2+sqrt3) mu^2, 1)`` with ``-(2pi/3) sqrt(1-alpha^2)``,
    ``psi_3`` as ``psi_2`` with the first entry negated and kappa ``+(2pi/3) sqrt(1-alpha^2)``.
    For |alpha| > 1 the square root is taken on the principal complex branch,
    so ``mu`` and the nonzero kappas become imaginary. Each vector is unit
    norm with its third component real positive.
    """
    alpha = check_alpha(alpha)
    m = mu(alpha)
    m2 = (1 + alpha) / (1 - alpha)
    root = np.sqrt(complex(1 - alpha * alpha)) if abs(alpha) > 1 else math.sqrt(1 - alpha * alpha)
    p = math.sqrt(3 + SQRT3) * m
    q = math.sqrt(2 + SQRT3) * m2
    vecs = np.array(
        [
            [0.0, p, -p],
            [(1 - SQRT3) / math.sqrt(2) * m2, q, q],
            [1.0, 1.0, 1.0],
        ],
        dtype=complex,
    )
    vecs /= np.linalg.norm(vecs, axis=0)[None, :]
    kappas = np.array([0.0, -A_SCALE * root, A_SCALE * root], dtype=complex)
    vecs.setflags(write=False)
    kappas.setflags(write=False)
    return FundamentalEigensystem(alpha, vecs, kappas)


def signed_betas(k, alpha):
    """
    ``(beta_1k, beta_2k)`` from the tangent half-angle table, with all phase
    angles zero; betas may be negative. Valid for |alpha| < 1, k in 1..3.
    """
    if not abs(alpha) < 1:
        raise OutOfDomainError(f"closed-form angles need |alpha| < 1, got {alpha!r}")
    m = mu(alpha)
    if k == 1:
        return 0.0, 2 * math.atan(-(1 - SQRT3) * m * m / math.sqrt(2))
    if k not in (2, 3):
        raise ValueError(f"eigenvector index must be 1, 2 or 3, got {k}")
    t1 = math.sqrt(3 - SQRT3) / m
    t2 = -m * math.sqrt(3 + SQRT3 + (2 + SQRT3) * m * m)
    return 2 * math.atan(-t1 if k == 2 else t1), 2 * math.atan(t2)


def fold_angles(beta1, beta2):
    """Map signed betas into ``[0, pi]``, carrying each sign flip as a phase angle of pi."""
    a1 = a2 = 0.0
    if beta2 < 0:
        beta2, a2 = -beta2, math.pi
    if beta1 < 0:
        beta1, a1 = -beta1, math.pi
    return CoherentAngles(a1, beta1, a2, beta2)


def angles_from_eigenvector(k, alpha):
    """Coherent-state angles ``omega_k`` with ``R(omega_k)|001> ~ psi_k(alpha)``, for |alpha| < 1."""
    check_alpha(alpha)
    return fold_angles(*signed_betas(k, alpha))


def _half(x):
    if isinstance(x, float):
        if abs(2 * x - round(2 * x)) > 1e-12:
            raise ValueError(f"{x!r} is not a half-integer")
        return Fraction(round(2 * x), 2)
    f = Fraction(x)
    if (2 * f).denominator != 1:
        raise ValueError(f"{x!r} is not a half-integer")
    return f


def small_d(J, M, beta):
    """
    Bottom-column Wigner element
    ``d^J_{M,-J}(beta) = sqrt(C(2J, J+M)) cos(beta/2)^(J-M) (-sin(beta/2))^(J+M)``.
    """
    J, M = _half(J), _half(M)
    if J < 0 or abs(M) > J or (J - M).denominator != 1:
        raise ValueError(f"invalid quantum numbers J={J}, M={M}")
    up, down = int(J + M), int(J - M)
    return math.sqrt(math.comb(up + down, up)) * math.cos(beta / 2) ** down * (-math.sin(beta / 2)) ** up


def d_function(lam, nu, omega):
    """``<nu|R12(a1,b1,-a1) R23(a2,b2,-a2)|0 0 lam>`` as a rotation matrix element."""
    nu = BasisState(*nu)
    if nu.total != lam:
        raise ValueError(f"{tuple(nu)} does not belong to ({lam}, 0)")
    return complex(coherent_state(omega, lam)[enumerate_basis(lam).index[nu]])


def d_function_factored(lam, nu, omega):
    """
    Same element from the product of two little-d functions:
    ``e^{-i a1 n1 - i a2 (n1+n2)} d^{(n1+n2)/2}_{(n1-n2)/2,-(n1+n2)/2}(b1) d^{lam/2}_{(n1+n2-n3)/2,-lam/2}(b2)``.
    Betas outside ``[0, pi]`` are accepted.
    """
    n1, n2, n3 = nu
    if n1 + n2 + n3 != lam or min(nu) < 0:
        raise ValueError(f"{tuple(nu)} does not belong to ({lam}, 0)")
    a1, b1, a2, b2 = omega
    m = n1 + n2
    val = small_d(Fraction(m, 2), Fraction(n1 - n2, 2), b1) * small_d(Fraction(lam, 2), Fraction(m - n3, 2), b2)
    if a1 == 0 and a2 == 0:
        return complex(val)
    return complex(np.exp(-1j * (a1 * n1 + a2 * m)) * val)


def d_column_factored(lam, beta1, beta2):
    """The full column of ``d_function_factored`` with zero phase angles."""
    basis = enumerate_basis(lam)
    return np.array(
        [d_function_factored(lam, s, (0.0, beta1, 0.0, beta2)) for s in basis.states],
        dtype=complex,
    )
