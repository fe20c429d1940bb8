"""Expectations, variances, closed-form predictions and alpha scans."""

import math
from dataclasses import dataclass

import numpy as np

from .coherent import GUARD_BAND, check_alpha
from .coupling import intelligent_state_coupled, make_triple
from .errors import OutOfDomainError, UnnormalizedStateError
from .observables import A_SCALE, SQRT3, collective_observables, intelligence_operator

NORM_TOL = 1e-8


@dataclass(frozen=True)
class UncertaintyRecord:
    alpha: float
    delta_a: float
    delta_b: float
    product: float
    half_abs_exp_c: float
    eigen_residual: float
    saturation_residual: float
    kappa: complex
    exp_c: float


def _check_state(op, state):
    state = np.asarray(state)
    if op.shape != (state.shape[0], state.shape[0]):
        raise ValueError(f"operator shape {op.shape} does not match state length {state.shape[0]}")
    dev = abs(np.linalg.norm(state) - 1.0)
    if dev > NORM_TOL:
        raise UnnormalizedStateError(f"state norm deviates from 1 by {dev:.3g}")
    return state


def expectation(op, state):
    """``<psi|op|psi>`` for a unit-norm ``state``."""
    state = _check_state(op, state)
    return complex(np.vdot(state, op @ state))


def spread(op, state):
    """
    Standard deviation of a Hermitian ``op``, as ``|| (op - <op>) psi ||``.

    Equal to ``sqrt(<op^2> - <op>^2)`` but free of the cancellation that
    form suffers when ``psi`` is close to an eigenvector.
    """
    state = _check_state(op, state)
    v = op @ state
    mean = np.vdot(state, v).real
    return float(np.linalg.norm(v - mean * state))


def variances(state, lam, alpha):
    """Fill an :class:`UncertaintyRecord` for ``state`` in (lam, 0) at ``alpha``."""
    a, b, c = collective_observables(lam)
    delta_a = spread(a, state)
    delta_b = spread(b, state)
    exp_c = expectation(c, state).real
    m = intelligence_operator(lam, alpha)
    mv = m @ state
    kappa = complex(np.vdot(state, mv))
    product = delta_a * delta_b
    half = 0.5 * abs(exp_c)
    return UncertaintyRecord(
        alpha=float(alpha),
        delta_a=delta_a,
        delta_b=delta_b,
        product=product,
        half_abs_exp_c=half,
        eigen_residual=float(np.linalg.norm(mv - kappa * state)),
        saturation_residual=abs(product - half),
        kappa=kappa,
        exp_c=exp_c,
    )


def predicted_eigenvalue(triple, alpha):
    """``(2 pi/3) sqrt(1 - alpha^2) (lambda3 - lambda2)``, for |alpha| < 1."""
    t = make_triple(triple)
    if not abs(alpha) < 1:
        raise OutOfDomainError(f"closed-form eigenvalue needs |alpha| < 1, got {alpha!r}")
    return A_SCALE * math.sqrt(1 - alpha * alpha) * (t.lambda3 - t.lambda2)


def alpha_minus_one_limit(lam):
    """Uncertainty product at alpha = -1, where every state collapses to ``|0 0 lam>``."""
    if lam < 0:
        raise ValueError(f"lambda must be non-negative, got {lam}")
    return 2 * math.pi**2 * (SQRT3 - 1) * lam / (9 * SQRT3)


def alpha_grid(alpha_min=-10.0, alpha_max=10.0, points=400, guard_band=GUARD_BAND, steepness=8.0):
    """
    Scan grid over ``[alpha_min, alpha_max]`` with the guard bands removed.

    The range is cut at -1 and +1 into up to three segments. Points are shared
    among the segments in proportion to their length (at least two each, so
    ``points`` must cover that), and
    inside a segment they follow a logistic map so spacing shrinks towards the
    singular endpoints. A segment symmetric about zero with an odd count
    contains alpha = 0 exactly.
    """
    if not alpha_min < alpha_max:
        raise ValueError("alpha_min must be below alpha_max")
    if points < 2:
        raise ValueError("need at least two points")
    if guard_band <= 0:
        raise ValueError("guard band must be positive")

    cuts = [alpha_min]
    cuts += [x for x in (-1.0, 1.0) if alpha_min < x < alpha_max]
    cuts.append(alpha_max)
    segments = []
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        lo_sing, hi_sing = lo in (-1.0, 1.0), hi in (-1.0, 1.0)
        lo2 = lo + guard_band if lo_sing else lo
        hi2 = hi - guard_band if hi_sing else hi
        if lo2 < hi2:
            segments.append((lo2, hi2, lo_sing, hi_sing))
    if not segments:
        raise ValueError("the requested range lies entirely inside the guard band")

    if points < 2 * len(segments):
        raise ValueError(f"need at least {2 * len(segments)} points for {len(segments)} grid segments")
    counts = _allocate(points, [hi - lo for lo, hi, _, _ in segments])
    for k, (lo, hi, _, _) in enumerate(segments):
        if lo == -hi and counts[k] % 2 == 0:
            others = [j for j in range(len(counts)) if j != k and counts[j] > 2]
            if others:
                counts[k] += 1
                counts[max(others, key=counts.__getitem__)] -= 1

    grid = []
    for (lo, hi, lo_sing, hi_sing), n in zip(segments, counts):
        grid.extend(_segment(lo, hi, n, lo_sing, hi_sing, steepness))
    grid = np.array(grid)
    if alpha_min == -alpha_max and counts == counts[::-1]:
        grid = 0.5 * (grid - grid[::-1])
    return grid


def _allocate(points, lengths):
    # Two points per segment, the rest by largest remainder in proportion to length.
    extra = points - 2 * len(lengths)
    share = [extra * x / sum(lengths) for x in lengths]
    counts = [2 + int(math.floor(x)) for x in share]
    order = sorted(range(len(lengths)), key=lambda k: (math.floor(share[k]) - share[k], k))
    for k in order[: points - sum(counts)]:
        counts[k] += 1
    return counts


def _segment(lo, hi, n, lo_sing, hi_sing, steepness):
    s = np.linspace(-1.0, 1.0, n)
    if lo_sing and hi_sing:
        sig = 1 / (1 + np.exp(-steepness * s))
        u = (sig - sig[0]) / (sig[-1] - sig[0])
    elif lo_sing or hi_sing:
        # Lower half of the logistic: spacing grows away from the singular end.
        t = (s + 1) / 2
        sig = 1 / (1 + np.exp(-steepness * (t - 1)))
        u = (sig - sig[0]) / (sig[-1] - sig[0])
        if hi_sing:
            u = 1 - u[::-1]
    else:
        u = (s + 1) / 2
    x = lo + (hi - lo) * u
    x[0], x[-1] = lo, hi
    if lo == -hi:
        x = 0.5 * (x - x[::-1])
    return x


def scan_alpha(triple, alpha_grid_values, guard_band=GUARD_BAND):
    """One :class:`UncertaintyRecord` per alpha for the coupled state of ``triple``."""
    triple = make_triple(triple)
    records = []
    for alpha in alpha_grid_values:
        check_alpha(alpha, guard_band)
        state = intelligent_state_coupled(triple, alpha)
        records.append(variances(state.vector, triple.total, alpha))
    return records
