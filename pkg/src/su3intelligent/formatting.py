"""Byte-stable number formatting for CSV and SVG output."""

from decimal import Decimal

from .rep_core import enumerate_basis

SIGNIFICANT_DIGITS = 12

SCAN_HEADER = "alpha,deltaA,deltaB,product,half_abs_expC,eigen_residual,saturation_residual"


def fmt(x):
    """Plain decimal with 12 significant digits; negative zero prints as ``0``."""
    x = float(x)
    if x == 0.0:
        return "0"
    return format(Decimal(f"{x:.{SIGNIFICANT_DIGITS - 1}e}"), "f")


def scan_rows(records):
    yield SCAN_HEADER
    for r in records:
        yield ",".join(
            fmt(v)
            for v in (r.alpha, r.delta_a, r.delta_b, r.product, r.half_abs_exp_c, r.eigen_residual, r.saturation_residual)
        )


def scan_csv(records):
    return "\n".join(scan_rows(records)) + "\n"


def state_csv(state):
    """Amplitude table ``n1,n2,n3,re,im`` with a leading comment line."""
    t = state.triple
    lines = [
        f"# lambda={t.total} triple={t.lambda1},{t.lambda2},{t.lambda3} alpha={fmt(state.alpha)} "
        f"kappa_re={fmt(state.kappa.real)} kappa_im={fmt(state.kappa.imag)}",
        "n1,n2,n3,re,im",
    ]
    for s, amp in zip(enumerate_basis(t.total).states, state.vector):
        lines.append(f"{s.n1},{s.n2},{s.n3},{fmt(amp.real)},{fmt(amp.imag)}")
    return "\n".join(lines) + "\n"
