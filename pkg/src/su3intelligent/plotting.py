"""Self-contained SVG line plot of the uncertainty product against alpha."""

from xml.sax.saxutils import quoteattr

from .formatting import fmt

WIDTH, HEIGHT = 900, 480
MAIN = (70, 30, 560, 400)  # x, y, w, h of the main panel
INSET = (700, 30, 170, 200)
INSET_RANGE = (-1.05, -0.95)
SINGULAR = (-1.0, 1.0)


def split_at_singular_points(records):
    """Consecutive runs of records with no alpha = +-1 between neighbours."""
    runs, current = [], []
    for r in records:
        if current and any(current[-1].alpha < s < r.alpha for s in SINGULAR):
            runs.append(current)
            current = []
        current.append(r)
    if current:
        runs.append(current)
    return runs


def _ticks(lo, hi, n=5):
    if hi == lo:
        return [lo]
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def _panel(records, x_range, box, title, label_every=True):
    x0, y0, w, h = box
    xlo, xhi = x_range
    ymax = max((r.product for r in records), default=1.0)
    ymax = ymax * 1.05 if ymax > 0 else 1.0

    def px(a):
        return x0 + w * (a - xlo) / (xhi - xlo)

    def py(p):
        return y0 + h * (1 - p / ymax)

    out = [f'<g class="panel" data-title={quoteattr(title)}>']
    out.append(f'<rect x="{x0}" y="{y0}" width="{w}" height="{h}" fill="white" stroke="black"/>')
    out.append(f'<text x="{x0 + w / 2:.1f}" y="{y0 - 10}" text-anchor="middle" font-size="13">{title}</text>')
    for t in _ticks(xlo, xhi):
        x = px(t)
        out.append(f'<line x1="{x:.2f}" y1="{y0 + h}" x2="{x:.2f}" y2="{y0 + h + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{y0 + h + 18}" text-anchor="middle" font-size="11">{t:.3g}</text>')
    for t in _ticks(0.0, ymax):
        y = py(t)
        out.append(f'<line x1="{x0 - 5}" y1="{y:.2f}" x2="{x0}" y2="{y:.2f}" stroke="black"/>')
        if label_every:
            out.append(f'<text x="{x0 - 8}" y="{y + 4:.2f}" text-anchor="end" font-size="11">{t:.3g}</text>')
    for s in SINGULAR:
        if xlo < s < xhi:
            x = px(s)
            out.append(
                f'<line class="singular" x1="{x:.2f}" y1="{y0}" x2="{x:.2f}" y2="{y0 + h}" '
                'stroke="gray" stroke-dasharray="4,4"/>'
            )
    for run in split_at_singular_points([r for r in records if xlo <= r.alpha <= xhi]):
        pts = " ".join(f"{px(r.alpha):.3f},{py(r.product):.3f}" for r in run)
        alphas = " ".join(fmt(r.alpha) for r in run)
        products = " ".join(fmt(r.product) for r in run)
        out.append(
            f'<polyline class="curve" fill="none" stroke="steelblue" stroke-width="1.5" points="{pts}" '
            f'data-alpha="{alphas}" data-product="{products}"/>'
        )
    out.append("</g>")
    return out


def render_svg(records, triple, alpha_range):
    """SVG document with the full scan and an inset panel around alpha = -1."""
    lam1, lam2, lam3 = triple
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<desc>Uncertainty product for triple ({lam1},{lam2},{lam3})</desc>",
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    parts += _panel(records, alpha_range, MAIN, f"dA dB, triple ({lam1},{lam2},{lam3})")
    parts += _panel(records, INSET_RANGE, INSET, "near alpha = -1")
    x0, y0, w, h = MAIN
    parts.append(f'<text x="{x0 + w / 2}" y="{y0 + h + 40}" text-anchor="middle" font-size="13">alpha</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
