"""SVG pictures of closed-geodesic axes in the upper half-plane."""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape


class EmptyInput(ValueError):
    pass


def _label(report, theta, eps=1e-6):
    hit = report.hit_for(theta, eps) if report is not None else None
    return hit.label() if hit is not None else f"{theta:.4f}"


def render_svg(report, classes, path=None, xmin=-5.0, xmax=5.0, ymax=5.0, scale=80.0):
    """Draw the axes of ``classes`` and mark the report's crossings among them.

    Rational angles are labelled as multiples of pi, the rest in radians.
    Returns the SVG text, and writes it to ``path`` if given.
    """
    classes = list(classes)
    if not classes:
        raise EmptyInput("no classes to draw")

    def X(x):
        return (x - xmin) * scale

    def Y(y):
        return (ymax - y) * scale

    width, height = X(xmax), Y(0.0)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" '
        f'height="{height + 20:.1f}" viewBox="0 0 {width:.1f} {height + 20:.1f}">',
        f'<defs><clipPath id="view"><rect x="0" y="0" width="{width:.1f}" '
        f'height="{height:.1f}"/></clipPath></defs>',
        f'<line class="real-axis" x1="0" y1="{height:.3f}" x2="{width:.1f}" '
        f'y2="{height:.3f}" stroke="black" stroke-width="1"/>',
        '<g clip-path="url(#view)" fill="none" stroke="steelblue" stroke-width="1.5">',
    ]
    for c in classes:
        g = c.axis
        if g.is_vertical:
            d = f"M {X(g.center):.3f} {Y(0.0):.3f} L {X(g.center):.3f} {Y(ymax):.3f}"
        else:
            r = g.radius * scale
            d = (f"M {X(g.center - g.radius):.3f} {Y(0.0):.3f} "
                 f"A {r:.3f} {r:.3f} 0 0 1 {X(g.center + g.radius):.3f} {Y(0.0):.3f}")
        out.append(f'<path class="geodesic" data-class="{c.index}" d="{d}"/>')
    out.append("</g>")

    drawn = {c.index for c in classes}
    records = [] if report is None else [
        r for r in report.records if r.class_i in drawn and r.class_j in drawn]
    for r in records:
        x, y = X(r.point.x), Y(r.point.y)
        label = escape(_label(report, r.theta))
        out.append(
            f'<g class="marker" data-pair="{r.class_i},{r.class_j}">'
            f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="crimson"/>'
            f'<text x="{x + 5:.3f}" y="{y - 5:.3f}" font-size="11">{label}</text></g>')
    out.append("</svg>")
    text = "\n".join(out) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
