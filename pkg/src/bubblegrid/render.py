"""ASCII and SVG pictures of configurations (A hollow ``o``, B filled ``#``)."""

from __future__ import annotations

from .geometry import interface, interface_edges
from .lattice import Configuration, Phase

SCALE = 20
RADIUS = 6
MARGIN = 20


def render_ascii(config: Configuration) -> str:
    if len(config) == 0:
        return ""
    xmin, xmax, ymin, ymax = config.bbox()
    lines = []
    for y in range(ymax, ymin - 1, -1):
        row = []
        for x in range(xmin, xmax + 1):
            ph = config.phase_at((x, y))
            row.append("." if ph is None else ("o" if ph is Phase.A else "#"))
        lines.append("".join(row))
    return "\n".join(lines)


def render_svg(config: Configuration) -> str:
    if len(config) == 0:
        w = h = 2 * MARGIN
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n</svg>\n'
        )
    xmin, xmax, ymin, ymax = config.bbox()
    w = (xmax - xmin) * SCALE + 2 * MARGIN
    h = (ymax - ymin) * SCALE + 2 * MARGIN

    def sx(x: float) -> str:
        return _num((x - xmin) * SCALE + MARGIN)

    def sy(y: float) -> str:
        return _num((ymax - y) * SCALE + MARGIN)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">']
    for p, q in interface_edges(interface(config)):
        out.append(
            f'<line x1="{sx(p[0] / 2)}" y1="{sy(p[1] / 2)}" x2="{sx(q[0] / 2)}" y2="{sy(q[1] / 2)}" '
            'stroke="black" stroke-width="2"/>'
        )
    for (x, y), ph in config.items():
        fill = "white" if ph is Phase.A else "black"
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="{RADIUS}" fill="{fill}" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _num(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else f"{v:g}"


def render(config: Configuration, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(config)
    if fmt == "svg":
        return render_svg(config)
    raise ValueError(f"unknown render format {fmt!r}")
