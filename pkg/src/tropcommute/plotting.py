"""Matplotlib rendering of :class:`~tropcommute.bary.TrianglePlot`.

Artists carry ``gid`` attributes, which the SVG backend writes out as group
ids (``point-beta1``, ``cevian-1``, ``hull-1`` ...), so the output can be
checked structurally without parsing paths.
"""

from __future__ import annotations

import io

import matplotlib

matplotlib.use("Agg")

from matplotlib.backends.backend_svg import FigureCanvasSVG  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from tropcommute.bary import TRIANGLE, TrianglePlot, to_cartesian  # noqa: E402

STYLE = {
    "font.size": 12,
    "font.family": "serif",
    "mathtext.fontset": "cm",
    "svg.hashsalt": "tropcommute",
    "svg.fonttype": "none",
}

_VERTEX_OFFSETS = ((-0.06, -0.04), (0.02, -0.04), (-0.09, 0.02))


def _tex(label: str) -> str:
    if label.startswith("beta") and label[4:].isdigit():
        return rf"$\beta'_{{{label[4:]}}}$"
    if label.startswith("b") and label[1:].isdigit():
        return rf"$b_{{{label[1:]}}}$"
    if label == "omega":
        return r"$\omega$"
    return label


def draw(plot: TrianglePlot, ax, triangle=TRIANGLE) -> None:
    tri = list(triangle)
    ax.add_patch(Polygon(tri, closed=True, fill=False, edgecolor="black", lw=1.0, gid="triangle"))
    for k, (v, label) in enumerate(zip(tri, plot.vertex_labels)):
        dx, dy = _VERTEX_OFFSETS[k]
        ax.text(v[0] + dx, v[1] + dy, _tex(label), color="gray", gid=f"vertex-{label}")

    xy = [to_cartesian(p, triangle) for p in plot.points]
    omega = to_cartesian(plot.omega, triangle) if plot.omega is not None else None

    if omega is not None and len(xy) >= 3:
        region = Polygon([xy[0], xy[1], omega, xy[2]], closed=True, facecolor="0.85",
                         edgecolor="none", gid="cone-region")
        ax.add_patch(region)

    for n, (k, j) in enumerate(plot.cevians, start=1):
        (x0, y0), (x1, y1) = tri[k], xy[j]
        ax.plot([x0, x1], [y0, y1], ls=":", lw=1.5, color="black", gid=f"cevian-{n}")

    hull = [(xy[i], xy[j]) for i, j in plot.segments]
    if omega is not None:
        hull += [(omega, q) for q in xy[1:]]
    for n, (p, q) in enumerate(hull, start=1):
        ax.plot([p[0], q[0]], [p[1], q[1]], ls="-", lw=2.5, color="black", gid=f"hull-{n}")

    for p, (x, y) in zip(plot.points, xy):
        ax.plot([x], [y], "o", ms=5, color="black", gid=f"point-{p.label}")
        ax.annotate(_tex(p.label), (x, y), xytext=(7, 2), textcoords="offset points")
    if omega is not None:
        ax.plot([omega[0]], [omega[1]], "o", ms=4, mfc="white", mec="black", gid="omega")
        ax.annotate(_tex("omega"), omega, xytext=(6, -14), textcoords="offset points")

    ax.set_xlim(-0.1, 1.1)
    ax.set_ylim(-0.1, 1.0)
    ax.set_aspect("equal")
    ax.axis("off")
    if plot.title:
        ax.set_title(plot.title)


def render_svg(plot: TrianglePlot, figsize=(5.5, 5.0)) -> bytes:
    with matplotlib.rc_context(STYLE):
        fig = Figure(figsize=figsize)
        FigureCanvasSVG(fig)
        ax = fig.add_subplot(111)
        draw(plot, ax)
        buf = io.BytesIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()
