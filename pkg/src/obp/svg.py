"""Deterministic SVG rendering of a solved rectangle decomposition.

Two panels share the vertical segment J: the rectangles in their given
order on the right, and in permuted order on the left.  Singular points are
ticked on both sides, strand boundaries are drawn on the right, one orbit
can be shaded, and the no-singularity edge is marked.

The drawing always shows the input instance; when the geometry was built on
the inverse (conjugated) instance, lengths and tick distances are relabeled
back into the input's frame.  Element order and number formatting are fixed
so the output is byte-stable for a given input and package version.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import build_blocks, build_tau, decompose_orbits
from .geometry import Surface

__all__ = ["build_svg", "SVG_UNIT_HEIGHT", "SVG_MAX_WIDTH"]

SVG_UNIT_HEIGHT = 100.0  # drawing units per unit of surface height
SVG_MAX_WIDTH = 800.0  # drawing units given to the longest rectangle
MARGIN = 60.0

J_COLOR = "#cc0000"
RECT_STROKE = "#303030"
STRAND_COLOR = "#9a9a9a"
TICK_COLOR = "#1133bb"
NS_COLOR = "#7b2d8b"
HIGHLIGHT_FILL = "#f2c04d"


def _fmt(value: float) -> str:
    return f"{value:.4f}"


@dataclass(frozen=True)
class _Frame:
    """Geometry relabeled into the frame of the input instance."""

    n: int
    sigma: tuple[int, ...]
    sigma_inv: tuple[int, ...]
    l: tuple[float, ...]
    h: tuple[float, ...]
    right_ticks: tuple[float, ...]  # distance from J to the singular point, level i
    left_ticks: tuple[float, ...]  # same on the left, level j
    ns_panel: str  # "right": bottom of R_n; "left": bottom left-position n
    lam: float


def _input_frame(surface: Surface) -> _Frame:
    inst = surface.original
    n = inst.n
    if surface.conjugated:
        sig = inst.sigma
        l = tuple(surface.layout.l[sig[i] - 1] for i in range(n))
        h = tuple(surface.layout.h[sig[i] - 1] for i in range(n))
        right_ticks = tuple(surface.edges.y[i] for i in range(1, n))
        left_ticks = tuple(surface.edges.x[j - 1] for j in range(1, n))
        ns_panel = "left"
    else:
        l = surface.layout.l
        h = surface.layout.h
        right_ticks = surface.edges.x
        left_ticks = tuple(surface.edges.y[j] for j in range(1, n))
        ns_panel = "right"
    return _Frame(
        n=n,
        sigma=inst.sigma,
        sigma_inv=inst.sigma_inv,
        l=l,
        h=h,
        right_ticks=right_ticks,
        left_ticks=left_ticks,
        ns_panel=ns_panel,
        lam=surface.lam,
    )


def build_svg(surface: Surface, highlight_orbit: int | None = None) -> str:
    frame = _input_frame(surface)
    inst = surface.original
    n = frame.n
    blocks = build_blocks(inst)
    dec = decompose_orbits(build_tau(inst, blocks), inst)

    sx = SVG_MAX_WIDTH / max(frame.l)
    sy = SVG_UNIT_HEIGHT
    total_h = sum(frame.h)
    jx = MARGIN + SVG_MAX_WIDTH
    width = 2 * (MARGIN + SVG_MAX_WIDTH)
    height = 2 * MARGIN + total_h * sy

    cum_right = [0.0]
    for hi in frame.h:
        cum_right.append(cum_right[-1] + hi)
    cum_left = [0.0]
    for j in range(1, n + 1):
        cum_left.append(cum_left[-1] + frame.h[frame.sigma_inv[j - 1] - 1])

    def ry(level: float) -> float:
        return MARGIN + level * sy

    out: list[str] = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">'
    )
    side = surface.report.side.value if surface.report.side is not None else "none"
    out.append(
        f"<title>n={n} sigma={list(inst.sigma)} k={list(inst.k)} "
        f"side={side} conjugated={str(surface.conjugated).lower()}</title>"
    )

    # left panel, ordered by sigma
    for j in range(1, n + 1):
        r = frame.sigma_inv[j - 1]
        w = frame.l[r - 1] * sx
        out.append(
            f'<rect x="{_fmt(jx - w)}" y="{_fmt(ry(cum_left[j - 1]))}" '
            f'width="{_fmt(w)}" height="{_fmt(frame.h[r - 1] * sy)}" '
            f'fill="none" stroke="{RECT_STROKE}" stroke-width="1"/>'
        )
    # right panel, natural order
    for i in range(1, n + 1):
        w = frame.l[i - 1] * sx
        out.append(
            f'<rect x="{_fmt(jx)}" y="{_fmt(ry(cum_right[i - 1]))}" '
            f'width="{_fmt(w)}" height="{_fmt(frame.h[i - 1] * sy)}" '
            f'fill="none" stroke="{RECT_STROKE}" stroke-width="1"/>'
        )

    # shaded strands of the requested orbit (right panel)
    if highlight_orbit is not None:
        strand_top: dict[int, float] = {}
        for b in range(1, n + 1):
            off = 0.0
            for s in range(blocks.block_start[b - 1], blocks.block_end[b - 1] + 1):
                strand_top[s] = off
                o = dec.orbit_index(s)
                if o is not None:
                    off += frame.h[o - 1] / frame.lam
        for s in dec.orbits[highlight_orbit - 1]:
            b = blocks.block_of(s)
            o = dec.orbit_index(s)
            band = frame.h[o - 1] / frame.lam if o is not None else 0.0
            out.append(
                f'<rect x="{_fmt(jx)}" '
                f'y="{_fmt(ry(cum_right[b - 1] + strand_top[s]))}" '
                f'width="{_fmt(frame.l[b - 1] * sx)}" height="{_fmt(band * sy)}" '
                f'fill="{HIGHLIGHT_FILL}" fill-opacity="0.8" stroke="none"/>'
            )

    # strand boundary lines (right panel)
    for b in range(1, n + 1):
        off = 0.0
        for s in range(blocks.block_start[b - 1], blocks.block_end[b - 1]):
            o = dec.orbit_index(s)
            if o is None:
                continue
            off += frame.h[o - 1] / frame.lam
            yy = ry(cum_right[b - 1] + off)
            out.append(
                f'<line x1="{_fmt(jx)}" y1="{_fmt(yy)}" '
                f'x2="{_fmt(jx + frame.l[b - 1] * sx)}" y2="{_fmt(yy)}" '
                f'stroke="{STRAND_COLOR}" stroke-width="0.5"/>'
            )

    # no-singularity edge
    if frame.ns_panel == "right":
        y_ns = ry(cum_right[n])
        out.append(
            f'<line x1="{_fmt(jx)}" y1="{_fmt(y_ns)}" '
            f'x2="{_fmt(jx + frame.l[n - 1] * sx)}" y2="{_fmt(y_ns)}" '
            f'stroke="{NS_COLOR}" stroke-width="3"/>'
        )
    else:
        r = frame.sigma_inv[n - 1]
        y_ns = ry(cum_left[n])
        out.append(
            f'<line x1="{_fmt(jx - frame.l[r - 1] * sx)}" y1="{_fmt(y_ns)}" '
            f'x2="{_fmt(jx)}" y2="{_fmt(y_ns)}" '
            f'stroke="{NS_COLOR}" stroke-width="3"/>'
        )

    # J with its endpoints
    out.append(
        f'<line x1="{_fmt(jx)}" y1="{_fmt(ry(0.0))}" x2="{_fmt(jx)}" '
        f'y2="{_fmt(ry(total_h))}" stroke="{J_COLOR}" stroke-width="2"/>'
    )
    out.append(
        f'<circle cx="{_fmt(jx)}" cy="{_fmt(ry(0.0))}" r="3" fill="{J_COLOR}"/>'
    )
    out.append(
        f'<circle cx="{_fmt(jx)}" cy="{_fmt(ry(total_h))}" r="3" fill="{J_COLOR}"/>'
    )

    # singular-point ticks
    for i in range(1, n):
        out.append(
            f'<circle cx="{_fmt(jx + frame.right_ticks[i - 1] * sx)}" '
            f'cy="{_fmt(ry(cum_right[i]))}" r="2.5" fill="{TICK_COLOR}"/>'
        )
    for j in range(1, n):
        out.append(
            f'<circle cx="{_fmt(jx - frame.left_ticks[j - 1] * sx)}" '
            f'cy="{_fmt(ry(cum_left[j]))}" r="2.5" fill="{TICK_COLOR}"/>'
        )

    # labels
    for i in range(1, n + 1):
        cy = ry(cum_right[i - 1] + frame.h[i - 1] / 2.0)
        out.append(
            f'<text x="{_fmt(jx + frame.l[i - 1] * sx + 6)}" y="{_fmt(cy)}" '
            f'font-family="monospace" font-size="11" dominant-baseline="middle">'
            f"R{i}</text>"
        )
    for j in range(1, n + 1):
        r = frame.sigma_inv[j - 1]
        cy = ry(cum_left[j - 1] + frame.h[r - 1] / 2.0)
        out.append(
            f'<text x="{_fmt(jx - frame.l[r - 1] * sx - 6)}" y="{_fmt(cy)}" '
            f'font-family="monospace" font-size="11" text-anchor="end" '
            f'dominant-baseline="middle">R{r}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
