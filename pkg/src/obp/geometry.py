"""Flat-surface data determined by an admissible instance.

Rectangles R_1..R_n of size l_i x h_i hang on the right of a vertical
segment J; the orbit data fixes where the horizontal edges are glued and
which corner points are identified.  The per-rectangle map
u + iv -> lam*u + iv/lam then extends to the whole surface.

All construction runs on right-admissible data; a left-admissible input is
transparently replaced by its inverse instance and the result carries a
``conjugated`` flag.  Coordinates: ``u`` from J rightward, ``v`` downward
from the rectangle top.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field

from .admissibility import (
    AdmissibilityReport,
    Side,
    Verdict,
    check_admissible,
    check_top_bottom,
)
from .core import (
    BlockStructure,
    Obp,
    ObpInstance,
    OrbitDecomposition,
    build_blocks,
    build_tau,
    decompose_orbits,
    invert_obp,
    invert_permutation,
    split_orbit_at_top,
)
from .errors import (
    InadmissibleInstance,
    InconsistentY,
    NonIntegerGenus,
    NotRightAdmissible,
    OutOfChart,
)
from .spectral import (
    BoundsVerdict,
    Normalization,
    PerronData,
    TransitionMatrix,
    build_matrix,
    check_lambda_bounds,
    perron,
)

__all__ = [
    "RectangleLayout",
    "HorizontalEdges",
    "SingularityData",
    "IntersectionForm",
    "SurfacePoint",
    "Surface",
    "solve_x",
    "solve_y",
    "identification_classes",
    "singularity_classes",
    "intersection_form",
    "symplectic_check",
    "apply_map",
    "strand_partition_check",
    "build_geometry",
    "verify_surface",
]

EIGEN_REL_TOL = 1e-9  # identities derived from eigenvector data
MAP_REL_TOL = 1e-8  # composed map / gluing comparisons


@dataclass(frozen=True, slots=True)
class RectangleLayout:
    """Rectangle sizes and the vertical bands they occupy below the top of J."""

    l: tuple[float, ...]
    h: tuple[float, ...]
    cum_h: tuple[float, ...]  # length n+1, cum_h[i] = h_1 + ... + h_i

    @property
    def total_height(self) -> float:
        return self.cum_h[-1]

    def area(self) -> float:
        return sum(li * hi for li, hi in zip(self.l, self.h))


@dataclass(frozen=True, slots=True)
class HorizontalEdges:
    """Distances x_i from J to the singular point between R_i and R_{i+1},
    and the left-side edge lengths y_0..y_n (y_0 = 0)."""

    x: tuple[float, ...]
    y: tuple[float, ...]


@dataclass(frozen=True, slots=True)
class SingularityData:
    """Identification classes of the corner points and the derived topology.

    Labels 1..n-1 name the point between R_j and R_{j+1}; the base corner of
    the chart is the same point as label ``base_label``.  Class r has
    multiplicity p_r = size - 1 and cone angle 2*pi*(p_r + 1).
    """

    classes: tuple[tuple[int, ...], ...]
    p: tuple[int, ...]
    nu: int
    genus: int
    stratum: tuple[int, ...]
    base_label: int

    @property
    def cone_angles(self) -> tuple[float, ...]:
        return tuple(2.0 * math.pi * (pr + 1) for pr in self.p)


@dataclass(frozen=True, slots=True)
class IntersectionForm:
    """Antisymmetric integer pairing of the core curves of the rectangles."""

    s: tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class SurfacePoint:
    """A point in the right-of-J chart: rectangle index, u in [0, l], v in [0, h]."""

    rect: int
    u: float
    v: float


def _side_of(dec: OrbitDecomposition, blocks: BlockStructure) -> Side | None:
    sigma = dec.tau_prime
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        return None
    verdict, side = check_top_bottom(dec, blocks, sigma)
    return side if verdict.passed else None


def _require_right(dec: OrbitDecomposition, blocks: BlockStructure) -> None:
    side = _side_of(dec, blocks)
    if side is not Side.RIGHT:
        raise NotRightAdmissible(
            "geometry needs right-admissible data; route left-admissible input "
            "through invert_obp first"
        )


def solve_x(
    dec: OrbitDecomposition, blocks: BlockStructure, pd: PerronData
) -> tuple[float, ...]:
    """Singular-point distances x_1..x_{n-1} on the right of J.

    The image of R_{i+1} runs through the blocks listed by its orbit until it
    crosses its own top strand, at which moment the stretched x_i has
    advanced by exactly the widths passed, so
    x_i = (sum of l over the pre-top part of orbit i+1) / (lam - 1).
    """
    _require_right(dec, blocks)
    lam = pd.lam
    x = []
    for i in range(1, len(dec.orbits)):
        before, _after = split_orbit_at_top(dec, blocks, i + 1)
        total = sum(pd.l[blocks.block_of(s) - 1] for s in before)
        x.append(total / (lam - 1.0))
    return tuple(x)


def solve_y(
    dec: OrbitDecomposition,
    blocks: BlockStructure,
    pd: PerronData,
    x: tuple[float, ...],
) -> tuple[float, ...]:
    """Left-side edge lengths y_0..y_n.

    Decomposing the top edges gives y_{sigma(i+1)-1} = l_{i+1} - x_i and the
    bottom edges give y_{sigma(i)} = l_i - x_i; entries defined by both must
    agree.  y_0 = 0 and y_{sigma(1)-1} is the whole top edge of R_1.
    """
    sigma = dec.tau_prime
    n = len(sigma)
    lengths = pd.l
    tol = EIGEN_REL_TOL * max(1.0, max(lengths))
    y: list[float | None] = [None] * (n + 1)
    y[0] = 0.0
    if sigma[0] != 1:
        y[sigma[0] - 1] = lengths[0]

    def define(j: int, value: float, source: str) -> None:
        if y[j] is None:
            y[j] = value
        elif abs(y[j] - value) > tol:
            raise InconsistentY(
                f"y_{j} = {y[j]!r} but the {source} decomposition gives {value!r}"
            )

    for i in range(1, n):  # i = 1..n-1
        define(sigma[i] - 1, lengths[i] - x[i - 1], "top")
    for i in range(1, n):
        define(sigma[i - 1], lengths[i - 1] - x[i - 1], "bottom")
    assert all(v is not None for v in y)
    return tuple(float(v) for v in y)  # type: ignore[arg-type]


class _DisjointSet:
    def __init__(self, items):
        self.parent = {item: item for item in items}

    def find(self, a):
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def identification_classes(sigma: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Partition of the corner-point labels 1..n-1 induced by the gluings.

    Determined by sigma alone: every left-side edge identifies the two
    singular points at its ends, and the no-singularity level identifies
    across the bottom end of J.  The base corner of the chart shares the
    label sigma^{-1}(1) - 1.
    """
    n = len(sigma)
    sigma_inv = invert_permutation(sigma)
    base_label = sigma_inv[0] - 1

    def idx(j: int) -> int:
        return base_label if j == 0 else j

    dsu = _DisjointSet(range(1, n))
    sig_n = sigma[n - 1]
    for j in range(1, n):  # j = 1..n-1
        if j == sig_n:
            continue
        dsu.union(idx(sigma_inv[j] - 1), idx(sigma_inv[j - 1]))
    dsu.union(idx(sigma_inv[sig_n] - 1), idx(sigma_inv[n - 1]))

    groups: dict[int, list[int]] = {}
    for label in range(1, n):
        groups.setdefault(dsu.find(label), []).append(label)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def _classes_from_sigma(sigma: tuple[int, ...]) -> SingularityData:
    n = len(sigma)
    base_label = invert_permutation(sigma)[0] - 1
    classes = identification_classes(sigma)
    p = tuple(len(c) - 1 for c in classes)
    total = sum(p)
    if total % 2 != 0:
        raise NonIntegerGenus(f"multiplicities {p} sum to the odd number {total}")
    genus = (total + 2) // 2
    return SingularityData(
        classes=classes,
        p=p,
        nu=len(classes),
        genus=genus,
        stratum=tuple(sorted(p, reverse=True)),
        base_label=base_label,
    )


def singularity_classes(inst: ObpInstance) -> SingularityData:
    """Identify the corner points of a right-admissible instance.

    Each left-side edge glues the top edge of one rectangle to the bottom
    edge of another and identifies the two singular points at their left
    ends; the no-singularity level instead identifies across the bottom end
    of J.  Union-find over the n-1 labels yields the classes, and the genus
    follows from the multiplicities.
    """
    blocks = build_blocks(inst)
    dec = decompose_orbits(build_tau(inst, blocks), inst)
    _require_right(dec, blocks)
    return _classes_from_sigma(inst.sigma)


def intersection_form(sigma: tuple[int, ...]) -> IntersectionForm:
    """Pairing of the core curves: +-1 when sigma reverses the order of i and j."""
    n = len(sigma)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i < j and sigma[i - 1] > sigma[j - 1]:
                row.append(1)
            elif i > j and sigma[j - 1] > sigma[i - 1]:
                row.append(-1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return IntersectionForm(tuple(rows))


def symplectic_check(matrix: TransitionMatrix, form: IntersectionForm) -> Verdict:
    """Exact integer identity A S A^T = S."""
    n = matrix.n
    a = matrix.a
    s = form.s
    sat = [
        [sum(s[i][k] * a[j][k] for k in range(n)) for j in range(n)] for i in range(n)
    ]
    for i in range(n):
        for j in range(n):
            lhs = sum(a[i][k] * sat[k][j] for k in range(n))
            if lhs != s[i][j]:
                return Verdict(
                    False,
                    [i + 1, j + 1],
                    f"(A S A^T)[{i + 1},{j + 1}] = {lhs}, S gives {s[i][j]}",
                )
    return Verdict(True)


def strand_partition_check(
    blocks: BlockStructure, dec: OrbitDecomposition, pd: PerronData
) -> Verdict:
    """Per block j, the heights of the strands crossing it sum to lam * h_j."""
    lam = pd.lam
    for j in range(1, len(dec.orbits) + 1):
        total = 0.0
        for s in range(blocks.block_start[j - 1], blocks.block_end[j - 1] + 1):
            o = dec.orbit_index(s)
            if o is None:
                return Verdict(False, s, f"strand {s} lies in no orbit")
            total += pd.h[o - 1]
        want = lam * pd.h[j - 1]
        if abs(total - want) > EIGEN_REL_TOL * abs(want):
            return Verdict(False, j, f"block {j}: strand heights sum to {total}, not {want}")
    return Verdict(True)


@dataclass(frozen=True, eq=False)
class Surface:
    """Solved geometry of a right-admissible instance, with lookup caches.

    ``original`` is the instance as given; when it was left-admissible,
    ``instance`` is its inverse and ``conjugated`` is set.
    """

    original: ObpInstance
    instance: ObpInstance
    conjugated: bool
    report: AdmissibilityReport  # of the original input
    blocks: BlockStructure
    obp: Obp
    dec: OrbitDecomposition
    matrix: TransitionMatrix
    pd: PerronData
    layout: RectangleLayout
    edges: HorizontalEdges
    singularities: SingularityData
    form: IntersectionForm
    bounds: BoundsVerdict
    gluings: tuple[dict, ...]
    strand_top: dict[int, float] = field(repr=False)
    strand_height: dict[int, float] = field(repr=False)
    orbit_acc: tuple[tuple[float, ...], ...] = field(repr=False)
    left_depth: tuple[float, ...] = field(repr=False)  # chart depth of each rect's left-side top

    @property
    def lam(self) -> float:
        return self.pd.lam

    @property
    def n(self) -> int:
        return self.instance.n

    def _tol(self, rel: float) -> float:
        return rel * max(1.0, max(self.layout.l), self.layout.total_height)

    def apply_map(self, p: SurfacePoint) -> SurfacePoint:
        """Image of a chart point under the stretch map.

        The horizontal coordinate is stretched by lam and placed along the
        strand sequence of the rectangle's orbit; the vertical coordinate is
        shrunk by lam and offset to the strand's band.
        """
        n = self.n
        if not 1 <= p.rect <= n:
            raise OutOfChart(f"rectangle index {p.rect} out of range 1..{n}")
        l_r = self.layout.l[p.rect - 1]
        h_r = self.layout.h[p.rect - 1]
        eps = self._tol(1e-12)
        if p.u < -eps or p.u > l_r + eps or p.v < -eps or p.v > h_r + eps:
            raise OutOfChart(
                f"point (u={p.u}, v={p.v}) outside rectangle {p.rect} "
                f"of size {l_r} x {h_r}"
            )
        u = min(max(p.u, 0.0), l_r)
        v = min(max(p.v, 0.0), h_r)
        target = self.lam * u
        acc = self.orbit_acc[p.rect - 1]
        t = bisect.bisect_right(acc, target) - 1
        t = min(max(t, 0), len(acc) - 2)
        s = self.dec.orbits[p.rect - 1][t]
        block = self.blocks.block_of(s)
        u2 = min(target - acc[t], self.layout.l[block - 1])
        v2 = self.strand_top[s] + v / self.lam
        return SurfacePoint(block, u2, v2)

    def canonical_point(self, p: SurfacePoint, tol: float | None = None) -> SurfacePoint:
        """Canonical representative of a chart point under the edge gluings.

        Points on J are pushed through the vertical identification; points
        on a top edge move to the upper rectangle of their gluing.  Interior
        points and bottom-edge points are already canonical; the bottom end
        of J is (rect n, 0, h_n).
        """
        if tol is None:
            tol = self._tol(1e-9)
        sigma = self.instance.sigma
        sigma_inv = self.instance.sigma_inv
        n = self.n
        x, y = self.edges.x, self.edges.y
        l, h = self.layout.l, self.layout.h
        rect, u, v = p.rect, max(p.u, 0.0), max(p.v, 0.0)
        for _ in range(5):
            moved = False
            # vertical gluing: the right edge of a rectangle lies on J
            if u >= l[rect - 1] - tol:
                depth = self.left_depth[rect - 1] + v
                t = bisect.bisect_right(self.layout.cum_h, depth + tol) - 1
                t = min(max(t, 0), n - 1)
                rect, u, v = t + 1, 0.0, max(depth - self.layout.cum_h[t], 0.0)
                moved = True
            # horizontal gluing: top edges
            if v <= tol:
                if rect == 1 and u <= tol:
                    return SurfacePoint(1, 0.0, 0.0)
                x_above = x[rect - 2] if rect >= 2 else 0.0
                if rect >= 2 and u <= x_above + tol:
                    rect, u, v = rect - 1, u, h[rect - 2]
                    moved = True
                else:
                    level = sigma[rect - 1] - 1
                    if level >= 1:
                        t_par = u - x_above
                        if level == sigma[n - 1]:
                            if t_par <= y[n] + tol:
                                b = sigma_inv[n - 1]
                                rect, u, v = b, x[b - 1] + t_par, h[b - 1]
                            else:
                                rect, u, v = n, t_par - y[n], h[n - 1]
                        else:
                            b = sigma_inv[level - 1]
                            rect, u, v = b, x[b - 1] + t_par, h[b - 1]
                        moved = True
            if not moved:
                break
        return SurfacePoint(rect, u, v)

    def singular_locations(self) -> tuple[tuple[int, float, float, int], ...]:
        """Chart locations of the singular points as (rect, u, v, label)."""
        n = self.n
        x = self.edges.x
        l, h = self.layout.l, self.layout.h
        locs = []
        for j in range(1, n):
            locs.append((j, x[j - 1], h[j - 1], j))
            locs.append((j + 1, x[j - 1], 0.0, j))
        base = self.singularities.base_label
        top_left = self.instance.sigma_inv[0]
        locs.append((1, 0.0, 0.0, base))
        locs.append((top_left, l[top_left - 1], 0.0, base))
        return tuple(locs)

    def _class_of_label(self, label: int) -> int:
        for ci, cls in enumerate(self.singularities.classes):
            if label in cls:
                return ci
        raise ValueError(f"unknown singularity label {label}")

    def _nearest_class(self, p: SurfacePoint, tol: float) -> int | None:
        for rect, u, v, label in self.singular_locations():
            if rect == p.rect and abs(u - p.u) <= tol and abs(v - p.v) <= tol:
                return self._class_of_label(label)
        return None

    def points_identified(self, p: SurfacePoint, q: SurfacePoint, tol: float | None = None) -> bool:
        """Whether two chart points name the same surface point, up to tol."""
        if tol is None:
            tol = self._tol(MAP_REL_TOL)
        cp = self.canonical_point(p, tol)
        cq = self.canonical_point(q, tol)
        if cp.rect == cq.rect and abs(cp.u - cq.u) <= tol and abs(cp.v - cq.v) <= tol:
            return True
        a = self._nearest_class(cp, tol)
        b = self._nearest_class(cq, tol)
        return a is not None and a == b


def apply_map(p: SurfacePoint, surface: Surface) -> SurfacePoint:
    """Module-level convenience for :meth:`Surface.apply_map`."""
    return surface.apply_map(p)


def _build_gluings(
    sigma: tuple[int, ...],
    x: tuple[float, ...],
    y: tuple[float, ...],
    l: tuple[float, ...],
) -> tuple[dict, ...]:
    n = len(sigma)
    sigma_inv = invert_permutation(sigma)
    sig_n = sigma[n - 1]
    entries = []
    for j in range(1, n):
        a = sigma_inv[j]  # rect whose top edge carries level j (left position j+1)
        top_from = x[a - 2] if a >= 2 else 0.0
        entry: dict = {
            "level": j,
            "length": y[j],
            "top": {"rect": a, "from": top_from},
        }
        if j == sig_n:
            b = sigma_inv[n - 1]
            entry["bottom_pieces"] = [
                {"rect": b, "from": x[b - 1], "length": y[n]},
                {"rect": n, "from": 0.0, "length": l[n - 1], "ns_edge": True},
            ]
        else:
            b = sigma_inv[j - 1]
            entry["bottom"] = {"rect": b, "from": x[b - 1]}
        entries.append(entry)
    return tuple(entries)


def build_geometry(
    inst: ObpInstance, normalization: Normalization = Normalization.SUM_H
) -> Surface:
    """Full pipeline: admissibility, Perron data, edges, singularities, caches.

    Raises :class:`InadmissibleInstance` when the instance fails any of the
    five conditions.  Left-admissible input is replaced by its inverse.
    """
    report = check_admissible(inst)
    if not report.overall:
        raise InadmissibleInstance(
            f"instance is not admissible (first failing condition: {report.first_failed})"
        )
    conjugated = report.side is Side.LEFT
    work = invert_obp(inst) if conjugated else inst

    blocks = build_blocks(work)
    obp = build_tau(work, blocks)
    dec = decompose_orbits(obp, work)
    matrix = build_matrix(dec, blocks)
    pd = perron(matrix, normalization)
    x = solve_x(dec, blocks, pd)
    y = solve_y(dec, blocks, pd, x)
    sing = _classes_from_sigma(work.sigma)
    form = intersection_form(work.sigma)
    bounds = check_lambda_bounds(pd, work.k, dec.m)

    cum = [0.0]
    for hi in pd.h:
        cum.append(cum[-1] + hi)
    layout = RectangleLayout(pd.l, pd.h, tuple(cum))

    lam = pd.lam
    strand_top: dict[int, float] = {}
    strand_height: dict[int, float] = {}
    for b in range(1, work.n + 1):
        off = 0.0
        for s in range(blocks.block_start[b - 1], blocks.block_end[b - 1] + 1):
            o = dec.orbit_index(s)
            assert o is not None  # guaranteed by condition (i)
            strand_top[s] = off
            strand_height[s] = pd.h[o - 1] / lam
            off += pd.h[o - 1] / lam

    orbit_acc = []
    for orbit in dec.orbits:
        acc = [0.0]
        for s in orbit:
            acc.append(acc[-1] + pd.l[blocks.block_of(s) - 1])
        orbit_acc.append(tuple(acc))

    left_depth = []
    for r in range(1, work.n + 1):
        pos = work.sigma[r - 1]
        depth = sum(pd.h[work.sigma_inv[q - 1] - 1] for q in range(1, pos))
        left_depth.append(depth)

    return Surface(
        original=inst,
        instance=work,
        conjugated=conjugated,
        report=report,
        blocks=blocks,
        obp=obp,
        dec=dec,
        matrix=matrix,
        pd=pd,
        layout=layout,
        edges=HorizontalEdges(x, y),
        singularities=sing,
        form=form,
        bounds=bounds,
        gluings=_build_gluings(work.sigma, x, y, pd.l),
        strand_top=strand_top,
        strand_height=strand_height,
        orbit_acc=tuple(orbit_acc),
        left_depth=tuple(left_depth),
    )


def verify_surface(surface: Surface) -> list[str]:
    """Run every internal identity the construction asserts; return violations."""
    problems: list[str] = []
    inst = surface.instance
    n = inst.n
    sigma = inst.sigma
    sigma_inv = inst.sigma_inv
    lam = surface.lam
    l, h = surface.layout.l, surface.layout.h
    x, y = surface.edges.x, surface.edges.y
    tol = EIGEN_REL_TOL * max(1.0, max(l), max(h), lam)

    if surface.pd.residual_l > EIGEN_REL_TOL * max(l):
        problems.append(f"length eigenvector residual {surface.pd.residual_l}")
    if surface.pd.residual_h > EIGEN_REL_TOL * max(h):
        problems.append(f"height eigenvector residual {surface.pd.residual_h}")
    if not surface.bounds.passed:
        problems.append(f"eigenvalue bounds: {surface.bounds.status} {surface.bounds.detail}")

    if surface.matrix.row_sums() != surface.dec.m:
        problems.append("row sums of A do not equal the orbit lengths")
    if surface.matrix.col_sums() != inst.k:
        problems.append("column sums of A do not equal the strand counts")

    top_right = sigma_inv[0]  # block glued topmost on the left
    for i in range(1, n):
        xi = x[i - 1]
        if i == top_right - 1:
            if abs(xi - l[top_right - 1]) > tol:
                problems.append(f"x_{i} should equal l_{top_right}")
        elif not (tol < xi < min(l[i - 1], l[i]) - tol):
            problems.append(f"x_{i} = {xi} not strictly inside (0, min(l_{i}, l_{i + 1}))")

    if y[0] != 0.0:
        problems.append("y_0 is not zero")
    for j in range(1, n + 1):
        if y[j] <= tol:
            problems.append(f"y_{j} = {y[j]} is not positive")
    if abs(y[sigma[0] - 1] - l[0]) > tol:
        problems.append("y_{sigma(1)-1} does not equal l_1")
    if abs(y[sigma[n - 1]] - (y[n] + l[n - 1])) > tol:
        problems.append("y_{sigma(n)} does not equal y_n + l_n")
    for i in range(1, n):
        if abs(x[i - 1] + y[sigma[i] - 1] - l[i]) > tol:
            problems.append(f"x_{i} + y_(sigma({i + 1})-1) != l_{i + 1}")
        if abs(x[i - 1] + y[sigma[i - 1]] - l[i - 1]) > tol:
            problems.append(f"x_{i} + y_sigma({i}) != l_{i}")

    sym = symplectic_check(surface.matrix, surface.form)
    if not sym.passed:
        problems.append(f"symplectic identity fails: {sym.detail}")

    part = strand_partition_check(surface.blocks, surface.dec, surface.pd)
    if not part.passed:
        problems.append(f"strand partition fails: {part.detail}")

    for i, acc in enumerate(surface.orbit_acc, start=1):
        if abs(acc[-1] - lam * l[i - 1]) > tol:
            problems.append(f"orbit {i} widths sum to {acc[-1]}, not lam * l_{i}")

    area = surface.layout.area()
    image_area = sum(
        l[surface.blocks.block_of(s) - 1] * surface.strand_height[s]
        for s in range(1, inst.K + 1)
    )
    if abs(area - image_area) > EIGEN_REL_TOL * max(1.0, area):
        problems.append(f"image area {image_area} differs from {area}")

    sing = surface.singularities
    if sum(pr + 1 for pr in sing.p) != n - 1:
        problems.append("multiplicities do not satisfy sum(p_r + 1) = n - 1")
    if n != 2 * sing.genus + sing.nu - 1:
        problems.append("n != 2g + nu - 1")
    if not (n + 3 <= 4 * sing.genus and 2 * sing.genus <= n):
        problems.append(f"genus {sing.genus} outside [(n+3)/4, n/2]")
    if min(len(c) for c in sing.classes) < 2:
        problems.append("a singularity class has size 1 (regular point)")

    return problems
