"""Admissibility of an instance: the five conditions, the side, and fast filters.

An instance is admissible when (i) the orbits cover every strand, (ii) the
first-return map reproduces sigma, (iii) the transition matrix is
irreducible, (iv) every orbit carries its block's top and bottom strand with
the single no-singularity exception, and (v) no identified corner point is a
regular (fake) one.

The side of condition (iv) is an output: the pair {tau^{-1}(K), K} sits in
the orbit of block n (left) or of block sigma^{-1}(n) (right).  Condition
(iv) expresses the side through the location of a singular point and (v)
through the no-singularity edge; this module pairs them operationally as
left <=> pair in orbit n, which matches the worked reference data.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    BlockStructure,
    ObpInstance,
    OrbitDecomposition,
    build_blocks,
    build_tau,
    decompose_orbits,
)
from .spectral import TransitionMatrix, build_matrix

__all__ = [
    "Side",
    "Verdict",
    "AdmissibilityReport",
    "quick_filters",
    "check_cover",
    "check_first_return",
    "check_irreducible",
    "check_top_bottom",
    "check_no_fake",
    "check_admissible",
    "examine",
    "strongly_connected_components",
]

CONDITION_IDS = ("i", "ii", "iii", "iv", "v")


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    def opposite(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True, slots=True)
class Verdict:
    """Pass/fail for one condition, with witness data on failure."""

    passed: bool
    witness: object = None
    detail: str = ""

    def to_dict(self) -> dict:
        out: dict = {"passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True, slots=True)
class AdmissibilityReport:
    """Verdicts for conditions i..v plus the quick-filter outcome.

    ``side`` is present exactly when condition (iv) passes; ``overall`` is
    true only when all five conditions pass.
    """

    cover: Verdict
    first_return: Verdict
    irreducible: Verdict
    top_bottom: Verdict
    no_fake: Verdict
    side: Side | None
    quick_filter_failures: tuple[str, ...]
    overall: bool

    def condition(self, cid: str) -> Verdict:
        return {
            "i": self.cover,
            "ii": self.first_return,
            "iii": self.irreducible,
            "iv": self.top_bottom,
            "v": self.no_fake,
        }[cid]

    @property
    def first_failed(self) -> str | None:
        for cid in CONDITION_IDS:
            if not self.condition(cid).passed:
                return cid
        return None

    def to_dict(self) -> dict:
        return {
            "quick_filter_failures": list(self.quick_filter_failures),
            "conditions": {cid: self.condition(cid).to_dict() for cid in CONDITION_IDS},
            "side": self.side.value if self.side is not None else None,
            "first_failed": self.first_failed,
            "overall": self.overall,
        }


def quick_filters(inst: ObpInstance) -> list[str]:
    """Necessary conditions cheap enough to test before anything else.

    Returns the violated ones among: k_1 >= n, k_{sigma^{-1}(1)} >= n,
    sigma(1) > 1, sigma(n) < n.  An empty list does not imply admissibility.
    """
    failures = []
    if inst.k[0] < inst.n:
        failures.append("k1_lt_n")
    if inst.k[inst.sigma_inv[0] - 1] < inst.n:
        failures.append("k_sigma_inv1_lt_n")
    if inst.sigma[0] == 1:
        failures.append("sigma_fixes_1")
    if inst.sigma[inst.n - 1] == inst.n:
        failures.append("sigma_fixes_n")
    return failures


def check_cover(dec: OrbitDecomposition, K: int) -> Verdict:
    """Condition (i): the orbits partition the strands 1..K."""
    counts = [0] * K
    for orbit in dec.orbits:
        for s in orbit:
            counts[s - 1] += 1
    bad = [s for s in range(1, K + 1) if counts[s - 1] != 1]
    if not bad:
        return Verdict(True)
    witness = min(bad)
    kind = "uncovered" if counts[witness - 1] == 0 else "doubly covered"
    return Verdict(False, witness, f"strand {witness} is {kind}")


def check_first_return(dec: OrbitDecomposition, sigma: tuple[int, ...]) -> Verdict:
    """Condition (ii): the first-return map equals sigma pointwise."""
    for i, (got, want) in enumerate(zip(dec.tau_prime, sigma), start=1):
        if got != want:
            return Verdict(False, i, f"first return of {i} is {got}, sigma gives {want}")
    return Verdict(True)


def strongly_connected_components(adj: list[list[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative; vertices are 0-based, components in discovery order."""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, ptr = work[-1]
            if ptr == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for offset in range(ptr, len(adj[v])):
                w = adj[v][offset]
                if index[w] == -1:
                    work[-1] = (v, offset + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return components


def check_irreducible(matrix: TransitionMatrix) -> Verdict:
    """Condition (iii): the digraph with an edge i -> j when a_ij > 0 is strongly connected.

    On failure the witness is a proper closed subset of indices (a sink
    component of the condensation), 1-based and sorted.
    """
    n = matrix.n
    adj = [[j for j in range(n) if matrix.a[i][j] > 0] for i in range(n)]
    components = strongly_connected_components(adj)
    if len(components) == 1:
        return Verdict(True)
    comp_of = [0] * n
    for ci, comp in enumerate(components):
        for v in comp:
            comp_of[v] = ci
    sinks = []
    for ci, comp in enumerate(components):
        if all(comp_of[w] == ci for v in comp for w in adj[v]):
            sinks.append(sorted(v + 1 for v in comp))
    witness = min(sinks, key=lambda c: c[0])
    return Verdict(False, witness, f"{{{', '.join(map(str, witness))}}} is closed")


def check_top_bottom(
    dec: OrbitDecomposition, blocks: BlockStructure, sigma: tuple[int, ...]
) -> tuple[Verdict, Side | None]:
    """Condition (iv): orbits carry their own top and bottom strands.

    The bottom strands of blocks n and sigma^{-1}(n) are the exception: both
    must sit together in exactly one of the two orbits, and which one fixes
    the side (orbit n: left, orbit sigma^{-1}(n): right).
    """
    n = len(sigma)
    sig_inv_n = sigma.index(n) + 1
    for i in range(1, n + 1):
        top = blocks.top_strand(i)
        if dec.orbit_index(top) != i:
            return (
                Verdict(False, {"block": i, "strand": top, "kind": "top"},
                        f"top strand {top} of block {i} is not in orbit {i}"),
                None,
            )
    for i in range(1, n + 1):
        if i == n or i == sig_inv_n:
            continue
        bottom = blocks.bottom_strand(i)
        if dec.orbit_index(bottom) != i:
            return (
                Verdict(False, {"block": i, "strand": bottom, "kind": "bottom"},
                        f"bottom strand {bottom} of block {i} is not in orbit {i}"),
                None,
            )
    if sig_inv_n == n:
        return (
            Verdict(False, {"block": n, "kind": "pair"},
                    "sigma fixes n, so the two exceptional orbits coincide"),
            None,
        )
    last_left = blocks.bottom_strand(sig_inv_n)  # the strand mapping onto K
    last_right = blocks.bottom_strand(n)  # strand K itself
    pair = (last_left, last_right)
    in_n = all(dec.orbit_index(s) == n for s in pair)
    in_sig = all(dec.orbit_index(s) == sig_inv_n for s in pair)
    if in_n and not in_sig:
        return Verdict(True), Side.LEFT
    if in_sig and not in_n:
        return Verdict(True), Side.RIGHT
    return (
        Verdict(False, {"pair": list(pair), "kind": "pair"},
                f"strands {pair} do not lie together in orbit {n} or orbit {sig_inv_n}"),
        None,
    )


def _fake_point_predicate(pi: tuple[int, ...]) -> Verdict:
    """Fail when some identified corner point of the gluing pattern is regular.

    ``pi`` is the permutation the right-admissible convention applies the
    test to; requires pi(1) > 1 so that the corner-point index is in range.
    """
    n = len(pi)
    pi_inv = [0] * n
    for i, v in enumerate(pi):
        pi_inv[v - 1] = i + 1
    if pi[0] == 1:
        raise ValueError("fake-point predicate needs pi(1) > 1")
    skip = pi_inv[0] - 1
    for i in range(1, n):  # i = 1..n-1
        if i == skip:
            continue
        if pi[i] == pi[n - 1] + 1:
            if pi[i - 1] == n:
                return Verdict(False, i, f"corner point {i} is regular")
        else:
            if pi[i] == pi[i - 1] + 1:
                return Verdict(False, i, f"corner point {i} is regular")
    if pi[0] == pi[n - 1] + 1:
        if pi_inv[0] == pi_inv[n - 1] + 1:
            return Verdict(False, 0, "base point is regular")
    else:
        if pi_inv[pi[0] - 2] == pi_inv[0] - 1:
            return Verdict(False, 0, "base point is regular")
    return Verdict(True)


def check_no_fake(inst: ObpInstance, side: Side) -> Verdict:
    """Condition (v): apply the fake-point predicate to sigma (right) or sigma^{-1} (left)."""
    pi = inst.sigma if side is Side.RIGHT else inst.sigma_inv
    return _fake_point_predicate(pi)


def examine(
    inst: ObpInstance,
) -> tuple[AdmissibilityReport, OrbitDecomposition, TransitionMatrix]:
    """Like :func:`check_admissible`, also returning the orbit data and matrix."""
    blocks = build_blocks(inst)
    obp = build_tau(inst, blocks)
    dec = decompose_orbits(obp, inst)
    quick = tuple(quick_filters(inst))

    cover = check_cover(dec, inst.K)
    first_return = check_first_return(dec, inst.sigma)
    matrix = build_matrix(dec, blocks)
    irreducible = check_irreducible(matrix)
    top_bottom, side = check_top_bottom(dec, blocks, inst.sigma)
    if side is None:
        no_fake = Verdict(False, None, "skipped: no side available from condition (iv)")
    elif inst.sigma[0] == 1:
        no_fake = Verdict(False, None, "skipped: sigma(1) = 1 already fails the quick filters")
    else:
        no_fake = check_no_fake(inst, side)

    overall = all(
        v.passed for v in (cover, first_return, irreducible, top_bottom, no_fake)
    )
    report = AdmissibilityReport(
        cover=cover,
        first_return=first_return,
        irreducible=irreducible,
        top_bottom=top_bottom,
        no_fake=no_fake,
        side=side,
        quick_filter_failures=quick,
        overall=overall,
    )
    return report, dec, matrix


def check_admissible(inst: ObpInstance) -> AdmissibilityReport:
    """Run the quick filters and all five conditions, in order.

    Every condition that can be evaluated is evaluated, so the report stays
    informative for search diagnostics; condition (v) depends on the side
    from (iv) and on sigma(1) > 1, and is reported as skipped otherwise
    (the instance is inadmissible in that case regardless).
    """
    report, _dec, _matrix = examine(inst)
    return report
