"""Exhaustive enumeration of admissible instances over bounded (n, K) ranges.

Candidates are pruned up front by the necessary conditions (sigma moves 1
and n, and the two distinguished strand counts are at least n); the pruned
volume is still accounted for in the counters, which are exact because both
the full and the pruned k-spaces have closed-form sizes.

Results are always produced in canonical order: lexicographic in
(K, sigma as an image array, k), independent of the worker count.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .admissibility import CONDITION_IDS, Side, examine
from .core import ObpInstance
from .errors import EmptySearchSpace
from .geometry import build_geometry
from .spectral import Normalization

__all__ = [
    "SearchSpec",
    "SearchResult",
    "SearchCounters",
    "enumerate_admissible",
    "run_search",
    "min_dilatation",
]


@dataclass(frozen=True, slots=True)
class SearchSpec:
    """Search range: all instances with this n and K <= kmax.

    Optional filters restrict the emitted results by genus or stratum
    (counters still describe the whole range).
    """

    n: int
    kmax: int
    genus: int | None = None
    stratum: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.kmax < self.n:
            raise ValueError(f"kmax must be at least n, got {self.kmax} < {self.n}")
        if self.stratum is not None:
            object.__setattr__(self, "stratum", tuple(sorted(self.stratum, reverse=True)))


@dataclass(frozen=True, slots=True)
class SearchResult:
    """One admissible instance with its spectral and topological summary."""

    instance: ObpInstance
    m: tuple[int, ...]
    side: Side
    lam: float
    genus: int
    nu: int
    stratum: tuple[int, ...]

    @property
    def sort_key(self) -> tuple:
        return (self.instance.K, self.instance.sigma, self.instance.k)


@dataclass
class SearchCounters:
    """Exact bookkeeping over the whole (unpruned) candidate space.

    total_candidates = quick_filter_rejections + examined, and
    examined = admissible + sum of the first-failure counts.
    condition_failures counts each condition independently (every condition
    is evaluated for every examined candidate); only_iii counts candidates
    failing irreducibility alone, the case no example is known for.
    """

    total_candidates: int = 0
    quick_filter_rejections: int = 0
    examined: int = 0
    admissible: int = 0
    emitted: int = 0
    first_failure: dict[str, int] = field(
        default_factory=lambda: {cid: 0 for cid in CONDITION_IDS}
    )
    condition_failures: dict[str, int] = field(
        default_factory=lambda: {cid: 0 for cid in CONDITION_IDS}
    )
    only_iii: int = 0

    def to_dict(self) -> dict:
        return {
            "total_candidates": self.total_candidates,
            "quick_filter_rejections": self.quick_filter_rejections,
            "examined": self.examined,
            "admissible": self.admissible,
            "emitted": self.emitted,
            "first_failure": dict(self.first_failure),
            "condition_failures": dict(self.condition_failures),
            "only_iii": self.only_iii,
        }


def _pruned_sigmas(n: int) -> list[tuple[int, ...]]:
    """Permutations with sigma(1) > 1 and sigma(n) < n, in lexicographic order."""
    return [
        sigma
        for sigma in itertools.permutations(range(1, n + 1))
        if sigma[0] != 1 and sigma[-1] != n
    ]


def _k_vectors(total: int, mins: tuple[int, ...]):
    """All integer vectors with the given sum and per-slot minimums, lex order."""
    if len(mins) == 1:
        if total >= mins[0]:
            yield (total,)
        return
    rest = sum(mins[1:])
    for first in range(mins[0], total - rest + 1):
        for tail in _k_vectors(total - first, mins[1:]):
            yield (first,) + tail


def _mins_for(n: int, sigma: tuple[int, ...]) -> tuple[int, ...]:
    mins = [1] * n
    mins[0] = n
    mins[sigma.index(1)] = n  # position of sigma^{-1}(1), never slot 0 here
    return tuple(mins)


def _scan_sigma(args: tuple[int, tuple[int, ...], int]) -> tuple[list[tuple], dict]:
    """Worker: examine every k-vector for one sigma; returns rows and counters."""
    n, sigma, kmax = args
    mins = _mins_for(n, sigma)
    kmin = sum(mins)
    counters = SearchCounters()
    rows: list[tuple] = []
    for total in range(kmin, kmax + 1):
        for k in _k_vectors(total, mins):
            inst = ObpInstance(n, sigma, k)
            report, dec, _matrix = examine(inst)
            counters.examined += 1
            if report.overall:
                counters.admissible += 1
                surface = build_geometry(inst)
                sing = surface.singularities
                rows.append(
                    (
                        inst.K,
                        sigma,
                        k,
                        dec.m,
                        report.side.value,
                        surface.lam,
                        sing.genus,
                        sing.nu,
                        sing.stratum,
                    )
                )
            else:
                first = report.first_failed
                counters.first_failure[first] += 1
                failed = [
                    cid for cid in CONDITION_IDS if not report.condition(cid).passed
                ]
                for cid in failed:
                    counters.condition_failures[cid] += 1
                if failed == ["iii"]:
                    counters.only_iii += 1
    return rows, counters.to_dict()


def _merge_counters(target: SearchCounters, part: dict) -> None:
    target.examined += part["examined"]
    target.admissible += part["admissible"]
    target.only_iii += part["only_iii"]
    for cid in CONDITION_IDS:
        target.first_failure[cid] += part["first_failure"][cid]
        target.condition_failures[cid] += part["condition_failures"][cid]


def run_search(spec: SearchSpec, workers: int = 1) -> tuple[list[SearchResult], SearchCounters]:
    """Enumerate the whole range; results sorted canonically regardless of workers."""
    n, kmax = spec.n, spec.kmax
    sigmas = _pruned_sigmas(n)
    counters = SearchCounters()
    counters.total_candidates = math.factorial(n) * math.comb(kmax, n)
    pruned_k_space = math.comb(max(kmax - 2 * (n - 1), 0), n)
    counters.quick_filter_rejections = (
        counters.total_candidates - len(sigmas) * pruned_k_space
    )

    jobs = [(n, sigma, kmax) for sigma in sigmas]
    all_rows: list[tuple] = []
    if workers <= 1 or len(jobs) <= 1:
        outputs = map(_scan_sigma, jobs)
    else:
        executor = ProcessPoolExecutor(max_workers=workers)
        try:
            outputs = list(executor.map(_scan_sigma, jobs))
        finally:
            executor.shutdown()
    for rows, part in outputs:
        all_rows.extend(rows)
        _merge_counters(counters, part)

    all_rows.sort(key=lambda r: (r[0], r[1], r[2]))
    results = []
    for K, sigma, k, m, side, lam, genus, nu, stratum in all_rows:
        if spec.genus is not None and genus != spec.genus:
            continue
        if spec.stratum is not None and tuple(stratum) != spec.stratum:
            continue
        results.append(
            SearchResult(
                instance=ObpInstance(n, sigma, k),
                m=m,
                side=Side(side),
                lam=lam,
                genus=genus,
                nu=nu,
                stratum=tuple(stratum),
            )
        )
    counters.emitted = len(results)
    return results, counters


def enumerate_admissible(spec: SearchSpec, workers: int = 1):
    """Iterate the canonical result stream (convenience wrapper)."""
    results, _counters = run_search(spec, workers)
    yield from results


def min_dilatation(spec: SearchSpec) -> SearchResult:
    """The admissible instance minimizing the stretch factor, canonical ties first.

    Scans in canonical order and skips the eigencomputation whenever the
    strict lower bounds min(k) or min(m) already reach the current best.
    """
    n, kmax = spec.n, spec.kmax
    best: SearchResult | None = None
    best_lam = math.inf
    for total in range(2 * n + (n - 2), kmax + 1):
        for sigma in _pruned_sigmas(n):
            mins = _mins_for(n, sigma)
            if sum(mins) > total:
                continue
            for k in _k_vectors(total, mins):
                if min(k) >= best_lam:
                    continue  # lam > min(k), cannot improve
                inst = ObpInstance(n, sigma, k)
                report, dec, _matrix = examine(inst)
                if not report.overall:
                    continue
                if min(dec.m) >= best_lam:
                    continue  # lam > min(m), cannot improve
                surface = build_geometry(inst)
                if spec.genus is not None and surface.singularities.genus != spec.genus:
                    continue
                if (
                    spec.stratum is not None
                    and surface.singularities.stratum != spec.stratum
                ):
                    continue
                if surface.lam < best_lam:
                    best_lam = surface.lam
                    best = SearchResult(
                        instance=inst,
                        m=dec.m,
                        side=report.side,
                        lam=surface.lam,
                        genus=surface.singularities.genus,
                        nu=surface.singularities.nu,
                        stratum=surface.singularities.stratum,
                    )
    if best is None:
        raise EmptySearchSpace(f"no admissible instance with n={n}, K<={kmax}")
    return best
