"""Shared enumeration of the acceptance corpus (n <= 5, K <= 24).

The scan is partitioned per permutation across processes; workers return
only the instances passing conditions (i), (ii) and (iv), whose reports the
parent then rebuilds.  Everything heavier (surfaces) is cached lazily.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from obp import ObpInstance, Side, Surface, build_geometry
from obp.admissibility import AdmissibilityReport, examine
from obp.search import _k_vectors, _mins_for, _pruned_sigmas

WORKERS = 8


def _scan_one(args: tuple[int, tuple[int, ...], int]) -> list[tuple[int, tuple, tuple]]:
    n, sigma, kmax = args
    mins = _mins_for(n, sigma)
    hits = []
    for total in range(sum(mins), kmax + 1):
        for k in _k_vectors(total, mins):
            inst = ObpInstance(n, sigma, k)
            report, _dec, _matrix = examine(inst)
            if (
                report.cover.passed
                and report.first_return.passed
                and report.top_bottom.passed
            ):
                hits.append((n, sigma, k))
    return hits


@dataclass
class Corpus:
    """Instances passing (i), (ii), (iv); admissible ones carry built surfaces."""

    candidates: list[tuple[ObpInstance, AdmissibilityReport]]
    _surfaces: dict[ObpInstance, Surface] = field(default_factory=dict)

    @property
    def admissible(self) -> list[tuple[ObpInstance, AdmissibilityReport]]:
        return [(inst, rep) for inst, rep in self.candidates if rep.overall]

    @property
    def iv_pass(self) -> list[tuple[ObpInstance, AdmissibilityReport]]:
        """Passing (i)-(iv); condition (v) free."""
        return [
            (inst, rep)
            for inst, rep in self.candidates
            if rep.irreducible.passed
        ]

    def surface(self, inst: ObpInstance) -> Surface:
        if inst not in self._surfaces:
            self._surfaces[inst] = build_geometry(inst)
        return self._surfaces[inst]


def scan_corpus(max_n: int, kmax: int) -> Corpus:
    jobs = []
    for n in range(2, max_n + 1):
        jobs.extend((n, sigma, kmax) for sigma in _pruned_sigmas(n))
    with ProcessPoolExecutor(max_workers=WORKERS) as pool:
        outputs = list(pool.map(_scan_one, jobs, chunksize=4))
    rows = [row for out in outputs for row in out]
    rows.sort(key=lambda r: (r[0], sum(r[2]), r[1], r[2]))
    candidates = []
    for n, sigma, k in rows:
        inst = ObpInstance(n, sigma, k)
        report, _dec, _matrix = examine(inst)
        candidates.append((inst, report))
    return Corpus(candidates)
