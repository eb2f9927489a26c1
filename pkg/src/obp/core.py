"""Block and strand combinatorics of ordered block permutations.

An instance is a triple (n, sigma, k): ``sigma`` reorders ``n`` blocks and
``k`` gives the number of strands in each block.  The induced permutation
``tau`` of the K = sum(k) strands moves whole blocks to their new positions
while keeping the order inside each block.

Strand and block labels are 1-based everywhere, as is the external JSON
format.  Stored tuples put the value for label ``i`` at position ``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BottomStrandMissing, TopStrandMissing

__all__ = [
    "ObpInstance",
    "BlockStructure",
    "Obp",
    "OrbitDecomposition",
    "build_blocks",
    "build_tau",
    "decompose_orbits",
    "split_orbit_at_top",
    "split_orbit_at_bottom",
    "invert_obp",
    "cycle_count",
    "invert_permutation",
    "permutation_cycles",
]


def invert_permutation(sigma: tuple[int, ...]) -> tuple[int, ...]:
    """Invert a permutation given as a 1-based image array."""
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v - 1] = i + 1
    return tuple(inv)


def permutation_cycles(perm: tuple[int, ...]) -> list[list[int]]:
    """Cycle decomposition of a 1-based image array; each cycle starts at its minimum."""
    seen = [False] * len(perm)
    cycles: list[list[int]] = []
    for start in range(1, len(perm) + 1):
        if seen[start - 1]:
            continue
        cycle = []
        cur = start
        while not seen[cur - 1]:
            seen[cur - 1] = True
            cycle.append(cur)
            cur = perm[cur - 1]
        cycles.append(cycle)
    return cycles


@dataclass(frozen=True, slots=True)
class ObpInstance:
    """Input pair (sigma, k) for n blocks, with the derived totals.

    ``sigma`` is the image array (sigma[i-1] is where block i goes),
    ``k`` the per-block strand counts, ``K`` their sum and ``sigma_inv``
    the inverse image array.
    """

    n: int
    sigma: tuple[int, ...]
    k: tuple[int, ...]
    K: int = field(init=False)
    sigma_inv: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "k", tuple(self.k))
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if len(self.sigma) != self.n:
            raise ValueError(f"sigma has length {len(self.sigma)}, expected {self.n}")
        if sorted(self.sigma) != list(range(1, self.n + 1)):
            raise ValueError("sigma is not a permutation of 1..n")
        if len(self.k) != self.n:
            raise ValueError(f"k has length {len(self.k)}, expected {self.n}")
        if any(not isinstance(ki, int) or ki < 1 for ki in self.k):
            raise ValueError("all strand counts k_i must be integers >= 1")
        object.__setattr__(self, "K", sum(self.k))
        object.__setattr__(self, "sigma_inv", invert_permutation(self.sigma))


@dataclass(frozen=True, slots=True)
class BlockStructure:
    """Strand ranges of the blocks and the strand -> block lookup."""

    block_start: tuple[int, ...]
    block_end: tuple[int, ...]
    beta: tuple[int, ...]

    def block_of(self, strand: int) -> int:
        return self.beta[strand - 1]

    def top_strand(self, block: int) -> int:
        return self.block_start[block - 1]

    def bottom_strand(self, block: int) -> int:
        return self.block_end[block - 1]


@dataclass(frozen=True, slots=True)
class Obp:
    """The strand permutation ``tau`` and its inverse, as 1-based image arrays."""

    tau: tuple[int, ...]
    tau_inv: tuple[int, ...]

    def of(self, strand: int) -> int:
        return self.tau[strand - 1]

    def inv(self, strand: int) -> int:
        return self.tau_inv[strand - 1]


@dataclass(frozen=True, slots=True)
class OrbitDecomposition:
    """Orbits of the first n strands under ``tau`` and the induced first-return map.

    ``orbits[i-1]`` starts at strand i and lists the strands visited before
    the walk first returns to {1..n}; the return value is ``tau_prime[i-1]``.
    ``orbit_of`` maps a strand to its (orbit index, position), first
    occurrence winning; ``duplicate_strand`` is the smallest strand found in
    two orbits (None when the orbits are disjoint).
    """

    orbits: tuple[tuple[int, ...], ...]
    m: tuple[int, ...]
    tau_prime: tuple[int, ...]
    orbit_of: dict[int, tuple[int, int]]
    duplicate_strand: int | None = None

    def orbit_index(self, strand: int) -> int | None:
        hit = self.orbit_of.get(strand)
        return None if hit is None else hit[0]


def build_blocks(inst: ObpInstance) -> BlockStructure:
    """Partition the strands 1..K into consecutive blocks of sizes k_1..k_n."""
    starts = []
    ends = []
    beta = []
    pos = 1
    for i, ki in enumerate(inst.k, start=1):
        starts.append(pos)
        ends.append(pos + ki - 1)
        beta.extend([i] * ki)
        pos += ki
    return BlockStructure(tuple(starts), tuple(ends), tuple(beta))


def build_tau(inst: ObpInstance, blocks: BlockStructure) -> Obp:
    """Build the strand permutation: block i is moved to position sigma(i).

    Strand j in block b lands at the same offset inside the block sitting in
    position sigma(b) on the other side, so
    tau(j) = j + sum(k of blocks left-ordered before sigma(b)) - sum(k_1..k_{b-1}).
    """
    n, k, sigma, sigma_inv = inst.n, inst.k, inst.sigma, inst.sigma_inv
    left_start = [0] * (n + 1)  # left_start[p]: first strand index of left position p+1
    acc = 1
    for p in range(1, n + 1):
        left_start[p] = acc
        acc += k[sigma_inv[p - 1] - 1]
    tau = [0] * inst.K
    for b in range(1, n + 1):
        base = left_start[sigma[b - 1]]
        start = blocks.block_start[b - 1]
        for j in range(start, blocks.block_end[b - 1] + 1):
            tau[j - 1] = base + (j - start)
    tau_t = tuple(tau)
    inv = [0] * inst.K
    for j, v in enumerate(tau_t, start=1):
        inv[v - 1] = j
    return Obp(tau_t, tuple(inv))


def decompose_orbits(obp: Obp, inst: ObpInstance) -> OrbitDecomposition:
    """Iterate tau from each of 1..n until the walk first returns to {1..n}.

    The visited strands (return value excluded) form the orbit; the return
    value defines the first-return permutation.  A strand appearing in two
    orbits is recorded eagerly in ``duplicate_strand``.
    """
    n = inst.n
    tau = obp.tau
    orbits = []
    m = []
    tau_prime = []
    orbit_of: dict[int, tuple[int, int]] = {}
    duplicate: int | None = None
    for i in range(1, n + 1):
        orbit = [i]
        cur = tau[i - 1]
        while cur > n:
            orbit.append(cur)
            cur = tau[cur - 1]
        tau_prime.append(cur)
        m.append(len(orbit))
        for pos, s in enumerate(orbit):
            if s in orbit_of:
                if duplicate is None or s < duplicate:
                    duplicate = s
            else:
                orbit_of[s] = (i, pos)
        orbits.append(tuple(orbit))
    return OrbitDecomposition(tuple(orbits), tuple(m), tuple(tau_prime), orbit_of, duplicate)


def split_orbit_at_top(
    dec: OrbitDecomposition, blocks: BlockStructure, i: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split orbit i at the top strand of block i, for 2 <= i <= n.

    Returns the parts strictly before and strictly after the top strand.
    """
    n = len(dec.orbits)
    if not 2 <= i <= n:
        raise ValueError(f"top split is defined for block indices 2..{n}, got {i}")
    top = blocks.top_strand(i)
    orbit = dec.orbits[i - 1]
    try:
        pos = orbit.index(top)
    except ValueError:
        raise TopStrandMissing(
            f"top strand {top} of block {i} is not in orbit {i}"
        ) from None
    return orbit[:pos], orbit[pos + 1 :]


def split_orbit_at_bottom(
    dec: OrbitDecomposition, blocks: BlockStructure, i: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split orbit i at the bottom strand of block i, for 1 <= i <= n-1."""
    n = len(dec.orbits)
    if not 1 <= i <= n - 1:
        raise ValueError(f"bottom split is defined for block indices 1..{n - 1}, got {i}")
    bottom = blocks.bottom_strand(i)
    orbit = dec.orbits[i - 1]
    try:
        pos = orbit.index(bottom)
    except ValueError:
        raise BottomStrandMissing(
            f"bottom strand {bottom} of block {i} is not in orbit {i}"
        ) from None
    return orbit[:pos], orbit[pos + 1 :]


def invert_obp(inst: ObpInstance) -> ObpInstance:
    """Instance describing the inverse strand permutation.

    The permutation becomes sigma^{-1} and the count vector is permuted
    accordingly; build_tau of the result is the inverse of build_tau of the
    input, and the operation is an involution.
    """
    k_new = tuple(inst.k[inst.sigma_inv[i] - 1] for i in range(inst.n))
    return ObpInstance(inst.n, inst.sigma_inv, k_new)


def cycle_count(obp: Obp) -> int:
    """Number of cycles of tau as an abstract permutation of 1..K."""
    return len(permutation_cycles(obp.tau))
