"""Abacus displays: p-cores, p-quotients, weights, blocks and Rouquier blocks.

Bead counts are always multiples of ``p``. With that convention, runner 0
carries the vertical p-hooks and runner ``p-1`` the horizontal ones, which
is what :func:`rouquier_decompose` relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import (
    ConfigurationError,
    InternalConsistencyError,
    NotDecomposableError,
    PreconditionError,
    SizeMismatchError,
)
from .partitions import (
    Partition,
    add_scaled,
    all_partitions,
    as_partition,
    check_modulus,
    conjugate,
    is_p_regular,
    is_p_restricted,
    nodes,
    residue,
)


@dataclass(frozen=True)
class AbacusDisplay:
    p: int
    beads: int
    positions: frozenset[int]

    def runner(self, i: int) -> list[int]:
        """Levels (position div p) of the beads on runner ``i``, ascending."""
        return sorted(x // self.p for x in self.positions if x % self.p == i)

    def runner_counts(self) -> tuple[int, ...]:
        counts = [0] * self.p
        for x in self.positions:
            counts[x % self.p] += 1
        return tuple(counts)

    def to_json(self) -> dict:
        return {"p": self.p, "beads": self.beads, "positions": sorted(self.positions, reverse=True)}

    def render(self) -> str:
        """Text picture: one column per runner, '●' for a bead, '·' for a gap."""
        top = max(self.positions, default=0) // self.p
        lines = [" ".join(str(i) for i in range(self.p))]
        for level in range(top + 1):
            row = ("●" if level * self.p + i in self.positions else "·" for i in range(self.p))
            lines.append(" ".join(row))
        return "\n".join(lines)


@dataclass(frozen=True)
class BlockId:
    """A block of the symmetric group in characteristic ``p``, by core and weight."""

    p: int
    core: Partition
    weight: int

    def __post_init__(self):
        object.__setattr__(self, "core", as_partition(self.core))
        check_modulus(self.p)
        if self.weight < 0:
            raise ConfigurationError(f"weight must be non-negative, got {self.weight}")
        if p_core(self.core, self.p) != self.core:
            raise ConfigurationError(f"{self.core} is not a {self.p}-core")

    @property
    def degree(self) -> int:
        return self.core.size + self.p * self.weight


@dataclass(frozen=True)
class RouquierDecomposition:
    """The labels ``lam = lam~ + p*mu``, ``lam~' = core' + p*tau``, ``sigma = core + p*mu``."""

    p: int
    lam: Partition
    core: Partition
    weight: int
    lambda_tilde: Partition
    mu: Partition
    tau: Partition
    sigma: Partition

    def identities_hold(self) -> bool:
        p = self.p
        return (
            add_scaled(self.lambda_tilde, self.mu, p) == self.lam
            and conjugate(self.lambda_tilde) == add_scaled(conjugate(self.core), self.tau, p)
            and self.sigma == add_scaled(self.core, self.mu, p)
            and self.lam.size == self.core.size + p * (self.mu.size + self.tau.size)
            and self.weight == self.mu.size + self.tau.size
        )

    def is_valid(self) -> bool:
        """The defining identities plus the regularity conditions of the irreducible case."""
        return (
            self.identities_hold()
            and is_p_restricted(self.lambda_tilde, self.p)
            and is_p_regular(self.mu, self.p)
            and is_p_regular(self.tau, self.p)
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "lambda": str(self.lam),
            "core": str(self.core),
            "weight": self.weight,
            "lambda_tilde": str(self.lambda_tilde),
            "mu": str(self.mu),
            "tau": str(self.tau),
            "sigma": str(self.sigma),
        }


def default_beads(lam, p: int) -> int:
    """Smallest multiple of ``p`` that is at least the number of parts (and at least p)."""
    n = len(as_partition(lam))
    return max(p, -(-n // p) * p)


def from_partition(lam, p: int, b: int | None = None) -> AbacusDisplay:
    check_modulus(p)
    lam = as_partition(lam)
    if b is None:
        b = default_beads(lam, p)
    if b < len(lam) or b < 1 or b % p:
        raise ConfigurationError(f"bead count {b} must be a positive multiple of {p} and >= {len(lam)}")
    return AbacusDisplay(p, b, frozenset(lam.part(i) + b - 1 - i for i in range(b)))


def to_partition(a: AbacusDisplay) -> Partition:
    beta = sorted(a.positions, reverse=True)
    b = len(beta)
    return Partition(beta[i] - (b - 1 - i) for i in range(b))


def _beta_to_partition(levels: list[int]) -> Partition:
    levels = sorted(levels, reverse=True)
    n = len(levels)
    return Partition(levels[i] - (n - 1 - i) for i in range(n))


def _slide_up(a: AbacusDisplay) -> AbacusDisplay:
    positions = set()
    for i in range(a.p):
        count = sum(1 for x in a.positions if x % a.p == i)
        positions.update(i + a.p * k for k in range(count))
    return AbacusDisplay(a.p, a.beads, frozenset(positions))


def p_core(lam, p: int) -> Partition:
    """Slide every bead up its runner as far as it goes."""
    return to_partition(_slide_up(from_partition(lam, p)))


def p_weight(lam, p: int) -> int:
    lam = as_partition(lam)
    return (lam.size - p_core(lam, p).size) // p


def p_quotient(lam, p: int) -> tuple[Partition, ...]:
    a = from_partition(lam, p)
    return tuple(_beta_to_partition(a.runner(i)) for i in range(p))


def from_core_quotient(core, quotient, p: int) -> Partition:
    """Inverse of ``(p_core, p_quotient)`` in the multiple-of-p bead convention."""
    core = as_partition(core)
    quotient = [as_partition(q) for q in quotient]
    if len(quotient) != p:
        raise ConfigurationError(f"need {p} quotient components, got {len(quotient)}")
    b = default_beads(core, p) + p * max((len(q) for q in quotient), default=0)
    counts = from_partition(core, p, b).runner_counts()
    positions = set()
    for i, (n, q) in enumerate(zip(counts, quotient)):
        for k in range(n):
            level = q.part(k) + n - 1 - k
            positions.add(i + p * level)
    return to_partition(AbacusDisplay(p, b, frozenset(positions)))


def residue_content(lam, p: int) -> tuple[int, ...]:
    counts = [0] * p
    for node in nodes(lam):
        counts[residue(node, p)] += 1
    return tuple(counts)


def same_block(lam, mu, p: int) -> bool:
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise SizeMismatchError(f"block comparison needs equal sizes: {lam} vs {mu}")
    return p_core(lam, p) == p_core(mu, p)


def block_of(lam, p: int) -> BlockId:
    return BlockId(p, p_core(lam, p), p_weight(lam, p))


def is_rouquier(block: BlockId, b: int | None = None) -> bool:
    """Runner ``i`` holds at least ``w-1`` more beads than runner ``i-1``.

    Weight-0 blocks are simple and count as Rouquier unconditionally.
    """
    if block.weight == 0:
        return True
    counts = from_partition(block.core, block.p, b).runner_counts()
    return all(counts[i] - counts[i - 1] >= block.weight - 1 for i in range(1, block.p))


def max_rouquier_weight(core, p: int) -> int:
    """Largest weight at which ``core`` gives a Rouquier block."""
    counts = from_partition(core, p).runner_counts()
    gap = min(counts[i] - counts[i - 1] for i in range(1, p))
    return gap + 1 if gap >= 0 else 0


def block_members(block: BlockId) -> list[Partition]:
    """All partitions in the block, in reverse lexicographic order."""
    p, w = block.p, block.weight
    out = set()
    for sizes in product(range(w + 1), repeat=p):
        if sum(sizes) != w:
            continue
        for quotient in product(*(all_partitions(s) for s in sizes)):
            out.add(from_core_quotient(block.core, quotient, p))
    return sorted(out, reverse=True)


def rouquier_decompose(lam, p: int) -> RouquierDecomposition:
    """Split ``lam`` in a Rouquier block into its horizontal and vertical hook data."""
    check_modulus(p)
    if p < 3:
        raise PreconditionError("Rouquier decomposition needs p >= 3")
    lam = as_partition(lam)
    block = block_of(lam, p)
    if not is_rouquier(block):
        raise PreconditionError(f"{lam} does not lie in a Rouquier block for p={p}")
    quotient = p_quotient(lam, p)
    if any(quotient[1 : p - 1]):
        raise NotDecomposableError(f"{lam} has nonempty middle quotient components {quotient}")
    core = block.core
    mu = quotient[p - 1]
    tau = conjugate(quotient[0])
    lambda_tilde = conjugate(add_scaled(conjugate(core), tau, p))
    sigma = add_scaled(core, mu, p)
    dec = RouquierDecomposition(p, lam, core, block.weight, lambda_tilde, mu, tau, sigma)
    if not dec.identities_hold():
        raise InternalConsistencyError(f"decomposition identities fail for {lam}: {dec}")
    return dec
