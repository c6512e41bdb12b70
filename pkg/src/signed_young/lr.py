"""Littlewood-Richardson coefficients and Specht-filtration shadows of inductions.

A :class:`FiltrationMultiset` records which Specht modules appear in a
Specht filtration and how often. Inducing ``S^rho ⊠ sgn`` from
``Σ_n × Σ_m`` gives the multiset ``{eps : c(eps; rho, 1^m)}`` (column Pieri),
and cutting down to a block keeps the entries with the right p-core.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .abacus import BlockId, RouquierDecomposition, from_partition, is_rouquier, p_core, p_quotient, p_weight
from .errors import InternalConsistencyError, PreconditionError, SizeMismatchError
from .ladders import ladder_gt, regularize
from .partitions import Partition, as_partition, conjugate, dominates


@dataclass(frozen=True)
class FiltrationMultiset:
    degree: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, mult in self.entries.items():
            lam = as_partition(lam)
            if lam.size != self.degree:
                raise SizeMismatchError(f"{lam} does not have size {self.degree}")
            if mult < 0:
                raise ValueError("multiplicities must be non-negative")
            if mult:
                clean[lam] = clean.get(lam, 0) + mult
        object.__setattr__(self, "entries", dict(sorted(clean.items(), reverse=True)))

    def __getitem__(self, lam) -> int:
        return self.entries.get(as_partition(lam), 0)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def keys(self) -> set[Partition]:
        return set(self.entries)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "entries": [{"partition": str(lam), "mult": m} for lam, m in self.entries.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiltrationMultiset":
        entries = {Partition.parse(e["partition"]): int(e["mult"]) for e in data["entries"]}
        return cls(int(data["degree"]), entries)


def lr_coefficient(eps, rho, nu) -> int:
    """Count LR tableaux of shape ``eps/rho`` and content ``nu``.

    Cells are filled row by row from the top, right to left inside a row,
    so the filling order is the reverse reading word and the lattice
    condition can be checked as each entry is placed.
    """
    eps, rho, nu = as_partition(eps), as_partition(rho), as_partition(nu)
    if eps.size != rho.size + nu.size:
        raise SizeMismatchError(f"|{eps}| != |{rho}| + |{nu}|")
    if len(rho) > len(eps) or any(rho[i] > eps[i] for i in range(len(rho))):
        return 0
    cells = [(i, j) for i in range(len(eps)) for j in range(eps[i] - 1, rho.part(i) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    used = [0] * (len(nu) + 1)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        total = 0
        hi = filling.get((i, j + 1), len(nu))  # weakly increasing along the row
        lo = filling.get((i - 1, j), 0) + 1  # strictly increasing down columns
        for x in range(lo, hi + 1):
            if used[x] >= nu[x - 1]:
                continue
            if x > 1 and used[x] + 1 > used[x - 1]:
                continue
            filling[i, j] = x
            used[x] += 1
            total += place(k + 1)
            used[x] -= 1
            del filling[i, j]
        return total

    return place(0)


def column_pieri(rho, m: int) -> list[Partition]:
    """All ``eps ⊇ rho`` with ``eps/rho`` a vertical strip of ``m`` boxes."""
    rho = as_partition(rho)
    rows = len(rho) + m
    out = []

    def extend(i: int, left: int, parts: list[int]):
        if i == rows:
            if left == 0:
                out.append(Partition(parts))
            return
        if rows - i < left:
            return
        base = rho.part(i)
        for add in (1, 0):
            x = base + add
            if add > left or (i and x > parts[-1]):
                continue
            extend(i + 1, left - add, parts + [x])

    extend(0, m, [])
    return sorted(out, reverse=True)


def block_truncate(f: FiltrationMultiset, block: BlockId) -> FiltrationMultiset:
    """Keep the entries lying in ``block`` (same p-core)."""
    if f.entries and f.degree != block.degree:
        raise SizeMismatchError(f"filtration degree {f.degree} != block degree {block.degree}")
    kept = {lam: m for lam, m in f.entries.items() if p_core(lam, block.p) == block.core}
    return FiltrationMultiset(f.degree, kept)


def _check_induction_block(rho: Partition, c: int, block: BlockId) -> None:
    if p_core(rho, block.p) != block.core:
        raise PreconditionError(f"{rho} does not have {block.p}-core {block.core}")
    if block.weight != p_weight(rho, block.p) + c:
        raise PreconditionError(f"block weight {block.weight} != weight({rho}) + {c}")
    if not is_rouquier(block):
        raise PreconditionError(f"core {block.core} is not Rouquier at weight {block.weight}")


def vertical_hook_inductions(rho, c: int, block: BlockId) -> FiltrationMultiset:
    """Block component of ``Ind(S^rho ⊠ sgn_{pc})`` as a filtration multiset."""
    rho = as_partition(rho)
    _check_induction_block(rho, c, block)
    entries = {eps: 1 for eps in column_pieri(rho, block.p * c)}
    return block_truncate(FiltrationMultiset(rho.size + block.p * c, entries), block)


def first_column_induction(rho, c: int, block: BlockId) -> Partition:
    """For ``rho = core + p*mu``, the single Specht label after inducing by ``sgn_{pc}``."""
    rho = as_partition(rho)
    p = block.p
    quotient = p_quotient(rho, p)
    if any(quotient[: p - 1]):
        raise PreconditionError(f"{rho} is not of the form core + p*mu (quotient {quotient})")
    eps = conjugate(Partition((conjugate(rho).part(0) + p * c, *conjugate(rho)[1:])))
    got = vertical_hook_inductions(rho, c, block)
    if got.keys() != {eps} or got[eps] != 1:
        raise InternalConsistencyError(f"expected only {eps} from {rho}, got {got.entries}")
    return eps


def abacus_agrees_off_runner_zero(eps, rho, p: int) -> bool:
    """Both displays, at a common bead count, coincide on runners 1..p-1."""
    eps, rho = as_partition(eps), as_partition(rho)
    b = max(from_partition(eps, p).beads, from_partition(rho, p).beads)
    a1, a2 = from_partition(eps, p, b), from_partition(rho, p, b)
    return all(a1.runner(i) == a2.runner(i) for i in range(1, p))


def pipeline_filtration(dec: RouquierDecomposition) -> FiltrationMultiset:
    """Induce-and-truncate from ``S^sigma`` by ``sgn_{p*tau_1}``, ``sgn_{p*tau_2}``, ...

    Checks that ``lam`` comes out exactly once and every other label is
    strictly dominated by ``lam`` and has a strictly higher regularization.
    """
    if not dec.identities_hold():
        raise PreconditionError(f"invalid Rouquier decomposition: {dec}")
    p = dec.p
    current = Counter({dec.sigma: 1})
    degree = dec.sigma.size
    weight = dec.mu.size
    for part in dec.tau:
        weight += part
        degree += p * part
        block = BlockId(p, dec.core, weight)
        nxt: Counter = Counter()
        for rho, mult in current.items():
            for eps, m in vertical_hook_inductions(rho, part, block).entries.items():
                nxt[eps] += mult * m
        current = nxt
    result = FiltrationMultiset(degree, dict(current))
    lam = dec.lam
    if result[lam] != 1:
        raise InternalConsistencyError(f"{lam} occurs {result[lam]} times in {result.entries}")
    lam_reg = regularize(lam, p)
    for eps in result:
        if eps == lam:
            continue
        if not (ladder_gt(regularize(eps, p), lam_reg, p) and dominates(lam, eps)):
            raise InternalConsistencyError(f"filtration label {eps} violates the ordering against {lam}")
    return result
