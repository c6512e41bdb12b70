"""Integer partitions and the elementary combinatorics built on them.

Partitions are immutable tuples of weakly decreasing positive integers with
trailing zeros stripped, so structural equality is equality of partitions.
The text form is ``"6,1,1"``; the empty partition renders as ``"-"``.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError, ModulusError, PartitionError, SizeMismatchError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction; anything else that is not a
    partition raises :class:`PartitionError`.

    >>> Partition([6, 1, 1, 0])
    Partition(6,1,1)
    >>> str(Partition())
    '-'
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if not isinstance(x, int) or isinstance(x, bool):
                raise PartitionError(f"parts must be integers, got {x!r}")
            if x < 1:
                raise PartitionError(f"parts must be positive: {parts}")
            if i and x > parts[i - 1]:
                raise PartitionError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", "", "∅"):
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise PartitionError(f"cannot parse partition {text!r}") from None
        if parts and parts[-1] == 0:
            raise PartitionError(f"zero parts are not allowed in text form: {text!r}")
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part, 0-indexed, with zero padding."""
        return self[i] if i < len(self) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Partition({','.join(map(str, self))})"


class Node(NamedTuple):
    """A box ``(row, col)`` of a Young diagram, both 1-indexed."""

    row: int
    col: int


def check_modulus(p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise ModulusError(f"modulus must be an integer >= 2, got {p!r}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, int(n**0.5) + 1))


def check_prime(p: int, minimum: int = 2) -> None:
    if not isinstance(p, int) or p < minimum or not is_prime(p):
        raise ModulusError(f"need a prime >= {minimum}, got {p!r}")


def as_partition(x) -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.parse(x)
    return Partition(x)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first, *rest))


def conjugate(lam) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for x in lam if x > j) for j in range(lam[0]))


def dominates(lam, mu) -> bool:
    """``lam ⊵ mu``: every partial sum of ``lam`` is at least that of ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise SizeMismatchError(f"dominance compares equal sizes: {lam} vs {mu}")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam.part(i)
        b += mu.part(i)
        if a < b:
            return False
    return True


def is_p_regular(lam, p: int) -> bool:
    """No nonzero part repeats ``p`` or more times."""
    check_modulus(p)
    lam = as_partition(lam)
    return all(lam[i] != lam[i + p - 1] for i in range(len(lam) - p + 1))


def is_p_restricted(lam, p: int) -> bool:
    """Successive differences (with a trailing zero) are all below ``p``."""
    check_modulus(p)
    lam = as_partition(lam)
    return all(lam.part(i) - lam.part(i + 1) < p for i in range(len(lam)))


def add_scaled(tau, mu, p: int) -> Partition:
    """The partition with parts ``tau_i + p * mu_i``."""
    check_modulus(p)
    tau, mu = as_partition(tau), as_partition(mu)
    n = max(len(tau), len(mu))
    return Partition(tau.part(i) + p * mu.part(i) for i in range(n))


def p_adic_split(lam, p: int) -> tuple[Partition, Partition]:
    """Write ``lam = tau + p*mu`` with ``tau`` p-restricted.

    Built from the last part upward: each gap ``lam_i - lam_{i+1}`` splits as
    ``(gap mod p) + p*(gap div p)``.
    """
    check_modulus(p)
    lam = as_partition(lam)
    tau, mu = [], []
    t = m = 0
    for i in reversed(range(len(lam))):
        q, r = divmod(lam[i] - lam.part(i + 1), p)
        t += r
        m += q
        tau.append(t)
        mu.append(m)
    return Partition(reversed(tau)), Partition(reversed(mu))


def nodes(lam) -> list[Node]:
    lam = as_partition(lam)
    return [Node(i + 1, j + 1) for i, row in enumerate(lam) for j in range(row)]


def addable_nodes(lam) -> list[Node]:
    """Addable nodes, top row first."""
    lam = as_partition(lam)
    out = []
    for i in range(len(lam) + 1):
        if i == 0 or lam.part(i) < lam[i - 1]:
            out.append(Node(i + 1, lam.part(i) + 1))
    return out


def removable_nodes(lam) -> list[Node]:
    """Removable nodes, top row first."""
    lam = as_partition(lam)
    return [Node(i + 1, lam[i]) for i in range(len(lam)) if lam[i] > lam.part(i + 1)]


def residue(node: Node, p: int) -> int:
    check_modulus(p)
    return (node.col - node.row) % p


def hook_lengths(lam) -> list[list[int]]:
    lam = as_partition(lam)
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def count_standard_tableaux(lam) -> int:
    """Hook length formula."""
    lam = as_partition(lam)
    return factorial(lam.size) // prod(h for row in hook_lengths(lam) for h in row)


def _add_node(lam: Partition, node: Node) -> Partition:
    parts = list(lam)
    if node.row > len(parts):
        parts.append(0)
    parts[node.row - 1] += 1
    return Partition(parts)


def _remove_node(lam: Partition, node: Node) -> Partition:
    parts = list(lam)
    parts[node.row - 1] -= 1
    return Partition(parts)


def _signature(lam: Partition, i: int, p: int) -> list[tuple[str, Node]]:
    """Uncancelled i-signature for the p-regular crystal.

    Addable ('A') and removable ('R') i-nodes are read from the top row
    down; an 'A' immediately followed (after earlier cancellations) by an
    'R' cancels. What survives has the shape R...R A...A.
    """
    marked = [("A", n) for n in addable_nodes(lam) if residue(n, p) == i]
    marked += [("R", n) for n in removable_nodes(lam) if residue(n, p) == i]
    marked.sort(key=lambda t: t[1].row)
    stack: list[tuple[str, Node]] = []
    for item in marked:
        if item[0] == "R" and stack and stack[-1][0] == "A":
            stack.pop()
        else:
            stack.append(item)
    return stack


def good_removable(lam, i: int, p: int) -> Node | None:
    """The i-good removable node (lowest uncancelled removable), if any."""
    sig = _signature(as_partition(lam), i, p)
    rs = [n for kind, n in sig if kind == "R"]
    return rs[-1] if rs else None


def good_addable(lam, i: int, p: int) -> Node | None:
    """The i-good addable node (highest uncancelled addable), if any."""
    sig = _signature(as_partition(lam), i, p)
    adds = [n for kind, n in sig if kind == "A"]
    return adds[0] if adds else None


def crystal_path(lam, p: int) -> list[int]:
    """Residues ``i_1, ..., i_d`` with ``lam = f_{i_d} ... f_{i_1} ∅``.

    Found by repeatedly removing a good node; requires ``lam`` p-regular.
    """
    lam = as_partition(lam)
    path = []
    while lam:
        for i in range(p):
            node = good_removable(lam, i, p)
            if node is not None:
                break
        else:  # pragma: no cover - a nonempty p-regular partition has a good node
            raise DomainError(f"{lam} has no good node; is it {p}-regular?")
        path.append(i)
        lam = _remove_node(lam, node)
    path.reverse()
    return path


def mullineux(lam, p: int) -> Partition:
    """Mullineux conjugate ``M(lam)``, so that ``D^lam ⊗ sgn ≅ D^M(lam)``.

    Computed on the crystal graph of p-regular partitions: the good-node path
    from the empty partition is replayed with every residue negated.
    """
    check_prime(p)
    lam = as_partition(lam)
    if not is_p_regular(lam, p):
        raise DomainError(f"Mullineux map needs a {p}-regular partition, got {lam}")
    out = Partition()
    for i in crystal_path(lam, p):
        node = good_addable(out, (-i) % p, p)
        if node is None:  # pragma: no cover
            raise DomainError("crystal path could not be replayed")
        out = _add_node(out, node)
    return out


def restricted_mullineux(tau, p: int) -> Partition:
    """The restricted-side map ``m(tau) = M(tau')'`` (``D_tau ⊗ sgn ≅ D_m(tau)``)."""
    tau = as_partition(tau)
    if not is_p_restricted(tau, p):
        raise DomainError(f"{tau} is not {p}-restricted")
    return conjugate(mullineux(conjugate(tau), p))


@lru_cache(maxsize=None)
def _partition_list(n: int) -> tuple[Partition, ...]:
    return tuple(partitions_of(n))


def all_partitions(n: int) -> tuple[Partition, ...]:
    """Cached tuple of the partitions of ``n``."""
    return _partition_list(n)
