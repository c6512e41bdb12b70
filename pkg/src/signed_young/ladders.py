"""Ladders, James p-regularization and the ladder order on partitions."""

from __future__ import annotations

from .errors import InternalConsistencyError, SizeMismatchError
from .partitions import Node, Partition, as_partition, check_modulus, nodes


def ladder_index(node: Node, p: int) -> int:
    """The ``r`` with ``row + (p-1)*col = p - 1 + r``."""
    check_modulus(p)
    return node.row + (p - 1) * (node.col - 1)


def ladder_numbers(lam, p: int) -> tuple[int, ...]:
    """Node counts ``(l_1, l_2, ...)`` per ladder, trailing zeros stripped."""
    counts: dict[int, int] = {}
    for node in nodes(lam):
        r = ladder_index(node, p)
        counts[r] = counts.get(r, 0) + 1
    top = max(counts, default=0)
    return tuple(counts.get(r, 0) for r in range(1, top + 1))


def _ladder_cells_top_first(r: int, p: int) -> list[Node]:
    # col as large as possible means row as small as possible
    cells = []
    col = 1 + (r - 1) // (p - 1)
    while col >= 1:
        row = r - (p - 1) * (col - 1)
        if row >= 1:
            cells.append(Node(row, col))
        col -= 1
    return cells


def regularize(lam, p: int) -> Partition:
    """Slide every node as far up its ladder as it goes."""
    check_modulus(p)
    lam = as_partition(lam)
    rows: dict[int, set[int]] = {}
    for r, count in enumerate(ladder_numbers(lam, p), start=1):
        for node in _ladder_cells_top_first(r, p)[:count]:
            rows.setdefault(node.row, set()).add(node.col)
    parts = []
    for i in range(1, len(rows) + 1):
        cols = rows.get(i, set())
        if cols != set(range(1, len(cols) + 1)):
            raise InternalConsistencyError(f"regularization of {lam} is not a diagram")
        parts.append(len(cols))
    try:
        return Partition(parts)
    except ValueError:
        raise InternalConsistencyError(f"regularization of {lam} is not a partition") from None


def ladder_gt(mu, lam, p: int) -> bool:
    """``mu ≻ lam``: at the largest ladder where the counts differ, ``mu`` has more.

    Distinct partitions with equal ladder numbers are incomparable, so this
    returns False in both directions for them.
    """
    mu, lam = as_partition(mu), as_partition(lam)
    if mu.size != lam.size:
        raise SizeMismatchError(f"ladder order compares equal sizes: {mu} vs {lam}")
    a, b = ladder_numbers(mu, p), ladder_numbers(lam, p)
    n = max(len(a), len(b))
    a, b = a + (0,) * (n - len(a)), b + (0,) * (n - len(b))
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return x > y
    return False
