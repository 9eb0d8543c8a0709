"""Excited diagrams of a skew shape and hook products over them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    Cell,
    CellOutsideDiagramError,
    Diagram,
    Partition,
    contains,
    hook_table,
    in_diagram,
)


class InactiveCellError(ValueError):
    pass


@dataclass(frozen=True)
class ExcitedDiagramSet:
    lam: Partition
    mu: Partition
    diagrams: tuple[Diagram, ...]

    def __len__(self) -> int:
        return len(self.diagrams)

    def __iter__(self):
        return iter(self.diagrams)


def _move_target(cells: frozenset, lam: Partition, u: tuple[int, int]):
    """Cell that ``u`` would move to, or None if ``u`` is not active."""
    i, j = u
    for v in ((i + 1, j), (i, j + 1), (i + 1, j + 1)):
        if not in_diagram(lam, v) or v in cells:
            return None
    return (i + 1, j + 1)


def is_active(D: Diagram, u: tuple[int, int], lam: Partition) -> bool:
    if u not in D:
        raise ValueError(f"cell {tuple(u)} is not in the diagram")
    for c in D:
        if not in_diagram(lam, c):
            raise CellOutsideDiagramError(f"cell {tuple(c)} is not in {lam.parts}")
    return _move_target(D.as_set(), lam, u) is not None


def apply_move(D: Diagram, u: tuple[int, int], lam: Partition) -> Diagram:
    """Replace the active cell ``u = (i, j)`` by ``(i+1, j+1)``."""
    if not is_active(D, u, lam):
        raise InactiveCellError(f"cell {tuple(u)} is not active in {D!r}")
    i, j = u
    return Diagram((D.as_set() - {Cell(i, j)}) | {Cell(i + 1, j + 1)})


def _neighbours(cells: frozenset, lam: Partition):
    for u in cells:
        target = _move_target(cells, lam, u)
        if target is not None:
            yield (cells - {u}) | {target}


def _closure_bfs(lam: Partition, mu: Partition) -> set[frozenset]:
    start = frozenset((i, j) for i, row in enumerate(mu, 1) for j in range(1, row + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in _neighbours(queue.popleft(), lam):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def _closure_dfs(lam: Partition, mu: Partition) -> set[frozenset]:
    start = frozenset((i, j) for i, row in enumerate(mu, 1) for j in range(1, row + 1))
    seen = {start}
    stack = [start]
    while stack:
        for nxt in _neighbours(stack.pop(), lam):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


@lru_cache(maxsize=None)
def _excited_cached(lam: Partition, mu: Partition) -> tuple[Diagram, ...]:
    if not contains(lam, mu):
        return ()
    return tuple(sorted(Diagram(s) for s in _closure_bfs(lam, mu)))


def enumerate_excited(lam: Partition, mu: Partition, method: str = "bfs") -> ExcitedDiagramSet:
    """All diagrams reachable from ``[mu]`` by excited moves inside ``[lam]``.

    Empty when ``mu`` is not contained in ``lam``. ``method="dfs"`` runs an
    uncached depth-first closure; it exists to check order independence.
    """
    if method == "bfs":
        return ExcitedDiagramSet(lam, mu, _excited_cached(lam, mu))
    if method == "dfs":
        if not contains(lam, mu):
            return ExcitedDiagramSet(lam, mu, ())
        found = tuple(sorted(Diagram(s) for s in _closure_dfs(lam, mu)))
        return ExcitedDiagramSet(lam, mu, found)
    raise ValueError(f"unknown method {method!r}")


def hook_product(D, lam: Partition) -> int:
    """Product of ``h_lam(u)`` over the cells of ``D``; 1 for the empty diagram."""
    hooks = hook_table(lam)
    prod = 1
    for u in D:
        try:
            prod *= hooks[u]
        except KeyError:
            raise CellOutsideDiagramError(f"cell {tuple(u)} is not in {lam.parts}") from None
    return prod


@lru_cache(maxsize=None)
def excited_hook_sum(lam: Partition, mu: Partition) -> int:
    """Sum over ``E`` in the excited diagrams of ``lam/mu`` of the hook product of ``E``."""
    return sum(hook_product(D, lam) for D in _excited_cached(lam, mu))


__all__ = [
    "ExcitedDiagramSet",
    "InactiveCellError",
    "apply_move",
    "enumerate_excited",
    "excited_hook_sum",
    "hook_product",
    "is_active",
]
