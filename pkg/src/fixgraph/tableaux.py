"""Counting standard Young tableaux of straight and skew shape."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .excited import excited_hook_sum
from .partitions import Partition, contains, hook_product_full

DEFAULT_SYT_CAP = 12


class IntegralityError(ArithmeticError):
    """An exact computation that must be integral was not; always a bug."""


class CapExceededError(ValueError):
    pass


def require_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise IntegralityError(f"{what} is not an integer: {value}")
    return value.numerator


@lru_cache(maxsize=None)
def f_straight(lam: Partition) -> int:
    """Number of SYT of shape ``lam`` (hook length formula)."""
    q, r = divmod(factorial(lam.n), hook_product_full(lam))
    if r:
        raise IntegralityError(f"hook length formula not integral for {lam.parts}")
    return q


@lru_cache(maxsize=None)
def f_skew(lam: Partition, mu: Partition) -> int:
    """Number of SYT of shape ``lam/mu`` via excited diagrams; 0 if ``mu`` is not inside ``lam``.

    Evaluated as ``|lam/mu|! * sum_D prod_{u in D} h(u) / prod_{u in lam} h(u)``.
    """
    if not contains(lam, mu):
        return 0
    value = Fraction(factorial(lam.n - mu.n) * excited_hook_sum(lam, mu), hook_product_full(lam))
    return require_integer(value, f"f^({lam.parts}/{mu.parts})")


def enumerate_syt(lam: Partition, mu: Partition = Partition(), cap: int = DEFAULT_SYT_CAP):
    """All standard fillings of ``lam/mu``, as dicts from cell to entry.

    Brute force backtracking: entry ``v`` goes into any cell whose left and
    upper neighbours (within the skew shape) are already filled.
    """
    if not contains(lam, mu):
        raise ValueError(f"{mu.parts} is not contained in {lam.parts}")
    size = lam.n - mu.n
    if size > cap:
        raise CapExceededError(f"skew shape has {size} cells, cap is {cap}")

    # filled[i] = rightmost column occupied in row i (mu counts as occupied)
    filled = [mu.part(i) for i in range(1, len(lam) + 1)]
    current: dict[tuple[int, int], int] = {}
    out: list[dict[tuple[int, int], int]] = []

    def place(v: int) -> None:
        if v > size:
            out.append(dict(current))
            return
        for r in range(len(lam)):
            c = filled[r]
            if c >= lam[r]:
                continue
            if r > 0 and filled[r - 1] < c + 1:
                continue
            filled[r] += 1
            current[(r + 1, c + 1)] = v
            place(v + 1)
            del current[(r + 1, c + 1)]
            filled[r] -= 1

    place(1)
    return out
