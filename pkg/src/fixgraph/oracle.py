"""Independent checks on the spectrum of F(n, k).

Two routes that share nothing with the excited-diagram formula:

* character sums over conjugacy classes, with irreducible characters from the
  Murnaghan-Nakayama rule;
* closed-walk counts from convolving the indicator of the connection set
  over the group, with no character theory at all.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Sequence

from .partitions import Partition, partitions_of
from .tableaux import CapExceededError, f_straight

DEFAULT_CONVOLUTION_CAP = 6
MAX_MOMENT_POWER = 4


@dataclass(frozen=True)
class CycleType:
    partition: Partition
    fixed_points: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "fixed_points", sum(1 for p in self.partition if p == 1))

    @property
    def n(self) -> int:
        return self.partition.n


def cycle_types(n: int, fixed_points: int | None = None) -> list[CycleType]:
    types = [CycleType(p) for p in partitions_of(n)]
    if fixed_points is None:
        return types
    return [t for t in types if t.fixed_points == fixed_points]


def _beta_set(parts: tuple[int, ...]) -> tuple[int, ...]:
    L = len(parts)
    return tuple(p + L - 1 - i for i, p in enumerate(parts))


def _from_beta(beads: Sequence[int]) -> tuple[int, ...]:
    beads = sorted(beads, reverse=True)
    L = len(beads)
    return tuple(p for p in (b - (L - 1 - i) for i, b in enumerate(beads)) if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not shape else 0
    r = rho[0]
    rest = rho[1:]
    beads = _beta_set(shape)
    occupied = set(beads)
    total = 0
    # a border strip of length r <-> moving one bead down r positions
    for x in beads:
        y = x - r
        if y < 0 or y in occupied:
            continue
        height = sum(1 for b in beads if y < b < x)
        new_shape = _from_beta([b for b in beads if b != x] + [y])
        value = _mn(new_shape, rest)
        total += -value if height % 2 else value
    return total


def mn_character(lam: Partition, beta: CycleType | Partition) -> int:
    """Irreducible character of S_n indexed by ``lam`` on the class ``beta``."""
    rho = beta.partition if isinstance(beta, CycleType) else beta
    if lam.n != rho.n:
        raise ValueError(f"size mismatch: |lambda|={lam.n}, |beta|={rho.n}")
    return _mn(lam.parts, rho.parts)


def class_size(beta: CycleType | Partition) -> int:
    """Number of permutations with cycle type ``beta``."""
    rho = beta.partition if isinstance(beta, CycleType) else beta
    z = 1
    for part, mult in Counter(rho).items():
        z *= part**mult * factorial(mult)
    return factorial(rho.n) // z


def oracle_eta(lam: Partition, n: int, k: int) -> int:
    """Eigenvalue of F(n, k) on the isotypic component of ``lam``, via character sums."""
    if lam.n != n:
        raise ValueError(f"|lambda|={lam.n} does not match n={n}")
    total = sum(class_size(t) * mn_character(lam, t) for t in cycle_types(n, k))
    q, r = divmod(total, f_straight(lam))
    if r:
        raise ArithmeticError(f"character sum {total} not divisible by f^{lam.parts}")
    return q


def fixed_point_count(sigma: Sequence[int]) -> int:
    """Fixed points of a permutation given as a 0-based image sequence."""
    n = len(sigma)
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"not a permutation of range({n}): {tuple(sigma)}")
    return sum(1 for i, s in enumerate(sigma) if i == s)


@lru_cache(maxsize=None)
def _group(n: int):
    elements = list(permutations(range(n)))
    index = {g: i for i, g in enumerate(elements)}
    return elements, index


def connection_set_size_bruteforce(n: int, k: int) -> int:
    elements, _ = _group(n)
    return sum(1 for g in elements if fixed_point_count(g) == k)


def convolution_moment(n: int, k: int, power: int, cap: int = DEFAULT_CONVOLUTION_CAP) -> int:
    """Closed walks of length ``power`` at one vertex of F(n, k).

    Counts tuples ``(s_1, ..., s_power)`` of permutations fixing exactly ``k``
    points whose product is the identity, by convolving the indicator of that
    set with itself in the group algebra of S_n.
    """
    if n > cap:
        raise CapExceededError(f"n={n} exceeds convolution cap {cap}")
    if not 1 <= power <= MAX_MOMENT_POWER:
        raise ValueError(f"power must lie in [1, {MAX_MOMENT_POWER}], got {power}")
    elements, index = _group(n)
    gens = [g for g in elements if fixed_point_count(g) == k]
    weights = [0] * len(elements)
    for g in gens:
        weights[index[g]] += 1
    for _ in range(power - 1):
        nxt = [0] * len(elements)
        for i, w in enumerate(weights):
            if not w:
                continue
            x = elements[i]
            for s in gens:
                nxt[index[tuple(s[x[j]] for j in range(n))]] += w
        weights = nxt
    return weights[index[tuple(range(n))]]
