"""Exact spectrum of the k-point fixing graph F(n, k).

F(n, k) is the Cayley graph on S_n whose connection set is the permutations
fixing exactly ``k`` points. Each irreducible character ``lam`` of S_n gives
one eigenvalue with multiplicity ``(f^lam)^2``. Eigenvalues are computed from
hook products over excited diagrams; every intermediate quantity is an exact
``int`` or ``Fraction``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .excited import excited_hook_sum
from .partitions import (
    Partition,
    hook_product_full,
    hook_table,
    partitions_of,
    subpartitions_of_size,
)
from .tableaux import IntegralityError, f_skew, f_straight, require_integer


@dataclass(frozen=True)
class GraphParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.k <= self.n - 1:
            raise ValueError(f"k must lie in [0, n-1] = [0, {self.n - 1}], got {self.k}")


@dataclass(frozen=True)
class SpectrumEntry:
    lam: Partition
    eigenvalue: int
    multiplicity: int

    def to_json(self) -> dict:
        return {
            "partition": list(self.lam.parts),
            "eigenvalue": str(self.eigenvalue),
            "multiplicity": str(self.multiplicity),
        }


@lru_cache(maxsize=None)
def derangement_count(m: int) -> int:
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    a, b = 1, 0  # D_0, D_1
    if m == 0:
        return a
    for i in range(2, m + 1):
        a, b = b, (i - 1) * (a + b)
    return b


def s_nk_size(p: GraphParams) -> int:
    """Number of permutations of [n] fixing exactly k points; the degree of F(n, k)."""
    return comb(p.n, p.k) * derangement_count(p.n - p.k)


@lru_cache(maxsize=None)
def eta0(lam: Partition) -> int:
    """Eigenvalue of the derangement graph F(n, 0) indexed by ``lam``.

    Alternating sum over single-row shapes ``(t)`` of the excited hook sums
    of ``lam/(t)``.
    """
    n = lam.n
    total = 0
    for t in range(n + 1):
        row = Partition((t,) if t else ())
        term = excited_hook_sum(lam, row)
        total += -term if (n - t) % 2 else term
    return total


def eta0_renteln(lam: Partition) -> int:
    """F(n, 0) eigenvalue from skew SYT counts: sum_t (-1)^(n-t) n!/(n-t)! f^(lam/(t)) / f^lam."""
    n = lam.n
    acc = Fraction(0)
    for t in range(n + 1):
        row = Partition((t,) if t else ())
        term = Fraction(factorial(n) // factorial(n - t) * f_skew(lam, row), f_straight(lam))
        acc += -term if (n - t) % 2 else term
    return require_integer(acc, f"eta0_renteln({lam.parts})")


@lru_cache(maxsize=None)
def _normalized_eta0(mu: Partition) -> Fraction:
    return Fraction(eta0(mu), hook_product_full(mu))


def eta(lam: Partition, p: GraphParams) -> int:
    """Eigenvalue of F(n, k) indexed by ``lam``.

    Sum over ``mu`` of size n-k inside ``lam`` of
    ``eta0(mu) / H(mu) * excited_hook_sum(lam, mu)``, where ``H`` is the
    full hook product.
    """
    if lam.n != p.n:
        raise ValueError(f"|lambda|={lam.n} does not match n={p.n}")
    return _eta(lam, p.k)


@lru_cache(maxsize=None)
def _eta(lam: Partition, k: int) -> int:
    acc = Fraction(0)
    for mu in subpartitions_of_size(lam, lam.n - k):
        acc += _normalized_eta0(mu) * excited_hook_sum(lam, mu)
    return require_integer(acc, f"eta({lam.parts}, k={k})")


def spectrum(p: GraphParams, threads: int | None = None) -> list[SpectrumEntry]:
    """One entry per partition of n, in descending lexicographic order."""
    lams = partitions_of(p.n)

    def entry(lam: Partition) -> SpectrumEntry:
        return SpectrumEntry(lam, eta(lam, p), f_straight(lam) ** 2)

    if threads == 1:
        return [entry(lam) for lam in lams]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(entry, lams))


def spectrum_to_json(p: GraphParams, entries: list[SpectrumEntry]) -> dict:
    return {
        "n": p.n,
        "k": p.k,
        "degree": str(s_nk_size(p)),
        "entries": [e.to_json() for e in entries],
    }


def transposition_hook_sum(lam: Partition) -> int:
    """Sum of h(i,i) * h(j,j+1) over diagonal cells (i,i) and cells (j,j+1) with i <= j."""
    hooks = hook_table(lam)
    diag = [hooks[(i, i)] for i in range(1, len(lam) + 1) if (i, i) in hooks]
    upper = [hooks[(j, j + 1)] for j in range(1, len(lam) + 1) if (j, j + 1) in hooks]
    return sum(d * u for i, d in enumerate(diag) for u in upper[i:])


def eta_transposition(lam: Partition) -> int:
    """Eigenvalue of the transposition network T_n = F(n, n-2)."""
    n = lam.n
    if n < 2:
        raise ValueError(f"transposition network needs n >= 2, got {n}")
    return transposition_hook_sum(lam) - comb(n, 2)


def transposition_multiplicity(m: int, n: int) -> int:
    """Multiplicity of ``m`` as an eigenvalue of T_n; 0 if it is not one."""
    if n < 2:
        raise ValueError(f"transposition network needs n >= 2, got {n}")
    target = comb(n, 2) + m
    return sum(f_straight(lam) ** 2 for lam in partitions_of(n) if transposition_hook_sum(lam) == target)


def hook_partition(m: int, n: int) -> Partition:
    return Partition((m,) + (1,) * (n - m))


def eta_hook(m: int, p: GraphParams, check: bool = True) -> Fraction:
    """Closed form for the eigenvalue at the hook ``(m, 1^(n-m))``, ``1 <= m < n``.

    With ``check`` the value is also required to be integral and equal to
    :func:`eta` at the same shape.
    """
    n, k = p.n, p.k
    if not 1 <= m < n:
        raise ValueError(f"m must lie in [1, n-1] = [1, {n - 1}], got {m}")
    nk = n - k
    total = Fraction(0)
    for s in range(max(1, m - k), min(m, nk) + 1):
        inner = (-1) ** s * derangement_count(s) - Fraction(nk - s, nk)
        total += inner * comb(nk, s) * comb(k, m - s)
    value = (-1) ** nk * Fraction(comb(n, k), comb(n - 1, m - 1)) * total
    if check:
        require_integer(value, f"eta_hook(m={m}, n={n}, k={k})")
        expected = eta(hook_partition(m, n), p)
        if value != expected:
            raise IntegralityError(f"hook closed form {value} != eta {expected} at m={m}, {p}")
    return value


def m_k_bound(lam: Partition, k: int) -> int:
    """Largest ``|eta0(mu)|`` over ``mu`` of size n-k inside ``lam``."""
    if not 0 <= k <= lam.n:
        raise ValueError(f"k must lie in [0, {lam.n}], got {k}")
    return max(abs(eta0(mu)) for mu in subpartitions_of_size(lam, lam.n - k))


def binomial_identity_check(lam: Partition, k: int) -> bool:
    """Whether sum_mu excited_hook_sum(lam, mu) / H(mu) equals C(n, k)."""
    if not 0 <= k <= lam.n:
        raise ValueError(f"k must lie in [0, {lam.n}], got {k}")
    total = sum(
        (Fraction(excited_hook_sum(lam, mu), hook_product_full(mu)) for mu in subpartitions_of_size(lam, lam.n - k)),
        Fraction(0),
    )
    return total == comb(lam.n, k)


def _require_nondegenerate(p: GraphParams) -> None:
    if p.k > p.n - 2:
        raise ValueError(f"bound needs k <= n-2, got n={p.n}, k={p.k}")


def interval_check(p: GraphParams, entries: list[SpectrumEntry] | None = None) -> bool:
    """Whether every eigenvalue lies in [-|S(n,k)|/(n-k-1), |S(n,k)|]; integer comparisons only."""
    _require_nondegenerate(p)
    degree = s_nk_size(p)
    denom = p.n - p.k - 1
    entries = spectrum(p) if entries is None else entries
    return all(-degree <= e.eigenvalue * denom and e.eigenvalue <= degree for e in entries)


def least_eigenvalue_check(p: GraphParams, entries: list[SpectrumEntry] | None = None) -> bool:
    """For k = n-2 or n-4: whether min eigenvalue * (n-k-1) == -|S(n,k)|."""
    if p.k not in (p.n - 2, p.n - 4):
        raise ValueError(f"least eigenvalue result needs k = n-2 or n-4, got n={p.n}, k={p.k}")
    entries = spectrum(p) if entries is None else entries
    least = min(e.eigenvalue for e in entries)
    return least * (p.n - p.k - 1) == -s_nk_size(p)


def derangement_least_eigenvalue_check(n: int, entries: list[SpectrumEntry] | None = None) -> bool:
    """For F(n, 0), n >= 2: whether min eigenvalue * (n-1) == -D_n."""
    p = GraphParams(n, 0)
    _require_nondegenerate(p)
    entries = spectrum(p) if entries is None else entries
    return min(e.eigenvalue for e in entries) * (n - 1) == -derangement_count(n)
