"""Verification suites run by ``fixgraph verify``."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable, Iterable

from .oracle import DEFAULT_CONVOLUTION_CAP, convolution_moment, oracle_eta
from .partitions import Partition, partitions_of, remove_corners, subpartitions_of_size
from .spectra import (
    GraphParams,
    binomial_identity_check,
    derangement_least_eigenvalue_check,
    eta,
    eta0,
    eta0_renteln,
    eta_hook,
    eta_transposition,
    hook_partition,
    interval_check,
    least_eigenvalue_check,
    m_k_bound,
    s_nk_size,
    spectrum,
)
from .tableaux import enumerate_syt, f_skew, f_straight

SUITES = ("oracle", "moments", "identities", "bounds")
BRUTE_FORCE_SYT_MAX_N = 8
MOMENT_POWERS = (1, 2, 3)


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, label: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(label())

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.cases} cases"
        if self.failures:
            text += f", {len(self.failures)} failed (first: {self.failures[0]})"
        if self.note:
            text += f" [{self.note}]"
        return text


def _ks(n: int, k: int | None, upper: int) -> Iterable[int]:
    if k is None:
        return range(0, upper + 1)
    return [k] if 0 <= k <= upper else []


def check_oracle(n_max: int, k: int | None = None) -> list[CheckResult]:
    res = CheckResult("oracle-equivalence")
    for n in range(1, n_max + 1):
        for kk in _ks(n, k, n - 1):
            p = GraphParams(n, kk)
            for lam in partitions_of(n):
                a, b = eta(lam, p), oracle_eta(lam, n, kk)
                res.expect(a == b, lambda: f"n={n} k={kk} {lam.parts}: {a} != {b}")
    return [res]


def check_moments(n_max: int, k: int | None = None) -> list[CheckResult]:
    top = min(n_max, DEFAULT_CONVOLUTION_CAP)
    res = CheckResult("moments", note=f"n<={top}, powers {MOMENT_POWERS}")
    for n in range(1, top + 1):
        for kk in _ks(n, k, n - 1):
            entries = spectrum(GraphParams(n, kk))
            for power in MOMENT_POWERS:
                lhs = sum(e.multiplicity * e.eigenvalue**power for e in entries)
                rhs = factorial(n) * convolution_moment(n, kk, power)
                res.expect(lhs == rhs, lambda: f"n={n} k={kk} p={power}: {lhs} != {rhs}")
    return [res]


def check_identities(n_max: int, k: int | None = None) -> list[CheckResult]:
    binom = CheckResult("binomial-identity")
    renteln = CheckResult("eta0-agreement")
    branching = CheckResult("branching-rule")
    restriction = CheckResult("restriction-rule")
    naruse = CheckResult("naruse-vs-bruteforce", note=f"|lambda|<={min(n_max, BRUTE_FORCE_SYT_MAX_N)}")
    transposition = CheckResult("transposition-closed-form")
    hook = CheckResult("hook-closed-form")
    sums = CheckResult("spectral-sums")

    for n in range(0, n_max + 1):
        for lam in partitions_of(n):
            for kk in _ks(n, k, n):
                binom.expect(binomial_identity_check(lam, kk), lambda: f"{lam.parts} k={kk}")
            if n >= 1:
                e0 = eta0(lam)
                r = eta0_renteln(lam)
                e = eta(lam, GraphParams(n, 0))
                renteln.expect(e0 == r == e, lambda: f"{lam.parts}: {e0}, {r}, {e}")
                total = sum(f_straight(child) for child in remove_corners(lam))
                branching.expect(total == f_straight(lam), lambda: f"{lam.parts}")
            for m in range(n + 1):
                total = sum(f_skew(lam, mu) * f_straight(mu) for mu in subpartitions_of_size(lam, m))
                restriction.expect(total == f_straight(lam), lambda: f"{lam.parts} m={m}")
            if n <= BRUTE_FORCE_SYT_MAX_N:
                for m in range(n + 1):
                    for mu in subpartitions_of_size(lam, m):
                        a, b = f_skew(lam, mu), len(enumerate_syt(lam, mu))
                        naruse.expect(a == b, lambda: f"{lam.parts}/{mu.parts}: {a} != {b}")
            if n >= 2 and k in (None, n - 2):
                a, b = eta_transposition(lam), eta(lam, GraphParams(n, n - 2))
                transposition.expect(a == b, lambda: f"{lam.parts}: {a} != {b}")
        for kk in _ks(n, k, n - 1):
            if n < 1:
                continue
            p = GraphParams(n, kk)
            for m in range(1, n):
                try:
                    eta_hook(m, p)
                    ok = True
                except ArithmeticError:
                    ok = False
                hook.expect(ok, lambda: f"m={m} n={n} k={kk}")
            entries = spectrum(p)
            mult = sum(e.multiplicity for e in entries)
            trace = sum(e.multiplicity * e.eigenvalue for e in entries)
            sums.expect(mult == factorial(n) and trace == 0, lambda: f"n={n} k={kk}: {mult}, {trace}")
            if kk == n - 1:
                sums.expect(all(e.eigenvalue == 0 for e in entries), lambda: f"n={n} k={kk} not all zero")
    return [binom, renteln, branching, restriction, naruse, transposition, hook, sums]


def check_bounds(n_max: int, k: int | None = None) -> list[CheckResult]:
    interval = CheckResult("interval-bound")
    least = CheckResult("least-eigenvalue")
    derangement = CheckResult("derangement-least-eigenvalue")
    mk = CheckResult("mk-bound")
    top = CheckResult("trivial-character")
    sign = CheckResult("sign-character-magnitude")
    for n in range(1, n_max + 1):
        for kk in _ks(n, k, n - 1):
            p = GraphParams(n, kk)
            entries = spectrum(p)
            by_lam = {e.lam: e.eigenvalue for e in entries}
            degree = s_nk_size(p)
            top.expect(by_lam[Partition((n,))] == degree, lambda: f"n={n} k={kk}")
            sgn = by_lam[hook_partition(1, n)] if n > 1 else by_lam[Partition((1,))]
            sign.expect(abs(sgn) == (n - kk - 1) * comb(n, kk), lambda: f"n={n} k={kk}: {sgn}")
            for e in entries:
                bound = comb(n, kk) * m_k_bound(e.lam, kk)
                mk.expect(abs(e.eigenvalue) <= bound, lambda: f"{e.lam.parts} k={kk}: {e.eigenvalue} > {bound}")
            if kk <= n - 2:
                interval.expect(interval_check(p, entries), lambda: f"n={n} k={kk}")
            if kk in (n - 2, n - 4):
                least.expect(least_eigenvalue_check(p, entries), lambda: f"n={n} k={kk}")
            if kk == 0 and n >= 2:
                derangement.expect(derangement_least_eigenvalue_check(n, entries), lambda: f"n={n}")
    return [interval, least, derangement, mk, top, sign]


_RUNNERS = {
    "oracle": check_oracle,
    "moments": check_moments,
    "identities": check_identities,
    "bounds": check_bounds,
}


def run_checks(n_max: int, k: int | None = None, suites: Iterable[str] = SUITES) -> list[CheckResult]:
    results: list[CheckResult] = []
    for name in suites:
        results.extend(_RUNNERS[name](n_max, k))
    return results
