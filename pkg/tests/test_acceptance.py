"""Exit criteria. Each test records one PASS/FAIL line, printed in the terminal summary."""

import os
import subprocess
import sys
from math import comb, factorial

from fixgraph.excited import enumerate_excited
from fixgraph.oracle import convolution_moment, oracle_eta
from fixgraph.partitions import Diagram, Partition, partitions_of, remove_corners, subpartitions_of_size
from fixgraph.spectra import (
    GraphParams,
    binomial_identity_check,
    eta,
    eta0,
    eta0_renteln,
    eta_hook,
    eta_transposition,
    hook_partition,
    s_nk_size,
    spectrum,
    transposition_multiplicity,
)
from fixgraph.tableaux import enumerate_syt, f_skew, f_straight

REPORT: list[str] = []


def record(number, title, failures, cases):
    status = "PASS" if not failures else "FAIL"
    line = f"{status} criterion {number:>2}: {title} ({cases} cases"
    line += f", {len(failures)} failed: {failures[:3]})" if failures else ")"
    REPORT.append(line)
    print(line)
    assert not failures, line


def all_params(n_lo, n_hi, k_hi=lambda n: n - 1):
    for n in range(n_lo, n_hi + 1):
        for k in range(0, k_hi(n) + 1):
            yield GraphParams(n, k)


def test_01_oracle_equivalence():
    failures, cases = [], 0
    for p in all_params(1, 7):
        for lam in partitions_of(p.n):
            cases += 1
            a, b = eta(lam, p), oracle_eta(lam, p.n, p.k)
            if a != b:
                failures.append((p, lam.parts, a, b))
    record(1, "excited-diagram eigenvalues equal character sums, n<=7", failures, cases)


def test_02_worked_example():
    found = set(enumerate_excited(Partition((2, 2, 2, 1)), Partition((1, 1))))
    expected = {Diagram([(1, 1), (2, 1)]), Diagram([(1, 1), (3, 2)]), Diagram([(2, 2), (3, 2)])}
    failures = [] if found == expected else [sorted(found)]
    record(2, "excited diagrams of (2^3,1)/(1^2)", failures, 1)


def test_03_naruse_vs_bruteforce():
    failures, cases = [], 0
    for n in range(9):
        for lam in partitions_of(n):
            for m in range(n + 1):
                for mu in subpartitions_of_size(lam, m):
                    cases += 1
                    a, b = f_skew(lam, mu), len(enumerate_syt(lam, mu))
                    if a != b:
                        failures.append((lam.parts, mu.parts, a, b))
    record(3, "skew SYT count from excited diagrams equals enumeration, |lambda|<=8", failures, cases)


def test_04_hook_length_vs_bruteforce():
    failures, cases = [], 0
    for n in range(8):
        for lam in partitions_of(n):
            cases += 1
            if f_straight(lam) != len(enumerate_syt(lam)):
                failures.append(lam.parts)
    record(4, "hook length formula equals enumeration, |lambda|<=7", failures, cases)


def test_05_transposition_network():
    failures, cases = [], 0
    for n in range(2, 9):
        for lam in partitions_of(n):
            cases += 1
            a, b = eta_transposition(lam), eta(lam, GraphParams(n, n - 2))
            if a != b:
                failures.append((lam.parts, a, b))
    for n in range(2, 7):
        agg = {}
        for e in spectrum(GraphParams(n, n - 2)):
            agg[e.eigenvalue] = agg.get(e.eigenvalue, 0) + e.multiplicity
        for m, mult in agg.items():
            cases += 1
            got = transposition_multiplicity(m, n)
            if got != mult:
                failures.append((n, m, got, mult))
    record(5, "transposition closed form and multiplicities", failures, cases)


def test_06_interval():
    failures, cases = [], 0
    for p in all_params(2, 7, lambda n: n - 2):
        degree, denom = s_nk_size(p), p.n - p.k - 1
        for e in spectrum(p):
            cases += 1
            if not (-degree <= e.eigenvalue * denom and e.eigenvalue <= degree):
                failures.append((p, e.lam.parts, e.eigenvalue))
    record(6, "eigenvalues within [-|S|/(n-k-1), |S|], n<=7", failures, cases)


def test_07_least_eigenvalue():
    failures, cases = [], 0
    params = [GraphParams(n, n - 2) for n in range(4, 9)] + [GraphParams(n, n - 4) for n in range(5, 9)]
    for p in params:
        cases += 1
        least = min(e.eigenvalue for e in spectrum(p))
        if least * (p.n - p.k - 1) != -s_nk_size(p):
            failures.append((p, least))
    record(7, "least eigenvalue for k=n-2 and k=n-4", failures, cases)


def test_08_hook_shapes():
    failures, cases = [], 0
    for p in all_params(2, 9):
        for m in range(1, p.n):
            cases += 1
            a, b = eta_hook(m, p, check=False), eta(hook_partition(m, p.n), p)
            if a != b:
                failures.append((p, m, a, b))
    for p in all_params(1, 9):
        cases += 1
        value = eta(Partition((1,) * p.n), p)
        if abs(value) != (p.n - p.k - 1) * comb(p.n, p.k):
            failures.append((p, "sign magnitude", value))
    record(8, "hook closed form, n<=9; |eta(1^n)| = (n-k-1)C(n,k)", failures, cases)


def test_09_binomial_identity():
    failures, cases = [], 0
    for n in range(9):
        for lam in partitions_of(n):
            for k in range(n + 1):
                cases += 1
                if not binomial_identity_check(lam, k):
                    failures.append((lam.parts, k))
    record(9, "excited hook sums reproduce C(n,k), n<=8", failures, cases)


def test_10_derangement_formulas():
    failures, cases = [], 0
    for n in range(1, 9):
        for lam in partitions_of(n):
            cases += 1
            if eta0_renteln(lam) != eta0(lam):
                failures.append(lam.parts)
    record(10, "F(n,0) eigenvalues via skew SYT counts and via excited diagrams agree, n<=8", failures, cases)


def test_11_representation_identities():
    failures, cases = [], 0
    for n in range(1, 11):
        for lam in partitions_of(n):
            cases += 1
            if f_straight(lam) != sum(f_straight(c) for c in remove_corners(lam)):
                failures.append(("branching", lam.parts))
    for n in range(10):
        for lam in partitions_of(n):
            for m in range(n + 1):
                cases += 1
                total = sum(f_skew(lam, mu) * f_straight(mu) for mu in subpartitions_of_size(lam, m))
                if total != f_straight(lam):
                    failures.append(("restriction", lam.parts, m))
    record(11, "branching (|lambda|<=10) and restriction (|lambda|<=9)", failures, cases)


def test_12_moments():
    failures, cases = [], 0
    for p in all_params(1, 6):
        entries = spectrum(p)
        for power in (1, 2, 3):
            cases += 1
            lhs = sum(e.multiplicity * e.eigenvalue**power for e in entries)
            rhs = factorial(p.n) * convolution_moment(p.n, p.k, power)
            if lhs != rhs:
                failures.append((p, power, lhs, rhs))
    record(12, "spectral moments equal closed-walk counts, n<=6", failures, cases)


def test_13_global_sums():
    failures, cases = [], 0
    for p in all_params(1, 8):
        cases += 1
        entries = spectrum(p)
        if sum(e.multiplicity for e in entries) != factorial(p.n):
            failures.append((p, "multiplicities"))
        if sum(e.multiplicity * e.eigenvalue for e in entries) != 0:
            failures.append((p, "trace"))
        if p.k == p.n - 1 and any(e.eigenvalue for e in entries):
            failures.append((p, "nonzero"))
    record(13, "sum of multiplicities = n!, trace = 0, F(n,n-1) is empty", failures, cases)


def _spectrum_bytes(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "fixgraph", "spectrum", *args], capture_output=True, check=True
    )
    return proc.stdout


def test_14_determinism():
    failures, cases = [], 0
    for n, k in [(6, 0), (7, 2), (8, 1)]:
        for fmt in ([], ["--json"], ["--csv"]):
            cases += 1
            args = [str(n), str(k), *fmt]
            outputs = {
                _spectrum_bytes(*args, "--threads", "1"),
                _spectrum_bytes(*args, "--threads", "max"),
                _spectrum_bytes(*args, "--threads", "max"),
                _spectrum_bytes(*args, "--threads", "4"),
                _spectrum_bytes(*args),
            }
            if len(outputs) != 1:
                failures.append((n, k, fmt))
    record(14, f"spectrum output identical across runs and thread counts (cpus={os.cpu_count()})", failures, cases)
