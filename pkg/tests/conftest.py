from itertools import permutations

import pytest
from hypothesis import strategies as st

from fixgraph.partitions import Partition, partitions_of


@st.composite
def partitions(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(st.sampled_from(partitions_of(n)))


@st.composite
def nested_pairs(draw, max_n=8):
    """(lam, mu) with mu inside lam."""
    lam = draw(partitions(max_n=max_n))
    mu = []
    for i, row in enumerate(lam):
        cap = row if i == 0 else min(row, mu[-1] if mu else 0)
        width = draw(st.integers(min_value=0, max_value=cap))
        if width == 0:
            break
        mu.append(width)
    return lam, Partition(mu)


def perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            sign *= (-1) ** (length - 1)
    return sign


def perms_fixing(n, k):
    return [p for p in permutations(range(n)) if sum(p[i] == i for i in range(n)) == k]


@pytest.fixture
def P():
    return lambda *parts: Partition(parts)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.REPORT:
            terminalreporter.write_line(line)
