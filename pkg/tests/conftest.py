"""Shared brute-force helpers and hypothesis strategies.

The helpers deliberately avoid the package's generators so that they can
serve as independent oracles.
"""

from itertools import product

import pytest
from hypothesis import strategies as st

from deckrecon import Partition, normalize


def brute_partitions(n):
    """Partitions of n by sorting every composition (2**(n-1) bitmasks)."""
    if n == 0:
        return {()}
    found = set()
    for mask in range(1 << (n - 1)):
        parts, run = [], 1
        for bit in range(n - 1):
            if mask >> bit & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        found.add(tuple(sorted(parts, reverse=True)))
    return found


def pentagonal_count(n):
    """p(n) from Euler's pentagonal number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return p[n]


def brute_deletions(parts, k):
    """All nonincreasing mu with mu_i <= parts_i and |mu| = |parts| - k."""
    target = sum(parts) - k
    out = set()
    for mu in product(*[range(p + 1) for p in parts]):
        if sum(mu) == target and all(a >= b for a, b in zip(mu, mu[1:])):
            out.add(tuple(x for x in mu if x))
    return out


def cell_set(parts):
    return {(i, j) for i, p in enumerate(parts, 1) for j in range(1, p + 1)}


def from_cells(cells):
    rows = {}
    for i, _ in cells:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


SMALL = [Partition(p) for n in range(13) for p in sorted(brute_partitions(n), reverse=True)]


@pytest.fixture(scope="session")
def small_partitions():
    """All 272 partitions of weight at most 12."""
    return SMALL


partitions_st = st.lists(st.integers(0, 30), max_size=25).map(lambda xs: normalize(sorted(xs, reverse=True)))
