"""Shared independent oracles.

Nothing here imports the code paths under test beyond the basic value types.
"""

from itertools import product
from math import factorial

import pytest

from graded_decomp.laurent import LaurentPoly
from graded_decomp.partitions import Partition


def brute_partitions(d):
    """Partitions of d by filtering all compositions; exponential but obviously correct."""
    out = set()
    for k in range(d + 1):
        for comp in product(range(1, d + 1), repeat=k):
            if sum(comp) == d and all(comp[i] >= comp[i + 1] for i in range(k - 1)):
                out.add(comp)
    return sorted(out, reverse=True)


def hook_count(shape):
    """Number of standard tableaux by the hook length formula."""
    shape = tuple(shape)
    if not shape:
        return 1
    conj = [sum(1 for p in shape if p > c) for c in range(shape[0])]
    prod = 1
    for r, row in enumerate(shape):
        for c in range(row):
            prod *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(sum(shape)) // prod


def brute_tableaux(shape):
    """All standard fillings of ``shape`` by checking every permutation of 1..d."""
    from itertools import permutations

    shape = tuple(shape)
    d = sum(shape)
    cells = [(r, c) for r, row in enumerate(shape, 1) for c in range(1, row + 1)]
    out = []
    for perm in permutations(range(1, d + 1)):
        fill = dict(zip(cells, perm))
        ok = all(
            (c == 1 or fill[(r, c - 1)] < fill[(r, c)]) and (r == 1 or fill[(r - 1, c)] < fill[(r, c)])
            for (r, c) in cells
        )
        if ok:
            out.append(fill)
    return out


def poly(spec):
    """``poly({1: 1, -1: 1})`` -> q + q^-1."""
    return LaurentPoly(spec)


P = Partition


@pytest.fixture
def two_one():
    return Partition((2, 1))
