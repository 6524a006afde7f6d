import random

import pytest

from lrtables.contingency import MarginSpec
from lrtables.partition import partitions


def random_partition(rng, size, max_length):
    choices = list(partitions(size, max_length=max_length))
    return rng.choice(choices)


def random_gl_margins(rng, r, max_size=4, max_length=2, feasible=True, slack=0):
    """Random margin vector in the stable range; ``feasible`` balances the sizes."""
    plus_sizes = [rng.randint(0, max_size) for _ in range(r)]
    if feasible:
        total = sum(plus_sizes)
        minus_sizes = [0] * r
        for _ in range(total):
            open_slots = [i for i in range(r) if minus_sizes[i] < max_size]
            minus_sizes[rng.choice(open_slots)] += 1
    else:
        minus_sizes = [rng.randint(0, max_size) for _ in range(r)]
    pairs = [
        (random_partition(rng, a, max_length), random_partition(rng, b, max_length))
        for a, b in zip(plus_sizes, minus_sizes)
    ]
    depth = sum(len(p) + len(m) for p, m in pairs)
    return MarginSpec.from_pairs(pairs, max(1, depth + slack))


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
