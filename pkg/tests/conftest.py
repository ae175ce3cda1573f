import random

import pytest

from kummergaps.curve import new_curve

# filled by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda x: int(x.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

RECORD_SET = {
    (1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (2, 4), (2, 9),
    (4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3), (7, 1), (7, 2), (10, 1),
}

# (params, [n, k, d]) per published table row
TABLE_EXPECTED = {
    1: [
        ((8, 2, 9, 2, 5), (511, 445, 42)),
        ((8, 2, 9, 3, 4), (510, 459, 30)),
        ((8, 2, 3, 2, 3), (175, 161, 10)),
        ((9, 2, 5, 2, 5), (368, 331, 24)),
        ((9, 2, 5, 3, 4), (367, 338, 18)),
        ((5, 2, 3, 2, 1), (64, 59, 4)),
    ],
    2: [
        ((8, 2, 9, 1, 5), (511, 445, 42)),
        ((8, 2, 9, 2, 4), (510, 459, 30)),
        ((8, 2, 3, 1, 3), (175, 161, 10)),
        ((9, 2, 5, 1, 5), (368, 331, 24)),
        ((9, 2, 5, 2, 4), (367, 338, 18)),
        ((5, 2, 3, 1, 1), (64, 59, 4)),
    ],
    3: [
        ((5, 6, 2, 2), (124, 106, 12)),
        ((7, 8, 2, 4), (342, 295, 30)),
        ((7, 4, 2, 3), (174, 156, 12)),
        ((8, 9, 2, 5), (511, 445, 42)),
        ((8, 3, 2, 3), (175, 161, 10)),
        ((9, 5, 2, 5), (368, 331, 24)),
        ((9, 5, 3, 4), (367, 338, 18)),
        ((9, 2, 2, 2), (152, 145, 6)),
    ],
    4: [
        ((5, 6, 1, 2), (124, 106, 12)),
        ((7, 8, 1, 4), (342, 295, 30)),
        ((7, 4, 1, 3), (174, 156, 12)),
        ((8, 9, 1, 5), (511, 445, 42)),
        ((8, 3, 1, 3), (175, 161, 10)),
        ((9, 5, 1, 5), (368, 331, 24)),
        ((9, 5, 2, 4), (367, 338, 18)),
        ((9, 2, 1, 2), (152, 145, 6)),
    ],
}


def random_curves(count, max_m=9, max_r=6, max_lambda=9, seed=1234):
    rng = random.Random(seed)
    pool = [x for x in range(-max_lambda, max_lambda + 1) if x]
    seen = {}
    while len(seen) < count:
        m = rng.randint(2, max_m)
        r = rng.randint(1, max_r)
        lams = tuple(rng.choice(pool) for _ in range(r))
        seen.setdefault((m, lams), new_curve(m, lams))
    return list(seen.values())


@pytest.fixture
def record():
    return new_curve(8, [3, 7, 7])


@pytest.fixture
def c35():
    return new_curve(3, [4] * 5)
