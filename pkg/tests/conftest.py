import random

import pytest

from dwcount.seifert import SeifertData


def random_manifold(rng, *, gmax=3, rmax=4, amax=6, bmax=6):
    """SeifertData drawn uniformly from the corpus box (no coprimality filter)."""
    g = rng.randint(0, gmax)
    r = rng.randint(0, rmax)
    pairs = tuple((rng.randint(1, amax), rng.randint(-bmax, bmax)) for _ in range(r))
    return SeifertData(g, pairs)


def corpus(n, seed, **kw):
    rng = random.Random(seed)
    return [random_manifold(rng, **kw) for _ in range(n)]


@pytest.fixture(scope="session")
def sweep():
    """50 random manifolds with g <= 3, r <= 4, a_j <= 6, |b_j| <= 6."""
    return corpus(50, seed=20261016)


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_record():
    def record(label, ok, detail=""):
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
