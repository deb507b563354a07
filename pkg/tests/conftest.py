import itertools
from fractions import Fraction

import numpy as np
import pytest

from frsprune.frs import FrsParams, folded_distance
from frsprune.subspace import EMPTY


def brute_points(H):
    """Points of H by looping over every alpha vector (independent of enumerate_points)."""
    if H is EMPTY:
        return set()
    amb = H.ambient
    out = set()
    for alphas in itertools.product(range(amb.q), repeat=amb.K):
        ok = all(sum(c * a for c, a in zip(row[: amb.K], alphas)) % amb.q == row[amb.K] for row in H.rows)
        if ok:
            out.add(amb.point(alphas))
    return out


def within(points, g, radius):
    radius = Fraction(radius)
    return {h for h in points if folded_distance(h, g) < radius}


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


@pytest.fixture
def small_params():
    return FrsParams.create(17, 8, 2, 2)


def det_instance(seed):
    """Random pruning instance: (params, H, g, eps, delta) with q^k <= 10^4.

    A few codewords are planted in H; each agrees with g on just enough
    (or one too few) coordinates to land right at the radius delta - eps.
    """
    from frsprune.harness import plant_word, random_codeword
    from frsprune.interp import harness_container

    rng = np.random.default_rng(seed)
    q = (17, 31)[seed % 2]
    m = (2, 3)[(seed // 2) % 2]
    N = int(rng.integers(4, (q - 1) // m + 1))
    n = N * m
    Rn = int(rng.integers(1, max(2, n // 3) + 1))
    p = FrsParams.create(q, n, m, Rn)
    kmax = 3 if q == 17 else 2
    k = int(rng.integers(1, min(kmax, Rn) + 1)) if seed % 10 else 0
    delta = p.design_distance
    eps = delta * Fraction((1, 2)[int(rng.integers(2))], 4)
    radius = delta - eps
    need = int(N * (1 - radius)) + 1  # agreements putting a word strictly inside
    cws = [random_codeword(p, rng) for _ in range(int(rng.integers(1, k + 2)))]
    agreements = []
    for _ in cws:
        a = need - int(rng.integers(0, 2))
        if sum(agreements) + a > N:
            a = max(0, N - sum(agreements))
        agreements.append(max(0, a))
    g = plant_word(cws, agreements, seed)
    H = harness_container(p, cws, k, seed) if k >= span_dim(cws, q) else harness_container(p, cws[:1], k, seed)
    return p, H, g, eps, delta


def span_dim(words, q):
    from frsprune.subspace import span_dimension

    return span_dimension(words, q)


ACCEPTANCE_LINES: list[str] = []


def acceptance_line(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
