import numpy as np
import pytest

from conftest import brute_points
from frsprune.errors import BadParams, DimensionTooSmall, ParamsInfeasible
from frsprune.frs import FoldedWord, FrsParams, corrupt, decoding_radius, encode, is_codeword
from frsprune.harness import brute_force_list, max_errors_below, random_codeword
from frsprune.poly import Polynomial
from frsprune.interp import InterpConfig, find_container, harness_container, interpolation_matrix
from frsprune.subspace import EMPTY, enumerate_points


def test_config_counts():
    p = FrsParams.create(31, 15, 3, 3)
    cfg = InterpConfig.for_params(p, 2)
    assert cfg.unknowns(p) == (cfg.D + p.Rn) + 2 * (cfg.D + 1)
    assert cfg.constraints(p) == p.N * (p.m - 2 + 1)
    # more unknowns than constraints, so a nonzero solution exists
    assert cfg.unknowns(p) > cfg.constraints(p)
    g = FoldedWord(np.zeros((p.N, p.m), dtype=np.int64), p.q)
    assert interpolation_matrix(p, g, cfg).shape == (cfg.constraints(p), cfg.unknowns(p))


def test_s1_gives_at_most_a_point():
    p = FrsParams.create(31, 15, 3, 3)
    rng = np.random.default_rng(1)
    for seed in range(10):
        c = random_codeword(p, rng)
        H = find_container(p, c, 1)
        assert H is not EMPTY and H.dim == 0
        assert H.unique_point() == c


@pytest.mark.parametrize("s", [1, 2, 3])
def test_clean_codeword_is_contained(s):
    p = FrsParams.create(31, 27, 9, 3)
    c = encode(p, Polynomial([4, 0, 17], 31))
    H = find_container(p, c, s)
    assert H.dim <= s - 1
    assert H.contains(c)


@pytest.mark.parametrize("seed", range(100))
def test_containment_against_brute_force(seed):
    p = FrsParams.create(31, 15, 3, 3)
    s = 2
    rng = np.random.default_rng(seed)
    radius = decoding_radius(s, p.m, p.R)
    c = random_codeword(p, rng)
    e = int(rng.integers(0, max_errors_below(radius, p.N) + 1))
    g = corrupt(c, e, seed)
    expected = brute_force_list(p, g, radius)
    assert c in expected
    H = find_container(p, g, s)
    assert H is not EMPTY and H.dim <= s - 1
    for w in expected:
        assert H.contains(w)


def test_far_word_may_give_empty_but_never_misses():
    p = FrsParams.create(31, 15, 3, 3)
    radius = decoding_radius(2, p.m, p.R)
    rng = np.random.default_rng(7)
    for _ in range(20):
        g = FoldedWord(rng.integers(0, 31, size=(p.N, p.m)), 31)
        H = find_container(p, g, 2)
        for w in brute_force_list(p, g, radius):
            assert H is not EMPTY and H.contains(w)


def test_infeasible_params():
    # rate too high for s = m: radius is negative
    p = FrsParams.create(17, 16, 2, 12)
    with pytest.raises(ParamsInfeasible):
        find_container(p, FoldedWord(np.zeros((8, 2), dtype=np.int64), 17), 2)


def test_harness_container_examples():
    p = FrsParams.create(17, 16, 2, 4)
    rng = np.random.default_rng(0)
    cws = [random_codeword(p, rng) for _ in range(3)]
    H = harness_container(p, cws, 3, 5)
    assert H.dim == 3
    for c in cws:
        assert H.contains(c)
    pts = brute_points(H)
    assert len(pts) == 17**3
    assert all(is_codeword(p, h) for h in list(pts)[:50])
    assert harness_container(p, [], 2, 1).dim == 2
    assert enumerate_points(harness_container(p, cws, 3, 5)) == pts
    with pytest.raises(DimensionTooSmall):
        harness_container(p, cws, 1, 0)
    with pytest.raises(BadParams):
        harness_container(p, cws, 5, 0)
    with pytest.raises(BadParams):
        bad = FoldedWord(np.arange(16).reshape(8, 2) ** 3, 17)
        assert not is_codeword(p, bad)
        harness_container(p, [bad], 1, 0)
