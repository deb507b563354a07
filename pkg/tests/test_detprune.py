from fractions import Fraction

import numpy as np
import pytest

from conftest import det_instance, within, brute_points
from frsprune.detprune import DetPruneConfig, det_prune, heavy_hitters, thresholds
from frsprune.errors import BadEpsilon
from frsprune.frs import FoldedWord, FrsParams, folded_distance
from frsprune.harness import container_list, plant_word, random_codeword
from frsprune.interp import harness_container


def test_heavy_hitters_examples():
    assert heavy_hitters(list("aabacabd"), Fraction(1, 2)) == {"a"}
    assert heavy_hitters(list("abcdef"), Fraction(1, 2)) == set()
    assert heavy_hitters(["x"] * 7, 1) == {"x"}
    assert heavy_hitters([], Fraction(1, 3)) == set()
    with pytest.raises(ValueError):
        heavy_hitters(["a"], 0)


@pytest.mark.parametrize("seed", range(30))
def test_heavy_hitters_exact(seed):
    rng = np.random.default_rng(seed)
    stream = rng.zipf(1.6, size=int(rng.integers(1, 300))).tolist()
    p = Fraction(int(rng.integers(1, 10)), int(rng.integers(10, 40)))
    counts = {x: stream.count(x) for x in set(stream)}
    assert heavy_hitters(stream, p) == {x for x, c in counts.items() if c >= p * len(stream)}


def test_thresholds():
    eps = Fraction(1, 4)
    ps = thresholds(eps, 3)
    assert ps[-1] == eps
    assert ps[1] == eps**2 / 32
    assert ps[0] == (eps**2 / 32) ** 2 / 32
    assert all(a < b for a, b in zip(ps, ps[1:]))
    assert thresholds(eps, 0) == []


def test_k0_point():
    p = FrsParams.create(17, 8, 2, 2)
    rng = np.random.default_rng(0)
    c = random_codeword(p, rng)
    H = harness_container(p, [c], 0, 0)
    delta = p.design_distance
    assert det_prune(c, Fraction(1, 8), H, delta) == {c}
    far = plant_word([c], [0], 1)
    assert det_prune(far, Fraction(1, 8), H, delta) == set()


def test_bad_epsilon():
    p = FrsParams.create(17, 8, 2, 2)
    H = harness_container(p, [], 1, 0)
    g = FoldedWord(np.zeros((4, 2), dtype=np.int64), 17)
    for eps in (0, p.design_distance, 1):
        with pytest.raises(BadEpsilon):
            det_prune(g, eps, H, p.design_distance)


def test_harness_list_example():
    p = FrsParams.create(17, 16, 2, 2)
    rng = np.random.default_rng(3)
    cws = [random_codeword(p, rng) for _ in range(3)]
    H = harness_container(p, cws, 2, 3)
    delta = p.design_distance
    eps = delta / 4
    # 8 coordinates, radius 21/32: 3 agreements put a word inside
    g = plant_word(cws, [3, 3, 2], 4)
    expected = container_list(H, g, delta - eps)
    assert set(cws[:2]) <= expected
    assert det_prune(g, eps, H, delta) == expected


@pytest.mark.parametrize("seed", range(60))
def test_oracle_equivalence(seed):
    p, H, g, eps, delta = det_instance(seed)
    out, st = det_prune(g, eps, H, delta, stats=True)
    expected = within(brute_points(H), g, delta - eps)
    assert out == expected
    for h in out:
        assert H.contains(h) and folded_distance(h, g) < delta - eps
    assert st.max_depth <= H.dim


@pytest.mark.parametrize("seed", range(8))
def test_random_provider_agrees(seed):
    p, H, g, eps, delta = det_instance(seed)
    cfg = DetPruneConfig(expander_provider="random", expander_seed=seed)
    assert det_prune(g, eps, H, delta, cfg) == det_prune(g, eps, H, delta)
