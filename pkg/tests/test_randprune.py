import math
from fractions import Fraction
from types import SimpleNamespace

import numpy as np
import pytest

from frsprune.errors import BadEpsilon, BadParams
from frsprune.frs import FoldedWord, FrsParams, decoding_radius, folded_distance
from frsprune.harness import brute_force_list, plant_word, random_codeword
from frsprune.interp import harness_container
from frsprune.randprune import (
    FAIL,
    _profile,
    dimension_profile,
    gk16_bound,
    krsw_prune,
    rand_decode,
    rand_prune_once,
    repeat_count,
)
from frsprune.subspace import condition_all, EMPTY


def test_profile_weights_example():
    fake = [SimpleNamespace(dim=r) for r in [0] * 3 + [1] * 5 + [2] * 2] + [EMPTY] * 4
    prof, classes = _profile(fake, 2, 3)
    assert prof.sizes == (3, 5, 2)
    assert prof.weights == (3, 20, 0)
    assert prof.total == 23
    assert prof.dimension_sum() == 9
    assert classes[1] == [3, 4, 5, 6, 7]


def test_repeat_count():
    assert repeat_count(3, Fraction(1, 10)) == 24
    assert repeat_count(1, Fraction(1, 10)) == math.ceil(math.log(10))
    assert repeat_count(1, Fraction(1, 2)) == 1
    with pytest.raises(BadParams):
        repeat_count(2, 1)


@pytest.fixture
def line17():
    p = FrsParams.create(17, 16, 2, 4)
    H = harness_container(p, [], 1, 2)
    return p, H


def test_line_missing_g_everywhere(line17):
    p, H = line17
    base, (d,) = H.basis()
    g = base.symbols.copy()
    for i in range(p.N):
        g[i] += (1, 0) if d.symbols[i][1] else (0, 1)
    g = FoldedWord(g, p.q)
    assert all(Hi is EMPTY for Hi in condition_all(H, g))
    prof = dimension_profile(g, H, 2)
    assert prof.total == 0 and sum(prof.sizes) == 0
    assert rand_prune_once(g, H, 2, 0) is FAIL


def test_k0_in_radius(line17):
    p, H = line17
    base, _ = H.basis()
    P = harness_container(p, [base], 0, 0)
    for seed in range(5):
        assert rand_prune_once(base, P, 2, seed) == base
        assert krsw_prune(base, P, Fraction(1, 10), p.design_distance, seed) == base


def test_bad_params(line17):
    p, H = line17
    g = H.basis()[0]
    with pytest.raises(BadParams):
        rand_prune_once(g, harness_container(p, [], 3, 0), 2, 0)
    with pytest.raises(BadParams):
        rand_prune_once(g, H, 3, 0)  # s > m
    with pytest.raises(BadEpsilon):
        krsw_prune(g, H, p.design_distance, p.design_distance, 0)


def adversarial(seed):
    p = FrsParams.create(61, 54, 9, 3)
    rng = np.random.default_rng(seed)
    cws = [random_codeword(p, rng) for _ in range(3)]
    g = plant_word(cws, [2, 2, 2], seed)
    return p, cws, g, harness_container(p, cws, 2, seed)


def test_single_call_soundness_and_reproducibility():
    p, cws, g, H = adversarial(0)
    radius = decoding_radius(3, p.m, p.R)
    outs = [rand_prune_once(g, H, 3, seed) for seed in range(200)]
    assert outs == [rand_prune_once(g, H, 3, seed) for seed in range(200)]
    for h in outs:
        if h is not FAIL:
            assert H.contains(h) and folded_distance(h, g) < radius
    freq = {c: sum(o == c for o in outs) / 200 for c in cws}
    # loose here, the tight version lives in the acceptance suite
    assert all(f > 0.05 for f in freq.values())


def test_rand_decode_recovers_list():
    p, cws, g, H = adversarial(1)
    expected = brute_force_list(p, g, decoding_radius(3, p.m, p.R))
    assert expected == set(cws)
    assert rand_decode(g, H, 3, Fraction(1, 10), 9) == expected
    assert rand_decode(g, H, 3, Fraction(1, 10), 9) == rand_decode(g, H, 3, Fraction(1, 10), 9)


@pytest.mark.parametrize("seed", range(20))
def test_gk16_on_profiles(seed):
    rng = np.random.default_rng(seed)
    p = FrsParams.create(31, 27, 3, int(rng.integers(2, 8)))
    s = 3
    cws = [random_codeword(p, rng) for _ in range(2)]
    g = plant_word(cws, [int(rng.integers(0, 5)), int(rng.integers(0, 5))], seed)
    for k in (1, 2):
        if k > p.Rn:
            continue
        H = harness_container(p, cws[: k + 1] if k >= 1 else cws[:1], k, seed)
        prof = dimension_profile(g, H, s)
        assert sum(prof.sizes) <= p.N
        assert prof.dimension_sum() <= gk16_bound(k, p.m, p.R, p.N)


def test_krsw_frequency():
    p = FrsParams.create(17, 16, 2, 2)
    rng = np.random.default_rng(5)
    c = random_codeword(p, rng)
    H = harness_container(p, [c], 1, 5)
    delta = p.design_distance
    eps = Fraction(1, 4)
    g = plant_word([c], [6], 2)  # distance 1/4 < delta - eps = 1/2
    hits = sum(krsw_prune(g, H, eps, delta, seed) == c for seed in range(2000))
    assert hits / 2000 >= float(eps) ** H.dim
