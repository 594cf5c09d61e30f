import math
from collections import Counter
from fractions import Fraction as F

import numpy as np
import pytest

from reprlab import montecarlo as mc
from reprlab import symrep
from reprlab.partitions import Partition, cotransition_measure, dimension, enumerate_partitions, transition_measure


def test_thresholds_file():
    th = mc.load_thresholds()
    assert th["limit_shape"]["classical"]["sup"] > 0
    assert set(th["seeds"]) >= {"kerov", "limit_shape", "semicircle", "main_term"}


def test_rng_streams_are_reproducible_and_distinct():
    a = mc.trial_rng(7, 0).random(4)
    assert np.array_equal(a, mc.trial_rng(7, 0).random(4))
    assert not np.array_equal(a, mc.trial_rng(7, 1).random(4))


def test_growth_weights_are_kerov_weights():
    for lam in enumerate_partitions(7):
        opts = mc.plancherel_growth_options(lam.parts)
        assert sum(w for _, w in opts) == 1
        exact = {a.parts: w for a, w in zip(_children(lam), [w for _, w in opts])}
        tm = transition_measure(lam)
        assert sorted(exact.values()) == sorted(tm.weights)
        rows, logw = mc._plancherel_log_weights(lam.parts)
        assert np.allclose(np.exp(logw), [float(w) for _, w in opts])


def _children(lam):
    out = []
    for r, _ in mc.plancherel_growth_options(lam.parts):
        parts = list(lam.parts) + ([1] if r == len(lam.parts) else [])
        if r < len(lam.parts):
            parts[r] += 1
        out.append(Partition(tuple(parts)))
    return out


def test_small_plancherel_frequencies():
    n, trials = 4, 4000
    counts = Counter(mc.plancherel_growth_sample(n, mc.trial_rng(3, i)).parts for i in range(trials))
    for lam in enumerate_partitions(n):
        p = dimension(lam) ** 2 / math.factorial(n)
        assert abs(counts[lam.parts] / trials - p) < 4 * math.sqrt(p * (1 - p) / trials)


def test_float_weights_path_matches_exact_path_law():
    rng = mc.trial_rng(1, 0)
    lam = mc.plancherel_growth_sample(50, rng, exact_limit=0)
    assert lam.n == 50


def test_character_ratio_matches_exact_characters():
    for lam in enumerate_partitions(8):
        for rho in ((2,), (3,), (2, 2), (3, 2), (4, 1)):
            exact = symrep.normalized_character(lam, tuple(rho) + (1,) * (8 - sum(rho)))
            assert mc.character_ratio_exact(lam.parts, rho) == exact
            assert math.isclose(mc.character_ratio(lam.parts, rho), float(exact), abs_tol=1e-12)


def test_cotransition_weights_match():
    for lam in enumerate_partitions(8):
        _, contents, w = mc.cotransition_weights(lam.parts)
        meas = cotransition_measure(lam)
        assert np.allclose(w, [float(x) for x in meas.weights])
        assert np.allclose(contents, [float(x) for x in meas.locations])


def test_main_term_matches_exact():
    sigma = symrep.parse_permutation("(1,2)", 7)
    for lam in enumerate_partitions(7):
        for u in (F(1, 4), F(1, 2), F(3, 4)):
            exact = symrep.main_term(lam, sigma, u)
            assert math.isclose(mc.main_term(lam.parts, (2,), float(u)), float(exact), abs_tol=1e-12)


def test_parallel_trials_equal_serial():
    from functools import partial
    fn = partial(mc._kerov_stat, (2,), 30)
    assert mc.run_trials(fn, 8, 11, jobs=1) == mc.run_trials(fn, 8, 11, jobs=2)


def test_hermite_moments():
    assert mc.hermite_moments((2,)) == (0.0, 2.0)
    assert mc.hermite_moments((2, 2)) == (0.0, 8.0)
    assert mc.hermite_moments(()) == (1.0, 0.0)


def test_small_reports_run():
    r = mc.kerov_clt_report((2,), 60, 40, seed=1)
    assert r.trials == 40 and "samples" not in r.to_json()
    s = mc.limit_shape_report("setpartition", 40, 4, seed=1)
    assert 0 <= s.mean < 1
    c = mc.cotransition_semicircle_report(200, 3, seed=1)
    assert c.mean < 0.2
    m = mc.main_term_report((), 0.5, 200, 10, seed=1)
    assert abs(m.mean - 0.5) < 0.1


def test_invalid_sizes():
    with pytest.raises(ValueError):
        mc.sample_plancherel(0)
    with pytest.raises(ValueError):
        mc.limit_shape_report("hexagonal", 10, 1)
