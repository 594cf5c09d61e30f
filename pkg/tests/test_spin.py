import math
import pytest

from reprlab.spin import (StrictPartition, catalan_q_equals_p, coefficients_in_half_integers, count_odd_partitions,
                          double_diagram, double_diagram_profile, enumerate_strict, free_cumulant_poly,
                          free_cumulants_of_measure, from_multirect, g_hook_formula, g_product_formula,
                          psi_functional_equation_holds, sign_flip_positivity, spin_p_sharp_explicit,
                          spin_p_sharp_series, spin_transition_measure, stanley_eval_consistency, stanley_poly,
                          strict_cotransition, strict_growth_options, strict_plancherel, strict_to_names_values,
                          strict_transition, to_multirect)


def test_strict_validation():
    with pytest.raises(ValueError):
        StrictPartition((2, 2))


def test_strict_count_equals_odd_count():
    for n in range(1, 25):
        assert len(enumerate_strict(n)) == count_odd_partitions(n)


def test_g_formulas_and_plancherel():
    assert g_product_formula((2, 1)) == 1
    for n in range(1, 15):
        lams = enumerate_strict(n)
        assert all(g_product_formula(l) == g_hook_formula(l) for l in lams)
        assert sum(strict_plancherel(l) for l in lams) == 1


def test_growth_and_cotransition_coherent():
    for n in range(1, 10):
        for lam in enumerate_strict(n):
            opts = strict_growth_options(lam.parts)
            assert sum(w for _, w in opts) == 1
            for r, w in opts:
                parts = list(lam.parts) + ([1] if r == len(lam.parts) else [])
                if r < len(lam.parts):
                    parts[r] += 1
                big = tuple(parts)
                assert strict_transition(lam, big) == w
                # detailed balance between the up and down weights
                assert strict_plancherel(lam) * w == strict_plancherel(big) * strict_cotransition(lam, big)


def test_multirect_roundtrip():
    for n in range(1, 16):
        for lam in enumerate_strict(n):
            assert from_multirect(to_multirect(lam)) == lam


def test_double_diagram_interlaces_and_area():
    for n in range(1, 12):
        for lam in enumerate_strict(n):
            dd = double_diagram(lam)
            assert dd.interlaces()
            assert double_diagram_profile(lam).area() == 4 * n  # 2n boxes of area 2


def test_spin_transition_measure_is_probability():
    for lam in enumerate_strict(9):
        assert spin_transition_measure(lam).total() == 1


def test_explicit_equals_series_including_degenerate_parts():
    # (2, 1) with k = 3 has two parts summing to k
    assert spin_p_sharp_explicit(3, (2, 1)) == spin_p_sharp_series(3, (2, 1))
    for n in range(1, 11):
        for lam in enumerate_strict(n):
            assert spin_p_sharp_explicit(1, lam) == n
            for k in (3, 5, 7):
                assert spin_p_sharp_explicit(k, lam) == spin_p_sharp_series(k, lam)


def test_even_k_rejected_by_explicit():
    with pytest.raises(ValueError):
        spin_p_sharp_explicit(2, (3, 1))


def test_stanley_poly_evaluates_to_characters():
    for n in range(1, 11):
        for lam in enumerate_strict(n):
            for k in (1, 3, 5):
                assert stanley_eval_consistency(k, lam)


def test_stanley_structure():
    assert stanley_poly(2, 1, allow_even=True).is_zero()
    with pytest.raises(ValueError):
        stanley_poly(2, 1)
    for k in (1, 3, 5):
        assert psi_functional_equation_holds(k, 1)
        assert coefficients_in_half_integers(stanley_poly(k, 2))
        assert sign_flip_positivity(k, 2) == []
    lhs, rhs = catalan_q_equals_p(5)
    assert lhs == rhs


def test_free_cumulants_match_measure():
    for lam in ((4, 2, 1), (5, 3), (6, 5, 2)):
        vals = strict_to_names_values(lam)
        meas_R = free_cumulants_of_measure(spin_transition_measure(lam), 4)
        for k1 in (2, 3, 4):
            m = len(vals) // 2
            assert free_cumulant_poly(k1, m).evaluate(vals) == meas_R[k1 - 1] / 2


def test_rescaled_double_diagram_area():
    prof = double_diagram_profile((5, 3, 1), rescale=True)
    assert math.isclose(float(prof.area()) / prof.scale ** 2, 2.0, rel_tol=1e-12)
