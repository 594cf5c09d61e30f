from fractions import Fraction as F

import numpy as np
import pytest

from reprlab import symrep
from reprlab.partitions import (Partition, cotransition_measure, cotransition_split, dimension,
                                enumerate_partitions)
from reprlab.symrep import (ORTHOGONAL, SEMINORMAL, Permutation, all_permutations, character, class_size,
                            conjugation_symmetry_holds, entry_bound_check, main_term, modified_power_sum_contents,
                            normalized_character, p_sharp, p_sharp_explicit, p_sharp_residue, parse_permutation,
                            partial_trace, rep_matrix, skew_dimension, skew_dimension_recursive, total_sum,
                            verify_decompositions)


def test_permutation_basics():
    s = parse_permutation("(1,2,3)(4,5)", 6)
    assert s.cycle_type().parts == (3, 2, 1)
    assert s.compose(s.inverse()) == Permutation.identity(6)
    assert s.length() == len(s.reduced_word())
    assert s.wt == 5  # points moved
    with pytest.raises(ValueError):
        parse_permutation("(1,1)", 3)
    with pytest.raises(ValueError):
        parse_permutation("(1,7)", 3)


def test_representation_is_homomorphism():
    lam = Partition((3, 2))
    perms = list(all_permutations(5))
    rng = np.random.default_rng(0)
    for _ in range(20):
        a, b = (perms[i] for i in rng.integers(len(perms), size=2))
        for flavor in (ORTHOGONAL, SEMINORMAL):
            ab = rep_matrix(lam, a.compose(b), flavor).entries
            prod = np.asarray(rep_matrix(lam, a, flavor).entries) @ np.asarray(rep_matrix(lam, b, flavor).entries)
            assert np.allclose(np.asarray(ab, dtype=float), np.asarray(prod, dtype=float), atol=1e-12)


def test_orthogonal_form_is_orthogonal():
    for lam in enumerate_partitions(5):
        for s in list(all_permutations(5))[::17]:
            M = np.asarray(rep_matrix(lam, s, ORTHOGONAL).entries, dtype=float)
            assert np.allclose(M @ M.T, np.eye(M.shape[0]), atol=1e-12)


def test_trace_is_character():
    for lam in enumerate_partitions(5):
        for s in list(all_permutations(5))[::7]:
            tr = rep_matrix(lam, s, SEMINORMAL).trace()
            assert tr == character(lam, s.cycle_type())


def test_column_orthogonality():
    n = 6
    for lam in enumerate_partitions(n):
        for mu in enumerate_partitions(n):
            s = sum(class_size(rho) * character(lam, rho) * character(mu, rho) for rho in enumerate_partitions(n))
            assert s == (720 if lam == mu else 0)


def test_p_sharp_three_ways():
    for lam in enumerate_partitions(7):
        for k in (1, 2, 3, 4):
            a = p_sharp((k,), lam)
            assert a == p_sharp_explicit(k, lam) == p_sharp_residue(k, lam)
    assert normalized_character(Partition((3, 2)), (2, 1, 1, 1)) == F(1, 5)


def test_partial_trace_endpoints():
    lam = Partition((3, 2, 1))
    s = parse_permutation("(1,2)", 6)
    assert partial_trace(lam, s, 1) == normalized_character(lam, s.cycle_type())
    assert partial_trace(lam, Permutation.identity(6), F(1, 2)) == F(dimension(lam) // 2, dimension(lam))
    assert isinstance(total_sum(lam, s), F)


def test_main_term_identity_is_fraction_of_rows():
    lam = Partition((4, 2, 1))
    u = F(1, 3)
    # for the identity only whole co-transition blocks below level u count
    mt = main_term(lam, Permutation.identity(7), u)
    split = cotransition_split(lam, u)
    weights = cotransition_measure(lam).weights
    assert mt == sum(weights[: split.jhat], F(0))
    assert mt <= u < mt + weights[split.jhat]


def test_skew_dimension_two_ways():
    for lam in enumerate_partitions(7):
        for nu in enumerate_partitions(4):
            assert skew_dimension(lam, nu) == skew_dimension_recursive(lam, nu)


def test_structure_checks():
    assert conjugation_symmetry_holds(4)
    s = parse_permutation("(1,3)", 5)
    for lam in enumerate_partitions(5):
        assert entry_bound_check(lam, s)


def test_modified_power_sum_small_case():
    # one box: p_2 of contents {0} is 0 and the correction (1/2) 1^{falling 2} is 0
    assert modified_power_sum_contents(Partition((1,)), 2) == 0
    assert modified_power_sum_contents(Partition((2, 1)), 2) == -1
    assert modified_power_sum_contents(Partition((2, 1)), 3) == 0


def test_sweep_is_clean_for_small_n():
    for n in range(2, 7):
        for rep in verify_decompositions(n).values():
            assert rep.failures == 0 and rep.checks > 0


# the sweep must notice a broken ingredient

def _sweep_failures(n=5):
    return {k: v.failures for k, v in verify_decompositions(n).items()}


def test_mutation_skew_dimension(monkeypatch):
    real = symrep.skew_dimension_recursive
    monkeypatch.setattr(symrep, "skew_dimension_recursive", lambda lam, nu: real(lam, nu) + 1)
    assert sum(_sweep_failures().values()) > 0


def test_mutation_character(monkeypatch):
    real = symrep.character
    monkeypatch.setattr(symrep, "character", lambda lam, rho: real(lam, rho) + (1 if len(lam) == 2 else 0))
    assert sum(_sweep_failures().values()) > 0


def test_mutation_removable_corners(monkeypatch):
    real = symrep.removable_corners
    monkeypatch.setattr(symrep, "removable_corners", lambda lam: list(reversed(real(lam))))
    assert sum(_sweep_failures().values()) > 0
