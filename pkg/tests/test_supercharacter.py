import math
from fractions import Fraction as F

import numpy as np
import pytest

from reprlab.supercharacter import (OMEGA_I1, OMEGA_I2, FqMatrix, Q, SetPartition, all_unitriangular, arc_statistics,
                                    arcs_from_support, canonicalize, cell_measure, character_degree, character_norm,
                                    field, fiber_size, in_fiber, nested_partition, neg_log_superplancherel,
                                    omega_discrepancy, omega_functionals, orthogonality_defects, random_superclass_element,
                                    regular_singular, rook_normal_form, sample_superplancherel, set_partitions,
                                    superclass_of, superclass_sizes, supercharacter_value, superinduce,
                                    superplancherel, transition_probabilities, two_sided_orbits)

EXAMPLE = "1,5,7|2|3,4,9|6,8"


def test_parse_roundtrip_and_validation():
    pi = SetPartition.parse(EXAMPLE)
    assert str(pi) == EXAMPLE
    assert pi.arcs == ((1, 5), (3, 4), (4, 9), (5, 7), (6, 8))
    assert SetPartition.from_blocks(pi.blocks) == pi
    with pytest.raises(ValueError):
        SetPartition.from_arcs(4, [(1, 3), (1, 4)])


def test_bell_numbers():
    assert [len(list(set_partitions(n))) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]


def test_example_statistics():
    st = arc_statistics(SetPartition.parse(EXAMPLE))
    assert (st.d, st.dim, st.crs, st.nst, st.adjacent) == (5, 14, 2, 3, 2)
    assert cell_measure(SetPartition.parse(EXAMPLE)).mass == F(5, 9)


def test_superplancherel_sums_to_one():
    for q in (2, 3, 4):
        for n in range(1, 7):
            assert sum(superplancherel(p, q) for p in set_partitions(n)) == 1


def test_neg_log_matches_exact():
    pi = SetPartition.parse(EXAMPLE)
    # logarithm base q
    assert math.isclose(neg_log_superplancherel(pi, 3), -math.log(float(superplancherel(pi, 3)), 3), rel_tol=1e-12)


def test_degree_and_norm():
    for p in set_partitions(5):
        st = arc_statistics(p)
        assert character_degree(p, 3) == supercharacter_value(p, SetPartition.arcless(5), 3)
        assert character_norm(p, 3) == 2 ** st.d * 3 ** st.crs


def test_polynomial_value_specialises():
    pi, sigma = SetPartition.parse("1,3|2,4"), SetPartition.parse("1,3|2|4")
    poly = supercharacter_value(pi, sigma, None)
    for q in (2, 3, 5):
        assert poly.evaluate([q]) == supercharacter_value(pi, sigma, q)


def test_field_axioms():
    for q in (2, 3, 4, 5):
        K = field(q)
        for a in K.units:
            assert K.mul(a, K.inv(a)) == 1
            assert K.add(a, K.neg(a)) == 0
    with pytest.raises(ValueError):
        field(6)


def test_fiber_counts_and_fast_rule():
    for q in (2, 3):
        for n in range(1, 5):
            counts = {}
            for A in all_unitriangular(n, q):
                pi, C = canonicalize(A)
                counts[pi] = counts.get(pi, 0) + 1
                assert in_fiber(A, pi)
                dense = np.asarray(C.dense()) != 0
                np.fill_diagonal(dense, False)
                assert set(arcs_from_support(dense)) == set(pi.arcs)
            assert all(counts[p] == fiber_size(p, q) for p in set_partitions(n))


def test_canonical_form_worked_example():
    A = FqMatrix.from_dense([[1, 0, 5, 2, 1], [0, 1, 2, 0, 0], [0, 0, 1, 5, 0], [0, 0, 0, 1, 4], [0, 0, 0, 0, 1]], q=7)
    pi, C = canonicalize(A)
    assert pi == SetPartition.parse("1,5|2,3,4")
    assert C.dense() == [[1, 0, 0, 0, 1], [0, 1, 1, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
    assert canonicalize(FqMatrix.identity(5, 7))[0] == SetPartition.arcless(5)


def test_sampler_deterministic():
    a = sample_superplancherel(30, 2, seed=5, index=1)
    b = sample_superplancherel(30, 2, seed=5, index=1)
    assert a == b and a.n == 30


def test_superclasses_match_orbits():
    orbits = two_sided_orbits(4, 2)
    assert len(orbits) == 15
    for orbit in orbits:
        forms = {rook_normal_form(FqMatrix.from_flat(4, 2, s)) for s in orbit}
        assert len(forms) == 1
    assert sum(superclass_sizes(4, 2).values()) == 2 ** 6


def test_random_superclass_elements_stay_in_class():
    sigma = SetPartition.from_arcs(8, [(1, 5), (2, 3), (3, 8), (5, 7)])
    for q in (2, 3, 4, 5):
        for seed in range(5):
            A = random_superclass_element(sigma, q, seed)
            assert superclass_of(A) == sigma


def test_character_orthogonality():
    for n, q in ((3, 2), (4, 2), (3, 3)):
        row, col = orthogonality_defects(n, q)
        assert row == 0 and col == 0


def test_superinduction_example_and_coherence():
    combo = superinduce(SetPartition.parse("1,3|2"))
    assert len(combo) == 5
    assert combo.coefficient(SetPartition.parse("1,4|2,3")) == QPOLY_Q_MINUS_1
    for n in range(1, 6):
        for p in set_partitions(n):
            tr = transition_probabilities(p, 3)
            assert sum(tr.values()) == 1 and all(v > 0 for v in tr.values())


QPOLY_Q_MINUS_1 = Q - 1


def test_regular_singular_partition_points():
    pi = SetPartition.parse(EXAMPLE)
    reg, sing = regular_singular(pi)
    assert not (set(reg) & set(sing))
    st = arc_statistics(pi)
    assert len(sing) == 2 * (st.dim - st.d) - st.crs


def test_omega_functionals_and_discrepancy():
    I1, I2, _ = omega_functionals()
    assert (I1, I2) == (OMEGA_I1, OMEGA_I2)
    q1, _, _ = omega_functionals(points=200)
    assert abs(q1 - 0.25) < 1e-3
    d = [omega_discrepancy(nested_partition(n)) for n in (10, 100, 1000)]
    assert d[0] > d[1] > d[2]
    assert omega_discrepancy(SetPartition.arcless(10)) > 0.4
