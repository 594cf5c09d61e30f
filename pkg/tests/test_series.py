from fractions import Fraction as F

from reprlab.series import MultivarPoly, TruncatedSeries, catalan, falling, falling_factorial_int, poly_ring


def test_poly_arithmetic_and_printing():
    p, q = poly_ring(("p", "q"))
    f = (p + q) ** 2 - p * p
    assert f == 2 * p * q + q ** 2
    assert f.degree() == 2
    assert f.evaluate([1, 2]) == 8
    assert (f - f).is_zero()
    assert f.to_string() == (q ** 2 + 2 * q * p).to_string()


def test_homogeneous_part_and_sign_scaling():
    p, q = poly_ring(("p", "q"))
    f = p ** 3 - 2 * p * q + 5
    assert f.homogeneous_part(3) == p ** 3
    assert f.scale_variables([-1, 1]) == -(p ** 3) + 2 * p * q + 5
    assert f.negative_terms()


def test_substitute():
    p, q = poly_ring(("p", "q"))
    assert (p * q).substitute([q, p + 1]) == q * p + q


def test_series_inverse():
    # 1 / (z - 1) = z^-1 + z^-2 + ...
    s = TruncatedSeries.polynomial([1, -1], low=-6)
    inv = s.inverse(low=-6)
    assert [inv.coefficient(j) for j in range(-1, -6, -1)] == [1] * 5
    assert inv.coefficient(0) == 0


def test_falling_and_catalan():
    assert falling(5, 3) == 60
    assert falling(F(1, 2), 2) == F(-1, 4)
    assert falling_factorial_int(4, 2) == (1, -9, 20)  # (z - 4)(z - 5)
    assert [catalan(j) for j in range(6)] == [1, 1, 2, 5, 14, 42]


def test_constant_poly():
    c = MultivarPoly.constant(("x",), 3)
    assert c.is_constant() and c.constant_term() == 3
