"""Strict partitions, shifted combinatorics, spin normalized characters and
the multirectangular polynomials F_k with their leading terms.

Conventions settled by the tests in tests/test_spin.py:
  * shifted hook of box (i, j) is arm + leg + 1 + lambda_{j+1};
  * the coherent one-step up weight is 2^(1 - (l(L) - l(l))) g^L / ((n+1) g^l)
    and the down weight is g^l / g^L;
  * double diagrams have area 4n, so the limit shape comparison rescales
    by sqrt(2n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .partitions import DiscreteMeasure, Partition, Profile, as_partition, profile_from_extrema
from .series import (
    MultivarPoly,
    TruncatedSeries,
    catalan,
    falling_factorial_int,
    falling_factorial_poly,
    poly_ring,
)

STRICT_CAP = 60
# Largest k * m handled by the symbolic F_k expansion.
SERIES_BUDGET = 60


class StrictPartition(Partition):
    """Strictly decreasing partition."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_strict():
            raise ValueError(f"parts must be strictly decreasing: {self.parts}")

    @property
    def is_even(self) -> bool:
        """True when n - l is even (the DP+ class)."""
        return (self.n - len(self.parts)) % 2 == 0


def as_strict(obj) -> StrictPartition:
    if isinstance(obj, StrictPartition):
        return obj
    return StrictPartition(as_partition(obj).parts)


def enumerate_strict(n: int) -> list[StrictPartition]:
    """All strict partitions of n, reverse-lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > STRICT_CAP:
        raise ValueError(f"strict enumeration cap {STRICT_CAP} exceeded (n={n})")
    return [StrictPartition(p) for p in _strict(n, n)]


@lru_cache(maxsize=None)
def _strict(n: int, largest: int):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _strict(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def count_odd_partitions(n: int) -> int:
    """Partitions of n into odd parts, by a coin-change recursion."""
    ways = [1] + [0] * n
    for part in range(1, n + 1, 2):
        for s in range(part, n + 1):
            ways[s] += ways[s - part]
    return ways[n]


def g_product_formula(lam) -> int:
    lam = as_strict(lam)
    parts = lam.parts
    val = Fraction(math.factorial(lam.n))
    for p in parts:
        val /= math.factorial(p)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            val *= Fraction(parts[i] - parts[j], parts[i] + parts[j])
    assert val.denominator == 1
    return int(val)


def shifted_hooks(lam) -> dict[tuple[int, int], int]:
    """Hook lengths of the shifted diagram; row i occupies columns i..i+lam_i-1."""
    lam = as_strict(lam)
    parts = lam.parts
    l = len(parts)
    cells = {(i, j) for i in range(1, l + 1) for j in range(i, i + parts[i - 1])}
    hooks = {}
    for (i, j) in cells:
        arm = i + parts[i - 1] - 1 - j
        leg = sum(1 for r in range(i + 1, l + 1) if (r, j) in cells)
        extra = parts[j] if j < l else 0  # lambda_{j+1}
        hooks[(i, j)] = arm + leg + 1 + extra
    return hooks


def g_hook_formula(lam) -> int:
    lam = as_strict(lam)
    prod = 1
    for h in shifted_hooks(lam).values():
        prod *= h
    n_fact = math.factorial(lam.n)
    if n_fact % prod:
        raise ArithmeticError("shifted hook product does not divide n!")
    return n_fact // prod


def g_dimension(lam) -> int:
    """Number of shifted standard tableaux; both formulas must agree."""
    a, b = g_product_formula(lam), g_hook_formula(lam)
    if a != b:
        raise ArithmeticError(f"g formulas disagree on {lam}: {a} vs {b}")
    return a


def strict_plancherel(lam) -> Fraction:
    lam = as_strict(lam)
    g = g_product_formula(lam)
    return Fraction(2 ** (lam.n - len(lam)) * g * g, math.factorial(lam.n))


# ------------------------------------------------------------ growth weights


def strict_growth_options(parts: Sequence[int]) -> list[tuple[int, Fraction]]:
    """(row, weight) for every strict partition reachable by adding one box.

    Row index len(parts) means opening a new row.  Weights come from g
    ratios computed incrementally by the product formula.
    """
    parts = list(parts)
    l = len(parts)
    out = []
    for r in range(l):
        if r == 0 or parts[r - 1] > parts[r] + 1:
            a = parts[r]
            w = Fraction(2, a + 1)
            for j in range(l):
                if j != r:
                    b = parts[j]
                    w *= Fraction((a + 1 - b) * (a + b), (a - b) * (a + 1 + b))
            out.append((r, w))
    if l == 0 or parts[-1] > 1:
        w = Fraction(1)
        for b in parts:
            w *= Fraction(b - 1, b + 1)
        out.append((l, w))
    return out


def strict_transition(lam, big) -> Fraction:
    """Coherent up weight 2^(1 - dl) g^big / ((n+1) g^lam)."""
    lam, big = as_strict(lam), as_strict(big)
    dl = len(big) - len(lam)
    return Fraction(2) ** (1 - dl) * Fraction(g_product_formula(big), (lam.n + 1) * g_product_formula(lam))


def strict_cotransition(lam, big) -> Fraction:
    """Coherent down weight g^lam / g^big."""
    return Fraction(g_product_formula(lam), g_product_formula(big))


def strict_growth_sample(n: int, rng, exact_limit: int = 300) -> StrictPartition:
    """Sample the strict Plancherel measure of size n by the growth process.

    rng is a numpy Generator.  Up to size exact_limit the weights are exact
    rationals (compared against a uniform float); above it they are computed
    in log space with floats.
    """
    import numpy as np

    parts: list[int] = []
    for size in range(n):
        if size < exact_limit:
            opts = strict_growth_options(parts)
            rows = [r for r, _ in opts]
            cum = np.cumsum([float(w) for _, w in opts])
        else:
            rows, logw = _strict_log_weights(parts)
            w = np.exp(logw - logw.max())
            cum = np.cumsum(w)
        u = rng.random() * cum[-1]
        r = rows[min(int(np.searchsorted(cum, u, side="right")), len(rows) - 1)]
        if r == len(parts):
            parts.append(1)
        else:
            parts[r] += 1
    return StrictPartition(tuple(parts))


def _strict_log_weights(parts: list[int]):
    import numpy as np

    arr = np.asarray(parts, dtype=float)
    l = len(parts)
    rows = [r for r in range(l) if r == 0 or parts[r - 1] > parts[r] + 1]
    logs = []
    if rows:
        A = arr[rows][:, None]
        B = arr[None, :]
        with np.errstate(divide="ignore", invalid="ignore"):
            M = np.log(np.abs(A + 1 - B)) + np.log(A + B) - np.log(np.abs(A - B)) - np.log(A + 1 + B)
        M[np.arange(len(rows)), rows] = 0.0
        logs = list(np.log(2 / (arr[rows] + 1)) + M.sum(axis=1))
    if l == 0 or parts[-1] > 1:
        rows.append(l)
        logs.append(float(np.sum(np.log(arr - 1) - np.log(arr + 1))) if l else 0.0)
    return rows, np.asarray(logs)


# ------------------------------------------------ multirectangular coordinates


@dataclass(frozen=True)
class MultiRect:
    """lambda = p x q: block i is the run q_i, q_i - 1, ..., q_i - p_i + 1."""

    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self):
        if len(self.p) != len(self.q):
            raise ValueError("p and q must have equal length")
        for i, (p, q) in enumerate(zip(self.p, self.q)):
            if p < 1 or q < p:
                raise ValueError("need 1 <= p_i <= q_i")
            if i + 1 < len(self.q) and self.q[i + 1] > q - p:
                raise ValueError("need q_{i+1} <= q_i - p_i")


def to_multirect(lam) -> MultiRect:
    """Maximal runs of consecutive parts."""
    parts = as_strict(lam).parts
    p, q = [], []
    for v in parts:
        if q and q[-1] - p[-1] == v:
            p[-1] += 1
        else:
            q.append(v)
            p.append(1)
    return MultiRect(tuple(p), tuple(q))


def from_multirect(mr: MultiRect) -> StrictPartition:
    parts = []
    for p, q in zip(mr.p, mr.q):
        parts.extend(range(q, q - p, -1))
    return StrictPartition(tuple(parts))


@dataclass(frozen=True)
class DoubleDiagram:
    """Extrema 0 = x_0 < x_1 < ... < x_m and y_1 < ... < y_m (positive side)."""

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    def minima(self) -> list[Fraction]:
        return [-v for v in reversed(self.x[1:])] + list(self.x)

    def maxima(self) -> list[Fraction]:
        return [-v for v in reversed(self.y)] + list(self.y)

    def interlaces(self) -> bool:
        mins, maxs = self.minima(), self.maxima()
        seq = [mins[0]]
        for a, b in zip(maxs, mins[1:]):
            seq += [a, b]
        return all(s < t for s, t in zip(seq, seq[1:]))

    def profile(self, scale: float = 1.0) -> Profile:
        return profile_from_extrema(self.minima(), self.maxima(), scale)


def double_diagram(lam) -> DoubleDiagram:
    mr = to_multirect(lam)
    m = len(mr.p)
    half = Fraction(1, 2)
    x = [Fraction(0)] + [mr.q[m - i] + half for i in range(1, m + 1)]
    y = [mr.q[m - i] - mr.p[m - i] + half for i in range(1, m + 1)]
    return DoubleDiagram(tuple(x), tuple(y))


def double_diagram_profile(lam, rescale: bool = False) -> Profile:
    """Profile of D(lambda); rescaled by sqrt(2n) so that its area matches Omega."""
    lam = as_strict(lam)
    scale = math.sqrt(2 * lam.n) if rescale and lam.n else 1.0
    return double_diagram(lam).profile(scale)


def spin_transition_measure(lam) -> DiscreteMeasure:
    """Transition measure of the double diagram: atoms at 0 and +-x_i."""
    dd = double_diagram(lam)
    xs, ys = dd.x[1:], dd.y
    mu0 = Fraction(1)
    for x, y in zip(xs, ys):
        mu0 *= y * y / (x * x)
    atoms = {Fraction(0): mu0}
    for i, x in enumerate(xs):
        num = Fraction(1)
        for y in ys:
            num *= x * x - y * y
        den = 2 * x * x
        for k, xk in enumerate(xs):
            if k != i:
                den *= x * x - xk * xk
        atoms[x] = num / den
        atoms[-x] = num / den
    return DiscreteMeasure(tuple(sorted(atoms.items())))


def double_diagram_cauchy(lam, z) -> Fraction:
    """(1/z) prod (z^2 - y^2) / (z^2 - x^2)."""
    dd = double_diagram(lam)
    z = Fraction(z)
    val = 1 / z
    for x, y in zip(dd.x[1:], dd.y):
        val *= (z * z - y * y) / (z * z - x * x)
    return val


# -------------------------------------------------------- spin characters


def _check_odd(k: int):
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be a positive odd integer")


def _pole_sum(k: int, parts: Sequence) -> Fraction:
    total = Fraction(0)
    for i, a in enumerate(parts):
        term = Fraction(1)
        for r in range(k):
            term *= a - r
        if term == 0:
            continue
        for j, b in enumerate(parts):
            if j != i:
                term *= Fraction((a - b - k) * (a + b), (a - b) * (a + b - k))
        total += term
    return total


def spin_p_sharp_explicit(k: int, lam) -> Fraction:
    """Pole-sum formula for the spin normalized character p~#_k.

    When two parts sum to k the summands are singular though the sum is a
    polynomial in the parts; then the parts are shifted by t*(i+1) and the
    value at t = 0 is recovered by exact interpolation.
    """
    _check_odd(k)
    lam = as_strict(lam)
    if k > lam.n:
        return Fraction(0)
    parts = lam.parts
    if not any(a + b == k for i, a in enumerate(parts) for b in parts[i + 1:]):
        return _pole_sum(k, parts)
    ts = [Fraction(1, 997 + 13 * j) for j in range(k + 3)]
    vals = [_pole_sum(k, [a + t * (i + 1) for i, a in enumerate(parts)]) for t in ts]
    total = Fraction(0)
    for j, (tj, vj) in enumerate(zip(ts, vals)):
        w = vj
        for m, tm in enumerate(ts):
            if m != j:
                w *= tm / (tm - tj)
        total += w
    return total


def _prefactor(k: int, low: int, zero=0) -> TruncatedSeries:
    """(2z - k)(z - 1)^{falling k-1} as a truncated series."""
    ff = list(falling_factorial_int(1, k - 1))
    coeffs = [zero + 0] * (k + 1)
    for i, c in enumerate(ff):  # c multiplies z^(k-1-i)
        coeffs[i] = coeffs[i] + 2 * c
        coeffs[i + 1] = coeffs[i + 1] - k * c
    return TruncatedSeries.polynomial(coeffs, zero=zero, low=low)


def _ratio_series(num: list, den: list, low: int, zero=0) -> TruncatedSeries:
    """num(z)/den(z) for monic polynomials of equal degree, to order z^low."""
    deg = len(num) - 1
    N = TruncatedSeries.polynomial(num, zero=zero, low=deg + low)
    D = TruncatedSeries.polynomial(den, zero=zero, low=deg + low)
    return N * D.inverse()


def psi_series_numeric(k: int, parts: Sequence[int]) -> TruncatedSeries:
    """psi_k(z; lambda) for numeric parts, exact down to z^-1."""
    low = -1
    s = _prefactor(k, low - k)
    ratio = TruncatedSeries(0, [1], low=-(k + 1))
    for a in parts:
        num = _mul_polys([z_minus(-a), z_minus(k + a)])
        den = _mul_polys([z_minus(a), z_minus(k - a)])
        ratio = ratio * _ratio_series(num, den, -(k + 1))
    return s * ratio


def z_minus(a) -> list:
    return [1, -a]


def _mul_polys(polys: Sequence[list], zero=0) -> list:
    out = [zero + 1]
    for p in polys:
        new = [zero] * (len(out) + len(p) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(p):
                new[i + j] = new[i + j] + a * b
        out = new
    return out


def spin_p_sharp_series(k: int, lam) -> Fraction:
    """[z^-1] of -psi_k/(4k); k even allowed here (gives 0)."""
    if k < 1:
        raise ValueError("k must be positive")
    lam = as_strict(lam)
    psi = psi_series_numeric(k, lam.parts)
    return Fraction(-psi.coefficient(-1)) / (4 * k)


# -------------------------------------------- multirectangular polynomials F_k


def multirect_names(m: int) -> tuple[str, ...]:
    if m == 1:
        return ("p", "q")
    return tuple(f"p{i}" for i in range(1, m + 1)) + tuple(f"q{i}" for i in range(1, m + 1))


def _psi_poly_series(k: int, m: int, extra_half: bool = False):
    """psi_k(z; p x q) with MultivarPoly coefficients, exact down to z^-1."""
    names = multirect_names(m)
    vars_ = poly_ring(names)
    ps, qs = vars_[:m], vars_[m:]
    zero = MultivarPoly(names)
    low = -(k + 1)
    ratio = TruncatedSeries(0, [zero + 1], low=low, zero=zero)
    for p, q in zip(ps, qs):
        num = _mul_polys([falling_factorial_poly(q + 1, k, zero), falling_factorial_poly(-q, k, zero)], zero)
        den = _mul_polys([falling_factorial_poly(q - p + 1, k, zero), falling_factorial_poly(p - q, k, zero)], zero)
        ratio = ratio * _ratio_series(num, den, low, zero)
    return _prefactor(k, -1 - k, zero) * ratio, names


@lru_cache(maxsize=64)
def stanley_poly(k: int, m: int, allow_even: bool = False) -> MultivarPoly:
    """F_k(p_1..p_m; q_1..q_m) = [z^-1] of -psi_k(z; p x q) / (4k)."""
    if k < 1 or m < 1:
        raise ValueError("need k, m >= 1")
    if k % 2 == 0 and not allow_even:
        raise ValueError("k must be odd (even k is only reachable through the vanishing check)")
    if k * m > SERIES_BUDGET:
        raise ValueError(f"series budget exceeded: k*m = {k * m} > {SERIES_BUDGET}")
    psi, names = _psi_poly_series(k, m)
    return psi.coefficient(-1) * Fraction(-1, 4 * k)


def psi_functional_equation_holds(k: int, m: int) -> bool:
    """(-1)^k psi_k(z) == psi_k(k - z) as rational functions of z over Q[p, q].

    Both sides are compared as reduced fractions: numerators and
    denominators are products of linear factors in z, so the check is done
    on the full polynomial numerator times the other denominator.
    """
    names = multirect_names(m)
    vars_ = poly_ring(names)
    ps, qs = vars_[:m], vars_[m:]
    zero = MultivarPoly(names)

    def factors(sign_z: int, shift):
        # each linear factor (sign_z*z + shift - a) as [coef_z, const]
        num, den = [], []
        num.append([2 * sign_z, zero + 2 * shift - k])
        for i in range(1, k):
            num.append([sign_z, zero + shift - i])
        for p, q in zip(ps, qs):
            for i in range(k):
                num.append([sign_z, shift - q - 1 - i])
                num.append([sign_z, shift + q - i])
                den.append([sign_z, shift - q + p - 1 - i])
                den.append([sign_z, shift + q - p - i])
        return num, den

    def expand(lin):
        return _mul_polys([[zero + a, b] for a, b in lin], zero)

    n1, d1 = factors(1, 0)
    n2, d2 = factors(-1, k)
    lhs = _mul_polys([expand(n1), expand(d2)], zero)
    rhs = _mul_polys([expand(n2), expand(d1)], zero)
    sign = -1 if k % 2 else 1
    return all((sign * a - b).is_zero() for a, b in zip(lhs, rhs)) and len(lhs) == len(rhs)


def stanley_eval(k: int, lam) -> Fraction:
    mr = to_multirect(lam)
    poly = stanley_poly(k, len(mr.p))
    return poly.evaluate(list(mr.p) + list(mr.q))


def stanley_eval_consistency(k: int, lam) -> bool:
    return stanley_eval(k, lam) == spin_p_sharp_explicit(k, lam)


def catalan_rhs(k: int, sign: int = 1) -> MultivarPoly:
    """sign * ((-1)^(j+1) / 2) Cat(j-1) (p + j)^{falling 2j} with k = 2j - 1."""
    _check_odd(k)
    j = (k + 1) // 2
    (p,) = poly_ring(("p",))
    rhs = MultivarPoly.constant(("p",), 1)
    for i in range(2 * j):
        rhs = rhs * (p + (j - i))
    return rhs * Fraction(sign * (-1) ** (j + 1) * catalan(j - 1), 2)


def catalan_q_equals_p(k: int) -> tuple[MultivarPoly, MultivarPoly]:
    """(F_k(p; p), ((-1)^(j+1) / 2) Cat(j-1) (p + j)^{falling 2j}) with k = 2j - 1.

    The sign is pinned by F_1(p; p) = p(p + 1)/2, i.e. by the single-row
    value F_1 = n at p = q = 1.
    """
    _check_odd(k)
    (p,) = poly_ring(("p",))
    return stanley_poly(k, 1).substitute([p, p]), catalan_rhs(k)


def coefficients_in_half_integers(poly: MultivarPoly) -> bool:
    return all((2 * Fraction(c)).denominator == 1 for _, c in poly.items())


def sign_flip_positivity(k: int, m: int) -> list[tuple[tuple[int, ...], Fraction]]:
    """Monomials of -F_k(-p; q) with a negative coefficient."""
    poly = stanley_poly(k, m)
    flipped = -poly.scale_variables([-1] * m + [1] * m)
    return flipped.negative_terms()


# ------------------------------------------------------------- leading terms


def leading_term(k: int, m: int) -> MultivarPoly:
    """Homogeneous part of degree k + 1 of F_k."""
    return stanley_poly(k, m).homogeneous_part(k + 1)


def _power_series_names(m):
    names = multirect_names(m)
    vars_ = poly_ring(names)
    return names, vars_[:m], vars_[m:], MultivarPoly(names)


def _even_geometric(c, order: int, zero) -> list:
    """1/(1 - c t^2) as coefficients t^0..t^order."""
    out = [zero] * (order + 1)
    term = zero + 1
    for e in range(0, order + 1, 2):
        out[e] = term
        term = term * c
    return out


def _ps_mul(a: list, b: list, order: int, zero) -> list:
    out = [zero] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if not x:
            continue
        for j in range(0, order + 1 - i):
            y = b[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def _ps_inverse(a: list, order: int, zero) -> list:
    inv0 = Fraction(1) / Fraction(a[0].constant_term() if isinstance(a[0], MultivarPoly) else a[0])
    out = []
    for i in range(order + 1):
        s = zero + (1 if i == 0 else 0)
        for j in range(1, i + 1):
            if j < len(a) and a[j] and out[i - j]:
                s = s - a[j] * out[i - j]
        out.append(s * inv0)
    return out


def _ps_compose(outer: list, inner: list, order: int, zero) -> list:
    """outer(inner(t)) for inner with zero constant term."""
    out = [zero] * (order + 1)
    power = [zero + 1] + [zero] * order
    for c in outer[: order + 1]:
        if c:
            out = [o + c * p for o, p in zip(out, power)]
        power = _ps_mul(power, inner, order, zero)
    return out


def leading_term_inverse_path(k: int, m: int) -> MultivarPoly:
    """L_k = (1/2) [t^k] 1 / G^{<-1>}(t) with G(t) = t / M(t),
    M(t) = prod (1 - t^2 q^2) / (1 - t^2 (q - p)^2).

    The inverse H solves H = t M(H); it is found by fixed-point iteration.
    """
    names, ps, qs, zero = _power_series_names(m)
    order = k + 2
    # M as a power series in t
    Mser = [zero + 1] + [zero] * order
    for p, q in zip(ps, qs):
        num = [zero + 1] + [zero] * order
        num[2] = -(q * q)
        den_inv = _even_geometric((q - p) * (q - p), order, zero)
        Mser = _ps_mul(Mser, _ps_mul(num, den_inv, order, zero), order, zero)
    H = [zero, zero + 1] + [zero] * (order - 1)
    for _ in range(order + 1):
        MH = _ps_compose(Mser, H, order, zero)
        H = [zero] + MH[:order]
    # 1/H = (1/t) * 1/(H/t)
    h_over_t = H[1:] + [zero]
    inv = _ps_inverse(h_over_t, order, zero)
    # coefficient of t^k in 1/H is inv[k + 1]
    return inv[k + 1] * Fraction(1, 2)


def leading_term_direct_path(k: int, m: int) -> MultivarPoly:
    """(1/2k) [w^{k+1}] prod (1 + (p^2 + 2qp) sum_j (q+p)^{2j-2} w^{2j})^k.

    This expansion equals -L_k(-p; q).
    """
    names, ps, qs, zero = _power_series_names(m)
    order = k + 1
    total = [zero + 1] + [zero] * order
    for p, q in zip(ps, qs):
        base = [zero + 1] + [zero] * order
        a = p * p + 2 * q * p
        r = (q + p) * (q + p)
        term = a
        for e in range(2, order + 1, 2):
            base[e] = term
            term = term * r
        powk = [zero + 1] + [zero] * order
        for _ in range(k):
            powk = _ps_mul(powk, base, order, zero)
        total = _ps_mul(total, powk, order, zero)
    return total[order] * Fraction(1, 2 * k)


def free_cumulant_poly(k1: int, m: int) -> MultivarPoly:
    """R_{k1}(p x q) = (1/2) R_{k1}(transition measure of D(lambda)),
    i.e. -(1/(2(k1-1))) [z^-1] K(z)^{-(k1-1)}."""
    k = k1 - 1
    names, ps, qs, zero = _power_series_names(m)
    low = -(k + 1)
    half = Fraction(1, 2)
    ratio = TruncatedSeries(0, [zero + 1], low=low, zero=zero)
    for p, q in zip(ps, qs):
        x = q + half
        y = q - p + half
        num = _mul_polys([[zero + 1, -x], [zero + 1, x]], zero)
        den = _mul_polys([[zero + 1, -y], [zero + 1, y]], zero)
        r = _ratio_series(num, den, low, zero)
        ratio = ratio * (r ** k)
    zk = TruncatedSeries.polynomial([zero + 1] + [zero] * k, zero=zero, low=-1)
    full = zk * ratio
    return full.coefficient(-1) * Fraction(-1, 2 * k)


def free_cumulants_of_measure(meas: DiscreteMeasure, kmax: int) -> list[Fraction]:
    """Free cumulants R_1..R_kmax from moments via the moment-cumulant recursion
    over non-crossing partitions (first-block decomposition)."""
    moments = [meas.moment(j) for j in range(kmax + 1)]
    R = [Fraction(0)] * (kmax + 1)
    # M(z) = 1 + sum m_j z^j, and m_n = sum_{s=1}^n R_s [z^{n-s}] M(z)^s
    for nn in range(1, kmax + 1):
        acc = Fraction(0)
        for s in range(1, nn):
            acc += R[s] * _coef_power(moments, s, nn - s)
        R[nn] = moments[nn] - acc
    return R[1:]


def _coef_power(moments, s, e):
    """[z^e] of (sum_j m_j z^j)^s with m_0 = 1."""
    poly = [Fraction(1)]
    base = list(moments[: e + 1])
    for _ in range(s):
        new = [Fraction(0)] * (e + 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(base):
                if i + j <= e:
                    new[i + j] += a * b
        poly = new
    return poly[e]


def strict_to_names_values(lam) -> list[int]:
    mr = to_multirect(lam)
    return list(mr.p) + list(mr.q)
