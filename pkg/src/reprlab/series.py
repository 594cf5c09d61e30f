"""Exact multivariate polynomials and truncated expansions in descending
powers of z.

MultivarPoly packs an exponent vector into one integer (BITS bits per
variable) so that multiplying monomials is integer addition.  Coefficients
are ints or Fractions.  TruncatedSeries works over any coefficient ring that
supports +, -, * (Fractions, ints, MultivarPoly).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

BITS = 10
MASK = (1 << BITS) - 1


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > MASK:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (BITS * i)
    return key


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (BITS * i)) & MASK for i in range(nvars))


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class MultivarPoly:
    """Polynomial with exact rational coefficients in a fixed list of variables."""

    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: dict | None = None):
        self.names = tuple(names)
        self.terms = {k: _norm(v) for k, v in (terms or {}).items() if v != 0}

    # construction
    @classmethod
    def constant(cls, names, c) -> "MultivarPoly":
        return cls(names, {0: c} if c else {})

    @classmethod
    def variable(cls, names, name_or_index) -> "MultivarPoly":
        names = tuple(names)
        i = names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return cls(names, {1 << (BITS * i): 1})

    @classmethod
    def from_exponents(cls, names, items: Iterable[tuple[Sequence[int], object]]) -> "MultivarPoly":
        terms: dict = {}
        for exps, c in items:
            k = _pack(exps)
            terms[k] = terms.get(k, 0) + c
        return cls(names, terms)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def _coerce(self, other) -> "MultivarPoly":
        if isinstance(other, MultivarPoly):
            if other.names != self.names:
                raise ValueError("variable lists differ")
            return other
        return MultivarPoly.constant(self.names, other)

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            s = t.get(k, 0) + v
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return MultivarPoly(self.names, t)

    __radd__ = __add__

    def __neg__(self):
        return MultivarPoly(self.names, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultivarPoly):
            if other == 0:
                return MultivarPoly(self.names)
            return MultivarPoly(self.names, {k: v * other for k, v in self.terms.items()})
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        t: dict = {}
        get = t.get
        for kb, vb in b.items():
            for ka, va in a.items():
                k = ka + kb
                t[k] = get(k, 0) + va * vb
        return MultivarPoly(self.names, t)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, MultivarPoly):
            if not c.is_constant():
                raise ZeroDivisionError("can only divide by a nonzero constant")
            c = c.constant_term()
        c = Fraction(c)
        return MultivarPoly(self.names, {k: Fraction(v) / c for k, v in self.terms.items()})

    def __pow__(self, e: int):
        out = MultivarPoly.constant(self.names, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MultivarPoly):
            return self.names == other.names and self.terms == other.terms
        return self.terms == MultivarPoly.constant(self.names, other).terms

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(k == 0 for k in self.terms)

    def constant_term(self):
        return self.terms.get(0, 0)

    def items(self) -> list[tuple[tuple[int, ...], object]]:
        return [(_unpack(k, self.nvars), v) for k, v in self.terms.items()]

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(_pack(exps), 0)

    def degree(self) -> int:
        return max((sum(e) for e, _ in self.items()), default=-1)

    def homogeneous_part(self, deg: int) -> "MultivarPoly":
        return MultivarPoly(self.names, {k: v for k, v in self.terms.items()
                                         if sum(_unpack(k, self.nvars)) == deg})

    def evaluate(self, values: Sequence) -> Fraction:
        total = Fraction(0)
        for exps, c in self.items():
            term = Fraction(c)
            for v, e in zip(values, exps):
                if e:
                    term *= Fraction(v) ** e
            total += term
        return total

    def substitute(self, images: Sequence["MultivarPoly"]) -> "MultivarPoly":
        """Replace variable i by images[i] (all in one common variable list)."""
        names = images[0].names
        out = MultivarPoly(names)
        cache: dict = {}
        for exps, c in self.items():
            term = MultivarPoly.constant(names, c)
            for i, e in enumerate(exps):
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = images[i] ** e
                    term = term * cache[(i, e)]
            out = out + term
        return out

    def scale_variables(self, signs: Sequence) -> "MultivarPoly":
        """Substitute x_i -> signs[i] * x_i."""
        t = {}
        for exps, c in self.items():
            f = c
            for s, e in zip(signs, exps):
                if e:
                    f = f * s ** e
            t[_pack(exps)] = f
        return MultivarPoly(self.names, t)

    def negative_terms(self) -> list[tuple[tuple[int, ...], object]]:
        return sorted(((e, c) for e, c in self.items() if c < 0), key=_sort_key)

    # formatting
    def sorted_items(self):
        return sorted(self.items(), key=_sort_key)

    def to_string(self) -> str:
        """Canonical text: monomials by decreasing total degree, then
        lexicographically decreasing exponents; rational coefficients."""
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_items():
            mono = "*".join(
                (n if e == 1 else f"{n}^{e}") for n, e in zip(self.names, exps) if e
            )
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                coef = "" if a == 1 else f"{a}*"
                body = coef + mono
            else:
                body = str(a)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = to_string

    def __repr__(self):
        return f"MultivarPoly({self.to_string()!r})"


def _sort_key(item):
    exps, _ = item
    return (-sum(exps), tuple(-e for e in exps))


def poly_ring(names: Sequence[str]):
    """Return the variables of a polynomial ring as MultivarPoly objects."""
    return tuple(MultivarPoly.variable(names, i) for i in range(len(names)))


class TruncatedSeries:
    """Expansion sum_{j=low}^{top} c_j z^j, exact for all powers >= low.

    coeffs[0] is the coefficient of z^top, coeffs[i] that of z^(top - i).
    Terms below z^low are unknown (truncated).
    """

    __slots__ = ("top", "low", "coeffs", "zero")

    def __init__(self, top: int, coeffs: Sequence, low: int | None = None, zero=0):
        self.top = top
        self.zero = zero
        coeffs = list(coeffs)
        if low is None:
            low = top - len(coeffs) + 1
        keep = top - low + 1
        if keep < 0:
            keep = 0
        coeffs = coeffs[:keep] + [zero] * (keep - len(coeffs))
        self.coeffs = coeffs
        self.low = low

    @classmethod
    def polynomial(cls, coeffs_high_to_low: Sequence, zero=0, low: int | None = None) -> "TruncatedSeries":
        """Polynomial in z given by coefficients from z^deg down to z^0."""
        deg = len(coeffs_high_to_low) - 1
        s = cls(deg, coeffs_high_to_low, low=0, zero=zero)
        if low is not None:
            s = s.truncate(low)
        return s

    def truncate(self, low: int) -> "TruncatedSeries":
        if low >= self.low:
            return TruncatedSeries(self.top, self.coeffs, low=max(low, self.low), zero=self.zero)
        # a polynomial is exact below its stated low only if it was built as one;
        # extend with zeros (caller asserts exactness)
        return TruncatedSeries(self.top, self.coeffs + [self.zero] * (self.low - low), low=low, zero=self.zero)

    def coefficient(self, j: int):
        if j < self.low:
            raise ValueError(f"z^{j} lies below the truncation order z^{self.low}")
        if j > self.top:
            return self.zero
        return self.coeffs[self.top - j]

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.top, [c * other for c in self.coeffs], self.low, self.zero)
        top = self.top + other.top
        low = max(self.low + other.top, other.low + self.top)
        n = top - low + 1
        out = [self.zero] * max(n, 0)
        a, b = self.coeffs, other.coeffs
        for i, ca in enumerate(a):
            if i >= n:
                break
            if _is_zero(ca):
                continue
            for j in range(min(len(b), n - i)):
                cb = b[j]
                if _is_zero(cb):
                    continue
                out[i + j] = out[i + j] + ca * cb
        return TruncatedSeries(top, out, low, self.zero)

    __rmul__ = __mul__

    def _align(self, other: "TruncatedSeries"):
        top = max(self.top, other.top)
        low = max(self.low, other.low)
        a = [self.coefficient(j) if j >= self.low else self.zero for j in range(top, low - 1, -1)]
        b = [other.coefficient(j) if j >= other.low else other.zero for j in range(top, low - 1, -1)]
        return top, low, a, b

    def __add__(self, other):
        top, low, a, b = self._align(other)
        return TruncatedSeries(top, [x + y for x, y in zip(a, b)], low, self.zero)

    def __sub__(self, other):
        top, low, a, b = self._align(other)
        return TruncatedSeries(top, [x - y for x, y in zip(a, b)], low, self.zero)

    def __neg__(self):
        return TruncatedSeries(self.top, [-c for c in self.coeffs], self.low, self.zero)

    def inverse(self, low: int | None = None) -> "TruncatedSeries":
        """Multiplicative inverse; the leading coefficient must be a unit
        (a nonzero rational, or a constant polynomial)."""
        c0 = self.coeffs[0]
        if isinstance(c0, MultivarPoly):
            if not c0.is_constant() or c0.is_zero():
                raise ZeroDivisionError("leading coefficient is not invertible")
            inv0 = Fraction(1) / Fraction(c0.constant_term())
        else:
            if c0 == 0:
                raise ZeroDivisionError("leading coefficient is zero")
            inv0 = Fraction(1) / Fraction(c0)
        rel = self.top - self.low  # relative precision available
        if low is not None:
            rel = min(rel, -self.top - low)
        n = rel + 1
        a = self.coeffs
        out = []
        for i in range(n):
            s = self.zero if i else self.zero + 1
            for j in range(1, min(i, len(a) - 1) + 1):
                if _is_zero(a[j]) or _is_zero(out[i - j]):
                    continue
                s = s - a[j] * out[i - j]
            out.append(_scale(s, inv0))
        return TruncatedSeries(-self.top, out, -self.top - n + 1, self.zero)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, e: int):
        out = TruncatedSeries(0, [self.zero + 1], low=self.low - self.top, zero=self.zero)
        out = out.truncate(min(0, self.low - self.top))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self):
        return f"TruncatedSeries(top={self.top}, low={self.low}, coeffs={self.coeffs!r})"


def _is_zero(c) -> bool:
    if isinstance(c, MultivarPoly):
        return not c.terms
    return c == 0


def _scale(c, f):
    if f == 1:
        return c
    return c * f


def falling_factorial_poly(a, k: int, zero=0) -> list:
    """Coefficients (z^k down to z^0) of (z - a)^{falling k} = prod_{i<k} (z - a - i)."""
    coeffs = [zero + 1]
    for i in range(k):
        root = a + i
        new = coeffs + [zero]
        for j in range(1, len(new)):
            new[j] = new[j] - coeffs[j - 1] * root
        coeffs = new
    return coeffs


@lru_cache(maxsize=256)
def falling_factorial_int(a: int, k: int) -> tuple:
    """Tuple version of falling_factorial_poly for integer shifts."""
    return tuple(falling_factorial_poly(a, k))


def falling(x, k: int):
    """Numeric falling factorial x(x-1)...(x-k+1)."""
    out = 1
    for i in range(k):
        out *= x - i
    return out


def catalan(j):
    """Catalan number; zero for non-integral or negative index."""
    if isinstance(j, Fraction):
        if j.denominator != 1:
            return 0
        j = int(j)
    if j < 0:
        return 0
    c = 1
    for i in range(j):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c
