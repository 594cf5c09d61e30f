"""Integer partitions, Young diagrams, tableaux, corners, profiles and the
up/down one-step measures of the Plancherel growth process.

Contents are column minus row (box (a, b) has content b - a).  Profiles use
Russian coordinates where every box has area 2, so the unscaled profile
satisfies  integral(lambda(x) - |x|) dx = 2n.
"""

from __future__ import annotations

import math
import threading
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

# Enumeration caps: exceeding them raises CapExceeded instead of truncating.
SYT_CAP = 12
PARTITION_CAP = 40


class CapExceeded(ValueError):
    """Raised when an exhaustive enumeration would exceed a configured cap."""


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def part(self, i: int) -> int:
        """lambda_i with 1-based i; zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def multiplicity(self, k: int) -> int:
        return self.parts.count(k)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """Boxes (row, column), both 1-based, row by row."""
        for a, p in enumerate(self.parts, start=1):
            for b in range(1, p + 1):
                yield (a, b)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= self.part(i) for i, o in enumerate(other.parts, 1))

    def add_box(self, row: int) -> "Partition":
        """Add a box at the end of the 1-based row (row = len+1 opens a new row)."""
        parts = list(self.parts)
        if row == len(parts) + 1:
            parts.append(1)
        else:
            parts[row - 1] += 1
        return Partition(tuple(parts))

    def remove_box(self, row: int) -> "Partition":
        parts = list(self.parts)
        parts[row - 1] -= 1
        if parts[row - 1] == 0:
            parts.pop(row - 1)
        return Partition(tuple(parts))

    def is_strict(self) -> bool:
        return all(self.parts[i] > self.parts[i + 1] for i in range(len(self.parts) - 1))


def parse_partition(text: str) -> Partition:
    """Parse '3,2,2' (also accepts '3 2 2', '(3,2,2)', '' or '0' for the empty partition)."""
    s = text.strip().strip("()[]").replace(" ", ",")
    if s in ("", "0", "-"):
        return Partition(())
    parts = sorted((int(t) for t in s.split(",") if t != ""), reverse=True)
    return Partition(tuple(parts))


def as_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    if isinstance(obj, str):
        return parse_partition(obj)
    return Partition(tuple(obj))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > PARTITION_CAP:
        raise CapExceeded(f"partition enumeration cap {PARTITION_CAP} exceeded (n={n})")
    return [Partition(p) for p in _partitions(n, n)]


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def hook_lengths(lam: Partition) -> dict[tuple[int, int], int]:
    """Hook length arm + leg + 1 of every box (1-based coordinates)."""
    conj = lam.conjugate()
    return {
        (a, b): (lam.part(a) - b) + (conj.part(b) - a) + 1
        for a, b in lam.boxes()
    }


@lru_cache(maxsize=4096)
def _dimension(parts: tuple[int, ...]) -> int:
    lam = Partition(parts)
    prod = 1
    for h in hook_lengths(lam).values():
        prod *= h
    return math.factorial(lam.n) // prod


def dimension(lam) -> int:
    """Number of standard tableaux of shape lam, by the hook length formula."""
    return _dimension(as_partition(lam).parts)


def log_dimension(parts: Sequence[int]) -> float:
    """Natural log of the dimension via first-column hook lengths (beta numbers)."""
    l = len(parts)
    n = sum(parts)
    beta = [parts[i] + l - 1 - i for i in range(l)]
    s = math.lgamma(n + 1)
    for i in range(l):
        s -= math.lgamma(beta[i] + 1)
        for j in range(i + 1, l):
            s += math.log(beta[i] - beta[j])
    return s


@dataclass(frozen=True)
class StandardTableau:
    """A standard filling; rows[a] lists the entries of row a + 1."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    _where: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        where = {}
        for a, row in enumerate(self.rows, start=1):
            for b, v in enumerate(row, start=1):
                where[v] = (a, b)
        object.__setattr__(self, "_where", where)

    def position(self, k: int) -> tuple[int, int]:
        return self._where[k]

    def row_of(self, k: int) -> int:
        return self._where[k][0]

    def content(self, k: int) -> int:
        a, b = self._where[k]
        return b - a

    def axial_distance(self, k: int) -> int:
        """d_k(T) = c_{k+1}(T) - c_k(T)."""
        return self.content(k + 1) - self.content(k)

    def swap(self, k: int) -> "StandardTableau | None":
        """The tableau with k and k+1 exchanged, or None if not standard."""
        (a1, b1), (a2, b2) = self._where[k], self._where[k + 1]
        if a1 == a2 or b1 == b2:
            return None
        rows = [list(r) for r in self.rows]
        rows[a1 - 1][b1 - 1] = k + 1
        rows[a2 - 1][b2 - 1] = k
        return StandardTableau(self.shape, tuple(tuple(r) for r in rows))

    def is_standard(self) -> bool:
        rows = self.rows
        for a, row in enumerate(rows):
            if any(row[b] >= row[b + 1] for b in range(len(row) - 1)):
                return False
            if a > 0 and any(rows[a - 1][b] >= row[b] for b in range(len(row))):
                return False
        return sorted(v for r in rows for v in r) == list(range(1, self.shape.n + 1))

    def restrict(self) -> "StandardTableau":
        """Remove the largest entry."""
        n = self.shape.n
        a, _ = self._where[n]
        rows = [list(r) for r in self.rows]
        rows[a - 1].pop()
        if not rows[a - 1]:
            rows.pop(a - 1)
        return StandardTableau(self.shape.remove_box(a), tuple(tuple(r) for r in rows))

    def __str__(self) -> str:
        return "/".join("".join(map(str, r)) if max(self.shape.parts, default=0) < 10 else
                        " ".join(map(str, r)) for r in self.rows)


_syt_lock = threading.Lock()
_syt_cache: dict[tuple[int, ...], tuple[StandardTableau, ...]] = {}


def enumerate_syt(lam) -> tuple[StandardTableau, ...]:
    """All standard tableaux of shape lam in last-letter order.

    Tableaux are compared by the row of n, then of n-1, ...; a lower row
    comes first.  Built by recursing on the removable corners in order of
    increasing content, which yields the order directly.  The memo table is
    guarded by a lock.
    """
    lam = as_partition(lam)
    if lam.n > SYT_CAP:
        raise CapExceeded(f"SYT enumeration cap {SYT_CAP} exceeded (n={lam.n})")
    return _enumerate_syt(lam)


def _enumerate_syt(lam: Partition) -> tuple[StandardTableau, ...]:
    with _syt_lock:
        hit = _syt_cache.get(lam.parts)
    if hit is not None:
        return hit
    n = lam.n
    if n == 0:
        out = (StandardTableau(lam, ()),)
    else:
        out = []
        for y, row, mu in removable_corners(lam):
            for t in _enumerate_syt(mu):
                rows = [list(r) for r in t.rows]
                if row == len(rows) + 1:
                    rows.append([n])
                else:
                    rows[row - 1].append(n)
                out.append(StandardTableau(lam, tuple(tuple(r) for r in rows)))
        out = tuple(out)
    with _syt_lock:
        _syt_cache[lam.parts] = out
    return out


def last_letter_key(t: StandardTableau) -> tuple[int, ...]:
    """Sort key realising last-letter order."""
    return tuple(-t.row_of(k) for k in range(t.shape.n, 0, -1))


def count_syt_backtracking(lam) -> int:
    """Independent count of standard fillings by adding n, n-1, ... at corners."""
    lam = as_partition(lam)

    @lru_cache(maxsize=None)
    def count(parts):
        if not parts:
            return 1
        total = 0
        for i in range(len(parts)):
            if i == len(parts) - 1 or parts[i] > parts[i + 1]:
                nxt = list(parts)
                nxt[i] -= 1
                if nxt[i] == 0:
                    nxt.pop()
                total += count(tuple(nxt))
        return total

    return count(lam.parts)


def removable_corners(lam: Partition) -> list[tuple[int, int, Partition]]:
    """(content, row, lam minus that box) for outer corners, by increasing content."""
    out = []
    parts = lam.parts
    for i in range(len(parts) - 1, -1, -1):
        if i == len(parts) - 1 or parts[i] > parts[i + 1]:
            out.append((parts[i] - (i + 1), i + 1, lam.remove_box(i + 1)))
    return out


def addable_corners(lam: Partition) -> list[tuple[int, int, Partition]]:
    """(content, row, lam plus that box) for inner corners, by increasing content."""
    out = []
    parts = lam.parts
    l = len(parts)
    out.append((-l, l + 1, lam.add_box(l + 1)))
    for i in range(l - 1, -1, -1):
        if i == 0 or parts[i - 1] > parts[i]:
            out.append((parts[i] + 1 - (i + 1), i + 1, lam.add_box(i + 1)))
    return out


@dataclass(frozen=True)
class CornerData:
    """Interlacing corner contents x_1 < y_1 < x_2 < ... < y_d < x_{d+1}."""

    outer_contents: tuple[int, ...]
    inner_contents: tuple[int, ...]
    outer_rows: tuple[int, ...] = ()
    inner_rows: tuple[int, ...] = ()

    def interlaces(self) -> bool:
        xs, ys = self.inner_contents, self.outer_contents
        if len(xs) != len(ys) + 1:
            return False
        seq = [xs[0]]
        for y, x in zip(ys, xs[1:]):
            seq += [y, x]
        return all(seq[i] < seq[i + 1] for i in range(len(seq) - 1))


def corners(lam) -> CornerData:
    lam = as_partition(lam)
    rem = removable_corners(lam)
    add = addable_corners(lam)
    return CornerData(
        outer_contents=tuple(c for c, _, _ in rem),
        inner_contents=tuple(c for c, _, _ in add),
        outer_rows=tuple(r for _, r, _ in rem),
        inner_rows=tuple(r for _, r, _ in add),
    )


def contents_multiset(lam) -> Counter:
    lam = as_partition(lam)
    return Counter(b - a for a, b in lam.boxes())


# ---------------------------------------------------------------- profiles


@dataclass(frozen=True)
class Profile:
    """Piecewise-linear function with slopes +-1, equal to |x| far out.

    breakpoints: the local extrema (x, value) from left to right, starting and
    ending on the graph of |x|.  scale: the profile represents
    x -> f(scale * x) / scale, where f is given by the breakpoints.
    """

    breakpoints: tuple[tuple[Fraction, Fraction], ...]
    scale: float = 1.0

    def raw(self, x):
        """Value of the unscaled profile."""
        bp = self.breakpoints
        if not bp or x <= bp[0][0] or x >= bp[-1][0]:
            return abs(x)
        xs = [p[0] for p in bp]
        i = bisect_right(xs, x) - 1
        (x0, v0), (x1, v1) = bp[i], bp[i + 1]
        slope = 1 if v1 > v0 else -1
        return v0 + slope * (x - x0)

    def __call__(self, x):
        if self.scale == 1.0:
            return self.raw(x)
        return float(self.raw(x * self.scale)) / self.scale

    def minima(self) -> list:
        bp = self.breakpoints
        return [bp[i][0] for i in range(0, len(bp), 2)]

    def maxima(self) -> list:
        bp = self.breakpoints
        return [bp[i][0] for i in range(1, len(bp), 2)]

    def area(self) -> Fraction:
        """Exact integral of (f(x) - |x|) for the unscaled profile."""
        return _integrate_profile(self.breakpoints, 0)

    def scaled_breakpoints(self) -> list[tuple[float, float]]:
        return [(float(x) / self.scale, float(v) / self.scale) for x, v in self.breakpoints]


def profile_from_extrema(minima: Sequence, maxima: Sequence, scale: float = 1.0) -> Profile:
    """Build a profile from interlacing minima and maxima contents.

    The first minimum sits on |x|; the value then alternates by the
    horizontal distance (slopes +1 then -1).
    """
    minima = [Fraction(v) for v in minima]
    maxima = [Fraction(v) for v in maxima]
    if len(minima) != len(maxima) + 1:
        raise ValueError("need one more minimum than maxima")
    pts = [(minima[0], abs(minima[0]))]
    for y, x in zip(maxima, minima[1:]):
        v = pts[-1][1] + (y - pts[-1][0])
        pts.append((y, v))
        pts.append((x, v - (x - y)))
    if pts[-1][1] != abs(pts[-1][0]):
        raise ValueError("extrema do not close up on |x|")
    return Profile(tuple(pts), scale)


def profile(lam, rescale: bool = False) -> Profile:
    """Russian-coordinate profile of lam; rescaled by sqrt(n) when asked."""
    lam = as_partition(lam)
    c = corners(lam)
    scale = math.sqrt(lam.n) if rescale and lam.n > 0 else 1.0
    return profile_from_extrema(c.inner_contents, c.outer_contents, scale)


def _integrate_profile(bp, power: int) -> Fraction:
    """Exact integral of x^power * (f(x) - |x|) over the profile support."""
    total = Fraction(0)
    for (x0, v0), (x1, v1) in zip(bp, bp[1:]):
        slope = 1 if v1 > v0 else -1
        cuts = [x0] + ([Fraction(0)] if x0 < 0 < x1 else []) + [x1]
        for a, b in zip(cuts, cuts[1:]):
            # f(x) = v0 + slope (x - x0) and |x| = s x on [a, b]
            s = 1 if a >= 0 else -1
            c0 = v0 - slope * x0
            c1 = slope - s
            p = power
            total += c0 * (b ** (p + 1) - a ** (p + 1)) / (p + 1)
            total += c1 * (b ** (p + 2) - a ** (p + 2)) / (p + 2)
    return total


def moment_pbar(lam, k: int) -> Fraction:
    """k(k-1) * integral x^(k-2) (lambda(x) - |x|)/2 dx on the unscaled profile."""
    if k < 2:
        raise ValueError("k must be at least 2")
    bp = profile(lam).breakpoints
    return k * (k - 1) * _integrate_profile(bp, k - 2) / 2


def limit_shape_omega(x: float) -> float:
    if abs(x) >= 2:
        return abs(x)
    return 2 / math.pi * (x * math.asin(x / 2) + math.sqrt(4 - x * x))


def semicircle_cdf(v: float) -> float:
    """Distribution function of the semicircle law on [-2, 2]."""
    if v <= -2:
        return 0.0
    if v >= 2:
        return 1.0
    return 0.5 + (v * math.sqrt(4 - v * v) / 4 + math.asin(v / 2)) / math.pi


def shifted_power_sum(lam, k: int) -> int:
    lam = as_partition(lam)
    if k < 1:
        raise ValueError("k must be positive")
    return sum((p - i) ** k - (-i) ** k for i, p in enumerate(lam.parts, start=1))


def generating_function(lam, z) -> Fraction:
    """phi(z; lam) = prod_i (z + i) / (z + i - lam_i)."""
    lam = as_partition(lam)
    z = Fraction(z)
    val = Fraction(1)
    for i, p in enumerate(lam.parts, start=1):
        den = z + i - p
        if den == 0:
            raise ZeroDivisionError(f"z={z} is a pole of phi")
        val *= (z + i) / den
    return val


# ------------------------------------------------------- one-step measures


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finitely supported measure; atoms sorted by location."""

    atoms: tuple[tuple[object, object], ...]

    @property
    def locations(self):
        return [a for a, _ in self.atoms]

    @property
    def weights(self):
        return [w for _, w in self.atoms]

    def total(self):
        return sum(self.weights)

    def cdf(self, v):
        return sum((w for a, w in self.atoms if a <= v), 0)

    def moment(self, k: int):
        return sum(w * a ** k for a, w in self.atoms)

    def cauchy_transform(self, z):
        return sum(w / (z - a) for a, w in self.atoms)

    def as_dict(self) -> dict:
        return {a: w for a, w in self.atoms}


def transition_measure(lam, method: str = "dimension") -> DiscreteMeasure:
    """Up-step measure: atom at each inner content x_j of weight dim(Lambda_j)/((n+1) dim lam)."""
    lam = as_partition(lam)
    add = addable_corners(lam)
    if method == "dimension":
        d0 = dimension(lam)
        atoms = [(x, Fraction(dimension(big), (lam.n + 1) * d0)) for x, _, big in add]
    elif method == "kerov":
        c = corners(lam)
        atoms = [(x, kerov_transition_weight(c.inner_contents, c.outer_contents, j))
                 for j, x in enumerate(c.inner_contents)]
    else:
        raise ValueError(f"unknown method {method!r}")
    return DiscreteMeasure(tuple(atoms))


def kerov_transition_weight(xs: Sequence[int], ys: Sequence[int], j: int) -> Fraction:
    """prod_i (x_j - y_i) / prod_{i != j} (x_j - x_i)."""
    x = xs[j]
    num = 1
    for y in ys:
        num *= x - y
    den = 1
    for i, xi in enumerate(xs):
        if i != j:
            den *= x - xi
    return Fraction(num, den)


def cotransition_measure(lam, method: str = "dimension") -> DiscreteMeasure:
    """Down-step measure: atom at each outer content y_j of weight dim(mu_j)/dim lam."""
    lam = as_partition(lam)
    if lam.n < 1:
        raise ValueError("the empty partition has no co-transition measure")
    rem = removable_corners(lam)
    if method == "dimension":
        d0 = dimension(lam)
        atoms = [(y, Fraction(dimension(mu), d0)) for y, _, mu in rem]
    elif method == "kerov":
        c = corners(lam)
        atoms = []
        for j, y in enumerate(c.outer_contents):
            num = 1
            for x in c.inner_contents:
                num *= y - x
            den = 1
            for i, yi in enumerate(c.outer_contents):
                if i != j:
                    den *= y - yi
            atoms.append((y, Fraction(-num, lam.n * den)))
    else:
        raise ValueError(f"unknown method {method!r}")
    return DiscreteMeasure(tuple(atoms))


def _exact_u(u) -> Fraction:
    return u if isinstance(u, Fraction) else Fraction(str(u)) if isinstance(u, float) else Fraction(u)


@dataclass(frozen=True)
class CotransitionSplit:
    """Where level u falls in the co-transition distribution.

    jhat: 0-based index of the block containing row floor(u dim lam) (the
    pseudo-inverse corner); ubar: fraction of that block that is covered.
    """

    jhat: int
    ubar: Fraction
    location: int


def cotransition_split(lam, u) -> CotransitionSplit:
    """Locate u: C_{jhat-1} <= u < C_jhat with C the cumulative weights.

    u = 1 selects the last corner with ubar = 1.
    """
    lam = as_partition(lam)
    u = _exact_u(u)
    if not 0 <= u <= 1:
        raise ValueError("u must lie in [0, 1]")
    rem = removable_corners(lam)
    dl = dimension(lam)
    level = u * dl
    acc = 0
    for j, (y, _, mu) in enumerate(rem):
        dm = dimension(mu)
        if level < acc + dm or j == len(rem) - 1:
            return CotransitionSplit(j, (level - acc) / dm, y)
        acc += dm
    raise AssertionError("unreachable")


def cotransition_cdf_inverse(lam, u) -> float:
    """Pseudo-inverse inf{v : F(v) > u} of the rescaled co-transition cdf.

    For u = 1 the largest atom is returned.
    """
    lam = as_partition(lam)
    meas = cotransition_measure(lam)
    u = _exact_u(u)
    acc = Fraction(0)
    root = math.sqrt(lam.n)
    for y, w in meas.atoms:
        acc += w
        if acc > u:
            return y / root
    return meas.atoms[-1][0] / root
