"""Irreducible representation matrices of S_n in the last-letter ordered
tableau basis, characters, p-sharp functions and partial trace / partial
sum decompositions.

Two flavors:
  orthogonal  float entries 1/d on the diagonal and sqrt(1 - 1/d^2) off it;
  seminormal  exact Fractions, off-diagonal pair 1 - 1/d (row of the
              earlier tableau T) and 1 + 1/d, whose product is 1 - 1/d^2.
Here d = d_k(T) = c_{k+1}(T) - c_k(T), taken at the earlier tableau of a pair.  Matrices act by M[row][col] and a
permutation s_{a_1} ... s_{a_m} maps to the product of generator matrices
in the same order.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np

from .partitions import (
    CapExceeded,
    Partition,
    _exact_u,
    as_partition,
    contents_multiset,
    cotransition_split,
    dimension,
    enumerate_partitions,
    enumerate_syt,
    removable_corners,
)
from .series import TruncatedSeries, catalan, falling

FLOAT_DIM_CAP = 3000
RATIONAL_DIM_CAP = 300
ORTHOGONAL = "orthogonal"
SEMINORMAL = "seminormal"


# ---------------------------------------------------------------- permutations


@dataclass(frozen=True)
class Permutation:
    """One-line notation: images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation: {imgs}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int | None = None) -> "Permutation":
        top = max((max(c) for c in cycles if c), default=0)
        if n is not None and top > n:
            raise ValueError(f"cycle entry {top} exceeds n={n}")
        if any(len(set(c)) != len(c) for c in cycles):
            raise ValueError("repeated entry inside a cycle")
        n = max(n or 0, top)
        img = list(range(1, n + 1))
        for c in cycles:
            for a, b in zip(c, list(c[1:]) + [c[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    @classmethod
    def adjacent(cls, k: int, n: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[k - 1], img[k] = img[k], img[k - 1]
        return cls(tuple(img))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        p = cls.identity(n)
        for k in word:
            p = p.compose(cls.adjacent(k, n))
        return p

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1] if i <= len(self.images) else i

    def compose(self, other: "Permutation") -> "Permutation":
        """(self o other)(i) = self(other(i))."""
        n = max(self.n, other.n)
        return Permutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def extend(self, n: int) -> "Permutation":
        return Permutation(self.images + tuple(range(self.n + 1, n + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(1, self.n + 1):
            if i in seen:
                continue
            c, j = [], i
            while j not in seen:
                seen.add(j)
                c.append(j)
                j = self(j)
            out.append(tuple(c))
        return out

    def cycle_type(self) -> Partition:
        return Partition(tuple(sorted((len(c) for c in self.cycles()), reverse=True)))

    def support(self) -> set[int]:
        return {i for i in range(1, self.n + 1) if self(i) != i}

    @property
    def wt(self) -> int:
        ct = self.cycle_type()
        return ct.n - ct.multiplicity(1)

    def reduced_word(self) -> list[int]:
        """Bubble-sort word: self = s_{w_1} o ... o s_{w_m} with m = #inversions."""
        img = list(self.images)
        rev = []
        changed = True
        while changed:
            changed = False
            for i in range(len(img) - 1):
                if img[i] > img[i + 1]:
                    img[i], img[i + 1] = img[i + 1], img[i]
                    rev.append(i + 1)
                    changed = True
        return rev[::-1]

    def length(self) -> int:
        img = self.images
        return sum(1 for i in range(len(img)) for j in range(i + 1, len(img)) if img[i] > img[j])

    def rank_r(self) -> int:
        """Smallest r with self in S_r."""
        r = 0
        for i, v in enumerate(self.images, start=1):
            if v != i:
                r = i
        return r

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "id"


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Cycle notation '(2,4,3)(1,5)', 'id', or one-line '[1,4,2,3]'."""
    s = text.strip().replace(" ", "")
    if s in ("", "id", "()", "e"):
        return Permutation.identity(n or 1)
    if s.startswith("["):
        p = Permutation(tuple(int(t) for t in s.strip("[]").split(",")))
        return p.extend(n) if n and n > p.n else p
    cycles = []
    for chunk in s.split(")"):
        chunk = chunk.strip("(")
        if chunk:
            cycles.append(tuple(int(t) for t in chunk.split(",")))
    return Permutation.from_cycles(cycles, n)


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


# ------------------------------------------------------------ generators


@dataclass(frozen=True)
class _GeneratorData:
    """Sparse description of pi(s_k): pairs (i, j, d_i) with i < j = s_k T_i,
    and fixed indices (i, d_i) with d_i = +-1."""

    pairs: tuple[tuple[int, int, int], ...]
    fixed: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class _ShapeData:
    shape: Partition
    tableaux: tuple
    generators: dict  # k -> _GeneratorData


_shape_lock = threading.Lock()
_shape_cache: dict[tuple[int, ...], _ShapeData] = {}


def _shape_data(lam: Partition) -> _ShapeData:
    with _shape_lock:
        hit = _shape_cache.get(lam.parts)
    if hit is not None:
        return hit
    tabs = enumerate_syt(lam)
    index = {t.rows: i for i, t in enumerate(tabs)}
    gens = {}
    for k in range(1, lam.n):
        pairs, fixed = [], []
        for i, t in enumerate(tabs):
            d = t.axial_distance(k)
            s = t.swap(k)
            if s is None:
                fixed.append((i, d))
            else:
                j = index[s.rows]
                if i < j:
                    pairs.append((i, j, d))
        gens[k] = _GeneratorData(tuple(pairs), tuple(fixed))
    data = _ShapeData(lam, tabs, gens)
    with _shape_lock:
        _shape_cache[lam.parts] = data
    return data


def _check_dim(lam: Partition, flavor: str):
    d = dimension(lam)
    cap = FLOAT_DIM_CAP if flavor == ORTHOGONAL else RATIONAL_DIM_CAP
    if d > cap:
        raise CapExceeded(f"dimension {d} exceeds the {flavor} cap {cap}")


@dataclass(frozen=True)
class RepMatrix:
    """Matrix of an irreducible representation in last-letter order."""

    shape: Partition
    flavor: str
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, ij):
        return self.entries[ij]

    def trace(self):
        return sum(self.entries[i, i] for i in range(self.dim))

    def total(self):
        return sum(self.entries[i, j] for i in range(self.dim) for j in range(self.dim))

    def as_lists(self):
        return [[self.entries[i, j] for j in range(self.dim)] for i in range(self.dim)]


def _identity(dim: int, flavor: str) -> np.ndarray:
    if flavor == ORTHOGONAL:
        return np.identity(dim)
    m = np.empty((dim, dim), dtype=object)
    m.fill(Fraction(0))
    for i in range(dim):
        m[i, i] = Fraction(1)
    return m


def _generator_coefficients(g: _GeneratorData, flavor: str, scale=None):
    """Per-column coefficients for right multiplication by pi(s_k).

    Returns (I, J, a_ii, a_ji, a_ij, a_jj, F, f_ii) so that
      new[:, I] = M[:, I] a_ii + M[:, J] a_ji,  new[:, J] = M[:, I] a_ij + M[:, J] a_jj,
      new[:, F] = M[:, F] f_ii.
    With scale = L (an integer) every coefficient is multiplied by L and
    must come out integral.
    """
    I = [i for i, _, _ in g.pairs]
    J = [j for _, j, _ in g.pairs]
    F = [i for i, _ in g.fixed]
    if flavor == ORTHOGONAL:
        ds = np.array([d for _, _, d in g.pairs], dtype=float)
        aii = 1 / ds
        off = np.sqrt(1 - 1 / ds ** 2)
        return I, J, aii, off, off, -aii, F, np.array([1.0 / d for _, d in g.fixed])
    aii, aji, aij, ajj = [], [], [], []
    for _, _, d in g.pairs:
        aii.append(Fraction(1, d))
        aji.append(1 + Fraction(1, d))
        aij.append(1 - Fraction(1, d))
        ajj.append(Fraction(-1, d))
    fii = [Fraction(1, d) for _, d in g.fixed]
    if scale is not None:
        def sc(vals):
            out = []
            for v in vals:
                w = v * scale
                if w.denominator != 1:
                    raise ArithmeticError("scale does not clear denominators")
                out.append(int(w))
            return out
        aii, aji, aij, ajj, fii = map(sc, (aii, aji, aij, ajj, fii))
    obj = lambda v: np.array(v, dtype=object)
    return I, J, obj(aii), obj(aji), obj(aij), obj(ajj), F, obj(fii)


def _right_multiply(M: np.ndarray, coeffs) -> np.ndarray:
    I, J, aii, aji, aij, ajj, F, fii = coeffs
    new = np.empty_like(M)
    if I:
        MI, MJ = M[:, I], M[:, J]
        new[:, I] = MI * aii + MJ * aji
        new[:, J] = MI * aij + MJ * ajj
    if F:
        new[:, F] = M[:, F] * fii
    return new


def rep_adjacent(lam, k: int, flavor: str = ORTHOGONAL) -> RepMatrix:
    lam = as_partition(lam)
    if not 1 <= k < lam.n:
        raise ValueError(f"k={k} out of range for n={lam.n}")
    return rep_matrix(lam, Permutation.adjacent(k, lam.n), flavor)


@lru_cache(maxsize=2048)
def _coeffs_cached(parts: tuple[int, ...], k: int, flavor: str):
    return _generator_coefficients(_shape_data(Partition(parts)).generators[k], flavor)


def rep_matrix(lam, sigma: Permutation, flavor: str = ORTHOGONAL, word: Sequence[int] | None = None) -> RepMatrix:
    """pi^lam(sigma) as the product of generator matrices along a word."""
    lam = as_partition(lam)
    if sigma.rank_r() > lam.n:
        raise ValueError("permutation moves points beyond |lambda|")
    _check_dim(lam, flavor)
    data = _shape_data(lam)
    M = _identity(len(data.tableaux), flavor)
    for k in (word if word is not None else sigma.reduced_word()):
        M = _right_multiply(M, _coeffs_cached(lam.parts, k, flavor))
    M.flags.writeable = False
    return RepMatrix(lam, flavor, M)


def seminormal_conjugator(lam) -> np.ndarray:
    """Diagonal D with seminormal = D^-1 orthogonal D, found by walking the
    tableau graph; consistency along every generator is checked by tests."""
    lam = as_partition(lam)
    data = _shape_data(lam)
    dim = len(data.tableaux)
    D = [None] * dim
    D[0] = 1.0
    changed = True
    while changed:
        changed = False
        for g in data.generators.values():
            for i, j, d in g.pairs:
                r = math.sqrt((d - 1) / (d + 1))
                if D[i] is not None and D[j] is None:
                    D[j] = D[i] * r
                    changed = True
                elif D[j] is not None and D[i] is None:
                    D[i] = D[j] / r
                    changed = True
    return np.diag(D)


# ---------------------------------------------------------------- characters


def _beta(parts: Sequence[int], length: int) -> tuple[int, ...]:
    parts = list(parts) + [0] * (length - len(parts))
    return tuple(parts[i] + length - 1 - i for i in range(length))


def _strip_removals(beta: tuple[int, ...], k: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """All ways to remove a k-border strip: (sign, new beta set)."""
    bset = set(beta)
    for b in beta:
        nb = b - k
        if nb >= 0 and nb not in bset:
            between = sum(1 for c in beta if nb < c < b)
            new = tuple(sorted((c if c != b else nb for c in beta), reverse=True))
            yield (-1) ** between, new


@lru_cache(maxsize=200000)
def _mn(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    total = 0
    for sign, nb in _strip_removals(beta, k):
        total += sign * _mn(nb, rest)
    return total


def character(lam, rho) -> int:
    """chi^lam at cycle type rho by the Murnaghan-Nakayama rule."""
    lam, rho = as_partition(lam), as_partition(rho)
    if lam.n != rho.n:
        raise ValueError("sizes differ")
    L = len(lam)
    return _mn(_beta(lam.parts, L), rho.parts)


def normalized_character(lam, rho) -> Fraction:
    """chi^lam(rho, 1^(n - |rho|)) / dim lam."""
    lam, rho = as_partition(lam), as_partition(rho)
    full = Partition(tuple(p for p in rho.parts if p > 1) + (1,) * (lam.n - sum(p for p in rho.parts if p > 1)))
    return Fraction(character(lam, full), dimension(lam))


def class_size(rho) -> int:
    rho = as_partition(rho)
    z = 1
    for k in set(rho.parts):
        m = rho.multiplicity(k)
        z *= k ** m * math.factorial(m)
    return math.factorial(rho.n) // z


def p_sharp(rho, lam) -> Fraction:
    """n^{falling |rho|} times the normalized character on (rho, 1, ...)."""
    lam, rho = as_partition(lam), as_partition(rho)
    if rho.n > lam.n:
        return Fraction(0)
    return falling(lam.n, rho.n) * normalized_character(lam, rho)


def p_sharp_residue(k: int, lam) -> Fraction:
    """[z^-1] of -(1/k) z^{falling k} phi(z) / phi(z - k)."""
    lam = as_partition(lam)
    low = -(k + 1)
    ratio = TruncatedSeries(0, [Fraction(1)], low=low)
    for i, p in enumerate(lam.parts, start=1):
        # (z + i)(z - k + i - p) / ((z + i - p)(z - k + i))
        num = [Fraction(1), Fraction(2 * i - k - p), Fraction(i * (i - k - p))]
        den = [Fraction(1), Fraction(2 * i - p - k), Fraction((i - p) * (i - k))]
        N = TruncatedSeries.polynomial(num, low=2 + low)
        D = TruncatedSeries.polynomial(den, low=2 + low)
        ratio = ratio * (N * D.inverse())
    ff = [Fraction(1)]
    for i in range(k):
        ff = [a - i * b for a, b in zip(ff + [Fraction(0)], [Fraction(0)] + ff)]
    P = TruncatedSeries.polynomial(ff, low=-1 - k)
    return -(P * ratio).coefficient(-1) / k


def p_sharp_explicit(k: int, lam) -> Fraction:
    """Pole-sum formula with x_j = lam_j - j + l:
    sum_j x_j^{falling k} prod_{i != j} (lam_j - lam_i + i - j - k)/(lam_j - lam_i + i - j)."""
    lam = as_partition(lam)
    l = len(lam)
    total = Fraction(0)
    for j in range(1, l + 1):
        term = Fraction(falling(lam.part(j) - j + l, k))
        if term == 0:
            continue
        for i in range(1, l + 1):
            if i != j:
                b = lam.part(j) - lam.part(i) + i - j
                term *= Fraction(b - k, b)
        total += term
    return total


# --------------------------------------------- partial traces and partial sums


def _rows(u, dim: int) -> int:
    return math.floor(_exact_u(u) * dim)


def partial_trace(lam, sigma: Permutation, u, flavor: str = SEMINORMAL):
    lam = as_partition(lam)
    M = rep_matrix(lam, sigma, flavor).entries
    m = _rows(u, M.shape[0])
    s = sum(M[i, i] for i in range(m))
    return s / M.shape[0] if flavor == ORTHOGONAL else Fraction(s) / M.shape[0]


def partial_sum(lam, sigma: Permutation, u, v=None, flavor: str = SEMINORMAL):
    lam = as_partition(lam)
    v = u if v is None else v
    M = rep_matrix(lam, sigma, flavor).entries
    dim = M.shape[0]
    a, b = _rows(u, dim), _rows(v, dim)
    s = sum(M[i, j] for i in range(a) for j in range(b))
    return s / dim if flavor == ORTHOGONAL else Fraction(s) / dim


def total_sum(lam, sigma: Permutation, flavor: str = SEMINORMAL):
    return partial_sum(lam, sigma, 1, 1, flavor)


@dataclass(frozen=True)
class PartialTraceDecomposition:
    main_term: object
    remainder: object
    jhat: int
    ubar: Fraction

    @property
    def value(self):
        return self.main_term + self.remainder


def _restricted(sigma: Permutation, n: int) -> Permutation:
    if sigma.rank_r() > n:
        raise ValueError("sigma must lie in S_{n-1}")
    return Permutation(tuple(sigma(i) for i in range(1, n + 1)))


def main_term(lam, sigma: Permutation, u) -> Fraction:
    """sum_{j < jhat} (dim mu_j / dim lam) * normalized chi^{mu_j}(sigma)."""
    lam = as_partition(lam)
    split = cotransition_split(lam, u)
    rem = removable_corners(lam)
    dl = dimension(lam)
    rho = sigma.cycle_type()
    out = Fraction(0)
    for _, _, mu in rem[: split.jhat]:
        out += Fraction(dimension(mu), dl) * normalized_character(mu, rho)
    return out


def decompose_partial_trace(lam, sigma: Permutation, u, flavor: str = SEMINORMAL) -> PartialTraceDecomposition:
    lam = as_partition(lam)
    if sigma.rank_r() >= lam.n:
        raise ValueError("sigma must lie in S_r with r < |lambda|")
    sig = _restricted(sigma, lam.n - 1)
    split = cotransition_split(lam, u)
    rem = removable_corners(lam)
    dl = dimension(lam)
    mt = main_term(lam, sig, u)
    mu = rem[split.jhat][2]
    r = Fraction(dimension(mu), dl) * partial_trace(mu, sig, split.ubar, flavor)
    if flavor == ORTHOGONAL:
        mt = float(mt)
    return PartialTraceDecomposition(mt, r, split.jhat, split.ubar)


def decompose_partial_sum(lam, sigma: Permutation, u, flavor: str = SEMINORMAL) -> PartialTraceDecomposition:
    """Square partial sum PS_u split as sum_{j<jhat} (dim mu_j/dim lam) TS^{mu_j} + (dim mu_jhat/dim lam) PS_ubar^{mu_jhat}."""
    lam = as_partition(lam)
    sig = _restricted(sigma, lam.n - 1)
    split = cotransition_split(lam, u)
    rem = removable_corners(lam)
    dl = dimension(lam)
    mt = sum((Fraction(dimension(mu), dl) * total_sum(mu, sig, flavor) for _, _, mu in rem[: split.jhat]), Fraction(0))
    mu = rem[split.jhat][2]
    r = Fraction(dimension(mu), dl) * partial_sum(mu, sig, split.ubar, split.ubar, flavor)
    return PartialTraceDecomposition(mt, r, split.jhat, split.ubar)


# ---------------------------------------------------------- skew dimensions


def skew_dimension(lam, nu) -> int:
    """(1/r!) sum_{tau in S_r} chi^nu(tau) chi^lam(tau, 1^{n-r}), by class sums."""
    lam, nu = as_partition(lam), as_partition(nu)
    if not lam.contains(nu):
        return 0
    r = nu.n
    total = 0
    for rho in enumerate_partitions(r):
        full = Partition(rho.parts + (1,) * (lam.n - r))
        total += class_size(rho) * character(nu, rho) * character(lam, full)
    q, rmd = divmod(total, math.factorial(r))
    assert rmd == 0
    return q


def skew_dimension_recursive(lam, nu) -> int:
    """Count of skew tableaux by removing outer corners until nu is reached."""
    lam, nu = as_partition(lam), as_partition(nu)

    @lru_cache(maxsize=None)
    def count(parts):
        cur = Partition(parts)
        if not cur.contains(nu):
            return 0
        if cur.n == nu.n:
            return 1 if cur == nu else 0
        return sum(count(mu.parts) for _, _, mu in removable_corners(cur))

    return count(lam.parts)


def skew_expansion_coefficients(n: int, r: int) -> dict[tuple, Fraction]:
    """B[lam, nu] = sum_tau E_Pl^r[ chi^nu(tau) . ] chi^lam(tau) as the
    coefficient of TS^nu in TS^lam (character expansion path)."""
    out = {}
    nus = enumerate_partitions(r)
    rhos = enumerate_partitions(r)
    for lam in enumerate_partitions(n):
        dl = dimension(lam)
        for nu in nus:
            dn = dimension(nu)
            c = Fraction(0)
            for rho in rhos:
                full = Partition(rho.parts + (1,) * (n - r))
                c += class_size(rho) * Fraction(character(nu, rho), dn) * Fraction(character(lam, full), dl)
            out[(lam.parts, nu.parts)] = Fraction(dn * dn, math.factorial(r)) * c
    return out


# ------------------------------------------------------------------- m and v


def m_and_v(sigma: Permutation, r: int | None = None, flavor: str = SEMINORMAL) -> tuple:
    """m = E_Pl^r[TS^nu(sigma)], v = C(r,2) E_Pl^r[chi^nu_(2,1..) TS^nu(sigma)]
    by exact enumeration over nu of r.

    Total sums depend on the basis normalization: the seminormal flavor gives
    exact Fractions, the orthogonal flavor floats.
    """
    r = r or max(sigma.rank_r(), 1)
    if r > 6:
        raise CapExceeded("m_and_v is limited to r <= 6")
    sig = sigma.extend(r) if sigma.n < r else sigma
    exact = flavor == SEMINORMAL
    m = v = Fraction(0) if exact else 0.0
    rf = math.factorial(r)
    for nu in enumerate_partitions(r):
        dn = dimension(nu)
        w = Fraction(dn * dn, rf) if exact else dn * dn / rf
        ts = total_sum(nu, sig, flavor)
        m += w * ts
        if r >= 2:
            chi = normalized_character(nu, (2,))
            v += w * (chi if exact else float(chi)) * ts
    return m, v * math.comb(r, 2)


# ----------------------------------------------------------- content identities


def modified_power_sum_contents(lam, k: int) -> Fraction:
    """p_k(contents) minus Cat(k/2)/(k/2 + 1) n^{falling k/2 + 1} (no correction for odd k)."""
    lam = as_partition(lam)
    p = sum(c ** k * m for c, m in contents_multiset(lam).items())
    if k % 2:
        return Fraction(p)
    h = k // 2
    return p - Fraction(catalan(h), h + 1) * falling(lam.n, h + 1)


# --------------------------------------------------------------- entry bounds


def entry_bound_check(lam, sigma: Permutation, flavor: str = ORTHOGONAL) -> bool:
    """Every |entry| <= 2^{l(sigma)} and entries with |i - j| > r! vanish."""
    lam = as_partition(lam)
    M = rep_matrix(lam, sigma, flavor).entries
    bound = 2 ** sigma.length()
    r = sigma.rank_r()
    band = math.factorial(r)
    dim = M.shape[0]
    for i in range(dim):
        for j in range(dim):
            x = M[i, j]
            if abs(x) > bound + 1e-12:
                return False
            if abs(i - j) > band and x != 0:
                return False
    return True


def conjugation_symmetry_holds(r: int, tol: float = 1e-12) -> bool:
    """For sigma = (r-1, r): diagonals negate and off-diagonals persist under
    conjugating the shape (tableaux transposed, last-letter order kept)."""
    sigma = Permutation.adjacent(r - 1, r)
    for lam in enumerate_partitions(r):
        conj = lam.conjugate()
        A = rep_matrix(lam, sigma, ORTHOGONAL).entries
        B = rep_matrix(conj, sigma, ORTHOGONAL).entries
        # transpose map between tableau bases
        ta = _shape_data(lam).tableaux
        tb = {t.rows: i for i, t in enumerate(_shape_data(conj).tableaux)}
        perm = [tb[_transpose_rows(t)] for t in ta]
        for i in range(len(ta)):
            for j in range(len(ta)):
                a, b = A[i, j], B[perm[i], perm[j]]
                if i == j and abs(a + b) > tol:
                    return False
                if i != j and abs(a - b) > tol:
                    return False
    return True


def _transpose_rows(t) -> tuple:
    cols = []
    for b in range(len(t.rows[0]) if t.rows else 0):
        cols.append(tuple(r[b] for r in t.rows if len(r) > b))
    return tuple(cols)


# ------------------------------------------------------ exact integer sweep


def axial_scale(k: int) -> int:
    """lcm(1, ..., k).  Axial distances of s_k satisfy |d| <= k, so
    L_k * pi(s_k) is integral in the seminormal form."""
    return math.lcm(*range(1, k + 1))


class IntegerSweep:
    """Walk S_N through coset representatives and carry, for every shape in
    `shapes`, the integer matrix c(w) * pi^lam(sigma) (seminormal), where
    c(w) is the product of L_k over the letters of the word w.

    Elements of S_r appear as nodes at depth r (r = 1..N); yields
    (r, sigma_images, c(w), matrices).  Matrices are shared with the walk
    and must not be modified.
    """

    def __init__(self, shapes: Sequence[Partition], N: int):
        self.shapes = [as_partition(s) for s in shapes]
        self.N = N
        self.scales = {k: axial_scale(k) for k in range(1, N)}
        self.coeffs = {}
        for lam in self.shapes:
            data = _shape_data(lam)
            for k in range(1, min(N, lam.n)):
                self.coeffs[(lam.parts, k)] = _generator_coefficients(data.generators[k], SEMINORMAL, self.scales[k])

    def _start(self):
        mats = {}
        for lam in self.shapes:
            d = dimension(lam)
            m = np.zeros((d, d), dtype=object)
            for i in range(d):
                m[i, i] = 1
            mats[lam.parts] = m
        return mats

    def _step(self, mats, k):
        return {parts: _right_multiply(M, self.coeffs[(parts, k)]) for parts, M in mats.items()}

    def walk(self):
        ident = list(range(1, self.N + 1))
        yield from self._walk(1, self._start(), ident, 1)

    def _walk(self, r, mats, img, scale):
        yield r, tuple(img), scale, mats
        if r == self.N:
            return
        m = r + 1
        # right coset representatives s_r s_{r-1} ... s_j of S_r in S_{r+1}
        cur = {parts: M for parts, M in mats.items() if sum(parts) >= m}
        cur_img, cur_scale = list(img), scale
        yield from self._walk(m, cur, cur_img, cur_scale)
        for j in range(r, 0, -1):
            cur = self._step(cur, j)
            cur_img = cur_img[:]
            cur_img[j - 1], cur_img[j] = cur_img[j], cur_img[j - 1]
            cur_scale *= self.scales[j]
            yield from self._walk(m, cur, cur_img, cur_scale)

    def growth_bound(self) -> int:
        return coset_growth_bound(self.N)


def coset_growth_bound(N: int) -> int:
    """Bound on |entry| over an IntegerSweep of S_N: a column operation with
    s_k grows entries by at most 2 L_k, and s_k occurs at most N - k times
    in a coset word."""
    return math.prod((2 * axial_scale(k)) ** (N - k) for k in range(1, N))


def primes_below(bound: int, count: int) -> list[int]:
    """The `count` largest primes below `bound` (trial division)."""
    out, c = [], bound - 1
    while len(out) < count:
        if c % 2 and all(c % q for q in range(3, math.isqrt(c) + 1, 2)):
            out.append(c)
        c -= 1
    return out


class ModularSweep(IntegerSweep):
    """IntegerSweep carried out modulo several primes below 2^30 at once.

    Matrices have shape (primes, dim, dim) in int64; every product of two
    residues stays below 2^60, so no intermediate overflows.  Integer
    identities whose two sides differ by less than the product of the
    primes hold exactly iff they hold modulo every prime.
    """

    def __init__(self, shapes: Sequence[Partition], N: int, primes: Sequence[int]):
        super().__init__(shapes, N)
        self.primes = np.array(primes, dtype=np.int64)
        P = self.primes[:, None, None]
        for key, (I, J, aii, aji, aij, ajj, F, fii) in list(self.coeffs.items()):
            red = lambda a: np.array([[int(x) % int(p) for x in a] for p in primes], dtype=np.int64)[:, None, :]
            self.coeffs[key] = (I, J, red(aii), red(aji), red(aij), red(ajj), F, red(fii))
        self._P = P

    def _start(self):
        mats = {}
        for lam in self.shapes:
            d = dimension(lam)
            mats[lam.parts] = np.broadcast_to(np.identity(d, dtype=np.int64), (len(self.primes), d, d)).copy()
        return mats

    def _step(self, mats, k):
        P = self._P
        out = {}
        for parts, M in mats.items():
            I, J, aii, aji, aij, ajj, F, fii = self.coeffs[(parts, k)]
            new = np.empty_like(M)
            if I:
                MI, MJ = M[:, :, I], M[:, :, J]
                new[:, :, I] = (MI * aii + MJ * aji) % P
                new[:, :, J] = (MI * aij + MJ * ajj) % P
            if F:
                new[:, :, F] = (M[:, :, F] * fii) % P
            out[parts] = new
        return out


@dataclass
class SweepReport:
    n: int
    checks: int = 0
    failures: int = 0
    permutations: int = 0
    first_failure: str = ""

    def record(self, ok: bool, *what):
        self.checks += 1
        if not ok:
            self.failures += 1
            if not self.first_failure:
                self.first_failure = " ".join(map(str, what))

    def record_many(self, bad: np.ndarray, lam, img, us):
        for flag, u in zip(bad, us):
            self.record(not flag, lam, img, u)


DEFAULT_U = tuple(Fraction(i, 10) for i in range(1, 10))


def _prefix_sums(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal prefix sums diag[:, k] = sum_{i<k} M[:, i, i] and square
    prefix sums sq[:, a, b] = sum_{i<a, j<b} M[:, i, j], for a stack of
    residue matrices (values stay far below 2^63)."""
    m, d, _ = M.shape
    diag = np.zeros((m, d + 1), dtype=np.int64)
    diag[:, 1:] = np.cumsum(np.diagonal(M, axis1=1, axis2=2), axis=1)
    sq = np.zeros((m, d + 1, d + 1), dtype=np.int64)
    sq[:, 1:, 1:] = M.cumsum(axis=1).cumsum(axis=2)
    return diag, sq


def _identity_bound(growth, lams, ts_ranks, dims, skew, char_w, char_den) -> int:
    """Upper bound for |lhs - rhs| over every comparison in the sweep, given
    a bound `growth` on the scaled matrix entries."""
    worst = 0
    for lam in lams:
        d2 = dims[lam.parts] ** 2
        worst = max(worst, 3 * d2)
        for r in ts_ranks:
            nus = enumerate_partitions(r)
            sk = sum(dims[nu.parts] ** 2 * skew[(lam.parts, nu.parts)] for nu in nus)
            ch = sum(dims[nu.parts] ** 2 * abs(char_w[(lam.parts, nu.parts)]) for nu in nus)
            worst = max(worst, d2 + sk, d2 * char_den[(lam.parts, r)] + ch)
    return worst * growth


def verify_decompositions(n: int, us: Sequence[Fraction] = DEFAULT_U, ts_ranks: Sequence[int] | None = None) -> dict[str, SweepReport]:
    """Exhaustive exact checks over S_{n-1} for every lam of n:

    block     pi^lam(sigma) = blockdiag(pi^{mu_j}(sigma)) in last-letter order
    pt        PT_u = main term + remainder
    ps        PS_u = sum_{j<jhat} (dim mu_j/dim lam) TS^{mu_j} + (dim mu_jhat/dim lam) PS_ubar^{mu_jhat}
    ts_skew   TS^lam(sigma) = sum_nu TS^nu(sigma) dim nu dim(lam/nu) / dim lam  (sigma in S_r)
    ts_char   the same with coefficients from the character expansion

    Every comparison is an integer identity after clearing the common
    denominator c(word) * dim lam.  The integers are handled modulo
    enough primes that their product exceeds twice a proven bound on both
    sides, so agreement modulo every prime is exact equality.
    """
    lams = enumerate_partitions(n)
    ts_ranks = tuple(ts_ranks if ts_ranks is not None else range(1, n))
    sizes = sorted(set([n, n - 1]) | set(ts_ranks))
    shapes = [lam for s in sizes if s >= 1 for lam in enumerate_partitions(s)]
    reports = {key: SweepReport(n) for key in ("block", "pt", "ps", "ts_skew", "ts_char")}

    # static data
    corners = {lam.parts: removable_corners(lam) for lam in lams}
    dims = {lam.parts: dimension(lam) for lam in shapes}
    skew = {(lam.parts, nu.parts): skew_dimension_recursive(lam, nu)
            for lam in lams for r in ts_ranks for nu in enumerate_partitions(r)}
    # integer weights: dim lam * TS^lam * D = sum_nu tot_nu * W[lam, nu]
    char_w, char_den = {}, {}
    for r in ts_ranks:
        coef = skew_expansion_coefficients(n, r)
        for lam in lams:
            nus = enumerate_partitions(r)
            fr = {nu.parts: coef[(lam.parts, nu.parts)] * dims[lam.parts] / dims[nu.parts] for nu in nus}
            D = math.lcm(*(f.denominator for f in fr.values()))
            char_den[(lam.parts, r)] = D
            for nu, f in fr.items():
                char_w[(lam.parts, nu)] = int(f * D)
    plans = {}
    for lam in lams:
        rem = corners[lam.parts]
        plan = []
        for u in us:
            sp = cotransition_split(lam, u)
            mu = rem[sp.jhat][2]
            plan.append((u, math.floor(u * dims[lam.parts]), sp.jhat, mu.parts, math.floor(sp.ubar * dims[mu.parts])))
        plans[lam.parts] = plan
    plans_arr = {key: (np.array([x[1] for x in plan]), np.array([x[2] for x in plan]),
                       [x[3] for x in plan], [x[4] for x in plan]) for key, plan in plans.items()}

    bound = _identity_bound(coset_growth_bound(n - 1), lams, ts_ranks, dims, skew, char_w, char_den)
    count = 1
    while True:
        primes = primes_below(2 ** 30, count)
        if math.prod(primes) > 2 * bound:
            break
        count += 1
    Pv = np.array(primes, dtype=np.int64)
    P2 = Pv[:, None]
    red = lambda x: np.array([x % p for p in primes], dtype=np.int64)
    ts_tables = {}
    for r in ts_ranks:
        nus = enumerate_partitions(r)
        W_skew = np.array([[skew[(lam.parts, nu.parts)] for nu in nus] for lam in lams], dtype=np.int64)
        W_char = np.stack([np.stack([red(char_w[(lam.parts, nu.parts)]) for nu in nus], axis=1) for lam in lams])
        dens = np.stack([red(char_den[(lam.parts, r)]) for lam in lams])
        ts_tables[r] = (nus, W_skew, W_char, dens)

    def zero(x):
        return not np.any(x % Pv)


    mus = enumerate_partitions(n - 1)
    chars = {}
    sweep = ModularSweep(shapes, n - 1, primes)
    for r, img, scale, mats in sweep.walk():
        if r in ts_ranks:
            nus, W_skew, W_char, dens = ts_tables[r]
            T = np.stack([mats[nu.parts].sum(axis=(1, 2)) % Pv for nu in nus], axis=1)  # (primes, K)
            lhs = np.stack([mats[lam.parts].sum(axis=(1, 2)) % Pv for lam in lams], axis=0)  # (Lam, primes)
            rhs_skew = (T[None, :, :] * W_skew[:, None, :]).sum(axis=2)
            rhs_char = ((T[None, :, :] * W_char) % P2).sum(axis=2)
            bad_skew = np.any((lhs - rhs_skew) % Pv, axis=1)
            bad_char = np.any((lhs * dens - rhs_char) % Pv, axis=1)
            for lam, b1, b2 in zip(lams, bad_skew, bad_char):
                reports["ts_skew"].record(not b1, lam, img)
                reports["ts_char"].record(not b2, lam, img)
        if r != n - 1:
            continue
        reports["block"].permutations += 1
        rho = Permutation(img).cycle_type().parts
        for mu in mus:
            if (mu.parts, rho) not in chars:
                chars[(mu.parts, rho)] = character(mu, Partition(rho))
        scale = red(scale)
        mu_diag, mu_sq = {}, {}
        for mu in mus:
            mu_diag[mu.parts], mu_sq[mu.parts] = _prefix_sums(mats[mu.parts])
        for lam in lams:
            M = mats[lam.parts]
            rem = corners[lam.parts]
            ok = True
            mask = np.ones(M.shape[1:], dtype=bool)
            off = 0
            for _, _, mu in rem:
                dm = dims[mu.parts]
                if not np.array_equal(M[:, off:off + dm, off:off + dm], mats[mu.parts]):
                    ok = False
                mask[off:off + dm, off:off + dm] = False
                off += dm
            ok = ok and not M[:, mask].any()
            reports["block"].record(ok, lam, img)
            diag, sq = _prefix_sums(M)
            rows, jhats, mu_idx, subs = plans_arr[lam.parts]
            # partial trace, everything times scale * dim lam
            char_prefix = np.cumsum([0] + [chars[(m.parts, rho)] for _, _, m in rem])
            main = scale[:, None] * char_prefix[jhats][None, :]
            rest = np.stack([mu_diag[m][:, k] for m, k in zip(mu_idx, subs)], axis=1)
            bad = np.any((diag[:, rows] - main - rest) % P2, axis=0)
            reports["pt"].record_many(bad, lam, img, us)
            # partial sum
            tot_prefix = np.cumsum([np.zeros(len(primes), dtype=np.int64)]
                                   + [mu_sq[m.parts][:, -1, -1] for _, _, m in rem], axis=0)
            main_ps = tot_prefix[jhats].T
            rest_ps = np.stack([mu_sq[m][:, k, k] for m, k in zip(mu_idx, subs)], axis=1)
            bad = np.any((sq[:, rows, rows] - main_ps - rest_ps) % P2, axis=0)
            reports["ps"].record_many(bad, lam, img, us)
    return reports
