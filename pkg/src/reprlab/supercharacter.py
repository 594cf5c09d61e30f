"""Set-partition supercharacters of the unitriangular group U_n(F_q).

Set partitions of [n] are encoded by their arc sets: (i, j) with i < j
consecutive in a block. Values that depend on q are either evaluated at an
integer q or kept as polynomials in q (MultivarPoly over the single
variable "q").
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .series import MultivarPoly

Q_NAMES = ("q",)


def _check_q(q: int) -> None:
    prime = q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))
    if not (prime or q == 4):
        raise ValueError(f"q must be a prime or 4, got {q}")


# set partitions

@dataclass(frozen=True, order=True)
class SetPartition:
    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        starts = [i for i, _ in self.arcs]
        ends = [j for _, j in self.arcs]
        if len(set(starts)) != len(starts) or len(set(ends)) != len(ends):
            raise ValueError("arcs must leave each point at most once and enter at most once")
        for i, j in self.arcs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"bad arc {(i, j)} for n={self.n}")
        if list(self.arcs) != sorted(self.arcs):
            object.__setattr__(self, "arcs", tuple(sorted(self.arcs)))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "SetPartition":
        return cls(n, tuple(sorted((int(i), int(j)) for i, j in arcs)))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "SetPartition":
        blocks = [sorted(b) for b in blocks if b]
        points = sorted(x for b in blocks for x in b)
        size = n if n is not None else (points[-1] if points else 0)
        if points != list(range(1, size + 1)):
            raise ValueError("blocks must partition {1..n}")
        arcs = [(b[t], b[t + 1]) for b in blocks for t in range(len(b) - 1)]
        return cls.from_arcs(size, arcs)

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse '1,5,7|2|3,4,9|6,8'."""
        text = text.strip()
        if not text:
            return cls(0, ())
        try:
            blocks = [[int(x) for x in part.split(",")] for part in text.split("|")]
        except ValueError as exc:
            raise ValueError(f"cannot parse set partition {text!r}") from exc
        return cls.from_blocks(blocks)

    @classmethod
    def arcless(cls, n: int) -> "SetPartition":
        return cls(n, ())

    @property
    def blocks(self) -> list[list[int]]:
        nxt = dict(self.arcs)
        has_prev = {j for _, j in self.arcs}
        out = []
        for start in range(1, self.n + 1):
            if start in has_prev:
                continue
            block = [start]
            while block[-1] in nxt:
                block.append(nxt[block[-1]])
            out.append(block)
        return out

    def with_arcs(self, arcs: Iterable[tuple[int, int]]) -> "SetPartition":
        return SetPartition.from_arcs(self.n, arcs)

    def extend(self, m: int) -> "SetPartition":
        return SetPartition(m, self.arcs)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": self.blocks, "arcs": [list(a) for a in self.arcs]}


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of [n] via restricted growth strings."""
    if n == 0:
        yield SetPartition(0, ())
        return

    def rgs(prefix: list[int], top: int):
        if len(prefix) == n:
            yield prefix
            return
        for v in range(top + 2):
            prefix.append(v)
            yield from rgs(prefix, max(top, v))
            prefix.pop()

    for word in rgs([0], 0):
        last: dict[int, int] = {}
        arcs = []
        for pos, b in enumerate(word, start=1):
            if b in last:
                arcs.append((last[b], pos))
            last[b] = pos
        yield SetPartition.from_arcs(n, arcs)


# statistics

@dataclass(frozen=True)
class ArcStatistics:
    d: int
    dim: int
    crs: int
    nst: int
    adjacent: int


def arc_statistics(pi: SetPartition) -> ArcStatistics:
    arcs = pi.arcs
    crs = nst = adj = 0
    for (i, j), (k, l) in itertools.combinations(arcs, 2):
        if k < i:
            i, j, k, l = k, l, i, j
        if i < k < j < l:
            crs += 1
        elif i < k < l < j:
            nst += 1
        if j == k or l == i:
            adj += 1
    return ArcStatistics(len(arcs), sum(j - i for i, j in arcs), crs, nst, adj)


def regular_singular(pi: SetPartition) -> tuple[set, set]:
    """(i, j) is singular when an arc (k, j) with k < i or an arc (i, l) with l > j exists."""
    into = {j: i for i, j in pi.arcs}
    out = {i: j for i, j in pi.arcs}
    reg, sing = set(), set()
    for i in range(1, pi.n + 1):
        for j in range(i + 1, pi.n + 1):
            if (j in into and into[j] < i) or (i in out and out[i] > j):
                sing.add((i, j))
            else:
                reg.add((i, j))
    return reg, sing


def nestings_relative(pi: SetPartition, sigma: SetPartition) -> int:
    """Sum over arcs (k, l) of sigma of the arcs (i, j) of pi with i < k < l < j."""
    return sum(1 for k, l in sigma.arcs for i, j in pi.arcs if i < k < l < j)


def _qpoly(value) -> MultivarPoly:
    return MultivarPoly.constant(Q_NAMES, value)


Q = MultivarPoly.variable(Q_NAMES, "q")


def supercharacter_value(pi: SetPartition, sigma: SetPartition, q=2):
    """chi^pi on the superclass of sigma.

    With integer q the result is an exact Fraction (an integer in practice);
    q=None returns the value as a polynomial in q when it is one.
    """
    if pi.n != sigma.n:
        raise ValueError("set partitions of different sizes")
    reg, _ = regular_singular(pi)
    if not set(sigma.arcs) <= reg:
        return _qpoly(0) if q is None else Fraction(0)
    st = arc_statistics(pi)
    shared = len(set(pi.arcs) & set(sigma.arcs))
    e = st.dim - st.d - nestings_relative(pi, sigma)
    if q is None:
        # (q-1)^d (-1/(q-1))^shared = (-1)^shared (q-1)^(d-shared)
        return (-1) ** shared * Q ** e * (Q - 1) ** (st.d - shared)
    q = Fraction(q)
    return q ** e * (q - 1) ** st.d * (Fraction(-1) / (q - 1)) ** shared


def character_degree(pi: SetPartition, q=2):
    st = arc_statistics(pi)
    if q is None:
        return Q ** (st.dim - st.d) * (Q - 1) ** st.d
    return Fraction(q) ** (st.dim - st.d) * (Fraction(q) - 1) ** st.d


def character_norm(pi: SetPartition, q=2):
    """<chi^pi, chi^pi> = (q-1)^d q^crs."""
    st = arc_statistics(pi)
    if q is None:
        return (Q - 1) ** st.d * Q ** st.crs
    return (Fraction(q) - 1) ** st.d * Fraction(q) ** st.crs


def superplancherel(pi: SetPartition, q=2) -> Fraction:
    st = arc_statistics(pi)
    q = Fraction(q)
    n = pi.n
    return q ** (2 * st.dim - 2 * st.d) * (q - 1) ** st.d / q ** (n * (n - 1) // 2 + st.crs)


def neg_log_superplancherel(pi: SetPartition, q=2) -> float:
    """-log_q SPl = n(n-1)/2 - (2dim - 2d) + crs - d log_q(q-1)."""
    st = arc_statistics(pi)
    n = pi.n
    return n * (n - 1) / 2 - (2 * st.dim - 2 * st.d) + st.crs - st.d * np.log(q - 1) / np.log(q)


def fiber_size(pi: SetPartition, q=2) -> int:
    """|J_pi| = q^(2dim - 2d - crs) (q-1)^d."""
    st = arc_statistics(pi)
    return q ** (2 * st.dim - 2 * st.d - st.crs) * (q - 1) ** st.d


# finite fields and matrices

class Field:
    """F_q for q prime or q = 4 (elements 0..q-1; for q=4 bit-encoded over x^2+x+1)."""

    def __init__(self, q: int):
        _check_q(q)
        self.q = q
        if q == 4:
            self._mul = [[self._gf4(a, b) for b in range(4)] for a in range(4)]
        else:
            self._mul = [[a * b % q for b in range(q)] for a in range(q)]
        self._inv = {a: next(b for b in range(1, q) if self._mul[a][b] == 1) for a in range(1, q)}

    @staticmethod
    def _gf4(a: int, b: int) -> int:
        r = 0
        for t in range(2):
            if b >> t & 1:
                r ^= a << t
        if r & 4:
            r ^= 0b111
        return r

    def add(self, a: int, b: int) -> int:
        return a ^ b if self.q == 4 else (a + b) % self.q

    def neg(self, a: int) -> int:
        return a if self.q == 4 else (-a) % self.q

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._inv[a]

    @property
    def units(self) -> range:
        return range(1, self.q)


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    return Field(q)


@dataclass(frozen=True)
class FqMatrix:
    """Upper unitriangular n x n matrix over F_q; only strictly-upper entries are stored."""

    n: int
    q: int
    entries: tuple[tuple[int, ...], ...]  # row i holds columns i+1..n (0-based rows)

    def __post_init__(self):
        _check_q(self.q)
        if len(self.entries) != self.n or any(len(r) != self.n - 1 - i for i, r in enumerate(self.entries)):
            raise ValueError("entries must hold the strictly upper triangle")
        if any(not 0 <= x < self.q for r in self.entries for x in r):
            raise ValueError("entries must be field elements 0..q-1")

    @classmethod
    def identity(cls, n: int, q: int = 2) -> "FqMatrix":
        return cls(n, q, tuple((0,) * (n - 1 - i) for i in range(n)))

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], q: int = 2) -> "FqMatrix":
        n = len(rows)
        red = (lambda x: x) if q == 4 else (lambda x: x % q)
        for i in range(n):
            if red(rows[i][i]) != 1:
                raise ValueError("diagonal must be 1")
            if any(red(rows[i][j]) for j in range(i)):
                raise ValueError("matrix must be upper triangular")
        return cls(n, q, tuple(tuple(red(rows[i][j]) for j in range(i + 1, n)) for i in range(n)))

    @classmethod
    def from_flat(cls, n: int, q: int, flat: Sequence[int]) -> "FqMatrix":
        it = iter(flat)
        return cls(n, q, tuple(tuple(next(it) for _ in range(n - 1 - i)) for i in range(n)))

    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.entries for x in r)

    def entry(self, i: int, j: int) -> int:
        """1-based entry (i, j)."""
        if i == j:
            return 1
        if j < i:
            return 0
        return self.entries[i - 1][j - i - 1]

    def dense(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]


def all_unitriangular(n: int, q: int) -> Iterator[FqMatrix]:
    m = n * (n - 1) // 2
    for flat in itertools.product(range(q), repeat=m):
        yield FqMatrix.from_flat(n, q, flat)


# J_pi fibers

def canonicalize(A: FqMatrix) -> tuple[SetPartition, FqMatrix]:
    """Diagonal sweep from the upper-right corner: each surviving nonzero
    entry becomes 1 and clears the entries left of it in its row and below
    it in its column."""
    n = A.n
    M = A.dense()
    arcs = []
    for k in range(1, n):
        for i in range(1, k + 1):
            j = n - k + i
            if M[i - 1][j - 1] == 0:
                continue
            M[i - 1][j - 1] = 1
            arcs.append((i, j))
            for c in range(i + 1, j):
                M[i - 1][c - 1] = 0
            for r in range(i + 1, j):
                M[r - 1][j - 1] = 0
    return SetPartition.from_arcs(n, arcs), FqMatrix.from_dense(M, A.q)


def arcs_from_support(nonzero: np.ndarray) -> list[tuple[int, int]]:
    """Canonical arcs from a boolean strictly-upper support matrix (0-based array).

    (i, j) is an arc when the entry is nonzero, no arc lies to its right in
    row i and no arc lies above it in column j; rows are resolved top-down.
    """
    n = nonzero.shape[0]
    taken = np.zeros(n, dtype=bool)
    arcs = []
    for i in range(n - 1):
        free = nonzero[i, i + 1:] & ~taken[i + 1:]
        hits = np.flatnonzero(free)
        if hits.size:
            j = i + 1 + int(hits[-1])
            taken[j] = True
            arcs.append((i + 1, j + 1))
    return arcs


def in_fiber(A: FqMatrix, pi: SetPartition) -> bool:
    """A lies in J_pi: arcs nonzero, regular non-arcs zero, singular pairs free."""
    if A.n != pi.n:
        return False
    reg, _ = regular_singular(pi)
    arcs = set(pi.arcs)
    for i, j in reg:
        nz = A.entry(i, j) != 0
        if nz != ((i, j) in arcs):
            return False
    return True


def sample_superplancherel(n: int, q: int = 2, seed: int = 0, index: int = 0) -> SetPartition:
    """Uniform strictly-upper entries over F_q, then canonicalize."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))
    entries = rng.integers(0, q, size=(n, n))
    support = np.triu(entries != 0, k=1)
    return SetPartition.from_arcs(n, arcs_from_support(support))


# superclasses

def _rook_pivots(n: int, F: Field, X: list[list[int]]) -> list[tuple[int, int, int]]:
    """Pivots (i, j, value), 1-based, of the rook normal form of a strictly upper X
    under row operations from below and column operations from the left."""
    used_rows: set[int] = set()
    pivots = []
    for j in range(n):
        rows = [i for i in range(j) if X[i][j] != 0 and i not in used_rows]
        if not rows:
            continue
        p = max(rows)
        piv = X[p][j]
        inv = F.inv(piv)
        for r in range(p):
            if X[r][j]:
                c = F.mul(X[r][j], inv)
                for t in range(n):
                    X[r][t] = F.sub(X[r][t], F.mul(c, X[p][t]))
        for l in range(j + 1, n):
            if X[p][l]:
                c = F.mul(X[p][l], inv)
                for t in range(n):
                    X[t][l] = F.sub(X[t][l], F.mul(c, X[t][j]))
        used_rows.add(p)
        pivots.append((p + 1, j + 1, piv))
    return pivots


def rook_normal_form(A: FqMatrix) -> tuple[tuple[int, int, int], ...]:
    F = field(A.q)
    X = [[A.entry(i, j) if i != j else 0 for j in range(1, A.n + 1)] for i in range(1, A.n + 1)]
    return tuple(sorted(_rook_pivots(A.n, F, X)))


def superclass_of(A: FqMatrix) -> SetPartition:
    return SetPartition.from_arcs(A.n, [(i, j) for i, j, _ in rook_normal_form(A)])


def _matmul(F: Field, X: list[list[int]], Y: list[list[int]]) -> list[list[int]]:
    n = len(X)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if X[i][k]:
                for j in range(n):
                    if Y[k][j]:
                        out[i][j] = F.add(out[i][j], F.mul(X[i][k], Y[k][j]))
    return out


def random_superclass_element(sigma: SetPartition, q: int = 2, seed: int = 0) -> FqMatrix:
    """1 + g X h with X supported on the arcs of sigma (random nonzero values)
    and g, h random upper unitriangular."""
    F = field(q)
    n = sigma.n
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, n, q])))

    def unitriangular():
        return [[1 if i == j else (int(rng.integers(q)) if j > i else 0) for j in range(n)]
                for i in range(n)]

    X = [[0] * n for _ in range(n)]
    for i, j in sigma.arcs:
        X[i - 1][j - 1] = int(rng.integers(1, q))
    Y = _matmul(F, _matmul(F, unitriangular(), X), unitriangular())
    for i in range(n):
        Y[i][i] = 1
    return FqMatrix.from_dense(Y, q)


def superclass_support(sigma: SetPartition) -> set[tuple[int, int]]:
    """Positions that can be nonzero in K_sigma: (a, b) with an arc (i, j) of
    sigma satisfying a <= i and j <= b."""
    return {(a, b) for i, j in sigma.arcs for a in range(1, i + 1) for b in range(j, sigma.n + 1)}


def two_sided_orbits(n: int, q: int) -> list[list[tuple[int, ...]]]:
    """Orbits of X = A - 1 under X -> g X h with g, h in U_n, by breadth-first search
    over elementary generators. States are flattened strictly-upper entries."""
    F = field(q)
    pos = {}
    for i in range(n):
        for j in range(i + 1, n):
            pos[(i, j)] = len(pos)

    def moves(state):
        X = [[0] * n for _ in range(n)]
        for (i, j), t in pos.items():
            X[i][j] = state[t]
        for a in range(n):
            for b in range(a + 1, n):
                for c in F.units:
                    # left by 1 + cE_ab: row a += c row b
                    Y = [row[:] for row in X]
                    for t in range(n):
                        Y[a][t] = F.add(Y[a][t], F.mul(c, X[b][t]))
                    yield tuple(Y[i][j] for (i, j) in pos)
                    # right by 1 + cE_ab: col b += c col a
                    Y = [row[:] for row in X]
                    for t in range(n):
                        Y[t][b] = F.add(Y[t][b], F.mul(c, X[t][a]))
                    yield tuple(Y[i][j] for (i, j) in pos)

    seen: set = set()
    orbits = []
    for start in itertools.product(range(q), repeat=len(pos)):
        if start in seen:
            continue
        seen.add(start)
        orbit = [start]
        queue = deque([start])
        while queue:
            for nxt in moves(queue.popleft()):
                if nxt not in seen:
                    seen.add(nxt)
                    orbit.append(nxt)
                    queue.append(nxt)
        orbits.append(orbit)
    return orbits


def superclass_sizes(n: int, q: int = 2) -> dict[SetPartition, int]:
    """|K_sigma| by classifying every element of U_n(F_q)."""
    sizes: dict[SetPartition, int] = {}
    for A in all_unitriangular(n, q):
        s = superclass_of(A)
        sizes[s] = sizes.get(s, 0) + 1
    return sizes


def supercharacter_table(n: int, q: int = 2) -> tuple[list[SetPartition], np.ndarray]:
    parts = sorted(set_partitions(n), key=lambda p: (len(p.arcs), p.arcs))
    table = np.array([[float(supercharacter_value(p, s, q)) for s in parts] for p in parts])
    return parts, table


def orthogonality_defects(n: int, q: int = 2) -> tuple[Fraction, Fraction]:
    """Largest deviation in the row relations sum_g chi^pi chi^pi' = |U| delta <chi,chi>
    and in the column relations sum_pi chi^pi(K) chi^pi(K') / <chi,chi> = |U|/|K| delta,
    with class sizes counted by brute force."""
    sizes = superclass_sizes(n, q)
    parts = list(set_partitions(n))
    order = q ** (n * (n - 1) // 2)
    val = {(p, s): supercharacter_value(p, s, q) for p in parts for s in parts}
    row = Fraction(0)
    for a in parts:
        for b in parts:
            total = sum(sizes.get(s, 0) * val[a, s] * val[b, s] for s in parts)
            target = order * character_norm(a, q) if a == b else 0
            row = max(row, abs(total - target))
    col = Fraction(0)
    for s in parts:
        for t in parts:
            total = sum(val[p, s] * val[p, t] / character_norm(p, q) for p in parts)
            target = Fraction(order, sizes[s]) if s == t else 0
            col = max(col, abs(total - target))
    return row, col


# superinduction

class QPolyCombo:
    """Formal sum of set partitions with polynomial-in-q coefficients."""

    def __init__(self, terms: dict | None = None):
        self.terms: dict[SetPartition, MultivarPoly] = {}
        for p, c in (terms or {}).items():
            self._add(p, c)

    def _add(self, p: SetPartition, c) -> None:
        c = c if isinstance(c, MultivarPoly) else _qpoly(c)
        total = self.terms.get(p, _qpoly(0)) + c
        if total.is_zero():
            self.terms.pop(p, None)
        else:
            self.terms[p] = total

    @classmethod
    def single(cls, p: SetPartition, c=1) -> "QPolyCombo":
        return cls({p: c})

    def __add__(self, other: "QPolyCombo") -> "QPolyCombo":
        out = QPolyCombo(self.terms)
        for p, c in other.terms.items():
            out._add(p, c)
        return out

    def scale(self, c) -> "QPolyCombo":
        return QPolyCombo({p: v * c for p, v in self.terms.items()})

    def coefficient(self, p: SetPartition) -> MultivarPoly:
        return self.terms.get(p, _qpoly(0))

    def items(self) -> list[tuple[SetPartition, MultivarPoly]]:
        return sorted(self.terms.items(), key=lambda kv: str(kv[0]))

    def evaluate(self, q) -> dict[SetPartition, Fraction]:
        return {p: c.evaluate([q]) for p, c in self.terms.items()}

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return " + ".join(f"({c})*[{p}]" for p, c in self.items()) or "0"


def star_product(pi: SetPartition, i: int, k: int) -> QPolyCombo:
    """The recursion pi *_i {k}; k must not be the end of an arc."""
    if not (1 <= i <= k <= pi.n):
        raise ValueError("need 1 <= i <= k <= n")
    if any(j == k for _, j in pi.arcs):
        raise ValueError("k must be the first element of its block")
    return _star(pi, i, k)


@lru_cache(maxsize=None)
def _star(pi: SetPartition, i: int, k: int) -> QPolyCombo:
    if i == k:
        return QPolyCombo.single(pi)
    out = dict(pi.arcs)
    arcs = set(pi.arcs)
    if i in out:
        j = out[i]
        if j > k:
            return _star(pi, i + 1, k).scale(Q)
        if j == k:
            return _star(pi.with_arcs(arcs - {(i, k)}), i + 1, k)
        moved = pi.with_arcs((arcs - {(i, j)}) | {(i, k)})
        return _star(pi, i + 1, k) + _star(moved, i + 1, j).scale(Q - 1)
    return _star(pi, i + 1, k) + QPolyCombo.single(pi.with_arcs(arcs | {(i, k)}))


def superinduce(pi: SetPartition) -> QPolyCombo:
    """Supercharacter expansion of the superinduction of chi^pi from U_n to U_{n+1}."""
    return star_product(pi.extend(pi.n + 1), 1, pi.n + 1)


def edge_multiplicity(pi: SetPartition, sigma: SetPartition) -> MultivarPoly:
    """kappa(pi, sigma) = c^sigma <chi^sigma, chi^sigma> / <chi^pi, chi^pi> as a polynomial in q."""
    c = superinduce(pi).coefficient(sigma)
    num = c * character_norm(sigma, None)
    den = character_norm(pi, None)
    quot = _divide_exact(num, den)
    if quot is None:
        raise ArithmeticError("edge multiplicity is not a polynomial in q")
    return quot


def _divide_exact(num: MultivarPoly, den: MultivarPoly) -> MultivarPoly | None:
    """Univariate exact polynomial division; None when not exact."""
    def dense(p):
        deg = max((e[0] for e, _ in p.items()), default=-1)
        out = [Fraction(0)] * (deg + 1)
        for (e,), c in p.items():
            out[e] = Fraction(c)
        return out

    a, b = dense(num), dense(den)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for t in range(len(a) - len(b), -1, -1):
        c = a[t + len(b) - 1] / b[-1]
        quot[t] = c
        for s, bc in enumerate(b):
            a[t + s] -= c * bc
    if any(a):
        return None
    return MultivarPoly.from_exponents(Q_NAMES, [((e,), c) for e, c in enumerate(quot) if c])


def transition_probabilities(pi: SetPartition, q=2) -> dict[SetPartition, Fraction]:
    """tr(pi, Lambda) = q^(-n) chi^Lambda(1)/chi^pi(1) c^Lambda."""
    n = pi.n
    deg = character_degree(pi, q)
    out = {}
    for lam, c in superinduce(pi).evaluate(q).items():
        out[lam] = c * character_degree(lam, q) / (Fraction(q) ** n * deg)
    return out


def superinduced_degree(pi: SetPartition) -> MultivarPoly:
    """SInd(chi^pi)(1) as a polynomial in q."""
    total = _qpoly(0)
    for lam, c in superinduce(pi).terms.items():
        total = total + c * character_degree(lam, None)
    return total


# measures on the triangle {0 <= x <= y <= 1}

@dataclass(frozen=True)
class CellMeasure:
    """(1/n) times the uniform probability on each cell [(i-1)/n, i/n] x [(j-1)/n, j/n]."""

    n: int
    cells: tuple[tuple[int, int], ...]

    @property
    def mass(self) -> Fraction:
        return Fraction(len(self.cells), self.n) if self.n else Fraction(0)

    def I1(self) -> Fraction:
        """Integral of (y - x)."""
        n = self.n
        return sum((Fraction(j - i, n * n) for i, j in self.cells), Fraction(0))

    def I2(self) -> Fraction:
        """Integral of 1[x1 < x2 < y1 < y2] against the product measure."""
        n = self.n
        w = Fraction(1, n * n)
        total = Fraction(0)
        for i, j in self.cells:
            for k, l in self.cells:
                if i < k < j < l:
                    total += w
                elif i < k and j == k and j < l:
                    total += w / 2
                elif i == k and j == l:
                    total += w / 4
        return total

    def I(self) -> Fraction:
        return Fraction(1, 2) - 2 * self.I1() + self.I2()

    def corner_mass(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """F(a, b) = mu([0, a] x [1 - b, 1]) on broadcast arrays a, b."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if not self.cells:
            return np.zeros(np.broadcast(a, b).shape)
        n = self.n
        c = np.asarray(self.cells, dtype=float)
        x0, y0 = (c[:, 0] - 1) / n, (c[:, 1] - 1) / n
        fx = np.clip((a[..., None] - x0) * n, 0.0, 1.0)
        fy = np.clip((y0 + 1.0 / n - (1.0 - b[..., None])) * n, 0.0, 1.0)
        return (fx * fy).sum(axis=-1) / n


def cell_measure(pi: SetPartition) -> CellMeasure:
    return CellMeasure(pi.n, pi.arcs)


# the anti-diagonal limit: Lebesgue on x in [0, 1/2], pushed to (x, 1 - x)
OMEGA_I1 = Fraction(1, 4)
OMEGA_I2 = Fraction(0)
OMEGA_MASS = Fraction(1, 2)


def omega_corner_mass(a, b) -> np.ndarray:
    return np.minimum(np.minimum(a, b), 0.5)


def omega_functionals(points: int = 0) -> tuple[float, float, float]:
    """(I1, I2, I) of the anti-diagonal measure; with points > 0 they are
    computed by midpoint quadrature instead of the closed forms."""
    if points <= 0:
        i1, i2 = OMEGA_I1, OMEGA_I2
        return float(i1), float(i2), float(Fraction(1, 2) - 2 * i1 + i2)
    x = (np.arange(points) + 0.5) / (2 * points)
    w = 1.0 / (2 * points)
    y = 1.0 - x
    i1 = float(((y - x) * w).sum())
    # x1 < x2 forces y1 > y2, so the indicator never fires
    ind = (x[:, None] < x[None, :]) & (x[None, :] < y[:, None]) & (y[:, None] < y[None, :])
    i2 = float(ind.sum() * w * w)
    return i1, i2, 0.5 - 2 * i1 + i2


def discrepancy_grid(grid: int) -> np.ndarray:
    if grid < 2:
        raise ValueError("grid must be at least 2")
    return (np.arange(grid) + 0.5) / (2 * grid)


def omega_discrepancy(pi: SetPartition | CellMeasure, grid: int = 50) -> float:
    """max over a midpoint grid on [0, 1/2]^2 of |F_mu(a, b) - min(a, b)|."""
    mu = pi if isinstance(pi, CellMeasure) else cell_measure(pi)
    g = discrepancy_grid(grid)
    A, B = np.meshgrid(g, g, indexing="ij")
    return float(np.abs(mu.corner_mass(A, B) - np.minimum(A, B)).max())


def nested_partition(n: int) -> SetPartition:
    """{1, n}, {2, n-1}, ... the discrete analogue of the anti-diagonal."""
    return SetPartition.from_arcs(n, [(i, n + 1 - i) for i in range(1, n // 2 + 1)])
