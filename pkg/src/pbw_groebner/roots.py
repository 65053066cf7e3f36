"""Positive roots, orderings and weights for the root systems A_n and C_n.

Roots are indexed by a pair ``(start, end)`` where ``end`` runs through the
extended chain ``1 < 2 < ... < n < n-1bar < ... < 1bar``.  Position ``n + k``
of the chain is the barred index ``n - k``, so ``a[i,-j]`` has
``end == 2n - j``.  Type A only uses ends ``<= n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import prod

__all__ = [
    "UnsupportedTypeError",
    "PositiveRoot",
    "RootSystem",
    "DominantWeight",
    "Comparison",
    "root_system",
    "positive_roots",
    "root_leq",
    "good_ordering",
    "coroot_pairing",
    "weyl_dim",
]

SUPPORTED_TYPES = ("A", "C")


class UnsupportedTypeError(ValueError):
    """Raised for Cartan types other than A and C."""


class Comparison(enum.Enum):
    LEQ = "less-or-equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, order=True)
class PositiveRoot:
    start: int
    end: int
    rank: int = field(compare=False)
    coefficients: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def is_simple(self) -> bool:
        return sum(self.coefficients) == 1

    @property
    def height(self) -> int:
        return sum(self.coefficients)

    @property
    def label(self) -> str:
        """Text name, ``a[i,j]`` or ``a[i,-j]`` for barred ends."""
        return "a" + self.index_label

    @property
    def index_label(self) -> str:
        if self.end <= self.rank:
            return f"[{self.start},{self.end}]"
        return f"[{self.start},-{2 * self.rank - self.end}]"

    def __str__(self) -> str:
        return self.label


def _check_type(cartan_type: str, rank: int) -> str:
    t = str(cartan_type).upper()
    if t not in SUPPORTED_TYPES:
        raise UnsupportedTypeError(f"type {cartan_type} not in scope (only A and C)")
    if int(rank) < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    return t


def _coefficients(t: str, n: int, start: int, end: int) -> tuple[int, ...]:
    c = [0] * n
    if end <= n:
        for k in range(start, end + 1):
            c[k - 1] = 1
        return tuple(c)
    j = 2 * n - end
    for k in range(start, j):
        c[k - 1] = 1
    for k in range(j, n):
        c[k - 1] = 2
    c[n - 1] = 1
    return tuple(c)


class RootSystem:
    """Positive roots of A_n or C_n with the orderings used downstream."""

    def __init__(self, cartan_type: str, rank: int):
        self.type = _check_type(cartan_type, rank)
        self.rank = n = int(rank)
        roots = []
        for i in range(1, n + 1):
            last = n if self.type == "A" else 2 * n - i
            for e in range(i, last + 1):
                roots.append(PositiveRoot(i, e, n, _coefficients(self.type, n, i, e)))
        self.roots: tuple[PositiveRoot, ...] = tuple(roots)
        self._by_pair = {(r.start, r.end): r for r in roots}
        self._by_coeffs = {r.coefficients: r for r in roots}

    def __repr__(self) -> str:
        return f"RootSystem({self.type!r}, {self.rank})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and (self.type, self.rank) == (other.type, other.rank)

    def __hash__(self) -> int:
        return hash((self.type, self.rank))

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"

    def root(self, start: int, end: int) -> PositiveRoot:
        return self._by_pair[(start, end)]

    def get(self, start: int, end: int) -> PositiveRoot | None:
        return self._by_pair.get((start, end))

    def from_coefficients(self, coeffs) -> PositiveRoot | None:
        return self._by_coeffs.get(tuple(coeffs))

    def from_label(self, label: str) -> PositiveRoot:
        body = label.strip()
        if body.startswith("a"):
            body = body[1:]
        i, j = (int(x) for x in body.strip("[]").split(","))
        end = j if j > 0 else 2 * self.rank + j
        return self.root(i, end)

    def simple(self, i: int) -> PositiveRoot:
        return self._by_pair[(i, i)]

    @property
    def highest_root(self) -> PositiveRoot:
        return max(self.roots, key=lambda r: r.height)

    # symmetric bilinear form on the root lattice, simple-root coordinates
    @cached_property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        g = [[0] * n for _ in range(n)]
        for k in range(n):
            g[k][k] = 2
            if k + 1 < n:
                g[k][k + 1] = g[k + 1][k] = -1
        if self.type == "C":
            g[n - 1][n - 1] = 4
            if n > 1:
                g[n - 2][n - 1] = g[n - 1][n - 2] = -2
        return tuple(tuple(row) for row in g)

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """``A[i][j] = <alpha_j, alpha_i^vee>``."""
        g = self.gram
        n = self.rank
        return tuple(tuple(2 * g[i][j] // g[i][i] for j in range(n)) for i in range(n))

    def form(self, x, y) -> int:
        g = self.gram
        return sum(x[a] * g[a][b] * y[b] for a in range(self.rank) for b in range(self.rank) if x[a] and y[b])

    def coroot(self, alpha: PositiveRoot) -> tuple[int, ...]:
        """Coefficients of ``alpha^vee`` in the simple coroots."""
        norm = self.form(alpha.coefficients, alpha.coefficients)
        out = []
        for k, a in enumerate(alpha.coefficients):
            c = Fraction(a * self.gram[k][k], norm)
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)


def root_system(cartan_type: str, rank: int) -> RootSystem:
    return _cached_root_system(_check_type(cartan_type, rank), int(rank))


_CACHE: dict[tuple[str, int], RootSystem] = {}


def _cached_root_system(t: str, n: int) -> RootSystem:
    key = (t, n)
    if key not in _CACHE:
        _CACHE[key] = RootSystem(t, n)
    return _CACHE[key]


def positive_roots(cartan_type: str, rank: int) -> list[PositiveRoot]:
    return list(root_system(cartan_type, rank).roots)


def root_leq(a: PositiveRoot, b: PositiveRoot) -> Comparison:
    """Componentwise comparison of ``(start, end)`` in the extended chain."""
    if a.start <= b.start and a.end <= b.end:
        return Comparison.LEQ
    if b.start <= a.start and b.end <= a.end:
        return Comparison.GREATER
    return Comparison.INCOMPARABLE


def good_ordering(cartan_type: str, rank: int) -> list[PositiveRoot]:
    """Total order on positive roots, largest first.

    Height descending, ties broken by start index ascending.
    """
    rs = root_system(cartan_type, rank)
    return sorted(rs.roots, key=lambda r: (-r.height, r.start))


@dataclass(frozen=True)
class DominantWeight:
    """``sum m_i omega_i`` together with its partition coordinates."""

    system: RootSystem
    m: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        if len(m) != self.system.rank:
            raise ValueError(f"expected {self.system.rank} weight coefficients, got {len(m)}")
        if any(x < 0 for x in m):
            raise ValueError(f"weight coefficients must be non-negative: {m}")
        object.__setattr__(self, "m", m)

    @classmethod
    def of(cls, cartan_type: str, rank: int, m) -> "DominantWeight":
        return cls(root_system(cartan_type, rank), tuple(m))

    @property
    def partition(self) -> tuple[int, ...]:
        """``(lambda_1, ..., lambda_n, 0)`` with ``lambda_i = m_i + ... + m_n``."""
        lam = [0] * (len(self.m) + 1)
        for i in range(len(self.m) - 1, -1, -1):
            lam[i] = lam[i + 1] + self.m[i]
        return tuple(lam)

    def interval_sum(self, i: int, j: int) -> int:
        """``m_i + ... + m_j`` (1-based, inclusive)."""
        return sum(self.m[i - 1 : j])

    def __str__(self) -> str:
        terms = [f"{c}w{i}" if c != 1 else f"w{i}" for i, c in enumerate(self.m, 1) if c]
        return " + ".join(terms) or "0"


def coroot_pairing(lam: DominantWeight, alpha: PositiveRoot) -> int:
    """``lambda(h_alpha)``."""
    return sum(c * m for c, m in zip(lam.system.coroot(alpha), lam.m))


def weyl_dim(lam: DominantWeight) -> int:
    num, den = [], []
    for alpha in lam.system.roots:
        cv = lam.system.coroot(alpha)
        num.append(sum(c * (m + 1) for c, m in zip(cv, lam.m)))
        den.append(sum(cv))
    d = Fraction(prod(num), prod(den))
    assert d.denominator == 1
    return int(d)
