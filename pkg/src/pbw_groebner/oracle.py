"""Explicit highest-weight modules inside tensor products of exterior powers.

V(lambda) is realised as the cyclic span of the tensor product of highest
vectors ``e_1 ^ ... ^ e_k`` in ``(Lambda^k V)^{tensor m_k}``, with ``V`` the
vector representation from :mod:`chevalley`.  Everything is exact; vectors
are sparse dicts with integer or ``Fraction`` entries.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .chevalley import build_lie_algebra
from .fflv import fflv_points
from .roots import DominantWeight, weyl_dim
from .uea import Element

__all__ = [
    "OracleBudgetError",
    "ExplicitModule",
    "build_module",
    "annihilates_hw",
    "fflv_independent",
    "exact_rank",
    "EchelonBasis",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10_000


class OracleBudgetError(RuntimeError):
    """The ambient tensor space is larger than the allowed budget."""

    def __init__(self, ambient: int, budget: int):
        super().__init__(f"ambient dimension {ambient} exceeds oracle budget {budget}")
        self.ambient = ambient
        self.budget = budget


class EchelonBasis:
    """Incremental fraction-free row echelon form over sparse integer rows."""

    def __init__(self):
        self.rows: list[tuple[object, dict]] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        v = _integral(v)
        for pivot, row in self.rows:
            a = v.get(pivot)
            if not a:
                continue
            b = row[pivot]
            out = {k: b * x for k, x in v.items()}
            for k, y in row.items():
                out[k] = out.get(k, 0) - a * y
            v = _primitive({k: x for k, x in out.items() if x})
        return v

    def add(self, v: dict) -> bool:
        """Insert ``v``; return whether it was independent."""
        v = self.reduce(v)
        if not v:
            return False
        self.rows.append((min(v), v))
        return True


def _integral(v: dict) -> dict:
    den = 1
    for x in v.values():
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    return _primitive({k: int(x * den) for k, x in v.items() if x})


def _primitive(v: dict) -> dict:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            return v
    return {k: x // g for k, x in v.items()} if g else v


def exact_rank(vectors) -> int:
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return len(basis)


def _wedge_action(matrix: dict, subset: tuple[int, ...]) -> dict:
    """``X (e_S)`` in the wedge basis for a sparse vector-rep matrix ``X``."""
    by_col: dict[int, list] = {}
    for (r, c), v in matrix.items():
        by_col.setdefault(c, []).append((r, v))
    out: dict[tuple[int, ...], int] = {}
    members = set(subset)
    for p, c in enumerate(subset):
        for r, v in by_col.get(c, ()):
            if r != c and r in members:
                continue
            rest = subset[:p] + subset[p + 1 :]
            q = sum(1 for x in rest if x < r)
            new = rest[:q] + (r,) + rest[q:]
            sign = -1 if (p - q) % 2 else 1
            out[new] = out.get(new, 0) + sign * v
    return {k: v for k, v in out.items() if v}


class ExplicitModule:
    def __init__(self, lam: DominantWeight, budget: int = DEFAULT_BUDGET):
        rs = lam.system
        self.lam = lam
        self.lie = build_lie_algebra(rs.type, rs.rank)
        size = self.lie.matrix_size
        self.factors: tuple[int, ...] = tuple(k for k in range(1, rs.rank + 1) for _ in range(lam.m[k - 1]))
        self.ambient_dim = 1
        for k in self.factors:
            self.ambient_dim *= comb(size, k)
        if self.ambient_dim > budget:
            raise OracleBudgetError(self.ambient_dim, budget)
        self.hw = {tuple(tuple(range(1, k + 1)) for k in self.factors): 1}
        self._cache: dict[tuple[int, tuple[int, ...]], dict] = {}
        self._span_dim: int | None = None

    def __repr__(self) -> str:
        return f"ExplicitModule({self.lam.system.name}, m={self.lam.m}, ambient={self.ambient_dim})"

    def _wedge(self, idx: int, subset: tuple[int, ...]) -> dict:
        key = (idx, subset)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = _wedge_action(self.lie.matrices[idx], subset)
        return hit

    def act(self, idx: int, vec: dict) -> dict:
        """Action of basis element ``idx`` on a tensor vector (Leibniz rule)."""
        out: dict = {}
        for key, c in vec.items():
            for p, subset in enumerate(key):
                for new, v in self._wedge(idx, subset).items():
                    nk = key[:p] + (new,) + key[p + 1 :]
                    out[nk] = out.get(nk, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def apply(self, x: Element, vec: dict | None = None) -> dict:
        """``rho(x) vec``; each PBW word acts right to left."""
        vec = self.hw if vec is None else vec
        out: dict = {}
        for mono, c in x.terms.items():
            w = vec
            for k in range(len(mono) - 1, -1, -1):
                for _ in range(mono[k]):
                    w = self.act(k, w)
                    if not w:
                        break
                if not w:
                    break
            for key, v in w.items():
                out[key] = out.get(key, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def f_word_vector(self, s) -> dict:
        """``f^s v_lambda`` with factors in PBW normal order."""
        lie = self.lie
        exps = dict(s)
        w = self.hw
        for k in range(lie.n_f - 1, -1, -1):
            for _ in range(exps.get(lie.f_roots[k], 0)):
                w = self.act(k, w)
        return w

    def cyclic_span_dim(self) -> int:
        """Dimension of ``U(n^-) v_lambda`` by breadth-first f-application."""
        if self._span_dim is None:
            self._span_dim = self._compute_span_dim()
        return self._span_dim

    def _compute_span_dim(self) -> int:
        rs = self.lam.system
        bases: dict[tuple[int, ...], EchelonBasis] = {}
        queue = [((0,) * rs.rank, self.hw)]
        while queue:
            wt, v = queue.pop()
            basis = bases.setdefault(wt, EchelonBasis())
            if not basis.add(v):
                continue
            for r in rs.roots:
                w = self.act(self.lie.f(r), v)
                if w:
                    queue.append((tuple(a + b for a, b in zip(wt, r.coefficients)), w))
        return sum(len(b) for b in bases.values())


@lru_cache(maxsize=64)
def build_module(lam: DominantWeight, budget: int = DEFAULT_BUDGET) -> ExplicitModule:
    return ExplicitModule(lam, budget)


def annihilates_hw(x: Element, lam: DominantWeight, module: ExplicitModule | None = None) -> bool:
    module = module or build_module(lam)
    return not module.apply(x)


def fflv_independent(lam: DominantWeight, module: ExplicitModule | None = None) -> bool:
    """Whether ``{f^s v_lambda : s in the FFLV polytope}`` has rank ``weyl_dim(lam)``."""
    module = module or build_module(lam)
    by_weight: dict[tuple[int, ...], list] = {}
    for s in fflv_points(lam):
        wt = [0] * lam.system.rank
        for r, k in s:
            for i, c in enumerate(r.coefficients):
                wt[i] += k * c
        by_weight.setdefault(tuple(wt), []).append(module.f_word_vector(s))
    rank = sum(exact_rank(vs) for vs in by_weight.values())
    return rank == weyl_dim(lam)
