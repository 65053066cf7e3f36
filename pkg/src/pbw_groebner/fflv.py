"""Dyck paths, FFLV polytopes and their minimal violators.

A Dyck path is stored as a maximal chain of positive roots from a simple
root ``a[i,i]`` to a sink, moving by unit steps ``(p, q) -> (p, q+1)`` or
``(p, q) -> (p+1, q)`` in the extended chain.  Sinks are the simple roots
and, in type C, the highest roots ``a[j,-j]`` of the symplectic subdiagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .roots import DominantWeight, PositiveRoot, RootSystem, good_ordering

__all__ = [
    "DyckPath",
    "ExponentVector",
    "Violator",
    "sinks",
    "enumerate_dyck_paths",
    "path_bound",
    "in_polytope",
    "fflv_points",
    "minimal_violators",
    "exponent_to_json",
    "exponent_from_json",
]

# sparse map PositiveRoot -> positive exponent, frozen for hashing
ExponentVector = frozenset


def exponents(s) -> ExponentVector:
    items = s.items() if isinstance(s, dict) else s
    return frozenset((r, k) for r, k in items if k)


def degree(s: ExponentVector) -> int:
    return sum(k for _, k in s)


@dataclass(frozen=True)
class DyckPath:
    roots: tuple[PositiveRoot, ...]
    source: int
    sink: PositiveRoot
    symplectic: bool  # sink is a type-C subdiagram highest root (or a[n,n] in type C)

    def __len__(self) -> int:
        return len(self.roots)

    def __str__(self) -> str:
        return "(" + ", ".join(r.label for r in self.roots) + ")"

    def bound(self, lam: DominantWeight) -> int:
        return path_bound(self, lam)


def sinks(rs: RootSystem, i: int) -> list[tuple[PositiveRoot, bool]]:
    """Admissible sinks for paths from ``a[i,i]``, with the symplectic flag."""
    n = rs.rank
    out = []
    for j in range(i, n + 1):
        symplectic = rs.type == "C" and j == n
        out.append((rs.simple(j), symplectic))
    if rs.type == "C":
        for j in range(i, n):
            out.append((rs.root(j, 2 * n - j), True))
    return out


@lru_cache(maxsize=None)
def enumerate_dyck_paths(rs: RootSystem) -> dict[tuple[int, PositiveRoot], tuple[DyckPath, ...]]:
    """All maximal unit-step chains, keyed by ``(source, sink)``."""
    out: dict[tuple[int, PositiveRoot], tuple[DyckPath, ...]] = {}
    for i in range(1, rs.rank + 1):
        for sink, symplectic in sinks(rs, i):
            found: list[tuple[PositiveRoot, ...]] = []

            def walk(chain):
                cur = chain[-1]
                if cur == sink:
                    found.append(tuple(chain))
                    return
                for p, q in ((cur.start, cur.end + 1), (cur.start + 1, cur.end)):
                    nxt = rs.get(p, q)
                    if nxt is not None and p <= sink.start and q <= sink.end:
                        walk(chain + [nxt])

            walk([rs.simple(i)])
            out[(i, sink)] = tuple(DyckPath(p, i, sink, symplectic) for p in sorted(found))
    return out


def all_paths(rs: RootSystem) -> list[DyckPath]:
    return [p for paths in enumerate_dyck_paths(rs).values() for p in paths]


def path_bound(p: DyckPath, lam: DominantWeight) -> int:
    """``m_i + ... + m_j`` for a path from ``a[i,i]`` to ``a[j,j]``; up to ``m_n`` for symplectic sinks."""
    if p.symplectic:
        return lam.interval_sum(p.source, lam.system.rank)
    return lam.interval_sum(p.source, p.sink.start)


def sink_key(source: int, sink: PositiveRoot) -> tuple[int, int, int]:
    return (source, sink.start, sink.end)


@lru_cache(maxsize=None)
def _constraints(lam: DominantWeight) -> tuple[tuple[frozenset, int], ...]:
    """Distinct ``(root set, bound)`` inequalities, tightest first."""
    best: dict[frozenset, int] = {}
    for p in all_paths(lam.system):
        key = frozenset(p.roots)
        b = path_bound(p, lam)
        best[key] = min(b, best.get(key, b))
    return tuple(sorted(best.items(), key=lambda kv: (kv[1], len(kv[0]))))


def in_polytope(s, lam: DominantWeight) -> bool:
    sd = dict(s)
    for roots, b in _constraints(lam):
        if sum(sd.get(r, 0) for r in roots) > b:
            return False
    return True


def violated_paths(s, lam: DominantWeight) -> list[DyckPath]:
    sd = dict(s)
    return [p for p in all_paths(lam.system) if sum(sd.get(r, 0) for r in p.roots) > path_bound(p, lam)]


@lru_cache(maxsize=None)
def fflv_points(lam: DominantWeight) -> frozenset[ExponentVector]:
    """Lattice points of the FFLV polytope of ``lam``."""
    rs = lam.system
    roots = good_ordering(rs.type, rs.rank)
    cons = _constraints(lam)
    through = {r: [k for k, (rt, _) in enumerate(cons) if r in rt] for r in roots}
    sums = [0] * len(cons)
    out = []
    cur: list[tuple[PositiveRoot, int]] = []

    def rec(pos):
        if pos == len(roots):
            out.append(frozenset(cur))
            return
        r = roots[pos]
        cap = min((cons[k][1] - sums[k] for k in through[r]), default=0)
        for v in range(cap + 1):
            for k in through[r]:
                sums[k] += v
            if v:
                cur.append((r, v))
            rec(pos + 1)
            if v:
                cur.pop()
            for k in through[r]:
                sums[k] -= v

    rec(0)
    return frozenset(out)


@dataclass(frozen=True)
class Violator:
    s: ExponentVector
    source: int
    sink: PositiveRoot
    path: DyckPath

    @property
    def degree(self) -> int:
        return degree(self.s)

    def as_dict(self) -> dict[PositiveRoot, int]:
        return dict(self.s)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def is_minimal_violator(s, lam: DominantWeight) -> bool:
    sd = {r: k for r, k in dict(s).items() if k}
    if in_polytope(sd, lam):
        return False
    for r, k in sd.items():
        t = dict(sd)
        t[r] = k - 1
        if not in_polytope(t, lam):
            return False
    return True


@lru_cache(maxsize=None)
def minimal_violators(lam: DominantWeight) -> tuple[Violator, ...]:
    """Exponent vectors on a single path exceeding its bound by one, all of whose
    proper predecessors lie in the polytope.

    Each vector is reported once, attributed to the smallest ``(source, sink)``.
    """
    found: dict[ExponentVector, Violator] = {}
    paths = enumerate_dyck_paths(lam.system)
    for key in sorted(paths, key=lambda k: sink_key(*k)):
        for p in paths[key]:
            d = path_bound(p, lam) + 1
            for comp in _compositions(d, len(p.roots)):
                s = exponents(zip(p.roots, comp))
                if s in found:
                    continue
                if is_minimal_violator(s, lam):
                    found[s] = Violator(s, key[0], key[1], p)
    return tuple(found.values())


def exponent_to_json(s) -> list[dict]:
    return [{"root": r.label, "exp": k} for r, k in sorted(dict(s).items()) if k]


def exponent_from_json(rs: RootSystem, items) -> ExponentVector:
    return exponents((rs.from_label(d["root"]), int(d["exp"])) for d in items)
