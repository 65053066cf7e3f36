"""Chevalley bases of sl_{n+1} and sp_{2n} from their matrix realizations.

The basis is stored in PBW normal order: the f-block, then ``h_1..h_n``,
then the e-block.  Structure constants are read off from matrix commutators,
so every sign below comes from one place.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .roots import PositiveRoot, RootSystem, root_system

__all__ = ["BasisElement", "LieAlgebra", "build_lie_algebra", "bracket", "f_factor_order"]

Matrix = dict  # (row, col) -> int, 1-based, sparse


@dataclass(frozen=True)
class BasisElement:
    kind: str  # "F", "H" or "E"
    root: PositiveRoot | None = None
    index: int | None = None  # simple index for H

    @property
    def name(self) -> str:
        if self.kind == "H":
            return f"h[{self.index}]"
        return self.kind.lower() + self.root.index_label

    def __str__(self) -> str:
        return self.name


def f_factor_order(rs: RootSystem) -> list[PositiveRoot]:
    """Left-to-right order of f-factors in a PBW monomial.

    Start index descending, then end descending: ``f[2,2]*f[1,2]*f[1,1]``.
    """
    return sorted(rs.roots, key=lambda r: (-r.start, -r.end))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    by_row: dict[int, list] = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: Matrix = {}
    for (i, k), v in a.items():
        for j, w in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + v * w
    return {key: v for key, v in out.items() if v}


def _commutator(a: Matrix, b: Matrix) -> Matrix:
    out = dict(_mat_mul(a, b))
    for key, v in _mat_mul(b, a).items():
        out[key] = out.get(key, 0) - v
    return {key: v for key, v in out.items() if v}


def _transpose(a: Matrix) -> Matrix:
    return {(j, i): v for (i, j), v in a.items()}


def _root_vector(rs: RootSystem, root: PositiveRoot) -> tuple[Matrix, tuple[int, int]]:
    """Matrix of e_root with entries in {0, +-1}, and its pivot position.

    Scaled by ``(-1)^(height - 1)``; in type A this is ``e_{i,j} = [e_j, e_{i,j-1}]``.
    """
    m, pos = _elementary_root_vector(rs, root)
    if root.height % 2 == 0:
        m = {k: -v for k, v in m.items()}
    return m, pos


def _elementary_root_vector(rs: RootSystem, root: PositiveRoot):
    n = rs.rank
    if rs.type == "A":
        pos = (root.start, root.end + 1)
        return {pos: 1}, pos
    # sp_{2n}: weights eps_1..eps_n, -eps_n..-eps_1 on rows 1..2n
    bar = lambda p: 2 * n + 1 - p  # noqa: E731
    i, e = root.start, root.end
    if e < n:
        pos = (i, e + 1)  # eps_i - eps_{e+1}
    elif e == n:
        pos = (i, bar(n))  # eps_i + eps_n
    else:
        pos = (i, bar(2 * n - e))  # eps_i + eps_j
    # project E_pos onto sp = {X : X^T J + J X = 0}; J antidiagonal, +1 top half
    a, b = pos
    other = (bar(b), bar(a))
    sign = (1 if b <= n else -1) * (1 if a <= n else -1)
    m = {pos: 1}
    if other == pos:
        return m, pos
    m[other] = -sign
    return m, pos


class LieAlgebra:
    """Chevalley basis with integer bracket table.

    ``table[a][b]`` is a tuple of ``(index, coeff)`` pairs giving
    ``[x_a, x_b]`` in the basis.  ``degenerate=True`` gives the PBW
    degeneration: the f's commute and brackets are projected to n^- whenever
    an f is involved.
    """

    def __init__(self, rs: RootSystem, degenerate: bool = False):
        self.root_system = rs
        self.degenerate = degenerate
        n = rs.rank
        self.f_roots = f_factor_order(rs)
        self.e_roots = list(self.f_roots)
        basis = [BasisElement("F", r) for r in self.f_roots]
        basis += [BasisElement("H", index=i) for i in range(1, n + 1)]
        basis += [BasisElement("E", r) for r in self.e_roots]
        self.basis: tuple[BasisElement, ...] = tuple(basis)
        self.n_f = len(self.f_roots)
        self.h_offset = self.n_f
        self.e_offset = self.n_f + n
        self.dim = len(basis)
        self.f_index = {r: k for k, r in enumerate(self.f_roots)}
        self.e_index = {r: self.e_offset + k for k, r in enumerate(self.e_roots)}
        self.index = {b: k for k, b in enumerate(basis)}

        self.matrix_size = n + 1 if rs.type == "A" else 2 * n
        mats: list[Matrix] = [None] * self.dim
        self._pivot: dict[tuple[int, int], tuple[int, int]] = {}  # pos -> (basis idx, value)
        for r in rs.roots:
            m, pos = _root_vector(rs, r)
            mats[self.e_index[r]] = m
            mats[self.f_index[r]] = _transpose(m)
            self._pivot[pos] = (self.e_index[r], m[pos])
            self._pivot[(pos[1], pos[0])] = (self.f_index[r], m[pos])
        for i in range(1, n + 1):
            s = rs.simple(i)
            mats[self.h_offset + i - 1] = _commutator(mats[self.e_index[s]], mats[self.f_index[s]])
        self.matrices: tuple[Matrix, ...] = tuple(mats)
        self.table = self._build_table()

    def __repr__(self) -> str:
        d = ", degenerate" if self.degenerate else ""
        return f"LieAlgebra({self.root_system.type!r}, {self.root_system.rank}{d})"

    # matrix -> basis coordinates
    def decompose(self, m: Matrix) -> dict[int, int]:
        out: dict[int, int] = {}
        n = self.root_system.rank
        diag = {}
        for (i, j), v in m.items():
            if i == j:
                diag[i] = v
                continue
            idx, unit = self._pivot.get((i, j), (None, None))
            if idx is not None:
                out[idx] = out.get(idx, 0) + v * unit
        # h_k coefficient = t_1 + ... + t_k on the first n diagonal entries
        acc = 0
        for k in range(1, n + 1):
            acc += diag.get(k, 0)
            if acc:
                out[self.h_offset + k - 1] = acc
        out = {k: v for k, v in out.items() if v}
        rebuilt: Matrix = {}
        for k, v in out.items():
            for pos, w in self.matrices[k].items():
                rebuilt[pos] = rebuilt.get(pos, 0) + v * w
        rebuilt = {k: v for k, v in rebuilt.items() if v}
        if rebuilt != m:
            raise ArithmeticError("matrix is not in the span of the Chevalley basis")
        return out

    def _build_table(self):
        table = []
        for a in range(self.dim):
            row = []
            for b in range(self.dim):
                if a == b:
                    row.append(())
                    continue
                coeffs = self.decompose(_commutator(self.matrices[a], self.matrices[b]))
                if self.degenerate and (self.is_f(a) or self.is_f(b)):
                    coeffs = {k: v for k, v in coeffs.items() if self.is_f(k)}
                    if self.is_f(a) and self.is_f(b):
                        coeffs = {}
                row.append(tuple(sorted(coeffs.items())))
            table.append(tuple(row))
        return tuple(table)

    def is_f(self, k: int) -> bool:
        return k < self.n_f

    def is_h(self, k: int) -> bool:
        return self.h_offset <= k < self.e_offset

    def is_e(self, k: int) -> bool:
        return k >= self.e_offset

    def f(self, root: PositiveRoot) -> int:
        return self.f_index[root]

    def e(self, root: PositiveRoot) -> int:
        return self.e_index[root]

    def h(self, i: int) -> int:
        return self.h_offset + i - 1

    def coroot_element(self, root: PositiveRoot) -> dict[int, int]:
        """``h_root = [e_root, f_root]`` in the basis ``h_1..h_n``."""
        return dict(self.table[self.e(root)][self.f(root)])

    @cached_property
    def degeneration(self) -> "LieAlgebra":
        if self.degenerate:
            return self
        return LieAlgebra(self.root_system, degenerate=True)

    def weight(self, k: int) -> tuple[int, ...]:
        """Root-lattice weight of basis element ``k``."""
        b = self.basis[k]
        if b.kind == "H":
            return (0,) * self.root_system.rank
        sign = 1 if b.kind == "E" else -1
        return tuple(sign * c for c in b.root.coefficients)

    def bracket(self, x: dict[int, int], y: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, u in x.items():
            for b, v in y.items():
                for k, c in self.table[a][b]:
                    out[k] = out.get(k, 0) + u * v * c
        return {k: v for k, v in out.items() if v}


_ALGEBRAS: dict[tuple[str, int, bool], LieAlgebra] = {}


def build_lie_algebra(cartan_type: str, rank: int, degenerate: bool = False) -> LieAlgebra:
    rs = root_system(cartan_type, rank)
    key = (rs.type, rs.rank, degenerate)
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = LieAlgebra(rs, degenerate=degenerate)
    return _ALGEBRAS[key]


def bracket(alg: LieAlgebra, x, y) -> dict[int, int]:
    """Bilinear bracket of two linear combinations ``{basis index: coeff}``."""
    return alg.bracket(x, y)
