"""The minimal left Groebner basis of the annihilator of ``v_lambda``.

Generators are ``e_alpha``, ``h_alpha - lambda(h_alpha)`` and one straightened
power of a root vector per minimal violator of the FFLV polytope.  The
straightening operator is a word of e-powers applied to ``f_top^d``; modulo
the linear generators the nested commutator equals the plain product, so the
word is evaluated directly in U(n^-) (the Verma module).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .fflv import ExponentVector, Violator, fflv_points, minimal_violators
from .oracle import OracleBudgetError, build_module
from .roots import DominantWeight, PositiveRoot, RootSystem, coroot_pairing, good_ordering, weyl_dim
from .uea import UEA, Element, Monomial, enveloping_algebra

__all__ = [
    "StraighteningError",
    "EnumerationLimitError",
    "Provenance",
    "Generator",
    "GroebnerBasis",
    "partial_operator_A",
    "top_root",
    "straighten",
    "search_operator",
    "build_groebner_basis",
    "left_reduce",
    "standard_monomials",
    "verify_groebner",
    "verify_minimal",
    "is_reduced",
    "verify_degenerate",
]

log = logging.getLogger(__name__)

Word = tuple[tuple[PositiveRoot, int], ...]


class StraighteningError(RuntimeError):
    """No operator with the required leading monomial was found."""


class EnumerationLimitError(RuntimeError):
    """Standard-monomial enumeration ran past its guard."""


@dataclass(frozen=True)
class Provenance:
    kind: str  # "e", "h" or "f"
    root: PositiveRoot | None = None
    s: ExponentVector | None = None
    source: int | None = None
    sink: PositiveRoot | None = None
    path: tuple[PositiveRoot, ...] = ()
    top: PositiveRoot | None = None
    power: int = 0
    word: Word = ()
    method: str = ""


@dataclass(frozen=True)
class Generator:
    element: Element
    provenance: Provenance

    @property
    def leading_monomial(self) -> Monomial:
        return self.element.leading_monomial

    def __str__(self) -> str:
        return str(self.element)


@dataclass
class GroebnerBasis:
    """``elements`` is the pruned minimal basis, ``full`` keeps every ``h_alpha``."""

    lam: DominantWeight
    algebra: UEA
    elements: list[Generator]
    full: list[Generator] = field(default_factory=list)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    @property
    def f_type(self) -> list[Generator]:
        return [g for g in self.elements if g.provenance.kind == "f"]

    def polynomials(self) -> list[Element]:
        return [g.element for g in self.elements]

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial for g in self.elements]

    def with_extra(self, *extra: Element) -> "GroebnerBasis":
        gens = self.elements + [Generator(x.monic(), Provenance("extra")) for x in extra]
        return GroebnerBasis(self.lam, self.algebra, gens, self.full)


# -- straightening operators --------------------------------------------------


def partial_operator_A(s, start: int, end: int, rs: RootSystem) -> Word:
    """The e-power word of the type-A straightening operator on ``[start, end]``.

    Listed in application order (innermost first):
    ``e_{p+1,k}^{s(.,p)}`` for ``p = l..k-1``, then ``e_{l,p-1}^{s(p,.)}`` for
    ``p = k..l+1``, with column sums ``s(.,p)`` and row sums ``s(p,.)``.
    Zero powers are dropped.
    """
    sd = dict(s)
    col = lambda p: sum(v for r, v in sd.items() if r.end == p)  # noqa: E731
    row = lambda p: sum(v for r, v in sd.items() if r.start == p)  # noqa: E731
    word = [(rs.root(p + 1, end), col(p)) for p in range(start, end)]
    word += [(rs.root(start, p - 1), row(p)) for p in range(end, start, -1)]
    return tuple((r, a) for r, a in word if a)


def top_root(rs: RootSystem, source: int, sink: PositiveRoot, symplectic: bool) -> PositiveRoot:
    """Root whose power is straightened: ``a[i,j]``, or the long root ``a[i,-i]`` for symplectic sinks."""
    if symplectic:
        return rs.root(source, 2 * rs.rank - source)
    return rs.root(source, sink.start)


def _target_weight(s, top: PositiveRoot, d: int, n: int) -> tuple[int, ...]:
    w = [d * c for c in top.coefficients]
    for r, k in dict(s).items():
        for i, c in enumerate(r.coefficients):
            w[i] -= k * c
    return tuple(w)


def search_operator(
    alg: UEA,
    s,
    top: PositiveRoot,
    d: int,
    lam: DominantWeight,
    max_length: int = 4,
) -> Word:
    """First e-power word (by length, then good order) giving leading monomial ``f^s``.

    Candidate words have total weight ``d*top - sum s_a a``.  Leading monomials
    are tested in the PBW degeneration, where all terms have degree ``d``.
    """
    rs = alg.root_system
    target = alg.f_monomial(dict(s))
    weight = _target_weight(s, top, d, rs.rank)
    if any(c < 0 for c in weight):
        raise StraighteningError(f"negative target weight {weight} for s={_fmt_s(s)}")
    if not any(weight):
        return ()
    deg = alg.degeneration
    roots = good_ordering(rs.type, rs.rank)
    budget = d * top.height
    start = deg.reduce_modulo_linear(deg.f(top, d), lam)
    cache: dict[Word, Element] = {(): start}

    def value(word: Word) -> Element:
        hit = cache.get(word)
        if hit is None:
            prev = value(word[:-1])
            r, a = word[-1]
            hit = deg.reduce_modulo_linear(deg.e(r, a) * prev, lam) if prev else prev
            cache[word] = hit
        return hit

    def extend(word: Word, remaining: tuple[int, ...], length: int, used: int):
        if length == 0:
            if not any(remaining):
                yield word
            return
        for r in roots:
            if word and word[-1][0] == r:
                continue
            cap = min((remaining[i] // c for i, c in enumerate(r.coefficients) if c), default=0)
            cap = min(cap, budget - used)
            for a in range(cap, 0, -1):
                rem = tuple(x - a * c for x, c in zip(remaining, r.coefficients))
                w = word + ((r, a),)
                if not value(w):
                    continue
                yield from extend(w, rem, length - 1, used + a)

    for length in range(1, max_length + 1):
        for word in extend((), weight, length, 0):
            x = value(word)
            if x and x.leading_monomial == target:
                return word
    raise StraighteningError(
        f"no straightening operator of length <= {max_length} for s={_fmt_s(s)}, top={top.label}, d={d}"
    )


def _fmt_s(s) -> str:
    return "{" + ", ".join(f"{r.label}: {k}" for r, k in sorted(dict(s).items())) + "}"


def straighten(
    v: Violator,
    lam: DominantWeight,
    method: str = "auto",
    alg: UEA | None = None,
) -> tuple[Element, Provenance]:
    """Monic element of U(n^-) in the annihilator of ``v_lambda`` with leading monomial ``f^s``.

    ``method`` is ``"formula"`` (type-A operator), ``"search"``, or ``"auto"``
    (formula when the path avoids the symplectic part, search otherwise).
    """
    rs = lam.system
    alg = alg or enveloping_algebra(rs.type, rs.rank)
    symplectic = v.path.symplectic
    top = top_root(rs, v.source, v.sink, symplectic)
    d = v.degree
    if method == "auto":
        method = "search" if symplectic else "formula"
    if method == "formula":
        if symplectic:
            raise ValueError("the closed formula only covers type-A paths")
        word = partial_operator_A(v.s, v.source, v.sink.start, rs)
    elif method == "search":
        word = search_operator(alg, v.s, top, d, lam)
    else:
        raise ValueError(f"unknown method {method!r}")
    x = alg.act_e_word(word, alg.f(top, d), lam)
    target = alg.f_monomial(v.as_dict())
    if not x or x.leading_monomial != target:
        got = alg.render_monomial(x.leading_monomial) if x else "0"
        raise StraighteningError(
            f"operator for s={_fmt_s(v.s)} (source {v.source}, sink {v.sink.label}) has leading monomial {got}"
        )
    prov = Provenance(
        "f",
        s=v.s,
        source=v.source,
        sink=v.sink,
        path=v.path.roots,
        top=top,
        power=d,
        word=word,
        method=method,
    )
    return x.monic(), prov


def build_groebner_basis(lam: DominantWeight, method: str = "auto") -> GroebnerBasis:
    rs = lam.system
    alg = enveloping_algebra(rs.type, rs.rank)
    good = good_ordering(rs.type, rs.rank)
    es = [Generator(alg.e(r), Provenance("e", root=r)) for r in good]
    hs_full = []
    for r in good:
        h = alg.element({alg.as_monomial({k: 1}): c for k, c in alg.lie.coroot_element(r).items()})
        hs_full.append(Generator((h - coroot_pairing(lam, r)).monic(), Provenance("h", root=r)))
    hs_simple = [
        Generator(alg.h(i) - lam.m[i - 1], Provenance("h", root=rs.simple(i))) for i in range(1, rs.rank + 1)
    ]
    fs = []
    for v in minimal_violators(lam):
        x, prov = straighten(v, lam, method=method, alg=alg)
        fs.append(Generator(x, prov))
    fs.sort(key=lambda g: alg.sort_key(g.leading_monomial), reverse=True)
    return GroebnerBasis(lam, alg, es + hs_simple + fs, es + hs_full + fs)


# -- reduction and verification ----------------------------------------------


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _as_elements(G) -> list[Element]:
    if isinstance(G, GroebnerBasis):
        return G.polynomials()
    return [g.element if isinstance(g, Generator) else g for g in G]


def left_reduce(f: Element, G, full: bool = False) -> Element:
    """Left normal form of ``f`` modulo ``G``.

    Top reduction by default; ``full=True`` also reduces the tail.
    """
    alg = f.alg
    gens = [(g.leading_term(), g) for g in _as_elements(G) if g]
    remainder: dict[Monomial, Fraction] = {}
    while f:
        m, c = f.leading_term()
        for (lm, lc), g in gens:
            if _divides(lm, m):
                u = tuple(x - y for x, y in zip(m, lm))
                f = f - alg.monomial(u, c / lc) * g
                break
        else:
            if not full:
                break
            remainder[m] = c
            f = f - alg.monomial(m, c)
    if full:
        return alg.element(remainder) + f
    return f


def standard_monomials(G, limit: int | None = None) -> frozenset[ExponentVector]:
    """f-exponent vectors of monomials divisible by no leading monomial of ``G``.

    Requires every h- and e-variable to be a leading monomial.  ``limit``
    defaults to ``2 * weyl_dim(lam)`` for a :class:`GroebnerBasis`.
    """
    elements = _as_elements(G)
    alg = elements[0].alg
    lie = alg.lie
    lms = [g.leading_monomial for g in elements]
    singles = {next(k for k, a in enumerate(m) if a) for m in lms if sum(m) == 1}
    missing = [lie.basis[k].name for k in range(lie.n_f, lie.dim) if k not in singles]
    if missing:
        raise EnumerationLimitError(f"standard monomials are infinite: {', '.join(missing)} not leading")
    if limit is None and isinstance(G, GroebnerBasis):
        limit = 2 * weyl_dim(G.lam)
    f_lms = [m for m in lms if alg.is_f_monomial(m)]
    start = alg.zero_monomial
    seen = {start}
    if any(_divides(m, start) for m in f_lms):
        return frozenset()
    stack = [start]
    while stack:
        cur = stack.pop()
        for k in range(lie.n_f):
            nxt = cur[:k] + (cur[k] + 1,) + cur[k + 1 :]
            if nxt in seen or any(_divides(m, nxt) for m in f_lms):
                continue
            seen.add(nxt)
            if limit is not None and len(seen) > limit:
                raise EnumerationLimitError(f"more than {limit} standard monomials")
            stack.append(nxt)
    return frozenset(frozenset(alg.f_exponents(m).items()) for m in seen)


@dataclass
class GroebnerReport:
    lam: DominantWeight
    standard_count: int
    weyl_dim: int
    matches_polytope: bool
    annihilates: bool | None  # None when the oracle was skipped
    polytope_independent: bool | None
    note: str = ""

    @property
    def passed(self) -> bool:
        return (
            self.standard_count == self.weyl_dim
            and self.matches_polytope
            and self.annihilates is not False
            and self.polytope_independent is not False
        )


def verify_groebner(lam: DominantWeight, G: GroebnerBasis | None = None, oracle: bool = True) -> GroebnerReport:
    """Standard monomials against the polytope and the Weyl dimension, and
    membership of every generator in the annihilator (explicit module)."""
    G = G or build_groebner_basis(lam)
    std = standard_monomials(G)
    dim = weyl_dim(lam)
    annihilates = independent = None
    note = ""
    if oracle:
        from .oracle import fflv_independent

        try:
            module = build_module(lam)
        except OracleBudgetError as exc:
            note = f"oracle skipped: {exc}"
        else:
            annihilates = all(not module.apply(g.element) for g in G.full)
            independent = fflv_independent(lam, module)
    else:
        note = "oracle skipped: disabled"
    return GroebnerReport(lam, len(std), dim, std == fflv_points(lam), annihilates, independent, note)


def verify_minimal(G) -> bool:
    lms = [g.leading_monomial for g in _as_elements(G)]
    for a, x in enumerate(lms):
        for b, y in enumerate(lms):
            if a != b and _divides(x, y):
                return False
    return True


def is_reduced(G) -> bool:
    elements = _as_elements(G)
    lms = [g.leading_monomial for g in elements]
    for g in elements:
        lm = g.leading_monomial
        for mono in g.terms:
            if mono != lm and any(_divides(x, mono) for x in lms):
                return False
    return True


@dataclass
class DegenerateReport:
    leading_unchanged: bool
    top_parts_agree: bool
    count: int

    @property
    def passed(self) -> bool:
        return self.leading_unchanged


def verify_degenerate(G: GroebnerBasis) -> DegenerateReport:
    """Recompute every f-type generator with the degenerate product (commuting f's)
    from the same operator word and compare leading monomials.

    Also checks that the degenerate element is the top-degree part of the
    original one.
    """
    alg = G.algebra
    deg = alg.degeneration
    same_lm = same_top = True
    for g in G.elements:
        p = g.provenance
        if p.kind != "f":
            continue
        y = deg.act_e_word(p.word, deg.f(p.top, p.power), G.lam)
        if not y:
            same_lm = same_top = False
            continue
        y = y.monic()
        same_lm &= y.leading_monomial == g.leading_monomial
        d = g.element.degree()
        top = {m: c for m, c in g.element.terms.items() if sum(m) == d}
        same_top &= top == y.terms
    return DegenerateReport(same_lm, same_top, len(G.f_type))


def violator_products(lam: DominantWeight, slack: int = 1) -> Iterable[ExponentVector]:
    """Exponent vectors on a single path exceeding its bound by 1..slack+1."""
    from .fflv import all_paths, exponents, path_bound

    seen = set()
    for p in all_paths(lam.system):
        b = path_bound(p, lam)
        for extra in range(1, slack + 2):
            for comp in product(range(b + extra + 1), repeat=len(p.roots)):
                if sum(comp) != b + extra:
                    continue
                s = exponents(zip(p.roots, comp))
                if s not in seen:
                    seen.add(s)
                    yield s
