"""Exact arithmetic in U(g) over the PBW basis.

Elements are finite maps from normal-ordered monomials (exponent tuples) to
nonzero ``Fraction`` coefficients.  Monomials are compared by a block order:
the f-block by graded reverse lexicographic order over the good ordering,
then the h-block, then the e-block, each graded revlex.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .chevalley import LieAlgebra, build_lie_algebra
from .roots import DominantWeight, PositiveRoot, good_ordering

if os.environ.get("PBW_GROEBNER_PURE"):
    from ._pbw import PBWKernel
    KERNEL = "python"
else:
    try:
        from ._cpbw import PBWKernel
        KERNEL = "cython"
    except ImportError:  # extension not built
        from ._pbw import PBWKernel
        KERNEL = "python"

__all__ = ["UEA", "Element", "enveloping_algebra", "compare_monomials", "KERNEL"]

Monomial = tuple


class UEA:
    """The enveloping algebra of a :class:`LieAlgebra` in its PBW basis."""

    def __init__(self, lie: LieAlgebra, kernel_cls=None):
        self.lie = lie
        self.nvars = lie.dim
        self.kernel = (kernel_cls or PBWKernel)(lie.dim, lie.table)
        rs = lie.root_system
        good = good_ordering(rs.type, rs.rank)
        # comparison positions, most significant variable first
        self._f_cmp = tuple(lie.f(r) for r in good)
        self._h_cmp = tuple(lie.h(i) for i in range(1, rs.rank + 1))
        self._e_cmp = tuple(lie.e(r) for r in good)
        self.zero_monomial: Monomial = (0,) * self.nvars
        self._keys: dict[Monomial, tuple] = {}

    def __repr__(self) -> str:
        return f"UEA({self.lie!r})"

    @property
    def root_system(self):
        return self.lie.root_system

    @cached_property
    def degeneration(self) -> "UEA":
        return enveloping_algebra(self.root_system.type, self.root_system.rank, degenerate=True)

    # -- monomial order --------------------------------------------------
    def sort_key(self, mono: Monomial) -> tuple:
        """Key whose natural order is the monomial order."""
        key = self._keys.get(mono)
        if key is None:
            parts = []
            for block in (self._f_cmp, self._h_cmp, self._e_cmp):
                parts.append(sum(mono[i] for i in block))
                parts.extend(-mono[i] for i in reversed(block))
            key = self._keys[mono] = tuple(parts)
        return key

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.sort_key(a), self.sort_key(b)
        return (ka > kb) - (ka < kb)

    # -- constructors -----------------------------------------------------
    def element(self, terms: Mapping[Monomial, object] | Iterable = ()) -> "Element":
        return Element(self, terms)

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {self.zero_monomial: 1})

    def scalar(self, c) -> "Element":
        return Element(self, {self.zero_monomial: c})

    def monomial(self, exps: Mapping[int, int] | Monomial, coeff=1) -> "Element":
        return Element(self, {self.as_monomial(exps): coeff})

    def as_monomial(self, exps) -> Monomial:
        if isinstance(exps, Mapping):
            m = [0] * self.nvars
            for k, v in exps.items():
                m[k] += v
            return tuple(m)
        return tuple(exps)

    def var(self, k: int) -> "Element":
        return self.monomial({k: 1})

    def f(self, root: PositiveRoot, power: int = 1) -> "Element":
        return self.monomial({self.lie.f(root): power})

    def e(self, root: PositiveRoot, power: int = 1) -> "Element":
        return self.monomial({self.lie.e(root): power})

    def h(self, i: int, power: int = 1) -> "Element":
        return self.monomial({self.lie.h(i): power})

    def f_monomial(self, s: Mapping[PositiveRoot, int]) -> Monomial:
        return self.as_monomial({self.lie.f(r): k for r, k in s.items() if k})

    def f_exponents(self, mono: Monomial) -> dict[PositiveRoot, int]:
        return {r: mono[self.lie.f(r)] for r in self.lie.f_roots if mono[self.lie.f(r)]}

    def is_f_monomial(self, mono: Monomial) -> bool:
        return not any(mono[self.lie.n_f :])

    # -- arithmetic -------------------------------------------------------
    def mul_monomials(self, a: Monomial, b: Monomial) -> dict[Monomial, int]:
        return self.kernel.mono_mono(a, b)

    def multiply(self, x: "Element", y: "Element") -> "Element":
        return Element._raw(self, self.kernel.product(x.terms, y.terms))

    def commutator_power(self, k_var: int, power: int, y: "Element") -> "Element":
        """``x^power * y - y * x^power`` for the basis variable ``k_var``."""
        if power == 0:
            return self.zero()
        xp = self.monomial({k_var: power})
        return xp * y - y * xp

    def reduce_modulo_linear(self, x: "Element", lam: DominantWeight) -> "Element":
        """Project onto U(n^-) along the left ideal of ``e_a`` and ``h_a - lambda(h_a)``."""
        lie = self.lie
        hs = range(lie.h_offset, lie.e_offset)
        out: dict[Monomial, Fraction] = {}
        for mono, c in x.terms.items():
            if any(mono[lie.e_offset :]):
                continue
            for k in hs:
                if mono[k]:
                    c = c * lam.m[k - lie.h_offset] ** mono[k]
            if not c:
                continue
            fm = mono[: lie.n_f] + (0,) * (self.nvars - lie.n_f)
            out[fm] = out.get(fm, 0) + c
        return Element(self, out)

    def act_e_word(self, word, x: "Element", lam: DominantWeight) -> "Element":
        """``reduce(e_{g_1}^{a_1} ... e_{g_r}^{a_r} x)`` applied innermost first.

        ``word`` lists ``(root, power)`` in application order.  Equal to the
        reduced nested commutator because ``y e^a`` lies in the linear ideal.
        """
        cur = self.reduce_modulo_linear(x, lam)
        for root, power in word:
            if power == 0:
                continue
            cur = self.reduce_modulo_linear(self.e(root, power) * cur, lam)
            if not cur:
                break
        return cur

    # -- rendering --------------------------------------------------------
    def render_monomial(self, mono: Monomial) -> str:
        parts = []
        for k, a in enumerate(mono):
            if a:
                name = self.lie.basis[k].name
                parts.append(name if a == 1 else f"{name}^{a}")
        return "*".join(parts) if parts else "1"

    def parse_monomial(self, text: str) -> Monomial:
        text = text.strip()
        if text == "1":
            return self.zero_monomial
        names = {b.name: k for k, b in enumerate(self.lie.basis)}
        exps: dict[int, int] = {}
        for factor in text.split("*"):
            name, _, power = factor.partition("^")
            k = names[name.strip()]
            exps[k] = exps.get(k, 0) + (int(power) if power else 1)
        return self.as_monomial(exps)


_UEAS: dict[tuple[str, int, bool], UEA] = {}


def enveloping_algebra(cartan_type: str, rank: int, degenerate: bool = False) -> UEA:
    lie = build_lie_algebra(cartan_type, rank, degenerate)
    key = (lie.root_system.type, lie.root_system.rank, degenerate)
    if key not in _UEAS:
        _UEAS[key] = UEA(lie)
    return _UEAS[key]


def compare_monomials(alg: UEA, a: Monomial, b: Monomial) -> int:
    """``1`` if ``a > b``, ``-1`` if ``a < b``, ``0`` if equal."""
    return alg.compare(a, b)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Element:
    """Immutable element of U(g); the empty map is zero."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: UEA, terms=()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for m, c in items:
            c = Fraction(c)
            if c:
                clean[tuple(m)] = clean.get(tuple(m), 0) + c
        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "terms", {m: c for m, c in clean.items() if c})

    @classmethod
    def _raw(cls, alg: UEA, terms: dict) -> "Element":
        # terms already hold nonzero Fractions
        x = object.__new__(cls)
        object.__setattr__(x, "alg", alg)
        object.__setattr__(x, "terms", terms)
        return x

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.alg is other.alg and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.alg.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            return other
        return self.alg.scalar(other)

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                del out[m]
        return Element._raw(self.alg, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element._raw(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Element":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Element":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            return self.alg.multiply(self, other)
        if not other:
            return self.alg.zero()
        other = Fraction(other)
        return Element._raw(self.alg, {m: c * other for m, c in self.terms.items()})

    def __rmul__(self, other) -> "Element":
        return self * other

    def __pow__(self, k: int) -> "Element":
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        key = self.alg.sort_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("the zero element has no leading term")
        m = max(self.terms, key=self.alg.sort_key)
        return m, self.terms[m]

    @property
    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    @property
    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def monic(self) -> "Element":
        return self * (1 / self.leading_coefficient)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def weight(self, mono: Monomial) -> tuple[int, ...]:
        lie = self.alg.lie
        w = [0] * lie.root_system.rank
        for k, a in enumerate(mono):
            if a:
                for i, x in enumerate(lie.weight(k)):
                    w[i] += a * x
        return tuple(w)

    def weights(self) -> set[tuple[int, ...]]:
        return {self.weight(m) for m in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (mono, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            body = self.alg.render_monomial(mono)
            if body == "1":
                text = _fmt_coeff(a)
            elif a == 1:
                text = body
            else:
                text = f"{_fmt_coeff(a)}*{body}"
            if k == 0:
                out.append(f"-{text}" if neg else text)
            else:
                out.append(f"- {text}" if neg else f"+ {text}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"<{self}>"
