import random
from fractions import Fraction
from itertools import product

import pytest

from pbw_groebner.fflv import fflv_points
from pbw_groebner.groebner import build_groebner_basis
from pbw_groebner.oracle import (
    ExplicitModule,
    OracleBudgetError,
    annihilates_hw,
    build_module,
    exact_rank,
    fflv_independent,
)
from pbw_groebner.roots import DominantWeight, weyl_dim


def lam(t, *m):
    return DominantWeight.of(t, len(m), m)


def test_exact_rank():
    assert exact_rank([{0: 1, 1: 2}, {0: 2, 1: 4}, {1: Fraction(1, 3)}]) == 2
    assert exact_rank([]) == 0
    assert exact_rank([{}]) == 0


@pytest.mark.parametrize(
    "w,ambient,dim",
    [(lam("A", 1, 0), 3, 3), (lam("A", 1, 1), 9, 8), (lam("A", 1, 1, 2), 384, 140), (lam("C", 1, 1), 24, 16)],
    ids=str,
)
def test_module_dimensions(w, ambient, dim):
    M = build_module(w)
    assert M.ambient_dim == ambient
    assert M.cyclic_span_dim() == dim == weyl_dim(w)


def test_budget_error():
    with pytest.raises(OracleBudgetError, match="ambient"):
        ExplicitModule(lam("C", 3, 3, 0), budget=100)


@pytest.mark.parametrize("w", [lam("A", 1, 1), lam("C", 1, 1), lam("C", 0, 1, 1)], ids=str)
def test_representation_property(w):
    M = build_module(w)
    lie = M.lie
    rng = random.Random(1)
    vecs = [M.hw]
    for _ in range(3):
        vecs.append(M.act(rng.randrange(lie.n_f), vecs[-1]) or M.hw)

    def add(*parts):
        out = {}
        for c, v in parts:
            for k, x in v.items():
                out[k] = out.get(k, 0) + c * x
        return {k: x for k, x in out.items() if x}

    for v in vecs:
        for a, b in product(range(lie.dim), repeat=2):
            lhs = add(*((c, M.act(k, v)) for k, c in lie.table[a][b]))
            rhs = add((1, M.act(a, M.act(b, v))), (-1, M.act(b, M.act(a, v))))
            assert lhs == rhs


@pytest.mark.parametrize("w", [lam("A", 2, 1), lam("C", 1, 2)], ids=str)
def test_highest_weight_vector(w):
    M = build_module(w)
    lie = M.lie
    for r in lie.root_system.roots:
        assert not M.act(lie.e(r), M.hw)
    for i in range(1, lie.root_system.rank + 1):
        m = w.m[i - 1]
        assert M.act(lie.h(i), M.hw) == {k: m * c for k, c in M.hw.items() if m}


def test_f_vectors_have_expected_weights():
    w = lam("C", 1, 1)
    M = build_module(w)
    lie = M.lie
    for s in fflv_points(w):
        v = M.f_word_vector(s)
        shift = [0, 0]
        for r, k in s:
            for i, c in enumerate(r.coefficients):
                shift[i] += k * c
        for i in (1, 2):
            hv = M.act(lie.h(i), v)
            # eigenvalue lambda(h_i) - <sum k alpha, alpha_i^vee>
            cart = lie.root_system.cartan_matrix[i - 1]
            ev = w.m[i - 1] - sum(shift[j] * cart[j] for j in range(2))
            assert hv == {k: ev * c for k, c in v.items() if ev}


def test_annihilation_examples():
    w = lam("A", 1, 0)
    G = build_groebner_basis(w)
    alg = G.algebra
    rs = alg.root_system
    assert annihilates_hw(alg.e(rs.root(1, 1)), w)
    assert not annihilates_hw(alg.f(rs.root(1, 1)), w)
    sl3 = lam("A", 1, 1)
    assert all(annihilates_hw(g.element, sl3) for g in build_groebner_basis(sl3).full)


def test_left_ideal_property():
    w = lam("A", 1, 1)
    G = build_groebner_basis(w)
    alg = G.algebra
    rng = random.Random(9)
    gens = [g.element for g in G]
    for _ in range(30):
        x, y = rng.sample(gens, 2)
        u = alg.monomial(tuple(rng.randint(0, 1) for _ in range(alg.nvars)))
        assert annihilates_hw(rng.randint(-3, 3) * x + u * y, w)


@pytest.mark.parametrize("w,rank", [(lam("A", 1, 1), 8), (lam("C", 0, 0), 1), (lam("C", 1, 1), 16)], ids=str)
def test_fflv_independent_examples(w, rank):
    assert weyl_dim(w) == rank
    assert fflv_independent(w)
