import itertools
from fractions import Fraction

import pytest

from pbw_groebner.fflv import exponents, in_polytope
from pbw_groebner.roots import DominantWeight


def weights(rank, total):
    for m in itertools.product(range(total + 1), repeat=rank):
        if sum(m) <= total:
            yield m


def sweep_instances():
    """All (type, rank, m) of the desk-scale dimension sweep."""
    out = []
    for t, n, cap in [("A", 1, 3), ("A", 2, 3), ("A", 3, 3), ("C", 1, 3), ("C", 2, 3), ("C", 3, 2)]:
        out.extend(DominantWeight.of(t, n, m) for m in weights(n, cap))
    return out


def brute_force_points(lam, cap=None):
    """Box enumeration of polytope points; tiny instances only."""
    roots = lam.system.roots
    cap = sum(lam.m) if cap is None else cap
    out = set()
    for vals in itertools.product(range(cap + 1), repeat=len(roots)):
        s = exponents(zip(roots, vals))
        if in_polytope(s, lam):
            out.add(s)
    return out


def word_normal_form(alg, word, coeff=1):
    """Normal form of a word of variable indices by leftmost-first rewriting.

    Independent of the kernel: fixes the first adjacent inversion found
    scanning from the left, using only the bracket table.
    """
    out = {}
    stack = [(tuple(word), Fraction(coeff))]
    table = alg.lie.table
    while stack:
        w, c = stack.pop()
        for p in range(len(w) - 1):
            if w[p] > w[p + 1]:
                a, b = w[p], w[p + 1]
                stack.append((w[:p] + (b, a) + w[p + 2 :], c))
                for k, v in table[a][b]:
                    stack.append((w[:p] + (k,) + w[p + 2 :], c * v))
                break
        else:
            mono = [0] * alg.nvars
            for k in w:
                mono[k] += 1
            mono = tuple(mono)
            out[mono] = out.get(mono, 0) + c
    return alg.element(out)


@pytest.fixture(scope="session")
def sweep():
    return sweep_instances()
