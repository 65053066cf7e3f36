from fractions import Fraction
from itertools import product

import pytest

from pbw_groebner.roots import (
    Comparison,
    DominantWeight,
    UnsupportedTypeError,
    coroot_pairing,
    good_ordering,
    positive_roots,
    root_leq,
    root_system,
    weyl_dim,
)


def labels(roots):
    return [r.label for r in roots]


def test_root_counts():
    assert labels(positive_roots("A", 2)) and len(positive_roots("A", 2)) == 3
    for n in range(1, 6):
        assert len(positive_roots("A", n)) == n * (n + 1) // 2
        assert len(positive_roots("C", n)) == n * n


def test_c2_roots():
    rs = root_system("C", 2)
    coeffs = sorted(r.coefficients for r in rs.roots)
    assert coeffs == [(0, 1), (1, 0), (1, 1), (2, 1)]
    assert rs.root(1, 3).coefficients == (2, 1)
    assert rs.root(1, 3).label == "a[1,-1]"


def _closure(rs):
    """Positive roots by reflecting simple roots with the Cartan matrix."""
    n = rs.rank
    cartan = rs.cartan_matrix
    found = {tuple(int(i == j) for j in range(n)) for i in range(n)}
    frontier = list(found)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                pairing = sum(r[j] * cartan[i][j] for j in range(n))
                s = list(r)
                s[i] -= pairing
                s = tuple(s)
                if all(x >= 0 for x in s) and any(s) and s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    return found


@pytest.mark.parametrize("t,n", [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("C", 1), ("C", 2), ("C", 3), ("C", 4)])
def test_roots_match_weyl_closure(t, n):
    rs = root_system(t, n)
    assert {r.coefficients for r in rs.roots} == _closure(rs)


@pytest.mark.parametrize("t", ["B", "D", "G", "E"])
def test_unsupported_type(t):
    with pytest.raises(UnsupportedTypeError, match="not in scope"):
        positive_roots(t, 2)


def test_root_leq_examples():
    rs = root_system("A", 3)
    a1, a12, a2, a13 = rs.root(1, 1), rs.root(1, 2), rs.root(2, 2), rs.root(1, 3)
    assert root_leq(a1, a12) is Comparison.LEQ
    assert root_leq(a12, a2) is Comparison.LEQ
    assert root_leq(a13, a2) is Comparison.INCOMPARABLE
    assert root_leq(a12, a1) is Comparison.GREATER


@pytest.mark.parametrize("t,n", [("A", 3), ("C", 3)])
def test_root_leq_is_partial_order(t, n):
    roots = positive_roots(t, n)
    le = lambda a, b: root_leq(a, b) is Comparison.LEQ  # noqa: E731
    for a in roots:
        assert le(a, a)
    for a, b in product(roots, repeat=2):
        if a != b and le(a, b):
            assert not le(b, a)
    for a, b, c in product(roots, repeat=3):
        if le(a, b) and le(b, c):
            assert le(a, c)


def test_good_ordering_examples():
    assert labels(good_ordering("A", 3)) == ["a[1,3]", "a[1,2]", "a[2,3]", "a[1,1]", "a[2,2]", "a[3,3]"]
    assert labels(good_ordering("A", 1)) == ["a[1,1]"]
    assert labels(good_ordering("A", 2)) == ["a[1,2]", "a[1,1]", "a[2,2]"]


def test_good_ordering_c_by_height():
    order = good_ordering("C", 3)
    assert len(set(order)) == 9
    heights = [r.height for r in order]
    assert heights == sorted(heights, reverse=True)
    assert order[0] == root_system("C", 3).highest_root


def test_dominant_weight():
    lam = DominantWeight.of("A", 3, (1, 1, 2))
    assert lam.partition == (4, 3, 2, 0)
    assert lam.interval_sum(1, 2) == 2
    with pytest.raises(ValueError):
        DominantWeight.of("A", 2, (1, -1))
    with pytest.raises(ValueError):
        DominantWeight.of("A", 2, (1,))


def test_coroot_pairing_examples():
    rs = root_system("A", 2)
    assert coroot_pairing(DominantWeight(rs, (1, 1)), rs.root(1, 2)) == 2
    assert coroot_pairing(DominantWeight(rs, (1, 0)), rs.root(2, 2)) == 0
    cs = root_system("C", 2)
    assert coroot_pairing(DominantWeight(cs, (1, 0)), cs.root(1, 3)) == 1


def test_weyl_dim_examples():
    assert weyl_dim(DominantWeight.of("A", 2, (1, 1))) == 8
    assert weyl_dim(DominantWeight.of("A", 3, (1, 1, 2))) == 140
    for t, n in [("A", 3), ("C", 3)]:
        assert weyl_dim(DominantWeight.of(t, n, (0,) * n)) == 1


def _hook_dim(partition, n):
    """Dimension of the GL_n irrep via the hook-content formula."""
    num = den = 1
    for i, row in enumerate(partition):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for k in range(i + 1, len(partition)) if partition[k] > j)
            num *= n + j - i
            den *= arm + leg + 1
    return Fraction(num, den)


@pytest.mark.parametrize("m", [(1, 0, 0), (0, 1, 0), (2, 1, 0), (1, 1, 2), (0, 3, 1)])
def test_weyl_dim_agrees_with_hook_content(m):
    lam = DominantWeight.of("A", 3, m)
    assert weyl_dim(lam) == _hook_dim([p for p in lam.partition if p], 4)


def test_weyl_dim_type_c_known_values():
    # sp_4: vector 4, 5-dim, adjoint 10, 16; sp_6 fundamentals 6, 14, 14
    assert [weyl_dim(DominantWeight.of("C", 2, m)) for m in [(1, 0), (0, 1), (2, 0), (1, 1)]] == [4, 5, 10, 16]
    assert [weyl_dim(DominantWeight.of("C", 3, m)) for m in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]] == [6, 14, 14]
