import pytest

from pfaflab.diagrams import OddSubsetError
from pfaflab.pfaffian import (GeneralMatrix, SkewArray, complementary_pfaffian, determinant,
                              min_partition, minor, monomial_pfaffian, pfaffian, skew_to_matrix)
from pfaflab.poly import Poly, a, x


def test_full_pfaffian_n2():
    A = SkewArray.symbolic(4)
    assert pfaffian(A).render() == "a[1,2]*a[3,4] - a[1,3]*a[2,4] + a[1,4]*a[2,3]"


def test_sub_pfaffians():
    A = SkewArray.symbolic(4)
    assert pfaffian(A, [1, 3]) == Poly.var(a(1, 3))
    assert pfaffian(A, []) == Poly.const(1)
    with pytest.raises(OddSubsetError):
        pfaffian(A, [1, 2, 3])


def test_complementary_pfaffian():
    A = SkewArray.symbolic(4)
    assert complementary_pfaffian(A, [1, 2]) == Poly.var(a(1, 2)) * Poly.var(a(3, 4))
    assert complementary_pfaffian(A, [1, 3]) == Poly.var(a(1, 3)) * Poly.var(a(2, 4))
    assert complementary_pfaffian(A, [1, 2, 3, 4]) == pfaffian(A)
    assert complementary_pfaffian(A, []) == pfaffian(A)


def test_determinant_and_minor():
    xx, yy, zz, tt = (Poly.var(x(i)) for i in (1, 2, 3, 4))
    B = GeneralMatrix([[xx, yy], [zz, tt]])
    assert determinant(B) == xx * tt - yy * zz
    assert minor(B, [1], [2]) == yy
    assert minor(B, [], []) == Poly.const(1)
    with pytest.raises(ValueError):
        minor(B, [1], [1, 2])


def test_pf_squared_is_det_n2():
    A = SkewArray.symbolic(4)
    assert pfaffian(A) ** 2 == determinant(skew_to_matrix(A))


def test_min_partition():
    assert min_partition([1, 2], 4) == frozenset({1, 2})
    assert min_partition([2, 3], 4) == frozenset({1, 3})
    assert min_partition([1, 2, 3, 4], 4) == frozenset({1, 2, 3, 4})
    with pytest.raises(ValueError):
        min_partition([2], 4)
    with pytest.raises(OddSubsetError):
        min_partition([1, 2, 3], 4)


def test_sub_pfaffian_relabeling_preserves_order():
    A = SkewArray.symbolic(6)
    # indices {2, 3, 5, 6} relabeled 1..4 order-preservingly
    got = pfaffian(A, [2, 3, 5, 6])
    av = lambda i, j: Poly.var(a(i, j))
    want = av(2, 3) * av(5, 6) - av(2, 5) * av(3, 6) + av(2, 6) * av(3, 5)
    assert got == want


def test_nonnegative_subpfaffian_example_matrix():
    # skew array with entries a12 = a23 = 1, everything else 0: every even
    # sub-pfaffian is nonnegative, yet no positive planar network produces it
    A = SkewArray(4, {(1, 2): Poly.const(1), (2, 3): Poly.const(1)})
    from pfaflab.pfaffinants import even_subsets
    for I in even_subsets(4):
        val = pfaffian(A, sorted(I))
        assert val.coeff(()) >= 0 and len(val.terms) <= 1


def test_monomial_pfaffian():
    A = SkewArray.symbolic(4)
    av = lambda i, j: Poly.var(a(i, j))
    assert monomial_pfaffian(A, frozenset({(1, 4), (2, 3)})) == av(1, 4) * av(2, 3)
