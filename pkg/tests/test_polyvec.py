from collections import Counter

import pytest
from hypothesis import given, strategies as st

from toricg import polyvec, words
from toricg.errors import PreconditionError, StructuralError
from toricg.polyvec import IntPoly

from helpers import naive_peaks_in_prefix, nonneg_paths_to_height


def test_intpoly_basics():
    p = IntPoly([1, 2, 3, 0, 0])
    assert p.coeffs == (1, 2, 3)
    assert p.degree == 2
    assert IntPoly().is_zero()
    assert (p * IntPoly([0, 1])).coeffs == (0, 1, 2, 3)
    assert (p - p).is_zero()
    assert p(10) == 321
    assert IntPoly([1, 1]) ** 2 == IntPoly([1, 2, 1])
    assert p.derivative() == IntPoly([2, 6])
    assert IntPoly.from_text("1,37,10").to_text() == "1,37,10"
    assert str(IntPoly([1, 0, 2])) == "1 + 2*x^2"


def test_f_to_h_examples():
    assert polyvec.f_to_h((4, 4, 1)) == (1, 2, 1)
    assert polyvec.f_to_h((4, 6, 4, 1)) == (1, 1, 1, 1)
    assert polyvec.h_to_f((1, 2, 1)) == (4, 4, 1)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8))
def test_f_h_round_trip(v):
    v = tuple(v)
    assert polyvec.h_to_f(polyvec.f_to_h(v)) == v
    assert polyvec.f_to_h(polyvec.h_to_f(v)) == v


def test_h_to_gamma_examples():
    assert polyvec.h_to_gamma((1, 1)) == (1,)
    assert polyvec.h_to_gamma((1, 4, 1)) == (1, 2)
    assert polyvec.h_to_gamma((1, 11, 11, 1)) == (1, 8)
    with pytest.raises(StructuralError):
        polyvec.h_to_gamma((1, 2, 3))


@given(st.integers(1, 8), st.data())
def test_gamma_h_round_trip(n, data):
    gamma = tuple(
        data.draw(st.integers(-20, 20)) for _ in range(n // 2 + 1)
    )
    h = polyvec.gamma_to_h(gamma, n)
    assert polyvec.is_palindromic(h)
    assert polyvec.h_to_gamma(h) == gamma


def test_cnix_examples():
    assert polyvec.cnix(5, 0) == IntPoly([1])
    assert polyvec.cnix(4, 2) == IntPoly([0, 1, 1])
    assert polyvec.cnix(2, 1) == IntPoly([0, 1])
    with pytest.raises(PreconditionError):
        polyvec.cnix(3, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_cnix_peak_oracle(n):
    """x^k coefficient of cnix(n, i) counts the nonnegative n-step paths to
    height n - 2i with k peaks (raw-product oracle)."""
    for i in range(n // 2 + 1):
        hist = Counter(
            naive_peaks_in_prefix(w, len(w))
            for w in nonneg_paths_to_height(n, n - 2 * i)
        )
        poly = polyvec.cnix(n, i)
        for k in range(max([poly.degree] + list(hist)) + 1):
            assert hist.get(k, 0) == poly.coeff(k)
        assert sum(hist.values()) == words.catalan_triangle(n, i)


def test_g_contrib_examples():
    assert polyvec.g_contrib(2, 1) == IntPoly([0, 1])
    assert polyvec.g_contrib(4, 0) == IntPoly([1, 11, 2])
    assert polyvec.g_contrib(4, 1) == IntPoly([0, 4, 1])
    assert polyvec.g_contrib(4, 2) == IntPoly([0, 1, 1])
    assert polyvec.g_contrib(3, 5).is_zero()
    assert polyvec.g_contrib(5, 5) == IntPoly([1])


@pytest.mark.parametrize("n", range(10))
def test_g_contrib_peak_prefix_oracle(n):
    """x^k coefficient of g_contrib(n, j) counts Dyck words of semilength
    n - j with k peaks lying inside the first n letters."""
    for j in range(n // 2 + 1):
        hist = Counter(
            naive_peaks_in_prefix(w, n) for w in words.enumerate_words(n - j, "dyck")
        )
        poly = polyvec.g_contrib(n, j)
        for k in range(max([poly.degree] + list(hist)) + 1):
            assert hist.get(k, 0) == poly.coeff(k)


def test_toric_g_from_gamma_table_rows():
    assert polyvec.toric_g_from_gamma(4, [1, 6, 2]) == IntPoly([1, 37, 10])
    assert polyvec.toric_g_from_gamma(4, [1, 12, 6]) == IntPoly([1, 65, 20])
    assert polyvec.toric_g_from_gamma(4, [1, 22, 16]) == IntPoly([1, 115, 40])
    # zero padding is accepted, junk beyond n//2 is not
    assert polyvec.toric_g_from_gamma(4, [1, 6, 2, 0, 0]) == IntPoly([1, 37, 10])
    with pytest.raises(PreconditionError):
        polyvec.toric_g_from_gamma(4, [1, 6, 2, 7])


def test_toric_g_from_h_examples():
    assert polyvec.toric_g_from_h(2, (1, 1, 1)) == IntPoly([1])
    assert polyvec.toric_g_from_h(2, (1, 4, 1)) == IntPoly([1, 3])
    assert polyvec.toric_g_from_h(4, (1, 26, 66, 26, 1)) == IntPoly([1, 115, 40])
    with pytest.raises(StructuralError):
        polyvec.toric_g_from_h(2, (1, 2, 3))
    with pytest.raises(PreconditionError):
        polyvec.toric_g_from_h(3, (1, 1))


@pytest.mark.parametrize("family", ["cube", "associahedron", "cyclohedron", "permutahedron"])
@pytest.mark.parametrize("n", range(1, 9))
def test_route_agreement(family, n):
    gamma = polyvec.gamma_family(family, n)
    h = polyvec.gamma_to_h(gamma, n)
    assert polyvec.toric_g_from_h(n, h) == polyvec.toric_g_from_gamma(n, gamma)


@pytest.mark.parametrize("family", ["cube", "associahedron", "cyclohedron", "permutahedron"])
@pytest.mark.parametrize("n", range(1, 9))
def test_h_backward_difference(family, n):
    gamma = polyvec.gamma_family(family, n)
    h = polyvec.gamma_to_h(gamma, n)
    for i in range(1, n // 2 + 1):
        expected = sum(
            words.catalan_triangle(n - 2 * j, i - j) * gamma[j]
            for j in range(min(i, len(gamma) - 1) + 1)
        )
        assert h[i] - h[i - 1] == expected


def test_gamma_family_examples():
    assert polyvec.gamma_family("associahedron", 4) == (1, 6, 2)
    assert polyvec.gamma_family("cyclohedron", 4) == (1, 12, 6)
    assert polyvec.gamma_family("permutahedron", 4) == (1, 22, 16)
    assert polyvec.gamma_family("cube", 5) == (1, 0, 0)
    with pytest.raises(PreconditionError):
        polyvec.gamma_family("dodecahedron", 3)


def test_cube_toric_g_is_g_contrib():
    for n in range(1, 9):
        gamma = polyvec.gamma_family("cube", n)
        assert polyvec.toric_g_from_gamma(n, gamma) == polyvec.g_contrib(n, 0)


def test_fhg_bundle():
    cube = polyvec.FHGVectors.from_f((4, 4, 1))
    assert cube.n == 2 and cube.hvec == (1, 2, 1) and cube.gamma == (1, 0)
    again = polyvec.FHGVectors.from_gamma((1, 2), 2)
    assert again.hvec == (1, 4, 1) and again.fvec == (6, 6, 1)
    assert polyvec.FHGVectors.from_h((1, 4, 1)) == again


def test_narayana():
    assert polyvec.narayana(0) == IntPoly([0, 1])
    assert polyvec.narayana(2) == IntPoly([0, 1, 1])
    for k in range(1, 11):
        assert polyvec.narayana(k)(1) == words.catalan(k)


def test_peak_poly_examples():
    for n in range(7):
        assert polyvec.peak_poly(n, 0) == IntPoly([words.catalan(n)])
    assert polyvec.peak_poly(1, 2) == IntPoly([0, 1])
    with pytest.raises(PreconditionError):
        polyvec.peak_poly(2, 5)


@pytest.mark.parametrize("n", range(7))
def test_peak_poly_oracle(n):
    for m in range(2 * n + 1):
        hist = Counter(
            naive_peaks_in_prefix(w, m) for w in words.enumerate_words(n, "dyck")
        )
        got = polyvec.peak_poly(n, m)
        for k in range(max([got.degree] + list(hist)) + 1):
            assert hist.get(k, 0) == got.coeff(k)


@pytest.mark.parametrize("n", range(11))
def test_peak_poly_gives_g_contrib(n):
    for j in range(n // 2 + 1):
        assert polyvec.peak_poly(n - j, n) == polyvec.g_contrib(n, j)


def test_g_contrib_normalization():
    for n in range(13):
        g0 = polyvec.g_contrib(n, 0)
        assert g0(1) == words.catalan(n)
        assert g0(0) == 1


def test_sturm_examples():
    assert polyvec.sturm_real_rooted(IntPoly([0, 4, 1]))
    assert not polyvec.sturm_real_rooted(IntPoly([1, 1, 1]))
    assert polyvec.sturm_real_rooted(IntPoly([1, 37, 10]))
    assert polyvec.sturm_real_rooted(IntPoly([5]))
    assert polyvec.sturm_real_rooted(IntPoly([-3, 1]))
    # repeated roots: (x-1)^2 (x+2) is real-rooted, (x^2+1)(x-1)^2 is not
    assert polyvec.sturm_real_rooted(IntPoly([1, -1]) ** 2 * IntPoly([2, 1]))
    assert not polyvec.sturm_real_rooted(IntPoly([1, 0, 1]) * IntPoly([1, -1]) ** 2)
    with pytest.raises(PreconditionError):
        polyvec.sturm_real_rooted(IntPoly())


def test_sturm_on_g_contrib():
    for n in range(1, 13):
        for j in range(n // 2 + 1):
            assert polyvec.sturm_real_rooted(polyvec.g_contrib(n, j))


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_sturm_matches_factored_products(roots):
    # polynomials built as products of linear factors are real-rooted
    poly = IntPoly([1])
    for r in roots:
        poly = poly * IntPoly([-r, 1])
    assert polyvec.sturm_real_rooted(poly)


def test_kruskal_katona():
    assert polyvec.kruskal_katona_ok([1, 0])
    assert polyvec.kruskal_katona_ok([1, 37, 10])
    assert not polyvec.kruskal_katona_ok([1, 2, 5])
    assert polyvec.kruskal_katona_ok([1, 4, 6, 4, 1])
    assert not polyvec.kruskal_katona_ok([1, 3, 4])
    with pytest.raises(PreconditionError):
        polyvec.kruskal_katona_ok([2, 1])


def test_kk_pseudopower():
    assert polyvec.kk_pseudopower(37, 1) == 666
    assert polyvec.kk_pseudopower(2, 1) == 1
    assert polyvec.kk_pseudopower(0, 3) == 0
    # m = binom(5,2) + binom(3,1): bound binom(5,3) + binom(3,2)
    assert polyvec.kk_pseudopower(13, 2) == 13
