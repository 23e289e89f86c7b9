import random
from collections import Counter

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from radsplit.errors import DivisionByZeroPoly, ModulusMismatch
from radsplit.fppoly import (FpPoly, degree_distribution, distinct_degree, equal_degree,
                             factor_degrees, factor_fp, gcd, irred_count, is_irreducible,
                             mobius, squarefree_decomposition)

X = sympy.Symbol("x")
primes = st.sampled_from([2, 3, 5, 7, 13, 101])


@st.composite
def polys(draw, max_deg=30):
    p = draw(primes)
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=max_deg + 1))
    return FpPoly(p, coeffs)


def P(p, *coeffs):
    return FpPoly(p, coeffs)


def sympy_factors(f: FpPoly):
    expr = sum(c * X**i for i, c in enumerate(f.coeffs))
    _, fl = sympy.Poly(expr, X, modulus=f.p).factor_list()
    out = []
    for g, e in fl:
        co = [int(c) % f.p for c in reversed(g.all_coeffs())]
        out.append((FpPoly(f.p, co).monic(), e))
    return sorted(out, key=lambda t: (t[0], t[1]))


def test_normalization():
    f = FpPoly(3, [4, -1, 3, 0])
    assert f.coeffs == (1, 2)
    assert FpPoly(5, [0, 0]).is_zero()
    assert FpPoly(5).degree == -1


def test_arithmetic_examples():
    assert gcd(P(3, -1, 0, 1), P(3, 0, 1, 1)) == P(3, 1, 1)
    assert FpPoly.binomial(27, -80, 3).derivative().is_zero()
    assert P(3, 1, 1) * P(3, 1, 2, 1, 2, 1) == FpPoly.binomial(5, -80, 3)
    q, r = divmod(P(5, 1, 0, 0, 1), P(5, 1, 1))
    assert q * P(5, 1, 1) + r == P(5, 1, 0, 0, 1)
    assert P(7, 1, 1) ** 7 == P(7, 1, 0, 0, 0, 0, 0, 0, 1)
    assert P(7, 3, 0, 1)(2) == 0
    assert str(P(3, 2, 0, 1)) == "x^2 + 2"


def test_errors():
    with pytest.raises(ModulusMismatch):
        P(3, 1, 1) + P(5, 1, 1)
    with pytest.raises(DivisionByZeroPoly):
        divmod(P(3, 1, 1), FpPoly(3))
    with pytest.raises(ValueError):
        factor_fp(FpPoly(3))


@given(polys(), polys())
def test_ring_laws(f, g):
    g = FpPoly(f.p, g.coeffs)
    assert f * g == g * f
    assert (f + g) - g == f
    if not g.is_zero():
        q, r = divmod(f, g)
        assert q * g + r == f and r.degree < g.degree


@given(polys(max_deg=200), polys(max_deg=200))
def test_large_products_match_schoolbook(f, g):
    g = FpPoly(f.p, g.coeffs)
    expect = [0] * max(0, len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            expect[i + j] += a * b
    assert f * g == FpPoly(f.p, expect)


@given(polys(max_deg=200), polys(max_deg=120))
def test_large_division(f, g):
    g = FpPoly(f.p, g.coeffs)
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f and r.degree < g.degree


@given(polys(max_deg=150), polys(max_deg=150), st.integers(0, 10**6))
def test_powmod_matches_pow(f, m, e):
    m = FpPoly(f.p, m.coeffs)
    if m.degree < 1:
        return
    e %= 40
    assert f.powmod(e, m) == (f**e) % m


def test_known_factorizations():
    assert [g for g, _ in factor_fp(FpPoly.binomial(5, -80, 3))] == [P(3, 1, 1), P(3, 1, 2, 1, 2, 1)]
    assert [g for g, _ in factor_fp(P(3, 1, 0, 0, 0, 1))] == [P(3, 2, 1, 1), P(3, 2, 2, 1)]
    assert [g for g, _ in factor_fp(FpPoly.binomial(5, -1, 3))] == [P(3, 2, 1), P(3, 1, 1, 1, 1, 1)]
    fm = factor_fp(P(3, 1, 0, 1))
    assert len(fm) == 1 and fm.factors[0][0] == P(3, 1, 0, 1)


def test_degree_distribution_examples():
    assert degree_distribution(factor_fp(FpPoly.binomial(5, -80, 3))) == {1: 1, 4: 1}
    assert degree_distribution(factor_fp(FpPoly.binomial(10, -1, 3))) == {1: 2, 4: 2}
    fm = factor_fp(P(3, 0, 0, 1))
    assert degree_distribution(fm) == {1: 1} and fm.factors[0][1] == 2


@given(polys(max_deg=40))
def test_factor_fp_against_sympy(f):
    if f.degree < 1:
        return
    fm = factor_fp(f)
    assert list(fm.factors) == sympy_factors(f)
    assert fm.product() == f
    assert factor_degrees(f) == degree_distribution(fm)


def test_refactor_many_random():
    rng = random.Random(11)
    for _ in range(10**4):
        p = rng.choice([3, 5, 7, 13])
        f = FpPoly(p, [rng.randrange(p) for _ in range(rng.randrange(2, 14))])
        if f.degree < 1:
            continue
        fm = factor_fp(f, rng)
        assert fm.product() == f
        assert sum(g.degree * e for g, e in fm) == f.degree
        assert len({g for g, _ in fm}) == len(fm)


def test_factors_irreducible_and_sorted():
    rng = random.Random(3)
    for _ in range(100):
        p = rng.choice([2, 3, 5, 7])
        f = FpPoly(p, [rng.randrange(p) for _ in range(rng.randrange(3, 40))] + [1])
        fm = factor_fp(f, rng)
        assert all(is_irreducible(g) and g.is_monic() for g, _ in fm)
        keys = [(g, e) for g, e in fm]
        assert keys == sorted(keys, key=lambda t: (t[0], t[1]))


def test_factor_fp_deterministic_default_seed():
    f = FpPoly.binomial(120, -2, 7)
    assert factor_fp(f) == factor_fp(f)


def test_squarefree_and_distinct_degree_pieces():
    f = P(3, 1, 1) ** 3 * P(3, 1, 0, 1) ** 2 * P(3, 0, 1)
    parts = squarefree_decomposition(f)
    acc = FpPoly(3, [1])
    for g, j in parts:
        acc = acc * g**j
    assert acc == f.monic()
    blocks = distinct_degree(FpPoly.binomial(10, -1, 3))
    assert [(b.degree, d) for b, d in blocks] == [(2, 1), (8, 4)]
    four = dict((d, b) for b, d in blocks)[4]
    assert all(g.degree == 4 for g in equal_degree(four, 4, random.Random(1)))


def test_large_binomials_against_sympy():
    rng = random.Random(5)
    for _ in range(6):
        n = rng.randrange(50, 160)
        p = rng.choice([2, 3, 5, 7, 11])
        a = rng.randrange(1, p)
        f = FpPoly.binomial(n, -a, p)
        _, fl = sympy.Poly(X**n - a, X, modulus=p).factor_list()
        expect = dict(sorted(Counter(g.degree() for g, _ in fl).items()))
        assert factor_degrees(f) == expect


def test_irred_count_values():
    assert irred_count(1, 3) == 3
    assert irred_count(2, 3) == 3
    assert irred_count(4, 3) == 18
    quadratics = [FpPoly(3, (c0, c1, 1)) for c0 in range(3) for c1 in range(3)]
    rootless = [q for q in quadratics if all(q(r) for r in range(3))]
    assert len(rootless) == 3
    with pytest.raises(ValueError):
        irred_count(0, 3)


@given(st.integers(1, 12), st.sampled_from([2, 3, 5, 7]))
def test_gauss_identity(f, p):
    # p^f = sum over d | f of d * Irred(d, p)
    assert sum(d * irred_count(d, p) for d in range(1, f + 1) if f % d == 0) == p**f


def test_mobius():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
