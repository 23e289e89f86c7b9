import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from radsplit.arith import (digit_sum, euler_phi_pk, iroot, is_prime, prime_factors,
                            qth_root, split_valuation, valuation, vp, vp_binom,
                            vp_comb, wieferich)
from radsplit.errors import (DivisibleBase, RangeError, WieferichOverflow,
                             ZeroValuation)

small_primes = st.sampled_from([2, 3, 5, 7, 11, 13])


def naive_vp(x, p):
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


@pytest.mark.parametrize("x,p,e", [(135, 3, 3), (80, 3, 0), (81250, 5, 5), (-16, 2, 4),
                                   (3**200 * 7, 3, 200)])
def test_vp_values(x, p, e):
    assert vp(x, p) == e


def test_vp_zero():
    with pytest.raises(ZeroValuation):
        vp(0, 3)
    assert valuation(0, 3) == math.inf
    assert valuation(12, 2) == 2


@given(st.integers(min_value=1, max_value=10**30), small_primes)
def test_vp_matches_repeated_division(x, p):
    e = vp(x, p)
    assert e == naive_vp(x, p)
    assert x % p**e == 0 and x % p ** (e + 1) != 0


@pytest.mark.parametrize("m,b,p,v", [(3, 9, 3, 1), (3, 27, 3, 0), (3, 1, 3, 3), (4, 6, 2, 3),
                                     (3, 0, 3, 0)])
def test_vp_binom_values(m, b, p, v):
    assert vp_binom(m, b, p) == v


def test_vp_binom_range():
    with pytest.raises(RangeError):
        vp_binom(2, 10, 3)
    with pytest.raises(RangeError):
        vp_binom(2, -1, 3)


@given(st.integers(0, 60), st.integers(0, 60), small_primes)
def test_vp_comb_against_math_comb(n, k, p):
    if k > n:
        with pytest.raises(RangeError):
            vp_comb(n, k, p)
    else:
        assert vp_comb(n, k, p) == naive_vp(math.comb(n, k), p)


def test_digit_sum():
    assert digit_sum(80, 3) == 8  # 80 = 2222_3
    assert digit_sum(0, 5) == 0


@pytest.mark.parametrize("a,p,w", [(80, 3, 4), (2186, 3, 7), (26, 5, 2), (26, 3, 3), (10, 3, 2)])
def test_wieferich_values(a, p, w):
    assert wieferich(a, p).w == w


@given(st.integers(2, 10**6), st.sampled_from([3, 5, 7, 11]))
def test_wieferich_schedule_independent(a, p):
    if a % p == 0:
        return
    assert wieferich(a, p).w == wieferich(a, p, schedule="step").w


def test_wieferich_exponent_p_suffices():
    for a in (80, -80, 2186, 10, 26):
        for m in (1, 2, 3):
            assert vp(a ** (3**m) - a, 3) == wieferich(a, 3).w


def test_wieferich_errors():
    with pytest.raises(DivisibleBase):
        wieferich(9, 3)
    with pytest.raises(WieferichOverflow):
        wieferich(1, 3, cap=64)
    with pytest.raises(ValueError):
        wieferich(2, 3, schedule="triple")


def test_wieferich_depth_recorded():
    r = wieferich(2186, 3)
    assert r.depth >= r.w


@pytest.mark.parametrize("v,p,h,k", [(54, 3, 2, 3), (135, 3, 5, 3), (7, 5, 7, 0)])
def test_split_valuation_values(v, p, h, k):
    s = split_valuation(v, p)
    assert (s.h, s.k) == (h, k)


def test_split_valuation_round_trip():
    rng = random.Random(7)
    for _ in range(10**4):
        v = rng.randrange(1, 10**6)
        p = rng.choice([2, 3, 5, 7, 11, 13])
        s = split_valuation(v, p)
        assert s.h * p**s.k == v and math.gcd(s.h, p) == 1
    with pytest.raises(RangeError):
        split_valuation(0, 3)


@pytest.mark.parametrize("p,j,val", [(3, 5, 162), (3, 6, 486), (5, 0, 1), (2, 1, 1)])
def test_euler_phi_pk(p, j, val):
    assert euler_phi_pk(p, j) == val


@pytest.mark.parametrize("a,q,root", [(-27, 3, -3), (80, 2, None), (729, 3, 9), (-4, 2, None),
                                      (2**300, 5, 2**60), (2**300 + 1, 5, None), (0, 3, 0)])
def test_qth_root(a, q, root):
    assert qth_root(a, q) == root


@given(st.integers(0, 10**40), st.integers(2, 9))
def test_iroot_is_floor(x, q):
    r = iroot(x, q)
    assert r**q <= x < (r + 1) ** q


def test_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_factors(2727) == [3, 101]
    assert prime_factors(-810) == [2, 3, 5]
    assert prime_factors(1) == []
