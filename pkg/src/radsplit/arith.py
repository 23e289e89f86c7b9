"""Exact integer primitives: p-adic valuations, Wieferich valuations, roots.

Everything here works on Python ints and never rounds.  The valuation of
zero is infinite; ``vp`` refuses it and ``valuation`` returns ``math.inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DivisibleBase, RangeError, WieferichOverflow, ZeroValuation

DEFAULT_WIEFERICH_CAP = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``|n|`` in increasing order (trial division)."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def vp(x: int, p: int) -> int:
    """Largest e with p^e | x.

    >>> vp(135, 3)
    3
    >>> vp(81250, 5)
    5
    """
    if x == 0:
        raise ZeroValuation("valuation of 0 is infinite")
    x = abs(x)
    e = 0
    # peel large powers first so huge valuations stay cheap
    pk, k = p, 1
    while x % pk == 0:
        x //= pk
        e += k
        pk, k = pk * pk, 2 * k
    while x % p == 0:
        x //= p
        e += 1
    return e


def valuation(x: int, p: int) -> int | float:
    """Like ``vp`` but returns ``math.inf`` for zero."""
    return math.inf if x == 0 else vp(x, p)


def digit_sum(x: int, p: int) -> int:
    s = 0
    while x:
        x, r = divmod(x, p)
        s += r
    return s


def vp_factorial(x: int, p: int) -> int:
    """Legendre: v_p(x!) = (x - s_p(x)) / (p - 1)."""
    return (x - digit_sum(x, p)) // (p - 1)


def vp_comb(n: int, k: int, p: int) -> int:
    """v_p(C(n, k)) without forming the binomial."""
    if not 0 <= k <= n:
        raise RangeError(f"k={k} outside [0, {n}]")
    return vp_factorial(n, p) - vp_factorial(k, p) - vp_factorial(n - k, p)


def vp_binom(m: int, b: int, p: int) -> int:
    """v_p(C(p^m, b)), which is m - v_p(b) away from the endpoints."""
    top = p**m
    if not 0 <= b <= top:
        raise RangeError(f"b={b} outside [0, {p}^{m}]")
    if b in (0, top):
        return 0
    return m - vp(b, p)


class WieferichVal(NamedTuple):
    w: int
    depth: int  # largest modulus exponent K that was tried


def wieferich(a: int, p: int, cap: int = DEFAULT_WIEFERICH_CAP,
              schedule: str = "double") -> WieferichVal:
    """w = v_p(a^p - a) for p not dividing a, by lifting a^(p-1) mod p^K.

    The exponent is p - 1 because v_p(a^p - a) = v_p(a^(p-1) - 1) when p
    does not divide a; the same w serves every a^(p^m) - a.  ``schedule``
    is "double" (K = 1, 2, 4, ...) or "step" (K = 1, 2, 3, ...).
    """
    if a % p == 0:
        raise DivisibleBase(f"{p} divides {a}")
    if schedule not in ("double", "step"):
        raise ValueError(f"unknown schedule {schedule!r}")
    K = 1
    while True:
        r = pow(a, p - 1, p**K)
        if r != 1 % p**K:
            return WieferichVal(vp(r - 1, p), K)
        if K >= cap:
            raise WieferichOverflow(f"v_{p}({a}^{p - 1} - 1) exceeds cap {cap}")
        K = min(cap, 2 * K if schedule == "double" else K + 1)


@dataclass(frozen=True)
class ValSplit:
    h: int
    k: int


def split_valuation(v: int, p: int) -> ValSplit:
    """Write v = h * p^k with p not dividing h."""
    if v < 1:
        raise RangeError("valuation must be positive")
    k = vp(v, p)
    return ValSplit(v // p**k, k)


def euler_phi_pk(p: int, j: int) -> int:
    if j < 0:
        raise RangeError("exponent must be non-negative")
    return 1 if j == 0 else p**j - p ** (j - 1)


def iroot(x: int, q: int) -> int:
    """floor(x^(1/q)) for x >= 0, by integer Newton iteration."""
    if x < 0:
        raise ValueError("iroot needs x >= 0")
    if x < 2:
        return x
    # 2^ceil(bits/q) is an upper bound; Newton decreases monotonically from above
    y = 1 << -(-x.bit_length() // q)
    while True:
        z = ((q - 1) * y + x // y ** (q - 1)) // q
        if z >= y:
            return y
        y = z


def qth_root(a: int, q: int) -> int | None:
    """Integer b with b^q == a, or None.  Negative roots only for odd q."""
    if a < 0:
        if q == 2:
            return None
        b = qth_root(-a, q)
        return None if b is None else -b
    b = iroot(a, q)
    return b if b**q == a else None
