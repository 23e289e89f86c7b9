"""Dense polynomials over the prime field F_p and their factorization.

Coefficients are stored lowest degree first, reduced into [0, p), with
trailing zeros trimmed; the zero polynomial has no coefficients.

Factorization runs squarefree decomposition, distinct-degree splitting,
then Cantor-Zassenhaus equal-degree splitting.  The last step is
randomized, but the generator is passed in explicitly and the output is
sorted canonically, so results never depend on the seed.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering

import numpy as np

from .arith import prime_factors
from .errors import DivisionByZeroPoly, ModulusMismatch

DEFAULT_SEED = 20240917

# below this length schoolbook multiplication beats packing into big ints
_KRONECKER_CUTOFF = 40
# vectorized long division pays off from this divisor degree; int64 needs p^2 < 2^63
_NUMPY_CUTOFF = 48
_NUMPY_PMAX = 1 << 31
# distinct-degree splitting batches this many gcds into one
_DDF_BLOCK = 16


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_CUTOFF:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return _trim([c % p for c in out])
    # Kronecker substitution: each slot must hold a full convolution sum
    bound = (p - 1) ** 2 * min(len(a), len(b))
    width = (bound.bit_length() + 8) // 8
    n = len(a) + len(b) - 1
    if width <= 8:
        A = int.from_bytes(_pack(a, width), "little")
        B = int.from_bytes(_pack(b, width), "little")
        raw = np.frombuffer((A * B).to_bytes(n * width, "little"), dtype=np.uint8)
        slots = np.zeros((n, 8), dtype=np.uint8)
        slots[:, :width] = raw.reshape(n, width)
        return _trim((slots.view("<u8").ravel() % p).tolist())
    A = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in a), "little")
    B = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in b), "little")
    raw = (A * B).to_bytes(n * width, "little")
    return _trim([int.from_bytes(raw[i * width:(i + 1) * width], "little") % p
                  for i in range(n)])


def _pack(c: list[int], width: int) -> bytes:
    arr = np.asarray(c, dtype="<u8").view(np.uint8).reshape(len(c), 8)
    return arr[:, :width].tobytes()


def _divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    if db >= _NUMPY_CUTOFF and p < _NUMPY_PMAX:
        return _divmod_np(a, b, p)
    inv = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k] % p
        if c:
            c = c * inv % p
            q[k - db] = c
            off = k - db
            for j in range(db):
                r[off + j] -= c * b[j]
        r[k] = 0
    return _trim(q), _trim([c % p for c in r[:db]])


def _divmod_np(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    r = np.array(a, dtype=np.int64) % p
    bb = np.array(b[:db], dtype=np.int64)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = int(r[k])
        if c:
            c = c * inv % p
            q[k - db] = c
            seg = r[k - db:k]
            seg -= c * bb
            seg %= p
    return _trim(q), _trim(r[:db].tolist())


def _rem(a: list[int], b: list[int], p: int) -> list[int]:
    return _divmod(a, b, p)[1]


def _gcd(a: list[int], b: list[int], p: int) -> list[int]:
    if min(len(a), len(b)) > _NUMPY_CUTOFF and p < _NUMPY_PMAX:
        return _gcd_np(a, b, p)
    while b:
        a, b = b, _rem(a, b, p)
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd_np(a: list[int], b: list[int], p: int) -> list[int]:
    # Euclid on int64 arrays; la, lb are current lengths (degree + 1)
    A = np.array(a, dtype=np.int64) % p
    B = np.array(b, dtype=np.int64) % p
    la, lb = _np_len(A, len(A)), _np_len(B, len(B))
    while lb:
        inv = pow(int(B[lb - 1]), -1, p)
        db = lb - 1
        for k in range(la - 1, db - 1, -1):
            c = int(A[k])
            if c:
                c = c * inv % p
                seg = A[k - db:k + 1]
                seg -= c * B[:lb]
                seg %= p
        la = _np_len(A, db)
        A, B, la, lb = B, A, lb, la
    if not la:
        return []
    inv = pow(int(A[la - 1]), -1, p)
    return ((A[:la] * inv) % p).tolist()


def _np_len(A, upto: int) -> int:
    nz = np.flatnonzero(A[:upto])
    return int(nz[-1]) + 1 if nz.size else 0


def _series_inverse(s: list[int], k: int, p: int) -> list[int]:
    """Inverse of a power series with unit constant term, mod x^k."""
    g = [pow(s[0], -1, p)]
    t = 1
    while t < k:
        t = min(2 * t, k)
        sg = _mul(s[:t], g, p)[:t]
        corr = [(-c) % p for c in sg] + [0] * (t - len(sg))
        corr[0] = (corr[0] + 2) % p
        g = _mul(g, corr, p)[:t]
    return g + [0] * (k - len(g))


class _Reducer:
    """Remainder modulo a fixed monic polynomial via a precomputed inverse.

    Operands are products of two reduced residues, so quotients have at
    most n - 1 coefficients.
    """

    def __init__(self, m: list[int], p: int):
        self.m, self.p, self.n = m, p, len(m) - 1
        # x^n + c: reduce by folding, since x^n = -c
        self.fold = (-m[0]) % p if m[-1] == 1 and not any(m[1:-1]) else None
        self.fast = self.n >= _KRONECKER_CUTOFF and m[-1] == 1 and self.fold is None
        if self.fast:
            self.inv = _trim(_series_inverse(m[::-1], self.n - 1, p)) if self.n > 1 else []

    def __call__(self, a: list[int]) -> list[int]:
        n, p = self.n, self.p
        if len(a) <= n:
            return a
        if self.fold is not None and len(a) <= 2 * n:
            t = self.fold
            high = a[n:]
            low = a[:n]
            for i, c in enumerate(high):
                low[i] = (low[i] + t * c) % p
            return _trim(low)
        if not self.fast or len(a) > 2 * n - 1:
            return _rem(a, self.m, p)
        k = len(a) - n
        qrev = _mul(a[::-1][:k], self.inv[:k], p)[:k]
        q = (qrev + [0] * (k - len(qrev)))[::-1]
        qm = _mul(q, self.m, p)
        low = [(x - (qm[i] if i < len(qm) else 0)) % p for i, x in enumerate(a[:n])]
        return _trim(low)


def _powmod(base: list[int], e: int, mod: list[int], p: int,
            red: _Reducer | None = None) -> list[int]:
    if red is None:
        red = _Reducer(mod, p)
    result = [1] if len(mod) > 1 else []
    base = _rem(base, mod, p)
    while e:
        if e & 1:
            result = red(_mul(result, base, p))
        e >>= 1
        if e:
            base = red(_mul(base, base, p))
    return result


@total_ordering
@dataclass(frozen=True, eq=True)
class FpPoly:
    """Element of F_p[x]; ``coeffs[i]`` multiplies x^i."""

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs=()):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(_trim([c % p for c in coeffs])))

    @classmethod
    def x(cls, p: int) -> FpPoly:
        return cls(p, (0, 1))

    @classmethod
    def const(cls, c: int, p: int) -> FpPoly:
        return cls(p, (c,))

    @classmethod
    def binomial(cls, n: int, c: int, p: int) -> FpPoly:
        """x^n + c."""
        co = [0] * (n + 1)
        co[n] = 1
        co[0] = (co[0] + c) % p
        return cls(p, co)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lc == 1

    def _check(self, other) -> FpPoly:
        if isinstance(other, int):
            return FpPoly(self.p, (other,))
        if not isinstance(other, FpPoly):
            return NotImplemented
        if other.p != self.p:
            raise ModulusMismatch(f"F_{self.p} vs F_{other.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return FpPoly(self.p, [x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return FpPoly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FpPoly(self.p, _mul(list(self.coeffs), list(other.coeffs), self.p))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        q, r = _divmod(list(self.coeffs), list(other.coeffs), self.p)
        return FpPoly(self.p, q), FpPoly(self.p, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = FpPoly(self.p, (1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __lt__(self, other: FpPoly) -> bool:
        return (self.degree, self.coeffs) < (other.degree, other.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def monic(self) -> FpPoly:
        if not self.coeffs:
            return self
        inv = pow(self.lc, -1, self.p)
        return FpPoly(self.p, [c * inv for c in self.coeffs])

    def derivative(self) -> FpPoly:
        return FpPoly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def gcd(self, other: FpPoly) -> FpPoly:
        other = self._check(other)
        return FpPoly(self.p, _gcd(list(self.coeffs), list(other.coeffs), self.p))

    def powmod(self, e: int, mod: FpPoly) -> FpPoly:
        mod = self._check(mod)
        return FpPoly(self.p, _powmod(list(self.coeffs), e, list(mod.coeffs), self.p))

    def __repr__(self) -> str:
        return f"FpPoly({self.p}, {list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self.coeffs)


def format_poly(coeffs, var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


def gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    return a.gcd(b)


@dataclass(frozen=True)
class FactorMultiset:
    """lc * prod(factor^mult); factors monic, irreducible, pairwise distinct."""

    lc: int
    factors: tuple[tuple[FpPoly, int], ...]

    def product(self) -> FpPoly:
        p = self.factors[0][0].p if self.factors else None
        if p is None:
            raise ValueError("empty factorization carries no modulus")
        acc = FpPoly(p, (self.lc,))
        for f, e in self.factors:
            acc = acc * f**e
        return acc

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def _pth_root(f: list[int], p: int) -> list[int]:
    # coefficients of F_p are fixed by Frobenius, so only exponents shrink
    return f[::p]


def squarefree_decomposition(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Pairs (g, j): monic, squarefree, pairwise coprime, f = lc * prod g^j."""
    p = f.p
    g = list(f.monic().coeffs)
    out: dict[int, list[int]] = {}
    mult = 1
    while len(g) > 1:
        d = _trim([i * c % p for i, c in enumerate(g)][1:])
        if not d:
            g = _pth_root(g, p)
            mult *= p
            continue
        c = _gcd(g, d, p)
        w = _divmod(g, c, p)[0]
        j = 1
        while len(w) > 1:
            y = _gcd(w, c, p)
            z = _divmod(w, y, p)[0]
            if len(z) > 1:
                out[j * mult] = z
            w = y
            c = _divmod(c, y, p)[0]
            j += 1
        if len(c) > 1:
            g = _pth_root(c, p)
            mult *= p
        else:
            break
    return [(FpPoly(p, v), k) for k, v in sorted(out.items())]


def distinct_degree(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Split a monic squarefree f into products of same-degree irreducibles.

    gcd(f, x^(p^d) - x) is taken over blocks of consecutive d at once
    (product of the differences); only blocks that hit are refined.
    """
    p = f.p
    rest = list(f.coeffs)
    out = []
    h = [0, 1]
    d = 0
    while len(rest) - 1 >= 2 * (d + 1):
        red = _Reducer(rest, p)
        block_h, acc = [], [1]
        top = (len(rest) - 1) // 2
        while len(block_h) < _DDF_BLOCK and d + len(block_h) < top:
            h = _frobenius(h, rest, p, red)
            block_h.append(h)
            acc = red(_mul(acc, _minus_x(h, p), p))
        g = _gcd(rest, acc, p)
        if len(g) > 1:
            for i, hi in enumerate(block_h):
                gi = _gcd(rest, _minus_x(_rem(hi, rest, p), p), p)
                if len(gi) > 1:
                    out.append((FpPoly(p, gi), d + i + 1))
                    rest = _divmod(rest, gi, p)[0]
            h = _rem(h, rest, p)
        d += len(block_h)
    if len(rest) > 1:
        out.append((FpPoly(p, rest), len(rest) - 1))
    return out


def _frobenius(h: list[int], rest: list[int], p: int, red: _Reducer) -> list[int]:
    """h^p mod rest; a monomial modulo a binomial stays a monomial."""
    if red.fold is not None:
        nz = [i for i, c in enumerate(h) if c]
        if len(nz) == 1:
            # (c x^i)^p = c x^(ip) and x^N = fold
            q, r = divmod(nz[0] * p, red.n)
            return [0] * r + [h[nz[0]] * pow(red.fold, q, p) % p]
    return _powmod(h, p, rest, p, red)


def _minus_x(h: list[int], p: int) -> list[int]:
    hx = list(h) + [0] * max(0, 2 - len(h))
    hx[1] = (hx[1] - 1) % p
    return _trim(hx)


def equal_degree(f: FpPoly, d: int, rng: random.Random) -> list[FpPoly]:
    """Cantor-Zassenhaus: all degree-d irreducible factors of f."""
    p = f.p
    n = f.degree
    if n == d:
        return [f]
    fc = list(f.coeffs)
    while True:
        r = _trim([rng.randrange(p) for _ in range(n)])
        if len(r) < 2:
            continue
        if p == 2:
            # trace map T(r) = r + r^2 + ... + r^(2^(d-1))
            t, acc = list(r), list(r)
            for _ in range(d - 1):
                t = _rem(_mul(t, t, 2), fc, 2)
                acc = _trim([(x ^ y) for x, y in _zip_pad(acc, t)])
            cand = acc
        else:
            s = _powmod(r, (p**d - 1) // 2, fc, p)
            s = list(s) if s else [0]
            s[0] = (s[0] - 1) % p
            cand = _trim(s)
        g = _gcd(fc, cand, p)
        if 1 < len(g) < len(fc):
            g_poly = FpPoly(p, g)
            return (equal_degree(g_poly, d, rng)
                    + equal_degree(f // g_poly, d, rng))


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def factor_fp(f: FpPoly, rng: random.Random | None = None) -> FactorMultiset:
    """Complete factorization of a nonzero f into monic irreducibles.

    Factors come back sorted by degree and then by coefficient list.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if rng is None:
        rng = random.Random(DEFAULT_SEED)
    found: list[tuple[FpPoly, int]] = []
    for part, mult in squarefree_decomposition(f):
        for block, d in distinct_degree(part):
            for g in equal_degree(block, d, rng):
                found.append((g, mult))
    found.sort(key=lambda fe: (fe[0], fe[1]))
    return FactorMultiset(f.lc, tuple(found))


def degree_distribution(fm: FactorMultiset) -> dict[int, int]:
    """Number of distinct irreducible factors per degree."""
    return dict(sorted(Counter(g.degree for g, _ in fm.factors).items()))


def factor_degrees(f: FpPoly) -> dict[int, int]:
    """Distinct irreducible factors per degree, without splitting equal-degree blocks.

    Agrees with ``degree_distribution(factor_fp(f))`` but skips the
    randomized stage, which dominates for large factors.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    counts: Counter[int] = Counter()
    for part, _ in squarefree_decomposition(f):
        for block, d in distinct_degree(part):
            counts[d] += block.degree // d
    return dict(sorted(counts.items()))


def is_irreducible(f: FpPoly) -> bool:
    """Rabin's test: x^(p^n) = x mod f and gcd(f, x^(p^(n/q)) - x) = 1."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    x = FpPoly.x(f.p)

    def frob(k):
        return x.powmod(f.p**k, f)

    for q in prime_factors(n):
        if not f.gcd(frob(n // q) - x).is_one():
            return False
    return (frob(n) - x).is_zero()


def mobius(n: int) -> int:
    ps = prime_factors(n)
    m = 1
    for q in ps:
        if n % (q * q) == 0:
            return 0
        m = -m
    return m


def irred_count(f: int, p: int) -> int:
    """Number of monic irreducible degree-f polynomials over F_p (Gauss)."""
    if f < 1:
        raise ValueError("degree must be positive")
    total = sum(mobius(f // d) * p**d for d in range(1, f + 1) if f % d == 0)
    return total // f
