"""Prime decomposition in Q(a^(1/n)) from closed forms.

A rational prime p falls in exactly one of five cases (``SplitCase``);
each case has its own formula for the shape of pO_K as a list of
(ramification index e, residue degree f, count) groups.  The formulas
reduce everything to factoring a small binomial over F_p.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass

from .arith import (euler_phi_pk, is_prime, prime_factors, qth_root,
                    split_valuation, vp, wieferich)
from .errors import ReducibleInput, UnsupportedEven, WrongCase
from .fppoly import FpPoly, factor_degrees, factor_fp, format_poly


@dataclass(frozen=True)
class Reducible:
    """Why x^n - a factors over Q: a = root^q, or a = -4 t^4 with 4 | n."""

    n: int
    a: int
    q: int | None = None
    root: int | None = None
    t: int | None = None

    @property
    def reason(self) -> str:
        if self.t is not None:
            return f"{self.a} = -4*{self.t}^4 and 4 | {self.n}"
        return f"{self.a} = ({self.root})^{self.q} and {self.q} | {self.n}"


def _reducibility_witness(n: int, a: int) -> Reducible | None:
    for q in prime_factors(n):
        root = qth_root(a, q)
        if root is not None:
            return Reducible(n, a, q=q, root=root)
    if n % 4 == 0 and a < 0 and a % 4 == 0:
        t = qth_root(-a // 4, 4)
        if t is not None:
            return Reducible(n, a, t=t)
    return None


@dataclass(frozen=True)
class RadicalInput:
    """x^n - a, checked irreducible over Q when constructed."""

    n: int
    a: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if self.a == 0:
            raise ValueError("a must be nonzero")
        witness = _reducibility_witness(self.n, self.a)
        if witness is not None:
            raise ReducibleInput(witness)


def check_irreducible(n: int, a: int) -> RadicalInput | Reducible:
    """Certify x^n - a via: a is no q-th power for q | n, and a != -4t^4 if 4 | n."""
    if n < 2 or a == 0:
        raise ValueError("need n >= 2 and a != 0")
    witness = _reducibility_witness(n, a)
    return witness if witness is not None else RadicalInput(n, a)


class SplitCase(str, enum.Enum):
    UNRAMIFIED = "Unramified"
    TAME_RADICAND = "TameRadicand"
    WILD_INDEX = "WildIndex"
    DEEP = "Deep"
    UNSUPPORTED_EVEN = "UnsupportedEven"


@dataclass(frozen=True)
class TameParams:
    v: int   # v_p(a)
    g: int   # gcd(v, n)
    a0: int  # a / p^v


@dataclass(frozen=True)
class WildParams:
    m: int
    n0: int
    w: int
    b: int


@dataclass(frozen=True)
class DeepParams:
    a0: int
    h: int
    k: int
    m: int
    n0: int
    w0: int
    c: int
    g0: int
    g: int


_PARAM_TYPES = {SplitCase.TAME_RADICAND: TameParams,
                SplitCase.WILD_INDEX: WildParams,
                SplitCase.DEEP: DeepParams}


@dataclass(frozen=True)
class PrimeGroup:
    """``count`` primes, each with ramification e and residue degree f."""

    e: int
    f: int
    count: int = 1
    label: str = ""


class Labeling(str, enum.Enum):
    # one group per factor of the polynomial that mirrors the splitting
    RESIDUAL_FACTOR = "residual-factor"
    # P_i for the first polygon side, P_{i,j} by the p-exponent of the terminal vertex
    TERMINAL_VERTEX = "terminal-vertex"
    # I_i by the level i of the p^i-th twisted cyclotomic factor
    CYCLOTOMIC_LEVEL = "cyclotomic-level"
    POLYGON_SIDE = "polygon-side"


@dataclass(frozen=True)
class Decomposition:
    n: int
    a: int
    p: int
    case: SplitCase
    groups: tuple[PrimeGroup, ...]
    params: TameParams | WildParams | DeepParams | None = None
    labeling: Labeling = Labeling.RESIDUAL_FACTOR

    def degree(self) -> int:
        """sum of e*f over all primes; equals n."""
        return sum(g.e * g.f * g.count for g in self.groups)

    def shape(self) -> tuple[tuple[int, int], ...]:
        """Sorted (e, f) per prime, with repetition."""
        return tuple(sorted((g.e, g.f) for g in self.groups for _ in range(g.count)))

    def num_primes(self) -> int:
        return sum(g.count for g in self.groups)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "p": self.p,
            "case": self.case.value,
            "labeling": self.labeling.value,
            "params": asdict(self.params) if self.params is not None else {},
            "factors": [asdict(g) for g in self.groups],
        }

    @classmethod
    def from_dict(cls, d: dict) -> Decomposition:
        case = SplitCase(d["case"])
        params = None
        if d.get("params"):
            params = _PARAM_TYPES[case](**{k: int(v) for k, v in d["params"].items()})
        groups = tuple(PrimeGroup(int(g["e"]), int(g["f"]), int(g["count"]), g.get("label", ""))
                       for g in d["factors"])
        return cls(int(d["n"]), int(d["a"]), int(d["p"]), case, groups, params,
                   Labeling(d.get("labeling", Labeling.RESIDUAL_FACTOR.value)))

    def __str__(self) -> str:
        parts = []
        for g in self.groups:
            tag = f"P^{g.e}" if g.e > 1 else "P"
            parts.append(f"{tag}(f={g.f})" + (f"x{g.count}" if g.count > 1 else ""))
        return f"({self.p}) = " + " ".join(parts)


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def classify(inp: RadicalInput, p: int) -> SplitCase:
    _check_prime(p)
    n, a = inp.n, inp.a
    p_n, p_a = n % p == 0, a % p == 0
    if not p_a:
        if not p_n:
            return SplitCase.UNRAMIFIED
        return SplitCase.UNSUPPORTED_EVEN if p == 2 else SplitCase.WILD_INDEX
    if not p_n or vp(a, p) % p != 0:
        return SplitCase.TAME_RADICAND
    return SplitCase.UNSUPPORTED_EVEN if p == 2 else SplitCase.DEEP


def _require(inp: RadicalInput, p: int, case: SplitCase) -> None:
    found = classify(inp, p)
    if found is not case:
        raise WrongCase(f"p={p} is {found.value} for x^{inp.n} - {inp.a}, not {case.value}")


def _by_degree(poly: FpPoly) -> dict[int, int]:
    return factor_degrees(poly)


def split_unramified(inp: RadicalInput, p: int) -> Decomposition:
    """p does not divide na: the splitting mirrors x^n - a mod p."""
    _require(inp, p, SplitCase.UNRAMIFIED)
    dist = _by_degree(FpPoly.binomial(inp.n, -inp.a, p))
    if sum(f * cnt for f, cnt in dist.items()) != inp.n:
        # impossible: p does not divide the discriminant +-n^n a^(n-1)
        raise AssertionError(f"x^{inp.n} - {inp.a} has a repeated factor mod {p}")
    groups = tuple(PrimeGroup(1, f, cnt, f"x^{inp.n}-a: degree {f}")
                   for f, cnt in dist.items())
    return Decomposition(inp.n, inp.a, p, SplitCase.UNRAMIFIED, groups)


def split_tame_radicand(inp: RadicalInput, p: int) -> Decomposition:
    """p | a and p does not divide gcd(v_p(a), n); one polygon side of slope -v/n."""
    _require(inp, p, SplitCase.TAME_RADICAND)
    v = vp(inp.a, p)
    g = math.gcd(v, inp.n)
    a0 = inp.a // p**v
    e = inp.n // g
    dist = _by_degree(FpPoly.binomial(g, -a0, p))
    groups = tuple(PrimeGroup(e, f, cnt, f"y^{g}-a0: degree {f}") for f, cnt in dist.items())
    return Decomposition(inp.n, inp.a, p, SplitCase.TAME_RADICAND, groups, TameParams(v, g, a0))


def wild_params(inp: RadicalInput, p: int) -> WildParams:
    m = vp(inp.n, p)
    w = wieferich(inp.a, p).w
    return WildParams(m=m, n0=inp.n // p**m, w=w, b=min(w - 1, m))


def split_wild_index(inp: RadicalInput, p: int) -> Decomposition:
    """Odd p | n, p does not divide a.

    Over a ramified base the formula needs p not dividing w when l <= 0 and
    p not dividing l - w.  Over Q both hold for free: l = w - 1, so
    l - w = -1, and l <= 0 forces w = 1.  No extra hypothesis is checked.
    """
    _require(inp, p, SplitCase.WILD_INDEX)
    prm = wild_params(inp, p)
    m, b = prm.m, prm.b
    fm = factor_fp(FpPoly.binomial(prm.n0, -inp.a, p))
    groups = []
    for i, (phi, _) in enumerate(fm.factors, 1):
        f = phi.degree
        groups.append(PrimeGroup(p ** (m - b), f, 1, f"P_{i} [phi={phi}]"))
        for j in range(m - b + 1, m + 1):
            groups.append(PrimeGroup(euler_phi_pk(p, j), f, 1, f"P_{i},{j} [phi={phi}]"))
    return Decomposition(inp.n, inp.a, p, SplitCase.WILD_INDEX, tuple(groups), prm,
                         Labeling.TERMINAL_VERTEX)


def deep_params(n: int, a: int, p: int) -> DeepParams:
    v = vp(a, p)
    vs = split_valuation(v, p)
    a0 = a // p**v
    m = vp(n, p)
    n0 = n // p**m
    w0 = wieferich(a0, p).w
    return DeepParams(a0=a0, h=vs.h, k=vs.k, m=m, n0=n0, w0=w0,
                      c=min(w0 - 1, vs.k, m), g0=math.gcd(n0, vs.h),
                      g=math.gcd(n0, vs.h * (p - 1)))


def split_ppower_deep(m: int, a: int, p: int) -> Decomposition:
    """Splitting of odd p in Q(a^(1/p^m)) when p | a and p | v_p(a)."""
    n = p**m
    inp = RadicalInput(n, a)
    _require(inp, p, SplitCase.DEEP)
    prm = deep_params(n, a, p)
    top = p ** (m - prm.c)
    groups = [PrimeGroup(top, 1, 1, "P_0")]
    groups += [PrimeGroup(top * euler_phi_pk(p, i), 1, 1, f"P_{i}") for i in range(1, prm.c + 1)]
    return Decomposition(n, a, p, SplitCase.DEEP, tuple(groups), prm, Labeling.CYCLOTOMIC_LEVEL)


def deep_residuals(prm: DeepParams, p: int) -> tuple[FpPoly, FpPoly]:
    """y^g0 - a0 for level 0 and y^g - (-1)^h a0 for every level i >= 1.

    The sign comes from p / (1 - zeta)^phi(p^i) = -1 mod (1 - zeta);
    (-1)^(h p^k) = (-1)^h because p is odd.
    """
    sign = -1 if prm.h % 2 else 1
    return FpPoly.binomial(prm.g0, -prm.a0, p), FpPoly.binomial(prm.g, -sign * prm.a0, p)


def split_deep(inp: RadicalInput, p: int) -> Decomposition:
    """Odd p dividing n, a and v_p(a)."""
    _require(inp, p, SplitCase.DEEP)
    prm = deep_params(inp.n, inp.a, p)
    top = p ** (prm.m - prm.c)
    r0, r1 = deep_residuals(prm, p)
    groups = [PrimeGroup(top * prm.n0 // prm.g0, f, cnt, f"I_0 [{format_poly(r0.coeffs, 'y')}]")
              for f, cnt in _by_degree(r0).items()]
    if prm.c:
        dist = _by_degree(r1)
        for i in range(1, prm.c + 1):
            e = top * euler_phi_pk(p, i) * prm.n0 // prm.g
            groups += [PrimeGroup(e, f, cnt, f"I_{i} [{format_poly(r1.coeffs, 'y')}]")
                       for f, cnt in dist.items()]
    return Decomposition(inp.n, inp.a, p, SplitCase.DEEP, tuple(groups), prm,
                         Labeling.CYCLOTOMIC_LEVEL)


_DISPATCH = {
    SplitCase.UNRAMIFIED: split_unramified,
    SplitCase.TAME_RADICAND: split_tame_radicand,
    SplitCase.WILD_INDEX: split_wild_index,
    SplitCase.DEEP: split_deep,
}


def split(inp: RadicalInput, p: int) -> Decomposition:
    """Decomposition of p in Q(a^(1/n)); raises UnsupportedEven where nothing is proven."""
    case = classify(inp, p)
    if case is SplitCase.UNSUPPORTED_EVEN:
        raise UnsupportedEven(f"no proven splitting of 2 in Q({inp.a}^(1/{inp.n}))")
    return _DISPATCH[case](inp, p)
