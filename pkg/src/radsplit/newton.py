"""First-order Newton polygon engine (Ore's first dissection) over Z_p.

Given an irreducible factor of f mod p, develop f in powers of a lift phi,
take the lower convex hull of (i, v_p(a_i)), keep its negative-slope part
and read a residual polynomial off every side.  When every residual
polynomial is separable the shape of pO_K follows directly; otherwise a
second dissection would be needed and the engine refuses.

This path never uses the closed forms in ``splitting``; it exists to check
them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import valuation, vp, vp_comb
from .errors import (EmptyPolygon, ExtensionCoefficients, NotMonic,
                     RequiresFurtherDissection)
from .fppoly import FpPoly, factor_fp
from .splitting import Decomposition, Labeling, PrimeGroup, RadicalInput, classify

IntPoly = tuple[int, ...]  # integer coefficients, lowest degree first


def _int_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _int_divmod(f: IntPoly, phi: IntPoly) -> tuple[IntPoly, IntPoly]:
    d = len(phi) - 1
    r = list(f)
    if len(r) <= d:
        return (), _int_trim(r)
    q = [0] * (len(r) - d)
    for k in range(len(r) - 1, d - 1, -1):
        c = r[k]
        if c:
            q[k - d] = c
            off = k - d
            for j in range(d):
                r[off + j] -= c * phi[j]
            r[k] = 0
    return _int_trim(q), _int_trim(r[:d])


def _int_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _int_trim(out)


def _gauss_valuation(poly: IntPoly, p: int) -> int | float:
    return min((vp(c, p) for c in poly if c), default=math.inf)


@dataclass(frozen=True)
class Development:
    """f = sum coeffs[i] * phi^i with deg coeffs[i] < deg phi."""

    p: int
    f: IntPoly
    phi: IntPoly
    coeffs: tuple[IntPoly, ...]
    valuations: tuple[int | float, ...]

    def recompose(self) -> IntPoly:
        acc: IntPoly = ()
        for a in reversed(self.coeffs):
            acc = _int_mul(acc, self.phi)
            n = max(len(acc), len(a))
            acc = _int_trim([(acc[i] if i < len(acc) else 0) + (a[i] if i < len(a) else 0)
                             for i in range(n)])
        return acc


def _binomial_shape(f: IntPoly) -> bool:
    return len(f) >= 2 and f[-1] == 1 and not any(f[1:-1])


def develop(f, phi, p: int) -> Development:
    """phi-adic development of the monic integer polynomial f."""
    f, phi = tuple(f), tuple(phi)
    if not f or f[-1] != 1 or not phi or phi[-1] != 1:
        raise NotMonic("develop needs monic f and phi")
    if len(phi) > len(f):
        raise ValueError("deg phi exceeds deg f")
    if len(phi) == 2 and _binomial_shape(f):
        return _develop_binomial_linear(f, phi, p)
    coeffs = []
    rest = f
    while rest:
        rest, r = _int_divmod(rest, phi)
        coeffs.append(r)
    return Development(p, f, phi, tuple(coeffs), tuple(_gauss_valuation(c, p) for c in coeffs))


def _develop_binomial_linear(f: IntPoly, phi: IntPoly, p: int) -> Development:
    # x^N + c at phi = x - r: a_i = C(N, i) r^(N-i) for i >= 1, a_0 = r^N + c
    N, c, r = len(f) - 1, f[0], -phi[0]
    coeffs: list[IntPoly] = [(r**N + c,) if r**N + c else ()]
    vals: list[int | float] = [valuation(r**N + c, p)]
    vr = valuation(r, p)
    for i in range(1, N + 1):
        if r == 0 and i < N:
            coeffs.append(())
            vals.append(math.inf)
            continue
        coeffs.append((math.comb(N, i) * r ** (N - i),))
        vals.append(vp_comb(N, i, p) + ((N - i) * vr if i < N else 0))
    return Development(p, f, phi, tuple(coeffs), tuple(vals))


@dataclass(frozen=True)
class Side:
    start: tuple[int, int]
    end: tuple[int, int]

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def height(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def degree(self) -> int:
        return math.gcd(self.length, self.height)

    @property
    def h(self) -> int:
        return self.height // self.degree

    @property
    def e(self) -> int:
        return self.length // self.degree

    @property
    def slope(self) -> tuple[int, int]:
        """(-h, e): the slope -h/e in lowest terms."""
        return (-self.h, self.e)

    def slope_fraction(self) -> Fraction:
        return Fraction(-self.h, self.e)

    def lattice_points(self) -> list[tuple[int, int]]:
        s, vs = self.start
        return [(s + j * self.e, vs - j * self.h) for j in range(self.degree + 1)]


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[tuple[int, int], ...]
    sides: tuple[Side, ...]


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points) -> list[tuple[int, int]]:
    """Vertices of the lower convex hull, left to right (monotone chain)."""
    hull: list[tuple[int, int]] = []
    for pt in sorted(points):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def principal_polygon(dev: Development) -> NewtonPolygon:
    """Negative-slope part of the lower hull of the finite points (i, v_i)."""
    pts = [(i, v) for i, v in enumerate(dev.valuations) if v != math.inf]
    if not pts or pts[0][0] != 0:
        raise EmptyPolygon("constant coefficient vanishes; phi divides f exactly")
    if pts[0][1] == 0:
        raise EmptyPolygon("constant coefficient is a unit; phi does not divide f mod p")
    hull = lower_hull(pts)
    sides = []
    for a, b in zip(hull, hull[1:]):
        if b[1] >= a[1]:
            break
        sides.append(Side(a, b))
    vertices = tuple([sides[0].start] + [s.end for s in sides])
    return NewtonPolygon(vertices, tuple(sides))


@dataclass(frozen=True)
class ResidualPoly:
    side: Side
    poly: FpPoly  # in y, over F_p


def residual_poly(dev: Development, side: Side) -> ResidualPoly:
    """Coefficients red(a_i / p^v_i) at the lattice points of ``side``.

    Points strictly above the side contribute 0.  For nonlinear phi a
    coefficient outside F_p cannot be represented here and is refused.
    """
    p = dev.p
    out = []
    for i, v in side.lattice_points():
        if dev.valuations[i] != v:
            out.append(0)
            continue
        unit = [c // p**v % p for c in dev.coeffs[i]]
        if any(unit[1:]):
            raise ExtensionCoefficients(
                f"residual coefficient at i={i} lies outside F_{p}")
        out.append(unit[0] if unit else 0)
    return ResidualPoly(side, FpPoly(p, out))


def is_separable(poly: FpPoly) -> bool:
    return poly.gcd(poly.derivative()).degree == 0


def lift(phi: FpPoly) -> IntPoly:
    """Canonical lift: the residues in [0, p) themselves."""
    return tuple(phi.coeffs)


def _side_groups(dev: Development, side: Side, deg_phi: int, tag: str,
                 rng) -> list[PrimeGroup]:
    try:
        res = residual_poly(dev, side)
    except ExtensionCoefficients:
        if side.degree == 1:
            # a linear residual is irreducible whatever its coefficients
            return [PrimeGroup(side.e, deg_phi, 1, tag)]
        raise
    if not is_separable(res.poly):
        raise RequiresFurtherDissection(
            f"residual {res.poly} of side {side.start}-{side.end} is inseparable")
    groups = []
    for gamma, _ in factor_fp(res.poly, rng):
        k = gamma.degree
        # over F_(p^d) an F_p-irreducible of degree k splits into gcd(k, d) factors
        split = math.gcd(k, deg_phi)
        groups.append(PrimeGroup(side.e, deg_phi * k // split, split, tag))
    return groups


def binomial_poly(n: int, a: int) -> IntPoly:
    return tuple([-a] + [0] * (n - 1) + [1])


def polygons(n: int, a: int, p: int, rng: random.Random | None = None):
    """(phi, development, polygon) for every irreducible factor of x^n - a mod p."""
    f = binomial_poly(n, a)
    out = []
    for phi_bar, _ in factor_fp(FpPoly.binomial(n, -a, p), rng):
        dev = develop(f, lift(phi_bar), p)
        out.append((phi_bar, dev, principal_polygon(dev)))
    return out


def ore_factorize(n: int, a: int, p: int, rng: random.Random | None = None) -> Decomposition:
    """Decomposition of p in Q(a^(1/n)) from first-order polygons alone."""
    inp = RadicalInput(n, a)
    f = binomial_poly(n, a)
    groups: list[PrimeGroup] = []
    for phi_bar, _mult in factor_fp(FpPoly.binomial(n, -a, p), rng):
        phi = lift(phi_bar)
        d = phi_bar.degree
        dev = develop(f, phi, p)
        if not dev.coeffs[0]:
            # phi | f over Z, so f = phi by irreducibility
            groups.append(PrimeGroup(1, d, 1, f"phi={phi_bar}"))
            continue
        poly = principal_polygon(dev)
        for j, side in enumerate(poly.sides, 1):
            groups += _side_groups(dev, side, d, f"phi={phi_bar}, S_{j}", rng)
    return Decomposition(n, a, p, classify(inp, p), tuple(groups), None, Labeling.POLYGON_SIDE)


def polygon_to_json(phi, poly: NewtonPolygon, dev: Development) -> dict:
    sides = []
    for s in poly.sides:
        try:
            res = list(residual_poly(dev, s).poly.coeffs)
        except ExtensionCoefficients:
            res = None
        sides.append({"slope": list(s.slope), "length": s.length,
                      "degree": s.degree, "residual": res})
    return {"phi": list(phi), "vertices": [list(v) for v in poly.vertices], "sides": sides}
