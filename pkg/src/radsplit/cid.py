"""Common index divisors from decomposition shapes.

p divides the index of every generator of O_K exactly when, for some
residue degree f, more primes above p have degree f than there are monic
irreducibles of degree f over F_p.  The Hensel count below is the source of
truth; the closed forms for the wild and deep cases are cross-checks.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .arith import prime_factors
from .errors import ConsistencyError
from .fppoly import FpPoly, factor_degrees, irred_count
from .splitting import (Decomposition, RadicalInput, SplitCase, _require, classify,
                        deep_params, deep_residuals, split, wild_params)


class CidMethod(str, enum.Enum):
    HENSEL_COUNT = "HenselCount"
    CLOSED_FORM_WILD = "ClosedFormWild"
    CLOSED_FORM_DEEP = "ClosedFormDeep"
    NEVER_BY_CASE = "NeverByCase"


@dataclass(frozen=True)
class CidWitness:
    f: int
    prime_count: int
    irred_count: int


@dataclass(frozen=True)
class CidReport:
    """``is_cid`` is None when undetermined (p = 2 outside the tame case)."""

    p: int
    is_cid: bool | None
    witness: CidWitness | None
    method: CidMethod

    def __post_init__(self):
        if self.is_cid and (self.witness is None
                            or self.witness.prime_count <= self.witness.irred_count):
            raise ValueError("a positive verdict needs a witness with prime_count > irred_count")

    def to_dict(self) -> dict:
        w = self.witness
        return {
            "p": self.p,
            "is_cid": self.is_cid,
            "verdict": {True: "CID", False: "not CID", None: "Undetermined"}[self.is_cid],
            "witness": None if w is None else {"f": w.f, "prime_count": w.prime_count,
                                               "irred_count": w.irred_count},
            "method": self.method.value,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CidReport:
        w = d.get("witness")
        witness = None if w is None else CidWitness(int(w["f"]), int(w["prime_count"]),
                                                    int(w["irred_count"]))
        return cls(int(d["p"]), d["is_cid"], witness, CidMethod(d["method"]))


def _verdict(p: int, counts: dict[int, int], method: CidMethod) -> CidReport:
    for f in sorted(counts):
        bound = irred_count(f, p)
        if counts[f] > bound:
            return CidReport(p, True, CidWitness(f, counts[f], bound), method)
    return CidReport(p, False, None, method)


def is_cid_hensel(decomp: Decomposition) -> CidReport:
    counts: Counter[int] = Counter()
    for g in decomp.groups:
        counts[g.f] += g.count
    return _verdict(decomp.p, counts, CidMethod.HENSEL_COUNT)


def is_cid_closed_wild(inp: RadicalInput, p: int) -> CidReport:
    """min(w, m+1) * d_f against Irred(f, p), d_f counting factors of x^n0 - a."""
    _require(inp, p, SplitCase.WILD_INDEX)
    prm = wild_params(inp, p)
    d = factor_degrees(FpPoly.binomial(prm.n0, -inp.a, p))
    mult = min(prm.w, prm.m + 1)
    return _verdict(p, {f: mult * c for f, c in d.items()}, CidMethod.CLOSED_FORM_WILD)


def is_cid_closed_deep(inp: RadicalInput, p: int) -> CidReport:
    """d_{f,0} + c * d_f against Irred(f, p)."""
    _require(inp, p, SplitCase.DEEP)
    prm = deep_params(inp.n, inp.a, p)
    r0, r1 = deep_residuals(prm, p)
    counts = Counter(factor_degrees(r0))
    if prm.c:
        for f, c in factor_degrees(r1).items():
            counts[f] += prm.c * c
    return _verdict(p, counts, CidMethod.CLOSED_FORM_DEEP)


_CLOSED = {SplitCase.WILD_INDEX: is_cid_closed_wild, SplitCase.DEEP: is_cid_closed_deep}


def cid_report(inp: RadicalInput, p: int) -> CidReport:
    """Verdict for a single prime; closed forms are checked against the Hensel count."""
    case = classify(inp, p)
    if case is SplitCase.UNSUPPORTED_EVEN:
        return CidReport(p, None, None, CidMethod.HENSEL_COUNT)
    if case in (SplitCase.UNRAMIFIED, SplitCase.TAME_RADICAND):
        return CidReport(p, False, None, CidMethod.NEVER_BY_CASE)
    report = is_cid_hensel(split(inp, p))
    closed = _CLOSED[case](inp, p)
    if closed.is_cid != report.is_cid:
        raise ConsistencyError(f"closed form and Hensel count disagree at p={p} "
                               f"for x^{inp.n} - {inp.a}")
    return report


def enumerate_cids(inp: RadicalInput) -> list[CidReport]:
    """One report per prime dividing n; primes not dividing n are never CIDs."""
    return [cid_report(inp, p) for p in prime_factors(inp.n)]

