"""Command-line front end.

    radsplit irreducible N A
    radsplit split N A P
    radsplit cids N A
    radsplit polygon N A P [--phi R]
    radsplit batch FILE

A may be written in factored form such as ``3^135*26`` or ``-2^5*3``.
Results go to stdout, errors to stderr as one JSON object.  Exit codes:
0 success, 1 malformed input, 2 reducible polynomial, 3 unsupported case.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys

from .arith import is_prime
from .cid import enumerate_cids, is_cid_hensel
from .errors import ExtensionCoefficients, RadsplitError, ReducibleInput, Unsupported
from .fppoly import DEFAULT_SEED, FpPoly, factor_fp
from .newton import (binomial_poly, develop, is_separable, lift, polygon_to_json,
                     principal_polygon, residual_poly)
from .splitting import RadicalInput, check_irreducible, split

EXIT_OK, EXIT_MALFORMED, EXIT_REDUCIBLE, EXIT_UNSUPPORTED = 0, 1, 2, 3
JSON_SAFE_MAX = 2**53 - 1
SEED_ENV = "RADSPLIT_SEED"

_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


class MalformedInput(RadsplitError, ValueError):
    pass


class InseparableResidual(Unsupported):
    """Raised after the polygon JSON was produced; carries that payload."""

    def __init__(self, message, payload):
        super().__init__(message)
        self.payload = payload


def parse_int(text) -> int:
    """Exact integer from an int, a decimal string or a product like 3^135*26."""
    if isinstance(text, bool):
        raise MalformedInput(f"not an integer: {text!r}")
    if isinstance(text, int):
        return text
    s = str(text).replace(" ", "")
    sign = 1
    if s[:1] in "+-" and s:
        sign, s = (-1 if s[0] == "-" else 1), s[1:]
    if not s:
        raise MalformedInput(f"not an integer: {text!r}")
    value = 1
    for term in s.split("*"):
        m = _TERM.match(term)
        if not m:
            raise MalformedInput(f"not an integer: {text!r}")
        base, exp = int(m.group(1)), int(m.group(2) or 1)
        value *= base**exp
    return sign * value


def jsonable(obj):
    """Replace integers beyond 2^53 - 1 by decimal strings, recursively."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > JSON_SAFE_MAX else obj
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), separators=(",", ":"))


def resolve_seed(seed) -> int:
    if seed is not None:
        return parse_int(seed)
    env = os.environ.get(SEED_ENV)
    return parse_int(env) if env else DEFAULT_SEED


def _prime(p: int) -> int:
    if not is_prime(p):
        raise MalformedInput(f"{p} is not prime")
    return p


def _radical(n: int, a: int) -> RadicalInput:
    if n < 2 or a == 0:
        raise MalformedInput("need n >= 2 and a != 0")
    return RadicalInput(n, a)


def cmd_irreducible(n: int, a: int, rng) -> dict:
    if n < 2 or a == 0:
        raise MalformedInput("need n >= 2 and a != 0")
    res = check_irreducible(n, a)
    if isinstance(res, RadicalInput):
        return {"n": n, "a": a, "irreducible": True, "witness": None}
    return {"n": n, "a": a, "irreducible": False,
            "witness": {"q": res.q, "root": res.root, "t": res.t, "reason": res.reason}}


def cmd_split(n: int, a: int, p: int, rng) -> dict:
    d = split(_radical(n, a), _prime(p))
    out = d.to_dict()
    out["is_cid"] = is_cid_hensel(d).is_cid
    return out


def cmd_cids(n: int, a: int, rng) -> list:
    return [r.to_dict() for r in enumerate_cids(_radical(n, a))]


def _one_polygon(f, phi, p):
    dev = develop(f, phi, p)
    poly = principal_polygon(dev)
    bad = []
    for s in poly.sides:
        try:
            if not is_separable(residual_poly(dev, s).poly):
                bad.append(s)
        except ExtensionCoefficients:
            pass
    return polygon_to_json(phi, poly, dev), bad


def cmd_polygon(n: int, a: int, p: int, rng, phi_root: int | None = None):
    """Polygon at x - phi_root, or at every irreducible factor of x^n - a mod p."""
    _radical(n, a)
    _prime(p)
    f = binomial_poly(n, a)
    if phi_root is not None:
        if (pow(phi_root, n, p) - a) % p:
            raise MalformedInput(f"x - {phi_root} does not divide x^{n} - {a} mod {p}")
        result, bad = _one_polygon(f, (-phi_root, 1), p)
    else:
        result, bad = [], []
        for phi_bar, _ in factor_fp(FpPoly.binomial(n, -a, p), rng):
            if (phi := lift(phi_bar)) == f:
                continue
            js, b = _one_polygon(f, phi, p)
            result.append(js)
            bad += b
    if bad:
        raise InseparableResidual(
            f"{len(bad)} side(s) have an inseparable residual polynomial", result)
    return result


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, ReducibleInput):
        return EXIT_REDUCIBLE
    if isinstance(exc, Unsupported):
        return EXIT_UNSUPPORTED
    return EXIT_MALFORMED


def error_dict(exc: BaseException) -> dict:
    kind = "RequiresFurtherDissection" if isinstance(exc, InseparableResidual) else type(exc).__name__
    return {"error": kind, "message": str(exc), "exit_code": _exit_code(exc)}


def run_request(req: dict, rng) -> object:
    """Execute one parsed request; raises on any failure."""
    if not isinstance(req, dict):
        raise MalformedInput("request must be a JSON object")
    command = req.get("command")
    try:
        n, a = parse_int(req["n"]), parse_int(req["a"])
        p = parse_int(req["p"]) if command in ("split", "polygon") else None
    except KeyError as exc:
        raise MalformedInput(f"missing field {exc.args[0]!r}") from None
    if command == "irreducible":
        return cmd_irreducible(n, a, rng)
    if command == "split":
        return cmd_split(n, a, p, rng)
    if command == "cids":
        return cmd_cids(n, a, rng)
    if command == "polygon":
        phi = req.get("phi")
        return cmd_polygon(n, a, p, rng, None if phi is None else parse_int(phi))
    raise MalformedInput(f"unknown command {command!r}")


def _exit_for_result(command: str, result) -> int:
    if command == "irreducible" and not result["irreducible"]:
        return EXIT_REDUCIBLE
    return EXIT_OK


def run_batch(lines, seed: int) -> list[str]:
    """One response line per non-blank request line; failures stay on their line."""
    out = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            req = json.loads(line)
            result = run_request(req, random.Random(seed))
            out.append(dumps({"line": lineno, "ok": True, "result": result}))
        except (RadsplitError, ValueError, TypeError) as exc:
            out.append(dumps({"line": lineno, "ok": False, **error_dict(exc)}))
    return out


def format_text(command: str, result) -> str:
    if command == "irreducible":
        if result["irreducible"]:
            return f"x^{result['n']} - {result['a']} is irreducible"
        return f"x^{result['n']} - {result['a']} is reducible: {result['witness']['reason']}"
    if command == "split":
        parts = []
        for g in result["factors"]:
            tag = f"P^{g['e']}" if g["e"] > 1 else "P"
            parts.append(f"{tag}(f={g['f']})" + (f" x{g['count']}" if g["count"] > 1 else ""))
        cid = {True: "yes", False: "no", None: "undetermined"}[result["is_cid"]]
        return f"({result['p']}) = {'  '.join(parts)}\ncase: {result['case']}\nCID: {cid}"
    if command == "cids":
        return "\n".join(f"p={r['p']}: {r['verdict']} ({r['method']})" for r in result) or "none"
    polys = result if isinstance(result, list) else [result]
    lines = []
    for js in polys:
        lines.append(f"phi={js['phi']} vertices={js['vertices']}")
        for s in js["sides"]:
            lines.append(f"  slope {s['slope'][0]}/{s['slope'][1]} length {s['length']} "
                         f"degree {s['degree']} residual {s['residual']}")
    return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(dumps({"error": "UsageError", "message": message,
                                "exit_code": EXIT_MALFORMED}) + "\n")
        sys.exit(EXIT_MALFORMED)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", default=None, help=f"factorization seed (else ${SEED_ENV})")
    parser = _Parser(prog="radsplit", description="Prime splitting in radical fields Q(a^(1/n)).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("irreducible", parents=[common], help="certify x^n - a irreducible")
    s.add_argument("n")
    s.add_argument("a")
    s = sub.add_parser("split", parents=[common], help="decomposition of p")
    s.add_argument("n")
    s.add_argument("a")
    s.add_argument("p")
    s = sub.add_parser("cids", parents=[common], help="common index divisors")
    s.add_argument("n")
    s.add_argument("a")
    s = sub.add_parser("polygon", parents=[common], help="Newton polygon data")
    s.add_argument("n")
    s.add_argument("a")
    s.add_argument("p")
    s.add_argument("--phi", default=None, help="develop at x - PHI instead of every factor")
    s = sub.add_parser("batch", parents=[common], help="NDJSON requests, one per line ('-' for stdin)")
    s.add_argument("file")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        seed = resolve_seed(args.seed)
        if args.command == "batch":
            if args.file == "-":
                lines = sys.stdin.read().splitlines()
            else:
                with open(args.file, encoding="utf-8") as fh:
                    lines = fh.read().splitlines()
            for line in run_batch(lines, seed):
                print(line)
            return EXIT_OK
        req = {k: getattr(args, k) for k in ("command", "n", "a", "p", "phi") if hasattr(args, k)}
        result = run_request(req, random.Random(seed))
    except InseparableResidual as exc:
        print(dumps(exc.payload) if args.format == "json" else format_text(args.command, exc.payload))
        sys.stderr.write(dumps(error_dict(exc)) + "\n")
        return EXIT_UNSUPPORTED
    except (RadsplitError, ValueError, OSError) as exc:
        sys.stderr.write(dumps(error_dict(exc)) + "\n")
        return _exit_code(exc)
    print(dumps(result) if args.format == "json" else format_text(args.command, result))
    return _exit_for_result(args.command, result)


if __name__ == "__main__":
    sys.exit(main())
