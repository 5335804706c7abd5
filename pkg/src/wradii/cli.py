"""Command-line front end: ``wradii {eval,zeros,radius,bounds,table,verify}``.

Exit codes: 0 success, 1 verification failure or failed computation,
2 usage error, 3 domain error.  Numbers are written with 17 significant
digits so that tables round-trip exactly.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Iterable, Sequence

from .errors import DomainError, WradiiError
from .params import WrightParams
from .radii import Kind, Norm, RadiusQuery, RadiusResult, radius
from .rayleigh import THEOREMS, Theorem, bounds_closed_form
from .wright import Family, derivative
from .zeros import first_zeros

__all__ = ["main", "RECORD_FIELDS", "RECORD_SCHEMA", "parse_grid", "format_number", "records_to_csv", "to_json"]

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

RECORD_FIELDS = (
    "rho", "beta", "alpha", "kind", "norm", "radius",
    "lower_k1", "lower_k2", "upper_k2", "upper_k1", "residual",
)
DEFAULT_SEED = 20240229

_NUM = {"type": "number"}
_BOUND = {"type": ["number", "null"]}
# JSON Schema of one radius record; `radius --format json` adds the bracket fields
RECORD_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": list(RECORD_FIELDS),
    "properties": {
        "rho": {"type": "number", "exclusiveMinimum": 0},
        "beta": {"type": "number", "exclusiveMinimum": 0},
        "alpha": {"type": "number", "minimum": 0, "exclusiveMaximum": 1},
        "kind": {"enum": [k.value for k in Kind]},
        "norm": {"enum": [n.value for n in Norm]},
        "radius": {"type": "number", "exclusiveMinimum": 0},
        "lower_k1": _BOUND, "lower_k2": _BOUND, "upper_k2": _BOUND, "upper_k1": _BOUND,
        "residual": {"type": "number", "minimum": 0, "maximum": 1e-10},
        "theorem": {"enum": [t.value for t in Theorem] + [None]},
        "bracket_lo": _NUM,
        "bracket_hi": _NUM,
        "upper_domain_zero": _NUM,
        "iterations": {"type": "integer", "minimum": 0},
    },
}


class UsageError(Exception):
    pass


# --- formatting ---------------------------------------------------------------------


def format_number(x: Any) -> str:
    """17 significant digits for floats, plain text otherwise, empty for None."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"refusing to serialize non-finite number {x!r}")
        return format(x, ".17g")
    return str(x)


def records_to_csv(records: Iterable[dict], fields: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for rec in records:
        w.writerow([format_number(rec.get(f)) for f in fields])
    return buf.getvalue()


def _json_scalar(x: Any) -> str:
    if x is None:
        return "null"
    if isinstance(x, (bool, int, float)):
        return format_number(x)
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_json_scalar(v) for v in x) + "]"
    return json.dumps(str(x))


def to_json(data: dict | list[dict]) -> str:
    """JSON with 17-digit numbers; records are flat, values may be short lists."""
    def obj(rec: dict) -> str:
        return "{" + ", ".join(f"{json.dumps(k)}: {_json_scalar(v)}" for k, v in rec.items()) + "}"

    if isinstance(data, dict):
        return obj(data) + "\n"
    return "[\n" + ",\n".join("  " + obj(r) for r in data) + "\n]\n"


def parse_grid(text: str) -> list[float]:
    """``a:b:step`` (inclusive of b) or a single number."""
    parts = text.split(":")
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"grid {text!r} is not of the form a:b:step") from None
    if len(nums) == 1:
        return nums
    if len(nums) != 3:
        raise UsageError(f"grid {text!r} is not of the form a:b:step")
    a, b, step = nums
    if not all(math.isfinite(v) for v in nums) or step <= 0 or a > b:
        raise UsageError(f"grid {text!r} needs start <= stop and step > 0")
    count = int(math.floor((b - a) / step + 1e-9)) + 1
    return [round(a + i * step, 12) for i in range(count)]


def _parse_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"{text!r} is not a comma-separated list of numbers") from None


# --- records ---------------------------------------------------------------------------


_THEOREM_OF = {(info.kind, info.norm): t for t, info in THEOREMS.items()}


def _record(res: RadiusResult, *, extra: bool = False) -> dict:
    q = res.query
    rec: dict[str, Any] = {
        "rho": q.params.rho, "beta": q.params.beta, "alpha": q.alpha,
        "kind": q.kind.value, "norm": q.norm.value, "radius": res.value,
        "lower_k1": None, "lower_k2": None, "upper_k2": None, "upper_k1": None,
        "residual": res.residual,
    }
    theorem = _THEOREM_OF.get((q.kind, q.norm))
    if theorem is not None and q.alpha == 0.0:
        b = bounds_closed_form(theorem, q.params)
        rec.update(lower_k1=b.lower_k1, lower_k2=b.lower_k2, upper_k2=b.upper_k2, upper_k1=b.upper_k1)
    if extra:
        rec.update(theorem=theorem.value if theorem is not None and q.alpha == 0.0 else None,
                   bracket_lo=res.bracket[0], bracket_hi=res.bracket[1],
                   upper_domain_zero=res.upper_domain_zero, iterations=res.iterations)
    return rec


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> WrightParams:
    if args.rho is None or args.beta is None:
        raise UsageError("--rho and --beta are required")
    return WrightParams(args.rho, args.beta)


# --- commands ----------------------------------------------------------------------------


def cmd_eval(args) -> int:
    if args.family is None or args.x is None:
        raise UsageError("eval needs --family and --x")
    p = _params(args)
    v = derivative(Family(args.family), p, args.x, args.order)
    rec = {"family": args.family, "rho": p.rho, "beta": p.beta, "x": float(args.x), "order": args.order,
           "value": v.value, "truncation_bound": v.truncation_bound, "rounding_bound": v.rounding_bound,
           "terms_used": v.terms_used}
    _emit(args, to_json(rec) if args.format == "json" else records_to_csv([rec], list(rec)))
    return EXIT_OK


def cmd_zeros(args) -> int:
    if args.family is None:
        raise UsageError("zeros needs --family")
    p = _params(args)
    seq = first_zeros(Family(args.family), p, args.count)
    recs = [{"family": args.family, "rho": p.rho, "beta": p.beta, "index": i + 1, "zero": z,
             "bracket_lo": lo, "bracket_hi": hi}
            for i, (z, (lo, hi)) in enumerate(zip(seq.zeros, seq.brackets))]
    fields = ["family", "rho", "beta", "index", "zero", "bracket_lo", "bracket_hi"]
    _emit(args, to_json(recs) if args.format == "json" else records_to_csv(recs, fields))
    return EXIT_OK


def cmd_radius(args) -> int:
    if args.kind is None or args.norm is None:
        raise UsageError("radius needs --kind and --norm")
    q = RadiusQuery(Kind(args.kind), Norm(args.norm), _params(args), args.alpha)
    rec = _record(radius(q), extra=True)
    if args.format == "json":
        _emit(args, to_json(rec))
    else:
        _emit(args, records_to_csv([rec], RECORD_FIELDS))
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.theorem is None:
        raise UsageError("bounds needs --theorem")
    theorem = Theorem(args.theorem)
    info = THEOREMS[theorem]
    rec = _record(radius(RadiusQuery(info.kind, info.norm, _params(args), 0.0)), extra=args.format == "json")
    _emit(args, to_json(rec) if args.format == "json" else records_to_csv([rec], RECORD_FIELDS))
    return EXIT_OK


def cmd_table(args) -> int:
    rhos = parse_grid(args.rho_grid) if args.rho_grid else ([args.rho] if args.rho is not None else None)
    betas = parse_grid(args.beta_grid) if args.beta_grid else ([args.beta] if args.beta is not None else None)
    if rhos is None or betas is None:
        raise UsageError("table needs --rho-grid (or --rho) and --beta-grid (or --beta)")
    alphas = parse_grid(args.alpha_grid) if args.alpha_grid else [args.alpha]
    kinds = [Kind(args.kind)] if args.kind else list(Kind)
    norms = [Norm(args.norm)] if args.norm else list(Norm)
    recs = []
    for rho in rhos:
        for beta in betas:
            p = WrightParams(rho, beta)
            for alpha in alphas:
                for kind in kinds:
                    for norm in norms:
                        recs.append(_record(radius(RadiusQuery(kind, norm, p, alpha))))
    _emit(args, to_json(recs) if args.format == "json" else records_to_csv(recs, RECORD_FIELDS))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .checks import SUITES, run_suite

    suite = args.suite
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    nus = _parse_list(args.nu) if args.nu else [0.0, 1.0, 2.0]
    seed = DEFAULT_SEED if args.seed is None else args.seed
    lines = [f"seed {seed}"]
    failures = []
    results = run_suite(suite, seed, nus)
    for name, c in results:
        tag = "INFO" if c.informational else ("PASS" if c.ok else "FAIL")
        detail = f"  [{c.detail}]" if c.detail else ""
        lines.append(f"{tag} {name}: {c.name}  error={c.error:.3g} tol={c.tolerance:.3g}{detail}")
        if not c.ok and not c.informational:
            failures.append({"suite": name, "check": c.name, "error": c.error, "tolerance": c.tolerance,
                             "detail": c.detail})
    passed = sum(1 for _, c in results if c.ok and not c.informational)
    counted = sum(1 for _, c in results if not c.informational)
    lines.append(f"{passed}/{counted} checks passed")
    _emit(args, "\n".join(lines) + "\n")
    if failures:
        sys.stderr.write(to_json(failures))
        return EXIT_VERIFY
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval, "zeros": cmd_zeros, "radius": cmd_radius,
    "bounds": cmd_bounds, "table": cmd_table, "verify": cmd_verify,
}


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rho", type=float)
    common.add_argument("--beta", type=float)
    common.add_argument("--alpha", type=float, default=0.0)
    common.add_argument("--nu", help="comma-separated Bessel orders (verify)")
    common.add_argument("--kind", choices=[k.value for k in Kind])
    common.add_argument("--norm", choices=[n.value for n in Norm])
    common.add_argument("--family", choices=[f.value for f in Family])
    common.add_argument("--theorem", choices=[t.value for t in Theorem])
    common.add_argument("--count", type=int, default=5)
    common.add_argument("--x", type=float)
    common.add_argument("--order", type=int, choices=(0, 1, 2), default=0, help="derivative order (eval)")
    common.add_argument("--rho-grid")
    common.add_argument("--beta-grid")
    common.add_argument("--alpha-grid")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--seed", type=int)
    common.add_argument("--suite", default="all")

    parser = argparse.ArgumentParser(
        prog="wradii",
        description="Radii of starlikeness and convexity of normalized Wright functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "eval": "evaluate a function family (or a derivative) at a point",
        "zeros": "first positive zeros with certified brackets",
        "radius": "one radius of starlikeness or convexity",
        "bounds": "Euler-Rayleigh bounds of a theorem with the radius they bracket",
        "table": "radii and bounds over parameter grids",
        "verify": "run invariant suites; exit 1 on any failure",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)  # exits with 2 on bad flags
    try:
        if args.count < 1:
            raise UsageError("--count must be at least 1")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"wradii: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"wradii: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except WradiiError as exc:
        print(f"wradii: computation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        # WRADII_TOL and similar configuration problems
        print(f"wradii: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
