"""Deterministic command-line front end with JSON I/O.

Exit codes follow one contract everywhere: 0 for success (or a true
answer), 1 for a false answer, 2 for malformed input or a propagated
module error.  All JSON output is sorted and indented, so identical
configurations print byte-identical documents.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from fractions import Fraction
from typing import Optional

from .classify import (
    CensusMember,
    EnumerationReport,
    classify,
    enumerate_quiddities,
    irreducible_census,
    parity_audit,
    transfer_theta,
)
from .core import QuiddityTuple, is_quiddity
from .numfield import (
    BoxC,
    NumberField,
    field_from_descriptor,
    field_make,
    field_to_descriptor,
)
from .polycrit import (
    eisenstein,
    irreducible_over_Q,
    osada,
    rouche_dominant_count,
    schur_cohn_count,
)
from .polynomials import QPoly
from .verify import SUITES, run_suite


def _emit(data) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))


def _diagnostic(exc: BaseException) -> int:
    doc = {"error": type(exc).__name__, "message": str(exc)}
    print(json.dumps(doc, sort_keys=True, indent=2), file=sys.stderr)
    return 2


def _parse_rats(text: str) -> list[Fraction]:
    # accepts integers, fractions like -5/2, and decimal strings
    return [Fraction(tok.strip()) for tok in text.split(",") if tok.strip()]


def _field_from_args(args) -> NumberField:
    if getattr(args, "int_field", False):
        return field_make(QPoly((-1, 1)))
    if not args.min_poly:
        raise ValueError("need --min-poly (or --int where supported)")
    coeffs = _parse_rats(args.min_poly)
    hint: Optional[BoxC] = None
    if args.root_hint:
        parts = _parse_rats(args.root_hint)
        if len(parts) == 2:
            hint = BoxC.make(parts[0], parts[1], 0, 0)
        elif len(parts) == 4:
            hint = BoxC.make(*parts)
        else:
            raise ValueError("--root-hint takes 2 or 4 comma-separated numbers")
    return field_make(
        QPoly(coeffs),
        root_hint=hint,
        assume_irreducible=getattr(args, "assume_irreducible", False),
    )


def _load_tuple(args) -> QuiddityTuple:
    if args.tuple_file:
        with open(args.tuple_file) as fh:
            data = json.load(fh)
    else:
        data = json.loads(args.tuple)
    return QuiddityTuple.from_json(data)


# ---------------------------------------------------------------------------
# Enumeration cache: JSON-lines files named by a config hash.
# ---------------------------------------------------------------------------


def _cache_config(op: str, field: NumberField, gen, n_max: int, k_bound: int) -> dict:
    from .numfield import coords_to_json

    return {
        "op": op,
        "field": field_to_descriptor(field),
        "generator": coords_to_json(gen),
        "n_max": n_max,
        "k_bound": k_bound,
    }


def _cache_path(cache_dir: str, config: dict) -> str:
    digest = hashlib.sha256(
        json.dumps(config, sort_keys=True).encode()
    ).hexdigest()
    return os.path.join(cache_dir, f"{digest}.jsonl")


def _cache_load(path: str, config: dict) -> Optional[EnumerationReport]:
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
        if not lines or json.loads(lines[0]) != config:
            return None
        members = tuple(CensusMember.from_json(json.loads(ln)) for ln in lines[1:])
    except (OSError, ValueError, KeyError):
        return None
    counts: dict[int, int] = {}
    for m in members:
        counts[m.size] = counts.get(m.size, 0) + 1
    irreducible = None
    if config["op"] == "census":
        irreducible = tuple(m for m in members if m.reducible is False)
    return EnumerationReport(
        field_descriptor=config["field"],
        generator_coords=config["generator"],
        n_max=config["n_max"],
        k_bound=config["k_bound"],
        members=members,
        counts=counts,
        elapsed=0.0,
        irreducible=irreducible,
    )


def _cache_store(path: str, config: dict, report: EnumerationReport) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    lines = [json.dumps(config, sort_keys=True)]
    lines.extend(json.dumps(m.to_json(), sort_keys=True) for m in report.members)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _enumerate_with_cache(op: str, args) -> EnumerationReport:
    field = _field_from_args(args)
    gen = field.generator()
    config = _cache_config(op, field, gen, args.nmax, args.kbound)
    path = None
    if args.cache_dir:
        path = _cache_path(args.cache_dir, config)
        cached = _cache_load(path, config)
        if cached is not None:
            return cached
    report = enumerate_quiddities(field, gen, args.nmax, args.kbound)
    if op == "census":
        report = irreducible_census(report)
    if path is not None:
        _cache_store(path, config, report)
    return report


# ---------------------------------------------------------------------------
# Subcommand handlers.
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    t = _load_tuple(args)
    eps = is_quiddity(t)
    _emit({"is_quiddity": eps is not None, "epsilon": eps, "n": t.n})
    return 0 if eps is not None else 1


def cmd_verify(args) -> int:
    try:
        results = run_suite(args.suite)
    except KeyError:
        raise ValueError(
            f"unknown suite {args.suite!r}; available: all, "
            + ", ".join(sorted(SUITES))
        )
    if args.json:
        _emit(
            [
                {
                    "suite": r.suite,
                    "claim": r.claim,
                    "passed": r.passed,
                    "detail": r.detail,
                }
                for r in results
            ]
        )
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


def cmd_classify(args) -> int:
    if args.transcendental:
        outcome = classify(None, transcendental=True)
    else:
        field = _field_from_args(args)
        outcome = classify(field, depth_budget=args.precision)
    _emit(outcome.to_json())
    return 0


def cmd_enumerate(args) -> int:
    _emit(_enumerate_with_cache("enumerate", args).to_json())
    return 0


def cmd_census(args) -> int:
    _emit(_enumerate_with_cache("census", args).to_json())
    return 0


def cmd_transfer(args) -> int:
    t = _load_tuple(args)
    image = transfer_theta(t, args.target_index)
    _emit(
        {
            "tuple": image.to_json(),
            "epsilon": is_quiddity(image),
            "target_index": args.target_index,
        }
    )
    return 0


def cmd_parity(args) -> int:
    field = _field_from_args(args)
    _emit(parity_audit(field, field.generator(), args.nmax, args.kbound).to_json())
    return 0


def cmd_polycrit(args) -> int:
    p = QPoly(_parse_rats(args.poly))
    verdict = irreducible_over_Q(p)
    doc = {
        "poly": [str(c) for c in p.coeffs],
        "irreducible": {
            "status": verdict.status,
            "criterion": verdict.criterion,
            "prime": verdict.prime,
        },
        "eisenstein_prime": eisenstein(p),
        "osada_prime": osada(p),
    }
    if args.radius is not None:
        got = schur_cohn_count(p, Fraction(args.radius))
        doc["disk_count"] = {
            "radius": str(got.radius),
            "count": got.count,
            "boundary_clear": got.boundary_clear,
        }
    if args.dominant is not None:
        radius = Fraction(args.radius) if args.radius is not None else Fraction(2)
        got = rouche_dominant_count(p, args.dominant, radius)
        doc["dominant_term_count"] = (
            None
            if got is None
            else {"radius": str(got.radius), "count": got.count}
        )
    _emit(doc)
    return 0


# ---------------------------------------------------------------------------
# Parser assembly.
# ---------------------------------------------------------------------------


def _add_field_options(sub, with_int_shortcut: bool = False) -> None:
    sub.add_argument(
        "--min-poly",
        help="monic-normalizable minimal polynomial, comma-separated, constant first",
    )
    sub.add_argument(
        "--root-hint",
        help="2 numbers for a real interval or 4 for a complex box",
    )
    sub.add_argument(
        "--assume-irreducible",
        action="store_true",
        help="accept a polynomial the criteria pipeline cannot certify",
    )
    if with_int_shortcut:
        sub.add_argument(
            "--int",
            dest="int_field",
            action="store_true",
            help="shortcut for the integer generator 1",
        )


def _add_tuple_options(sub) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--tuple", help="tuple document as inline JSON")
    group.add_argument("--tuple-file", help="path to a tuple document")


def _add_bounds(sub) -> None:
    sub.add_argument("--nmax", type=int, required=True, help="largest size")
    sub.add_argument(
        "--kbound", type=int, required=True, help="largest |multiplier|"
    )
    sub.add_argument("--cache-dir", help="JSON-lines cache directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiddity",
        description="exact arithmetic for matrix-word identities over <w>",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("check", help="is the tuple document a solution?")
    _add_tuple_options(p)
    p.set_defaults(handler=cmd_check)

    p = subs.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", nargs="?", default="all")
    p.add_argument("--json", action="store_true", help="machine-readable rows")
    p.set_defaults(handler=cmd_verify)

    p = subs.add_parser("classify", help="place a generator in a family")
    _add_field_options(p)
    p.add_argument(
        "--transcendental",
        action="store_true",
        help="declare the generator transcendental instead of giving a polynomial",
    )
    p.add_argument(
        "--precision",
        type=int,
        default=64,
        help="refinement depth budget for interval decisions",
    )
    p.set_defaults(handler=cmd_classify)

    p = subs.add_parser("enumerate", help="canonical solutions within bounds")
    _add_field_options(p, with_int_shortcut=True)
    _add_bounds(p)
    p.set_defaults(handler=cmd_enumerate)

    p = subs.add_parser("census", help="enumerate plus the reducibility split")
    _add_field_options(p, with_int_shortcut=True)
    _add_bounds(p)
    p.set_defaults(handler=cmd_census)

    p = subs.add_parser("transfer", help="carry a tuple to a conjugate root")
    _add_tuple_options(p)
    p.add_argument("--target-index", type=int, required=True)
    p.set_defaults(handler=cmd_transfer)

    p = subs.add_parser("parity", help="odd/even size tally within bounds")
    _add_field_options(p)
    _add_bounds(p)
    p.set_defaults(handler=cmd_parity)

    p = subs.add_parser("polycrit", help="irreducibility and disk-count report")
    p.add_argument("--poly", required=True, help="comma-separated, constant first")
    p.add_argument("--radius", help="disk radius for the exact count")
    p.add_argument(
        "--dominant", type=int, help="term index for the dominant-term bound"
    )
    p.set_defaults(handler=cmd_polycrit)

    return parser


# option values such as coefficient lists routinely start with a minus
# sign; fusing `--flag value` into `--flag=value` keeps argparse from
# reading them as option strings
_VALUE_FLAGS = (
    "--min-poly",
    "--root-hint",
    "--poly",
    "--tuple",
    "--tuple-file",
    "--radius",
)


def _fuse_flag_values(argv: list[str]) -> list[str]:
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_fuse_flag_values(list(sys.argv[1:] if argv is None else argv)))
    try:
        return args.handler(args)
    except BrokenPipeError:
        return 0
    except Exception as exc:  # structured diagnostic, exit 2
        return _diagnostic(exc)


if __name__ == "__main__":
    sys.exit(main())
