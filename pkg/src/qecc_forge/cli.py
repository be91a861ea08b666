"""Command-line interface: ``qecc-forge <subcommand> [options]``.

Every subcommand reads JSON from ``--input`` (default stdin) and writes JSON
to ``--output`` (default stdout), so commands compose with pipes::

    qecc-forge family rains_5_6_2 | qecc-forge verify --d 2
    qecc-forge family laflamme_5_2_3 | qecc-forge build-projector | qecc-forge distance-oracle --d 3

Exit status: 0 success, 1 verification failure (report on stdout), 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import codebook
from .boolfn import ANFParseError, BooleanFunction
from .exactmat import ExactMatrix
from .oqec import build_oqec, certify_oqec
from .qecc import (
    CodeCandidate,
    CodeError,
    build_projector,
    distance_oracle,
    verify,
)
from .search import F_SOURCES, MODES, SearchRejected, SearchSpec, run_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def default_jobs() -> int:
    env = os.environ.get("QECC_FORGE_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"QECC_FORGE_JOBS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


# -- I/O helpers -------------------------------------------------------------------


def _read_text(args) -> str:
    if args.input and args.input != "-":
        try:
            with open(args.input) as fh:
                return fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return sys.stdin.read()


def _read_json(args) -> Any:
    text = _read_text(args)
    if not text.strip():
        raise UsageError("no input: expected a JSON document on stdin or via --input")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not valid JSON: {exc}") from None


def _write(args, payload: Any, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        out = text
    else:
        out = json.dumps(payload, indent=2)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        sys.stdout.write(out + "\n")


def _read_function(args) -> BooleanFunction:
    if getattr(args, "anf", None) is not None:
        if args.m is None:
            raise UsageError("--anf needs --m")
        return BooleanFunction.from_anf(args.m, args.anf)
    if getattr(args, "hex", None) is not None:
        if args.m is None:
            raise UsageError("--hex needs --m")
        return BooleanFunction.from_hex(args.m, args.hex)
    data = _read_json(args)
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    if "support" in data:
        return BooleanFunction.from_support(int(data["m"]), data["support"])
    if "truth_hex" in data:
        return BooleanFunction.from_hex(int(data["m"]), data["truth_hex"])
    data = data.get("bundle", data)
    if "f_support" in data:
        return BooleanFunction.from_support(int(data["k"]), data["f_support"])
    if "f_anf" in data:
        return BooleanFunction.from_anf(int(data["k"]), data["f_anf"])
    raise UsageError("input has no Boolean function (expected 'support' with 'm', or a code bundle)")


def _read_candidate(args) -> CodeCandidate:
    data = _read_json(args)
    if not isinstance(data, dict):
        raise UsageError("expected a code bundle JSON object")
    if "bundle" in data and isinstance(data["bundle"], dict):
        data = data["bundle"]
    cand = CodeCandidate.from_bundle(data)
    if getattr(args, "d", None) is not None:
        cand = cand.with_distance(args.d)
    return cand


# -- subcommands --------------------------------------------------------------------


def cmd_cset(args) -> int:
    f = _read_function(args)
    cs = sorted(f.cset())
    _write(args, {"m": f.m, "weight": f.weight, "cset": cs}, "{" + ", ".join(map(str, cs)) + "}")
    return EXIT_OK


def cmd_autocorr(args) -> int:
    f = _read_function(args)
    r = [int(x) for x in f.autocorrelation()]
    _write(args, {"m": f.m, "weight": f.weight, "r": r}, "[" + ", ".join(map(str, r)) + "]")
    return EXIT_OK


def cmd_anf(args) -> int:
    f = _read_function(args)
    mono, variables = f.is_monomial()
    payload = {
        "m": f.m,
        "anf": f.anf(),
        "expression": f.anf_string(),
        "monomial": mono,
        "variables": variables,
        "support": list(f.support),
        "truth_hex": f.to_hex(),
    }
    _write(args, payload, f.anf_string())
    return EXIT_OK


def cmd_verify(args) -> int:
    cand = _read_candidate(args)
    result = verify(cand, all_failures=args.all_failures)
    if result.ok:
        payload = result.to_json(full_transcript=args.transcript)
        text = f"(({cand.k},{cand.M},{cand.d})) verified; {len(result.transcript)} errors checked"
        if result.stabilizers is not None:
            text += "; stabilizers " + " ".join(result.stabilizers)
        _write(args, payload, text)
        return EXIT_OK
    _write(args, result.to_json(), f"verification failed: {result.reason}")
    return EXIT_FAIL


def cmd_build_projector(args) -> int:
    cand = _read_candidate(args)
    try:
        P = build_projector(cand, check=not args.unchecked)
    except CodeError as exc:
        _write(args, {"verified": False, "reason": str(exc)}, str(exc))
        return EXIT_FAIL
    payload = P.to_json()
    payload["k"] = cand.k
    payload["bundle"] = cand.to_bundle()
    _write(args, payload, P.to_text())
    return EXIT_OK


def _dmax(args, default_d: int | None) -> int:
    if args.dmax is not None:
        return args.dmax
    d = args.d if args.d is not None else default_d
    if d is None:
        raise UsageError("give --d or --dmax")
    return d - 1


def cmd_distance_oracle(args) -> int:
    data = _read_json(args)
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    if "entries" in data:
        P = ExactMatrix.from_json(data)
        k = P.dim.bit_length() - 1
        if 1 << k != P.dim:
            raise UsageError(f"matrix dimension {P.dim} is not a power of two")
        default_d = data.get("bundle", {}).get("d")
    else:
        cand = CodeCandidate.from_bundle(data.get("bundle", data))
        P = build_projector(cand, check=False)
        k, default_d = cand.k, cand.d
    dmax = _dmax(args, default_d)
    if not 0 <= dmax <= k:
        raise UsageError(f"weight bound {dmax} out of range for k={k}")
    res = distance_oracle(P, k, dmax, jobs=args.jobs)
    payload = {"k": k, "dmax": dmax, **res.to_json()}
    text = f"{'pass' if res.passed else 'FAIL'}: {res.checked} errors checked"
    if not res.passed:
        text += f", PEP != 0 for {payload['violation']}"
    _write(args, payload, text)
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_family(args) -> int:
    cand = codebook.make(args.name, args.m)
    _write(args, cand.to_bundle(), None)
    return EXIT_OK


def cmd_extend(args) -> int:
    cand = _read_candidate(args)
    _write(args, codebook.extend_k2(cand).to_bundle(), None)
    return EXIT_OK


def cmd_shrink(args) -> int:
    cand = _read_candidate(args)
    drop = args.drop if args.drop is not None else cand.f.support[-1]
    _write(args, codebook.shrink_M(cand, drop).to_bundle(), None)
    return EXIT_OK


def cmd_oqec(args) -> int:
    cand = _read_candidate(args)
    s = args.s
    if s is None:
        mono, variables = cand.f.is_monomial()
        k = cand.k
        if not mono or variables != list(range(k - len(variables) + 1, k + 1)):
            raise UsageError("f is not of the form v_k ... v_{s+1}; pass --s explicitly")
        s = k - len(variables)
    code = build_oqec(cand.k, s, args.t, cand.d, cand.A)
    report = certify_oqec(code)
    payload = code.to_json(report)
    text = (
        f"(({code.k},{code.logical_dim},{code.gauge_dim},{code.d})) "
        f"{'certified' if report.ok else 'FAILED'}\n"
        f"S: {' '.join(payload['S'])}\nG: {' '.join(payload['G'])}\nL: {' '.join(payload['L'])}"
    )
    _write(args, payload, text)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_search(args) -> int:
    f = None
    source = args.f_source
    if args.f is not None:
        f = _function_arg(args.f, args.k)
        source = "given"
    spec = SearchSpec(
        k=args.k, M=args.M, d=args.d, mode=args.mode, budget=args.budget,
        f_source=source, f=f, seed=args.seed, restarts=args.restarts, jobs=args.jobs,
    )
    outcome = run_search(spec)
    out = sys.stdout if not args.output or args.output == "-" else open(args.output, "w")
    try:
        for cert in outcome.certificates:
            out.write(json.dumps(cert.to_json()) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    summary = {
        "status": outcome.status,
        "certificates": len(outcome.certificates),
        "nodes": outcome.nodes,
        "functions_tried": outcome.functions_tried,
    }
    sys.stderr.write(json.dumps(summary) + "\n")
    return EXIT_OK if outcome.certificates else EXIT_FAIL


def _function_arg(value: str, k: int) -> BooleanFunction:
    if os.path.exists(value):
        with open(value) as fh:
            data = json.load(fh)
        if "support" in data:
            return BooleanFunction.from_support(int(data["m"]), data["support"])
        return CodeCandidate.from_bundle(data.get("bundle", data)).f
    return BooleanFunction.from_anf(k, value)


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qecc-forge",
        description="Construct and exactly verify quantum codes from Boolean functions.",
        epilog=(
            "Truth vectors in hex: the leftmost hex digit holds y_{2^m-1}, i.e. the "
            "string is the integer whose bit v is f(v). Decimal index v = sum v_i 2^(i-1)."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="input file (default: stdin)")
    common.add_argument("--output", "-o", help="output file (default: stdout)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=None, help="worker count (env QECC_FORGE_JOBS)")

    fn = argparse.ArgumentParser(add_help=False)
    fn.add_argument("--anf", help="Boolean expression, e.g. 'v1*v2*~v3'")
    fn.add_argument("--hex", help="truth vector in hex")
    fn.add_argument("--m", type=int, help="variable count for --anf/--hex")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cset", parents=[common, fn], help="complementary set of a function")
    p.set_defaults(func=cmd_cset)
    p = sub.add_parser("autocorr", parents=[common, fn], help="autocorrelation vector")
    p.set_defaults(func=cmd_autocorr)
    p = sub.add_parser("anf", parents=[common, fn], help="algebraic normal form")
    p.set_defaults(func=cmd_anf)

    p = sub.add_parser("verify", parents=[common], help="check a code bundle")
    p.add_argument("--d", type=int, help="override the bundle's target distance")
    p.add_argument("--all-failures", action="store_true")
    p.add_argument("--transcript", action="store_true", help="include every transcript line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("build-projector", parents=[common], help="exact projector of a bundle")
    p.add_argument("--d", type=int)
    p.add_argument("--unchecked", action="store_true", help="skip verification")
    p.set_defaults(func=cmd_build_projector)

    p = sub.add_parser("distance-oracle", parents=[common], help="dense PEP = 0 check")
    p.add_argument("--d", type=int, help="target distance (checks weights <= d-1)")
    p.add_argument("--dmax", type=int, help="largest error weight to check")
    p.set_defaults(func=cmd_distance_oracle)

    p = sub.add_parser("family", parents=[common], help="emit a code bundle from the codebook")
    p.add_argument("name", choices=codebook.FAMILIES)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("extend", parents=[common], help="((k,M,2)) -> ((k+2,4M,2))")
    p.set_defaults(func=cmd_extend, d=None)
    p = sub.add_parser("shrink", parents=[common], help="((k,M,2)) -> ((k,M-1,2))")
    p.add_argument("--drop", type=int, help="support index to remove (default: largest)")
    p.set_defaults(func=cmd_shrink, d=None)

    p = sub.add_parser("oqec", parents=[common], help="operator code from a monomial bundle")
    p.add_argument("--t", type=int, required=True, help="number of logical qubits")
    p.add_argument("--s", type=int, help="f = v_k ... v_{s+1} (inferred when omitted)")
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_oqec)

    p = sub.add_parser("search", parents=[common], help="search for ((k,M,d)) certificates")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default="first")
    p.add_argument("--budget", type=int, default=10**6, help="backtrack node limit")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--f", help="code bundle / support JSON file, or an ANF expression")
    p.add_argument("--f-source", choices=F_SOURCES, default="monomials")
    p.add_argument("--restarts", type=int, default=100, help="functions tried in random mode")
    p.set_defaults(func=cmd_search)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        if args.jobs is None:
            args.jobs = default_jobs()
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except SearchRejected as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ANFParseError as exc:
        sys.stderr.write(f"error: cannot parse expression: {exc}\n")
        return EXIT_USAGE
    except (UsageError, CodeError, ValueError, KeyError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
