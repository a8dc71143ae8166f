"""Command-line front door. Batch-oriented, machine-readable output.

Exit codes: 0 answered affirmatively / success, 1 answered negatively
(refuted / none found), 2 unknown or budget exhausted, 3 usage or input
error. Everything is deterministic; there is no seed to misuse.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import acceptance, catalog
from .analyzers import (
    NotApplicable,
    antisymmetry_equivalence_check,
    check_protomodular_terms,
    closure_term_report,
    determination_report,
    malcev_search,
    nogo_certificate,
)
from .deduction import Budget, check_proof, close_quasi, entails_quasi, prove
from .dsl import (
    ParseError,
    parse_equation,
    parse_model,
    parse_proof,
    parse_term,
    parse_theory,
    print_model,
    print_proof,
    print_theory,
)
from .models import (
    check_galois,
    enumerate_models,
    find_countermodel,
    order_from_implication,
    order_from_term,
)
from .terms import Theory

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


def _load_theory(spec: str) -> Theory:
    path = Path(spec)
    if spec.endswith(".eqt") or path.is_file():
        try:
            return parse_theory(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise UsageError(f"cannot read theory file {spec!r}: {exc}") from exc
    try:
        return catalog.theory_by_code(spec).theory
    except KeyError as exc:
        raise UsageError(
            f"{spec!r} is neither a theory file nor a known catalog code"
        ) from exc


def _budget(args) -> Budget:
    seconds = args.max_seconds
    if seconds is None:
        seconds = float(os.environ.get("EQA_DEFAULT_BUDGET_SECONDS", 30.0))
    return Budget(max_nodes=args.max_nodes, max_term_size=args.max_term_size,
                  max_seconds=seconds)


def _add_budget_flags(sub) -> None:
    sub.add_argument("--max-nodes", type=int, default=200_000,
                     help="explored-equation cap (default 200000)")
    sub.add_argument("--max-term-size", type=int, default=25,
                     help="frontier term-size cap (default 25)")
    sub.add_argument("--max-seconds", type=float, default=None,
                     help="wall-clock cap (default 30 or EQA_DEFAULT_BUDGET_SECONDS)")


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def _cmd_prove(args) -> int:
    theory = _load_theory(args.theory)
    goal = parse_equation(args.goal, theory.signature)
    result = prove(theory, goal, _budget(args))
    if args.emit_proof and result.proof is not None:
        Path(args.emit_proof).write_text(print_proof(result.proof), encoding="utf-8")
    human = (f"proved ({len(result.proof.lines)} lines, {result.nodes_explored} nodes)"
             if result.proved else f"unknown: {result.reason} "
             f"({result.nodes_explored} nodes)")
    _emit(args, result.to_json(), f"{theory.name} |- {goal}: {human}")
    return EXIT_YES if result.proved else EXIT_UNKNOWN


def _cmd_quasi(args) -> int:
    theory = _load_theory(args.theory)
    premises = [parse_equation(p, theory.signature) for p in args.premise or []]
    conclusion = parse_equation(args.goal, theory.signature)
    result = entails_quasi(theory, premises, conclusion, _budget(args))
    if args.emit_proof and result.proof is not None:
        Path(args.emit_proof).write_text(print_proof(result.proof), encoding="utf-8")
    if args.emit_theory:
        extended, _ = close_quasi(theory, premises, conclusion)
        Path(args.emit_theory).write_text(print_theory(extended), encoding="utf-8")
    human = "proved" if result.proved else f"unknown: {result.reason}"
    _emit(args, result.to_json(),
          f"{theory.name}: premises entail {conclusion}: {human}")
    return EXIT_YES if result.proved else EXIT_UNKNOWN


def _cmd_refute(args) -> int:
    theory = _load_theory(args.theory)
    goal = parse_equation(args.goal, theory.signature)
    found = find_countermodel(theory, goal, args.max_size)
    if found is None:
        _emit(args, {"status": "none"},
              f"no countermodel to {goal} up to size {args.max_size}")
        return EXIT_NO
    model, witness = found
    payload = {
        "status": "refuted",
        "model": json.loads(json.dumps({
            "size": model.size,
            "tables": {sym: list(tab) for (sym, _), tab in
                       zip(model.signature.symbols, model.tables)},
        })),
        "witness": {str(k): v for k, v in witness.items()},
    }
    _emit(args, payload, f"countermodel of size {model.size}:\n{print_model(model)}"
          f"witness assignment: {witness}")
    return EXIT_YES


def _cmd_models(args) -> int:
    theory = _load_theory(args.theory)
    count = 0
    for m in enumerate_models(theory, args.size, iso_filter=args.iso):
        count += 1
        if args.jsonl:
            print(json.dumps({
                "size": m.size,
                "tables": {sym: list(tab) for (sym, _), tab in
                           zip(m.signature.symbols, m.tables)},
            }, sort_keys=True))
        else:
            print(print_model(m))
    if not args.jsonl:
        print(f"# {count} model(s)")
    return EXIT_YES if count else EXIT_NO


def _cmd_check_proof(args) -> int:
    theory = _load_theory(args.theory)
    try:
        text = Path(args.proof).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read proof file {args.proof!r}: {exc}") from exc
    proof = parse_proof(text, theory, allow_reserved=args.allow_reserved)
    result = check_proof(theory, proof)
    payload = {"valid": result.ok}
    if not result.ok:
        payload.update({"line": result.line, "reason": result.reason})
        _emit(args, payload, f"INVALID at line {result.line}: {result.reason}")
        return EXIT_NO
    _emit(args, payload, f"valid ({len(proof.lines)} lines)")
    return EXIT_YES


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for code in catalog.list_codes():
            print(code)
        print("# letter codes over {H,M,S,B,C,K,T} also accepted, e.g. MC, HBCK")
        return EXIT_YES
    named = catalog.theory_by_code(args.code)
    print(print_theory(named.theory), end="")
    return EXIT_YES


def _cmd_verify(args) -> int:
    results = acceptance.run_suite(args.suite)
    if args.json:
        print(json.dumps([
            {"criterion": r.number, "name": r.name, "passed": r.passed,
             "detail": r.detail, "seconds": round(r.seconds, 2)}
            for r in results
        ], indent=2))
    return EXIT_YES if all(r.passed for r in results) else EXIT_NO


def _verdict_exit(verdicts: list[str]) -> int:
    if any(v == "refuted" for v in verdicts):
        return EXIT_NO
    if any(v == "unknown" for v in verdicts):
        return EXIT_UNKNOWN
    return EXIT_YES


def _cmd_analyze(args) -> int:
    theory = _load_theory(args.theory) if getattr(args, "theory", None) else None

    if args.analyzer == "malcev":
        result = malcev_search(theory, max_depth=args.max_depth,
                               model_cap=args.model_cap, b=_budget(args))
        reason = {
            "impossible_balanced": "balanced",
            "impossible_model": "model clone has no Malcev operation",
        }.get(result.kind, result.kind)
        human = {
            "found": f"Malcev term found: {result.term}",
            "exhausted": f"exhausted at depth {result.depth}",
        }.get(result.kind, f"impossible: {reason}")
        _emit(args, result.to_json(), human)
        if result.kind == "found":
            return EXIT_YES
        if result.kind == "exhausted":
            return EXIT_UNKNOWN
        return EXIT_NO

    if args.analyzer == "protomodular":
        theta = parse_term(args.theta, theory.signature)
        thetas = [parse_term(t, theory.signature) for t in args.thetai or []]
        constants = [parse_term(c, theory.signature) for c in args.constant or []]
        report = check_protomodular_terms(theory, theta, thetas, constants, _budget(args))
        human = "\n".join(f"{name}: {eq}: {v.status}" for name, eq, v in report.entries)
        _emit(args, report.to_json(), human)
        return _verdict_exit([v.status for _, _, v in report.entries])

    if args.analyzer == "closure":
        term = parse_term(args.term, theory.signature)
        report = closure_term_report(theory, term, _budget(args))
        human = "\n".join(
            f"{name}: {report.verdicts[name].status}"
            for name in report.verdicts
        ) + (f"\npreorder_term={report.preorder_term} order_term={report.order_term} "
             f"relative_closure={report.relative_closure} "
             f"weak_relative_closure={report.weak_relative_closure}")
        _emit(args, report.to_json(), human)
        return _verdict_exit([v.status for v in report.verdicts.values()])

    if args.analyzer == "determination":
        term = parse_term(args.term, theory.signature)
        pred = parse_equation(args.pred, theory.signature)
        report = determination_report(theory, term, pred, _budget(args))
        human = (f"semi={report.semi.status} determined={report.determined.status} "
                 f"strong={report.strong.status}")
        _emit(args, report.to_json(), human)
        return _verdict_exit([report.semi.status, report.determined.status,
                              report.strong.status])

    model = parse_model(Path(args.model).read_text(encoding="utf-8"),
                        theory.signature if theory else None)

    if args.analyzer == "nogo":
        if args.order_term:
            order = order_from_term(model, parse_term(args.order_term, model.signature))
        else:
            order = order_from_implication(model)
        result = nogo_certificate(theory, model, order, allow_preorder=args.preorder)
        if isinstance(result, NotApplicable):
            _emit(args, result.to_json(), f"not applicable: {result.reason}")
            return EXIT_NO
        _emit(args, result.to_json(), f"{result.kind} certificate: {result.conclusion}")
        return EXIT_YES

    if args.analyzer == "galois":
        ok, witness = check_galois(model)
        payload = {"galois": ok}
        if not ok:
            payload["witness"] = list(witness)
        _emit(args, payload, "Galois connection holds" if ok
              else f"fails at (x,y,z)={witness}")
        return EXIT_YES if ok else EXIT_NO

    if args.analyzer == "antisym":
        term = parse_term(args.term, model.signature)
        result = antisymmetry_equivalence_check(model, term)
        payload = {"antisym": result.antisym, "x_eq_xy": result.x_eq_xy,
                   "cornish": result.cornish}
        _emit(args, payload,
              f"antisym={result.antisym} X=Xy holds: {result.x_eq_xy} "
              f"cornish={result.cornish}")
        return EXIT_YES

    raise UsageError(f"unknown analyzer {args.analyzer!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqa",
        description="Equational-logic toolkit: proving, finite models, and "
                    "Malcev/protomodularity analysis.",
    )
    parser.add_argument("--json", action="store_true", help="JSON output")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker cap (reserved; execution is sequential)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="prove an equation from a theory")
    p.add_argument("-t", "--theory", required=True, help="theory file or catalog code")
    p.add_argument("-g", "--goal", required=True, help='equation, e.g. "(x * e) = x"')
    p.add_argument("--emit-proof", help="write the found proof to a .eqp file")
    _add_budget_flags(p)
    p.set_defaults(func=_cmd_prove)

    p = sub.add_parser("quasi", help="prove a quasi-equation via fresh constants")
    p.add_argument("-t", "--theory", required=True)
    p.add_argument("--premise", action="append", help="premise equation (repeatable)")
    p.add_argument("-g", "--goal", required=True)
    p.add_argument("--emit-proof")
    p.add_argument("--emit-theory", help="write the extended theory to a .eqt file")
    _add_budget_flags(p)
    p.set_defaults(func=_cmd_quasi)

    p = sub.add_parser("refute", help="search for a countermodel")
    p.add_argument("-t", "--theory", required=True)
    p.add_argument("-g", "--goal", required=True)
    p.add_argument("--max-size", type=int, default=3)
    p.set_defaults(func=_cmd_refute)

    p = sub.add_parser("models", help="enumerate finite models")
    p.add_argument("-t", "--theory", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--iso", action="store_true",
                   help="one representative per isomorphism class")
    p.add_argument("--jsonl", action="store_true", help="one JSON object per line")
    p.set_defaults(func=_cmd_models)

    p = sub.add_parser("check-proof", help="validate a .eqp proof script")
    p.add_argument("-t", "--theory", required=True)
    p.add_argument("-p", "--proof", required=True)
    p.add_argument("--allow-reserved", action="store_true",
                   help="accept @-prefixed names (machine-emitted files)")
    p.set_defaults(func=_cmd_check_proof)

    p = sub.add_parser("analyze", help="run an analyzer")
    asub = p.add_subparsers(dest="analyzer", required=True)

    a = asub.add_parser("malcev", help="search for a Malcev term or a no-go certificate")
    a.add_argument("-t", "--theory", required=True)
    a.add_argument("--max-depth", type=int, default=3)
    a.add_argument("--model-cap", type=int, default=2)
    _add_budget_flags(a)
    a.set_defaults(func=_cmd_analyze)

    a = asub.add_parser("protomodular", help="verify protomodularity equations")
    a.add_argument("-t", "--theory", required=True)
    a.add_argument("--theta", required=True)
    a.add_argument("--thetai", action="append")
    a.add_argument("--constant", action="append")
    _add_budget_flags(a)
    a.set_defaults(func=_cmd_analyze)

    a = asub.add_parser("closure", help="classify a closure term")
    a.add_argument("-t", "--theory", required=True)
    a.add_argument("--term", required=True)
    _add_budget_flags(a)
    a.set_defaults(func=_cmd_analyze)

    a = asub.add_parser("determination", help="semi/strong determination report")
    a.add_argument("-t", "--theory", required=True)
    a.add_argument("--term", required=True)
    a.add_argument("--pred", required=True, help='order equation, e.g. "(x -> y) = e"')
    _add_budget_flags(a)
    a.set_defaults(func=_cmd_analyze)

    a = asub.add_parser("nogo", help="no-go certificate for a model with an order")
    a.add_argument("-t", "--theory", required=True)
    a.add_argument("-m", "--model", required=True)
    a.add_argument("--order-term", help="binary term; a <= b iff term(a,b) = b "
                                        "(default: derive from -> and e)")
    a.add_argument("--preorder", action="store_true",
                   help="relax anti-symmetry of the order")
    a.set_defaults(func=_cmd_analyze)

    a = asub.add_parser("galois", help="check x*y <= z iff y <= x->z on a model")
    a.add_argument("-m", "--model", required=True)
    a.add_argument("-t", "--theory")
    a.set_defaults(func=_cmd_analyze)

    a = asub.add_parser("antisym", help="anti-symmetry equationalization on a model")
    a.add_argument("-m", "--model", required=True)
    a.add_argument("-t", "--theory")
    a.add_argument("--term", required=True)
    a.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("catalog", help="list or show built-in theories")
    csub = p.add_subparsers(dest="action", required=True)
    c = csub.add_parser("list")
    c.set_defaults(func=_cmd_catalog)
    c = csub.add_parser("show")
    c.add_argument("code")
    c.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("verify-paper", help="run the built-in verification suite")
    p.add_argument("--suite", choices=sorted(acceptance.SUITES), default="all")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, ParseError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
