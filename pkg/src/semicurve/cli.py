"""Command-line front end.

Subcommands: validate, params, gens, inideal, gb-verify, colon, rr,
probe, survey.  Instances are given as `m0,...,mp;mn` (e.g. 5,8,11;7);
rr and probe also accept a monomial ideal as inline JSON or a path to a
JSON file of the form {"arity": k, "gens": [[...], ...]}.

Exit codes: 0 success; 1 user or validation error; 2 internal assertion
failure; 3 a verified mismatch or NOT_CLOSED verdict.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from semicurve.curve import closed_form_table, initial_closed_form, patil_singh_generators
from semicurve.errors import InternalCheckError, UserInputError
from semicurve.groebner import Polynomial, gb_verify, leading_ideal
from semicurve.ideals import MonomialIdeal
from semicurve.monomials import format_monomial
from semicurve.ratliff_rush import (
    PowerCache,
    Verdict,
    combined_report,
    reduce_variables,
    socle_probe,
)
from semicurve.semigroup import CurveInstance, derive, validate
from semicurve.survey import (
    Bounds,
    Format,
    MatchStatus,
    compare_selector,
    evaluate_guards,
    COLON_SELECTORS,
    emit,
    run_instance,
    survey,
)

DEPTH_ENV = "SEMICURVE_RR_DEPTH"


def default_depth():
    raw = os.environ.get(DEPTH_ENV)
    if raw is None:
        return 4
    try:
        depth = int(raw)
    except ValueError:
        raise UserInputError(f"{DEPTH_ENV} must be an integer, got {raw!r}") from None
    if depth < 1:
        raise UserInputError(f"{DEPTH_ENV} must be at least 1, got {depth}")
    return depth


def _parse_instance(text):
    try:
        return CurveInstance.parse(text)
    except ValueError as exc:
        raise UserInputError(str(exc)) from None


def _validated(text):
    curve = _parse_instance(text)
    report = validate(curve.arith, curve.extra)
    if not report.ok:
        raise UserInputError(report.first)
    return curve


def _parse_ideal(text):
    """(ideal, note) from inline JSON, a JSON file path, or an instance
    (its computed initial ideal, unused variables dropped)."""
    if ";" in text:
        curve = _validated(text)
        dp = derive(curve)
        reduced, dropped = reduce_variables(initial_closed_form(dp, curve))
        note = None
        if dropped:
            kept = [i for i in range(curve.arity) if i not in dropped]
            renames = ", ".join(f"x{new} = x{old}" for new, old in enumerate(kept))
            note = (f"initial ideal of {curve.text()} with unused variables "
                    f"dropped ({renames})")
        return reduced, note
    if text.lstrip().startswith("{"):
        raw = text
    else:
        try:
            with open(text, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise UserInputError(f"cannot read ideal file {text!r}: {exc}") from None
    try:
        ideal = MonomialIdeal.from_json(raw)
    except (ValueError, KeyError, TypeError) as exc:
        raise UserInputError(f"bad ideal JSON: {exc}") from None
    return ideal, None


def _write(args, text):
    data = text if text.endswith("\n") else text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data)


def _emit_json(args, payload):
    _write(args, json.dumps(payload, sort_keys=True, separators=(",", ":")))


def cmd_validate(args):
    curve = _parse_instance(args.instance)
    report = validate(curve.arith, curve.extra)
    if args.json:
        _emit_json(args, {"instance": curve.text(), "ok": report.ok,
                          "failures": list(report.failures)})
    elif report.ok:
        _write(args, f"{curve.text()}: valid")
    else:
        _write(args, "\n".join(f"{curve.text()}: {f}" for f in report.failures))
    return 0 if report.ok else 1


def cmd_params(args):
    curve = _validated(args.instance)
    dp = derive(curve)
    if args.json:
        _emit_json(args, {"instance": curve.text(), **dp.to_dict()})
    else:
        d = dp.to_dict()
        keys = ("u", "v", "w", "z", "lam", "mu", "q", "r", "q_z", "r_z", "eps", "case")
        _write(args, "\n".join(f"{k} = {d[k]}" for k in keys))
    return 0


def cmd_gens(args):
    curve = _validated(args.instance)
    gens = patil_singh_generators(derive(curve), curve)
    if args.json:
        _emit_json(args, {"instance": curve.text(), "arity": curve.arity,
                          "generators": [[list(b.lead), list(b.tail)] for b in gens]})
    else:
        _write(args, "\n".join(b.text() for b in gens))
    return 0


def cmd_inideal(args):
    curve = _validated(args.instance)
    dp = derive(curve)
    closed = initial_closed_form(dp, curve)
    polys = [Polynomial.from_binomial(b) for b in patil_singh_generators(dp, curve)]
    computed = leading_ideal(polys, curve.order())
    match = computed == closed
    if args.json:
        payload = json.loads(computed.to_json())
        payload["closed_form_match"] = match
        _emit_json(args, payload)
    else:
        lines = [", ".join(format_monomial(m) for m in computed.gens)]
        if not match:
            lines.append("closed form disagrees: "
                         + ", ".join(format_monomial(m) for m in closed.gens))
        _write(args, "\n".join(lines))
    return 0 if match else 3


def cmd_gb_verify(args):
    curve = _validated(args.instance)
    dp = derive(curve)
    polys = [Polynomial.from_binomial(b) for b in patil_singh_generators(dp, curve)]
    report = gb_verify(polys, curve.order(), max_terms=2)
    if args.json:
        payload = {"instance": curve.text(), "passed": report.passed,
                   "pairs_checked": report.pairs_checked,
                   "pairs_skipped_coprime": report.pairs_skipped_coprime}
        if not report.passed:
            payload["failing_pair"] = list(report.failing_pair)
        _emit_json(args, payload)
    else:
        if report.passed:
            _write(args, f"{curve.text()}: Groebner basis confirmed "
                         f"({report.pairs_checked} pairs reduced, "
                         f"{report.pairs_skipped_coprime} skipped)")
        else:
            _write(args, f"{curve.text()}: NOT a Groebner basis; "
                         f"pair {report.failing_pair} leaves a nonzero remainder")
    return 0 if report.passed else 3


_SELECTOR_FLAGS = {
    "x1-pm1": COLON_SELECTORS[0],
    "x1-p": COLON_SELECTORS[1],
    "xn": COLON_SELECTORS[2],
    "socle": COLON_SELECTORS[3],
}


def cmd_colon(args):
    curve = _validated(args.instance)
    dp = derive(curve)
    polys = [Polynomial.from_binomial(b) for b in patil_singh_generators(dp, curve)]
    in_ideal = leading_ideal(polys, curve.order())
    tables = {s: closed_form_table(dp, curve, s) for s in COLON_SELECTORS}
    guard = evaluate_guards(dp, [tables[s] for s in COLON_SELECTORS])
    selectors = ([_SELECTOR_FLAGS[args.selector]] if args.selector
                 else list(COLON_SELECTORS))
    comparisons = [compare_selector(curve, in_ideal, tables[s], guard)
                   for s in selectors]
    if args.json:
        _emit_json(args, {"instance": curve.text(),
                          "guard": {"status": guard.status.value,
                                    "reasons": list(guard.reasons)},
                          "comparisons": [c.to_dict() for c in comparisons]})
    else:
        lines = [f"guards: {guard.status.value}"]
        for reason in guard.reasons:
            lines.append(f"  {reason}")
        for c in comparisons:
            lines.append(f"{c.selector.value} {c.match.value}")
            lines.append("  published: "
                         + (", ".join(format_monomial(m) for m in c.literal) or "(empty)"))
            if c.engine is None:
                lines.append(f"  engine:    not computable ({c.note})")
            else:
                lines.append("  engine:    "
                             + (", ".join(format_monomial(m) for m in c.engine) or "(empty)"))
                lines.append(f"  equal mod initial ideal: {str(c.ideal_equal).lower()}"
                             f", as sets: {str(c.sets_equal).lower()}")
        _write(args, "\n".join(lines))
    return 3 if any(c.match is MatchStatus.MISMATCH for c in comparisons) else 0


def _rr_payload_text(payload):
    lines = [f"verdict: {payload['verdict']} (depth {payload['depth']})",
             "chain equals ideal per depth: "
             + ", ".join(str(b).lower() for b in payload["chain_equal"])]
    if payload.get("witness") is not None:
        lines.append("witness: " + format_monomial(tuple(payload["witness"]))
                     + f" at depth {payload.get('witness_depth')}")
    if payload["socle_candidates"]:
        cands = ", ".join(format_monomial(tuple(c)) for c in payload["socle_candidates"])
        lines.append(f"socle candidates: {cands}")
        for cand, row in zip(payload["socle_candidates"], payload["membership_table"]):
            hits = ", ".join(str(b).lower() for b in row)
            lines.append(f"  {format_monomial(tuple(cand))}: in chain member per depth: {hits}")
    return "\n".join(lines)


def cmd_rr(args):
    ideal, note = _parse_ideal(args.ideal)
    payload = combined_report(ideal, args.depth)
    if args.json:
        _emit_json(args, payload)
    else:
        text = _rr_payload_text(payload)
        if note:
            text = f"{note}\n{text}"
        _write(args, text)
    return 3 if payload["verdict"] == Verdict.NOT_CLOSED.value else 0


def cmd_probe(args):
    ideal, note = _parse_ideal(args.ideal)
    report = socle_probe(ideal, args.depth, powers=PowerCache(ideal))
    payload = {
        "depth": report.depth,
        "verdict": report.verdict.value,
        "socle_candidates": [list(c) for c in report.candidates],
        "membership_table": [[bool(b) for b in row] for row in report.membership_table],
        "degenerate": report.degenerate,
    }
    if report.witness is not None:
        payload["witness"] = list(report.witness)
        payload["witness_depth"] = report.witness_depth
    if args.json:
        _emit_json(args, payload)
    else:
        text = _rr_payload_text(payload)
        if note:
            text = f"{note}\n{text}"
        _write(args, text)
    return 3 if report.verdict is Verdict.NOT_CLOSED else 0


def cmd_run(args):
    curve = _validated(args.instance)
    report = run_instance(curve, args.depth)
    if args.json:
        _emit_json(args, report.to_dict(full=True))
    else:
        lines = [f"{curve.text()} {report.params.case.value}",
                 "gb: " + ("passed" if report.gb_passed else "FAILED"),
                 f"in_ideal: {report.in_ideal_match.value}"]
        lines += [f"{c.selector.value}: {c.match.value}" for c in report.colon]
        lines.append(f"verdict: {report.rr_verdict.value}")
        for entry in report.errata:
            lines.append(f"errata: {entry.text()}")
        _write(args, "\n".join(lines))
    return 3 if report.failed else 0


def cmd_survey(args):
    bounds = Bounds(tuple(args.p), args.max_mp, args.max_mn)
    report = survey(bounds, depth=args.depth)
    fmt = Format.parse(args.format) if args.format else (
        Format.JSON if args.json else Format.TEXT)
    data = emit(report, fmt)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return 0 if report.ok else 3


def build_parser():
    parser = argparse.ArgumentParser(
        prog="semicurve",
        description="Defining ideals of monomial curves over almost-arithmetic "
                    "sequences: generators, Groebner verification, and "
                    "Ratliff-Rush closedness probing.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, instance=False, ideal=False, depth=False):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(handler=handler)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--out", metavar="FILE", help="write output to FILE")
        if instance:
            sp.add_argument("instance", help="curve instance, e.g. 5,8,11;7")
        if ideal:
            sp.add_argument("ideal", help="instance text, inline ideal JSON, "
                                          "or path to an ideal JSON file")
        if depth:
            sp.add_argument("--depth", type=int, default=None, metavar="N",
                            help=f"colon-chain depth (default {DEPTH_ENV} or 4)")
        return sp

    add("validate", cmd_validate, "check the normal-form hypotheses", instance=True)
    add("params", cmd_params, "derived parameters of an instance", instance=True)
    add("gens", cmd_gens, "binomial generators of the curve ideal", instance=True)
    add("inideal", cmd_inideal, "initial ideal (engine vs closed form)", instance=True)
    add("gb-verify", cmd_gb_verify, "check the Groebner property", instance=True)
    sp = add("colon", cmd_colon, "published colon/socle lists vs the engine",
             instance=True)
    sp.add_argument("--selector", choices=sorted(_SELECTOR_FLAGS),
                    help="compare a single list (default: all)")
    add("rr", cmd_rr, "colon chain plus socle probe on an ideal",
        ideal=True, depth=True)
    add("probe", cmd_probe, "socle-complement probe on an ideal",
        ideal=True, depth=True)
    add("run", cmd_run, "full pipeline on one instance", instance=True,
        depth=True)

    sp = sub.add_parser("survey", help="run the pipeline over an enumerated corpus")
    sp.set_defaults(handler=cmd_survey)
    sp.add_argument("--json", action="store_true", help="emit JSON")
    sp.add_argument("--out", metavar="FILE", help="write output to FILE")
    sp.add_argument("--p", type=int, nargs="+", default=[1, 2],
                    help="arithmetic-part lengths p to enumerate (default: 1 2)")
    sp.add_argument("--max-mp", type=int, default=15, help="largest m_p (default 15)")
    sp.add_argument("--max-mn", type=int, default=15, help="largest m_n (default 15)")
    sp.add_argument("--depth", type=int, default=None, metavar="N",
                    help=f"colon-chain depth (default {DEPTH_ENV} or 4)")
    sp.add_argument("--format", choices=[f.value for f in Format],
                    help="output format (default: text, or json with --json)")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "depth") and args.depth is None:
            args.depth = default_depth()
        if getattr(args, "depth", 1) < 1:
            raise UserInputError("--depth must be at least 1")
        return args.handler(args)
    except UserInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
