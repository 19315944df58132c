"""Command-line front end.

Targets are written in the document grammar of ``textformat``.  Lines may be
declared with ``--line "rho r=2 sc=no"``; undeclared names of the form
``rho<k>`` are taken as ``r=k sc=no`` and a bare ``rho`` as ``r=1 sc=no dim>1``.

Exit status: 0 on success, 1 under ``--strict`` on an Undetermined verdict
(or on counterexamples for ``verify``), 2 on input errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional

from . import checks
from .classify import (
    Speh,
    Status,
    Verdict,
    classify_ladder_Q,
    classify_ladder_Z,
    classify_speh,
    unitary_family_member,
)
from .core import (
    ZERO,
    Line,
    Multisegment,
    SegmentError,
    is_ladder,
    jacquet_decomposition,
    kernel_components,
    speh_halve,
    standard_orders,
)
from .orbits import (
    InvalidInvolution,
    InvalidRange,
    admissible_rep,
    character_exponents,
    maximal_parabolic_exponent,
    s2_of,
)
from .symplectic import good_decompositions, has_good_decomposition
from .textformat import (
    DocumentError,
    Query,
    format_factor,
    format_good_decomposition,
    format_multisegment,
    format_order,
    format_query,
    format_segment,
    format_verdict,
    format_witness,
    parse,
)
from .zelevinsky import mw_dual

EXIT_OK, EXIT_UNDETERMINED, EXIT_INPUT = 0, 1, 2


class UsageError(ValueError):
    pass


def implicit_line(name: str) -> Optional[Line]:
    if name == "rho":
        return Line("rho", 1, False, True)
    mo = re.fullmatch(r"rho(\d+)", name)
    if mo and int(mo.group(1)) >= 1:
        return Line(name, int(mo.group(1)), False, False)
    return None


def _declarations(args) -> str:
    return "".join(f"line {d}\n" for d in (args.line or []))


def read_query(args, text: str) -> Query:
    doc = parse(_declarations(args) + text, implicit_line)
    if len(doc.queries) != 1:
        raise UsageError(f"expected exactly one query, got {len(doc.queries)}")
    return doc.queries[0]



# -- results ---------------------------------------------------------------
# Every command returns (text, json-able dict, verdict or None).


def _verdict_json(query: str, v: Verdict, certificates=None) -> dict:
    out = {"query": query, "verdict": str(v.status), "reason": v.reason}
    if v.witness is not None:
        out["witness"] = format_witness(v.witness)
    if certificates is not None:
        out["certificates"] = certificates
    return out


def _verdict_result(query: str, v: Verdict, certificates=None):
    return format_verdict(v), _verdict_json(query, v, certificates), v


def _plain(query: str, text: str, result):
    return text, {"query": query, "result": result}, None


def run_multisegment_command(command: str, m: Multisegment, extra: Optional[list[str]] = None):
    q = format_multisegment(m)
    if command == "dual":
        d = format_multisegment(mw_dual(m))
        return _plain(q, d, d)
    if command == "is-ladder":
        order = is_ladder(m)
        if order is None:
            return _plain(q, "not a ladder", None)
        return _plain(q, f"ladder {format_order(order)}", format_order(order))
    if command == "speh-halve":
        half = speh_halve(m)
        if half is None:
            return _plain(q, "not of Speh type", None)
        h = format_multisegment(half)
        return _plain(q, f"m' = {h}", h)
    if command == "classify-q":
        return _verdict_result(q, classify_ladder_Q(m))
    if command == "classify-z":
        return _verdict_result(q, classify_ladder_Z(m))
    if command == "good-decomps":
        lines, certs = [], []
        for order in standard_orders(m):
            gds = [format_good_decomposition(g) for g in good_decompositions(order)]
            certs.append({"order": format_order(order), "good_decompositions": gds})
            lines.append(f"{format_order(order)}: {len(gds)} good decomposition(s)")
            lines += [f"  {g}" for g in gds]
        return "\n".join(lines), {"query": q, "certificates": certs}, None
    if command == "is-symplectic":
        certs, ok = [], True
        for order in standard_orders(m):
            gd = has_good_decomposition(order)
            ok &= gd is not None
            certs.append({"order": format_order(order),
                          "good_decomposition": None if gd is None else format_good_decomposition(gd)})
        lines = ["symplectic" if ok else "not symplectic"]
        lines += [f"{c['order']}: {c['good_decomposition'] or 'none'}" for c in certs]
        return "\n".join(lines), {"query": q, "result": ok, "certificates": certs}, None
    if command == "kernel":
        order = is_ladder(m)
        if order is None:
            raise SegmentError(f"{q} is not a ladder")
        comps = ["0" if c is ZERO else format_multisegment(c) for c in kernel_components(order)]
        return "\n".join(comps) or "(no adjacent pairs)", {"query": q, "result": comps}, None
    if command == "jacquet":
        if len(m) != 1:
            raise UsageError("jacquet takes a single segment")
        if not extra:
            raise UsageError("jacquet needs a composition, e.g. 2,1")
        parts = _ints(extra[0])
        pieces = [format_segment(d) for d in jacquet_decomposition(m.segments[0], parts)]
        return " x ".join(pieces), {"query": q, "result": pieces}, None
    raise UsageError(f"{command} does not take a multisegment")


def run_factor_command(command: str, factors: tuple):
    q = " x ".join(format_factor(f) for f in factors)
    if command == "speh":
        if len(factors) != 1 or not isinstance(factors[0], Speh):
            raise UsageError("speh takes a single Sp(...) factor")
        f = factors[0]
        return _verdict_result(q, classify_speh(f.line, f.base, f.s))
    if command == "unitary":
        return _verdict_result(q, unitary_family_member(factors))
    raise UsageError(f"{command} does not take a factor list")


def run_query(query: Query, default: Optional[str] = None, extra=None):
    command = query.command or default
    if command is None:
        command = "unitary" if query.is_factors else "classify-q"
    if query.is_factors:
        return run_factor_command(command, query.target)
    return run_multisegment_command(command, query.target, extra)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").strip("()").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def run_orbits(args):
    what, params = args.what, args.params
    if what == "s2":
        if len(params) != 1:
            raise UsageError("orbits s2 takes one composition")
        alpha = _ints(params[0])
        taus = [repr(t) for t in s2_of(alpha)]
        return f"{len(taus)} involutions\n" + "\n".join(taus), {"query": params[0], "count": len(taus), "result": taus}, None
    if what in ("exponents", "rep"):
        if len(params) != 2:
            raise UsageError(f"orbits {what} takes a composition and an involution, e.g. 1,1 2,1")
        alpha, tau = _ints(params[0]), _ints(params[1])
        q = f"{params[0]} {params[1]}"
        if what == "exponents":
            ex = list(character_exponents(alpha, tau))
            return " ".join(map(str, ex)), {"query": q, "result": ex}, None
        rep = admissible_rep(alpha, tau)
        rows = [" ".join(rep.marker(r, c) or "0" for c in range(1, len(alpha) + 1))
                for r in range(1, len(alpha) + 1)]
        return "\n".join(rows), {"query": q, "result": rep.matrix()}, None
    if what == "parabolic":
        if len(params) != 3:
            raise UsageError("orbits parabolic takes n k r")
        n, k, r = (_ints(p)[0] for p in params)
        e = maximal_parabolic_exponent(n, k, r)
        return str(e), {"query": " ".join(params), "result": e}, None
    raise UsageError(f"unknown orbits query {what!r}")


def run_verify(args):
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in checks.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(checks.SUITES)} or all")
    lines, results = [], []
    for name in names:
        res = checks.SUITES[name](*_suite_args(name, args))
        lines.append(res.summary())
        lines += [f"  counterexample: {_describe(f)}" for f in res.failures[: args.show]]
        results.append({"suite": name, "cases": res.cases, "counterexamples": len(res.failures),
                        "examples": [_describe(f) for f in res.failures[: args.show]]})
    failed = any(r["counterexamples"] for r in results)
    return "\n".join(lines), {"query": args.suite, "result": results}, failed


def _suite_args(name: str, args) -> list:
    defaults = {
        "rank4-table": checks.RANK4_WINDOW,
        "ladder-pairing": checks.LADDER_WINDOW,
        "dual-parity": checks.LADDER_WINDOW,
        "dual-parity-blockwise": checks.LADDER_WINDOW,
        "mw-laws": checks.MW_WINDOW,
        "speh-implication": checks.SPEH_IMPLICATION_WINDOW,
        "classifier-duality": checks.LADDER_WINDOW,
    }
    if name not in defaults:
        return []
    w = defaults[name]
    lo, hi = args.window if args.window else (w.lo, w.hi)
    return [checks.Window(args.max_segs or w.max_segs, lo, hi,
                          args.max_len if args.max_len is not None else w.max_len)]


def _describe(f) -> str:
    if isinstance(f, tuple):
        return "; ".join(_describe(x) for x in f)
    if isinstance(f, list):
        return ", ".join(map(str, f))
    return format_witness(f)


def _parse_window(text: str) -> tuple[int, int]:
    mo = re.fullmatch(r"\s*(-?\d+)\s*:\s*(-?\d+)\s*", text)
    if not mo:
        raise argparse.ArgumentTypeError(f"window must look like a:b, got {text!r}")
    lo, hi = int(mo.group(1)), int(mo.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty window {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--strict", action="store_true", help="exit 1 on an Undetermined verdict")
    common.add_argument("--line", action="append", metavar="DECL",
                        help='declare a line, e.g. --line "rho r=2 sc=no"; repeatable')

    p = argparse.ArgumentParser(prog="sympladder", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    helps = {
        "dual": "Zelevinsky dual of a multisegment",
        "is-ladder": "ladder order, if any",
        "speh-halve": "find m' with m = m' + nu m'",
        "classify-q": "symplectic model of the ladder quotient Q(m)",
        "classify-z": "symplectic model of Z(m) for a ladder m",
        "good-decomps": "good decompositions of every standard order",
        "is-symplectic": "whether every standard order has a good decomposition",
        "kernel": "kernel components of a ladder",
    }
    for name, h in helps.items():
        sp = sub.add_parser(name, parents=[common], help=h)
        sp.add_argument("target", help='e.g. "[0,0]+[1,1] @ rho2"')
    sp = sub.add_parser("jacquet", parents=[common], help="split a segment top-down")
    sp.add_argument("target", help='a single segment, e.g. "[0,3] @ rho"')
    sp.add_argument("parts", help="composition of its length, e.g. 2,2")
    for name, h in (("speh", "Speh representation Sp(delta, s)"), ("unitary", "product of unitary factors")):
        sp = sub.add_parser(name, parents=[common], help=h)
        sp.add_argument("target", help='e.g. "Sp([0,1],2) @ rho"')

    sp = sub.add_parser("orbits", parents=[common], help="orbit involutions and exponents")
    sp.add_argument("what", choices=["s2", "exponents", "rep", "parabolic"])
    sp.add_argument("params", nargs="*", help="composition [involution] or n k r")

    sp = sub.add_parser("verify", parents=[common], help="exhaustive verification suites")
    sp.add_argument("suite", help=f"one of {', '.join(checks.SUITES)}, all")
    sp.add_argument("--max-segs", type=int)
    sp.add_argument("--max-len", type=int)
    sp.add_argument("--window", type=_parse_window, metavar="A:B")
    sp.add_argument("--show", type=int, default=5, metavar="N", help="counterexamples to print")

    sp = sub.add_parser("batch", parents=[common], help="run every query of a document")
    sp.add_argument("file", help="document path, or - for stdin")
    return p


def _emit(text: str, payload, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def main(argv: Optional[list[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK

    try:
        if args.command == "verify":
            text, payload, failed = run_verify(args)
            _emit(text, payload, args.json, out)
            return EXIT_UNDETERMINED if args.strict and failed else EXIT_OK
        if args.command == "orbits":
            text, payload, _ = run_orbits(args)
            _emit(text, payload, args.json, out)
            return EXIT_OK
        if args.command == "batch":
            return run_batch(args, out)
        q = read_query(args, args.target)
        extra = [args.parts] if args.command == "jacquet" else None
        if q.command is not None and q.command != args.command:
            raise UsageError(f"query names command {q.command!r} but {args.command!r} was invoked")
        text, payload, verdict = run_query(Query(args.command, q.target), extra=extra)
        _emit(text, payload, args.json, out)
        if args.strict and verdict is not None and verdict.status is Status.UNDETERMINED:
            return EXIT_UNDETERMINED
        return EXIT_OK
    except (DocumentError, SegmentError, UsageError, InvalidInvolution, InvalidRange, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def run_batch(args, out) -> int:
    try:
        text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    doc = parse(_declarations(args) + text, implicit_line)
    undetermined = False
    records = []
    for q in doc.queries:
        body, payload, verdict = run_query(q)
        undetermined |= verdict is not None and verdict.status is Status.UNDETERMINED
        if args.json:
            records.append(payload)
        else:
            out.write(f"{format_query(q)}\n" + "".join(f"  {ln}\n" for ln in body.split("\n")))
    if args.json:
        out.write(json.dumps(records, sort_keys=True) + "\n")
    return EXIT_UNDETERMINED if args.strict and undetermined else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
