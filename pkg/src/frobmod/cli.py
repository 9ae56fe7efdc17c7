"""Command line front end.

    frobmod -f session.txt analyze R
    frobmod -f session.txt --json gb G
    frobmod -p 2 -n 1 ring-hs terms 10

Exit codes: 0 success, 2 input error, 3 truncated result (unless
``--allow-truncated``), 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import InvariantError, ParseError
from .fmodule import AnalysisReport, FPresentation, Verdict, analyze
from .groebner import DEFAULT_CAP, Status, buchberger, initial_module
from .hilbert import (
    HilbertRational,
    count_ring_monomials,
    count_standard_monomials,
    delta,
    hs_monomial_quotient,
    multiplicity,
)
from .monomial import RingContext
from .operator import FreeModule, Semantics
from .session import IdealDecl, Session, parse_session

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_TRUNCATED = 3
EXIT_INVARIANT = 4

COMMANDS = ("analyze", "gb", "hilbert", "ring-hs", "verify-de", "count")


class UsageError(Exception):
    pass


def _keyword_args(args: list, allowed: dict) -> tuple:
    """Split ``[name] [key value]...`` into positionals and typed keywords."""
    positional, keywords = [], {}
    i = 0
    while i < len(args):
        word = args[i]
        if word in allowed:
            if i + 1 >= len(args):
                raise UsageError(f"{word} needs a value")
            try:
                keywords[word] = allowed[word](args[i + 1])
            except ValueError:
                raise UsageError(f"bad value for {word}: {args[i + 1]!r}") from None
            i += 2
        else:
            positional.append(word)
            i += 1
    return positional, keywords


def _ideal_report(decl: IdealDecl, ctx: RingContext, cap: int) -> AnalysisReport:
    """Treat ``A / I`` like a presented module so one report shape serves both."""
    module = FreeModule(ctx, Semantics.TRUNCATING, 1)
    vecs = decl.vectors(ctx)
    gb = buchberger(vecs, cap=cap, module=module)
    initial = initial_module(gb)
    prefix = [count_standard_monomials(initial, d) for d in range(0, max(cap - 1, 0))]
    pres = FPresentation(ctx, 1, (0,), [], name=decl.name)
    if gb.status is Status.TRUNCATED:
        return AnalysisReport(pres, gb, initial, prefix, Verdict.UNKNOWN, Verdict.UNKNOWN)
    hs, diag = hs_monomial_quotient(initial)
    dlt = delta(hs)
    return AnalysisReport(pres, gb, initial, prefix, Verdict.YES if dlt == 0 else Verdict.NO,
                          Verdict.YES, hs=hs, delta=dlt, multiplicity=multiplicity(hs), diagnostics=diag)


def _report_for(session: Session, name: str, cap: int) -> AnalysisReport:
    try:
        target = session.lookup(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if isinstance(target, IdealDecl):
        return _ideal_report(target, session.ctx, cap)
    return analyze(target, cap)


def _format_report(rep: AnalysisReport) -> str:
    lines = [f"module {rep.presentation.name or '?'}  (p={rep.presentation.ctx.p}, n={rep.presentation.ctx.n})"]
    lines.append(f"status: {rep.status.value} (cap {rep.groebner.cap})")
    lines.append("groebner basis:")
    lines += [f"  {g}" for g in rep.groebner.elements] or ["  (empty)"]
    lines.append("initial module: " + (", ".join(rep.initial.render()) or "0"))
    if rep.hs is not None:
        lines.append(f"hilbert series: {rep.hs}")
        lines.append(f"bernstein dimension: {rep.delta}")
        lines.append(f"multiplicity: {rep.multiplicity}")
        c, d = rep.diagnostics.cokernel_hs
        coker = f"{c}" if d == 0 else f"({c}) / (1 - t)^{d}"
        lines.append(f"structure map (monomial model): kernel {rep.diagnostics.kernel_hs}, cokernel {coker}")
    lines.append(f"holonomic: {rep.holonomic.value}")
    lines.append(f"great filtration: {rep.great.value}")
    shown = rep.truncated_hilbert[:12]
    lines.append("hilbert function: " + ", ".join(str(x) for x in shown) + (", ..." if len(rep.truncated_hilbert) > 12 else ""))
    return "\n".join(lines)


def run(command: str, args: list, session: Session, opts) -> tuple:
    """Execute one command; returns ``(payload, text, truncated)``."""
    ctx = session.ctx
    cap = opts.cap if opts.cap is not None else int(session.options.get("cap", DEFAULT_CAP))
    terms = opts.terms if opts.terms is not None else int(session.options.get("terms", 10))
    if ctx is None:
        raise UsageError("no ring: give a session file with a 'ring' line or -p/-n")

    if command == "analyze":
        pos, kw = _keyword_args(args, {"cap": int})
        if len(pos) != 1:
            raise UsageError("usage: analyze NAME [cap N]")
        rep = _report_for(session, pos[0], kw.get("cap", cap))
        payload = {"command": "analyze", **rep.to_json()}
        return payload, _format_report(rep), rep.status is Status.TRUNCATED

    if command == "gb":
        pos, kw = _keyword_args(args, {"cap": int})
        if len(pos) != 1:
            raise UsageError("usage: gb NAME [cap N]")
        rep = _report_for(session, pos[0], kw.get("cap", cap))
        gb = rep.groebner
        payload = {
            "command": "gb", "name": pos[0], "p": ctx.p, "n": ctx.n,
            "status": gb.status.value, "cap": gb.cap,
            "groebner": [str(g) for g in gb.elements],
            "initial": rep.initial.render(),
        }
        text = "\n".join([f"status: {gb.status.value}"] + [str(g) for g in gb.elements]
                         + ["initial: " + (", ".join(rep.initial.render()) or "0")])
        return payload, text, gb.status is Status.TRUNCATED

    if command == "hilbert":
        pos, kw = _keyword_args(args, {"terms": int, "cap": int})
        if len(pos) != 1:
            raise UsageError("usage: hilbert NAME [terms N]")
        rep = _report_for(session, pos[0], kw.get("cap", cap))
        k = kw.get("terms", terms)
        if rep.hs is not None:
            series = rep.hs.expand(k)
        else:
            series = rep.truncated_hilbert[:k]
        payload = {
            "command": "hilbert", "name": pos[0], "p": ctx.p, "n": ctx.n,
            "status": rep.status.value,
            "hs": rep.hs.to_json() if rep.hs is not None else None,
            "series": series,
            "delta": rep.delta,
            "multiplicity": str(rep.multiplicity) if rep.multiplicity is not None else None,
        }
        text = ", ".join(str(x) for x in series)
        if rep.hs is not None:
            text = f"{rep.hs}\n{text}"
        return payload, text, rep.status is Status.TRUNCATED

    if command == "ring-hs":
        _, kw = _keyword_args(args, {"terms": int})
        k = kw.get("terms", terms)
        hs = HilbertRational.of_ring(ctx)
        series = hs.expand(k)
        payload = {"command": "ring-hs", "p": ctx.p, "n": ctx.n, "hs": hs.to_json(), "series": series}
        return payload, ", ".join(str(x) for x in series), False

    if command == "verify-de":
        _, kw = _keyword_args(args, {"degree": int})
        top = kw.get("degree", max(terms - 1, 0))
        closed = HilbertRational.of_ring(ctx).expand(top + 1)
        counted = [count_ring_monomials(ctx, d) for d in range(top + 1)]
        ok = closed == counted
        payload = {"command": "verify-de", "p": ctx.p, "n": ctx.n, "degree": top,
                   "counted": counted, "closed_form": closed, "agree": ok}
        if not ok:
            bad = [d for d in range(top + 1) if closed[d] != counted[d]]
            raise InvariantError(f"enumeration disagrees with the closed form in degrees {bad}")
        text = "\n".join(f"{d:>3}  {c}" for d, c in enumerate(counted)) + "\nagree: yes"
        return payload, text, False

    if command == "count":
        if not args:
            raise UsageError("usage: count DEGREE [NAME]")
        try:
            d = int(args[0])
        except ValueError:
            raise UsageError(f"bad degree {args[0]!r}") from None
        if len(args) > 1:
            rep = _report_for(session, args[1], cap)
            value = count_standard_monomials(rep.initial, d)
            truncated = rep.status is Status.TRUNCATED
        else:
            value, truncated = count_ring_monomials(ctx, d), False
        payload = {"command": "count", "p": ctx.p, "n": ctx.n, "degree": d, "count": value}
        if len(args) > 1:
            payload["name"] = args[1]
        return payload, str(value), truncated

    raise UsageError(f"unknown command {command!r}; choose from {', '.join(COMMANDS)}")


def load_schema() -> dict:
    """The published JSON schema of every ``--json`` output."""
    from importlib.resources import files

    return json.loads(files("frobmod").joinpath("report.schema.json").read_text(encoding="utf-8"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="frobmod",
        description="Gröbner bases, Hilbert series and holonomicity for modules over Frobenius operators.",
    )
    ap.add_argument("-f", "--file", help="session file ('-' for stdin)")
    ap.add_argument("-p", type=int, help="characteristic, for commands without a session")
    ap.add_argument("-n", type=int, help="number of variables, for commands without a session")
    ap.add_argument("--json", action="store_true", help="print JSON")
    ap.add_argument("--cap", type=int, help=f"degree cap for Buchberger (default {DEFAULT_CAP})")
    ap.add_argument("--allow-truncated", action="store_true", help="exit 0 even if the cap was hit")
    ap.add_argument("--terms", type=int, help="number of series terms to print")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("args", nargs="*")
    return ap


def _load_session(opts) -> Session:
    if opts.file:
        if opts.file == "-":
            text = sys.stdin.read()
        else:
            with open(opts.file, encoding="utf-8") as fh:
                text = fh.read()
        session = parse_session(text)
        if opts.p is not None or opts.n is not None:
            raise UsageError("-p/-n cannot be combined with a session file")
        return session
    session = Session()
    if opts.p is not None or opts.n is not None:
        try:
            session.ctx = RingContext(opts.p if opts.p is not None else 2, opts.n if opts.n is not None else 1)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return session


def main(argv: Optional[list] = None) -> int:
    opts = build_parser().parse_args(argv)
    try:
        session = _load_session(opts)
        fmt = session.options.get("format")
        as_json = opts.json or fmt == "json"
        payload, text, truncated = run(opts.command, list(opts.args), session, opts)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)
    if truncated and not opts.allow_truncated:
        print("result truncated at the degree cap; rerun with a larger --cap or pass --allow-truncated",
              file=sys.stderr)
        return EXIT_TRUNCATED
    return EXIT_OK
