"""``resicode`` command line.

Exit codes: 0 success, 1 check or invariant failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from typing import Sequence

from . import checks
from .cyclic import DEFAULT_BUDGET, CodeError, DistanceRecord, minimum_distance, new_cyclic_code
from .field import FieldError
from .mth import mth_context, mth_report
from .qr import (
    InvariantViolation,
    NotQAryError,
    QRCodeReport,
    SelectorTuple,
    build_code,
    build_generator_top,
    classify_all,
    count_all,
    count_dual_containing,
    count_lcd,
    dual_containing_exists,
    enumerate_selectors,
    lcd_exists,
    qr_context,
    table_order,
)
from .residues import ResidueError, jacobi

SMALL_LENGTH = 63  # distances are enumerated by default only up to this length


class UsageError(Exception):
    pass


def _primes(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json", "csv"), default="text")
    common.add_argument("--threads", type=int, default=None, help="worker threads (default: RESICODE_THREADS or CPU count)")

    qr = argparse.ArgumentParser(add_help=False)
    qr.add_argument("--primes", type=_primes, required=True, help="distinct odd primes, comma separated")
    qr.add_argument("--q", type=int, required=True, help="base field order")
    qr.add_argument("--theta-exponent", type=int, default=1, help="replace theta by theta^u")

    dist = argparse.ArgumentParser(add_help=False)
    dist.add_argument("--budget", type=int, default=None, help="max codewords enumerated per code")

    p = argparse.ArgumentParser(prog="resicode", description="Quadratic and m-th residue cyclic codes.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common, qr], help="list every selector and its generator")
    c = sub.add_parser("classify", parents=[common, qr, dist], help="LCD / dual-containing flags for every code")
    c.add_argument("--distance", action="store_true", help="also compute minimum distances")
    d = sub.add_parser("distance", parents=[common, qr, dist], help="minimum distance of one code")
    d.add_argument("--selector", required=True, help='one "Q:sign" per class in class order, e.g. "15:+,5:+,3:+"')
    m = sub.add_parser("mth", parents=[common], help="m-th residue codes of prime length")
    m.add_argument("--p", type=int, required=True)
    m.add_argument("--m", type=int, required=True)
    m.add_argument("--q", type=int, default=None, help="field order (default: smallest prime power = 1 mod p)")
    cnt = sub.add_parser("count", parents=[common], help="closed-form counts")
    cnt.add_argument("--primes", type=_primes, required=True)
    v = sub.add_parser("verify-paper", parents=[common], help="run the reproduction checks")
    v.add_argument("--only", action="append", choices=sorted(checks.CHECKS), help="run only this check (repeatable)")
    return p


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _budget(args, n: int) -> int:
    if args.budget is not None:
        if args.budget < 0:
            raise UsageError("--budget must be non-negative")
        return args.budget
    return DEFAULT_BUDGET if n <= SMALL_LENGTH else 0


def _inadmissible_message(ctx) -> str:
    bad = [p for p in ctx.length.primes if jacobi(ctx.q, p) != 1]
    syms = ", ".join(f"({ctx.q}/{p}) = {jacobi(ctx.q, p)}" for p in bad)
    return f"base field F_{ctx.q} is not admissible: {syms}; generators are not defined over F_{ctx.q}"


# ------------------------------------------------------------------ commands
def cmd_enumerate(args) -> tuple[int, str]:
    ctx = qr_context(args.primes, args.q, theta_exponent=args.theta_exponent)
    rows = []
    for s in enumerate_selectors(ctx.partition):
        g = build_code(ctx, s).g if ctx.admissible else build_generator_top(ctx, s)
        rows.append((s, g))
    if args.output == "json":
        return 0, _dump_json(
            {
                "n": ctx.n,
                "q": ctx.q,
                "q_ary": ctx.admissible,
                "codes": [{"selector": s.to_json(), "label": s.label(), "generator": str(g)} for s, g in rows],
            }
        )
    if args.output == "csv":
        return 0, _csv([["label", "generator"]] + [[s.label(), str(g)] for s, g in rows])
    lines = [f"{s.label()}  {g}" for s, g in rows]
    lines.append(f"selectors={len(rows)} count_all={count_all(ctx.length.g)}")
    if not ctx.admissible:
        lines.append("not a q-ary code: generators shown over F_{%d}" % ctx.top_field.order)
    return 0, "\n".join(lines) + "\n"


def _top_reports(ctx, budget) -> list[QRCodeReport]:
    """Codes over GF(q^N) for selectors whose generators do not descend."""
    out = []
    for s in enumerate_selectors(ctx.partition):
        code = new_cyclic_code(ctx.top_field, ctx.n, build_generator_top(ctx, s))
        d = minimum_distance(code, budget, workers=1) if budget is not None else None
        out.append(QRCodeReport(s, code.g, code.k, code.lcd, code.dual_containing, d, q_ary=False))
    return out


def cmd_classify(args) -> tuple[int, str]:
    ctx = qr_context(args.primes, args.q, theta_exponent=args.theta_exponent)
    budget = _budget(args, ctx.n) if args.distance else None
    status = 0
    header = ""
    if ctx.admissible:
        reports = classify_all(ctx, distance_budget=budget, workers=args.threads)
    else:
        print(_inadmissible_message(ctx), file=sys.stderr)
        header = "not a q-ary code: " + _inadmissible_message(ctx)
        reports = _top_reports(ctx, budget)
        status = 1
    reports = table_order(ctx, reports)
    n_lcd = sum(r.lcd for r in reports)
    n_dc = sum(r.dual_containing for r in reports)
    hist = Counter(r.d.d for r in reports if r.d is not None and r.d.exact)
    summary = {
        "codes": len(reports),
        "lcd": n_lcd,
        "dual_containing": n_dc,
        "count_lcd": count_lcd(ctx.length.primes),
        "count_dual_containing": count_dual_containing(ctx.length.primes),
        "distance_histogram": {str(k): v for k, v in sorted(hist.items(), reverse=True)},
    }
    if args.output == "json":
        return status, _dump_json(
            {"n": ctx.n, "q": ctx.q, "q_ary": ctx.admissible, "reports": [r.to_json() for r in reports], "summary": summary}
        )
    if args.output == "csv":
        rows = [["label", "generator", "k", "lcd", "dual_containing", "d", "method", "q_ary"]]
        for r in reports:
            rows.append(
                [r.selector.label(), str(r.generator), r.k, int(r.lcd), int(r.dual_containing),
                 "" if r.d is None else r.d.d, "" if r.d is None else r.d.method, int(r.q_ary)]
            )
        return status, _csv(rows)
    lines = [header] if header else []
    for r in reports:
        d = "" if r.d is None else f"  d={r.d.d}" + ("" if r.d.exact else f" (<=, {r.d.method})")
        lines.append(f"{r.selector.label()}  g={r.generator}  k={r.k}  lcd={_yn(r.lcd)}  dual_containing={_yn(r.dual_containing)}{d}")
    hist_s = ", ".join(f"{k}:{v}" for k, v in summary["distance_histogram"].items())
    lines.append(f"codes={len(reports)} lcd={n_lcd} dual_containing={n_dc}" + (f" histogram={{{hist_s}}}" if hist else ""))
    return status, "\n".join(lines) + "\n"


def cmd_distance(args) -> tuple[int, str]:
    ctx = qr_context(args.primes, args.q, theta_exponent=args.theta_exponent)
    try:
        sel = SelectorTuple.parse(args.selector, ctx.partition)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad --selector: {exc}") from None
    if not ctx.admissible:
        raise NotQAryError(_inadmissible_message(ctx))
    code = build_code(ctx, sel)
    rec: DistanceRecord = minimum_distance(code, _budget(args, ctx.n), workers=args.threads)
    if args.output == "json":
        out = code.to_json(rec)
        out["selector"] = sel.to_json()
        out["generator"] = str(code.g)
        return 0, _dump_json(out)
    if args.output == "csv":
        return 0, _csv([["label", "generator", "k", "d", "method", "codewords"],
                        [sel.label(), str(code.g), code.k, rec.d, rec.method, rec.codewords_enumerated]])
    bound = "" if rec.exact else " (upper bound; budget exceeded)"
    return 0, (
        f"{sel.label()}\ng={code.g}\n[n, k] = [{code.n}, {code.k}] over F_{ctx.q}\n"
        f"d={rec.d}{bound} after {rec.codewords_enumerated} codewords\n"
    )


def cmd_mth(args) -> tuple[int, str]:
    try:
        ctx = mth_context(args.p, args.m, args.q)
    except ResidueError as exc:
        raise UsageError(str(exc)) from None
    rep = mth_report(ctx)
    disagreements = [c for c in rep["codes"] if c["disagreements"]]
    status = 1 if disagreements else 0
    if args.output == "json":
        return status, _dump_json(rep)
    if args.output == "csv":
        rows = [["j", "unit_factor", "generator", "k", "lcd", "dual_containing", "root_lcd", "root_dual_containing"]]
        for c in rep["codes"] + rep["codes_with_unit_factor"]:
            f = c["flags"]
            rows.append([c["j"], int(c["unit_factor"]), c["generator"], c["k"], int(f["lcd"]),
                         int(f["dual_containing"]), int(f["root_lcd"]), int(f["root_dual_containing"])])
        return status, _csv(rows)
    lines = [f"p={ctx.p} m={ctx.m} q={ctx.q} primitive root r={ctx.classes.r}"]
    for j, cos in enumerate(rep["cosets"]):
        lines.append(f"A_{j} = {{{', '.join(map(str, cos))}}}")
    for c in rep["codes"] + rep["codes_with_unit_factor"]:
        tag = "(x-1)f" if c["unit_factor"] else "f"
        f = c["flags"]
        warn = f"  DISAGREEMENT: {','.join(c['disagreements'])}" if c["disagreements"] else ""
        lines.append(f"<{tag}_{c['j']}>  g={c['generator']}  k={c['k']}  lcd={_yn(f['lcd'])}  "
                     f"dual_containing={_yn(f['dual_containing'])}{warn}")
    cr = rep["criteria"]
    lines.append(f"<f_j> family: lcd={cr['lcd_count']} dual_containing={cr['dual_containing_count']}")
    return status, "\n".join(lines) + "\n"


def cmd_count(args) -> tuple[int, str]:
    primes = sorted(args.primes)
    for p in primes:
        if p < 3 or p % 2 == 0:
            raise UsageError(f"{p} is not an odd prime")
    res = {
        "primes": primes,
        "g": len(primes),
        "count_all": count_all(len(primes)),
        "lcd_exists": lcd_exists(primes),
        "dual_containing_exists": dual_containing_exists(primes),
        "count_lcd": count_lcd(primes),
        "count_dual_containing": count_dual_containing(primes),
    }
    if args.output == "json":
        return 0, _dump_json(res)
    if args.output == "csv":
        keys = list(res)
        return 0, _csv([keys, [";".join(map(str, v)) if isinstance(v, list) else v for v in res.values()]])
    return 0, "".join(f"{k}={v}\n" for k, v in res.items())


def cmd_verify(args) -> tuple[int, str]:
    results = checks.run_checks(args.only)
    status = 0 if all(r.ok for r in results) else 1
    if args.output == "json":
        return status, _dump_json([{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results])
    if args.output == "csv":
        return status, _csv([["name", "ok", "detail"]] + [[r.name, int(r.ok), r.detail] for r in results])
    failed = [r.name for r in results if not r.ok]
    tail = "all checks passed" if not failed else "failed: " + ", ".join(failed)
    return status, "".join(r.line() + "\n" for r in results) + tail + "\n"


COMMANDS = {
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "distance": cmd_distance,
    "mth": cmd_mth,
    "count": cmd_count,
    "verify-paper": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", None) is not None and args.threads < 1:
        parser.error("--threads must be positive")
    try:
        status, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"resicode: error: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolation, NotQAryError, CodeError) as exc:
        print(f"resicode: {exc}", file=sys.stderr)
        return 1
    except (ResidueError, FieldError) as exc:
        print(f"resicode: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
