"""Command-line front end: ``pseudoelliptic <command> ...``.

Exit codes: 0 success (or the claim holds), 1 the claim fails, 2 bad
usage or input.  All output is deterministic given the flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .cfrac import Bounds, cf_detect, cf_init, heights_csv, measure_heights
from .classify import classify, galois_quartic
from .exactnum import factor_over_Q, format_poly, is_squarefree, parse_poly, to_rat
from .families import (
    DomainError,
    Unresolved,
    family_poly,
    parse_family_spec,
    galois_exception_cell,
    factor_count_cell,
    predicted_factor_count,
)
from .units import emit_identity, find_unit, integrand
from .verify import ledger_text, run_battery

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _poly(text: str):
    try:
        return parse_poly(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad polynomial {text!r}: {exc}") from None


def _param(m: int, text: str):
    """``"2"`` or ``"-1/32"``; m = 2 and 3 take ``"v,w"``."""
    try:
        if m in (2, 3):
            a, b = text.split(",")
            return to_rat(a), to_rat(b)
        return to_rat(text)
    except ValueError:
        raise UsageError(f"bad parameter {text!r} for m={m}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_cf(args, out) -> int:
    D = _poly(args.poly)
    e = cf_init(D)
    bounds = Bounds(max_steps=args.steps) if args.steps else Bounds.default_for(e.g)
    st = cf_detect(e, bounds)
    if args.json:
        out.write(json.dumps({"lines": [ln.as_dict() for ln in e.lines], "status": str(st)}) + "\n")
        return EXIT_OK
    for ln in e.lines:
        out.write(f"{ln.h}\t{format_poly(ln.P)}\t{format_poly(ln.Q)}\t{format_poly(ln.a)}\n")
    out.write(f"status: {st}\n")
    return EXIT_OK


def cmd_unit(args, out) -> int:
    cert = find_unit(_poly(args.poly))
    if cert is None:
        out.write("not exceptional within bounds\n")
        return EXIT_FAIL
    out.write(cert.to_json() + "\n")
    return EXIT_OK


def cmd_integrate(args, out) -> int:
    cert = find_unit(_poly(args.poly))
    if cert is None:
        out.write("not exceptional within bounds\n")
        return EXIT_FAIL
    ident = integrand(cert)
    fmt = "latex" if args.latex else "json" if args.json else "text"
    out.write(emit_identity(ident, fmt, standalone=args.standalone).rstrip("\n") + "\n")
    return EXIT_OK


def cmd_classify(args, out) -> int:
    rep = classify(_poly(args.poly))
    out.write(rep.to_json() + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def family_record(m: int, t, full: bool = False) -> dict:
    """The combined family report as plain JSON data."""
    inst = family_poly(m, t)
    rep = classify(inst.D)
    t_out = [str(x) for x in t] if isinstance(t, tuple) else str(inst.t)
    rec = {
        "label": inst.label(),
        "m": m,
        "t": t_out,
        "v": str(inst.v),
        "w": str(inst.w),
        "D": format_poly(inst.D),
        "regular": inst.regular,
        "torsion": rep.cert.m if rep.cert else None,
        "k": str(rep.cert.k) if rep.cert else None,
        "galois": rep.galois.value if rep.galois else None,
        "resolvent_rational_zero": None
        if rep.resolvent_rational_zero is None
        else str(rep.resolvent_rational_zero),
        "checks_ok": rep.ok,
    }
    if full:
        rec["report"] = rep.to_dict()
    return rec


def _family_job(job):
    m, t, full = job
    return family_record(m, t, full)


def cmd_family(args, out) -> int:
    jobs = []
    for spec in args.spec or []:
        try:
            m, t = parse_family_spec(spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        jobs.append((m, t, args.full))
    if args.m is not None:
        if not args.t:
            raise UsageError("family needs --t with --m")
        jobs.extend((args.m, _param(args.m, t), args.full) for t in args.t)
    if not jobs:
        raise UsageError("family needs --m/--t or --spec")
    # validate everything up front so a bad parameter is a usage error
    for m, t, _ in jobs:
        family_poly_checked(m, t)
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_family_job, jobs))  # map keeps input order
    else:
        records = [_family_job(j) for j in jobs]
    ok = True
    for rec in records:
        out.write(json.dumps(rec, sort_keys=True) + "\n")
        ok = ok and rec["regular"] and rec["torsion"] == rec["m"] and rec["checks_ok"]
    return EXIT_OK if ok else EXIT_FAIL


def family_poly_checked(m, t):
    try:
        inst = family_poly(m, t)
    except DomainError as exc:
        raise UsageError(f"m={m}, t={t}: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not is_squarefree(inst.D):
        raise UsageError(f"m={m}, t={t}: D_m(x; t) is not squarefree (irregular parameter)")
    return inst


def _galois_rows(m: int, s):
    rows = []
    for column in ("V4", "C4"):
        cell = galois_exception_cell(m, s, column)
        if cell is None:
            continue
        if isinstance(cell, Unresolved):
            rows.append((f"galois m={m} {column}", None, str(cell), "unresolved", None))
            continue
        t, label = cell
        try:
            inst = family_poly(m, t)
        except DomainError:
            rows.append((f"galois m={m} {column} s={s}", t, label.value, "outside domain", None))
            continue
        if not inst.regular:
            rows.append((f"galois m={m} {column} s={s}", t, label.value, "irregular", None))
            continue
        got = galois_quartic(inst.D).value
        rows.append((f"galois m={m} {column} s={s}", t, label.value, got, got == label.value))
    return rows


def _factor_rows(m: int, s):
    rows = []
    for factors in (2, 3, 4):
        for variant in (0, 1) if factors == 2 and m in (4, 6) else (0,):
            cell = factor_count_cell(m, s, factors, variant)
            name = f"factors m={m} n={factors}" + (f" variant={variant}" if factors == 2 and m in (4, 6) else "")
            if cell is None:
                continue
            if isinstance(cell, Unresolved):
                rows.append((name, None, str(cell), "unresolved", None))
                continue
            t, _ = cell
            try:
                inst = family_poly(m, t)
            except DomainError:
                rows.append((f"{name} s={s}", t, str(factors), "outside domain", None))
                continue
            if not inst.regular:
                rows.append((f"{name} s={s}", t, str(factors), "irregular", None))
                continue
            # overlapping cells: the finest cell containing t decides
            predicted = predicted_factor_count(m, t)
            got = factor_over_Q(inst.D).count()
            label = str(predicted) if predicted == factors else f"{predicted} (t also in a finer cell)"
            rows.append((f"{name} s={s}", t, label, str(got), got == predicted))
    return rows


def cmd_tables(args, out) -> int:
    try:
        s = to_rat(args.s)
    except ValueError:
        raise UsageError(f"bad s {args.s!r}") from None
    try:
        rows = _galois_rows(args.m, s) if args.table == 1 else _factor_rows(args.m, s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not rows:
        out.write(f"no cells for m={args.m}\n")
        return EXIT_OK
    ok = True
    for name, t, predicted, computed, match in rows:
        tag = "match" if match else "MISMATCH" if match is False else "skipped"
        t_txt = "-" if t is None else str(t)
        out.write(f"{name}: t={t_txt} predicted={predicted} computed={computed} [{tag}]\n")
        ok = ok and match is not False
    return EXIT_OK if ok else EXIT_FAIL


def cmd_heights(args, out) -> int:
    if args.steps <= 0:
        raise UsageError("--steps must be positive")
    text = heights_csv(measure_heights(_poly(args.poly), args.steps))
    if args.csv == "-":
        out.write(text)
    else:
        with open(args.csv, "w", newline="") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    results = run_battery(jobs=args.jobs)
    out.write(ledger_text(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pseudoelliptic", description="Units, torsion and pseudo-elliptic integrals for sqrt(D).")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("cf", help="continued fraction tableau of sqrt(D)")
    c.add_argument("--poly", required=True)
    c.add_argument("--steps", type=int, default=None)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_cf)

    c = sub.add_parser("unit", help="fundamental unit certificate as JSON")
    c.add_argument("--poly", required=True)
    c.set_defaults(func=cmd_unit)

    c = sub.add_parser("integrate", help="the verified pseudo-elliptic integral")
    c.add_argument("--poly", required=True)
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument("--latex", action="store_true")
    fmt.add_argument("--json", action="store_true")
    c.add_argument("--standalone", action="store_true", help="wrap --latex output in a compilable document")
    c.set_defaults(func=cmd_integrate)

    c = sub.add_parser("classify", help="Galois data and structural checks as JSON")
    c.add_argument("--poly", required=True)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("family", help="torsion family instances (JSON lines)")
    c.add_argument("--m", type=int)
    c.add_argument("--t", action="append", help="repeatable; 'v,w' for m = 2 and 3")
    c.add_argument("--spec", action="append", help="'m=10,t=2', repeatable")
    c.add_argument("--full", action="store_true", help="include the whole classification report")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_family)

    c = sub.add_parser("tables", help="parametrized exceptions: predicted vs computed")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--s", required=True)
    c.add_argument("--table", type=int, choices=(1, 2), required=True,
                   help="1: Galois-group exceptions, 2: factor counts over Q")
    c.set_defaults(func=cmd_tables)

    c = sub.add_parser("heights", help="digit growth of Q_h as CSV")
    c.add_argument("--poly", required=True)
    c.add_argument("--steps", type=int, required=True)
    c.add_argument("--csv", required=True, help="output file, '-' for stdout")
    c.set_defaults(func=cmd_heights)

    c = sub.add_parser("verify-paper", help="run the whole verification battery")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_verify)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"pseudoelliptic: error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        # malformed or out-of-domain input reaching the library
        err.write(f"pseudoelliptic: error: {exc}\n")
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
