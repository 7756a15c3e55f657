"""Command-line front end.

Exit status is 0 when every check passes, 1 on a verification failure and 2
on a usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .bijection import trace_rows, verify_bijection
from .compositions import Composition, CompositionParseError, compositions_of, parse_composition
from .descent import check_dynkin_identities
from .nsym import check_inversion, check_ode, check_prop1, check_qbracket_identity
from .permutitions import A000262, enumerate_permutitions, enumerate_shape, sinv_polynomial
from .polynomials import PolyTable, check_ad_recursion, g_recursive, reduced_P, reduced_f, reduced_table
from .reports import Report

TABLE_GUARD = 12
PERMUTITION_GUARD = 9
DYNKIN_GUARD = 7


class UsageError(Exception):
    pass


class GuardExceeded(UsageError):
    def __init__(self, what: str, value: int, limit: int):
        super().__init__(f"{what} = {value} exceeds the limit {limit}; pass --force to run anyway")


def _guard(args, what: str, value: int, limit: int) -> None:
    if value > limit and not getattr(args, "force", False):
        raise GuardExceeded(what, value, limit)


def _composition(text: str) -> Composition:
    try:
        return parse_composition(text)
    except CompositionParseError as exc:
        raise UsageError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise UsageError(f"expected a positive integer, got {n}")
    return n


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- poly / table ------------------------------------------------------------

def cmd_poly(args, out) -> int:
    I = _composition(args.composition)
    _guard(args, "weight", I.weight, TABLE_GUARD)
    p = {"g": g_recursive, "f": reduced_f, "P": reduced_P}[args.which](I)
    if args.format == "json":
        out.write(_dump({"composition": list(I), "which": args.which, "coefficients": p.to_json()}))
    else:
        out.write(p.render() + "\n")
    return 0


def render_table(table: PolyTable, fmt: str) -> str:
    if fmt == "json":
        return _dump(table.to_json())
    if fmt == "csv":
        width = max(len(P.coeffs) for _, P in table)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["composition"] + [f"c{k}" for k in range(width)])
        for I, P in table:
            writer.writerow([str(I)] + P.to_json() + [""] * (width - len(P.coeffs)))
        return buf.getvalue()
    return "".join(f"{I}: {P.render()}\n" for I, P in table)


def load_table(n: int, cache_dir: str | None) -> PolyTable:
    if cache_dir is None:
        return reduced_table(n)
    path = Path(cache_dir) / f"table_{n}.json"
    if path.exists():
        return PolyTable.from_json(json.loads(path.read_text()))
    table = reduced_table(n)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(_dump(table.to_json()))
    return table


def cmd_table(args, out) -> int:
    n = _positive(args.n)
    _guard(args, "n", n, TABLE_GUARD)
    out.write(render_table(load_table(n, args.cache), args.format))
    return 0


# -- permutitions ------------------------------------------------------------

def cmd_permutitions(args, out) -> int:
    try:
        n = int(args.n)
    except ValueError:
        raise UsageError(f"expected an integer, got {args.n!r}") from None
    if n < 0:
        raise UsageError("n must be >= 0")
    _guard(args, "n", n, PERMUTITION_GUARD)
    if args.shape:
        I = _composition(args.shape)
        if I.weight != n:
            raise UsageError(f"shape {I} does not have weight {n}")
        items = enumerate_shape(I)
    else:
        items = enumerate_permutitions(n)
    if args.format == "json":
        out.write(_dump([p.to_json(args.with_sinv) for p in items]))
    else:
        for p in items:
            out.write(f"{p}\t{p.sinv()}\n" if args.with_sinv else f"{p}\n")
    return 0


# -- verify --------------------------------------------------------------------

def _theorem_entry(parts: tuple[int, ...]) -> tuple[tuple[int, ...], bool, str, int]:
    I = Composition(parts)
    lhs, rhs = sinv_polynomial(I), reduced_P(I)
    return parts, lhs == rhs, f"sinv={lhs} P={rhs}", int(lhs(1))


def verify_theorem(n: int, jobs: int = 1) -> Report:
    rep = Report(f"theorem n={n}")
    comps = [tuple(I) for I in compositions_of(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_theorem_entry, comps))
    else:
        results = [_theorem_entry(c) for c in comps]
    total = 0
    for parts, ok, detail, count in results:
        total += count
        if not ok:
            rep.add(f"I={Composition(parts)}", False, detail, Composition(parts))
    rep.add(f"sinv polynomial = P_I for {len(comps)} compositions, {total} permutitions", rep.ok)
    rep.info.update(compositions=len(comps), permutitions=total)
    return rep


def verify_counts(n: int) -> Report:
    rep = Report(f"counts n={n}")
    counts = [sum(1 for _ in enumerate_permutitions(k)) for k in range(n + 1)]
    rec = [1, 1]
    for k in range(2, n + 1):
        rec.append((2 * k - 1) * rec[k - 1] - (k - 1) * (k - 2) * rec[k - 2])
    sums = [1] + [sum(int(reduced_P(I)(1)) for I in compositions_of(k)) for k in range(1, n + 1)]
    text = ",".join(map(str, counts))
    rep.add(f"counts {text} match the recurrence", counts == rec[: n + 1])
    rep.add("counts match the sums of P_I(1)", counts == sums)
    if n < len(A000262):
        rep.add("counts match A000262", counts == list(A000262[: n + 1]))
    rep.info["counts"] = counts
    return rep


def _run_suite(args) -> tuple[Report, list[str]]:
    suite, arg = args.suite, args.arg
    extra: list[str] = []
    if suite == "bijection":
        I = _composition(arg)
        if len(I) < 2:
            raise UsageError("the bijection needs a composition with at least two parts")
        _guard(args, "weight", I.weight, PERMUTITION_GUARD)
        if args.trace:
            extra = trace_rows(I)
        return verify_bijection(I), extra
    n = _positive(arg)
    if suite == "theorem":
        _guard(args, "n", n, PERMUTITION_GUARD)
        return verify_theorem(n, args.jobs), extra
    if suite == "recursion":
        _guard(args, "n", n, TABLE_GUARD)
        if n < 2:
            raise UsageError("the recursion needs n >= 2")
        return check_ad_recursion(n), extra
    if suite == "nsym":
        _guard(args, "n", n, TABLE_GUARD)
        rep = Report(f"nsym n={n}")
        rep.extend(check_prop1(n))
        rep.extend(check_ode(n))
        rep.extend(check_inversion(n))
        return rep, extra
    if suite == "qbracket":
        _guard(args, "n", n, TABLE_GUARD)
        return check_qbracket_identity(n), extra
    if suite == "dynkin":
        _guard(args, "n", n, DYNKIN_GUARD)
        return check_dynkin_identities(n), extra
    if suite == "counts":
        _guard(args, "n", n, PERMUTITION_GUARD)
        return verify_counts(n), extra
    raise UsageError(f"unknown suite {suite!r}")


def _emit_report(args, rep: Report, extra: list[str], command: str, elapsed: float, out) -> None:
    if args.format == "json":
        data = {"command": command, "version": __version__, "report": rep.to_json()}
        if extra:
            data["trace"] = extra
        if not args.stable:
            data["seconds"] = round(elapsed, 6)
        out.write(_dump(data))
        return
    out.write(f"# {command}\n")
    for row in extra:
        out.write(row + "\n")
    for line in rep.lines():
        out.write(line + "\n")
    status = "ok" if rep.ok else "FAILED"
    tail = "" if args.stable else f" in {elapsed:.3f}s"
    out.write(f"{status}: {sum(c.passed for c in rep.checks)}/{len(rep.checks)} checks{tail}\n")


def cmd_verify(args, out) -> int:
    start = time.perf_counter()
    rep, extra = _run_suite(args)
    command = f"verify {args.suite} {args.arg}" + (" --trace" if args.trace else "")
    _emit_report(args, rep, extra, command, time.perf_counter() - start, out)
    return 0 if rep.ok else 1


def cmd_oeis(args, out) -> int:
    nmax = int(args.nmax)
    if nmax < 0:
        raise UsageError("nmax must be >= 0")
    _guard(args, "nmax", nmax, PERMUTITION_GUARD)
    if nmax >= len(A000262):
        raise UsageError(f"embedded sequence has only {len(A000262)} terms")
    ok = True
    for k in range(nmax + 1):
        got = sum(1 for _ in enumerate_permutitions(k))
        good = got == A000262[k]
        ok &= good
        out.write(f"{'PASS' if good else 'FAIL'} n={k} enumerated={got} expected={A000262[k]}\n")
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qcomp", description="Composition polynomials and permutitions.")
    parser.add_argument("--version", action="version", version=f"qcomp {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", help="print g_I, f_I or P_I")
    p.add_argument("composition")
    p.add_argument("--which", choices=["g", "f", "P"], default="P")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", help="P_I for every composition of n")
    p.add_argument("n")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--cache", metavar="DIR")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("permutitions", help="list permutitions of [n]")
    p.add_argument("n")
    p.add_argument("--shape")
    p.add_argument("--with-sinv", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_permutitions)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["theorem", "bijection", "recursion", "nsym",
                                     "qbracket", "dynkin", "counts"])
    p.add_argument("arg", help="n, or a composition such as 2,1,1 for the bijection suite")
    p.add_argument("--trace", action="store_true", help="print every mapping (bijection suite)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--stable", action="store_true", help="omit timing from the output")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis", help="compare permutition counts with A000262")
    p.add_argument("nmax")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_oeis)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"qcomp: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
