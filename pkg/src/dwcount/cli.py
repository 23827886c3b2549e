"""``dwcount`` command-line frontend.

    dwcount counts --manifold "MO(0;(1,2))" --m 2 [--k K] [--json|--csv]
    dwcount dw     --manifold "MO(1;)" --m 2 [--json|--csv]
    dwcount verify --manifold "MO(2;(2,1))" --m 3 [--json]
    dwcount batch  [--input FILE] [--jobs N]      (JSON lines on stdin/stdout)

Exit codes: 0 success, 1 usage or parse error, 2 consistency failure,
3 work limit exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .counting import ConsistencyReport, DegreeCountTable, counts_from_dw, verify_consistency
from .cyclotomic import approx_complex, render
from .dw import DEFAULT_MAX_WORK, DwVector, dw_all, work_estimate
from .errors import DwCountError, ParseError, WorkLimitExceeded
from .oracle import cross_validate
from .seifert import SeifertData, count_homs, validate_seifert

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_WORK = 0, 1, 2, 3
MAX_M = 32
MODES = ("counts", "dw", "verify", "batch")


# --- parsing ---------------------------------------------------------------

class _Parser:
    """Recursive-descent parser for ``MO(g; (a,b), ...)``."""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _offset(self):
        return len(self.text[: self.pos].encode("utf-8"))

    def _error(self, expected):
        raise ParseError(self._offset(), expected, self.text)

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip()
        return self.text[self.pos : self.pos + 1]

    def expect(self, token):
        self._skip()
        if not self.text.startswith(token, self.pos):
            self._error(repr(token))
        self.pos += len(token)

    def integer(self):
        self._skip()
        start = self.pos
        if self.text[self.pos : self.pos + 1] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self._error("integer")
        return int(self.text[start : self.pos])

    def pair(self):
        self.expect("(")
        a = self.integer()
        self.expect(",")
        b = self.integer()
        self.expect(")")
        return a, b

    def manifold(self):
        self.expect("MO")
        self.expect("(")
        genus = self.integer()
        self.expect(";")
        pairs = []
        if self._peek() == "(":
            pairs.append(self.pair())
            while self._peek() == ",":
                self.expect(",")
                pairs.append(self.pair())
        self.expect(")")
        self._skip()
        if self.pos != len(self.text):
            self._error("end of input")
        return genus, pairs


def parse_seifert(text: str) -> SeifertData:
    genus, pairs = _Parser(text).manifold()
    return validate_seifert(genus, pairs)


# --- computation -----------------------------------------------------------

@dataclass
class Result:
    manifold: SeifertData
    m: int
    dw: DwVector
    counts: DegreeCountTable | None
    hom_count: int
    report: ConsistencyReport


def resolve_max_work(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("DWCOUNT_MAX_WORK")
    if env:
        return int(env)
    return DEFAULT_MAX_WORK


def check_guard(M: SeifertData, m: int, max_work: int, force: bool):
    if force:
        return
    if m > MAX_M:
        raise WorkLimitExceeded(m, MAX_M, "group order m =", "use --force")
    est = m * work_estimate(M, m)
    if est > max_work:
        raise WorkLimitExceeded(est, max_work, hint="use --force or --max-work")


def compute(
    M: SeifertData,
    m: int,
    *,
    verify: bool = False,
    float_check: bool = False,
    max_work: int | None = DEFAULT_MAX_WORK,
    force: bool = False,
) -> Result:
    check_guard(M, m, max_work if max_work is not None else DEFAULT_MAX_WORK, force)
    dw = dw_all(M, m, max_work=None)
    if verify or float_check:
        report = cross_validate(M, m, dw=dw, brute=verify, float_check=True)
    else:
        report = verify_consistency(M, m, dw=dw)
    counts = counts_from_dw(dw) if report.ok else None
    return Result(M, m, dw, counts, count_homs(M, m), report)


# --- rendering -------------------------------------------------------------

def _clean(x: float) -> float:
    x = round(x, 12)
    return x + 0.0


def _approx_pair(v) -> list[float]:
    z = approx_complex(v)
    return [_clean(z.real), _clean(z.imag)]


def result_dict(result: Result) -> dict:
    checks = dict(result.report.checks())
    checks["failures"] = list(result.report.failures)
    if result.report.skipped:
        checks["skipped"] = list(result.report.skipped)
    return {
        "manifold": {
            "genus": result.manifold.genus,
            "pairs": [[a, b] for a, b in result.manifold.pairs],
        },
        "m": result.m,
        "dw": [
            {"l": l, "exact": render(v), "approx": _approx_pair(v)}
            for l, v in enumerate(result.dw)
        ],
        "counts": list(result.counts) if result.counts is not None else None,
        "hom_count": result.hom_count,
        "checks": checks,
    }


def emit_json(result: Result) -> str:
    return json.dumps(result_dict(result), ensure_ascii=False)


def _fmt_complex(z: complex) -> str:
    re, im = _clean(z.real), _clean(z.imag)
    return f"{re:.6g}{'+' if im >= 0 else '-'}{abs(im):.6g}i"


def render_counts(result: Result, k: int | None, fmt: str) -> str:
    counts = result.counts
    ks = range(result.m) if k is None else [k]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "count"])
        for kk in ks:
            w.writerow([kk, counts[kk]])
        return buf.getvalue().rstrip("\n")
    return "\n".join(f"k={kk}: {counts[kk]}" for kk in ks)


def render_dw(result: Result, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["l", "exact", "re", "im"])
        for l, v in enumerate(result.dw):
            re, im = _approx_pair(v)
            w.writerow([l, render(v), re, im])
        return buf.getvalue().rstrip("\n")
    return "\n".join(
        f"l={l}: {render(v)}  ~ {_fmt_complex(approx_complex(v))}"
        for l, v in enumerate(result.dw)
    )


def render_report(result: Result) -> str:
    rep = result.report
    lines = [
        f"manifold   {result.manifold.render()}",
        f"m          {result.m}",
        f"#hom       {rep.hom_count}",
        f"sum counts {rep.sum_of_counts}",
    ]
    for name, ok in rep.checks().items():
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}")
    for note in rep.skipped:
        lines.append(f"SKIP  {note}")
    for f in rep.failures:
        lines.append(f"  ! {f}")
    lines.append("all checks passed" if rep.ok else "CONSISTENCY FAILURE")
    return "\n".join(lines)


# --- batch -----------------------------------------------------------------

def _batch_line(args):
    line, max_work, force = args
    try:
        req = json.loads(line)
        if not isinstance(req, dict) or "manifold" not in req or "m" not in req:
            raise ValueError('expected an object with "manifold" and "m"')
        m = req["m"]
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ValueError('"m" must be a positive integer')
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            M = parse_seifert(req["manifold"])
        result = compute(
            M,
            m,
            verify=bool(req.get("verify", False)),
            float_check=bool(req.get("float_check", False)),
            max_work=max_work,
            force=force,
        )
        out = result_dict(result)
        if "k" in req and result.counts is not None:
            out["k"] = req["k"]
            out["count"] = result.counts[int(req["k"])]
        return json.dumps(out, ensure_ascii=False), (EXIT_OK if result.report.ok else EXIT_INCONSISTENT)
    except WorkLimitExceeded as exc:
        return json.dumps({"error": "WorkLimitExceeded", "message": str(exc)}), EXIT_WORK
    except (ValueError, DwCountError) as exc:
        return json.dumps({"error": type(exc).__name__, "message": str(exc)}), EXIT_USAGE


def run_batch(lines, *, max_work, force, jobs=1):
    """Process JSON-lines requests; yields (output_line, exit_code) in input order."""
    items = [(line, max_work, force) for line in lines]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(_batch_line, items)
    else:
        yield from map(_batch_line, items)


# --- entry point -----------------------------------------------------------

class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="dwcount",
        description="Dijkgraaf-Witten invariants and degree counts for maps "
        "from Seifert manifolds to lens spaces.",
    )
    sub = parser.add_subparsers(dest="mode", required=True, parser_class=_ArgumentParser)

    def common(p):
        p.add_argument("--max-work", type=int, default=None,
                       help="work budget (default: $DWCOUNT_MAX_WORK or 1e8)")
        p.add_argument("--force", action="store_true", help="ignore the work guard")

    for mode in ("counts", "dw", "verify"):
        p = sub.add_parser(mode)
        p.add_argument("--manifold", required=True, help='e.g. "MO(0;(1,2))"')
        p.add_argument("--m", type=int, required=True, help="order of the cyclic group")
        if mode == "counts":
            p.add_argument("--k", type=int, default=None, help="single degree")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true")
        if mode != "verify":
            fmt.add_argument("--csv", action="store_true")
            p.add_argument("--verify", action="store_true",
                           help="also run the brute-force and float oracles")
        p.add_argument("--float-check", action="store_true",
                       help="compare exact values with double-precision sums")
        common(p)

    p = sub.add_parser("batch")
    p.add_argument("--input", default="-", help="JSON-lines file (default stdin)")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    return parser


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        max_work = resolve_max_work(args.max_work)
    except ValueError:
        print("dwcount: DWCOUNT_MAX_WORK must be an integer", file=sys.stderr)
        return EXIT_USAGE

    if args.mode == "batch":
        if args.input == "-":
            lines = [ln for ln in stdin.read().splitlines() if ln.strip()]
        else:
            with open(args.input, encoding="utf-8") as fh:
                lines = [ln for ln in fh.read().splitlines() if ln.strip()]
        code = EXIT_OK
        for out, c in run_batch(lines, max_work=max_work, force=args.force, jobs=args.jobs):
            print(out, file=stdout)
            code = max(code, c)
        return code

    if args.m < 1:
        print("dwcount: --m must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            M = parse_seifert(args.manifold)
        for w in caught:
            print(f"dwcount: warning: {w.message}", file=sys.stderr)
    except ParseError as exc:
        print(f"dwcount: {exc}", file=sys.stderr)
        print(f"  {exc.text}", file=sys.stderr)
        return EXIT_USAGE
    except DwCountError as exc:
        print(f"dwcount: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    verify = args.mode == "verify" or getattr(args, "verify", False)
    try:
        result = compute(
            M, args.m,
            verify=verify,
            float_check=args.float_check or args.mode == "verify",
            max_work=max_work,
            force=args.force,
        )
    except WorkLimitExceeded as exc:
        print(f"dwcount: refused: {exc}", file=sys.stderr)
        return EXIT_WORK

    fmt = "json" if args.json else "csv" if getattr(args, "csv", False) else "table"
    if fmt == "json":
        print(emit_json(result), file=stdout)
    elif args.mode == "verify" or not result.report.ok:
        print(render_report(result), file=stdout)
    elif args.mode == "counts":
        print(render_counts(result, args.k, fmt), file=stdout)
    else:
        print(render_dw(result, fmt), file=stdout)
    return EXIT_OK if result.report.ok else EXIT_INCONSISTENT
