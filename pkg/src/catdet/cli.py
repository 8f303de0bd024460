"""Command-line front end.

    catdet catalan --n 4 --method all
    catdet hessdet --input matrix.json --engine both
    catdet paths count --a 1,2,2 --b 0,0,1 --method both
    catdet paths dyck --n 5
    catdet series recip --n 8 --order 6
    catdet table --rows 12 --highlight 7 --format text
    catdet verify --identity prop_a --n-max 20 --k-max 40

Exit status: 0 on success, 1 when a cross-check or sweep fails, 2 on
usage or validation errors.
"""

import argparse
import contextlib
import io
import json
import sys

from .builders import PascalTable, pascal_table
from .catalan import catalan_det, catalan_mingantu
from .combinat import catalan_closed
from .exceptions import CatdetError
from .hessmat import DenseIntMatrix, HessenbergMatrix, det_bareiss, det_hessenberg_recurrence
from .lattice import BoundaryPair, count_dyck, count_paths_det, count_paths_dp
from .series import TruncatedSeries, binomial_power, reciprocal, reciprocal_via_minors
from .verify import DEFAULT_SEED, IDENTITIES, VerificationReport, run_identity


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser():
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    p = _Parser(prog="catdet", description=__doc__.split("\n")[0])
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("catalan", parents=[fmt],
                       help="Catalan number by determinant, recurrence or closed form")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--method", choices=("det", "mingantu", "closed", "all"), default="det")

    h = sub.add_parser("hessdet", parents=[fmt], help="determinant of a matrix file")
    h.add_argument("--input", required=True, help="JSON document with rows, cols, entries")
    h.add_argument("--engine", choices=("recurrence", "bareiss", "both"), default="both")

    paths = sub.add_parser("paths", parents=[fmt], help="lattice paths between height boundaries")
    psub = paths.add_subparsers(dest="paths_command", required=True, parser_class=_Parser)
    pc = psub.add_parser("count", parents=[fmt])
    src = pc.add_mutually_exclusive_group(required=True)
    src.add_argument("--a", type=_int_list)
    src.add_argument("--input", help="JSON document with integer lists a and b")
    pc.add_argument("--b", type=_int_list)
    pc.add_argument("--method", choices=("det", "dp", "both"), default="both")
    pd = psub.add_parser("dyck", parents=[fmt])
    pd.add_argument("--n", type=int, required=True)

    series = sub.add_parser("series", parents=[fmt], help="truncated power series")
    ssub = series.add_subparsers(dest="series_command", required=True, parser_class=_Parser)
    sr = ssub.add_parser("recip", parents=[fmt])
    src = sr.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int, help="reciprocal of (1+z)^n")
    src.add_argument("--coeffs", type=_int_list)
    src.add_argument("--input", help="JSON series document")
    sr.add_argument("--order", type=int)
    sr.add_argument("--method", choices=("direct", "minors", "both"), default="direct")

    t = sub.add_parser("table", parents=[fmt], help="square Pascal table with a highlighted column")
    t.add_argument("--rows", type=int, required=True)
    t.add_argument("--highlight", type=int, default=0)
    t.add_argument("--cols", type=int)

    v = sub.add_parser("verify", parents=[fmt], help="sweep one identity and report failures")
    v.add_argument("--identity", choices=IDENTITIES, required=True)
    v.add_argument("--n-max", type=int)
    v.add_argument("--k-max", type=int)
    v.add_argument("--m-max", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--dyck-max", type=int)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return p


def _read(path):
    with open(path) as fh:
        return json.load(fh)


def _cmd_catalan(args):
    methods = {"det": catalan_det, "mingantu": catalan_mingantu, "closed": catalan_closed}
    if args.method != "all":
        return {"n": str(args.n), "method": args.method,
                "value": str(methods[args.method](args.n))}, True
    values = {name: fn(args.n) for name, fn in methods.items()}
    agree = len(set(values.values())) == 1
    return {"n": str(args.n), "method": "all",
            "values": {k: str(v) for k, v in values.items()}, "agree": agree}, agree


def _cmd_hessdet(args):
    m = DenseIntMatrix.from_dict(_read(args.input))
    doc = {"rows": m.rows, "cols": m.cols}
    if args.engine in ("recurrence", "both"):
        doc["recurrence"] = str(det_hessenberg_recurrence(HessenbergMatrix.from_dense(m)))
    if args.engine in ("bareiss", "both"):
        doc["bareiss"] = str(det_bareiss(m))
    ok = True
    if args.engine == "both":
        ok = doc["recurrence"] == doc["bareiss"]
        doc["agree"] = ok
    return doc, ok


def _cmd_paths(args):
    if args.paths_command == "dyck":
        return {"n": str(args.n), "value": str(count_dyck(args.n))}, True
    if args.input:
        bounds = BoundaryPair.from_dict(_read(args.input))
    else:
        if args.b is None:
            raise _UsageError("paths count: --b is required with --a")
        bounds = BoundaryPair(args.a, args.b)
    doc = {}
    if args.method in ("det", "both"):
        doc["det"] = str(count_paths_det(bounds))
    if args.method in ("dp", "both"):
        doc["dp"] = str(count_paths_dp(bounds))
    ok = True
    if args.method == "both":
        ok = doc["det"] == doc["dp"]
        doc["agree"] = ok
    return doc, ok


def _cmd_series(args):
    if args.n is not None:
        order = 10 if args.order is None else args.order
        routes = {"direct": lambda: reciprocal(binomial_power(args.n, order), order),
                  "minors": lambda: reciprocal_via_minors(args.n, order)}
        doc = {"n": str(args.n), "order": order}
    else:
        if args.method != "direct":
            raise _UsageError("series recip: --method minors needs --n")
        f = (TruncatedSeries.from_dict(_read(args.input)) if args.input
             else TruncatedSeries(args.coeffs))
        order = f.order if args.order is None else args.order
        routes = {"direct": lambda: reciprocal(f, order)}
        doc = {"input": [str(c) for c in f.coeffs], "order": order}
    chosen = ("direct", "minors") if args.method == "both" else (args.method,)
    results = {name: routes[name]() for name in chosen}
    ok = True
    if args.method == "both":
        ok = results["direct"] == results["minors"]
        doc["agree"] = ok
    doc["coeffs"] = [str(c) for c in results[chosen[0]].coeffs]
    return doc, ok


def _cmd_table(args):
    return pascal_table(args.rows, args.highlight, cols=args.cols), True


def _cmd_verify(args):
    rep = run_identity(args.identity, n_max=args.n_max, k_max=args.k_max, m_max=args.m_max,
                       trials=args.trials, seed=args.seed, dyck_max=args.dyck_max)
    return rep, rep.passed


def render(result, fmt):
    if isinstance(result, PascalTable):
        if fmt == "csv":
            return result.to_csv()
        if fmt == "text":
            return result.to_text()
        result = result.to_dict()
    elif isinstance(result, VerificationReport):
        result = result.to_dict()
    if fmt == "json":
        return json.dumps(result, separators=(",", ":")) + "\n"

    def flat(v):
        return v if isinstance(v, str) else json.dumps(v, separators=(",", ":"))

    if fmt == "csv":
        import csv

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in result.items():
            w.writerow([k, flat(v)])
        return buf.getvalue()
    return "".join(f"{k}: {flat(v)}\n" for k, v in result.items())


_COMMANDS = {
    "catalan": _cmd_catalan,
    "hessdet": _cmd_hessdet,
    "paths": _cmd_paths,
    "series": _cmd_series,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def run(argv):
    """Execute one command; returns (exit_code, stdout_text)."""
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(io.StringIO()) as help_out:
            args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 2, ""
    except SystemExit as exc:  # --help
        return (exc.code or 0), help_out.getvalue()
    try:
        result, ok = _COMMANDS[args.command](args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"catdet: error: {exc}", file=sys.stderr)
        return 2, ""
    except (CatdetError, OSError, json.JSONDecodeError) as exc:
        print(f"catdet: error: {exc}", file=sys.stderr)
        return 2, ""
    return (0 if ok else 1), render(result, args.format)


def main(argv=None):
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
