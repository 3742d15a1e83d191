"""Command line interface: ``laminations <command> [options]``.

Exit codes: 0 success, 1 property or domain failure, 2 input error,
3 precision exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import sys
from pathlib import Path

from . import io
from .compactify import PathPoint, run_compactify
from .errors import LaminationError, ParseError, PrecisionExhausted
from .flags import FlagConfig, a_chart, generate_positive
from .lattice import distance
from .laurent import MAX_PRECISION, precision
from .monodromy import c_lengths, loop_length, monodromy
from .transport import transport_chart
from .triangulation import all_triangulations, fan_triangulation
from .virtual import VirtualConfig, equivalent, good_lift, tropical_a_chart
from .xcoords import x_chart

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECISION = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


# -- input helpers ------------------------------------------------------------

def _load(args) -> object:
    if getattr(args, "input", None):
        return io.load_json(args.input)
    if getattr(args, "example", None):
        return io.load_example(args.example)
    raise ParseError("pass --input PATH or --example NAME")


def _config(args) -> FlagConfig:
    gen = getattr(args, "generate", None)
    if gen:
        try:
            m, n = (int(x) for x in gen.split(","))
        except ValueError as exc:
            raise ParseError("--generate expects M,N") from exc
        return generate_positive(m, n, args.seed)
    obj = _load(args)
    if isinstance(obj, dict) and "config" in obj:
        obj = obj["config"]
    return io.decode_config(obj)


def _triangulation(spec: str | None, n: int):
    if spec in (None, "fan"):
        return fan_triangulation(n)
    tri = io.decode_triangulation(io.load_json(spec))
    if tri.n != n:
        raise ParseError(f"triangulation is for a {tri.n}-gon, configuration has {n} flags")
    return tri


def _virtual(obj, tri_spec) -> VirtualConfig:
    if "points" in obj:
        return io.decode_virtual(obj)
    config = io.decode_config(obj)
    return good_lift(config, _triangulation(tri_spec, config.n)).virtual()


def _emit(payload: dict, rows: list[list] | None, fmt: str) -> None:
    if fmt == "csv" and rows is not None:
        buf = _io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(io.dumps(payload) + "\n")


def _chart_rows(chart) -> list[list]:
    rows = [["label", "value"]]
    for label, v in chart.labelled().items():
        rows.append([label, str(v) if not isinstance(v, int) else v])
    return rows


# -- commands -----------------------------------------------------------------

def cmd_coords(args) -> int:
    config = _config(args)
    evaluate = a_chart if args.kind == "A" else x_chart
    if args.triangulation == "all":
        # union of the charts of every triangulation (every edge and face function)
        tris = all_triangulations(config.n)
        chart = evaluate(config, tris[0])
        for tri in tris[1:]:
            other = evaluate(config, tri)
            chart.edges.update(other.edges)
            chart.faces.update(other.faces)
    else:
        chart = evaluate(config, _triangulation(args.triangulation, config.n))
    if args.tropical:
        chart = chart.tropicalize()
    _emit(io.encode_chart(chart), _chart_rows(chart), args.format)
    return EXIT_OK


def cmd_distance(args) -> int:
    obj = _load(args)
    try:
        l1, l2 = (io.decode_lattice(x) for x in obj["lattices"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("expected {\"lattices\": [L1, L2]}") from exc
    d12, d21 = distance(l1, l2), distance(l2, l1)
    payload = {"distance": d12.to_json(), "reverse": d21.to_json()}
    rows = [["direction", *[f"e{k}" for k in range(l1.m)]],
            ["forward", *d12.entries], ["reverse", *d21.entries]]
    _emit(payload, rows, args.format)
    return EXIT_OK


def cmd_goodlift(args) -> int:
    config = _config(args)
    tri = _triangulation(args.triangulation, config.n)
    lift = good_lift(config, tri)
    payload = lift.to_json()
    payload["ok"] = lift.ok
    payload["chart"] = io.encode_chart(tropical_a_chart(lift.virtual(), tri))
    rows = [["triangle", "index", "classical", "lattice"]]
    rows += [["-".join(map(str, e.triangle)), "-".join(map(str, e.index)), e.classical, e.lattice]
             for e in lift.certificate]
    _emit(payload, rows, args.format)
    return EXIT_OK if lift.ok else EXIT_FAIL


def cmd_equiv(args) -> int:
    obj = _load(args)
    try:
        first, second = obj["first"], obj["second"]
    except (KeyError, TypeError) as exc:
        raise ParseError("expected {\"first\": ..., \"second\": ...}") from exc
    vc1, vc2 = _virtual(first, args.triangulation), _virtual(second, args.triangulation)
    tri = _triangulation(args.triangulation, vc1.n)
    res = equivalent(vc1, vc2, tri)
    payload = {"equivalent": res.equivalent}
    if res.witness is not None:
        verts, idx = res.witness
        payload["witness"] = {"vertices": list(verts), "index": list(idx), "values": list(res.values)}
    rows = [["equivalent", "witness"], [res.equivalent, "" if res.witness is None else str(res.witness)]]
    _emit(payload, rows, args.format)
    return EXIT_OK if res.equivalent else EXIT_FAIL


def cmd_flip(args) -> int:
    config = _config(args)
    tri1 = _triangulation(args.triangulation, config.n)
    tri2 = _triangulation(args.to, config.n)
    tr = transport_chart(config, tri1, tri2)
    chart1, chart2 = (tr.tropical1, tr.tropical2) if args.tropical else (tr.chart1, tr.chart2)
    payload = {
        "from": io.encode_chart(chart1),
        "to": io.encode_chart(chart2),
        "audits": [{"diagonal": list(a.diagonal), "quadrilateral": list(a.quadrilateral), "checks": a.checks}
                   for a in tr.audits],
        "ok": tr.ok,
    }
    rows = [["diagonal", "check", "ok"]]
    rows += [["-".join(map(str, a.diagonal)), k, v] for a in tr.audits for k, v in a.checks.items()]
    _emit(payload, rows, args.format)
    return EXIT_OK if tr.ok else EXIT_FAIL


def cmd_monodromy(args) -> int:
    spec = io.decode_annulus(_load(args))
    md = monodromy(spec, args.power)
    d = loop_length(md)
    c = c_lengths(md)
    payload = {"matrix": io.encode_matrix(md.matrix), "length": d.to_json(), "c_lengths": c,
               "loop": md.loop_label}
    rows = [["quantity", "values"], ["length", " ".join(map(str, d.entries))], ["c_lengths", " ".join(map(str, c))]]
    _emit(payload, rows, args.format)
    return EXIT_OK


def cmd_compactify(args) -> int:
    obj = _load(args)
    try:
        coords = tuple(io.decode_series(x) for x in obj["coordinates"])
        labels = tuple(obj.get("labels", ()))
    except (KeyError, TypeError) as exc:
        raise ParseError("expected {\"coordinates\": [...]}") from exc
    try:
        path = PathPoint(coords, labels)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    report = run_compactify(path, args.s_max, args.samples)
    payload = report.to_json()
    if args.out:
        from .plotting import write_report
        payload["files"] = write_report(report, Path(args.out))
    labs = list(report.labels)
    rows = [["s", *labs, "deviation"]]
    devs = report.euclidean_deviations or [""] * len(report.s_values)
    rows += [[s, *r, d] for s, r, d in zip(report.s_values, report.normalized_log_coords, devs)]
    _emit(payload, rows, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import SUITES, run_verify
    if args.suite != "all" and args.suite not in SUITES:
        raise CliError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    reports = run_verify(args.suite, args.seed, args.cases)
    payload = {"seed": args.seed, "passed": all(r.passed for r in reports),
               "suites": [r.to_json() for r in reports]}
    rows = [["suite", "cases", "failures", "passed"]]
    rows += [[r.suite, r.cases, len(r.failures), r.passed] for r in reports]
    _emit(payload, rows, args.format)
    return EXIT_OK if payload["passed"] else EXIT_FAIL


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="JSON input file")
    common.add_argument("--example", metavar="NAME", help="bundled example (see 'examples' command)")
    common.add_argument("--triangulation", default="fan", metavar="fan|FILE")
    common.add_argument("--tropical", action="store_true", help="report -val of every value")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trunc", type=int, default=None, metavar="N", help="relative series precision")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    p = argparse.ArgumentParser(prog="laminations", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("coords", parents=[common], help="A- or X-chart of a flag configuration "
                       "(--triangulation all merges every triangulation)")
    s.add_argument("--kind", choices=("A", "X"), default="A")
    s.add_argument("--generate", metavar="M,N", help="use a generated positive configuration")
    s.set_defaults(func=cmd_coords)

    s = sub.add_parser("distance", parents=[common], help="coweight distance between two lattices")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("goodlift", parents=[common], help="good-lift search with audit certificate")
    s.add_argument("--generate", metavar="M,N")
    s.set_defaults(func=cmd_goodlift)

    s = sub.add_parser("equiv", parents=[common], help="equivalence of two (virtual) configurations")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("flip", parents=[common], help="charts on two triangulations with flip audits")
    s.add_argument("--to", default="fan", metavar="fan|FILE", help="target triangulation")
    s.add_argument("--generate", metavar="M,N")
    s.set_defaults(func=cmd_flip)

    s = sub.add_parser("monodromy", parents=[common], help="monodromy, length and c-lengths of an annulus")
    s.add_argument("--power", type=int, default=1)
    s.set_defaults(func=cmd_monodromy)

    s = sub.add_parser("compactify", parents=[common], help="log-compactification path report")
    s.add_argument("--s-max", type=float, default=60.0)
    s.add_argument("--samples", type=int, default=12)
    s.add_argument("--out", metavar="DIR", help="write CSV, gnuplot script and PNG here")
    s.set_defaults(func=cmd_compactify)

    s = sub.add_parser("verify", parents=[common], help="run randomized property suites")
    s.add_argument("--suite", default="all")
    s.add_argument("--cases", type=int, default=None, help="override the per-suite case count")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("examples", help="list bundled examples")
    s.set_defaults(func=lambda args: (print("\n".join(io.example_names())), EXIT_OK)[1])
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        trunc = getattr(args, "trunc", None)
        if trunc is not None:
            if not 1 <= trunc <= MAX_PRECISION:
                raise CliError(f"--trunc must be in 1..{MAX_PRECISION}")
            with precision(trunc):
                return args.func(args)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PrecisionExhausted as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except LaminationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
