"""Command line front end.

Subcommands: verify (theorem suite over a graph6 stream), survey (ratio
tables, never asserted), certify (extremal family audits), solve (exact
invariants), partition / construct (machinery for one graph), family
(generator access), check (set predicates). Exit status is 0 only when
every requested guarantee held.
"""

import argparse
import json
import sys

from .constructive import build_isolating_set, isolation_bound
from .errors import (
    CertificateError,
    Graph6ParseError,
    MachineryError,
    OrderCapError,
    ParameterError,
    PreconditionError,
    RegimeError,
    SizeCapError,
)
from .families import FAMILIES
from .graph import encode_graph6, parse_graph6
from .harness import (
    certify_families,
    certify_family,
    conjecture_survey,
    verify_stream,
    write_csv,
    write_json,
)
from .partition import compute_partition, refine_pairs, refine_twins, undominated_witnesses
from .predicates import (
    is_dominating,
    is_irredundant,
    is_k_isolating,
    is_maximal_irredundant,
)
from .solvers import gamma, iota, ir

USER_ERRORS = (
    Graph6ParseError,
    OrderCapError,
    ParameterError,
    PreconditionError,
    RegimeError,
    SizeCapError,
    CertificateError,
    MachineryError,
    ValueError,
)


def _read_lines(path):
    if path == "-":
        return [ln.rstrip("\n") for ln in sys.stdin]
    with open(path) as fh:
        return [ln.rstrip("\n") for ln in fh]


def _first_graph(path):
    for line in _read_lines(path):
        if line.strip():
            return parse_graph6(line)
    raise Graph6ParseError("no graph6 line found in input")


def _parse_vertex_set(text):
    if not text.strip():
        return ()
    return tuple(int(tok) for tok in text.replace(",", " ").split())


def _parse_params(text):
    params = {}
    if not text:
        return params
    for item in text.split(","):
        key, _, val = item.partition("=")
        if not _:
            raise ParameterError(f"expected key=value, got {item!r}")
        params[key.strip()] = int(val)
    return params


def _frac(f):
    return f"{f.numerator}/{f.denominator}"


def cmd_verify(args):
    report = verify_stream(
        _read_lines(args.g6),
        jobs=args.jobs,
        max_n=args.max_n,
        spot_check=not args.no_spot_check,
    )
    if args.csv:
        write_csv(report, args.csv)
    if args.json:
        write_json(report, args.json)
    agg = report.aggregate
    print(f"graphs checked: {agg['graphs']}")
    print(f"skipped (order above cap): {agg['skipped_over_max_n']}")
    print(f"parse errors: {agg['parse_error_count']}")
    for name, slot in agg["checks"].items():
        print(f"  {name}: {slot['passed']}/{slot['evaluated']}")
    for err in report.parse_errors:
        print(f"parse error at line {err['line_number']}: {err['error']}")
    if report.hard_failures:
        print(f"HARD FAILURES: {len(report.hard_failures)}")
        for msg in report.hard_failures[:50]:
            print(f"  {msg}")
        return 1
    print("all checks passed")
    return 0


def cmd_survey(args):
    out = conjecture_survey(
        _read_lines(args.g6), jobs=args.jobs, max_n=args.max_n, k_max=args.k_max
    )
    if args.json:
        write_json(out, args.json)
    print(f"graphs surveyed: {out['graphs']}")
    print("delta  k  max iota_k/ir  witness")
    for row in out["rows"]:
        print(
            f"{row['delta']:5d} {row['k']:2d}  {row['ratio']:>12s}  {row['witness']}"
        )
    for delta, ok in out["monotone_by_delta"].items():
        tag = "non-increasing" if ok else "NOT monotone"
        print(f"observed maxima for delta={delta}: {tag}")
    return 0


def cmd_certify(args):
    if args.family:
        grid = [(args.family, _parse_params(args.params))]
        report = certify_families(grid)
    else:
        report = certify_families()
    if args.json:
        write_json(
            {
                "aggregate": report.aggregate,
                "rows": report.records,
                "hard_failures": report.hard_failures,
            },
            args.json,
        )
    for row in report.records:
        bits = [f"{row['family']} {row['params']}: n={row['n']} delta={row['delta']}"]
        for key in ("gamma", "ir", "iota", "iota_lower", "iota_upper"):
            if key in row:
                bits.append(f"{key}={row[key]}")
        for key in ("gamma_certification", "ir_certification", "iota_certification"):
            if key in row:
                bits.append(f"{key.split('_')[0]}:{row[key]}")
        bits.append(row["status"])
        print("  ".join(bits))
    if report.hard_failures:
        print(f"HARD FAILURES: {len(report.hard_failures)}")
        for msg in report.hard_failures:
            print(f"  {msg}")
        return 1
    print("all instances certified")
    return 0


def cmd_solve(args):
    status = 0
    for line in _read_lines(args.g6):
        if not line.strip():
            continue
        try:
            g = parse_graph6(line)
            if args.invariant == "gamma":
                res = gamma(g)
            elif args.invariant == "ir":
                res = ir(g, force=args.force)
            else:
                if args.k is None:
                    raise ParameterError("--k is required for iota")
                res = iota(g, args.k)
            witness = " ".join(map(str, res.witness))
            print(f"{line.strip()} {args.invariant}={res.value} witness=[{witness}]")
        except USER_ERRORS as exc:
            print(f"{line.strip()} error: {exc}", file=sys.stderr)
            status = 1
    return status


def cmd_partition(args):
    g = _first_graph(args.g6)
    iset = _parse_vertex_set(args.iset)
    part = compute_partition(g, iset)
    for name in ("i", "u", "p", "s", "z", "a", "q", "b", "nset", "m", "nhat"):
        print(f"{name}: {' '.join(map(str, getattr(part, name))) or '-'}")
    for x in part.i:
        print(f"pn[{x}]: {' '.join(map(str, part.pn[x])) or '-'}")
    for wit in undominated_witnesses(g, iset, part):
        pairs = "; ".join(f"({a},{b})<-({c},{d})" for a, b, c, d in wit.pairs)
        print(f"witness u={wit.u} x={wit.x} pairs=[{pairs}]")
    delta = g.max_degree()
    if args.refine and delta >= 2:
        ref = refine_pairs(g, iset, part, delta - 1)
        print(f"pairs: s={ref.s_param} anchor={ref.anchor} x={list(ref.x)}")
    if args.refine and delta >= 3:
        ref2 = refine_twins(g, iset, part, delta - 2)
        print(
            f"twins: isolated={ref2.isolated_count} twin={ref2.twin_count} "
            f"x={list(ref2.x)}"
        )
    return 0


def cmd_construct(args):
    g = _first_graph(args.g6)
    iset = _parse_vertex_set(args.iset)
    cert = build_isolating_set(g, iset, args.k)
    print(f"regime: {cert.regime}")
    print(f"t: {' '.join(map(str, cert.t)) or '-'}")
    print(f"size: {len(cert.t)}  bound: {_frac(cert.bound)}  s: {cert.s_param}")
    print(f"bound satisfied: {cert.satisfied}")
    print(f"isolating verified: {cert.isolating_verified}")
    return 0 if cert.satisfied and cert.isolating_verified else 1


def cmd_family(args):
    gen = FAMILIES.get(args.name)
    if gen is None:
        raise ParameterError(
            f"unknown family {args.name!r}; choices: {' '.join(sorted(FAMILIES))}"
        )
    inst = gen(**_parse_params(args.params))
    g = inst.graph
    print(
        f"{inst.name} {json.dumps(inst.params, sort_keys=True)}: "
        f"n={g.n} m={g.edge_count()} delta={g.max_degree()} k={inst.k}"
    )
    for label, value in (
        ("claimed ir", inst.claimed_ir),
        ("claimed gamma", inst.claimed_gamma),
        ("claimed iota", inst.claimed_iota),
    ):
        if value is not None:
            print(f"{label}: {value}")
    if args.emit_g6:
        print(encode_graph6(g))
    if args.emit_witnesses:
        for label, wit in (
            ("irredundant", inst.witness_irredundant),
            ("isolating", inst.witness_isolating),
            ("dominating", inst.witness_dominating),
        ):
            if wit is not None:
                print(f"witness {label}: {' '.join(map(str, wit))}")
        if inst.designated_cliques is not None:
            for cq in inst.designated_cliques:
                print(f"designated clique: {' '.join(map(str, cq))}")
    return 0


def cmd_check(args):
    g = _first_graph(args.g6)
    vset = _parse_vertex_set(args.set)
    if args.predicate == "dominating":
        ok = is_dominating(g, vset)
    elif args.predicate == "irredundant":
        ok = is_irredundant(g, vset)
    elif args.predicate == "maximal-irredundant":
        ok = is_maximal_irredundant(g, vset)
    else:
        if args.k is None:
            raise ParameterError("--k is required for the isolating predicate")
        ok = is_k_isolating(g, vset, args.k)
    print("true" if ok else "false")
    return 0 if ok else 1


def cmd_bound(args):
    b = isolation_bound(args.k, args.delta, args.ir, s=args.s)
    print(_frac(b))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="isobound",
        description="exact domination, irredundance, and isolation machinery",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_g6(p):
        p.add_argument("--g6", default="-", help="graph6 file, or - for stdin")

    p = sub.add_parser("verify", help="run the full check suite over a graph6 stream")
    add_g6(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--json", default=None, help="write the aggregate report here")
    p.add_argument("--csv", default=None, help="write per-graph records here")
    p.add_argument("--no-spot-check", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", help="tabulate observed iota_k/ir maxima")
    add_g6(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("certify", help="audit extremal family instances")
    p.add_argument("--family", default=None, choices=sorted(FAMILIES))
    p.add_argument("--params", default="", help="comma separated key=value")
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("solve", help="exact gamma, ir, or iota values")
    add_g6(p)
    p.add_argument("--invariant", required=True, choices=("gamma", "ir", "iota"))
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--force", action="store_true", help="lift the ir order cap")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("partition", help="decompose around a maximal irredundant set")
    add_g6(p)
    p.add_argument("--iset", required=True, help="comma separated vertices")
    p.add_argument("--refine", action="store_true", help="also run both refinements")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("construct", help="build and certify a k-isolating set")
    add_g6(p)
    p.add_argument("--iset", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("family", help="generate an extremal family instance")
    p.add_argument("--name", required=True)
    p.add_argument("--params", default="")
    p.add_argument("--emit-g6", action="store_true")
    p.add_argument("--emit-witnesses", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("check", help="test a vertex set against a predicate")
    add_g6(p)
    p.add_argument("--set", required=True, help="comma separated vertices")
    p.add_argument(
        "--predicate",
        required=True,
        choices=("dominating", "irredundant", "maximal-irredundant", "isolating"),
    )
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bound", help="evaluate the certified iota bound")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--ir", type=int, required=True)
    p.add_argument("--s", type=int, default=None)
    p.set_defaults(func=cmd_bound)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
