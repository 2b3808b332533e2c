"""Command line interface.

Exit codes: 0 success, 1 assertion failure, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import InvariantError, LcmDepthError, ParseError, ResourceCapError
from .experiments import (
    ExperimentConfig,
    check_bounds,
    conjecture_sweep,
    reproduce_paper_examples,
    sweep,
)
from .homology import DEFAULT_PRIME, betti_via_lcm_lattice, depth_and_pd, multigraded_betti
from .io import (
    complex_to_json,
    complex_to_text,
    ideal_to_json,
    ideal_to_text,
    parse_complex,
    parse_ideal,
    read_text,
)
from .lattice import build_lcm_lattice, export_lattice, join_irreducibles, lattice_length
from .monomial import format_monomial, lcm_chain
from .orderdim import FinitePoset, embed_from_realizer, order_dimension
from .simplicial import complex_from_squarefree_ideal, is_vertex_decomposable, stanley_reisner_ideal
from .stanley import characteristic_poset, sdepth_exact, verify_certificate

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _write(path: str | None, text: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def _field(value: str):
    v = value.lower()
    if v == "q":
        return "Q"
    if v == "p":
        return DEFAULT_PRIME
    try:
        return int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"field must be q, p or a prime, got {value!r}") from None


def _load_quotient(args):
    data = parse_ideal(read_text(args.input))
    return data, data.quotient("ring" if getattr(args, "ring", False) else "ideal")


def _load_ideal(args):
    data = parse_ideal(read_text(args.input))
    if data.denominator is not None:
        raise ParseError("this command takes a single ideal, not a quotient")
    return data


def cmd_lcm_number(args) -> int:
    data, Q = _load_quotient(args)
    chain = lcm_chain(Q)
    print(f"lcm number: {len(chain)}")
    print("witness: " + ", ".join(format_monomial(u, data.names) for u in chain))
    return EXIT_OK


def cmd_lcm_lattice(args) -> int:
    data, Q = _load_quotient(args)
    L = build_lcm_lattice(Q)
    if args.dot or args.json:
        text = export_lattice(L, "dot" if args.dot else "json", data.names)
        if args.output:
            _write(args.output, text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    print(f"elements: {len(L)}")
    print(f"length: {lattice_length(L)}")
    print("join-irreducibles: " + ", ".join(L.label(i, data.names) for i in join_irreducibles(L)))
    for i in range(len(L)):
        marks = ",".join(sorted(L.marks[i]))
        print(f"  {i:3d} {L.label(i, data.names)}" + (f"  [{marks}]" if marks else ""))
    return EXIT_OK


def cmd_order_dim(args) -> int:
    if args.poset:
        P = FinitePoset.from_json(read_text(args.input))
    else:
        _, Q = _load_quotient(args)
        P = FinitePoset.from_lattice(build_lcm_lattice(Q))
    res = order_dimension(P, args.dmax)
    print(f"order dimension: {res.dimension}")
    if res.refuted_below:
        print(f"no realizer of size {res.dimension - 1} (complete search, {res.nodes} nodes)")
    for k, ext in enumerate(res.realizer.extensions):
        print(f"  L{k + 1}: " + " < ".join(str(P.labels[e]) for e in ext))
    if args.json:
        E = embed_from_realizer(P, res.realizer)
        doc = {
            "dimension": res.dimension,
            "realizer": json.loads(res.realizer.to_json()),
            "embedding": json.loads(E.to_json()),
            "labels": [str(x) for x in P.labels],
        }
        _write(args.json, json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_sdepth(args) -> int:
    data, Q = _load_quotient(args)
    g = None
    if args.g:
        g = tuple(int(x) for x in args.g.split(","))
    cert = sdepth_exact(Q, g)
    P = characteristic_poset(Q, g)
    if not verify_certificate(P, cert):
        raise InvariantError("certificate failed verification")
    print(f"sdepth: {cert.value}")
    print(f"box g: {list(cert.g)} ({len(P)} points, {len(cert.intervals)} intervals)")
    for u, Z in cert.stanley_spaces():
        zs = ",".join(data.names[i] for i in Z)
        print(f"  {format_monomial(u, data.names)} K[{zs}]")
    _write(args.json, cert.to_json() + "\n")
    return EXIT_OK


def cmd_depth(args) -> int:
    data = _load_ideal(args)
    dd = depth_and_pd(data.ideal, args.field)
    print(f"pd(S/I): {dd.pd_SI}")
    print(f"depth(S/I): {dd.depth_SI}")
    print(f"depth(I): {dd.depth_I}")
    _write(args.json, json.dumps({"pd_SI": dd.pd_SI, "depth_SI": dd.depth_SI, "depth_I": dd.depth_I}) + "\n")
    return EXIT_OK


def cmd_betti(args) -> int:
    data = _load_ideal(args)
    if args.route == "lattice":
        table = betti_via_lcm_lattice(data.ideal, args.field)
    else:
        table = multigraded_betti(data.ideal, args.field).to_quotient()
    print("Betti numbers of S/I")
    for (i, a), v in table.sorted_entries():
        print(f"  b_{i},{format_monomial(a, data.names)} = {v}")
    print("totals: " + " ".join(f"{i}:{v}" for i, v in table.totals().items()))
    _write(args.json, table.to_json() + "\n")
    return EXIT_OK


def cmd_sr_ideal(args) -> int:
    D = parse_complex(read_text(args.input))
    I = stanley_reisner_ideal(D)
    sys.stdout.write(ideal_to_text(I))
    _write(args.json, ideal_to_json(I) + "\n")
    return EXIT_OK


def cmd_sr_complex(args) -> int:
    data = _load_ideal(args)
    D = complex_from_squarefree_ideal(data.ideal)
    sys.stdout.write(complex_to_text(D))
    _write(args.json, complex_to_json(D) + "\n")
    return EXIT_OK


def _tree_lines(t, depth=0):
    pad = "  " * depth
    if t.vertex is None:
        return [f"{pad}simplex {[sorted(v + 1 for v in f) for f in t.facets]}"]
    out = [f"{pad}shed vertex {t.vertex + 1}"]
    out.append(f"{pad} link:")
    out += _tree_lines(t.link, depth + 1)
    out.append(f"{pad} deletion:")
    out += _tree_lines(t.deletion, depth + 1)
    return out


def cmd_vertex_decomposable(args) -> int:
    D = parse_complex(read_text(args.input))
    res = is_vertex_decomposable(D)
    print(f"vertex decomposable: {'yes' if res else 'no'}")
    if res:
        print("\n".join(_tree_lines(res.witness)))
    else:
        print(f"refuted exhaustively over {res.explored} subcomplexes")
    return EXIT_OK


def _emit_report(report, args) -> int:
    sys.stdout.write(report.to_text())
    _write(args.json, report.to_json())
    _write(args.csv, report.to_csv())
    if not report.ok:
        return EXIT_FAIL
    if any(r.status == "skipped" for r in report.rows):
        return EXIT_CAP
    return EXIT_OK


def cmd_check_bounds(args) -> int:
    from .experiments import BoundReport

    _, Q = _load_quotient(args)
    cfg = ExperimentConfig(n=Q.n, d_max=args.dmax)
    row = check_bounds(Q, cfg, 0, args.witness_dir)
    return _emit_report(BoundReport({"kind": "check-bounds", "version": __version__}, [row]), args)


def cmd_sweep(args) -> int:
    cfg = ExperimentConfig(
        seed=args.seed,
        n=args.n,
        max_exponent=args.max_exponent,
        max_generators=args.max_generators,
        squarefree=args.squarefree,
        count=args.count,
        shapes=tuple(args.shapes.split(",")),
        d_max=args.dmax,
        time_budget=args.time_budget,
        field=args.field,
        complex_vertices=args.complex_vertices,
        complex_count=args.complex_count,
        exhaustive_complexes_up_to=args.exhaustive_complexes,
    )
    report = conjecture_sweep(cfg) if args.conjecture else sweep(cfg, args.witness_dir)
    return _emit_report(report, args)


def cmd_reproduce(args) -> int:
    items = reproduce_paper_examples()
    for it in items:
        mark = "ok  " if it.ok else "FAIL"
        print(f"{mark} {it.name}: expected {it.expected}, got {it.actual}")
    bad = [it for it in items if not it.ok]
    print(f"{len(items) - len(bad)}/{len(items)} items match")
    doc = [{"name": it.name, "expected": it.expected, "actual": it.actual, "ok": it.ok} for it in items]
    _write(args.json, json.dumps(doc, indent=2, default=str) + "\n")
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcmdepth", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p, ring=True):
        p.add_argument("input", help="input file, or - for standard input")
        if ring:
            p.add_argument("--ring", action="store_true", help="treat the ideal I as the quotient ring S/I")
        return p

    p = with_input(sub.add_parser("lcm-number", help="lcm number with a witness chain"))
    p.set_defaults(func=cmd_lcm_number)

    p = with_input(sub.add_parser("lcm-lattice", help="the lcm lattice"))
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_lcm_lattice)

    p = with_input(sub.add_parser("order-dim", help="order dimension of the lcm lattice"))
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--poset", action="store_true", help="input is poset JSON {n, leq}")
    p.add_argument("--json", help="write realizer and embedding here")
    p.set_defaults(func=cmd_order_dim)

    p = with_input(sub.add_parser("sdepth", help="exact Stanley depth with certificate"))
    p.add_argument("--g", help="box corner e1,..,en (default: lcm of generators)")
    p.add_argument("--json", help="write the certificate here")
    p.set_defaults(func=cmd_sdepth)

    p = with_input(sub.add_parser("depth", help="pd and depth of S/I and I"), ring=False)
    p.add_argument("--field", type=_field, default="Q")
    p.add_argument("--json")
    p.set_defaults(func=cmd_depth)

    p = with_input(sub.add_parser("betti", help="multigraded Betti numbers of S/I"), ring=False)
    p.add_argument("--field", type=_field, default="Q", help="q (rationals), p (32003) or a prime")
    p.add_argument("--route", choices=("koszul", "lattice"), default="koszul")
    p.add_argument("--json")
    p.set_defaults(func=cmd_betti)

    p = with_input(sub.add_parser("sr-ideal", help="Stanley-Reisner ideal of a complex"), ring=False)
    p.add_argument("--json")
    p.set_defaults(func=cmd_sr_ideal)

    p = with_input(sub.add_parser("sr-complex", help="complex of a squarefree ideal"), ring=False)
    p.add_argument("--json")
    p.set_defaults(func=cmd_sr_complex)

    p = with_input(sub.add_parser("vertex-decomposable", help="vertex decomposability with witness"), ring=False)
    p.set_defaults(func=cmd_vertex_decomposable)

    p = with_input(sub.add_parser("check-bounds", help="all invariants and inequalities for one input"))
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--witness-dir")
    p.add_argument("--json")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_check_bounds)

    p = sub.add_parser("sweep", help="randomized bound verification")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--max-exponent", type=int, default=2)
    p.add_argument("--max-generators", type=int, default=4)
    p.add_argument("--squarefree", action="store_true")
    p.add_argument("--shapes", default="ideal,ring,proper")
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--time-budget", type=float)
    p.add_argument("--field", type=_field, default="Q")
    p.add_argument("--conjecture", action="store_true", help="run the Stanley-inequality sweep instead")
    p.add_argument("--complex-vertices", type=int, default=5)
    p.add_argument("--complex-count", type=int, default=0)
    p.add_argument("--exhaustive-complexes", type=int, default=0, metavar="N",
                   help="also check every complex on up to N vertices")
    p.add_argument("--witness-dir")
    p.add_argument("--json")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce-paper", help="recompute the worked examples")
    p.add_argument("--json")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantError as exc:
        print(f"assertion failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (LcmDepthError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
