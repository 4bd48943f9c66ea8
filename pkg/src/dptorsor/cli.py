"""Command-line entry point.

Subcommands emit root-system data, representation data, curve-class
tables, cone equations, torsor presentations, and verification reports.
Every data-emitting subcommand is deterministic: the same subcommand,
flags, and seed produce byte-identical output.  Exit status is 0 on
success, 1 when a verification check fails, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gpideal import cone_ideal
from .minrep import build_grading, build_minuscule_rep
from .picard import (conic_classes, conic_dictionary, exceptional_classes,
                     graph_automorphism_order, incidence_graph)
from .polyalg import q_str
from .rootsys import (SYSTEMS, build_root_system, system_of_degree,
                      weyl_group_order, weyl_orbit)
from .torsor import build_torsor
from .verify import SUITES, format_report, run_suite

DEGREES = (5, 4, 3, 2)


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"seed must be an integer, not {text!r}") from exc
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _trials(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"trial count must be an integer, not {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError("trial count must be non-negative")
    return value


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _poly_text(poly) -> str:
    bits = []
    for m, c in poly.sorted_terms():
        mono = "*".join(f"x{i}" for i in m) or "1"
        sign, mag = ("-", -c) if c < 0 else ("+", c)
        bits.append(f"{sign} " + (mono if mag == 1 else f"{q_str(mag)}*{mono}"))
    return " ".join(bits) if bits else "0"


def _class_text(c) -> str:
    return f"({c[0]}; {' '.join(str(b) for b in c[1:])})"


def _cmd_roots(args) -> int:
    rs = build_root_system(args.system)
    omega = rs.highest_weight()
    omega1 = rs.first_fundamental_weight()
    doc = {
        "system": rs.system,
        "rank": rs.rank,
        "marked_node": rs.marked,
        "cartan": [list(row) for row in rs.cartan],
        "positive_roots": [list(r) for r in rs.positive_roots],
        "marked_weight": list(omega),
        "weyl_order": weyl_group_order(rs),
        "orbit_sizes": {
            "marked_weight": len(weyl_orbit(rs, omega)),
            "first_fundamental_weight": len(weyl_orbit(rs, omega1)),
        },
    }
    if args.json:
        _emit(_json_dump(doc), args.out)
        return 0
    lines = [f"system {rs.system}  rank {rs.rank}  marked node {rs.marked}",
             f"Weyl group order {doc['weyl_order']}",
             "Cartan matrix:"]
    lines += ["  " + " ".join(f"{v:2d}" for v in row) for row in rs.cartan]
    lines.append(f"positive roots ({len(rs.positive_roots)}):")
    lines += [f"  {r}" for r in rs.positive_roots]
    lines.append(f"marked fundamental weight: {omega}")
    lines.append(f"orbit sizes: marked weight {doc['orbit_sizes']['marked_weight']}, "
                 f"first fundamental weight {doc['orbit_sizes']['first_fundamental_weight']}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_rep(args) -> int:
    rep = build_minuscule_rep(args.system)
    grading = build_grading(args.system)
    level_of = {i: lvl for lvl, block in enumerate(grading.levels) for i in block}
    if args.json:
        operators = {}
        for node in range(1, rep.rs.rank + 1):
            operators[str(node)] = {
                "raising": [[list(rep.weights[dst]), list(rep.weights[src]), sign]
                            for src, (dst, sign) in sorted(rep.raising[node].items())],
                "lowering": [[list(rep.weights[dst]), list(rep.weights[src]), sign]
                             for src, (dst, sign) in sorted(rep.lowering[node].items())],
            }
        doc = {
            "system": args.system,
            "dim": rep.dim,
            "weights": [list(w) for w in rep.weights],
            "grading_sizes": list(grading.sizes()),
            "levels": [list(block) for block in grading.levels],
            "operators": operators,
        }
        _emit(_json_dump(doc), args.out)
        return 0
    sizes = list(grading.sizes())
    while sizes and sizes[-1] == 0:
        sizes.pop()
    lines = [f"system {args.system}  dim {rep.dim}",
             "grading sizes: " + " + ".join(str(s) for s in sizes),
             f"weights ({rep.dim}):"]
    for i, w in enumerate(rep.weights):
        tag = f"  level {level_of[i]}" if args.grading else ""
        lines.append(f"  x{i} = {w}{tag}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_curves(args) -> int:
    system = system_of_degree(args.degree)
    r = build_root_system(system).rank
    exceptional = exceptional_classes(r)
    conics = conic_classes(r)
    graph = incidence_graph(r)
    order = graph_automorphism_order(graph)
    doc = {
        "degree": args.degree,
        "rank": r,
        "exceptional_count": len(exceptional),
        "conic_count": len(conics),
        "automorphism_order": order,
        "exceptional_classes": [list(c) for c in exceptional],
        "conic_classes": [list(c) for c in conics],
    }
    if args.graph:
        doc["incidence_labels"] = [list(row) for row in graph.labels]
    if args.json:
        _emit(_json_dump(doc), args.out)
        return 0
    lines = [f"degree {args.degree} (rank {r}): {len(exceptional)} exceptional classes, "
             f"{len(conics)} conic classes",
             f"incidence-graph automorphism order: {order}",
             "exceptional classes:"]
    lines += [f"  {_class_text(c)}" for c in exceptional]
    lines.append("conic classes:")
    lines += [f"  {_class_text(c)}" for c in conics]
    if args.graph:
        lines.append("incidence labels:")
        lines += ["  " + " ".join(f"{v:2d}" for v in row) for row in graph.labels]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_cone_equations(args) -> int:
    ideal = cone_ideal(args.system)
    conic_of = conic_dictionary(args.system)
    if args.json:
        doc = {
            "system": args.system,
            "generators": [
                {"mu": list(mu),
                 "conic_class": list(conic_of[mu]),
                 "poly": ideal.generators[mu].poly.to_json()}
                for mu in ideal.generator_weights
            ],
            "zero_generators": [p.to_json() for p in ideal.zero_generators],
        }
        _emit(_json_dump(doc), args.out)
        return 0
    lines = [f"system {args.system}: {len(ideal.generator_weights)} generators"
             + (f" + {len(ideal.zero_generators)} zero-weight generators"
                if ideal.zero_generators else "")]
    for mu in ideal.generator_weights:
        lines.append(f"mu {mu}  conic {_class_text(conic_of[mu])}:")
        lines.append(f"  {_poly_text(ideal.generators[mu].poly)}")
    for k, poly in enumerate(ideal.zero_generators):
        lines.append(f"zero-weight generator {k}:")
        lines.append(f"  {_poly_text(poly)}")
    lines.append("variables:")
    lines += [f"  x{i} = {w}" for i, w in enumerate(ideal.rep.weights)]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_build_torsor(args) -> int:
    presentation = build_torsor(args.degree, args.seed)
    _emit(presentation.to_json(), args.out)
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed, exp_trials=args.exp_trials,
                        product_trials=args.product_trials,
                        plucker_trials=args.plucker_trials, degree=args.degree)
    _emit(format_report(results, args.format), args.out)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dptorsor",
        description="exact universal-torsor presentations for del Pezzo surfaces "
                    "of degree 5, 4, 3, 2")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_out(p):
        p.add_argument("--out", "-o", metavar="FILE", default=None,
                       help="write output to FILE instead of stdout")

    p = sub.add_parser("roots", help="Cartan matrix, positive roots, and orbit sizes")
    p.add_argument("--system", choices=SYSTEMS, required=True)
    p.add_argument("--json", action="store_true")
    add_out(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("rep", help="minuscule representation data")
    p.add_argument("--system", choices=SYSTEMS, required=True)
    p.add_argument("--grading", action="store_true",
                   help="annotate each weight with its grading level")
    p.add_argument("--json", action="store_true",
                   help="emit weights, grading, and operator entries as JSON")
    add_out(p)
    p.set_defaults(func=_cmd_rep)

    p = sub.add_parser("curves", help="exceptional and conic curve classes")
    p.add_argument("--degree", type=int, choices=DEGREES, required=True)
    p.add_argument("--graph", action="store_true",
                   help="include the incidence label matrix")
    p.add_argument("--json", action="store_true")
    add_out(p)
    p.set_defaults(func=_cmd_curves)

    p = sub.add_parser("cone-equations",
                       help="quadratic generators of the affine-cone ideal")
    p.add_argument("--system", choices=SYSTEMS, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true", help="plain text (default)")
    add_out(p)
    p.set_defaults(func=_cmd_cone_equations)

    p = sub.add_parser("build-torsor",
                       help="build the torsor presentation for a degree")
    p.add_argument("--degree", type=int, choices=DEGREES, required=True)
    p.add_argument("--seed", type=_u64, default=0)
    add_out(p)
    p.set_defaults(func=_cmd_build_torsor)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--degree", type=int, choices=DEGREES, default=2,
                   help="most-blown-up degree the torsor checks descend to")
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--exp-trials", type=_trials, default=100, metavar="N")
    p.add_argument("--product-trials", type=_trials, default=20, metavar="N")
    p.add_argument("--plucker-trials", type=_trials, default=200, metavar="N")
    add_out(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
