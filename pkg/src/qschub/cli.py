"""Command line interface.

Subcommands: info, basis, lr, qmul, qtable, gw, count, nd, selfcheck.
Every command is total and exits with a defined code: 0 success, 1 failed
selfcheck, 2 parse error, 3 dimension/balance mismatch, 4 not computable
(out-of-scope query).  Errors print a single machine-greppable line to
stderr.  Each command builds one result payload; the text mode renders that
payload and the --json mode wraps it in a stable versioned document, so the
two encodings always carry identical data.  Nothing is written to disk
unless --json -o PATH is given.
"""

import argparse
import json
import sys
from pathlib import Path

from .counting import CountProblem, rational_curve_count
from .errors import (
    BoxError,
    NotComputableError,
    UnbalancedQueryError,
    UnsupportedFamilyError,
)
from .gromov_witten import GWQuery, gw_3point, gw_spoint
from .lr import lr_coefficient
from .partitions import Partition, format_partition, parse_partition
from .plane_curves import kontsevich_nd, nd_values
from .quantum import QuantumClass, quantum_product
from .selfcheck import run_selfcheck
from .spaces import Grassmannian, parse_space

SCHEMA_VERSION = 1


class _Parser(argparse.ArgumentParser):
    """argparse with single-line errors on stderr and exit code 2."""

    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> _Parser:
    parser = _Parser(prog="qschub", description="Exact quantum Schubert calculus on Grassmannians.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document instead of text")
    common.add_argument("-o", "--output", metavar="PATH", default=None,
                        help="write the JSON document to PATH (requires --json)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", parents=[common], help="describe a space")
    p.add_argument("space", help='space notation, e.g. "G(2,4)", "IG(2,6)", "OG(3,9)"')

    p = sub.add_parser("basis", parents=[common], help="list the Schubert basis of a type-A space")
    p.add_argument("space")

    p = sub.add_parser("lr", parents=[common], help="a Littlewood-Richardson coefficient")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("mu", metavar="MU")
    p.add_argument("nu", metavar="NU")

    p = sub.add_parser("qmul", parents=[common], help="quantum product of two Schubert classes")
    p.add_argument("space")
    p.add_argument("lam", metavar="LAMBDA")
    p.add_argument("mu", metavar="MU")

    p = sub.add_parser("qtable", parents=[common],
                       help="the full basis-by-basis quantum multiplication table")
    p.add_argument("space")

    p = sub.add_parser("gw", parents=[common], help="a Gromov-Witten invariant")
    p.add_argument("space")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("insertions", metavar="CLASS", nargs="+",
                   help='Schubert conditions as comma lists; "0" is the fundamental class, "pt" the point class')

    p = sub.add_parser(
        "count", parents=[common], help="number of rational curves meeting Schubert conditions",
        description="Counts degree-d rational curves incident to general translates of the given "
                    "Schubert conditions: the Gromov-Witten invariant divided by d^r, with r the "
                    "number of codimension-one conditions.  Note: on orthogonal Grassmannian "
                    "targets the degree-2 invariant with a codimension-one condition would be "
                    "twice the number of conics; isotropic quantum products are out of scope "
                    "here and such queries exit with code 4.")
    p.add_argument("space")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("conditions", metavar="COND", nargs="+")

    p = sub.add_parser("nd", parents=[common], help="rational plane curve counts N_d")
    p.add_argument("degree", metavar="D", nargs="?", type=int, default=None)
    p.add_argument("--upto", metavar="D", type=int, default=None,
                   help="print the whole table for d = 1..D")

    p = sub.add_parser("selfcheck", parents=[common], help="run the built-in invariant suites")
    p.add_argument("level", nargs="?", choices=("quick", "full"), default="quick")

    return parser


def _class_arg(text: str, space: Grassmannian) -> Partition:
    """A partition argument; "pt" is the point class of the space."""
    if text.strip() == "pt":
        return space.point_class()
    p = parse_partition(text)
    if not space.in_box(p):
        raise BoxError(
            f"partition {text.strip()} does not fit the {space.m}x{space.box_cols} "
            f"box of {space.notation}"
        )
    return p


def _terms_json(qc: QuantumClass) -> list[dict]:
    return [
        {"q": d, "partition": format_partition(p), "coeff": c}
        for d, p, c in qc.sorted_terms()
    ]


def _format_terms(terms: list[dict]) -> str:
    """Render a JSON term array as the text form, e.g. "s[2,2] + q*1"."""
    if not terms:
        return "0"
    pieces = []
    for term in terms:
        factors = []
        if term["coeff"] != 1:
            factors.append(str(term["coeff"]))
        if term["q"] == 1:
            factors.append("q")
        elif term["q"] > 1:
            factors.append(f"q^{term['q']}")
        if term["partition"] != "0":
            factors.append(f"s[{term['partition']}]")
        elif term["q"] > 0:
            factors.append("1")
        pieces.append("*".join(factors) if factors else "1")
    return " + ".join(pieces)


# -- command handlers: each returns (payload, space, exit_code) ------------


def _cmd_info(args):
    space = parse_space(args.space)
    data = space.to_json()
    data["critical_degree"] = space.critical_degree()
    if space.family == "A":
        data["dimension"] = space.dimension()
        data["c1_degree"] = space.c1_degree()
        data["box"] = {"rows": space.m, "cols": space.box_cols}
        data["basis_size"] = len(space.basis())
    else:
        data["k"] = space.k_value()
        data["maximal"] = space.is_maximal
    data["kernel_span"] = [
        {"d": d, "kernel": space.kernel_span_dims(d)[0], "span": space.kernel_span_dims(d)[1]}
        for d in range(1, min(space.critical_degree(), space.m) + 1)
    ]
    return data, space, 0


def _render_info(payload):
    lines = [f"space: {payload['notation']}", f"family: {payload['family']}",
             f"m: {payload['m']}", f"n: {payload['n']}",
             f"critical degree: {payload['critical_degree']}"]
    if payload["family"] == "A":
        lines += [f"dimension: {payload['dimension']}",
                  f"c1 degree: {payload['c1_degree']}",
                  f"box: {payload['box']['rows']}x{payload['box']['cols']}",
                  f"basis size: {payload['basis_size']}"]
    else:
        lines += [f"k: {payload['k']}", f"maximal: {str(payload['maximal']).lower()}"]
    lines += [
        f"kernel/span dims at d={entry['d']}: ({entry['kernel']}, {entry['span']})"
        for entry in payload["kernel_span"]
    ]
    return lines


def _cmd_basis(args):
    space = parse_space(args.space)
    return {"partitions": [format_partition(p) for p in space.basis()]}, space, 0


def _cmd_lr(args):
    lam, mu, nu = (parse_partition(t) for t in (args.lam, args.mu, args.nu))
    return {"coefficient": lr_coefficient(lam, mu, nu)}, None, 0


def _cmd_qmul(args):
    space = parse_space(args.space)
    lam = _class_arg(args.lam, space)
    mu = _class_arg(args.mu, space)
    return {"terms": _terms_json(quantum_product(lam, mu, space))}, space, 0


def _cmd_qtable(args):
    space = parse_space(args.space)
    basis = space.basis()
    rows = [
        {
            "left": format_partition(lam),
            "right": format_partition(mu),
            "terms": _terms_json(quantum_product(lam, mu, space)),
        }
        for lam in basis
        for mu in basis
    ]
    return {"rows": rows}, space, 0


def _cmd_gw(args):
    space = parse_space(args.space)
    insertions = tuple(_class_arg(t, space) for t in args.insertions)
    query = GWQuery(space, args.degree, insertions)
    if args.degree == 0:
        if len(insertions) != 3:
            raise NotComputableError("degree-0 invariants are computed for exactly 3 insertions")
        if not query.is_balanced():
            raise UnbalancedQueryError(
                f"codimensions sum to {query.total_codim()}, moduli dimension is "
                f"{space.moduli_dimension(3, 0)}"
            )
        value = gw_3point(space, insertions[0], insertions[1], insertions[2], 0)
    else:
        value = gw_spoint(query)
    payload = {
        "degree": args.degree,
        "insertions": [format_partition(p) for p in insertions],
        "value": value,
    }
    return payload, space, 0


def _cmd_count(args):
    space = parse_space(args.space)
    conditions = tuple(_class_arg(t, space) for t in args.conditions)
    result = rational_curve_count(CountProblem(space, args.degree, conditions))
    payload = {
        "gw": result.gw_value,
        "r": result.divisor_conditions,
        "count": result.curve_count,
    }
    return payload, space, 0


def _cmd_nd(args):
    if (args.degree is None) == (args.upto is None):
        raise ValueError("nd needs exactly one of: a degree argument, or --upto")
    if args.upto is not None:
        return {"values": [{"d": d, "value": n} for d, n in nd_values(args.upto)]}, None, 0
    return {"d": args.degree, "value": kontsevich_nd(args.degree)}, None, 0


def _render_nd(payload):
    if "values" in payload:
        return [f"{entry['d']}: {entry['value']}" for entry in payload["values"]]
    return [str(payload["value"])]


def _cmd_selfcheck(args):
    results = run_selfcheck(args.level)
    payload = {
        "level": args.level,
        "suites": [
            {
                "name": s.name,
                "checks": s.checks,
                "failed": len(s.failures),
                "failures": s.failures[:5],
            }
            for s in results
        ],
        "ok": all(s.ok for s in results),
    }
    return payload, None, 0 if payload["ok"] else 1


def _render_selfcheck(payload):
    lines = []
    for suite in payload["suites"]:
        if suite["failed"] == 0:
            lines.append(f"ok {suite['name']}: {suite['checks']} checks")
        else:
            lines.append(f"FAIL {suite['name']}: {suite['failed']} of {suite['checks']} failed")
            lines.extend(f"  {failure}" for failure in suite["failures"])
    lines.append(f"selfcheck {payload['level']}: {'PASS' if payload['ok'] else 'FAIL'}")
    return lines


_HANDLERS = {
    "info": _cmd_info,
    "basis": _cmd_basis,
    "lr": _cmd_lr,
    "qmul": _cmd_qmul,
    "qtable": _cmd_qtable,
    "gw": _cmd_gw,
    "count": _cmd_count,
    "nd": _cmd_nd,
    "selfcheck": _cmd_selfcheck,
}

_TEXT_RENDERERS = {
    "info": _render_info,
    "basis": lambda payload: list(payload["partitions"]),
    "lr": lambda payload: [str(payload["coefficient"])],
    "qmul": lambda payload: [_format_terms(payload["terms"])],
    "qtable": lambda payload: [
        f"s[{row['left']}] * s[{row['right']}] = {_format_terms(row['terms'])}"
        for row in payload["rows"]
    ],
    "gw": lambda payload: [str(payload["value"])],
    "count": lambda payload: [
        f"GW = {payload['gw']}, r = {payload['r']}, curves = {payload['count']}"
    ],
    "nd": _render_nd,
    "selfcheck": _render_selfcheck,
}


def render_text(command: str, payload: dict) -> list[str]:
    """The text-mode lines for a command's result payload (the same payload
    that --json wraps, so the two modes carry identical data)."""
    return _TEXT_RENDERERS[command](payload)


def parse_and_dispatch(argv: list[str]) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.output and not args.json:
        print("error: -o requires --json", file=sys.stderr)
        return 2
    try:
        payload, space, code = _HANDLERS[args.command](args)
    except (UnsupportedFamilyError, NotComputableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (BoxError, UnbalancedQueryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        doc = {
            "schema": SCHEMA_VERSION,
            "command": args.command,
            "space": space.to_json() if space is not None else None,
            "result": payload,
        }
        text = json.dumps(doc, indent=2)
        if args.output:
            Path(args.output).write_text(text + "\n", encoding="utf-8")
        else:
            print(text)
    else:
        for line in render_text(args.command, payload):
            print(line)
    return code


def main(argv=None) -> None:
    raise SystemExit(parse_and_dispatch(sys.argv[1:] if argv is None else list(argv)))
