"""Command-line front end: ``drghosoya array|srg|verify``.

Exit status: 0 on success (including ``oracle_only``), 2 on bad input,
3 when the closed form and the BFS oracle disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from dataclasses import dataclass, field
from typing import Sequence

from . import graphs, intersection
from .families import DEFAULT_MAX_VERTICES, BadParams, FamilySpec, SizeLimit
from .intersection import (
    FeasibilityWarning,
    HardInvalid,
    IntersectionArray,
    SrgParams,
    RelationViolated,
)
from .polynomial import IntPolynomial, evaluate, render

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3

CLOSED_FORM_ONLY = "closed_form_only"
ORACLE_ONLY = "oracle_only"
VERIFIED_MATCH = "verified_match"
MISMATCH = "mismatch"


class InputError(Exception):
    """Raised for any input problem that maps to exit status 2."""


@dataclass
class Report:
    source: dict
    n: int
    diameter: int
    array: IntersectionArray | None
    hosoya: IntPolynomial
    wiener: int
    hyper_wiener: int
    verification: str
    witness: dict | None = None
    extra: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        d = {
            "source": self.source,
            "n": str(self.n),
            "diameter": self.diameter,
            "intersection_array": None
            if self.array is None
            else {"b": [str(x) for x in self.array.b], "c": [str(x) for x in self.array.c]},
            "hosoya": [str(c) for c in self.hosoya.coeffs],
            "wiener": str(self.wiener),
            "hyper_wiener": str(self.hyper_wiener),
            "verification": self.verification,
            "witness": self.witness,
        }
        d.update(self.extra)
        return d


def _first_difference(a: IntPolynomial, b: IntPolynomial) -> int | None:
    for i in range(max(len(a), len(b))):
        if a[i] != b[i]:
            return i
    return None


def cmd_array(b: Sequence[int], c: Sequence[int], declared_n: int | None = None) -> tuple[Report, list[str]]:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", FeasibilityWarning)
        a = intersection.validate(b, c)
    notes = [str(w.message) for w in caught if issubclass(w.category, FeasibilityWarning)]
    n = intersection.sphere_sizes(a).n
    if declared_n is not None and declared_n != n:
        raise InputError(f"declared n = {declared_n} but the array determines n = {n}")
    report = Report(
        source={"kind": "array", "b": [str(x) for x in b], "c": [str(x) for x in c]},
        n=n,
        diameter=a.diameter,
        array=a,
        hosoya=intersection.hosoya_closed_form(a),
        wiener=intersection.wiener_closed_form(a),
        hyper_wiener=intersection.hyper_wiener_closed_form(a),
        verification=CLOSED_FORM_ONLY,
    )
    return report, notes


def cmd_srg(n: int, k: int, lam: int, mu: int) -> Report:
    p = SrgParams(n, k, lam, mu)
    feasible = intersection.srg_feasibility(p)
    if not feasible:
        raise InputError(f"SRG({n},{k},{lam},{mu}) infeasible: {feasible.reason}")
    a = intersection.srg_to_array(p)
    ratio_form = intersection.srg_hosoya(p)
    simplified = intersection.srg_hosoya_simplified(p)
    general = intersection.hosoya_closed_form(a)
    if not ratio_form == simplified == general:
        raise AssertionError(f"SRG forms disagree: {ratio_form} / {simplified} / {general}")
    return Report(
        source={"kind": "srg", "n": str(n), "k": str(k), "lambda": str(lam), "mu": str(mu)},
        n=n,
        diameter=2,
        array=a,
        hosoya=ratio_form,
        wiener=intersection.wiener_closed_form(a),
        hyper_wiener=intersection.hyper_wiener_closed_form(a),
        verification=CLOSED_FORM_ONLY,
        extra={
            "srg_forms": {
                "ratio": [str(x) for x in ratio_form.coeffs],
                "simplified": [str(x) for x in simplified.coeffs],
            }
        },
    )


def cmd_verify(
    family: str | None = None,
    path: str | None = None,
    declared_n: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Report:
    if (family is None) == (path is None):
        raise InputError("give exactly one of a family spec or an edge-list file")
    if family is not None:
        spec = FamilySpec.parse(family)
        g = spec.build(max_vertices=max_vertices)
        source = {"kind": "family", "family": str(spec)}
    else:
        try:
            g = graphs.read_edge_list(path, declared_n)
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror or e}") from None
        if g.n > max_vertices:
            raise SizeLimit("edge list", g.n, max_vertices)
        source = {"kind": "file", "path": str(path)}

    oracle = graphs.hosoya_oracle(g)  # raises Disconnected
    try:
        a = graphs.check_distance_regular(g)
    except graphs.NotDistanceRegularError as rejection:
        return Report(
            source=source,
            n=g.n,
            diameter=oracle.degree,
            array=None,
            hosoya=oracle,
            wiener=graphs.wiener_oracle(g),
            hyper_wiener=graphs.hyper_wiener_oracle(g),
            verification=ORACLE_ONLY,
            witness=rejection.witness(),
        )

    closed = intersection.hosoya_closed_form(a)
    pairs = [
        ("hosoya", closed, oracle),
        ("wiener", intersection.wiener_closed_form(a), graphs.wiener_oracle(g)),
        ("hyper_wiener", intersection.hyper_wiener_closed_form(a), graphs.hyper_wiener_oracle(g)),
        ("n", intersection.sphere_sizes(a).n, g.n),
    ]
    witness = None
    for name, cf, orc in pairs:
        if cf != orc:
            witness = {"quantity": name, "closed_form": str(cf), "oracle": str(orc)}
            if name == "hosoya":
                witness["first_differing_power"] = _first_difference(cf, orc)
            break
    return Report(
        source=source,
        n=g.n,
        diameter=a.diameter,
        array=a,
        hosoya=oracle,
        wiener=graphs.wiener_oracle(g),
        hyper_wiener=graphs.hyper_wiener_oracle(g),
        verification=VERIFIED_MATCH if witness is None else MISMATCH,
        witness=witness,
    )


def format_text(r: Report) -> str:
    lines = [f"source: {json.dumps(r.source)}", f"n = {r.n}", f"diameter = {r.diameter}"]
    if r.array is not None:
        lines.append(f"intersection array = {r.array}")
    lines.append(f"H(G,t) = {render(r.hosoya)}")
    if "srg_forms" in r.extra:
        forms = r.extra["srg_forms"]
        lines.append(f"  (n*k/2)(t + (k-lambda-1)/mu t^2) = {render(IntPolynomial(map(int, forms['ratio'])))}")
        lines.append(f"  (n/2)(k t + (n-k-1) t^2)        = {render(IntPolynomial(map(int, forms['simplified'])))}")
    lines.append(f"H(G,1) = {evaluate(r.hosoya, 1)}")
    lines.append(f"W(G) = {r.wiener}")
    lines.append(f"WW(G) = {r.hyper_wiener}")
    lines.append(f"verification: {r.verification}")
    if r.witness is not None:
        lines.append(f"witness: {json.dumps(r.witness)}")
    return "\n".join(lines) + "\n"


def format_json(r: Report) -> str:
    return json.dumps(r.to_json_dict(), indent=2) + "\n"


def format_csv(r: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "pairs"])
    for k in range(1, len(r.hosoya)):
        w.writerow([k, r.hosoya[k]])
    return buf.getvalue()


FORMATTERS = {"text": format_text, "json": format_json, "csv": format_csv}


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=sorted(FORMATTERS), default=argparse.SUPPRESS)
    common.add_argument("--max-vertices", type=int, default=argparse.SUPPRESS, metavar="N")

    parser = argparse.ArgumentParser(
        prog="drghosoya",
        description="Hosoya polynomial, Wiener and hyper-Wiener indices of distance-regular graphs.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("array", parents=[common], help="closed form from an intersection array")
    p.add_argument("--b", type=_int_list, required=True, help="b_0,...,b_{D-1}")
    p.add_argument("--c", type=_int_list, required=True, help="c_1,...,c_D")
    p.add_argument("--n", type=int, help="declared order; must match the order the array determines")

    p = sub.add_parser("srg", parents=[common], help="closed form from strongly regular parameters")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("lam", type=int, metavar="lambda")
    p.add_argument("mu", type=int)

    p = sub.add_parser("verify", parents=[common], help="compare closed form with the BFS oracle")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--family", help='e.g. "hypercube:6", "petersen", "hamming:2,3"')
    g.add_argument("--file", help="edge-list file, one 'u v' per line")
    p.add_argument("--n", type=int, help="vertex count for --file (default: 1 + max index)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "text")
    max_vertices = getattr(args, "max_vertices", DEFAULT_MAX_VERTICES)
    try:
        if args.command == "array":
            report, notes = cmd_array(args.b, args.c, args.n)
            for note in notes:
                print(f"warning: {note}", file=sys.stderr)
        elif args.command == "srg":
            report = cmd_srg(args.n, args.k, args.lam, args.mu)
        else:
            report = cmd_verify(args.family, args.file, args.n, max_vertices)
    except (InputError, HardInvalid, RelationViolated, BadParams, SizeLimit, graphs.GraphError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(FORMATTERS[fmt](report))
    if report.verification == MISMATCH:
        print(f"error: closed form and oracle disagree: {json.dumps(report.witness)}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
