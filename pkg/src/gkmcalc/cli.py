"""
Command line interface.

Exit codes: 0 success, 1 input or parse error, 2 validation failure,
3 internal inconsistency. Degrees on the command line are cohomological
(even integers); internally they are halved to polynomial degrees.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources

import jsonschema

from . import corpus
from .cohomology import (
    CohomologyClass,
    check_class,
    hilbert,
    localization_residue,
    multiply_classes,
    solve_degree,
)
from .constraints import constraint_matrix, export_matrix
from .errors import ClassError, InconsistencyError, ParseError
from .exactalg import format_rational
from .model import GkmSpace, parse, validate

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_INCONSISTENT = 0, 1, 2, 3


@dataclass
class Report:
    command: str
    text: str = ""
    body: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK
    raw: bool = False
    as_json: bool = False

    def json_body(self) -> dict:
        return {"command": self.command, "ok": self.exit_code == EXIT_OK,
                "exit_code": self.exit_code, **self.body}


class _Failure(Exception):
    def __init__(self, code: int, kind: str, message: str, path=(), line=None):
        super().__init__(message)
        self.code, self.kind, self.message = code, kind, message
        self.path, self.line = list(path), line


def report_schema() -> dict:
    return json.loads(resources.files("gkmcalc").joinpath("schemas/report.schema.json").read_text())


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Failure(EXIT_INPUT, "io", f"cannot read {path}: {exc.strerror}") from None


def _load_space(path: str) -> tuple[GkmSpace, list]:
    text = _read(path)
    try:
        raw = parse(text)
    except ParseError as exc:
        raise _Failure(EXIT_INPUT, "parse", exc.message, exc.path, exc.line) from None
    report = validate(raw)
    if not report.ok:
        raise _Failure(EXIT_INVALID, "validation",
                       "; ".join(i.message for i in report.errors))
    return report.space, [i.to_dict() for i in report.warnings]


def _even_degree(value: int, flag: str) -> int:
    if value < 0 or value % 2:
        raise _Failure(EXIT_INPUT, "usage", f"{flag} must be a nonnegative even integer")
    return value // 2


def _space_summary(space: GkmSpace) -> dict:
    return {"torus_rank": space.rank, "fixed_points": len(space.fixed_points),
            "strata": len(space.strata)}


def _warning_lines(warnings: list) -> list[str]:
    return [f"warning: {w['message']}" for w in warnings]


def cmd_validate(args) -> Report:
    text = _read(args.file)
    try:
        raw = parse(text)
    except ParseError as exc:
        raise _Failure(EXIT_INPUT, "parse", exc.message, exc.path, exc.line) from None
    rep = validate(raw)
    lines = [f"{args.file}: {'valid' if rep.ok else 'INVALID'}"]
    for issue in rep.issues:
        lines.append(f"  {issue.severity}: [{issue.check}] {issue.message}")
    body = {"file": args.file, "issues": [i.to_dict() for i in rep.issues]}
    if rep.ok:
        body["space"] = _space_summary(rep.space)
    return Report("validate", "\n".join(lines), body, EXIT_OK if rep.ok else EXIT_INVALID)


def cmd_cohomology(args) -> Report:
    k_max = _even_degree(args.max_degree, "--max-degree")
    space, warnings = _load_space(args.file)
    data = hilbert(space, k_max)
    body = {"file": args.file, "space": _space_summary(space), **data.to_dict()}

    lines = _warning_lines(warnings)
    lines.append(f"{args.file}: rank {space.rank}, {len(space.fixed_points)} fixed points, "
                 f"{len(space.strata)} strata")
    lines.append(f"{'degree':>6}  {'h':>6}  {'q':>6}")
    for k, (h, q) in enumerate(zip(data.equivariant, data.betti)):
        lines.append(f"{2 * k:>6}  {h:>6}  {q:>6}")
    lines.append(f"h = {','.join(map(str, data.equivariant))}")
    lines.append(f"q = {','.join(map(str, data.betti))}")
    lines.append(f"consistent: {'yes' if data.consistent else 'no'}")

    bases = [solve_degree(space, k) for k in range(k_max + 1)]
    if args.emit_basis:
        body["basis"] = []
        for b in bases:
            classes = [c.as_strings() for c in b]
            body["basis"].append({"degree": 2 * b.degree, "classes": classes})
            lines.append(f"basis in degree {2 * b.degree}:")
            for c in b:
                lines.append("  " + "  ".join(f"{p}: {v}" for p, v in c.as_strings().items()))

    if args.verify_closure:
        for i, bi in enumerate(bases):
            for bj in bases[i:]:
                if bi.degree + bj.degree > k_max:
                    continue
                for a in bi:
                    for b in bj:
                        try:
                            multiply_classes(space, a, b)
                        except InconsistencyError as exc:
                            raise _Failure(EXIT_INCONSISTENT, "inconsistency", str(exc)) from None
        body["closure_checked"] = True
        lines.append("closure: all basis products up to the maximum degree are members")
    return Report("cohomology", "\n".join(lines), body)


def _load_class(space: GkmSpace, path: str) -> CohomologyClass:
    text = _read(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Failure(EXIT_INPUT, "parse", f"malformed JSON: {exc.msg}", (), exc.lineno) from None
    schema = json.loads(resources.files("gkmcalc").joinpath("schemas/class.schema.json").read_text())
    err = jsonschema.exceptions.best_match(jsonschema.Draft202012Validator(schema).iter_errors(data))
    if err is not None:
        raise _Failure(EXIT_INPUT, "parse", err.message, err.absolute_path)
    degree = data.get("degree")
    try:
        return CohomologyClass.parse(space, data["values"], None if degree is None else degree // 2)
    except ClassError as exc:
        raise _Failure(EXIT_INPUT, "class", str(exc)) from None


def cmd_check(args) -> Report:
    space, warnings = _load_space(args.file)
    c = _load_class(space, args.class_file)
    rep = check_class(space, c)
    violations = [{**v.provenance.to_dict(), "value": format_rational(v.value)}
                  for v in rep.violations]
    residues = []
    congruent = "congruence" not in rep.families()
    if congruent:
        for idx, s in space.four_strata():
            r = localization_residue(c, s)
            residues.append({
                "stratum": idx,
                "quotient": r.quotient.format(space.variables) if r.ok else None,
                "remainder": None if r.ok else r.remainder.format(space.variables),
            })
    body = {"file": args.file, "member": rep.member, "degree": 2 * rep.degree,
            "violations": violations, "residues": residues}

    lines = _warning_lines(warnings)
    lines.append(f"class {c} in degree {2 * c.degree}: {'member' if rep.member else 'NOT a member'}")
    for v in violations:
        lines.append(f"  violated: stratum {v['stratum']} {v['family']} {v['detail']} "
                     f"(value {v['value']})")
    for r in residues:
        if r["quotient"] is not None:
            lines.append(f"  residue on stratum {r['stratum']}: {r['quotient']}")
        else:
            lines.append(f"  residue on stratum {r['stratum']}: remainder {r['remainder']}")
    return Report("check", "\n".join(lines), body)


def cmd_examples(args) -> Report:
    if args.action == "list":
        names = corpus.names()
        text = "\n".join(f"{n:<12} {corpus.get(n).description}" for n in names)
        return Report("examples", text, {"names": names})
    if not args.name:
        raise _Failure(EXIT_INPUT, "usage", "examples emit needs a name")
    try:
        entry = corpus.get(args.name)
    except KeyError as exc:
        raise _Failure(EXIT_INPUT, "usage", exc.args[0]) from None
    # raw document, written byte-exactly
    return Report("examples", entry.document(), {"names": [entry.name]}, raw=True)


def cmd_export_matrix(args) -> Report:
    k = _even_degree(args.degree, "--degree")
    space, _ = _load_space(args.file)
    system = constraint_matrix(space, k, args.pivot, args.all_pairs)
    return Report("export-matrix", export_matrix(system, space.variables).rstrip("\n"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gkmcalc",
        description="Equivariant cohomology of Hamiltonian torus actions from fixed-point data.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="structural checks on a space document")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", help="graded dimensions and Betti numbers")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True,
                   help="largest cohomological degree (even)")
    p.add_argument("--emit-basis", action="store_true")
    p.add_argument("--verify-closure", action="store_true",
                   help="check that products of basis classes stay in the image")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("check", help="membership of a class in the image")
    p.add_argument("file")
    p.add_argument("class_file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("examples", help="list or print the shipped examples")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("export-matrix", help="constraint matrix in plain text")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True, help="cohomological degree (even)")
    p.add_argument("--pivot", choices=["first", "last"], default="first")
    p.add_argument("--all-pairs", action="store_true")
    p.set_defaults(func=cmd_export_matrix, json=False)
    return ap


def run(argv=None) -> Report:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except _Failure as f:
        err = {"kind": f.kind, "message": f.message}
        if f.path or f.line is not None:
            err["path"] = f.path
            err["line"] = f.line
        where = ""
        if f.path:
            where = " at " + "/".join(map(str, f.path))
        if f.line is not None:
            where += f" (line {f.line})"
        report = Report(args.command, f"error: {f.message}{where}", {"error": err}, f.code)
    report.as_json = args.json
    return report


def main(argv=None) -> int:
    report = run(argv)
    if report.as_json:
        print(json.dumps(report.json_body(), indent=2))
    elif report.raw:
        sys.stdout.write(report.text)
    else:
        stream = sys.stdout if report.exit_code == EXIT_OK else sys.stderr
        print(report.text, file=stream)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
