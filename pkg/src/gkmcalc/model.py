"""
Combinatorial model of a Hamiltonian torus action with isolated fixed points.

A :class:`GkmSpace` records the rank of the torus, the fixed points, and the
connected components of fixed sets of codimension-one subtori that contain
more than one fixed point. Each such component is either

* a two-sphere joining two fixed points, labelled by the primitive direction
  of its isotropy weight, or
* a four-dimensional component with three or more fixed points, labelled by
  a primitive direction ``a`` and, at every fixed point, the two multipliers
  ``(c1, c2)`` such that the tangent weights there are ``c1*a`` and ``c2*a``.

:func:`parse` and :func:`serialize` move between this model and the JSON
document format; :func:`validate` performs the structural checks, including
the residue identity ``sum 1/(c1*c2) = 0`` that localization forces on the
constant class of every four-dimensional component.
"""

from __future__ import annotations

import bisect
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from typing import Sequence, Union

import jsonschema

from .errors import ParseError, ValidationError
from .exactalg import LinearForm, as_rational, default_variable_names, format_rational

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class TorusContext:
    rank: int
    variables: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError("torus rank must be a positive integer")
        names = tuple(self.variables) or default_variable_names(self.rank)
        object.__setattr__(self, "variables", names)
        if len(names) != self.rank:
            raise ValueError(f"{len(names)} variable names for a rank-{self.rank} torus")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        for name in names:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")


@dataclass(frozen=True)
class TwoSphereStratum:
    points: tuple[str, str]
    direction: LinearForm

    @property
    def kind(self) -> str:
        return "two_sphere"


@dataclass(frozen=True)
class FourStratum:
    points: tuple[str, ...]
    direction: LinearForm
    multipliers: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if len(self.multipliers) != len(self.points):
            raise ValueError("one multiplier pair per point is required")

    @property
    def kind(self) -> str:
        return "four_component"

    def multiplier(self, point: str) -> tuple[Fraction, Fraction]:
        return self.multipliers[self.points.index(point)]

    def weights(self, point: str) -> tuple[LinearForm, LinearForm]:
        c1, c2 = self.multiplier(point)
        return self.direction.scale(c1), self.direction.scale(c2)

    def localization_weights(self) -> tuple[Fraction, ...]:
        """``1/(c1*c2)`` per point, the coefficient of ``f_i / a**2`` in the ABBV sum."""
        return tuple(1 / (c1 * c2) for c1, c2 in self.multipliers)

    def residue_sum(self) -> Fraction:
        return sum(self.localization_weights(), Fraction(0))


Stratum = Union[TwoSphereStratum, FourStratum]


@dataclass(frozen=True)
class GkmSpace:
    torus: TorusContext
    fixed_points: tuple[str, ...]
    strata: tuple[Stratum, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "fixed_points", tuple(self.fixed_points))
        object.__setattr__(self, "strata", tuple(self.strata))
        if not self.fixed_points:
            raise ValueError("at least one fixed point is required")
        if len(set(self.fixed_points)) != len(self.fixed_points):
            raise ValueError("duplicate fixed point ids")
        for s in self.strata:
            if s.direction.nvars != self.torus.rank:
                raise ValueError(
                    f"direction of length {s.direction.nvars} under rank {self.torus.rank}"
                )

    @property
    def rank(self) -> int:
        return self.torus.rank

    @property
    def variables(self) -> tuple[str, ...]:
        return self.torus.variables

    @cached_property
    def _index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.fixed_points)}

    def index_of(self, point: str) -> int:
        return self._index[point]

    def four_strata(self) -> list[tuple[int, FourStratum]]:
        return [(i, s) for i, s in enumerate(self.strata) if isinstance(s, FourStratum)]


# validation


@dataclass(frozen=True)
class Issue:
    severity: str  # "error" or "warning"
    check: str
    message: str
    stratum: int | None = None

    def to_dict(self) -> dict:
        return {
            "severity": self.severity,
            "check": self.check,
            "stratum": self.stratum,
            "message": self.message,
        }


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[Issue, ...]
    space: GkmSpace | None  # normalized space, None when errors were found

    @property
    def ok(self) -> bool:
        return not self.errors

    @property
    def errors(self) -> list[Issue]:
        return [i for i in self.issues if i.severity == "error"]

    @property
    def warnings(self) -> list[Issue]:
        return [i for i in self.issues if i.severity == "warning"]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "issues": [i.to_dict() for i in self.issues]}


def _normalize_stratum(s: Stratum) -> Stratum:
    prim, scale = s.direction.primitive()
    if isinstance(s, TwoSphereStratum):
        return TwoSphereStratum(s.points, prim)
    return FourStratum(
        s.points, prim, tuple((c1 * scale, c2 * scale) for c1, c2 in s.multipliers)
    )


def validate(space: GkmSpace) -> ValidationReport:
    """Run every structural check and collect the outcome without stopping early.

    Non-primitive directions are rescaled (multipliers compensate) and only
    produce a warning; every other finding is an error.
    """
    issues: list[Issue] = []
    declared = set(space.fixed_points)
    normalized: list[Stratum] = []
    for idx, s in enumerate(space.strata):
        unknown = [p for p in s.points if p not in declared]
        if unknown:
            issues.append(Issue("error", "point_reference",
                                f"stratum {idx} references undeclared points {unknown}", idx))
        if len(set(s.points)) != len(s.points):
            issues.append(Issue("error", "point_reference",
                                f"stratum {idx} repeats a fixed point", idx))
        if isinstance(s, TwoSphereStratum) and len(s.points) != 2:
            issues.append(Issue("error", "point_reference",
                                f"two-sphere stratum {idx} must join exactly two points", idx))
        if isinstance(s, FourStratum) and len(s.points) < 3:
            issues.append(Issue("error", "four_size",
                                f"four-dimensional stratum {idx} has {len(s.points)} "
                                "fixed points, at least 3 are required", idx))

        if s.direction.is_zero():
            issues.append(Issue("error", "direction", f"stratum {idx} has a zero direction", idx))
            normalized.append(s)
            continue
        if not s.direction.is_primitive():
            prim, _ = s.direction.primitive()
            issues.append(Issue(
                "warning", "direction",
                f"stratum {idx} direction {_fmt_form(s.direction)} normalized to "
                f"{_fmt_form(prim)}", idx))

        if isinstance(s, FourStratum):
            zero = [p for p, (c1, c2) in zip(s.points, s.multipliers) if not c1 or not c2]
            if zero:
                issues.append(Issue("error", "multiplier_nonzero",
                                    f"stratum {idx} has zero multipliers at {zero}", idx))
            else:
                total = s.residue_sum()
                if total:
                    issues.append(Issue(
                        "error", "residue",
                        f"stratum {idx}: sum of 1/(c1*c2) is {format_rational(total)}, "
                        "must be 0", idx))
        normalized.append(_normalize_stratum(s))

    report_space = None
    if not any(i.severity == "error" for i in issues):
        report_space = GkmSpace(space.torus, space.fixed_points, tuple(normalized))
    return ValidationReport(tuple(issues), report_space)


def _fmt_form(form: LinearForm) -> str:
    return "(" + ", ".join(format_rational(c) for c in form.coeffs) + ")"


# JSON documents


def _schema() -> dict:
    text = resources.files("gkmcalc").joinpath("schemas/space.schema.json").read_text()
    return json.loads(text)


_WS = re.compile(r"[ \t\n\r]*")


def _value_lines(text: str) -> dict[tuple, int]:
    """Map every JSON path in an already-valid document to its starting line."""
    decoder = json.JSONDecoder()
    newlines = [i for i, ch in enumerate(text) if ch == "\n"]
    lines: dict[tuple, int] = {}

    def skip(i: int) -> int:
        return _WS.match(text, i).end()

    def walk(i: int, path: tuple) -> int:
        i = skip(i)
        lines[path] = bisect.bisect_left(newlines, i) + 1
        ch = text[i]
        if ch == "{":
            i = skip(i + 1)
            if text[i] == "}":
                return i + 1
            while True:
                key, i = decoder.raw_decode(text, i)
                i = skip(i) + 1  # ':'
                i = skip(walk(i, path + (key,)))
                if text[i] == ",":
                    i = skip(i + 1)
                    continue
                return i + 1
        if ch == "[":
            i = skip(i + 1)
            if text[i] == "]":
                return i + 1
            n = 0
            while True:
                i = skip(walk(i, path + (n,)))
                n += 1
                if text[i] == ",":
                    i += 1
                    continue
                return i + 1
        _, end = decoder.raw_decode(text, i)
        return end

    walk(0, ())
    return lines


def _line_for(lines: dict[tuple, int], path: Sequence) -> int | None:
    path = tuple(path)
    while path not in lines and path:
        path = path[:-1]
    return lines.get(path)


def parse(document: str) -> GkmSpace:
    """Build a :class:`GkmSpace` from a JSON document.

    Raises :class:`ParseError` carrying the JSON path and line of the first
    problem. Structural checks beyond the schema are left to :func:`validate`.
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", (), exc.lineno) from None
    lines = _value_lines(document)

    def fail(msg: str, path: Sequence):
        raise ParseError(msg, tuple(path), _line_for(lines, path))

    validator = jsonschema.Draft202012Validator(_schema())
    err = jsonschema.exceptions.best_match(validator.iter_errors(data))
    if err is not None:
        fail(err.message, err.absolute_path)

    rank = data["torus_rank"]
    if len(data["variables"]) != rank:
        fail(f"{len(data['variables'])} variables declared for torus_rank {rank}", ["variables"])
    seen = set()
    for j, p in enumerate(data["fixed_points"]):
        if p in seen:
            fail(f"duplicate fixed point id {p!r}", ["fixed_points", j])
        seen.add(p)

    strata: list[Stratum] = []
    for i, st in enumerate(data["strata"]):
        direction = st["direction"]
        if len(direction) != rank:
            fail(f"direction of length {len(direction)} under torus_rank {rank}",
                 ["strata", i, "direction"])
        form = LinearForm(direction)
        if st["type"] == "two_sphere":
            strata.append(TwoSphereStratum(tuple(st["points"]), form))
            continue
        mults = st["multipliers"]
        if set(mults) != set(st["points"]):
            fail("multipliers must be given for exactly the stratum's points",
                 ["strata", i, "multipliers"])
        pairs = tuple((as_rational(mults[p][0]), as_rational(mults[p][1])) for p in st["points"])
        strata.append(FourStratum(tuple(st["points"]), form, pairs))

    return GkmSpace(TorusContext(rank, tuple(data["variables"])), tuple(data["fixed_points"]),
                    tuple(strata))


def load(document: str) -> GkmSpace:
    """Parse and validate; return the normalized space or raise."""
    report = validate(parse(document))
    if not report.ok:
        raise ValidationError(report)
    return report.space


def _direction_ints(form: LinearForm) -> list[int]:
    if any(c.denominator != 1 for c in form.coeffs):
        raise ValueError("only integer directions can be serialized")
    return [int(c) for c in form.coeffs]


def space_to_dict(space: GkmSpace) -> dict:
    strata = []
    for s in space.strata:
        entry = {"type": s.kind, "points": list(s.points), "direction": _direction_ints(s.direction)}
        if isinstance(s, FourStratum):
            entry["multipliers"] = {
                p: [format_rational(c1), format_rational(c2)]
                for p, (c1, c2) in zip(s.points, s.multipliers)
            }
        strata.append(entry)
    return {
        "torus_rank": space.rank,
        "variables": list(space.variables),
        "fixed_points": list(space.fixed_points),
        "strata": strata,
    }


def serialize(space: GkmSpace) -> str:
    """Deterministic JSON text: one line per top-level field and per stratum."""
    d = space_to_dict(space)
    dump = lambda v: json.dumps(v, separators=(", ", ": "))  # noqa: E731
    out = ["{"]
    out.append(f'  "torus_rank": {dump(d["torus_rank"])},')
    out.append(f'  "variables": {dump(d["variables"])},')
    out.append(f'  "fixed_points": {dump(d["fixed_points"])},')
    if d["strata"]:
        out.append('  "strata": [')
        body = [f"    {dump(s)}" for s in d["strata"]]
        out.append(",\n".join(body))
        out.append("  ]")
    else:
        out.append('  "strata": []')
    out.append("}")
    return "\n".join(out) + "\n"
