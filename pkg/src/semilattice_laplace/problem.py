"""Problem files (JSON) and transform tables (tab-separated text).

A problem file looks like::

    {
      "ground": ["1", "2"],
      "family": [[], ["1"], ["2"], ["1", "2"]],
      "weights": {"": "1", "1": "2", "2": "3", "1,2": "4"},
      "scalar_kind": "rational"
    }

A subset key is its labels joined by ``","`` in ground order; the empty set
is ``""``.  Rationals are written ``"p/q"``.  A table file has one
``key<TAB>value`` row per subset; lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from . import scalars
from .errors import InvalidFamily, InvalidGround, LaplaceError, ProblemFormatError
from .ground import GroundSet, SetFamily, Subset, is_semilattice, make_ground, union_closure
from .transform import WeightFn


@dataclass(frozen=True)
class Problem:
    ground: GroundSet
    family: SetFamily
    weights: WeightFn

    @property
    def scalar_kind(self) -> str:
        return self.weights.scalar_kind


def subset_key(A: Subset) -> str:
    return ",".join(A.labels())


def parse_key(ground: GroundSet, key: str) -> Subset:
    if not isinstance(key, str):
        raise ProblemFormatError(f"subset key {key!r} is not a string")
    if key == "":
        return ground.empty
    parts = key.split(",")
    if len(set(parts)) != len(parts):
        raise ProblemFormatError(f"malformed subset key {key!r}: repeated label")
    try:
        return ground.subset(parts)
    except InvalidGround as exc:
        raise ProblemFormatError(f"malformed subset key {key!r}: {exc}") from None


def _scalar(raw, kind: str, where: str):
    try:
        if isinstance(raw, str):
            return scalars.parse(raw, kind)
        return scalars.coerce(raw, kind)
    except LaplaceError as exc:
        raise ProblemFormatError(f"{where}: {exc}") from None


def loads_problem(text: str, close: bool = False, scalar_kind: str | None = None) -> Problem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ProblemFormatError("problem file must be a JSON object")
    for name in ("ground", "family", "weights"):
        if name not in doc:
            raise ProblemFormatError(f"missing field {name!r}")
    kind = scalar_kind or doc.get("scalar_kind", scalars.RATIONAL)
    if kind not in scalars.KINDS:
        raise ProblemFormatError(f"scalar_kind must be one of {scalars.KINDS}, got {kind!r}")
    try:
        ground = make_ground(doc["ground"])
    except InvalidGround as exc:
        raise ProblemFormatError(f"ground: {exc}") from None
    if any("," in lab or "\t" in lab or "\n" in lab for lab in ground.labels):
        raise ProblemFormatError("labels may not contain commas, tabs or newlines")

    listed = []
    for i, entry in enumerate(doc["family"]):
        if not isinstance(entry, list):
            raise ProblemFormatError(f"family[{i}] is not a list of labels")
        if len(set(map(str, entry))) != len(entry):
            raise ProblemFormatError(f"family[{i}] repeats a label")
        try:
            listed.append(ground.subset(entry))
        except InvalidGround as exc:
            raise ProblemFormatError(f"family[{i}]: {exc}") from None
    if close:
        family = union_closure(ground, listed)
    elif not is_semilattice(ground, listed):
        raise ProblemFormatError("family is not union-closed with ∅ (use --close to close it)")
    else:
        family = SetFamily(ground, tuple(listed))

    if not isinstance(doc["weights"], dict):
        raise ProblemFormatError("weights must be an object mapping subset keys to numbers")
    weights = {}
    for key, raw in doc["weights"].items():
        A = parse_key(ground, key)
        if A not in family:
            raise ProblemFormatError(f"weight given for non-member {key!r}")
        if A.mask in weights:
            raise ProblemFormatError(f"weight for {key!r} given twice")
        weights[A.mask] = _scalar(raw, kind, f"weight {key!r}")
    listed_masks = {A.mask for A in listed}
    zero = 0.0 if kind == scalars.FLOAT else 0
    for A in family:
        if A.mask not in weights:
            if A.mask in listed_masks:
                raise ProblemFormatError(f"no weight for family member {subset_key(A)!r}")
            weights[A.mask] = zero
    try:
        return Problem(ground, family, WeightFn(family, weights, kind))
    except (InvalidFamily, LaplaceError) as exc:
        raise ProblemFormatError(str(exc)) from None


def dumps_problem(problem: Problem) -> str:
    doc = {
        "ground": list(problem.ground.labels),
        "family": [A.labels() for A in problem.family],
        "weights": {subset_key(problem.ground.from_mask(m)): scalars.fmt(v)
                    for m, v in problem.weights.items()},
        "scalar_kind": problem.scalar_kind,
    }
    return json.dumps(doc, indent=2) + "\n"


def format_rows(rows: Iterable[tuple[Subset, object]]) -> str:
    return "".join(f"{subset_key(A)}\t{scalars.fmt(v)}\n" for A, v in rows)


@dataclass(frozen=True)
class Table:
    """A parsed table file: a possibly partial set function on ``2^M``."""

    ground: GroundSet
    values: dict
    scalar_kind: str

    def is_complete(self) -> bool:
        return len(self.values) == 1 << self.ground.size


def loads_table(text: str, scalar_kind: str | None = None, ground: GroundSet | None = None) -> Table:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        if "\t" not in line:
            raise ProblemFormatError(f"line {lineno}: expected 'key<TAB>value'")
        key, raw = line.split("\t", 1)
        rows.append((lineno, key, raw.strip()))
    if scalar_kind is None:
        exact = all(_looks_rational(raw) for _, _, raw in rows)
        scalar_kind = scalars.RATIONAL if exact else scalars.FLOAT
    if ground is None:
        labels = []
        for _, key, _ in rows:
            for lab in key.split(",") if key else ():
                if lab not in labels:
                    labels.append(lab)
        if not labels:
            raise ProblemFormatError("table mentions no elements; cannot infer the ground set")
        ground = make_ground(labels)
    values = {}
    for lineno, key, raw in rows:
        try:
            A = parse_key(ground, key)
        except ProblemFormatError as exc:
            raise ProblemFormatError(f"line {lineno}: {exc}") from None
        if A.mask in values:
            raise ProblemFormatError(f"line {lineno}: duplicate row for {key!r}")
        values[A.mask] = _scalar(raw, scalar_kind, f"line {lineno}")
    return Table(ground, values, scalar_kind)


def _looks_rational(raw: str) -> bool:
    head, _, tail = raw.lstrip("-").partition("/")
    return head.isdigit() and (tail == "" or tail.isdigit())
