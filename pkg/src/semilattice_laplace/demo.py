"""Inclusion-exclusion for a union of sets, read off the discrete inverse transform.

Index the sets ``A_1..A_k`` by a ground ``M = {1..k}`` and put
``f(X) = |intersection of A_i for i not in X|`` (the whole universe when
``X = M``).  Then ``f`` is the transform of the counting weights
``phi(Y) = #{x : x lies outside exactly the sets indexed by Y}``, and the
inverse at ``M`` counts the elements outside every set.  Writing that
inverse out term by term is the classical alternating sum of intersection
sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import BadArguments
from .ground import GroundSet
from .inversion import invert_point
from .transform import TransformTable

MAX_UNIVERSE = 20
MAX_SETS = 8


@dataclass
class IETerm:
    indices: tuple[int, ...]
    size: int

    @property
    def sign(self) -> int:
        return 1 if len(self.indices) % 2 else -1


@dataclass
class IEReport:
    universe_size: int
    names: list[str]
    terms: list[IETerm]
    classical: int
    outside: int
    via_inversion: int
    direct: int

    @property
    def ok(self) -> bool:
        return self.classical == self.via_inversion == self.direct


def _set_names(k: int) -> list[str]:
    return [chr(ord("A") + i) for i in range(k)]


def intersection_table(sets: Sequence[frozenset], universe: frozenset) -> TransformTable:
    k = len(sets)
    ground = GroundSet(k, tuple(_set_names(k)))
    values = np.empty(1 << k, dtype=object)
    for x in range(1 << k):
        chosen = [sets[i] for i in range(k) if not (x >> i) & 1]
        values[x] = len(reduce(frozenset.intersection, chosen, universe))
    return TransformTable(ground, values)


def inclusion_exclusion(sets: Sequence, universe=None) -> IEReport:
    sets = [frozenset(s) for s in sets]
    if not 1 <= len(sets) <= MAX_SETS:
        raise BadArguments(f"need between 1 and {MAX_SETS} sets, got {len(sets)}")
    union = frozenset().union(*sets)
    universe = union if universe is None else frozenset(universe)
    if not union <= universe:
        raise BadArguments("every set must lie inside the universe")
    if len(universe) > MAX_UNIVERSE:
        raise BadArguments(f"universe of {len(universe)} elements exceeds {MAX_UNIVERSE}")

    k = len(sets)
    terms = []
    for r in range(1, k + 1):
        for idx in combinations(range(k), r):
            terms.append(IETerm(idx, len(frozenset.intersection(*(sets[i] for i in idx)))))
    classical = sum(t.sign * t.size for t in terms)

    table = intersection_table(sets, universe)
    outside = invert_point(table, table.ground.full)
    return IEReport(
        universe_size=len(universe),
        names=_set_names(k),
        terms=terms,
        classical=classical,
        outside=outside,
        via_inversion=len(universe) - outside,
        direct=len(union),
    )


def render(report: IEReport) -> str:
    names = report.names
    lines = [f"universe: {report.universe_size} elements"]
    lines.append("inclusion-exclusion terms:")
    for t in report.terms:
        label = "∩".join(names[i] for i in t.indices)
        lines.append(f"  {'+' if t.sign > 0 else '-'} |{label}| = {t.size}")
    union = "∪".join(names)
    lines.append(f"classical sum: |{union}| = {report.classical}")
    lines.append(f"inverse transform at M: {report.outside} elements lie outside every set")
    lines.append(f"via inversion: |{union}| = {report.universe_size} - {report.outside} "
                 f"= {report.via_inversion}")
    lines.append(f"direct count: |{union}| = {report.direct}")
    lines.append("MATCH" if report.ok else "MISMATCH")
    return "\n".join(lines)
