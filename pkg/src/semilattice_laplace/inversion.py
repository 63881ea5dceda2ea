"""Recovering weights and family measures from a transform by alternating sums."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

import numpy as np

from . import scalars
from .errors import BadArguments, InvalidGround, NotInFamily
from .ground import GroundSet, SetFamily, Subset
from .transform import TransformTable, _check_length, dense_kernel

Queryable = Union[TransformTable, Callable[[Subset], object]]


@dataclass(frozen=True)
class FamilyMeasureQuery:
    """A finite family of subsets whose measure is requested."""

    sets: tuple[Subset, ...]

    def __post_init__(self):
        sets = tuple(self.sets)
        object.__setattr__(self, "sets", sets)
        if len({(s.ground, s.mask) for s in sets}) != len(sets):
            raise BadArguments("query family has repeated sets")


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def invert_point(f: Queryable, A: Subset):
    """``(-1)^|A| * sum over X <= A of (-1)^|X| f(X)``.

    Equals the weight at ``A`` when ``f`` is the transform of a weight
    function; for ``A`` outside the family it is the zero-extended weight,
    i.e. ``0``.  Costs ``2^|A|`` evaluations of ``f``.
    """
    if isinstance(f, TransformTable):
        if f.ground != A.ground:
            raise InvalidGround(f"{A} is not over the table's ground set")
        get = f.values.__getitem__
    else:
        ground = A.ground
        get = lambda m: f(Subset(m, ground))  # noqa: E731
    parity = A.mask.bit_count() & 1
    total = None
    for sub in _submasks(A.mask):
        v = get(sub)
        term = -v if (sub.bit_count() & 1) != parity else v
        total = term if total is None else total + term
    return total


def invert_measure(f: Queryable, query: FamilyMeasureQuery | Iterable[Subset],
                   family: SetFamily | None = None, strict: bool = False):
    """Measure of a finite family of sets, summed point by point from ``f``.

    Sets outside the semilattice contribute their zero-extended weight.  With
    ``strict=True`` such sets are rejected instead; ``family`` is then required.
    """
    if not isinstance(query, FamilyMeasureQuery):
        query = FamilyMeasureQuery(tuple(query))
    if strict:
        if family is None:
            raise BadArguments("strict mode needs the family to check membership")
        for A in query.sets:
            if A not in family:
                raise NotInFamily(f"{A} is not a member of the semilattice")
    total = 0
    for A in query.sets:
        total = total + invert_point(f, A)
    return total


def mobius_fast(table: TransformTable | np.ndarray, ground: GroundSet | None = None,
                scalar_kind: str | None = None) -> np.ndarray:
    """Invert a full transform table in ``O(n 2^n)`` subtractions.

    ``output[mask]`` equals ``invert_point(table, A)`` for the subset ``A``
    with that mask; rational tables round-trip exactly through :func:`zeta_fast`.
    """
    if isinstance(table, TransformTable):
        scalar_kind = scalar_kind or table.scalar_kind
        table = table.values
    arr, kind = scalars.as_dense(table, scalar_kind)
    n = _check_length(len(arr))
    if ground is not None and ground.size != n:
        raise BadArguments(f"ground of size {ground.size} does not match 2^{n} entries")
    return dense_kernel(arr, n, kind, subtract=True)
