"""Finite Stone-space model: base sets, difference operators, base-set inversion.

A finite ground set with the discrete topology has every subset open, closed
and compact, so any family of subsets is a semilattice of open-and-compact
sets.  The topology on the family is generated by the base sets

    V(F; U1, ..., Un) = {A in family : A & F = ∅ and A & Ui != ∅ for all i}

and a measure on the family is recovered on each base set from its transform
by ``n`` iterated difference operators.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from typing import Callable, Mapping, Sequence

from . import scalars
from .errors import BadArguments, DegenerateBase, InvalidGround, NotInFamily
from .ground import GroundSet, SetFamily, Subset
from .transform import TransformTable, WeightFn, zeta_fast

SetFunction = Callable[[Subset], object]


class EmptyOpenSetWarning(UserWarning):
    """psi_U evaluated with U = ∅, which the non-empty-support convention excludes."""


@dataclass(frozen=True)
class StoneModel:
    ground: GroundSet
    family: SetFamily

    def __post_init__(self):
        if self.family.ground != self.ground:
            raise InvalidGround("family is not over the model's ground set")

    @classmethod
    def of(cls, family: SetFamily) -> StoneModel:
        return cls(family.ground, family)

    def is_clopen(self, X: Subset) -> bool:
        # discrete finite space
        return X.ground == self.ground


@dataclass(frozen=True)
class BaseSet:
    """The pair ``(F; U1..Un)``; ``n = 0`` denotes ``{A : A & F = ∅}``."""

    F: Subset
    Us: tuple[Subset, ...] = ()

    def __post_init__(self):
        Us = tuple(self.Us)
        object.__setattr__(self, "Us", Us)
        for U in Us:
            if U.ground != self.F.ground:
                raise InvalidGround("F and the U sets must share a ground set")
            if U.mask == 0:
                raise DegenerateBase("a required-hit set U is empty, so the base set is empty")

    @property
    def ground(self) -> GroundSet:
        return self.F.ground

    @property
    def n(self) -> int:
        return len(self.Us)

    def contains(self, A: Subset) -> bool:
        if A.mask & self.F.mask:
            return False
        return all(A.mask & U.mask for U in self.Us)

    def deduplicated(self) -> BaseSet:
        seen = set()
        Us = []
        for U in self.Us:
            if U.mask not in seen:
                seen.add(U.mask)
                Us.append(U)
        return BaseSet(self.F, tuple(Us))

    def __str__(self) -> str:
        return f"V({self.F}; {', '.join(str(U) for U in self.Us)})"


@dataclass(frozen=True)
class PointMeasure:
    """Non-negative, finitely supported measure on the members of a family."""

    family: SetFamily
    weights: Mapping = field(default_factory=dict)
    scalar_kind: str = scalars.RATIONAL

    def __post_init__(self):
        scalars.check_kind(self.scalar_kind)
        norm = {}
        for key, v in self.weights.items():
            mask = key.mask if isinstance(key, Subset) else int(key)
            if mask not in self.family.masks:
                raise NotInFamily(f"weight at non-member {self.family.ground.from_mask(mask)}")
            v = scalars.coerce(v, self.scalar_kind)
            if v < 0:
                raise BadArguments(f"negative weight {v} at {self.family.ground.from_mask(mask)}")
            norm[mask] = v
        zero = 0.0 if self.scalar_kind == scalars.FLOAT else 0
        object.__setattr__(self, "weights",
                           {s.mask: norm.get(s.mask, zero) for s in self.family.members})

    def __getitem__(self, A: Subset):
        return self.weights[A.mask]

    def total(self):
        return sum(self.weights.values(), 0.0 if self.scalar_kind == scalars.FLOAT else 0)

    def as_weight_fn(self) -> WeightFn:
        return WeightFn(self.family, self.weights, self.scalar_kind)


def base_members(model: StoneModel, V: BaseSet) -> list[Subset]:
    if V.ground != model.ground:
        raise InvalidGround("base set is not over the model's ground set")
    return [A for A in model.family.members if V.contains(A)]


def base_intersect(V: BaseSet, W: BaseSet) -> BaseSet:
    """Intersection of two base sets, which is again a base set."""
    if V.ground != W.ground:
        raise InvalidGround("base sets are over different ground sets")
    return BaseSet(V.F | W.F, V.Us + W.Us)


def psi_open(U: Subset, A: Subset) -> int:
    if U.mask == 0:
        warnings.warn("psi_U with empty U", EmptyOpenSetWarning, stacklevel=2)
    return 1 if A.mask & ~U.mask == 0 else 0


def laplace_of_measure(mu: PointMeasure, U: Subset):
    """Integral of ``psi_U`` against ``mu``: the mass of members inside ``U``."""
    total = 0.0 if mu.scalar_kind == scalars.FLOAT else 0
    for mask, w in mu.weights.items():
        if mask & ~U.mask == 0:
            total += w
    return total


def transform_of_measure(mu: PointMeasure) -> TransformTable:
    return zeta_fast(mu.as_weight_fn())


def f_prime(f: SetFunction, F: Subset):
    return f(F.complement())


def delta(U: Subset, phi: SetFunction, A: Subset):
    return phi(A | U) - phi(A)


def _delta_op(U: Subset, phi: SetFunction) -> SetFunction:
    return lambda A: delta(U, phi, A)


def invert_base_measure(f: SetFunction, V: BaseSet, dedupe: bool = True):
    """Mass of the base set ``V`` recovered from the transform ``f``.

    Evaluates ``(-1)^n (Δ_U1 ∘ ... ∘ Δ_Un f')(F)`` with ``f'(F) = f(M \\ F)``.
    Repeated U sets are dropped first, which saves ``2^k`` evaluations per
    repeat.  The result does not depend on it: ``Δ_U ∘ Δ_U = -Δ_U``, so each
    repeat flips the sign once and the extra factor of ``-1`` cancels it.
    ``dedupe=False`` evaluates the raw list verbatim.
    """
    if dedupe:
        V = V.deduplicated()
    phi: SetFunction = lambda A: f_prime(f, A)  # noqa: E731
    for U in reversed(V.Us):
        phi = _delta_op(U, phi)
    value = phi(V.F)
    return -value if V.n & 1 else value


def measure_finite_union(f: SetFunction, Vs: Sequence[BaseSet]):
    """Mass of a finite union of base sets by inclusion-exclusion over intersections."""
    Vs = list(Vs)
    if not Vs:
        raise BadArguments("need at least one base set")
    total = 0
    for k in range(1, len(Vs) + 1):
        for idx in combinations(range(len(Vs)), k):
            term = invert_base_measure(f, reduce(base_intersect, (Vs[i] for i in idx)))
            total = total + term if k & 1 else total - term
    return total


def point_base(A: Subset) -> BaseSet:
    """Base set whose only possible member is ``A``: avoid ``M \\ A`` and meet each point of ``A``."""
    g = A.ground
    return BaseSet(A.complement(), tuple(g.from_indices([i]) for i in A))


def separating_pair(A: Subset, B: Subset) -> tuple[BaseSet, BaseSet]:
    """Disjoint base sets ``(V_A, V_B)`` with ``A in V_A`` and ``B in V_B``."""
    if A == B:
        raise BadArguments("points must be distinct")
    if A.mask & ~B.mask:
        d = A - B
        return BaseSet(A.complement(), (d,)), BaseSet(d)
    d = B - A
    return BaseSet(d), BaseSet(B.complement(), (d,))
