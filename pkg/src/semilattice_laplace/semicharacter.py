"""Semicharacters of set semilattices.

On a union-closed family every semicharacter is 0/1-valued and has the form
``psi_X(A) = 1 if A <= X else 0``.  Distinct ``X`` can give the same function
on the family, so a semicharacter is identified by its canonical support: the
union of all members on which it equals 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InvalidGround, NotASemicharacter, NotInFamily, TooLarge
from .ground import MAX_DENSE, SetFamily, Subset, is_semilattice, union_closure

MAX_SUPPORTS = 1 << 20


@dataclass(frozen=True, eq=False)
class Semicharacter:
    defining_set: Subset
    support: Subset
    family: SetFamily

    @classmethod
    def of(cls, family: SetFamily, X: Subset) -> Semicharacter:
        return cls(X, canonicalize(family, X), family)

    def __call__(self, A: Subset) -> int:
        return evaluate(self, A)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Semicharacter):
            return NotImplemented
        return self.family == other.family and self.support == other.support

    def __hash__(self) -> int:
        return hash((self.support.mask, self.family.ground))

    def __repr__(self) -> str:
        return f"Semicharacter(support={self.support}, defining_set={self.defining_set})"


def evaluate(psi: Semicharacter, A: Subset) -> int:
    if A not in psi.family:
        raise NotInFamily(f"{A} is not a member of the semilattice")
    return 1 if A.mask & ~psi.defining_set.mask == 0 else 0


def canonicalize(family: SetFamily, X: Subset) -> Subset:
    """Union of the members contained in ``X``."""
    if X.ground != family.ground:
        raise InvalidGround(f"{X} is not over the family's ground set")
    outside = ~X.mask
    acc = 0
    for m in family.masks:
        if m & outside == 0:
            acc |= m
    return Subset(acc, family.ground)


def support(psi_values: Mapping[Subset, int], family: SetFamily | None = None) -> Subset:
    """Support of a semicharacter given by its values on every member.

    The values are checked for multiplicativity over all member pairs before
    the union of the 1-valued members is returned.
    """
    if not psi_values:
        raise NotASemicharacter("no values given")
    if family is None:
        keys = list(psi_values)
        ground = keys[0].ground
        if not is_semilattice(ground, keys):
            raise NotASemicharacter("value keys do not form a union-closed family with ∅")
        family = union_closure(ground, keys)
    values = {}
    for A, v in psi_values.items():
        if A not in family:
            raise NotASemicharacter(f"value given at non-member {A}")
        if v not in (0, 1):
            raise NotASemicharacter(f"value {v!r} at {A} is not 0 or 1")
        values[A.mask] = int(v)
    if set(values) != set(family.masks):
        raise NotASemicharacter("values must cover every family member")
    if values[0] != 1:
        raise NotASemicharacter("value at the empty set must be 1")
    masks = sorted(values)
    for i, a in enumerate(masks):
        for b in masks[i:]:
            if values[a | b] != values[a] * values[b]:
                raise NotASemicharacter(
                    f"not multiplicative at {family.ground.from_mask(a)}, {family.ground.from_mask(b)}")
    acc = 0
    for m, v in values.items():
        if v:
            acc |= m
    return Subset(acc, family.ground)


def enumerate_semicharacters(family: SetFamily) -> list[Semicharacter]:
    """One semicharacter per distinct function on the family.

    Canonical supports are unions of members and hence members themselves, so
    each member is the support of exactly one semicharacter.  Ordered like the
    family; the first has support ∅ and the last is the constant 1.
    """
    if family.ground.size > MAX_DENSE and len(family) > MAX_SUPPORTS:
        raise TooLarge(f"{len(family)} semicharacters exceed the enumeration ceiling")
    return [Semicharacter(s, s, family) for s in family.members]
