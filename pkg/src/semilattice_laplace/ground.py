"""Finite ground sets, bitmask-encoded subsets, and union-closed families.

Element ``i`` of a ground set corresponds to bit ``i`` of a subset mask, so
``A ⊆ X`` is the single test ``A.mask & ~X.mask == 0``.  Families are kept
sorted by ``(popcount, mask)`` which makes every iteration order in the
package reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidFamily, InvalidGround, TooLarge

#: Largest ground size for which dense 2^n tables are built.
MAX_DENSE = 24


@dataclass(frozen=True)
class GroundSet:
    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 1:
            raise InvalidGround("ground set must have at least one element")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.size:
                raise InvalidGround(
                    f"{len(labels)} labels given for a ground set of size {self.size}")
            if len(set(labels)) != len(labels):
                raise InvalidGround(f"duplicate labels in {list(labels)}")

    @classmethod
    def of_size(cls, n: int) -> GroundSet:
        return cls(n)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def empty(self) -> Subset:
        return Subset(0, self)

    @property
    def full(self) -> Subset:
        return Subset(self.full_mask, self)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def index(self, label) -> int:
        if self.labels is None:
            i = int(label)
            if not 0 <= i < self.size:
                raise InvalidGround(f"element {label!r} outside ground of size {self.size}")
            return i
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise InvalidGround(f"unknown label {label!r}") from None

    def subset(self, labels: Iterable = ()) -> Subset:
        """Build a subset from element labels (or indices for unlabeled grounds)."""
        mask = 0
        for x in labels:
            mask |= 1 << self.index(x)
        return Subset(mask, self)

    def from_indices(self, indices: Iterable[int]) -> Subset:
        mask = 0
        for i in indices:
            if not 0 <= i < self.size:
                raise InvalidGround(f"index {i} outside ground of size {self.size}")
            mask |= 1 << i
        return Subset(mask, self)

    def from_mask(self, mask: int) -> Subset:
        return Subset(mask, self)

    def all_subsets(self) -> Iterator[Subset]:
        """Every subset in mask order."""
        if self.size > MAX_DENSE:
            raise TooLarge(f"cannot enumerate 2^{self.size} subsets")
        for mask in range(1 << self.size):
            yield Subset(mask, self)


def make_ground(labels: Sequence) -> GroundSet:
    labels = [str(x) for x in labels]
    if not labels:
        raise InvalidGround("ground set needs at least one label")
    return GroundSet(len(labels), tuple(labels))


@dataclass(frozen=True)
class Subset:
    mask: int
    ground: GroundSet = field(repr=False)

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.ground.size:
            raise InvalidGround(
                f"mask {self.mask:#x} sets bits outside a ground of size {self.ground.size}")

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def _check(self, other: Subset):
        if other.ground != self.ground:
            raise InvalidGround("subsets belong to different ground sets")

    def __or__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.mask | other.mask, self.ground)

    def __and__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.mask & other.mask, self.ground)

    def __sub__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.mask & ~other.mask, self.ground)

    def complement(self) -> Subset:
        return Subset(self.ground.full_mask & ~self.mask, self.ground)

    def issubset(self, other: Subset) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def __lt__(self, other: Subset) -> bool:
        return self.issubset(other) and self.mask != other.mask

    def isdisjoint(self, other: Subset) -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def labels(self) -> list[str]:
        return [self.ground.label(i) for i in self]

    def __str__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def _sort_key(s: Subset) -> tuple[int, int]:
    return (s.mask.bit_count(), s.mask)


@dataclass(frozen=True)
class SetFamily:
    """A finite union-closed family of subsets containing the empty set.

    Construction validates the semilattice invariants and sorts the members;
    use :func:`union_closure` to build one from arbitrary seeds.
    """

    ground: GroundSet
    members: tuple[Subset, ...]
    masks: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        members = sorted(set(self.members), key=_sort_key)
        for s in members:
            if s.ground != self.ground:
                raise InvalidFamily(f"member {s} is not over this ground set")
        object.__setattr__(self, "members", tuple(members))
        masks = frozenset(s.mask for s in members)
        object.__setattr__(self, "masks", masks)
        if 0 not in masks:
            raise InvalidFamily("family must contain the empty set")
        if not _union_closed(masks):
            raise InvalidFamily("family is not closed under union")

    @classmethod
    def from_masks(cls, ground: GroundSet, masks: Iterable[int]) -> SetFamily:
        return cls(ground, tuple(Subset(m, ground) for m in masks))

    @classmethod
    def power_set(cls, ground: GroundSet) -> SetFamily:
        return cls.from_masks(ground, range(1 << ground.size))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __contains__(self, item) -> bool:
        if isinstance(item, Subset):
            return item.ground == self.ground and item.mask in self.masks
        return item in self.masks


def _union_closed(masks: frozenset[int]) -> bool:
    # Grow the closure from members in (popcount, mask) order; only members not
    # already generated expand it, so power sets cost O(n 2^n) rather than 4^n.
    closed = {0}
    for m in sorted(masks, key=lambda x: (x.bit_count(), x)):
        if m in closed:
            continue
        new = {c | m for c in closed}
        if not new <= masks:
            return False
        closed |= new
    return True


def union_closure(ground: GroundSet, seeds: Iterable[Subset]) -> SetFamily:
    """Smallest union-closed family containing ``seeds`` and the empty set."""
    closed = {0}
    for s in seeds:
        if s.ground != ground:
            raise InvalidGround(f"seed {s} is not over this ground set")
        if s.mask in closed:
            continue
        closed |= {c | s.mask for c in closed}
    return SetFamily.from_masks(ground, closed)


def is_semilattice(ground: GroundSet, family: Iterable[Subset]) -> bool:
    masks = set()
    for s in family:
        if s.ground != ground:
            return False
        masks.add(s.mask)
    return 0 in masks and _union_closed(frozenset(masks))
