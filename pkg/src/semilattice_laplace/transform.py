"""Forward Laplace transform of a weight function on a set semilattice.

For a weight function ``phi`` on a union-closed family, the transform is the
subset sum ``f(X) = sum(phi(A) for A in family if A <= X)``, defined for every
``X`` in the power set of the ground, members or not.  The dense kernel
computes all ``2^n`` values with ``n`` in-place passes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from . import scalars
from .errors import BadArguments, InvalidGround, NotInFamily, TooLarge
from .ground import MAX_DENSE, GroundSet, SetFamily, Subset

# int64 headroom for the scaled-integer exact path
_INT64_LIMIT = 1 << 62


@dataclass(frozen=True)
class WeightFn:
    """Weights ``phi: family -> scalars``; also the density of the measure ``mu_phi``.

    ``values`` may be keyed by :class:`Subset` or by raw mask.  Signed weights
    are accepted; :meth:`is_nonnegative` reports positivity.
    """

    family: SetFamily
    values: Mapping
    scalar_kind: str = scalars.RATIONAL

    def __post_init__(self):
        scalars.check_kind(self.scalar_kind)
        norm = {}
        for key, v in self.values.items():
            mask = _mask_of(key, self.family.ground)
            if mask not in self.family.masks:
                raise NotInFamily(f"weight given for non-member {self.family.ground.from_mask(mask)}")
            if mask in norm:
                raise BadArguments(f"duplicate weight for {self.family.ground.from_mask(mask)}")
            norm[mask] = scalars.coerce(v, self.scalar_kind)
        missing = [m for m in self.family.masks if m not in norm]
        if missing:
            raise BadArguments(
                f"no weight for members {[str(self.family.ground.from_mask(m)) for m in sorted(missing)]}")
        # store in family order so every summation runs in the same order
        ordered = {s.mask: norm[s.mask] for s in self.family.members}
        object.__setattr__(self, "values", ordered)

    @property
    def ground(self) -> GroundSet:
        return self.family.ground

    def __getitem__(self, key):
        mask = _mask_of(key, self.ground)
        try:
            return self.values[mask]
        except KeyError:
            raise NotInFamily(f"{self.ground.from_mask(mask)} is not a family member") from None

    def items(self):
        return self.values.items()

    def zero(self):
        return 0.0 if self.scalar_kind == scalars.FLOAT else 0

    def total(self):
        return sum(self.values.values(), self.zero())

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values.values())

    def dense(self) -> np.ndarray:
        """Weights extended by zero to all ``2^n`` masks."""
        n = self.ground.size
        if n > MAX_DENSE:
            raise TooLarge(f"dense table for n={n} exceeds the 2^{MAX_DENSE} ceiling")
        if self.scalar_kind == scalars.FLOAT:
            out = np.zeros(1 << n, dtype=np.float64)
        else:
            out = np.empty(1 << n, dtype=object)
            out[:] = 0
        for mask, v in self.values.items():
            out[mask] = v
        return out

    def __add__(self, other: WeightFn) -> WeightFn:
        if other.family != self.family or other.scalar_kind != self.scalar_kind:
            raise BadArguments("weight functions must share family and scalar kind")
        return WeightFn(self.family, {m: v + other.values[m] for m, v in self.values.items()},
                        self.scalar_kind)


def _mask_of(key, ground: GroundSet) -> int:
    if isinstance(key, Subset):
        if key.ground != ground:
            raise InvalidGround(f"{key} is not over this ground set")
        return key.mask
    return Subset(int(key), ground).mask


@dataclass(frozen=True)
class TransformTable:
    """Dense table of a set function on the power set, indexed by mask.

    Tables are callable on subsets, so they serve directly as the queryable
    ``f`` taken by the inversion routines.
    """

    ground: GroundSet
    values: np.ndarray = field(repr=False)
    scalar_kind: str = scalars.RATIONAL

    def __post_init__(self):
        if len(self.values) != 1 << self.ground.size:
            raise BadArguments(
                f"table has {len(self.values)} entries, expected 2^{self.ground.size}")

    def __call__(self, X: Subset):
        if X.ground != self.ground:
            raise InvalidGround(f"{X} is not over this table's ground set")
        return self.values[X.mask]

    def __getitem__(self, mask: int):
        return self.values[mask]

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TransformTable):
            return NotImplemented
        return (self.ground == other.ground and self.scalar_kind == other.scalar_kind
                and bool(np.all(self.values == other.values)))

    __hash__ = None


def laplace_forward(phi: WeightFn, X: Subset):
    """``f(X)``: total weight of the members contained in ``X``."""
    if X.ground != phi.ground:
        raise InvalidGround(f"{X} is not over the weight function's ground set")
    outside = ~X.mask
    total = phi.zero()
    for mask, v in phi.values.items():
        if mask & outside == 0:
            total += v
    return total


def zeta_sparse(phi: WeightFn, queries: Iterable[Subset]) -> list:
    return [laplace_forward(phi, X) for X in queries]


def alternating_sum(Y: Subset, A: Subset) -> int:
    """Sum of ``(-1)^|X|`` over the interval ``Y <= X <= A``, by enumeration."""
    if Y.ground != A.ground:
        raise BadArguments("Y and A must share a ground set")
    if Y.mask & ~A.mask:
        raise BadArguments(f"{Y} is not a subset of {A}")
    free = A.mask & ~Y.mask
    total = 0
    sub = free
    while True:
        total += -1 if (Y.mask | sub).bit_count() & 1 else 1
        if sub == 0:
            break
        sub = (sub - 1) & free
    return total


def _check_length(length: int) -> int:
    n = length.bit_length() - 1
    if length < 2 or 1 << n != length:
        raise BadArguments(f"dense input length {length} is not 2^n with n >= 1")
    if n > MAX_DENSE:
        raise TooLarge(f"n={n} exceeds the dense ceiling of {MAX_DENSE}")
    return n


def _sweep(arr: np.ndarray, n: int, subtract: bool) -> None:
    # pass i folds bit i: entries with bit i set take the entry with bit i cleared
    for i in range(n):
        view = arr.reshape(-1, 2, 1 << i)
        if subtract:
            view[:, 1, :] -= view[:, 0, :]
        else:
            view[:, 1, :] += view[:, 0, :]


def dense_kernel(values: np.ndarray, n: int, kind: str, subtract: bool) -> np.ndarray:
    """Run the n-pass subset-sum (or its subtractive inverse) on a fresh copy."""
    if kind == scalars.FLOAT:
        out = np.array(values, dtype=np.float64, copy=True)
        _sweep(out, n, subtract)
        return out
    ints, den = scalars.to_scaled_ints(values)
    peak = max((abs(x) for x in ints), default=0)
    if peak << n < _INT64_LIMIT:
        work = np.array(ints, dtype=np.int64)
        _sweep(work, n, subtract)
        return scalars.from_scaled_ints(work, den)
    work = np.empty(len(ints), dtype=object)
    work[:] = ints
    _sweep(work, n, subtract)
    return scalars.from_scaled_ints(work, den)


def zeta_fast(phi_dense, ground: GroundSet | None = None,
              scalar_kind: str | None = None) -> TransformTable:
    """All ``2^n`` transform values in ``O(n 2^n)`` additions.

    ``phi_dense`` is a length-``2^n`` sequence holding the weights at member
    masks and zero elsewhere, or a :class:`WeightFn`.  Float input gives a
    float table; integer or ``Fraction`` input is transformed exactly.
    """
    if isinstance(phi_dense, WeightFn):
        ground = ground or phi_dense.ground
        scalar_kind = scalar_kind or phi_dense.scalar_kind
        phi_dense = phi_dense.dense()
    arr, kind = scalars.as_dense(phi_dense, scalar_kind)
    n = _check_length(len(arr))
    if ground is None:
        ground = GroundSet.of_size(n)
    elif ground.size != n:
        raise BadArguments(f"ground of size {ground.size} does not match 2^{n} entries")
    return TransformTable(ground, dense_kernel(arr, n, kind, subtract=False), kind)
