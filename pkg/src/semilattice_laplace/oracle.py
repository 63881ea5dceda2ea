"""Brute-force reference implementations.

Everything here works on ``frozenset`` element sets and ``itertools``
enumeration rather than the submask walks and in-place passes used by the
fast paths, so a shared bug cannot make both sides agree.  Nothing here is
meant to be fast.
"""

from __future__ import annotations

from itertools import chain, combinations
from typing import Callable

import numpy as np

from .errors import TooLarge
from .ground import GroundSet, SetFamily, Subset
from .stone import BaseSet, PointMeasure
from .transform import TransformTable, WeightFn

MAX_FAMILY_GROUND = 4


def elements(A: Subset) -> frozenset[int]:
    return frozenset(i for i in range(A.ground.size) if (A.mask >> i) & 1)


def _subset_of(ground: GroundSet, elems) -> Subset:
    return ground.from_indices(elems)


def _all_subcollections(elems):
    elems = sorted(elems)
    return chain.from_iterable(combinations(elems, k) for k in range(len(elems) + 1))


def oracle_forward(phi: WeightFn, X: Subset):
    Xe = elements(X)
    total = phi.zero()
    for A in phi.family.members:
        if elements(A) <= Xe:
            total = total + phi[A]
    return total


def oracle_invert(phi_or_f, A: Subset):
    """Alternating sum over every ``X <= A`` with an explicit sign from set sizes."""
    if isinstance(phi_or_f, WeightFn):
        f: Callable = lambda X: oracle_forward(phi_or_f, X)  # noqa: E731
    else:
        f = phi_or_f
    Ae = elements(A)
    total = 0
    for combo in _all_subcollections(Ae):
        sign = (-1) ** (len(Ae) + len(combo))
        total = total + sign * f(_subset_of(A.ground, combo))
    return total


def oracle_base_measure(mu: PointMeasure, V: BaseSet):
    Fe = elements(V.F)
    Ues = [elements(U) for U in V.Us]
    total = 0.0 if mu.scalar_kind == "float" else 0
    for A in mu.family.members:
        Ae = elements(A)
        if Ae & Fe:
            continue
        if all(Ae & Ue for Ue in Ues):
            total = total + mu[A]
    return total


def oracle_zeta_dense(values) -> list:
    """``out[X] = sum of values[A] over A <= X``, enumerating each ``X``'s subsets."""
    n = len(values).bit_length() - 1
    ground = GroundSet.of_size(n)
    out = []
    for x in range(1 << n):
        total = 0
        for combo in _all_subcollections(elements(Subset(x, ground))):
            total = total + values[sum(1 << i for i in combo)]
        out.append(total)
    return out


def oracle_mobius_dense(values) -> list:
    n = len(values).bit_length() - 1
    ground = GroundSet.of_size(n)
    out = []
    for a in range(1 << n):
        Ae = elements(Subset(a, ground))
        total = 0
        for combo in _all_subcollections(Ae):
            sign = (-1) ** (len(Ae) - len(combo))
            total = total + sign * values[sum(1 << i for i in combo)]
        out.append(total)
    return out


def _incidence(bits: int, signed: bool) -> np.ndarray:
    size = 1 << bits
    a = np.arange(size)[:, None]
    x = np.arange(size)[None, :]
    inc = ((a & ~x) == 0).astype(np.float64)
    if signed:
        pop = np.array([bin(v).count("1") for v in range(size)])
        inc *= (-1.0) ** (pop[None, :] - pop[:, None])
    return inc


def oracle_dense_blocked(values: np.ndarray, signed: bool = False) -> np.ndarray:
    """Float zeta (or Möbius, ``signed=True``) as a product with incidence matrices.

    The subset relation factors over a split of the bits into high and low
    halves, so the full ``2^n x 2^n`` incidence sum is ``B_hi^T @ V @ B_lo``
    with ``V`` the input reshaped to ``2^hi x 2^lo``.
    """
    values = np.asarray(values, dtype=np.float64)
    n = len(values).bit_length() - 1
    lo = n // 2
    hi = n - lo
    grid = values.reshape(1 << hi, 1 << lo)
    out = _incidence(hi, signed).T @ grid @ _incidence(lo, signed)
    return out.reshape(-1)


def oracle_table(phi: WeightFn) -> TransformTable:
    vals = np.empty(1 << phi.ground.size, dtype=object)
    vals[:] = [oracle_forward(phi, X) for X in phi.ground.all_subsets()]
    return TransformTable(phi.ground, vals, phi.scalar_kind)


def enumerate_union_closed_families(ground: GroundSet) -> list[SetFamily]:
    """Every union-closed family containing ∅ over a ground of size at most 4.

    Breadth-first search from ``{∅}``: each step adds one missing subset and
    closes under union.  Families are returned ordered by size, then by their
    sorted member masks.
    """
    if ground.size > MAX_FAMILY_GROUND:
        raise TooLarge(f"family enumeration is limited to |M| <= {MAX_FAMILY_GROUND}")
    universe = range(1 << ground.size)
    start = frozenset([0])
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for fam in frontier:
            for m in universe:
                if m in fam:
                    continue
                # fam is already closed, so one round of unions with m suffices
                grown = fam | {c | m for c in fam}
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    ordered = sorted(seen, key=lambda fam: (len(fam), sorted(fam)))
    return [SetFamily.from_masks(ground, fam) for fam in ordered]
