"""Exact weight and sensitivity measures of a truth table.

All averages are kept as `fractions.Fraction` (numerator over 2^m); nothing
here touches floating point, so the small-m coincidences like sigma_av = m/2
at m = 2, 3 survive comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .core import (DEFAULT_M_CAP, FunctionSpec, ResourceLimitError, TruthTable,
                   Variant, encode, truth_table)
from . import cyclic


@dataclass(frozen=True)
class SensitivityReport:
    m: int
    weight: int
    max_sensitivity: int
    total_flips: int
    average_sensitivity: Fraction


def weight(tt: TruthTable) -> int:
    """Number of inputs mapped to 1."""
    return tt.weight()


def pointwise_sensitivity(tt: TruthTable, X: Sequence[int]) -> int:
    """Number of coordinates of X whose single flip changes the value."""
    if len(X) != tt.m:
        raise ValueError(f"bit vector has length {len(X)}, expected {tt.m}")
    e = encode(X)
    return sum(1 for i in range(tt.m) if tt[e] != tt[e ^ (1 << i)])


def _flipped_along(bits: np.ndarray, i: int) -> np.ndarray:
    """bits reindexed by e -> e XOR 2^i."""
    return bits.reshape(-1, 2, 1 << i)[:, ::-1, :].reshape(-1)


def sensitivity_report(tt: TruthTable, cap: int = DEFAULT_M_CAP) -> SensitivityReport:
    """Exact weight, maximum and average sensitivity by full enumeration.

    One vectorized XOR pass per coordinate; the per-input flip counts are
    accumulated so the maximum comes out of the same sweep.
    """
    m = tt.m
    if m > cap:
        raise ResourceLimitError(f"m={m} exceeds cap {cap}")
    bits = tt.bits()
    per_input = np.zeros(bits.size, dtype=np.uint8)
    for i in range(m):
        per_input += bits ^ _flipped_along(bits, i)
    total = int(per_input.sum(dtype=np.int64))
    return SensitivityReport(
        m=m,
        weight=tt.weight(),
        max_sensitivity=int(per_input.max()),
        total_flips=total,
        average_sensitivity=Fraction(total, 1 << m),
    )


@dataclass(frozen=True)
class WeightIdentityReport:
    """wt(f) two ways: truth-table enumeration vs subset-sum counting.

    The enumeration side counts inputs with f(X) = 1; the counting side sums,
    over each selector residue s, the number of subsets of Z_m \\ {s} whose
    elements sum to 0 mod m.  The two agree exactly for every m.
    """

    m: int
    weight_enumeration: int
    weight_subset_counts: int

    @property
    def equal(self) -> bool:
        return self.weight_enumeration == self.weight_subset_counts


def weight_identity_check(m: int, cap: int = DEFAULT_M_CAP) -> WeightIdentityReport:
    wt = truth_table(FunctionSpec.simplified(m), cap=cap).weight()
    total = 0
    for s in range(m):
        D = cyclic.ResidueSet.complement_of(m, [s])
        total += cyclic.count_all_sizes(D, 0)
    return WeightIdentityReport(m, wt, total)


@dataclass(frozen=True)
class TrendPoint:
    m: int
    weight: int
    average_sensitivity: Fraction

    @property
    def weight_ratio(self) -> Fraction:
        """wt / 2^m."""
        return Fraction(self.weight, 1 << self.m)

    @property
    def sensitivity_ratio(self) -> Fraction:
        """sigma_av / m."""
        return self.average_sensitivity / self.m


def avg_sensitivity_trend(m_range: Iterable[int],
                          variant: Variant = Variant.SIMPLIFIED,
                          cap: int = DEFAULT_M_CAP) -> list[TrendPoint]:
    """Exact sigma_av and weight for each m, with the normalized ratios."""
    points = []
    for m in m_range:
        spec = FunctionSpec(variant, m)
        rep = sensitivity_report(truth_table(spec, cap=cap), cap=cap)
        points.append(TrendPoint(m, rep.weight, rep.average_sensitivity))
    return points
