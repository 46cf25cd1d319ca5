"""Characters of Z_m, exact subset-sum counts, and deviation bounds.

N(k, b, D) is the number of k-element subsets of D (a subset of Z_m) whose
elements sum to b mod m.  The counts are computed exactly by dynamic
programming over the elements of D with Python integers, with a Gray-walk
power-set enumeration as the independent oracle.  The deviation of
N(k, b, D) from C(n, k) / m is bounded by a totient-weighted sum of
generalized binomials in the pseudo-randomness measure Phi(D); the
reports here evaluate that bound and its two corollaries instance by
instance.
"""
from __future__ import annotations

import cmath
import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .core import ResourceLimitError
from .sieve import generalized_binomial

MAX_DP_ELEMENTS = 64
MAX_BRUTE_ELEMENTS = 24

BOUND_SLACK = 1e-9  # absorbs double-precision error in Phi(D); lhs is exact


@dataclass(frozen=True)
class ResidueSet:
    """A subset D of Z_m."""

    m: int
    members: frozenset[int]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("modulus must be >= 2")
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        if any(not 0 <= a < self.m for a in self.members):
            raise ValueError("members must lie in [0, m)")

    @classmethod
    def of(cls, m: int, members: Iterable[int]) -> "ResidueSet":
        return cls(m, frozenset(members))

    @classmethod
    def full(cls, m: int) -> "ResidueSet":
        return cls(m, frozenset(range(m)))

    @classmethod
    def complement_of(cls, m: int, excluded: Iterable[int]) -> "ResidueSet":
        """Z_m minus the given residues."""
        return cls(m, frozenset(range(m)) - frozenset(excluded))

    @property
    def n(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        bits = 0
        for a in self.members:
            bits |= 1 << a
        return bits

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def complement(self) -> "ResidueSet":
        return ResidueSet(self.m, frozenset(range(self.m)) - self.members)


@dataclass(frozen=True)
class CharacterIndex:
    """The additive character a -> exp(2*pi*i * j * a / m)."""

    m: int
    j: int

    def __post_init__(self):
        if not 0 <= self.j < self.m:
            raise ValueError("character index must lie in [0, m)")

    @property
    def order(self) -> int:
        return self.m // math.gcd(self.j, self.m)

    @property
    def is_trivial(self) -> bool:
        return self.j == 0

    def __call__(self, a: int) -> complex:
        return cmath.exp(2j * math.pi * self.j * (a % self.m) / self.m)


def characters(m: int):
    """All m additive characters of Z_m."""
    return [CharacterIndex(m, j) for j in range(m)]


def character_sum(D: ResidueSet, chi: CharacterIndex | int) -> complex:
    """s_chi(D) = sum of chi(a) over a in D."""
    if isinstance(chi, int):
        chi = CharacterIndex(D.m, chi % D.m)
    if chi.is_trivial:
        return complex(D.n)
    return sum((chi(a) for a in D.members), start=0j)


def phi_of_D(D: ResidueSet) -> float:
    """Max of |s_chi(D)| over the nontrivial characters.

    For |D| > m/2 the sum is evaluated on the complement (s_chi(D) =
    -s_chi(complement) for nontrivial chi), which keeps the rounding error
    proportional to the smaller set.
    """
    base = D.complement() if D.n > D.m // 2 else D
    best = 0.0
    for j in range(1, D.m):
        chi = CharacterIndex(D.m, j)
        best = max(best, abs(character_sum(base, chi)))
    return best


def euler_phi(r: int) -> int:
    result = r
    n = r
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def smallest_prime_divisor(m: int) -> int:
    if m < 2:
        raise ValueError("m must be >= 2")
    d = 2
    while d * d <= m:
        if m % d == 0:
            return d
        d += 1
    return m


@dataclass(frozen=True)
class CountTable:
    """Exact N(k, b, D) for 0 <= k <= n and b in Z_m."""

    m: int
    members: tuple[int, ...]
    counts: tuple[tuple[int, ...], ...]  # counts[k][b]

    @property
    def n(self) -> int:
        return len(self.members)

    def get(self, k: int, b: int) -> int:
        return self.counts[k][b % self.m]

    def row_sum(self, k: int) -> int:
        return sum(self.counts[k])

    def all_sizes(self, b: int) -> int:
        """N(b, D) = sum over k of N(k, b, D): subsets of any size."""
        return sum(row[b % self.m] for row in self.counts)


def count_subset_sums(D: ResidueSet) -> CountTable:
    """DP over the elements of D; state is (subset size, residue of the sum)."""
    n, m = D.n, D.m
    if n > MAX_DP_ELEMENTS:
        raise ResourceLimitError(f"|D|={n} exceeds DP cap {MAX_DP_ELEMENTS}")
    counts = [[0] * m for _ in range(n + 1)]
    counts[0][0] = 1
    for idx, a in enumerate(D.sorted_members()):
        for k in range(idx, -1, -1):
            row = counts[k]
            nxt = counts[k + 1]
            for b in range(m):
                c = row[b]
                if c:
                    nxt[(b + a) % m] += c
    return CountTable(m, D.sorted_members(), tuple(tuple(r) for r in counts))


def count_subset_sums_bruteforce(D: ResidueSet) -> CountTable:
    """Independent oracle: walk all 2^n subsets in Gray order, maintaining the
    running size and sum so each step is O(1)."""
    n, m = D.n, D.m
    if n > MAX_BRUTE_ELEMENTS:
        raise ResourceLimitError(f"|D|={n} exceeds enumeration cap {MAX_BRUTE_ELEMENTS}")
    elems = D.sorted_members()
    counts = [[0] * m for _ in range(n + 1)]
    counts[0][0] = 1  # the empty subset
    size = 0
    total = 0
    in_set = [False] * n
    for i in range(1, 1 << n):
        j = (i & -i).bit_length() - 1
        if in_set[j]:
            in_set[j] = False
            size -= 1
            total -= elems[j]
        else:
            in_set[j] = True
            size += 1
            total += elems[j]
        counts[size][total % m] += 1
    return CountTable(m, elems, tuple(tuple(r) for r in counts))


def count_all_sizes(D: ResidueSet, b: int) -> int:
    """Number of subsets of D, of any size, summing to b mod m."""
    return count_subset_sums(D).all_sizes(b)


@dataclass(frozen=True)
class BoundReport:
    """One instance of the deviation bound |N(k,b,D) - C(n,k)/m|.

    rhs_thm31 is the totient-weighted divisor sum; rhs_cor32 collapses it to
    the smallest prime divisor d of m; rhs_cor33 applies when D misses c >= 1
    residues and replaces Phi(D) by its bound c.  All three are theorems, so
    ``holds`` is expected True on every instance.
    """

    m: int
    members: tuple[int, ...]
    k: int
    b: int
    count: int
    lhs: Fraction
    rhs_thm31: float
    rhs_cor32: float
    rhs_cor33: float | None
    phi_D: float
    d: int

    @staticmethod
    def _le(lhs: Fraction, rhs: float) -> bool:
        return float(lhs) <= rhs + BOUND_SLACK * max(1.0, rhs)

    @property
    def holds_thm31(self) -> bool:
        return self._le(self.lhs, self.rhs_thm31)

    @property
    def holds_cor32(self) -> bool:
        return self._le(self.lhs, self.rhs_cor32)

    @property
    def holds_cor33(self) -> bool | None:
        if self.rhs_cor33 is None:
            return None
        return self._le(self.lhs, self.rhs_cor33)

    @property
    def holds(self) -> bool:
        return (self.holds_thm31 and self.holds_cor32
                and self.holds_cor33 is not False)


def theorem31_rhs(m: int, n: int, k: int, phi: float) -> float:
    """(1/m) * sum over divisors r > 1 of m of
    euler_phi(r) * C((n + Phi)/r + k - 1, k)."""
    total = 0.0
    for r in divisors(m):
        if r > 1:
            total += euler_phi(r) * generalized_binomial((n + phi) / r + k - 1, k)
    return total / m


def theorem31_report(D: ResidueSet, k: int, b: int,
                     table: CountTable | None = None,
                     phi: float | None = None) -> BoundReport:
    """Evaluate the deviation bound for one (D, k, b).

    ``table`` and ``phi`` may be passed in when sweeping many (k, b) pairs
    over the same D.
    """
    n, m = D.n, D.m
    if k > n:
        raise ValueError(f"k={k} exceeds |D|={n}")
    if table is None:
        table = count_subset_sums(D)
    if phi is None:
        phi = phi_of_D(D)
    count = table.get(k, b)
    lhs = abs(Fraction(count) - Fraction(math.comb(n, k), m))
    d = smallest_prime_divisor(m)
    rhs33 = generalized_binomial(m / d + k - 1, k) if n < m else None
    return BoundReport(
        m=m, members=D.sorted_members(), k=k, b=b, count=count,
        lhs=lhs,
        rhs_thm31=theorem31_rhs(m, n, k, phi),
        rhs_cor32=generalized_binomial((n + phi) / d + k - 1, k),
        rhs_cor33=rhs33,
        phi_D=phi,
        d=d,
    )


def zero_sum_threshold(m: int) -> int:
    """m/d + d - 2 with d the smallest prime divisor of m: any strictly larger
    subset of Z_m reaches every residue as a nonempty subset sum."""
    d = smallest_prime_divisor(m)
    return m // d + d - 2


def dias_da_silva_threshold(p: int, eps: float) -> float:
    """(2 + eps) * sqrt(p): the prime-field threshold, valid asymptotically."""
    return (2 + eps) * math.sqrt(p)


def zero_sum_check(m: int, A: ResidueSet | Iterable[int]) -> bool:
    """True iff every b in Z_m is the sum of a nonempty subset of A."""
    members = A.members if isinstance(A, ResidueSet) else frozenset(A)
    full = (1 << m) - 1
    reach = 0  # bit b set <=> b is a nonempty-subset sum
    for a in sorted(members):
        shifted = ((reach << a) | (reach >> (m - a))) & full if a else reach
        reach |= shifted | (1 << a)
        if reach == full:
            return True
    return reach == full


@dataclass(frozen=True)
class ZeroSumScanReport:
    m: int
    d: int
    threshold: int
    mode: str
    seed: int | None
    num_checked: int
    counterexamples: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def zero_sum_scan(m: int, mode: str = "auto", seed: int = 0,
                  samples: int = 10_000) -> ZeroSumScanReport:
    """Scan subsets A with |A| > m/d + d - 2 for failures of full reachability.

    ``exhaustive`` visits every qualifying A (meant for m <= 16); ``sampled``
    draws ``samples`` qualifying sets from a seeded RNG; ``auto`` picks
    exhaustive for m <= 16.  Expected outcome: no counterexamples.
    """
    if mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "auto":
        mode = "exhaustive" if m <= 16 else "sampled"
    thr = zero_sum_threshold(m)
    d = smallest_prime_divisor(m)
    bad: list[tuple[int, ...]] = []
    checked = 0
    if mode == "exhaustive":
        for size in range(thr + 1, m + 1):
            for A in itertools.combinations(range(m), size):
                checked += 1
                if not zero_sum_check(m, A):
                    bad.append(A)
        return ZeroSumScanReport(m, d, thr, mode, None, checked, tuple(bad))
    rng = random.Random(seed)
    if thr + 1 > m:
        return ZeroSumScanReport(m, d, thr, mode, seed, 0, ())
    for _ in range(samples):
        size = rng.randint(thr + 1, m)
        A = tuple(sorted(rng.sample(range(m), size)))
        checked += 1
        if not zero_sum_check(m, A):
            bad.append(A)
    return ZeroSumScanReport(m, d, thr, mode, seed, checked, tuple(bad))
