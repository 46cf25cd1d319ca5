"""Distinct-coordinate sieve over permutation types.

A sum of a function over tuples with pairwise-distinct coordinates can be
rewritten as a signed sum over permutation-restricted tuple sets.  The
generic path enumerates all k! permutations; when the tuple set is a full
Cartesian power and the function is multiplicative per coordinate, only the
conjugacy classes of S_k (integer partitions of k) are needed, which keeps
k = 20 feasible.

Also hosts the falling factorial, the generalized binomial with real upper
argument, and the cycle-type generating function C_k with its closed forms.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .core import ResourceLimitError

MAX_TYPE_K = 20
MAX_GENERIC_K = 8
MAX_EXPLICIT_TUPLES = 1 << 20


def falling_factorial(x, k: int):
    """(x)_k = x (x-1) ... (x-k+1), with (x)_0 = 1.

    Exact for int/Fraction arguments, float otherwise.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    result = x ** 0  # 1 in the type of x
    for i in range(k):
        result = result * (x - i)
    return result


def generalized_binomial(x, k: int):
    """C(x, k) = (x)_k / k! for real (or exact) x and integer k >= 0.

    Integer x yields the exact integer binomial (including 0 for
    0 <= x < k and the signed values for negative x).
    """
    num = falling_factorial(x, k)
    fact = math.factorial(k)
    if isinstance(num, int):
        return num // fact  # (x)_k is always divisible by k! for integer x
    return num / fact


def _partitions(k: int) -> Iterator[tuple[int, ...]]:
    """Integer partitions of k, parts descending."""
    def gen(n: int, mx: int):
        if n == 0:
            yield ()
            return
        for part in range(min(n, mx), 0, -1):
            for rest in gen(n - part, part):
                yield (part,) + rest
    yield from gen(k, k)


@dataclass(frozen=True)
class PermutationType:
    """A cycle type of S_k: c_i cycles of length i, sum(i * c_i) = k."""

    k: int
    cycle_counts: tuple[int, ...]  # (c_1, ..., c_k)
    count: int                     # permutations of this type
    sign: int                      # (-1)^(k - number of cycles)

    @property
    def num_cycles(self) -> int:
        return sum(self.cycle_counts)


def enumerate_types(k: int) -> list[PermutationType]:
    """One PermutationType per integer partition of k, with exact count
    k! / prod(i^c_i * c_i!) and sign (-1)^(k - l)."""
    if not 1 <= k <= MAX_TYPE_K:
        raise ResourceLimitError(f"k={k} outside supported range 1..{MAX_TYPE_K}")
    fact_k = math.factorial(k)
    types = []
    for lam in _partitions(k):
        c = [0] * (k + 1)
        for part in lam:
            c[part] += 1
        denom = 1
        for i in range(1, k + 1):
            if c[i]:
                denom *= (i ** c[i]) * math.factorial(c[i])
        num_cycles = sum(c)
        types.append(PermutationType(
            k=k,
            cycle_counts=tuple(c[1:]),
            count=fact_k // denom,
            sign=-1 if (k - num_cycles) % 2 else 1,
        ))
    return types


@dataclass(frozen=True)
class TupleSet:
    """A finite set of k-tuples over an alphabet.

    ``tuples`` is either an explicit collection or None, which stands for
    the full Cartesian power alphabet^k (the symmetric fast path never
    materializes it).
    """

    k: int
    alphabet: tuple
    tuples: tuple | None = None

    @classmethod
    def explicit(cls, k: int, alphabet: Iterable, tuples: Iterable) -> "TupleSet":
        tups = tuple(tuple(t) for t in tuples)
        alpha = tuple(alphabet)
        for t in tups:
            if len(t) != k:
                raise ValueError(f"tuple {t} does not have length {k}")
        return cls(k, alpha, tups)

    @classmethod
    def full_product(cls, alphabet: Iterable, k: int) -> "TupleSet":
        return cls(k, tuple(alphabet), None)

    def explicit_tuples(self) -> tuple:
        if self.tuples is not None:
            return self.tuples
        if len(self.alphabet) ** self.k > MAX_EXPLICIT_TUPLES:
            raise ResourceLimitError("full product too large to materialize")
        return tuple(itertools.product(self.alphabet, repeat=self.k))


def _cycles_of(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        cycles.append(cyc)
    return cycles


def distinct_tuple_sum(X: TupleSet, f: Callable) -> complex:
    """Direct evaluation: sum of f over the tuples of X with pairwise-distinct
    coordinates.  This is the quantity the sieve reproduces."""
    total = 0
    for x in X.explicit_tuples():
        if len(set(x)) == X.k:
            total += f(*x)
    return total


def sieve_distinct_sum(X: TupleSet, f: Callable) -> complex:
    """Signed permutation sieve for the distinct-coordinate sum.

    For each permutation tau of S_k, restrict X to the tuples that are
    constant on every cycle of tau, sum f there, and weight by sign(tau).
    Enumerates all k! permutations, so k is capped.
    """
    k = X.k
    if k > MAX_GENERIC_K:
        raise ResourceLimitError(f"generic sieve enumerates k! permutations; k={k} > {MAX_GENERIC_K}")
    tuples = X.explicit_tuples()
    total = 0
    for perm in itertools.permutations(range(k)):
        all_cycles = _cycles_of(perm)
        sign = 1 if (k - len(all_cycles)) % 2 == 0 else -1
        cycles = [cyc for cyc in all_cycles if len(cyc) > 1]
        part = 0
        for x in tuples:
            ok = True
            for cyc in cycles:
                v = x[cyc[0]]
                for j in cyc[1:]:
                    if x[j] != v:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                part += f(*x)
        total += sign * part
    return total


def symmetric_sieve(power_sums: Sequence, k: int):
    """Conjugacy-class sieve for X = D^k with a per-coordinate multiplicative f.

    ``power_sums[i-1]`` must hold sum(f_i over D) for the i-th power map
    (for a character chi this is s_{chi^i}(D)).  Returns
    sum over types of sign * count * prod(power_sums[i-1]^c_i).
    """
    if len(power_sums) < k:
        raise ValueError(f"need power sums for i = 1..{k}, got {len(power_sums)}")
    total = 0
    for t in enumerate_types(k):
        term = t.sign * t.count
        for i, c in enumerate(t.cycle_counts, start=1):
            if c:
                term = term * power_sums[i - 1] ** c
        total += term
    return total


def generating_function_Ck(weights: Sequence):
    """C_k(t_1, ..., t_k) = sum over cycle types of count * prod(t_i^c_i)."""
    k = len(weights)
    total = 0
    for t in enumerate_types(k):
        term = t.count
        for i, c in enumerate(t.cycle_counts, start=1):
            if c:
                term = term * weights[i - 1] ** c
        total += term
    return total


def periodic_weights(k: int, q, s, d: int) -> list:
    """t_i = q when d divides i, t_i = s otherwise.

    The source statement of the periodic closed form carries a conflicting
    display (s and q swapped at position d); direct enumeration confirms this
    assignment is the one that satisfies the closed form, so it is fixed here.
    """
    return [q if i % d == 0 else s for i in range(1, k + 1)]


@dataclass(frozen=True)
class Lemma23Report:
    """Closed-form checks for C_k.

    all_equal: C_k(q,...,q) vs (q+k-1)_k.
    periodic: C_k under the d-periodic assignment vs the binomial convolution
    k! * sum_i C((q-s)/d + i - 1, (q-s)/d - 1) * C(s + k - d*i - 1, s - 1),
    plus the swapped assignment for the record, and the upper bound
    (s + k + (q-s)/d - 1)_k.
    """

    k: int
    q: int
    s: int
    d: int
    all_equal_value: int
    all_equal_closed: int
    periodic_value: int            # q at positions divisible by d
    periodic_value_swapped: int    # s at positions divisible by d
    periodic_closed: int | None    # None when (q-s)/d is not a positive integer or s < 1
    upper_bound: Fraction
    matching_convention: str | None

    @property
    def all_equal_holds(self) -> bool:
        return self.all_equal_value == self.all_equal_closed

    @property
    def identity_holds(self) -> bool | None:
        if self.periodic_closed is None:
            return None
        return self.periodic_value == self.periodic_closed

    @property
    def inequality_holds(self) -> bool:
        return self.periodic_value <= self.upper_bound


def lemma23_check(k: int, q: int, s: int, d: int) -> Lemma23Report:
    """Evaluate both closed forms of C_k against direct type-sum enumeration."""
    if d < 1:
        raise ValueError("d must be >= 1")
    all_equal_value = generating_function_Ck([q] * k)
    all_equal_closed = falling_factorial(q + k - 1, k)

    value_q = generating_function_Ck(periodic_weights(k, q, s, d))
    value_s = generating_function_Ck(periodic_weights(k, s, q, d))

    closed = None
    e, rem = divmod(q - s, d)
    if rem == 0 and e >= 1 and s >= 1:
        closed = math.factorial(k) * sum(
            generalized_binomial(e + i - 1, e - 1)
            * generalized_binomial(s + k - d * i - 1, s - 1)
            for i in range(k // d + 1)
        )

    if closed is None:
        convention = None
    elif value_q == closed and value_s == closed:
        convention = "both"
    elif value_q == closed:
        convention = "q_at_multiples_of_d"
    elif value_s == closed:
        convention = "s_at_multiples_of_d"
    else:
        convention = "neither"

    bound = falling_factorial(Fraction(s + k - 1) + Fraction(q - s, d), k)
    return Lemma23Report(
        k=k, q=q, s=s, d=d,
        all_equal_value=all_equal_value,
        all_equal_closed=all_equal_closed,
        periodic_value=value_q,
        periodic_value_swapped=value_s,
        periodic_closed=closed,
        upper_bound=bound,
        matching_convention=convention,
    )
