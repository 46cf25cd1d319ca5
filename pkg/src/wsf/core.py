"""Weighted-sum Boolean functions and their truth tables.

Two variants are supported:

* the simplified function ``f`` on m variables x_0..x_{m-1}, which returns
  the bit selected by s(X) = sum(k * x_k) mod m;
* the original function ``g`` on m variables x_1..x_m, which reduces
  sum(k * x_k) modulo the smallest prime p >= m to a representative
  u in [1, p] and returns x_u when u <= m, else x_1.

Both variants are stored uniformly: a bit vector is a length-m sequence
whose position k holds x_k for ``f`` and x_{k+1} for ``g``, and truth-table
index e encodes the input with bit k of e equal to the bit at position k.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

DEFAULT_M_CAP = 28

_CHUNK_BITS = 20  # truth tables are materialized in 2^20-entry chunks

POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint16)


class ResourceLimitError(RuntimeError):
    """Raised when a request exceeds the configured variable-count cap."""


class Variant(enum.Enum):
    SIMPLIFIED = "f"
    ORIGINAL = "g"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def smallest_prime_geq(m: int) -> int:
    """Least prime p with p >= m."""
    if m < 1:
        raise ValueError("m must be positive")
    p = max(m, 2)
    while not is_prime(p):
        p += 1
    return p


@dataclass(frozen=True)
class FunctionSpec:
    """Which weighted-sum variant to evaluate, on how many variables.

    For the original variant, ``p`` is the smallest prime >= m; it is
    computed automatically and validated if supplied explicitly.
    """

    variant: Variant
    m: int
    p: int | None = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.variant is Variant.ORIGINAL:
            expected = smallest_prime_geq(self.m)
            if self.p is None:
                object.__setattr__(self, "p", expected)
            elif self.p != expected:
                raise ValueError(
                    f"p={self.p} is not the smallest prime >= {self.m} (expected {expected})"
                )
        elif self.p is not None:
            object.__setattr__(self, "p", None)

    @classmethod
    def simplified(cls, m: int) -> "FunctionSpec":
        return cls(Variant.SIMPLIFIED, m)

    @classmethod
    def original(cls, m: int) -> "FunctionSpec":
        return cls(Variant.ORIGINAL, m)


def _check_length(X: Sequence[int], m: int) -> None:
    if len(X) != m:
        raise ValueError(f"bit vector has length {len(X)}, expected {m}")
    for x in X:
        if x not in (0, 1):
            raise ValueError("bit vector entries must be 0 or 1")


def weighted_index_s(X: Sequence[int], m: int) -> int:
    """sum(k * x_k for k in 0..m-1) mod m."""
    _check_length(X, m)
    return sum(k for k in range(m) if X[k]) % m


def weighted_index_u(X: Sequence[int], m: int, p: int) -> int:
    """The representative in [1, p] of sum((k+1) * x_k) mod p.

    Position k of X stores the logical variable x_{k+1}; a sum congruent
    to 0 maps to u = p.
    """
    _check_length(X, m)
    u = sum(k + 1 for k in range(m) if X[k]) % p
    return u if u != 0 else p


def eval_f(spec: FunctionSpec, X: Sequence[int]) -> int:
    if spec.variant is not Variant.SIMPLIFIED:
        raise ValueError("eval_f requires a Simplified spec")
    return X[weighted_index_s(X, spec.m)]


def eval_g(spec: FunctionSpec, X: Sequence[int]) -> int:
    if spec.variant is not Variant.ORIGINAL:
        raise ValueError("eval_g requires an Original spec")
    u = weighted_index_u(X, spec.m, spec.p)
    return X[u - 1] if u <= spec.m else X[0]


def evaluate(spec: FunctionSpec, X: Sequence[int]) -> int:
    return eval_f(spec, X) if spec.variant is Variant.SIMPLIFIED else eval_g(spec, X)


def encode(X: Sequence[int]) -> int:
    """Truth-table index of X: bit k of the index is the bit at position k."""
    e = 0
    for k, x in enumerate(X):
        if x:
            e |= 1 << k
    return e


def decode(e: int, m: int) -> tuple[int, ...]:
    return tuple((e >> k) & 1 for k in range(m))


class TruthTable:
    """All 2^m values of a Boolean function, bit-packed 8 entries per byte."""

    __slots__ = ("m", "packed")

    def __init__(self, m: int, packed: np.ndarray):
        if packed.dtype != np.uint8 or packed.size != max(1 << m, 8) >> 3:
            raise ValueError("packed array has the wrong shape for m")
        self.m = m
        self.packed = packed

    @classmethod
    def from_bits(cls, m: int, bits: Iterable[int]) -> "TruthTable":
        arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits,
                         dtype=np.uint8)
        if arr.size != 1 << m:
            raise ValueError(f"expected {1 << m} values, got {arr.size}")
        return cls(m, np.packbits(arr, bitorder="little"))

    def __len__(self) -> int:
        return 1 << self.m

    def __getitem__(self, e: int) -> int:
        if not 0 <= e < (1 << self.m):
            raise IndexError(e)
        return int(self.packed[e >> 3] >> (e & 7)) & 1

    def bits(self) -> np.ndarray:
        """Unpacked uint8 array of all 2^m values (index order)."""
        return np.unpackbits(self.packed, count=1 << self.m, bitorder="little")

    def weight(self) -> int:
        return int(POPCOUNT8[self.packed].sum(dtype=np.int64))

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruthTable) and self.m == other.m
                and bool(np.array_equal(self.packed, other.packed)))

    def __repr__(self) -> str:
        return f"TruthTable(m={self.m}, weight={self.weight()})"


def _selector_residues(spec: FunctionSpec) -> np.ndarray:
    """Per-index weighted sums: s(X) for f, u(X)-1 clamped to the fallback for g.

    Returns, for every truth-table index, the position of the variable the
    function reads.  Built by doubling: appending variable k to the index
    space adds k (or k+1 mod p) to the running weighted sum.
    """
    m = spec.m
    if spec.variant is Variant.SIMPLIFIED:
        mod = m
        sums = np.zeros(1, dtype=np.uint16)
        for k in range(m):
            sums = np.concatenate([sums, (sums + k) % mod])
        return sums.astype(np.uint8)
    mod = spec.p
    sums = np.zeros(1, dtype=np.uint16)
    for k in range(m):
        sums = np.concatenate([sums, (sums + (k + 1)) % mod])
    u = np.where(sums == 0, mod, sums)  # representative in [1, p]
    pos = (u - 1).astype(np.uint8)
    return np.where(u <= m, pos, np.uint8(0))  # u > m falls back to x_1


def truth_table(spec: FunctionSpec, cap: int = DEFAULT_M_CAP) -> TruthTable:
    """Materialize all 2^m values by vectorized evaluation of the definition."""
    m = spec.m
    if m > cap:
        raise ResourceLimitError(f"m={m} exceeds cap {cap}")
    pos = _selector_residues(spec)
    size = 1 << m
    chunk = min(size, 1 << _CHUNK_BITS)
    out = np.empty(size >> 3 if size >= 8 else 1, dtype=np.uint8)
    if size < 8:
        vals = ((np.arange(size, dtype=np.uint32) >> pos) & 1).astype(np.uint8)
        return TruthTable.from_bits(m, vals)
    base_idx = np.arange(chunk, dtype=np.uint32)
    for start in range(0, size, chunk):
        idx = base_idx + np.uint32(start)
        vals = ((idx >> pos[start:start + chunk]) & 1).astype(np.uint8)
        out[start >> 3:(start + chunk) >> 3] = np.packbits(vals, bitorder="little")
    return TruthTable(m, out)


def truth_table_gray(spec: FunctionSpec, cap: int = DEFAULT_M_CAP) -> TruthTable:
    """Reference construction: walk inputs in Gray-code order, updating the
    weighted sum by +-k per flipped bit.  Much slower than `truth_table`;
    kept as an independent cross-check of the vectorized path.
    """
    m = spec.m
    if m > cap:
        raise ResourceLimitError(f"m={m} exceeds cap {cap}")
    simplified = spec.variant is Variant.SIMPLIFIED
    mod = m if simplified else spec.p
    bits = bytearray(1 << m)
    acc = 0  # running weighted sum of the current Gray-coded input, mod `mod`
    g = 0
    bits_g = [0] * m

    def value() -> int:
        if simplified:
            return bits_g[acc]
        u = acc if acc != 0 else mod
        return bits_g[u - 1] if u <= m else bits_g[0]

    bits[0] = value()
    for i in range(1, 1 << m):
        j = (i & -i).bit_length() - 1  # bit flipped between g(i-1) and g(i)
        g ^= 1 << j
        w = j if simplified else j + 1
        if bits_g[j]:
            bits_g[j] = 0
            acc = (acc - w) % mod
        else:
            bits_g[j] = 1
            acc = (acc + w) % mod
        bits[g] = value()
    return TruthTable.from_bits(m, bits)
