"""Exact count sequences and the transforms connecting totals to primes.

Everything here is integer or Fraction arithmetic; no floats.  Sequences are
dense windows of degrees: absent degrees raise rather than defaulting to
zero, while evaluation at a non-integer argument returns 0 (the convention
used throughout the bound computations).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .errors import CapacityError, DomainError

POLYA_CAP = 32


def _as_integer(x):
    """The integer value of x, or None when x is a non-integral number."""
    if isinstance(x, bool):
        raise DomainError("degree must be a number, not bool")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else None
    if isinstance(x, float):
        return int(x) if x.is_integer() else None
    raise DomainError(f"unsupported degree type {type(x).__name__}")


@dataclass(frozen=True)
class CountSequence:
    """Nonnegative integer counts on the dense degree window offset..offset+len-1."""

    values: tuple[int, ...]
    offset: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise DomainError("counts must be nonnegative")
        if self.offset == 0 and self.values and self.values[0] != 1:
            raise DomainError("a totals sequence must count exactly one object of degree 0")

    @classmethod
    def totals(cls, values) -> "CountSequence":
        return cls(tuple(values), 0)

    @classmethod
    def primes(cls, values) -> "CountSequence":
        """Prime counts for degrees 1..len(values)."""
        return cls(tuple(values), 1)

    @property
    def max_degree(self) -> int:
        return self.offset + len(self.values) - 1

    def at(self, x) -> int:
        """Value at degree x; 0 for non-integer x, error outside the window."""
        k = _as_integer(x)
        if k is None:
            return 0
        if not self.offset <= k <= self.max_degree:
            raise DomainError(
                f"degree {k} absent (window {self.offset}..{self.max_degree})")
        return self.values[k - self.offset]

    def window(self) -> list[tuple[int, int]]:
        return [(self.offset + i, v) for i, v in enumerate(self.values)]


@dataclass(frozen=True)
class SignedSequence:
    """Signed integer coefficients on the dense degree window starting at offset."""

    values: tuple[int, ...]
    offset: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def max_degree(self) -> int:
        return self.offset + len(self.values) - 1

    def at(self, k: int) -> int:
        if not self.offset <= k <= self.max_degree:
            raise DomainError(
                f"degree {k} absent (window {self.offset}..{self.max_degree})")
        return self.values[k - self.offset]

    def window(self) -> list[tuple[int, int]]:
        return [(self.offset + i, v) for i, v in enumerate(self.values)]


def _divisors(k: int) -> list[int]:
    out = []
    d = 1
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            if d != k // d:
                out.append(k // d)
        d += 1
    out.sort()
    return out


def _mobius(k: int) -> int:
    if k == 1:
        return 1
    mu = 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            k //= d
            if k % d == 0:
                return 0
            mu = -mu
        d += 1
    if k > 1:
        mu = -mu
    return mu


def _partitions(n: int):
    """Partitions of n as descending lists."""
    if n == 0:
        yield []
        return
    stack = [(n, n, [])]
    while stack:
        left, maxpart, prefix = stack.pop()
        if left == 0:
            yield prefix
            continue
        for p in range(min(left, maxpart), 0, -1):
            stack.append((left - p, p, prefix + [p]))


def count_graphs_polya(n: int) -> int:
    """Number of unlabeled simple graphs of order n, by cycle-index counting.

    Sums 2^(pair cycles) over permutation cycle types: a type with parts
    lambda_i fixes 2^e edge subsets where e = sum floor(lambda_i / 2) +
    sum_{i<j} gcd(lambda_i, lambda_j), and n!/z(lambda) permutations share
    the type.
    """
    if n < 0:
        raise DomainError("order must be nonnegative")
    if n > POLYA_CAP:
        raise CapacityError(f"cycle-index count of order {n} exceeds cap {POLYA_CAP}")
    nf = factorial(n)
    total = 0
    for part in _partitions(n):
        e = sum(p // 2 for p in part)
        for i in range(len(part)):
            for j in range(i + 1, len(part)):
                e += gcd(part[i], part[j])
        z = 1
        mult = {}
        for p in part:
            mult[p] = mult.get(p, 0) + 1
        for p, m in mult.items():
            z *= p ** m * factorial(m)
        total += (1 << e) * (nf // z)
    q, r = divmod(total, nf)
    assert r == 0
    return q


@lru_cache(maxsize=None)
def graph_totals(max_degree: int) -> CountSequence:
    """All-graph counts 0..max_degree via cycle-index counting."""
    return CountSequence.totals([count_graphs_polya(n) for n in range(max_degree + 1)])


@lru_cache(maxsize=None)
def graph_connected_totals(max_degree: int) -> CountSequence:
    """Connected-graph counts 1..max_degree, inverted from the totals."""
    return euler_inverse(graph_totals(max_degree), max_degree)


def _require_window(seq, lo: int, hi: int) -> None:
    if seq.offset > lo or seq.max_degree < hi:
        raise DomainError(
            f"sequence window {seq.offset}..{seq.max_degree} does not cover {lo}..{hi}")


def _weighted_divisor_sums(primes: CountSequence, n: int) -> list[int]:
    q = [0] * (n + 1)
    for k in range(1, n + 1):
        q[k] = sum(d * primes.at(d) for d in _divisors(k))
    return q


def euler_transform(primes: CountSequence, max_degree: int) -> CountSequence:
    """Totals whose multisets are built freely from the given prime counts."""
    _require_window(primes, 1, max_degree)
    q = _weighted_divisor_sums(primes, max_degree)
    s = [1] + [0] * max_degree
    for n in range(1, max_degree + 1):
        acc = sum(q[k] * s[n - k] for k in range(1, n + 1))
        s[n], r = divmod(acc, n)
        assert r == 0
    return CountSequence.totals(s)


def euler_inverse(totals: CountSequence, max_degree: int) -> CountSequence:
    """Prime counts whose Euler transform reproduces the given totals.

    Raises DomainError when no nonnegative integer prime sequence exists.
    """
    _require_window(totals, 0, max_degree)
    q = [0] * (max_degree + 1)
    for n in range(1, max_degree + 1):
        q[n] = n * totals.at(n) - sum(q[k] * totals.at(n - k) for k in range(1, n))
    p = [0] * (max_degree + 1)
    for n in range(1, max_degree + 1):
        acc = sum(_mobius(n // d) * q[d] for d in _divisors(n))
        p[n], r = divmod(acc, n)
        if r != 0:
            raise DomainError(f"totals are not an Euler transform: degree {n} is non-integral")
        if p[n] < 0:
            raise DomainError(f"totals are not an Euler transform: degree {n} is negative")
    return CountSequence.primes(p[1:])


def inversion_coefficients(totals: CountSequence, max_degree: int) -> SignedSequence:
    """Coefficients of the reciprocal of the totals generating function.

    B(n) = -S(n) - sum_{s=1}^{n-1} B(s) S(n-s); B(1) = -S(1) always, so any
    family with one object of degree 1 has B(1) = -1.
    """
    _require_window(totals, 0, max_degree)
    b = [0] * (max_degree + 1)
    for n in range(1, max_degree + 1):
        b[n] = -totals.at(n) - sum(b[s] * totals.at(n - s) for s in range(1, n))
    return SignedSequence(tuple(b[1:]), 1)


def truncated_prime_estimate(totals: CountSequence, coeffs: SignedSequence,
                             n: int, order: int) -> int:
    """S(n) + sum_{s=1}^{order-1} B(s) S(n-s), the truncated prime-count estimate.

    With order = n the sum telescopes to -B(n) by the recurrence defining B.
    """
    if order < 2:
        raise DomainError("truncation order must be at least 2")
    return totals.at(n) + sum(coeffs.at(s) * totals.at(n - s) for s in range(1, order))
