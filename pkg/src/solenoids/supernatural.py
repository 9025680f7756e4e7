"""Bonding sequences and their supernatural-number characteristic.

A bonding sequence ``m = (m_1, m_2, ...)`` of covering degrees is stored in
eventually periodic form: a finite prefix followed by a period repeated
forever. Its characteristic is the supernatural number

    C_m(p) = sum_i v_p(m_i)   in {0, 1, 2, ..., inf}

which is finite for primes that only divide prefix entries and infinite for
every prime dividing a period entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping

INF = math.inf

# Entries above this bound make trial division impractically slow.
MAX_ENTRY = 2**63 - 1


def factor(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 2`` by trial division."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    if n < 2:
        raise ValueError(f"cannot factor {n}: need n >= 2")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # 6k +- 1 wheel
    p = 5
    while p * p <= n:
        for q in (p, p + 2):
            while n % q == 0:
                out[q] = out.get(q, 0) + 1
                n //= q
        p += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factor(n) == {n: 1}


def _check_entries(name: str, values: Iterable[int]) -> tuple[int, ...]:
    out = []
    for i, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"{name}[{i}] must be an integer, got {v!r}")
        if v < 2:
            raise ValueError(f"{name}[{i}] = {v}: covering degrees must be >= 2")
        if v > MAX_ENTRY:
            raise ValueError(f"{name}[{i}] = {v} exceeds the supported bound {MAX_ENTRY}")
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class BondingSequence:
    """The infinite sequence ``prefix + period + period + ...``."""

    prefix: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", _check_entries("prefix", self.prefix))
        object.__setattr__(self, "period", _check_entries("period", self.period))
        if not self.period:
            raise ValueError("period must be nonempty")

    @classmethod
    def periodic(cls, *period: int) -> "BondingSequence":
        return cls((), period)

    def term(self, i: int) -> int:
        """The 1-indexed term ``m_i``."""
        if i < 1:
            raise IndexError("terms are indexed from 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.period[(i - 1 - len(self.prefix)) % len(self.period)]

    def terms(self, k: int) -> list[int]:
        return [self.term(i) for i in range(1, k + 1)]

    def moduli(self, k: int) -> list[int]:
        """Cumulative products ``M_0 = 1, M_1, ..., M_k``."""
        out = [1]
        for m in self.terms(k):
            out.append(out[-1] * m)
        return out

    def drop_prefix(self) -> "BondingSequence":
        return BondingSequence((), self.period)

    def shift(self, *entries: int) -> "BondingSequence":
        """Prepend ``entries`` to the sequence."""
        return BondingSequence(tuple(entries) + self.prefix, self.period)

    def __str__(self):
        pre = ",".join(map(str, self.prefix))
        per = ",".join(map(str, self.period))
        return f"[{pre}]({per})^inf" if pre else f"({per})^inf"


@dataclass(frozen=True)
class SupernaturalNumber:
    """Prime -> exponent map with finitely many finite and infinite exponents."""

    finite_part: Mapping[int, int] = field(default_factory=dict)
    infinite_primes: frozenset[int] = frozenset()

    def __post_init__(self):
        finite = {int(p): int(e) for p, e in dict(self.finite_part).items() if e != 0}
        infinite = frozenset(int(p) for p in self.infinite_primes)
        for p, e in finite.items():
            if e < 0:
                raise ValueError(f"negative exponent {e} at prime {p}")
        for p in set(finite) | infinite:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        clash = set(finite) & infinite
        if clash:
            raise ValueError(f"primes {sorted(clash)} given both finite and infinite exponents")
        object.__setattr__(self, "finite_part", MappingProxyType(dict(sorted(finite.items()))))
        object.__setattr__(self, "infinite_primes", infinite)

    @classmethod
    def from_int(cls, n: int) -> "SupernaturalNumber":
        return cls(factor(n) if n > 1 else {})

    def __call__(self, p: int) -> float | int:
        """Exponent of ``p``; ``math.inf`` for infinite primes."""
        if p in self.infinite_primes:
            return INF
        return self.finite_part.get(p, 0)

    exponent = __call__

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.finite_part) | self.infinite_primes

    def __mul__(self, other: "SupernaturalNumber") -> "SupernaturalNumber":
        infinite = self.infinite_primes | other.infinite_primes
        finite = dict(self.finite_part)
        for p, e in other.finite_part.items():
            finite[p] = finite.get(p, 0) + e
        return SupernaturalNumber(
            {p: e for p, e in finite.items() if p not in infinite}, infinite
        )

    def divides(self, other: "SupernaturalNumber") -> bool:
        return all(self(p) <= other(p) for p in self.support)

    def __hash__(self):
        return hash((tuple(self.finite_part.items()), self.infinite_primes))

    def __str__(self):
        parts = []
        for p in sorted(self.support):
            e = self(p)
            parts.append(f"{p}" if e == 1 else f"{p}^{'inf' if e == INF else e}")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=4096)
def characteristic(seq: BondingSequence) -> SupernaturalNumber:
    """Compute ``C_m``: period primes get exponent infinity, prefix primes a finite sum."""
    infinite: set[int] = set()
    for m in seq.period:
        infinite.update(factor(m))
    finite: dict[int, int] = {}
    for m in seq.prefix:
        for p, e in factor(m).items():
            if p not in infinite:
                finite[p] = finite.get(p, 0) + e
    return SupernaturalNumber(finite, frozenset(infinite))


def sequences_return_equivalent(a: BondingSequence, b: BondingSequence) -> bool:
    """Return equivalence of bonding sequences.

    The general relation asks that the characteristics agree at all but
    finitely many primes and have the same infinite primes. For eventually
    periodic sequences each characteristic has finite support, so the first
    condition always holds and the relation reduces to equality of the sets
    of infinite primes.
    """
    return characteristic(a).infinite_primes == characteristic(b).infinite_primes


def characteristics_equal(a: BondingSequence, b: BondingSequence) -> bool:
    return characteristic(a) == characteristic(b)


def infinite_witness(a: BondingSequence, b: BondingSequence) -> int | None:
    """Smallest prime that is infinite in exactly one characteristic."""
    diff = characteristic(a).infinite_primes ^ characteristic(b).infinite_primes
    return min(diff) if diff else None


def exponent_witness(a: BondingSequence, b: BondingSequence) -> int | None:
    """Smallest prime at which the two characteristics differ."""
    ca, cb = characteristic(a), characteristic(b)
    diff = [p for p in ca.support | cb.support if ca(p) != cb(p)]
    return min(diff) if diff else None
