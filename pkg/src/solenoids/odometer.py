"""Finite truncations of the odometer on the profinite group of a bonding sequence.

At depth ``k`` the fiber is ``Z/M_k`` with ``M_j = m_1 * ... * m_j``; the
quotient maps of the tower are reductions ``mod M_j``. Clopen subsets of
the fiber are unions of level-``j`` cylinders, stored as residue sets
modulo ``M_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .supernatural import BondingSequence


@dataclass(frozen=True)
class TruncatedTower:
    seq: BondingSequence
    depth: int

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError(f"depth must be positive, got {self.depth}")
        object.__setattr__(self, "_moduli", tuple(self.seq.moduli(self.depth)))

    @property
    def moduli(self) -> tuple[int, ...]:
        return self._moduli

    @property
    def order(self) -> int:
        """``M_k``, the size of the truncated fiber."""
        return self._moduli[-1]

    def modulus(self, j: int) -> int:
        if not 0 <= j <= self.depth:
            raise ValueError(f"level {j} outside 0..{self.depth}")
        return self._moduli[j]

    def truncate(self, j: int) -> "TruncatedTower":
        return TruncatedTower(self.seq, j)

    def point(self, residue: int) -> "TowerPoint":
        return TowerPoint(self, residue)


@dataclass(frozen=True)
class TowerPoint:
    tower: TruncatedTower
    residue: int

    def __post_init__(self):
        if not 0 <= self.residue < self.tower.order:
            raise ValueError(f"residue {self.residue} outside [0, {self.tower.order})")

    @property
    def coordinates(self) -> tuple[int, ...]:
        """Coherent residues ``x_j = residue mod M_j`` for ``j = 0..k``."""
        return tuple(self.residue % M for M in self.tower.moduli)

    def project(self, j: int) -> "TowerPoint":
        return TowerPoint(self.tower.truncate(j), self.residue % self.tower.modulus(j))


def add_one(p: TowerPoint) -> TowerPoint:
    return TowerPoint(p.tower, (p.residue + 1) % p.tower.order)


def add(p: TowerPoint, t: int) -> TowerPoint:
    """Apply ``add_one`` ``t`` times (its inverse when ``t < 0``)."""
    return TowerPoint(p.tower, (p.residue + t) % p.tower.order)


def orbit(p: TowerPoint) -> list[TowerPoint]:
    """The ``Z``-orbit of ``p``, starting at ``p`` itself."""
    out = [p]
    q = add_one(p)
    while q != p:
        out.append(q)
        q = add_one(q)
    return out


@dataclass(frozen=True)
class ClopenSet:
    """Union of level-``level`` cylinders, given by residues mod ``M_level``."""

    tower: TruncatedTower
    level: int
    residues: frozenset[int]

    def __post_init__(self):
        M = self.tower.modulus(self.level)
        residues = frozenset(self.residues)
        if not residues:
            raise ValueError("clopen set must be nonempty")
        bad = [r for r in residues if not 0 <= r < M]
        if bad:
            raise ValueError(f"residues {sorted(bad)} outside [0, {M}) at level {self.level}")
        object.__setattr__(self, "residues", residues)

    @classmethod
    def full(cls, tower: TruncatedTower) -> "ClopenSet":
        return cls(tower, 0, frozenset({0}))

    @classmethod
    def cylinder(cls, point: TowerPoint, level: int | None = None) -> "ClopenSet":
        level = point.tower.depth if level is None else level
        return cls(point.tower, level, frozenset({point.residue % point.tower.modulus(level)}))

    @property
    def modulus(self) -> int:
        return self.tower.modulus(self.level)

    def __contains__(self, z: int) -> bool:
        return z % self.modulus in self.residues

    def __len__(self):
        return len(self.residues)

    def sorted(self) -> list[int]:
        return sorted(self.residues)

    def residues_at(self, level: int) -> frozenset[int]:
        """The same set written at another level (refined or projected)."""
        M = self.tower.modulus(level)
        if level >= self.level:
            step = self.modulus
            return frozenset(r + i * step for r in self.residues for i in range(M // step))
        projected = frozenset(r % M for r in self.residues)
        if len(projected) * (self.modulus // M) != len(self.residues):
            raise ValueError(f"set is not a pullback from level {level}")
        return projected

    def refine(self, level: int) -> "ClopenSet":
        if level < self.level:
            raise ValueError("refinement cannot lower the level")
        return ClopenSet(self.tower, level, self.residues_at(level))

    @property
    def is_canonical(self) -> bool:
        return canonicalize(self).level == self.level

    def issubset(self, other: "ClopenSet") -> bool:
        level = max(self.level, other.level)
        return self.residues_at(level) <= other.residues_at(level)

    def isdisjoint(self, other: "ClopenSet") -> bool:
        level = max(self.level, other.level)
        return self.residues_at(level).isdisjoint(other.residues_at(level))

    def same_set(self, other: "ClopenSet") -> bool:
        level = max(self.level, other.level)
        return self.residues_at(level) == other.residues_at(level)


def _is_pullback(residues: frozenset[int], M_hi: int, M_lo: int) -> bool:
    projected = {r % M_lo for r in residues}
    return len(projected) * (M_hi // M_lo) == len(residues)


def canonicalize(w: ClopenSet) -> ClopenSet:
    """Rewrite ``w`` at the lowest level where it is a full preimage."""
    for j in range(w.level + 1):
        if _is_pullback(w.residues, w.modulus, w.tower.modulus(j)):
            M = w.tower.modulus(j)
            return ClopenSet(w.tower, j, frozenset(r % M for r in w.residues))
    raise AssertionError("unreachable: every set is a pullback from its own level")


def translate(w: ClopenSet, t: int) -> ClopenSet:
    M = w.modulus
    return canonicalize(ClopenSet(w.tower, w.level, frozenset((r + t) % M for r in w.residues)))


def clopen(tower: TruncatedTower, level: int, residues: Iterable[int]) -> ClopenSet:
    return ClopenSet(tower, level, frozenset(residues))


def agreement_level(tower: TruncatedTower, x: int, y: int) -> int:
    """Largest ``j <= k`` with ``x = y mod M_j``."""
    j = 0
    while j < tower.depth and (x - y) % tower.modulus(j + 1) == 0:
        j += 1
    return j


def distance(tower: TruncatedTower, x: int, y: int) -> Fraction:
    """Ultrametric ``2^-j`` where ``j`` is the agreement level of ``x`` and ``y``."""
    return Fraction(1, 2 ** agreement_level(tower, x, y))


def diameter(w: ClopenSet) -> Fraction:
    """Largest pairwise distance in ``w``.

    A singleton at full depth gets ``2^-k`` by convention, the resolution
    limit of the truncation. In an ultrametric the diameter is ``2^-J`` for
    the largest level ``J`` at which all points of ``w`` coincide, so no
    expansion to depth ``k`` is needed.
    """
    J = 0
    while J < w.level and len({r % w.tower.modulus(J + 1) for r in w.residues}) == 1:
        J += 1
    return Fraction(1, 2**J)
