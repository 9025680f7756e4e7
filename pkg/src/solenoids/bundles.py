"""Surface-group words, the homomorphism h0 and suspension holonomy of adic surfaces.

``pi_1(Sigma_g)`` is generated by ``a1, b1, ..., ag, bg`` with the single
relation ``[a1, b1] ... [ag, bg] = 1``. The map ``h0`` sends ``a1`` to 1 and
every other generator to 0; composing it with the odometer gives the
holonomy action of an adic surface on its Cantor fiber.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .odometer import TowerPoint, add
from .supernatural import BondingSequence


@dataclass(frozen=True)
class Letter:
    kind: str  # "a" or "b"
    index: int
    exponent: int = 1

    def __post_init__(self):
        if self.kind not in ("a", "b"):
            raise ValueError(f"generator kind must be 'a' or 'b', got {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"generator index must be >= 1, got {self.index}")
        if self.exponent == 0:
            raise ValueError("exponents must be nonzero")

    def inverse(self) -> "Letter":
        return Letter(self.kind, self.index, -self.exponent)

    def __str__(self):
        return f"{self.kind}{self.index}" + ("" if self.exponent == 1 else f"^{self.exponent}")


_TOKEN = re.compile(r"([ab])(\d+)(?:\^(-?\d+))?")


@dataclass(frozen=True)
class SurfaceGroupWord:
    """An unreduced word in the standard generators of ``pi_1(Sigma_g)``."""

    genus: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")
        letters = tuple(self.letters)
        for x in letters:
            if x.index > self.genus:
                raise ValueError(f"generator {x.kind}{x.index} does not exist in genus {self.genus}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, genus: int, text: str) -> "SurfaceGroupWord":
        """Parse e.g. ``"a1^3 b2 a1^-1"``; whitespace between letters is optional."""
        text = text.replace(" ", "")
        letters, pos = [], 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"cannot parse word at {text[pos:]!r}")
            kind, index, exp = m.groups()
            letters.append(Letter(kind, int(index), int(exp) if exp else 1))
            pos = m.end()
        return cls(genus, tuple(letters))

    def __add__(self, other: "SurfaceGroupWord") -> "SurfaceGroupWord":
        if self.genus != other.genus:
            raise ValueError("cannot concatenate words of different genus")
        return SurfaceGroupWord(self.genus, self.letters + other.letters)

    def inverse(self) -> "SurfaceGroupWord":
        return SurfaceGroupWord(self.genus, tuple(x.inverse() for x in reversed(self.letters)))

    def __str__(self):
        return " ".join(map(str, self.letters)) or "1"


def generator(genus: int, kind: str, index: int, exponent: int = 1) -> SurfaceGroupWord:
    return SurfaceGroupWord(genus, (Letter(kind, index, exponent),))


def commutator(u: SurfaceGroupWord, v: SurfaceGroupWord) -> SurfaceGroupWord:
    return u + v + u.inverse() + v.inverse()


def relator(genus: int) -> SurfaceGroupWord:
    """``[a1, b1] [a2, b2] ... [ag, bg]``."""
    word = SurfaceGroupWord(genus)
    for i in range(1, genus + 1):
        word = word + commutator(generator(genus, "a", i), generator(genus, "b", i))
    return word


def h0(w: SurfaceGroupWord) -> int:
    return sum(x.exponent for x in w.letters if x.kind == "a" and x.index == 1)


def holonomy(w: SurfaceGroupWord, p: TowerPoint) -> TowerPoint:
    return add(p, h0(w))


@dataclass(frozen=True)
class AdicSurface:
    genus: int
    seq: BondingSequence

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")


@dataclass(frozen=True)
class CoveringDatum:
    base_genus: int
    degree: int
    cover_genus: int
    euler_base: int
    euler_cover: int


def euler_characteristic(genus: int) -> int:
    if genus < 1:
        raise ValueError(f"genus must be >= 1, got {genus}")
    return 2 - 2 * genus


def cover_of(base_genus: int, degree: int) -> CoveringDatum:
    """Unbranched ``degree``-fold cover of the closed genus-``base_genus`` surface."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    chi = euler_characteristic(base_genus)
    return CoveringDatum(
        base_genus=base_genus,
        degree=degree,
        cover_genus=degree * (base_genus - 1) + 1,
        euler_base=chi,
        euler_cover=degree * chi,
    )


def suspension_orbit(
    s: AdicSurface, words: Sequence[SurfaceGroupWord] | Iterable[SurfaceGroupWord], start: TowerPoint
) -> list[TowerPoint]:
    """Apply the holonomy of each word in turn, collecting every intermediate point."""
    if start.tower.seq != s.seq:
        raise ValueError("start point lives on a different tower")
    out, p = [], start
    for w in words:
        if w.genus != s.genus:
            raise ValueError(f"word of genus {w.genus} on a genus {s.genus} surface")
        p = holonomy(w, p)
        out.append(p)
    return out
