"""Restricted translation actions on clopen windows of the odometer fiber.

The acting group is ``Z`` through powers of ``add_one``. A window ``W`` is
collapsible when its translates partition the fiber; for this abelian
action that happens exactly when ``W`` is a coset of a subgroup of
``Z/M_k``, and the isotropy subgroup ``{t : W + t = W}`` is then ``dZ``
with ``d * |W| = M_k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .odometer import ClopenSet, TruncatedTower, translate
from .supernatural import BondingSequence, factor


class NotCollapsible(ValueError):
    pass


@dataclass(frozen=True)
class RestrictedAction:
    tower: TruncatedTower
    window: ClopenSet

    def __post_init__(self):
        if self.window.tower != self.tower:
            raise ValueError("window belongs to a different tower")


@dataclass(frozen=True)
class IsotropyDescriptor:
    index: int
    generator: int


def _stabilizer_generator(w: ClopenSet) -> int:
    # The stabilizer of a subset of Z/M is dZ/M for some d | M.
    M = w.modulus
    for d in range(1, M + 1):
        if M % d == 0 and all((r + d) % M in w.residues for r in w.residues):
            return d
    raise AssertionError("unreachable: M itself stabilizes every set")


def is_collapsible(a: RestrictedAction) -> bool:
    """True iff the distinct translates of the window partition the fiber.

    The test runs at the window's own level; refining a coset of a subgroup
    of ``Z/M_j`` to level ``k`` gives a coset of its preimage, so the answer
    does not depend on the level chosen.
    """
    w = a.window
    return _stabilizer_generator(w) * len(w) == w.modulus


def isotropy(a: RestrictedAction) -> IsotropyDescriptor:
    if not is_collapsible(a):
        raise NotCollapsible(f"window {a.window.sorted()} is not a coset")
    d = _stabilizer_generator(a.window)
    return IsotropyDescriptor(index=d, generator=d)


def translates_partition(a: RestrictedAction) -> list[ClopenSet]:
    if not is_collapsible(a):
        raise NotCollapsible(f"window {a.window.sorted()} is not a coset")
    d = _stabilizer_generator(a.window)
    return [translate(a.window, t) for t in range(d)]


def collapsible_refinement(a: RestrictedAction) -> ClopenSet:
    """The depth-``k`` cylinder through the smallest point of the window."""
    k = a.tower.depth
    r = min(a.window.residues_at(k))
    return ClopenSet(a.tower, k, frozenset({r}))


def default_horizon(a: BondingSequence, b: BondingSequence, depth: int) -> int:
    """Search horizon for :func:`interleaving_consistent`.

    ``2 * depth`` unless one period carries much higher prime powers than
    the other. For purely periodic sequences with the same prime support,
    ``v_p(M^a_j) <= j * max_i v_p(a_i)`` while ``v_p(M^b_i) >= i // len(b)``,
    so ``len(b) * max_exponent(a) * depth`` terms of ``b`` always suffice.
    """
    def max_exponent(seq: BondingSequence) -> int:
        return max(e for m in seq.period for e in factor(m).values())

    ratio = max(
        len(b.period) * max_exponent(a),
        len(a.period) * max_exponent(b),
    )
    return depth * max(2, ratio)


def interleaving_consistent(
    a: BondingSequence, b: BondingSequence, depth: int, horizon: int | None = None
) -> bool:
    """Depth-bounded screen for return equivalence of two odometers.

    After deleting both prefixes, every cumulative modulus ``M^a_j`` with
    ``j <= depth`` must divide some ``M^b_i`` with ``i <= horizon``, and
    symmetrically. False is a definite refutation of the truncated data;
    True only means nothing was found at this depth.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if horizon is None:
        horizon = default_horizon(a, b, depth)
    a, b = a.drop_prefix(), b.drop_prefix()

    def embeds(x: BondingSequence, y: BondingSequence) -> bool:
        # M^y_i divides M^y_{i+1}, so checking the last one is enough.
        top = y.moduli(horizon)[-1]
        return all(top % M == 0 for M in x.moduli(depth)[1:])

    return embeds(a, b) and embeds(b, a)
