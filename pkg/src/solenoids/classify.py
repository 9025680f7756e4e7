"""Homeomorphism verdicts for Vietoris solenoids and adic surfaces.

Theorem tags attached to verdicts:

    "8.4"     Vietoris solenoids: homeomorphic iff return equivalent sequences
    "8.6"     adic surfaces over the torus: same criterion
    "8.7(1)"  genus 1 against genus > 1: never homeomorphic
    "8.7(2)"  equal genus > 1: homeomorphic iff the characteristics agree
    "8.8"     return equivalence of adic surfaces ignores the genus
"""

from __future__ import annotations

from .bundles import AdicSurface, euler_characteristic
from .supernatural import (
    BondingSequence,
    characteristic,
    characteristics_equal,
    exponent_witness,
    infinite_witness,
    is_prime,
    sequences_return_equivalent,
)
from .verdict import Outcome, Verdict

__all__ = [
    "Outcome",
    "Verdict",
    "adic_surfaces_return_equivalent",
    "classify_adic_surfaces",
    "classify_vietoris",
    "counterexample_prime",
    "generate_counterexample",
]


def _sequence_verdict(a: BondingSequence, b: BondingSequence, theorem: str) -> Verdict:
    if sequences_return_equivalent(a, b):
        primes = sorted(characteristic(a).infinite_primes)
        return Verdict(
            Outcome.HOMEOMORPHIC,
            theorem=theorem,
            certificate=f"both characteristics are infinite exactly at the primes {primes}",
        )
    p = infinite_witness(a, b)
    ca, cb = characteristic(a), characteristic(b)
    return Verdict(
        Outcome.NOT_HOMEOMORPHIC,
        theorem=theorem,
        certificate=f"C({p}) is {_fmt(ca(p))} for the first sequence and {_fmt(cb(p))} for the second",
        witness_prime=p,
    )


def _fmt(e) -> str:
    return "inf" if e == float("inf") else str(e)


def classify_vietoris(a: BondingSequence, b: BondingSequence) -> Verdict:
    return _sequence_verdict(a, b, "8.4")


def classify_adic_surfaces(A: AdicSurface, B: AdicSurface) -> Verdict:
    g1, g2 = A.genus, B.genus
    if g1 == 1 and g2 == 1:
        return _sequence_verdict(A.seq, B.seq, "8.6")
    if 1 in (g1, g2):
        return Verdict(
            Outcome.NOT_HOMEOMORPHIC,
            theorem="8.7(1)",
            certificate=(
                f"Euler characteristics {euler_characteristic(g1)} and {euler_characteristic(g2)}: "
                "finite covers of the torus have chi = 0, those of a higher-genus surface chi < 0"
            ),
        )
    if g1 == g2:
        if characteristics_equal(A.seq, B.seq):
            return Verdict(
                Outcome.HOMEOMORPHIC,
                theorem="8.7(2)",
                certificate=f"equal characteristics {characteristic(A.seq)} over genus {g1}",
            )
        p = exponent_witness(A.seq, B.seq)
        ca, cb = characteristic(A.seq), characteristic(B.seq)
        return Verdict(
            Outcome.NOT_HOMEOMORPHIC,
            theorem="8.7(2)",
            certificate=f"C({p}) is {_fmt(ca(p))} for the first sequence and {_fmt(cb(p))} for the second",
            witness_prime=p,
        )
    return Verdict(
        Outcome.NOT_COVERED_BY_THEORY,
        certificate=f"genera {g1} and {g2} differ and both exceed 1",
        reason="the classification covers equal genus > 1 only",
    )


def adic_surfaces_return_equivalent(A: AdicSurface, B: AdicSurface) -> bool:
    """Return equivalence of adic surfaces; the genus plays no role."""
    return sequences_return_equivalent(A.seq, B.seq)


def counterexample_prime(m: BondingSequence) -> int:
    """Smallest prime ``p >= 3`` dividing no entry of ``m``."""
    support = characteristic(m).support
    p = 3
    while p in support or not is_prime(p):
        p += 2
    return p


def generate_counterexample(genus: int, m: BondingSequence) -> tuple[AdicSurface, AdicSurface]:
    """Two adic surfaces of the same genus that are return equivalent but not homeomorphic.

    The second sequence is ``m`` with a fresh prime ``p >= 3`` prepended, so
    the characteristics differ at ``p`` (0 against 1) while the infinite
    primes stay the same.
    """
    if genus < 2:
        raise ValueError(f"genus must be >= 2 for a negative Euler characteristic, got {genus}")
    p = counterexample_prime(m)
    return AdicSurface(genus, m), AdicSurface(genus, m.shift(p))
