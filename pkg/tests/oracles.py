"""Brute-force oracles. Nothing here imports the code under test."""

from __future__ import annotations

from itertools import combinations


def naive_is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, n))


def naive_factor(n: int) -> dict[int, int]:
    """Divide out every d = 2, 3, 4, ... in turn; composites never divide what is left."""
    out = {}
    d = 2
    while n > 1:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    return out


def translates_partition_fiber(residues: set[int], M: int) -> bool:
    """Enumerate all M translates and test that the distinct ones partition Z/M."""
    translates = {frozenset((r + t) % M for r in residues) for t in range(M)}
    for s, u in combinations(translates, 2):
        if s & u:
            return False
    return set().union(*translates) == set(range(M))


def pairwise_diameter(residues_at_depth: set[int], moduli: list[int]) -> tuple[int, int]:
    """(1, 2**J) where J is the min over pairs of the largest agreement level; singletons give depth."""
    k = len(moduli) - 1
    if len(residues_at_depth) == 1:
        return 1, 2**k
    worst = k
    for x, y in combinations(residues_at_depth, 2):
        j = max(i for i in range(k + 1) if (x - y) % moduli[i] == 0)
        worst = min(worst, j)
    return 1, 2**worst


def quotient_group_invariants_2x2(a: list[list[int]]) -> tuple[int, ...]:
    """Invariant factors (> 1) of Z^2 / A Z^2 by coset enumeration.

    Membership in A Z^2 is tested with the adjugate: v is in the lattice iff
    adj(A) v = 0 mod det(A). Representatives in [0, |det|)^2 cover every class.
    """
    (p, q), (r, s) = a
    det = p * s - q * r
    assert det != 0
    D = abs(det)

    def in_lattice(v):
        x, y = v
        return (s * x - q * y) % D == 0 and (-r * x + p * y) % D == 0

    reps: list[tuple[int, int]] = []
    for x in range(D):
        for y in range(D):
            if not any(in_lattice((x - u, y - w)) for u, w in reps):
                reps.append((x, y))
    assert len(reps) == D
    orders = []
    for x, y in reps:
        k = 1
        while not in_lattice((k * x, k * y)):
            k += 1
        orders.append(k)
    exponent = max(orders)
    # a quotient of Z^2 has at most two cyclic factors: Z/(N/e) + Z/e
    return tuple(f for f in (D // exponent, exponent) if f > 1)


def subgroup_cosets(M: int) -> set[frozenset[int]]:
    """All cosets of all subgroups of Z/M."""
    out = set()
    for d in range(1, M + 1):
        if M % d == 0:
            for t in range(d):
                out.add(frozenset(range(t, M, d)))
    return out
