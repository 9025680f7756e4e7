from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import pairwise_diameter
from solenoids.odometer import (
    ClopenSet,
    TruncatedTower,
    add,
    add_one,
    canonicalize,
    clopen,
    diameter,
    orbit,
    translate,
)
from solenoids.supernatural import BondingSequence

DYADIC = BondingSequence.periodic(2)
T23 = BondingSequence.periodic(2, 3)


def tower(seq, depth):
    return TruncatedTower(seq, depth)


def test_tower_moduli():
    t = tower(BondingSequence((5,), (2, 3)), 4)
    assert t.moduli == (1, 5, 10, 30, 60)
    assert t.order == 60
    assert all(t.moduli[j] // t.moduli[j - 1] == t.seq.term(j) for j in range(1, 5))


def test_tower_rejects_zero_depth():
    with pytest.raises(ValueError):
        tower(DYADIC, 0)


def test_moduli_are_exact_for_deep_towers():
    t = tower(DYADIC, 200)
    assert t.order == 2**200
    assert add_one(t.point(2**200 - 1)).residue == 0


@pytest.mark.parametrize(
    "seq, depth, residue, expected",
    [(DYADIC, 3, 7, 0), (DYADIC, 3, 3, 4), (T23, 2, 5, 0)],
)
def test_add_one_examples(seq, depth, residue, expected):
    assert add_one(tower(seq, depth).point(residue)).residue == expected


def test_point_range_and_coordinates():
    t = tower(T23, 3)  # moduli 1, 2, 6, 12
    with pytest.raises(ValueError):
        t.point(12)
    p = t.point(11)
    assert p.coordinates == (0, 1, 5, 11)
    assert p.project(2).residue == 5


def test_orbit_examples():
    assert [p.residue for p in orbit(tower(DYADIC, 1).point(0))] == [0, 1]
    o = [p.residue for p in orbit(tower(T23, 2).point(2))]
    assert o == [2, 3, 4, 5, 0, 1]
    assert sorted(o) == list(range(6))


@given(st.lists(st.integers(2, 6), min_size=1, max_size=3), st.integers(1, 5), st.data())
def test_orbit_length_and_projection_equivariance(period, depth, data):
    t = tower(BondingSequence((), tuple(period)), depth)
    r = data.draw(st.integers(0, t.order - 1))
    p = t.point(r)
    assert len(orbit(p)) == t.order
    for j in range(1, depth + 1):
        assert add_one(p).project(j) == add_one(p.project(j))
    xs = p.coordinates
    assert all((xs[j + 1] - xs[j]) % t.modulus(j) == 0 for j in range(depth))


def test_add_negative():
    t = tower(T23, 2)
    assert add(t.point(0), -1).residue == 5
    assert add(t.point(3), 13).residue == 4


def test_clopen_rejects_bad_residues():
    t = tower(T23, 2)
    with pytest.raises(ValueError):
        clopen(t, 2, [])
    with pytest.raises(ValueError):
        clopen(t, 1, [2])


@pytest.mark.parametrize(
    "residues, level, expected_level, expected",
    [
        ({0, 1, 2, 3, 4, 5}, 2, 0, {0}),
        ({0, 2, 4}, 2, 1, {0}),
        ({0, 3}, 2, 2, {0, 3}),
        ({1, 3, 5}, 2, 1, {1}),
    ],
)
def test_canonicalize_examples(residues, level, expected_level, expected):
    c = canonicalize(clopen(tower(T23, 2), level, residues))
    assert (c.level, set(c.residues)) == (expected_level, expected)
    assert canonicalize(c) == c
    assert c.is_canonical


@given(st.sets(st.integers(0, 11), min_size=1), st.integers(-30, 30))
def test_canonicalize_preserves_membership(residues, z):
    w = clopen(tower(T23, 3), 3, residues)
    c = canonicalize(w)
    assert (z in w) == (z in c)
    assert c.same_set(w)
    assert canonicalize(c) == c


def test_translate_examples():
    t = tower(T23, 2)
    assert set(translate(clopen(t, 2, {0, 3}), 1).residues) == {1, 4}
    full = ClopenSet.full(t)
    assert translate(full, 7) == full
    d = tower(DYADIC, 3)
    assert translate(clopen(d, 1, {0}), 2) == clopen(d, 1, {0})


def test_refine_and_project():
    t = tower(T23, 2)
    w = clopen(t, 1, {1})
    assert w.refine(2).residues == frozenset({1, 3, 5})
    assert clopen(t, 2, {1, 3, 5}).residues_at(1) == frozenset({1})
    with pytest.raises(ValueError):
        clopen(t, 2, {1, 3}).residues_at(1)


def test_diameter_examples():
    t = tower(T23, 3)
    assert diameter(ClopenSet.full(t)) == 1
    assert diameter(clopen(t, 3, {7})) == Fraction(1, 8)
    M1 = t.modulus(1)
    assert diameter(clopen(t, 2, {0, M1})) == Fraction(1, 2)


@given(st.sets(st.integers(0, 59), min_size=1))
def test_diameter_matches_pairwise_oracle(residues):
    t = tower(BondingSequence((5,), (2, 3)), 4)
    w = clopen(t, 4, residues)
    num, den = pairwise_diameter(set(residues), list(t.moduli))
    assert diameter(w) == Fraction(num, den)
    assert diameter(canonicalize(w)) == diameter(w)


def test_cylinder_diameters_shrink():
    t = tower(BondingSequence((), (5, 2)), 6)
    p = t.point(17)
    diams = [diameter(ClopenSet.cylinder(p, j)) for j in range(7)]
    assert diams == [Fraction(1, 2**j) for j in range(7)]
    assert all(a > b for a, b in zip(diams, diams[1:]))
