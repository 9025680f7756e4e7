import pytest
from hypothesis import given
from hypothesis import strategies as st

from solenoids.bundles import (
    AdicSurface,
    Letter,
    SurfaceGroupWord,
    commutator,
    cover_of,
    euler_characteristic,
    generator,
    h0,
    holonomy,
    relator,
    suspension_orbit,
)
from solenoids.odometer import TruncatedTower, add_one
from solenoids.supernatural import BondingSequence

DYADIC = BondingSequence.periodic(2)


@st.composite
def words(draw, genus):
    letters = draw(
        st.lists(
            st.builds(
                Letter,
                st.sampled_from("ab"),
                st.integers(1, genus),
                st.integers(-4, 4).filter(bool),
            ),
            max_size=12,
        )
    )
    return SurfaceGroupWord(genus, tuple(letters))


def test_parse_and_validate():
    w = SurfaceGroupWord.parse(2, "a1^3 b2 a1^-1")
    assert [str(x) for x in w.letters] == ["a1^3", "b2", "a1^-1"]
    with pytest.raises(ValueError):
        SurfaceGroupWord.parse(1, "a2")
    with pytest.raises(ValueError):
        SurfaceGroupWord.parse(2, "c1")
    with pytest.raises(ValueError):
        Letter("a", 1, 0)


@pytest.mark.parametrize(
    "genus, text, expected",
    [(2, "a1^3 b2 a1^-1", 2), (2, "", 0), (3, "a2^5 b1 a3", 0), (1, "a1 b1 a1", 2)],
)
def test_h0_examples(genus, text, expected):
    assert h0(SurfaceGroupWord.parse(genus, text)) == expected


def test_relator_genus_2():
    r = relator(2)
    assert str(r) == "a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1"
    assert h0(r) == 0


@pytest.mark.parametrize("genus", range(1, 6))
def test_h0_kills_relator(genus):
    assert h0(relator(genus)) == 0


@given(st.integers(1, 5).flatmap(lambda g: st.tuples(words(g), words(g))))
def test_h0_is_additive(pair):
    u, v = pair
    assert h0(u + v) == h0(u) + h0(v)
    assert h0(u.inverse()) == -h0(u)
    assert h0(commutator(u, v)) == 0


def test_holonomy_examples():
    t = TruncatedTower(DYADIC, 2)
    assert holonomy(generator(1, "a", 1), t.point(3)).residue == 0
    p = TruncatedTower(BondingSequence.periodic(2, 3), 2).point(4)
    assert holonomy(generator(3, "b", 1, 5), p) == p
    t6 = TruncatedTower(BondingSequence.periodic(2, 3), 2)
    assert holonomy(generator(2, "a", 1, -1), t6.point(0)).residue == 5


@given(st.integers(1, 4).flatmap(lambda g: st.tuples(words(g), words(g))), st.integers(0, 11))
def test_holonomy_factors_through_h0(pair, r):
    u, v = pair
    t = TruncatedTower(BondingSequence.periodic(2, 3, 2), 3)
    p = t.point(r)
    assert holonomy(u, holonomy(v, p)) == holonomy(v + u, p)
    q = p
    for _ in range(h0(u) % t.order):
        q = add_one(q)
    assert holonomy(u, p) == q


@pytest.mark.parametrize("genus, chi", [(1, 0), (2, -2), (5, -8)])
def test_euler_characteristic(genus, chi):
    assert euler_characteristic(genus) == chi


def test_euler_characteristic_rejects_genus_zero():
    with pytest.raises(ValueError):
        euler_characteristic(0)


def test_cover_of_examples():
    c = cover_of(2, 2)
    assert (c.cover_genus, c.euler_cover, c.euler_base) == (3, -4, -2)
    assert cover_of(2, 3).cover_genus == 4
    assert all(cover_of(1, d).cover_genus == 1 and cover_of(1, d).euler_cover == 0 for d in range(1, 20))


@given(st.integers(1, 8), st.integers(1, 9), st.integers(1, 9))
def test_euler_multiplicativity_composes(g, d1, d2):
    first = cover_of(g, d1)
    second = cover_of(first.cover_genus, d2)
    assert second.euler_cover == d1 * d2 * (2 - 2 * g)
    assert euler_characteristic(second.cover_genus) == second.euler_cover


def test_suspension_orbit_examples():
    s = AdicSurface(1, DYADIC)
    t = TruncatedTower(DYADIC, 2)
    a1 = generator(1, "a", 1)
    assert [p.residue for p in suspension_orbit(s, [a1, a1], t.point(0))] == [1, 2]

    s2 = AdicSurface(2, DYADIC)
    p = t.point(3)
    assert suspension_orbit(s2, [generator(2, "b", 1), generator(2, "b", 2)], p) == [p, p]
    back = suspension_orbit(s2, [generator(2, "a", 1, -1), generator(2, "a", 1)], p)
    assert [q.residue for q in back] == [2, 3]


def test_suspension_orbit_checks_genus():
    t = TruncatedTower(DYADIC, 2)
    with pytest.raises(ValueError):
        suspension_orbit(AdicSurface(1, DYADIC), [generator(2, "a", 1)], t.point(0))
