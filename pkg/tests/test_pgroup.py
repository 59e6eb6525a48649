import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given

from conftest import G_STAR, X0, p11_elements, raw_p_elements, seeds
from plgroup import pgroup as pg
from plgroup.plmap import IDENTITY, Interval, PLError, compose, embed, end_zones, invert
from plgroup.randgen import random_P, random_P11


def test_is_p11_examples():
    assert pg.is_P11(G_STAR)
    assert not pg.is_P11(X0)
    assert not pg.is_P11(IDENTITY)


def test_monitored_info_golden():
    d = pg.monitored_info(G_STAR, Fr(1, 16))
    assert d.info == IDENTITY and d.pair.N == 3
    assert d.pair.I == Interval(Fr(1, 16), Fr(1, 8)) and d.pair.J == Interval(Fr(1, 2), Fr(3, 4))
    with pytest.raises(PLError):
        pg.monitored_info(G_STAR, Fr(1, 4))


def test_realize_info_examples():
    g, a = pg.realize_info(IDENTITY)
    assert pg.monitored_info(g, a).info == IDENTITY
    g, a = pg.realize_info(X0)
    assert pg.is_P11(g) and pg.monitored_info(g, a).info == X0


def test_realize_end_slopes_examples():
    assert pg.realize_end_slopes(1, 1) == IDENTITY
    h = pg.realize_end_slopes(2, Fr(1, 2))
    assert h.points == [(0, 0), (Fr(1, 8), Fr(1, 4)), (Fr(7, 8), Fr(15, 16)), (1, 1)]
    z = pg.realize_end_slopes(Fr(5, 3), Fr(7, 4))
    assert (end_zones(z).slope0, end_zones(z).slope1) == (Fr(5, 3), Fr(7, 4))


def test_info_conjugation_trivial():
    assert pg.info_conjugation_invariance(G_STAR, IDENTITY, Fr(1, 16))


def test_word_identity_p_golden():
    I0 = Interval(Fr(1, 16), Fr(1, 8))
    assert pg.word_identity_P(IDENTITY, G_STAR, Fr(1, 16)).check
    res = pg.word_identity_P(embed(X0, I0), G_STAR, Fr(1, 16), mode="PQ")
    assert res.check and all(res.edges.values()) and res.letters_in_PQ


def test_member_pq():
    assert pg.member_PQ(X0) and pg.member_PQ(G_STAR)


@given(p11_elements)
def test_monitor_shape_law(g):
    d = pg.monitored_info(g, end_zones(g).left.hi / 2)
    assert 1 - d.pair.J.lo == 2 * (1 - d.pair.J.hi)


@given(raw_p_elements())
def test_realize_info_roundtrip(f):
    g, a = pg.realize_info(f)
    assert pg.monitored_info(g, a).info == f


@given(seeds)
def test_info_conjugation_invariance(s):
    rng = random.Random(s)
    g, g1 = random_P11(rng), random_P(rng)
    assert pg.info_conjugation_check(g, g1, end_zones(g).left.hi / 4).holds


@given(p11_elements, seeds)
def test_shift_keeps_info(g, s):
    d = pg.monitored_info(g, end_zones(g).left.hi / 2)
    assert pg.shift_pair(g, d, random.Random(s).randint(1, 3)).info == d.info


def test_reversed_convention_is_caught():
    rng = random.Random(5)
    rev = lambda h, g: compose(compose(invert(g), h), g)
    misses = 0
    for _ in range(40):
        g, g1 = random_P11(rng), random_P(rng)
        misses += not pg.info_conjugation_check(g, g1, end_zones(g).left.hi / 4, rev).holds
    assert misses > 0


def test_transitivity_point():
    h1 = pg.realize_end_slopes(Fr(3, 4), 1)
    assert pg.transitivity_point(G_STAR, h1, 2, 5) == Fr(3, 4) / 4
