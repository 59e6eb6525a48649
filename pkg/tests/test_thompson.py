import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import G_STAR, X0, f11_elements, f_elements, seeds
from plgroup import thompson as th
from plgroup.plmap import IDENTITY, Interval, PLError, PLHomeo, compose, conjugate, embed, invert, splice, linear_fragment
from plgroup.randgen import random_F, random_F11

F = th.GroupKind.F()


def test_membership_examples():
    assert th.member(F, X0)
    assert not th.member(F, PLHomeo([(0, 0), (Fr(1, 3), Fr(2, 3)), (1, 1)]))
    assert th.member(th.GroupKind.Pa(2), PLHomeo([(0, 0), (Fr(1, 3), Fr(2, 3)), (1, 1)]))


def test_group_kind_validation():
    with pytest.raises(PLError):
        th.GroupKind("Pa", Fr(1))
    with pytest.raises(PLError):
        th.GroupKind("Q")


def test_dyadic_bridge():
    src, dst = Interval(Fr(1, 8), Fr(1, 4)), Interval(Fr(1, 4), Fr(5, 8))
    frag = th.dyadic_bridge(src, dst)
    assert frag[0] == (src.lo, dst.lo) and frag[-1] == (src.hi, dst.hi)
    full = splice(linear_fragment(Interval(Fr(0), src.lo), Interval(Fr(0), dst.lo)), frag,
                  linear_fragment(Interval(src.hi, Fr(1)), Interval(dst.hi, Fr(1))))
    assert th.member(F, full)
    assert th.dyadic_bridge(src, src) == ((src.lo, src.lo), (src.hi, src.hi))
    with pytest.raises(PLError) as exc:
        th.dyadic_bridge(Interval(Fr(1, 3), Fr(1, 2)), dst)
    assert exc.value.code == "E_DYADIC"


def test_alpha_examples():
    assert th.alpha(X0) == (-1, 1)
    assert th.alpha(IDENTITY) == (0, 0)
    assert th.alpha(G_STAR) == (1, -1)


def test_f11_examples():
    assert th.is_F11(G_STAR)
    assert not th.is_F11(X0)
    assert not th.is_F11(IDENTITY)


def test_beta_examples():
    assert th.beta(G_STAR) == 1
    # slope 2 on [0,1/8], bridges [1/8,1/4] -> [1/4,5/8] -> [5/8,13/16], slope 1/2 on [5/8,1]
    g = splice(
        linear_fragment(Interval(Fr(0), Fr(1, 8)), Interval(Fr(0), Fr(1, 4))),
        th.dyadic_bridge(Interval(Fr(1, 8), Fr(1, 4)), Interval(Fr(1, 4), Fr(5, 8))),
        th.dyadic_bridge(Interval(Fr(1, 4), Fr(5, 8)), Interval(Fr(5, 8), Fr(13, 16))),
        linear_fragment(Interval(Fr(5, 8), Fr(1)), Interval(Fr(13, 16), Fr(1))),
    )
    assert th.beta(g) == 3
    with pytest.raises(PLError) as exc:
        th.beta(X0)
    assert exc.value.code == "E_PRECONDITION"


def test_realize_beta_examples():
    assert th.realize_beta(1) == G_STAR
    assert th.beta(th.realize_beta(99)) == 99
    with pytest.raises(PLError):
        th.realize_beta(4)


def test_gamma_golden():
    data = th.gamma_data(G_STAR)
    assert (data.level, data.exponent, data.value) == (2, 3, IDENTITY)
    with pytest.raises(PLError):
        th.gamma(th.realize_beta(3))


def test_realize_gamma_examples():
    assert th.gamma(th.realize_gamma(IDENTITY)) == IDENTITY
    assert th.gamma(th.realize_gamma(X0)) == X0


def test_word_identity_golden():
    I2 = th.monitor_intervals(2)[0]
    assert th.word_identity_F(IDENTITY, G_STAR).check
    res = th.word_identity_F(embed(X0, I2), G_STAR)
    assert res.check and res.levels


@given(st.integers(0, 99))
def test_beta_surjective(i):
    k = 2 * i + 1
    g = th.realize_beta(k)
    assert th.is_F11(g) and th.beta(g) == k


@given(f11_elements, f_elements)
def test_beta_class_invariant(g, f):
    assert th.beta(conjugate(g, f)) == th.beta(g)
    assert th.beta_conjugation_witness(g, f)


@given(seeds, f_elements)
def test_gamma_class_invariant_and_level_free(s, f):
    g = random_F11(random.Random(s), 1)
    n = th.zone_level(g)
    assert th.gamma(g, n + 1) == th.gamma(g, n) == th.gamma(conjugate(g, f))
    assert th.gamma_conjugation_witness(g, f)


@given(f_elements)
def test_gamma_surjective(t):
    assert th.gamma(th.realize_gamma(t)) == t


@given(f_elements, f_elements)
def test_alpha_homomorphism(f, g):
    a, b = th.alpha(f), th.alpha(g)
    assert th.alpha(compose(f, g)) == (a[0] + b[0], a[1] + b[1])
    assert th.alpha(invert(f)) == (-a[0], -a[1])


def test_witness_detects_reversed_convention():
    rng = random.Random(3)
    rev = lambda h, g: compose(compose(invert(g), h), g)
    misses = sum(not th.beta_conjugation_witness(random_F11(rng), random_F(rng), rev) for _ in range(60))
    assert misses > 0
