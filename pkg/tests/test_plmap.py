import json
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import G_STAR, X0, f_elements, p_elements, raw_p_elements, unit_rationals
from plgroup.plmap import (
    IDENTITY,
    AffineMap,
    Interval,
    PLError,
    PLHomeo,
    affine,
    commutator,
    compose,
    conjugate,
    embed,
    end_zones,
    evaluate,
    evaluate_inverse,
    extract,
    invert,
    orbit_transport,
    power,
    s_left,
    s_right,
    support_within,
    transport,
)

I = Interval


def test_evaluate_examples():
    assert evaluate(X0, Fr(1, 2)) == Fr(1, 4)
    assert evaluate(IDENTITY, Fr(17, 31)) == Fr(17, 31)
    assert evaluate(X0, Fr(7, 8)) == Fr(3, 4)
    with pytest.raises(PLError):
        evaluate(X0, Fr(3, 2))


def test_invert_and_compose_examples():
    assert invert(X0) == G_STAR
    assert compose(X0, invert(X0)) == IDENTITY
    assert compose(IDENTITY, G_STAR) == G_STAR
    assert invert(IDENTITY) == IDENTITY


def test_conjugate_convention():
    # h^g = g h g^-1 acts as g o h o g^-1
    assert conjugate(X0, IDENTITY) == X0
    assert conjugate(IDENTITY, G_STAR) == IDENTITY
    x = Fr(5, 16)
    assert evaluate(conjugate(X0, G_STAR), x) == evaluate(G_STAR, evaluate(X0, evaluate_inverse(G_STAR, x)))


def test_canonical_form_drops_collinear_points():
    f = PLHomeo([(0, 0), (Fr(1, 4), Fr(1, 4)), (1, 1)])
    assert f == IDENTITY and f.n_breaks == 0
    with pytest.raises(PLError) as exc:
        PLHomeo([(0, 0), (Fr(1, 4), Fr(1, 4)), (1, 1)], strict=True)
    assert exc.value.code == "E_CANONICAL"


@pytest.mark.parametrize(
    "points, code",
    [
        ([(0, 0), (Fr(1, 2), Fr(1, 2))], "E_ENDPOINT"),
        ([(0, 0), (Fr(1, 2), Fr(1, 4)), (Fr(1, 4), Fr(1, 2)), (1, 1)], "E_MONOTONE"),
        ([(0, 0), (Fr(1, 2), Fr(1, 2)), (Fr(3, 4), Fr(1, 2)), (1, 1)], "E_MONOTONE"),
    ],
)
def test_invalid_elements(points, code):
    with pytest.raises(PLError) as exc:
        PLHomeo(points)
    assert exc.value.code == code


def test_json_errors_name_the_problem():
    with pytest.raises(PLError) as exc:
        PLHomeo.from_json("{not json")
    assert exc.value.code == "E_JSON"
    with pytest.raises(PLError) as exc:
        PLHomeo.from_json(json.dumps({"points": []}))
    assert exc.value.code == "E_FORMAT"
    with pytest.raises(PLError) as exc:
        PLHomeo.from_json(json.dumps({"breakpoints": [["0", "0"], ["1/2", "1/2"], ["1", "1"]]}))
    assert exc.value.code == "E_CANONICAL" and "1" in str(exc.value)


def test_support_and_zones_examples():
    assert s_left(PLHomeo([(0, 0), (Fr(1, 2), Fr(1, 2)), (Fr(5, 8), Fr(11, 16)), (1, 1)])) == Fr(1, 2)
    assert s_left(IDENTITY) == 1 and s_left(X0) == 0
    assert s_right(X0) == 1
    assert support_within(IDENTITY, I(Fr(1, 4), Fr(1, 2)))
    assert not support_within(X0, I(Fr(0), Fr(3, 4)))
    bump = embed(X0, I(Fr(1, 4), Fr(1, 2)))
    assert support_within(bump, I(Fr(1, 8), Fr(1, 2)))
    z = end_zones(X0)
    assert (z.left, z.right, z.slope0, z.slope1) == (I(Fr(0), Fr(1, 2)), I(Fr(3, 4), Fr(1)), Fr(1, 2), Fr(2))
    z = end_zones(G_STAR)
    assert (z.left, z.right, z.slope0, z.slope1) == (I(Fr(0), Fr(1, 4)), I(Fr(1, 2), Fr(1)), Fr(2), Fr(1, 2))
    z = end_zones(IDENTITY)
    assert z.left == z.right == I(Fr(0), Fr(1)) and z.slope0 == z.slope1 == 1


def test_affine_embed_extract_transport():
    phi = affine(I(Fr(1, 16), Fr(1, 8)))
    assert (phi.slope, phi.offset) == (Fr(1, 16), Fr(1, 16))
    unit = affine(I(Fr(0), Fr(1)))
    assert (unit.slope, unit.offset) == (1, 0)
    assert embed(IDENTITY, I(Fr(1, 4), Fr(1, 2))) == IDENTITY
    assert extract(embed(X0, I(Fr(1, 4), Fr(1, 2))), I(Fr(1, 4), Fr(1, 2))) == X0
    assert embed(X0, I(Fr(0), Fr(1))) == X0
    assert transport(G_STAR, I(Fr(0), Fr(1, 8)), I(Fr(0), Fr(1, 4))) == IDENTITY
    assert transport(power(G_STAR, 3), I(Fr(1, 16), Fr(1, 8)), I(Fr(1, 2), Fr(3, 4))) == IDENTITY
    with pytest.raises(PLError) as exc:
        transport(G_STAR, I(Fr(0), Fr(1, 8)), I(Fr(0), Fr(1, 8)))
    assert exc.value.code == "E_TRANSPORT"


def test_orbit_transport_matches_power():
    src = I(Fr(1, 16), Fr(1, 8))
    m, reached = orbit_transport(G_STAR, src, 3)
    assert reached == I(Fr(1, 2), Fr(3, 4)) and m == transport(power(G_STAR, 3), src, reached)


def test_commutator_examples():
    assert commutator(G_STAR, G_STAR) == IDENTITY
    assert commutator(IDENTITY, X0) == IDENTITY
    z = end_zones(commutator(X0, compose(X0, X0)))
    assert (z.slope0, z.slope1) == (1, 1)


@given(f_elements, f_elements, f_elements)
def test_group_axioms_F(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(f, invert(f)) == IDENTITY
    assert invert(invert(g)) == g


@given(raw_p_elements(), raw_p_elements(), unit_rationals)
def test_compose_pointwise(f, g, x):
    assert evaluate(compose(f, g), x) == evaluate(f, evaluate(g, x))
    assert evaluate_inverse(f, evaluate(f, x)) == x


@given(raw_p_elements(), raw_p_elements())
def test_compose_output_is_canonical(f, g):
    h = compose(f, g)
    assert PLHomeo(h.points, strict=True) == h


@given(p_elements, raw_p_elements())
def test_commutator_end_slopes(g, f):
    z = end_zones(commutator(g, f))
    assert z.slope0 == 1 and z.slope1 == 1


@given(p_elements)
def test_json_roundtrip(f):
    assert PLHomeo.from_json(f.to_json()) == f
    assert PLHomeo.from_dict(json.loads(f.to_json())).points == f.points


@given(p_elements, p_elements)
def test_conjugate_is_g_h_ginv(h, g):
    assert conjugate(h, g) == compose(compose(g, h), invert(g))


@given(raw_p_elements(), st.integers(-6, 6))
def test_power_additive(f, n):
    assert compose(power(f, n), power(f, -n)) == IDENTITY
    assert power(f, n + 1) == compose(f, power(f, n))


def test_affine_map_inverse():
    A = AffineMap(I(Fr(1, 4), Fr(1, 2)), I(Fr(0), Fr(1)))
    assert A.inverse()(A(Fr(3, 8))) == Fr(3, 8)
