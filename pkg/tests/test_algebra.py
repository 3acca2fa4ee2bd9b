from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sgq import (
    GaussianRational,
    NotInvertible,
    ParityViolation,
    RingMismatch,
    SuperHom,
    SuperRing,
    UnknownVariable,
)

LAW_RING = SuperRing([], ["a", "b", "c"])
MIXED = SuperRing(["x"], ["th1", "th2"])


# -- products ---------------------------------------------------------------


def test_koszul_sign_on_one_transposition(grassmann2):
    t1, t2 = grassmann2.gen("t1"), grassmann2.gen("t2")
    assert t1 * t2 == -(t2 * t1)
    assert repr(t2 * t1) == "-t1*t2"


def test_top_form_squares_to_zero(grassmann2):
    one = grassmann2.one()
    t1t2 = grassmann2.gen("t1") * grassmann2.gen("t2")
    assert (one + t1t2) * (one - t1t2) == one


def test_odd_cross_terms_cancel(mixed_ring):
    x, th1 = mixed_ring.gen("x"), mixed_ring.gen("th1")
    assert (x + th1) * (x - th1) == x * x


def test_odd_square_is_zero(grassmann2):
    t1 = grassmann2.gen("t1")
    assert (t1 * t1).is_zero()


def test_scalar_and_imaginary_arithmetic(grassmann2):
    i = grassmann2.imaginary_unit()
    assert i * i == grassmann2.scalar(-1)
    half = grassmann2.scalar(Fraction(1, 2))
    assert half + half == grassmann2.one()


def test_ring_mismatch_is_rejected(grassmann2, mixed_ring):
    with pytest.raises(RingMismatch):
        grassmann2.gen("t1") * mixed_ring.gen("x")


# -- body and soul -----------------------------------------------------------


def test_body_drops_odd_terms(mixed_ring):
    x = mixed_ring.gen("x")
    th1, th2 = mixed_ring.gen("th1"), mixed_ring.gen("th2")
    assert (x + th1 * th2).body() == x
    assert th1.body().is_zero()
    assert (mixed_ring.scalar(3) + 2 * th1 + th1 * th2).body() == mixed_ring.scalar(3)


def test_body_plus_soul_reassembles(grassmann2):
    a = grassmann2.scalar(5) + grassmann2.gen("t1") + grassmann2.gen("t1") * grassmann2.gen("t2")
    assert a.body() + a.soul() == a


# -- inversion ----------------------------------------------------------------


def test_inverse_of_scalar(grassmann2):
    assert grassmann2.scalar(2).inv() == grassmann2.scalar(Fraction(1, 2))


def test_neumann_inverse(grassmann2):
    a = grassmann2.one() + grassmann2.gen("t1") * grassmann2.gen("t2")
    expected = grassmann2.one() - grassmann2.gen("t1") * grassmann2.gen("t2")
    assert a.inv() == expected
    assert (a * a.inv()).is_one()


def test_zero_body_not_invertible(grassmann2):
    with pytest.raises(NotInvertible):
        grassmann2.gen("t1").inv()


def test_polynomial_body_not_invertible(mixed_ring):
    # units over Q(i)[x] are nonzero constants only
    with pytest.raises(NotInvertible):
        mixed_ring.gen("x").inv()
    with pytest.raises(NotInvertible):
        (mixed_ring.one() + mixed_ring.gen("x")).inv()


def test_unit_with_polynomial_soul_inverts(mixed_ring):
    x = mixed_ring.gen("x")
    th1, th2 = mixed_ring.gen("th1"), mixed_ring.gen("th2")
    a = mixed_ring.scalar(2) + x * th1 * th2 + th1
    assert (a * a.inv()).is_one()


# -- substitution ---------------------------------------------------------------


def test_substitute_even_image(grassmann2):
    source = SuperRing(["x"], [])
    hom = SuperHom(source, grassmann2, {"x": grassmann2.one() + grassmann2.gen("t1") * grassmann2.gen("t2")})
    result = hom(source.gen("x") + source.one())
    assert result == grassmann2.scalar(2) + grassmann2.gen("t1") * grassmann2.gen("t2")


def test_substitute_kills_repeated_odds(grassmann2):
    source = SuperRing(["x"], ["xi"])
    hom = SuperHom(source, grassmann2, {
        "x": grassmann2.gen("t1") * grassmann2.gen("t2"),
        "xi": grassmann2.gen("t1"),
    })
    assert hom(source.gen("x") * source.gen("xi")).is_zero()


def test_parity_violation_at_construction(grassmann2):
    source = SuperRing(["x"], [])
    with pytest.raises(ParityViolation):
        SuperHom(source, grassmann2, {"x": grassmann2.gen("t1")})
    odd_source = SuperRing([], ["xi"])
    with pytest.raises(ParityViolation):
        SuperHom(odd_source, grassmann2, {"xi": grassmann2.one()})


def test_hom_requires_all_images(grassmann2):
    source = SuperRing(["x", "y"], [])
    with pytest.raises(UnknownVariable):
        SuperHom(source, grassmann2, {"x": grassmann2.one()})


# -- derivatives -------------------------------------------------------------------


def test_left_derivative_leading_factor(grassmann2):
    t1, t2 = grassmann2.gen("t1"), grassmann2.gen("t2")
    assert (t1 * t2).derivative("t1") == t2


def test_left_derivative_picks_up_sign(grassmann2):
    t1, t2 = grassmann2.gen("t1"), grassmann2.gen("t2")
    assert (t1 * t2).derivative("t2") == -t1


def test_even_derivative(mixed_ring):
    x, th1 = mixed_ring.gen("x"), mixed_ring.gen("th1")
    assert (x**2 + x * th1).derivative("x") == 2 * x + th1


def test_derivative_unknown_variable(grassmann2):
    with pytest.raises(UnknownVariable):
        grassmann2.one().derivative("zz")


# -- algebraic laws (hypothesis) ------------------------------------------------------


def small_coeffs():
    fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.builds(GaussianRational, fractions, fractions)


@st.composite
def homogeneous_elements(draw, ring=LAW_RING, parity=None):
    if parity is None:
        parity = draw(st.integers(0, 1))
    q = ring.n_odd
    subsets = [
        tuple(sorted(s))
        for size in range(parity, q + 1, 2)
        for s in _subsets_of_size(range(q), size)
    ]
    n_terms = draw(st.integers(0, 3))
    terms = {}
    for _ in range(n_terms):
        exp = tuple(draw(st.integers(0, 2)) for _ in ring.even_vars)
        odd = draw(st.sampled_from(subsets))
        terms[(exp, odd)] = draw(small_coeffs())
    return parity, ring.element(terms)


def _subsets_of_size(items, size):
    from itertools import combinations

    return combinations(items, size)


@given(homogeneous_elements(), homogeneous_elements())
def test_supercommutativity(ha, hb):
    pa, a = ha
    pb, b = hb
    signed = b * a if pa * pb == 0 else -(b * a)
    assert a * b == signed


@given(homogeneous_elements(parity=1), homogeneous_elements(parity=1))
def test_soul_nilpotency(ha, hb):
    _, a = ha
    _, b = hb
    soul = (a + b * b).soul() + a  # body-free by construction
    assert soul.body().is_zero()
    assert (soul ** (LAW_RING.n_odd + 1)).is_zero()


@given(homogeneous_elements(), homogeneous_elements())
def test_body_is_multiplicative(ha, hb):
    _, a = ha
    _, b = hb
    assert (a * b).body() == a.body() * b.body()


@given(homogeneous_elements(ring=MIXED), homogeneous_elements(ring=MIXED))
def test_substitution_preserves_products(ha, hb):
    _, a = ha
    _, b = hb
    target = LAW_RING
    hom = SuperHom(MIXED, target, {
        "x": target.gen("a") * target.gen("b"),
        "th1": target.gen("c"),
        "th2": target.gen("a"),
    })
    assert hom(a * b) == hom(a) * hom(b)
    assert hom(a + b) == hom(a) + hom(b)
    assert hom(MIXED.one()).is_one()


@given(homogeneous_elements(ring=MIXED), homogeneous_elements(ring=MIXED),
       st.sampled_from(["x", "th1", "th2"]))
def test_graded_leibniz(ha, hb, var):
    pa, a = ha
    _, b = hb
    var_parity = MIXED.parity_of_var(var)
    lhs = (a * b).derivative(var)
    second = a * b.derivative(var)
    if var_parity and pa:
        second = -second
    assert lhs == a.derivative(var) * b + second


@given(homogeneous_elements(ring=MIXED))
def test_odd_second_derivative_vanishes(ha):
    _, a = ha
    assert a.derivative("th1").derivative("th1").is_zero()


@given(homogeneous_elements(parity=0))
def test_units_invert_exactly(ha):
    _, soul_part = ha
    unit = LAW_RING.scalar(GaussianRational(3, 1)) + soul_part.soul()
    assert (unit * unit.inv()).is_one()
    assert (unit.inv() * unit).is_one()
