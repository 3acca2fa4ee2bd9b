from fractions import Fraction

import pytest

from sgq import (
    GaussianRational,
    NotAPoint,
    ParityViolation,
    Presentation,
    RationalPoint,
    SuperRing,
    UnassignedVariable,
    general_linear_presentation,
    is_etale_at,
    is_smooth_at,
    jacobian,
    rank_at_point,
)

EMPTY = SuperRing()


def circle_like():
    ring = SuperRing(["x"], ["xi1", "xi2"])
    f = ring.gen("x") ** 2 - ring.one() + ring.gen("xi1") * ring.gen("xi2")
    return Presentation(EMPTY, ["x"], ["xi1", "xi2"], [f], [])


def test_jacobian_of_empty_presentation():
    pres = Presentation(EMPTY, ["x", "y"], ["s"], [], [])
    assert jacobian(pres) == []
    assert rank_at_point(pres, RationalPoint({"x": 0, "y": 0})) == (0, 0)


def test_jacobian_single_even_relation():
    ring = SuperRing(["x"], [])
    pres = Presentation(EMPTY, ["x"], [], [ring.gen("x") ** 2 - ring.one()], [])
    assert jacobian(pres) == [[2 * ring.gen("x")]]


def test_jacobian_left_derivatives():
    pres = circle_like()
    ring = pres.total_ring
    row = jacobian(pres)[0]
    assert row[0] == 2 * ring.gen("x")
    assert row[1] == ring.gen("xi2")
    assert row[2] == -ring.gen("xi1")


def test_rank_at_regular_point():
    ring = SuperRing(["x"], [])
    pres = Presentation(EMPTY, ["x"], [], [ring.gen("x") ** 2 - ring.one()], [])
    assert rank_at_point(pres, RationalPoint({"x": 1})) == (1, 0)


def test_rank_at_critical_point():
    ring = SuperRing(["x"], [])
    pres = Presentation(EMPTY, ["x"], [], [ring.gen("x") ** 2], [])
    assert rank_at_point(pres, RationalPoint({"x": 0})) == (0, 0)


def test_not_a_point():
    ring = SuperRing(["x"], [])
    pres = Presentation(EMPTY, ["x"], [], [ring.gen("x") ** 2 - ring.one()], [])
    with pytest.raises(NotAPoint):
        rank_at_point(pres, RationalPoint({"x": 2}))


def test_free_presentation_smooth_everywhere():
    pres = Presentation(EMPTY, ["x", "y"], ["s1", "s2", "s3"], [], [])
    verdict = is_smooth_at(pres, RationalPoint({"x": 7, "y": Fraction(-1, 3)}))
    assert verdict.smooth and verdict.relative_dimension == (2, 3)


def test_nilpotent_correction_does_not_change_verdict():
    verdict = is_smooth_at(circle_like(), RationalPoint({"x": 1}))
    assert verdict.smooth
    assert verdict.relative_dimension == (0, 2)


def test_cusp_not_smooth():
    ring = SuperRing(["x"], [])
    pres = Presentation(EMPTY, ["x"], [], [ring.gen("x") ** 2], [])
    verdict = is_smooth_at(pres, RationalPoint({"x": 0}))
    assert not verdict.smooth and verdict.relative_dimension is None


def test_etale_detection():
    ring = SuperRing(["x"], [])
    pres = Presentation(EMPTY, ["x"], [], [ring.gen("x") ** 2 - ring.one()], [])
    assert is_etale_at(pres, RationalPoint({"x": 1}))
    assert is_etale_at(pres, RationalPoint({"x": -1}))


def test_extra_odd_variable_blocks_etale():
    ring = SuperRing(["x"], ["s"])
    pres = Presentation(EMPTY, ["x"], ["s"], [ring.gen("x") ** 2 - ring.one()], [])
    verdict = is_smooth_at(pres, RationalPoint({"x": 1}))
    assert verdict.smooth and verdict.relative_dimension == (0, 1)
    assert not is_etale_at(pres, RationalPoint({"x": 1}))


def test_free_presentation_with_generators_not_etale():
    pres = Presentation(EMPTY, ["x"], [], [], [])
    assert not is_etale_at(pres, RationalPoint({"x": 0}))


def test_relation_parity_checked():
    ring = SuperRing(["x"], ["s"])
    with pytest.raises(ParityViolation):
        Presentation(EMPTY, ["x"], ["s"], [ring.gen("s")], [])


def test_relation_count_bound():
    ring = SuperRing(["x"], [])
    with pytest.raises(ValueError):
        Presentation(EMPTY, ["x"], [], [ring.gen("x"), ring.gen("x") ** 2], [])


def test_base_variables_as_constants():
    base = SuperRing(["t"], [])
    total = SuperRing(["t", "x"], [])
    relation = total.gen("t") * (total.gen("x") - total.one())
    pres = Presentation(base, ["x"], [], [relation], [])
    # with t assigned the Jacobian entry t is a number
    assert rank_at_point(pres, RationalPoint({"x": 1, "t": 2})) == (1, 0)
    # the relation vanishes at x = 1 for formal t, but the rank needs a value
    with pytest.raises(UnassignedVariable):
        rank_at_point(pres, RationalPoint({"x": 1}))
    # an unassigned base variable surviving in a relation is not a point
    pres2 = Presentation(base, ["x"], [], [total.gen("t") - total.gen("x")], [])
    with pytest.raises(NotAPoint):
        rank_at_point(pres2, RationalPoint({"x": 1}))


def test_odd_relations_contribute_odd_rank():
    ring = SuperRing(["x"], ["s1", "s2"])
    phi = ring.gen("s1") + ring.gen("x") * ring.gen("s2")
    pres = Presentation(EMPTY, ["x"], ["s1", "s2"], [], [phi])
    verdict = is_smooth_at(pres, RationalPoint({"x": 5}))
    assert verdict.smooth and verdict.relative_dimension == (1, 1)


def test_gaussian_rational_point():
    ring = SuperRing(["x"], [])
    pres = Presentation(EMPTY, ["x"], [], [ring.gen("x") ** 2 + ring.one()], [])
    point = RationalPoint({"x": GaussianRational(0, 1)})
    assert is_etale_at(pres, point)


def test_general_linear_presentations():
    for m, n in ((1, 1), (2, 1), (2, 2)):
        pres, identity = general_linear_presentation(m, n)
        verdict = is_smooth_at(pres, identity)
        assert verdict.smooth
        assert verdict.relative_dimension == (m * m + n * n, 2 * m * n)
