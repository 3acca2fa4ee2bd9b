import pytest

from sgq import (
    BlockProfile,
    GrassmannianPoint,
    NCoordinates,
    NotInBigCell,
    RankDeficient,
    ShapeMismatch,
    SuperMatrix,
    SuperShape,
    act,
    chart_down,
    chart_up,
    cosets_equal,
    n_member,
    normal_form,
    orbit_map,
    points_equal,
    standard_parabolic_member,
    standard_point,
)
from sgq.sampling import (
    random_big_cell,
    random_big_cell_point,
    random_invertible,
    random_mixed_invertible,
    random_ncoords,
    random_parabolic,
    trial_rng,
)

BP = BlockProfile(2, 2, 1, 1)
BP_SMALL = BlockProfile(1, 1, 1, 0)


def test_standard_point_small(grassmann2):
    span = standard_point(BP_SMALL, grassmann2).span
    assert span[0, 0].is_one() and span[1, 0].is_zero()


def test_standard_point_full(grassmann4):
    span = standard_point(BP, grassmann4).span
    ones = [(i, j) for i in range(4) for j in range(2) if span[i, j].is_one()]
    assert ones == [(0, 0), (3, 1)]  # row block 1 and row block 4


def test_standard_point_self_equal(grassmann4):
    assert points_equal(standard_point(BP, grassmann4), standard_point(BP, grassmann4))


def test_rank_deficient_span_rejected(grassmann2):
    span = SuperMatrix.zeros(grassmann2, SuperShape((1, 1), (1, 0)))
    with pytest.raises(RankDeficient):
        GrassmannianPoint(BP_SMALL, span)


def test_right_gl_action_invisible(grassmann4):
    rng = trial_rng(2, "frame", 0)
    point = random_big_cell_point(grassmann4, BP, rng)
    h = random_invertible(grassmann4, rng, BP.r, BP.s)
    assert points_equal(point, GrassmannianPoint(BP, point.span * h))


def test_points_differ_in_free_block(grassmann2):
    ring = grassmann2
    std = standard_point(BP_SMALL, ring)
    span = SuperMatrix(ring, SuperShape((1, 1), (1, 0)), [[ring.one()], [ring.gen("t1")]])
    assert not points_equal(std, GrassmannianPoint(BP_SMALL, span))


def test_act_identity(grassmann4):
    point = random_big_cell_point(grassmann4, BP, trial_rng(2, "act", 0))
    eye = SuperMatrix.identity(grassmann4, 2, 2)
    assert act(eye, point).span == point.span


def test_act_compatibility_spot(grassmann4):
    rng = trial_rng(2, "compat", 0)
    g1 = random_invertible(grassmann4, rng, 2, 2)
    g2 = random_invertible(grassmann4, rng, 2, 2)
    point = random_big_cell_point(grassmann4, BP, rng)
    assert act(g1 * g2, point).span == act(g1, act(g2, point)).span


def test_act_shape_guard(grassmann4):
    point = standard_point(BP, grassmann4)
    with pytest.raises(ShapeMismatch):
        act(SuperMatrix.identity(grassmann4, 1, 1), point)


def test_parabolic_fixes_standard_point(grassmann4):
    rng = trial_rng(2, "stab", 0)
    std = standard_point(BP, grassmann4)
    p_member = random_parabolic(grassmann4, BP, rng)
    assert points_equal(act(p_member, std), std)


def test_stabilizer_identity_mixed(grassmann4):
    std = standard_point(BP, grassmann4)
    for i in range(12):
        g = random_mixed_invertible(grassmann4, BP, trial_rng(2, "mixed", i), i)
        assert points_equal(act(g, std), std) == standard_parabolic_member(g, BP)


def test_orbit_map_matches_action(grassmann4):
    rng = trial_rng(2, "orbit", 0)
    g = random_invertible(grassmann4, rng, 2, 2)
    assert orbit_map(g, BP).span == act(g, standard_point(BP, grassmann4)).span


def test_orbit_of_identity(grassmann4):
    eye = SuperMatrix.identity(grassmann4, 2, 2)
    assert points_equal(orbit_map(eye, BP), standard_point(BP, grassmann4))


def test_orbit_coset_equivalence_spot(grassmann4):
    for i in range(8):
        rng = trial_rng(2, "orbitcoset", i)
        g1 = random_big_cell(grassmann4, BP, rng)
        if i % 2:
            g2 = g1 * random_parabolic(grassmann4, BP, rng)
        else:
            g2 = random_big_cell(grassmann4, BP, rng)
        assert cosets_equal(g1, g2, BP) == points_equal(orbit_map(g1, BP), orbit_map(g2, BP))


def test_chart_up_zero_is_standard(grassmann4):
    zero = NCoordinates.zero(grassmann4, BP)
    assert points_equal(chart_up(zero), standard_point(BP, grassmann4))
    assert chart_down(standard_point(BP, grassmann4)) == zero


def test_chart_up_spec_case(grassmann2):
    ring = grassmann2
    coords = NCoordinates(
        BP_SMALL,
        SuperMatrix.zeros(ring, SuperShape((0, 0), (1, 0))),
        SuperMatrix.zeros(ring, SuperShape((0, 0), (0, 0))),
        SuperMatrix(ring, SuperShape((0, 1), (1, 0)), [[ring.gen("t2")]]),
        SuperMatrix.zeros(ring, SuperShape((0, 1), (0, 0))),
    )
    span = chart_up(coords).span
    assert span[0, 0].is_one() and span[1, 0] == ring.gen("t2")
    assert chart_down(chart_up(coords)) == coords


def test_chart_roundtrips(grassmann4):
    for i in range(6):
        rng = trial_rng(2, "chart", i)
        coords = random_ncoords(grassmann4, BP, rng)
        assert chart_down(chart_up(coords)) == coords
        point = random_big_cell_point(grassmann4, BP, rng)
        assert points_equal(chart_up(chart_down(point)), point)


def test_soul_column_is_rank_deficient(grassmann2):
    ring = grassmann2
    # the single candidate frame row has zero body, so the span has no frame
    soul_span = SuperMatrix(ring, SuperShape((1, 1), (1, 0)), [[ring.zero()], [ring.gen("t2")]])
    with pytest.raises(RankDeficient):
        GrassmannianPoint(BP_SMALL, soul_span)


def test_chart_down_rejects_off_cell_point(grassmann4):
    ring = grassmann4
    bp = BlockProfile(2, 0, 1, 0)
    # span (e2): full rank on the second even row, not on the first
    span = SuperMatrix(ring, SuperShape((2, 0), (1, 0)), [[ring.zero()], [ring.one()]])
    point = GrassmannianPoint(bp, span)
    with pytest.raises(NotInBigCell):
        chart_down(point)


def test_distinct_coordinates_give_distinct_points(grassmann4):
    c1 = random_ncoords(grassmann4, BP, trial_rng(2, "inj", 0))
    c2 = random_ncoords(grassmann4, BP, trial_rng(2, "inj", 1))
    assert c1 != c2
    assert not points_equal(chart_up(c1), chart_up(c2))
