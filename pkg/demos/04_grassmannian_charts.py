"""Points of the r|s Grassmannian, the group action, and the big-cell chart.

A point with values in a Grassmann algebra is a full-rank (m|n) x (r|s) span
matrix up to a right invertible frame change.  Invertible (m|n) matrices act
by left multiplication; the stabilizer of the standard point is exactly the
standard parabolic.  Over the big cell, points biject with the unipotent
coordinates (u, eta, xi, v) through chart_up / chart_down.
"""

from sgq import (
    BlockProfile,
    GrassmannianPoint,
    SuperRing,
    act,
    chart_down,
    chart_up,
    cosets_equal,
    orbit_map,
    points_equal,
    standard_parabolic_member,
    standard_point,
)
from sgq.sampling import (
    random_big_cell,
    random_invertible,
    random_ncoords,
    random_parabolic,
    trial_rng,
)

ring = SuperRing([], ["t1", "t2", "t3", "t4"])
bp = BlockProfile(2, 2, 1, 1)
rng = trial_rng(0, "demo.chart", 0)

std = standard_point(bp, ring)
print("standard span:", std.span)

# the same subspace in a different frame is the same point
h = random_invertible(ring, rng, bp.r, bp.s)
reframed = GrassmannianPoint(bp, std.span * h)
print("frame change invisible:", points_equal(std, reframed))

# parabolic members fix the standard point, others move it
p_member = random_parabolic(ring, bp, rng)
g = random_big_cell(ring, bp, rng)
print("parabolic fixes point:", points_equal(act(p_member, std), std))
print("generic g fixes point:", points_equal(act(g, std), std),
      "(parabolic member:", standard_parabolic_member(g, bp), ")")

# the orbit map sends g to column blocks 1 and 4; cosets = points
g2 = g * p_member
print("cosets_equal(g, g*p):  ", cosets_equal(g, g2, bp))
print("orbit points equal:    ", points_equal(orbit_map(g, bp), orbit_map(g2, bp)))

# the chart over the big cell is a bijection with the unipotent coordinates
coords = random_ncoords(ring, bp, rng)
point = chart_up(coords)
print("chart roundtrip:       ", chart_down(point) == coords)
print("point roundtrip:       ", points_equal(chart_up(chart_down(point)), point))
