"""Jacobian-rank smoothness verdicts for presented affine superschemes.

A presentation adjoins even and odd fiber variables to a base ring and
imposes homogeneous relations.  At a rational point the Jacobian splits into
an even and an odd block; the presentation is smooth there when both blocks
have full row rank, with relative dimension (even vars - even relations |
odd vars - odd relations), and etale when that is 0|0.
"""

from sgq import (
    Presentation,
    RationalPoint,
    SuperRing,
    general_linear_presentation,
    is_etale_at,
    is_smooth_at,
    jacobian,
)

empty = SuperRing()

# a deformed conic: x^2 - 1 + s1*s2 = 0
ring = SuperRing(["x"], ["s1", "s2"])
relation = ring.gen("x") ** 2 - ring.one() + ring.gen("s1") * ring.gen("s2")
pres = Presentation(empty, ["x"], ["s1", "s2"], [relation], [])
print("relation:", relation)
print("jacobian row:", jacobian(pres)[0])
verdict = is_smooth_at(pres, RationalPoint({"x": 1}))
print("at x=1:", verdict)

# the cusp x^2 = 0 fails at the origin
plain = SuperRing(["x"], [])
cusp = Presentation(empty, ["x"], [], [plain.gen("x") ** 2], [])
print("x^2 at 0:", is_smooth_at(cusp, RationalPoint({"x": 0})))

# rank 1 out of 1 relation with no leftover variables: etale
two_sheets = Presentation(empty, ["x"], [], [plain.gen("x") ** 2 - plain.one()], [])
print("x^2-1 etale at 1:", is_etale_at(two_sheets, RationalPoint({"x": 1})))
print("x^2-1 etale at -1:", is_etale_at(two_sheets, RationalPoint({"x": -1})))

# the invertible (m|n) matrices are smooth at the identity with the
# expected relative dimension (m^2+n^2 | 2mn)
for m, n in ((1, 1), (2, 1), (2, 2)):
    pres, identity = general_linear_presentation(m, n)
    verdict = is_smooth_at(pres, identity)
    print(f"GL({m}|{n}) at identity:", verdict)
