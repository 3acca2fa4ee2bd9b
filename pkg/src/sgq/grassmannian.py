"""Points of the r|s Grassmannian of an m|n space, as framed spans.

A point is an (m|n) x (r|s) span matrix of full rank, considered up to right
multiplication by invertible (r|s) matrices; equality is decided by
normalizing both spans on a shared choice of r even and s odd rows.  The
chart over the big cell identifies span matrices that normalize to identity
blocks on row blocks 1 and 4 with the free blocks u, eta, xi, v of the
unipotent complement.

Convention: the odd columns of the standard point select the last s odd
basis directions, matching the four-block split of the profile.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, Optional, Tuple

from .algebra import SuperRing
from .errors import NotInBigCell, RankDeficient, RingMismatch, ShapeMismatch
from .flag import BlockProfile, NCoordinates, assemble
from .matrix import SuperMatrix, SuperShape, is_invertible, sm_inv


class GrassmannianPoint:
    """A full-rank framed span over a profile."""

    __slots__ = ("profile", "span")

    def __init__(self, profile: BlockProfile, span: SuperMatrix):
        expected = SuperShape((profile.m, profile.n), (profile.r, profile.s))
        if span.shape != expected:
            raise ShapeMismatch(f"span shape {span.shape} does not match profile {profile}")
        if _first_valid_choice(span, profile) is None:
            raise RankDeficient("no choice of r even and s odd rows has invertible body")
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "span", span)

    def __setattr__(self, name, value):
        raise AttributeError("GrassmannianPoint is immutable")

    @property
    def ring(self) -> SuperRing:
        return self.span.ring

    def __repr__(self):
        return f"GrassmannianPoint({self.profile}, {self.span!r})"


def _row_choices(bp: BlockProfile):
    """All (r even rows, s odd rows) choices as global index tuples, in
    lexicographic order over (even subset, odd subset)."""
    for even_rows in combinations(range(bp.m), bp.r):
        for odd_rows in combinations(range(bp.n), bp.s):
            yield even_rows + tuple(bp.m + i for i in odd_rows)


def _choice_valid(span: SuperMatrix, rows: Tuple[int, ...]) -> bool:
    return is_invertible(span.select(list(rows), list(range(span.n_cols))))


def _first_valid_choice(span: SuperMatrix, bp: BlockProfile) -> Optional[Tuple[int, ...]]:
    for rows in _row_choices(bp):
        if _choice_valid(span, rows):
            return rows
    return None


def _normalize_on(span: SuperMatrix, rows: Tuple[int, ...]) -> SuperMatrix:
    sub = span.select(list(rows), list(range(span.n_cols)))
    return span * sm_inv(sub)


def standard_point(bp: BlockProfile, ring: SuperRing) -> GrassmannianPoint:
    """Identity blocks on row blocks 1 and 4, zero elsewhere."""
    zero, one = ring.zero(), ring.one()
    rows: List[List] = [[zero] * (bp.r + bp.s) for _ in range(bp.m + bp.n)]
    for j in range(bp.r):
        rows[j][j] = one
    for j in range(bp.s):
        rows[bp.m + (bp.n - bp.s) + j][bp.r + j] = one
    span = SuperMatrix(ring, SuperShape((bp.m, bp.n), (bp.r, bp.s)), rows)
    return GrassmannianPoint(bp, span)


def points_equal(p1: GrassmannianPoint, p2: GrassmannianPoint) -> bool:
    """Whether the spans differ by a right invertible (r|s) factor."""
    if p1.profile != p2.profile:
        raise ShapeMismatch(f"profiles differ: {p1.profile} vs {p2.profile}")
    if p1.ring != p2.ring:
        raise RingMismatch("points live over different rings")
    rows = _first_valid_choice(p1.span, p1.profile)
    if rows is None:
        raise RankDeficient("no valid row choice for the first span")
    if not _choice_valid(p2.span, rows):
        return False
    return _normalize_on(p1.span, rows) == _normalize_on(p2.span, rows)


def act(g: SuperMatrix, point: GrassmannianPoint) -> GrassmannianPoint:
    """Left action of an invertible (m|n) matrix on a point."""
    bp = point.profile
    if g.shape != bp.square_shape:
        raise ShapeMismatch(f"acting matrix shape {g.shape} does not match profile {bp}")
    return GrassmannianPoint(bp, g * point.span)


def orbit_map(g: SuperMatrix, bp: BlockProfile) -> GrassmannianPoint:
    """The image of the standard point: column blocks 1 and 4 of g."""
    if g.shape != bp.square_shape:
        raise ShapeMismatch(f"matrix shape {g.shape} does not match profile {bp}")
    cols = list(bp.block_range(1)) + list(bp.block_range(4))
    return GrassmannianPoint(bp, g.select(list(range(g.n_rows)), cols))


def chart_up(coords: NCoordinates) -> GrassmannianPoint:
    """The big-cell point with the given unipotent coordinates."""
    return orbit_map(assemble(coords), coords.profile)


def chart_down(point: GrassmannianPoint) -> NCoordinates:
    """Unipotent coordinates of a big-cell point.

    Normalizes the span so row blocks 1 and 4 carry identity blocks, then
    reads u, eta, xi, v off row blocks 2 and 3.
    """
    bp = point.profile
    corner_rows = tuple(bp.block_range(1)) + tuple(bp.block_range(4))
    if not _choice_valid(point.span, corner_rows):
        raise NotInBigCell("the (block 1, block 4) row submatrix has singular body")
    norm = _normalize_on(point.span, corner_rows)
    even_cols = list(range(bp.r))
    odd_cols = list(range(bp.r, bp.r + bp.s))
    block2 = list(bp.block_range(2))
    block3 = list(bp.block_range(3))
    return NCoordinates(
        bp,
        norm.select(block2, even_cols),
        norm.select(block2, odd_cols),
        norm.select(block3, even_cols),
        norm.select(block3, odd_cols),
    )
