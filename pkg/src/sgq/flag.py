"""Block parabolic, unipotent complement, big cell, and coset normal form.

A profile (m, n | r, s) splits the rows and columns of a square (m|n) matrix
into four blocks of sizes (r, m-r, n-s, s), numbered 1..4 in that order.  The
standard subspace is spanned by the first r even and the last s odd basis
directions; its stabilizer P consists of the invertible matrices whose
(2,1), (3,1), (2,4) and (3,4) blocks vanish.  The complement N carries
identity diagonal blocks and free blocks u, eta, xi, v at those four
positions.  On the big cell (corner blocks with invertible body) every g
factors uniquely as g = assemble(coords) * p with p in P; the factorization
is solved block by block from the defining system, not taken from any quoted
closed form, and the solved values are the reference the closed forms are
checked against (see closed_form).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .algebra import SuperRing
from .errors import NotInBigCell, NotInvertible, ShapeMismatch
from .matrix import SuperMatrix, SuperShape, block_matrix, det_even, inv_even, is_invertible


@dataclass(frozen=True)
class BlockProfile:
    """Total dimension m|n and subspace dimension r|s."""

    m: int
    n: int
    r: int
    s: int

    def __post_init__(self):
        if not (0 <= self.r <= self.m and 0 <= self.s <= self.n):
            raise ValueError(f"need 0 <= r <= m and 0 <= s <= n, got {self}")

    @property
    def sizes(self) -> Tuple[int, int, int, int]:
        return (self.r, self.m - self.r, self.n - self.s, self.s)

    def block_range(self, k: int) -> range:
        """Global row/column indices of block k (1-based, in split order)."""
        starts = [0, self.r, self.m, self.m + self.n - self.s]
        sizes = self.sizes
        return range(starts[k - 1], starts[k - 1] + sizes[k - 1])

    def block_parity(self, k: int) -> int:
        return 0 if k <= 2 else 1

    @property
    def square_shape(self) -> SuperShape:
        return SuperShape((self.m, self.n), (self.m, self.n))


def _check_square(g: SuperMatrix, bp: BlockProfile) -> None:
    if g.shape != bp.square_shape:
        raise ShapeMismatch(f"matrix shape {g.shape} does not match profile {bp}")


def split_blocks(g: SuperMatrix, bp: BlockProfile) -> Dict[Tuple[int, int], SuperMatrix]:
    """The sixteen blocks of g under the profile's four-way split."""
    _check_square(g, bp)
    return {
        (i, j): g.select(list(bp.block_range(i)), list(bp.block_range(j)))
        for i in range(1, 5)
        for j in range(1, 5)
    }


class NCoordinates:
    """The free blocks u, eta, xi, v of a unipotent-complement element."""

    __slots__ = ("profile", "u", "eta", "xi", "v")

    def __init__(self, profile: BlockProfile, u: SuperMatrix, eta: SuperMatrix, xi: SuperMatrix, v: SuperMatrix):
        r, m_r, n_s, s = profile.sizes
        expected = {
            "u": SuperShape((m_r, 0), (r, 0)),
            "eta": SuperShape((m_r, 0), (0, s)),
            "xi": SuperShape((0, n_s), (r, 0)),
            "v": SuperShape((0, n_s), (0, s)),
        }
        blocks = {"u": u, "eta": eta, "xi": xi, "v": v}
        ring = u.ring
        for name, block in blocks.items():
            if block.shape != expected[name]:
                raise ShapeMismatch(f"block {name} has shape {block.shape}, expected {expected[name]}")
            if block.ring != ring:
                raise ShapeMismatch(f"block {name} lives in a different ring")
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("NCoordinates is immutable")

    @property
    def ring(self) -> SuperRing:
        return self.u.ring

    @classmethod
    def zero(cls, ring: SuperRing, profile: BlockProfile) -> "NCoordinates":
        r, m_r, n_s, s = profile.sizes
        return cls(
            profile,
            SuperMatrix.zeros(ring, SuperShape((m_r, 0), (r, 0))),
            SuperMatrix.zeros(ring, SuperShape((m_r, 0), (0, s))),
            SuperMatrix.zeros(ring, SuperShape((0, n_s), (r, 0))),
            SuperMatrix.zeros(ring, SuperShape((0, n_s), (0, s))),
        )

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.eta.is_zero() and self.xi.is_zero() and self.v.is_zero()

    def __eq__(self, other):
        if not isinstance(other, NCoordinates):
            return NotImplemented
        return (
            self.profile == other.profile
            and self.u == other.u
            and self.eta == other.eta
            and self.xi == other.xi
            and self.v == other.v
        )

    def __hash__(self):
        return hash((self.profile, self.u, self.eta, self.xi, self.v))

    def __repr__(self):
        return f"NCoordinates(u={self.u!r}, eta={self.eta!r}, xi={self.xi!r}, v={self.v!r})"


def _identity_block(ring: SuperRing, size: int, parity: int) -> SuperMatrix:
    return SuperMatrix.identity(ring, size, 0) if parity == 0 else SuperMatrix.identity(ring, 0, size)


def _zero_block(ring: SuperRing, bp: BlockProfile, i: int, j: int) -> SuperMatrix:
    sizes = bp.sizes
    rows = (sizes[i - 1], 0) if bp.block_parity(i) == 0 else (0, sizes[i - 1])
    cols = (sizes[j - 1], 0) if bp.block_parity(j) == 0 else (0, sizes[j - 1])
    return SuperMatrix.zeros(ring, SuperShape(rows, cols))


def assemble(coords: NCoordinates) -> SuperMatrix:
    """The unipotent-complement matrix with the given free blocks."""
    bp = coords.profile
    ring = coords.ring
    sizes = bp.sizes
    eye = [_identity_block(ring, sizes[k - 1], bp.block_parity(k)) for k in range(1, 5)]
    z = lambda i, j: _zero_block(ring, bp, i, j)
    grid = [
        [eye[0], z(1, 2), z(1, 3), z(1, 4)],
        [coords.u, eye[1], z(2, 3), coords.eta],
        [coords.xi, z(3, 2), eye[2], coords.v],
        [z(4, 1), z(4, 2), z(4, 3), eye[3]],
    ]
    return block_matrix(grid)


def n_coordinates_of(g: SuperMatrix, bp: BlockProfile) -> NCoordinates:
    """Read the four free N-position blocks off any profile-shaped matrix."""
    b = split_blocks(g, bp)
    return NCoordinates(bp, b[(2, 1)], b[(2, 4)], b[(3, 1)], b[(3, 4)])


def standard_parabolic_member(g: SuperMatrix, bp: BlockProfile) -> bool:
    """True iff g stabilizes the standard subspace: four zero blocks."""
    b = split_blocks(g, bp)
    return all(b[pos].is_zero() for pos in ((2, 1), (3, 1), (2, 4), (3, 4)))


def n_member(g: SuperMatrix, bp: BlockProfile) -> bool:
    """Identity diagonal blocks, free N-position blocks, zero elsewhere."""
    b = split_blocks(g, bp)
    sizes = bp.sizes
    for k in range(1, 5):
        if b[(k, k)] != _identity_block(g.ring, sizes[k - 1], bp.block_parity(k)):
            return False
    fixed_zero = ((1, 2), (1, 3), (1, 4), (2, 3), (3, 2), (4, 1), (4, 2), (4, 3))
    return all(b[pos].is_zero() for pos in fixed_zero)


def in_big_cell(g: SuperMatrix, bp: BlockProfile) -> bool:
    """True iff the (1,1) and (4,4) corner blocks have invertible body."""
    b = split_blocks(g, bp)
    return det_even(b[(1, 1)].body()).is_unit() and det_even(b[(4, 4)].body()).is_unit()


def normal_form(g: SuperMatrix, bp: BlockProfile) -> Tuple[NCoordinates, SuperMatrix]:
    """The unique factorization g = assemble(coords) * p with p parabolic.

    Solved by block elimination of the sixteen defining equations.  Rows 1
    and 4 of the system are direct read-offs; the four corner equations of
    rows 2 and 3 determine (u, eta) and (v, xi) through the two Schur-type
    brackets, and the remaining parabolic blocks follow by substitution.
    """
    _check_square(g, bp)
    if not in_big_cell(g, bp):
        raise NotInBigCell(f"corner blocks of g lack invertible body under profile {bp}")
    if not is_invertible(g):
        raise NotInvertible("g has singular body")
    b = split_blocks(g, bp)
    g11_inv = inv_even(b[(1, 1)])
    g44_inv = inv_even(b[(4, 4)])

    # row 2, columns 1 and 4:  u*g11 + eta*gamma41 = g21,  u*gamma14 + eta*g44 = gamma24
    bracket_u = inv_even(b[(1, 1)] - b[(1, 4)] * g44_inv * b[(4, 1)])
    u = (b[(2, 1)] - b[(2, 4)] * g44_inv * b[(4, 1)]) * bracket_u
    eta = (b[(2, 4)] - u * b[(1, 4)]) * g44_inv

    # row 3, columns 4 and 1:  xi*gamma14 + v*g44 = g34,  xi*g11 + v*gamma41 = gamma31
    bracket_v = inv_even(b[(4, 4)] - b[(4, 1)] * g11_inv * b[(1, 4)])
    v = (b[(3, 4)] - b[(3, 1)] * g11_inv * b[(1, 4)]) * bracket_v
    xi = (b[(3, 1)] - v * b[(4, 1)]) * g11_inv

    coords = NCoordinates(bp, u, eta, xi, v)
    ring = g.ring
    z = lambda i, j: _zero_block(ring, bp, i, j)
    p = block_matrix([
        [b[(1, 1)], b[(1, 2)], b[(1, 3)], b[(1, 4)]],
        [z(2, 1), b[(2, 2)] - u * b[(1, 2)] - eta * b[(4, 2)],
         b[(2, 3)] - u * b[(1, 3)] - eta * b[(4, 3)], z(2, 4)],
        [z(3, 1), b[(3, 2)] - xi * b[(1, 2)] - v * b[(4, 2)],
         b[(3, 3)] - xi * b[(1, 3)] - v * b[(4, 3)], z(3, 4)],
        [b[(4, 1)], b[(4, 2)], b[(4, 3)], b[(4, 4)]],
    ])
    return coords, p


def cosets_equal(g1: SuperMatrix, g2: SuperMatrix, bp: BlockProfile) -> bool:
    """Whether g1 and g2 represent the same left coset of the parabolic."""
    _check_square(g1, bp)
    _check_square(g2, bp)
    return standard_parabolic_member(g1.inv() * g2, bp)
