"""Presentations of affine superschemes and the Jacobian rank test.

A presentation adjoins fiber variables (p even, q odd) to a base ring and
imposes homogeneous relations, r' even and s' odd.  At a rational point (odd
variables zero, even fiber variables assigned exact values) the Jacobian is
block diagonal; the verdict is smooth when both blocks have full row rank,
with relative dimension (p - r' | q - s'), and etale when that dimension is
0|0.  Rank is computed by exact Gaussian elimination over Q(i).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import SuperElement, SuperHom, SuperRing
from .errors import NotAPoint, ParityViolation, UnassignedVariable
from .matrix import SuperMatrix, SuperShape, det_even
from .scalars import GaussianRational


class Presentation:
    """Generators and relations over a base ring."""

    __slots__ = ("base", "fiber_even", "fiber_odd", "relations_even", "relations_odd", "total_ring")

    def __init__(
        self,
        base: SuperRing,
        fiber_even: Sequence[str],
        fiber_odd: Sequence[str],
        relations_even: Sequence[SuperElement] = (),
        relations_odd: Sequence[SuperElement] = (),
    ):
        total = SuperRing(base.even_vars + tuple(fiber_even), base.odd_vars + tuple(fiber_odd))
        rel_even = tuple(relations_even)
        rel_odd = tuple(relations_odd)
        for parity, rels in ((0, rel_even), (1, rel_odd)):
            for k, rel in enumerate(rels):
                if rel.ring != total:
                    raise ValueError(f"relation {k} does not live over base + fiber generators")
                if not rel.has_parity(parity):
                    kind = "even" if parity == 0 else "odd"
                    raise ParityViolation(f"{kind} relation {k} is not {kind}: {rel!r}")
        if len(rel_even) > len(fiber_even) or len(rel_odd) > len(fiber_odd):
            raise ValueError(
                f"relation counts ({len(rel_even)}|{len(rel_odd)}) exceed fiber variable "
                f"counts ({len(fiber_even)}|{len(fiber_odd)}); the rank test cannot reach them"
            )
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "fiber_even", tuple(fiber_even))
        object.__setattr__(self, "fiber_odd", tuple(fiber_odd))
        object.__setattr__(self, "relations_even", rel_even)
        object.__setattr__(self, "relations_odd", rel_odd)
        object.__setattr__(self, "total_ring", total)

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")


class RationalPoint:
    """Exact values for even variables; odd variables are implicitly zero."""

    __slots__ = ("values",)

    def __init__(self, values: Mapping[str, object]):
        object.__setattr__(
            self, "values", {name: GaussianRational.coerce(v) for name, v in values.items()}
        )

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoint is immutable")


@dataclass(frozen=True)
class SmoothnessVerdict:
    smooth: bool
    even_rank: int
    odd_rank: int
    relative_dimension: Optional[Tuple[int, int]]


def _reduce_at(pres: Presentation, pt: RationalPoint, element: SuperElement) -> SuperElement:
    """Substitute the point: assigned evens to values, odds to zero,
    unassigned even base variables kept as formal constants."""
    total = pres.total_ring
    residual_evens = tuple(v for v in total.even_vars if v not in pt.values)
    residual = SuperRing(residual_evens, ())
    images: Dict[str, SuperElement] = {}
    for name in total.even_vars:
        if name in pt.values:
            images[name] = residual.scalar(pt.values[name])
        else:
            images[name] = residual.gen(name)
    for name in total.odd_vars:
        images[name] = residual.zero()
    return SuperHom(total, residual, images)(element)


def _check_point(pres: Presentation, pt: RationalPoint) -> None:
    for label, rels in (("even", pres.relations_even), ("odd", pres.relations_odd)):
        for k, rel in enumerate(rels):
            reduced = _reduce_at(pres, pt, rel)
            if not reduced.is_zero():
                raise NotAPoint(f"{label} relation {k} does not vanish at the point: {reduced!r}")


def jacobian(pres: Presentation) -> List[List[SuperElement]]:
    """Partial derivatives of all relations by all fiber variables.

    Rows: even relations then odd ones; columns: even fiber variables then
    odd ones.  Base variables are constants and get no column.
    """
    rows = list(pres.relations_even) + list(pres.relations_odd)
    cols = list(pres.fiber_even) + list(pres.fiber_odd)
    return [[rel.derivative(var) for var in cols] for rel in rows]


def _rank(rows: List[List[GaussianRational]]) -> int:
    """Rank over Q(i) by exact Gaussian elimination."""
    matrix = [list(row) for row in rows]
    n_cols = len(matrix[0]) if matrix else 0
    rank = 0
    col = 0
    while rank < len(matrix) and col < n_cols:
        pivot_row = next((i for i in range(rank, len(matrix)) if matrix[i][col]), None)
        if pivot_row is None:
            col += 1
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for i in range(rank + 1, len(matrix)):
            if matrix[i][col]:
                factor = matrix[i][col] / pivot
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[rank])]
        rank += 1
        col += 1
    return rank


def rank_at_point(pres: Presentation, pt: RationalPoint) -> Tuple[int, int]:
    """Ranks of the two diagonal Jacobian blocks at the point."""
    _check_point(pres, pt)
    jac = jacobian(pres)
    n_even_rel = len(pres.relations_even)
    n_even_var = len(pres.fiber_even)
    evaluated: List[List[GaussianRational]] = []
    for i, row in enumerate(jac):
        values = []
        for j, entry in enumerate(row):
            reduced = _reduce_at(pres, pt, entry)
            value = reduced.constant_value()
            if value is None:
                raise UnassignedVariable(
                    f"Jacobian entry ({i}, {j}) does not reduce to a number: {reduced!r}; "
                    "assign the base variables it mentions"
                )
            off_diagonal = (i < n_even_rel) != (j < n_even_var)
            # odd-parity entries always die at a rational point
            assert not (off_diagonal and value), f"odd-parity Jacobian entry ({i}, {j}) survived"
            values.append(value)
        evaluated.append(values)
    even_block = [row[:n_even_var] for row in evaluated[:n_even_rel]]
    odd_block = [row[n_even_var:] for row in evaluated[n_even_rel:]]
    return _rank(even_block), _rank(odd_block)


def is_smooth_at(pres: Presentation, pt: RationalPoint) -> SmoothnessVerdict:
    even_rank, odd_rank = rank_at_point(pres, pt)
    smooth = even_rank == len(pres.relations_even) and odd_rank == len(pres.relations_odd)
    rel_dim = None
    if smooth:
        rel_dim = (
            len(pres.fiber_even) - len(pres.relations_even),
            len(pres.fiber_odd) - len(pres.relations_odd),
        )
    return SmoothnessVerdict(smooth, even_rank, odd_rank, rel_dim)


def is_etale_at(pres: Presentation, pt: RationalPoint) -> bool:
    verdict = is_smooth_at(pres, pt)
    return verdict.smooth and verdict.relative_dimension == (0, 0)


def general_linear_presentation(m: int, n: int) -> Tuple[Presentation, RationalPoint]:
    """The invertible (m|n) matrices as an affine superscheme.

    Entries are free variables in the parity pattern; an extra even variable
    t enforces invertibility through t * det(even-even) * det(odd-odd) = 1.
    Returns the presentation and the identity point.
    """
    even_names = [f"a{i}{j}" for i in range(m) for j in range(m)]
    even_names += [f"d{i}{j}" for i in range(n) for j in range(n)]
    even_names.append("t")
    odd_names = [f"b{i}{j}" for i in range(m) for j in range(n)]
    odd_names += [f"c{i}{j}" for i in range(n) for j in range(m)]
    ring = SuperRing(tuple(even_names), tuple(odd_names))
    a_block = SuperMatrix(
        ring, SuperShape((m, 0), (m, 0)),
        [[ring.gen(f"a{i}{j}") for j in range(m)] for i in range(m)],
    )
    d_block = SuperMatrix(
        ring, SuperShape((0, n), (0, n)),
        [[ring.gen(f"d{i}{j}") for j in range(n)] for i in range(n)],
    )
    relation = ring.gen("t") * det_even(a_block) * det_even(d_block) - ring.one()
    pres = Presentation(SuperRing(), even_names, odd_names, [relation], [])
    values = {name: 0 for name in even_names}
    for i in range(m):
        values[f"a{i}{i}"] = 1
    for i in range(n):
        values[f"d{i}{i}"] = 1
    values["t"] = 1
    return pres, RationalPoint(values)
