"""Orientation analysis of the fixed groups acting on their symmetric spaces.

For each nonholomorphic catalog involution the components of K(sigma) have
explicit diagonal representatives; the determinant of Ad on the fixed part
of p0 is computed exactly for each representative.  Holomorphic involutions
short-circuit to orientation-preserving: Ad(k) is then complex linear on
p0(sigma), and a complex-linear map has positive real determinant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import GaussianRational
from .involutions import (
    ETA,
    HOLOMORPHIC,
    Involution,
    MU,
    SIGMA_0_PRIME,
    TAU,
    TAU_PRIME,
    catalog,
    fixed_subalgebra,
    holomorphy_class,
)
from .involutions import rational_det
from .liealg import ExactMatrix, build_context, standard_coordinates
from .realform import invert_gaussian


@dataclass(frozen=True)
class ComponentRep:
    label: str
    matrix: ExactMatrix


class UnsupportedOrientationCase(ValueError):
    pass


def _diag(values: list[int]) -> ExactMatrix:
    return ExactMatrix.diagonal(values)


def k_sigma_components(inv: Involution) -> tuple[list[ComponentRep], bool]:
    """Component representatives of K(sigma), plus a holomorphic-shortcut flag.

    Holomorphic involutions return only the identity with the flag set; the
    remaining catalog families carry the explicit representative lists.
    """
    m = inv.m
    n = m + 2
    identity = ComponentRep("identity", ExactMatrix.identity(n))
    if holomorphy_class(inv) == HOLOMORPHIC:
        return [identity], True

    if inv.kind == TAU:
        p = inv.param
        reps = [identity, ComponentRep("Y2", _diag([-1, -1] + [1] * m))]
        if p > 1:
            y3 = _diag([1, 1] + [-1] + [1] * (2 * p - 3) + [-1] + [1] * (m + 1 - 2 * p))
            y4 = _diag([-1, -1] + [-1] + [1] * (2 * p - 3) + [-1] + [1] * (m + 1 - 2 * p))
            reps += [ComponentRep("Y3", y3), ComponentRep("Y4", y4)]
    elif inv.kind == MU:
        l = build_context(m).l
        reps = [
            identity,
            ComponentRep("Y2", _diag([-1, -1] + [1] * (2 * l - 2))),
            ComponentRep("Y3", _diag([1] * (2 * l - 2) + [-1, -1])),
            ComponentRep("Y4", _diag([-1, -1] + [1] * (2 * l - 4) + [-1, -1])),
        ]
    elif inv.kind == SIGMA_0_PRIME:
        reps = [
            identity,
            ComponentRep("Y2", _diag([-1, -1, 1, 1, 1, 1])),
            ComponentRep("Y3", _diag([1, 1, 1, 1, -1, -1])),
            ComponentRep("Y4", _diag([-1, -1, 1, 1, -1, -1])),
        ]
    elif inv.kind == ETA:
        reps = [identity]
    elif inv.kind == TAU_PRIME and m == 2:
        reps = [identity, ComponentRep("Y2", _diag([1, 1, -1, -1]))]
    else:
        raise UnsupportedOrientationCase(
            f"{inv.name} is neither holomorphic nor in the treated families"
        )
    for rep in reps[1:]:
        _check_rep(inv, rep)
    return reps, False


def _check_rep(inv: Involution, rep: ComponentRep) -> None:
    y = rep.matrix
    n = y.n
    if not (y @ y.transpose() - ExactMatrix.identity(n)).is_zero():
        raise ValueError(f"{rep.label} is not orthogonal")
    block = [y.get(i, j) for i in (1, 2) for j in range(3, n + 1)]
    if any(not v.is_zero() for v in block):
        raise ValueError(f"{rep.label} is not block diagonal")
    det_a = (y.get(1, 1) * y.get(2, 2) - y.get(1, 2) * y.get(2, 1)).re
    sub = [[y.get(i, j).re for j in range(3, n + 1)] for i in range(3, n + 1)]
    if det_a * rational_det(sub) != 1:
        raise ValueError(f"{rep.label} is not in SO(2) x SO(m) up to components")
    if not (inv.apply(y) - y).is_zero():
        raise ValueError(f"{rep.label} is not fixed by {inv.name}")


from functools import lru_cache


@lru_cache(maxsize=None)
def _p0_solver(inv: Involution):
    """Fixed p0 basis with a cached coordinate solver for it."""
    basis = tuple(fixed_subalgebra(inv).p0_fixed_basis)
    if not basis:
        return basis, None, None, None
    ctx = build_context(inv.m)
    columns = [standard_coordinates(ctx, b) for b in basis]
    support = sorted({i for col in columns for i, v in enumerate(col) if not v.is_zero()})
    rows = [[columns[b][i] for b in range(len(columns))] for i in support]
    if len(rows) < len(columns):
        raise ValueError("fixed basis coordinates are degenerate")
    square, positions = _independent_square(rows)
    inverse = invert_gaussian(square)
    return basis, columns, support, (positions, inverse)


def det_ad_on_p0(inv: Involution, rep: ComponentRep) -> int:
    """Exact determinant of Ad(rep) restricted to p0(sigma); always +-1."""
    basis, columns, support, solver = _p0_solver(inv)
    if not basis:
        return 1
    positions, inverse = solver
    ctx = build_context(inv.m)
    y = rep.matrix
    mat = []
    for b in basis:
        image = y @ b @ y.transpose()
        col = standard_coordinates(ctx, image)
        reduced = [col[support[p]] for p in positions]
        coords = [
            sum((inverse[r][k] * reduced[k] for k in range(len(reduced))),
                GaussianRational(0))
            for r in range(len(inverse))
        ]
        leftover = list(col)
        for c, base_col in zip(coords, columns):
            leftover = [lv - c * bv for lv, bv in zip(leftover, base_col)]
        if any(not v.is_zero() for v in leftover):
            raise ValueError(f"{rep.label} does not stabilize p0({inv.name})")
        mat.append([c.re for c in coords])
    det = rational_det([[mat[j][i] for j in range(len(mat))] for i in range(len(mat))])
    if det not in (1, -1):
        raise ValueError(f"determinant {det} is not a sign")
    return int(det)


def _independent_square(
    rows: list[list[GaussianRational]],
) -> tuple[list[list[GaussianRational]], list[int]]:
    """Select rows forming an invertible square system (Gaussian elimination)."""
    ncols = len(rows[0])
    chosen: list[int] = []
    work: list[list[GaussianRational]] = []
    for idx, row in enumerate(rows):
        candidate = work + [list(row)]
        if _gaussian_rank(candidate) > len(work):
            work.append(list(row))
            chosen.append(idx)
        if len(chosen) == ncols:
            break
    if len(chosen) < ncols:
        raise ValueError("could not find an invertible coordinate square")
    return [rows[i] for i in chosen], chosen


def _gaussian_rank(rows: list[list[GaussianRational]]) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    col = 0
    while rank < len(mat) and col < ncols:
        pivot = next((i for i in range(rank, len(mat)) if not mat[i][col].is_zero()), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = GaussianRational(1) / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and not mat[i][col].is_zero():
                f = mat[i][col]
                mat[i] = [v - f * p for v, p in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def orientation_preserving(inv: Involution) -> bool:
    """Prop.-4.2 decision: all component determinants on p0(sigma) are +1."""
    reps, shortcut = k_sigma_components(inv)
    if shortcut:
        return True
    return all(det_ad_on_p0(inv, rep) == 1 for rep in reps)


def theorem_scope(m: int) -> list[Involution]:
    """Catalog entries whose cycles the main theorem covers.

    For odd m the tau_p family acts orientation-reversingly and is excluded;
    for even m the whole catalog qualifies.
    """
    if m % 2 == 1:
        return [inv for inv in catalog(m) if inv.kind != TAU]
    return list(catalog(m))


@dataclass
class OrientationRow:
    involution: str
    component: str
    determinant: int


def orientation_report(m: int) -> list[OrientationRow]:
    """Determinant of every component representative for every catalog entry."""
    rows = []
    for inv in catalog(m):
        reps, shortcut = k_sigma_components(inv)
        for rep in reps:
            det = 1 if shortcut else det_ad_on_p0(inv, rep)
            rows.append(OrientationRow(inv.name, rep.label, det))
    return rows
