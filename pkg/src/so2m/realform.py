"""Real bases of so(2,m) with rational structure constants, and the compact form.

The basis B (and B' on the alternate torus, family D) consists of i H*_phi,
the X_a, Y_a over compact positive roots, and i X_a, i Y_a over noncompact
ones.  Coordinates in these bases are computed by one exact matrix inversion
per basis, cached; everything downstream (structure-constant scans, Ad
matrices of involutions, compact-form checks) funnels through that solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chevalley import build_chevalley
from .exact import GaussianRational
from .liealg import (
    ExactMatrix,
    LieContext,
    bracket,
    build_context,
    standard_coordinates,
)
from .roots import T0, T0_PRIME

I_UNIT = GaussianRational(0, 1)


def invert_gaussian(rows: list[list[GaussianRational]]) -> list[list[GaussianRational]]:
    """Gauss-Jordan inverse over Q(i)."""
    n = len(rows)
    zero, one = GaussianRational(0), GaussianRational(1)
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise ValueError("singular matrix over Q(i)")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = one / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                factor = aug[r][col]
                aug[r] = [v - factor * p for v, p in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def symmetric_pivots(gram: list[list[Fraction]]) -> list[Fraction] | None:
    """Pivots of symmetric Gaussian elimination (ratios of leading minors).

    Returns None if a zero pivot appears, which rules out definiteness.
    """
    a = [row[:] for row in gram]
    n = len(a)
    pivots = []
    for k in range(n):
        p = a[k][k]
        if p == 0:
            return None
        pivots.append(p)
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f == 0:
                continue
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return pivots


@dataclass
class RealBasis:
    """An ordered basis of g0 split into its k0 and p0 parts."""

    m: int
    label: str  # "B" or "B'"
    variant: str
    kappa_part: list[ExactMatrix]
    p_part: list[ExactMatrix]

    @property
    def vectors(self) -> list[ExactMatrix]:
        return self.kappa_part + self.p_part

    @property
    def ctx(self) -> LieContext:
        return build_context(self.m)

    def coordinates(self, x: ExactMatrix) -> list[GaussianRational]:
        """Exact coordinates of x (in g) with respect to this basis."""
        inverse = _basis_inverse(self.m, self.label)
        col = standard_coordinates(self.ctx, x)
        return _apply_inverse(inverse, col)


@lru_cache(maxsize=None)
def build_real_basis(m: int, label: str = "B") -> RealBasis:
    """Basis B (torus T0) or B' (torus T0', family D with l >= 3 only)."""
    ctx = build_context(m)
    if label == "B":
        variant = T0
    elif label == "B'":
        if ctx.family != "D" or ctx.l < 3:
            raise ValueError("basis B' requires family D with l >= 3")
        variant = T0_PRIME
    else:
        raise ValueError(f"unknown basis label {label!r}")
    cb = build_chevalley(m, variant)
    kappa = [cb.hstar(phi).scale(I_UNIT) for phi in cb.rs.simples]
    for r in cb.rs.compact_positives:
        kappa.append(cb.x_vector(r))
        kappa.append(cb.y_vector(r))
    p_part = []
    for r in cb.rs.noncompact_positives:
        p_part.append(cb.x_vector(r).scale(I_UNIT))
        p_part.append(cb.y_vector(r).scale(I_UNIT))
    basis = RealBasis(m=m, label=label, variant=variant, kappa_part=kappa, p_part=p_part)
    for v in basis.vectors:
        if not v.is_real():
            raise ValueError("real basis vector has a nonreal entry")
    if len(basis.vectors) != ctx.dim_g0:
        raise ValueError("real basis has the wrong cardinality")
    return basis


def _apply_inverse(
    inverse: list[list[GaussianRational]], col: list[GaussianRational]
) -> list[GaussianRational]:
    # brackets of basis vectors are sparse; only walk the nonzero coordinates
    support = [k for k, c in enumerate(col) if not c.is_zero()]
    zero = GaussianRational(0)
    return [
        sum((row[k] * col[k] for k in support), zero) for row in inverse
    ]


@lru_cache(maxsize=None)
def _basis_inverse(m: int, label: str) -> list[list[GaussianRational]]:
    basis = build_real_basis(m, label)
    ctx = basis.ctx
    columns = [standard_coordinates(ctx, v) for v in basis.vectors]
    rows = [[columns[b][i] for b in range(len(columns))] for i in range(len(columns[0]))]
    return invert_gaussian(rows)


@dataclass
class StructureConstantReport:
    m: int
    label: str
    all_rational: bool
    worst_entry: str


def check_structure_constants_rational(m: int, label: str = "B") -> StructureConstantReport:
    """Scan all basis bracket pairs; constants must be real (hence rational)."""
    basis = build_real_basis(m, label)
    vectors = basis.vectors
    worst = ""
    for i, x in enumerate(vectors):
        for y in vectors[i + 1 :]:
            coords = basis.coordinates(bracket(x, y))
            for c in coords:
                if not c.is_real():
                    return StructureConstantReport(m, label, False, str(c))
    return StructureConstantReport(m, label, True, worst)


@dataclass
class CompactFormReport:
    m: int
    bracket_closed: bool
    trace_form_negative_definite: bool

    @property
    def ok(self) -> bool:
        return self.bracket_closed and self.trace_form_negative_definite


def verify_compact_form(m: int) -> CompactFormReport:
    """Check that u = k0 + i p0 is a real Lie algebra with negative trace form."""
    basis = build_real_basis(m, "B")
    cb = build_chevalley(m, T0)
    u_vectors = list(basis.kappa_part)
    for r in cb.rs.noncompact_positives:
        u_vectors.append(cb.x_vector(r))
        u_vectors.append(cb.y_vector(r))

    columns = [standard_coordinates(basis.ctx, v) for v in u_vectors]
    rows = [[columns[b][i] for b in range(len(columns))] for i in range(len(columns[0]))]
    inverse = invert_gaussian(rows)

    def u_coords(x: ExactMatrix) -> list[GaussianRational]:
        return _apply_inverse(inverse, standard_coordinates(basis.ctx, x))

    closed = True
    for i, x in enumerate(u_vectors):
        for y in u_vectors[i + 1 :]:
            if not all(c.is_real() for c in u_coords(bracket(x, y))):
                closed = False
                break
        if not closed:
            break

    gram: list[list[Fraction]] = []
    for x in u_vectors:
        row = []
        for y in u_vectors:
            t = (x @ y).trace()
            if not t.is_real():
                return CompactFormReport(m, closed, False)
            row.append(t.re)
        gram.append(row)
    pivots = symmetric_pivots(gram)
    negative = pivots is not None and all(p < 0 for p in pivots)
    return CompactFormReport(m, closed, negative)
