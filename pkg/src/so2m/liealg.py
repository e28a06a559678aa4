"""The real Lie algebra so(2,m), its complexification, and matrix plumbing.

Matrices are stored sparsely as {(i, j): GaussianRational} with 1-based
indices, which keeps the code aligned with the usual E_ij / F_jk notation.
The Cartan involution is conjugation by I_{2,m} = diag(-I_2, I_m); its
eigenspaces give k0 (block diagonal) and p0 (off-diagonal blocks).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .exact import GaussianRational, Scalar

Entry = tuple[int, int]


class ExactMatrix:
    """Sparse square matrix over Q(i) with 1-based (row, col) keys."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: dict[Entry, GaussianRational] | None = None):
        self.n = n
        clean: dict[Entry, GaussianRational] = {}
        if entries:
            for (i, j), v in entries.items():
                if not (1 <= i <= n and 1 <= j <= n):
                    raise ValueError(f"index ({i}, {j}) out of range for n={n}")
                v = GaussianRational.coerce(v)
                if not v.is_zero():
                    clean[(i, j)] = v
        self.entries = clean

    @staticmethod
    def zero(n: int) -> "ExactMatrix":
        return ExactMatrix(n)

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(n, {(i, i): GaussianRational(1) for i in range(1, n + 1)})

    @staticmethod
    def diagonal(values: Iterable[Scalar]) -> "ExactMatrix":
        vals = [GaussianRational.coerce(v) for v in values]
        return ExactMatrix(
            len(vals), {(i, i): v for i, v in enumerate(vals, start=1)}
        )

    def get(self, i: int, j: int) -> GaussianRational:
        return self.entries.get((i, j), GaussianRational(0))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        merged = dict(self.entries)
        for key, v in other.entries.items():
            merged[key] = merged.get(key, GaussianRational(0)) + v
        return ExactMatrix(self.n, merged)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.n, {k: -v for k, v in self.entries.items()})

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        by_row: dict[int, list[tuple[int, GaussianRational]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[Entry, GaussianRational] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                prod = a * b
                if key in out:
                    out[key] = out[key] + prod
                else:
                    out[key] = prod
        return ExactMatrix(self.n, out)

    def scale(self, c: Scalar) -> "ExactMatrix":
        c = GaussianRational.coerce(c)
        return ExactMatrix(self.n, {k: c * v for k, v in self.entries.items()})

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.n, {(j, i): v for (i, j), v in self.entries.items()})

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix(self.n, {k: v.conjugate() for k, v in self.entries.items()})

    def trace(self) -> GaussianRational:
        t = GaussianRational(0)
        for (i, j), v in self.entries.items():
            if i == j:
                t = t + v
        return t

    def is_zero(self) -> bool:
        return not self.entries

    def is_real(self) -> bool:
        return all(v.is_real() for v in self.entries.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactMatrix):
            return self.n == other.n and self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        return f"ExactMatrix(n={self.n}, nnz={len(self.entries)})"

    def _check(self, other: "ExactMatrix") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")


def elementary(n: int, i: int, j: int) -> ExactMatrix:
    """E_ij, the matrix unit."""
    return ExactMatrix(n, {(i, j): GaussianRational(1)})


def skew_pair(n: int, j: int, k: int) -> ExactMatrix:
    """F_jk = E_jk - E_kj."""
    return ExactMatrix(n, {(j, k): GaussianRational(1), (k, j): GaussianRational(-1)})


def symmetric_pair(n: int, j: int, k: int) -> ExactMatrix:
    """E_jk + E_kj, the p0-type generator."""
    return ExactMatrix(n, {(j, k): GaussianRational(1), (k, j): GaussianRational(1)})


def bracket(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    """Matrix commutator [x, y] = xy - yx."""
    if x.n != y.n:
        raise ValueError(f"size mismatch: {x.n} vs {y.n}")
    return (x @ y) - (y @ x)


@dataclass(frozen=True)
class LieContext:
    """Dimension data and the Cartan involution for so(2,m)."""

    m: int
    l: int
    family: str  # "B" for m = 2l-1, "D" for m = 2l-2
    n: int  # ambient matrix size m+2
    dim_g0: int
    dim_k0: int
    dim_p0: int
    theta_conjugator: ExactMatrix = field(compare=False)

    def signature_matrix(self) -> ExactMatrix:
        return self.theta_conjugator


class UnsupportedRankError(ValueError):
    pass


@lru_cache(maxsize=None)
def build_context(m: int) -> LieContext:
    """Context for so(2,m); rejects m < 2 (rank-degenerate)."""
    if m < 2:
        raise UnsupportedRankError(f"m must be >= 2, got {m}")
    if m % 2 == 1:
        family, l = "B", (m + 1) // 2
    else:
        family, l = "D", (m + 2) // 2
    n = m + 2
    i22 = ExactMatrix.diagonal([-1, -1] + [1] * m)
    return LieContext(
        m=m,
        l=l,
        family=family,
        n=n,
        dim_g0=(m + 1) * (m + 2) // 2,
        dim_k0=1 + m * (m - 1) // 2,
        dim_p0=2 * m,
        theta_conjugator=i22,
    )


def theta(ctx: LieContext, x: ExactMatrix) -> ExactMatrix:
    """Cartan involution: conjugation by I_{2,m} (self-inverse)."""
    g = ctx.theta_conjugator
    return g @ x @ g


def in_g(ctx: LieContext, x: ExactMatrix) -> bool:
    """Membership in the complexified algebra: x^t I_{2,m} + I_{2,m} x = 0."""
    if x.n != ctx.n:
        return False
    g = ctx.theta_conjugator
    return ((x.transpose() @ g) + (g @ x)).is_zero()


def in_g0(ctx: LieContext, x: ExactMatrix) -> bool:
    """Membership in the real form: in g and all entries real."""
    return x.is_real() and in_g(ctx, x)


def cartan_decompose(ctx: LieContext, x: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix]:
    """Split x in g as (k-part, p-part) along the theta eigenspaces."""
    if not in_g(ctx, x):
        raise ValueError("matrix is not in the complexified algebra")
    k_entries: dict[Entry, GaussianRational] = {}
    p_entries: dict[Entry, GaussianRational] = {}
    for (i, j), v in x.entries.items():
        if (i <= 2) == (j <= 2):
            k_entries[(i, j)] = v
        else:
            p_entries[(i, j)] = v
    return ExactMatrix(ctx.n, k_entries), ExactMatrix(ctx.n, p_entries)


def f_isomorphism(ctx: LieContext, z: ExactMatrix) -> ExactMatrix:
    """Block isomorphism so(m+2,C) -> g: multiply off-diagonal blocks by i.

    Input must be skew-symmetric; the upper 2x2 and lower mxm blocks pass
    through unchanged, and the sign flip on the lower-left block combines
    with the factor i to produce the symmetric p-block shape.
    """
    if z.n != ctx.n:
        raise ValueError(f"expected size {ctx.n}, got {z.n}")
    if not (z.transpose() + z).is_zero():
        raise ValueError("input to the block isomorphism must be skew-symmetric")
    i_unit = GaussianRational(0, 1)
    out: dict[Entry, GaussianRational] = {}
    for (i, j), v in z.entries.items():
        if (i <= 2) == (j <= 2):
            out[(i, j)] = v
        elif i <= 2 < j:
            out[(i, j)] = i_unit * v
        else:
            # lower-left block of the input is -Z2^t; the image carries +i Z2^t
            out[(i, j)] = -(i_unit * v)
    return ExactMatrix(ctx.n, out)


def g0_standard_basis(ctx: LieContext) -> list[ExactMatrix]:
    """Basis of g0 from F_jk (block diagonal) and E_jk + E_kj (off-diagonal)."""
    n = ctx.n
    basis = [skew_pair(n, 1, 2)]
    for j in range(3, n + 1):
        for k in range(j + 1, n + 1):
            basis.append(skew_pair(n, j, k))
    for i in (1, 2):
        for k in range(3, n + 1):
            basis.append(symmetric_pair(n, i, k))
    return basis


def standard_coordinates(ctx: LieContext, x: ExactMatrix) -> list[GaussianRational]:
    """Coordinates of x in g (complexified) w.r.t. g0_standard_basis order."""
    if not in_g(ctx, x):
        raise ValueError("matrix is not in the complexified algebra")
    n = ctx.n
    coords = [x.get(1, 2)]
    for j in range(3, n + 1):
        for k in range(j + 1, n + 1):
            coords.append(x.get(j, k))
    for i in (1, 2):
        for k in range(3, n + 1):
            coords.append(x.get(i, k))
    return coords


def h_generator(ctx: LieContext, j: int) -> ExactMatrix:
    """H_j = F_{2j-1,2j}, the j-th rotation generator of the compact torus."""
    if not (1 <= j <= ctx.l):
        raise ValueError(f"j out of range: {j}")
    return skew_pair(ctx.n, 2 * j - 1, 2 * j)
