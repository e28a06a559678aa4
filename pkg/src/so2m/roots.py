"""Root systems of so(m+2,C) on the two compact Cartan subalgebras.

Roots are integer coordinate vectors in the e_j basis (variant T0) or the
eps_j basis (variant T0', family D only).  Positivity is decided against the
explicit positive lists, a Borel-de Siebenthal system: the unique noncompact
simple root is phi_1 and it has coefficient 1 in the highest root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import GaussianRational, HodgePolynomial, Q
from .liealg import ExactMatrix, LieContext, build_context, h_generator, skew_pair

Coords = tuple[int, ...]

T0 = "T0"
T0_PRIME = "T0'"


@dataclass(frozen=True, order=True)
class Root:
    """A root as an integer vector in the e_j (or eps_j) basis."""

    coords: Coords

    @property
    def is_compact(self) -> bool:
        return self.coords[0] == 0

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def dot(self, other: "Root") -> int:
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def norm_squared(self) -> int:
        return self.dot(self)

    def pairing(self, h: Coords) -> int:
        """Value of the root on an integer defining vector (sum a_j h_j)."""
        return sum(a * b for a, b in zip(self.coords, h))

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(("+" if c > 0 else "-") + mag + f"e{j}")
        if not terms:
            return "0"
        out = "".join(terms)
        return out[1:] if out.startswith("+") else out


def _unit(l: int, j: int, sign: int = 1) -> Root:
    coords = [0] * l
    coords[j - 1] = sign
    return Root(tuple(coords))


class RootSystem:
    """Full root data with the Borel-de Siebenthal positive system."""

    def __init__(self, ctx: LieContext, variant: str = T0):
        if variant not in (T0, T0_PRIME):
            raise ValueError(f"unknown Cartan variant {variant!r}")
        if variant == T0_PRIME and (ctx.family != "D" or ctx.l < 3):
            raise ValueError("variant T0' is only defined for family D with l >= 3")
        self.ctx = ctx
        self.variant = variant
        l = ctx.l

        positives: list[Root] = []
        for j in range(1, l + 1):
            for k in range(j + 1, l + 1):
                positives.append(_unit(l, j) - _unit(l, k))
                positives.append(_unit(l, j) + _unit(l, k))
        if ctx.family == "B":
            positives.extend(_unit(l, j) for j in range(1, l + 1))

        simples = [_unit(l, j) - _unit(l, j + 1) for j in range(1, l)]
        if ctx.family == "B":
            simples.append(_unit(l, l))
        else:
            simples.append(_unit(l, l - 1) + _unit(l, l))

        self.simples: list[Root] = simples
        self._simple_inverse = _invert_simple_matrix(simples)
        self.positives: list[Root] = sorted(
            positives, key=lambda r: (sum(self.simple_coefficients(r)), r.coords)
        )
        self.roots: list[Root] = self.positives + [-r for r in self.positives]
        self.compact_positives = [r for r in self.positives if r.is_compact]
        self.noncompact_positives = [r for r in self.positives if not r.is_compact]

    # -- basic queries ----------------------------------------------------

    def is_root(self, r: Root) -> bool:
        return r in self._root_set()

    @lru_cache(maxsize=None)
    def _root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    def simple_coefficients(self, r: Root) -> Coords:
        """Integer coefficients of r in the simple-root basis."""
        coeffs = []
        for row in self._simple_inverse:
            val = sum(q * c for q, c in zip(row, r.coords))
            if val.denominator != 1:
                raise ValueError(f"{r} is not an integral combination of simples")
            coeffs.append(int(val))
        return tuple(coeffs)

    def leq(self, a: Root, b: Root) -> bool:
        """Root order: a <= b iff b - a is a nonnegative sum of simples."""
        return all(c >= 0 for c in self.simple_coefficients(b - a))

    def highest_root(self) -> Root:
        """The highest root e1 + e2; undefined for m = 2 (g is not simple)."""
        if self.ctx.m == 2:
            raise ValueError("so(2,2) is not simple: no highest root")
        delta = _unit(self.ctx.l, 1) + _unit(self.ctx.l, 2)
        return delta

    def highest_root_marks(self) -> Coords:
        """Coefficients a_phi of the highest root over the simple roots."""
        return self.simple_coefficients(self.highest_root())

    # -- Cartan subalgebra matrices ---------------------------------------

    def cartan_generator(self, j: int) -> ExactMatrix:
        """Matrix T_j spanning the j-th coordinate line of the torus."""
        ctx = self.ctx
        if self.variant == T0:
            return h_generator(ctx, j)
        if j == 1:
            return h_generator(ctx, 1)
        return skew_pair(ctx.n, 1 + j, ctx.l + j)

    def eval_on_generator(self, r: Root, j: int) -> GaussianRational:
        """Value of the root on T_j (purely imaginary)."""
        a = r.coords[j - 1]
        if self.variant == T0 or j == 1:
            return GaussianRational(0, -a)
        return GaussianRational(0, a)

    def coroot_matrix(self, r: Root) -> ExactMatrix:
        """H*_r = 2 H_r / r(H_r) computed through the trace form."""
        l = self.ctx.l
        norm = r.norm_squared()
        out = ExactMatrix.zero(self.ctx.n)
        for j in range(1, l + 1):
            a = r.coords[j - 1]
            if a == 0:
                continue
            sign = 1 if (self.variant == T0 or j == 1) else -1
            coeff = GaussianRational(0, Q(2 * sign * a, norm))
            out = out + self.cartan_generator(j).scale(coeff)
        return out

    def eval_root_on(self, r: Root, h: ExactMatrix) -> GaussianRational:
        """Value of r on an element of the Cartan written in the T_j basis."""
        coeffs = self.cartan_coefficients(h)
        total = GaussianRational(0)
        for j, c in enumerate(coeffs, start=1):
            total = total + c * self.eval_on_generator(r, j)
        return total

    def cartan_coefficients(self, h: ExactMatrix) -> list[GaussianRational]:
        """Coefficients of h in the T_j basis (raises if h is outside)."""
        coeffs = []
        rebuilt = ExactMatrix.zero(self.ctx.n)
        for j in range(1, self.ctx.l + 1):
            t = self.cartan_generator(j)
            # T_j has a single independent entry; read the coefficient there
            (i0, j0), v0 = next(iter(sorted(t.entries.items())))
            c = h.get(i0, j0) / v0
            coeffs.append(c)
            rebuilt = rebuilt + t.scale(c)
        if not (rebuilt - h).is_zero():
            raise ValueError("element is not in the chosen Cartan subalgebra")
        return coeffs

    def fundamental_coweights(self) -> list[ExactMatrix]:
        """Trace-form duals H_{omega_i} of the fundamental weights.

        Normalized by the trace form rather than the Killing form; the two
        differ by the positive factor m, so directions (all that the m = 2
        bookkeeping needs) are exact.
        """
        l = self.ctx.l
        rows = []
        for phi in self.simples:
            norm = Q(phi.norm_squared())
            rows.append([Q(2 * c) / norm for c in phi.coords])
        inverse = _invert_rational(rows)
        coweights = []
        for i in range(l):
            omega = [inverse[j][i] for j in range(l)]  # coefficients over e_j
            mat = ExactMatrix.zero(self.ctx.n)
            for j, w in enumerate(omega, start=1):
                if w == 0:
                    continue
                sign = 1 if (self.variant == T0 or j == 1) else -1
                mat = mat + self.cartan_generator(j).scale(
                    GaussianRational(0, sign * w / 2)
                )
            coweights.append(mat)
        return coweights


@lru_cache(maxsize=None)
def build_root_system(m: int, variant: str = T0) -> RootSystem:
    return RootSystem(build_context(m), variant)


def _invert_simple_matrix(simples: list[Root]) -> list[list[Fraction]]:
    rows = [[Q(c) for c in s.coords] for s in simples]
    return _invert_rational(_transpose(rows))


def _transpose(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    return [list(col) for col in zip(*rows)]


def _invert_rational(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse of a square matrix over Q."""
    n = len(rows)
    aug = [list(r) + [Q(1) if i == j else Q(0) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Q(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * p for v, p in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# -- Weyl groups ----------------------------------------------------------


def simple_roots_of(positive_roots: frozenset[Root] | set[Root]) -> list[Root]:
    """Simple roots of a positive system: positives not a sum of two positives."""
    pos = set(positive_roots)
    out = []
    for a in pos:
        if not any((a - b) in pos for b in pos if b != a):
            out.append(a)
    return sorted(out)


def _reflect(v: Coords, alpha: Coords, alpha_norm: int) -> Coords:
    dot2 = 2 * sum(x * y for x, y in zip(v, alpha))
    factor, rem = divmod(dot2, alpha_norm)
    if rem:
        raise ValueError("reflection left the integer lattice")
    return tuple(x - factor * y for x, y in zip(v, alpha))


def weyl_length_counts(simple_roots: list[Root]) -> list[int]:
    """Coefficients of the Poincare series of the reflection group.

    Elements are enumerated by breadth-first search over the simple
    reflections, so depth equals Coxeter length; entry k counts elements of
    length k.
    """
    if not simple_roots:
        return [1]
    l = len(simple_roots[0].coords)
    gens = [(s.coords, s.norm_squared()) for s in simple_roots]
    identity = tuple(_unit(l, j).coords for j in range(1, l + 1))
    seen = {identity}
    counts = [1]
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for alpha, norm in gens:
                # right-multiply: first reflect the basis image rows
                new = tuple(_reflect(row, alpha, norm) for row in w)
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        if nxt:
            counts.append(len(nxt))
        frontier = nxt
    return counts


def weyl_order(simple_roots: list[Root]) -> int:
    return sum(weyl_length_counts(simple_roots))


class RankGuardError(ValueError):
    pass


def coset_poincare(
    levi_simples: list[Root], compact_simples: list[Root]
) -> HodgePolynomial:
    """Length generating function of minimal coset representatives.

    Returns W_L(q) / W_{L and K}(q) as a polynomial in the diagonal variable
    xt; exact division is guaranteed because the compact simples are a
    subset of the levi simples (a parabolic subgroup).
    """
    levi_set = {r.coords for r in levi_simples}
    for s in compact_simples:
        if s.coords not in levi_set:
            raise ValueError("compact simples must be a subset of the levi simples")
    rank = _span_rank([r.coords for r in levi_simples])
    if rank > 8:
        raise RankGuardError(f"levi rank {rank} exceeds the enumeration guard (8)")
    full = weyl_length_counts(levi_simples)
    sub = weyl_length_counts(compact_simples)
    quotient = _poly_divide(full, sub)
    return HodgePolynomial({(k, k): c for k, c in enumerate(quotient) if c})


def _span_rank(vectors: list[Coords]) -> int:
    rows = [[Q(c) for c in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    pivot_col = 0
    while rows and pivot_col < ncols:
        pivot = next((i for i, r in enumerate(rows) if r[pivot_col] != 0), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows[0], rows[pivot] = rows[pivot], rows[0]
        head = rows.pop(0)
        rank += 1
        rows = [
            [v - (r[pivot_col] / head[pivot_col]) * h for v, h in zip(r, head)]
            for r in rows
        ]
        pivot_col += 1
    return rank


def _poly_divide(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials given as coefficient lists."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        lead = den[-1]
        if coeff % lead:
            raise ValueError("polynomial division is not exact")
        q = coeff // lead
        out[k] = q
        for i, d in enumerate(den):
            num[k + i] -= q * d
    if any(num):
        raise ValueError("polynomial division left a remainder")
    return out
