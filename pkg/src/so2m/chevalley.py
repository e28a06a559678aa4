"""Explicit Chevalley bases for both Cartan variants.

Root vectors are the concrete matrices G_jk^+/-, D_j^+ (variant T0) and their
primed analogues (variant T0'), normalized so that [E_a, E_-a] = H*_a holds
on the nose.  The sign of E_-a differs between compact and noncompact roots;
those signs are load-bearing for theta(E_a) = p_a E_a and for all Vogan-data
extraction, so the constructor verifies every relation and refuses to return
a basis that fails any of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exact import GaussianRational, Q
from .liealg import ExactMatrix, LieContext, bracket, skew_pair, theta
from .roots import Root, RootSystem, T0, build_root_system

HALF = GaussianRational(Q(1, 2))
I_UNIT = GaussianRational(0, 1)


class ChevalleyError(ValueError):
    """Raised when a constructed basis violates a Chevalley relation."""


def _f(ctx: LieContext, z: ExactMatrix) -> ExactMatrix:
    from .liealg import f_isomorphism

    return f_isomorphism(ctx, z)


def _combo(n: int, *terms: tuple[GaussianRational, ExactMatrix]) -> ExactMatrix:
    out = ExactMatrix.zero(n)
    for c, mat in terms:
        out = out + mat.scale(c)
    return out


def _root_vectors_t0(ctx: LieContext) -> dict[Root, ExactMatrix]:
    """Root vectors on the standard torus sum R H_j."""
    n, l = ctx.n, ctx.l
    one = GaussianRational(1)

    def F(j, k):
        return skew_pair(n, j, k)

    vectors: dict[Root, ExactMatrix] = {}
    for j in range(1, l + 1):
        for k in range(j + 1, l + 1):
            plus = _combo(
                n,
                (one, F(2 * j - 1, 2 * k - 1)),
                (one, F(2 * j, 2 * k)),
                (I_UNIT, F(2 * j - 1, 2 * k)),
                (-I_UNIT, F(2 * j, 2 * k - 1)),
            )
            minus = _combo(
                n,
                (-one, F(2 * j - 1, 2 * k - 1)),
                (one, F(2 * j, 2 * k)),
                (I_UNIT, F(2 * j - 1, 2 * k)),
                (I_UNIT, F(2 * j, 2 * k - 1)),
            )
            if j == 1:
                plus, minus = _f(ctx, plus), _f(ctx, minus)
            vectors[_coord_root(l, {j: 1, k: -1})] = plus
            vectors[_coord_root(l, {j: 1, k: 1})] = minus
    if ctx.family == "B":
        for j in range(1, l + 1):
            d = _combo(
                n,
                (-GaussianRational(1), F(2 * j - 1, 2 * l + 1)),
                (I_UNIT, F(2 * j, 2 * l + 1)),
            )
            if j == 1:
                d = _f(ctx, d)
            vectors[_coord_root(l, {j: 1})] = d
    return vectors


def _root_vectors_t0_prime(ctx: LieContext) -> dict[Root, ExactMatrix]:
    """Root vectors on the alternate torus R H_1 + sum R F_{1+j,l+j}."""
    n, l = ctx.n, ctx.l
    one = GaussianRational(1)

    def F(j, k):
        if j < k:
            return skew_pair(n, j, k)
        return -skew_pair(n, k, j)

    vectors: dict[Root, ExactMatrix] = {}
    for k in range(2, l + 1):
        plus = _combo(
            n,
            (one, F(1, l + k)),
            (one, F(2, 1 + k)),
            (I_UNIT, F(1, 1 + k)),
            (-I_UNIT, F(2, l + k)),
        )
        minus = _combo(
            n,
            (-one, F(1, l + k)),
            (one, F(2, 1 + k)),
            (I_UNIT, F(1, 1 + k)),
            (I_UNIT, F(2, l + k)),
        )
        vectors[_coord_root(l, {1: 1, k: -1})] = _f(ctx, plus)
        vectors[_coord_root(l, {1: 1, k: 1})] = _f(ctx, minus)
    for j in range(2, l + 1):
        for k in range(j + 1, l + 1):
            plus = _combo(
                n,
                (-one, F(1 + j, 1 + k)),
                (-one, F(l + j, l + k)),
                (I_UNIT, F(1 + j, l + k)),
                (I_UNIT, F(1 + k, l + j)),
            )
            minus = _combo(
                n,
                (-one, F(1 + j, 1 + k)),
                (one, F(l + j, l + k)),
                (-I_UNIT, F(1 + j, l + k)),
                (I_UNIT, F(1 + k, l + j)),
            )
            vectors[_coord_root(l, {j: 1, k: -1})] = plus
            vectors[_coord_root(l, {j: 1, k: 1})] = minus
    return vectors


def _coord_root(l: int, nonzero: dict[int, int]) -> Root:
    coords = [0] * l
    for j, v in nonzero.items():
        coords[j - 1] = v
    return Root(tuple(coords))


@dataclass
class ChevalleyBasis:
    """Root vectors E_a, coroots H*_a, and the real combinations X_a, Y_a."""

    rs: RootSystem
    E: dict[Root, ExactMatrix]
    structure_constants: dict[tuple[Root, Root], int] = field(default_factory=dict)

    @property
    def ctx(self) -> LieContext:
        return self.rs.ctx

    @property
    def variant(self) -> str:
        return self.rs.variant

    def hstar(self, r: Root) -> ExactMatrix:
        return self.rs.coroot_matrix(r)

    def x_vector(self, r: Root) -> ExactMatrix:
        """X_a = E_a - E_-a for positive a."""
        return self.E[r] - self.E[-r]

    def y_vector(self, r: Root) -> ExactMatrix:
        """Y_a = i(E_a + E_-a) for positive a."""
        return (self.E[r] + self.E[-r]).scale(I_UNIT)

    def theta_signature(self, r: Root) -> int:
        """+1 on compact root spaces, -1 on noncompact ones."""
        if not self.rs.is_root(r):
            raise ValueError(f"{r} is not a root")
        return 1 if r.is_compact else -1

    def structure_constant(self, a: Root, b: Root) -> int:
        """Integer N with [E_a, E_b] = N E_{a+b}; requires a+b to be a root."""
        if (a, b) not in self.structure_constants:
            raise ValueError(f"{a} + {b} is not a root")
        return self.structure_constants[(a, b)]

    def scalar_action(self, image: ExactMatrix) -> tuple[Root, GaussianRational]:
        """Find (b, c) with image = c E_b; raises if image is not a root vector."""
        for b, e in self.E.items():
            keys = set(e.entries)
            if keys != set(image.entries):
                continue
            (i0, j0) = next(iter(keys))
            c = image.get(i0, j0) / e.get(i0, j0)
            if (image - e.scale(c)).is_zero():
                return b, c
        raise ValueError("matrix is not a multiple of any root vector")


def _verify(cb: ChevalleyBasis) -> None:
    rs, ctx = cb.rs, cb.rs.ctx
    roots = rs.roots
    for j in range(1, ctx.l + 1):
        t = rs.cartan_generator(j)
        for r in roots:
            expected = cb.E[r].scale(rs.eval_on_generator(r, j))
            if not (bracket(t, cb.E[r]) - expected).is_zero():
                raise ChevalleyError(
                    f"[H, E_a] = a(H) E_a fails for generator {j}, root {r} "
                    f"({cb.variant}, m={ctx.m})"
                )
    for r in rs.positives:
        got = bracket(cb.E[r], cb.E[-r])
        if not (got - cb.hstar(r)).is_zero():
            raise ChevalleyError(
                f"[E_a, E_-a] = H*_a fails for root {r} ({cb.variant}, m={ctx.m})"
            )
    root_set = set(roots)
    for a in roots:
        ea = cb.E[a]
        sig = 1 if a.is_compact else -1
        if not (theta(ctx, ea) - ea.scale(GaussianRational(sig))).is_zero():
            raise ChevalleyError(
                f"theta(E_a) = p_a E_a fails for root {a} ({cb.variant}, m={ctx.m})"
            )
        for b in roots:
            s = a + b
            if all(c == 0 for c in s.coords):
                continue
            got = bracket(ea, cb.E[b])
            if s not in root_set:
                if not got.is_zero():
                    raise ChevalleyError(
                        f"[E_a, E_b] should vanish for {a}, {b} "
                        f"({cb.variant}, m={ctx.m})"
                    )
                continue
            n_const = _extract_integer_multiple(got, cb.E[s], a, b, cb)
            cb.structure_constants[(a, b)] = n_const
    for (a, b), n_const in cb.structure_constants.items():
        if cb.structure_constants[(-a, -b)] != -n_const:
            raise ChevalleyError(
                f"N_(a,b) = -N_(-a,-b) fails for {a}, {b} ({cb.variant}, m={ctx.m})"
            )


def _extract_integer_multiple(
    got: ExactMatrix, target: ExactMatrix, a: Root, b: Root, cb: ChevalleyBasis
) -> int:
    (i0, j0) = next(iter(target.entries))
    c = got.get(i0, j0) / target.get(i0, j0)
    if not (got - target.scale(c)).is_zero():
        raise ChevalleyError(
            f"[E_a, E_b] is not a multiple of E_(a+b) for {a}, {b} "
            f"({cb.variant}, m={cb.ctx.m})"
        )
    if not c.is_rational_int():
        raise ChevalleyError(
            f"N_(a,b) is not an integer for {a}, {b}: {c} "
            f"({cb.variant}, m={cb.ctx.m})"
        )
    return int(c.re)


@lru_cache(maxsize=None)
def build_chevalley(m: int, variant: str = T0) -> ChevalleyBasis:
    """Construct and fully verify the Chevalley basis for so(2,m)^C."""
    rs = build_root_system(m, variant)
    ctx = rs.ctx
    vectors = (
        _root_vectors_t0(ctx) if variant == T0 else _root_vectors_t0_prime(ctx)
    )
    e_map: dict[Root, ExactMatrix] = {}
    for r_pos, g_mat in vectors.items():
        noncompact = not r_pos.is_compact
        short = r_pos.norm_squared() == 1
        scale_pos = GaussianRational(1) if short else HALF
        e_map[r_pos] = g_mat.scale(scale_pos)
        sign = GaussianRational(1 if noncompact else -1)
        e_map[-r_pos] = g_mat.conjugate().scale(sign * scale_pos)
    cb = ChevalleyBasis(rs=rs, E=e_map)
    _verify(cb)
    return cb
