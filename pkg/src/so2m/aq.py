"""Theta-stable parabolic subalgebras up to equivalence, and their Hodge data.

A parabolic containing the fixed Borel of k is determined by an integer
defining vector dominant for the compact positive roots; the equivalence
class is the pair of root sets (u in p_-, u in p_+).  Enumeration runs over
a box of dominant vectors with a saturation re-check one step wider.

The closed-form table grammar lives here too: every equivalence class must
match exactly one row, whose polynomial is built from the printed exponent
patterns (point / projective-space / quadric strings shifted by the two
nilradical counts), independently of the levi-factor classification used by
`hodge_polynomial`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .exact import HodgePolynomial, Q
from .liealg import build_context
from .roots import Root, T0, build_root_system

Key = tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]

POINT = "point"
PROJECTIVE = "projective"
QUADRIC_ODD = "quadric_odd"
QUADRIC_EVEN = "quadric_even"
P1XP1 = "p1xp1"


@dataclass(frozen=True)
class ThetaStableParabolic:
    m: int
    defining_vector: tuple[int, ...]
    u_p_plus: frozenset[Root]
    u_p_minus: frozenset[Root]  # negative noncompact roots inside u
    levi_roots: frozenset[Root]
    s_dim: int

    @property
    def r_plus(self) -> int:
        return len(self.u_p_plus)

    @property
    def r_minus(self) -> int:
        return len(self.u_p_minus)

    @property
    def r_total(self) -> int:
        return self.r_plus + self.r_minus

    @property
    def key(self) -> Key:
        minus = tuple(sorted(r.coords for r in self.u_p_minus))
        plus = tuple(sorted(r.coords for r in self.u_p_plus))
        return (minus, plus)

    @property
    def is_trivial(self) -> bool:
        return not self.u_p_plus and not self.u_p_minus

    def levi_noncompact_positives(self) -> list[Root]:
        return sorted(r for r in self.levi_roots if not r.is_compact and _is_positive(r))


def _is_positive(r: Root) -> bool:
    for c in r.coords:
        if c != 0:
            return c > 0
    return False


def parabolic_from_vector(m: int, h: tuple[int, ...]) -> ThetaStableParabolic:
    """Class data of the parabolic defined by an integer vector."""
    rs = build_root_system(m, T0)
    plus = frozenset(r for r in rs.noncompact_positives if r.pairing(h) > 0)
    minus = frozenset(-r for r in rs.noncompact_positives if r.pairing(h) < 0)
    levi = frozenset(r for r in rs.roots if r.pairing(h) == 0)
    s_dim = sum(1 for r in rs.compact_positives if r.pairing(h) > 0)
    return ThetaStableParabolic(
        m=m,
        defining_vector=tuple(h),
        u_p_plus=plus,
        u_p_minus=minus,
        levi_roots=levi,
        s_dim=s_dim,
    )


def dominant_vectors(m: int, bound: int):
    """Integer vectors in the dominant chamber of the compact Weyl group.

    The first coordinate is unconstrained; for family B the tail is
    nonincreasing and nonnegative, for family D the tail is nonincreasing
    with the last entry allowed to be negative up to its predecessor.
    """
    ctx = build_context(m)
    l = ctx.l
    first = range(-bound, bound + 1)
    if l == 2 and ctx.family == "D":
        for h1 in first:
            for h2 in range(-bound, bound + 1):
                yield (h1, h2)
        return
    tails = itertools.combinations_with_replacement(range(bound, -1, -1), l - 1)
    for tail in tails:
        variants = [tail]
        if ctx.family == "D" and tail[-1] != 0:
            variants.append(tail[:-1] + (-tail[-1],))
        for var in variants:
            for h1 in first:
                yield (h1,) + var


class SaturationError(ValueError):
    pass


def enumerate_parabolics(
    m: int, bound: int | None = None, check_saturation: bool = True
) -> list[ThetaStableParabolic]:
    """All equivalence classes, one representative each, saturation-checked."""
    l = build_context(m).l
    if bound is None:
        bound = l + 1
    if bound < l + 1:
        raise ValueError(f"bound must be at least l+1 = {l + 1}")
    classes = _classes_at_bound(m, bound)
    if check_saturation:
        wider = _classes_at_bound(m, bound + 1)
        if set(classes) != set(wider):
            raise SaturationError(
                f"enumeration not saturated at bound {bound} for m={m}"
            )
    return [classes[k] for k in sorted(classes)]


def _classes_at_bound(m: int, bound: int) -> dict[Key, ThetaStableParabolic]:
    classes: dict[Key, ThetaStableParabolic] = {}
    for h in sorted(dominant_vectors(m, bound)):
        q = parabolic_from_vector(m, h)
        classes.setdefault(q.key, q)
    return classes


def redominate(m: int, h: tuple[int, ...]) -> tuple[int, ...]:
    """Representative of h in the dominant chamber of the compact Weyl group."""
    ctx = build_context(m)
    tail = list(h[1:])
    if ctx.family == "B":
        return (h[0],) + tuple(sorted((abs(v) for v in tail), reverse=True))
    if ctx.l == 2:
        return tuple(h)
    negatives = sum(1 for v in tail if v < 0)
    mags = sorted((abs(v) for v in tail), reverse=True)
    if negatives % 2 == 1:
        mags[-1] = -mags[-1]
    return (h[0],) + tuple(mags)


# -- levi factors and Hodge polynomials -------------------------------------


@dataclass(frozen=True)
class LeviFactor:
    kind: str
    dim: int
    roots: tuple[Root, ...]


def levi_hermitian_factor(q: ThetaStableParabolic) -> LeviFactor:
    """Isomorphism type of the noncompact part of the levi.

    Only one noncompact component can occur (every pair of noncompact roots
    shares the first coordinate), except for the split pair of orthogonal
    lines detected as p1xp1.
    """
    nc = q.levi_noncompact_positives()
    if not nc:
        return LeviFactor(POINT, 0, ())
    k = len(nc)
    if any(r.norm_squared() == 1 for r in nc):
        return LeviFactor(QUADRIC_ODD, k, tuple(nc))
    paired = _has_mirror_pair(nc)
    if paired and k == 2:
        return LeviFactor(P1XP1, 2, tuple(nc))
    if paired:
        return LeviFactor(QUADRIC_EVEN, k, tuple(nc))
    return LeviFactor(PROJECTIVE, k, tuple(nc))


def _has_mirror_pair(roots: list[Root]) -> bool:
    seen = {r.coords for r in roots}
    for r in roots:
        mirror = (r.coords[0],) + tuple(-c for c in r.coords[1:])
        if mirror != r.coords and mirror in seen:
            return True
    return False


def compact_dual_hodge(factor: LeviFactor) -> HodgePolynomial:
    """Hodge polynomial of the compact dual attached to a levi factor."""
    if factor.kind == POINT:
        return HodgePolynomial.one()
    if factor.kind in (PROJECTIVE, QUADRIC_ODD):
        return HodgePolynomial.xt_string(factor.dim + 1)
    if factor.kind == QUADRIC_EVEN:
        if factor.dim % 2 != 0:
            raise ValueError("even quadric with odd dimension")
        return HodgePolynomial.xt_string(factor.dim + 1) + HodgePolynomial.monomial(
            factor.dim // 2, factor.dim // 2
        )
    if factor.kind == P1XP1:
        line = HodgePolynomial.xt_string(2)
        return line * line
    raise ValueError(f"unknown levi factor kind {factor.kind!r}")


def hodge_polynomial(q: ThetaStableParabolic) -> HodgePolynomial:
    """x^(R+) t^(R-) times the compact-dual polynomial of the levi."""
    base = compact_dual_hodge(levi_hermitian_factor(q))
    return base.shift(q.r_plus, q.r_minus)


def levi_simple_data(q: ThetaStableParabolic) -> tuple[list[Root], list[Root]]:
    """Simple roots of the levi and of its compact part (oracle input)."""
    from .roots import simple_roots_of

    positives = frozenset(r for r in q.levi_roots if _is_positive(r))
    levi_simples = simple_roots_of(positives)
    compact_positives = frozenset(r for r in positives if r.is_compact)
    compact_simples = simple_roots_of(compact_positives)
    return levi_simples, compact_simples


# -- the closed-form table grammar ------------------------------------------


@dataclass(frozen=True)
class ColumnRule:
    """Allowed parameters per involution family, as printed in the tables."""

    sigma_params: frozenset[int] = frozenset()
    sigma_j_params: frozenset[int] = frozenset()
    tau_params: frozenset[int] = frozenset()
    tau_prime_params: frozenset[int] = frozenset()
    mu_params: frozenset[int] = frozenset()
    sigma_0: bool = False
    sigma_0_prime: bool = False
    rank2_names: frozenset[str] = frozenset()


@dataclass(frozen=True)
class TableRow:
    family: str
    l: int
    block: int
    subrow: int
    label: str
    down: frozenset[Root]
    up: frozenset[Root]
    levi_kind: str
    levi_dim: int
    polynomial: HodgePolynomial
    column: ColumnRule

    @property
    def key(self) -> Key:
        minus = tuple(sorted((-r).coords for r in self.down))
        plus = tuple(sorted(r.coords for r in self.up))
        return (minus, plus)


def _root(l: int, entries: dict[int, int]) -> Root:
    coords = [0] * l
    for j, v in entries.items():
        coords[j - 1] = v
    return Root(tuple(coords))


def _kind_for_dim(base_kind: str, dim: int) -> tuple[str, int]:
    if dim == 0:
        return POINT, 0
    return base_kind, dim


def generate_table_rows(m: int) -> list[TableRow]:
    """The rows of the relevant family table at this rank, in printed order."""
    ctx = build_context(m)
    if ctx.family == "B":
        return _rows_family_b(ctx.l)
    if ctx.l == 2:
        return _rows_rank_two()
    return _rows_family_d(ctx.l)


def _rows_family_b(l: int) -> list[TableRow]:
    # noncompact positive chain: c_i = e1 - e_{i+1} (i < l), c_l = e1, then z_j = e1 + e_j
    c = {i: _root(l, {1: 1, i + 1: -1}) for i in range(1, l)}
    c[l] = _root(l, {1: 1})
    z = {j: _root(l, {1: 1, j: 1}) for j in range(2, l + 1)}
    chain = [c[i] for i in range(1, l + 1)] + [z[j] for j in range(l, 1, -1)]

    def le_set(root: Root) -> frozenset[Root]:
        idx = chain.index(root)
        return frozenset(chain[: idx + 1])

    def ge_set(root: Root) -> frozenset[Root]:
        idx = chain.index(root)
        return frozenset(chain[idx:])

    all_sigma = ColumnRule(sigma_params=frozenset(range(2, l + 1)))
    nothing = ColumnRule()
    rows: list[TableRow] = []

    def add(block, subrow, label, down, up, kind, dim, poly, col):
        kind, dim = _kind_for_dim(kind, dim)
        rows.append(
            TableRow("B", l, block, subrow, label, down, up, kind, dim, poly, col)
        )

    empty: frozenset[Root] = frozenset()
    for i in range(1, l + 1):
        add(
            1,
            i,
            f"up>=phi_1..phi_{i}" if i > 1 else "up>=phi_1",
            empty,
            ge_set(c[i]),
            PROJECTIVE,
            i - 1,
            HodgePolynomial.xt_string(i, 2 * l - i, 0),
            all_sigma,
        )
    add(1, l + 1, "trivial", empty, empty, QUADRIC_ODD, 2 * l - 1,
        HodgePolynomial.xt_string(2 * l), nothing)
    for i in range(1, l):
        down = le_set(c[i])
        for j in range(i + 1, l + 1):
            add(2, (i, j), f"down<=c{i}, up>=c{j}", down, ge_set(c[j]),
                PROJECTIVE, j - i - 1,
                HodgePolynomial.xt_string(j - i, 2 * l - j, i), all_sigma)
        band = ColumnRule(
            sigma_params=frozenset(
                p for p in range(2, l + 1)
                if Q(p) < Q(i + 2, 2) or Q(p) > Q(2 * l - i + 1, 2)
            )
        )
        add(2, (i, "z"), f"down<=c{i}, up>=z{i+1}", down, ge_set(z[i + 1]),
            QUADRIC_ODD, 2 * (l - i) - 1,
            HodgePolynomial.xt_string(2 * l - 2 * i, i, i), band)
    down3 = le_set(c[l])
    for j in range(l, 1, -1):
        add(3, j, f"down<=c{l}, up>=z{j}", down3, ge_set(z[j]),
            PROJECTIVE, l - j,
            HodgePolynomial.xt_string(l - j + 1, j - 1, l), all_sigma)
    add(3, 1, f"down<=c{l}, up empty", down3, empty, PROJECTIVE, l - 1,
        HodgePolynomial.xt_string(l, 0, l), all_sigma)
    for i in range(l, 2, -1):
        down = le_set(z[i])
        for j in range(i - 1, 1, -1):
            add(4, (i, j), f"down<=z{i}, up>=z{j}", down, ge_set(z[j]),
                PROJECTIVE, i - j - 1,
                HodgePolynomial.xt_string(i - j, j - 1, 2 * l - i + 1), all_sigma)
        add(4, (i, "e"), f"down<=z{i}, up empty", down, empty,
            PROJECTIVE, i - 2,
            HodgePolynomial.xt_string(i - 1, 0, 2 * l - i + 1), all_sigma)
    add(5, 1, "down all, up empty", le_set(z[2]), empty, POINT, 0,
        HodgePolynomial.monomial(0, 2 * l - 1), all_sigma)
    return rows


def _rows_family_d(l: int) -> list[TableRow]:
    c = {i: _root(l, {1: 1, i + 1: -1}) for i in range(1, l - 1)}
    xi = {1: _root(l, {1: 1, l: -1}), 2: _root(l, {1: 1, l: 1})}
    w = {j: _root(l, {1: 1, j: 1}) for j in range(2, l)}

    c_list = [c[i] for i in range(1, l - 1)]
    w_list = [w[j] for j in range(l - 1, 1, -1)]

    def le_c(i: int) -> frozenset[Root]:
        return frozenset(c_list[:i])

    def le_xi(r: int) -> frozenset[Root]:
        return frozenset(c_list) | {xi[r]}

    le_both_xi = frozenset(c_list) | {xi[1], xi[2]}

    def le_w(j: int) -> frozenset[Root]:
        return le_both_xi | frozenset(w[k] for k in range(l - 1, j - 1, -1))

    def ge_c(i: int) -> frozenset[Root]:
        return frozenset(c_list[i - 1 :]) | {xi[1], xi[2]} | frozenset(w_list)

    def ge_xi(r: int) -> frozenset[Root]:
        return frozenset({xi[r]}) | frozenset(w_list)

    ge_union = frozenset({xi[1], xi[2]}) | frozenset(w_list)

    def ge_w(j: int) -> frozenset[Root]:
        return frozenset(w[k] for k in range(2, j + 1))

    sig_all = frozenset(range(2, l - 1))
    sj_all = frozenset({l - 1, l})
    tp_all = frozenset(range(1, l - 1))

    def rule(sigma=frozenset(), sigma_j=frozenset(), tau=frozenset(),
             tau_prime=frozenset(), mu=frozenset(), s0=False, s0p=False):
        return ColumnRule(
            sigma_params=frozenset(sigma),
            sigma_j_params=frozenset(sigma_j),
            tau_params=frozenset(tau),
            tau_prime_params=frozenset(tau_prime),
            mu_params=frozenset(mu),
            sigma_0=s0,
            sigma_0_prime=s0p,
        )

    def tau_mu(cond: bool) -> frozenset[int]:
        return tp_all if cond else frozenset()

    rows: list[TableRow] = []
    empty: frozenset[Root] = frozenset()

    def add(block, subrow, label, down, up, kind, dim, poly, col):
        kind, dim = _kind_for_dim(kind, dim)
        rows.append(
            TableRow("D", l, block, subrow, label, down, up, kind, dim, poly, col)
        )

    even_quadric_tail = HodgePolynomial.monomial(l - 1, l - 1)

    # block 1: empty down-set
    for i in range(1, l - 1):
        add(1, ("c", i), f"up>=c{i}", empty, ge_c(i), PROJECTIVE, i - 1,
            HodgePolynomial.xt_string(i, 2 * l - 1 - i, 0),
            rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
                 tau=tau_mu(i % 2 == 0 and i >= 2), mu=tau_mu(i % 2 == 0 and i >= 2),
                 s0=(i == 1)))
    for r in (1, 2):
        add(1, ("xi", r), f"up>=xi{r}", empty, ge_xi(r), PROJECTIVE, l - 1,
            HodgePolynomial.xt_string(l, l - 1, 0),
            rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
                 tau=tau_mu(l % 2 == 0), mu=tau_mu(l % 2 == 0), s0=True))
    add(1, ("xi", "union"), "up>=xi1 or xi2", empty, ge_union, PROJECTIVE, l - 2,
        HodgePolynomial.xt_string(l - 1, l, 0),
        rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
             tau=tau_mu(l % 2 == 1), mu=tau_mu(l % 2 == 1), s0=True,
             s0p=(l % 2 == 1)))
    add(1, ("triv",), "trivial", empty, empty, QUADRIC_EVEN, 2 * l - 2,
        HodgePolynomial.xt_string(2 * l - 1) + even_quadric_tail, rule())

    # block 2: down <= c_i
    for i in range(1, l - 2):
        down = le_c(i)
        for j in range(i + 1, l - 1):
            add(2, (i, "c", j), f"down<=c{i}, up>=c{j}", down, ge_c(j),
                PROJECTIVE, j - i - 1,
                HodgePolynomial.xt_string(j - i, 2 * l - 1 - j, i),
                rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
                     tau=tau_mu((j - i) % 2 == 0), mu=tau_mu((j - i) % 2 == 0)))
        for r in (1, 2):
            add(2, (i, "xi", r), f"down<=c{i}, up>=xi{r}", down, ge_xi(r),
                PROJECTIVE, l - 1 - i,
                HodgePolynomial.xt_string(l - i, l - 1, i),
                rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
                     tau=tau_mu((l - i) % 2 == 0), mu=tau_mu((l - i) % 2 == 0)))
        add(2, (i, "xi", "union"), f"down<=c{i}, up>=xi1 or xi2", down, ge_union,
            PROJECTIVE, l - 2 - i,
            HodgePolynomial.xt_string(l - 1 - i, l, i),
            rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
                 tau=tau_mu((l - i) % 2 == 1), mu=tau_mu((l - i) % 2 == 1)))
        add(2, (i, "w"), f"down<=c{i}, up>=w{i+1}", down, ge_w(i + 1),
            QUADRIC_EVEN, 2 * (l - i) - 2,
            HodgePolynomial.xt_string(2 * l - 2 * i - 1, i, i) + even_quadric_tail,
            rule(
                sigma=frozenset(
                    p for p in sig_all
                    if Q(p) < Q(i + 2, 2) or Q(p) > Q(2 * l - i, 2)
                ),
                tau_prime=frozenset(
                    p for p in tp_all
                    if Q(p) < Q(i + 1, 2) or Q(p) > Q(2 * l - i - 1, 2)
                ),
            ))

    # block 3: down <= c_{l-2}
    down3 = le_c(l - 2)
    add(3, ("union",), f"down<=c{l-2}, up>=xi1 or xi2", down3, ge_union,
        POINT, 0, HodgePolynomial.monomial(l, l - 2),
        rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all, s0=True))
    for r in (1, 2):
        add(3, ("xi", r), f"down<=c{l-2}, up>=xi{r}", down3, ge_xi(r),
            PROJECTIVE, 1, HodgePolynomial.xt_string(2, l - 1, l - 2),
            rule(sigma=sig_all, sigma_j=sj_all, tau=tp_all, tau_prime=tp_all,
                 mu=tp_all, s0=True, s0p=True))
    add(3, ("w",), f"down<=c{l-2}, up>=w{l-1}", down3, ge_w(l - 1),
        P1XP1, 2,
        HodgePolynomial.xt_string(3, l - 2, l - 2) + even_quadric_tail,
        rule(
            sigma=frozenset(
                p for p in sig_all
                if Q(p) not in (Q(l, 2), Q(l + 1, 2), Q(l + 2, 2))
            ),
            tau_prime=frozenset(
                p for p in tp_all
                if Q(p) not in (Q(l - 1, 2), Q(l, 2), Q(l + 1, 2))
            ),
        ))

    # block 4: down <= xi_r
    for r in (1, 2):
        down = le_xi(r)
        other = 2 if r == 1 else 1
        add(4, (r, "xi"), f"down<=xi{r}, up>=xi{other}", down, ge_xi(other),
            POINT, 0, HodgePolynomial.monomial(l - 1, l - 1),
            rule(
                sigma=frozenset(p for p in sig_all if Q(p) != Q(l + 1, 2)),
                tau_prime=frozenset(p for p in tp_all if Q(p) != Q(l, 2)),
            ))
        add(4, (r, "w", l - 1), f"down<=xi{r}, up>=w{l-1}", down, ge_w(l - 1),
            PROJECTIVE, 1, HodgePolynomial.xt_string(2, l - 2, l - 1),
            rule(sigma=sig_all, sigma_j=sj_all, tau=tp_all, tau_prime=tp_all,
                 mu=tp_all, s0=True, s0p=True))
        for j in range(l - 2, 1, -1):
            add(4, (r, "w", j), f"down<=xi{r}, up>=w{j}", down, ge_w(j),
                PROJECTIVE, l - j, HodgePolynomial.xt_string(l - j + 1, j - 1, l - 1),
                rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
                     tau=tau_mu((l - j) % 2 == 1), mu=tau_mu((l - j) % 2 == 1)))
        add(4, (r, "e"), f"down<=xi{r}, up empty", down, empty,
            PROJECTIVE, l - 1, HodgePolynomial.xt_string(l, 0, l - 1),
            rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
                 tau=tau_mu(l % 2 == 0), mu=tau_mu(l % 2 == 0), s0=True))

    # block 5: down <= xi_1 and xi_2
    add(5, ("w", l - 1), f"down<=xis, up>=w{l-1}", le_both_xi, ge_w(l - 1),
        POINT, 0, HodgePolynomial.monomial(l - 2, l),
        rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all, s0=True))
    for j in range(l - 2, 1, -1):
        add(5, ("w", j), f"down<=xis, up>=w{j}", le_both_xi, ge_w(j),
            PROJECTIVE, l - 1 - j, HodgePolynomial.xt_string(l - j, j - 1, l),
            rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
                 tau=tau_mu((l - j) % 2 == 0), mu=tau_mu((l - j) % 2 == 0)))
    add(5, ("e",), "down<=xis, up empty", le_both_xi, empty,
        PROJECTIVE, l - 2, HodgePolynomial.xt_string(l - 1, 0, l),
        rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
             tau=tau_mu(l % 2 == 1), mu=tau_mu(l % 2 == 1), s0=True,
             s0p=(l % 2 == 1)))

    # blocks 6 and 7: down <= w_i for i = l-1 down to 3
    for i in range(l - 1, 2, -1):
        block = 6 if i == l - 1 else 7
        down = le_w(i)
        add(block, (i, "w", i - 1), f"down<=w{i}, up>=w{i-1}", down, ge_w(i - 1),
            POINT, 0, HodgePolynomial.monomial(i - 2, 2 * l - i),
            rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all))
        for j in range(i - 2, 1, -1):
            add(block, (i, "w", j), f"down<=w{i}, up>=w{j}", down, ge_w(j),
                PROJECTIVE, i - j - 1,
                HodgePolynomial.xt_string(i - j, j - 1, 2 * l - i),
                rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
                     tau=tau_mu((i - j) % 2 == 0), mu=tau_mu((i - j) % 2 == 0)))
        add(block, (i, "e"), f"down<=w{i}, up empty", down, empty,
            PROJECTIVE, i - 2, HodgePolynomial.xt_string(i - 1, 0, 2 * l - i),
            rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all,
                 tau=tau_mu(i % 2 == 1), mu=tau_mu(i % 2 == 1)))

    # block 8: everything below delta
    add(8, (1,), "down all, up empty", le_w(2), empty, POINT, 0,
        HodgePolynomial.monomial(0, 2 * l - 2),
        rule(sigma=sig_all, sigma_j=sj_all, tau_prime=tp_all, s0=True))
    return rows


def _rows_rank_two() -> list[TableRow]:
    l = 2
    phi1 = _root(2, {1: 1, 2: -1})
    phi2 = _root(2, {1: 1, 2: 1})
    names = {1: phi1, 2: phi2}
    empty: frozenset[Root] = frozenset()
    rows: list[TableRow] = []

    def add(subrow, label, down, up, kind, dim, poly, allowed):
        kind, dim = _kind_for_dim(kind, dim)
        rows.append(
            TableRow(
                "D", l, 1, subrow, label, down, up, kind, dim, poly,
                ColumnRule(rank2_names=frozenset(allowed)),
            )
        )

    add(("triv",), "trivial", empty, empty, P1XP1, 2,
        HodgePolynomial.xt_string(3) + HodgePolynomial.monomial(1, 1), set())
    for i in (1, 2):
        add(("up", i), f"up={{phi_{i}}}", empty, frozenset({names[i]}),
            PROJECTIVE, 1, HodgePolynomial.xt_string(2, 1, 0),
            {"sigma_1", "tau'_1", "tau_1", "mu_1"})
    add(("up", "both"), "up={phi_1,phi_2}", empty, frozenset({phi1, phi2}),
        POINT, 0, HodgePolynomial.monomial(2, 0), {"sigma_1", "eta_1", "eta_2"})
    for i in (1, 2):
        add(("down", i), f"down={{phi_{i}}}", frozenset({names[i]}), empty,
            PROJECTIVE, 1, HodgePolynomial.xt_string(2, 0, 1),
            {"sigma_1", "tau'_1", "tau_1", "mu_1"})
        j = 2 if i == 1 else 1
        add(("mixed", i), f"down={{phi_{i}}}, up={{phi_{j}}}",
            frozenset({names[i]}), frozenset({names[j]}),
            POINT, 0, HodgePolynomial.monomial(1, 1), {"eta_1", "eta_2"})
    add(("down", "both"), "down={phi_1,phi_2}", frozenset({phi1, phi2}), empty,
        POINT, 0, HodgePolynomial.monomial(0, 2), {"sigma_1", "eta_1", "eta_2"})
    return rows


class PatternMatchError(ValueError):
    pass


@lru_cache(maxsize=None)
def _row_index(m: int) -> dict[Key, TableRow]:
    rows = generate_table_rows(m)
    index: dict[Key, TableRow] = {}
    for row in rows:
        if row.key in index:
            raise PatternMatchError(f"duplicate table row key at m={m}: {row.label}")
        index[row.key] = row
    return index


def table_row_pattern(q: ThetaStableParabolic) -> TableRow:
    """The unique closed-form table row matching this equivalence class."""
    index = _row_index(q.m)
    row = index.get(q.key)
    if row is None:
        raise PatternMatchError(
            f"class {q.key} matches no table row at m={q.m}"
        )
    return row
