"""Named verification suites, shared by the command line and the test suite.

Each suite returns a list of CheckResult; a suite passes when every check
does.  The checks are exact (no tolerances anywhere).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .aq import (
    compact_dual_hodge,
    enumerate_parabolics,
    generate_table_rows,
    hodge_polynomial,
    levi_hermitian_factor,
    levi_simple_data,
    parabolic_from_vector,
    redominate,
    table_row_pattern,
)
from .chevalley import build_chevalley
from .cycles import (
    automorphic_candidates,
    column_mismatches,
    cycle_record,
    dimension_table,
    expected_dimensions,
    no_aq_component,
)
from .exact import GaussianRational
from .involutions import (
    K0Diagram,
    almost_double_parity,
    ad_matrix_in_lattice_basis,
    catalog,
    cayley_exp,
    extendability,
    fixed_subalgebra,
    k0_diagram_of,
    vogan_data,
    verify_involution,
)
from .liealg import (
    ExactMatrix,
    bracket,
    build_context,
    f_isomorphism,
    g0_standard_basis,
    theta,
)
from .orientation import (
    det_ad_on_p0,
    k_sigma_components,
    orientation_preserving,
    theorem_scope,
)
from .realform import build_real_basis, check_structure_constants_rational, verify_compact_form
from .roots import Root, T0, T0_PRIME, coset_poincare

SEED = 20240801


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _skew_random(ctx, rng) -> ExactMatrix:
    entries = {}
    for _ in range(4):
        i = rng.randrange(1, ctx.n + 1)
        j = rng.randrange(1, ctx.n + 1)
        if i == j:
            continue
        v = GaussianRational(rng.randrange(-3, 4), rng.randrange(-3, 4))
        entries[(i, j)] = entries.get((i, j), GaussianRational(0)) + v
        entries[(j, i)] = entries.get((j, i), GaussianRational(0)) - v
    return ExactMatrix(ctx.n, entries)


def suite_liealg(m: int) -> list[CheckResult]:
    ctx = build_context(m)
    out = []
    out.append(
        CheckResult(
            "dimension formulas",
            ctx.dim_g0 == (m + 1) * (m + 2) // 2
            and ctx.dim_g0 == ctx.dim_k0 + ctx.dim_p0
            and ctx.dim_p0 == 2 * m,
        )
    )
    basis = g0_standard_basis(ctx)
    ok_theta = all((theta(ctx, theta(ctx, b)) - b).is_zero() for b in basis)
    out.append(CheckResult("theta squared is the identity", ok_theta))
    rng = random.Random(SEED + m)
    ok_theta_br = True
    for _ in range(50):
        x, y = rng.choice(basis), rng.choice(basis)
        if not (theta(ctx, bracket(x, y)) - bracket(theta(ctx, x), theta(ctx, y))).is_zero():
            ok_theta_br = False
            break
    out.append(CheckResult("theta preserves brackets", ok_theta_br))
    ok_f = True
    for _ in range(25):
        z, w = _skew_random(ctx, rng), _skew_random(ctx, rng)
        lhs = f_isomorphism(ctx, bracket(z, w))
        rhs = bracket(f_isomorphism(ctx, z), f_isomorphism(ctx, w))
        if not (lhs - rhs).is_zero():
            ok_f = False
            break
    out.append(CheckResult("block isomorphism preserves brackets", ok_f))
    ok_jacobi = True
    if m <= 5:
        triples = [
            (x, y, z)
            for i, x in enumerate(basis)
            for j, y in enumerate(basis[i:], start=i)
            for z in basis[j:]
        ]
    else:
        triples = [
            (rng.choice(basis), rng.choice(basis), rng.choice(basis))
            for _ in range(500)
        ]
    for x, y, z in triples:
        s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        if not s.is_zero():
            ok_jacobi = False
            break
    out.append(CheckResult("Jacobi identity", ok_jacobi))
    return out


def suite_chevalley(m: int) -> list[CheckResult]:
    out = []
    variants = [T0]
    ctx = build_context(m)
    if ctx.family == "D" and ctx.l >= 3:
        variants.append(T0_PRIME)
    for variant in variants:
        try:
            build_chevalley(m, variant)
            out.append(CheckResult(f"Chevalley relations ({variant})", True))
        except Exception as exc:  # construction fails loudly naming the relation
            out.append(CheckResult(f"Chevalley relations ({variant})", False, str(exc)))
    labels = ["B"] + (["B'"] if ctx.family == "D" and ctx.l >= 3 else [])
    for label in labels:
        rep = check_structure_constants_rational(m, label)
        out.append(
            CheckResult(f"rational structure constants ({label})", rep.all_rational, rep.worst_entry)
        )
    cf = verify_compact_form(m)
    out.append(CheckResult("compact form bracket-closed", cf.bracket_closed))
    out.append(CheckResult("compact form trace negative definite", cf.trace_form_negative_definite))
    return out


def suite_involutions(m: int) -> list[CheckResult]:
    out = []
    ctx = build_context(m)
    for inv in catalog(m):
        rep = verify_involution(inv)
        out.append(CheckResult(f"{inv.name} axioms", rep.ok, "; ".join(rep.failures)))
        fs = fixed_subalgebra(inv)
        fs_t = fixed_subalgebra(inv.composed_with_theta())
        out.append(
            CheckResult(
                f"{inv.name} fixed p0 dims sum to 2m",
                fs.p0_fixed_dim + fs_t.p0_fixed_dim == 2 * m,
            )
        )
        vd = vogan_data(inv)
        _, parity = almost_double_parity(vd)
        out.append(CheckResult(f"{inv.name} diagram parity even", parity == 0))
        vd_t = vogan_data(inv.composed_with_theta())
        fixed_blacks = {
            v for v, c in vd.colors.items() if c == "black" and vd.action[v] == v
        }
        out.append(
            CheckResult(
                f"{inv.name} theta twin flips exactly the fixed black circles",
                vd.action == vd_t.action
                and set(vd.circled()) ^ set(vd_t.circled()) == fixed_blacks,
            )
        )
        if m >= 3:
            out.append(
                CheckResult(f"{inv.name} k0 diagram extendable", extendability(k0_diagram_of(inv)))
            )
        basis = build_real_basis(m, "B'" if inv.variant == T0_PRIME else "B")
        ad = ad_matrix_in_lattice_basis(inv, basis)
        out.append(
            CheckResult(
                f"{inv.name} Ad matrix rational in {ad.basis_label}",
                ad.all_rational,
                "integral" if ad.all_integral else "nonintegral",
            )
        )
    if ctx.family == "D" and ctx.l >= 3:
        l = ctx.l
        triv = tuple((j, j) for j in range(2, l + 1))
        bad_l = K0Diagram(m=m, automorphism=triv, circled=frozenset({l}), z_action=-1)
        bad_l1 = K0Diagram(m=m, automorphism=triv, circled=frozenset({l - 1}), z_action=-1)
        out.append(CheckResult("tau_l diagram does not extend", not extendability(bad_l)))
        out.append(CheckResult("tau_{l-1} diagram does not extend", not extendability(bad_l1)))
    out.extend(_cayley_checks(m))
    return out


def _cayley_checks(m: int) -> list[CheckResult]:
    ctx = build_context(m)
    l, n = ctx.l, ctx.n
    cb = build_chevalley(m, T0)
    out = []
    if ctx.family == "B":
        gamma = Root(tuple([1] + [0] * (l - 1)))
        e = cayley_exp(cb.x_vector(gamma), 2)
        expected = ExactMatrix.identity(n) + ExactMatrix(
            n,
            {(1, 1): GaussianRational(-2), (2 * l + 1, 2 * l + 1): GaussianRational(-2)},
        )
        out.append(CheckResult("half-turn exponential identity", (e - expected).is_zero()))
    elif ctx.l >= 3:
        g1 = Root(tuple([1] + [0] * (l - 2) + [-1]))
        g2 = Root(tuple([1] + [0] * (l - 2) + [1]))
        e = cayley_exp(cb.x_vector(g1) + cb.x_vector(g2), 2)
        expected = ExactMatrix.identity(n) + ExactMatrix(
            n, {(2, 2): GaussianRational(-2), (2 * l, 2 * l): GaussianRational(-2)}
        )
        out.append(CheckResult("half-turn exponential identity", (e - expected).is_zero()))
    return out


def suite_orientation(m: int) -> list[CheckResult]:
    out = []
    for inv in catalog(m):
        preserving = orientation_preserving(inv)
        expected = not (m % 2 == 1 and inv.kind == "tau")
        out.append(
            CheckResult(
                f"{inv.name} orientation {'preserving' if expected else 'reversing'}",
                preserving == expected,
            )
        )
        twin = orientation_preserving(inv.composed_with_theta())
        out.append(CheckResult(f"{inv.name} agrees with theta twin", twin == preserving))
        reps, shortcut = k_sigma_components(inv)
        if not shortcut:
            dets = [det_ad_on_p0(inv, rep) for rep in reps]
            out.append(
                CheckResult(
                    f"{inv.name} component determinants are signs",
                    all(d in (1, -1) for d in dets),
                )
            )
    return out


def suite_aq(m: int, bound: int | None = None) -> list[CheckResult]:
    out = []
    ctx = build_context(m)
    try:
        classes = enumerate_parabolics(m, bound)
        out.append(CheckResult("enumeration saturated", True))
    except Exception as exc:
        return [CheckResult("enumeration saturated", False, str(exc))]
    rows = generate_table_rows(m)
    out.append(
        CheckResult(
            "class count matches table grammar",
            len(classes) == len(rows),
            f"{len(classes)} classes vs {len(rows)} rows",
        )
    )
    matched = set()
    ok_match = True
    ok_poly = True
    ok_levi = True
    for q in classes:
        try:
            row = table_row_pattern(q)
        except Exception:
            ok_match = False
            break
        matched.add(row.key)
        if hodge_polynomial(q) != row.polynomial:
            ok_poly = False
        factor = levi_hermitian_factor(q)
        if (factor.kind, factor.dim) != (row.levi_kind, row.levi_dim):
            ok_levi = False
    out.append(CheckResult("every class matches exactly one row", ok_match and len(matched) == len(classes)))
    out.append(CheckResult("polynomials equal the closed forms", ok_poly))
    out.append(CheckResult("levi factors match the closed forms", ok_levi))
    if ctx.l <= 5:
        ok_oracle = True
        for q in classes:
            ls, cs = levi_simple_data(q)
            if coset_poincare(ls, cs) != compact_dual_hodge(levi_hermitian_factor(q)):
                ok_oracle = False
                break
        out.append(CheckResult("Weyl coset oracle agrees", ok_oracle))
    ok_sym = True
    ok_pal = True
    keys = {q.key for q in classes}
    for q in classes:
        neg = parabolic_from_vector(m, redominate(m, tuple(-v for v in q.defining_vector)))
        if neg.key not in keys or hodge_polynomial(neg) != hodge_polynomial(q).swap_variables():
            ok_sym = False
        dual = compact_dual_hodge(levi_hermitian_factor(q))
        coeffs = [c for _, c in dual.items()]
        if coeffs != coeffs[::-1]:
            ok_pal = False
        if 2 * q.r_total + sum(1 for r in q.levi_roots if not r.is_compact) != 2 * m:
            ok_sym = False
    out.append(CheckResult("conjugation symmetry", ok_sym))
    out.append(CheckResult("compact dual polynomials palindromic", ok_pal))
    return out


def suite_cycles(m: int) -> list[CheckResult]:
    out = []
    ok_dims = True
    for rec in dimension_table(m):
        if (rec.d_sigma, rec.d_sigma_theta) != expected_dimensions(rec.involution):
            ok_dims = False
        if rec.d_sigma + rec.d_sigma_theta != 2 * m:
            ok_dims = False
    out.append(CheckResult("dimension table closed forms", ok_dims))
    mismatches = column_mismatches(m)
    out.append(
        CheckResult(
            "no-component column matches printed conditions",
            not mismatches,
            mismatches[0] if mismatches else "",
        )
    )
    trivial = parabolic_from_vector(m, tuple([0] * build_context(m).l))
    ok_trivial = all(
        not no_aq_component(cycle_record(inv), trivial) for inv in theorem_scope(m)
    )
    out.append(CheckResult("trivial class never excluded", ok_trivial))
    if m >= 3:
        expected_name = (
            f"sigma_{build_context(m).l}" if m % 2 == 1 else "tau'_1"
        )
        found = automorphic_candidates(m)
        ok_auto = (
            len(found) == 1
            and found[0][0].name == expected_name
            and sorted(r.coords for r in found[0][1].u_p_plus) == [tuple([1, 1] + [0] * (build_context(m).l - 2))]
            and sorted(r.coords for r in found[0][1].u_p_minus) == [tuple([-1, 1] + [0] * (build_context(m).l - 2))]
        )
        out.append(CheckResult("automorphic witness recovered", ok_auto))
    return out


SUITES = {
    "liealg": suite_liealg,
    "chevalley": suite_chevalley,
    "involutions": suite_involutions,
    "orientation": suite_orientation,
    "aq": suite_aq,
    "cycles": suite_cycles,
}


def run_suite(name: str, m: int) -> list[CheckResult]:
    if name == "all":
        results = []
        for suite_name in SUITES:
            results.extend(run_suite(suite_name, m))
        return results
    return SUITES[name](m)
