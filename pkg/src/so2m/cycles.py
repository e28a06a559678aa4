"""Cycle dimensions, the no-component decision, and the automorphic witnesses.

The decision procedure: a cycle pair couples to a representation class
through the degrees d(sigma) and d(sigma*theta).  For holomorphic
involutions the duals are pure Hodge classes, so only the two diagonal
coefficients matter; otherwise only the total-degree support does.  The
trivial class is never excluded (constant functions always contribute).
Checking both degrees makes the result independent of which of the two
Poincare-dual conventions is used, and reproduces every table column.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .aq import (
    ColumnRule,
    TableRow,
    ThetaStableParabolic,
    enumerate_parabolics,
    hodge_polynomial,
    table_row_pattern,
)
from .exact import HodgePolynomial
from .involutions import (
    ETA,
    HOLOMORPHIC,
    Involution,
    MU,
    SIGMA,
    SIGMA_0,
    SIGMA_0_PRIME,
    SIGMA_J,
    TAU,
    TAU_PRIME,
    fixed_subalgebra,
    holomorphy_class,
)
from .liealg import build_context
from .orientation import theorem_scope


@dataclass(frozen=True)
class CycleRecord:
    involution: Involution
    d_sigma: int
    d_sigma_theta: int
    holomorphy: str

    @property
    def name(self) -> str:
        return self.involution.name


@lru_cache(maxsize=None)
def cycle_record(inv: Involution) -> CycleRecord:
    d = fixed_subalgebra(inv).p0_fixed_dim
    d_theta = fixed_subalgebra(inv.composed_with_theta()).p0_fixed_dim
    if d + d_theta != 2 * inv.m:
        raise ValueError(f"{inv.name}: fixed p0 dimensions do not sum to 2m")
    return CycleRecord(
        involution=inv,
        d_sigma=d,
        d_sigma_theta=d_theta,
        holomorphy=holomorphy_class(inv),
    )


def dimension_table(m: int) -> list[CycleRecord]:
    """One record per theorem-scope involution (the dimension table)."""
    return [cycle_record(inv) for inv in theorem_scope(m)]


def expected_dimensions(inv: Involution) -> tuple[int, int]:
    """Closed forms for d(sigma), d(sigma*theta) per involution family."""
    m, l, p = inv.m, build_context(inv.m).l, inv.param
    if m == 2:
        if inv.kind == ETA:
            return 3, 1
        return 2, 2
    if inv.family == "B":
        if inv.kind == SIGMA:
            return 2 * (2 * p - 2), 2 * (2 * l - 2 * p + 1)
        if inv.kind == TAU:
            return m, m
        raise ValueError(inv.name)
    if inv.kind == SIGMA:
        return 2 * (2 * p - 2), 2 * (2 * l - 2 * p)
    if inv.kind == SIGMA_J:
        return 2 * (l - 1), 2 * (l - 1)
    if inv.kind == TAU_PRIME:
        return 2 * (2 * p - 1), 2 * (2 * l - 2 * p - 1)
    if inv.kind in (TAU, MU):
        return 2 * (l - 1), 2 * (l - 1)
    if inv.kind in (SIGMA_0, SIGMA_0_PRIME):
        return 4, 4
    raise ValueError(inv.name)


def no_aq_component(rec: CycleRecord, q: ThetaStableParabolic) -> bool:
    """Whether both cycle classes have zero projection on this summand."""
    if q.is_trivial:
        return False
    poly = hodge_polynomial(q)
    if rec.holomorphy == HOLOMORPHIC:
        return (
            poly.coeff(rec.d_sigma // 2, rec.d_sigma // 2) == 0
            and poly.coeff(rec.d_sigma_theta // 2, rec.d_sigma_theta // 2) == 0
        )
    support = poly.total_degree_support()
    return rec.d_sigma not in support and rec.d_sigma_theta not in support


def column_allows(rule: ColumnRule, inv: Involution) -> bool:
    """Membership in a printed no-component column."""
    if inv.m == 2:
        return inv.name in rule.rank2_names
    if inv.kind == SIGMA:
        return inv.param in rule.sigma_params
    if inv.kind == SIGMA_J:
        return inv.param in rule.sigma_j_params
    if inv.kind == TAU:
        return inv.param in rule.tau_params
    if inv.kind == TAU_PRIME:
        return inv.param in rule.tau_prime_params
    if inv.kind == MU:
        return inv.param in rule.mu_params
    if inv.kind == SIGMA_0:
        return rule.sigma_0
    if inv.kind == SIGMA_0_PRIME:
        return rule.sigma_0_prime
    raise ValueError(f"unexpected involution kind {inv.kind!r}")


@dataclass
class ColumnEntry:
    row: TableRow
    parabolic: ThetaStableParabolic
    polynomial: HodgePolynomial
    no_component: list[str]


def no_component_column(m: int) -> list[ColumnEntry]:
    """The final table column: per class, which involutions it excludes."""
    records = dimension_table(m)
    entries = []
    for q in enumerate_parabolics(m, check_saturation=False):
        row = table_row_pattern(q)
        names = sorted(rec.name for rec in records if no_aq_component(rec, q))
        entries.append(
            ColumnEntry(
                row=row,
                parabolic=q,
                polynomial=hodge_polynomial(q),
                no_component=names,
            )
        )
    order = _grammar_order(m)
    entries.sort(key=lambda e: order[e.row.key])
    return entries


@lru_cache(maxsize=None)
def _grammar_order(m: int) -> dict:
    from .aq import generate_table_rows

    return {row.key: pos for pos, row in enumerate(generate_table_rows(m))}


def column_mismatches(m: int) -> list[str]:
    """Differences between the computed column and the printed conditions."""
    records = dimension_table(m)
    problems = []
    for entry in no_component_column(m):
        expected = sorted(
            rec.name for rec in records if column_allows(entry.row.column, rec.involution)
        )
        if expected != entry.no_component:
            problems.append(
                f"m={m} row {entry.row.label}: computed {entry.no_component}, "
                f"printed {expected}"
            )
    return problems


def automorphic_candidates(m: int) -> list[tuple[Involution, ThetaStableParabolic]]:
    """Involutions whose cycles couple only to the trivial class and one other.

    A surviving pair (sigma, q*) forces the representation attached to q* to
    occur in the spectrum of the lattice, so it is an automorphic witness.
    """
    if m < 3:
        return []
    classes = enumerate_parabolics(m, check_saturation=False)
    out = []
    for inv in theorem_scope(m):
        rec = cycle_record(inv)
        survivors = [q for q in classes if not no_aq_component(rec, q)]
        if len(survivors) == 2 and any(q.is_trivial for q in survivors):
            witness = next(q for q in survivors if not q.is_trivial)
            out.append((inv, witness))
    return out
