"""Cycle dimensions, the no-component predicate, columns, and the witnesses."""

from so2m.aq import enumerate_parabolics, parabolic_from_vector
from so2m.cycles import (
    automorphic_candidates,
    column_mismatches,
    cycle_record,
    dimension_table,
    expected_dimensions,
    no_aq_component,
    no_component_column,
)
from so2m.involutions import catalog_entry
from so2m.liealg import build_context
from so2m.orientation import theorem_scope


def test_dimension_table_closed_forms():
    for m in range(2, 10):
        for rec in dimension_table(m):
            assert (rec.d_sigma, rec.d_sigma_theta) == expected_dimensions(rec.involution)
            assert rec.d_sigma + rec.d_sigma_theta == 2 * m


def test_dimension_examples():
    recs = {r.name: r for r in dimension_table(5)}
    assert (recs["sigma_2"].d_sigma, recs["sigma_2"].d_sigma_theta) == (4, 6)
    recs2 = {r.name: r for r in dimension_table(2)}
    assert (recs2["eta_1"].d_sigma, recs2["eta_1"].d_sigma_theta) == (3, 1)
    recs6 = {r.name: r for r in dimension_table(6)}
    assert (recs6["tau'_1"].d_sigma, recs6["tau'_1"].d_sigma_theta) == (2, 10)
    assert (recs6["tau'_2"].d_sigma, recs6["tau'_2"].d_sigma_theta) == (6, 6)


def test_holomorphy_parity_invariants():
    for m in range(2, 9):
        for rec in dimension_table(m):
            if rec.holomorphy == "holomorphic":
                assert rec.d_sigma % 2 == 0 and rec.d_sigma_theta % 2 == 0
            if rec.holomorphy == "mixed":
                assert m == 2


def test_trivial_class_never_excluded():
    for m in (2, 3, 4, 5, 6):
        l = build_context(m).l
        trivial = parabolic_from_vector(m, (0,) * l)
        for inv in theorem_scope(m):
            assert not no_aq_component(cycle_record(inv), trivial)


def test_predicate_examples():
    # sigma_p against the pure x^(2l-1) class: no component
    m = 5
    l = build_context(m).l
    full = parabolic_from_vector(m, (1,) + (0,) * (l - 1))
    for p in (2, 3):
        rec = cycle_record(catalog_entry(m, f"sigma_{p}"))
        assert no_aq_component(rec, full)
    # D family, {beta >= phi_1 + ... + phi_i} rows exclude tau_p and mu_p iff i even
    m = 8
    l = build_context(m).l
    q2 = parabolic_from_vector(m, (2, 2, 1, 0, 0))  # up >= c_2
    assert sorted(r.coords for r in q2.u_p_plus)[0] == (1, 0, -1, 0, 0)
    rec_tau = cycle_record(catalog_entry(m, "tau_1"))
    assert no_aq_component(rec_tau, q2)  # i = 2 even
    q3 = parabolic_from_vector(m, (3, 3, 3, 1, 0))  # up >= c_3, i = 3 odd
    assert not no_aq_component(rec_tau, q3)


def test_rank_two_columns():
    entries = {e.row.label: e.no_component for e in no_component_column(2)}
    assert entries["trivial"] == []
    assert entries["up={phi_1}"] == ["mu_1", "sigma_1", "tau'_1", "tau_1"]
    assert entries["up={phi_1,phi_2}"] == ["eta_1", "eta_2", "sigma_1"]
    assert entries["down={phi_1}, up={phi_2}"] == ["eta_1", "eta_2"]
    assert entries["down={phi_1,phi_2}"] == ["eta_1", "eta_2", "sigma_1"]


def test_columns_match_printed_conditions():
    for m in range(2, 10):
        assert column_mismatches(m) == []


def test_rank_two_x_squared_row_excludes_factor_swaps():
    # the pure x^2 class carries a component for tau'_1 despite its complex cycle
    entries = {e.row.label: e.no_component for e in no_component_column(2)}
    assert "tau'_1" not in entries["up={phi_1,phi_2}"]
    assert "tau'_1" in entries["up={phi_1}"]


def test_automorphic_candidates():
    for m in (3, 5, 7, 9):
        l = build_context(m).l
        found = automorphic_candidates(m)
        assert len(found) == 1
        inv, q = found[0]
        assert inv.name == f"sigma_{l}"
        assert sorted(r.coords for r in q.u_p_minus) == [(-1, 1) + (0,) * (l - 2)]
        assert sorted(r.coords for r in q.u_p_plus) == [(1, 1) + (0,) * (l - 2)]
    for m in (4, 6, 8):
        l = build_context(m).l
        found = automorphic_candidates(m)
        assert len(found) == 1
        inv, q = found[0]
        assert inv.name == "tau'_1"
        assert sorted(r.coords for r in q.u_p_minus) == [(-1, 1) + (0,) * (l - 2)]
        assert sorted(r.coords for r in q.u_p_plus) == [(1, 1) + (0,) * (l - 2)]
    assert automorphic_candidates(2) == []


def test_witness_class_survives_for_its_involution():
    m = 5
    inv, q = automorphic_candidates(m)[0]
    rec = cycle_record(inv)
    assert not no_aq_component(rec, q)
    others = [
        c for c in enumerate_parabolics(m, check_saturation=False)
        if not c.is_trivial and c.key != q.key
    ]
    assert all(no_aq_component(rec, c) for c in others)
