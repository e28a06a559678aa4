"""Root data, the positive system, Weyl groups, and the coset oracle."""

import pytest

from so2m.exact import HodgePolynomial
from so2m.roots import (
    Root,
    T0_PRIME,
    build_root_system,
    coset_poincare,
    RankGuardError,
    simple_roots_of,
    weyl_order,
)


def test_root_counts():
    for m in range(2, 10):
        rs = build_root_system(m)
        l = rs.ctx.l
        expected = 2 * l * l if rs.ctx.family == "B" else 2 * l * (l - 1)
        assert len(rs.roots) == expected
        assert len(rs.noncompact_positives) == m


def test_noncompact_positive_chain_m3():
    rs = build_root_system(3)
    assert [r.coords for r in rs.noncompact_positives] == [(1, -1), (1, 0), (1, 1)]


def test_xi_roots_m4():
    rs = build_root_system(4)
    l = rs.ctx.l
    xi1 = sum(rs.simples[:-1], Root((0,) * l))
    xi2 = sum(rs.simples[: l - 2], Root((0,) * l)) + rs.simples[-1]
    assert xi1.coords == (1, 0, -1)
    assert xi2.coords == (1, 0, 1)
    assert xi1 in rs.noncompact_positives and xi2 in rs.noncompact_positives


def test_m2_all_roots_noncompact():
    rs = build_root_system(2)
    assert all(not r.is_compact for r in rs.roots)
    assert {r.coords for r in rs.simples} == {(1, -1), (1, 1)}


def test_highest_root_and_marks():
    rs = build_root_system(5)  # B, l = 3
    delta = rs.highest_root()
    assert delta.coords == (1, 1, 0)
    assert rs.highest_root_marks() == (1, 2, 2)
    rs8 = build_root_system(8)  # D, l = 5... marks (1,2,2,1,1) at l=5
    assert rs8.highest_root_marks() == (1, 2, 2, 1, 1)
    rs6 = build_root_system(6)
    assert rs6.highest_root_marks() == (1, 2, 1, 1)
    # maximality: delta + phi is never a root
    for rs_m in (rs, rs6):
        d = rs_m.highest_root()
        for phi in rs_m.simples:
            assert not rs_m.is_root(d + phi)
    with pytest.raises(ValueError):
        build_root_system(2).highest_root()


def test_borel_de_siebenthal_property():
    for m in range(3, 10):
        rs = build_root_system(m)
        noncompact_simples = [s for s in rs.simples if not s.is_compact]
        assert noncompact_simples == [rs.simples[0]]
        assert rs.highest_root_marks()[0] == 1
        assert not rs.highest_root().is_compact


def test_compactness_sum_rule():
    for m in range(2, 10):  # both families through l = 5
        rs = build_root_system(m)
        root_set = set(rs.roots)
        for a in rs.roots:
            for b in rs.roots:
                c = a + b
                if c in root_set:
                    # k.k -> k, k.n -> n, n.n -> k
                    assert c.is_compact == (a.is_compact == b.is_compact)


def test_t0_prime_requires_family_d():
    with pytest.raises(ValueError):
        build_root_system(5, T0_PRIME)
    with pytest.raises(ValueError):
        build_root_system(2, T0_PRIME)
    rs = build_root_system(6, T0_PRIME)
    assert len(rs.roots) == 24


def test_weyl_orders():
    for m, expected in ((3, 8), (5, 48), (7, 384)):
        rs = build_root_system(m)
        assert weyl_order(rs.simples) == expected  # |W(B_r)| = 2^r r!
    for m, expected in ((4, 24), (6, 192)):
        rs = build_root_system(m)
        assert weyl_order(rs.simples) == expected  # |W(D_r)| = 2^(r-1) r!
    # A_r subsystems: (r+1)!
    rs = build_root_system(7)
    a2 = [rs.simples[1], rs.simples[2]]
    assert weyl_order(a2) == 6


def test_coset_poincare_quadric_q3():
    rs = build_root_system(3)  # B_2 with compact part B_1
    compact = simple_roots_of(frozenset(rs.compact_positives))
    poly = coset_poincare(rs.simples, compact)
    assert poly == HodgePolynomial.xt_string(4)
    assert poly.evaluate_at_one() == weyl_order(rs.simples) // weyl_order(compact)


def test_coset_poincare_projective_line():
    alpha = Root((1, -1))
    poly = coset_poincare([alpha], [])
    assert poly == HodgePolynomial.xt_string(2)


def test_coset_poincare_even_quadric_q4():
    # D_3 levi with compact part A_1 x A_1: |W(D_3)| = 24, quotient is Q_4
    rs = build_root_system(6)
    l = rs.ctx.l
    d3_simples = [
        Root((1, -1, 0, 0)),
        Root((0, 1, -1, 0)),
        Root((0, 1, 1, 0)),
    ]
    compact = [d3_simples[1], d3_simples[2]]
    assert weyl_order(d3_simples) == 24
    poly = coset_poincare(d3_simples, compact)
    expected = HodgePolynomial.xt_string(5) + HodgePolynomial.monomial(2, 2)
    assert poly == expected


def test_coset_poincare_palindromic():
    rs = build_root_system(7)
    compact = simple_roots_of(frozenset(rs.compact_positives))
    poly = coset_poincare(rs.simples, compact)
    coeffs = [c for _, c in poly.items()]
    assert coeffs == coeffs[::-1]


def test_coset_poincare_guards():
    rs = build_root_system(3)
    with pytest.raises(ValueError):
        coset_poincare([rs.simples[0]], [rs.simples[1]])


def test_rank_guard():
    big = [Root(tuple(1 if i == j else (-1 if i + 1 == j else 0) for j in range(9)))
           for i in range(9)]
    with pytest.raises(RankGuardError):
        coset_poincare(big, [])


def test_fundamental_coweights_duality():
    from fractions import Fraction

    from so2m.exact import GaussianRational

    for m in (2, 4, 5, 6):
        rs = build_root_system(m)
        coweights = rs.fundamental_coweights()
        for i, h in enumerate(coweights):
            for j, phi in enumerate(rs.simples):
                # phi_j(H_{omega_i}) = (omega_i, phi_j)/2, so the coroot pairing
                # omega_i(H*_{phi_j}) equals 4/|phi_j|^2 times it
                value = rs.eval_root_on(phi, h)
                pairing = value * GaussianRational(Fraction(4, phi.norm_squared()))
                assert pairing == (1 if i == j else 0)
