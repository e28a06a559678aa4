"""Chevalley relations, coroot formulas, signatures, structure constants."""

import pytest

from so2m.chevalley import build_chevalley
from so2m.exact import GaussianRational
from so2m.liealg import bracket, h_generator, skew_pair, theta
from so2m.roots import Root, T0, T0_PRIME

I = GaussianRational(0, 1)


def test_full_relation_suite_small_ranks():
    # construction verifies every relation of the bracket system and fails loudly
    for m in (2, 3, 4, 5):
        build_chevalley(m, T0)
    for m in (4, 6):
        build_chevalley(m, T0_PRIME)


def test_simple_coroot_formulas_family_b():
    for m in (3, 5, 7):
        cb = build_chevalley(m)
        ctx = cb.ctx
        l = ctx.l
        for j in range(1, l):
            expected = (h_generator(ctx, j) - h_generator(ctx, j + 1)).scale(I)
            assert (cb.hstar(cb.rs.simples[j - 1]) - expected).is_zero()
        expected_last = h_generator(ctx, l).scale(GaussianRational(0, 2))
        assert (cb.hstar(cb.rs.simples[l - 1]) - expected_last).is_zero()


def test_simple_coroot_formulas_family_d():
    for m in (4, 6):
        cb = build_chevalley(m)
        ctx = cb.ctx
        l = ctx.l
        expected_last = (h_generator(ctx, l - 1) + h_generator(ctx, l)).scale(I)
        assert (cb.hstar(cb.rs.simples[l - 1]) - expected_last).is_zero()


def test_primed_coroot_formula():
    # H*_{phi'_1} = i(H_1 + F_{3,l+2}) on the alternate torus
    for m in (4, 6):
        cb = build_chevalley(m, T0_PRIME)
        ctx = cb.ctx
        l = ctx.l
        expected = (h_generator(ctx, 1) + skew_pair(ctx.n, 3, l + 2)).scale(I)
        assert (cb.hstar(cb.rs.simples[0]) - expected).is_zero()
        # H*_{phi'_l} = -i(F_{l,2l-1} + F_{l+1,2l})
        expected_l = (skew_pair(ctx.n, l, 2 * l - 1) + skew_pair(ctx.n, l + 1, 2 * l)).scale(-I)
        assert (cb.hstar(cb.rs.simples[l - 1]) - expected_l).is_zero()


def test_cartan_acts_diagonally_on_short_vector():
    # [H_1, E_{e_1}] = -i E_{e_1} in family B
    cb = build_chevalley(5)
    gamma = Root((1, 0, 0))
    h1 = h_generator(cb.ctx, 1)
    got = bracket(h1, cb.E[gamma])
    assert (got - cb.E[gamma].scale(-I)).is_zero()


def test_theta_signatures():
    cb = build_chevalley(5)
    rs = cb.rs
    assert cb.theta_signature(rs.simples[1]) == 1
    assert cb.theta_signature(rs.simples[0]) == -1
    assert cb.theta_signature(rs.highest_root()) == -1
    with pytest.raises(ValueError):
        cb.theta_signature(Root((5, 5, 5)))


def test_structure_constants_integer_antisymmetric():
    for m in (4, 5):
        cb = build_chevalley(m)
        for (a, b), n in cb.structure_constants.items():
            assert isinstance(n, int)
            assert cb.structure_constants[(-a, -b)] == -n


def test_structure_constant_magnitudes_family_b():
    # root strings in type B have length at most 2
    for m in (3, 5, 7):
        cb = build_chevalley(m)
        values = {abs(n) for n in cb.structure_constants.values()}
        assert values <= {1, 2}
        assert 2 in values or m == 3


def test_structure_constant_requires_root_sum():
    cb = build_chevalley(4)
    a = cb.rs.simples[1]
    with pytest.raises(ValueError):
        cb.structure_constant(a, -a)


def test_eigenspace_reconstruction_matches_theta():
    # X_a, Y_a land in k0 for compact roots; i X_a, i Y_a in p0 otherwise
    for m in (3, 4):
        cb = build_chevalley(m)
        ctx = cb.ctx
        for r in cb.rs.positives:
            if r.is_compact:
                vectors = (cb.x_vector(r), cb.y_vector(r))
                for v in vectors:
                    assert v.is_real()
                    assert (theta(ctx, v) - v).is_zero()
            else:
                vectors = (cb.x_vector(r).scale(I), cb.y_vector(r).scale(I))
                for v in vectors:
                    assert v.is_real()
                    assert (theta(ctx, v) + v).is_zero()


def test_variant_t0_prime_same_cardinalities():
    for m in (4, 6):
        a = build_chevalley(m, T0)
        b = build_chevalley(m, T0_PRIME)
        assert len(a.E) == len(b.E)
        assert len(a.rs.positives) == len(b.rs.positives)
        assert len(a.rs.compact_positives) == len(b.rs.compact_positives)


def test_scalar_action_lookup():
    cb = build_chevalley(3)
    r = cb.rs.simples[0]
    target, c = cb.scalar_action(cb.E[r].scale(GaussianRational(-1)))
    assert target == r and c == GaussianRational(-1)
    with pytest.raises(ValueError):
        cb.scalar_action(h_generator(cb.ctx, 1))
