"""Field axioms for the exact scalars and the sparse bivariate polynomials."""

import random
from fractions import Fraction

import pytest

from so2m.exact import (
    GaussianRational,
    HodgePolynomial,
    poly_coeff,
    poly_swap_variables,
    poly_total_degree_support,
    rational_str,
)

RNG = random.Random(987123)


def rand_scalar():
    return GaussianRational(
        Fraction(RNG.randrange(-6, 7), RNG.randrange(1, 5)),
        Fraction(RNG.randrange(-6, 7), RNG.randrange(1, 5)),
    )


def test_field_axioms_on_random_inputs():
    for _ in range(200):
        a, b, c = rand_scalar(), rand_scalar(), rand_scalar()
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if not b.is_zero():
            assert (a / b) * b == a


def test_conjugation_is_a_ring_involution():
    for _ in range(100):
        z, w = rand_scalar(), rand_scalar()
        assert z.conjugate().conjugate() == z
        assert (z * w).conjugate() == z.conjugate() * w.conjugate()
        assert z.norm_squared() == (z * z.conjugate()).re
        assert z.norm_squared() >= 0
        assert (z.norm_squared() == 0) == z.is_zero()


def test_scalar_coercion_and_division():
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert 1 / i == -i
    assert GaussianRational(Fraction(1, 2)) * 2 == 1
    with pytest.raises(ZeroDivisionError):
        _ = i / GaussianRational(0)


def test_rational_str():
    assert rational_str(Fraction(3)) == "3"
    assert rational_str(Fraction(-1, 2)) == "-1/2"


def test_poly_coeff_examples():
    # first Hodge row at l = 2 is the single monomial of bidegree (3, 0)
    p = HodgePolynomial.monomial(2 * 2 - 1, 0)
    assert poly_coeff(p, 3, 0) == 1
    assert poly_coeff(HodgePolynomial.zero(), 0, 0) == 0
    q = HodgePolynomial({(0, 0): 1, (1, 1): 2, (2, 2): 1})
    assert poly_coeff(q, 1, 1) == 2


def test_total_degree_support_examples():
    p = HodgePolynomial({(1, 0): 1, (2, 1): 1})
    assert poly_total_degree_support(p) == {1, 3}
    assert poly_total_degree_support(HodgePolynomial.one()) == {0}
    l = 4
    q = HodgePolynomial({(l - 1, l - 2): 1, (l, l - 1): 1})
    assert poly_total_degree_support(q) == {5, 7}


def test_swap_variables_examples():
    l = 3
    p = HodgePolynomial.monomial(2 * l - 1, 0)
    assert poly_swap_variables(p) == HodgePolynomial.monomial(0, 2 * l - 1)
    sym = HodgePolynomial({(0, 0): 1, (1, 1): 1})
    assert poly_swap_variables(sym) == sym
    diag = HodgePolynomial({(1, 1): 1, (2, 2): 1})
    assert poly_swap_variables(diag) == diag


def test_swap_is_an_involution_preserving_evaluation():
    for _ in range(50):
        coeffs = {
            (RNG.randrange(0, 5), RNG.randrange(0, 5)): RNG.randrange(1, 9)
            for _ in range(RNG.randrange(0, 6))
        }
        p = HodgePolynomial(coeffs)
        assert poly_swap_variables(poly_swap_variables(p)) == p
        assert poly_swap_variables(p).evaluate_at_one() == p.evaluate_at_one()


def test_poly_arithmetic_and_serialization():
    p = HodgePolynomial.xt_string(3)
    q = HodgePolynomial.monomial(1, 0)
    assert (p + p).coeff(1, 1) == 2
    assert (p * q).coeff(3, 2) == 1
    assert p.shift(2, 1).coeff(3, 2) == 1
    assert p.serialize() == [[0, 0, 1], [1, 1, 1], [2, 2, 1]]
    assert not p.is_zero()
    with pytest.raises(ValueError):
        HodgePolynomial({(-1, 0): 1})
    with pytest.raises(ValueError):
        p.coeff(-1, 0)


def test_zero_coefficients_are_dropped():
    p = HodgePolynomial({(1, 1): 1}) + HodgePolynomial({(1, 1): -1})
    assert p.is_zero()
    assert p.coeffs == {}
