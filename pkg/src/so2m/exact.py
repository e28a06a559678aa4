"""Exact scalar and sparse bivariate polynomial arithmetic.

Everything downstream (matrices, root data, cohomology tables) is built on
the two value types here: Gaussian rationals a + bi with Fraction components,
and bivariate polynomials in (x, t) with integer coefficients stored sparsely
by bidegree.  All operations are exact; there is no floating-point mode.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

Q = Fraction

Scalar = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """An element of Q(i), kept in lowest terms by Fraction normalization."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        object.__setattr__(self, "re", Q(re))
        object.__setattr__(self, "im", Q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def coerce(value: Scalar) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(value)

    def __add__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_rational_int(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def rational_str(q: Fraction) -> str:
    """Serialize a Fraction as 'p' or 'p/q'."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


Bidegree = tuple[int, int]


class HodgePolynomial:
    """Bivariate polynomial in (x, t), sparse map bidegree -> coefficient.

    Zero coefficients are never stored.  Iteration and serialization are
    lexicographic on (a, b) so repeated runs emit identical bytes.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Bidegree, int] | None = None):
        clean = {}
        if coeffs:
            for (a, b), c in coeffs.items():
                if a < 0 or b < 0:
                    raise ValueError(f"negative bidegree ({a}, {b})")
                if c != 0:
                    clean[(a, b)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HodgePolynomial is immutable")

    @staticmethod
    def zero() -> "HodgePolynomial":
        return HodgePolynomial()

    @staticmethod
    def one() -> "HodgePolynomial":
        return HodgePolynomial({(0, 0): 1})

    @staticmethod
    def monomial(a: int, b: int, c: int = 1) -> "HodgePolynomial":
        return HodgePolynomial({(a, b): c})

    @staticmethod
    def xt_string(length: int, start_a: int = 0, start_b: int = 0) -> "HodgePolynomial":
        """x^start_a t^start_b (1 + xt + ... + (xt)^(length-1))."""
        return HodgePolynomial(
            {(start_a + j, start_b + j): 1 for j in range(length)}
        )

    def coeff(self, a: int, b: int) -> int:
        if a < 0 or b < 0:
            raise ValueError(f"negative bidegree ({a}, {b})")
        return self.coeffs.get((a, b), 0)

    def __add__(self, other: "HodgePolynomial") -> "HodgePolynomial":
        merged = dict(self.coeffs)
        for key, c in other.coeffs.items():
            merged[key] = merged.get(key, 0) + c
        return HodgePolynomial(merged)

    def __mul__(self, other: "HodgePolynomial") -> "HodgePolynomial":
        out: dict[Bidegree, int] = {}
        for (a1, b1), c1 in self.coeffs.items():
            for (a2, b2), c2 in other.coeffs.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return HodgePolynomial(out)

    def scale(self, c: int) -> "HodgePolynomial":
        return HodgePolynomial({key: c * v for key, v in self.coeffs.items()})

    def shift(self, da: int, db: int) -> "HodgePolynomial":
        """Multiply by x^da t^db."""
        return HodgePolynomial(
            {(a + da, b + db): c for (a, b), c in self.coeffs.items()}
        )

    def swap_variables(self) -> "HodgePolynomial":
        """Exchange x and t: coefficient of x^a t^b becomes that of x^b t^a."""
        return HodgePolynomial({(b, a): c for (a, b), c in self.coeffs.items()})

    def total_degree_support(self) -> set[int]:
        """Total degrees a+b carrying a nonzero coefficient."""
        return {a + b for (a, b) in self.coeffs}

    def evaluate_at_one(self) -> int:
        """Value at x = t = 1, i.e. the sum of all coefficients."""
        return sum(self.coeffs.values())

    def items(self) -> Iterator[tuple[Bidegree, int]]:
        return iter(sorted(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, HodgePolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        return f"HodgePolynomial({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b), c in sorted(self.coeffs.items()):
            term = []
            if c != 1 or (a == 0 and b == 0):
                term.append(str(c))
            if a:
                term.append("x" if a == 1 else f"x^{a}")
            if b:
                term.append("t" if b == 1 else f"t^{b}")
            parts.append("*".join(term))
        return " + ".join(parts)

    def serialize(self) -> list[list[int]]:
        """Lex-sorted [[a, b, coeff], ...] triples."""
        return [[a, b, c] for (a, b), c in sorted(self.coeffs.items())]


def poly_coeff(p: HodgePolynomial, a: int, b: int) -> int:
    """Coefficient of x^a t^b, zero if absent."""
    return p.coeff(a, b)


def poly_total_degree_support(p: HodgePolynomial) -> set[int]:
    return p.total_degree_support()


def poly_swap_variables(p: HodgePolynomial) -> HodgePolynomial:
    return p.swap_variables()
