"""
Exact scalar arithmetic: rationals, the tropical semiring Q u {inf}
(min-plus), Laurent monomials over an arbitrary variable alphabet, and
fraction-free determinants.

All scalars are `fractions.Fraction`; no floats anywhere.

>>> determinant([[1, 2], [3, 4]])
Fraction(-2, 1)
>>> trop_to_str(Trop.of(3) * Trop.of(2))
'5'
"""

__all__ = [
    "Rational", "Trop", "TROP_INF", "LaurentMonomial",
    "rat_from_str", "rat_to_str", "trop_from_str", "trop_to_str",
    "determinant", "eval_monomial", "trop_eval_monomial",
    "monomial_mul", "monomial_div",
]

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Mapping

Rational = Fraction


def rat_from_str(s: str) -> Fraction:
    """Parse "p/q" or "p"."""
    return Fraction(s.strip())


def rat_to_str(x: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(x)


# ---------------------------------------------------------------------------
# Tropical semiring (min, +)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Trop:
    """An element of Q u {inf}; ``value is None`` encodes +infinity.

    Multiplication is tropical (value addition); use min() for tropical
    addition -- comparisons place inf above every rational.

    >>> min(Trop.of(3), TROP_INF)
    Trop(value=Fraction(3, 1))
    """
    value: Fraction | None

    @staticmethod
    def of(x) -> "Trop":
        return Trop(Fraction(x))

    @property
    def is_inf(self) -> bool:
        return self.value is None

    def __mul__(self, other: "Trop") -> "Trop":
        if self.is_inf or other.is_inf:
            return TROP_INF
        return Trop(self.value + other.value)

    def __truediv__(self, other: "Trop") -> "Trop":
        """Tropical division = value subtraction; dividing by inf is an error."""
        if other.is_inf:
            raise ZeroDivisionError("tropical division by inf")
        if self.is_inf:
            return TROP_INF
        return Trop(self.value - other.value)

    def scale(self, k: int) -> "Trop":
        """k-fold tropical power (k * value); inf**0 = 0, the tropical unit."""
        if k == 0:
            return Trop(Fraction(0))
        if self.is_inf:
            if k < 0:
                raise ZeroDivisionError("inf with negative exponent")
            return TROP_INF
        return Trop(k * self.value)

    def _key(self):
        return (1,) if self.is_inf else (0, self.value)

    def __lt__(self, other: "Trop") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "Trop") -> bool:
        return self._key() <= other._key()


TROP_INF = Trop(None)


def trop_from_str(s: str) -> Trop:
    s = s.strip()
    return TROP_INF if s == "inf" else Trop(Fraction(s))


def trop_to_str(x: Trop) -> str:
    return "inf" if x.is_inf else str(x.value)


# ---------------------------------------------------------------------------
# Laurent monomials
# ---------------------------------------------------------------------------

@dataclass
class LaurentMonomial:
    """coefficient * prod(var**e); exponents may be negative.

    Variables are arbitrary hashable keys (weight ids, index sets, ...).
    Zero exponents are dropped so equality of exponent maps is structural.
    """
    coefficient: Fraction = Fraction(1)
    exponents: dict[Hashable, int] = field(default_factory=dict)

    def __post_init__(self):
        self.coefficient = Fraction(self.coefficient)
        if self.coefficient == 0:
            raise ValueError("monomial coefficient must be nonzero")
        self.exponents = {k: e for k, e in self.exponents.items() if e != 0}


def eval_monomial(m: LaurentMonomial, assignment: Mapping[Hashable, Fraction]) -> Fraction:
    """coefficient * prod a_j**e_j.

    >>> eval_monomial(LaurentMonomial(Fraction(1), {1: 2, 2: -1}),
    ...               {1: Fraction(3), 2: Fraction(2)})
    Fraction(9, 2)
    """
    out = m.coefficient
    for key, e in m.exponents.items():
        base = assignment[key]
        if base == 0 and e < 0:
            raise ZeroDivisionError("zero raised to a negative power")
        out *= Fraction(base) ** e
    return out


def trop_eval_monomial(m: LaurentMonomial, assignment: Mapping[Hashable, Trop]) -> Trop:
    """Min-plus image of the monomial: sum e_j * x_j (coefficient ignored).

    >>> trop_eval_monomial(LaurentMonomial(Fraction(1), {1: 1, 2: -1}),
    ...                    {1: Trop.of(5), 2: Trop.of(3)})
    Trop(value=Fraction(2, 1))
    """
    out = Trop(Fraction(0))
    for key, e in m.exponents.items():
        out = out * assignment[key].scale(e)
    return out


def monomial_mul(a: LaurentMonomial, b: LaurentMonomial) -> LaurentMonomial:
    exps = dict(a.exponents)
    for k, e in b.exponents.items():
        exps[k] = exps.get(k, 0) + e
    return LaurentMonomial(a.coefficient * b.coefficient, exps)


def monomial_div(a: LaurentMonomial, b: LaurentMonomial) -> LaurentMonomial:
    exps = dict(a.exponents)
    for k, e in b.exponents.items():
        exps[k] = exps.get(k, 0) - e
    return LaurentMonomial(a.coefficient / b.coefficient, exps)


# ---------------------------------------------------------------------------
# Determinants
# ---------------------------------------------------------------------------

def determinant(m) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    >>> determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    Fraction(1, 1)
    """
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


if __name__ == "__main__":
    import doctest
    doctest.testmod()
