"""Exact arithmetic kernel: integer polynomials and truncated rational power series.

Everything in this module is exact. Scalars are Python ints or
``fractions.Fraction`` (always in lowest terms with positive denominator),
polynomials are dense integer coefficient vectors in canonical form, and
power series carry an explicit truncation order that is part of the value.
No floating point appears anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Rational = Fraction


class NonExactDivision(ValueError):
    """Polynomial division left a remainder where exact division was required."""


class NonInvertibleConstantTerm(ValueError):
    """Series division requires a nonzero constant term in the divisor."""


class BadConstantTerm(ValueError):
    """Series log requires constant term 1; series exp requires constant term 0."""


class IntPolynomial:
    """Dense univariate polynomial over the integers.

    Coefficients are stored by ascending degree with trailing zeros stripped,
    so equality is structural and the zero polynomial has an empty coefficient
    tuple. Multiplication is schoolbook, which is plenty at the scale this
    library targets.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def one_minus_pow(cls, d: int) -> "IntPolynomial":
        """The binomial 1 - z**d (d must be positive)."""
        if d < 1:
            raise ValueError("exponent must be positive")
        return cls([1] + [0] * (d - 1) + [-1])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPolynomial(out)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient in Z[z]; raises NonExactDivision on any remainder."""
        if not divisor.coeffs:
            raise NonExactDivision("division by the zero polynomial")
        if not self.coeffs:
            return IntPolynomial()
        if len(self.coeffs) < len(divisor.coeffs):
            raise NonExactDivision(
                f"degree {self.degree} polynomial is not divisible by degree {divisor.degree}"
            )
        rem = [Fraction(c) for c in self.coeffs]
        lead = Fraction(divisor.coeffs[-1])
        db = len(divisor.coeffs) - 1
        quot = [Fraction(0)] * (len(rem) - db)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + db] / lead
            if c:
                quot[i] = c
                for j, b in enumerate(divisor.coeffs):
                    if b:
                        rem[i + j] -= c * b
        if any(rem):
            raise NonExactDivision("remainder is nonzero")
        if any(c.denominator != 1 for c in quot):
            raise NonExactDivision("quotient is not integral")
        return IntPolynomial(int(c) for c in quot)

    def __call__(self, x):
        """Evaluate at x by Horner's rule (exact for int or Fraction input)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_exp(self, order: int) -> "RationalSeries":
        """Truncation of p(e^t): substitute e^t for the variable.

        The t^n coefficient is (sum_k p_k * k^n) / n!, with 0^0 = 1.
        """
        if order < 0:
            raise ValueError("order must be nonnegative")
        sums = [0] * (order + 1)
        for k, c in enumerate(self.coeffs):
            if c:
                pw = 1
                for n in range(order + 1):
                    sums[n] += c * pw
                    pw *= k
        return RationalSeries(Fraction(s, factorial(n)) for n, s in enumerate(sums))

    def sparse_str(self) -> str:
        """Nonzero terms as ascending "degree:coefficient" pairs."""
        return " ".join(f"{i}:{c}" for i, c in enumerate(self.coeffs) if c)

    def __str__(self):
        return self.sparse_str() if self.coeffs else "0"

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"


class RationalSeries:
    """Power series over Fraction truncated at an explicit order.

    A series of order o carries exact coefficients for t^0 .. t^o. Binary
    operations between two series return the minimum of the two orders, so
    precision is never silently invented; multiplying by t^k (``shift``)
    raises the order because the new low coefficients are exact zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("RationalSeries is immutable")

    @classmethod
    def constant(cls, value, order: int) -> "RationalSeries":
        return cls([Fraction(value)] + [Fraction(0)] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncate(self, order: int) -> "RationalSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return RationalSeries(self.coeffs[: order + 1])

    def shift(self, k: int) -> "RationalSeries":
        """Multiply by t^k; order grows by k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return RationalSeries((Fraction(0),) * k + self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return RationalSeries(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, RationalSeries):
            n = min(self.order, other.order)
            return RationalSeries(self.coeffs[i] + other.coeffs[i] for i in range(n + 1))
        out = list(self.coeffs)
        out[0] += Fraction(other)
        return RationalSeries(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, RationalSeries) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RationalSeries):
            n = min(self.order, other.order)
            out = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                a = self.coeffs[i]
                if a:
                    for j in range(n + 1 - i):
                        b = other.coeffs[j]
                        if b:
                            out[i + j] += a * b
            return RationalSeries(out)
        c = Fraction(other)
        return RationalSeries(x * c for x in self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RationalSeries):
            if other.coeffs[0] == 0:
                raise NonInvertibleConstantTerm("divisor has constant term 0")
            n = min(self.order, other.order)
            b0 = other.coeffs[0]
            out = []
            for k in range(n + 1):
                acc = self.coeffs[k]
                for j in range(k):
                    acc -= out[j] * other.coeffs[k - j]
                out.append(acc / b0)
            return RationalSeries(out)
        return self * (Fraction(1) / Fraction(other))

    def log(self) -> "RationalSeries":
        """Series logarithm; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm("series log requires constant term 1")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            acc = k * self.coeffs[k]
            for j in range(1, k):
                acc -= j * out[j] * self.coeffs[k - j]
            out[k] = acc / k
        return RationalSeries(out)

    def exp(self) -> "RationalSeries":
        """Series exponential; requires constant term 0."""
        if self.coeffs[0] != 0:
            raise BadConstantTerm("series exp requires constant term 0")
        n = self.order
        out = [Fraction(1)] + [Fraction(0)] * n
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    acc += j * self.coeffs[j] * out[k - j]
            out[k] = acc / k
        return RationalSeries(out)

    def __str__(self):
        return " ".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"RationalSeries([{', '.join(str(c) for c in self.coeffs)}])"


def exp_series(c, order: int) -> RationalSeries:
    """Truncation of e^{c t} at the given order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = Fraction(c)
    out = [Fraction(1)]
    for n in range(1, order + 1):
        out.append(out[-1] * c / n)
    return RationalSeries(out)
