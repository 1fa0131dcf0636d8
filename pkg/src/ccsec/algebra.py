"""Exact arithmetic kernel.

Rationals are :class:`fractions.Fraction`. Polynomials, truncated power
series in one and two variables, and Chow classes of projective space are
all immutable and carry exact coefficients.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a nonzero remainder."""


def to_rational(value: Union[Number, str]) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to a rational")


def rational_str(value: Number) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is one."""
    return str(to_rational(value))


def as_int(value: Number) -> int:
    q = to_rational(value)
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return q.numerator


def binom(a: int, d: int) -> int:
    """Binomial polynomial a(a-1)...(a-d+1)/d!, valid for any integer a.

    >>> binom(-1, 2), binom(5, 2), binom(3, 5), binom(4, -1)
    (1, 10, 0, 0)
    """
    if d < 0:
        return 0
    if d == 0:
        return 1
    if a >= 0:
        return math.comb(a, d)
    # a(a-1)...(a-d+1) = (-1)^d (-a)(-a+1)...(-a+d-1)
    return (-1) ** d * math.comb(d - a - 1, d)


def catalan(k: int) -> int:
    if k < 0:
        raise ValueError("catalan index must be nonnegative")
    return math.comb(2 * k, k) // (k + 1)


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[Number, str]] = ()):
        self.coeffs = _trim([to_rational(c) for c in coeffs])

    @classmethod
    def t(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, deg: int, c: Number = 1) -> "Poly":
        return cls([0] * deg + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[rational_str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.format("t")

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = rational_str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{rational_str(mag)}{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def _coerce(self, other: Union["Poly", Number]) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number or another Poly."""
        acc = Poly() if isinstance(x, Poly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> "Poly":
        p = self
        for _ in range(order):
            p = Poly(k * c for k, c in enumerate(p.coeffs) if k > 0)
        return p

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(divisor.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dd] if dd > 0 else [])

    def exact_div(self, divisor: "Poly") -> "Poly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InexactDivisionError(f"{self} is not divisible by {divisor}")
        return q

    def to_json(self) -> list[str]:
        return [rational_str(c) for c in self.coeffs]


def lagrange_interpolate(points: Sequence[tuple[Number, Number]]) -> Poly:
    """Unique polynomial of degree < len(points) through the given nodes.

    Built with Newton divided differences, which is quadratic in the number
    of nodes.

    >>> lagrange_interpolate([(0, 0), (1, 1), (2, 4)])
    Poly(['0', '0', '1'])
    """
    xs = [to_rational(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("degenerate interpolation nodes")
    coef = [to_rational(y) for _, y in points]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # Expand the Newton form into monomials, innermost factor first.
    out: list[Fraction] = []
    for i in range(n - 1, -1, -1):
        shifted = [Fraction(0)] + out
        for k, c in enumerate(out):
            shifted[k] -= xs[i] * c
        if not shifted:
            shifted = [Fraction(0)]
        shifted[0] += coef[i]
        out = shifted
    return Poly(out)


def involution_I(p: Poly) -> Poly:
    """Map p(t) to (t p(-t-1) + p(0)) / (t + 1), asserting exact division.

    Applied to a dimension-indexed class polynomial this returns the signed
    generating function of Euler characteristics of general linear sections.
    """
    t = Poly.t()
    numer = t * p(Poly((-1, -1))) + p(0)
    return numer.exact_div(Poly((1, 1)))


# ---------------------------------------------------------------------------
# Truncated power series


class Series:
    """Power series in one variable known modulo x^(order+1)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Union[Number, str]], order: int):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = [to_rational(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "Series":
        return cls(p.coeffs, order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls((1,), order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls((0, 1), order)

    def __getitem__(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"coefficient x^{k} lies beyond the truncation order {self.order}")
        return self.coeffs[k] if k >= 0 else Fraction(0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Series) and (self.order, self.coeffs) == (other.order, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"Series({[rational_str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs, min(order, self.order))

    def to_poly(self) -> Poly:
        return Poly(self.coeffs)

    def _lift(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, Poly):
            return Series.from_poly(other, self.order)
        if isinstance(other, (int, Fraction)):
            return Series((other,), self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return Series((self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series((c * other for c in self.coeffs), self.order)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return Series(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            return self.inverse() ** (-e)
        result, base = Series.one(self.order), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Series":
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [1 / a0]
        for k in range(1, self.order + 1):
            s = sum((self.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
            out.append(-s / a0)
        return Series(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / to_rational(other))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def sqrt(self) -> "Series":
        """Square root of a series with constant term 1, normalized to start at 1."""
        if self.coeffs[0] != 1:
            raise ValueError("sqrt requires constant term 1")
        out = [Fraction(1)]
        for k in range(1, self.order + 1):
            s = sum((out[j] * out[k - j] for j in range(1, k)), Fraction(0))
            out.append((self.coeffs[k] - s) / 2)
        return Series(out, self.order)

    def compose(self, inner: Union["Series", "Series2"]):
        """Substitute ``inner`` (zero constant term) for the variable."""
        if inner.constant_term() != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        acc = inner.scalar(Fraction(0))
        power = inner.scalar(Fraction(1))
        for k in range(self.order + 1):
            if power.is_zero():
                break
            if self.coeffs[k]:
                acc = acc + power * self.coeffs[k]
            power = power * inner
        return acc

    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def scalar(self, c: Number) -> "Series":
        return Series((c,), self.order)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


class Series2:
    """Power series in x and y known modulo (x^(ox+1), y^(oy+1))."""

    __slots__ = ("coeffs", "ox", "oy")

    def __init__(self, coeffs: Iterable[Iterable[Union[Number, str]]], ox: int, oy: int):
        if ox < 0 or oy < 0:
            raise ValueError("series orders must be nonnegative")
        rows = []
        src = list(coeffs)
        for i in range(ox + 1):
            row = [to_rational(c) for c in src[i]][: oy + 1] if i < len(src) else []
            row += [Fraction(0)] * (oy + 1 - len(row))
            rows.append(tuple(row))
        self.coeffs = tuple(rows)
        self.ox, self.oy = ox, oy

    @classmethod
    def from_function(cls, f, ox: int, oy: int) -> "Series2":
        return cls([[f(i, j) for j in range(oy + 1)] for i in range(ox + 1)], ox, oy)

    @classmethod
    def monomial(cls, i: int, j: int, ox: int, oy: int, c: Number = 1) -> "Series2":
        return cls.from_function(lambda a, b: c if (a, b) == (i, j) else 0, ox, oy)

    @classmethod
    def from_y_series(cls, s: Series, ox: int) -> "Series2":
        return cls([s.coeffs], ox, s.order)

    @classmethod
    def from_x_series(cls, s: Series, oy: int) -> "Series2":
        return cls([[c] for c in s.coeffs], s.order, oy)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if i > self.ox or j > self.oy:
            raise IndexError(f"coefficient x^{i}y^{j} lies beyond the truncation orders")
        if i < 0 or j < 0:
            return Fraction(0)
        return self.coeffs[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Series2) and (self.ox, self.oy, self.coeffs) == (
            other.ox,
            other.oy,
            other.coeffs,
        )

    def __hash__(self) -> int:
        return hash((self.ox, self.oy, self.coeffs))

    def __repr__(self) -> str:
        return f"Series2(ox={self.ox}, oy={self.oy})"

    def truncate(self, ox: int, oy: int) -> "Series2":
        return Series2(self.coeffs, min(ox, self.ox), min(oy, self.oy))

    def constant_term(self) -> Fraction:
        return self.coeffs[0][0]

    def scalar(self, c: Number) -> "Series2":
        return Series2([[c]], self.ox, self.oy)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.coeffs)

    def _lift(self, other) -> "Series2":
        if isinstance(other, Series2):
            return other
        if isinstance(other, (int, Fraction)):
            return self.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        ox, oy = min(self.ox, other.ox), min(self.oy, other.oy)
        return Series2.from_function(lambda i, j: self.coeffs[i][j] + other.coeffs[i][j], ox, oy)

    __radd__ = __add__

    def __neg__(self) -> "Series2":
        return Series2([[-c for c in row] for row in self.coeffs], self.ox, self.oy)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series2([[c * other for c in row] for row in self.coeffs], self.ox, self.oy)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        ox, oy = min(self.ox, other.ox), min(self.oy, other.oy)
        out = [[Fraction(0)] * (oy + 1) for _ in range(ox + 1)]
        b = other.coeffs
        for i1 in range(ox + 1):
            for j1 in range(oy + 1):
                a = self.coeffs[i1][j1]
                if not a:
                    continue
                for i2 in range(ox + 1 - i1):
                    row_out = out[i1 + i2]
                    row_b = b[i2]
                    for j2 in range(oy + 1 - j1):
                        if row_b[j2]:
                            row_out[j1 + j2] += a * row_b[j2]
        return Series2(out, ox, oy)

    __rmul__ = __mul__

    def _solve_graded(self, rule) -> "Series2":
        """Fill coefficients in order of total degree using ``rule``."""
        out = [[Fraction(0)] * (self.oy + 1) for _ in range(self.ox + 1)]
        for total in range(self.ox + self.oy + 1):
            for i in range(max(0, total - self.oy), min(total, self.ox) + 1):
                out[i][total - i] = rule(out, i, total - i)
        return Series2(out, self.ox, self.oy)

    def _conv_excluding(self, u, v, i, j, skip) -> Fraction:
        s = Fraction(0)
        for p in range(i + 1):
            for q in range(j + 1):
                if (p, q) in skip or (i - p, j - q) in skip:
                    continue
                s += u[p][q] * v[i - p][j - q]
        return s

    def inverse(self) -> "Series2":
        a0 = self.constant_term()
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        a = self.coeffs

        def rule(out, i, j):
            if i == j == 0:
                return 1 / a0
            s = Fraction(0)
            for p in range(i + 1):
                for q in range(j + 1):
                    if (p, q) != (0, 0):
                        s += a[p][q] * out[i - p][j - q]
            return -s / a0

        return self._solve_graded(rule)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / to_rational(other))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def sqrt(self) -> "Series2":
        """Square root of a series with constant term 1, normalized to start at 1."""
        if self.constant_term() != 1:
            raise ValueError("sqrt requires constant term 1")
        a = self.coeffs

        def rule(out, i, j):
            if i == j == 0:
                return Fraction(1)
            s = self._conv_excluding(out, out, i, j, {(0, 0)})
            return (a[i][j] - s) / 2

        return self._solve_graded(rule)

    def shift_down(self, dx: int, dy: int) -> "Series2":
        """Exact division by x^dx y^dy; the truncation orders drop accordingly."""
        for i in range(self.ox + 1):
            for j in range(self.oy + 1):
                if (i < dx or j < dy) and self.coeffs[i][j]:
                    raise InexactDivisionError(f"series is not divisible by x^{dx}y^{dy}")
        return Series2.from_function(
            lambda i, j: self.coeffs[i + dx][j + dy], self.ox - dx, self.oy - dy
        )

    def grid(self) -> list[list[Fraction]]:
        return [list(row) for row in self.coeffs]


# ---------------------------------------------------------------------------
# Chow ring of projective space


class ChowClass:
    """Element of Z[h]/(h^(n+1)) with rational coefficients a_0..a_n of h^j.

    The class of a linear subspace P^i is h^(n-i), so the [P^i] coefficient
    is ``a[n - i]`` and the degree of the zero-dimensional part is ``a[n]``.
    """

    __slots__ = ("ambient_dim", "coeffs")

    def __init__(self, ambient_dim: int, coeffs: Iterable[Union[Number, str]]):
        if ambient_dim < 0:
            raise ValueError("ambient dimension must be nonnegative")
        cs = [to_rational(c) for c in coeffs]
        if len(cs) > ambient_dim + 1:
            if any(cs[ambient_dim + 1 :]):
                raise ValueError("class has terms beyond h^n")
            cs = cs[: ambient_dim + 1]
        cs += [Fraction(0)] * (ambient_dim + 1 - len(cs))
        self.ambient_dim = ambient_dim
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, n: int) -> "ChowClass":
        return cls(n, ())

    @classmethod
    def one(cls, n: int) -> "ChowClass":
        return cls(n, (1,))

    @classmethod
    def hyperplane(cls, n: int, power: int = 1) -> "ChowClass":
        return cls(n, [0] * power + [1]) if power <= n else cls.zero(n)

    @classmethod
    def from_poly(cls, n: int, p: Poly) -> "ChowClass":
        """Reduce a polynomial in h modulo h^(n+1)."""
        return cls(n, p.coeffs[: n + 1])

    @classmethod
    def from_dim_coeffs(cls, n: int, dims: Sequence[Number]) -> "ChowClass":
        """Build from [P^0], [P^1], ... coefficients."""
        cs = [Fraction(0)] * (n + 1)
        for i, c in enumerate(dims):
            cs[n - i] = to_rational(c)
        return cls(n, cs)

    @classmethod
    def one_plus_h_power(cls, n: int, e: int) -> "ChowClass":
        """(1+h)^e for any integer e, via the binomial polynomial."""
        return cls(n, (binom(e, j) for j in range(n + 1)))

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j <= self.ambient_dim else Fraction(0)

    def dim_coeff(self, i: int) -> Fraction:
        """Coefficient of [P^i]."""
        return self[self.ambient_dim - i]

    def dim_coeffs(self) -> tuple[Fraction, ...]:
        return tuple(reversed(self.coeffs))

    def degree(self) -> Fraction:
        """Degree of the zero-dimensional component."""
        return self.coeffs[-1]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ChowClass) and (self.ambient_dim, self.coeffs) == (
            other.ambient_dim,
            other.coeffs,
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.coeffs))

    def __repr__(self) -> str:
        return f"ChowClass({self.ambient_dim}, {[rational_str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return Poly(self.coeffs).format("h")

    def _check(self, other: "ChowClass") -> None:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("classes live in projective spaces of different dimension")

    def __add__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check(other)
        return ChowClass(self.ambient_dim, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ambient_dim, (-a for a in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        n = self.ambient_dim
        if isinstance(other, (int, Fraction)):
            return ChowClass(n, (a * other for a in self.coeffs))
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return ChowClass(n, out)

    __rmul__ = __mul__

    def pushforward(self) -> "ChowClass":
        """Push a class on a hyperplane P^n forward into P^(n+1)."""
        return ChowClass(self.ambient_dim + 1, (0,) + self.coeffs)

    def to_poly(self) -> Poly:
        return Poly(self.coeffs)

    def to_json(self) -> list[str]:
        return [rational_str(c) for c in self.coeffs]


def chow_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    return a * b


def chow_section_operator(a: ChowClass) -> ChowClass:
    """Multiply by h/(1+h) = h - h^2 + h^3 - ...

    This sends the class of X to the class of a general hyperplane section,
    pushed forward into the same ambient space.
    """
    n = a.ambient_dim
    op = ChowClass(n, [0] + [(-1) ** (j - 1) for j in range(1, n + 1)])
    return a * op
