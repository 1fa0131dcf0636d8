"""Hilbert series and Hilbert polynomials of determinantal and secant varieties."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .algebra import Poly, as_int, binom, rational_str

ONE_MINUS_T = Poly((1, -1))


@dataclass(frozen=True)
class HilbertSeries:
    """The series numerator(t) / (1 - t)^denominator_power."""

    numerator: Poly
    denominator_power: int

    def __post_init__(self) -> None:
        if self.denominator_power < 0:
            raise ValueError("denominator power must be nonnegative")

    def coefficient(self, m: int) -> Fraction:
        """Value of the Hilbert function in degree m."""
        e = self.denominator_power
        if e == 0:
            return self.numerator[m]
        return sum(
            (c * binom(m - j + e - 1, e - 1) for j, c in enumerate(self.numerator.coeffs) if j <= m),
            Fraction(0),
        )

    def reduced(self) -> "HilbertSeries":
        """Cancel common factors of (1 - t)."""
        q, e = self.numerator, self.denominator_power
        while e > 0 and not q.is_zero() and q(1) == 0:
            q = q.exact_div(ONE_MINUS_T)
            e -= 1
        return HilbertSeries(q, e)

    def times_one_minus_t(self, power: int = 1) -> "HilbertSeries":
        """Series of a quotient by a regular sequence of ``power`` linear forms."""
        if power > self.denominator_power:
            return HilbertSeries(self.numerator * ONE_MINUS_T ** (power - self.denominator_power), 0)
        return HilbertSeries(self.numerator, self.denominator_power - power)

    @property
    def degree(self) -> int:
        """Degree of the projective variety, read from a reduced series."""
        return as_int(self.reduced().numerator(1))

    def same_series(self, other: "HilbertSeries") -> bool:
        """Compare after clearing denominators."""
        e = max(self.denominator_power, other.denominator_power)
        lhs = self.numerator * ONE_MINUS_T ** (e - self.denominator_power)
        rhs = other.numerator * ONE_MINUS_T ** (e - other.denominator_power)
        return lhs == rhs

    def to_json(self) -> dict:
        return {"numerator": self.numerator.to_json(), "denominator_power": self.denominator_power}


@dataclass(frozen=True)
class HilbertPolynomial:
    """Hilbert polynomial written as sum of a_i * binom(t + i, i)."""

    coeffs: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> Fraction:
        return sum((a * binom(t + i, i) for i, a in enumerate(self.coeffs)), Fraction(0))

    def to_poly(self) -> Poly:
        """Expand in the monomial basis."""
        t = Poly.t()
        out = Poly()
        for i, a in enumerate(self.coeffs):
            basis = Poly.const(1)
            for j in range(1, i + 1):
                basis = basis * (t + j) * Fraction(1, j)
            out = out + basis * a
        return out

    def to_json(self) -> list[str]:
        return [rational_str(a) for a in self.coeffs]


def _poly_det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Fraction-free (Bareiss) determinant over Q[t]."""
    m = [list(row) for row in matrix]
    size = len(m)
    if size == 0:
        return Poly.const(1)
    sign = 1
    prev = Poly.const(1)
    for k in range(size - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not m[i][k].is_zero()), None)
            if swap is None:
                return Poly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[-1][-1] * sign


def maximal_minor_numerator(k: int, c: int) -> Poly:
    """Numerator sum_j binom(c+j, j) t^j for the (k+1)-minors of a (k+1+c) x (k+1) matrix.

    The full series has denominator (1-t)^(k(k+2+c)).
    """
    if k < 0 or c < 0:
        raise ValueError("k and c must be nonnegative")
    return Poly(binom(c + j, j) for j in range(k + 1))


def abhyankar_matrix(m: int, n_cols: int, k: int) -> list[list[Poly]]:
    return [
        [
            Poly(binom(m - i, ell) * binom(n_cols - j, ell + i - j) for ell in range(m + n_cols + 1))
            for j in range(1, k + 1)
        ]
        for i in range(1, k + 1)
    ]


def abhyankar_numerator(m: int, n_cols: int, k: int) -> Poly:
    """Numerator of the series of the (k+1)-minors of a generic m x n_cols matrix.

    It is a k x k determinant; the denominator is (1-t)^(k(m+n_cols-k)).
    """
    if not 1 <= k <= min(m, n_cols):
        raise ValueError("need 1 <= k <= min(m, n_cols)")
    return _poly_det(abhyankar_matrix(m, n_cols, k))


def determinantal_series(m: int, n_cols: int, k: int) -> HilbertSeries:
    return HilbertSeries(abhyankar_numerator(m, n_cols, k), k * (m + n_cols - k))


def eagon_northcott_numerator(s: int, c: int) -> Poly:
    """(1-t)^(c+1) times the maximal-minor numerator with top index s-1.

    Computed from the Eagon-Northcott resolution:
    1 - s binom(s+c, c) sum_q (-1)^q binom(c, q) t^(q+s) / (q+s).
    """
    if s < 1 or c < 0:
        raise ValueError("need s >= 1 and c >= 0")
    out = [Fraction(0)] * (s + c + 1)
    out[0] = Fraction(1)
    scale = s * binom(s + c, c)
    for q in range(c + 1):
        out[q + s] -= Fraction(scale * (-1) ** q * binom(c, q), q + s)
    return Poly(out)


def secant_hilbert_series(n: int, k: int) -> HilbertSeries:
    """Series of the k-secant variety of the rational normal curve in P^n."""
    if k < 1 or 2 * k > n:
        raise ValueError(f"need 1 <= k <= n/2, got n={n}, k={k}")
    return HilbertSeries(Poly(binom(n - 2 * k + j, j) for j in range(k + 1)), 2 * k)


def hilbert_polynomial(hs: HilbertSeries) -> HilbertPolynomial:
    """Coefficients a_(d-i) = (-1)^i q^(i)(1) / i! with d = denominator power - 1."""
    q, e = hs.numerator, hs.denominator_power
    if e < 1:
        raise ValueError("a series with no pole at t = 1 has zero Hilbert polynomial")
    if q(1) == 0:
        raise ValueError("non-reduced series: numerator vanishes at t = 1")
    d = e - 1
    a = [Fraction(0)] * (d + 1)
    for i in range(d + 1):
        a[d - i] = (-1) ** i * q.derivative(i)(1) / factorial(i)
    return HilbertPolynomial(tuple(a))


def genus_from_series(hs: HilbertSeries) -> int:
    """Arithmetic genus of a curve cut from the variety by general hyperplanes.

    Cutting by a hyperplane drops the lowest coefficient of the Hilbert
    polynomial, so the curve keeps (a_(d-1), a_d) and its constant term is
    a_(d-1) + a_d = q(1) - q'(1).
    """
    hp = hilbert_polynomial(hs.reduced())
    d = hp.dim
    if d < 1:
        raise ValueError("variety must have positive dimension")
    curve = HilbertPolynomial(hp.coeffs[d - 1 :])
    return as_int(1 - curve(0))


def section_curve_genus(r: int) -> int:
    """Genus of the curve cut from the (r-1)-secant of the curve in P^(2r) by general hyperplanes."""
    if r < 2:
        raise ValueError("need r >= 2")
    hs = secant_hilbert_series(2 * r, r - 1)
    q = hs.numerator
    direct = as_int(q.derivative()(1) - q(1) + 1)
    via_poly = genus_from_series(hs)
    if direct != via_poly:
        raise ArithmeticError("genus from the Hilbert polynomial disagrees with q'(1) - q(1) + 1")
    return direct


def genus_closed_form(r: int) -> int:
    return as_int(Fraction((r - 1) * (r - 2) * (3 * r * r + 11 * r + 12), 24))
