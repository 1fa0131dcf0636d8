"""Projective degrees of the gradient map of the Hankel determinant.

Two coupled tables are studied on the grid 0 <= i <= 2r:

* c_i(r), the [P^i] coefficients of the CSM class of the complement of
  Sec_r C in P^(2r);
* d_i(r), the projective degrees of its gradient map.

They are linked by a pair of triangular relations. The column-interpolation
algorithm fills both tables from the Catalan numbers alone, assuming each
column is a polynomial in r. The closed forms, recursion and generating
functions below reproduce the same numbers independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import Poly, Series, Series2, binom, catalan, lagrange_interpolate


class UniquenessViolation(ArithmeticError):
    """The interpolation algorithm produced a non-integral or inconsistent entry."""


# ---------------------------------------------------------------------------
# Triangular relations between the two tables


def _check_row(r: int, row: list[int]) -> None:
    if len(row) != 2 * r + 1:
        raise ValueError(f"row for r={r} must have {2 * r + 1} entries, got {len(row)}")


def aluffi_c_from_d(r: int, d_row: list[int]) -> list[int]:
    """c_i = sum_j (-1)^j binom(2r-j, i) d_j."""
    _check_row(r, d_row)
    n = 2 * r
    return [sum((-1) ** j * binom(n - j, i) * d_row[j] for j in range(n - i + 1)) for i in range(n + 1)]


def aluffi_d_from_c(r: int, c_row: list[int]) -> list[int]:
    """d_i = sum_j (-1)^j binom(j, 2r-i) c_j."""
    _check_row(r, c_row)
    n = 2 * r
    return [sum((-1) ** j * binom(j, n - i) * c_row[j] for j in range(n - i, n + 1)) for i in range(n + 1)]


# ---------------------------------------------------------------------------
# The interpolation algorithm


@dataclass
class InvariantTable:
    rmax: int
    c: list[list[int]]
    d: list[list[int]]
    polc: list[Poly] = field(default_factory=list)
    pold: list[Poly] = field(default_factory=list)

    @staticmethod
    def is_conjectural(r: int) -> bool:
        """Rows from r = 6 on have no independent direct computation."""
        return r >= 6

    def to_json(self, emit_polys: bool = False) -> dict:
        out = {
            "rmax": self.rmax,
            "c": [[str(v) for v in row] for row in self.c],
            "d": [[str(v) for v in row] for row in self.d],
            "conjectural": [self.is_conjectural(r) for r in range(self.rmax + 1)],
        }
        if emit_polys:
            out["polc"] = [p.to_json() for p in self.polc]
            out["pold"] = [p.to_json() for p in self.pold]
        return out


def _integral(value: Fraction, what: str, r: int, i: int) -> int:
    if value.denominator != 1:
        raise UniquenessViolation(f"uniqueness violation: {what}_{i}({r}) = {value} is not an integer")
    return value.numerator


def run_algorithm(rmax: int) -> InvariantTable:
    """Fill c and d for r = 0..rmax by interpolating one column per row.

    Row r inherits columns i < r from the interpolants, gets its right half
    of c from the triangular relation, fixes the middle entry from the
    Catalan identity, finishes d from the inverse relation, and finally
    interpolates column r of each table through the rows 0..r.
    """
    if rmax < 0:
        raise ValueError("rmax must be nonnegative")
    c: list[list[int]] = [[1]]
    d: list[list[int]] = [[1]]
    polc: list[Poly] = [Poly.const(1)]
    pold: list[Poly] = [Poly.const(1)]
    for r in range(1, rmax + 1):
        n = 2 * r
        crow: list[Optional[int]] = [None] * (n + 1)
        drow: list[Optional[int]] = [None] * (n + 1)
        for i in range(r):
            drow[i] = _integral(pold[i](r), "d", r, i)
            crow[i] = _integral(polc[i](r), "c", r, i)
        for i in range(r):
            crow[n - i] = sum((-1) ** j * binom(n - j, n - i) * drow[j] for j in range(i + 1))
        s = sum((-1) ** j * crow[j] for j in range(r)) + sum((-1) ** j * crow[j] for j in range(r + 1, n + 1))
        crow[r] = (-1) ** r * (catalan(r) - s)
        for i in range(n + 1):
            val = sum((-1) ** j * binom(j, n - i) * crow[j] for j in range(n - i, n + 1))
            if i >= r:
                drow[i] = val
            elif val != drow[i]:
                raise UniquenessViolation(f"uniqueness violation: inherited d_{i}({r}) is inconsistent")
        c.append(crow)  # type: ignore[arg-type]
        d.append(drow)  # type: ignore[arg-type]
        polc.append(lagrange_interpolate([(m, c[m][r] if r <= 2 * m else 0) for m in range(r + 1)]))
        pold.append(lagrange_interpolate([(m, d[m][r] if r <= 2 * m else 0) for m in range(r + 1)]))
    return InvariantTable(rmax, c, d, polc, pold)


# ---------------------------------------------------------------------------
# Closed forms and recursion


def closed_form_c(i: int, r: int) -> int:
    """c_i(r) = binom(r, floor(i/2)) binom(r, floor((i+1)/2))."""
    return binom(r, i // 2) * binom(r, (i + 1) // 2)


def closed_form_d(i: int, r: int) -> int:
    """d_i(r) = sum_k binom(k, i-k) binom(r, k) C_k."""
    return sum(binom(k, i - k) * binom(r, k) * catalan(k) for k in range(i + 1))


def alt_form_c(i: int, r: int) -> int:
    """c_i(r) = sum_k (-1)^k binom(2r-2k, i-k) binom(r, k) C_k."""
    return sum((-1) ** k * binom(2 * r - 2 * k, i - k) * binom(r, k) * catalan(k) for k in range(r + 1))


def recursion_d(i: int, r: int, memo: Optional[dict] = None) -> int:
    """d_i(r) from the quadratic convolution recursion.

    d_0(r) = 1 and d_i(0) = 0 for i >= 1; otherwise d_i(r) is the sum of
    d_a(b) d_u(v) over a+u = i-1, b+v = r-1 plus the same sum over
    a+u = i-2, b+v = r-1.
    """
    if memo is None:
        memo = {}
    if i < 0 or r < 0:
        return 0
    if i == 0:
        return 1
    if r == 0:
        return 0
    key = (i, r)
    if key in memo:
        return memo[key]
    total = 0
    for shift in (1, 2):
        top = i - shift
        for a in range(top + 1):
            for b in range(r):
                left = recursion_d(a, b, memo)
                if left:
                    total += left * recursion_d(top - a, r - 1 - b, memo)
    memo[key] = total
    return total


def narayana(r: int, a: int) -> Fraction:
    """N_(r,a) = binom(r, a-1) binom(r, a) / r."""
    return Fraction(binom(r, a - 1) * binom(r, a), r)


# ---------------------------------------------------------------------------
# Generating functions
#
# g = sum_(r,i) d_i(r) x^r y^i and f = sum_(r,i) c_i(r) x^r y^i.


def _geometric_x(ox: int, oy: int) -> Series2:
    """1 / (1 - x)."""
    return Series2.from_function(lambda i, j: 1 if j == 0 else 0, ox, oy)


def _one_plus_y(ox: int, oy: int) -> Series2:
    return Series2([[1, 1]], ox, oy)


def g_catalan_form(ox: int, oy: int) -> Series2:
    """sum_k C_k x^k y^k (1+y)^k / (1-x)^(k+1)."""
    geo = _geometric_x(ox, oy)
    z = Series2.monomial(1, 1, ox, oy) * _one_plus_y(ox, oy) * geo
    cat = Series([catalan(k) for k in range(ox + oy + 1)], ox + oy)
    return cat.compose(z) * geo


def g_sqrt_form(ox: int, oy: int) -> Series2:
    """(1 - sqrt(1 - 4xy(1+y)/(1-x))) / (2xy(1+y))."""
    ex, ey = ox + 1, oy + 1
    w = Series2.monomial(1, 1, ex, ey) * _one_plus_y(ex, ey) * _geometric_x(ex, ey) * 4
    numer = 1 - (1 - w).sqrt()
    return numer.shift_down(1, 1) / (_one_plus_y(ox, oy) * 2)


def f_sqrt_form(ox: int, oy: int) -> Series2:
    """(1 - sqrt(1 + 4xy/(1 - x(1+y)^2))) / (-2xy)."""
    ex, ey = ox + 1, oy + 1
    opy = _one_plus_y(ex, ey)
    denom = 1 - Series2.monomial(1, 0, ex, ey) * opy * opy
    w = Series2.monomial(1, 1, ex, ey) * 4 / denom
    numer = 1 - (1 + w).sqrt()
    return numer.shift_down(1, 1) / (-2)


def f_from_g(g: Series2) -> Series2:
    """Substitute x -> x(1+y)^2, y -> -1/(1+y) into g, coefficientwise.

    Each monomial x^r y^j of g with j <= 2r becomes (-1)^j x^r (1+y)^(2r-j),
    a polynomial, so the substitution is well defined on the grid.
    """
    ox, oy = g.ox, g.oy

    def coeff(r: int, i: int) -> Fraction:
        return sum(
            ((-1) ** j * binom(2 * r - j, i) * g[r, j] for j in range(min(2 * r, oy) + 1)),
            Fraction(0),
        )

    if oy < 2 * ox:
        raise ValueError("need oy >= 2*ox so every row of g is complete")
    return Series2.from_function(coeff, ox, oy)


def generating_g(ox: int, oy: int) -> Series2:
    """Generating function of d_i(r); the Catalan and radical forms must agree."""
    cat = g_catalan_form(ox, oy)
    rad = g_sqrt_form(ox, oy)
    if cat != rad:
        raise ArithmeticError("the two expressions for g disagree")
    return cat


def generating_f(ox: int, oy: int) -> Series2:
    """Generating function of c_i(r) from its radical form."""
    return f_sqrt_form(ox, oy)


# ---------------------------------------------------------------------------
# Column series, their numerators and the Dyck table


def p_series(i: int, rmax: int) -> Series:
    """sum_r d_i(r) x^r modulo x^(rmax+1)."""
    return Series([closed_form_d(i, r) for r in range(rmax + 1)], rmax)


def q_poly(i: int) -> Poly:
    """q_i = (1-x)^(i+1) p_i(x) / x^floor((i+1)/2), a polynomial of degree floor(i/2).

    Polynomiality is certified by checking that the truncated product has
    no terms between degree i and a margin of extra terms.
    """
    if i < 0:
        raise ValueError("i must be nonnegative")
    margin = i + 4
    p = p_series(i, margin)
    prod = p * Series.from_poly(Poly((1, -1)) ** (i + 1), margin)
    shift = (i + 1) // 2
    coeffs = prod.coeffs
    if any(coeffs[k] for k in range(shift)) or any(coeffs[k] for k in range(shift + i // 2 + 1, margin + 1)):
        raise ArithmeticError(f"column series {i} does not have the expected numerator")
    return Poly(coeffs[shift : shift + i // 2 + 1])


def dyck_T(n: int, k: int) -> int:
    """Dyck paths of semilength n with k long ascents, via the closed sum."""
    if n < 0 or not 0 <= k <= n // 2:
        raise ValueError(f"need n >= 0 and 0 <= k <= n/2, got n={n}, k={k}")
    if k == 0:
        return 1
    total = sum(binom(j - k - 1, k - 1) * binom(n + 1 - k, n - j) for j in range(2 * k, n + 1))
    val = Fraction(binom(n + 1, k) * total, n + 1)
    if val.denominator != 1:
        raise ArithmeticError("Dyck count is not an integer")
    return val.numerator


@dataclass(frozen=True)
class DyckTable:
    rows: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"rows": [[str(v) for v in row] for row in self.rows]}


def dyck_table(nmax: int) -> DyckTable:
    return DyckTable(tuple(tuple(dyck_T(n, k) for k in range(n // 2 + 1)) for n in range(nmax + 1)))


def kl_reversal_check(n: int) -> bool:
    """Coefficients of q_n read from the top equal T(n, 0), T(n, 1), ..."""
    q = q_poly(n)
    top = n // 2
    return all(q[top - k] == dyck_T(n, k) for k in range(top + 1))


# ---------------------------------------------------------------------------
# Property checks on a computed table


@dataclass
class PropertyReport:
    rows_checked: int = 0
    failures: list[tuple[str, int, Optional[int]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, check: str, r: int, i: Optional[int] = None) -> None:
        self.failures.append((check, r, i))


def property_suite(table: InvariantTable) -> PropertyReport:
    """Structural checks every row of a valid table must satisfy."""
    rep = PropertyReport()
    for r in range(table.rmax + 1):
        crow, drow = table.c[r], table.d[r]
        n = 2 * r
        rep.rows_checked += 1
        for i in range(n + 1):
            if crow[i] != crow[n - i]:
                rep.fail("symmetry", r, i)
            if crow[i] <= 0:
                rep.fail("positivity", r, i)
            # Strict below the top entry; at i = 2r both sides equal 1.
            if r >= 1 and i < n and binom(n + 1, n - i) <= crow[i]:
                rep.fail("upper_bound", r, i)
            if i == n and crow[i] != 1:
                rep.fail("upper_bound", r, i)
            if drow[i] <= 0:
                rep.fail("no_internal_zeros", r, i)
        for i in range(1, n):
            if drow[i - 1] * drow[i + 1] > drow[i] ** 2:
                rep.fail("log_concavity", r, i)
        if sum((-1) ** i * v for i, v in enumerate(crow)) != catalan(r):
            rep.fail("catalan_identity", r)
        if sum((-1) ** j * v for j, v in enumerate(drow)) != crow[0]:
            rep.fail("alternating_degree_sum", r)
        if r >= 1:
            for a in range(r + 1):
                if crow[2 * a] != binom(r, a) ** 2:
                    rep.fail("even_coefficient_family", r, 2 * a)
            for a in range(1, r + 1):
                # Narayana via an independent product form.
                nar = Fraction(binom(r - 1, a - 1) * binom(r, a - 1), a)
                if crow[2 * a - 1] != r * nar or nar != narayana(r, a):
                    rep.fail("narayana_family", r, 2 * a - 1)
            if sum(narayana(r, a) for a in range(1, r + 1)) != catalan(r):
                rep.fail("narayana_sum", r)
        if aluffi_c_from_d(r, drow) != crow or aluffi_d_from_c(r, crow) != drow:
            rep.fail("triangular_relations", r)
    return rep
