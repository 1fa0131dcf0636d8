"""Invariants of secant varieties of the rational normal curve C in P^n.

The k-secant variety is cut out by the (k+1)-minors of a Hankel matrix of
coordinates. For n = 2r and k = r it is the hypersurface det H = 0 of
degree r+1, whose gradient map has projective degrees d_i(r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import ChowClass, as_int, binom, catalan
from .charclass import DegreeVector, csm_hypersurface


@dataclass(frozen=True)
class HankelShape:
    """A rows x cols Hankel matrix whose (a, b) entry is the coordinate x_(a+b)."""

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("Hankel shape needs positive sides")

    @property
    def num_coords(self) -> int:
        return self.rows + self.cols - 1


@dataclass(frozen=True)
class EulerCertificate:
    """Euler characteristic with the torus-fixed points that witness it."""

    chi: int
    fixed_points: tuple[int, ...]

    def to_json(self) -> dict:
        return {"chi": self.chi, "fixed_points": list(self.fixed_points)}


@dataclass(frozen=True)
class SecantInvariants:
    n: int
    k: int
    dim: int
    degree: int
    euler_char: int
    mather_class: Optional[ChowClass] = None
    polar_degrees: Optional[tuple[int, ...]] = None
    g_ed_degree: Optional[int] = None
    grad_degree: Optional[int] = None
    chi_section: Optional[int] = None
    low_degrees: Optional[tuple[int, ...]] = None
    csm: Optional[ChowClass] = None
    degrees: Optional[tuple[int, ...]] = None
    conjectural: bool = False
    fixed_points: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        out: dict = {
            "n": self.n,
            "k": self.k,
            "dim": self.dim,
            "degree": self.degree,
            "euler_char": self.euler_char,
            "fixed_points": list(self.fixed_points),
        }
        if self.mather_class is not None:
            out.update(
                mather_class=self.mather_class.to_json(),
                polar_degrees=list(self.polar_degrees or ()),
                g_ed_degree=self.g_ed_degree,
                grad_degree=self.grad_degree,
                chi_section=self.chi_section,
                low_degrees=list(self.low_degrees or ()),
                conjectural=self.conjectural,
            )
        if self.csm is not None:
            out["csm"] = self.csm.to_json()
            out["degrees"] = list(self.degrees or ())
        return out


def _check_nk(n: int, k: int) -> None:
    if k < 1 or 2 * k > n:
        raise ValueError(f"need 1 <= k <= n/2, got n={n}, k={k}")


def secant_basics(n: int, k: int) -> tuple[int, int]:
    """(dimension, degree) of the k-secant variety in P^n."""
    _check_nk(n, k)
    return 2 * k - 1, binom(n - k + 1, k)


def hankel_matrix(rows: int, cols: int, point: Sequence[int]) -> list[list[int]]:
    """Hankel matrix with entry (a, b) equal to point[a + b]."""
    if len(point) != rows + cols - 1:
        raise ValueError("point has the wrong number of coordinates for this shape")
    return [[point[a + b] for b in range(cols)] for a in range(rows)]


def integer_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Exact rank by fraction-free elimination."""
    m = [list(row) for row in matrix]
    rank, rows = 0, len(m)
    cols = len(m[0]) if m else 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[i][j] * m[rank][c] - m[i][c] * m[rank][j]) // prev
            m[i][c] = 0
        prev = m[rank][c]
        rank += 1
    return rank


def hankel_rank_at_coordinate_point(shape: HankelShape, i: int) -> int:
    """Rank of the Hankel matrix evaluated at the coordinate point e_i."""
    if not 0 <= i < shape.num_coords:
        raise ValueError("coordinate index out of range")
    e = [0] * shape.num_coords
    e[i] = 1
    return integer_rank(hankel_matrix(shape.rows, shape.cols, e))


def euler_char_secant(n: int, k: int) -> EulerCertificate:
    """Count coordinate points e_i lying on the k-secant variety.

    A point is on the variety exactly when the (k+1) x (n-k+1) Hankel matrix
    has rank at most k there; the torus fixed points are the e_i that pass.
    """
    _check_nk(n, k)
    shape = HankelShape(k + 1, n - k + 1)
    fixed = tuple(i for i in range(n + 1) if hankel_rank_at_coordinate_point(shape, i) <= k)
    expected = tuple(range(k)) + tuple(range(n - k + 1, n + 1))
    if fixed != expected or len(fixed) != 2 * k:
        raise AssertionError(f"fixed-point certificate mismatch at n={n}, k={k}: {fixed}")
    return EulerCertificate(len(fixed), fixed)


def mather_class_secant(r: int) -> ChowClass:
    """Chern-Mather class of the hypersurface Sec_r C in P^(2r).

    Computed as (1+h)^r times sum_j binom(r+1, 2j+1) h^(2j+1) and
    cross-checked against the coefficient formulas and the involution from
    the dual Veronese variety.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    n = 2 * r
    odd = ChowClass(n, [binom(r + 1, i) if i % 2 else 0 for i in range(n + 1)])
    cls = ChowClass.one_plus_h_power(n, r) * odd
    if cls.dim_coeffs() != tuple(Fraction(c) for c in mather_dim_coeffs(r)):
        raise ArithmeticError("Chern-Mather class disagrees with its coefficient formulas")
    if cls != mather_from_dual(r):
        raise ArithmeticError("Chern-Mather class disagrees with the dual Veronese involution")
    return cls


def mather_dim_coeffs(r: int) -> list[int]:
    """[P^j] coefficients of the Chern-Mather class from the parity-split sums."""
    out = []
    for j in range(2 * r + 1):
        if j % 2 == 0:
            top = r - (j + 2) // 2
            val = sum(binom(r, 2 * i + 1) * binom(r + 1, 2 * (r - i) - j - 1) for i in range(top + 1))
        else:
            top = r - (j + 1) // 2
            val = sum(binom(r, 2 * i) * binom(r + 1, 2 * (r - i) - j) for i in range(top + 1))
        out.append(val)
    return out


def veronese_dual_mather(r: int) -> ChowClass:
    """Chern-Mather class of the second Veronese embedding of P^r, in the dual P^(2r)."""
    n = 2 * r
    return ChowClass.from_dim_coeffs(n, [binom(r + 1, r - j) * 2**j for j in range(r + 1)])


def mather_from_dual(r: int) -> ChowClass:
    """Apply the projective-duality involution to the dual Veronese class.

    With q(h) the dual class as a polynomial in h, the result is
    (-1)^(r+1) (q(-1-h) - q(-1)((1+h)^(2r+1) - h^(2r+1))).
    """
    n = 2 * r
    q = veronese_dual_mather(r).coeffs
    q_at_minus_one = sum((-1) ** i * a for i, a in enumerate(q))
    sign = (-1) ** (r + 1)
    out = []
    for m in range(n + 1):
        # [h^m] of q(-1-h) is sum_i q_i (-1)^i binom(i, m).
        shifted = sum((-1) ** i * a * binom(i, m) for i, a in enumerate(q) if i >= m)
        out.append(sign * (shifted - q_at_minus_one * binom(n + 1, m)))
    return ChowClass(n, out)


def polar_degrees_secant(r: int) -> tuple[int, ...]:
    """Polar degrees delta_0..delta_(2r-1) from the Chern-Mather class."""
    cma = mather_class_secant(r)
    n = 2 * r
    deltas = tuple(
        as_int(sum((-1) ** (j + 1) * binom(j + 1, i + 1) * cma.dim_coeff(j) for j in range(i, n)))
        for i in range(n)
    )
    if min(deltas) < 0:
        raise ArithmeticError(f"negative polar degree at r={r}")
    return deltas


def g_ed_degree_secant(r: int) -> int:
    """Generic Euclidean distance degree (3^(r+1) - 1) / 2, checked two other ways."""
    closed = (3 ** (r + 1) - 1) // 2
    polar = sum(polar_degrees_secant(r))
    dual = sum(
        (-1) ** (r + j) * binom(r + 1, r - j) * 2**j * (2 ** (j + 1) - 1) for j in range(r + 1)
    )
    if not closed == polar == dual:
        raise ArithmeticError(f"ED degree mismatch: {closed}, {polar}, {dual}")
    return closed


def grad_degree_secant(r: int) -> int:
    """Degree of the gradient map of det H in P^(2r): the Catalan number C_r."""
    return catalan(r)


def chi_section_secant(r: int) -> int:
    """Euler characteristic of a general hyperplane section of Sec_r C."""
    return catalan(r) - 1 + 2 * r


def low_projective_degrees(r: int) -> tuple[int, ...]:
    """Projective degrees d_0..d_4 of the gradient map, from their polynomial formulas."""
    vals = (
        Fraction(1),
        Fraction(r),
        Fraction(r * r),
        Fraction(r * (r - 1) * (5 * r + 2), 6),
        Fraction(r * (r - 1) * (7 * r * r - 5 * r - 6), 12),
    )
    return tuple(as_int(v) for v in vals)


def csm_secant(r: int, d_row: Sequence[int]) -> ChowClass:
    """CSM class of Sec_r C in P^(2r) from a row of projective degrees."""
    return csm_hypersurface(DegreeVector(2 * r, tuple(d_row), r))


def secant_invariants(n: int, k: int, d_row: Optional[Sequence[int]] = None, conjectural: bool = False) -> SecantInvariants:
    """Collect the invariants of the k-secant in P^n.

    The hypersurface case n = 2k adds the Chern-Mather class and its
    consequences; passing ``d_row`` also attaches the CSM class.
    """
    dim, deg = secant_basics(n, k)
    cert = euler_char_secant(n, k)
    base = dict(n=n, k=k, dim=dim, degree=deg, euler_char=cert.chi, fixed_points=cert.fixed_points)
    if n != 2 * k:
        return SecantInvariants(**base)
    r = k
    extra = dict(
        mather_class=mather_class_secant(r),
        polar_degrees=polar_degrees_secant(r),
        g_ed_degree=g_ed_degree_secant(r),
        grad_degree=grad_degree_secant(r),
        chi_section=chi_section_secant(r),
        low_degrees=low_projective_degrees(r),
        conjectural=conjectural,
    )
    if d_row is not None:
        extra["csm"] = csm_secant(r, d_row)
        extra["degrees"] = tuple(d_row)
    return SecantInvariants(**base, **extra)
