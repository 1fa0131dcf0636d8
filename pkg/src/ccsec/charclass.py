"""Characteristic classes of hypersurfaces in projective space.

Everything here is driven by the projective degrees of a rational map
P^n --> P^n given by forms of a common degree: Segre classes of the base
scheme, Chern-Schwartz-MacPherson classes of the hypersurface and its
complement, Fulton and Milnor classes, and the degree of the gradient map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .algebra import ChowClass, Poly, as_int, binom, chow_section_operator, involution_I


@dataclass(frozen=True)
class DegreeVector:
    """Projective degrees (d_0, ..., d_n) of a map defined by forms of degree r_gen."""

    n: int
    entries: tuple[int, ...]
    r_gen: int

    def __post_init__(self) -> None:
        entries = tuple(int(d) for d in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.n < 1:
            raise ValueError("ambient dimension must be at least 1")
        if len(entries) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} projective degrees, got {len(entries)}")
        if any(d < 0 for d in entries):
            raise ValueError("projective degrees are nonnegative")
        if self.r_gen < 1:
            raise ValueError("forms defining the map have positive degree")


class MilnorClass(NamedTuple):
    cls: ChowClass
    mu: Fraction
    mu_plus_section: Fraction

    @property
    def mu_section(self) -> Fraction:
        return self.mu_plus_section - self.mu


class ChiGamma(NamedTuple):
    gamma: Poly
    chi: Poly
    section_coeffs: tuple[Fraction, ...]


def segre_from_degrees(dv: DegreeVector) -> ChowClass:
    """Segre class of the base scheme, pushed forward to P^n.

    >>> str(segre_from_degrees(DegreeVector(4, (1, 2, 4, 4, 2), 2)))
    '-18h^4 + 4h^3'
    """
    n, r, d = dv.n, dv.r_gen, dv.entries
    if d[0] != 1:
        raise ValueError("a map out of P^n has d_0 = 1")
    s = [0] * (n + 1)
    for ell in range(1, n + 1):
        s[ell] = -sum((-1) ** (ell - i) * binom(ell, i) * d[i] * r ** (ell - i) for i in range(ell + 1))
    return ChowClass(n, s)


def degrees_from_segre(n: int, r_gen: int, s: ChowClass) -> DegreeVector:
    if s.ambient_dim != n:
        raise ValueError("Segre class lives in the wrong ambient space")
    if s[0] != 0:
        raise ValueError("the Segre class of a proper base scheme has no h^0 term")
    d = []
    for k in range(n + 1):
        val = r_gen**k - sum(binom(k, j) * s[j] * r_gen ** (k - j) for j in range(1, k + 1))
        d.append(as_int(val))
    return DegreeVector(n, tuple(d), r_gen)


def csm_complement(dv: DegreeVector) -> ChowClass:
    """Class of P^n minus the hypersurface: sum of d_j (-h)^j (1+h)^(n-j)."""
    n = dv.n
    out = ChowClass.zero(n)
    for j, dj in enumerate(dv.entries):
        if dj:
            term = ChowClass.hyperplane(n, j) * ChowClass.one_plus_h_power(n, n - j)
            out = out + term * ((-1) ** j * dj)
    return out


def csm_hypersurface(dv: DegreeVector) -> ChowClass:
    n = dv.n
    return ChowClass.one_plus_h_power(n, n + 1) - csm_complement(dv)


def degrees_from_csm(csm: ChowClass, r_gen: int) -> DegreeVector:
    """Invert :func:`csm_hypersurface`.

    The coefficient map d -> complement class is an involution on
    h-coefficient vectors, so the inverse has the same shape.
    """
    n = csm.ambient_dim
    comp = ChowClass.one_plus_h_power(n, n + 1) - csm
    d = [
        as_int(sum((-1) ** k * comp[k] * binom(n - k, j - k) for k in range(j + 1)))
        for j in range(n + 1)
    ]
    return DegreeVector(n, tuple(d), r_gen)


def truncate_degrees(dv: DegreeVector) -> DegreeVector:
    """Degrees of the gradient map of a general hyperplane section.

    They agree with the first n entries of the original vector.
    """
    if dv.n < 2:
        raise ValueError("need n >= 2 to take a hyperplane section")
    return DegreeVector(dv.n - 1, dv.entries[:-1], dv.r_gen)


def fulton_hypersurface(n: int, k: int) -> ChowClass:
    """Fulton class (1+h)^(n+1) * kh/(1+kh) of a degree-k hypersurface in P^n."""
    if k < 1:
        raise ValueError("hypersurface degree must be positive")
    tail = ChowClass(n, [0] + [(-1) ** (j - 1) * k**j for j in range(1, n + 1)])
    return ChowClass.one_plus_h_power(n, n + 1) * tail


def milnor_class(fulton: ChowClass, csm: ChowClass, dim_x: int) -> MilnorClass:
    """Milnor class (-1)^dim X (c_F - c_SM) with its degree and alternating sum.

    ``mu_plus_section`` is the degree of M/(1+h), which equals the sum of
    the Parusinski number of X and that of a general hyperplane section.
    """
    m = (fulton - csm) * ((-1) ** dim_x)
    n = m.ambient_dim
    mu_plus = m * ChowClass.one_plus_h_power(n, -1)
    return MilnorClass(m, m.degree(), mu_plus.degree())


def grad_degree_isolated(n: int, k: int, mus: Sequence[int]) -> int:
    """Degree of the gradient map of a hypersurface with isolated singularities."""
    return (k - 1) ** n - sum(mus)


def grad_degree_milnor(n: int, k: int, mu: int, mu_section: int) -> int:
    return (k - 1) ** n - mu - mu_section


def grad_degree_chi(n: int, chi_x: int, chi_section: int) -> int:
    """Degree of the gradient map from Euler characteristics of X and X cut by a general hyperplane."""
    return (-1) ** n * (1 - (chi_x - chi_section))


def section_class_coeffs(csm: ChowClass) -> tuple[Fraction, ...]:
    """Coefficients b_1..b_(n-1) of the class of a general hyperplane section.

    b_k = sum over i <= k of (-1)^(k-i) a_i, read in P^(n-1).
    """
    a = csm.coeffs
    n = csm.ambient_dim
    return tuple(sum((-1) ** (k - i) * a[i] for i in range(1, k + 1)) for k in range(1, n))


def chi_gamma_relations(csm: ChowClass) -> ChiGamma:
    """Dimension-indexed class polynomial and the Euler characteristic polynomial.

    gamma(t) has the [P^i] coefficient at t^i, and chi(t) = I(gamma) carries
    (-1)^r times the Euler characteristic of X cut by r general hyperplanes.
    """
    if csm[0] != 0:
        raise ValueError("class of a proper subvariety has no h^0 term")
    gamma = Poly(csm.dim_coeffs())
    return ChiGamma(gamma, involution_I(gamma), section_class_coeffs(csm))


def euler_characteristics_of_sections(csm: ChowClass) -> list[Fraction]:
    """Euler characteristics of X, X cut by one hyperplane, two, ..., via the section operator."""
    out = []
    cls = csm
    for _ in range(csm.ambient_dim + 1):
        out.append(cls.degree())
        cls = chow_section_operator(cls)
    return out


@dataclass(frozen=True)
class HypersurfaceReport:
    n: int
    k: int
    degrees: DegreeVector
    csm: ChowClass
    fulton: ChowClass
    milnor: ChowClass
    mu: int
    mu_section: int
    grad_degree: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "csm": self.csm.to_json(),
            "fulton": self.fulton.to_json(),
            "milnor": self.milnor.to_json(),
            "mu": self.mu,
            "mu_section": self.mu_section,
            "grad_degree": self.grad_degree,
        }


def hypersurface_report(dv: DegreeVector, k: int) -> HypersurfaceReport:
    """Full pipeline for a degree-k hypersurface whose polar map has degrees ``dv``.

    The polar map is given by the partials, so ``dv.r_gen`` must be k - 1.
    The section Milnor number is computed from the hyperplane section's own
    classes and cross-checked against the alternating-sum functional.
    """
    if dv.r_gen != k - 1:
        raise ValueError("the gradient map of a degree-k form is given by forms of degree k-1")
    n = dv.n
    csm = csm_hypersurface(dv)
    fulton = fulton_hypersurface(n, k)
    mil = milnor_class(fulton, csm, n - 1)
    sec_csm = chow_section_operator(csm)
    if sec_csm != csm_hypersurface(truncate_degrees(dv)).pushforward():
        raise ArithmeticError("section class disagrees with the truncated degree vector")
    sec_fulton = fulton_hypersurface(n - 1, k).pushforward()
    sec_mil = milnor_class(sec_fulton, sec_csm, n - 2)
    mu, mu_section = as_int(mil.mu), as_int(sec_mil.mu)
    if mil.mu_section != mu_section:
        raise ArithmeticError("section Milnor number disagrees with the alternating-sum functional")
    grad = grad_degree_milnor(n, k, mu, mu_section)
    if grad != dv.entries[n]:
        raise ArithmeticError("gradient degree disagrees with the top projective degree")
    chis = euler_characteristics_of_sections(csm)
    if grad != grad_degree_chi(n, as_int(chis[0]), as_int(chis[1])):
        raise ArithmeticError("gradient degree disagrees with the Euler characteristic formula")
    return HypersurfaceReport(n, k, dv, csm, fulton, mil.cls, mu, mu_section, grad)
