"""Invariant suites run by ``ccsec verify`` and by the test-suite.

Each suite returns a list of failure messages; an empty list means pass.
Randomized checks use a fixed seed so every run is reproducible.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import golden
from .algebra import ChowClass, Poly, Series, binom, catalan, chow_section_operator, involution_I, lagrange_interpolate
from .charclass import (
    DegreeVector,
    csm_complement,
    csm_hypersurface,
    degrees_from_csm,
    degrees_from_segre,
    fulton_hypersurface,
    grad_degree_chi,
    grad_degree_milnor,
    hypersurface_report,
    milnor_class,
    segre_from_degrees,
)
from .conjecture import (
    aluffi_c_from_d,
    aluffi_d_from_c,
    alt_form_c,
    closed_form_c,
    closed_form_d,
    dyck_T,
    f_from_g,
    generating_f,
    generating_g,
    kl_reversal_check,
    property_suite,
    q_poly,
    recursion_d,
    run_algorithm,
)
from .hilbert import (
    HilbertSeries,
    abhyankar_numerator,
    determinantal_series,
    eagon_northcott_numerator,
    genus_closed_form,
    hilbert_polynomial,
    maximal_minor_numerator,
    secant_hilbert_series,
    section_curve_genus,
)
from .secant import (
    csm_secant,
    euler_char_secant,
    g_ed_degree_secant,
    low_projective_degrees,
    mather_class_secant,
    polar_degrees_secant,
)

ONE_MINUS_T = Poly((1, -1))


def _rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-50, 50), rng.randint(1, 20))


def algebra_suite(rmax: int, nmax: int) -> list[str]:
    rng = random.Random(1)
    out = []
    for _ in range(200):
        a, b = _rand_fraction(rng), _rand_fraction(rng)
        if (a + b) - b != a or (b != 0 and (a * b) / b != a):
            out.append(f"rational arithmetic failed on {a}, {b}")
    for a in range(31):
        for d in range(a + 1):
            if binom(a, d) != factorial(a) // (factorial(d) * factorial(a - d)):
                out.append(f"binom({a},{d}) disagrees with factorials")
        if binom(a, a + 1) != 0:
            out.append(f"binom({a},{a + 1}) is not zero")
    for _ in range(50):
        xs = rng.sample(range(-30, 30), rng.randint(1, 8))
        pts = [(x, _rand_fraction(rng)) for x in xs]
        p = lagrange_interpolate(pts)
        if any(p(x) != y for x, y in pts):
            out.append(f"interpolant misses a node in {pts}")
    for _ in range(30):
        order = rng.randint(0, 10)
        s = Series([1] + [_rand_fraction(rng) for _ in range(order)], order)
        if s.sqrt() * s.sqrt() != s:
            out.append("series sqrt does not square back")
        if s * s.inverse() != Series.one(order):
            out.append("series inverse failed")
    for _ in range(30):
        p = Poly(rng.randint(-9, 9) for _ in range(rng.randint(0, 21)))
        if involution_I(involution_I(p)) != p:
            out.append(f"involution is not an involution on {p}")
    for _ in range(30):
        n = rng.randint(0, 8)
        a, b, c = (ChowClass(n, [rng.randint(-9, 9) for _ in range(n + 1)]) for _ in range(3))
        if a * b != b * a or (a * b) * c != a * (b * c):
            out.append("Chow product is not commutative and associative")
        if ChowClass.hyperplane(n, n) * ChowClass.hyperplane(n, 1) != ChowClass.zero(n):
            out.append("h^(n+1) does not vanish")
    return out


def _random_degree_vector(rng: random.Random, n: int) -> DegreeVector:
    return DegreeVector(n, (1,) + tuple(rng.randint(0, 50) for _ in range(n)), rng.randint(1, 5))


def charclass_suite(rmax: int, nmax: int) -> list[str]:
    rng = random.Random(2)
    out = []
    for _ in range(100):
        dv = _random_degree_vector(rng, rng.randint(1, 8))
        if degrees_from_segre(dv.n, dv.r_gen, segre_from_degrees(dv)) != dv:
            out.append(f"Segre round trip failed on {dv}")
        csm = csm_hypersurface(dv)
        if csm + csm_complement(dv) != ChowClass.one_plus_h_power(dv.n, dv.n + 1):
            out.append(f"inclusion-exclusion failed on {dv}")
        if degrees_from_csm(csm, dv.r_gen) != dv:
            out.append(f"CSM inversion failed on {dv}")
        lhs = csm.degree() - chow_section_operator(csm).degree()
        if lhs != 1 - (-1) ** dv.n * dv.entries[-1]:
            out.append(f"Euler characteristic drop identity failed on {dv}")
    for n in range(2, 9):
        for k in range(1, 7):
            cf = fulton_hypersurface(n, k)
            sec = fulton_hypersurface(n - 1, k).pushforward()
            if cf.degree() - sec.degree() != 1 - (-1) ** n * (k - 1) ** n:
                out.append(f"Fulton drop identity failed at n={n}, k={k}")
            if milnor_class(cf, cf, n - 1).cls != ChowClass.zero(n):
                out.append(f"smooth Milnor class nonzero at n={n}, k={k}")
    degs = golden.projective_degrees()
    for r in range(1, min(rmax, max(degs)) + 1):
        dv = DegreeVector(2 * r, degs[r], r)
        rep = hypersurface_report(dv, r + 1)
        chi = csm_hypersurface(dv).degree()
        chi_sec = chow_section_operator(csm_hypersurface(dv)).degree()
        if not (
            rep.grad_degree
            == grad_degree_milnor(2 * r, r + 1, rep.mu, rep.mu_section)
            == grad_degree_chi(2 * r, int(chi), int(chi_sec))
            == catalan(r)
        ):
            out.append(f"gradient degree formulas disagree for Sec_{r} C")
    return out


def hilbert_suite(rmax: int, nmax: int) -> list[str]:
    out = []
    for k in range(1, 7):
        for c in range(6):
            q = maximal_minor_numerator(k, c)
            if abhyankar_numerator(k + 1 + c, k + 1, k) != q:
                out.append(f"determinant numerator differs at k={k}, c={c}")
            if eagon_northcott_numerator(k + 1, c) != q * ONE_MINUS_T ** (c + 1):
                out.append(f"resolution numerator differs at k={k}, c={c}")
            if list(q.coeffs) != [binom(c + j, j) for j in range(k + 1)]:
                out.append(f"h-vector wrong at k={k}, c={c}")
    # Maximal minors of the Hankel matrix: slicing the generic determinantal
    # ring by the anti-diagonal identifications gives the secant series, for
    # either orientation of the matrix.
    for n in range(2, 11):
        for k in range(1, n // 2 + 1):
            shapes = [(k + 1, n - k + 1), (n - k + 1, k + 1)]
            target = secant_hilbert_series(n, k)
            for m, cols in shapes:
                gen = determinantal_series(m, cols, k)
                cut = gen.times_one_minus_t(m * cols - (n + 1))
                if not cut.same_series(target):
                    out.append(f"Hankel slicing mismatch at shape {m}x{cols}, k={k}")
            if target.degree != binom(n - k + 1, k):
                out.append(f"secant degree wrong at n={n}, k={k}")
            hp = hilbert_polynomial(target)
            for t in range(target.numerator.degree, 3 * max(target.numerator.degree, 1) + 1):
                if hp(t) != target.coefficient(t):
                    out.append(f"Hilbert polynomial misses series at n={n}, k={k}, t={t}")
            cut = hilbert_polynomial(target.times_one_minus_t())
            if cut.coeffs != hp.coeffs[1:]:
                out.append(f"hyperplane shift of Hilbert polynomial fails at n={n}, k={k}")
    for r in range(2, 41):
        if section_curve_genus(r) != genus_closed_form(r):
            out.append(f"genus mismatch at r={r}")
    return out


def secant_suite(rmax: int, nmax: int) -> list[str]:
    out = []
    for r in range(1, 31):
        cma = mather_class_secant(r)
        if any(a <= 0 for a in cma.coeffs[1:]):
            out.append(f"Chern-Mather class not positive at r={r}")
        deltas = polar_degrees_secant(r)
        closed = (3 ** (r + 1) - 1) // 2
        if min(deltas) < 0 or sum(deltas) != closed or g_ed_degree_secant(r) != closed:
            out.append(f"polar degree sum wrong at r={r}")
        low = low_projective_degrees(r)
        if list(low) != [closed_form_d(i, r) for i in range(5)]:
            out.append(f"low projective degrees disagree at r={r}")
    for n in range(2, 17):
        for k in range(1, n // 2 + 1):
            try:
                if euler_char_secant(n, k).chi != 2 * k:
                    out.append(f"Euler characteristic wrong at n={n}, k={k}")
            except AssertionError as exc:
                out.append(str(exc))
    table = run_algorithm(min(max(rmax, 1), 10))
    for r in range(1, table.rmax + 1):
        csm = csm_secant(r, table.d[r])
        if any(a <= 0 for a in csm.dim_coeffs()[:-1]) or csm.dim_coeff(2 * r) != 0:
            out.append(f"CSM of Sec_{r} C not positive below the top")
        if csm.degree() != 2 * r:
            out.append(f"CSM degree of Sec_{r} C is not 2r")
    return out


def conjecture_suite(rmax: int, nmax: int) -> list[str]:
    out = []
    table = run_algorithm(rmax)
    for r in range(rmax + 1):
        if table.c[r] != [closed_form_c(i, r) for i in range(2 * r + 1)]:
            out.append(f"c-row {r} differs from the closed form")
        if table.d[r] != [closed_form_d(i, r) for i in range(2 * r + 1)]:
            out.append(f"d-row {r} differs from the closed form")
        if table.d[r][2 * r] != catalan(r):
            out.append(f"top degree of row {r} is not Catalan")
        if any(alt_form_c(i, r) != closed_form_c(i, r) for i in range(2 * r + 1)):
            out.append(f"alternative c formula differs at r={r}")
    rep = property_suite(table)
    out += [f"property {name} fails at r={r}, i={i}" for name, r, i in rep.failures]
    memo: dict = {}
    for r in range(min(rmax, 15) + 1):
        for i in range(2 * r + 1):
            if recursion_d(i, r, memo) != closed_form_d(i, r):
                out.append(f"recursion differs at i={i}, r={r}")
    g, f = generating_g(12, 12), generating_f(12, 12)
    for r in range(13):
        for i in range(13):
            want_d = closed_form_d(i, r) if i <= 2 * r else 0
            want_c = closed_form_c(i, r) if i <= 2 * r else 0
            if g[r, i] != want_d or f[r, i] != want_c:
                out.append(f"generating function coefficient wrong at x^{r} y^{i}")
    if f_from_g(generating_g(6, 12)) != generating_f(6, 12):
        out.append("substitution law between the generating functions fails")
    for n in range(nmax + 1):
        if not kl_reversal_check(n):
            out.append(f"q_{n} does not reverse to the Dyck row")
    for r in range(41):
        if sum((-1) ** i * closed_form_c(i, r) for i in range(2 * r + 1)) != catalan(r):
            out.append(f"Catalan alternating sum fails at r={r}")
    rng = random.Random(3)
    for _ in range(200):
        r = rng.randint(0, 8)
        row = [rng.randint(-100, 100) for _ in range(2 * r + 1)]
        if aluffi_d_from_c(r, aluffi_c_from_d(r, row)) != row:
            out.append(f"triangular relations are not inverse at r={r}")
    return out


def golden_suite(rmax: int, nmax: int) -> list[str]:
    """Compare computed values with the reference tables under data/."""
    out = []
    cs, ds = golden.complement_classes(), golden.projective_degrees()
    top = max(max(cs), max(ds))
    table = run_algorithm(top)
    for r, row in ds.items():
        if tuple(table.d[r]) != row:
            out.append(f"algorithm d-row {r} differs from the reference table")
    for r, row in cs.items():
        if tuple(table.c[r]) != row:
            out.append(f"algorithm c-row {r} differs from the reference table")
    for r in range(golden.DIRECT_RMAX + 1):
        if aluffi_c_from_d(r, list(ds[r])) != list(cs[r]):
            out.append(f"directly computed rows {r} violate the triangular relation")
    polys = golden.interpolants()
    for i, p in polys["polc"].items():
        if table.polc[i] != p:
            out.append(f"interpolant polc_{i} differs")
    for i, p in polys["pold"].items():
        if table.pold[i] != p:
            out.append(f"interpolant pold_{i} differs")
    for i, q in golden.column_numerators().items():
        if q_poly(i) != q:
            out.append(f"column numerator q_{i} differs")
    for n, row in golden.dyck_rows().items():
        if tuple(dyck_T(n, k) for k in range(n // 2 + 1)) != row:
            out.append(f"Dyck row {n} differs")
    mp = golden.mather_polar()
    for r, row in mp["mather"].items():
        if mather_class_secant(r) != ChowClass(2 * r, row):
            out.append(f"Chern-Mather class differs at r={r}")
    for r, row in mp["polar"].items():
        if polar_degrees_secant(r) != row:
            out.append(f"polar degrees differ at r={r}")
    hyp = golden.hypersurfaces()
    for name, ex in hyp.items():
        n, k = ex["n"], ex["k"]
        csm = ChowClass(n, ex["csm"])
        dv = DegreeVector(n, ex["degrees"], k - 1) if "degrees" in ex else degrees_from_csm(csm, k - 1)
        rep = hypersurface_report(dv, k)
        if rep.csm != csm:
            out.append(f"{name}: CSM class differs")
        if rep.fulton != ChowClass(n, ex["fulton"]) or rep.milnor != ChowClass(n, ex["milnor"]):
            out.append(f"{name}: Fulton or Milnor class differs")
        if (rep.mu, rep.mu_section, rep.grad_degree) != (ex["mu"], ex["mu_section"], ex["grad_degree"]):
            out.append(f"{name}: Milnor numbers or gradient degree differ")
        if "segre" in ex and segre_from_degrees(dv) != ChowClass(n, ex["segre"]):
            out.append(f"{name}: Segre class differs")
    return out


SUITES: dict[str, Callable[[int, int], list[str]]] = {
    "algebra": algebra_suite,
    "charclass": charclass_suite,
    "hilbert": hilbert_suite,
    "secant": secant_suite,
    "conjecture": conjecture_suite,
    "golden": golden_suite,
}


@dataclass
class SuiteResult:
    name: str
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def run_suites(rmax: int, nmax: int, threads: int = 1) -> list[SuiteResult]:
    """Run every suite; results come back in a fixed order regardless of threads."""
    names = list(SUITES)

    def run(name: str) -> SuiteResult:
        try:
            return SuiteResult(name, SUITES[name](rmax, nmax))
        except Exception as exc:  # a crash inside a suite is a failure, not a usage error
            return SuiteResult(name, [f"{type(exc).__name__}: {exc}"])

    if threads == 1:
        return [run(n) for n in names]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(run, names))
