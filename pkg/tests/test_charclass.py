from __future__ import annotations

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from ccsec.algebra import ChowClass, Poly, chow_section_operator
from ccsec.charclass import (
    DegreeVector,
    chi_gamma_relations,
    csm_complement,
    csm_hypersurface,
    degrees_from_csm,
    degrees_from_segre,
    euler_characteristics_of_sections,
    fulton_hypersurface,
    grad_degree_chi,
    grad_degree_isolated,
    grad_degree_milnor,
    hypersurface_report,
    milnor_class,
    segre_from_degrees,
    truncate_degrees,
)

SEC2 = DegreeVector(4, (1, 2, 4, 4, 2), 2)
# Gradient degrees of det of a generic symmetric 3x3 matrix, obtained by
# inverting the CSM formula on its known class 3h+9h^2+14h^3+12h^4+6h^5.
SYM3_DET = DegreeVector(5, (1, 2, 4, 4, 2, 1), 2)


def degree_vectors(max_n: int = 8, max_entry: int = 50):
    return st.integers(1, max_n).flatmap(
        lambda n: st.builds(
            lambda tail, r: DegreeVector(n, (1, *tail), r),
            st.lists(st.integers(0, max_entry), min_size=n, max_size=n),
            st.integers(1, 6),
        )
    )


def sympy_csm(dv: DegreeVector) -> list[int]:
    """Expand the CSM formula with sympy as an independent oracle."""
    h = sp.Symbol("h")
    n = dv.n
    expr = (1 + h) ** (n + 1) - sum(d * (-h) ** j * (1 + h) ** (n - j) for j, d in enumerate(dv.entries))
    poly = sp.Poly(sp.expand(expr), h)
    return [int(poly.coeff_monomial(h**j)) for j in range(n + 1)]


def test_degree_vector_validation():
    with pytest.raises(ValueError):
        DegreeVector(2, (1, -1, 1), 1)
    with pytest.raises(ValueError):
        DegreeVector(2, (1, 1), 1)


def test_segre_examples():
    assert segre_from_degrees(SEC2) == ChowClass(4, (0, 0, 0, 4, -18))
    for n in range(1, 6):
        assert segre_from_degrees(DegreeVector(n, tuple(3**i for i in range(n + 1)), 3)) == ChowClass.zero(n)
    dv = DegreeVector(4, (1, 3, 9, 17, 21), 3)
    assert degrees_from_segre(4, 3, segre_from_degrees(dv)) == dv


def test_degrees_from_segre_examples():
    assert degrees_from_segre(4, 2, ChowClass(4, (0, 0, 0, 4, -18))) == SEC2
    assert degrees_from_segre(3, 2, ChowClass.zero(3)).entries == (1, 2, 4, 8)
    with pytest.raises(ValueError):
        degrees_from_segre(3, 2, ChowClass(3, (1,)))


@given(degree_vectors())
def test_segre_round_trip(dv):
    assert degrees_from_segre(dv.n, dv.r_gen, segre_from_degrees(dv)) == dv


def test_csm_examples():
    assert csm_hypersurface(SEC2) == ChowClass(4, (0, 3, 6, 8, 4))
    assert csm_hypersurface(SYM3_DET) == ChowClass(5, (0, 3, 9, 14, 12, 6))
    assert csm_hypersurface(SEC2).degree() == 4
    assert csm_complement(SEC2).dim_coeffs() == (1, 2, 4, 2, 1)
    assert csm_complement(DegreeVector(2, (1, 1, 1), 1)).dim_coeffs() == (1, 1, 1)


def test_symmetric_determinant_degrees_recovered_from_its_class():
    assert degrees_from_csm(ChowClass(5, (0, 3, 9, 14, 12, 6)), 2) == SYM3_DET


@given(degree_vectors())
def test_csm_matches_sympy_and_inclusion_exclusion(dv):
    csm = csm_hypersurface(dv)
    assert list(csm.coeffs) == sympy_csm(dv)
    assert csm + csm_complement(dv) == ChowClass.one_plus_h_power(dv.n, dv.n + 1)
    assert degrees_from_csm(csm, dv.r_gen) == dv


@given(degree_vectors())
def test_euler_characteristic_drops_by_top_degree(dv):
    csm = csm_hypersurface(dv)
    assert csm.degree() - chow_section_operator(csm).degree() == 1 - (-1) ** dv.n * dv.entries[-1]


@given(degree_vectors(max_n=7))
def test_section_class_equals_class_of_truncated_degrees(dv):
    if dv.n < 2:
        return
    sec = chow_section_operator(csm_hypersurface(dv))
    assert sec == csm_hypersurface(truncate_degrees(dv)).pushforward()


@pytest.mark.parametrize(
    "n,k,want",
    [(4, 3, (0, 3, 6, 12, -6)), (5, 3, (0, 3, 9, 18, 6, 27)), (2, 3, (0, 3, 0)), (3, 3, (0, 3, 3, 9))],
)
def test_fulton_examples(n, k, want):
    assert fulton_hypersurface(n, k) == ChowClass(n, want)


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("k", range(1, 7))
def test_fulton_drop_identity(n, k):
    total = fulton_hypersurface(n, k).degree()
    section = fulton_hypersurface(n - 1, k).pushforward().degree()
    assert total - section == 1 - (-1) ** n * (k - 1) ** n


def test_milnor_examples():
    m = milnor_class(fulton_hypersurface(4, 3), csm_hypersurface(SEC2), 3)
    assert m.cls == ChowClass(4, (0, 0, 0, -4, 10)) and m.mu == 10 and m.mu_section == 4
    m = milnor_class(fulton_hypersurface(5, 3), csm_hypersurface(SYM3_DET), 4)
    assert m.cls == ChowClass(5, (0, 0, 0, 4, -6, 21)) and m.mu == 21 and m.mu_section == 10
    f = fulton_hypersurface(6, 4)
    assert milnor_class(f, f, 5).cls == ChowClass.zero(6)


def test_gradient_degree_formulas():
    assert grad_degree_isolated(3, 3, [4]) == 4
    assert grad_degree_isolated(2, 3, []) == 4
    assert grad_degree_isolated(5, 4, []) == 3**5
    assert grad_degree_milnor(4, 3, 10, 4) == 2
    assert grad_degree_milnor(5, 3, 21, 10) == 1
    assert grad_degree_chi(4, 4, 5) == 2
    assert grad_degree_chi(6, 6, 10) == 5
    assert grad_degree_chi(2, 2, 2) == 1


def test_chi_gamma_on_cubic_threefold():
    csm = csm_hypersurface(SEC2)
    res = chi_gamma_relations(csm)
    assert res.section_coeffs == (3, 3, 5)
    assert res.gamma == Poly((4, 8, 6, 3))
    assert res.chi(0) == csm.degree() == 4
    # Euler characteristics of X, X.H, X.H^2, X.H^3 and the empty X.H^4.
    chis = euler_characteristics_of_sections(csm)
    assert chis == [4, 5, 0, 3, 0]
    assert list(res.chi.coeffs) == [(-1) ** r * c for r, c in enumerate(chis[:4])]
    with pytest.raises(ValueError):
        chi_gamma_relations(ChowClass(3, (1, 1)))


def test_chi_gamma_constant():
    res = chi_gamma_relations(ChowClass(3, (0, 0, 0, 7)))
    assert res.gamma == Poly.const(7) and res.chi == Poly.const(7)


def test_hypersurface_reports():
    rep = hypersurface_report(SEC2, 3)
    assert (rep.mu, rep.mu_section, rep.grad_degree) == (10, 4, 2)
    rep = hypersurface_report(SYM3_DET, 3)
    assert (rep.mu, rep.mu_section, rep.grad_degree) == (21, 10, 1)
    assert set(rep.to_json()) == {"n", "k", "csm", "fulton", "milnor", "mu", "mu_section", "grad_degree"}
    with pytest.raises(ValueError):
        hypersurface_report(SEC2, 4)
