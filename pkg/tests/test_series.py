"""Series over exponents in Z[1/p]: arithmetic and precision tracking, the
Gauss valuation, unit criteria, geometric-series inversion, and residue
reduction."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from projectivoid import (
    INFINITY,
    NonpositivePrecision,
    NormExceedsOne,
    NotAUnit,
    PExp,
    PSeries,
    PrimeMismatch,
    ResiduePoly,
    SubringTag,
    SubringViolation,
    Valuation,
    ZERO,
    ZeroSeries,
    canon,
    exp_add,
)
from helpers import mono, random_multidominant, srs


def exps(p, lo=-6, hi=7, max_pow=2):
    return st.builds(lambda n, b: canon(n, b, p), st.integers(lo, hi), st.integers(0, max_pow))


def series(p, max_terms=4, coeffs=st.integers(-9, 9), lo=-6, hi=7):
    return st.lists(
        st.tuples(exps(p, lo, hi), coeffs), max_size=max_terms
    ).map(lambda pairs: PSeries(p, [(e, Fraction(c)) for e, c in pairs]))


def _unit_from(p, e, v0, u0, tail):
    pairs = {e: Fraction(u0) * Fraction(p) ** v0}
    for rel, dv, c in tail:
        if rel == ZERO:
            continue
        ee = exp_add(e, rel, p)
        pairs[ee] = pairs.get(ee, Fraction(0)) + Fraction(c) * Fraction(p) ** (v0 + dv)
    return PSeries(p, pairs)


def units(p):
    tail = st.lists(
        st.tuples(exps(p, -5, 5), st.integers(1, 3), st.sampled_from([1, -1, p + 1])),
        max_size=4,
    )
    return st.builds(
        lambda e, v0, u0, t: _unit_from(p, e, v0, u0, t),
        exps(p, -5, 5),
        st.integers(0, 2),
        st.sampled_from([1, -1, p + 1, 2 * p + 1]),
        tail,
    )


# ----------------------------------------------------------------------
# construction and normalization


def test_terms_merge_to_canonical_exponents():
    f = PSeries(2, [(PExp(2, 1), 1), (PExp(1, 0), 1)])
    assert f.support() == [PExp(1, 0)]
    assert f.coefficient(PExp(1, 0)).value == 2


def test_zero_coefficients_drop():
    assert PSeries(2, {ZERO: 0}).is_zero()
    assert (mono(2, 1) + mono(2, 1, coeff=-1)).is_zero()


def test_precision_prunes_stored_terms():
    f = PSeries(2, {ZERO: 1, PExp(1, 0): 8}, 3)
    assert f.support() == [ZERO]
    assert f.precision == Valuation.finite(3)
    assert not f.is_exact()


def test_infinite_precision_means_exact():
    assert PSeries(2, {ZERO: 1}, INFINITY).is_exact()


def test_rejects_non_prime():
    with pytest.raises(ValueError):
        PSeries(4, {})


# ----------------------------------------------------------------------
# ring operations


def test_add_cancels_opposite_terms():
    f = mono(2, 1, 1)
    assert (f + (-f)).is_zero()


def test_add_merges():
    assert srs(2, [(0, 0, 1), (1, 0, 1)]) + srs(2, [(0, 0, 1), (1, 0, -1)]) == srs(
        2, [(0, 0, 2)]
    )
    assert srs(2, [(0, 0, 2), (1, 2, 1)]) + srs(2, [(1, 2, 1)]) == srs(
        2, [(0, 0, 2), (1, 2, 2)]
    )


def test_mul_adds_exponents():
    assert mono(2, 1, 1) * mono(2, 1, 1) == mono(2, 1, 0)


def test_difference_of_squares():
    plus = srs(2, [(0, 0, 1), (1, 0, 1)])
    minus = srs(2, [(0, 0, 1), (1, 0, -1)])
    assert plus * minus == srs(2, [(0, 0, 1), (2, 0, -1)])


def test_mul_by_zero():
    f = srs(3, [(1, 1, 2), (0, 0, 1)])
    assert (f * PSeries.zero(3)).is_zero()


def test_prime_mismatch():
    with pytest.raises(PrimeMismatch):
        PSeries.one(2) + PSeries.one(3)


def test_scale_and_shift():
    f = srs(2, [(0, 0, 1), (1, 0, 1)])
    assert f.scale(Fraction(3, 5)) == srs(2, [(0, 0, Fraction(3, 5)), (1, 0, Fraction(3, 5))])
    assert f.shift(PExp(1, 1)) == srs(2, [(1, 1, 1), (3, 1, 1)])


def test_truncate():
    f = srs(2, [(0, 0, 1), (1, 0, 2), (2, 0, 4)])
    assert f.truncate(2) == PSeries(2, {ZERO: 1, PExp(1, 0): 2}, 2)


@settings(max_examples=60, deadline=None)
@given(series(2), series(2), series(2))
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


# ----------------------------------------------------------------------
# precision propagation


def test_add_takes_min_precision():
    f = PSeries(2, {ZERO: 1}, 5)
    g = mono(2, 1)
    assert (f + g).precision == Valuation.finite(5)
    assert (g + f).precision == Valuation.finite(5)


def test_mul_precision_rule():
    f = PSeries(2, {ZERO: 1}, 5)  # gauss valuation 0, cutoff 5
    g = PSeries(2, {ZERO: 2}, 4)  # gauss valuation 1, cutoff 4
    assert (f * g).precision == Valuation.finite(4)  # min(5+1, 4+0)


def test_mul_precision_shifts_by_gauss_valuation():
    f = PSeries(2, {ZERO: 1}, 3)
    g = srs(2, [(1, 0, 4)])  # exact, gauss valuation 2
    assert (f * g).precision == Valuation.finite(5)


def test_exact_elements_stay_exact():
    f = srs(2, [(0, 0, 1), (1, 1, 3)])
    g = srs(2, [(-1, 0, 2)])
    assert (f + g).is_exact() and (f * g).is_exact()


# ----------------------------------------------------------------------
# Gauss valuation, dominance, degree


def test_gauss_valuation_examples():
    assert srs(2, [(0, 0, 2), (1, 1, 1)]).gauss_valuation() == Valuation.finite(0)
    assert srs(2, [(1, 0, 4), (2, 0, 2)]).gauss_valuation() == Valuation.finite(1)
    assert PSeries.zero(2).gauss_valuation() == INFINITY


def test_dominant_terms():
    assert srs(2, [(0, 0, 1), (1, 0, 2)]).dominant_terms() == {ZERO}
    assert srs(2, [(0, 0, 1), (1, 0, 1)]).dominant_terms() == {ZERO, PExp(1, 0)}
    assert srs(2, [(-1, 1, 2), (1, 1, 2)]).dominant_terms() == {PExp(-1, 1), PExp(1, 1)}


def test_dominant_terms_of_zero():
    with pytest.raises(ZeroSeries):
        PSeries.zero(2).dominant_terms()


def test_degree_examples():
    assert srs(2, [(1, 1, 1), (3, 1, 2)]).degree() == PExp(1, 1)
    assert srs(2, [(0, 0, 1), (1, 0, 1)]).degree() == PExp(1, 0)
    assert srs(2, [(0, 0, 5)]).degree() == ZERO
    with pytest.raises(ZeroSeries):
        PSeries.zero(2).degree()


def test_normalize_gauss():
    f = srs(2, [(0, 0, 4), (1, 0, 8)])
    g = f.normalize_gauss()
    assert g.gauss_valuation() == Valuation.finite(0)
    assert g == srs(2, [(0, 0, 1), (1, 0, 2)])


@settings(max_examples=80, deadline=None)
@given(series(2), series(2))
def test_gauss_valuation_multiplicative(f, g):
    assert (f * g).gauss_valuation() == f.gauss_valuation() + g.gauss_valuation()


# ----------------------------------------------------------------------
# subring membership and unit criteria


def test_in_subring():
    f = srs(2, [(0, 0, 1), (1, 1, 1)])
    assert f.in_subring(SubringTag.NONNEG)
    assert not f.in_subring(SubringTag.NONPOS)
    assert f.in_subring(SubringTag.FULL)
    assert not mono(2, -1).in_subring(SubringTag.NONNEG)
    assert PSeries.zero(2).in_subring(SubringTag.NONPOS)


def test_unit_examples():
    f = srs(2, [(0, 0, 1), (1, 1, 2)])
    assert f.is_unit(SubringTag.NONNEG)
    assert f.is_unit(SubringTag.FULL)
    assert not srs(2, [(0, 0, 1), (1, 0, 1)]).is_unit(SubringTag.FULL)
    assert srs(2, [(-1, 1, 1), (1, 1, 2)]).is_unit(SubringTag.FULL)


def test_one_sided_units_need_a_dominant_constant():
    assert srs(2, [(0, 0, 3), (1, 0, 2)]).is_unit(SubringTag.NONNEG)
    assert not mono(2, 1, 1).is_unit(SubringTag.NONNEG)
    assert mono(2, 1, 1).is_unit(SubringTag.FULL)
    assert srs(2, [(0, 0, 1), (-1, 0, 2)]).is_unit(SubringTag.NONPOS)


def test_unit_of_zero_is_false():
    assert not PSeries.zero(2).is_unit(SubringTag.FULL)
    assert not PSeries.zero(2).is_unit(SubringTag.NONNEG)


def test_unit_outside_subring():
    with pytest.raises(SubringViolation):
        mono(2, -1).is_unit(SubringTag.NONNEG)


def test_unit_requires_exact_input():
    with pytest.raises(ValueError):
        PSeries(2, {ZERO: 1}, 4).is_unit(SubringTag.FULL)


@settings(max_examples=60, deadline=None)
@given(series(2))
def test_full_unit_iff_normalized_residue_is_monomial(f):
    if f.is_zero():
        return
    assert f.is_unit(SubringTag.FULL) == f.normalize_gauss().reduce().is_monomial()


def test_multidominant_series_are_never_units():
    rng = random.Random(5)
    for _ in range(25):
        f = random_multidominant(rng, 2)
        assert not f.is_unit(SubringTag.FULL)
        assert not f.normalize_gauss().reduce().is_monomial()


# ----------------------------------------------------------------------
# monomial factor and inversion


def test_monomial_factor_examples():
    d = mono(2, 3, 2).monomial_factor()
    assert d.exponent == PExp(3, 2)
    assert d.unit == PSeries.one(2)

    d = srs(2, [(-1, 0, 2), (1, 0, 4)]).monomial_factor()
    assert d.exponent == PExp(-1, 0)
    assert d.unit == srs(2, [(0, 0, 2), (2, 0, 4)])

    f = srs(2, [(0, 0, 1), (1, 1, 2)])
    d = f.monomial_factor()
    assert d.exponent == ZERO
    assert d.unit == f


def test_monomial_factor_reassembles():
    f = srs(2, [(-3, 2, 6), (1, 1, 12)])
    d = f.monomial_factor()
    assert d.unit.shift(d.exponent) == f


def test_monomial_factor_rejects_non_units():
    with pytest.raises(NotAUnit):
        srs(2, [(0, 0, 1), (1, 0, 1)]).monomial_factor()


def test_invert_one():
    assert PSeries.one(2).inverse(7) == PSeries.one(2)


def test_invert_geometric_example():
    f = srs(2, [(0, 0, 1), (1, 0, -2)])
    got = f.inverse(4)
    assert got == PSeries(2, {ZERO: 1, PExp(1, 0): 2, PExp(2, 0): 4, PExp(3, 0): 8}, 4)
    assert (f * got).equals_mod(PSeries.one(2), 4)


def test_invert_monomial_is_exact():
    got = mono(2, 1, 1).inverse(10)
    assert got == mono(2, -1, 1)
    assert got.is_exact()


def test_invert_keeps_terms_above_cutoff_for_small_leading_coefficient():
    # leading coefficient 4 shifts the inverse's valuations down by two, so
    # the series must run farther than target/w terms to fill the tag
    f = srs(2, [(0, 0, 4), (1, 0, 8)])
    got = f.inverse(3)
    want = PSeries(
        2,
        {
            ZERO: Fraction(1, 4),
            PExp(1, 0): Fraction(-1, 2),
            PExp(2, 0): Fraction(1),
            PExp(3, 0): Fraction(-2),
            PExp(4, 0): Fraction(4),
        },
        3,
    )
    assert got == want
    assert (f * got).equals_mod(PSeries.one(2), 3)


def test_invert_errors():
    with pytest.raises(NotAUnit):
        srs(2, [(0, 0, 1), (1, 0, 1)]).inverse(4)
    with pytest.raises(NonpositivePrecision):
        PSeries.one(2).inverse(0)


@settings(max_examples=50, deadline=None)
@given(units(2), st.integers(1, 15))
def test_unit_times_inverse_is_one(f, target):
    assert f.is_unit(SubringTag.FULL)
    assert (f * f.inverse(target)).equals_mod(PSeries.one(2), target)


@settings(max_examples=40, deadline=None)
@given(units(3), units(3))
def test_degree_additive_on_units(f, g):
    assert (f * g).degree() == exp_add(f.degree(), g.degree(), 3)


# ----------------------------------------------------------------------
# residue reduction


def test_reduce_examples():
    assert srs(2, [(0, 0, 3), (1, 0, 2)]).reduce() == ResiduePoly(2, {ZERO: 1})
    f = srs(2, [(0, 0, 1), (1, 1, 1)])
    assert f.reduce() == ResiduePoly(2, {ZERO: 1, PExp(1, 1): 1})
    assert srs(2, [(1, 0, 2)]).reduce() == ResiduePoly(2, {})


def test_reduce_rejects_norm_above_one():
    with pytest.raises(NormExceedsOne):
        srs(2, [(0, 0, Fraction(1, 2))]).reduce()


def test_reduce_of_certain_inexact_series():
    assert PSeries(2, {ZERO: 3}, 1).reduce() == ResiduePoly(2, {ZERO: 1})
    with pytest.raises(ValueError):
        PSeries(2, {}, 0).reduce()


@settings(max_examples=60, deadline=None)
@given(series(2), series(2))
def test_reduce_multiplicative(f, g):
    assert (f * g).reduce() == f.reduce() * g.reduce()


@settings(max_examples=60, deadline=None)
@given(series(2, lo=0), series(2, lo=0))
def test_nonneg_subring_closed_under_arithmetic(f, g):
    assert (f + g).in_subring(SubringTag.NONNEG)
    assert (f * g).in_subring(SubringTag.NONNEG)


# ----------------------------------------------------------------------
# residue polynomials


def test_residue_poly_normalizes_mod_p():
    r = ResiduePoly(3, {ZERO: 5, PExp(1, 0): 3})
    assert r.coeffs == {ZERO: 2}
    assert r.is_monomial()
    assert not ResiduePoly(2, {}).is_monomial()
    assert ResiduePoly(2, {}).is_zero()


def test_residue_poly_arithmetic():
    a = ResiduePoly(2, {ZERO: 1})
    b = ResiduePoly(2, {ZERO: 1, PExp(1, 0): 1})
    assert a + b == ResiduePoly(2, {PExp(1, 0): 1})
    assert b * b == ResiduePoly(2, {ZERO: 1, PExp(2, 0): 1})


def test_equals_mod():
    f = srs(2, [(0, 0, 1), (5, 0, 32)])
    assert f.equals_mod(PSeries.one(2), 5)
    assert not f.equals_mod(PSeries.one(2), 6)
