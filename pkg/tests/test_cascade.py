from fractions import Fraction as F

import numpy as np
import pytest

from chebwave.cascade import (
    autocorrelation_numerators,
    EigenSolverError,
    cascade_iterate,
    condition_e_sweep,
    markov_analysis,
    spectrum,
    transition_matrix,
)
from chebwave.filters import custom_taps, make_type1, make_type2, make_type2_generalized
from oracles import eigenvalues_via_charpoly, explicit_transition_window

T5_TYPE1 = [[0, 1, 0, 0, 0], [2, 0, 0, 1, 0], [0, 0, 2, 0, 0], [0, 1, 0, 0, 2], [0, 0, 0, 1, 0]]
T5_TYPE2 = [[2, 1, 0, 0, 0], [4, 3, 2, 1, 0], [2, 3, 4, 3, 2], [0, 1, 2, 3, 4], [0, 0, 0, 1, 2]]


def _scaled(rows, scale):
    return [[F(v, scale) for v in row] for row in rows]


def test_example_matrices():
    assert transition_matrix(make_type1(3)).entries().tolist() == _scaled(T5_TYPE1, 2)
    assert transition_matrix(make_type2(3)).entries().tolist() == _scaled(T5_TYPE2, 8)


def test_haar_is_one_by_one():
    T = transition_matrix(make_type1(1))
    assert T.size == 1 and T.entries().tolist() == [[F(1)]]


@pytest.mark.parametrize("m", range(1, 16, 2))
@pytest.mark.parametrize("make", [make_type1, make_type2])
def test_matches_explicit_construction(m, make):
    taps = make(m)
    T = transition_matrix(taps)
    assert T.size == 2 * m - 1
    assert T.entries().tolist() == explicit_transition_window(taps.coefficients)


def test_explicit_construction_custom_and_generalized():
    for taps in (custom_taps(["3/4", "1/4"]), custom_taps(["1/8", "3/8", "3/8", "1/8"]),
                 make_type2_generalized(3, 1)):
        assert transition_matrix(taps).entries().tolist() == explicit_transition_window(taps.coefficients)


@pytest.mark.parametrize("m", range(1, 32, 2))
def test_type2_rows_are_triangular(m):
    tri = [F(2 * v, (m + 1) ** 2) for v in list(range(1, m + 2)) + list(range(m, 0, -1))]
    nums, denom = autocorrelation_numerators(make_type2(m))
    assert [F(v, denom) for v in nums] == tri
    # the middle row of T holds the triangle minus its two end points, reversed
    T = transition_matrix(make_type2(m))
    assert list(T.entries()[m - 1][::-1]) == tri[1:-1]


def test_spectrum_examples():
    s1 = spectrum(transition_matrix(make_type1(3)))
    np.testing.assert_allclose(np.sort(s1.eigenvalues.real), [-1, -0.5, 0.5, 1, 1], atol=1e-9)
    assert np.max(np.abs(s1.eigenvalues.imag)) < 1e-9
    assert s1.unit_eigenvalue_multiplicity == 2 and not s1.satisfies_condition_e
    s2 = spectrum(transition_matrix(make_type2(3)))
    np.testing.assert_allclose(np.sort(s2.eigenvalues.real), [0, 0, 0.25, 0.5, 1], atol=1e-9)
    assert s2.satisfies_condition_e


def test_identity_fails_condition_e():
    s = spectrum(np.eye(2))
    assert s.unit_eigenvalue_multiplicity == 2 and not s.satisfies_condition_e


def test_spectrum_errors():
    with pytest.raises(EigenSolverError):
        spectrum(np.array([[np.nan, 0], [0, 1]]))
    with pytest.raises(ValueError):
        spectrum(np.ones((2, 3)))


@pytest.mark.parametrize("m", range(1, 32, 2))
def test_type2_perron_root(m):
    s = spectrum(transition_matrix(make_type2(m)))
    assert abs(s.spectral_radius - 1) < 1e-9
    assert s.unit_eigenvalue_multiplicity == 1
    assert s.subdominant_modulus() < 1 - 1e-9


@pytest.mark.parametrize("m", range(1, 10, 2))
@pytest.mark.parametrize("make", [make_type1, make_type2])
def test_eigenvalues_agree_with_charpoly_oracle(m, make):
    T = transition_matrix(make(m))
    got = np.sort(np.abs(spectrum(T).eigenvalues))
    roots = eigenvalues_via_charpoly(T.entries().tolist())
    assert len(roots) == T.size
    ref = np.sort(np.abs(roots))
    assert np.max(np.abs(got - ref)) < 1e-7


def test_markov_examples():
    r = markov_analysis(transition_matrix(make_type2(3)))
    assert r.is_stochastic and r.is_irreducible and r.is_aperiodic
    assert r.integer_scale == 8 and set(r.scaled_column_sums) == {8}
    r7 = markov_analysis(transition_matrix(make_type2(7)))
    assert r7.is_stochastic and r7.integer_scale == 32 and set(r7.scaled_column_sums) == {32}


def test_markov_type1_m3():
    T = transition_matrix(make_type1(3))
    r = markov_analysis(T)
    assert r.is_stochastic
    # every column: a single 1 or a pair of 1/2
    for col in T.entries().T:
        nz = sorted(v for v in col if v)
        assert nz in ([F(1)], [F(1, 2), F(1, 2)])
    # state 2 (the center) only maps to itself, so the chain is reducible
    assert not r.is_irreducible and not r.is_aperiodic


@pytest.mark.parametrize("m", range(1, 32, 2))
def test_type2_column_parity(m):
    T = transition_matrix(make_type2(m))
    scale = (m + 1) ** 2 // 2
    entries = T.entries()
    for j in range(T.size):
        col = [int(v * scale) for v in entries[:, j] if v]
        assert all(v * scale == int(v * scale) for v in entries[:, j])
        assert len({v % 2 for v in col}) == 1
        assert sum(col) == (m + 1) ** 2 // 2
    assert markov_analysis(T).has_self_loops


def test_sweep_examples():
    assert condition_e_sweep(1, 31) == [(m, m == 1) for m in range(1, 32, 2)]
    assert condition_e_sweep(2, 31) == [(m, True) for m in range(1, 32, 2)]
    assert condition_e_sweep(1, 1) == [(1, True)]


def test_sweep_order_independent_of_jobs():
    assert condition_e_sweep(2, 21, jobs=4) == condition_e_sweep(2, 21, jobs=1)


def test_sweep_bound():
    with pytest.raises(ValueError):
        condition_e_sweep(1, 257)
    with pytest.raises(ValueError):
        condition_e_sweep(1, 15, bound=13)


def test_haar_cascade_is_box():
    r = cascade_iterate(make_type1(1), 8)
    expected = (r.t < 1).astype(float)
    assert np.array_equal(r.phi_samples, expected)
    assert r.successive_l2_distances == [0.0] * 8


def test_type2_m5_distances_decrease():
    d = cascade_iterate(make_type2(5), 4).successive_l2_distances
    assert d[1] > d[2] > d[3]


def test_type1_m3_does_not_converge():
    d = cascade_iterate(make_type1(3), 4).successive_l2_distances
    assert min(d) > 0.5


@pytest.mark.parametrize("taps", [make_type1(3), make_type2(5), make_type2_generalized(3, 1)])
def test_conservation_and_support(taps):
    r = cascade_iterate(taps, 9)
    m = taps.degree
    assert all(abs(s - 1) < 1e-9 for s in r.riemann_sums)
    assert r.t[0] == 0 and r.t[-1] == m
    assert len(r.phi_samples) == len(r.psi_samples) == m * 2**9 + 1
    assert r.phi_samples[-1] == 0


def test_cascade_psi_has_zero_integral():
    r = cascade_iterate(make_type2(3), 8)
    assert abs(r.psi_samples.sum() * 2.0**-8) < 1e-12


def test_cascade_bounds():
    with pytest.raises(ValueError):
        cascade_iterate(make_type2(3), 0)
    with pytest.raises(ValueError):
        cascade_iterate(make_type2(3), 21)
