import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sinc_expdecay.bounds import total_bound
from sinc_expdecay.errors import AdmissibilityError, BuildError, SincDomainError
from sinc_expdecay.maps import MapKind, map_forward
from sinc_expdecay.sinc import (Approximant, DecayProfile, SincParams, build_approximant,
                                evaluate, evaluate_batch, select_params, sinc_kernel)
from sinc_expdecay.testbed import evaluation_grid, example

PSI, PHI = MapKind.ARCSINH, MapKind.LOGISTIC_LOG


def profile(alpha, beta, d=1.0, kind=PHI, K=1.0):
    return DecayProfile(K, alpha, beta, d, kind)


def test_kernel_examples():
    assert sinc_kernel(3, 0.5, 1.5) == 1.0
    assert sinc_kernel(0, 1.0, 0.5) == pytest.approx(2 / math.pi, rel=1e-15)
    assert sinc_kernel(2, 1.0, 5.0) == 0.0


@pytest.mark.parametrize("h", [0.1, 0.5, 1.0])
def test_kernel_cardinality(h):
    j = np.arange(-50, 51)
    for k in range(-50, 51):
        vals = sinc_kernel(k, h, j * h)
        expected = (j == k).astype(float)
        assert np.allclose(vals, expected, rtol=0, atol=1e-14)
        assert vals[k + 50] == 1.0


@settings(max_examples=200, deadline=None)
@given(st.integers(-100, 100), st.floats(0.01, 10), st.floats(-1e3, 1e3))
def test_kernel_bounded(k, h, x):
    assert abs(sinc_kernel(k, h, x)) <= 1.0


def test_kernel_matches_direct_formula_away_from_nodes():
    x = np.linspace(-7.3, 9.1, 997)
    u = x / 0.37 - 4
    direct = np.sin(np.pi * u) / (np.pi * u)
    assert np.allclose(sinc_kernel(4, 0.37, x), direct, rtol=1e-12, atol=1e-15)


def test_kernel_rejects_bad_h():
    with pytest.raises(ValueError):
        sinc_kernel(0, 0.0, 1.0)


def test_select_params_mu_alpha_branch():
    p = select_params(profile(0.5, 1.0), 10)
    assert (p.M, p.N) == (10, 5)


def test_select_params_f1_phi():
    prof = example("f1").profile_phi
    p10 = select_params(prof, 10)
    assert (p10.M, p10.N) == (10, 9)
    assert select_params(prof, 12).h == pytest.approx(1.0, rel=1e-15)


def test_select_params_mu_beta_branch():
    p = select_params(profile(1.0, 0.5), 10)
    assert (p.M, p.N) == (5, 10)
    assert p.h == pytest.approx(math.sqrt(math.pi / 5), rel=1e-15)


def test_select_params_tie():
    p = select_params(profile(0.7, 0.7), 13)
    assert (p.M, p.N) == (13, 13)


def test_ceiling_guard_against_representation_error():
    # alpha n / beta = 0.1 * 3 / 0.3 evaluates to 1.0000000000000002
    assert 0.1 * 3 / 0.3 > 1
    p = select_params(profile(0.1, 0.3), 3)
    assert (p.M, p.N) == (3, 1)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 5), st.floats(0.05, 5), st.integers(1, 500))
def test_swapping_alpha_beta_swaps_M_N(a, b, n):
    p = select_params(profile(a, b), n)
    q = select_params(profile(b, a), n)
    assert (p.M, p.N) == (q.N, q.M)
    assert p.h == q.h


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 5), st.floats(0.05, 5), st.floats(0.01, 3.1), st.integers(1, 500))
def test_h_scaling(a, b, d, n):
    prof = profile(a, b, d)
    assert select_params(prof, 4 * n).h == pytest.approx(select_params(prof, n).h / 2, rel=1e-15)


def test_select_params_rejects_zero_n():
    with pytest.raises(ValueError):
        select_params(profile(1, 1), 0)


def test_profile_validation():
    with pytest.raises(AdmissibilityError):
        DecayProfile(1, 1, 1, math.pi, PHI)
    with pytest.raises(AdmissibilityError):
        DecayProfile(1, 1, 1, 1.6, PSI)
    DecayProfile(1, 1, 1, math.pi / 2, PSI)
    with pytest.raises(ValueError):
        DecayProfile(-1, 1, 1, 1, PHI)
    assert DecayProfile(1, 0.3, 0.9, 1, "phi").mu == 0.3


def test_zero_function():
    a = build_approximant(lambda t: 0.0, profile(1, 1), 5)
    assert np.all(a.samples == 0)
    assert np.all(evaluate_batch(a, [1e-10, 1.0, 1e10]) == 0)
    assert evaluate(a, 2.5) == 0.0


def test_build_f2_sample_at_origin():
    ex = example("f2")
    a = build_approximant(ex.eval, ex.profile_phi, 4)
    assert len(a.samples) == a.params.M + a.params.N + 1
    assert a.samples[a.params.M] == pytest.approx(0.3535533905932738, rel=1e-15)


def test_build_reports_nonfinite_sample():
    def f(t):
        return math.inf if t > 3 else 1.0
    with pytest.raises(BuildError) as info:
        build_approximant(f, profile(1, 1), 10)
    assert info.value.k is not None and info.value.k > 0


def test_approximant_is_immutable():
    a = build_approximant(math.exp, profile(1, 1), 3)
    with pytest.raises(ValueError):
        a.samples[0] = 1.0
    with pytest.raises(ValueError):
        Approximant(a.profile, SincParams(3, a.params.h, 3, 3), np.zeros(5))


@pytest.mark.parametrize("ex_id", ["f1", "f2", "f3"])
@pytest.mark.parametrize("kind", [PSI, PHI])
def test_node_reproduction(ex_id, kind):
    ex = example(ex_id)
    a = build_approximant(ex.eval, ex.profile(kind), 40)
    vals = evaluate_batch(a, a.nodes)
    scale = np.max(np.abs(a.samples))
    assert np.all(np.abs(vals - a.samples) <= 1e-13 * scale)
    mid = a.params.M
    assert evaluate(a, map_forward(kind, 0.0)) == pytest.approx(a.samples[mid], rel=1e-13)


def _mp_evaluate(a, t):
    """Brute-force the cardinal series at 40 digits from the stored samples."""
    mp.mp.dps = 40
    t = mp.mpf(t)
    if a.map_kind is PHI:
        x = mp.log(mp.expm1(t))
    else:
        x = mp.log(mp.sinh(t))
    h = mp.mpf(a.params.h)
    total = mp.mpf(0)
    for k, w in zip(a.indices, a.samples):
        u = x / h - int(k)
        total += mp.mpf(float(w)) * (mp.sin(mp.pi * u) / (mp.pi * u) if u != 0 else 1)
    return float(total)


@pytest.mark.parametrize("kind", [PSI, PHI])
def test_evaluate_against_high_precision_sum(kind):
    ex = example("f3")
    a = build_approximant(ex.eval, ex.profile(kind), 12)
    for t in [2.0 ** -30, 0.3, 1.0, 7.5, 2.0 ** 20]:
        assert evaluate(a, t) == pytest.approx(_mp_evaluate(a, t), rel=1e-13, abs=1e-16)


def test_evaluate_f1_phi_within_bound():
    ex = example("f1")
    a = build_approximant(ex.eval, ex.profile_phi, 50)
    err = abs(evaluate(a, 1.0) - math.exp(-1))
    assert err <= total_bound(ex.profile_phi, None, 50)


@pytest.mark.parametrize("t", [0.0, -2.0, math.nan])
def test_evaluate_domain_error(t):
    a = build_approximant(math.exp, profile(1, 1), 3)
    with pytest.raises(SincDomainError):
        evaluate(a, t)


def test_evaluate_batch_matches_sequential():
    ex = example("f1")
    a = build_approximant(ex.eval, ex.profile_psi, 30)
    grid = evaluation_grid()
    batch = evaluate_batch(a, grid)
    assert len(batch) == 201
    assert [float(v) for v in batch] == [evaluate(a, t) for t in grid]
    assert list(evaluate_batch(a, [])) == []
    assert evaluate_batch(a, [2.0])[0] == evaluate(a, 2.0)


def test_evaluate_batch_tags_index():
    a = build_approximant(math.exp, profile(1, 1), 3)
    with pytest.raises(SincDomainError, match=r"ts\[2\]"):
        evaluate_batch(a, [1.0, 2.0, -1.0])


def test_call_dispatch():
    ex = example("f3")
    a = build_approximant(ex.eval, ex.profile_phi, 8)
    assert a(1.0) == evaluate(a, 1.0)
    assert np.array_equal(a(np.array([1.0, 2.0])), evaluate_batch(a, [1.0, 2.0]))
