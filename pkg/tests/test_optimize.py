import math
import logging

import numpy as np
import pytest

from hypothesis import assume, given, strategies as st

from app.core.exceptions import DegenerateSplitterError, InvalidParameterError
from app.schemas.core import (
    BeamSplitter,
    CoherentSqueezedVacuum,
    DualCoherent,
    SqueezedCoherentSqueezedVacuum,
)
from app.schemas.optimize import KappaRegime, Regime
from app.utils.closed_form import fisher_coh_sqz, fisher_dual_coherent, fisher_sqzcoh_sqz, kappa_and_floor
from app.utils.optimize import (
    best_transmission,
    delta_theta_lim,
    delta_theta_lim_approx,
    delta_theta_lim_sqzcoh_sqz,
    delta_theta_opt_dual,
    fisher_equal_photons_dual,
    fisher_max_coh_sqz,
    fisher_max_dual,
    fisher_max_sqzcoh_sqz,
    kappa_coh_sqz,
    kappa_sqzcoh_sqz,
    matching_phases_sqzcoh_sqz,
    t_opt_squared_dual,
    tr_squared_stationary_roots,
)


finite = dict(allow_nan=False, allow_infinity=False)


def _dual(varpi: float, delta_theta: float, alpha: float = 10.0) -> DualCoherent:
    return DualCoherent.from_mismatch(alpha=alpha, beta=varpi * alpha, delta_theta=delta_theta)


def _wrap(angle: float) -> float:
    """(-π, π] 로 접기"""
    return math.remainder(angle, 2.0 * math.pi)



# -----------------------------------------------------
# 1. 이중 코히런트: 위상 보상과 최적 투과율
# -----------------------------------------------------
def test_delta_theta_opt_balanced_is_zero(balanced):
    assert delta_theta_opt_dual(balanced, 0.5) == pytest.approx(0.0, abs=1e-12)


def test_delta_theta_opt_example():
    bs = BeamSplitter.from_transmissivity(0.75)
    assert delta_theta_opt_dual(bs, 0.5) == pytest.approx(-0.447832, abs=1e-6)


def test_delta_theta_opt_unreachable(caplog):
    bs = BeamSplitter.from_transmissivity(0.75)
    with caplog.at_level(logging.INFO, logger="app.utils.optimize"):
        assert delta_theta_opt_dual(bs, 0.2) is None
    assert "no compensating mismatch" in caplog.text


def test_delta_theta_opt_preconditions(balanced):
    with pytest.raises(InvalidParameterError):
        delta_theta_opt_dual(balanced, 0.0)
    with pytest.raises(DegenerateSplitterError):
        delta_theta_opt_dual(BeamSplitter(tau=0.0), 0.5)


def test_compensation_recovers_maximum_on_seeded_draws():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 200:
        bs = BeamSplitter(tau=float(rng.uniform(0.05, math.pi / 2 - 0.05)))
        varpi = float(rng.uniform(0.1, 3.0))
        delta = delta_theta_opt_dual(bs, varpi)
        if delta is None:
            continue
        source = _dual(varpi, delta)
        assert fisher_dual_coherent(bs, source) == pytest.approx(fisher_max_dual(source), rel=1e-10)
        checked += 1


def test_delta_theta_opt_is_stationary():
    bs = BeamSplitter.from_transmissivity(0.7)
    varpi = 0.8
    delta = delta_theta_opt_dual(bs, varpi)
    h = 1e-6
    slope = (fisher_dual_coherent(bs, _dual(varpi, delta + h)) - fisher_dual_coherent(bs, _dual(varpi, delta - h))) / (2 * h)
    assert abs(slope) <= 1e-6 * fisher_max_dual(_dual(varpi, delta))


@pytest.mark.parametrize("varpi", [0.2, 0.5, 0.99, 2.0])
def test_t_opt_without_mismatch_is_balanced(varpi):
    optimum = t_opt_squared_dual(0.0, varpi)
    assert optimum.value == pytest.approx(0.5)
    assert not optimum.degenerate


def test_t_opt_example():
    assert t_opt_squared_dual(math.pi / 2, 0.5).value == pytest.approx(0.1, abs=1e-12)


@pytest.mark.parametrize("delta_theta", [0.0, math.pi / 6, math.pi / 3])
def test_t_opt_reaches_maximum_for_near_equal_inputs(delta_theta):
    source = DualCoherent.from_mismatch(alpha=10.0, beta=9.9, delta_theta=delta_theta)
    t2 = t_opt_squared_dual(delta_theta, source.varpi).value
    assert fisher_dual_coherent(BeamSplitter.from_transmissivity(t2), source) == pytest.approx(198.01, rel=1e-10)


@given(
    st.floats(min_value=-math.pi, max_value=math.pi, **finite),
    st.floats(min_value=0.05, max_value=3.0, **finite),
)
def test_t_opt_attains_maximum(delta_theta, varpi):
    assume(abs(varpi - 1.0) > 1e-6)
    source = _dual(varpi, delta_theta)
    t2 = t_opt_squared_dual(delta_theta, varpi).value
    assert fisher_dual_coherent(BeamSplitter.from_transmissivity(t2), source) == pytest.approx(
        fisher_max_dual(source), rel=1e-9
    )


def test_t_opt_is_stationary():
    varpi, delta = 0.6, 0.9
    t2 = t_opt_squared_dual(delta, varpi).value
    assert 0.0 < t2 < 1.0
    source = _dual(varpi, delta)
    h = 1e-6
    slope = (
        fisher_dual_coherent(BeamSplitter.from_transmissivity(t2 + h), source)
        - fisher_dual_coherent(BeamSplitter.from_transmissivity(t2 - h), source)
    ) / (2 * h)
    assert abs(slope) <= 1e-6 * fisher_max_dual(source)


def test_t_opt_equal_inputs():
    degenerate = t_opt_squared_dual(0.0, 1.0)
    assert degenerate.degenerate
    assert degenerate.value == 0.5

    tie = t_opt_squared_dual(math.pi / 2, 1.0)
    assert not tie.degenerate
    source = _dual(1.0, math.pi / 2)
    assert fisher_dual_coherent(BeamSplitter.from_transmissivity(tie.value), source) == pytest.approx(200.0, rel=1e-10)


def test_stationary_roots_contain_optimum():
    varpi, delta = 0.5, 0.7
    t2 = t_opt_squared_dual(delta, varpi).value
    larger, smaller = tr_squared_stationary_roots(delta, varpi)
    assert smaller <= larger <= 0.25
    assert t2 * (1 - t2) == pytest.approx(larger, rel=1e-9) or t2 * (1 - t2) == pytest.approx(smaller, rel=1e-9)
    assert tr_squared_stationary_roots(0.0, 1.0) is None


@pytest.mark.parametrize(
    "beta, delta_theta, expected",
    [(9.9, 0.0, 198.01), (2.0, 1.0, 104.0), (0.0, 0.0, 100.0)],
)
def test_fisher_max_dual(beta, delta_theta, expected):
    source = DualCoherent.from_mismatch(alpha=10.0, beta=beta, delta_theta=delta_theta)
    assert fisher_max_dual(source) == pytest.approx(expected)
    assert fisher_equal_photons_dual(source) == pytest.approx(expected)


def test_dual_global_maximum_on_grid():
    source_params = (10.0, 7.0)
    f_max = source_params[0] ** 2 + source_params[1] ** 2
    best = 0.0
    for tau in np.linspace(0.0, math.pi / 2, 201):
        bs = BeamSplitter(tau=float(tau))
        for delta in np.linspace(-math.pi, math.pi, 201):
            source = DualCoherent.from_mismatch(alpha=10.0, beta=7.0, delta_theta=float(delta))
            best = max(best, fisher_dual_coherent(bs, source))
    assert best <= f_max * (1.0 + 1e-9)



# -----------------------------------------------------
# 2. 코히런트 + 스퀴즈드 진공: κ 영역
# -----------------------------------------------------
def test_kappa_without_squeezing_is_coherent_intensity():
    regime = kappa_coh_sqz(CoherentSqueezedVacuum.from_mismatch(alpha=3.0, r=0.0))
    assert regime.kappa == pytest.approx(9.0)
    assert regime.regime is Regime.BALANCED_OPTIMAL


def test_kappa_negative_past_threshold():
    regime = kappa_coh_sqz(CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3, delta_theta=0.9 * math.pi))
    assert regime.kappa == pytest.approx(-101.3, abs=0.2)
    assert regime.regime is Regime.DEGENERATE_OPTIMAL
    assert best_transmission(regime) == (0.0, math.pi / 2)


def test_delta_theta_lim_example():
    source = CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3)
    lim = delta_theta_lim(source)
    assert lim == pytest.approx(2.767106, abs=1e-6)
    assert 0.86 * math.pi <= lim <= 0.90 * math.pi

    at_lim = CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3, delta_theta=lim)
    regime = kappa_coh_sqz(at_lim)
    assert regime.regime is Regime.TRANSMISSION_INDEPENDENT
    assert best_transmission(regime) == (0.0, math.pi / 4, math.pi / 2)


def test_delta_theta_lim_approx_is_close_for_bright_coherent():
    # |α|² = 1e4 ≫ sinh²(2r)/2 ≈ 372
    source = CoherentSqueezedVacuum.from_mismatch(alpha=100.0, r=2.0)
    assert delta_theta_lim_approx(source) == pytest.approx(delta_theta_lim(source), abs=0.01)


def test_delta_theta_lim_approx_breaks_down_for_strong_squeezing():
    # sinh²(2r)/2 ≈ 1237 > |α|² = 100
    source = CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3)
    assert abs(delta_theta_lim_approx(source) - delta_theta_lim(source)) > 1.0


def test_delta_theta_lim_out_of_domain(caplog):
    with caplog.at_level(logging.INFO, logger="app.utils.optimize"):
        assert delta_theta_lim(CoherentSqueezedVacuum.from_mismatch(alpha=1.0, r=0.1)) is None
    assert "no threshold mismatch" in caplog.text


def test_delta_theta_lim_preconditions():
    with pytest.raises(InvalidParameterError):
        delta_theta_lim(CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=0.0))
    with pytest.raises(InvalidParameterError):
        delta_theta_lim(CoherentSqueezedVacuum.from_mismatch(alpha=0.0, r=1.0))


def test_fisher_is_transmission_independent_at_threshold(tau_grid):
    source = CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3)
    at_lim = CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3, delta_theta=delta_theta_lim(source))
    values = np.array([fisher_coh_sqz(BeamSplitter(tau=tau), at_lim) for tau in tau_grid])
    floor = kappa_and_floor(at_lim)[1]
    assert values.max() - values.min() <= 1e-9 * values.max()
    assert values.mean() == pytest.approx(floor, rel=1e-9)


@pytest.mark.parametrize(
    "delta_theta, expected",
    [(0.5 * math.pi, {50}), (0.95 * math.pi, {0, 100})],
)
def test_regime_decides_best_splitter_on_grid(tau_grid, delta_theta, expected):
    source = CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3, delta_theta=delta_theta)
    values = [fisher_coh_sqz(BeamSplitter(tau=tau), source) for tau in tau_grid]
    assert int(np.argmax(values)) in expected


def test_positive_kappa_grows_towards_balance(tau_grid):
    source = CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3, delta_theta=0.3)
    assert kappa_coh_sqz(source).regime is Regime.BALANCED_OPTIMAL
    values = np.array([fisher_coh_sqz(BeamSplitter(tau=tau), source) for tau in tau_grid[:51]])
    assert np.all(np.diff(values) > 0.0)


@pytest.mark.parametrize(
    "alpha, r, expected",
    [(10.0, 2.3, 9972.81), (10.0, 0.0, 100.0), (0.0, 1.0, 1.38110)],
)
def test_fisher_max_coh_sqz(alpha, r, expected):
    assert fisher_max_coh_sqz(CoherentSqueezedVacuum.from_mismatch(alpha=alpha, r=r)) == pytest.approx(expected, abs=0.01)


def test_coh_sqz_global_maximum_on_grid():
    f_max = fisher_max_coh_sqz(CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3))
    splitters = [BeamSplitter(tau=float(tau)) for tau in np.linspace(0.0, math.pi / 2, 201)]
    best = -1.0
    for delta in np.linspace(-math.pi, math.pi, 201):
        trial = CoherentSqueezedVacuum.from_mismatch(alpha=10.0, r=2.3, delta_theta=float(delta))
        best = max(best, max(fisher_coh_sqz(bs, trial) for bs in splitters))
    assert best <= f_max + 1e-9 * f_max
    assert best == pytest.approx(f_max, rel=1e-9)


def test_kappa_regime_rejects_inconsistent_sign():
    with pytest.raises(ValueError):
        KappaRegime(regime=Regime.BALANCED_OPTIMAL, kappa=-1.0, tolerance=1e-9)
    assert KappaRegime.classify(1e-12, 1e-9).regime is Regime.TRANSMISSION_INDEPENDENT



# -----------------------------------------------------
# 3. 스퀴즈드 코히런트 + 스퀴즈드 진공
# -----------------------------------------------------
def test_fisher_max_sqzcoh_example():
    source = SqueezedCoherentSqueezedVacuum.from_angles(alpha=10.0, r=2.3, z=2.3)
    assert fisher_max_sqzcoh_sqz(source) == pytest.approx(12422.2, abs=0.05)


def test_matching_phases_reach_maximum(balanced):
    theta, phi = matching_phases_sqzcoh_sqz(alpha_phase=0.4)
    assert theta == pytest.approx(0.8)
    assert phi == pytest.approx(0.8 - math.pi)
    source = SqueezedCoherentSqueezedVacuum.from_angles(alpha=3.0, r=0.6, z=0.4, theta=theta, phi=phi, alpha_phase=0.4)
    assert fisher_sqzcoh_sqz(balanced, source) == pytest.approx(fisher_max_sqzcoh_sqz(source), rel=1e-12)
    assert kappa_sqzcoh_sqz(source).regime is Regime.BALANCED_OPTIMAL


def test_sqzcoh_kappa_matches_coh_sqz_without_port_one_squeezing():
    both = SqueezedCoherentSqueezedVacuum.from_angles(alpha=10.0, r=2.3, z=0.0, theta=0.4)
    single = CoherentSqueezedVacuum(alpha=both.alpha, xi=both.xi)
    assert kappa_sqzcoh_sqz(both).kappa == pytest.approx(kappa_coh_sqz(single).kappa, rel=1e-14)


def test_sqzcoh_kappa_root_is_transmission_independent():
    source = SqueezedCoherentSqueezedVacuum.from_angles(alpha=10.0, r=2.3, z=2.3, theta=0.0, phi=math.pi)
    root = delta_theta_lim_sqzcoh_sqz(source)
    assert root is not None
    assert 0.0 < root < math.pi

    at_root = source.model_copy(update={"xi": source.xi.model_copy(update={"angle": -root})})
    assert kappa_sqzcoh_sqz(at_root).regime is Regime.TRANSMISSION_INDEPENDENT
    values = [fisher_sqzcoh_sqz(BeamSplitter(tau=tau), at_root) for tau in (0.0, math.pi / 8, math.pi / 4)]
    assert max(values) - min(values) <= 1e-10 * max(values)


def test_sqzcoh_kappa_root_absent_when_sign_is_fixed():
    source = SqueezedCoherentSqueezedVacuum.from_angles(alpha=10.0, r=0.1, z=0.1, theta=0.0, phi=math.pi)
    assert delta_theta_lim_sqzcoh_sqz(source) is None


def test_sqzcoh_global_maximum_on_grid():
    # 포트 1 스퀴징은 코히런트와 정합 (Δφ = π), Δθ = 2θ_α - θ 만 변화
    f_max = fisher_max_sqzcoh_sqz(SqueezedCoherentSqueezedVacuum.from_angles(alpha=10.0, r=2.3, z=2.3))
    splitters = [BeamSplitter(tau=float(tau)) for tau in np.linspace(0.0, math.pi / 2, 201)]
    best = -1.0
    for delta in np.linspace(-math.pi, math.pi, 201):
        trial = SqueezedCoherentSqueezedVacuum.from_angles(alpha=10.0, r=2.3, z=2.3, theta=-float(delta), phi=-math.pi)
        best = max(best, max(fisher_sqzcoh_sqz(bs, trial) for bs in splitters))
    assert best <= f_max + 1e-9 * f_max
    assert best == pytest.approx(f_max, rel=1e-9)


def test_sqzcoh_global_maximum_on_phase_grid(balanced):
    grid = np.linspace(0.0, 2.0 * math.pi, 25)
    step = grid[1] - grid[0]
    alpha, r, z = 10.0, 2.3, 2.3
    f_max = fisher_max_sqzcoh_sqz(SqueezedCoherentSqueezedVacuum.from_angles(alpha=alpha, r=r, z=z))

    best, best_angles = -1.0, None
    for theta in grid:
        for phi in grid:
            for alpha_phase in grid:
                source = SqueezedCoherentSqueezedVacuum.from_angles(
                    alpha=alpha, r=r, z=z, theta=float(theta), phi=float(phi), alpha_phase=float(alpha_phase)
                )
                value = fisher_sqzcoh_sqz(balanced, source)
                if value > best:
                    best, best_angles = value, (float(theta), float(phi), float(alpha_phase))

    assert best <= f_max * (1.0 + 1e-9)
    assert best == pytest.approx(f_max, rel=1e-9)
    theta, phi, alpha_phase = best_angles
    assert abs(_wrap(2.0 * alpha_phase - theta)) <= step / 2
    assert abs(_wrap(phi - theta - math.pi)) <= step / 2
    assert abs(_wrap(2.0 * alpha_phase - phi - math.pi)) <= step / 2
