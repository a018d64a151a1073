import math

import numpy as np
import pytest

from ..prc import (
    DelayAdvanceAlgorithm,
    DelayAdvanceParams,
    MirolloStrogatzCurve,
    PeskinCurve,
    ReachbackAlgorithm,
    RfaAccumulator,
    RfaCurve,
    StateMapAlgorithm,
    StateMapDomainError,
    StateMapParams,
    create_algorithm,
    equivalent_prc,
    prc_delay_advance,
    rfa_flush,
    rfa_record,
    state_forward,
    state_inverse,
    state_map_jump,
)

PESKIN = StateMapParams(epsilon=0.002, curve=PeskinCurve(3.0))
MIROLLO_STROGATZ = StateMapParams(epsilon=0.002, curve=MirolloStrogatzCurve(5.0))
RFA = StateMapParams(epsilon=0.002, curve=RfaCurve())


# =============================================================================
# Delay-advance PRC
# =============================================================================


@pytest.mark.parametrize("theta, refractory, phi, refractory_hit", [
    (0.3, 0.0, -0.3, False),
    (0.7, 0.0, 0.3, False),
    (0.5, 0.0, -0.5, False),
    (0.3, 0.5, 0.0, True),
    (0.0, 0.0, 0.0, False),
    (0.5, 0.5, -0.5, False),
])
def test_prc_delay_advance(theta, refractory, phi, refractory_hit):
    response = prc_delay_advance(theta, DelayAdvanceParams(refractory=refractory))
    assert response.phi == pytest.approx(phi)
    assert response.refractory is refractory_hit
    assert response.absorb is False


def test_prc_delay_advance_matches_direct_evaluation():
    rng = np.random.default_rng(11)
    for theta, refractory in zip(rng.random(1000), rng.random(1000) * 0.99):
        response = prc_delay_advance(theta, DelayAdvanceParams(refractory=refractory))
        if theta < refractory:
            expected = 0.0
        elif theta <= 0.5:
            expected = -theta
        else:
            expected = 1.0 - theta
        assert response.phi == expected


@pytest.mark.parametrize("refractory", [-0.1, 1.0, 1.5])
def test_delay_advance_params_reject_refractory_outside_range(refractory):
    with pytest.raises(ValueError):
        DelayAdvanceParams(refractory=refractory)


# =============================================================================
# State maps
# =============================================================================


def test_peskin_jump_closed_form():
    gamma, epsilon, theta = 3.0, 0.002, 0.5
    scale = 1.0 - math.exp(-gamma)
    x = scale * (1.0 - math.exp(-gamma * theta)) + epsilon
    expected = math.log(scale / (scale - x)) / gamma - theta
    response = state_map_jump(theta, PESKIN)
    assert response.absorb is False
    assert response.phi == pytest.approx(expected, rel=1e-12)
    assert response.phi == pytest.approx(0.003159, abs=1e-6)


def test_mirollo_strogatz_absorbs_near_threshold():
    response = state_map_jump(0.999, MIROLLO_STROGATZ)
    assert response.absorb is True


def test_mirollo_strogatz_jump_closed_form():
    b, epsilon, theta = 5.0, 0.002, 0.3
    x = math.log(1.0 + (math.exp(b) - 1.0) * theta) / b + epsilon
    expected = (math.exp(b * x) - 1.0) / (math.exp(b) - 1.0) - theta
    assert state_map_jump(theta, MIROLLO_STROGATZ).phi == pytest.approx(expected, rel=1e-12)


def test_rfa_jump_closed_form():
    response = state_map_jump(0.5, RFA)
    assert response.phi == pytest.approx(0.5 * (math.exp(0.002) - 1.0), rel=1e-12)
    assert response.absorb is False


def _closed_form_jump(theta, epsilon, curve):
    """Direct evaluation of the state-map jump; None means absorb."""
    if isinstance(curve, PeskinCurve):
        scale = 1.0 - math.exp(-curve.gamma)
        x = scale * (1.0 - math.exp(-curve.gamma * theta)) + epsilon
        if x >= scale * scale:
            return None
        return math.log(scale / (scale - x)) / curve.gamma - theta
    if isinstance(curve, MirolloStrogatzCurve):
        x = math.log(1.0 + (math.exp(curve.b) - 1.0) * theta) / curve.b + epsilon
        if x >= 1.0:
            return None
        return (math.exp(curve.b * x) - 1.0) / (math.exp(curve.b) - 1.0) - theta
    return theta * (math.exp(epsilon) - 1.0)


@pytest.mark.parametrize("params", [PESKIN, MIROLLO_STROGATZ, RFA], ids=lambda p: p.curve.name)
def test_state_map_jump_matches_direct_evaluation(params):
    rng = np.random.default_rng(5)
    for theta in rng.uniform(1e-6, 1.0, 1000):
        expected = _closed_form_jump(float(theta), params.epsilon, params.curve)
        response = state_map_jump(float(theta), params)
        if expected is None:
            assert response.absorb is True
        else:
            assert response.absorb is False
            assert response.phi == pytest.approx(expected, rel=1e-9, abs=1e-15)


@pytest.mark.parametrize("curve, low", [
    (PeskinCurve(3.0), 0.0),
    (MirolloStrogatzCurve(5.0), 0.0),
    (RfaCurve(), 1e-6),
])
def test_inverse_map_round_trip(curve, low):
    for theta in np.linspace(low, 1.0, 1000):
        assert abs(state_inverse(state_forward(theta, curve), curve) - theta) < 1e-12


@pytest.mark.parametrize("curve, low", [
    (PeskinCurve(3.0), 0.0),
    (MirolloStrogatzCurve(5.0), 0.0),
    (RfaCurve(), 1e-6),
], ids=["peskin", "mirollo_strogatz", "rfa"])
def test_state_forward_is_strictly_increasing(curve, low):
    values = [state_forward(theta, curve) for theta in np.linspace(low, 1.0, 1000)]
    assert np.all(np.diff(values) > 0)


def test_state_forward_rejects_phase_outside_unit_interval():
    with pytest.raises(StateMapDomainError):
        state_forward(1.5, PeskinCurve(3.0))


def test_rfa_forward_rejects_zero():
    with pytest.raises(StateMapDomainError):
        state_forward(0.0, RfaCurve())


def test_peskin_inverse_rejects_state_beyond_threshold():
    curve = PeskinCurve(3.0)
    with pytest.raises(StateMapDomainError):
        state_inverse(curve.threshold_state + 0.01, curve)


def test_state_inverse_rejects_non_finite():
    with pytest.raises(StateMapDomainError):
        state_inverse(math.nan, MirolloStrogatzCurve(5.0))


def test_state_map_params_reject_non_positive_epsilon():
    with pytest.raises(ValueError):
        StateMapParams(epsilon=0.0, curve=PeskinCurve(3.0))


@pytest.mark.parametrize("curve_type", [PeskinCurve, MirolloStrogatzCurve])
def test_curves_reject_non_positive_shape(curve_type):
    with pytest.raises(ValueError):
        curve_type(0.0)


# =============================================================================
# Reachback accumulator
# =============================================================================


def test_rfa_record_accumulates_without_moving():
    acc = RfaAccumulator(pending=0.01)
    acc = rfa_record(acc, 0.25, RFA)
    assert acc.pending == pytest.approx(0.01 + 0.25 * (math.exp(0.002) - 1.0), rel=1e-12)


def test_rfa_record_at_zero_phase_records_nothing():
    acc = RfaAccumulator(pending=0.01)
    assert rfa_record(acc, 0.0, RFA) == acc


def test_rfa_record_requires_rfa_curve():
    with pytest.raises(ValueError):
        rfa_record(RfaAccumulator(), 0.5, PESKIN)


def test_rfa_record_stops_at_threshold():
    acc = rfa_record(RfaAccumulator(), 0.9995, RFA)
    assert acc.pending == pytest.approx(1.0 - 0.9995, rel=1e-9)
    acc = rfa_record(RfaAccumulator(pending=0.004), 0.998, RFA)
    assert acc.pending == pytest.approx(1.0 - 0.998, rel=1e-9)


def test_rfa_flush_returns_total_and_resets():
    phi, acc = rfa_flush(RfaAccumulator(pending=0.0042))
    assert phi == 0.0042
    assert acc.pending == 0.0
    assert rfa_flush(RfaAccumulator()) == (0.0, RfaAccumulator())


# =============================================================================
# Algorithms
# =============================================================================


def test_create_algorithm_variants():
    prc = create_algorithm("prc", refractory=0.2)
    assert isinstance(prc, DelayAdvanceAlgorithm)
    assert prc.refractory == 0.2
    assert not prc.fixed_coupling

    peskin = create_algorithm("peskin", epsilon=0.002, gamma=3.0)
    assert isinstance(peskin, StateMapAlgorithm)
    assert peskin.name == "peskin"
    assert peskin.fixed_coupling

    ms = create_algorithm("mirollo_strogatz", epsilon=0.002, b=5.0)
    assert ms.name == "mirollo_strogatz"

    rfa = create_algorithm("rfa", epsilon=0.002)
    assert isinstance(rfa, ReachbackAlgorithm)
    assert rfa.reachback and rfa.fixed_coupling


@pytest.mark.parametrize("name, kwargs", [
    ("unknown", {}),
    ("peskin", {"epsilon": 0.002}),
    ("peskin", {"gamma": 3.0}),
    ("mirollo_strogatz", {"epsilon": 0.002}),
    ("rfa", {}),
])
def test_create_algorithm_rejects_bad_parameters(name, kwargs):
    with pytest.raises(ValueError):
        create_algorithm(name, **kwargs)


def test_state_map_algorithm_rejects_rfa_curve():
    with pytest.raises(ValueError):
        StateMapAlgorithm(RFA)


def test_equivalent_prc_of_delay_advance_is_the_prc():
    grid = [0.0, 0.2, 0.5, 0.7, 1.0]
    values = equivalent_prc(grid, create_algorithm("prc"))
    assert values == pytest.approx([0.0, -0.2, -0.5, 0.3, 0.0])


def test_equivalent_prc_reports_jump_to_threshold_on_absorption():
    algorithm = create_algorithm("mirollo_strogatz", epsilon=0.002, b=5.0)
    values = equivalent_prc([0.999], algorithm)
    assert values == pytest.approx([0.001])


def test_equivalent_prc_is_finite_for_every_algorithm():
    grid = np.linspace(0.0, 1.0, 101)
    for algorithm in (
        create_algorithm("prc", refractory=0.4),
        create_algorithm("peskin", epsilon=0.002, gamma=3.0),
        create_algorithm("mirollo_strogatz", epsilon=0.002, b=5.0),
        create_algorithm("rfa", epsilon=0.002),
    ):
        assert all(math.isfinite(v) for v in equivalent_prc(grid, algorithm))


def test_state_map_jumps_are_advances():
    for params in (PESKIN, MIROLLO_STROGATZ):
        for theta in np.linspace(0.0, 0.98, 50):
            response = state_map_jump(theta, params)
            assert response.absorb or response.phi >= 0.0
