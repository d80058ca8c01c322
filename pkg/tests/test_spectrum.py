import json
import math

import numpy as np
import pytest

from qspectra.errors import DomainError
from qspectra.qalgebra import theta_reparam
from qspectra.spectrum import (
    Spectrum,
    SpectrumVariation,
    action_variation,
    concatenate,
    effective_action,
    flow_derivative,
    power_transform,
    q_det,
    q_logdet,
    relative_q_logdet,
    spectral_weight,
    spectrum_from_csv,
    spectrum_from_json,
    spectrum_to_csv,
    spectrum_to_json,
    theta_covariance_residual,
)


def _random_spectrum(rng, size=None):
    size = size or int(rng.integers(2, 9))
    return Spectrum(tuple(rng.uniform(0.5, 5.0, size)), 1.0)


def test_spectrum_validation():
    spec = Spectrum((2.0, 3.0), scale=2.0)
    assert len(spec) == 2
    assert spec.dimensionless().tolist() == [1.0, 1.5]
    with pytest.raises(DomainError):
        Spectrum(())
    with pytest.raises(DomainError):
        Spectrum((1.0, -2.0))
    with pytest.raises(DomainError):
        Spectrum((1.0,), scale=0.0)
    with pytest.raises(DomainError):
        Spectrum((math.inf,))


def test_q_logdet_values():
    assert q_logdet(Spectrum((1.0, 4.0)), 0.0) == 3.0
    assert q_logdet(Spectrum((2.0, 3.0)), 1.0) == pytest.approx(
        math.log(6.0), rel=1e-15
    )
    # frozen: 2 (sqrt 2 + sqrt 3 - 2)
    assert q_logdet(Spectrum((2.0, 3.0)), 0.5) == pytest.approx(
        2.2925287398839447, rel=1e-14
    )
    assert q_logdet(Spectrum((2.0, 3.0)), 1.7) == pytest.approx(
        1.315663909365103, rel=1e-14
    )


def test_q_logdet_scale_division():
    spec = Spectrum((2.0, 4.0), scale=2.0)
    assert q_logdet(spec, 1.0) == pytest.approx(math.log(2.0), rel=1e-15)


def test_q_logdet_ordering_invariance():
    rng = np.random.default_rng(11)
    eigs = tuple(rng.uniform(0.5, 5.0, 8))
    for q in (0.0, 0.5, 1.7):
        base = q_logdet(Spectrum(eigs), q)
        assert q_logdet(Spectrum(eigs[::-1]), q) == base


def test_q_det_classical_and_clamped():
    spec = Spectrum((2.0, 3.0))
    assert q_det(spec, 1.0).value == pytest.approx(6.0, rel=1e-14)
    # Gamma_0 = -1 hits the positive-part truncation exactly
    res = q_det(Spectrum((0.5, 0.5)), 0.0)
    assert res.value == 0.0 and res.clamped


def test_effective_action_is_q_logdet():
    spec = Spectrum((1.5, 2.5, 3.5))
    assert effective_action(spec, 1.3) == q_logdet(spec, 1.3)


def test_concatenate_folds_scales():
    a = Spectrum((2.0, 4.0), scale=2.0)
    b = Spectrum((3.0,), scale=1.0)
    both = concatenate(a, b)
    assert both.scale == 1.0
    assert both.eigenvalues == (1.0, 2.0, 3.0)
    for q in (0.0, 1.0, 1.6):
        assert q_logdet(both, q) == pytest.approx(
            q_logdet(a, q) + q_logdet(b, q), abs=1e-13
        )


def test_relative_q_logdet_cancels_reference():
    rng = np.random.default_rng(5)
    spec = _random_spectrum(rng, 6)
    ref = _random_spectrum(rng, 6)
    for q in (0.0, 0.5, 1.0, 2.0):
        assert relative_q_logdet(spec, ref, q) == pytest.approx(
            q_logdet(spec, q) - q_logdet(ref, q), abs=1e-12
        )
    assert relative_q_logdet(spec, spec, 1.4) == 0.0


def test_action_variation_matches_finite_differences():
    rng = np.random.default_rng(17)
    eps = 1e-5
    for q in (0.3, 1.0, 1.7):
        spec = _random_spectrum(rng, 5)
        lam = np.asarray(spec.eigenvalues)
        delta = rng.uniform(-1.0, 1.0, 5)
        delta /= np.linalg.norm(delta)
        analytic = action_variation(spec, tuple(delta), q)
        up = Spectrum(tuple(lam + eps * delta))
        dn = Spectrum(tuple(lam - eps * delta))
        fd = (q_logdet(up, q) - q_logdet(dn, q)) / (2 * eps)
        assert analytic == pytest.approx(fd, abs=1e-7)


def test_action_variation_accepts_variation_type_and_checks_shape():
    spec = Spectrum((1.0, 2.0))
    var = SpectrumVariation((0.1, -0.2))
    assert action_variation(spec, var, 0.5) == action_variation(
        spec, (0.1, -0.2), 0.5
    )
    with pytest.raises(DomainError):
        action_variation(spec, (0.1,), 0.5)
    with pytest.raises(DomainError):
        SpectrumVariation((math.nan,))


def test_action_variation_respects_scale():
    # w(lambda/mu) and delta/mu both carry the scale
    spec = Spectrum((2.0, 4.0), scale=2.0)
    folded = Spectrum((1.0, 2.0), scale=1.0)
    deltas = (0.3, -0.1)
    folded_deltas = tuple(d / 2.0 for d in deltas)
    for q in (0.4, 1.5):
        assert action_variation(spec, deltas, q) == pytest.approx(
            action_variation(folded, folded_deltas, q), rel=1e-13
        )


def test_flow_derivative_alias():
    spec = Spectrum((1.0, 3.0))
    assert flow_derivative(spec, (0.2, 0.1), 1.2) == action_variation(
        spec, (0.2, 0.1), 1.2
    )


def test_power_transform():
    spec = Spectrum((2.0, 8.0), scale=2.0)
    powered = power_transform(spec, 2.0)
    assert powered.eigenvalues == (1.0, 16.0)
    assert powered.scale == 1.0
    inverse = power_transform(spec, -1.0)
    assert inverse.eigenvalues == (1.0, 0.25)
    with pytest.raises(DomainError):
        power_transform(spec, 0.0)


def test_theta_covariance_residual_small():
    rng = np.random.default_rng(23)
    for _ in range(10):
        spec = _random_spectrum(rng)
        for q in (0.3, 0.7, 1.2, 2.4):
            for theta in (-2.0, -0.5, 0.5, 3.0):
                gamma = q_logdet(spec, theta_reparam(q, theta))
                res = theta_covariance_residual(spec, q, theta)
                assert res <= 1e-11 * (1.0 + abs(gamma))


def test_theta_inversion_duality():
    rng = np.random.default_rng(29)
    for _ in range(10):
        spec = _random_spectrum(rng)
        inverse = power_transform(spec, -1.0)
        for q in (0.3, 1.2, 1.9):
            assert q_logdet(spec, 2.0 - q) == pytest.approx(
                -q_logdet(inverse, q), abs=1e-11
            )


def test_spectral_weight():
    assert spectral_weight(1.0, 1.7) == 1.0
    assert spectral_weight(0.5, 2.0) == 4.0
    assert spectral_weight(2.0, 1.0) == 0.5
    assert spectral_weight(3.0, 0.0) == 1.0
    with pytest.raises(DomainError):
        spectral_weight(0.0, 1.0)
    with pytest.raises(DomainError):
        spectral_weight(-2.0, 1.0)


def test_json_round_trip():
    spec = Spectrum((2.0, 3.0, 0.125), scale=1.5)
    text = spectrum_to_json(spec)
    back = spectrum_from_json(text)
    assert back == spec
    assert json.loads(text)["scale"] == 1.5
    with pytest.raises(DomainError):
        spectrum_from_json("[1, 2]")


def test_csv_round_trip_folds_scale():
    spec = Spectrum((2.0, 3.0), scale=2.0)
    text = spectrum_to_csv(spec)
    assert text == "1\n1.5\n"
    back = spectrum_from_csv(text)
    assert back.eigenvalues == (1.0, 1.5)
    assert back.scale == 1.0


def test_csv_preserves_full_precision():
    spec = Spectrum((math.pi, 1.0 / 3.0))
    back = spectrum_from_csv(spectrum_to_csv(spec))
    assert back.eigenvalues == spec.eigenvalues


def test_csv_parse_error_names_line():
    with pytest.raises(DomainError, match="line 2"):
        spectrum_from_csv("1.0\nnot-a-number\n")
