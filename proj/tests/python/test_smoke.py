import json
import math

import numpy as np
import pytest

import specnorm


def test_norms_on_identity():
    out = specnorm.norms(np.eye(3))
    assert out["schema_version"] == specnorm.SCHEMA_VERSION
    assert out["norm_profile"]["spectral"] == pytest.approx(1.0)
    assert out["norm_profile"]["height"] == pytest.approx(1.0)


def test_tensor_power_spectral_norm():
    a3 = specnorm.gen_tensor(3)
    assert a3.shape == (8, 8)
    assert a3.dtype == np.float64
    assert specnorm.norms(a3)["norm_profile"]["spectral"] == pytest.approx((1 + math.sqrt(5)) ** 3 / 8, rel=1e-9)
    assert np.linalg.norm(a3, 2) == pytest.approx(4.2360679775, rel=1e-8)


def test_witness_never_exceeds_oracle():
    rng = np.random.default_rng(5)
    for _ in range(10):
        a = rng.normal(size=(5, 7)) + 1j * rng.normal(size=(5, 7))
        w = specnorm.delta_witness(a)
        o = specnorm.exact_delta(a)
        assert w["floor_thm"] <= w["ratio"] <= o["ratio"] * (1 + 1e-12)
        r = specnorm.rho_witness(a)
        assert r["ratio"] <= specnorm.exact_rho(a)["ratio"] * (1 + 1e-12)


def test_oracle_is_worker_independent():
    a = np.random.default_rng(9).normal(size=(4, 12))
    one = specnorm.exact_delta(a, workers=1)
    many = specnorm.exact_delta(a, workers=4)
    assert json.dumps(one, sort_keys=True) == json.dumps(many, sort_keys=True)


def test_text_round_trip():
    a = np.array([[1.5, -2.0], [0.0, 3.25]])
    text = specnorm.format_matrix(a)
    assert text == "2 2\n1.5 -2\n0 3.25\n"
    np.testing.assert_array_equal(specnorm.parse_matrix(text), a)
    z = specnorm.parse_matrix("1 2\n(1,2) 3\n")
    assert z.dtype == np.complex128
    assert z[0, 0] == 1 + 2j


def test_graph_and_extremal_reports():
    cycle = [(0, 1), (1, 2), (2, 3), (3, 0)]
    audit = specnorm.graph_audit(4, cycle, samples=100)
    assert audit["forward"]["violations"] == 0
    assert specnorm.graph_witness(4, cycle)["sigma"] == pytest.approx(2.0)
    assert specnorm.tau(2)["values"] == ["4", "3", "1"]
    assert specnorm.entropy(0.01)["grid_margin"] <= 1e-10
    assert len(specnorm.tau_scaled_series(20)) == 20
    assert specnorm.kneser_audit(2)["exact_delta"] == pytest.approx(2.5)


def test_errors_carry_their_kind():
    with pytest.raises(specnorm.SpecnormError) as info:
        specnorm.delta_witness(np.zeros((2, 2)))
    assert info.value.args[0] == "ZeroMatrix"
    with pytest.raises(specnorm.SpecnormError) as info:
        specnorm.exact_delta(np.ones((1, 30)))
    assert info.value.args[0] == "CapExceeded"
    with pytest.raises(specnorm.SpecnormError):
        specnorm.graph_audit(2, [(1, 1)])
    with pytest.raises(ValueError):
        specnorm.norms(np.ones(3))
