import dataclasses
import json
import math

import numpy as np
import pytest

from cmlog import verify
from cmlog.cutplane import eval_g_direct
from cmlog.density import T0, density_constants, rho
from cmlog.transforms import stieltjes_g


@pytest.fixture(scope="module")
def report():
    return verify.run_all(seed=0)


@pytest.fixture(scope="module")
def mutated_report():
    return verify.run_all(seed=0, mutate=True)


def _by_name(rep):
    return {r.name: r for r in rep.results}


def test_registry_order_and_size(report):
    assert [r.name for r in report.results] == list(verify.CHECKS)
    assert len(verify.CHECKS) == 15


@pytest.mark.parametrize("name", [n for n in verify.CHECKS if n != "check_phi_zero"])
def test_checks_pass(report, name):
    res = _by_name(report)[name]
    assert res.passed, res.to_dict()


def test_phi_zero_check_reports_true_mass(report):
    # the total mass is 1/2, not the claimed 0.5192; the check stays red with an explanation
    res = _by_name(report)["check_phi_zero"]
    obs = dict(res.observed)
    assert not res.passed
    assert obs["phi_0"] == pytest.approx(0.5, abs=1e-10)
    assert res.diagnostic


def test_mutation_breaks_core_checks(mutated_report):
    failed = set(mutated_report.summary()["failed_checks"])
    assert {"check_representation", "check_complete_monotonicity",
            "check_phi_positivity"} <= failed
    assert len(failed) >= 3


def test_additive_perturbation_breaks_representation():
    def bumped(t):
        t = np.asarray(t, dtype=float)
        return rho(t) + np.where(t < 1, 0.1, 0.0)

    assert abs(stieltjes_g(2.0, rho=bumped) - eval_g_direct(2.0)) > 1e-3


def test_determinism():
    a = verify.run_all(seed=3, only=["check_positive_definiteness", "check_conformal_sector"])
    b = verify.run_all(seed=3, only=["check_positive_definiteness", "check_conformal_sector"])
    assert json.dumps(a.body()) == json.dumps(b.body())


def test_json_schema(report):
    doc = json.loads(report.to_json())
    assert set(doc) == {"timestamp", "seed", "settings", "summary", "results"}
    assert doc["summary"]["total"] == 15
    for r in doc["results"]:
        assert set(r) == {"name", "passed", "observed", "tolerance", "paper_ref", "diagnostic"}
        assert isinstance(r["passed"], bool)
        for o in r["observed"]:
            assert set(o) == {"label", "value"}


def test_unknown_check():
    with pytest.raises(KeyError):
        verify.run_check("check_nothing")
    with pytest.raises(KeyError):
        verify.run_all(only=["check_nothing"])


def test_boundary_anchor_values():
    obs = dict(verify.check_boundary_density().observed)
    assert obs["abs_diff_G(-1+i0)_vs_-i*pi"] == 0.0
    assert obs["abs_diff_t=1"] == 0.0


def test_integral_bound_margins():
    res = verify.check_integral_bounds()
    obs = dict(res.observed)
    assert res.passed
    for key in ("margin_0_1", "margin_1_2", "margin_2_inf"):
        assert obs[key] >= verify.BOUND_MARGIN


def test_phi_positivity_with_doubled_positive_part_fails():
    c = density_constants()
    doubled = dataclasses.replace(c, A_pos=2 * c.A_pos)
    assert not verify.check_phi_positivity(constants=doubled).passed


def test_phi_positivity_with_doubled_negative_part_still_passes():
    # B_neg < 0, so doubling it only lowers the bound
    c = density_constants()
    doubled = dataclasses.replace(c, B_neg=2 * c.B_neg)
    assert verify.check_phi_positivity(constants=doubled).passed


def test_positive_definiteness_scalar_case():
    res = verify.check_positive_definiteness(a=1.0, n=1, trials=3)
    assert res.passed


def test_positive_definiteness_of_g_fails():
    # G(0.5) < 0, so the diagonal of the G matrix is negative
    assert eval_g_direct(0.5).real < 0
    assert not verify.check_positive_definiteness(a=0.5, function="g").passed


def test_pivoted_cholesky():
    ok, piv = verify.pivoted_cholesky(np.diag([1.0, 4.0, 2.0]), -1e-8)
    assert ok and piv == [4.0, 2.0, 1.0]
    ok, _ = verify.pivoted_cholesky(np.array([[1.0, 2.0], [2.0, 1.0]]), -1e-8)
    assert not ok
    ok, _ = verify.pivoted_cholesky(np.ones((3, 3)), -1e-8)  # rank one, semidefinite
    assert ok


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_contour_derivative_on_exp(k, monkeypatch):
    monkeypatch.setattr(verify, "eval_g_direct", np.exp)
    assert verify.contour_derivative(2.0, k) == pytest.approx(math.exp(2.0), rel=1e-12)


def test_stieltjes_counterexample_values():
    obs = dict(verify.check_stieltjes_counterexample().observed)
    # mpmath: h(2) = 1/(2 (1 - G(2))) = 1.02383487901612921975884124919
    assert obs["h(2)"] == pytest.approx(1.0238348790161292, abs=1e-12)
    assert obs["h(1)"] == pytest.approx(1.0, abs=1e-12)


def test_growth_constant_positive():
    assert 1.0 < verify.growth_constant() < 10.0


def test_summary_counts(report):
    s = report.summary()
    assert s["total"] == s["passed"] + s["failed"]
    assert s["failed_checks"] == ["check_phi_zero"]
    assert T0 > 0
