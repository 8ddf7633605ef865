import json
import math

import pytest

import pmcverify as pv


def test_catalog_lists_every_family():
    families = {e["family"] for e in pv.catalog()}
    assert "clifford_torus" in families
    assert "perturbed_graph" in families
    assert len(families) == 7


def test_torus_state_matches_closed_form():
    torus = pv.make_surface("clifford_torus", c=1.0, r=0.6)
    s = torus.state(0.3, 1.2)
    assert s["h_norm"] == pytest.approx(7 / 24, abs=1e-12)
    assert s["phi_norm2"] == pytest.approx(625 / 288, abs=1e-12)
    assert s["gaussian_curvature"] == pytest.approx(0.0, abs=1e-12)
    assert torus.expected["phi_norm2"] == pytest.approx(625 / 288)
    assert torus.topology == "torus"


def test_identity_on_torus():
    torus = pv.make_surface("clifford_torus", r=0.6)
    r = pv.evaluate_identity(torus, "simons-phi-h", 0.4, 1.3)
    assert r["status"] == "pass"
    assert r["residual"] <= 1e-9
    assert math.fsum(r["terms"].values()) == pytest.approx(r["rhs"], abs=1e-12)


def test_suite_and_minimal_slice():
    res = pv.run_suite(pv.make_surface("slice", c=-1.0), grid=(4, 4))
    assert res["pass"]
    by_name = {s["identity"]: s for s in res["summary"]}
    assert by_name["SimonsPhiH"]["not_applicable"] == 16
    assert by_name["SimonsPhiH"]["first_reason"] == "minimal"


def test_suite_reports_are_ordered():
    res = pv.run_suite(pv.make_surface("round_sphere"), identities=["gauss", "codazzi:E4"], grid=(2, 3),
                       reports=True)
    labels = [r["identity"] for r in res["reports"]]
    assert labels == ["GaussEq", "Codazzi(E4)"] * 6


def test_gates():
    g = pv.check_gate(pv.make_surface("clifford_torus", r=0.6), "gap-main")
    assert g["status"] == "pass"
    assert g["margins"]["2|H|^2+2c-(5c/2)|T|^2-|phi|^2"] == pytest.approx(0.0, abs=1e-9)
    h = pv.check_gate(pv.make_surface("horosphere", c=-1.0), "gap-cneg")
    assert h["status"] == "hypothesis_violated"
    bad = pv.check_gate(pv.make_surface("perturbed_graph", eps=0.1), "gap-main")
    assert bad["status"] == "fail"
    assert bad["reason"] == "pmc residual exceeded"


def test_run_cli_round_trip():
    code, out, _ = pv.run_cli(["verify", "--surface", "clifford_torus", "--c", "1", "--r", "0.6", "--grid", "3"])
    assert code == 0
    assert json.loads(out)["summary"]["status"] == "pass"
    code, _, err = pv.run_cli(["verify", "--surface", "nosuch"])
    assert code == 1
    assert "clifford_torus" in err


def test_errors():
    with pytest.raises(pv.PmcError):
        pv.make_surface("clifford_torus", c=1.0, r=1.5)
    with pytest.raises(ValueError):
        pv.make_surface("nosuch")
    with pytest.raises(ValueError):
        pv.evaluate_identity(pv.make_surface("slice"), "bogus", 0.0, 0.0)
