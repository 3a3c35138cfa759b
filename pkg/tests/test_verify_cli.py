"""Tests for the verification campaigns and the command-line driver."""

import json
from fractions import Fraction

import pytest

from hallq.cli import build_parser, main, parse_module
from hallq.exact import GaussianRational
from hallq.quiver import CyclicQuiver, ModuleIso
from hallq.stability import StabilityFunction
from hallq.verify import (
    CampaignConfig,
    ConfigError,
    SABOTAGE_MODES,
    campaign_cyclic,
    campaign_hn_identity,
    campaign_integration,
    campaign_invariance,
    campaign_jacobian,
    campaign_pentagon,
    campaign_stable_properties,
    campaign_stables,
)

Q3 = CyclicQuiver(3)


def g(re, im):
    return GaussianRational(Fraction(re), Fraction(im))


Z_REF = StabilityFunction(3, (g(2, 1), g(-2, 1), g(1, 2)))


# ----------------------------------------------------------------------
# Configuration validation
# ----------------------------------------------------------------------

def test_config_defaults_truncation():
    cfg = CampaignConfig(n=4).check()
    assert cfg.truncation == 8


def test_config_rejects_bad_values():
    with pytest.raises(ConfigError):
        CampaignConfig(n=1).check()
    with pytest.raises(ConfigError):
        CampaignConfig(trials=0).check()
    with pytest.raises(ConfigError):
        CampaignConfig(truncation=0).check()
    with pytest.raises(ConfigError):
        CampaignConfig(n=2, explicit_z=Z_REF).check()


def test_config_rejects_unknown_sabotage():
    with pytest.raises(ConfigError):
        CampaignConfig(sabotage="no-such-mode").check("invariance")
    with pytest.raises(ConfigError):
        CampaignConfig(sabotage="include-delta").check("cyclic")


def test_sabotage_modes_registry():
    assert set(SABOTAGE_MODES) == {
        "invariance", "cyclic", "hn-identity", "pentagon", "jacobian",
        "integration",
    }


# ----------------------------------------------------------------------
# Campaigns: passing runs
# ----------------------------------------------------------------------

def test_campaign_stables_reference():
    ok, payload = campaign_stables(CampaignConfig(n=3, explicit_z=Z_REF, trials=1))
    assert ok and payload["ok"]
    got = [(s["socle"], s["length"]) for s in payload["stables"]]
    assert got == [(2, 1), (1, 2), (3, 3), (3, 1), (1, 1)]
    assert payload["delta_stable"] == [3, 3]
    assert payload["delta_via_runs"] == [3, 3]


def test_campaign_stables_non_discrete_witness():
    z = StabilityFunction(2, (g(0, 1), g(0, 1)))
    ok, payload = campaign_stables(CampaignConfig(n=2, explicit_z=z, trials=1))
    assert not ok
    assert payload["witness"][0]["reason"] == "equal phases"


def test_campaign_stable_properties():
    ok, payload = campaign_stable_properties(CampaignConfig(n=2, trials=5))
    assert ok
    assert payload["witness"] == []


def test_campaign_invariance():
    ok, payload = campaign_invariance(CampaignConfig(n=3, truncation=4, trials=3))
    assert ok
    assert len(payload["factor_orders"]) == 3
    assert payload["element_sha256"]


def test_campaign_cyclic():
    ok, payload = campaign_cyclic(CampaignConfig(n=3, truncation=4, trials=1))
    assert ok
    assert payload["witness"] == []


def test_campaign_hn_identity():
    ok, payload = campaign_hn_identity(CampaignConfig(n=2, truncation=4, trials=2))
    assert ok
    assert payload["witness"] == []


def test_campaign_pentagon_exact_shape():
    ok, payload = campaign_pentagon(CampaignConfig(n=3, truncation=6, trials=1))
    assert ok
    assert payload["left_factors"] == [[1, 0, 0], [0, 1, 0]]
    assert payload["right_factors"] == [[0, 1, 0], [1, 1, 0], [1, 0, 0]]
    assert sorted(payload["canceled"]) == [[0, 0, 1], [1, 0, 1]]


def test_campaign_pentagon_needs_n3():
    with pytest.raises(ConfigError):
        campaign_pentagon(CampaignConfig(n=2))


def test_campaign_jacobian():
    ok, payload = campaign_jacobian(CampaignConfig(n=3, truncation=4, trials=3))
    assert ok
    # the quotient category never contributes a factor longer than 2
    for order in payload["factor_orders"]:
        for d in order:
            assert sum(d) <= 2


def test_campaign_jacobian_needs_n3():
    with pytest.raises(ConfigError):
        campaign_jacobian(CampaignConfig(n=4))


def test_campaign_integration_small():
    ok, payload = campaign_integration(
        CampaignConfig(n=2, truncation=4, max_total=3, primes=(2, 3, 5))
    )
    assert ok
    assert payload["pairs_checked"] > 0


# ----------------------------------------------------------------------
# Campaigns: sabotage must fail
# ----------------------------------------------------------------------

def test_sabotage_invariance_include_delta():
    ok, payload = campaign_invariance(
        CampaignConfig(n=3, truncation=6, trials=2, sabotage="include-delta")
    )
    assert not ok
    assert payload["witness"]


def test_sabotage_invariance_reverse_order():
    ok, _ = campaign_invariance(
        CampaignConfig(n=3, truncation=6, trials=2, sabotage="reverse-order")
    )
    assert not ok


def test_sabotage_cyclic_drop_factor():
    ok, _ = campaign_cyclic(
        CampaignConfig(n=3, truncation=4, trials=1, sabotage="drop-factor")
    )
    assert not ok


def test_sabotage_hn_flip_twist():
    ok, _ = campaign_hn_identity(
        CampaignConfig(n=3, truncation=4, trials=1, sabotage="flip-twist")
    )
    assert not ok


def test_sabotage_pentagon_reverse_residual():
    ok, _ = campaign_pentagon(
        CampaignConfig(n=3, truncation=6, trials=1, sabotage="reverse-residual")
    )
    assert not ok


def test_sabotage_jacobian_include_delta():
    ok, _ = campaign_jacobian(
        CampaignConfig(n=3, truncation=6, trials=2, sabotage="include-delta")
    )
    assert not ok


def test_sabotage_integration_flip_twist():
    ok, _ = campaign_integration(
        CampaignConfig(n=3, truncation=4, max_total=2, primes=(2, 3, 5),
                       sabotage="flip-twist")
    )
    assert not ok


# ----------------------------------------------------------------------
# Module expression parsing
# ----------------------------------------------------------------------

def test_parse_module_forms():
    assert parse_module("S1", Q3) == ModuleIso.of(Q3.simple(1))
    assert parse_module("R1,2", Q3) == ModuleIso.of(Q3.R(1, 2))
    assert parse_module("s2 + r3,3", Q3) == ModuleIso.of(Q3.simple(2), Q3.R(3, 3))
    assert parse_module("0", Q3) == ModuleIso.zero()


def test_parse_module_rejects_garbage():
    with pytest.raises(ConfigError):
        parse_module("X9", Q3)
    with pytest.raises(ConfigError):
        parse_module("R1", Q3)


# ----------------------------------------------------------------------
# CLI driver
# ----------------------------------------------------------------------

def write_config(tmp_path, **data):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(data))
    return str(path)


REF_CHARGES = [["2", "1"], ["-2", "1"], ["1", "2"]]


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_stables_with_config(capsys, tmp_path):
    cfg = write_config(tmp_path, n=3, charges=REF_CHARGES)
    code, out, _ = run_cli(capsys, "stables", "--config", cfg)
    assert code == 0
    data = json.loads(out)
    assert data["report"]["delta_stable"] == [3, 3]
    assert "timing_seconds" in data


def test_cli_stables_needs_seed_or_charges(capsys):
    code, _, err = run_cli(capsys, "stables")
    assert code == 2
    assert "seed" in err


def test_cli_stables_with_seed(capsys):
    code, out, _ = run_cli(capsys, "stables", "--seed", "1", "--n", "2")
    assert code == 0
    assert json.loads(out)["report"]["ok"] is True


def test_cli_report_is_deterministic(capsys):
    def report_text():
        code, out, _ = run_cli(capsys, "verify", "invariance",
                               "--n", "3", "--trunc", "4", "--trials", "2",
                               "--seed", "7")
        assert code == 0
        return json.dumps(json.loads(out)["report"], sort_keys=True)

    assert report_text() == report_text()


def test_cli_verify_sabotage_exits_one(capsys):
    code, out, _ = run_cli(capsys, "verify", "invariance", "--n", "3",
                           "--trunc", "4", "--trials", "2",
                           "--sabotage", "reverse-order")
    assert code == 1
    assert json.loads(out)["report"]["ok"] is False


def test_cli_verify_bad_sabotage_exits_two(capsys):
    code, _, err = run_cli(capsys, "verify", "cyclic", "--sabotage", "bogus")
    assert code == 2
    assert "sabotage" in err


def test_cli_verify_pentagon_low_n_exits_two(capsys):
    code, _, _ = run_cli(capsys, "verify", "pentagon", "--n", "2")
    assert code == 2


def test_cli_unknown_campaign_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "no-such-campaign"])


def test_cli_hn_report(capsys, tmp_path):
    cfg = write_config(tmp_path, charges=REF_CHARGES)
    code, out, _ = run_cli(capsys, "hn", "--module", "R2,2", "--config", cfg)
    assert code == 0
    strata = json.loads(out)["report"]["strata"]
    assert [s["subquotient"] for s in strata] == [[[2, 1]], [[3, 1]]]


def test_cli_hall_table(capsys):
    code, out, _ = run_cli(capsys, "hall", "S1", "S2", "--n", "3")
    assert code == 0
    table = json.loads(out)["report"]["polynomials"]
    by_big = {json.dumps(row["N"]): row["coeffs"] for row in table}
    assert by_big["[[1, 2]]"] == [1]
    assert by_big["[[1, 1], [2, 1]]"] == [1]


def test_cli_ez_runs(capsys):
    code, out, _ = run_cli(capsys, "ez", "--seed", "3", "--n", "2",
                           "--trunc", "2")
    assert code == 0
    assert json.loads(out)["report"]["ok"] is True


def test_cli_json_file_output(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "stables", "--seed", "1", "--n", "2",
                           "--json", str(target))
    assert code == 0
    assert json.loads(target.read_text())["report"] == json.loads(out)["report"]


def test_cli_config_unknown_keys(capsys, tmp_path):
    cfg = write_config(tmp_path, charges=REF_CHARGES, shenanigans=1)
    code, _, err = run_cli(capsys, "stables", "--config", cfg)
    assert code == 2
    assert "shenanigans" in err


def test_cli_config_invalid_json(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{oops")
    code, _, err = run_cli(capsys, "stables", "--config", str(path))
    assert code == 2
    assert "JSON" in err


def test_cli_flag_overrides_config_file(capsys, tmp_path):
    cfg = write_config(tmp_path, n=2, seed=1, trials=4)
    code, out, _ = run_cli(capsys, "verify", "invariance", "--config", cfg,
                           "--trials", "2", "--trunc", "4")
    assert code == 0
    assert json.loads(out)["report"]["trials"] == 2


def test_parser_rejects_unknown_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["frobnicate"])
