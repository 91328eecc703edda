"""Run configs, pipeline reports, renderings, and the CLI front end."""

import json

import pytest

from cvstab.cli import main
from cvstab.report import (
    ConfigError,
    Report,
    RunConfig,
    parse_report,
    render,
    render_machine,
    run,
    taxonomy_generators,
)

_CACHE = {}


def cached_run(**kwargs):
    key = tuple(sorted(kwargs.items()))
    if key not in _CACHE:
        _CACHE[key] = run(RunConfig(**kwargs))
    return _CACHE[key]


def test_mode_must_be_known():
    with pytest.raises(ConfigError):
        RunConfig(mode="inspect", taxonomy="flux")


def test_exactly_one_condensate_source():
    with pytest.raises(ConfigError):
        RunConfig(mode="condense")
    with pytest.raises(ConfigError):
        RunConfig(mode="condense", taxonomy="flux", generators=(("1", "0"),))


def test_lattice_modes_need_torus():
    for mode in ("lattice-verify", "spectrum", "full"):
        with pytest.raises(ConfigError):
            RunConfig(mode=mode, taxonomy="flux", L=1)
    RunConfig(mode="condense", taxonomy="flux", L=1)


def test_taxonomy_strings_expand():
    assert len(taxonomy_generators("flux")) == 1
    assert len(taxonomy_generators("flux-charge(3)")) == 2
    assert len(taxonomy_generators("composite(2)")) == 1
    assert len(taxonomy_generators("double(1, 2)")) == 2
    assert len(taxonomy_generators("even-K(1,1,2)")) == 2


@pytest.mark.parametrize("bad", ["spam", "double(1)", "flux(3)",
                                 "even-K(1,2)", "composite()"])
def test_taxonomy_rejects_malformed(bad):
    with pytest.raises(ConfigError):
        taxonomy_generators(bad)


def test_generator_parse_failure_is_config_error():
    with pytest.raises(ConfigError):
        run(RunConfig(mode="condense", generators=(("spam", "0"),)))


def test_condense_report_double():
    report, status = cached_run(mode="condense", taxonomy="double(1,2)")
    assert status == 0 and report.passed
    assert report.classification == "U(1)_2 x U(1)_-4"
    assert report.fusion_group == "Z2 x Z4"
    assert report.fusion_orders == [2, 4]
    assert [row["spin"] for row in report.spins] == ["1/4", "7/8"]
    assert report.braiding == [["1/2", "0"], ["0", "3/4"]]
    assert report.gsd_torus == 8
    assert report.verification["condensation"].startswith("PASS")


def test_condense_report_even_k():
    report, status = cached_run(mode="condense", taxonomy="even-K(1,1,2)")
    assert status == 0
    assert report.fusion_group == "Z2 x Z6"
    assert report.gsd_torus == 12


def test_condense_report_continuous():
    report, status = cached_run(mode="condense", taxonomy="flux")
    assert status == 0
    assert report.fusion_group == "U(1) x Z"
    assert report.gsd_torus is None
    assert report.spins == []


def test_nonboson_generator_fails_run():
    report, status = run(RunConfig(mode="condense",
                                   generators=(("1/2", "1/2"),)))
    assert status == 1 and not report.passed
    assert report.verification["condensation"].startswith("FAIL")
    assert report.classification is None


def test_boundary_report_toric():
    report, status = cached_run(mode="boundary", taxonomy="flux-charge(2)")
    assert status == 0
    assert len(report.lagrangian_subgroups) == 2
    assert ["(0, 0)", "(0, 1)"] in report.lagrangian_subgroups
    assert report.central_charge == 0


def test_boundary_report_chiral_double():
    report, status = cached_run(mode="boundary", taxonomy="double(1,2)")
    assert status == 0
    assert report.lagrangian_subgroups == []
    assert report.central_charge == 0


def test_boundary_skipped_for_continuous():
    report, status = cached_run(mode="boundary", taxonomy="flux")
    assert status == 0
    assert report.lagrangian_subgroups is None
    assert any("skipped" in w for w in report.warnings)


def full_double():
    return cached_run(mode="full", taxonomy="double(1,2)", L=2)


def test_lattice_stage_full_double():
    report, status = full_double()
    assert status == 0 and report.passed
    assert report.verification["stabilizer-commutation"] == "PASS (276 pairs)"
    assert [f["kind"] for f in report.logical_factors] == ["qudit", "qudit"]
    assert [f["dimension"] for f in report.logical_factors] == [2, 4]
    assert report.verification["gsd-consistency"] == "PASS"
    assert report.verification["logical-orders"] == "PASS"


def test_spectral_stage_full_double():
    report, _ = full_double()
    dets = [lay["sqrt_abs_det"] for lay in report.spectral["layers"]]
    assert dets == [256, 4096]
    assert all(lay["gap"] > 0 for lay in report.spectral["layers"])
    assert all(lay["unique_ground_state"]
               for lay in report.spectral["layers"])
    assert report.verification["curvature-identity"].startswith("PASS")
    assert report.verification["normal-modes"].startswith("PASS")
    assert report.spectral["gap_estimate"]["delta"] > 0


def test_spectral_stage_skipped_when_layers_couple():
    report, status = cached_run(mode="spectrum", taxonomy="flux")
    assert status == 0
    assert report.spectral is None
    assert any("skipped" in w for w in report.warnings)


def test_machine_roundtrip_and_determinism():
    for kwargs in (dict(mode="condense", taxonomy="double(1,2)"),
                   dict(mode="boundary", taxonomy="flux-charge(3)"),
                   dict(mode="full", taxonomy="double(1,2)", L=2)):
        report, _ = cached_run(**kwargs)
        text = render_machine(report)
        assert parse_report(text) == report
        again, _ = run(RunConfig(**kwargs))
        assert render_machine(again) == text


def test_machine_report_is_json_with_exact_scalars():
    report, _ = cached_run(mode="condense", taxonomy="double(1,2)")
    data = json.loads(render_machine(report))
    assert data["braiding"] == [["1/2", "0"], ["0", "3/4"]]
    assert data["config"]["taxonomy"] == "double(1,2)"


def test_render_sections_and_spin_row():
    report, _ = full_double()
    text = render(report)
    for heading in ("## condensation", "## boundary", "## logical content",
                    "## spectral", "## verification", "## warnings"):
        assert heading in text
    assert "a₋₄-analogue: order 4, spin 7/8 ≡ -1/8" in text
    assert text.rstrip().endswith("overall: PASS")


def test_render_omits_empty_warning_section():
    report, _ = cached_run(mode="condense", taxonomy="flux-charge(2)")
    assert report.warnings == []
    assert "## warnings" not in render(report)


def test_render_even_k_fusion_line():
    report, _ = cached_run(mode="condense", taxonomy="even-K(1,1,2)")
    assert "fusion: Z2 x Z6" in render(report)


def test_cli_inline_taxonomy(tmp_path, capsys):
    out = tmp_path / "report.json"
    status = main(["condense", "--taxonomy", "double", "--n", "1",
                   "--m", "2", "--out", str(out)])
    assert status == 0
    stdout = capsys.readouterr().out
    assert "classification: U(1)_2 x U(1)_-4" in stdout
    parsed = parse_report(out.read_text())
    assert isinstance(parsed, Report)
    assert parsed.gsd_torus == 8


def test_cli_generator_pairs(capsys):
    status = main(["condense", "--generator", "1,0", "--generator", "0,2"])
    assert status == 0
    assert "toric-GKP" in capsys.readouterr().out


def test_cli_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"taxonomy": "flux-charge(2)", "L": 2}))
    status = main(["boundary", "--config", str(cfg)])
    assert status == 0
    assert "lagrangian subgroups (2):" in capsys.readouterr().out


def test_cli_verification_failure_exit(capsys):
    status = main(["condense", "--generator", "1/2,1/2"])
    assert status == 1
    assert "overall: FAIL" in capsys.readouterr().out


def test_cli_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["condense", "--taxonomy", "double", "--n", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["condense", "--taxonomy", "flux", "--generator", "1,0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["condense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["condense", "--generator", "nope"])
    assert exc.value.code == 2
    assert main(["condense", "--generator", "spam,0"]) == 2
    capsys.readouterr()


def test_cli_bad_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"taxonomy": "flux", "frobnicate": 3}))
    assert main(["condense", "--config", str(cfg)]) == 2
    assert main(["condense", "--config", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()
