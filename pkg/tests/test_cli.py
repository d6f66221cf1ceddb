"""The forge command: exit codes, dispatch coverage, and reproducible outputs."""

import json

import pytest

from proofforge import cli
from proofforge import config as cfgmod
from proofforge import suite as suitemod
from proofforge.suite import CriterionResult

VALID_PROOF = "1. 0 = 0 ; COMPUTE\n"


@pytest.fixture()
def proof_file(tmp_path):
    p = tmp_path / "proof.fp"
    p.write_text(VALID_PROOF)
    return str(p)


# --- exit code contract ----------------------------------------------------------


def test_check_valid_proof_exits_zero(proof_file, capsys):
    assert cli.main(["check", "q", proof_file, "0 = 0"]) == 0
    assert "valid" in capsys.readouterr().out


def test_check_wrong_conclusion_exits_one(proof_file, capsys):
    assert cli.main(["check", "q", proof_file, "S(0) = 0"]) == 1
    assert "INVALID" in capsys.readouterr().out


def test_missing_file_is_a_usage_error(capsys):
    assert cli.main(["check", "q", "/nonexistent/proof.fp", "0 = 0"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_unparsable_formula_is_a_usage_error(proof_file, capsys):
    assert cli.main(["check", "q", proof_file, "0 = ="]) == 2


def test_no_arguments_prints_help_and_exits_two(capsys):
    assert cli.main([]) == 2
    assert "COMMAND" in capsys.readouterr().out


def test_unknown_subcommand_exits_two(capsys):
    assert cli.main(["frobnicate"]) == 2


def test_version_flag_exits_zero(capsys):
    assert cli.main(["--version"]) == 0
    assert "forge" in capsys.readouterr().out


def test_prop_without_operation_exits_two(capsys):
    assert cli.main(["prop"]) == 2


# --- verdict-style commands ---------------------------------------------------------


def test_member_verdicts(capsys):
    assert cli.main(["member", "q", "0 = 0", "--k", "1"]) == 0
    assert cli.main(["member", "q", "0 = 0 -> 0 = 0", "--k", "1"]) == 1


def test_shortest_verdicts(capsys):
    assert cli.main(["shortest", "q", "0 = 0", "--cap", "6"]) == 0
    assert cli.main(["shortest", "q", "0 = 0 -> 0 = 0", "--cap", "6"]) == 1


def test_prop_taut_verdicts(capsys):
    assert cli.main(["prop", "taut", "x0 | !x0"]) == 0
    assert cli.main(["prop", "taut", "x0 & x1"]) == 1
    out = capsys.readouterr().out
    assert "falsified" in out


def test_prop_translate_verdicts(capsys):
    assert cli.main(["prop", "translate", "x = x", "--n", "2"]) == 0
    assert cli.main(["prop", "translate", "x = 0", "--n", "2"]) == 1
    assert cli.main(["prop", "translate", "x = y", "--n", "2"]) == 2  # two free variables


def test_prop_check_verdicts(tmp_path, capsys):
    cnf = tmp_path / "c.cnf"
    cnf.write_text("p cnf 1 2\n1 0\n-1 0\n")
    good = tmp_path / "good.rp"
    good.write_text("i 0\ni 1\nr 0 1 1\n")
    bad = tmp_path / "bad.rp"
    bad.write_text("i 0\ni 1\nr 1 0 1\n")
    assert cli.main(["prop", "check", str(cnf), str(good)]) == 0
    assert cli.main(["prop", "check", str(cnf), str(bad)]) == 1
    garbled = tmp_path / "garbled.rp"
    garbled.write_text("z z z\n")
    assert cli.main(["prop", "check", str(cnf), str(garbled)]) == 2


def test_con_prints_statement_and_verdict(capsys):
    assert cli.main(["con", "q", "--m", "2"]) == 0
    out = capsys.readouterr().out
    assert "con(2):" in out and "size: 32" in out and "eval: true" in out


def test_con_no_eval_skips_the_sweep(capsys):
    assert cli.main(["con", "q", "--m", "64", "--no-eval"]) == 0
    assert "eval" not in capsys.readouterr().out


def test_diagonalize_writes_an_accepted_proof_file(tmp_path, capsys):
    out = tmp_path / "eq.fp"
    assert cli.main(["diagonalize", "q", "--psi", "x = x", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "accepted" in text
    assert out.exists() and out.read_text().startswith("1. ")


def test_diagonalize_rejects_wrong_variable(capsys):
    assert cli.main(["diagonalize", "q", "--psi", "x = x", "--var", "y"]) == 2


def test_prop_sp_emits_csv(tmp_path):
    out = tmp_path / "sp.csv"
    assert cli.main(["prop", "sp", "x0 | !x0", "--cap", "8", "--csv", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "system,formula,size,s_p,exceeds_cap,cap"
    assert len(lines) == 3  # resolution + table rows


def test_prop_psim_reports_growth(tmp_path, capsys):
    out = tmp_path / "psim.csv"
    assert cli.main(["prop", "psim", "--pair", "resolution:er", "--n-max", "1", "--csv", str(out)]) == 0
    assert "all accepted: True" in capsys.readouterr().err
    header = out.read_text().splitlines()[0]
    assert header == "formula,original_ok,translated_ok,original_size,translated_size"


# --- configuration ----------------------------------------------------------


def test_config_dumps_loads_round_trip():
    cfg = cfgmod.RunConfig(seed=7, theory="pa", deterministic=True, bench_k="10,20")
    again = cfgmod.loads(cfgmod.dumps(cfg))
    assert again == cfg


def test_config_rejects_unknown_keys_and_bad_values():
    with pytest.raises(ValueError, match="unknown key"):
        cfgmod.loads("not_a_field = 3\n")
    with pytest.raises(ValueError, match="theory"):
        cfgmod.loads("theory = zf\n")


def test_bench_csv_is_byte_identical_in_deterministic_mode(tmp_path):
    cfgfile = tmp_path / "run.cfg"
    cfgfile.write_text(cfgmod.dumps(cfgmod.RunConfig(deterministic=True)))
    outs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        rc = cli.main(["--config", str(cfgfile), "bench", "verifier", "--k", "10:40", "--m", "16", "--csv", str(out)])
        assert rc == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    header = outs[0].decode().splitlines()[0]
    assert header.split(",")[:2] == ["k", "m"]
    assert "symbol_comparisons" in header and "wall_ns" in header


def test_bench_symbol_comparisons_column_is_monotone_in_k(tmp_path):
    out = tmp_path / "mono.csv"
    assert cli.main(["--deterministic", "bench", "verifier", "--k", "10:100", "--m", "16", "--csv", str(out)]) == 0
    rows = out.read_text().splitlines()[1:]
    comparisons = [int(r.split(",")[4]) for r in rows]
    assert comparisons == sorted(comparisons)


def test_config_file_unreadable_is_usage_error():
    assert cli.main(["--config", "/nonexistent/run.cfg", "member", "q", "0 = 0", "--k", "1"]) == 2


# --- dispatch coverage -------------------------------------------------------------


def collect_subcommands():
    parser = cli.build_parser()
    subs = {}
    for action in parser._actions:
        if hasattr(action, "choices") and isinstance(action.choices, dict):
            for name, sp in action.choices.items():
                subs[name] = sp
    return subs


def test_every_module_operation_maps_to_a_real_subcommand():
    subs = collect_subcommands()
    prop_ops = set()
    for action in subs["prop"]._actions:
        if hasattr(action, "choices") and isinstance(action.choices, dict):
            prop_ops = set(action.choices)
    assert prop_ops == {"check", "taut", "translate", "sp", "psim"}
    for op, path in cli.OPERATION_MAP.items():
        head, *rest = path.split()
        assert head in subs, f"{op} maps to unknown subcommand {path!r}"
        if rest:
            assert head == "prop" and rest[0] in prop_ops or head == "bench", path


def test_operation_map_covers_every_documented_module():
    modules = {op.split(".")[0] for op in cli.OPERATION_MAP}
    assert modules == {"calculus", "verifier", "bench", "goedel", "bounded", "propositional", "suite"}


def test_every_subcommand_has_a_handler():
    subs = collect_subcommands()
    for name, sp in subs.items():
        if name == "prop":
            continue
        assert sp.get_default("handler") is not None, name


# --- the suite runner ---------------------------------------------------------------


def _stub_criteria(flags):
    def make(i, ok):
        def run(cfg):
            return CriterionResult(i, f"stub_{i}", ok, {"note": "stub"})

        return run

    return tuple(make(i + 1, ok) for i, ok in enumerate(flags))


def test_suite_writes_versioned_report(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(suitemod, "ALL_CRITERIA", _stub_criteria([True, True]))
    out = tmp_path / "report.json"
    assert cli.main(["suite", "--report", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["schema"] == "forge-report/1"
    assert report["passed"] is True
    assert [c["id"] for c in report["criteria"]] == [1, 2]
    printed = capsys.readouterr().out
    assert "criterion 1 (stub_1): PASS" in printed


def test_suite_failure_exits_one(tmp_path, monkeypatch):
    monkeypatch.setattr(suitemod, "ALL_CRITERIA", _stub_criteria([True, False]))
    out = tmp_path / "report.json"
    assert cli.main(["suite", "--report", str(out)]) == 1
    assert json.loads(out.read_text())["passed"] is False


def test_suite_honors_forge_threads_with_canonical_order(tmp_path, monkeypatch, capsys):
    import threading
    import time

    seen_threads = set()

    def make(i):
        def run(cfg):
            seen_threads.add(threading.get_ident())
            time.sleep(0.02 if i == 1 else 0.0)  # slowest first, order must hold
            return CriterionResult(i, f"stub_{i}", True, {})

        return run

    monkeypatch.setattr(suitemod, "ALL_CRITERIA", tuple(make(i) for i in (1, 2, 3)))
    monkeypatch.setenv("FORGE_THREADS", "3")
    out = tmp_path / "report.json"
    assert cli.main(["suite", "--report", str(out)]) == 0
    report = json.loads(out.read_text())
    assert [c["id"] for c in report["criteria"]] == [1, 2, 3]
    assert len(seen_threads) >= 2


def test_suite_rejects_malformed_forge_threads(monkeypatch, tmp_path):
    monkeypatch.setenv("FORGE_THREADS", "many")
    assert cli.main(["suite", "--report", str(tmp_path / "r.json")]) == 2


def test_suite_report_is_byte_identical_across_runs(tmp_path, monkeypatch):
    monkeypatch.setattr(suitemod, "ALL_CRITERIA", _stub_criteria([True]))
    blobs = []
    for name in ("r1.json", "r2.json"):
        out = tmp_path / name
        assert cli.main(["--deterministic", "suite", "--report", str(out)]) == 0
        blobs.append(out.read_bytes())
    assert blobs[0] == blobs[1]


def test_regen_report_schema(tmp_path):
    out = tmp_path / "regen.json"
    assert cli.main(["regen", "--depth", "1", "--m", "8", "--report", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["schema"] == "forge-regen/1"
    assert data["ok"] is True
    assert len(data["levels"]) == 1
