from __future__ import annotations

import json

import pytest

from optimist.cli import main

from .conftest import CONJECTURE_ONE, FIXTURES


class TestConjectureCommand:
    def test_case_study_report(self, capsys):
        code = main(
            [
                "conjecture",
                "--graphs", str(FIXTURES / "case_study"),
                "--target", "independence_number",
            ]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert f"Conjecture U0. {CONJECTURE_ONE}" in out
        assert "With equality on 3 graphs." in out

    def test_huge_min_touch_gives_empty_report(self, capsys):
        code = main(
            [
                "conjecture",
                "--graphs", str(FIXTURES / "case_study"),
                "--target", "independence_number",
                "--min-touch", "999",
            ]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "Conjecture U0." not in out

    def test_unknown_target_fails(self, capsys):
        code = main(
            [
                "conjecture",
                "--graphs", str(FIXTURES / "case_study"),
                "--target", "bogus",
            ]
        )
        assert code == 1
        assert "unknown target" in capsys.readouterr().err

    def test_missing_input_fails(self, capsys):
        code = main(["conjecture", "--graphs", "/nonexistent", "--target", "order"])
        assert code == 1

    def test_pool_dump(self, tmp_path, capsys):
        out_file = tmp_path / "pools.json"
        code = main(
            [
                "conjecture",
                "--graphs", str(FIXTURES / "case_study"),
                "--target", "independence_number",
                "--out", str(out_file),
            ]
        )
        assert code == 0
        payload = json.loads(out_file.read_text())
        assert payload["target"] == "independence_number"
        assert payload["upper"][0]["relation"] == "="


class TestReplayCommand:
    def test_fixture_replays_clean(self, capsys):
        code = main(
            ["replay", "--script", str(FIXTURES / "case_study_replay.jsonl")]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "Known theorems:" in out
        assert "Theorem 5." in out

    def test_empty_script(self, tmp_path, capsys):
        script = tmp_path / "empty.jsonl"
        script.write_text("")
        code = main(["replay", "--script", str(script)])
        out = capsys.readouterr().out
        assert code == 0
        assert "Empty session" in out

    def test_invalid_graph_aborts_with_line(self, tmp_path, capsys):
        script = tmp_path / "bad.jsonl"
        script.write_text(
            '{"event": "add-graph", "graph6": "A_"}\n'
            '{"event": "add-graph", "graph6": "!!"}\n'
        )
        code = main(["replay", "--script", str(script)])
        err = capsys.readouterr().err
        assert code == 1
        assert "bad.jsonl:2" in err

    def test_unknown_event_aborts(self, tmp_path, capsys):
        script = tmp_path / "bad.jsonl"
        script.write_text('{"event": "dance"}\n')
        assert main(["replay", "--script", str(script)]) == 1

    def test_learn_by_index(self, tmp_path, capsys):
        script = tmp_path / "by_index.jsonl"
        script.write_text(
            '{"event": "add-graph", "graph6": "A_"}\n'
            '{"event": "add-graph", "graph6": "Bw"}\n'
            '{"event": "add-graph", "graph6": "Bg"}\n'
            '{"event": "conjecture", "target": "independence_number"}\n'
            '{"event": "learn-theorem", "target": "independence_number",'
            ' "bound": "upper", "index": 0}\n'
        )
        code = main(["replay", "--script", str(script)])
        out = capsys.readouterr().out
        assert code == 0
        assert f"Learned: {CONJECTURE_ONE}" in out

    def test_session_out(self, tmp_path):
        target = tmp_path / "session.json"
        code = main(
            [
                "replay",
                "--script", str(FIXTURES / "case_study_replay.jsonl"),
                "--session-out", str(target),
            ]
        )
        assert code == 0 and target.exists()


class TestEnvConfig:
    def test_config_file_sets_defaults(self, tmp_path, capsys, monkeypatch):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"smokey_mode": "strong", "min_touch": 2}))
        monkeypatch.setenv("OPTIMIST_CONFIG", str(config))
        code = main(
            [
                "conjecture",
                "--graphs", str(FIXTURES / "case_study"),
                "--target", "independence_number",
            ]
        )
        out = capsys.readouterr().out
        assert code == 0
        # min_touch=2 keeps only the touch-3 equality among the uppers
        assert "With equality on 2 graphs." not in out

    def test_explicit_flags_win(self, tmp_path, capsys, monkeypatch):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"min_touch": 999}))
        monkeypatch.setenv("OPTIMIST_CONFIG", str(config))
        code = main(
            [
                "conjecture",
                "--graphs", str(FIXTURES / "case_study"),
                "--target", "independence_number",
                "--min-touch", "1",
            ]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "Conjecture U0." in out

    def test_bad_config_file(self, tmp_path, capsys, monkeypatch):
        config = tmp_path / "config.json"
        config.write_text("{broken")
        monkeypatch.setenv("OPTIMIST_CONFIG", str(config))
        code = main(
            [
                "conjecture",
                "--graphs", str(FIXTURES / "case_study"),
                "--target", "independence_number",
            ]
        )
        assert code == 1


class TestServeCommand:
    def test_bad_session_file_fails(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("nonsense")
        assert main(["serve", "--session", str(bad)]) == 1

    def test_needs_some_input(self, capsys):
        assert main(["serve"]) == 1
        assert "needs" in capsys.readouterr().err
