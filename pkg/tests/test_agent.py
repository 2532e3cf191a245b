from __future__ import annotations

import json

import pytest

from optimist.agent import AgentConfig, Optimist, SessionFormatError
from optimist.conjectures import holds_on, render
from optimist.graphs import named_graph
from optimist.invariants import CeilingExceededError

from .conftest import CONJECTURE_ONE

TARGET = "independence_number"


def case_study_agent():
    return Optimist(
        [named_graph("complete", 2), named_graph("complete", 3), named_graph("path", 3)]
    )


class TestInit:
    def test_empty_graph_list(self):
        with pytest.raises(ValueError, match="at least one"):
            Optimist([])

    def test_single_graph(self):
        agent = Optimist([named_graph("complete", 2)])
        assert agent.table.graph_names() == ["G0"]

    def test_pools_start_empty(self):
        agent = case_study_agent()
        assert agent.upper_pools == {} and agent.lower_pools == {}


class TestConjecture:
    def test_top_entry_is_rediscovered_equality(self):
        agent = case_study_agent()
        uppers, _ = agent.conjecture(TARGET)
        assert render(uppers[0]) == CONJECTURE_ONE
        assert agent.upper_pools[TARGET] == uppers

    def test_unknown_target(self):
        agent = case_study_agent()
        with pytest.raises(KeyError):
            agent.conjecture("nonsense")


class TestAddCounterexample:
    def test_p6_removes_equality(self):
        agent = case_study_agent()
        agent.conjecture(TARGET)
        report = agent.add_counterexample(named_graph("path", 6))
        texts = [render(c) for c in agent.upper_pools[TARGET]]
        assert CONJECTURE_ONE not in texts
        assert report["graph_name"] == "G3"
        assert report["falsified"]

    def test_harmless_graph_falsifies_nothing(self):
        agent = case_study_agent()
        agent.conjecture(TARGET)
        agent.add_counterexample(named_graph("path", 6))
        # adding the same graph again cannot contradict the refreshed pools
        report = agent.add_counterexample(named_graph("path", 6))
        assert report["falsified"] == []

    def test_duplicate_graph_gets_fresh_name(self):
        agent = case_study_agent()
        agent.conjecture(TARGET)
        report = agent.add_counterexample(named_graph("complete", 2))
        assert report["graph_name"] == "G3"
        assert len(agent.table.rows) == 4

    def test_failure_leaves_state_unchanged(self):
        agent = case_study_agent()
        agent.conjecture(TARGET)
        pools_before = dict(agent.upper_pools)
        with pytest.raises(CeilingExceededError):
            agent.add_counterexample(named_graph("path", 30))
        assert len(agent.table.rows) == 3
        assert agent.upper_pools == pools_before

    def test_pools_stay_sound(self):
        agent = case_study_agent()
        agent.conjecture(TARGET)
        for graph in (named_graph("path", 6), named_graph("cycle", 5), named_graph("star", 5)):
            agent.add_counterexample(graph)
            for pool in (agent.upper_pools[TARGET], agent.lower_pools[TARGET]):
                for conjecture in pool:
                    assert holds_on(conjecture, agent.table)[0]


class TestLearnTheorems:
    def test_learned_statement_leaves_pool(self):
        agent = case_study_agent()
        uppers, _ = agent.conjecture(TARGET)
        top = uppers[0]
        agent.learn_theorems([top])
        assert all(c.identity() != top.identity() for c in agent.upper_pools[TARGET])
        assert top in agent.known_theorems

    def test_empty_list_is_noop(self):
        agent = case_study_agent()
        agent.conjecture(TARGET)
        events_before = len(agent.event_log)
        agent.learn_theorems([])
        assert len(agent.event_log) == events_before

    def test_invalid_statement_rejected(self):
        agent = case_study_agent()
        uppers, _ = agent.conjecture(TARGET)
        top = uppers[0]
        agent.add_counterexample(named_graph("path", 6))
        with pytest.raises(ValueError, match="falsified"):
            agent.learn_theorems([top])
        assert top not in agent.known_theorems


class TestWriteOnTheWall:
    def test_contains_touch_lines(self):
        graphs = [
            named_graph("complete", 2),
            named_graph("path", 3),
            named_graph("path", 4),
            named_graph("cycle", 4),
            named_graph("cycle", 6),
        ]
        agent = Optimist(graphs)
        report = agent.write_on_the_wall(TARGET)
        assert "With equality on 5 graphs." in report
        assert (
            "If G is a connected and bipartite graph, then "
            "independence_number = order - matching_number" in report
        )

    def test_generation_triggered_when_missing(self):
        agent = case_study_agent()
        assert TARGET not in agent.upper_pools
        agent.write_on_the_wall(TARGET)
        assert TARGET in agent.upper_pools

    def test_byte_stable(self):
        agent = case_study_agent()
        first = agent.write_on_the_wall(TARGET)
        second = agent.write_on_the_wall(TARGET)
        assert first == second


class TestSessionPersistence:
    def test_round_trip_mid_case_study(self, tmp_path):
        agent = case_study_agent()
        agent.conjecture(TARGET)
        agent.add_counterexample(named_graph("path", 6))
        agent.learn_theorems([agent.upper_pools[TARGET][0]])
        path = tmp_path / "session.json"
        agent.save_session(path)
        loaded = Optimist.load_session(path)
        assert loaded.table.rows == agent.table.rows
        assert [render(c) for c in loaded.known_theorems] == [
            render(c) for c in agent.known_theorems
        ]
        assert loaded.event_log == agent.event_log
        assert loaded.conjecture(TARGET) == agent.conjecture(TARGET)

    def test_corrupted_file(self, tmp_path):
        path = tmp_path / "session.json"
        path.write_text("{this is not json")
        with pytest.raises(SessionFormatError):
            Optimist.load_session(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(SessionFormatError):
            Optimist.load_session(tmp_path / "missing.json")

    def test_version_check(self, tmp_path):
        agent = case_study_agent()
        path = tmp_path / "session.json"
        agent.save_session(path)
        payload = json.loads(path.read_text())
        payload["version"] = 42
        path.write_text(json.dumps(payload))
        with pytest.raises(SessionFormatError, match="version"):
            Optimist.load_session(path)


class TestEventReplayDeterminism:
    def test_replaying_log_reproduces_pools(self):
        first = case_study_agent()
        first.conjecture(TARGET)
        first.add_counterexample(named_graph("path", 6))
        first.learn_theorems([first.upper_pools[TARGET][0]])

        second = case_study_agent()
        second.conjecture(TARGET)
        second.add_counterexample(named_graph("path", 6))
        second.learn_theorems([second.upper_pools[TARGET][0]])

        assert first.event_log == second.event_log
        assert first.upper_pools == second.upper_pools
        assert first.lower_pools == second.lower_pools
