from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from optimist.agent import Optimist
from optimist.graphs import encode_graph6, named_graph
from optimist.service import create_app

from .conftest import CONJECTURE_ONE

TARGET = "independence_number"


@pytest.fixture
def client():
    agent = Optimist(
        [named_graph("complete", 2), named_graph("complete", 3), named_graph("path", 3)]
    )
    return TestClient(create_app(agent))


class TestState:
    def test_fresh_session(self, client):
        payload = client.get("/state").json()
        assert payload["graphs"] == 3
        assert payload["graph_names"] == ["G0", "G1", "G2"]
        assert payload["known_theorems"] == 0

    def test_graph_count_grows(self, client):
        client.get(f"/conjectures/{TARGET}")
        client.post("/graphs", json={"graph6": encode_graph6(named_graph("path", 6))})
        assert client.get("/state").json()["graphs"] == 4

    def test_no_session_gives_503(self):
        bare = TestClient(create_app(None))
        assert bare.get("/state").status_code == 503


class TestConjectures:
    def test_top_entry_text(self, client):
        payload = client.get(f"/conjectures/{TARGET}").json()
        assert payload["upper"][0]["text"] == CONJECTURE_ONE
        assert payload["upper"][0]["touch"] == 3
        assert payload["upper"][0]["id"]

    def test_unknown_target_404(self, client):
        assert client.get("/conjectures/bogus").status_code == 404

    def test_generation_triggered_then_stable(self, client):
        first = client.get(f"/conjectures/{TARGET}").json()
        second = client.get(f"/conjectures/{TARGET}").json()
        assert first == second


class TestGraphUpload:
    def test_p6_falsifies_top_conjecture(self, client):
        top = client.get(f"/conjectures/{TARGET}").json()["upper"][0]
        response = client.post(
            "/graphs", json={"graph6": encode_graph6(named_graph("path", 6))}
        )
        assert response.status_code == 200
        body = response.json()
        assert top["id"] in body["falsified"]
        assert top["id"] in body["removed"]
        texts = [c["text"] for c in client.get(f"/conjectures/{TARGET}").json()["upper"]]
        assert CONJECTURE_ONE not in texts

    def test_edge_list_upload(self, client):
        client.get(f"/conjectures/{TARGET}")
        response = client.post("/graphs", json={"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]})
        assert response.status_code == 200
        assert response.json()["graph_name"] == "G3"

    def test_malformed_graph6_is_400(self, client):
        assert client.post("/graphs", json={"graph6": "!!"}).status_code == 400

    def test_missing_payload_is_400(self, client):
        assert client.post("/graphs", json={}).status_code == 400

    def test_over_ceiling_is_422(self, client):
        big = encode_graph6(named_graph("path", 25))
        assert client.post("/graphs", json={"graph6": big}).status_code == 422

    def test_failed_mutation_leaves_state_unchanged(self, client):
        before = client.get("/state").json()
        client.post("/graphs", json={"graph6": "!!"})
        client.post("/graphs", json={"graph6": encode_graph6(named_graph("path", 25))})
        assert client.get("/state").json() == before

    def test_harmless_graph_has_empty_falsified(self, client):
        client.get(f"/conjectures/{TARGET}")
        client.post("/graphs", json={"graph6": encode_graph6(named_graph("path", 6))})
        body = client.post(
            "/graphs", json={"graph6": encode_graph6(named_graph("path", 6))}
        ).json()
        assert body["falsified"] == []


class TestTheorems:
    def test_learning_removes_from_pool(self, client):
        top = client.get(f"/conjectures/{TARGET}").json()["upper"][0]
        response = client.post("/theorems", json={"conjecture_id": top["id"]})
        assert response.status_code == 200
        ids = [c["id"] for c in client.get(f"/conjectures/{TARGET}").json()["upper"]]
        assert top["id"] not in ids
        theorems = client.get("/theorems").json()["theorems"]
        assert [t["text"] for t in theorems] == [top["text"]]

    def test_unknown_id_404(self, client):
        client.get(f"/conjectures/{TARGET}")
        assert client.post("/theorems", json={"conjecture_id": "ffff"}).status_code == 404

    def test_repeat_learning_404(self, client):
        top = client.get(f"/conjectures/{TARGET}").json()["upper"][0]
        client.post("/theorems", json={"conjecture_id": top["id"]})
        assert (
            client.post("/theorems", json={"conjecture_id": top["id"]}).status_code
            == 404
        )


class TestLogAndSave:
    def test_log_records_graph_addition(self, client):
        client.get(f"/conjectures/{TARGET}")
        client.post("/graphs", json={"graph6": encode_graph6(named_graph("path", 6))})
        events = client.get("/log").json()["events"]
        assert any(e["event"] == "graph-added" for e in events)
        assert all("seq" in e for e in events)

    def test_save_endpoint(self, client, tmp_path):
        path = str(tmp_path / "session.json")
        assert client.post("/save", json={"path": path}).status_code == 200
        reloaded = Optimist.load_session(path)
        assert len(reloaded.table.rows) == 3
