"""HTTP session service: state shape, mutation, undo, error codes."""

from fastapi.testclient import TestClient

from gradalg.models import markov_seed
from gradalg.seedcore import seed_to_document
from gradalg.server import app

client = TestClient(app)


def new_markov():
    resp = client.post("/session", json={"model": "markov"})
    assert resp.status_code == 200
    return resp.json()


def test_create_markov_session():
    body = new_markov()
    assert body["id"]
    state = body["state"]
    assert state["model"] == "markov"
    assert state["seed"]["names"] == ["x1", "x2", "x3"]
    assert state["cluster"] == ["1:1,0,0", "1:0,1,0", "1:0,0,1"]
    assert state["degrees"] == [[[1], [1], [1]]]
    assert state["history"] == []
    assert state["history_length"] == 0


def test_mutate_updates_cluster_and_history():
    sid = new_markov()["id"]
    resp = client.post(f"/session/{sid}/mutate", json={"k": 1})
    assert resp.status_code == 200
    state = resp.json()
    assert state["cluster"][0] == "1:-1,0,2;1:-1,2,0"
    assert state["cluster"][1] == "1:0,1,0"
    assert state["degrees"] == [[[1], [1], [1]]]
    assert state["history"] == [1]
    assert state["history_length"] == 1


def test_mutate_then_undo_is_identity():
    sid = new_markov()["id"]
    before = client.get(f"/session/{sid}").json()
    assert client.post(f"/session/{sid}/mutate", json={"k": 2}).status_code == 200
    after = client.post(f"/session/{sid}/undo")
    assert after.status_code == 200
    assert after.json() == before


def test_invalid_mutation_index_is_422():
    sid = new_markov()["id"]
    for bad in (0, 4, -1, "x", None):
        resp = client.post(f"/session/{sid}/mutate", json={"k": bad})
        assert resp.status_code == 422
    assert client.post(f"/session/{sid}/mutate", json={}).status_code == 422


def test_undo_with_empty_history_is_422():
    sid = new_markov()["id"]
    assert client.post(f"/session/{sid}/undo").status_code == 422


def test_unknown_session_is_404():
    assert client.get("/session/nope").status_code == 404
    assert client.post("/session/nope/mutate", json={"k": 1}).status_code == 404
    assert client.post("/session/nope/undo").status_code == 404
    assert client.get("/session/nope/variables").status_code == 404


def test_variables_accumulate_and_dedupe():
    sid = new_markov()["id"]
    client.post(f"/session/{sid}/mutate", json={"k": 1})
    body = client.get(f"/session/{sid}/variables").json()
    assert len(body["variables"]) == 4
    assert [v["first_seen"] for v in body["variables"]] == [0, 0, 0, 1]
    assert all(v["degrees"] == [[1]] for v in body["variables"])
    # mutating back reproduces x1, which is already recorded
    client.post(f"/session/{sid}/mutate", json={"k": 1})
    body = client.get(f"/session/{sid}/variables").json()
    assert len(body["variables"]) == 4


def test_grassmannian_model_and_frozen_bounds():
    resp = client.post("/session", json={"model": "grassmannian", "k": 2, "n": 4})
    assert resp.status_code == 200
    state = resp.json()["state"]
    assert state["seed"]["n"] == 5
    assert state["seed"]["r"] == 1
    sid = resp.json()["id"]
    # index of a frozen vertex is not a legal mutation
    assert client.post(f"/session/{sid}/mutate", json={"k": 2}).status_code == 422


def test_custom_seed_document():
    doc = seed_to_document(markov_seed())
    resp = client.post("/session", json={"seed": doc})
    assert resp.status_code == 200
    state = resp.json()["state"]
    assert state["model"] == "custom"
    assert state["seed"] == doc


def test_bad_create_payloads_are_422():
    assert client.post("/session", json={"model": "nope"}).status_code == 422
    broken = {
        "n": 2,
        "r": 2,
        "B": [[0, 1], [1, 0]],
        "names": ["a", "b"],
        "gradings": [],
    }
    assert client.post("/session", json={"seed": broken}).status_code == 422


def test_dynkin_model():
    resp = client.post("/session", json={"model": "dynkin", "kind": "A", "rank": 2})
    assert resp.status_code == 200
    state = resp.json()["state"]
    assert state["model"] == "A2"
    assert state["seed"]["B"] == [[0, -1], [1, 0]]
