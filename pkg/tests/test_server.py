import pytest
from fastapi.testclient import TestClient

from smellforge.common import Group
from smellforge.grouping import assemble_pool
from smellforge.metrics import Thresholds
from smellforge.review import ReviewStore
from smellforge.server import create_app
from smellforge.store import read_records, route_candidates

T = Thresholds()


@pytest.fixture()
def client(mini_model, tmp_path):
    pool, _ = assemble_pool(mini_model, T)
    records, _ = route_candidates(pool)
    store = ReviewStore(records, tmp_path / "annotations.log")
    app = create_app(store, export_path=tmp_path / "dataset.jsonl")
    return TestClient(app), store, tmp_path


def answers_for(checklist):
    return {
        q["id"]: True for q in checklist["questions"] if q["kind"] == "YES_NO"
    }


def test_next_sample_and_annotate_flow(client):
    http, store, tmp_path = client
    res = http.get("/api/next-sample", params={"reviewer_id": "alice"})
    assert res.status_code == 200
    body = res.json()
    assert body["sample"] is not None
    assert body["checklist"]["smell"] == body["sample"]["smell"]

    payload = {
        "sample_id": body["sample"]["id"],
        "reviewer_id": "alice",
        "verdict": "NEGATIVE",
        "answers": answers_for(body["checklist"]),
        "action": None,
    }
    res = http.post("/api/annotations", json=payload)
    assert res.status_code == 201
    assert res.json() == {"status": "accepted"}


def test_rejected_annotation_carries_reason(client):
    http, store, _ = client
    res = http.get("/api/next-sample", params={"reviewer_id": "a"})
    sample = res.json()["sample"]
    checklist = res.json()["checklist"]
    payload = {
        "sample_id": sample["id"],
        "reviewer_id": "a",
        "verdict": "POSITIVE",  # positive without an action
        "answers": answers_for(checklist),
        "action": None,
    }
    res = http.post("/api/annotations", json=payload)
    assert res.status_code == 422
    assert "action" in res.json()["reason"]


def test_concurrent_reviewers_get_distinct_samples(client):
    http, _, _ = client
    a = http.get("/api/next-sample", params={"reviewer_id": "a"}).json()["sample"]
    b = http.get("/api/next-sample", params={"reviewer_id": "b"}).json()["sample"]
    assert a["id"] != b["id"]


def test_stats_endpoint(client):
    http, store, _ = client
    res = http.get("/api/stats")
    assert res.status_code == 200
    body = res.json()
    m_total = sum(body["pending"].values()) + sum(body["annotated"].values())
    assert m_total == sum(1 for r in store.records if r.group == Group.M_GROUP)


def test_export_endpoints(client):
    http, store, tmp_path = client
    res = http.get("/api/export")
    assert res.status_code == 200
    inline = res.json()["records"]
    res = http.post("/api/export")
    assert res.status_code == 200
    assert res.json()["written"] == len(inline)
    on_disk = read_records(tmp_path / "dataset.jsonl")
    assert len(on_disk) == len(inline)


def test_unknown_smell_filter_rejected(client):
    http, _, _ = client
    res = http.get("/api/next-sample", params={"reviewer_id": "a", "smell": "BLOB"})
    assert res.status_code == 422
