from __future__ import annotations

import json

import fakeredis
from fastapi.testclient import TestClient

from api.main import create_app
from shared.constants import FIXTURE_DIR
from shared.store import CampaignStore
from worker.jobs import execute_campaign


class InlineQueue:
    def __init__(self, store: CampaignStore):
        self.store = store

    def enqueue_campaign(self, campaign_id: str) -> str:
        execute_campaign(self.store, campaign_id)
        return "inline-job"


def _client() -> TestClient:
    redis = fakeredis.FakeRedis(decode_responses=True)
    store = CampaignStore(redis)
    return TestClient(create_app(store=store, queue=InlineQueue(store)))


def _line_params(**overrides) -> dict:
    params = {"d": 1, "r": 2, "color_sizes": [3, 3], "caps": [2, 1], "trials": 4, "seed": 7}
    params.update(overrides)
    return params


def _events(client: TestClient, campaign_id: str) -> str:
    with client.stream("GET", f"/api/v1/campaigns/{campaign_id}/events") as stream_response:
        return "".join(chunk for chunk in stream_response.iter_text())


def test_presets_are_listed() -> None:
    response = _client().get("/api/v1/presets")
    assert response.status_code == 200
    preset_ids = {preset["preset_id"] for preset in response.json()}
    assert {"thm51", "cor55", "prob56"} <= preset_ids


def test_campaign_lifecycle_and_event_stream() -> None:
    client = _client()
    create_response = client.post("/api/v1/campaigns", json={"mode": "campaign", "params": _line_params()})
    assert create_response.status_code == 200
    campaign_id = create_response.json()["campaign_id"]

    details = client.get(f"/api/v1/campaigns/{campaign_id}")
    assert details.status_code == 200
    assert details.json()["status"] == "completed"
    assert details.json()["trials_done"] == 4

    text = _events(client, campaign_id)
    assert "event: campaign.started" in text
    assert text.count("event: trial.completed") == 4
    assert "event: campaign.completed" in text

    event_ids = [int(line.split("id: ", 1)[1]) for line in text.splitlines() if line.startswith("id: ")]
    assert event_ids == sorted(event_ids)

    report = client.get(f"/api/v1/campaigns/{campaign_id}/report")
    assert report.status_code == 200
    assert report.json()["success_count"] == 4
    assert "wall_time" not in report.text


def test_event_stream_resumes_after_last_event_id() -> None:
    client = _client()
    campaign_id = client.post("/api/v1/campaigns", json={"params": _line_params(trials=2)}).json()["campaign_id"]
    with client.stream(
        "GET", f"/api/v1/campaigns/{campaign_id}/events", headers={"Last-Event-ID": "2"}
    ) as stream_response:
        text = "".join(chunk for chunk in stream_response.iter_text())
    event_ids = [int(line.split("id: ", 1)[1]) for line in text.splitlines() if line.startswith("id: ")]
    assert event_ids and min(event_ids) == 3


def test_hunt_campaign_reports_candidates() -> None:
    client = _client()
    params = _line_params(target="prob56", caps=[1, 1], strategy="exhaustive", trials=3)
    campaign_id = client.post("/api/v1/campaigns", json={"mode": "hunt", "params": params}).json()["campaign_id"]
    report = client.get(f"/api/v1/campaigns/{campaign_id}/report").json()
    assert report["mode"] == "hunt"
    assert report["capped_vertex_count"] == 2
    assert all(candidate["reverified"] for candidate in report["candidates"])


def test_failed_job_is_recorded() -> None:
    client = _client()
    response = client.post("/api/v1/campaigns", json={"mode": "hunt", "params": _line_params()})
    campaign_id = response.json()["campaign_id"]
    details = client.get(f"/api/v1/campaigns/{campaign_id}").json()
    assert details["status"] == "failed"
    assert "hunt parameters not met" in details["error"]
    assert "event: campaign.failed" in _events(client, campaign_id)
    assert client.get(f"/api/v1/campaigns/{campaign_id}/report").status_code == 409


def test_invalid_params_are_rejected() -> None:
    client = _client()
    response = client.post("/api/v1/campaigns", json={"params": _line_params(caps=[1, 1])})
    assert response.status_code == 422
    assert "hypotheses not met" in json.dumps(response.json())


def test_upload_and_verify_flow() -> None:
    client = _client()
    content = (FIXTURE_DIR / "interleaved_line.tvb1").read_bytes()
    upload = client.post(
        "/api/v1/instances",
        files={"file": ("interleaved_line.tvb1", content, "text/plain")},
    )
    assert upload.status_code == 200
    body = upload.json()
    assert (body["d"], body["r"], body["m"], body["num_vertices"]) == (1, 2, 2, 6)
    instance_id = body["instance_id"]

    good = client.post(f"/api/v1/instances/{instance_id}/verify", json={"partition": "part1 2\n0 4\n3\n"})
    assert good.status_code == 200
    assert good.json()["ok"]
    assert good.json()["witness"] == ["1"]

    apart = client.post(f"/api/v1/instances/{instance_id}/verify", json={"partition": "part1 2\n0\n3\n"})
    assert apart.json()["first_violation"] == "intersection"

    malformed = client.post(f"/api/v1/instances/{instance_id}/verify", json={"partition": "part1 2\n0\n"})
    assert malformed.status_code == 400
    assert "expected 2 faces" in malformed.json()["detail"]


def test_combinatorial_upload_skips_geometry() -> None:
    client = _client()
    content = (FIXTURE_DIR / "worked_example.tvb1").read_bytes()
    instance_id = client.post(
        "/api/v1/instances", files={"file": ("example.tvb1", content, "text/plain")}
    ).json()["instance_id"]
    partition = (FIXTURE_DIR / "worked_example.part1").read_text(encoding="utf-8")
    result = client.post(f"/api/v1/instances/{instance_id}/verify", json={"partition": partition}).json()
    assert result["intersection_ok"] is None
    assert result["usage"] == [2, 3, 3]
    assert result["first_violation"] == "caps"


def test_bad_uploads_and_unknown_ids() -> None:
    client = _client()
    bad = client.post("/api/v1/instances", files={"file": ("points.csv", b"1,2", "text/plain")})
    assert bad.status_code == 400
    assert client.get("/api/v1/campaigns/missing").status_code == 404
    missing = client.post("/api/v1/instances/missing/verify", json={"partition": "part1 1\n0\n"})
    assert missing.status_code == 404


class DeferredQueue:
    def __init__(self) -> None:
        self.campaign_ids: list[str] = []

    def enqueue_campaign(self, campaign_id: str) -> str:
        self.campaign_ids.append(campaign_id)
        return "deferred-job"


def test_cancel_before_the_worker_starts() -> None:
    store = CampaignStore(fakeredis.FakeRedis(decode_responses=True))
    queue = DeferredQueue()
    client = TestClient(create_app(store=store, queue=queue))
    campaign_id = client.post("/api/v1/campaigns", json={"params": _line_params()}).json()["campaign_id"]

    cancel = client.post(f"/api/v1/campaigns/{campaign_id}/cancel")
    assert cancel.json() == {"status": "cancel_requested"}

    execute_campaign(store, queue.campaign_ids[0])
    assert client.get(f"/api/v1/campaigns/{campaign_id}").json()["trials_done"] == 0
    assert client.post(f"/api/v1/campaigns/{campaign_id}/cancel").json() == {"status": "canceled"}
    assert client.get(f"/api/v1/campaigns/{campaign_id}/report").status_code == 409
