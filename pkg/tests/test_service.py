from __future__ import annotations

import copy

import pytest
from fastapi.testclient import TestClient

from lcdp_select import store
from lcdp_select.service import create_app

from conftest import GOLDEN_TOTALS, build_golden_project

API = "/api/v1"


@pytest.fixture
def client(tmp_path):
    app = create_app(data_dir=tmp_path / "data")
    with TestClient(app) as test_client:
        test_client.data_dir = tmp_path / "data"
        yield test_client


@pytest.fixture
def golden_id(client):
    project = build_golden_project("svc-golden")
    store.save(project, client.data_dir / f"{project.id}.json")
    return project.id


def stored_bytes(client, project_id):
    return (client.data_dir / f"{project_id}.json").read_bytes()


class TestTemplates:
    def test_list(self, client):
        body = client.get(f"{API}/templates").json()
        sectors = [t["sector"] for t in body["templates"]]
        assert sectors == ["financial_services", "manufacturing", "pharma"]
        pharma = body["templates"][2]
        assert pharma["weights"]["GS"] == 0.30


class TestProjectLifecycle:
    def test_create_get_put(self, client):
        created = client.post(f"{API}/projects", json={
            "organization": "Acme", "industry": "pharma", "template": "pharma",
            "platforms": [{"id": "p1", "name": "One"}],
        })
        assert created.status_code == 201
        doc = created.json()
        assert doc["weights"]["GS"] == 0.30
        assert doc["platforms"][0]["id"] == "p1"
        assert any(a["action"] == "project.created" for a in doc["audit"])

        got = client.get(f"{API}/projects/{doc['id']}").json()
        assert got == doc

        got["organization"] = "Acme Global"
        updated = client.put(f"{API}/projects/{doc['id']}",
                             json={"project": got, "actor": "tester"})
        assert updated.status_code == 200
        assert updated.json()["organization"] == "Acme Global"
        assert updated.json()["version"] > doc["version"]

    def test_unknown_template_is_400_with_violations(self, client):
        response = client.post(f"{API}/projects", json={
            "organization": "Acme", "template": "retail"})
        assert response.status_code == 400
        assert response.json()["violations"]

    def test_unknown_project_404(self, client):
        assert client.get(f"{API}/projects/ghost").status_code == 404
        assert client.post(f"{API}/projects/ghost/rank").status_code == 404

    def test_list_projects(self, client, golden_id):
        body = client.get(f"{API}/projects").json()
        assert [p["id"] for p in body["projects"]] == [golden_id]

    def test_malformed_body_400(self, client):
        response = client.post(f"{API}/projects", json={"industry": 7})
        assert response.status_code == 400
        assert any("organization" in v for v in response.json()["violations"])


class TestOptimisticConcurrency:
    def test_stale_version_409_leaves_state_identical(self, client, golden_id):
        doc = client.get(f"{API}/projects/{golden_id}").json()
        before = stored_bytes(client, golden_id)
        stale = copy.deepcopy(doc)
        stale["version"] = doc["version"] - 1
        stale["organization"] = "Hijack"
        response = client.put(f"{API}/projects/{golden_id}", json={"project": stale})
        assert response.status_code == 409
        assert stored_bytes(client, golden_id) == before
        assert client.get(f"{API}/projects/{golden_id}").json() == doc

    def test_version_strictly_increases_per_mutation(self, client, golden_id):
        versions = [client.get(f"{API}/projects/{golden_id}").json()["version"]]
        for organization in ("One", "Two", "Three"):
            doc = client.get(f"{API}/projects/{golden_id}").json()
            doc["organization"] = organization
            response = client.put(f"{API}/projects/{golden_id}", json={"project": doc})
            assert response.status_code == 200
            versions.append(response.json()["version"])
        assert versions == sorted(set(versions))

    def test_put_always_audits(self, client, golden_id):
        doc = client.get(f"{API}/projects/{golden_id}").json()
        audit_before = len(doc["audit"])
        response = client.put(f"{API}/projects/{golden_id}", json={"project": doc})
        assert response.status_code == 200
        assert len(response.json()["audit"]) > audit_before


class TestComputations:
    def test_rank_golden(self, client, golden_id):
        body = client.post(f"{API}/projects/{golden_id}/rank").json()
        totals = {e["platform"]: e["total"] for e in body["entries"]}
        for pid, expected in GOLDEN_TOTALS.items():
            assert totals[pid] == pytest.approx(expected, abs=1e-9)
        assert [e["platform"] for e in body["entries"]] == ["A", "B", "C"]

    def test_rank_does_not_mutate(self, client, golden_id):
        before = stored_bytes(client, golden_id)
        client.post(f"{API}/projects/{golden_id}/rank")
        assert stored_bytes(client, golden_id) == before

    def test_sensitivity_defaults(self, client, golden_id):
        body = client.post(f"{API}/projects/{golden_id}/sensitivity", json={}).json()
        intervals = {i["criterion"]: i for i in body["intervals"]}
        assert intervals["UCF"]["high"] == pytest.approx(7 / 24, abs=1e-9)
        assert intervals["BPO"]["low"] == pytest.approx(1 / 16, abs=1e-9)

    def test_sensitivity_with_scenarios_and_delta(self, client, golden_id):
        body = client.post(f"{API}/projects/{golden_id}/sensitivity", json={
            "criteria": ["GS"],
            "scenarios": [{"name": "uniform", "weights": {
                "BPO": 0.2, "UCF": 0.2, "II": 0.2, "GS": 0.2, "AEA": 0.2}}],
            "delta": 0.1,
        }).json()
        assert [i["criterion"] for i in body["intervals"]] == ["GS"]
        assert body["scenarios"][0]["order"][0] == "A"
        assert body["tornado"]["GS"][0] == pytest.approx(4.433333333, abs=1e-6)

    def test_sensitivity_bad_delta_422(self, client, golden_id):
        response = client.post(f"{API}/projects/{golden_id}/sensitivity",
                               json={"delta": 1.5})
        assert response.status_code == 422

    def test_report_markdown(self, client, golden_id):
        response = client.post(f"{API}/projects/{golden_id}/report")
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/markdown")
        assert "| Total Score | 1.00 | | | | 4.50 | 4.30 | 3.35 |" in response.text


class TestWhatif:
    def test_base_weights_equal_rank_response(self, client, golden_id):
        ranked = client.post(f"{API}/projects/{golden_id}/rank").json()
        doc = client.get(f"{API}/projects/{golden_id}").json()
        whatif = client.post(f"{API}/projects/{golden_id}/whatif",
                             json={"weights": doc["weights"]}).json()
        assert whatif == ranked

    def test_ucf_040_flips_leader_to_b(self, client, golden_id):
        body = client.post(f"{API}/projects/{golden_id}/whatif",
                           json={"criterion": "UCF", "new_value": 0.40}).json()
        assert body["entries"][0]["platform"] == "B"

    def test_whatif_never_persists_or_audits(self, client, golden_id):
        before = stored_bytes(client, golden_id)
        audit_before = client.get(f"{API}/projects/{golden_id}/audit").json()["entries"]
        for _ in range(5):
            client.post(f"{API}/projects/{golden_id}/whatif",
                        json={"criterion": "UCF", "new_value": 0.40})
        assert stored_bytes(client, golden_id) == before
        audit_after = client.get(f"{API}/projects/{golden_id}/audit").json()["entries"]
        assert audit_after == audit_before

    def test_whatif_requires_one_form_400(self, client, golden_id):
        response = client.post(f"{API}/projects/{golden_id}/whatif", json={})
        assert response.status_code == 400


class TestConstrainEndpoint:
    def test_apply_floor(self, client, golden_id):
        response = client.post(f"{API}/projects/{golden_id}/weights/constrain",
                               json={"floors": {"GS": 0.40}})
        assert response.status_code == 200
        assert response.json()["weights"]["GS"] == pytest.approx(0.40, abs=1e-12)
        audit = client.get(f"{API}/projects/{golden_id}/audit").json()["entries"]
        assert audit[-1]["action"] == "weights.constrained"

    def test_infeasible_floors_422_state_unchanged(self, client, golden_id):
        before = stored_bytes(client, golden_id)
        response = client.post(f"{API}/projects/{golden_id}/weights/constrain",
                               json={"floors": {"GS": 0.8, "BPO": 0.4}})
        assert response.status_code == 422
        assert stored_bytes(client, golden_id) == before


class TestAuditEndpoint:
    def test_audit_entries_served(self, client, golden_id):
        body = client.get(f"{API}/projects/{golden_id}/audit").json()
        assert body["project"] == golden_id
        assert body["entries"][0]["action"] == "project.created"

    def test_4xx_never_mutates(self, client, golden_id):
        before = stored_bytes(client, golden_id)
        client.post(f"{API}/projects/{golden_id}/whatif", json={})           # 400
        client.get(f"{API}/projects/ghost")                                   # 404
        client.post(f"{API}/projects/{golden_id}/sensitivity", json={"delta": 9})  # 422
        doc = client.get(f"{API}/projects/{golden_id}").json()
        doc["version"] += 5
        client.put(f"{API}/projects/{golden_id}", json={"project": doc})      # 409
        assert stored_bytes(client, golden_id) == before
