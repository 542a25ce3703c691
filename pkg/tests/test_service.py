import csv
import io
import json

import pytest
from fastapi.testclient import TestClient

from rankfusion.service.app import create_app

from .conftest import make_labels, make_systems, scores_csv_text


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


@pytest.fixture(scope="module")
def five_system_csv():
    systems = make_systems(42, t=5, n=50)
    labels = make_labels(42, n=50, positives=25)
    return scores_csv_text(systems, labels)


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok" and body["version"]


class TestFuseEndpoint:
    def test_full_leaderboard(self, client, five_system_csv):
        response = client.post("/fuse", json={"csv": five_system_csv})
        assert response.status_code == 200
        body = response.json()
        assert len(body["rows"]) == 109
        assert body["media_type"] == "text/csv"
        assert body["warnings"] == []
        rows = list(csv.reader(io.StringIO(body["content"])))
        assert rows[0] == ["case", "fusion_type", "weighting", "accuracy"]
        assert len(rows) == 110

    def test_json_format(self, client, five_system_csv):
        response = client.post(
            "/fuse", json={"csv": five_system_csv, "options": {"format": "json"}}
        )
        assert response.status_code == 200
        body = response.json()
        assert body["media_type"] == "application/json"
        assert len(json.loads(body["content"])) == 109

    def test_identical_requests_get_identical_content(self, client, five_system_csv):
        payload = {"csv": five_system_csv}
        first = client.post("/fuse", json=payload).json()["content"]
        second = client.post("/fuse", json=payload).json()["content"]
        assert first == second

    def test_malformed_csv_is_400_with_row_info(self, client):
        response = client.post(
            "/fuse", json={"csv": "item_id,label,A\nr1,7,0.4\nr2,0,0.5\nr3,1,0.9\n"}
        )
        assert response.status_code == 400
        assert "row 2" in response.json()["detail"]

    def test_single_system_is_400(self, client):
        response = client.post(
            "/fuse", json={"csv": "item_id,label,A\nr1,1,0.4\nr2,0,0.5\nr3,1,0.9\n"}
        )
        assert response.status_code == 400
        assert "two systems" in response.json()["detail"]

    def test_bad_options_are_422(self, client, five_system_csv):
        response = client.post(
            "/fuse", json={"csv": five_system_csv, "options": {"threshold": 2.0}}
        )
        assert response.status_code == 422
        response = client.post(
            "/fuse", json={"csv": five_system_csv, "options": {"format": "xml"}}
        )
        assert response.status_code == 422

    def test_warnings_surface_in_response(self, client):
        # identical score multisets in A and B degenerate the pair's WCDS weights
        text = "item_id,label,A,B\nr1,1,0.9,0.4\nr2,0,0.2,0.9\nr3,1,0.4,0.2\n"
        response = client.post("/fuse", json={"csv": text})
        assert response.status_code == 200
        warnings = response.json()["warnings"]
        assert any("zero diversity" in w for w in warnings)

    def test_positives_override(self, client, five_system_csv):
        response = client.post(
            "/fuse", json={"csv": five_system_csv, "options": {"positives": 50}}
        )
        assert response.status_code == 200


class TestDiversityEndpoint:
    def test_matrix_and_strengths(self, client, five_system_csv):
        response = client.post("/diversity", json={"csv": five_system_csv})
        assert response.status_code == 200
        body = response.json()
        assert body["systems"] == ["A", "B", "C", "D", "E"]
        matrix = body["cd_matrix"]
        assert len(matrix) == 5
        for i in range(5):
            assert matrix[i][i] == 0.0
            for j in range(5):
                assert matrix[i][j] == matrix[j][i] >= 0.0
        assert len(body["diversity_strength"]) == 5

    def test_json_format(self, client, five_system_csv):
        response = client.post(
            "/diversity", json={"csv": five_system_csv, "options": {"format": "json"}}
        )
        payload = json.loads(response.json()["content"])
        assert payload["systems"] == ["A", "B", "C", "D", "E"]


class TestRscEndpoint:
    def test_curves_long_format(self, client, five_system_csv):
        response = client.post("/rsc", json={"csv": five_system_csv})
        assert response.status_code == 200
        body = response.json()
        assert set(body["curves"]) == {"A", "B", "C", "D", "E"}
        for curve in body["curves"].values():
            assert curve == sorted(curve, reverse=True)
        rows = list(csv.reader(io.StringIO(body["content"])))
        assert rows[0] == ["system", "rank_position", "normalized_score"]
        assert len(rows) == 1 + 5 * 50


class TestSelfcheckEndpoint:
    def test_default_seed_passes(self, client):
        response = client.post("/selfcheck", json={})
        assert response.status_code == 200
        body = response.json()
        assert body["passed"] is True
        assert {c["name"] for c in body["checks"]} >= {
            "case-count",
            "row-count",
            "matches-reference-inverse",
            "matches-reference-direct",
            "two-system-weighting-equivalence",
            "deterministic-rerun",
            "structural-invariants",
        }

    def test_explicit_seed_echoes(self, client):
        response = client.post("/selfcheck", json={"seed": 7})
        body = response.json()
        assert body["seed"] == 7 and body["passed"] is True
