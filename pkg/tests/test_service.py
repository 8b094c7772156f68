import pytest
from fastapi.testclient import TestClient

from databus.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        r = client.get("/api/health")
        assert r.status_code == 200
        assert r.json() == {"status": "ok"}


class TestEstimate:
    def test_shor_row(self, client):
        r = client.get("/api/estimate", params={"volume": 3.27e14, "patches": 4623})
        assert r.status_code == 200
        body = r.json()
        assert (body["d_wo"], body["d_with"]) == (31, 35)
        assert (body["qc_wo"], body["qc_with"]) == (8885406, 7988544)

    def test_forced_distances(self, client):
        r = client.get(
            "/api/estimate",
            params={"volume": 5e10, "patches": 6144, "force_d_wo": 23, "force_d_with": 25},
        )
        body = r.json()
        assert (body["qc_wo"], body["qc_with"]) == (6500352, 5537792)

    def test_ancilla_override(self, client):
        r = client.get(
            "/api/estimate", params={"volume": 1e9, "patches": 12, "ancilla": 2}
        )
        assert r.status_code == 200
        assert r.json()["qc_wo"] == 2 * r.json()["d_wo"] ** 2 * 12

    def test_responses_are_deterministic(self, client):
        url = "/api/estimate?volume=1.31e11&patches=150"
        a = client.get(url)
        b = client.get(url)
        assert a.content == b.content

    def test_missing_parameter_is_field_level_400(self, client):
        r = client.get("/api/estimate", params={"volume": 1e9})
        assert r.status_code == 400
        errors = r.json()["errors"]
        assert any(e["field"] == "patches" for e in errors)

    def test_out_of_range_parameter(self, client):
        r = client.get("/api/estimate", params={"volume": -1, "patches": 10})
        assert r.status_code == 400

    def test_domain_error_maps_to_400(self, client):
        # volume below 1 passes query validation but fails the profile check
        r = client.get("/api/estimate", params={"volume": 0.5, "patches": 10})
        assert r.status_code == 400
        assert "volume" in r.json()["errors"][0]["message"]


class TestSweep:
    def test_point_count_and_boundaries(self, client):
        r = client.get(
            "/api/sweep",
            params={"volume": 1.31e11, "patches": 150, "steps": 12,
                    "scale_min": 0.1, "scale_max": 10},
        )
        assert r.status_code == 200
        body = r.json()
        assert len(body["points"]) == 12
        ds = [p["d_wo"] for p in body["points"]]
        assert ds == sorted(ds)
        for b in body["boundaries"]:
            assert 0.1 <= b["scale"] <= 10

    def test_steps_bounds_enforced(self, client):
        assert client.get(
            "/api/sweep", params={"volume": 1e9, "patches": 10, "steps": 0}
        ).status_code == 400
        assert client.get(
            "/api/sweep", params={"volume": 1e9, "patches": 10, "steps": 501}
        ).status_code == 400


class TestPresets:
    def test_five_table_rows(self, client):
        r = client.get("/api/presets")
        assert r.status_code == 200
        rows = r.json()
        assert [p["name"] for p in rows] == [
            "Q100", "Chem 54", "Chem 250", "Shor 1024", "Shor 4096"
        ]
        shor = rows[3]
        assert shor["volume"] == 3.27e14
        assert shor["ref"]["qc_with"] == 7988544
