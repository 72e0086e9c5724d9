import math

import numpy as np
import pytest
from fastapi.testclient import TestClient

from spherilink.service import create_app

PI = math.pi


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


SQUARE = {"alpha": 90, "beta": 90, "gamma": 90, "delta": 90, "unit": "deg"}
CROSS = {"alpha": 60, "beta": 120, "gamma": 60, "delta": 120, "unit": "deg"}
ELLIPTIC = {"alpha": 60, "beta": 90, "gamma": 72, "delta": 45, "unit": "deg"}


class TestClassify:
    def test_square(self, client):
        r = client.post("/classify", json=SQUARE)
        assert r.status_code == 200
        assert r.json()["type"] == "Square"

    def test_invalid_angles_400(self, client):
        r = client.post("/classify", json={"alpha": 10, "beta": 10, "gamma": 10, "delta": 350, "unit": "deg"})
        assert r.status_code == 400
        assert "delta" in r.json()["detail"]

    def test_elliptic_includes_modulus(self, client):
        r = client.post("/classify", json=ELLIPTIC)
        assert r.status_code == 200
        body = r.json()
        assert body["type"] == "Elliptic"
        assert "M" in body and "amplitudes" in body


class TestBranches:
    def test_square_counts(self, client):
        r = client.post("/branches", json={**SQUARE, "n": 9})
        assert r.status_code == 200
        doc = r.json()
        finite = [b for b in doc["branches"] if not b["at_infinity"]]
        at_inf = [b for b in doc["branches"] if b["at_infinity"]]
        assert len(finite) == 2 and len(at_inf) == 2

    def test_deterministic(self, client):
        r1 = client.post("/branches", json={**ELLIPTIC, "n": 9})
        r2 = client.post("/branches", json={**ELLIPTIC, "n": 9})
        assert r1.json() == r2.json()


class TestState:
    def test_rhombus_state(self, client):
        body = {"alpha": 60, "beta": 60, "gamma": 60, "delta": 60, "unit": "deg", "branch_id": 1, "s": PI / 2}
        r = client.post("/state", json=body)
        assert r.status_code == 200
        st = r.json()
        assert st["x"] == pytest.approx(1.0, abs=1e-12)
        assert st["y"] == pytest.approx(0.5, abs=1e-12)
        assert st["closure_residual"] < 1e-10
        # render geometry: everything on the unit sphere
        arcs = np.array(st["arcs"])
        assert np.allclose(np.linalg.norm(arcs, axis=-1), 1.0, atol=1e-12)

    def test_unknown_branch_404(self, client):
        r = client.post("/state", json={**SQUARE, "branch_id": 17, "s": 0.5})
        assert r.status_code == 404

    def test_out_of_domain_422(self, client):
        r = client.post("/state", json={**SQUARE, "branch_id": 1, "s": 9.0})
        assert r.status_code == 422

    def test_butterfly_self_intersects(self, client):
        doc = TestClient(create_app()).post("/branches", json={**CROSS, "n": 9}).json()
        butterfly = [b for b in doc["branches"] if b["label"] == "butterfly"][0]
        r = client.post("/state", json={**CROSS, "branch_id": butterfly["branch_id"], "s": 1.0})
        assert r.status_code == 200
        assert r.json()["self_intersects"] is True

    def test_matches_document_rows(self, client):
        doc = client.post("/branches", json={**ELLIPTIC, "n": 9}).json()
        b1 = doc["branches"][0]
        row = b1["samples"][3]
        r = client.post("/state", json={**ELLIPTIC, "branch_id": 1, "s": row["s"]})
        st = r.json()
        for key in ("x", "y", "z", "w", "u", "v"):
            if isinstance(row[key], str):
                assert st[key] == row[key]
            else:
                assert st[key] == pytest.approx(row[key], abs=1e-12)
