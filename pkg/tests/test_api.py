"""
Tests for API endpoints
"""

import pytest
from fastapi.testclient import TestClient

from main import create_app
from tests.conftest import CNET_ROTATION, RECTANGLE_33X32, WILLCOCKS, WILLCOCKS_TABLECODE

pytestmark = pytest.mark.integration


@pytest.fixture
def client():
    """Create test client"""
    return TestClient(create_app())


def _rotation(text):
    return [[int(u) for u in part.split(",")] for part in text.split(";")]


def test_root_endpoint(client):
    """Test root endpoint"""
    response = client.get("/")
    assert response.status_code == 200
    data = response.json()
    assert "message" in data
    assert "version" in data
    assert data["endpoints"]["solve"] == "/api/v1/networks/solve"


def test_health_endpoint(client):
    """Test health check endpoint"""
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json()["status"] == "healthy"


def test_validate_willcocks(client):
    response = client.post("/api/v1/dissections/validate", json={"code": WILLCOCKS})
    assert response.status_code == 200
    data = response.json()
    assert data["report"] == {"ok": True, "violations": []}
    assert data["classification"]["structure"] == "compound"
    assert data["classification"]["perfection"] == "perfect"
    assert data["classification"]["type_code"] == "D11"


def test_validate_bad_syntax(client):
    response = client.post("/api/v1/dissections/validate", json={"code": "(3,2"})
    assert response.status_code == 422
    data = response.json()
    assert data["error"] == "syntax_error"
    assert data["details"]["position"] == 4


def test_canonical(client):
    response = client.post("/api/v1/dissections/canonical", json={"code": WILLCOCKS_TABLECODE})
    assert response.status_code == 200
    data = response.json()
    assert data["tablecode"] == WILLCOCKS_TABLECODE
    assert WILLCOCKS in data["bouwkampcode"]
    assert data["isomer_count"] == 4


def test_canonical_placement_error(client):
    response = client.post("/api/v1/dissections/canonical", json={"code": "(1,2)(2)"})
    assert response.status_code == 422
    assert response.json()["error"] == "placement_error"


def test_isomers(client):
    response = client.post("/api/v1/dissections/isomers", json={"code": WILLCOCKS})
    assert response.status_code == 200
    data = response.json()
    assert data["total"] == 4
    assert data["isomers"][0] == WILLCOCKS_TABLECODE


def test_codes(client):
    response = client.post("/api/v1/dissections/codes", json={"code": RECTANGLE_33X32})
    assert response.status_code == 200
    assert len(response.json()["codes"]) == 8


def test_render(client):
    response = client.post(
        "/api/v1/dissections/render", json={"code": "(1,1)", "scale": 10, "font_size": 5}
    )
    assert response.status_code == 200
    assert response.headers["content-type"].startswith("image/svg+xml")
    assert response.text.count("<rect") == 3


def test_render_rejects_bad_scale(client):
    response = client.post("/api/v1/dissections/render", json={"code": "(1,1)", "scale": 0})
    assert response.status_code == 422
    assert response.json()["error"] == "validation_error"


def test_code_length_limit(client):
    response = client.post("/api/v1/dissections/validate", json={"code": "(1,1)" * 5000})
    assert response.status_code == 422


def test_solve_cnet(client):
    response = client.post("/api/v1/networks/solve", json={"rotation": _rotation(CNET_ROTATION)})
    assert response.status_code == 200
    data = response.json()
    assert (data["nodes"], data["branches"], data["complexity"]) == (6, 10, 130)
    assert len(data["solutions"]) == 10
    assert not any(s["is_square"] for s in data["solutions"])
    assert {r["tablecode"] for r in data["rectangles"]} >= {RECTANGLE_33X32}
    assert len(data["rectangles"]) == 3
    assert data["crossed_rows"] == []


def test_solve_with_first_datum(client):
    rotation = _rotation(CNET_ROTATION)
    last = client.post("/api/v1/networks/solve", json={"rotation": rotation}).json()
    first = client.post("/api/v1/networks/solve", json={"rotation": rotation, "datum": 1}).json()
    assert {r["tablecode"] for r in first["rectangles"]} == {r["tablecode"] for r in last["rectangles"]}


def test_solve_tetrahedron(client):
    response = client.post("/api/v1/networks/solve", json={"rotation": _rotation("2,3,4;1,4,3;1,2,4;1,3,2")})
    data = response.json()
    assert data["complexity"] == 16
    assert data["rectangles"] == []
    assert data["crossed_rows"] == [1, 2, 3, 4, 5, 6]


def test_solve_bad_rotation(client):
    response = client.post("/api/v1/networks/solve", json={"rotation": [[2], [3]]})
    assert response.status_code == 422
    assert response.json()["error"] == "format_error"


def test_solve_datum_out_of_range(client):
    response = client.post(
        "/api/v1/networks/solve", json={"rotation": _rotation(CNET_ROTATION), "datum": 7}
    )
    assert response.status_code == 422
    data = response.json()
    assert data["error"] == "invalid_datum"
    assert data["details"]["nodes"] == 6
