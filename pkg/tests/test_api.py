import pytest
from fastapi.testclient import TestClient

from app.main import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_factor(client):
    response = client.get("/api/factor", params={"n": 3, "images": "2 1 1"})
    assert response.status_code == 200
    payload = response.json()
    assert [factor["images"] for factor in payload["factors"]] == ["1 2 2", "1 3 3", "2 2 3", "1 2 1"]
    assert payload["verified"] is True
    assert "base" not in payload


@pytest.mark.parametrize("params", [
    {"n": 3, "images": "2 1 3"},
    {"n": 3, "images": "2 2"},
    {"n": 3, "images": "two"},
    {"images": "2 1 1"},
])
def test_factor_invalid(client, params):
    assert client.get("/api/factor", params=params).status_code == 422


def test_singular_diagnostic(client):
    response = client.get("/api/factor", params={"n": 3, "images": "2 1 3"})
    assert response.json()["detail"] == "input must be singular"


def test_conjugate(client):
    response = client.get("/api/conjugate", params={"n": 3, "images": "2 2 3", "by": "(2 3)"})
    assert response.status_code == 200
    assert response.json() == {"base": "2 2 3", "conjugator": "(2 3)", "value": "3 2 3"}
    assert client.get("/api/conjugate", params={"n": 3, "images": "2 2 3", "by": "(1 1)"}).status_code == 422


def test_theorem5(client):
    response = client.get("/api/theorem5", params={"n": 3, "images": "2 2 3"})
    assert response.status_code == 200
    payload = response.json()
    assert payload["idempotent"] == payload["product"] == "1 1 3"
    assert [factor["value"] for factor in payload["factors"]] == ["2 2 3", "1 1 3"]


def test_verify_theorem2(client):
    response = client.get("/api/verify/theorem2", params={"n": 3})
    assert response.json() == {"check": "theorem2", "n": 3, "verified": True}


def test_enumerate_idempotents(client):
    response = client.get("/api/enumerate/idempotents", params={"n": 3, "rank": 2})
    assert response.status_code == 200
    assert response.json()["size"] == 6


def test_enumerate_beyond_limit(client):
    response = client.get("/api/enumerate/idempotents", params={"n": 40, "rank": 2})
    assert response.status_code == 422
    assert "closure limit" in response.json()["detail"]
