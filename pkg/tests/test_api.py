import pytest
from fastapi.testclient import TestClient

from torelli.config import MAX_ENUM_LENGTH
from torelli.main import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["success"] is True


def test_health(client):
    assert client.get("/health").json()["status"] == "healthy"


class TestWords:
    def test_eps(self, client):
        response = client.post("/api/words/eps", json={"genus": 1, "word": "z1 z2"})
        assert response.status_code == 200
        body = response.json()
        assert body["success"] is True
        assert body["data"] == [1, -1, 0]
        assert body["message"] == "e1 - e2"

    def test_split(self, client):
        body = client.post("/api/words/split", json={"genus": 1, "word": "z2 z1 z3 z1"}).json()
        assert body["data"] == {"kernel": "", "vector": [-2, 1, 1]}

    def test_factor(self, client):
        word = "z3 z1 z2 z3^-1 z1^-1 z2^-1"
        body = client.post("/api/words/factor", json={"genus": 1, "word": word}).json()
        assert body["data"] == {
            "factorization": [{"conj": "", "gen": "comm:3:2", "exp": 1}],
            "verified": True,
        }

    def test_malformed_word_is_unprocessable(self, client):
        response = client.post("/api/words/eps", json={"genus": 1, "word": "z1 x"})
        assert response.status_code == 422

    def test_domain_error(self, client):
        response = client.post("/api/words/eps", json={"genus": 1, "word": "z1"})
        assert response.status_code == 400

    def test_invalid_genus(self, client):
        response = client.post("/api/words/eps", json={"genus": 0, "word": ""})
        assert response.status_code == 422

    def test_enum(self, client):
        body = client.get("/api/words/enum", params={"genus": 1, "max_len": 2}).json()
        assert len(body["data"]) == 31
        assert body["data"][0] == ""

    def test_enum_limit(self, client):
        response = client.get(
            "/api/words/enum", params={"genus": 1, "max_len": MAX_ENUM_LENGTH + 1}
        )
        assert response.status_code == 400

    def test_schreier(self, client):
        body = client.get("/api/words/schreier", params={"genus": 1, "radius": 1}).json()
        assert body["success"] is True
        assert body["data"]


class TestBraids:
    def test_burau(self, client):
        body = client.post("/api/braids/burau", json={"strands": 3, "word": "s1"}).json()
        assert body["data"] == {"dim": 2, "entries": [[[[1, -1]], [[0, 1]]], [[], [[0, 1]]]]}

    def test_eval(self, client):
        body = client.post(
            "/api/braids/eval", json={"strands": 3, "word": "s1 s2 s1 s2 s1 s2", "at": -1}
        ).json()
        assert body["data"] == [[-1, 0], [0, -1]]

    def test_eval_bad_point(self, client):
        response = client.post("/api/braids/eval", json={"strands": 3, "word": "s1", "at": 3})
        assert response.status_code == 400

    def test_kernel(self, client):
        word = " ".join(["s1 s2"] * 6)
        body = client.post("/api/braids/kernel", json={"strands": 3, "word": word}).json()
        assert body["data"]["in_kernel"] is True
        assert body["message"] == "true"

    def test_perm(self, client):
        body = client.post("/api/braids/perm", json={"strands": 3, "word": "s1"}).json()
        assert body["data"] == {"images": [2, 1, 3], "cycles": "(1 2)", "pure": False}

    def test_center(self, client):
        body = client.get("/api/braids/center", params={"strands": 4, "kernel": True}).json()
        assert body["data"] == "s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3"


class TestAction:
    def test_matrix(self, client):
        body = client.post("/api/action/matrix", json={"genus": 1, "word": "z2 z2"}).json()
        assert body["data"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_beta(self, client):
        body = client.post(
            "/api/action/matrix", json={"genus": 1, "word": "z1 z2", "beta": 3}
        ).json()
        assert body["data"] == [-2, 2, 1]

    def test_fix(self, client):
        body = client.post("/api/action/fix", json={"genus": 1, "word": "z1 z2"}).json()
        assert body["data"] == {"fixes": False, "image": [-1, 2, 0]}
