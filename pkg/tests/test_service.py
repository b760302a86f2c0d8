import pytest
from fastapi.testclient import TestClient

from axes_ideals.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json()["status"] == "ok"


class TestMemberEndpoint:
    def test_symbolic_member(self, client):
        response = client.post(
            "/member",
            json={"axes": 3, "m": 2, "mode": "symbolic", "monomial": "x1*x2*x3"},
        )
        assert response.status_code == 200
        body = response.json()
        assert body["member"] is True
        assert body["engine"] == "fast"
        assert body["explanation"] is None

    def test_ordinary_non_member_with_explanation(self, client):
        response = client.post(
            "/member",
            json={"axes": 3, "m": 2, "monomial": [1, 1, 1], "explain": True},
        )
        body = response.json()
        assert body["member"] is False
        assert "degree-inequality" in body["explanation"]

    def test_explicit_ideal_defaults_to_core_engine(self, client):
        response = client.post(
            "/member",
            json={
                "ideal": {"n": 2, "gens": [[1, 1]]},
                "m": 2,
                "monomial": [2, 2],
            },
        )
        body = response.json()
        assert body["member"] is True
        assert body["engine"] == "core"

    def test_oracle_engine_with_explicit_ideal(self, client):
        response = client.post(
            "/member",
            json={
                "ideal": {"n": 3, "gens": [[1, 1, 0], [1, 0, 1], [0, 1, 1]]},
                "m": 2,
                "engine": "oracle",
                "monomial": [2, 2, 0],
                "explain": True,
            },
        )
        body = response.json()
        assert body["member"] is True
        assert "witness generators" in body["explanation"]

    def test_fast_engine_rejected_for_explicit_ideal(self, client):
        response = client.post(
            "/member",
            json={
                "ideal": {"n": 2, "gens": [[1, 1]]},
                "m": 1,
                "engine": "fast",
                "monomial": [1, 1],
            },
        )
        assert response.status_code == 400

    def test_selector_validation(self, client):
        response = client.post("/member", json={"m": 1, "monomial": [1, 1]})
        assert response.status_code == 422
        response = client.post(
            "/member",
            json={
                "axes": 2,
                "ideal": {"n": 2, "gens": [[1, 1]]},
                "m": 1,
                "monomial": [1, 1],
            },
        )
        assert response.status_code == 422

    def test_dimension_mismatch_maps_to_400(self, client):
        response = client.post("/member", json={"axes": 3, "m": 1, "monomial": [1, 1]})
        assert response.status_code == 400


class TestCertifyVerifyEndpoints:
    def test_certify_and_verify_round_trip(self, client):
        response = client.post("/certify", json={"n": 4, "m": 2, "monomial": [1, 1, 1, 1]})
        body = response.json()
        assert body["member"] is True
        assert body["certificate"]["pairs"] == [[1, 2], [3, 4]]
        response = client.post(
            "/verify", json={"certificate": body["certificate"], "monomial": [1, 1, 1, 1]}
        )
        assert response.json() == {"valid": True, "reason": None}

    def test_certify_non_member_gives_reason(self, client):
        response = client.post("/certify", json={"n": 3, "m": 2, "monomial": "x1*x2*x3"})
        body = response.json()
        assert body["member"] is False
        assert body["certificate"] is None
        assert "degree-inequality" in body["reason"]

    def test_verify_rejects_bad_product(self, client):
        response = client.post(
            "/verify",
            json={
                "certificate": {"n": 3, "m": 2, "pairs": [[1, 2], [1, 2]]},
                "monomial": [1, 1, 0],
            },
        )
        body = response.json()
        assert body["valid"] is False

    def test_verify_malformed_pairs_maps_to_400(self, client):
        response = client.post(
            "/verify",
            json={
                "certificate": {"n": 3, "m": 1, "pairs": [[2, 1]]},
                "monomial": [1, 1, 0],
            },
        )
        assert response.status_code == 400


class TestAlgebraEndpoints:
    def test_power(self, client):
        response = client.post("/power", json={"axes": 3, "m": 2})
        assert response.json()["gens"] == [
            [0, 2, 2], [1, 1, 2], [1, 2, 1], [2, 0, 2], [2, 1, 1], [2, 2, 0],
        ]

    def test_symbolic(self, client):
        response = client.post("/symbolic", json={"axes": 3, "k": 2})
        assert [1, 1, 1] in response.json()["gens"]

    def test_symbolic_squarefree_gate(self, client):
        response = client.post(
            "/symbolic", json={"ideal": {"n": 2, "gens": [[2, 0]]}, "k": 2}
        )
        assert response.status_code == 400
        assert "squarefree" in response.json()["detail"]

    def test_intersect(self, client):
        response = client.post(
            "/intersect",
            json={
                "ideals": [
                    {"n": 3, "gens": [[0, 1, 0], [0, 0, 1]]},
                    {"n": 3, "gens": [[1, 0, 0], [0, 0, 1]]},
                    {"n": 3, "gens": [[1, 0, 0], [0, 1, 0]]},
                ]
            },
        )
        assert response.json()["gens"] == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]

    def test_intersect_operand_validation(self, client):
        response = client.post(
            "/intersect", json={"ideals": [{"n": 2, "gens": [[1, 1]]}]}
        )
        assert response.status_code == 422

    def test_contains_with_witness(self, client):
        response = client.post("/contains", json={"axes": 3, "m": 2, "d": 2})
        assert response.json() == {"contains": False, "witness": [1, 1, 1]}
        response = client.post("/contains", json={"axes": 3, "m": 2, "d": 3})
        assert response.json() == {"contains": True, "witness": None}

    def test_contains_explicit_ideals(self, client):
        response = client.post(
            "/contains",
            json={
                "outer": {"n": 2, "gens": [[1, 0]]},
                "inner": {"n": 2, "gens": [[1, 1]]},
            },
        )
        assert response.json()["contains"] is True

    def test_primes(self, client):
        response = client.post("/primes", json={"axes": 4})
        assert response.json()["primes"] == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]


class TestSurveyCheckEndpoints:
    def test_survey_rows(self, client):
        response = client.post("/survey", json={"n_values": [3], "m_values": [1, 2]})
        rows = response.json()["rows"]
        assert rows == [
            {"n": 3, "m": 1, "d_min": 1, "paper_bound": 2, "els_bound": 2, "witness": None},
            {"n": 3, "m": 2, "d_min": 3, "paper_bound": 3, "els_bound": 4, "witness": [1, 1, 1]},
        ]

    def test_survey_guard_maps_to_413(self, client):
        response = client.post("/survey", json={"n_values": [50], "m_values": [1]})
        assert response.status_code == 413

    def test_survey_guard_override(self, client):
        response = client.post(
            "/survey",
            json={"n_values": [4], "m_values": [1], "guard": {"max_n": 3}},
        )
        assert response.status_code == 413

    def test_check_all(self, client):
        response = client.post("/check", json={"suite": "all", "n_values": [3], "m_values": [1]})
        body = response.json()
        assert body["passed"] is True
        assert {cell["check"] for cell in body["cells"]} == {
            "decomposition", "symbolic", "engines",
        }

    def test_check_single_suite(self, client):
        response = client.post(
            "/check",
            json={"suite": "decomposition", "n_values": [3, 4], "m_values": [1, 2]},
        )
        body = response.json()
        assert body["passed"] is True
        assert len(body["cells"]) == 4
