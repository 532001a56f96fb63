import math

import numpy as np
import pytest

from hyperlie import known_groups as kg
from hyperlie.families import FamilyId
from hyperlie.known_groups import GroupId


def test_identity_elements():
    for g in GroupId:
        assert np.array_equal(kg.element(g, [0.0] * kg.N_PARAMS[g]), np.eye(4))


def test_g6_example():
    M = kg.element(GroupId.G6, (2, 0, 0, 0))
    expected = np.eye(4)
    expected[0, 1] = expected[0, 2] = expected[1, 2] = 2
    assert np.array_equal(M, expected)


def test_g8_quarter_turn():
    M = kg.element(GroupId.G8, (math.pi / 2, 0, 0, 0))
    expected = np.eye(4)
    expected[:2, :2] = [[0, 1], [-1, 0]]
    assert np.allclose(M, expected, atol=1e-15)


def test_wrong_param_count():
    with pytest.raises(ValueError):
        kg.element(GroupId.G10, (1, 2, 3, 4))


def test_g6_product_entry(rng):
    # (1,3) entry of the product is (x1 + x2)^2 / 2
    for _ in range(20):
        p1, p2 = rng.uniform(-2, 2, 4), rng.uniform(-2, 2, 4)
        P = kg.element(GroupId.G6, p1) @ kg.element(GroupId.G6, p2)
        assert P[0, 2] == pytest.approx((p1[0] + p2[0]) ** 2 / 2, abs=1e-13)


def test_g10_product_params(rng):
    for _ in range(20):
        (x1, y1, z1, w1, v1), (x2, y2, z2, w2, v2) = rng.uniform(-2, 2, (2, 5))
        P = kg.element(GroupId.G10, (x1, y1, z1, w1, v1)) @ kg.element(GroupId.G10, (x2, y2, z2, w2, v2))
        expect = (x1 + x2, y2 + x1 * w2 + y1, z2 + x1 * v2 + y1 * w2 + z1, w1 + w2, v2 + w1 * w2 + v1)
        assert np.allclose(kg.read_params(GroupId.G10, P), expect, atol=1e-13)


@pytest.mark.parametrize("group,tol", [(GroupId.G6, 1e-12), (GroupId.G8, 1e-10), (GroupId.G10, 1e-12)])
def test_closure(group, tol, rng):
    n = kg.N_PARAMS[group]
    assert kg.closure_defect(group, [0] * n, [0] * n) == 0
    for _ in range(100):
        assert kg.closure_defect(group, rng.uniform(-2, 2, n), rng.uniform(-2, 2, n)) <= tol


def test_non_member_detected():
    M = np.eye(4)
    M[3, 0] = 1.0
    for g in GroupId:
        assert kg.distance_to_group(g, M)[0] == 1.0


@pytest.mark.parametrize("group", list(GroupId))
def test_determinants(group, rng):
    n = kg.N_PARAMS[group]
    for _ in range(50):
        det = np.linalg.det(kg.element(group, rng.uniform(-2, 2, n)))
        assert abs(det - 1) <= (1e-10 if group is GroupId.G8 else 1e-12)


def test_embedding_hc41_g6():
    rep = kg.embedding_check(FamilyId.HC4_1, 3.0)
    assert rep.group == "G6"
    assert rep.group_params == (0.0, 3.0, 0.0, 0.0)
    assert rep.residual == 0.0 and rep.expected_residual == 0.0


def test_embedding_hc51_g10():
    rep = kg.embedding_check(FamilyId.HC5_1, 2.0)
    assert rep.group == "G10"
    assert rep.group_params == (2.0, 0.0, 0.0, 0.0, 0.0)
    assert rep.residual == 0.0 and rep.expected_residual == 0.0


def test_embedding_hc32_g8_angle():
    rep = kg.embedding_check(FamilyId.HC3_2)
    assert rep.group_params[0] == pytest.approx(math.pi / 2, abs=1e-15)
    assert rep.residual <= 1e-12
    assert rep.alternatives["pi/2"]["residual"] <= 1e-12
    assert rep.alternatives["3pi/2"]["residual"] == pytest.approx(2.0, abs=1e-12)
    assert rep.expected_residual == pytest.approx(2.0, abs=1e-12)
    # exp(A) has a contracting factor e^{-1}, so only E + A lies in G8
    assert rep.alternatives["exp(A)"]["residual"] > 0.1
    assert len(rep.notes) == 2
    assert rep.to_dict()["group"] == "G8"


def test_embedding_unknown_family():
    with pytest.raises(ValueError):
        kg.embedding_check(FamilyId.HC2)
