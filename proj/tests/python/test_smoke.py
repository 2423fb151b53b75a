import json
from fractions import Fraction

import pytest

import racgc


def test_euler():
    assert racgc.euler("theta:2,2,2") == Fraction(-3, 4)
    assert racgc.euler("cycle:[[2,2],[2,2],[2,2]]") == 1 - Fraction(15, 2) + Fraction(18, 4)


def test_theta_vector():
    assert racgc.theta_vector([2, 3, 4]) == [Fraction(-1, 4), Fraction(-1, 2), Fraction(-3, 4)]


def test_classify():
    d = racgc.classify("theta:2,2,2", "theta:3,3,3")
    assert d["verdict"] == "commensurable"
    assert d["route"] == "GenTheta"
    assert racgc.classify("theta:2,2,2", "theta:2,2,3")["verdict"] == "not-commensurable"


def test_errors():
    with pytest.raises(ValueError):
        racgc.euler("theta:x")
    with pytest.raises(NotImplementedError):
        racgc.jsj("theta:1,2,2")


def test_run_exit_codes():
    code, out, _ = racgc.run("euler", "theta:2,2,2")
    assert code == 0 and "-3/4" in out
    assert racgc.run("classify", "theta:2,2,2", "theta:2,2,3")[0] == 1
    assert racgc.run("euler", "theta:x")[0] == 2
    assert racgc.run("jsj", "theta:1,2,2")[0] == 3


def test_amalgam_to_racg():
    star = {
        "format": "amalgam/1",
        "type1": ["c"],
        "type2": [{"id": f"s{i}", "genus": 1, "boundary": ["c"]} for i in range(3)],
    }
    r = racgc.amalgam_to_racg(star)
    assert r["valid"] is True
    assert json.dumps(r)
