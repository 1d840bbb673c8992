import json

import pytest

import thinlie


def test_field_arithmetic():
    f = thinlie.Field(7)
    assert f.p == 7 and f.k == 1 and f.order == 7
    assert f.inv("3") == "5"
    assert f.mul("3", "5") == "1"
    f25 = thinlie.Field(5, 2)
    assert f25.modulus == [2, 0, 1]
    assert f25.mul("t", "t") == "3+0*t"  # t^2 = -2 = 3


def test_combinatorics():
    assert thinlie.binom_mod_p(6, 3, 7) == 6
    assert thinlie.binom_mod_p(20, 6, 7) == 1
    assert thinlie.lyndon_words(2) == ["xy"]
    assert len(thinlie.lyndon_words(6)) == 9
    assert thinlie.free_dims(12) == 335


def test_build_and_quotient():
    pres = thinlie.nottingham_mixed(7, 7, 1, "3")
    assert len(pres.relators) == 15
    n = thinlie.build(pres, 60)
    assert n.dims()[:8] == [2, 1, 1, 1, 1, 1, 2, 1]
    l = n.central_quotient(59)
    assert l.is_quotient
    assert l.computed_to == 59
    deg, coords = l.evaluate("[v1 y x] + 2[v1 x y]")
    assert deg == 8
    assert all(c == "0" for c in coords)


def test_oracle_agreement():
    pres = thinlie.nottingham_mixed(7, 7, 1, "3")
    n = thinlie.build(pres, 10)
    assert n.dims() == thinlie.brute_quotient_dims(pres, 10)[1:11]


def test_report_and_suites():
    n, l, rep = thinlie.analyze(7, 7, 1, lam=3, max_degree=60)
    assert rep["checks"]["thin"] and rep["checks"]["pattern"]
    by_degree = {d["degree"]: d for d in rep["diamonds"]}
    assert by_degree[7]["type"] == "6"  # -1 in GF(7)
    assert by_degree[49]["type"] == "3"
    assert by_degree[13]["type"] == "inf"

    report = thinlie.diamond_report(l)
    suites = thinlie.verify_suites(l, n, report, ["sandwich", "no_consec"])
    assert suites["sandwich"]["pass"]
    assert suites["no_consec"]["pass"]


def test_presentation_round_trip():
    pres = thinlie.nottingham_mixed_lambda0(7, 7, 1)
    text = pres.to_string()
    again = thinlie.parse_presentation(text)
    assert again.to_string() == text
    assert len(again.relators) == 16


def test_dump_load_round_trip():
    pres = thinlie.nottingham_mixed(7, 7, 1, "3")
    n = thinlie.build(pres, 20)
    blob = n.dump_json()
    m = thinlie.GradedAlgebra.load_json(blob)
    assert m.dims() == n.dims()
    assert json.loads(blob)["computed_to"] == 20


def test_gen_jacobi():
    f = thinlie.Field(7)
    out = thinlie.gen_jacobi_expand("[y x]", "[y]", "x", 1, f)
    assert "[y x y x]" in out and "6*[y x^2 y]" in out  # 6 = -1 in GF(7)


def test_errors():
    with pytest.raises(ValueError):
        thinlie.Field(6)
    with pytest.raises(Exception):
        thinlie.nottingham_mixed(7, 7, 1, "0")
