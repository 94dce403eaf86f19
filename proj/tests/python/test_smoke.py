import json

import pytest

import bouillabaisse as bb


def test_real_root_counts():
    assert bb.count_real_roots("X^3-X^2-X-1") == 1
    assert bb.count_real_roots("X^4-X^3-X^2-X-1") == 2
    assert bb.count_roots_in_unit_disk("X^2-X-1") == 1


def test_factor():
    assert bb.factor("X^2-1") == [("X-1", 1), ("X+1", 1)]
    assert bb.factor("X^3-X^2-X-1") == [("X^3-X^2-X-1", 1)]


def test_isolation():
    roots = bb.isolate_real_roots("X^2-2")
    assert len(roots) == 2
    lo, hi = roots[1]["isolation"]
    assert all(isinstance(v, str) for v in (lo, hi))


def test_construct_torus():
    d = bb.construct({"E": [[1]], "m": [1], "n": [1]})
    assert d["trace_field"] == "Q"
    assert d["trace_PhPv"]["rep"]["coeffs"] == ["3"]
    assert d["totally_real"]["verdict"] is True


def test_construct_golden():
    d = bb.construct({"E": [["1", "1"], ["1", "0"]], "m": ["1", "1"], "n": ["1", "1"]})
    assert d["field"]["minpoly"]["coeffs"] == ["1", "-3", "1"]
    assert d["symmetrization"]["outcome"] == "consistent"


def test_certificates():
    assert bb.pisot_check("X^3-X^2-X-1")["outcome"] == "pisot"
    assert bb.pisot_check("X^2-2")["verdict"] is False
    cert = bb.no_parabolic_certificate("X^3-X^2-X-1")
    assert cert["outcome"] == "no_parabolic"
    assert bb.recheck(cert)
    assert bb.no_parabolic_certificate("X^2-3X+1")["outcome"] == "inconclusive"
    assert bb.pisot_lemma_check("X^2-X-1")["outcome"] == "not_applicable"
    assert bb.trace_plus_inverse_minpoly("X^2-X-1") == "X^2-5"
    assert bb.trace_plus_inverse_minpoly("X^2-X-1", ("-1", "0")) == "X^2-5"


def test_tampered_certificate_fails_recheck():
    cert = bb.pisot_check("X^2-2")
    cert["verdict"] = True
    cert["outcome"] = "pisot"
    assert not bb.recheck(cert)


def test_ay_report():
    r = bb.ay_report(3)
    assert r["P"] == "X^3-X^2-X-1"
    assert r["real_roots"] == 1
    assert r["no_parabolic"]["outcome"] == "no_parabolic"
    assert r["as_expected"] is True


def test_errors():
    with pytest.raises(bb.Error, match="NOutOfRange"):
        bb.ay_report(2)
    with pytest.raises(bb.Error, match="NotPrimitive"):
        bb.construct({"E": [[0, 1], [1, 0]], "m": [1, 1], "n": [1, 1]})
    with pytest.raises(bb.Error, match="ParseError"):
        bb.count_real_roots("X^^2")


def test_run():
    code, out, err = bb.run("ay", "--n", "3", "--json")
    assert code == 0
    assert json.loads(out)["data"]["members"][0]["P"] == "X^3-X^2-X-1"
    code, out, _ = bb.run("pisot", "--poly", "X^2-2")
    assert code == 1
