from fractions import Fraction

import pytest

import chromabound as cb


def test_k4_polynomial():
    result = cb.chromatic("C~")
    assert result["graph"]["order"] == 4
    assert cb.coefficients(result["chromatic"]) == [0, -6, 11, -6, 1]


def test_count_matches_polynomial():
    poly = cb.coefficients(cb.chromatic("DJ{")["chromatic"])
    for x in range(6):
        value = sum(c * x**i for i, c in enumerate(poly))
        assert value == cb.count_colorings("DJ{", x)


def test_sk4_family_agrees():
    result = cb.family("sk4", {"s1": 3, "s2": 4, "s3": 4})
    assert result["matches"]
    top = cb.coefficients(result["engine"])[::-1][:5]
    assert top == [1, -14, 90, -352, 935]


def test_conjectured_bound_coefficients():
    top = cb.coefficients(cb.conjectured_bound(12, 4))[::-1][:5]
    assert top == [1, -14, 87, -318, 762]


def test_theta_bound_report():
    report = cb.bound("theta", [1, 2, 2], Fraction(3))
    assert report["holds"]
    assert report["x"] == "3/1"


def test_certificate():
    cert = cb.certify("k33son")
    assert cert["certified"]
    lo, hi = Fraction(cert["largest_root"]["lo"]), Fraction(cert["largest_root"]["hi"])
    assert Fraction("2.9407") < lo <= hi < Fraction("2.9409")


def test_verify_conjecture_order_six():
    report = cb.verify("conjecture", 6, workers=2)
    assert report["passed"]
    assert report["violations"] == []
    assert len(report["extremal"]) == 3


def test_enumeration_counts():
    assert [len(cb.enumerate_connected(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        cb.chromatic("zz")
    with pytest.raises(cb.ChromaboundError):
        cb.family("theta", {"s1": 0, "s2": 1, "s3": 1})


def test_cli_exit_codes():
    code, out, _ = cb.run_cli(["--json", "certify", "cactusson"])
    assert code == 0 and '"schema": 1' in out
    code, _, err = cb.run_cli(["verify"])
    assert code == 2 and err
