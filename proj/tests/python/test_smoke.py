import json
from fractions import Fraction

import pytest

import padic_moments as pm


def small(p=3, **kw):
    fields = dict(p=p, precision=4, q_order=1, tmin=-12, tmax=1, nmax=8)
    fields.update(kw)
    return pm.PrecisionProfile(**fields)


def test_scalars():
    assert pm.bernoulli(1) == Fraction(-1, 2)
    assert pm.bernoulli(12) == Fraction(-691, 2730)
    assert pm.reduce(-1, 3, 4) == (80, "2222")
    assert pm.reduce(Fraction(1, 2), 3, 2)[0] == 5
    assert pm.valuation(Fraction(18, 5), 3) == 2
    assert pm.valuation(0, 3) is None


def test_routes_agree():
    pr = small()
    a = pm.moments(route="closed", profile=pr)
    b = pm.moments(route="genfn", profile=pr)
    for n in range(1, pr.nmax + 1):
        assert pm.coefficients(a.at(n)) == pm.coefficients(b.at(n))


def test_todd_sharp_low_order():
    M = pm.moments(profile=small(), c=4)
    assert M.kind == "todd-sharp"
    assert Fraction(M.c) == 4
    assert all(c.denominator % 3 for c in pm.coefficients(M.at(5)).values())


def test_json_round_trip():
    M = pm.moments(kind="witten-sharp", profile=small(q_order=2, tmax=4, nmax=4))
    back = pm.moment_sequence_from_json(M.to_json())
    assert back == M
    assert json.loads(M.to_json())["kind"] == "witten-sharp"


def test_verify_family():
    M = pm.moments(profile=small(nmax=18), c=2)
    for f in (pm.canonical_family(3, 1), pm.canonical_family(3, 2)):
        assert pm.verify(f, M)["passed"]
    probe = pm.polynomial({1: Fraction(1, 3)}, "r/3")
    report = pm.verify(probe, M)
    assert not report["passed"]
    assert report["offenders"]


def test_digit_table():
    M = pm.moments(profile=small(nmax=6))
    rows, cols, cells, text, csv = pm.digit_table(M, 1, 6, [-3, -2, -1], 4)
    assert len(cells) == 6 and all(len(r) == 3 for r in cells)
    assert all(len(c) == 4 for r in cells for c in r)
    assert csv.count("\n") >= 6
    assert text


def test_errors():
    with pytest.raises(pm.ConfigError):
        pm.PrecisionProfile(p=4)
    with pytest.raises(pm.Error):
        pm.compute_moments("todd", "closed", "1/3", small())


def test_cli_and_selfcheck():
    code, out, err = pm.run_cli(["moments", "--p", "3", "--nmax", "4", "--format", "json"])
    assert code == 0, err
    assert json.loads(out)["kind"] == "todd-sharp"
    assert pm.run_cli(["moments", "--p", "4"])[0] == 2
    results = pm.selfcheck("4", small(nmax=4, tmin=-16, tmax=4))
    assert results and all(ok for _, ok, _ in results)
