import math

import pytest

import sgbounds


def test_exact_values():
    e = sgbounds.m(0.5, 0.0, tol=1e-12).enclosure
    assert e.width <= 1e-12
    assert abs(e.mid - (0.5 - 0.5 * math.log(math.pi))) < 1e-12
    i = sgbounds.iota(0.0, 0.5).enclosure
    assert (math.log(2.0) - 0.5 * math.log(math.pi)) in sgbounds.Enclosure(i.lo - 1e-12, i.hi + 1e-12)


def test_log_pi_matches_lgamma():
    r = sgbounds.log_pi(20.0)
    assert r.width_met
    assert r.enclosure.contains(math.lgamma(21.0)) or abs(r.enclosure.mid - math.lgamma(21.0)) < 1e-12


@pytest.mark.parametrize("x,alpha", [(0.25, 0.3), (3.7, 0.5), (12.5, 1.0)])
def test_enclosures_contain_reference(x, alpha):
    slack = 5e-12
    for got, ref in [
        (sgbounds.iota(x, alpha), sgbounds.iota_ref(x, alpha)),
        (sgbounds.m(1.0, x), sgbounds.m_ref(1.0, x)),
        (sgbounds.mhat(0.5, x, alpha), sgbounds.mhat_ref(0.5, x, alpha)),
    ]:
        e = got.enclosure
        assert e.lo - slack <= ref <= e.hi + slack


def test_catalog():
    cat = sgbounds.bounds()
    assert len(cat) == 30
    assert cat[0]["name"] == "gautschi_lower"
    assert sgbounds.bound_info("sg_upper_star")["x_min"] == 1.0
    assert sgbounds.bound_value("gautschi_upper", 0.0) == pytest.approx(1.0 / 3.0)
    with pytest.raises(KeyError):
        sgbounds.bound_info("nope")


def test_domain_error():
    with pytest.raises(sgbounds.DomainError):
        sgbounds.bound_value("sg_upper_star", 0.5, 0.5)
    with pytest.raises(ValueError):
        sgbounds.m(-0.5, 0.25)


def test_scans():
    r = sgbounds.scan_bound("sg_upper_plus", x_hi=3.0, x_step=0.125, alpha_samples=9)
    assert r["ok"] and r["label"] == "CERTIFIED"
    assert r["violations"] == 0
    c = sgbounds.scan_conjecture(1, x_hi=1.0, x_step=0.25, alpha_samples=5)
    assert c["label"] == "EVIDENCE"
    assert c["violations"] == 0


def test_figures():
    names = sgbounds.figures()
    assert len(names) == 9
    csv = sgbounds.figure_csv("m-half")
    assert csv.splitlines()[0] == "x,m_half,lower_24x12,upper_24x12sqrt5"
