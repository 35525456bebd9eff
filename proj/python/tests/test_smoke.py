import math

import pytest

import hermitia


def test_gamma_matches_math():
    for x in (0.3, 1.5, 4.25):
        assert abs(hermitia.gamma(x) - math.gamma(x)) <= 1e-13 * math.gamma(x)


def test_reciprocal_gamma_at_poles():
    assert hermitia.reciprocal_gamma(-3) == 0


def test_gamma_pole_raises():
    with pytest.raises(hermitia.PoleError):
        hermitia.gamma(-2)


def test_hermite_integer_degree_is_polynomial():
    x = 0.7
    assert abs(hermitia.hermite(3, x) - (8 * x**3 - 12 * x)) <= 1e-13


def test_hermite_half_degree():
    assert abs(hermitia.hermite(0.5, 1.1) - 1.54339024253028399138) <= 1e-13


def test_moments_and_apply():
    m = hermitia.moments(0.5, 4)
    assert m[0] == 1 and m[1] == 0 and m[3] == 0
    assert abs(m[2] - 0.9375) <= 1e-15
    value = hermitia.apply(0.5, [1, 0, 1])
    assert abs(value - 1.9375) <= 1e-15
    via_quad = hermitia.apply(0.5, [1, 0, 1], via="quadrature")
    assert abs(via_quad - value) <= 1e-8


def test_gamma_routes_agree():
    expected = math.gamma(2.3)
    for method in ("realline", "loop", "sine", "reference"):
        assert abs(hermitia.gamma_via(1.3, method) - expected) <= 1e-8 * expected


def test_contour_odd_moment_vanishes():
    assert abs(hermitia.contour_moment(1, 0.5)) <= 1e-9


def test_verify_gamma_suite():
    report = hermitia.verify("gamma", [0.5])
    assert report["summary"]["total"] == 4
    assert report["summary"]["failed"] == 0


def test_unknown_route_is_value_error():
    with pytest.raises(ValueError):
        hermitia.apply(0.5, [1], via="nowhere")
