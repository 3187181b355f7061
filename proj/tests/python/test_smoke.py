"""Smoke tests for the Python extension: a few identities per area, end to end."""

import json
import math

import pytest

vq = pytest.importorskip("vqfueter")


def quat(w=0.0, x=0.0, y=0.0, z=0.0):
    return vq.Quaternion(w, x, y, z)


def test_quaternion_algebra():
    e1, e2, e3 = (vq.Quaternion.unit(u) for u in (1, 2, 3))
    assert e1 * e2 == e3
    assert e2 * e1 == -e3
    q = quat(1, 1, 0, 0)
    assert (q * q.inverse() - quat(1)).norm() < 1e-15
    with pytest.raises(vq.Error):
        quat().inverse()


def test_mu_and_expansion():
    x = vq.PointH(0.0, 0.5, -0.25, 1.0)
    alpha = vq.MultiIndex(2, 1, 0)
    # boundary slice: mu^alpha collapses to the real monomial
    assert vq.mu_alpha(x, alpha) == quat(0.5**2 * -0.25)

    y = vq.PointH(0.7, 0.5, -0.25, 1.0)
    closed = vq.mu_alpha(y, alpha)
    product = vq.mu_alpha_product(y, alpha)
    assert (closed - product).norm() < 1e-12
    assert (vq.euler_exponential(alpha, y) - closed).norm() < 1e-12

    for n in range(5):
        series = vq.expand_qn(n)
        direct = y.quaternion().pow(n)
        assert (vq.eval(series, y).at(0, 0) - direct).norm() < 1e-10 * max(1.0, direct.norm())


def test_operator_kernel_with_python_callable():
    alpha = vq.MultiIndex(1, 2, 0)
    x = vq.PointH(0.4, 0.8, -0.6, 0.3)
    residual = vq.apply_vq(lambda p: vq.mu_alpha(p, alpha), x)
    assert residual.norm() < 1e-6


def test_star_product():
    f = vq.FueterSeries(1, 1)
    f.add(vq.MultiIndex(1, 0, 0), vq.QMatrix.scalar(vq.Quaternion.unit(2)))
    g = vq.FueterSeries(1, 1)
    g.add(vq.MultiIndex(0, 1, 0), vq.QMatrix.scalar(vq.Quaternion.unit(3)))
    fg = vq.star_mul(f, g)
    gf = vq.star_mul(g, f)
    assert fg.coeff(vq.MultiIndex(1, 1, 0)).at(0, 0) == vq.Quaternion.unit(1)
    assert not (fg == gf)


def test_structural_defect_exact():
    arveson = vq.CoefficientFamily.arveson()
    assert vq.structural_defect(arveson, vq.MultiIndex(1, 1, 0)) == "0/1"
    assert arveson.at(vq.MultiIndex(1, 1, 0)) == "1/2"
    flat = vq.CoefficientFamily.custom({
        vq.MultiIndex(1, 1, 0): "1/1",
        vq.MultiIndex(1, 0, 0): "1/1",
        vq.MultiIndex(0, 1, 0): "1/1",
    })
    assert vq.structural_defect(flat, vq.MultiIndex(1, 1, 0)) == "-1/1"


def test_kernel_and_gram():
    arveson = vq.CoefficientFamily.arveson()
    x = vq.PointH(0.0, 0.5, 0.0, 0.0)
    value, tail, valid = vq.kernel_eval(arveson, x, x, 40)
    assert valid
    assert abs(value.w - 4.0 / 3.0) < 1e-9

    pts = [vq.PointH(0.1, 0.3, 0.2, -0.1), vq.PointH(0.0, 0.2, -0.4, 0.1)]
    gram = vq.gram_matrix(arveson, pts, 25)
    assert vq.is_psd(gram, 1e-8)


def test_blaschke_realization_unitary():
    a = vq.BlaschkePoint(vq.PointH(0.1, 0.3, -0.2, 0.25))
    t = vq.blaschke_realization(a).stacked()
    ident = vq.QMatrix.identity(4)
    assert (t * t.adjoint() - ident).frobenius_norm() < 1e-12
    assert (t.adjoint() * t - ident).frobenius_norm() < 1e-12

    series = vq.blaschke_series(a, 12)
    via_t = vq.rational_series(vq.blaschke_realization(a), 12)
    assert vq.coeff_distance(series, via_t) < 1e-10


def test_series_json_round_trip():
    f = vq.FueterSeries(1, 1, 4)
    f.add(vq.MultiIndex(2, 0, 1), vq.QMatrix.scalar(quat(0.5, -1.0, 0.0, 2.0)))
    payload = f.to_json()
    parsed = json.loads(payload)
    assert parsed["rows"] == 1 and parsed["trunc"] == 4
    back = vq.FueterSeries.from_json(payload)
    assert back == f


def test_verify_suite():
    results = vq.run_verify_suite("ck", 0)
    assert results and all(r["pass"] for r in results)
