import numpy as np
import pytest

from qhlink import asympt

PI = np.pi


def test_lobachevsky_zeros_and_symmetry():
    assert asympt.lobachevsky(0.0) == 0.0
    assert abs(asympt.lobachevsky(PI)) < 1e-12
    for t in (0.3, 0.7, 1.1):
        assert abs(asympt.lobachevsky(PI - t) + asympt.lobachevsky(t)) < 1e-11
        assert abs(asympt.lobachevsky(t + PI) - asympt.lobachevsky(t)) < 1e-11


def test_lobachevsky_multiplication_identity():
    # L(2t) = 2 L(t) - 2 L(pi/2 - t)  specialized at t = pi/6
    lhs = asympt.lobachevsky(PI / 3)
    rhs = 2 * asympt.lobachevsky(PI / 6) - 2 * asympt.lobachevsky(PI / 3)
    assert abs(lhs - rhs) < 1e-11


def test_volume_constant():
    v = asympt.fig8_volume()
    assert abs(v - 2.029883212819) < 1e-11
    assert abs(v - 6 * asympt.lobachevsky(PI / 3)) < 1e-14


@pytest.mark.parametrize("N,value", [(3, 13.0), (5, 50.47213595499958)])
def test_fig8_small_orders(N, value):
    assert abs(asympt.fig8_kashaev(N) - value) < 1e-9


def test_fig8_routes_agree():
    for N in (21, 41, 101):
        direct = asympt.fig8_kashaev(N)
        dual = asympt.fig8_kashaev_dual(N)
        assert abs(direct - dual) < 1e-9 * dual
        assert abs(np.log(direct) - asympt.fig8_kashaev_log(N)) < 1e-9


def test_fig8_rejects_even_order():
    with pytest.raises(ValueError):
        asympt.fig8_kashaev(10)


def test_statesum_diagonal_at_unit_modulus():
    for N in (5, 9):
        sub = asympt.fig8_diagonal_subsum(1.0, N)
        dual = asympt.fig8_kashaev_dual(N)
        assert abs(sub - dual) < 1e-9 * dual


def test_corrected_fit_hits_volume():
    ns = list(range(201, 602, 50))
    fit = asympt.vc_sweep(ns, model="corrected")
    target = asympt.fig8_volume()
    assert fit.model == "corrected"
    assert abs(fit.two_pi_slope - target) / target < 5e-3
    assert fit.r_squared > 0.999999


def test_plain_fit_is_biased_but_close():
    fit = asympt.vc_sweep(list(range(201, 602, 50)), model="plain")
    target = asympt.fig8_volume()
    rel = abs(fit.two_pi_slope - target) / target
    assert 1e-3 < rel < 5e-2  # finite-size bias the corrected model removes


def test_small_window_warns():
    with pytest.warns(UserWarning):
        asympt.vc_sweep([21, 31, 41], model="corrected")


def test_sweep_csv_shape():
    fit = asympt.vc_sweep(list(range(201, 402, 50)))
    lines = asympt.sweep_csv(fit).strip().splitlines()
    assert lines[0].startswith("N,")
    assert len(lines) == len(fit.n_values) + 1
