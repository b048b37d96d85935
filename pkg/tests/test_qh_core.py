"""Dilogarithm operators, braidings, walls: structural checks at small order.

The heavy identity replay lives in qhlink.verify and the acceptance tests;
here each building block gets a direct, focused exercise.
"""

import numpy as np
import pytest

from qhlink import qh_core, tensor
from qhlink.specfun import RootSystem, eq_mod_n


@pytest.fixture(scope="module", params=[3, 5])
def rs(request):
    return RootSystem(request.param)


def test_decoration_validates_flattening():
    d = qh_core.decoration((1, 0, 0), -1)
    assert d.c == (1, 0, 0) and d.b_sign == -1
    with pytest.raises(ValueError):
        qh_core.decoration((1, 1, 0), -1)  # charge sum != 1
    with pytest.raises(ValueError):
        qh_core.decoration((1, 0, 0), 2)   # sign must be +-1


def test_standard_decorations_charge_sums():
    for sign in (-1, 1):
        decs = qh_core.standard_decorations(sign)
        assert len(decs) == 4
        assert sum(d.c[1] for d in decs) == 2
        for d in decs:
            assert sum(d.c) == 1


def test_moduli_are_nth_roots(rs):
    for sign in (-1, 1):
        for d in qh_core.standard_decorations(sign):
            w = qh_core.nth_root_moduli(d, rs)
            for wp, base in zip(w.as_tuple(), d.w):
                # N odd makes the half-integer correction a full power of 1
                assert abs(wp ** rs.N - base) < 1e-10


def test_matrix_dilog_inverse_pair(rs):
    rng = np.random.default_rng(7)
    u = 0.7 * np.exp(2j * np.pi * rng.uniform())
    from qhlink.specfun import nth_root
    v = nth_root(1 - u ** rs.N, rs.N) * rs.zpow(int(rng.integers(0, rs.N)))
    L = qh_core.matrix_dilog_L(u, v, rs)
    Li = qh_core.matrix_dilog_L(u, v, rs, inverse=True)
    eye = np.eye(rs.N ** 2)
    assert np.allclose((L.as_matrix() @ Li.as_matrix()), eye, atol=1e-9)
    assert np.allclose((Li.as_matrix() @ L.as_matrix()), eye, atol=1e-9)


def test_tilde_is_fourier_conjugate(rs):
    for sign in (-1, 1):
        for d in qh_core.standard_decorations(sign):
            got = tensor.dft_conjugate(qh_core.matrix_dilog_R(d, rs), rs)
            assert eq_mod_n(got.data, qh_core.tilde_R(d, rs).data, rs).equal


def test_braiding_methods_agree(rs):
    co = qh_core.braiding(-1, rs, method="compose")
    cn = qh_core.braiding(-1, rs, method="contract")
    cl = qh_core.braiding_closed_form(-1, rs)
    assert np.allclose(co.data, cn.data, atol=1e-10)
    assert np.allclose(cn.data, cl.data, atol=1e-10)


def test_braiding_closed_inverse(rs):
    B = qh_core.braiding_closed_form(-1, rs)
    Bi = qh_core.braiding_closed_form(-1, rs, inverse=True)
    assert np.allclose(B.as_matrix() @ Bi.as_matrix(), np.eye(rs.N ** 4),
                       atol=1e-9)


def test_braiding_rejects_bad_charges(rs):
    decs = list(qh_core.standard_decorations(-1))
    decs[0] = qh_core.decoration((0, 1, 0), -1)  # middle charges now sum to 3
    with pytest.raises(ValueError):
        qh_core.braiding(-1, rs, decorations=tuple(decs))


def test_k_o_is_inverse_order(rs):
    for sign in (-1, 1):
        ko = qh_core.k_o(qh_core.standard_decorations(sign), rs)
        assert eq_mod_n(ko, 1.0 / rs.N, rs).equal


def test_wall_closed_forms(rs):
    for name in ("C", "M"):
        spec = qh_core.WALL_LIBRARY[name]
        for fourier in (False, True):
            got = qh_core.wall_tensor(spec, rs, fourier=fourier)
            want = qh_core.wall_closed_form(spec, rs, fourier=fourier)
            assert eq_mod_n(got.data, want.data, rs).equal, (name, fourier)


def test_wall_involution_and_shift(rs):
    WC = qh_core.wall_restricted("C", rs)
    WM = qh_core.wall_restricted("M", rs)
    N = rs.N
    assert eq_mod_n(WC @ WC, np.eye(N), rs).equal
    assert eq_mod_n(WM @ WM, qh_core.shift_matrix(N).T, rs).equal
    assert eq_mod_n(WC, qh_core.w_c_matrix(rs), rs).equal


def test_convert_crossing_is_involution(rs):
    rng = np.random.default_rng(1)
    data = rng.normal(size=(rs.N,) * 4)
    t = tensor.DenseTensor(data, 2, 2)
    twice = qh_core.convert(qh_core.convert(t, "crossing"), "crossing")
    assert np.array_equal(twice.data, t.data)


def test_charge_table_relations():
    ch = qh_core.yb_charge()
    assert ch.c_wall() == qh_core.WALL_LIBRARY["C"]
    assert ch.m_walls()[0] == qh_core.WALL_LIBRARY["M"]
    for other in (qh_core.yb_charge(B1=1, U1=1),
                  qh_core.yb_charge(U2=-1, P=2)):
        assert other.E1 == 2 - other.B1
        assert other.A2 == other.B1 and other.C2 == other.E1
        assert other.V2 == other.S2
        assert other.M == 1 - other.P
        assert other.m_walls()[1].F == -1


def test_enhanced_ybo_qh(rs):
    ybo = qh_core.enhanced_ybo("qh", rs)
    N = rs.N
    assert ybo.n == N and ybo.family == "qh"
    assert np.allclose(ybo.R @ ybo.R_inv, np.eye(N * N), atol=1e-10)
    assert abs(abs(ybo.a) - 1) < 1e-10
    assert ybo.b == 1


def test_mixed_crossing_layouts(rs):
    # the four sign pairs all land in the same display layout
    for e0 in (-1, 1):
        for e1 in (-1, 1):
            t = qh_core.mixed_crossing(e0, e1, rs)
            assert t.data.shape == (rs.N,) * 4


def test_b_display_pairing(rs):
    N = rs.N
    mp = np.transpose(qh_core.b_display(1, rs), (2, 3, 0, 1)).reshape(N * N, N * N)
    mm = np.transpose(qh_core.b_display(-1, rs), (2, 3, 0, 1)).reshape(N * N, N * N)
    assert np.allclose(mp @ mm, np.eye(N * N), atol=1e-10)
