import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhlink.specfun import (RootSystem, bracket, eq_mod_n, f_fun, g_fun,
                            h_fun, nth_root, omega, omega2, omega_star,
                            pochhammer, residue, theta)

EPS = 1e-12


@pytest.fixture(scope="module")
def rs5():
    return RootSystem(5)


def rand_c(rng, lo=0.3, hi=1.5):
    return rng.uniform(lo, hi) * np.exp(2j * np.pi * rng.uniform())


def test_root_system_basics(rs5):
    assert rs5.N == 5 and rs5.m == 2
    assert abs(rs5.zeta ** 5 - 1) < EPS
    assert abs(rs5.s ** 2 - rs5.zeta) < EPS
    assert abs(rs5.zpow(7) - rs5.zeta ** 2) < EPS
    with pytest.raises(ValueError):
        RootSystem(4)
    with pytest.raises(ValueError):
        RootSystem(1)


def test_residue_and_theta():
    assert residue(-1, 5) == 4
    assert residue(12, 5) == 2
    assert theta(0, 5) == 1 and theta(4, 5) == 1
    assert theta(5, 5) == 0 and theta(-1, 5) == 0


def test_nth_root_principal_branch():
    z = nth_root(-8.0 + 0j, 3)
    # principal branch of the log, not the real cube root
    assert abs(z - 2 * np.exp(1j * np.pi / 3)) < EPS
    assert abs(z ** 3 + 8) < 1e-10


def test_omega_recurrence(rs5):
    rng = np.random.default_rng(3)
    for _ in range(20):
        u = rand_c(rng)
        for n in range(-5, 6):
            lhs = omega(u, n + 1, rs5)
            rhs = omega(u, n, rs5) * (1 - u * rs5.zpow(n + 1))
            assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(rhs))
    assert omega(0.7 + 0.1j, 0, rs5) == 1.0


def test_omega2_periodic_on_surface(rs5):
    rng = np.random.default_rng(4)
    u = rand_c(rng)
    v = nth_root(1 - u ** 5, 5) * rs5.zpow(2)
    for n in (-7, -1, 0, 3, 11):
        assert abs(omega2(u, v, n, rs5) - omega2(u, v, residue(n, 5), rs5)) < 1e-10


def test_bracket(rs5):
    x = 0.4 + 0.2j
    want = (1 - x ** 5) / (5 * (1 - x))
    assert abs(bracket(x, rs5) - want) < EPS
    assert bracket(1.0 + 0j, rs5) == 1.0


def test_pochhammer_small_product(rs5):
    x = 0.6 - 0.3j
    # n factors (1 - x zeta^j), j = 0..n-1, cyclic in n
    for n in range(1, 5):
        direct = np.prod([1 - x * rs5.zpow(j) for j in range(n)])
        assert abs(pochhammer(x, n - 1, rs5) - direct) < 1e-12


def test_h_is_normalized_g(rs5):
    x = 0.8 + 0.4j
    assert abs(h_fun(x, rs5) - g_fun(x, rs5) / g_fun(1.0, rs5)) < EPS


def test_f_fun_matches_ratio_definition(rs5):
    rng = np.random.default_rng(9)
    x, y = rand_c(rng), rand_c(rng)
    z = nth_root((1 - x ** 5) / (1 - y ** 5), 5) * rs5.zeta
    # f solves the same first order recursion in z as g(x)/g(y) does
    lhs = f_fun(x, y, z * rs5.zeta, rs5) / f_fun(x, y, z, rs5)
    rhs = (1 - z) / (x - y * z * rs5.zeta)
    assert abs(lhs - rhs) < 1e-9


@given(k=st.integers(min_value=0, max_value=9), flip=st.booleans())
@settings(max_examples=40, deadline=None)
def test_eq_mod_n_detects_all_units(k, flip):
    rs = RootSystem(5)
    b = 0.83 - 1.21j
    a = (-1 if flip else 1) * rs.zpow(k) * b
    w = eq_mod_n(a, b, rs)
    assert w.equal
    assert abs(w.unit(rs) * b - a) < 1e-12


def test_eq_mod_n_rejects_non_units(rs5):
    assert not eq_mod_n(2.0 + 0j, 1.0 + 0j, rs5).equal
    assert not eq_mod_n(rs5.zeta * 1.0001, 1.0 + 0j, rs5, tol=1e-9).equal


def test_eq_mod_n_array_pivot(rs5):
    rng = np.random.default_rng(11)
    B = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    A = -rs5.zpow(3) * B
    w = eq_mod_n(A, B, rs5)
    assert w.equal and w.sign == -1 and w.power == 3
    A[2, 2] *= 1 + 1e-5
    assert not eq_mod_n(A, B, rs5, tol=1e-9).equal


def test_omega_star_is_reverse_direction_product(rs5):
    x = 0.5 + 0.2j
    n = 3
    direct = np.prod([1 - x * rs5.zpow(-j) for j in range(1, n + 1)])
    assert abs(omega_star(x, n, rs5) - direct) < EPS
