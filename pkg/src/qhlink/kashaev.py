"""Kashaev R-matrix and its bridge to the wall-dressed crossing tensors.

Everything here is entrywise closed form.  The central objects are the
family r(x) of crossing tensors, its regularized x -> 1 limit, and the two
Kashaev displays R_K(-+), which the limit reproduces up to explicit zeta
phases.  Displays are keyed [i, j, l, k]: lower pair first, then the upper
written pair, matching the source-order of the defining formulas.  The
operator bindings (which pair is output, how the slots map) live in the
builder methods, not in the arrays.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import qh_core
from .specfun import RootSystem, bracket, omega, omega_star


def r_matrix_display(x: complex, rs: RootSystem) -> np.ndarray:
    """Crossing tensor r(x), keyed [i,j,l,k].

    Dense in x (no support restriction); singular at x^N = 1 where the
    omega denominators blow up, which is why the limit below exists only
    after dividing by 1 - x^N.
    """
    N = rs.N
    br2 = bracket(x, rs) ** 2
    omA = {d: omega(x / rs.zeta, d, rs) for d in range(-(N - 1), N)}
    omB = {d: omega(x, d, rs) for d in range(-N, N)}
    T = np.zeros((N, N, N, N), dtype=complex)
    for i, j, l, k in itertools.product(range(N), repeat=4):
        T[i, j, l, k] = (N * br2 * rs.zpow((l - j) * (i - k))
                         * omA[j - k] * omA[l - i] / (omB[j - i - 1] * omB[l - k]))
    return T


def support_forms(i: int, j: int, k: int, l: int, N: int):
    """The four equivalent descriptions of the limit support, as bools.

    (i) the four cyclic residues sum to N-1; (ii) pairwise theta bounds;
    (iii) cyclic interval ordering; (iv) gap-sum in {0, N} with the
    degenerate i == j case pinned to k == l == i.
    """
    c1 = ((j - i - 1) % N + (l - k) % N + (i - l) % N + (k - j) % N) == N - 1
    c2 = ((j - i - 1) % N + (l - k) % N < N) and ((i - l) % N + (k - j) % N < N)
    c3 = ((l <= i < j <= k) or (i < j <= k <= l)
          or (j <= k <= l <= i) or (k <= l <= i < j))
    gaps = ((j - i) % N + (k - j) % N + (l - k) % N + (i - l) % N)
    c4 = gaps in (0, N) and (i != j or (k == i and l == i))
    return c1, c2, c3, c4


def on_support(i: int, j: int, k: int, l: int, N: int) -> bool:
    """Support indicator of the x -> 1 limit (theta-bound form)."""
    return (((j - i - 1) % N + (l - k) % N < N)
            and ((i - l) % N + (k - j) % N < N))


def r_residue_display(x: complex, rs: RootSystem) -> np.ndarray:
    """r(x) rewritten through residues, zero off the limit support.

    Agrees with :func:`r_matrix_display` on the support for every x with
    x^N != 1; off the support the dense form is a removable zero that the
    residue form just never writes.
    """
    N = rs.N
    br2 = bracket(x, rs) ** 2
    fac = 1 - x ** N
    T = np.zeros((N, N, N, N), dtype=complex)
    for i, j, l, k in itertools.product(range(N), repeat=4):
        a, b = (j - i - 1) % N, (l - k) % N
        c, d = (k - j) % N, (i - l) % N
        if a + b < N and c + d < N:
            T[i, j, l, k] = (N * br2 * rs.zpow((l - j) * (i - k)) * fac
                             / (omega(x, a, rs) * omega(x, b, rs)
                                * omega_star(x, c, rs) * omega_star(x, d, rs)))
    return T


def r_unit_limit(rs: RootSystem) -> np.ndarray:
    """lim_{x->1} r(x)/(1 - x^N), keyed [i,j,l,k]."""
    N = rs.N
    T = np.zeros((N, N, N, N), dtype=complex)
    for i, j, l, k in itertools.product(range(N), repeat=4):
        a, b = (j - i - 1) % N, (l - k) % N
        c, d = (k - j) % N, (i - l) % N
        if a + b < N and c + d < N:
            T[i, j, l, k] = (N * rs.zpow((l - j) * (i - k))
                             / (omega(1.0, a, rs) * omega(1.0, b, rs)
                                * omega_star(1.0, c, rs) * omega_star(1.0, d, rs)))
    return T


def dressed_r_limit(rs: RootSystem) -> np.ndarray:
    """zeta^{(m+1)(i-j+l-k)}-dressed unit limit, keyed [i,j,l,k].

    This is exactly (not just mod =_N) the tensor produced by
    qh_core.mixed_crossing(+1, +-1); the bridge residuals check both.
    """
    N, m = rs.N, rs.m
    ii, jj, ll, kk = np.indices((N, N, N, N))
    pre = rs.zeta_powers[((m + 1) * (ii - jj + ll - kk)) % N]
    return pre * r_unit_limit(rs)


def kashaev_display(sign: int, rs: RootSystem) -> np.ndarray:
    """The two Kashaev tensors, keyed [i,j,l,k].

    sign=-1 holds R_K(-)_{i,j}^{l,k}; sign=+1 holds R_K(+)^{i,j}_{l,k}
    (written indices up/down swap between the two displays).
    """
    N = rs.N
    T = np.zeros((N, N, N, N), dtype=complex)
    if sign < 0:
        for i, j, l, k in itertools.product(range(N), repeat=4):
            a, b = (j - i - 1) % N, (l - k) % N
            c, d = (k - j) % N, (i - l) % N
            if a + b < N and c + d < N:
                T[i, j, l, k] = (N * rs.zpow(1 + (l - j) * (1 + i - k))
                                 / (omega(1.0, a, rs) * omega(1.0, b, rs)
                                    * omega_star(1.0, c, rs) * omega_star(1.0, d, rs)))
    else:
        for i, j, l, k in itertools.product(range(N), repeat=4):
            a, b = (l - i) % N, (j - k) % N
            c, d = (i - j) % N, (k - l - 1) % N
            if a + b < N and c + d < N:
                T[i, j, l, k] = (N * rs.zpow((j - l) * (1 + i - k))
                                 / (omega(1.0, b, rs) * omega(1.0, a, rs)
                                    * omega_star(1.0, d, rs) * omega_star(1.0, c, rs)))
    return T


@dataclass(frozen=True)
class KashaevRMatrix:
    """A Kashaev display together with its operator binding."""

    sign: int
    N: int
    display: np.ndarray

    def operator(self) -> np.ndarray:
        """Standard matrix, rows = output pair.

        The minus display writes its upper pair last, so the operator is
        the pair-swapped reshape; the plus display already has the output
        pair first.
        """
        n2 = self.N * self.N
        if self.sign < 0:
            return np.transpose(self.display, (2, 3, 0, 1)).reshape(n2, n2)
        return self.display.reshape(n2, n2)


def kashaev_r(sign: int, rs: RootSystem) -> KashaevRMatrix:
    if sign not in (-1, 1):
        raise ValueError("sign must be +-1")
    return KashaevRMatrix(sign, rs.N, kashaev_display(sign, rs))


def mu_kashaev(rs: RootSystem) -> np.ndarray:
    """Enhancement mu = zeta^{m+1} * cyclic shift."""
    return rs.zpow(rs.m + 1) * qh_core.shift_matrix(rs.N)


def kashaev_eybo(rs: RootSystem) -> qh_core.EnhancedYBO:
    """Enhanced Yang-Baxter data of the Kashaev family.

    The positive-crossing operator comes from the minus display (that is
    how the written pair binds); its closed-form inverse is the plus
    display's operator divided by zeta, so no matrix is ever inverted
    numerically.  Twist a = -exp(i pi / N), b = 1.
    """
    N = rs.N
    R = kashaev_r(-1, rs).operator()
    R_inv = kashaev_r(1, rs).operator() / rs.zeta
    M = mu_kashaev(rs)
    D = qh_core.partial_trace_2(R @ np.kron(np.eye(N, dtype=complex), M), N)
    a = np.trace(D) / N
    target = -np.exp(1j * np.pi / N)
    err = np.max(np.abs(D - a * np.eye(N)))
    if err > 1e-8 or abs(a - target) > 1e-8:
        raise ArithmeticError(f"Kashaev twist drifted: a={a}, err={err:.2e}")
    return qh_core.EnhancedYBO(R=R, R_inv=R_inv, M=M, a=complex(target),
                               b=1.0 + 0j, family="kashaev")


def h_matrix(x: complex, alpha: int, rs: RootSystem) -> np.ndarray:
    """Conjugating matrix h(x, alpha)[k, i] = zeta^{alpha(k-i)} [x zeta^{k-i}]."""
    N = rs.N
    H = np.zeros((N, N), dtype=complex)
    for k in range(N):
        for i in range(N):
            H[k, i] = rs.zpow(alpha * (k - i)) * bracket(x * rs.zpow(k - i), rs)
    return H


def bridge_residuals(rs: RootSystem) -> dict:
    """Max relative residuals tying the two crossing families together.

    mixed_pp_pm: the two wall placements of the dressed positive crossing
    agree entrywise.  dressed: mixed_crossing(+1,+1) equals the dressed
    unit limit.  main: R_K(-) = zeta^{1+(m+1)(l+k-i-j)} x dressed limit.
    phase: R_K(-) = zeta^{1+l-j} x undressed limit.  All four are exact
    identities (residuals at rounding level), not merely =_N.
    """
    N, m = rs.N, rs.m
    qpp = qh_core.mixed_crossing(1, 1, rs).data
    qpm = qh_core.mixed_crossing(1, -1, rs).data
    qhr = dressed_r_limit(rs)
    r1 = r_unit_limit(rs)
    RKm = kashaev_display(-1, rs)
    scale = np.max(np.abs(RKm))

    main = np.zeros((N, N, N, N), dtype=complex)
    phase = np.zeros((N, N, N, N), dtype=complex)
    for i, j, l, k in itertools.product(range(N), repeat=4):
        main[i, j, l, k] = rs.zpow(1 + (m + 1) * (l + k - i - j)) * qhr[i, j, l, k]
        phase[i, j, l, k] = rs.zpow(1 + l - j) * r1[i, j, l, k]
    return {
        "mixed_pp_pm": float(np.max(np.abs(qpp - qpm)) / np.max(np.abs(qpm))),
        "dressed": float(np.max(np.abs(qpp - qhr)) / np.max(np.abs(qhr))),
        "main": float(np.max(np.abs(main - RKm)) / scale),
        "phase": float(np.max(np.abs(phase - RKm)) / scale),
    }
