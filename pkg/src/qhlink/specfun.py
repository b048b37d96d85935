"""Cyclotomic special functions at an odd primitive root of unity.

Everything downstream (matrix dilogarithms, braidings, R-matrices) is built
from the handful of functions here: truncated pochhammer-type products
``omega``, the balanced bracket ``[x]``, the product function ``g`` and the
basic hypergeometric-like sum ``f``.  All of them are functions of a fixed
odd order N, carried around as a :class:`RootSystem`.

Equality of tensors "up to an N-th root of unity times a sign" is the
ambiguity all invariants here live with; :func:`eq_mod_n` finds and reports
the witness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class RootSystem:
    """Fixed odd order N with its primitive root zeta = exp(2 pi i / N).

    Attributes
    ----------
    N : int
        Odd order, N >= 3.
    m : int
        (N - 1) // 2, so N = 2m + 1.
    zeta : complex
        Primitive N-th root of unity.
    zeta_powers : ndarray
        zeta**k for k = 0..N-1, computed from exact angles (not by repeated
        multiplication, which drifts for large N).
    s : complex
        exp(i pi / N), the 2N-th root used by sign-twisted traces.
    """

    __slots__ = ("N", "m", "zeta", "zeta_powers", "s")

    def __init__(self, N: int):
        if N < 3 or N % 2 == 0:
            raise ValueError(f"order must be odd and >= 3, got {N}")
        self.N = int(N)
        self.m = (N - 1) // 2
        self.zeta = complex(np.exp(2j * np.pi / N))
        self.zeta_powers = np.exp(2j * np.pi * np.arange(N) / N)
        self.s = complex(np.exp(1j * np.pi / N))

    def zpow(self, k) -> complex:
        """zeta**k for integer k of either sign."""
        return complex(self.zeta_powers[int(k) % self.N])

    def __repr__(self):
        return f"RootSystem(N={self.N})"


def residue(n, N: int) -> int:
    """n mod N, normalized to [0, N)."""
    return int(n) % int(N)


def std_log(x) -> complex:
    """Principal-branch logarithm with log(-1) = +i pi."""
    return complex(np.log(complex(x)))


def nth_root(x, N: int) -> complex:
    """Principal N-th root exp(log(x)/N); 0 maps to 0."""
    x = complex(x)
    if x == 0:
        return 0j
    return complex(np.exp(std_log(x) / N))


def theta(n, N: int) -> float:
    """Indicator of the fundamental window: 1 if 0 <= n < N else 0.

    Acts on plain integers, not residues; callers reduce first when they
    mean the residue.
    """
    return 1.0 if 0 <= n < N else 0.0


def omega(u, n, rs: RootSystem) -> complex:
    """Truncated product omega(u|n) = prod_{j=1}^{n} (1 - u zeta^j).

    Negative n extends by the recurrence omega(u|n) = omega(u|n+1) /
    (1 - u zeta^{n+1}) run backwards.  Raises if a factor in the backward
    run vanishes (the product has a genuine pole there).
    """
    n = int(n)
    out = 1.0 + 0j
    if n >= 0:
        for j in range(1, n + 1):
            out *= 1 - u * rs.zpow(j)
        return out
    for j in range(n + 1, 1):
        f = 1 - u * rs.zpow(j)
        if f == 0:
            raise ZeroDivisionError(f"omega(u|{n}) singular at factor j={j}")
        out *= f
    return 1.0 / out


def omega2(u, v, n, rs: RootSystem) -> complex:
    """Two-variable form omega(u, v | n) = v^n / omega(u|n)."""
    return v ** int(n) / omega(u, n, rs)


def omega_star(u, n, rs: RootSystem) -> complex:
    """Conjugate-direction product prod_{j=1}^{n} (1 - u zeta^{-j}).

    Same backward extension for n < 0 as :func:`omega`.
    """
    n = int(n)
    out = 1.0 + 0j
    if n >= 0:
        for j in range(1, n + 1):
            out *= 1 - u * rs.zpow(-j)
        return out
    for j in range(n + 1, 1):
        f = 1 - u * rs.zpow(-j)
        if f == 0:
            raise ZeroDivisionError(f"omega_star(u|{n}) singular at factor j={j}")
        out *= f
    return 1.0 / out


def bracket(x, rs: RootSystem) -> complex:
    """Balanced bracket [x] = (1 - x^N) / (N (1 - x)), with [1] := 1.

    At other N-th roots of unity the numerator vanishes and the bracket is
    honestly 0; only x = 1 is filled in by continuity.
    """
    x = complex(x)
    if abs(x - 1) < 1e-12:
        return 1.0 + 0j
    return (1 - x ** rs.N) / (1 - x) / rs.N


def pochhammer(x, n, rs: RootSystem) -> complex:
    """(x)_n = (1 - x) * omega(x | [n]_N), the N-periodic pochhammer."""
    return (1 - x) * omega(x, residue(n, rs.N), rs)


def pochhammer_star(x, n, rs: RootSystem) -> complex:
    """Star companion of :func:`pochhammer`: the plain complex conjugate.

    For the zeta-power arguments where it is used this coincides with the
    product over zeta^{-j} factors.
    """
    return np.conj(pochhammer(x, n, rs))


def g_fun(x, rs: RootSystem) -> complex:
    """g(x) = prod_{j=1}^{N-1} (1 - x zeta^{-j})^{j/N}, principal powers.

    Each factor goes through exp((j/N) log(.)) so branch choices stay
    consistent across the whole product.
    """
    out = 1.0 + 0j
    for j in range(1, rs.N):
        out *= np.exp((j / rs.N) * std_log(1 - x * rs.zpow(-j)))
    return complex(out)


def h_fun(x, rs: RootSystem) -> complex:
    """Normalized ratio h(x) = g(x) / g(1)."""
    return g_fun(x, rs) / g_fun(1.0, rs)


def f_fun(x, y, z, rs: RootSystem) -> complex:
    """f(x, y | z) = sum_{n=1}^{N} z^n prod_{j=1}^{n} (1 - y zeta^j)/(1 - x zeta^j).

    Meaningful on the surface z^N = (1 - x^N)/(1 - y^N); callers are
    responsible for picking z there.  The running product is reused across
    terms, so the sum is O(N).
    """
    out = 0j
    p = 1.0 + 0j
    for n in range(1, rs.N + 1):
        p *= (1 - y * rs.zpow(n)) / (1 - x * rs.zpow(n))
        out += p * z ** n
    return complex(out)


@dataclass(frozen=True)
class EqModNWitness:
    """Outcome of an equality-up-to-unit test a == sign * zeta^power * b.

    residual is the absolute max deviation under the best witness; equal
    applies the caller's relative tolerance against max(|a|, |b|, 1).
    """

    sign: int
    power: int
    residual: float
    equal: bool

    def unit(self, rs: RootSystem) -> complex:
        """The witnessed scalar, sign * zeta^power."""
        return self.sign * rs.zpow(self.power)


def eq_mod_n(a, b, rs: RootSystem, tol: float = 1e-9) -> EqModNWitness:
    """Decide a =_N b, i.e. a == s * zeta^k * b for s in {+1,-1}, 0 <= k < N.

    Scalars are compared by minimizing the residual over all 2N candidate
    units.  Arrays are compared with ONE global witness: the candidate is
    read off the largest-magnitude entry of b and then every entry must
    agree under it.  The tolerance is relative, scaled by the larger
    operand (floored at 1 so near-zero comparisons stay strict).
    """
    A = np.asarray(a, dtype=complex)
    B = np.asarray(b, dtype=complex)
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch {A.shape} vs {B.shape}")
    scale = max(float(np.max(np.abs(A))), float(np.max(np.abs(B))), 1.0)
    limit = tol * scale

    flatB = B.ravel()
    piv = int(np.argmax(np.abs(flatB)))
    if abs(flatB[piv]) < 1e-300:
        res = float(np.max(np.abs(A)))
        return EqModNWitness(sign=1, power=0, residual=res, equal=res <= limit)

    if A.size == 1:
        a0, b0 = complex(A.ravel()[0]), complex(flatB[0])
        best = None
        for sign in (1, -1):
            for k in range(rs.N):
                r = abs(a0 - sign * rs.zpow(k) * b0)
                if best is None or r < best[0]:
                    best = (r, sign, k)
        res, sign, k = best
        return EqModNWitness(sign=sign, power=k, residual=res, equal=res <= limit)

    ratio = complex(A.ravel()[piv] / flatB[piv])
    best = None
    for sign in (1, -1):
        for k in range(rs.N):
            d = abs(ratio - sign * rs.zpow(k))
            if best is None or d < best[0]:
                best = (d, sign, k)
    _, sign, k = best
    c = sign * rs.zpow(k)
    res = float(np.max(np.abs(A - c * B)))
    return EqModNWitness(sign=sign, power=k, residual=res, equal=res <= limit)
