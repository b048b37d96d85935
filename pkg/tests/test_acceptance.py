"""Acceptance gate: one test per shipped guarantee, one verdict line each.

Every test prints `ACCEPT <tag>: PASS` on success (visible under -v with
-s or in the captured output); a failure trips the assert with the
offending residuals attached.  Time budgets are asserted, not aspirational.
"""

import time

import numpy as np
import pytest

from qhlink import asympt, links, verify
from qhlink.specfun import RootSystem, eq_mod_n


def _passline(tag):
    print(f"ACCEPT {tag}: PASS")


def _run(suite, orders, seed=0):
    recs = []
    for n in orders:
        recs.extend(verify.SUITES[suite](n, seed=seed))
    bad = [(r.name, r.residual) for r in recs if not r.passed]
    assert not bad, bad
    return recs


def test_01_special_function_identities():
    t0 = time.monotonic()
    recs = _run("algres", (3, 5, 7, 9, 11))
    worst = max(r.residual for r in recs)
    assert worst < 1e-9, worst
    dt = time.monotonic() - t0
    assert dt < 5.0, dt
    _passline(f"01 cyclotomic identities ({len(recs)} checks, "
              f"worst {worst:.1e}, {dt:.2f}s)")


def test_02_fourier_conjugation():
    t0 = time.monotonic()
    recs = _run("ffourier", (3, 5, 7))
    worst = max(r.residual for r in recs)
    assert worst < 1e-9, worst
    dt = time.monotonic() - t0
    assert dt < 10.0, dt
    _passline(f"02 fourier conjugation ({len(recs)} checks, "
              f"worst {worst:.1e}, {dt:.2f}s)")


def test_03_braiding_composition():
    t0 = time.monotonic()
    recs = _run("braiding", (3, 5, 7))
    worst = max(r.residual for r in recs)
    assert worst < 1e-9, worst
    dt = time.monotonic() - t0
    assert dt < 30.0, dt
    _passline(f"03 braiding operator/closed/inverse ({len(recs)} checks, "
              f"worst {worst:.1e}, {dt:.2f}s)")


def test_04_wall_closed_forms():
    recs = _run("walls", (3, 5, 7, 9))
    worst = max(r.residual for r in recs)
    assert worst < 1e-9, worst
    _passline(f"04 walls ({len(recs)} checks, worst {worst:.1e})")


def test_05_enhanced_yang_baxter():
    recs = _run("ybe", (3, 5, 7, 9))
    worst = max(r.residual for r in recs)
    assert worst < 1e-8, worst
    _passline(f"05 enhanced YBE both families ({len(recs)} checks, "
              f"worst {worst:.1e})")


def test_06_invariant_normalizations():
    worst = 0.0
    for N in (3, 5, 7):
        rs = RootSystem(N)
        for fam in ("qh", "kashaev"):
            ybo = links.operators(fam, rs)
            for name in ("unknot1", "unknot2"):
                v = links.invariant(name, N, family=fam).value
                w = eq_mod_n(v, 1.0 + 0j, rs, tol=1e-9)
                assert w.equal, (name, fam, N, v)
                worst = max(worst, w.residual)
            ct = abs(links.closed_trace(links.CATALOG["trefoil"], ybo))
            assert ct < 1e-10, (fam, N, ct)
            sp = abs(links.invariant("split2", N, family=fam).value)
            assert sp < 1e-9, (fam, N, sp)
        hopf = links.invariant("hopf", N, family="qh").value
        w = eq_mod_n(hopf, complex(N), rs, tol=1e-9)
        assert w.equal, (N, hopf)
        worst = max(worst, w.residual / N)
    _passline(f"06 unknot/hopf/split/trace normalizations (worst {worst:.1e})")


def test_07_bridge_and_conjugation():
    recs = _run("bridge", (3, 5, 7)) + _run("conjmat", (3, 5, 7))
    recs += _run("convstates", (3, 5, 7, 9))
    worst = max(r.residual for r in recs)
    assert worst < 1e-4  # the x->1 limit checks dominate; all else ~1e-15
    exact = [r.residual for r in recs if "limit" not in r.name]
    assert max(exact) < 1e-8, max(exact)
    _passline(f"07 R-matrix bridge ({len(recs)} checks, "
              f"worst exact {max(exact):.1e})")


def test_08_two_route_equality():
    for N in (3, 5, 7):
        for name in ("unknot2", "hopf", "trefoil", "fig8", "whitehead"):
            k, q, ok = links.hk_pair(links.CATALOG[name], N)
            assert ok, (name, N, k.value, q.value)
            assert abs(abs(k.value) - abs(q.value)) <= 1e-7 * max(1.0, abs(k.value))
    v3 = links.invariant("fig8", 3, family="kashaev").value
    assert int(round(v3.real)) == 13 and abs(v3 - 13) < 1e-9
    _passline("08 Kashaev/state-sum agreement incl fig8(3) = 13")


def test_09_alternative_diagrams():
    t0 = time.monotonic()
    rs = RootSystem(7)
    braid = {
        "hopf_one_tensor": "hopf", "hopf_two_tensor": "hopf",
        "whitehead": "whitehead", "four_two_one": "l421",
    }
    for pz, ln in braid.items():
        got = links.puzzle(pz, rs)
        want = links.invariant(ln, 7).value
        assert eq_mod_n(got, want, rs, tol=1e-6).equal, (pz, got, want)
    dt = time.monotonic() - t0
    assert dt < 10.0, dt
    _passline(f"09 plat-style diagrams match braid closures ({dt:.2f}s)")


def test_10_volume_growth():
    t0 = time.monotonic()
    fit = asympt.vc_sweep(list(range(201, 602, 50)), model="corrected")
    target = asympt.fig8_volume() / (2 * np.pi)
    rel = abs(fit.slope - target) / target
    assert rel < 5e-3, rel
    for N in (21, 61, 101):
        a, b = asympt.fig8_kashaev(N), asympt.fig8_kashaev_dual(N)
        assert abs(a - b) < 1e-9 * b, N
    dt = time.monotonic() - t0
    assert dt < 60.0, dt
    _passline(f"10 exponential growth rate (rel err {rel:.2e}, {dt:.2f}s)")
