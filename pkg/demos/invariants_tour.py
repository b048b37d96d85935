"""Tour of the link catalog: both invariant families side by side.

Evaluates every catalog link at a few odd orders, prints the values, and
shows the unit scalar relating the Kashaev and state-sum routes.
"""

import numpy as np

from qhlink import links
from qhlink.specfun import RootSystem, eq_mod_n


def main():
    for N in (3, 5, 7):
        rs = RootSystem(N)
        print(f"\n=== order N = {N} ===")
        print(f"{'link':<11} {'kashaev':>28} {'state sum':>28} unit")
        for name in sorted(links.CATALOG):
            k, q, ok = links.hk_pair(links.CATALOG[name], N)
            if abs(k.value) < 1e-9:
                unit = "-" if abs(q.value) < 1e-9 else "??"
            else:
                w = eq_mod_n(q.value, k.value, rs, tol=1e-6)
                if not w.equal:
                    w = eq_mod_n(np.conj(q.value), k.value, rs, tol=1e-6)
                unit = f"{w.unit(rs):.3f}" if w.equal else "??"
            flag = "" if ok else "   <-- MISMATCH"
            print(f"{name:<11} {k.value:>28.6f} {q.value:>28.6f} {unit}{flag}")

    print("\nfigure-eight growth (kashaev family, real positive):")
    for N in (3, 5, 7, 9, 11, 13):
        v = links.invariant("fig8", N, family="kashaev").value
        print(f"  N={N:<3d} <4_1>_N = {v.real:>14.4f}"
              f"   2pi log/N = {2 * np.pi * np.log(abs(v)) / N:.6f}")


if __name__ == "__main__":
    main()
