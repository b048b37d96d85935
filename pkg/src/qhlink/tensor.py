"""Dense tensors with an up/down index split and the operator algebra on them.

A tensor of arity (u, d) over C^N is stored as an ndarray of shape (N,)*(u+d),
row-major, all up indices before all down indices.  Reshaping the first u and
last d axes gives the matrix of the operator; composition is matrix product.
Constructions whose natural index display reads differently (tensors coming
out of the dilogarithm machinery) document their own keying on the returned
object; the algebra below never cares, it only sees the up/down split.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# hard cap on any single dense allocation (complex128 entries)
MAX_ENTRIES = 2 ** 31


class InfeasibleSizeError(Exception):
    """Requested dense object exceeds the entry cap; message carries the estimate."""


def check_entries(n_entries: int, what: str = "tensor"):
    if n_entries > MAX_ENTRIES:
        gib = n_entries * 16 / 2 ** 30
        raise InfeasibleSizeError(
            f"{what} needs {n_entries} complex entries (~{gib:.1f} GiB), "
            f"cap is {MAX_ENTRIES}")


@dataclass
class DenseTensor:
    data: np.ndarray
    up_arity: int
    down_arity: int

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=complex)
        if self.data.ndim != self.up_arity + self.down_arity:
            raise ValueError(
                f"data has {self.data.ndim} axes, expected "
                f"{self.up_arity}+{self.down_arity}")

    @property
    def n(self) -> int:
        return self.data.shape[0] if self.data.ndim else 1

    @property
    def dims(self):
        return self.data.shape

    def as_matrix(self) -> np.ndarray:
        r = self.n ** self.up_arity
        c = self.n ** self.down_arity
        return self.data.reshape(r, c)

    @classmethod
    def from_matrix(cls, M, up_arity: int, down_arity: int, n: int):
        return cls(np.asarray(M, dtype=complex).reshape((n,) * (up_arity + down_arity)),
                   up_arity, down_arity)

    def copy(self):
        return DenseTensor(self.data.copy(), self.up_arity, self.down_arity)


def compose(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    """Operator product a . b (a applied after b)."""
    if a.down_arity != b.up_arity or a.n != b.n:
        raise ValueError("arity/dimension mismatch in compose")
    M = a.as_matrix() @ b.as_matrix()
    return DenseTensor.from_matrix(M, a.up_arity, b.down_arity, a.n)


def kron(a: DenseTensor, b: DenseTensor) -> DenseTensor:
    """Tensor product; b's factors are appended after a's."""
    if a.n != b.n:
        raise ValueError("dimension mismatch in kron")
    check_entries(a.data.size * b.data.size, "kron")
    # outer product, then interleave so ups of a precede ups of b, same for downs
    T = np.multiply.outer(a.data, b.data)
    ua, da, ub, db = a.up_arity, a.down_arity, b.up_arity, b.down_arity
    axes = (list(range(ua)) + list(range(ua + da, ua + da + ub))
            + list(range(ua, ua + da)) + list(range(ua + da + ub, ua + da + ub + db)))
    return DenseTensor(np.transpose(T, axes), ua + ub, da + db)


def flip(n: int) -> DenseTensor:
    """Swap of two factors: P^{i,j}_{k,l} = [i==l][j==k]."""
    P = np.zeros((n, n, n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            P[i, j, j, i] = 1.0
    return DenseTensor(P, 2, 2)


def partial_transpose(t: DenseTensor, p: int) -> DenseTensor:
    """Exchange up_p with down_p (same factor, opposite block)."""
    if not (0 <= p < t.up_arity) or t.up_arity != t.down_arity:
        raise ValueError("partial_transpose needs square arity and a valid slot")
    axes = list(range(t.data.ndim))
    axes[p], axes[t.up_arity + p] = axes[t.up_arity + p], axes[p]
    return DenseTensor(np.transpose(t.data, axes), t.up_arity, t.down_arity)


def partial_trace(t: DenseTensor, j: int) -> DenseTensor:
    """Contract up_j against down_j; both arities drop by one."""
    if t.up_arity != t.down_arity:
        raise ValueError("partial_trace needs square arity")
    if not (0 <= j < t.up_arity):
        raise ValueError(f"slot {j} out of range")
    out = np.trace(t.data, axis1=j, axis2=t.up_arity + j)
    return DenseTensor(out, t.up_arity - 1, t.down_arity - 1)


def trace(t: DenseTensor) -> complex:
    if t.up_arity != t.down_arity:
        raise ValueError("trace needs square arity")
    return complex(np.trace(t.as_matrix()))


def apply_on_factors(t: DenseTensor, op: DenseTensor, slots) -> DenseTensor:
    """Left-multiply t by op embedded on the given factor slots.

    op is a (2,2)-arity tensor, slots = (p, q) with p != q, not necessarily
    adjacent and in either order.  Equivalent to composing with
    kron-embedded op but contracts directly (never materializes the big
    embedding, which matters at N^4 x N^4 sizes).
    """
    p, q = slots
    k = t.up_arity
    if op.up_arity != 2 or op.down_arity != 2:
        raise ValueError("embedded operator must have arity (2,2)")
    if p == q or not (0 <= p < k and 0 <= q < k):
        raise ValueError(f"bad slots {slots} for {k} factors")
    # contract op's down pair with t's up axes (p, q)
    out = np.tensordot(op.data, t.data, axes=([2, 3], [p, q]))
    # out axes: [up_p', up_q', remaining t axes in order]; restore positions
    rest = [ax for ax in range(t.data.ndim) if ax not in (p, q)]
    cur = {p: 0, q: 1}
    for i, ax in enumerate(rest):
        cur[ax] = 2 + i
    perm = [cur[ax] for ax in range(t.data.ndim)]
    return DenseTensor(np.transpose(out, perm), t.up_arity, t.down_arity)


def identity(n: int, arity: int = 1) -> DenseTensor:
    check_entries(n ** (2 * arity), "identity")
    M = np.eye(n ** arity, dtype=complex)
    return DenseTensor.from_matrix(M, arity, arity, n)


def dft_matrix(rs) -> np.ndarray:
    """F^i_j = zeta^{ij} / sqrt(N); symmetric and unitary."""
    N = rs.N
    ij = np.outer(np.arange(N), np.arange(N)) % N
    return rs.zeta_powers[ij] / np.sqrt(N)


def dft_conjugate(t: DenseTensor, rs, inverse: bool = False) -> DenseTensor:
    """Conjugate by the discrete Fourier transform on every factor.

    Returns (F x..x F) M (F x..x F)^dagger on the tensor's matrix M, or the
    dagger-first sandwich when inverse=True.
    """
    if t.up_arity != t.down_arity:
        raise ValueError("dft_conjugate needs square arity")
    F = dft_matrix(rs)
    Fk = F
    for _ in range(t.up_arity - 1):
        Fk = np.kron(Fk, F)
    M = t.as_matrix()
    if inverse:
        out = Fk.conj().T @ M @ Fk
    else:
        out = Fk @ M @ Fk.conj().T
    return DenseTensor.from_matrix(out, t.up_arity, t.down_arity, t.n)
