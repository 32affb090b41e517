"""Pure-numpy gate kernels: the fallback backend.

Every function mutates a contiguous complex128 amplitude array in place.
Qubit ``q`` is the q-th bit of the basis index (bit 0 = least significant).
The arithmetic (operand order, no FMA) deliberately mirrors the Cython
backend so both produce bit-identical amplitudes.
"""

import numpy as np


def apply_1q(amps: np.ndarray, q: int, u00: complex, u01: complex, u10: complex, u11: complex) -> None:
    """Apply a 2x2 unitary to qubit q."""
    step = 1 << q
    view = amps.reshape(-1, 2, step)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = u00 * a0 + u01 * a1
    view[:, 1, :] = u10 * a0 + u11 * a1


def apply_diag1q(amps: np.ndarray, q: int, d0: complex, d1: complex) -> None:
    """Apply diag(d0, d1) to qubit q."""
    step = 1 << q
    view = amps.reshape(-1, 2, step)
    view[:, 0, :] *= d0
    view[:, 1, :] *= d1


def apply_cnot(amps: np.ndarray, c: int, t: int) -> None:
    """Flip qubit t where qubit c is set."""
    n = amps.size.bit_length() - 1
    view = amps.reshape([2] * n)
    i0 = _index(n, {c: 1, t: 0})
    i1 = _index(n, {c: 1, t: 1})
    tmp = view[i0].copy()
    view[i0] = view[i1]
    view[i1] = tmp


def apply_cdiag1q(amps: np.ndarray, c: int, t: int, d0: complex, d1: complex) -> None:
    """Apply diag(d0, d1) to qubit t where qubit c is set."""
    n = amps.size.bit_length() - 1
    view = amps.reshape([2] * n)
    view[_index(n, {c: 1, t: 0})] *= d0
    view[_index(n, {c: 1, t: 1})] *= d1


def apply_swap(amps: np.ndarray, a: int, b: int) -> None:
    """Exchange qubits a and b."""
    n = amps.size.bit_length() - 1
    view = amps.reshape([2] * n)
    i01 = _index(n, {a: 0, b: 1})
    i10 = _index(n, {a: 1, b: 0})
    tmp = view[i01].copy()
    view[i01] = view[i10]
    view[i10] = tmp


def apply_cswap(amps: np.ndarray, c: int, a: int, b: int) -> None:
    """Exchange qubits a and b where qubit c is set."""
    n = amps.size.bit_length() - 1
    view = amps.reshape([2] * n)
    i01 = _index(n, {c: 1, a: 0, b: 1})
    i10 = _index(n, {c: 1, a: 1, b: 0})
    tmp = view[i01].copy()
    view[i01] = view[i10]
    view[i10] = tmp


def _index(n: int, fixed: dict) -> tuple:
    # numpy axis for qubit q is n-1-q (C order: first axis = most significant bit)
    idx = [slice(None)] * n
    for q, bit in fixed.items():
        idx[n - 1 - q] = bit
    return tuple(idx)
