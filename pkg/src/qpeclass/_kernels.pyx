# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled gate kernels: the fast backend.

Same contract as _kernels_py: in-place updates of a contiguous complex128
amplitude array, qubit q = bit q of the basis index. Operand order matches
the numpy fallback and the extension is built with -ffp-contract=off, so
amplitudes agree bit-for-bit across backends.
"""

import numpy as np
cimport numpy as cnp


def apply_1q(cnp.complex128_t[::1] amps, int q, double complex u00, double complex u01,
             double complex u10, double complex u11):
    """Apply a 2x2 unitary to qubit q."""
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t step = 1 << q
    cdef Py_ssize_t base, j, i
    cdef double complex a0, a1
    with nogil:
        for base in range(0, n, 2 * step):
            for j in range(step):
                i = base + j
                a0 = amps[i]
                a1 = amps[i + step]
                amps[i] = u00 * a0 + u01 * a1
                amps[i + step] = u10 * a0 + u11 * a1


def apply_diag1q(cnp.complex128_t[::1] amps, int q, double complex d0, double complex d1):
    """Apply diag(d0, d1) to qubit q."""
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t step = 1 << q
    cdef Py_ssize_t base, j, i
    with nogil:
        for base in range(0, n, 2 * step):
            for j in range(step):
                i = base + j
                amps[i] = amps[i] * d0
                amps[i + step] = amps[i + step] * d1


def apply_cnot(cnp.complex128_t[::1] amps, int c, int t):
    """Flip qubit t where qubit c is set."""
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t cmask = 1 << c
    cdef Py_ssize_t tmask = 1 << t
    cdef Py_ssize_t i, j
    cdef double complex tmp
    with nogil:
        for i in range(n):
            if (i & cmask) and not (i & tmask):
                j = i | tmask
                tmp = amps[i]
                amps[i] = amps[j]
                amps[j] = tmp


def apply_cdiag1q(cnp.complex128_t[::1] amps, int c, int t, double complex d0, double complex d1):
    """Apply diag(d0, d1) to qubit t where qubit c is set."""
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t cmask = 1 << c
    cdef Py_ssize_t tmask = 1 << t
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            if i & cmask:
                if i & tmask:
                    amps[i] = amps[i] * d1
                else:
                    amps[i] = amps[i] * d0


def apply_swap(cnp.complex128_t[::1] amps, int a, int b):
    """Exchange qubits a and b."""
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t amask = 1 << a
    cdef Py_ssize_t bmask = 1 << b
    cdef Py_ssize_t i, j
    cdef double complex tmp
    with nogil:
        for i in range(n):
            if (i & amask) and not (i & bmask):
                j = (i & ~amask) | bmask
                tmp = amps[i]
                amps[i] = amps[j]
                amps[j] = tmp


def apply_cswap(cnp.complex128_t[::1] amps, int c, int a, int b):
    """Exchange qubits a and b where qubit c is set."""
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t cmask = 1 << c
    cdef Py_ssize_t amask = 1 << a
    cdef Py_ssize_t bmask = 1 << b
    cdef Py_ssize_t i, j
    cdef double complex tmp
    with nogil:
        for i in range(n):
            if (i & cmask) and (i & amask) and not (i & bmask):
                j = (i & ~amask) | bmask
                tmp = amps[i]
                amps[i] = amps[j]
                amps[j] = tmp
