# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels. Mirrors ``gamma2._pykernels`` exactly."""
from fractions import Fraction

cdef object _ZERO = Fraction(0)


def reduce_letters(letters):
    cdef list out = []
    cdef Py_ssize_t top = 0
    cdef long x
    for item in letters:
        x = item
        if top and <long>out[top - 1] == x:
            out.pop()
            top -= 1
        else:
            out.append(x)
            top += 1
    return tuple(out)


cdef list _real_product(Py_ssize_t n, tuple a, tuple b):
    cdef list out = [_ZERO] * (n * n)
    cdef Py_ssize_t i, j, k, row, col
    cdef object aik, bkj
    for i in range(n):
        row = i * n
        for k in range(n):
            aik = a[row + k]
            if not aik:
                continue
            col = k * n
            for j in range(n):
                bkj = b[col + j]
                if bkj:
                    out[row + j] = out[row + j] + aik * bkj
    return out


def matmul(Py_ssize_t n, tuple a_re, a_im, tuple b_re, b_im):
    cdef list re = _real_product(n, a_re, b_re)
    cdef list im, t
    cdef Py_ssize_t idx, size = n * n
    if a_im is None and b_im is None:
        return tuple(re), None
    im = [_ZERO] * size
    if a_im is not None:
        if b_im is not None:
            t = _real_product(n, <tuple>a_im, <tuple>b_im)
            for idx in range(size):
                re[idx] = re[idx] - t[idx]
        t = _real_product(n, <tuple>a_im, b_re)
        for idx in range(size):
            im[idx] = im[idx] + t[idx]
    if b_im is not None:
        t = _real_product(n, a_re, <tuple>b_im)
        for idx in range(size):
            im[idx] = im[idx] + t[idx]
    for idx in range(size):
        if im[idx]:
            return tuple(re), tuple(im)
    return tuple(re), None
