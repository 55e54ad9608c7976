"""Pure-Python kernels. Same API as the compiled ``_ckernels`` module.

Matrices are passed as flat row-major tuples of ``n*n`` rationals. The
imaginary part is a separate tuple, or ``None`` when every entry is real.
"""
from fractions import Fraction

_ZERO = Fraction(0)


def reduce_letters(letters):
    """Cancel adjacent equal letters until none remain (stack reduction)."""
    out = []
    for x in letters:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _real_product(n, a, b):
    out = [_ZERO] * (n * n)
    for i in range(n):
        row = i * n
        acc = [_ZERO] * n
        for k in range(n):
            aik = a[row + k]
            if not aik:
                continue
            col = k * n
            for j in range(n):
                bkj = b[col + j]
                if bkj:
                    acc[j] += aik * bkj
        out[row:row + n] = acc
    return out


def matmul(n, a_re, a_im, b_re, b_im):
    """Exact product of two n x n Gaussian-rational matrices.

    Returns ``(re, im)`` with ``im`` set to ``None`` when the product is real.
    """
    re = _real_product(n, a_re, b_re)
    if a_im is None and b_im is None:
        return tuple(re), None
    im = [_ZERO] * (n * n)
    if a_im is not None:
        # (ar + i ai)(br + i bi) = ar br - ai bi + i (ar bi + ai br)
        if b_im is not None:
            t = _real_product(n, a_im, b_im)
            re = [x - y for x, y in zip(re, t)]
        t = _real_product(n, a_im, b_re)
        im = [x + y for x, y in zip(im, t)]
    if b_im is not None:
        t = _real_product(n, a_re, b_im)
        im = [x + y for x, y in zip(im, t)]
    if not any(im):
        return tuple(re), None
    return tuple(re), tuple(im)
