# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled monomial kernels; same contract as ``_pykernel``.

``mul_terms`` runs its inner loop on C ``long long`` numerators when a bound
on the accumulated values fits in 62 bits, and on Python ints otherwise.
"""

from fractions import Fraction
from math import lcm

from libc.stdlib cimport free, malloc


cdef extern from *:
    int __builtin_popcount(unsigned int x) nogil


cdef inline int _swaps(unsigned int a, unsigned int b) nogil:
    cdef int n = 0
    a >>= 1
    while a:
        n += __builtin_popcount(a & b)
        a >>= 1
    return n


cpdef int reorder_sign(unsigned int a, unsigned int b):
    return -1 if _swaps(a, b) & 1 else 1


cdef tuple _common(dict terms):
    d = lcm(*[c.denominator for c in terms.values()])
    masks = list(terms.keys())
    nums = [c.numerator * (d // c.denominator) for c in terms.values()]
    return d, masks, nums


cdef dict _mul_small(list ma, list xa, list mb, list xb):
    cdef Py_ssize_t na = len(ma), nb = len(mb), i, j
    cdef unsigned int *am = <unsigned int *> malloc(na * sizeof(unsigned int))
    cdef unsigned int *bm = <unsigned int *> malloc(nb * sizeof(unsigned int))
    cdef long long *av = <long long *> malloc(na * sizeof(long long))
    cdef long long *bv = <long long *> malloc(nb * sizeof(long long))
    cdef unsigned int x, y
    cdef long long v
    cdef dict acc = {}
    try:
        for i in range(na):
            am[i] = ma[i]
            av[i] = xa[i]
        for j in range(nb):
            bm[j] = mb[j]
            bv[j] = xb[j]
        for i in range(na):
            x = am[i]
            for j in range(nb):
                y = bm[j]
                if x & y:
                    continue
                v = av[i] * bv[j]
                if _swaps(x, y) & 1:
                    v = -v
                k = x | y
                acc[k] = acc.get(k, 0) + v
    finally:
        free(am)
        free(bm)
        free(av)
        free(bv)
    return acc


cdef dict _mul_big(list ma, list xa, list mb, list xb):
    cdef dict acc = {}
    cdef unsigned int x, y
    for i in range(len(ma)):
        x = ma[i]
        for j in range(len(mb)):
            y = mb[j]
            if x & y:
                continue
            v = xa[i] * xb[j]
            if _swaps(x, y) & 1:
                v = -v
            k = x | y
            acc[k] = acc.get(k, 0) + v
    return acc


cpdef dict mul_terms(dict a, dict b):
    if not a or not b:
        return {}
    da, ma, xa = _common(a)
    db, mb, xb = _common(b)
    # each output monomial collects at most min(|a|, |b|) products
    bound = max(map(abs, xa)) * max(map(abs, xb)) * min(len(xa), len(xb))
    if bound < (1 << 62):
        acc = _mul_small(ma, xa, mb, xb)
    else:
        acc = _mul_big(ma, xa, mb, xb)
    d = da * db
    return {k: Fraction(v, d) for k, v in acc.items() if v}


cpdef dict add_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object s
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out
