"""Pure-Python monomial kernels.

Monomials are bitmasks: bit ``i`` set means generator ``i + 1`` is present.
Term maps are ``dict[int, Fraction]`` with no zero coefficients.
"""


def reorder_sign(a, b):
    """Sign (+1/-1) of moving the sorted product ``xi_a * xi_b`` into sorted order.

    Counts pairs (i in a, j in b) with i > j.  Caller guarantees ``a & b == 0``.
    """
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def mul_terms(a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if ma & mb:
                continue
            m = ma | mb
            c = ca * cb
            if reorder_sign(ma, mb) < 0:
                c = -c
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s += c
                if s:
                    out[m] = s
                else:
                    del out[m]
    return out


def add_terms(a, b):
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out
