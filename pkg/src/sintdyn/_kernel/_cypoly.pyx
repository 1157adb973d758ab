"""Compiled coefficient-vector kernels for dense polynomials over F_p.

Same contract as _pypoly: lists of residues in [0, p), lowest degree first,
no trailing zeros, [] for zero.  p < 2**31, so every intermediate product
fits in 64 bits.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

ctypedef unsigned long long u64

BACKEND = "cython"


cdef u64 *_alloc(Py_ssize_t n) except NULL:
    cdef u64 *buf = <u64 *> malloc((n if n > 0 else 1) * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef u64 *_from_list(list a) except NULL:
    cdef Py_ssize_t i, n = len(a)
    cdef u64 *buf = _alloc(n)
    for i in range(n):
        buf[i] = a[i]
    return buf


cdef list _to_list(u64 *c, Py_ssize_t n):
    while n > 0 and c[n - 1] == 0:
        n -= 1
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = c[i]
    return out


cdef u64 _inv_mod(u64 a, u64 p):
    # extended Euclid; p prime, a not divisible by p
    cdef long long t = 0, newt = 1, r = <long long> p, newr = <long long> (a % p)
    cdef long long q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += <long long> p
    return <u64> t


cdef Py_ssize_t _mul_into(u64 *a, Py_ssize_t na, u64 *b, Py_ssize_t nb,
                          u64 *c, u64 p) noexcept:
    # writes a*b into c (room for na+nb-1 required); returns written length
    cdef Py_ssize_t i, j, nc
    cdef u64 ai
    if na == 0 or nb == 0:
        return 0
    nc = na + nb - 1
    memset(c, 0, nc * sizeof(u64))
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                c[i + j] = (c[i + j] + ai * b[j]) % p
    return nc


cdef Py_ssize_t _reduce_into(u64 *r, Py_ssize_t nr, u64 *m, Py_ssize_t nm,
                             u64 minv, u64 p) noexcept:
    # in-place remainder of r modulo m; returns stripped length
    cdef Py_ssize_t i, j
    cdef u64 top, qi, sub
    for i in range(nr - nm, -1, -1):
        top = r[i + nm - 1]
        if top:
            qi = top * minv % p
            for j in range(nm - 1):
                sub = qi * m[j] % p
                r[i + j] = (r[i + j] + p - sub) % p
            r[i + nm - 1] = 0
    if nr > nm - 1:
        nr = nm - 1
    while nr > 0 and r[nr - 1] == 0:
        nr -= 1
    return nr


def mul(list a, list b, p):
    cdef u64 pp = p
    cdef Py_ssize_t na = len(a), nb = len(b), nc
    if na == 0 or nb == 0:
        return []
    cdef u64 *aa = _from_list(a)
    cdef u64 *bb = NULL
    cdef u64 *cc = NULL
    try:
        bb = _from_list(b)
        cc = _alloc(na + nb - 1)
        nc = _mul_into(aa, na, bb, nb, cc, pp)
        return _to_list(cc, nc)
    finally:
        free(aa)
        free(bb)
        free(cc)


def div_rem(list a, list b, p):
    cdef u64 pp = p
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if nb == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if na < nb:
        return [], list(a)
    cdef u64 *rr = _from_list(a)
    cdef u64 *bb = NULL
    cdef u64 *qq = NULL
    cdef u64 binv, top, qi, sub
    try:
        bb = _from_list(b)
        qq = _alloc(na - nb + 1)
        memset(qq, 0, (na - nb + 1) * sizeof(u64))
        binv = _inv_mod(bb[nb - 1], pp)
        for i in range(na - nb, -1, -1):
            top = rr[i + nb - 1]
            if top:
                qi = top * binv % pp
                qq[i] = qi
                for j in range(nb - 1):
                    sub = qi * bb[j] % pp
                    rr[i + j] = (rr[i + j] + pp - sub) % pp
                rr[i + nb - 1] = 0
        return _to_list(qq, na - nb + 1), _to_list(rr, nb - 1)
    finally:
        free(rr)
        free(bb)
        free(qq)


def rem(list a, list b, p):
    cdef u64 pp = p
    cdef Py_ssize_t na = len(a), nb = len(b), nr
    if nb == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if na < nb:
        return list(a)
    cdef u64 *rr = _from_list(a)
    cdef u64 *bb = NULL
    try:
        bb = _from_list(b)
        nr = _reduce_into(rr, na, bb, nb, _inv_mod(bb[nb - 1], pp), pp)
        return _to_list(rr, nr)
    finally:
        free(rr)
        free(bb)


def mul_mod(list a, list b, list m, p):
    cdef u64 pp = p
    cdef Py_ssize_t na = len(a), nb = len(b), nm = len(m), nc
    if nm == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if na == 0 or nb == 0 or nm == 1:
        return []
    cdef u64 *aa = _from_list(a)
    cdef u64 *bb = NULL
    cdef u64 *mm = NULL
    cdef u64 *cc = NULL
    try:
        bb = _from_list(b)
        mm = _from_list(m)
        cc = _alloc(na + nb - 1)
        nc = _mul_into(aa, na, bb, nb, cc, pp)
        nc = _reduce_into(cc, nc, mm, nm, _inv_mod(mm[nm - 1], pp), pp)
        return _to_list(cc, nc)
    finally:
        free(aa)
        free(bb)
        free(mm)
        free(cc)


def pow_mod(list base, object exp, list m, p):
    cdef u64 pp = p
    cdef Py_ssize_t nm = len(m), nb, nr, ns, cap, k, nbits
    if nm == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if exp < 0:
        raise ValueError("negative exponent")
    if nm == 1:
        return []
    if exp == 0:
        return [1]
    cdef bytes bits = bin(exp)[2:].encode("ascii")
    cdef const char *bp = bits
    nbits = len(bits)
    cap = nm - 1
    cdef u64 minv
    cdef u64 *mm = _from_list(m)
    cdef u64 *bb = NULL
    cdef u64 *rr = NULL
    cdef u64 *scratch = NULL
    cdef Py_ssize_t i
    try:
        minv = _inv_mod(mm[nm - 1], pp)
        nb = len(base)
        bb = _alloc(nb if nb > cap else cap)
        for i in range(nb):
            bb[i] = base[i]
        nb = _reduce_into(bb, nb, mm, nm, minv, pp)
        scratch = _alloc(2 * cap)
        rr = _alloc(cap)
        rr[0] = 1
        nr = 1
        for k in range(nbits):
            ns = _mul_into(rr, nr, rr, nr, scratch, pp)
            ns = _reduce_into(scratch, ns, mm, nm, minv, pp)
            memcpy(rr, scratch, ns * sizeof(u64))
            nr = ns
            if bp[k] == 49:  # '1'
                ns = _mul_into(rr, nr, bb, nb, scratch, pp)
                ns = _reduce_into(scratch, ns, mm, nm, minv, pp)
                memcpy(rr, scratch, ns * sizeof(u64))
                nr = ns
        return _to_list(rr, nr)
    finally:
        free(mm)
        free(bb)
        free(rr)
        free(scratch)


def gcd(list a, list b, p):
    cdef u64 pp = p
    cdef Py_ssize_t na = len(a), nb = len(b), nr, i
    cdef u64 *aa = _from_list(a)
    cdef u64 *bb = NULL
    cdef u64 *tmp
    cdef u64 inv
    try:
        bb = _from_list(b)
        while nb > 0:
            nr = _reduce_into(aa, na, bb, nb, _inv_mod(bb[nb - 1], pp), pp)
            tmp = aa
            aa = bb
            bb = tmp
            na = nb
            nb = nr
        if na > 0 and aa[na - 1] != 1:
            inv = _inv_mod(aa[na - 1], pp)
            for i in range(na):
                aa[i] = aa[i] * inv % pp
        return _to_list(aa, na)
    finally:
        free(aa)
        free(bb)
