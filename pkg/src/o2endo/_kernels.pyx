# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernels_py; same signatures, typed index loops."""

import array

from cpython cimport array


def compose_perm(list p, list q):
    cdef Py_ssize_t i, n = len(q)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = p[<Py_ssize_t> q[i]]
    return out


def invert_perm(list p):
    cdef Py_ssize_t i, n = len(p)
    cdef list out = [0] * n
    for i in range(n):
        out[<Py_ssize_t> p[i]] = i
    return out


def is_identity_perm(list p):
    cdef Py_ssize_t i, n = len(p)
    for i in range(n):
        if <Py_ssize_t> p[i] != i:
            return False
    return True


def pad_suffix_perm(list p, int extra):
    cdef Py_ssize_t x, n = len(p) << extra
    cdef Py_ssize_t mask = (1 << extra) - 1
    cdef list out = [0] * n
    for x in range(n):
        out[x] = (<Py_ssize_t> p[x >> extra] << extra) | (x & mask)
    return out


def shift_prefix_perm(list p, int level, int shift, int total):
    cdef int rest = total - shift - level
    if rest < 0:
        raise ValueError("total level too small for shifted permutation")
    cdef Py_ssize_t x, t, i, h, n = 1 << total
    cdef Py_ssize_t mrest = (1 << rest) - 1
    cdef Py_ssize_t mlev = (1 << level) - 1
    cdef list out = [0] * n
    for x in range(n):
        t = x & mrest
        i = (x >> rest) & mlev
        h = x >> (rest + level)
        out[x] = (((h << level) | <Py_ssize_t> p[i]) << rest) | t
    return out


def cocycle_perm(list p, int level, int steps):
    cdef int total = steps + level - 1
    cdef int j
    cdef list out = pad_suffix_perm(p, total - level)
    for j in range(1, steps):
        out = compose_perm(out, shift_prefix_perm(p, level, j, total))
    return out


cdef long long _find(long long[::1] parent, long long a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


cdef void _union(long long[::1] parent, long long a, long long b):
    cdef long long ra = _find(parent, a)
    cdef long long rb = _find(parent, b)
    if ra != rb:
        parent[rb] = ra


def commutant_labels(list p, int level, int k):
    """See _kernels_py.commutant_labels."""
    cdef int m = k + 1 if k + 1 > level else level
    cdef list ptil_l = pad_suffix_perm(p, m - level)
    cdef list pinv_l = invert_perm(ptil_l)
    cdef array.array ptil_a = array.array("q", ptil_l)
    cdef array.array pinv_a = array.array("q", pinv_l)
    cdef long long[::1] ptil = ptil_a
    cdef long long[::1] pinv = pinv_a
    cdef long long nk = 1 << k
    cdef long long n_unknown = nk * nk
    cdef long long zero = n_unknown
    cdef array.array parent_a = array.array("q", range(n_unknown + 1))
    cdef long long[::1] parent = parent_a
    cdef long long mask_mid = nk - 1
    cdef long long mask_suf = (1 << (m - k)) - 1
    cdef long long mask_tail = (1 << (m - k - 1)) - 1
    cdef int midshift = m - k - 1
    cdef int top = m - 1
    cdef long long t, ia, ib, h, g, i, gp, dp, gam, det, src
    for t in range(n_unknown):
        ia = t >> k
        ib = t & mask_mid
        for h in range(1 << (m - k)):
            gp = pinv[(ia << (m - k)) | h]
            dp = pinv[(ib << (m - k)) | h]
            if (gp >> top) == (dp >> top) and (gp & mask_tail) == (dp & mask_tail):
                src = (((gp >> midshift) & mask_mid) << k) | (
                    (dp >> midshift) & mask_mid
                )
                _union(parent, t, src)
            else:
                _union(parent, t, zero)
        for i in range(2):
            for g in range(1 << midshift):
                gam = ptil[(i << top) | (ia << midshift) | g]
                det = ptil[(i << top) | (ib << midshift) | g]
                if (gam & mask_suf) != (det & mask_suf):
                    _union(parent, t, zero)
    cdef long long zero_root = _find(parent, zero)
    cdef list labels = [0] * n_unknown
    roots = set()
    cdef long long r
    for t in range(n_unknown):
        r = _find(parent, t)
        if r == zero_root:
            labels[<Py_ssize_t> t] = -1
        else:
            labels[<Py_ssize_t> t] = r
            roots.add(r)
    return labels, len(roots)
