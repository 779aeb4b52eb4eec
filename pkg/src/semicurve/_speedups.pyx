# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exponent-vector kernels.

Same contract and same output ordering as semicurve._kernels_py: rows are
tuples of ints, results are sorted by (total degree, exponent tuple).  The
quadratic divisibility filters and pairwise expansions run over flat C
int64 buffers; semicurve.kernels routes oversized exponents to the pure
backend before overflow could occur.
"""
from cpython.mem cimport PyMem_Free, PyMem_Malloc
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF

BACKEND = "compiled"


cdef long long* _pack(list rows, Py_ssize_t m, Py_ssize_t k) except NULL:
    cdef long long* buf = <long long*> PyMem_Malloc(max(m * k, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, c
    cdef tuple row
    try:
        for i in range(m):
            row = <tuple> rows[i]
            for c in range(k):
                buf[i * k + c] = row[c]
    except BaseException:
        PyMem_Free(buf)
        raise
    return buf


cdef tuple _unpack_row(long long* row, Py_ssize_t k):
    cdef tuple out = PyTuple_New(k)
    cdef Py_ssize_t c
    cdef object v
    for c in range(k):
        v = row[c]
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, c, v)
    return out


cdef bint _divides_c(long long* a, long long* b, Py_ssize_t k) noexcept:
    cdef Py_ssize_t c
    for c in range(k):
        if a[c] > b[c]:
            return 0
    return 1


def minimalize(rows):
    """Minimal elements under divisibility, sorted by (degree, exps)."""
    cdef list uniq = sorted(set(rows), key=_deg_key)
    cdef Py_ssize_t m = len(uniq)
    if m == 0:
        return []
    cdef Py_ssize_t k = len(<tuple> uniq[0])
    cdef long long* buf = _pack(uniq, m, k)
    cdef Py_ssize_t* kept = <Py_ssize_t*> PyMem_Malloc(max(m, 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t nkept = 0, i, j
    cdef bint dominated
    cdef list out = []
    if kept == NULL:
        PyMem_Free(buf)
        raise MemoryError()
    try:
        for i in range(m):
            dominated = 0
            for j in range(nkept):
                if _divides_c(buf + kept[j] * k, buf + i * k, k):
                    dominated = 1
                    break
            if not dominated:
                kept[nkept] = i
                nkept += 1
        for j in range(nkept):
            out.append(uniq[kept[j]])
    finally:
        PyMem_Free(kept)
        PyMem_Free(buf)
    return out


def _deg_key(m):
    return (sum(m), m)


def pairwise_product(rows_a, rows_b):
    """Minimal generators of the product ideal."""
    cdef list la = list(rows_a), lb = list(rows_b)
    cdef Py_ssize_t ma = len(la), mb = len(lb)
    if ma == 0 or mb == 0:
        return []
    cdef Py_ssize_t k = len(<tuple> la[0])
    cdef long long* ba = _pack(la, ma, k)
    cdef long long* bb
    cdef long long* row = NULL
    cdef Py_ssize_t i, j, c
    cdef list cands = []
    try:
        bb = _pack(lb, mb, k)
    except BaseException:
        PyMem_Free(ba)
        raise
    row = <long long*> PyMem_Malloc(max(k, 1) * sizeof(long long))
    if row == NULL:
        PyMem_Free(ba)
        PyMem_Free(bb)
        raise MemoryError()
    try:
        for i in range(ma):
            for j in range(mb):
                for c in range(k):
                    row[c] = ba[i * k + c] + bb[j * k + c]
                cands.append(_unpack_row(row, k))
    finally:
        PyMem_Free(row)
        PyMem_Free(ba)
        PyMem_Free(bb)
    return minimalize(cands)


def pairwise_lcm(rows_a, rows_b):
    """Minimal generators of the intersection ideal."""
    cdef list la = list(rows_a), lb = list(rows_b)
    cdef Py_ssize_t ma = len(la), mb = len(lb)
    if ma == 0 or mb == 0:
        return []
    cdef Py_ssize_t k = len(<tuple> la[0])
    cdef long long* ba = _pack(la, ma, k)
    cdef long long* bb
    cdef long long* row = NULL
    cdef Py_ssize_t i, j, c
    cdef long long x, y
    cdef list cands = []
    try:
        bb = _pack(lb, mb, k)
    except BaseException:
        PyMem_Free(ba)
        raise
    row = <long long*> PyMem_Malloc(max(k, 1) * sizeof(long long))
    if row == NULL:
        PyMem_Free(ba)
        PyMem_Free(bb)
        raise MemoryError()
    try:
        for i in range(ma):
            for j in range(mb):
                for c in range(k):
                    x = ba[i * k + c]
                    y = bb[j * k + c]
                    row[c] = x if x > y else y
                cands.append(_unpack_row(row, k))
    finally:
        PyMem_Free(row)
        PyMem_Free(ba)
        PyMem_Free(bb)
    return minimalize(cands)


def colon_by_monomial(rows, g):
    """Minimal generators of (rows) : g."""
    cdef list lr = list(rows)
    cdef Py_ssize_t m = len(lr)
    if m == 0:
        return []
    cdef tuple gt = tuple(g)
    cdef Py_ssize_t k = len(gt)
    cdef long long* buf = _pack(lr, m, k)
    cdef long long* gv
    cdef long long* row = NULL
    cdef Py_ssize_t i, c
    cdef long long d
    cdef list cands = []
    try:
        gv = _pack([gt], 1, k)
    except BaseException:
        PyMem_Free(buf)
        raise
    row = <long long*> PyMem_Malloc(max(k, 1) * sizeof(long long))
    if row == NULL:
        PyMem_Free(buf)
        PyMem_Free(gv)
        raise MemoryError()
    try:
        for i in range(m):
            for c in range(k):
                d = buf[i * k + c] - gv[c]
                row[c] = d if d > 0 else 0
            cands.append(_unpack_row(row, k))
    finally:
        PyMem_Free(row)
        PyMem_Free(buf)
        PyMem_Free(gv)
    return minimalize(cands)


def divides_any(rows, target):
    """True iff some row divides target."""
    cdef list lr = list(rows)
    cdef Py_ssize_t m = len(lr)
    if m == 0:
        return False
    cdef tuple tt = tuple(target)
    cdef Py_ssize_t k = len(tt)
    cdef long long* buf = _pack(lr, m, k)
    cdef long long* tv
    cdef Py_ssize_t i
    cdef bint found = 0
    try:
        tv = _pack([tt], 1, k)
    except BaseException:
        PyMem_Free(buf)
        raise
    try:
        for i in range(m):
            if _divides_c(buf + i * k, tv, k):
                found = 1
                break
    finally:
        PyMem_Free(buf)
        PyMem_Free(tv)
    return bool(found)


def all_divisible(targets, rows):
    """True iff every target is divisible by some row."""
    cdef list lt = list(targets)
    cdef list lr = list(rows)
    cdef Py_ssize_t mt = len(lt), mr = len(lr)
    if mt == 0:
        return True
    if mr == 0:
        return False
    cdef Py_ssize_t k = len(<tuple> lt[0])
    cdef long long* bt = _pack(lt, mt, k)
    cdef long long* br
    cdef Py_ssize_t i, j
    cdef bint covered
    cdef bint ok = 1
    try:
        br = _pack(lr, mr, k)
    except BaseException:
        PyMem_Free(bt)
        raise
    try:
        for i in range(mt):
            covered = 0
            for j in range(mr):
                if _divides_c(br + j * k, bt + i * k, k):
                    covered = 1
                    break
            if not covered:
                ok = 0
                break
    finally:
        PyMem_Free(bt)
        PyMem_Free(br)
    return bool(ok)
