# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled involution-orbit kernels.

Same contracts as _kernels_py (orbit ids in first-visit order, alternating
face coloring, three-generator bipartiteness); kept in lockstep by the
parity tests in tests/test_kernels.py.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef int* _alloc(Py_ssize_t n) except NULL:
    cdef int* buf = <int*> PyMem_Malloc(n * sizeof(int) if n else sizeof(int))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _fill(object p, int* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = p[i]


def orbit_ids2(p, q):
    """Orbit id per index under the group generated by p and q."""
    cdef Py_ssize_t n = len(p)
    cdef int* cp = _alloc(n)
    cdef int* cq = _alloc(n)
    cdef int* ids = _alloc(n)
    cdef int* stack = _alloc(n)
    cdef Py_ssize_t i, top
    cdef int count = 0, x, y
    try:
        _fill(p, cp, n)
        _fill(q, cq, n)
        for i in range(n):
            ids[i] = -1
        for i in range(n):
            if ids[i] >= 0:
                continue
            ids[i] = count
            stack[0] = <int> i
            top = 1
            while top:
                top -= 1
                x = stack[top]
                y = cp[x]
                if ids[y] < 0:
                    ids[y] = count
                    stack[top] = y
                    top += 1
                y = cq[x]
                if ids[y] < 0:
                    ids[y] = count
                    stack[top] = y
                    top += 1
            count += 1
        return [ids[i] for i in range(n)], count
    finally:
        PyMem_Free(cp)
        PyMem_Free(cq)
        PyMem_Free(ids)
        PyMem_Free(stack)


def orbit_ids3(p, q, r):
    """Orbit id per index under the group generated by p, q and r."""
    cdef Py_ssize_t n = len(p)
    cdef int* cp = _alloc(n)
    cdef int* cq = _alloc(n)
    cdef int* cr = _alloc(n)
    cdef int* ids = _alloc(n)
    cdef int* stack = _alloc(n)
    cdef Py_ssize_t i, top
    cdef int count = 0, x, y
    try:
        _fill(p, cp, n)
        _fill(q, cq, n)
        _fill(r, cr, n)
        for i in range(n):
            ids[i] = -1
        for i in range(n):
            if ids[i] >= 0:
                continue
            ids[i] = count
            stack[0] = <int> i
            top = 1
            while top:
                top -= 1
                x = stack[top]
                y = cp[x]
                if ids[y] < 0:
                    ids[y] = count
                    stack[top] = y
                    top += 1
                y = cq[x]
                if ids[y] < 0:
                    ids[y] = count
                    stack[top] = y
                    top += 1
                y = cr[x]
                if ids[y] < 0:
                    ids[y] = count
                    stack[top] = y
                    top += 1
            count += 1
        return [ids[i] for i in range(n)], count
    finally:
        PyMem_Free(cp)
        PyMem_Free(cq)
        PyMem_Free(cr)
        PyMem_Free(ids)
        PyMem_Free(stack)


def face_data(beta, omega):
    """Face id and boundary 2-coloring per index (alternating walk)."""
    cdef Py_ssize_t n = len(beta)
    cdef int* cb = _alloc(n)
    cdef int* cw = _alloc(n)
    cdef int* ids = _alloc(n)
    cdef int* cols = _alloc(n)
    cdef Py_ssize_t i
    cdef int count = 0, x, c
    cdef bint use_beta
    try:
        _fill(beta, cb, n)
        _fill(omega, cw, n)
        for i in range(n):
            ids[i] = -1
            cols[i] = 0
        for i in range(n):
            if ids[i] >= 0:
                continue
            x = <int> i
            c = 0
            use_beta = True
            while ids[x] < 0:
                ids[x] = count
                cols[x] = c
                x = cb[x] if use_beta else cw[x]
                use_beta = not use_beta
                c ^= 1
            count += 1
        return ([ids[i] for i in range(n)], [cols[i] for i in range(n)],
                count)
    finally:
        PyMem_Free(cb)
        PyMem_Free(cw)
        PyMem_Free(ids)
        PyMem_Free(cols)


def bipartite3(p, q, r):
    """True iff the multigraph with adjacencies p, q, r is bipartite."""
    cdef Py_ssize_t n = len(p)
    cdef int* cp = _alloc(n)
    cdef int* cq = _alloc(n)
    cdef int* cr = _alloc(n)
    cdef int* col = _alloc(n)
    cdef int* stack = _alloc(n)
    cdef Py_ssize_t i, top
    cdef int x, y, cx, k
    cdef bint ok = True
    try:
        _fill(p, cp, n)
        _fill(q, cq, n)
        _fill(r, cr, n)
        for i in range(n):
            col[i] = -1
        for i in range(n):
            if not ok:
                break
            if col[i] >= 0:
                continue
            col[i] = 0
            stack[0] = <int> i
            top = 1
            while top and ok:
                top -= 1
                x = stack[top]
                cx = col[x] ^ 1
                for k in range(3):
                    y = cp[x] if k == 0 else (cq[x] if k == 1 else cr[x])
                    if col[y] < 0:
                        col[y] = cx
                        stack[top] = y
                        top += 1
                    elif col[y] != cx:
                        ok = False
                        break
        return bool(ok)
    finally:
        PyMem_Free(cp)
        PyMem_Free(cq)
        PyMem_Free(cr)
        PyMem_Free(col)
        PyMem_Free(stack)
