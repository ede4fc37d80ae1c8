# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled search kernel for bounded admissible-vector enumeration.

Must agree with nsk._enumcore_py.enumerate_profile on every input; the
test suite checks the two against each other.  All coordinate values stay
within the documented search envelope (cap <= 2), so C int arithmetic
cannot overflow.
"""

from libc.stdlib cimport calloc, free

KERNEL = "cython"


cdef bint _ok(int depth, int* x, int* eq, int* offsets) noexcept nogil:
    cdef int e, i
    for e in range(offsets[depth], offsets[depth + 1]):
        i = 4 * e
        if x[eq[i]] + x[eq[i + 1]] != x[eq[i + 2]] + x[eq[i + 3]]:
            return False
    return True


cdef void _assign(
    int depth,
    int t,
    int cap,
    int* x,
    int* eq,
    int* offsets,
    int* quad_types,
    int* quad_mins,
    list out,
):
    cdef int base = 7 * depth
    cdef int qt, qmin, t0, t1, t2, t3, q, i
    if depth == t:
        out.append(tuple([x[i] for i in range(7 * t)]))
        return
    qt = quad_types[depth]
    qmin = quad_mins[depth]
    for t0 in range(cap + 1):
        x[base] = t0
        for t1 in range(cap + 1):
            x[base + 1] = t1
            for t2 in range(cap + 1):
                x[base + 2] = t2
                for t3 in range(cap + 1):
                    x[base + 3] = t3
                    if qt < 0:
                        if _ok(depth, x, eq, offsets):
                            _assign(depth + 1, t, cap, x, eq, offsets,
                                    quad_types, quad_mins, out)
                    else:
                        for q in range(qmin, cap + 1):
                            x[base + 4 + qt] = q
                            if _ok(depth, x, eq, offsets):
                                _assign(depth + 1, t, cap, x, eq, offsets,
                                        quad_types, quad_mins, out)
    if qt >= 0:
        x[base + 4 + qt] = 0
    x[base] = x[base + 1] = x[base + 2] = x[base + 3] = 0


def enumerate_profile(int t, int cap, equations, offsets, quad_types, quad_mins):
    cdef int n_eq = len(equations)
    cdef int* eq = <int*> calloc(max(n_eq, 1), sizeof(int))
    cdef int* offs = <int*> calloc(t + 1, sizeof(int))
    cdef int* qtypes = <int*> calloc(t, sizeof(int))
    cdef int* qmins = <int*> calloc(t, sizeof(int))
    cdef int* x = <int*> calloc(7 * t, sizeof(int))
    if not (eq and offs and qtypes and qmins and x):
        free(eq); free(offs); free(qtypes); free(qmins); free(x)
        raise MemoryError()
    cdef int i
    out = []
    try:
        for i in range(n_eq):
            eq[i] = equations[i]
        for i in range(t + 1):
            offs[i] = offsets[i]
        for i in range(t):
            qtypes[i] = quad_types[i]
            qmins[i] = quad_mins[i]
        _assign(0, t, cap, x, eq, offs, qtypes, qmins, out)
    finally:
        free(eq); free(offs); free(qtypes); free(qmins); free(x)
    return out
