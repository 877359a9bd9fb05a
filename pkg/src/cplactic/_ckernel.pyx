# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled crystal kernel; mirrors ``_pykernel`` exactly."""

from libc.stdlib cimport malloc, free


cdef inline int _sign(long x, long n, long i) nogil:
    if i == n:
        if x == n:
            return 1
        if x == -n:
            return -1
        return 0
    if x == i or x == -(i + 1):
        return 1
    if x == i + 1 or x == -i:
        return -1
    return 0


cdef int _scan(long* w, Py_ssize_t length, long n, long i,
               Py_ssize_t* minus, Py_ssize_t* nminus,
               Py_ssize_t* plus, Py_ssize_t* nplus) nogil:
    cdef Py_ssize_t pos
    cdef int s
    nminus[0] = 0
    nplus[0] = 0
    for pos in range(length):
        s = _sign(w[pos], n, i)
        if s > 0:
            plus[nplus[0]] = pos
            nplus[0] += 1
        elif s < 0:
            if nplus[0] > 0:
                nplus[0] -= 1
            else:
                minus[nminus[0]] = pos
                nminus[0] += 1
    return 0


cdef class _Buf:
    cdef long* w
    cdef Py_ssize_t* minus
    cdef Py_ssize_t* plus
    cdef Py_ssize_t length

    def __cinit__(self, letters):
        cdef Py_ssize_t k
        self.length = len(letters)
        cdef Py_ssize_t size = self.length if self.length > 0 else 1
        self.w = <long*> malloc(size * sizeof(long))
        self.minus = <Py_ssize_t*> malloc(size * sizeof(Py_ssize_t))
        self.plus = <Py_ssize_t*> malloc(size * sizeof(Py_ssize_t))
        if self.w == NULL or self.minus == NULL or self.plus == NULL:
            raise MemoryError()
        for k in range(self.length):
            self.w[k] = letters[k]

    def __dealloc__(self):
        free(self.w)
        free(self.minus)
        free(self.plus)

    cdef tuple as_tuple(self):
        cdef Py_ssize_t k
        return tuple([self.w[k] for k in range(self.length)])


cdef inline long _lower_letter(long x, long n, long i) nogil:
    if i == n:
        return -n
    return i + 1 if x == i else -i


cdef inline long _raise_letter(long x, long n, long i) nogil:
    if i == n:
        return n
    return i if x == i + 1 else -(i + 1)


def reduced_signature(letters, long n, long i):
    cdef _Buf b = _Buf(letters)
    cdef Py_ssize_t nm, np_, k
    _scan(b.w, b.length, n, i, b.minus, &nm, b.plus, &np_)
    return [b.minus[k] for k in range(nm)], [b.plus[k] for k in range(np_)]


def eps_phi(letters, long n, long i):
    cdef _Buf b = _Buf(letters)
    cdef Py_ssize_t nm, np_
    _scan(b.w, b.length, n, i, b.minus, &nm, b.plus, &np_)
    return nm, np_


def apply_f(letters, long n, long i):
    cdef _Buf b = _Buf(letters)
    cdef Py_ssize_t nm, np_, pos
    _scan(b.w, b.length, n, i, b.minus, &nm, b.plus, &np_)
    if np_ == 0:
        return None
    pos = b.plus[0]
    b.w[pos] = _lower_letter(b.w[pos], n, i)
    return b.as_tuple()


def apply_e(letters, long n, long i):
    cdef _Buf b = _Buf(letters)
    cdef Py_ssize_t nm, np_, pos
    _scan(b.w, b.length, n, i, b.minus, &nm, b.plus, &np_)
    if nm == 0:
        return None
    pos = b.minus[nm - 1]
    b.w[pos] = _raise_letter(b.w[pos], n, i)
    return b.as_tuple()


def raise_to_highest(letters, long n):
    cdef _Buf b = _Buf(letters)
    cdef Py_ssize_t nm, np_, pos
    cdef long i
    cdef bint moved = True
    path = []
    while moved:
        moved = False
        for i in range(1, n + 1):
            _scan(b.w, b.length, n, i, b.minus, &nm, b.plus, &np_)
            if nm > 0:
                pos = b.minus[nm - 1]
                b.w[pos] = _raise_letter(b.w[pos], n, i)
                path.append(i)
                moved = True
                break
    return b.as_tuple(), tuple(path)


def lower_along(letters, long n, colors):
    cdef _Buf b = _Buf(letters)
    cdef Py_ssize_t nm, np_, pos
    cdef long c
    for c in colors:
        _scan(b.w, b.length, n, c, b.minus, &nm, b.plus, &np_)
        if np_ == 0:
            return None
        pos = b.plus[0]
        b.w[pos] = _lower_letter(b.w[pos], n, c)
    return b.as_tuple()
