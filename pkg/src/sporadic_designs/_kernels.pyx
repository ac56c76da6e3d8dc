# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; mirrors ``_kernels_py`` exactly."""
from libc.stdlib cimport malloc, free


cdef int *_to_c(object p, Py_ssize_t n) except NULL:
    cdef int *out = <int *> malloc(n * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = p[i]
    return out


def compose(tuple p, tuple q):
    cdef Py_ssize_t n = len(p), i
    cdef list out = [None] * n
    for i in range(n):
        out[i] = q[<Py_ssize_t> p[i]]
    return tuple(out)


def invert(tuple p):
    cdef Py_ssize_t n = len(p), i
    cdef list out = [None] * n
    for i in range(n):
        out[<Py_ssize_t> p[i]] = i
    return tuple(out)


def orbit(gens, Py_ssize_t start):
    cdef Py_ssize_t ngens = len(gens)
    if ngens == 0:
        return [start]
    cdef Py_ssize_t n = len(gens[0])
    cdef int *g = <int *> malloc(ngens * n * sizeof(int))
    cdef char *seen = <char *> malloc(n)
    cdef int *queue = <int *> malloc(n * sizeof(int))
    cdef Py_ssize_t s, i, head = 0, tail = 0
    cdef int x, y
    try:
        for s in range(ngens):
            row = gens[s]
            for i in range(n):
                g[s * n + i] = row[i]
        for i in range(n):
            seen[i] = 0
        seen[start] = 1
        queue[tail] = start
        tail += 1
        while head < tail:
            x = queue[head]
            head += 1
            for s in range(ngens):
                y = g[s * n + x]
                if not seen[y]:
                    seen[y] = 1
                    queue[tail] = y
                    tail += 1
        return [queue[i] for i in range(tail)]
    finally:
        free(g)
        free(seen)
        free(queue)


def set_orbit(gens, tuple seed, Py_ssize_t limit):
    cdef Py_ssize_t ngens = len(gens)
    cdef Py_ssize_t n = len(gens[0]) if ngens else 0
    cdef Py_ssize_t k = len(seed)
    cdef int *g = <int *> malloc((ngens * n + 1) * sizeof(int))
    cdef int *buf = <int *> malloc((k + 1) * sizeof(int))
    cdef Py_ssize_t s, i, j, pos
    cdef int t
    cdef dict index = {seed: 0}
    cdef list orb = [seed]
    cdef list parents = [(-1, -1)]
    cdef tuple cur
    try:
        for s in range(ngens):
            row = gens[s]
            for i in range(n):
                g[s * n + i] = row[i]
        pos = 0
        while pos < len(orb):
            cur = <tuple> orb[pos]
            for s in range(ngens):
                # insertion sort of the (small) image set
                for i in range(k):
                    t = g[s * n + <int> cur[i]]
                    j = i
                    while j > 0 and buf[j - 1] > t:
                        buf[j] = buf[j - 1]
                        j -= 1
                    buf[j] = t
                img = tuple([buf[i] for i in range(k)])
                if img not in index:
                    if len(orb) >= limit:
                        return None
                    index[img] = len(orb)
                    orb.append(img)
                    parents.append((pos, s))
            pos += 1
        return orb, parents
    finally:
        free(g)
        free(buf)


def pair_coverage(Py_ssize_t v, blocks):
    cdef Py_ssize_t npairs = v * (v - 1) // 2
    cdef long *counts = <long *> malloc((npairs + 1) * sizeof(long))
    cdef int *buf
    cdef Py_ssize_t a, b, m, i, base
    try:
        for i in range(npairs):
            counts[i] = 0
        for blk in blocks:
            m = len(blk)
            buf = _to_c(blk, m)
            try:
                for a in range(m):
                    i = buf[a]
                    base = i * (2 * v - i - 1) // 2 - i - 1
                    for b in range(a + 1, m):
                        counts[base + buf[b]] += 1
            finally:
                free(buf)
        return [counts[i] for i in range(npairs)]
    finally:
        free(counts)


def pair_orbit_size(point_gens, block_gens, Py_ssize_t point, Py_ssize_t block):
    cdef Py_ssize_t ngens = len(point_gens)
    cdef Py_ssize_t nv = len(point_gens[0])
    cdef Py_ssize_t nb = len(block_gens[0])
    cdef Py_ssize_t total = nv * nb
    cdef int *pg = <int *> malloc(ngens * nv * sizeof(int))
    cdef int *bg = <int *> malloc(ngens * nb * sizeof(int))
    cdef char *seen = <char *> malloc(total)
    cdef long *queue = <long *> malloc(total * sizeof(long))
    cdef Py_ssize_t s, i, head = 0, tail = 0
    cdef long state, nxt, p, bl
    try:
        for s in range(ngens):
            row = point_gens[s]
            for i in range(nv):
                pg[s * nv + i] = row[i]
            row = block_gens[s]
            for i in range(nb):
                bg[s * nb + i] = row[i]
        for i in range(total):
            seen[i] = 0
        state = point * nb + block
        seen[state] = 1
        queue[tail] = state
        tail += 1
        while head < tail:
            state = queue[head]
            head += 1
            p = state // nb
            bl = state % nb
            for s in range(ngens):
                nxt = pg[s * nv + p] * nb + bg[s * nb + bl]
                if not seen[nxt]:
                    seen[nxt] = 1
                    queue[tail] = nxt
                    tail += 1
        return tail
    finally:
        free(pg)
        free(bg)
        free(seen)
        free(queue)
