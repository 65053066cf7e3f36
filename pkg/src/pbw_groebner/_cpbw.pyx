# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled PBW normal-ordering kernel; same interface as ``_pbw.PBWKernel``."""


cdef class PBWKernel:
    cdef public int nvars
    cdef public object table
    cdef dict _memo
    cdef list _rows

    def __init__(self, int nvars, table):
        self.nvars = nvars
        self.table = table
        self._memo = {}
        # table rows as lists of lists for fast indexing
        self._rows = [[list(entry) for entry in row] for row in table]

    def clear(self):
        self._memo.clear()

    cpdef dict mono_var(self, tuple mono, int k):
        cdef int j = self.nvars - 1
        cdef int l
        cdef object c, c2, t, t2, v
        cdef list m
        cdef dict out, inner
        while j > k and mono[j] == 0:
            j -= 1
        if j <= k:
            m = list(mono)
            m[k] = m[k] + 1
            return {tuple(m): 1}
        key = (mono, k)
        hit = self._memo.get(key)
        if hit is not None:
            return <dict>hit
        m = list(mono)
        m[j] = m[j] - 1
        rest = tuple(m)
        out = {}
        for t, c in self.mono_var(rest, k).items():
            inner = self.mono_var(t, j)
            for t2, c2 in inner.items():
                v = out.get(t2)
                out[t2] = c * c2 if v is None else v + c * c2
        for entry in self._rows[j][k]:
            l = entry[0]
            c = entry[1]
            for t, c2 in self.mono_var(rest, l).items():
                v = out.get(t)
                out[t] = c * c2 if v is None else v + c * c2
        out = {t: c for t, c in out.items() if c}
        self._memo[key] = out
        return out

    cpdef dict mono_mono(self, tuple a, tuple b):
        cdef dict cur = {a: 1}
        cdef dict nxt
        cdef int k, r, e
        cdef object t, c, t2, c2, v
        for k in range(self.nvars):
            e = b[k]
            for r in range(e):
                nxt = {}
                for t, c in cur.items():
                    for t2, c2 in self.mono_var(t, k).items():
                        v = nxt.get(t2)
                        nxt[t2] = c * c2 if v is None else v + c * c2
                cur = {t: c for t, c in nxt.items() if c}
        return cur

    cpdef dict product(self, dict xterms, dict yterms):
        cdef dict out = {}
        cdef object a, b, ca, cb, c, t, ct, v
        for a, ca in xterms.items():
            for b, cb in yterms.items():
                c = ca * cb
                for t, ct in self.mono_mono(a, b).items():
                    v = out.get(t)
                    out[t] = c * ct if v is None else v + c * ct
        return {t: c for t, c in out.items() if c}
