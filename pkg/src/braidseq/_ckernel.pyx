# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled iteration engine for the curve-action growth loop.

Same semantics as the pure engine, over C int64 with per-letter overflow
guards: values are renormalized by an exact right shift before any flip
could overflow, and the discarded power of two is accumulated in bits.
Renormalization keeps 45 bits of headroom, so the relative perturbation per
renorm is below 2**-45; growth estimates are unaffected at tolerance scale.
"""

from libc.math cimport log
from libc.stdlib cimport free, malloc

cdef double LOG2 = 0.6931471805599453
cdef long long GUARD = (<long long>1) << 57
DEF KEEP_BITS = 45


cdef class CEngine:
    cdef long long* vals
    cdef int n_edges
    cdef int n_letters
    cdef int* ops          # n_letters * 20
    cdef int* moves        # n_letters * 12
    cdef char* positive
    cdef long long tmp[6]
    cdef public long long scale_bits
    cdef public long long iterations
    cdef object _seen
    cdef public object periodic_at
    cdef public str name

    def __cinit__(self, vals, letters, programs):
        cdef int i, k
        self.name = "compiled"
        self.n_edges = len(vals)
        self.vals = <long long*>malloc(self.n_edges * sizeof(long long))
        for i in range(self.n_edges):
            v = vals[i]
            if v < 0 or v.bit_length() > 50:
                raise OverflowError("seed coordinates too large for the "
                                    "compiled kernel; use the pure engine")
            self.vals[i] = v
        seq = [programs[x] for x in reversed(letters)]
        self.n_letters = len(seq)
        self.ops = <int*>malloc(max(1, self.n_letters) * 20 * sizeof(int))
        self.moves = <int*>malloc(max(1, self.n_letters) * 12 * sizeof(int))
        self.positive = <char*>malloc(max(1, self.n_letters) * sizeof(char))
        for k, x in enumerate(reversed(letters)):
            ops, moves = programs[x]
            self.positive[k] = 1 if x > 0 else 0
            for i in range(4):
                for j in range(5):
                    self.ops[k * 20 + i * 5 + j] = ops[i][j]
            for i in range(6):
                self.moves[k * 12 + i * 2] = moves[i][0]
                self.moves[k * 12 + i * 2 + 1] = moves[i][1]
        self.scale_bits = 0
        self.iterations = 0
        self.periodic_at = None
        self._seen = {self._key(): 0}

    def __dealloc__(self):
        if self.vals != NULL:
            free(self.vals)
        if self.ops != NULL:
            free(self.ops)
        if self.moves != NULL:
            free(self.moves)
        if self.positive != NULL:
            free(self.positive)

    def _key(self):
        cdef int i
        return tuple([self.vals[i] for i in range(self.n_edges)])

    cdef long long _renorm(self) except -1:
        cdef long long mx = 0
        cdef int i, shift, bits
        for i in range(self.n_edges):
            if self.vals[i] > mx:
                mx = self.vals[i]
        if mx < GUARD:
            return 0
        bits = 0
        while mx >> bits:
            bits += 1
        shift = bits - KEEP_BITS
        for i in range(self.n_edges):
            self.vals[i] = self.vals[i] >> shift
        self.scale_bits += shift
        self._seen = None
        return shift

    def lognorm(self):
        cdef double s = 0
        cdef int i
        for i in range(self.n_edges):
            s += <double>self.vals[i]
        if s <= 0:
            return float("-inf")
        return log(s) + self.scale_bits * LOG2

    def advance(self, int count):
        cdef int it, k, i, e, a, b, c, d
        cdef long long x, y, cand
        cdef long long* vals = self.vals
        cdef int* ops
        cdef int* mv
        out = []
        for it in range(count):
            for k in range(self.n_letters):
                cand = 0
                ops = self.ops + k * 20
                mv = self.moves + k * 12
                if self.positive[k]:
                    for i in range(4):
                        e = ops[i * 5]
                        x = vals[ops[i * 5 + 2]] + vals[ops[i * 5 + 4]]
                        y = vals[ops[i * 5 + 1]] + vals[ops[i * 5 + 3]]
                        vals[e] = (x if x > y else y) - vals[e]
                        if vals[e] > cand:
                            cand = vals[e]
                    for i in range(6):
                        self.tmp[i] = vals[mv[i * 2 + 1]]
                    for i in range(6):
                        vals[mv[i * 2]] = self.tmp[i]
                else:
                    for i in range(6):
                        self.tmp[i] = vals[mv[i * 2 + 1]]
                    for i in range(6):
                        vals[mv[i * 2]] = self.tmp[i]
                    for i in range(4):
                        e = ops[i * 5]
                        x = vals[ops[i * 5 + 2]] + vals[ops[i * 5 + 4]]
                        y = vals[ops[i * 5 + 1]] + vals[ops[i * 5 + 3]]
                        vals[e] = (x if x > y else y) - vals[e]
                        if vals[e] > cand:
                            cand = vals[e]
                if cand >= GUARD:
                    self._renorm()
            self.iterations += 1
            out.append(self.lognorm())
            if self._seen is not None:
                key = self._key()
                if key in self._seen:
                    self.periodic_at = self.iterations
                    self._seen = None
                else:
                    self._seen[key] = self.iterations
        return out
