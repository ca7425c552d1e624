# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: initializedcheck=False
# cython: cdivision=True
"""Compiled capture-time kernel; bit-identical twin of the pure-Python one.

Algorithm notes live in the pure module. This version packs vertex sets into
64-bit words (callers must keep n <= 62), ranks cop multisets through a
positional n^k table, builds the successor relation as CSR in two stamped
passes, and keeps the level queues as intrusive linked lists. Input CSR rows
must be sorted ascending, as the solver produces them.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

from array import array

from .errors import BudgetError


cdef void *_alloc(size_t nbytes) except NULL:
    cdef void *p = PyMem_Malloc(nbytes if nbytes > 0 else 1)
    if p == NULL:
        raise MemoryError()
    return p


def capture_times(int n, int k, off_obj, nbr_obj, long long max_transitions):
    cdef const int[:] off = off_obj
    cdef const int[:] nbr = nbr_obj

    cdef int *coff = NULL
    cdef int *cnbr = NULL
    cdef int *ms = NULL
    cdef int *cur = NULL
    cdef long long *pw = NULL
    cdef int *rnk = NULL
    cdef unsigned long long *mem = NULL
    cdef int *stamp = NULL
    cdef long long *soff = NULL
    cdef long long *sfill = NULL
    cdef int *sdat = NULL
    cdef int *lo = NULL
    cdef int *hi = NULL
    cdef int *pos = NULL
    cdef int *tmp = NULL
    cdef int *tval = NULL
    cdef int *rval = NULL
    cdef int *cnt = NULL
    cdef int *thead = NULL
    cdef int *rhead = NULL
    cdef int *tnext = NULL
    cdef int *rnext = NULL

    cdef long long m_count, nk, raw, total_raw, nn, idx64, base
    cdef int i, j, v, r, rp, w, c, t, lvl, maxlvl, s, ri, pass_no, left, pos_c
    cdef int total_c
    cdef unsigned long long mbits
    cdef int[:] out_mv

    total_c = off[n] + n
    coff = <int *>_alloc((n + 1) * sizeof(int))
    cnbr = <int *>_alloc(total_c * sizeof(int))
    try:
        # ---- closed adjacency: sorted open row with v merged in
        pos_c = 0
        coff[0] = 0
        for v in range(n):
            w = 0  # "self inserted" flag
            for i in range(off[v], off[v + 1]):
                if not w and nbr[i] > v:
                    cnbr[pos_c] = v
                    pos_c += 1
                    w = 1
                cnbr[pos_c] = nbr[i]
                pos_c += 1
            if not w:
                cnbr[pos_c] = v
                pos_c += 1
            coff[v + 1] = pos_c

        # ---- cop multisets in combinations_with_replacement order
        m_count = 1
        for i in range(1, k + 1):
            m_count = m_count * (n - 1 + i) // i
        ms = <int *>_alloc(m_count * k * sizeof(int))
        cur = <int *>_alloc(k * sizeof(int))
        for j in range(k):
            cur[j] = 0
        idx64 = 0
        while True:
            for j in range(k):
                ms[idx64 * k + j] = cur[j]
            idx64 += 1
            j = k - 1
            while j >= 0 and cur[j] == n - 1:
                j -= 1
            if j < 0:
                break
            cur[j] += 1
            for t in range(j + 1, k):
                cur[t] = cur[j]

        # ---- positional rank table over n^k keys, plus member bitmasks
        pw = <long long *>_alloc(k * sizeof(long long))
        nk = 1
        for j in range(k - 1, -1, -1):
            pw[j] = nk
            nk *= n
        rnk = <int *>_alloc(nk * sizeof(int))
        mem = <unsigned long long *>_alloc(m_count * sizeof(unsigned long long))
        for idx64 in range(m_count):
            base = 0
            mbits = 0
            for j in range(k):
                c = ms[idx64 * k + j]
                base += c * pw[j]
                mbits |= (<unsigned long long>1) << c
            rnk[base] = <int>idx64
            mem[idx64] = mbits

        # ---- successor CSR in two stamped passes (count, then fill)
        stamp = <int *>_alloc(m_count * sizeof(int))
        soff = <long long *>_alloc((m_count + 1) * sizeof(long long))
        sfill = <long long *>_alloc(m_count * sizeof(long long))
        lo = <int *>_alloc(k * sizeof(int))
        hi = <int *>_alloc(k * sizeof(int))
        pos = <int *>_alloc(k * sizeof(int))
        tmp = <int *>_alloc(k * sizeof(int))
        for idx64 in range(m_count):
            stamp[idx64] = -1
        for pass_no in range(2):
            total_raw = 0
            for idx64 in range(m_count):
                sfill[idx64] = 0
            for idx64 in range(m_count):
                raw = 1
                for j in range(k):
                    c = ms[idx64 * k + j]
                    lo[j] = coff[c]
                    hi[j] = coff[c + 1]
                    pos[j] = lo[j]
                    raw *= hi[j] - lo[j]
                total_raw += raw
                if pass_no == 0 and total_raw > max_transitions:
                    raise BudgetError(
                        f"cop transition count exceeds budget "
                        f"({total_raw} > {max_transitions})"
                    )
                while True:
                    for j in range(k):
                        # insertion sort the candidate tuple into tmp
                        c = cnbr[pos[j]]
                        t = j
                        while t > 0 and tmp[t - 1] > c:
                            tmp[t] = tmp[t - 1]
                            t -= 1
                        tmp[t] = c
                    base = 0
                    for j in range(k):
                        base += tmp[j] * pw[j]
                    ri = rnk[base]
                    if stamp[ri] != <int>(2 * idx64 + pass_no):
                        stamp[ri] = <int>(2 * idx64 + pass_no)
                        if pass_no == 1:
                            sdat[soff[idx64] + sfill[idx64]] = ri
                        sfill[idx64] += 1
                    j = k - 1
                    while j >= 0:
                        pos[j] += 1
                        if pos[j] < hi[j]:
                            break
                        pos[j] = lo[j]
                        j -= 1
                    if j < 0:
                        break
            if pass_no == 0:
                soff[0] = 0
                for idx64 in range(m_count):
                    soff[idx64 + 1] = soff[idx64] + sfill[idx64]
                sdat = <int *>_alloc(soff[m_count] * sizeof(int))

        # ---- value arrays, counters, seeds
        nn = m_count * n
        tval = <int *>_alloc(nn * sizeof(int))
        rval = <int *>_alloc(nn * sizeof(int))
        cnt = <int *>_alloc(nn * sizeof(int))
        thead = <int *>_alloc((nn + 2) * sizeof(int))
        rhead = <int *>_alloc((nn + 2) * sizeof(int))
        tnext = <int *>_alloc(nn * sizeof(int))
        rnext = <int *>_alloc(nn * sizeof(int))
        for idx64 in range(nn):
            tval[idx64] = -1
            rval[idx64] = -1
            cnt[idx64] = 0
        for idx64 in range(nn + 2):
            thead[idx64] = -1
            rhead[idx64] = -1
        maxlvl = 0
        for idx64 in range(m_count):
            mbits = mem[idx64]
            base = idx64 * n
            for r in range(n):
                if (mbits >> r) & 1:
                    tval[base + r] = 0
                    rval[base + r] = 0
                    rnext[base + r] = rhead[0]
                    rhead[0] = <int>(base + r)
                else:
                    left = 0
                    for i in range(coff[r], coff[r + 1]):
                        if not (mbits >> cnbr[i]) & 1:
                            left += 1
                    cnt[base + r] = left

        # ---- retrograde level sweep
        lvl = 0
        while lvl <= maxlvl:
            s = thead[lvl]
            while s != -1:
                i = s // n
                r = s - i * n
                mbits = mem[i]
                base = <long long>i * n
                for t in range(coff[r], coff[r + 1]):
                    rp = cnbr[t]
                    if (mbits >> rp) & 1:
                        continue
                    cnt[base + rp] -= 1
                    if cnt[base + rp] == 0:
                        rval[base + rp] = lvl
                        rnext[base + rp] = rhead[lvl]
                        rhead[lvl] = <int>(base + rp)
                s = tnext[s]
            s = rhead[lvl]
            while s != -1:
                i = s // n
                r = s - i * n
                for idx64 in range(soff[i], soff[i + 1]):
                    j = sdat[idx64]
                    base = <long long>j * n + r
                    if tval[base] == -1:
                        tval[base] = lvl + 1
                        tnext[base] = thead[lvl + 1]
                        thead[lvl + 1] = <int>base
                        if lvl + 1 > maxlvl:
                            maxlvl = lvl + 1
                s = rnext[s]
            lvl += 1

        out = array('i', bytes(sizeof(int) * nn))
        out_mv = out
        for idx64 in range(nn):
            out_mv[idx64] = tval[idx64]
        return out
    finally:
        PyMem_Free(coff)
        PyMem_Free(cnbr)
        PyMem_Free(ms)
        PyMem_Free(cur)
        PyMem_Free(pw)
        PyMem_Free(rnk)
        PyMem_Free(mem)
        PyMem_Free(stamp)
        PyMem_Free(soff)
        PyMem_Free(sfill)
        PyMem_Free(sdat)
        PyMem_Free(lo)
        PyMem_Free(hi)
        PyMem_Free(pos)
        PyMem_Free(tmp)
        PyMem_Free(tval)
        PyMem_Free(rval)
        PyMem_Free(cnt)
        PyMem_Free(thead)
        PyMem_Free(rhead)
        PyMem_Free(tnext)
        PyMem_Free(rnext)
