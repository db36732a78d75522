# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled CDCL solver; same algorithm and contract as ``_satcore_py``."""

from libc.stdlib cimport malloc, calloc, realloc, free


cdef struct IVec:
    int* data
    int size
    int cap


cdef inline int ivec_push(IVec* v, int x) nogil:
    cdef int* nd
    cdef int ncap
    if v.size == v.cap:
        ncap = v.cap * 2 if v.cap else 4
        nd = <int*>realloc(v.data, ncap * sizeof(int))
        if nd == NULL:
            return -1
        v.data = nd
        v.cap = ncap
    v.data[v.size] = x
    v.size += 1
    return 0


cdef inline void ivec_free(IVec* v) nogil:
    free(v.data)
    v.data = NULL
    v.size = 0
    v.cap = 0


cdef struct State:
    int nv
    signed char* assign
    int* level
    int* reason
    double* activity
    signed char* phase
    char* seen
    int* stamp
    int stamp_no
    double var_inc
    IVec arena
    IVec cstart
    IVec csize
    IVec clearnt
    IVec clbd
    IVec* watches
    IVec trail
    IVec trail_lim
    IVec tmp
    IVec out
    int qhead
    bint ok
    long long conflicts
    long long decisions
    bint oom


cdef inline int lit_value(State* s, int lit) nogil:
    cdef int a = s.assign[lit >> 1]
    if a < 0:
        return -1
    return a ^ (lit & 1)


cdef inline void enqueue(State* s, int lit, int reason) nogil:
    cdef int v = lit >> 1
    s.assign[v] = 1 - (lit & 1)
    s.level[v] = s.trail_lim.size
    s.reason[v] = reason
    if ivec_push(&s.trail, lit):
        s.oom = True


cdef int attach(State* s, int* lits, int n, int learnt, int lbd) nogil:
    cdef int cid = s.cstart.size
    cdef int k
    if ivec_push(&s.cstart, s.arena.size) or ivec_push(&s.csize, n) \
            or ivec_push(&s.clearnt, learnt) or ivec_push(&s.clbd, lbd):
        s.oom = True
        return -1
    for k in range(n):
        if ivec_push(&s.arena, lits[k]):
            s.oom = True
            return -1
    cdef int* c = s.arena.data + s.cstart.data[cid]
    if ivec_push(&s.watches[c[0]], cid) or ivec_push(&s.watches[c[1]], cid):
        s.oom = True
    return cid


cdef int propagate(State* s) nogil:
    cdef int p, fl, i, j, k, cid, first, lk, a, ak, n
    cdef int* c
    cdef IVec* ws
    while s.qhead < s.trail.size:
        p = s.trail.data[s.qhead]
        s.qhead += 1
        fl = p ^ 1
        ws = &s.watches[fl]
        i = 0
        j = 0
        while i < ws.size:
            cid = ws.data[i]
            i += 1
            c = s.arena.data + s.cstart.data[cid]
            n = s.csize.data[cid]
            if c[0] == fl:
                c[0] = c[1]
                c[1] = fl
            first = c[0]
            a = s.assign[first >> 1]
            if a >= 0 and (a ^ (first & 1)) == 1:
                ws.data[j] = cid
                j += 1
                continue
            for k in range(2, n):
                lk = c[k]
                ak = s.assign[lk >> 1]
                if ak < 0 or (ak ^ (lk & 1)) == 1:
                    c[1] = lk
                    c[k] = fl
                    if ivec_push(&s.watches[lk], cid):
                        s.oom = True
                    # the push may have moved another list, never ws itself
                    break
            else:
                ws.data[j] = cid
                j += 1
                if a >= 0:
                    while i < ws.size:
                        ws.data[j] = ws.data[i]
                        j += 1
                        i += 1
                    ws.size = j
                    s.qhead = s.trail.size
                    return cid
                enqueue(s, first, cid)
        ws.size = j
    return -1


cdef inline void bump(State* s, int v) nogil:
    cdef int i
    s.activity[v] += s.var_inc
    if s.activity[v] > 1e100:
        for i in range(1, s.nv + 1):
            s.activity[i] *= 1e-100
        s.var_inc *= 1e-100


cdef int analyze(State* s, int confl, int* bt_out, int* lbd_out) nogil:
    """Leaves the learnt clause in ``s.out``."""
    cdef int cur = s.trail_lim.size
    cdef int counter = 0
    cdef int p = -1
    cdef int idx = s.trail.size - 1
    cdef int k, q, v, n, start, r, best, lbd, l
    cdef int* c
    cdef bint keep
    s.tmp.size = 0
    ivec_push(&s.tmp, 0)
    while True:
        c = s.arena.data + s.cstart.data[confl]
        n = s.csize.data[confl]
        start = 0 if p == -1 else 1
        for k in range(start, n):
            q = c[k]
            v = q >> 1
            if not s.seen[v] and s.level[v] > 0:
                s.seen[v] = 1
                bump(s, v)
                if s.level[v] >= cur:
                    counter += 1
                else:
                    ivec_push(&s.tmp, q)
        while not s.seen[s.trail.data[idx] >> 1]:
            idx -= 1
        p = s.trail.data[idx]
        idx -= 1
        confl = s.reason[p >> 1]
        s.seen[p >> 1] = 0
        counter -= 1
        if counter == 0:
            break
    s.tmp.data[0] = p ^ 1

    s.out.size = 0
    ivec_push(&s.out, s.tmp.data[0])
    for k in range(1, s.tmp.size):
        q = s.tmp.data[k]
        r = s.reason[q >> 1]
        if r == -1:
            ivec_push(&s.out, q)
            continue
        c = s.arena.data + s.cstart.data[r]
        n = s.csize.data[r]
        keep = False
        for l in range(1, n):
            v = c[l] >> 1
            if not s.seen[v] and s.level[v] > 0:
                keep = True
                break
        if keep:
            ivec_push(&s.out, q)
    for k in range(s.tmp.size):
        s.seen[s.tmp.data[k] >> 1] = 0

    if s.out.size == 1:
        bt_out[0] = 0
    else:
        best = 1
        for k in range(2, s.out.size):
            if s.level[s.out.data[k] >> 1] > s.level[s.out.data[best] >> 1]:
                best = k
        q = s.out.data[1]
        s.out.data[1] = s.out.data[best]
        s.out.data[best] = q
        bt_out[0] = s.level[s.out.data[1] >> 1]
    s.stamp_no += 1
    lbd = 0
    for k in range(s.out.size):
        v = s.level[s.out.data[k] >> 1]
        if s.stamp[v] != s.stamp_no:
            s.stamp[v] = s.stamp_no
            lbd += 1
    lbd_out[0] = lbd
    return 0


cdef void cancel_until(State* s, int lvl) nogil:
    cdef int start, k, v
    if s.trail_lim.size <= lvl:
        return
    start = s.trail_lim.data[lvl]
    for k in range(s.trail.size - 1, start - 1, -1):
        v = s.trail.data[k] >> 1
        s.phase[v] = s.assign[v]
        s.assign[v] = -1
        s.reason[v] = -1
    s.trail.size = start
    s.trail_lim.size = lvl
    s.qhead = start


cdef int pick(State* s) nogil:
    cdef int best = 0
    cdef double best_act = -1.0
    cdef int v
    for v in range(1, s.nv + 1):
        if s.assign[v] < 0 and s.activity[v] > best_act:
            best = v
            best_act = s.activity[v]
    return best


cdef void rebuild(State* s, char* keep) nogil:
    """Rebuild clause store and watches at level 0."""
    cdef IVec arena = s.arena
    cdef IVec cstart = s.cstart
    cdef IVec csize = s.csize
    cdef IVec clearnt = s.clearnt
    cdef IVec clbd = s.clbd
    cdef int nc = cstart.size
    cdef int cid, k, l, val, n
    cdef int* c
    cdef bint sat
    s.arena = IVec(NULL, 0, 0)
    s.cstart = IVec(NULL, 0, 0)
    s.csize = IVec(NULL, 0, 0)
    s.clearnt = IVec(NULL, 0, 0)
    s.clbd = IVec(NULL, 0, 0)
    for k in range(2 * s.nv + 2):
        s.watches[k].size = 0
    for cid in range(nc):
        if clearnt.data[cid] and not keep[cid]:
            continue
        c = arena.data + cstart.data[cid]
        n = csize.data[cid]
        s.tmp.size = 0
        sat = False
        for k in range(n):
            l = c[k]
            val = lit_value(s, l)
            if val == 1:
                sat = True
                break
            if val == -1:
                ivec_push(&s.tmp, l)
        if sat:
            continue
        attach(s, s.tmp.data, s.tmp.size, clearnt.data[cid], clbd.data[cid])
    for k in range(1, s.nv + 1):
        s.reason[k] = -1
    ivec_free(&arena)
    ivec_free(&cstart)
    ivec_free(&csize)
    ivec_free(&clearnt)
    ivec_free(&clbd)


cdef int luby(int i) nogil:
    cdef int size = 1
    cdef int seq = 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) >> 1
        seq -= 1
        i = i % size
    return 1 << seq


cdef int search(State* s, long long budget) nogil:
    """1 sat, 0 unsat, -1 restart."""
    cdef long long conflicts = 0
    cdef int confl, bt, lbd, cid, v
    while True:
        if s.oom:
            return -2
        confl = propagate(s)
        if confl != -1:
            s.conflicts += 1
            conflicts += 1
            if s.trail_lim.size == 0:
                s.ok = False
                return 0
            analyze(s, confl, &bt, &lbd)
            cancel_until(s, bt)
            if s.out.size == 1:
                enqueue(s, s.out.data[0], -1)
            else:
                cid = attach(s, s.out.data, s.out.size, 1, lbd)
                enqueue(s, s.out.data[0], cid)
            s.var_inc /= 0.95
            continue
        if conflicts >= budget:
            return -1
        v = pick(s)
        if v == 0:
            return 1
        s.decisions += 1
        ivec_push(&s.trail_lim, s.trail.size)
        enqueue(s, 2 * v + (1 - s.phase[v]), -1)


cdef int solve_core(State* s) nogil:
    cdef long long max_learnts
    cdef int restart_no = 0
    cdef int res, cid, nlearnt, k, half, thr, count
    cdef int hist[64]
    cdef char* keep
    if not s.ok:
        return 0
    if propagate(s) != -1:
        s.ok = False
        return 0
    max_learnts = s.cstart.size // 3
    if max_learnts < 2000:
        max_learnts = 2000
    while True:
        res = search(s, 100 * <long long>luby(restart_no))
        restart_no += 1
        if res >= 0 or res == -2:
            return res
        cancel_until(s, 0)
        nlearnt = 0
        for cid in range(s.cstart.size):
            if s.clearnt.data[cid]:
                nlearnt += 1
        if nlearnt > max_learnts:
            # keep roughly the better half by LBD (bucketed), always LBD <= 2
            for k in range(64):
                hist[k] = 0
            for cid in range(s.cstart.size):
                if s.clearnt.data[cid]:
                    hist[s.clbd.data[cid] if s.clbd.data[cid] < 63 else 63] += 1
            half = nlearnt // 2
            count = 0
            thr = 2
            for k in range(64):
                count += hist[k]
                if count >= half:
                    thr = k if k > 2 else 2
                    break
            keep = <char*>calloc(s.cstart.size + 1, 1)
            if keep == NULL:
                return -2
            count = 0
            for cid in range(s.cstart.size):
                if s.clearnt.data[cid]:
                    if s.clbd.data[cid] < thr or s.clbd.data[cid] <= 2:
                        keep[cid] = 1
                    elif s.clbd.data[cid] == thr and count < half:
                        keep[cid] = 1
                        count += 1
            rebuild(s, keep)
            free(keep)
            max_learnts = max_learnts * 11 // 10


cdef class CdclSolver:
    cdef State s
    cdef public object num_vars

    def __cinit__(self, int num_vars, clauses=()):
        cdef int k
        self.num_vars = num_vars
        self.s.nv = num_vars
        self.s.assign = <signed char*>malloc(num_vars + 1)
        self.s.phase = <signed char*>calloc(num_vars + 1, 1)
        self.s.seen = <char*>calloc(num_vars + 1, 1)
        self.s.level = <int*>calloc(num_vars + 1, sizeof(int))
        self.s.reason = <int*>malloc((num_vars + 1) * sizeof(int))
        self.s.stamp = <int*>calloc(num_vars + 2, sizeof(int))
        self.s.activity = <double*>calloc(num_vars + 1, sizeof(double))
        self.s.watches = <IVec*>calloc(2 * num_vars + 2, sizeof(IVec))
        if (self.s.assign == NULL or self.s.phase == NULL or self.s.seen == NULL
                or self.s.level == NULL or self.s.reason == NULL or self.s.stamp == NULL
                or self.s.activity == NULL or self.s.watches == NULL):
            raise MemoryError()
        for k in range(num_vars + 1):
            self.s.assign[k] = -1
            self.s.reason[k] = -1
        self.s.var_inc = 1.0
        self.s.ok = True
        for c in clauses:
            self.add_clause(c)

    def __dealloc__(self):
        cdef int k
        if self.s.watches != NULL:
            for k in range(2 * self.s.nv + 2):
                ivec_free(&self.s.watches[k])
        free(self.s.watches)
        free(self.s.assign)
        free(self.s.phase)
        free(self.s.seen)
        free(self.s.level)
        free(self.s.reason)
        free(self.s.stamp)
        free(self.s.activity)
        ivec_free(&self.s.arena)
        ivec_free(&self.s.cstart)
        ivec_free(&self.s.csize)
        ivec_free(&self.s.clearnt)
        ivec_free(&self.s.clbd)
        ivec_free(&self.s.trail)
        ivec_free(&self.s.trail_lim)
        ivec_free(&self.s.tmp)
        ivec_free(&self.s.out)

    @property
    def ok(self):
        return self.s.ok

    @property
    def conflicts(self):
        return self.s.conflicts

    @property
    def decisions(self):
        return self.s.decisions

    def add_clause(self, dimacs):
        cdef int l, val
        if not self.s.ok:
            return
        lits = set()
        for x in dimacs:
            x = int(x)
            if x == 0 or abs(x) > self.s.nv:
                raise ValueError(f"literal {x} out of range 1..{self.s.nv}")
            lits.add(2 * abs(x) + (x < 0))
        if any(l ^ 1 in lits for l in lits):
            return
        c = []
        for l in sorted(lits):
            val = lit_value(&self.s, l)
            if val == 1:
                return
            if val == -1:
                c.append(l)
        if not c:
            self.s.ok = False
        elif len(c) == 1:
            enqueue(&self.s, c[0], -1)
            if propagate(&self.s) != -1:
                self.s.ok = False
        else:
            self.s.tmp.size = 0
            for l in c:
                ivec_push(&self.s.tmp, l)
            attach(&self.s, self.s.tmp.data, self.s.tmp.size, 0, 0)
        if self.s.oom:
            raise MemoryError()

    def solve(self):
        """Return True (model in ``self.model()``) or False."""
        cdef int res
        with nogil:
            res = solve_core(&self.s)
        if res == -2:
            raise MemoryError()
        return res == 1

    def model(self):
        cdef int v
        return [v if self.s.assign[v] == 1 else -v for v in range(1, self.s.nv + 1)]
