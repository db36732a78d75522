"""Pure-Python CDCL solver, used when the compiled core is absent.

Two watched literals, first-UIP learning with local minimization, VSIDS
decisions, phase saving and Luby restarts.  Learnt clauses are pruned by
LBD at restarts, where the clause store is rebuilt at decision level 0.

Literal ``x`` (DIMACS, nonzero int) is stored as ``2*|x| + (x < 0)``.
"""

from __future__ import annotations


def _luby(i):
    """i-th element (0-based) of the Luby sequence 1 1 2 1 1 2 4 ..."""
    size, seq = 1, 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) >> 1
        seq -= 1
        i %= size
    return 1 << seq


class CdclSolver:
    def __init__(self, num_vars, clauses=()):
        n = num_vars
        self.num_vars = n
        self.assign = [-1] * (n + 1)
        self.level = [0] * (n + 1)
        self.reason = [-1] * (n + 1)
        self.activity = [0.0] * (n + 1)
        self.phase = [0] * (n + 1)
        self.seen = [False] * (n + 1)
        self.var_inc = 1.0
        self.clauses = []
        self.learnt = []
        self.lbd = []
        self.watches = [[] for _ in range(2 * n + 2)]
        self.trail = []
        self.trail_lim = []
        self.qhead = 0
        self.ok = True
        self.conflicts = 0
        self.decisions = 0
        for c in clauses:
            self.add_clause(c)

    # literal helpers -------------------------------------------------

    def _value(self, lit):
        a = self.assign[lit >> 1]
        return -1 if a < 0 else a ^ (lit & 1)

    def _enqueue(self, lit, reason):
        v = lit >> 1
        self.assign[v] = 1 - (lit & 1)
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    # clause store ----------------------------------------------------

    def add_clause(self, dimacs):
        if not self.ok:
            return
        lits = set()
        for x in dimacs:
            x = int(x)
            if x == 0 or abs(x) > self.num_vars:
                raise ValueError(f"literal {x} out of range 1..{self.num_vars}")
            lits.add(2 * abs(x) + (x < 0))
        if any(l ^ 1 in lits for l in lits):
            return
        c = []
        for l in sorted(lits):
            val = self._value(l)
            if val == 1:
                return
            if val == -1:
                c.append(l)
        if not c:
            self.ok = False
        elif len(c) == 1:
            self._enqueue(c[0], -1)
            if self._propagate() != -1:
                self.ok = False
        else:
            self._attach(c, learnt=False, lbd=0)

    def _attach(self, c, learnt, lbd):
        cid = len(self.clauses)
        self.clauses.append(c)
        self.learnt.append(learnt)
        self.lbd.append(lbd)
        self.watches[c[0]].append(cid)
        self.watches[c[1]].append(cid)
        return cid

    def _rebuild(self, keep_learnt):
        """Rebuild the store at level 0: drop satisfied clauses and false literals."""
        old = self.clauses
        olearnt = self.learnt
        olbd = self.lbd
        self.clauses, self.learnt, self.lbd = [], [], []
        self.watches = [[] for _ in range(2 * self.num_vars + 2)]
        for cid, c in enumerate(old):
            if olearnt[cid] and cid not in keep_learnt:
                continue
            reduced = []
            sat = False
            for l in c:
                val = self._value(l)
                if val == 1:
                    sat = True
                    break
                if val == -1:
                    reduced.append(l)
            if sat:
                continue
            # level-0 propagation is complete, so at least two literals remain
            self._attach(reduced, olearnt[cid], olbd[cid])
        for v in range(1, self.num_vars + 1):
            self.reason[v] = -1

    # search ----------------------------------------------------------

    def _propagate(self):
        trail = self.trail
        clauses = self.clauses
        watches = self.watches
        assign = self.assign
        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            fl = p ^ 1
            ws = watches[fl]
            keep = []
            watches[fl] = keep
            for idx in range(len(ws)):
                cid = ws[idx]
                c = clauses[cid]
                if c[0] == fl:
                    c[0], c[1] = c[1], fl
                first = c[0]
                a = assign[first >> 1]
                if a >= 0 and a ^ (first & 1) == 1:
                    keep.append(cid)
                    continue
                moved = False
                for k in range(2, len(c)):
                    lk = c[k]
                    ak = assign[lk >> 1]
                    if ak < 0 or ak ^ (lk & 1) == 1:
                        c[1] = lk
                        c[k] = fl
                        watches[lk].append(cid)
                        moved = True
                        break
                if moved:
                    continue
                keep.append(cid)
                if a >= 0:
                    keep.extend(ws[idx + 1 :])
                    self.qhead = len(trail)
                    return cid
                self._enqueue(first, cid)
        return -1

    def _bump(self, v):
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for i in range(1, self.num_vars + 1):
                self.activity[i] *= 1e-100
            self.var_inc *= 1e-100

    def _analyze(self, confl):
        seen = self.seen
        level = self.level
        cur = len(self.trail_lim)
        learnt = [0]
        counter = 0
        p = -1
        idx = len(self.trail) - 1
        while True:
            c = self.clauses[confl]
            for q in c if p == -1 else c[1:]:
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = True
                    self._bump(v)
                    if level[v] >= cur:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[self.trail[idx] >> 1]:
                idx -= 1
            p = self.trail[idx]
            idx -= 1
            confl = self.reason[p >> 1]
            seen[p >> 1] = False
            counter -= 1
            if counter == 0:
                break
        learnt[0] = p ^ 1

        # drop literals implied by the rest of the clause
        out = [learnt[0]]
        for q in learnt[1:]:
            r = self.reason[q >> 1]
            if r == -1:
                out.append(q)
                continue
            for l in self.clauses[r][1:]:
                v = l >> 1
                if not seen[v] and level[v] > 0:
                    out.append(q)
                    break
        for q in learnt:
            seen[q >> 1] = False

        if len(out) == 1:
            bt = 0
        else:
            best = 1
            for k in range(2, len(out)):
                if level[out[k] >> 1] > level[out[best] >> 1]:
                    best = k
            out[1], out[best] = out[best], out[1]
            bt = level[out[1] >> 1]
        lbd = len({level[l >> 1] for l in out})
        return out, bt, lbd

    def _cancel_until(self, lvl):
        if len(self.trail_lim) <= lvl:
            return
        start = self.trail_lim[lvl]
        for k in range(len(self.trail) - 1, start - 1, -1):
            v = self.trail[k] >> 1
            self.phase[v] = self.assign[v]
            self.assign[v] = -1
            self.reason[v] = -1
        del self.trail[start:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)

    def _pick(self):
        best = 0
        best_act = -1.0
        assign = self.assign
        act = self.activity
        for v in range(1, self.num_vars + 1):
            if assign[v] < 0 and act[v] > best_act:
                best = v
                best_act = act[v]
        return best

    def solve(self):
        """Return True (model in ``self.model()``) or False."""
        if not self.ok:
            return False
        if self._propagate() != -1:
            self.ok = False
            return False
        max_learnts = max(2000, len(self.clauses) // 3)
        restart_no = 0
        while True:
            budget = 100 * _luby(restart_no)
            restart_no += 1
            res = self._search(budget)
            if res is not None:
                return res
            self._cancel_until(0)
            nlearnt = sum(self.learnt)
            if nlearnt > max_learnts:
                order = sorted(
                    (cid for cid, l in enumerate(self.learnt) if l),
                    key=lambda cid: (self.lbd[cid], len(self.clauses[cid])),
                )
                keep = set(order[: len(order) // 2])
                keep.update(cid for cid in order if self.lbd[cid] <= 2)
                self._rebuild(keep)
                max_learnts = int(max_learnts * 1.1)

    def _search(self, budget):
        conflicts = 0
        while True:
            confl = self._propagate()
            if confl != -1:
                self.conflicts += 1
                conflicts += 1
                if not self.trail_lim:
                    self.ok = False
                    return False
                lits, bt, lbd = self._analyze(confl)
                self._cancel_until(bt)
                if len(lits) == 1:
                    self._enqueue(lits[0], -1)
                else:
                    cid = self._attach(lits, learnt=True, lbd=lbd)
                    self._enqueue(lits[0], cid)
                self.var_inc /= 0.95
                continue
            if conflicts >= budget:
                return None
            v = self._pick()
            if v == 0:
                return True
            self.decisions += 1
            self.trail_lim.append(len(self.trail))
            self._enqueue(2 * v + (1 - self.phase[v]), -1)

    def model(self):
        """DIMACS literals for variables 1..n; unassigned variables are false."""
        return [v if self.assign[v] == 1 else -v for v in range(1, self.num_vars + 1)]
