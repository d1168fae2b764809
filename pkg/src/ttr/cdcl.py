"""A self-contained CDCL SAT solver.

Conflict-driven clause learning with two watched literals, a binary-clause
fast path, VSIDS-style activities, phase saving, Luby restarts, and
LBD-based learnt-clause reduction.  Deterministic: identical inputs produce
identical runs and models.

Literals are encoded as ``2*v`` (positive) and ``2*v + 1`` (negative) for
variables ``v >= 1``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from heapq import heappop, heappush
from typing import Sequence


@dataclass
class SatResult:
    status: str  # "SAT", "UNSAT", or "UNKNOWN"
    model: list[bool] | None = None  # model[v] for v in 1..num_vars; model[0] unused
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0


def _luby(x: int) -> int:
    # Luby sequence 1,1,2,1,1,2,4,1,...
    size, seq = 1, 0
    while size < x + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != x:
        size = (size - 1) // 2
        seq -= 1
        x %= size
    return 1 << seq


class _Solver:
    def __init__(self, num_vars: int, clauses: Sequence[Sequence[int]]):
        self.nvars = num_vars
        n2 = 2 * num_vars + 2
        self.assign = [0] * n2  # per literal: 1 true, -1 false, 0 free
        self.level = [0] * (num_vars + 1)
        self.reason = [-1] * (num_vars + 1)
        self.phase = [1] * (num_vars + 1)  # saved polarity bit; 1 -> try negative
        self.activity = [0.0] * (num_vars + 1)
        self.var_inc = 1.0
        self.heap: list[tuple[float, int]] = [(0.0, v) for v in range(1, num_vars + 1)]
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.clauses: list[list[int] | None] = []
        self.lbd: dict[int, int] = {}
        self.learnt_ids: list[int] = []
        self.watches: list[list[int]] = [[] for _ in range(n2)]
        self.binwatch: list[list[tuple[int, int]]] = [[] for _ in range(n2)]
        self.ok = True
        self.conflicts = 0
        self.decisions = 0
        self.propagations = 0
        for cl in clauses:
            if not self._add_clause([self._enc(l) for l in cl], learnt=False):
                self.ok = False
                break

    @staticmethod
    def _enc(lit: int) -> int:
        return 2 * lit if lit > 0 else -2 * lit + 1

    def _add_clause(self, lits: list[int], learnt: bool) -> bool:
        if not learnt:
            out: list[int] = []
            seen = set()
            for l in lits:
                if l ^ 1 in seen:
                    return True  # tautology
                if l in seen:
                    continue
                if self.assign[l] > 0 and self.level[l >> 1] == 0:
                    return True  # already satisfied at root
                if self.assign[l] < 0 and self.level[l >> 1] == 0:
                    continue  # falsified at root; drop literal
                seen.add(l)
                out.append(l)
            lits = out
        if not lits:
            return False
        if len(lits) == 1:
            return self._enqueue(lits[0], -1)
        ci = len(self.clauses)
        self.clauses.append(lits)
        if learnt:
            self.learnt_ids.append(ci)
        if len(lits) == 2:
            # Trigger when either literal becomes false; imply the other.
            a, b = lits
            self.binwatch[a].append((b, ci))
            self.binwatch[b].append((a, ci))
        else:
            self.watches[lits[0]].append(ci)
            self.watches[lits[1]].append(ci)
        return True

    def _enqueue(self, lit: int, reason_ci: int) -> bool:
        if self.assign[lit] < 0:
            return False
        if self.assign[lit] > 0:
            return True
        self.assign[lit] = 1
        self.assign[lit ^ 1] = -1
        v = lit >> 1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason_ci
        self.trail.append(lit)
        return True

    def _propagate(self) -> int:
        assign = self.assign
        watches = self.watches
        binwatch = self.binwatch
        clauses = self.clauses
        while self.qhead < len(self.trail):
            p = self.trail[self.qhead]
            self.qhead += 1
            fl = p ^ 1
            self.propagations += 1
            for q, ci in binwatch[fl]:
                a = assign[q]
                if a == 0:
                    self._enqueue(q, ci)
                elif a < 0:
                    return ci
            wl = watches[fl]
            i = j = 0
            n = len(wl)
            while i < n:
                ci = wl[i]
                i += 1
                cl = clauses[ci]
                if cl is None:
                    continue
                if cl[0] == fl:
                    cl[0], cl[1] = cl[1], fl
                first = cl[0]
                if assign[first] > 0:
                    wl[j] = ci
                    j += 1
                    continue
                for k in range(2, len(cl)):
                    lk = cl[k]
                    if assign[lk] >= 0:
                        cl[1], cl[k] = lk, fl
                        watches[lk].append(ci)
                        break
                else:
                    wl[j] = ci
                    j += 1
                    if assign[first] < 0:
                        while i < n:
                            wl[j] = wl[i]
                            j += 1
                            i += 1
                        del wl[j:]
                        return ci
                    self._enqueue(first, ci)
                    continue
            del wl[j:]
        return -1

    def _bump(self, v: int) -> None:
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            inv = 1e-100
            for u in range(1, self.nvars + 1):
                self.activity[u] *= inv
            self.var_inc *= inv
        heappush(self.heap, (-self.activity[v], v))

    def _analyze(self, confl: int) -> tuple[list[int], int, int]:
        learnt: list[int] = [0]
        seen = bytearray(self.nvars + 1)
        counter = 0
        p = -1
        index = len(self.trail) - 1
        cur = len(self.trail_lim)
        cl = self.clauses[confl]
        while True:
            assert cl is not None
            start = 1 if cl[0] == p else 0
            for q in cl[start:]:
                if q == p:
                    continue
                v = q >> 1
                if not seen[v] and self.level[v] > 0:
                    seen[v] = 1
                    self._bump(v)
                    if self.level[v] == cur:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[self.trail[index] >> 1]:
                index -= 1
            p = self.trail[index]
            index -= 1
            v = p >> 1
            seen[v] = 0
            counter -= 1
            if counter == 0:
                break
            cl = self.clauses[self.reason[v]]
        learnt[0] = p ^ 1

        # Cheap minimization: drop literals whose reason is subsumed by the clause.
        marked = bytearray(self.nvars + 1)
        for q in learnt:
            marked[q >> 1] = 1
        keep = [learnt[0]]
        for q in learnt[1:]:
            ci = self.reason[q >> 1]
            if ci < 0:
                keep.append(q)
                continue
            rcl = self.clauses[ci]
            assert rcl is not None
            if all((x >> 1 == q >> 1) or marked[x >> 1] or self.level[x >> 1] == 0 for x in rcl):
                continue
            keep.append(q)
        learnt = keep

        if len(learnt) == 1:
            bt = 0
        else:
            # Move the highest-level tail literal to position 1.
            mi = max(range(1, len(learnt)), key=lambda i: self.level[learnt[i] >> 1])
            learnt[1], learnt[mi] = learnt[mi], learnt[1]
            bt = self.level[learnt[1] >> 1]
        levels = {self.level[q >> 1] for q in learnt}
        return learnt, bt, len(levels)

    def _cancel_until(self, lvl: int) -> None:
        if len(self.trail_lim) <= lvl:
            return
        bound = self.trail_lim[lvl]
        for i in range(len(self.trail) - 1, bound - 1, -1):
            lit = self.trail[i]
            v = lit >> 1
            self.phase[v] = lit & 1
            self.assign[lit] = 0
            self.assign[lit ^ 1] = 0
            self.reason[v] = -1
            heappush(self.heap, (-self.activity[v], v))
        del self.trail[bound:]
        del self.trail_lim[lvl:]
        self.qhead = len(self.trail)

    def _decide(self) -> bool:
        while self.heap:
            act, v = heappop(self.heap)
            if self.assign[2 * v] == 0 and -act == self.activity[v]:
                self.decisions += 1
                self.trail_lim.append(len(self.trail))
                self._enqueue(2 * v + self.phase[v], -1)
                return True
        for v in range(1, self.nvars + 1):
            if self.assign[2 * v] == 0:
                self.decisions += 1
                self.trail_lim.append(len(self.trail))
                self._enqueue(2 * v + self.phase[v], -1)
                return True
        return False

    def _reduce_db(self) -> None:
        # Keep glue clauses; drop the worse half of the rest by (lbd, length).
        locked = set()
        for v in range(1, self.nvars + 1):
            ci = self.reason[v]
            if ci >= 0 and self.assign[2 * v] != 0:
                locked.add(ci)
        cand = [
            ci
            for ci in self.learnt_ids
            if self.clauses[ci] is not None and self.lbd.get(ci, 9) > 3 and ci not in locked
        ]
        cand.sort(key=lambda ci: (self.lbd.get(ci, 9), len(self.clauses[ci])), reverse=True)
        for ci in cand[: len(cand) // 2]:
            cl = self.clauses[ci]
            if cl is not None and len(cl) > 2:
                self.clauses[ci] = None
                self.lbd.pop(ci, None)
        self.learnt_ids = [ci for ci in self.learnt_ids if self.clauses[ci] is not None]

    def solve(self, time_budget: float | None, conflict_budget: int | None) -> SatResult:
        if not self.ok:
            return SatResult("UNSAT", conflicts=self.conflicts)
        deadline = time.monotonic() + time_budget if time_budget else None
        max_learnts = max(4000, len(self.clauses) // 3)
        restart_round = 0
        restart_budget = 100 * _luby(0)
        conflicts_at_restart = 0
        while True:
            confl = self._propagate()
            if confl >= 0:
                self.conflicts += 1
                if not self.trail_lim:
                    return SatResult("UNSAT", conflicts=self.conflicts,
                                     decisions=self.decisions, propagations=self.propagations)
                learnt, bt, lbd = self._analyze(confl)
                self._cancel_until(bt)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], -1)
                else:
                    ci = len(self.clauses)
                    self._add_clause(learnt, learnt=True)
                    self.lbd[ci] = lbd
                    self._enqueue(learnt[0], ci)
                self.var_inc /= 0.95
                if self.conflicts % 256 == 0:
                    if deadline is not None and time.monotonic() > deadline:
                        return SatResult("UNKNOWN", conflicts=self.conflicts,
                                         decisions=self.decisions, propagations=self.propagations)
                    if conflict_budget is not None and self.conflicts >= conflict_budget:
                        return SatResult("UNKNOWN", conflicts=self.conflicts,
                                         decisions=self.decisions, propagations=self.propagations)
                if self.conflicts - conflicts_at_restart >= restart_budget:
                    restart_round += 1
                    restart_budget = 100 * _luby(restart_round)
                    conflicts_at_restart = self.conflicts
                    self._cancel_until(0)
                if len(self.learnt_ids) > max_learnts:
                    self._reduce_db()
                    max_learnts = int(max_learnts * 1.2)
            else:
                if not self._decide():
                    model = [False] * (self.nvars + 1)
                    for v in range(1, self.nvars + 1):
                        model[v] = self.assign[2 * v] > 0
                    return SatResult("SAT", model=model, conflicts=self.conflicts,
                                     decisions=self.decisions, propagations=self.propagations)


def solve_clauses(
    num_vars: int,
    clauses: Sequence[Sequence[int]],
    *,
    time_budget: float | None = None,
    conflict_budget: int | None = None,
) -> SatResult:
    """Solve a CNF given as (num_vars, iterable of integer-literal clauses).

    A returned SAT model is checked against every clause before being handed
    back; UNSAT answers come from conflict analysis at decision level 0.
    """
    solver = _Solver(num_vars, clauses)
    result = solver.solve(time_budget, conflict_budget)
    if result.status == "SAT":
        model = result.model
        assert model is not None
        for cl in clauses:
            if not any(model[l] if l > 0 else not model[-l] for l in cl):
                raise AssertionError(f"internal solver produced a bad model on clause {cl}")
    return result
