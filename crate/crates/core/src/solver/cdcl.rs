//! Conflict-driven clause learning SAT kernel.
//!
//! Two watched literals per clause, first-UIP learning with basic clause
//! minimization, VSIDS branching with phase saving, Luby restarts and
//! activity-based learnt-clause deletion. Everything is deterministic: ties
//! break by variable index and there is no randomness.

use std::time::Instant;

use serde::{Deserialize, Serialize};

/// A literal: variable `v` (0-based) with polarity, encoded as `2v + neg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(u32);

impl Lit {
    pub fn new(var: u32, positive: bool) -> Self {
        Lit(2 * var + u32::from(!positive))
    }

    pub fn pos(var: u32) -> Self {
        Lit::new(var, true)
    }

    pub fn neg(var: u32) -> Self {
        Lit::new(var, false)
    }

    pub fn var(self) -> u32 {
        self.0 >> 1
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    pub fn negate(self) -> Self {
        Lit(self.0 ^ 1)
    }

    /// DIMACS integer (1-based, sign = polarity).
    pub fn to_dimacs(self) -> i64 {
        let v = self.var() as i64 + 1;
        if self.is_positive() {
            v
        } else {
            -v
        }
    }

    pub fn from_dimacs(x: i64) -> Self {
        assert!(x != 0, "0 is not a DIMACS literal");
        Lit::new((x.unsigned_abs() - 1) as u32, x > 0)
    }

    fn idx(self) -> usize {
        self.0 as usize
    }
}

impl std::ops::Not for Lit {
    type Output = Lit;
    fn not(self) -> Lit {
        self.negate()
    }
}

const L_TRUE: u8 = 1;
const L_FALSE: u8 = 0;
const L_UNDEF: u8 = 2;

/// Search limits; a run that hits one returns [`SolveResult::Unknown`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    pub max_conflicts: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn timeout(d: std::time::Duration) -> Self {
        Budget {
            max_conflicts: None,
            deadline: Some(Instant::now() + d),
        }
    }

    pub fn conflicts(n: u64) -> Self {
        Budget {
            max_conflicts: Some(n),
            deadline: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    /// Model indexed by variable.
    Sat(Vec<bool>),
    Unsat,
    Unknown,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverStats {
    pub decisions: u64,
    pub conflicts: u64,
    pub propagations: u64,
    pub restarts: u64,
}

struct Clause {
    lits: Vec<Lit>,
    learnt: bool,
    activity: f64,
    deleted: bool,
}

#[derive(Clone, Copy)]
struct Watch {
    cref: u32,
    blocker: Lit,
}

/// Indexed binary max-heap over variable activities.
struct VarHeap {
    heap: Vec<u32>,
    pos: Vec<Option<usize>>,
}

impl VarHeap {
    fn new() -> Self {
        VarHeap {
            heap: Vec::new(),
            pos: Vec::new(),
        }
    }

    fn better(act: &[f64], a: u32, b: u32) -> bool {
        let (x, y) = (act[a as usize], act[b as usize]);
        x > y || (x == y && a < b)
    }

    fn grow(&mut self, n: usize) {
        self.pos.resize(n, None);
    }

    fn contains(&self, v: u32) -> bool {
        self.pos[v as usize].is_some()
    }

    fn up(&mut self, mut i: usize, act: &[f64]) {
        let v = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            if !Self::better(act, v, self.heap[parent]) {
                break;
            }
            self.heap[i] = self.heap[parent];
            self.pos[self.heap[i] as usize] = Some(i);
            i = parent;
        }
        self.heap[i] = v;
        self.pos[v as usize] = Some(i);
    }

    fn down(&mut self, mut i: usize, act: &[f64]) {
        let v = self.heap[i];
        let n = self.heap.len();
        loop {
            let l = 2 * i + 1;
            if l >= n {
                break;
            }
            let r = l + 1;
            let c = if r < n && Self::better(act, self.heap[r], self.heap[l]) {
                r
            } else {
                l
            };
            if !Self::better(act, self.heap[c], v) {
                break;
            }
            self.heap[i] = self.heap[c];
            self.pos[self.heap[i] as usize] = Some(i);
            i = c;
        }
        self.heap[i] = v;
        self.pos[v as usize] = Some(i);
    }

    fn insert(&mut self, v: u32, act: &[f64]) {
        if self.contains(v) {
            return;
        }
        self.heap.push(v);
        let i = self.heap.len() - 1;
        self.pos[v as usize] = Some(i);
        self.up(i, act);
    }

    fn bumped(&mut self, v: u32, act: &[f64]) {
        if let Some(i) = self.pos[v as usize] {
            self.up(i, act);
        }
    }

    fn pop(&mut self, act: &[f64]) -> Option<u32> {
        if self.heap.is_empty() {
            return None;
        }
        let top = self.heap[0];
        let last = self.heap.pop().unwrap();
        self.pos[top as usize] = None;
        if !self.heap.is_empty() {
            self.heap[0] = last;
            self.pos[last as usize] = Some(0);
            self.down(0, act);
        }
        Some(top)
    }
}

/// Luby sequence 1,1,2,1,1,2,4,... (0-based index).
fn luby(mut i: u64) -> u64 {
    let mut size = 1u64;
    let mut seq = 0u32;
    while size < i + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    while size - 1 != i {
        size = (size - 1) >> 1;
        seq -= 1;
        i %= size;
    }
    1 << seq
}

pub struct Solver {
    clauses: Vec<Clause>,
    watches: Vec<Vec<Watch>>,
    assigns: Vec<u8>,
    level: Vec<u32>,
    reason: Vec<Option<u32>>,
    phase: Vec<bool>,
    activity: Vec<f64>,
    var_inc: f64,
    cla_inc: f64,
    heap: VarHeap,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    seen: Vec<bool>,
    ok: bool,
    learnts: Vec<u32>,
    max_learnts: f64,
    stats: SolverStats,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new()
    }
}

impl Solver {
    pub fn new() -> Self {
        Solver {
            clauses: Vec::new(),
            watches: Vec::new(),
            assigns: Vec::new(),
            level: Vec::new(),
            reason: Vec::new(),
            phase: Vec::new(),
            activity: Vec::new(),
            var_inc: 1.0,
            cla_inc: 1.0,
            heap: VarHeap::new(),
            trail: Vec::new(),
            trail_lim: Vec::new(),
            qhead: 0,
            seen: Vec::new(),
            ok: true,
            learnts: Vec::new(),
            max_learnts: 0.0,
            stats: SolverStats::default(),
        }
    }

    pub fn num_vars(&self) -> u32 {
        self.assigns.len() as u32
    }

    pub fn stats(&self) -> SolverStats {
        self.stats
    }

    /// Ensures variables `0..n` exist.
    pub fn reserve_vars(&mut self, n: u32) {
        while self.num_vars() < n {
            self.new_var();
        }
    }

    pub fn new_var(&mut self) -> u32 {
        let v = self.num_vars();
        self.assigns.push(L_UNDEF);
        self.level.push(0);
        self.reason.push(None);
        self.phase.push(false);
        self.activity.push(0.0);
        self.seen.push(false);
        self.watches.push(Vec::new());
        self.watches.push(Vec::new());
        self.heap.grow(v as usize + 1);
        self.heap.insert(v, &self.activity);
        v
    }

    fn value(&self, l: Lit) -> u8 {
        let a = self.assigns[l.var() as usize];
        if a == L_UNDEF {
            L_UNDEF
        } else if l.is_positive() {
            a
        } else {
            1 - a
        }
    }

    fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    fn enqueue(&mut self, l: Lit, reason: Option<u32>) {
        let v = l.var() as usize;
        self.assigns[v] = if l.is_positive() { L_TRUE } else { L_FALSE };
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(l);
    }

    /// Adds a clause at decision level 0. Returns `false` once the formula is
    /// known unsatisfiable.
    pub fn add_clause(&mut self, lits: &[Lit]) -> bool {
        if !self.ok {
            return false;
        }
        if self.decision_level() > 0 {
            self.backtrack(0);
        }
        let max_var = lits.iter().map(|l| l.var() + 1).max().unwrap_or(0);
        self.reserve_vars(max_var);
        let mut c: Vec<Lit> = lits.to_vec();
        c.sort_unstable();
        c.dedup();
        if c.windows(2).any(|w| w[0].var() == w[1].var()) {
            return true; // tautology
        }
        c.retain(|&l| self.value(l) != L_FALSE);
        if c.iter().any(|&l| self.value(l) == L_TRUE) {
            return true;
        }
        match c.len() {
            0 => {
                self.ok = false;
                false
            }
            1 => {
                self.enqueue(c[0], None);
                if self.propagate().is_some() {
                    self.ok = false;
                }
                self.ok
            }
            _ => {
                self.attach(c, false);
                true
            }
        }
    }

    fn attach(&mut self, lits: Vec<Lit>, learnt: bool) -> u32 {
        let cref = self.clauses.len() as u32;
        self.watches[lits[0].idx()].push(Watch {
            cref,
            blocker: lits[1],
        });
        self.watches[lits[1].idx()].push(Watch {
            cref,
            blocker: lits[0],
        });
        self.clauses.push(Clause {
            lits,
            learnt,
            activity: 0.0,
            deleted: false,
        });
        if learnt {
            self.learnts.push(cref);
        }
        cref
    }

    /// Unit propagation; returns a conflicting clause if one arises.
    fn propagate(&mut self) -> Option<u32> {
        let mut conflict = None;
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            self.stats.propagations += 1;
            let false_lit = !p;
            let mut ws = std::mem::take(&mut self.watches[false_lit.idx()]);
            let mut i = 0;
            let mut j = 0;
            while i < ws.len() {
                let w = ws[i];
                i += 1;
                if self.value(w.blocker) == L_TRUE {
                    ws[j] = w;
                    j += 1;
                    continue;
                }
                let cref = w.cref as usize;
                if self.clauses[cref].deleted {
                    continue;
                }
                {
                    let lits = &mut self.clauses[cref].lits;
                    if lits[0] == false_lit {
                        lits.swap(0, 1);
                    }
                }
                let first = self.clauses[cref].lits[0];
                if first != w.blocker && self.value(first) == L_TRUE {
                    ws[j] = Watch {
                        cref: w.cref,
                        blocker: first,
                    };
                    j += 1;
                    continue;
                }
                let len = self.clauses[cref].lits.len();
                let mut moved = false;
                for k in 2..len {
                    let l = self.clauses[cref].lits[k];
                    if self.value(l) != L_FALSE {
                        self.clauses[cref].lits.swap(1, k);
                        self.watches[l.idx()].push(Watch {
                            cref: w.cref,
                            blocker: first,
                        });
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                ws[j] = Watch {
                    cref: w.cref,
                    blocker: first,
                };
                j += 1;
                if self.value(first) == L_FALSE {
                    conflict = Some(w.cref);
                    while i < ws.len() {
                        ws[j] = ws[i];
                        j += 1;
                        i += 1;
                    }
                } else {
                    self.enqueue(first, Some(w.cref));
                }
            }
            ws.truncate(j);
            self.watches[false_lit.idx()] = ws;
            if conflict.is_some() {
                self.qhead = self.trail.len();
                break;
            }
        }
        conflict
    }

    fn bump_var(&mut self, v: u32) {
        self.activity[v as usize] += self.var_inc;
        if self.activity[v as usize] > 1e100 {
            for a in self.activity.iter_mut() {
                *a *= 1e-100;
            }
            self.var_inc *= 1e-100;
        }
        self.heap.bumped(v, &self.activity);
    }

    fn bump_clause(&mut self, cref: u32) {
        let c = &mut self.clauses[cref as usize];
        c.activity += self.cla_inc;
        if c.activity > 1e20 {
            for &l in &self.learnts {
                self.clauses[l as usize].activity *= 1e-20;
            }
            self.cla_inc *= 1e-20;
        }
    }

    /// First-UIP analysis. Returns the learnt clause (asserting literal first)
    /// and the backjump level.
    fn analyze(&mut self, confl: u32) -> (Vec<Lit>, u32) {
        let mut learnt = vec![Lit(0)];
        let mut path = 0;
        let mut p: Option<Lit> = None;
        let mut index = self.trail.len();
        let mut confl = confl;
        let dl = self.decision_level();
        loop {
            if self.clauses[confl as usize].learnt {
                self.bump_clause(confl);
            }
            let start = usize::from(p.is_some());
            let lits = self.clauses[confl as usize].lits.clone();
            for &q in &lits[start..] {
                let v = q.var() as usize;
                if !self.seen[v] && self.level[v] > 0 {
                    self.bump_var(q.var());
                    self.seen[v] = true;
                    if self.level[v] >= dl {
                        path += 1;
                    } else {
                        learnt.push(q);
                    }
                }
            }
            loop {
                index -= 1;
                if self.seen[self.trail[index].var() as usize] {
                    break;
                }
            }
            let lit = self.trail[index];
            p = Some(lit);
            self.seen[lit.var() as usize] = false;
            path -= 1;
            if path == 0 {
                break;
            }
            confl = self.reason[lit.var() as usize].expect("implied literal has a reason");
        }
        learnt[0] = !p.unwrap();

        // drop literals implied by other literals of the clause
        let keep: Vec<bool> = learnt
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                if i == 0 {
                    return true;
                }
                match self.reason[l.var() as usize] {
                    None => true,
                    Some(r) => self.clauses[r as usize].lits[1..].iter().any(|q| {
                        let v = q.var() as usize;
                        !self.seen[v] && self.level[v] > 0
                    }),
                }
            })
            .collect();
        for l in &learnt[1..] {
            self.seen[l.var() as usize] = false;
        }
        let mut out: Vec<Lit> = learnt
            .into_iter()
            .zip(keep)
            .filter_map(|(l, k)| k.then_some(l))
            .collect();

        let bt = if out.len() == 1 {
            0
        } else {
            let mut max_i = 1;
            for i in 2..out.len() {
                if self.level[out[i].var() as usize] > self.level[out[max_i].var() as usize] {
                    max_i = i;
                }
            }
            out.swap(1, max_i);
            self.level[out[1].var() as usize]
        };
        (out, bt)
    }

    fn backtrack(&mut self, level: u32) {
        if self.decision_level() <= level {
            return;
        }
        let lim = self.trail_lim[level as usize];
        for i in (lim..self.trail.len()).rev() {
            let l = self.trail[i];
            let v = l.var() as usize;
            self.phase[v] = l.is_positive();
            self.assigns[v] = L_UNDEF;
            self.reason[v] = None;
            self.heap.insert(l.var(), &self.activity);
        }
        self.trail.truncate(lim);
        self.trail_lim.truncate(level as usize);
        self.qhead = lim;
    }

    fn locked(&self, cref: u32) -> bool {
        let c = &self.clauses[cref as usize];
        let v = c.lits[0].var() as usize;
        self.value(c.lits[0]) == L_TRUE && self.reason[v] == Some(cref)
    }

    fn reduce_db(&mut self) {
        let mut ls: Vec<u32> = self
            .learnts
            .iter()
            .copied()
            .filter(|&c| !self.clauses[c as usize].deleted)
            .collect();
        ls.sort_by(|&a, &b| {
            let (ca, cb) = (&self.clauses[a as usize], &self.clauses[b as usize]);
            (ca.lits.len() <= 2)
                .cmp(&(cb.lits.len() <= 2))
                .then(ca.activity.partial_cmp(&cb.activity).unwrap())
                .then(a.cmp(&b))
        });
        let half = ls.len() / 2;
        let mut kept = Vec::with_capacity(ls.len());
        for (i, &c) in ls.iter().enumerate() {
            let small = self.clauses[c as usize].lits.len() <= 2;
            if i < half && !small && !self.locked(c) {
                let cl = &mut self.clauses[c as usize];
                cl.deleted = true;
                cl.lits = Vec::new();
            } else {
                kept.push(c);
            }
        }
        self.learnts = kept;
    }

    fn pick_branch(&mut self) -> Option<Lit> {
        while let Some(v) = self.heap.pop(&self.activity) {
            if self.assigns[v as usize] == L_UNDEF {
                return Some(Lit::new(v, self.phase[v as usize]));
            }
        }
        None
    }

    pub fn solve(&mut self) -> SolveResult {
        self.solve_with(&[], Budget::unlimited())
    }

    /// Solves under `assumptions` (temporarily forced literals).
    pub fn solve_with(&mut self, assumptions: &[Lit], budget: Budget) -> SolveResult {
        if !self.ok {
            return SolveResult::Unsat;
        }
        for a in assumptions {
            self.reserve_vars(a.var() + 1);
        }
        if self.max_learnts == 0.0 {
            self.max_learnts = (self.clauses.len() as f64 / 3.0).max(2000.0);
        }
        let start_conflicts = self.stats.conflicts;
        let mut restart_no = 0u64;
        let result = loop {
            let limit = luby(restart_no) * 100;
            restart_no += 1;
            match self.search(limit, assumptions, &budget, start_conflicts) {
                Some(r) => break r,
                None => {
                    self.stats.restarts += 1;
                    self.max_learnts *= 1.05;
                }
            }
        };
        self.backtrack(0);
        result
    }

    /// Runs until `nof_conflicts` conflicts (then `None` for a restart) or a verdict.
    fn search(
        &mut self,
        nof_conflicts: u64,
        assumptions: &[Lit],
        budget: &Budget,
        start_conflicts: u64,
    ) -> Option<SolveResult> {
        let mut conflicts = 0u64;
        loop {
            if let Some(confl) = self.propagate() {
                self.stats.conflicts += 1;
                conflicts += 1;
                if self.decision_level() == 0 {
                    self.ok = false;
                    return Some(SolveResult::Unsat);
                }
                let (learnt, bt) = self.analyze(confl);
                self.backtrack(bt);
                if learnt.len() == 1 {
                    self.enqueue(learnt[0], None);
                } else {
                    let first = learnt[0];
                    let cref = self.attach(learnt, true);
                    self.bump_clause(cref);
                    self.enqueue(first, Some(cref));
                }
                self.var_inc /= 0.95;
                self.cla_inc /= 0.999;
                let used = self.stats.conflicts - start_conflicts;
                if budget.max_conflicts.is_some_and(|m| used >= m) {
                    return Some(SolveResult::Unknown);
                }
                if used % 256 == 0 && budget.deadline.is_some_and(|d| Instant::now() >= d) {
                    return Some(SolveResult::Unknown);
                }
            } else {
                if conflicts >= nof_conflicts {
                    self.backtrack(0);
                    return None;
                }
                if self.learnts.len() as f64 - self.trail.len() as f64 >= self.max_learnts {
                    self.reduce_db();
                }
                let mut next = None;
                while (self.decision_level() as usize) < assumptions.len() {
                    let a = assumptions[self.decision_level() as usize];
                    match self.value(a) {
                        L_TRUE => self.trail_lim.push(self.trail.len()),
                        L_FALSE => return Some(SolveResult::Unsat),
                        _ => {
                            next = Some(a);
                            break;
                        }
                    }
                }
                let lit = match next {
                    Some(a) => a,
                    None => match self.pick_branch() {
                        Some(l) => {
                            self.stats.decisions += 1;
                            l
                        }
                        None => {
                            let model = self.assigns.iter().map(|&a| a == L_TRUE).collect();
                            return Some(SolveResult::Sat(model));
                        }
                    },
                };
                self.trail_lim.push(self.trail.len());
                self.enqueue(lit, None);
            }
        }
    }
}
