use std::fmt::Write as _;

use super::cdcl::{Budget, Lit, SolveResult, Solver, SolverStats};
use crate::error::{Error, Result};

/// A CNF formula with DIMACS-style literals (non-zero, 1-based).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: u32,
    pub clauses: Vec<Vec<i64>>,
}

impl CnfFormula {
    pub fn new(num_vars: u32) -> Self {
        CnfFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn push(&mut self, clause: Vec<i64>) {
        for &l in &clause {
            self.num_vars = self.num_vars.max(l.unsigned_abs() as u32);
        }
        self.clauses.push(clause);
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                write!(s, "{l} ").unwrap();
            }
            s.push_str("0\n");
        }
        s
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(u32, usize)> = None;
        let mut clauses = Vec::new();
        let mut cur = Vec::new();
        for line in text.lines() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('c') {
                continue;
            }
            if let Some(rest) = t.strip_prefix("p cnf") {
                let nums: Vec<&str> = rest.split_whitespace().collect();
                if nums.len() != 2 {
                    return Err(Error::Parse(format!("bad header: {t}")));
                }
                let v = nums[0].parse().map_err(|e| Error::Parse(format!("{e}")))?;
                let c = nums[1].parse().map_err(|e| Error::Parse(format!("{e}")))?;
                header = Some((v, c));
                continue;
            }
            for tok in t.split_whitespace() {
                let x: i64 = tok
                    .parse()
                    .map_err(|e| Error::Parse(format!("{tok}: {e}")))?;
                if x == 0 {
                    clauses.push(std::mem::take(&mut cur));
                } else {
                    cur.push(x);
                }
            }
        }
        if !cur.is_empty() {
            clauses.push(cur);
        }
        let (num_vars, count) = header.ok_or_else(|| Error::Parse("missing header".into()))?;
        if count != clauses.len() {
            return Err(Error::Parse(format!(
                "header announces {count} clauses, found {}",
                clauses.len()
            )));
        }
        if clauses
            .iter()
            .flatten()
            .any(|l| l.unsigned_abs() as u32 > num_vars)
        {
            return Err(Error::Parse("literal exceeds variable count".into()));
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// True when every clause has a literal made true by `model` (indexed by variable).
    pub fn is_satisfied_by(&self, model: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let v = (l.unsigned_abs() - 1) as usize;
                v < model.len() && model[v] == (l > 0)
            })
        })
    }

    pub fn load_into(&self, s: &mut Solver) {
        s.reserve_vars(self.num_vars);
        for c in &self.clauses {
            let lits: Vec<Lit> = c.iter().map(|&x| Lit::from_dimacs(x)).collect();
            s.add_clause(&lits);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CnfResult {
    Sat(Vec<bool>),
    Unsat,
    Unknown,
}

/// Solves `f`; a model is re-checked against the formula before it is returned.
pub fn solve_cnf(f: &CnfFormula, budget: Budget) -> (CnfResult, SolverStats) {
    let mut s = Solver::new();
    f.load_into(&mut s);
    let r = match s.solve_with(&[], budget) {
        SolveResult::Sat(m) => {
            assert!(f.is_satisfied_by(&m), "solver returned a non-model");
            CnfResult::Sat(m)
        }
        SolveResult::Unsat => CnfResult::Unsat,
        SolveResult::Unknown => CnfResult::Unknown,
    };
    (r, s.stats())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_round_trip() {
        let mut f = CnfFormula::new(2);
        f.push(vec![1, 2]);
        f.push(vec![-1, -2]);
        let text = f.to_dimacs();
        assert_eq!(text, "p cnf 2 2\n1 2 0\n-1 -2 0\n");
        assert_eq!(CnfFormula::parse_dimacs(&text).unwrap(), f);
        assert!(CnfFormula::parse_dimacs("p cnf 1 2\n1 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("1 0\n").is_err());
    }

    #[test]
    fn empty_and_contradiction() {
        let (r, _) = solve_cnf(&CnfFormula::new(0), Budget::unlimited());
        assert!(matches!(r, CnfResult::Sat(_)));
        let mut f = CnfFormula::new(1);
        f.clauses.push(vec![]);
        assert_eq!(solve_cnf(&f, Budget::unlimited()).0, CnfResult::Unsat);
        let mut g = CnfFormula::new(1);
        g.push(vec![1]);
        g.push(vec![-1]);
        assert_eq!(solve_cnf(&g, Budget::unlimited()).0, CnfResult::Unsat);
    }
}
