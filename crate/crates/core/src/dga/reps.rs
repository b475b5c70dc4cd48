use std::sync::atomic::{AtomicU64, Ordering};

use super::bruhat::bruhat_cell;
use super::complex::{Dga, Letter};
use crate::algebra::{Gf, Mat};
use crate::error::{Error, Result};
use crate::exec::Exec;

pub const DEFAULT_REP_BUDGET: u64 = 2_000_000_000;

/// Options for representation counting.
#[derive(Debug, Clone)]
pub struct RepQuery {
    pub n: usize,
    pub q: u64,
    /// Restrict to `f(t₁⋯t_ℓ)` in this Bruhat cell (images `w[j]`, 0-based).
    pub cell: Option<Vec<usize>>,
    pub exec: Exec,
    /// Maximum number of search nodes.
    pub budget: u64,
}

impl RepQuery {
    pub fn new(n: usize, q: u64) -> Self {
        RepQuery {
            n,
            q,
            cell: None,
            exec: Exec::default(),
            budget: DEFAULT_REP_BUDGET,
        }
    }

    pub fn with_cell(mut self, cell: Vec<usize>) -> Self {
        self.cell = Some(cell);
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}

/// Ungraded augmentations to `𝔽_q`: representations with `n = 1`.
pub fn count_augmentations(dga: &Dga, q: u64, exec: Exec) -> Result<u128> {
    count_representations(dga, &RepQuery::new(1, q).with_exec(exec))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    T(usize),
    Chord(usize),
}

struct Plan {
    order: Vec<Var>,
    /// Chords whose equation becomes checkable once `order[..=k]` is set.
    checks: Vec<Vec<usize>>,
    /// Product of domain sizes of generators that appear in no equation.
    free_factor: u128,
}

fn plan(dga: &Dga, query: &RepQuery, gl: usize, mats: usize) -> Plan {
    let vars_of = |i: usize| {
        let mut v: Vec<Var> = Vec::new();
        for w in &dga.differential[i] {
            for &l in w {
                let x = match l {
                    Letter::Chord(j) => Var::Chord(j),
                    Letter::T { index, .. } => Var::T(index),
                };
                if !v.contains(&x) {
                    v.push(x);
                }
            }
        }
        v
    };
    let eqs: Vec<(usize, Vec<Var>)> = (0..dga.rb())
        .filter(|&i| !dga.differential[i].is_empty())
        .map(|i| (i, vars_of(i)))
        .collect();
    let mut needed: Vec<Var> = Vec::new();
    for (_, vs) in &eqs {
        for v in vs {
            if !needed.contains(v) {
                needed.push(*v);
            }
        }
    }
    if query.cell.is_some() {
        for k in 0..dga.ell() {
            if !needed.contains(&Var::T(k)) {
                needed.push(Var::T(k));
            }
        }
    }
    let mut free_factor: u128 = 1;
    for k in 0..dga.ell() {
        if !needed.contains(&Var::T(k)) {
            free_factor *= gl as u128;
        }
    }
    for i in 0..dga.rb() {
        if !needed.contains(&Var::Chord(i)) {
            free_factor *= mats as u128;
        }
    }
    // Greedy: take the variable completing the most equations, then the one
    // occurring in the most open equations; base points first on ties.
    let mut order: Vec<Var> = Vec::new();
    let mut remaining = needed;
    while !remaining.is_empty() {
        let score = |v: &Var| {
            let mut done = 0;
            let mut touch = 0;
            for (_, vs) in &eqs {
                if !vs.contains(v) {
                    continue;
                }
                let open = vs.iter().filter(|x| !order.contains(x)).count();
                if open == 1 {
                    done += 1;
                }
                if open > 0 {
                    touch += 1;
                }
            }
            (done, touch, matches!(v, Var::T(_)))
        };
        let best = (0..remaining.len())
            .max_by_key(|&i| (score(&remaining[i]), std::cmp::Reverse(i)))
            .unwrap();
        order.push(remaining.remove(best));
    }
    let mut checks = vec![Vec::new(); order.len()];
    for (i, vs) in &eqs {
        let last = vs
            .iter()
            .map(|v| order.iter().position(|x| x == v).unwrap())
            .max();
        match last {
            Some(k) => checks[k].push(*i),
            // Equation without variables: words are all `1`.
            None => checks.first_mut().map(|c| c.push(*i)).unwrap_or(()),
        }
    }
    Plan {
        order,
        checks,
        free_factor,
    }
}

struct Search<'a> {
    dga: &'a Dga,
    gf: Gf,
    n: usize,
    plan: Plan,
    cell: Option<Vec<usize>>,
    mats: Vec<Mat>,
    gl: Vec<(Mat, Mat)>,
    nodes: AtomicU64,
    budget: u64,
}

#[derive(Clone)]
struct State {
    chords: Vec<Mat>,
    ts: Vec<(Mat, Mat)>,
    pending: u64,
}

const NODE_BATCH: u64 = 1 << 12;

impl Search<'_> {
    fn domain(&self, v: Var) -> usize {
        match v {
            Var::T(_) => self.gl.len(),
            Var::Chord(_) => self.mats.len(),
        }
    }

    fn set(&self, st: &mut State, v: Var, idx: usize) {
        match v {
            Var::T(k) => st.ts[k] = self.gl[idx],
            Var::Chord(i) => st.chords[i] = self.mats[idx],
        }
    }

    fn holds(&self, st: &State, chord: usize) -> bool {
        let mut sum = Mat::zero(self.n);
        for w in &self.dga.differential[chord] {
            let mut p = Mat::identity(self.n);
            for &l in w {
                let m = match l {
                    Letter::Chord(j) => st.chords[j],
                    Letter::T {
                        index,
                        inverse: false,
                    } => st.ts[index].0,
                    Letter::T {
                        index,
                        inverse: true,
                    } => st.ts[index].1,
                };
                p = self.gf.mat_mul(&p, &m);
            }
            sum = sum.add(&p);
        }
        sum.is_zero()
    }

    fn leaf_ok(&self, st: &State) -> bool {
        let Some(cell) = &self.cell else { return true };
        let mut p = Mat::identity(self.n);
        for t in &st.ts {
            p = self.gf.mat_mul(&p, &t.0);
        }
        bruhat_cell(&self.gf, &p)
            .map(|w| &w == cell)
            .unwrap_or(false)
    }

    /// Adds the locally counted nodes to the shared total and enforces the
    /// budget. Counting in batches keeps workers off the shared counter.
    fn flush(&self, st: &mut State) -> Result<()> {
        let added = std::mem::take(&mut st.pending);
        let before = self.nodes.fetch_add(added, Ordering::Relaxed);
        if before.saturating_add(added) > self.budget {
            return Err(Error::BudgetExceeded(format!(
                "representation search exceeded {} nodes",
                self.budget
            )));
        }
        Ok(())
    }

    fn run(&self, st: &mut State, level: usize) -> Result<u128> {
        if level == self.plan.order.len() {
            return Ok(u128::from(self.leaf_ok(st)));
        }
        let v = self.plan.order[level];
        let mut total = 0u128;
        for idx in 0..self.domain(v) {
            st.pending += 1;
            if st.pending == NODE_BATCH {
                self.flush(st)?;
            }
            self.set(st, v, idx);
            if self.plan.checks[level].iter().all(|&c| self.holds(st, c)) {
                total += self.run(st, level + 1)?;
            }
        }
        Ok(total)
    }
}

/// Number of representations `f` of the DGA on `𝔽_qⁿ` with zero
/// differential: `f(∂x) = 0` for every chord, `f(t_k)` invertible.
pub fn count_representations(dga: &Dga, query: &RepQuery) -> Result<u128> {
    let gf = Gf::with_order(query.q)?;
    if query.n == 0 || query.n > 3 {
        return Err(Error::Validation(format!(
            "representation dimension {} not in 1..=3",
            query.n
        )));
    }
    if let Some(c) = &query.cell {
        let mut sorted = c.clone();
        sorted.sort_unstable();
        if c.len() != query.n || sorted != (0..query.n).collect::<Vec<_>>() {
            return Err(Error::Validation(format!(
                "cell {c:?} is not a permutation of size {}",
                query.n
            )));
        }
    }
    let mats = gf.all_matrices(query.n);
    let gl: Vec<(Mat, Mat)> = gf
        .general_linear(query.n)
        .into_iter()
        .map(|m| (m, gf.mat_inverse(&m).expect("invertible")))
        .collect();
    let plan = plan(dga, query, gl.len(), mats.len());
    let free = plan.free_factor;
    let search = Search {
        dga,
        gf,
        n: query.n,
        plan,
        cell: query.cell.clone(),
        mats,
        gl,
        nodes: AtomicU64::new(0),
        budget: query.budget,
    };
    let init = State {
        chords: vec![Mat::zero(query.n); dga.rb()],
        ts: vec![search.gl[0]; dga.ell()],
        pending: 0,
    };
    let count = if search.plan.order.is_empty() {
        let ok = (0..dga.rb()).all(|i| search.holds(&init, i));
        u128::from(ok && search.leaf_ok(&init))
    } else {
        let first = search.plan.order[0];
        let idxs: Vec<usize> = (0..search.domain(first)).collect();
        let parts = query.exec.map(&idxs, |&idx| {
            let mut st = init.clone();
            search.set(&mut st, first, idx);
            let count = if search.plan.checks[0].iter().all(|&c| search.holds(&st, c)) {
                search.run(&mut st, 1)?
            } else {
                0
            };
            search.flush(&mut st)?;
            Ok(count)
        });
        let mut total = 0u128;
        for p in parts {
            total += p?;
        }
        total
    };
    Ok(count * free)
}
