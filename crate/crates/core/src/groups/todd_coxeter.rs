//! Todd–Coxeter coset enumeration.
//!
//! Two strategies share one table: relator-based filling with lookahead
//! (HLT) and deduction-driven definition (Felsch). Coincidences are merged
//! through a union-find forest on coset numbers. Completed tables are
//! compacted and renumbered in breadth-first order, so the result does not
//! depend on the strategy.

use std::collections::VecDeque;
use std::fmt::Write as _;

use super::presentation::{cyclic_reduce, invert_word, Letter, Presentation, Word};

pub const DEFAULT_COSET_BUDGET: usize = 2_000_000;
pub const COSET_BUDGET_VAR: &str = "MATSUO_COSET_BUDGET";

const NONE: u32 = u32::MAX;

/// Budget from `MATSUO_COSET_BUDGET`, else the default.
pub fn coset_budget_from_env() -> usize {
    std::env::var(COSET_BUDGET_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(DEFAULT_COSET_BUDGET)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Hlt,
    Felsch,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("coset budget of {budget} exhausted ({defined} cosets defined, {live} live)")]
    BudgetExhausted { budget: usize, defined: usize, live: usize },
}

/// A complete coset table. Cosets are `0..len`, coset 0 is the subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    names: Vec<String>,
    /// Column of each generator and of its inverse.
    gen_col: Vec<(usize, usize)>,
    inv_col: Vec<usize>,
    ncols: usize,
    rows: Vec<u32>,
    /// Cosets defined during the run, dead or alive.
    total_defined: usize,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows.len() / self.ncols
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn total_defined(&self) -> usize {
        self.total_defined
    }

    pub fn n_gens(&self) -> usize {
        self.gen_col.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn col(&self, l: Letter) -> usize {
        let (g, gi) = self.gen_col[l.gen];
        if l.inverse {
            gi
        } else {
            g
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn inverse_col(&self, col: usize) -> usize {
        self.inv_col[col]
    }

    pub fn act_col(&self, coset: usize, col: usize) -> usize {
        self.rows[coset * self.ncols + col] as usize
    }

    /// Image of `coset` under letter `l`.
    pub fn act(&self, coset: usize, l: Letter) -> usize {
        self.act_col(coset, self.col(l))
    }

    pub fn act_word(&self, coset: usize, w: &[Letter]) -> usize {
        w.iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Each generator permutes the cosets and every relator fixes every coset.
    pub fn verify(&self, p: &Presentation) -> bool {
        let n = self.len();
        for g in 0..self.n_gens() {
            let mut hit = vec![false; n];
            for c in 0..n {
                let d = self.act(c, Letter::new(g));
                if d >= n || hit[d] || self.act(d, Letter::new(g).inv()) != c {
                    return false;
                }
                hit[d] = true;
            }
        }
        p.relators().iter().all(|r| (0..n).all(|c| self.act_word(c, r) == c))
    }

    /// `coset,<gen>,...` with 1-based coset numbers.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("coset");
        for n in &self.names {
            s.push(',');
            s.push_str(n);
        }
        s.push('\n');
        for c in 0..self.len() {
            let _ = write!(s, "{}", c + 1);
            for g in 0..self.n_gens() {
                let _ = write!(s, ",{}", self.act(c, Letter::new(g)) + 1);
            }
            s.push('\n');
        }
        s
    }
}

/// Enumerates cosets of the subgroup generated by `subgroup` in the group
/// presented by `p`, defining at most `budget` live cosets.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup: &[Word],
    budget: usize,
    strategy: Strategy,
) -> Result<CosetTable, EnumerationError> {
    let mut e = Enumerator::new(p, subgroup, budget);
    match strategy {
        Strategy::Hlt => e.run_hlt()?,
        Strategy::Felsch => e.run_felsch()?,
    }
    Ok(e.finish(p))
}

struct Full;

struct Enumerator {
    ncols: usize,
    gen_col: Vec<(usize, usize)>,
    inv_col: Vec<usize>,
    relators: Vec<Vec<usize>>,
    subgroup: Vec<Vec<usize>>,
    /// Cyclic conjugates of relators and their inverses, by first column.
    conjugates: Vec<Vec<Vec<usize>>>,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    budget: usize,
    deductions: Vec<(u32, usize)>,
    merge_queue: VecDeque<u32>,
}

impl Enumerator {
    fn new(p: &Presentation, subgroup: &[Word], budget: usize) -> Self {
        let mut gen_col = Vec::new();
        let mut inv_col = Vec::new();
        for g in 0..p.n_gens() {
            let c = inv_col.len();
            if p.is_involution(g) {
                inv_col.push(c);
                gen_col.push((c, c));
            } else {
                inv_col.push(c + 1);
                inv_col.push(c);
                gen_col.push((c, c + 1));
            }
        }
        let ncols = inv_col.len();
        let to_cols = |w: &[Letter]| -> Vec<usize> {
            w.iter()
                .map(|l| if l.inverse { gen_col[l.gen].1 } else { gen_col[l.gen].0 })
                .collect()
        };
        // With an involution column, g^2 holds by construction.
        let relators: Vec<Vec<usize>> = p
            .relators()
            .iter()
            .filter(|r| !(r.len() == 2 && r[0].gen == r[1].gen && p.is_involution(r[0].gen)))
            .map(|r| to_cols(r))
            .collect();
        let subgroup = subgroup.iter().map(|w| to_cols(&cyclic_reduce(w))).collect();
        let mut conjugates = vec![Vec::new(); ncols];
        for r in p.relators() {
            for w in [r.clone(), invert_word(r)] {
                let cols = to_cols(&w);
                for s in 0..cols.len() {
                    let mut rot = cols[s..].to_vec();
                    rot.extend_from_slice(&cols[..s]);
                    if !conjugates[rot[0]].contains(&rot) {
                        conjugates[rot[0]].push(rot);
                    }
                }
            }
        }
        let mut e = Enumerator {
            ncols,
            gen_col,
            inv_col,
            relators,
            subgroup,
            conjugates,
            table: Vec::new(),
            parent: Vec::new(),
            live: 0,
            budget: budget.max(1),
            deductions: Vec::new(),
            merge_queue: VecDeque::new(),
        };
        e.new_row();
        e
    }

    fn new_row(&mut self) -> u32 {
        let c = self.parent.len() as u32;
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.parent.push(c);
        self.live += 1;
        c
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn exhausted(&self) -> EnumerationError {
        EnumerationError::BudgetExhausted {
            budget: self.budget,
            defined: self.parent.len(),
            live: self.live,
        }
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, Full> {
        if self.live >= self.budget {
            return Err(Full);
        }
        let d = self.new_row();
        self.set(c, x, d);
        self.set(d, self.inv_col[x], c);
        self.deductions.push((c, x));
        Ok(d)
    }

    fn deduce(&mut self, f: u32, x: usize, b: u32) {
        self.set(f, x, b);
        self.set(b, self.inv_col[x], f);
        self.deductions.push((f, x));
    }

    /// Traces `w` from `c` in both directions, defining cosets to close
    /// any gap when `fill` holds.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> Result<(), Full> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        loop {
            while i <= j && self.get(f, w[i as usize]) != NONE {
                f = self.get(f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, self.inv_col[w[j as usize]]) != NONE {
                b = self.get(b, self.inv_col[w[j as usize]]);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.deduce(f, w[i as usize], b);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    /// First live coset with an undefined entry.
    fn first_gap(&self) -> Option<(u32, usize)> {
        (0..self.parent.len() as u32)
            .filter(|&c| self.is_live(c))
            .find_map(|c| (0..self.ncols).find(|&x| self.get(c, x) == NONE).map(|x| (c, x)))
    }

    fn find(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != root {
            let next = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.parent[drop as usize] = keep;
        self.live -= 1;
        self.merge_queue.push_back(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(g) = self.merge_queue.pop_front() {
            for x in 0..self.ncols {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                let xi = self.inv_col[x];
                if self.get(d, xi) == g {
                    self.set(d, xi, NONE);
                }
                let mu = self.find(g);
                let nu = self.find(d);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                    continue;
                }
                let nu_xi = self.get(nu, xi);
                if nu_xi != NONE {
                    self.merge(mu, nu_xi);
                    continue;
                }
                self.set(mu, x, nu);
                self.set(nu, xi, mu);
                self.deductions.push((mu, x));
            }
        }
    }

    fn run_hlt(&mut self) -> Result<(), EnumerationError> {
        self.deductions.clear();
        for w in self.subgroup.clone() {
            if self.scan(0, &w, true).is_err() {
                return Err(self.exhausted());
            }
        }
        let relators = self.relators.clone();
        let mut c: u32 = 0;
        loop {
            while (c as usize) < self.parent.len() {
                if self.is_live(c) && self.fill_row(c, &relators).is_err() {
                    self.lookahead(&relators);
                    if self.live >= self.budget {
                        return Err(self.exhausted());
                    }
                    continue;
                }
                self.deductions.clear();
                c += 1;
            }
            match self.first_gap() {
                None => return Ok(()),
                Some((gap, _)) => c = gap,
            }
        }
    }

    fn fill_row(&mut self, c: u32, relators: &[Vec<usize>]) -> Result<(), Full> {
        for r in relators {
            self.scan(c, r, true)?;
            if !self.is_live(c) {
                return Ok(());
            }
        }
        for x in 0..self.ncols {
            if self.get(c, x) == NONE {
                self.define(c, x)?;
            }
        }
        Ok(())
    }

    fn lookahead(&mut self, relators: &[Vec<usize>]) {
        for c in 0..self.parent.len() as u32 {
            if !self.is_live(c) {
                continue;
            }
            for r in relators {
                if !self.is_live(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
        }
        self.deductions.clear();
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let conj = std::mem::take(&mut self.conjugates[x]);
            for w in &conj {
                if !self.is_live(c) {
                    break;
                }
                let _ = self.scan(c, w, false);
            }
            self.conjugates[x] = conj;
            let xi = self.inv_col[x];
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == NONE || !self.is_live(d) {
                continue;
            }
            let conj = std::mem::take(&mut self.conjugates[xi]);
            for w in &conj {
                if !self.is_live(d) {
                    break;
                }
                let _ = self.scan(d, w, false);
            }
            self.conjugates[xi] = conj;
        }
    }

    fn run_felsch(&mut self) -> Result<(), EnumerationError> {
        for w in self.subgroup.clone() {
            if self.scan(0, &w, true).is_err() {
                return Err(self.exhausted());
            }
        }
        self.process_deductions();
        let mut c: u32 = 0;
        let mut x = 0usize;
        loop {
            while (c as usize) < self.parent.len() && (!self.is_live(c) || self.get(c, x) != NONE) {
                x += 1;
                if x == self.ncols || !self.is_live(c) {
                    x = 0;
                    c += 1;
                }
            }
            if c as usize >= self.parent.len() {
                match self.first_gap() {
                    None => return Ok(()),
                    Some(gap) => (c, x) = gap,
                }
            }
            if self.define(c, x).is_err() {
                return Err(self.exhausted());
            }
            self.process_deductions();
        }
    }

    /// Drops dead cosets and renumbers breadth first from coset 0.
    fn finish(mut self, p: &Presentation) -> CosetTable {
        let total = self.parent.len();
        let mut order = vec![NONE; total];
        let mut seq: Vec<u32> = vec![0];
        order[0] = 0;
        let mut i = 0;
        while i < seq.len() {
            let c = seq[i];
            for x in 0..self.ncols {
                let d = self.find(self.get(c, x));
                if order[d as usize] == NONE {
                    order[d as usize] = seq.len() as u32;
                    seq.push(d);
                }
            }
            i += 1;
        }
        let mut rows = Vec::with_capacity(seq.len() * self.ncols);
        for &c in &seq {
            for x in 0..self.ncols {
                let d = self.find(self.get(c, x));
                rows.push(order[d as usize]);
            }
        }
        CosetTable {
            names: p.names().to_vec(),
            gen_col: self.gen_col,
            inv_col: self.inv_col,
            ncols: self.ncols,
            rows,
            total_defined: total,
        }
    }
}
