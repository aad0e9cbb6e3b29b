//! The regular representation read off a complete coset table over the
//! trivial subgroup: group elements are coset numbers.

use super::presentation::{Letter, Presentation};
use super::todd_coxeter::CosetTable;
use super::{Group, GroupRealization};

/// Element `g` is the coset `1·g`. Products trace a spanning-tree word.
#[derive(Debug, Clone)]
pub struct CosetGroup {
    table: CosetTable,
    /// Tree edge into each coset: `(parent, column)`; the root points to itself.
    tree: Vec<(u32, u16)>,
    inverse: Vec<u32>,
}

impl CosetGroup {
    /// `table` must enumerate cosets of the trivial subgroup.
    pub fn new(table: CosetTable) -> Self {
        let n = table.len();
        let mut tree = vec![(u32::MAX, 0u16); n];
        tree[0] = (0, 0);
        let mut order = vec![0u32];
        let mut i = 0;
        while i < order.len() {
            let c = order[i] as usize;
            for x in 0..table.ncols() {
                let d = table.act_col(c, x);
                if tree[d].0 == u32::MAX {
                    tree[d] = (c as u32, x as u16);
                    order.push(d as u32);
                }
            }
            i += 1;
        }
        let mut g = CosetGroup {
            table,
            tree,
            inverse: Vec::new(),
        };
        g.inverse = (0..n as u32).map(|h| g.trace_inverse(0, h)).collect();
        g
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    /// Columns spelling a word for `h`, from the root.
    fn path(&self, mut h: u32) -> Vec<u16> {
        let mut cols = Vec::new();
        while h != 0 {
            let (p, x) = self.tree[h as usize];
            cols.push(x);
            h = p;
        }
        cols.reverse();
        cols
    }

    fn trace(&self, g: u32, h: u32) -> u32 {
        self.path(h)
            .into_iter()
            .fold(g as usize, |c, x| self.table.act_col(c, x as usize)) as u32
    }

    fn trace_inverse(&self, g: u32, h: u32) -> u32 {
        self.path(h).into_iter().rev().fold(g as usize, |c, x| {
            self.table.act_col(c, self.table.inverse_col(x as usize))
        }) as u32
    }

    /// The element represented by a word in the presentation generators.
    pub fn word(&self, w: &[Letter]) -> u32 {
        self.table.act_word(0, w) as u32
    }

    pub fn generator(&self, g: usize) -> u32 {
        self.word(&[Letter::new(g)])
    }

    /// Realization generated by the presentation generators, with `D` the
    /// conjugacy class of generator `seed`.
    pub fn realization(self, p: &Presentation, seed: usize) -> GroupRealization<CosetGroup> {
        let gens: Vec<u32> = (0..p.n_gens()).map(|g| self.generator(g)).collect();
        let s = gens[seed];
        GroupRealization::from_class(self, gens, p.names().to_vec(), &s)
    }
}

impl Group for CosetGroup {
    type Elem = u32;

    fn identity(&self) -> u32 {
        0
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.trace(*a, *b)
    }

    fn inverse(&self, a: &u32) -> u32 {
        self.inverse[*a as usize]
    }
}
