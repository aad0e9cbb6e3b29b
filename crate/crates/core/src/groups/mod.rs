//! Concrete groups with a distinguished class of involutions.

mod affine;
mod coset_group;
mod perm;
mod presentation;
mod product;
mod todd_coxeter;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

pub use affine::{build_wk_aff_a, AffineElem, AffineGroup, WkAffine};
pub use coset_group::CosetGroup;
pub use perm::{build_3sq2, build_sym, Perm, PermGroup};
pub use presentation::{free_reduce, invert_word, Letter, ParseError, Presentation, Word, G4_TEXT, G5_TEXT};
pub use product::{generators_match, ProductGroup};
pub use todd_coxeter::{
    coset_budget_from_env, todd_coxeter, CosetTable, EnumerationError, Strategy, DEFAULT_COSET_BUDGET,
};

use crate::fischer::PartialTripleSystem;

/// Default cap on enumerated elements.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

pub trait Group {
    type Elem: Clone + Eq + Hash + Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;

    /// `g^-1 a g`.
    fn conj(&self, a: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(&self.inverse(g), a), g)
    }

    /// Multiplicative order, or `None` past `cap`.
    fn order_of(&self, g: &Self::Elem, cap: usize) -> Option<usize> {
        let id = self.identity();
        let mut x = g.clone();
        for k in 1..=cap {
            if x == id {
                return Some(k);
            }
            x = self.mul(&x, g);
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("more than {0} elements")]
    TooLarge(usize),
    #[error("D[{0}] is not an involution")]
    NotInvolution(usize),
    #[error("D[{d}] conjugated by generator {generator} leaves D")]
    NotClosed { d: usize, generator: usize },
    #[error("generator {0} is not in the subgroup generated by D")]
    NotGenerated(usize),
    #[error("D[{c}] * D[{d}] has order {order}")]
    ProductOrder { c: usize, d: usize, order: usize },
}

/// A group, a generating list and the involution class `D`. Points of
/// derived geometries are indices into `D`.
#[derive(Debug, Clone)]
pub struct GroupRealization<G: Group> {
    group: G,
    generators: Vec<G::Elem>,
    names: Vec<String>,
    d: Vec<G::Elem>,
    d_index: HashMap<G::Elem, usize>,
}

impl<G: Group> GroupRealization<G> {
    pub fn new(group: G, generators: Vec<G::Elem>, names: Vec<String>, d: Vec<G::Elem>) -> Self {
        assert_eq!(generators.len(), names.len(), "one name per generator");
        let d_index = d.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        GroupRealization {
            group,
            generators,
            names,
            d,
            d_index,
        }
    }

    /// `D` is the conjugacy class of `seed`, in discovery order.
    pub fn from_class(group: G, generators: Vec<G::Elem>, names: Vec<String>, seed: &G::Elem) -> Self {
        let d = conj_orbit(&group, &generators, seed);
        Self::new(group, generators, names, d)
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn generators(&self) -> &[G::Elem] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn generator(&self, name: &str) -> Option<&G::Elem> {
        self.names.iter().position(|n| n == name).map(|i| &self.generators[i])
    }

    pub fn d(&self) -> &[G::Elem] {
        &self.d
    }

    pub fn d_position(&self, e: &G::Elem) -> Option<usize> {
        self.d_index.get(e).copied()
    }

    /// Orbit of `g` under conjugation by the generators, in discovery order.
    pub fn conj_class(&self, g: &G::Elem) -> Vec<G::Elem> {
        conj_orbit(&self.group, &self.generators, g)
    }

    pub fn order_of(&self, g: &G::Elem) -> usize {
        self.group
            .order_of(g, DEFAULT_ELEMENT_CAP)
            .expect("element order beyond the enumeration cap")
    }

    pub fn order_of_product(&self, c: &G::Elem, d: &G::Elem) -> usize {
        self.order_of(&self.group.mul(c, d))
    }

    /// All elements, breadth first from the identity.
    pub fn elements(&self, cap: usize) -> Result<Vec<G::Elem>, GroupError> {
        closure(&self.group, &self.generators, cap)
    }

    pub fn order(&self, cap: usize) -> Result<usize, GroupError> {
        self.elements(cap).map(|e| e.len())
    }

    /// Involutions, conjugation-closed, generating, pairwise products of
    /// order at most 3.
    pub fn is_3transposition(&self) -> Result<(), GroupError> {
        let id = self.group.identity();
        for (i, x) in self.d.iter().enumerate() {
            if *x == id || self.group.mul(x, x) != id {
                return Err(GroupError::NotInvolution(i));
            }
        }
        for (i, x) in self.d.iter().enumerate() {
            for (j, g) in self.generators.iter().enumerate() {
                if !self.d_index.contains_key(&self.group.conj(x, g)) {
                    return Err(GroupError::NotClosed { d: i, generator: j });
                }
            }
        }
        if !self.generators.iter().all(|g| self.d_index.contains_key(g)) {
            let sub: HashSet<G::Elem> = closure(&self.group, &self.d, DEFAULT_ELEMENT_CAP)?
                .into_iter()
                .collect();
            if let Some(j) = self.generators.iter().position(|g| !sub.contains(g)) {
                return Err(GroupError::NotGenerated(j));
            }
        }
        for c in 0..self.d.len() {
            for d in c + 1..self.d.len() {
                let order = self.group.order_of(&self.group.mul(&self.d[c], &self.d[d]), 4);
                if order.is_none() {
                    let order = self.order_of_product(&self.d[c], &self.d[d]);
                    return Err(GroupError::ProductOrder { c, d, order });
                }
            }
        }
        Ok(())
    }

    /// The Fischer space on `D`: lines `{c, d, c^d}` whenever `|cd| = 3`.
    pub fn gamma(&self) -> Result<PartialTripleSystem, GroupError> {
        self.is_3transposition()?;
        Ok(self.gamma_unchecked())
    }

    pub(crate) fn gamma_unchecked(&self) -> PartialTripleSystem {
        let mut lines = Vec::new();
        for i in 0..self.d.len() {
            for j in i + 1..self.d.len() {
                let cd = self.group.mul(&self.d[i], &self.d[j]);
                if self.group.order_of(&cd, 3) == Some(3) {
                    let k = self.d_index[&self.group.conj(&self.d[i], &self.d[j])];
                    let mut l = [i, j, k];
                    l.sort_unstable();
                    lines.push(l);
                }
            }
        }
        lines.sort_unstable();
        lines.dedup();
        PartialTripleSystem::new(self.d.len(), lines).expect("3-transposition lines form a triple system")
    }

    /// Elements acting trivially on `D` by conjugation.
    pub fn conjugation_kernel(&self, cap: usize) -> Result<Vec<G::Elem>, GroupError> {
        Ok(self
            .elements(cap)?
            .into_iter()
            .filter(|g| self.d.iter().all(|x| self.group.conj(x, g) == *x))
            .collect())
    }

    pub fn center(&self, cap: usize) -> Result<Vec<G::Elem>, GroupError> {
        Ok(self
            .elements(cap)?
            .into_iter()
            .filter(|g| {
                self.generators
                    .iter()
                    .all(|h| self.group.mul(g, h) == self.group.mul(h, g))
            })
            .collect())
    }
}

/// `gamma_of_group`; see [`GroupRealization::gamma`].
pub fn gamma_of_group<G: Group>(g: &GroupRealization<G>) -> Result<PartialTripleSystem, GroupError> {
    g.gamma()
}

fn conj_orbit<G: Group>(group: &G, gens: &[G::Elem], seed: &G::Elem) -> Vec<G::Elem> {
    let mut seen: HashSet<G::Elem> = HashSet::from([seed.clone()]);
    let mut out = vec![seed.clone()];
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = group.conj(&x, g);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

fn closure<G: Group>(group: &G, gens: &[G::Elem], cap: usize) -> Result<Vec<G::Elem>, GroupError> {
    let id = group.identity();
    let mut seen: HashSet<G::Elem> = HashSet::from([id.clone()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y = group.mul(&out[i], g);
            if seen.insert(y.clone()) {
                if out.len() == cap {
                    return Err(GroupError::TooLarge(cap));
                }
                out.push(y);
            }
        }
        i += 1;
    }
    Ok(out)
}
