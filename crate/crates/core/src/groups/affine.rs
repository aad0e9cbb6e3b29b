//! `F_k^m ⋊ Sym(m)` as block matrices `[[P, 0], [v, 1]]` acting on row
//! vectors, taken modulo the central diagonal translation.

use super::{Group, GroupRealization, Perm};

/// A coset of `<n>` with canonical representative: `shift[0] = 0`.
///
/// `perm[i] = j` means row `i` of `P` is the unit vector `e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElem {
    perm: Vec<u8>,
    shift: Vec<u8>,
}

impl AffineElem {
    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn shift(&self) -> &[u8] {
        &self.shift
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineGroup {
    k: u8,
    m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AffineError {
    #[error("expected a {0}x{0} matrix")]
    Shape(usize),
    #[error("matrix is not of block shape [[P, 0], [v, 1]] with P a permutation")]
    NotAffinePermutation,
}

impl AffineGroup {
    /// `m` is the module dimension; matrices are `(m+1) x (m+1)` over `F_k`.
    pub fn new(k: u8, m: usize) -> Self {
        assert!(k >= 2, "modulus at least 2");
        assert!(m >= 1);
        AffineGroup { k, m }
    }

    pub fn modulus(&self) -> u8 {
        self.k
    }

    pub fn module_dim(&self) -> usize {
        self.m
    }

    fn canonical(&self, perm: Vec<u8>, mut shift: Vec<u8>) -> AffineElem {
        let off = shift[0];
        for s in &mut shift {
            *s = (*s + self.k - off) % self.k;
        }
        AffineElem { perm, shift }
    }

    pub fn element(&self, perm: &Perm, shift: &[i64]) -> AffineElem {
        assert_eq!(perm.degree(), self.m);
        assert_eq!(shift.len(), self.m);
        let k = self.k as i64;
        self.canonical(
            perm.images().iter().map(|&x| x as u8).collect(),
            shift.iter().map(|&s| s.rem_euclid(k) as u8).collect(),
        )
    }

    /// Reads an integer matrix, entries reduced mod `k`.
    pub fn from_matrix(&self, rows: &[Vec<i64>]) -> Result<AffineElem, AffineError> {
        let size = self.m + 1;
        if rows.len() != size || rows.iter().any(|r| r.len() != size) {
            return Err(AffineError::Shape(size));
        }
        let k = self.k as i64;
        let red = |x: i64| x.rem_euclid(k);
        let mut perm = Vec::with_capacity(self.m);
        let mut used = vec![false; self.m];
        for row in &rows[..self.m] {
            if red(row[self.m]) != 0 {
                return Err(AffineError::NotAffinePermutation);
            }
            let ones: Vec<usize> = (0..self.m).filter(|&j| red(row[j]) != 0).collect();
            match ones.as_slice() {
                [j] if red(row[*j]) == 1 && !used[*j] => {
                    used[*j] = true;
                    perm.push(*j as u8);
                }
                _ => return Err(AffineError::NotAffinePermutation),
            }
        }
        let last = &rows[self.m];
        if red(last[self.m]) != 1 {
            return Err(AffineError::NotAffinePermutation);
        }
        let shift = last[..self.m].iter().map(|&x| red(x) as u8).collect();
        Ok(self.canonical(perm, shift))
    }

    /// Canonical representative as an integer matrix with entries in `0..k`.
    pub fn to_matrix(&self, e: &AffineElem) -> Vec<Vec<i64>> {
        let size = self.m + 1;
        let mut out = vec![vec![0; size]; size];
        for (i, &j) in e.perm.iter().enumerate() {
            out[i][j as usize] = 1;
        }
        for (j, &s) in e.shift.iter().enumerate() {
            out[self.m][j] = s as i64;
        }
        out[self.m][self.m] = 1;
        out
    }
}

impl Group for AffineGroup {
    type Elem = AffineElem;

    fn identity(&self) -> AffineElem {
        AffineElem {
            perm: (0..self.m as u8).collect(),
            shift: vec![0; self.m],
        }
    }

    // [[P,0],[v,1]] [[Q,0],[w,1]] = [[PQ,0],[vQ + w,1]]
    fn mul(&self, a: &AffineElem, b: &AffineElem) -> AffineElem {
        let perm = a.perm.iter().map(|&i| b.perm[i as usize]).collect();
        let mut shift = b.shift.clone();
        for (i, &v) in a.shift.iter().enumerate() {
            let j = b.perm[i] as usize;
            shift[j] = (shift[j] + v) % self.k;
        }
        self.canonical(perm, shift)
    }

    fn inverse(&self, a: &AffineElem) -> AffineElem {
        // [[P^-1, 0], [-v P^-1, 1]]
        let mut perm = vec![0u8; self.m];
        for (i, &j) in a.perm.iter().enumerate() {
            perm[j as usize] = i as u8;
        }
        let mut shift = vec![0u8; self.m];
        for (i, &v) in a.shift.iter().enumerate() {
            shift[perm[i] as usize] = (self.k - v) % self.k;
        }
        self.canonical(perm, shift)
    }
}

/// `W_k(Ã_n)`: generated by the adjacent swaps and the affine reflection
/// swapping the first and last coordinate with translation `e_1 - e_{n+1}`.
/// For `n = 3` these are named `a, b, c, d`; otherwise `s1..sn, t`.
#[derive(Debug, Clone)]
pub struct WkAffine {
    pub realization: GroupRealization<AffineGroup>,
    /// Translation by `e_1`, which together with the generators spans the
    /// whole quotient of `F_k^{n+1} ⋊ Sym(n+1)`.
    pub translation: AffineElem,
}

impl WkAffine {
    /// The full quotient `F_k^{n+1} ⋊ Sym(n+1) / <n>`, which may properly
    /// contain the group generated by `D`.
    pub fn ambient(&self) -> GroupRealization<AffineGroup> {
        let r = &self.realization;
        let mut gens = r.generators().to_vec();
        gens.push(self.translation.clone());
        let mut names = r.generator_names().to_vec();
        names.push("u".into());
        GroupRealization::new(*r.group(), gens, names, r.d().to_vec())
    }
}

pub fn build_wk_aff_a(k: u8, n: usize) -> WkAffine {
    assert!(n >= 2);
    let m = n + 1;
    let group = AffineGroup::new(k, m);
    let zero = vec![0i64; m];
    let mut gens: Vec<AffineElem> = (0..n)
        .map(|i| group.element(&Perm::transposition(m, i, i + 1), &zero))
        .collect();
    let mut v = zero.clone();
    v[0] = 1;
    v[n] = -1;
    gens.push(group.element(&Perm::transposition(m, 0, n), &v));
    let names: Vec<String> = if n == 3 {
        ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("s{i}")).chain(["t".to_string()]).collect()
    };
    let mut u = zero;
    u[0] = 1;
    let translation = group.element(&Perm::identity(m), &u);
    let seed = gens[0].clone();
    WkAffine {
        realization: GroupRealization::from_class(group, gens, names, &seed),
        translation,
    }
}
