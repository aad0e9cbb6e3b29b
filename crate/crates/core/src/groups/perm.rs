use std::fmt;

use super::{Group, GroupRealization};

/// A permutation of `0..n` as its image list. Composition is left to right:
/// `x^(gh) = (x^g)^h`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Panics unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(!std::mem::replace(&mut seen[i as usize], true), "not a permutation");
        }
        Perm(images)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, j);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Nontrivial cycles, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.image(x);
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// The symmetric group on `0..degree`; elements are [`Perm`]s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermGroup {
    pub degree: usize,
}

impl Group for PermGroup {
    type Elem = Perm;

    fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.then(b)
    }

    fn inverse(&self, a: &Perm) -> Perm {
        a.inverse()
    }
}

/// `Sym(n)` generated by adjacent transpositions; `D` is every
/// transposition `(i j)`, `i < j`, in lexicographic order.
pub fn build_sym(n: usize) -> GroupRealization<PermGroup> {
    assert!(n >= 2, "Sym(n) needs n >= 2");
    let group = PermGroup { degree: n };
    let gens: Vec<Perm> = (0..n - 1).map(|i| Perm::transposition(n, i, i + 1)).collect();
    let names = (0..n - 1).map(|i| format!("s{}", i + 1)).collect();
    let mut d = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            d.push(Perm::transposition(n, i, j));
        }
    }
    GroupRealization::new(group, gens, names, d)
}

/// `3^2:2` on the nine vectors of `F_3^2` (index `x + 3y`). `D` holds the
/// maps `v -> c - v`, ordered by the index of `c`.
pub fn build_3sq2() -> GroupRealization<PermGroup> {
    let reflect = |c: usize| {
        let (cx, cy) = (c % 3, c / 3);
        Perm::from_images(
            (0..9)
                .map(|v| {
                    let (x, y) = (v % 3, v / 3);
                    (((cx + 3 - x) % 3) + 3 * ((cy + 3 - y) % 3)) as u32
                })
                .collect(),
        )
    };
    let d: Vec<Perm> = (0..9).map(reflect).collect();
    let gens = vec![d[0].clone(), d[1].clone(), d[3].clone()];
    let names = vec!["r0".into(), "r1".into(), "r3".into()];
    GroupRealization::new(PermGroup { degree: 9 }, gens, names, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fischer::{build_p2_dual, build_p3, pts_isomorphic};
    use crate::groups::{GroupError, DEFAULT_ELEMENT_CAP};

    #[test]
    fn symmetric_groups() {
        let s2 = build_sym(2);
        assert_eq!(s2.order(DEFAULT_ELEMENT_CAP).unwrap(), 2);
        assert_eq!(s2.d().len(), 1);
        let s4 = build_sym(4);
        assert_eq!(s4.order(DEFAULT_ELEMENT_CAP).unwrap(), 24);
        assert_eq!(s4.d().len(), 6);
        assert_eq!(build_sym(5).d().len(), 10);
        assert!(s4.is_3transposition().is_ok());
        let g = s4.gamma().unwrap();
        assert!(pts_isomorphic(&g, &build_p2_dual()).is_some());
    }

    #[test]
    fn single_transposition_is_not_a_class() {
        let s4 = build_sym(4);
        let t = Perm::transposition(4, 0, 1);
        let bad = GroupRealization::new(
            PermGroup { degree: 4 },
            s4.generators().to_vec(),
            s4.generator_names().to_vec(),
            vec![t],
        );
        assert!(matches!(bad.is_3transposition(), Err(GroupError::NotClosed { .. })));
    }

    #[test]
    fn products_in_sym4() {
        let s4 = build_sym(4);
        let c = Perm::transposition(4, 0, 1);
        assert_eq!(s4.order_of_product(&c, &c), 1);
        let double = c.then(&Perm::transposition(4, 2, 3));
        assert_eq!(s4.order_of_product(&double, &c), 2);
    }

    #[test]
    fn three_squared_two() {
        let g = build_3sq2();
        assert_eq!(g.order(DEFAULT_ELEMENT_CAP).unwrap(), 18);
        assert_eq!(g.d().len(), 9);
        for (i, c) in g.d().iter().enumerate() {
            for (j, d) in g.d().iter().enumerate() {
                if i != j {
                    assert_eq!(g.order_of_product(c, d), 3);
                }
            }
        }
        assert!(g.is_3transposition().is_ok());
        assert!(pts_isomorphic(&g.gamma().unwrap(), &build_p3()).is_some());
        assert_eq!(g.conj_class(&g.d()[4]).len(), 9);
    }

    #[test]
    fn kernel_is_center() {
        for g in [build_sym(4), build_3sq2()] {
            let mut k = g.conjugation_kernel(DEFAULT_ELEMENT_CAP).unwrap();
            let mut z = g.center(DEFAULT_ELEMENT_CAP).unwrap();
            k.sort();
            z.sort();
            assert_eq!(k, z);
        }
    }
}
