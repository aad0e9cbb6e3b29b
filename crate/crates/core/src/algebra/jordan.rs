//! Jordan identity verification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{to_dense, to_sparse, AlgebraTable, Sparse};
use crate::linalg::Vector;

const SAMPLE_SEED: u64 = 0x4a4f_5244_414e;
const SAMPLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JordanVerdict {
    Jordan {
        quadruples: usize,
        samples: usize,
    },
    /// First basis quadruple, in lexicographic `(x, z, y, w)` order, where
    /// `((xz)y)w + ((zw)y)x + ((wx)y)z = (xz)(yw) + (zw)(yx) + (wx)(yz)` fails.
    Linearized {
        x: usize,
        z: usize,
        y: usize,
        w: usize,
        lhs: Vector,
        rhs: Vector,
    },
    /// `(ab)(aa) != a(b(aa))`.
    Quadratic {
        a: Vector,
        b: Vector,
    },
}

impl JordanVerdict {
    pub fn is_jordan(&self) -> bool {
        matches!(self, JordanVerdict::Jordan { .. })
    }
}

fn add_into(acc: &mut [Option<crate::Scalar>], s: &Sparse, negate: bool) {
    for (k, c) in s {
        let c = if negate { -c } else { c.clone() };
        match &mut acc[*k] {
            Some(t) => *t += &c,
            slot => *slot = Some(c),
        }
    }
}

impl AlgebraTable {
    /// The linearized identity on every basis quadruple, then the quadratic
    /// identity on a fixed pseudo-random sample.
    pub fn jordan_check(&self) -> JordanVerdict {
        let d = self.dim();
        let one = self.field.one();
        let basis = |i: usize| -> Sparse { vec![(i, one.clone())] };
        // left[(i, j)][y] = ((b_i b_j) b_y), indexed by the stored pair.
        let left: Vec<Vec<Sparse>> = (0..d * (d + 1) / 2)
            .into_par_iter()
            .map(|t| {
                let p = &self.products[t];
                (0..d).map(|y| self.mul_sparse(p, &basis(y))).collect()
            })
            .collect();
        let lhs_term = |a: usize, b: usize, y: usize, o: usize| -> Sparse {
            self.mul_sparse(&left[super::tri(a, b)][y], &basis(o))
        };
        let first = (0..d).into_par_iter().find_map_first(|x| {
            let mut acc: Vec<Option<crate::Scalar>> = vec![None; d];
            for z in 0..d {
                for y in 0..d {
                    for w in 0..d {
                        acc.iter_mut().for_each(|s| *s = None);
                        add_into(&mut acc, &lhs_term(x, z, y, w), false);
                        add_into(&mut acc, &lhs_term(z, w, y, x), false);
                        add_into(&mut acc, &lhs_term(w, x, y, z), false);
                        let rhs = [
                            self.mul_sparse(self.product_sparse(x, z), self.product_sparse(y, w)),
                            self.mul_sparse(self.product_sparse(z, w), self.product_sparse(y, x)),
                            self.mul_sparse(self.product_sparse(w, x), self.product_sparse(y, z)),
                        ];
                        for r in &rhs {
                            add_into(&mut acc, r, true);
                        }
                        if acc.iter().any(|s| s.as_ref().is_some_and(|s| !s.is_zero())) {
                            return Some((x, z, y, w));
                        }
                    }
                }
            }
            None
        });
        if let Some((x, z, y, w)) = first {
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for (a, b, o) in [(x, z, w), (z, w, x), (w, x, z)] {
                lhs.push(lhs_term(a, b, y, o));
                rhs.push(self.mul_sparse(self.product_sparse(a, b), self.product_sparse(y, o)));
            }
            let sum = |parts: Vec<Sparse>| {
                parts
                    .iter()
                    .fold(self.zero(), |acc, s| acc.add(&to_dense(self.field, d, s)))
            };
            return JordanVerdict::Linearized {
                x,
                z,
                y,
                w,
                lhs: sum(lhs),
                rhs: sum(rhs),
            };
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLES {
            let mut draw = || {
                let v: Vec<i64> = (0..d).map(|_| rng.random_range(-3..=3)).collect();
                Vector::from_i64s(self.field, &v)
            };
            let a = draw();
            let b = draw();
            if !self.quadratic_identity_holds(&a, &b) {
                return JordanVerdict::Quadratic { a, b };
            }
        }
        JordanVerdict::Jordan {
            quadruples: d.pow(4),
            samples: SAMPLES,
        }
    }

    /// `(ab)(aa) = a(b(aa))`.
    pub fn quadratic_identity_holds(&self, a: &Vector, b: &Vector) -> bool {
        let sa = to_sparse(a);
        let sb = to_sparse(b);
        let aa = self.mul_sparse(&sa, &sa);
        let lhs = self.mul_sparse(&self.mul_sparse(&sa, &sb), &aa);
        let rhs = self.mul_sparse(&sa, &self.mul_sparse(&sb, &aa));
        lhs == rhs
    }
}

/// Checks `(ab)(aa) = a(b(aa))` for every pair of vectors with coordinates in
/// `{-1, 0, 1, 2}`. Exponential in the dimension.
pub fn brute_force_jordan(a: &AlgebraTable) -> bool {
    let d = a.dim();
    let digits = [-1i64, 0, 1, 2];
    let vectors: Vec<Vector> = (0..4usize.pow(d as u32))
        .map(|mut code| {
            let coords: Vec<i64> = (0..d)
                .map(|_| {
                    let c = digits[code % 4];
                    code /= 4;
                    c
                })
                .collect();
            Vector::from_i64s(a.field(), &coords)
        })
        .collect();
    vectors
        .par_iter()
        .all(|x| vectors.iter().all(|y| a.quadratic_identity_holds(x, y)))
}
