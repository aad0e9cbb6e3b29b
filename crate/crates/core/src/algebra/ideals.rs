//! Ideals, solvability, quotients and absolute zero divisors.

use super::{AlgebraError, AlgebraTable};
use crate::linalg::{Matrix, Subspace, Vector};

/// `A / S` on the basis of non-pivot coordinates of `S`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: AlgebraTable,
    pub ideal: Subspace,
    /// Ambient coordinate carried by each quotient basis element.
    pub complement: Vec<usize>,
}

impl Quotient {
    /// Image of `v` in the quotient.
    pub fn project(&self, v: &Vector) -> Vector {
        let r = self.ideal.reduce(v);
        Vector::from_entries(r.field(), self.complement.iter().map(|&i| r[i].clone()).collect())
    }

    /// A preimage of a quotient vector, supported on the complement.
    pub fn lift(&self, v: &Vector) -> Vector {
        let mut out = Vector::zeros(v.field(), self.ideal.ambient_dim());
        for (k, &i) in self.complement.iter().enumerate() {
            out[i] = v[k].clone();
        }
        out
    }
}

impl AlgebraTable {
    /// `U_a = 2 ad(a)^2 - ad(a^2)`, so `U_a x = 2 a(ax) - (aa)x`.
    pub fn u_operator(&self, a: &Vector) -> Matrix {
        let ad = self.ad(a);
        let two = self.field.from_i64(2);
        ad.mul(&ad).scale(&two).sub(&self.ad(&self.mul(a, a)))
    }

    /// `a != 0` with `U_a = 0`.
    pub fn is_absolute_zero_divisor(&self, a: &Vector) -> bool {
        !a.is_zero() && self.u_operator(a).is_zero()
    }

    /// Every product of basis elements vanishes.
    pub fn is_trivial(&self) -> bool {
        self.products.iter().all(Vec::is_empty)
    }

    /// Span of `u v` over bases of `s` and `t`.
    pub fn subspace_product(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut prods = Vec::new();
        let tv = t.basis_vectors();
        for u in s.basis_vectors() {
            for v in &tv {
                prods.push(self.mul(&u, v));
            }
        }
        Subspace::from_vectors(self.field, self.dim(), &prods)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let full = Subspace::full(self.field, self.dim());
        s.contains_subspace(&self.subspace_product(s, &full))
    }

    /// `A, A^2, (A^2)^2, ...` until it stabilises; the last entry repeats.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.derived_series_of(&Subspace::full(self.field, self.dim()))
    }

    /// `S, S^2, (S^2)^2, ...` until it stabilises.
    pub fn derived_series_of(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.subspace_product(last, last);
            let stable = next.dim() == last.dim();
            series.push(next);
            if stable {
                return series;
            }
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    /// The derived series of `s` reaches zero.
    pub fn is_solvable_subspace(&self, s: &Subspace) -> bool {
        self.derived_series_of(s).last().is_some_and(Subspace::is_zero)
    }

    /// Structure constants of `A / S`.
    pub fn quotient(&self, s: &Subspace) -> Result<Quotient, AlgebraError> {
        if s.ambient_dim() != self.dim() {
            return Err(AlgebraError::Dimension {
                dim: self.dim(),
                found: s.ambient_dim(),
            });
        }
        if !self.is_ideal(s) {
            return Err(AlgebraError::NotIdeal);
        }
        let complement: Vec<usize> = (0..self.dim()).filter(|i| !s.pivots().contains(i)).collect();
        let labels = complement.iter().map(|&i| self.labels[i].clone()).collect();
        let mut q = Quotient {
            algebra: AlgebraTable::new(self.field, labels),
            ideal: s.clone(),
            complement,
        };
        for (a, &i) in q.complement.iter().enumerate() {
            for (b, &j) in q.complement.iter().enumerate().skip(a) {
                let img = q.project(&self.product(i, j));
                q.algebra.set_product(a, b, &img);
            }
        }
        Ok(q)
    }
}
