//! Commutative algebras given by structure constants.

mod fusion;
mod ideals;
mod jordan;
mod morphism;

use serde::{Deserialize, Serialize};

use crate::linalg::{Matrix, Vector};
use crate::scalar::{FieldSpec, Scalar};

pub use fusion::{AxisReport, AxisViolation, EigenDecomposition, FusionRules};
pub use ideals::Quotient;
pub use jordan::{brute_force_jordan, JordanVerdict};
pub use morphism::{direct_sum, is_homomorphism, iso_check};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("vector has length {found}, algebra has dimension {dim}")]
    Dimension { dim: usize, found: usize },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("element is not an axis: {0}")]
    NotAxis(String),
    #[error("bad algebra document: {0}")]
    Format(String),
}

/// Sparse coordinates sorted by basis index, zero entries omitted.
pub type Sparse = Vec<(usize, Scalar)>;

/// A commutative algebra on a labelled basis. Only products `b_i b_j` with
/// `i <= j` are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraTable {
    field: FieldSpec,
    labels: Vec<String>,
    products: Vec<Sparse>,
}

fn tri(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    j * (j + 1) / 2 + i
}

pub(crate) fn to_sparse(v: &Vector) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub(crate) fn to_dense(field: FieldSpec, dim: usize, s: &Sparse) -> Vector {
    let mut v = Vector::zeros(field, dim);
    for (i, c) in s {
        v[*i] = c.clone();
    }
    v
}

impl AlgebraTable {
    /// The zero algebra on the given labels.
    pub fn new(field: FieldSpec, labels: Vec<String>) -> Self {
        let d = labels.len();
        AlgebraTable {
            field,
            labels,
            products: vec![Vec::new(); d * (d + 1) / 2],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        Vector::zeros(self.field, self.dim())
    }

    /// Sets `b_i b_j = b_j b_i = v`.
    pub fn set_product(&mut self, i: usize, j: usize, v: &Vector) {
        assert_eq!(v.len(), self.dim(), "product length");
        self.products[tri(i, j)] = to_sparse(v);
    }

    pub fn set_product_sparse(&mut self, i: usize, j: usize, mut s: Sparse) {
        s.retain(|(_, c)| !c.is_zero());
        s.sort_by_key(|(k, _)| *k);
        self.products[tri(i, j)] = s;
    }

    pub fn product_sparse(&self, i: usize, j: usize) -> &Sparse {
        &self.products[tri(i, j)]
    }

    pub fn product(&self, i: usize, j: usize) -> Vector {
        to_dense(self.field, self.dim(), self.product_sparse(i, j))
    }

    fn check_len(&self, v: &Vector) -> Result<(), AlgebraError> {
        if v.len() != self.dim() {
            return Err(AlgebraError::Dimension {
                dim: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn try_mul(&self, x: &Vector, y: &Vector) -> Result<Vector, AlgebraError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul(x, y))
    }

    /// Bilinear extension of the table. Panics on length mismatch.
    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        assert!(x.len() == self.dim() && y.len() == self.dim(), "vector length mismatch");
        let sx = to_sparse(x);
        let sy = to_sparse(y);
        to_dense(self.field, self.dim(), &self.mul_sparse(&sx, &sy))
    }

    pub(crate) fn mul_sparse(&self, x: &Sparse, y: &Sparse) -> Sparse {
        let mut acc: Vec<Option<Scalar>> = vec![None; self.dim()];
        for (i, a) in x {
            for (j, b) in y {
                let p = self.product_sparse(*i, *j);
                if p.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in p {
                    let term = &ab * c;
                    match &mut acc[*k] {
                        Some(s) => *s += &term,
                        slot => *slot = Some(term),
                    }
                }
            }
        }
        acc.into_iter()
            .enumerate()
            .filter_map(|(k, s)| s.filter(|s| !s.is_zero()).map(|s| (k, s)))
            .collect()
    }

    /// `ad(x)`, with `ad(x) * y = x y` for column vectors `y`.
    pub fn ad(&self, x: &Vector) -> Matrix {
        let sx = to_sparse(x);
        let cols: Vec<Vector> = (0..self.dim())
            .map(|j| {
                to_dense(
                    self.field,
                    self.dim(),
                    &self.mul_sparse(&sx, &vec![(j, self.field.one())]),
                )
            })
            .collect();
        Matrix::from_column_vectors(self.field, self.dim(), &cols)
    }

    pub fn is_idempotent(&self, e: &Vector) -> bool {
        self.mul(e, e) == *e
    }

    /// A vector `u` with `u b_i = b_i` for every basis element, if any.
    pub fn find_unit(&self) -> Option<Vector> {
        let d = self.dim();
        // Row (j, k): sum_i u_i (b_i b_j)_k = delta_jk.
        let mut m = Matrix::zeros(self.field, d * d, d);
        let mut rhs = Vector::zeros(self.field, d * d);
        for j in 0..d {
            rhs[j * d + j] = self.field.one();
            for i in 0..d {
                for (k, c) in self.product_sparse(i, j) {
                    m[(j * d + k, i)] = c.clone();
                }
            }
        }
        m.solve(&rhs)
    }

    /// Exchange form: field, labels and the nonzero upper-triangular products.
    pub fn to_json(&self) -> AlgebraJson {
        let mut products = Vec::new();
        for j in 0..self.dim() {
            for i in 0..=j {
                let p = self.product_sparse(i, j);
                if !p.is_empty() {
                    products.push(ProductEntry { i, j, terms: p.clone() });
                }
            }
        }
        products.sort_by_key(|e| (e.i, e.j));
        AlgebraJson {
            field: self.field,
            dim: self.dim(),
            labels: self.labels.clone(),
            products,
        }
    }

    pub fn from_json(doc: &AlgebraJson) -> Result<Self, AlgebraError> {
        let fmt = |m: String| AlgebraError::Format(m);
        if doc.labels.len() != doc.dim {
            return Err(fmt(format!("{} labels for dimension {}", doc.labels.len(), doc.dim)));
        }
        let mut a = AlgebraTable::new(doc.field, doc.labels.clone());
        for e in &doc.products {
            if e.i >= doc.dim || e.j >= doc.dim || e.terms.iter().any(|(k, _)| *k >= doc.dim) {
                return Err(fmt(format!("index out of range in product ({}, {})", e.i, e.j)));
            }
            if e.terms.iter().any(|(_, c)| c.field() != doc.field) {
                return Err(fmt(format!(
                    "scalar outside {} in product ({}, {})",
                    doc.field, e.i, e.j
                )));
            }
            a.set_product_sparse(e.i, e.j, e.terms.clone());
        }
        Ok(a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    /// `(k, c)`: coefficient `c` of basis element `k`.
    pub terms: Vec<(usize, Scalar)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    pub products: Vec<ProductEntry>,
}
