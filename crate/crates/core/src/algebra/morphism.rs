//! Linear maps between algebras.

use super::{AlgebraTable, Sparse};
use crate::linalg::Matrix;

/// `f` is `dim B x dim A`, column `i` the image of `a_i`; checks
/// `f(a_i a_j) = f(a_i) f(a_j)` for `i <= j`.
pub fn is_homomorphism(a: &AlgebraTable, b: &AlgebraTable, f: &Matrix) -> bool {
    if f.rows() != b.dim() || f.cols() != a.dim() || a.field() != b.field() {
        return false;
    }
    let images: Vec<_> = (0..a.dim()).map(|i| f.column(i)).collect();
    (0..a.dim()).all(|j| (0..=j).all(|i| f.mul_vec(&a.product(i, j)) == b.mul(&images[i], &images[j])))
}

/// A bijective homomorphism.
pub fn iso_check(a: &AlgebraTable, b: &AlgebraTable, f: &Matrix) -> bool {
    a.dim() == b.dim() && f.is_square() && f.inverse().is_some() && is_homomorphism(a, b, f)
}

/// `A ⊕ B` with labels kept and the factors annihilating each other.
pub fn direct_sum(a: &AlgebraTable, b: &AlgebraTable) -> AlgebraTable {
    assert_eq!(a.field(), b.field(), "field mismatch");
    let da = a.dim();
    let labels = a.labels().iter().chain(b.labels()).cloned().collect();
    let mut s = AlgebraTable::new(a.field(), labels);
    for j in 0..da {
        for i in 0..=j {
            s.set_product_sparse(i, j, a.product_sparse(i, j).clone());
        }
    }
    for j in 0..b.dim() {
        for i in 0..=j {
            let shifted: Sparse = b
                .product_sparse(i, j)
                .iter()
                .map(|(k, c)| (k + da, c.clone()))
                .collect();
            s.set_product_sparse(i + da, j + da, shifted);
        }
    }
    s
}
