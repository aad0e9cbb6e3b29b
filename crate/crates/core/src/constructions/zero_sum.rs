//! Symmetric `n x n` matrices with zero row sums under `x ∙ y = (xy + yx)/2`.

use super::projections::jordan_product;
use crate::algebra::AlgebraTable;
use crate::fischer::{roots_of, RootType};
use crate::linalg::{Matrix, Vector};
use crate::scalar::FieldSpec;

/// Index pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn zero_sum_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// `S_ij = e_ii - e_ij - e_ji + e_jj`.
pub fn zero_sum_basis_matrix(field: FieldSpec, n: usize, i: usize, j: usize) -> Matrix {
    Matrix::from_fn(field, n, n, |r, c| {
        if (r, c) == (i, i) || (r, c) == (j, j) {
            field.one()
        } else if (r, c) == (i, j) || (r, c) == (j, i) {
            -field.one()
        } else {
            field.zero()
        }
    })
}

/// Coordinates on the `S_ij`: the coefficient of `S_ij` is `-x_ij`.
/// Panics unless `x` is symmetric with zero row sums.
pub fn zero_sum_coordinates(x: &Matrix) -> Vector {
    let n = x.rows();
    let f = x.field();
    for r in 0..n {
        let row_sum = (0..n).fold(f.zero(), |acc, c| &acc + &x[(r, c)]);
        assert!(row_sum.is_zero(), "row {r} does not sum to zero");
        for c in 0..n {
            assert_eq!(x[(r, c)], x[(c, r)], "not symmetric");
        }
    }
    let coords = zero_sum_pairs(n).into_iter().map(|(i, j)| -&x[(i, j)]).collect();
    Vector::from_entries(f, coords)
}

/// The Jordan algebra on the basis `S_ij`, labelled `s{i}{j}` (1-based).
pub fn zero_sum_sym_algebra(n: usize, field: FieldSpec) -> AlgebraTable {
    assert!(n >= 2);
    let pairs = zero_sum_pairs(n);
    let mats: Vec<Matrix> = pairs
        .iter()
        .map(|&(i, j)| zero_sum_basis_matrix(field, n, i, j))
        .collect();
    let labels = pairs.iter().map(|(i, j)| format!("s{}{}", i + 1, j + 1)).collect();
    let mut a = AlgebraTable::new(field, labels);
    for x in 0..mats.len() {
        for y in x..mats.len() {
            a.set_product(x, y, &zero_sum_coordinates(&jordan_product(&mats[x], &mats[y])));
        }
    }
    a
}

/// Sends point `e_i - e_j` of `Γ(A_{n-1})`, in positive-root order, to
/// `m = S_ij / 2`; a `dim x dim` matrix from the Matsuo algebra to
/// [`zero_sum_sym_algebra`].
pub fn an_isomorphism(n: usize, field: FieldSpec) -> Matrix {
    assert!(n >= 2);
    let roots = roots_of(RootType::A(n - 1));
    let pairs = zero_sum_pairs(n);
    let half = field.ratio(1, 2).expect("odd characteristic");
    let cols: Vec<Vector> = roots
        .positive_roots()
        .iter()
        .map(|r| {
            let i = r.iter().position(|&x| x == 1).expect("e_i - e_j");
            let j = r.iter().position(|&x| x == -1).expect("e_i - e_j");
            let k = pairs
                .iter()
                .position(|&p| p == (i, j))
                .expect("i < j for a positive root");
            Vector::unit(field, pairs.len(), k).scale(&half)
        })
        .collect();
    Matrix::from_column_vectors(field, pairs.len(), &cols)
}

/// The identity of the zero-sum algebra, `(1/n) Σ S_ij`, when `n != 0`.
pub fn zero_sum_unit(n: usize, field: FieldSpec) -> Option<Vector> {
    let inv = field.from_i64(n as i64).inv()?;
    Some(Vector::from_entries(field, vec![inv; n * (n - 1) / 2]))
}
