//! Projection matrices of roots and the Jordan algebras they span.

use super::ConstructionError;
use crate::algebra::AlgebraTable;
use crate::fischer::RootSystem;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::FieldSpec;

/// `m_a = a^t a / (a, a)`.
pub fn proj_matrix(field: FieldSpec, a: &[i64]) -> Result<Matrix, ConstructionError> {
    let norm = field.from_i64(a.iter().map(|x| x * x).sum());
    let inv = norm.inv().ok_or_else(|| ConstructionError::SingularRoot(a.to_vec()))?;
    let n = a.len();
    Ok(Matrix::from_fn(field, n, n, |i, j| &field.from_i64(a[i] * a[j]) * &inv))
}

/// `x ∙ y = (xy + yx) / 2`.
pub fn jordan_product(x: &Matrix, y: &Matrix) -> Matrix {
    let half = x.field().ratio(1, 2).expect("odd characteristic");
    x.mul(y).add(&y.mul(x)).scale(&half)
}

fn flatten(m: &Matrix) -> Vector {
    Vector::from_entries(m.field(), m.entries().to_vec())
}

/// `J(R)` on a maximal independent subset of the positive-root projections.
#[derive(Debug, Clone)]
pub struct RootJordan {
    pub algebra: AlgebraTable,
    /// Projections of all positive roots, in root order.
    pub projections: Vec<Matrix>,
    /// Positive-root index of each basis element.
    pub basis_roots: Vec<usize>,
    /// Column `i` holds the basis coordinates of `m_{a_i}`.
    pub coordinates: Matrix,
}

pub fn jordan_from_roots(r: &RootSystem, field: FieldSpec) -> Result<RootJordan, ConstructionError> {
    let roots = r.positive_roots();
    let projections = roots
        .iter()
        .map(|a| proj_matrix(field, a))
        .collect::<Result<Vec<_>, _>>()?;
    let flat: Vec<Vector> = projections.iter().map(flatten).collect();
    let n2 = flat.first().map_or(0, Vector::len);
    let mut basis_roots = Vec::new();
    let mut span = Subspace::zero(field, n2);
    for (i, v) in flat.iter().enumerate() {
        if !span.contains(v) {
            span = Subspace::from_vectors(field, n2, &[span.basis_vectors(), vec![v.clone()]].concat());
            basis_roots.push(i);
        }
    }
    let basis_cols: Vec<Vector> = basis_roots.iter().map(|&i| flat[i].clone()).collect();
    let b = Matrix::from_column_vectors(field, n2, &basis_cols);
    let coords = |m: &Matrix| -> Vector {
        b.solve(&flatten(m))
            .expect("product stays in the span of the projections")
    };
    let labels = basis_roots.iter().map(|&i| format!("m{}", i + 1)).collect();
    let mut algebra = AlgebraTable::new(field, labels);
    for (bi, &i) in basis_roots.iter().enumerate() {
        for (bj, &j) in basis_roots.iter().enumerate().skip(bi) {
            let p = jordan_product(&projections[i], &projections[j]);
            algebra.set_product(bi, bj, &coords(&p));
        }
    }
    let cols: Vec<Vector> = projections.iter().map(&coords).collect();
    let coordinates = Matrix::from_column_vectors(field, basis_roots.len(), &cols);
    Ok(RootJordan {
        algebra,
        projections,
        basis_roots,
        coordinates,
    })
}

/// Rank of the span of `a^t a` over the positive roots.
pub fn jr_dimension(r: &RootSystem, field: FieldSpec) -> usize {
    let rows: Vec<Vector> = r
        .positive_roots()
        .iter()
        .map(|a| {
            let n = a.len();
            let entries = (0..n * n).map(|t| field.from_i64(a[t / n] * a[t % n])).collect();
            Vector::from_entries(field, entries)
        })
        .collect();
    let n2 = rows.first().map_or(0, Vector::len);
    Matrix::from_row_vectors(field, n2, &rows).rank()
}

/// The predicted value of `m_a ∙ m_b` for two positive roots, from the
/// relative position of `a` and `b` alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectionCase {
    Equal,
    Orthogonal,
    /// `(m_short + k m_long - m_c) / 4` with `|long|^2 = k |short|^2`; indices
    /// into the positive roots. `c = ±(a ± b)`, the sign making `a, ±b` obtuse.
    Rank2 {
        short: usize,
        long: usize,
        k: i64,
        c: usize,
    },
}

fn positive_index(roots: &[Vec<i64>], v: &[i64]) -> Option<usize> {
    let neg: Vec<i64> = v.iter().map(|x| -x).collect();
    roots.iter().position(|r| r.as_slice() == v || *r == neg)
}

pub fn projection_case(r: &RootSystem, i: usize, j: usize) -> ProjectionCase {
    let roots = r.positive_roots();
    if i == j {
        return ProjectionCase::Equal;
    }
    let (a, b) = (&roots[i], &roots[j]);
    let ab = r.form(a, b);
    if ab == 0 {
        return ProjectionCase::Orthogonal;
    }
    let (na, nb) = (r.form(a, a), r.form(b, b));
    let (short, long, ns, nl) = if na <= nb { (i, j, na, nb) } else { (j, i, nb, na) };
    assert_eq!(nl % ns, 0, "norm ratio of a rank-2 pair");
    let s = if ab < 0 { 1 } else { -1 };
    let c: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + s * y).collect();
    let c = positive_index(roots, &c).expect("a + b is a root when the angle is obtuse");
    ProjectionCase::Rank2 {
        short,
        long,
        k: nl / ns,
        c,
    }
}

impl ProjectionCase {
    /// The predicted product as a combination of projections.
    pub fn predict(&self, field: FieldSpec, projections: &[Matrix], i: usize) -> Result<Matrix, ConstructionError> {
        let n = projections[i].rows();
        Ok(match self {
            ProjectionCase::Equal => projections[i].clone(),
            ProjectionCase::Orthogonal => Matrix::zeros(field, n, n),
            ProjectionCase::Rank2 { short, long, k, c } => {
                if *k == 3 && field.characteristic() == 3 {
                    return Err(ConstructionError::Characteristic {
                        what: "G2 projections",
                        forbidden: 3,
                    });
                }
                let quarter = field.ratio(1, 4).expect("odd characteristic");
                projections[*short]
                    .add(&projections[*long].scale(&field.from_i64(*k)))
                    .sub(&projections[*c])
                    .scale(&quarter)
            }
        })
    }
}

/// Compares the case formula with the direct matrix product on every pair of
/// positive roots; returns the first pair where they differ.
pub fn check_projection_cases(r: &RootSystem, field: FieldSpec) -> Result<Option<(usize, usize)>, ConstructionError> {
    if r.label() == crate::fischer::RootType::G2 && field.characteristic() == 3 {
        return Err(ConstructionError::Characteristic {
            what: "G2 projections",
            forbidden: 3,
        });
    }
    let projections = r
        .positive_roots()
        .iter()
        .map(|a| proj_matrix(field, a))
        .collect::<Result<Vec<_>, _>>()?;
    let n = projections.len();
    for i in 0..n {
        for j in 0..n {
            let direct = jordan_product(&projections[i], &projections[j]);
            if projection_case(r, i, j).predict(field, &projections, i)? != direct {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// For simply-laced `R`, the linear map sending point `i` of `Γ(R)` to
/// `m_{a_i}`, as a `dim J(R) x |R+|` matrix.
pub fn matsuo_to_roots(j: &RootJordan) -> Matrix {
    j.coordinates.clone()
}
