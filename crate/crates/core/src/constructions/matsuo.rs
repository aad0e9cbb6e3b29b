//! Matsuo algebras of partial triple systems.

use super::ConstructionError;
use crate::algebra::AlgebraTable;
use crate::fischer::PartialTripleSystem;
use crate::linalg::Vector;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone)]
pub struct MatsuoSpec {
    pub space: PartialTripleSystem,
    pub alpha: Scalar,
    pub field: FieldSpec,
}

impl MatsuoSpec {
    pub fn new(space: PartialTripleSystem, alpha: Scalar) -> Result<Self, ConstructionError> {
        if alpha.is_zero() || alpha.is_one() {
            return Err(ConstructionError::Alpha(alpha.to_string()));
        }
        Ok(MatsuoSpec {
            field: alpha.field(),
            space,
            alpha,
        })
    }

    /// `alpha = 1/2`.
    pub fn half(space: PartialTripleSystem, field: FieldSpec) -> Self {
        let alpha = field.ratio(1, 2).expect("odd characteristic");
        MatsuoSpec::new(space, alpha).expect("1/2 is neither 0 nor 1")
    }
}

/// `xx = x`, `xy = 0` off the collinearity graph, and
/// `xy = (α/2)(x + y - x∧y)` for collinear `x, y`.
pub fn matsuo_algebra(spec: &MatsuoSpec) -> AlgebraTable {
    let g = &spec.space;
    let n = g.n_points();
    let labels = (1..=n).map(|i| format!("p{i}")).collect();
    let mut a = AlgebraTable::new(spec.field, labels);
    let half_alpha = &spec.alpha * &spec.field.ratio(1, 2).expect("odd characteristic");
    for x in 0..n {
        a.set_product_sparse(x, x, vec![(x, spec.field.one())]);
    }
    for line in g.lines() {
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let (x, y, z) = (line[i], line[j], line[k]);
            a.set_product_sparse(
                x,
                y,
                vec![(x, half_alpha.clone()), (y, half_alpha.clone()), (z, -&half_alpha)],
            );
        }
    }
    a
}

/// Eigenvectors of `ad(x)` written in terms of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatsuoEigenbasis {
    /// `x` itself.
    pub one: Vec<Vector>,
    /// `y + x∧y - αx` per line through `x`, then every `y` not collinear with `x`.
    pub zero: Vec<Vector>,
    /// `y - x∧y` per line through `x`.
    pub alpha: Vec<Vector>,
}

impl MatsuoEigenbasis {
    pub fn len(&self) -> usize {
        self.one.len() + self.zero.len() + self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn matsuo_eigenbasis(spec: &MatsuoSpec, x: usize) -> Result<MatsuoEigenbasis, ConstructionError> {
    let g = &spec.space;
    let n = g.n_points();
    if x >= n {
        return Err(ConstructionError::PointOutOfRange { point: x, n });
    }
    let f = spec.field;
    let unit = |i: usize| Vector::unit(f, n, i);
    let mut zero = Vec::new();
    let mut alpha = Vec::new();
    for line in g.lines_through(x) {
        let others: Vec<usize> = line.iter().copied().filter(|&p| p != x).collect();
        let (y, z) = (others[0], others[1]);
        zero.push(unit(y).add(&unit(z)).sub(&unit(x).scale(&spec.alpha)));
        alpha.push(unit(y).sub(&unit(z)));
    }
    zero.extend(g.non_neighbours(x).into_iter().map(unit));
    Ok(MatsuoEigenbasis {
        one: vec![unit(x)],
        zero,
        alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FusionRules;
    use crate::fischer::{build_p3, gamma_of_rootsystem, roots_of, RootType};
    use crate::linalg::Subspace;

    #[test]
    fn alpha_rejected() {
        let q = FieldSpec::Rationals;
        assert!(MatsuoSpec::new(build_p3(), q.one()).is_err());
        assert!(MatsuoSpec::new(build_p3(), q.zero()).is_err());
        assert!(MatsuoSpec::new(build_p3(), q.ratio(1, 3).unwrap()).is_ok());
    }

    #[test]
    fn eigenbasis_matches_decomposition() {
        for f in [FieldSpec::Rationals, FieldSpec::Prime(7)] {
            for alpha in [f.ratio(1, 2).unwrap(), f.ratio(1, 3).unwrap(), f.from_i64(3)] {
                for space in [build_p3(), gamma_of_rootsystem(&roots_of(RootType::A(3))).unwrap()] {
                    let spec = MatsuoSpec::new(space, alpha.clone()).unwrap();
                    let a = matsuo_algebra(&spec);
                    let rules = FusionRules::jordan_type(&alpha);
                    for x in 0..a.dim() {
                        let eb = matsuo_eigenbasis(&spec, x).unwrap();
                        assert_eq!(eb.len(), a.dim());
                        let e = a.basis(x);
                        let dec = a.eigen_decomposition(&e, rules.eigenvalues()).unwrap();
                        for (lambda, vs) in [(f.one(), &eb.one), (f.zero(), &eb.zero), (alpha.clone(), &eb.alpha)] {
                            for v in vs.iter() {
                                assert_eq!(a.mul(&e, v), v.scale(&lambda));
                            }
                            let span = Subspace::from_vectors(f, a.dim(), vs);
                            assert_eq!(span.dim(), vs.len());
                            assert_eq!(Some(&span), dec.space(&lambda).or(Some(&Subspace::zero(f, a.dim()))));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn isolated_point_is_a_direct_factor() {
        let q = FieldSpec::Rationals;
        let g = PartialTripleSystem::new(4, [[0, 1, 2]]).unwrap();
        let spec = MatsuoSpec::half(g, q);
        let a = matsuo_algebra(&spec);
        assert_eq!(a.product(3, 3), a.basis(3));
        for y in 0..3 {
            assert!(a.product(3, y).is_zero());
        }
        let eb = matsuo_eigenbasis(&spec, 3).unwrap();
        assert!(eb.alpha.is_empty());
        assert_eq!(eb.zero.len(), 3);
    }
}
