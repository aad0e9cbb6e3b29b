//! Eigenspaces of adjoints, fusion rules, axes and Miyamoto involutions.

use super::{AlgebraError, AlgebraTable};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::Scalar;

/// Eigenvalues `Φ` and a symmetric rule `φ ⋆ ψ ⊆ Φ`, by index into `Φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRules {
    eigenvalues: Vec<Scalar>,
    table: Vec<Vec<Vec<usize>>>,
}

impl FusionRules {
    /// Panics unless every entry indexes `eigenvalues` and the table is square.
    pub fn new(eigenvalues: Vec<Scalar>, table: Vec<Vec<Vec<usize>>>) -> Self {
        let n = eigenvalues.len();
        assert_eq!(table.len(), n);
        assert!(table.iter().all(|row| row.len() == n));
        assert!(table.iter().flatten().flatten().all(|&k| k < n));
        FusionRules { eigenvalues, table }
    }

    /// `Φ(α) = {1, 0, α}`: `1⋆1 = {1}`, `1⋆0 = ∅`, `1⋆α = {α}`, `0⋆0 = {0}`,
    /// `0⋆α = {α}`, `α⋆α = {1, 0}`.
    pub fn jordan_type(alpha: &Scalar) -> Self {
        let f = alpha.field();
        assert!(!alpha.is_zero() && !alpha.is_one(), "alpha must differ from 0 and 1");
        let (one, zero, a) = (0, 1, 2);
        let mut table = vec![vec![Vec::new(); 3]; 3];
        let mut put = |i: usize, j: usize, v: Vec<usize>| {
            table[i][j] = v.clone();
            table[j][i] = v;
        };
        put(one, one, vec![one]);
        put(one, zero, vec![]);
        put(one, a, vec![a]);
        put(zero, zero, vec![zero]);
        put(zero, a, vec![a]);
        put(a, a, vec![one, zero]);
        FusionRules::new(vec![f.one(), f.zero(), alpha.clone()], table)
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigenvalues
    }

    pub fn rule(&self, i: usize, j: usize) -> &[usize] {
        &self.table[i][j]
    }
}

/// Nonzero eigenspaces of `ad(e)` among the candidates, in candidate order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenDecomposition {
    pub spaces: Vec<(Scalar, Subspace)>,
    pub diagonalizable: bool,
}

impl EigenDecomposition {
    pub fn space(&self, lambda: &Scalar) -> Option<&Subspace> {
        self.spaces.iter().find(|(l, _)| l == lambda).map(|(_, s)| s)
    }

    pub fn dim_of(&self, lambda: &Scalar) -> usize {
        self.space(lambda).map_or(0, Subspace::dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisReport {
    /// Eigenspace dimension for each eigenvalue of the rules, in rule order.
    pub dims: Vec<(Scalar, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxisViolation {
    NotIdempotent,
    NotDiagonalizable {
        dims: Vec<(Scalar, usize)>,
    },
    Fusion {
        phi: Scalar,
        psi: Scalar,
        u: Vector,
        v: Vector,
    },
}

impl std::fmt::Display for AxisViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxisViolation::NotIdempotent => write!(f, "not idempotent"),
            AxisViolation::NotDiagonalizable { dims } => {
                write!(f, "adjoint not diagonalizable over the eigenvalues: ")?;
                for (l, d) in dims {
                    write!(f, "{l}:{d} ")?;
                }
                Ok(())
            }
            AxisViolation::Fusion { phi, psi, u, v } => {
                write!(f, "product of {u} ({phi}) and {v} ({psi}) breaks the rules")
            }
        }
    }
}

impl AlgebraTable {
    pub fn eigen_decomposition(&self, e: &Vector, candidates: &[Scalar]) -> Result<EigenDecomposition, AlgebraError> {
        if !self.is_idempotent(e) {
            return Err(AlgebraError::NotIdempotent);
        }
        let ad = self.ad(e);
        let id = Matrix::identity(self.field, self.dim());
        let mut spaces: Vec<(Scalar, Subspace)> = Vec::new();
        for lambda in candidates {
            if spaces.iter().any(|(l, _)| l == lambda) {
                continue;
            }
            let k = ad.sub(&id.scale(lambda)).kernel();
            if !k.is_zero() {
                spaces.push((lambda.clone(), k));
            }
        }
        let total: usize = spaces.iter().map(|(_, s)| s.dim()).sum();
        Ok(EigenDecomposition {
            diagonalizable: total == self.dim(),
            spaces,
        })
    }

    /// Whether `e` is an axis for `rules`: idempotent, `ad(e)` diagonalizable
    /// over the eigenvalues, and `A_φ A_ψ ⊆ Σ_{χ ∈ φ⋆ψ} A_χ` on eigenbases.
    pub fn check_axis(&self, e: &Vector, rules: &FusionRules) -> Result<AxisReport, AxisViolation> {
        let dec = self
            .eigen_decomposition(e, rules.eigenvalues())
            .map_err(|_| AxisViolation::NotIdempotent)?;
        let spaces: Vec<Subspace> = rules
            .eigenvalues()
            .iter()
            .map(|l| {
                dec.space(l)
                    .cloned()
                    .unwrap_or_else(|| Subspace::zero(self.field, self.dim()))
            })
            .collect();
        let dims: Vec<(Scalar, usize)> = rules
            .eigenvalues()
            .iter()
            .cloned()
            .zip(spaces.iter().map(Subspace::dim))
            .collect();
        if !dec.diagonalizable {
            return Err(AxisViolation::NotDiagonalizable { dims });
        }
        let n = rules.eigenvalues().len();
        for i in 0..n {
            for j in i..n {
                let mut target = Subspace::zero(self.field, self.dim());
                for &k in rules.rule(i, j) {
                    target = target.sum(&spaces[k]).expect("same ambient space");
                }
                for u in spaces[i].basis_vectors() {
                    for v in spaces[j].basis_vectors() {
                        if !target.contains(&self.mul(&u, &v)) {
                            return Err(AxisViolation::Fusion {
                                phi: rules.eigenvalues()[i].clone(),
                                psi: rules.eigenvalues()[j].clone(),
                                u,
                                v,
                            });
                        }
                    }
                }
            }
        }
        Ok(AxisReport { dims })
    }

    /// The map fixing `A_1 ⊕ A_0` and negating `A_α`, checked to be an
    /// automorphism of order at most 2.
    pub fn miyamoto(&self, e: &Vector, alpha: &Scalar) -> Result<Matrix, AlgebraError> {
        let rules = FusionRules::jordan_type(alpha);
        self.check_axis(e, &rules)
            .map_err(|v| AlgebraError::NotAxis(v.to_string()))?;
        let dec = self.eigen_decomposition(e, rules.eigenvalues())?;
        let mut cols = Vec::new();
        let mut signs = Vec::new();
        for (l, s) in &dec.spaces {
            for v in s.basis_vectors() {
                cols.push(v);
                signs.push(if l == alpha {
                    -self.field.one()
                } else {
                    self.field.one()
                });
            }
        }
        let p = Matrix::from_column_vectors(self.field, self.dim(), &cols);
        let d = Matrix::from_fn(self.field, self.dim(), self.dim(), |r, c| {
            if r == c {
                signs[r].clone()
            } else {
                self.field.zero()
            }
        });
        let p_inv = p.inverse().expect("eigenbasis spans");
        let tau = p.mul(&d).mul(&p_inv);
        let id = Matrix::identity(self.field, self.dim());
        if tau.mul(&tau) != id || !super::is_homomorphism(self, self, &tau) {
            return Err(AlgebraError::NotAxis(
                "Miyamoto map is not an involutive automorphism".into(),
            ));
        }
        Ok(tau)
    }

    /// Idempotents `Σ c_i b_i` supported on at most `max_support` basis
    /// elements with coefficients from `grid`.
    pub fn small_idempotents(&self, max_support: usize, grid: &[Scalar]) -> Vec<Vector> {
        let d = self.dim();
        let nonzero: Vec<&Scalar> = grid.iter().filter(|c| !c.is_zero()).collect();
        let mut out = Vec::new();
        let mut support = Vec::new();
        fn walk(
            a: &AlgebraTable,
            start: usize,
            max: usize,
            support: &mut Vec<usize>,
            coeffs: &[&Scalar],
            out: &mut Vec<Vector>,
        ) {
            if !support.is_empty() {
                let k = support.len();
                for code in 0..coeffs.len().pow(k as u32) {
                    let mut v = a.zero();
                    let mut c = code;
                    for &i in support.iter() {
                        v[i] = coeffs[c % coeffs.len()].clone();
                        c /= coeffs.len();
                    }
                    if a.is_idempotent(&v) {
                        out.push(v);
                    }
                }
            }
            if support.len() == max {
                return;
            }
            for i in start..a.dim() {
                support.push(i);
                walk(a, i + 1, max, support, coeffs, out);
                support.pop();
            }
        }
        if d > 0 {
            walk(self, 0, max_support.min(d), &mut support, &nonzero, &mut out);
        }
        out
    }
}
