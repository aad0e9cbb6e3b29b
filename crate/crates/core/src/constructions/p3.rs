//! The Matsuo algebra of the affine plane of order 3 at `α = 1/2`: its unit,
//! line idempotents, Peirce decomposition, the hermitian model `H_3(E, *)`
//! and the characteristic 3 ideal chain.

use super::matsuo::{matsuo_algebra, MatsuoSpec};
use super::ConstructionError;
use crate::algebra::{AlgebraTable, FusionRules};
use crate::fischer::{build_p3, P3_LINES};
use crate::linalg::{is_direct_sum, Matrix, Subspace, Vector};
use crate::scalar::{FieldSpec, Scalar};

/// Lines of the plane as 0-based point triples, in the fixed labelling.
pub fn p3_lines() -> Vec<[usize; 3]> {
    P3_LINES.iter().map(|l| l.map(|p| p - 1)).collect()
}

/// The four parallel classes, each three disjoint lines.
pub fn parallel_classes() -> Vec<[[usize; 3]; 3]> {
    let lines = p3_lines();
    let mut out: Vec<[[usize; 3]; 3]> = Vec::new();
    for (i, l) in lines.iter().enumerate() {
        if out.iter().any(|c| c.contains(l)) {
            continue;
        }
        let disjoint: Vec<[usize; 3]> = lines[i + 1..]
            .iter()
            .filter(|m| m.iter().all(|p| !l.contains(p)))
            .copied()
            .collect();
        out.push([*l, disjoint[0], disjoint[1]]);
    }
    out
}

pub fn p3_matsuo(field: FieldSpec) -> AlgebraTable {
    matsuo_algebra(&MatsuoSpec::half(build_p3(), field))
}

fn forbid_char3(field: FieldSpec, what: &'static str) -> Result<(), ConstructionError> {
    if field.characteristic() == 3 {
        return Err(ConstructionError::Characteristic { what, forbidden: 3 });
    }
    Ok(())
}

fn sum_of(field: FieldSpec, points: &[usize], c: &Scalar) -> Vector {
    let mut v = Vector::zeros(field, 9);
    for &p in points {
        v[p] = &v[p] + c;
    }
    v
}

/// `(1/3) Σ p_i`.
pub fn p3_unit(field: FieldSpec) -> Result<Vector, ConstructionError> {
    forbid_char3(field, "unit of the plane algebra")?;
    Ok(sum_of(
        field,
        &(0..9).collect::<Vec<_>>(),
        &field.ratio(1, 3).expect("char is not 3"),
    ))
}

fn check_line(line: [usize; 3]) -> Result<[usize; 3], ConstructionError> {
    let mut l = line;
    l.sort_unstable();
    if p3_lines().contains(&l) {
        Ok(l)
    } else {
        Err(ConstructionError::NotALine(line))
    }
}

/// `(e_L, f_L)` with `e_L = -(1/3)Σ_{L} p + (1/3)Σ_{not L} p` and
/// `f_L = (2/3)Σ_{L} p`.
pub fn line_idempotents(field: FieldSpec, line: [usize; 3]) -> Result<(Vector, Vector), ConstructionError> {
    forbid_char3(field, "line idempotents")?;
    let l = check_line(line)?;
    let third = field.ratio(1, 3).expect("char is not 3");
    let rest: Vec<usize> = (0..9).filter(|p| !l.contains(p)).collect();
    let e = sum_of(field, &l, &-&third).add(&sum_of(field, &rest, &third));
    let f = sum_of(field, &l, &field.ratio(2, 3).expect("char is not 3"));
    Ok((e, f))
}

/// `A_11, A_22, A_33, A_12, A_13, A_23` for a parallel class, with
/// `A_ii = <e_{L_i}>` and `A_ij` the intersection of the 1/2-eigenspaces of
/// `e_{L_i}` and `e_{L_j}`.
#[derive(Debug, Clone)]
pub struct PeirceDecomposition {
    pub idempotents: [Vector; 3],
    pub pieces: Vec<((usize, usize), Subspace)>,
}

impl PeirceDecomposition {
    pub fn piece(&self, i: usize, j: usize) -> &Subspace {
        let key = if i <= j { (i, j) } else { (j, i) };
        &self.pieces.iter().find(|(k, _)| *k == key).expect("1 <= i <= j <= 3").1
    }

    pub fn is_direct_sum(&self) -> bool {
        let parts: Vec<Subspace> = self.pieces.iter().map(|(_, s)| s.clone()).collect();
        is_direct_sum(&parts).unwrap_or(false) && parts.iter().map(Subspace::dim).sum::<usize>() == 9
    }
}

pub fn p3_peirce(field: FieldSpec, class: [[usize; 3]; 3]) -> Result<PeirceDecomposition, ConstructionError> {
    forbid_char3(field, "Peirce decomposition")?;
    let class = class
        .map(check_line)
        .map(|r| r.map_err(|_| ConstructionError::NotParallelClass));
    let class = [class[0].clone()?, class[1].clone()?, class[2].clone()?];
    let mut covered: Vec<usize> = class.iter().flatten().copied().collect();
    covered.sort_unstable();
    covered.dedup();
    if covered.len() != 9 {
        return Err(ConstructionError::NotParallelClass);
    }
    let a = p3_matsuo(field);
    let half = field.ratio(1, 2).expect("odd characteristic");
    let rules = FusionRules::jordan_type(&half);
    let mut es = Vec::new();
    let mut halves = Vec::new();
    for l in class {
        let (e, _) = line_idempotents(field, l)?;
        let dec = a.eigen_decomposition(&e, rules.eigenvalues())?;
        halves.push(dec.space(&half).cloned().unwrap_or_else(|| Subspace::zero(field, 9)));
        es.push(e);
    }
    let mut pieces = Vec::new();
    for (i, e) in es.iter().enumerate() {
        pieces.push((
            (i + 1, i + 1),
            Subspace::from_vectors(field, 9, std::slice::from_ref(e)),
        ));
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let s = halves[i].intersect(&halves[j]).expect("same ambient space");
        pieces.push(((i + 1, j + 1), s));
    }
    Ok(PeirceDecomposition {
        idempotents: [es[0].clone(), es[1].clone(), es[2].clone()],
        pieces,
    })
}

/// `u + vζ` in `E = F[ζ]/(ζ² + 3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quad {
    pub u: Scalar,
    pub v: Scalar,
}

impl Quad {
    pub fn new(u: Scalar, v: Scalar) -> Self {
        Quad { u, v }
    }

    pub fn zero(f: FieldSpec) -> Self {
        Quad::new(f.zero(), f.zero())
    }

    pub fn add(&self, o: &Quad) -> Quad {
        Quad::new(&self.u + &o.u, &self.v + &o.v)
    }

    pub fn scale(&self, c: &Scalar) -> Quad {
        Quad::new(&self.u * c, &self.v * c)
    }

    pub fn mul(&self, o: &Quad) -> Quad {
        let f = self.u.field();
        Quad::new(
            &(&self.u * &o.u) - &(&f.from_i64(3) * &(&self.v * &o.v)),
            &(&self.u * &o.v) + &(&self.v * &o.u),
        )
    }

    /// `σ: ζ ↦ -ζ`.
    pub fn conj(&self) -> Quad {
        Quad::new(self.u.clone(), -&self.v)
    }
}

/// Basis order: `e11, e22, e33, 1[12], ζ[12], 1[13], ζ[13], 1[23], ζ[23]`.
pub const H3_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn h3_labels() -> Vec<String> {
    let mut l: Vec<String> = (1..=3).map(|i| format!("e{i}{i}")).collect();
    for (i, j) in H3_PAIRS {
        l.push(format!("1[{}{}]", i + 1, j + 1));
        l.push(format!("z[{}{}]", i + 1, j + 1));
    }
    l
}

/// An element as diagonal coefficients on `e_ii` and entries `x` of `x[ij]`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Herm {
    diag: [Scalar; 3],
    off: [Quad; 3],
}

fn pair_index(i: usize, j: usize) -> usize {
    H3_PAIRS
        .iter()
        .position(|&p| p == (i.min(j), i.max(j)))
        .expect("i != j")
}

impl Herm {
    fn zero(f: FieldSpec) -> Self {
        Herm {
            diag: [f.zero(), f.zero(), f.zero()],
            off: [Quad::zero(f), Quad::zero(f), Quad::zero(f)],
        }
    }

    fn from_basis(f: FieldSpec, k: usize) -> Self {
        let mut h = Herm::zero(f);
        if k < 3 {
            h.diag[k] = f.one();
        } else {
            let q = if (k - 3).is_multiple_of(2) {
                Quad::new(f.one(), f.zero())
            } else {
                Quad::new(f.zero(), f.one())
            };
            h.off[(k - 3) / 2] = q;
        }
        h
    }

    fn to_vector(&self, f: FieldSpec) -> Vector {
        let mut e: Vec<Scalar> = self.diag.to_vec();
        for q in &self.off {
            e.push(q.u.clone());
            e.push(q.v.clone());
        }
        Vector::from_entries(f, e)
    }

    /// Adds `x[ij]` for any `i != j`, using `x[ji] = x^σ[ij]`.
    fn add_off(&mut self, i: usize, j: usize, x: &Quad) {
        let x = if i < j { x.clone() } else { x.conj() };
        let k = pair_index(i, j);
        self.off[k] = self.off[k].add(&x);
    }
}

/// Products of the spanning elements `e_ii` and `x[ij]` by the rules
/// `2x[ij]·y[jk] = xy[ik]`, `2x[ii]·y[ij] = (x+x^σ)y[ij]`,
/// `2x[ij]·y[ij] = xy^σ[ii] + xy^σ[jj]`, `2x[ii]·y[ii] = (x+x^σ)(y+y^σ)[ii]`
/// and `x[ij]·y[kl] = 0` for disjoint index pairs, with `e_ii = (1/2)[ii]`.
enum Atom {
    Diag(usize),
    Off(usize, usize, Quad),
}

fn atoms(f: FieldSpec, k: usize) -> Atom {
    if k < 3 {
        Atom::Diag(k)
    } else {
        let (i, j) = H3_PAIRS[(k - 3) / 2];
        let q = if (k - 3).is_multiple_of(2) {
            Quad::new(f.one(), f.zero())
        } else {
            Quad::new(f.zero(), f.one())
        };
        Atom::Off(i, j, q)
    }
}

fn rule_product(f: FieldSpec, x: &Atom, y: &Atom) -> Herm {
    let half = f.ratio(1, 2).expect("odd characteristic");
    let mut out = Herm::zero(f);
    match (x, y) {
        (Atom::Diag(i), Atom::Diag(j)) => {
            if i == j {
                out.diag[*i] = f.one();
            }
        }
        (Atom::Diag(k), Atom::Off(i, j, q)) | (Atom::Off(i, j, q), Atom::Diag(k)) => {
            if k == i || k == j {
                out.add_off(*i, *j, &q.scale(&half));
            }
        }
        (Atom::Off(i, j, x), Atom::Off(k, l, y)) => {
            if (i, j) == (k, l) || (i, j) == (l, k) {
                let y = if (i, j) == (k, l) { y.clone() } else { y.conj() };
                // (1/2)(w[ii] + w[jj]) with w = x y^σ and w[ii] = 2 Re(w) e_ii.
                let re = x.mul(&y.conj()).u;
                out.diag[*i] = &out.diag[*i] + &re;
                out.diag[*j] = &out.diag[*j] + &re;
            } else {
                let m = if i == k || i == l { *i } else { *j };
                let (p, x) = if *j == m { (*i, x.clone()) } else { (*j, x.conj()) };
                let (q, y) = if *k == m { (*l, y.clone()) } else { (*k, y.conj()) };
                out.add_off(p, q, &x.mul(&y).scale(&half));
            }
        }
    }
    out
}

/// `H_3(E, *)` from the multiplication rules.
pub fn h3_algebra(field: FieldSpec) -> Result<AlgebraTable, ConstructionError> {
    forbid_char3(field, "hermitian model")?;
    let mut a = AlgebraTable::new(field, h3_labels());
    for x in 0..9 {
        for y in x..9 {
            let p = rule_product(field, &atoms(field, x), &atoms(field, y));
            a.set_product(x, y, &p.to_vector(field));
        }
    }
    Ok(a)
}

type QuadMatrix = [[Quad; 3]; 3];

fn herm_matrix(f: FieldSpec, h: &Herm) -> QuadMatrix {
    let mut m: QuadMatrix = std::array::from_fn(|_| std::array::from_fn(|_| Quad::zero(f)));
    for i in 0..3 {
        m[i][i] = Quad::new(h.diag[i].clone(), f.zero());
    }
    for (k, &(i, j)) in H3_PAIRS.iter().enumerate() {
        m[i][j] = h.off[k].clone();
        m[j][i] = h.off[k].conj();
    }
    m
}

fn matrix_herm(f: FieldSpec, m: &QuadMatrix) -> Herm {
    let mut h = Herm::zero(f);
    for i in 0..3 {
        assert!(m[i][i].v.is_zero(), "hermitian diagonal lies in the base field");
        h.diag[i] = m[i][i].u.clone();
    }
    for (k, &(i, j)) in H3_PAIRS.iter().enumerate() {
        assert_eq!(m[j][i], m[i][j].conj(), "not hermitian");
        h.off[k] = m[i][j].clone();
    }
    h
}

fn quad_matmul(f: FieldSpec, a: &QuadMatrix, b: &QuadMatrix) -> QuadMatrix {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(Quad::zero(f), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
    })
}

/// `H_3(E, *)` as hermitian `3 x 3` matrices over `E` with `X∙Y = (XY + YX)/2`.
pub fn h3_matrix_model(field: FieldSpec) -> Result<AlgebraTable, ConstructionError> {
    forbid_char3(field, "hermitian model")?;
    let half = field.ratio(1, 2).expect("odd characteristic");
    let mats: Vec<QuadMatrix> = (0..9)
        .map(|k| herm_matrix(field, &Herm::from_basis(field, k)))
        .collect();
    let mut a = AlgebraTable::new(field, h3_labels());
    for x in 0..9 {
        for y in x..9 {
            let xy = quad_matmul(field, &mats[x], &mats[y]);
            let yx = quad_matmul(field, &mats[y], &mats[x]);
            let s: QuadMatrix = std::array::from_fn(|i| std::array::from_fn(|j| xy[i][j].add(&yx[i][j]).scale(&half)));
            a.set_product(x, y, &matrix_herm(field, &s).to_vector(field));
        }
    }
    Ok(a)
}

/// Coordinates of the Peirce basis `e_1, e_2, e_3` and, per parallel line
/// `{a, b, c}` of `{1,2,3}, {4,5,6}, {7,8,9}`, `p_a - p_c` and `p_b - p_c`.
fn standard_peirce_basis(field: FieldSpec) -> Result<Vec<Vector>, ConstructionError> {
    let lines = [[0, 1, 2], [3, 4, 5], [6, 7, 8]];
    let mut cols = Vec::new();
    for l in lines {
        cols.push(line_idempotents(field, l)?.0);
    }
    for [a, b, c] in lines {
        let unit = |i: usize| Vector::unit(field, 9, i);
        cols.push(unit(a).sub(&unit(c)));
        cols.push(unit(b).sub(&unit(c)));
    }
    Ok(cols)
}

/// Line `{1,2,3}` goes to `[23]`, `{4,5,6}` to `[13]`, `{7,8,9}` to `[12]`;
/// the `ζ` coefficient flips sign on `[13]`.
const ETA_TARGETS: [(usize, i64); 3] = [(2, 1), (1, -1), (0, 1)];

/// Matrix of a linear map `M_{1/2}(P_3) -> H_3` given its values on the
/// standard Peirce basis, where `image(line, λ, μ)` is the `E` entry for
/// `λp_a + μp_b - (λ+μ)p_c`.
fn map_from_peirce(
    field: FieldSpec,
    image: impl Fn(usize, &Scalar, &Scalar) -> Quad,
) -> Result<Matrix, ConstructionError> {
    let basis = standard_peirce_basis(field)?;
    let (one, zero) = (field.one(), field.zero());
    let mut images: Vec<Vector> = (0..3).map(|i| Herm::from_basis(field, i).to_vector(field)).collect();
    for (line, &(pair, _)) in ETA_TARGETS.iter().enumerate() {
        for (l, m) in [(&one, &zero), (&zero, &one)] {
            let mut h = Herm::zero(field);
            h.off[pair] = image(line, l, m);
            images.push(h.to_vector(field));
        }
    }
    let p = Matrix::from_column_vectors(field, 9, &basis);
    let img = Matrix::from_column_vectors(field, 9, &images);
    Ok(img.mul(&p.inverse().expect("Peirce basis spans")))
}

/// `e_i ↦ e_ii`, `λp_1 + μp_2 - (λ+μ)p_3 ↦ ((3/4)(λ+μ) + (1/4)(λ-μ)ζ)[23]`,
/// and likewise on `{4,5,6}` (with `μ - λ`, into `[13]`) and `{7,8,9}` (into `[12]`).
pub fn eta(field: FieldSpec) -> Result<Matrix, ConstructionError> {
    forbid_char3(field, "eta")?;
    let q34 = field.ratio(3, 4).expect("odd characteristic");
    let q14 = field.ratio(1, 4).expect("odd characteristic");
    map_from_peirce(field, |line, l, m| {
        let sign = field.from_i64(ETA_TARGETS[line].1);
        Quad::new(&q34 * &(l + m), &(&q14 * &(l - m)) * &sign)
    })
}

/// `u + vβ` in `F[β]/(β² + β + 1)`, sent to `E` by `β ↦ (-1 + ζ)/2`.
fn beta_to_quad(field: FieldSpec, u: &Scalar, v: &Scalar) -> Quad {
    let half = field.ratio(1, 2).expect("odd characteristic");
    Quad::new(u - &(v * &half), v * &half)
}

/// The sixth-root-of-unity form `λp_a + μp_b + νp_c ↦ (λξ + μξ^σ - ν)[..]`
/// with `ξ = β + 1`, `ξ^σ = -β`, and `ξ, ξ^σ` exchanged on `[13]`, followed
/// by `scale` on the off-diagonal pieces. `scale = 1` is the form as written;
/// `scale = 1/2` agrees with [`eta`].
pub fn eta_xi_scaled(field: FieldSpec, scale: &Scalar) -> Result<Matrix, ConstructionError> {
    forbid_char3(field, "eta")?;
    // In β-coordinates: ξ = (1, 1), ξ^σ = (0, -1).
    let xi = (field.one(), field.one());
    let xis = (field.zero(), -field.one());
    map_from_peirce(field, |line, l, m| {
        let nu = -&(l + m);
        let (x, y) = if ETA_TARGETS[line].1 == 1 {
            (&xi, &xis)
        } else {
            (&xis, &xi)
        };
        let u = &(&(l * &x.0) + &(m * &y.0)) - &nu;
        let v = &(l * &x.1) + &(m * &y.1);
        beta_to_quad(field, &u, &v).scale(scale)
    })
}

pub fn eta_xi(field: FieldSpec) -> Result<Matrix, ConstructionError> {
    eta_xi_scaled(field, &field.ratio(1, 2).expect("odd characteristic"))
}

/// `Z < T < R` in `M_{1/2}(P_3)` over a field of characteristic 3.
#[derive(Debug, Clone)]
pub struct Char3Chain {
    pub algebra: AlgebraTable,
    pub z: Subspace,
    pub t: Subspace,
    pub r: Subspace,
    pub checks: Vec<(String, bool)>,
}

impl Char3Chain {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

pub fn p3_char3_chain(field: FieldSpec) -> Result<Char3Chain, ConstructionError> {
    if field.characteristic() != 3 {
        return Err(ConstructionError::RequiresCharacteristic {
            what: "ideal chain",
            required: 3,
            found: field.characteristic(),
        });
    }
    let a = p3_matsuo(field);
    let one = field.one();
    let all: Vec<usize> = (0..9).collect();
    let zvec = sum_of(field, &all, &one);
    let z = Subspace::from_vectors(field, 9, std::slice::from_ref(&zvec));
    let line_sums: Vec<Vector> = p3_lines().iter().map(|l| sum_of(field, l, &one)).collect();
    let t = Subspace::from_vectors(field, 9, &line_sums);
    let r = Matrix::from_row_vectors(field, 9, std::slice::from_ref(&zvec)).kernel();
    let mut checks = Vec::new();
    let mut check = |name: &str, ok: bool| checks.push((name.to_string(), ok));
    check("dim Z = 1", z.dim() == 1);
    check("dim T = 6", t.dim() == 6);
    check("dim R = 8", r.dim() == 8);
    check("Z < T < R", t.contains_subspace(&z) && r.contains_subspace(&t));
    check("Z, T, R are ideals", a.is_ideal(&z) && a.is_ideal(&t) && a.is_ideal(&r));
    check("R^2 = T", a.subspace_product(&r, &r) == t);
    check("T^2 = Z", a.subspace_product(&t, &t) == z);
    check("Z^2 = 0", a.subspace_product(&z, &z).is_zero());
    check(
        "Z, T, R are solvable",
        [&z, &t, &r].iter().all(|s| a.is_solvable_subspace(s)),
    );
    check(
        "sum of all points is trivial",
        a.is_absolute_zero_divisor(&zvec) && a.mul(&zvec, &zvec).is_zero(),
    );
    check(
        "T basis consists of absolute zero divisors",
        t.basis_vectors().iter().all(|v| a.is_absolute_zero_divisor(v)),
    );
    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(0x0054_5a43);
    let samples_ok = (0..32).all(|_| {
        let mut v = a.zero();
        for s in &line_sums {
            v = v.add(&s.scale(&field.from_i64(rand::Rng::random_range(&mut rng, 0..3))));
        }
        v.is_zero() || a.is_absolute_zero_divisor(&v)
    });
    check("random elements of T are absolute zero divisors", samples_ok);
    let lines = p3_lines();
    let mut parallel_ok = true;
    for class in parallel_classes() {
        for l in class {
            for l2 in class {
                if l == l2 {
                    continue;
                }
                let d = sum_of(field, &l, &one).sub(&sum_of(field, &l2, &one));
                parallel_ok &= lines.iter().all(|m| a.mul(&sum_of(field, m, &one), &d).is_zero());
            }
        }
    }
    check("line sums annihilate differences of parallel line sums", parallel_ok);
    let quotient = a.quotient(&r)?;
    let qa = &quotient.algebra;
    let p1_bar = quotient.project(&a.basis(0));
    check(
        "J/R is 1-dimensional with unit the image of p1",
        qa.dim() == 1 && qa.find_unit().as_ref() == Some(&p1_bar) && qa.is_idempotent(&p1_bar),
    );
    check("J is not solvable", !a.is_solvable());
    check("J has no unit", a.find_unit().is_none());
    Ok(Char3Chain {
        algebra: a,
        z,
        t,
        r,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::iso_check;

    #[test]
    fn classes_partition_the_lines() {
        let classes = parallel_classes();
        assert_eq!(classes.len(), 4);
        assert_eq!(classes[0], [[0, 1, 2], [3, 4, 5], [6, 7, 8]]);
        let mut all: Vec<[usize; 3]> = classes.iter().flatten().copied().collect();
        all.sort();
        assert_eq!(all, {
            let mut l = p3_lines();
            l.sort();
            l
        });
    }

    #[test]
    fn rules_agree_with_matrices() {
        for f in [FieldSpec::Rationals, FieldSpec::Prime(5), FieldSpec::Prime(7)] {
            assert_eq!(h3_algebra(f).unwrap(), h3_matrix_model(f).unwrap());
        }
        assert!(h3_algebra(FieldSpec::Prime(3)).is_err());
    }

    #[test]
    fn rule_m1_sample() {
        // 2 (1[12]) (1[23]) = 1[13]
        let q = FieldSpec::Rationals;
        let h = h3_algebra(q).unwrap();
        let prod = h.product(3, 7).scale(&q.from_i64(2));
        assert_eq!(prod, h.basis(5));
    }

    #[test]
    fn eta_values() {
        let q = FieldSpec::Rationals;
        let e = eta(q).unwrap();
        let (e1, _) = line_idempotents(q, [0, 1, 2]).unwrap();
        assert_eq!(e.mul_vec(&e1), Vector::unit(q, 9, 0));
        // p1 - p2 ↦ (1/2)ζ[23]
        let v = Vector::from_i64s(q, &[1, -1, 0, 0, 0, 0, 0, 0, 0]);
        let mut want = Vector::zeros(q, 9);
        want[8] = q.ratio(1, 2).unwrap();
        assert_eq!(e.mul_vec(&v), want);
    }

    #[test]
    fn xi_form() {
        let q = FieldSpec::Rationals;
        assert_eq!(eta_xi(q).unwrap(), eta(q).unwrap());
        let written = eta_xi_scaled(q, &q.one()).unwrap();
        let a = p3_matsuo(q);
        let h = h3_algebra(q).unwrap();
        assert!(!iso_check(&a, &h, &written));
    }
}
