//! The `x = a + b + c` test of the Jordan identity in Matsuo algebras of
//! rank-4 Fischer spaces, and the embedding of `W_k(Ã_3)` into
//! `W_k(Ã_{r-1})`.

use super::matsuo::{matsuo_algebra, MatsuoSpec};
use super::ConstructionError;
use crate::groups::{
    build_wk_aff_a, generators_match, todd_coxeter, AffineElem, AffineGroup, CosetGroup, Group, GroupRealization,
    Presentation, ProductGroup, Strategy, DEFAULT_ELEMENT_CAP,
};
use crate::linalg::Vector;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank4Report {
    pub d_size: usize,
    /// Points of the subspace generated by `a, b, c, d`; the algebra dimension.
    pub closure_size: usize,
    /// Coefficient of `a` in `((xx)d)x` and in `(xx)(dx)`.
    pub coeff_a: (Scalar, Scalar),
    /// The same for the point `a^{cdb}`.
    pub coeff_acdb: (Scalar, Scalar),
    /// `(D index, lhs, rhs)` wherever the two sides differ.
    pub differences: Vec<(usize, Scalar, Scalar)>,
}

impl Rank4Report {
    pub fn jordan_fails(&self) -> bool {
        !self.differences.is_empty()
    }
}

/// Builds `M_{1/2}` on the subspace closure of `{a, b, c, d}` in the Fischer
/// space of `g` and compares `((xx)d)x` with `(xx)(dx)` for `x = a + b + c`.
pub fn rank4_check<G: Group>(
    g: &GroupRealization<G>,
    abcd: [&G::Elem; 4],
    field: FieldSpec,
) -> Result<Rank4Report, ConstructionError> {
    let mut pos = [0usize; 4];
    for (k, e) in abcd.iter().enumerate() {
        pos[k] = g
            .d_position(e)
            .ok_or_else(|| ConstructionError::Degenerate(format!("generator {k} is not in D")))?;
    }
    let mut sorted = pos;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(ConstructionError::Degenerate("a, b, c, d are not distinct".into()));
    }
    let gamma = g.gamma()?;
    let closure = gamma.subspace_closure(&pos);
    let local = |p: usize| closure.binary_search(&p).expect("closure contains its generators");
    let sub = gamma.induced(&closure);
    let alg = matsuo_algebra(&MatsuoSpec::half(sub, field));
    let n = closure.len();
    let unit = |p: usize| Vector::unit(field, n, local(p));
    let [a, b, c, d] = pos.map(unit);
    let x = a.add(&b).add(&c);
    let xx = alg.mul(&x, &x);
    let lhs = alg.mul(&alg.mul(&xx, &d), &x);
    let rhs = alg.mul(&xx, &alg.mul(&d, &x));
    let grp = g.group();
    let cdb = grp.mul(&grp.mul(abcd[2], abcd[3]), abcd[1]);
    let acdb = g
        .d_position(&grp.conj(abcd[0], &cdb))
        .expect("D is closed under conjugation");
    let la = local(pos[0]);
    let lq = local(acdb);
    let differences = (0..n)
        .filter(|&i| lhs[i] != rhs[i])
        .map(|i| (closure[i], lhs[i].clone(), rhs[i].clone()))
        .collect();
    Ok(Rank4Report {
        d_size: g.d().len(),
        closure_size: n,
        coeff_a: (lhs[la].clone(), rhs[la].clone()),
        coeff_acdb: (lhs[lq].clone(), rhs[lq].clone()),
        differences,
    })
}

fn named<G: Group>(g: &GroupRealization<G>) -> [&G::Elem; 4] {
    ["a", "b", "c", "d"].map(|n| g.generator(n).expect("generators named a, b, c, d"))
}

/// `W_k(Ã_3)` with its generators `a, b, c, d`.
pub fn rank4_wk(k: u8, field: FieldSpec) -> Result<Rank4Report, ConstructionError> {
    let w = build_wk_aff_a(k, 3);
    rank4_check(&w.realization, named(&w.realization), field)
}

/// The group of a presentation on `a, b, c, d`, via coset enumeration over
/// the trivial subgroup, with `D` the class of `a`.
pub fn presented_group(
    p: &Presentation,
    budget: usize,
    strategy: Strategy,
) -> Result<GroupRealization<CosetGroup>, ConstructionError> {
    let table = todd_coxeter(p, &[], budget, strategy)?;
    Ok(CosetGroup::new(table).realization(p, 0))
}

pub fn rank4_presented(p: &Presentation, budget: usize, field: FieldSpec) -> Result<Rank4Report, ConstructionError> {
    let g = presented_group(p, budget, Strategy::Felsch)?;
    rank4_check(&g, named(&g), field)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub k: u8,
    pub r: usize,
    /// `|<a, b, c, d>|` in `W_k(Ã_3)`, `|<a', b', c', d'>|` in `W_k(Ã_{r-1})`,
    /// and the order of the diagonal subgroup `<(a, a'), ..>` of the product.
    pub orders: (usize, usize, usize),
    /// Order of the full quotient `F_k^4 ⋊ Sym(4) / <n>`.
    pub ambient_order: usize,
    /// Centre orders of the full quotient and of `<a', b', c', d'>`.
    pub centre_orders: (usize, usize),
    pub images_in_d: bool,
    /// The class of `(a, a')` in the diagonal subgroup projects bijectively
    /// onto both classes and its lines onto both line sets: the Fischer spaces
    /// are isomorphic by the map sending `a, b, c, d` to `a', b', c', d'`.
    pub fischer_isomorphic: bool,
    pub rank4: Rank4Report,
}

impl EmbeddingReport {
    /// `a ↦ a'`, `b ↦ b'`, `c ↦ c'`, `d ↦ d'` extends to a group isomorphism.
    pub fn group_isomorphic(&self) -> bool {
        self.orders.0 == self.orders.1 && self.orders.1 == self.orders.2
    }

    /// The images generate a group mapping onto `<a, b, c, d>` with kernel of
    /// this order, when the correspondence is a homomorphism from the image side.
    pub fn kernel_order(&self) -> Option<usize> {
        (self.orders.2 == self.orders.1 && self.orders.1.is_multiple_of(self.orders.0))
            .then(|| self.orders.1 / self.orders.0)
    }
}

/// `a', b', c'` swap coordinates `(0,1)`, `(1,2)`, `(2,3)`; `d'` swaps `(0,3)`
/// with last row `(1, 0, 0, -1, 0, .., 0, 1)`. All are `(r+1) x (r+1)`.
pub fn embedding_matrices(r: usize) -> [Vec<Vec<i64>>; 4] {
    let size = r + 1;
    let swap = |i: usize, j: usize| {
        let mut m: Vec<Vec<i64>> = (0..size)
            .map(|x| (0..size).map(|y| i64::from(x == y)).collect())
            .collect();
        m.swap(i, j);
        m
    };
    let mut d = swap(0, 3);
    d[r][0] = 1;
    d[r][3] = -1;
    [swap(0, 1), swap(1, 2), swap(2, 3), d]
}

pub fn embedding_check(k: u8, r: usize, field: FieldSpec) -> Result<EmbeddingReport, ConstructionError> {
    if r < 4 {
        return Err(ConstructionError::Degenerate(format!("rank {r} is below 4")));
    }
    let w = build_wk_aff_a(k, 3);
    let small = &w.realization;
    let big = build_wk_aff_a(k, r - 1).realization;
    let group = AffineGroup::new(k, r);
    let images: Vec<AffineElem> = embedding_matrices(r)
        .iter()
        .map(|m| group.from_matrix(m).expect("block matrices are affine permutations"))
        .collect();
    let images_in_d = images.iter().all(|e| big.d_position(e).is_some());
    let small_gens = named(small).map(Clone::clone);
    let orders = generators_match(*small.group(), &small_gens, group, &images, DEFAULT_ELEMENT_CAP).ok_or(
        ConstructionError::Degenerate("group enumeration exceeded the cap".into()),
    )?;
    let ambient = w.ambient();
    let ambient_order = ambient.order(DEFAULT_ELEMENT_CAP)?;
    let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    let image_group = GroupRealization::from_class(group, images.clone(), names.clone(), &images[0]);
    let pairs: Vec<_> = small_gens.iter().cloned().zip(images.iter().cloned()).collect();
    let diagonal = GroupRealization::from_class(
        ProductGroup {
            left: *small.group(),
            right: group,
        },
        pairs.clone(),
        names,
        &pairs[0],
    );
    let centre_orders = (
        ambient.center(DEFAULT_ELEMENT_CAP)?.len(),
        image_group.center(DEFAULT_ELEMENT_CAP)?.len(),
    );
    let (gs, gi, gd) = (small.gamma()?, image_group.gamma()?, diagonal.gamma()?);
    let fischer_isomorphic = gd.n_points() == gs.n_points()
        && gd.n_points() == gi.n_points()
        && gd.lines().len() == gs.lines().len()
        && gd.lines().len() == gi.lines().len();
    let rank4 = rank4_check(&big, [&images[0], &images[1], &images[2], &images[3]], field)?;
    Ok(EmbeddingReport {
        k,
        r,
        orders,
        ambient_order,
        centre_orders,
        images_in_d,
        fischer_isomorphic,
        rank4,
    })
}
