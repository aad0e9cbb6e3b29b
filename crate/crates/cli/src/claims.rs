//! Claim ids and the computation behind each.

use matsuo_core::algebra::{is_homomorphism, iso_check, AlgebraTable, FusionRules, JordanVerdict};
use matsuo_core::constructions::{
    an_isomorphism, check_projection_cases, embedding_check, eta, eta_xi, h3_algebra, h3_matrix_model,
    jordan_from_roots, jr_dimension, matsuo_algebra, matsuo_to_roots, p3_char3_chain, p3_matsuo, p3_unit,
    presented_group, projection_case, rank4_presented, rank4_wk, zero_sum_sym_algebra, zero_sum_unit, MatsuoSpec,
    ProjectionCase,
};
use matsuo_core::fischer::{build_p2_dual, build_p3, gamma_of_rootsystem, roots_of, PartialTripleSystem, RootType};
use matsuo_core::groups::{coset_budget_from_env, todd_coxeter, Presentation, Strategy};
use matsuo_core::{FieldSpec, Matrix, Scalar};

use crate::report::{Provenance, ReportBuilder, VerificationReport};
use crate::CliError;

use Provenance::{Derived, Stated, Trivial};

pub const CLAIMS: [&str; 11] = [
    "axes",
    "embedding",
    "miyamoto",
    "pi3-char3-chain",
    "pi3-iso",
    "rank4-G4",
    "rank4-G5",
    "rank4-W2A3",
    "rank4-W3A3",
    "root-projections",
    "thm-an",
];

/// Options shared by all claims; each claim reads what it needs.
#[derive(Debug, Clone, Default)]
pub struct ClaimOptions {
    pub n: Option<usize>,
    pub field: Option<FieldSpec>,
}

pub fn run_claim(id: &str, opts: &ClaimOptions) -> Result<VerificationReport, CliError> {
    match id {
        "thm-an" => thm_an(opts.n.unwrap_or(4), opts.field.unwrap_or(FieldSpec::Rationals)),
        "pi3-iso" => pi3_iso(opts.field.unwrap_or(FieldSpec::Rationals)),
        "pi3-char3-chain" => pi3_char3(opts.field.unwrap_or(FieldSpec::Prime(3))),
        "rank4-W2A3" => rank4_affine(2),
        "rank4-W3A3" => rank4_affine(3),
        "rank4-G4" => rank4_presentation("rank4-G4", Presentation::g4(), 6912, 36),
        "rank4-G5" => rank4_presentation("rank4-G5", Presentation::g5(), 118_098, 81),
        "embedding" => embedding(),
        "axes" => axes(),
        "miyamoto" => miyamoto(),
        "root-projections" => root_projections(),
        _ => Err(CliError::Usage(format!(
            "unknown claim {id:?}; available: {}",
            CLAIMS.join(", ")
        ))),
    }
}

/// Every claim with default options, `thm-an` for `n = 2..6`, sorted by id.
/// Claims run on scoped threads; the order of the result does not depend on
/// scheduling.
pub fn run_all() -> Result<Vec<VerificationReport>, CliError> {
    let mut jobs: Vec<(&str, ClaimOptions)> = Vec::new();
    for id in CLAIMS {
        if id == "thm-an" {
            jobs.extend((2..=6).map(|n| {
                let opts = ClaimOptions {
                    n: Some(n),
                    field: None,
                };
                (id, opts)
            }));
        } else {
            jobs.push((id, ClaimOptions::default()));
        }
    }
    let results: Vec<Result<VerificationReport, CliError>> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|(id, opts)| s.spawn(move || run_claim(id, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(CliError::Failed("claim panicked".into())))
            })
            .collect()
    });
    let mut out = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    out.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(out)
}

fn failed<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Failed(e.to_string())
}

fn q(n: i64, d: i64) -> Scalar {
    FieldSpec::Rationals.ratio(n, d).expect("nonzero denominator")
}

fn jordan_quadruples(a: &AlgebraTable) -> Result<usize, String> {
    match a.jordan_check() {
        JordanVerdict::Jordan { quadruples, .. } => Ok(quadruples),
        other => Err(format!("{other:?}")),
    }
}

fn thm_an(n: usize, field: FieldSpec) -> Result<VerificationReport, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("thm-an needs n >= 2, got {n}")));
    }
    let mut r = ReportBuilder::new(format!("thm-an-n{n}"))
        .param("n", n)
        .param("field", field)
        .anchor(
            "the Matsuo algebra of Sym(n) at 1/2 is the Jordan algebra of symmetric zero-sum n x n matrices",
            Stated,
        );
    let space = gamma_of_rootsystem(&roots_of(RootType::A(n - 1))).map_err(failed)?;
    let m = matsuo_algebra(&MatsuoSpec::half(space, field));
    let z = zero_sum_sym_algebra(n, field);
    r.eq("dimension of the Matsuo algebra", n * (n - 1) / 2, m.dim(), Stated);
    r.eq("dimension of the zero-sum algebra", n * (n - 1) / 2, z.dim(), Trivial);
    r.holds(
        "Matsuo algebra passes jordan_check",
        m.jordan_check().is_jordan(),
        Stated,
    );
    r.holds(
        "an_isomorphism passes iso_check",
        iso_check(&m, &z, &an_isomorphism(n, field)),
        Stated,
    );
    let expected_unit = zero_sum_unit(n, field);
    r.eq(
        "zero-sum algebra is unital iff n is invertible",
        expected_unit.is_some(),
        z.find_unit().is_some(),
        Stated,
    );
    if let Some(u) = expected_unit {
        r.holds(
            "unit is (1/n) times the sum of the basis",
            z.find_unit() == Some(u),
            Stated,
        );
    }
    Ok(r.finish())
}

fn pi3_iso(field: FieldSpec) -> Result<VerificationReport, CliError> {
    if field.characteristic() == 3 {
        return Err(CliError::Usage("pi3-iso needs characteristic other than 3".into()));
    }
    let mut r = ReportBuilder::new("pi3-iso")
        .param("field", field)
        .anchor(
            "M_1/2 of the affine plane of order 3 is isomorphic to H_3(E, *)",
            Stated,
        )
        .anchor("the sixth-root-of-unity form of the map agrees once halved", Derived);
    let m = p3_matsuo(field);
    let h = h3_algebra(field).map_err(failed)?;
    let e = eta(field).map_err(failed)?;
    let mut pairs = 0;
    let mut good = 0;
    for i in 0..9 {
        for j in i..9 {
            pairs += 1;
            let lhs = e.mul_vec(&m.product(i, j));
            let rhs = h.mul(&e.column(i), &e.column(j));
            good += usize::from(lhs == rhs);
        }
    }
    r.eq("basis pairs", 45, pairs, Trivial);
    r.eq("basis pairs where eta is multiplicative", 45, good, Stated);
    r.holds("eta is invertible", e.inverse().is_some(), Stated);
    r.holds("eta passes iso_check", iso_check(&m, &h, &e), Stated);
    let unit = p3_unit(field).map_err(failed)?;
    r.holds("(1/3) sum p_i is the unit", m.find_unit() == Some(unit), Stated);
    r.holds(
        "rule table equals hermitian matrix products",
        h == h3_matrix_model(field).map_err(failed)?,
        Derived,
    );
    r.holds("H_3(E, *) passes jordan_check", h.jordan_check().is_jordan(), Stated);
    r.holds(
        "sixth-root form equals eta",
        eta_xi(field).map_err(failed)? == e,
        Derived,
    );
    Ok(r.finish())
}

fn pi3_char3(field: FieldSpec) -> Result<VerificationReport, CliError> {
    if field.characteristic() != 3 {
        return Err(CliError::Usage("pi3-char3-chain needs characteristic 3".into()));
    }
    let mut r = ReportBuilder::new("pi3-char3-chain").param("field", field).anchor(
        "in characteristic 3 the plane algebra is Jordan with ideals 0 < Z < T < R < J",
        Stated,
    );
    let chain = p3_char3_chain(field).map_err(failed)?;
    match jordan_quadruples(&chain.algebra) {
        Ok(n) => r.eq("linearized identity on basis quadruples", 6561, n, Stated),
        Err(v) => r.eq("linearized identity on basis quadruples", "6561".to_string(), v, Stated),
    }
    r.eq(
        "dims of Z, T, R",
        "(1, 6, 8)".to_string(),
        format!("({}, {}, {})", chain.z.dim(), chain.t.dim(), chain.r.dim()),
        Stated,
    );
    for (name, ok) in &chain.checks {
        r.holds(name, *ok, Stated);
    }
    Ok(r.finish())
}

fn rank4_affine(k: u8) -> Result<VerificationReport, CliError> {
    let lhs = if k == 2 { q(3, 8) } else { q(13, 32) };
    let mut r = ReportBuilder::new(format!("rank4-W{k}A3"))
        .param("k", k)
        .param("field", FieldSpec::Rationals)
        .anchor("x = a + b + c gives ((xx)d)x != (xx)(dx)", Stated);
    let rep = rank4_wk(k, FieldSpec::Rationals).map_err(failed)?;
    r.eq("coefficient of a in ((xx)d)x", lhs, rep.coeff_a.0.clone(), Stated);
    r.eq("coefficient of a in (xx)(dx)", q(7, 16), rep.coeff_a.1.clone(), Stated);
    r.holds("the two sides differ", rep.jordan_fails(), Stated);
    let d = if k == 2 { 12 } else { 18 };
    r.eq("|D|", d, rep.d_size, Derived);
    r.eq("closure of {a, b, c, d}", d, rep.closure_size, Derived);
    Ok(r.finish())
}

fn rank4_presentation(id: &str, p: Presentation, order: usize, d: usize) -> Result<VerificationReport, CliError> {
    let budget = coset_budget_from_env();
    let mut r = ReportBuilder::new(id)
        .param("budget", budget)
        .param("field", FieldSpec::Rationals)
        .anchor("a^(cdb) contributes -1/32 to ((xx)d)x and nothing to (xx)(dx)", Stated)
        .anchor("group order agreed by two enumeration strategies", Derived);
    let felsch = todd_coxeter(&p, &[], budget, Strategy::Felsch).map_err(failed)?;
    let hlt = todd_coxeter(&p, &[], budget, Strategy::Hlt).map_err(failed)?;
    r.eq("cosets (Felsch)", order, felsch.len(), Derived);
    r.eq("cosets (HLT)", order, hlt.len(), Derived);
    let g = presented_group(&p, budget, Strategy::Felsch).map_err(failed)?;
    r.eq("|D|", d, g.d().len(), Derived);
    r.holds(
        "D is a class of 3-transpositions",
        g.is_3transposition().is_ok(),
        Derived,
    );
    let rep = rank4_presented(&p, budget, FieldSpec::Rationals).map_err(failed)?;
    r.eq(
        "coefficient of a^(cdb) in ((xx)d)x",
        q(-1, 32),
        rep.coeff_acdb.0.clone(),
        Stated,
    );
    r.eq(
        "coefficient of a^(cdb) in (xx)(dx)",
        q(0, 1),
        rep.coeff_acdb.1.clone(),
        Stated,
    );
    Ok(r.finish())
}

fn embedding() -> Result<VerificationReport, CliError> {
    let mut r = ReportBuilder::new("embedding")
        .param("r", 5)
        .param("field", FieldSpec::Rationals)
        .anchor("W_k(A_{r-1}~) contains W_k(A_3~) for r >= 5", Stated);
    for (k, lhs) in [(2u8, q(3, 8)), (3, q(13, 32))] {
        let rep = embedding_check(k, 5, FieldSpec::Rationals).map_err(failed)?;
        r.holds(&format!("k={k}: images lie in D"), rep.images_in_d, Stated);
        r.eq(
            &format!("k={k}: orders of <a,b,c,d>, <a',b',c',d'>, diagonal"),
            format!("({0}, {0}, {0})", rep.orders.0),
            format!("({}, {}, {})", rep.orders.0, rep.orders.1, rep.orders.2),
            Stated,
        );
        r.eq(
            &format!("k={k}: centre orders of the full quotient and of the image"),
            format!("({0}, {0})", rep.centre_orders.0),
            format!("({}, {})", rep.centre_orders.0, rep.centre_orders.1),
            Derived,
        );
        r.holds(
            &format!("k={k}: Fischer spaces isomorphic via generators"),
            rep.fischer_isomorphic,
            Derived,
        );
        r.eq(
            &format!("k={k}: embedded coefficient of a in ((xx)d)x"),
            lhs,
            rep.rank4.coeff_a.0.clone(),
            Stated,
        );
        r.eq(
            &format!("k={k}: embedded coefficient of a in (xx)(dx)"),
            q(7, 16),
            rep.rank4.coeff_a.1.clone(),
            Stated,
        );
    }
    Ok(r.finish())
}

fn fixtures() -> Result<Vec<(&'static str, PartialTripleSystem)>, CliError> {
    Ok(vec![
        ("P2dual", build_p2_dual()),
        ("P3", build_p3()),
        (
            "Gamma(A4)",
            gamma_of_rootsystem(&roots_of(RootType::A(4))).map_err(failed)?,
        ),
        (
            "Gamma(D4)",
            gamma_of_rootsystem(&roots_of(RootType::D(4))).map_err(failed)?,
        ),
    ])
}

fn axes() -> Result<VerificationReport, CliError> {
    let mut r = ReportBuilder::new("axes")
        .param("field", FieldSpec::Rationals)
        .param("alphas", "1/2, 1/3")
        .anchor("every point of a Matsuo algebra is a Phi(alpha)-axis", Stated);
    for (name, s) in fixtures()? {
        for alpha in [q(1, 2), q(1, 3)] {
            let m = matsuo_algebra(&MatsuoSpec::new(s.clone(), alpha.clone()).map_err(failed)?);
            let rules = FusionRules::jordan_type(&alpha);
            let count = (0..m.dim())
                .filter(|&x| m.check_axis(&m.basis(x), &rules).is_ok())
                .count();
            r.eq(
                &format!("{name}, alpha = {alpha}: points that are axes"),
                m.dim(),
                count,
                Stated,
            );
        }
    }
    Ok(r.finish())
}

fn miyamoto() -> Result<VerificationReport, CliError> {
    let mut r = ReportBuilder::new("miyamoto")
        .param("field", FieldSpec::Rationals)
        .param("alphas", "1/2, 1/3")
        .anchor(
            "x -> tau(x) is injective and the tau(x) generate a 3-transposition group",
            Stated,
        );
    for (name, s) in fixtures()? {
        for alpha in [q(1, 2), q(1, 3)] {
            let m = matsuo_algebra(&MatsuoSpec::new(s.clone(), alpha.clone()).map_err(failed)?);
            let taus = (0..m.dim())
                .map(|x| m.miyamoto(&m.basis(x), &alpha))
                .collect::<Result<Vec<Matrix>, _>>()
                .map_err(failed)?;
            let id = Matrix::identity(FieldSpec::Rationals, m.dim());
            let autos = taus.iter().all(|t| t.mul(t) == id && iso_check(&m, &m, t));
            let small = taus
                .iter()
                .all(|x| taus.iter().all(|y| x.mul(y).order_up_to(3).is_some()));
            let distinct = (0..taus.len()).all(|x| (x + 1..taus.len()).all(|y| taus[x] != taus[y]));
            r.holds(
                &format!("{name}, alpha = {alpha}: tau(x) automorphisms of order <= 2"),
                autos,
                Stated,
            );
            r.holds(&format!("{name}, alpha = {alpha}: |tau(x)tau(y)| <= 3"), small, Stated);
            r.holds(&format!("{name}, alpha = {alpha}: tau injective"), distinct, Stated);
        }
    }
    Ok(r.finish())
}

fn root_projections() -> Result<VerificationReport, CliError> {
    let f = FieldSpec::Rationals;
    let mut r = ReportBuilder::new("root-projections")
        .param("field", f)
        .anchor("m_a . m_b is given by a case formula with k in {1, 2, 3}", Stated)
        .anchor("the span of the root projections has dimension n(n+1)/2", Stated);
    for (t, k) in [(RootType::A(2), 1), (RootType::B2, 2), (RootType::G2, 3)] {
        let rs = roots_of(t);
        let n = rs.positive_roots().len();
        let has_k = (0..n).any(|i| {
            (0..n).any(|j| matches!(projection_case(&rs, i, j), ProjectionCase::Rank2 { k: kk, .. } if kk == k))
        });
        r.holds(&format!("{t}: a pair with k = {k} occurs"), has_k, Stated);
        let mismatch = check_projection_cases(&rs, f).map_err(failed)?;
        r.eq(
            &format!("{t}: first pair where the case formula fails"),
            "none".to_string(),
            mismatch.map_or("none".to_string(), |p| format!("{p:?}")),
            Stated,
        );
    }
    for t in [
        RootType::A(2),
        RootType::A(3),
        RootType::A(4),
        RootType::A(5),
        RootType::D(4),
        RootType::D(5),
        RootType::E6,
    ] {
        let n = t.rank();
        r.eq(
            &format!("dim J({t})"),
            n * (n + 1) / 2,
            jr_dimension(&roots_of(t), f),
            Stated,
        );
    }
    let rs = roots_of(RootType::D(4));
    let m = matsuo_algebra(&MatsuoSpec::half(gamma_of_rootsystem(&rs).map_err(failed)?, f));
    let j = jordan_from_roots(&rs, f).map_err(failed)?;
    let map = matsuo_to_roots(&j);
    r.eq(
        "D4: dims of Matsuo algebra and J(D4)",
        "(12, 10)".to_string(),
        format!("({}, {})", m.dim(), j.algebra.dim()),
        Stated,
    );
    r.holds(
        "D4: point -> projection is a homomorphism",
        is_homomorphism(&m, &j.algebra, &map),
        Stated,
    );
    r.holds("D4: surjective", map.rank() == j.algebra.dim(), Stated);
    r.holds("D4: not injective", !map.kernel().is_zero(), Stated);
    Ok(r.finish())
}
