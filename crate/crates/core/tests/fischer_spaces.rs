use matsuo_core::fischer::{
    build_p2_dual, build_p3, gamma_of_rootsystem, pts_isomorphic, roots_of, PartialTripleSystem, RootType,
};
use matsuo_core::groups::{build_3sq2, build_sym, build_wk_aff_a, GroupRealization, Perm, PermGroup};

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `W(D_4)` as signed permutations of `±e_1..±e_4`, point `2i + s` being
/// `(-1)^s e_i`; `D` is the reflection class.
fn weyl_d4() -> GroupRealization<PermGroup> {
    let pt = |i: usize, s: usize| (2 * i + s) as u32;
    // s_{e_i - e_j}: e_i <-> e_j. s_{e_i + e_j}: e_i <-> -e_j.
    let refl = |i: usize, j: usize, plus: bool| {
        let mut img: Vec<u32> = (0..8).collect();
        let t = usize::from(plus);
        for s in 0..2 {
            img[pt(i, s) as usize] = pt(j, (s + t) % 2);
            img[pt(j, (s + t) % 2) as usize] = pt(i, s);
        }
        Perm::from_images(img)
    };
    let gens = vec![
        refl(0, 1, false),
        refl(1, 2, false),
        refl(2, 3, false),
        refl(2, 3, true),
    ];
    let names = (1..=4).map(|i| format!("r{i}")).collect();
    let seed = gens[0].clone();
    GroupRealization::from_class(PermGroup { degree: 8 }, gens, names, &seed)
}

#[test]
fn gamma_an_counts_match_binomials() {
    for n in 3..=7 {
        let g = gamma_of_rootsystem(&roots_of(RootType::A(n - 1))).unwrap();
        assert_eq!(g.n_points(), binom(n, 2), "A{}", n - 1);
        assert_eq!(g.lines().len(), binom(n, 3), "A{}", n - 1);
    }
    let a4 = gamma_of_rootsystem(&roots_of(RootType::A(4))).unwrap();
    assert_eq!((a4.n_points(), a4.lines().len()), (10, 10));
}

#[test]
fn root_and_group_routes_agree() {
    for n in 3..=6 {
        let by_roots = gamma_of_rootsystem(&roots_of(RootType::A(n - 1))).unwrap();
        let by_group = build_sym(n).gamma().unwrap();
        assert!(pts_isomorphic(&by_roots, &by_group).is_some(), "Sym({n})");
    }
    let d4_roots = gamma_of_rootsystem(&roots_of(RootType::D(4))).unwrap();
    let w = weyl_d4();
    assert_eq!(w.d().len(), 12);
    let d4_group = w.gamma().unwrap();
    assert_eq!((d4_roots.n_points(), d4_roots.lines().len()), (12, 16));
    assert!(pts_isomorphic(&d4_roots, &d4_group).is_some());
}

#[test]
fn classical_spaces_are_fischer() {
    let mut spaces: Vec<(String, PartialTripleSystem)> = Vec::new();
    for t in [
        RootType::A(2),
        RootType::A(3),
        RootType::A(4),
        RootType::A(5),
        RootType::A(6),
        RootType::D(4),
        RootType::D(5),
        RootType::E6,
    ] {
        spaces.push((t.to_string(), gamma_of_rootsystem(&roots_of(t)).unwrap()));
    }
    spaces.push(("P3".into(), build_p3()));
    spaces.push(("P2dual".into(), build_p2_dual()));
    for (name, s) in &spaces {
        let v = s.is_fischer();
        assert!(v.is_fischer() && v.is_nondegenerate(), "{name}: {v:?}");
    }
    assert!(!build_p3().is_fischer().is_symplectic());
    assert!(build_p2_dual().is_fischer().is_symplectic());
}

#[test]
fn p3_is_the_space_of_3sq2() {
    let g = build_3sq2().gamma().unwrap();
    assert!(pts_isomorphic(&g, &build_p3()).is_some());
    assert_eq!(build_p3().lines().len(), 12);
}

#[test]
fn a3_space_is_dual_affine_free() {
    // Γ(A3) has 6 points, 4 lines, and every two lines meet.
    let g = gamma_of_rootsystem(&roots_of(RootType::A(3))).unwrap();
    assert_eq!(g.lines().len(), 4);
    assert!(pts_isomorphic(&g, &build_p2_dual()).is_some());
}

#[test]
fn affine_groups_have_expected_classes() {
    let w2 = build_wk_aff_a(2, 3).realization;
    let w3 = build_wk_aff_a(3, 3).realization;
    assert_eq!(w2.d().len(), 12);
    assert_eq!(w3.d().len(), 18);
    w2.is_3transposition().unwrap();
    w3.is_3transposition().unwrap();
    for g in [w2.gamma().unwrap(), w3.gamma().unwrap()] {
        assert!(g.is_fischer().is_fischer());
    }
}

#[test]
fn isolated_points_are_flagged() {
    let g = PartialTripleSystem::new(4, [[0, 1, 2]]).unwrap();
    let v = g.is_fischer();
    assert!(v.is_fischer());
    assert!(!v.is_nondegenerate());
}
