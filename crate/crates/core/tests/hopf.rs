use algebroid::category::Cat;
use algebroid::field::Field;
use algebroid::fixtures::{builtin_fixtures, fixture};
use algebroid::hopf::*;
use algebroid::mat::Mat;
use std::sync::Arc;

#[test]
fn group_algebra_translation_map_is_g_tensor_g() {
    let b = fixture("C2Q").unwrap().bialgebroid;
    let g = galois_map(&b).unwrap();
    assert_eq!(g.matrix.nrows(), 4);
    // β is a permutation matrix on the full tensor square
    assert!(g.matrix.entries().all(|(_, _, v)| *v == Field::Rationals.one()));
    assert_eq!(g.matrix.nnz(), 4);
    let v = is_hopf(&b).unwrap();
    let tm = v.translation_map().unwrap();
    // g₊ ⊗ g₋ = g ⊗ g, i.e. basis index 1·2 + 1
    assert_eq!(tm.matrix.column(1), Mat::unit_vector(Field::Rationals, 4, 3));
}

#[test]
fn idempotent_monoid_has_galois_rank_three_of_four() {
    let b = fixture("IDEM").unwrap().bialgebroid;
    for v in [is_hopf(&b).unwrap(), is_anti_hopf(&b).unwrap()] {
        match v {
            HopfVerdict::NotHopf { rank, codomain_dim, cokernel, .. } => {
                assert_eq!((rank, codomain_dim), (3, 4));
                assert!(cokernel.is_some());
            }
            HopfVerdict::Hopf(_) => panic!("IDEM must not be Hopf"),
        }
    }
}

#[test]
fn verdicts_match_expected_flags_and_translation_maps_check() {
    for fx in builtin_fixtures() {
        let b = &fx.bialgebroid;
        let h = is_hopf(b).unwrap();
        let a = is_anti_hopf(b).unwrap();
        assert_eq!(h.is_hopf(), fx.expected.hopf, "{}", fx.name);
        assert_eq!(a.is_hopf(), fx.expected.anti_hopf, "{}", fx.name);
        if let Some(tm) = h.translation_map() {
            assert!(check_translation_map(b, tm).passed(), "{}", fx.name);
        }
        if let Some(tm) = a.translation_map() {
            assert!(check_translation_map(&b.coopposite(), tm).passed(), "{}^cop", fx.name);
        }
        let fin = finiteness(b);
        assert_eq!(fin.left.is_projective(), fx.expected.left_finite, "{}", fx.name);
        assert_eq!(fin.right.is_projective(), fx.expected.right_finite, "{}", fx.name);
    }
}

#[test]
fn dual_numbers_enveloping_is_free_of_rank_two_over_target() {
    let b = fixture("RE2").unwrap().bialgebroid;
    match finiteness(&b).left {
        algebroid::bimodule::Projectivity::Projective(db) => {
            assert_eq!(db.generators.len(), 2);
            assert!(db.cover.mul(&db.splitting).is_identity());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn inner_hom_dimensions() {
    let b = fixture("C2Q").unwrap().bialgebroid;
    let cat = Cat::h_modules(b);
    let h = cat.regular().unwrap();
    assert_eq!(cat.hom_left(&h, &h).obj.dim(), 4);
    assert_eq!(cat.hom_right(&h, &h).obj.dim(), 4);
    for fx in builtin_fixtures() {
        let cat = Cat::h_modules(fx.bialgebroid.clone());
        for y in test_family(&cat) {
            assert_eq!(cat.hom_left(&cat.unit(), &y).obj.dim(), y.dim(), "{}", fx.name);
            assert_eq!(cat.hom_right(&cat.unit(), &y).obj.dim(), y.dim(), "{}", fx.name);
        }
    }
}

#[test]
fn adjunction_holds_on_the_test_family() {
    for name in ["H4Q", "RE2", "C2F2"] {
        let cat = Cat::h_modules(fixture(name).unwrap().bialgebroid);
        let fam = test_family(&cat);
        let h = cat.regular().unwrap();
        for w in &fam {
            let r = hom_adjunction_check(&cat, &h, &h, w);
            assert!(r.passed(), "{name}: {r:?}");
        }
        let rev = cat.rev();
        for w in &fam {
            let r = hom_adjunction_check(&rev, &h, &fam[fam.len() - 1], w);
            assert!(r.passed(), "{name} reversed: {r:?}");
        }
    }
}

#[test]
fn bimodule_inner_homs_satisfy_the_adjunction() {
    for fx in builtin_fixtures() {
        let b = &fx.bialgebroid;
        let bm = Cat::bimodules(b.base.clone());
        let hb = b.total_bimodule();
        let r = bm.unit();
        for (x, y, w) in [(&hb, &hb, &r), (&r, &hb, &hb), (&hb, &r, &hb)] {
            assert!(hom_adjunction_check(&bm, x, y, w).passed(), "{}", fx.name);
            assert!(hom_adjunction_check(&bm.rev(), x, y, w).passed(), "{} rev", fx.name);
        }
    }
}

#[test]
fn hopf_verdict_agrees_with_hom_preservation() {
    for fx in builtin_fixtures() {
        let b = &fx.bialgebroid;
        let right = preservation_over_family(b, Side::Right);
        assert_eq!(right.passed(), is_hopf(b).unwrap().is_hopf(), "{}: {right:#?}", fx.name);
        let left = preservation_over_family(b, Side::Left);
        assert_eq!(left.passed(), is_anti_hopf(b).unwrap().is_hopf(), "{}", fx.name);
    }
}

#[test]
fn regular_and_unit_modules_are_rigid() {
    for fx in builtin_fixtures().into_iter().filter(|f| f.expected.hopf) {
        let b = fx.bialgebroid.clone();
        let cat = Cat::h_modules(b.clone());
        let bm = Cat::bimodules(b.base.clone());
        for p in [cat.regular().unwrap(), cat.unit()] {
            let w = left_dual_module(&cat, &p).unwrap_or_else(|e| panic!("{}: {e}", fx.name));
            assert!(check_triangles(&cat, &w).passed(), "{}", fx.name);
            let wb = restrict_witness(&b, &w);
            assert!(check_triangles(&bm, &wb).passed(), "{} restricted", fx.name);
        }
        let i = cat.unit();
        assert_eq!(left_dual_module(&cat, &i).unwrap().dual.dim(), i.dim());
    }
}

#[test]
fn module_killed_by_the_idempotent_has_no_left_dual() {
    let b = fixture("IDEM").unwrap().bialgebroid;
    let cat = Cat::h_modules(b.clone());
    let f = Field::Rationals;
    let s0 = b.h_module("S0", vec![Mat::identity(f, 1), Mat::zeros(f, 1, 1)]);
    assert!(left_dual_module(&cat, &s0).is_err());
    let _ = Arc::clone(&b);
}
