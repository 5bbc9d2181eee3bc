use algebroid::fixtures::{builtin_fixtures, fixture, NAMES};
use algebroid::hopf::{is_anti_hopf, is_hopf};
use algebroid::pipelines::*;

mod common;
use common::dual_dim_oracle;
use algebroid::report::Verdict;

#[test]
fn dual_carrier_dimensions() {
    let golden = [("C2Q", 2), ("C2F2", 2), ("H4Q", 4), ("RE2", 4), ("UT2E", 9), ("IDEM", 2)];
    for (name, d) in golden {
        let oracle = dual_dim_oracle(name);
        assert_eq!(oracle, d, "{name} oracle");
        let dc = dual_space(&fixture(name).unwrap().bialgebroid).unwrap();
        assert_eq!(dc.dim(), oracle, "{name}");
    }
}

#[test]
fn dual_carrier_is_a_bimodule_of_linear_maps() {
    for name in ["RE2", "UT2E"] {
        let b = fixture(name).unwrap().bialgebroid;
        let dc = dual_space(&b).unwrap();
        assert!(dc.module.check_bimodule(&b.base).passed(), "{name}");
        let (r, h) = (b.base_dim(), b.dim());
        for k in 0..dc.dim() {
            let m = dc.element(k, r, h);
            for a in 0..r {
                let lhs = m.mul(&b.t_left(a));
                let rhs = b.base.right_mul(a).mul(&m);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn grids_have_at_least_three_objects() {
    for fx in builtin_fixtures() {
        if !fx.expected.hopf {
            continue;
        }
        let f = algebroid::centralizer::Functor::new(
            algebroid::category::Cat::h_modules(fx.bialgebroid.clone()),
            algebroid::centralizer::FunctorKind::Restrict,
        );
        assert!(test_grid(&f, DEFAULT_GRID).len() >= 3, "{}", fx.name);
    }
}

#[test]
fn first_pipeline_passes() {
    for name in ["C2Q", "H4Q", "RE2", "UT2E"] {
        let r = verify_thm1(&fixture(name).unwrap().bialgebroid, DEFAULT_GRID);
        assert!(r.passed(), "{name}: {}", serde_json::to_string_pretty(&r).unwrap());
        // one full row and one unit row per pair
        assert_eq!(r.find("hom-objects").unwrap().children.len(), 2 * 9, "{name}");
    }
}

#[test]
fn second_pipeline_passes() {
    for name in ["C2Q", "H4Q"] {
        let r = verify_thm2(&fixture(name).unwrap().bialgebroid, DEFAULT_GRID);
        assert!(r.passed(), "{name}: {}", serde_json::to_string_pretty(&r).unwrap());
    }
}

#[test]
fn third_pipeline_passes_both_clauses() {
    for name in ["C2Q", "H4Q"] {
        let r = verify_thm3(&fixture(name).unwrap().bialgebroid, DEFAULT_GRID);
        assert!(r.passed(), "{name}: {}", serde_json::to_string_pretty(&r).unwrap());
        assert!(r.find("left-homs").unwrap().passed());
        assert!(r.find("right-homs").unwrap().passed());
    }
}

#[test]
fn non_hopf_fixture_is_gated() {
    let b = fixture("IDEM").unwrap().bialgebroid;
    for r in [verify_thm1(&b, 3), verify_thm2(&b, 3), verify_thm3(&b, 3)] {
        assert_eq!(r.verdict, Verdict::Inapplicable, "{}", r.id);
    }
}

#[test]
fn failing_anti_hopf_hypothesis_is_gated() {
    let b = fixture("H4Q").unwrap().bialgebroid;
    let mut h = Hypotheses::of(&b);
    assert!(h.anti_hopf.is_ok());
    h.anti_hopf = Err("not anti-Hopf".into());
    assert_eq!(verify_thm2_with(&b, &h, 3).verdict, Verdict::Inapplicable);
    assert_eq!(verify_thm3_with(&b, &h, 3).verdict, Verdict::Inapplicable);
    assert!(verify_thm1_with(&b, &h, 3).passed());
}

#[test]
fn reconstruction_over_c2_is_the_function_algebra() {
    let b = fixture("C2Q").unwrap().bialgebroid;
    let Reconstruction::Validated { bialgebroid: d, .. } = reconstruct_dual_algebra(&b, 3) else {
        panic!("expected a validated candidate")
    };
    let (mul, unit, cop) = common::c2_function_algebra();
    assert_eq!(d.total.mul_matrix(), &mul);
    assert_eq!(d.total.unit(), &unit);
    assert_eq!(d.coproduct, cop);
    assert!(is_anti_hopf(&d).unwrap().is_hopf());
    assert!(is_hopf(&d).unwrap().is_hopf());
}

#[test]
fn reconstruction_over_sweedler_is_hopf() {
    let b = fixture("H4Q").unwrap().bialgebroid;
    match reconstruct_dual_algebra(&b, 3) {
        Reconstruction::Validated { bialgebroid: d, diagnostics, .. } => {
            assert_eq!(d.dim(), dual_space(&b).unwrap().dim());
            assert!(is_anti_hopf(&d).unwrap().is_hopf());
            assert!(is_hopf(&d).unwrap().is_hopf());
            // the product order is forced for a non-cocommutative coproduct
            assert!(diagnostics.iter().any(|d| d.failed()));
        }
        Reconstruction::Unresolved { .. } => panic!("expected a validated candidate"),
    }
}

#[test]
fn reconstruction_over_noncommutative_base_is_unresolved_with_diagnostics() {
    let b = fixture("RE2").unwrap().bialgebroid;
    let r = reconstruct_dual_algebra(&b, 3);
    assert!(matches!(r, Reconstruction::Unresolved { .. }));
    assert_eq!(r.diagnostics().len(), 4);
}

#[test]
fn every_fixture_has_a_dual_carrier() {
    for name in NAMES {
        assert!(dual_space(&fixture(name).unwrap().bialgebroid).is_ok(), "{name}");
    }
}

#[test]
fn identity_grid_skips_a_non_module_adjoint_carrier() {
    use algebroid::category::Cat;
    use algebroid::centralizer::{check_half_braiding, Functor, FunctorKind};
    let ut = Functor::new(Cat::h_modules(fixture("UT2E").unwrap().bialgebroid), FunctorKind::Identity);
    assert!(regular_object(&ut).is_none());
    let grid = test_grid(&ut, DEFAULT_GRID);
    assert_eq!(grid.len(), DEFAULT_GRID);
    assert!(grid.iter().all(|o| check_half_braiding(&ut, o).passed()));
    let re = Functor::new(Cat::h_modules(fixture("RE2").unwrap().bialgebroid), FunctorKind::Identity);
    assert!(regular_object(&re).is_some());
}
