use algebroid::bialgebroid::Bialgebroid;
use algebroid::category::Cat;
use algebroid::field::Field;
use algebroid::fixtures::{builtin_fixtures, fixture};
use algebroid::mat::Mat;
use algebroid::report::Verdict;
use std::sync::Arc;

fn get(name: &str) -> Arc<Bialgebroid> {
    fixture(name).unwrap().bialgebroid
}

#[test]
fn all_fixtures_satisfy_the_axioms() {
    for fx in builtin_fixtures() {
        let r = fx.bialgebroid.check();
        assert!(r.passed(), "{}: {:#?}", fx.name, r.leaves().iter().filter(|l| l.failed()).collect::<Vec<_>>());
        let c = fx.bialgebroid.coopposite().check();
        assert!(c.passed(), "{}^cop", fx.name);
    }
}

#[test]
fn coopposite_is_an_involution() {
    for fx in builtin_fixtures() {
        let b = &fx.bialgebroid;
        let cc = b.coopposite().coopposite();
        assert_eq!(cc.source, b.source);
        assert_eq!(cc.target, b.target);
        assert_eq!(cc.coproduct, b.coproduct);
        assert_eq!(cc.counit, b.counit);
        assert_eq!(cc.base.mul_matrix(), b.base.mul_matrix());
        assert_eq!(cc.name, b.name);
    }
}

#[test]
fn cocommutative_group_algebra_is_its_own_coopposite() {
    let b = get("C2Q");
    assert_eq!(b.coopposite().coproduct, b.coproduct);
}

#[test]
fn corrupted_coproduct_is_detected() {
    let b = get("RE2");
    let mut bad = (*b).clone();
    // Δ(1⊗x) gains a stray term (x⊗1) ⊗ (x⊗x)
    let h = b.dim();
    bad.coproduct.set(2 * h + 3, 1, Field::Rationals.one());
    let r = bad.check();
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.leaves().iter().any(|l| l.failed() && l.witness.is_some()));
}

#[test]
fn unit_module_actions() {
    // g acts as the identity on the trivial module
    let c2 = get("C2Q");
    assert!(c2.unit_module().action(1).is_identity());
    let idem = get("IDEM");
    assert!(idem.unit_module().action(1).is_identity());
    // (a⊗b)·c = abc on R = k[x]/(x²)
    let re = get("RE2");
    let i = re.unit_module();
    let r = &re.base;
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                let lhs = i.action(a * 2 + b).mul(&r.basis_vector(c));
                let rhs = r.product(&r.product(&r.basis_vector(a), &r.basis_vector(b)), &r.basis_vector(c));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn regular_tensor_regular_over_dual_numbers_has_dimension_eight() {
    let re = get("RE2");
    let h = re.regular_module();
    let (t, _) = re.module_tensor(&h, &h).unwrap();
    assert_eq!(t.dim(), 8);
}

#[test]
fn sign_times_sign_is_trivial() {
    let c2 = get("C2Q");
    let f = Field::Rationals;
    let sign = c2.h_module("sgn", vec![Mat::identity(f, 1), Mat::identity(f, 1).neg()]);
    let (t, _) = c2.module_tensor(&sign, &sign).unwrap();
    assert_eq!(t.dim(), 1);
    assert!(t.action(1).is_identity());
}

#[test]
fn unitors_are_module_isomorphisms() {
    for fx in builtin_fixtures() {
        let cat = Cat::h_modules(fx.bialgebroid.clone());
        let h = cat.regular().unwrap();
        let ih = cat.tensor_obj(&[cat.unit(), h.clone()]);
        let hi = cat.tensor_obj(&[h.clone(), cat.unit()]);
        let l = cat.left_unitor(&h);
        let r = cat.right_unitor(&h);
        assert!(cat.is_morphism(&l, &ih, &h), "{}", fx.name);
        assert!(cat.is_morphism(&r, &hi, &h), "{}", fx.name);
        assert!(algebroid::linalg::invert(&l).is_ok());
        assert!(algebroid::linalg::invert(&r).is_ok());
        let ins = cat.insert_unit(std::slice::from_ref(&h), 1);
        assert!(r.mul(&ins).is_identity());
    }
}

#[test]
fn restriction_is_strict_monoidal() {
    for fx in builtin_fixtures() {
        let b = fx.bialgebroid.clone();
        let hm = Cat::h_modules(b.clone());
        let bm = Cat::bimodules(b.base.clone());
        let h = hm.regular().unwrap();
        let hb = b.restrict(&h);
        let t_h = hm.tensor(&[h.clone(), h.clone(), h.clone()]);
        let t_b = bm.tensor(&[hb.clone(), hb.clone(), hb.clone()]);
        assert_eq!(t_h.obj.lefts(), t_b.obj.lefts());
        assert_eq!(t_h.obj.rights(), t_b.obj.rights());
        assert_eq!(t_h.proj, t_b.proj);
        // unitors agree on underlying bimodules
        assert_eq!(hm.left_unitor(&h), bm.left_unitor(&hb));
    }
}

#[test]
fn associativity_identifications_are_inverse_and_linear() {
    for fx in builtin_fixtures() {
        let cat = Cat::h_modules(fx.bialgebroid.clone());
        let h = cat.regular().unwrap();
        let i = cat.unit();
        let hi = cat.tensor_obj(&[h.clone(), i.clone()]);
        let list = [hi.clone(), h.clone()];
        let e = cat.assoc_expand(&list, 0, &[h.clone(), i.clone()]);
        let c = cat.assoc_collapse(&list, 0, &[h.clone(), i.clone()]);
        assert!(c.mul(&e).is_identity());
        assert!(e.mul(&c).is_identity());
        let src = cat.tensor_obj(&list);
        let dst = cat.tensor_obj(&[h.clone(), i.clone(), h.clone()]);
        assert!(cat.is_morphism(&e, &src, &dst), "{}", fx.name);
    }
}
