//! Half-braidings on inner hom objects.
//!
//! Given half-braided `X`, `Y` and a rigid source module `T` with
//! `U = F(T)`, the component `c: [X,Y] ⊗ U → U ⊗ [X,Y]` is the unique map
//! whose transpose under
//! `D([X,Y] ⊗ U, U ⊗ [X,Y]) ≅ D(X ⊗ ℓU ⊗ [X,Y] ⊗ U, Y)` is
//!
//! ```text
//! X ℓU [X,Y] U ─c_{X,ℓU}─▶ ℓU X [X,Y] U ─hev─▶ ℓU Y U ─c_{Y,U}─▶ ℓU U Y ─ev─▶ Y
//! ```
//!
//! It is found by two linear solves (peeling `hev`, then `ev`) and
//! cross-checked against the explicit zig-zag composite.

use serde_json::json;
use thiserror::Error;

use crate::category::{solve_right_factor, FactorError};
use crate::centralizer::{
    check_half_braiding, induce_component, is_braided_morphism, tensor_braided, CentralizerError, Functor,
    HalfBraided,
};
use crate::hopf::{left_dual_module, NotRigid, RigidWitness};
use crate::mat::Mat;
use crate::module::{direct_sum, generators, Obj};
use crate::report::{diff_witness, CheckReport};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Prop1Error {
    #[error(transparent)]
    Centralizer(#[from] CentralizerError),
    #[error(transparent)]
    NotRigid(#[from] NotRigid),
    #[error("peeling the evaluation: {0}")]
    StageA(FactorError),
    #[error("peeling the duality: {0}")]
    StageB(FactorError),
    #[error("solved component disagrees with the zig-zag composite")]
    ZigZagMismatch,
    #[error("descent to {0} failed")]
    IllDefined(String),
    #[error("two presentations of {0} give different components")]
    PresentationDependent(String),
}

/// The data of one instance of the construction.
pub struct HomBraidingProblem<'a> {
    pub functor: &'a Functor,
    pub x: &'a HalfBraided,
    pub y: &'a HalfBraided,
    pub rigid: &'a RigidWitness,
}

/// Left path of the defining diagram, `X ⊗ ℓU ⊗ [X,Y] ⊗ U → Y`.
fn left_path(p: &HomBraidingProblem, hom: &Obj, hev: &Mat) -> Result<Mat, Prop1Error> {
    let f = p.functor;
    let t = &f.target;
    let (x, y) = (p.x.x.clone(), p.y.x.clone());
    let (u, lu, i) = (f.image(&p.rigid.object), f.image(&p.rigid.dual), t.unit());
    let c_x_lu = induce_component(f, p.x, &p.rigid.dual)?;
    let c_y_u = induce_component(f, p.y, &p.rigid.object)?;
    let s1 = t.whisker(&[x.clone(), lu.clone(), hom.clone(), u.clone()], 0, 2, &c_x_lu, &[lu.clone(), x.clone()]);
    let s2 = t.whisker(&[lu.clone(), x.clone(), hom.clone(), u.clone()], 1, 2, hev, std::slice::from_ref(&y));
    let s3 = t.whisker(&[lu.clone(), y.clone(), u.clone()], 1, 2, &c_y_u, &[u.clone(), y.clone()]);
    let s4 = t.whisker(&[lu.clone(), u.clone(), y.clone()], 0, 2, &p.rigid.ev, std::slice::from_ref(&i));
    let s5 = t.remove_unit(&[i, y], 0);
    Ok(s5.mul(&s4).mul(&s3).mul(&s2).mul(&s1))
}

/// `c_{[X,Y],T}` by linear solve; uniqueness is part of the contract.
pub fn hom_half_braiding(p: &HomBraidingProblem) -> Result<Mat, Prop1Error> {
    let f = p.functor;
    let t = &f.target;
    let inner = t.hom_left(&p.x.x, &p.y.x);
    let (hom, hev) = (inner.obj.clone(), inner.eval.clone());
    let (x, y) = (p.x.x.clone(), p.y.x.clone());
    let (u, lu, i) = (f.image(&p.rigid.object), f.image(&p.rigid.dual), t.unit());
    let phi = left_path(p, &hom, &hev)?;

    // hev ∘ (X ⊗ ψ) = φ
    let psi = solve_right_factor(t, &x, &[lu.clone(), hom.clone(), u.clone()], std::slice::from_ref(&hom), &hev, &phi)
        .map_err(Prop1Error::StageA)?;
    // (ev ⊗ [X,Y]) ∘ (ℓU ⊗ c) = ψ
    let e = t
        .remove_unit(&[i.clone(), hom.clone()], 0)
        .mul(&t.whisker(&[lu.clone(), u.clone(), hom.clone()], 0, 2, &p.rigid.ev, std::slice::from_ref(&i)));
    let c = solve_right_factor(t, &lu, &[hom.clone(), u.clone()], &[u.clone(), hom.clone()], &e, &psi)
        .map_err(Prop1Error::StageB)?;

    // zig-zag: (U ⊗ φ♭)(db ⊗ [X,Y] ⊗ U)(λ⁻¹)
    let flat = t.adjunct_left(&x, &[lu.clone(), hom.clone(), u.clone()], &y, &phi);
    let zz = t
        .whisker(&[u.clone(), lu.clone(), hom.clone(), u.clone()], 1, 3, &flat, std::slice::from_ref(&hom))
        .mul(&t.whisker(&[i.clone(), hom.clone(), u.clone()], 0, 1, &p.rigid.db, &[u.clone(), lu.clone()]))
        .mul(&t.insert_unit(&[hom.clone(), u.clone()], 0));
    if zz != c {
        return Err(Prop1Error::ZigZagMismatch);
    }
    Ok(c)
}

/// `[X, Y]` in the weak centralizer, with its component at the regular module.
pub fn hom_object_in_wlc(f: &Functor, x: &HalfBraided, y: &HalfBraided) -> Result<HalfBraided, Prop1Error> {
    let w = left_dual_module(&f.source, &f.regular())?;
    hom_object_with(f, x, y, &w)
}

pub fn hom_object_with(f: &Functor, x: &HalfBraided, y: &HalfBraided, w: &RigidWitness) -> Result<HalfBraided, Prop1Error> {
    let c = hom_half_braiding(&HomBraidingProblem { functor: f, x, y, rigid: w })?;
    Ok(HalfBraided { x: f.target.hom_left(&x.x, &y.x).obj.clone(), c })
}

/// Evaluation and coevaluation of the inner hom are centralizer morphisms.
pub fn verify_adjunction_morphisms(f: &Functor, x: &HalfBraided, y: &HalfBraided, hom: &HalfBraided) -> CheckReport {
    let t = &f.target;
    let hev = t.hom_left(&x.x, &y.x).eval.clone();
    let xh = tensor_braided(f, x, hom);
    let ev_ok = is_braided_morphism(f, &xh, y, &hev);
    let ev_report = CheckReport::check("hev-braided", ev_ok, || {
        let fh = f.fh();
        let lhs = t.whisker(&[fh.clone(), xh.x.clone()], 1, 1, &hev, std::slice::from_ref(&y.x)).mul(&xh.c);
        let rhs = y.c.mul(&t.whisker(&[xh.x.clone(), fh.clone()], 0, 1, &hev, std::slice::from_ref(&y.x)));
        diff_witness(&lhs, &rhs)
    });
    let xy = tensor_braided(f, x, y);
    let coev_report = match hom_object_in_wlc(f, x, &xy) {
        Ok(hxy) => {
            let hcoev = t.hcoev(&x.x, &y.x);
            CheckReport::check("hcoev-braided", is_braided_morphism(f, y, &hxy, &hcoev), || json!(null))
        }
        Err(e) => CheckReport::fail("hcoev-braided", json!({ "error": e.to_string() })),
    };
    CheckReport::group("adjunction-morphisms", vec![ev_report, coev_report])
}

/// Everything asserted about one pair: the component exists uniquely, is a
/// half-braiding, evaluation/coevaluation are morphisms, and the carrier is
/// literally the inner hom of the target category.
pub fn check_hom_object(f: &Functor, x: &HalfBraided, y: &HalfBraided, label: &str) -> CheckReport {
    let mut out = Vec::new();
    match hom_object_in_wlc(f, x, y) {
        Ok(hom) => {
            out.push(CheckReport::pass("component-unique"));
            let mut hb = check_half_braiding(f, &hom);
            hb.id = "hom-half-braiding".into();
            out.push(hb);
            out.push(verify_adjunction_morphisms(f, x, y, &hom));
            let carrier = f.target.hom_left(&x.x, &y.x).obj.clone();
            out.push(CheckReport::check("preserved-carrier", hom.x.id() == carrier.id(), || json!(null)));
        }
        Err(e) => out.push(CheckReport::fail("component-unique", json!({ "error": e.to_string() }))),
    }
    CheckReport::group(label.to_string(), out)
}

/// Component of the hom object's half-braiding at a module `m` that need
/// not be projective: solved at free covers `H^n → m` and descended,
/// for two presentations.
pub fn extend_half_braiding(f: &Functor, x: &HalfBraided, y: &HalfBraided, m: &Obj) -> Result<Mat, Prop1Error> {
    let t = &f.target;
    let b = f.source.bialgebroid().expect("H-modules").clone();
    let hom = t.hom_left(&x.x, &y.x).obj.clone();
    let fm = f.image(m);
    let h = f.regular();
    let hd = b.dim();
    let gens = generators(m);
    let mut results = Vec::new();
    for extra in [0usize, 1] {
        let mut g = gens.clone();
        if extra == 1 {
            g.push(gens[0]);
        }
        let n = g.len();
        let parts: Vec<&crate::module::Module> = (0..n).map(|_| &*h).collect();
        let hn = direct_sum(format!("H^{n}"), &parts).module;
        let w = left_dual_module(&f.source, &hn)?;
        let c_t = hom_half_braiding(&HomBraidingProblem { functor: f, x, y, rigid: &w })?;
        let fhn = f.image(&hn);
        let p = Mat::from_fn(t.field(), m.dim(), n * hd, |row, col| m.action(col % hd).get(row, g[col / hd]));
        let in_p = t.whisker(&[hom.clone(), fhn.clone()], 1, 1, &p, std::slice::from_ref(&fm));
        let out_p = t.whisker(&[fhn, hom.clone()], 0, 1, &p, std::slice::from_ref(&fm));
        let rhs = out_p.mul(&c_t);
        let sol = crate::linalg::solve(&in_p.transpose(), &rhs.transpose())
            .map_err(|_| Prop1Error::IllDefined(m.label().to_string()))?;
        results.push(sol.particular.transpose());
    }
    if results[0] != results[1] {
        return Err(Prop1Error::PresentationDependent(m.label().to_string()));
    }
    Ok(results.swap_remove(0))
}

/// Naturality of an extended component against `q: H → m`, `e_h ↦ e_h·m_k`.
pub fn check_extension_naturality(
    f: &Functor,
    x: &HalfBraided,
    y: &HalfBraided,
    m: &Obj,
    c_m: &Mat,
    c_h: &Mat,
) -> CheckReport {
    let t = &f.target;
    let hom = t.hom_left(&x.x, &y.x).obj.clone();
    let (fh, fm) = (f.fh(), f.image(m));
    let hd = f.regular().dim();
    let mut out = Vec::new();
    for k in generators(m) {
        let q = Mat::from_fn(t.field(), m.dim(), hd, |row, col| m.action(col).get(row, k));
        let lhs = c_m.mul(&t.whisker(&[hom.clone(), fh.clone()], 1, 1, &q, std::slice::from_ref(&fm)));
        let rhs = t.whisker(&[fh.clone(), hom.clone()], 0, 1, &q, std::slice::from_ref(&fm)).mul(c_h);
        out.push(CheckReport::check(format!("natural-at-generator-{k}"), lhs == rhs, || diff_witness(&lhs, &rhs)));
    }
    CheckReport::group("extension-naturality", out)
}
