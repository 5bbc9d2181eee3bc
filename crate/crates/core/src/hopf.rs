//! Hopf and anti-Hopf decisions via the Galois map, finiteness over the
//! base, hom-preservation by the forgetful functor, and left duals.

use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

use crate::algebra::ModuleObject;
use crate::bialgebroid::Bialgebroid;
use crate::bimodule::{dual_basis, Projectivity};
use crate::category::Cat;
use crate::linalg::{invert, rank, solve, Quotient, Subspace};
use crate::mat::Mat;
use crate::module::{quotient_module, Obj};
use crate::report::{diff_witness, CheckReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("the Galois map does not descend to the {0} quotient")]
    IllDefined(&'static str),
}

/// `β: H ⊗_{R̄} H → H ⊗_R H`, `g ⊗ h ↦ g₁ ⊗ g₂h`.
#[derive(Clone, Debug)]
pub struct GaloisMap {
    pub domain: Quotient,
    pub codomain: Quotient,
    /// `β` on the ground tensors.
    pub lift: Mat,
    pub matrix: Mat,
}

/// `h ↦ h₊ ⊗ h₋ := β⁻¹(h ⊗ 1)`, as representatives in `H ⊗_k H`.
#[derive(Clone, Debug, PartialEq)]
pub struct TranslationMap {
    /// `dim H² × dim H`, column `h` is `h₊ ⊗ h₋`.
    pub matrix: Mat,
}

#[derive(Clone, Debug)]
pub enum HopfVerdict {
    Hopf(TranslationMap),
    NotHopf { rank: usize, domain_dim: usize, codomain_dim: usize, cokernel: Option<Mat> },
}

impl HopfVerdict {
    pub fn is_hopf(&self) -> bool {
        matches!(self, HopfVerdict::Hopf(_))
    }

    pub fn translation_map(&self) -> Option<&TranslationMap> {
        match self {
            HopfVerdict::Hopf(t) => Some(t),
            _ => None,
        }
    }

    pub fn report(&self, id: &str) -> CheckReport {
        match self {
            HopfVerdict::Hopf(_) => CheckReport::pass(id),
            HopfVerdict::NotHopf { rank, domain_dim, codomain_dim, cokernel } => CheckReport::fail(
                id,
                json!({
                    "rank": format!("{rank}/{codomain_dim}"),
                    "domain_dim": domain_dim,
                    "cokernel_vector": cokernel.as_ref().map(|c| c.to_triples()),
                }),
            ),
        }
    }
}

/// Presentation of `H ⊗_{R̄} H`: `g·t(a) ⊗ h ≡ g ⊗ t(a)·h`.
pub fn galois_domain(b: &Bialgebroid) -> Quotient {
    let f = b.field();
    let id = Mat::identity(f, b.dim());
    let rels: Vec<Mat> =
        (0..b.base_dim()).map(|a| b.total.right_mul_by(&b.t(a)).kron(&id).sub(&id.kron(&b.t_left(a)))).collect();
    Quotient::by_span(&Mat::hstack(&rels.iter().collect::<Vec<_>>()))
}

pub fn galois_map(b: &Bialgebroid) -> Result<GaloisMap, HopfError> {
    let f = b.field();
    let id = Mat::identity(f, b.dim());
    let domain = galois_domain(b);
    let codomain = b.codomain_quotient();
    let lift = id.kron(b.total.mul_matrix()).mul(&b.coproduct.kron(&id));
    let on_domain = codomain.projection.mul(&lift);
    if !on_domain.mul(&domain.relations).is_zero() {
        return Err(HopfError::IllDefined("domain"));
    }
    let matrix = on_domain.mul(&domain.section);
    Ok(GaloisMap { domain, codomain, lift, matrix })
}

/// Decides whether `β` is bijective and extracts the translation map.
pub fn is_hopf(b: &Bialgebroid) -> Result<HopfVerdict, HopfError> {
    let g = galois_map(b)?;
    let (dd, dc) = (g.domain.dim(), g.codomain.dim());
    let rk = rank(&g.matrix);
    if dd != dc || rk != dc {
        let coker = crate::linalg::kernel(&g.matrix.transpose());
        let cokernel = (coker.ncols() > 0).then(|| coker.column(0));
        return Ok(HopfVerdict::NotHopf { rank: rk, domain_dim: dd, codomain_dim: dc, cokernel });
    }
    let inv = invert(&g.matrix).expect("full rank");
    let unit = b.total.unit();
    let id = Mat::identity(b.field(), b.dim());
    let h_one = g.codomain.projection.mul(&id.kron(unit));
    let matrix = g.domain.section.mul(&inv).mul(&h_one);
    Ok(HopfVerdict::Hopf(TranslationMap { matrix }))
}

pub fn is_anti_hopf(b: &Bialgebroid) -> Result<HopfVerdict, HopfError> {
    is_hopf(&b.coopposite())
}

/// The two defining identities of the translation map.
pub fn check_translation_map(b: &Bialgebroid, tm: &TranslationMap) -> CheckReport {
    let f = b.field();
    let id = Mat::identity(f, b.dim());
    let unit = b.total.unit();
    let g = galois_map(b).expect("checked by caller");
    // h₊₁ ⊗ h₊₂ h₋ = h ⊗ 1 in H ⊗_R H
    let lhs1 = g.codomain.projection.mul(&g.lift).mul(&tm.matrix);
    let rhs1 = g.codomain.projection.mul(&id.kron(unit));
    // h₁₊ ⊗ h₁₋ h₂ = h ⊗ 1 in H ⊗_{R̄} H
    let lift2 = id.kron(b.total.mul_matrix()).mul(&tm.matrix.kron(&id)).mul(&b.coproduct);
    let lhs2 = g.domain.projection.mul(&lift2);
    let rhs2 = g.domain.projection.mul(&id.kron(unit));
    CheckReport::group(
        "translation-map",
        vec![
            CheckReport::check("beta-of-translation", lhs1 == rhs1, || diff_witness(&lhs1, &rhs1)),
            CheckReport::check("translation-of-beta", lhs2 == rhs2, || diff_witness(&lhs2, &rhs2)),
        ],
    )
}

// ---- finiteness -----------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Finiteness {
    /// `H` as a left `R̄`-module through `t`.
    pub left: Projectivity,
    /// `H` as a left `R`-module through `s`.
    pub right: Projectivity,
}

pub fn h_over_target(b: &Bialgebroid) -> ModuleObject {
    let op = Arc::new(b.base.opposite());
    ModuleObject { algebra: op, dim: b.dim(), action: (0..b.base_dim()).map(|a| b.t_left(a)).collect() }
}

pub fn h_over_source(b: &Bialgebroid) -> ModuleObject {
    ModuleObject { algebra: b.base.clone(), dim: b.dim(), action: (0..b.base_dim()).map(|a| b.s_left(a)).collect() }
}

pub fn finiteness(b: &Bialgebroid) -> Finiteness {
    Finiteness { left: dual_basis(&h_over_target(b)), right: dual_basis(&h_over_source(b)) }
}

impl Finiteness {
    pub fn report(&self) -> CheckReport {
        let one = |id: &str, p: &Projectivity| match p {
            Projectivity::Projective(db) => {
                CheckReport::pass(id).with_witness(json!({ "generators": db.generators }))
            }
            Projectivity::NotProjective(w) => CheckReport::fail(id, w.clone()),
        };
        CheckReport::group("finiteness", vec![one("left-finite", &self.left), one("right-finite", &self.right)])
    }
}

// ---- inner homs and preservation -------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Regular module, unit module, and quotients `H / H b` by the principal
/// submodules generated by basis elements (distinct, proper, nonzero).
pub fn test_family(cat: &Cat) -> Vec<Obj> {
    let b = cat.bialgebroid().expect("H-modules").clone();
    let h = cat.regular().expect("H-modules");
    let mut out = vec![h.clone(), cat.unit()];
    let mut seen: Vec<Subspace> = Vec::new();
    for i in 0..b.dim() {
        let sub = crate::module::generated_submodule(&h, &b.total.basis_vector(i));
        if sub.dim() == 0 || sub.dim() == h.dim() || seen.iter().any(|s| s.basis == sub.basis) {
            continue;
        }
        if let Some((q, _)) = quotient_module(format!("H/H{i}"), &h, &sub.basis) {
            out.push(q);
        }
        seen.push(sub);
    }
    out
}

/// Canonical comparison `restrict([x,y]) → [restrict x, restrict y]` of the
/// left or right inner homs, adjoint to the restricted evaluation.
pub fn comparison_map(hm: &Cat, bm: &Cat, x: &Obj, y: &Obj, side: Side) -> (Mat, Obj, Obj) {
    let b = hm.bialgebroid().expect("H-modules");
    let (xb, yb) = (b.restrict(x), b.restrict(y));
    match side {
        Side::Left => {
            let h = hm.hom_left(x, y);
            let hb = b.restrict(&h.obj);
            // restricted tensor presentations coincide with the bimodule ones
            (bm.adjunct_left(&xb, std::slice::from_ref(&hb), &yb, &h.eval), hb, bm.hom_left(&xb, &yb).obj.clone())
        }
        Side::Right => {
            let h = hm.hom_right(x, y);
            let hb = b.restrict(&h.obj);
            (bm.adjunct_right(&xb, std::slice::from_ref(&hb), &yb, &h.eval), hb, bm.hom_right(&xb, &yb).obj.clone())
        }
    }
}

pub fn check_hom_preservation(hm: &Cat, bm: &Cat, x: &Obj, y: &Obj, side: Side) -> CheckReport {
    let (m, src, dst) = comparison_map(hm, bm, x, y, side);
    let id = format!("preserves-{}-hom[{},{}]", side.name(), x.label(), y.label());
    let morphism = bm.is_morphism(&m, &src, &dst);
    let rk = rank(&m);
    let iso = morphism && src.dim() == dst.dim() && rk == dst.dim();
    CheckReport::check(id, iso, || {
        json!({ "rank": rk, "source_dim": src.dim(), "target_dim": dst.dim(), "bimodule_map": morphism })
    })
}

/// Conjunction of hom-preservation over all pairs of the test family.
pub fn preservation_over_family(b: &Arc<Bialgebroid>, side: Side) -> CheckReport {
    let hm = Cat::h_modules(b.clone());
    let bm = Cat::bimodules(b.base.clone());
    let fam = test_family(&hm);
    let mut out = Vec::new();
    for x in &fam {
        for y in &fam {
            out.push(check_hom_preservation(&hm, &bm, x, y, side));
        }
    }
    CheckReport::group(format!("hom-preservation-{}", side.name()), out)
}

/// Adjunction `Hom(x ⊗ w, y) ≅ Hom(w, [x,y])` checked on a test object:
/// equal dimensions, and `f ↦ adjunct(f)` is inverted by the evaluation.
pub fn hom_adjunction_check(cat: &Cat, x: &Obj, y: &Obj, w: &Obj) -> CheckReport {
    let h = cat.hom_left(x, y);
    let xw = cat.tensor_obj(&[x.clone(), w.clone()]);
    let lhs = cat.hom_space(&xw, y);
    let rhs = cat.hom_space(w, &h.obj);
    let id = format!("adjunction[{},{};{}]", x.label(), y.label(), w.label());
    if lhs.dim() != rhs.dim() {
        return CheckReport::fail(id, json!({ "hom_tensor": lhs.dim(), "hom_into_inner": rhs.dim() }));
    }
    for k in 0..lhs.dim() {
        let f = lhs.basis.column(k).unvectorize(y.dim(), xw.dim());
        let g = cat.adjunct_left(x, std::slice::from_ref(w), y, &f);
        let back = h.eval.mul(&cat.whisker(&[x.clone(), w.clone()], 1, 1, &g, std::slice::from_ref(&h.obj)));
        if !cat.is_morphism(&g, w, &h.obj) || back != f {
            return CheckReport::fail(id, json!({ "basis_map": k }));
        }
    }
    CheckReport::pass(id)
}

// ---- duals -----------------------------------------------------------------

/// `ev: ℓP ⊗ P → I` and `db: I → P ⊗ ℓP` satisfying the zig-zag identities.
#[derive(Clone, Debug)]
pub struct RigidWitness {
    pub object: Obj,
    pub dual: Obj,
    pub ev: Mat,
    pub db: Mat,
}

#[derive(Debug, Clone, Error, PartialEq)]
#[error("no left dual: {reason}")]
pub struct NotRigid {
    pub reason: String,
}

fn zigzag_p(cat: &Cat, p: &Obj, lp: &Obj, ev: &Mat, db: &Mat) -> Mat {
    let i = cat.unit();
    cat.remove_unit(&[p.clone(), i.clone()], 1)
        .mul(&cat.whisker(&[p.clone(), lp.clone(), p.clone()], 1, 2, ev, std::slice::from_ref(&i)))
        .mul(&cat.whisker(&[i.clone(), p.clone()], 0, 1, db, &[p.clone(), lp.clone()]))
        .mul(&cat.insert_unit(std::slice::from_ref(p), 0))
}

fn zigzag_dual(cat: &Cat, p: &Obj, lp: &Obj, ev: &Mat, db: &Mat) -> Mat {
    let i = cat.unit();
    cat.remove_unit(&[i.clone(), lp.clone()], 0)
        .mul(&cat.whisker(&[lp.clone(), p.clone(), lp.clone()], 0, 2, ev, std::slice::from_ref(&i)))
        .mul(&cat.whisker(&[lp.clone(), i.clone()], 1, 1, db, &[p.clone(), lp.clone()]))
        .mul(&cat.insert_unit(std::slice::from_ref(lp), 1))
}

/// `ℓP := [P, I]` (right inner hom) with the evaluation as `ev`; `db` is
/// solved from morphism-ness and both zig-zag identities.
pub fn left_dual_module(cat: &Cat, p: &Obj) -> Result<RigidWitness, NotRigid> {
    let f = cat.field();
    let i = cat.unit();
    let hom = cat.hom_right(p, &i);
    let lp = hom.obj.clone();
    let ev = hom.eval.clone();
    let plp = cat.tensor_obj(&[p.clone(), lp.clone()]);
    let (rows, cols) = (plp.dim(), i.dim());
    let n = rows * cols;
    if n == 0 {
        return Err(NotRigid { reason: "P ⊗ ℓP is zero".into() });
    }
    // Affine system: one column per unknown entry of db.
    let zero = Mat::zeros(f, rows, cols);
    let z1 = zigzag_p(cat, p, &lp, &ev, &zero);
    let z2 = zigzag_dual(cat, p, &lp, &ev, &zero);
    let morph_ops = |d: &Mat| -> Vec<Mat> {
        let src = cat.unit();
        let ops_s: Vec<Mat> = match cat.kind() {
            crate::category::Kind::Bimodules(_) => src.lefts().iter().chain(src.rights()).cloned().collect(),
            crate::category::Kind::HModules(_) => src.actions().expect("H-module").to_vec(),
        };
        let ops_d: Vec<Mat> = match cat.kind() {
            crate::category::Kind::Bimodules(_) => plp.lefts().iter().chain(plp.rights()).cloned().collect(),
            crate::category::Kind::HModules(_) => plp.actions().expect("H-module").to_vec(),
        };
        ops_s.iter().zip(&ops_d).map(|(a, b)| d.mul(a).sub(&b.mul(d))).collect()
    };
    let flatten = |d: &Mat| -> Mat {
        let mut parts = morph_ops(d);
        parts.push(zigzag_p(cat, p, &lp, &ev, d).sub(&z1));
        parts.push(zigzag_dual(cat, p, &lp, &ev, d).sub(&z2));
        Mat::vstack(&parts.iter().map(|m| m.vectorize()).collect::<Vec<_>>().iter().collect::<Vec<_>>())
    };
    let columns: Vec<Mat> = (0..n)
        .map(|k| {
            let mut e = Mat::zeros(f, rows, cols);
            e.set(k / cols, k % cols, f.one());
            flatten(&e)
        })
        .collect();
    let system = Mat::hstack(&columns.iter().collect::<Vec<_>>());
    let mut rhs_parts: Vec<Mat> = morph_ops(&zero).iter().map(|m| m.vectorize()).collect();
    rhs_parts.push(Mat::identity(f, p.dim()).sub(&z1).vectorize());
    rhs_parts.push(Mat::identity(f, lp.dim()).sub(&z2).vectorize());
    let rhs = Mat::vstack(&rhs_parts.iter().collect::<Vec<_>>());
    match solve(&system, &rhs) {
        Ok(sol) => {
            let db = sol.particular.unvectorize(rows, cols);
            Ok(RigidWitness { object: p.clone(), dual: lp, ev, db })
        }
        Err(_) => Err(NotRigid { reason: format!("zig-zag system for {} has no solution", p.label()) }),
    }
}

pub fn check_triangles(cat: &Cat, w: &RigidWitness) -> CheckReport {
    let f = cat.field();
    let z1 = zigzag_p(cat, &w.object, &w.dual, &w.ev, &w.db);
    let z2 = zigzag_dual(cat, &w.object, &w.dual, &w.ev, &w.db);
    let i1 = Mat::identity(f, w.object.dim());
    let i2 = Mat::identity(f, w.dual.dim());
    let plp = cat.tensor_obj(&[w.object.clone(), w.dual.clone()]);
    let lpp = cat.tensor_obj(&[w.dual.clone(), w.object.clone()]);
    CheckReport::group(
        "rigidity",
        vec![
            CheckReport::check("ev-morphism", cat.is_morphism(&w.ev, &lpp, &cat.unit()), || json!(null)),
            CheckReport::check("db-morphism", cat.is_morphism(&w.db, &cat.unit(), &plp), || json!(null)),
            CheckReport::check("zigzag-object", z1 == i1, || diff_witness(&z1, &i1)),
            CheckReport::check("zigzag-dual", z2 == i2, || diff_witness(&z2, &i2)),
        ],
    )
}

/// The same witness seen in bimodules through the forgetful functor.
pub fn restrict_witness(b: &Bialgebroid, w: &RigidWitness) -> RigidWitness {
    RigidWitness { object: b.restrict(&w.object), dual: b.restrict(&w.dual), ev: w.ev.clone(), db: w.db.clone() }
}

/// `H` as a left module over itself, used to test projectivity of modules
/// over `H`.
pub fn as_module_object(b: &Bialgebroid, m: &Obj) -> ModuleObject {
    ModuleObject { algebra: b.total.clone(), dim: m.dim(), action: m.actions().expect("H-module").to_vec() }
}
