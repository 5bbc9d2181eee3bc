//! End-to-end verifiers over the weak centralizers, the skew dual carrier
//! and a best-effort algebra-level reconstruction of it.
//!
//! Every verifier first evaluates its hypotheses; when one fails the whole
//! report is `inapplicable`, never a pass.

use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{check_action, Algebra};
use crate::bialgebroid::{check_bialgebroid, Bialgebroid};
use crate::bimodule::{DualBasis, Projectivity};
use crate::category::Cat;
use crate::centralizer::{
    adjoint_module, braided_morphisms, direct_sum_braided, check_half_braiding, coaction_carrier, invert_braiding_at_dual, is_central,
    quotient_braided, regular_coaction_object, unit_object, unit_swap, Functor, FunctorKind, HalfBraided,
};
use crate::hopf::{check_hom_preservation, finiteness, is_anti_hopf, is_hopf, left_dual_module, test_family, Side};
use crate::linalg::{invert, rank, Subspace};
use crate::mat::Mat;
use crate::module::{Module, Obj};
use crate::prop1::{check_hom_object, hom_object_with};
use crate::report::{diff_witness, CheckReport};

pub const DEFAULT_GRID: usize = 3;

// ---- hypotheses -------------------------------------------------------------

/// Which standing assumptions hold for a bialgebroid, with a reason for
/// each one that does not.
#[derive(Clone, Debug, PartialEq)]
pub struct Hypotheses {
    pub axioms: Result<(), String>,
    pub hopf: Result<(), String>,
    pub anti_hopf: Result<(), String>,
    pub left_finite: Result<(), String>,
    pub right_finite: Result<(), String>,
}

impl Hypotheses {
    pub fn of(b: &Bialgebroid) -> Hypotheses {
        let axioms = if check_bialgebroid(b).passed() { Ok(()) } else { Err("axioms fail".to_string()) };
        let verdict = |v: Result<crate::hopf::HopfVerdict, crate::hopf::HopfError>, what: &str| match v {
            Ok(v) if v.is_hopf() => Ok(()),
            Ok(v) => Err(format!("not {what}: Galois rank {}", v.report("r").witness.map(|w| w["rank"].clone()).unwrap_or(Value::Null))),
            Err(e) => Err(format!("not {what}: {e}")),
        };
        let fin = finiteness(b);
        let proj = |p: &Projectivity, what: &str| if p.is_projective() { Ok(()) } else { Err(format!("not {what}")) };
        Hypotheses {
            axioms,
            hopf: verdict(is_hopf(b), "Hopf"),
            anti_hopf: verdict(is_anti_hopf(b), "anti-Hopf"),
            left_finite: proj(&fin.left, "left finite"),
            right_finite: proj(&fin.right, "right finite"),
        }
    }

    /// First failing hypothesis among those named.
    fn gate(&self, needs: &[&str]) -> Option<String> {
        let mut needs = needs.to_vec();
        needs.insert(0, "axioms");
        needs.iter().find_map(|n| {
            let r = match *n {
                "axioms" => &self.axioms,
                "hopf" => &self.hopf,
                "anti_hopf" => &self.anti_hopf,
                "left_finite" => &self.left_finite,
                "right_finite" => &self.right_finite,
                _ => unreachable!("unknown hypothesis {n}"),
            };
            r.clone().err()
        })
    }
}

// ---- test grid ----------------------------------------------------------------

/// The regular half-braided object: `H` with `x ⊗ v ↦ x₁v ⊗ x₂`, on the
/// coaction carrier (restriction) or the adjoint module (identity).
pub fn regular_object(f: &Functor) -> Option<HalfBraided> {
    match f.kind {
        FunctorKind::Restrict => Some(regular_coaction_object(f, coaction_carrier(f))),
        FunctorKind::Identity => {
            let b = f.source.bialgebroid().expect("H-modules").clone();
            let v = is_hopf(&b).ok()?;
            let tm = v.translation_map()?;
            // the adjoint carrier need not be a module over a noncommutative base
            let had = adjoint_module(f, tm);
            check_action(&b.total, had.actions()?, had.dim()).passed().then(|| regular_coaction_object(f, had))
        }
    }
}

/// Unit, regular object, then quotients of the regular object by images of
/// braided maps into it (proper, nonzero, distinct dimensions), then direct
/// sums with the unit, up to `size`.
pub fn test_grid(f: &Functor, size: usize) -> Vec<HalfBraided> {
    let mut out = vec![unit_object(f)];
    let Some(reg) = regular_object(f) else {
        fill_with_sums(f, &mut out, size);
        return out;
    };
    out.push(reg.clone());
    let mut maps = braided_morphisms(f, &reg, &reg);
    maps.extend(braided_morphisms(f, &out[0], &reg));
    let mut dims = vec![reg.x.dim()];
    for (k, phi) in maps.iter().enumerate() {
        if out.len() >= size {
            break;
        }
        let r = rank(phi);
        if r == 0 || r >= reg.x.dim() || dims.contains(&(reg.x.dim() - r)) {
            continue;
        }
        if let Some(q) = quotient_braided(f, &reg, phi, &format!("{}/im{k}", reg.x.label())) {
            dims.push(q.x.dim());
            out.push(q);
        }
    }
    fill_with_sums(f, &mut out, size);
    out.truncate(size.max(1));
    out
}

/// Appends `I ⊕ X` for the objects present so far, in order, until `size`.
fn fill_with_sums(f: &Functor, out: &mut Vec<HalfBraided>, size: usize) {
    let mut k = 0;
    while out.len() < size {
        let unit = out[0].clone();
        let x = out[k % out.len()].clone();
        let label = format!("I+{}", x.x.label());
        out.push(direct_sum_braided(f, &[&unit, &x], &label));
        k += 1;
    }
}

fn grid_report(f: &Functor, grid: &[HalfBraided]) -> CheckReport {
    let mut out = Vec::new();
    for o in grid {
        let mut r = check_half_braiding(f, o);
        r.id = format!("object[{}]", o.x.label());
        out.push(r);
    }
    CheckReport::group("grid", out)
}

/// Right-chirality version of a left object: the inverse component.
fn to_right(o: &HalfBraided) -> Option<HalfBraided> {
    invert(&o.c).ok().map(|c| HalfBraided { x: o.x.clone(), c })
}

/// Per pair `(X, Y)` and rigid `T ∈ {H, I}`: the full hom-object check at
/// `T = H`, and the unit law of the solved component at `T = I`.
fn hom_pairs(f: &Functor, grid: &[HalfBraided], preserve: Option<(Side, &Cat, &Cat)>) -> CheckReport {
    let w_unit = left_dual_module(&f.source, &f.source.unit());
    let mut out = Vec::new();
    for x in grid {
        for y in grid {
            let pair = format!("[{},{}]", x.x.label(), y.x.label());
            let mut full = check_hom_object(f, x, y, &format!("T=H{pair}"));
            if let Some((side, hm, bm)) = preserve {
                full.push(check_hom_preservation(hm, bm, &x.x, &y.x, side));
            }
            out.push(full);
            let unit_row = match &w_unit {
                Ok(w) => match hom_object_with(f, x, y, w) {
                    Ok(h) => {
                        let expect = unit_swap(&f.target, &h.x);
                        CheckReport::check(format!("T=I{pair}"), h.c == expect, || diff_witness(&h.c, &expect))
                    }
                    Err(e) => CheckReport::fail(format!("T=I{pair}"), json!({ "error": e.to_string() })),
                },
                Err(e) => CheckReport::fail(format!("T=I{pair}"), json!({ "error": e.to_string() })),
            };
            out.push(unit_row);
        }
    }
    CheckReport::group("hom-objects", out)
}

// ---- verifiers ----------------------------------------------------------------

/// Inner homs in the weak left centralizer of restriction exist, carry the
/// solved half-braiding, and are preserved literally by the forgetful functor.
pub fn verify_thm1(b: &Arc<Bialgebroid>, size: usize) -> CheckReport {
    verify_thm1_with(b, &Hypotheses::of(b), size)
}

pub fn verify_thm1_with(b: &Arc<Bialgebroid>, h: &Hypotheses, size: usize) -> CheckReport {
    if let Some(why) = h.gate(&["hopf", "left_finite"]) {
        return CheckReport::inapplicable("verify-thm1", why);
    }
    let f = Functor::new(Cat::h_modules(b.clone()), FunctorKind::Restrict);
    let grid = test_grid(&f, size);
    CheckReport::group("verify-thm1", vec![grid_report(&f, &grid), hom_pairs(&f, &grid, None)])
}

/// Mirror of the above with right chirality, after showing that every grid
/// object is central and converts between chiralities.
pub fn verify_thm2(b: &Arc<Bialgebroid>, size: usize) -> CheckReport {
    verify_thm2_with(b, &Hypotheses::of(b), size)
}

pub fn verify_thm2_with(b: &Arc<Bialgebroid>, h: &Hypotheses, size: usize) -> CheckReport {
    if let Some(why) = h.gate(&["hopf", "anti_hopf", "left_finite", "right_finite"]) {
        return CheckReport::inapplicable("verify-thm2", why);
    }
    let f = Functor::new(Cat::h_modules(b.clone()), FunctorKind::Restrict);
    let grid = test_grid(&f, size);
    let (conv, right) = convert_to_right(&f, &grid);
    let g = f.mirrored();
    let mut out = vec![grid_report(&f, &grid), conv];
    if let Some(right) = right {
        let mut rg = grid_report(&g, &right);
        rg.id = "right-grid".into();
        out.push(rg);
        out.push(hom_pairs(&g, &right, None));
    }
    CheckReport::group("verify-thm2", out)
}

/// Left and right centralizers agree on the grid: components are invertible
/// on the test family, the inverse at the dual of `H` comes from the
/// zig-zag, and the inverted braiding is a right half-braiding.
fn convert_to_right(f: &Arc<Functor>, grid: &[HalfBraided]) -> (CheckReport, Option<Vec<HalfBraided>>) {
    let family = test_family(&f.source);
    let w = left_dual_module(&f.source, &f.regular());
    let g = f.mirrored();
    let mut out = Vec::new();
    let mut right = Some(Vec::new());
    for o in grid {
        let label = o.x.label().to_string();
        let mut rows = vec![is_central(f, o, &family)];
        rows.push(match &w {
            Ok(w) => match invert_braiding_at_dual(f, o, w) {
                Ok(_) => CheckReport::pass("zig-zag-inverse"),
                Err(e) => CheckReport::fail("zig-zag-inverse", json!({ "error": e.to_string() })),
            },
            Err(e) => CheckReport::fail("zig-zag-inverse", json!({ "error": e.to_string() })),
        });
        match to_right(o) {
            Some(r) => {
                let mut hb = check_half_braiding(&g, &r);
                hb.id = "right-half-braiding".into();
                rows.push(hb);
                if let Some(v) = right.as_mut() {
                    v.push(r);
                }
            }
            None => {
                rows.push(CheckReport::fail("right-half-braiding", json!("component is singular")));
                right = None;
            }
        }
        out.push(CheckReport::group(format!("left-equals-right[{label}]"), rows));
    }
    (CheckReport::group("left-equals-right", out), right)
}

/// Inner homs in the weak centralizer of the identity functor: left homs
/// preserved to `H`-modules and from there to bimodules; with right
/// finiteness, the same for right homs.
pub fn verify_thm3(b: &Arc<Bialgebroid>, size: usize) -> CheckReport {
    verify_thm3_with(b, &Hypotheses::of(b), size)
}

pub fn verify_thm3_with(b: &Arc<Bialgebroid>, h: &Hypotheses, size: usize) -> CheckReport {
    if let Some(why) = h.gate(&["hopf", "anti_hopf"]) {
        return CheckReport::inapplicable("verify-thm3", why);
    }
    let hm = Cat::h_modules(b.clone());
    let bm = Cat::bimodules(b.base.clone());
    let f = Functor::new(hm.clone(), FunctorKind::Identity);
    let grid = test_grid(&f, size);
    let first = CheckReport::group(
        "left-homs",
        vec![grid_report(&f, &grid), hom_pairs(&f, &grid, Some((Side::Left, &hm, &bm)))],
    );
    let second = if let Some(why) = h.gate(&["right_finite"]) {
        CheckReport::inapplicable("right-homs", why)
    } else {
        let (conv, right) = convert_to_right(&f, &grid);
        let g = f.mirrored();
        let mut rows = vec![conv];
        if let Some(right) = right {
            rows.push(hom_pairs(&g, &right, Some((Side::Right, &hm, &bm))));
        }
        CheckReport::group("right-homs", rows)
    };
    CheckReport::group("verify-thm3", vec![first, second])
}

// ---- skew dual carrier ----------------------------------------------------------

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DualError {
    #[error("H is not finitely generated projective over the target: {0}")]
    NotLeftFinite(Value),
}

/// `Hom(H, R)` of maps with `f(t(a)h) = f(h)a`, as a bimodule with
/// `(a·f·b)(h) = a f(h t(b))`. Elements are `dim R × dim H` matrices,
/// vectorized row-major in `space`.
#[derive(Clone, Debug)]
pub struct DualCarrier {
    pub space: Subspace,
    pub module: Obj,
    pub dual_basis: DualBasis,
}

impl DualCarrier {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The `k`-th basis map as a `dim R × dim H` matrix.
    pub fn element(&self, k: usize, r: usize, h: usize) -> Mat {
        self.space.basis.column(k).unvectorize(r, h)
    }
}

pub fn dual_space(b: &Bialgebroid) -> Result<DualCarrier, DualError> {
    let dual_basis = match finiteness(b).left {
        Projectivity::Projective(db) => *db,
        Projectivity::NotProjective(w) => return Err(DualError::NotLeftFinite(w)),
    };
    let fld = b.field();
    let (r, h) = (b.base_dim(), b.dim());
    let (ir, ih) = (Mat::identity(fld, r), Mat::identity(fld, h));
    // vec(F·T_a) − vec(ρ_a·F) = 0
    let blocks: Vec<Mat> =
        (0..r).map(|a| ir.kron(&b.t_left(a).transpose()).sub(&b.base.right_mul(a).kron(&ih))).collect();
    let space = Subspace::kernel_of(&Mat::vstack(&blocks.iter().collect::<Vec<_>>()));
    let lefts = (0..r).map(|a| space.restrict(&b.base.left_mul(a).kron(&ih))).collect();
    let rights = (0..r).map(|c| space.restrict(&ir.kron(&b.total.right_mul_by(&b.t(c)).transpose()))).collect();
    let module = Module::bimodule("Hhat", fld, space.dim(), lefts, rights);
    Ok(DualCarrier { space, module, dual_basis })
}

// ---- reconstruction -----------------------------------------------------------

/// One convention for the algebra structure on the dual: the leg order of
/// the convolution product and of the coproduct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Convention {
    pub flip_product: bool,
    pub flip_coproduct: bool,
}

impl Convention {
    pub const ALL: [Convention; 4] = [
        Convention { flip_product: false, flip_coproduct: false },
        Convention { flip_product: false, flip_coproduct: true },
        Convention { flip_product: true, flip_coproduct: false },
        Convention { flip_product: true, flip_coproduct: true },
    ];

    pub fn name(&self) -> String {
        let leg = |f: bool| if f { "(2,1)" } else { "(1,2)" };
        format!("product{}-coproduct{}", leg(self.flip_product), leg(self.flip_coproduct))
    }
}

#[derive(Clone, Debug)]
pub enum Reconstruction {
    Validated { convention: Convention, bialgebroid: Arc<Bialgebroid>, diagnostics: Vec<CheckReport> },
    Unresolved { diagnostics: Vec<CheckReport> },
}

impl Reconstruction {
    pub fn diagnostics(&self) -> &[CheckReport] {
        match self {
            Reconstruction::Validated { diagnostics, .. } | Reconstruction::Unresolved { diagnostics } => diagnostics,
        }
    }
}

/// The candidate structure on the linear dual of `H` over a field base, in
/// the basis dual to the basis of `H`.
pub fn dual_candidate(b: &Bialgebroid, c: Convention) -> Option<Bialgebroid> {
    if b.base_dim() != 1 {
        return None;
    }
    let fld = b.field();
    let h = b.dim();
    let perm = leg_swap(fld, h);
    // (εⁱ * εʲ)(e_x) = Δ(e_x)_{ij}
    let mut mul = b.coproduct.transpose();
    if c.flip_product {
        mul = mul.mul(&perm);
    }
    // Δ̂(εᵏ)_{xy} = (e_x e_y)_k
    let mut cop = b.total.mul_matrix().transpose();
    if c.flip_coproduct {
        cop = perm.mul(&cop);
    }
    let unit = b.counit.transpose();
    let counit = b.total.unit().transpose();
    let total = Algebra::from_matrices(fld, unit.clone(), mul).ok()?;
    let base = Arc::new(Algebra::ground(fld));
    Bialgebroid::new(format!("{}^", b.name), base, Arc::new(total), unit.clone(), unit, cop, counit).ok()
}

/// The permutation matrix of `u ⊗ v ↦ v ⊗ u` on `k^n ⊗ k^n`.
pub fn leg_swap(fld: crate::field::Field, n: usize) -> Mat {
    Mat::from_triples(fld, n * n, n * n, (0..n * n).map(|c| ((c % n) * n + c / n, c, fld.one())))
}

/// Action of the dual on a half-braided object of the restriction functor:
/// `φ ▷ x = (φ ⊗ X) c(x ⊗ 1)`; one matrix per dual basis element.
pub fn induced_dual_action(f: &Functor, o: &HalfBraided) -> Vec<Mat> {
    let t = &f.target;
    let b = f.source.bialgebroid().expect("H-modules");
    let (h, d) = (b.dim(), o.x.dim());
    let fh = f.fh();
    let tin = t.tensor(&[o.x.clone(), fh.clone()]);
    let tout = t.tensor(&[fh, o.x.clone()]);
    let full = tout.sec.mul(&o.c).mul(&tin.proj);
    let one = b.total.unit().clone();
    let at_one = full.mul(&Mat::identity(b.field(), d).kron(&one));
    (0..h).map(|k| at_one.select_rows(&(k * d..(k + 1) * d).collect::<Vec<_>>())).collect()
}

/// `c(x ⊗ v) = Σ_k e_k v ⊗ εᵏ ▷ x`, the braiding recovered from an action.
pub fn braiding_from_action(f: &Functor, x: &Obj, action: &[Mat]) -> Mat {
    let t = &f.target;
    let b = f.source.bialgebroid().expect("H-modules");
    let fld = b.field();
    let fh = f.fh();
    let mut acc = Mat::zeros(fld, b.dim() * x.dim(), x.dim() * b.dim());
    for (k, a) in action.iter().enumerate() {
        // (x, v) ↦ e_k e_v ⊗ a x
        acc = acc.add(&b.total.left_mul(k).kron(a).mul(&leg_swap_rect(fld, x.dim(), b.dim())));
    }
    let tin = t.tensor(&[x.clone(), fh.clone()]);
    let tout = t.tensor(&[fh, x.clone()]);
    tout.proj.mul(&acc).mul(&tin.sec)
}

/// Permutation `k^m ⊗ k^n → k^n ⊗ k^m`.
fn leg_swap_rect(fld: crate::field::Field, m: usize, n: usize) -> Mat {
    Mat::from_triples(fld, m * n, m * n, (0..m).flat_map(|i| (0..n).map(move |j| (j * m + i, i * n + j))).map(|(r, c)| (r, c, fld.one())))
}

/// Searches the candidate conventions. A candidate is validated when it is a
/// bialgebroid and every grid object of the restriction centralizer induces
/// a module over it from which its braiding is recovered exactly.
pub fn reconstruct_dual_algebra(b: &Arc<Bialgebroid>, size: usize) -> Reconstruction {
    let mut diagnostics = Vec::new();
    if b.base_dim() != 1 {
        for c in Convention::ALL {
            diagnostics.push(CheckReport::fail(
                c.name(),
                json!({ "reason": format!("base algebra has dimension {}; candidates are defined over a field base only", b.base_dim()) }),
            ));
        }
        return Reconstruction::Unresolved { diagnostics };
    }
    let f = Functor::new(Cat::h_modules(b.clone()), FunctorKind::Restrict);
    let grid = test_grid(&f, size);
    let mut found = None;
    for c in Convention::ALL {
        let Some(cand) = dual_candidate(b, c) else {
            diagnostics.push(CheckReport::fail(c.name(), json!({ "reason": "malformed structure constants" })));
            continue;
        };
        let mut rows = vec![check_bialgebroid(&cand)];
        for o in &grid {
            let action = induced_dual_action(&f, o);
            let mut m = check_action(&cand.total, &action, o.x.dim());
            m.id = format!("module[{}]", o.x.label());
            rows.push(m);
            let back = braiding_from_action(&f, &o.x, &action);
            rows.push(CheckReport::check(format!("recovers-braiding[{}]", o.x.label()), back == o.c, || {
                diff_witness(&back, &o.c)
            }));
        }
        let report = CheckReport::group(c.name(), rows);
        if report.passed() && found.is_none() {
            found = Some((c, Arc::new(cand)));
        }
        diagnostics.push(report);
    }
    match found {
        Some((convention, bialgebroid)) => Reconstruction::Validated { convention, bialgebroid, diagnostics },
        None => Reconstruction::Unresolved { diagnostics },
    }
}
