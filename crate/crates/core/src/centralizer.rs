//! Weak centralizers of a monoidal functor `F: LMod_H → D`, with `F` the
//! forgetful functor to bimodules or the identity.
//!
//! An object is a target object `X` with a half-braiding, stored only by its
//! component `c: X ⊗ F(H) → F(H) ⊗ X` at the regular module; components at
//! other modules are induced from presentations by free modules. The right
//! weak centralizer is the left one of the reversed functor.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde_json::json;
use thiserror::Error;

use crate::category::Cat;
use crate::linalg::{invert, kernel, rank, solve, Subspace};
use crate::mat::Mat;
use crate::module::{direct_sum, generators, quotient_module, Obj};
use crate::report::{diff_witness, CheckReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctorKind {
    /// `LMod_H → LMod_{R^e}`
    Restrict,
    /// `LMod_H → LMod_H`
    Identity,
}

/// A strict monoidal functor out of `H`-modules. Tensor presentations of
/// images coincide with those of the source, so the structure maps `ξ` are
/// identity matrices.
pub struct Functor {
    pub kind: FunctorKind,
    pub source: Cat,
    pub target: Cat,
    images: Mutex<HashMap<u64, Obj>>,
}

impl std::fmt::Debug for Functor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Functor").field("kind", &self.kind).field("reversed", &self.source.is_reversed()).finish()
    }
}

impl Functor {
    pub fn new(source: Cat, kind: FunctorKind) -> Arc<Functor> {
        let b = source.bialgebroid().expect("source must be H-modules").clone();
        let target = match kind {
            FunctorKind::Restrict => {
                let t = Cat::bimodules(b.base.clone());
                if source.is_reversed() {
                    t.rev()
                } else {
                    t
                }
            }
            FunctorKind::Identity => source.clone(),
        };
        Arc::new(Functor { kind, source, target, images: Mutex::new(HashMap::new()) })
    }

    /// The functor between the reversed categories (right chirality).
    pub fn mirrored(&self) -> Arc<Functor> {
        Arc::new(Functor {
            kind: self.kind,
            source: self.source.rev(),
            target: self.target.rev(),
            images: Mutex::new(self.images.lock().expect("poisoned").clone()),
        })
    }

    pub fn is_right(&self) -> bool {
        self.source.is_reversed()
    }

    pub fn regular(&self) -> Obj {
        self.source.regular().expect("H-modules")
    }

    pub fn image(&self, v: &Obj) -> Obj {
        if self.kind == FunctorKind::Identity {
            return v.clone();
        }
        if v.id() == self.source.unit().id() {
            return self.target.unit();
        }
        let mut cache = self.images.lock().expect("poisoned");
        cache
            .entry(v.id())
            .or_insert_with(|| self.source.bialgebroid().expect("H-modules").restrict(v))
            .clone()
    }

    pub fn fh(&self) -> Obj {
        self.image(&self.regular())
    }
}

/// An object of the weak left centralizer (of the functor's orientation).
#[derive(Clone, Debug)]
pub struct HalfBraided {
    pub x: Obj,
    /// `X ⊗ F(H) → F(H) ⊗ X`
    pub c: Mat,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CentralizerError {
    #[error("the braiding does not descend along the presentation of {0}")]
    IllDefined(String),
    #[error("two presentations of {0} induce different components")]
    PresentationDependent(String),
    #[error("zig-zag inverse disagrees with the matrix inverse")]
    Singular,
}

/// `λ⁻¹ρ: X ⊗ I → I ⊗ X`.
pub fn unit_swap(cat: &Cat, x: &Obj) -> Mat {
    cat.insert_unit(std::slice::from_ref(x), 0).mul(&cat.remove_unit(&[x.clone(), cat.unit()], 1))
}

/// The unit object with its trivial half-braiding.
pub fn unit_object(f: &Functor) -> HalfBraided {
    let t = &f.target;
    let i = t.unit();
    let fh = f.fh();
    let c = t.insert_unit(std::slice::from_ref(&fh), 1).mul(&t.remove_unit(&[i.clone(), fh], 0));
    HalfBraided { x: i, c }
}

fn sum_component(f: &Functor, obj: &HalfBraided, n: usize) -> (Obj, Mat) {
    let t = &f.target;
    let h = f.regular();
    let parts: Vec<&crate::module::Module> = (0..n).map(|_| &*h).collect();
    let ds = direct_sum(format!("H^{n}"), &parts);
    let hn = ds.module.clone();
    let fhn = f.image(&hn);
    let fh = f.fh();
    let x = &obj.x;
    let mut total: Option<Mat> = None;
    for i in 0..n {
        let a = t.whisker(&[fh.clone(), x.clone()], 0, 1, &ds.inclusions[i], std::slice::from_ref(&fhn));
        let b = t.whisker(&[x.clone(), fhn.clone()], 1, 1, &ds.projections[i], std::slice::from_ref(&fh));
        let term = a.mul(&obj.c).mul(&b);
        total = Some(match total {
            Some(s) => s.add(&term),
            None => term,
        });
    }
    (hn, total.expect("n ≥ 1"))
}

/// `c_{X,V}` from the presentation of `V` by the generators `gens`.
fn induce_with(f: &Functor, obj: &HalfBraided, v: &Obj, gens: &[usize]) -> Result<Mat, CentralizerError> {
    let t = &f.target;
    let fld = t.field();
    let b = f.source.bialgebroid().expect("H-modules").clone();
    let hdim = b.dim();
    let n = gens.len();
    let (hn, c_hn) = sum_component(f, obj, n);
    // p: H^n → V, e_h in summand k ↦ e_h · v_k
    let p = Mat::from_fn(fld, v.dim(), n * hdim, |row, col| v.action(col % hdim).get(row, gens[col / hdim]));
    let (fv, fhn, x) = (f.image(v), f.image(&hn), obj.x.clone());
    let x_p = t.whisker(&[x.clone(), fhn.clone()], 1, 1, &p, std::slice::from_ref(&fv));
    let p_x = t.whisker(&[fhn, x.clone()], 0, 1, &p, std::slice::from_ref(&fv));
    let rhs = p_x.mul(&c_hn);
    // c_V · (X ⊗ p) = (p ⊗ X) · c_{H^n}
    match solve(&x_p.transpose(), &rhs.transpose()) {
        Ok(sol) => Ok(sol.particular.transpose()),
        Err(_) => Err(CentralizerError::IllDefined(v.label().to_string())),
    }
}

/// Component of the half-braiding at an arbitrary `H`-module, recomputed
/// with a second presentation to confirm independence of choices.
pub fn induce_component(f: &Functor, obj: &HalfBraided, v: &Obj) -> Result<Mat, CentralizerError> {
    if v.id() == f.regular().id() {
        return Ok(obj.c.clone());
    }
    let t = &f.target;
    if v.dim() == 0 {
        let fv = f.image(v);
        let d = t.tensor_obj(&[obj.x.clone(), fv]).dim();
        return Ok(Mat::zeros(t.field(), d, d));
    }
    let gens = generators(v);
    let first = induce_with(f, obj, v, &gens)?;
    let mut more = gens.clone();
    more.push(gens[0]);
    let second = induce_with(f, obj, v, &more)?;
    if first != second {
        return Err(CentralizerError::PresentationDependent(v.label().to_string()));
    }
    Ok(first)
}

/// Equivariance under right multiplications, hexagon at `H ⊗ H`, unit law.
pub fn check_half_braiding(f: &Functor, obj: &HalfBraided) -> CheckReport {
    let t = &f.target;
    let b = f.source.bialgebroid().expect("H-modules").clone();
    let (x, fh) = (obj.x.clone(), f.fh());
    let src = t.tensor_obj(&[x.clone(), fh.clone()]);
    let dst = t.tensor_obj(&[fh.clone(), x.clone()]);
    let mut out = Vec::new();
    let shape_ok = obj.c.shape() == (dst.dim(), src.dim());
    if !shape_ok {
        out.push(CheckReport::fail("shape", json!({ "got": obj.c.shape(), "expected": (dst.dim(), src.dim()) })));
        return CheckReport::group("half-braiding", out);
    }
    out.push(CheckReport::check("morphism", t.is_morphism(&obj.c, &src, &dst), || json!(null)));

    let mut equi = CheckReport::pass("equivariance");
    for g in 0..b.dim() {
        let rho = b.total.right_mul(g);
        let lhs = obj.c.mul(&t.whisker(&[x.clone(), fh.clone()], 1, 1, &rho, std::slice::from_ref(&fh)));
        let rhs = t.whisker(&[fh.clone(), x.clone()], 0, 1, &rho, std::slice::from_ref(&fh)).mul(&obj.c);
        if lhs != rhs {
            equi = CheckReport::fail("equivariance", json!({ "g": g, "difference": diff_witness(&lhs, &rhs) }));
            break;
        }
    }
    let equivariant = equi.passed();
    out.push(equi);

    if !equivariant || !out[0].passed() {
        out.push(CheckReport::inapplicable("hexagon", "component is not natural at the generator"));
        out.push(CheckReport::inapplicable("unit", "component is not natural at the generator"));
        return CheckReport::group("half-braiding", out);
    }

    let h = f.regular();
    let hh = f.source.tensor_obj(&[h.clone(), h.clone()]);
    match induce_component(f, obj, &hh) {
        Ok(c_hh) => {
            let pair = t.tensor_obj(&[fh.clone(), fh.clone()]);
            let collapse = t.assoc_collapse(&[x.clone(), pair.clone()], 1, &[fh.clone(), fh.clone()]);
            let expand = t.assoc_expand(&[pair.clone(), x.clone()], 0, &[fh.clone(), fh.clone()]);
            let lhs = expand.mul(&c_hh).mul(&collapse);
            let step1 = t.whisker(&[x.clone(), fh.clone(), fh.clone()], 0, 2, &obj.c, &[fh.clone(), x.clone()]);
            let step2 = t.whisker(&[fh.clone(), x.clone(), fh.clone()], 1, 2, &obj.c, &[fh.clone(), x.clone()]);
            let rhs = step2.mul(&step1);
            out.push(CheckReport::check("hexagon", lhs == rhs, || diff_witness(&lhs, &rhs)));
        }
        Err(e) => out.push(CheckReport::fail("hexagon", json!({ "error": e.to_string() }))),
    }
    match induce_component(f, obj, &f.source.unit()) {
        Ok(c_i) => {
            let expect = unit_swap(t, &x);
            out.push(CheckReport::check("unit", c_i == expect, || diff_witness(&c_i, &expect)));
        }
        Err(e) => out.push(CheckReport::fail("unit", json!({ "error": e.to_string() }))),
    }
    CheckReport::group("half-braiding", out)
}

/// `(X ⊗ Y, (c_X ⊗ Y)(X ⊗ c_Y))`.
pub fn tensor_braided(f: &Functor, a: &HalfBraided, b: &HalfBraided) -> HalfBraided {
    let t = &f.target;
    let fh = f.fh();
    let (x, y) = (a.x.clone(), b.x.clone());
    let xy = t.tensor_obj(&[x.clone(), y.clone()]);
    let expand = t.assoc_expand(&[xy.clone(), fh.clone()], 0, &[x.clone(), y.clone()]);
    let s1 = t.whisker(&[x.clone(), y.clone(), fh.clone()], 1, 2, &b.c, &[fh.clone(), y.clone()]);
    let s2 = t.whisker(&[x.clone(), fh.clone(), y.clone()], 0, 2, &a.c, &[fh.clone(), x.clone()]);
    let collapse = t.assoc_collapse(&[fh.clone(), xy.clone()], 1, &[x.clone(), y.clone()]);
    HalfBraided { x: xy, c: collapse.mul(&s2).mul(&s1).mul(&expand) }
}

/// `c_{X,ℓT}⁻¹` from the zig-zag
/// `(ev ⊗ X ⊗ ℓV)(ℓV ⊗ c_{X,V} ⊗ ℓV)(ℓV ⊗ X ⊗ db)` with `V = F(T)`,
/// cross-checked against matrix inversion.
pub fn invert_braiding_at_dual(
    f: &Functor,
    obj: &HalfBraided,
    w: &crate::hopf::RigidWitness,
) -> Result<Mat, CentralizerError> {
    let t = &f.target;
    let (v, lv, x, i) = (f.image(&w.object), f.image(&w.dual), obj.x.clone(), t.unit());
    let c_v = induce_component(f, obj, &w.object)?;
    let c_lv = induce_component(f, obj, &w.dual)?;
    let m0 = t.insert_unit(&[lv.clone(), x.clone()], 2);
    let m1 = t.whisker(&[lv.clone(), x.clone(), i.clone()], 2, 1, &w.db, &[v.clone(), lv.clone()]);
    let m2 = t.whisker(&[lv.clone(), x.clone(), v.clone(), lv.clone()], 1, 2, &c_v, &[v.clone(), x.clone()]);
    let m3 = t.whisker(&[lv.clone(), v.clone(), x.clone(), lv.clone()], 0, 2, &w.ev, std::slice::from_ref(&i));
    let m4 = t.remove_unit(&[i, x.clone(), lv.clone()], 0);
    let inv = m4.mul(&m3).mul(&m2).mul(&m1).mul(&m0);
    let ok = inv.is_square()
        && inv.mul(&c_lv).is_identity()
        && c_lv.mul(&inv).is_identity()
        && invert(&c_lv).map(|m| m == inv).unwrap_or(false);
    if ok {
        Ok(inv)
    } else {
        Err(CentralizerError::Singular)
    }
}

/// Invertibility of the induced components on a family of modules.
pub fn is_central(f: &Functor, obj: &HalfBraided, family: &[Obj]) -> CheckReport {
    let mut out = Vec::new();
    for v in family {
        let id = format!("invertible-at[{}]", v.label());
        match induce_component(f, obj, v) {
            Ok(c) => {
                let r = rank(&c);
                out.push(CheckReport::check(id, c.is_square() && r == c.nrows(), || json!({ "rank": r, "dim": c.nrows() })));
            }
            Err(e) => out.push(CheckReport::fail(id, json!({ "error": e.to_string() }))),
        }
    }
    CheckReport::group("central", out)
}

/// Whether `m: a.x → b.x` is a morphism of half-braided objects.
pub fn is_braided_morphism(f: &Functor, a: &HalfBraided, b: &HalfBraided, m: &Mat) -> bool {
    let t = &f.target;
    let fh = f.fh();
    if !t.is_morphism(m, &a.x, &b.x) {
        return false;
    }
    let lhs = t.whisker(&[fh.clone(), a.x.clone()], 1, 1, m, std::slice::from_ref(&b.x)).mul(&a.c);
    let rhs = b.c.mul(&t.whisker(&[a.x.clone(), fh.clone()], 0, 1, m, std::slice::from_ref(&b.x)));
    lhs == rhs
}

/// Basis of the braided morphisms `a → b`, as matrices.
pub fn braided_morphisms(f: &Functor, a: &HalfBraided, b: &HalfBraided) -> Vec<Mat> {
    let t = &f.target;
    let fh = f.fh();
    let homs: Subspace = t.hom_space(&a.x, &b.x);
    let maps: Vec<Mat> = (0..homs.dim()).map(|k| homs.basis.column(k).unvectorize(b.x.dim(), a.x.dim())).collect();
    if maps.is_empty() {
        return maps;
    }
    let residual = |m: &Mat| {
        let lhs = t.whisker(&[fh.clone(), a.x.clone()], 1, 1, m, std::slice::from_ref(&b.x)).mul(&a.c);
        let rhs = b.c.mul(&t.whisker(&[a.x.clone(), fh.clone()], 0, 1, m, std::slice::from_ref(&b.x)));
        lhs.sub(&rhs).vectorize()
    };
    let cols: Vec<Mat> = maps.iter().map(residual).collect();
    let k = kernel(&Mat::hstack(&cols.iter().collect::<Vec<_>>()));
    (0..k.ncols())
        .map(|j| {
            maps.iter()
                .enumerate()
                .fold(Mat::zeros(t.field(), b.x.dim(), a.x.dim()), |acc, (i, m)| acc.add(&m.scale(&k.get(i, j))))
        })
        .collect()
}

/// `X / im φ` with the descended braiding.
pub fn quotient_braided(f: &Functor, obj: &HalfBraided, phi: &Mat, label: &str) -> Option<HalfBraided> {
    let t = &f.target;
    let fh = f.fh();
    let (q, quo) = quotient_module(label.to_string(), &obj.x, phi)?;
    let pi = &quo.projection;
    let in_map = t.whisker(&[obj.x.clone(), fh.clone()], 0, 1, pi, std::slice::from_ref(&q));
    let out_map = t.whisker(&[fh.clone(), obj.x.clone()], 1, 1, pi, std::slice::from_ref(&q));
    let rhs = out_map.mul(&obj.c);
    let sol = solve(&in_map.transpose(), &rhs.transpose()).ok()?;
    Some(HalfBraided { x: q, c: sol.particular.transpose() })
}

/// `⊕ X_a` with `c = Σ (F(H) ⊗ ι_a) c_a (π_a ⊗ F(H))`.
pub fn direct_sum_braided(f: &Functor, parts: &[&HalfBraided], label: &str) -> HalfBraided {
    let t = &f.target;
    let fh = f.fh();
    let ds = crate::module::direct_sum(label.to_string(), &parts.iter().map(|p| &*p.x).collect::<Vec<_>>());
    let sum = ds.module.clone();
    let n = sum.dim() * fh.dim();
    let mut c: Option<Mat> = None;
    for (k, p) in parts.iter().enumerate() {
        let inc = t.whisker(&[fh.clone(), p.x.clone()], 1, 1, &ds.inclusions[k], std::slice::from_ref(&sum));
        let proj = t.whisker(&[sum.clone(), fh.clone()], 0, 1, &ds.projections[k], std::slice::from_ref(&p.x));
        let term = inc.mul(&p.c).mul(&proj);
        c = Some(match c {
            Some(acc) => acc.add(&term),
            None => term,
        });
    }
    let c = c.unwrap_or_else(|| Mat::zeros(t.field(), n, n));
    HalfBraided { x: sum, c }
}

/// `H` as the carrier of the regular comodule: `a·x·b = s(a) x s(b)`.
pub fn coaction_carrier(f: &Functor) -> Obj {
    let b = f.source.bialgebroid().expect("H-modules").clone();
    let r = b.base_dim();
    crate::module::Module::bimodule(
        "Hc",
        b.field(),
        b.dim(),
        (0..r).map(|a| b.s_left(a)).collect(),
        (0..r).map(|a| b.total.right_mul_by(&b.s(a))).collect(),
    )
}

/// `H` with the adjoint action `g ▷ x = g₊ x g₋` through a translation map.
pub fn adjoint_module(f: &Functor, tm: &crate::hopf::TranslationMap) -> Obj {
    let b = f.source.bialgebroid().expect("H-modules").clone();
    let fld = b.field();
    let h = b.dim();
    let action = (0..h)
        .map(|g| {
            tm.matrix.column(g).entries().fold(Mat::zeros(fld, h, h), |acc, (row, _, v)| {
                let (p, q) = (row / h, row % h);
                acc.add(&b.total.left_mul(p).mul(&b.total.right_mul(q)).scale(v))
            })
        })
        .collect();
    b.h_module("Had", action)
}

/// Half-braiding from the coproduct, `x ⊗ v ↦ x₁v ⊗ x₂`, on a carrier whose
/// underlying space is `H` (see [`coaction_carrier`], [`adjoint_module`]).
/// Left chirality only; right objects are obtained by inversion.
pub fn regular_coaction_object(f: &Functor, carrier: Obj) -> HalfBraided {
    let t = &f.target;
    assert!(!t.is_reversed(), "left chirality only");
    let fld = t.field();
    let b = f.source.bialgebroid().expect("H-modules").clone();
    let fh = f.fh();
    let h = b.dim();
    let mut triples = Vec::new();
    for x in 0..h {
        for (row, _, coef) in b.coproduct.column(x).entries() {
            let (i, j) = (row / h, row % h);
            for v in 0..h {
                let prod = b.total.product(&b.total.basis_vector(i), &b.total.basis_vector(v));
                for (p, _, pv) in prod.entries() {
                    triples.push((p * h + j, x * h + v, fld.mul(coef, pv)));
                }
            }
        }
    }
    let k = Mat::from_triples(fld, h * h, h * h, triples);
    let tin = t.tensor(&[carrier.clone(), fh.clone()]);
    let tout = t.tensor(&[fh, carrier.clone()]);
    HalfBraided { x: carrier, c: tout.proj.mul(&k).mul(&tin.sec) }
}
