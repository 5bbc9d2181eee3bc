//! Left bialgebroids over a noncommutative base, given by structure constants.

use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

use crate::algebra::{check_algebra, Algebra, AlgebraMap, MapKind};
use crate::category::Cat;
use crate::linalg::Quotient;
use crate::mat::Mat;
use crate::module::{Module, Obj};
use crate::report::{diff_witness, mat_witness, CheckReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BialgebroidError {
    #[error("{what} has shape {got:?}, expected {expected:?}")]
    Shape { what: &'static str, got: (usize, usize), expected: (usize, usize) },
    #[error("base and total algebra are over different fields")]
    FieldMismatch,
    #[error("the diagonal action does not descend to the tensor product over the base (h = e_{h})")]
    IllDefinedAction { h: usize },
}

/// `(R, H, s, t, Δ, ε)`.
///
/// * `source`: `dim H × dim R`, the algebra map `s: R → H`
/// * `target`: `dim H × dim R`, the anti-algebra map `t: R → H`
/// * `coproduct`: `dim H² × dim H`, a lift of `Δ` to `H ⊗_k H`
/// * `counit`: `dim R × dim H`
#[derive(Clone, Debug)]
pub struct Bialgebroid {
    pub name: String,
    pub base: Arc<Algebra>,
    pub total: Arc<Algebra>,
    pub source: Mat,
    pub target: Mat,
    pub coproduct: Mat,
    pub counit: Mat,
}

impl Bialgebroid {
    pub fn new(
        name: impl Into<String>,
        base: Arc<Algebra>,
        total: Arc<Algebra>,
        source: Mat,
        target: Mat,
        coproduct: Mat,
        counit: Mat,
    ) -> Result<Self, BialgebroidError> {
        if base.field() != total.field() {
            return Err(BialgebroidError::FieldMismatch);
        }
        let (r, h) = (base.dim(), total.dim());
        let expect = |what, m: &Mat, shape: (usize, usize)| {
            if m.shape() == shape {
                Ok(())
            } else {
                Err(BialgebroidError::Shape { what, got: m.shape(), expected: shape })
            }
        };
        expect("source map", &source, (h, r))?;
        expect("target map", &target, (h, r))?;
        expect("coproduct", &coproduct, (h * h, h))?;
        expect("counit", &counit, (r, h))?;
        Ok(Bialgebroid { name: name.into(), base, total, source, target, coproduct, counit })
    }

    pub fn field(&self) -> crate::field::Field {
        self.base.field()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn dim(&self) -> usize {
        self.total.dim()
    }

    pub fn s(&self, a: usize) -> Mat {
        self.source.column(a)
    }

    pub fn t(&self, b: usize) -> Mat {
        self.target.column(b)
    }

    /// Left multiplication by `s(e_a)` on `H`.
    pub fn s_left(&self, a: usize) -> Mat {
        self.total.left_mul_by(&self.s(a))
    }

    pub fn t_left(&self, b: usize) -> Mat {
        self.total.left_mul_by(&self.t(b))
    }

    /// `H` as an `R`-bimodule: `a·h·b = s(a) t(b) h`.
    pub fn total_bimodule(&self) -> Obj {
        let r = self.base_dim();
        Module::bimodule(
            "H",
            self.field(),
            self.dim(),
            (0..r).map(|a| self.s_left(a)).collect(),
            (0..r).map(|b| self.t_left(b)).collect(),
        )
    }

    /// The regular left `H`-module.
    pub fn regular_module(&self) -> Obj {
        self.h_module("H", (0..self.dim()).map(|i| self.total.left_mul(i)).collect())
    }

    /// Wraps an `H`-action, deriving the bimodule structure through `s`, `t`.
    pub fn h_module(&self, label: impl Into<String>, action: Vec<Mat>) -> Obj {
        let f = self.field();
        let dim = action[0].nrows();
        let by = |v: &Mat| crate::algebra::act_by(&action, v, dim, f);
        let r = self.base_dim();
        let left = (0..r).map(|a| by(&self.s(a))).collect();
        let right = (0..r).map(|b| by(&self.t(b))).collect();
        Module::with_action(label, f, dim, left, right, action)
    }

    /// The monoidal unit: `R` with `h·a = ε(h s(a))`.
    pub fn unit_module(&self) -> Obj {
        let action = (0..self.dim()).map(|h| self.counit.mul(&self.total.left_mul(h)).mul(&self.source)).collect();
        self.h_module("I", action)
    }

    /// Underlying bimodule of an `H`-module.
    pub fn restrict(&self, m: &Module) -> Obj {
        m.underlying()
    }

    /// Diagonal `H`-action on a binary tensor product over `R`, descended
    /// to the quotient `q` of `M ⊗_k N`.
    pub fn tensor_action(&self, m: &Module, n: &Module, q: &Quotient) -> Result<Vec<Mat>, BialgebroidError> {
        let h = self.dim();
        let f = self.field();
        (0..h)
            .map(|k| {
                let mut op = Mat::zeros(f, m.dim() * n.dim(), m.dim() * n.dim());
                for (row, col_entries) in self.coproduct.column(k).rows_iter().enumerate() {
                    if let Some((_, v)) = col_entries.first() {
                        let (i, j) = (row / h, row % h);
                        op = op.add(&m.action(i).kron(n.action(j)).scale(v));
                    }
                }
                q.descend(&op).ok_or(BialgebroidError::IllDefinedAction { h: k })
            })
            .collect()
    }

    /// Tensor product of two `H`-modules with the action through `Δ`.
    pub fn module_tensor(&self, m: &Module, n: &Module) -> Result<(Obj, Quotient), BialgebroidError> {
        let (q, left, right) = crate::bimodule::binary_tensor(&self.base, m, n);
        let action = self.tensor_action(m, n, &q)?;
        let label = format!("{}⊗{}", m.label(), n.label());
        Ok((Module::with_action(label, self.field(), q.dim(), left, right, action), q))
    }

    /// Coopposite bialgebroid over `R^op`: `s` and `t` swap, `Δ` is flipped.
    pub fn coopposite(&self) -> Bialgebroid {
        let h = self.dim();
        let flip: Vec<usize> = (0..h * h).map(|c| (c % h) * h + c / h).collect();
        let f = self.field();
        let perm = Mat::identity(f, h * h).select_columns(&flip);
        let name = if let Some(stripped) = self.name.strip_suffix("^cop") {
            stripped.to_string()
        } else {
            format!("{}^cop", self.name)
        };
        Bialgebroid {
            name,
            base: Arc::new(self.base.opposite()),
            total: self.total.clone(),
            source: self.target.clone(),
            target: self.source.clone(),
            coproduct: perm.mul(&self.coproduct),
            counit: self.counit.clone(),
        }
    }

    /// Presentation of `H ⊗_R H`: `t(a)g ⊗ h ≡ g ⊗ s(a)h`.
    pub fn codomain_quotient(&self) -> Quotient {
        let hb = self.total_bimodule();
        crate::bimodule::binary_tensor(&self.base, &hb, &hb).0
    }

    /// `Δ` as a map `H → H ⊗_R H` on the quotient.
    pub fn coproduct_on_quotient(&self) -> Mat {
        self.codomain_quotient().projection.mul(&self.coproduct)
    }

    /// Checks every bialgebroid axiom, returning one verdict per law.
    pub fn check(&self) -> CheckReport {
        check_bialgebroid(self)
    }
}

pub fn check_bialgebroid(b: &Bialgebroid) -> CheckReport {
    let f = b.field();
    let (r, h) = (b.base_dim(), b.dim());
    let mut out = Vec::new();

    let mut ra = check_algebra(&b.base);
    ra.id = "base-algebra".into();
    let mut ha = check_algebra(&b.total);
    ha.id = "total-algebra".into();
    let algebras_ok = ra.passed() && ha.passed();
    out.push(ra);
    out.push(ha);

    let s_map = AlgebraMap { source: b.base.clone(), target: b.total.clone(), matrix: b.source.clone() };
    let t_map = AlgebraMap { source: b.base.clone(), target: b.total.clone(), matrix: b.target.clone() };
    out.push(s_map.check("source-map", MapKind::Homomorphism));
    out.push(t_map.check("target-map", MapKind::AntiHomomorphism));

    let mut commute = CheckReport::pass("source-target-commute");
    'o: for a in 0..r {
        for c in 0..r {
            let st = b.total.product(&b.s(a), &b.t(c));
            let ts = b.total.product(&b.t(c), &b.s(a));
            if st != ts {
                commute = CheckReport::fail("source-target-commute", json!({ "pair": [a, c] }));
                break 'o;
            }
        }
    }
    out.push(commute);

    if !algebras_ok {
        out.push(CheckReport::inapplicable("coalgebra-laws", "algebra axioms fail"));
        return CheckReport::group("bialgebroid", out);
    }

    let bimod = Cat::bimodules(b.base.clone());
    let hb = b.total_bimodule();
    let rb = bimod.unit();
    let t2 = bimod.tensor(&[hb.clone(), hb.clone()]);
    let delta = t2.proj.mul(&b.coproduct);

    // Δ is an R-bimodule map H → H ⊗_R H.
    let mut bimodule_map = CheckReport::pass("coproduct-bimodule-map");
    for a in 0..r {
        let l = delta.mul(hb.left(a)).sub(&t2.obj.left(a).mul(&delta));
        let rr = delta.mul(hb.right(a)).sub(&t2.obj.right(a).mul(&delta));
        if !l.is_zero() || !rr.is_zero() {
            bimodule_map = CheckReport::fail("coproduct-bimodule-map", json!({ "base_element": a }));
            break;
        }
    }
    let delta_ok = bimodule_map.passed();
    out.push(bimodule_map);

    // Coassociativity in H ⊗_R H ⊗_R H.
    if delta_ok {
        let lhs = bimod.whisker(std::slice::from_ref(&hb), 0, 1, &delta, &[hb.clone(), hb.clone()]);
        let left_leg = bimod.whisker(&[hb.clone(), hb.clone()], 0, 1, &delta, &[hb.clone(), hb.clone()]).mul(&lhs);
        let right_leg = bimod.whisker(&[hb.clone(), hb.clone()], 1, 1, &delta, &[hb.clone(), hb.clone()]).mul(&lhs);
        out.push(coassoc_report(&left_leg, &right_leg));
    } else {
        out.push(CheckReport::inapplicable("coassociativity", "coproduct is not a bimodule map"));
    }

    // Takeuchi centrality: h1 t(a) ⊗ h2 = h1 ⊗ h2 s(a).
    let mut takeuchi = CheckReport::pass("takeuchi-centrality");
    for a in 0..r {
        let rt = b.total.right_mul_by(&b.t(a));
        let rs = b.total.right_mul_by(&b.s(a));
        let lhs = t2.proj.mul(&rt.kron(&Mat::identity(f, h))).mul(&b.coproduct);
        let rhs = t2.proj.mul(&Mat::identity(f, h).kron(&rs)).mul(&b.coproduct);
        if lhs != rhs {
            let diff = lhs.sub(&rhs);
            let (_, col, _) = diff.entries().next().expect("nonzero");
            takeuchi = CheckReport::fail("takeuchi-centrality", json!({ "h": col, "a": a }));
            break;
        }
    }
    out.push(takeuchi);

    // Multiplicativity: Δ(gh) = g1 h1 ⊗ g2 h2, and Δ(1) = 1 ⊗ 1.
    let mid_swap = {
        let perm: Vec<usize> = (0..h.pow(4))
            .map(|c| {
                let (g1, g2, h1, h2) = (c / (h * h * h), (c / (h * h)) % h, (c / h) % h, c % h);
                ((g1 * h + h1) * h + g2) * h + h2
            })
            .collect();
        // column c of the identity moved to position perm[c]: (g1,g2,h1,h2) ↦ (g1,h1,g2,h2)
        Mat::from_triples(f, h.pow(4), h.pow(4), perm.iter().enumerate().map(|(c, &p)| (p, c, f.one())))
    };
    let mul_h = b.total.mul_matrix();
    let prod_then_delta = t2.proj.mul(&b.coproduct).mul(mul_h);
    let delta_then_prod =
        t2.proj.mul(&mul_h.kron(mul_h)).mul(&mid_swap).mul(&b.coproduct.kron(&b.coproduct));
    let mult = if prod_then_delta == delta_then_prod {
        CheckReport::pass("coproduct-multiplicative")
    } else {
        let (_, col, _) = prod_then_delta.sub(&delta_then_prod).entries().next().expect("nonzero");
        CheckReport::fail("coproduct-multiplicative", json!({ "pair": [col / h, col % h] }))
    };
    out.push(mult);
    let unit_h = b.total.unit();
    let d1 = t2.proj.mul(&b.coproduct).mul(unit_h);
    let one_one = t2.proj.mul(&unit_h.kron(unit_h));
    out.push(CheckReport::check("coproduct-unital", d1 == one_one, || diff_witness(&d1, &one_one)));

    // ε is a bimodule map H → R.
    let mut eps_bimod = CheckReport::pass("counit-bimodule-map");
    for a in 0..r {
        let l = b.counit.mul(hb.left(a)).sub(&rb.left(a).mul(&b.counit));
        let rr = b.counit.mul(hb.right(a)).sub(&rb.right(a).mul(&b.counit));
        if !l.is_zero() || !rr.is_zero() {
            eps_bimod = CheckReport::fail("counit-bimodule-map", json!({ "base_element": a }));
            break;
        }
    }
    out.push(eps_bimod);

    // Counit laws s(ε(h1)) h2 = h = t(ε(h2)) h1, evaluated on the lift.
    let id_h = Mat::identity(f, h);
    let left_counit = mul_h.mul(&b.source.mul(&b.counit).kron(&id_h)).mul(&b.coproduct);
    let right_counit = {
        // h1 ⊗ h2 ↦ t(ε(h2)) h1
        let m = mul_h.mul(&b.target.mul(&b.counit).kron(&id_h));
        let swap: Vec<usize> = (0..h * h).map(|c| (c % h) * h + c / h).collect();
        m.select_columns(&swap).mul(&b.coproduct)
    };
    out.push(CheckReport::check("counit-left", left_counit == id_h, || diff_witness(&left_counit, &id_h)));
    out.push(CheckReport::check("counit-right", right_counit == id_h, || diff_witness(&right_counit, &id_h)));

    let e1 = b.counit.mul(unit_h);
    out.push(CheckReport::check("counit-unital", e1 == *b.base.unit(), || diff_witness(&e1, b.base.unit())));

    // ε(g s(ε(h))) = ε(gh) = ε(g t(ε(h))) on basis pairs.
    let eps_gh = b.counit.mul(mul_h);
    let eps_gs = b.counit.mul(mul_h).mul(&id_h.kron(&b.source.mul(&b.counit)));
    let eps_gt = b.counit.mul(mul_h).mul(&id_h.kron(&b.target.mul(&b.counit)));
    out.push(CheckReport::check("counit-weak-multiplicative-source", eps_gs == eps_gh, || diff_witness(&eps_gs, &eps_gh)));
    out.push(CheckReport::check("counit-weak-multiplicative-target", eps_gt == eps_gh, || diff_witness(&eps_gt, &eps_gh)));

    CheckReport::group("bialgebroid", out)
}

fn coassoc_report(lhs: &Mat, rhs: &Mat) -> CheckReport {
    if lhs == rhs {
        CheckReport::pass("coassociativity")
    } else {
        let diff = lhs.sub(rhs);
        let (_, col, _) = diff.entries().next().expect("nonzero");
        CheckReport::fail("coassociativity", json!({ "h": col, "difference": mat_witness(&diff.column(col)) }))
    }
}
