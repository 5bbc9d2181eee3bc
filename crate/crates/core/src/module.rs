//! Module objects of the two concrete monoidal categories: `R`-bimodules
//! (left `R^e`-modules) and left `H`-modules.
//!
//! A [`Module`] always carries its bimodule structure. `H`-modules also carry
//! the `H`-action; their bimodule structure is the restriction along `s`
//! and `t`, so `a·m·b = s(a) t(b) m`.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::algebra::{act_by, check_action, Algebra, ModuleObject};
use crate::field::Field;
use crate::linalg::{Quotient, Subspace};
use crate::mat::Mat;
use crate::report::CheckReport;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub type Obj = Arc<Module>;

#[derive(Debug)]
pub struct Module {
    id: u64,
    label: String,
    field: Field,
    dim: usize,
    left: Vec<Mat>,
    right: Vec<Mat>,
    action: Option<Vec<Mat>>,
}

impl Module {
    /// Bimodule with `left[a] = (m ↦ e_a·m)` and `right[b] = (m ↦ m·e_b)`.
    pub fn bimodule(label: impl Into<String>, field: Field, dim: usize, left: Vec<Mat>, right: Vec<Mat>) -> Obj {
        Arc::new(Module { id: NEXT_ID.fetch_add(1, Ordering::Relaxed), label: label.into(), field, dim, left, right, action: None })
    }

    /// Module over a larger algebra together with its restricted bimodule
    /// structure.
    pub fn with_action(
        label: impl Into<String>,
        field: Field,
        dim: usize,
        left: Vec<Mat>,
        right: Vec<Mat>,
        action: Vec<Mat>,
    ) -> Obj {
        Arc::new(Module {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            label: label.into(),
            field,
            dim,
            left,
            right,
            action: Some(action),
        })
    }

    /// The regular bimodule `R`.
    pub fn regular_bimodule(base: &Algebra) -> Obj {
        let n = base.dim();
        Module::bimodule(
            "R",
            base.field(),
            n,
            (0..n).map(|a| base.left_mul(a)).collect(),
            (0..n).map(|b| base.right_mul(b)).collect(),
        )
    }

    /// Bimodule from a left `R^e`-module, `R^e = R ⊗ R^op` with basis index
    /// `a·dim R + b`.
    pub fn from_enveloping(label: impl Into<String>, base: &Algebra, m: &ModuleObject) -> Obj {
        let n = base.dim();
        let f = base.field();
        let left = (0..n).map(|a| m.act_by(&base.basis_vector(a).kron(base.unit()))).collect();
        let right = (0..n).map(|b| m.act_by(&base.unit().kron(&base.basis_vector(b)))).collect();
        Module::bimodule(label, f, m.dim, left, right)
    }

    /// The same bimodule as a left `R^e`-module.
    pub fn to_enveloping(&self, envelope: Arc<Algebra>) -> ModuleObject {
        let n = self.left.len();
        let action = (0..n * n).map(|k| self.left[k / n].mul(&self.right[k % n])).collect();
        ModuleObject { algebra: envelope, dim: self.dim, action }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self, a: usize) -> &Mat {
        &self.left[a]
    }

    pub fn right(&self, b: usize) -> &Mat {
        &self.right[b]
    }

    pub fn lefts(&self) -> &[Mat] {
        &self.left
    }

    pub fn rights(&self) -> &[Mat] {
        &self.right
    }

    pub fn actions(&self) -> Option<&[Mat]> {
        self.action.as_deref()
    }

    pub fn action(&self, h: usize) -> &Mat {
        &self.action.as_ref().expect("not an H-module")[h]
    }

    pub fn act_by(&self, h: &Mat) -> Mat {
        act_by(self.action.as_ref().expect("not an H-module"), h, self.dim, self.field)
    }

    /// Bimodule underlying this module (drops the `H`-action).
    pub fn underlying(&self) -> Obj {
        Module::bimodule(self.label.clone(), self.field, self.dim, self.left.clone(), self.right.clone())
    }

    /// Copy with a new label and identity.
    pub fn relabel(&self, label: impl Into<String>) -> Obj {
        Arc::new(Module {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            label: label.into(),
            field: self.field,
            dim: self.dim,
            left: self.left.clone(),
            right: self.right.clone(),
            action: self.action.clone(),
        })
    }

    /// Applies `f` to every structure matrix, producing a module on a new
    /// carrier of dimension `dim`.
    pub fn map_structure(&self, label: impl Into<String>, dim: usize, mut f: impl FnMut(&Mat) -> Mat) -> Obj {
        Arc::new(Module {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            label: label.into(),
            field: self.field,
            dim,
            left: self.left.iter().map(&mut f).collect(),
            right: self.right.iter().map(&mut f).collect(),
            action: self.action.as_ref().map(|a| a.iter().map(&mut f).collect()),
        })
    }

    /// Bimodule axioms: each side is an action and the two sides commute.
    pub fn check_bimodule(&self, base: &Algebra) -> CheckReport {
        let mut left = check_action(base, &self.left, self.dim);
        left.id = "left-action".into();
        let right_op = base.opposite();
        let mut right = check_action(&right_op, &self.right, self.dim);
        right.id = "right-action".into();
        let mut commute = CheckReport::pass("sides-commute");
        'o: for (a, l) in self.left.iter().enumerate() {
            for (b, r) in self.right.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    commute = CheckReport::fail("sides-commute", serde_json::json!({ "pair": [a, b] }));
                    break 'o;
                }
            }
        }
        CheckReport::group("bimodule", vec![left, right, commute])
    }

    /// Whether `f: self → other` commutes with the bimodule structure and, when
    /// both carry one, the `H`-action.
    pub fn is_bimodule_map(&self, other: &Module, f: &Mat) -> bool {
        f.shape() == (other.dim, self.dim)
            && self.left.iter().zip(&other.left).all(|(a, b)| f.mul(a) == b.mul(f))
            && self.right.iter().zip(&other.right).all(|(a, b)| f.mul(a) == b.mul(f))
    }

    pub fn is_action_map(&self, other: &Module, f: &Mat) -> bool {
        match (&self.action, &other.action) {
            (Some(a), Some(b)) => f.shape() == (other.dim, self.dim) && a.iter().zip(b).all(|(x, y)| f.mul(x) == y.mul(f)),
            _ => false,
        }
    }
}

/// Direct sum with canonical inclusions and projections.
pub struct DirectSum {
    pub module: Obj,
    pub inclusions: Vec<Mat>,
    pub projections: Vec<Mat>,
}

pub fn direct_sum(label: impl Into<String>, parts: &[&Module]) -> DirectSum {
    let f = parts[0].field;
    let total: usize = parts.iter().map(|p| p.dim).sum();
    let block = |sel: &dyn Fn(&Module) -> &Vec<Mat>, k: usize| -> Mat {
        let blocks: Vec<&Mat> = parts.iter().map(|p| &sel(p)[k]).collect();
        Mat::direct_sum(&blocks)
    };
    let nl = parts[0].left.len();
    let left = (0..nl).map(|k| block(&|p: &Module| &p.left, k)).collect();
    let right = (0..nl).map(|k| block(&|p: &Module| &p.right, k)).collect();
    let action = parts[0].action.as_ref().map(|a| {
        (0..a.len())
            .map(|k| Mat::direct_sum(&parts.iter().map(|p| &p.action.as_ref().expect("all H-modules")[k]).collect::<Vec<_>>()))
            .collect()
    });
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    let mut off = 0;
    for p in parts {
        let inc = Mat::from_triples(f, total, p.dim, (0..p.dim).map(|i| (off + i, i, f.one())));
        projections.push(inc.transpose());
        inclusions.push(inc);
        off += p.dim;
    }
    let module = Arc::new(Module { id: NEXT_ID.fetch_add(1, Ordering::Relaxed), label: label.into(), field: f, dim: total, left, right, action });
    DirectSum { module, inclusions, projections }
}

/// Quotient of `m` by the submodule spanned by the columns of `sub`.
/// Returns `None` when the span is not stable under the structure maps.
pub fn quotient_module(label: impl Into<String>, m: &Module, sub: &Mat) -> Option<(Obj, Quotient)> {
    let q = Quotient::by_span(sub);
    let span = Subspace::span(sub);
    let stable = |ops: &[Mat]| ops.iter().all(|op| span.contains(&op.mul(&span.basis)));
    if !stable(&m.left) || !stable(&m.right) || m.action.as_ref().is_some_and(|a| !stable(a)) {
        return None;
    }
    let d = q.dim();
    let obj = m.map_structure(label, d, |op| q.projection.mul(&op.mul(&q.section)));
    Some((obj, q))
}

/// Submodule generated by a set of vectors under the `H`-action (or the
/// bimodule structure when there is no action).
pub fn generated_submodule(m: &Module, gens: &Mat) -> Subspace {
    let ops: Vec<&Mat> = match &m.action {
        Some(a) => a.iter().collect(),
        None => m.left.iter().chain(&m.right).collect(),
    };
    let mut span = Subspace::span(gens);
    loop {
        let mut cols = vec![span.basis.clone()];
        for op in &ops {
            cols.push(op.mul(&span.basis));
        }
        let next = Subspace::span(&Mat::hstack(&cols.iter().collect::<Vec<_>>()));
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

/// Greedy minimal generating set of standard basis vectors.
pub fn generators(m: &Module) -> Vec<usize> {
    let f = m.field;
    let mut chosen = Vec::new();
    let mut span = Subspace::span(&Mat::zeros(f, m.dim, 0));
    for i in 0..m.dim {
        if span.dim() == m.dim {
            break;
        }
        let e = Mat::unit_vector(f, m.dim, i);
        if !span.contains(&e) {
            chosen.push(i);
            let gens = Mat::from_triples(f, m.dim, chosen.len(), chosen.iter().enumerate().map(|(k, &c)| (c, k, f.one())));
            span = generated_submodule(m, &gens);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_bimodule_round_trips_through_enveloping() {
        let f = Field::Rationals;
        let r = Algebra::new(f, 2, vec![f.one(), f.zero()], [(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one())])
            .unwrap();
        let m = Module::regular_bimodule(&r);
        assert!(m.check_bimodule(&r).passed());
        let env = Arc::new(r.enveloping());
        let mo = m.to_enveloping(env.clone());
        assert!(mo.check().passed());
        let back = Module::from_enveloping("R", &r, &mo);
        assert_eq!(back.lefts(), m.lefts());
        assert_eq!(back.rights(), m.rights());
    }
}
