//! Tensor products over the base, and projectivity of finite modules.

use serde_json::json;

use crate::algebra::{Algebra, ModuleObject};
use crate::linalg::{solve, Quotient};
use crate::mat::Mat;
use crate::module::Module;

/// `M ⊗_R N` as the quotient of `M ⊗_k N` by `m·a ⊗ n − m ⊗ a·n`,
/// with the induced outer bimodule structure.
pub fn binary_tensor(base: &Algebra, m: &Module, n: &Module) -> (Quotient, Vec<Mat>, Vec<Mat>) {
    let f = base.field();
    let (im, in_) = (Mat::identity(f, m.dim()), Mat::identity(f, n.dim()));
    let rels: Vec<Mat> =
        (0..base.dim()).map(|a| m.right(a).kron(&in_).sub(&im.kron(n.left(a)))).collect();
    let q = Quotient::by_span(&Mat::hstack(&rels.iter().collect::<Vec<_>>()));
    let left = m.lefts().iter().map(|l| q.projection.mul(&l.kron(&in_)).mul(&q.section)).collect();
    let right = n.rights().iter().map(|r| q.projection.mul(&im.kron(r)).mul(&q.section)).collect();
    (q, left, right)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Projectivity {
    Projective(Box<DualBasis>),
    NotProjective(serde_json::Value),
}

/// Dual basis witnessing that a module is finitely generated projective: a
/// surjection `p: A^n → M` and a splitting `i: M → A^n` with `p i = id`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualBasis {
    /// Basis indices of the chosen generators.
    pub generators: Vec<usize>,
    /// `dim M × n·dim A`, `(a_1, …, a_n) ↦ Σ a_k·x_k`.
    pub cover: Mat,
    /// `n·dim A × dim M`, an `A`-linear section of `cover`.
    pub splitting: Mat,
}

impl Projectivity {
    pub fn is_projective(&self) -> bool {
        matches!(self, Projectivity::Projective(_))
    }
}

/// Decides whether the left `A`-module `m` is projective by searching for
/// an `A`-linear splitting of a free cover.
pub fn dual_basis(m: &ModuleObject) -> Projectivity {
    let alg = &m.algebra;
    let f = alg.field();
    let (d, a) = (m.dim, alg.dim());
    let as_module = Module::with_action("M", f, d, Vec::new(), Vec::new(), m.action.clone());
    let gens = crate::module::generators(&as_module);
    let n = gens.len();
    // cover column k·a + j is e_j · x_k
    let cover = Mat::from_fn(f, d, n * a, |row, col| m.action[col % a].get(row, gens[col / a]));
    // A-linearity of i: i ∘ act(b) = (⊕ left mult by b) ∘ i; and p ∘ i = id.
    // Unknown i vectorized row-major: index r·d + c.
    let id_d = Mat::identity(f, d);
    let mut rows: Vec<Mat> = Vec::new();
    let mut rhs: Vec<Mat> = Vec::new();
    let free_left = |b: usize| Mat::identity(f, n).kron(&alg.left_mul(b));
    for b in 0..a {
        // vec(X A) = (I ⊗ A^T) vec X ; vec(B X) = (B ⊗ I) vec X  (row-major)
        let lhs = Mat::identity(f, n * a).kron(&m.action[b].transpose());
        let rhs_op = free_left(b).kron(&id_d);
        rows.push(lhs.sub(&rhs_op));
        rhs.push(Mat::zeros(f, n * a * d, 1));
    }
    rows.push(cover.kron(&id_d));
    rhs.push(id_d.vectorize());
    let sys = Mat::vstack(&rows.iter().collect::<Vec<_>>());
    let b = Mat::vstack(&rhs.iter().collect::<Vec<_>>());
    match solve(&sys, &b) {
        Ok(sol) => {
            let splitting = sol.particular.unvectorize(n * a, d);
            Projectivity::Projective(Box::new(DualBasis { generators: gens, cover, splitting }))
        }
        Err(_) => Projectivity::NotProjective(json!({
            "generators": gens,
            "reason": "the free cover has no module splitting",
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use std::sync::Arc;

    fn dual_numbers(f: Field) -> Arc<Algebra> {
        Arc::new(Algebra::new(f, 2, vec![f.one(), f.zero()], [(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one())]).unwrap())
    }

    #[test]
    fn regular_module_is_projective() {
        let a = dual_numbers(Field::Rationals);
        let m = ModuleObject::regular(a);
        match dual_basis(&m) {
            Projectivity::Projective(db) => {
                assert_eq!(db.generators.len(), 1);
                assert!(db.cover.mul(&db.splitting).is_identity());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn residue_field_over_dual_numbers_is_not_projective() {
        let f = Field::Rationals;
        let a = dual_numbers(f);
        // k = A/(x): 1 acts as 1, x acts as 0
        let m = ModuleObject::new(a, 1, vec![Mat::identity(f, 1), Mat::zeros(f, 1, 1)]).unwrap();
        assert!(!dual_basis(&m).is_projective());
    }

    #[test]
    fn tensor_over_field_is_full() {
        let f = Field::Rationals;
        let k = Algebra::ground(f);
        let mk = Module::bimodule("V", f, 2, vec![Mat::identity(f, 2)], vec![Mat::identity(f, 2)]);
        let (q, _, _) = binary_tensor(&k, &mk, &mk);
        assert_eq!(q.dim(), 4);
    }

    #[test]
    fn tensor_over_dual_numbers_of_regular() {
        let f = Field::Rationals;
        let r = dual_numbers(f);
        let m = Module::regular_bimodule(&r);
        let (q, left, _) = binary_tensor(&r, &m, &m);
        assert_eq!(q.dim(), 2);
        assert_eq!(left.len(), 2);
    }
}
