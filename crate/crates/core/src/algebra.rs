//! Finite-dimensional associative algebras given by structure constants,
//! algebra maps, and modules over them.

use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::mat::Mat;
use crate::report::{diff_witness, CheckReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("an algebra must have positive dimension")]
    ZeroDimension,
    #[error("structure constant ({i}, {j}, {k}) out of range for dimension {dim}")]
    IndexOutOfRange { i: usize, j: usize, k: usize, dim: usize },
    #[error("unit vector has length {got}, expected {dim}")]
    UnitLength { got: usize, dim: usize },
    #[error("matrix has shape {got:?}, expected {expected:?}")]
    Shape { got: (usize, usize), expected: (usize, usize) },
}

/// Associative unital algebra with basis `e_0 .. e_{n-1}`.
///
/// `mul` is the `n × n²` matrix whose column `i·n + j` holds `e_i e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    unit: Mat,
    mul: Mat,
}

impl Algebra {
    /// Builds an algebra from sparse structure constants `e_i e_j = Σ v e_k`.
    pub fn new(
        field: Field,
        dim: usize,
        unit: Vec<Scalar>,
        constants: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if unit.len() != dim {
            return Err(AlgebraError::UnitLength { got: unit.len(), dim });
        }
        let mut triples = Vec::new();
        for (i, j, k, v) in constants {
            if i >= dim || j >= dim || k >= dim {
                return Err(AlgebraError::IndexOutOfRange { i, j, k, dim });
            }
            triples.push((k, i * dim + j, v));
        }
        let mul = Mat::from_triples(field, dim, dim * dim, triples);
        Ok(Algebra { field, dim, unit: Mat::column_vector(field, &unit), mul })
    }

    pub fn from_matrices(field: Field, unit: Mat, mul: Mat) -> Result<Self, AlgebraError> {
        let dim = unit.nrows();
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if mul.shape() != (dim, dim * dim) {
            return Err(AlgebraError::Shape { got: mul.shape(), expected: (dim, dim * dim) });
        }
        Ok(Algebra { field, dim, unit, mul })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        Algebra::new(field, 1, vec![field.one()], [(0, 0, 0, field.one())]).expect("valid")
    }

    /// Monoid algebra from a multiplication table on basis indices; `unit`
    /// is the index of the identity element.
    pub fn monoid(field: Field, unit: usize, table: &[Vec<usize>]) -> Self {
        let n = table.len();
        let mut u = vec![field.zero(); n];
        u[unit] = field.one();
        let consts = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (i, j, table[i][j], field.one()));
        Algebra::new(field, n, u, consts.collect::<Vec<_>>()).expect("valid table")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn mul_matrix(&self) -> &Mat {
        &self.mul
    }

    /// Structure constant triples `(i, j, k, value)`.
    pub fn constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        self.mul.entries().map(|(k, c, v)| (c / self.dim, c % self.dim, k, v.clone())).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Mat {
        Mat::unit_vector(self.field, self.dim, i)
    }

    pub fn product(&self, a: &Mat, b: &Mat) -> Mat {
        self.mul.mul(&a.kron(b))
    }

    /// Matrix of `x ↦ e_i x`.
    pub fn left_mul(&self, i: usize) -> Mat {
        let cols: Vec<usize> = (0..self.dim).map(|j| i * self.dim + j).collect();
        self.mul.select_columns(&cols)
    }

    /// Matrix of `x ↦ x e_j`.
    pub fn right_mul(&self, j: usize) -> Mat {
        let cols: Vec<usize> = (0..self.dim).map(|i| i * self.dim + j).collect();
        self.mul.select_columns(&cols)
    }

    /// Matrix of `x ↦ a x` for an arbitrary element `a` (column vector).
    pub fn left_mul_by(&self, a: &Mat) -> Mat {
        self.mul.mul(&a.kron(&Mat::identity(self.field, self.dim)))
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mul_by(&self, a: &Mat) -> Mat {
        self.mul.mul(&Mat::identity(self.field, self.dim).kron(a))
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let cols: Vec<usize> = (0..n * n).map(|c| (c % n) * n + c / n).collect();
        Algebra { field: self.field, dim: n, unit: self.unit.clone(), mul: self.mul.select_columns(&cols) }
    }

    /// `A ⊗ B` with basis `(a, b) ↦ a·dim B + b`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (n, m) = (self.dim, other.dim);
        let f = self.field;
        let mut triples = Vec::new();
        for (ka, ca, va) in self.mul.entries() {
            let (i, i2) = (ca / n, ca % n);
            for (kb, cb, vb) in other.mul.entries() {
                let (j, j2) = (cb / m, cb % m);
                let row = ka * m + kb;
                let col = (i * m + j) * (n * m) + (i2 * m + j2);
                triples.push((row, col, f.mul(va, vb)));
            }
        }
        Algebra {
            field: f,
            dim: n * m,
            unit: self.unit.kron(&other.unit),
            mul: Mat::from_triples(f, n * m, n * m * n * m, triples),
        }
    }

    /// `R^e = R ⊗ R^op`.
    pub fn enveloping(&self) -> Algebra {
        self.tensor(&self.opposite())
    }

    pub fn is_commutative(&self) -> bool {
        self.opposite().mul == self.mul
    }

    pub fn check(&self) -> CheckReport {
        check_algebra(self)
    }
}

/// Associativity and unit laws, each with a failing basis witness.
pub fn check_algebra(a: &Algebra) -> CheckReport {
    let n = a.dim;
    let f = a.field;
    let id = Mat::identity(f, n);
    let lhs = a.mul.mul(&a.mul.kron(&id));
    let rhs = a.mul.mul(&id.kron(&a.mul));
    let assoc = if lhs == rhs {
        CheckReport::pass("associativity")
    } else {
        let diff = lhs.sub(&rhs);
        let (_, col, _) = diff.entries().next().expect("nonzero difference");
        let (i, j, k) = (col / (n * n), (col / n) % n, col % n);
        CheckReport::fail("associativity", json!({ "triple": [i, j, k], "difference_column": col }))
    };
    let left_unit = a.mul.mul(&a.unit.kron(&id));
    let right_unit = a.mul.mul(&id.kron(&a.unit));
    CheckReport::group(
        "algebra",
        vec![
            assoc,
            CheckReport::check("left-unit", left_unit == id, || diff_witness(&left_unit, &id)),
            CheckReport::check("right-unit", right_unit == id, || diff_witness(&right_unit, &id)),
        ],
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Homomorphism,
    /// `f(ab) = f(b) f(a)`, i.e. a homomorphism from the opposite algebra.
    AntiHomomorphism,
}

#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    /// `target.dim × source.dim`
    pub matrix: Mat,
}

impl AlgebraMap {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Mat) -> Result<Self, AlgebraError> {
        let expected = (target.dim(), source.dim());
        if matrix.shape() != expected {
            return Err(AlgebraError::Shape { got: matrix.shape(), expected });
        }
        Ok(AlgebraMap { source, target, matrix })
    }

    pub fn image(&self, i: usize) -> Mat {
        self.matrix.column(i)
    }

    pub fn check(&self, id: &str, kind: MapKind) -> CheckReport {
        let n = self.source.dim();
        let unit_img = self.matrix.mul(self.source.unit());
        let lhs = self.matrix.mul(self.source.mul_matrix());
        let mut rhs = self.target.mul_matrix().mul(&self.matrix.kron(&self.matrix));
        if kind == MapKind::AntiHomomorphism {
            let swap: Vec<usize> = (0..n * n).map(|c| (c % n) * n + c / n).collect();
            rhs = rhs.select_columns(&swap);
        }
        let mult = if lhs == rhs {
            CheckReport::pass("multiplicative")
        } else {
            let (_, col, _) = lhs.sub(&rhs).entries().next().expect("nonzero");
            CheckReport::fail("multiplicative", json!({ "pair": [col / n, col % n] }))
        };
        CheckReport::group(
            id,
            vec![
                CheckReport::check("unital", unit_img == *self.target.unit(), || {
                    diff_witness(&unit_img, self.target.unit())
                }),
                mult,
            ],
        )
    }
}

/// Left module over a designated algebra, one action matrix per basis element.
#[derive(Clone, Debug)]
pub struct ModuleObject {
    pub algebra: Arc<Algebra>,
    pub dim: usize,
    pub action: Vec<Mat>,
}

impl ModuleObject {
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Mat>) -> Result<Self, AlgebraError> {
        if action.len() != algebra.dim() {
            return Err(AlgebraError::Shape { got: (action.len(), 0), expected: (algebra.dim(), 0) });
        }
        for a in &action {
            if a.shape() != (dim, dim) {
                return Err(AlgebraError::Shape { got: a.shape(), expected: (dim, dim) });
            }
        }
        Ok(ModuleObject { algebra, dim, action })
    }

    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_mul(i)).collect();
        ModuleObject { dim: algebra.dim(), algebra, action }
    }

    /// Action of an arbitrary algebra element.
    pub fn act_by(&self, a: &Mat) -> Mat {
        act_by(&self.action, a, self.dim, self.algebra.field())
    }

    /// Pulls back along `map: B → A` where `A` is this module's algebra.
    pub fn restrict_along(&self, map: &AlgebraMap) -> ModuleObject {
        let action = (0..map.source.dim()).map(|i| self.act_by(&map.image(i))).collect();
        ModuleObject { algebra: map.source.clone(), dim: self.dim, action }
    }

    pub fn check(&self) -> CheckReport {
        check_action(&self.algebra, &self.action, self.dim)
    }
}

/// `Σ a_i ρ(e_i)` for a column vector `a`.
pub fn act_by(action: &[Mat], a: &Mat, dim: usize, field: Field) -> Mat {
    let mut out = Mat::zeros(field, dim, dim);
    for (i, row) in a.rows_iter().enumerate() {
        if let Some((_, v)) = row.first() {
            out = out.add(&action[i].scale(v));
        }
    }
    out
}

/// Unitality and associativity of an action on basis pairs.
pub fn check_action(alg: &Algebra, action: &[Mat], dim: usize) -> CheckReport {
    let f = alg.field();
    let unit = act_by(action, alg.unit(), dim, f);
    let mut assoc = CheckReport::pass("action-associative");
    'outer: for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let lhs = action[i].mul(&action[j]);
            let prod = alg.product(&alg.basis_vector(i), &alg.basis_vector(j));
            let rhs = act_by(action, &prod, dim, f);
            if lhs != rhs {
                assoc = CheckReport::fail("action-associative", json!({ "pair": [i, j] }));
                break 'outer;
            }
        }
    }
    let id = Mat::identity(f, dim);
    CheckReport::group(
        "module",
        vec![CheckReport::check("action-unital", unit == id, || diff_witness(&unit, &id)), assoc],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    fn q() -> Field {
        Field::Rationals
    }

    fn c2(field: Field) -> Algebra {
        Algebra::monoid(field, 0, &[vec![0, 1], vec![1, 0]])
    }

    /// Upper triangular 2×2 matrices, basis e11, e12, e22.
    fn ut2() -> Algebra {
        let f = q();
        let one = f.one();
        Algebra::new(
            f,
            3,
            vec![one.clone(), f.zero(), one.clone()],
            [(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 2, 1, one.clone()), (2, 2, 2, one)],
        )
        .unwrap()
    }

    #[test]
    fn group_algebra_passes() {
        assert!(check_algebra(&c2(q())).passed());
    }

    #[test]
    fn mutated_constant_breaks_associativity() {
        let a = c2(q());
        let mut consts = a.constants();
        // 1·g = g becomes 1·g = 2g
        consts.push((0, 1, 1, q().one()));
        let b = Algebra::new(q(), 2, vec![q().one(), q().zero()], consts).unwrap();
        let r = check_algebra(&b);
        assert_eq!(r.find("associativity").unwrap().verdict, Verdict::Fail);
        assert!(r.find("associativity").unwrap().witness.is_some());
    }

    #[test]
    fn zero_dimension_rejected() {
        assert_eq!(Algebra::new(q(), 0, vec![], []).unwrap_err(), AlgebraError::ZeroDimension);
    }

    #[test]
    fn opposite_of_commutative_is_same() {
        let a = c2(q());
        assert_eq!(a.opposite(), a);
    }

    #[test]
    fn opposite_of_upper_triangular_swaps() {
        let a = ut2();
        let o = a.opposite();
        let e12 = a.basis_vector(1);
        let e22 = a.basis_vector(2);
        assert_eq!(a.product(&e12, &e22), e12);
        assert!(a.product(&e22, &e12).is_zero());
        assert!(o.product(&e12, &e22).is_zero());
        assert_eq!(o.product(&e22, &e12), e12);
        assert!(check_algebra(&o).passed());
    }

    #[test]
    fn enveloping_dimension_and_axioms() {
        let e = ut2().enveloping();
        assert_eq!(e.dim(), 9);
        assert!(check_algebra(&e).passed());
    }

    #[test]
    fn regular_module_is_valid() {
        let m = ModuleObject::regular(Arc::new(ut2()));
        assert!(m.check().passed());
    }

    #[test]
    fn anti_homomorphism_check() {
        let a = Arc::new(ut2());
        let o = Arc::new(a.opposite());
        // identity matrix is an anti-homomorphism A → A^op viewed as a map A → A.
        let map = AlgebraMap::new(a.clone(), o, Mat::identity(q(), 3)).unwrap();
        assert!(map.check("id", MapKind::AntiHomomorphism).passed());
        assert!(map.check("id", MapKind::Homomorphism).failed());
    }
}
