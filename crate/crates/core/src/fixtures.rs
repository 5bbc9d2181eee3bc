//! Built-in bialgebroids used as test instances and by the CLI.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::bialgebroid::Bialgebroid;
use crate::field::Field;
use crate::mat::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Expected {
    pub hopf: bool,
    pub anti_hopf: bool,
    pub left_finite: bool,
    pub right_finite: bool,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub bialgebroid: Arc<Bialgebroid>,
    pub expected: Expected,
}

const ALL: Expected = Expected { hopf: true, anti_hopf: true, left_finite: true, right_finite: true };

pub const NAMES: [&str; 6] = ["C2Q", "C2F2", "H4Q", "RE2", "UT2E", "IDEM"];

pub fn builtin_fixtures() -> Vec<Fixture> {
    NAMES.iter().map(|n| fixture(n).expect("builtin")).collect()
}

pub fn fixture(name: &str) -> Option<Fixture> {
    let q = Field::Rationals;
    let (name, b, expected) = match name.to_ascii_uppercase().as_str() {
        "C2Q" => ("C2Q", group_algebra_c2(q), ALL),
        "C2F2" => ("C2F2", group_algebra_c2(Field::prime(2).expect("2 is prime")), ALL),
        "H4Q" => ("H4Q", sweedler(q), ALL),
        "RE2" => ("RE2", enveloping_bialgebroid("RE2", dual_numbers(q)), ALL),
        "UT2E" => ("UT2E", enveloping_bialgebroid("UT2E", upper_triangular(q)), ALL),
        "IDEM" => ("IDEM", idempotent_monoid(q), Expected { hopf: false, anti_hopf: false, left_finite: true, right_finite: true }),
        _ => return None,
    };
    let mut b = b;
    b.name = name.to_string();
    Some(Fixture { name, bialgebroid: Arc::new(b), expected })
}

/// Bialgebra over the ground field: `s = t = unit`.
fn over_field(name: &str, total: Algebra, coproduct: Mat, counit: Mat) -> Bialgebroid {
    let f = total.field();
    let unit = total.unit().clone();
    Bialgebroid::new(name, Arc::new(Algebra::ground(f)), Arc::new(total), unit.clone(), unit, coproduct, counit)
        .expect("well-shaped")
}

/// Coproduct column for a sum of simple tensors of basis elements.
fn coproduct(f: Field, h: usize, images: &[Vec<(usize, usize, i64)>]) -> Mat {
    Mat::from_triples(
        f,
        h * h,
        h,
        images.iter().enumerate().flat_map(|(col, terms)| terms.iter().map(move |&(a, b, c)| (a * h + b, col, f.int(c)))),
    )
}

/// `k[C₂]`, basis `1, g`, `Δg = g ⊗ g`.
pub fn group_algebra_c2(f: Field) -> Bialgebroid {
    let total = Algebra::monoid(f, 0, &[vec![0, 1], vec![1, 0]]);
    let d = coproduct(f, 2, &[vec![(0, 0, 1)], vec![(1, 1, 1)]]);
    over_field("C2", total, d, Mat::from_ints(f, &[&[1, 1]]))
}

/// Sweedler's four-dimensional Hopf algebra: basis `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δx = x ⊗ 1 + g ⊗ x`, `ε(x) = 0`.
pub fn sweedler(f: Field) -> Bialgebroid {
    // basis index a + 2b for g^a x^b; (g^a x^b)(g^c x^d) = (−1)^{bc} g^{a+c} x^{b+d}
    let mut consts = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
            if b + d < 2 {
                let sign = if b * c == 1 { -1 } else { 1 };
                consts.push((i, j, (a + c) % 2 + 2 * (b + d), f.int(sign)));
            }
        }
    }
    let total = Algebra::new(f, 4, vec![f.one(), f.zero(), f.zero(), f.zero()], consts).expect("valid");
    let d = coproduct(
        f,
        4,
        &[
            vec![(0, 0, 1)],
            vec![(1, 1, 1)],
            vec![(2, 0, 1), (1, 2, 1)],
            vec![(3, 1, 1), (0, 3, 1)],
        ],
    );
    over_field("H4", total, d, Mat::from_ints(f, &[&[1, 1, 0, 0]]))
}

/// Monoid bialgebra of `{1, e}` with `e² = e`.
pub fn idempotent_monoid(f: Field) -> Bialgebroid {
    let total = Algebra::monoid(f, 0, &[vec![0, 1], vec![1, 1]]);
    let d = coproduct(f, 2, &[vec![(0, 0, 1)], vec![(1, 1, 1)]]);
    over_field("IDEM", total, d, Mat::from_ints(f, &[&[1, 1]]))
}

/// `k[x]/(x²)`, basis `1, x`.
pub fn dual_numbers(f: Field) -> Algebra {
    Algebra::new(f, 2, vec![f.one(), f.zero()], [(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one())]).expect("valid")
}

/// Upper triangular 2×2 matrices, basis `e11, e12, e22`.
pub fn upper_triangular(f: Field) -> Algebra {
    Algebra::new(
        f,
        3,
        vec![f.one(), f.zero(), f.one()],
        [(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 2, 1, f.one()), (2, 2, 2, f.one())],
    )
    .expect("valid")
}

/// `R^e = R ⊗ R^op` over `R`: `s(a) = a ⊗ 1`, `t(b) = 1 ⊗ b`,
/// `Δ(a ⊗ b) = (a ⊗ 1) ⊗ (1 ⊗ b)`, `ε(a ⊗ b) = ab`.
pub fn enveloping_bialgebroid(name: &str, r: Algebra) -> Bialgebroid {
    let n = r.dim();
    let total = r.enveloping();
    let unit = r.unit().clone();
    let basis = |i: usize| r.basis_vector(i);
    let source = Mat::hstack(&(0..n).map(|a| basis(a).kron(&unit)).collect::<Vec<_>>().iter().collect::<Vec<_>>());
    let target = Mat::hstack(&(0..n).map(|b| unit.kron(&basis(b))).collect::<Vec<_>>().iter().collect::<Vec<_>>());
    let cols: Vec<Mat> = (0..n * n)
        .map(|k| {
            let (a, b) = (k / n, k % n);
            basis(a).kron(&unit).kron(&unit.kron(&basis(b)))
        })
        .collect();
    let coproduct = Mat::hstack(&cols.iter().collect::<Vec<_>>());
    let counit = r.mul_matrix().clone();
    Bialgebroid::new(name, Arc::new(r), Arc::new(total), source, target, coproduct, counit).expect("well-shaped")
}
