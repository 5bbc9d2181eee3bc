//! Independent oracles shared by integration tests.
#![allow(dead_code)]

use algebroid::field::{Field, Scalar};
use algebroid::fixtures::fixture;
use algebroid::mat::Mat;

/// Dense rank over a field, by plain elimination on owned rows.
pub fn dense_rank(f: Field, mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != f.zero()) else { continue };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).unwrap();
        let pivot: Vec<Scalar> = rows[r].iter().map(|v| f.mul(v, &inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != f.zero() {
                let k = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(x, &f.mul(&k, y));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// dim{F : R-valued | F(t(a)h) = F(h)a}, one unknown per entry F[i][k].
pub fn dual_dim_oracle(name: &str) -> usize {
    let b = fixture(name).unwrap().bialgebroid;
    let f = b.field();
    let (r, h) = (b.base_dim(), b.dim());
    let mut rows = Vec::new();
    for a in 0..r {
        let ta = b.total.left_mul_by(&b.target.column(a));
        let ra = b.base.right_mul_by(&Mat::unit_vector(f, r, a));
        for i in 0..r {
            for j in 0..h {
                let mut row = vec![f.zero(); r * h];
                for k in 0..h {
                    row[i * h + k] = f.add(&row[i * h + k], &ta.get(k, j));
                }
                for k in 0..r {
                    row[k * h + j] = f.sub(&row[k * h + j], &ra.get(i, k));
                }
                rows.push(row);
            }
        }
    }
    r * h - dense_rank(f, rows)
}

/// The function algebra on `C₂ = {1, g}` in the basis dual to `{1, g}`:
/// `(product, unit, coproduct)`.
pub fn c2_function_algebra() -> (Mat, Mat, Mat) {
    let f = Field::Rationals;
    // δ_i δ_j = [i = j] δ_i, unit δ_1 + δ_g, Δ δ_x = Σ_{yz = x} δ_y ⊗ δ_z
    let mul = Mat::from_triples(f, 2, 4, [(0, 0, f.one()), (1, 3, f.one())]);
    let unit = Mat::column_vector(f, &[f.one(), f.one()]);
    let cop = Mat::from_triples(f, 4, 2, [(0, 0, f.one()), (3, 0, f.one()), (1, 1, f.one()), (2, 1, f.one())]);
    (mul, unit, cop)
}
