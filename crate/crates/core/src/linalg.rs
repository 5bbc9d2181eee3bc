//! Exact Gauss-Jordan elimination and the derived operations: rank, kernel,
//! image, solve, inverse, and quotient presentations with explicit sections.

use std::collections::HashMap;

use num_traits::Zero;
use thiserror::Error;

use crate::field::Field;
use crate::mat::{axpy, Mat, SparseRow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("no solution: right-hand side column {column} is not in the image")]
    NoSolution { column: usize },
    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Reduced row echelon form restricted to the first `limit` columns; the
/// remaining columns are carried along (augmented part).
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<SparseRow>,
    pub pivots: Vec<usize>,
    /// Rows that reduced to zero on the pivot part but not on the augmented
    /// part (inconsistent equations).
    pub inconsistent: Vec<SparseRow>,
}

pub fn rref(field: Field, rows: impl IntoIterator<Item = SparseRow>, limit: usize) -> Rref {
    let mut basis: Vec<SparseRow> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut pivot_row: HashMap<usize, usize> = HashMap::new();
    let mut inconsistent = Vec::new();
    for row in rows {
        let mut r = row;
        let hits: Vec<(usize, usize)> =
            r.iter().filter_map(|(c, _)| pivot_row.get(c).map(|&k| (*c, k))).collect();
        for (c, k) in hits {
            // Pivot rows vanish at every other pivot column, so the
            // coefficient at `c` is unchanged by earlier reductions.
            let coef = match r.binary_search_by_key(&c, |e| e.0) {
                Ok(p) => field.neg(&r[p].1),
                Err(_) => continue,
            };
            r = axpy(&field, &r, &coef, &basis[k]);
        }
        let lead = r.iter().position(|(c, _)| *c < limit);
        let Some(lead) = lead else {
            if !r.is_empty() {
                inconsistent.push(r);
            }
            continue;
        };
        let (pc, pv) = r[lead].clone();
        let inv = field.inv(&pv).expect("nonzero pivot");
        let r: SparseRow = r.into_iter().map(|(c, v)| (c, field.mul(&inv, &v))).collect();
        for b in basis.iter_mut() {
            if let Ok(p) = b.binary_search_by_key(&pc, |e| e.0) {
                let coef = field.neg(&b[p].1);
                *b = axpy(&field, b, &coef, &r);
            }
        }
        pivot_row.insert(pc, basis.len());
        basis.push(r);
        pivots.push(pc);
    }
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by_key(|&k| pivots[k]);
    let rows = order.iter().map(|&k| basis[k].clone()).collect();
    let pivots = order.iter().map(|&k| pivots[k]).collect();
    Rref { rows, pivots, inconsistent }
}

fn rows_of(m: &Mat) -> impl Iterator<Item = SparseRow> + '_ {
    m.rows_iter().cloned()
}

pub fn rank(a: &Mat) -> usize {
    rref(a.field(), rows_of(a), a.ncols()).pivots.len()
}

/// Basis of the null space, one column per free variable.
pub fn kernel(a: &Mat) -> Mat {
    let f = a.field();
    let n = a.ncols();
    let red = rref(f, rows_of(a), n);
    kernel_from_rref(f, n, &red)
}

fn kernel_from_rref(f: Field, n: usize, red: &Rref) -> Mat {
    let mut is_pivot = vec![false; n];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut free_pos = vec![usize::MAX; n];
    for (k, &c) in free.iter().enumerate() {
        free_pos[c] = k;
    }
    let mut triples = Vec::new();
    for (k, &c) in free.iter().enumerate() {
        triples.push((c, k, f.one()));
    }
    for (row, &p) in red.rows.iter().zip(&red.pivots) {
        for (c, v) in row {
            if *c < n && free_pos[*c] != usize::MAX {
                triples.push((p, free_pos[*c], f.neg(v)));
            }
        }
    }
    Mat::from_triples(f, n, free.len(), triples)
}

/// Basis of the column space, in reduced echelon form.
pub fn image(a: &Mat) -> Mat {
    Subspace::span(a).basis
}

/// Particular solution plus kernel basis of `A X = B`.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Mat,
    pub kernel: Mat,
}

impl Solution {
    pub fn is_unique(&self) -> bool {
        self.kernel.ncols() == 0
    }
}

pub fn solve(a: &Mat, b: &Mat) -> Result<Solution, LinAlgError> {
    if a.nrows() != b.nrows() {
        return Err(LinAlgError::Shape(format!("A is {:?}, b is {:?}", a.shape(), b.shape())));
    }
    let f = a.field();
    let n = a.ncols();
    let aug = Mat::hstack(&[a, b]);
    let red = rref(f, rows_of(&aug), n);
    if let Some(bad) = red.inconsistent.first() {
        return Err(LinAlgError::NoSolution { column: bad[0].0 - n });
    }
    let mut triples = Vec::new();
    for (row, &p) in red.rows.iter().zip(&red.pivots) {
        for (c, v) in row {
            if *c >= n {
                triples.push((p, c - n, v.clone()));
            }
        }
    }
    let particular = Mat::from_triples(f, n, b.ncols(), triples);
    let kernel = kernel_from_rref(f, n, &red);
    Ok(Solution { particular, kernel })
}

/// Unique solution of `A X = B`, or an error describing why there is none.
pub fn solve_unique(a: &Mat, b: &Mat) -> Result<Mat, LinAlgError> {
    let s = solve(a, b)?;
    if !s.is_unique() {
        return Err(LinAlgError::Singular { rank: a.ncols() - s.kernel.ncols(), size: a.ncols() });
    }
    Ok(s.particular)
}

pub fn invert(a: &Mat) -> Result<Mat, LinAlgError> {
    if !a.is_square() {
        return Err(LinAlgError::Shape(format!("cannot invert {:?}", a.shape())));
    }
    let n = a.nrows();
    let red = rref(a.field(), rows_of(&Mat::hstack(&[a, &Mat::identity(a.field(), n)])), n);
    if red.pivots.len() < n {
        return Err(LinAlgError::Singular { rank: red.pivots.len(), size: n });
    }
    let triples = red
        .rows
        .iter()
        .zip(&red.pivots)
        .flat_map(|(row, &p)| row.iter().filter(|(c, _)| *c >= n).map(move |(c, v)| (p, c - n, v.clone())))
        .collect::<Vec<_>>();
    Ok(Mat::from_triples(a.field(), n, n, triples))
}

/// A subspace of `field^n` with a reduced basis and a coordinate map:
/// `coords * basis = I`, and `basis * coords * v = v` for `v` in the span.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub basis: Mat,
    pub coords: Mat,
}

impl Subspace {
    /// Column span of `gens`.
    pub fn span(gens: &Mat) -> Subspace {
        let f = gens.field();
        let n = gens.nrows();
        let red = rref(f, rows_of(&gens.transpose()), n);
        let basis = Mat::from_rows(f, red.rows.len(), n, red.rows.clone()).transpose();
        let coords =
            Mat::from_triples(f, red.pivots.len(), n, red.pivots.iter().enumerate().map(|(k, &p)| (k, p, f.one())));
        Subspace { basis, coords }
    }

    /// Null space of `a`, with coordinates read off the free variables.
    pub fn kernel_of(a: &Mat) -> Subspace {
        let f = a.field();
        let n = a.ncols();
        let red = rref(f, rows_of(a), n);
        let basis = kernel_from_rref(f, n, &red);
        let mut is_pivot = vec![false; n];
        for &p in &red.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let coords = Mat::from_triples(f, free.len(), n, free.iter().enumerate().map(|(k, &c)| (k, c, f.one())));
        Subspace { basis, coords }
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn ambient(&self) -> usize {
        self.basis.nrows()
    }

    pub fn contains(&self, v: &Mat) -> bool {
        self.basis.mul(&self.coords.mul(v)) == *v
    }

    /// Matrix of an endomorphism of the ambient space restricted to the
    /// subspace. Panics in debug builds if the subspace is not invariant.
    pub fn restrict(&self, op: &Mat) -> Mat {
        let image = op.mul(&self.basis);
        debug_assert!(self.contains(&image), "subspace not invariant");
        self.coords.mul(&image)
    }
}

/// Presentation of `field^n / K` with explicit projection and section.
///
/// The section picks the standard basis vectors at non-pivot positions of
/// the reduced basis of `K`, so it is a 0/1 selection matrix.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ambient: usize,
    /// Reduced basis of the relation subspace (columns).
    pub relations: Mat,
    /// `q × n`
    pub projection: Mat,
    /// `n × q`
    pub section: Mat,
}

impl Quotient {
    pub fn by_span(gens: &Mat) -> Quotient {
        let f = gens.field();
        let n = gens.nrows();
        let red = rref(f, rows_of(&gens.transpose()), n);
        let mut is_pivot = vec![false; n];
        for &p in &red.pivots {
            is_pivot[p] = true;
        }
        let mut qpos = vec![usize::MAX; n];
        let mut q = 0;
        for c in 0..n {
            if !is_pivot[c] {
                qpos[c] = q;
                q += 1;
            }
        }
        let mut proj = Vec::new();
        let mut sec = Vec::new();
        for c in 0..n {
            if qpos[c] != usize::MAX {
                proj.push((qpos[c], c, f.one()));
                sec.push((c, qpos[c], f.one()));
            }
        }
        // v ≡ v − Σ v[p_i] r_i, read off at non-pivot positions.
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            for (c, v) in row {
                if qpos[*c] != usize::MAX {
                    proj.push((qpos[*c], p, f.neg(v)));
                }
            }
        }
        let relations = Mat::from_rows(f, red.rows.len(), n, red.rows).transpose();
        Quotient {
            ambient: n,
            relations,
            projection: Mat::from_triples(f, q, n, proj),
            section: Mat::from_triples(f, n, q, sec),
        }
    }

    /// Identity presentation (no relations).
    pub fn trivial(field: Field, n: usize) -> Quotient {
        Quotient {
            ambient: n,
            relations: Mat::zeros(field, n, 0),
            projection: Mat::identity(field, n),
            section: Mat::identity(field, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.projection.nrows()
    }

    /// Matrix on the quotient of an ambient endomorphism preserving the
    /// relations, or `None` if it does not descend.
    pub fn descend(&self, op: &Mat) -> Option<Mat> {
        if !self.projection.mul(&op.mul(&self.relations)).is_zero() {
            return None;
        }
        Some(self.projection.mul(&op.mul(&self.section)))
    }
}

/// Coequalizer of two parallel maps: codomain modulo `image(f − g)`.
pub fn coequalizer(f: &Mat, g: &Mat) -> Result<Quotient, LinAlgError> {
    if f.shape() != g.shape() {
        return Err(LinAlgError::Shape(format!("{:?} vs {:?}", f.shape(), g.shape())));
    }
    Ok(Quotient::by_span(&f.sub(g)))
}

/// True when `v` has no nonzero entries; shorthand used by checkers.
pub fn all_zero(v: &Mat) -> bool {
    v.rows_iter().all(|r| r.iter().all(|(_, x)| x.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn solve_identity() {
        let a = Mat::identity(q(), 3);
        let b = Mat::from_ints(q(), &[&[4], &[-1], &[7]]);
        let s = solve(&a, &b).unwrap();
        assert_eq!(s.particular, b);
        assert_eq!(s.kernel.ncols(), 0);
    }

    #[test]
    fn solve_zero_map() {
        let a = Mat::zeros(q(), 2, 2);
        let b = Mat::zeros(q(), 2, 1);
        let s = solve(&a, &b).unwrap();
        assert!(s.particular.is_zero());
        assert_eq!(s.kernel.ncols(), 2);
    }

    #[test]
    fn solve_rank_one_system() {
        let a = Mat::from_ints(q(), &[&[1, 2], &[2, 4]]);
        let b = Mat::from_ints(q(), &[&[1], &[2]]);
        let s = solve(&a, &b).unwrap();
        assert_eq!(s.particular, Mat::from_ints(q(), &[&[1], &[0]]));
        assert_eq!(s.kernel, Mat::from_ints(q(), &[&[-2], &[1]]));
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = Mat::from_ints(q(), &[&[1, 2], &[2, 4]]);
        let b = Mat::from_ints(q(), &[&[1], &[3]]);
        assert_eq!(solve(&a, &b).unwrap_err(), LinAlgError::NoSolution { column: 0 });
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert_eq!(kernel(&Mat::identity(q(), 4)).ncols(), 0);
    }

    #[test]
    fn permutation_inverse_is_transpose() {
        let p = Mat::from_ints(q(), &[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(invert(&p).unwrap(), p.transpose());
    }

    #[test]
    fn rank_of_all_ones() {
        assert_eq!(rank(&Mat::from_ints(q(), &[&[1, 1], &[1, 1]])), 1);
        assert_eq!(image(&Mat::from_ints(q(), &[&[1, 1], &[1, 1]])).ncols(), 1);
    }

    #[test]
    fn singular_inverse_fails() {
        let a = Mat::from_ints(q(), &[&[1, 1], &[1, 1]]);
        assert_eq!(invert(&a).unwrap_err(), LinAlgError::Singular { rank: 1, size: 2 });
    }

    #[test]
    fn coequalizer_of_equal_maps_is_ambient() {
        let f = Mat::from_ints(q(), &[&[1, 2], &[3, 4], &[5, 6]]);
        let c = coequalizer(&f, &f).unwrap();
        assert_eq!(c.dim(), 3);
        assert!(c.projection.is_identity());
    }

    #[test]
    fn coequalizer_of_identity_and_zero_is_zero() {
        let c = coequalizer(&Mat::identity(q(), 3), &Mat::zeros(q(), 3, 3)).unwrap();
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn coequalizer_rank_nullity() {
        let f = Mat::from_ints(q(), &[&[1, 0, 1], &[1, 1, 0], &[0, 0, 0], &[2, 1, 1]]);
        let g = Mat::zeros(q(), 4, 3);
        let c = coequalizer(&f, &g).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(c.projection.mul(&c.section).is_identity());
        assert!(c.projection.mul(&f).is_zero());
    }

    #[test]
    fn prime_field_elimination() {
        let f2 = Field::prime(2).unwrap();
        let a = Mat::from_ints(f2, &[&[1, 1], &[1, 1]]);
        assert_eq!(rank(&a), 1);
        let a3 = Mat::from_ints(Field::prime(3).unwrap(), &[&[1, 1], &[1, -1]]);
        assert_eq!(rank(&a3), 2);
        assert_eq!(rank(&Mat::from_ints(f2, &[&[1, 1], &[1, -1]])), 1);
    }
}
