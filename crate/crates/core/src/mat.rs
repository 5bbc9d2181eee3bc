//! Sparse row-major matrices over an exact [`Field`].
//!
//! Rows are sorted `(column, value)` lists with no stored zeros, so two
//! matrices are equal exactly when their derived `PartialEq` says so.
//!
//! Tensor bases are ordered left-factor-major: the basis vector
//! `e_i ⊗ f_j` of `V ⊗ W` has index `i * dim W + j`. [`Mat::kron`] follows
//! the same convention.

use std::fmt;

use num_traits::Zero;

use crate::field::{Field, Scalar};

pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

/// `a + c * b` on sorted sparse rows.
pub(crate) fn axpy(field: &Field, a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = field.mul(c, &b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(c, &b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Dense accumulator reused across rows of a product.
struct Accumulator {
    values: Vec<Scalar>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accumulator {
    fn new(n: usize) -> Self {
        Accumulator { values: vec![Scalar::zero(); n], touched: Vec::new(), mark: vec![false; n] }
    }

    fn add(&mut self, field: &Field, col: usize, v: Scalar) {
        if !self.mark[col] {
            self.mark[col] = true;
            self.touched.push(col);
            self.values[col] = v;
        } else {
            self.values[col] = field.add(&self.values[col], &v);
        }
    }

    fn drain(&mut self) -> SparseRow {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &c in &self.touched {
            self.mark[c] = false;
            let v = std::mem::take(&mut self.values[c]);
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        self.touched.clear();
        out
    }
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, Scalar::from_integer(1.into()))]).collect();
        Mat { field, rows: n, cols: n, data }
    }

    pub fn from_rows(field: Field, rows: usize, cols: usize, data: Vec<SparseRow>) -> Self {
        assert_eq!(data.len(), rows);
        let data = data
            .into_iter()
            .map(|mut r| {
                r.sort_by_key(|e| e.0);
                debug_assert!(r.windows(2).all(|w| w[0].0 < w[1].0));
                debug_assert!(r.iter().all(|e| e.0 < cols));
                r.retain(|e| !e.1.is_zero());
                r
            })
            .collect();
        Mat { field, rows, cols, data }
    }

    /// Builds a matrix from triples, summing duplicates.
    pub fn from_triples(field: Field, rows: usize, cols: usize, triples: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut data: Vec<SparseRow> = vec![Vec::new(); rows];
        for (i, j, v) in triples {
            assert!(i < rows && j < cols, "entry ({i},{j}) outside {rows}x{cols}");
            data[i].push((j, v));
        }
        let data = data
            .into_iter()
            .map(|mut r| {
                r.sort_by_key(|e| e.0);
                let mut merged: SparseRow = Vec::with_capacity(r.len());
                for (c, v) in r {
                    match merged.last_mut() {
                        Some(last) if last.0 == c => last.1 = field.add(&last.1, &v),
                        _ => merged.push((c, v)),
                    }
                }
                merged.retain(|e| !e.1.is_zero());
                merged
            })
            .collect();
        Mat { field, rows, cols, data }
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(field, r, c, |i, j| field.int(rows[i][j]))
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let data = (0..rows)
            .map(|i| (0..cols).filter_map(|j| Some((j, f(i, j))).filter(|e| !e.1.is_zero())).collect())
            .collect();
        Mat { field, rows, cols, data }
    }

    /// Column vector from dense entries.
    pub fn column_vector(field: Field, entries: &[Scalar]) -> Self {
        Self::from_fn(field, entries.len(), 1, |i, _| entries[i].clone())
    }

    /// The `i`-th standard basis column of length `n`.
    pub fn unit_vector(field: Field, n: usize, i: usize) -> Self {
        Self::from_triples(field, n, 1, [(i, 0, field.one())])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &SparseRow> {
        self.data.iter()
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => {
                if v.is_zero() {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    row.insert(k, (j, v));
                }
            }
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1 == self.field.one())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch {:?} * {:?}", self.shape(), other.shape());
        let f = self.field;
        let mut acc = Accumulator::new(other.cols);
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        acc.add(&f, *j, f.mul(a, b));
                    }
                }
                acc.drain()
            })
            .collect();
        Mat { field: f, rows: self.rows, cols: other.cols, data }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape());
        let one = self.field.one();
        let data = self.data.iter().zip(&other.data).map(|(a, b)| axpy(&self.field, a, &one, b)).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in subtraction");
        let m1 = self.field.neg(&self.field.one());
        let data = self.data.iter().zip(&other.data).map(|(a, b)| axpy(&self.field, a, &m1, b)).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        if c.is_zero() {
            return Mat::zeros(self.field, self.rows, self.cols);
        }
        let data = self.data.iter().map(|r| r.iter().map(|(j, v)| (*j, self.field.mul(c, v))).collect()).collect();
        Mat { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Mat {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn transpose(&self) -> Mat {
        let mut data: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                data[*j].push((i, v.clone()));
            }
        }
        Mat { field: self.field, rows: self.cols, cols: self.rows, data }
    }

    /// Kronecker product, left factor major.
    pub fn kron(&self, other: &Mat) -> Mat {
        let f = self.field;
        let (br, bc) = other.shape();
        let mut data = Vec::with_capacity(self.rows * br);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * bc + jb, f.mul(a, b)));
                    }
                }
                data.push(row);
            }
        }
        Mat { field: f, rows: self.rows * br, cols: self.cols * bc, data }
    }

    /// `I_pre ⊗ self ⊗ I_post`.
    pub fn embed(&self, pre: usize, post: usize) -> Mat {
        let (r, c) = self.shape();
        let mut data = Vec::with_capacity(pre * r * post);
        for p in 0..pre {
            for row in &self.data {
                for q in 0..post {
                    data.push(row.iter().map(|(j, v)| ((p * c + j) * post + q, v.clone())).collect());
                }
            }
        }
        Mat { field: self.field, rows: pre * r * post, cols: pre * c * post, data }
    }

    pub fn hstack(blocks: &[&Mat]) -> Mat {
        assert!(!blocks.is_empty());
        let rows = blocks[0].rows;
        let field = blocks[0].field;
        let mut data: Vec<SparseRow> = vec![Vec::new(); rows];
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for (i, r) in b.data.iter().enumerate() {
                data[i].extend(r.iter().map(|(j, v)| (j + off, v.clone())));
            }
            off += b.cols;
        }
        Mat { field, rows, cols: off, data }
    }

    pub fn vstack(blocks: &[&Mat]) -> Mat {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        let field = blocks[0].field;
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend(b.data.iter().cloned());
        }
        Mat { field, rows: data.len(), cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[&Mat]) -> Mat {
        let field = blocks[0].field;
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows);
        let mut off = 0;
        for b in blocks {
            for r in &b.data {
                data.push(r.iter().map(|(j, v)| (j + off, v.clone())).collect());
            }
            off += b.cols;
        }
        Mat { field, rows, cols, data }
    }

    pub fn column(&self, j: usize) -> Mat {
        self.select_columns(&[j])
    }

    pub fn select_columns(&self, cols: &[usize]) -> Mat {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            assert!(pos[c] == usize::MAX, "duplicate column selection");
            pos[c] = k;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut row: SparseRow =
                    r.iter().filter(|(j, _)| pos[*j] != usize::MAX).map(|(j, v)| (pos[*j], v.clone())).collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect();
        Mat { field: self.field, rows: self.rows, cols: cols.len(), data }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        let data = rows.iter().map(|&i| self.data[i].clone()).collect();
        Mat { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    /// Reinterprets a `t × (a·z)` matrix as `(t·a) × z`: entry `(t, l·z + j)`
    /// moves to `(t·a + l, j)`.
    pub fn fold_columns(&self, a: usize) -> Mat {
        assert_eq!(self.cols % a.max(1), 0);
        let z = if a == 0 { 0 } else { self.cols / a };
        let triples = self.entries().map(|(t, c, v)| (t * a + c / z, c % z, v.clone())).collect::<Vec<_>>();
        Mat::from_triples(self.field, self.rows * a, z, triples)
    }

    /// Row-major vectorization as a column of length `rows·cols`.
    pub fn vectorize(&self) -> Mat {
        let n = self.cols;
        Mat::from_triples(self.field, self.rows * n, 1, self.entries().map(|(i, j, v)| (i * n + j, 0, v.clone())))
    }

    /// Inverse of [`Mat::vectorize`] for a single column.
    pub fn unvectorize(&self, rows: usize, cols: usize) -> Mat {
        assert_eq!(self.cols, 1);
        assert_eq!(self.rows, rows * cols);
        Mat::from_triples(self.field, rows, cols, self.entries().map(|(k, _, v)| (k / cols, k % cols, v.clone())))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.to_dense().iter().map(|r| r.iter().map(|v| self.field.format(v)).collect()).collect()
    }

    /// Sparse `[row, col, value]` listing for witnesses and serialization.
    pub fn to_triples(&self) -> Vec<(usize, usize, String)> {
        self.entries().map(|(i, j, v)| (i, j, self.field.format(v))).collect()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field)?;
        if self.rows * self.cols <= 400 {
            for r in self.to_strings() {
                writeln!(f, "  [{}]", r.join(", "))?;
            }
        } else {
            writeln!(f, "  ({} nonzeros)", self.nnz())?;
        }
        Ok(())
    }
}
