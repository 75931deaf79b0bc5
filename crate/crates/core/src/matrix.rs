//! Dense matrices over an exact field: Gaussian elimination, determinants,
//! minors, kernels, subspace intersections and compound matrices.
//!
//! Row/column positions in the low-level API are 0-based; [`Mat::minor`] and
//! [`Mat::complement_minor`] take 1-based labels because that is how index
//! tuples are written everywhere else in the crate.

use crate::indices::enumerate_index_tuples;
use crate::scalar::{Field, Scalar};
use rand::Rng;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("ambient dimension mismatch ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("compound order {s} exceeds matrix order {r}")]
    CompoundOrder { s: usize, r: usize },
    #[error("expected a rank-{expected} column-span matrix, got rank {got}")]
    RankDeficient { expected: usize, got: usize },
}

/// A dense `rows x cols` matrix with entries in one fixed field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Mat {
        Mat {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Mat {
        let mut m = Mat::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: Field,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mat {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let s = f(r, c);
                assert_eq!(s.field(), field, "entry field mismatch");
                entries.push(s);
            }
        }
        Mat {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Mat {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            assert_eq!(r.len(), nc, "ragged rows");
        }
        let flat: Vec<Scalar> = rows.into_iter().flatten().collect();
        for e in &flat {
            assert_eq!(e.field(), field, "entry field mismatch");
        }
        Mat {
            rows: nr,
            cols: nc,
            field,
            entries: flat,
        }
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Mat {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        Mat::from_fn(nr, nc, field, |r, c| field.from_i64(rows[r][c]))
    }

    /// Uniform random entries drawn from `pool` (see [`Field::random_element`]).
    pub fn random<R: Rng>(
        rows: usize,
        cols: usize,
        field: Field,
        pool: (i64, i64),
        rng: &mut R,
    ) -> Mat {
        Mat::from_fn(rows, cols, field, |_, _| field.random_element(pool, rng))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "entry index out of range");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        assert!(r < self.rows && c < self.cols, "entry index out of range");
        assert_eq!(s.field(), self.field, "entry field mismatch");
        self.entries[r * self.cols + c] = s;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, self.field, |r, c| {
            self.at(c, r).clone()
        })
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        assert_eq!(self.field, rhs.field, "field mismatch in product");
        Mat::from_fn(self.rows, rhs.cols, self.field, |r, c| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                acc = &acc + &(self.at(r, k) * rhs.at(k, c));
            }
            acc
        })
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        assert_eq!(self.field, rhs.field);
        Mat::from_fn(self.rows, self.cols, self.field, |r, c| {
            self.at(r, c) - rhs.at(r, c)
        })
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, self.field, |r, c| -self.at(r, c))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, self.field, |r, c| self.at(r, c) * s)
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "row count mismatch in hstack");
        assert_eq!(self.field, other.field, "field mismatch in hstack");
        Mat::from_fn(self.rows, self.cols + other.cols, self.field, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    /// 0-based row/column selection.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(rows.len(), cols.len(), self.field, |r, c| {
            self.at(rows[r], cols[c]).clone()
        })
    }

    pub fn column(&self, c: usize) -> Mat {
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), &[c])
    }

    /// Subdeterminant on 1-based, strictly increasing row and column labels.
    pub fn minor(&self, rows1: &[usize], cols1: &[usize]) -> Result<Scalar, MatError> {
        if rows1.len() != cols1.len() {
            return Err(MatError::IndexOutOfRange(
                "minor needs equally many rows and columns".into(),
            ));
        }
        check_labels(rows1, self.rows)?;
        check_labels(cols1, self.cols)?;
        let r0: Vec<usize> = rows1.iter().map(|i| i - 1).collect();
        let c0: Vec<usize> = cols1.iter().map(|i| i - 1).collect();
        self.submatrix(&r0, &c0).det()
    }

    /// Determinant of the submatrix obtained by deleting the given 1-based
    /// rows and columns. The empty (0x0) determinant is 1.
    pub fn complement_minor(
        &self,
        del_rows1: &[usize],
        del_cols1: &[usize],
    ) -> Result<Scalar, MatError> {
        check_labels(del_rows1, self.rows)?;
        check_labels(del_cols1, self.cols)?;
        let keep_r: Vec<usize> = (0..self.rows)
            .filter(|r| !del_rows1.contains(&(r + 1)))
            .collect();
        let keep_c: Vec<usize> = (0..self.cols)
            .filter(|c| !del_cols1.contains(&(c + 1)))
            .collect();
        self.submatrix(&keep_r, &keep_c).det()
    }

    /// Exact determinant by Gaussian elimination with row swaps.
    pub fn det(&self) -> Result<Scalar, MatError> {
        if self.rows != self.cols {
            return Err(MatError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.field.one());
        }
        let mut w = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !w.at(r, col).is_zero());
            let Some(pr) = pivot else {
                return Ok(self.field.zero());
            };
            if pr != col {
                w.swap_rows(pr, col);
                det = -det;
            }
            let p = w.at(col, col).clone();
            det = &det * &p;
            let pinv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if w.at(r, col).is_zero() {
                    continue;
                }
                let factor = w.at(r, col) * &pinv;
                for c in col..n {
                    let v = w.at(r, c) - &(&factor * w.at(col, c));
                    w.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut w = self.clone();
        let mut rank = 0;
        for col in 0..w.cols {
            let pivot = (rank..w.rows).find(|&r| !w.at(r, col).is_zero());
            let Some(pr) = pivot else { continue };
            w.swap_rows(pr, rank);
            let pinv = w.at(rank, col).inv().expect("pivot is nonzero");
            for r in rank + 1..w.rows {
                if w.at(r, col).is_zero() {
                    continue;
                }
                let factor = w.at(r, col) * &pinv;
                for c in col..w.cols {
                    let v = w.at(r, c) - &(&factor * w.at(rank, c));
                    w.set(r, c, v);
                }
            }
            rank += 1;
            if rank == w.rows {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form (unique; pivots are 1 with zeros above and
    /// below). Returns the echelon matrix and the 0-based pivot columns.
    pub fn reduced_row_echelon(&self) -> (Mat, Vec<usize>) {
        let mut w = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..w.cols {
            if row == w.rows {
                break;
            }
            let Some(pr) = (row..w.rows).find(|&r| !w.at(r, col).is_zero()) else {
                continue;
            };
            w.swap_rows(pr, row);
            let pinv = w.at(row, col).inv().expect("pivot is nonzero");
            for c in col..w.cols {
                let v = w.at(row, c) * &pinv;
                w.set(row, c, v);
            }
            for r in 0..w.rows {
                if r == row || w.at(r, col).is_zero() {
                    continue;
                }
                let factor = w.at(r, col).clone();
                for c in col..w.cols {
                    let v = w.at(r, c) - &(&factor * w.at(row, c));
                    w.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (w, pivots)
    }

    /// Basis of the right kernel, one column per free variable in ascending
    /// column order (canonical).
    pub fn kernel(&self) -> Mat {
        let (rre, pivots) = self.reduced_row_echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Mat::zeros(self.cols, free.len(), self.field);
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, self.field.one());
            for (i, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, -rre.at(i, fc));
            }
        }
        k
    }

    pub fn inverse(&self) -> Result<Mat, MatError> {
        if self.rows != self.cols {
            return Err(MatError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let aug = self.hstack(&Mat::identity(self.rows, self.field));
        let (rre, pivots) = aug.reduced_row_echelon();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(MatError::Singular);
        }
        let cols: Vec<usize> = (self.cols..2 * self.cols).collect();
        Ok(rre.submatrix(&(0..self.rows).collect::<Vec<_>>(), &cols))
    }

    /// The s-th compound: entry `(i, j)` is the minor of `self` on the i-th
    /// and j-th strictly increasing s-tuples of `I_{s,r}` in lexicographic
    /// order.
    pub fn compound(&self, s: usize) -> Result<Mat, MatError> {
        let r = self.square_order()?;
        if s > r {
            return Err(MatError::CompoundOrder { s, r });
        }
        let tuples = enumerate_index_tuples(s, r).expect("1 <= s <= r");
        let m = tuples.len();
        let mut out = Mat::zeros(m, m, self.field);
        for (i, gi) in tuples.iter().enumerate() {
            for (j, gj) in tuples.iter().enumerate() {
                out.set(i, j, self.minor(gi.entries(), gj.entries())?);
            }
        }
        Ok(out)
    }

    /// The signed cofactor companion of [`Mat::compound`]: entry `(i, j)` is
    /// `(-1)^(sum gi + sum gj)` times the complementary minor with rows `gj`
    /// and columns `gi` deleted. Satisfies `compound(s) * cofactor_compound(s)
    /// = det * identity`.
    pub fn cofactor_compound(&self, s: usize) -> Result<Mat, MatError> {
        let r = self.square_order()?;
        if s > r {
            return Err(MatError::CompoundOrder { s, r });
        }
        let tuples = enumerate_index_tuples(s, r).expect("1 <= s <= r");
        let m = tuples.len();
        let mut out = Mat::zeros(m, m, self.field);
        for (i, gi) in tuples.iter().enumerate() {
            let si: usize = gi.entries().iter().sum();
            for (j, gj) in tuples.iter().enumerate() {
                let sj: usize = gj.entries().iter().sum();
                let minor = self.complement_minor(gj.entries(), gi.entries())?;
                let signed = if (si + sj) % 2 == 0 { minor } else { -minor };
                out.set(i, j, signed);
            }
        }
        Ok(out)
    }

    fn square_order(&self) -> Result<usize, MatError> {
        if self.rows != self.cols {
            return Err(MatError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Row-major JSON grid; `F_p` entries as numbers, rationals as strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|r| {
                    Value::Array((0..self.cols).map(|c| self.at(r, c).to_json()).collect())
                })
                .collect(),
        )
    }
}

fn check_labels(labels: &[usize], bound: usize) -> Result<(), MatError> {
    for w in labels.windows(2) {
        if w[0] >= w[1] {
            return Err(MatError::IndexOutOfRange(format!(
                "labels must strictly increase, got {labels:?}"
            )));
        }
    }
    for &l in labels {
        if l == 0 || l > bound {
            return Err(MatError::IndexOutOfRange(format!(
                "label {l} outside 1..={bound}"
            )));
        }
    }
    Ok(())
}

/// Basis of the intersection of two column spans (columns of the result).
/// Both inputs must have independent columns.
pub fn intersect_columns(a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.rows(), b.rows(), "ambient mismatch in intersection");
    assert_eq!(a.field(), b.field(), "field mismatch in intersection");
    if a.cols() == 0 || b.cols() == 0 {
        return Mat::zeros(a.rows(), 0, a.field());
    }
    // ker [A | -B] = pairs (x, y) with Ax = By; the intersection is A x.
    let stacked = a.hstack(&b.neg());
    let k = stacked.kernel();
    let top = k.submatrix(&(0..a.cols()).collect::<Vec<_>>(), &(0..k.cols()).collect::<Vec<_>>());
    a.mul(&top)
}

/// A d-dimensional subspace of `k^m`, stored as an `m x d` full-column-rank
/// matrix whose columns span it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspacePoint {
    mat: Mat,
}

impl SubspacePoint {
    pub fn new(mat: Mat) -> Result<SubspacePoint, MatError> {
        let r = mat.rank();
        if r != mat.cols() {
            return Err(MatError::RankDeficient {
                expected: mat.cols(),
                got: r,
            });
        }
        Ok(SubspacePoint { mat })
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    pub fn ambient(&self) -> usize {
        self.mat.rows()
    }

    pub fn dim(&self) -> usize {
        self.mat.cols()
    }

    /// The unique reduced-column-echelon basis: column `j` has a unit pivot
    /// in some row `r_j` with `r_1 < r_2 < ...`, zeros in the other pivot
    /// rows, and zeros above its pivot.
    pub fn canonical(&self) -> Mat {
        let (rre, _) = self.mat.transpose().reduced_row_echelon();
        rre.transpose()
    }

    /// Dimension of the intersection with `W` (given by spanning columns);
    /// exact, via `dim U + dim W - rank [U | W]`.
    pub fn intersection_dim(&self, w: &Mat) -> Result<usize, MatError> {
        if w.rows() != self.ambient() {
            return Err(MatError::AmbientMismatch(self.ambient(), w.rows()));
        }
        if w.field() != self.mat.field() {
            return Err(MatError::FieldMismatch);
        }
        let du = self.dim();
        let dw = w.rank();
        let joint = self.mat.hstack(w).rank();
        Ok(du + dw - joint)
    }

    pub fn to_json(&self) -> Value {
        self.mat.to_json()
    }
}
