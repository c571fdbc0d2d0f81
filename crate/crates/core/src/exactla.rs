//! Exact linear algebra over the rationals.
//!
//! Everything here is dense and deterministic: row reduction always picks the first
//! nonzero entry in a column as pivot and produces the unique reduced row echelon form,
//! so two spans are equal as sets exactly when their stored bases are equal.

use std::fmt;

use num::{BigRational, One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational. `BigRational` keeps itself reduced with a positive denominator.
pub type Q = BigRational;

/// Coordinate vector.
pub type QVector = Vec<Q>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the ambient space")]
    NotContained,
}

pub fn zero_vector(n: usize) -> QVector {
    vec![Q::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> QVector {
    let mut v = zero_vector(n);
    v[i] = Q::one();
    v
}

pub fn is_zero_vector(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Q], c: &Q, v: &[Q]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Q>) -> Result<Self, LinAlgError> {
        if data.len() != rows * cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(QMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    /// Builds a matrix from its rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: &[QVector]) -> Result<Self, LinAlgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinAlgError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(QMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors, each with `rows` entries.
    pub fn from_columns(rows: usize, columns: &[QVector]) -> Result<Self, LinAlgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinAlgError::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self, LinAlgError> {
        Self::new(
            rows,
            cols,
            entries.iter().map(|&x| Q::from_integer(x.into())).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> QVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<QVector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Result<QVector, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &QMatrix) -> Result<QMatrix, LinAlgError> {
        if self.rows != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut out = QMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &Q) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form and the pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut rows = m.to_rows();
    let pivots = rref_rows(&mut rows, m.cols());
    let out = QMatrix::from_rows(m.cols(), &rows).expect("row lengths preserved");
    (out, pivots)
}

/// In-place reduction of a list of rows of width `cols`; returns pivot columns.
/// Rows beyond the rank are left as zero rows.
fn rref_rows(rows: &mut [QVector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = -row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x += &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &QMatrix) -> usize {
    rref(m).1.len()
}

/// Canonical basis of the null space of `m`.
pub fn kernel_basis(m: &QMatrix) -> Subspace {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let gens: Vec<QVector> = (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = zero_vector(n);
            v[free] = Q::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(k, free).clone();
            }
            v
        })
        .collect();
    Subspace::span(n, &gens).expect("kernel vectors have the ambient width")
}

/// One solution of `m * x = b` (free variables set to zero), or `None` if inconsistent.
pub fn solve(m: &QMatrix, b: &[Q]) -> Result<Option<QVector>, LinAlgError> {
    if b.len() != m.rows() {
        return Err(LinAlgError::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let n = m.cols();
    let mut rows: Vec<QVector> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref_rows(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = zero_vector(n);
    for (k, &p) in pivots.iter().enumerate() {
        x[p] = rows[k][n].clone();
    }
    Ok(Some(x))
}

/// A linear subspace of `Q^ambient_dim`, stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<QVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| unit_vector(ambient_dim, i))
                .collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of an arbitrary generating list.
    pub fn span(ambient_dim: usize, gens: &[QVector]) -> Result<Self, LinAlgError> {
        if let Some(g) = gens.iter().find(|g| g.len() != ambient_dim) {
            return Err(LinAlgError::DimensionMismatch {
                expected: ambient_dim,
                found: g.len(),
            });
        }
        let mut rows = gens.to_vec();
        let pivots = rref_rows(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        Ok(Subspace {
            ambient_dim,
            basis: rows,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the basis vectors so that `v` vanishes at every pivot column.
    /// The result is zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Q]) -> Result<QVector, LinAlgError> {
        self.check_len(v)?;
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                axpy(&mut r, &c, b);
            }
        }
        Ok(r)
    }

    /// Coefficients of `v` in the stored basis, or `None` when `v` is not a member.
    pub fn coordinates(&self, v: &[Q]) -> Result<Option<QVector>, LinAlgError> {
        self.check_len(v)?;
        let coords: QVector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            let neg = -c.clone();
            axpy(&mut residual, &neg, b);
        }
        Ok(is_zero_vector(&residual).then_some(coords))
    }

    pub fn contains(&self, v: &[Q]) -> Result<bool, LinAlgError> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinAlgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinAlgError::DimensionMismatch {
                expected: other.ambient_dim,
                found: self.ambient_dim,
            });
        }
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn combine(&self, coords: &[Q]) -> Result<QVector, LinAlgError> {
        if coords.len() != self.dim() {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.dim(),
                found: coords.len(),
            });
        }
        let mut v = zero_vector(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            axpy(&mut v, c, b);
        }
        Ok(v)
    }

    fn check_len(&self, v: &[Q]) -> Result<(), LinAlgError> {
        if v.len() != self.ambient_dim {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        Ok(())
    }
}

/// Representatives of a basis of `ambient / sub`.
///
/// Each ambient basis vector is reduced modulo `sub` (cleared at the pivots of `sub`) and the
/// reduced vectors are brought to echelon form, so the representatives vanish on the pivots of
/// `sub` and the earliest remaining coordinates lead.
pub fn quotient_basis(ambient: &Subspace, sub: &Subspace) -> Result<Vec<QVector>, LinAlgError> {
    Ok(QuotientSpace::new(ambient, sub)?.representatives().to_vec())
}

/// A quotient `ambient / sub` with canonical representatives and a coordinate map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    sub: Subspace,
    reps: Subspace,
}

impl QuotientSpace {
    pub fn new(ambient: &Subspace, sub: &Subspace) -> Result<Self, LinAlgError> {
        if !sub.is_subspace_of(ambient)? {
            return Err(LinAlgError::NotContained);
        }
        let reduced = ambient
            .basis()
            .iter()
            .map(|b| sub.reduce(b))
            .collect::<Result<Vec<_>, _>>()?;
        let reps = Subspace::span(ambient.ambient_dim(), &reduced)?;
        Ok(QuotientSpace {
            sub: sub.clone(),
            reps,
        })
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn representatives(&self) -> &[QVector] {
        self.reps.basis()
    }

    pub fn sub(&self) -> &Subspace {
        &self.sub
    }

    /// Coordinates of the class of `v`; fails when `v` is outside the ambient space.
    pub fn coordinates(&self, v: &[Q]) -> Result<QVector, LinAlgError> {
        let r = self.sub.reduce(v)?;
        self.reps.coordinates(&r)?.ok_or(LinAlgError::NotContained)
    }
}
