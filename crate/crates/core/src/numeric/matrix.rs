use num_traits::{Signed, Zero};

use super::scalar::{Rational, GQ};
use super::vector::Vector;
use crate::error::{Error, Result};

/// Dense row-major matrix over ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<GQ>>,
}

/// Solution set `X = particular + span(kernel)` of `A·X = B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    /// `cols(A) × cols(B)`.
    pub particular: ExactMatrix,
    /// Basis of ker A in reduced echelon form.
    pub kernel: Vec<Vector>,
}

/// Inertia of a Hermitian matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub fn rank(&self) -> usize {
        self.pos + self.neg
    }
    pub fn dim(&self) -> usize {
        self.pos + self.neg + self.zero
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![vec![GQ::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k][k] = GQ::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GQ>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
        }
        Ok(ExactMatrix { rows: rows.len(), cols, data: rows })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let data: Vec<Vec<GQ>> =
            rows.iter().map(|r| r.iter().map(|x| GQ::from_int(*x)).collect()).collect();
        Self::from_rows(data).expect("ragged integer rows")
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_row_vectors(dim: usize, vs: &[Vector]) -> Self {
        let mut m = Self::zeros(vs.len(), dim);
        for (r, v) in vs.iter().enumerate() {
            for (k, x) in v.iter() {
                m.data[r][k] = x.clone();
            }
        }
        m
    }

    /// Single-column matrix.
    pub fn column(v: &[GQ]) -> Self {
        Self::from_rows(v.iter().map(|x| vec![x.clone()]).collect()).expect("column")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GQ {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: GQ) {
        self.data[r][c] = x;
    }

    pub fn row(&self, r: usize) -> &[GQ] {
        &self.data[r]
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        Vector::from_dense(&self.data[r])
    }

    pub fn col_vector(&self, c: usize) -> Vector {
        Vector::from_pairs(self.rows, (0..self.rows).map(|r| (r, self.data[r][c].clone())))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c][r] = self.data[r][c].clone();
            }
        }
        t
    }

    pub fn conj(&self) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.iter().map(GQ::conj).collect()).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.adjoint()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(GQ::is_zero))
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other.data[k][c];
                    if !b.is_zero() {
                        out.data[r][c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `v·M` for a row vector `v` of length `rows`.
    pub fn left_apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: v.dim() });
        }
        let mut out = Vector::zero(self.cols);
        for (r, x) in v.iter() {
            for (c, y) in self.data[r].iter().enumerate() {
                if !y.is_zero() {
                    out.add_at(c, &(x * y));
                }
            }
        }
        Ok(out)
    }

    /// `M·v` for a column vector `v` of length `cols`.
    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.dim() });
        }
        let mut out = Vector::zero(self.rows);
        for r in 0..self.rows {
            let mut acc = GQ::zero();
            for (c, x) in v.iter() {
                let y = &self.data[r][c];
                if !y.is_zero() {
                    acc += y * x;
                }
            }
            out.add_at(r, &acc);
        }
        Ok(out)
    }

    /// Reduced row echelon form and pivot columns. Pivot is the first nonzero
    /// column, taken from the smallest eligible row index.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..self.cols {
            if prow == self.rows {
                break;
            }
            let Some(r) = (prow..self.rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(prow, r);
            let inv = m[prow][c].inv().expect("nonzero pivot");
            if !inv.is_one() {
                for x in m[prow].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &inv;
                    }
                }
            }
            let pivot_row = m[prow].clone();
            for (rr, row) in m.iter_mut().enumerate() {
                if rr == prow || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(pivot_row.iter()).skip(c) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
            pivots.push(c);
            prow += 1;
        }
        (ExactMatrix { rows: self.rows, cols: self.cols, data: m }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : A·x = 0} in reduced echelon form.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|c| !is_pivot[*c]) {
            let mut v = Vector::zero(self.cols);
            v.add_at(f, &GQ::one());
            for (row, &p) in pivots.iter().enumerate() {
                let x = r.get(row, f);
                if !x.is_zero() {
                    v.add_at(p, &(-x));
                }
            }
            basis.push(v);
        }
        echelon_vectors(self.cols, &basis)
    }

    pub fn determinant(&self) -> Result<GQ> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = GQ::one();
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return Ok(GQ::zero());
            };
            if r != c {
                m.swap(r, c);
                det = -det;
            }
            det = &det * &m[c][c];
            let inv = m[c][c].inv()?;
            let prow = m[c].clone();
            for row in m.iter_mut().skip(c + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let f = &row[c] * &inv;
                for (x, p) in row.iter_mut().zip(prow.iter()).skip(c) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.data[r][c] = self.data[r][c].clone();
            }
            aug.data[r][n + r] = GQ::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut out = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                out.data[r][c] = red.data[r][n + c].clone();
            }
        }
        Ok(out)
    }

    /// Inertia of a Hermitian matrix by exact congruence `A ↦ P A P*`.
    pub fn hermitian_signature(&self) -> Result<Signature> {
        if !self.is_hermitian() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let d = ldl_diagonal(&self.data);
        let mut s = Signature { pos: 0, neg: 0, zero: 0 };
        for x in d {
            if x.is_positive() {
                s.pos += 1;
            } else if x.is_negative() {
                s.neg += 1;
            } else {
                s.zero += 1;
            }
        }
        Ok(s)
    }

    /// Positive definiteness of a Hermitian matrix.
    pub fn is_positive_definite(&self) -> bool {
        matches!(self.hermitian_signature(), Ok(s) if s.pos == self.rows)
    }
}

/// Real diagonal of a congruence-diagonalization of a Hermitian matrix.
fn ldl_diagonal(a: &[Vec<GQ>]) -> Vec<Rational> {
    let n = a.len();
    let mut m: Vec<Vec<GQ>> = a.to_vec();
    let mut diag = Vec::with_capacity(n);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&k| !m[k][k].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // no usable diagonal entry; mix in a row with a nonzero off-diagonal entry
                let hit = active.iter().copied().find_map(|j| {
                    active.iter().copied().find(|&k| k != j && !m[j][k].is_zero()).map(|k| (j, k))
                });
                let Some((j, k)) = hit else {
                    diag.extend(active.iter().map(|_| Rational::zero()));
                    break;
                };
                // row_j += c·row_k, col_j += conj(c)·col_k with c = a_jk makes a_jj = 2|a_jk|²
                let c = m[j][k].clone();
                let rk = m[k].clone();
                for (x, y) in m[j].iter_mut().zip(rk.iter()) {
                    *x += &c * y;
                }
                let cc = c.conj();
                for row in m.iter_mut() {
                    let y = row[k].clone();
                    row[j] += &cc * &y;
                }
                j
            }
        };
        let d = m[p][p].clone();
        debug_assert!(d.is_real());
        let inv = d.inv().expect("nonzero pivot");
        let prow = m[p].clone();
        for &r in active.iter().filter(|&&r| r != p) {
            let f = &m[r][p] * &inv;
            if f.is_zero() {
                continue;
            }
            for &c in &active {
                let y = &prow[c];
                if !y.is_zero() {
                    let t = &f * y;
                    m[r][c] -= t;
                }
            }
        }
        diag.push(d.re.clone());
        active.retain(|&k| k != p);
    }
    diag
}

/// Solves `A·X = B` exactly.
pub fn solve_linear(a: &ExactMatrix, b: &ExactMatrix) -> Result<LinearSolution> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch { expected: a.rows, found: b.rows });
    }
    let n = a.cols;
    let mut aug = ExactMatrix::zeros(a.rows, n + b.cols);
    for r in 0..a.rows {
        for c in 0..n {
            aug.data[r][c] = a.data[r][c].clone();
        }
        for c in 0..b.cols {
            aug.data[r][n + c] = b.data[r][c].clone();
        }
    }
    let (red, pivots) = aug.rref();
    if pivots.iter().any(|&p| p >= n) {
        return Err(Error::NoSolution);
    }
    let mut particular = ExactMatrix::zeros(n, b.cols);
    for (row, &p) in pivots.iter().enumerate() {
        for c in 0..b.cols {
            particular.data[p][c] = red.data[row][n + c].clone();
        }
    }
    Ok(LinearSolution { particular, kernel: a.kernel() })
}

/// Reduced echelon basis of the span of `vs` (zero rows dropped).
pub fn echelon_vectors(dim: usize, vs: &[Vector]) -> Vec<Vector> {
    if vs.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = ExactMatrix::from_row_vectors(dim, vs).rref();
    (0..pivots.len()).map(|k| r.row_vector(k)).collect()
}
