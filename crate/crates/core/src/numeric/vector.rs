use std::collections::BTreeMap;

use super::scalar::GQ;

/// Sparse vector over ℚ(i); zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    dim: usize,
    data: BTreeMap<usize, GQ>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector { dim, data: BTreeMap::new() }
    }

    pub fn basis(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range {dim}");
        let mut v = Vector::zero(dim);
        v.data.insert(k, GQ::one());
        v
    }

    pub fn from_dense(entries: &[GQ]) -> Self {
        let mut v = Vector::zero(entries.len());
        for (k, x) in entries.iter().enumerate() {
            if !x.is_zero() {
                v.data.insert(k, x.clone());
            }
        }
        v
    }

    pub fn from_pairs(dim: usize, pairs: impl IntoIterator<Item = (usize, GQ)>) -> Self {
        let mut v = Vector::zero(dim);
        for (k, x) in pairs {
            v.add_at(k, &x);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, k: usize) -> GQ {
        self.data.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.data.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.data.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &GQ)> {
        self.data.iter().map(|(k, x)| (*k, x))
    }

    pub fn to_dense(&self) -> Vec<GQ> {
        let mut out = vec![GQ::zero(); self.dim];
        for (k, x) in &self.data {
            out[*k] = x.clone();
        }
        out
    }

    pub fn add_at(&mut self, k: usize, x: &GQ) {
        assert!(k < self.dim, "index {k} out of range {}", self.dim);
        if x.is_zero() {
            return;
        }
        let slot = self.data.entry(k).or_default();
        *slot += x;
        if slot.is_zero() {
            self.data.remove(&k);
        }
    }

    /// self += c·other
    pub fn axpy(&mut self, c: &GQ, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.data {
            self.add_at(*k, &(c * x));
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.axpy(&GQ::one(), other);
        out
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.axpy(&GQ::from_int(-1), other);
        out
    }

    pub fn scale(&self, c: &GQ) -> Vector {
        if c.is_zero() {
            return Vector::zero(self.dim);
        }
        Vector {
            dim: self.dim,
            data: self.data.iter().map(|(k, x)| (*k, c * x)).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        self.scale(&GQ::from_int(-1))
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Vector {
        Vector {
            dim: self.dim,
            data: self.data.iter().map(|(k, x)| (*k, x.conj())).collect(),
        }
    }

    /// Bilinear pairing Σ aₖbₖ (no conjugation).
    pub fn dot(&self, other: &Vector) -> GQ {
        let (small, large) = if self.nnz() <= other.nnz() { (self, other) } else { (other, self) };
        let mut acc = GQ::zero();
        for (k, x) in &small.data {
            if let Some(y) = large.data.get(k) {
                acc += x * y;
            }
        }
        acc
    }

    pub fn support(&self) -> Vec<usize> {
        self.data.keys().copied().collect()
    }
}

pub fn linear_combination(dim: usize, terms: &[(GQ, &Vector)]) -> Vector {
    let mut out = Vector::zero(dim);
    for (c, v) in terms {
        out.axpy(c, v);
    }
    out
}
