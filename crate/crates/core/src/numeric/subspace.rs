use super::matrix::{echelon_vectors, ExactMatrix};
use super::scalar::GQ;
use super::vector::Vector;
use crate::error::{Error, Result};

/// Subspace of ℚ(i)^dim with a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of `vs`; dependent spanning sets are echelonized silently.
    pub fn span(dim: usize, vs: &[Vector]) -> Self {
        let basis = echelon_vectors(dim, vs);
        let pivots = basis.iter().map(|v| v.support()[0]).collect();
        Subspace { dim, basis, pivots }
    }

    pub fn zero(dim: usize) -> Self {
        Subspace { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        Self::span(dim, &(0..dim).map(|k| Vector::basis(dim, k)).collect::<Vec<_>>())
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Remainder of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r.get(p);
            if !c.is_zero() {
                r.axpy(&(-c), b);
            }
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.dim, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.basis.is_empty() || other.basis.is_empty() {
            return Subspace::zero(self.dim);
        }
        // x·A = y·B  ⇔  (x, −y) ∈ left kernel of [A; B]
        let a = self.basis.len();
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let m = ExactMatrix::from_row_vectors(self.dim, &stacked).transpose();
        let vs: Vec<Vector> = m
            .kernel()
            .iter()
            .map(|k| {
                let mut v = Vector::zero(self.dim);
                for (i, c) in k.iter().filter(|(i, _)| *i < a) {
                    v.axpy(c, &self.basis[i]);
                }
                v
            })
            .collect();
        Subspace::span(self.dim, &vs)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v ∉ self`.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<GQ>> {
        let coords: Vec<GQ> = self.pivots.iter().map(|&p| v.get(p)).collect();
        let mut rebuilt = Vector::zero(self.dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            rebuilt.axpy(c, b);
        }
        (rebuilt == *v).then_some(coords)
    }
}

/// Coordinates relative to an arbitrary basis of the whole space.
#[derive(Clone, Debug)]
pub struct CoordinateSystem {
    basis: Vec<Vector>,
    inverse: ExactMatrix,
}

impl CoordinateSystem {
    pub fn new(basis: Vec<Vector>) -> Result<Self> {
        let dim = basis.first().map_or(0, Vector::dim);
        if basis.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: basis.len() });
        }
        let p = ExactMatrix::from_row_vectors(dim, &basis);
        let inverse = p.inverse().map_err(|_| Error::ConstructionFailure("basis is singular".into()))?;
        Ok(CoordinateSystem { basis, inverse })
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `c` with `v = Σ c_k b_k`.
    pub fn coords(&self, v: &Vector) -> Vector {
        self.inverse.left_apply(v).expect("ambient dimension")
    }

    pub fn vector(&self, coords: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim());
        for (k, c) in coords.iter() {
            out.axpy(c, &self.basis[k]);
        }
        out
    }
}
