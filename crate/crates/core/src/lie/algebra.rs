use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{solve_linear, ExactMatrix, Vector, GQ};

/// Finite-dimensional Lie algebra over ℚ(i) given by a labeled basis and
/// sparse structure constants `[e_i, e_j] = Σ c_ij^k e_k`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// `table[i]` lists `(j, [e_i, e_j])` for every nonzero bracket.
    table: Vec<Vec<(usize, Vector)>>,
}

#[derive(Serialize)]
struct BracketEntry {
    i: usize,
    j: usize,
    k: usize,
    re: String,
    im: String,
}

#[derive(Serialize)]
struct AlgebraExport<'a> {
    dim: usize,
    labels: &'a [String],
    brackets: Vec<BracketEntry>,
}

impl LieAlgebra {
    /// Builds the algebra from brackets `[e_i, e_j]`. Each unordered pair may
    /// be given once or in both orders; both orders must then agree up to sign.
    /// Pairs not listed are zero. Antisymmetry and Jacobi are checked.
    pub fn from_brackets(
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut pairs: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        for (i, j, v) in brackets {
            if i >= dim || j >= dim || v.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.dim().max(i.max(j) + 1) });
            }
            if i == j {
                if !v.is_zero() {
                    return Err(Error::NotAntisymmetric(i, j));
                }
                continue;
            }
            let (key, val) = if i < j { ((i, j), v) } else { ((j, i), v.neg()) };
            if let Some(prev) = pairs.get(&key) {
                if *prev != val {
                    return Err(Error::NotAntisymmetric(key.0, key.1));
                }
            } else {
                pairs.insert(key, val);
            }
        }
        let mut table = vec![Vec::new(); dim];
        for ((i, j), v) in pairs {
            if v.is_zero() {
                continue;
            }
            table[j].push((i, v.neg()));
            table[i].push((j, v));
        }
        for row in table.iter_mut() {
            row.sort_by_key(|(j, _)| *j);
        }
        let alg = LieAlgebra { dim, labels, table };
        alg.verify_jacobi()?;
        Ok(alg)
    }

    pub fn abelian(labels: Vec<String>) -> Self {
        let dim = labels.len();
        LieAlgebra { dim, labels, table: vec![Vec::new(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, k: usize) -> &str {
        &self.labels[k]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis(&self, k: usize) -> Vector {
        Vector::basis(self.dim, k)
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        match self.table[i].binary_search_by_key(&j, |(k, _)| *k) {
            Ok(p) => self.table[i][p].1.clone(),
            Err(_) => Vector::zero(self.dim),
        }
    }

    /// Nonzero brackets `(j, [e_i, e_j])` of a basis element.
    pub fn brackets_of(&self, i: usize) -> &[(usize, Vector)] {
        &self.table[i]
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.try_bracket(x, y).expect("bracket dimension")
    }

    pub fn try_bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        for v in [x, y] {
            if v.dim() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
            }
        }
        let mut out = Vector::zero(self.dim);
        for (i, a) in x.iter() {
            for (j, v) in &self.table[i] {
                let b = y.get(*j);
                if !b.is_zero() {
                    out.axpy(&(a * &b), v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x` acting on column coordinates.
    pub fn ad(&self, x: &Vector) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.bracket(x, &self.basis(j));
            for (k, c) in col.iter() {
                m.set(k, j, c.clone());
            }
        }
        m
    }

    /// Exhaustive Jacobi check on basis triples.
    pub fn verify_jacobi(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let ij = self.bracket_basis(i, j);
                for k in (j + 1)..self.dim {
                    let jk = self.bracket_basis(j, k);
                    let ki = self.bracket_basis(k, i);
                    if ij.is_zero() && jk.is_zero() && ki.is_zero() {
                        continue;
                    }
                    let mut s = self.bracket(&ij, &self.basis(k));
                    s.axpy(&GQ::one(), &self.bracket(&jk, &self.basis(i)));
                    s.axpy(&GQ::one(), &self.bracket(&ki, &self.basis(j)));
                    if !s.is_zero() {
                        return Err(Error::JacobiViolation(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Killing form `B(e_i, e_j) = tr(ad e_i ∘ ad e_j)` by sparse trace.
    pub fn killing_matrix(&self) -> ExactMatrix {
        // ad_i as sparse columns: ad_i(e_k) = [e_i, e_k]
        let n = self.dim;
        let mut b = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                // tr(ad_i ad_j) = Σ_k coefficient of e_k in [e_i, [e_j, e_k]]
                let mut acc = GQ::zero();
                for (k, jk) in &self.table[j] {
                    for (l, c) in jk.iter() {
                        let il = self.bracket_basis(i, l);
                        let t = il.get(*k);
                        if !t.is_zero() {
                            acc += c * &t;
                        }
                    }
                }
                b.set(i, j, acc.clone());
                b.set(j, i, acc);
            }
        }
        b
    }

    /// Bilinear value `xᵀ M y` for a form matrix `M`.
    pub fn pair(m: &ExactMatrix, x: &Vector, y: &Vector) -> GQ {
        let my = m.apply(y).expect("form dimension");
        x.dot(&my)
    }

    /// Structure constants in a new basis spanning a subalgebra.
    pub fn subalgebra(&self, basis: &[Vector], labels: Vec<String>) -> Result<LieAlgebra> {
        let k = basis.len();
        if labels.len() != k {
            return Err(Error::DimensionMismatch { expected: k, found: labels.len() });
        }
        // columns are the basis vectors; solve A c = [b_i, b_j]
        let a = ExactMatrix::from_row_vectors(self.dim, basis).transpose();
        if a.rank() != k {
            return Err(Error::ConstructionFailure("subalgebra basis is dependent".into()));
        }
        let mut rhs_cols = Vec::new();
        let mut keys = Vec::new();
        for i in 0..k {
            for j in (i + 1)..k {
                rhs_cols.push(self.bracket(&basis[i], &basis[j]));
                keys.push((i, j));
            }
        }
        if keys.is_empty() {
            return Ok(LieAlgebra::abelian(labels));
        }
        let rhs = ExactMatrix::from_row_vectors(self.dim, &rhs_cols).transpose();
        let sol = solve_linear(&a, &rhs)
            .map_err(|_| Error::ConstructionFailure("span is not closed under bracket".into()))?;
        let entries = keys
            .iter()
            .enumerate()
            .map(|(c, &(i, j))| (i, j, sol.particular.col_vector(c)));
        LieAlgebra::from_brackets(labels, entries.collect::<Vec<_>>())
    }

    /// JSON document `{"dim", "labels", "brackets": [{i, j, k, re, im}]}` with `i < j`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for (j, v) in &self.table[i] {
                if *j <= i {
                    continue;
                }
                for (k, c) in v.iter() {
                    brackets.push(BracketEntry { i, j: *j, k, re: c.re_string(), im: c.im_string() });
                }
            }
        }
        serde_json::to_value(AlgebraExport { dim: self.dim, labels: &self.labels, brackets })
            .expect("serializable")
    }
}
