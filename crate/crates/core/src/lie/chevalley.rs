use std::collections::BTreeMap;
use std::sync::Arc;

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::numeric::{solve_linear, ExactMatrix, Rational, Vector, GQ};

/// Root of type A as integer coefficients over α₁..α_{N−1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    /// α_j^k = α_j + … + α_{j+k−1} (1-indexed `j`).
    pub fn alpha(rank: usize, j: usize, k: usize) -> Root {
        let mut coeffs = vec![0; rank];
        for c in coeffs.iter_mut().skip(j - 1).take(k) {
            *c = 1;
        }
        Root { coeffs }
    }

    /// `(j, k)` if the root is the positive run α_j^k.
    pub fn as_run(&self) -> Option<(usize, usize)> {
        let start = self.coeffs.iter().position(|&c| c != 0)?;
        let len = self.coeffs[start..].iter().take_while(|&&c| c == 1).count();
        let ok = len > 0 && self.coeffs[start + len..].iter().all(|&c| c == 0);
        ok.then_some((start + 1, len))
    }

    pub fn neg(&self) -> Root {
        Root { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub n: usize,
    /// Ordered by `k` then `j`.
    pub positive_roots: Vec<Root>,
    pub cartan_matrix: Vec<Vec<i64>>,
}

/// Positive roots α_j^k and the Cartan matrix of sl(N).
pub fn root_data(n: usize) -> Result<RootSystem> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let r = n - 1;
    let positive_roots = runs(n).into_iter().map(|(j, k)| Root::alpha(r, j, k)).collect();
    let cartan_matrix = (0..r)
        .map(|a| {
            (0..r)
                .map(|b| match a.abs_diff(b) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    Ok(RootSystem { n, positive_roots, cartan_matrix })
}

fn runs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 1..n {
        for j in 1..=(n - k) {
            out.push((j, k));
        }
    }
    out
}

/// Which kind of basis element an index denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// H_i, 1-indexed.
    Cartan(usize),
    /// e_{±α_j^k}; `positive` gives the sign.
    Root { positive: bool, j: usize, k: usize },
    /// Central element of gl(N).
    Center,
}

/// sl(N,ℂ) (optionally gl(N,ℂ)) in a Chevalley basis.
///
/// Basis order: H₁..H_{N−1}, e_α for α ∈ Σ⁺ (by length then start), e_{−α} in
/// the same order, then Z for gl(N). Brackets come from the matrix units
/// e_{α_j^k} = E_{j,j+k}, e_{−α_j^k} = E_{j+k,j}, H_i = E_ii − E_{i+1,i+1}.
#[derive(Clone, Debug)]
pub struct Chevalley {
    pub n: usize,
    pub algebra: Arc<LieAlgebra>,
    pub roots: RootSystem,
    kinds: Vec<BasisKind>,
    pos_index: BTreeMap<(usize, usize), usize>,
    neg_index: BTreeMap<(usize, usize), usize>,
    center: Option<usize>,
}

/// Element of gl(N) as sparse matrix units keyed by (row, col), 1-indexed.
type MatrixUnits = BTreeMap<(usize, usize), GQ>;

impl Chevalley {
    pub fn sl(n: usize) -> Result<Self> {
        Self::build(n, false)
    }

    pub fn gl(n: usize) -> Result<Self> {
        Self::build(n, true)
    }

    fn build(n: usize, with_center: bool) -> Result<Self> {
        let roots = root_data(n)?;
        let mut kinds = Vec::new();
        let mut labels = Vec::new();
        for i in 1..n {
            kinds.push(BasisKind::Cartan(i));
            labels.push(format!("H{i}"));
        }
        let mut pos_index = BTreeMap::new();
        let mut neg_index = BTreeMap::new();
        for (j, k) in runs(n) {
            pos_index.insert((j, k), kinds.len());
            kinds.push(BasisKind::Root { positive: true, j, k });
            labels.push(format!("e[{j},{k}]"));
        }
        for (j, k) in runs(n) {
            neg_index.insert((j, k), kinds.len());
            kinds.push(BasisKind::Root { positive: false, j, k });
            labels.push(format!("e[-{j},{k}]"));
        }
        let center = with_center.then(|| {
            kinds.push(BasisKind::Center);
            labels.push("Z".to_string());
            kinds.len() - 1
        });
        let dim = kinds.len();

        let units: Vec<MatrixUnits> = kinds.iter().map(|k| Self::realize(n, *k)).collect();
        let mut entries = Vec::new();
        for a in 0..dim {
            for b in (a + 1)..dim {
                let prod = commutator(&units[a], &units[b]);
                if prod.is_empty() {
                    continue;
                }
                let v = decompose(n, &prod, &pos_index, &neg_index, center, dim)?;
                entries.push((a, b, v));
            }
        }
        let algebra = Arc::new(LieAlgebra::from_brackets(labels, entries)?);
        Ok(Chevalley { n, algebra, roots, kinds, pos_index, neg_index, center })
    }

    fn realize(n: usize, kind: BasisKind) -> MatrixUnits {
        let mut m = MatrixUnits::new();
        match kind {
            BasisKind::Cartan(i) => {
                m.insert((i, i), GQ::one());
                m.insert((i + 1, i + 1), GQ::from_int(-1));
            }
            BasisKind::Root { positive: true, j, k } => {
                m.insert((j, j + k), GQ::one());
            }
            BasisKind::Root { positive: false, j, k } => {
                m.insert((j + k, j), GQ::one());
            }
            BasisKind::Center => {
                for i in 1..=n {
                    m.insert((i, i), GQ::one());
                }
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn kind(&self, idx: usize) -> BasisKind {
        self.kinds[idx]
    }

    /// Index of H_i (1-indexed).
    pub fn h(&self, i: usize) -> usize {
        assert!((1..self.n).contains(&i), "H index {i} out of range");
        i - 1
    }

    /// Index of e_{α_j^k}.
    pub fn pos(&self, j: usize, k: usize) -> usize {
        self.pos_index[&(j, k)]
    }

    /// Index of e_{−α_j^k}.
    pub fn neg(&self, j: usize, k: usize) -> usize {
        self.neg_index[&(j, k)]
    }

    pub fn center(&self) -> Option<usize> {
        self.center
    }

    pub fn h_vec(&self, i: usize) -> Vector {
        self.algebra.basis(self.h(i))
    }

    pub fn pos_vec(&self, j: usize, k: usize) -> Vector {
        self.algebra.basis(self.pos(j, k))
    }

    pub fn neg_vec(&self, j: usize, k: usize) -> Vector {
        self.algebra.basis(self.neg(j, k))
    }

    /// Positive roots as runs `(j, k)` in basis order.
    pub fn positive_runs(&self) -> Vec<(usize, usize)> {
        runs(self.n)
    }

    /// Standard Cartan subalgebra (with Z for gl(N)).
    pub fn cartan_basis(&self) -> Vec<Vector> {
        let mut out: Vec<Vector> = (1..self.n).map(|i| self.h_vec(i)).collect();
        if let Some(z) = self.center {
            out.push(self.algebra.basis(z));
        }
        out
    }

    /// Coroot [e_α, e_{−α}] = H_j + … + H_{j+k−1}.
    pub fn coroot(&self, j: usize, k: usize) -> Vector {
        self.algebra.bracket(&self.pos_vec(j, k), &self.neg_vec(j, k))
    }

    /// Value `α(H_i)` for the root with coefficient vector `root`.
    pub fn root_on_h(&self, root: &Root, i: usize) -> i64 {
        root.coeffs
            .iter()
            .enumerate()
            .map(|(b, c)| c * self.roots.cartan_matrix[i - 1][b])
            .sum()
    }

    /// Invariant form normalized so that `⟨H_α, H_α⟩ = 2`: the trace form
    /// `tr(XY)` on sl(N), equal to Killing/(2N); on gl(N), `⟨Z, Z⟩ = N`.
    pub fn invariant_form(&self) -> ExactMatrix {
        let k = self.algebra.killing_matrix();
        let h1 = self.h(1);
        let scale = GQ::from_int(2).checked_div(k.get(h1, h1)).expect("nonzero Killing");
        let d = self.dim();
        let mut m = ExactMatrix::zeros(d, d);
        for r in 0..d {
            for c in 0..d {
                let x = k.get(r, c);
                if !x.is_zero() {
                    m.set(r, c, x * &scale);
                }
            }
        }
        if let Some(z) = self.center {
            m.set(z, z, GQ::from_int(self.n as i64));
        }
        m
    }

    /// Killing form; `DegenerateKilling` unless the algebra is semisimple.
    pub fn killing_form(&self) -> Result<ExactMatrix> {
        let k = self.algebra.killing_matrix();
        if k.determinant()?.is_zero() {
            return Err(Error::DegenerateKilling);
        }
        Ok(k)
    }

    /// `H_α ∈ 𝔥` with `F(H, H_α) = α(H)` for all `H ∈ 𝔥`, where `F` is `form`.
    pub fn dual_vector_with(&self, form: &ExactMatrix, root: &Root) -> Result<Vector> {
        let r = self.rank();
        let hs: Vec<Vector> = (1..self.n).map(|i| self.h_vec(i)).collect();
        let mut a = ExactMatrix::zeros(r, r);
        let mut b = ExactMatrix::zeros(r, 1);
        for (row, hi) in hs.iter().enumerate() {
            for (col, hj) in hs.iter().enumerate() {
                a.set(row, col, LieAlgebra::pair(form, hi, hj));
            }
            b.set(row, 0, GQ::from_int(self.root_on_h(root, row + 1)));
        }
        let sol = solve_linear(&a, &b)?;
        if !sol.kernel.is_empty() {
            return Err(Error::DegenerateKilling);
        }
        let mut v = Vector::zero(self.dim());
        for (c, h) in hs.iter().enumerate() {
            v.axpy(sol.particular.get(c, 0), h);
        }
        Ok(v)
    }

    /// `H_α` dual to α under the Killing form.
    pub fn dual_vector(&self, root: &Root) -> Result<Vector> {
        let k = self.killing_form()?;
        self.dual_vector_with(&k, root)
    }
}

fn commutator(a: &MatrixUnits, b: &MatrixUnits) -> MatrixUnits {
    let mut out = MatrixUnits::new();
    let mut add = |key: (usize, usize), x: GQ| {
        let slot = out.entry(key).or_default();
        *slot += x;
    };
    for ((r1, c1), x) in a {
        for ((r2, c2), y) in b {
            if c1 == r2 {
                add((*r1, *c2), x * y);
            }
            if c2 == r1 {
                add((*r2, *c1), -(x * y));
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn decompose(
    n: usize,
    m: &MatrixUnits,
    pos: &BTreeMap<(usize, usize), usize>,
    neg: &BTreeMap<(usize, usize), usize>,
    center: Option<usize>,
    dim: usize,
) -> Result<Vector> {
    let mut v = Vector::zero(dim);
    let mut diag = vec![GQ::zero(); n + 1];
    for (&(r, c), x) in m {
        if r == c {
            diag[r] = x.clone();
        } else if r < c {
            v.add_at(pos[&(r, c - r)], x);
        } else {
            v.add_at(neg[&(c, r - c)], x);
        }
    }
    let trace: GQ = diag.iter().cloned().sum();
    let shift = match center {
        Some(z) => {
            let t = trace.scale(&Rational::new(1.into(), (n as i64).into()));
            v.add_at(z, &t);
            t
        }
        None if !trace.is_zero() => {
            return Err(Error::ConstructionFailure("traceful element in sl(N)".into()));
        }
        None => GQ::zero(),
    };
    // diag(d) − shift·I = Σ c_i H_i with c_i = Σ_{l ≤ i} (d_l − shift)
    let mut prefix = GQ::zero();
    for i in 1..n {
        prefix += &diag[i] - &shift;
        v.add_at(i - 1, &prefix);
    }
    Ok(v)
}

pub fn build_sl(n: usize) -> Result<Chevalley> {
    Chevalley::sl(n)
}
