//! Involutions θ, τ, σ = τ∘θ on sl(N,ℂ) and the σ-constants B_j^k.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::{BasisKind, Chevalley, LieAlgebra};
use crate::numeric::{ExactMatrix, Signature, Vector, GQ};

/// Linear or antilinear map given by the images of the basis vectors.
#[derive(Clone, Debug)]
pub struct Involution {
    algebra: Arc<LieAlgebra>,
    images: Vec<Vector>,
    antilinear: bool,
}

impl Involution {
    pub fn new(algebra: Arc<LieAlgebra>, images: Vec<Vector>, antilinear: bool) -> Result<Self> {
        if images.len() != algebra.dim() || images.iter().any(|v| v.dim() != algebra.dim()) {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: images.len() });
        }
        Ok(Involution { algebra, images, antilinear })
    }

    /// Antilinear map exchanging `e_k` and `e_{k+h}` where `h = dim/2`.
    pub fn swap_halves(algebra: Arc<LieAlgebra>) -> Self {
        let d = algebra.dim();
        let h = d / 2;
        let images = (0..d).map(|k| Vector::basis(d, if k < h { k + h } else { k - h })).collect();
        Involution { algebra, images, antilinear: true }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn is_antilinear(&self) -> bool {
        self.antilinear
    }

    pub fn image(&self, k: usize) -> &Vector {
        &self.images[k]
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        let mut out = Vector::zero(self.algebra.dim());
        for (k, c) in x.iter() {
            let c = if self.antilinear { c.conj() } else { c.clone() };
            out.axpy(&c, &self.images[k]);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Involution) -> Involution {
        Involution {
            algebra: self.algebra.clone(),
            images: other.images.iter().map(|v| self.apply(v)).collect(),
            antilinear: self.antilinear ^ other.antilinear,
        }
    }

    /// Matrix whose k-th column is the image of `e_k`.
    pub fn matrix(&self) -> ExactMatrix {
        ExactMatrix::from_row_vectors(self.algebra.dim(), &self.images).transpose()
    }

    pub fn is_involutive(&self) -> bool {
        (0..self.algebra.dim()).all(|k| self.apply(&self.images[k]) == self.algebra.basis(k))
    }

    /// `φ[e_i, e_j] = [φe_i, φe_j]` on all basis pairs.
    pub fn is_automorphism(&self) -> bool {
        self.automorphism_defect().is_none()
    }

    pub fn automorphism_defect(&self) -> Option<(usize, usize)> {
        let g = &self.algebra;
        for i in 0..g.dim() {
            for j in (i + 1)..g.dim() {
                let lhs = self.apply(&g.bracket_basis(i, j));
                let rhs = g.bracket(&self.images[i], &self.images[j]);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn commutes_with(&self, other: &Involution) -> bool {
        (0..self.algebra.dim()).all(|k| {
            let e = self.algebra.basis(k);
            self.apply(&other.apply(&e)) == other.apply(&self.apply(&e))
        })
    }

    pub fn equals(&self, other: &Involution) -> bool {
        self.antilinear == other.antilinear && self.images == other.images
    }

    /// ℝ-basis of the fixed set of an antilinear involution.
    pub fn fixed_real_basis(&self) -> Result<Vec<Vector>> {
        if !self.antilinear {
            return Err(Error::ConstructionFailure("fixed real form needs an antilinear map".into()));
        }
        let d = self.algebra.dim();
        let mut chosen: Vec<Vector> = Vec::new();
        let mut real_rows: Vec<Vec<GQ>> = Vec::new();
        for k in 0..d {
            let e = self.algebra.basis(k);
            let ie = e.scale(&GQ::i());
            for cand in [e.add(&self.apply(&e)), ie.add(&self.apply(&ie))] {
                if cand.is_zero() {
                    continue;
                }
                let row = realify(&cand);
                real_rows.push(row);
                let m = ExactMatrix::from_rows(real_rows.clone())?;
                if m.rank() == real_rows.len() {
                    chosen.push(cand);
                } else {
                    real_rows.pop();
                }
            }
            if chosen.len() == d {
                break;
            }
        }
        if chosen.len() != d {
            return Err(Error::ConstructionFailure("fixed set has wrong real dimension".into()));
        }
        Ok(chosen)
    }
}

fn realify(v: &Vector) -> Vec<GQ> {
    let d = v.dim();
    let mut row = vec![GQ::zero(); 2 * d];
    for (k, c) in v.iter() {
        row[k] = GQ::real(c.re.clone());
        row[d + k] = GQ::real(c.im.clone());
    }
    row
}

/// Signature of the Killing form restricted to a real basis.
pub fn killing_signature(alg: &LieAlgebra, real_basis: &[Vector]) -> Result<Signature> {
    let k = alg.killing_matrix();
    let r = real_basis.len();
    let mut m = ExactMatrix::zeros(r, r);
    for a in 0..r {
        for b in 0..r {
            let v = LieAlgebra::pair(&k, &real_basis[a], &real_basis[b]);
            if !v.is_real() {
                return Err(Error::ConstructionFailure("Killing form not real on fixed set".into()));
            }
            m.set(a, b, v);
        }
    }
    m.hermitian_signature()
}

/// θ, τ and σ on a Chevalley basis.
#[derive(Clone, Debug)]
pub struct RealForms {
    pub chevalley: Chevalley,
    pub theta: Involution,
    pub tau: Involution,
    pub sigma: Involution,
}

/// Compact conjugation `τ(e_α) = −e_{−α}`, `τ(H) = −H`, `τ(Z) = −Z`.
pub fn compact_conjugation(c: &Chevalley) -> Involution {
    let d = c.dim();
    let images = (0..d)
        .map(|idx| match c.kind(idx) {
            BasisKind::Cartan(_) | BasisKind::Center => c.algebra.basis(idx).neg(),
            BasisKind::Root { positive: true, j, k } => c.neg_vec(j, k).neg(),
            BasisKind::Root { positive: false, j, k } => c.pos_vec(j, k).neg(),
        })
        .collect();
    Involution { algebra: c.algebra.clone(), images, antilinear: true }
}

/// Diagram automorphism θ(α_j) = α_{N−j} extended to root vectors by brackets.
pub fn diagram_involution(c: &Chevalley) -> Result<Involution> {
    if c.center().is_some() {
        return Err(Error::ConstructionFailure("diagram involution is built on sl(N) only".into()));
    }
    let n = c.n;
    let g = &c.algebra;
    let d = c.dim();
    let mut images: Vec<Option<Vector>> = vec![None; d];
    for i in 1..n {
        images[c.h(i)] = Some(c.h_vec(n - i));
    }
    for j in 1..n {
        images[c.pos(j, 1)] = Some(c.pos_vec(n - j, 1));
        images[c.neg(j, 1)] = Some(c.neg_vec(n - j, 1));
    }
    for k in 2..n {
        for j in 1..=(n - k) {
            for positive in [true, false] {
                let (a, b, target) = if positive {
                    (c.pos(j, 1), c.pos(j + 1, k - 1), c.pos(j, k))
                } else {
                    (c.neg(j, 1), c.neg(j + 1, k - 1), c.neg(j, k))
                };
                let br = g.bracket_basis(a, b);
                let coef = br.get(target);
                if coef.is_zero() || br.nnz() != 1 {
                    return Err(Error::ConstructionFailure(format!("no bracket decomposition for {}", g.label(target))));
                }
                let ta = images[a].clone().expect("shorter root first");
                let tb = images[b].clone().expect("shorter root first");
                let img = g.bracket(&ta, &tb).scale(&coef.inv()?);
                images[target] = Some(img);
            }
        }
    }
    let images = images.into_iter().map(|v| v.expect("every basis vector reached")).collect();
    let theta = Involution { algebra: g.clone(), images, antilinear: false };
    if !theta.is_involutive() {
        return Err(Error::ConstructionFailure("θ² ≠ id".into()));
    }
    if let Some((i, j)) = theta.automorphism_defect() {
        return Err(Error::ConstructionFailure(format!("θ fails on ({i}, {j})")));
    }
    Ok(theta)
}

impl RealForms {
    /// Involutions on sl(2m−1,ℂ); σ fixes a split real form sl(2m−1,ℝ).
    pub fn build(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!("m must be at least 2, got {m}")));
        }
        Self::for_rank(2 * m - 1)
    }

    /// Same construction on sl(N,ℂ) for any N ≥ 2.
    pub fn for_rank(n: usize) -> Result<Self> {
        let chevalley = Chevalley::sl(n)?;
        let theta = diagram_involution(&chevalley)?;
        let tau = compact_conjugation(&chevalley);
        let sigma = tau.compose(&theta);
        for (name, inv) in [("τ", &tau), ("σ", &sigma)] {
            if !inv.is_involutive() || !inv.is_automorphism() {
                return Err(Error::ConstructionFailure(format!("{name} is not an involutive automorphism")));
            }
        }
        Ok(RealForms { chevalley, theta, tau, sigma })
    }

    pub fn n(&self) -> usize {
        self.chevalley.n
    }

    /// Expected Killing signature of sl(N,ℝ): (N(N+1)/2 − 1, N(N−1)/2, 0).
    pub fn split_signature(n: usize) -> Signature {
        Signature { pos: n * (n + 1) / 2 - 1, neg: n * (n - 1) / 2, zero: 0 }
    }

    /// The negative root space `σ` sends `e_{α_j^k}` into, as a run `(j', k)`.
    pub fn sigma_target(&self, j: usize, k: usize) -> Option<(usize, usize)> {
        let img = self.sigma.apply(&self.chevalley.pos_vec(j, k));
        if img.nnz() != 1 {
            return None;
        }
        let idx = img.support()[0];
        match self.chevalley.kind(idx) {
            BasisKind::Root { positive: false, j: jj, k: kk } => Some((jj, kk)),
            _ => None,
        }
    }

    /// Positive roots γ with −σ(γ) = γ, in basis order.
    pub fn minus_sigma_fixed_roots(&self) -> Vec<(usize, usize)> {
        self.chevalley
            .positive_runs()
            .into_iter()
            .filter(|&(j, k)| self.sigma_target(j, k) == Some((j, k)))
            .collect()
    }
}

/// Table B_j^k = ⟨e_{α_j^k}, σ(e_{α_{2m−k−j}^k})⟩ for the trace form.
#[derive(Clone, Debug)]
pub struct SigmaConstants {
    pub m: usize,
    pub table: BTreeMap<(usize, usize), GQ>,
    /// Trace form on the Chevalley basis.
    form: ExactMatrix,
    chevalley: Chevalley,
}

impl SigmaConstants {
    pub fn compute(rf: &RealForms) -> Result<Self> {
        let n = rf.n();
        if n % 2 == 0 {
            return Err(Error::InvalidParameter("σ-constants need N = 2m − 1".into()));
        }
        let m = (n + 1) / 2;
        let c = &rf.chevalley;
        let form = c.invariant_form();
        let mut table = BTreeMap::new();
        for (j, k) in c.positive_runs() {
            let partner = 2 * m - k - j;
            let v = rf.sigma.apply(&c.pos_vec(partner, k));
            table.insert((j, k), LieAlgebra::pair(&form, &c.pos_vec(j, k), &v));
        }
        Ok(SigmaConstants { m, table, form, chevalley: c.clone() })
    }

    pub fn get(&self, j: usize, k: usize) -> &GQ {
        &self.table[&(j, k)]
    }

    /// B_j = B_j^1.
    pub fn simple(&self, j: usize) -> &GQ {
        self.get(j, 1)
    }

    /// B_{γ_j}, γ_j = α_j^{2(m−j)}.
    pub fn gamma(&self, j: usize) -> &GQ {
        self.get(j, 2 * (self.m - j))
    }

    /// ⟨H_α, H_β⟩ for the coroots of α_{j1}^{k1} and α_{j2}^{k2}.
    pub fn coroot_pairing(&self, a: (usize, usize), b: (usize, usize)) -> GQ {
        let ha = self.chevalley.coroot(a.0, a.1);
        let hb = self.chevalley.coroot(b.0, b.1);
        LieAlgebra::pair(&self.form, &ha, &hb)
    }

    /// Entries violating conj(B_j^k) = B_{2m−k−j}^k.
    pub fn conjugation_violations(&self) -> Vec<(usize, usize)> {
        self.table
            .iter()
            .filter(|(&(j, k), b)| b.conj() != self.table[&(2 * self.m - k - j, k)])
            .map(|(key, _)| *key)
            .collect()
    }

    /// `j` with B_{γ_j} not real.
    pub fn nonreal_gammas(&self) -> Vec<usize> {
        (1..self.m).filter(|&j| !self.gamma(j).is_real()).collect()
    }

    /// Composable pairs `(α, β)` with α = α_j^k, β = α_{j+k}^l, so α+β = α_j^{k+l}.
    pub fn composable_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        let n = 2 * self.m - 1;
        let mut out = Vec::new();
        for (j, k) in self.chevalley.positive_runs() {
            for l in 1..n {
                if j + k + l <= n {
                    out.push(((j, k), (j + k, l)));
                }
            }
        }
        out
    }

    /// Pairs violating B_{α+β} = s·B_α B_β ⟨H_α, H_β⟩. The identity holds with
    /// `s = −1`; `s = 1` is the form with the opposite sign.
    pub fn killingsum_violations(&self, s: i64) -> Vec<((usize, usize), (usize, usize))> {
        let sign = GQ::from_int(s);
        self.composable_pairs()
            .into_iter()
            .filter(|&(a, b)| {
                let sum = (a.0, a.1 + b.1);
                let rhs = &(&sign * self.get(a.0, a.1)) * &(self.get(b.0, b.1) * &self.coroot_pairing(a, b));
                *self.get(sum.0, sum.1) != rhs
            })
            .collect()
    }

    pub fn all_invariants_hold(&self) -> bool {
        self.conjugation_violations().is_empty()
            && self.nonreal_gammas().is_empty()
            && self.killingsum_violations(-1).is_empty()
    }
}

/// Signature of the Killing form on the σ-fixed real algebra.
pub fn fixed_algebra_signature(rf: &RealForms) -> Result<Signature> {
    let basis = rf.sigma.fixed_real_basis()?;
    killing_signature(&rf.chevalley.algebra, &basis)
}
