//! Invariant complex structures as subalgebras `q ⊂ g` with `g = q ⊕ σq`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::numeric::{solve_linear, CoordinateSystem, ExactMatrix, Subspace, Vector, GQ};
use crate::real_forms::{Involution, RealForms};

/// An n-dimensional complex subalgebra `q` with `g = q ⊕ σ(q)`.
#[derive(Clone, Debug)]
pub struct ComplexStructure {
    algebra: Arc<LieAlgebra>,
    sigma: Involution,
    basis: Vec<Vector>,
    labels: Vec<String>,
    cartan: Option<Vec<Vector>>,
}

/// Why a subspace failed a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `[b_i, b_j] ∉ S` for echelon basis vectors `b_i`, `b_j`.
    Bracket { i: usize, j: usize, value: Vector },
    /// Nonzero vector of `S ∩ σ(S)`.
    Intersection(Vector),
    /// `dim S + dim σS` differs from `dim g`.
    Dimension { sum: usize, ambient: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementReport {
    pub closed: bool,
    pub complement: bool,
    pub witness: Option<Witness>,
}

/// Checks `[S,S] ⊆ S` and `S ⊕ σS = g` for the span of `vectors`.
pub fn subalgebra_complement_check(
    algebra: &LieAlgebra,
    sigma: &Involution,
    vectors: &[Vector],
) -> ComplementReport {
    let d = algebra.dim();
    let s = Subspace::span(d, vectors);
    let b = s.basis();
    let mut witness = None;
    let mut closed = true;
    'outer: for i in 0..b.len() {
        for j in (i + 1)..b.len() {
            let v = algebra.bracket(&b[i], &b[j]);
            if !s.contains(&v) {
                closed = false;
                witness = Some(Witness::Bracket { i, j, value: v });
                break 'outer;
            }
        }
    }
    let sig: Vec<Vector> = b.iter().map(|v| sigma.apply(v)).collect();
    let ss = Subspace::span(d, &sig);
    let inter = s.intersection(&ss);
    let complement = inter.dimension() == 0 && s.dimension() + ss.dimension() == d;
    if witness.is_none() && !complement {
        witness = Some(if let Some(v) = inter.basis().first() {
            Witness::Intersection(v.clone())
        } else {
            Witness::Dimension { sum: s.dimension() + ss.dimension(), ambient: d }
        });
    }
    ComplementReport { closed, complement, witness }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub ad_stable: bool,
    pub splits: bool,
    /// `(h_index, q_index, [h, q])` for every bracket leaving `q`.
    pub failures: Vec<(usize, usize, Vector)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonRegularityCertificate {
    pub normalizer_in_cartan: bool,
    pub ad_stable: bool,
    pub certified: bool,
}

/// Abelian and self-normalizing; returns the reason otherwise.
pub fn cartan_defect(algebra: &LieAlgebra, h: &[Vector]) -> Option<String> {
    let d = algebra.dim();
    let hs = Subspace::span(d, h);
    let b = hs.basis();
    for i in 0..b.len() {
        for j in (i + 1)..b.len() {
            if !algebra.bracket(&b[i], &b[j]).is_zero() {
                return Some("not abelian".into());
            }
        }
    }
    // normalizer: x with [x, h_i] ∈ h for all i
    let mut rows = Vec::new();
    for hi in b {
        let cols: Vec<Vector> = (0..d).map(|k| hs.reduce(&algebra.bracket(&algebra.basis(k), hi))).collect();
        for r in 0..d {
            rows.push(cols.iter().map(|c| c.get(r)).collect::<Vec<_>>());
        }
    }
    if rows.is_empty() {
        return Some("empty".into());
    }
    let m = ExactMatrix::from_rows(rows).expect("rectangular");
    let normalizer = m.kernel().len();
    (normalizer != hs.dimension()).then(|| format!("normalizer has dimension {normalizer}, expected {}", hs.dimension()))
}

impl ComplexStructure {
    /// Validates closure and the complement condition.
    pub fn new(
        algebra: Arc<LieAlgebra>,
        sigma: Involution,
        basis: Vec<Vector>,
        labels: Vec<String>,
        cartan: Option<Vec<Vector>>,
    ) -> Result<Self> {
        if labels.len() != basis.len() {
            return Err(Error::DimensionMismatch { expected: basis.len(), found: labels.len() });
        }
        let rep = subalgebra_complement_check(&algebra, &sigma, &basis);
        if !rep.closed || !rep.complement || 2 * basis.len() != algebra.dim() {
            return Err(Error::ConstructionFailure(format!("not a complex structure: {:?}", rep.witness)));
        }
        Ok(ComplexStructure { algebra, sigma, basis, labels, cartan })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn sigma(&self) -> &Involution {
        &self.sigma
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cartan(&self) -> Option<&[Vector]> {
        self.cartan.as_deref()
    }

    /// Complex dimension of `q`.
    pub fn n(&self) -> usize {
        self.basis.len()
    }

    pub fn q_subspace(&self) -> Subspace {
        Subspace::span(self.algebra.dim(), &self.basis)
    }

    pub fn sigma_basis(&self) -> Vec<Vector> {
        self.basis.iter().map(|v| self.sigma.apply(v)).collect()
    }

    /// `[q₁..qₙ, σq₁..σqₙ]`.
    pub fn adapted_basis(&self) -> Vec<Vector> {
        let mut out = self.basis.clone();
        out.extend(self.sigma_basis());
        out
    }

    pub fn coordinates(&self) -> CoordinateSystem {
        CoordinateSystem::new(self.adapted_basis()).expect("q ⊕ σq spans g")
    }

    /// Same structure presented by another basis of `q`.
    pub fn with_basis(&self, basis: Vec<Vector>, labels: Vec<String>) -> Result<Self> {
        if basis.len() != self.n() {
            return Err(Error::NotAFrame(format!("{} vectors for dim q = {}", basis.len(), self.n())));
        }
        let q = self.q_subspace();
        if basis.iter().any(|v| !q.contains(v)) || Subspace::span(self.algebra.dim(), &basis).dimension() != self.n() {
            return Err(Error::NotAFrame("vectors do not form a basis of q".into()));
        }
        Ok(ComplexStructure { basis, labels, ..self.clone() })
    }

    pub fn check(&self) -> ComplementReport {
        subalgebra_complement_check(&self.algebra, &self.sigma, &self.basis)
    }

    /// ad-stability of `q` under `h` and the splitting `h = (h∩q) + σ(h∩q)`.
    pub fn h_regularity_check(&self, h: &[Vector]) -> Result<RegularityReport> {
        if let Some(why) = cartan_defect(&self.algebra, h) {
            return Err(Error::NotCartan(why));
        }
        let d = self.algebra.dim();
        let q = self.q_subspace();
        let mut failures = Vec::new();
        for (a, hv) in h.iter().enumerate() {
            for (b, qv) in self.basis.iter().enumerate() {
                let v = self.algebra.bracket(hv, qv);
                if !q.contains(&v) {
                    failures.push((a, b, v));
                }
            }
        }
        let hs = Subspace::span(d, h);
        let hq = hs.intersection(&q);
        let shq: Vec<Vector> = hq.basis().iter().map(|v| self.sigma.apply(v)).collect();
        let splits = hq.sum(&Subspace::span(d, &shq)) == hs;
        Ok(RegularityReport { ad_stable: failures.is_empty(), splits, failures })
    }

    /// `{W ∈ q : [σW, q] ⊆ q}`.
    pub fn sigma_normalizer(&self) -> Subspace {
        let n = self.n();
        let d = self.algebra.dim();
        let coords = self.coordinates();
        let sq = self.sigma_basis();
        // unknowns d_i = conj(c_i); rows: (j, l) σq-coordinate l of Σ d_i [σq_i, q_j]
        let mut rows = vec![vec![GQ::zero(); n]; n * n];
        for (i, si) in sq.iter().enumerate() {
            for (j, qj) in self.basis.iter().enumerate() {
                let c = coords.coords(&self.algebra.bracket(si, qj));
                for (idx, x) in c.iter().filter(|(idx, _)| *idx >= n) {
                    rows[j * n + (idx - n)][i] = x.clone();
                }
            }
        }
        let m = ExactMatrix::from_rows(rows).expect("rectangular");
        let ws: Vec<Vector> = m
            .kernel()
            .iter()
            .map(|dvec| {
                let mut w = Vector::zero(d);
                for (i, di) in dvec.iter() {
                    w.axpy(&di.conj(), &self.basis[i]);
                }
                w
            })
            .collect();
        Subspace::span(d, &ws)
    }

    /// True iff the σ-normalizer lies in the stored Cartan subalgebra and
    /// `q` is not ad-stable under it.
    pub fn nonregularity_certificate(&self) -> Result<NonRegularityCertificate> {
        let h = self.cartan.as_ref().ok_or_else(|| Error::NotCartan("no Cartan subalgebra attached".into()))?;
        let reg = self.h_regularity_check(h)?;
        let hs = Subspace::span(self.algebra.dim(), h);
        let normalizer_in_cartan = hs.contains_subspace(&self.sigma_normalizer());
        Ok(NonRegularityCertificate {
            normalizer_in_cartan,
            ad_stable: reg.ad_stable,
            certified: normalizer_in_cartan && !reg.ad_stable,
        })
    }

    /// J with +i on q and −i on σq.
    pub fn induced_j(&self) -> JOperator {
        let n = self.n();
        let d = self.algebra.dim();
        let p = ExactMatrix::from_row_vectors(d, &self.adapted_basis()).transpose();
        let pinv = p.inverse().expect("adapted basis");
        let mut diag = ExactMatrix::zeros(d, d);
        for k in 0..d {
            diag.set(k, k, if k < n { GQ::i() } else { -GQ::i() });
        }
        let matrix = p.mul(&diag).and_then(|m| m.mul(&pinv)).expect("square");
        JOperator { algebra: self.algebra.clone(), sigma: self.sigma.clone(), matrix }
    }

    /// Structure on the subalgebra spanned by `sub ∪ σ(sub)` with `q' = span(sub)`.
    pub fn restrict(&self, sub: &[Vector], labels: Vec<String>) -> Result<ComplexStructure> {
        let k = sub.len();
        let mut basis = sub.to_vec();
        basis.extend(sub.iter().map(|v| self.sigma.apply(v)));
        let mut all_labels = labels.clone();
        all_labels.extend(labels.iter().map(|l| format!("σ({l})")));
        let alg = Arc::new(self.algebra.subalgebra(&basis, all_labels)?);
        let sigma = Involution::swap_halves(alg.clone());
        let q = (0..k).map(|i| alg.basis(i)).collect();
        ComplexStructure::new(alg, sigma, q, labels, None)
    }

    /// JSON export: basis matrix rows with labels, plus the algebra.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .basis
            .iter()
            .zip(&self.labels)
            .map(|(v, l)| {
                let entries: Vec<serde_json::Value> = v
                    .iter()
                    .map(|(k, c)| serde_json::json!({"index": k, "re": c.re_string(), "im": c.im_string()}))
                    .collect();
                serde_json::json!({"label": l, "entries": entries})
            })
            .collect();
        serde_json::json!({"algebra": self.algebra.to_json(), "q_basis": rows})
    }
}

/// Complexified J acting on column coordinates of `g`.
#[derive(Clone, Debug)]
pub struct JOperator {
    algebra: Arc<LieAlgebra>,
    sigma: Involution,
    pub matrix: ExactMatrix,
}

impl JOperator {
    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.apply(v).expect("dimension")
    }

    pub fn squares_to_minus_identity(&self) -> bool {
        let d = self.algebra.dim();
        (0..d).all(|k| {
            let e = self.algebra.basis(k);
            self.apply(&self.apply(&e)) == e.neg()
        })
    }

    /// `σJ = Jσ`, i.e. J preserves the real form.
    pub fn is_real(&self) -> bool {
        (0..self.algebra.dim()).all(|k| {
            let e = self.algebra.basis(k);
            self.sigma.apply(&self.apply(&e)) == self.apply(&self.sigma.apply(&e))
        })
    }

    /// First basis pair where `N(X,Y) = [JX,JY] − J[JX,Y] − J[X,JY] − [X,Y]` is nonzero.
    pub fn nijenhuis_defect(&self) -> Option<(usize, usize)> {
        let g = &self.algebra;
        let d = g.dim();
        let js: Vec<Vector> = (0..d).map(|k| self.apply(&g.basis(k))).collect();
        for i in 0..d {
            for j in (i + 1)..d {
                let mut t = g.bracket(&js[i], &js[j]);
                t.axpy(&GQ::from_int(-1), &self.apply(&g.bracket(&js[i], &g.basis(j))));
                t.axpy(&GQ::from_int(-1), &self.apply(&g.bracket(&g.basis(i), &js[j])));
                t.axpy(&GQ::from_int(-1), &g.bracket_basis(i, j));
                if !t.is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn plus_i_eigenspace(&self) -> Subspace {
        let d = self.algebra.dim();
        let mut m = self.matrix.clone();
        for k in 0..d {
            let x = m.get(k, k) - &GQ::i();
            m.set(k, k, x);
        }
        Subspace::span(d, &m.kernel())
    }

    /// Real matrix of J in an ℝ-basis of the fixed real algebra.
    pub fn real_matrix(&self, real_basis: &[Vector]) -> Result<ExactMatrix> {
        let d = self.algebra.dim();
        let r = ExactMatrix::from_row_vectors(d, real_basis).transpose();
        let jr: Vec<Vector> = real_basis.iter().map(|v| self.apply(v)).collect();
        let rhs = ExactMatrix::from_row_vectors(d, &jr).transpose();
        let sol = solve_linear(&r, &rhs)?;
        if !sol.kernel.is_empty() {
            return Err(Error::DimensionMismatch { expected: d, found: d - sol.kernel.len() });
        }
        Ok(sol.particular)
    }
}

// ---------------------------------------------------------------------------
// sl(2m−1): the non-regular structure and the Morimoto structure

/// H̃₁..H̃_{m−1} for sl(2m−1).
pub fn htilde(rf: &RealForms) -> Vec<Vector> {
    let c = &rf.chevalley;
    let n = c.n;
    let m = (n + 1) / 2;
    let two = GQ::from_int(2);
    let mut out = Vec::new();
    for k in 1..m {
        let v = if k + 1 == m {
            c.h_vec(m - 1).add(&c.h_vec(m).scale(&two))
        } else if k + 2 == m {
            c.h_vec(m - 2).scale(&two).add(&c.h_vec(m - 1))
        } else {
            c.h_vec(k).sub(&c.h_vec(n - k).scale(&two))
        };
        out.push(v);
    }
    out
}

/// e₀ = e_{α_{m−1}} + σ(e_{α_m}).
pub fn e0(rf: &RealForms) -> Vector {
    let c = &rf.chevalley;
    let m = (c.n + 1) / 2;
    c.pos_vec(m - 1, 1).add(&rf.sigma.apply(&c.pos_vec(m, 1)))
}

/// Basis H̃ ∪ {e_α : α ∈ Σ⁺ ∖ {α_{m−1}}} ∪ {e₀} and its labels.
pub fn nonregular_basis(rf: &RealForms) -> (Vec<Vector>, Vec<String>) {
    let c = &rf.chevalley;
    let m = (c.n + 1) / 2;
    let mut vs = htilde(rf);
    let mut labels: Vec<String> = (1..m).map(|k| format!("H~{k}")).collect();
    for (j, k) in c.positive_runs() {
        if (j, k) == (m - 1, 1) {
            continue;
        }
        vs.push(c.pos_vec(j, k));
        labels.push(c.algebra.label(c.pos(j, k)).to_string());
    }
    vs.push(e0(rf));
    labels.push("e0".into());
    (vs, labels)
}

pub fn nonregular_q(rf: &RealForms) -> Result<ComplexStructure> {
    let (vs, labels) = nonregular_basis(rf);
    ComplexStructure::new(
        rf.chevalley.algebra.clone(),
        rf.sigma.clone(),
        vs,
        labels,
        Some(rf.chevalley.cartan_basis()),
    )
}

/// The structure q ⊂ sl(2m−1,ℂ) whose real form is sl(2m−1,ℝ).
pub fn build_nonregular_q(m: usize) -> Result<(RealForms, ComplexStructure)> {
    let rf = RealForms::build(m)?;
    let q = nonregular_q(&rf)?;
    Ok((rf, q))
}

/// H̃ together with all positive root vectors.
pub fn regular_morimoto(rf: &RealForms) -> Result<ComplexStructure> {
    let c = &rf.chevalley;
    let m = (c.n + 1) / 2;
    let mut vs = htilde(rf);
    let mut labels: Vec<String> = (1..m).map(|k| format!("H~{k}")).collect();
    for (j, k) in c.positive_runs() {
        vs.push(c.pos_vec(j, k));
        labels.push(c.algebra.label(c.pos(j, k)).to_string());
    }
    ComplexStructure::new(c.algebra.clone(), rf.sigma.clone(), vs, labels, Some(c.cartan_basis()))
}

pub fn build_regular_morimoto(m: usize) -> Result<(RealForms, ComplexStructure)> {
    let rf = RealForms::build(m)?;
    let q = regular_morimoto(&rf)?;
    Ok((rf, q))
}

// ---------------------------------------------------------------------------
// sl(3,ℝ) family I_λ

/// Basis order u, x, y, z, ū, x̄, ȳ, z̄.
pub fn build_sl3_family(lambda: &GQ) -> Result<ComplexStructure> {
    let one = GQ::one();
    let nl = lambda.norm_sqr();
    if nl >= num_traits::One::one() {
        return Err(Error::InvalidParameter(format!("|λ|² = {nl} must be < 1")));
    }
    let den = GQ::real(num_traits::One::one()) - GQ::real(nl);
    let inv = den.inv()?;
    let (u, x, y, z, ub, xb, yb, zb) = (0, 1, 2, 3, 4, 5, 6, 7);
    let e = |k: usize| Vector::basis(8, k);
    let lb = lambda.conj();
    let two = GQ::from_int(2);
    let listed: Vec<(usize, usize, Vector)> = vec![
        (u, x, e(x).scale(&(&two - lambda))),
        (u, y, e(y).scale(&(&(&two * lambda) - &one))),
        (u, z, e(z).scale(&(lambda + &one))),
        (x, y, e(z)),
        (u, xb, e(xb).scale(&(&one - &(&two * lambda)))),
        (u, yb, e(yb).scale(&(lambda - &two))),
        (u, zb, e(zb).scale(&(-(lambda + &one)))),
        (x, yb, e(u).add(&e(ub).scale(lambda)).scale(&inv)),
        (x, zb, e(xb).neg()),
        (y, zb, e(yb)),
        (z, zb, e(u).scale(&(&one - &lb)).sub(&e(ub).scale(&(&one - lambda))).scale(&inv)),
    ];
    let labels: Vec<String> =
        ["u", "x", "y", "z", "ū", "x̄", "ȳ", "z̄"].iter().map(|s| s.to_string()).collect();
    // conjugate relations [σa, σb] = σ[a, b]
    let bar = |k: usize| (k + 4) % 8;
    let conj_vec = |v: &Vector| Vector::from_pairs(8, v.iter().map(|(k, c)| (bar(k), c.conj())));
    let mut all = listed.clone();
    for (a, b, v) in &listed {
        all.push((bar(*a), bar(*b), conj_vec(v)));
    }
    let alg = Arc::new(LieAlgebra::from_brackets(labels.clone(), all)?);
    let sigma = Involution::swap_halves(alg.clone());
    if !sigma.is_automorphism() {
        return Err(Error::ConstructionFailure("conjugation is not an automorphism".into()));
    }
    let q = (0..4).map(|k| alg.basis(k)).collect();
    ComplexStructure::new(alg.clone(), sigma, q, labels[..4].to_vec(), Some(vec![e(u), e(ub)]))
}

// ---------------------------------------------------------------------------
// sl(2,ℝ) × ℝ^{2n−3}

/// Basis e, f, H, Z, a₁, b₁, …, a_{n−2}, b_{n−2}; the sl(2) factor is the
/// su(1,1) form with σ(e) = f, σ(H) = −H; q = span(e, H+Z, a_k + i b_k).
pub fn sl2_product_structure(n: usize) -> Result<ComplexStructure> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    let d = 2 * n;
    let (e, f, h, z) = (0, 1, 2, 3);
    let mut labels: Vec<String> = ["e", "f", "H", "Z"].iter().map(|s| s.to_string()).collect();
    for k in 1..=(n - 2) {
        labels.push(format!("a{k}"));
        labels.push(format!("b{k}"));
    }
    let b = |k: usize| Vector::basis(d, k);
    let two = GQ::from_int(2);
    let alg = Arc::new(LieAlgebra::from_brackets(
        labels,
        vec![(h, e, b(e).scale(&two)), (h, f, b(f).scale(&-two.clone())), (e, f, b(h))],
    )?);
    let mut images = vec![b(f), b(e), b(h).neg(), b(z)];
    for k in 4..d {
        images.push(b(k));
    }
    let sigma = Involution::new(alg.clone(), images, true)?;
    let mut q = vec![b(e), b(h).add(&b(z))];
    let mut qlabels = vec!["e".to_string(), "H+Z".to_string()];
    for k in 0..(n - 2) {
        q.push(b(4 + 2 * k).add(&b(5 + 2 * k).scale(&GQ::i())));
        qlabels.push(format!("a{0}+ib{0}", k + 1));
    }
    let cartan = std::iter::once(b(h)).chain((3..d).map(b)).collect();
    ComplexStructure::new(alg, sigma, q, qlabels, Some(cartan))
}

/// Abelian ℂ^{2n} with σ swapping halves and q the first half.
pub fn abelian_structure(n: usize) -> ComplexStructure {
    let mut labels: Vec<String> = (1..=n).map(|k| format!("w{k}")).collect();
    labels.extend((1..=n).map(|k| format!("w̄{k}")));
    let alg = Arc::new(LieAlgebra::abelian(labels.clone()));
    let sigma = Involution::swap_halves(alg.clone());
    let q = (0..n).map(|k| alg.basis(k)).collect();
    let cartan = (0..2 * n).map(|k| alg.basis(k)).collect();
    ComplexStructure::new(alg, sigma, q, labels[..n].to_vec(), Some(cartan)).expect("abelian structure")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_basis_m2() {
        let (rf, q) = build_nonregular_q(2).unwrap();
        assert_eq!(q.n(), 4);
        let c = &rf.chevalley;
        assert_eq!(q.basis()[0], c.h_vec(1).add(&c.h_vec(2).scale(&GQ::from_int(2))));
        assert_eq!(q.labels(), &["H~1", "e[2,1]", "e[1,2]", "e0"]);
    }

    #[test]
    fn nonregular_witness_m2() {
        let (rf, q) = build_nonregular_q(2).unwrap();
        let c = &rf.chevalley;
        let rep = q.h_regularity_check(&c.cartan_basis()).unwrap();
        assert!(!rep.ad_stable);
        let m = 2;
        let expected = c.pos_vec(m - 1, 1).sub(&rf.sigma.apply(&c.pos_vec(m, 1)));
        let line = Subspace::span(8, &[expected]);
        assert!(rep.failures.iter().any(|(a, _, v)| *a == m - 2 && line.contains(v)));
    }

    #[test]
    fn morimoto_regular() {
        let (rf, q) = build_regular_morimoto(2).unwrap();
        let rep = q.h_regularity_check(&rf.chevalley.cartan_basis()).unwrap();
        assert!(rep.ad_stable && rep.splits);
        assert!(!q.nonregularity_certificate().unwrap().certified);
    }

    #[test]
    fn not_cartan_rejected() {
        let (rf, q) = build_nonregular_q(2).unwrap();
        let h = vec![rf.chevalley.h_vec(1)];
        assert!(matches!(q.h_regularity_check(&h), Err(Error::NotCartan(_))));
    }

    #[test]
    fn sl3_family_brackets() {
        let q = build_sl3_family(&GQ::zero()).unwrap();
        let g = q.algebra();
        let inv = GQ::one();
        assert_eq!(g.bracket_basis(1, 6), Vector::basis(8, 0).scale(&inv));
        assert_eq!(g.bracket_basis(3, 7), Vector::basis(8, 0).sub(&Vector::basis(8, 4)));
        let q = build_sl3_family(&GQ::from_frac(1, 2)).unwrap();
        assert_eq!(q.algebra().bracket_basis(0, 1), Vector::basis(8, 1).scale(&GQ::from_frac(3, 2)));
        assert!(matches!(build_sl3_family(&GQ::from_int(2)), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn induced_j_m2() {
        let (_, q) = build_nonregular_q(2).unwrap();
        let j = q.induced_j();
        assert!(j.squares_to_minus_identity());
        assert!(j.is_real());
        assert_eq!(j.nijenhuis_defect(), None);
        assert_eq!(j.plus_i_eigenspace(), q.q_subspace());
    }

    #[test]
    fn abelian_normalizer_is_everything() {
        let q = abelian_structure(2);
        assert_eq!(q.sigma_normalizer().dimension(), 2);
    }

    #[test]
    fn sl2_product_builds() {
        for n in 2..=3 {
            let q = sl2_product_structure(n).unwrap();
            let rep = q.h_regularity_check(q.cartan().unwrap()).unwrap();
            assert!(rep.ad_stable && rep.splits);
        }
    }
}
