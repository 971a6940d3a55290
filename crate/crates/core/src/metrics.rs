//! Hermitian metrics on Lie algebras with a complex structure: the special
//! metric predicates, balanced frames, and obstructions by exact positive forms.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex_structures::{htilde, nonregular_q, ComplexStructure};
use crate::error::{Error, Result};
use crate::exterior::{Coframe, ExtForm};
use crate::lie::{BasisKind, Chevalley, LieAlgebra, Root};
use crate::numeric::{rat, ExactMatrix, Rational, Subspace, Vector, GQ};
use crate::positivity::{diagonal_strong_positivity, form_from_hermitian, herm_rep};
use crate::real_forms::{RealForms, SigmaConstants};

/// Positive definite Hermitian matrix in a (1,0)-coframe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermMetric {
    h: ExactMatrix,
}

impl HermMetric {
    pub fn new(h: ExactMatrix) -> Result<Self> {
        if !h.is_hermitian() || !h.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(HermMetric { h })
    }

    pub fn identity(n: usize) -> Self {
        HermMetric { h: ExactMatrix::identity(n) }
    }

    pub fn diagonal(d: &[Rational]) -> Result<Self> {
        let mut h = ExactMatrix::zeros(d.len(), d.len());
        for (k, x) in d.iter().enumerate() {
            h.set(k, k, GQ::real(x.clone()));
        }
        HermMetric::new(h)
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.h
    }

    pub fn n(&self) -> usize {
        self.h.rows()
    }

    /// `ω = i Σ h_{jk} η^j ∧ η̄^k`.
    pub fn fundamental_form(&self) -> ExtForm {
        form_from_hermitian(&self.h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricReport {
    pub kahler: bool,
    pub pluriclosed: bool,
    pub balanced: bool,
    pub gauduchon: bool,
    pub astheno: bool,
    /// Nonzero form for every failed predicate.
    pub residuals: BTreeMap<String, ExtForm>,
}

impl MetricReport {
    pub fn implications_hold(&self, n: usize) -> bool {
        let imp = |a: bool, b: bool| !a || b;
        imp(self.kahler, self.pluriclosed)
            && imp(self.kahler, self.balanced)
            && imp(self.balanced, self.gauduchon)
            && (n != 2 || self.pluriclosed == self.gauduchon)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let res: serde_json::Map<String, serde_json::Value> =
            self.residuals.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        serde_json::json!({
            "kahler": self.kahler,
            "pluriclosed": self.pluriclosed,
            "balanced": self.balanced,
            "gauduchon": self.gauduchon,
            "astheno": self.astheno,
            "residuals": res,
        })
    }
}

pub fn is_p_kahler_closed(cf: &Coframe, omega: &ExtForm, p: usize) -> bool {
    cf.d(&omega.power(p)).is_zero()
}

pub fn is_p_pluriclosed(cf: &Coframe, omega: &ExtForm, p: usize) -> bool {
    cf.del_delbar(&omega.power(p)).is_zero()
}

pub fn metric_report(cf: &Coframe, metric: &HermMetric) -> Result<MetricReport> {
    let n = cf.n();
    if metric.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: metric.n() });
    }
    let omega = metric.fundamental_form();
    let mut residuals = BTreeMap::new();
    let mut check = |name: &str, f: ExtForm| {
        let ok = f.is_zero();
        if !ok {
            residuals.insert(name.to_string(), f);
        }
        ok
    };
    let w1 = if n >= 1 { omega.power(n - 1) } else { ExtForm::one(n) };
    let kahler = check("kahler", cf.d(&omega));
    let pluriclosed = check("pluriclosed", cf.del_delbar(&omega));
    let balanced = check("balanced", cf.d(&w1));
    let gauduchon = check("gauduchon", cf.del_delbar(&w1));
    let astheno = n < 2 || check("astheno", cf.del_delbar(&omega.power(n - 2)));
    let report = MetricReport { kahler, pluriclosed, balanced, gauduchon, astheno, residuals };
    debug_assert!(report.implications_hold(n));
    Ok(report)
}

/// `Σ_j [v_j, σ(v_j)]`.
pub fn balanced_frame_criterion(cs: &ComplexStructure, frame: &[Vector]) -> Result<Vector> {
    check_frame(cs, frame)?;
    let g = cs.algebra();
    let mut r = Vector::zero(g.dim());
    for v in frame {
        r = r.add(&g.bracket(v, &cs.sigma().apply(v)));
    }
    Ok(r)
}

fn check_frame(cs: &ComplexStructure, frame: &[Vector]) -> Result<()> {
    let q = cs.q_subspace();
    if frame.len() != cs.n()
        || frame.iter().any(|v| !q.contains(v))
        || Subspace::span(cs.algebra().dim(), frame).dimension() != cs.n()
    {
        return Err(Error::NotAFrame(format!("{} vectors do not form a basis of q", frame.len())));
    }
    Ok(())
}

/// Coframe dual to `frame ∪ σ(frame)`; the identity matrix is the metric
/// with `frame` unitary.
pub fn frame_coframe(cs: &ComplexStructure, frame: &[Vector]) -> Result<Coframe> {
    check_frame(cs, frame)?;
    let labels = (0..frame.len()).map(|k| format!("v{k}")).collect();
    Ok(Coframe::from_structure(&cs.with_basis(frame.to_vec(), labels)?))
}

/// One frame vector `base + coefficient · direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameVector {
    pub label: String,
    pub base: Vector,
    pub coefficient: GQ,
    pub direction: Option<Vector>,
}

impl FrameVector {
    fn plain(label: String, v: Vector) -> Self {
        FrameVector { label, base: v, coefficient: GQ::zero(), direction: None }
    }

    pub fn vector(&self) -> Vector {
        match &self.direction {
            Some(d) => {
                let mut v = self.base.clone();
                v.axpy(&self.coefficient, d);
                v
            }
            None => self.base.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorrectionSigns {
    /// Coefficients that make the residual vanish with the constructed σ.
    Derived,
    /// The signs as printed with the frame definition.
    Literal,
}

#[derive(Clone, Debug)]
pub struct BalancedFrame {
    pub structure: ComplexStructure,
    pub vectors: Vec<FrameVector>,
}

impl BalancedFrame {
    pub fn frame(&self) -> Vec<Vector> {
        self.vectors.iter().map(FrameVector::vector).collect()
    }

    pub fn corrected(&self) -> Vec<usize> {
        (0..self.vectors.len()).filter(|&k| self.vectors[k].direction.is_some()).collect()
    }

    pub fn residual(&self) -> Result<Vector> {
        balanced_frame_criterion(&self.structure, &self.frame())
    }

    /// Same frame with one correction coefficient shifted by `delta`.
    pub fn perturbed(&self, k: usize, delta: &GQ) -> BalancedFrame {
        let mut out = self.clone();
        out.vectors[k].coefficient += delta.clone();
        out
    }
}

/// `{H̃_k} ∪ {f_α}` on sl(2m−1,ℝ) with the non-regular structure.
pub fn balanced_basis_sl2m1(m: usize) -> Result<BalancedFrame> {
    let rf = RealForms::build(m)?;
    balanced_basis_with(&rf, CorrectionSigns::Derived)
}

pub fn balanced_basis_with(rf: &RealForms, signs: CorrectionSigns) -> Result<BalancedFrame> {
    let c = &rf.chevalley;
    let m = (c.n + 1) / 2;
    let q = nonregular_q(rf)?;
    let sc = SigmaConstants::compute(rf)?;
    let literal = signs == CorrectionSigns::Literal;
    let mut vectors: Vec<FrameVector> =
        htilde(rf).into_iter().enumerate().map(|(k, v)| FrameVector::plain(format!("H~{}", k + 1), v)).collect();
    let ht = htilde(rf)[m - 2].clone();
    for (j, k) in c.positive_runs() {
        let label = c.algebra.label(c.pos(j, k)).to_string();
        let fv = if (j, k) == (m - 1, 1) {
            FrameVector {
                label: "f[e0]".into(),
                base: crate::complex_structures::e0(rf),
                coefficient: -sc.simple(m - 1).clone(),
                direction: Some(c.pos_vec(m, 1)),
            }
        } else if (j, k) == (m - 1, 2) {
            let third = GQ::real(rat(1, 3));
            FrameVector {
                label: format!("f{label}"),
                base: c.pos_vec(j, k),
                coefficient: if literal { third } else { -third },
                direction: Some(ht.clone()),
            }
        } else if j + 1 < m && k == m - j {
            let coef = sc.get(j, k) * &sc.coroot_pairing((j, k), (m, k));
            FrameVector {
                label: format!("f{label}"),
                base: c.pos_vec(j, k),
                coefficient: if literal { -coef } else { coef },
                direction: Some(c.pos_vec(m, k)),
            }
        } else {
            FrameVector::plain(label, c.pos_vec(j, k))
        };
        vectors.push(fv);
    }
    Ok(BalancedFrame { structure: q, vectors })
}

/// Exact positive form obstructing a family of structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionRecord {
    pub generator: ExtForm,
    pub form: ExtForm,
    pub kind: ObstructionKind,
    pub classification: String,
    pub rank: usize,
    pub obstructed: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ObstructionKind {
    /// `dβ` semi-definite: no `p`-Kähler structure for the listed `p`.
    PKahler,
    /// `∂∂̄γ` strongly positive up to a unit: no `p`-pluriclosed structure.
    PPluriclosed,
}

impl ObstructionRecord {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "generator": self.generator.to_json(),
            "form": self.form.to_json(),
            "kind": self.kind,
            "classification": self.classification,
            "rank": self.rank,
            "obstructed_p": self.obstructed,
        })
    }
}

/// `{n−k, …, n−1} ∩ [1, n−1]`.
pub fn obstructed_set(n: usize, k: usize) -> Vec<usize> {
    (n.saturating_sub(k).max(1)..n).collect()
}

/// Record for `dβ` if it is a semi-definite (1,1)-form of positive rank.
pub fn exact_11_obstruction(cf: &Coframe, beta: &ExtForm) -> Option<ObstructionRecord> {
    let d = cf.d(beta);
    let rep = herm_rep(&d).ok()?;
    if rep.rank == 0 || !rep.is_semi_definite() {
        return None;
    }
    let classification = if rep.is_semi_positive() { "semi-positive" } else { "semi-negative" };
    Some(ObstructionRecord {
        generator: beta.clone(),
        form: d,
        kind: ObstructionKind::PKahler,
        classification: classification.into(),
        rank: rep.rank,
        obstructed: obstructed_set(cf.n(), rep.rank),
    })
}

/// Record for `∂∂̄γ` if it is a unit multiple of a positive combination of
/// decomposable diagonal `(k,k)`-forms.
pub fn ddbar_obstruction(cf: &Coframe, gamma: &ExtForm) -> Option<ObstructionRecord> {
    let f = cf.del_delbar(gamma);
    let (k, _) = f.bidegree()?;
    let pos = diagonal_strong_positivity(&f)?;
    let n = cf.n();
    Some(ObstructionRecord {
        generator: gamma.clone(),
        form: f,
        kind: ObstructionKind::PPluriclosed,
        classification: format!("strongly positive up to the unit {}", pos.phase),
        rank: pos.terms.len(),
        obstructed: if k < n { vec![n - k] } else { vec![] },
    })
}

/// Integer combinations of `candidates` with coefficients in `[−bound, bound]`
/// (first nonzero coefficient positive), plus `∂∂̄` of each `gammas` entry.
pub fn obstruction_scan(
    cf: &Coframe,
    candidates: &[ExtForm],
    bound: i64,
    gammas: &[ExtForm],
) -> Vec<ObstructionRecord> {
    let mut out = Vec::new();
    let k = candidates.len();
    let width = (2 * bound + 1) as usize;
    let total = width.checked_pow(k as u32).unwrap_or(0);
    for idx in 0..total {
        let mut rest = idx;
        let coeffs: Vec<i64> = (0..k)
            .map(|_| {
                let c = (rest % width) as i64 - bound;
                rest /= width;
                c
            })
            .collect();
        match coeffs.iter().find(|&&c| c != 0) {
            Some(&c) if c > 0 => {}
            _ => continue,
        }
        let mut beta = ExtForm::zero(cf.n());
        for (c, f) in coeffs.iter().zip(candidates) {
            beta = beta.add(&f.scale(&GQ::from_int(*c))).expect("same coframe");
        }
        if let Some(r) = exact_11_obstruction(cf, &beta) {
            out.push(r);
        }
    }
    out.extend(gammas.iter().filter_map(|g| ddbar_obstruction(cf, g)));
    out
}

/// Real 1-form `Σ_a φ(X_a) η^a` on the adapted basis of `cs`.
pub fn one_form(cs: &ComplexStructure, phi: impl Fn(&Vector) -> GQ) -> ExtForm {
    let n = cs.n();
    let mut f = ExtForm::zero(n);
    for (a, x) in cs.adapted_basis().iter().enumerate() {
        f.add_term(1 << a, phi(x));
    }
    f
}

/// Closed Hermitian matrices and, if found, a vector annihilated by all of
/// them (so no positive definite combination exists).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KahlerFeasibility {
    pub closed_hermitian: Vec<ExactMatrix>,
    pub certificate: Option<Vec<GQ>>,
}

impl KahlerFeasibility {
    pub fn infeasible(&self) -> bool {
        self.certificate.is_some()
    }
}

fn hermitian_basis(n: usize) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    for j in 0..n {
        for k in j..n {
            if j == k {
                let mut m = ExactMatrix::zeros(n, n);
                m.set(j, j, GQ::one());
                out.push(m);
            } else {
                let mut a = ExactMatrix::zeros(n, n);
                a.set(j, k, GQ::one());
                a.set(k, j, GQ::one());
                out.push(a);
                let mut b = ExactMatrix::zeros(n, n);
                b.set(j, k, GQ::i());
                b.set(k, j, -GQ::i());
                out.push(b);
            }
        }
    }
    out
}

/// Solves `dω = 0` over real Hermitian parameters.
pub fn kahler_feasibility(cf: &Coframe) -> Result<KahlerFeasibility> {
    let n = cf.n();
    if 2 * n > 8 {
        return Err(Error::InvalidParameter(format!("Kähler feasibility is limited to real dimension 8, got {}", 2 * n)));
    }
    let basis = hermitian_basis(n);
    let images: Vec<ExtForm> = basis.iter().map(|h| cf.d(&form_from_hermitian(h))).collect();
    let mut monos: Vec<u64> = images.iter().flat_map(|f| f.terms().map(|(m, _)| m)).collect();
    monos.sort_unstable();
    monos.dedup();
    let mut rows = Vec::new();
    for &m in &monos {
        rows.push(images.iter().map(|f| GQ::real(f.coefficient(m).re)).collect::<Vec<_>>());
        rows.push(images.iter().map(|f| GQ::real(f.coefficient(m).im)).collect::<Vec<_>>());
    }
    let kernel = if rows.is_empty() {
        (0..basis.len()).map(|k| Vector::basis(basis.len(), k)).collect()
    } else {
        ExactMatrix::from_rows(rows)?.kernel()
    };
    let closed: Vec<ExactMatrix> = kernel
        .iter()
        .map(|v| {
            let mut m = ExactMatrix::zeros(n, n);
            for (k, c) in v.iter() {
                for r in 0..n {
                    for s in 0..n {
                        let x = m.get(r, s) + &(c * basis[k].get(r, s));
                        m.set(r, s, x);
                    }
                }
            }
            m
        })
        .collect();
    let mut candidates: Vec<Vec<GQ>> = Vec::new();
    let unit = |j: usize| (0..n).map(|i| if i == j { GQ::one() } else { GQ::zero() }).collect::<Vec<_>>();
    for j in 0..n {
        candidates.push(unit(j));
    }
    for j in 0..n {
        for k in (j + 1)..n {
            for s in [GQ::one(), GQ::from_int(-1), GQ::i(), -GQ::i()] {
                let mut v = unit(j);
                v[k] = s;
                candidates.push(v);
            }
        }
    }
    let quad = |m: &ExactMatrix, v: &[GQ]| -> GQ {
        let mut t = GQ::zero();
        for r in 0..n {
            for s in 0..n {
                t += &(&v[r].conj() * m.get(r, s)) * &v[s];
            }
        }
        t
    };
    let certificate = candidates.into_iter().find(|v| closed.iter().all(|m| quad(m, v).is_zero()));
    Ok(KahlerFeasibility { closed_hermitian: closed, certificate })
}

// ---------------------------------------------------------------------------
// Compact forms with a regular structure

/// Compact form of sl(3,ℂ) or u(N) for even rank completion; `cartan_q`
/// gives the (1,0) part of the Cartan subalgebra.
pub fn compact_regular(chev: &Chevalley, cartan_q: Vec<Vector>) -> Result<ComplexStructure> {
    let tau = crate::real_forms::compact_conjugation(chev);
    let mut q = cartan_q;
    let mut labels: Vec<String> = (0..q.len()).map(|k| format!("W{}", k + 1)).collect();
    for (j, k) in chev.positive_runs() {
        q.push(chev.pos_vec(j, k));
        labels.push(chev.algebra.label(chev.pos(j, k)).to_string());
    }
    ComplexStructure::new(chev.algebra.clone(), tau, q, labels, Some(chev.cartan_basis()))
}

/// su(3) with `W = H₁ + w H₂`, or u(4) with `W₁ = H₁ + iH₂`, `W₂ = H₃ + iZ`.
pub fn compact_example(n: usize, w: &GQ) -> Result<(Chevalley, ComplexStructure)> {
    match n {
        3 => {
            let c = Chevalley::sl(3)?;
            let q = compact_regular(&c, vec![c.h_vec(1).add(&c.h_vec(2).scale(w))])?;
            Ok((c, q))
        }
        4 => {
            let c = Chevalley::gl(4)?;
            let z = c.algebra.basis(c.center().expect("gl has a center"));
            let w1 = c.h_vec(1).add(&c.h_vec(2).scale(w));
            let w2 = c.h_vec(3).add(&z.scale(&GQ::i()));
            let q = compact_regular(&c, vec![w1, w2])?;
            Ok((c, q))
        }
        _ => Err(Error::InvalidParameter(format!("compact examples exist for N = 3, 4, got {n}"))),
    }
}

/// The real multiple of `X ↦ θ(X_𝔥)` for the highest root θ.
pub fn highest_root_form(chev: &Chevalley, cs: &ComplexStructure) -> ExtForm {
    let rank = chev.rank();
    let theta = Root::alpha(rank, 1, rank);
    let vals: Vec<GQ> = (1..=rank).map(|i| GQ::from_int(chev.root_on_h(&theta, i))).collect();
    let phi = |x: &Vector| -> GQ {
        let mut t = GQ::zero();
        for (k, c) in x.iter() {
            if let BasisKind::Cartan(i) = chev.kind(k) {
                t += c * &vals[i - 1];
            }
        }
        t
    };
    let xi = one_form(cs, phi);
    xi.scale(&GQ::i())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DxiReport {
    pub rank: usize,
    pub expected_rank: usize,
    pub semi_positive: bool,
    pub record: Option<ObstructionRecord>,
}

/// `dξ` on the compact form with its regular structure; `ξ` is normalized
/// to the sign making `dξ` semi-positive when it is semi-definite.
pub fn compact_dxi(n: usize) -> Result<DxiReport> {
    let (chev, cs) = compact_example(n, &GQ::i())?;
    let cf = Coframe::from_structure(&cs);
    let mut xi = highest_root_form(&chev, &cs);
    let mut rep = herm_rep(&cf.d(&xi))?;
    if rep.is_semi_negative() && !rep.is_semi_positive() {
        xi = xi.neg();
        rep = herm_rep(&cf.d(&xi))?;
    }
    let record = exact_11_obstruction(&cf, &xi);
    Ok(DxiReport {
        rank: rep.rank,
        expected_rank: chev.positive_runs().len(),
        semi_positive: rep.is_semi_positive(),
        record,
    })
}

/// `dd^cω` against `−2h(H_α,H_β)` on quadruples `(E_α,E_{−α},E_β,E_{−β})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdcTable {
    /// `((α), (β), value, expected)` for positive runs `α ≠ β`.
    pub quadruples: Vec<((usize, usize), (usize, usize), GQ, GQ)>,
    /// Basis 4-subsets outside the quadruple classes with a nonzero value.
    pub stray: Vec<[usize; 4]>,
    pub record: Option<ObstructionRecord>,
}

impl DdcTable {
    pub fn all_match(&self) -> bool {
        self.quadruples.iter().all(|(_, _, v, e)| v == e) && self.stray.is_empty()
    }
}

/// `h` is given on Cartan coordinates (complex bilinear), zero on root vectors.
pub fn ddc_degenerate_form(chev: &Chevalley, cs: &ComplexStructure, h_cartan: &ExactMatrix) -> Result<DdcTable> {
    let reg = cs.h_regularity_check(&chev.cartan_basis())?;
    if !reg.ad_stable || !reg.splits {
        return Err(Error::NotRegularStructure("q is not ad(𝔥)-stable".into()));
    }
    let n = cs.n();
    let rank = chev.rank();
    if h_cartan.rows() != rank || h_cartan.cols() != rank {
        return Err(Error::DimensionMismatch { expected: rank, found: h_cartan.rows() });
    }
    let hform = |x: &Vector, y: &Vector| -> GQ {
        let mut t = GQ::zero();
        for (a, ca) in x.iter() {
            let BasisKind::Cartan(i) = chev.kind(a) else { continue };
            for (b, cb) in y.iter() {
                if let BasisKind::Cartan(j) = chev.kind(b) {
                    t += &(ca * cb) * h_cartan.get(i - 1, j - 1);
                }
            }
        }
        t
    };
    // ω(X_a, X_b) = h(J X_a, X_b) with J X_a = ± i X_a on the adapted basis
    let adapted = cs.adapted_basis();
    let mut omega = ExtForm::zero(n);
    for a in 0..2 * n {
        let eps = if a < n { GQ::i() } else { -GQ::i() };
        for b in (a + 1)..2 * n {
            omega.add_term((1 << a) | (1 << b), &eps * &hform(&adapted[a], &adapted[b]));
        }
    }
    let cf = Coframe::from_structure(cs);
    let ddc = cf.ddc(&omega);
    let coords = cs.coordinates();
    let d = chev.dim();
    let basis_coords: Vec<Vector> = (0..d).map(|k| coords.coords(&chev.algebra.basis(k))).collect();
    let eval = |idx: [usize; 4]| ddc.evaluate(&idx.map(|k| basis_coords[k].clone()));
    let runs = chev.positive_runs();
    let mut quadruples = Vec::new();
    let mut classes = std::collections::BTreeSet::new();
    for &a in &runs {
        for &b in &runs {
            if a == b {
                continue;
            }
            let q = [chev.pos(a.0, a.1), chev.neg(a.0, a.1), chev.pos(b.0, b.1), chev.neg(b.0, b.1)];
            let value = eval(q);
            let (ha, hb) = (chev.coroot(a.0, a.1), chev.coroot(b.0, b.1));
            let expected = hform(&ha, &hb).scale(&rat(-2, 1));
            quadruples.push((a, b, value, expected));
            let mut s = q;
            s.sort_unstable();
            classes.insert(s);
        }
    }
    let mut stray = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            for k in (j + 1)..d {
                for l in (k + 1)..d {
                    let s = [i, j, k, l];
                    if !classes.contains(&s) && !eval(s).is_zero() {
                        stray.push(s);
                    }
                }
            }
        }
    }
    let record = diagonal_strong_positivity(&ddc).map(|pos| ObstructionRecord {
        generator: omega.clone(),
        form: ddc.clone(),
        kind: ObstructionKind::PPluriclosed,
        classification: format!("strongly positive up to the unit {}", pos.phase),
        rank: pos.terms.len(),
        obstructed: vec![n - 2],
    });
    Ok(DdcTable { quadruples, stray, record })
}

/// `h(W, τW) = 1·r` pattern on the su(3) Cartan for `W = H₁ + (1+i)H₂`:
/// `h(H₁,H₂) = 1`, `h(H₁,H₁) = −2`, `h(H₂,H₂) = −1`.
pub fn su3_degenerate_h(scale: &GQ) -> ExactMatrix {
    let m = ExactMatrix::from_int_rows(&[&[-2, 1], &[1, -1]]);
    let mut out = ExactMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            out.set(i, j, m.get(i, j) * scale);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// sl(2,ℝ) × ℝ^{2n−3}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2ProductReport {
    pub n: usize,
    pub metric: MetricReport,
    /// `∂∂̄ω^{n−1} = 0` for the product metric.
    pub top_pluriclosed: bool,
    pub kahler: KahlerFeasibility,
}

pub fn sl2_product_check(n: usize) -> Result<Sl2ProductReport> {
    let cs = crate::complex_structures::sl2_product_structure(n)?;
    let cf = Coframe::from_structure(&cs);
    let metric = metric_report(&cf, &HermMetric::identity(n))?;
    let omega = HermMetric::identity(n).fundamental_form();
    let top_pluriclosed = is_p_pluriclosed(&cf, &omega, n - 1);
    let kahler = kahler_feasibility(&cf)?;
    Ok(Sl2ProductReport { n, metric, top_pluriclosed, kahler })
}

/// Invariant form restricted to a list of vectors.
pub fn gram(form: &ExactMatrix, vs: &[Vector]) -> ExactMatrix {
    let mut g = ExactMatrix::zeros(vs.len(), vs.len());
    for (i, x) in vs.iter().enumerate() {
        for (j, y) in vs.iter().enumerate() {
            g.set(i, j, LieAlgebra::pair(form, x, y));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex_structures::abelian_structure;

    #[test]
    fn abelian_all_flags() {
        let cs = abelian_structure(3);
        let cf = Coframe::from_structure(&cs);
        let r = metric_report(&cf, &HermMetric::identity(3)).unwrap();
        assert!(r.kahler && r.pluriclosed && r.balanced && r.gauduchon && r.astheno);
        assert!(obstruction_scan(&cf, &[cf.eta(0).add(&cf.eta_bar(0)).unwrap()], 2, &[]).is_empty());
    }

    #[test]
    fn balanced_frames() {
        for m in 2..=3 {
            let f = balanced_basis_sl2m1(m).unwrap();
            assert!(f.residual().unwrap().is_zero(), "m = {m}");
            let rf = RealForms::build(m).unwrap();
            let lit = balanced_basis_with(&rf, CorrectionSigns::Literal).unwrap();
            assert!(!lit.residual().unwrap().is_zero());
        }
    }

    #[test]
    fn not_positive_definite() {
        let h = ExactMatrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        assert_eq!(HermMetric::new(h), Err(Error::NotPositiveDefinite));
    }

    #[test]
    fn obstructed_sets() {
        assert_eq!(obstructed_set(4, 3), vec![1, 2, 3]);
        assert_eq!(obstructed_set(11, 7), (4..=10).collect::<Vec<_>>());
        assert_eq!(obstructed_set(4, 9), vec![1, 2, 3]);
    }
}
