//! Hermitian representation of (1,1)-forms, sign patterns of diagonal wedge
//! powers, and a sampling falsifier for transversality.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::ExtForm;
use crate::numeric::{ExactMatrix, Rational, Signature, GQ};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form11Report {
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub signature: Signature,
}

impl Form11Report {
    pub fn is_semi_positive(&self) -> bool {
        self.signature.neg == 0
    }

    pub fn is_semi_negative(&self) -> bool {
        self.signature.pos == 0
    }

    pub fn is_semi_definite(&self) -> bool {
        self.is_semi_positive() || self.is_semi_negative()
    }
}

/// `f = i Σ h_{jk} η^j ∧ η̄^k`.
pub fn herm_rep(f: &ExtForm) -> Result<Form11Report> {
    let n = f.n();
    if f.terms().any(|(m, _)| f.bidegree_of(m) != (1, 1)) {
        return Err(Error::NotType11);
    }
    if !f.is_real() {
        return Err(Error::NotRealForm);
    }
    let mut h = ExactMatrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            let c = f.coefficient((1 << j) | (1 << (n + k)));
            h.set(j, k, -(&GQ::i() * &c));
        }
    }
    let signature = h.hermitian_signature()?;
    Ok(Form11Report { rank: signature.rank(), matrix: h, signature })
}

/// The real (1,1)-form `i Σ h_{jk} η^j ∧ η̄^k`.
pub fn form_from_hermitian(h: &ExactMatrix) -> ExtForm {
    let n = h.rows();
    let mut f = ExtForm::zero(n);
    for j in 0..n {
        for k in 0..n {
            f.add_term((1 << j) | (1 << (n + k)), &GQ::i() * h.get(j, k));
        }
    }
    f
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PowerClass {
    PositiveSemiDef,
    NegativeSemiDef,
    Zero,
    Indefinite,
}

impl PowerClass {
    pub fn is_semi_definite_nonzero(self) -> bool {
        matches!(self, PowerClass::PositiveSemiDef | PowerClass::NegativeSemiDef)
    }

    pub fn flipped(self) -> Self {
        match self {
            PowerClass::PositiveSemiDef => PowerClass::NegativeSemiDef,
            PowerClass::NegativeSemiDef => PowerClass::PositiveSemiDef,
            c => c,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerSignReport {
    #[serde(serialize_with = "crate::positivity::ser_rationals")]
    pub entries: Vec<Rational>,
    pub exponent: usize,
    pub classification: PowerClass,
    pub nonzero_subset_count: u128,
    pub positive_products: u128,
    pub negative_products: u128,
}

pub(crate) fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Signs of all size-`j` products of the nonzero diagonal entries.
pub fn power_semidefiniteness(diag: &[Rational], j: usize) -> Result<PowerSignReport> {
    if j == 0 || j > diag.len() {
        return Err(Error::InvalidExponent { exponent: j, available: diag.len() });
    }
    let p = diag.iter().filter(|x| x.is_positive()).count();
    let q = diag.iter().filter(|x| x.is_negative()).count();
    let (mut pos, mut neg) = (0u128, 0u128);
    for t in 0..=q.min(j) {
        let c = binomial(q, t) * binomial(p, j - t);
        if t % 2 == 0 {
            pos += c;
        } else {
            neg += c;
        }
    }
    let classification = match (pos > 0, neg > 0) {
        (false, false) => PowerClass::Zero,
        (true, false) => PowerClass::PositiveSemiDef,
        (false, true) => PowerClass::NegativeSemiDef,
        (true, true) => PowerClass::Indefinite,
    };
    Ok(PowerSignReport {
        entries: diag.to_vec(),
        exponent: j,
        classification,
        nonzero_subset_count: pos + neg,
        positive_products: pos,
        negative_products: neg,
    })
}

/// Sign of `η^S η̄^S` relative to `Π_{s∈S} (i η^s ∧ η̄^s)`.
fn diagonal_unit(n: usize, subset: u64) -> GQ {
    let mut f = ExtForm::one(n);
    let mut rest = subset;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        f = f.wedge(&ExtForm::eta_eta_bar(n, s, s).scale(&GQ::i())).expect("same n");
        rest &= rest - 1;
    }
    f.coefficient(subset | (subset << n))
}

/// `f = ζ Σ_S r_S Π_{s∈S}(i η^s∧η̄^s)` with one unit `ζ ∈ {1, −1, i, −i}`
/// and all `r_S > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalPositivity {
    pub phase: GQ,
    pub terms: Vec<(Vec<usize>, Rational)>,
}

pub fn diagonal_strong_positivity(f: &ExtForm) -> Option<DiagonalPositivity> {
    let n = f.n();
    let low = f.low_mask();
    let mut coeffs = Vec::new();
    for (m, c) in f.terms() {
        let s = m & low;
        if m >> n != s {
            return None;
        }
        let unit = diagonal_unit(n, s);
        coeffs.push((s, c.checked_div(&unit).ok()?));
    }
    let first = coeffs.first()?.1.clone();
    let phase = [GQ::one(), GQ::from_int(-1), GQ::i(), -GQ::i()]
        .into_iter()
        .find(|z| (&first * &z.conj()).real_sign() == Some(1))?;
    let mut terms = Vec::new();
    for (s, c) in coeffs {
        let r = &c * &phase.conj();
        if r.real_sign() != Some(1) {
            return None;
        }
        let idx = (0..n).filter(|k| s >> k & 1 == 1).collect();
        terms.push((idx, r.re));
    }
    Some(DiagonalPositivity { phase, terms })
}

/// `i^n`-normalized volume `Π_k (i η^k ∧ η̄^k)` coefficient on the top monomial.
pub fn volume_unit(n: usize) -> GQ {
    diagonal_unit(n, (1u64 << n) - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FalsifierOutcome {
    /// `f ∧ Π(i θ_s ∧ θ̄_s)` is not a positive multiple of the volume.
    Falsified { covectors: Vec<Vec<GQ>>, pairing: GQ },
    Undetermined,
}

fn decomposable(n: usize, covectors: &[Vec<GQ>]) -> ExtForm {
    let mut out = ExtForm::one(n);
    for c in covectors {
        let mut th = ExtForm::zero(n);
        for (k, a) in c.iter().enumerate() {
            th.add_term(1 << k, a.clone());
        }
        let t = th.wedge(&th.conj()).expect("same n").scale(&GQ::i());
        out = out.wedge(&t).expect("same n");
    }
    out
}

fn random_gq(rng: &mut ChaCha8Rng) -> GQ {
    let re = Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into());
    let im = Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into());
    GQ::new(re, im)
}

/// Pairs a real `(p,p)`-form with coordinate-aligned and then random
/// decomposable strongly positive `(n−p,n−p)`-forms.
pub fn transversality_falsifier(f: &ExtForm, trials: usize, seed: u64) -> Result<FalsifierOutcome> {
    let n = f.n();
    let p = match f.bidegree() {
        Some((a, b)) if a == b => a,
        None if f.is_zero() => 0,
        _ => return Err(Error::InvalidParameter("transversality needs a (p,p)-form".into())),
    };
    let k = n - p;
    let vol = volume_unit(n);
    let test = |cov: Vec<Vec<GQ>>| -> Option<FalsifierOutcome> {
        let w = f.wedge(&decomposable(n, &cov)).expect("same n");
        let pairing = w.top_coefficient().checked_div(&vol).expect("nonzero volume");
        (pairing.real_sign() != Some(1)).then_some(FalsifierOutcome::Falsified { covectors: cov, pairing })
    };
    let unit = |j: usize| (0..n).map(|i| if i == j { GQ::one() } else { GQ::zero() }).collect::<Vec<_>>();
    for s in 0u64..(1 << n) {
        if s.count_ones() as usize != k {
            continue;
        }
        let cov = (0..n).filter(|j| s >> j & 1 == 1).map(unit).collect();
        if let Some(out) = test(cov) {
            return Ok(out);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let cov = (0..k).map(|_| (0..n).map(|_| random_gq(&mut rng)).collect()).collect();
        if let Some(out) = test(cov) {
            return Ok(out);
        }
    }
    Ok(FalsifierOutcome::Undetermined)
}

/// Rational diagonal of a form that is diagonal in the `i η^j ∧ η̄^j` frame.
pub fn real_diagonal(report: &Form11Report) -> Option<Vec<Rational>> {
    let n = report.matrix.rows();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        for k in 0..n {
            if j != k && !report.matrix.get(j, k).is_zero() {
                return None;
            }
        }
        let d = report.matrix.get(j, j);
        if !d.im.is_zero() {
            return None;
        }
        out.push(d.re.clone());
    }
    Some(out)
}
