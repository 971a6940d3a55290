//! Weight calculus on the full flag SU(N)/T and the T²-bundle over SU(5)/T:
//! invariant 2-forms `dβ` on the generators `ω_{j,l}`, top-degree wedge
//! coefficients, and definiteness scans.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::obstructed_set;
use crate::numeric::{parse_rational, rat_int, Rational};
use crate::positivity::{power_semidefiniteness, PowerClass};

/// `β = Σ B_j ᾱ_j` on SU(N)/T.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCombo {
    pub b: Vec<Rational>,
}

impl WeightCombo {
    pub fn new(b: Vec<Rational>) -> Self {
        WeightCombo { b }
    }

    pub fn from_ints(b: &[i64]) -> Self {
        WeightCombo { b: b.iter().map(|&x| rat_int(x)).collect() }
    }

    /// `ᾱ_j` (1-based).
    pub fn weight(len: usize, j: usize) -> Self {
        let mut b = vec![Rational::zero(); len];
        b[j - 1] = Rational::one();
        WeightCombo { b }
    }

    /// `Σ_j ᾱ_j`.
    pub fn sum_all(len: usize) -> Self {
        WeightCombo { b: vec![Rational::one(); len] }
    }

    /// `N`.
    pub fn n(&self) -> usize {
        self.b.len() + 1
    }

    /// `B̃_j = B_1 + … + B_j`, with `B̃_0 = 0`.
    pub fn partial_sums(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero()];
        for x in &self.b {
            let next = out.last().expect("nonempty") + x;
            out.push(next);
        }
        out
    }

    pub fn combine(&self, a: &Rational, other: &WeightCombo, c: &Rational) -> WeightCombo {
        WeightCombo { b: self.b.iter().zip(&other.b).map(|(x, y)| x * a + y * c).collect() }
    }

    /// Either a comma list `1,0,0,-3` or an expression like `a1-3a4`.
    pub fn parse(s: &str, len: usize) -> Result<Self> {
        let s = s.trim();
        if s.contains(',') || !s.contains('a') {
            let b: Vec<Rational> = s.split(',').map(|t| parse_rational(t.trim())).collect::<Result<_>>()?;
            if b.len() != len {
                return Err(Error::Parse(format!("expected {len} coefficients, got {}", b.len())));
            }
            return Ok(WeightCombo { b });
        }
        let mut b = vec![Rational::zero(); len];
        let normalized = s.replace(' ', "").replace('-', "+-");
        for term in normalized.split('+').filter(|t| !t.is_empty()) {
            let (coef, idx) = term.split_once('a').ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
            let c = match coef {
                "" => Rational::one(),
                "-" => -Rational::one(),
                t => parse_rational(t.trim_end_matches('*'))?,
            };
            let j: usize = idx.parse().map_err(|_| Error::Parse(format!("bad weight index {idx:?}")))?;
            if j == 0 || j > len {
                return Err(Error::Parse(format!("weight index {j} out of range 1..={len}")));
            }
            b[j - 1] += c;
        }
        Ok(WeightCombo { b })
    }
}

/// `ᾱ_j = e_1 + … + e_j` as vectors in ℝ^N.
pub fn fundamental_weights(n: usize) -> Result<Vec<Vec<Rational>>> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    Ok((1..n).map(|j| (0..n).map(|i| if i < j { Rational::one() } else { Rational::zero() }).collect()).collect())
}

/// `2(ᾱ_j, α_l)/(α_l, α_l)` for the simple roots `α_l = e_l − e_{l+1}`.
pub fn weight_root_pairing(n: usize) -> Result<Vec<Vec<Rational>>> {
    let w = fundamental_weights(n)?;
    let root = |l: usize| -> Vec<Rational> {
        (0..n)
            .map(|i| {
                if i == l {
                    Rational::one()
                } else if i == l + 1 {
                    -Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect()
    };
    let dot = |a: &[Rational], b: &[Rational]| a.iter().zip(b).fold(Rational::zero(), |s, (x, y)| s + x * y);
    Ok(w.iter()
        .map(|wj| {
            (0..n - 1)
                .map(|l| {
                    let r = root(l);
                    rat_int(2) * dot(wj, &r) / dot(&r, &r)
                })
                .collect()
        })
        .collect())
}

/// Coefficients on `ω_{j,l}`, `1 ≤ j < l ≤ N`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagTwoForm {
    pub n: usize,
    pub coeffs: Vec<Rational>,
}

impl DiagTwoForm {
    pub fn pairs(n: usize) -> Vec<(usize, usize)> {
        (1..=n).flat_map(|j| ((j + 1)..=n).map(move |l| (j, l))).collect()
    }

    pub fn generators(&self) -> usize {
        self.coeffs.len()
    }

    pub fn get(&self, j: usize, l: usize) -> &Rational {
        let idx = DiagTwoForm::pairs(self.n).iter().position(|&p| p == (j, l)).expect("j < l ≤ N");
        &self.coeffs[idx]
    }

    pub fn rank(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, other: &DiagTwoForm) -> DiagTwoForm {
        DiagTwoForm { n: self.n, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// `dβ = Σ_{j<l} (B̃_{l−1} − B̃_{j−1}) ω_{j,l}`.
pub fn dbeta(beta: &WeightCombo) -> DiagTwoForm {
    let n = beta.n();
    let bt = beta.partial_sums();
    let coeffs = DiagTwoForm::pairs(n).into_iter().map(|(j, l)| &bt[l - 1] - &bt[j - 1]).collect();
    DiagTwoForm { n, coeffs }
}

/// Coefficient of `Π ω_{j,l}` in `Π_i (form_i)^{e_i}` for commuting square-zero generators.
pub fn wedge_power_topform(forms: &[(DiagTwoForm, usize)]) -> Result<Rational> {
    let m = forms.first().map(|(f, _)| f.generators()).unwrap_or(0);
    let total: usize = forms.iter().map(|(_, e)| e).sum();
    if total != m || forms.iter().any(|(f, _)| f.generators() != m) {
        return Err(Error::DegreeMismatch { expected: m, found: total });
    }
    // ordered picks over used-generator masks: each block of size e is
    // counted e! times, which is the multinomial factor
    let mut dp: BTreeMap<u64, Rational> = BTreeMap::new();
    dp.insert(0, Rational::one());
    for (f, e) in forms {
        for _ in 0..*e {
            let mut next: BTreeMap<u64, Rational> = BTreeMap::new();
            for (mask, v) in &dp {
                for (g, c) in f.coeffs.iter().enumerate() {
                    if c.is_zero() || mask >> g & 1 == 1 {
                        continue;
                    }
                    *next.entry(mask | 1 << g).or_insert_with(Rational::zero) += v * c;
                }
            }
            dp = next;
        }
    }
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    Ok(dp.get(&full).cloned().unwrap_or_else(Rational::zero))
}

/// `c² = −[(dβ₁)² ∧ (dω_K)^{M−2}] / [(dβ₂)² ∧ (dω_K)^{M−2}]`.
pub fn astheno_c2(b1: &WeightCombo, b2: &WeightCombo, omega_k: &WeightCombo) -> Result<Rational> {
    let (d1, d2, dk) = (dbeta(b1), dbeta(b2), dbeta(omega_k));
    let m = dk.generators();
    if m < 2 {
        return Err(Error::DegreeMismatch { expected: 2, found: m });
    }
    let num = wedge_power_topform(&[(d1, 2), (dk.clone(), m - 2)])?;
    let den = wedge_power_topform(&[(d2, 2), (dk, m - 2)])?;
    if den.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    let c2 = -num / den;
    if !c2.is_positive() {
        return Err(Error::NoPositiveSolution(c2.to_string()));
    }
    Ok(c2)
}

/// One row of a definiteness scan over `Aβ₁ + Cβ₂`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub a: i64,
    pub c: i64,
    pub classification: PowerClass,
    pub rank: usize,
    /// `p` with `(dβ)^j` semi-definite and nonzero, `p = n − j`.
    pub obstructed_p: Vec<usize>,
    pub semidefinite_powers: Vec<(usize, PowerClass)>,
}

/// Complex dimension of the T²-bundle over SU(N)/T (`N(N−1)/2 + 1`).
pub fn bundle_dimension(n: usize) -> usize {
    n * (n - 1) / 2 + 1
}

pub fn scan_row(b1: &WeightCombo, b2: &WeightCombo, a: i64, c: i64) -> Result<ScanRow> {
    let beta = b1.combine(&rat_int(a), b2, &rat_int(c));
    let d = dbeta(&beta);
    let n = bundle_dimension(d.n);
    let first = power_semidefiniteness(&d.coeffs, 1)?;
    let rank = d.rank();
    let mut semidefinite_powers = Vec::new();
    for j in 1..=d.generators() {
        let r = power_semidefiniteness(&d.coeffs, j)?;
        if r.classification.is_semi_definite_nonzero() {
            semidefinite_powers.push((j, r.classification));
        }
    }
    let obstructed_p = if first.classification.is_semi_definite_nonzero() {
        obstructed_set(n, rank)
    } else {
        let mut ps: Vec<usize> = semidefinite_powers.iter().map(|(j, _)| n - j).collect();
        ps.sort_unstable();
        ps
    };
    Ok(ScanRow { a, c, classification: first.classification, rank, obstructed_p, semidefinite_powers })
}

/// All `(A, C)` with `|A|, |C| ≤ range`, not both zero, in increasing `(A, C)` order.
pub fn semidef_scan(b1: &WeightCombo, b2: &WeightCombo, range: i64) -> Result<Vec<ScanRow>> {
    if range < 1 {
        return Err(Error::InvalidParameter(format!("range must be at least 1, got {range}")));
    }
    let mut rows = Vec::new();
    for a in -range..=range {
        for c in -range..=range {
            if a == 0 && c == 0 {
                continue;
            }
            rows.push(scan_row(b1, b2, a, c)?);
        }
    }
    Ok(rows)
}

/// Rows whose `dβ` itself is semi-definite.
pub fn semidefinite_rows(rows: &[ScanRow]) -> Vec<&ScanRow> {
    rows.iter().filter(|r| r.classification.is_semi_definite_nonzero()).collect()
}

/// Union of obstructed `p` over all rows.
pub fn obstructed_union(rows: &[ScanRow]) -> Vec<usize> {
    let mut ps: Vec<usize> = rows.iter().flat_map(|r| r.obstructed_p.iter().copied()).collect();
    ps.sort_unstable();
    ps.dedup();
    ps
}

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("A,C,classification,rank,obstructed_p\n");
    for r in rows {
        let ps: Vec<String> = r.obstructed_p.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "{},{},{:?},{},{}", r.a, r.c, r.classification, r.rank, ps.join(";"));
    }
    out
}

pub fn scan_json(rows: &[ScanRow]) -> serde_json::Value {
    serde_json::to_value(rows).expect("serializable")
}
