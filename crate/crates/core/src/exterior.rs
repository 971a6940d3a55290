//! Chevalley–Eilenberg calculus on a complex coframe `η⁰..ηⁿ⁻¹, η̄⁰..η̄ⁿ⁻¹`.
//!
//! Monomials are bitmasks: bit `k < n` is `η^k`, bit `n + k` is `η̄^k`, and
//! the stored order is increasing bit index, so holomorphic factors come
//! first.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::complex_structures::ComplexStructure;
use crate::error::{Error, Result};
use crate::numeric::{ExactMatrix, Vector, GQ};

/// Sign of `a ∧ b` reordered into increasing order, or `None` if they overlap.
fn merge_sign(a: u64, b: u64) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut inv = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inv += (a >> j).count_ones();
        rest &= rest - 1;
    }
    Some(inv % 2 == 1)
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(j)
        }
    })
}

/// A form with exact coefficients on `n` complex generators and their conjugates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtForm {
    n: usize,
    terms: BTreeMap<u64, GQ>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TermJson {
    pub indices: Vec<String>,
    pub re: String,
    pub im: String,
}

impl ExtForm {
    pub fn zero(n: usize) -> Self {
        assert!(2 * n <= 64, "at most 32 complex generators");
        ExtForm { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: usize, c: GQ) -> Self {
        let mut f = ExtForm::zero(n);
        f.add_term(0, c);
        f
    }

    pub fn one(n: usize) -> Self {
        ExtForm::scalar(n, GQ::one())
    }

    /// The generator with bit index `k` (`k ≥ n` means a conjugate).
    pub fn generator(n: usize, k: usize) -> Self {
        let mut f = ExtForm::zero(n);
        f.add_term(1 << k, GQ::one());
        f
    }

    pub fn eta(n: usize, k: usize) -> Self {
        ExtForm::generator(n, k)
    }

    pub fn eta_bar(n: usize, k: usize) -> Self {
        ExtForm::generator(n, n + k)
    }

    /// `c · η^{h₀}∧…∧η^{h_p}∧η̄^{a₀}∧…` in the listed order.
    pub fn monomial(n: usize, holo: &[usize], anti: &[usize], c: GQ) -> Self {
        let mut f = ExtForm::scalar(n, c);
        for &h in holo {
            f = f.wedge_unchecked(&ExtForm::eta(n, h));
        }
        for &a in anti {
            f = f.wedge_unchecked(&ExtForm::eta_bar(n, a));
        }
        f
    }

    /// `η^j ∧ η̄^k`.
    pub fn eta_eta_bar(n: usize, j: usize, k: usize) -> Self {
        ExtForm::monomial(n, &[j], &[k], GQ::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &GQ)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mask: u64) -> GQ {
        self.terms.get(&mask).cloned().unwrap_or_else(GQ::zero)
    }

    pub fn add_term(&mut self, mask: u64, c: GQ) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_insert_with(GQ::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn low_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn bidegree_of(&self, mask: u64) -> (usize, usize) {
        let low = self.low_mask();
        ((mask & low).count_ones() as usize, (mask >> self.n).count_ones() as usize)
    }

    /// Total degree, if homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.count_ones() as usize);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Bidegree, if pure.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(|m| self.bidegree_of(*m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn check(&self, other: &ExtForm) -> Result<()> {
        if self.n != other.n {
            return Err(Error::CoframeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &ExtForm) -> Result<ExtForm> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ExtForm) -> Result<ExtForm> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &GQ) -> ExtForm {
        let mut out = ExtForm::zero(self.n);
        for (m, x) in self.terms() {
            out.add_term(m, x * c);
        }
        out
    }

    pub fn neg(&self) -> ExtForm {
        self.scale(&GQ::from_int(-1))
    }

    pub fn wedge(&self, other: &ExtForm) -> Result<ExtForm> {
        self.check(other)?;
        Ok(self.wedge_unchecked(other))
    }

    fn wedge_unchecked(&self, other: &ExtForm) -> ExtForm {
        let mut out = ExtForm::zero(self.n);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if let Some(neg) = merge_sign(a, b) {
                    let p = x * y;
                    out.add_term(a | b, if neg { -p } else { p });
                }
            }
        }
        out
    }

    /// `f ∧ … ∧ f` (k factors); `f⁰ = 1`.
    pub fn power(&self, k: usize) -> ExtForm {
        let mut out = ExtForm::one(self.n);
        for _ in 0..k {
            out = out.wedge_unchecked(self);
        }
        out
    }

    /// Complex conjugate: swaps η ↔ η̄ and conjugates coefficients.
    pub fn conj(&self) -> ExtForm {
        let n = self.n;
        let low = self.low_mask();
        let mut out = ExtForm::zero(n);
        for (m, c) in self.terms() {
            let a = m & low;
            let b = m >> n;
            // η̄^A η^B  →  η^B η̄^A
            let neg = (a.count_ones() * b.count_ones()) % 2 == 1;
            let cc = c.conj();
            out.add_term(b | (a << n), if neg { -cc } else { cc });
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn components(&self) -> BTreeMap<(usize, usize), ExtForm> {
        let mut out: BTreeMap<(usize, usize), ExtForm> = BTreeMap::new();
        for (m, c) in self.terms() {
            out.entry(self.bidegree_of(m)).or_insert_with(|| ExtForm::zero(self.n)).add_term(m, c.clone());
        }
        out
    }

    pub fn component(&self, p: usize, q: usize) -> ExtForm {
        self.components().remove(&(p, q)).unwrap_or_else(|| ExtForm::zero(self.n))
    }

    /// `J` on 1-forms, `(Jβ)(X) = −β(JX)`: `Jη = −iη`, `Jη̄ = iη̄`.
    pub fn apply_j(&self) -> ExtForm {
        let mut out = ExtForm::zero(self.n);
        for (m, c) in self.terms() {
            let (p, q) = self.bidegree_of(m);
            let phase = GQ::i().pow(((4 - p % 4) + q) as u32 % 4);
            out.add_term(m, c * &phase);
        }
        out
    }

    /// `f(X₁, …, X_p)` with `X` in coordinates of the dual basis.
    pub fn evaluate(&self, xs: &[Vector]) -> GQ {
        let p = xs.len();
        let mut total = GQ::zero();
        for (m, c) in self.terms() {
            if m.count_ones() as usize != p {
                continue;
            }
            let idx: Vec<usize> = bits(m).collect();
            let rows: Vec<Vec<GQ>> = idx.iter().map(|&i| xs.iter().map(|x| x.get(i)).collect()).collect();
            let det = if p == 0 {
                GQ::one()
            } else {
                ExactMatrix::from_rows(rows).and_then(|m| m.determinant()).expect("square")
            };
            total += c * &det;
        }
        total
    }

    /// Coefficient of the top-degree monomial.
    pub fn top_coefficient(&self) -> GQ {
        self.coefficient(if self.n == 32 { u64::MAX } else { (1u64 << (2 * self.n)) - 1 })
    }

    pub fn index_label(&self, k: usize) -> String {
        if k < self.n {
            k.to_string()
        } else {
            format!("{}bar", k - self.n)
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms()
            .map(|(m, c)| TermJson {
                indices: bits(m).map(|k| self.index_label(k)).collect(),
                re: c.re_string(),
                im: c.im_string(),
            })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }

    /// Rendering with display names for the holomorphic generators.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                let mono: Vec<String> = bits(m)
                    .map(|k| if k < self.n { names[k].clone() } else { format!("{}̄", names[k - self.n]) })
                    .collect();
                let coef = if c.is_one() && m != 0 { String::new() } else { format!("({c})") };
                if m == 0 {
                    coef
                } else {
                    format!("{coef}{}", mono.join("∧"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for ExtForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.n).map(|k| format!("η{k}")).collect();
        write!(f, "{}", self.render(&names))
    }
}

/// The exterior derivative on the generators, determined by the brackets.
#[derive(Clone, Debug)]
pub struct Coframe {
    n: usize,
    names: Vec<String>,
    dgen: Vec<ExtForm>,
}

impl Coframe {
    /// Coframe dual to `[q; σq]`: `dη^c = −Σ_{a<b} c^c_{ab} η^a∧η^b`.
    pub fn from_structure(cs: &ComplexStructure) -> Coframe {
        let n = cs.n();
        let adapted = cs.adapted_basis();
        let coords = cs.coordinates();
        let g = cs.algebra();
        let mut dgen = vec![ExtForm::zero(n); 2 * n];
        for a in 0..2 * n {
            for b in (a + 1)..2 * n {
                let br = g.bracket(&adapted[a], &adapted[b]);
                if br.is_zero() {
                    continue;
                }
                for (c, x) in coords.coords(&br).iter() {
                    dgen[c].add_term((1 << a) | (1 << b), -x.clone());
                }
            }
        }
        Coframe { n, names: cs.labels().iter().map(|l| format!("η[{l}]")).collect(), dgen }
    }

    /// `d` given on the holomorphic generators; conjugates follow by reality.
    pub fn from_differentials(d_holo: Vec<ExtForm>) -> Result<Coframe> {
        let n = d_holo.len();
        for f in &d_holo {
            if f.n() != n {
                return Err(Error::CoframeMismatch(n, f.n()));
            }
            if f.degree().is_some_and(|d| d != 2) {
                return Err(Error::InvalidParameter("differentials must be 2-forms".into()));
            }
        }
        let mut dgen = d_holo.clone();
        dgen.extend(d_holo.iter().map(|f| f.conj()));
        Ok(Coframe { n, names: (0..n).map(|k| format!("η{k}")).collect(), dgen })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Coframe {
        assert_eq!(names.len(), self.n);
        self.names = names;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `dη^k` (or `dη̄^{k−n}` for `k ≥ n`).
    pub fn d_generator(&self, k: usize) -> &ExtForm {
        &self.dgen[k]
    }

    pub fn eta(&self, k: usize) -> ExtForm {
        ExtForm::eta(self.n, k)
    }

    pub fn eta_bar(&self, k: usize) -> ExtForm {
        ExtForm::eta_bar(self.n, k)
    }

    /// The antiderivation extending `d` on generators.
    pub fn d(&self, f: &ExtForm) -> ExtForm {
        let n = self.n;
        let mut out = ExtForm::zero(n);
        for (m, c) in f.terms() {
            let idx: Vec<usize> = bits(m).collect();
            for (pos, &k) in idx.iter().enumerate() {
                let dk = &self.dgen[k];
                if dk.is_zero() {
                    continue;
                }
                let before: u64 = idx[..pos].iter().map(|&j| 1u64 << j).sum();
                let after: u64 = idx[pos + 1..].iter().map(|&j| 1u64 << j).sum();
                for (t, y) in dk.terms() {
                    let Some(s1) = merge_sign(before, t) else { continue };
                    let Some(s2) = merge_sign(before | t, after) else { continue };
                    let neg = (pos % 2 == 1) ^ s1 ^ s2;
                    let v = c * y;
                    out.add_term(before | t | after, if neg { -v } else { v });
                }
            }
        }
        out
    }

    fn shifted(&self, f: &ExtForm, dp: usize, dq: usize) -> ExtForm {
        let mut out = ExtForm::zero(self.n);
        for (m, c) in f.terms() {
            let (p, q) = f.bidegree_of(m);
            let mut one = ExtForm::zero(self.n);
            one.add_term(m, c.clone());
            let part = self.d(&one).component(p + dp, q + dq);
            out = out.add(&part).expect("same coframe");
        }
        out
    }

    pub fn del(&self, f: &ExtForm) -> ExtForm {
        self.shifted(f, 1, 0)
    }

    pub fn delbar(&self, f: &ExtForm) -> ExtForm {
        self.shifted(f, 0, 1)
    }

    /// `d^c = i(∂̄ − ∂)`.
    pub fn dc(&self, f: &ExtForm) -> ExtForm {
        self.delbar(f).sub(&self.del(f)).expect("same coframe").scale(&GQ::i())
    }

    pub fn ddc(&self, f: &ExtForm) -> ExtForm {
        self.d(&self.dc(f))
    }

    pub fn del_delbar(&self, f: &ExtForm) -> ExtForm {
        self.del(&self.delbar(f))
    }

    /// `d(Λ^{1,0})` has no `(0,2)` part.
    pub fn is_integrable(&self) -> bool {
        (0..self.n).all(|k| self.dgen[k].component(0, 2).is_zero())
    }

    /// `dη^k` for the holomorphic generators.
    pub fn structure_equations(&self) -> Vec<ExtForm> {
        self.dgen[..self.n].to_vec()
    }

    /// One line `dη^k = …` per holomorphic generator.
    pub fn structure_equations_text(&self) -> Vec<String> {
        self.structure_equations()
            .iter()
            .enumerate()
            .map(|(k, f)| format!("d{} = {}", self.names[k], f.render(&self.names)))
            .collect()
    }

    pub fn structure_equations_json(&self) -> serde_json::Value {
        let eqs: Vec<serde_json::Value> = self
            .structure_equations()
            .iter()
            .enumerate()
            .map(|(k, f)| serde_json::json!({"generator": k, "name": self.names[k], "d": f.to_json()}))
            .collect();
        serde_json::Value::Array(eqs)
    }
}


/// Scalars `c_k` with `η'^k = c_k η^k` turning `computed` into `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rescaling {
    pub scales: Vec<GQ>,
}

/// One multiplicative condition `Π c^e · Π c̄^f = ratio`.
#[derive(Clone, Debug)]
struct ScaleEquation {
    holo: Vec<i32>,
    anti: Vec<i32>,
    ratio: GQ,
}

/// True iff every equation has the same monomial support in both lists.
pub fn same_support(computed: &[ExtForm], target: &[ExtForm]) -> bool {
    computed.len() == target.len()
        && computed.iter().zip(target).all(|(a, b)| a.terms().map(|(m, _)| m).eq(b.terms().map(|(m, _)| m)))
}

/// Solves for a diagonal rescaling of the holomorphic coframe that maps the
/// equations `computed` (dη^k) onto `target` exactly.
pub fn match_up_to_rescaling(computed: &[ExtForm], target: &[ExtForm]) -> Option<Rescaling> {
    if !same_support(computed, target) {
        return None;
    }
    let n = computed.len();
    // η'^k = c_k η^k:  coefficient' = coefficient · c_k / Π c_a Π c̄_b
    let mut eqs = Vec::new();
    for (k, (f, g)) in computed.iter().zip(target).enumerate() {
        for (m, x) in f.terms() {
            let mut holo = vec![0i32; n];
            let mut anti = vec![0i32; n];
            holo[k] += 1;
            for b in bits(m) {
                if b < n {
                    holo[b] -= 1;
                } else {
                    anti[b - n] -= 1;
                }
            }
            let ratio = g.coefficient(m).checked_div(x).ok()?;
            eqs.push(ScaleEquation { holo, anti, ratio });
        }
    }
    let mut known: Vec<Option<GQ>> = vec![None; n];
    let scales = solve_scales(&eqs, &mut known)?;
    Some(Rescaling { scales })
}

fn eval_partial(eq: &ScaleEquation, known: &[Option<GQ>]) -> (GQ, Vec<usize>) {
    let mut value = GQ::one();
    let mut open = Vec::new();
    for k in 0..known.len() {
        if eq.holo[k] == 0 && eq.anti[k] == 0 {
            continue;
        }
        match &known[k] {
            Some(c) => {
                value *= &pow_signed(c, eq.holo[k]);
                value *= &pow_signed(&c.conj(), eq.anti[k]);
            }
            None => open.push(k),
        }
    }
    (value, open)
}

fn pow_signed(c: &GQ, e: i32) -> GQ {
    let p = c.pow(e.unsigned_abs());
    if e < 0 {
        p.inv().expect("nonzero scale")
    } else {
        p
    }
}

fn solve_scales(eqs: &[ScaleEquation], known: &mut Vec<Option<GQ>>) -> Option<Vec<GQ>> {
    loop {
        let mut progress = false;
        for eq in eqs {
            let (value, open) = eval_partial(eq, known);
            match open.as_slice() {
                [] => {
                    if value != eq.ratio {
                        return None;
                    }
                }
                [k] => {
                    let rhs = eq.ratio.checked_div(&value).ok()?;
                    // c^a c̄^b = rhs with a + b = ±1 and a − b ∈ {±1} handled directly
                    let c = match (eq.holo[*k], eq.anti[*k]) {
                        (1, 0) => rhs,
                        (-1, 0) => rhs.inv().ok()?,
                        (0, 1) => rhs.conj(),
                        (0, -1) => rhs.conj().inv().ok()?,
                        _ => continue,
                    };
                    known[*k] = Some(c);
                    progress = true;
                }
                _ => {}
            }
        }
        if !progress {
            break;
        }
    }
    match known.iter().position(Option::is_none) {
        None => Some(known.iter().map(|c| c.clone().expect("solved")).collect()),
        Some(k) => {
            for guess in [GQ::one(), GQ::from_int(-1), GQ::i(), -GQ::i()] {
                let mut trial = known.clone();
                trial[k] = Some(guess);
                if let Some(s) = solve_scales(eqs, &mut trial) {
                    return Some(s);
                }
            }
            None
        }
    }
}
