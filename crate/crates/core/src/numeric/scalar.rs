use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Rational `n/d` from machine integers. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"p/q"` or `"-p/q"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let err = || Error::Parse(s.to_string());
    if t.is_empty() {
        return Err(err());
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

/// Exact element of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

pub type GQ = GaussRational;

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(rat_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::real(rat(n, d))
    }

    pub fn zero() -> Self {
        GaussRational::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -&self.im }
    }

    /// |z|² = re² + im².
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(GaussRational { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Multiplication by i.
    pub fn mul_i(&self) -> Self {
        GaussRational { re: -&self.im, im: self.re.clone() }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussRational { re: &self.re * r, im: &self.im * r }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sign of a real value; `None` if the imaginary part is nonzero.
    pub fn real_sign(&self) -> Option<i8> {
        if !self.im.is_zero() {
            return None;
        }
        Some(if self.re.is_positive() {
            1
        } else if self.re.is_negative() {
            -1
        } else {
            0
        })
    }

    pub fn re_string(&self) -> String {
        self.re.to_string()
    }

    pub fn im_string(&self) -> String {
        self.im.to_string()
    }
}

impl From<Rational> for GaussRational {
    fn from(r: Rational) -> Self {
        GaussRational::real(r)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::from_int(n)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im = if self.im.is_one() {
            "i".to_string()
        } else if (-&self.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", self.im)
        };
        if self.re.is_zero() {
            write!(f, "{im}")
        } else if self.im.is_negative() {
            write!(f, "{}{}", self.re, im)
        } else {
            write!(f, "{}+{}", self.re, im)
        }
    }
}

fn parse_imag_term(term: &str, whole: &str) -> Result<Rational> {
    let stripped: String = term.chars().filter(|c| *c != 'i').collect();
    let (sign, body) = match stripped.strip_prefix('-') {
        Some(b) => ("-", b.to_string()),
        None => ("", stripped.trim_start_matches('+').to_string()),
    };
    let body = if body.is_empty() || body.starts_with('/') {
        format!("1{body}")
    } else {
        body
    };
    parse_rational(&format!("{sign}{body}")).map_err(|e| match e {
        Error::Parse(_) => Error::Parse(whole.to_string()),
        other => other,
    })
}

impl FromStr for GaussRational {
    type Err = Error;

    /// Accepts `a`, `bi`, `a+bi`, `a-bi` with rational `a`, `b`, e.g. `"i/2"`, `"1/3-2/5i"`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse(s.to_string()));
        }
        let bytes = t.as_bytes();
        let mut cuts = vec![0];
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/' {
                cuts.push(k);
            }
        }
        cuts.push(bytes.len());
        if cuts.len() > 3 {
            return Err(Error::Parse(s.to_string()));
        }
        let mut z = GaussRational::zero();
        let mut seen_re = false;
        let mut seen_im = false;
        for w in cuts.windows(2) {
            let term = &t[w[0]..w[1]];
            if term.contains('i') {
                if seen_im {
                    return Err(Error::Parse(s.to_string()));
                }
                seen_im = true;
                z.im = parse_imag_term(term, s)?;
            } else {
                if seen_re {
                    return Err(Error::Parse(s.to_string()));
                }
                seen_re = true;
                let term = term.trim_start_matches('+');
                z.re = parse_rational(term).map_err(|e| match e {
                    Error::Parse(_) => Error::Parse(s.to_string()),
                    other => other,
                })?;
            }
        }
        Ok(z)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b GaussRational> for &'a GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: &'b GaussRational) -> GaussRational {
                let f: fn(&GaussRational, &GaussRational) -> GaussRational = $body;
                f(self, rhs)
            }
        }
        impl $tr<GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: GaussRational) -> GaussRational {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: &'b GaussRational) -> GaussRational {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<GaussRational> for &'a GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: GaussRational) -> GaussRational {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussRational { re: &a.re + &b.re, im: &a.im + &b.im });
forward_binop!(Sub, sub, |a, b| GaussRational { re: &a.re - &b.re, im: &a.im - &b.im });
forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        return GaussRational::real(&a.re * &b.re);
    }
    GaussRational {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
});

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -&self.re, im: -&self.im }
    }
}

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign<GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: GaussRational) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: &GaussRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl SubAssign<GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: GaussRational) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl MulAssign<&GaussRational> for GaussRational {
    fn mul_assign(&mut self, rhs: &GaussRational) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for GaussRational {
    fn sum<I: Iterator<Item = GaussRational>>(iter: I) -> Self {
        let mut acc = GaussRational::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

/// Operation selector for [`gq_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GqOp {
    Add,
    Mul,
    Div,
    Conj,
}

/// Uniform entry point over the four scalar operations. `Conj` ignores `b`.
pub fn gq_arith(a: &GaussRational, b: &GaussRational, op: GqOp) -> Result<GaussRational> {
    match op {
        GqOp::Add => Ok(a + b),
        GqOp::Mul => Ok(a * b),
        GqOp::Div => a.checked_div(b),
        GqOp::Conj => Ok(a.conj()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GQ {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(gq_arith(&g("1+i"), &g("1-i"), GqOp::Mul).unwrap(), GQ::from_int(2));
        let x = g("3/4-2/5i");
        assert_eq!(x.conj().conj(), x);
        assert_eq!(
            gq_arith(&g("3/4"), &GQ::zero(), GqOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(g("2+i").checked_div(&g("2+i")).unwrap(), GQ::one());
    }

    #[test]
    fn parsing() {
        assert_eq!(g("i/2"), GQ::new(rat(0, 1), rat(1, 2)));
        assert_eq!(g("-1/3"), GQ::from_frac(-1, 3));
        assert_eq!(g("1/2+3/4i"), GQ::new(rat(1, 2), rat(3, 4)));
        assert_eq!(g("-i"), GQ::new(rat(0, 1), rat(-1, 1)));
        assert_eq!(g("2-3i"), GQ::new(rat(2, 1), rat(-3, 1)));
        assert!("17/".parse::<GQ>().is_err());
        assert!("x".parse::<GQ>().is_err());
        assert_eq!("1/0".parse::<GQ>(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "1/2", "i", "-i", "3/2-1/4i", "-7+2i", "5/3i"] {
            let z = g(s);
            assert_eq!(g(&z.to_string()), z, "{s}");
        }
    }
}
