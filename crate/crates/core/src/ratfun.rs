//! Exact univariate polynomials and rational functions over `BigInt`.
//!
//! A [`RationalFunction`] is always kept in canonical form:
//!   1. numerator and denominator are coprime over the rationals,
//!   2. the joint integer content of both polynomials is 1,
//!   3. the lowest-degree nonzero coefficient of the denominator is positive,
//!      so power series with positive constant term print as `1 - 3*t`, not `-1 + 3*t`.
//!
//! Two values are equal as functions iff their canonical forms are identical,
//! so `PartialEq` is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFunError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("rational function has a pole at t = {point}")]
    Pole { point: BigRational },
    #[error("denominator has zero constant term; no power series expansion at 0")]
    NotAPowerSeries,
    #[error("taylor coefficient {index} is not an integer")]
    NonIntegralCoefficient { index: usize },
    #[error("malformed coefficient {0:?}")]
    BadCoefficient(String),
}

/// Dense polynomial in `t`; `coeffs[i]` is the coefficient of `t^i`.
///
/// The highest stored coefficient is never zero; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `1 + t + ... + t^k`
    pub fn geometric(k: usize) -> Self {
        Polynomial {
            coeffs: vec![BigInt::one(); k + 1],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest-degree nonzero coefficient.
    pub fn lowest(&self) -> Option<&BigInt> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Non-negative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `c`; `c` must divide all of them.
    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, point: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * point + BigRational::from_integer(c.clone())
            })
    }

    /// Pseudo-remainder of `self` by `divisor`, made primitive along the way.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let d_deg = divisor.degree().expect("pseudo_rem by zero");
        let d_lead = divisor.leading().unwrap();
        let mut r = self.clone();
        while let Some(r_deg) = r.degree() {
            if r_deg < d_deg {
                break;
            }
            let r_lead = r.leading().unwrap().clone();
            let lhs = r.scale(d_lead);
            let rhs = divisor.scale(&r_lead).shift(r_deg - d_deg);
            r = &lhs - &rhs;
            r = r.primitive_part();
        }
        r
    }

    /// Primitive gcd over `Q[t]` scaled to a primitive integer polynomial with
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Quotient of an exact division in `Z[t]`.
    ///
    /// Panics if `divisor` does not divide `self` with integral quotient.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let d_deg = divisor.degree().expect("div_exact by zero");
        let d_lead = divisor.leading().unwrap();
        let Some(n_deg) = self.degree() else {
            return Self::zero();
        };
        assert!(n_deg >= d_deg, "div_exact: divisor degree too large");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n_deg - d_deg + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d_deg];
            let (q, r) = top.div_rem(d_lead);
            assert!(r.is_zero(), "div_exact: inexact division");
            if !q.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * dc;
                }
            }
            quot[k] = q;
        }
        assert!(
            rem.iter().all(Zero::is_zero),
            "div_exact: nonzero remainder"
        );
        Self::new(quot)
    }

    /// Reads `c_k == c_{deg-k}` for all k.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    pub fn latex(&self) -> String {
        render_terms(&self.coeffs, Style::Latex)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Polynomial::new(coeffs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $trait:ident, $method:ident) => {
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Polynomial, Add, add);
forward_owned_binop!(Polynomial, Sub, sub);
forward_owned_binop!(Polynomial, Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Plain,
    Latex,
}

/// Ascending-power rendering, e.g. `1 + 2*t - t^3` or `1 + 2t - t^{3}`.
fn render_terms(coeffs: &[BigInt], style: Style) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let var = match (k, style) {
            (0, _) => String::new(),
            (1, _) => "t".to_string(),
            (_, Style::Plain) => format!("t^{k}"),
            (_, Style::Latex) => format!("t^{{{k}}}"),
        };
        if k == 0 {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(&var);
        } else if style == Style::Plain {
            out.push_str(&format!("{magnitude}*{var}"));
        } else {
            out.push_str(&format!("{magnitude}{var}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(&self.coeffs, Style::Plain))
    }
}

/// Quotient of two integer polynomials in canonical form (see module docs).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds `num / den` in canonical form.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(mut num: Polynomial, mut den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        if g.degree() != Some(0) {
            num = num.div_exact(&g);
            den = den.div_exact(&g);
        }
        let mut c = num.content().gcd(&den.content());
        if den.lowest().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::normalize(p, Polynomial::one())
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_poly(Polynomial::from(c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a constant (always `1` in canonical form
    /// unless the numerator has non-unit content).
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The polynomial value, if the denominator is `1`.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_one().then_some(&self.num)
    }

    /// Re-normalizes an already canonical value; identity on valid input.
    pub fn renormalize(&self) -> Self {
        Self::normalize(self.num.clone(), self.den.clone())
    }

    pub fn invert(&self) -> Result<Self, RatFunError> {
        if self.is_zero() {
            return Err(RatFunError::DivisionByZero);
        }
        // Swapping a coprime pair keeps it coprime; only the sign may change.
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lowest().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RationalFunction { num, den })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RatFunError> {
        Ok(self * &rhs.invert()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
        .renormalize()
    }

    pub fn evaluate(&self, point: &BigRational) -> Result<BigRational, RatFunError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(RatFunError::Pole {
                point: point.clone(),
            });
        }
        Ok(self.num.eval(point) / d)
    }

    /// Taylor coefficients `0..=n` at `t = 0`, via the linear recurrence
    /// `den[0] * c_k = num[k] - sum_{j>=1} den[j] * c_{k-j}`.
    pub fn taylor_coefficients(&self, n: usize) -> Result<Vec<BigInt>, RatFunError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(RatFunError::NotAPowerSeries);
        }
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.num.coeff(k);
            for j in 1..den.len().min(k + 1) {
                acc -= &den[j] * &out[k - j];
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(RatFunError::NonIntegralCoefficient { index: k });
            }
            out.push(q);
        }
        Ok(out)
    }

    pub fn latex(&self) -> String {
        if self.den.is_one() {
            self.num.latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.latex(), self.den.latex())
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::normalize(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

forward_owned_binop!(RationalFunction, Add, add);
forward_owned_binop!(RationalFunction, Sub, sub);
forward_owned_binop!(RationalFunction, Mul, mul);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// Wire form: coefficient arrays (index 0 first) of decimal strings.
#[derive(Serialize, Deserialize)]
struct RationalFunctionWire {
    numerator: Vec<String>,
    denominator: Vec<String>,
}

fn decimal_strings(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn parse_decimals(raw: &[String]) -> Result<Polynomial, RatFunError> {
    raw.iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| RatFunError::BadCoefficient(s.clone()))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Polynomial::new)
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RationalFunctionWire {
            numerator: decimal_strings(&self.num),
            denominator: decimal_strings(&self.den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = RationalFunctionWire::deserialize(deserializer)?;
        let num = parse_decimals(&wire.numerator).map_err(D::Error::custom)?;
        let den = parse_decimals(&wire.denominator).map_err(D::Error::custom)?;
        RationalFunction::new(num, den).map_err(D::Error::custom)
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
