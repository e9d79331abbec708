//! Base-field backends.
//!
//! Two backends implement [`Field`]: [`Exact`], the quadratic field
//! ℚ(√3) over arbitrary-precision rationals, and `f64`. The √3 adjunction
//! is what lets the exact backend hold cube roots of unity, which the kernel
//! computations need; every other exact computation stays inside ℚ, where
//! the arithmetic takes a fast path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde_json::Value;
use std::fmt;
use std::str::FromStr;

use crate::error::AlgebraError;

/// Scalar field the whole library is generic over.
///
/// Arithmetic goes through `&self` methods so generic code can avoid
/// cloning big rationals on every operation.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    /// `true` for exact arithmetic (residuals are exactly zero or not).
    const EXACT: bool;
    /// Backend name used in reports: `"exact"` or `"float"`.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_ratio(n: i64, d: i64) -> Self;
    /// √3, exactly representable in both backends.
    fn sqrt3() -> Self;

    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    /// Division; callers guarantee `o` is nonzero.
    fn div_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;
    /// Square root inside the field, if it exists there.
    fn sqrt(&self) -> Option<Self>;

    /// A random "small" element: rationals with small numerators and
    /// denominators for the exact backend, uniform in [-1, 1] for floats.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, AlgebraError>;

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }

    fn is_one(&self) -> bool {
        self.sub_ref(&Self::one()).is_zero()
    }

    /// The value as a rational number, when it is one exactly.
    fn to_rational(&self) -> Option<BigRational> {
        None
    }

    /// Treats `self` as zero up to `tol` (exact backends ignore `tol`).
    fn is_negligible(&self, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.to_f64().abs() <= tol
        }
    }
}

impl Field for f64 {
    const EXACT: bool = false;
    const NAME: &'static str = "float";

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }
    fn sqrt3() -> Self {
        3f64.sqrt()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| f64::sqrt(*self))
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen_range(-1.0..=1.0)
    }
    fn to_json(&self) -> Value {
        serde_json::json!(self)
    }
    fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        v.as_f64()
            .ok_or_else(|| AlgebraError::Parse(format!("expected a number, got {v}")))
    }
}

/// Exact element `a + b·√3` of ℚ(√3).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Exact {
    a: BigRational,
    b: BigRational,
}

impl Exact {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Exact { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Exact { a, b: BigRational::zero() }
    }

    /// Rational part.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of √3.
    pub fn sqrt3_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
}

fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Huge numerator/denominator pairs: scale down by bit length.
        let shift = r.numer().bits().max(r.denom().bits()) as i64 - 900;
        let (n, d) = if shift > 0 {
            (r.numer() >> shift.max(0) as usize, r.denom() >> shift.max(0) as usize)
        } else {
            (r.numer().clone(), r.denom().clone())
        };
        n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
    })
}

// Rational arithmetic with shortcuts for the zeros, units and integers that
// dominate sparse matrices; the general case reduces by gcd.

fn rmul(x: &BigRational, y: &BigRational) -> BigRational {
    if x.is_zero() || y.is_zero() {
        return BigRational::zero();
    }
    if x.is_one() {
        return y.clone();
    }
    if y.is_one() {
        return x.clone();
    }
    if x.is_integer() && y.is_integer() {
        return BigRational::from_integer(x.numer() * y.numer());
    }
    x * y
}

fn radd(x: &BigRational, y: &BigRational) -> BigRational {
    if x.is_zero() {
        return y.clone();
    }
    if y.is_zero() {
        return x.clone();
    }
    if x.is_integer() && y.is_integer() {
        return BigRational::from_integer(x.numer() + y.numer());
    }
    x + y
}

fn rsub(x: &BigRational, y: &BigRational) -> BigRational {
    if y.is_zero() {
        return x.clone();
    }
    if x.is_zero() {
        return -y;
    }
    if x.is_integer() && y.is_integer() {
        return BigRational::from_integer(x.numer() - y.numer());
    }
    x - y
}

fn rat_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rat(s: &str) -> Result<BigRational, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", rat_str(&self.a))
        } else {
            write!(f, "{}+{}*sqrt3", rat_str(&self.a), rat_str(&self.b))
        }
    }
}

impl fmt::Debug for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Exact {
    type Err = AlgebraError;

    /// Accepts `"p/q"` or `"p/q+r/s*sqrt3"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.strip_suffix("*sqrt3") {
            Some(head) => {
                // Split at the last '+' that is not a leading sign.
                let idx = head
                    .char_indices()
                    .skip(1)
                    .filter(|&(_, c)| c == '+')
                    .map(|(i, _)| i)
                    .last()
                    .ok_or_else(|| AlgebraError::Parse(format!("malformed exact number {s:?}")))?;
                Ok(Exact::new(parse_rat(&head[..idx])?, parse_rat(&head[idx + 1..])?))
            }
            None => Ok(Exact::rational(parse_rat(s)?)),
        }
    }
}

impl Field for Exact {
    const EXACT: bool = true;
    const NAME: &'static str = "exact";

    fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    fn zero() -> Self {
        Exact::rational(BigRational::zero())
    }
    fn one() -> Self {
        Exact::rational(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Exact::rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        Exact::rational(Self::ratio(n, d))
    }
    fn sqrt3() -> Self {
        Exact::new(BigRational::zero(), BigRational::one())
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.b.is_zero() && o.b.is_zero() {
            return Exact::rational(radd(&self.a, &o.a));
        }
        Exact::new(radd(&self.a, &o.a), radd(&self.b, &o.b))
    }
    fn sub_ref(&self, o: &Self) -> Self {
        if self.b.is_zero() && o.b.is_zero() {
            return Exact::rational(rsub(&self.a, &o.a));
        }
        Exact::new(rsub(&self.a, &o.a), rsub(&self.b, &o.b))
    }
    fn mul_ref(&self, o: &Self) -> Self {
        match (self.b.is_zero(), o.b.is_zero()) {
            (true, true) => Exact::rational(rmul(&self.a, &o.a)),
            (true, false) => Exact::new(rmul(&self.a, &o.a), rmul(&self.a, &o.b)),
            (false, true) => Exact::new(rmul(&self.a, &o.a), rmul(&self.b, &o.a)),
            (false, false) => {
                let bb = rmul(&self.b, &o.b);
                Exact::new(
                    radd(&rmul(&self.a, &o.a), &(&bb * BigInt::from(3))),
                    radd(&rmul(&self.a, &o.b), &rmul(&self.b, &o.a)),
                )
            }
        }
    }
    fn div_ref(&self, o: &Self) -> Self {
        if o.b.is_zero() {
            return Exact::new(&self.a / &o.a, &self.b / &o.a);
        }
        // (a + b√3)⁻¹ = (a − b√3) / (a² − 3b²); the norm is nonzero for o ≠ 0.
        let three = BigRational::from_integer(BigInt::from(3));
        let norm = &o.a * &o.a - three * (&o.b * &o.b);
        let conj = Exact::new(&o.a / &norm, -(&o.b / &norm));
        self.mul_ref(&conj)
    }
    fn neg_ref(&self) -> Self {
        Exact::new(-&self.a, -&self.b)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn to_f64(&self) -> f64 {
        if self.b.is_zero() {
            rat_to_f64(&self.a)
        } else {
            rat_to_f64(&self.a) + rat_to_f64(&self.b) * 3f64.sqrt()
        }
    }
    fn sqrt(&self) -> Option<Self> {
        // Only square roots of rational squares are attempted.
        if !self.b.is_zero() || self.a.is_negative() {
            return None;
        }
        let n = self.a.numer().sqrt();
        let d = self.a.denom().sqrt();
        (&n * &n == *self.a.numer() && &d * &d == *self.a.denom())
            .then(|| Exact::rational(BigRational::new(n, d)))
    }
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let n = rng.gen_range(-4i64..=4);
        let d = rng.gen_range(1i64..=3);
        Self::from_ratio(n, d)
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        match v {
            Value::String(s) => s.parse(),
            Value::Number(n) if n.is_i64() => Ok(Self::from_i64(n.as_i64().unwrap_or_default())),
            _ => Err(AlgebraError::Parse(format!("expected a \"p/q\" string, got {v}"))),
        }
    }
}
