use rand::Rng;
use serde_json::Value;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::AlgebraError;
use crate::field::Field;

/// Element `re + im·i` of the outer field ℂ = F(i).
///
/// The outer unit `i` commutes with every internal unit; its conjugation is
/// the involution τ.
#[derive(Clone, Debug, PartialEq)]
pub struct Cx<F> {
    pub re: F,
    pub im: F,
}

impl<F: Field> Cx<F> {
    pub fn new(re: F, im: F) -> Self {
        Cx { re, im }
    }
    pub fn real(re: F) -> Self {
        Cx { re, im: F::zero() }
    }
    pub fn zero() -> Self {
        Cx::real(F::zero())
    }
    pub fn one() -> Self {
        Cx::real(F::one())
    }
    pub fn i() -> Self {
        Cx::new(F::zero(), F::one())
    }
    pub fn from_i64(n: i64) -> Self {
        Cx::real(F::from_i64(n))
    }
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Cx::real(F::from_ratio(n, d))
    }

    /// Primitive cube root of unity `−1/2 + (√3/2)·i`.
    pub fn omega() -> Self {
        Cx::new(F::from_ratio(-1, 2), F::sqrt3().mul_ref(&F::half()))
    }

    /// Outer conjugation (τ on scalars of the outer field).
    pub fn conj(&self) -> Self {
        Cx::new(self.re.clone(), self.im.neg_ref())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, s: &F) -> Self {
        Cx::new(self.re.mul_ref(s), self.im.mul_ref(s))
    }

    /// `|z|²` as an element of F.
    pub fn abs2(&self) -> F {
        self.re.mul_ref(&self.re).add_ref(&self.im.mul_ref(&self.im))
    }

    /// Modulus in f64, used for residuals.
    pub fn abs_f64(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    pub fn inv(&self) -> Self {
        let n = self.abs2();
        Cx::new(self.re.div_ref(&n), self.im.neg_ref().div_ref(&n))
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Cx::new(F::random(rng), F::random(rng))
    }

    pub fn random_real<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Cx::real(F::random(rng))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(vec![self.re.to_json(), self.im.to_json()])
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        match v.as_array().map(Vec::as_slice) {
            Some([re, im]) => Ok(Cx::new(F::from_json(re)?, F::from_json(im)?)),
            _ => Err(AlgebraError::Parse(format!("expected [re, im], got {v}"))),
        }
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Cx<f64> {
    pub fn from_c64(z: num_complex::Complex64) -> Self {
        Cx::new(z.re, z.im)
    }
}

impl<'a, F: Field> Add<&'a Cx<F>> for &'a Cx<F> {
    type Output = Cx<F>;
    fn add(self, o: &Cx<F>) -> Cx<F> {
        Cx::new(self.re.add_ref(&o.re), self.im.add_ref(&o.im))
    }
}

impl<'a, F: Field> Sub<&'a Cx<F>> for &'a Cx<F> {
    type Output = Cx<F>;
    fn sub(self, o: &Cx<F>) -> Cx<F> {
        Cx::new(self.re.sub_ref(&o.re), self.im.sub_ref(&o.im))
    }
}

impl<'a, F: Field> Mul<&'a Cx<F>> for &'a Cx<F> {
    type Output = Cx<F>;
    fn mul(self, o: &Cx<F>) -> Cx<F> {
        // Real operands are common (real rings); skip the dead products.
        if self.im.is_zero() {
            return o.scale(&self.re);
        }
        if o.im.is_zero() {
            return self.scale(&o.re);
        }
        Cx::new(
            self.re.mul_ref(&o.re).sub_ref(&self.im.mul_ref(&o.im)),
            self.re.mul_ref(&o.im).add_ref(&self.im.mul_ref(&o.re)),
        )
    }
}

impl<'a, F: Field> Div<&'a Cx<F>> for &'a Cx<F> {
    type Output = Cx<F>;
    fn div(self, o: &Cx<F>) -> Cx<F> {
        if o.im.is_zero() {
            return Cx::new(self.re.div_ref(&o.re), self.im.div_ref(&o.re));
        }
        self * &o.inv()
    }
}

impl<F: Field> Neg for &Cx<F> {
    type Output = Cx<F>;
    fn neg(self) -> Cx<F> {
        Cx::new(self.re.neg_ref(), self.im.neg_ref())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr<Cx<F>> for Cx<F> {
            type Output = Cx<F>;
            fn $m(self, o: Cx<F>) -> Cx<F> { (&self).$m(&o) }
        }
        impl<'a, F: Field> $tr<&'a Cx<F>> for Cx<F> {
            type Output = Cx<F>;
            fn $m(self, o: &Cx<F>) -> Cx<F> { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl<F: Field> Neg for Cx<F> {
    type Output = Cx<F>;
    fn neg(self) -> Cx<F> {
        -&self
    }
}
