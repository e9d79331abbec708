use rand::Rng;
use serde_json::{json, Value};
use std::ops::{Add, Mul, Neg, Sub};

use super::{Cx, RingTag};
use crate::error::AlgebraError;
use crate::field::Field;

/// Element of a composition ring: one outer-field coefficient per internal
/// unit. Real rings keep every imaginary part at zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Scalar<F> {
    tag: RingTag,
    c: Vec<Cx<F>>,
}

impl<F: Field> Scalar<F> {
    pub fn new(tag: RingTag, c: Vec<Cx<F>>) -> Result<Self, AlgebraError> {
        let expected = tag.internal_dim();
        if c.len() != expected {
            return Err(AlgebraError::Arity { expected, got: c.len() });
        }
        if !tag.is_complexified() && c.iter().any(|z| !z.is_real()) {
            return Err(AlgebraError::Parse(format!("{tag} coefficients must be real")));
        }
        Ok(Scalar { tag, c })
    }

    /// Builds from coefficients the caller knows are well formed.
    pub(crate) fn raw(tag: RingTag, c: Vec<Cx<F>>) -> Self {
        debug_assert_eq!(c.len(), tag.internal_dim());
        Scalar { tag, c }
    }

    pub fn from_reals(tag: RingTag, c: &[F]) -> Result<Self, AlgebraError> {
        Scalar::new(tag, c.iter().cloned().map(Cx::real).collect())
    }

    pub fn zero(tag: RingTag) -> Self {
        Scalar::raw(tag, vec![Cx::zero(); tag.internal_dim()])
    }

    pub fn one(tag: RingTag) -> Self {
        Scalar::outer(tag, Cx::one())
    }

    /// Embeds an outer-field number as `z·1`.
    pub fn outer(tag: RingTag, z: Cx<F>) -> Self {
        let mut c = vec![Cx::zero(); tag.internal_dim()];
        c[0] = z;
        Scalar::raw(tag, c)
    }

    /// Internal unit `u_a` with coefficient `z`.
    pub fn unit(tag: RingTag, a: usize, z: Cx<F>) -> Self {
        let mut c = vec![Cx::zero(); tag.internal_dim()];
        c[a] = z;
        Scalar::raw(tag, c)
    }

    /// The idempotent ι = (1 + i·e₁)/2 of ℂ^C.
    pub fn iota() -> Self {
        Scalar::raw(
            RingTag::CC,
            vec![Cx::from_ratio(1, 2), Cx::new(F::zero(), F::half())],
        )
    }

    /// The internal cube root of unity 𝝎 = −1/2 + (√3/2)·e₁ of ℂ or ℂ^C.
    pub fn internal_omega(tag: RingTag) -> Result<Self, AlgebraError> {
        if !matches!(tag, RingTag::C | RingTag::CC) {
            return Err(AlgebraError::Unsupported { op: "internal omega", ring: tag });
        }
        let w = Cx::<F>::omega();
        Ok(Scalar::raw(tag, vec![Cx::real(w.re), Cx::real(w.im)]))
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn coeffs(&self) -> &[Cx<F>] {
        &self.c
    }

    pub fn coeff(&self, a: usize) -> &Cx<F> {
        &self.c[a]
    }

    /// Scalar (unit-0) part: the "real part" over the outer field.
    pub fn re(&self) -> &Cx<F> {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Cx::is_zero)
    }

    /// Lies in the outer field (no internal-unit components).
    pub fn is_outer(&self) -> bool {
        self.c[1..].iter().all(Cx::is_zero)
    }

    fn check(&self, o: &Self) -> Result<(), AlgebraError> {
        if self.tag == o.tag {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch(self.tag, o.tag))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.check(o)?;
        Ok(self + o)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.check(o)?;
        Ok(self - o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.check(o)?;
        Ok(self * o)
    }

    pub fn scale(&self, z: &Cx<F>) -> Self {
        Scalar::raw(self.tag, self.c.iter().map(|c| c * z).collect())
    }

    pub fn scale_real(&self, s: &F) -> Self {
        Scalar::raw(self.tag, self.c.iter().map(|c| c.scale(s)).collect())
    }

    /// Internal conjugation: negates the internal units, fixes `i`.
    pub fn conj(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(a, z)| if a == 0 { z.clone() } else { -z })
            .collect();
        Scalar::raw(self.tag, c)
    }

    /// Outer conjugation τ (complex conjugation of every coefficient).
    /// On real rings this is the identity.
    pub fn tau(&self) -> Self {
        Scalar::raw(self.tag, self.c.iter().map(Cx::conj).collect())
    }

    /// τ together with a flag that is `true` when τ is degenerate (the ring
    /// has no outer unit, so τ is the identity).
    pub fn tau_flagged(&self) -> (Self, bool) {
        (self.tau(), !self.tag.is_complexified())
    }

    /// γ: the ℂ-linear conjugation of the ℂ-part (negates `e₁`, `e₃`).
    pub fn gamma(&self) -> Result<Self, AlgebraError> {
        if !self.tag.has_gamma() {
            return Err(AlgebraError::Unsupported { op: "gamma", ring: self.tag });
        }
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(a, z)| if self.tag.gamma_sign(a) < 0 { -z } else { z.clone() })
            .collect();
        Ok(Scalar::raw(self.tag, c))
    }

    /// `N(x) = x·x̄`, an element of the outer field.
    pub fn cnorm(&self) -> Cx<F> {
        let mut acc = Cx::zero();
        for (a, z) in self.c.iter().enumerate() {
            let t = z * z;
            acc = if self.tag.unit_norm(a) > 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    /// Symmetric bilinear form `(x, y) = Re(x·ȳ)`.
    pub fn dot(&self, o: &Self) -> Cx<F> {
        let mut acc = Cx::zero();
        for (a, (x, y)) in self.c.iter().zip(&o.c).enumerate() {
            let t = x * y;
            acc = if self.tag.unit_norm(a) > 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    /// Inverse `x̄/N(x)`; fails when `N(x)` vanishes.
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        let n = self.cnorm();
        if n.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(self.conj().scale(&n.inv()))
    }

    /// Transport of a τγ-fixed element of ℂ^C or ℍ^C to the split ring
    /// (ℂ′ or ℍ′): `x + y·i·e₁ ↦ x + y·𝕚′`, `(…)e₂ ↦ (…)𝕛`.
    pub fn split_embed(&self) -> Result<Self, AlgebraError> {
        let target = self
            .tag
            .split_form()
            .ok_or(AlgebraError::Unsupported { op: "split_embed", ring: self.tag })?;
        let mut out = Vec::with_capacity(self.c.len());
        for (a, z) in self.c.iter().enumerate() {
            // τγ fixes u_a with a real coefficient when γ fixes u_a, and with
            // an imaginary one when γ negates it.
            let (keep, drop) = if self.tag.gamma_sign(a) > 0 { (&z.re, &z.im) } else { (&z.im, &z.re) };
            if !drop.is_zero() {
                return Err(AlgebraError::NotFixed(drop.to_f64().abs()));
            }
            out.push(Cx::real(keep.clone()));
        }
        Ok(Scalar::raw(target, out))
    }

    /// Inverse of [`Scalar::split_embed`].
    pub fn split_unembed(&self) -> Result<Self, AlgebraError> {
        let target = match self.tag {
            RingTag::Csplit => RingTag::CC,
            RingTag::Hsplit => RingTag::HC,
            t => return Err(AlgebraError::Unsupported { op: "split_unembed", ring: t }),
        };
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(a, z)| {
                if target.gamma_sign(a) > 0 {
                    Cx::real(z.re.clone())
                } else {
                    Cx::new(F::zero(), z.re.clone())
                }
            })
            .collect();
        Ok(Scalar::raw(target, c))
    }

    /// Largest coefficient modulus of `self − o` (f64, for residuals).
    pub fn distance(&self, o: &Self) -> f64 {
        self.c
            .iter()
            .zip(&o.c)
            .map(|(x, y)| (x - y).abs_f64())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.c.iter().map(Cx::abs_f64).fold(0.0, f64::max)
    }

    pub fn random<R: Rng + ?Sized>(tag: RingTag, rng: &mut R) -> Self {
        let c = (0..tag.internal_dim())
            .map(|_| if tag.is_complexified() { Cx::random(rng) } else { Cx::random_real(rng) })
            .collect();
        Scalar::raw(tag, c)
    }

    /// Random element with integer coefficients in `[-bound, bound]`.
    pub fn random_int<R: Rng + ?Sized>(tag: RingTag, bound: i64, rng: &mut R) -> Self {
        let mut int = || F::from_i64(rng.gen_range(-bound..=bound));
        let c = (0..tag.internal_dim())
            .map(|_| {
                let re = int();
                let im = if tag.is_complexified() { int() } else { F::zero() };
                Cx::new(re, im)
            })
            .collect();
        Scalar::raw(tag, c)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = if self.tag.is_complexified() {
            self.c.iter().map(Cx::to_json).collect()
        } else {
            self.c.iter().map(|z| z.re.to_json()).collect()
        };
        json!({ "ring": self.tag.as_str(), "coeffs": coeffs })
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let tag: RingTag = v
            .get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| AlgebraError::Parse("missing \"ring\"".into()))?
            .parse()?;
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| AlgebraError::Parse("missing \"coeffs\"".into()))?;
        let c = coeffs
            .iter()
            .map(|z| if tag.is_complexified() { Cx::from_json(z) } else { F::from_json(z).map(Cx::real) })
            .collect::<Result<Vec<_>, _>>()?;
        Scalar::new(tag, c)
    }
}

impl<'a, F: Field> Add<&'a Scalar<F>> for &'a Scalar<F> {
    type Output = Scalar<F>;
    fn add(self, o: &Scalar<F>) -> Scalar<F> {
        debug_assert_eq!(self.tag, o.tag);
        Scalar::raw(self.tag, self.c.iter().zip(&o.c).map(|(x, y)| x + y).collect())
    }
}

impl<'a, F: Field> Sub<&'a Scalar<F>> for &'a Scalar<F> {
    type Output = Scalar<F>;
    fn sub(self, o: &Scalar<F>) -> Scalar<F> {
        debug_assert_eq!(self.tag, o.tag);
        Scalar::raw(self.tag, self.c.iter().zip(&o.c).map(|(x, y)| x - y).collect())
    }
}

impl<'a, F: Field> Mul<&'a Scalar<F>> for &'a Scalar<F> {
    type Output = Scalar<F>;
    fn mul(self, o: &Scalar<F>) -> Scalar<F> {
        debug_assert_eq!(self.tag, o.tag);
        let n = self.c.len();
        let mut out = vec![Cx::zero(); n];
        for (a, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (s, k) = self.tag.unit_product(a, b);
                let t = x * y;
                out[k] = if s > 0 { &out[k] + &t } else { &out[k] - &t };
            }
        }
        Scalar::raw(self.tag, out)
    }
}

impl<F: Field> Neg for &Scalar<F> {
    type Output = Scalar<F>;
    fn neg(self) -> Scalar<F> {
        Scalar::raw(self.tag, self.c.iter().map(|z| -z).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr<Scalar<F>> for Scalar<F> {
            type Output = Scalar<F>;
            fn $m(self, o: Scalar<F>) -> Scalar<F> { (&self).$m(&o) }
        }
        impl<'a, F: Field> $tr<&'a Scalar<F>> for Scalar<F> {
            type Output = Scalar<F>;
            fn $m(self, o: &Scalar<F>) -> Scalar<F> { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<F: Field> Neg for Scalar<F> {
    type Output = Scalar<F>;
    fn neg(self) -> Scalar<F> {
        -&self
    }
}
