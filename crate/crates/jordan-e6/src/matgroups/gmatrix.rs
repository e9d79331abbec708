use serde_json::{json, Value};
use std::ops::{Add, Mul, Neg, Sub};

use super::fmat::FMat;
use crate::algebra::{Cx, RingTag, Scalar};
use crate::error::{AlgebraError, GroupError};
use crate::field::Field;

/// Square matrix over a ring.
///
/// Determinants and inverses are available over the commutative rings
/// (ℝ, ℂ, ℂ′ and their complexifications). They are computed by splitting
/// the ring along its idempotents into two outer-field matrices, which
/// sidesteps the zero divisors of ℂ^C and ℂ′.
#[derive(Clone, Debug, PartialEq)]
pub struct GMatrix<F> {
    tag: RingTag,
    n: usize,
    e: Vec<Scalar<F>>,
}

impl<F: Field> GMatrix<F> {
    pub fn new(tag: RingTag, n: usize, e: Vec<Scalar<F>>) -> Result<Self, GroupError> {
        if e.len() != n * n {
            return Err(GroupError::Size { expected: n * n, got: e.len() });
        }
        if let Some(bad) = e.iter().find(|s| s.tag() != tag) {
            return Err(AlgebraError::RingMismatch(tag, bad.tag()).into());
        }
        Ok(GMatrix { tag, n, e })
    }

    pub fn from_fn(tag: RingTag, n: usize, mut f: impl FnMut(usize, usize) -> Scalar<F>) -> Self {
        let mut e = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                e.push(f(i, j));
            }
        }
        GMatrix { tag, n, e }
    }

    /// Matrix with outer-field entries.
    pub fn from_outer(tag: RingTag, n: usize, mut f: impl FnMut(usize, usize) -> Cx<F>) -> Self {
        Self::from_fn(tag, n, |i, j| Scalar::outer(tag, f(i, j)))
    }

    pub fn identity(tag: RingTag, n: usize) -> Self {
        Self::from_outer(tag, n, |i, j| if i == j { Cx::one() } else { Cx::zero() })
    }

    pub fn zero(tag: RingTag, n: usize) -> Self {
        Self::from_fn(tag, n, |_, _| Scalar::zero(tag))
    }

    pub fn diag(tag: RingTag, d: &[Scalar<F>]) -> Self {
        Self::from_fn(tag, d.len(), |i, j| if i == j { d[i].clone() } else { Scalar::zero(tag) })
    }

    pub fn diag_outer(tag: RingTag, d: &[Cx<F>]) -> Self {
        Self::from_outer(tag, d.len(), |i, j| if i == j { d[i].clone() } else { Cx::zero() })
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar<F> {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar<F>) {
        self.e[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Scalar<F>] {
        &self.e
    }

    fn check(&self, o: &Self) -> Result<(), GroupError> {
        if self.tag != o.tag {
            return Err(AlgebraError::RingMismatch(self.tag, o.tag).into());
        }
        if self.n != o.n {
            return Err(GroupError::Size { expected: self.n, got: o.n });
        }
        Ok(())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, GroupError> {
        self.check(o)?;
        Ok(self * o)
    }

    pub fn scale(&self, s: &Scalar<F>) -> Self {
        GMatrix { tag: self.tag, n: self.n, e: self.e.iter().map(|x| s * x).collect() }
    }

    pub fn scale_outer(&self, z: &Cx<F>) -> Self {
        GMatrix { tag: self.tag, n: self.n, e: self.e.iter().map(|x| x.scale(z)).collect() }
    }

    fn map(&self, f: impl Fn(&Scalar<F>) -> Scalar<F>) -> Self {
        GMatrix { tag: self.tag, n: self.n, e: self.e.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.tag, self.n, |i, j| self.at(j, i).clone())
    }

    /// Entrywise internal conjugation Ā.
    pub fn conj(&self) -> Self {
        self.map(Scalar::conj)
    }

    /// Entrywise outer conjugation τA.
    pub fn tau(&self) -> Self {
        self.map(Scalar::tau)
    }

    /// Entrywise γ.
    pub fn gamma(&self) -> Result<Self, GroupError> {
        let e = self.e.iter().map(Scalar::gamma).collect::<Result<Vec<_>, _>>()?;
        Ok(GMatrix { tag: self.tag, n: self.n, e })
    }

    /// Conjugate transpose with respect to internal conjugation, `A* = ᵗĀ`.
    pub fn star(&self) -> Self {
        Self::from_fn(self.tag, self.n, |i, j| self.at(j, i).conj())
    }

    /// Conjugate transpose with respect to the outer conjugation, `τᵗA`.
    pub fn tau_transpose(&self) -> Self {
        Self::from_fn(self.tag, self.n, |i, j| self.at(j, i).tau())
    }

    pub fn trace(&self) -> Scalar<F> {
        (0..self.n).fold(Scalar::zero(self.tag), |acc, i| &acc + self.at(i, i))
    }

    /// Re-tags a matrix into a larger ring (ℝ^C → ℂ^C, ℂ → ℂ^C, ...).
    pub fn embed(&self, target: RingTag) -> Result<Self, GroupError> {
        let (d0, d1) = (self.tag.internal_dim(), target.internal_dim());
        let ok = d0 <= d1
            && (target.is_complexified() || !self.tag.is_complexified())
            && (self.tag.is_split() == target.is_split() || d0 == 1);
        if !ok {
            return Err(AlgebraError::Unsupported { op: "embed", ring: self.tag }.into());
        }
        let e = self
            .e
            .iter()
            .map(|s| {
                let mut c = s.coeffs().to_vec();
                c.resize(d1, Cx::zero());
                Scalar::raw(target, c)
            })
            .collect();
        Ok(GMatrix { tag: target, n: self.n, e })
    }

    /// The two outer-field components along the ring's idempotents.
    pub fn split(&self) -> Result<(FMat<F>, FMat<F>), GroupError> {
        let n = self.n;
        let comp = |k: usize| -> FMat<F> {
            FMat::from_fn(n, |i, j| {
                let c = self.at(i, j).coeffs();
                match self.tag {
                    RingTag::R | RingTag::RC => c[0].clone(),
                    RingTag::Csplit => if k == 0 { &c[0] + &c[1] } else { &c[0] - &c[1] },
                    _ => {
                        let ix = &Cx::i() * &c[1];
                        if k == 0 { &c[0] + &ix } else { &c[0] - &ix }
                    }
                }
            })
        };
        match self.tag {
            RingTag::R | RingTag::RC => {
                let a = comp(0);
                Ok((a.clone(), a))
            }
            RingTag::C => {
                let a = comp(0);
                let b = a.conj();
                Ok((a, b))
            }
            RingTag::CC | RingTag::Csplit => Ok((comp(0), comp(1))),
            t => Err(AlgebraError::Unsupported { op: "split (noncommutative ring)", ring: t }.into()),
        }
    }

    /// Inverse of [`GMatrix::split`].
    pub fn join(tag: RingTag, a: &FMat<F>, b: &FMat<F>) -> Self {
        let half = Cx::from_ratio(1, 2);
        let n = a.n;
        Self::from_fn(tag, n, |i, j| {
            let (x, y) = (a.at(i, j), b.at(i, j));
            match tag {
                RingTag::R => Scalar::raw(tag, vec![Cx::real(x.re.clone())]),
                RingTag::RC => Scalar::raw(tag, vec![x.clone()]),
                RingTag::C => Scalar::raw(tag, vec![Cx::real(x.re.clone()), Cx::real(x.im.clone())]),
                RingTag::Csplit => Scalar::raw(
                    tag,
                    vec![Cx::real(((x + y) * &half).re), Cx::real(((x - y) * &half).re)],
                ),
                _ => {
                    let x0 = (x + y) * &half;
                    // (x − y)/(2i) = −i(x − y)/2
                    let x1 = &(x - y) * &Cx::new(F::zero(), F::from_ratio(-1, 2));
                    Scalar::raw(tag, vec![x0, x1])
                }
            }
        })
    }

    fn join_scalar(tag: RingTag, a: Cx<F>, b: Cx<F>) -> Scalar<F> {
        let (fa, fb) = (FMat { n: 1, d: vec![a] }, FMat { n: 1, d: vec![b] });
        Self::join(tag, &fa, &fb).e.pop().expect("1x1")
    }

    pub fn det(&self) -> Result<Scalar<F>, GroupError> {
        let (a, b) = self.split()?;
        Ok(Self::join_scalar(self.tag, a.det(), b.det()))
    }

    pub fn inverse(&self) -> Result<Self, GroupError> {
        let (a, b) = self.split()?;
        let ai = a.inverse().ok_or(GroupError::Singular)?;
        let bi = match self.tag {
            RingTag::R | RingTag::RC => ai.clone(),
            RingTag::C => ai.conj(),
            _ => b.inverse().ok_or(GroupError::Singular)?,
        };
        Ok(Self::join(self.tag, &ai, &bi))
    }

    /// Matrix exponential (float backend), computed componentwise.
    pub fn exp(&self) -> Result<Self, GroupError> {
        let (a, b) = self.split()?;
        let ea = a.exp();
        let eb = match self.tag {
            RingTag::R | RingTag::RC => ea.clone(),
            RingTag::C => ea.conj(),
            _ => b.exp(),
        };
        Ok(Self::join(self.tag, &ea, &eb))
    }

    pub fn distance(&self, o: &Self) -> f64 {
        self.e.iter().zip(&o.e).map(|(a, b)| a.distance(b)).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.e.iter().map(Scalar::max_abs).fold(0.0, f64::max)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        let d = self.distance(&Self::identity(self.tag, self.n));
        if F::EXACT {
            d == 0.0 && *self == Self::identity(self.tag, self.n)
        } else {
            d <= tol
        }
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.n)
            .map(|i| Value::Array((0..self.n).map(|j| self.at(i, j).to_json()).collect()))
            .collect();
        json!({ "ring": self.tag.as_str(), "n": self.n, "entries": rows })
    }

    pub fn from_json(v: &Value) -> Result<Self, GroupError> {
        let perr = |m: &str| GroupError::Algebra(AlgebraError::Parse(m.to_string()));
        let tag: RingTag = v
            .get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| perr("missing \"ring\""))?
            .parse()?;
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| perr("missing \"n\""))? as usize;
        let rows = v.get("entries").and_then(Value::as_array).ok_or_else(|| perr("missing \"entries\""))?;
        let mut e = Vec::with_capacity(n * n);
        for r in rows {
            for s in r.as_array().ok_or_else(|| perr("rows must be arrays"))? {
                e.push(Scalar::from_json(s)?);
            }
        }
        Self::new(tag, n, e)
    }
}

impl<'a, F: Field> Mul<&'a GMatrix<F>> for &'a GMatrix<F> {
    type Output = GMatrix<F>;
    fn mul(self, o: &GMatrix<F>) -> GMatrix<F> {
        debug_assert_eq!((self.tag, self.n), (o.tag, o.n));
        let n = self.n;
        let mut out = GMatrix::zero(self.tag, n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.e[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.e[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    out.e[i * n + j] = &out.e[i * n + j] + &(a * b);
                }
            }
        }
        out
    }
}

impl<'a, F: Field> Add<&'a GMatrix<F>> for &'a GMatrix<F> {
    type Output = GMatrix<F>;
    fn add(self, o: &GMatrix<F>) -> GMatrix<F> {
        GMatrix { tag: self.tag, n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect() }
    }
}

impl<'a, F: Field> Sub<&'a GMatrix<F>> for &'a GMatrix<F> {
    type Output = GMatrix<F>;
    fn sub(self, o: &GMatrix<F>) -> GMatrix<F> {
        GMatrix { tag: self.tag, n: self.n, e: self.e.iter().zip(&o.e).map(|(a, b)| a - b).collect() }
    }
}

impl<F: Field> Neg for &GMatrix<F> {
    type Output = GMatrix<F>;
    fn neg(self) -> GMatrix<F> {
        self.map(|s| -s)
    }
}
