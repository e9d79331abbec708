//! The Jordan algebras 𝔍(3, K).
//!
//! An element is a Hermitian 3×3 matrix
//!
//! ```text
//!     ⎛ ξ₁  x₃  x̄₂ ⎞
//! X = ⎜ x̄₃  ξ₂  x₁ ⎟
//!     ⎝ x₂  x̄₁  ξ₃ ⎠
//! ```
//!
//! with ξᵢ in the outer field and xᵢ in K. Coordinates follow the basis
//! `E₁, E₂, E₃, F₁(u₀), …, F₁(u_d), F₂(u₀), …, F₃(u_d)`.
//!
//! The cross product is the Freudenthal product
//! `X×Y = ½(2X∘Y − tr(X)Y − tr(Y)X + (tr X·tr Y − (X,Y))E)`,
//! normalized so that `(X, X, X) = 3·det X`.

use rand::Rng;
use serde_json::{json, Value};
use std::array;

use crate::algebra::{Cx, RingTag, Scalar};
use crate::error::{AlgebraError, JordanError};
use crate::field::Field;

/// Full 3×3 matrix over a ring, row-major.
pub type Mat3<F> = [[Scalar<F>; 3]; 3];

/// Element of 𝔍(3, K).
#[derive(Clone, Debug, PartialEq)]
pub struct JordanElement<F> {
    tag: RingTag,
    xi: [Cx<F>; 3],
    x: [Scalar<F>; 3],
}

/// Dimension of 𝔍(3, K) over the outer field.
pub fn jdim(tag: RingTag) -> usize {
    3 + 3 * tag.internal_dim()
}

impl<F: Field> JordanElement<F> {
    pub fn new(tag: RingTag, xi: [Cx<F>; 3], x: [Scalar<F>; 3]) -> Result<Self, JordanError> {
        for s in &x {
            if s.tag() != tag {
                return Err(AlgebraError::RingMismatch(tag, s.tag()).into());
            }
        }
        if !tag.is_complexified() && xi.iter().any(|z| !z.is_real()) {
            return Err(JordanError::DiagonalNotScalar);
        }
        Ok(JordanElement { tag, xi, x })
    }

    pub fn zero(tag: RingTag) -> Self {
        JordanElement {
            tag,
            xi: array::from_fn(|_| Cx::zero()),
            x: array::from_fn(|_| Scalar::zero(tag)),
        }
    }

    /// The unit E.
    pub fn identity(tag: RingTag) -> Self {
        Self::diag(tag, [Cx::one(), Cx::one(), Cx::one()])
    }

    pub fn diag(tag: RingTag, xi: [Cx<F>; 3]) -> Self {
        JordanElement { tag, xi, x: array::from_fn(|_| Scalar::zero(tag)) }
    }

    /// Eᵢ for `i ∈ {1, 2, 3}`.
    pub fn e(tag: RingTag, i: usize) -> Self {
        let mut xi = array::from_fn(|_| Cx::zero());
        xi[i - 1] = Cx::one();
        Self::diag(tag, xi)
    }

    /// Fᵢ(x) for `i ∈ {1, 2, 3}`.
    pub fn f(i: usize, x: Scalar<F>) -> Self {
        let tag = x.tag();
        let mut out = Self::zero(tag);
        out.x[i - 1] = x;
        out
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn xi(&self) -> &[Cx<F>; 3] {
        &self.xi
    }

    pub fn x(&self) -> &[Scalar<F>; 3] {
        &self.x
    }

    pub fn dim(&self) -> usize {
        jdim(self.tag)
    }

    /// Canonical basis `E₁, E₂, E₃, Fᵢ(u_a)`.
    pub fn basis(tag: RingTag) -> Vec<Self> {
        let mut b: Vec<Self> = (1..=3).map(|i| Self::e(tag, i)).collect();
        for i in 1..=3 {
            for a in 0..tag.internal_dim() {
                b.push(Self::f(i, Scalar::unit(tag, a, Cx::one())));
            }
        }
        b
    }

    pub fn coords(&self) -> Vec<Cx<F>> {
        let mut v: Vec<Cx<F>> = self.xi.to_vec();
        for s in &self.x {
            v.extend(s.coeffs().iter().cloned());
        }
        v
    }

    pub fn from_coords(tag: RingTag, v: &[Cx<F>]) -> Result<Self, JordanError> {
        let n = jdim(tag);
        if v.len() != n {
            return Err(JordanError::Dimension { expected: n, got: v.len() });
        }
        let d = tag.internal_dim();
        let x = array::from_fn(|i| Scalar::raw(tag, v[3 + i * d..3 + (i + 1) * d].to_vec()));
        Self::new(tag, [v[0].clone(), v[1].clone(), v[2].clone()], x)
    }

    pub fn to_matrix(&self) -> Mat3<F> {
        let t = self.tag;
        let s = |z: &Cx<F>| Scalar::outer(t, z.clone());
        let [x1, x2, x3] = &self.x;
        [
            [s(&self.xi[0]), x3.clone(), x2.conj()],
            [x3.conj(), s(&self.xi[1]), x1.clone()],
            [x2.clone(), x1.conj(), s(&self.xi[2])],
        ]
    }

    /// Reads a Hermitian matrix back. Exact inputs must be Hermitian on the
    /// nose; float inputs within `1e-9` relative to their size.
    pub fn from_matrix(m: &Mat3<F>) -> Result<Self, JordanError> {
        let tag = m[0][0].tag();
        let scale = m.iter().flatten().map(Scalar::max_abs).fold(1.0, f64::max);
        let tol = if F::EXACT { 0.0 } else { 1e-9 * scale };
        let mut resid: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let d = m[j][i].distance(&m[i][j].conj());
                resid = resid.max(d);
            }
        }
        if resid > tol {
            return Err(JordanError::NotHermitian(resid));
        }
        let xi = array::from_fn(|i| m[i][i].re().clone());
        let x = [m[1][2].clone(), m[2][0].clone(), m[0][1].clone()];
        Self::new(tag, xi, x)
    }

    fn check(&self, o: &Self) -> Result<(), JordanError> {
        if self.tag == o.tag {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch(self.tag, o.tag).into())
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        JordanElement {
            tag: self.tag,
            xi: array::from_fn(|i| &self.xi[i] + &o.xi[i]),
            x: array::from_fn(|i| &self.x[i] + &o.x[i]),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        JordanElement {
            tag: self.tag,
            xi: array::from_fn(|i| &self.xi[i] - &o.xi[i]),
            x: array::from_fn(|i| &self.x[i] - &o.x[i]),
        }
    }

    /// Multiplication by an outer-field scalar.
    pub fn scale(&self, z: &Cx<F>) -> Self {
        JordanElement {
            tag: self.tag,
            xi: array::from_fn(|i| &self.xi[i] * z),
            x: array::from_fn(|i| self.x[i].scale(z)),
        }
    }

    pub fn trace(&self) -> Cx<F> {
        &(&self.xi[0] + &self.xi[1]) + &self.xi[2]
    }

    /// X∘Y = ½(XY + YX).
    pub fn jmul(&self, o: &Self) -> Result<Self, JordanError> {
        self.check(o)?;
        Ok(self.jmul_unchecked(o))
    }

    fn jmul_unchecked(&self, o: &Self) -> Self {
        let a = self.to_matrix();
        let b = o.to_matrix();
        let half = F::half();
        let xi = array::from_fn(|i| {
            let mut acc = Cx::zero();
            for k in 0..3 {
                acc = &acc + (&a[i][k] * &b[k][i]).re();
                acc = &acc + (&b[i][k] * &a[k][i]).re();
            }
            acc.scale(&half)
        });
        // (row, col) positions of x₁, x₂, x₃.
        const POS: [(usize, usize); 3] = [(1, 2), (2, 0), (0, 1)];
        let x = array::from_fn(|n| {
            let (i, j) = POS[n];
            let mut acc = Scalar::zero(self.tag);
            for k in 0..3 {
                acc = &acc + &(&a[i][k] * &b[k][j]);
                acc = &acc + &(&b[i][k] * &a[k][j]);
            }
            acc.scale_real(&half)
        });
        JordanElement { tag: self.tag, xi, x }
    }

    /// Symmetric bilinear form `(X, Y) = tr(X∘Y)`.
    pub fn ip(&self, o: &Self) -> Result<Cx<F>, JordanError> {
        self.check(o)?;
        Ok(self.ip_unchecked(o))
    }

    fn ip_unchecked(&self, o: &Self) -> Cx<F> {
        let mut acc = Cx::zero();
        for i in 0..3 {
            acc = &acc + &(&self.xi[i] * &o.xi[i]);
        }
        let mut off = Cx::zero();
        for i in 0..3 {
            off = &off + &self.x[i].dot(&o.x[i]);
        }
        &acc + &(&off + &off)
    }

    /// Freudenthal cross product.
    pub fn cross(&self, o: &Self) -> Result<Self, JordanError> {
        self.check(o)?;
        Ok(self.cross_unchecked(o))
    }

    fn cross_unchecked(&self, o: &Self) -> Self {
        let jm = self.jmul_unchecked(o);
        let (tx, ty) = (self.trace(), o.trace());
        let c = &(&tx * &ty) - &self.ip_unchecked(o);
        let two_jm = jm.add(&jm);
        let v = two_jm
            .sub(&o.scale(&tx))
            .sub(&self.scale(&ty))
            .add(&Self::identity(self.tag).scale(&c));
        v.scale(&Cx::from_ratio(1, 2))
    }

    /// `det X = ξ₁ξ₂ξ₃ − ξ₁N(x₁) − ξ₂N(x₂) − ξ₃N(x₃) + 2·Re(x₁x₂x₃)`.
    pub fn det(&self) -> Cx<F> {
        let [a, b, c] = &self.xi;
        let [x1, x2, x3] = &self.x;
        let mut d = &(a * b) * c;
        d = &d - &(a * &x1.cnorm());
        d = &d - &(b * &x2.cnorm());
        d = &d - &(c * &x3.cnorm());
        let re = (&(x1 * x2) * x3).re().clone();
        &(&d + &re) + &re
    }

    /// Trilinear form `(X, Y, Z) = (X, Y×Z)`.
    pub fn trilinear(&self, y: &Self, z: &Self) -> Result<Cx<F>, JordanError> {
        self.check(y)?;
        self.check(z)?;
        Ok(self.ip_unchecked(&y.cross_unchecked(z)))
    }

    fn require_complexified(&self, op: &'static str) -> Result<(), JordanError> {
        if self.tag.is_complexified() {
            Ok(())
        } else {
            Err(AlgebraError::Unsupported { op, ring: self.tag }.into())
        }
    }

    /// Hermitian form `⟨X, Y⟩ = (τX, Y)`.
    pub fn hform(&self, o: &Self) -> Result<Cx<F>, JordanError> {
        self.require_complexified("hform")?;
        self.check(o)?;
        Ok(self.tau_act().ip_unchecked(o))
    }

    /// Hermitian form `⟨X, Y⟩_σ = (τσX, Y)`.
    pub fn hform_sigma(&self, o: &Self) -> Result<Cx<F>, JordanError> {
        self.require_complexified("hform_sigma")?;
        self.check(o)?;
        Ok(self.sigma_act().tau_act().ip_unchecked(o))
    }

    /// σ: conjugation by `diag(−1, 1, 1)`, negating x₂ and x₃.
    pub fn sigma_act(&self) -> Self {
        let mut out = self.clone();
        out.x[1] = -&self.x[1];
        out.x[2] = -&self.x[2];
        out
    }

    /// τ: outer conjugation of every entry.
    pub fn tau_act(&self) -> Self {
        JordanElement {
            tag: self.tag,
            xi: array::from_fn(|i| self.xi[i].conj()),
            x: array::from_fn(|i| self.x[i].tau()),
        }
    }

    /// γ applied entrywise.
    pub fn gamma_act(&self) -> Result<Self, JordanError> {
        let x = [self.x[0].gamma()?, self.x[1].gamma()?, self.x[2].gamma()?];
        Ok(JordanElement { tag: self.tag, xi: self.xi.clone(), x })
    }

    /// ε: entrywise internal conjugation X ↦ X̄. A Jordan automorphism only
    /// for commutative rings.
    pub fn eps_act(&self) -> Result<Self, JordanError> {
        if !self.tag.has_internal_unit() {
            return Err(AlgebraError::Unsupported { op: "eps", ring: self.tag }.into());
        }
        Ok(JordanElement {
            tag: self.tag,
            xi: self.xi.clone(),
            x: array::from_fn(|i| self.x[i].conj()),
        })
    }

    /// Maps a τγ-fixed element of 𝔍(3, ℂ^C) or 𝔍(3, ℍ^C) onto the split
    /// algebra entrywise.
    pub fn split_embed(&self) -> Result<Self, JordanError> {
        for z in &self.xi {
            if !z.is_real() {
                return Err(AlgebraError::NotFixed(z.im.to_f64().abs()).into());
            }
        }
        let x = [self.x[0].split_embed()?, self.x[1].split_embed()?, self.x[2].split_embed()?];
        Self::new(x[0].tag(), self.xi.clone(), x)
    }

    pub fn split_unembed(&self) -> Result<Self, JordanError> {
        let x = [self.x[0].split_unembed()?, self.x[1].split_unembed()?, self.x[2].split_unembed()?];
        Self::new(x[0].tag(), self.xi.clone(), x)
    }

    /// Largest coordinate modulus of `self − o`.
    pub fn distance(&self, o: &Self) -> f64 {
        self.coords().iter().zip(o.coords()).map(|(a, b)| (a - &b).abs_f64()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.coords().iter().map(Cx::abs_f64).fold(0.0, f64::max)
    }

    pub fn random<R: Rng + ?Sized>(tag: RingTag, rng: &mut R) -> Self {
        let xi = array::from_fn(|_| if tag.is_complexified() { Cx::random(rng) } else { Cx::random_real(rng) });
        JordanElement { tag, xi, x: array::from_fn(|_| Scalar::random(tag, rng)) }
    }

    pub fn to_json(&self) -> Value {
        let xi: Vec<Value> = if self.tag.is_complexified() {
            self.xi.iter().map(Cx::to_json).collect()
        } else {
            self.xi.iter().map(|z| z.re.to_json()).collect()
        };
        json!({
            "ring": self.tag.as_str(),
            "xi": xi,
            "x": self.x.iter().map(Scalar::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, JordanError> {
        let parse_err = |m: &str| JordanError::Algebra(AlgebraError::Parse(m.to_string()));
        let tag: RingTag = v
            .get("ring")
            .and_then(Value::as_str)
            .ok_or_else(|| parse_err("missing \"ring\""))?
            .parse()?;
        let xi = v.get("xi").and_then(Value::as_array).ok_or_else(|| parse_err("missing \"xi\""))?;
        let x = v.get("x").and_then(Value::as_array).ok_or_else(|| parse_err("missing \"x\""))?;
        if xi.len() != 3 || x.len() != 3 {
            return Err(parse_err("\"xi\" and \"x\" need three entries each"));
        }
        let xi = xi
            .iter()
            .map(|z| if tag.is_complexified() { Cx::from_json(z) } else { F::from_json(z).map(Cx::real) })
            .collect::<Result<Vec<_>, _>>()?;
        let x = x.iter().map(Scalar::from_json).collect::<Result<Vec<_>, _>>()?;
        let [a, b, c]: [Cx<F>; 3] = xi.try_into().map_err(|_| parse_err("xi"))?;
        let [p, q, r]: [Scalar<F>; 3] = x.try_into().map_err(|_| parse_err("x"))?;
        Self::new(tag, [a, b, c], [p, q, r])
    }
}

/// Product of 3×3 ring matrices.
pub fn mat3_mul<F: Field>(a: &Mat3<F>, b: &Mat3<F>) -> Mat3<F> {
    let tag = a[0][0].tag();
    array::from_fn(|i| {
        array::from_fn(|j| {
            let mut acc = Scalar::zero(tag);
            for k in 0..3 {
                acc = &acc + &(&a[i][k] * &b[k][j]);
            }
            acc
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Exact;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type J = JordanElement<Exact>;

    fn rnd(tag: RingTag, seed: u64) -> J {
        J::random(tag, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    fn rs(tag: RingTag, seed: u64) -> Scalar<Exact> {
        Scalar::random(tag, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Oracle: (1/2)(XY + YX) through full matrix products.
    fn jmul_oracle(x: &J, y: &J) -> J {
        let (a, b) = (x.to_matrix(), y.to_matrix());
        let (ab, ba) = (mat3_mul(&a, &b), mat3_mul(&b, &a));
        let m: Mat3<Exact> = array::from_fn(|i| {
            array::from_fn(|j| (&ab[i][j] + &ba[i][j]).scale_real(&Exact::half()))
        });
        J::from_matrix(&m).unwrap()
    }

    /// Oracle: the classical Leibniz determinant, valid for commutative rings.
    fn det_oracle(x: &J) -> Cx<Exact> {
        let m = x.to_matrix();
        let perms = [([0, 1, 2], 1i64), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)];
        let mut acc = Scalar::zero(x.tag());
        for (p, s) in perms {
            let prod = &(&m[0][p[0]] * &m[1][p[1]]) * &m[2][p[2]];
            acc = &acc + &prod.scale(&Cx::from_i64(s));
        }
        assert!(acc.is_outer());
        acc.re().clone()
    }

    #[test]
    fn spec_examples() {
        let t = RingTag::HC;
        let e = J::identity(t);
        let (e1, e2, e3) = (J::e(t, 1), J::e(t, 2), J::e(t, 3));
        let x = rnd(t, 1);
        assert_eq!(e.jmul(&x).unwrap(), x);
        assert_eq!(e1.jmul(&e1).unwrap(), e1);
        assert!(e1.cross(&e1).unwrap().coords().iter().all(Cx::is_zero));
        assert_eq!(e1.cross(&e2).unwrap(), e3.scale(&Cx::from_ratio(1, 2)));
        assert_eq!(e.cross(&e).unwrap(), e);
        assert_eq!(e.det(), Cx::one());
        assert!(e1.add(&e2).det().is_zero());
        assert_eq!(e.trilinear(&e, &e).unwrap(), Cx::from_i64(3));
        assert_eq!(e1.trilinear(&e2, &e3).unwrap(), Cx::from_ratio(1, 2));
        assert_eq!(e1.ip(&e1).unwrap(), Cx::one());
        assert!(e1.ip(&e2).unwrap().is_zero());
        assert_eq!(e.hform(&e).unwrap(), Cx::from_i64(3));
        let ie1 = e1.scale(&Cx::i());
        assert_eq!(ie1.hform(&ie1).unwrap(), Cx::one());
        assert_eq!(e1.hform_sigma(&e1).unwrap(), Cx::one());
        assert_eq!(e2.sigma_act(), e2);
        let s = rs(t, 5);
        assert_eq!(J::f(1, s.clone()).sigma_act(), J::f(1, s.clone()));
        assert_eq!(J::f(2, s.clone()).sigma_act(), J::f(2, -&s));
        assert_eq!(J::f(3, s.clone()).sigma_act(), J::f(3, -&s));
        let d = J::diag(t, [Cx::from_i64(2), Cx::from_ratio(1, 3), Cx::new(Exact::one(), Exact::one())]);
        assert_eq!(d.det(), &(&Cx::from_i64(2) * &Cx::from_ratio(1, 3)) * &Cx::new(Exact::one(), Exact::one()));
        assert!(J::identity(RingTag::R).hform(&J::identity(RingTag::R)).is_err());
        assert!(J::identity(RingTag::RC).eps_act().is_err());
        assert!(J::identity(RingTag::CC).jmul(&J::identity(RingTag::HC)).is_err());
    }

    #[test]
    fn basis_structure() {
        for tag in RingTag::ALL {
            let b = J::basis(tag);
            assert_eq!(b.len(), jdim(tag));
            for (k, v) in b.iter().enumerate() {
                let c = v.coords();
                assert!(c.iter().enumerate().all(|(j, z)| if j == k { *z == Cx::one() } else { z.is_zero() }));
                assert_eq!(&J::from_coords(tag, &c).unwrap(), v);
            }
        }
    }

    #[test]
    fn non_hermitian_matrix_is_rejected() {
        let mut m = J::identity(RingTag::CC).to_matrix();
        m[0][1] = Scalar::one(RingTag::CC);
        assert!(matches!(J::from_matrix(&m), Err(JordanError::NotHermitian(_))));
    }

    #[test]
    fn off_diagonal_product_relations() {
        for tag in [RingTag::C, RingTag::H, RingTag::CC, RingTag::HC, RingTag::Hsplit] {
            for seed in 0..20 {
                let (x, y) = (rs(tag, seed), rs(tag, seed + 100));
                for i in 1..=3 {
                    let j = i % 3 + 1;
                    let k = j % 3 + 1;
                    let lhs = J::f(i, x.clone()).jmul(&J::f(j, y.clone())).unwrap();
                    let rhs = J::f(k, (&x * &y).conj()).scale(&Cx::from_ratio(1, 2));
                    assert_eq!(lhs, rhs, "{tag} F{i}F{j}");
                    // Same-index products land on the complementary diagonal.
                    let same = J::f(i, x.clone()).jmul(&J::f(i, y.clone())).unwrap();
                    let d = x.dot(&y);
                    let want = J::e(tag, j).add(&J::e(tag, k)).scale(&d);
                    assert_eq!(same, want);
                }
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        for tag in RingTag::ALL {
            let x = rnd(tag, 3);
            assert_eq!(J::from_json(&x.to_json()).unwrap(), x);
        }
    }

    fn any_tag() -> impl Strategy<Value = RingTag> {
        prop::sample::select(RingTag::ALL.to_vec())
    }

    fn complex_tag() -> impl Strategy<Value = RingTag> {
        prop::sample::select(vec![RingTag::RC, RingTag::CC, RingTag::HC])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn prop_jmul_matches_matrix_oracle(tag in any_tag(), s in 0u64..100_000) {
            let (x, y) = (rnd(tag, s), rnd(tag, s + 1));
            prop_assert_eq!(x.jmul(&y).unwrap(), jmul_oracle(&x, &y));
            prop_assert_eq!(x.jmul(&y).unwrap(), y.jmul(&x).unwrap());
        }

        #[test]
        fn prop_det_matches_leibniz(tag in prop::sample::select(vec![RingTag::R, RingTag::C, RingTag::Csplit, RingTag::RC, RingTag::CC]), s in 0u64..100_000) {
            let x = rnd(tag, s);
            prop_assert_eq!(x.det(), det_oracle(&x));
        }

        #[test]
        fn prop_det_is_third_of_trilinear(tag in any_tag(), s in 0u64..100_000) {
            let x = rnd(tag, s);
            prop_assert_eq!(x.trilinear(&x, &x).unwrap(), x.det().scale(&Exact::from_i64(3)));
        }

        #[test]
        fn prop_adjugate_identity(tag in any_tag(), s in 0u64..100_000) {
            let x = rnd(tag, s);
            let xx = x.cross(&x).unwrap();
            prop_assert_eq!(xx.cross(&xx).unwrap(), x.scale(&x.det()));
        }

        #[test]
        fn prop_trilinear_symmetric(tag in any_tag(), s in 0u64..100_000) {
            let (x, y, z) = (rnd(tag, s), rnd(tag, s + 1), rnd(tag, s + 2));
            let t = x.trilinear(&y, &z).unwrap();
            prop_assert_eq!(&t, &y.trilinear(&z, &x).unwrap());
            prop_assert_eq!(&t, &z.trilinear(&y, &x).unwrap());
            prop_assert_eq!(&t, &x.trilinear(&z, &y).unwrap());
        }

        #[test]
        fn prop_involutions(tag in complex_tag(), s in 0u64..100_000) {
            let (x, y) = (rnd(tag, s), rnd(tag, s + 1));
            prop_assert_eq!(x.sigma_act().sigma_act(), x.clone());
            prop_assert_eq!(x.tau_act().tau_act(), x.clone());
            prop_assert_eq!(x.sigma_act().det(), x.det());
            prop_assert_eq!(x.tau_act().det(), x.det().conj());
            prop_assert_eq!(x.tau_act().ip(&y.tau_act()).unwrap(), x.ip(&y).unwrap().conj());
            prop_assert_eq!(x.cross(&y).unwrap().tau_act(), x.tau_act().cross(&y.tau_act()).unwrap());
            prop_assert_eq!(x.cross(&y).unwrap().sigma_act(), x.sigma_act().cross(&y.sigma_act()).unwrap());
            if tag != RingTag::RC {
                let g = |v: &J| v.gamma_act().unwrap();
                prop_assert_eq!(g(&g(&x)), x.clone());
                prop_assert_eq!(g(&x).det(), x.det());
                prop_assert_eq!(g(&x.cross(&y).unwrap()), g(&x).cross(&g(&y)).unwrap());
                let e = |v: &J| v.eps_act().unwrap();
                prop_assert_eq!(e(&e(&x)), x.clone());
            }
            if tag == RingTag::CC {
                prop_assert_eq!(x.eps_act().unwrap(), x.gamma_act().unwrap());
                prop_assert_eq!(x.eps_act().unwrap().det(), x.det());
            }
        }

        #[test]
        fn prop_hermitian_forms(tag in complex_tag(), s in 0u64..100_000) {
            let (x, y) = (rnd(tag, s), rnd(tag, s + 1));
            let z = Cx::new(Exact::from_ratio(1, 2), Exact::from_i64(-3));
            // Sesquilinear: conjugate-linear in the first slot.
            prop_assert_eq!(x.scale(&z).hform(&y).unwrap(), &z.conj() * &x.hform(&y).unwrap());
            prop_assert_eq!(y.hform(&x).unwrap(), x.hform(&y).unwrap().conj());
            prop_assert!(x.hform(&x).unwrap().is_real());
            prop_assert!(x.hform_sigma(&x).unwrap().is_real());
            // On τ-fixed elements the Hermitian form restricts to (·,·).
            let r = x.add(&x.tau_act());
            prop_assert_eq!(r.hform(&y).unwrap(), r.ip(&y).unwrap());
            let rs = x.add(&x.sigma_act().tau_act());
            prop_assert_eq!(rs.hform_sigma(&y).unwrap(), rs.ip(&y).unwrap());
        }
    }
}
