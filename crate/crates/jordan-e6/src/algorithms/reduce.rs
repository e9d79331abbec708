//! Reduction of a determinant-one element to E.
//!
//! After diagonalizing, `X = diag(ξ₁, ξ₂, ξ₃)` with `ξ₁ξ₂ξ₃ = 1`. The
//! hyperbolic scalings
//!
//! ```text
//! α₁₂(s): ξ₁ ↦ eˢξ₁, ξ₂ ↦ e⁻ˢξ₂, x₁ ↦ e^{−s/2}x₁, x₂ ↦ e^{s/2}x₂
//! α₂₃(t): ξ₂ ↦ eᵗξ₂, ξ₃ ↦ e⁻ᵗξ₃, x₂ ↦ e^{−t/2}x₂, x₃ ↦ e^{t/2}x₃
//! ```
//!
//! finish the job with `s₀ = −ln ξ₁` and then `t₀ = −ln ξ₂'`.

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{Cx, RingTag};
use crate::error::AlgorithmError;
use crate::field::Field;
use crate::jordan::JordanElement;
use crate::operators::JOperator;

use super::diagonalize::diagonalize;

fn scaling<F: Field>(
    tag: RingTag,
    provenance: String,
    xi: [Cx<F>; 3],
    x: [Cx<F>; 3],
) -> JOperator<F> {
    JOperator::from_linear_map(tag, provenance, |y| {
        let nxi = std::array::from_fn(|k| &y.xi()[k] * &xi[k]);
        let nx = std::array::from_fn(|k| y.x()[k].scale(&x[k]));
        Ok(JordanElement::new(tag, nxi, nx)?)
    })
    .expect("diagonal scaling is well-formed")
}

/// α₁₂ with `q = e^{s/2}`; exact whenever `q` is.
pub fn alpha12_scaling<F: Field>(tag: RingTag, q: &Cx<F>) -> JOperator<F> {
    let (q2, qi) = (q * q, q.inv());
    let (q2i, one) = (q2.inv(), Cx::one());
    scaling(tag, "alpha12".into(), [q2, q2i, one.clone()], [qi, q.clone(), one])
}

/// α₂₃ with `q = e^{t/2}`.
pub fn alpha23_scaling<F: Field>(tag: RingTag, q: &Cx<F>) -> JOperator<F> {
    let (q2, qi) = (q * q, q.inv());
    let (q2i, one) = (q2.inv(), Cx::one());
    scaling(tag, "alpha23".into(), [one.clone(), q2, q2i], [one, qi, q.clone()])
}

/// α₁₂(s) for a (possibly complex) parameter.
pub fn alpha12(tag: RingTag, s: Complex64) -> JOperator<f64> {
    alpha12_scaling(tag, &Cx::from_c64((s / 2.0).exp())).with_provenance(format!("alpha12({s})"))
}

/// α₂₃(t) for a (possibly complex) parameter.
pub fn alpha23(tag: RingTag, t: Complex64) -> JOperator<f64> {
    alpha23_scaling(tag, &Cx::from_c64((t / 2.0).exp())).with_provenance(format!("alpha23({t})"))
}

#[derive(Clone, Debug)]
pub struct ReduceResult {
    /// Factors in application order: the first is applied first.
    pub factors: Vec<JOperator<f64>>,
    /// `max |(αₖ ⋯ α₁)X − E|`.
    pub residual: f64,
}

impl ReduceResult {
    pub fn to_json(&self) -> Value {
        json!({
            "factors": self.factors.iter().map(JOperator::to_json).collect::<Vec<_>>(),
            "residual": self.residual,
        })
    }

    /// The composed operator `αₖ ∘ ⋯ ∘ α₁`.
    pub fn composed(&self, tag: RingTag) -> JOperator<f64> {
        self.factors
            .iter()
            .fold(JOperator::identity(tag), |acc, f| f.compose(&acc).expect("same ring"))
    }
}

const DET_TOL: f64 = 1e-10;
const RESIDUAL_TOL: f64 = 1e-7;
const SKIP_TOL: f64 = 1e-14;

/// Operators whose composition takes X (det X = 1) to E.
pub fn reduce_to_e(x: &JordanElement<f64>) -> Result<ReduceResult, AlgorithmError> {
    let d = x.det();
    if (d.clone() - Cx::one()).abs_f64() > DET_TOL {
        return Err(AlgorithmError::Precondition(format!("det X = {} must be 1", d.to_c64())));
    }
    let tag = x.tag();
    let diag = diagonalize(x)?;
    let mut factors = Vec::new();
    if diag.iterations > 0 {
        factors.push(diag.transform.clone());
    }
    let xi = diag.diagonal.clone().map(|z| z.to_c64());
    let s0 = -xi[0].ln();
    if s0.norm() > SKIP_TOL {
        factors.push(alpha12(tag, s0));
    }
    let xi2 = xi[1] * (-s0).exp();
    let t0 = -xi2.ln();
    if t0.norm() > SKIP_TOL {
        factors.push(alpha23(tag, t0));
    }
    let mut y = x.clone();
    for f in &factors {
        y = f.apply(&y)?;
    }
    let residual = y.distance(&JordanElement::identity(tag));
    if residual > RESIDUAL_TOL {
        return Err(AlgorithmError::NoConvergence(factors.len(), residual));
    }
    Ok(ReduceResult { factors, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Exact;
    use crate::matgroups::GroupSpec;
    use crate::operators::{det_residual, f6cc};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_needs_no_factors() {
        let r = reduce_to_e(&JordanElement::identity(RingTag::CC)).unwrap();
        assert!(r.factors.is_empty());
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn diag_two_half_one() {
        let x = JordanElement::diag(RingTag::CC, [Cx::real(2.0), Cx::real(0.5), Cx::real(1.0)]);
        let r = reduce_to_e(&x).unwrap();
        assert_eq!(r.factors.len(), 1);
        assert!(r.factors[0].provenance().starts_with("alpha12"));
        assert!(r.factors[0].approx_eq(&alpha12(RingTag::CC, Complex64::new(-(2.0f64).ln(), 0.0)), 1e-12));
        assert!(r.residual < 1e-12);
    }

    #[test]
    fn rejects_wrong_determinant() {
        let x = JordanElement::diag(RingTag::CC, [Cx::real(2.0), Cx::real(1.0), Cx::real(1.0)]);
        assert!(matches!(reduce_to_e(&x), Err(AlgorithmError::Precondition(_))));
    }

    #[test]
    fn scalings_preserve_det_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for tag in [RingTag::CC, RingTag::HC, RingTag::RC] {
            let q = Cx::<Exact>::from_ratio(rng.gen_range(1..5), rng.gen_range(1..5));
            for op in [alpha12_scaling(tag, &q), alpha23_scaling(tag, &q)] {
                let (_, exact_ok) = det_residual(&op, 5, &mut rng).unwrap();
                assert!(exact_ok);
            }
        }
    }

    #[test]
    fn round_trip_from_group_orbit() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let a = GroupSpec::SU3CC.sample::<f64, _>(&mut rng);
            let b = GroupSpec::SU3CC.sample::<f64, _>(&mut rng);
            let alpha = f6cc(&a, &b, false).unwrap();
            let x = alpha.apply(&JordanElement::identity(RingTag::CC)).unwrap();
            let r = reduce_to_e(&x).unwrap();
            assert!(r.residual <= 1e-7);
            let back = r.composed(RingTag::CC).apply(&x).unwrap();
            assert!(back.distance(&JordanElement::identity(RingTag::CC)) <= 1e-7);
            for f in &r.factors {
                let (res, _) = det_residual(f, 3, &mut rng).unwrap();
                assert!(res < 1e-9);
            }
        }
    }
}
