//! Splitting an element of the Lie algebra as `φ = δ + T̃`.
//!
//! `T = φE` is traceless, `T̃X = T∘X`, and `δ = φ − T̃` kills E (so it is a
//! derivation). Membership in the Lie algebra means the cubic form
//! `(φX, X, X)` vanishes identically; it is checked on the polarized form
//! over all basis triples, which is decisive.

use rand::Rng;

use crate::algebra::{Cx, RingTag};
use crate::error::{AlgorithmError, OperatorError};
use crate::field::Field;
use crate::jordan::{jdim, JordanElement};
use crate::operators::JOperator;

#[derive(Clone, Debug)]
pub struct PhiDecomposition<F> {
    pub delta: JOperator<F>,
    pub t: JordanElement<F>,
}

/// `X ↦ T∘X`.
pub fn jordan_mult_op<F: Field>(t: &JordanElement<F>) -> Result<JOperator<F>, AlgorithmError> {
    Ok(JOperator::from_linear_map(t.tag(), "T~", |x| Ok(t.jmul(x)?))?)
}

fn op_sub<F: Field>(a: &JOperator<F>, b: &JOperator<F>, prov: &str) -> Result<JOperator<F>, AlgorithmError> {
    Ok(JOperator::from_matrix(a.tag(), a.matrix().sub(b.matrix()), false, prov)?)
}

/// Largest coefficient of the polarized cubic `(φX,Y,Z) + (φY,Z,X) + (φZ,X,Y)`
/// over basis triples; exactly zero for members on the exact backend.
pub fn lie_residual<F: Field>(phi: &JOperator<F>) -> Result<f64, AlgorithmError> {
    if phi.is_antilinear() {
        return Err(OperatorError::Antilinear("the Lie-algebra residual").into());
    }
    let tag = phi.tag();
    let n = jdim(tag);
    let basis = JordanElement::<F>::basis(tag);
    let gram: Vec<Cx<F>> = basis.iter().map(|b| b.ip(b).expect("same ring")).collect();
    let m = phi.matrix();
    let mut cross = vec![Vec::new(); n * n];
    for j in 0..n {
        for k in j..n {
            let c = basis[j].cross(&basis[k])?.coords();
            cross[j * n + k] = c.clone();
            cross[k * n + j] = c;
        }
    }
    // (φb_i, b_j × b_k) = Σ_l g_l φ_{l i} (b_j × b_k)_l
    let term = |i: usize, j: usize, k: usize| -> Cx<F> {
        let c = &cross[j * n + k];
        let mut s = Cx::zero();
        for l in 0..n {
            if !c[l].is_zero() && !m.at(l, i).is_zero() {
                s = s + &(&gram[l] * &(m.at(l, i) * &c[l]));
            }
        }
        s
    };
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let s = term(i, j, k) + term(j, k, i) + term(k, i, j);
                if !s.is_zero() {
                    worst = worst.max(s.abs_f64()).max(f64::MIN_POSITIVE);
                }
            }
        }
    }
    Ok(worst)
}

/// `φ = δ + T̃` with `T = φE`.
pub fn decompose_phi<F: Field>(phi: &JOperator<F>, tol: f64) -> Result<PhiDecomposition<F>, AlgorithmError> {
    let res = lie_residual(phi)?;
    let ok = if F::EXACT { res == 0.0 } else { res <= tol };
    if !ok {
        return Err(AlgorithmError::Precondition(format!(
            "operator is not in the Lie algebra (residual {res:e})"
        )));
    }
    let t = phi.apply(&JordanElement::identity(phi.tag()))?;
    let delta = op_sub(phi, &jordan_mult_op(&t)?, "delta")?;
    Ok(PhiDecomposition { delta, t })
}

/// Random element `[L_A, L_B] + T̃` with tr T = 0: an inner derivation
/// plus a traceless multiplication.
pub fn lie_algebra_sample<F: Field, R: Rng + ?Sized>(tag: RingTag, rng: &mut R) -> Result<JOperator<F>, AlgorithmError> {
    let a = jordan_mult_op(&JordanElement::<F>::random(tag, rng))?;
    let b = jordan_mult_op(&JordanElement::<F>::random(tag, rng))?;
    let t = JordanElement::<F>::random(tag, rng);
    let t = t.sub(&JordanElement::identity(tag).scale(&(t.trace() * &Cx::from_ratio(1, 3))));
    let d = op_sub(&a.compose(&b)?, &b.compose(&a)?, "[L_A,L_B]")?;
    let tt = jordan_mult_op(&t)?;
    Ok(JOperator::from_matrix(tag, d.matrix().add(tt.matrix()), false, "lie-sample")?)
}
