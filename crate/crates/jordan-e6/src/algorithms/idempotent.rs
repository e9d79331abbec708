//! Bringing a trace-one idempotent of 𝔍(3, ℂ^C) to a diagonal Eᵢ.
//!
//! Split `X = X₁ + iX₂` along the outer field; the internal-Hermitian part
//! X₁ is diagonalized by an internal unitary U. After that every
//! off-diagonal entry is `i` times an internal complex number and
//! `X² = X` leaves at most one of x₁, x₂, x₃ nonzero. The x₂ and x₃ cases
//! are permuted into the x₁ case with C₂, C₃; the x₁ block
//! `[[ξ₂, ix₁], [ix̄₁, ξ₃]]` is then cleared by
//!
//! ```text
//! B₁ = [[1, 0, 0], [0, x₁/√(−ξ₃), −ix₁/√ξ₂], [0, i√(−ξ₃), √ξ₂]]    (ξ₂ > 0 > ξ₃)
//! B₂ = [[1, 0, 0], [0, i√(−ξ₂), √ξ₃], [0, x̄₁/√(−ξ₂), −ix̄₁/√ξ₃]]    (ξ₂ < 0 < ξ₃)
//! ```

use nalgebra::{Matrix3, SymmetricEigen};
use num_complex::Complex64;

use crate::algebra::{Cx, RingTag, Scalar};
use crate::error::AlgorithmError;
use crate::jordan::JordanElement;
use crate::matgroups::{constant_c2, constant_c3, GMatrix};
use crate::operators::to_gmatrix;

/// Which branch of the case analysis handled the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentCase {
    /// Already diagonal after the unitary step.
    Diagonal,
    /// x₁ ≠ 0 (possibly after moving x₂ or x₃ there), cleared with B₁.
    OffDiagonalB1 { moved_from: usize },
    /// As above, cleared with B₂.
    OffDiagonalB2 { moved_from: usize },
}

#[derive(Clone, Debug)]
pub struct IdempotentResult {
    /// `B ∈ U(3, ℂ^C)` with `B* X B = E_target`.
    pub b: GMatrix<f64>,
    pub target: usize,
    pub case: IdempotentCase,
    /// `max |B* X B − E_target|`.
    pub residual: f64,
}

fn pre(msg: impl Into<String>) -> AlgorithmError {
    AlgorithmError::Precondition(msg.into())
}

fn cc(a: Complex64, b: Complex64) -> Scalar<f64> {
    Scalar::raw(RingTag::CC, vec![Cx::from_c64(a), Cx::from_c64(b)])
}

fn outer(z: Complex64) -> Scalar<f64> {
    Scalar::outer(RingTag::CC, Cx::from_c64(z))
}

/// Swap taking `E_from` to `E_to` under `B* · B`, built from C₂ and C₃.
fn transposition(from: usize, to: usize) -> GMatrix<f64> {
    let (c2, c3) = (constant_c2::<f64>(RingTag::CC), constant_c3::<f64>(RingTag::CC));
    match (from.min(to), from.max(to)) {
        (a, b) if a == b => GMatrix::identity(RingTag::CC, 3),
        (1, 2) => c2,
        (2, 3) => c3,
        _ => &(&c2 * &c3) * &c2,
    }
}

/// `B` with `B* X B = E_target` for an idempotent `X` of trace 1.
pub fn diag_idempotent(x: &JordanElement<f64>, target: usize) -> Result<IdempotentResult, AlgorithmError> {
    if x.tag() != RingTag::CC {
        return Err(pre(format!("diag_idempotent works on 𝔍(3,ℂ^C), got {}", x.tag())));
    }
    if !(1..=3).contains(&target) {
        return Err(pre(format!("target index {target} is not in 1..=3")));
    }
    let scale = x.max_abs().max(1.0);
    let tol = 1e-9 * scale * scale;
    let sq_res = x.jmul(x)?.distance(x);
    let tr_res = (x.trace() - Cx::one()).abs_f64();
    if sq_res > tol || tr_res > tol {
        return Err(pre(format!("not a trace-one idempotent (|X∘X − X| = {sq_res:e}, |tr X − 1| = {tr_res:e})")));
    }

    // Unitary step: diagonalize the outer-real part X₁.
    let xm = to_gmatrix(x);
    let re = (&xm + &xm.tau()).scale_outer(&Cx::from_ratio(1, 2));
    let h = Matrix3::from_fn(|i, j| {
        let c = re.at(i, j).coeffs();
        Complex64::new(c[0].re, c[1].re)
    });
    let eig = SymmetricEigen::new(h);
    let v = eig.eigenvectors;
    let u = GMatrix::from_fn(RingTag::CC, 3, |i, j| {
        let z = v[(i, j)];
        cc(Complex64::new(z.re, 0.0), Complex64::new(z.im, 0.0))
    });
    let mut b = u;
    let mut cur = &(&b.star() * &xm) * &b;

    let offdiag = |m: &GMatrix<f64>, k: usize| -> f64 {
        let (i, j) = [(1, 2), (2, 0), (0, 1)][k];
        m.at(i, j).max_abs()
    };
    let mags = [offdiag(&cur, 0), offdiag(&cur, 1), offdiag(&cur, 2)];
    let big: Vec<usize> = (0..3).filter(|&k| mags[k] > 1e-7 * scale).collect();

    let case = match big.as_slice() {
        [] => IdempotentCase::Diagonal,
        [k] => {
            // Move the nonzero entry into the x₁ slot.
            let moved_from = k + 1;
            let perm = match moved_from {
                1 => GMatrix::identity(RingTag::CC, 3),
                2 => constant_c2::<f64>(RingTag::CC).transpose(),
                _ => (&constant_c2::<f64>(RingTag::CC) * &constant_c3::<f64>(RingTag::CC)).transpose(),
            };
            b = &b * &perm;
            cur = &(&perm.star() * &cur) * &perm;
            let xi2 = cur.at(1, 1).coeff(0).to_c64();
            let xi3 = cur.at(2, 2).coeff(0).to_c64();
            if xi2.im.abs() > 1e-7 * scale || xi3.im.abs() > 1e-7 * scale {
                return Err(pre("diagonal entries of the 2×2 block are not real"));
            }
            let (xi2, xi3) = (xi2.re, xi3.re);
            // Entry (2,3) is i·x₁ with x₁ internal: x₁ = −i·entry.
            let e = cur.at(1, 2).coeffs();
            let minus_i = Complex64::new(0.0, -1.0);
            let (p, q) = (e[0].to_c64() * minus_i, e[1].to_c64() * minus_i);
            if p.im.abs() > 1e-7 * scale || q.im.abs() > 1e-7 * scale {
                return Err(pre("off-diagonal entry is not i times an internal complex number"));
            }
            let (p, q) = (p.re, q.re);
            let n1 = p * p + q * q;
            if (n1 + xi2 * xi3).abs() > 1e-7 * scale * scale {
                return Err(pre(format!("x₁x̄₁ = {n1} does not equal −ξ₂ξ₃ = {}", -xi2 * xi3)));
            }
            let i = Complex64::new(0.0, 1.0);
            let zero = Complex64::new(0.0, 0.0);
            let x1 = cc(Complex64::new(p, 0.0), Complex64::new(q, 0.0));
            let x1b = x1.conj();
            let one = Scalar::one(RingTag::CC);
            let z = Scalar::zero(RingTag::CC);
            let (blk, case) = if xi2 > 0.0 && xi3 < 0.0 {
                let (s, t) = ((-xi3).sqrt(), xi2.sqrt());
                let m = [
                    [one.clone(), z.clone(), z.clone()],
                    [z.clone(), x1.scale(&Cx::real(1.0 / s)), x1.scale(&Cx::new(0.0, -1.0 / t))],
                    [z.clone(), outer(i * s), outer(Complex64::new(t, 0.0))],
                ];
                (m, IdempotentCase::OffDiagonalB1 { moved_from })
            } else if xi2 < 0.0 && xi3 > 0.0 {
                let (s, t) = ((-xi2).sqrt(), xi3.sqrt());
                let m = [
                    [one.clone(), z.clone(), z.clone()],
                    [z.clone(), outer(i * s), outer(Complex64::new(t, 0.0))],
                    [z.clone(), x1b.scale(&Cx::real(1.0 / s)), x1b.scale(&Cx::new(0.0, -1.0 / t))],
                ];
                (m, IdempotentCase::OffDiagonalB2 { moved_from })
            } else {
                let _ = zero;
                return Err(pre(format!("degenerate block: ξ₂ξ₃ = {} with x₁ ≠ 0", xi2 * xi3)));
            };
            let bk = GMatrix::from_fn(RingTag::CC, 3, |r, c| blk[r][c].clone());
            b = &b * &bk;
            cur = &(&bk.star() * &cur) * &bk;
            case
        }
        _ => return Err(pre("more than one off-diagonal entry survives the unitary step")),
    };

    // cur is now (close to) some E_k; move it to the requested slot.
    let k = (0..3)
        .max_by(|&a, &c| {
            let (va, vc) = (cur.at(a, a).coeff(0).re, cur.at(c, c).coeff(0).re);
            va.partial_cmp(&vc).expect("finite")
        })
        .expect("three slots")
        + 1;
    let p = transposition(k, target);
    b = &b * &p;
    let out = &(&b.star() * &xm) * &b;
    let e = to_gmatrix(&JordanElement::<f64>::e(RingTag::CC, target));
    let residual = out.distance(&e);
    Ok(IdempotentResult { b, target, case, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroups::GroupSpec;
    use crate::operators::from_gmatrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn conj_by(u: &GMatrix<f64>, x: &JordanElement<f64>) -> JordanElement<f64> {
        from_gmatrix(&(&(&u.star() * &to_gmatrix(x)) * u)).unwrap()
    }

    fn is_unitary(b: &GMatrix<f64>) -> bool {
        (&b.star() * b).is_identity(1e-9)
    }

    #[test]
    fn e1_is_fixed() {
        let x = JordanElement::e(RingTag::CC, 1);
        let r = diag_idempotent(&x, 1).unwrap();
        assert_eq!(r.case, IdempotentCase::Diagonal);
        assert!(r.b.is_identity(1e-12) || r.residual < 1e-12);
        for t in 1..=3 {
            let r = diag_idempotent(&x, t).unwrap();
            assert!(r.residual < 1e-12);
        }
    }

    #[test]
    fn b1_block_example() {
        // ξ₂ = 2, ξ₃ = −1, x₁x̄₁ = 2.
        let (xi2, xi3) = (2.0, -1.0);
        let r1 = (2.0f64).sqrt();
        let x1 = cc(Complex64::new(r1 * 0.6, 0.0), Complex64::new(r1 * 0.8, 0.0));
        let x = JordanElement::new(
            RingTag::CC,
            [Cx::zero(), Cx::real(xi2), Cx::real(xi3)],
            [x1.scale(&Cx::i()), Scalar::zero(RingTag::CC), Scalar::zero(RingTag::CC)],
        )
        .unwrap();
        let r = diag_idempotent(&x, 2).unwrap();
        assert!(matches!(r.case, IdempotentCase::OffDiagonalB1 { moved_from: 1 }));
        assert!(r.residual < 1e-10);
        assert!(is_unitary(&r.b));
        // With no permutation needed, B is B₁ itself.
        let b = &r.b;
        let s = (-xi3).sqrt();
        assert!(b.at(1, 1).distance(&x1.scale(&Cx::real(1.0 / s))) < 1e-12);
        assert!(b.at(2, 1).distance(&outer(Complex64::new(0.0, s))) < 1e-12);
    }

    #[test]
    fn b2_block_example() {
        let (xi2, xi3) = (-1.0, 2.0);
        let x1 = cc(Complex64::new(0.0, 0.0), Complex64::new(2.0f64.sqrt(), 0.0));
        let x = JordanElement::new(
            RingTag::CC,
            [Cx::zero(), Cx::real(xi2), Cx::real(xi3)],
            [x1.scale(&Cx::i()), Scalar::zero(RingTag::CC), Scalar::zero(RingTag::CC)],
        )
        .unwrap();
        let r = diag_idempotent(&x, 3).unwrap();
        assert!(matches!(r.case, IdempotentCase::OffDiagonalB2 { moved_from: 1 }));
        assert!(r.residual < 1e-10);
        assert!(is_unitary(&r.b));
    }

    #[test]
    fn rejects_non_idempotent() {
        let x = JordanElement::<f64>::identity(RingTag::CC);
        assert!(matches!(diag_idempotent(&x, 1), Err(AlgorithmError::Precondition(_))));
        let y = JordanElement::<f64>::e(RingTag::CC, 1).scale(&Cx::real(2.0));
        assert!(diag_idempotent(&y, 1).is_err());
    }

    #[test]
    fn round_trip_from_unitary_conjugates() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut seen = [false; 3];
        for n in 0..120 {
            let u = GroupSpec::SU3CC.sample::<f64, _>(&mut rng);
            let x = conj_by(&u, &JordanElement::e(RingTag::CC, 1 + n % 3));
            let r = diag_idempotent(&x, 1 + (n / 3) % 3).unwrap();
            assert!(r.residual <= 1e-8, "residual {} case {:?}", r.residual, r.case);
            assert!(is_unitary(&r.b));
            match r.case {
                IdempotentCase::Diagonal => seen[0] = true,
                IdempotentCase::OffDiagonalB1 { .. } => seen[1] = true,
                IdempotentCase::OffDiagonalB2 { .. } => seen[2] = true,
            }
        }
        assert!(seen[1] || seen[2]);
    }
}
