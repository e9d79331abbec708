//! Matrix groups: ring-valued matrices, the classical groups that
//! parametrize the realizations, the quaternion-to-complex map `k`, and the
//! bridges φ, ψ, ζ onto SU*(6, ℂ^C).

mod fmat;
mod gmatrix;
mod groups;

pub use fmat::FMat;
pub use gmatrix::GMatrix;
pub use groups::{GroupSpec, Membership};

use crate::algebra::{Cx, RingTag, Scalar};
use crate::error::{AlgebraError, GroupError};
use crate::field::Field;

/// Names accepted by [`constant`].
pub const CONSTANT_NAMES: [&str; 7] = ["I1", "I2", "Ii", "Gamma2", "J", "C2", "C3"];

/// Tolerance for membership-style preconditions: exact equality for the
/// exact backend.
pub(crate) fn precondition_tol<F: Field>() -> f64 {
    if F::EXACT {
        0.0
    } else {
        1e-8
    }
}

/// `diag(−1, 1, 1)`
pub fn constant_i1<F: Field>(tag: RingTag) -> GMatrix<F> {
    GMatrix::diag_outer(tag, &[-Cx::one(), Cx::one(), Cx::one()])
}

/// `diag(−1, −1, 1, 1, 1, 1)`
pub fn constant_i2<F: Field>(tag: RingTag) -> GMatrix<F> {
    let mut d = vec![Cx::one(); 6];
    d[0] = -Cx::one();
    d[1] = -Cx::one();
    GMatrix::diag_outer(tag, &d)
}

/// `diag(−i, i, i, i, i, i)` with the outer unit `i`.
pub fn constant_ii<F: Field>(tag: RingTag) -> GMatrix<F> {
    let mut d = vec![Cx::i(); 6];
    d[0] = -Cx::i();
    GMatrix::diag_outer(tag, &d)
}

/// `Γ₂ = diag(−i, −i, 1, 1, 1, 1)`
pub fn constant_gamma2<F: Field>(tag: RingTag) -> GMatrix<F> {
    let mut d = vec![Cx::one(); 6];
    d[0] = -Cx::i();
    d[1] = -Cx::i();
    GMatrix::diag_outer(tag, &d)
}

/// `J = diag(J₁, J₁, J₁)` with `J₁ = [[0, 1], [−1, 0]]`; `J² = −E`.
pub fn constant_j<F: Field>(tag: RingTag) -> GMatrix<F> {
    GMatrix::from_outer(tag, 6, |i, j| {
        if i / 2 != j / 2 || i == j {
            Cx::zero()
        } else if i % 2 == 0 {
            Cx::one()
        } else {
            -Cx::one()
        }
    })
}

/// Swap of the first two coordinates.
pub fn constant_c2<F: Field>(tag: RingTag) -> GMatrix<F> {
    permutation(tag, [1, 0, 2])
}

/// Swap of the last two coordinates.
pub fn constant_c3<F: Field>(tag: RingTag) -> GMatrix<F> {
    permutation(tag, [0, 2, 1])
}

fn permutation<F: Field>(tag: RingTag, p: [usize; 3]) -> GMatrix<F> {
    GMatrix::from_outer(tag, 3, |i, j| if p[i] == j { Cx::one() } else { Cx::zero() })
}

/// Named constant over `tag`. `Ii` and `Gamma2` involve the outer unit `i`
/// and need a complexified ring.
pub fn constant<F: Field>(name: &str, tag: RingTag) -> Result<GMatrix<F>, GroupError> {
    let needs_i = matches!(name, "Ii" | "Gamma2");
    if needs_i && !tag.is_complexified() {
        return Err(AlgebraError::Unsupported { op: "constant with outer i", ring: tag }.into());
    }
    Ok(match name {
        "I1" => constant_i1(tag),
        "I2" => constant_i2(tag),
        "Ii" => constant_ii(tag),
        "Gamma2" => constant_gamma2(tag),
        "J" => constant_j(tag),
        "C2" => constant_c2(tag),
        "C3" => constant_c3(tag),
        _ => return Err(GroupError::UnknownConstant(name.to_string())),
    })
}

/// Target ring of the k-map.
fn k_target(tag: RingTag) -> Result<RingTag, GroupError> {
    match tag {
        RingTag::HC => Ok(RingTag::CC),
        RingTag::H => Ok(RingTag::C),
        t => Err(AlgebraError::Unsupported { op: "k-map", ring: t }.into()),
    }
}

/// Splits a quaternion-type scalar `x = a + b·e₂` into `(a, b)` over the
/// commutative subring spanned by `1, e₁`.
fn quat_parts<F: Field>(x: &Scalar<F>, sub: RingTag) -> (Scalar<F>, Scalar<F>) {
    let c = x.coeffs();
    let mk = |u: &Cx<F>, v: &Cx<F>| Scalar::new(sub, vec![u.clone(), v.clone()]).expect("subring coefficients");
    (mk(&c[0], &c[1]), mk(&c[2], &c[3]))
}

/// The k-map: each entry `a + b·e₂` becomes the block `[[a, b], [−b̄, ā]]`.
/// Defined on n×n matrices over ℍ^C (into ℂ^C) and ℍ (into ℂ).
pub fn kmap<F: Field>(x: &GMatrix<F>) -> Result<GMatrix<F>, GroupError> {
    let sub = k_target(x.tag())?;
    let n = x.n();
    let mut out = GMatrix::zero(sub, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let (a, b) = quat_parts(x.at(i, j), sub);
            out.set(2 * i, 2 * j, a.clone());
            out.set(2 * i, 2 * j + 1, b.clone());
            out.set(2 * i + 1, 2 * j, -&b.conj());
            out.set(2 * i + 1, 2 * j + 1, a.conj());
        }
    }
    Ok(out)
}

/// Inverse of [`kmap`]; `quat` is ℍ^C or ℍ. Fails when the 2×2 blocks
/// are not of the form `[[a, b], [−b̄, ā]]` (within `tol` for floats).
pub fn kinv<F: Field>(m: &GMatrix<F>, quat: RingTag, tol: f64) -> Result<GMatrix<F>, GroupError> {
    let sub = k_target(quat)?;
    if m.tag() != sub {
        return Err(AlgebraError::RingMismatch(sub, m.tag()).into());
    }
    if m.n() % 2 != 0 {
        return Err(GroupError::Size { expected: m.n() + 1, got: m.n() });
    }
    let n = m.n() / 2;
    let mut residual: f64 = 0.0;
    let mut exact_ok = true;
    let out = GMatrix::from_fn(quat, n, |i, j| {
        let a = m.at(2 * i, 2 * j);
        let b = m.at(2 * i, 2 * j + 1);
        let lower = [(m.at(2 * i + 1, 2 * j), -&b.conj()), (m.at(2 * i + 1, 2 * j + 1), a.conj())];
        for (got, want) in lower {
            residual = residual.max(got.distance(&want));
            exact_ok &= *got == want;
        }
        let (ac, bc) = (a.coeffs(), b.coeffs());
        Scalar::new(quat, vec![ac[0].clone(), ac[1].clone(), bc[0].clone(), bc[1].clone()])
            .expect("quaternion coefficients")
    });
    let ok = if F::EXACT { exact_ok } else { residual <= tol };
    if ok {
        Ok(out)
    } else {
        Err(GroupError::NotQuaternionic(residual))
    }
}

fn require<F: Field>(g: GroupSpec, b: &GMatrix<F>) -> Result<(), GroupError> {
    let m = g.member(b, precondition_tol::<F>())?;
    if m.member {
        Ok(())
    } else {
        let reason = m.failures.iter().map(|(r, v)| format!("{r} (residual {v:e})")).collect::<Vec<_>>().join("; ");
        Err(GroupError::NotMember { group: g.name(), reason })
    }
}

/// `ιB + ῑ·J·C·J⁻¹` over ℂ^C.
fn bridge_core<F: Field>(b: &GMatrix<F>, c: &GMatrix<F>) -> GMatrix<F> {
    let iota = Scalar::<F>::iota();
    let j = constant_j::<F>(RingTag::CC);
    let jinv = -&j;
    &b.scale(&iota) + &(&(&j * c) * &jinv).scale(&iota.conj())
}

/// φ: SU(6, ℂ^C) → SU*(6, ℂ^C), `φ(B) = ιB − ῑ·J·B̄·J`.
pub fn phi_bridge<F: Field>(b: &GMatrix<F>) -> Result<GMatrix<F>, GroupError> {
    require(GroupSpec::SU6CC, b)?;
    Ok(bridge_core(b, &b.conj()))
}

/// ψ: SL(6, C) → SU*(6, ℂ^C), `ψ(B) = ιB − ῑ·J·B·J`.
pub fn psi_bridge<F: Field>(b: &GMatrix<F>) -> Result<GMatrix<F>, GroupError> {
    require(GroupSpec::SL6C, b)?;
    let bc = b.embed(RingTag::CC)?;
    Ok(bridge_core(&bc, &bc))
}

/// ζ: SU(2,4, ℂ^C) → SU*(6, ℂ^C), `ζ(B) = φ(Γ₂·B·Γ₂⁻¹)`.
pub fn zeta_bridge<F: Field>(b: &GMatrix<F>) -> Result<GMatrix<F>, GroupError> {
    require(GroupSpec::SU24CC, b)?;
    let g = constant_gamma2::<F>(RingTag::CC);
    let ginv = g.inverse()?;
    let c = &(&g * b) * &ginv;
    Ok(bridge_core(&c, &c.conj()))
}
