//! Operators on 𝔍(3, K) as dense matrices in the canonical basis.
//!
//! A [`JOperator`] is either linear or conjugate-linear over the outer
//! field; the latter is how τ is represented. The constructors build the
//! realizations of the classical groups:
//!
//! | map | source | action |
//! |-----|--------|--------|
//! | [`f6c`] | SL(3, C) | `X ↦ A X ᵗA` on 𝔍(3, ℝ^C) |
//! | [`f4cc`] | SU(3, ℂ^C) ⋊ {1, ε} | `X ↦ A X A*` or `A X̄ A*` |
//! | [`f6cc`] | (SU(3, ℂ^C)²) ⋊ {1, ε} | `X ↦ h(A,B) X h(A,B)*` (or with X̄) |
//! | [`f6hc`] | SU*(6, ℂ^C) | `X ↦ k⁻¹(A (kX) A*)` |
//!
//! `h(A, B) = ῑA + ιB` is [`hmap`]. Group membership of an operator is
//! never asserted by a constructor; [`claim`] evaluates it on samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::fmt;

use crate::algebra::{Cx, RingTag, Scalar};
use crate::error::{AlgebraError, OperatorError};
use crate::field::Field;
use crate::jordan::{jdim, JordanElement, Mat3};
use crate::matgroups::{self, constant_i2, constant_ii, constant_j, FMat, GMatrix};

/// Linear or conjugate-linear operator on 𝔍(3, K).
///
/// The action on coordinates is `v ↦ M·v` (linear) or `v ↦ M·v̄`
/// (conjugate-linear).
#[derive(Clone, Debug, PartialEq)]
pub struct JOperator<F> {
    tag: RingTag,
    m: FMat<F>,
    antilinear: bool,
    provenance: String,
}

fn matrix_err(e: impl fmt::Display) -> OperatorError {
    OperatorError::Matrix(e.to_string())
}

/// Diagonal of the Gram matrix of `(·,·)` in the canonical basis.
fn gram<F: Field>(tag: RingTag) -> Vec<Cx<F>> {
    JordanElement::<F>::basis(tag).iter().map(|b| b.ip(b).expect("same ring")).collect()
}

impl<F: Field> JOperator<F> {
    pub fn identity(tag: RingTag) -> Self {
        JOperator { tag, m: FMat::identity(jdim(tag)), antilinear: false, provenance: "id".into() }
    }

    pub fn from_matrix(tag: RingTag, m: FMat<F>, antilinear: bool, provenance: impl Into<String>) -> Result<Self, OperatorError> {
        if m.n != jdim(tag) {
            return Err(OperatorError::DimensionMismatch(m.n, jdim(tag)));
        }
        Ok(JOperator { tag, m, antilinear, provenance: provenance.into() })
    }

    /// Matrix of a map that is linear over the outer field, read off the
    /// images of the canonical basis.
    pub fn from_linear_map(
        tag: RingTag,
        provenance: impl Into<String>,
        f: impl Fn(&JordanElement<F>) -> Result<JordanElement<F>, OperatorError>,
    ) -> Result<Self, OperatorError> {
        let n = jdim(tag);
        let cols = JordanElement::<F>::basis(tag)
            .iter()
            .map(|b| {
                let y = f(b)?;
                if y.tag() != tag {
                    return Err(AlgebraError::RingMismatch(tag, y.tag()).into());
                }
                Ok(y.coords())
            })
            .collect::<Result<Vec<_>, OperatorError>>()?;
        let m = FMat::from_fn(n, |i, j| cols[j][i].clone());
        Ok(JOperator { tag, m, antilinear: false, provenance: provenance.into() })
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.m.n
    }

    pub fn matrix(&self) -> &FMat<F> {
        &self.m
    }

    pub fn into_matrix(self) -> FMat<F> {
        self.m
    }

    pub fn is_antilinear(&self) -> bool {
        self.antilinear
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> Self {
        self.provenance = p.into();
        self
    }

    fn check(&self, o: &Self) -> Result<(), OperatorError> {
        if self.tag != o.tag {
            return Err(AlgebraError::RingMismatch(self.tag, o.tag).into());
        }
        Ok(())
    }

    pub fn apply(&self, x: &JordanElement<F>) -> Result<JordanElement<F>, OperatorError> {
        if x.tag() != self.tag {
            return Err(AlgebraError::RingMismatch(self.tag, x.tag()).into());
        }
        let mut v = x.coords();
        if self.antilinear {
            v = v.iter().map(Cx::conj).collect();
        }
        Ok(JordanElement::from_coords(self.tag, &self.m.mul_vec(&v))?)
    }

    /// `self ∘ o`
    pub fn compose(&self, o: &Self) -> Result<Self, OperatorError> {
        self.check(o)?;
        let rhs = if self.antilinear { o.m.conj() } else { o.m.clone() };
        Ok(JOperator {
            tag: self.tag,
            m: self.m.mul(&rhs),
            antilinear: self.antilinear ^ o.antilinear,
            provenance: format!("{} ∘ {}", self.provenance, o.provenance),
        })
    }

    pub fn inverse(&self) -> Result<Self, OperatorError> {
        let inv = self.m.inverse().ok_or(OperatorError::Singular)?;
        // (v ↦ M v̄)⁻¹ = (w ↦ M̄⁻¹ w̄)
        let m = if self.antilinear { inv.conj() } else { inv };
        Ok(JOperator { tag: self.tag, m, antilinear: self.antilinear, provenance: format!("({})⁻¹", self.provenance) })
    }

    /// Transpose with respect to `(·,·)`: `(ᵗαX, Y) = (X, αY)`.
    pub fn transpose(&self) -> Result<Self, OperatorError> {
        if self.antilinear {
            return Err(OperatorError::Antilinear("transpose"));
        }
        let g = gram::<F>(self.tag);
        let m = FMat::from_fn(self.m.n, |i, j| &(&g[i].inv() * self.m.at(j, i)) * &g[j]);
        Ok(JOperator { tag: self.tag, m, antilinear: false, provenance: format!("ᵗ({})", self.provenance) })
    }

    /// λ(α) = ᵗα⁻¹
    pub fn lambda(&self) -> Result<Self, OperatorError> {
        Ok(self.transpose()?.inverse()?.with_provenance(format!("λ({})", self.provenance)))
    }

    /// Largest entry of the matrix difference; infinite when one operator
    /// is linear and the other conjugate-linear.
    pub fn distance(&self, o: &Self) -> f64 {
        if self.tag != o.tag || self.antilinear != o.antilinear {
            return f64::INFINITY;
        }
        self.m.distance(&o.m)
    }

    /// Exact equality for the exact backend, `distance ≤ tol` for floats.
    pub fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        if F::EXACT {
            self.tag == o.tag && self.antilinear == o.antilinear && self.m == o.m
        } else {
            self.distance(o) <= tol
        }
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.approx_eq(&Self::identity(self.tag), tol)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.m.n)
            .map(|i| Value::Array((0..self.m.n).map(|j| self.m.at(i, j).to_json()).collect()))
            .collect();
        json!({
            "ring": self.tag.as_str(),
            "dim": self.m.n,
            "matrix": rows,
            "antilinear": self.antilinear,
            "provenance": self.provenance,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, OperatorError> {
        let perr = |m: &str| OperatorError::Algebra(AlgebraError::Parse(m.to_string()));
        let tag: RingTag = v.get("ring").and_then(Value::as_str).ok_or_else(|| perr("missing \"ring\""))?.parse()?;
        let rows = v.get("matrix").and_then(Value::as_array).ok_or_else(|| perr("missing \"matrix\""))?;
        let mut d = Vec::new();
        for r in rows {
            for z in r.as_array().ok_or_else(|| perr("rows must be arrays"))? {
                d.push(Cx::from_json(z)?);
            }
        }
        let n = rows.len();
        if d.len() != n * n {
            return Err(perr("matrix must be square"));
        }
        let antilinear = v.get("antilinear").and_then(Value::as_bool).unwrap_or(false);
        let provenance = v.get("provenance").and_then(Value::as_str).unwrap_or("").to_string();
        Self::from_matrix(tag, FMat { n, d }, antilinear, provenance)
    }
}

// ---------------------------------------------------------------------------
// Involutions

/// τ: conjugation of the outer field, conjugate-linear.
pub fn tau_op<F: Field>(tag: RingTag) -> Result<JOperator<F>, OperatorError> {
    if !tag.is_complexified() {
        return Err(OperatorError::MissingInvolution("tau", tag));
    }
    Ok(JOperator { tag, m: FMat::identity(jdim(tag)), antilinear: true, provenance: "τ".into() })
}

/// σ: `X ↦ I₁XI₁`.
pub fn sigma_op<F: Field>(tag: RingTag) -> JOperator<F> {
    JOperator::from_linear_map(tag, "σ", |x| Ok(x.sigma_act())).expect("σ is linear")
}

/// γ applied entrywise (ℂ^C, ℍ^C).
pub fn gamma_op<F: Field>(tag: RingTag) -> Result<JOperator<F>, OperatorError> {
    if !tag.has_gamma() {
        return Err(OperatorError::MissingInvolution("gamma", tag));
    }
    JOperator::from_linear_map(tag, "γ", |x| Ok(x.gamma_act()?))
}

/// ε: entrywise internal conjugation on 𝔍(3, ℂ^C).
pub fn eps_op<F: Field>(tag: RingTag) -> Result<JOperator<F>, OperatorError> {
    if tag != RingTag::CC && tag != RingTag::C && tag != RingTag::Csplit {
        return Err(OperatorError::MissingInvolution("eps", tag));
    }
    JOperator::from_linear_map(tag, "ε", |x| Ok(x.eps_act()?))
}

/// ν = h₆(Iᵢ) on 𝔍(3, ℍ^C).
pub fn nu_op<F: Field>() -> Result<JOperator<F>, OperatorError> {
    Ok(h6hc(&constant_ii(RingTag::RC))?.with_provenance("ν"))
}

/// All named involutions available on `tag`.
pub fn involution_ops<F: Field>(tag: RingTag) -> Vec<(&'static str, JOperator<F>)> {
    let mut out = vec![("sigma", sigma_op(tag))];
    if let Ok(t) = tau_op(tag) {
        out.push(("tau", t));
    }
    if let Ok(g) = gamma_op(tag) {
        out.push(("gamma", g));
    }
    if let Ok(e) = eps_op(tag) {
        out.push(("eps", e));
    }
    if tag == RingTag::HC {
        out.push(("nu", nu_op().expect("Iᵢ ∈ SL(6, C)")));
    }
    out
}

// ---------------------------------------------------------------------------
// Fixed points and split transport

/// Automorphisms of the complex groups whose fixed points are real forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Automorphism {
    /// `α ↦ τατ`
    Tau,
    /// `α ↦ τ ᵗα⁻¹ τ`
    TauLambda,
    /// `α ↦ τγ α γτ`
    TauGamma,
    /// `α ↦ τσ ᵗα⁻¹ στ`
    TauLambdaSigma,
}

impl Automorphism {
    pub const ALL: [Automorphism; 4] =
        [Automorphism::Tau, Automorphism::TauLambda, Automorphism::TauGamma, Automorphism::TauLambdaSigma];

    pub fn name(self) -> &'static str {
        match self {
            Automorphism::Tau => "tau",
            Automorphism::TauLambda => "tau-lambda",
            Automorphism::TauGamma => "tau-gamma",
            Automorphism::TauLambdaSigma => "tau-lambda-sigma",
        }
    }

    /// The image of `α` under the automorphism.
    pub fn apply<F: Field>(self, a: &JOperator<F>) -> Result<JOperator<F>, OperatorError> {
        let tau = tau_op::<F>(a.tag)?;
        let inner = match self {
            Automorphism::Tau => a.clone(),
            Automorphism::TauLambda => a.lambda()?,
            Automorphism::TauGamma => {
                let g = gamma_op::<F>(a.tag)?;
                g.compose(a)?.compose(&g)?
            }
            Automorphism::TauLambdaSigma => {
                let s = sigma_op::<F>(a.tag);
                s.compose(&a.lambda()?)?.compose(&s)?
            }
        };
        tau.compose(&inner)?.compose(&tau)
    }
}

impl std::str::FromStr for Automorphism {
    type Err = OperatorError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k = s.to_ascii_lowercase().replace(['-', '_', ' '], "");
        Ok(match k.as_str() {
            "tau" | "τ" => Automorphism::Tau,
            "taulambda" | "τλ" => Automorphism::TauLambda,
            "taugamma" | "τγ" => Automorphism::TauGamma,
            "taulambdasigma" | "τλσ" => Automorphism::TauLambdaSigma,
            _ => return Err(OperatorError::Matrix(format!("unknown automorphism {s:?}"))),
        })
    }
}

/// Result of a fixed-point test.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedCheck {
    pub fixed: bool,
    pub residual: f64,
}

/// Evaluates `θ(α) = α` as a matrix residual.
///
/// On the exact backend the λ-type tests skip the inverse: `τλα = α` iff
/// `ᵗα · τατ = 1` (and `ᵗα · στατσ = 1` with σ), and the residual is the
/// distance of that product from the identity.
pub fn fixed_by<F: Field>(a: &JOperator<F>, aut: Automorphism, tol: f64) -> Result<FixedCheck, OperatorError> {
    if F::EXACT && !a.antilinear && matches!(aut, Automorphism::TauLambda | Automorphism::TauLambdaSigma) {
        let tau = tau_op::<F>(a.tag)?;
        let mut b = tau.compose(a)?.compose(&tau)?;
        if aut == Automorphism::TauLambdaSigma {
            let s = sigma_op::<F>(a.tag);
            b = s.compose(&b)?.compose(&s)?;
        }
        let prod = a.transpose()?.compose(&b)?;
        let id = JOperator::identity(a.tag);
        return Ok(FixedCheck { fixed: prod.approx_eq(&id, tol), residual: prod.distance(&id) });
    }
    let img = aut.apply(a)?;
    Ok(FixedCheck { fixed: img.approx_eq(a, tol), residual: img.distance(a) })
}

/// Projects a τγ-fixed element of 𝔍(3, ℂ^C) / 𝔍(3, ℍ^C) onto the split
/// algebra. Floats are symmetrized first; the asymmetry is the residual.
fn split_project<F: Field>(x: &JordanElement<F>, tol: f64) -> Result<JordanElement<F>, OperatorError> {
    if F::EXACT {
        return Ok(x.split_embed()?);
    }
    let fx = x.gamma_act()?.tau_act();
    let resid = x.distance(&fx);
    if resid > tol {
        return Err(OperatorError::NotFixed(resid));
    }
    let sym = x.add(&fx).scale(&Cx::from_ratio(1, 2));
    Ok(sym.split_embed()?)
}

/// `f α f⁻¹` on the split algebra, where `f` is the identification of the
/// τγ-fixed part of 𝔍(3, K^C) with 𝔍(3, K′).
pub fn transport_split<F: Field>(a: &JOperator<F>, tol: f64) -> Result<JOperator<F>, OperatorError> {
    let chk = fixed_by(a, Automorphism::TauGamma, tol)?;
    if !chk.fixed {
        return Err(OperatorError::NotFixed(chk.residual));
    }
    let split = a.tag.split_form().ok_or(OperatorError::MissingInvolution("gamma", a.tag))?;
    let op = JOperator::from_linear_map(split, format!("f·({})·f⁻¹", a.provenance), |y| {
        let x = y.split_unembed()?;
        split_project(&a.apply(&x)?, tol.max(1e-12))
    })?;
    Ok(op)
}

// ---------------------------------------------------------------------------
// Realization maps

/// The Hermitian matrix of `x` as a 3×3 ring matrix.
pub fn to_gmatrix<F: Field>(x: &JordanElement<F>) -> GMatrix<F> {
    let m = x.to_matrix();
    GMatrix::from_fn(x.tag(), 3, |i, j| m[i][j].clone())
}

/// Reads a Hermitian 3×3 ring matrix back into 𝔍(3, K).
pub fn from_gmatrix<F: Field>(m: &GMatrix<F>) -> Result<JordanElement<F>, OperatorError> {
    let mat: Mat3<F> = std::array::from_fn(|i| std::array::from_fn(|j| m.at(i, j).clone()));
    Ok(JordanElement::from_matrix(&mat)?)
}

fn require_shape<F: Field>(a: &GMatrix<F>, tag: RingTag, n: usize) -> Result<(), OperatorError> {
    if a.tag() != tag {
        return Err(AlgebraError::RingMismatch(tag, a.tag()).into());
    }
    if a.n() != n {
        return Err(OperatorError::Matrix(format!("expected a {n}×{n} matrix, got {0}×{0}", a.n())));
    }
    Ok(())
}

/// `X ↦ A X ᵗA` on 𝔍(3, ℝ^C) for a 3×3 matrix over C (tag ℝ^C).
pub fn f6c<F: Field>(a: &GMatrix<F>) -> Result<JOperator<F>, OperatorError> {
    require_shape(a, RingTag::RC, 3)?;
    let at = a.transpose();
    JOperator::from_linear_map(RingTag::RC, "f6,C(A)", |x| from_gmatrix(&(&(a * &to_gmatrix(x)) * &at)))
}

/// `X ↦ A X A*` (or `A X̄ A*` when `eps`) on 𝔍(3, ℂ^C).
pub fn f4cc<F: Field>(a: &GMatrix<F>, eps: bool) -> Result<JOperator<F>, OperatorError> {
    require_shape(a, RingTag::CC, 3)?;
    let prov = if eps { "f4,C^C(A,ε)" } else { "f4,C^C(A,1)" };
    conjugation_op(a, eps, prov)
}

fn conjugation_op<F: Field>(h: &GMatrix<F>, eps: bool, prov: &str) -> Result<JOperator<F>, OperatorError> {
    let hs = h.star();
    JOperator::from_linear_map(RingTag::CC, prov, |x| {
        let x = if eps { x.eps_act()? } else { x.clone() };
        from_gmatrix(&(&(h * &to_gmatrix(&x)) * &hs))
    })
}

/// `h(A, B) = ῑA + ιB`
pub fn hmap<F: Field>(a: &GMatrix<F>, b: &GMatrix<F>) -> Result<GMatrix<F>, OperatorError> {
    if a.tag() != RingTag::CC || b.tag() != RingTag::CC {
        return Err(AlgebraError::RingMismatch(RingTag::CC, if a.tag() != RingTag::CC { a.tag() } else { b.tag() }).into());
    }
    if a.n() != b.n() {
        return Err(OperatorError::DimensionMismatch(a.n(), b.n()));
    }
    let iota = Scalar::<F>::iota();
    Ok(&a.scale(&iota.conj()) + &b.scale(&iota))
}

/// `X ↦ h(A,B) X h(A,B)*` (or with `X̄` when `eps`) on 𝔍(3, ℂ^C).
pub fn f6cc<F: Field>(a: &GMatrix<F>, b: &GMatrix<F>, eps: bool) -> Result<JOperator<F>, OperatorError> {
    require_shape(a, RingTag::CC, 3)?;
    let h = hmap(a, b)?;
    let prov = if eps { "f6,C^C((A,B),ε)" } else { "f6,C^C((A,B),1)" };
    conjugation_op(&h, eps, prov)
}

/// `X ↦ k⁻¹(A (kX) A*)` on 𝔍(3, ℍ^C) for a 6×6 matrix over ℂ^C.
pub fn f6hc<F: Field>(a: &GMatrix<F>) -> Result<JOperator<F>, OperatorError> {
    require_shape(a, RingTag::CC, 6)?;
    let astar = a.star();
    let tol = matgroups::precondition_tol::<F>();
    JOperator::from_linear_map(RingTag::HC, "f6,H^C(A)", |x| {
        let kx = matgroups::kmap(&to_gmatrix(x)).map_err(matrix_err)?;
        let y = &(a * &kx) * &astar;
        let scale = y.max_abs().max(1.0);
        let back = matgroups::kinv(&y, RingTag::HC, tol * scale).map_err(|e| match e {
            crate::error::GroupError::NotQuaternionic(r) => OperatorError::NotInKImage(r),
            e => matrix_err(e),
        })?;
        from_gmatrix(&back)
    })
}

/// g = f₆,ℍ^C ∘ φ on SU(6, ℂ^C).
pub fn g6hc<F: Field>(b: &GMatrix<F>) -> Result<JOperator<F>, OperatorError> {
    let p = matgroups::phi_bridge(b).map_err(matrix_err)?;
    Ok(f6hc(&p)?.with_provenance("g6,H^C(B)"))
}

/// h₆ = f₆,ℍ^C ∘ ψ on SL(6, C).
pub fn h6hc<F: Field>(b: &GMatrix<F>) -> Result<JOperator<F>, OperatorError> {
    let p = matgroups::psi_bridge(b).map_err(matrix_err)?;
    Ok(f6hc(&p)?.with_provenance("h6,H^C(B)"))
}

/// l = f₆,ℍ^C ∘ ζ on SU(2,4, ℂ^C).
pub fn l6hc<F: Field>(b: &GMatrix<F>) -> Result<JOperator<F>, OperatorError> {
    let p = matgroups::zeta_bridge(b).map_err(matrix_err)?;
    Ok(f6hc(&p)?.with_provenance("l6,H^C(B)"))
}

/// `J·A·J` (used by the γ-conjugation identity for f₆,ℍ^C).
pub fn j_conjugate<F: Field>(a: &GMatrix<F>) -> GMatrix<F> {
    let j = constant_j::<F>(a.tag());
    &(&j * a) * &j
}

/// `I₂·A·I₂`
pub fn i2_conjugate<F: Field>(a: &GMatrix<F>) -> GMatrix<F> {
    let i2 = constant_i2::<F>(a.tag());
    &(&i2 * a) * &i2
}

// ---------------------------------------------------------------------------
// Group-element claims

/// The groups of operators on 𝔍(3, K) the realizations land in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupForm {
    /// (E₆,K)^C: `det(αX) = det X`.
    E6Complex,
    /// E₆,K: also fixed by τλ (preserves ⟨·,·⟩).
    E6Compact,
    /// E₆₍₋₁₄₎,K: also fixed by τλσ (preserves ⟨·,·⟩_σ).
    E6Minus14,
    /// E₆₍₋₂₆₎,K: also fixed by τ.
    E6Minus26,
    /// E₆₍₆₎,K′ (inside the complex group): also fixed by τγ.
    E6Split,
    /// (F₄,ℂ)^C: det-preserving with `αE = E`.
    F4Complex,
}

impl GroupForm {
    pub fn name(self) -> &'static str {
        match self {
            GroupForm::E6Complex => "(E6,K)^C",
            GroupForm::E6Compact => "E6,K",
            GroupForm::E6Minus14 => "E6(-14),K",
            GroupForm::E6Minus26 => "E6(-26),K",
            GroupForm::E6Split => "E6(6),K'",
            GroupForm::F4Complex => "(F4,C)^C",
        }
    }
}

/// Sampled evidence that an operator lies in a group.
#[derive(Clone, Debug)]
pub struct GroupElementClaim<F> {
    pub operator: JOperator<F>,
    pub group: GroupForm,
    pub samples: usize,
    /// `(relation, max residual)` pairs.
    pub evidence: Vec<(String, f64)>,
    pub holds: bool,
}

/// Largest `|det(αX) − det X|` over `trials` random X.
pub fn det_residual<F: Field, R: Rng + ?Sized>(a: &JOperator<F>, trials: usize, rng: &mut R) -> Result<(f64, bool), OperatorError> {
    let mut worst: f64 = 0.0;
    let mut exact = true;
    for _ in 0..trials {
        let x = JordanElement::random(a.tag, rng);
        let (d0, d1) = (x.det(), a.apply(&x)?.det());
        worst = worst.max((&d1 - &d0).abs_f64());
        exact &= d0 == d1;
    }
    Ok((worst, exact))
}

fn pass<F: Field>(resid: f64, exact_ok: bool, tol: f64) -> bool {
    if F::EXACT {
        exact_ok
    } else {
        resid <= tol
    }
}

/// Evaluates the defining relations of `group` for `a` on `trials` random
/// elements (seeded by `seed`).
pub fn claim<F: Field>(
    a: &JOperator<F>,
    group: GroupForm,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<GroupElementClaim<F>, OperatorError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut evidence = Vec::new();
    let mut holds = trials > 0;
    let (r, ok) = det_residual(a, trials, &mut rng)?;
    holds &= pass::<F>(r, ok, tol);
    evidence.push(("det(αX) = det X".to_string(), r));
    let aut = match group {
        GroupForm::E6Complex => None,
        GroupForm::E6Compact => Some(Automorphism::TauLambda),
        GroupForm::E6Minus14 => Some(Automorphism::TauLambdaSigma),
        GroupForm::E6Minus26 => Some(Automorphism::Tau),
        GroupForm::E6Split => Some(Automorphism::TauGamma),
        GroupForm::F4Complex => {
            let e = JordanElement::identity(a.tag);
            let img = a.apply(&e)?;
            let r = img.distance(&e);
            holds &= pass::<F>(r, img == e, tol);
            evidence.push(("αE = E".to_string(), r));
            None
        }
    };
    if let Some(aut) = aut {
        let chk = fixed_by(a, aut, tol)?;
        holds &= chk.fixed;
        evidence.push((format!("fixed by {}", aut.name()), chk.residual));
    }
    Ok(GroupElementClaim { operator: a.clone(), group, samples: trials, evidence, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Exact;
    use crate::matgroups::{constant_i1, GroupSpec};
    use proptest::prelude::*;

    type E = Exact;

    fn rng(s: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(s)
    }

    fn sample<F: Field>(g: GroupSpec, s: u64) -> GMatrix<F> {
        g.sample(&mut rng(s))
    }

    fn omega_cc() -> GMatrix<E> {
        GMatrix::identity(RingTag::CC, 3).scale(&Scalar::internal_omega(RingTag::CC).unwrap())
    }

    #[test]
    fn identity_constructors() {
        let e3 = GMatrix::<E>::identity(RingTag::CC, 3);
        assert!(f6c(&GMatrix::<E>::identity(RingTag::RC, 3)).unwrap().is_identity(0.0));
        assert!(f4cc(&e3, false).unwrap().is_identity(0.0));
        assert!(f6cc(&e3, &e3, false).unwrap().is_identity(0.0));
        assert!(f6hc(&GMatrix::<E>::identity(RingTag::CC, 6)).unwrap().is_identity(0.0));
        assert_eq!(hmap(&e3, &e3).unwrap(), e3);
        assert!(JOperator::<E>::identity(RingTag::HC).transpose().unwrap().is_identity(0.0));
    }

    #[test]
    fn kernels() {
        let w = omega_cc();
        let w2 = &w * &w;
        assert!(f4cc(&w, false).unwrap().is_identity(0.0));
        assert!(f4cc(&w2, false).unwrap().is_identity(0.0));
        assert!(f6cc(&w, &w, false).unwrap().is_identity(0.0));
        assert!(f6cc(&w2, &w2, false).unwrap().is_identity(0.0));
        assert!(f6hc(&-&GMatrix::<E>::identity(RingTag::CC, 6)).unwrap().is_identity(0.0));
        // The outer cube root of unity is not in the kernel of f6,C:
        // X ↦ ω²X.
        let w = GMatrix::<E>::identity(RingTag::RC, 3).scale_outer(&Cx::omega());
        let op = f6c(&w).unwrap();
        let x = JordanElement::<E>::random(RingTag::RC, &mut rng(1));
        assert_eq!(op.apply(&x).unwrap(), x.scale(&(&Cx::omega() * &Cx::omega())));
        assert!(!op.is_identity(0.0));
    }

    #[test]
    fn f4cc_with_eps_is_entrywise_conjugation() {
        let e3 = GMatrix::<E>::identity(RingTag::CC, 3);
        assert_eq!(f4cc(&e3, true).unwrap().into_matrix(), eps_op::<E>(RingTag::CC).unwrap().into_matrix());
    }

    #[test]
    fn involutions_square_to_identity() {
        for tag in [RingTag::RC, RingTag::CC, RingTag::HC] {
            for (name, op) in involution_ops::<E>(tag) {
                assert!(op.compose(&op).unwrap().is_identity(0.0), "{name} on {tag}");
            }
        }
        let tau = tau_op::<E>(RingTag::RC).unwrap();
        let x = JordanElement::<E>::e(RingTag::RC, 1).add(&JordanElement::e(RingTag::RC, 2).scale(&Cx::i()));
        let want = JordanElement::<E>::e(RingTag::RC, 1).sub(&JordanElement::e(RingTag::RC, 2).scale(&Cx::i()));
        assert_eq!(tau.apply(&x).unwrap(), want);
    }

    #[test]
    fn gamma_and_sigma_are_f6hc_of_j_and_i2() {
        let j = constant_j::<E>(RingTag::CC);
        assert_eq!(f6hc(&j).unwrap().into_matrix(), gamma_op::<E>(RingTag::HC).unwrap().into_matrix());
        let i2 = constant_i2::<E>(RingTag::CC);
        assert_eq!(f6hc(&i2).unwrap().into_matrix(), sigma_op::<E>(RingTag::HC).matrix().clone());
    }

    #[test]
    fn transpose_of_eps_is_eps() {
        let e = eps_op::<E>(RingTag::CC).unwrap();
        assert_eq!(e.transpose().unwrap().into_matrix(), e.matrix().clone());
        assert!(tau_op::<E>(RingTag::CC).unwrap().transpose().is_err());
    }

    #[test]
    fn fixed_by_examples() {
        let id = JOperator::<E>::identity(RingTag::CC);
        for aut in Automorphism::ALL {
            assert!(fixed_by(&id, aut, 0.0).unwrap().fixed);
        }
        let (a, b) = (sample::<E>(GroupSpec::SU3Real, 1), sample::<E>(GroupSpec::SU3Real, 2));
        assert!(fixed_by(&f6cc(&a, &b, false).unwrap(), Automorphism::TauLambda, 0.0).unwrap().fixed);
        // A generic pair from SU(3, ℂ^C) is not τλ-fixed.
        let (a, b) = (sample::<E>(GroupSpec::SU3CC, 3), sample::<E>(GroupSpec::SU3CC, 4));
        let chk = fixed_by(&f6cc(&a, &b, false).unwrap(), Automorphism::TauLambda, 0.0).unwrap();
        assert!(!chk.fixed && chk.residual > 1e-6);
    }

    #[test]
    fn exact_lambda_shortcut_agrees_with_the_image() {
        let cases = [
            f6cc(&sample::<E>(GroupSpec::SU3Real, 6), &sample::<E>(GroupSpec::SU3Real, 7), false).unwrap(),
            f6cc(&sample::<E>(GroupSpec::SU12Real, 8), &sample::<E>(GroupSpec::SU12Real, 9), false).unwrap(),
            f6cc(&sample::<E>(GroupSpec::SU3CC, 10), &sample::<E>(GroupSpec::SU3CC, 11), false).unwrap(),
            f6c(&sample::<E>(GroupSpec::SU12, 12)).unwrap(),
        ];
        for op in &cases {
            for aut in [Automorphism::TauLambda, Automorphism::TauLambdaSigma] {
                let direct = aut.apply(op).unwrap().approx_eq(op, 0.0);
                assert_eq!(fixed_by(op, aut, 0.0).unwrap().fixed, direct, "{aut:?} on {}", op.provenance);
            }
        }
    }

    #[test]
    fn transport_of_identity_and_split_scaling() {
        let id = JOperator::<E>::identity(RingTag::CC);
        assert!(transport_split(&id, 0.0).unwrap().is_identity(0.0));
        let x = JOperator::<E>::identity(RingTag::CC).compose(&sigma_op(RingTag::CC)).unwrap();
        assert_eq!(transport_split(&x, 0.0).unwrap().into_matrix(), sigma_op::<E>(RingTag::Csplit).matrix().clone());
        let a = sample::<E>(GroupSpec::SU3CC, 5);
        let op = f4cc(&a, false).unwrap();
        assert!(matches!(transport_split(&op, 0.0), Err(OperatorError::NotFixed(_))));
    }

    #[test]
    fn omega_is_not_tau_gamma_fixed() {
        let w = omega_cc();
        assert!(!GroupSpec::SU3TauGamma.member(&w, 0.0).unwrap().member);
        assert!(!GroupSpec::SU3TauGamma.member(&(&w * &w), 0.0).unwrap().member);
    }

    #[test]
    fn json_roundtrip() {
        let op = f6c(&sample::<E>(GroupSpec::SL3C, 9)).unwrap();
        assert_eq!(JOperator::from_json(&op.to_json()).unwrap(), op);
        let t = tau_op::<f64>(RingTag::HC).unwrap();
        assert_eq!(JOperator::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn claims_are_evaluated() {
        let a = sample::<E>(GroupSpec::SU3, 4);
        let c = claim(&f6c(&a).unwrap(), GroupForm::E6Compact, 5, 1, 0.0).unwrap();
        assert!(c.holds, "{:?}", c.evidence);
        let c = claim(&f6c(&a).unwrap(), GroupForm::E6Minus14, 5, 1, 0.0).unwrap();
        assert!(!c.holds);
        let c = claim(&f6c(&a).unwrap(), GroupForm::E6Complex, 0, 1, 0.0).unwrap();
        assert!(!c.holds, "zero trials is vacuous");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn prop_transpose_adjoint_and_involutive(s in 0u64..10_000, t in 0usize..3) {
            let tag = [RingTag::RC, RingTag::CC, RingTag::HC][t];
            let mut r = rng(s);
            let op = JOperator::from_matrix(tag, FMat::from_fn(jdim(tag), |_, _| Cx::<E>::random(&mut r)), false, "M").unwrap();
            let (x, y) = (JordanElement::random(tag, &mut r), JordanElement::random(tag, &mut r));
            let tr = op.transpose().unwrap();
            prop_assert_eq!(tr.apply(&x).unwrap().ip(&y).unwrap(), x.ip(&op.apply(&y).unwrap()).unwrap());
            prop_assert_eq!(tr.transpose().unwrap().into_matrix(), op.matrix().clone());
        }

        #[test]
        fn prop_compose_and_inverse_for_antilinear(s in 0u64..10_000) {
            let tag = RingTag::CC;
            let mut r = rng(s);
            let m = FMat::from_fn(jdim(tag), |_, _| Cx::<E>::random(&mut r));
            let op = JOperator::from_matrix(tag, m, true, "M").unwrap();
            let x = JordanElement::random(tag, &mut r);
            let inv = op.inverse().unwrap();
            prop_assert_eq!(inv.apply(&op.apply(&x).unwrap()).unwrap(), x.clone());
            let comp = op.compose(&op).unwrap();
            prop_assert_eq!(comp.apply(&x).unwrap(), op.apply(&op.apply(&x).unwrap()).unwrap());
        }

        #[test]
        fn prop_f6c_lemma_identities(s in 0u64..10_000) {
            let a = sample::<E>(GroupSpec::SL3C, s);
            let f = f6c(&a).unwrap();
            prop_assert_eq!(f.transpose().unwrap().into_matrix(), f6c(&a.transpose()).unwrap().into_matrix());
            let sg = sigma_op::<E>(RingTag::RC);
            let i1 = constant_i1::<E>(RingTag::RC);
            prop_assert_eq!(sg.compose(&f).unwrap().compose(&sg).unwrap().into_matrix(), f6c(&(&(&i1 * &a) * &i1)).unwrap().into_matrix());
            let t = tau_op::<E>(RingTag::RC).unwrap();
            let lhs = t.compose(&f).unwrap().compose(&t).unwrap();
            prop_assert!(lhs.approx_eq(&f6c(&a.tau()).unwrap(), 0.0));
            let b = sample::<E>(GroupSpec::SL3C, s + 1);
            let ab = f6c(&(&a * &b)).unwrap();
            prop_assert_eq!(ab.into_matrix(), f.compose(&f6c(&b).unwrap()).unwrap().into_matrix());
        }

        #[test]
        fn prop_hmap_laws(s in 0u64..10_000) {
            let g = GroupSpec::SU3CC;
            let (a, b, c, d) = (sample::<E>(g, s), sample::<E>(g, s + 1), sample::<E>(g, s + 2), sample::<E>(g, s + 3));
            let h = hmap(&a, &b).unwrap();
            prop_assert_eq!(&h * &hmap(&c, &d).unwrap(), hmap(&(&a * &c), &(&b * &d)).unwrap());
            prop_assert_eq!(h.tau(), hmap(&b.tau(), &a.tau()).unwrap());
            prop_assert_eq!(h.conj(), hmap(&b.conj(), &a.conj()).unwrap());
            prop_assert_eq!(h.star(), hmap(&b.star(), &a.star()).unwrap());
            let iota = Scalar::<E>::iota();
            let want = &(&iota.conj() * &a.det().unwrap()) + &(&iota * &b.det().unwrap());
            prop_assert_eq!(h.det().unwrap(), want);
        }

        #[test]
        fn prop_f6cc_semidirect_law(s in 0u64..10_000, e1 in any::<bool>(), e2 in any::<bool>()) {
            let g = GroupSpec::SU3CC;
            let (a1, b1, a2, b2) = (sample::<E>(g, s), sample::<E>(g, s + 1), sample::<E>(g, s + 2), sample::<E>(g, s + 3));
            let lhs = f6cc(&a1, &b1, e1).unwrap().compose(&f6cc(&a2, &b2, e2).unwrap()).unwrap();
            let (a, b) = if e1 { (&a1 * &b2.conj(), &b1 * &a2.conj()) } else { (&a1 * &a2, &b1 * &b2) };
            prop_assert_eq!(lhs.into_matrix(), f6cc(&a, &b, e1 ^ e2).unwrap().into_matrix());
        }

        #[test]
        fn prop_f4cc_semidirect_law(s in 0u64..10_000, e1 in any::<bool>(), e2 in any::<bool>()) {
            let g = GroupSpec::SU3CC;
            let (a1, a2) = (sample::<E>(g, s), sample::<E>(g, s + 1));
            let lhs = f4cc(&a1, e1).unwrap().compose(&f4cc(&a2, e2).unwrap()).unwrap();
            let a = if e1 { &a1 * &a2.conj() } else { &a1 * &a2 };
            let rhs = f4cc(&a, e1 ^ e2).unwrap();
            prop_assert_eq!(lhs.matrix(), rhs.matrix());
            prop_assert!(claim(&rhs, GroupForm::F4Complex, 3, s, 0.0).unwrap().holds);
        }

        #[test]
        fn prop_f6hc_is_det_preserving(s in 0u64..10_000) {
            let a = sample::<E>(GroupSpec::SUStar6CC, s);
            let op = f6hc(&a).unwrap();
            prop_assert!(claim(&op, GroupForm::E6Complex, 3, s, 0.0).unwrap().holds);
        }
    }

    #[test]
    fn float_transport_is_det_preserving() {
        for s in 0..5 {
            let (a, b) = (sample::<f64>(GroupSpec::SU3TauGamma, s), sample::<f64>(GroupSpec::SU3TauGamma, s + 100));
            let op = f6cc(&a, &b, false).unwrap();
            let t = transport_split(&op, 1e-9).unwrap();
            let (r, _) = det_residual(&t, 20, &mut rng(s)).unwrap();
            assert!(r < 1e-9, "{r}");
        }
    }
}
