use rand::Rng;
use std::fmt;
use std::str::FromStr;

use super::{constant_i1, constant_i2, constant_j, psi_bridge, GMatrix};
use crate::algebra::{Cx, RingTag, Scalar};
use crate::error::GroupError;
use crate::field::Field;

/// The classical groups that parametrize the realizations.
///
/// Groups written over ℂ^C or ℂ′ use the internal conjugate transpose
/// `A* = ᵗĀ`; the 3×3 groups over the outer field use `τᵗA`. The
/// `*Real`/`*TauGamma` variants are the same real forms realized inside
/// SU(3, ℂ^C) as fixed points of an involution, which is the shape the
/// ℂ^C realization maps consume.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    SL3C,
    SL3R,
    SL6R,
    SL6C,
    SU3,
    SU12,
    SU6,
    SU24,
    SUStar6,
    SU3CC,
    SU3Csplit,
    SU24CC,
    SU6CC,
    SUStar6CC,
    /// τ-fixed part of SU(3, ℂ^C) (a copy of SU(3)).
    SU3Real,
    /// Fixed points of `A ↦ I₁(τA)I₁` in SU(3, ℂ^C) (a copy of SU(1,2)).
    SU12Real,
    /// τγ-fixed part of SU(3, ℂ^C) (a copy of SU(3, ℂ′)).
    SU3TauGamma,
}

/// Involutions cutting out real forms: `A ↦ θ(A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Twist {
    None,
    Tau,
    TauGamma,
    /// `A ↦ I₁(τA)I₁`
    TauI1,
    /// `A ↦ J(τA)J⁻¹` (outer-field SU*(6) inside SL(6, C))
    TauJ,
}

/// Which adjoint a unitary-type group uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Adjoint {
    /// `A*` (internal conjugate transpose)
    Star,
    /// `τᵗA`
    TauT,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Form {
    E,
    I1,
    I2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Special,
    Unitary(Adjoint, Form),
    /// `J Ā J⁻¹ = A`
    Quaternionic,
}

/// Outcome of a membership test.
#[derive(Clone, Debug, PartialEq)]
pub struct Membership {
    pub member: bool,
    pub residual: f64,
    /// Relations that failed, with their residuals.
    pub failures: Vec<(String, f64)>,
}

impl GroupSpec {
    pub const ALL: [GroupSpec; 17] = [
        GroupSpec::SL3C,
        GroupSpec::SL3R,
        GroupSpec::SL6R,
        GroupSpec::SL6C,
        GroupSpec::SU3,
        GroupSpec::SU12,
        GroupSpec::SU6,
        GroupSpec::SU24,
        GroupSpec::SUStar6,
        GroupSpec::SU3CC,
        GroupSpec::SU3Csplit,
        GroupSpec::SU24CC,
        GroupSpec::SU6CC,
        GroupSpec::SUStar6CC,
        GroupSpec::SU3Real,
        GroupSpec::SU12Real,
        GroupSpec::SU3TauGamma,
    ];

    pub fn name(self) -> &'static str {
        use GroupSpec::*;
        match self {
            SL3C => "SL(3,C)",
            SL3R => "SL(3,ℝ)",
            SL6R => "SL(6,ℝ)",
            SL6C => "SL(6,C)",
            SU3 => "SU(3)",
            SU12 => "SU(1,2)",
            SU6 => "SU(6)",
            SU24 => "SU(2,4)",
            SUStar6 => "SU*(6)",
            SU3CC => "SU(3,ℂ^C)",
            SU3Csplit => "SU(3,ℂ′)",
            SU24CC => "SU(2,4,ℂ^C)",
            SU6CC => "SU(6,ℂ^C)",
            SUStar6CC => "SU*(6,ℂ^C)",
            SU3Real => "SU(3,ℂ^C)^τ",
            SU12Real => "SU(3,ℂ^C)^τσ",
            SU3TauGamma => "SU(3,ℂ^C)^τγ",
        }
    }

    fn ascii(self) -> &'static str {
        use GroupSpec::*;
        match self {
            SL3C => "SL(3,C)",
            SL3R => "SL(3,R)",
            SL6R => "SL(6,R)",
            SL6C => "SL(6,C)",
            SU3 => "SU(3)",
            SU12 => "SU(1,2)",
            SU6 => "SU(6)",
            SU24 => "SU(2,4)",
            SUStar6 => "SU*(6)",
            SU3CC => "SU(3,CC)",
            SU3Csplit => "SU(3,C')",
            SU24CC => "SU(2,4,CC)",
            SU6CC => "SU(6,CC)",
            SUStar6CC => "SU*(6,CC)",
            SU3Real => "SU(3,CC)^tau",
            SU12Real => "SU(3,CC)^tausigma",
            SU3TauGamma => "SU(3,CC)^taugamma",
        }
    }

    pub fn tag(self) -> RingTag {
        use GroupSpec::*;
        match self {
            SL3C | SL3R | SL6R | SL6C | SU3 | SU12 => RingTag::RC,
            SU3Csplit => RingTag::Csplit,
            _ => RingTag::CC,
        }
    }

    pub fn n(self) -> usize {
        use GroupSpec::*;
        match self {
            SL6R | SL6C | SU6 | SU24 | SUStar6 | SU24CC | SU6CC | SUStar6CC => 6,
            _ => 3,
        }
    }

    fn kind(self) -> Kind {
        use GroupSpec::*;
        match self {
            SL3C | SL3R | SL6R | SL6C => Kind::Special,
            SU3 => Kind::Unitary(Adjoint::TauT, Form::E),
            SU12 => Kind::Unitary(Adjoint::TauT, Form::I1),
            SU6 | SU6CC | SU3CC | SU3Csplit | SU3Real | SU12Real | SU3TauGamma => {
                Kind::Unitary(Adjoint::Star, Form::E)
            }
            SU24 | SU24CC => Kind::Unitary(Adjoint::Star, Form::I2),
            SUStar6 | SUStar6CC => Kind::Quaternionic,
        }
    }

    fn twist(self) -> Twist {
        use GroupSpec::*;
        match self {
            SL3R | SL6R | SU6 | SU24 | SUStar6 | SU3Real => Twist::Tau,
            SU12Real => Twist::TauI1,
            SU3TauGamma => Twist::TauGamma,
            _ => Twist::None,
        }
    }

    fn form<F: Field>(self, f: Form) -> GMatrix<F> {
        match f {
            Form::E => GMatrix::identity(self.tag(), self.n()),
            Form::I1 => constant_i1(self.tag()),
            Form::I2 => constant_i2(self.tag()),
        }
    }

    fn adjoint<F: Field>(a: Adjoint, m: &GMatrix<F>) -> GMatrix<F> {
        match a {
            Adjoint::Star => m.star(),
            Adjoint::TauT => m.tau_transpose(),
        }
    }

    fn apply_twist<F: Field>(t: Twist, m: &GMatrix<F>) -> GMatrix<F> {
        match t {
            Twist::None => m.clone(),
            Twist::Tau => m.tau(),
            Twist::TauGamma => m.tau().gamma().expect("ℂ^C carries γ"),
            Twist::TauI1 => {
                let i1 = constant_i1(m.tag());
                &(&i1 * &m.tau()) * &i1
            }
            Twist::TauJ => {
                let j = constant_j(m.tag());
                &(&j * &m.tau()) * &(-&j)
            }
        }
    }

    /// Evaluates the defining relations of the group on `a`.
    pub fn member<F: Field>(self, a: &GMatrix<F>, tol: f64) -> Result<Membership, GroupError> {
        if a.n() != self.n() {
            return Err(GroupError::Size { expected: self.n(), got: a.n() });
        }
        if a.tag() != self.tag() {
            return Err(crate::error::AlgebraError::RingMismatch(self.tag(), a.tag()).into());
        }
        let mut rel: Vec<(String, f64, bool)> = Vec::new();
        let mut push = |name: &str, lhs: &GMatrix<F>, rhs: &GMatrix<F>| {
            rel.push((name.to_string(), lhs.distance(rhs), lhs == rhs));
        };
        let det = a.det()?;
        let one = GMatrix::identity(a.tag(), 1);
        push("det A = 1", &GMatrix::diag(a.tag(), &[det]), &one);
        match self.kind() {
            Kind::Special => {}
            Kind::Unitary(adj, f) => {
                let h = self.form::<F>(f);
                let (lhs, name) = match (adj, self) {
                    // The outer-field groups are displayed as A·H·(τᵗA) = H.
                    (Adjoint::TauT, _) => (&(a * &h) * &Self::adjoint(adj, a), "A H (τᵗA) = H"),
                    _ => (&(&Self::adjoint(adj, a) * &h) * a, "A* H A = H"),
                };
                push(name, &lhs, &h);
            }
            Kind::Quaternionic => {
                let j = constant_j(a.tag());
                let lhs = &(&j * &a.conj()) * &(-&j);
                push("J Ā J⁻¹ = A", &lhs, a);
            }
        }
        match self.twist() {
            Twist::None => {}
            t => push("fixed by the real-form involution", &Self::apply_twist(t, a), a),
        }
        let residual = rel.iter().map(|r| r.1).fold(0.0, f64::max);
        let failures: Vec<(String, f64)> = rel
            .iter()
            .filter(|(_, r, eq)| if F::EXACT { !eq } else { *r > tol })
            .map(|(n, r, _)| (n.clone(), *r))
            .collect();
        Ok(Membership { member: failures.is_empty(), residual, failures })
    }

    /// Random element of the Lie algebra (θ-fixed, skew with respect to the
    /// form). Float samples are scaled by `scale` and made traceless. Exact
    /// samples are sparse with small integer entries, which keeps the
    /// Cayley-transform denominators small; their trace is left alone since
    /// the determinant is fixed after the transform.
    fn lie_sample<F: Field, R: Rng + ?Sized>(self, rng: &mut R, scale: &F) -> GMatrix<F> {
        let (tag, n) = (self.tag(), self.n());
        let half = if F::EXACT { Cx::one() } else { Cx::from_ratio(1, 2) };
        let mut r = if F::EXACT {
            GMatrix::from_fn(tag, n, |_, _| {
                if rng.gen_ratio(1, 3) {
                    Scalar::random_int(tag, 1, rng)
                } else {
                    Scalar::zero(tag)
                }
            })
        } else {
            GMatrix::from_fn(tag, n, |_, _| Scalar::random(tag, rng).scale_real(scale))
        };
        let twist = if self.kind() == Kind::Quaternionic { Twist::None } else { self.twist() };
        if twist != Twist::None {
            r = (&r + &Self::apply_twist(twist, &r)).scale_outer(&half);
        }
        let x = match self.kind() {
            Kind::Unitary(adj, f) => {
                let s = (&r - &Self::adjoint(adj, &r)).scale_outer(&half);
                &self.form::<F>(f) * &s
            }
            _ => r,
        };
        if F::EXACT {
            return x;
        }
        let t = x.trace().scale(&Cx::from_ratio(1, n as i64));
        &x - &GMatrix::identity(tag, n).scale(&t)
    }

    /// Central elements to mix into samples.
    fn centre<F: Field>(self) -> Vec<GMatrix<F>> {
        use GroupSpec::*;
        let (tag, n) = (self.tag(), self.n());
        let id = GMatrix::<F>::identity(tag, n);
        match self {
            SL3C | SU3 | SU12 => {
                let w = Cx::omega();
                vec![id.scale_outer(&w), id.scale_outer(&(&w * &w))]
            }
            SU3CC | SU3Real | SU12Real => {
                let w = Scalar::internal_omega(RingTag::CC).expect("ℂ^C");
                vec![id.scale(&w), id.scale(&(&w * &w))]
            }
            SL6R | SL6C | SU6 | SU24 | SUStar6 | SU24CC | SU6CC | SUStar6CC => vec![-&id],
            SL3R | SU3Csplit | SU3TauGamma => vec![],
        }
    }

    /// Random group element: exponential of a Lie algebra sample for the
    /// float backend, a Cayley transform or product of elementary matrices
    /// for the exact backend. Occasionally multiplied by a central element.
    pub fn sample<F: Field, R: Rng + ?Sized>(self, rng: &mut R) -> GMatrix<F> {
        let base = match self.kind() {
            Kind::Quaternionic => {
                let inner = if self == GroupSpec::SUStar6 { Twist::TauJ } else { Twist::None };
                psi_bridge(&sample_special(RingTag::RC, 6, inner, rng))
                    .expect("ψ accepts SL(6, C)")
            }
            Kind::Special => sample_special(self.tag(), self.n(), self.twist(), rng),
            Kind::Unitary(adj, _) => loop {
                if !F::EXACT {
                    let x = self.lie_sample(rng, &F::from_ratio(1, 2));
                    break x.exp().expect("commutative ring");
                }
                let x = self.lie_sample(rng, &F::one());
                if let Some(c) = cayley(&x) {
                    // Fix the determinant with diag(det†, 1, …, 1).
                    let d = c.det().expect("commutative ring");
                    let dd = match adj {
                        Adjoint::Star => d.conj(),
                        Adjoint::TauT => d.tau(),
                    };
                    let mut fix = vec![Scalar::one(self.tag()); self.n()];
                    fix[0] = dd;
                    break &c * &GMatrix::diag(self.tag(), &fix);
                }
            },
        };
        let centre = self.centre::<F>();
        if !centre.is_empty() && rng.gen_ratio(1, 4) {
            let z = &centre[rng.gen_range(0..centre.len())];
            return &base * z;
        }
        base
    }
}

/// `(E − X)⁻¹(E + X)`, or `None` when `E − X` is singular.
fn cayley<F: Field>(x: &GMatrix<F>) -> Option<GMatrix<F>> {
    let id = GMatrix::identity(x.tag(), x.n());
    let inv = (&id - x).inverse().ok()?;
    Some(&inv * &(&id + x))
}

/// Random element of SL(n) over `tag`, fixed by the twist.
fn sample_special<F: Field, R: Rng + ?Sized>(tag: RingTag, n: usize, twist: Twist, rng: &mut R) -> GMatrix<F> {
    if twist == Twist::TauJ {
        return sample_quaternionic_sl(rng);
    }
    if !F::EXACT {
        let mut x = GMatrix::from_fn(tag, n, |_, _| Scalar::random(tag, rng).scale_real(&F::from_ratio(1, 2)));
        if twist != Twist::None {
            x = (&x + &GroupSpec::apply_twist(twist, &x)).scale_outer(&Cx::from_ratio(1, 2));
        }
        let t = x.trace().scale(&Cx::from_ratio(1, n as i64));
        let x = &x - &GMatrix::identity(tag, n).scale(&t);
        return x.exp().expect("commutative ring");
    }
    let real = twist == Twist::Tau;
    let coeff = |rng: &mut R| -> Scalar<F> {
        let mut int = || F::from_i64(rng.gen_range(-2..=2));
        let z = if real || !tag.is_complexified() { Cx::real(int()) } else { Cx::new(int(), int()) };
        Scalar::outer(tag, z)
    };
    let mut m = GMatrix::identity(tag, n);
    for _ in 0..2 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n - 1));
        let j = if j >= i { j + 1 } else { j };
        let mut e = GMatrix::identity(tag, n);
        e.set(i, j, coeff(rng));
        m = &m * &e;
    }
    // A diagonal torus factor diag(t, 1/t).
    let i = rng.gen_range(0..n);
    let j = (i + 1 + rng.gen_range(0..n - 1)) % n;
    let t = Cx::<F>::from_ratio(rng.gen_range(1..=3), rng.gen_range(1..=3));
    let mut d = vec![Cx::one(); n];
    d[i] = t.clone();
    d[j] = t.inv();
    &m * &GMatrix::diag_outer(tag, &d)
}

/// Product of quaternionic transvections `k(E + q·e_ij)`, embedded in
/// SL(6, C) via `a + b𝕛 ↦ [[a, b], [−τb, τa]]`.
fn sample_quaternionic_sl<F: Field, R: Rng + ?Sized>(rng: &mut R) -> GMatrix<F> {
    let tag = RingTag::RC;
    let mut m = GMatrix::identity(tag, 6);
    let real = |rng: &mut R| -> F {
        if F::EXACT {
            F::from_i64(rng.gen_range(-2..=2))
        } else {
            F::random(rng).mul_ref(&F::half())
        }
    };
    for _ in 0..6 {
        let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..2));
        let j = if j >= i { j + 1 } else { j };
        let a = Cx::new(real(rng), real(rng));
        let b = Cx::new(real(rng), real(rng));
        let mut e = GMatrix::identity(tag, 6);
        e.set(2 * i, 2 * j, Scalar::outer(tag, a.clone()));
        e.set(2 * i, 2 * j + 1, Scalar::outer(tag, b.clone()));
        e.set(2 * i + 1, 2 * j, Scalar::outer(tag, -b.conj()));
        e.set(2 * i + 1, 2 * j + 1, Scalar::outer(tag, a.conj()));
        m = &m * &e;
    }
    m
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = |t: &str| t.replace(' ', "").to_ascii_lowercase();
        let key = norm(s);
        GroupSpec::ALL
            .into_iter()
            .find(|g| norm(g.name()) == key || norm(g.ascii()) == key)
            .ok_or_else(|| GroupError::UnknownGroup(s.to_string()))
    }
}
