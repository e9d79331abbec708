//! The suite registry and the per-trial evaluators behind it.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Suite, TrialFn};
use crate::algebra::{Cx, RingTag, Scalar};
use crate::algorithms::{
    cube_root_cc, decompose_phi, diag_idempotent, diagonalize, euclidean_part_dim, jordan_mult_op, lie_algebra_sample,
    lie_dim, reduce_to_e, IdempotentCase, LieField,
};
use crate::error::HarnessError;
use crate::field::{Exact, Field};
use crate::jordan::JordanElement;
use crate::matgroups::{constant_i1, constant_i2, constant_ii, GMatrix, GroupSpec};
use crate::operators::{
    f4cc, f6c, f6cc, f6hc, fixed_by, from_gmatrix, g6hc, gamma_op, h6hc, hmap, i2_conjugate, j_conjugate, l6hc,
    nu_op, sigma_op, tau_op, to_gmatrix, transport_split, Automorphism, JOperator,
};

type Res = Result<f64, HarnessError>;

// ---------------------------------------------------------------------------
// Residual helpers

/// Distance that is exactly zero on the exact backend iff the values agree.
trait Gap {
    fn gap(&self, o: &Self) -> f64;
}

fn gap_of(exact: bool, equal: bool, dist: f64) -> f64 {
    match (exact, equal) {
        (true, true) => 0.0,
        (true, false) => dist.max(f64::MIN_POSITIVE),
        (false, _) => dist,
    }
}

impl<F: Field> Gap for JOperator<F> {
    fn gap(&self, o: &Self) -> f64 {
        gap_of(F::EXACT, F::EXACT && self.approx_eq(o, 0.0), self.distance(o))
    }
}

impl<F: Field> Gap for JordanElement<F> {
    fn gap(&self, o: &Self) -> f64 {
        gap_of(F::EXACT, self == o, self.distance(o))
    }
}

impl<F: Field> Gap for GMatrix<F> {
    fn gap(&self, o: &Self) -> f64 {
        gap_of(F::EXACT, self == o, self.distance(o))
    }
}

impl<F: Field> Gap for Cx<F> {
    fn gap(&self, o: &Self) -> f64 {
        gap_of(F::EXACT, self == o, (self - o).abs_f64())
    }
}

fn flag(bad: bool) -> f64 {
    if bad {
        1.0
    } else {
        0.0
    }
}

fn close(gap: f64, tol: f64) -> bool {
    gap <= tol
}

fn rx<F: Field>(tag: RingTag, rng: &mut ChaCha8Rng) -> JordanElement<F> {
    JordanElement::random(tag, rng)
}

fn g<F: Field>(spec: GroupSpec, rng: &mut ChaCha8Rng) -> GMatrix<F> {
    spec.sample(rng)
}

/// `lhs` and `rhs` as operators, and applied to a random element.
fn op_identity<F: Field>(lhs: &JOperator<F>, rhs: &JOperator<F>, rng: &mut ChaCha8Rng) -> Res {
    let x = rx::<F>(lhs.tag(), rng);
    Ok(lhs.gap(rhs).max(lhs.apply(&x)?.gap(&rhs.apply(&x)?)))
}

fn conj_by<F: Field>(a: &JOperator<F>, b: &JOperator<F>, c: &JOperator<F>) -> Result<JOperator<F>, HarnessError> {
    Ok(a.compose(b)?.compose(c)?)
}

fn internal_omega<F: Field>(tag: RingTag, n: usize, k: usize) -> GMatrix<F> {
    let w = Scalar::<F>::internal_omega(tag).expect("ℂ^C has an internal ω");
    let mut m = GMatrix::identity(tag, n);
    for _ in 0..k {
        m = m.scale(&w);
    }
    m
}

// ---------------------------------------------------------------------------
// Conjugation identities of the realization maps

fn lemma_3_4_1<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let a = g::<F>(GroupSpec::SL3C, rng);
    op_identity(&f6c(&a)?.lambda()?, &f6c(&a.transpose().inverse()?)?, rng)
}

fn lemma_3_4_2<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let a = g::<F>(GroupSpec::SL3C, rng);
    let s = sigma_op::<F>(RingTag::RC);
    let i1 = constant_i1::<F>(RingTag::RC);
    op_identity(&conj_by(&s, &f6c(&a)?, &s)?, &f6c(&(&(&i1 * &a) * &i1))?, rng)
}

fn lemma_3_4_3<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let a = g::<F>(GroupSpec::SL3C, rng);
    let t = tau_op::<F>(RingTag::RC)?;
    op_identity(&conj_by(&t, &f6c(&a)?, &t)?, &f6c(&a.tau())?, rng)
}

fn su3cc_pair<F: Field>(rng: &mut ChaCha8Rng) -> (GMatrix<F>, GMatrix<F>) {
    (g(GroupSpec::SU3CC, rng), g(GroupSpec::SU3CC, rng))
}

fn lemma_4_1_8_1<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a, b) = su3cc_pair::<F>(rng);
    op_identity(&f6cc(&a, &b, false)?.lambda()?, &f6cc(&b, &a, false)?, rng)
}

fn lemma_4_1_8_2<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a, b) = su3cc_pair::<F>(rng);
    let t = tau_op::<F>(RingTag::CC)?;
    op_identity(&conj_by(&t, &f6cc(&a, &b, false)?, &t)?, &f6cc(&b.tau(), &a.tau(), false)?, rng)
}

fn lemma_4_1_8_3<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a, b) = su3cc_pair::<F>(rng);
    let gm = gamma_op::<F>(RingTag::CC)?;
    op_identity(&conj_by(&gm, &f6cc(&a, &b, false)?, &gm)?, &f6cc(&b.gamma()?, &a.gamma()?, false)?, rng)
}

fn lemma_4_1_8_4<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a, b) = su3cc_pair::<F>(rng);
    let s = sigma_op::<F>(RingTag::CC);
    let i1 = constant_i1::<F>(RingTag::CC);
    let c = |m: &GMatrix<F>| &(&i1 * m) * &i1;
    op_identity(&conj_by(&s, &f6cc(&a, &b, false)?, &s)?, &f6cc(&c(&a), &c(&b), false)?, rng)
}

fn eps_cc<F: Field>() -> Result<JOperator<F>, HarnessError> {
    let e = GMatrix::identity(RingTag::CC, 3);
    Ok(f6cc(&e, &e, true)?)
}

fn lemma_4_1_8_5<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let eps = eps_cc::<F>()?;
    op_identity(&eps.lambda()?, &eps, rng)
}

fn lemma_4_1_8_6<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let eps = eps_cc::<F>()?;
    let t = tau_op::<F>(RingTag::CC)?;
    op_identity(&conj_by(&t, &eps, &t)?, &eps, rng)
}

fn lemma_4_1_8_7<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let eps = eps_cc::<F>()?;
    let gm = gamma_op::<F>(RingTag::CC)?;
    op_identity(&conj_by(&gm, &eps, &gm)?, &eps, rng)
}

fn lemma_4_1_8_8<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let eps = eps_cc::<F>()?;
    let s = sigma_op::<F>(RingTag::CC);
    op_identity(&conj_by(&s, &eps, &s)?, &eps, rng)
}

fn lemma_5_1_2_1<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let a = g::<F>(GroupSpec::SUStar6CC, rng);
    op_identity(&f6hc(&a)?.lambda()?, &f6hc(&a.star().inverse()?)?, rng)
}

fn lemma_5_1_2_2<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let a = g::<F>(GroupSpec::SUStar6CC, rng);
    let t = tau_op::<F>(RingTag::HC)?;
    op_identity(&conj_by(&t, &f6hc(&a)?, &t)?, &f6hc(&a.tau())?, rng)
}

fn lemma_5_1_2_3<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let a = g::<F>(GroupSpec::SUStar6CC, rng);
    let gm = gamma_op::<F>(RingTag::HC)?;
    op_identity(&conj_by(&gm, &f6hc(&a)?, &gm)?, &f6hc(&j_conjugate(&a))?, rng)
}

fn lemma_5_1_2_4<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let a = g::<F>(GroupSpec::SUStar6CC, rng);
    let s = sigma_op::<F>(RingTag::HC);
    op_identity(&conj_by(&s, &f6hc(&a)?, &s)?, &f6hc(&i2_conjugate(&a))?, rng)
}

fn lemma_5_2_2<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let b = g::<F>(GroupSpec::SU6CC, rng);
    let t = tau_op::<F>(RingTag::HC)?;
    op_identity(&conj_by(&t, &g6hc(&b)?.lambda()?, &t)?, &g6hc(&b.tau())?, rng)
}

fn lemma_5_3_3<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let b = g::<F>(GroupSpec::SL6C, rng);
    let t = tau_op::<F>(RingTag::HC)?;
    let gm = gamma_op::<F>(RingTag::HC)?;
    let tg = t.compose(&gm)?;
    let gt = gm.compose(&t)?;
    op_identity(&conj_by(&tg, &h6hc(&b)?, &gt)?, &h6hc(&b.tau())?, rng)
}

fn lemma_5_4_2<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let b = g::<F>(GroupSpec::SU24CC, rng);
    let t = tau_op::<F>(RingTag::HC)?;
    let s = sigma_op::<F>(RingTag::HC);
    let ts = t.compose(&s)?;
    let st = s.compose(&t)?;
    op_identity(&conj_by(&ts, &l6hc(&b)?.lambda()?, &st)?, &l6hc(&b.tau())?, rng)
}

// ---------------------------------------------------------------------------
// The map h(A, B) = ῑA + ιB and the semidirect multiplication laws

fn random_cc3<F: Field>(rng: &mut ChaCha8Rng) -> GMatrix<F> {
    GMatrix::from_fn(RingTag::CC, 3, |_, _| Scalar::random(RingTag::CC, rng))
}

fn h_det<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a, b) = (random_cc3::<F>(rng), random_cc3::<F>(rng));
    let iota = Scalar::<F>::iota();
    let want = &(&iota.conj() * &a.det()?) + &(&iota * &b.det()?);
    let d = GMatrix::diag(RingTag::CC, &[hmap(&a, &b)?.det()?]);
    Ok(d.gap(&GMatrix::diag(RingTag::CC, &[want])))
}

fn h_star<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a, b) = (random_cc3::<F>(rng), random_cc3::<F>(rng));
    Ok(hmap(&a, &b)?.star().gap(&hmap(&b.star(), &a.star())?))
}

fn h_product<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a, b, c, d) = (random_cc3::<F>(rng), random_cc3::<F>(rng), random_cc3::<F>(rng), random_cc3::<F>(rng));
    Ok((&hmap(&a, &b)? * &hmap(&c, &d)?).gap(&hmap(&(&a * &c), &(&b * &d))?))
}

/// `(A₁, ε₁)(A₂, ε₂) = (A₁·ε₁(A₂), ε₁ε₂)`
fn semidirect_f4<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a1, a2) = su3cc_pair::<F>(rng);
    let (e1, e2) = (rng.gen_bool(0.5), rng.gen_bool(0.5));
    let lhs = f4cc(&a1, e1)?.compose(&f4cc(&a2, e2)?)?;
    let a = if e1 { &a1 * &a2.conj() } else { &a1 * &a2 };
    op_identity(&lhs, &f4cc(&a, e1 ^ e2)?, rng)
}

/// `((A₁,B₁), ε₁)((A₂,B₂), ε₂)`, where ε swaps and conjugates the pair.
fn semidirect_f6cc<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a1, b1) = su3cc_pair::<F>(rng);
    let (a2, b2) = su3cc_pair::<F>(rng);
    let (e1, e2) = (rng.gen_bool(0.5), rng.gen_bool(0.5));
    let lhs = f6cc(&a1, &b1, e1)?.compose(&f6cc(&a2, &b2, e2)?)?;
    let (a, b) = if e1 { (&a1 * &b2.conj(), &b1 * &a2.conj()) } else { (&a1 * &a2, &b1 * &b2) };
    op_identity(&lhs, &f6cc(&a, &b, e1 ^ e2)?, rng)
}

/// `h(A₁) ν h(A₂) = h(A₁ · Iᵢ A₂ Iᵢ⁻¹) ν` on SL(6, ℝ).
fn semidirect_nu<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a1, a2) = (g::<F>(GroupSpec::SL6R, rng), g::<F>(GroupSpec::SL6R, rng));
    let nu = nu_op::<F>()?;
    let ii = constant_ii::<F>(RingTag::RC);
    let lhs = conj_by(&h6hc(&a1)?, &nu, &h6hc(&a2)?)?;
    let twisted = &(&(&ii * &a2) * &ii.inverse()?);
    let rhs = h6hc(&(&a1 * twisted))?.compose(&nu)?;
    // ν is an involution.
    let nn = nu.compose(&nu)?.gap(&JOperator::identity(RingTag::HC));
    Ok(op_identity(&lhs, &rhs, rng)?.max(nn))
}

// ---------------------------------------------------------------------------
// Cross product and cubic form

fn cross_tau<F: Field, const T: u8>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let tag = ring_of(T);
    let (x, y) = (rx::<F>(tag, rng), rx::<F>(tag, rng));
    Ok(x.cross(&y)?.tau_act().gap(&x.tau_act().cross(&y.tau_act())?))
}

fn cross_sigma<F: Field, const T: u8>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let tag = ring_of(T);
    let (x, y) = (rx::<F>(tag, rng), rx::<F>(tag, rng));
    Ok(x.cross(&y)?.sigma_act().gap(&x.sigma_act().cross(&y.sigma_act())?))
}

fn cross_gamma<F: Field, const T: u8>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let tag = ring_of(T);
    let (x, y) = (rx::<F>(tag, rng), rx::<F>(tag, rng));
    Ok(x.cross(&y)?.gamma_act()?.gap(&x.gamma_act()?.cross(&y.gamma_act()?)?))
}

fn adjugate_square<F: Field, const T: u8>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let z = rx::<F>(ring_of(T), rng);
    let zz = z.cross(&z)?;
    Ok(zz.cross(&zz)?.gap(&z.scale(&z.det())))
}

fn cubic_form<F: Field, const T: u8>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let z = rx::<F>(ring_of(T), rng);
    Ok(z.trilinear(&z, &z)?.gap(&(z.det() * Cx::from_i64(3))))
}

const T_RC: u8 = 0;
const T_CC: u8 = 1;
const T_HC: u8 = 2;
const T_CS: u8 = 3;
const T_HS: u8 = 4;

fn ring_of(t: u8) -> RingTag {
    [RingTag::RC, RingTag::CC, RingTag::HC, RingTag::Csplit, RingTag::Hsplit][t as usize]
}

// ---------------------------------------------------------------------------
// Kernels: the listed elements act as the identity, sampled others do not

/// Trial `t < kernel.len()` checks a kernel element; later trials check a
/// non-kernel element (`fixed` ones first, then samples).
fn kernel_trial<F: Field>(
    t: usize,
    tol: f64,
    kernel: Vec<JOperator<F>>,
    fixed: Vec<JOperator<F>>,
    sample: impl FnOnce() -> Result<Option<JOperator<F>>, HarnessError>,
) -> Res {
    if let Some(k) = kernel.get(t) {
        return Ok(k.gap(&JOperator::identity(k.tag())));
    }
    let op = match fixed.into_iter().nth(t - kernel.len()) {
        Some(op) => op,
        None => match sample()? {
            Some(op) => op,
            // The sample landed in the kernel; nothing to check.
            None => return Ok(0.0),
        },
    };
    Ok(flag(op.is_identity(tol)))
}

fn kernel_f6c<F: Field>(rng: &mut ChaCha8Rng, t: usize, tol: f64) -> Res {
    let e = GMatrix::<F>::identity(RingTag::RC, 3);
    let w = Cx::<F>::omega();
    let fixed = vec![f6c(&e.scale_outer(&w))?, f6c(&e.scale_outer(&(&w * &w)))?];
    kernel_trial(t, tol, vec![f6c(&e)?], fixed, || {
        let a = g::<F>(GroupSpec::SL3C, rng);
        Ok(if a == e { None } else { Some(f6c(&a)?) })
    })
}

fn kernel_f4cc<F: Field>(rng: &mut ChaCha8Rng, t: usize, tol: f64) -> Res {
    let kernel: Vec<_> = (0..3).map(|k| f4cc(&internal_omega::<F>(RingTag::CC, 3, k), false)).collect::<Result<_, _>>()?;
    let e = GMatrix::<F>::identity(RingTag::CC, 3);
    let fixed = vec![f4cc(&e, true)?];
    kernel_trial(t, tol, kernel, fixed, || {
        let a = g::<F>(GroupSpec::SU3CC, rng);
        let eps = rng.gen_bool(0.5);
        let central = (0..3).any(|k| a == internal_omega(RingTag::CC, 3, k));
        Ok(if central && !eps { None } else { Some(f4cc(&a, eps)?) })
    })
}

fn kernel_f6cc<F: Field>(rng: &mut ChaCha8Rng, t: usize, tol: f64) -> Res {
    let w = |k| internal_omega::<F>(RingTag::CC, 3, k);
    let kernel: Vec<_> = (0..3).map(|k| f6cc(&w(k), &w(k), false)).collect::<Result<_, _>>()?;
    // Mismatched central pairs are not in the kernel.
    let fixed = vec![f6cc(&w(1), &w(0), false)?, f6cc(&w(0), &w(2), false)?, f6cc(&w(0), &w(0), true)?];
    kernel_trial(t, tol, kernel, fixed, || {
        let (a, b) = su3cc_pair::<F>(rng);
        let eps = rng.gen_bool(0.5);
        let central = (0..3).any(|k| a == w(k) && b == w(k));
        Ok(if central && !eps { None } else { Some(f6cc(&a, &b, eps)?) })
    })
}

fn kernel_f6hc<F: Field>(rng: &mut ChaCha8Rng, t: usize, tol: f64) -> Res {
    let e = GMatrix::<F>::identity(RingTag::CC, 6);
    let kernel = vec![f6hc(&e)?, f6hc(&-&e)?];
    kernel_trial(t, tol, kernel, vec![], || {
        let a = g::<F>(GroupSpec::SUStar6CC, rng);
        Ok(if a == e || a == -&e { None } else { Some(f6hc(&a)?) })
    })
}

// ---------------------------------------------------------------------------
// Group actions: constructed operators preserve det; real-form inputs give
// fixed points of the matching automorphism and preserve the matching
// Hermitian form, generic inputs give neither.

#[derive(Clone, Copy)]
enum Form {
    None,
    Herm,
    HermSigma,
}

/// Even trials use the real-form input (`expect` true), odd trials the
/// generic one; pass `real_only` to use the real-form input throughout.
fn action_check<F: Field>(
    op: &JOperator<F>,
    aut: Option<Automorphism>,
    form: Form,
    expect: bool,
    rng: &mut ChaCha8Rng,
    tol: f64,
) -> Res {
    let tag = op.tag();
    let x = rx::<F>(tag, rng);
    let det = op.apply(&x)?.det().gap(&x.det());
    let mut bad = false;
    if let Some(aut) = aut {
        let fixed = fixed_by(op, aut, tol)?.fixed;
        bad |= fixed != expect;
    }
    let y = rx::<F>(tag, rng);
    let (ax, ay) = (op.apply(&x)?, op.apply(&y)?);
    let preserved = match form {
        Form::None => None,
        Form::Herm => Some(close(ax.hform(&ay)?.gap(&x.hform(&y)?), tol)),
        Form::HermSigma => Some(close(ax.hform_sigma(&ay)?.gap(&x.hform_sigma(&y)?), tol)),
    };
    if let Some(p) = preserved {
        bad |= p != expect;
    }
    Ok(det.max(flag(bad)))
}

fn unit<F: Field>(tag: RingTag, n: usize) -> Vec<GMatrix<F>> {
    vec![GMatrix::identity(tag, n)]
}

/// `{E, −E}` in dimension 6, the kernel of the 6×6 constructions.
fn pm<F: Field>(tag: RingTag) -> Vec<GMatrix<F>> {
    let e = GMatrix::identity(tag, 6);
    vec![-&e, e]
}

macro_rules! action_suite {
    ($name:ident, $aut:expr, $form:expr, real_only: $real_only:expr, |$rng:ident, $real:ident| $build:expr) => {
        fn $name<F: Field>($rng: &mut ChaCha8Rng, t: usize, tol: f64) -> Res {
            let $real = $real_only || t % 2 == 0;
            let op: JOperator<F> = $build;
            action_check(&op, $aut, $form, $real, $rng, tol)
        }
    };
}

action_suite!(action_f6c_det, None, Form::None, real_only: true, |rng, _r| f6c(&g(GroupSpec::SL3C, rng))?);
action_suite!(action_f6c_compact, Some(Automorphism::TauLambda), Form::Herm, real_only: false, |rng, real| {
    f6c(&if real { g(GroupSpec::SU3, rng) } else { generic(GroupSpec::SL3C, GroupSpec::SU3, &unit(RingTag::RC, 3), rng) })?
});
action_suite!(action_f6c_minus14, Some(Automorphism::TauLambdaSigma), Form::HermSigma, real_only: false, |rng, real| {
    f6c(&if real { g(GroupSpec::SU12, rng) } else { generic(GroupSpec::SL3C, GroupSpec::SU12, &unit(RingTag::RC, 3), rng) })?
});
action_suite!(action_f6c_minus14_real, Some(Automorphism::TauLambdaSigma), Form::HermSigma, real_only: true, |rng, _r| {
    f6c(&g(GroupSpec::SU12, rng))?
});
action_suite!(action_f6c_split, Some(Automorphism::Tau), Form::None, real_only: false, |rng, real| {
    f6c(&if real { g(GroupSpec::SL3R, rng) } else { generic(GroupSpec::SL3C, GroupSpec::SL3R, &unit(RingTag::RC, 3), rng) })?
});
action_suite!(action_f6c_split_real, Some(Automorphism::Tau), Form::None, real_only: true, |rng, _r| {
    f6c(&g(GroupSpec::SL3R, rng))?
});

fn action_f4cc<F: Field>(rng: &mut ChaCha8Rng, _: usize, tol: f64) -> Res {
    let op = f4cc(&g::<F>(GroupSpec::SU3CC, rng), rng.gen_bool(0.5))?;
    let e = JordanElement::identity(RingTag::CC);
    let fixes_e = op.apply(&e)?.gap(&e);
    Ok(action_check(&op, None, Form::None, true, rng, tol)?.max(fixes_e))
}

fn action_f6cc<F: Field>(rng: &mut ChaCha8Rng, _: usize, tol: f64) -> Res {
    let (a, b) = su3cc_pair::<F>(rng);
    let op = f6cc(&a, &b, rng.gen_bool(0.5))?;
    action_check(&op, None, Form::None, true, rng, tol)
}

/// Sample of `spec` whose image is not in the real form: no kernel
/// translate `z·a` is a member of `real`.
fn generic<F: Field>(spec: GroupSpec, real: GroupSpec, kernel: &[GMatrix<F>], rng: &mut ChaCha8Rng) -> GMatrix<F> {
    loop {
        let a = g::<F>(spec, rng);
        let in_real = |m: &GMatrix<F>| real.member(m, 1e-9).is_ok_and(|r| r.member);
        if !kernel.iter().any(|z| in_real(&(z * &a))) {
            return a;
        }
    }
}

/// Pair in SU(3, ℂ^C)² with no joint central translate `(ωᵏA, ωᵏB)`
/// satisfying `real`.
fn generic_pair<F: Field>(
    rng: &mut ChaCha8Rng,
    real: impl Fn(&GMatrix<F>, &GMatrix<F>) -> bool,
) -> (GMatrix<F>, GMatrix<F>) {
    loop {
        let (a, b) = su3cc_pair::<F>(rng);
        let w = |k| internal_omega::<F>(RingTag::CC, 3, k);
        if !(0..3).any(|k| real(&(&w(k) * &a), &(&w(k) * &b))) {
            return (a, b);
        }
    }
}

fn pair_op<F: Field>(spec: GroupSpec, real: bool, rng: &mut ChaCha8Rng) -> Result<JOperator<F>, HarnessError> {
    let (a, b) = if real {
        (g(spec, rng), g(spec, rng))
    } else {
        let member = |m: &GMatrix<F>| spec.member(m, 1e-9).is_ok_and(|r| r.member);
        generic_pair(rng, |a, b| member(a) && member(b))
    };
    Ok(f6cc(&a, &b, false)?)
}

action_suite!(action_f6cc_compact, Some(Automorphism::TauLambda), Form::Herm, real_only: false, |rng, real| {
    pair_op(GroupSpec::SU3Real, real, rng)?
});
action_suite!(action_f6cc_split, Some(Automorphism::TauGamma), Form::None, real_only: false, |rng, real| {
    pair_op(GroupSpec::SU3TauGamma, real, rng)?
});
action_suite!(action_f6cc_minus14, Some(Automorphism::TauLambdaSigma), Form::HermSigma, real_only: false, |rng, real| {
    pair_op(GroupSpec::SU12Real, real, rng)?
});
action_suite!(action_f6cc_minus26, Some(Automorphism::Tau), Form::None, real_only: false, |rng, real| {
    let (a, b) = if real {
        let a = g::<F>(GroupSpec::SU3CC, rng);
        let b = a.tau();
        (a, b)
    } else {
        generic_pair(rng, |a, b| *b == a.tau())
    };
    f6cc(&a, &b, false)?
});
action_suite!(action_f6hc_det, None, Form::None, real_only: true, |rng, _r| f6hc(&g(GroupSpec::SUStar6CC, rng))?);
action_suite!(action_g6hc_compact, Some(Automorphism::TauLambda), Form::Herm, real_only: false, |rng, real| {
    g6hc(&if real { g(GroupSpec::SU6, rng) } else { generic(GroupSpec::SU6CC, GroupSpec::SU6, &pm(RingTag::CC), rng) })?
});
action_suite!(action_h6hc_split, Some(Automorphism::TauGamma), Form::None, real_only: false, |rng, real| {
    h6hc(&if real { g(GroupSpec::SL6R, rng) } else { generic(GroupSpec::SL6C, GroupSpec::SL6R, &pm(RingTag::RC), rng) })?
});
action_suite!(action_l6hc_minus14, Some(Automorphism::TauLambdaSigma), Form::HermSigma, real_only: false, |rng, real| {
    l6hc(&if real { g(GroupSpec::SU24, rng) } else { generic(GroupSpec::SU24CC, GroupSpec::SU24, &pm(RingTag::CC), rng) })?
});
action_suite!(action_f6hc_minus26, Some(Automorphism::Tau), Form::None, real_only: false, |rng, real| {
    f6hc(&if real { g(GroupSpec::SUStar6, rng) } else { generic(GroupSpec::SUStar6CC, GroupSpec::SUStar6, &pm(RingTag::CC), rng) })?
});

// ---------------------------------------------------------------------------
// Split forms

fn transport_cc<F: Field>(rng: &mut ChaCha8Rng, _: usize, tol: f64) -> Res {
    let op = pair_op::<F>(GroupSpec::SU3TauGamma, true, rng)?;
    transported_det(&op, rng, tol)
}

fn transport_hc<F: Field>(rng: &mut ChaCha8Rng, _: usize, tol: f64) -> Res {
    let op = h6hc(&g::<F>(GroupSpec::SL6R, rng))?;
    transported_det(&op, rng, tol)
}

fn transported_det<F: Field>(op: &JOperator<F>, rng: &mut ChaCha8Rng, tol: f64) -> Res {
    let t = transport_split(op, tol.max(1e-12))?;
    let x = rx::<F>(t.tag(), rng);
    Ok(t.apply(&x)?.det().gap(&x.det()))
}

/// 𝝎E and 𝝎²E lie in SU(3, ℂ^C) but not in its τγ-fixed part.
fn omega_not_split<F: Field>(_: &mut ChaCha8Rng, t: usize, tol: f64) -> Res {
    let w = internal_omega::<F>(RingTag::CC, 3, 1 + t % 2);
    let in_group = GroupSpec::SU3CC.member(&w, tol)?.member;
    let in_fixed = GroupSpec::SU3TauGamma.member(&w, tol)?.member;
    Ok(flag(!in_group || in_fixed))
}

// ---------------------------------------------------------------------------
// Impossible branches τB = −B

fn tau_real_matrix<F: Field>(n: usize, rng: &mut ChaCha8Rng) -> GMatrix<F> {
    GMatrix::from_fn(RingTag::CC, n, |_, _| {
        Scalar::from_reals(RingTag::CC, &[F::random(rng), F::random(rng)]).expect("two coefficients")
    })
}

fn anti_tau<F: Field>(b: &GMatrix<F>, tol: f64) -> bool {
    close(b.tau().gap(&-b), tol)
}

/// B ∈ SU(6, ℂ^C) never has τB = −B: that would make `B = iB′` with
/// `B′*B′ = −E`, while the diagonal of `B′*B′` is a sum of norms.
fn no_anti_tau_su6<F: Field>(rng: &mut ChaCha8Rng, _: usize, tol: f64) -> Res {
    let b = g::<F>(GroupSpec::SU6CC, rng);
    let mut bad = anti_tau(&b, tol);
    let bp = tau_real_matrix::<F>(6, rng);
    let p = &bp.star() * &bp;
    for k in 0..6 {
        let c = p.at(k, k).coeffs();
        let nonneg = c[0].im.is_negligible(tol) && c[1].is_zero_within(tol) && c[0].re.to_f64() >= 0.0;
        bad |= !nonneg;
    }
    let iu = g::<F>(GroupSpec::SU6, rng).scale_outer(&Cx::i());
    bad |= GroupSpec::SU6CC.member(&iu, tol)?.member;
    Ok(flag(bad))
}

/// Inertia `(positive, negative)` of a Hermitian matrix over the internal
/// complex numbers, by LDL*; `None` on a vanishing pivot.
fn inertia<F: Field>(m: &GMatrix<F>, tol: f64) -> Option<(usize, usize)> {
    let n = m.n();
    // Internal complex entries a + b𝕚 with a, b real, as Cx(a, b).
    let mut a: Vec<Vec<Cx<F>>> = (0..n)
        .map(|i| (0..n).map(|j| Cx::new(m.at(i, j).coeff(0).re.clone(), m.at(i, j).coeff(1).re.clone())).collect())
        .collect();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        let d = a[k][k].re.clone();
        if d.is_negligible(tol.max(1e-9)) {
            return None;
        }
        if d.to_f64() > 0.0 {
            pos += 1;
        } else {
            neg += 1;
        }
        let dinv = Cx::real(d).inv();
        for i in k + 1..n {
            for j in k + 1..n {
                let upd = &(&a[i][k] * &a[j][k].conj()) * &dinv;
                a[i][j] = &a[i][j] - &upd;
            }
        }
    }
    Some((pos, neg))
}

/// B ∈ SU(2,4, ℂ^C) never has τB = −B: `B = iB′` would force
/// `B′*I₂B′ = −I₂`, but `B′*I₂B′` has the signature of I₂.
fn no_anti_tau_su24<F: Field>(rng: &mut ChaCha8Rng, _: usize, tol: f64) -> Res {
    let b = g::<F>(GroupSpec::SU24CC, rng);
    let mut bad = anti_tau(&b, tol);
    let i2 = constant_i2::<F>(RingTag::CC);
    let want = inertia(&i2, tol).expect("diagonal");
    let flipped = inertia(&-&i2, tol).expect("diagonal");
    // A random τ-real B′ is invertible with probability one; retry otherwise.
    let got = (0..8).find_map(|_| {
        let bp = tau_real_matrix::<F>(6, rng);
        inertia(&(&(&bp.star() * &i2) * &bp), tol)
    });
    bad |= got != Some(want) || got == Some(flipped);
    let iu = g::<F>(GroupSpec::SU24, rng).scale_outer(&Cx::i());
    bad |= GroupSpec::SU24CC.member(&iu, tol)?.member;
    Ok(flag(bad))
}

trait NearZero {
    fn is_zero_within(&self, tol: f64) -> bool;
}

impl<F: Field> NearZero for Cx<F> {
    fn is_zero_within(&self, tol: f64) -> bool {
        self.re.is_negligible(tol) && self.im.is_negligible(tol)
    }
}

// ---------------------------------------------------------------------------
// Lie algebras

fn lie_nullity<F: Field>(tag: RingTag, field: LieField, want: usize, rng: &mut ChaCha8Rng) -> Res {
    let r = lie_dim::<F>(tag, field, rng.gen())?;
    Ok((r.nullity as f64 - want as f64).abs())
}

fn lie_cc<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    lie_nullity::<F>(RingTag::CC, LieField::Complex, 16, rng)
}

fn lie_hc<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    lie_nullity::<F>(RingTag::HC, LieField::Real, 35, rng)
}

fn lie_rc<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    lie_nullity::<F>(RingTag::RC, LieField::Complex, 8, rng)
}

fn euclidean_hc<F: Field>(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let r = lie_dim::<F>(RingTag::HC, LieField::Real, rng.gen())?;
    Ok((euclidean_part_dim(&r) as f64 - 14.0).abs())
}

/// `φ = δ + T̃` with δE = 0 and tr T = 0, reassembling φ.
fn decomposition<F: Field>(rng: &mut ChaCha8Rng, _: usize, tol: f64) -> Res {
    let phi = lie_algebra_sample::<F, _>(RingTag::HC, rng)?;
    let d = decompose_phi(&phi, tol.max(1e-9))?;
    let e = JordanElement::identity(RingTag::HC);
    let kills_e = d.delta.apply(&e)?.gap(&JordanElement::zero(RingTag::HC));
    let traceless = d.t.trace().gap(&Cx::zero());
    let back = JOperator::from_matrix(RingTag::HC, d.delta.matrix().add(jordan_mult_op(&d.t)?.matrix()), false, "δ+T~")?;
    Ok(back.gap(&phi).max(kills_e).max(traceless))
}

// ---------------------------------------------------------------------------
// Constructive algorithms (floating point)

/// The branch a planted idempotent is built to exercise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentKind {
    /// Conjugate of Eₖ by a τ-real unitary: diagonal after the unitary step.
    Diagonal,
    /// 2×2 block with ξ₂ > 0 > ξ₃ in the x₁ slot.
    BlockB1,
    /// 2×2 block with ξ₂ < 0 < ξ₃ in the x₁ slot.
    BlockB2,
    /// Conjugate of Eₖ by a generic element of SU(3, ℂ^C).
    Generic,
}

/// Round-trip input for trial `t`: an idempotent of trace one, a target
/// index, and the branch it was built for. Kinds cycle with `t`.
pub fn planted_idempotent(rng: &mut ChaCha8Rng, t: usize) -> (JordanElement<f64>, usize, IdempotentKind) {
    let target = 1 + (t / 4) % 3;
    let conj = |u: &GMatrix<f64>, x: &JordanElement<f64>| {
        from_gmatrix(&(&(&u.star() * &to_gmatrix(x)) * u)).expect("conjugate of a Hermitian matrix")
    };
    let kind = [IdempotentKind::Diagonal, IdempotentKind::BlockB1, IdempotentKind::BlockB2, IdempotentKind::Generic][t % 4];
    let x = match kind {
        IdempotentKind::Diagonal | IdempotentKind::Generic => {
            let spec = if kind == IdempotentKind::Diagonal { GroupSpec::SU3Real } else { GroupSpec::SU3CC };
            let u = g::<f64>(spec, rng);
            conj(&u, &JordanElement::e(RingTag::CC, rng.gen_range(1..=3)))
        }
        IdempotentKind::BlockB1 | IdempotentKind::BlockB2 => {
            // ξ₂ + ξ₃ = 1 and x₁x̄₁ = −ξ₂ξ₃ make the block idempotent.
            let s: f64 = rng.gen_range(1.2..3.0);
            let xi2 = if kind == IdempotentKind::BlockB1 { s } else { 1.0 - s };
            let xi3 = 1.0 - xi2;
            let r = (-xi2 * xi3).sqrt();
            let th: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let x1 = Scalar::from_reals(RingTag::CC, &[r * th.cos(), r * th.sin()]).expect("two coefficients");
            let z = Scalar::zero(RingTag::CC);
            JordanElement::new(RingTag::CC, [Cx::zero(), Cx::real(xi2), Cx::real(xi3)], [x1.scale(&Cx::i()), z.clone(), z])
                .expect("valid element")
        }
    };
    (x, target, kind)
}

fn idempotent_trial(rng: &mut ChaCha8Rng, t: usize, _: f64) -> Res {
    let (x, target, kind) = planted_idempotent(rng, t);
    let r = diag_idempotent(&x, target)?;
    let case_ok = match kind {
        IdempotentKind::Diagonal => r.case == IdempotentCase::Diagonal,
        IdempotentKind::BlockB1 => matches!(r.case, IdempotentCase::OffDiagonalB1 { .. }),
        IdempotentKind::BlockB2 => matches!(r.case, IdempotentCase::OffDiagonalB2 { .. }),
        IdempotentKind::Generic => true,
    };
    let unitary = (&r.b.star() * &r.b).distance(&GMatrix::identity(RingTag::CC, 3));
    Ok(if case_ok { r.residual.max(unitary) } else { f64::INFINITY })
}

fn cc_scalar(a: Complex64, b: Complex64) -> Scalar<f64> {
    Scalar::new(RingTag::CC, vec![Cx::from_c64(a), Cx::from_c64(b)]).expect("two coefficients")
}

/// `x + y𝕚` with `x² + y² = 1`.
fn random_unit(rng: &mut ChaCha8Rng) -> Scalar<f64> {
    let x = Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
    cc_scalar(x, (Complex64::new(1.0, 0.0) - x * x).sqrt())
}

/// Targets `p̄q` for units p, q; every fourth target has norm ω instead.
fn cube_root_trial(rng: &mut ChaCha8Rng, t: usize, _: f64) -> Res {
    let (p, q) = (random_unit(rng), random_unit(rng));
    let mut c = &p.conj() * &q;
    if t % 4 == 3 {
        let w = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
        c = c.scale(&Cx::from_c64(w.sqrt()));
    }
    let r = cube_root_cc(&c)?;
    let cube = &(&r.root * &r.root) * &r.root;
    Ok(r.residual.max(cube.distance(&c)))
}

/// `α(α₁₂(s)α₂₃(t)E)` for random compact-group α and real s, t.
fn reduce_trial(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a, b) = su3cc_pair::<f64>(rng);
    let (s, t): (f64, f64) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let e = JordanElement::identity(RingTag::CC);
    let d = crate::algorithms::alpha12(RingTag::CC, s.into())
        .compose(&crate::algorithms::alpha23(RingTag::CC, t.into()))?
        .apply(&e)?;
    let x = f6cc(&a, &b, false)?.apply(&d)?;
    let r = reduce_to_e(&x)?;
    let back = r.composed(RingTag::CC).apply(&x)?;
    Ok(r.residual.max(back.distance(&e)))
}

/// Planted diagonal under a τ-real pair; compared as multisets.
fn diagonalize_trial(rng: &mut ChaCha8Rng, _: usize, _: f64) -> Res {
    let (a, b) = (g::<f64>(GroupSpec::SU3Real, rng), g::<f64>(GroupSpec::SU3Real, rng));
    let d1: f64 = rng.gen_range(0.5..3.0);
    let d2: f64 = rng.gen_range(0.5..3.0);
    let d3 = Complex64::from_polar(rng.gen_range(0.0..0.5), rng.gen_range(-3.0..3.0));
    let planted = [Complex64::new(d1, 0.0), Complex64::new(d2, 0.0), d3];
    let x = f6cc(&a, &b, false)?.apply(&JordanElement::diag(RingTag::CC, planted.map(Cx::from_c64)))?;
    let r = diagonalize(&x)?;
    let got = r.diagonal.clone().map(|z| z.to_c64());
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let best = PERMS
        .iter()
        .map(|p| (0..3).map(|k| (got[p[k]] - planted[k]).norm()).fold(0.0, f64::max))
        .fold(f64::INFINITY, f64::min);
    Ok(best.max(r.residual))
}

// ---------------------------------------------------------------------------
// Registry

macro_rules! generic {
    ($f:ident $(::<$($c:tt),*>)?) => {
        (Some($f::<Exact $(, $($c),*)?> as TrialFn), Some($f::<f64 $(, $($c),*)?> as TrialFn))
    };
}

fn row(id: &'static str, ring: RingTag, fns: (Option<TrialFn>, Option<TrialFn>), trials: Option<usize>) -> Suite {
    Suite { id, ring, exact: fns.0, float: fns.1, trials, float_tol: None }
}

fn float_row(id: &'static str, f: TrialFn, trials: usize, tol: f64) -> Suite {
    Suite { id, ring: RingTag::CC, exact: None, float: Some(f), trials: Some(trials), float_tol: Some(tol) }
}

/// Every suite, in no particular order (reports are sorted by id).
pub fn registry() -> Vec<Suite> {
    use RingTag::*;
    let id = None;
    const ACTION: Option<usize> = Some(500);
    let kernel = |k: usize| Some(k + 100);
    vec![
        // Conjugation identities.
        row("Lemma 3.4(1)", RC, generic!(lemma_3_4_1), id),
        row("Lemma 3.4(2)", RC, generic!(lemma_3_4_2), id),
        row("Lemma 3.4(3)", RC, generic!(lemma_3_4_3), id),
        row("Lemma 4.1.8(1)", CC, generic!(lemma_4_1_8_1), id),
        row("Lemma 4.1.8(2)", CC, generic!(lemma_4_1_8_2), id),
        row("Lemma 4.1.8(3)", CC, generic!(lemma_4_1_8_3), id),
        row("Lemma 4.1.8(4)", CC, generic!(lemma_4_1_8_4), id),
        row("Lemma 4.1.8(5)", CC, generic!(lemma_4_1_8_5), id),
        row("Lemma 4.1.8(6)", CC, generic!(lemma_4_1_8_6), id),
        row("Lemma 4.1.8(7)", CC, generic!(lemma_4_1_8_7), id),
        row("Lemma 4.1.8(8)", CC, generic!(lemma_4_1_8_8), id),
        row("Lemma 5.1.2(1)", HC, generic!(lemma_5_1_2_1), id),
        row("Lemma 5.1.2(2)", HC, generic!(lemma_5_1_2_2), id),
        row("Lemma 5.1.2(3)", HC, generic!(lemma_5_1_2_3), id),
        row("Lemma 5.1.2(4)", HC, generic!(lemma_5_1_2_4), id),
        row("Lemma 5.2.2", HC, generic!(lemma_5_2_2), id),
        row("Lemma 5.3.3", HC, generic!(lemma_5_3_3), id),
        row("Lemma 5.4.2", HC, generic!(lemma_5_4_2), id),
        // h-map and semidirect laws.
        row("Theorem 4.1.7 [h det]", CC, generic!(h_det), id),
        row("Theorem 4.1.7 [h star]", CC, generic!(h_star), id),
        row("Theorem 4.1.7 [h product]", CC, generic!(h_product), id),
        row("Theorem 4.1.3 [semidirect]", CC, generic!(semidirect_f4), id),
        row("Theorem 4.1.7 [semidirect]", CC, generic!(semidirect_f6cc), id),
        row("Theorem 5.3.5 [semidirect]", HC, generic!(semidirect_nu), id),
        // Cross product, cubic form.
        row("Cross product [tau]", RC, generic!(cross_tau::<T_RC>), id),
        row("Cross product [tau]", CC, generic!(cross_tau::<T_CC>), id),
        row("Cross product [tau]", HC, generic!(cross_tau::<T_HC>), id),
        row("Cross product [sigma]", RC, generic!(cross_sigma::<T_RC>), id),
        row("Cross product [sigma]", CC, generic!(cross_sigma::<T_CC>), id),
        row("Cross product [sigma]", HC, generic!(cross_sigma::<T_HC>), id),
        row("Cross product [gamma]", CC, generic!(cross_gamma::<T_CC>), id),
        row("Cross product [gamma]", HC, generic!(cross_gamma::<T_HC>), id),
        row("Lemma 5.5.3", RC, generic!(adjugate_square::<T_RC>), id),
        row("Lemma 5.5.3", CC, generic!(adjugate_square::<T_CC>), id),
        row("Lemma 5.5.3", HC, generic!(adjugate_square::<T_HC>), id),
        row("Lemma 5.5.3", Csplit, generic!(adjugate_square::<T_CS>), id),
        row("Lemma 5.5.3", Hsplit, generic!(adjugate_square::<T_HS>), id),
        row("Cubic form [det]", RC, generic!(cubic_form::<T_RC>), id),
        row("Cubic form [det]", CC, generic!(cubic_form::<T_CC>), id),
        row("Cubic form [det]", HC, generic!(cubic_form::<T_HC>), id),
        // Kernels.
        row("Theorem 3.1 [kernel]", RC, generic!(kernel_f6c), kernel(3)),
        row("Theorem 4.1.3 [kernel]", CC, generic!(kernel_f4cc), kernel(4)),
        row("Theorem 4.1.7 [kernel]", CC, generic!(kernel_f6cc), kernel(6)),
        row("Theorem 5.1.1 [kernel]", HC, generic!(kernel_f6hc), kernel(2)),
        // Group actions and real forms.
        row("Theorem 3.1 [action]", RC, generic!(action_f6c_det), ACTION),
        row("Theorem 3.2", RC, generic!(action_f6c_compact), ACTION),
        row("Proposition 3.3", RC, generic!(action_f6c_minus14), ACTION),
        row("Theorem 3.5", RC, generic!(action_f6c_minus14_real), ACTION),
        row("Proposition 3.6", RC, generic!(action_f6c_split), ACTION),
        row("Theorem 3.7", RC, generic!(action_f6c_split_real), ACTION),
        row("Theorem 4.1.3 [action]", CC, generic!(action_f4cc), ACTION),
        row("Theorem 4.1.7 [action]", CC, generic!(action_f6cc), ACTION),
        row("Theorem 4.2.1", CC, generic!(action_f6cc_compact), ACTION),
        row("Theorem 4.3.2", CC, generic!(action_f6cc_split), ACTION),
        row("Theorem 4.4.1", CC, generic!(action_f6cc_minus14), ACTION),
        row("Theorem 4.5.1", CC, generic!(action_f6cc_minus26), ACTION),
        row("Theorem 5.1.1 [action]", HC, generic!(action_f6hc_det), ACTION),
        row("Theorem 5.2.1", HC, generic!(action_g6hc_compact), ACTION),
        row("Theorem 5.3.2", HC, generic!(action_h6hc_split), ACTION),
        row("Theorem 5.4.1", HC, generic!(action_l6hc_minus14), ACTION),
        row("Theorem 5.5.1", HC, generic!(action_f6hc_minus26), ACTION),
        // Split forms.
        row("Proposition 4.3.1", Csplit, generic!(transport_cc), Some(100)),
        row("Proposition 5.3.1", Hsplit, generic!(transport_hc), Some(100)),
        row("Theorem 4.3.4", CC, generic!(omega_not_split), Some(2)),
        // Impossible branches.
        row("Theorem 5.2.3", HC, generic!(no_anti_tau_su6), ACTION),
        row("Theorem 5.4.3", HC, generic!(no_anti_tau_su24), ACTION),
        // Lie algebras.
        row("Lemma 4.1.5", CC, generic!(lie_cc), Some(1)),
        row("Theorem 5.5.2", HC, generic!(lie_hc), Some(1)),
        row("Theorem 5.5.2 [decomposition]", HC, generic!(decomposition), id),
        row("Theorem 5.5.4", HC, generic!(euclidean_hc), Some(1)),
        row("Theorem 3.1 [dim]", RC, generic!(lie_rc), Some(1)),
        // Algorithms.
        float_row("Lemma 4.1.1", idempotent_trial, 500, 1e-8),
        float_row("Cube root [r^3 = conj(p)q]", cube_root_trial, 1000, 1e-10),
        float_row("Theorem 4.1.6", reduce_trial, 200, 1e-7),
        float_row("Proposition 4.1.4", diagonalize_trial, 200, 1e-7),
    ]
}
