//! Dimension of `{φ ∈ End 𝔍 | (φX, X, X) = 0 ∀X}`.
//!
//! Each sampled X contributes the linear equation
//! `Σᵢⱼ gᵢ (X×X)ᵢ Xⱼ φᵢⱼ = 0` in the n² entries of φ, where g is the
//! (diagonal) Gram matrix of `(·,·)`. The equations have rational
//! coefficients, so samples with real coordinates suffice and the nullity
//! over the outer field equals the nullity over the real form.
//!
//! Exact backend: the rank is certified from both sides. Row reduction
//! modulo a large prime p gives `rank_ℚ ≥ rank_p`; explicit solutions
//! (inner derivations plus traceless multiplications, each checked to
//! satisfy the identity exactly) give `nullity_ℚ ≥ rank_p(solutions)`.
//! When the two bounds meet the rank over ℚ is exact; otherwise the next
//! prime is tried, and rational row reduction is the last resort.
//!
//! Float backend: SVD, singular values below `n²·ε·σ_max` count as zero.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{Cx, RingTag};
use crate::error::AlgorithmError;
use crate::field::Field;
use crate::jordan::{jdim, JordanElement};

use super::decompose::{lie_algebra_sample, lie_residual};

/// dim Sp(3), entered as a known constant.
pub const SP3_DIM: usize = 21;

/// Field over which the dimension is counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieField {
    /// The outer field C (complex dimension of the complexified algebra).
    Complex,
    /// ℝ (real dimension of the compact or split real form).
    Real,
}

impl LieField {
    pub fn as_str(self) -> &'static str {
        match self {
            LieField::Complex => "complex",
            LieField::Real => "real",
        }
    }
}

impl fmt::Display for LieField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LieField {
    type Err = AlgorithmError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "complex" | "c" | "outer" => Ok(LieField::Complex),
            "real" | "r" => Ok(LieField::Real),
            _ => Err(AlgorithmError::Precondition(format!("unknown field {s:?} (expected complex|real)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LieDimResult {
    pub ring: RingTag,
    pub field: LieField,
    pub backend: &'static str,
    /// n² for n = dim 𝔍.
    pub ambient: usize,
    /// Number of sampled constraints in the final (doubled) system.
    pub constraints: usize,
    pub rank: usize,
    pub nullity: usize,
    /// Relative singular-value threshold; 0 for the exact backend.
    pub tolerance: f64,
    pub seed: u64,
}

impl LieDimResult {
    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring.as_str(),
            "field": self.field.as_str(),
            "backend": self.backend,
            "ambient": self.ambient,
            "constraints": self.constraints,
            "rank": self.rank,
            "nullity": self.nullity,
            "tolerance": self.tolerance,
            "seed": self.seed,
        })
    }
}

/// `lie_dim(ℍ, ℝ) − dim Sp(3)`.
pub fn euclidean_part_dim(r: &LieDimResult) -> usize {
    r.nullity - SP3_DIM
}

fn sample_real<F: Field>(tag: RingTag, rng: &mut ChaCha8Rng) -> JordanElement<F> {
    let n = jdim(tag);
    let v: Vec<Cx<F>> = (0..n)
        .map(|_| {
            if F::EXACT {
                Cx::real(F::from_i64(rng.gen_range(-3..=3)))
            } else {
                Cx::real(F::random(rng))
            }
        })
        .collect();
    JordanElement::from_coords(tag, &v).expect("sized to jdim")
}

/// Constraint rows for samples `from..to`, each seeded independently.
fn rows<F: Field>(tag: RingTag, seed: u64, from: usize, to: usize) -> Vec<Vec<F>> {
    let gram: Vec<F> = JordanElement::<F>::basis(tag)
        .iter()
        .map(|b| b.ip(b).expect("same ring").re)
        .collect();
    (from..to)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let x = sample_real::<F>(tag, &mut rng);
            let xv: Vec<F> = x.coords().into_iter().map(|z| z.re).collect();
            let c: Vec<F> = x.cross(&x).expect("same ring").coords().into_iter().map(|z| z.re).collect();
            let n = xv.len();
            let mut row = Vec::with_capacity(n * n);
            for i in 0..n {
                let gc = gram[i].mul_ref(&c[i]);
                for xj in &xv {
                    row.push(gc.mul_ref(xj));
                }
            }
            row
        })
        .collect()
}

/// Row-reduced basis grown one row at a time.
struct Echelon<F> {
    /// (pivot column, row with 1 at the pivot).
    basis: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Echelon<F> {
    fn push(&mut self, mut r: Vec<F>) {
        for (p, b) in &self.basis {
            if r[*p].is_zero() {
                continue;
            }
            let f = r[*p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = x.sub_ref(&f.mul_ref(y));
                }
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            let inv = F::one().div_ref(&r[p]);
            for x in r.iter_mut() {
                if !x.is_zero() {
                    *x = x.mul_ref(&inv);
                }
            }
            self.basis.push((p, r));
        }
    }
}

/// Moduli for the certified rank: 2⁶¹ − 1, then two 30-bit primes.
const PRIMES: [u64; 3] = [2_305_843_009_213_693_951, 1_000_000_007, 998_244_353];

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn int_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p")
}

/// `q mod p`, or `None` when p divides the denominator.
fn rat_mod(q: &BigRational, p: u64) -> Option<u64> {
    let d = int_mod(q.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mulmod(int_mod(q.numer(), p), powmod(d, p - 2, p), p))
}

fn vec_mod(v: &[BigRational], p: u64) -> Option<Vec<u64>> {
    v.iter().map(|q| rat_mod(q, p)).collect()
}

/// Row echelon form over GF(p), grown one row at a time.
struct ModEchelon {
    p: u64,
    basis: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    fn new(p: u64) -> Self {
        ModEchelon { p, basis: Vec::new() }
    }

    fn push(&mut self, mut r: Vec<u64>) {
        let p = self.p;
        for (piv, b) in &self.basis {
            let f = r[*piv];
            if f == 0 {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(b) {
                if y != 0 {
                    *x = (*x + p - mulmod(f, y, p)) % p;
                }
            }
        }
        if let Some(piv) = r.iter().position(|&x| x != 0) {
            let inv = powmod(r[piv], p - 2, p);
            for x in r.iter_mut() {
                *x = mulmod(*x, inv, p);
            }
            self.basis.push((piv, r));
        }
    }

    fn rank(&self) -> usize {
        self.basis.len()
    }
}

fn rationals<F: Field>(v: &[F]) -> Vec<BigRational> {
    v.iter().map(|x| x.to_rational().expect("sampled data is rational")).collect()
}

/// Certified `(rank of first half, rank of all)` over ℚ, if some prime
/// closes the gap.
fn certified_ranks<F: Field>(
    work: RingTag,
    rows: &[Vec<BigRational>],
    half: usize,
    seed: u64,
) -> Result<Option<(usize, usize)>, AlgorithmError> {
    let ambient = rows[0].len();
    let mut witnesses: Vec<Vec<BigRational>> = Vec::new();
    let mut wrng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x5EED));
    'primes: for &p in &PRIMES {
        let mut e = ModEchelon::new(p);
        let mut rank_a = 0;
        for (k, r) in rows.iter().enumerate() {
            match vec_mod(r, p) {
                Some(v) => e.push(v),
                None => continue 'primes,
            }
            if k + 1 == half {
                rank_a = e.rank();
            }
        }
        let rank_b = e.rank();
        let need = ambient - rank_b;
        let mut null = ModEchelon::new(p);
        for w in &witnesses {
            match vec_mod(w, p) {
                Some(v) => null.push(v),
                None => continue 'primes,
            }
        }
        let mut attempts = 0;
        while null.rank() < need && attempts < need + 8 {
            attempts += 1;
            let phi = lie_algebra_sample::<F, _>(work, &mut wrng)?;
            if lie_residual(&phi)? != 0.0 {
                continue;
            }
            let w = rationals(&phi.matrix().d.iter().map(|z| z.re.clone()).collect::<Vec<_>>());
            match vec_mod(&w, p) {
                Some(v) => null.push(v),
                None => continue 'primes,
            }
            witnesses.push(w);
        }
        if null.rank() == need && rank_a == rank_b {
            return Ok(Some((rank_a, rank_b)));
        }
    }
    Ok(None)
}

fn float_rank(rows: &[Vec<f64>], ncols: usize) -> (usize, f64) {
    let m = DMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j]);
    let sv = m.singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    let rel = ncols as f64 * f64::EPSILON;
    let cut = rel * smax;
    (sv.iter().filter(|&&s| s > cut).count(), rel)
}

/// Nullity of the linearized constraint system for 𝔍(3, K).
pub fn lie_dim<F: Field>(tag: RingTag, field: LieField, seed: u64) -> Result<LieDimResult, AlgorithmError> {
    let work = tag.real_form();
    let n = jdim(work);
    let ambient = n * n;
    let first = 2 * ambient;
    let (rank_a, rank_b, tolerance) = if F::EXACT {
        let all = rows::<F>(work, seed, 0, 2 * first);
        let q: Vec<Vec<BigRational>> = all.iter().map(|r| rationals(r)).collect();
        match certified_ranks::<F>(work, &q, first, seed)? {
            Some((ra, rb)) => (ra, rb, 0.0),
            None => {
                let mut e = Echelon::<F> { basis: Vec::new() };
                let mut ra = 0;
                for (k, r) in all.into_iter().enumerate() {
                    e.push(r);
                    if k + 1 == first {
                        ra = e.basis.len();
                    }
                }
                (ra, e.basis.len(), 0.0)
            }
        }
    } else {
        let all: Vec<Vec<f64>> = rows::<F>(work, seed, 0, 2 * first)
            .into_iter()
            .map(|r| r.iter().map(F::to_f64).collect())
            .collect();
        let (ra, _) = float_rank(&all[..first], ambient);
        let (rb, tol) = float_rank(&all, ambient);
        (ra, rb, tol)
    };
    if rank_a != rank_b {
        return Err(AlgorithmError::RankUnstable(rank_a, first, rank_b, 2 * first));
    }
    Ok(LieDimResult {
        ring: tag,
        field,
        backend: F::NAME,
        ambient,
        constraints: 2 * first,
        rank: rank_b,
        nullity: ambient - rank_b,
        tolerance,
        seed,
    })
}
