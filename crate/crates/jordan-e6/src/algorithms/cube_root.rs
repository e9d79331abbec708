//! Cube roots in ℂ^C.
//!
//! Writing `c = a + b𝕚` and `r = x + y𝕚`, the equation `r³ = c` reads
//! `x³ − 3xy² = a`, `3x²y − y³ = b`. With `λ = N(r) = x² + y²` the first
//! becomes the depressed cubic `4x³ − 3λx = a`, solved by
//! `x = √λ·cos((arccos(a/λ^{3/2}) + 2πk)/3)`; `y` then follows from
//! `y² = λ − x²` with the sign fixed by the second equation. `λ` ranges over
//! the cube roots of `N(c)`.
//!
//! Near `b = 0` the arccos branch is ill-conditioned (about half the digits
//! are lost), so the chosen candidate is polished by Newton steps in the
//! coordinates `p = x + iy`, `q = x − iy`, where cubing acts componentwise:
//! `p³ = a + ib`, `q³ = a − ib`.

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{Cx, RingTag, Scalar};
use crate::error::AlgorithmError;

/// A cube root together with the branch that produced it.
#[derive(Clone, Debug)]
pub struct CubeRoot {
    pub root: Scalar<f64>,
    /// `N(root)`, the λ of the depressed cubic `4x³ − 3λx = a`.
    pub lambda: Complex64,
    /// `max |r³ − c|` over coefficients.
    pub residual: f64,
}

impl CubeRoot {
    pub fn to_json(&self) -> Value {
        json!({
            "root": self.root.to_json(),
            "lambda": Cx::from_c64(self.lambda).to_json(),
            "residual": self.residual,
        })
    }
}

/// How far `N(c)` may sit from a cube root of unity.
const BRANCH_TOL: f64 = 1e-9;

/// Cube root of `c ∈ ℂ^C` with `N(c)` a cube root of unity.
pub fn cube_root_cc(c: &Scalar<f64>) -> Result<CubeRoot, AlgorithmError> {
    if c.tag() != RingTag::CC {
        return Err(AlgorithmError::Precondition(format!("cube_root_cc needs a ℂ^C scalar, got {}", c.tag())));
    }
    let n = c.cnorm().to_c64();
    if (n.powu(3) - 1.0).norm() > BRANCH_TOL {
        return Err(AlgorithmError::Precondition(format!(
            "N(c) = {n} is not a cube root of unity; no branch applies"
        )));
    }
    let a = c.coeff(0).to_c64();
    let b = c.coeff(1).to_c64();
    let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    // Cube roots of N(c); for N(c) = 1 these are 1, ω², ω in that order.
    let l0 = n.powf(1.0 / 3.0);
    let lambdas = [l0, l0 * w * w, l0 * w];

    let mut best: Option<(f64, Complex64, Complex64, Complex64)> = None;
    for &lambda in &lambdas {
        let s = lambda.sqrt();
        let arg = (a / (s * s * s)).acos();
        for k in 0..3 {
            let x = s * ((arg + 2.0 * std::f64::consts::PI * k as f64) / 3.0).cos();
            let y0 = (lambda - x * x).sqrt();
            for y in [y0, -y0] {
                let ra = x * x * x - 3.0 * x * y * y;
                let rb = 3.0 * x * x * y - y * y * y;
                let res = (ra - a).norm().max((rb - b).norm());
                if best.map_or(true, |(r, ..)| res < r) {
                    best = Some((res, lambda, x, y));
                }
            }
        }
    }
    let (_, lambda, x, y) = best.expect("nine candidates");
    let i = Complex64::i();
    let (mut p, mut q) = (x + i * y, x - i * y);
    let (pa, qa) = (a + i * b, a - i * b);
    for _ in 0..3 {
        if p.norm() > 0.0 {
            p -= (p * p * p - pa) / (3.0 * p * p);
        }
        if q.norm() > 0.0 {
            q -= (q * q * q - qa) / (3.0 * q * q);
        }
    }
    let (x, y) = ((p + q) / 2.0, (p - q) / (2.0 * i));
    let residual = (x * x * x - 3.0 * x * y * y - a).norm().max((3.0 * x * x * y - y * y * y - b).norm());
    let root = Scalar::new(RingTag::CC, vec![Cx::from_c64(x), Cx::from_c64(y)])?;
    Ok(CubeRoot { root, lambda, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cc(a: Complex64, b: Complex64) -> Scalar<f64> {
        Scalar::new(RingTag::CC, vec![Cx::from_c64(a), Cx::from_c64(b)]).unwrap()
    }

    fn cube(r: &Scalar<f64>) -> Scalar<f64> {
        &(r * r) * r
    }

    /// x + y𝕚 with x² + y² = 1.
    fn random_unit(rng: &mut ChaCha8Rng) -> Scalar<f64> {
        let x = Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        cc(x, (Complex64::new(1.0, 0.0) - x * x).sqrt())
    }

    #[test]
    fn trivial_roots() {
        for v in [1.0, -1.0] {
            let c = cc(Complex64::new(v, 0.0), Complex64::new(0.0, 0.0));
            let r = cube_root_cc(&c).unwrap();
            assert!(r.residual < 1e-12);
            assert!(r.root.distance(&c) < 1e-12, "{:?}", r.root);
        }
    }

    #[test]
    fn internal_unit_root() {
        // 𝕚³ = −𝕚, so a root of −𝕚 exists with N = 1.
        let c = cc(Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0));
        let r = cube_root_cc(&c).unwrap();
        assert!(cube(&r.root).distance(&c) < 1e-10);
    }

    #[test]
    fn rejects_non_unit_norm() {
        let c = cc(Complex64::new(2.0, 0.0), Complex64::new(0.0, 0.0));
        assert!(matches!(cube_root_cc(&c), Err(AlgorithmError::Precondition(_))));
    }

    #[test]
    fn random_unit_targets() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let (p, q) = (random_unit(&mut rng), random_unit(&mut rng));
            let c = &p.conj() * &q;
            let r = cube_root_cc(&c).unwrap();
            assert!(r.residual <= 1e-10, "residual {}", r.residual);
            assert!(cube(&r.root).distance(&c) <= 1e-10);
            // λ is the norm of the root and solves the depressed cubic in x.
            let x = r.root.coeff(0).to_c64();
            assert!((r.root.cnorm().to_c64() - r.lambda).norm() < 1e-8);
            let a = c.coeff(0).to_c64();
            assert!((4.0 * x * x * x - 3.0 * r.lambda * x - a).norm() < 1e-8);
        }
    }

    #[test]
    fn omega_norm_targets() {
        // N(c) = ω: scale a unit by the internal ω-type element of norm ω.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        for _ in 0..50 {
            let u = random_unit(&mut rng);
            let c = u.scale(&Cx::from_c64(w.sqrt()));
            assert!((c.cnorm().to_c64() - w).norm() < 1e-12);
            let r = cube_root_cc(&c).unwrap();
            assert!(r.residual <= 1e-10);
        }
    }
}
