//! Composition rings ℝ, ℂ, ℂ′, ℍ, ℍ′ and their complexifications.
//!
//! A [`Scalar`] stores one outer-field coefficient ([`Cx`]) per internal
//! unit. Three involutions act on the complexified rings:
//!
//! * `conj` — internal conjugation, negating the internal units;
//! * `tau` — complex conjugation of the outer unit `i`;
//! * `gamma` — conjugation of the ℂ-part, fixing `1` and `e₂`, negating
//!   `e₁` and `e₃` (on ℂ^C it coincides with `conj`).
//!
//! ```
//! use jordan_e6::algebra::{Cx, RingTag, Scalar};
//! use jordan_e6::field::Exact;
//!
//! let iota = Scalar::<Exact>::iota();
//! // ι = (1 + i·e₁)/2 is an idempotent with vanishing norm.
//! assert_eq!(&iota * &iota, iota);
//! assert!(iota.cnorm().is_zero());
//! # let _ = (Cx::<Exact>::one(), RingTag::CC);
//! ```

mod cx;
mod ring;
mod scalar;

pub use cx::Cx;
pub use ring::RingTag;
pub use scalar::Scalar;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Exact, Field};
    use num_complex::Complex64;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type M2 = [[Complex64; 2]; 2];

    /// Independent 2×2 complex matrix model of the quaternion-type rings.
    fn unit_matrix(tag: RingTag, a: usize) -> M2 {
        let z = Complex64::new(0.0, 0.0);
        let o = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match (tag.is_split(), a) {
            (_, 0) => [[o, z], [z, o]],
            (false, 1) => [[i, z], [z, -i]],
            (false, 2) => [[z, o], [-o, z]],
            (false, _) => [[z, i], [i, z]],
            (true, 1) => [[o, z], [z, -o]],
            (true, 2) => [[z, o], [-o, z]],
            (true, _) => [[z, o], [o, z]],
        }
    }

    fn model(x: &Scalar<f64>) -> M2 {
        let mut m = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (a, c) in x.coeffs().iter().enumerate() {
            let u = unit_matrix(x.tag(), a);
            for r in 0..2 {
                for s in 0..2 {
                    m[r][s] += c.to_c64() * u[r][s];
                }
            }
        }
        m
    }

    fn m2_mul(a: &M2, b: &M2) -> M2 {
        let mut m = [[Complex64::new(0.0, 0.0); 2]; 2];
        for r in 0..2 {
            for s in 0..2 {
                m[r][s] = a[r][0] * b[0][s] + a[r][1] * b[1][s];
            }
        }
        m
    }

    fn m2_dist(a: &M2, b: &M2) -> f64 {
        (0..4).map(|k| (a[k / 2][k % 2] - b[k / 2][k % 2]).norm()).fold(0.0, f64::max)
    }

    fn exact_scalar(tag: RingTag, seed: u64) -> Scalar<Exact> {
        Scalar::random(tag, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    fn float_scalar(tag: RingTag, seed: u64) -> Scalar<f64> {
        Scalar::random(tag, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    #[test]
    fn multiplication_matches_matrix_model() {
        for tag in [RingTag::C, RingTag::Csplit, RingTag::H, RingTag::Hsplit, RingTag::CC, RingTag::HC] {
            for seed in 0..50 {
                let x = float_scalar(tag, seed);
                let y = float_scalar(tag, seed + 1000);
                let lhs = model(&(&x * &y));
                let rhs = m2_mul(&model(&x), &model(&y));
                assert!(m2_dist(&lhs, &rhs) < 1e-12, "{tag}");
            }
        }
    }

    #[test]
    fn norm_matches_matrix_determinant() {
        for tag in [RingTag::H, RingTag::Hsplit, RingTag::HC] {
            for seed in 0..50 {
                let x = float_scalar(tag, seed);
                let m = model(&x);
                let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                assert!((x.cnorm().to_c64() - det).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn spec_examples() {
        let t = RingTag::HC;
        let e1 = Scalar::<Exact>::unit(t, 1, Cx::one());
        let e2 = Scalar::<Exact>::unit(t, 2, Cx::one());
        assert_eq!(&e1 * &e2, Scalar::unit(t, 3, Cx::one()));
        assert_eq!(&e2 * &e1, Scalar::unit(t, 3, -Cx::one()));

        let ie1 = Scalar::<Exact>::unit(RingTag::CC, 1, Cx::i());
        assert_eq!(&ie1 * &ie1, Scalar::one(RingTag::CC));

        // γτ fixes x + y·i·e₁ for real x, y.
        let x = Scalar::<Exact>::new(
            RingTag::CC,
            vec![Cx::from_ratio(2, 3), Cx::new(Exact::zero(), Exact::from_i64(-5))],
        )
        .unwrap();
        assert_eq!(x.gamma().unwrap().tau(), x);

        let ip = Scalar::<Exact>::unit(RingTag::Csplit, 1, Cx::one());
        assert_eq!(&ip * &ip, Scalar::one(RingTag::Csplit));
    }

    #[test]
    fn iota_and_its_conjugate_split_the_ring() {
        let i = Scalar::<Exact>::iota();
        let ib = i.conj();
        assert_eq!(i.tau(), ib);
        assert!((&i * &ib).is_zero());
        assert_eq!(&i + &ib, Scalar::one(RingTag::CC));
    }

    #[test]
    fn failure_modes() {
        let z = Scalar::<Exact>::zero(RingTag::H);
        assert_eq!(z.inv(), Err(crate::error::AlgebraError::NotInvertible));
        let a = Scalar::<Exact>::one(RingTag::H);
        let b = Scalar::<Exact>::one(RingTag::C);
        assert!(a.try_mul(&b).is_err());
        assert!(Scalar::<Exact>::one(RingTag::RC).gamma().is_err());
        let (same, degenerate) = a.tau_flagged();
        assert!(degenerate && same == a);
        // split_embed refuses elements that are not τγ-fixed.
        assert!(Scalar::<Exact>::unit(RingTag::CC, 1, Cx::one()).split_embed().is_err());
        assert!(Scalar::<Exact>::one(RingTag::H).split_embed().is_err());
    }

    #[test]
    fn json_roundtrip_both_backends() {
        for tag in RingTag::ALL {
            let x = exact_scalar(tag, 7);
            assert_eq!(Scalar::<Exact>::from_json(&x.to_json()).unwrap(), x);
            let y = float_scalar(tag, 7);
            assert_eq!(Scalar::<f64>::from_json(&y.to_json()).unwrap(), y);
        }
        let v = Scalar::<Exact>::outer(RingTag::R, Cx::from_ratio(1, 2)).to_json();
        assert_eq!(v, serde_json::json!({"ring": "R", "coeffs": ["1/2"]}));
    }

    fn any_tag() -> impl Strategy<Value = RingTag> {
        prop::sample::select(RingTag::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn prop_associative(tag in any_tag(), s in 0u64..10_000) {
            let (x, y, z) = (exact_scalar(tag, s), exact_scalar(tag, s + 1), exact_scalar(tag, s + 2));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn prop_norm_multiplicative(tag in any_tag(), s in 0u64..10_000) {
            let (x, y) = (exact_scalar(tag, s), exact_scalar(tag, s + 1));
            prop_assert_eq!((&x * &y).cnorm(), &x.cnorm() * &y.cnorm());
        }

        #[test]
        fn prop_conj_reverses_products(tag in any_tag(), s in 0u64..10_000) {
            let (x, y) = (exact_scalar(tag, s), exact_scalar(tag, s + 1));
            prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!(&x * &x.conj(), Scalar::outer(tag, x.cnorm()));
        }

        #[test]
        fn prop_tau_and_gamma_are_commuting_automorphisms(s in 0u64..10_000, quat in any::<bool>()) {
            let tag = if quat { RingTag::HC } else { RingTag::CC };
            let (x, y) = (exact_scalar(tag, s), exact_scalar(tag, s + 1));
            prop_assert_eq!(x.tau().tau(), x.clone());
            prop_assert_eq!((&x * &y).tau(), &x.tau() * &y.tau());
            let g = |v: &Scalar<Exact>| v.gamma().unwrap();
            prop_assert_eq!(g(&g(&x)), x.clone());
            prop_assert_eq!(g(&(&x * &y)), &g(&x) * &g(&y));
            prop_assert_eq!(g(&x.tau()), g(&x).tau());
            prop_assert_eq!(g(&x.conj()), g(&x).conj());
        }

        #[test]
        fn prop_split_embed_is_a_ring_isomorphism(s in 0u64..10_000, quat in any::<bool>()) {
            let split = if quat { RingTag::Hsplit } else { RingTag::Csplit };
            let (a, b) = (exact_scalar(split, s), exact_scalar(split, s + 1));
            let (x, y) = (a.split_unembed().unwrap(), b.split_unembed().unwrap());
            // Images of split_unembed are τγ-fixed.
            prop_assert_eq!(x.gamma().unwrap().tau(), x.clone());
            prop_assert_eq!((&x * &y).split_embed().unwrap(), &a * &b);
            prop_assert_eq!(x.conj().split_embed().unwrap(), a.conj());
            prop_assert_eq!(Cx::real(x.cnorm().re.clone()), x.cnorm());
            prop_assert_eq!(x.cnorm(), a.cnorm());
        }

        #[test]
        fn prop_inverse(tag in any_tag(), s in 0u64..10_000) {
            let x = exact_scalar(tag, s);
            prop_assume!(!x.cnorm().is_zero());
            prop_assert_eq!(&x * &x.inv().unwrap(), Scalar::one(tag));
        }
    }
}
