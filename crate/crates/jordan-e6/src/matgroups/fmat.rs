//! Dense square matrices over the outer field.

use crate::algebra::Cx;
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct FMat<F> {
    pub n: usize,
    pub d: Vec<Cx<F>>,
}

impl<F: Field> FMat<F> {
    pub fn zero(n: usize) -> Self {
        FMat { n, d: vec![Cx::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.d[i * n + i] = Cx::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Cx<F>) -> Self {
        let mut d = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                d.push(f(i, j));
            }
        }
        FMat { n, d }
    }

    pub fn at(&self, i: usize, j: usize) -> &Cx<F> {
        &self.d[i * self.n + j]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.d[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.d[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    out.d[i * n + j] = &out.d[i * n + j] + &t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Cx<F>]) -> Vec<Cx<F>> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let mut acc = Cx::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self.d[i * n + j];
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        FMat { n: self.n, d: self.d.iter().zip(&o.d).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        FMat { n: self.n, d: self.d.iter().zip(&o.d).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, z: &Cx<F>) -> Self {
        FMat { n: self.n, d: self.d.iter().map(|a| a * z).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.at(j, i).clone())
    }

    /// Entrywise outer conjugation.
    pub fn conj(&self) -> Self {
        FMat { n: self.n, d: self.d.iter().map(Cx::conj).collect() }
    }

    pub fn trace(&self) -> Cx<F> {
        (0..self.n).fold(Cx::zero(), |acc, i| &acc + self.at(i, i))
    }

    pub fn max_abs(&self) -> f64 {
        self.d.iter().map(Cx::abs_f64).fold(0.0, f64::max)
    }

    pub fn distance(&self, o: &Self) -> f64 {
        self.d.iter().zip(&o.d).map(|(a, b)| (a - b).abs_f64()).fold(0.0, f64::max)
    }

    /// Row index of the pivot for column `col` among rows `col..`.
    fn pivot(&self, col: usize, scale: f64) -> Option<usize> {
        let n = self.n;
        if F::EXACT {
            (col..n).find(|&r| !self.d[r * n + col].is_zero())
        } else {
            let (best, mag) = (col..n)
                .map(|r| (r, self.d[r * n + col].abs_f64()))
                .fold((col, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            (mag > 1e-14 * scale.max(1e-300)).then_some(best)
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.n {
                self.d.swap(a * self.n + j, b * self.n + j);
            }
        }
    }

    pub fn det(&self) -> Cx<F> {
        let n = self.n;
        let scale = self.max_abs();
        let mut m = self.clone();
        let mut det = Cx::one();
        for c in 0..n {
            let Some(p) = m.pivot(c, scale) else { return Cx::zero() };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.d[c * n + c].clone();
            det = &det * &piv;
            let inv = piv.inv();
            for r in c + 1..n {
                let f = &m.d[r * n + c] * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let t = &f * &m.d[c * n + j];
                    m.d[r * n + j] = &m.d[r * n + j] - &t;
                }
            }
        }
        det
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let scale = self.max_abs();
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = m.pivot(c, scale)?;
            m.swap_rows(p, c);
            inv.swap_rows(p, c);
            let piv_inv = m.d[c * n + c].inv();
            for j in 0..n {
                m.d[c * n + j] = &m.d[c * n + j] * &piv_inv;
                inv.d[c * n + j] = &inv.d[c * n + j] * &piv_inv;
            }
            for r in 0..n {
                if r == c {
                    continue;
                }
                let f = m.d[r * n + c].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &f * &m.d[c * n + j];
                    m.d[r * n + j] = &m.d[r * n + j] - &t;
                    let t = &f * &inv.d[c * n + j];
                    inv.d[r * n + j] = &inv.d[r * n + j] - &t;
                }
            }
        }
        Some(inv)
    }

    /// Matrix exponential by scaling and squaring of a Taylor polynomial.
    /// Only meaningful for the float backend.
    pub fn exp(&self) -> Self {
        let norm: f64 = self.d.iter().map(Cx::abs_f64).sum::<f64>().max(1e-300);
        let squarings = norm.log2().ceil().max(0.0) as u32 + 1;
        let a = self.scale(&Cx::real(F::from_ratio(1, 1i64 << squarings)));
        // Terms fall below machine precision well before 20 for ‖a‖ ≤ 1/2.
        let mut term = Self::identity(self.n);
        let mut sum = term.clone();
        for k in 1..=20 {
            term = term.mul(&a).scale(&Cx::from_ratio(1, k));
            sum = sum.add(&term);
            if term.max_abs() < 1e-18 {
                break;
            }
        }
        for _ in 0..squarings {
            sum = sum.mul(&sum);
        }
        sum
    }
}
