use std::ops::{AddAssign, SubAssign};

use super::{GradedSPoly, Rational};
use crate::error::{Error, Result};

/// Truncated power series `Σ_{n ≤ n_max} a_n z^n` with [`GradedSPoly`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeries {
    coeffs: Vec<GradedSPoly>,
}

impl ZSeries {
    pub fn zero(n_max: usize, weight_cap: usize) -> Self {
        Self { coeffs: vec![GradedSPoly::zero(weight_cap); n_max + 1] }
    }

    pub fn one(n_max: usize, weight_cap: usize) -> Self {
        let mut out = Self::zero(n_max, weight_cap);
        out.coeffs[0] = GradedSPoly::one(weight_cap);
        out
    }

    pub fn from_coeffs(coeffs: Vec<GradedSPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a ZSeries needs at least the constant coefficient");
        let cap = coeffs[0].weight_cap();
        assert!(coeffs.iter().all(|c| c.weight_cap() == cap), "mixed weight caps");
        Self { coeffs }
    }

    pub fn n_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn weight_cap(&self) -> usize {
        self.coeffs[0].weight_cap()
    }

    pub fn coeff(&self, n: usize) -> &GradedSPoly {
        &self.coeffs[n]
    }

    pub fn coeff_mut(&mut self, n: usize) -> &mut GradedSPoly {
        &mut self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[GradedSPoly] {
        &self.coeffs
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.weight_cap() != other.weight_cap() {
            return Err(Error::CapMismatch(self.weight_cap(), other.weight_cap()));
        }
        let n_max = self.n_max().min(other.n_max());
        let mut out = Self::zero(n_max, self.weight_cap());
        for i in 0..=n_max {
            for j in 0..=n_max - i {
                let (a, b) = (&self.coeffs[i], &other.coeffs[j]);
                if !a.is_zero() && !b.is_zero() {
                    out.coeffs[i + j] += &a.mul_unchecked(b);
                }
            }
        }
        Ok(out)
    }

    /// Formal logarithm; the constant coefficient must be exactly 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != GradedSPoly::one(self.weight_cap()) {
            return Err(Error::ConstantNotOne);
        }
        let cap = self.weight_cap();
        // H' = L' H gives n L_n = n H_n - Σ_{j=1}^{n-1} j L_j H_{n-j}.
        let mut out = vec![GradedSPoly::zero(cap)];
        for n in 1..=self.n_max() {
            let mut acc = self.coeffs[n].scale(&Rational::from_integer(n.into()));
            for j in 1..n {
                let (l, h) = (&out[j], &self.coeffs[n - j]);
                if !l.is_zero() && !h.is_zero() {
                    acc -= &l.mul_unchecked(h).scale(&Rational::from_integer(j.into()));
                }
            }
            out.push(acc.scale(&Rational::new(1.into(), n.into())));
        }
        Ok(Self { coeffs: out })
    }

    /// Formal exponential; the constant coefficient must vanish.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let cap = self.weight_cap();
        let mut out = vec![GradedSPoly::one(cap)];
        for n in 1..=self.n_max() {
            let mut acc = GradedSPoly::zero(cap);
            for j in 1..=n {
                let (l, h) = (&self.coeffs[j], &out[n - j]);
                if !l.is_zero() && !h.is_zero() {
                    acc += &l.mul_unchecked(h).scale(&Rational::from_integer(j.into()));
                }
            }
            out.push(acc.scale(&Rational::new(1.into(), n.into())));
        }
        Ok(Self { coeffs: out })
    }

    /// `(z d/dz)^2`: the `z^n` coefficient is multiplied by `n^2`.
    pub fn euler_sq(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&Rational::from_integer((n * n).into())))
            .collect();
        Self { coeffs }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == GradedSPoly::one(self.weight_cap()) && self.coeffs[1..].iter().all(GradedSPoly::is_zero)
    }
}

impl AddAssign<&ZSeries> for ZSeries {
    fn add_assign(&mut self, rhs: &ZSeries) {
        assert_eq!(self.n_max(), rhs.n_max(), "adding series of different lengths");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&ZSeries> for ZSeries {
    fn sub_assign(&mut self, rhs: &ZSeries) {
        assert_eq!(self.n_max(), rhs.n_max(), "subtracting series of different lengths");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

/// `ln H` for `H` with constant coefficient 1, truncated at `z^{n_max}`.
pub fn zseries_log(h: &ZSeries) -> Result<ZSeries> {
    h.log()
}

/// `(z d/dz)^2 H`.
pub fn zseries_euler_sq(h: &ZSeries) -> ZSeries {
    h.euler_sq()
}

/// `Σ_{m≥1} (-1)^{m+1} (H-1)^m / m`; test oracle for [`ZSeries::log`].
#[cfg(test)]
pub(crate) fn log_by_powers(h: &ZSeries) -> ZSeries {
    use num_traits::One;

    let n_max = h.n_max();
    let cap = h.weight_cap();
    let mut x = h.clone();
    x -= &ZSeries::one(n_max, cap);
    let mut out = ZSeries::zero(n_max, cap);
    let mut power = ZSeries::one(n_max, cap);
    for m in 1..=n_max {
        power = power.mul(&x).unwrap();
        let sign = if m % 2 == 1 { Rational::one() } else { -Rational::one() };
        out += &power.scale(&(sign / Rational::from_integer(m.into())));
    }
    out
}
