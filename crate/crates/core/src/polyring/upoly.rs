use std::ops::AddAssign;

use super::{GradedSPoly, Rational};
use crate::error::{Error, Result};

/// Polynomial in `u` of degree at most `degree_cap` with [`GradedSPoly`] coefficients.
///
/// `u` carries cohomological degree: a term `s_λ t^m` sitting at `u^d` has `|λ| + m = d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<GradedSPoly>,
}

impl UPoly {
    pub fn zero(degree_cap: usize, weight_cap: usize) -> Self {
        Self { coeffs: vec![GradedSPoly::zero(weight_cap); degree_cap + 1] }
    }

    pub fn one(degree_cap: usize, weight_cap: usize) -> Self {
        let mut out = Self::zero(degree_cap, weight_cap);
        out.coeffs[0] = GradedSPoly::one(weight_cap);
        out
    }

    /// Builds from coefficients `u^0, u^1, …`; all must share a weight cap.
    pub fn from_coeffs(coeffs: Vec<GradedSPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a UPoly needs at least the u^0 coefficient");
        let cap = coeffs[0].weight_cap();
        assert!(coeffs.iter().all(|c| c.weight_cap() == cap), "mixed weight caps");
        Self { coeffs }
    }

    pub fn degree_cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn weight_cap(&self) -> usize {
        self.coeffs[0].weight_cap()
    }

    pub fn coeff(&self, d: usize) -> &GradedSPoly {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[GradedSPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GradedSPoly> {
        self.coeffs
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect() }
    }

    /// Product truncated at the common degree and weight caps.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.weight_cap() != other.weight_cap() {
            return Err(Error::CapMismatch(self.weight_cap(), other.weight_cap()));
        }
        let cap = self.degree_cap().min(other.degree_cap());
        let mut out = Self::zero(cap, self.weight_cap());
        for (i, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &a.mul_unchecked(b);
                }
            }
        }
        Ok(out)
    }

    /// `exp(self)` truncated at the degree and weight caps; see [`exp_truncated`].
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let cap = self.degree_cap();
        let wcap = self.weight_cap();
        // F' = E' F, coefficientwise: d F_d = Σ_{j=1..d} j E_j F_{d-j}.
        let mut out = Vec::with_capacity(cap + 1);
        out.push(GradedSPoly::one(wcap));
        for d in 1..=cap {
            let mut acc = GradedSPoly::zero(wcap);
            for j in 1..=d {
                let e = &self.coeffs[j];
                if e.is_zero() || out[d - j].is_zero() {
                    continue;
                }
                acc += &e.mul_unchecked(&out[d - j]).scale(&Rational::from_integer(j.into()));
            }
            out.push(acc.scale(&Rational::new(1.into(), d.into())));
        }
        Ok(Self { coeffs: out })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GradedSPoly::is_zero)
    }
}

impl AddAssign<&UPoly> for UPoly {
    fn add_assign(&mut self, rhs: &UPoly) {
        assert_eq!(self.degree_cap(), rhs.degree_cap(), "adding UPolys with different degree caps");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

/// `Σ_m E^m / m!`, truncated at the degree and weight caps of `e`.
///
/// Fails unless the `u^0` coefficient of `e` vanishes.
pub fn exp_truncated(e: &UPoly) -> Result<UPoly> {
    e.exp()
}

/// Sum of `E^m/m!` computed directly from powers; test oracle for [`UPoly::exp`].
#[cfg(test)]
pub(crate) fn exp_by_powers(e: &UPoly) -> UPoly {
    let cap = e.degree_cap();
    let mut out = UPoly::one(cap, e.weight_cap());
    let mut power = UPoly::one(cap, e.weight_cap());
    for m in 1..=cap {
        power = power.mul(e).unwrap().scale(&Rational::new(1.into(), m.into()));
        out += &power;
    }
    out
}
