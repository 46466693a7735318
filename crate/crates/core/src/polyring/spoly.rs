use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A monomial `s_{j_1} s_{j_2} ⋯`, stored as the multiset of subscripts.
/// Its weight is the sum of the subscripts.
pub type SMonomial = Partition;

/// Sparse polynomial in `s_1, s_2, …` with every term of weight at most `weight_cap`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedSPoly {
    terms: BTreeMap<SMonomial, Rational>,
    weight_cap: usize,
}

impl GradedSPoly {
    pub fn zero(weight_cap: usize) -> Self {
        Self { terms: BTreeMap::new(), weight_cap }
    }

    pub fn one(weight_cap: usize) -> Self {
        Self::constant(Rational::one(), weight_cap)
    }

    pub fn constant(value: Rational, weight_cap: usize) -> Self {
        Self::term(SMonomial::empty(), value, weight_cap)
    }

    /// `coeff · s_monomial`, or zero if the monomial is above the cap.
    pub fn term(monomial: SMonomial, coeff: Rational, weight_cap: usize) -> Self {
        let mut out = Self::zero(weight_cap);
        out.add_term(monomial, coeff);
        out
    }

    /// The single variable `s_j`.
    pub fn var(j: usize, weight_cap: usize) -> Self {
        Self::term(SMonomial::single(j), Rational::one(), weight_cap)
    }

    pub fn weight_cap(&self) -> usize {
        self.weight_cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&SMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, monomial: &SMonomial) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&SMonomial::empty())
    }

    /// Adds `coeff · monomial` in place, dropping it if above the cap.
    pub fn add_term(&mut self, monomial: SMonomial, coeff: Rational) {
        if coeff.is_zero() || monomial.size() > self.weight_cap {
            return;
        }
        match self.terms.entry(monomial) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same polynomial under a different cap (terms above the new cap are dropped).
    pub fn with_cap(&self, weight_cap: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.size() <= weight_cap)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self { terms, weight_cap }
    }

    /// The component of exact weight `w`.
    pub fn homogeneous_part(&self, w: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.size() == w)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self { terms, weight_cap: self.weight_cap }
    }

    /// Sorted, deduplicated weights of the nonzero terms.
    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.weight_cap);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect();
        Self { terms, weight_cap: self.weight_cap }
    }

    /// Product truncated at the common weight cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.weight_cap != other.weight_cap {
            return Err(Error::CapMismatch(self.weight_cap, other.weight_cap));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let cap = self.weight_cap;
        let mut out = Self::zero(cap);
        let rhs: Vec<(usize, &SMonomial, &Rational)> =
            other.terms.iter().map(|(m, c)| (m.size(), m, c)).collect();
        for (ma, ca) in &self.terms {
            let wa = ma.size();
            for &(wb, mb, cb) in &rhs {
                if wa + wb <= cap {
                    out.add_term(ma.concat(mb), ca * cb);
                }
            }
        }
        out
    }

    fn assert_same_cap(&self, other: &Self) {
        assert_eq!(self.weight_cap, other.weight_cap, "adding polynomials with different weight caps");
    }
}

/// Product of two truncated polynomials with equal caps.
pub fn spoly_mul(a: &GradedSPoly, b: &GradedSPoly) -> Result<GradedSPoly> {
    a.mul(b)
}

impl AddAssign<&GradedSPoly> for GradedSPoly {
    fn add_assign(&mut self, rhs: &GradedSPoly) {
        self.assert_same_cap(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&GradedSPoly> for GradedSPoly {
    fn sub_assign(&mut self, rhs: &GradedSPoly) {
        self.assert_same_cap(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&GradedSPoly> for &GradedSPoly {
    type Output = GradedSPoly;

    fn add(self, rhs: &GradedSPoly) -> GradedSPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&GradedSPoly> for &GradedSPoly {
    type Output = GradedSPoly;

    fn sub(self, rhs: &GradedSPoly) -> GradedSPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &GradedSPoly {
    type Output = GradedSPoly;

    fn neg(self) -> GradedSPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        GradedSPoly { terms, weight_cap: self.weight_cap }
    }
}

impl fmt::Debug for GradedSPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (cap {})", self.weight_cap)
    }
}

impl fmt::Display for GradedSPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (part, mult) in m.multiplicities() {
                if mult == 1 {
                    write!(f, "*s{part}")?;
                } else {
                    write!(f, "*s{part}^{mult}")?;
                }
            }
        }
        Ok(())
    }
}
