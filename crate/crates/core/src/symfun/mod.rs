//! Symmetric functions of the Chern roots.
//!
//! Localization produces integrals of power-sum monomials `p_λ` of the Chern
//! roots; Chern numbers are integrals of elementary monomials `e_μ`. Newton's
//! identities convert between the two bases. Both bases multiply by
//! concatenating partition keys, so products never leave the basis.

mod genus;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

pub use genus::{evaluate_genus, GenusPreset};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::polyring::{BigInt, Rational};

/// Rational combination of basis monomials indexed by partitions, e.g.
/// `Σ c_λ p_λ` with `p_λ = p_{λ_1} p_{λ_2} ⋯`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasisCombo {
    terms: BTreeMap<Partition, Rational>,
}

/// A combination of power-sum monomials `p_λ`.
pub type PowerSumCombo = BasisCombo;

impl BasisCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(key: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, Rational::one());
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &Partition) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when all keys have the same size.
    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(Partition::size);
        match sizes.next() {
            Some(first) => sizes.all(|s| s == first),
            None => true,
        }
    }

    pub fn add_term(&mut self, key: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &Rational) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.concat(kb), ca * cb);
            }
        }
        out
    }
}

/// `e_r` in the power-sum basis, from `e_r = (1/r) Σ_{i=1}^r (-1)^{i-1} e_{r-i} p_i`.
pub fn elementary_in_power_basis(r: usize) -> PowerSumCombo {
    newton_ladder(r).pop().expect("ladder is never empty")
}

/// `[e_0, e_1, …, e_r]` in the power-sum basis.
fn newton_ladder(r: usize) -> Vec<PowerSumCombo> {
    let mut ladder = vec![PowerSumCombo::one()];
    for k in 1..=r {
        let mut acc = PowerSumCombo::zero();
        for i in 1..=k {
            let sign = if i % 2 == 1 { Rational::one() } else { -Rational::one() };
            acc.add_scaled(&ladder[k - i].mul(&PowerSumCombo::basis(Partition::single(i))), &sign);
        }
        let inv = Rational::new(BigInt::one(), BigInt::from(k));
        ladder.push(PowerSumCombo { terms: acc.terms.into_iter().map(|(p, c)| (p, c * &inv)).collect() });
    }
    ladder
}

/// `[p_0 = 1, p_1, …, p_r]` in the elementary basis, from
/// `p_r = Σ_{i=1}^{r-1} (-1)^{i-1} e_i p_{r-i} + (-1)^{r-1} r e_r`.
fn power_ladder(r: usize) -> Vec<BasisCombo> {
    let mut ladder = vec![BasisCombo::one()];
    for k in 1..=r {
        let mut acc = BasisCombo::zero();
        for i in 1..k {
            let sign = if i % 2 == 1 { Rational::one() } else { -Rational::one() };
            acc.add_scaled(&BasisCombo::basis(Partition::single(i)).mul(&ladder[k - i]), &sign);
        }
        let top = if k % 2 == 1 { Rational::from_integer(k.into()) } else { -Rational::from_integer(k.into()) };
        acc.add_term(Partition::single(k), top);
        ladder.push(acc);
    }
    ladder
}

/// `e_{μ_1} e_{μ_2} ⋯` in the power-sum basis.
pub fn elementary_product_in_power_basis(mu: &Partition) -> PowerSumCombo {
    let ladder = newton_ladder(mu.parts().next().unwrap_or(0));
    mu.parts().fold(PowerSumCombo::one(), |acc, part| acc.mul(&ladder[part]))
}

/// Change-of-basis data between `{e_μ}` and `{p_λ}` in one degree.
#[derive(Debug)]
pub struct Transition {
    pub degree: usize,
    /// `e_μ = Σ_λ to_power[μ][λ] p_λ`.
    pub to_power: BTreeMap<Partition, PowerSumCombo>,
    /// `p_λ = Σ_μ to_elementary[λ][μ] e_μ`.
    pub to_elementary: BTreeMap<Partition, BasisCombo>,
}

impl Transition {
    fn build(degree: usize) -> Self {
        let partitions = enumerate_partitions(degree);
        let e_ladder = newton_ladder(degree);
        let p_ladder = power_ladder(degree);
        let expand = |key: &Partition, ladder: &[BasisCombo]| {
            key.parts().fold(BasisCombo::one(), |acc, part| acc.mul(&ladder[part]))
        };
        Self {
            degree,
            to_power: partitions.iter().map(|mu| (mu.clone(), expand(mu, &e_ladder))).collect(),
            to_elementary: partitions.iter().map(|l| (l.clone(), expand(l, &p_ladder))).collect(),
        }
    }
}

/// Memoized transition data for one degree.
pub fn transition(degree: usize) -> Arc<Transition> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("transition cache poisoned").get(&degree) {
        return Arc::clone(t);
    }
    let built = Arc::new(Transition::build(degree));
    let mut guard = cache.write().expect("transition cache poisoned");
    Arc::clone(guard.entry(degree).or_insert(built))
}

/// Chern numbers `∫ c_μ` of one manifold, keyed by partitions of its complex dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernTable {
    degree: usize,
    numbers: BTreeMap<Partition, Rational>,
}

impl ChernTable {
    /// Every key must be a partition of `degree`.
    pub fn new(degree: usize, numbers: BTreeMap<Partition, Rational>) -> Result<Self> {
        if let Some(bad) = numbers.keys().find(|k| k.size() != degree) {
            return Err(Error::InvalidPartition(format!("{bad} is not a partition of {degree}")));
        }
        Ok(Self { degree, numbers })
    }

    /// Complex dimension; keys are partitions of this number.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, mu: &Partition) -> Option<&Rational> {
        self.numbers.get(mu)
    }

    /// Value for `μ`, zero when absent.
    pub fn value(&self, mu: &Partition) -> Rational {
        self.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    /// Entries in increasing lexicographic order of the part lists
    /// (`c2^4`, `c2^2 c4`, `c4^2`, `c2 c6`, `c8`).
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.numbers.iter()
    }

    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbers.is_empty()
    }

    /// `∫ c_d`, the Euler number.
    pub fn top_chern_number(&self) -> Rational {
        self.value(&Partition::single(self.degree))
    }

    pub fn is_integral(&self) -> bool {
        self.numbers.values().all(|v| v.is_integer())
    }

    /// First entry with a nonintegral value, if any.
    pub fn first_nonintegral(&self) -> Option<(&Partition, &Rational)> {
        self.numbers.iter().find(|(_, v)| !v.is_integer())
    }

    pub fn integer_entries(&self) -> Option<BTreeMap<Partition, BigInt>> {
        self.numbers.iter().map(|(k, v)| v.is_integer().then(|| (k.clone(), v.to_integer()))).collect()
    }

    pub fn has_negative_entry(&self) -> bool {
        self.numbers.values().any(Signed::is_negative)
    }
}

impl fmt::Display for ChernTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mu, v) in &self.numbers {
            writeln!(f, "{} | {}", chern_key(mu), v)?;
        }
        Ok(())
    }
}

/// `N_μ = Σ_λ B_{μλ} P_λ` where `e_μ = Σ_λ B_{μλ} p_λ`.
///
/// `P` must contain every partition of `degree`.
pub fn chern_from_power_integrals(p: &BTreeMap<Partition, Rational>, degree: usize) -> Result<ChernTable> {
    let t = transition(degree);
    if let Some(missing) = t.to_elementary.keys().find(|l| !p.contains_key(*l)) {
        return Err(Error::MissingKey(missing.clone()));
    }
    let numbers = t
        .to_power
        .iter()
        .map(|(mu, row)| {
            let value = row.terms().fold(Rational::zero(), |acc, (lambda, b)| acc + b * &p[lambda]);
            (mu.clone(), value)
        })
        .collect();
    ChernTable::new(degree, numbers)
}

/// Inverse of [`chern_from_power_integrals`]. Absent Chern numbers count as zero.
pub fn power_integrals_from_chern(table: &ChernTable) -> BTreeMap<Partition, Rational> {
    let t = transition(table.degree());
    t.to_elementary
        .iter()
        .map(|(lambda, row)| {
            let value = row.terms().fold(Rational::zero(), |acc, (mu, c)| acc + c * table.value(mu));
            (lambda.clone(), value)
        })
        .collect()
}

/// Renders `μ` as e.g. `c2^3 c4`: ascending parts, caret exponents. The empty
/// monomial renders as `1`.
pub fn chern_key(mu: &Partition) -> String {
    if mu.is_empty() {
        return "1".to_string();
    }
    mu.multiplicities()
        .into_iter()
        .rev()
        .map(|(part, mult)| if mult == 1 { format!("c{part}") } else { format!("c{part}^{mult}") })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Inverse of [`chern_key`].
pub fn parse_chern_key(key: &str) -> Result<Partition> {
    let bad = || Error::BadChernKey(key.to_string());
    let key = key.trim();
    if key == "1" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for factor in key.split_whitespace() {
        let body = factor.strip_prefix('c').ok_or_else(bad)?;
        let (index, exp) = match body.split_once('^') {
            Some((i, e)) => (i, e.parse::<usize>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let index: usize = index.parse().map_err(|_| bad())?;
        if index == 0 || exp == 0 {
            return Err(bad());
        }
        parts.extend(std::iter::repeat_n(index, exp));
    }
    if parts.is_empty() {
        return Err(bad());
    }
    Partition::from_unsorted(&parts)
}
