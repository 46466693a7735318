//! Torus localization on Hilbert schemes of points of toric surfaces.
//!
//! A one-parameter subtorus with integer weights acts on the surface with
//! isolated fixed points, one per affine chart. Fixed points of `X^[k]` are
//! tuples of monomial ideals (partitions), one per chart, of total size `k`.
//! At each fixed point the universal genus localizes to
//! `exp(Σ_j (s_j + t·[j = 1]) q_j u^j) / e_F`, where `q_j` are the power sums of
//! the tangent weights and `e_F` their product.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{cell_hooks, multipartitions, Partition};
use crate::polyring::{
    exp_truncated, factorial, monomial_index, BigInt, GradedSPoly, MonomialIndex, Rational, SMonomial, UPoly,
};

/// How many parameter pairs the retry schedule tries before giving up.
pub const RETRY_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    /// The projective plane.
    P2,
    /// The product of two projective lines.
    P1xP1,
}

impl SurfaceKind {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::P2 => "p2",
            SurfaceKind::P1xP1 => "p1xp1",
        }
    }
}

impl FromStr for SurfaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p2" => Ok(SurfaceKind::P2),
            "p1xp1" => Ok(SurfaceKind::P1xP1),
            _ => Err(Error::UnknownSurface(s.to_string())),
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A toric surface with its torus weights evaluated at integer parameters `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    pub kind: SurfaceKind,
    /// Coordinate weights `(v1, v2)` of each affine chart around a fixed point.
    pub charts: Vec<(i64, i64)>,
    pub c1sq: i64,
    pub c2: i64,
    pub weight_params: (i64, i64),
}

/// Chart weights for `kind` at torus parameters `(a, b)`.
///
/// The plane uses homogeneous-coordinate weights `(0, a, b)`; the quadric uses
/// factor weights `a` and `b`. Fails if any chart weight vanishes.
pub fn build_surface_model(kind: SurfaceKind, a: i64, b: i64) -> Result<SurfaceModel> {
    if (a, b) == (0, 0) {
        return Err(Error::DegenerateWeights { a, b, reason: "both parameters are zero".into() });
    }
    let (charts, c1sq, c2) = match kind {
        SurfaceKind::P2 => (vec![(a, b), (-a, b - a), (-b, a - b)], 9, 3),
        SurfaceKind::P1xP1 => (vec![(a, b), (-a, b), (a, -b), (-a, -b)], 8, 4),
    };
    if let Some(i) = charts.iter().position(|&(v1, v2)| v1 == 0 || v2 == 0) {
        return Err(Error::DegenerateWeights { a, b, reason: format!("chart {i} has a zero coordinate weight") });
    }
    Ok(SurfaceModel { kind, charts, c1sq, c2, weight_params: (a, b) })
}

impl SurfaceModel {
    /// Fails if some fixed point of `X^[k]`, `k ≤ k_max`, has a zero tangent weight.
    pub fn check_generic(&self, k_max: usize) -> Result<()> {
        let (a, b) = self.weight_params;
        let partitions = crate::partitions::partitions_up_to(k_max);
        for (i, &chart) in self.charts.iter().enumerate() {
            for lambda in partitions.iter().flatten() {
                if tangent_weights(chart, lambda).is_err() {
                    return Err(Error::DegenerateWeights {
                        a,
                        b,
                        reason: format!("partition {lambda} in chart {i} has a zero tangent weight"),
                    });
                }
            }
        }
        Ok(())
    }

    /// All torus-fixed points of `X^[k]`.
    pub fn fixed_points(&self, k: usize) -> Vec<FixedPoint> {
        multipartitions(k, self.charts.len())
            .into_iter()
            .map(|tuple| FixedPoint { assignment: tuple.into_iter().enumerate().collect(), total: k })
            .collect()
    }
}

/// Default torus parameters for computations up to `k_max` points: `(1, k² + k + 1)`.
pub fn default_weights(k_max: usize) -> (i64, i64) {
    let k = k_max as i64;
    (1, k * k + k + 1)
}

/// The first generic model on the schedule `(a, b), (a, b+1), …`.
pub fn generic_model(kind: SurfaceKind, k_max: usize, start: (i64, i64)) -> Result<SurfaceModel> {
    let (a, b0) = start;
    for step in 0..RETRY_LIMIT as i64 {
        let b = b0 + step;
        let Ok(model) = build_surface_model(kind, a, b) else { continue };
        if model.check_generic(k_max).is_ok() {
            return Ok(model);
        }
    }
    Err(Error::GenericityExhausted { a, b: b0, attempts: RETRY_LIMIT })
}

/// A torus-fixed subscheme: one monomial ideal per chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub assignment: Vec<(usize, Partition)>,
    pub total: usize,
}

/// Tangent weights at a fixed point with their power sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentData {
    pub weights: Vec<i64>,
    pub euler_product: BigInt,
    /// `power_sums[j - 1] = q_j = Σ_i w_i^j` for `1 ≤ j ≤ weights.len()`.
    pub power_sums: Vec<BigInt>,
}

impl TangentData {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::DegenerateWeights { a: 0, b: 0, reason: "zero tangent weight".into() });
        }
        let euler_product = weights.iter().fold(BigInt::one(), |acc, &w| acc * w);
        let n = weights.len();
        let mut powers: Vec<BigInt> = weights.iter().map(|&w| BigInt::from(w)).collect();
        let mut power_sums = Vec::with_capacity(n);
        for j in 1..=n {
            if j > 1 {
                for (p, &w) in powers.iter_mut().zip(&weights) {
                    *p *= w;
                }
            }
            power_sums.push(powers.iter().sum());
        }
        Ok(Self { weights, euler_product, power_sums })
    }

    pub fn of(model: &SurfaceModel, point: &FixedPoint) -> Result<Self> {
        let mut weights = Vec::with_capacity(2 * point.total);
        for (chart, lambda) in &point.assignment {
            let w = tangent_weights(model.charts[*chart], lambda).map_err(|_| {
                let (a, b) = model.weight_params;
                Error::DegenerateWeights { a, b, reason: format!("partition {lambda} in chart {chart}") }
            })?;
            weights.extend(w);
        }
        Self::new(weights)
    }
}

/// Tangent weights of the Hilbert scheme of the affine plane at the monomial
/// ideal `λ`, for coordinate weights `(v1, v2)`: per cell,
/// `(arm+1)·v1 − leg·v2` and `−arm·v1 + (leg+1)·v2`.
pub fn tangent_weights(chart: (i64, i64), lambda: &Partition) -> Result<Vec<i64>> {
    let (v1, v2) = chart;
    let mut out = Vec::with_capacity(2 * lambda.size());
    for cell in cell_hooks(lambda) {
        let (arm, leg) = (cell.arm as i64, cell.leg as i64);
        out.push((arm + 1) * v1 - leg * v2);
        out.push(-arm * v1 + (leg + 1) * v2);
    }
    if out.contains(&0) {
        return Err(Error::DegenerateWeights {
            a: v1,
            b: v2,
            reason: format!("partition {lambda} has a zero tangent weight"),
        });
    }
    Ok(out)
}

/// `exp(Σ_{j=1}^{2k} (s_j + t·[j=1]) q_j u^j) / e_F`, truncated at `u^{2k}` and weight `W`.
pub fn fixed_point_contribution(
    point: &FixedPoint,
    model: &SurfaceModel,
    k: usize,
    t: i64,
    weight_cap: usize,
) -> Result<UPoly> {
    let degree_cap = 2 * k;
    if k == 0 {
        return Ok(UPoly::one(0, weight_cap));
    }
    let data = TangentData::of(model, point)?;
    let mut exponent = Vec::with_capacity(degree_cap + 1);
    exponent.push(GradedSPoly::zero(weight_cap));
    for (j, q) in (1..=degree_cap).zip(&data.power_sums) {
        let q = Rational::from_integer(q.clone());
        let mut coeff = GradedSPoly::term(SMonomial::single(j), q.clone(), weight_cap);
        if j == 1 && t != 0 {
            coeff.add_term(SMonomial::empty(), q * BigInt::from(t));
        }
        exponent.push(coeff);
    }
    let localized = exp_truncated(&UPoly::from_coeffs(exponent))?;
    Ok(localized.scale(&Rational::new(BigInt::one(), data.euler_product)))
}

/// `Σ_F` of [`fixed_point_contribution`] over every fixed point of `X^[k]`,
/// before any degree is discarded. Contributions are evaluated in parallel and
/// reduced in fixed-point order.
pub fn localized_sum(model: &SurfaceModel, k: usize, t: i64, weight_cap: usize) -> Result<UPoly> {
    let points = model.fixed_points(k);
    let contributions: Vec<UPoly> = points
        .par_iter()
        .map(|f| fixed_point_contribution(f, model, k, t, weight_cap))
        .collect::<Result<_>>()?;
    let mut total = UPoly::zero(2 * k, weight_cap);
    for c in &contributions {
        total += c;
    }
    Ok(total)
}

/// `d! · [u^d] exp(Σ_j (s_j + t·[j=1]) q_j u^j)` for `d ≤ degree_cap`, as dense
/// integer vectors over `index`. Entry `d` covers ids of weight `≤ min(d, W)`.
fn scaled_exp(power_sums: &[BigInt], t: i64, degree_cap: usize, index: &MonomialIndex) -> Vec<Vec<BigInt>> {
    let w = index.weight_cap();
    let mut g: Vec<Vec<BigInt>> = Vec::with_capacity(degree_cap + 1);
    g.push(vec![BigInt::one()]);
    for d in 1..=degree_cap {
        let lo = if t == 0 { index.weight_start(d.min(w + 1)) } else { 0 };
        let mut next = vec![BigInt::zero(); index.count_up_to(d)];
        // ratio = (d-1)!/(d-j)!, built up as j grows
        let mut ratio = BigInt::one();
        for j in 1..=d.min(power_sums.len()) {
            if j > 1 {
                ratio *= d + 1 - j;
            }
            let q = &power_sums[j - 1];
            if q.is_zero() {
                continue;
            }
            let factor = &ratio * j * q;
            let prev = &g[d - j];
            let from = if t == 0 { index.weight_start((d - j).min(w + 1)) } else { 0 };
            for (id, c) in prev.iter().enumerate().skip(from) {
                if c.is_zero() {
                    continue;
                }
                let term = &factor * c;
                if j == 1 && t != 0 {
                    next[id] += &term * t;
                }
                if let Some(target) = index.times_var(id, j) {
                    next[target] += term;
                }
            }
        }
        debug_assert!(next[..lo.min(next.len())].iter().all(Zero::is_zero));
        g.push(next);
    }
    g
}

/// The deformed universal genus `φ_t(X^[k])`, truncated at weight `W`.
///
/// Also checks that every localized class below the top degree integrates to
/// exactly zero; a failure means a wrong weight convention or degenerate parameters.
///
/// Contributions are accumulated as integers over the common denominator
/// `lcm_F e_F`; the result agrees with summing [`fixed_point_contribution`].
pub fn hilbert_genus(model: &SurfaceModel, k: usize, t: i64, weight_cap: usize) -> Result<GradedSPoly> {
    if k == 0 {
        return Ok(GradedSPoly::one(weight_cap));
    }
    let degree_cap = 2 * k;
    let index = monomial_index(weight_cap);
    let data: Vec<TangentData> =
        model.fixed_points(k).par_iter().map(|f| TangentData::of(model, f)).collect::<Result<_>>()?;
    let denominator = data.iter().fold(BigInt::one(), |acc, d| acc.lcm(&d.euler_product.abs()));
    let empty = || -> Vec<Vec<BigInt>> { (0..=degree_cap).map(|d| vec![BigInt::zero(); index.count_up_to(d)]).collect() };
    let total = data
        .par_iter()
        .fold(empty, |mut acc, point| {
            let scale = &denominator / &point.euler_product;
            for (a, g) in acc.iter_mut().zip(scaled_exp(&point.power_sums, t, degree_cap, &index)) {
                for (x, y) in a.iter_mut().zip(g) {
                    if !y.is_zero() {
                        *x += y * &scale;
                    }
                }
            }
            acc
        })
        .reduce(empty, |mut a, b| {
            for (x, y) in a.iter_mut().flatten().zip(b.into_iter().flatten()) {
                *x += y;
            }
            a
        });
    if let Some(degree) = (0..degree_cap).find(|&d| total[d].iter().any(|c| !c.is_zero())) {
        return Err(Error::VanishingFailure { k, t, degree });
    }
    let top = denominator * factorial(degree_cap);
    let mut out = GradedSPoly::zero(weight_cap);
    for (id, c) in total[degree_cap].iter().enumerate() {
        if !c.is_zero() {
            out.add_term(index.monomial(id).clone(), Rational::new(c.clone(), top.clone()));
        }
    }
    Ok(out)
}

/// Number of fixed points of `X^[k]`: the `q^k` coefficient of `∏_m (1 - q^m)^{-c}`
/// with `c` the number of charts. Counted by enumeration.
pub fn fixed_point_count(model: &SurfaceModel, k: usize) -> usize {
    model.fixed_points(k).len()
}
