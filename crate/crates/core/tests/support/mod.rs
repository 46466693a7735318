//! Brute-force oracles shared by the integration tests and the acceptance suite.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use kummer_chern::partitions::Partition;
use kummer_chern::polyring::Rational;
use num_traits::{One, Zero};

/// Exponent pairs `(a, b)` of the monomials `x^a y^b` outside the ideal of `λ`.
/// Row `i` of the diagram holds `y^i, x y^i, …, x^{λ_i - 1} y^i`.
pub fn standard_monomials(lambda: &Partition) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for (row, len) in lambda.parts().enumerate() {
        for col in 0..len {
            out.push((col as i64, row as i64));
        }
    }
    out
}

/// Minimal monomial generators of the ideal of `λ`.
pub fn ideal_generators(lambda: &Partition) -> Vec<(i64, i64)> {
    let rows: Vec<i64> = lambda.parts().map(|p| p as i64).collect();
    let mut gens = Vec::new();
    let mut prev = i64::MAX;
    for (i, &len) in rows.iter().chain(std::iter::once(&0)).enumerate() {
        if len < prev {
            gens.push((len, i as i64));
            prev = len;
        }
    }
    gens
}

fn in_ideal(lambda: &Partition, (a, b): (i64, i64)) -> bool {
    let rows: Vec<i64> = lambda.parts().map(|p| p as i64).collect();
    a >= 0 && b >= 0 && (b as usize >= rows.len() || a >= rows[b as usize])
}

fn is_standard(lambda: &Partition, (a, b): (i64, i64)) -> bool {
    a >= 0 && b >= 0 && !in_ideal(lambda, (a, b))
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, pivot);
        let lead = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &lead;
                for j in c..cols {
                    let v = &rows[r][j] * &f;
                    rows[i][j] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Weights of `Hom(I_λ, O/I_λ)` for coordinate weights `(v1, v2)`, found by
/// solving the syzygy conditions one character at a time.
///
/// A homomorphism of character `d` sends each generator `g` to `c_g · x^{g+d}`;
/// for every pair of generators the two images of their lcm must agree in
/// `O/I`. The torus weight of that piece is `-(d_x v1 + d_y v2)`.
pub fn tangent_weights_by_syzygies(chart: (i64, i64), lambda: &Partition) -> Vec<i64> {
    let (v1, v2) = chart;
    let gens = ideal_generators(lambda);
    let span = lambda.size() as i64 + 1;
    let mut weights = Vec::new();
    for dx in -span..=span {
        for dy in -span..=span {
            let d = (dx, dy);
            let image = |g: (i64, i64)| (g.0 + d.0, g.1 + d.1);
            let live: Vec<bool> = gens.iter().map(|&g| is_standard(lambda, image(g))).collect();
            let vars = live.iter().filter(|&&l| l).count();
            if vars == 0 {
                continue;
            }
            let column: Vec<Option<usize>> = live
                .iter()
                .scan(0, |next, &l| {
                    Some(if l {
                        *next += 1;
                        Some(*next - 1)
                    } else {
                        None
                    })
                })
                .collect();
            let mut rows = Vec::new();
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    let lcm = (gens[i].0.max(gens[j].0), gens[i].1.max(gens[j].1));
                    if !is_standard(lambda, image(lcm)) {
                        continue;
                    }
                    let mut row = vec![Rational::zero(); vars];
                    if let Some(ci) = column[i] {
                        row[ci] += Rational::one();
                    }
                    if let Some(cj) = column[j] {
                        row[cj] -= Rational::one();
                    }
                    rows.push(row);
                }
            }
            let dim = vars - rank(rows);
            weights.extend(std::iter::repeat_n(-(dx * v1 + dy * v2), dim));
        }
    }
    weights.sort_unstable();
    weights
}

/// Sparse polynomial in `N` variables over the rationals.
pub type MultiPoly = HashMap<Vec<u8>, Rational>;

fn poly_mul(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn poly_one(vars: usize) -> MultiPoly {
    MultiPoly::from([(vec![0; vars], Rational::one())])
}

/// `e_r(x_1, …, x_N)` expanded over subsets.
pub fn elementary_poly(r: usize, vars: usize) -> MultiPoly {
    let mut out = MultiPoly::new();
    for mask in 0u32..1 << vars {
        if mask.count_ones() as usize == r {
            let e = (0..vars).map(|i| (mask >> i & 1) as u8).collect();
            out.insert(e, Rational::one());
        }
    }
    out
}

/// `p_r(x_1, …, x_N)`.
pub fn power_poly(r: usize, vars: usize) -> MultiPoly {
    (0..vars)
        .map(|i| {
            let mut e = vec![0u8; vars];
            e[i] = r as u8;
            (e, Rational::one())
        })
        .collect()
}

/// Explicit symmetric-polynomial expansions in `N` variables, memoized by part.
pub struct SymmetricOracle {
    vars: usize,
    powers: BTreeMap<usize, MultiPoly>,
    elementary: BTreeMap<usize, MultiPoly>,
}

impl SymmetricOracle {
    pub fn new(vars: usize) -> Self {
        Self { vars, powers: BTreeMap::new(), elementary: BTreeMap::new() }
    }

    fn product(&mut self, lambda: &Partition, power: bool) -> MultiPoly {
        let vars = self.vars;
        let mut out = poly_one(vars);
        for part in lambda.parts() {
            let factor = if power {
                self.powers.entry(part).or_insert_with(|| power_poly(part, vars))
            } else {
                self.elementary.entry(part).or_insert_with(|| elementary_poly(part, vars))
            };
            out = poly_mul(&out, factor);
        }
        out
    }

    pub fn power_product(&mut self, lambda: &Partition) -> MultiPoly {
        self.product(lambda, true)
    }

    pub fn elementary_product(&mut self, mu: &Partition) -> MultiPoly {
        self.product(mu, false)
    }

    /// `Σ_λ coeffs[λ] · p_λ` expanded.
    pub fn power_combination<'a>(&mut self, coeffs: impl IntoIterator<Item = (&'a Partition, &'a Rational)>) -> MultiPoly {
        let mut out = MultiPoly::new();
        for (lambda, c) in coeffs {
            for (e, v) in self.power_product(lambda) {
                *out.entry(e).or_insert_with(Rational::zero) += v * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// `[q^k] ∏_{m ≥ 1} (1 - q^m)^{-c}`, by repeated multiplication with geometric series.
pub fn multipartition_count(k: usize, c: usize) -> u64 {
    let mut series = vec![0u64; k + 1];
    series[0] = 1;
    for _ in 0..c {
        for m in 1..=k {
            for i in m..=k {
                series[i] += series[i - m];
            }
        }
    }
    series[k]
}

/// Compares `e_μ = Σ_λ B_{μλ} p_λ` and its inverse against explicit expansions
/// in `degree` variables, for every `μ ⊢ degree`. Returns the number of identities checked.
pub fn check_transition(degree: usize) -> Result<usize, String> {
    use kummer_chern::partitions::enumerate_partitions;
    use kummer_chern::symfun::{elementary_product_in_power_basis, transition};

    let vars = degree.max(1);
    let mut oracle = SymmetricOracle::new(vars);
    let table = transition(degree);
    let mut checked = 0;
    for mu in enumerate_partitions(degree) {
        let expected = oracle.elementary_product(&mu);
        let combo = elementary_product_in_power_basis(&mu);
        if oracle.power_combination(combo.terms()) != expected {
            return Err(format!("e_{mu} disagrees with its power-sum expansion"));
        }
        if table.to_power[&mu] != combo {
            return Err(format!("memoized row for e_{mu} differs"));
        }
        let p = oracle.power_product(&mu);
        let mut back = MultiPoly::new();
        for (nu, c) in table.to_elementary[&mu].terms() {
            for (e, v) in oracle.elementary_product(nu) {
                *back.entry(e).or_insert_with(Rational::zero) += v * c;
            }
        }
        back.retain(|_, c| !c.is_zero());
        if back != p {
            return Err(format!("p_{mu} disagrees with its elementary expansion"));
        }
        checked += 2;
    }
    Ok(checked)
}

/// Compares the closed-form tangent weights with [`tangent_weights_by_syzygies`]
/// for every partition of size at most `max_size` in every chart of `model`.
pub fn check_tangent_weights(model: &kummer_chern::localization::SurfaceModel, max_size: usize) -> Result<usize, String> {
    use kummer_chern::localization::tangent_weights;
    use kummer_chern::partitions::partitions_up_to;

    let mut checked = 0;
    for &chart in &model.charts {
        for lambda in partitions_up_to(max_size).iter().flatten() {
            let oracle = tangent_weights_by_syzygies(chart, lambda);
            if oracle.len() != 2 * lambda.size() {
                return Err(format!("{lambda} in chart {chart:?}: tangent space has dimension {}", oracle.len()));
            }
            let mut closed = tangent_weights(chart, lambda).map_err(|e| e.to_string())?;
            closed.sort_unstable();
            if closed != oracle {
                return Err(format!("{lambda} in chart {chart:?}: {closed:?} vs {oracle:?}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}
