//! Generating series of Hilbert schemes of points and of generalised Kummer varieties.
//!
//! With `H_t = Σ_k φ_t(X^[k]) z^k` for the deformed universal genus `φ_t`, the
//! Kummer series is
//!
//! ```text
//! Σ_n φ(A^[[n]]) z^n = (z d/dz)^2 (ln H_1 + ln H_{-1} - 2 ln H_0) / ∫ c1(X)^2
//! ```
//!
//! for any surface `X` with `∫ c1(X)^2 ≠ 0`. The `z^n` coefficient is
//! homogeneous of weight `2(n-1)`; every other weight must cancel exactly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::localization::{hilbert_genus, SurfaceKind, SurfaceModel};
use crate::partitions::{enumerate_partitions, Partition};
use crate::polyring::{zseries_euler_sq, zseries_log, GradedSPoly, Rational, SMonomial, ZSeries};
use crate::symfun::{chern_from_power_integrals, ChernTable};

/// Largest `n` for which positivity and `n³`-divisibility are enforced.
pub const CHECKED_DIVISIBILITY_MAX: usize = 8;

/// Chern numbers of one generalised Kummer variety `A^[[n]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerResult {
    pub n: usize,
    /// Complex dimension `2(n-1)`.
    pub dimension: usize,
    pub surface: SurfaceKind,
    pub chern: ChernTable,
    /// Failed positivity/divisibility observations beyond the checked range.
    pub advisories: Vec<String>,
}

impl KummerResult {
    /// Entries indexed by partitions with only even parts; the odd ones vanish.
    pub fn even_entries(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.chern.iter().filter(|(mu, _)| !mu.has_odd_part())
    }
}

/// `Σ_{k ≤ n_max} φ_t(X^[k]) z^k`, truncated at weight `W`.
pub fn hilbert_genus_series(model: &SurfaceModel, n_max: usize, t: i64, weight_cap: usize) -> Result<ZSeries> {
    let coeffs = (0..=n_max).map(|k| hilbert_genus(model, k, t, weight_cap)).collect::<Result<Vec<_>>>()?;
    Ok(ZSeries::from_coeffs(coeffs))
}

/// Weight cap sufficient for the Kummer series through `z^{n_max}`.
pub fn kummer_weight_cap(n_max: usize) -> usize {
    2 * n_max.saturating_sub(1)
}

/// The Kummer series through `z^{n_max}`; the `z^n` coefficient is exactly its
/// weight-`2(n-1)` part (`z^0` is zero).
pub fn kummer_genus_series(model: &SurfaceModel, n_max: usize) -> Result<ZSeries> {
    let cap = kummer_weight_cap(n_max);
    let (plus, (minus, flat)) = rayon::join(
        || hilbert_genus_series(model, n_max, 1, cap),
        || {
            rayon::join(
                || hilbert_genus_series(model, n_max, -1, cap),
                || hilbert_genus_series(model, n_max, 0, cap),
            )
        },
    );
    assemble_kummer_series(&plus?, &minus?, &flat?, model.c1sq)
}

/// Applies the assembly formula to precomputed `H_1`, `H_{-1}`, `H_0`.
pub fn assemble_kummer_series(plus: &ZSeries, minus: &ZSeries, flat: &ZSeries, c1sq: i64) -> Result<ZSeries> {
    assert_ne!(c1sq, 0, "the assembly formula needs c1^2 ≠ 0");
    let mut combined = zseries_log(plus)?;
    combined += &zseries_log(minus)?;
    let flat_log = zseries_log(flat)?;
    combined -= &flat_log;
    combined -= &flat_log;
    let raw = zseries_euler_sq(&combined).scale(&Rational::new(1.into(), c1sq.into()));

    let mut out = ZSeries::zero(raw.n_max(), raw.weight_cap());
    for n in 1..=raw.n_max() {
        let target = 2 * (n - 1);
        let coeff = raw.coeff(n);
        if let Some(&weight) = coeff.weights().iter().find(|&&w| w != target) {
            return Err(Error::HomogeneityFailure { n, weight });
        }
        *out.coeff_mut(n) = coeff.clone();
    }
    if !raw.coeff(0).is_zero() {
        return Err(Error::HomogeneityFailure { n: 0, weight: 0 });
    }
    Ok(out)
}

/// `∫ p_λ` for every `λ ⊢ weight`, read off the weight-`weight` part of a
/// universal-genus value: the coefficient of `s_λ` times `∏_j m_j(λ)!`.
pub fn power_integrals_from_genus(value: &GradedSPoly, weight: usize) -> BTreeMap<Partition, Rational> {
    enumerate_partitions(weight)
        .into_iter()
        .map(|lambda| {
            let c = value.coeff(&lambda) * Rational::from_integer(lambda.multiplicity_factorial().into());
            (lambda, c)
        })
        .collect()
}

/// Chern numbers of `A^[[n]]` for `1 ≤ n ≤ n_max`, validated.
pub fn kummer_results(model: &SurfaceModel, n_max: usize) -> Result<Vec<KummerResult>> {
    let series = kummer_genus_series(model, n_max)?;
    (1..=n_max).map(|n| kummer_result_from_series(&series, model.kind, n)).collect()
}

/// Chern numbers of `A^[[n]]`, validated.
pub fn kummer_chern_numbers(model: &SurfaceModel, n: usize) -> Result<KummerResult> {
    assert!(n >= 1, "Kummer varieties start at n = 1");
    let series = kummer_genus_series(model, n)?;
    kummer_result_from_series(&series, model.kind, n)
}

pub fn kummer_result_from_series(series: &ZSeries, surface: SurfaceKind, n: usize) -> Result<KummerResult> {
    let dimension = 2 * (n - 1);
    let integrals = power_integrals_from_genus(series.coeff(n), dimension);
    let chern = chern_from_power_integrals(&integrals, dimension)?;
    let advisories = validate_kummer(n, &chern)?;
    Ok(KummerResult { n, dimension, surface, chern, advisories })
}

/// Integrality and odd-part vanishing always; positivity and `n³`-divisibility
/// of the remaining entries for `n ≤ 8`, reported as advisories beyond.
pub fn validate_kummer(n: usize, chern: &ChernTable) -> Result<Vec<String>> {
    let fail = |mu: &Partition, reason: String| Error::Validation { n, partition: mu.clone(), reason };
    let cube = BigInt::from(n).pow(3);
    let mut advisories = Vec::new();
    for (mu, value) in chern.iter() {
        if !value.is_integer() {
            return Err(fail(mu, format!("non-integral Chern number {value}")));
        }
        if mu.has_odd_part() {
            if !value.is_zero() {
                return Err(fail(mu, format!("odd-part Chern number {value} should vanish")));
            }
            continue;
        }
        let v = value.to_integer();
        let problem = if !v.is_positive() {
            Some(format!("Chern number {v} is not positive"))
        } else if !v.is_multiple_of(&cube) {
            Some(format!("Chern number {v} is not divisible by n^3 = {cube}"))
        } else {
            None
        };
        if let Some(reason) = problem {
            if n <= CHECKED_DIVISIBILITY_MAX {
                return Err(fail(mu, reason));
            }
            advisories.push(format!("{mu}: {reason}"));
        }
    }
    Ok(advisories)
}

/// Chern numbers of `X^[k]` from localization at `t = 0`, `W = 2k`.
pub fn hilbert_chern_numbers(model: &SurfaceModel, k: usize) -> Result<ChernTable> {
    let genus = hilbert_genus(model, k, 0, 2 * k)?;
    let integrals = power_integrals_from_genus(&genus, 2 * k);
    let table = chern_from_power_integrals(&integrals, 2 * k)?;
    if let Some((mu, value)) = table.first_nonintegral() {
        return Err(Error::Validation { n: k, partition: mu.clone(), reason: format!("non-integral Chern number {value}") });
    }
    Ok(table)
}

/// Outcome of the check that `ln φ_m(H_X)` is quadratic in `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticReport {
    pub n_max: usize,
    /// The deformation parameters used, in order.
    pub parameters: Vec<i64>,
    /// Number of `(z-power, monomial)` coefficients whose third differences were checked.
    pub coefficients_checked: usize,
}

/// Deformation parameters used by [`universal_series_quadratic_check`].
pub const QUADRATIC_PARAMETERS: [i64; 5] = [-2, -1, 0, 1, 2];

/// Computes `ln φ_m(H_X)` for `m = -2..=2` without truncation below `z^{n_max}`
/// and checks both third finite differences in `m` vanish.
pub fn universal_series_quadratic_check(model: &SurfaceModel, n_max: usize) -> Result<QuadraticReport> {
    let cap = 2 * n_max;
    let logs = QUADRATIC_PARAMETERS
        .iter()
        .map(|&m| zseries_log(&hilbert_genus_series(model, n_max, m, cap)?))
        .collect::<Result<Vec<_>>>()?;
    let coefficients_checked = third_difference_check(&logs)?;
    Ok(QuadraticReport { n_max, parameters: QUADRATIC_PARAMETERS.to_vec(), coefficients_checked })
}

/// `logs[i]` belongs to `m = QUADRATIC_PARAMETERS[i]`. Returns the number of
/// coefficients checked.
pub fn third_difference_check(logs: &[ZSeries]) -> Result<usize> {
    assert_eq!(logs.len(), QUADRATIC_PARAMETERS.len());
    let n_max = logs[0].n_max();
    let mut checked = 0;
    for power in 0..=n_max {
        let mut monomials: Vec<&SMonomial> = logs.iter().flat_map(|l| l.coeff(power).terms().map(|(m, _)| m)).collect();
        monomials.sort();
        monomials.dedup();
        for mono in monomials {
            let f: Vec<Rational> = logs.iter().map(|l| l.coeff(power).coeff(mono)).collect();
            for w in f.windows(4) {
                let third = &w[3] - &w[2] * Rational::from_integer(3.into()) + &w[1] * Rational::from_integer(3.into())
                    - &w[0];
                if !third.is_zero() {
                    return Err(Error::QuadraticFailure { power });
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localization::{default_weights, generic_model};
    use crate::polyring::{int, rat};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn plane(k_max: usize) -> SurfaceModel {
        generic_model(SurfaceKind::P2, k_max, default_weights(k_max)).unwrap()
    }

    #[test]
    fn hilbert_series_examples() {
        let model = plane(2);
        let h = hilbert_genus_series(&model, 1, 0, 2).unwrap();
        assert_eq!(h.coeff(0), &GradedSPoly::one(2));
        assert_eq!(h.coeff(1).coeff(&p(&[1, 1])), rat(9, 2));
        assert_eq!(h.coeff(1).coeff(&p(&[2])), int(3));
        assert_eq!(h.coeff(1).len(), 2);

        for t in [-1, 0, 1] {
            assert!(hilbert_genus_series(&model, 0, t, 0).unwrap().is_one());
        }
        let h2 = hilbert_genus_series(&model, 2, 0, 4).unwrap();
        assert_eq!(h2.coeff(2).weights(), vec![4]);
    }

    #[test]
    fn low_kummer_coefficients() {
        let model = plane(3);
        let k = kummer_genus_series(&model, 3).unwrap();
        assert!(k.coeff(0).is_zero());
        assert_eq!(k.coeff(1), &GradedSPoly::one(4));
        let z2 = k.coeff(2);
        assert_eq!(z2.coeff(&p(&[2])), int(-48));
        assert_eq!(z2.len(), 1);
    }

    #[test]
    fn kummer_tables_for_small_n() {
        let model = plane(4);
        let results = kummer_results(&model, 4).unwrap();
        assert_eq!(results[0].chern.value(&Partition::empty()), int(1));
        assert_eq!(results[0].dimension, 0);
        assert_eq!(results[1].chern.value(&p(&[2])), int(24));
        assert_eq!(results[1].chern.value(&p(&[1, 1])), int(0));
        assert_eq!(results[2].chern.value(&p(&[2, 2])), int(756));
        assert_eq!(results[2].chern.value(&p(&[4])), int(108));
        let four = &results[3];
        assert_eq!(four.chern.value(&p(&[2, 2, 2])), int(30208));
        assert_eq!(four.chern.value(&p(&[4, 2])), int(6784));
        assert_eq!(four.chern.value(&p(&[6])), int(448));
        assert_eq!(four.even_entries().count(), 3);
        assert!(results.iter().all(|r| r.advisories.is_empty()));
    }

    #[test]
    fn single_n_matches_batch() {
        let model = plane(3);
        let batch = kummer_results(&model, 3).unwrap();
        assert_eq!(kummer_chern_numbers(&model, 3).unwrap(), batch[2]);
    }

    #[test]
    fn plane_hilbert_tables() {
        let one = hilbert_chern_numbers(&plane(1), 1).unwrap();
        assert_eq!(one.value(&p(&[1, 1])), int(9));
        assert_eq!(one.value(&p(&[2])), int(3));
        let two = hilbert_chern_numbers(&plane(2), 2).unwrap();
        assert_eq!(two.top_chern_number(), int(9));
        assert!(two.is_integral());
        let zero = hilbert_chern_numbers(&plane(0), 0).unwrap();
        assert_eq!(zero.value(&Partition::empty()), int(1));
        assert_eq!(zero.len(), 1);
    }

    #[test]
    fn quadratic_in_deformation_parameter() {
        let model = plane(2);
        assert!(universal_series_quadratic_check(&model, 1).unwrap().coefficients_checked > 0);
        assert_eq!(universal_series_quadratic_check(&model, 0).unwrap().coefficients_checked, 0);
    }

    #[test]
    fn quadratic_check_detects_corruption() {
        let model = plane(2);
        let mut logs: Vec<ZSeries> = QUADRATIC_PARAMETERS
            .iter()
            .map(|&m| zseries_log(&hilbert_genus_series(&model, 2, m, 4).unwrap()).unwrap())
            .collect();
        third_difference_check(&logs).unwrap();
        logs[3].coeff_mut(2).add_term(p(&[2, 1]), rat(1, 7));
        assert!(matches!(third_difference_check(&logs), Err(Error::QuadraticFailure { power: 2 })));
    }

    #[test]
    fn validation_rejects_bad_tables() {
        let table = |entries: &[(&[usize], Rational)]| {
            ChernTable::new(2, entries.iter().map(|(k, v)| (p(k), v.clone())).collect()).unwrap()
        };
        assert!(validate_kummer(2, &table(&[(&[2], int(24)), (&[1, 1], int(0))])).unwrap().is_empty());
        let err = validate_kummer(2, &table(&[(&[2], int(20))])).unwrap_err();
        assert!(matches!(err, Error::Validation { n: 2, ref partition, .. } if *partition == p(&[2])));
        assert!(validate_kummer(2, &table(&[(&[2], rat(49, 2))])).is_err());
        assert!(validate_kummer(2, &table(&[(&[2], int(24)), (&[1, 1], int(8))])).is_err());
        assert!(validate_kummer(2, &table(&[(&[2], int(-24))])).is_err());
        // beyond the checked range the same failure is only advisory
        let adv = validate_kummer(9, &table(&[(&[2], int(20))])).unwrap();
        assert_eq!(adv.len(), 1);
    }

    #[test]
    fn quadric_agrees_with_plane_at_small_n() {
        let quadric = generic_model(SurfaceKind::P1xP1, 3, default_weights(3)).unwrap();
        let a: Vec<_> = kummer_results(&quadric, 3).unwrap().into_iter().map(|r| r.chern).collect();
        let b: Vec<_> = kummer_results(&plane(3), 3).unwrap().into_iter().map(|r| r.chern).collect();
        assert_eq!(a, b);
    }
}
