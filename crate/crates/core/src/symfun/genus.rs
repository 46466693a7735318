//! Evaluating a genus `φ(M) = ∫_M ∏ f(γ_i)` from Chern numbers.
//!
//! Genera are described by the log-coefficients `ℓ_j` of their characteristic
//! series, `f(x) = exp(Σ_j ℓ_j x^j)`, so that `∏ f(γ_i) = exp(Σ_j ℓ_j p_j)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{power_integrals_from_chern, ChernTable};
use crate::error::{Error, Result};
use crate::polyring::{factorial, BigInt, Rational};

/// Genera with closed-form characteristic series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusPreset {
    /// `x / (1 - e^{-x})`
    Todd,
    /// `1 + x`
    Euler,
    /// `x / tanh x`
    Signature,
}

impl GenusPreset {
    pub const ALL: [GenusPreset; 3] = [GenusPreset::Todd, GenusPreset::Euler, GenusPreset::Signature];

    pub fn name(self) -> &'static str {
        match self {
            GenusPreset::Todd => "todd",
            GenusPreset::Euler => "euler",
            GenusPreset::Signature => "signature",
        }
    }

    /// `[ℓ_1, …, ℓ_n]` with `log f(x) = Σ_j ℓ_j x^j`.
    pub fn log_coefficients(self, n: usize) -> Vec<Rational> {
        let len = n + 1;
        let log_f = match self {
            GenusPreset::Todd => {
                // (1 - e^{-x})/x = Σ_k (-1)^k x^k / (k+1)!
                let g: Vec<Rational> = (0..len)
                    .map(|k| {
                        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                        Rational::new(sign, factorial(k + 1))
                    })
                    .collect();
                negate(&series_log(&g))
            }
            GenusPreset::Euler => {
                let mut g = vec![Rational::zero(); len];
                g[0] = Rational::one();
                if len > 1 {
                    g[1] = Rational::one();
                }
                series_log(&g)
            }
            GenusPreset::Signature => {
                // x / tanh x = cosh x / (sinh x / x)
                let cosh: Vec<Rational> = (0..len)
                    .map(|k| if k % 2 == 0 { Rational::new(BigInt::one(), factorial(k)) } else { Rational::zero() })
                    .collect();
                let sinhc: Vec<Rational> = (0..len)
                    .map(|k| if k % 2 == 0 { Rational::new(BigInt::one(), factorial(k + 1)) } else { Rational::zero() })
                    .collect();
                let mut out = series_log(&cosh);
                for (o, s) in out.iter_mut().zip(series_log(&sinhc)) {
                    *o -= s;
                }
                out
            }
        };
        log_f.into_iter().skip(1).collect()
    }
}

impl FromStr for GenusPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenusPreset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

impl fmt::Display for GenusPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Log of a univariate series with constant term 1, same truncation.
fn series_log(g: &[Rational]) -> Vec<Rational> {
    assert!(g[0].is_one(), "series log needs constant term 1");
    let mut out = vec![Rational::zero(); g.len()];
    for n in 1..g.len() {
        let mut acc = &g[n] * Rational::from_integer(n.into());
        for j in 1..n {
            acc -= &out[j] * &g[n - j] * Rational::from_integer(j.into());
        }
        out[n] = acc / Rational::from_integer(n.into());
    }
    out
}

fn negate(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| -x).collect()
}

/// `φ(M) = Σ_{λ ⊢ dim} (∏_i ℓ_{λ_i}) / (∏_j m_j(λ)!) · ∫ p_λ`, where `ell[j-1] = ℓ_j`.
pub fn evaluate_genus(table: &ChernTable, ell: &[Rational]) -> Result<Rational> {
    let dim = table.degree();
    if ell.len() < dim {
        return Err(Error::SeriesTooShort { needed: dim, got: ell.len() });
    }
    let p = power_integrals_from_chern(table);
    let mut total = Rational::zero();
    for (lambda, integral) in &p {
        if integral.is_zero() {
            continue;
        }
        let weight = lambda.parts().fold(Rational::one(), |acc, j| acc * &ell[j - 1]);
        total += weight * integral / Rational::from_integer(lambda.multiplicity_factorial().into());
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::polyring::{int, rat};
    use std::collections::BTreeMap;

    fn table(degree: usize, entries: &[(&[usize], i64)]) -> ChernTable {
        let numbers: BTreeMap<_, _> =
            entries.iter().map(|&(k, v)| (Partition::new(k).unwrap(), int(v))).collect();
        ChernTable::new(degree, numbers).unwrap()
    }

    #[test]
    fn preset_coefficients() {
        assert_eq!(GenusPreset::Todd.log_coefficients(2), vec![rat(1, 2), rat(-1, 24)]);
        assert_eq!(GenusPreset::Euler.log_coefficients(4), vec![rat(1, 1), rat(-1, 2), rat(1, 3), rat(-1, 4)]);
        // log(x/tanh x) = x^2/3 - x^4/90 + ...
        assert_eq!(
            GenusPreset::Signature.log_coefficients(4),
            vec![int(0), rat(1, 3), int(0), rat(-7, 90)]
        );
    }

    #[test]
    fn k3_surface_genera() {
        let k3 = table(2, &[(&[2], 24), (&[1, 1], 0)]);
        let eval = |g: GenusPreset| evaluate_genus(&k3, &g.log_coefficients(2)).unwrap();
        assert_eq!(eval(GenusPreset::Todd), int(2));
        assert_eq!(eval(GenusPreset::Euler), int(24));
        assert_eq!(eval(GenusPreset::Signature), int(-16));
    }

    #[test]
    fn plane_genera() {
        let plane = table(2, &[(&[1, 1], 9), (&[2], 3)]);
        let eval = |g: GenusPreset| evaluate_genus(&plane, &g.log_coefficients(2)).unwrap();
        assert_eq!(eval(GenusPreset::Todd), int(1));
        assert_eq!(eval(GenusPreset::Euler), int(3));
        assert_eq!(eval(GenusPreset::Signature), int(1));
    }

    #[test]
    fn point_has_genus_one() {
        let point = table(0, &[(&[], 1)]);
        for g in GenusPreset::ALL {
            assert_eq!(evaluate_genus(&point, &g.log_coefficients(0)).unwrap(), int(1));
        }
    }

    #[test]
    fn short_coefficient_list_is_rejected() {
        let k3 = table(2, &[(&[2], 24)]);
        let err = evaluate_genus(&k3, &[rat(1, 2)]).unwrap_err();
        assert!(matches!(err, Error::SeriesTooShort { needed: 2, got: 1 }));
    }

    #[test]
    fn preset_names() {
        assert_eq!("todd".parse::<GenusPreset>().unwrap(), GenusPreset::Todd);
        assert_eq!("Signature".parse::<GenusPreset>().unwrap(), GenusPreset::Signature);
        assert!("elliptic".parse::<GenusPreset>().is_err());
    }
}
