use std::collections::{BTreeMap, HashMap};

use kummer_chern::assembly::{hilbert_chern_numbers, kummer_results};
use kummer_chern::localization::{default_weights, generic_model, SurfaceKind};
use kummer_chern::partitions::{enumerate_partitions, Partition};
use kummer_chern::polyring::{BigInt, Rational};
use kummer_chern::symfun::{evaluate_genus, ChernTable, GenusPreset};
use num_traits::One;
use proptest::prelude::*;

/// Chern data `(∫c1², ∫c2)` of a surface.
type Surface = (i64, i64);

/// Monomial in the classes `c1, c2` of each factor: exponents `[a_1, b_1, a_2, b_2, …]`.
type Classes = HashMap<Vec<u32>, i64>;

fn class_mul(x: &Classes, y: &Classes) -> Classes {
    let mut out = Classes::new();
    for (ex, cx) in x {
        for (ey, cy) in y {
            let e: Vec<u32> = ex.iter().zip(ey).map(|(a, b)| a + b).collect();
            *out.entry(e).or_default() += cx * cy;
        }
    }
    out
}

/// `c_m` of a product of surfaces by the Whitney formula.
fn product_chern_class(m: usize, factors: usize) -> Classes {
    let mut total = Classes::new();
    let mut stack = vec![(0usize, m, vec![0u32; 2 * factors])];
    while let Some((i, left, e)) = stack.pop() {
        if i == factors {
            if left == 0 {
                *total.entry(e).or_default() += 1;
            }
            continue;
        }
        for d in 0..=left.min(2) {
            let mut next = e.clone();
            match d {
                1 => next[2 * i] += 1,
                2 => next[2 * i + 1] += 1,
                _ => {}
            }
            stack.push((i + 1, left - d, next));
        }
    }
    total
}

fn product_table(surfaces: &[Surface]) -> ChernTable {
    let r = surfaces.len();
    let mut numbers = BTreeMap::new();
    for mu in enumerate_partitions(2 * r) {
        let class = mu
            .parts()
            .fold(Classes::from([(vec![0; 2 * r], 1)]), |acc, part| class_mul(&acc, &product_chern_class(part, r)));
        let mut value = 0i64;
        for (e, c) in class {
            let mut term = c;
            for (i, &(c1sq, c2)) in surfaces.iter().enumerate() {
                term *= match (e[2 * i], e[2 * i + 1]) {
                    (2, 0) => c1sq,
                    (0, 1) => c2,
                    _ => 0,
                };
            }
            value += term;
        }
        numbers.insert(mu, Rational::from_integer(value.into()));
    }
    ChernTable::new(2 * r, numbers).unwrap()
}

fn surface_table(s: Surface) -> ChernTable {
    product_table(&[s])
}

fn genus(table: &ChernTable, ell: &[Rational]) -> Rational {
    evaluate_genus(table, ell).unwrap()
}

const PLANE: Surface = (9, 3);
const QUADRIC: Surface = (8, 4);
const K3: Surface = (0, 24);

#[test]
fn product_tables_by_hand() {
    // P2 × P2: χ = 3·3, c1^4 = C(4,2)·9·9
    let t = product_table(&[PLANE, PLANE]);
    assert_eq!(t.value(&Partition::new(&[4]).unwrap()), Rational::from_integer(9.into()));
    assert_eq!(t.value(&Partition::new(&[1, 1, 1, 1]).unwrap()), Rational::from_integer(486.into()));
    let t = product_table(&[K3, K3]);
    assert_eq!(t.value(&Partition::new(&[4]).unwrap()), Rational::from_integer(576.into()));
    assert_eq!(t.value(&Partition::new(&[2, 2]).unwrap()), Rational::from_integer(1152.into()));
}

#[test]
fn presets_are_multiplicative_on_products() {
    let surfaces = [PLANE, QUADRIC, K3];
    for preset in GenusPreset::ALL {
        let ell = preset.log_coefficients(6);
        for &a in &surfaces {
            for &b in &surfaces {
                let lhs = genus(&product_table(&[a, b]), &ell);
                let rhs = genus(&surface_table(a), &ell) * genus(&surface_table(b), &ell);
                assert_eq!(lhs, rhs, "{preset} {a:?} × {b:?}");
                for &c in &surfaces {
                    let lhs = genus(&product_table(&[a, b, c]), &ell);
                    let rhs = rhs.clone() * genus(&surface_table(c), &ell);
                    assert_eq!(lhs, rhs, "{preset} {a:?} × {b:?} × {c:?}");
                }
            }
        }
    }
}

fn arb_ell(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-20i64..20, 1i64..12), len)
        .prop_map(|v| v.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn arbitrary_genera_are_multiplicative(
        a in (-30i64..30, -30i64..30),
        b in (-30i64..30, -30i64..30),
        ell in arb_ell(4),
    ) {
        let lhs = genus(&product_table(&[a, b]), &ell);
        let rhs = genus(&surface_table(a), &ell) * genus(&surface_table(b), &ell);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn euler_preset_returns_top_chern_number() {
    let plane = generic_model(SurfaceKind::P2, 6, default_weights(6)).unwrap();
    for result in kummer_results(&plane, 6).unwrap() {
        let ell = GenusPreset::Euler.log_coefficients(result.dimension);
        assert_eq!(genus(&result.chern, &ell), result.chern.top_chern_number(), "n = {}", result.n);
    }
    for k in 0..=4 {
        let model = generic_model(SurfaceKind::P2, k.max(1), default_weights(k.max(1))).unwrap();
        let table = hilbert_chern_numbers(&model, k).unwrap();
        let ell = GenusPreset::Euler.log_coefficients(2 * k);
        assert_eq!(genus(&table, &ell), table.top_chern_number(), "k = {k}");
        // χ(P2^[k]) counts fixed points
        assert_eq!(table.top_chern_number(), Rational::from_integer(BigInt::from(model.fixed_points(k).len())));
    }
}

#[test]
fn todd_genus_of_hilbert_schemes_of_the_plane_is_one() {
    let model = generic_model(SurfaceKind::P2, 4, default_weights(4)).unwrap();
    for k in 0..=4 {
        let table = hilbert_chern_numbers(&model, k).unwrap();
        let ell = GenusPreset::Todd.log_coefficients(2 * k);
        assert!(genus(&table, &ell).is_one(), "k = {k}");
    }
}

#[test]
fn signature_of_small_kummer_varieties() {
    let plane = generic_model(SurfaceKind::P2, 3, default_weights(3)).unwrap();
    let results = kummer_results(&plane, 3).unwrap();
    let ell = GenusPreset::Signature.log_coefficients(4);
    // the Kummer surface is a K3 surface
    assert_eq!(genus(&results[1].chern, &ell), Rational::from_integer((-16).into()));
    // Hodge numbers h11 = h31 = 5, h21 = 4, h22 = 96 give σ = 3 - 14 + 106 - 14 + 3
    assert_eq!(genus(&results[2].chern, &ell), Rational::from_integer(84.into()));
}
