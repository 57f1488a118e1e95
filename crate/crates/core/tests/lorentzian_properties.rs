mod common;

use matmor::lorentzian::{
    bivariate_coefficients, grouping_matrix, is_lorentzian, is_ultra_log_concave,
    positive_eigenvalue_count, sampled_log_concavity, substitute_linear, SampleOptions,
};
use matmor::rational::{int, ratio, Rational};
use matmor::tutte::{basis_generating, homogeneous_tutte};
use matmor::{random, HomogeneousPolynomial, Polynomial};
use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::Rng;

use common::rng;

fn quarter_grid<R: Rng>(r: &mut R, len: usize) -> Vec<Rational> {
    let grid = [ratio(1, 4), ratio(1, 2), ratio(3, 4), int(1)];
    (0..len).map(|_| grid.choose(r).unwrap().clone()).collect()
}

/// Positive eigenvalues of a symmetric integer matrix by floating point.
fn float_positive_count(a: &[Vec<i64>]) -> usize {
    let m = a.len();
    if m == 0 {
        return 0;
    }
    let mat = DMatrix::from_fn(m, m, |i, j| a[i][j] as f64);
    let scale = mat.norm().max(1.0);
    SymmetricEigen::new(mat)
        .eigenvalues
        .iter()
        .filter(|&&x| x / scale > 1e-9)
        .count()
}

#[allow(clippy::needless_range_loop)]
fn random_symmetric<R: Rng>(r: &mut R, m: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; m]; m];
    // low-rank sums keep zero eigenvalues common
    let terms = r.random_range(0..=m + 1);
    for _ in 0..terms {
        let v: Vec<i64> = (0..m).map(|_| r.random_range(-3..=3)).collect();
        let sign = if r.random_bool(0.6) { 1 } else { -1 };
        for (row, vi) in a.iter_mut().zip(&v) {
            for (x, vj) in row.iter_mut().zip(&v) {
                *x += sign * vi * vj;
            }
        }
    }
    if r.random_bool(0.3) {
        for i in 0..m {
            for j in i..m {
                let x = r.random_range(-4..=4);
                a[i][j] += x;
                if i != j {
                    a[j][i] += x;
                }
            }
        }
    }
    a
}

fn bivariate(coefficients: &[i64]) -> HomogeneousPolynomial {
    let d = coefficients.len() as u32 - 1;
    let mut p = Polynomial::zero(2);
    for (k, &c) in coefficients.iter().enumerate() {
        p.add_term(vec![d - k as u32, k as u32], int(c));
    }
    HomogeneousPolynomial::new(p, d).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn flag_tutte_is_lorentzian(seed in any::<u64>(), n in 0usize..=5, len in 1usize..=3) {
        let mut r = rng(seed);
        let flag = if r.random_bool(0.5) {
            random::truncation_flag(&mut r, n, len)
        } else {
            random::flag(&mut r, n, len)
        };
        let q = quarter_grid(&mut r, len);
        let z = homogeneous_tutte(&flag, &q).unwrap();
        let verdict = is_lorentzian(&z).unwrap();
        prop_assert!(verdict.is_lorentzian(), "{}", verdict);
    }

    #[test]
    fn basis_polynomials_are_lorentzian(seed in any::<u64>(), n in 0usize..=6) {
        let f = random::morphism(&mut rng(seed), n);
        let b = basis_generating(&f).unwrap();
        let verdict = is_lorentzian(&b).unwrap();
        prop_assert!(verdict.is_lorentzian(), "{}", verdict);
    }

    #[test]
    fn lorentzian_passes_the_sampled_probe_and_derivatives(seed in any::<u64>(), n in 1usize..=4, len in 1usize..=2) {
        let mut r = rng(seed);
        let flag = random::flag(&mut r, n, len);
        let q = quarter_grid(&mut r, len);
        let z = homogeneous_tutte(&flag, &q).unwrap();
        prop_assert!(is_lorentzian(&z).unwrap().is_lorentzian());
        let opts = SampleOptions { trials: 40, seed, ..SampleOptions::default() };
        let report = sampled_log_concavity(z.as_polynomial(), &opts);
        prop_assert!(report.passes(), "{:?}", report);
        for i in 0..=n {
            prop_assert!(is_lorentzian(&z.derivative(i)).unwrap().is_lorentzian());
        }
    }

    #[test]
    fn nonnegative_substitution_and_products_preserve_lorentzian(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let f = homogeneous_tutte(&random::flag(&mut r, n, 1), &[random::unit_rational(&mut r, 4)]).unwrap();
        let g = homogeneous_tutte(&random::flag(&mut r, n, 2), &quarter_grid(&mut r, 2)).unwrap();
        prop_assert!(is_lorentzian(&f.product(&g)).unwrap().is_lorentzian());
        let k = r.random_range(1..=n + 1);
        let a: Vec<Vec<Rational>> = (0..=n)
            .map(|_| (0..k).map(|_| ratio(r.random_range(0..=3), r.random_range(1..=2))).collect())
            .collect();
        let h = substitute_linear(&f, &a).unwrap();
        prop_assert!(is_lorentzian(&h).unwrap().is_lorentzian());
        let groups: Vec<usize> = (0..=n).map(|_| r.random_range(0..k)).collect();
        let h = substitute_linear(&g, &grouping_matrix(&groups)).unwrap();
        prop_assert!(is_lorentzian(&h).unwrap().is_lorentzian());
    }

    #[test]
    fn descartes_count_matches_float_eigenvalues(seed in any::<u64>(), m in 0usize..=8) {
        let a = random_symmetric(&mut rng(seed), m);
        let exact: Vec<Vec<Rational>> = a.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect();
        prop_assert_eq!(positive_eigenvalue_count(&exact).unwrap(), float_positive_count(&a));
    }

    #[test]
    fn bivariate_lorentzian_iff_ultra_log_concave(coefficients in prop::collection::vec(0i64..=6, 1..=6)) {
        let h = bivariate(&coefficients);
        let a = bivariate_coefficients(&h).unwrap();
        prop_assert_eq!(is_lorentzian(&h).unwrap().is_lorentzian(), is_ultra_log_concave(&a).is_ulc());
    }
}

#[test]
fn all_ones_matrix_has_one_positive_eigenvalue() {
    let ones = vec![vec![int(1); 3]; 3];
    assert_eq!(positive_eigenvalue_count(&ones).unwrap(), 1);
    assert_eq!(
        float_positive_count(&[vec![1; 3], vec![1; 3], vec![1; 3]]),
        1
    );
}

#[test]
fn sum_of_squares_is_not_lorentzian() {
    let p = &Polynomial::variable(2, 0).pow(2) + &Polynomial::variable(2, 1).pow(2);
    let h = HomogeneousPolynomial::from_polynomial(p).unwrap();
    assert!(!is_lorentzian(&h).unwrap().is_lorentzian());
}
