mod common;

use matmor::rational::{self, int, Rational};
use matmor::tutte::{
    basis_generating, basis_limit, homogeneous_tutte, independent_limit, lasvergnas_tutte,
    multivariate_tutte, pairing_bound, quotient_multivariate_tutte, spanning_limit,
    tutte_polynomial,
};
use matmor::{random, FlagMatroid, Matroid, Polynomial, Subset};
use num_traits::One;
use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::Rng;

use common::{rational_avoiding, rng, spread};

fn q_values<R: Rng>(r: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random::nonzero_rational(r)).collect()
}

fn rank_weight(flag: &FlagMatroid, q: &[Rational], s: Subset) -> Rational {
    flag.constituents()
        .iter()
        .zip(q)
        .map(|(m, qk)| rational::pow(qk, -(m.rank(s) as i64)))
        .product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multivariate_deletion_contraction(seed in any::<u64>(), n in 1usize..=7) {
        let mut r = rng(seed);
        let m = random::matroid(&mut r, n);
        let q = random::nonzero_rational(&mut r);
        let i = r.random_range(0..n);
        let z = multivariate_tutte(&m, &q).unwrap();
        let del = spread(&multivariate_tutte(&m.delete(i).unwrap(), &q).unwrap(), i);
        let con = spread(&multivariate_tutte(&m.contract(i).unwrap(), &q).unwrap(), i);
        let wi = Polynomial::variable(n, i);
        let weight = rational::pow(&q, -(m.rank(Subset::singleton(i)) as i64));
        prop_assert_eq!(z, &del + &(&wi * &con).scale(&weight));
    }

    #[test]
    fn flag_deletion_contraction_and_derivative(seed in any::<u64>(), n in 1usize..=6, len in 1usize..=3) {
        let mut r = rng(seed);
        let flag = random::flag(&mut r, n, len);
        let q = q_values(&mut r, len);
        let i = r.random_range(0..n);
        let z = homogeneous_tutte(&flag, &q).unwrap();
        let del = spread(&homogeneous_tutte(&flag.delete(i).unwrap(), &q).unwrap(), i + 1);
        let con = spread(&homogeneous_tutte(&flag.contract(i).unwrap(), &q).unwrap(), i + 1);
        let w0 = Polynomial::variable(n + 1, 0);
        let wi = Polynomial::variable(n + 1, i + 1);
        let weight = rank_weight(&flag, &q, Subset::singleton(i));
        prop_assert_eq!(z.as_polynomial(), &(&(&w0 * &del) + &(&wi * &con).scale(&weight)));
        let dz = z.derivative(i + 1);
        prop_assert_eq!(dz.as_polynomial(), &con.scale(&weight));
    }

    #[test]
    fn flag_minors_are_flags(seed in any::<u64>(), n in 2usize..=6, len in 1usize..=3) {
        let mut r = rng(seed);
        let flag = random::flag(&mut r, n, len);
        let i = r.random_range(0..n);
        let j = (i + 1 + r.random_range(0..n - 1)) % n;
        prop_assert!(flag.delete(i).unwrap().validate().is_ok());
        prop_assert!(flag.contract(i).unwrap().validate().is_ok());
        // deletion of i and contraction of j commute; indices shift after removal
        let (ji, ij) = (if j > i { j - 1 } else { j }, if i > j { i - 1 } else { i });
        let a = flag.delete(i).unwrap().contract(ji).unwrap();
        let b = flag.contract(j).unwrap().delete(ij).unwrap();
        prop_assert!(a.same_as(&b).unwrap());
    }

    #[test]
    fn two_step_flag_recovers_quotient_form(seed in any::<u64>(), n in 0usize..=6) {
        let mut r = rng(seed);
        let m = random::matroid(&mut r, n);
        let quotient = random::quotient(&mut r, &m);
        let (p, q) = (random::nonzero_rational(&mut r), random::nonzero_rational(&mut r));
        let flag = FlagMatroid::new(vec![quotient.clone(), m.clone()]).unwrap();
        let z = homogeneous_tutte(&flag, &[q.clone(), p.clone()]).unwrap();
        prop_assert_eq!(
            z.dehomogenize(0),
            quotient_multivariate_tutte(&m, &quotient, &p, &q).unwrap()
        );
    }

    #[test]
    fn positive_parameters_give_full_positive_support(seed in any::<u64>(), n in 0usize..=6, len in 1usize..=3) {
        let mut r = rng(seed);
        let flag = random::flag(&mut r, n, len);
        let q: Vec<Rational> = (0..len).map(|_| random::unit_rational(&mut r, 5)).collect();
        let z = homogeneous_tutte(&flag, &q).unwrap();
        prop_assert_eq!(z.len(), 1 << n);
        for s in Subset::all(n) {
            let mut e = vec![(n - s.len()) as u32];
            e.extend((0..n).map(|i| u32::from(s.contains(i))));
            prop_assert!(z.coefficient(&e) > Rational::from_integer(0.into()));
        }
    }

    #[test]
    fn usual_tutte_change_of_variables(seed in any::<u64>(), n in 0usize..=6) {
        let mut r = rng(seed);
        let m = random::matroid(&mut r, n);
        let t = tutte_polynomial(&m).unwrap();
        for _ in 0..20 {
            let x = rational_avoiding(&mut r, &[int(1)]);
            let y = rational_avoiding(&mut r, &[int(1)]);
            let q = (&x - int(1)) * (&y - int(1));
            let w = vec![&y - int(1); n];
            let lhs = rational::pow(&(&x - int(1)), -(m.full_rank() as i64))
                * t.evaluate(&[x.clone(), y.clone()]);
            prop_assert_eq!(lhs, multivariate_tutte(&m, &q).unwrap().evaluate(&w));
        }
    }

    #[test]
    fn lasvergnas_change_of_variables(seed in any::<u64>(), n in 0usize..=6) {
        let mut r = rng(seed);
        let m = random::matroid(&mut r, n);
        let quotient = random::quotient(&mut r, &m);
        let t = lasvergnas_tutte(&m, &quotient).unwrap();
        let (rm, rn) = (m.full_rank() as i64, quotient.full_rank() as i64);
        for _ in 0..20 {
            let x = rational_avoiding(&mut r, &[int(1)]);
            let y = rational_avoiding(&mut r, &[int(1)]);
            let z = rational_avoiding(&mut r, &[int(0)]);
            let p = &z * (&y - int(1));
            let q = (&x - int(1)) * (&y - int(1)) / &p;
            let w = vec![&y - int(1); n];
            let lhs = rational::pow(&(&x - int(1)), -rn)
                * rational::pow(&z, rn - rm)
                * t.evaluate(&x, &y, &z);
            let rhs = quotient_multivariate_tutte(&m, &quotient, &p, &q).unwrap().evaluate(&w);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn lasvergnas_of_equal_pair_is_tutte(seed in any::<u64>(), n in 0usize..=6) {
        let m = random::matroid(&mut rng(seed), n);
        let t = lasvergnas_tutte(&m, &m).unwrap();
        prop_assert_eq!(t.z_degree(), 0);
    }

    #[test]
    fn basis_polynomial_is_the_parameter_limit(seed in any::<u64>(), n in 0usize..=6) {
        let f = random::morphism(&mut rng(seed), n);
        // with f(E) not spanning, B(f) is empty but the limit still sees the image
        prop_assume!(f.image_spans_target());
        prop_assert_eq!(basis_limit(&f).unwrap(), basis_generating(&f).unwrap());
    }

    #[test]
    fn notable_limits(seed in any::<u64>(), n in 0usize..=7) {
        let m = random::matroid(&mut rng(seed), n);
        let mut spanning = Polynomial::zero(n);
        let mut independent = Polynomial::zero(n);
        for s in Subset::all(n) {
            let e: Vec<u32> = (0..n).map(|i| u32::from(s.contains(i))).collect();
            if m.is_spanning(s) {
                spanning.add_term(e.clone(), Rational::one());
            }
            if m.is_independent(s) {
                independent.add_term(e, Rational::one());
            }
        }
        prop_assert_eq!(spanning_limit(&m).unwrap(), spanning);
        prop_assert_eq!(independent_limit(&m).unwrap(), independent);
    }

    #[test]
    fn pairing_bound_holds(seed in any::<u64>(), n in 2usize..=7, len in 1usize..=3) {
        let mut r = rng(seed);
        let flag = random::flag(&mut r, n, len);
        let q: Vec<Rational> = (0..len)
            .map(|_| random::rational_in(&mut r, 0, 6, 6))
            .collect();
        let w: Vec<Rational> = (0..n)
            .map(|_| {
                let den = *[1, 2, 3].choose(&mut r).unwrap();
                random::rational_in(&mut r, -10, 10, den)
            })
            .collect();
        let b = pairing_bound(&flag, &q, &w).unwrap();
        prop_assert!(b.holds(), "{:?}", b);
    }
}

#[test]
fn known_tutte_polynomials() {
    // T(U_{2,4}) = x^2 + 2x + 2y + y^2
    let t = tutte_polynomial(&Matroid::uniform(4, 2).unwrap()).unwrap();
    let expect: Vec<(Vec<u32>, i64)> = vec![
        (vec![0, 1], 2),
        (vec![0, 2], 1),
        (vec![1, 0], 2),
        (vec![2, 0], 1),
    ];
    let got: Vec<(Vec<u32>, i64)> = t
        .terms()
        .map(|(e, c)| (e.clone(), i64::try_from(c.to_integer()).unwrap()))
        .collect();
    assert_eq!(got, expect);
    // T(K_4) at (1,1) counts spanning trees, at (2,2) all subsets
    let k4 = Matroid::cycle_matroid(matmor::Graph::complete(4)).unwrap();
    let t = tutte_polynomial(&k4).unwrap();
    assert_eq!(t.evaluate(&[int(1), int(1)]), int(16));
    assert_eq!(t.evaluate(&[int(2), int(2)]), int(64));
    assert_eq!(t.evaluate(&[int(2), int(1)]), int(38));
}

#[test]
fn unit_parameters_give_product() {
    let mut r = rng(11);
    let flag = random::flag(&mut r, 4, 3);
    let z = homogeneous_tutte(&flag, &vec![int(1); 3]).unwrap();
    let mut prod = Polynomial::constant(5, int(1));
    for i in 1..=4 {
        prod = &prod * &(&Polynomial::variable(5, 0) + &Polynomial::variable(5, i));
    }
    assert_eq!(z.as_polynomial(), &prod);
}
