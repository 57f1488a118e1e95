mod common;

use matmor::matroid::check_rank_axioms;
use matmor::random;
use matmor::{Graph, Matroid, Subset};
use proptest::prelude::*;

use common::{gf2_rank, rng};

fn brute_bases(m: &Matroid) -> Vec<Subset> {
    let r = m.full_rank();
    let mut out: Vec<Subset> = Subset::all(m.ground_size())
        .filter(|s| s.len() == r && m.rank(*s) == r)
        .collect();
    out.sort_by(|a, b| a.shortlex_cmp(*b));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn constructed_matroids_satisfy_rank_axioms(seed in any::<u64>(), n in 0usize..=8) {
        let mut r = rng(seed);
        let m = random::matroid(&mut r, n);
        prop_assert!(m.check_axioms().unwrap().is_valid());
        prop_assert!(m.dual().check_axioms().unwrap().is_valid());
        if n > 0 {
            let i = seed as usize % n;
            prop_assert!(m.delete(i).unwrap().check_axioms().unwrap().is_valid());
            prop_assert!(m.contract(i).unwrap().check_axioms().unwrap().is_valid());
        }
    }

    #[test]
    fn bases_round_trip(seed in any::<u64>(), n in 0usize..=7) {
        let m = random::matroid(&mut rng(seed), n);
        let bases = brute_bases(&m);
        let rebuilt = Matroid::from_bases(n, bases.clone()).unwrap();
        prop_assert_eq!(brute_bases(&rebuilt), bases);
        prop_assert!(rebuilt.same_rank_function(&m).unwrap());
    }

    #[test]
    fn dual_rank_identity(seed in any::<u64>(), n in 0usize..=8) {
        let m = random::matroid(&mut rng(seed), n);
        let d = m.dual();
        let full = Subset::full(n);
        for s in Subset::all(n) {
            let expect = s.len() + m.rank(full - s) - m.full_rank();
            prop_assert_eq!(d.rank(s), expect);
        }
        prop_assert!(d.dual().same_rank_function(&m).unwrap());
    }

    #[test]
    fn minor_rank_formulas(seed in any::<u64>(), n in 1usize..=7) {
        let m = random::matroid(&mut rng(seed), n);
        let i = (seed >> 7) as usize % n;
        let del = m.delete(i).unwrap();
        let con = m.contract(i).unwrap();
        let ri = m.rank(Subset::singleton(i));
        for s in Subset::all(n - 1) {
            let lifted = s.spread_at(i);
            prop_assert_eq!(del.rank(s), m.rank(lifted));
            prop_assert_eq!(con.rank(s), m.rank(lifted.with(i)) - ri);
        }
    }

    /// Cycle-matroid rank against GF(2) rank of the incidence vectors.
    #[test]
    fn graphic_rank_matches_incidence_matrix(seed in any::<u64>(), edges in 0usize..=10) {
        let g = random::random_graph(&mut rng(seed), edges);
        let vectors: Vec<u64> = g.edges().iter().map(|&(u, v)| (1u64 << u) ^ (1u64 << v)).collect();
        let m = Matroid::cycle_matroid(g).unwrap();
        for s in Subset::all(edges) {
            let chosen: Vec<u64> = s.iter().map(|e| vectors[e]).collect();
            prop_assert_eq!(m.rank(s), gf2_rank(&chosen));
        }
    }

    #[test]
    fn truncation_caps_rank(seed in any::<u64>(), n in 0usize..=7, k in 0usize..=7) {
        let m = random::matroid(&mut rng(seed), n);
        let t = m.truncate(k);
        for s in Subset::all(n) {
            prop_assert_eq!(t.rank(s), m.rank(s).min(k));
        }
    }
}

#[test]
fn rank_axioms_reject_broken_tables() {
    // r({1}) = 2 breaks unit increase
    assert!(!check_rank_axioms(1, &[0, 2]).is_valid());
    // r({1,2}) = 0 breaks monotonicity
    assert!(!check_rank_axioms(2, &[0, 1, 1, 0]).is_valid());
    assert!(check_rank_axioms(2, &[0, 1, 1, 1]).is_valid());
}

#[test]
fn k4_and_fano_counts() {
    let k4 = Matroid::cycle_matroid(Graph::complete(4)).unwrap();
    assert_eq!(k4.bases().unwrap().len(), 16);
    assert_eq!(k4.circuits().unwrap().len(), 7);
    let fano = Matroid::fano();
    assert_eq!(fano.bases().unwrap().len(), 28);
    assert_eq!(
        fano.flats()
            .unwrap()
            .iter()
            .filter(|f| f.len() == 3)
            .count(),
        7
    );
}
