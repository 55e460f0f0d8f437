//! Randomized invariance checks on braids, diagrams and presentations.

#![allow(clippy::needless_range_loop)]

use knotcover::{
    alexander_poly, equal_up_to_units, eta_sequence, parse_surgery, skein_defect, wirtinger,
    BraidWord, FpPresentation, SearchConfig,
};
use proptest::prelude::*;

fn braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        proptest::collection::vec(letter, 1..=max_len)
            .prop_map(move |ls| BraidWord::new(n, ls).unwrap())
    })
}

fn det(m: &[Vec<i64>]) -> i128 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] as i128 * det(&minor)
        })
        .sum()
}

fn small_presentation() -> impl Strategy<Value = FpPresentation> {
    let letter = prop_oneof![Just(1), Just(-1), Just(2), Just(-2)];
    proptest::collection::vec(proptest::collection::vec(letter, 1..=6), 1..=2)
        .prop_map(|rels| FpPresentation::with_anonymous_generators(2, rels).unwrap())
}

/// Braids whose closure has no free-floating unknot, as Wirtinger needs.
fn connected_braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    braid(max_strands, max_len).prop_filter("unused strand", |b| b.closure().unknots() == 0)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn skein_relation(b in braid(4, 10), pos in any::<prop::sample::Index>()) {
        let pos = pos.index(b.len());
        prop_assert!(skein_defect(&b, pos).unwrap().is_zero());
    }

    #[test]
    fn markov_moves(b in braid(4, 10), k in 1i32..4, positive in any::<bool>()) {
        let delta = alexander_poly(&b);
        let k = k.min(b.strands() as i32 - 1);
        prop_assert!(equal_up_to_units(&delta, &alexander_poly(&b.markov_conjugate(k).unwrap())));
        prop_assert!(equal_up_to_units(&delta, &alexander_poly(&b.markov_stabilize(positive))));
    }

    #[test]
    fn reversal_negates_linking(b in braid(4, 10), c in 0usize..4) {
        let d = b.closure().orient().unwrap();
        let lk = d.linking_matrix();
        let m = d.num_components();
        let c = c % m;
        for i in 0..m {
            for j in 0..m {
                prop_assert_eq!(lk[i][j], lk[j][i]);
            }
        }
        let r = d.reversed(c).unwrap().linking_matrix();
        for i in 0..m {
            for j in 0..m {
                let flip = if i != j && (i == c || j == c) { -1 } else { 1 };
                prop_assert_eq!(r[i][j], flip * lk[i][j]);
            }
        }
    }

    #[test]
    fn link_group_homology(b in connected_braid(4, 10)) {
        let d = b.closure().orient().unwrap();
        let p = wirtinger(&d).unwrap();
        let h = p.abelianization();
        prop_assert_eq!(h.free_rank, d.num_components());
        prop_assert!(h.torsion.is_empty());
        prop_assert_eq!(p.simplify().abelianization(), h);
    }

    #[test]
    fn surgery_homology_is_framing_cokernel(b in connected_braid(3, 8), frames in proptest::collection::vec(-4i64..=4, 3)) {
        let d = b.closure().orient().unwrap();
        let m = d.num_components();
        let mut lk = d.linking_matrix();
        for (i, row) in lk.iter_mut().enumerate() {
            row[i] = frames[i];
        }
        let coeffs: Vec<String> = frames[..m].iter().map(|f| f.to_string()).collect();
        let p = wirtinger(&d).unwrap().surgery(&parse_surgery(&coeffs.join(",")).unwrap()).unwrap();
        let h = p.abelianization();
        let order = det(&lk).unsigned_abs();
        if order == 0 {
            prop_assert!(h.free_rank > 0);
        } else {
            prop_assert_eq!(h.free_rank, 0);
            prop_assert_eq!(h.torsion.iter().map(|&x| x as u128).product::<u128>(), order);
        }
    }

    #[test]
    fn meridian_filling_kills_the_group(b in connected_braid(3, 8)) {
        let d = b.closure().orient().unwrap();
        let coeffs = vec!["1/0"; d.num_components()].join(",");
        let p = wirtinger(&d).unwrap().surgery(&parse_surgery(&coeffs).unwrap()).unwrap();
        let eta = eta_sequence(&p, 4, &SearchConfig::default()).unwrap();
        prop_assert_eq!(eta.values, vec![1, 0, 0, 0]);
    }

    #[test]
    fn eta_ignores_presentation_choices(p in small_presentation(), rot in 0usize..6) {
        let cfg = SearchConfig { simplify: false, ..SearchConfig::default() };
        let eta = eta_sequence(&p, 4, &cfg).unwrap();
        // swap the generators, rotate and invert relators
        let swapped: Vec<Vec<i32>> = p
            .relators()
            .iter()
            .map(|r| {
                let k = rot % r.len();
                r[k..].iter().chain(&r[..k]).rev().map(|&l| -(l.signum() * (3 - l.abs()))).collect()
            })
            .collect();
        let q = FpPresentation::with_anonymous_generators(2, swapped).unwrap();
        prop_assert_eq!(&eta_sequence(&q, 4, &cfg).unwrap(), &eta);
        prop_assert_eq!(&eta_sequence(&p, 4, &SearchConfig::default()).unwrap(), &eta);
    }
}
