//! One line per acceptance criterion. Criteria whose published claim does not
//! hold print FAIL together with what was verified instead; the process only
//! exits non-zero when a result departs from what is recorded here.

use std::time::{Duration, Instant};

use knotcover::lowindex::reidemeister_schreier;
use knotcover::{
    alexander_poly, diagram_alexander_poly, dynkin_graph, eta_sequence, low_index_classes,
    milnor_torsion, parse_surgery, plumbing_pi1, skein_defect, sublattice_oracle, wirtinger,
    BraidWord, EtaSequence, FpPresentation, HalfLaurent, SearchConfig,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn braid(w: &str) -> BraidWord {
    BraidWord::parse(w).unwrap()
}

fn poly(s: &str) -> HalfLaurent {
    // terms as (half exponent, coefficient)
    let terms: Vec<(i64, i64)> = s
        .split(',')
        .map(|t| {
            let (h, c) = t.trim().split_once(':').unwrap();
            (h.parse().unwrap(), c.parse().unwrap())
        })
        .collect();
    HalfLaurent::from_terms(terms)
}

fn link_group(word: &str) -> FpPresentation {
    wirtinger(&braid(word).closure().orient().unwrap()).unwrap()
}

fn surgered(word: &str, coeffs: &str) -> FpPresentation {
    link_group(word)
        .surgery(&parse_surgery(coeffs).unwrap())
        .unwrap()
}

fn eta(p: &FpPresentation, d: usize) -> Vec<u64> {
    let EtaSequence { values } = eta_sequence(p, d, &SearchConfig::default()).unwrap();
    values
}

fn trefoil_calibration() -> Outcome {
    let got = alexander_poly(&braid("AAA"));
    ok(got == poly("2:1, 0:-1, -2:1"), format!("AAA -> {got}"))
}

fn table_rows() -> Outcome {
    let rows = [
        ("(ab)^3b", "5:1, 3:-1, -3:1, -5:-1"),
        ("ABCDCbaCdEdCBCDCeb", "1:3, -1:-3"),
        ("ABCCbaCCBCCb", "3:1, 1:-3, -1:3, -3:-1"),
    ];
    let mut notes = Vec::new();
    let mut pass = true;
    for (w, want) in rows {
        let got = alexander_poly(&braid(w));
        pass &= got.equal_up_to_sign(&poly(want));
        notes.push(format!("{w} -> {got}"));
    }
    ok(pass, notes.join("; "))
}

fn kirby_equality() -> Outcome {
    let kirby = alexander_poly(&braid("aBabAb"));
    let six = alexander_poly(&braid("(ab)^3"));
    // What does hold: the braid closure has a different polynomial, and
    // reversing its middle component recovers the 6^3_3 polynomial exactly.
    assert_eq!(kirby, poly("2:-1, 0:2, -2:-1"));
    assert_eq!(six, poly("4:1, 2:-1, -2:-1, -4:1"));
    let d = braid("aBabAb").closure().orient().unwrap();
    let reversed = diagram_alexander_poly(&d.reversed(1).unwrap()).unwrap();
    assert_eq!(reversed, six);
    ok(
        kirby == six,
        format!(
            "closure of aBabAb gives {kirby}, (ab)^3 gives {six}; \
             with component 1 reversed the Kirby link gives {reversed}"
        ),
    )
}

fn random_braid(rng: &mut StdRng, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=4);
    let len = rng.gen_range(1..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen() {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn skein_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5ce1);
    let mut bad = 0;
    for _ in 0..500 {
        let b = random_braid(&mut rng, 10);
        let pos = rng.gen_range(0..b.len());
        if !skein_defect(&b, pos).unwrap().is_zero() {
            bad += 1;
        }
    }
    let mut moved = 0;
    for _ in 0..200 {
        let b = random_braid(&mut rng, 10);
        let delta = alexander_poly(&b);
        let k = rng.gen_range(1..b.strands() as i32);
        let conj = b.markov_conjugate(k).unwrap();
        let stab = b.markov_stabilize(rng.gen());
        if !delta.equal_up_to_units(&alexander_poly(&conj))
            || !delta.equal_up_to_units(&alexander_poly(&stab))
        {
            moved += 1;
        }
    }
    ok(
        bad == 0 && moved == 0,
        format!("skein failures {bad}/500, Markov failures {moved}/200"),
    )
}

fn trefoil_coverings() -> Outcome {
    let p = link_group("AAA");
    let counts = eta(&p, 6);
    let classes = low_index_classes(&p, 6, &SearchConfig::default()).unwrap();
    let regular: Vec<(usize, usize)> = classes
        .iter()
        .filter(|c| c.normal)
        .map(|c| {
            let h = reidemeister_schreier(&p, &c.table)
                .unwrap()
                .abelianization();
            (h.free_rank, c.table.cusps(&p).unwrap())
        })
        .collect();
    let three_cusped = regular.iter().filter(|&&x| x == (3, 3)).count();
    ok(
        counts[5] == 8 && three_cusped == 1,
        format!(
            "eta = {counts:?}; normal classes (H1 rank, cusps) = {regular:?}, \
             {three_cusped} with rank 3 and three cusps"
        ),
    )
}

fn six_three_three() -> Outcome {
    let got = eta(&link_group("(ab)^3"), 6);
    let stretch = if got[5] == 794 { "reached" } else { "missed" };
    ok(
        got[..5] == [1, 7, 16, 60, 122],
        format!("eta_1..6 = {got:?}, stretch value 794 {stretch}"),
    )
}

fn singular_fibers() -> Outcome {
    let rows = [
        ("AAA", "0", vec![1, 1, 2, 2, 1, 5, 3, 2, 4, 1]),
        ("(ab)^3", "-2,-2,-2", vec![1, 1, 4, 2, 1, 6, 3, 2, 10, 1]),
        ("aaaa", "-2,-2", vec![1, 3, 1, 7, 3, 5, 1, 16, 2, 11]),
    ];
    let mut pass = true;
    let mut notes = Vec::new();
    for (w, c, want) in rows {
        let got = eta(&surgered(w, c), 10);
        pass &= got == want;
        notes.push(format!("{w} ({c}) -> {got:?}"));
    }
    ok(pass, notes.join("; "))
}

fn plumbing_cross_check() -> Outcome {
    let e8 = eta(&plumbing_pi1(&dynkin_graph("E8t").unwrap()).unwrap(), 10);
    let trefoil0 = eta(&surgered("AAA", "0"), 10);
    let d4 = eta(&plumbing_pi1(&dynkin_graph("D4t").unwrap()).unwrap(), 10);
    ok(
        e8 == trefoil0 && d4 == [1, 7, 5, 23, 7, 39, 9, 65, 18, 61],
        format!("E8t {e8:?}, trefoil 0-surgery {trefoil0:?}, D4t {d4:?}"),
    )
}

fn lattices() -> Outcome {
    let z2 = eta(&knotcover::builtin("Z2").unwrap(), 8);
    let sigma: Vec<u64> = (1..=8).map(|d| sublattice_oracle(2, d).unwrap()).collect();
    let z3 = eta(&knotcover::builtin("Z3").unwrap(), 5);
    let br0 = eta(&surgered("(aB)^3", "0,0,0"), 5);
    ok(
        z2 == sigma && z3 == [1, 7, 13, 35, 31] && br0 == z3,
        format!("Z2 {z2:?}, Z3 {z3:?}, BR0 {br0:?}"),
    )
}

fn homology_sphere() -> Outcome {
    let p = surgered("aBabAb", "4,1,2");
    let h = p.abelianization();
    let got = eta(&p, 5);
    ok(
        h.free_rank == 0 && h.torsion.is_empty() && got == [1, 0, 0, 0, 1],
        format!("H1 = {h}, eta_1..5 = {got:?}"),
    )
}

fn torsion() -> Outcome {
    let t = milnor_torsion(&alexander_poly(&braid("AAA"))).unwrap();
    ok(
        t.numerator == poly("2:1, 0:-1, -2:1") && t.denominator == poly("2:1, 0:-2, -2:1"),
        format!("{t}"),
    )
}

/// Number, check, time limit, and whether the claim is expected to hold.
type Criterion = (u32, fn() -> Outcome, Duration, bool);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, trefoil_calibration, Duration::from_millis(1), true),
        (2, table_rows, Duration::from_secs(1), true),
        (3, kirby_equality, Duration::from_secs(1), false),
        (4, skein_suite, Duration::from_secs(60), true),
        (5, trefoil_coverings, Duration::from_secs(30), true),
        (6, six_three_three, Duration::from_secs(300), true),
        (7, singular_fibers, Duration::from_secs(600), true),
        (8, plumbing_cross_check, Duration::from_secs(600), true),
        (9, lattices, Duration::from_secs(300), true),
        (10, homology_sphere, Duration::from_secs(300), true),
        (11, torsion, Duration::from_millis(1), true),
    ];
    let optimized = !cfg!(debug_assertions);
    let mut surprises = Vec::new();
    for (n, check, limit, expected) in criteria {
        let start = Instant::now();
        let out = check();
        let took = start.elapsed();
        // time limits only bind optimized builds
        let in_time = took <= limit || !optimized;
        let pass = out.pass && in_time;
        let verdict = if pass { "PASS" } else { "FAIL" };
        let timing = if took <= limit {
            format!("{took:.2?}")
        } else {
            format!("{took:.2?}, over {limit:?}")
        };
        println!("criterion {n}: {verdict} [{timing}] {}", out.detail);
        if out.pass != expected || (optimized && !in_time) {
            surprises.push(n);
        }
    }
    if !surprises.is_empty() {
        eprintln!("unexpected outcome for criteria {surprises:?}");
        std::process::exit(1);
    }
}
