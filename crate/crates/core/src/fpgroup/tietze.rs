//! Tietze simplification.
//!
//! Relators are freely and cyclically reduced, trivial and duplicate
//! relators (up to rotation and inversion) are dropped, and a generator that
//! occurs exactly once in some relator is solved for and substituted away.
//! Each round eliminates the generator whose substitution leaves the
//! shortest total relator length. When nothing can be eliminated, a relator
//! containing more than half of another (as cyclic words) has that part
//! replaced by the shorter remainder, which often frees a generator for the
//! next elimination. Peripheral words are rewritten alongside.

use std::collections::BTreeSet;

use super::word::{self, gen_index, Word};
use super::{FpPresentation, Peripheral};

/// Longest relator an elimination is allowed to produce, unless the
/// presentation already contains a longer one.
pub const ELIMINATION_LENGTH_CAP: usize = 64;

fn tidy(relators: &[Word]) -> Vec<Word> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in relators {
        let r = word::cyclic_reduce(r);
        if r.is_empty() {
            continue;
        }
        if seen.insert(word::relator_key(&r)) {
            out.push(r);
        }
    }
    out
}

/// Replaces generator `g` by `def` in `w`.
fn substitute(w: &[i32], g: usize, def: &[i32]) -> Word {
    let inv = word::inverse(def);
    let mut out = Vec::with_capacity(w.len());
    for &l in w {
        if gen_index(l) == g {
            out.extend_from_slice(if l > 0 { def } else { &inv });
        } else {
            out.push(l);
        }
    }
    word::free_reduce(&out)
}

/// Renumbers letters after deleting generator `g`.
fn drop_generator(w: &[i32], g: usize) -> Word {
    w.iter()
        .map(|&l| {
            let i = gen_index(l);
            debug_assert_ne!(i, g);
            let j = if i > g { i - 1 } else { i };
            word::letter(j, l > 0)
        })
        .collect()
}

/// Expresses `g` through the other generators using relator `r`, in which
/// `g` occurs exactly once.
fn solve_for(r: &[i32], g: usize) -> Word {
    let at = r.iter().position(|&l| gen_index(l) == g).unwrap();
    // rotate so that g^ε is first: g^ε w = 1
    let mut rest: Word = r[at + 1..].to_vec();
    rest.extend_from_slice(&r[..at]);
    if r[at] > 0 {
        word::inverse(&rest)
    } else {
        word::free_reduce(&rest)
    }
}

/// Length of the common prefix of two words.
fn common_prefix(a: &[i32], b: &[i32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Best single substitution of a long piece of one relator into another.
/// Returns the index of the relator to replace and its shorter form.
fn best_shortening(rels: &[Word]) -> Option<(usize, Word)> {
    let mut best: Option<(usize, usize, Word)> = None; // (saving, index, word)
    for (ri, r) in rels.iter().enumerate() {
        let m = r.len();
        for (si, s) in rels.iter().enumerate() {
            let n = s.len();
            if si == ri || n > 2 * m {
                continue;
            }
            for w in [s.clone(), word::inverse(s)] {
                for ws in 0..n {
                    let w: Word = w[ws..].iter().chain(&w[..ws]).copied().collect();
                    for rs in 0..m {
                        let rot: Word = r[rs..].iter().chain(&r[..rs]).copied().collect();
                        let k = common_prefix(&rot, &w);
                        if 2 * k <= n {
                            continue;
                        }
                        // rot = u x with w = u v and u = v⁻¹ in the group
                        let mut t = word::inverse(&w[k..]);
                        t.extend_from_slice(&rot[k..]);
                        let t = word::cyclic_reduce(&t);
                        if t.len() < m && best.as_ref().is_none_or(|b| m - t.len() > b.0) {
                            best = Some((m - t.len(), ri, t));
                        }
                    }
                }
            }
        }
    }
    best.map(|(_, i, t)| (i, t))
}

pub(super) fn simplify(p: &FpPresentation) -> FpPresentation {
    let mut gens = p.generators.clone();
    let mut rels = tidy(&p.relators);
    let mut periph: Vec<Peripheral> = p
        .peripheral
        .iter()
        .map(|x| Peripheral {
            meridian: word::free_reduce(&x.meridian),
            longitude: word::free_reduce(&x.longitude),
        })
        .collect();
    loop {
        let current_max = rels.iter().map(Vec::len).max().unwrap_or(0);
        let cap = ELIMINATION_LENGTH_CAP.max(current_max);
        let mut best: Option<(usize, usize, usize, Vec<Word>)> = None;
        for (ri, r) in rels.iter().enumerate() {
            let mut counts = vec![0usize; gens.len()];
            for &l in r {
                counts[gen_index(l)] += 1;
            }
            for g in (0..gens.len()).filter(|&g| counts[g] == 1) {
                let def = solve_for(r, g);
                let mut new_rels = Vec::with_capacity(rels.len());
                let mut ok = true;
                for (rj, s) in rels.iter().enumerate() {
                    if rj == ri {
                        continue;
                    }
                    let t = word::cyclic_reduce(&substitute(s, g, &def));
                    if t.len() > cap {
                        ok = false;
                        break;
                    }
                    new_rels.push(t);
                }
                if !ok {
                    continue;
                }
                let total: usize = new_rels.iter().map(Vec::len).sum();
                if best.as_ref().is_none_or(|b| total < b.0) {
                    best = Some((total, ri, g, new_rels));
                }
            }
        }
        let Some((_, ri, g, new_rels)) = best else {
            match best_shortening(&rels) {
                Some((i, t)) => {
                    rels[i] = t;
                    rels = tidy(&rels);
                    continue;
                }
                None => break,
            }
        };
        let def = solve_for(&rels[ri], g);
        for x in periph.iter_mut() {
            x.meridian = drop_generator(&substitute(&x.meridian, g, &def), g);
            x.longitude = drop_generator(&substitute(&x.longitude, g, &def), g);
        }
        rels = tidy(
            &new_rels
                .iter()
                .map(|r| drop_generator(r, g))
                .collect::<Vec<_>>(),
        );
        gens.remove(g);
    }
    FpPresentation {
        generators: gens,
        relators: rels,
        peripheral: periph,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_relator_removed() {
        let p: FpPresentation = "<a,b | aA, abAB>".parse().unwrap();
        let s = p.simplify();
        assert_eq!(s.relators(), &[vec![1, 2, -1, -2]]);
    }

    #[test]
    fn eliminates_defined_generator() {
        // c = ab, c^3 = 1  ->  (ab)^3 = 1
        let p: FpPresentation = "<a,b,c | c=ab, c^3>".parse().unwrap();
        let s = p.simplify();
        assert_eq!(s.num_generators(), 2);
        assert_eq!(s.relators().len(), 1);
        assert!(s.relators()[0].len() <= 6);
        assert_eq!(s.abelianization(), p.abelianization());
    }

    #[test]
    fn shortening_frees_a_generator() {
        // c^5 b = 1 contains most of c^6 a^-2 = 1
        let p: FpPresentation = "<a,b,c | c^6 a^-2, a^-2 c^5 b a^2 b^-1, a^-3 c^5 b^2>"
            .parse()
            .unwrap();
        let s = p.simplify();
        assert!(s.num_generators() < 3, "{s}");
        assert_eq!(s.abelianization(), p.abelianization());
    }

    #[test]
    fn idempotent() {
        let p: FpPresentation = "<a,b,c,d | c=ab, d=bc, (a,d), c^2 d^-3>".parse().unwrap();
        let s = p.simplify();
        assert_eq!(s.simplify(), s);
    }

    #[test]
    fn duplicate_relators_collapse() {
        let p: FpPresentation = "<a,b | abAB, baBA, BAba>".parse().unwrap();
        assert_eq!(p.simplify().relators().len(), 1);
    }
}
