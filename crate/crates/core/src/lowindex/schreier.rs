//! Reidemeister–Schreier rewriting.

use super::table::{column, CosetTable};
use crate::error::Result;
use crate::fpgroup::word::{self, gen_index, Word};
use crate::fpgroup::FpPresentation;

/// Presentation of the point stabilizer of coset 0.
///
/// The transversal is the breadth-first spanning tree of the table. Every
/// non-tree edge `c --g--> c·g` is a Schreier generator, and every relator
/// read from every coset is rewritten in them. The result is not simplified.
pub fn reidemeister_schreier(p: &FpPresentation, t: &CosetTable) -> Result<FpPresentation> {
    t.validate(p)?;
    let n = t.index();
    let gens = t.generators();
    // tree[c * gens + g]: the edge c --g--> c·g belongs to the spanning tree
    let mut tree = vec![false; n * gens];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut order = vec![0usize];
    let mut k = 0;
    while k < order.len() {
        let c = order[k];
        for col in 0..2 * gens {
            let d = t.image_col(c, col);
            if !seen[d] {
                seen[d] = true;
                order.push(d);
                let g = col / 2;
                if col % 2 == 0 {
                    tree[c * gens + g] = true;
                } else {
                    tree[d * gens + g] = true;
                }
            }
        }
        k += 1;
    }
    let mut label = vec![usize::MAX; n * gens];
    let mut count = 0;
    for (e, slot) in label.iter_mut().enumerate() {
        if !tree[e] {
            *slot = count;
            count += 1;
        }
    }
    let rewrite = |start: usize, w: &[i32]| -> Word {
        let mut out = Vec::new();
        let mut c = start;
        for &l in w {
            let g = gen_index(l);
            let d = t.image_col(c, column(l));
            let (tail, positive) = if l > 0 { (c, true) } else { (d, false) };
            let e = tail * gens + g;
            if !tree[e] {
                out.push(word::letter(label[e], positive));
            }
            c = d;
        }
        word::free_reduce(&out)
    };
    let mut relators = Vec::with_capacity(n * p.relators().len());
    for r in p.relators() {
        for c in 0..n {
            let w = word::cyclic_reduce(&rewrite(c, r));
            if !w.is_empty() {
                relators.push(w);
            }
        }
    }
    FpPresentation::with_anonymous_generators(count, relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::builtin;
    use crate::lowindex::{low_index_classes, SearchConfig};

    #[test]
    fn index_one_keeps_abelianization() {
        for name in ["trefoil", "Z3", "2T", "S3"] {
            let p = builtin(name).unwrap();
            let t = low_index_classes(&p, 1, &SearchConfig::default()).unwrap();
            let h = reidemeister_schreier(&p, &t[0].table).unwrap();
            assert_eq!(h.abelianization(), p.abelianization(), "{name}");
        }
    }

    #[test]
    fn nielsen_schreier_rank() {
        let f2 = builtin("F2").unwrap();
        for d in 1..=4 {
            for c in low_index_classes(&f2, d, &SearchConfig::default()).unwrap() {
                let h = reidemeister_schreier(&f2, &c.table).unwrap();
                assert_eq!(h.num_generators(), d + 1);
                assert_eq!(h.abelianization().free_rank, d + 1);
            }
        }
    }

    #[test]
    fn subgroups_of_z2_are_z2() {
        let z2 = builtin("Z2").unwrap();
        for c in low_index_classes(&z2, 2, &SearchConfig::default()).unwrap() {
            let h = reidemeister_schreier(&z2, &c.table).unwrap();
            assert_eq!(h.abelianization().free_rank, 2);
            assert!(h.abelianization().torsion.is_empty());
        }
    }

    #[test]
    fn rejects_table_of_other_group() {
        let z6 = builtin("Z6").unwrap();
        let c = low_index_classes(&builtin("F2").unwrap(), 2, &SearchConfig::default()).unwrap();
        assert!(reidemeister_schreier(&z6, &c[0].table).is_err());
    }
}
