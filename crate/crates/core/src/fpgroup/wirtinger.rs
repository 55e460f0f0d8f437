//! Wirtinger presentations with peripheral systems, and Dehn filling.

use std::collections::BTreeMap;

use super::word::{self, Word};
use super::{FpPresentation, Peripheral, SurgeryCoefficient};
use crate::diagram::{OrientedDiagram, UnionFind};
use crate::error::{Error, Result};

/// Link group of an oriented diagram.
///
/// One generator per over-arc (maximal strand between two under-passes),
/// numbered in traversal order of the components. At a crossing with
/// over-arc `x_k`, incoming under-arc `x_i`, outgoing under-arc `x_j` and
/// sign `ε`, the relator is `x_k^ε x_i x_k^-ε x_j^-1`.
///
/// For each component the meridian is the generator of the arc where its
/// traversal starts, and the longitude reads `x_k^ε` at every under-pass,
/// later crossings to the left, then is corrected by `μ^-w` (`w` the
/// self-writhe) so that it is zero-framed.
pub fn wirtinger(d: &OrientedDiagram) -> Result<FpPresentation> {
    let crossings = d.base().crossings();
    if d.base().unknots() > 0 && crossings.is_empty() {
        // crossingless unknots: free group on their meridians
        let n = d.base().unknots();
        let per = (0..n)
            .map(|i| Peripheral {
                meridian: vec![word::letter(i, true)],
                longitude: Vec::new(),
            })
            .collect();
        return FpPresentation::with_anonymous_generators(n, Vec::new())?.with_peripheral(per);
    }
    if d.base().unknots() > 0 {
        return Err(Error::domain(
            "Wirtinger presentation needs a diagram without crossingless components",
        ));
    }
    let labels: Vec<u32> = d.base().arcs().into_iter().collect();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut uf = UnionFind::new(labels.len());
    for c in crossings {
        uf.union(index[&c[1]], index[&c[3]]);
    }
    // Start each component right after an under-pass so its first arc is a
    // whole arc, then number arcs in traversal order.
    let ncomp = d.num_components();
    let mut starts = Vec::with_capacity(ncomp);
    let mut arc_of: BTreeMap<usize, usize> = BTreeMap::new(); // uf root -> generator
    for ci in 0..ncomp {
        let edges = d.component_edges(ci);
        let start = edges
            .iter()
            .position(|&e| d.edge_ends(e).map(|(tail, _)| tail.1 == 2).unwrap_or(false))
            .unwrap_or(0);
        starts.push(start);
        for k in 0..edges.len() {
            let e = edges[(start + k) % edges.len()];
            let root = uf.find(index[&e]);
            let next = arc_of.len();
            arc_of.entry(root).or_insert(next);
        }
    }
    let mut gen_of = |l: u32| arc_of[&uf.find(index[&l])];
    let mut relators = Vec::with_capacity(crossings.len());
    for (ci, c) in crossings.iter().enumerate() {
        let eps = d.sign(ci) > 0;
        let k = gen_of(c[1]);
        let i = gen_of(c[0]);
        let j = gen_of(c[2]);
        relators.push(word::free_reduce(&[
            word::letter(k, eps),
            word::letter(i, true),
            word::letter(k, !eps),
            word::letter(j, false),
        ]));
    }
    let writhe = d.writhe_matrix();
    let mut peripheral = Vec::with_capacity(ncomp);
    for ci in 0..ncomp {
        let edges = d.component_edges(ci);
        let start = starts[ci];
        let mu = gen_of(edges[start]);
        let mut conj: Word = Vec::new();
        for k in 0..edges.len() {
            let e = edges[(start + k) % edges.len()];
            let (_, (cr, slot)) = d.edge_ends(e).expect("oriented edge");
            if slot == 0 {
                let over = gen_of(crossings[cr][1]);
                conj.insert(0, word::letter(over, d.sign(cr) > 0));
            }
        }
        let w = writhe[ci][ci];
        conj.extend(word::power(&[word::letter(mu, true)], -w));
        peripheral.push(Peripheral {
            meridian: vec![word::letter(mu, true)],
            longitude: word::free_reduce(&conj),
        });
    }
    FpPresentation::with_anonymous_generators(arc_of.len(), relators)?.with_peripheral(peripheral)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(super) fn surgery(
    p: &FpPresentation,
    coeffs: &[Option<SurgeryCoefficient>],
) -> Result<FpPresentation> {
    let mut out = p.clone();
    for (i, c) in coeffs.iter().enumerate() {
        let Some((a, b)) = *c else { continue };
        if gcd(a, b) != 1 {
            return Err(Error::NotLensFilling { p: a, q: b });
        }
        let per = p.peripheral.get(i).ok_or(Error::MissingPeripheral(i))?;
        let rel = word::concat(&[
            &word::power(&per.meridian, a),
            &word::power(&per.longitude, b),
        ]);
        out.add_relator(rel)?;
    }
    Ok(out)
}
