//! Planar-diagram codes of oriented links.
//!
//! A crossing is a 4-tuple of edge labels listed counterclockwise starting
//! from the incoming under-strand, so slot 0 enters under the crossing and
//! slot 2 leaves it. The over-strand occupies slots 1 and 3; a crossing whose
//! over-strand runs from slot 3 to slot 1 is positive (right-handed), one
//! running from slot 1 to slot 3 is negative.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Disjoint-set forest over `0..n`.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// False when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
        ra != rb
    }

    pub(crate) fn classes(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&i| self.find(i) == i)
            .count()
    }
}

/// Unoriented planar-diagram code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PDDiagram {
    crossings: Vec<[u32; 4]>,
    /// Crossingless unknotted components carried alongside the crossings.
    #[serde(default, skip_serializing_if = "is_zero")]
    unknots: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl PDDiagram {
    /// Validates that every label occurs exactly twice.
    pub fn new(crossings: Vec<[u32; 4]>, unknots: usize) -> Result<Self> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for c in &crossings {
            for &l in c {
                *counts.entry(l).or_default() += 1;
            }
        }
        if let Some((l, n)) = counts.iter().find(|(_, &n)| n != 2) {
            return Err(Error::Validation(format!(
                "label {l} appears {n} times, expected exactly 2"
            )));
        }
        Ok(PDDiagram { crossings, unknots })
    }

    /// Parses `[(6,4,1,3),(4,2,5,1),(2,6,3,5)]`. The empty code `[]` is read
    /// as a single unknot; use [`PDDiagram::with_unknots`] to override.
    pub fn parse(text: &str) -> Result<Self> {
        let crossings = parse_tuples(text)?;
        let unknots = usize::from(crossings.is_empty());
        PDDiagram::new(crossings, unknots)
    }

    pub fn with_unknots(mut self, unknots: usize) -> Self {
        self.unknots = unknots;
        self
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn unknots(&self) -> usize {
        self.unknots
    }

    pub fn arcs(&self) -> BTreeSet<u32> {
        self.crossings.iter().flatten().copied().collect()
    }

    /// Number of connected pieces of the 4-valent graph, not counting
    /// crossingless unknots.
    pub fn graph_pieces(&self) -> usize {
        let n = self.crossings.len();
        let mut uf = UnionFind::new(n);
        let mut first_seen: BTreeMap<u32, usize> = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for &l in c {
                match first_seen.get(&l) {
                    Some(&j) => {
                        uf.union(i, j);
                    }
                    None => {
                        first_seen.insert(l, i);
                    }
                }
            }
        }
        uf.classes()
    }

    /// True when the diagram has more than one connected piece, counting
    /// each crossingless unknot as its own piece.
    pub fn is_split(&self) -> bool {
        self.graph_pieces() + self.unknots > 1
    }

    /// Assigns orientations, crossing signs and components.
    pub fn orient(&self) -> Result<OrientedDiagram> {
        OrientedDiagram::new(self.clone())
    }
}

impl fmt::Display for PDDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b},{c},{d})")?;
        }
        write!(f, "]")
    }
}

fn parse_tuples(text: &str) -> Result<Vec<[u32; 4]>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let expect = |pos: &mut usize, b: u8| -> Result<()> {
        skip(pos);
        if bytes.get(*pos) == Some(&b) {
            *pos += 1;
            Ok(())
        } else {
            Err(Error::parse(*pos, format!("expected '{}'", b as char)))
        }
    };
    expect(&mut pos, b'[')?;
    let mut out = Vec::new();
    skip(&mut pos);
    if bytes.get(pos) == Some(&b']') {
        pos += 1;
    } else {
        loop {
            let open = {
                skip(&mut pos);
                pos
            };
            expect(&mut pos, b'(')?;
            let mut labels = Vec::new();
            loop {
                skip(&mut pos);
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(Error::parse(start, "expected a positive integer label"));
                }
                let v: u32 = text[start..pos]
                    .parse()
                    .map_err(|_| Error::parse(start, "label out of range"))?;
                if v == 0 {
                    return Err(Error::parse(start, "labels must be positive"));
                }
                labels.push(v);
                skip(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(Error::parse(pos, "expected ',' or ')'")),
                }
            }
            let tuple: [u32; 4] = labels.try_into().map_err(|v: Vec<u32>| {
                Error::parse(open, format!("crossing has {} labels, expected 4", v.len()))
            })?;
            out.push(tuple);
            skip(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b']') => {
                    pos += 1;
                    break;
                }
                _ => return Err(Error::parse(pos, "expected ',' or ']'")),
            }
        }
    }
    skip(&mut pos);
    if pos != bytes.len() {
        return Err(Error::parse(pos, "trailing input"));
    }
    Ok(out)
}

/// Slot of the strand leaving the crossing after entering at `slot`.
fn exit_slot(slot: usize) -> usize {
    (slot + 2) % 4
}

/// A PD code with orientation, crossing signs and component data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedDiagram {
    base: PDDiagram,
    /// Per crossing: true when the over-strand enters at slot 1.
    over_enters_at_1: Vec<bool>,
    /// Edge label -> (crossing, slot) where the edge ends.
    head: BTreeMap<u32, (usize, usize)>,
    /// Edge label -> (crossing, slot) where the edge starts.
    tail: BTreeMap<u32, (usize, usize)>,
    /// Edge labels of each component in traversal order.
    components: Vec<Vec<u32>>,
    component_of: BTreeMap<u32, usize>,
}

impl OrientedDiagram {
    fn new(base: PDDiagram) -> Result<Self> {
        let n = base.crossings.len();
        let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (ci, c) in base.crossings.iter().enumerate() {
            for (s, &l) in c.iter().enumerate() {
                occ.entry(l).or_default().push((ci, s));
            }
        }
        // dir[c] = Some(true) when the over-strand enters at slot 1.
        let mut dir: Vec<Option<bool>> = vec![None; n];
        // Is slot `s` of crossing `c` incoming, given the current knowledge?
        let incoming = |dir: &[Option<bool>], (c, s): (usize, usize)| -> Option<bool> {
            match s {
                0 => Some(true),
                2 => Some(false),
                1 => dir[c],
                _ => dir[c].map(|f| !f),
            }
        };
        loop {
            let mut changed = true;
            while changed {
                changed = false;
                for (&l, o) in &occ {
                    let (p, q) = (o[0], o[1]);
                    match (incoming(&dir, p), incoming(&dir, q)) {
                        (Some(a), Some(b)) => {
                            if a == b {
                                return Err(Error::NotALinkDiagram(format!(
                                    "edge {l} is {} at both ends",
                                    if a { "incoming" } else { "outgoing" }
                                )));
                            }
                        }
                        (Some(a), None) => {
                            // q must have the opposite role
                            let want_in = !a;
                            dir[q.0] = Some(if q.1 == 1 { want_in } else { !want_in });
                            changed = true;
                        }
                        (None, Some(b)) => {
                            let want_in = !b;
                            dir[p.0] = Some(if p.1 == 1 { want_in } else { !want_in });
                            changed = true;
                        }
                        (None, None) => {}
                    }
                }
            }
            // Components that only pass over need a seed: run the over-strand
            // from the lower label to the next one, with wrap-around.
            match dir.iter().position(Option::is_none) {
                None => break,
                Some(c) => {
                    let [_, b, _, d] = base.crossings[c];
                    let three_to_one = b == d + 1 || d > b + 1;
                    dir[c] = Some(!three_to_one);
                }
            }
        }
        let over_enters_at_1: Vec<bool> = dir.into_iter().map(Option::unwrap).collect();
        let mut head = BTreeMap::new();
        let mut tail = BTreeMap::new();
        for (ci, c) in base.crossings.iter().enumerate() {
            for (s, &l) in c.iter().enumerate() {
                let is_in = match s {
                    0 => true,
                    2 => false,
                    1 => over_enters_at_1[ci],
                    _ => !over_enters_at_1[ci],
                };
                if is_in {
                    head.insert(l, (ci, s));
                } else {
                    tail.insert(l, (ci, s));
                }
            }
        }
        let mut components = Vec::new();
        let mut component_of = BTreeMap::new();
        for &start in occ.keys() {
            if component_of.contains_key(&start) {
                continue;
            }
            let idx = components.len();
            let mut edges = Vec::new();
            let mut e = start;
            loop {
                if component_of.insert(e, idx).is_some() {
                    return Err(Error::NotALinkDiagram(format!(
                        "strand through edge {e} does not close up"
                    )));
                }
                edges.push(e);
                let (c, s) = head[&e];
                e = base.crossings[c][exit_slot(s)];
                if e == start {
                    break;
                }
            }
            components.push(edges);
        }
        Ok(OrientedDiagram {
            base,
            over_enters_at_1,
            head,
            tail,
            components,
            component_of,
        })
    }

    pub fn base(&self) -> &PDDiagram {
        &self.base
    }

    /// Components with at least one crossing, followed by the crossingless
    /// unknots.
    pub fn num_components(&self) -> usize {
        self.components.len() + self.base.unknots
    }

    /// Edge labels of component `i` in traversal order (empty for unknots).
    pub fn component_edges(&self, i: usize) -> &[u32] {
        self.components.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn component_of(&self, edge: u32) -> Option<usize> {
        self.component_of.get(&edge).copied()
    }

    /// Crossing sign, +1 for right-handed.
    pub fn sign(&self, crossing: usize) -> i64 {
        if self.over_enters_at_1[crossing] {
            -1
        } else {
            1
        }
    }

    pub fn signs(&self) -> Vec<i64> {
        (0..self.base.crossings.len())
            .map(|c| self.sign(c))
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.signs().iter().sum()
    }

    /// Component of the under-strand and over-strand at a crossing.
    pub fn crossing_components(&self, crossing: usize) -> (usize, usize) {
        let [a, b, _, _] = self.base.crossings[crossing];
        (self.component_of[&a], self.component_of[&b])
    }

    /// Edge entering a crossing along the over-strand.
    pub fn over_incoming(&self, crossing: usize) -> u32 {
        let c = self.base.crossings[crossing];
        if self.over_enters_at_1[crossing] {
            c[1]
        } else {
            c[3]
        }
    }

    /// Where an edge ends and starts: `((crossing, slot), (crossing, slot))`.
    pub fn edge_ends(&self, edge: u32) -> Option<((usize, usize), (usize, usize))> {
        Some((*self.tail.get(&edge)?, *self.head.get(&edge)?))
    }

    /// Writhe matrix: diagonal entries are self-writhes, off-diagonal entries
    /// sum the signs of crossings between two components.
    pub fn writhe_matrix(&self) -> Vec<Vec<i64>> {
        let k = self.num_components();
        let mut w = vec![vec![0; k]; k];
        for c in 0..self.base.crossings.len() {
            let (u, o) = self.crossing_components(c);
            let s = self.sign(c);
            if u == o {
                w[u][u] += s;
            } else {
                w[u][o] += s;
                w[o][u] += s;
            }
        }
        w
    }

    pub fn self_writhe(&self, component: usize) -> i64 {
        self.writhe_matrix()[component][component]
    }

    /// Linking numbers between distinct components; zero on the diagonal.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let mut w = self.writhe_matrix();
        for (i, row) in w.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                debug_assert!(i == j || *v % 2 == 0);
                *v = if i == j { 0 } else { *v / 2 };
            }
        }
        w
    }

    pub fn linking_number(&self, i: usize, j: usize) -> i64 {
        self.linking_matrix()[i][j]
    }

    /// The same link with one component's orientation reversed.
    pub fn reversed(&self, component: usize) -> Result<OrientedDiagram> {
        let mut crossings = self.base.crossings.clone();
        let mut forward = self.over_enters_at_1.clone();
        for (ci, c) in crossings.iter_mut().enumerate() {
            let (u, o) = self.crossing_components(ci);
            let mut flip = false;
            if u == component {
                c.rotate_left(2);
                flip = !flip;
            }
            if o == component {
                flip = !flip;
            }
            if flip {
                forward[ci] = !forward[ci];
            }
        }
        let base = PDDiagram {
            crossings,
            unknots: self.base.unknots,
        };
        // Re-derive with the chosen over-directions pinned.
        let mut out = OrientedDiagram::new(base)?;
        if out.over_enters_at_1 != forward {
            out = OrientedDiagram::with_directions(out.base.clone(), forward)?;
        }
        Ok(out)
    }

    fn with_directions(base: PDDiagram, over_enters_at_1: Vec<bool>) -> Result<Self> {
        let mut head = BTreeMap::new();
        let mut tail = BTreeMap::new();
        for (ci, c) in base.crossings.iter().enumerate() {
            for (s, &l) in c.iter().enumerate() {
                let is_in = match s {
                    0 => true,
                    2 => false,
                    1 => over_enters_at_1[ci],
                    _ => !over_enters_at_1[ci],
                };
                let slot = if is_in { &mut head } else { &mut tail };
                if slot.insert(l, (ci, s)).is_some() {
                    return Err(Error::NotALinkDiagram(format!(
                        "edge {l} has inconsistent orientation"
                    )));
                }
            }
        }
        let mut components = Vec::new();
        let mut component_of = BTreeMap::new();
        for &start in head.keys() {
            if component_of.contains_key(&start) {
                continue;
            }
            let idx = components.len();
            let mut edges = Vec::new();
            let mut e = start;
            loop {
                component_of.insert(e, idx);
                edges.push(e);
                let (c, s) = head[&e];
                e = base.crossings[c][exit_slot(s)];
                if e == start {
                    break;
                }
            }
            components.push(edges);
        }
        Ok(OrientedDiagram {
            base,
            over_enters_at_1,
            head,
            tail,
            components,
            component_of,
        })
    }

    /// Counts Seifert circles by smoothing every crossing along the
    /// orientation.
    pub fn seifert_circles(&self) -> SeifertCircles {
        let crossings = &self.base.crossings;
        let labels: Vec<u32> = self.head.keys().copied().collect();
        let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut uf = UnionFind::new(labels.len());
        for (ci, c) in crossings.iter().enumerate() {
            let (over_in, over_out) = if self.over_enters_at_1[ci] {
                (c[1], c[3])
            } else {
                (c[3], c[1])
            };
            uf.union(index[&c[0]], index[&over_out]);
            uf.union(index[&over_in], index[&c[2]]);
        }
        // Group circles and crossings per connected piece of the diagram.
        let n = crossings.len();
        let mut pieces = UnionFind::new(n);
        for (i, c) in crossings.iter().enumerate() {
            for &l in c {
                let (a, _) = self.head[&l];
                pieces.union(i, a);
            }
        }
        let mut per_piece: BTreeMap<usize, (usize, BTreeSet<usize>)> = BTreeMap::new();
        for (ci, c) in crossings.iter().enumerate() {
            let root = pieces.find(ci);
            let entry = per_piece.entry(root).or_default();
            entry.0 += 1;
            for &l in c {
                entry.1.insert(uf.find(index[&l]));
            }
        }
        let mut pieces_out: Vec<PieceCircles> = per_piece
            .into_values()
            .map(|(c, circ)| PieceCircles {
                crossings: c,
                circles: circ.len(),
                betti: c + 1 - circ.len(),
            })
            .collect();
        for _ in 0..self.base.unknots {
            pieces_out.push(PieceCircles {
                crossings: 0,
                circles: 1,
                betti: 0,
            });
        }
        let circles = pieces_out.iter().map(|p| p.circles).sum();
        let betti = pieces_out.iter().map(|p| p.betti).sum();
        SeifertCircles {
            circles,
            betti,
            split: pieces_out.len() > 1,
            pieces: pieces_out,
        }
    }
}

/// Seifert circle count `s` and first Betti number `r = c - s + 1` of the
/// Seifert surface, per connected piece and in total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertCircles {
    pub circles: usize,
    pub betti: usize,
    pub split: bool,
    pub pieces: Vec<PieceCircles>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceCircles {
    pub crossings: usize,
    pub circles: usize,
    pub betti: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "[(6,4,1,3),(4,2,5,1),(2,6,3,5)]";

    #[test]
    fn parses_trefoil() {
        let d = PDDiagram::parse(TREFOIL).unwrap();
        assert_eq!(d.num_crossings(), 3);
        assert_eq!(d.arcs().len(), 6);
        assert_eq!(d.to_string(), TREFOIL);
        assert!(!d.is_split());
    }

    #[test]
    fn empty_code_is_one_unknot() {
        let d = PDDiagram::parse("[ ]").unwrap();
        assert_eq!(d.num_crossings(), 0);
        assert_eq!(d.unknots(), 1);
        let o = d.orient().unwrap();
        assert_eq!(o.num_components(), 1);
        assert_eq!(o.seifert_circles().betti, 0);
        assert!(d.with_unknots(2).is_split());
    }

    #[test]
    fn label_multiplicity_is_validated() {
        let err = PDDiagram::parse("[(1,2,3,4)]").unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err:?}");
    }

    #[test]
    fn arity_is_a_parse_error() {
        let err = PDDiagram::parse("[(1,2,3)]").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 1, .. }), "{err:?}");
        assert!(PDDiagram::parse("[(1,2,3,4,5)]").unwrap_err().is_parse());
        assert!(PDDiagram::parse("[(1,2,2,1)").unwrap_err().is_parse());
    }

    #[test]
    fn trefoil_orientation() {
        let o = PDDiagram::parse(TREFOIL).unwrap().orient().unwrap();
        assert_eq!(o.num_components(), 1);
        let signs = o.signs();
        assert!(signs.iter().all(|&s| s == signs[0]));
        assert_eq!(o.writhe().abs(), 3);
        let sc = o.seifert_circles();
        assert_eq!((sc.circles, sc.betti), (2, 2));
    }

    #[test]
    fn inconsistent_orientation_is_rejected() {
        // edge 1 enters under at both of its ends
        let err = PDDiagram::parse("[(1,2,3,4),(1,4,3,2)]")
            .unwrap()
            .orient()
            .unwrap_err();
        assert!(matches!(err, Error::NotALinkDiagram(_)), "{err:?}");
    }

    #[test]
    fn json_schema() {
        let d = PDDiagram::parse(TREFOIL).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"crossings":[[6,4,1,3],[4,2,5,1],[2,6,3,5]]}"#);
        let back: PDDiagram = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
    }
}
