//! Plumbed 3-manifolds over trees of disk bundles.

use serde::{Deserialize, Serialize};

use crate::diagram::UnionFind;
use crate::error::{Error, Result};
use crate::fpgroup::word::{self, Word};
use crate::fpgroup::FpPresentation;

/// Weighted graph: one Euler number per vertex, undirected edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlumbingGraph {
    pub vertices: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
}

/// Names accepted by [`dynkin_graph`].
pub const DYNKIN_NAMES: [&str; 4] = ["D4t", "E6t", "E7t", "E8t"];

impl PlumbingGraph {
    pub fn new(vertices: Vec<i64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n || a == b) {
            return Err(Error::domain(format!(
                "bad edge ({a},{b}) for {n} vertices"
            )));
        }
        Ok(PlumbingGraph { vertices, edges })
    }

    /// Star with all Euler numbers `euler`: a centre (vertex 0) and legs
    /// of the given lengths, numbered leg by leg outward.
    pub fn star(legs: &[usize], euler: i64) -> Self {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        PlumbingGraph {
            vertices: vec![euler; next],
            edges,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_tree(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        let mut uf = UnionFind::new(n);
        self.edges.iter().all(|&(a, b)| uf.union(a, b))
    }

    /// Euler numbers on the diagonal, 1 for each edge.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for (v, &e) in self.vertices.iter().enumerate() {
            m[v][v] = e;
        }
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            m[b][a] += 1;
        }
        m
    }
}

/// Affine Dynkin tree with all Euler numbers −2.
pub fn dynkin_graph(name: &str) -> Result<PlumbingGraph> {
    let legs: &[usize] = match name {
        "D4t" => &[1, 1, 1, 1],
        "E6t" => &[2, 2, 2],
        "E7t" => &[1, 3, 3],
        "E8t" => &[1, 2, 5],
        _ => {
            return Err(Error::domain(format!(
                "unknown Dynkin graph {name:?} (expected one of {})",
                DYNKIN_NAMES.join(", ")
            )))
        }
    };
    Ok(PlumbingGraph::star(legs, -2))
}

/// Fundamental group of the boundary of the plumbing: a generator per
/// vertex, commuting along edges, and `x_v^{e_v}` times the neighbour
/// generators (in vertex order) trivial at every vertex.
pub fn plumbing_pi1(g: &PlumbingGraph) -> Result<FpPresentation> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let x = |v: usize| vec![word::letter(v, true)];
    let mut relators: Vec<Word> = g
        .edges
        .iter()
        .map(|&(a, b)| word::commutator(&x(a), &x(b)))
        .collect();
    for (v, &e) in g.vertices.iter().enumerate() {
        let mut r = word::power(&x(v), e);
        r.extend(g.neighbours(v).into_iter().map(|w| word::letter(w, true)));
        relators.push(word::free_reduce(&r));
    }
    FpPresentation::with_anonymous_generators(g.num_vertices(), relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::smith_invariants;

    #[test]
    fn shapes() {
        let d4 = dynkin_graph("D4t").unwrap();
        assert_eq!((d4.num_vertices(), d4.edges.len(), d4.degree(0)), (5, 4, 4));
        let e6 = dynkin_graph("E6t").unwrap();
        assert_eq!((e6.num_vertices(), e6.degree(0)), (7, 3));
        assert_eq!(dynkin_graph("E7t").unwrap().num_vertices(), 8);
        let e8 = dynkin_graph("E8t").unwrap();
        assert_eq!(e8.num_vertices(), 9);
        assert!(e8.vertices.iter().all(|&e| e == -2));
        assert!(dynkin_graph("A2").is_err());
    }

    #[test]
    fn abelianization_is_intersection_form() {
        for name in DYNKIN_NAMES {
            let g = dynkin_graph(name).unwrap();
            let p = plumbing_pi1(&g).unwrap();
            let m = g.intersection_matrix();
            assert_eq!(
                p.abelianization(),
                smith_invariants(&m, g.num_vertices()),
                "{name}"
            );
            assert!(p.abelianization().free_rank >= 1, "{name}");
        }
    }

    #[test]
    fn non_tree_rejected() {
        let cycle = PlumbingGraph::new(vec![-2; 3], vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(plumbing_pi1(&cycle).unwrap_err(), Error::NotATree);
        let forest = PlumbingGraph::new(vec![-2; 3], vec![(0, 1)]).unwrap();
        assert!(plumbing_pi1(&forest).is_err());
        assert!(PlumbingGraph::new(vec![-2; 2], vec![(0, 2)]).is_err());
    }

    #[test]
    fn json_shape() {
        let g = dynkin_graph("D4t").unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(
            s,
            r#"{"vertices":[-2,-2,-2,-2,-2],"edges":[[0,1],[0,2],[0,3],[0,4]]}"#
        );
        let back: PlumbingGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
