//! Conjugacy classes of finite-index subgroups.
//!
//! Subgroups of index `d` up to conjugacy correspond to transitive actions
//! on `d` points up to relabelling, which are enumerated as canonical coset
//! tables. `η_d`, the number of classes at index `d`, is also the number of
//! connected `d`-fold coverings of a manifold with that fundamental group.

mod oracle;
mod perm;
mod schreier;
mod search;
mod table;

use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fpgroup::FpPresentation;
pub use oracle::{divisor_sigma, sublattice_oracle};
pub use perm::{derived_subgroup_order, group_order, perm_image_order, Perm};
pub use schreier::reidemeister_schreier;
pub use table::CosetTable;

/// Default branch-node budget for one search.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Limits and switches for the coset-table search.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Hard cap on visited search nodes.
    pub node_budget: u64,
    /// Optional wall-clock cap.
    pub time_limit: Option<Duration>,
    /// Simplify the presentation before counting (used by
    /// [`eta_sequence`]; [`low_index_classes`] searches its input as given).
    pub simplify: bool,
    /// Search top-level branches on the rayon pool.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            time_limit: None,
            simplify: true,
            parallel: true,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(node_budget: u64) -> Self {
        SearchConfig {
            node_budget,
            ..SearchConfig::default()
        }
    }
}

/// One conjugacy class of subgroups, represented by its canonical table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SubgroupClass {
    pub table: CosetTable,
    pub normal: bool,
}

impl SubgroupClass {
    pub fn index(&self) -> usize {
        self.table.index()
    }
}

/// `η_1, η_2, …`; `values[d - 1]` is `η_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EtaSequence {
    pub values: Vec<u64>,
}

impl EtaSequence {
    pub fn get(&self, d: usize) -> Option<u64> {
        d.checked_sub(1).and_then(|i| self.values.get(i)).copied()
    }

    pub fn max_index(&self) -> usize {
        self.values.len()
    }
}

fn all_classes(
    p: &FpPresentation,
    max_index: usize,
    cfg: &SearchConfig,
) -> Result<Vec<SubgroupClass>> {
    if max_index == 0 {
        return Err(Error::domain("index must be at least 1"));
    }
    let tables = search::enumerate(p, max_index, cfg)?;
    Ok(tables
        .into_iter()
        .map(|table| SubgroupClass {
            normal: table.is_normal(),
            table,
        })
        .collect())
}

/// Classes of subgroups of index exactly `d`, in canonical order. Tables
/// refer to the generators of `p` as given.
pub fn low_index_classes(
    p: &FpPresentation,
    d: usize,
    cfg: &SearchConfig,
) -> Result<Vec<SubgroupClass>> {
    Ok(all_classes(p, d, cfg)?
        .into_iter()
        .filter(|c| c.index() == d)
        .collect())
}

/// Classes of every index up to `max_index`.
pub fn classes_up_to(
    p: &FpPresentation,
    max_index: usize,
    cfg: &SearchConfig,
) -> Result<Vec<SubgroupClass>> {
    all_classes(p, max_index, cfg)
}

fn prepared(p: &FpPresentation, cfg: &SearchConfig) -> FpPresentation {
    if cfg.simplify {
        p.simplify()
    } else {
        p.clone()
    }
}

/// `η_1 … η_max_index` from a single search.
pub fn eta_sequence(
    p: &FpPresentation,
    max_index: usize,
    cfg: &SearchConfig,
) -> Result<EtaSequence> {
    if max_index == 0 {
        return Err(Error::domain("index must be at least 1"));
    }
    let q = prepared(p, cfg);
    let tables = search::enumerate(&q, max_index, cfg)?;
    let mut values = vec![0u64; max_index];
    for t in &tables {
        values[t.index() - 1] += 1;
    }
    Ok(EtaSequence { values })
}

/// Longest prefix of `η` obtainable within the budget, computed index by
/// index. The error, if any, describes the first index that ran out.
pub fn eta_prefix(
    p: &FpPresentation,
    max_index: usize,
    cfg: &SearchConfig,
) -> (EtaSequence, Option<Error>) {
    let q = prepared(p, cfg);
    let inner = SearchConfig {
        simplify: false,
        ..cfg.clone()
    };
    let mut values = Vec::new();
    for d in 1..=max_index {
        match eta_sequence(&q, d, &inner) {
            Ok(seq) => values.push(seq.values[d - 1]),
            Err(e) => return (EtaSequence { values }, Some(e)),
        }
    }
    (EtaSequence { values }, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::builtin;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    /// Transitive actions of F2 on two points, enumerated directly.
    fn brute_free_rank2_index2() -> usize {
        let perms = [vec![0usize, 1], vec![1, 0]];
        let mut classes = std::collections::BTreeSet::new();
        for a in &perms {
            for b in &perms {
                if let Ok(t) = CosetTable::from_permutations(&[a.clone(), b.clone()]) {
                    classes.insert(t.canonical());
                }
            }
        }
        classes.len()
    }

    #[test]
    fn free_group_index_two() {
        let f2 = builtin("F2").unwrap();
        let classes = low_index_classes(&f2, 2, &cfg()).unwrap();
        assert_eq!(classes.len(), brute_free_rank2_index2());
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| c.normal));
    }

    #[test]
    fn cyclic_group() {
        let z6 = builtin("Z6").unwrap();
        assert_eq!(low_index_classes(&z6, 3, &cfg()).unwrap().len(), 1);
        let eta = eta_sequence(&z6, 8, &cfg()).unwrap();
        assert_eq!(eta.values, vec![1, 1, 1, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn trefoil_index_six() {
        let t = builtin("trefoil").unwrap();
        let classes = low_index_classes(&t, 6, &cfg()).unwrap();
        assert_eq!(classes.len(), 8);
        // kernels of the maps onto Z/6 and onto S3
        assert_eq!(classes.iter().filter(|c| c.normal).count(), 2);
    }

    #[test]
    fn free_abelian_lattices() {
        let z2 = builtin("Z2").unwrap();
        assert_eq!(
            eta_sequence(&z2, 6, &cfg()).unwrap().values,
            vec![1, 3, 4, 7, 6, 12]
        );
        let z3 = builtin("Z3").unwrap();
        assert_eq!(
            eta_sequence(&z3, 5, &cfg()).unwrap().values,
            vec![1, 7, 13, 35, 31]
        );
    }

    #[test]
    fn binary_tetrahedral() {
        let g = builtin("2T").unwrap();
        let eta = eta_sequence(&g, 8, &cfg()).unwrap();
        assert_eq!(eta.values, vec![1, 0, 1, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn budget_is_a_hard_error() {
        let z3 = builtin("Z3").unwrap();
        let err = eta_sequence(&z3, 5, &SearchConfig::with_budget(50)).unwrap_err();
        assert!(
            matches!(err, Error::BudgetExhausted { index: 5, .. }),
            "{err:?}"
        );
        let (prefix, err) = eta_prefix(&z3, 5, &SearchConfig::with_budget(50));
        assert!(err.is_some());
        assert!(prefix.values.len() < 5);
        assert_eq!(prefix.values, [1, 7, 13, 35, 31][..prefix.values.len()]);
    }

    #[test]
    fn deterministic_between_serial_and_parallel() {
        let t = builtin("L7n1").unwrap();
        let serial = SearchConfig {
            parallel: false,
            ..cfg()
        };
        let a = classes_up_to(&t, 5, &serial).unwrap();
        let b = classes_up_to(&t, 5, &cfg()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_index_rejected() {
        assert!(eta_sequence(&builtin("F2").unwrap(), 0, &cfg()).is_err());
    }
}
