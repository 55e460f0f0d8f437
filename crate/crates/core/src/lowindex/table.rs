use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fpgroup::word::gen_index;
use crate::fpgroup::FpPresentation;

pub(crate) const UNDEF: u32 = u32::MAX;

/// Column of a letter: `2g` for generator `g`, `2g + 1` for its inverse.
#[inline]
pub(crate) fn column(letter: i32) -> usize {
    2 * gen_index(letter) + usize::from(letter < 0)
}

/// Complete coset table: the action of each generator and its inverse on
/// cosets `0..index`, with coset 0 the subgroup itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetTable {
    index: usize,
    generators: usize,
    /// Row-major, `2 * generators` columns.
    entries: Vec<u32>,
}

impl CosetTable {
    pub(crate) fn from_raw(index: usize, generators: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), index * 2 * generators);
        CosetTable {
            index,
            generators,
            entries,
        }
    }

    /// Builds a table from the permutation images of each generator
    /// (`perms[g][coset]`), checking that they are permutations and that the
    /// action is transitive.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self> {
        let index = perms.first().map(Vec::len).unwrap_or(1);
        let generators = perms.len();
        let mut entries = vec![UNDEF; index * 2 * generators];
        for (g, p) in perms.iter().enumerate() {
            if p.len() != index {
                return Err(Error::InvalidCosetTable(
                    "permutations of different degrees".into(),
                ));
            }
            for (x, &y) in p.iter().enumerate() {
                if y >= index || entries[y * 2 * generators + 2 * g + 1] != UNDEF {
                    return Err(Error::InvalidCosetTable(format!(
                        "generator {g} is not a permutation"
                    )));
                }
                entries[x * 2 * generators + 2 * g] = y as u32;
                entries[y * 2 * generators + 2 * g + 1] = x as u32;
            }
        }
        let t = CosetTable {
            index,
            generators,
            entries,
        };
        if !t.is_transitive() {
            return Err(Error::InvalidCosetTable("action is not transitive".into()));
        }
        Ok(t)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Image of `coset` under the column (see [`CosetTable::image_letter`]).
    #[inline]
    pub fn image_col(&self, coset: usize, col: usize) -> usize {
        self.entries[coset * 2 * self.generators + col] as usize
    }

    /// Image of `coset` under a signed letter `±(g + 1)`.
    pub fn image_letter(&self, coset: usize, letter: i32) -> usize {
        self.image_col(coset, column(letter))
    }

    /// Coset reached from `coset` by reading `word` left to right.
    pub fn trace(&self, coset: usize, word: &[i32]) -> usize {
        word.iter().fold(coset, |c, &l| self.image_letter(c, l))
    }

    /// Permutation of cosets induced by generator `g`.
    pub fn permutation(&self, g: usize) -> Vec<usize> {
        (0..self.index).map(|c| self.image_col(c, 2 * g)).collect()
    }

    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.index];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for col in 0..2 * self.generators {
                let d = self.image_col(c, col);
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Checks that the table is a transitive action of the group presented
    /// by `p`.
    pub fn validate(&self, p: &FpPresentation) -> Result<()> {
        if self.generators != p.num_generators() {
            return Err(Error::InvalidCosetTable(format!(
                "table has {} generators, presentation has {}",
                self.generators,
                p.num_generators()
            )));
        }
        if self
            .entries
            .iter()
            .any(|&e| e == UNDEF || e as usize >= self.index)
        {
            return Err(Error::InvalidCosetTable("incomplete table".into()));
        }
        for c in 0..self.index {
            for g in 0..self.generators {
                let d = self.image_col(c, 2 * g);
                if self.image_col(d, 2 * g + 1) != c {
                    return Err(Error::InvalidCosetTable(format!(
                        "inverse columns of generator {g} disagree at coset {c}"
                    )));
                }
            }
        }
        if !self.is_transitive() {
            return Err(Error::InvalidCosetTable("action is not transitive".into()));
        }
        for r in p.relators() {
            if let Some(c) = (0..self.index).find(|&c| self.trace(c, r) != c) {
                return Err(Error::InvalidCosetTable(format!(
                    "relator does not close at coset {c}"
                )));
            }
        }
        Ok(())
    }

    /// The table relabelled by breadth-first standardization from `base`.
    pub fn rebased(&self, base: usize) -> CosetTable {
        let cols = 2 * self.generators;
        let mut map = vec![UNDEF; self.index];
        let mut order = Vec::with_capacity(self.index);
        map[base] = 0;
        order.push(base);
        let mut k = 0;
        while k < order.len() {
            let old = order[k];
            for col in 0..cols {
                let t = self.image_col(old, col);
                if map[t] == UNDEF {
                    map[t] = order.len() as u32;
                    order.push(t);
                }
            }
            k += 1;
        }
        let mut entries = vec![0; self.entries.len()];
        for (new, &old) in order.iter().enumerate() {
            for col in 0..cols {
                entries[new * cols + col] = map[self.image_col(old, col)];
            }
        }
        CosetTable::from_raw(self.index, self.generators, entries)
    }

    /// Least standardized table over all base points: the invariant of the
    /// conjugacy class of the point stabilizer.
    pub fn canonical(&self) -> CosetTable {
        (0..self.index)
            .map(|b| self.rebased(b))
            .min()
            .expect("nonempty table")
    }

    /// True when every base point gives the same standardized table, i.e.
    /// the stabilizer of coset 0 is normal.
    pub fn is_normal(&self) -> bool {
        let here = self.rebased(0);
        (1..self.index).all(|b| self.rebased(b) == here)
    }

    /// Boundary components of the covering: for each peripheral subgroup of
    /// `p`, the orbits of the cosets under its meridian and longitude.
    pub fn cusps(&self, p: &FpPresentation) -> Result<usize> {
        if p.peripheral().is_empty() {
            return Err(Error::MissingPeripheral(0));
        }
        let mut total = 0;
        for per in p.peripheral() {
            let mut uf = crate::diagram::UnionFind::new(self.index);
            for c in 0..self.index {
                uf.union(c, self.trace(c, &per.meridian));
                uf.union(c, self.trace(c, &per.longitude));
            }
            total += uf.classes();
        }
        Ok(total)
    }

    /// Rows with 1-based coset numbers, columns `g1, g1⁻¹, g2, ...`.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let cols = 2 * self.generators;
        (0..self.index)
            .map(|c| (0..cols).map(|col| self.image_col(c, col) + 1).collect())
            .collect()
    }
}

impl Serialize for CosetTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}
