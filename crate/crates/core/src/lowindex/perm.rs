//! Permutation groups: orders via a Schreier–Sims stabilizer chain.

use std::collections::BTreeMap;

use super::table::CosetTable;

/// Permutation of `0..n` acting on the right: `x^(gh) = (x^g)^h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Panics unless `images` is a permutation of `0..images.len()`.
    pub fn from_images(images: &[usize]) -> Self {
        let mut seen = vec![false; images.len()];
        for &y in images {
            assert!(y < images.len() && !seen[y], "not a permutation");
            seen[y] = true;
        }
        Perm(images.iter().map(|&y| y as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&y| other.0[y as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Perm(inv)
    }

    fn first_moved(&self) -> Option<usize> {
        self.0.iter().enumerate().position(|(i, &y)| i as u32 != y)
    }
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// point -> element taking the base to it
    transversal: BTreeMap<usize, Perm>,
}

impl Level {
    fn new(base: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            transversal: BTreeMap::new(),
        }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal.clear();
        self.transversal.insert(self.base, Perm::identity(degree));
        let mut queue = vec![self.base];
        while let Some(p) = queue.pop() {
            let u = self.transversal[&p].clone();
            for s in &self.gens {
                let q = s.image(p);
                if let std::collections::btree_map::Entry::Vacant(e) = self.transversal.entry(q) {
                    e.insert(u.then(s));
                    queue.push(q);
                }
            }
        }
    }
}

struct Chain {
    degree: usize,
    levels: Vec<Level>,
}

impl Chain {
    fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = Chain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            chain.insert(g.clone());
        }
        chain
    }

    /// Sifts `g` from `from` down. Returns the residue and the level at
    /// which it left the chain (`levels.len()` when it passed every level).
    fn strip(&self, from: usize, g: &Perm) -> (Perm, usize) {
        let mut h = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let p = h.image(level.base);
            match level.transversal.get(&p) {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, j),
            }
        }
        (h, self.levels.len())
    }

    fn contains(&self, g: &Perm) -> bool {
        self.strip(0, g).0.is_identity()
    }

    fn add_at(&mut self, from: usize, r: Perm) {
        let (r, j) = self.strip(from, &r);
        if r.is_identity() {
            return;
        }
        if j == self.levels.len() {
            let b = r.first_moved().expect("non-identity");
            self.levels.push(Level::new(b));
        }
        for l in from..=j {
            self.levels[l].gens.push(r.clone());
            self.levels[l].rebuild_orbit(self.degree);
        }
    }

    fn insert(&mut self, g: Perm) {
        self.add_at(0, g);
        self.complete();
    }

    /// Adds sifted Schreier generators until every level is closed.
    fn complete(&mut self) {
        'restart: loop {
            for i in (0..self.levels.len()).rev() {
                let level = &self.levels[i];
                for (&p, u) in &level.transversal {
                    for s in &level.gens {
                        let q = s.image(p);
                        let h = u.then(s).then(&level.transversal[&q].inverse());
                        let (r, _) = self.strip(i + 1, &h);
                        if !r.is_identity() {
                            self.add_at(i + 1, r);
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }

    fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.transversal.len() as u128)
            .product()
    }
}

/// Order of the group generated by `gens`, all of the same degree.
pub fn group_order(gens: &[Perm]) -> u128 {
    let degree = gens.first().map(Perm::degree).unwrap_or(0);
    Chain::new(degree, gens).order()
}

fn generator_perms(t: &CosetTable) -> Vec<Perm> {
    (0..t.generators())
        .map(|g| Perm::from_images(&t.permutation(g)))
        .collect()
}

/// Order of the permutation image of the group acting on the cosets.
pub fn perm_image_order(t: &CosetTable) -> u128 {
    group_order(&generator_perms(t))
}

/// Order of the commutator subgroup of the permutation image.
pub fn derived_subgroup_order(t: &CosetTable) -> u128 {
    let gens = generator_perms(t);
    let degree = t.index();
    let mut chain = Chain::new(degree, &[]);
    let mut pending = Vec::new();
    for a in &gens {
        for b in &gens {
            pending.push(a.inverse().then(&b.inverse()).then(a).then(b));
        }
    }
    // normal closure: conjugate each new generator by every generator
    while let Some(x) = pending.pop() {
        if x.is_identity() || chain.contains(&x) {
            continue;
        }
        chain.insert(x.clone());
        for g in &gens {
            pending.push(g.inverse().then(&x).then(g));
        }
    }
    chain.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::builtin;
    use crate::lowindex::{low_index_classes, SearchConfig};

    fn closure_size(gens: &[Perm]) -> u128 {
        let n = gens[0].degree();
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![Perm::identity(n)];
        seen.insert(Perm::identity(n));
        while let Some(p) = stack.pop() {
            for g in gens {
                let q = p.then(g);
                if seen.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        seen.len() as u128
    }

    #[test]
    fn symmetric_and_alternating() {
        let cycle = Perm::from_images(&[1, 2, 3, 4, 5, 0]);
        let swap = Perm::from_images(&[1, 0, 2, 3, 4, 5]);
        assert_eq!(group_order(&[cycle.clone(), swap]), 720);
        let c3 = Perm::from_images(&[1, 2, 0, 3, 4]);
        let c5 = Perm::from_images(&[1, 2, 3, 4, 0]);
        assert_eq!(group_order(&[c3, c5]), 60);
        assert_eq!(group_order(&[cycle]), 6);
    }

    #[test]
    fn agrees_with_brute_force_closure() {
        let gens = [
            Perm::from_images(&[2, 0, 1, 4, 3, 6, 5]),
            Perm::from_images(&[0, 1, 3, 2, 5, 6, 4]),
        ];
        assert_eq!(group_order(&gens), closure_size(&gens));
    }

    #[test]
    fn regular_cyclic_action() {
        let z6 = builtin("Z6").unwrap();
        let t = &low_index_classes(&z6, 6, &SearchConfig::default()).unwrap()[0].table;
        assert_eq!(perm_image_order(t), 6);
        assert_eq!(derived_subgroup_order(t), 1);
    }

    #[test]
    fn s3_on_trivial_subgroup() {
        let s3 = builtin("S3").unwrap();
        let classes = low_index_classes(&s3, 6, &SearchConfig::default()).unwrap();
        assert_eq!(classes.len(), 1);
        let t = &classes[0].table;
        let gens: Vec<Perm> = (0..2)
            .map(|g| Perm::from_images(&t.permutation(g)))
            .collect();
        assert_eq!(perm_image_order(t), closure_size(&gens));
        assert_eq!(perm_image_order(t), 6);
        assert_eq!(derived_subgroup_order(t), 3);
    }
}
