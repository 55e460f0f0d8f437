use std::fmt;

use serde::{Deserialize, Serialize};

/// Finitely generated abelian group `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/dₖ` with
/// `d₁ | d₂ | … | dₖ` and every `dᵢ > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn free(rank: usize) -> Self {
        AbelianInvariants {
            torsion: Vec::new(),
            free_rank: rank,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Invariant factors of the integer matrix `rows` (relators × generators)
/// via Smith normal form; the cokernel is the abelianized group.
#[allow(clippy::needless_range_loop)]
pub fn smith_invariants(rows: &[Vec<i64>], cols: usize) -> AbelianInvariants {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    let mut diag: Vec<i128> = Vec::new();
    let mut t = 0;
    while t < nrows.min(cols) {
        // smallest nonzero entry of the remaining block as pivot
        let pivot = (t..nrows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..nrows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                dirty |= m[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if !dirty {
                // divisibility: fold any non-multiple into the pivot row
                let bad = (t + 1..nrows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            m[t][j] += m[i][j];
                        }
                        continue;
                    }
                }
            }
            // move the smallest remaining entry of row/column t to the pivot
            let best_col = (t..cols)
                .filter(|&j| m[t][j] != 0)
                .min_by_key(|&j| m[t][j].abs());
            let best_row = (t..nrows)
                .filter(|&i| m[i][t] != 0)
                .min_by_key(|&i| m[i][t].abs());
            match (best_row, best_col) {
                (Some(i), Some(j)) if m[i][t].abs() < m[t][j].abs() => m.swap(t, i),
                (_, Some(j)) => {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                }
                (Some(i), None) => m.swap(t, i),
                (None, None) => unreachable!("pivot is nonzero"),
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    // Normalize into a divisibility chain.
    let mut d: Vec<i128> = diag.into_iter().filter(|&x| x != 0).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = gcd(d[i], d[j]);
            let l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    let rank = d.len();
    AbelianInvariants {
        torsion: d
            .into_iter()
            .filter(|&x| x > 1)
            .map(|x| u64::try_from(x).expect("torsion coefficient exceeds u64"))
            .collect(),
        free_rank: cols - rank,
    }
}
