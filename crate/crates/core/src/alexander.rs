//! Seifert matrices of braid closures and the invariants built from them.
//!
//! The surface is the Bennequin surface of the braid: one disk per strand
//! and one half-twisted band per letter. Consecutive bands between the same
//! pair of disks bound a loop, and these loops form a basis of the first
//! homology. Linking numbers between loops and their push-offs depend only
//! on the signs of the bands and how loops in neighbouring columns
//! interleave.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::diagram::OrientedDiagram;
use crate::error::{Error, Result};
use crate::fpgroup::{wirtinger, word};
use crate::poly::{det_bareiss, HalfLaurent, IntPoly};

/// A homology loop running between two consecutive bands of one column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BandLoop {
    /// Generator index of the column, starting at 1.
    pub column: usize,
    /// Positions of the two bands in the braid word.
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
    basis: Vec<BandLoop>,
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// First Betti number of the surface.
    pub fn betti(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn basis(&self) -> &[BandLoop] {
        &self.basis
    }

    /// `det(V - t Vᵀ)` as an ordinary polynomial in `t`.
    pub fn alexander_determinant(&self) -> IntPoly {
        let r = self.size();
        let m = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| IntPoly::from_coeffs(vec![self.entries[i][j], -self.entries[j][i]]))
                    .collect()
            })
            .collect();
        det_bareiss(m)
    }

    /// `det(V - Vᵀ)`, the determinant of the intersection form.
    pub fn intersection_determinant(&self) -> i128 {
        self.alexander_determinant().eval(1)
    }
}

fn sign(letter: i32) -> i64 {
    if letter > 0 {
        1
    } else {
        -1
    }
}

/// Seifert matrix of the Bennequin surface of a braid whose closure is
/// connected.
pub fn seifert_matrix(b: &BraidWord) -> Result<SeifertMatrix> {
    if !b.closure_is_connected() || (b.is_empty() && b.strands() > 1) {
        return Err(Error::SplitClosure);
    }
    let letters = b.letters();
    let mut basis = Vec::new();
    for column in 1..b.strands() {
        let bands: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(_, &k)| k.unsigned_abs() as usize == column)
            .map(|(p, _)| p)
            .collect();
        basis.extend(bands.windows(2).map(|w| BandLoop {
            column,
            from: w[0],
            to: w[1],
        }));
    }
    let r = basis.len();
    let mut v = vec![vec![0i64; r]; r];
    for (i, a) in basis.iter().enumerate() {
        let (ea, eb) = (sign(letters[a.from]), sign(letters[a.to]));
        v[i][i] = -(ea + eb) / 2;
        for (j, c) in basis.iter().enumerate() {
            if c.column == a.column && c.from == a.to {
                // a and c share the band at a.to
                if eb > 0 {
                    v[i][j] = 1;
                } else {
                    v[j][i] = -1;
                }
            } else if c.column == a.column + 1 {
                if a.from < c.from && c.from < a.to && a.to < c.to {
                    v[i][j] = 1;
                } else if c.from < a.from && a.from < c.to && c.to < a.to {
                    v[i][j] = -1;
                }
            }
        }
    }
    Ok(SeifertMatrix { entries: v, basis })
}

/// Symmetrized Alexander polynomial `t^(-r/2) det(V - t Vᵀ)` of the closure,
/// or zero for split closures.
pub fn alexander_poly(b: &BraidWord) -> HalfLaurent {
    match seifert_matrix(b) {
        Ok(v) => HalfLaurent::from_int_poly(&v.alexander_determinant(), -(v.betti() as i64)),
        Err(_) => HalfLaurent::zero(),
    }
}

/// Alexander polynomial of any oriented diagram, from the Fox derivatives
/// of its Wirtinger relators with every meridian sent to `t`.
///
/// The result is centred so that its exponents are symmetric about zero, with
/// a positive top coefficient. Unlike [`alexander_poly`] it is only defined
/// up to sign, but it sees the orientation of each component, not just the
/// one a braid closure imposes.
pub fn diagram_alexander_poly(d: &OrientedDiagram) -> Result<HalfLaurent> {
    if d.base().crossings().is_empty() {
        let n = d.base().unknots();
        return Ok(if n == 1 {
            HalfLaurent::one()
        } else {
            HalfLaurent::zero()
        });
    }
    let p = wirtinger(d)?;
    let m = p.num_generators();
    if m == 1 {
        return Ok(HalfLaurent::one());
    }
    if p.relators().len() < m - 1 {
        // some component never passes under another: the link splits
        return Ok(HalfLaurent::zero());
    }
    // Rows are multiplied by t so every Fox derivative has exponents >= 0.
    let fox = |r: &[i32], j: usize| -> IntPoly {
        let mut coeffs = vec![0i64; r.len() + 2];
        let mut pre: i64 = 1;
        for &l in r {
            if l > 0 {
                if word::gen_index(l) == j {
                    coeffs[pre as usize] += 1;
                }
                pre += 1;
            } else {
                pre -= 1;
                if word::gen_index(l) == j {
                    coeffs[pre as usize] -= 1;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    };
    let rows: Vec<Vec<IntPoly>> = p.relators()[..m - 1]
        .iter()
        .map(|r| (0..m - 1).map(|j| fox(r, j)).collect())
        .collect();
    let det = HalfLaurent::from_int_poly(&det_bareiss(rows), 0);
    let (Some(lo), Some(hi)) = (det.min_half_exp(), det.max_half_exp()) else {
        return Ok(HalfLaurent::zero());
    };
    let centred = det.shift(-(lo + hi) / 2);
    let top = centred.coeff(hi - (lo + hi) / 2);
    Ok(if top < 0 { -centred } else { centred })
}

/// Crossing change and smoothing at one letter: `(L₊, L₋, L₀)`.
pub fn skein_triple(b: &BraidWord, pos: usize) -> Result<(BraidWord, BraidWord, BraidWord)> {
    let letters = b.letters();
    if pos >= letters.len() {
        return Err(Error::domain(format!(
            "position {pos} is outside a word of length {}",
            letters.len()
        )));
    }
    let k = letters[pos].abs();
    let with = |l: Option<i32>| {
        let mut w = letters.to_vec();
        match l {
            Some(l) => w[pos] = l,
            None => {
                w.remove(pos);
            }
        }
        BraidWord::new(b.strands(), w).expect("same strand count")
    };
    Ok((with(Some(k)), with(Some(-k)), with(None)))
}

/// `Δ₊ - Δ₋ - (t^(1/2) - t^(-1/2)) Δ₀`, zero when the skein relation holds.
pub fn skein_defect(b: &BraidWord, pos: usize) -> Result<HalfLaurent> {
    let (p, m, z) = skein_triple(b, pos)?;
    let lhs = &alexander_poly(&p) - &alexander_poly(&m);
    Ok(&lhs - &(&HalfLaurent::skein_factor() * &alexander_poly(&z)))
}

/// `Δ / (t^(1/2) - t^(-1/2))²` kept as an unreduced fraction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionFunction {
    pub numerator: HalfLaurent,
    pub denominator: HalfLaurent,
}

impl std::fmt::Display for TorsionFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

pub fn milnor_torsion(delta: &HalfLaurent) -> Result<TorsionFunction> {
    if delta.is_zero() {
        return Err(Error::TorsionUndefined);
    }
    let s = HalfLaurent::skein_factor();
    Ok(TorsionFunction {
        numerator: delta.clone(),
        denominator: &s * &s,
    })
}

pub fn equal_up_to_units(p: &HalfLaurent, q: &HalfLaurent) -> bool {
    p.equal_up_to_units(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    fn hl(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn trefoil_matrix() {
        let v = seifert_matrix(&bw("AAA")).unwrap();
        assert_eq!(v.size(), 2);
        assert_eq!(v.intersection_determinant(), 1);
        assert!(HalfLaurent::from_int_poly(&v.alexander_determinant(), 0)
            .equal_up_to_units(&hl("t^2 - t + 1")));
    }

    #[test]
    fn hopf_and_unknot() {
        let v = seifert_matrix(&bw("aa")).unwrap();
        assert_eq!(v.size(), 1);
        assert_eq!(v.get(0, 0).abs(), 1);
        assert!(HalfLaurent::from_int_poly(&v.alexander_determinant(), 0)
            .equal_up_to_units(&hl("t - 1")));
        let v = seifert_matrix(&bw("a")).unwrap();
        assert_eq!(v.size(), 0);
        assert_eq!(v.alexander_determinant(), IntPoly::constant(1));
        assert_eq!(alexander_poly(&bw("")), HalfLaurent::one());
    }

    #[test]
    fn split_closures() {
        assert_eq!(seifert_matrix(&bw("b")).unwrap_err(), Error::SplitClosure);
        assert!(alexander_poly(&bw("b")).is_zero());
        let two = BraidWord::new(2, vec![]).unwrap();
        assert!(alexander_poly(&two).is_zero());
    }

    #[test]
    fn printed_polynomials() {
        assert_eq!(alexander_poly(&bw("AAA")), hl("t - 1 + t^-1"));
        assert_eq!(
            alexander_poly(&bw("(ab)^3b")),
            hl("t^(5/2) - t^(3/2) + t^(-3/2) - t^(-5/2)")
        );
        assert!(alexander_poly(&bw("ABCDCbaCdEdCBCDCeb"))
            .equal_up_to_sign(&hl("3*t^(1/2) - 3*t^(-1/2)")));
        assert!(alexander_poly(&bw("ABCCbaCCBCCb"))
            .equal_up_to_sign(&hl("t^(3/2) - 3*t^(1/2) + 3*t^(-1/2) - t^(-3/2)")));
    }

    #[test]
    fn kirby_braid_needs_reoriented_component() {
        // As a braid closure every strand runs the same way, and then the
        // two links differ.
        assert_eq!(alexander_poly(&bw("aBabAb")), hl("-t + 2 - t^-1"));
        assert_ne!(alexander_poly(&bw("aBabAb")), alexander_poly(&bw("(ab)^3")));
        let d = bw("aBabAb").closure().orient().unwrap();
        let target = alexander_poly(&bw("(ab)^3"));
        let hits: Vec<usize> = (0..3)
            .filter(|&c| {
                diagram_alexander_poly(&d.reversed(c).unwrap())
                    .unwrap()
                    .equal_up_to_sign(&target)
            })
            .collect();
        assert!(!hits.is_empty());
    }

    #[test]
    fn diagram_polynomial_matches_seifert() {
        for w in [
            "AAA",
            "aaa",
            "aa",
            "abAb",
            "(ab)^3b",
            "aBabAb",
            "ababab",
            "abcbAcb",
            "aaBcbbAcc",
            "",
        ] {
            let b = bw(w);
            let d = b.closure().orient().unwrap();
            let s = alexander_poly(&b);
            let f = diagram_alexander_poly(&d).unwrap();
            assert!(f.equal_up_to_sign(&s), "{w}: {f} vs {s}");
        }
    }

    #[test]
    fn skein_examples() {
        let (p, m, z) = skein_triple(&bw("AAA"), 0).unwrap();
        assert_eq!(p.letters(), &[1, -1, -1]);
        assert_eq!(m.letters(), &[-1, -1, -1]);
        assert_eq!(z.letters(), &[-1, -1]);
        assert_eq!(z.strands(), 2);
        assert!(skein_defect(&bw("AAA"), 0).unwrap().is_zero());
        assert!(skein_triple(&bw("AAA"), 3).is_err());
    }

    #[test]
    fn torsion() {
        let t = milnor_torsion(&hl("t - 1 + t^-1")).unwrap();
        assert_eq!(t.numerator, hl("t - 1 + t^-1"));
        assert_eq!(t.denominator, hl("t - 2 + t^-1"));
        let u = milnor_torsion(&HalfLaurent::one()).unwrap();
        assert_eq!(u.denominator, hl("t - 2 + t^-1"));
        assert_eq!(
            milnor_torsion(&HalfLaurent::zero()),
            Err(Error::TorsionUndefined)
        );
    }
}
