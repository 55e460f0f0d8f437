//! Braid words, their closures and Markov moves.
//!
//! Text form: lowercase letters are positive Artin generators (`a` is
//! σ₁, `b` is σ₂, ...), uppercase letters their inverses, and `(w)^n`
//! repeats a group. The numeric form `[1,-2,1]` lists signed generator
//! indices directly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::PDDiagram;
use crate::error::{Error, Result};

const MAX_GROUP_DEPTH: usize = 16;

/// Braid on `strands` strands. Letter `k` is σ_|k| with the sign of `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::domain("a braid needs at least one strand"));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&k| k == 0 || k.unsigned_abs() as usize >= strands)
        {
            return Err(Error::domain(format!(
                "letter {bad} is not a generator of the {strands}-strand braid group"
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Strand count inferred as one more than the largest generator index.
    pub fn from_letters(letters: Vec<i32>) -> Result<Self> {
        let strands = 1 + letters
            .iter()
            .map(|k| k.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        BraidWord::new(strands, letters)
    }

    /// Parses either the letter grammar or the bracketed numeric form.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        let letters = if trimmed.starts_with('[') {
            parse_numeric(text)?
        } else {
            let mut p = LetterParser {
                src: text.as_bytes(),
                pos: 0,
            };
            let letters = p.items(0)?;
            p.skip_ws();
            if p.pos != p.src.len() {
                return Err(Error::parse(p.pos, "unexpected character"));
            }
            letters
        };
        BraidWord::from_letters(letters)
    }

    pub fn with_strands(self, strands: usize) -> Result<Self> {
        BraidWord::new(strands, self.letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter string such as `aBabAb`, or `None` when a generator index
    /// exceeds the alphabet.
    pub fn to_letter_string(&self) -> Option<String> {
        self.letters
            .iter()
            .map(|&k| {
                let i = k.unsigned_abs();
                if i > 26 {
                    return None;
                }
                let base = if k > 0 { b'a' } else { b'A' };
                Some((base + (i - 1) as u8) as char)
            })
            .collect()
    }

    /// Permutation of `0..strands` induced by forgetting crossing signs:
    /// `perm[i]` is the bottom position of the strand starting at `i`.
    pub fn permutation(&self) -> BraidPermutation {
        let mut at: Vec<usize> = (0..self.strands).collect(); // position -> strand
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut mapping = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            mapping[strand] = pos;
        }
        BraidPermutation { mapping }
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycles()
    }

    /// The closure is connected exactly when every generator occurs.
    pub fn closure_is_connected(&self) -> bool {
        let mut seen = vec![false; self.strands.saturating_sub(1)];
        for &k in &self.letters {
            seen[k.unsigned_abs() as usize - 1] = true;
        }
        seen.iter().all(|&s| s)
    }

    /// `[-k] ++ letters ++ [k]`
    pub fn markov_conjugate(&self, k: i32) -> Result<BraidWord> {
        if k == 0 || k.unsigned_abs() as usize >= self.strands {
            return Err(Error::domain(format!(
                "cannot conjugate a {}-strand braid by generator {k}",
                self.strands
            )));
        }
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(-k);
        letters.extend_from_slice(&self.letters);
        letters.push(k);
        BraidWord::new(self.strands, letters)
    }

    /// Adds a strand and appends σₙ^(±1) on it.
    pub fn markov_stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// PD code of the closed braid.
    ///
    /// Strands run top to bottom. At σᵢ the strand entering top-left leaves
    /// bottom-right; for a positive letter it passes under, so the tuple is
    /// `(top-left, bottom-left, bottom-right, top-right)`. Edge labels are
    /// renumbered consecutively along each component, components ordered by
    /// their leftmost starting strand. Strands that meet no crossing become
    /// crossingless unknots; such a diagram reports itself as split.
    pub fn closure(&self) -> PDDiagram {
        let n = self.strands;
        let mut next_label = n as u32;
        let mut fresh = || {
            next_label += 1;
            next_label
        };
        let top: Vec<u32> = (1..=n as u32).collect();
        let mut current = top.clone();
        let mut raw = Vec::with_capacity(self.letters.len());
        let mut successor: BTreeMap<u32, u32> = BTreeMap::new();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            let (tl, tr) = (current[i], current[i + 1]);
            let (bl, br) = (fresh(), fresh());
            raw.push(if k > 0 {
                [tl, bl, br, tr]
            } else {
                [tr, tl, bl, br]
            });
            successor.insert(tl, br);
            successor.insert(tr, bl);
            current[i] = bl;
            current[i + 1] = br;
        }
        // Glue bottom edges onto the top edges of the same position.
        let mut glue: BTreeMap<u32, u32> = BTreeMap::new();
        let mut unknots = 0;
        for (&b, &t) in current.iter().zip(&top) {
            if b == t {
                unknots += 1;
            } else {
                glue.insert(b, t);
            }
        }
        let canon = |l: u32| *glue.get(&l).unwrap_or(&l);
        let successor: BTreeMap<u32, u32> = successor
            .into_iter()
            .map(|(a, b)| (canon(a), canon(b)))
            .collect();
        let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
        for &start in &top {
            if relabel.contains_key(&start) || !successor.contains_key(&start) {
                continue;
            }
            let mut e = start;
            loop {
                let id = relabel.len() as u32 + 1;
                relabel.insert(e, id);
                e = successor[&e];
                if e == start {
                    break;
                }
            }
        }
        let crossings = raw
            .into_iter()
            .map(|c| c.map(|l| relabel[&canon(l)]))
            .collect();
        PDDiagram::new(crossings, unknots).expect("braid closure is a valid PD code")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_letter_string() {
            Some(s) => write!(f, "{s}"),
            None => {
                let parts: Vec<String> = self.letters.iter().map(i32::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BraidWord::parse(s)
    }
}

/// Permutation of strand positions induced by a braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidPermutation {
    mapping: Vec<usize>,
}

impl BraidPermutation {
    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn cycles(&self) -> usize {
        let mut seen = vec![false; self.mapping.len()];
        let mut count = 0;
        for i in 0..self.mapping.len() {
            if !seen[i] {
                count += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = self.mapping[j];
                }
            }
        }
        count
    }
}

struct LetterParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl LetterParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn items(&mut self, depth: usize) -> Result<Vec<i32>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let Some(&c) = self.src.get(self.pos) else {
                return Ok(out);
            };
            match c {
                b'a'..=b'z' => {
                    out.push((c - b'a') as i32 + 1);
                    self.pos += 1;
                }
                b'A'..=b'Z' => {
                    out.push(-((c - b'A') as i32 + 1));
                    self.pos += 1;
                }
                b'(' => {
                    if depth + 1 > MAX_GROUP_DEPTH {
                        return Err(Error::parse(self.pos, "groups nested too deeply"));
                    }
                    let open = self.pos;
                    self.pos += 1;
                    let inner = self.items(depth + 1)?;
                    self.skip_ws();
                    if self.src.get(self.pos) != Some(&b')') {
                        return Err(Error::parse(open, "unclosed '('"));
                    }
                    self.pos += 1;
                    self.skip_ws();
                    if self.src.get(self.pos) != Some(&b'^') {
                        return Err(Error::parse(self.pos, "expected '^' after group"));
                    }
                    self.pos += 1;
                    self.skip_ws();
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let reps: usize = std::str::from_utf8(&self.src[start..self.pos])
                        .unwrap()
                        .parse()
                        .map_err(|_| Error::parse(start, "expected an unsigned exponent"))?;
                    for _ in 0..reps {
                        out.extend_from_slice(&inner);
                    }
                }
                b')' => return Ok(out),
                _ => {
                    return Err(Error::parse(
                        self.pos,
                        format!("unexpected '{}'", c as char),
                    ))
                }
            }
        }
    }
}

fn parse_numeric(text: &str) -> Result<Vec<i32>> {
    let open = text.find('[').unwrap();
    let close = text
        .rfind(']')
        .ok_or_else(|| Error::parse(text.len(), "missing ']'"))?;
    if !text[close + 1..].trim().is_empty() {
        return Err(Error::parse(close + 1, "trailing input"));
    }
    let body = &text[open + 1..close];
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = open + 1;
    for part in body.split(',') {
        let v: i32 = part
            .trim()
            .parse()
            .map_err(|_| Error::parse(offset, format!("bad letter '{}'", part.trim())))?;
        if v == 0 {
            return Err(Error::parse(offset, "letter 0 is not a generator"));
        }
        out.push(v);
        offset += part.len() + 1;
    }
    Ok(out)
}
