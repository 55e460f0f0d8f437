//! Finitely presented groups.
//!
//! Text grammar: `< a,b | (a,B^2), abab^-1a^-1b^-1, aba=bab >`. When every
//! generator is a single lowercase letter, words are read letter by letter
//! and an uppercase letter is the inverse generator. With longer generator
//! names (`x1, x2`) letters are separated by `*` or whitespace and inverses
//! are written `x1^-1`. In both modes `(u,v)` is the commutator
//! `u⁻¹v⁻¹uv`, `(w)^n` a power and `u=v` the relator `uv⁻¹`.

mod catalog;
mod smith;
mod tietze;
mod wirtinger;
pub mod word;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use catalog::{builtin, builtin_names};
pub use smith::{smith_invariants, AbelianInvariants};
pub use tietze::ELIMINATION_LENGTH_CAP;
pub use wirtinger::wirtinger;
use word::{gen_index, Word};

/// Meridian and zero-framed longitude of one link component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Peripheral {
    pub meridian: Word,
    pub longitude: Word,
}

/// Surgery coefficient `(p, q)`: the filling kills `μ^p λ^q`.
pub type SurgeryCoefficient = (i64, i64);

/// Parses per-component coefficients such as `-2/1,0,-`: `p/q`, a bare
/// integer `p` meaning `p/1`, and `-` (or nothing) for an unfilled cusp.
pub fn parse_surgery(text: &str) -> Result<Vec<Option<SurgeryCoefficient>>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for item in text.split(',') {
        let t = item.trim();
        let at = offset + item.len() - item.trim_start().len();
        offset += item.len() + 1;
        if t.is_empty() || t == "-" {
            out.push(None);
            continue;
        }
        let (p, q) = t.split_once('/').unwrap_or((t, "1"));
        let num = |s: &str| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::parse(at, format!("bad surgery coefficient {t:?}")))
        };
        out.push(Some((num(p)?, num(q)?)));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    peripheral: Vec<Peripheral>,
}

impl FpPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let p = FpPresentation {
            generators,
            relators,
            peripheral: Vec::new(),
        };
        p.validate()?;
        Ok(p)
    }

    /// Generators named `x1, x2, ...`.
    pub fn with_anonymous_generators(n: usize, relators: Vec<Word>) -> Result<Self> {
        FpPresentation::new((1..=n).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn with_peripheral(mut self, peripheral: Vec<Peripheral>) -> Result<Self> {
        self.peripheral = peripheral;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        let n = self.generators.len();
        let words = self.relators.iter().chain(
            self.peripheral
                .iter()
                .flat_map(|p| [&p.meridian, &p.longitude]),
        );
        for w in words {
            if let Some(&l) = w.iter().find(|&&l| l == 0 || gen_index(l) >= n) {
                return Err(Error::Validation(format!(
                    "letter {l} does not name one of {n} generators"
                )));
            }
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_presentation(text)
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn peripheral(&self) -> &[Peripheral] {
        &self.peripheral
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    pub fn add_relator(&mut self, w: Word) -> Result<()> {
        self.relators.push(w);
        self.validate()
    }

    /// Appends `μ^p λ^q` for each filled component. Components past the end
    /// of `coeffs`, or given `None`, stay unfilled.
    pub fn surgery(&self, coeffs: &[Option<SurgeryCoefficient>]) -> Result<FpPresentation> {
        wirtinger::surgery(self, coeffs)
    }

    /// Tietze simplification; see [`tietze`](self::tietze).
    pub fn simplify(&self) -> FpPresentation {
        tietze::simplify(self)
    }

    pub fn abelianization(&self) -> AbelianInvariants {
        let n = self.generators.len();
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| word::exponent_sums(r, n))
            .collect();
        smith_invariants(&rows, n)
    }

    fn single_letter_names(&self) -> bool {
        self.generators.len() <= 26
            && self.generators.iter().enumerate().all(|(i, g)| {
                let b = g.as_bytes();
                b.len() == 1 && b[0] == b'a' + i as u8
            })
    }

    /// Renders a word in this presentation's text grammar.
    pub fn format_word(&self, w: &[i32]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let letters = self.single_letter_names();
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let run = j - i;
            let g = gen_index(w[i]);
            let pos = w[i] > 0;
            parts.push(if letters {
                let c = if pos {
                    self.generators[g].clone()
                } else {
                    self.generators[g].to_uppercase()
                };
                if run > 1 {
                    format!("{c}^{run}")
                } else {
                    c
                }
            } else {
                let e = if pos { run as i64 } else { -(run as i64) };
                if e == 1 {
                    self.generators[g].clone()
                } else {
                    format!("{}^{e}", self.generators[g])
                }
            });
            i = j;
        }
        parts.join(if letters { "" } else { "*" })
    }
}

impl fmt::Display for FpPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(","), rels.join(", "))
    }
}

impl FromStr for FpPresentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_presentation(s)
    }
}

struct PresParser<'a> {
    src: &'a [u8],
    pos: usize,
    names: Vec<String>,
    letters: bool,
}

impl PresParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.src[start].is_ascii_digit() {
            return Err(Error::parse(start, "expected a generator name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "expected an integer exponent"))
    }

    fn maybe_power(&mut self, w: Word) -> Result<Word> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.integer()?;
            Ok(word::power(&w, n))
        } else {
            Ok(w)
        }
    }

    /// A relator: `word` or `word = word`.
    fn relator(&mut self) -> Result<Word> {
        let lhs = self.word()?;
        if self.peek() == Some(b'=') {
            self.pos += 1;
            let rhs = self.word()?;
            Ok(word::concat(&[&lhs, &word::inverse(&rhs)]))
        } else {
            Ok(lhs)
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Some(b'(') => {
                    let open = self.pos;
                    self.pos += 1;
                    let first = self.word()?;
                    let inner = match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            let second = self.word()?;
                            word::commutator(&first, &second)
                        }
                        _ => first,
                    };
                    if self.peek() != Some(b')') {
                        return Err(Error::parse(open, "unclosed '('"));
                    }
                    self.pos += 1;
                    out.extend(self.maybe_power(inner)?);
                }
                Some(b'*') if !out.is_empty() => {
                    self.pos += 1;
                }
                Some(b'1') if out.is_empty() => {
                    // identity
                    self.pos += 1;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let start = self.pos;
                    let l = if self.letters {
                        self.pos += 1;
                        let lower = (c.to_ascii_lowercase() - b'a') as usize;
                        if lower >= self.names.len() {
                            return Err(Error::parse(
                                start,
                                format!("unknown generator '{}'", c as char),
                            ));
                        }
                        word::letter(lower, c.is_ascii_lowercase())
                    } else {
                        let name = self.ident()?;
                        let g = self.names.iter().position(|n| *n == name).ok_or_else(|| {
                            Error::parse(start, format!("unknown generator '{name}'"))
                        })?;
                        word::letter(g, true)
                    };
                    out.extend(self.maybe_power(vec![l])?);
                }
                _ => break,
            }
        }
        Ok(word::free_reduce(&out))
    }
}

fn parse_presentation(text: &str) -> Result<FpPresentation> {
    let mut p = PresParser {
        src: text.as_bytes(),
        pos: 0,
        names: Vec::new(),
        letters: false,
    };
    p.expect(b'<')?;
    loop {
        if matches!(p.peek(), Some(b'|') | Some(b'>')) && p.names.is_empty() {
            break;
        }
        let at = p.pos;
        let name = p.ident()?;
        if p.names.contains(&name) {
            return Err(Error::parse(at, format!("duplicate generator '{name}'")));
        }
        p.names.push(name);
        match p.peek() {
            Some(b',') => p.pos += 1,
            _ => break,
        }
    }
    p.letters = p
        .names
        .iter()
        .all(|n| n.len() == 1 && n.as_bytes()[0].is_ascii_lowercase());
    let mut relators = Vec::new();
    match p.peek() {
        Some(b'|') => {
            p.pos += 1;
            if p.peek() != Some(b'>') {
                loop {
                    relators.push(p.relator()?);
                    match p.peek() {
                        Some(b',') => p.pos += 1,
                        _ => break,
                    }
                }
            }
            p.expect(b'>')?;
        }
        _ => p.expect(b'>')?,
    }
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, "trailing input"));
    }
    let names = std::mem::take(&mut p.names);
    FpPresentation::new(names, relators)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surgery_coefficients() {
        assert_eq!(
            parse_surgery("-2/1, 0,-, 3").unwrap(),
            vec![Some((-2, 1)), Some((0, 1)), None, Some((3, 1))]
        );
        let err = parse_surgery("1/1,x/2").unwrap_err();
        assert!(err.is_parse(), "{err}");
        assert_eq!(err, Error::parse(4, "bad surgery coefficient \"x/2\""));
    }

    #[test]
    fn parse_commutator_and_powers() {
        let p: FpPresentation = "< a,b | (a,B^2) >".parse().unwrap();
        assert_eq!(p.relators(), &[vec![-1, 2, 2, 1, -2, -2]]);
        let q: FpPresentation = "<a,b | aba = bab>".parse().unwrap();
        assert_eq!(q.relators(), &[vec![1, 2, 1, -2, -1, -2]]);
        let r: FpPresentation = "<a,b | abab^-1a^-1b^-1>".parse().unwrap();
        assert_eq!(r.relators(), &[vec![1, 2, 1, -2, -1, -2]]);
        let s: FpPresentation = "<a | a^6>".parse().unwrap();
        assert_eq!(s.relators(), &[vec![1; 6]]);
        let f: FpPresentation = "<a,b | >".parse().unwrap();
        assert!(f.relators().is_empty());
        let f: FpPresentation = "<a,b>".parse().unwrap();
        assert_eq!(f.num_generators(), 2);
    }

    #[test]
    fn named_generators() {
        let p: FpPresentation = "<x1, x2 | x1*x2*x1^-1*x2^-1, (x1 x2)^3>".parse().unwrap();
        assert_eq!(p.relators()[0], vec![1, 2, -1, -2]);
        assert_eq!(p.relators()[1].len(), 6);
        assert_eq!(
            p.to_string(),
            "< x1,x2 | x1*x2*x1^-1*x2^-1, x1*x2*x1*x2*x1*x2 >"
        );
    }

    #[test]
    fn display_round_trip() {
        let p: FpPresentation = "< a,b | (a,B^2), abab^-1a^-1b^-1 >".parse().unwrap();
        let again: FpPresentation = p.to_string().parse().unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn parse_errors() {
        assert!("< a,b | ac >"
            .parse::<FpPresentation>()
            .unwrap_err()
            .is_parse());
        assert!("< a,a | >"
            .parse::<FpPresentation>()
            .unwrap_err()
            .is_parse());
        assert!("< a,b | (ab >"
            .parse::<FpPresentation>()
            .unwrap_err()
            .is_parse());
        assert!("a,b | ab".parse::<FpPresentation>().unwrap_err().is_parse());
    }

    #[test]
    fn json_uses_signed_indices() {
        let p: FpPresentation = "<a,b | aB>".parse().unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"generators":["a","b"],"relators":[[1,-2]]}"#);
    }

    #[test]
    fn abelianization_examples() {
        let p: FpPresentation = "<a,b | (a,B^2)>".parse().unwrap();
        assert_eq!(p.abelianization(), AbelianInvariants::free(2));
        let t: FpPresentation = "<a,b | abab^-1a^-1b^-1>".parse().unwrap();
        assert_eq!(t.abelianization(), AbelianInvariants::free(1));
        let c: FpPresentation = "<a | a^6>".parse().unwrap();
        let ab = c.abelianization();
        assert_eq!((ab.torsion.as_slice(), ab.free_rank), (&[6u64][..], 0));
    }

    #[test]
    fn validation_rejects_bad_letters() {
        assert!(FpPresentation::new(vec!["a".into()], vec![vec![2]]).is_err());
        assert!(FpPresentation::new(vec!["a".into()], vec![vec![0]]).is_err());
    }
}
