//! Free words over the Artin generators of `B_m`.
//!
//! A [`BraidWord`] is always freely reduced: constructors cancel adjacent
//! `s_i s_i^-1` pairs eagerly, so two words compare equal exactly when they
//! are the same reduced free word. Equality as braids lives in
//! [`crate::garside`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One Artin generator or its inverse, stored as a signed 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    /// `s_index` for `positive`, `s_index^-1` otherwise. `index` is 1-based.
    pub fn new(index: usize, positive: bool) -> Letter {
        assert!(index >= 1, "generator indices are 1-based");
        let i = index as i32;
        Letter(if positive { i } else { -i })
    }

    pub fn pos(index: usize) -> Letter {
        Letter::new(index, true)
    }

    pub fn neg(index: usize) -> Letter {
        Letter::new(index, false)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    #[inline]
    pub fn sign(self) -> i64 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    #[inline]
    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "s{}", self.index())
        } else {
            write!(f, "s{}^-1", self.index())
        }
    }
}

/// A freely reduced word in the Artin generators of the braid group on
/// `degree` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    degree: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(degree: usize) -> BraidWord {
        assert!(degree >= 2, "braid groups need at least two strands");
        BraidWord {
            degree,
            letters: Vec::new(),
        }
    }

    /// Builds a word from letters, reducing it freely.
    pub fn new(degree: usize, letters: impl IntoIterator<Item = Letter>) -> Result<BraidWord> {
        if degree < 2 {
            return Err(Error::Degree(degree));
        }
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if l.index() >= degree {
                return Err(Error::IndexOutOfRange {
                    index: l.index(),
                    degree,
                });
            }
            push_reduced(&mut out, l);
        }
        Ok(BraidWord {
            degree,
            letters: out,
        })
    }

    /// Convenience for tests and fixed data: panics on out-of-range indices.
    /// Positive entries are `s_i`, negative entries `s_i^-1`.
    pub fn from_signed(degree: usize, letters: &[i32]) -> BraidWord {
        let letters = letters.iter().map(|&x| {
            assert!(x != 0, "zero is not a generator");
            Letter::new(x.unsigned_abs() as usize, x > 0)
        });
        BraidWord::new(degree, letters).expect("valid letters")
    }

    pub fn generator(degree: usize, index: usize, positive: bool) -> Result<BraidWord> {
        BraidWord::new(degree, [Letter::new(index, positive)])
    }

    /// The positive half twist `(s1 .. s_{m-1})(s1 .. s_{m-2}) .. (s1)`.
    pub fn half_twist(degree: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(degree * (degree - 1) / 2);
        for top in (1..degree).rev() {
            letters.extend((1..=top).map(Letter::pos));
        }
        BraidWord { degree, letters }
    }

    /// `Δ^2`, the generator of the center.
    pub fn full_twist(degree: usize) -> BraidWord {
        BraidWord::half_twist(degree).pow(2)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_degree(&self, other: &BraidWord) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    /// Freely reduced concatenation `self · other`.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_degree(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(BraidWord {
            degree: self.degree,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            degree: self.degree,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `b^-1 · self · b`.
    pub fn conjugate(&self, b: &BraidWord) -> Result<BraidWord> {
        b.inverse().compose(self)?.compose(b)
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::identity(self.degree);
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base).expect("same degree");
        }
        out
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// Image in the symmetric group; `s_i ↦ (i i+1)`, letters applied left to right.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.degree).collect();
        // Track where each starting point has moved to after each letter.
        for l in &self.letters {
            let i = l.index() - 1;
            for p in images.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        Permutation { images }
    }

    /// Embeds the word into a braid group with more strands.
    pub fn widen(&self, degree: usize) -> Result<BraidWord> {
        if degree < self.degree {
            return Err(Error::DegreeMismatch(self.degree, degree));
        }
        Ok(BraidWord {
            degree,
            letters: self.letters.clone(),
        })
    }

    /// Parses the ASCII word grammar: whitespace-separated `s<k>`, `D` (the
    /// half twist) or `e` (empty), each with an optional `^<int>` exponent.
    pub fn parse(text: &str, degree: usize) -> Result<BraidWord> {
        if degree < 2 {
            return Err(Error::Degree(degree));
        }
        let mut letters: Vec<Letter> = Vec::new();
        let delta = BraidWord::half_twist(degree);
        for (pos, token) in tokens(text) {
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => {
                    let exp: i64 = e.parse().map_err(|_| Error::Syntax {
                        position: pos + b.len() + 1,
                        message: format!("bad exponent `{e}`"),
                    })?;
                    (b, exp)
                }
                None => (token, 1),
            };
            let unit: Vec<Letter> = if base == "e" {
                Vec::new()
            } else if base == "D" {
                delta.letters.clone()
            } else if let Some(digits) = base.strip_prefix('s') {
                let index: usize = digits.parse().map_err(|_| Error::Syntax {
                    position: pos,
                    message: format!("bad generator `{base}`"),
                })?;
                if index == 0 || index >= degree {
                    return Err(Error::IndexOutOfRange { index, degree });
                }
                vec![Letter::pos(index)]
            } else {
                return Err(Error::Syntax {
                    position: pos,
                    message: format!("unknown token `{base}`"),
                });
            };
            let unit_inv: Vec<Letter> = unit.iter().rev().map(|l| l.inverse()).collect();
            let chunk = if exp < 0 { &unit_inv } else { &unit };
            for _ in 0..exp.unsigned_abs() {
                for &l in chunk {
                    push_reduced(&mut letters, l);
                }
            }
        }
        Ok(BraidWord { degree, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        let at = offset;
        offset += end;
        rest = &trimmed[end..];
        Some((at, tok))
    })
}

#[inline]
fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    if letters.last() == Some(&l.inverse()) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

/// A permutation of `{1..m}` stored 0-based: `images[j]` is the image of `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// From 0-based images; rejects non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str("]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line 1-based notation, e.g. `[2 1 3]`.
    fn from_str(s: &str) -> Result<Permutation> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Syntax {
                position: 0,
                message: format!("expected `[..]`, got `{s}`"),
            })?;
        let images = inner
            .split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(x) if x >= 1 => Ok(x - 1),
                _ => Err(Error::Syntax {
                    position: 0,
                    message: format!("bad permutation entry `{t}`"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(degree: usize, letters: &[i32]) -> BraidWord {
        BraidWord::from_signed(degree, letters)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(BraidWord::parse("s1 s2^-1", 3).unwrap(), w(3, &[1, -2]));
        assert!(BraidWord::parse("s1 s1^-1", 3).unwrap().is_empty());
        let d2 = BraidWord::parse("D^2", 3).unwrap();
        assert_eq!(d2.len(), 6);
        assert_eq!(d2, w(3, &[1, 2, 1, 1, 2, 1]));
        assert!(BraidWord::parse("e", 4).unwrap().is_empty());
        assert_eq!(BraidWord::parse("  s2^3  ", 3).unwrap(), w(3, &[2, 2, 2]));
        assert_eq!(
            BraidWord::parse("D^-1", 3).unwrap(),
            w(3, &[-1, -2, -1])
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            BraidWord::parse("s3", 3),
            Err(Error::IndexOutOfRange { index: 3, degree: 3 })
        ));
        assert!(matches!(
            BraidWord::parse("s0", 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        match BraidWord::parse("s1 x2", 3) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        match BraidWord::parse("s1 s2^q", 3) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(BraidWord::parse("s1", 1), Err(Error::Degree(1))));
    }

    #[test]
    fn format_then_parse_is_stable() {
        let x = BraidWord::parse("s1 D s2^-3 s1^2", 4).unwrap();
        let text = x.to_string();
        assert_eq!(BraidWord::parse(&text, 4).unwrap(), x);
        assert_eq!(BraidWord::identity(3).to_string(), "e");
    }

    #[test]
    fn compose_examples() {
        let s1 = w(3, &[1]);
        assert!(s1.compose(&s1.inverse()).unwrap().is_empty());
        assert_eq!(s1.compose(&w(3, &[2])).unwrap(), w(3, &[1, 2]));
        assert_eq!(
            w(3, &[1, 2]).compose(&w(3, &[-2, 1])).unwrap(),
            w(3, &[1, 1])
        );
        assert!(matches!(
            s1.compose(&w(4, &[1])),
            Err(Error::DegreeMismatch(3, 4))
        ));
    }

    #[test]
    fn conjugate_examples() {
        let s1 = w(3, &[1]);
        assert_eq!(s1.conjugate(&BraidWord::identity(3)).unwrap(), s1);
        assert_eq!(s1.conjugate(&w(3, &[2])).unwrap(), w(3, &[-2, 1, 2]));
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w(3, &[1, -2]).exponent_sum(), 0);
        assert_eq!(BraidWord::full_twist(3).exponent_sum(), 6);
    }

    #[test]
    fn permutation_examples() {
        let p = w(3, &[1]).permutation();
        assert_eq!(p.images(), &[1, 0, 2]);
        assert_eq!(p.to_string(), "[2 1 3]");
        assert!(BraidWord::identity(3).permutation().is_identity());
        assert!(w(3, &[1, 1]).permutation().is_identity());
        // s1 then s2 sends 1 -> 2 -> 3.
        assert_eq!(w(3, &[1, 2]).permutation().apply(0), 2);
    }

    #[test]
    fn permutation_parse_roundtrip() {
        let p: Permutation = "[3 1 2]".parse().unwrap();
        assert_eq!(p.to_string(), "[3 1 2]");
        assert!("[1 1 2]".parse::<Permutation>().is_err());
        assert!("1 2".parse::<Permutation>().is_err());
    }
}
