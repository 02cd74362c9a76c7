//! Band-generator (dual) Garside structure of `B_3`.
//!
//! With `a12 = s1`, `a23 = s2`, `a13 = s2^-1 s1 s2` and
//! `δ = a12 a23 = a23 a13 = a13 a12`, every 3-braid has a unique left-greedy
//! form `δ^m · a^{p_1} a^{p_2} ⋯` whose bands follow the cyclic order
//! `a12 → a13 → a23 → a12`. The exponent `m` is the supremum and the number
//! of syllables is the depth.

use std::fmt;

use crate::error::{Error, Result};
use crate::garside::is_periodic;
use crate::word::{BraidWord, Letter};

/// The three band generators, numbered along the admissible cyclic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Band {
    A12 = 0,
    A13 = 1,
    A23 = 2,
}

impl Band {
    fn from_index(i: u8) -> Band {
        match i % 3 {
            0 => Band::A12,
            1 => Band::A13,
            _ => Band::A23,
        }
    }

    /// `δ^-k · self · δ^k`.
    pub fn shift(self, k: i64) -> Band {
        Band::from_index((self as i64 + k).rem_euclid(3) as u8)
    }

    /// The band allowed to follow `self` when it is not repeated.
    pub fn successor(self) -> Band {
        self.shift(1)
    }

    /// `self · other = δ`.
    fn completes_delta(self, other: Band) -> bool {
        other == self.shift(2)
    }

    pub fn name(self) -> &'static str {
        match self {
            Band::A12 => "a12",
            Band::A13 => "a13",
            Band::A23 => "a23",
        }
    }

    pub fn word(self) -> BraidWord {
        match self {
            Band::A12 => BraidWord::from_signed(3, &[1]),
            Band::A23 => BraidWord::from_signed(3, &[2]),
            Band::A13 => BraidWord::from_signed(3, &[-2, 1, 2]),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BandLetter {
    pub band: Band,
    pub exponent: u32,
}

/// Left-greedy dual normal form `δ^delta_power · syllables`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualNf {
    delta_power: i64,
    syllables: Vec<BandLetter>,
}

impl DualNf {
    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn syllables(&self) -> &[BandLetter] {
        &self.syllables
    }

    /// The δ-exponent.
    pub fn sup(&self) -> i64 {
        self.delta_power
    }

    /// The number of syllables.
    pub fn depth(&self) -> usize {
        self.syllables.len()
    }

    /// Each band letter has exponent sum 1 and δ has exponent sum 2.
    pub fn exponent_sum(&self) -> i64 {
        2 * self.delta_power + self.syllables.iter().map(|s| s.exponent as i64).sum::<i64>()
    }

    /// Adjacent syllables follow the cyclic order and all exponents are positive.
    pub fn is_admissible(&self) -> bool {
        self.syllables.iter().all(|s| s.exponent > 0)
            && self
                .syllables
                .windows(2)
                .all(|w| w[1].band == w[0].band.successor())
    }

    pub fn to_word(&self) -> BraidWord {
        let delta = BraidWord::from_signed(3, &[1, 2]).pow(self.delta_power);
        let mut out = delta;
        for s in &self.syllables {
            out = out.compose(&s.band.word().pow(s.exponent as i64)).unwrap();
        }
        out
    }

    /// Parses `d^<m> a12^<p> a13^<q> ...`, rejecting non-normal sequences.
    pub fn parse(text: &str) -> Result<DualNf> {
        let mut tokens = text.split_whitespace();
        let head = tokens.next().unwrap_or("");
        let delta_power: i64 = head
            .strip_prefix("d^")
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| Error::Syntax {
                position: 0,
                message: format!("expected `d^<int>`, got `{head}`"),
            })?;
        let mut syllables = Vec::new();
        for tok in tokens {
            let (name, exp) = tok.split_once('^').unwrap_or((tok, "1"));
            let band = match name {
                "a12" => Band::A12,
                "a13" => Band::A13,
                "a23" => Band::A23,
                _ => {
                    return Err(Error::Syntax {
                        position: text.find(tok).unwrap_or(0),
                        message: format!("unknown band `{name}`"),
                    })
                }
            };
            let exponent: u32 = exp.parse().map_err(|_| Error::Syntax {
                position: text.find(tok).unwrap_or(0),
                message: format!("bad exponent `{exp}`"),
            })?;
            syllables.push(BandLetter { band, exponent });
        }
        let nf = DualNf {
            delta_power,
            syllables,
        };
        if !nf.is_admissible() {
            return Err(Error::NotNormal(text.to_string()));
        }
        Ok(nf)
    }
}

impl fmt::Display for DualNf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d^{}", self.delta_power)?;
        for s in &self.syllables {
            write!(f, " {}^{}", s.band.name(), s.exponent)?;
        }
        Ok(())
    }
}

/// Left-greedy factorization over the band atoms.
///
/// Atoms are kept on a stack relative to a rotation offset so that pulling a
/// `δ^±1` out to the left (which conjugates everything before it) costs O(1).
struct Builder {
    delta: i64,
    offset: i64,
    stack: Vec<u8>,
}

impl Builder {
    fn new() -> Builder {
        Builder {
            delta: 0,
            offset: 0,
            stack: Vec::new(),
        }
    }

    fn top(&self) -> Option<Band> {
        self.stack
            .last()
            .map(|&b| Band::from_index(b).shift(self.offset))
    }

    fn push_atom(&mut self, band: Band) {
        if let Some(top) = self.top() {
            if top.completes_delta(band) {
                self.stack.pop();
                // x · δ = δ · (δ^-1 x δ): everything before shifts forward.
                self.delta += 1;
                self.offset += 1;
                return;
            }
        }
        self.stack
            .push(band.shift(-self.offset) as u8);
    }

    fn push_inverse(&mut self, band: Band) {
        // a^-1 = δ^-1 · successor(a)
        self.delta -= 1;
        self.offset -= 1;
        self.push_atom(band.successor());
    }

    fn finish(self) -> DualNf {
        let mut syllables: Vec<BandLetter> = Vec::new();
        for &b in &self.stack {
            let band = Band::from_index(b).shift(self.offset);
            match syllables.last_mut() {
                Some(last) if last.band == band => last.exponent += 1,
                _ => syllables.push(BandLetter { band, exponent: 1 }),
            }
        }
        DualNf {
            delta_power: self.delta,
            syllables,
        }
    }
}

fn check_degree(w: &BraidWord) -> Result<()> {
    if w.degree() != 3 {
        return Err(Error::Degree(w.degree()));
    }
    Ok(())
}

pub fn dual_nf(w: &BraidWord) -> Result<DualNf> {
    check_degree(w)?;
    let mut b = Builder::new();
    for &l in w.letters() {
        let band = if l.index() == 1 { Band::A12 } else { Band::A23 };
        if l.is_positive() {
            b.push_atom(band);
        } else {
            b.push_inverse(band);
        }
    }
    Ok(b.finish())
}

pub fn sup_depth(w: &BraidWord) -> Result<(i64, usize)> {
    let nf = dual_nf(w)?;
    Ok((nf.sup(), nf.depth()))
}

/// For periodic 3-braids of nonzero depth, `depth + sup ≡ 2 (mod 3)`.
pub fn check_periodic_congruence(w: &BraidWord) -> Result<bool> {
    check_degree(w)?;
    if !is_periodic(w) {
        return Err(Error::Precondition(format!("`{w}` is not periodic")));
    }
    let nf = dual_nf(w)?;
    Ok(nf.depth() == 0 || (nf.depth() as i64 + nf.sup()).rem_euclid(3) == 2)
}

/// Letters for `δ^k` in Artin generators.
pub fn delta_word(k: i64) -> BraidWord {
    BraidWord::new(3, [Letter::pos(1), Letter::pos(2)]).unwrap().pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::equal;

    fn w(letters: &[i32]) -> BraidWord {
        BraidWord::from_signed(3, letters)
    }

    #[test]
    fn band_relations_hold() {
        let d = delta_word(1);
        let a12 = Band::A12.word();
        let a13 = Band::A13.word();
        let a23 = Band::A23.word();
        assert!(equal(&a12.compose(&a23).unwrap(), &d).unwrap());
        assert!(equal(&a23.compose(&a13).unwrap(), &d).unwrap());
        assert!(equal(&a13.compose(&a12).unwrap(), &d).unwrap());
        // δ^-1 a δ is the successor band
        for b in [Band::A12, Band::A13, Band::A23] {
            let lhs = b.word().conjugate(&d).unwrap();
            assert!(equal(&lhs, &b.successor().word()).unwrap(), "{b:?}");
        }
    }

    #[test]
    fn examples() {
        let d = dual_nf(&w(&[1, 2])).unwrap();
        assert_eq!((d.delta_power(), d.depth()), (1, 0));
        let s1 = dual_nf(&w(&[1])).unwrap();
        assert_eq!(s1.to_string(), "d^0 a12^1");
        let s2i = dual_nf(&w(&[-2])).unwrap();
        assert_eq!(s2i.to_string(), "d^-1 a12^1");
        assert!(equal(&s2i.to_word(), &w(&[-2])).unwrap());
    }

    #[test]
    fn sup_depth_examples() {
        for k in -4..=4 {
            assert_eq!(sup_depth(&delta_word(k)).unwrap(), (k, 0));
        }
        assert_eq!(sup_depth(&w(&[1])).unwrap(), (0, 1));
        let x = Band::A12
            .word()
            .compose(&Band::A13.word())
            .unwrap()
            .compose(&Band::A23.word())
            .unwrap();
        assert_eq!(sup_depth(&x).unwrap(), (0, 3));
        assert_eq!(dual_nf(&x).unwrap().to_string(), "d^0 a12^1 a13^1 a23^1");
    }

    #[test]
    fn half_twist_form() {
        let nf = dual_nf(&w(&[1, 2, 1])).unwrap();
        assert_eq!(nf.to_string(), "d^1 a12^1");
        assert!(check_periodic_congruence(&w(&[1, 2, 1])).unwrap());
    }

    #[test]
    fn congruence_examples() {
        assert!(check_periodic_congruence(&delta_word(1)).unwrap());
        let conj = delta_word(1).conjugate(&w(&[2])).unwrap();
        let nf = dual_nf(&conj).unwrap();
        assert!(nf.depth() > 0);
        assert!(check_periodic_congruence(&conj).unwrap());
        assert!(matches!(
            check_periodic_congruence(&w(&[1, 1])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn wrong_degree() {
        assert!(matches!(
            dual_nf(&BraidWord::from_signed(4, &[1])),
            Err(Error::Degree(4))
        ));
    }

    #[test]
    fn parse_roundtrip() {
        let nf = dual_nf(&w(&[1, 1, -2, 2, 2, 1, -1, -2, 1])).unwrap();
        assert_eq!(DualNf::parse(&nf.to_string()).unwrap(), nf);
        assert!(DualNf::parse("d^0 a12^1 a23^1").is_err());
        assert!(DualNf::parse("d^0 a12^0").is_err());
        assert!(DualNf::parse("d^x").is_err());
        assert!(DualNf::parse("d^1 a14^2").is_err());
    }
}
