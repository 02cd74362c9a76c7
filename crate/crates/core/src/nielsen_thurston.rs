//! Nielsen–Thurston type of a braid.
//!
//! Periodicity is decided by the central-power test. Reducibility is
//! detected by searching the super summit set for an element permuting a
//! family of round curves; curves are tracked exactly in integral (Dynnikov)
//! coordinates, which the Artin generators move by piecewise-linear maps.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::garside::{normal_form, super_summit_set_nf, GarsideNf, SummitElement};
use crate::word::BraidWord;

/// Integral lamination coordinates `(a_1..a_{m-2}; b_1..b_{m-2})` of a
/// multicurve in the `m`-punctured disc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaminationCoords {
    a: Vec<i64>,
    b: Vec<i64>,
}

#[inline]
fn pos(x: i64) -> i64 {
    x.max(0)
}

#[inline]
fn neg(x: i64) -> i64 {
    x.min(0)
}

impl LaminationCoords {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<LaminationCoords> {
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::Precondition(
                "coordinate vectors must have equal, nonzero length".into(),
            ));
        }
        Ok(LaminationCoords { a, b })
    }

    /// Number of punctures.
    pub fn degree(&self) -> usize {
        self.a.len() + 2
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0)
    }

    /// Applies one Artin generator, `s_index` or its inverse (1-based index).
    pub fn apply_generator(&mut self, index: usize, positive: bool) {
        let n = self.degree();
        let (a, b) = (&mut self.a, &mut self.b);
        if positive {
            if index == 1 {
                let b0 = a[0] + pos(b[0]);
                a[0] = -b[0] + pos(b0);
                b[0] = b0;
            } else if index == n - 1 {
                let k = n - 3;
                let bk = a[k] + neg(b[k]);
                a[k] = -b[k] + neg(bk);
                b[k] = bk;
            } else {
                let (l, r) = (index - 2, index - 1);
                let c = a[l] - a[r] - pos(b[r]) + neg(b[l]);
                let al = a[l] - pos(b[l]) - pos(pos(b[r]) + c);
                let bl = b[r] + neg(c);
                let ar = a[r] - neg(b[r]) - neg(neg(b[l]) - c);
                let br = b[l] - neg(c);
                (a[l], b[l], a[r], b[r]) = (al, bl, ar, br);
            }
        } else if index == 1 {
            let b0 = -a[0] + pos(b[0]);
            a[0] = b[0] - pos(b0);
            b[0] = b0;
        } else if index == n - 1 {
            let k = n - 3;
            let bk = -a[k] + neg(b[k]);
            a[k] = b[k] - neg(bk);
            b[k] = bk;
        } else {
            let (l, r) = (index - 2, index - 1);
            let d = a[l] - a[r] + pos(b[r]) - neg(b[l]);
            let al = a[l] + pos(b[l]) + pos(pos(b[r]) - d);
            let bl = b[r] - pos(d);
            let ar = a[r] + neg(b[r]) + neg(neg(b[l]) + d);
            let br = b[l] + pos(d);
            (a[l], b[l], a[r], b[r]) = (al, bl, ar, br);
        }
    }
}

impl fmt::Display for LaminationCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={:?} b={:?}", self.a, self.b)
    }
}

/// Image of `c` under `w`, letters applied left to right.
pub fn act_on_lamination(w: &BraidWord, c: &LaminationCoords) -> Result<LaminationCoords> {
    if w.degree() != c.degree() {
        return Err(Error::DegreeMismatch(w.degree(), c.degree()));
    }
    let mut out = c.clone();
    for l in w.letters() {
        out.apply_generator(l.index(), l.is_positive());
    }
    Ok(out)
}

/// A circle centred on the real axis enclosing punctures `lo..=hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoundCurve {
    degree: usize,
    lo: usize,
    hi: usize,
}

impl RoundCurve {
    /// 1-based inclusive bounds; must enclose at least two punctures and
    /// not all of them.
    pub fn new(degree: usize, lo: usize, hi: usize) -> Result<RoundCurve> {
        if lo < 1 || hi > degree || lo >= hi || hi - lo + 1 >= degree {
            return Err(Error::Precondition(format!(
                "[{lo}, {hi}] is not an essential round curve for degree {degree}"
            )));
        }
        Ok(RoundCurve { degree, lo, hi })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.lo, self.hi)
    }

    /// Every essential round curve, ordered by `(lo, hi)`.
    pub fn all(degree: usize) -> Vec<RoundCurve> {
        let mut out = Vec::new();
        for lo in 1..=degree {
            for hi in lo + 1..=degree {
                if let Ok(c) = RoundCurve::new(degree, lo, hi) {
                    out.push(c);
                }
            }
        }
        out
    }

    pub fn coords(&self) -> LaminationCoords {
        let k = self.degree - 2;
        let mut b = vec![0; k];
        if self.lo >= 2 {
            b[self.lo - 2] = -1;
        }
        if self.hi < self.degree {
            b[self.hi - 2] = 1;
        }
        LaminationCoords { a: vec![0; k], b }
    }
}

impl fmt::Display for RoundCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

pub fn preserves_round_curve(w: &BraidWord, r: &RoundCurve) -> Result<bool> {
    let c = r.coords();
    Ok(act_on_lamination(w, &c)? == c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NtType {
    Periodic,
    Reducible,
    PseudoAnosov,
}

impl NtType {
    pub fn token(self) -> &'static str {
        match self {
            NtType::Periodic => "periodic",
            NtType::Reducible => "reducible",
            NtType::PseudoAnosov => "pA",
        }
    }
}

impl fmt::Display for NtType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub max_degree: usize,
    pub summit_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            max_degree: 5,
            summit_cap: 20_000,
        }
    }
}

/// A super summit conjugate of a non-periodic braid together with a round
/// curve whose orbit under it consists of `period` round curves.
#[derive(Clone, Debug)]
pub struct ReductionWitness {
    pub summit: SummitElement,
    pub curve: RoundCurve,
    pub period: usize,
}

/// Least `k > 0` with `x^k(r) = r` when every iterate before that is a round
/// curve.
fn round_orbit_period(x: &BraidWord, r: &RoundCurve, round: &HashMap<LaminationCoords, RoundCurve>) -> Option<usize> {
    let start = r.coords();
    let mut c = start.clone();
    for k in 1..=round.len() {
        c = act_on_lamination(x, &c).expect("same degree");
        if c == start {
            return Some(k);
        }
        if !round.contains_key(&c) {
            return None;
        }
    }
    None
}

/// Searches the super summit set for an element under which some round
/// curve has a finite orbit of round curves. A curve with a finite orbit
/// rules out pseudo-Anosov; conversely the canonical reduction system of a
/// suitable super summit element consists of round curves, so the search is
/// complete for reducible braids. `Ok(None)` means no such element exists.
pub fn find_round_reduction(
    x: &GarsideNf,
    opts: &ClassifyOptions,
) -> Result<Option<ReductionWitness>> {
    let m = x.degree();
    if m < 3 {
        return Ok(None);
    }
    let sss = super_summit_set_nf(x, opts.summit_cap).map_err(|e| match e {
        Error::SummitCapExceeded { cap, visited } => Error::Inconclusive(format!(
            "super summit set exceeded cap {cap} after {visited} elements"
        )),
        other => other,
    })?;
    let curves = RoundCurve::all(m);
    let round: HashMap<LaminationCoords, RoundCurve> = curves.iter().map(|r| (r.coords(), *r)).collect();
    for member in sss.members {
        let w = member.element.to_word();
        for r in &curves {
            if let Some(period) = round_orbit_period(&w, r, &round) {
                return Ok(Some(ReductionWitness {
                    summit: member,
                    curve: *r,
                    period,
                }));
            }
        }
    }
    Ok(None)
}

pub fn classify_nf(x: &GarsideNf, opts: &ClassifyOptions) -> Result<NtType> {
    if x.degree() > opts.max_degree {
        return Err(Error::Degree(x.degree()));
    }
    if x.is_periodic() {
        return Ok(NtType::Periodic);
    }
    Ok(match find_round_reduction(x, opts)? {
        Some(_) => NtType::Reducible,
        None => NtType::PseudoAnosov,
    })
}

pub fn classify_with(w: &BraidWord, opts: &ClassifyOptions) -> Result<NtType> {
    classify_nf(&normal_form(w), opts)
}

pub fn classify(w: &BraidWord) -> Result<NtType> {
    classify_with(w, &ClassifyOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, letters: &[i32]) -> BraidWord {
        BraidWord::from_signed(m, letters)
    }

    #[test]
    fn round_curve_validation() {
        assert!(RoundCurve::new(3, 1, 2).is_ok());
        assert!(RoundCurve::new(3, 1, 3).is_err());
        assert!(RoundCurve::new(3, 2, 2).is_err());
        assert!(RoundCurve::new(4, 0, 2).is_err());
        assert_eq!(RoundCurve::all(3).len(), 2);
        assert_eq!(RoundCurve::all(4).len(), 5);
        for r in RoundCurve::all(5) {
            assert!(!r.coords().is_zero());
        }
    }

    #[test]
    fn action_examples() {
        let c = RoundCurve::new(3, 1, 2).unwrap().coords();
        assert_eq!(act_on_lamination(&w(3, &[]), &c).unwrap(), c);
        let x = w(3, &[1, -2, 2, 2, 1]);
        let back = act_on_lamination(&x.inverse(), &act_on_lamination(&x, &c).unwrap()).unwrap();
        assert_eq!(back, c);
        assert_eq!(
            act_on_lamination(&BraidWord::full_twist(3), &c).unwrap(),
            c
        );
        assert!(act_on_lamination(&w(4, &[1]), &c).is_err());
    }

    #[test]
    fn preservation_examples() {
        let r = RoundCurve::new(3, 1, 2).unwrap();
        assert!(preserves_round_curve(&w(3, &[1, 1]), &r).unwrap());
        assert!(!preserves_round_curve(&w(3, &[2]), &r).unwrap());
        assert!(!preserves_round_curve(&w(3, &[1, 2]), &r).unwrap());
        let r23 = RoundCurve::new(3, 2, 3).unwrap();
        assert!(preserves_round_curve(&w(3, &[2, 2, 2]), &r23).unwrap());
        assert!(!preserves_round_curve(&w(3, &[1, 1]), &r23).unwrap());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&w(3, &[1, 1])).unwrap(), NtType::Reducible);
        assert_eq!(classify(&w(3, &[1, 2])).unwrap(), NtType::Periodic);
        assert_eq!(classify(&w(3, &[1, -2])).unwrap(), NtType::PseudoAnosov);
        assert_eq!(classify(&w(3, &[])).unwrap(), NtType::Periodic);
        assert!(matches!(
            classify(&w(6, &[1, 2])),
            Err(Error::Degree(6))
        ));
    }

    #[test]
    fn swapped_curves_are_reducible() {
        // s2 s1 s3 s2 exchanges the curves around {1,2} and {3,4}
        let x = w(4, &[1, 2, 1, 3, 2]);
        assert_eq!(classify(&x).unwrap(), NtType::Reducible);
        let r = RoundCurve::new(4, 1, 2).unwrap();
        assert!(!preserves_round_curve(&x, &r).unwrap());
        assert!(preserves_round_curve(&x.pow(2), &r).unwrap());
        let y = w(4, &[1, 1, -3, 2, 1, 3, 2]);
        assert_eq!(classify(&y).unwrap(), NtType::Reducible);
    }

    #[test]
    fn inconclusive_when_capped() {
        let opts = ClassifyOptions {
            max_degree: 5,
            summit_cap: 1,
        };
        assert!(matches!(
            classify_with(&w(3, &[1, -2]), &opts),
            Err(Error::Inconclusive(_))
        ));
    }
}
