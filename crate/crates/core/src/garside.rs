//! Classical Garside structure of `B_m`.
//!
//! Every braid has a unique left normal form `Δ^p · A_1 ⋯ A_k` where the
//! `A_i` are permutation braids other than `1` and `Δ`, and every adjacent
//! pair is left-weighted: the starting set of `A_{i+1}` is contained in the
//! finishing set of `A_i`. [`GarsideNf`] is that form and doubles as the
//! canonical hash key for braid equality throughout the crate.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{BraidWord, Letter, Permutation};

/// A positive braid in which every pair of strands crosses at most once,
/// identified with its permutation.
///
/// `images[j]` is the final position of the strand starting at position `j`
/// (0-based); products are read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleBraid {
    images: Vec<u8>,
}

impl SimpleBraid {
    pub fn identity(degree: usize) -> SimpleBraid {
        assert!(degree <= 64, "degree above 64 is not supported");
        SimpleBraid {
            images: (0..degree as u8).collect(),
        }
    }

    pub fn delta(degree: usize) -> SimpleBraid {
        SimpleBraid {
            images: (0..degree as u8).rev().collect(),
        }
    }

    /// `s_{i+1}` for a 0-based index `i`.
    pub fn atom(degree: usize, i: usize) -> SimpleBraid {
        let mut s = SimpleBraid::identity(degree);
        s.images.swap(i, i + 1);
        s
    }

    pub fn from_permutation(p: &Permutation) -> SimpleBraid {
        SimpleBraid {
            images: p.images().iter().map(|&x| x as u8).collect(),
        }
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::from_images(self.images.iter().map(|&x| x as usize).collect())
            .expect("simple braids hold bijections")
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_delta(&self) -> bool {
        let m = self.images.len();
        self.images.iter().enumerate().all(|(i, &x)| x as usize == m - 1 - i)
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Number of crossings, i.e. the word length.
    pub fn len(&self) -> usize {
        let mut n = 0;
        for a in 0..self.images.len() {
            for b in a + 1..self.images.len() {
                if self.images[a] > self.images[b] {
                    n += 1;
                }
            }
        }
        n
    }

    fn inverse_images(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        inv
    }

    /// Bit `i` is set when `s_{i+1}` is a left divisor.
    pub fn starting_set(&self) -> u64 {
        let mut set = 0;
        for i in 0..self.images.len().saturating_sub(1) {
            if self.images[i] > self.images[i + 1] {
                set |= 1 << i;
            }
        }
        set
    }

    /// Bit `i` is set when `s_{i+1}` is a right divisor.
    pub fn finishing_set(&self) -> u64 {
        let inv = self.inverse_images();
        let mut set = 0;
        for i in 0..inv.len().saturating_sub(1) {
            if inv[i] > inv[i + 1] {
                set |= 1 << i;
            }
        }
        set
    }

    /// `Δ^-1 · self · Δ`; exchanges `s_i` and `s_{m-i}`.
    pub fn tau(&self) -> SimpleBraid {
        let m = self.images.len();
        SimpleBraid {
            images: (0..m)
                .map(|j| (m - 1) as u8 - self.images[m - 1 - j])
                .collect(),
        }
    }

    fn tau_pow(&self, k: i64) -> SimpleBraid {
        if k.rem_euclid(2) == 0 {
            self.clone()
        } else {
            self.tau()
        }
    }

    /// The simple element `X` with `self · X = Δ`.
    pub fn right_complement(&self) -> SimpleBraid {
        let m = self.images.len() as u8;
        SimpleBraid {
            images: self.inverse_images().iter().map(|&x| m - 1 - x).collect(),
        }
    }

    /// The simple element `X` with `X · self = Δ`.
    pub fn left_complement(&self) -> SimpleBraid {
        let m = self.images.len();
        let inv = self.inverse_images();
        SimpleBraid {
            images: (0..m).map(|j| inv[m - 1 - j]).collect(),
        }
    }


    fn mul_atom_right(&mut self, i: usize) {
        for x in self.images.iter_mut() {
            if *x as usize == i {
                *x = (i + 1) as u8;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
    }

    fn div_atom_left(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// A positive word for this element (leftmost descents first).
    pub fn letters(&self) -> Vec<Letter> {
        let mut rest = self.clone();
        let mut out = Vec::with_capacity(rest.len());
        loop {
            let s = rest.starting_set();
            if s == 0 {
                break;
            }
            let i = s.trailing_zeros() as usize;
            out.push(Letter::pos(i + 1));
            rest.div_atom_left(i);
        }
        out
    }

    /// All permutation braids of the given degree, identity excluded.
    pub fn all_nontrivial(degree: usize) -> Vec<SimpleBraid> {
        let mut out = Vec::new();
        let mut perm: Vec<u8> = (0..degree as u8).collect();
        loop {
            if perm.iter().enumerate().any(|(i, &x)| i != x as usize) {
                out.push(SimpleBraid {
                    images: perm.clone(),
                });
            }
            // next lexicographic permutation
            let Some(i) = (0..degree.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1])
            else {
                break;
            };
            let j = (i + 1..degree).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for SimpleBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.permutation().fmt(f)
    }
}

/// Makes `(a, b)` left-weighted in place, preserving the product `a · b`.
/// Returns whether anything moved.
fn make_left_weighted(a: &mut SimpleBraid, b: &mut SimpleBraid) -> bool {
    let mut changed = false;
    loop {
        let movable = b.starting_set() & !a.finishing_set();
        if movable == 0 {
            return changed;
        }
        let i = movable.trailing_zeros() as usize;
        a.mul_atom_right(i);
        b.div_atom_left(i);
        changed = true;
    }
}

pub fn is_left_weighted(a: &SimpleBraid, b: &SimpleBraid) -> bool {
    b.starting_set() & !a.finishing_set() == 0
}

/// Left normal form `Δ^inf · factors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideNf {
    degree: usize,
    inf: i64,
    factors: Vec<SimpleBraid>,
}

impl GarsideNf {
    pub fn identity(degree: usize) -> GarsideNf {
        GarsideNf {
            degree,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(degree: usize, k: i64) -> GarsideNf {
        GarsideNf {
            degree,
            inf: k,
            factors: Vec::new(),
        }
    }

    pub fn from_simple(s: SimpleBraid) -> GarsideNf {
        let mut out = GarsideNf::identity(s.degree());
        out.push_simple(s);
        out
    }

    pub fn from_word(w: &BraidWord) -> GarsideNf {
        let m = w.degree();
        let mut out = GarsideNf::identity(m);
        for &l in w.letters() {
            let atom = SimpleBraid::atom(m, l.index() - 1);
            if l.is_positive() {
                out.push_simple(atom);
            } else {
                // s_i^-1 = Δ^-1 · (Δ s_i^-1)
                out.mul_delta_power(-1);
                out.push_simple(atom.left_complement());
            }
        }
        out
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn inf(&self) -> i64 {
        self.inf
    }

    #[inline]
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    #[inline]
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    #[inline]
    pub fn factors(&self) -> &[SimpleBraid] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        let half = (self.degree * (self.degree - 1) / 2) as i64;
        self.inf * half + self.factors.iter().map(|f| f.len() as i64).sum::<i64>()
    }

    fn mul_delta_power(&mut self, k: i64) {
        if k.rem_euclid(2) == 1 {
            for f in self.factors.iter_mut() {
                *f = f.tau();
            }
        }
        self.inf += k;
    }

    /// Right multiplication by a simple element, restoring normality.
    fn push_simple(&mut self, s: SimpleBraid) {
        debug_assert_eq!(s.degree(), self.degree);
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !make_left_weighted(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.inf += leading as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    pub fn mul(&self, other: &GarsideNf) -> GarsideNf {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        out.mul_delta_power(other.inf);
        for f in &other.factors {
            out.push_simple(f.clone());
        }
        out
    }

    pub fn inverse(&self) -> GarsideNf {
        // (Δ^p A_1..A_k)^-1 = Δ^{-p-k} τ^{p+k}(∂A_k) τ^{p+k-1}(∂A_{k-1}) .. τ^{p+1}(∂A_1)
        let k = self.factors.len() as i64;
        let mut out = GarsideNf::delta_power(self.degree, -self.inf - k);
        for (idx, f) in self.factors.iter().enumerate().rev() {
            let shift = self.inf + idx as i64 + 1;
            out.push_simple(f.right_complement().tau_pow(shift));
        }
        out
    }

    /// `by^-1 · self · by`.
    pub fn conjugate(&self, by: &GarsideNf) -> GarsideNf {
        by.inverse().mul(self).mul(by)
    }

    pub fn pow(&self, k: i64) -> GarsideNf {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = GarsideNf::identity(self.degree);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn commutes_with(&self, other: &GarsideNf) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// `Some(k)` iff this is `Δ^{2k}`.
    pub fn central_delta_power(&self) -> Option<i64> {
        if self.factors.is_empty() && self.inf % 2 == 0 {
            Some(self.inf / 2)
        } else {
            None
        }
    }

    /// Some power is central. Tested on the `m(m-1)`-th power, which is
    /// central for every periodic braid. The identity counts as periodic.
    pub fn is_periodic(&self) -> bool {
        let m = self.degree as i64;
        if m == 2 {
            return true;
        }
        self.pow(m * (m - 1)).central_delta_power().is_some()
    }

    pub fn to_word(&self) -> BraidWord {
        let m = self.degree;
        let delta = BraidWord::half_twist(m).pow(self.inf);
        let rest = self.factors.iter().flat_map(|f| f.letters());
        BraidWord::new(m, delta.letters().iter().copied().chain(rest)).expect("valid letters")
    }

    pub fn is_normal(&self) -> bool {
        self.factors
            .iter()
            .all(|f| f.degree() == self.degree && !f.is_identity() && !f.is_delta())
            && self
                .factors
                .windows(2)
                .all(|w| is_left_weighted(&w[0], &w[1]))
    }

    /// `Δ^p A_2 ⋯ A_k τ^p(A_1)`, with the conjugator `τ^p(A_1)`.
    pub fn cycling(&self) -> (GarsideNf, GarsideNf) {
        match self.factors.first() {
            None => (self.clone(), GarsideNf::identity(self.degree)),
            Some(first) => {
                let c = GarsideNf::from_simple(first.tau_pow(self.inf));
                (self.conjugate(&c), c)
            }
        }
    }

    /// `A_k Δ^p A_1 ⋯ A_{k-1}`, with the conjugator `A_k^-1`.
    pub fn decycling(&self) -> (GarsideNf, GarsideNf) {
        match self.factors.last() {
            None => (self.clone(), GarsideNf::identity(self.degree)),
            Some(last) => {
                let c = GarsideNf::from_simple(last.clone()).inverse();
                (self.conjugate(&c), c)
            }
        }
    }

    /// Parses `D^<p> | [perm] | ...` for the given degree, rejecting
    /// non-normal input.
    pub fn parse(text: &str, degree: usize) -> Result<GarsideNf> {
        let mut parts = text.split('|').map(str::trim);
        let head = parts.next().unwrap_or("");
        let inf: i64 = head
            .strip_prefix("D^")
            .and_then(|p| p.parse().ok())
            .ok_or_else(|| Error::Syntax {
                position: 0,
                message: format!("expected `D^<int>`, got `{head}`"),
            })?;
        let mut factors = Vec::new();
        for part in parts {
            let p: Permutation = part.parse()?;
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(p.degree(), degree));
            }
            factors.push(SimpleBraid::from_permutation(&p));
        }
        let nf = GarsideNf {
            degree,
            inf,
            factors,
        };
        if !nf.is_normal() {
            return Err(Error::NotNormal(text.to_string()));
        }
        Ok(nf)
    }
}

impl fmt::Display for GarsideNf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for s in &self.factors {
            write!(f, " | {s}")?;
        }
        Ok(())
    }
}

pub fn normal_form(w: &BraidWord) -> GarsideNf {
    GarsideNf::from_word(w)
}

fn same_degree(a: &BraidWord, b: &BraidWord) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    Ok(())
}

pub fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    same_degree(a, b)?;
    Ok(normal_form(a) == normal_form(b))
}

pub fn commutes(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    same_degree(a, b)?;
    Ok(normal_form(a).commutes_with(&normal_form(b)))
}

pub fn power(w: &BraidWord, k: i64) -> GarsideNf {
    normal_form(w).pow(k)
}

pub fn central_delta_power(w: &BraidWord) -> Option<i64> {
    normal_form(w).central_delta_power()
}

pub fn is_periodic(w: &BraidWord) -> bool {
    normal_form(w).is_periodic()
}

/// A super summit element together with a conjugator `c` such that
/// `c^-1 · w · c` is the element.
#[derive(Clone, Debug)]
pub struct SummitElement {
    pub element: GarsideNf,
    pub conjugator: GarsideNf,
}

#[derive(Clone, Debug)]
pub struct SuperSummitSet {
    pub inf: i64,
    pub sup: i64,
    /// In discovery order, starting from the element reached by
    /// cycling and decycling.
    pub members: Vec<SummitElement>,
}

impl SuperSummitSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &GarsideNf) -> bool {
        self.members.iter().any(|m| &m.element == x)
    }
}

/// Conjugates `x` by cycling until the infimum is maximal, then by
/// decycling until the supremum is minimal. Returns the element and the
/// accumulated conjugator.
pub fn summit_representative(x: &GarsideNf) -> (GarsideNf, GarsideNf) {
    let m = x.degree();
    let rounds = m * (m - 1) / 2;
    let mut cur = x.clone();
    let mut conj = GarsideNf::identity(m);

    loop {
        let start = cur.inf();
        let mut improved = false;
        for _ in 0..rounds {
            let (next, c) = cur.cycling();
            cur = next;
            conj = conj.mul(&c);
            if cur.inf() > start {
                improved = true;
                break;
            }
        }
        if !improved {
            break;
        }
    }
    loop {
        let start = cur.sup();
        let mut improved = false;
        for _ in 0..rounds {
            let (next, c) = cur.decycling();
            cur = next;
            conj = conj.mul(&c);
            if cur.sup() < start {
                improved = true;
                break;
            }
        }
        if !improved {
            break;
        }
    }
    (cur, conj)
}

/// The super summit set of `x`: closure of a summit representative under
/// conjugation by permutation braids, keeping only elements with the same
/// infimum and supremum.
pub fn super_summit_set_nf(x: &GarsideNf, cap: usize) -> Result<SuperSummitSet> {
    let m = x.degree();
    let (rep, conj) = summit_representative(x);
    let (inf, sup) = (rep.inf(), rep.sup());
    let simples: Vec<(GarsideNf, GarsideNf)> = SimpleBraid::all_nontrivial(m)
        .into_iter()
        .map(|s| {
            let nf = GarsideNf::from_simple(s);
            let inv = nf.inverse();
            (nf, inv)
        })
        .collect();

    let mut index: HashMap<GarsideNf, usize> = HashMap::new();
    let mut members = vec![SummitElement {
        element: rep.clone(),
        conjugator: conj,
    }];
    index.insert(rep, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let y = members[k].element.clone();
        for (s, s_inv) in &simples {
            let z = s_inv.mul(&y).mul(s);
            if z.inf() != inf || z.sup() != sup || index.contains_key(&z) {
                continue;
            }
            if members.len() >= cap {
                return Err(Error::SummitCapExceeded {
                    cap,
                    visited: members.len(),
                });
            }
            let conjugator = members[k].conjugator.mul(s);
            index.insert(z.clone(), members.len());
            queue.push_back(members.len());
            members.push(SummitElement {
                element: z,
                conjugator,
            });
        }
    }
    Ok(SuperSummitSet { inf, sup, members })
}

pub fn super_summit_set(w: &BraidWord, cap: usize) -> Result<SuperSummitSet> {
    if cap == 0 {
        return Err(Error::Precondition("cap must be positive".into()));
    }
    super_summit_set_nf(&normal_form(w), cap)
}
