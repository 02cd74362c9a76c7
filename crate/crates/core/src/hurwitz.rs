//! The Hurwitz action of `B_n` on `n`-tuples of `m`-braids.
//!
//! `σ_i` sends `(.., β_i, β_{i+1}, ..)` to `(.., β_{i+1}, β_{i+1}^-1 β_i β_{i+1}, ..)`.
//! Words act on the right, letter by letter from the left.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::garside::GarsideNf;
use crate::nielsen_thurston::{
    classify_nf, find_round_reduction, ClassifyOptions, NtType, RoundCurve,
};
use crate::word::{BraidWord, Letter};

pub const DEFAULT_ORBIT_CAP: usize = 100_000;

/// An ordered tuple of braids of a common degree, stored in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidSystem {
    degree: usize,
    entries: Vec<GarsideNf>,
}

impl BraidSystem {
    pub fn new(degree: usize, entries: &[BraidWord]) -> Result<BraidSystem> {
        let nfs = entries
            .iter()
            .map(|w| {
                if w.degree() != degree {
                    Err(Error::DegreeMismatch(degree, w.degree()))
                } else {
                    Ok(GarsideNf::from_word(w))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        BraidSystem::from_normal_forms(degree, nfs)
    }

    pub fn from_normal_forms(degree: usize, entries: Vec<GarsideNf>) -> Result<BraidSystem> {
        if entries.is_empty() {
            return Err(Error::Precondition("a braid system needs at least one entry".into()));
        }
        if let Some(e) = entries.iter().find(|e| e.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, e.degree()));
        }
        Ok(BraidSystem { degree, entries })
    }

    /// One word per entry, e.g. `["s1^-1", "s1 s1 s2"]`.
    pub fn parse<S: AsRef<str>>(degree: usize, entries: &[S]) -> Result<BraidSystem> {
        let words = entries
            .iter()
            .map(|s| BraidWord::parse(s.as_ref(), degree))
            .collect::<Result<Vec<_>>>()?;
        BraidSystem::new(degree, &words)
    }

    /// Inverse of [`BraidSystem::key`].
    pub fn from_key(degree: usize, key: &str) -> Result<BraidSystem> {
        let entries = key
            .split(" ; ")
            .map(|s| GarsideNf::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        BraidSystem::from_normal_forms(degree, entries)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The number of entries `n`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[GarsideNf] {
        &self.entries
    }

    pub fn entry_words(&self) -> Vec<BraidWord> {
        self.entries.iter().map(GarsideNf::to_word).collect()
    }

    /// Normal forms of the entries joined by `" ; "`.
    pub fn key(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        parts.join(" ; ")
    }

    pub fn act_generator(&self, i: usize, positive: bool) -> Result<BraidSystem> {
        let n = self.len();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, degree: n });
        }
        let mut out = self.clone();
        let (a, b) = (&self.entries[i - 1], &self.entries[i]);
        if positive {
            out.entries[i - 1] = b.clone();
            out.entries[i] = a.conjugate(b);
        } else {
            out.entries[i - 1] = b.conjugate(&a.inverse());
            out.entries[i] = a.clone();
        }
        Ok(out)
    }

    pub fn act_letter(&self, l: Letter) -> Result<BraidSystem> {
        self.act_generator(l.index(), l.is_positive())
    }

    pub fn act_word(&self, w: &BraidWord) -> Result<BraidSystem> {
        if w.degree() != self.len() {
            return Err(Error::DegreeMismatch(self.len(), w.degree()));
        }
        let mut out = self.clone();
        for &l in w.letters() {
            out = out.act_letter(l)?;
        }
        Ok(out)
    }

    /// `β_{i_1} ⋯ β_{i_k}` for a strictly increasing list of 1-based indices;
    /// `None` gives the full product.
    pub fn coxeter(&self, indices: Option<&[usize]>) -> Result<GarsideNf> {
        let all: Vec<usize> = (1..=self.len()).collect();
        let idx = indices.unwrap_or(&all);
        if idx.is_empty() {
            return Err(Error::IndexSet("empty index set".into()));
        }
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::IndexSet(format!("{idx:?} is not strictly increasing")));
        }
        if idx[0] == 0 || idx[idx.len() - 1] > self.len() {
            return Err(Error::IndexSet(format!(
                "{idx:?} out of range 1..={}",
                self.len()
            )));
        }
        let mut acc = GarsideNf::identity(self.degree);
        for &i in idx {
            acc = acc.mul(&self.entries[i - 1]);
        }
        Ok(acc)
    }

    /// Conjugates every entry by `by`.
    pub fn conjugate(&self, by: &GarsideNf) -> BraidSystem {
        BraidSystem {
            degree: self.degree,
            entries: self.entries.iter().map(|e| e.conjugate(by)).collect(),
        }
    }

    /// Sub-tuple at the given 1-based positions.
    pub fn restrict(&self, indices: &[usize]) -> Result<BraidSystem> {
        let entries = indices
            .iter()
            .map(|&i| {
                self.entries
                    .get(i.wrapping_sub(1))
                    .cloned()
                    .ok_or_else(|| Error::IndexSet(format!("index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidSystem::from_normal_forms(self.degree, entries)
    }

    fn commute_graph_components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut k = 0;
            while k < members.len() {
                let u = members[k];
                for (v, c) in comp.iter_mut().enumerate() {
                    if *c == usize::MAX && !self.entries[u].commutes_with(&self.entries[v]) {
                        *c = id;
                        members.push(v);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            out.push(members.into_iter().map(|i| i + 1).collect());
        }
        out
    }

    /// A partition `I ⊔ J` of `1..=n` with every entry at `I` commuting with
    /// every entry at `J`, if one exists. `I` is the component of index 1 in
    /// the non-commutation graph.
    pub fn reducing_partition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let comps = self.commute_graph_components();
        if comps.len() < 2 {
            return None;
        }
        let first = comps[0].clone();
        let mut rest: Vec<usize> = comps[1..].iter().flatten().copied().collect();
        rest.sort_unstable();
        Some((first, rest))
    }

    pub fn is_reducible(&self) -> bool {
        self.len() >= 2 && self.reducing_partition().is_some()
    }

    fn pairwise_noncommuting(&self, idx: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, &i) in idx.iter().enumerate() {
            for &j in &idx[a + 1..] {
                if !self.entries[i - 1].commutes_with(&self.entries[j - 1]) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for BraidSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// `c_i = (s1^-1 ⋯ s_{i-1}^-1) s_i^2 (s_{i-1} ⋯ s1)` in `B_n`.
pub fn pure_generator(n: usize, i: usize) -> Result<BraidWord> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, degree: n });
    }
    let mut letters: Vec<Letter> = (1..i).map(Letter::neg).collect();
    letters.extend([Letter::pos(i), Letter::pos(i)]);
    letters.extend((1..i).rev().map(Letter::pos));
    BraidWord::new(n, letters)
}

pub fn pure_generators(n: usize) -> Vec<BraidWord> {
    (1..n).map(|i| pure_generator(n, i).unwrap()).collect()
}

/// The standard generator `A_ij = (s_{j-1} ⋯ s_{i+1}) s_i^2 (s_{i+1}^-1 ⋯ s_{j-1}^-1)`
/// of the pure braid group, `1 <= i < j <= n`.
pub fn pure_braid_generator(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    if i == 0 || i >= j || j > n {
        return Err(Error::IndexSet(format!("({i},{j}) for n = {n}")));
    }
    let mut letters: Vec<Letter> = (i + 1..j).rev().map(Letter::pos).collect();
    letters.extend([Letter::pos(i), Letter::pos(i)]);
    letters.extend((i + 1..j).map(Letter::neg));
    BraidWord::new(n, letters)
}

/// Half twist on strands `i..=j` of `B_n`.
pub fn local_half_twist(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    if i == 0 || i > j || j > n {
        return Err(Error::IndexSet(format!("[{i},{j}] for n = {n}")));
    }
    let mut letters = Vec::new();
    for top in (i..j).rev() {
        letters.extend((i..=top).map(Letter::pos));
    }
    BraidWord::new(n, letters)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subgroup {
    /// `σ_1..σ_{n-1}`.
    Full,
    /// All `A_ij`.
    Pure,
    /// `c_1..c_{n-1}`.
    FreeF,
}

impl Subgroup {
    pub fn name(self) -> &'static str {
        match self {
            Subgroup::Full => "full",
            Subgroup::Pure => "pure",
            Subgroup::FreeF => "free",
        }
    }

    /// Generators in search order; each is followed by its inverse.
    pub fn generators(self, n: usize) -> Vec<BraidWord> {
        let base: Vec<BraidWord> = match self {
            Subgroup::Full => (1..n)
                .map(|i| BraidWord::generator(n, i, true).unwrap())
                .collect(),
            Subgroup::Pure => {
                let mut g = Vec::new();
                for j in 2..=n {
                    for i in 1..j {
                        g.push(pure_braid_generator(n, i, j).unwrap());
                    }
                }
                g
            }
            Subgroup::FreeF => pure_generators(n),
        };
        base.into_iter()
            .flat_map(|w| {
                let inv = w.inverse();
                [w, inv]
            })
            .collect()
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Subgroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Subgroup> {
        match s {
            "full" => Ok(Subgroup::Full),
            "pure" => Ok(Subgroup::Pure),
            "free" => Ok(Subgroup::FreeF),
            _ => Err(Error::Precondition(format!("unknown subgroup `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// A partial Coxeter element is pseudo-Anosov but its factors are not
    /// irreducible and pairwise commuting.
    PartialCoxeterPseudoAnosov,
    /// A partial Coxeter element of a 3-braid system is reducible but some
    /// factor moves its reduction curve.
    PartialCoxeterReducible,
    /// Exponent sum of a proper sub-product outside `±2, 3 (mod 6)`.
    ExponentSumRestriction,
    /// Irreducible 3-braid systems of length at least 5.
    LongIrreducible,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::PartialCoxeterPseudoAnosov => "partial-coxeter-pA",
            Rule::PartialCoxeterReducible => "partial-coxeter-reducible",
            Rule::ExponentSumRestriction => "exponent-sum-mod6",
            Rule::LongIrreducible => "long-irreducible",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence that an orbit is infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub rule: Rule,
    /// 1-based positions of the entries involved.
    pub indices: Vec<usize>,
    pub coxeter_type: Option<NtType>,
    pub non_commuting: Vec<(usize, usize)>,
    /// Entries classified as reducible (rule 1) or moving the reduction
    /// curve (rule 2).
    pub offending: Vec<usize>,
    pub detail: String,
}

impl Certificate {
    /// Single-line witness summary.
    pub fn witness(&self) -> String {
        let mut parts = vec![format!("I={:?}", self.indices)];
        if let Some(t) = self.coxeter_type {
            parts.push(format!("C_I={t}"));
        }
        if !self.non_commuting.is_empty() {
            parts.push(format!("noncommuting={:?}", self.non_commuting));
        }
        if !self.offending.is_empty() {
            parts.push(format!("offending={:?}", self.offending));
        }
        if !self.detail.is_empty() {
            parts.push(self.detail.clone());
        }
        parts.join(" ")
    }
}

/// Outcome of the certificate search together with the rules that could not
/// be evaluated.
#[derive(Clone, Debug, Default)]
pub struct CertificateSearch {
    pub certificate: Option<Certificate>,
    pub skipped: Vec<String>,
}

fn index_subsets(n: usize, min: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let k = mask.count_ones() as usize;
        if k < min || k > max {
            continue;
        }
        out.push((0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect());
    }
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn classify_or_log(
    x: &GarsideNf,
    opts: &ClassifyOptions,
    what: &str,
    log: &mut Vec<String>,
    cache: &mut HashMap<GarsideNf, Option<NtType>>,
) -> Option<NtType> {
    if let Some(r) = cache.get(x) {
        return *r;
    }
    let r = if x.is_periodic() {
        Some(NtType::Periodic)
    } else {
        match classify_nf(x, opts) {
            Ok(t) => Some(t),
            Err(e) => {
                log.push(format!("{what}: {e}"));
                None
            }
        }
    };
    cache.insert(x.clone(), r);
    r
}

/// Runs every certificate rule and reports the first that fires.
pub fn certificate_search(s: &BraidSystem, opts: &ClassifyOptions) -> CertificateSearch {
    let mut log = Vec::new();
    let mut cache = HashMap::new();
    let n = s.len();
    let subsets = index_subsets(n, 2, n);
    let entry_types: Vec<Option<NtType>> = s
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| classify_or_log(e, opts, &format!("entry {}", i + 1), &mut log, &mut cache))
        .collect();

    let mut reducible_coxeters = Vec::new();
    for idx in &subsets {
        let c = s.coxeter(Some(idx)).unwrap();
        let t = classify_or_log(&c, opts, &format!("C_{idx:?}"), &mut log, &mut cache);
        match t {
            Some(NtType::PseudoAnosov) => {
                let non_commuting = s.pairwise_noncommuting(idx);
                let offending: Vec<usize> = idx
                    .iter()
                    .copied()
                    .filter(|&i| entry_types[i - 1] == Some(NtType::Reducible))
                    .collect();
                if !non_commuting.is_empty() || !offending.is_empty() {
                    return CertificateSearch {
                        certificate: Some(Certificate {
                            rule: Rule::PartialCoxeterPseudoAnosov,
                            indices: idx.clone(),
                            coxeter_type: t,
                            non_commuting,
                            offending,
                            detail: String::new(),
                        }),
                        skipped: log,
                    };
                }
            }
            Some(NtType::Reducible) => reducible_coxeters.push((idx.clone(), c)),
            _ => {}
        }
    }

    if s.degree() == 3 {
        for (idx, c) in &reducible_coxeters {
            let witness = match find_round_reduction(c, opts) {
                Ok(Some(w)) => w,
                Ok(None) => continue,
                Err(e) => {
                    log.push(format!("reduction curve of C_{idx:?}: {e}"));
                    continue;
                }
            };
            let gamma = &witness.summit.conjugator;
            let curve: RoundCurve = witness.curve;
            let offending: Vec<usize> = idx
                .iter()
                .copied()
                .filter(|&i| {
                    let moved = s.entries[i - 1].conjugate(gamma).to_word();
                    !crate::nielsen_thurston::preserves_round_curve(&moved, &curve).unwrap()
                })
                .collect();
            if !offending.is_empty() {
                return CertificateSearch {
                    certificate: Some(Certificate {
                        rule: Rule::PartialCoxeterReducible,
                        indices: idx.clone(),
                        coxeter_type: Some(NtType::Reducible),
                        non_commuting: Vec::new(),
                        offending,
                        detail: format!("curve={curve} conjugator={gamma}"),
                    }),
                    skipped: log,
                };
            }
        }
    } else if !reducible_coxeters.is_empty() {
        log.push(format!(
            "{}: common curve search only for degree 3",
            Rule::PartialCoxeterReducible
        ));
    }

    if s.degree() == 3 {
        let all_noncentral = s.entries.iter().all(|e| e.central_delta_power().is_none());
        let all: Vec<usize> = (1..=n).collect();
        let non_commuting = s.pairwise_noncommuting(&all);
        if all_noncentral && !non_commuting.is_empty() {
            for idx in subsets.iter().filter(|i| i.len() < n) {
                let e: i64 = idx.iter().map(|&i| s.entries[i - 1].exponent_sum()).sum();
                if ![2, 3, 4].contains(&e.rem_euclid(6)) {
                    return CertificateSearch {
                        certificate: Some(Certificate {
                            rule: Rule::ExponentSumRestriction,
                            indices: idx.clone(),
                            coxeter_type: None,
                            non_commuting,
                            offending: Vec::new(),
                            detail: format!("exponent_sum={e}"),
                        }),
                        skipped: log,
                    };
                }
            }
        }
        if n >= 5 && !s.is_reducible() {
            return CertificateSearch {
                certificate: Some(Certificate {
                    rule: Rule::LongIrreducible,
                    indices: all,
                    coxeter_type: None,
                    non_commuting,
                    offending: Vec::new(),
                    detail: format!("length={n}"),
                }),
                skipped: log,
            };
        }
    }
    CertificateSearch {
        certificate: None,
        skipped: log,
    }
}

pub fn infiniteness_certificate(s: &BraidSystem) -> Option<Certificate> {
    certificate_search(s, &ClassifyOptions::default()).certificate
}

#[derive(Clone, Debug)]
pub enum OrbitOutcome {
    /// Members in breadth-first discovery order.
    Finite(Vec<BraidSystem>),
    CapExceeded { visited: usize },
    ProvablyInfinite(Certificate),
}

#[derive(Clone, Debug)]
pub struct OrbitResult {
    pub outcome: OrbitOutcome,
    pub subgroup: Subgroup,
    pub cap: usize,
    /// Certificate rules that could not be evaluated.
    pub skipped: Vec<String>,
}

impl OrbitResult {
    pub fn size(&self) -> Option<usize> {
        match &self.outcome {
            OrbitOutcome::Finite(m) => Some(m.len()),
            _ => None,
        }
    }

    pub fn members(&self) -> Option<&[BraidSystem]> {
        match &self.outcome {
            OrbitOutcome::Finite(m) => Some(m),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.outcome {
            OrbitOutcome::ProvablyInfinite(c) => Some(c),
            _ => None,
        }
    }

    pub fn record(&self) -> OrbitRecord {
        let (outcome, keys, size, visited) = match &self.outcome {
            OrbitOutcome::Finite(m) => (
                "finite",
                m.iter().map(BraidSystem::key).collect(),
                Some(m.len()),
                None,
            ),
            OrbitOutcome::CapExceeded { visited } => ("cap-exceeded", Vec::new(), None, Some(*visited)),
            OrbitOutcome::ProvablyInfinite(_) => ("infinite", Vec::new(), None, None),
        };
        let cert = self.certificate();
        OrbitRecord {
            keys,
            outcome: outcome.to_string(),
            size,
            visited,
            generator_set: self.subgroup.name().to_string(),
            cap: self.cap,
            rule: cert.map(|c| c.rule.name().to_string()),
            witness: cert.map(Certificate::witness),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct OrbitOptions {
    pub subgroup: Subgroup,
    pub cap: usize,
    pub certificates: bool,
    pub classify: ClassifyOptions,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            subgroup: Subgroup::Full,
            cap: DEFAULT_ORBIT_CAP,
            certificates: true,
            classify: ClassifyOptions::default(),
        }
    }
}

/// Breadth-first closure under `gens`. `Err(visited)` when the cap is hit.
pub fn closure(
    s: &BraidSystem,
    gens: &[BraidWord],
    cap: usize,
) -> std::result::Result<Vec<BraidSystem>, usize> {
    let mut seen: HashMap<BraidSystem, usize> = HashMap::new();
    let mut order = vec![s.clone()];
    seen.insert(s.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for g in gens {
            let t = order[u].act_word(g).expect("generator length matches system");
            if !seen.contains_key(&t) {
                if order.len() >= cap {
                    return Err(order.len());
                }
                seen.insert(t.clone(), order.len());
                queue.push_back(order.len());
                order.push(t);
            }
        }
    }
    Ok(order)
}

pub fn orbit_with(s: &BraidSystem, opts: &OrbitOptions) -> Result<OrbitResult> {
    if opts.cap == 0 {
        return Err(Error::Precondition("cap must be positive".into()));
    }
    let n = s.len();
    let mut skipped = Vec::new();
    if opts.certificates {
        let search = certificate_search(s, &opts.classify);
        skipped = search.skipped;
        if let Some(c) = search.certificate {
            return Ok(OrbitResult {
                outcome: OrbitOutcome::ProvablyInfinite(c),
                subgroup: opts.subgroup,
                cap: opts.cap,
                skipped,
            });
        }
    }
    let gens = if n >= 2 { opts.subgroup.generators(n) } else { Vec::new() };
    let outcome = match closure(s, &gens, opts.cap) {
        Ok(m) => OrbitOutcome::Finite(m),
        Err(visited) => OrbitOutcome::CapExceeded { visited },
    };
    Ok(OrbitResult {
        outcome,
        subgroup: opts.subgroup,
        cap: opts.cap,
        skipped,
    })
}

pub fn orbit(s: &BraidSystem, subgroup: Subgroup, cap: usize) -> Result<OrbitResult> {
    orbit_with(
        s,
        &OrbitOptions {
            subgroup,
            cap,
            ..OrbitOptions::default()
        },
    )
}

/// Line-oriented text form of an orbit result: canonical keys one per line,
/// then `field=value` lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub keys: Vec<String>,
    pub outcome: String,
    pub size: Option<usize>,
    pub visited: Option<usize>,
    pub generator_set: String,
    pub cap: usize,
    pub rule: Option<String>,
    pub witness: Option<String>,
}

impl fmt::Display for OrbitRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in &self.keys {
            writeln!(f, "{k}")?;
        }
        writeln!(f, "outcome={}", self.outcome)?;
        if let Some(s) = self.size {
            writeln!(f, "size={s}")?;
        }
        if let Some(v) = self.visited {
            writeln!(f, "visited={v}")?;
        }
        writeln!(f, "generator_set={}", self.generator_set)?;
        writeln!(f, "cap={}", self.cap)?;
        if let Some(r) = &self.rule {
            writeln!(f, "rule={r}")?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness={w}")?;
        }
        Ok(())
    }
}

impl FromStr for OrbitRecord {
    type Err = Error;

    fn from_str(text: &str) -> Result<OrbitRecord> {
        let mut keys = Vec::new();
        let mut fields: HashMap<&str, &str> = HashMap::new();
        let mut offset = 0;
        for line in text.lines() {
            let here = offset;
            offset += line.len() + 1;
            if line.is_empty() {
                continue;
            }
            match line.split_once('=') {
                Some((k, v)) => {
                    if fields.insert(k, v).is_some() {
                        return Err(Error::Syntax {
                            position: here,
                            message: format!("duplicate field `{k}`"),
                        });
                    }
                }
                None if fields.is_empty() => keys.push(line.to_string()),
                None => {
                    return Err(Error::Syntax {
                        position: here,
                        message: "key line after summary fields".into(),
                    })
                }
            }
        }
        let missing = |k: &str| Error::Syntax {
            position: text.len(),
            message: format!("missing field `{k}`"),
        };
        let num = |k: &str, v: &str| {
            v.parse::<usize>().map_err(|_| Error::Syntax {
                position: 0,
                message: format!("field `{k}` is not a count: `{v}`"),
            })
        };
        let outcome = fields.get("outcome").ok_or_else(|| missing("outcome"))?.to_string();
        let generator_set = fields
            .get("generator_set")
            .ok_or_else(|| missing("generator_set"))?
            .to_string();
        let cap = num("cap", fields.get("cap").ok_or_else(|| missing("cap"))?)?;
        let size = fields.get("size").map(|v| num("size", v)).transpose()?;
        let visited = fields.get("visited").map(|v| num("visited", v)).transpose()?;
        Ok(OrbitRecord {
            keys,
            outcome,
            size,
            visited,
            generator_set,
            cap,
            rule: fields.get("rule").map(|s| s.to_string()),
            witness: fields.get("witness").map(|s| s.to_string()),
        })
    }
}
