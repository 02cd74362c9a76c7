//! Instance checking for the centralizer-root theorem and the orbit-size
//! bounds, over constructed families where the hypotheses hold by design.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::garside::GarsideNf;
use crate::hurwitz::{orbit_with, BraidSystem, OrbitOptions, OrbitOutcome, Subgroup};
use crate::nielsen_thurston::{classify_nf, ClassifyOptions, NtType};
use crate::word::{BraidWord, Letter};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: String,
    pub instances: usize,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn new(theorem: &str) -> TheoremReport {
        TheoremReport {
            theorem: theorem.to_string(),
            ..TheoremReport::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Adds the instances, violations and notes of `other`.
    pub fn absorb(&mut self, other: TheoremReport) {
        self.instances += other.instances;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem={}", self.theorem)?;
        writeln!(f, "instances={}", self.instances)?;
        writeln!(f, "violations={}", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "violation={v}")?;
        }
        for n in &self.notes {
            writeln!(f, "note={n}")?;
        }
        Ok(())
    }
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn nf(w: &BraidWord) -> GarsideNf {
    GarsideNf::from_word(w)
}

/// Checks the conclusion of the centralizer-root theorem for
/// `alpha ∈ Z(beta^s)`.
pub fn check_root_centralizer(alpha: &BraidWord, beta: &BraidWord, s: i64) -> Result<TheoremReport> {
    check_root_centralizer_with(alpha, beta, s, &ClassifyOptions::default())
}

pub fn check_root_centralizer_with(
    alpha: &BraidWord,
    beta: &BraidWord,
    s: i64,
    opts: &ClassifyOptions,
) -> Result<TheoremReport> {
    let m = beta.degree();
    if alpha.degree() != m {
        return Err(Error::DegreeMismatch(m, alpha.degree()));
    }
    let (a, b) = (nf(alpha), nf(beta));
    if s <= 0 || !a.commutes_with(&b.pow(s)) {
        return Err(Error::Precondition(format!(
            "`{alpha}` does not commute with `{beta}`^{s}"
        )));
    }
    let kind = classify_nf(&b, opts)?;
    let mut report = TheoremReport::new("root-centralizer");
    report.instances = 1;
    let mut require = |ok: bool, what: String| {
        if !ok {
            report
                .violations
                .push(format!("alpha=`{alpha}` beta=`{beta}` s={s} ({kind}): {what}"));
        }
    };
    match kind {
        NtType::Periodic => {
            let e = (m * (m - 1)) as i64;
            require(a.commutes_with(&b.pow(e)), format!("no commutation with beta^{e}"));
        }
        NtType::PseudoAnosov => require(a.commutes_with(&b), "no commutation with beta".into()),
        NtType::Reducible => {
            let e = factorial(m - 1);
            require(a.commutes_with(&b.pow(e)), format!("no commutation with beta^{e}"));
            if m == 3 {
                require(a.commutes_with(&b), "no commutation with beta".into());
            }
            if m == 4 {
                require(
                    (1..=3).any(|k| a.commutes_with(&b.pow(k))),
                    "no commutation with beta^k for k <= 3".into(),
                );
            }
        }
    }
    Ok(report)
}

/// If `alpha^M` and `beta^M` commute then so do `alpha^{n!}` and `beta^{n!}`.
pub fn check_corollary_consequence(alpha: &BraidWord, beta: &BraidWord, big_m: i64) -> Result<TheoremReport> {
    let n = beta.degree();
    if alpha.degree() != n {
        return Err(Error::DegreeMismatch(n, alpha.degree()));
    }
    let (a, b) = (nf(alpha), nf(beta));
    if big_m == 0 || !a.pow(big_m).commutes_with(&b.pow(big_m)) {
        return Err(Error::Precondition(format!(
            "powers {big_m} of `{alpha}` and `{beta}` do not commute"
        )));
    }
    let e = factorial(n);
    let mut report = TheoremReport::new("power-commutation");
    report.instances = 1;
    if !a.pow(e).commutes_with(&b.pow(e)) {
        report
            .violations
            .push(format!("alpha=`{alpha}` beta=`{beta}` M={big_m}: powers {e} do not commute"));
    }
    Ok(report)
}

fn full_orbit(s: &BraidSystem, cap: usize) -> Result<OrbitOutcome> {
    let opts = OrbitOptions {
        subgroup: Subgroup::Full,
        cap,
        ..OrbitOptions::default()
    };
    Ok(orbit_with(s, &opts)?.outcome)
}

/// Orbit-size bound for length-2 systems: 6 in degree 3, 8 in degree 4 and
/// `2 (m-1)!` in general.
pub fn check_length2_bound(s: &BraidSystem, cap: usize) -> Result<TheoremReport> {
    if s.len() != 2 {
        return Err(Error::Precondition(format!("length {} is not 2", s.len())));
    }
    let m = s.degree();
    let bound = match m {
        3 => 6,
        4 => 8,
        _ => 2 * factorial(m - 1) as usize,
    };
    let mut report = TheoremReport::new("length-2-bound");
    report.instances = 1;
    match full_orbit(s, cap)? {
        OrbitOutcome::Finite(members) if members.len() > bound => report
            .violations
            .push(format!("{s}: orbit size {} exceeds {bound}", members.len())),
        OrbitOutcome::Finite(members) => report
            .notes
            .push(format!("{s}: size {} <= {bound}", members.len())),
        OrbitOutcome::CapExceeded { visited } => {
            report.notes.push(format!("{s}: cap exceeded after {visited}"))
        }
        OrbitOutcome::ProvablyInfinite(c) => report.notes.push(format!("{s}: infinite ({})", c.rule)),
    }
    Ok(report)
}

/// Orbit-size bounds for degree-3 systems.
pub fn check_degree3_bounds(s: &BraidSystem, cap: usize) -> Result<TheoremReport> {
    if s.degree() != 3 {
        return Err(Error::Degree(s.degree()));
    }
    let n = s.len();
    let mut report = TheoremReport::new("degree-3-bounds");
    report.instances = 1;
    let members = match full_orbit(s, cap)? {
        OrbitOutcome::Finite(m) => m,
        OrbitOutcome::CapExceeded { visited } => {
            report.notes.push(format!("{s}: cap exceeded after {visited}"));
            return Ok(report);
        }
        OrbitOutcome::ProvablyInfinite(c) => {
            report.notes.push(format!("{s}: infinite ({})", c.rule));
            return Ok(report);
        }
    };
    let size = members.len();
    let irreducible = !s.is_reducible();
    let mut bounds = Vec::new();
    if n == 2 {
        bounds.push(6);
    }
    if n >= 3 {
        bounds.push(27 * factorial(n) as usize);
    }
    if n == 3 && irreducible {
        bounds.push(162);
    }
    if n == 4 && irreducible {
        bounds.push(648);
    }
    for b in bounds {
        if size > b {
            report.violations.push(format!("{s}: orbit size {size} exceeds {b}"));
        }
    }
    if n >= 5 && irreducible {
        report
            .violations
            .push(format!("{s}: finite orbit of length {n} but irreducible"));
    }
    report.notes.push(format!("{s}: size {size}"));
    Ok(report)
}

pub fn random_word<R: Rng>(rng: &mut R, degree: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<Letter> = (0..len)
        .map(|_| Letter::new(rng.gen_range(1..degree), rng.gen_bool(0.5)))
        .collect();
    BraidWord::new(degree, letters).unwrap()
}

fn w(m: usize, letters: &[i32]) -> BraidWord {
    BraidWord::from_signed(m, letters)
}

/// One constructed instance `(alpha, beta, s)` with `alpha ∈ Z(beta^s)`.
#[derive(Clone, Debug)]
pub struct CentralizerInstance {
    pub family: &'static str,
    pub alpha: BraidWord,
    pub beta: BraidWord,
    pub s: i64,
}

fn conj(x: &BraidWord, g: &BraidWord) -> BraidWord {
    x.conjugate(g).unwrap()
}

/// Commuting families in `B_3` and `B_4`, cycling through six shapes.
pub fn centralizer_families(seed: u64, count: usize) -> Vec<CentralizerInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let r = &mut rng;
        let inst = match i % 6 {
            0 => {
                // periodic in B3: conjugates of powers of δ or Δ
                let g = random_word(r, 3, 5);
                let base = if r.gen_bool(0.5) { w(3, &[1, 2]) } else { w(3, &[1, 2, 1]) };
                let k = [1, -1, 2, -2, 4, 5][r.gen_range(0..6)];
                let beta = conj(&base.pow(k), &g);
                let (alpha, s) = if r.gen_bool(0.5) {
                    (random_word(r, 3, 8), 6)
                } else {
                    (conj(&base.pow(r.gen_range(-3..=3)), &g), 1)
                };
                CentralizerInstance { family: "B3-periodic", alpha, beta, s }
            }
            1 => {
                // reducible in B3: conjugates of s1^k Δ^{2d}
                let g = random_word(r, 3, 5);
                let k = [1, 2, 3, -1, -2, 4][r.gen_range(0..6)];
                let d = r.gen_range(-1..=1);
                let full = BraidWord::full_twist(3);
                let beta = conj(&w(3, &[1]).pow(k).compose(&full.pow(d)).unwrap(), &g);
                let a = r.gen_range(-3..=3);
                let e = r.gen_range(-1..=1);
                let alpha = conj(&w(3, &[1]).pow(a).compose(&full.pow(e)).unwrap(), &g);
                CentralizerInstance { family: "B3-reducible", alpha, beta, s: r.gen_range(1..=5) }
            }
            2 => {
                // pseudo-Anosov in B3: conjugates of (s1 s2^-1)^k
                let g = random_word(r, 3, 5);
                let base = w(3, &[1, -2]);
                let full = BraidWord::full_twist(3);
                let k = [1, 2, -1, 3][r.gen_range(0..4)];
                let beta = conj(&base.pow(k).compose(&full.pow(r.gen_range(-1..=1))).unwrap(), &g);
                let alpha = conj(&base.pow(r.gen_range(-2..=2)).compose(&full.pow(r.gen_range(-1..=1))).unwrap(), &g);
                CentralizerInstance { family: "B3-pA", alpha, beta, s: r.gen_range(1..=4) }
            }
            3 => {
                // tube swap in B4: beta = s1^a s3^b T with T exchanging the pairs
                let g = random_word(r, 4, 3);
                let t = w(4, &[2, 1, 3, 2]);
                let a = r.gen_range(-2..=2);
                let b = r.gen_range(-2..=2);
                let odd = r.gen_bool(0.5);
                let core = w(4, &[1])
                    .pow(a)
                    .compose(&w(4, &[3]).pow(b))
                    .unwrap()
                    .compose(&t.pow(if odd { 1 } else { 2 }))
                    .unwrap();
                let beta = conj(&core, &g);
                let (alpha, s) = if odd {
                    (conj(&w(4, &[1]).pow(r.gen_range(1..=3)), &g), 2)
                } else {
                    (conj(&w(4, &[3]).pow(r.gen_range(-2..=2)), &g), 1)
                };
                CentralizerInstance { family: "B4-tube-swap", alpha, beta, s }
            }
            4 => {
                let g = random_word(r, 4, 3);
                let base = w(4, &[1, 2, -3]);
                let k = [1, 2, -1][r.gen_range(0..3)];
                let beta = conj(&base.pow(k), &g);
                let alpha = conj(&base.pow(r.gen_range(-2..=2)), &g);
                CentralizerInstance { family: "B4-product", alpha, beta, s: r.gen_range(1..=3) }
            }
            _ => {
                let g = random_word(r, 4, 4);
                let delta = w(4, &[1, 2, 3]);
                let k = [1, -1, 2, 3][r.gen_range(0..4)];
                let beta = conj(&delta.pow(k), &g);
                let alpha = random_word(r, 4, 6);
                CentralizerInstance { family: "B4-periodic", alpha, beta, s: 4 }
            }
        };
        out.push(inst);
    }
    out
}

/// Length-2 systems whose orbits are checked against the length-2 bound.
pub fn length2_corpus() -> Vec<BraidSystem> {
    let mut out = vec![
        BraidSystem::parse(3, &["s1^-1", "s1 s1 s2"]).unwrap(),
        BraidSystem::parse(4, &["s1", "s2 s3"]).unwrap(),
        BraidSystem::parse(3, &["s1", "s2"]).unwrap(),
        BraidSystem::parse(3, &["s1", "s1"]).unwrap(),
        BraidSystem::parse(3, &["s1 s2", "s1"]).unwrap(),
    ];
    for m in 3..=7 {
        let tail: Vec<i32> = (2..m as i32).collect();
        out.push(BraidSystem::new(m, &[w(m, &[1]), w(m, &tail)]).unwrap());
    }
    out
}

/// Degree-3 systems whose full orbits are checked against the size bounds.
pub fn degree3_corpus() -> Vec<BraidSystem> {
    [
        vec!["s1", "s2", "s1"],
        vec!["s1 s1", "s1", "s2"],
        vec!["s1 s2", "s1", "s2"],
        vec!["s2", "s1 s2", "s1"],
        vec!["s1", "s1 s1", "s2"],
        vec!["s1", "s1", "s1", "s2"],
        vec!["s1", "D D s1", "D D D D s1", "D D D D D D s2"],
        vec!["s1", "s1", "s1", "s1", "s1"],
    ]
    .iter()
    .map(|e| BraidSystem::parse(3, e).unwrap())
    .collect()
}

/// Runs every check over the built-in corpus.
pub fn verify_paper(seed: u64) -> Vec<TheoremReport> {
    let mut root = TheoremReport::new("root-centralizer");
    let mut tally = [0usize; 3];
    for inst in centralizer_families(seed, 240) {
        match check_root_centralizer(&inst.alpha, &inst.beta, inst.s) {
            Ok(r) => root.absorb(r),
            Err(e) => root.violations.push(format!("{}: {e}", inst.family)),
        }
        if let Ok(t) = classify_nf(&nf(&inst.beta), &ClassifyOptions::default()) {
            tally[t as usize] += 1;
        }
    }
    root.notes.push(format!(
        "beta classes: periodic={} reducible={} pA={}",
        tally[0], tally[1], tally[2]
    ));
    let fixed = [
        (BraidWord::full_twist(3), w(3, &[1, -2, 1]), 1),
        (w(3, &[1]), w(3, &[1, 1]), 5),
        (w(3, &[1, 2, 1]), w(3, &[1, 2]), 3),
    ];
    for (a, b, s) in &fixed {
        match check_root_centralizer(a, b, *s) {
            Ok(r) => root.absorb(r),
            Err(e) => root.violations.push(e.to_string()),
        }
    }

    root.notes.push(
        "B3 reducible family uses exterior twists Δ^2d only; other exterior twists are not covered".into(),
    );

    let mut power = TheoremReport::new("power-commutation");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut pairs = vec![
        (w(3, &[1]), w(3, &[1, 2, 1, 1, 2, 1, 1]), 1),
        (w(3, &[1, 2]), w(3, &[2, 1]), 3),
    ];
    for _ in 0..40 {
        let g = random_word(&mut rng, 3, 4);
        let h = random_word(&mut rng, 3, 4);
        let a = conj(&w(3, &[1, 2]).pow(rng.gen_range(1..=2)), &g);
        let b = conj(&w(3, &[1, 2, 1]).pow(rng.gen_range(1..=3)), &h);
        pairs.push((a, b, 6));
    }
    for (a, b, m) in &pairs {
        match check_corollary_consequence(a, b, *m) {
            Ok(r) => power.absorb(r),
            Err(e) => power.violations.push(e.to_string()),
        }
    }

    let mut len2 = TheoremReport::new("length-2-bound");
    for s in length2_corpus() {
        match check_length2_bound(&s, 2000) {
            Ok(r) => len2.absorb(r),
            Err(e) => len2.violations.push(e.to_string()),
        }
    }

    let mut deg3 = TheoremReport::new("degree-3-bounds");
    for s in degree3_corpus() {
        match check_degree3_bounds(&s, 5000) {
            Ok(r) => deg3.absorb(r),
            Err(e) => deg3.violations.push(e.to_string()),
        }
    }
    vec![root, power, len2, deg3]
}
