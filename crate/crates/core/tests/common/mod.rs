//! Helpers shared by integration tests.
#![allow(dead_code)]

use hurwitz_core::{BraidSystem, BraidWord, GarsideNf};
use rand::Rng;

/// Relators of the Artin presentation of `B_m`, as signed letters.
pub fn relators(m: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for i in 1..m as i32 {
        for j in i + 2..m as i32 {
            out.push(vec![i, j, -i, -j]);
        }
        if i + 1 < m as i32 {
            out.push(vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]);
        }
    }
    out
}

/// Inserts relators, or their inverses, at the given positions. The result
/// is the same braid as `w`.
pub fn rewrite(w: &BraidWord, picks: &[(usize, usize, bool)]) -> BraidWord {
    let rels = relators(w.degree());
    if rels.is_empty() {
        return w.clone();
    }
    let mut letters: Vec<i32> = w.letters().iter().map(|l| l.index() as i32 * l.sign() as i32).collect();
    for &(pos, r, inverted) in picks {
        let mut rel = rels[r % rels.len()].clone();
        if inverted {
            rel = rel.iter().rev().map(|x| -x).collect();
        }
        let at = pos % (letters.len() + 1);
        letters.splice(at..at, rel);
    }
    BraidWord::from_signed(w.degree(), &letters)
}

pub fn random_rewrite<R: Rng>(rng: &mut R, w: &BraidWord) -> BraidWord {
    let picks: Vec<(usize, usize, bool)> = (0..rng.gen_range(1..=5))
        .map(|_| (rng.gen_range(0..64), rng.gen_range(0..32), rng.gen_bool(0.5)))
        .collect();
    rewrite(w, &picks)
}

pub fn entry(s: &BraidSystem, i: usize) -> GarsideNf {
    s.entries()[i - 1].clone()
}

pub fn product(s: &BraidSystem, lo: usize, hi: usize) -> GarsideNf {
    (lo..=hi).fold(GarsideNf::identity(s.degree()), |c, i| c.mul(&entry(s, i)))
}

/// `s · c_i^k`: entries 1 and i+1 conjugated by `(b1 b_{i+1})^k`, entries
/// 2..=i by `(b_{i+1} b1)^-k (b1 b_{i+1})^k`.
pub fn pure_generator_power(s: &BraidSystem, i: usize, k: i64) -> Vec<GarsideNf> {
    let x = entry(s, 1).mul(&entry(s, i + 1)).pow(k);
    let y = entry(s, i + 1).mul(&entry(s, 1)).pow(-k).mul(&x);
    let mut e = s.entries().to_vec();
    e[0] = entry(s, 1).conjugate(&x);
    e[i] = entry(s, i + 1).conjugate(&x);
    for t in 2..=i {
        e[t - 1] = entry(s, t).conjugate(&y);
    }
    e
}

/// `s · (c_1 ⋯ c_j)^k` with `C = b1 ⋯ b_{j+1}`.
pub fn pure_prefix_power(s: &BraidSystem, j: usize, k: i64) -> Vec<GarsideNf> {
    let c = product(s, 1, j + 1);
    let y = entry(s, 1).inverse().mul(&c).pow(-k).mul(&c.pow(k));
    let mut e = s.entries().to_vec();
    e[0] = entry(s, 1).conjugate(&c.pow(k));
    for t in 2..=j + 1 {
        e[t - 1] = entry(s, t).conjugate(&y);
    }
    e
}

/// `s · Δ^{2p}` for the half twist on strands i..=j: that block conjugated by
/// `(b_i ⋯ b_j)^p`.
pub fn block_twist_power(s: &BraidSystem, i: usize, j: usize, p: i64) -> Vec<GarsideNf> {
    let c = product(s, i, j).pow(p);
    let mut e = s.entries().to_vec();
    for t in i..=j {
        e[t - 1] = entry(s, t).conjugate(&c);
    }
    e
}
