//! Labeled orbit graphs of length-3 systems in `B_3` under the free
//! subgroup `F = <c1, c2>`, `c1 = s1^2`, `c2 = s1^-1 s2^2 s1`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::hurwitz::{closure, pure_generators, BraidSystem};

/// Vertices are sorted by canonical key; `edge1[v]` and `edge2[v]` are the
/// images of vertex `v` under `c1` and `c2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitGraph {
    keys: Vec<String>,
    edge1: Vec<usize>,
    edge2: Vec<usize>,
    exponent_sums: Option<[i64; 3]>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
}

impl OrbitGraph {
    /// Full closure of `s` under `c1^±1, c2^±1`.
    pub fn build(s: &BraidSystem, cap: usize) -> Result<OrbitGraph> {
        if s.len() != 3 || s.degree() != 3 {
            return Err(Error::Precondition(format!(
                "orbit graphs need a length-3 system of degree 3, got length {} degree {}",
                s.len(),
                s.degree()
            )));
        }
        if cap == 0 {
            return Err(Error::Precondition("cap must be positive".into()));
        }
        let c = pure_generators(3);
        let gens = [c[0].clone(), c[0].inverse(), c[1].clone(), c[1].inverse()];
        let mut members = closure(s, &gens, cap).map_err(|_| Error::OrbitCapExceeded { cap })?;
        members.sort_by_cached_key(BraidSystem::key);
        let keys: Vec<String> = members.iter().map(BraidSystem::key).collect();
        let index = |t: &BraidSystem| keys.binary_search(&t.key()).expect("orbit is closed");
        let edge1 = members.iter().map(|v| index(&v.act_word(&c[0]).unwrap())).collect();
        let edge2 = members.iter().map(|v| index(&v.act_word(&c[1]).unwrap())).collect();
        let e: Vec<i64> = s.entries().iter().map(|x| x.exponent_sum()).collect();
        Ok(OrbitGraph {
            keys,
            edge1,
            edge2,
            exponent_sums: Some([e[0], e[1], e[2]]),
        })
    }

    /// A graph given directly by its edge maps, with placeholder vertex names.
    pub fn from_edges(edge1: Vec<usize>, edge2: Vec<usize>) -> Result<OrbitGraph> {
        if edge1.is_empty() || edge1.len() != edge2.len() || !is_permutation(&edge1) || !is_permutation(&edge2) {
            return Err(Error::NotAPermutation);
        }
        Ok(OrbitGraph {
            keys: (0..edge1.len()).map(|i| format!("v{i}")).collect(),
            edge1,
            edge2,
            exponent_sums: None,
        })
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[String] {
        &self.keys
    }

    pub fn edge1(&self) -> &[usize] {
        &self.edge1
    }

    pub fn edge2(&self) -> &[usize] {
        &self.edge2
    }

    /// Entry exponent sums of the generating system (constant on the orbit).
    pub fn exponent_sums(&self) -> Option<[i64; 3]> {
        self.exponent_sums
    }

    pub fn edge(&self, label: u8) -> &[usize] {
        if label == 1 {
            &self.edge1
        } else {
            &self.edge2
        }
    }

    /// `v · (c1 c2)^r`.
    pub fn alternate(&self, v: usize, r: usize) -> usize {
        (0..r).fold(v, |u, _| self.edge2[self.edge1[u]])
    }

    /// `v · (c2 c1)^r`.
    pub fn alternate_from_2(&self, v: usize, r: usize) -> usize {
        (0..r).fold(v, |u, _| self.edge1[self.edge2[u]])
    }

    pub fn is_simple(&self, v: usize) -> bool {
        self.edge1[v] == v || self.edge2[v] == v
    }

    pub fn system_type(&self) -> Option<SystemType> {
        self.exponent_sums.map(SystemType::from_exponent_sums)
    }

    /// DOT digraph with vertices `v0..` in key order and edges labeled by generator.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph orbit {\n");
        for (i, k) in self.keys.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{}\"];", k.replace('"', "\\\""));
        }
        for label in [1u8, 2] {
            for (u, &v) in self.edge(label).iter().enumerate() {
                let _ = writeln!(out, "  v{u} -> v{v} [label=\"{label}\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Exponent-sum class of a length-3 system mod 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemType {
    TwoTwo,
    TwoThree,
    ThreeTwo,
    ThreeThree,
}

impl SystemType {
    pub fn from_exponent_sums(e: [i64; 3]) -> SystemType {
        let r = e.map(|x| x.rem_euclid(6));
        let two = |x: i64| x == 2 || x == 4;
        let one = |x: i64| x == 1 || x == 5;
        match r {
            [a, b, c] if two(a) && one(b) && one(c) => SystemType::TwoTwo,
            [a, b, c] if one(a) && two(b) && one(c) => SystemType::TwoThree,
            [a, b, c] if one(a) && one(b) && two(c) => SystemType::ThreeTwo,
            _ => SystemType::ThreeThree,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SystemType::TwoTwo => "(2,2)",
            SystemType::TwoThree => "(2,3)",
            SystemType::ThreeTwo => "(3,2)",
            SystemType::ThreeThree => "(3,3)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triangle {
    pub label: u8,
    /// Vertices in cycle order starting from the smallest.
    pub vertices: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFeatures {
    pub simple_vertices: Vec<usize>,
    /// Distinct cycle lengths of `c1` and `c2`.
    pub cycle_lengths: [BTreeSet<usize>; 2],
    pub triangles: Vec<Triangle>,
    pub special_triangles: Vec<Triangle>,
    /// For each vertex, the least `2r > 0` with `v · (c1 c2)^r = v`, if any.
    pub alternate_loop_lengths: Vec<Option<usize>>,
}

fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut u = start;
        while !seen[u] {
            seen[u] = true;
            cyc.push(u);
            u = p[u];
        }
        out.push(cyc);
    }
    out
}

pub fn features(g: &OrbitGraph) -> GraphFeatures {
    let n = g.len();
    let simple_vertices: Vec<usize> = (0..n).filter(|&v| g.is_simple(v)).collect();
    let mut cycle_lengths = [BTreeSet::new(), BTreeSet::new()];
    let mut triangles = Vec::new();
    for label in [1u8, 2] {
        for c in cycles(g.edge(label)) {
            cycle_lengths[label as usize - 1].insert(c.len());
            if c.len() == 3 {
                triangles.push(Triangle {
                    label,
                    vertices: [c[0], c[1], c[2]],
                });
            }
        }
    }
    let special_triangles = triangles
        .iter()
        .filter(|t| t.vertices.iter().all(|&v| !g.is_simple(v)))
        .cloned()
        .collect();
    let alternate_loop_lengths = (0..n)
        .map(|v| {
            let mut u = g.alternate(v, 1);
            for r in 1..=n {
                if u == v {
                    return Some(2 * r);
                }
                u = g.alternate(u, 1);
            }
            None
        })
        .collect();
    GraphFeatures {
        simple_vertices,
        cycle_lengths,
        triangles,
        special_triangles,
        alternate_loop_lengths,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub vertex: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StructureReport {
    pub violations: Vec<Violation>,
    /// Named checks that are not implemented.
    pub unchecked: Vec<&'static str>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Forbidden configurations whose shape is only known from a figure.
pub const UNCHECKED_CONFIGURATIONS: [&str; 3] = ["F2", "F3", "F4"];

pub fn check_structure(g: &OrbitGraph) -> StructureReport {
    let mut report = StructureReport {
        violations: Vec::new(),
        unchecked: UNCHECKED_CONFIGURATIONS.to_vec(),
    };
    let mut push = |rule, vertex, detail: String| {
        report.violations.push(Violation { rule, vertex, detail })
    };
    for label in [1u8, 2] {
        let cs = cycles(g.edge(label));
        for c in &cs {
            if c.len() > 3 {
                push("closed-path-length", c[0], format!("label {label} cycle of length {}", c.len()));
            }
        }
        let two = cs.iter().find(|c| c.len() == 2);
        let three = cs.iter().find(|c| c.len() == 3);
        if let (Some(a), Some(_)) = (two, three) {
            push(
                "closed-path-mixed",
                a[0],
                format!("label {label} has closed paths of lengths 2 and 3"),
            );
        }
    }
    for v in 0..g.len() {
        if g.alternate(v, 6) != v {
            push("alternate-12-loop", v, "(c1 c2)^6 moves the vertex".into());
        }
        if g.alternate(v, 1) == v {
            push("F1", v, "fixed by c1 c2".into());
        }
    }
    match g.system_type() {
        Some(SystemType::TwoTwo) => {
            for v in 0..g.len() {
                if g.alternate(v, 3) != v {
                    push("alternate-6-loop", v, "(c1 c2)^3 moves the vertex".into());
                }
            }
        }
        Some(SystemType::TwoThree) => {
            for v in 0..g.len() {
                if g.alternate(v, 2) == v {
                    push("alternate-4-not-loop", v, "(c1 c2)^2 fixes the vertex".into());
                }
            }
        }
        Some(SystemType::ThreeTwo) => {
            for v in 0..g.len() {
                if g.alternate_from_2(v, 2) == v {
                    push("alternate-4-not-loop", v, "(c2 c1)^2 fixes the vertex".into());
                }
            }
        }
        _ => {}
    }
    report
}

/// Label-preserving isomorphism; returns the vertex map when one exists.
/// Both graphs are orbits of a group, hence connected, so an isomorphism is
/// determined by the image of vertex 0.
pub fn isomorphism(a: &OrbitGraph, b: &OrbitGraph) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let inv = |p: &[usize]| {
        let mut q = vec![0; p.len()];
        for (i, &j) in p.iter().enumerate() {
            q[j] = i;
        }
        q
    };
    let (ai1, ai2, bi1, bi2) = (inv(&a.edge1), inv(&a.edge2), inv(&b.edge1), inv(&b.edge2));
    'target: for t in 0..n {
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[0] = t;
        used[t] = true;
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            let pairs = [
                (a.edge1[u], b.edge1[map[u]]),
                (a.edge2[u], b.edge2[map[u]]),
                (ai1[u], bi1[map[u]]),
                (ai2[u], bi2[map[u]]),
            ];
            for (x, y) in pairs {
                if map[x] == usize::MAX {
                    if used[y] {
                        continue 'target;
                    }
                    map[x] = y;
                    used[y] = true;
                    stack.push(x);
                } else if map[x] != y {
                    continue 'target;
                }
            }
        }
        if map.iter().all(|&x| x != usize::MAX) {
            return Some(map);
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    A,
    B,
    C,
    D,
    E,
    Unknown,
}

impl Pattern {
    pub const NAMED: [Pattern; 5] = [Pattern::A, Pattern::B, Pattern::C, Pattern::D, Pattern::E];

    /// The exemplar system whose orbit graph defines the pattern.
    pub fn exemplar(self) -> Option<[&'static str; 3]> {
        match self {
            Pattern::A => Some(["s1 s1", "s1", "s2"]),
            Pattern::B => Some(["s1 s2", "s1", "s2"]),
            Pattern::C => Some(["s2", "s1 s2", "s1"]),
            Pattern::D => Some(["s1", "s1 s1", "s2"]),
            Pattern::E => Some(["s1", "s2", "s1"]),
            Pattern::Unknown => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::A => "A",
            Pattern::B => "B",
            Pattern::C => "C",
            Pattern::D => "D",
            Pattern::E => "E",
            Pattern::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn reference_graphs() -> &'static [(Pattern, OrbitGraph)] {
    static REFS: OnceLock<Vec<(Pattern, OrbitGraph)>> = OnceLock::new();
    REFS.get_or_init(|| {
        Pattern::NAMED
            .iter()
            .map(|&p| {
                let s = BraidSystem::parse(3, &p.exemplar().unwrap()).unwrap();
                (p, OrbitGraph::build(&s, 1000).unwrap())
            })
            .collect()
    })
}

/// The pattern of `g`, and whether it only matches after exchanging the
/// labels of `c1` and `c2` (as happens for (3,2)-periodic systems).
pub fn match_pattern(g: &OrbitGraph) -> Option<(Pattern, bool)> {
    let swapped = OrbitGraph {
        keys: g.keys.clone(),
        edge1: g.edge2.clone(),
        edge2: g.edge1.clone(),
        exponent_sums: None,
    };
    let found = [(g, false), (&swapped, true)].into_iter().find_map(|(h, flag)| {
        reference_graphs()
            .iter()
            .find(|(_, r)| isomorphism(h, r).is_some())
            .map(|(p, _)| (*p, flag))
    });
    found
}

pub fn classify_pattern(g: &OrbitGraph) -> Pattern {
    match_pattern(g).map_or(Pattern::Unknown, |(p, _)| p)
}

fn fmt_list<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `field=value` lines describing `g`.
pub fn feature_report(g: &OrbitGraph) -> String {
    let f = features(g);
    let tri = |t: &Triangle| format!("{}:v{}-v{}-v{}", t.label, t.vertices[0], t.vertices[1], t.vertices[2]);
    let alt: BTreeSet<String> = f
        .alternate_loop_lengths
        .iter()
        .map(|x| x.map_or("none".to_string(), |r| r.to_string()))
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "vertices={}", g.len());
    let _ = writeln!(out, "simple_vertices={}", fmt_list(f.simple_vertices.iter().map(|v| format!("v{v}"))));
    let _ = writeln!(
        out,
        "i_path_lengths=1:{};2:{}",
        fmt_list(&f.cycle_lengths[0]),
        fmt_list(&f.cycle_lengths[1])
    );
    let _ = writeln!(out, "triangles={}", fmt_list(f.triangles.iter().map(tri)));
    let _ = writeln!(out, "special_triangles={}", fmt_list(f.special_triangles.iter().map(tri)));
    let _ = writeln!(out, "alternate_loop_length={}", fmt_list(alt));
    match match_pattern(g) {
        Some((p, false)) => writeln!(out, "pattern={p}"),
        Some((p, true)) => writeln!(out, "pattern={p}\nlabels=swapped"),
        None => writeln!(out, "pattern={}", Pattern::Unknown),
    }
    .ok();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(entries: [&str; 3]) -> OrbitGraph {
        OrbitGraph::build(&BraidSystem::parse(3, &entries).unwrap(), 1000).unwrap()
    }

    #[test]
    fn swapped_labels_match() {
        let g = graph(["s1", "s2", "s1 s1"]);
        assert_eq!(match_pattern(&g), Some((Pattern::D, true)));
        assert!(feature_report(&g).ends_with("pattern=D\nlabels=swapped\n"));
        assert_eq!(match_pattern(&graph(["s1", "s1 s1", "s2"])), Some((Pattern::D, false)));
    }

    #[test]
    fn single_vertex() {
        let g = graph(["s1 s1", "s1", "s1 s1 s1"]);
        assert_eq!(g.len(), 1);
        assert_eq!((g.edge1()[0], g.edge2()[0]), (0, 0));
        assert_eq!(features(&g).simple_vertices, vec![0]);
        assert_eq!(classify_pattern(&g), Pattern::Unknown);
        let dot = g.to_dot();
        assert!(dot.contains("v0 -> v0 [label=\"1\"]"));
        assert!(dot.contains("v0 -> v0 [label=\"2\"]"));
    }

    #[test]
    fn exemplar_patterns() {
        for &p in &Pattern::NAMED {
            let g = graph(p.exemplar().unwrap());
            assert!(g.len() <= 9, "{p}: {} vertices", g.len());
            assert_eq!(classify_pattern(&g), p);
            assert!(check_structure(&g).passed(), "{p}: {:?}", check_structure(&g));
        }
    }

    #[test]
    fn triangle_examples() {
        let e = features(&graph(["s1", "s2", "s1"]));
        assert!(!e.simple_vertices.is_empty());
        assert!(e.special_triangles.is_empty());
        let c = features(&graph(["s2", "s1 s2", "s1"]));
        assert!(!c.special_triangles.is_empty());
    }

    #[test]
    fn fixed_point_of_product_is_reported() {
        // v0 -c1-> v1 -c2-> v0
        let g = OrbitGraph::from_edges(vec![1, 0], vec![1, 0]).unwrap();
        let r = check_structure(&g);
        assert!(r.violations.iter().any(|v| v.rule == "F1"));
        assert!(OrbitGraph::from_edges(vec![0, 0], vec![1, 0]).is_err());
    }

    #[test]
    fn system_types() {
        assert_eq!(SystemType::from_exponent_sums([2, 1, 1]), SystemType::TwoTwo);
        assert_eq!(SystemType::from_exponent_sums([-1, 2, 7]), SystemType::TwoThree);
        assert_eq!(SystemType::from_exponent_sums([1, 1, -2]), SystemType::ThreeTwo);
        assert_eq!(SystemType::from_exponent_sums([1, 1, 1]), SystemType::ThreeThree);
        assert_eq!(SystemType::from_exponent_sums([0, 2, 2]), SystemType::ThreeThree);
    }

    #[test]
    fn wrong_shape_rejected() {
        let s = BraidSystem::parse(3, &["s1", "s2"]).unwrap();
        assert!(OrbitGraph::build(&s, 10).is_err());
        let s = BraidSystem::parse(3, &["s1", "s2", "s1"]).unwrap();
        assert!(matches!(OrbitGraph::build(&s, 2), Err(Error::OrbitCapExceeded { cap: 2 })));
    }
}
