//! Dynkin quivers, their double quivers and adjacency data.
//!
//! Vertices are `0..n` internally and `1..=n` in every textual format.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("malformed quiver specification: {0}")]
    Malformed(String),
    #[error("not a simply laced Dynkin quiver: {0}")]
    NonDynkin(String),
}

/// Simply laced Dynkin type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            DynkinType::A(n) | DynkinType::D(n) => n,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
            DynkinType::E8 => 8,
        }
    }

    /// Order of the Weyl group, from the classical closed forms.
    pub fn weyl_group_order(self) -> u128 {
        fn factorial(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            DynkinType::A(n) => factorial(n + 1),
            DynkinType::D(n) => (1u128 << (n - 1)) * factorial(n),
            DynkinType::E6 => 51_840,
            DynkinType::E7 => 2_903_040,
            DynkinType::E8 => 696_729_600,
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E6 => 36,
            DynkinType::E7 => 63,
            DynkinType::E8 => 120,
        }
    }

    /// Closed-form description printed next to counts.
    pub fn order_formula(self) -> &'static str {
        match self {
            DynkinType::A(_) => "(n+1)!",
            DynkinType::D(_) => "2^(n-1) n!",
            DynkinType::E6 | DynkinType::E7 | DynkinType::E8 => "table",
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => write!(f, "E6"),
            DynkinType::E7 => write!(f, "E7"),
            DynkinType::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = QuiverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| QuiverError::Malformed("empty type code".into()))?
            .to_ascii_uppercase();
        let n: usize = chars
            .as_str()
            .parse()
            .map_err(|_| QuiverError::Malformed(format!("bad type code {s:?}")))?;
        match (letter, n) {
            ('A', n) if n >= 1 => Ok(DynkinType::A(n)),
            ('D', n) if n >= 4 => Ok(DynkinType::D(n)),
            ('E', 6) => Ok(DynkinType::E6),
            ('E', 7) => Ok(DynkinType::E7),
            ('E', 8) => Ok(DynkinType::E8),
            ('A' | 'D' | 'E', _) => Err(QuiverError::NonDynkin(format!("{s} is not a Dynkin type"))),
            _ => Err(QuiverError::Malformed(format!("bad type code {s:?}"))),
        }
    }
}

/// Oriented simply laced Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinQuiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    type_tag: DynkinType,
}

/// JSON edge list: `{"vertices": n, "arrows": [[s, e], ...]}` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub vertices: usize,
    pub arrows: Vec<[usize; 2]>,
}

impl DynkinQuiver {
    /// Validates an arrow list (0-based) and classifies its underlying graph.
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        let type_tag = classify(n, &arrows)?;
        Ok(DynkinQuiver { n, arrows, type_tag })
    }

    /// Quiver of the given type with the default orientation:
    /// A_n is linear `1 -> 2 -> ... -> n`; D_n has `n-1 -> n-2`, `n -> n-2`
    /// and the spine `n-2 -> ... -> 1`; E_n uses Bourbaki numbering (branch
    /// vertex 4, vertex 2 attached to it) with every arrow pointing toward 4.
    pub fn standard(t: DynkinType) -> Self {
        let arrows: Vec<(usize, usize)> = match t {
            DynkinType::A(n) => (1..n).map(|i| (i, i + 1)).collect(),
            DynkinType::D(n) => {
                let mut a = vec![(n - 1, n - 2), (n, n - 2)];
                a.extend((1..n - 2).rev().map(|k| (k + 1, k)));
                a
            }
            DynkinType::E6 | DynkinType::E7 | DynkinType::E8 => {
                let n = t.rank();
                let mut a = vec![(1, 3), (3, 4), (2, 4)];
                a.extend((5..=n).map(|k| (k, k - 1)));
                a
            }
        };
        let arrows = arrows.into_iter().map(|(s, e)| (s - 1, e - 1)).collect();
        DynkinQuiver::new(t.rank(), arrows).expect("standard orientation is Dynkin")
    }

    pub fn from_edge_list(doc: &EdgeList) -> Result<Self, QuiverError> {
        let mut arrows = Vec::with_capacity(doc.arrows.len());
        for &[s, e] in &doc.arrows {
            if s == 0 || e == 0 || s > doc.vertices || e > doc.vertices {
                return Err(QuiverError::Malformed(format!(
                    "arrow [{s},{e}] outside vertices 1..={}",
                    doc.vertices
                )));
            }
            arrows.push((s - 1, e - 1));
        }
        DynkinQuiver::new(doc.vertices, arrows)
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            vertices: self.n,
            arrows: self.arrows.iter().map(|&(s, e)| [s + 1, e + 1]).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Arrows as 0-based `(source, target)` pairs.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.type_tag
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .arrows
            .iter()
            .filter_map(|&(s, e)| {
                if s == v {
                    Some(e)
                } else if e == v {
                    Some(s)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Reverses a single arrow; the result has the same underlying graph.
    pub fn reverse_arrow(&self, k: usize) -> Self {
        let mut arrows = self.arrows.clone();
        let (s, e) = arrows[k];
        arrows[k] = (e, s);
        DynkinQuiver {
            n: self.n,
            arrows,
            type_tag: self.type_tag,
        }
    }

    pub fn double(&self) -> DoubleQuiver {
        double_quiver(self)
    }

    pub fn m_matrix(&self) -> MMatrix {
        m_matrix(self)
    }
}

/// Parses a type code (`"A3"`, `"D4"`, `"E6"`, default orientation) or a JSON
/// edge list document.
pub fn parse_quiver(spec: &str) -> Result<DynkinQuiver, QuiverError> {
    let spec = spec.trim();
    if spec.starts_with('{') {
        let doc: EdgeList = serde_json::from_str(spec)
            .map_err(|e| QuiverError::Malformed(format!("edge list: {e}")))?;
        DynkinQuiver::from_edge_list(&doc)
    } else {
        Ok(DynkinQuiver::standard(spec.parse()?))
    }
}

fn classify(n: usize, arrows: &[(usize, usize)]) -> Result<DynkinType, QuiverError> {
    if n == 0 {
        return Err(QuiverError::Malformed("quiver has no vertices".into()));
    }
    let mut adj = vec![Vec::new(); n];
    for &(s, e) in arrows {
        if s >= n || e >= n {
            return Err(QuiverError::Malformed(format!("arrow ({s},{e}) out of range")));
        }
        if s == e {
            return Err(QuiverError::NonDynkin(format!("loop at vertex {}", s + 1)));
        }
        if adj[s].contains(&e) {
            return Err(QuiverError::NonDynkin(format!(
                "multiple edges between {} and {}",
                s + 1,
                e + 1
            )));
        }
        adj[s].push(e);
        adj[e].push(s);
    }
    if arrows.len() != n - 1 {
        return Err(QuiverError::NonDynkin("underlying graph is not a tree".into()));
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(QuiverError::NonDynkin("underlying graph is disconnected".into()));
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    if branch.is_empty() {
        return Ok(DynkinType::A(n));
    }
    if branch.len() > 1 || adj[branch[0]].len() > 3 {
        return Err(QuiverError::NonDynkin("too many branches".into()));
    }
    let b = branch[0];
    let mut arms: Vec<usize> = adj[b]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (b, start, 1);
            while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Ok(DynkinType::D(n)),
        [1, 2, 2] => Ok(DynkinType::E6),
        [1, 2, 3] => Ok(DynkinType::E7),
        [1, 2, 4] => Ok(DynkinType::E8),
        _ => Err(QuiverError::NonDynkin(format!("branch arms {arms:?}"))),
    }
}

/// Arrow of the double quiver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleArrow {
    pub source: usize,
    pub target: usize,
    /// `true` for arrows of the original quiver, `false` for starred ones.
    pub original: bool,
    /// Index of the paired arrow `a <-> a*`.
    pub star: usize,
    pub label: String,
}

/// Double quiver: each arrow `a` of the base quiver together with its reverse
/// `a*`. Arrow `2k` is the `k`-th base arrow and `2k + 1` its star.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleQuiver {
    pub base: DynkinQuiver,
    pub arrows: Vec<DoubleArrow>,
}

impl DoubleQuiver {
    pub fn star(&self, a: usize) -> usize {
        self.arrows[a].star
    }
}

pub fn double_quiver(q: &DynkinQuiver) -> DoubleQuiver {
    let single = q.arrows.len() == 1;
    let mut arrows = Vec::with_capacity(2 * q.arrows.len());
    for (k, &(s, e)) in q.arrows.iter().enumerate() {
        let name = if single { "a".to_string() } else { format!("a{}", k + 1) };
        arrows.push(DoubleArrow {
            source: s,
            target: e,
            original: true,
            star: 2 * k + 1,
            label: name.clone(),
        });
        arrows.push(DoubleArrow {
            source: e,
            target: s,
            original: false,
            star: 2 * k,
            label: format!("{name}*"),
        });
    }
    DoubleQuiver {
        base: q.clone(),
        arrows,
    }
}

/// Symmetric adjacency counts `m_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MMatrix {
    n: usize,
    entries: Vec<i32>,
}

impl MMatrix {
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.n + j]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }
}

pub fn m_matrix(q: &DynkinQuiver) -> MMatrix {
    let n = q.n;
    let mut entries = vec![0; n * n];
    for &(s, e) in &q.arrows {
        entries[s * n + e] += 1;
        entries[e * n + s] += 1;
    }
    MMatrix { n, entries }
}
