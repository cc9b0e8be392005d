//! Weyl groups of simply laced Dynkin type in the geometric representation.
//!
//! An element is identified by its contragredient matrix `σ*(w)`, which is a
//! faithful representation, so matrix equality is group equality. For a word
//! `w = s_{i1} ... s_{ik}` we use `σ*(w) = σ*_{ik} ... σ*_{i1}`, hence
//! `σ*(uv) = σ*(v) σ*(u)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::Rng;

use crate::quiver::{DynkinQuiver, DynkinType, MMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("invalid word {0:?}")]
    InvalidWord(String),
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i32>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<i32>]) -> Self {
        let n = rows.len();
        let data: Vec<i32> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        assert_eq!(data.len(), n * n, "matrix must be square");
        IntMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i32 {
        self.data[r * self.n + c]
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn row(&self, r: usize) -> &[i32] {
        &self.data[r * self.n..(r + 1) * self.n]
    }

    pub fn column(&self, c: usize) -> Vec<i32> {
        (0..self.n).map(|r| self.get(r, c)).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * other.data[k * n + c];
                }
            }
        }
        IntMatrix { n, data }
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|r| self.row(r).iter().zip(v).map(|(&a, &b)| a as i64 * b).sum())
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                data[c * n + r] = self.data[r * n + c];
            }
        }
        IntMatrix { n, data }
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> i64 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k * n + k] == 0 {
                match (k + 1..n).find(|&r| a[r * n + k] != 0) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    a[r * n + c] = (a[r * n + c] * a[k * n + k] - a[r * n + k] * a[k * n + c]) / prev;
                }
            }
            prev = a[k * n + k];
        }
        (sign * a[n * n - 1]) as i64
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.n {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.n {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Group element: canonical matrix `σ*(w)` plus a reduced word (0-based
/// generator indices, `w = s_{word[0]} s_{word[1]} ...`). The word is the
/// lexicographically smallest reduced word.
#[derive(Debug, Clone)]
pub struct WeylElement {
    canonical: IntMatrix,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn canonical(&self) -> &IntMatrix {
        &self.canonical
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Word with 1-based labels, `"e"` for the identity.
    pub fn word_label(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical.hash(state);
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_label())
    }
}

/// The reflection representation `σ_i` and its contragredient `σ*_i = σ_i^T`.
#[derive(Debug, Clone)]
pub struct ReflectionRep {
    pub sigma: Vec<IntMatrix>,
    pub sigma_star: Vec<IntMatrix>,
}

impl ReflectionRep {
    pub fn new(m: &MMatrix) -> Self {
        let n = m.size();
        let mut sigma = Vec::with_capacity(n);
        for i in 0..n {
            let mut s = IntMatrix::identity(n);
            // σ_i(e_j) = e_j + (m_ij - 2δ_ij) e_i: row i changes
            for j in 0..n {
                let delta = if i == j { 2 } else { 0 };
                s.data[i * n + j] += m.get(i, j) - delta;
            }
            sigma.push(s);
        }
        let sigma_star = sigma.iter().map(IntMatrix::transpose).collect();
        ReflectionRep { sigma, sigma_star }
    }
}

/// The finite root system `Φ = {σ(w) e_i}`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub roots: Vec<Vec<i64>>,
    pub positives: Vec<Vec<i64>>,
}

/// Weyl group of a Dynkin quiver with cached reflection data.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    n: usize,
    dynkin: DynkinType,
    m: MMatrix,
    rep: ReflectionRep,
    roots: RootSystem,
}

impl WeylGroup {
    pub fn new(q: &DynkinQuiver) -> Self {
        let m = q.m_matrix();
        let rep = ReflectionRep::new(&m);
        let roots = root_orbit(&rep);
        WeylGroup {
            n: q.vertex_count(),
            dynkin: q.dynkin_type(),
            m,
            rep,
            roots,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.dynkin
    }

    pub fn m_matrix(&self) -> &MMatrix {
        &self.m
    }

    pub fn reflection_rep(&self) -> &ReflectionRep {
        &self.rep
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            canonical: IntMatrix::identity(self.n),
            word: Vec::new(),
        }
    }

    /// `s_i` for a 0-based vertex `i`.
    pub fn generator(&self, i: usize) -> Result<WeylElement, WeylError> {
        if i >= self.n {
            return Err(WeylError::VertexOutOfRange(i + 1, self.n));
        }
        Ok(WeylElement {
            canonical: self.rep.sigma_star[i].clone(),
            word: vec![i],
        })
    }

    /// `σ*(w)` of an arbitrary (not necessarily reduced) 0-based word.
    pub fn canonical_of_word(&self, word: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::identity(self.n);
        for &i in word {
            m = self.rep.sigma_star[i].mul(&m);
        }
        m
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement, WeylError> {
        if let Some(&bad) = word.iter().find(|&&i| i >= self.n) {
            return Err(WeylError::VertexOutOfRange(bad + 1, self.n));
        }
        Ok(self.from_canonical(self.canonical_of_word(word)))
    }

    /// Element with the given canonical matrix; the matrix must lie in the group.
    pub fn from_canonical(&self, canonical: IntMatrix) -> WeylElement {
        let word = self.reduced_word(&canonical);
        WeylElement { canonical, word }
    }

    pub fn multiply(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        self.from_canonical(v.canonical.mul(&u.canonical))
    }

    /// `s_i w`
    pub fn left_mul(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.from_canonical(w.canonical.mul(&self.rep.sigma_star[i]))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        self.from_canonical(self.canonical_of_word(&rev))
    }

    /// Interior point `σ*(w)(1, ..., 1)` of the chamber of `w`.
    pub fn witness(&self, canonical: &IntMatrix) -> Vec<i64> {
        canonical.mul_vec(&vec![1; self.n])
    }

    /// Number of positive roots separating the chamber of `w` from `C_0`.
    pub fn length_of(&self, canonical: &IntMatrix) -> usize {
        let y = self.witness(canonical);
        self.roots
            .positives
            .iter()
            .filter(|x| dot(&y, x) < 0)
            .count()
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        w.length()
    }

    /// Whether `l(s_i w) < l(w)`.
    pub fn is_left_descent(&self, canonical: &IntMatrix, i: usize) -> bool {
        let l = self.length_of(canonical);
        self.length_of(&canonical.mul(&self.rep.sigma_star[i])) < l
    }

    pub fn left_descents(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.is_left_descent(&w.canonical, i))
            .collect()
    }

    /// Lexicographically smallest reduced word, by peeling the smallest left
    /// descent until the identity is reached.
    pub fn reduced_word(&self, canonical: &IntMatrix) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = canonical.clone();
        let mut len = self.length_of(&cur);
        while len > 0 {
            let mut peeled = false;
            for i in 0..self.n {
                let next = cur.mul(&self.rep.sigma_star[i]);
                let l = self.length_of(&next);
                if l < len {
                    word.push(i);
                    cur = next;
                    len = l;
                    peeled = true;
                    break;
                }
            }
            assert!(peeled, "matrix is not in the Weyl group");
        }
        assert_eq!(cur, IntMatrix::identity(self.n), "matrix is not in the Weyl group");
        word
    }

    /// A uniformly chosen reduced word among those reachable by peeling a
    /// random left descent at each step.
    pub fn random_reduced_word<R: Rng>(&self, w: &WeylElement, rng: &mut R) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.canonical.clone();
        let mut len = w.length();
        while len > 0 {
            let descents: Vec<usize> = (0..self.n)
                .filter(|&i| self.length_of(&cur.mul(&self.rep.sigma_star[i])) < len)
                .collect();
            let i = descents[rng.gen_range(0..descents.len())];
            word.push(i);
            cur = cur.mul(&self.rep.sigma_star[i]);
            len -= 1;
        }
        word
    }

    /// All group elements, breadth first by length; ties broken by discovery
    /// order (generators in increasing index).
    pub fn enumerate(&self) -> Vec<WeylElement> {
        let mut index: HashMap<IntMatrix, usize> = HashMap::new();
        let mut elems = vec![self.identity()];
        let mut lengths = vec![0usize];
        index.insert(elems[0].canonical.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for i in 0..self.n {
                let next = elems[k].canonical.mul(&self.rep.sigma_star[i]);
                if index.contains_key(&next) {
                    continue;
                }
                let l = self.length_of(&next);
                if l <= lengths[k] {
                    continue;
                }
                index.insert(next.clone(), elems.len());
                queue.push_back(elems.len());
                lengths.push(l);
                elems.push(WeylElement {
                    canonical: next,
                    word: Vec::new(),
                });
            }
        }
        for e in elems.iter_mut() {
            e.word = self.reduced_word(&e.canonical);
        }
        elems
    }

    /// Number of elements without listing them: `|W_S| = |W_S e_k| |W_{S - k}|`,
    /// since the stabilizer of `e_k` under `σ*` is the parabolic subgroup on
    /// the remaining generators.
    pub fn order_by_orbits(&self) -> u128 {
        let mut gens: Vec<usize> = (0..self.n).collect();
        let mut order: u128 = 1;
        while let Some(k) = gens.pop() {
            let mut start = vec![0i64; self.n];
            start[k] = 1;
            let mut seen = std::collections::HashSet::from([start.clone()]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &i in gens.iter().chain(std::iter::once(&k)) {
                    let next = self.rep.sigma_star[i].mul_vec(&v);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            order *= seen.len() as u128;
        }
        order
    }

    pub fn longest_element(&self) -> WeylElement {
        let mut cur = IntMatrix::identity(self.n);
        let mut len = 0;
        'climb: loop {
            for i in 0..self.n {
                let next = cur.mul(&self.rep.sigma_star[i]);
                let l = self.length_of(&next);
                if l > len {
                    cur = next;
                    len = l;
                    continue 'climb;
                }
            }
            break;
        }
        self.from_canonical(cur)
    }

    /// Left weak order: `u <=_L w` iff `l(w u^{-1}) + l(u) = l(w)`.
    pub fn weak_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        if u.length() > w.length() {
            return false;
        }
        let rev: Vec<usize> = u.word.iter().rev().copied().collect();
        let u_inv = self.canonical_of_word(&rev);
        // σ*(w u^{-1}) = σ*(u^{-1}) σ*(w)
        let quotient = u_inv.mul(&w.canonical);
        self.length_of(&quotient) + u.length() == w.length()
    }

    /// Hasse quiver of the left weak order, arrows pointing down:
    /// `w -> s_i w` whenever `l(s_i w) < l(w)`.
    pub fn hasse_weak(&self) -> HasseGraph {
        let vertices = self.enumerate();
        let index: HashMap<&IntMatrix, usize> =
            vertices.iter().enumerate().map(|(k, w)| (&w.canonical, k)).collect();
        let mut edges = Vec::new();
        for (k, w) in vertices.iter().enumerate() {
            for i in 0..self.n {
                let next = w.canonical.mul(&self.rep.sigma_star[i]);
                if self.length_of(&next) < w.length() {
                    edges.push(HasseEdge {
                        from: k,
                        to: index[&next],
                        vertex: i,
                    });
                }
            }
        }
        HasseGraph { vertices, edges }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn root_orbit(rep: &ReflectionRep) -> RootSystem {
    let n = rep.sigma.len();
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        if seen.insert(e.clone()) {
            queue.push_back(e);
        }
    }
    while let Some(v) = queue.pop_front() {
        for s in &rep.sigma {
            let next = s.mul_vec(&v);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let roots: Vec<Vec<i64>> = seen.into_iter().collect();
    let positives = roots.iter().filter(|r| r.iter().all(|&x| x >= 0)).cloned().collect();
    RootSystem { roots, positives }
}

/// Edge `from -> to` of a Hasse quiver, labelled by the generator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    pub vertex: usize,
}

#[derive(Debug, Clone)]
pub struct HasseGraph {
    pub vertices: Vec<WeylElement>,
    pub edges: Vec<HasseEdge>,
}

/// Left weak order on an enumerated group, with precomputed comparability.
#[derive(Debug, Clone)]
pub struct WeakOrder {
    pub elements: Vec<WeylElement>,
    index: HashMap<IntMatrix, usize>,
    /// `below[w]` holds every `u` with `u <=_L w`, as a bitset.
    below: Vec<Vec<u64>>,
}

impl WeakOrder {
    pub fn new(group: &WeylGroup) -> Self {
        let elements = group.enumerate();
        let size = elements.len();
        let words = size.div_ceil(64);
        let index: HashMap<IntMatrix, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.canonical.clone(), k))
            .collect();
        let mut below = vec![vec![0u64; words]; size];
        // elements are sorted by length, so covers are processed first
        for k in 0..size {
            below[k][k / 64] |= 1 << (k % 64);
            for i in 0..group.rank() {
                let next = elements[k].canonical.mul(&group.reflection_rep().sigma_star[i]);
                let j = index[&next];
                if elements[j].length() < elements[k].length() {
                    let (lo, hi) = below.split_at_mut(k);
                    for (dst, src) in hi[0].iter_mut().zip(&lo[j]) {
                        *dst |= *src;
                    }
                }
            }
        }
        WeakOrder {
            elements,
            index,
            below,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.index[&w.canonical]
    }

    pub fn leq_index(&self, u: usize, w: usize) -> bool {
        self.below[w][u / 64] >> (u % 64) & 1 == 1
    }

    pub fn leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        self.leq_index(self.index_of(u), self.index_of(w))
    }

    /// Greatest common lower bound, by brute force over the poset.
    pub fn meet_index(&self, u: usize, w: usize) -> usize {
        let common: Vec<usize> = (0..self.len())
            .filter(|&z| self.leq_index(z, u) && self.leq_index(z, w))
            .collect();
        *common
            .iter()
            .find(|&&z| common.iter().all(|&y| self.leq_index(y, z)))
            .expect("weak order is a lattice")
    }

    pub fn join_index(&self, u: usize, w: usize) -> usize {
        let common: Vec<usize> = (0..self.len())
            .filter(|&z| self.leq_index(u, z) && self.leq_index(w, z))
            .collect();
        *common
            .iter()
            .find(|&&z| common.iter().all(|&y| self.leq_index(z, y)))
            .expect("weak order is a lattice")
    }

    pub fn meet(&self, u: &WeylElement, w: &WeylElement) -> WeylElement {
        self.elements[self.meet_index(self.index_of(u), self.index_of(w))].clone()
    }

    pub fn join(&self, u: &WeylElement, w: &WeylElement) -> WeylElement {
        self.elements[self.join_index(self.index_of(u), self.index_of(w))].clone()
    }
}

/// Parses a word of 1-based generator indices separated by whitespace and/or
/// commas; the empty string is the identity. Returns 0-based indices.
pub fn parse_word(text: &str, n: usize) -> Result<Vec<usize>, WeylError> {
    let mut out = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
        if tok.is_empty() {
            continue;
        }
        let tok = tok.strip_prefix('s').unwrap_or(tok);
        let i: usize = tok
            .parse()
            .map_err(|_| WeylError::InvalidWord(text.to_string()))?;
        if i == 0 || i > n {
            return Err(WeylError::VertexOutOfRange(i, n));
        }
        out.push(i - 1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn group(code: &str) -> WeylGroup {
        WeylGroup::new(&parse_quiver(code).unwrap())
    }

    fn m(rows: &[&[i32]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn a2_generators_and_products() {
        let g = group("A2");
        assert_eq!(*g.generator(0).unwrap().canonical(), m(&[&[-1, 0], &[1, 1]]));
        assert_eq!(*g.generator(1).unwrap().canonical(), m(&[&[1, 1], &[0, -1]]));
        let s1 = g.generator(0).unwrap();
        let s2 = g.generator(1).unwrap();
        assert!(g.multiply(&s1, &s1).is_identity());
        let s1s2 = g.multiply(&s1, &s2);
        assert_eq!(*s1s2.canonical(), m(&[&[0, 1], &[-1, -1]]));
        assert_eq!(s1s2.word(), &[0, 1]);
        let w0 = g.longest_element();
        assert_eq!(*w0.canonical(), m(&[&[0, -1], &[-1, 0]]));
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.word(), &[0, 1, 0]);
        assert_eq!(g.left_descents(&w0), vec![0, 1]);
        assert!(g.left_descents(&g.identity()).is_empty());
        assert!(g.generator(2).is_err());
    }

    #[test]
    fn braid_relations_on_generators() {
        for code in ["A3", "D4", "E6"] {
            let g = group(code);
            let n = g.rank();
            let id = IntMatrix::identity(n);
            for i in 0..n {
                let s = &g.reflection_rep().sigma_star[i];
                assert_eq!(s.mul(s), id);
                assert_eq!(g.reflection_rep().sigma[i].mul(&g.reflection_rep().sigma[i]), id);
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let order = if g.m_matrix().get(i, j) == 1 { 3 } else { 2 };
                    let p = s.mul(&g.reflection_rep().sigma_star[j]);
                    let mut acc = IntMatrix::identity(n);
                    for _ in 0..order {
                        acc = acc.mul(&p);
                    }
                    assert_eq!(acc, id, "{code} braid ({i},{j})");
                }
            }
        }
    }

    /// Inversion count of the permutation obtained by composing adjacent
    /// transpositions, an oracle for lengths in type A.
    fn perm_length(n: usize, word: &[usize]) -> usize {
        let mut p: Vec<usize> = (0..=n).collect();
        for &i in word {
            p.swap(i, i + 1);
        }
        (0..=n).tuple_combinations().filter(|&(a, b)| p[a] > p[b]).count()
    }

    #[test]
    fn type_a_lengths_match_inversions() {
        let g = group("A3");
        let elems = g.enumerate();
        assert_eq!(elems.len(), 24);
        for w in &elems {
            assert_eq!(w.length(), perm_length(3, w.word()));
        }
        assert_eq!(g.longest_element().length(), 6);
    }

    #[test]
    fn enumeration_counts() {
        for (code, count) in [("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("A5", 720), ("D4", 192), ("D5", 1920)] {
            let g = group(code);
            let elems = g.enumerate();
            assert_eq!(elems.len(), count, "{code}");
            let distinct: std::collections::HashSet<_> = elems.iter().map(|w| w.canonical().clone()).collect();
            assert_eq!(distinct.len(), count);
            assert_eq!(g.order_by_orbits(), count as u128);
            assert_eq!(g.dynkin_type().weyl_group_order(), count as u128);
        }
    }

    #[test]
    fn orbit_counts_for_exceptional_types() {
        for code in ["E6", "E7", "E8"] {
            let g = group(code);
            assert_eq!(g.order_by_orbits(), g.dynkin_type().weyl_group_order(), "{code}");
            assert_eq!(g.roots().positives.len(), g.dynkin_type().positive_root_count());
        }
    }

    #[test]
    fn roots() {
        assert_eq!(group("A1").roots().roots, vec![vec![-1], vec![1]]);
        for (code, count) in [("A2", 6), ("A3", 12), ("D4", 24), ("E6", 72)] {
            let r = group(code).roots().clone();
            assert_eq!(r.roots.len(), count);
            for x in &r.roots {
                let neg: Vec<i64> = x.iter().map(|v| -v).collect();
                assert!(r.roots.contains(&neg));
                assert!(x.iter().all(|&v| v >= 0) || x.iter().all(|&v| v <= 0));
            }
        }
    }

    #[test]
    fn weak_order_small_cases() {
        let g = group("A2");
        let s1 = g.generator(0).unwrap();
        let s2 = g.generator(1).unwrap();
        let s1s2 = g.from_word(&[0, 1]).unwrap();
        assert!(g.weak_leq(&g.identity(), &s1s2));
        assert!(g.weak_leq(&s2, &s1s2));
        assert!(!g.weak_leq(&s1, &s1s2));
        assert!(!g.weak_leq(&s1, &s2));
        let order = WeakOrder::new(&g);
        assert!(order.meet(&s1, &s2).is_identity());
        assert_eq!(order.join(&s1, &s2), g.longest_element());
    }

    #[test]
    fn weak_order_is_a_lattice() {
        for code in ["A2", "A3", "D4"] {
            let g = group(code);
            let order = WeakOrder::new(&g);
            let size = order.len();
            for u in 0..size {
                for w in 0..size {
                    let direct = g.weak_leq(&order.elements[u], &order.elements[w]);
                    assert_eq!(direct, order.leq_index(u, w));
                    if direct && order.leq_index(w, u) {
                        assert_eq!(u, w, "antisymmetry");
                    }
                }
            }
            if size <= 24 {
                for (u, w) in (0..size).tuple_combinations() {
                    let m = order.meet_index(u, w);
                    let j = order.join_index(u, w);
                    assert!(order.leq_index(m, u) && order.leq_index(m, w));
                    assert!(order.leq_index(u, j) && order.leq_index(w, j));
                    assert_eq!(order.meet_index(u, j), u);
                    assert_eq!(order.join_index(u, m), u);
                }
            }
        }
    }

    #[test]
    fn hasse_weak_edges() {
        for (code, v, e) in [("A1", 2, 1), ("A2", 6, 6), ("A3", 24, 36)] {
            let h = group(code).hasse_weak();
            assert_eq!(h.vertices.len(), v);
            assert_eq!(h.edges.len(), e);
            for edge in &h.edges {
                assert_eq!(h.vertices[edge.from].length(), h.vertices[edge.to].length() + 1);
            }
        }
    }

    #[test]
    fn determinant_sign() {
        let g = group("D4");
        for w in g.enumerate() {
            let sign = if w.length() % 2 == 0 { 1 } else { -1 };
            assert_eq!(w.canonical().det(), sign);
        }
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("1 2,1", 2).unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("", 2).unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("  ,  ", 3).unwrap(), Vec::<usize>::new());
        assert!(matches!(parse_word("3", 2), Err(WeylError::VertexOutOfRange(3, 2))));
        assert!(matches!(parse_word("x", 2), Err(WeylError::InvalidWord(_))));
    }

    proptest! {
        #[test]
        fn canonical_independent_of_reduced_word(word in proptest::collection::vec(0usize..4, 0..16), seed in 0u64..1000) {
            use rand::SeedableRng;
            let g = group("D4");
            let w = g.from_word(&word).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let other = g.random_reduced_word(&w, &mut rng);
            prop_assert_eq!(other.len(), w.length());
            prop_assert_eq!(g.canonical_of_word(&other), w.canonical().clone());
        }

        #[test]
        fn multiplication_is_associative(a in proptest::collection::vec(0usize..3, 0..8),
                                         b in proptest::collection::vec(0usize..3, 0..8),
                                         c in proptest::collection::vec(0usize..3, 0..8)) {
            let g = group("A3");
            let (x, y, z) = (g.from_word(&a).unwrap(), g.from_word(&b).unwrap(), g.from_word(&c).unwrap());
            prop_assert_eq!(g.multiply(&g.multiply(&x, &y), &z), g.multiply(&x, &g.multiply(&y, &z)));
            let concat: Vec<usize> = a.iter().chain(&b).copied().collect();
            prop_assert_eq!(g.multiply(&x, &y), g.from_word(&concat).unwrap());
            prop_assert!(g.multiply(&x, &g.inverse(&x)).is_identity());
        }
    }
}
