//! g-vectors of the pairs `(I_w, P_w)` and the chamber fan they span.

use std::collections::HashSet;

use crate::homological::min_presentation;
use crate::ideal::{slice, PreprojSystem};
use crate::scalar::Field;
use crate::tilt::TiltError;
use crate::weyl::{IntMatrix, WeylElement, WeylGroup};

/// g-vector of the `i`-th summand of the pair for `w`: the presentation
/// g-vector of `e_i I_w`, or `-e_{σ(i)}` when `e_i I_w = 0`.
pub fn g_vector<F: Field>(sys: &PreprojSystem<F>, w: &WeylElement, i: usize) -> Result<Vec<i64>, TiltError> {
    let n = sys.rank();
    let ideal = sys.ideal_of(w);
    let s = slice(&sys.algebra, &ideal, i);
    if s.is_zero() {
        let mut g = vec![0; n];
        g[sys.nakayama.sigma[i]] = -1;
        return Ok(g);
    }
    let pres = min_presentation(&sys.algebra, &sys.rep(&s))?;
    Ok(pres.g_vector(n))
}

/// Matrix whose `i`-th column is the g-vector of the `i`-th summand.
pub fn g_matrix_presentations<F: Field>(sys: &PreprojSystem<F>, w: &WeylElement) -> Result<IntMatrix, TiltError> {
    let n = sys.rank();
    let columns = (0..n)
        .map(|i| g_vector(sys, w, i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(from_columns(n, &columns))
}

/// The same matrix from the reflection representation: `σ*(w)`, multiplied
/// out along the reduced word of `w`.
pub fn g_matrix_reflections(weyl: &WeylGroup, w: &WeylElement) -> IntMatrix {
    weyl.canonical_of_word(w.word())
}

fn from_columns(n: usize, columns: &[Vec<i64>]) -> IntMatrix {
    let rows: Vec<Vec<i32>> = (0..n)
        .map(|r| columns.iter().map(|c| c[r] as i32).collect())
        .collect();
    IntMatrix::from_rows(&rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMismatch {
    pub word: String,
    pub presentation: IntMatrix,
    pub reflection: IntMatrix,
}

/// Compares both g-matrix routes on every given element.
pub fn g_mismatches<F: Field>(
    sys: &PreprojSystem<F>,
    elements: &[WeylElement],
) -> Result<Vec<GMismatch>, TiltError> {
    let mut out = Vec::new();
    for w in elements {
        let presentation = g_matrix_presentations(sys, w)?;
        let reflection = g_matrix_reflections(&sys.weyl, w);
        if presentation != reflection {
            out.push(GMismatch {
                word: w.word_label(),
                presentation,
                reflection,
            });
        }
    }
    Ok(out)
}

/// Simplicial cone spanned by the columns of a g-matrix.
#[derive(Debug, Clone)]
pub struct Cone {
    pub element: WeylElement,
    pub rays: Vec<Vec<i64>>,
    pub witness: Vec<i64>,
}

impl Cone {
    pub fn of(weyl: &WeylGroup, w: &WeylElement) -> Self {
        let g = w.canonical();
        Cone {
            element: w.clone(),
            rays: (0..g.size())
                .map(|c| g.column(c).into_iter().map(i64::from).collect())
                .collect(),
            witness: weyl.witness(g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

/// Position of `p` relative to the cone of `w`, from the coordinates
/// `σ*(w^{-1}) p` of `p` in the basis of rays.
pub fn cone_position(weyl: &WeylGroup, w: &WeylElement, p: &[i64]) -> Membership {
    let coords = weyl.inverse(w).canonical().mul_vec(p);
    if coords.iter().any(|&a| a < 0) {
        Membership::Outside
    } else if coords.iter().all(|&a| a > 0) {
        Membership::Interior
    } else {
        Membership::Boundary
    }
}

/// Every cone of the fan containing `p`, with its position.
pub fn cone_membership(
    weyl: &WeylGroup,
    elements: &[WeylElement],
    p: &[i64],
) -> Vec<(WeylElement, Membership)> {
    elements
        .iter()
        .map(|w| (w.clone(), cone_position(weyl, w, p)))
        .filter(|(_, m)| *m != Membership::Outside)
        .collect()
}

/// Signs of `⟨x, p⟩` over the positive roots `x`.
pub fn sign_vector(weyl: &WeylGroup, p: &[i64]) -> Vec<i8> {
    weyl.roots()
        .positives
        .iter()
        .map(|x| x.iter().zip(p).map(|(a, b)| a * b).sum::<i64>().signum() as i8)
        .collect()
}

/// Point on the wall of the cone of `w` opposite to ray `i`.
pub fn wall_point(w: &WeylElement, i: usize) -> Vec<i64> {
    let g = w.canonical();
    (0..g.size())
        .map(|r| (0..g.size()).filter(|&c| c != i).map(|c| i64::from(g.get(r, c))).sum())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberReport {
    pub chambers: usize,
    pub sign_vectors_distinct: bool,
    pub witnesses_off_walls: bool,
    pub determinants_ok: bool,
    pub adjacent_differ_once: bool,
    pub witnesses_unique: bool,
    pub walls_shared: bool,
}

impl ChamberReport {
    pub fn ok(&self) -> bool {
        self.sign_vectors_distinct
            && self.witnesses_off_walls
            && self.determinants_ok
            && self.adjacent_differ_once
            && self.witnesses_unique
            && self.walls_shared
    }
}

/// Checks that the cones of all elements form a fan of pairwise disjoint
/// open chambers.
///
/// Sign vectors of the witnesses over the positive roots must be nonzero in
/// every entry and pairwise distinct; `det σ*(w) = (-1)^{l(w)}`; the
/// chambers of `w` and `s_i w` differ in exactly one root sign; each
/// witness lies in the interior of its own cone only (skipped above
/// `membership_cap` elements, where it is quadratic); and both a wall
/// point and the sum of the two witnesses lie on the boundary of both
/// cones.
pub fn chamber_fan(weyl: &WeylGroup, elements: &[WeylElement], membership_cap: usize) -> ChamberReport {
    let n = weyl.rank();
    let signs: Vec<Vec<i8>> = elements
        .iter()
        .map(|w| sign_vector(weyl, &weyl.witness(w.canonical())))
        .collect();
    let witnesses_off_walls = signs.iter().all(|s| s.iter().all(|&x| x != 0));
    let distinct: HashSet<&Vec<i8>> = signs.iter().collect();
    let sign_vectors_distinct = distinct.len() == elements.len();
    let determinants_ok = elements.iter().all(|w| {
        let expected = if w.length() % 2 == 0 { 1 } else { -1 };
        w.canonical().det() == expected
    });
    let mut adjacent_differ_once = true;
    let mut walls_shared = true;
    for (k, w) in elements.iter().enumerate() {
        for i in 0..n {
            let v = weyl.left_mul(i, w);
            let other = sign_vector(weyl, &weyl.witness(v.canonical()));
            let diff = signs[k].iter().zip(&other).filter(|(a, b)| a != b).count();
            adjacent_differ_once &= diff == 1;
            let wall = wall_point(w, i);
            let mid: Vec<i64> = weyl
                .witness(w.canonical())
                .iter()
                .zip(weyl.witness(v.canonical()))
                .map(|(a, b)| a + b)
                .collect();
            for p in [&wall, &mid] {
                walls_shared &= cone_position(weyl, w, p) == Membership::Boundary
                    && cone_position(weyl, &v, p) == Membership::Boundary;
            }
        }
    }
    let witnesses_unique = elements.len() > membership_cap
        || elements.iter().all(|w| {
            let hits = cone_membership(weyl, elements, &weyl.witness(w.canonical()));
            hits.len() == 1 && hits[0].0 == *w && hits[0].1 == Membership::Interior
        });
    ChamberReport {
        chambers: elements.len(),
        sign_vectors_distinct,
        witnesses_off_walls,
        determinants_ok,
        adjacent_differ_once,
        witnesses_unique,
        walls_shared,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;
    use crate::scalar::Rational;

    fn sys(code: &str) -> PreprojSystem<Rational> {
        PreprojSystem::new(&parse_quiver(code).unwrap()).unwrap()
    }

    #[test]
    fn a2_simple_reflection() {
        let s = sys("A2");
        let s1 = s.weyl.generator(0).unwrap();
        let g = g_matrix_presentations(&s, &s1).unwrap();
        assert_eq!(g, IntMatrix::from_rows(&[vec![-1, 0], vec![1, 1]]));
        assert_eq!(g, g_matrix_reflections(&s.weyl, &s1));
    }

    #[test]
    fn zero_summands_give_negative_projectives() {
        let s = sys("A3");
        let w0 = s.weyl.longest_element();
        for i in 0..3 {
            let g = g_vector(&s, &w0, i).unwrap();
            let mut expected = vec![0; 3];
            expected[s.nakayama.sigma[i]] = -1;
            assert_eq!(g, expected);
        }
    }

    #[test]
    fn membership_of_witness_and_wall() {
        let s = sys("A2");
        let els = s.weyl.enumerate();
        let e = s.weyl.identity();
        assert_eq!(cone_position(&s.weyl, &e, &[1, 1]), Membership::Interior);
        assert_eq!(cone_position(&s.weyl, &e, &[1, 0]), Membership::Boundary);
        assert_eq!(cone_position(&s.weyl, &e, &[-1, 1]), Membership::Outside);
        assert_eq!(cone_membership(&s.weyl, &els, &[0, 0]).len(), 6);
    }

    #[test]
    fn a2_fan() {
        let s = sys("A2");
        let report = chamber_fan(&s.weyl, &s.weyl.enumerate(), 10_000);
        assert!(report.ok(), "{report:?}");
        assert_eq!(report.chambers, 6);
    }
}
