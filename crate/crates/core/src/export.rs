//! DOT, JSON and CSV output for Hasse quivers, exchange quivers, the g-fan,
//! the torsion poset and ideals.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::gfan::Cone;
use crate::ideal::{slice, PreprojSystem};
use crate::linalg::Subspace;
use crate::scalar::Field;
use crate::tilt::{ExchangeQuiver, TorsionPoset};
use crate::weyl::{HasseGraph, IntMatrix, WeylElement, WeylGroup};

fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        "e".into()
    } else {
        word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

/// Hasse quiver of the left weak order, vertices labelled by reduced word.
pub fn hasse_dot(graph: &HasseGraph) -> String {
    let mut out = String::from("digraph weak_order {\n  rankdir=TB;\n");
    for (k, w) in graph.vertices.iter().enumerate() {
        let _ = writeln!(out, "  v{k} [label=\"{}\", length={}];", w.word_label(), w.length());
    }
    for e in &graph.edges {
        let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, e.vertex + 1);
    }
    out.push_str("}\n");
    out
}

/// Exchange quiver with vertices labelled by reduced word, dimension vector
/// and projector set `{σ(i) : e_i I = 0}` (1-based).
pub fn exchange_dot<F: Field>(sys: &PreprojSystem<F>, quiver: &ExchangeQuiver<F>) -> String {
    let mut out = String::from("digraph exchange_quiver {\n  rankdir=TB;\n");
    for (k, v) in quiver.vertices.iter().enumerate() {
        let word = sys
            .weyl
            .from_word(&v.word)
            .map(|w| w.word().to_vec())
            .unwrap_or_else(|_| v.word.clone());
        let projectors: Vec<usize> = (0..sys.rank())
            .filter(|&i| slice(&sys.algebra, &v.ideal, i).is_zero())
            .map(|i| sys.nakayama.sigma[i] + 1)
            .collect();
        let _ = writeln!(
            out,
            "  v{k} [label=\"{}\\n{}\\nP={{{}}}\", word=\"{}\", dims=\"{}\"];",
            word_label(&word),
            tuple(&v.dims),
            projectors.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
            word_label(&word),
            tuple(&v.dims),
        );
    }
    for e in &quiver.edges {
        let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, e.vertex + 1);
    }
    out.push_str("}\n");
    out
}

fn matrix_json(m: &IntMatrix) -> Value {
    json!(m.rows())
}

/// Per element: reduced word, g-matrix, cone generators and witness point.
pub fn fan_json(weyl: &WeylGroup, elements: &[WeylElement]) -> Value {
    let cones: Vec<Value> = elements
        .iter()
        .map(|w| {
            let cone = Cone::of(weyl, w);
            json!({
                "word": w.word_one_based(),
                "length": w.length(),
                "g_matrix": matrix_json(w.canonical()),
                "generators": cone.rays,
                "witness": cone.witness,
            })
        })
        .collect();
    json!({
        "type": weyl.dynkin_type().to_string(),
        "rank": weyl.rank(),
        "cones": cones,
    })
}

/// `word,det,length` with the word written as space-separated 1-based
/// indices.
pub fn fan_csv(elements: &[WeylElement]) -> String {
    let mut out = String::from("word,det,length\n");
    for w in elements {
        let word: Vec<String> = w.word_one_based().iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{},{},{}", word.join(" "), w.canonical().det(), w.length());
    }
    out
}

/// Rays of every cone of a rank 2 fan, one line per ray.
pub fn rank2_coordinates_csv(weyl: &WeylGroup, elements: &[WeylElement]) -> Option<String> {
    if weyl.rank() != 2 {
        return None;
    }
    let mut out = String::from("word,ray,x,y\n");
    for w in elements {
        let cone = Cone::of(weyl, w);
        let word: Vec<String> = w.word_one_based().iter().map(usize::to_string).collect();
        for (k, r) in cone.rays.iter().enumerate() {
            let _ = writeln!(out, "{},{},{},{}", word.join(" "), k + 1, r[0], r[1]);
        }
    }
    Some(out)
}

/// Torsion classes `Fac I_w` with the covering relations of inclusion.
pub fn torsion_json(poset: &TorsionPoset) -> Value {
    let m = poset.elements.len();
    let mut covers = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if a == b || !poset.contains[a][b] {
                continue;
            }
            let between = (0..m).any(|c| {
                c != a && c != b && poset.contains[a][c] && poset.contains[c][b]
            });
            if !between {
                // Fac I_b ⊂ Fac I_a is a cover
                covers.push(json!([b, a]));
            }
        }
    }
    let elements: Vec<Value> = poset
        .elements
        .iter()
        .map(|w| json!({ "word": w.word_one_based(), "length": w.length() }))
        .collect();
    json!({ "elements": elements, "covers": covers })
}

/// Echelon basis of an ideal in coordinates over the algebra basis.
pub fn ideal_dump<F: Field>(sys: &PreprojSystem<F>, ideal: &Subspace<F>) -> Value {
    let basis: Vec<Vec<Value>> = ideal
        .basis()
        .iter()
        .map(|v| v.iter().map(F::to_json).collect())
        .collect();
    json!({
        "dim": ideal.dim(),
        "dims": sys.rep(ideal).dims(),
        "pivots": ideal.pivots(),
        "basis": basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_quiver;
    use crate::scalar::Rational;
    use crate::tilt::exchange_quiver;

    #[test]
    fn a2_exchange_dot_has_six_vertices() {
        let s: PreprojSystem<Rational> = PreprojSystem::new(&parse_quiver("A2").unwrap()).unwrap();
        let dot = exchange_dot(&s, &exchange_quiver(&s));
        assert_eq!(dot.matches("[label=\"s").count() + dot.matches("[label=\"e").count(), 6);
        assert_eq!(dot.matches("->").count(), 6);
        assert!(dot.contains("(0,0)"));
    }

    #[test]
    fn csv_rows() {
        let q = parse_quiver("A2").unwrap();
        let w = WeylGroup::new(&q);
        let els = w.enumerate();
        let csv = fan_csv(&els);
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.lines().nth(1).unwrap().starts_with(",1,0"));
        assert_eq!(rank2_coordinates_csv(&w, &els).unwrap().lines().count(), 13);
    }
}
