//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use preproj::gfan::{chamber_fan, g_matrix_presentations, g_matrix_reflections};
use preproj::ideal::slice;
use preproj::tilt::{
    compare_with_weak_order, equivalence_chain, exchange_quiver, fac_contains,
    left_mutation_via_approximation, mutate, stt_pair,
};
use preproj::weyl::IntMatrix;
use preproj::{parse_quiver, RationalSystem, WeylGroup};

fn system(code: &str) -> RationalSystem {
    RationalSystem::new(&parse_quiver(code).unwrap()).unwrap()
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

type Check = Box<dyn FnOnce() -> Result<String, String>>;

fn run(index: usize, name: &str, limit: Option<Duration>, check: Check) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(check));
    let elapsed = start.elapsed();
    let (mut ok, mut detail) = match outcome {
        Ok(Ok(d)) => (true, d),
        Ok(Err(e)) => (false, e),
        Err(_) => (false, "panicked".to_string()),
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            ok = false;
            detail = format!("{detail}; exceeded {}s", limit.as_secs());
        }
    }
    println!(
        "criterion {index:>2} {name:<28} {} {detail} [{:.2}s]",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    ok
}

fn counts() -> Result<String, String> {
    let expected: [(&str, u128); 5] = [
        ("A1", factorial(2)),
        ("A2", factorial(3)),
        ("A3", factorial(4)),
        ("A4", factorial(5)),
        ("D4", 8 * factorial(4)),
    ];
    let mut found = Vec::new();
    let start = Instant::now();
    for (code, want) in expected {
        let got = exchange_quiver(&system(code)).vertices.len() as u128;
        if got != want {
            return Err(format!("{code}: {got} support τ-tilting modules, expected {want}"));
        }
        found.push(format!("{code}={got}"));
    }
    let modules = start.elapsed();
    if modules > Duration::from_secs(60) {
        return Err(format!("module enumeration took {:.1}s", modules.as_secs_f64()));
    }
    let start = Instant::now();
    let e6 = WeylGroup::new(&parse_quiver("E6").unwrap()).enumerate().len();
    let weyl = start.elapsed();
    if e6 != 51840 {
        return Err(format!("E6: {e6} elements, expected 51840"));
    }
    if weyl > Duration::from_secs(120) {
        return Err(format!("E6 enumeration took {:.1}s", weyl.as_secs_f64()));
    }
    found.push(format!("E6={e6}"));
    Ok(format!(
        "{} (modules {:.1}s, E6 group {:.1}s)",
        found.join(" "),
        modules.as_secs_f64(),
        weyl.as_secs_f64()
    ))
}

fn a2_golden_hasse() -> Result<String, String> {
    let sys = system("A2");
    let q = exchange_quiver(&sys);
    let dims: BTreeSet<Vec<usize>> = q.vertices.iter().map(|v| v.dims.clone()).collect();
    let want: BTreeSet<Vec<usize>> = [[2, 2], [2, 1], [1, 2], [1, 0], [0, 1], [0, 0]]
        .iter()
        .map(|d| d.to_vec())
        .collect();
    if dims != want || q.vertices.len() != 6 {
        return Err(format!("dimension vectors {dims:?}"));
    }
    // edges as (source dims, target dims, 1-based label)
    let edges: BTreeSet<(Vec<usize>, Vec<usize>, usize)> = q
        .edges
        .iter()
        .map(|e| (q.vertices[e.from].dims.clone(), q.vertices[e.to].dims.clone(), e.vertex + 1))
        .collect();
    let want_edges: BTreeSet<(Vec<usize>, Vec<usize>, usize)> = [
        ([2, 2], [2, 1], 2),
        ([2, 1], [1, 0], 1),
        ([1, 0], [0, 0], 2),
        ([2, 2], [1, 2], 1),
        ([1, 2], [0, 1], 2),
        ([0, 1], [0, 0], 1),
    ]
    .iter()
    .map(|(a, b, l)| (a.to_vec(), b.to_vec(), *l))
    .collect();
    if edges != want_edges || q.edges.len() != 6 {
        return Err(format!("edges {edges:?}"));
    }
    // summands read off the radical filtrations
    let summands: BTreeSet<(Vec<usize>, Vec<Vec<usize>>)> = q
        .vertices
        .iter()
        .map(|v| {
            let mut parts: Vec<Vec<usize>> = sys
                .summand_slices(&v.ideal)
                .into_iter()
                .map(|(_, s)| sys.rep(&s).dims().to_vec())
                .collect();
            parts.sort();
            (v.dims.clone(), parts)
        })
        .collect();
    let want_summands: BTreeSet<(Vec<usize>, Vec<Vec<usize>>)> = [
        (vec![2, 2], vec![vec![1, 1], vec![1, 1]]),
        (vec![2, 1], vec![vec![1, 0], vec![1, 1]]),
        (vec![1, 2], vec![vec![0, 1], vec![1, 1]]),
        (vec![1, 0], vec![vec![1, 0]]),
        (vec![0, 1], vec![vec![0, 1]]),
        (vec![0, 0], vec![]),
    ]
    .into_iter()
    .collect();
    if summands != want_summands {
        return Err(format!("summands {summands:?}"));
    }
    Ok("6 vertices, 6 edges, hexagon".into())
}

fn a3_hasse() -> Result<String, String> {
    let sys = system("A3");
    let q = exchange_quiver(&sys);
    if q.vertices.len() != 24 || q.edges.len() != 36 {
        return Err(format!("{} vertices, {} edges", q.vertices.len(), q.edges.len()));
    }
    for e in &q.edges {
        let a = sys.weyl.from_word(&q.vertices[e.from].word).unwrap();
        let b = sys.weyl.from_word(&q.vertices[e.to].word).unwrap();
        if b.length() != a.length() + 1 {
            return Err(format!("edge {a} -> {b} does not raise the length by one"));
        }
    }
    compare_with_weak_order(&sys, &q)?;
    Ok("24 vertices, 36 edges, opposite of the weak order".into())
}

fn g_agreement() -> Result<String, String> {
    let mut total = 0;
    for code in ["A2", "A3", "D4"] {
        let sys = system(code);
        for w in sys.weyl.enumerate() {
            let p = g_matrix_presentations(&sys, &w).map_err(|e| e.to_string())?;
            let r = g_matrix_reflections(&sys.weyl, &w);
            if p != r {
                return Err(format!("{code} {w}: {p} vs {r}"));
            }
            total += 1;
        }
    }
    if total != 222 {
        return Err(format!("{total} matrices compared"));
    }
    Ok(format!("{total} equal matrices"))
}

fn a2_golden_g() -> Result<String, String> {
    let sys = system("A2");
    let golden: [(&[usize], [[i32; 2]; 2]); 6] = [
        (&[], [[1, 0], [0, 1]]),
        (&[0], [[-1, 0], [1, 1]]),
        (&[1], [[1, 1], [0, -1]]),
        (&[0, 1], [[0, 1], [-1, -1]]),
        (&[1, 0], [[-1, -1], [1, 0]]),
        (&[0, 1, 0], [[0, -1], [-1, 0]]),
    ];
    for (word, m) in golden {
        let want = IntMatrix::from_rows(&[m[0].to_vec(), m[1].to_vec()]);
        let w = sys.weyl.from_word(word).unwrap();
        let p = g_matrix_presentations(&sys, &w).map_err(|e| e.to_string())?;
        if p != want || g_matrix_reflections(&sys.weyl, &w) != want {
            return Err(format!("{w}: got {p}, expected {want}"));
        }
    }
    Ok("6 matrices".into())
}

fn chambers() -> Result<String, String> {
    let mut out = Vec::new();
    for code in ["A2", "A3", "D4"] {
        let weyl = WeylGroup::new(&parse_quiver(code).unwrap());
        let elements = weyl.enumerate();
        let report = chamber_fan(&weyl, &elements, 10_000);
        if !report.ok() {
            return Err(format!("{code}: {report:?}"));
        }
        out.push(format!("{code}={}", report.chambers));
    }
    Ok(out.join(" "))
}

fn tau_rigidity() -> Result<String, String> {
    let mut out = Vec::new();
    for code in ["A2", "A3", "D4"] {
        let sys = system(code);
        let n = sys.rank();
        let els = sys.weyl.enumerate();
        for w in &els {
            let pair = stt_pair(&sys, w).map_err(|e| format!("{code}: {e}"))?;
            // independent recount of the three conditions
            let x = &pair.module;
            if !pair.tau.is_zero() && x.hom_dim(&pair.tau) != 0 {
                return Err(format!("{code} {w}: Hom(X, τX) ≠ 0"));
            }
            for &j in &pair.projective {
                let p = preproj::ModuleRep::projective(&sys.algebra, j);
                if p.hom_dim(x) != 0 {
                    return Err(format!("{code} {w}: Hom(P, X) ≠ 0"));
                }
            }
            if pair.summand_count() + pair.projective.len() != n {
                return Err(format!("{code} {w}: |X| + |P| ≠ n"));
            }
        }
        out.push(format!("{code}={}", els.len()));
    }
    Ok(out.join(" "))
}

fn order_isomorphism() -> Result<String, String> {
    let sys = system("A3");
    let els = sys.weyl.enumerate();
    let reps: Vec<_> = els.iter().map(|w| sys.rep(&sys.ideal_of(w))).collect();
    let mut pairs = 0;
    for (a, u) in els.iter().enumerate() {
        for (b, w) in els.iter().enumerate() {
            if sys.weyl.weak_leq(u, w) != fac_contains(&reps[a], &reps[b]) {
                return Err(format!("u = {u}, w = {w}"));
            }
            pairs += 1;
        }
    }
    if pairs != 576 {
        return Err(format!("{pairs} pairs"));
    }
    Ok("576 pairs".into())
}

fn annihilators() -> Result<String, String> {
    let mut out = Vec::new();
    for code in ["A2", "A3"] {
        let sys = system(code);
        let els = sys.weyl.enumerate();
        for w in &els {
            let ann = sys.annihilator(&sys.ideal_of(w));
            let partner = sys.annihilator_partner(w);
            if ann != *sys.ideal_of(&partner) {
                return Err(format!("{code} {w}: ann I_w ≠ I_({partner})"));
            }
            if !sys.dual_dim_check(w) {
                return Err(format!("{code} {w}: dimension check"));
            }
        }
        out.push(format!("{code}={}", els.len()));
    }
    Ok(out.join(" "))
}

fn mutation_consistency() -> Result<String, String> {
    let mut steps = 0;
    let mut approximations = 0;
    for code in ["A2", "A3"] {
        let sys = system(code);
        for w in sys.weyl.enumerate() {
            for i in 0..sys.rank() {
                let chain = equivalence_chain(&sys, &w, i);
                if !chain.consistent() {
                    return Err(format!("{code} {w} vertex {}: {chain:?}", i + 1));
                }
                let step = mutate(&sys, &w, i).map_err(|e| e.to_string())?;
                if step.to.length() > w.length() {
                    let m = left_mutation_via_approximation(&sys, &w, i).map_err(|e| e.to_string())?;
                    if !m.matches_target {
                        return Err(format!("{code} {w} vertex {}: approximation differs", i + 1));
                    }
                    let new_slice = slice(&sys.algebra, &sys.ideal_of(&step.to), i);
                    if new_slice.is_zero() != m.summand.is_none() {
                        return Err(format!("{code} {w} vertex {}: zero summand mismatch", i + 1));
                    }
                    approximations += 1;
                }
                steps += 1;
            }
        }
    }
    Ok(format!("{steps} steps, {approximations} via approximations"))
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        run(1, "counts", None, Box::new(counts)),
        run(2, "A2 exchange quiver", None, Box::new(a2_golden_hasse)),
        run(3, "A3 exchange quiver", None, Box::new(a3_hasse)),
        run(4, "g-matrix agreement", Some(secs(120)), Box::new(g_agreement)),
        run(5, "A2 g-matrices", None, Box::new(a2_golden_g)),
        run(6, "chamber fan", None, Box::new(chambers)),
        run(7, "pair invariants", Some(secs(300)), Box::new(tau_rigidity)),
        run(8, "order isomorphism A3", None, Box::new(order_isomorphism)),
        run(9, "annihilators", None, Box::new(annihilators)),
        run(10, "mutation consistency", None, Box::new(mutation_consistency)),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
