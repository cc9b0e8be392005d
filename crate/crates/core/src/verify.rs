//! Named invariant suites run over all group elements or a seeded sample.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::gfan::{chamber_fan, g_mismatches};
use crate::ideal::PreprojSystem;
use crate::scalar::Field;
use crate::tilt::{
    check_ideal_structure, check_torsion_lattice, compare_with_weak_order, equivalence_chain,
    exchange_quiver, fac_contains, left_mutation_via_approximation, mutate, stt_pair,
};
use crate::weyl::{WeakOrder, WeylElement, WeylGroup};

pub const DEFAULT_SEED: u64 = 20_240_611;
pub const DEFAULT_SAMPLES: usize = 200;
pub const EXHAUSTIVE_CAP: u128 = 1152;
const WORD_CAP: usize = 64;
const LATTICE_CAP: usize = 120;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Exhaustive,
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fast" => Ok(Level::Fast),
            "exhaustive" => Ok(Level::Exhaustive),
            other => Err(format!("unknown level {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub level: Level,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            level: Level::Fast,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantResult {
    pub name: &'static str,
    pub status: Status,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl InvariantResult {
    fn pass(name: &'static str, checked: usize) -> Self {
        InvariantResult {
            name,
            status: Status::Pass,
            checked,
            detail: None,
        }
    }

    fn fail(name: &'static str, checked: usize, detail: String) -> Self {
        InvariantResult {
            name,
            status: Status::Fail,
            checked,
            detail: Some(detail),
        }
    }

    fn skipped(name: &'static str, reason: &str) -> Self {
        InvariantResult {
            name,
            status: Status::Skipped,
            checked: 0,
            detail: Some(reason.into()),
        }
    }

    fn from_failures(name: &'static str, checked: usize, failures: Vec<String>) -> Self {
        match failures.into_iter().next() {
            None => Self::pass(name, checked),
            Some(first) => Self::fail(name, checked, first),
        }
    }
}

impl fmt::Display for InvariantResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        write!(f, "{:<26} {:<8} {:>7}", self.name, status, self.checked)?;
        if let Some(d) = &self.detail {
            write!(f, "  {d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("exhaustive verification is limited to |W| <= {cap}, this group has {order} elements")]
    TooLarge { order: u128, cap: u128 },
}

/// Reduced words of `w`, up to `cap` of them.
pub fn reduced_words(weyl: &WeylGroup, w: &WeylElement, cap: usize) -> Vec<Vec<usize>> {
    fn walk(weyl: &WeylGroup, w: &WeylElement, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) {
        if out.len() >= cap {
            return;
        }
        if w.is_identity() {
            out.push(prefix.clone());
            return;
        }
        for i in weyl.left_descents(w) {
            prefix.push(i);
            walk(weyl, &weyl.left_mul(i, w), prefix, out, cap);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    walk(weyl, w, &mut Vec::new(), &mut out, cap);
    out
}

/// Uniform-ish random element: a long random word multiplied out.
pub fn random_element<R: Rng>(weyl: &WeylGroup, rng: &mut R) -> WeylElement {
    let n = weyl.rank();
    let len = 2 * weyl.roots().positives.len() + 1;
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..n)).collect();
    weyl.from_word(&word).expect("generator in range")
}

struct Plan {
    elements: Vec<WeylElement>,
    pairs: Vec<(usize, usize)>,
    exhaustive: bool,
}

fn plan(weyl: &WeylGroup, config: &VerifyConfig) -> Result<Plan, VerifyError> {
    let order = weyl.dynkin_type().weyl_group_order();
    match config.level {
        Level::Exhaustive => {
            if order > EXHAUSTIVE_CAP {
                return Err(VerifyError::TooLarge {
                    order,
                    cap: EXHAUSTIVE_CAP,
                });
            }
            let elements = weyl.enumerate();
            let m = elements.len();
            let pairs = (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).collect();
            Ok(Plan {
                elements,
                pairs,
                exhaustive: true,
            })
        }
        Level::Fast => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let mut elements = vec![weyl.identity(), weyl.longest_element()];
            let mut seen: HashSet<WeylElement> = elements.iter().cloned().collect();
            let target = config.samples.min(order as usize);
            let mut attempts = 0;
            while elements.len() < target && attempts < 50 * target {
                attempts += 1;
                let w = random_element(weyl, &mut rng);
                if seen.insert(w.clone()) {
                    elements.push(w);
                }
            }
            let m = elements.len();
            let pairs = (0..config.samples)
                .map(|_| (rng.gen_range(0..m), rng.gen_range(0..m)))
                .collect();
            Ok(Plan {
                elements,
                pairs,
                exhaustive: false,
            })
        }
    }
}

fn collect_failures<T: Sync, G>(items: &[T], check: G) -> Vec<String>
where
    G: Fn(&T) -> Option<String> + Sync + Send,
{
    let mut failures: Vec<(usize, String)> = items
        .par_iter()
        .enumerate()
        .filter_map(|(k, t)| check(t).map(|msg| (k, msg)))
        .collect();
    failures.sort_by_key(|(k, _)| *k);
    failures.into_iter().map(|(_, m)| m).collect()
}

pub fn braid_invariance<F: Field>(sys: &PreprojSystem<F>, elements: &[WeylElement], seed: u64) -> InvariantResult {
    let failures = collect_failures(elements, |w| {
        let mut words = reduced_words(&sys.weyl, w, WORD_CAP);
        if words.len() >= WORD_CAP {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ w.length() as u64);
            words = (0..8).map(|_| sys.weyl.random_reduced_word(w, &mut rng)).collect();
        }
        let first = sys.ideal_of_word(&words[0]);
        if words.iter().any(|word| *sys.ideal_of_word(word) != *first) {
            return Some(format!("{w}: reduced words give different ideals"));
        }
        if sys.ideal_of_word_direct(&words[words.len() - 1]) != *first {
            return Some(format!("{w}: generator product and general product differ"));
        }
        None
    });
    InvariantResult::from_failures("braid-invariance", elements.len(), failures)
}

pub fn tau_rigidity<F: Field>(sys: &PreprojSystem<F>, elements: &[WeylElement]) -> InvariantResult {
    let failures = collect_failures(elements, |w| stt_pair(sys, w).err().map(|e| e.to_string()));
    InvariantResult::from_failures("tau-rigidity", elements.len(), failures)
}

pub fn presentation_disjointness<F: Field>(sys: &PreprojSystem<F>, elements: &[WeylElement]) -> InvariantResult {
    let n = sys.rank();
    let failures = collect_failures(elements, |w| match stt_pair(sys, w) {
        Err(e) => Some(e.to_string()),
        Ok(pair) => {
            let p0 = pair.presentation.p0_multiplicities(n);
            let p1 = pair.presentation.p1_multiplicities(n);
            p0.iter()
                .zip(&p1)
                .any(|(a, b)| *a > 0 && *b > 0)
                .then(|| format!("{w}: P_0 and P_1 share a summand"))
        }
    });
    InvariantResult::from_failures("presentation-disjointness", elements.len(), failures)
}

pub fn order_isomorphism<F: Field>(
    sys: &PreprojSystem<F>,
    elements: &[WeylElement],
    pairs: &[(usize, usize)],
) -> InvariantResult {
    let reps: Vec<_> = elements
        .par_iter()
        .map(|w| sys.rep(&sys.ideal_of(w)))
        .collect();
    let failures = collect_failures(pairs, |&(a, b)| {
        let weak = sys.weyl.weak_leq(&elements[a], &elements[b]);
        let fac = fac_contains(&reps[a], &reps[b]);
        (weak != fac).then(|| {
            format!(
                "u = {}, w = {}: weak order says {weak}, Fac inclusion says {fac}",
                elements[a], elements[b]
            )
        })
    });
    InvariantResult::from_failures("order-isomorphism", pairs.len(), failures)
}

pub fn g_agreement<F: Field>(sys: &PreprojSystem<F>, elements: &[WeylElement]) -> InvariantResult {
    let failures = collect_failures(elements, |w| match g_mismatches(sys, std::slice::from_ref(w)) {
        Err(e) => Some(e.to_string()),
        Ok(m) => m.first().map(|m| {
            format!("{}: presentations give {}, reflections give {}", m.word, m.presentation, m.reflection)
        }),
    });
    InvariantResult::from_failures("g-agreement", elements.len(), failures)
}

pub fn chamber_disjointness(weyl: &WeylGroup, elements: &[WeylElement]) -> InvariantResult {
    let report = chamber_fan(weyl, elements, 2000);
    if report.ok() {
        InvariantResult::pass("chamber-disjointness", elements.len())
    } else {
        InvariantResult::fail("chamber-disjointness", elements.len(), format!("{report:?}"))
    }
}

pub fn annihilator<F: Field>(sys: &PreprojSystem<F>, elements: &[WeylElement]) -> InvariantResult {
    let failures = collect_failures(elements, |w| {
        let ideal = sys.ideal_of(w);
        let ann = sys.annihilator(&ideal);
        let partner = sys.annihilator_partner(w);
        if ann != *sys.ideal_of(&partner) {
            return Some(format!("{w}: ann I_w differs from I_({partner})"));
        }
        if sys.rep(&ideal).annihilator(&sys.algebra) != ann {
            return Some(format!("{w}: module annihilator differs from the linear solve"));
        }
        None
    });
    InvariantResult::from_failures("annihilator", elements.len(), failures)
}

pub fn dual_dim<F: Field>(sys: &PreprojSystem<F>, elements: &[WeylElement]) -> InvariantResult {
    let failures = collect_failures(elements, |w| {
        (!sys.dual_dim_check(w)).then(|| format!("{w}: dim I_w + dim I_(w^-1 w0) != dim Λ"))
    });
    InvariantResult::from_failures("dual-dim", elements.len(), failures)
}

pub fn mutation<F: Field>(sys: &PreprojSystem<F>, elements: &[WeylElement]) -> InvariantResult {
    let n = sys.rank();
    let steps: Vec<(usize, usize)> = (0..elements.len()).flat_map(|k| (0..n).map(move |i| (k, i))).collect();
    let failures = collect_failures(&steps, |&(k, i)| {
        let w = &elements[k];
        let step = match mutate(sys, w, i) {
            Ok(s) => s,
            Err(e) => return Some(e.to_string()),
        };
        if !equivalence_chain(sys, w, i).consistent() {
            return Some(format!("{w}, vertex {}: equivalence chain broken", i + 1));
        }
        if step.to.length() > w.length() {
            match left_mutation_via_approximation(sys, w, i) {
                Err(e) => return Some(e.to_string()),
                Ok(m) if !m.matches_target => {
                    return Some(format!("{w}, vertex {}: approximation mutation is not I_(s_i w)", i + 1))
                }
                Ok(_) => {}
            }
        }
        None
    });
    InvariantResult::from_failures("mutation", steps.len(), failures)
}

pub fn ideal_structure<F: Field>(sys: &PreprojSystem<F>, elements: &[WeylElement]) -> InvariantResult {
    let n = sys.rank();
    let failures = collect_failures(elements, |w| {
        let ideal = sys.ideal_of(w);
        (0..n)
            .find(|&i| !check_ideal_structure(sys, &ideal, i))
            .map(|i| format!("{w}: X I_{} is not the largest submodule with quotient at {}", i + 1, i + 1))
    });
    InvariantResult::from_failures("ideal-structure", elements.len(), failures)
}

pub fn injectivity<F: Field>(sys: &PreprojSystem<F>, elements: &[WeylElement]) -> InvariantResult {
    let ideals: HashSet<_> = elements.iter().map(|w| sys.ideal_of(w)).collect();
    if ideals.len() == elements.len() {
        InvariantResult::pass("injectivity", elements.len())
    } else {
        InvariantResult::fail(
            "injectivity",
            elements.len(),
            format!("{} elements give {} ideals", elements.len(), ideals.len()),
        )
    }
}

/// Over `Λ^op` the pairs exist as well, and the left ideal `I_w` is the
/// right ideal `I_{w^{-1}}`.
pub fn opposite_symmetry<F: Field>(sys: &PreprojSystem<F>, elements: &[WeylElement]) -> InvariantResult {
    let op = match sys.opposite() {
        Ok(op) => op,
        Err(e) => return InvariantResult::fail("opposite-symmetry", 0, e.to_string()),
    };
    let failures = collect_failures(elements, |w| {
        if let Err(e) = stt_pair(&op, w) {
            return Some(format!("over the opposite algebra: {e}"));
        }
        (*op.ideal_of(w) != *sys.ideal_of(&sys.weyl.inverse(w)))
            .then(|| format!("{w}: I_w over Λ^op is not I_(w^-1)"))
    });
    InvariantResult::from_failures("opposite-symmetry", elements.len(), failures)
}

pub fn exchange_quiver_check<F: Field>(sys: &PreprojSystem<F>) -> InvariantResult {
    if sys.weyl.dynkin_type().weyl_group_order() > EXHAUSTIVE_CAP {
        return InvariantResult::skipped("exchange-quiver", "group too large for a full search");
    }
    let quiver = exchange_quiver(sys);
    match compare_with_weak_order(sys, &quiver) {
        Ok(()) => InvariantResult::pass("exchange-quiver", quiver.vertices.len()),
        Err(e) => InvariantResult::fail("exchange-quiver", quiver.vertices.len(), e),
    }
}

pub fn torsion_lattice<F: Field>(sys: &PreprojSystem<F>, exhaustive: bool) -> InvariantResult {
    let order = sys.weyl.dynkin_type().weyl_group_order();
    if !exhaustive || order > LATTICE_CAP as u128 {
        return InvariantResult::skipped("torsion-lattice", "run exhaustively for |W| <= 120");
    }
    let weak = WeakOrder::new(&sys.weyl);
    match check_torsion_lattice(sys, &weak) {
        Ok(()) => InvariantResult::pass("torsion-lattice", weak.len() * weak.len()),
        Err(e) => InvariantResult::fail("torsion-lattice", weak.len() * weak.len(), e),
    }
}

/// Runs every suite. The first seven are the named core invariants.
pub fn verify_all<F: Field>(
    sys: &PreprojSystem<F>,
    config: &VerifyConfig,
) -> Result<Vec<InvariantResult>, VerifyError> {
    let plan = plan(&sys.weyl, config)?;
    let els = &plan.elements;
    Ok(vec![
        braid_invariance(sys, els, config.seed),
        tau_rigidity(sys, els),
        order_isomorphism(sys, els, &plan.pairs),
        g_agreement(sys, els),
        chamber_disjointness(&sys.weyl, els),
        annihilator(sys, els),
        dual_dim(sys, els),
        mutation(sys, els),
        exchange_quiver_check(sys),
        ideal_structure(sys, els),
        opposite_symmetry(sys, els),
        presentation_disjointness(sys, els),
        torsion_lattice(sys, plan.exhaustive),
        injectivity(sys, els),
    ])
}

pub fn all_passed(results: &[InvariantResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}
