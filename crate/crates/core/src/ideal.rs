//! Two-sided ideals of `Λ`, the ideals `I_i = Λ(1 - e_i)Λ` and their
//! products `I_w`, bundled with the group and algebra they live over.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::{Algebra, AlgebraError, NakayamaData};
use crate::linalg::{is_zero_vec, Subspace};
use crate::module::ModuleRep;
use crate::quiver::DynkinQuiver;
use crate::scalar::Field;
use crate::weyl::{WeylElement, WeylGroup};

/// Closure of the span of `gens` under left multiplication by arrows.
pub fn left_closure<F: Field>(alg: &Algebra<F>, gens: impl IntoIterator<Item = Vec<F>>) -> Subspace<F> {
    closure(alg, gens, true, false)
}

/// Closure of the span of `gens` under right multiplication by arrows.
pub fn right_closure<F: Field>(alg: &Algebra<F>, gens: impl IntoIterator<Item = Vec<F>>) -> Subspace<F> {
    closure(alg, gens, false, true)
}

/// Two-sided ideal generated by `gens`.
pub fn two_sided_closure<F: Field>(alg: &Algebra<F>, gens: impl IntoIterator<Item = Vec<F>>) -> Subspace<F> {
    closure(alg, gens, true, true)
}

fn closure<F: Field>(
    alg: &Algebra<F>,
    gens: impl IntoIterator<Item = Vec<F>>,
    left: bool,
    right: bool,
) -> Subspace<F> {
    let mut space = Subspace::zero(alg.dim());
    let mut stack: Vec<Vec<F>> = gens.into_iter().collect();
    while let Some(mut v) = stack.pop() {
        space.reduce(&mut v);
        if is_zero_vec(&v) {
            continue;
        }
        space.insert(v.clone());
        for x in 0..alg.arrows().len() {
            if left {
                stack.push(alg.left_arrow_act(x, &v));
            }
            if right {
                stack.push(alg.right_arrow_act(&v, x));
            }
        }
    }
    space
}

/// `e_i x`: keeps the coordinates of basis elements starting at `i`.
pub fn left_idempotent<F: Field>(alg: &Algebra<F>, i: usize, v: &[F]) -> Vec<F> {
    v.iter()
        .enumerate()
        .map(|(b, c)| if alg.basis()[b].source == i { c.clone() } else { F::zero() })
        .collect()
}

/// `I_i = Λ(1 - e_i)Λ`.
pub fn ideal_generator<F: Field>(alg: &Algebra<F>, i: usize) -> Subspace<F> {
    two_sided_closure(
        alg,
        (0..alg.vertex_count()).filter(|&j| j != i).map(|j| alg.unit_vector(alg.idempotent(j))),
    )
}

/// Span of all products `u v`, `u ∈ I`, `v ∈ J`.
pub fn ideal_product<F: Field>(alg: &Algebra<F>, i: &Subspace<F>, j: &Subspace<F>) -> Subspace<F> {
    let mut out = Subspace::zero(alg.dim());
    for u in i.basis() {
        for v in j.basis() {
            out.insert(alg.multiply(u, v));
        }
    }
    out
}

/// `I_i J` for a two-sided ideal `J`, computed as `Λ (1 - e_i) J`.
pub fn generator_times<F: Field>(alg: &Algebra<F>, i: usize, j: &Subspace<F>) -> Subspace<F> {
    left_closure(
        alg,
        j.basis().iter().map(|v| {
            v.iter()
                .enumerate()
                .map(|(b, c)| if alg.basis()[b].source != i { c.clone() } else { F::zero() })
                .collect()
        }),
    )
}

/// `e_i I` as a subspace of `Λ`.
pub fn slice<F: Field>(alg: &Algebra<F>, ideal: &Subspace<F>, i: usize) -> Subspace<F> {
    Subspace::spanned_by(alg.dim(), ideal.basis().iter().map(|v| left_idempotent(alg, i, v)))
}

/// `(1 - e_i) I` as a subspace of `Λ`.
pub fn complement_slice<F: Field>(alg: &Algebra<F>, ideal: &Subspace<F>, i: usize) -> Subspace<F> {
    Subspace::spanned_by(
        alg.dim(),
        ideal.basis().iter().map(|v| {
            v.iter()
                .enumerate()
                .map(|(b, c)| if alg.basis()[b].source != i { c.clone() } else { F::zero() })
                .collect()
        }),
    )
}

/// `{λ : I λ = 0}` by a direct linear solve over the structure constants.
pub fn right_annihilator<F: Field>(alg: &Algebra<F>, ideal: &Subspace<F>) -> Subspace<F> {
    let dim = alg.dim();
    if ideal.is_zero() {
        return Subspace::full(dim);
    }
    // column b holds u_k · b for every basis vector u_k of the ideal
    let columns: Vec<Vec<F>> = (0..dim)
        .map(|b| {
            ideal
                .basis()
                .iter()
                .flat_map(|u| alg.multiply(u, &alg.unit_vector(b)))
                .collect()
        })
        .collect();
    let system = crate::linalg::Matrix::from_columns(ideal.dim() * dim, &columns);
    Subspace::spanned_by(dim, system.nullspace())
}

const CACHE_CAP: usize = 8192;

/// Everything needed to work with `I_w`: quiver, Weyl group, algebra,
/// Nakayama data and the generators `I_i`, with a cache of computed ideals.
pub struct PreprojSystem<F: Field> {
    pub quiver: DynkinQuiver,
    pub weyl: WeylGroup,
    pub algebra: Algebra<F>,
    pub nakayama: NakayamaData<F>,
    generators: Vec<Subspace<F>>,
    cache: Mutex<HashMap<Vec<usize>, Arc<Subspace<F>>>>,
}

impl<F: Field> PreprojSystem<F> {
    pub fn new(quiver: &DynkinQuiver) -> Result<Self, AlgebraError> {
        let algebra = Algebra::build(quiver)?;
        Self::with_algebra(quiver, algebra)
    }

    /// Same system over `Λ^op`.
    pub fn opposite(&self) -> Result<Self, AlgebraError> {
        Self::with_algebra(&self.quiver, self.algebra.opposite())
    }

    pub fn with_algebra(quiver: &DynkinQuiver, algebra: Algebra<F>) -> Result<Self, AlgebraError> {
        let nakayama = algebra.nakayama()?;
        let generators = (0..quiver.vertex_count())
            .map(|i| ideal_generator(&algebra, i))
            .collect();
        Ok(PreprojSystem {
            quiver: quiver.clone(),
            weyl: WeylGroup::new(quiver),
            algebra,
            nakayama,
            generators,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn generator(&self, i: usize) -> &Subspace<F> {
        &self.generators[i]
    }

    pub fn unit_ideal(&self) -> Subspace<F> {
        Subspace::full(self.algebra.dim())
    }

    /// `I_w = I_{i_1} ... I_{i_k}` along the stored reduced word.
    pub fn ideal_of(&self, w: &WeylElement) -> Arc<Subspace<F>> {
        self.ideal_of_word(w.word())
    }

    /// Product `I_{i_1} ... I_{i_k}` along an arbitrary word, evaluated
    /// right to left. Results are memoised per suffix word, so different
    /// words for the same group element are computed independently. Only
    /// suffixes that are the canonical reduced word of their element are
    /// stored, at most `CACHE_CAP` of them.
    pub fn ideal_of_word(&self, word: &[usize]) -> Arc<Subspace<F>> {
        let mut current = Arc::new(self.unit_ideal());
        for k in (0..word.len()).rev() {
            let key = &word[k..];
            if let Some(hit) = self.cache.lock().unwrap().get(key) {
                current = hit.clone();
                continue;
            }
            let next = Arc::new(generator_times(&self.algebra, word[k], &current));
            let canonical = self.weyl.reduced_word(&self.weyl.canonical_of_word(key)) == key;
            let mut cache = self.cache.lock().unwrap();
            if canonical && cache.len() < CACHE_CAP {
                cache.insert(key.to_vec(), next.clone());
            }
            current = next;
        }
        current
    }

    /// Product of the generators along a word using the general product.
    pub fn ideal_of_word_direct(&self, word: &[usize]) -> Subspace<F> {
        word.iter().rev().fold(self.unit_ideal(), |acc, &i| {
            ideal_product(&self.algebra, &self.generators[i], &acc)
        })
    }

    pub fn rep(&self, ideal: &Subspace<F>) -> ModuleRep<F> {
        ModuleRep::from_right_ideal(&self.algebra, ideal)
    }

    /// Nonzero slices `(i, e_i I)`.
    pub fn summand_slices(&self, ideal: &Subspace<F>) -> Vec<(usize, Subspace<F>)> {
        (0..self.rank())
            .map(|i| (i, slice(&self.algebra, ideal, i)))
            .filter(|(_, s)| !s.is_zero())
            .collect()
    }

    /// `{λ : I_w λ = 0}`.
    pub fn annihilator(&self, ideal: &Subspace<F>) -> Subspace<F> {
        right_annihilator(&self.algebra, ideal)
    }

    /// `dim I_w + dim I_{w^{-1} w_0} = dim Λ`.
    pub fn dual_dim_check(&self, w: &WeylElement) -> bool {
        let partner = self.annihilator_partner(w);
        self.ideal_of(w).dim() + self.ideal_of(&partner).dim() == self.algebra.dim()
    }

    /// `w^{-1} w_0`.
    pub fn annihilator_partner(&self, w: &WeylElement) -> WeylElement {
        let w0 = self.weyl.longest_element();
        self.weyl.multiply(&self.weyl.inverse(w), &w0)
    }
}
