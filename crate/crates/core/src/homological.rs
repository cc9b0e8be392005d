//! Minimal projective presentations, the Nakayama functor on projectives and
//! the Auslander-Reiten translate.

use crate::algebra::{Algebra, NakayamaData};
use crate::linalg::{unit, Matrix};
use crate::module::{ModuleMap, ModuleRep, SubRep};
use crate::scalar::Field;

/// Minimal presentation `P_1 -> P_0 -> X -> 0` with
/// `P_0 = ⊕_k e_{p0[k]} Λ` and `P_1 = ⊕_l e_{p1[l]} Λ`.
#[derive(Debug, Clone)]
pub struct Presentation<F> {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    /// `lambda[l][k] ∈ e_{p0[k]} Λ e_{p1[l]}`: the `k`-th component of the
    /// image of the `l`-th generator of `P_1`.
    pub lambda: Vec<Vec<Vec<F>>>,
}

fn multiplicities(n: usize, summands: &[usize]) -> Vec<usize> {
    let mut m = vec![0; n];
    for &j in summands {
        m[j] += 1;
    }
    m
}

impl<F: Field> Presentation<F> {
    pub fn p0_multiplicities(&self, n: usize) -> Vec<usize> {
        multiplicities(n, &self.p0)
    }

    pub fn p1_multiplicities(&self, n: usize) -> Vec<usize> {
        multiplicities(n, &self.p1)
    }

    /// `[P_0] - [P_1]` in the basis of indecomposable projectives.
    pub fn g_vector(&self, n: usize) -> Vec<i64> {
        self.p0_multiplicities(n)
            .into_iter()
            .zip(self.p1_multiplicities(n))
            .map(|(a, b)| a as i64 - b as i64)
            .collect()
    }

    /// The map `P_1 -> P_0` as a module homomorphism between the direct sums
    /// of projective representations.
    pub fn differential(&self, alg: &Algebra<F>) -> ModuleMap<F> {
        let n = alg.vertex_count();
        let blocks = (0..n)
            .map(|u| {
                let rows: usize = self.p0.iter().map(|&j| alg.block(j, u).len()).sum();
                let mut cols = Vec::new();
                for (l, &i) in self.p1.iter().enumerate() {
                    for b in alg.block(i, u) {
                        // generator l sent to (λ_{k,l})_k, then times b
                        let mut col = Vec::with_capacity(rows);
                        for (k, &j) in self.p0.iter().enumerate() {
                            let prod = alg.multiply(&self.lambda[l][k], &alg.unit_vector(b));
                            col.extend(alg.block(j, u).into_iter().map(|c| prod[c].clone()));
                        }
                        cols.push(col);
                    }
                }
                Matrix::from_columns(rows, &cols)
            })
            .collect();
        ModuleMap { blocks }
    }
}

/// Direct sum `⊕_k e_{vertices[k]} Λ`; at vertex `u` the coordinates are the
/// blocks `e_{vertices[k]} Λ e_u` in summand order.
pub fn projective_sum<F: Field>(alg: &Algebra<F>, vertices: &[usize]) -> ModuleRep<F> {
    let parts: Vec<ModuleRep<F>> = vertices.iter().map(|&j| ModuleRep::projective(alg, j)).collect();
    ModuleRep::direct_sum_all(alg, &parts)
}

/// Direct sum `⊕_k D(Λ e_{vertices[k]})`.
pub fn injective_sum<F: Field>(alg: &Algebra<F>, vertices: &[usize]) -> ModuleRep<F> {
    let parts: Vec<ModuleRep<F>> = vertices.iter().map(|&j| ModuleRep::injective(alg, j)).collect();
    ModuleRep::direct_sum_all(alg, &parts)
}

/// Generators of a complement of `rad M` at each vertex, as `(vertex, vector)`.
pub fn top_generators<F: Field>(m: &ModuleRep<F>) -> Vec<(usize, Vec<F>)> {
    let rad = m.radical();
    let mut gens = Vec::new();
    for v in 0..m.vertex_count() {
        for k in rad.parts[v].free_coordinates() {
            gens.push((v, unit(m.dims()[v], k)));
        }
    }
    gens
}

/// Projective cover `⊕ e_{v_k} Λ -> M` sending the `k`-th idempotent to the
/// `k`-th top generator.
pub fn projective_cover<F: Field>(
    alg: &Algebra<F>,
    m: &ModuleRep<F>,
) -> (Vec<usize>, ModuleRep<F>, ModuleMap<F>) {
    let gens = top_generators(m);
    let vertices: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let p = projective_sum(alg, &vertices);
    let blocks = (0..alg.vertex_count())
        .map(|u| {
            let mut cols = Vec::new();
            for (j, g) in &gens {
                for b in alg.block(*j, u) {
                    let act = m.act_word(&alg.basis()[b].word, *j);
                    cols.push(act.mul_vec(g));
                }
            }
            Matrix::from_columns(m.dims()[u], &cols)
        })
        .collect();
    (vertices, p, ModuleMap { blocks })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("projective cover is not surjective")]
    NotSurjective,
    #[error("kernel of the projective cover is not in the radical")]
    NotMinimal,
}

/// Minimal projective presentation. Minimality is certified: the cover is
/// surjective and its kernel lies in `rad P_0`.
pub fn min_presentation<F: Field>(
    alg: &Algebra<F>,
    m: &ModuleRep<F>,
) -> Result<Presentation<F>, PresentationError> {
    let (p0, p, cover) = projective_cover(alg, m);
    if m.image(&cover) != m.full_sub() {
        return Err(PresentationError::NotSurjective);
    }
    let kernel = p.kernel(&cover);
    if !kernel.is_subrep_of(&p.radical()) {
        return Err(PresentationError::NotMinimal);
    }
    let (k, inclusion) = p.restrict(&kernel);
    let mut p1 = Vec::new();
    let mut lambda = Vec::new();
    for (u, g) in top_generators(&k) {
        let kappa = inclusion.blocks[u].mul_vec(&g);
        let mut comps = Vec::with_capacity(p0.len());
        let mut pos = 0;
        for &j in &p0 {
            let mut el = vec![F::zero(); alg.dim()];
            for c in alg.block(j, u) {
                el[c] = kappa[pos].clone();
                pos += 1;
            }
            comps.push(el);
        }
        p1.push(u);
        lambda.push(comps);
    }
    Ok(Presentation { p0, p1, lambda })
}

/// `ν` on multiplicity vectors: `ν(e_{σ(i)} Λ) = e_i Λ`.
pub fn nakayama_nu<F>(nak: &NakayamaData<F>, multiplicities: &[usize]) -> Vec<usize> {
    let inv = nak.sigma_inverse();
    let mut out = vec![0; multiplicities.len()];
    for (j, &m) in multiplicities.iter().enumerate() {
        out[inv[j]] += m;
    }
    out
}

/// `ν` applied to the differential of a presentation: the map
/// `⊕_l D(Λ e_{p1[l]}) -> ⊕_k D(Λ e_{p0[k]})` dual to
/// `(μ_k) -> (Σ_k μ_k λ_{k,l})_l`.
pub fn nu_of_differential<F: Field>(
    alg: &Algebra<F>,
    pres: &Presentation<F>,
) -> (ModuleRep<F>, ModuleRep<F>, ModuleMap<F>) {
    let source = injective_sum(alg, &pres.p1);
    let target = injective_sum(alg, &pres.p0);
    let blocks = (0..alg.vertex_count())
        .map(|v| {
            let col_blocks: Vec<Vec<usize>> = pres.p1.iter().map(|&i| alg.block(v, i)).collect();
            let mut rows = Vec::new();
            for (k, &j) in pres.p0.iter().enumerate() {
                for b in alg.block(v, j) {
                    // row (k, b) of ν(g)_v = column (k, b) of A_v
                    let mut row = Vec::new();
                    for (l, cb) in col_blocks.iter().enumerate() {
                        let prod = alg.multiply(&alg.unit_vector(b), &pres.lambda[l][k]);
                        row.extend(cb.iter().map(|&c| prod[c].clone()));
                    }
                    rows.push(row);
                }
            }
            let cols = source.dims()[v];
            Matrix::from_rows(rows.len(), cols, rows)
        })
        .collect();
    (source, target, ModuleMap { blocks })
}

/// `τ X = ker(ν P_1 -> ν P_0)` for the minimal presentation of `X`.
pub fn tau<F: Field>(alg: &Algebra<F>, x: &ModuleRep<F>) -> Result<ModuleRep<F>, PresentationError> {
    let pres = min_presentation(alg, x)?;
    Ok(tau_from_presentation(alg, &pres))
}

pub fn tau_from_presentation<F: Field>(alg: &Algebra<F>, pres: &Presentation<F>) -> ModuleRep<F> {
    let (source, _, map) = nu_of_differential(alg, pres);
    let kernel: SubRep<F> = source.kernel(&map);
    source.restrict(&kernel).0
}

/// `Hom(X, τX) = 0`.
pub fn is_tau_rigid<F: Field>(alg: &Algebra<F>, x: &ModuleRep<F>) -> Result<bool, PresentationError> {
    let t = tau(alg, x)?;
    Ok(t.is_zero() || x.hom_dim(&t) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;
    use crate::quiver::parse_quiver;
    use crate::scalar::Rational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(code: &str) -> Algebra<Rational> {
        Algebra::build(&parse_quiver(code).unwrap()).unwrap()
    }

    #[test]
    fn presentations_of_simples() {
        let a = alg("A2");
        let p = min_presentation(&a, &ModuleRep::simple(&a, 0)).unwrap();
        assert_eq!(p.p0, vec![0]);
        assert_eq!(p.p1, vec![1]);
        assert_eq!(p.g_vector(2), vec![1, -1]);
        let a3 = alg("A3");
        let p = min_presentation(&a3, &ModuleRep::simple(&a3, 1)).unwrap();
        assert_eq!(p.p0_multiplicities(3), vec![0, 1, 0]);
        assert_eq!(p.p1_multiplicities(3), vec![1, 0, 1]);
        for j in 0..3 {
            let p = min_presentation(&a3, &ModuleRep::projective(&a3, j)).unwrap();
            assert_eq!(p.p0, vec![j]);
            assert!(p.p1.is_empty());
        }
    }

    #[test]
    fn presentation_is_exact() {
        // im(P_1 -> P_0) = ker(P_0 -> X), checked on simples and radicals
        for code in ["A3", "D4"] {
            let a = alg(code);
            for j in 0..a.vertex_count() {
                let p = ModuleRep::projective(&a, j);
                let (rad, _) = p.restrict(&p.radical());
                for m in [ModuleRep::simple(&a, j), rad] {
                    let pres = min_presentation(&a, &m).unwrap();
                    let (_, p0, cover) = projective_cover(&a, &m);
                    let p1 = projective_sum(&a, &pres.p1);
                    let d = pres.differential(&a);
                    assert!(p1.is_module_map(&p0, &d));
                    assert_eq!(p0.image(&d), p0.kernel(&cover));
                }
            }
        }
    }

    #[test]
    fn nu_permutes_projectives() {
        let a = alg("A3");
        let nak = a.nakayama().unwrap();
        assert_eq!(nakayama_nu(&nak, &[1, 0, 0]), vec![0, 0, 1]);
        assert_eq!(nakayama_nu(&nak, &[0, 2, 1]), vec![1, 2, 0]);
        let d4 = alg("D4").nakayama().unwrap();
        assert_eq!(nakayama_nu(&d4, &[1, 0, 3, 0]), vec![1, 0, 3, 0]);
    }

    #[test]
    fn nu_differential_is_module_map() {
        let a = alg("D4");
        for j in 0..4 {
            let pres = min_presentation(&a, &ModuleRep::simple(&a, j)).unwrap();
            let (s, t, f) = nu_of_differential(&a, &pres);
            assert!(s.is_module_map(&t, &f));
        }
    }

    #[test]
    fn tau_of_projectives_and_simples() {
        let a = alg("A2");
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for j in 0..2 {
            assert!(tau(&a, &ModuleRep::projective(&a, j)).unwrap().is_zero());
        }
        // τ S_1 ≅ S_2 and τ S_2 ≅ S_1
        let t1 = tau(&a, &ModuleRep::simple(&a, 0)).unwrap();
        assert!(t1.is_isomorphic(&ModuleRep::simple(&a, 1), &mut rng));
        let lam = ModuleRep::from_right_ideal(&a, &Subspace::full(4));
        assert!(is_tau_rigid(&a, &lam).unwrap());
        let s = ModuleRep::simple(&a, 0).direct_sum(&ModuleRep::simple(&a, 1));
        assert!(!is_tau_rigid(&a, &s).unwrap());
    }

    #[test]
    fn tau_is_additive() {
        let a = alg("A3");
        let s0 = ModuleRep::simple(&a, 0);
        let s2 = ModuleRep::simple(&a, 2);
        let sum = tau(&a, &s0.direct_sum(&s2)).unwrap();
        let parts = tau(&a, &s0).unwrap().direct_sum(&tau(&a, &s2).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        assert!(sum.is_isomorphic(&parts, &mut rng));
    }
}
