//! Finite dimensional right modules as quiver representations.
//!
//! A module assigns a vector space `M_v = M e_v` to each vertex and a matrix
//! to each arrow `x: u -> v` of the double quiver, mapping `M_u` to `M_v`
//! (column vectors). The path `x y` acts as `M_y M_x`.

use std::fmt;

use rand::Rng;

use crate::algebra::Algebra;
use crate::linalg::{is_zero_vec, unit, Matrix, Subspace};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("preprojective relation fails at vertex {0}")]
    RelationViolated(usize),
}

#[derive(Clone, PartialEq)]
pub struct ModuleRep<F> {
    dims: Vec<usize>,
    /// `(source, target)` of every arrow.
    shape: Vec<(usize, usize)>,
    maps: Vec<Matrix<F>>,
}

/// Module homomorphism, one matrix per vertex (`N_v x M_v`).
#[derive(Clone, PartialEq)]
pub struct ModuleMap<F> {
    pub blocks: Vec<Matrix<F>>,
}

/// Submodule given by one subspace per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct SubRep<F> {
    pub parts: Vec<Subspace<F>>,
}

impl<F: Field> fmt::Debug for ModuleRep<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleRep")
            .field("dims", &self.dims)
            .field("maps", &self.maps)
            .finish()
    }
}

impl<F: Field> fmt::Debug for ModuleMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.blocks).finish()
    }
}

impl<F: Field> SubRep<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Subspace::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.parts.iter().map(Subspace::dim).sum()
    }

    pub fn is_full(&self) -> bool {
        self.parts.iter().all(Subspace::is_full)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Subspace::is_zero)
    }

    pub fn sum(&self, other: &Self) -> Self {
        SubRep {
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.sum(b)).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        SubRep {
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a.intersection(b))
                .collect(),
        }
    }

    pub fn is_subrep_of(&self, other: &Self) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a.is_subspace_of(b))
    }
}

impl<F: Field> ModuleMap<F> {
    pub fn zero(from: &ModuleRep<F>, to: &ModuleRep<F>) -> Self {
        ModuleMap {
            blocks: (0..from.dims.len())
                .map(|v| Matrix::zeros(to.dims[v], from.dims[v]))
                .collect(),
        }
    }

    pub fn identity(m: &ModuleRep<F>) -> Self {
        ModuleMap {
            blocks: m.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &ModuleMap<F>) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().zip(&first.blocks).map(|(g, f)| g.mul(f)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        ModuleMap {
            blocks: self.blocks.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn trace(&self) -> F {
        self.blocks.iter().fold(F::zero(), |acc, b| acc + b.trace())
    }

    /// Entries flattened vertex by vertex.
    pub fn flatten(&self) -> Vec<F> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }
}

/// Linear combination `Σ c_k f_k` of maps with the same shape.
pub fn combine<F: Field>(maps: &[ModuleMap<F>], coeffs: &[F]) -> ModuleMap<F> {
    let mut acc = maps[0].scale(&coeffs[0]);
    for (f, c) in maps.iter().zip(coeffs).skip(1) {
        if !c.is_zero() {
            acc = acc.add(&f.scale(c));
        }
    }
    acc
}

impl<F: Field> ModuleRep<F> {
    pub fn zero(alg: &Algebra<F>) -> Self {
        Self::new(alg, vec![0; alg.vertex_count()], |_, s, t| Matrix::zeros(t, s))
    }

    fn new(alg: &Algebra<F>, dims: Vec<usize>, mut f: impl FnMut(usize, usize, usize) -> Matrix<F>) -> Self {
        let shape: Vec<(usize, usize)> = alg.arrows().iter().map(|a| (a.source, a.target)).collect();
        let maps = shape
            .iter()
            .enumerate()
            .map(|(x, &(s, t))| f(x, dims[s], dims[t]))
            .collect();
        ModuleRep { dims, shape, maps }
    }

    /// Builds a module from explicit data; panics if shapes disagree.
    pub fn from_parts(alg: &Algebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        let mut it = maps.into_iter();
        let m = Self::new(alg, dims, |_, _, _| it.next().expect("one matrix per arrow"));
        for (x, &(s, t)) in m.shape.iter().enumerate() {
            assert_eq!((m.maps[x].rows(), m.maps[x].cols()), (m.dims[t], m.dims[s]));
        }
        m
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.len()
    }

    pub fn arrow_map(&self, x: usize) -> &Matrix<F> {
        &self.maps[x]
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// The simple module at vertex `i`.
    pub fn simple(alg: &Algebra<F>, i: usize) -> Self {
        let mut dims = vec![0; alg.vertex_count()];
        dims[i] = 1;
        Self::new(alg, dims, |_, s, t| Matrix::zeros(t, s))
    }

    /// A right ideal (or any right submodule of `Λ`) with basis
    /// `X e_v` at vertex `v` taken from the canonical echelon form.
    pub fn from_right_ideal(alg: &Algebra<F>, ideal: &Subspace<F>) -> Self {
        let parts = right_ideal_parts(alg, ideal);
        Self::new(alg, parts.iter().map(Subspace::dim).collect(), |x, s, t| {
            let src = &parts[alg.arrows()[x].source];
            let tgt = &parts[alg.arrows()[x].target];
            let cols: Vec<Vec<F>> = src
                .basis()
                .iter()
                .map(|u| {
                    tgt.coords(&alg.right_arrow_act(u, x))
                        .expect("subspace is a right ideal")
                })
                .collect();
            let _ = s;
            Matrix::from_columns(t, &cols)
        })
    }

    /// The indecomposable projective `e_j Λ`.
    pub fn projective(alg: &Algebra<F>, j: usize) -> Self {
        Self::from_right_ideal(alg, &Subspace::coordinate(alg.dim(), alg.starting_at(j)))
    }

    /// The indecomposable injective `D(Λ e_j)`: at vertex `v` the dual of
    /// `e_v Λ e_j`, arrows acting by the transpose of left multiplication.
    pub fn injective(alg: &Algebra<F>, j: usize) -> Self {
        let blocks: Vec<Vec<usize>> = (0..alg.vertex_count()).map(|v| alg.block(v, j)).collect();
        Self::new(alg, blocks.iter().map(Vec::len).collect(), |x, s, t| {
            let a = &alg.arrows()[x];
            let mut m = Matrix::zeros(t, s);
            for (r, &b) in blocks[a.target].iter().enumerate() {
                for (k, c) in alg.left_arrow_basis(x, b) {
                    let col = blocks[a.source].iter().position(|e| e == k).expect("bigrading");
                    m[(r, col)] = c.clone();
                }
            }
            m
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        ModuleRep {
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            shape: self.shape.clone(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }

    pub fn direct_sum_all(alg: &Algebra<F>, parts: &[Self]) -> Self {
        parts.iter().fold(Self::zero(alg), |acc, m| acc.direct_sum(m))
    }

    /// Checks `Σ_{s(x)=v} sign(x) M_x̄ M_x = 0` at every vertex.
    pub fn check_relations(&self, alg: &Algebra<F>) -> Result<(), ModuleError> {
        for v in 0..self.dims.len() {
            let mut acc = Matrix::zeros(self.dims[v], self.dims[v]);
            for (x, a) in alg.arrows().iter().enumerate() {
                if a.source == v {
                    let term = self.maps[a.star].mul(&self.maps[x]).scale(&F::from_i64(a.sign));
                    acc = acc.add(&term);
                }
            }
            if !acc.is_zero() {
                return Err(ModuleError::RelationViolated(v + 1));
            }
        }
        Ok(())
    }

    /// Action of the path `word` on `M_v`, as a matrix.
    pub fn act_word(&self, word: &[usize], start: usize) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims[start]);
        for &x in word {
            m = self.maps[x].mul(&m);
        }
        m
    }

    /// Action of the basis element `b` of `Λ`, as a map `M_{s(b)} -> M_{t(b)}`.
    pub fn act_basis(&self, alg: &Algebra<F>, b: usize) -> Matrix<F> {
        self.act_word(&alg.basis()[b].word, alg.basis()[b].source)
    }

    pub fn full_sub(&self) -> SubRep<F> {
        SubRep {
            parts: self.dims.iter().map(|&d| Subspace::full(d)).collect(),
        }
    }

    pub fn zero_sub(&self) -> SubRep<F> {
        SubRep {
            parts: self.dims.iter().map(|&d| Subspace::zero(d)).collect(),
        }
    }

    /// Smallest submodule containing the given vectors `(vertex, vector)`.
    pub fn generated_by(&self, gens: impl IntoIterator<Item = (usize, Vec<F>)>) -> SubRep<F> {
        let mut sub = self.zero_sub();
        let mut stack: Vec<(usize, Vec<F>)> = gens.into_iter().collect();
        while let Some((v, vec)) = stack.pop() {
            let mut reduced = vec.clone();
            sub.parts[v].reduce(&mut reduced);
            if is_zero_vec(&reduced) {
                continue;
            }
            sub.parts[v].insert(reduced.clone());
            for (x, &(s, t)) in self.shape.iter().enumerate() {
                if s == v {
                    let img = self.maps[x].mul_vec(&reduced);
                    if !is_zero_vec(&img) {
                        stack.push((t, img));
                    }
                }
            }
        }
        sub
    }

    /// Closure of an arbitrary family of subspaces under the arrows.
    pub fn closure(&self, sub: &SubRep<F>) -> SubRep<F> {
        self.generated_by(
            sub.parts
                .iter()
                .enumerate()
                .flat_map(|(v, p)| p.basis().iter().map(move |b| (v, b.clone()))),
        )
    }

    pub fn is_submodule(&self, sub: &SubRep<F>) -> bool {
        self.shape.iter().enumerate().all(|(x, &(s, t))| {
            sub.parts[s]
                .basis()
                .iter()
                .all(|b| sub.parts[t].contains(&self.maps[x].mul_vec(b)))
        })
    }

    /// `rad M = Σ_x im M_x`.
    pub fn radical(&self) -> SubRep<F> {
        let mut parts: Vec<Subspace<F>> = self.dims.iter().map(|&d| Subspace::zero(d)).collect();
        for (x, &(s, t)) in self.shape.iter().enumerate() {
            for c in 0..self.dims[s] {
                parts[t].insert(self.maps[x].column(c));
            }
        }
        SubRep { parts }
    }

    /// Multiplicity of each simple in the top `M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        let rad = self.radical();
        self.dims.iter().zip(rad.dims()).map(|(d, r)| d - r).collect()
    }

    /// The submodule as a module in its own right, with the inclusion map.
    pub fn restrict(&self, sub: &SubRep<F>) -> (ModuleRep<F>, ModuleMap<F>) {
        let dims = sub.dims();
        let maps = self
            .shape
            .iter()
            .enumerate()
            .map(|(x, &(s, t))| {
                let cols: Vec<Vec<F>> = sub.parts[s]
                    .basis()
                    .iter()
                    .map(|b| {
                        sub.parts[t]
                            .coords(&self.maps[x].mul_vec(b))
                            .expect("not a submodule")
                    })
                    .collect();
                Matrix::from_columns(dims[t], &cols)
            })
            .collect();
        let inclusion = ModuleMap {
            blocks: sub
                .parts
                .iter()
                .enumerate()
                .map(|(v, p)| Matrix::from_columns(self.dims[v], p.basis()))
                .collect(),
        };
        (
            ModuleRep {
                dims,
                shape: self.shape.clone(),
                maps,
            },
            inclusion,
        )
    }

    /// `M / U` with the projection map. The quotient basis at `v` is given
    /// by the coordinates that are not pivots of `U_v`.
    pub fn quotient(&self, sub: &SubRep<F>) -> (ModuleRep<F>, ModuleMap<F>) {
        let free: Vec<Vec<usize>> = sub.parts.iter().map(Subspace::free_coordinates).collect();
        let project = |v: usize, vec: &[F]| -> Vec<F> {
            let mut w = vec.to_vec();
            sub.parts[v].reduce(&mut w);
            free[v].iter().map(|&k| w[k].clone()).collect()
        };
        let dims: Vec<usize> = free.iter().map(Vec::len).collect();
        let maps = self
            .shape
            .iter()
            .enumerate()
            .map(|(x, &(s, t))| {
                let cols: Vec<Vec<F>> = free[s]
                    .iter()
                    .map(|&k| project(t, &self.maps[x].column(k)))
                    .collect();
                Matrix::from_columns(dims[t], &cols)
            })
            .collect();
        let projection = ModuleMap {
            blocks: (0..self.dims.len())
                .map(|v| {
                    let cols: Vec<Vec<F>> =
                        (0..self.dims[v]).map(|k| project(v, &unit(self.dims[v], k))).collect();
                    Matrix::from_columns(dims[v], &cols)
                })
                .collect(),
        };
        (
            ModuleRep {
                dims,
                shape: self.shape.clone(),
                maps,
            },
            projection,
        )
    }

    pub fn is_module_map(&self, to: &ModuleRep<F>, f: &ModuleMap<F>) -> bool {
        self.shape
            .iter()
            .enumerate()
            .all(|(x, &(s, t))| f.blocks[t].mul(&self.maps[x]) == to.maps[x].mul(&f.blocks[s]))
    }

    /// Kernel of `f: self -> N` as a submodule of `self`.
    pub fn kernel(&self, f: &ModuleMap<F>) -> SubRep<F> {
        SubRep {
            parts: f
                .blocks
                .iter()
                .enumerate()
                .map(|(v, b)| Subspace::spanned_by(self.dims[v], b.nullspace()))
                .collect(),
        }
    }

    /// Image of `f: M -> self` as a submodule of `self`.
    pub fn image(&self, f: &ModuleMap<F>) -> SubRep<F> {
        SubRep {
            parts: f
                .blocks
                .iter()
                .enumerate()
                .map(|(v, b)| Subspace::spanned_by(self.dims[v], (0..b.cols()).map(|c| b.column(c))))
                .collect(),
        }
    }

    /// Basis of `Hom(self, N)`: solutions of `f_t M_x = N_x f_s` for all arrows.
    pub fn hom_basis(&self, to: &ModuleRep<F>) -> Vec<ModuleMap<F>> {
        let nv = self.dims.len();
        let mut offset = vec![0; nv + 1];
        for v in 0..nv {
            offset[v + 1] = offset[v] + to.dims[v] * self.dims[v];
        }
        let unknowns = offset[nv];
        if unknowns == 0 {
            return Vec::new();
        }
        let var = |v: usize, r: usize, c: usize| offset[v] + r * self.dims[v] + c;
        let mut rows: Vec<Vec<F>> = Vec::new();
        for (x, &(s, t)) in self.shape.iter().enumerate() {
            let (mx, nx) = (&self.maps[x], &to.maps[x]);
            for r in 0..to.dims[t] {
                for c in 0..self.dims[s] {
                    let mut row = vec![F::zero(); unknowns];
                    for k in 0..self.dims[t] {
                        let a = &mx[(k, c)];
                        if !a.is_zero() {
                            row[var(t, r, k)] = row[var(t, r, k)].clone() + a.clone();
                        }
                    }
                    for k in 0..to.dims[s] {
                        let a = &nx[(r, k)];
                        if !a.is_zero() {
                            row[var(s, k, c)] = row[var(s, k, c)].clone() - a.clone();
                        }
                    }
                    if !is_zero_vec(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        let system = Matrix::from_rows(rows.len(), unknowns, rows);
        system
            .nullspace()
            .into_iter()
            .map(|sol| ModuleMap {
                blocks: (0..nv)
                    .map(|v| {
                        let m = self.dims[v];
                        let entries = &sol[offset[v]..offset[v + 1]];
                        Matrix::from_rows(
                            to.dims[v],
                            m,
                            (0..to.dims[v]).map(|r| entries[r * m..(r + 1) * m].to_vec()).collect(),
                        )
                    })
                    .collect(),
            })
            .collect()
    }

    pub fn hom_dim(&self, to: &ModuleRep<F>) -> usize {
        self.hom_basis(to).len()
    }

    /// Sum of the images of all maps `T -> self`.
    pub fn trace_of(&self, t: &ModuleRep<F>) -> SubRep<F> {
        let mut acc = self.zero_sub();
        for f in t.hom_basis(self) {
            acc = acc.sum(&self.image(&f));
        }
        acc
    }

    /// Dimension of `End(M) / J(End M)`. `J` is the radical of the trace
    /// form `(f, g) -> tr(f g)`, valid in characteristic zero and in
    /// characteristic larger than `dim M`.
    pub fn semisimple_end_dim(&self) -> usize {
        let end = self.hom_basis(self);
        let k = end.len();
        let mut gram = Matrix::zeros(k, k);
        for a in 0..k {
            for b in a..k {
                let t = end[a].compose(&end[b]).trace();
                gram[(a, b)] = t.clone();
                gram[(b, a)] = t;
            }
        }
        gram.rank()
    }

    /// Indecomposable (over the algebraic closure): nonzero with local
    /// endomorphism ring whose residue field is the ground field.
    pub fn is_indecomposable(&self) -> bool {
        !self.is_zero() && self.semisimple_end_dim() == 1
    }

    /// Radical of `End(M)` as a list of maps (basis).
    pub fn end_radical(&self) -> (Vec<ModuleMap<F>>, Vec<ModuleMap<F>>) {
        let end = self.hom_basis(self);
        let k = end.len();
        let mut gram = Matrix::zeros(k, k);
        for a in 0..k {
            for b in a..k {
                let t = end[a].compose(&end[b]).trace();
                gram[(a, b)] = t.clone();
                gram[(b, a)] = t;
            }
        }
        let rad = gram
            .nullspace()
            .into_iter()
            .map(|c| combine(&end, &c))
            .collect();
        (end, rad)
    }

    /// Splits off a direct summand using Fitting's lemma: for an endomorphism
    /// `φ`, `M = im φ^N ⊕ ker φ^N` with `N = dim M`. Tries the basis
    /// endomorphisms shifted by small integers.
    pub fn fitting_split(&self) -> Option<(SubRep<F>, SubRep<F>)> {
        let end = self.hom_basis(self);
        let id = ModuleMap::identity(self);
        for phi in &end {
            for c in [0i64, 1, -1, 2, -2] {
                let psi = phi.add(&id.scale(&F::from_i64(-c)));
                let mut power = psi.clone();
                for _ in 1..self.total_dim() {
                    power = power.compose(&psi);
                }
                let im = self.image(&power);
                let ker = self.kernel(&power);
                if !im.is_zero() && !ker.is_zero() {
                    return Some((im, ker));
                }
            }
        }
        None
    }

    /// Decomposition into indecomposable summands, each certified by its
    /// endomorphism ring. `None` if a splitting could not be found.
    pub fn decompose(&self) -> Option<Vec<ModuleRep<F>>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        if self.is_indecomposable() {
            return Some(vec![self.clone()]);
        }
        let (a, b) = self.fitting_split()?;
        let mut out = self.restrict(&a).0.decompose()?;
        out.extend(self.restrict(&b).0.decompose()?);
        Some(out)
    }

    /// Isomorphism test: equal dimension vectors and an invertible element
    /// among seeded random combinations of a basis of `Hom(self, N)`.
    pub fn is_isomorphic<R: Rng>(&self, to: &ModuleRep<F>, rng: &mut R) -> bool {
        if self.dims != to.dims {
            return false;
        }
        if self.is_zero() {
            return true;
        }
        let basis = self.hom_basis(to);
        if basis.is_empty() {
            return false;
        }
        for _ in 0..6 {
            let coeffs: Vec<F> = (0..basis.len())
                .map(|_| F::from_i64(rng.gen_range(-1_000_000..=1_000_000)))
                .collect();
            if combine(&basis, &coeffs).is_invertible() {
                return true;
            }
        }
        false
    }

    /// `{λ ∈ Λ : M λ = 0}`.
    pub fn annihilator(&self, alg: &Algebra<F>) -> Subspace<F> {
        let dim = alg.dim();
        let columns: Vec<Vec<F>> = (0..dim)
            .map(|b| {
                let e = &alg.basis()[b];
                let act = self.act_basis(alg, b);
                // place the block at (source, target) inside a flattened
                // vector over all vertex pairs
                let mut flat = Vec::new();
                for s in 0..self.dims.len() {
                    for t in 0..self.dims.len() {
                        if s == e.source && t == e.target {
                            flat.extend(act.entries().iter().cloned());
                        } else {
                            flat.extend(std::iter::repeat_n(F::zero(), self.dims[s] * self.dims[t]));
                        }
                    }
                }
                flat
            })
            .collect();
        let rows = columns.first().map(Vec::len).unwrap_or(0);
        if rows == 0 {
            return Subspace::full(dim);
        }
        let system = Matrix::from_columns(rows, &columns);
        Subspace::spanned_by(dim, system.nullspace())
    }

    /// JSON dump: dimension vector and action matrices.
    pub fn dump(&self, alg: &Algebra<F>) -> serde_json::Value {
        let arrows: Vec<serde_json::Value> = self
            .maps
            .iter()
            .enumerate()
            .map(|(x, m)| {
                let rows: Vec<Vec<serde_json::Value>> =
                    (0..m.rows()).map(|r| m.row(r).iter().map(F::to_json).collect()).collect();
                serde_json::json!({ "arrow": alg.arrows()[x].label, "matrix": rows })
            })
            .collect();
        serde_json::json!({ "dims": self.dims, "actions": arrows })
    }
}

/// `X e_v` for each vertex, as subspaces of `Λ`.
pub fn right_ideal_parts<F: Field>(alg: &Algebra<F>, ideal: &Subspace<F>) -> Vec<Subspace<F>> {
    (0..alg.vertex_count())
        .map(|v| {
            let coords = alg.ending_at(v);
            Subspace::spanned_by(
                alg.dim(),
                ideal.basis().iter().map(|u| {
                    let mut w = vec![F::zero(); alg.dim()];
                    for &k in &coords {
                        w[k] = u[k].clone();
                    }
                    w
                }),
            )
        })
        .collect()
}
