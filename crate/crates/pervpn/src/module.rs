//! Finite-dimensional representations of the quiver with relations —
//! equivalently, finite-dimensional left modules over the quotient path
//! algebra — together with the constructions the rest of the crate is built
//! from: hom spaces, kernels/images/cokernels, duality, projective covers,
//! and the named modules attached to the stratified projective space.
//!
//! A representation assigns a vector space to each vertex and a matrix to
//! each arrow (`maps[a]: M_s -> M_t` for an arrow `a: s -> t`, acting on
//! column vectors). Construction always verifies the defining relations, so
//! an ill-formed representation cannot circulate.

use crate::algebra::{AlgElem, An, PathAlgebra};
use crate::field::Field;
use crate::linalg::Mat;
use crate::quiver::Path;
use rand::Rng;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// A finite-dimensional representation of the quiver with relations.
#[derive(Clone)]
pub struct Module<F: Field> {
    pub alg: Arc<PathAlgebra<F>>,
    /// Dimension of the vector space at each vertex.
    pub dims: Vec<usize>,
    /// One matrix per arrow `a: s -> t`, of shape `dims[t] x dims[s]`.
    pub maps: Vec<Mat<F>>,
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.maps == other.maps
    }
}

impl<F: Field> fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dims {:?})", self.dims)
    }
}

impl<F: Field> Module<F> {
    /// Build a representation, checking arrow shapes and all defining
    /// relations of the algebra.
    pub fn new(alg: Arc<PathAlgebra<F>>, dims: Vec<usize>, maps: Vec<Mat<F>>) -> Self {
        assert_eq!(dims.len(), alg.num_vertices(), "one dimension per vertex");
        assert_eq!(maps.len(), alg.quiver.arrows.len(), "one matrix per arrow");
        for (a, m) in maps.iter().enumerate() {
            let arr = &alg.quiver.arrows[a];
            assert_eq!(
                (m.rows(), m.cols()),
                (dims[arr.target], dims[arr.source]),
                "arrow {} has a wrongly shaped matrix",
                arr.name
            );
        }
        let module = Module { alg, dims, maps };
        for rel in module.alg.clone().relations() {
            let s = rel[0].1.source;
            let t = module.alg.quiver.path_target(&rel[0].1);
            let mut acc: Mat<F> = Mat::zero(module.dims[t], module.dims[s]);
            for (c, p) in rel {
                acc = &acc + &module.path_action(p).scale(c);
            }
            assert!(
                acc.is_zero(),
                "representation violates a defining relation at {s} -> {t}"
            );
        }
        module
    }

    pub fn zero(alg: Arc<PathAlgebra<F>>) -> Self {
        let dims = vec![0; alg.num_vertices()];
        let maps = alg
            .quiver
            .arrows
            .iter()
            .map(|_| Mat::zero(0, 0))
            .collect();
        Module { alg, dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// The matrix by which a free path acts (identity for a lazy path).
    pub fn path_action(&self, p: &Path) -> Mat<F> {
        let mut acc: Mat<F> = Mat::identity(self.dims[p.source]);
        for &a in &p.arrows {
            acc = self.maps[a as usize].matmul(&acc);
        }
        acc
    }

    /// The matrix by which an algebra element with all monomials in
    /// `e_t A e_s` acts, as a map `M_s -> M_t`. Panics if a monomial has
    /// different endpoints.
    pub fn elem_action(&self, x: &AlgElem<F>, s: usize, t: usize) -> Mat<F> {
        let mut acc: Mat<F> = Mat::zero(self.dims[t], self.dims[s]);
        for (id, c) in x.iter() {
            let m = self.alg.monomial(id);
            assert_eq!(
                (m.source, m.target),
                (s, t),
                "element does not lie in the requested component"
            );
            acc = &acc + &self.path_action(&m.path).scale(c);
        }
        acc
    }

    /// The twisted dual: transpose every arrow matrix and swap each arrow
    /// with its partner under the algebra's anti-involution. This is the
    /// contravariant exact duality fixing every simple.
    pub fn dual(&self) -> Module<F> {
        let swap = self
            .alg
            .arrow_swap()
            .expect("duality needs the arrow involution")
            .to_vec();
        let maps = (0..self.maps.len())
            .map(|a| self.maps[swap[a]].transpose())
            .collect();
        Module::new(self.alg.clone(), self.dims.clone(), maps)
    }

    /// Direct sum with block-diagonal arrow action.
    pub fn direct_sum(parts: &[&Module<F>]) -> Module<F> {
        assert!(!parts.is_empty(), "direct sum of an empty family: pass the zero module");
        let alg = parts[0].alg.clone();
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
        let maps = (0..alg.quiver.arrows.len())
            .map(|a| {
                let arr = &alg.quiver.arrows[a];
                let mut out: Mat<F> = Mat::zero(dims[arr.target], dims[arr.source]);
                let mut roff = 0;
                let mut coff = 0;
                for m in parts {
                    let blk = &m.maps[a];
                    for r in 0..blk.rows() {
                        for c in 0..blk.cols() {
                            out.set(roff + r, coff + c, blk.at(r, c).clone());
                        }
                    }
                    roff += m.dims[arr.target];
                    coff += m.dims[arr.source];
                }
                out
            })
            .collect();
        Module::new(alg, dims, maps)
    }

    /// Dimensions of the head (quotient by the radical) at each vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|v| self.dims[v] - self.radical_at(v).cols())
            .collect()
    }

    /// Basis (as columns) of the radical component at vertex `v`: the span
    /// of the images of all arrows arriving at `v`.
    fn radical_at(&self, v: usize) -> Mat<F> {
        let incoming: Vec<&Mat<F>> = self
            .alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, arr)| arr.target == v)
            .map(|(a, _)| &self.maps[a])
            .collect();
        if incoming.is_empty() {
            return Mat::zero(self.dims[v], 0);
        }
        Mat::hstack(&incoming).image_basis()
    }
}

/// A homomorphism of representations: one block per vertex, commuting with
/// every arrow. Owns (cheap copies of) its endpoints so composites and
/// exactness constructions are self-contained.
#[derive(Clone)]
pub struct Morphism<F: Field> {
    pub source: Module<F>,
    pub target: Module<F>,
    /// `blocks[v]: source_v -> target_v`.
    pub blocks: Vec<Mat<F>>,
}

impl<F: Field> PartialEq for Morphism<F> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.blocks == other.blocks
    }
}

impl<F: Field> fmt::Debug for Morphism<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Morphism({:?} -> {:?}, rank {})",
            self.source.dims,
            self.target.dims,
            self.rank()
        )
    }
}

impl<F: Field> Morphism<F> {
    /// Build a morphism, checking shapes and the intertwining condition
    /// `target_a . f_s = f_t . source_a` for every arrow `a: s -> t`.
    pub fn new(source: Module<F>, target: Module<F>, blocks: Vec<Mat<F>>) -> Self {
        assert_eq!(blocks.len(), source.dims.len());
        for (v, b) in blocks.iter().enumerate() {
            assert_eq!(
                (b.rows(), b.cols()),
                (target.dims[v], source.dims[v]),
                "block at vertex {v} has the wrong shape"
            );
        }
        for (a, arr) in source.alg.quiver.arrows.iter().enumerate() {
            let lhs = target.maps[a].matmul(&blocks[arr.source]);
            let rhs = blocks[arr.target].matmul(&source.maps[a]);
            assert_eq!(lhs, rhs, "blocks do not commute with arrow {}", arr.name);
        }
        Morphism {
            source,
            target,
            blocks,
        }
    }

    pub fn zero(source: Module<F>, target: Module<F>) -> Self {
        let blocks = (0..source.dims.len())
            .map(|v| Mat::zero(target.dims[v], source.dims[v]))
            .collect();
        Morphism::new(source, target, blocks)
    }

    pub fn identity(m: &Module<F>) -> Self {
        let blocks = m.dims.iter().map(|&d| Mat::identity(d)).collect();
        Morphism::new(m.clone(), m.clone(), blocks)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    /// Total rank (sum over vertices).
    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    /// `self . other` — apply `other` first.
    pub fn compose_after(&self, other: &Morphism<F>) -> Morphism<F> {
        assert_eq!(
            other.target, self.source,
            "composition endpoints do not match"
        );
        let blocks = (0..self.blocks.len())
            .map(|v| self.blocks[v].matmul(&other.blocks[v]))
            .collect();
        Morphism::new(other.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, other: &Morphism<F>) -> Morphism<F> {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let blocks = (0..self.blocks.len())
            .map(|v| &self.blocks[v] + &other.blocks[v])
            .collect();
        Morphism::new(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: &F) -> Morphism<F> {
        let blocks = self.blocks.iter().map(|b| b.scale(c)).collect();
        Morphism::new(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn sub(&self, other: &Morphism<F>) -> Morphism<F> {
        self.add(&other.scale(&-F::one()))
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims == self.target.dims && self.blocks.iter().all(|b| b.is_invertible())
    }

    pub fn inverse(&self) -> Option<Morphism<F>> {
        if !self.is_isomorphism() {
            return None;
        }
        let blocks: Vec<Mat<F>> = self
            .blocks
            .iter()
            .map(|b| b.inverse().expect("checked invertible"))
            .collect();
        Some(Morphism::new(
            self.target.clone(),
            self.source.clone(),
            blocks,
        ))
    }

    /// The dual morphism `D(target) -> D(source)` (transpose blockwise).
    pub fn dual(&self) -> Morphism<F> {
        let blocks = self.blocks.iter().map(|b| b.transpose()).collect();
        Morphism::new(self.target.dual(), self.source.dual(), blocks)
    }

    /// Kernel subrepresentation with its inclusion.
    pub fn kernel(&self) -> (Module<F>, Morphism<F>) {
        let bases: Vec<Mat<F>> = self.blocks.iter().map(|b| b.kernel_basis()).collect();
        self.source.subrep_from_bases(&bases)
    }

    /// Image subrepresentation of the target with its inclusion.
    pub fn image(&self) -> (Module<F>, Morphism<F>) {
        let bases: Vec<Mat<F>> = self.blocks.iter().map(|b| b.image_basis()).collect();
        self.target.subrep_from_bases(&bases)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Module<F>, Morphism<F>) {
        let (_, incl) = self.image();
        self.target.quotient_by(&incl)
    }

    /// Flatten all blocks into a single coordinate vector (row-major,
    /// vertices in order) — the coordinates used by [`hom_space`].
    pub(crate) fn flatten(&self) -> Vec<F> {
        let mut out = Vec::new();
        for b in &self.blocks {
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    out.push(b.at(r, c).clone());
                }
            }
        }
        out
    }
}

impl<F: Field> Module<F> {
    /// Build the subrepresentation spanned by the given per-vertex column
    /// bases (which must be arrow-stable), along with its inclusion.
    fn subrep_from_bases(&self, bases: &[Mat<F>]) -> (Module<F>, Morphism<F>) {
        let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
        let maps: Vec<Mat<F>> = self
            .alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let pushed = self.maps[a].matmul(&bases[arr.source]);
                Mat::coordinates_in_basis(&bases[arr.target], &pushed)
            })
            .collect();
        let sub = Module::new(self.alg.clone(), dims, maps);
        let incl = Morphism::new(sub.clone(), self.clone(), bases.to_vec());
        (sub, incl)
    }

    /// Quotient by the image of an inclusion, with the projection morphism.
    fn quotient_by(&self, incl: &Morphism<F>) -> (Module<F>, Morphism<F>) {
        let nv = self.dims.len();
        let mut projections = Vec::with_capacity(nv);
        let mut reps: Vec<Vec<usize>> = Vec::with_capacity(nv);
        for v in 0..nv {
            let sub = &incl.blocks[v];
            let ambient: Mat<F> = Mat::identity(self.dims[v]);
            let comp = Mat::complement_pivots(sub, &ambient);
            // Invertible change of basis [sub | chosen coordinate vectors];
            // the projection reads off the complement coordinates.
            let chosen = ambient.submatrix(&(0..self.dims[v]).collect::<Vec<_>>(), &comp);
            let full = Mat::hstack(&[sub, &chosen]);
            let inv = full.inverse().expect("subspace basis plus complement is a basis");
            let proj = inv.submatrix(
                &(sub.cols()..self.dims[v]).collect::<Vec<_>>(),
                &(0..self.dims[v]).collect::<Vec<_>>(),
            );
            projections.push(proj);
            reps.push(comp);
        }
        let dims: Vec<usize> = reps.iter().map(|r| r.len()).collect();
        let maps: Vec<Mat<F>> = self
            .alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let rep_cols = Mat::from_fn(self.dims[arr.source], dims[arr.source], |r, c| {
                    if r == reps[arr.source][c] {
                        F::one()
                    } else {
                        F::zero()
                    }
                });
                projections[arr.target]
                    .matmul(&self.maps[a])
                    .matmul(&rep_cols)
            })
            .collect();
        let quo = Module::new(self.alg.clone(), dims, maps);
        let proj = Morphism::new(self.clone(), quo.clone(), projections);
        (quo, proj)
    }
}

impl<F: Field> Module<F> {
    /// Radical subrepresentation — the sum of the images of all arrow
    /// actions — together with its inclusion.
    pub fn radical(&self) -> (Module<F>, Morphism<F>) {
        let nv = self.dims.len();
        let mut bases = Vec::with_capacity(nv);
        for v in 0..nv {
            let incoming: Vec<&Mat<F>> = self
                .alg
                .quiver
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, arr)| arr.target == v)
                .map(|(a, _)| &self.maps[a])
                .collect();
            let span = if incoming.is_empty() {
                Mat::zero(self.dims[v], 0)
            } else {
                Mat::hstack(&incoming)
            };
            bases.push(span.image_basis());
        }
        self.subrep_from_bases(&bases)
    }

    /// The top `M / rad M` with its projection.
    pub fn top(&self) -> (Module<F>, Morphism<F>) {
        let (_, incl) = self.radical();
        self.quotient_by(&incl)
    }

    /// Socle — the joint kernel of all arrow actions, the largest
    /// semisimple subrepresentation — with its inclusion.
    pub fn socle(&self) -> (Module<F>, Morphism<F>) {
        let nv = self.dims.len();
        let mut bases = Vec::with_capacity(nv);
        for v in 0..nv {
            let outgoing: Vec<&Mat<F>> = self
                .alg
                .quiver
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, arr)| arr.source == v)
                .map(|(a, _)| &self.maps[a])
                .collect();
            let stacked = if outgoing.is_empty() {
                Mat::zero(0, self.dims[v])
            } else {
                Mat::vstack(&outgoing)
            };
            bases.push(stacked.kernel_basis());
        }
        self.subrep_from_bases(&bases)
    }
}

/// A basis of the space of homomorphisms `M -> N`, found as the kernel of
/// the intertwining constraints.
pub fn hom_space<F: Field>(m: &Module<F>, n: &Module<F>) -> Vec<Morphism<F>> {
    let nv = m.dims.len();
    // Unknowns: entries of each block, row-major, vertices in order.
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offsets[nv];
    let idx = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims[v] + c;

    let mut rows: Vec<Vec<F>> = Vec::new();
    for (a, arr) in m.alg.quiver.arrows.iter().enumerate() {
        let (s, t) = (arr.source, arr.target);
        // N_a X_s - X_t M_a = 0, one equation per (i, j) in N_t x M_s.
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                let mut row = vec![F::zero(); unknowns];
                for k in 0..n.dims[s] {
                    let coeff = n.maps[a].at(i, k).clone();
                    if !coeff.is_zero() {
                        let p = idx(s, k, j);
                        row[p] = row[p].clone() + coeff;
                    }
                }
                for l in 0..m.dims[t] {
                    let coeff = m.maps[a].at(l, j).clone();
                    if !coeff.is_zero() {
                        let p = idx(t, i, l);
                        row[p] = row[p].clone() - coeff;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }

    let sols = if rows.is_empty() {
        Mat::identity(unknowns)
    } else {
        Mat::from_rows(rows).kernel_basis()
    };

    (0..sols.cols())
        .map(|c| {
            let blocks: Vec<Mat<F>> = (0..nv)
                .map(|v| {
                    Mat::from_fn(n.dims[v], m.dims[v], |r, cc| {
                        sols.at(idx(v, r, cc), c).clone()
                    })
                })
                .collect();
            Morphism::new(m.clone(), n.clone(), blocks)
        })
        .collect()
}

pub fn hom_dim<F: Field>(m: &Module<F>, n: &Module<F>) -> usize {
    hom_space(m, n).len()
}

/// Trace of the composite `f . g` (both endomorphism-compatible), summed
/// over vertices — the bilinear form whose radical detects decomposability.
fn pair_trace<F: Field>(f: &Morphism<F>, g: &Morphism<F>) -> F {
    let mut acc = F::zero();
    for v in 0..f.blocks.len() {
        let prod = f.blocks[v].matmul(&g.blocks[v]);
        for i in 0..prod.rows() {
            acc = acc + prod.at(i, i).clone();
        }
    }
    acc
}

/// Is `M` indecomposable with one-dimensional semisimple endomorphisms?
///
/// Uses the trace form on `End(M)`: in characteristic zero its radical is
/// exactly the Jacobson radical, so `M` is indecomposable with
/// `End(M)/rad = k` precisely when the Gram matrix has rank 1. In positive
/// characteristic the trace-form radical can be larger, so a rank-1 answer
/// remains trustworthy while higher ranks are advisory there.
pub fn is_indecomposable<F: Field>(m: &Module<F>) -> bool {
    if m.is_zero() {
        return false;
    }
    let endos = hom_space(m, m);
    let gram = Mat::from_fn(endos.len(), endos.len(), |i, j| {
        pair_trace(&endos[i], &endos[j])
    });
    gram.rank() == 1
}

/// Outcome of a randomized isomorphism search. `Inconclusive` is first-class:
/// it reports that no witness was found within the retry budget, not that
/// the objects are non-isomorphic.
#[derive(Clone, Debug)]
pub enum IsoOutcome<W> {
    Isomorphic(W),
    NotIsomorphic,
    Inconclusive,
}

impl<W> IsoOutcome<W> {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

/// Number of random attempts before declaring an isomorphism search
/// inconclusive.
pub const ISO_RETRIES: usize = 5;

/// Decide whether two representations are isomorphic, searching for an
/// invertible element of `Hom(M, N)` by seeded random combinations.
///
/// Exact negatives (dimension vectors, hom-dimension comparisons) are
/// reported as `NotIsomorphic`; a found witness is verified invertible
/// before being returned.
pub fn modules_isomorphic<F: Field, R: Rng>(
    m: &Module<F>,
    n: &Module<F>,
    rng: &mut R,
) -> IsoOutcome<Morphism<F>> {
    if m.dims != n.dims {
        return IsoOutcome::NotIsomorphic;
    }
    if m.is_zero() {
        return IsoOutcome::Isomorphic(Morphism::zero(m.clone(), n.clone()));
    }
    let basis = hom_space(m, n);
    if basis.is_empty() {
        return IsoOutcome::NotIsomorphic;
    }
    // An isomorphism induces linear bijections on all four hom spaces.
    if hom_dim(m, m) != basis.len() || hom_dim(n, n) != hom_dim(n, m) {
        return IsoOutcome::NotIsomorphic;
    }
    for attempt in 0..ISO_RETRIES {
        let mut f = Morphism::zero(m.clone(), n.clone());
        for b in &basis {
            let c = if attempt == 0 {
                F::one()
            } else {
                F::from_int(rng.gen_range(-20..=20))
            };
            f = f.add(&b.scale(&c));
        }
        if f.is_isomorphism() {
            return IsoOutcome::Isomorphic(f);
        }
    }
    IsoOutcome::Inconclusive
}

/// Exact isomorphism test for *indecomposable* modules. By Fitting's lemma
/// the endomorphism ring of an indecomposable is local, so its
/// non-invertible elements form an ideal; two indecomposables of equal
/// dimension vector are then isomorphic if and only if some composite
/// `g . f` of hom-space basis elements in the two directions is invertible
/// (any isomorphism would make the identity a combination of such
/// composites, which a proper ideal cannot contain). Decomposable inputs
/// may be underreported as non-isomorphic.
pub fn indecomposables_isomorphic<F: Field>(m: &Module<F>, n: &Module<F>) -> bool {
    if m.dims != n.dims {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let forward = hom_space(m, n);
    let backward = hom_space(n, m);
    forward
        .iter()
        .any(|f| backward.iter().any(|g| g.compose_after(f).is_isomorphism()))
}

/// Per-vertex global monomial ids forming the standard basis of the
/// projective `A e_v` (paths out of `v`, grouped by endpoint).
pub fn projective_basis<F: Field>(alg: &PathAlgebra<F>, v: usize) -> Vec<Vec<usize>> {
    (0..alg.num_vertices())
        .map(|w| alg.monomial_ids_from_to(v, w))
        .collect()
}

/// The projective module `A e_v` as a representation: basis monomials are
/// paths out of `v`, arrows act by composition.
pub fn projective_module<F: Field>(alg: &Arc<PathAlgebra<F>>, v: usize) -> Module<F> {
    let basis = projective_basis(alg.as_ref(), v);
    let pos: HashMap<usize, (usize, usize)> = basis
        .iter()
        .enumerate()
        .flat_map(|(w, ids)| {
            ids.iter()
                .enumerate()
                .map(move |(i, &id)| (id, (w, i)))
        })
        .collect();
    let dims: Vec<usize> = basis.iter().map(|ids| ids.len()).collect();
    let maps: Vec<Mat<F>> = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let mut m: Mat<F> = Mat::zero(dims[arr.target], dims[arr.source]);
            for (col, &id) in basis[arr.source].iter().enumerate() {
                let prod = alg.mul(&alg.arrow_elem(a), &AlgElem::from_basis(id));
                for (k, c) in prod.iter() {
                    let (w, row) = pos[&k];
                    debug_assert_eq!(w, arr.target);
                    m.set(row, col, c.clone());
                }
            }
            m
        })
        .collect();
    Module::new(alg.clone(), dims, maps)
}

/// The morphism `A e_v -> M` sending the generator to the element of `M_v`
/// with coordinate column `gen` (the Yoneda correspondence
/// `Hom(A e_v, M) = M_v`).
pub fn hom_from_projective<F: Field>(
    proj: &Module<F>,
    v: usize,
    m: &Module<F>,
    gen: &Mat<F>,
) -> Morphism<F> {
    assert_eq!((gen.rows(), gen.cols()), (m.dims[v], 1));
    let basis = projective_basis(m.alg.as_ref(), v);
    let blocks: Vec<Mat<F>> = (0..m.dims.len())
        .map(|w| {
            let cols: Vec<Mat<F>> = basis[w]
                .iter()
                .map(|&id| m.path_action(&m.alg.monomial(id).path).matmul(gen))
                .collect();
            if cols.is_empty() {
                Mat::zero(m.dims[w], 0)
            } else {
                Mat::hstack(&cols.iter().collect::<Vec<_>>())
            }
        })
        .collect();
    Morphism::new(proj.clone(), m.clone(), blocks)
}

/// Right multiplication by `x` in `e_k A e_l` as a morphism `A e_k -> A e_l`
/// (the Yoneda description of all maps between projectives; composition
/// corresponds to multiplication in the algebra with the arguments swapped).
pub fn right_mult_morphism<F: Field>(
    alg: &Arc<PathAlgebra<F>>,
    x: &AlgElem<F>,
    k: usize,
    l: usize,
) -> Morphism<F> {
    let pk = projective_module(alg, k);
    let pl = projective_module(alg, l);
    let basis_k = projective_basis(alg.as_ref(), k);
    let basis_l = projective_basis(alg.as_ref(), l);
    let pos_l: HashMap<usize, (usize, usize)> = basis_l
        .iter()
        .enumerate()
        .flat_map(|(w, ids)| ids.iter().enumerate().map(move |(i, &id)| (id, (w, i))))
        .collect();
    if !x.is_zero() {
        assert_eq!(alg.elem_source(x), Some(l), "x must lie in e_k A e_l");
        assert_eq!(alg.elem_target(x), Some(k), "x must lie in e_k A e_l");
    }
    let blocks: Vec<Mat<F>> = (0..alg.num_vertices())
        .map(|w| {
            let mut b: Mat<F> = Mat::zero(pl.dims[w], pk.dims[w]);
            for (col, &id) in basis_k[w].iter().enumerate() {
                let prod = alg.mul(&AlgElem::from_basis(id), x);
                for (j, c) in prod.iter() {
                    let (w2, row) = pos_l[&j];
                    debug_assert_eq!(w2, w);
                    b.set(row, col, c.clone());
                }
            }
            b
        })
        .collect();
    Morphism::new(pk, pl, blocks)
}

/// A projective cover: the projective, the surjection onto the module, and
/// the multiset of vertex labels of its indecomposable summands (in block
/// order).
pub struct Cover<F: Field> {
    pub module: Module<F>,
    pub map: Morphism<F>,
    pub summands: Vec<usize>,
}

/// The projective cover of `M`: one copy of `A e_v` for each head generator
/// at vertex `v`, mapping onto lifted generators.
pub fn projective_cover<F: Field>(m: &Module<F>) -> Cover<F> {
    let alg = m.alg.clone();
    let nv = m.dims.len();
    let mut summands: Vec<usize> = Vec::new();
    let mut gens: Vec<Mat<F>> = Vec::new();
    for v in 0..nv {
        let rad = m.radical_at(v);
        let ambient: Mat<F> = Mat::identity(m.dims[v]);
        for idx in Mat::complement_pivots(&rad, &ambient) {
            summands.push(v);
            gens.push(ambient.col(idx));
        }
    }
    if summands.is_empty() {
        let zero = Module::zero(alg);
        let map = Morphism::zero(zero.clone(), m.clone());
        return Cover {
            module: zero,
            map,
            summands,
        };
    }
    let projs: Vec<Module<F>> = summands
        .iter()
        .map(|&v| projective_module(&alg, v))
        .collect();
    let covers: Vec<Morphism<F>> = summands
        .iter()
        .zip(&projs)
        .zip(&gens)
        .map(|((&v, p), g)| hom_from_projective(p, v, m, g))
        .collect();
    let total = Module::direct_sum(&projs.iter().collect::<Vec<_>>());
    let blocks: Vec<Mat<F>> = (0..nv)
        .map(|v| {
            let parts: Vec<&Mat<F>> = covers.iter().map(|c| &c.blocks[v]).collect();
            Mat::hstack(&parts)
        })
        .collect();
    let map = Morphism::new(total.clone(), m.clone(), blocks);
    assert!(map.is_surjective(), "cover must be onto");
    Cover {
        module: total,
        map,
        summands,
    }
}

/// Injective hull of `m`: the dual of the projective cover of the dual,
/// returned as the hull together with the (injective) structure map
/// `m -> hull`.
pub fn injective_hull<F: Field>(m: &Module<F>) -> (Module<F>, Morphism<F>) {
    let cover = projective_cover(&m.dual());
    let hull = cover.module.dual();
    let map = cover.map.dual();
    assert!(map.is_injective(), "hull map must be one-to-one");
    (hull, map)
}

/// Split a representation into indecomposable summands.
///
/// Uses Fitting's lemma: for an endomorphism `f` the stabilized power
/// `f^N` (`N` = total dimension) splits `M = ker(f^N) + im(f^N)`, properly
/// whenever `f` is neither nilpotent nor invertible. Candidates are drawn
/// from a hom-space basis together with all pairwise sums, which exhibits a
/// splitting whenever `End(M)` contains a nontrivial idempotent.
pub fn decompose<F: Field>(m: &Module<F>) -> Vec<Module<F>> {
    if m.is_zero() {
        return Vec::new();
    }
    let endos = hom_space(m, m);
    let mut candidates: Vec<Morphism<F>> = endos.clone();
    for i in 0..endos.len() {
        for j in (i + 1)..endos.len() {
            candidates.push(endos[i].add(&endos[j]));
        }
    }
    let steps = m.total_dim();
    for phi in &candidates {
        let mut psi = phi.clone();
        for _ in 1..steps {
            psi = psi.compose_after(phi);
        }
        let (ker, _) = psi.kernel();
        let (im, _) = psi.image();
        if !ker.is_zero() && !im.is_zero() {
            debug_assert_eq!(ker.total_dim() + im.total_dim(), m.total_dim());
            let mut parts = decompose(&ker);
            parts.extend(decompose(&im));
            return parts;
        }
    }
    vec![m.clone()]
}

impl<F: Field> An<F> {
    /// The simple module concentrated at vertex `k`.
    pub fn simple(&self, k: usize) -> Module<F> {
        assert!(k <= self.n);
        let mut dims = vec![0; self.n + 1];
        dims[k] = 1;
        let maps = self
            .alg
            .quiver
            .arrows
            .iter()
            .map(|arr| Mat::zero(dims[arr.target], dims[arr.source]))
            .collect();
        Module::new(self.alg.clone(), dims, maps)
    }

    /// The indecomposable projective at vertex `k`.
    pub fn projective(&self, k: usize) -> Module<F> {
        assert!(k <= self.n);
        projective_module(&self.alg, k)
    }

    /// The indecomposable injective at vertex `k` (dual of the projective).
    pub fn injective(&self, k: usize) -> Module<F> {
        self.projective(k).dual()
    }

    /// The standard module at `k`: the simple for `k = 0`, otherwise the
    /// two-step module `k -> k-1` with the down arrow acting by 1.
    pub fn standard(&self, k: usize) -> Module<F> {
        assert!(k <= self.n);
        if k == 0 {
            return self.simple(0);
        }
        let mut dims = vec![0; self.n + 1];
        dims[k] = 1;
        dims[k - 1] = 1;
        let maps = self
            .alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                let mut m = Mat::zero(dims[arr.target], dims[arr.source]);
                if a == self.down[k - 1] {
                    m.set(0, 0, F::one());
                }
                m
            })
            .collect();
        Module::new(self.alg.clone(), dims, maps)
    }

    /// The costandard module at `k` (dual of the standard).
    pub fn costandard(&self, k: usize) -> Module<F> {
        self.standard(k).dual()
    }

    /// The zigzag module `Z+_{a,b}` (`0 <= b <= a <= n`), built by iterated
    /// universal extensions
    /// `0 -> standard(a) -> Z+_{a,b} -> Z+_{a-2,b} -> 0`
    /// from the base cases `Z+_{a,a} = simple(a)` and
    /// `Z+_{a,a-1} = standard(a)`.
    ///
    /// Each step asserts that the extension space is one-dimensional and the
    /// resulting middle term indecomposable.
    pub fn string_plus(&self, a: usize, b: usize) -> Module<F> {
        assert!(b <= a && a <= self.n, "need 0 <= b <= a <= n");
        if a == b {
            return self.simple(a);
        }
        if a == b + 1 {
            return self.standard(a);
        }
        let quot = self.string_plus(a - 2, b);
        let sub = self.standard(a);
        let ext = nontrivial_extension(&sub, &quot);
        assert!(
            is_indecomposable(&ext),
            "zigzag extension middle term must be indecomposable"
        );
        ext
    }

    /// The zigzag module `Z-_{a,b}` (dual of `Z+_{a,b}`).
    pub fn string_minus(&self, a: usize, b: usize) -> Module<F> {
        self.string_plus(a, b).dual()
    }
}

/// The middle term of the (unique up to scalar) nontrivial extension of
/// `quot` by `sub`, built as a pushout along a projective presentation of
/// `quot`. Panics unless the extension space is exactly one-dimensional.
pub fn nontrivial_extension<F: Field>(sub: &Module<F>, quot: &Module<F>) -> Module<F> {
    let cover = projective_cover(quot);
    let (omega, iota) = cover.map.kernel();

    let maps_omega = hom_space(&omega, sub);
    let maps_cover = hom_space(&cover.module, sub);
    let restricted: Vec<Vec<F>> = maps_cover
        .iter()
        .map(|g| g.compose_after(&iota).flatten())
        .collect();
    let coords = |fs: &[Vec<F>]| -> Mat<F> {
        if fs.is_empty() {
            Mat::zero(maps_omega.first().map_or(0, |h| h.flatten().len()), 0)
        } else {
            Mat::from_rows(fs.to_vec()).transpose()
        }
    };
    let span = coords(&restricted);
    let base_rank = span.rank();
    assert_eq!(
        maps_omega.len() - base_rank,
        1,
        "extension space must be one-dimensional"
    );
    let class = maps_omega
        .iter()
        .find(|h| {
            let mut cols: Vec<Vec<F>> = restricted.clone();
            cols.push(h.flatten());
            coords(&cols).rank() > base_rank
        })
        .expect("a representative of the nonzero extension class exists");

    // Pushout: quotient of sub + cover by the graph of (class, -iota).
    let total = Module::direct_sum(&[sub, &cover.module]);
    let graph_blocks: Vec<Mat<F>> = (0..total.dims.len())
        .map(|v| Mat::vstack(&[&class.blocks[v], &iota.blocks[v].scale(&-F::one())]))
        .collect();
    let graph = Morphism::new(omega.clone(), total.clone(), graph_blocks);
    assert!(graph.is_injective());
    let (ext, _proj) = graph.cokernel();
    assert_eq!(
        ext.total_dim(),
        sub.total_dim() + quot.total_dim(),
        "pushout middle term has the wrong dimension"
    );
    ext
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_an;
    use crate::field::Q;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// Closed-form zigzag pattern: dimension 1 on the interval `[b, a]`,
    /// with the down arrow into `i-1` acting by 1 when `i` has the parity
    /// of `a` and the up arrow out of `i-1` acting by 1 when `i` has the
    /// opposite parity (for `i` in `(b, a]`). Independent of the pushout
    /// construction; used as its oracle.
    fn zigzag_oracle(an: &An<Q>, a: usize, b: usize, plus: bool) -> Module<Q> {
        let mut dims = vec![0; an.n + 1];
        dims[b..=a].fill(1);
        let mut maps: Vec<Mat<Q>> = an
            .alg
            .quiver
            .arrows
            .iter()
            .map(|arr| Mat::zero(dims[arr.target], dims[arr.source]))
            .collect();
        for i in (b + 1)..=a {
            let down_active = if plus {
                i % 2 == a % 2
            } else {
                i % 2 != a % 2
            };
            if down_active {
                maps[an.down[i - 1]].set(0, 0, Q::from_int(1));
            } else {
                maps[an.up[i - 1]].set(0, 0, Q::from_int(1));
            }
        }
        Module::new(an.alg.clone(), dims, maps)
    }

    #[test]
    fn projective_dimension_vectors_match_path_counts() {
        for n in 1..=3 {
            let an = build_an::<Q>(n);
            for k in 0..=n {
                let p = an.projective(k);
                for w in 0..=n {
                    assert_eq!(p.dims[w], an.alg.pair_dim(k, w), "n={n} k={k} w={w}");
                }
            }
        }
    }

    #[test]
    fn hom_between_projectives_is_the_algebra_component() {
        let an = build_an::<Q>(2);
        for k in 0..=2 {
            for l in 0..=2 {
                let d = hom_dim(&an.projective(k), &an.projective(l));
                assert_eq!(d, an.alg.pair_dim(l, k), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn hom_from_projective_is_evaluation_at_the_vertex() {
        let an = build_an::<Q>(2);
        let z = an.string_plus(2, 0);
        for k in 0..=2 {
            assert_eq!(hom_dim(&an.projective(k), &z), z.dims[k]);
        }
    }

    #[test]
    fn right_multiplication_composes_contravariantly() {
        let an = build_an::<Q>(2);
        // x in e0 A e1 (the down arrow a1), y in e1 A e2 (the down arrow a2).
        let x = an.alg.arrow_elem(an.down[0]);
        let y = an.alg.arrow_elem(an.down[1]);
        let fx = right_mult_morphism(&an.alg, &x, 0, 1);
        let fy = right_mult_morphism(&an.alg, &y, 1, 2);
        // fy . fx : P0 -> P2 is right multiplication by x*y (in e0 A e2).
        let xy = an.alg.mul(&x, &y);
        assert!(xy.is_zero()); // consecutive downs vanish
        assert!(fy.compose_after(&fx).is_zero());
        // A nonzero composite: loop at 0 = x * up0.
        let up = an.alg.arrow_elem(an.up[0]);
        let fup = right_mult_morphism(&an.alg, &up, 1, 0);
        let comp = fx.compose_after(&fup); // P1 -> P1? no: fup: P1 -> P0, fx: P0 -> P1
        let loop0 = an.alg.mul(&up, &x);
        assert_eq!(comp.blocks, right_mult_morphism(&an.alg, &loop0, 1, 1).blocks);
    }

    #[test]
    fn radical_of_small_projective_is_standard() {
        let an = build_an::<Q>(1);
        let p0 = an.projective(0);
        let cover = projective_cover(&an.simple(0));
        assert_eq!(cover.summands, vec![0]);
        assert_eq!(cover.module, p0);
        let (omega, _) = cover.map.kernel();
        // First syzygy of the small simple is the standard at 1.
        let mut r = rng(7);
        assert!(modules_isomorphic(&omega, &an.standard(1), &mut r).is_isomorphic());
    }

    #[test]
    fn duality_is_an_involution_fixing_simples() {
        let an = build_an::<Q>(3);
        for k in 0..=3 {
            assert_eq!(an.simple(k).dual(), an.simple(k));
            assert_eq!(an.projective(k).dual().dual(), an.projective(k));
            assert_eq!(an.costandard(k), an.standard(k).dual());
        }
        let z = an.string_plus(3, 0);
        assert_eq!(z.dual().dual(), z);
    }

    #[test]
    fn kernels_images_cokernels_compose_exactly() {
        let an = build_an::<Q>(2);
        let p1 = an.projective(1);
        let delta1 = an.standard(1);
        // The cover P1 -> standard(1).
        let homs = hom_space(&p1, &delta1);
        assert_eq!(homs.len(), 1);
        let f = &homs[0];
        assert!(f.is_surjective());
        let (ker, incl) = f.kernel();
        assert_eq!(ker.total_dim(), p1.total_dim() - delta1.total_dim());
        assert!(f.compose_after(&incl).is_zero());
        let (img, _) = f.image();
        assert_eq!(img.dims, delta1.dims);
        let (coker, proj) = f.cokernel();
        assert!(coker.is_zero());
        assert!(proj.is_surjective());
    }

    #[test]
    fn zigzags_match_the_closed_form_pattern() {
        for n in 2..=4 {
            let an = build_an::<Q>(n);
            for a in 0..=n {
                for b in 0..=a {
                    let z = an.string_plus(a, b);
                    let oracle = zigzag_oracle(&an, a, b, true);
                    let mut r = rng(1000 + (n * 100 + a * 10 + b) as u64);
                    assert!(
                        modules_isomorphic(&z, &oracle, &mut r).is_isomorphic(),
                        "Z+({a},{b}) at n={n} deviates from the closed form"
                    );
                    let zm = an.string_minus(a, b);
                    let oracle_m = zigzag_oracle(&an, a, b, false);
                    let mut r2 = rng(2000 + (n * 100 + a * 10 + b) as u64);
                    assert!(
                        modules_isomorphic(&zm, &oracle_m, &mut r2).is_isomorphic(),
                        "Z-({a},{b}) at n={n} deviates from the closed form"
                    );
                }
            }
        }
    }

    #[test]
    fn indecomposability_detects_sums() {
        let an = build_an::<Q>(2);
        assert!(is_indecomposable(&an.simple(0)));
        assert!(is_indecomposable(&an.projective(0)));
        assert!(is_indecomposable(&an.standard(2)));
        assert!(is_indecomposable(&an.string_plus(2, 0)));
        let sum = Module::direct_sum(&[&an.simple(0), &an.simple(1)]);
        assert!(!is_indecomposable(&sum));
        let doubled = Module::direct_sum(&[&an.simple(1), &an.simple(1)]);
        assert!(!is_indecomposable(&doubled));
    }

    #[test]
    fn isomorphism_search_finds_twisted_copies() {
        let an = build_an::<Q>(2);
        let p = an.projective(0);
        // Conjugate every arrow matrix by a change of basis at each vertex.
        let change: Vec<Mat<Q>> = p
            .dims
            .iter()
            .enumerate()
            .map(|(v, &d)| {
                let mut m = Mat::identity(d);
                for i in 1..d {
                    m.set(i - 1, i, Q::from_int(2 + v as i64));
                }
                m
            })
            .collect();
        let maps = an
            .alg
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arr)| {
                change[arr.target]
                    .matmul(&p.maps[a])
                    .matmul(&change[arr.source].inverse().unwrap())
            })
            .collect();
        let twisted = Module::new(an.alg.clone(), p.dims.clone(), maps);
        let mut r = rng(99);
        match modules_isomorphic(&p, &twisted, &mut r) {
            IsoOutcome::Isomorphic(w) => {
                assert!(w.is_isomorphism());
                let inv = w.inverse().unwrap();
                let round = inv.compose_after(&w);
                assert_eq!(round.blocks, Morphism::identity(&p).blocks);
            }
            other => panic!("expected an isomorphism, got {other:?}"),
        }
        assert!(indecomposables_isomorphic(&p, &twisted));
        let mut r2 = rng(100);
        assert!(matches!(
            modules_isomorphic(&an.projective(0), &an.projective(1), &mut r2),
            IsoOutcome::NotIsomorphic
        ));
        // Same dimension vector, different modules: standard(1) + simple(2)
        // vs zigzag Z+(2,0) both have dims (1,1,1).
        let a = Module::direct_sum(&[&an.standard(1), &an.simple(2)]);
        let b = an.string_plus(2, 0);
        assert_eq!(a.dims, b.dims);
        let mut r3 = rng(101);
        assert!(matches!(
            modules_isomorphic(&a, &b, &mut r3),
            IsoOutcome::NotIsomorphic
        ));
    }

    #[test]
    fn fitting_test_separates_standard_from_costandard() {
        // At n = 1 the standard and costandard at vertex 1 share dimension
        // vector (1,1) and admit nonzero maps both ways, but no invertible
        // composite exists; the Fitting-style exact test refutes what the
        // randomized search leaves open.
        let an = build_an::<Q>(1);
        let delta = an.standard(1);
        let nabla = an.costandard(1);
        assert_eq!(delta.dims, nabla.dims);
        assert!(!hom_space(&delta, &nabla).is_empty());
        assert!(!indecomposables_isomorphic(&delta, &nabla));
        assert!(indecomposables_isomorphic(&an.string_plus(1, 1), &an.simple(1)));
    }

    #[test]
    fn extension_construction_rejects_split_cases() {
        // Ext^1 between the two simples at distance 2 vanishes, so asking
        // for a nontrivial extension must panic.
        let an = build_an::<Q>(2);
        let result = std::panic::catch_unwind(|| {
            nontrivial_extension(&an.simple(2), &an.simple(0))
        });
        assert!(result.is_err());
    }

    #[test]
    fn top_dims_read_off_heads() {
        let an = build_an::<Q>(2);
        assert_eq!(an.projective(1).top_dims(), vec![0, 1, 0]);
        assert_eq!(an.string_plus(2, 0).top_dims(), vec![1, 0, 1]);
        assert_eq!(an.string_minus(2, 0).top_dims(), vec![0, 1, 0]);
    }

    /// Highest-weight oracle: the standard module must agree with the
    /// quotient of `P_k` by the trace of all projectives at higher
    /// vertices, computed here from first principles.
    #[test]
    fn standards_match_the_trace_quotient_of_projectives() {
        for n in 1..=3 {
            let an = build_an::<Q>(n);
            for k in 0..=n {
                let p = an.projective(k);
                let nv = n + 1;
                let mut spans: Vec<Vec<Mat<Q>>> = vec![Vec::new(); nv];
                for l in (k + 1)..=n {
                    for f in hom_space(&an.projective(l), &p) {
                        for v in 0..nv {
                            spans[v].push(f.blocks[v].clone());
                        }
                    }
                }
                let bases: Vec<Mat<Q>> = (0..nv)
                    .map(|v| {
                        let refs: Vec<&Mat<Q>> = spans[v].iter().collect();
                        if refs.is_empty() {
                            Mat::zero(p.dims[v], 0)
                        } else {
                            Mat::hstack(&refs).image_basis()
                        }
                    })
                    .collect();
                let (_, incl) = p.subrep_from_bases(&bases);
                let (quot, _) = p.quotient_by(&incl);
                let mut r = rng(4100 + (n * 10 + k) as u64);
                assert!(
                    modules_isomorphic(&quot, &an.standard(k), &mut r).is_isomorphic(),
                    "standard({k}) at n={n} is not the trace quotient"
                );
            }
        }
    }

    #[test]
    fn decompose_splits_sums_and_the_regular_module() {
        let an = build_an::<Q>(2);
        let p0 = an.projective(0);
        let s1 = an.simple(1);
        let parts = decompose(&Module::direct_sum(&[&p0, &s1]));
        assert_eq!(parts.len(), 2);
        for part in &parts {
            assert!(is_indecomposable(part));
        }

        let regular =
            Module::direct_sum(&(0..=2).map(|k| an.projective(k)).collect::<Vec<_>>().iter().collect::<Vec<_>>());
        let mut parts = decompose(&regular);
        parts.sort_by_key(|m| m.total_dim());
        assert_eq!(parts.len(), 3);
        let mut expected: Vec<Module<Q>> = (0..=2).map(|k| an.projective(k)).collect();
        expected.sort_by_key(|m| m.total_dim());
        for (got, want) in parts.iter().zip(&expected) {
            let mut r = rng(4300 + got.total_dim() as u64);
            assert!(
                modules_isomorphic(got, want, &mut r).is_isomorphic(),
                "regular summand of total dim {} is not the expected projective",
                got.total_dim()
            );
        }

        assert_eq!(decompose(&an.string_plus(2, 0)).len(), 1);
    }

    #[test]
    fn radical_top_socle_and_hull_on_projectives() {
        let an = build_an::<Q>(2);
        for k in 0..=2 {
            let p = an.projective(k);
            let (t, proj) = p.top();
            assert!(proj.is_surjective());
            let mut r = rng(4400 + k as u64);
            assert!(modules_isomorphic(&t, &an.simple(k), &mut r).is_isomorphic());

            let (soc, incl) = p.socle();
            assert!(incl.is_injective());
            let expected_socle = if k < 2 { an.simple(k) } else { an.simple(1) };
            let mut r = rng(4500 + k as u64);
            assert!(modules_isomorphic(&soc, &expected_socle, &mut r).is_isomorphic());
        }

        // rad P_0 over the two-vertex algebra is the other projective.
        let a1 = build_an::<Q>(1);
        let (rad, _) = a1.projective(0).radical();
        let mut r = rng(4600);
        assert!(modules_isomorphic(&rad, &a1.projective(1), &mut r).is_isomorphic());

        // The injective hull of a simple at k < n is the projective there.
        for k in 0..2 {
            let (hull, map) = injective_hull(&an.simple(k));
            assert!(map.is_injective());
            let mut r = rng(4700 + k as u64);
            assert!(modules_isomorphic(&hull, &an.projective(k), &mut r).is_isomorphic());
        }
        let (hull_top, _) = injective_hull(&an.simple(2));
        let mut r = rng(4800);
        assert!(modules_isomorphic(&hull_top, &an.injective(2), &mut r).is_isomorphic());
    }
}
