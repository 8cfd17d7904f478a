//! Quotient path algebras presented by quivers with homogeneous quadratic
//! relations, reduced length-by-length by exact linear algebra.
//!
//! The two families built here:
//! * [`build_an`] — the `(4n+1)`-dimensional algebra whose finite-dimensional
//!   modules realize perverse sheaves on `P^n`;
//! * [`build_en`] — the graded algebra matching the Yoneda algebra of the
//!   simple modules (arrows in degree 1).
//!
//! Both live on the same quiver shape `0 <=> 1 <=> ... <=> n`, but with
//! different quadratic relations. Products follow the crate-wide right-to-left
//! convention of [`crate::quiver`]: `p * q` means "first `q`, then `p`".

use crate::field::Field;
use crate::linalg::Mat;
use crate::quiver::{Path, Quiver};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// Hard cap on monomial length during construction; the algebras in scope
/// vanish in length 3 (module algebra) or `2n + 1` (Ext algebra).
const MAX_PATH_LENGTH: usize = 64;

/// An element of a [`PathAlgebra`], stored as a sparse combination of basis
/// monomials (global indices). Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgElem<F: Field> {
    coeffs: BTreeMap<usize, F>,
}

impl<F: Field> AlgElem<F> {
    pub fn zero() -> Self {
        AlgElem {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_basis(id: usize) -> Self {
        Self::term(id, F::one())
    }

    pub fn term(id: usize, coeff: F) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(id, coeff);
        }
        AlgElem { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, id: usize) -> F {
        self.coeffs.get(&id).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> {
        self.coeffs.iter().map(|(&id, c)| (id, c))
    }

    pub fn add_term(&mut self, id: usize, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(id).or_insert_with(F::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.coeffs.remove(&id);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (id, c) in other.iter() {
            out.add_term(id, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(-F::one())))
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        AlgElem {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&id, c)| (id, c.clone() * s.clone()))
                .collect(),
        }
    }
}

/// A basis monomial of the quotient algebra: a reduced path.
#[derive(Clone, Debug)]
pub struct Monomial {
    pub path: Path,
    pub source: usize,
    pub target: usize,
    pub len: usize,
    pub name: String,
}

/// A finite-dimensional quotient of a path algebra by homogeneous quadratic
/// relations, with a fixed monomial basis and a full multiplication table.
pub struct PathAlgebra<F: Field> {
    pub quiver: Quiver,
    monomials: Vec<Monomial>,
    layers: Vec<LayerData<F>>,
    mult: Vec<Vec<AlgElem<F>>>,
    relations: Vec<Vec<(F, Path)>>,
    /// Optional arrow involution (`arrow_swap[a]` swaps source/target) making
    /// `sigma` an anti-automorphism; set for the module algebra.
    arrow_swap: Option<Vec<usize>>,
}

/// Per-length reduction data: all free paths of this length (columns), the
/// row-reduced span of the relation ideal in those coordinates, and which
/// columns survive as basis monomials.
struct LayerData<F: Field> {
    paths: Vec<Path>,
    col_of: HashMap<Path, usize>,
    rref: Mat<F>,
    pivots: Vec<usize>,
    /// Column index -> global monomial id for surviving (non-pivot) columns.
    basis_global: BTreeMap<usize, usize>,
}

impl<F: Field> PathAlgebra<F> {
    /// Build the quotient of the path algebra of `quiver` by the two-sided
    /// ideal generated by `relations` (each a combination of equal-length,
    /// equal-endpoint quadratic paths).
    ///
    /// Panics if the quotient fails to vanish by length [`MAX_PATH_LENGTH`]
    /// (i.e. the ideal is not admissible at the expected scale).
    pub fn new(quiver: Quiver, relations: Vec<Vec<(F, Path)>>) -> Self {
        for rel in &relations {
            assert!(!rel.is_empty(), "empty relation");
            for (_, p) in rel {
                assert_eq!(p.len(), 2, "relations must be quadratic");
            }
            let s = rel[0].1.source;
            let t = quiver.path_target(&rel[0].1);
            for (_, p) in rel {
                assert_eq!(p.source, s, "relation terms must share a source");
                assert_eq!(quiver.path_target(p), t, "relation terms must share a target");
            }
        }

        let mut monomials: Vec<Monomial> = Vec::new();
        let mut layers: Vec<LayerData<F>> = Vec::new();

        for len in 0..=MAX_PATH_LENGTH {
            let paths = quiver.paths_of_length(len);
            let col_of: HashMap<Path, usize> = paths
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i))
                .collect();

            // Span of the ideal in this length: x * r * y over all splittings.
            let mut rows: Vec<Vec<F>> = Vec::new();
            if len >= 2 {
                for rel in &relations {
                    let rel_source = rel[0].1.source;
                    let rel_target = quiver.path_target(&rel[0].1);
                    for pre_len in 0..=(len - 2) {
                        let post_len = len - 2 - pre_len;
                        // `pre` is applied first, then the relation, then `post`.
                        for pre in quiver.paths_of_length(pre_len) {
                            if quiver.path_target(&pre) != rel_source {
                                continue;
                            }
                            for post in quiver.paths_of_length(post_len) {
                                if post.source != rel_target {
                                    continue;
                                }
                                let mut row = vec![F::zero(); paths.len()];
                                for (c, p) in rel {
                                    let full = post.compose_after(&p.compose_after(&pre));
                                    let col = col_of[&full];
                                    row[col] = row[col].clone() + c.clone();
                                }
                                rows.push(row);
                            }
                        }
                    }
                }
            }

            let ideal = if rows.is_empty() {
                Mat::zero(0, paths.len())
            } else {
                Mat::from_rows(rows)
            };
            let (rref, pivots) = ideal.rref_with_pivots();

            let mut basis_global = BTreeMap::new();
            for (col, p) in paths.iter().enumerate() {
                if pivots.contains(&col) {
                    continue;
                }
                let path = p.clone();
                let id = monomials.len();
                monomials.push(Monomial {
                    source: path.source,
                    target: quiver.path_target(&path),
                    len,
                    name: quiver.path_name(&path),
                    path,
                });
                basis_global.insert(col, id);
            }
            let layer_dim = basis_global.len();
            layers.push(LayerData {
                paths,
                col_of,
                rref,
                pivots,
                basis_global,
            });
            if layer_dim == 0 {
                break;
            }
            assert!(
                len < MAX_PATH_LENGTH,
                "relation ideal is not admissible within length {MAX_PATH_LENGTH}"
            );
        }

        let mut alg = PathAlgebra {
            quiver,
            monomials,
            layers,
            mult: Vec::new(),
            relations,
            arrow_swap: None,
        };
        alg.build_mult_table();
        alg
    }

    fn build_mult_table(&mut self) {
        let dim = self.monomials.len();
        let mut mult = vec![vec![AlgElem::zero(); dim]; dim];
        for (i, row) in mult.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let (mi, mj) = (&self.monomials[i], &self.monomials[j]);
                // mono_i * mono_j: first j, then i.
                if mi.source != mj.target {
                    continue;
                }
                let prod = mi.path.compose_after(&mj.path);
                *cell = self.reduce_path(&prod);
            }
        }
        self.mult = mult;
    }

    /// Express a free path as a combination of basis monomials.
    pub fn reduce_path(&self, path: &Path) -> AlgElem<F> {
        let len = path.len();
        if len >= self.layers.len() {
            return AlgElem::zero();
        }
        let layer = &self.layers[len];
        let col = *layer
            .col_of
            .get(path)
            .expect("path does not exist in the quiver");
        let mut vec = vec![F::zero(); layer.paths.len()];
        vec[col] = F::one();
        self.reduce_vec(len, vec)
    }

    /// Reduce a dense coefficient vector over the free paths of length `len`
    /// modulo the ideal, returning basis-monomial coordinates.
    fn reduce_vec(&self, len: usize, mut vec: Vec<F>) -> AlgElem<F> {
        if len >= self.layers.len() {
            return AlgElem::zero();
        }
        let layer = &self.layers[len];
        for (prow, &pcol) in layer.pivots.iter().enumerate() {
            let c = vec[pcol].clone();
            if c.is_zero() {
                continue;
            }
            for (col, entry) in vec.iter_mut().enumerate() {
                let delta = c.clone() * layer.rref.at(prow, col).clone();
                *entry = entry.clone() - delta;
            }
        }
        let mut out = AlgElem::zero();
        for (&col, &id) in &layer.basis_global {
            if !vec[col].is_zero() {
                out.add_term(id, vec[col].clone());
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices
    }

    /// Largest monomial length (top nonzero graded piece).
    pub fn max_len(&self) -> usize {
        self.monomials.iter().map(|m| m.len).max().unwrap_or(0)
    }

    pub fn monomial(&self, id: usize) -> &Monomial {
        &self.monomials[id]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Basis id of the length-zero path at `v`.
    pub fn idempotent_id(&self, v: usize) -> usize {
        self.layers[0].basis_global[&self.layers[0].col_of[&Path::idempotent(v)]]
    }

    pub fn idempotent(&self, v: usize) -> AlgElem<F> {
        AlgElem::from_basis(self.idempotent_id(v))
    }

    /// The identity element (sum of all vertex idempotents).
    pub fn unit(&self) -> AlgElem<F> {
        let mut out = AlgElem::zero();
        for v in 0..self.num_vertices() {
            out.add_term(self.idempotent_id(v), F::one());
        }
        out
    }

    /// Basis id of a single arrow (length-one monomial).
    pub fn arrow_id(&self, arrow: usize) -> usize {
        let path = Path {
            source: self.quiver.arrows[arrow].source,
            arrows: vec![arrow as u32],
        };
        self.layers[1].basis_global[&self.layers[1].col_of[&path]]
    }

    pub fn arrow_elem(&self, arrow: usize) -> AlgElem<F> {
        AlgElem::from_basis(self.arrow_id(arrow))
    }

    /// Product `a * b` (first `b`, then `a`).
    pub fn mul(&self, a: &AlgElem<F>, b: &AlgElem<F>) -> AlgElem<F> {
        let mut out = AlgElem::zero();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                for (k, ct) in self.mult[i][j].iter() {
                    out.add_term(k, ca.clone() * cb.clone() * ct.clone());
                }
            }
        }
        out
    }

    /// Source vertex of an element whose monomials share a source; panics on
    /// mixed sources (internal sanity).
    pub fn elem_source(&self, x: &AlgElem<F>) -> Option<usize> {
        let mut it = x.iter().map(|(id, _)| self.monomials[id].source);
        let first = it.next()?;
        assert!(it.all(|s| s == first), "element has mixed sources");
        Some(first)
    }

    pub fn elem_target(&self, x: &AlgElem<F>) -> Option<usize> {
        let mut it = x.iter().map(|(id, _)| self.monomials[id].target);
        let first = it.next()?;
        assert!(it.all(|t| t == first), "element has mixed targets");
        Some(first)
    }

    /// Dimension of `e_t A e_s` (paths from `s` to `t` in the quotient).
    pub fn pair_dim(&self, s: usize, t: usize) -> usize {
        self.monomials
            .iter()
            .filter(|m| m.source == s && m.target == t)
            .count()
    }

    /// Dimension of the length-`len` piece of `e_t A e_s`.
    pub fn graded_pair_dim(&self, len: usize, s: usize, t: usize) -> usize {
        self.monomials
            .iter()
            .filter(|m| m.len == len && m.source == s && m.target == t)
            .count()
    }

    /// The Cartan-style matrix `C[t][s] = dim e_t A e_s`.
    pub fn pair_dim_matrix(&self) -> Vec<Vec<usize>> {
        let v = self.num_vertices();
        (0..v)
            .map(|t| (0..v).map(|s| self.pair_dim(s, t)).collect())
            .collect()
    }

    /// The defining quadratic relations (each a combination of equal-length,
    /// equal-endpoint paths).
    pub fn relations(&self) -> &[Vec<(F, Path)>] {
        &self.relations
    }

    /// The arrow involution backing [`PathAlgebra::sigma`], if set.
    pub fn arrow_swap(&self) -> Option<&[usize]> {
        self.arrow_swap.as_deref()
    }

    /// Global ids of basis monomials in `e_t A e_s`, in ascending id order.
    pub fn monomial_ids_from_to(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.monomials.len())
            .filter(|&id| self.monomials[id].source == s && self.monomials[id].target == t)
            .collect()
    }

    /// Is `x` invertible inside the local algebra `e_v A e_v`? True exactly
    /// when its idempotent coefficient is nonzero (the rest is nilpotent).
    pub fn is_local_unit(&self, x: &AlgElem<F>, v: usize) -> bool {
        !x.coeff(self.idempotent_id(v)).is_zero()
    }

    /// Inverse of a local unit `x` in `e_v A e_v`, via the finite geometric
    /// series over the nilpotent part.
    pub fn local_inverse(&self, x: &AlgElem<F>, v: usize) -> AlgElem<F> {
        let e = self.idempotent(v);
        let c = x.coeff(self.idempotent_id(v));
        let cinv = c.inv().expect("not a local unit");
        // x = c (e + y) with y nilpotent; x^-1 = c^-1 (e - y + y^2 - ...).
        let y = x.scale(&cinv).sub(&e);
        let mut acc = e.clone();
        let mut pow = e.clone();
        let mut sign = -F::one();
        for _ in 0..=self.max_len() {
            pow = self.mul(&pow, &y);
            if pow.is_zero() {
                break;
            }
            acc = acc.add(&pow.scale(&sign));
            sign = -sign;
        }
        acc.scale(&cinv)
    }

    /// Set the arrow involution backing [`PathAlgebra::sigma`].
    fn set_arrow_swap(&mut self, swap: Vec<usize>) {
        assert_eq!(swap.len(), self.quiver.arrows.len());
        for (a, &b) in swap.iter().enumerate() {
            assert_eq!(swap[b], a, "arrow swap must be an involution");
            assert_eq!(
                self.quiver.arrows[a].source,
                self.quiver.arrows[b].target,
                "arrow swap must reverse arrows"
            );
        }
        self.arrow_swap = Some(swap);
    }

    /// The path-reversal anti-involution: fixes idempotents, maps each arrow
    /// to its partner under the arrow swap, and reverses products:
    /// `sigma(x * y) = sigma(y) * sigma(x)`.
    pub fn sigma(&self, x: &AlgElem<F>) -> AlgElem<F> {
        let swap = self
            .arrow_swap
            .as_ref()
            .expect("algebra has no arrow involution");
        let mut out = AlgElem::zero();
        for (id, c) in x.iter() {
            let m = &self.monomials[id];
            let arrows: Vec<u32> = m
                .path
                .arrows
                .iter()
                .rev()
                .map(|&a| swap[a as usize] as u32)
                .collect();
            let rev = Path {
                source: m.target,
                arrows,
            };
            let reduced = self.reduce_path(&rev);
            for (k, rc) in reduced.iter() {
                out.add_term(k, c.clone() * rc.clone());
            }
        }
        out
    }

    /// Pretty-print an element by monomial names.
    pub fn display(&self, x: &AlgElem<F>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(id, c)| {
                let name = &self.monomials[id].name;
                if c.is_one() {
                    name.clone()
                } else {
                    format!("({c})*{name}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<F: Field> fmt::Debug for PathAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PathAlgebra(dim {}, {} vertices, {} arrows)",
            self.dim(),
            self.num_vertices(),
            self.quiver.arrows.len()
        )
    }
}

/// The module algebra for `P^n`: quiver `0 <=> 1 <=> ... <=> n` with
/// up-arrows `b_{v+1} = up[v]: v -> v+1` and down-arrows
/// `a_{v+1} = down[v]: v+1 -> v`, subject to:
///
/// * two consecutive ups vanish, two consecutive downs vanish;
/// * at each middle vertex `v` (`1 <= v <= n-1`) the up-then-down loop equals
///   the down-then-up loop;
/// * the down-then-up loop at the top vertex `n` vanishes.
///
/// Total dimension `4n + 1`; the surviving loops sit at vertices `0..n-1`.
#[derive(Clone)]
pub struct An<F: Field> {
    pub n: usize,
    pub alg: Arc<PathAlgebra<F>>,
    /// `up[v]`: arrow id of `v -> v+1`, for `v` in `0..n`.
    pub up: Vec<usize>,
    /// `down[v]`: arrow id of `v+1 -> v`, for `v` in `0..n`.
    pub down: Vec<usize>,
}

/// Build the module algebra (see [`An`]). Requires `n >= 1`.
pub fn build_an<F: Field>(n: usize) -> An<F> {
    assert!(n >= 1, "the stratified projective space needs n >= 1");
    let mut q = Quiver::new(n + 1);
    let mut up = Vec::new();
    let mut down = Vec::new();
    for v in 0..n {
        up.push(q.add_arrow(format!("b{}", v + 1), v, v + 1));
    }
    for v in 0..n {
        down.push(q.add_arrow(format!("a{}", v + 1), v + 1, v));
    }

    let one = F::one;
    let path2 = |first: usize, then: usize| Path {
        source: q.arrows[first].source,
        arrows: vec![first as u32, then as u32],
    };

    let mut relations: Vec<Vec<(F, Path)>> = Vec::new();
    // Consecutive downs vanish: down[j] then down[j-1] (a path v+2 -> v).
    for j in 1..n {
        relations.push(vec![(one(), path2(down[j], down[j - 1]))]);
    }
    // Consecutive ups vanish: up[j] then up[j+1].
    for j in 0..n.saturating_sub(1) {
        relations.push(vec![(one(), path2(up[j], up[j + 1]))]);
    }
    // Middle loops agree: at vertex v in 1..n, up-then-down equals
    // down-then-up.
    for v in 1..n {
        relations.push(vec![
            (one(), path2(up[v], down[v])),
            (-one(), path2(down[v - 1], up[v - 1])),
        ]);
    }
    // The loop at the top vertex vanishes: down[n-1] then up[n-1].
    relations.push(vec![(one(), path2(down[n - 1], up[n - 1]))]);

    let mut alg = PathAlgebra::new(q, relations);
    // sigma swaps each up-arrow with the matching down-arrow.
    let mut swap = vec![0usize; alg.quiver.arrows.len()];
    for v in 0..n {
        swap[up[v]] = down[v];
        swap[down[v]] = up[v];
    }
    alg.set_arrow_swap(swap);

    assert_eq!(alg.dim(), 4 * n + 1, "module algebra dimension must be 4n+1");
    An {
        n,
        alg: Arc::new(alg),
        up,
        down,
    }
}

impl<F: Field> An<F> {
    /// The surviving loop monomial at vertex `v < n` (up-then-down), as an
    /// element.
    pub fn loop_at(&self, v: usize) -> AlgElem<F> {
        assert!(v < self.n, "the loop at the top vertex is zero");
        let p = Path {
            source: v,
            arrows: vec![self.up[v] as u32, self.down[v] as u32],
        };
        self.alg.reduce_path(&p)
    }
}

/// The graded Ext-algebra model: same quiver shape, arrows `eup[k]: k -> k+1`
/// and `edown[k]: k+1 -> k` all in degree 1, subject to:
///
/// * the up-then-down loop at vertex `0` vanishes;
/// * at each middle vertex `k` (`1 <= k <= n-1`) the up-then-down loop equals
///   the down-then-up loop.
///
/// Grading is by path length; the top degree is `2n` (powers of the loop at
/// vertex `n`).
pub struct En<F: Field> {
    pub n: usize,
    pub alg: Arc<PathAlgebra<F>>,
    pub eup: Vec<usize>,
    pub edown: Vec<usize>,
}

/// Build the Ext-algebra model (see [`En`]). Requires `n >= 1`.
pub fn build_en<F: Field>(n: usize) -> En<F> {
    assert!(n >= 1);
    let mut q = Quiver::new(n + 1);
    let mut eup = Vec::new();
    let mut edown = Vec::new();
    for k in 0..n {
        eup.push(q.add_arrow(format!("u{k}"), k, k + 1));
    }
    for k in 0..n {
        edown.push(q.add_arrow(format!("d{k}"), k + 1, k));
    }

    let one = F::one;
    let path2 = |first: usize, then: usize| Path {
        source: q.arrows[first].source,
        arrows: vec![first as u32, then as u32],
    };

    let mut relations: Vec<Vec<(F, Path)>> = Vec::new();
    // Up-then-down loop at the bottom vertex vanishes.
    relations.push(vec![(one(), path2(eup[0], edown[0]))]);
    // Middle loops agree.
    for k in 1..n {
        relations.push(vec![
            (one(), path2(eup[k], edown[k])),
            (-one(), path2(edown[k - 1], eup[k - 1])),
        ]);
    }

    let alg = PathAlgebra::new(q, relations);
    En {
        n,
        alg: Arc::new(alg),
        eup,
        edown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn an_dimension_and_grading() {
        for n in 1..=4 {
            let an = build_an::<Q>(n);
            assert_eq!(an.alg.dim(), 4 * n + 1);
            // Lengths: n+1 idempotents, 2n arrows, n loops (at vertices 0..n-1).
            assert_eq!(an.alg.max_len(), 2);
            let loops: Vec<usize> = an
                .alg
                .monomials()
                .iter()
                .filter(|m| m.len == 2)
                .map(|m| m.source)
                .collect();
            assert_eq!(loops.len(), n);
            for v in 0..n {
                assert!(loops.contains(&v), "expected a loop at vertex {v}");
            }
        }
    }

    #[test]
    fn an1_multiplication_hand_checked() {
        // n = 1: basis e0, e1, b1, a1, a1*b1 (loop at 0); b1*a1 = 0.
        let an = build_an::<Q>(1);
        let a = an.alg.arrow_elem(an.down[0]);
        let b = an.alg.arrow_elem(an.up[0]);
        let ab = an.alg.mul(&a, &b); // first b (0->1), then a (1->0): loop at 0
        assert!(!ab.is_zero());
        assert_eq!(an.alg.elem_source(&ab), Some(0));
        assert_eq!(an.alg.elem_target(&ab), Some(0));
        let ba = an.alg.mul(&b, &a); // loop at 1: must vanish
        assert!(ba.is_zero());
        // The loop at 0 is nilpotent of order 2.
        assert!(an.alg.mul(&ab, &ab).is_zero());
        // dim e0 A e0 = 2 fixes the composition convention.
        assert_eq!(an.alg.pair_dim(0, 0), 2);
        assert_eq!(an.alg.pair_dim_matrix(), vec![vec![2, 1], vec![1, 1]]);
    }

    #[test]
    fn an_cartan_matrices_match_flag_predictions() {
        // Multiplicity patterns predicted by the standard-flag structure of
        // the projectives.
        let a2 = build_an::<Q>(2);
        assert_eq!(
            a2.alg.pair_dim_matrix(),
            vec![vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]
        );
        let a3 = build_an::<Q>(3);
        assert_eq!(
            a3.alg.pair_dim_matrix(),
            vec![
                vec![2, 1, 0, 0],
                vec![1, 2, 1, 0],
                vec![0, 1, 2, 1],
                vec![0, 0, 1, 1]
            ]
        );
    }

    #[test]
    fn an_middle_loops_coincide() {
        let an = build_an::<Q>(3);
        for v in 1..3 {
            let upthendown = an.alg.mul(
                &an.alg.arrow_elem(an.down[v]),
                &an.alg.arrow_elem(an.up[v]),
            );
            let downthenup = an.alg.mul(
                &an.alg.arrow_elem(an.up[v - 1]),
                &an.alg.arrow_elem(an.down[v - 1]),
            );
            assert_eq!(upthendown, downthenup, "loops at vertex {v} must agree");
            assert!(!upthendown.is_zero());
        }
        // Loop at the top vertex vanishes.
        let top = an.alg.mul(
            &an.alg.arrow_elem(an.up[2]),
            &an.alg.arrow_elem(an.down[2]),
        );
        assert!(top.is_zero());
    }

    #[test]
    fn associativity_exhaustive_small_n() {
        for n in 1..=3 {
            let an = build_an::<Q>(n);
            let dim = an.alg.dim();
            for i in 0..dim {
                for j in 0..dim {
                    for k in 0..dim {
                        let (x, y, z) = (
                            AlgElem::<Q>::from_basis(i),
                            AlgElem::<Q>::from_basis(j),
                            AlgElem::<Q>::from_basis(k),
                        );
                        let left = an.alg.mul(&an.alg.mul(&x, &y), &z);
                        let right = an.alg.mul(&x, &an.alg.mul(&y, &z));
                        assert_eq!(left, right, "associativity fails at ({i},{j},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn unit_is_identity() {
        let an = build_an::<Q>(2);
        let u = an.alg.unit();
        for id in 0..an.alg.dim() {
            let x = AlgElem::<Q>::from_basis(id);
            assert_eq!(an.alg.mul(&u, &x), x);
            assert_eq!(an.alg.mul(&x, &u), x);
        }
    }

    #[test]
    fn sigma_is_an_anti_involution() {
        let an = build_an::<Q>(3);
        let dim = an.alg.dim();
        for i in 0..dim {
            let x = AlgElem::<Q>::from_basis(i);
            // Involution.
            assert_eq!(an.alg.sigma(&an.alg.sigma(&x)), x);
            for j in 0..dim {
                let y = AlgElem::<Q>::from_basis(j);
                // Anti-homomorphism: sigma(xy) = sigma(y) sigma(x).
                let lhs = an.alg.sigma(&an.alg.mul(&x, &y));
                let rhs = an.alg.mul(&an.alg.sigma(&y), &an.alg.sigma(&x));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn en_graded_dimensions_match_cohomology_of_projective_spaces() {
        // dim of the degree-r piece of e_l E e_k must equal
        // dim H^{r - |k-l|}(P^{min(k,l)}):
        // 1 when r >= |k-l|, r - |k-l| even, r - |k-l| <= 2 min(k,l); else 0.
        for n in 1..=3 {
            let en = build_en::<Q>(n);
            for k in 0..=n {
                for l in 0..=n {
                    for r in 0..=(2 * n + 2) {
                        let expected = {
                            let gap = k.abs_diff(l);
                            let m = k.min(l);
                            usize::from(r >= gap && (r - gap) % 2 == 0 && r - gap <= 2 * m)
                        };
                        assert_eq!(
                            en.alg.graded_pair_dim(r, k, l),
                            expected,
                            "n={n} k={k} l={l} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn en_total_dimensions() {
        // Sum over pairs of (min(k,l) + 1).
        assert_eq!(build_en::<Q>(1).alg.dim(), 5);
        assert_eq!(build_en::<Q>(2).alg.dim(), 14);
        assert_eq!(build_en::<Q>(3).alg.dim(), 30);
    }

    #[test]
    fn en_defining_relation_patterns() {
        let en = build_en::<Q>(2);
        // Up-then-down loop at vertex 0 vanishes.
        let loop0 = en.alg.mul(
            &en.alg.arrow_elem(en.edown[0]),
            &en.alg.arrow_elem(en.eup[0]),
        );
        assert!(loop0.is_zero());
        // Down-then-up loop at the top vertex is nonzero, with nonzero square.
        let loop2 = en.alg.mul(
            &en.alg.arrow_elem(en.eup[1]),
            &en.alg.arrow_elem(en.edown[1]),
        );
        assert!(!loop2.is_zero());
        assert!(!en.alg.mul(&loop2, &loop2).is_zero());
        // Cubes exceed degree 2n = 4.
        assert!(en
            .alg
            .mul(&loop2, &en.alg.mul(&loop2, &loop2))
            .is_zero());
    }
}
