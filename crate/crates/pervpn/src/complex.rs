//! Bounded complexes of projectives (and injectives) kept in *formal* form:
//! each term is a list of vertex labels (one per indecomposable summand) and
//! each differential is a matrix with entries in the algebra. A map
//! `A e_k -> A e_l` is right multiplication by an element of `e_k A e_l`,
//! and composition corresponds to multiplication with the arguments swapped
//! (`phi_y . phi_x = phi_{x y}`), so `d . d = 0` and all chain-map
//! conditions are checked *exactly* in the algebra.
//!
//! Grading is cohomological: differentials raise degree by one, a shift
//! `C[m]` has `C[m]^i = C^{i+m}` with differential scaled by `(-1)^m`, and
//! the cone of `u: A -> B` lives on `A^{i+1} + B^i` with
//! `d(a, b) = (-d a, u a + d b)`.

use crate::algebra::{AlgElem, PathAlgebra};
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::{
    projective_module, right_mult_morphism, IsoOutcome, Module, Morphism, ISO_RETRIES,
};
use rand::Rng;
use std::fmt;
use std::sync::Arc;

/// A matrix with entries in the path algebra: `at(r, c)` is the component
/// from source summand `c` to target summand `r`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgMat<F: Field> {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<AlgElem<F>>,
}

impl<F: Field> AlgMat<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        AlgMat {
            rows,
            cols,
            entries: vec![AlgElem::zero(); rows * cols],
        }
    }

    pub fn single(entry: AlgElem<F>) -> Self {
        AlgMat {
            rows: 1,
            cols: 1,
            entries: vec![entry],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &AlgElem<F> {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: AlgElem<F>) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn scale(&self, s: &F) -> Self {
        AlgMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        AlgMat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    /// The composite of `first: X -> Y` and `then: Y -> Z` as matrices of
    /// right multiplications: entry `(z, x) = sum_y first(y, x) * then(z, y)`
    /// (algebra product; right multiplications compose contravariantly).
    pub fn compose(alg: &PathAlgebra<F>, first: &AlgMat<F>, then: &AlgMat<F>) -> AlgMat<F> {
        assert_eq!(first.rows, then.cols, "composition shape mismatch");
        let mut out = AlgMat::zero(then.rows, first.cols);
        for z in 0..then.rows {
            for x in 0..first.cols {
                let mut acc = AlgElem::zero();
                for y in 0..first.rows {
                    let prod = alg.mul(first.at(y, x), then.at(z, y));
                    acc = acc.add(&prod);
                }
                out.set(z, x, acc);
            }
        }
        out
    }

    /// Remove one row and one column (used by Gaussian cancellation).
    fn drop_row_col(&self, row: Option<usize>, col: Option<usize>) -> AlgMat<F> {
        let keep_r: Vec<usize> = (0..self.rows).filter(|&r| Some(r) != row).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|&c| Some(c) != col).collect();
        let mut out = AlgMat::zero(keep_r.len(), keep_c.len());
        for (ri, &r) in keep_r.iter().enumerate() {
            for (ci, &c) in keep_c.iter().enumerate() {
                out.set(ri, ci, self.at(r, c).clone());
            }
        }
        out
    }
}

impl<F: Field> fmt::Debug for AlgMat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgMat({}x{})", self.rows, self.cols)
    }
}

/// Validate a formal complex: entry `(r, c)` of `diffs[i]` must lie in
/// `e_{terms[i][c]} A e_{terms[i+1][r]}` and consecutive differentials must
/// compose to zero in the algebra.
fn validate_formal<F: Field>(
    alg: &PathAlgebra<F>,
    terms: &[Vec<usize>],
    diffs: &[AlgMat<F>],
) {
    assert_eq!(
        diffs.len(),
        terms.len().saturating_sub(1),
        "need one differential between consecutive terms"
    );
    for (i, d) in diffs.iter().enumerate() {
        assert_eq!(d.cols, terms[i].len(), "differential {i} column mismatch");
        assert_eq!(d.rows, terms[i + 1].len(), "differential {i} row mismatch");
        for r in 0..d.rows {
            for c in 0..d.cols {
                let x = d.at(r, c);
                if x.is_zero() {
                    continue;
                }
                assert_eq!(
                    alg.elem_source(x),
                    Some(terms[i + 1][r]),
                    "entry ({r},{c}) of differential {i} has a wrong source"
                );
                assert_eq!(
                    alg.elem_target(x),
                    Some(terms[i][c]),
                    "entry ({r},{c}) of differential {i} has a wrong target"
                );
            }
        }
    }
    for i in 0..diffs.len().saturating_sub(1) {
        let dd = AlgMat::compose(alg, &diffs[i], &diffs[i + 1]);
        assert!(dd.is_zero(), "d.d != 0 between degrees {i} and {}", i + 1);
    }
}

/// Trim empty terms at both ends, adjusting the minimum degree; a complex
/// with no summands at all becomes the canonical zero complex.
fn trim_formal<F: Field>(
    mut min_deg: i64,
    mut terms: Vec<Vec<usize>>,
    mut diffs: Vec<AlgMat<F>>,
) -> (i64, Vec<Vec<usize>>, Vec<AlgMat<F>>) {
    while terms.first().is_some_and(|t| t.is_empty()) {
        terms.remove(0);
        if !diffs.is_empty() {
            diffs.remove(0);
        }
        min_deg += 1;
    }
    while terms.last().is_some_and(|t| t.is_empty()) {
        terms.pop();
        diffs.pop();
    }
    if terms.is_empty() {
        min_deg = 0;
    }
    (min_deg, terms, diffs)
}

/// A bounded complex of direct sums of projectives `A e_k`, in formal form.
#[derive(Clone)]
pub struct ProjComplex<F: Field> {
    pub alg: Arc<PathAlgebra<F>>,
    pub min_deg: i64,
    /// `terms[i]`: the vertex labels of the summands in degree `min_deg + i`.
    pub terms: Vec<Vec<usize>>,
    /// `diffs[i]`: the differential out of degree `min_deg + i`.
    pub diffs: Vec<AlgMat<F>>,
}

impl<F: Field> PartialEq for ProjComplex<F> {
    fn eq(&self, other: &Self) -> bool {
        self.min_deg == other.min_deg && self.terms == other.terms && self.diffs == other.diffs
    }
}

impl<F: Field> fmt::Debug for ProjComplex<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjComplex[{}..] {:?}", self.min_deg, self.terms)
    }
}

impl<F: Field> ProjComplex<F> {
    pub fn new(
        alg: Arc<PathAlgebra<F>>,
        min_deg: i64,
        terms: Vec<Vec<usize>>,
        diffs: Vec<AlgMat<F>>,
    ) -> Self {
        validate_formal(alg.as_ref(), &terms, &diffs);
        let (min_deg, terms, diffs) = trim_formal(min_deg, terms, diffs);
        ProjComplex {
            alg,
            min_deg,
            terms,
            diffs,
        }
    }

    /// Like [`ProjComplex::new`], but keeps empty edge degrees so callers
    /// who index terms positionally stay aligned.
    pub(crate) fn new_untrimmed(
        alg: Arc<PathAlgebra<F>>,
        min_deg: i64,
        terms: Vec<Vec<usize>>,
        diffs: Vec<AlgMat<F>>,
    ) -> Self {
        validate_formal(alg.as_ref(), &terms, &diffs);
        ProjComplex {
            alg,
            min_deg,
            terms,
            diffs,
        }
    }

    pub fn zero(alg: Arc<PathAlgebra<F>>) -> Self {
        ProjComplex {
            alg,
            min_deg: 0,
            terms: Vec::new(),
            diffs: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.terms.len() as i64 - 1
    }

    /// Summand labels in cohomological degree `d` (empty outside range).
    pub fn labels(&self, d: i64) -> &[usize] {
        let i = d - self.min_deg;
        if i < 0 || i >= self.terms.len() as i64 {
            &[]
        } else {
            &self.terms[i as usize]
        }
    }

    /// The differential out of degree `d`, as a full-shape matrix (zero
    /// outside the stored range).
    pub fn diff(&self, d: i64) -> AlgMat<F> {
        let i = d - self.min_deg;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            AlgMat::zero(self.labels(d + 1).len(), self.labels(d).len())
        }
    }

    /// Total number of indecomposable summands.
    pub fn summand_count(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }

    /// The shift `C[m]`: `C[m]^i = C^{i+m}`, differential scaled by
    /// `(-1)^m`.
    pub fn shift(&self, m: i64) -> Self {
        let sign = if m.rem_euclid(2) == 0 {
            F::one()
        } else {
            -F::one()
        };
        ProjComplex {
            alg: self.alg.clone(),
            min_deg: self.min_deg - m,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    /// Realize the formal complex as a complex of actual representations.
    pub fn realize(&self) -> ModComplex<F> {
        let modules: Vec<Module<F>> = self
            .terms
            .iter()
            .map(|labels| realize_term(&self.alg, labels))
            .collect();
        let diffs: Vec<Morphism<F>> = self
            .diffs
            .iter()
            .enumerate()
            .map(|(i, d)| {
                realize_algmat(
                    &self.alg,
                    d,
                    &self.terms[i],
                    &self.terms[i + 1],
                    &modules[i],
                    &modules[i + 1],
                )
            })
            .collect();
        ModComplex::new(self.min_deg, modules, diffs)
    }

    /// The twisted-dual complex of injectives: degrees are negated, entries
    /// are transposed and hit with the algebra anti-involution.
    pub fn dual(&self) -> InjComplex<F> {
        let (min_deg, terms, diffs) = dual_formal(&self.alg, self.min_deg, &self.terms, &self.diffs);
        InjComplex::new(self.alg.clone(), min_deg, terms, diffs)
    }

    /// Relabel every projective summand as the injective with the same
    /// vertex, keeping degrees and matrix entries (the Nakayama transport).
    pub fn nakayama(&self) -> InjComplex<F> {
        InjComplex::new(
            self.alg.clone(),
            self.min_deg,
            self.terms.clone(),
            self.diffs.clone(),
        )
    }

    /// The cone of a degree-zero chain map `u: A -> B`:
    /// `cone^i = A^{i+1} + B^i`, `d(a, b) = (-d a, u a + d b)`.
    pub fn cone(u: &ChainMap<F>) -> ProjComplex<F> {
        assert_eq!(u.degree, 0, "cone expects a degree-zero map");
        let a = &u.source;
        let b = &u.target;
        let alg = a.alg.clone();
        let min_deg = (a.min_deg - 1).min(b.min_deg);
        let max_deg = (a.max_deg() - 1).max(b.max_deg());
        if a.is_zero() && b.is_zero() {
            return ProjComplex::zero(alg);
        }
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for d in min_deg..=max_deg {
            let mut t: Vec<usize> = a.labels(d + 1).to_vec();
            t.extend_from_slice(b.labels(d));
            terms.push(t);
        }
        for d in min_deg..max_deg {
            let (a_rows, b_rows) = (a.labels(d + 2).len(), b.labels(d + 1).len());
            let (a_cols, b_cols) = (a.labels(d + 1).len(), b.labels(d).len());
            let mut m = AlgMat::zero(a_rows + b_rows, a_cols + b_cols);
            let da = a.diff(d + 1);
            for r in 0..a_rows {
                for c in 0..a_cols {
                    m.set(r, c, da.at(r, c).scale(&-F::one()));
                }
            }
            let ud = u.mat(d + 1);
            for r in 0..b_rows {
                for c in 0..a_cols {
                    m.set(a_rows + r, c, ud.at(r, c).clone());
                }
            }
            let db = b.diff(d);
            for r in 0..b_rows {
                for c in 0..b_cols {
                    m.set(a_rows + r, a_cols + c, db.at(r, c).clone());
                }
            }
            diffs.push(m);
        }
        ProjComplex::new(alg, min_deg, terms, diffs)
    }

    /// Whether every differential entry lies in the radical, i.e. no entry
    /// carries an invertible (length-zero) component between equal summands.
    pub fn is_minimal(&self) -> bool {
        for (i, d) in self.diffs.iter().enumerate() {
            let src = &self.terms[i];
            let tgt = &self.terms[i + 1];
            for (r, &lr) in tgt.iter().enumerate() {
                for (c, &kc) in src.iter().enumerate() {
                    if lr == kc && !d.at(r, c).coeff(self.alg.idempotent_id(lr)).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Gaussian cancellation of every differential entry that is invertible
    /// in its local algebra `e_v A e_v`, yielding the minimal complex
    /// homotopy equivalent to this one. Chain maps *out of* the complex are
    /// transported along the cancellation.
    pub fn minimize(self, outgoing: Vec<ChainMap<F>>) -> (ProjComplex<F>, Vec<ChainMap<F>>) {
        let alg = self.alg.clone();
        let min_deg = self.min_deg;
        let mut terms = self.terms;
        let mut diffs = self.diffs;
        // Keep only the raw matrices of the attached maps; endpoints are
        // rebuilt (and therefore re-validated) at the end.
        let mut carried: Vec<(i64, Vec<AlgMat<F>>, ProjComplex<F>, i64)> = outgoing
            .into_iter()
            .map(|g| (g.source_min_deg(), g.mats, g.target, g.degree))
            .collect();

        'scan: loop {
            for i in 0..diffs.len() {
                for r in 0..diffs[i].rows {
                    for c in 0..diffs[i].cols {
                        let v = terms[i][c];
                        if terms[i + 1][r] != v {
                            continue;
                        }
                        let x = diffs[i].at(r, c);
                        if x.is_zero() || !alg.is_local_unit(x, v) {
                            continue;
                        }
                        let x_inv = alg.local_inverse(x, v);
                        // New middle differential: delta - gamma psi^-1 beta,
                        // assembled entrywise through the algebra.
                        let old = diffs[i].clone();
                        let mut reduced = old.drop_row_col(Some(r), Some(c));
                        let keep_r: Vec<usize> =
                            (0..old.rows).filter(|&rr| rr != r).collect();
                        let keep_c: Vec<usize> =
                            (0..old.cols).filter(|&cc| cc != c).collect();
                        for (ri, &rr) in keep_r.iter().enumerate() {
                            for (ci, &cc) in keep_c.iter().enumerate() {
                                // Correction path: summand cc -> (psi^-1) -> summand rr.
                                let corr = alg.mul(
                                    &alg.mul(old.at(r, cc), &x_inv),
                                    old.at(rr, c),
                                );
                                reduced.set(ri, ci, reduced.at(ri, ci).sub(&corr));
                            }
                        }
                        diffs[i] = reduced;
                        // Adjacent differentials: drop the vanished summands.
                        if i > 0 {
                            diffs[i - 1] = diffs[i - 1].drop_row_col(Some(c), None);
                        }
                        if i + 1 < diffs.len() {
                            diffs[i + 1] = diffs[i + 1].drop_row_col(None, Some(r));
                        }
                        // Transport attached maps: in the degree that lost a
                        // source summand, correct through the inclusion
                        // u -> (-psi^-1 beta u, u); one degree up, just drop.
                        let deg_i = min_deg + i as i64;
                        for (g_min, mats, _, _) in carried.iter_mut() {
                            let gi = deg_i - *g_min;
                            if gi >= 0 && (gi as usize) < mats.len() {
                                let gm = mats[gi as usize].clone();
                                let mut newm = gm.drop_row_col(None, Some(c));
                                for (ci, &cc) in keep_c.iter().enumerate() {
                                    // beta entry then psi^-1 then the old
                                    // column at the cancelled summand.
                                    let lead = alg.mul(old.at(r, cc), &x_inv);
                                    for rho in 0..gm.rows {
                                        let corr = alg.mul(&lead, gm.at(rho, c));
                                        newm.set(rho, ci, newm.at(rho, ci).sub(&corr));
                                    }
                                }
                                mats[gi as usize] = newm;
                            }
                            let gi1 = deg_i + 1 - *g_min;
                            if gi1 >= 0 && (gi1 as usize) < mats.len() {
                                mats[gi1 as usize] =
                                    mats[gi1 as usize].drop_row_col(None, Some(r));
                            }
                        }
                        terms[i].remove(c);
                        terms[i + 1].remove(r);
                        continue 'scan;
                    }
                }
            }
            break;
        }

        let (min_deg, terms, diffs) = trim_formal(min_deg, terms, diffs);
        let minimized = ProjComplex {
            alg,
            min_deg,
            terms,
            diffs,
        };
        let transported: Vec<ChainMap<F>> = carried
            .into_iter()
            .map(|(g_min, mats, target, degree)| {
                // Re-align the carried matrices with the trimmed source.
                let skip = (minimized.min_deg - g_min) as usize;
                let kept: Vec<AlgMat<F>> = mats
                    .into_iter()
                    .skip(skip)
                    .take(minimized.terms.len())
                    .collect();
                ChainMap::new(minimized.clone(), target, degree, kept)
            })
            .collect();
        (minimized, transported)
    }
}

/// Shared dual formula: reverse degrees, transpose, apply the
/// anti-involution entrywise.
fn dual_formal<F: Field>(
    alg: &PathAlgebra<F>,
    min_deg: i64,
    terms: &[Vec<usize>],
    diffs: &[AlgMat<F>],
) -> (i64, Vec<Vec<usize>>, Vec<AlgMat<F>>) {
    let max_deg = min_deg + terms.len() as i64 - 1;
    let new_min = -max_deg;
    let new_terms: Vec<Vec<usize>> = terms.iter().rev().cloned().collect();
    let new_diffs: Vec<AlgMat<F>> = diffs
        .iter()
        .rev()
        .map(|d| {
            let mut out = AlgMat::zero(d.cols, d.rows);
            for r in 0..d.rows {
                for c in 0..d.cols {
                    out.set(c, r, alg.sigma(d.at(r, c)));
                }
            }
            out
        })
        .collect();
    (new_min, new_terms, new_diffs)
}

/// A bounded complex of direct sums of injectives `D(e_k A)`, formal like
/// [`ProjComplex`]. The map `I_k -> I_l` attached to `y` in `e_k A e_l` is
/// the twisted dual of right multiplication by `sigma(y)`; these compose by
/// the same contravariant rule as the projective side, so the two formal
/// theories share all matrix mechanics.
#[derive(Clone)]
pub struct InjComplex<F: Field> {
    pub alg: Arc<PathAlgebra<F>>,
    pub min_deg: i64,
    pub terms: Vec<Vec<usize>>,
    pub diffs: Vec<AlgMat<F>>,
}

impl<F: Field> PartialEq for InjComplex<F> {
    fn eq(&self, other: &Self) -> bool {
        self.min_deg == other.min_deg && self.terms == other.terms && self.diffs == other.diffs
    }
}

impl<F: Field> fmt::Debug for InjComplex<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InjComplex[{}..] {:?}", self.min_deg, self.terms)
    }
}

impl<F: Field> InjComplex<F> {
    pub fn new(
        alg: Arc<PathAlgebra<F>>,
        min_deg: i64,
        terms: Vec<Vec<usize>>,
        diffs: Vec<AlgMat<F>>,
    ) -> Self {
        validate_formal(alg.as_ref(), &terms, &diffs);
        let (min_deg, terms, diffs) = trim_formal(min_deg, terms, diffs);
        InjComplex {
            alg,
            min_deg,
            terms,
            diffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.terms.len() as i64 - 1
    }

    pub fn labels(&self, d: i64) -> &[usize] {
        let i = d - self.min_deg;
        if i < 0 || i >= self.terms.len() as i64 {
            &[]
        } else {
            &self.terms[i as usize]
        }
    }

    /// The twisted-dual complex of projectives (inverse of
    /// [`ProjComplex::dual`]).
    pub fn dual(&self) -> ProjComplex<F> {
        let (min_deg, terms, diffs) = dual_formal(&self.alg, self.min_deg, &self.terms, &self.diffs);
        ProjComplex::new(self.alg.clone(), min_deg, terms, diffs)
    }

    /// Relabel injectives back to projectives with the same vertex and
    /// entries (inverse Nakayama transport).
    pub fn nakayama_inverse(&self) -> ProjComplex<F> {
        ProjComplex::new(
            self.alg.clone(),
            self.min_deg,
            self.terms.clone(),
            self.diffs.clone(),
        )
    }

    pub fn shift(&self, m: i64) -> Self {
        let sign = if m.rem_euclid(2) == 0 {
            F::one()
        } else {
            -F::one()
        };
        InjComplex {
            alg: self.alg.clone(),
            min_deg: self.min_deg - m,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    pub fn realize(&self) -> ModComplex<F> {
        let modules: Vec<Module<F>> = self
            .terms
            .iter()
            .map(|labels| realize_inj_term(&self.alg, labels))
            .collect();
        let diffs: Vec<Morphism<F>> = self
            .diffs
            .iter()
            .enumerate()
            .map(|(i, d)| {
                realize_inj_algmat(
                    &self.alg,
                    d,
                    &self.terms[i],
                    &self.terms[i + 1],
                    &modules[i],
                    &modules[i + 1],
                )
            })
            .collect();
        ModComplex::new(self.min_deg, modules, diffs)
    }
}

fn realize_term<F: Field>(alg: &Arc<PathAlgebra<F>>, labels: &[usize]) -> Module<F> {
    if labels.is_empty() {
        return Module::zero(alg.clone());
    }
    let parts: Vec<Module<F>> = labels.iter().map(|&v| projective_module(alg, v)).collect();
    Module::direct_sum(&parts.iter().collect::<Vec<_>>())
}

fn realize_inj_term<F: Field>(alg: &Arc<PathAlgebra<F>>, labels: &[usize]) -> Module<F> {
    if labels.is_empty() {
        return Module::zero(alg.clone());
    }
    let parts: Vec<Module<F>> = labels
        .iter()
        .map(|&v| projective_module(alg, v).dual())
        .collect();
    Module::direct_sum(&parts.iter().collect::<Vec<_>>())
}

/// Assemble the block morphism realizing a formal matrix between realized
/// terms, one block per (target summand, source summand) pair.
fn assemble_blocks<F: Field>(
    src: &Module<F>,
    tgt: &Module<F>,
    src_parts: &[Module<F>],
    tgt_parts: &[Module<F>],
    piece: impl Fn(usize, usize) -> Option<Morphism<F>>,
) -> Morphism<F> {
    let nv = src.dims.len();
    let mut blocks: Vec<Mat<F>> = (0..nv)
        .map(|v| Mat::zero(tgt.dims[v], src.dims[v]))
        .collect();
    let mut row_off = vec![0usize; nv];
    for (r, tp) in tgt_parts.iter().enumerate() {
        let mut col_off = vec![0usize; nv];
        for (c, sp) in src_parts.iter().enumerate() {
            if let Some(m) = piece(r, c) {
                for v in 0..nv {
                    for i in 0..tp.dims[v] {
                        for j in 0..sp.dims[v] {
                            blocks[v].set(
                                row_off[v] + i,
                                col_off[v] + j,
                                m.blocks[v].at(i, j).clone(),
                            );
                        }
                    }
                }
            }
            for v in 0..nv {
                col_off[v] += sp.dims[v];
            }
        }
        for v in 0..nv {
            row_off[v] += tp.dims[v];
        }
    }
    Morphism::new(src.clone(), tgt.clone(), blocks)
}

fn realize_algmat<F: Field>(
    alg: &Arc<PathAlgebra<F>>,
    mat: &AlgMat<F>,
    src_labels: &[usize],
    tgt_labels: &[usize],
    src: &Module<F>,
    tgt: &Module<F>,
) -> Morphism<F> {
    let src_parts: Vec<Module<F>> = src_labels
        .iter()
        .map(|&v| projective_module(alg, v))
        .collect();
    let tgt_parts: Vec<Module<F>> = tgt_labels
        .iter()
        .map(|&v| projective_module(alg, v))
        .collect();
    assemble_blocks(src, tgt, &src_parts, &tgt_parts, |r, c| {
        let x = mat.at(r, c);
        if x.is_zero() {
            None
        } else {
            Some(right_mult_morphism(alg, x, src_labels[c], tgt_labels[r]))
        }
    })
}

fn realize_inj_algmat<F: Field>(
    alg: &Arc<PathAlgebra<F>>,
    mat: &AlgMat<F>,
    src_labels: &[usize],
    tgt_labels: &[usize],
    src: &Module<F>,
    tgt: &Module<F>,
) -> Morphism<F> {
    let src_parts: Vec<Module<F>> = src_labels
        .iter()
        .map(|&v| projective_module(alg, v).dual())
        .collect();
    let tgt_parts: Vec<Module<F>> = tgt_labels
        .iter()
        .map(|&v| projective_module(alg, v).dual())
        .collect();
    assemble_blocks(src, tgt, &src_parts, &tgt_parts, |r, c| {
        let y = mat.at(r, c);
        if y.is_zero() {
            None
        } else {
            // psi_y: I_k -> I_l is the dual of right multiplication by
            // sigma(y): P_l -> P_k.
            let sy = alg.sigma(y);
            Some(right_mult_morphism(alg, &sy, tgt_labels[r], src_labels[c]).dual())
        }
    })
}

/// A bounded complex of concrete representations.
pub struct ModComplex<F: Field> {
    pub min_deg: i64,
    pub modules: Vec<Module<F>>,
    pub diffs: Vec<Morphism<F>>,
}

impl<F: Field> ModComplex<F> {
    pub fn new(min_deg: i64, modules: Vec<Module<F>>, diffs: Vec<Morphism<F>>) -> Self {
        assert_eq!(diffs.len(), modules.len().saturating_sub(1));
        for (i, d) in diffs.iter().enumerate() {
            assert_eq!(d.source, modules[i], "differential {i} source mismatch");
            assert_eq!(d.target, modules[i + 1], "differential {i} target mismatch");
        }
        for i in 0..diffs.len().saturating_sub(1) {
            assert!(
                diffs[i + 1].compose_after(&diffs[i]).is_zero(),
                "d.d != 0 at step {i}"
            );
        }
        ModComplex {
            min_deg,
            modules,
            diffs,
        }
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.modules.len() as i64 - 1
    }

    pub fn module_at(&self, d: i64) -> Option<&Module<F>> {
        let i = d - self.min_deg;
        if i < 0 || i >= self.modules.len() as i64 {
            None
        } else {
            Some(&self.modules[i as usize])
        }
    }

    pub fn diff_at(&self, d: i64) -> Option<&Morphism<F>> {
        let i = d - self.min_deg;
        if i >= 0 && (i as usize) < self.diffs.len() {
            Some(&self.diffs[i as usize])
        } else {
            None
        }
    }

    /// Per-vertex dimensions of the cohomology in degree `d`.
    pub fn homology_dims(&self, d: i64) -> Vec<usize> {
        let Some(md) = self.module_at(d) else {
            let nv = self.modules.first().map_or(0, |m| m.dims.len());
            return vec![0; nv];
        };
        (0..md.dims.len())
            .map(|v| {
                let rank_out = self
                    .diff_at(d)
                    .map_or(0, |f| f.blocks[v].rank());
                let rank_in = self
                    .diff_at(d - 1)
                    .map_or(0, |f| f.blocks[v].rank());
                md.dims[v] - rank_out - rank_in
            })
            .collect()
    }

    /// The cohomology in degree `d` as an actual representation (subquotient
    /// of the degree-`d` term).
    pub fn homology_module(&self, d: i64) -> Module<F> {
        let Some(md) = self.module_at(d) else {
            let alg = self.modules.first().expect("empty complex").alg.clone();
            return Module::zero(alg);
        };
        let (cycles, incl_z) = match self.diff_at(d) {
            Some(f) => f.kernel(),
            None => (md.clone(), Morphism::identity(md)),
        };
        let boundaries_in_cycles: Option<Morphism<F>> = self.diff_at(d - 1).map(|f| {
            let (img, incl_b) = f.image();
            // Re-express the boundary inclusion through the cycle basis.
            let blocks: Vec<Mat<F>> = (0..md.dims.len())
                .map(|v| Mat::coordinates_in_basis(&incl_z.blocks[v], &incl_b.blocks[v]))
                .collect();
            Morphism::new(img, cycles.clone(), blocks)
        });
        match boundaries_in_cycles {
            Some(b) => b.cokernel().0,
            None => cycles,
        }
    }

    /// Total dimension of cohomology in degree `d`.
    pub fn homology_total(&self, d: i64) -> usize {
        self.homology_dims(d).iter().sum()
    }

    /// The twisted-dual complex: degree `i` becomes `-i`, every module and
    /// differential replaced by its dual.
    pub fn dual(&self) -> ModComplex<F> {
        let modules: Vec<Module<F>> = self.modules.iter().rev().map(|m| m.dual()).collect();
        let diffs: Vec<Morphism<F>> = self.diffs.iter().rev().map(|d| d.dual()).collect();
        ModComplex::new(-self.max_deg(), modules, diffs)
    }
}

/// A degree-`r` chain map `f: C -> D` of formal complexes:
/// `f_i: C^i -> D^{i+r}` with `d_D . f = (-1)^r f . d_C`, checked exactly.
#[derive(Clone)]
pub struct ChainMap<F: Field> {
    pub source: ProjComplex<F>,
    pub target: ProjComplex<F>,
    pub degree: i64,
    /// One matrix per stored source degree (aligned with `source.terms`).
    pub mats: Vec<AlgMat<F>>,
}

impl<F: Field> ChainMap<F> {
    pub fn new(
        source: ProjComplex<F>,
        target: ProjComplex<F>,
        degree: i64,
        mats: Vec<AlgMat<F>>,
    ) -> Self {
        assert_eq!(mats.len(), source.terms.len(), "one matrix per source term");
        let alg = source.alg.clone();
        for (i, m) in mats.iter().enumerate() {
            let d = source.min_deg + i as i64;
            assert_eq!(m.cols, source.labels(d).len(), "map at {d}: column mismatch");
            assert_eq!(
                m.rows,
                target.labels(d + degree).len(),
                "map at {d}: row mismatch"
            );
            for r in 0..m.rows {
                for c in 0..m.cols {
                    let x = m.at(r, c);
                    if x.is_zero() {
                        continue;
                    }
                    assert_eq!(alg.elem_source(x), Some(target.labels(d + degree)[r]));
                    assert_eq!(alg.elem_target(x), Some(source.labels(d)[c]));
                }
            }
        }
        let cm = ChainMap {
            source,
            target,
            degree,
            mats,
        };
        cm.assert_chain_condition();
        cm
    }

    fn assert_chain_condition(&self) {
        let alg = self.source.alg.as_ref();
        let sign = if self.degree.rem_euclid(2) == 0 {
            F::one()
        } else {
            -F::one()
        };
        for d in self.source.min_deg - 1..=self.source.max_deg() {
            let lhs = AlgMat::compose(alg, &self.mat(d), &self.target.diff(d + self.degree));
            let rhs =
                AlgMat::compose(alg, &self.source.diff(d), &self.mat(d + 1)).scale(&sign);
            assert_eq!(lhs, rhs, "chain condition fails out of degree {d}");
        }
    }

    pub fn source_min_deg(&self) -> i64 {
        self.source.min_deg
    }

    /// The component out of degree `d`, full-shape (zero outside range).
    pub fn mat(&self, d: i64) -> AlgMat<F> {
        let i = d - self.source.min_deg;
        if i >= 0 && (i as usize) < self.mats.len() {
            self.mats[i as usize].clone()
        } else {
            AlgMat::zero(
                self.target.labels(d + self.degree).len(),
                self.source.labels(d).len(),
            )
        }
    }

    pub fn zero(source: ProjComplex<F>, target: ProjComplex<F>, degree: i64) -> Self {
        let mats = (0..source.terms.len())
            .map(|i| {
                let d = source.min_deg + i as i64;
                AlgMat::zero(target.labels(d + degree).len(), source.labels(d).len())
            })
            .collect();
        ChainMap::new(source, target, degree, mats)
    }

    pub fn identity(c: &ProjComplex<F>) -> Self {
        let alg = c.alg.clone();
        let mats = c
            .terms
            .iter()
            .map(|labels| {
                let mut m = AlgMat::zero(labels.len(), labels.len());
                for (i, &v) in labels.iter().enumerate() {
                    m.set(i, i, AlgElem::from_basis(alg.idempotent_id(v)));
                }
                m
            })
            .collect();
        ChainMap::new(c.clone(), c.clone(), 0, mats)
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    pub fn add(&self, other: &ChainMap<F>) -> ChainMap<F> {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.add(b))
            .collect();
        ChainMap::new(self.source.clone(), self.target.clone(), self.degree, mats)
    }

    pub fn scale(&self, s: &F) -> ChainMap<F> {
        let mats = self.mats.iter().map(|m| m.scale(s)).collect();
        ChainMap::new(self.source.clone(), self.target.clone(), self.degree, mats)
    }

    /// Composite `other` followed by `self` (degrees add):
    /// `(self . other)_i = self_{i + other.degree} . other_i`.
    pub fn compose_after(&self, other: &ChainMap<F>) -> ChainMap<F> {
        assert_eq!(other.target, self.source, "chain map endpoints mismatch");
        let alg = self.source.alg.clone();
        let degree = self.degree + other.degree;
        let mats = (0..other.source.terms.len())
            .map(|i| {
                let d = other.source.min_deg + i as i64;
                AlgMat::compose(alg.as_ref(), &other.mat(d), &self.mat(d + other.degree))
            })
            .collect();
        ChainMap::new(other.source.clone(), self.target.clone(), degree, mats)
    }

    /// Realize every component as a concrete morphism of representations.
    pub fn realize(&self) -> Vec<Morphism<F>> {
        let alg = &self.source.alg;
        (0..self.source.terms.len())
            .map(|i| {
                let d = self.source.min_deg + i as i64;
                let src_labels = self.source.labels(d);
                let tgt_labels = self.target.labels(d + self.degree);
                realize_algmat(
                    alg,
                    &self.mat(d),
                    src_labels,
                    tgt_labels,
                    &realize_term(alg, src_labels),
                    &realize_term(alg, tgt_labels),
                )
            })
            .collect()
    }
}

impl<F: Field> fmt::Debug for ChainMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ChainMap(deg {}, {:?} -> {:?})",
            self.degree, self.source.terms, self.target.terms
        )
    }
}

/// Basis of the space of *strict* degree-`r` chain maps `C -> D`, found by
/// solving the commutation constraints over the monomial coordinates of
/// every matrix entry.
pub fn chain_map_space<F: Field>(
    c: &ProjComplex<F>,
    d: &ProjComplex<F>,
    degree: i64,
) -> Vec<ChainMap<F>> {
    let alg = c.alg.clone();
    // Unknown layout: for each source degree, each (row, col) pair, the
    // coordinates over the monomial basis of the allowed component.
    struct Slot {
        deg_idx: usize,
        row: usize,
        col: usize,
        monomials: Vec<usize>,
        offset: usize,
    }
    let mut slots: Vec<Slot> = Vec::new();
    let mut total = 0usize;
    for i in 0..c.terms.len() {
        let sd = c.min_deg + i as i64;
        let tgt = d.labels(sd + degree);
        for (r, &lr) in tgt.iter().enumerate() {
            for (cc, &kc) in c.terms[i].iter().enumerate() {
                // Component P_{kc} -> P_{lr}: coefficients over e_{kc} A e_{lr},
                // i.e. monomials with source lr and target kc.
                let monomials = alg.monomial_ids_from_to(lr, kc);
                let len = monomials.len();
                slots.push(Slot {
                    deg_idx: i,
                    row: r,
                    col: cc,
                    monomials,
                    offset: total,
                });
                total += len;
            }
        }
    }

    let build = |coeffs: &dyn Fn(usize) -> F| -> Vec<AlgMat<F>> {
        let mut mats: Vec<AlgMat<F>> = (0..c.terms.len())
            .map(|i| {
                let sd = c.min_deg + i as i64;
                AlgMat::zero(d.labels(sd + degree).len(), c.terms[i].len())
            })
            .collect();
        for s in &slots {
            let mut e = AlgElem::zero();
            for (j, &mono) in s.monomials.iter().enumerate() {
                e.add_term(mono, coeffs(s.offset + j));
            }
            let mut m = mats[s.deg_idx].clone();
            m.set(s.row, s.col, e);
            mats[s.deg_idx] = m;
        }
        mats
    };

    // Chain condition rows: for each source degree d0, the matrix equation
    // f . d_D - (-1)^r d_C . f = 0, expanded entrywise over monomials.
    let sign = if degree.rem_euclid(2) == 0 {
        F::one()
    } else {
        -F::one()
    };
    let mut rows: Vec<Vec<F>> = Vec::new();
    for d0 in (c.min_deg - 1)..=c.max_deg() {
        let tgt_rows = d.labels(d0 + degree + 1).len();
        let src_cols = c.labels(d0).len();
        if tgt_rows == 0 || src_cols == 0 {
            continue;
        }
        // Accumulate coefficient vectors per (row, col, basis monomial).
        let mut eq: Vec<Vec<AlgElem<F>>> = Vec::new(); // unknown -> entry contribution
        eq.resize(total, Vec::new());
        for v in eq.iter_mut() {
            v.resize(tgt_rows * src_cols, AlgElem::zero());
        }
        // Term 1: (f at d0) then (d_D at d0+degree).
        let dd = d.diff(d0 + degree);
        for s in &slots {
            if c.min_deg + s.deg_idx as i64 != d0 {
                continue;
            }
            for (j, &mono) in s.monomials.iter().enumerate() {
                let unknown = s.offset + j;
                for rr in 0..tgt_rows {
                    let factor = dd.at(rr, s.row);
                    if factor.is_zero() {
                        continue;
                    }
                    let prod = alg.mul(&AlgElem::from_basis(mono), factor);
                    let cell = rr * src_cols + s.col;
                    eq[unknown][cell] = eq[unknown][cell].add(&prod);
                }
            }
        }
        // Term 2: -(sign) (d_C at d0) then (f at d0+1).
        let dc = c.diff(d0);
        for s in &slots {
            if c.min_deg + s.deg_idx as i64 != d0 + 1 {
                continue;
            }
            for (j, &mono) in s.monomials.iter().enumerate() {
                let unknown = s.offset + j;
                for cc in 0..src_cols {
                    let factor = dc.at(s.col, cc);
                    if factor.is_zero() {
                        continue;
                    }
                    let prod = alg
                        .mul(factor, &AlgElem::from_basis(mono))
                        .scale(&-sign.clone());
                    let cell = s.row * src_cols + cc;
                    eq[unknown][cell] = eq[unknown][cell].add(&prod);
                }
            }
        }
        // Flatten: one linear equation per (cell, basis monomial id).
        for cell in 0..tgt_rows * src_cols {
            let mut by_monomial: std::collections::BTreeMap<usize, Vec<F>> =
                std::collections::BTreeMap::new();
            for (u, entries) in eq.iter().enumerate() {
                for (mono, coeff) in entries[cell].iter() {
                    by_monomial
                        .entry(mono)
                        .or_insert_with(|| vec![F::zero(); total])[u] = coeff.clone();
                }
            }
            for (_, row) in by_monomial {
                rows.push(row);
            }
        }
    }

    let sols = if rows.is_empty() {
        Mat::identity(total)
    } else {
        Mat::from_rows(rows).kernel_basis()
    };
    (0..sols.cols())
        .map(|col| {
            let mats = build(&|u| sols.at(u, col).clone());
            ChainMap::new(c.clone(), d.clone(), degree, mats)
        })
        .collect()
}

/// Decide whether two formal complexes are isomorphic *as complexes* (which,
/// for minimal complexes, decides isomorphism in the homotopy category):
/// exact negatives from summand multisets and chain-map spaces, randomized
/// search for an invertible chain map, verified degreewise before returning.
pub fn complexes_isomorphic<F: Field, R: Rng>(
    c: &ProjComplex<F>,
    d: &ProjComplex<F>,
    rng: &mut R,
) -> IsoOutcome<ChainMap<F>> {
    if c.is_zero() && d.is_zero() {
        return IsoOutcome::Isomorphic(ChainMap::zero(c.clone(), d.clone(), 0));
    }
    if c.min_deg != d.min_deg || c.terms.len() != d.terms.len() {
        return IsoOutcome::NotIsomorphic;
    }
    for i in 0..c.terms.len() {
        let mut a = c.terms[i].clone();
        let mut b = d.terms[i].clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return IsoOutcome::NotIsomorphic;
        }
    }
    let basis = chain_map_space(c, d, 0);
    if basis.is_empty() {
        return IsoOutcome::NotIsomorphic;
    }
    for attempt in 0..ISO_RETRIES {
        let mut f = ChainMap::zero(c.clone(), d.clone(), 0);
        for b in &basis {
            let coeff = if attempt == 0 {
                F::one()
            } else {
                F::from_int(rng.gen_range(-20..=20))
            };
            f = f.add(&b.scale(&coeff));
        }
        if f.realize().iter().all(|m| m.is_isomorphism()) {
            return IsoOutcome::Isomorphic(f);
        }
    }
    IsoOutcome::Inconclusive
}

/// Exact check that two realized complexes have equal cohomology dimension
/// vectors everywhere (used as a safety net around replacements).
pub fn same_homology<F: Field>(a: &ModComplex<F>, b: &ModComplex<F>) -> bool {
    let lo = a.min_deg.min(b.min_deg) - 1;
    let hi = a.max_deg().max(b.max_deg()) + 1;
    (lo..=hi).all(|d| {
        let ha = a.homology_dims(d);
        let hb = b.homology_dims(d);
        let pad = |v: Vec<usize>, n: usize| {
            if v.len() == n {
                v
            } else {
                vec![0; n]
            }
        };
        let n = ha.len().max(hb.len());
        pad(ha, n) == pad(hb, n)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_an, An};
    use crate::field::Q;
    use num_traits::Zero;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn res_top_simple(an: &An<Q>) -> ProjComplex<Q> {
        // Hand-built minimal resolution of the top simple at n = 1:
        // P_1 --b--> P_0 --a--> P_1 in degrees -2, -1, 0.
        let b = an.alg.arrow_elem(an.up[0]);
        let a = an.alg.arrow_elem(an.down[0]);
        ProjComplex::new(
            an.alg.clone(),
            -2,
            vec![vec![1], vec![0], vec![1]],
            vec![AlgMat::single(b), AlgMat::single(a)],
        )
    }

    fn res_small_simple(an: &An<Q>) -> ProjComplex<Q> {
        // P_1 --b--> P_0 in degrees -1, 0 resolves the small simple.
        let b = an.alg.arrow_elem(an.up[0]);
        ProjComplex::new(
            an.alg.clone(),
            -1,
            vec![vec![1], vec![0]],
            vec![AlgMat::single(b)],
        )
    }

    #[test]
    fn realization_recovers_the_resolved_module() {
        let an = build_an::<Q>(1);
        let r = res_top_simple(&an);
        let m = r.realize();
        assert_eq!(m.homology_dims(0), vec![0, 1]); // the top simple
        assert_eq!(m.homology_dims(-1), vec![0, 0]);
        assert_eq!(m.homology_dims(-2), vec![0, 0]);
        assert_eq!(m.homology_module(0), an.simple(1));
    }

    #[test]
    fn shift_moves_homology_and_keeps_d_squared_zero() {
        let an = build_an::<Q>(1);
        let r = res_top_simple(&an).shift(3);
        assert_eq!(r.min_deg, -5);
        let m = r.realize();
        assert_eq!(m.homology_dims(-3), vec![0, 1]);
        assert_eq!(m.homology_total(0), 0);
    }

    #[test]
    fn nakayama_transport_computes_the_serre_twist_of_the_top_simple() {
        // Relabelling the resolution of the top simple as injectives gives a
        // complex whose only cohomology is that same simple in degree -2:
        // the right Serre-functor shift for the projective line.
        let an = build_an::<Q>(1);
        let nu = res_top_simple(&an).nakayama();
        let m = nu.realize();
        assert_eq!(m.homology_dims(-2), vec![0, 1]);
        assert_eq!(m.homology_total(-1), 0);
        assert_eq!(m.homology_total(0), 0);
        assert_eq!(m.homology_module(-2), an.simple(1));
    }

    #[test]
    fn duality_is_involutive_on_complexes() {
        let an = build_an::<Q>(1);
        let r = res_top_simple(&an);
        assert_eq!(r.dual().dual(), r);
        // The dual of the resolution computes the injective coresolution of
        // the dual module; for the self-dual top simple its cohomology sits
        // in degree 0 again.
        let m = r.dual().realize();
        assert_eq!(m.homology_dims(0), vec![0, 1]);
        assert_eq!(m.homology_total(1), 0);
        assert_eq!(m.homology_total(2), 0);
    }

    #[test]
    fn cone_of_identity_minimizes_to_zero() {
        let an = build_an::<Q>(1);
        let r = res_top_simple(&an);
        let id = ChainMap::identity(&r);
        let cone = ProjComplex::cone(&id);
        // The cone is acyclic...
        let m = cone.realize();
        for d in -4..=2 {
            assert_eq!(m.homology_total(d), 0, "cone of identity acyclic at {d}");
        }
        // ...and cancels away entirely.
        let (min, _) = cone.minimize(Vec::new());
        assert!(min.is_zero());
    }

    #[test]
    fn minimize_preserves_homology_and_transports_maps() {
        let an = build_an::<Q>(1);
        let r = res_top_simple(&an);
        // Pad the resolution with a contractible summand P_0 == P_0 in
        // degrees -1, 0, then check minimization recovers the original and
        // correctly rewrites an outgoing map.
        let e0 = AlgElem::<Q>::from_basis(an.alg.idempotent_id(0));
        let b = an.alg.arrow_elem(an.up[0]);
        let a = an.alg.arrow_elem(an.down[0]);
        let loop0 = an.alg.mul(&a, &b);
        let mut d0 = AlgMat::zero(2, 1);
        d0.set(0, 0, b.clone());
        d0.set(1, 0, AlgElem::zero());
        let mut d1 = AlgMat::zero(1, 2);
        d1.set(0, 0, a.clone());
        d1.set(0, 1, AlgElem::zero());
        // degrees: -2: [P1], -1: [P0, P0], 0: [P1]
        // extra differential component P0 -> P0 identity in degrees -1 -> 0?
        // Place the contractible pair inside degree -1 and 0 instead:
        // terms: [-2: P1] [-1: P0 P0] [0: P1 P0], with d(-1) having the
        // identity from the second P0 to the new P0 summand.
        let mut d1b = AlgMat::zero(2, 2);
        d1b.set(0, 0, a.clone());
        d1b.set(1, 1, e0.clone());
        d1b.set(1, 0, loop0.clone()); // radical junk that must be absorbed
        let padded = ProjComplex::new(
            an.alg.clone(),
            -2,
            vec![vec![1], vec![0, 0], vec![1, 0]],
            vec![d0, d1b],
        );
        let mr = padded.realize();
        assert_eq!(mr.homology_dims(0), vec![0, 1]);
        // An outgoing chain map to the plain resolution: project away the
        // padding (identity on the shared summands).
        let e1 = AlgElem::<Q>::from_basis(an.alg.idempotent_id(1));
        let m_minus2 = AlgMat::single(e1.clone());
        let mut m_minus1 = AlgMat::zero(1, 2);
        m_minus1.set(0, 0, e0.clone());
        let mut m_zero = AlgMat::zero(1, 2);
        m_zero.set(0, 0, e1.clone());
        let g = ChainMap::new(
            padded.clone(),
            r.clone(),
            0,
            vec![m_minus2, m_minus1, m_zero],
        );
        let (min, transported) = padded.minimize(vec![g]);
        assert_eq!(min, r);
        // The transported map is a chain map min -> r (validated on
        // construction) and realizes to an isomorphism in every degree.
        assert!(transported[0].realize().iter().all(|m| m.is_isomorphism()));
        let _ = transported;
    }

    #[test]
    fn chain_map_space_contains_identity_and_iso_search_succeeds() {
        let an = build_an::<Q>(1);
        let r = res_top_simple(&an);
        let space = chain_map_space(&r, &r, 0);
        assert!(!space.is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        assert!(complexes_isomorphic(&r, &r, &mut rng).is_isomorphic());
        let s = res_small_simple(&an);
        let mut rng2 = ChaCha8Rng::seed_from_u64(6);
        assert!(matches!(
            complexes_isomorphic(&r, &s, &mut rng2),
            IsoOutcome::NotIsomorphic
        ));
    }

    #[test]
    fn degree_one_chain_maps_between_small_resolutions_exist() {
        // A degree-1 chain map from the resolution of the small simple to
        // the resolution of the top simple realizes the generating first
        // extension between them.
        let an = build_an::<Q>(1);
        let r0 = res_small_simple(&an);
        let r1 = res_top_simple(&an);
        let space = chain_map_space(&r0, &r1, 1);
        // Contains a map whose degree -1 component P_1 -> P_1 is the
        // idempotent (the syzygy identification).
        assert!(!space.is_empty());
        let found = space.iter().any(|f| {
            let m = f.mat(-1);
            m.rows == 1 && m.cols == 1 && {
                let x = m.at(0, 0);
                !x.coeff(an.alg.idempotent_id(1)).is_zero()
            }
        });
        assert!(found, "no chain map realizes the syzygy identification");
    }
}
