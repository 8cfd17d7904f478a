//! JSON-facing data-transfer shapes for modules and formal complexes.
//!
//! Scalars and algebra elements are rendered as exact strings (`"3/2"`,
//! `"u1*d1 + (-1)*e_1"`), so the encoding is lossless for display and
//! diffing purposes and independent of the scalar type. Reports from
//! [`crate::verify`] serialize directly via serde; these shapes cover the
//! algebraic payloads.

use serde::{Deserialize, Serialize};

use crate::complex::ProjComplex;
use crate::field::Field;
use crate::module::Module;

/// A quiver representation: per-vertex dimensions plus one matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDto {
    pub dims: Vec<usize>,
    pub arrows: Vec<ArrowMapDto>,
}

/// The action of one arrow: a `dims[target] x dims[source]` matrix with
/// exact string entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowMapDto {
    pub arrow: String,
    pub source: usize,
    pub target: usize,
    pub matrix: Vec<Vec<String>>,
}

/// A formal complex of projectives: vertex labels per degree plus the
/// differentials as matrices over the path algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDto {
    pub min_deg: i64,
    /// `terms[i]` lists the projective summands (by vertex) in degree
    /// `min_deg + i`.
    pub terms: Vec<Vec<usize>>,
    /// `diffs[i]` maps degree `min_deg + i` to degree `min_deg + i + 1`.
    pub diffs: Vec<AlgMatDto>,
}

/// A matrix over the path algebra, sparse, entries rendered as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgMatDto {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<AlgEntryDto>,
}

/// One nonzero matrix entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgEntryDto {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

impl ModuleDto {
    pub fn from_module<F: Field>(m: &Module<F>) -> Self {
        let arrows = m
            .alg
            .quiver
            .arrows
            .iter()
            .zip(&m.maps)
            .map(|(arrow, mat)| ArrowMapDto {
                arrow: arrow.name.clone(),
                source: arrow.source,
                target: arrow.target,
                matrix: (0..mat.rows())
                    .map(|r| (0..mat.cols()).map(|c| mat.at(r, c).to_string()).collect())
                    .collect(),
            })
            .collect();
        ModuleDto {
            dims: m.dims.clone(),
            arrows,
        }
    }
}

impl ComplexDto {
    pub fn from_complex<F: Field>(c: &ProjComplex<F>) -> Self {
        let alg = c.alg.as_ref();
        let diffs = c
            .diffs
            .iter()
            .map(|d| {
                let mut entries = Vec::new();
                for row in 0..d.rows {
                    for col in 0..d.cols {
                        let x = d.at(row, col);
                        if !x.is_zero() {
                            entries.push(AlgEntryDto {
                                row,
                                col,
                                value: alg.display(x),
                            });
                        }
                    }
                }
                AlgMatDto {
                    rows: d.rows,
                    cols: d.cols,
                    entries,
                }
            })
            .collect();
        ComplexDto {
            min_deg: c.min_deg,
            terms: c.terms.clone(),
            diffs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_an;
    use crate::field::Q;
    use crate::homalg::minimal_resolution;

    #[test]
    fn module_round_trips_through_json() {
        let an = build_an::<Q>(2);
        let dto = ModuleDto::from_module(&an.projective(0));
        let text = serde_json::to_string(&dto).unwrap();
        let back: ModuleDto = serde_json::from_str(&text).unwrap();
        assert_eq!(dto, back);
        // Paths out of vertex 0: the idempotent and the loop at 0, plus the
        // single arrow landing at vertex 1.
        assert_eq!(back.dims, vec![2, 1, 0]);
    }

    #[test]
    fn complex_serialization_is_sparse_and_labelled() {
        let an = build_an::<Q>(1);
        let dto = ComplexDto::from_complex(&minimal_resolution(&an.simple(1)));
        assert_eq!(dto.min_deg, -2);
        assert_eq!(dto.terms, vec![vec![1], vec![0], vec![1]]);
        assert!(dto
            .diffs
            .iter()
            .all(|d| d.entries.iter().all(|e| !e.value.is_empty())));
        let text = serde_json::to_string(&dto).unwrap();
        let back: ComplexDto = serde_json::from_str(&text).unwrap();
        assert_eq!(dto, back);
    }
}
