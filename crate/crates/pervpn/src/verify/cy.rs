//! Calabi-Yau classification over the census of indecomposables.
//!
//! For every census object `M` and every pairing degree `0 <= d <= 2n`, the
//! suite runs the trace-pairing check and compares against the expected
//! classification: the top simple `IC_n` is Calabi-Yau exactly in degree
//! `2n`, the projective-injectives `P_k` (`k < n`) exactly in degree 0, and
//! nothing else in the census is Calabi-Yau in any degree.

use crate::field::Field;
use crate::heart::{Heart, ObjectId};
use crate::homalg::{cy_check, CyVerdict};

use super::{Recorder, SuiteReport};

const STATEMENT: &str = "CY_objects";

/// Is `(id, d)` an expected Calabi-Yau pair at rank `n`?
pub fn expected_cy(n: usize, id: ObjectId, d: usize) -> bool {
    match id {
        ObjectId::StringPlus(a, b) => a == n && b == n && d == 2 * n,
        ObjectId::Projective(k) => k < n && d == 0,
        ObjectId::Simple(k) => k == n && d == 2 * n,
        ObjectId::Injective(_) | ObjectId::Standard(_) | ObjectId::Costandard(_) => false,
        ObjectId::StringMinus(_, _) => false,
    }
}

/// Verify the Calabi-Yau classification at rank `n`.
pub fn run<F: Field>(n: usize, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new::<F>("cy", n, seed);
    let heart = Heart::<F>::new(n);

    for id in heart.census() {
        let m = heart.module(id);
        for d in 0..=2 * n {
            let expected = if expected_cy(n, id, d) {
                "Calabi-Yau"
            } else {
                "not Calabi-Yau"
            };
            let report = cy_check(&m, d as i64);
            let case = format!("{id} at degree {d} (end dim {})", report.end_dim);
            match report.verdict {
                CyVerdict::CalabiYau => rec.check(STATEMENT, case, expected, "Calabi-Yau"),
                CyVerdict::NotCalabiYau => rec.check(STATEMENT, case, expected, "not Calabi-Yau"),
                CyVerdict::Inconclusive => {
                    rec.inconclusive(STATEMENT, case, expected, report.detail)
                }
            }
        }
    }

    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn census_calabi_yau_classification_is_exact() {
        for n in 1..=2 {
            let report = run::<Q>(n, 0);
            for row in &report.rows {
                assert_eq!(
                    row.verdict,
                    crate::verify::Verdict::Pass,
                    "n={n}: {}: expected {}, computed {}",
                    row.case,
                    row.expected,
                    row.computed
                );
            }
            assert!(report.ok());
            let positives = report
                .rows
                .iter()
                .filter(|r| r.computed == "Calabi-Yau")
                .count();
            // IC_n in degree 2n plus the n projective-injectives in degree 0.
            assert_eq!(positives, n + 1);
        }
    }
}
