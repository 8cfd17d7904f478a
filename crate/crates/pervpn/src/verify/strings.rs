//! Graded endomorphism rings of the string modules.
//!
//! Every string `Z±_{a,b}` has derived endomorphism ring isomorphic to the
//! cohomology of a projective space: a truncated polynomial ring
//! `k[t]/(t^{w+1})` on a degree-2 generator, with width `w = (a+b)/2` when
//! `a - b` is even and `w = (a-b-1)/2` when odd. The suite certifies both
//! the graded dimensions and the nonvanishing of the top power `t^w`.

use crate::field::Field;
use crate::heart::{Heart, ObjectId};
use crate::homalg::graded_end_ring_profile;

use super::{Recorder, SuiteReport};

const STATEMENT: &str = "stringsplike";

/// Expected truncation width of `End*(Z±_{a,b})`.
pub fn expected_width(a: usize, b: usize) -> usize {
    if (a - b) % 2 == 0 {
        (a + b) / 2
    } else {
        (a - b - 1) / 2
    }
}

/// Verify the endomorphism-ring classification of all strings at rank `n`.
pub fn run<F: Field>(n: usize, seed: u64) -> SuiteReport {
    let mut rec = Recorder::new::<F>("strings", n, seed);
    let heart = Heart::<F>::new(n);

    for a in 0..=n {
        for b in (0..=a).rev() {
            let mut ids = vec![ObjectId::StringPlus(a, b)];
            if b < a {
                ids.push(ObjectId::StringMinus(a, b));
            }
            for id in ids {
                let w = expected_width(a, b);
                let profile = graded_end_ring_profile(&heart.module(id));
                let computed = match profile.plike {
                    Some(got) => format!("k[t]/(t^{}), t in degree 2", got + 1),
                    None => format!(
                        "not a truncated polynomial ring (dims {:?}, top power {:?})",
                        profile.dims, profile.top_power
                    ),
                };
                rec.check(
                    STATEMENT,
                    format!("End*({id})"),
                    format!("k[t]/(t^{}), t in degree 2", w + 1),
                    computed,
                );
                rec.check(
                    STATEMENT,
                    format!("End*({id}): top power of the generator"),
                    format!("t^{w} nonzero"),
                    match profile.top_power {
                        Some(p) => format!("t^{p} nonzero"),
                        None => "no nonzero power certified".into(),
                    },
                );
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
    fn all_strings_have_projective_space_cohomology() {
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
            // Two rows per string, (n+1)^2 strings.
            assert_eq!(report.rows.len(), 2 * (n + 1) * (n + 1));
        }
    }
}
