//! Machine-checkable verification suites over the heart.
//!
//! Each suite checks one family of statements at a chosen rank `n` over a
//! chosen scalar field and returns a [`SuiteReport`]: one [`Row`] per concrete
//! check (stable statement identifier, instance, expected vs computed value,
//! verdict), plus optional dimension-table blocks for tabular rendering.
//!
//! Reports are deterministic given `(suite, n, field, seed)` in every field
//! except the wall-clock `elapsed_ms`.

pub mod census;
pub mod cy;
pub mod extalgebra;
pub mod homtables;
pub mod serre;
pub mod strings;

use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

use crate::field::Field;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check could not be decided (e.g. a randomized certificate search
    /// was exhausted, or the field is too small for an exhaustive bound).
    Inconclusive,
}

/// One verified statement instance.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    /// Stable identifier of the statement family this check belongs to.
    pub statement: String,
    /// The concrete instance (objects, degrees, parameters).
    pub case: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
}

/// A dimension table: rows indexed by cohomological degree, columns by
/// parameter tuples — the shape in which graded hom data is usually read.
#[derive(Clone, Debug, Serialize)]
pub struct TableBlock {
    pub statement: String,
    pub title: String,
    pub col_labels: Vec<String>,
    /// Degrees labelling the rows of `entries`.
    pub degrees: Vec<i64>,
    /// `entries[i][j]` is the dimension in degree `degrees[i]` at column `j`.
    pub entries: Vec<Vec<usize>>,
}

/// Report of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub field: String,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    /// Wall-clock time; informational only, excluded from determinism.
    pub elapsed_ms: u128,
    pub rows: Vec<Row>,
    pub tables: Vec<TableBlock>,
}

impl SuiteReport {
    /// Every check passed outright.
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.inconclusive == 0
    }

    /// No check failed (inconclusive checks tolerated).
    pub fn ok_allowing_inconclusive(&self) -> bool {
        self.failed == 0
    }
}

/// Top-level report: one run over some suites at a fixed `(n, field, seed)`.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// Version of this report shape; bumped on breaking changes.
    pub schema_version: u32,
    pub tool: String,
    pub n: usize,
    pub field: String,
    pub seed: u64,
    /// Caveats that apply to the whole run (e.g. positive characteristic).
    pub advisories: Vec<String>,
    pub suites: Vec<SuiteReport>,
    /// True when every row of every suite passed.
    pub all_passed: bool,
}

impl Report {
    pub fn assemble<F: Field>(n: usize, seed: u64, suites: Vec<SuiteReport>) -> Report {
        let all_passed = suites.iter().all(SuiteReport::ok);
        Report {
            schema_version: 1,
            tool: format!("pervpn {}", env!("CARGO_PKG_VERSION")),
            n,
            field: field_name::<F>(),
            seed,
            advisories: advisories::<F>(),
            suites,
            all_passed,
        }
    }
}

/// Short display name of the scalar field.
pub fn field_name<F: Field>() -> String {
    if F::CHARACTERISTIC == 0 {
        "Q".into()
    } else {
        format!("F{}", F::CHARACTERISTIC)
    }
}

/// Run-wide caveats implied by the choice of scalars.
pub fn advisories<F: Field>() -> Vec<String> {
    if F::CHARACTERISTIC == 0 {
        Vec::new()
    } else {
        vec![format!(
            "scalars have characteristic {}: the reference values are \
             characteristic-0 statements, so discrepancies are advisory \
             rather than refutations",
            F::CHARACTERISTIC
        )]
    }
}

/// Collects rows for one suite and stamps the summary on `finish`.
pub(crate) struct Recorder {
    suite: &'static str,
    n: usize,
    field: String,
    seed: u64,
    start: Instant,
    rows: Vec<Row>,
    tables: Vec<TableBlock>,
}

impl Recorder {
    pub(crate) fn new<F: Field>(suite: &'static str, n: usize, seed: u64) -> Self {
        Recorder {
            suite,
            n,
            field: field_name::<F>(),
            seed,
            start: Instant::now(),
            rows: Vec::new(),
            tables: Vec::new(),
        }
    }

    /// Record a check that passes exactly when the rendered values agree.
    pub(crate) fn check(
        &mut self,
        statement: &str,
        case: impl Into<String>,
        expected: impl Display,
        computed: impl Display,
    ) {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let verdict = if expected == computed {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self.rows.push(Row {
            statement: statement.into(),
            case: case.into(),
            expected,
            computed,
            verdict,
        });
    }

    /// Record a check that could not be decided.
    pub(crate) fn inconclusive(
        &mut self,
        statement: &str,
        case: impl Into<String>,
        expected: impl Display,
        note: impl Display,
    ) {
        self.rows.push(Row {
            statement: statement.into(),
            case: case.into(),
            expected: expected.to_string(),
            computed: note.to_string(),
            verdict: Verdict::Inconclusive,
        });
    }

    pub(crate) fn table(&mut self, block: TableBlock) {
        self.tables.push(block);
    }

    pub(crate) fn finish(self) -> SuiteReport {
        let passed = self
            .rows
            .iter()
            .filter(|r| r.verdict == Verdict::Pass)
            .count();
        let failed = self
            .rows
            .iter()
            .filter(|r| r.verdict == Verdict::Fail)
            .count();
        let inconclusive = self
            .rows
            .iter()
            .filter(|r| r.verdict == Verdict::Inconclusive)
            .count();
        SuiteReport {
            suite: self.suite.into(),
            n: self.n,
            field: self.field,
            seed: self.seed,
            passed,
            failed,
            inconclusive,
            elapsed_ms: self.start.elapsed().as_millis(),
            rows: self.rows,
            tables: self.tables,
        }
    }
}

/// Render a dimension profile as `{r:dim, ...}` over its nonzero degrees.
pub(crate) fn render_profile(profile: &[usize]) -> String {
    let parts: Vec<String> = profile
        .iter()
        .enumerate()
        .filter(|(_, d)| **d != 0)
        .map(|(r, d)| format!("{r}:{d}"))
        .collect();
    format!("{{{}}}", parts.join(", "))
}
