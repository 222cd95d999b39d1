//! Graded verification suite: the full grid of theorem instances plus the
//! negative controls, run on a bounded worker pool and merged in a fixed order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::theorems::{
    psi_check, verify_lemma31_sweep, verify_ssz12, verify_ssz_quotient_sweep, verify_sun_tauraso,
    Control, PsiSpec, Statement, VerificationReport, Verifier,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(format!("unknown level {s:?} (expected quick or full)")),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Quick => "quick",
            Level::Full => "full",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!(
                "unknown output format {s:?} (expected text or json)"
            )),
        }
    }
}

pub const QUICK_A_MAX: u32 = 2;
pub const QUICK_M_MAX: u64 = 2;
pub const QUICK_N_MAX: u64 = 200;
pub const FULL_A_MAX: u32 = 3;
pub const FULL_M_MAX: u64 = 3;
pub const FULL_N_MAX: u64 = 2000;

/// Primes and exponents for `Σ_{k<p^a} C(2k,k) mod p²`.
pub const SUN_TAURASO_PRIMES: [u64; 5] = [2, 5, 7, 11, 13];
pub const SUN_TAURASO_EXPONENTS: [u32; 2] = [1, 2];

/// Range of `a` for the integer congruence `Σ C(2k,k) ≡ 3^(2a) (mod 3^(2a+1))`.
pub const SSZ12_A_MAX: u32 = 8;
/// Range of `a` for the q → 1 limit of `R(a,q)`.
pub const REMARK14_A_MAX: u32 = 6;
/// q-Lucas grid bounds: `d <= 6`, `x1, x2 <= 4`.
pub const QLUCAS_D_MAX: u64 = 6;
pub const QLUCAS_X_MAX: u64 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub level: Level,
    pub a_max: u32,
    pub m_max: u64,
    pub n_max: u64,
    pub output: OutputFormat,
    pub jobs: usize,
}

impl SuiteConfig {
    pub fn quick() -> Self {
        SuiteConfig {
            level: Level::Quick,
            a_max: QUICK_A_MAX,
            m_max: QUICK_M_MAX,
            n_max: QUICK_N_MAX,
            output: OutputFormat::Text,
            jobs: 1,
        }
    }

    pub fn full() -> Self {
        SuiteConfig {
            level: Level::Full,
            a_max: FULL_A_MAX,
            m_max: FULL_M_MAX,
            n_max: FULL_N_MAX,
            output: OutputFormat::Text,
            jobs: 1,
        }
    }

    pub fn for_level(level: Level) -> Self {
        match level {
            Level::Quick => Self::quick(),
            Level::Full => Self::full(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.a_max < 1 || self.m_max < 1 || self.n_max < 1 || self.jobs < 1 {
            return bad("a_max, m_max, n_max and jobs must all be >= 1".into());
        }
        if self.level == Level::Quick
            && (self.a_max > QUICK_A_MAX || self.m_max > QUICK_M_MAX || self.n_max > QUICK_N_MAX)
        {
            return bad(format!(
                "quick level allows a_max <= {QUICK_A_MAX}, m_max <= {QUICK_M_MAX}, n_max <= {QUICK_N_MAX}"
            ));
        }
        Ok(())
    }
}

/// One executed check and whether it was supposed to pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteEntry {
    pub report: VerificationReport,
    pub expected_pass: bool,
}

impl SuiteEntry {
    pub fn as_expected(&self) -> bool {
        self.report.pass == self.expected_pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub entries: Vec<SuiteEntry>,
}

impl SuiteOutcome {
    pub fn total(&self) -> usize {
        self.entries.len()
    }

    /// Entries whose outcome matched the expectation.
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.as_expected()).count()
    }

    pub fn all_ok(&self) -> bool {
        self.passed() == self.total()
    }

    pub fn summary(&self) -> SuiteSummary {
        SuiteSummary {
            passed: self.passed(),
            total: self.total(),
            ok: self.all_ok(),
        }
    }

    /// The JSON document: every report in order, then the summary.
    pub fn json_records(&self) -> Vec<JsonRecord> {
        let mut out: Vec<JsonRecord> = self.entries.iter().map(JsonRecord::from).collect();
        out.push(JsonRecord::Summary {
            summary: self.summary(),
        });
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub passed: usize,
    pub total: usize,
    pub ok: bool,
}

/// One element of the top-level JSON array.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonRecord {
    Report {
        statement: Statement,
        params: BTreeMap<String, i64>,
        pass: bool,
        witness: Option<String>,
        elapsed_ms: u64,
        expected: bool,
    },
    Summary {
        summary: SuiteSummary,
    },
}

impl From<&SuiteEntry> for JsonRecord {
    fn from(e: &SuiteEntry) -> Self {
        let r = &e.report;
        JsonRecord::Report {
            statement: r.statement,
            params: r.params.clone(),
            pass: r.pass,
            witness: r.witness.clone(),
            elapsed_ms: r.elapsed_ms,
            expected: e.expected_pass,
        }
    }
}

type Task = Box<dyn Fn(&Verifier) -> Vec<SuiteEntry> + Send + Sync>;

fn task(
    statement: Statement,
    f: impl Fn(&Verifier) -> Result<VerificationReport> + Send + Sync + 'static,
) -> Task {
    task_expect(statement, None, f)
}

fn control_task(
    statement: Statement,
    control: Control,
    f: impl Fn(&Verifier) -> Result<VerificationReport> + Send + Sync + 'static,
) -> Task {
    task_expect(statement, Some(control), f)
}

fn task_expect(
    statement: Statement,
    control: Option<Control>,
    f: impl Fn(&Verifier) -> Result<VerificationReport> + Send + Sync + 'static,
) -> Task {
    Box::new(move |v| {
        let report = f(v).unwrap_or_else(|e| error_report(statement, control, e));
        vec![SuiteEntry {
            expected_pass: report.control().is_none(),
            report,
        }]
    })
}

/// A check that returned an error counts as a failed report. For the
/// ψ-hypothesis control the error is the designed outcome.
fn error_report(statement: Statement, control: Option<Control>, err: Error) -> VerificationReport {
    let mut params = std::collections::BTreeMap::new();
    if let Some(c) = control {
        params.insert("control".to_string(), c.code());
    }
    let witness = match &err {
        Error::PsiHypothesisViolated { k, j } => format!("{k},{j}"),
        _ => format!("error: {err}"),
    };
    VerificationReport {
        statement,
        params,
        pass: false,
        witness: Some(witness),
        elapsed_ms: 0,
    }
}

/// `(a, m)` points for the q-series sums: the full rectangle, plus `(4, 1)`
/// at the full level.
pub fn eq13_grid(config: &SuiteConfig) -> Vec<(u32, u64)> {
    let mut grid: Vec<(u32, u64)> = (1..=config.a_max)
        .flat_map(|a| (1..=config.m_max).map(move |m| (a, m)))
        .collect();
    if config.level == Level::Full && !grid.contains(&(4, 1)) {
        grid.push((4, 1));
    }
    grid
}

/// `(a, m)` points for the ψ-sums and the identity; capped at `a <= 2`
/// because the row `[2·3^a·m choose k]_q` is the dominant cost.
pub fn psi_grid(config: &SuiteConfig) -> Vec<(u32, u64)> {
    (1..=config.a_max.min(2))
        .flat_map(|a| (1..=config.m_max).map(move |m| (a, m)))
        .collect()
}

fn plan(config: &SuiteConfig) -> Vec<Task> {
    let mut tasks: Vec<Task> = Vec::new();

    for (a, m) in eq13_grid(config) {
        tasks.push(task(Statement::Eq13, move |v| v.verify_eq13(a, m)));
        tasks.push(control_task(
            Statement::Eq13,
            Control::TruncatedSum,
            move |v| v.control_eq13_truncated(a, m),
        ));
        tasks.push(control_task(
            Statement::Eq13,
            Control::InflatedModulus,
            move |v| v.control_eq13_inflated(a, m),
        ));
    }

    for a in 1..=config.a_max {
        tasks.push(task(Statement::Eq14, move |v| v.verify_eq14(a)));
        tasks.push(control_task(
            Statement::Eq14,
            Control::PerturbedR,
            move |v| v.control_eq14_perturbed(a),
        ));
        tasks.push(task(Statement::Lemma31, move |_| verify_lemma31_sweep(a)));
    }

    for (a, m) in psi_grid(config) {
        tasks.push(task(Statement::PsiCheck, move |_| {
            Ok(psi_check(&PsiSpec::psi_m(a, m)?))
        }));
        tasks.push(task(Statement::Eq21, move |v| {
            v.verify_eq21(a, m, &PsiSpec::zero(a, m)?)
        }));
        tasks.push(task(Statement::Eq21, move |v| {
            v.verify_eq21(a, m, &PsiSpec::psi_m(a, m)?)
        }));
        tasks.push(control_task(
            Statement::Eq21,
            Control::IdentityPsi,
            move |v| {
                let mut r = v.verify_eq21(a, m, &PsiSpec::identity(a, m)?)?;
                r.params
                    .insert("control".into(), Control::IdentityPsi.code());
                Ok(r)
            },
        ));
        tasks.push(task(Statement::Id33, move |v| v.verify_identity33(a, m)));
        tasks.push(control_task(
            Statement::Id33,
            Control::DroppedTerm,
            move |v| v.control_identity33_dropped(a, m),
        ));
    }

    for a in 1..=config.a_max.min(2) {
        tasks.push(task(Statement::Lemma32, move |v| {
            v.verify_lemma32(a, &PsiSpec::zero(a, 1)?)
        }));
        tasks.push(task(Statement::Lemma32, move |v| {
            v.verify_lemma32(a, &PsiSpec::psi_m(a, 1)?)
        }));
    }

    for a in 1..=SSZ12_A_MAX {
        tasks.push(task(Statement::Ssz12, move |_| verify_ssz12(a)));
    }

    let n_max = config.n_max;
    tasks.push(Box::new(move |_| match verify_ssz_quotient_sweep(n_max) {
        Ok(reports) => reports
            .into_iter()
            .map(|report| SuiteEntry {
                report,
                expected_pass: true,
            })
            .collect(),
        Err(e) => vec![SuiteEntry {
            report: error_report(Statement::SszQuotient, None, e),
            expected_pass: true,
        }],
    }));

    for p in SUN_TAURASO_PRIMES {
        for a in SUN_TAURASO_EXPONENTS {
            tasks.push(task(Statement::SunTauraso, move |_| {
                verify_sun_tauraso(p, a)
            }));
        }
    }

    for a in 1..=REMARK14_A_MAX {
        tasks.push(task(Statement::Remark14, move |v| v.verify_remark14(a)));
    }

    for d in 1..=QLUCAS_D_MAX {
        tasks.push(Box::new(move |v| {
            let mut out = Vec::new();
            for x1 in 0..=QLUCAS_X_MAX {
                for x2 in 0..=QLUCAS_X_MAX {
                    for y1 in 0..d {
                        for y2 in 0..d {
                            let report = v
                                .q_lucas_check(d, x1, y1, x2, y2)
                                .unwrap_or_else(|e| error_report(Statement::QLucas, None, e));
                            out.push(SuiteEntry {
                                report,
                                expected_pass: true,
                            });
                        }
                    }
                }
            }
            out
        }));
    }

    tasks
}

/// Runs every planned check on `config.jobs` workers. Entries come back
/// sorted by statement and parameters, independent of scheduling.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let verifier = Verifier::new();
    let tasks = plan(config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    let mut entries: Vec<SuiteEntry> =
        pool.install(|| tasks.par_iter().flat_map_iter(|t| t(&verifier)).collect());
    entries.sort_by_cached_key(|e| e.report.sort_key());
    Ok(SuiteOutcome { entries })
}
