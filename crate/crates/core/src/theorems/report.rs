use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Identifier of a checked statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Statement {
    #[serde(rename = "eq13")]
    Eq13,
    #[serde(rename = "eq14")]
    Eq14,
    #[serde(rename = "eq21")]
    Eq21,
    #[serde(rename = "id33")]
    Id33,
    #[serde(rename = "lemma31")]
    Lemma31,
    #[serde(rename = "lemma32")]
    Lemma32,
    #[serde(rename = "ssz12")]
    Ssz12,
    #[serde(rename = "ssz_quotient")]
    SszQuotient,
    #[serde(rename = "sun_tauraso")]
    SunTauraso,
    #[serde(rename = "remark14")]
    Remark14,
    #[serde(rename = "qlucas")]
    QLucas,
    #[serde(rename = "psi_check")]
    PsiCheck,
}

impl Statement {
    pub const ALL: [Statement; 12] = [
        Statement::Eq13,
        Statement::Eq14,
        Statement::Eq21,
        Statement::Id33,
        Statement::Lemma31,
        Statement::Lemma32,
        Statement::Ssz12,
        Statement::SszQuotient,
        Statement::SunTauraso,
        Statement::Remark14,
        Statement::QLucas,
        Statement::PsiCheck,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Eq13 => "eq13",
            Statement::Eq14 => "eq14",
            Statement::Eq21 => "eq21",
            Statement::Id33 => "id33",
            Statement::Lemma31 => "lemma31",
            Statement::Lemma32 => "lemma32",
            Statement::Ssz12 => "ssz12",
            Statement::SszQuotient => "ssz_quotient",
            Statement::SunTauraso => "sun_tauraso",
            Statement::Remark14 => "remark14",
            Statement::QLucas => "qlucas",
            Statement::PsiCheck => "psi_check",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| format!("unknown statement {s:?}"))
    }
}

/// Which deliberately falsified variant a control report ran. Stored in the
/// report's `control` parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Control {
    /// Central sum stopped one term short.
    TruncatedSum = 1,
    /// Modulus raised from `[3^a]_q^2` to `[3^a]_q^3`.
    InflatedModulus = 2,
    /// `R(a,q)` replaced by `R(a,q) + 1`.
    PerturbedR = 3,
    /// `ψ(k) = k`, which breaks the symmetry hypothesis.
    IdentityPsi = 4,
    /// One term dropped from the left side of the identity.
    DroppedTerm = 5,
}

impl Control {
    pub fn code(self) -> i64 {
        self as i64
    }
}

/// Outcome of one check.
///
/// `witness` holds the canonical polynomial text form (quotient on success,
/// remainder on failure), a decimal integer, a rational `num/den`, or a
/// comma-separated integer tuple, depending on the statement. It is always
/// present when `pass` is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement: Statement,
    pub params: BTreeMap<String, i64>,
    pub pass: bool,
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn param(&self, key: &str) -> Option<i64> {
        self.params.get(key).copied()
    }

    /// The control variant this report ran, if any.
    pub fn control(&self) -> Option<i64> {
        self.param("control")
    }

    /// Ordering key used to merge reports deterministically.
    pub fn sort_key(&self) -> (Statement, Vec<(String, i64)>) {
        (
            self.statement,
            self.params.iter().map(|(k, v)| (k.clone(), *v)).collect(),
        )
    }
}

pub(crate) struct ReportBuilder {
    statement: Statement,
    params: BTreeMap<String, i64>,
    start: Instant,
}

impl ReportBuilder {
    pub(crate) fn new(statement: Statement) -> Self {
        ReportBuilder {
            statement,
            params: BTreeMap::new(),
            start: Instant::now(),
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl TryInto<i64>) -> Self {
        let value = value
            .try_into()
            .unwrap_or_else(|_| panic!("report parameter {key} out of i64 range"));
        self.params.insert(key.to_string(), value);
        self
    }

    pub(crate) fn control(self, control: Option<Control>) -> Self {
        match control {
            Some(c) => self.param("control", c.code()),
            None => self,
        }
    }

    pub(crate) fn finish(self, pass: bool, witness: Option<String>) -> VerificationReport {
        assert!(
            pass || witness.is_some(),
            "failing {} report without a witness",
            self.statement
        );
        VerificationReport {
            statement: self.statement,
            params: self.params,
            pass,
            witness,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}
