use std::collections::BTreeMap;
use std::str::FromStr;

use qcong_core::modring::Modulus;
use qcong_core::qcore::{central_qbinom_sum, cyclotomic, q_binom, q_int};
use qcong_core::suite::{run_suite, SuiteConfig};
use qcong_core::theorems::{
    psi_check, verify_lemma31, verify_lemma31_sweep, verify_ssz12, verify_ssz_quotient,
    verify_sun_tauraso,
};
use qcong_core::{
    CyclotomicCache, Error, IntPoly, Level, PsiKind, PsiSpec, Statement, VerificationReport,
    Verifier,
};

use crate::args::{Format, LevelArg, ShowObject};
use crate::params::Params;
use crate::render::report_line;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug)]
pub enum CmdError {
    /// Bad request; exit 2 with usage.
    Usage(String),
    /// The engine gave up; exit 1.
    Engine(Error),
}

impl From<String> for CmdError {
    fn from(s: String) -> Self {
        CmdError::Usage(s)
    }
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalError(_) => CmdError::Engine(e),
            other => CmdError::Usage(other.to_string()),
        }
    }
}

fn psi_spec(a: u32, m: u64, code: i64) -> Result<PsiSpec, CmdError> {
    match PsiKind::from_code(code) {
        Some(PsiKind::Zero) => Ok(PsiSpec::zero(a, m)?),
        Some(PsiKind::PsiM) => Ok(PsiSpec::psi_m(a, m)?),
        Some(PsiKind::Identity) => Ok(PsiSpec::identity(a, m)?),
        _ => Err(CmdError::Usage(format!(
            "psi must be 0, 1 or 2, got {code}"
        ))),
    }
}

fn bad_control(statement: Statement, code: i64) -> CmdError {
    CmdError::Usage(format!("control {code} does not apply to {statement}"))
}

/// A ψ that breaks its hypotheses is a failed check, not a usage error.
fn hypothesis_failure(
    statement: Statement,
    params: BTreeMap<String, i64>,
    res: qcong_core::Result<VerificationReport>,
) -> Result<VerificationReport, CmdError> {
    match res {
        Err(Error::PsiHypothesisViolated { k, j }) => Ok(VerificationReport {
            statement,
            params,
            pass: false,
            witness: Some(format!("{k},{j}")),
            elapsed_ms: 0,
        }),
        other => Ok(other?),
    }
}

pub fn run_verify(statement: &str, raw: &[String]) -> Result<VerificationReport, CmdError> {
    let statement = Statement::from_str(statement).map_err(CmdError::Usage)?;
    let mut p = Params::parse(raw)?;
    let v = Verifier::new();
    let report = match statement {
        Statement::Eq13 => {
            let (a, m) = (p.u32("a")?, p.u64("m")?);
            let control = p.opt_i64("control");
            p.finish()?;
            match control {
                None => v.verify_eq13(a, m)?,
                Some(1) => v.control_eq13_truncated(a, m)?,
                Some(2) => v.control_eq13_inflated(a, m)?,
                Some(c) => return Err(bad_control(statement, c)),
            }
        }
        Statement::Eq14 => {
            let a = p.u32("a")?;
            let control = p.opt_i64("control");
            p.finish()?;
            match control {
                None => v.verify_eq14(a)?,
                Some(3) => v.control_eq14_perturbed(a)?,
                Some(c) => return Err(bad_control(statement, c)),
            }
        }
        Statement::Eq21 => {
            let (a, m) = (p.u32("a")?, p.u64("m")?);
            let code = p.opt_i64("psi").unwrap_or(0);
            p.finish()?;
            let psi = psi_spec(a, m, code)?;
            let params = BTreeMap::from([
                ("a".to_string(), i64::from(a)),
                ("m".to_string(), m as i64),
                ("psi".to_string(), code),
            ]);
            hypothesis_failure(statement, params, v.verify_eq21(a, m, &psi))?
        }
        Statement::Id33 => {
            let (a, m) = (p.u32("a")?, p.u64("m")?);
            let control = p.opt_i64("control");
            p.finish()?;
            match control {
                None => v.verify_identity33(a, m)?,
                Some(5) => v.control_identity33_dropped(a, m)?,
                Some(c) => return Err(bad_control(statement, c)),
            }
        }
        Statement::Lemma31 => {
            let a = p.u32("a")?;
            let k = p.opt_i64("k");
            let l = p.opt_i64("l");
            p.finish()?;
            match (k, l) {
                (None, None) => verify_lemma31_sweep(a)?,
                (Some(k), Some(l)) => verify_lemma31(a, k, l)?,
                _ => {
                    return Err(CmdError::Usage(
                        "lemma31 needs both k and l, or neither".into(),
                    ))
                }
            }
        }
        Statement::Lemma32 => {
            let a = p.u32("a")?;
            let code = p.opt_i64("psi").unwrap_or(0);
            p.finish()?;
            let psi = psi_spec(a, 1, code)?;
            let params =
                BTreeMap::from([("a".to_string(), i64::from(a)), ("psi".to_string(), code)]);
            hypothesis_failure(statement, params, v.verify_lemma32(a, &psi))?
        }
        Statement::Ssz12 => {
            let a = p.u32("a")?;
            p.finish()?;
            verify_ssz12(a)?
        }
        Statement::SszQuotient => {
            let n = p.u64("n")?;
            p.finish()?;
            verify_ssz_quotient(n)?
        }
        Statement::SunTauraso => {
            let (prime, a) = (p.u64("p")?, p.u32("a")?);
            p.finish()?;
            verify_sun_tauraso(prime, a)?
        }
        Statement::Remark14 => {
            let a = p.u32("a")?;
            p.finish()?;
            v.verify_remark14(a)?
        }
        Statement::QLucas => {
            let (d, x1, y1) = (p.u64("d")?, p.u64("x1")?, p.u64("y1")?);
            let (x2, y2) = (p.u64("x2")?, p.u64("y2")?);
            p.finish()?;
            v.q_lucas_check(d, x1, y1, x2, y2)?
        }
        Statement::PsiCheck => {
            let (a, m) = (p.u32("a")?, p.u64("m")?);
            let code = p.opt_i64("psi").unwrap_or(PsiKind::PsiM.code());
            p.finish()?;
            psi_check(&psi_spec(a, m, code)?)
        }
    };
    Ok(report)
}

pub fn print_report(r: &VerificationReport, format: Format) {
    match format {
        Format::Text => println!("{}", report_line(r)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(r).expect("reports always serialize")
        ),
    }
}

pub struct SuiteArgs {
    pub level: LevelArg,
    pub a_max: Option<u32>,
    pub m_max: Option<u64>,
    pub n_max: Option<u64>,
    pub jobs: Option<usize>,
}

pub fn suite_config(args: &SuiteArgs) -> SuiteConfig {
    let level = match args.level {
        LevelArg::Quick => Level::Quick,
        LevelArg::Full => Level::Full,
    };
    let mut config = SuiteConfig::for_level(level);
    if let Some(a) = args.a_max {
        config.a_max = a;
    }
    if let Some(m) = args.m_max {
        config.m_max = m;
    }
    if let Some(n) = args.n_max {
        config.n_max = n;
    }
    config.jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    config
}

pub fn run_suite_cmd(config: &SuiteConfig, format: Format) -> Result<u8, CmdError> {
    config.validate()?;
    let outcome = run_suite(config)?;
    match format {
        Format::Text => {
            for e in &outcome.entries {
                let mark = match (e.as_expected(), e.expected_pass) {
                    (true, true) => "   ",
                    (true, false) => "xf ",
                    (false, _) => "!! ",
                };
                println!("{mark}{}", report_line(&e.report));
            }
            println!("PASSED {}/{}", outcome.passed(), outcome.total());
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&outcome.json_records())
                .expect("reports always serialize")
        ),
    }
    Ok(if outcome.all_ok() { EXIT_OK } else { EXIT_FAIL })
}

pub fn run_show(object: ShowObject, raw: &[String]) -> Result<IntPoly, CmdError> {
    let mut p = Params::parse(raw)?;
    let poly = match object {
        ShowObject::Qbinom => {
            let (n, k) = (p.u64("n")?, p.u64("k")?);
            p.finish()?;
            q_binom(n, k)
        }
        ShowObject::Cyclotomic => {
            let d = p.u64("d")?;
            p.finish()?;
            cyclotomic(d, &CyclotomicCache::new())?
        }
        ShowObject::Qint => {
            let n = p.i64("n")?;
            p.finish()?;
            q_int(n)?
        }
        ShowObject::Sum => {
            let n = p.u64("n")?;
            let a = p.opt_u32("a")?;
            p.finish()?;
            match a {
                None => central_qbinom_sum(n, None)?,
                Some(a) => {
                    let m = Modulus::three_power(a, 2, &CyclotomicCache::new())?;
                    central_qbinom_sum(n, Some(m.poly()))?
                }
            }
        }
    };
    Ok(poly)
}
