use std::fmt::Write;

use qcong_core::{IntPoly, VerificationReport};

/// Witness polynomials longer than this are elided in text output.
pub const TEXT_WITNESS_TERMS: usize = 200;

pub fn witness_text(w: &str) -> String {
    match w.parse::<IntPoly>() {
        Ok(p) if p.term_count() > TEXT_WITNESS_TERMS => p.to_canonical_elided(TEXT_WITNESS_TERMS),
        _ => w.to_string(),
    }
}

/// `PASS eq13 a=1 m=1 witness=0:1,1:-1,2:1 (0 ms)`
pub fn report_line(r: &VerificationReport) -> String {
    let mut line = String::new();
    line.push_str(if r.pass { "PASS " } else { "FAIL " });
    line.push_str(r.statement.id());
    for (k, v) in &r.params {
        let _ = write!(line, " {k}={v}");
    }
    if let Some(w) = &r.witness {
        let _ = write!(line, " witness={}", witness_text(w));
    }
    let _ = write!(line, " ({} ms)", r.elapsed_ms);
    line
}
