use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "qcong", version, about = "Exact q-series congruence checker")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one check, e.g. `verify eq13 a=1 m=1`.
    Verify {
        /// Statement id (eq13, eq14, eq21, id33, lemma31, lemma32, ssz12,
        /// ssz_quotient, sun_tauraso, remark14, qlucas, psi_check).
        statement: String,
        /// Parameters as key=value.
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        output: Format,
    },
    /// Run the graded suite with its negative controls.
    Suite {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
        #[arg(long)]
        a_max: Option<u32>,
        #[arg(long)]
        m_max: Option<u64>,
        #[arg(long)]
        n_max: Option<u64>,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long, env = "QCONG_JOBS")]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        output: Format,
    },
    /// Print a polynomial in canonical form: qbinom n k, cyclotomic d, qint n,
    /// sum n [a].
    Show {
        object: ShowObject,
        params: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Quick,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShowObject {
    Qbinom,
    Cyclotomic,
    Qint,
    Sum,
}
