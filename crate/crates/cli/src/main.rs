//! Command line driver.
//!
//! Exit codes: 0 success (for `webb`, a certified nonzero), 2 inconclusive
//! parity, 3 missing dimension data, 4 cap or resource ceiling hit, 5 usage
//! or parse errors. Everything written to stdout is deterministic; progress
//! and diagnostics go to stderr.

mod groupspec;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use webbcert::cohom::{
    cohomology_dim, cohomology_dim_oracle, BuildOptions, CohomError, DEFAULT_MAX_MATRIX_BITS,
};
use webbcert::grpcore::{close_generators, GroupError};
use webbcert::parabolic::{compositions, parabolic_generators, Composition, ParabolicSpec};
use webbcert::webb::{
    factored_order, ledger_append, parity_sum, render_report, render_report_tsv, AppendOutcome,
    DimResolver, DimSource, Ledger, LedgerEntry, MapResolver, ResolvedDim, Verdict, WebbError,
};

const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_MISSING: u8 = 3;
const EXIT_RESOURCE: u8 = 4;
const EXIT_USAGE: u8 = 5;

/// Default ceiling on enumerated group order.
const DEFAULT_CAP: usize = 1 << 20;

#[derive(Parser)]
#[command(
    name = "webbcert",
    version,
    about = "Mod-2 cohomology of small finite groups and parity certificates for GL_r(F_2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the compositions of r, one per line
    Compositions {
        r: u32,
        /// Only palindromic compositions
        #[arg(long)]
        symmetric: bool,
        /// Drop the single-part composition
        #[arg(long)]
        proper: bool,
    },
    /// Orders and labels of the parabolic subgroups of GL_r(F_2)
    ParabolicInfo {
        r: u32,
        /// Restrict to one composition, e.g. --parts 1,2,1
        #[arg(long)]
        parts: Option<String>,
        /// Tab-separated output with a header
        #[arg(long)]
        tsv: bool,
    },
    /// Compute dim H^degree(G; F_2) for one group
    Cohomology {
        /// Group spec, e.g. parabolic:2:4:1,2,1 | cyclic:8 | dihedral:8 |
        /// quaternion:8 | elemabelian:16 | klein4
        group: String,
        #[arg(long)]
        degree: usize,
        /// Use the bar-complex oracle (order <= 16, degree <= 4)
        #[arg(long)]
        oracle: bool,
        /// Use the generic resolution even for 2-groups
        #[arg(long, conflicts_with = "oracle")]
        force_generic: bool,
        /// Ceiling on enumerated group order
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Ceiling on the bit count of one expanded differential
        #[arg(long, default_value_t = DEFAULT_MAX_MATRIX_BITS)]
        max_bits: u64,
        /// Record the result in this ledger file
        #[arg(long)]
        ledger: Option<PathBuf>,
        /// Tab-separated output with a header
        #[arg(long)]
        tsv: bool,
    },
    /// Parity certificate for H^degree(GL_r(F_2); F_2): sums the recorded
    /// or computed dimensions over the palindromic proper parabolic
    /// subgroups; an odd total certifies nonvanishing
    Webb {
        r: u32,
        #[arg(long)]
        degree: usize,
        /// Ledger of recorded dimensions to draw from
        #[arg(long)]
        ledger: Option<PathBuf>,
        /// Compute dimensions the ledger does not supply
        #[arg(long)]
        compute_missing: bool,
        /// Ceiling on enumerated group order
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Ceiling on the bit count of one expanded differential
        #[arg(long, default_value_t = DEFAULT_MAX_MATRIX_BITS)]
        max_bits: u64,
        /// Tab-separated output with a header
        #[arg(long)]
        tsv: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn cohom_failure(e: CohomError) -> Failure {
    let code = match &e {
        CohomError::ResourceExceeded { .. } | CohomError::TooLargeForOracle { .. } => {
            EXIT_RESOURCE
        }
        CohomError::Group(GroupError::CapExceeded { .. }) => EXIT_RESOURCE,
        _ => 1,
    };
    fail(code, e.to_string())
}

fn webb_failure(e: WebbError) -> Failure {
    let code = match &e {
        WebbError::Parse { .. } => EXIT_USAGE,
        WebbError::MissingDimensions { .. } => EXIT_MISSING,
        WebbError::Io { source, .. } if source.kind() == std::io::ErrorKind::NotFound => {
            EXIT_MISSING
        }
        _ => 1,
    };
    fail(code, e.to_string())
}

fn check_rank(r: u32) -> Result<(), Failure> {
    if !(1..=16).contains(&r) {
        return Err(fail(EXIT_USAGE, format!("rank must be between 1 and 16, got {r}")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Compositions { r, symmetric, proper } => cmd_compositions(r, symmetric, proper),
        Command::ParabolicInfo { r, parts, tsv } => cmd_parabolic_info(r, parts.as_deref(), tsv),
        Command::Cohomology { group, degree, oracle, force_generic, cap, max_bits, ledger, tsv } => {
            cmd_cohomology(&group, degree, oracle, force_generic, cap, max_bits, ledger, tsv)
        }
        Command::Webb { r, degree, ledger, compute_missing, cap, max_bits, tsv } => {
            cmd_webb(r, degree, ledger, compute_missing, cap, max_bits, tsv)
        }
    }
}

fn cmd_compositions(r: u32, symmetric: bool, proper: bool) -> Result<u8, Failure> {
    check_rank(r)?;
    let mut comps = compositions(r);
    if symmetric {
        comps.retain(Composition::is_symmetric);
    }
    if proper {
        comps.retain(Composition::is_proper);
    }
    let mut out = String::new();
    for c in &comps {
        out.push_str(&c.plus_joined());
        out.push('\n');
    }
    print!("{out}");
    Ok(0)
}

fn cmd_parabolic_info(r: u32, parts: Option<&str>, tsv: bool) -> Result<u8, Failure> {
    check_rank(r)?;
    let comps = match parts {
        Some(s) => {
            let parts = groupspec::parse_parts(s).map_err(|m| fail(EXIT_USAGE, m))?;
            let total: u32 = parts.iter().sum();
            if total != r {
                return Err(fail(
                    EXIT_USAGE,
                    format!("parts sum to {total}, not to the stated rank {r}"),
                ));
            }
            vec![Composition::new(parts)]
        }
        None => compositions(r),
    };
    let mut out = String::new();
    if tsv {
        out.push_str("label\torder\tgenerators\tsymmetric\tproper\n");
    }
    for c in &comps {
        let spec = ParabolicSpec::new(c.clone(), 2);
        let generators = if r <= 8 {
            parabolic_generators(c).len().to_string()
        } else {
            "-".to_string()
        };
        if tsv {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                spec.label(),
                spec.order(),
                generators,
                c.is_symmetric(),
                c.is_proper()
            ));
        } else {
            let yn = |b: bool| if b { "yes" } else { "no" };
            out.push_str(&format!(
                "{}  order={}  generators={}  symmetric={}  proper={}\n",
                spec.label(),
                factored_order(&spec.order()),
                generators,
                yn(c.is_symmetric()),
                yn(c.is_proper())
            ));
        }
    }
    print!("{out}");
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_cohomology(
    group: &str,
    degree: usize,
    oracle: bool,
    force_generic: bool,
    cap: usize,
    max_bits: u64,
    ledger: Option<PathBuf>,
    tsv: bool,
) -> Result<u8, Failure> {
    let spec = groupspec::parse(group)
        .map_err(|m| fail(EXIT_USAGE, format!("bad group spec {group:?}: {m}")))?;
    let gens = spec.generator_set().map_err(|m| fail(EXIT_USAGE, m))?;
    let table = Arc::new(
        close_generators(&gens, cap).map_err(|e| fail(EXIT_RESOURCE, e.to_string()))?,
    );
    let label = spec.label();
    let result = if oracle {
        cohomology_dim_oracle(&table, label.clone(), degree).map_err(cohom_failure)?
    } else {
        let opts = BuildOptions { max_matrix_bits: max_bits, force_generic, shuffle_seed: None };
        cohomology_dim(&table, label.clone(), degree, &opts).map_err(cohom_failure)?
    };
    if tsv {
        print!(
            "label\tdegree\tdim\tmethod\n{}\t{}\t{}\t{}\n",
            result.label, result.degree, result.dim, result.method
        );
    } else {
        println!(
            "{}  degree={}  dim={}  method={}",
            result.label, result.degree, result.dim, result.method
        );
    }
    if let Some(path) = ledger {
        let entry = LedgerEntry {
            label: label.as_str().to_string(),
            degree,
            dim: result.dim,
            source: if oracle { DimSource::Oracle } else { DimSource::Computed },
            note: result.method.to_string(),
        };
        match ledger_append(&path, &entry).map_err(webb_failure)? {
            AppendOutcome::Appended => eprintln!("recorded in {}", path.display()),
            AppendOutcome::AlreadyPresent => eprintln!("already recorded in {}", path.display()),
        }
    }
    Ok(0)
}

fn cmd_webb(
    r: u32,
    degree: usize,
    ledger_path: Option<PathBuf>,
    compute_missing: bool,
    cap: usize,
    max_bits: u64,
    tsv: bool,
) -> Result<u8, Failure> {
    check_rank(r)?;
    let ledger = match &ledger_path {
        Some(path) => Some(Ledger::load(path).map_err(webb_failure)?),
        None => None,
    };
    let mut computed = MapResolver::new();
    if compute_missing {
        let missing: Vec<ParabolicSpec> = webbcert::parabolic::symmetric_compositions(r, true)
            .into_iter()
            .map(|c| ParabolicSpec::new(c, 2))
            .filter(|spec| {
                ledger
                    .as_ref()
                    .and_then(|l| l.lookup(spec.label().as_str(), degree))
                    .is_none()
            })
            .collect();
        let opts = BuildOptions { max_matrix_bits: max_bits, ..BuildOptions::default() };
        let results: Vec<(String, usize)> = missing
            .par_iter()
            .map(|spec| -> Result<(String, usize), Failure> {
                let label = spec.label();
                if spec.rank() > 8 {
                    return Err(fail(
                        EXIT_RESOURCE,
                        format!(
                            "{label}: matrix generators are limited to rank <= 8; record its dimension in a ledger instead"
                        ),
                    ));
                }
                eprintln!("computing {} (order {})", label, factored_order(&spec.order()));
                let gens = parabolic_generators(spec.composition());
                let table = Arc::new(close_generators(&gens, cap).map_err(|e| {
                    fail(
                        EXIT_RESOURCE,
                        format!("{label}: {e}; record its dimension in a ledger instead"),
                    )
                })?);
                let result = cohomology_dim(&table, label.clone(), degree, &opts)
                    .map_err(|e| {
                        let inner = cohom_failure(e);
                        fail(inner.code, format!("{label}: {}", inner.message))
                    })?;
                Ok((label.as_str().to_string(), result.dim))
            })
            .collect::<Result<_, _>>()?;
        for (label, dim) in results {
            computed.insert(&label, degree, ResolvedDim { dim, source: DimSource::Computed });
        }
    }

    struct Merged<'a> {
        ledger: Option<&'a Ledger>,
        computed: &'a MapResolver,
    }
    impl DimResolver for Merged<'_> {
        fn resolve(&self, label: &str, degree: usize) -> Option<ResolvedDim> {
            self.ledger
                .and_then(|l| l.resolve(label, degree))
                .or_else(|| self.computed.resolve(label, degree))
        }
    }

    let merged = Merged { ledger: ledger.as_ref(), computed: &computed };
    let report = parity_sum(r, 2, degree, &merged).map_err(|e| match &e {
        WebbError::MissingDimensions { .. } => fail(
            EXIT_MISSING,
            format!("{e}; rerun with --compute-missing or supply a ledger"),
        ),
        _ => webb_failure(e),
    })?;
    print!("{}", if tsv { render_report_tsv(&report) } else { render_report(&report) });
    Ok(match report.verdict() {
        Verdict::NonzeroCertified => 0,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}
