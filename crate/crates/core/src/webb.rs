//! Parity certificates for nonvanishing mod-2 cohomology of GL_r(F_2).
//!
//! dim H^d(GL_r(F_2)) is congruent mod 2 to the sum of dim H^d(P) over the
//! standard proper parabolic subgroups P whose block sizes read the same
//! forwards and backwards. When that sum is odd, H^d(GL_r(F_2)) cannot
//! vanish; that is the certificate this module produces. When the sum is
//! even the test is silent, and nothing here ever claims a zero.
//!
//! Dimensions for the individual parabolic subgroups come from a
//! [`DimResolver`]: either a [`Ledger`] file of recorded values or a map
//! filled by live computation (see [`crate::cohom`]). Ledger lines are
//! `label,degree,dim,source,note`; labels of parabolic subgroups contain a
//! comma of their own, so parsing peels the label off by its closing
//! parenthesis first.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;

use crate::parabolic::{symmetric_compositions, Composition, ParabolicSpec};

#[derive(Debug, Error)]
pub enum WebbError {
    #[error("{origin}:{line}: {message}")]
    Parse { origin: String, line: usize, message: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    /// Appending an entry whose dimension disagrees with what the ledger
    /// already records. Matching re-appends are accepted silently.
    #[error("ledger already records {label} at degree {degree} with dim {existing}, refusing dim {incoming}")]
    Conflict { label: String, degree: usize, existing: usize, incoming: usize },
    /// The resolver had no dimension for these subgroup labels.
    #[error("no dimension on record for: {}", labels.join(", "))]
    MissingDimensions { labels: Vec<String> },
}

/// Where a recorded dimension came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DimSource {
    /// Published value taken on trust.
    Paper,
    /// Computed by the resolution engine.
    Computed,
    /// Computed by the bar-complex oracle.
    Oracle,
}

impl fmt::Display for DimSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DimSource::Paper => "paper",
            DimSource::Computed => "computed",
            DimSource::Oracle => "oracle",
        })
    }
}

impl FromStr for DimSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "paper" => Ok(DimSource::Paper),
            "computed" => Ok(DimSource::Computed),
            "oracle" => Ok(DimSource::Oracle),
            other => Err(format!("unknown source {other:?}, expected paper, computed or oracle")),
        }
    }
}

/// One ledger line: a recorded cohomology dimension for one group and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub label: String,
    pub degree: usize,
    pub dim: usize,
    pub source: DimSource,
    pub note: String,
}

/// Splits a ledger line into label and remainder. Labels like
/// `GL(q=2,r=6):P(1+4+1)` contain a comma, so the label of a `GL(` line
/// runs through the parenthesis that closes its `P(` suffix.
fn split_label(line: &str) -> Option<(&str, &str)> {
    if line.starts_with("GL(") {
        if let Some(pos) = line.find("):P(") {
            let close = pos + 4 + line[pos + 4..].find(')')?;
            let rest = line[close + 1..].strip_prefix(',')?;
            return Some((&line[..=close], rest));
        }
    }
    let comma = line.find(',')?;
    Some((&line[..comma], &line[comma + 1..]))
}

fn parse_line(line: &str) -> Result<LedgerEntry, String> {
    let (label, rest) =
        split_label(line).ok_or_else(|| "expected label,degree,dim,source[,note]".to_string())?;
    let mut fields = rest.splitn(4, ',');
    let degree = fields
        .next()
        .map(str::trim)
        .ok_or_else(|| "missing degree".to_string())?
        .parse::<usize>()
        .map_err(|e| format!("bad degree: {e}"))?;
    let dim = fields
        .next()
        .map(str::trim)
        .ok_or_else(|| "missing dim".to_string())?
        .parse::<usize>()
        .map_err(|e| format!("bad dim: {e}"))?;
    let source = fields
        .next()
        .map(str::trim)
        .ok_or_else(|| "missing source".to_string())?
        .parse::<DimSource>()?;
    let note = fields.next().map(str::trim).unwrap_or("").to_string();
    Ok(LedgerEntry { label: label.trim().to_string(), degree, dim, source, note })
}

fn render_line(entry: &LedgerEntry) -> String {
    if entry.note.is_empty() {
        format!("{},{},{},{}", entry.label, entry.degree, entry.dim, entry.source)
    } else {
        format!("{},{},{},{},{}", entry.label, entry.degree, entry.dim, entry.source, entry.note)
    }
}

/// A set of recorded dimensions, keyed by label and degree.
///
/// The file format is one entry per line, `#` comments and blank lines
/// allowed. A label plus degree may appear at most once.
#[derive(Default, Debug, Clone)]
pub struct Ledger {
    entries: Vec<LedgerEntry>,
    index: HashMap<(String, usize), usize>,
}

impl Ledger {
    pub fn parse_str(text: &str, origin: &str) -> Result<Ledger, WebbError> {
        let mut ledger = Ledger::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let entry = parse_line(line).map_err(|message| WebbError::Parse {
                origin: origin.to_string(),
                line: i + 1,
                message,
            })?;
            let key = (entry.label.clone(), entry.degree);
            if ledger.index.contains_key(&key) {
                return Err(WebbError::Parse {
                    origin: origin.to_string(),
                    line: i + 1,
                    message: format!(
                        "duplicate entry for {} at degree {}",
                        entry.label, entry.degree
                    ),
                });
            }
            ledger.index.insert(key, ledger.entries.len());
            ledger.entries.push(entry);
        }
        Ok(ledger)
    }

    pub fn load(path: &Path) -> Result<Ledger, WebbError> {
        let text = fs::read_to_string(path)
            .map_err(|source| WebbError::Io { path: path.display().to_string(), source })?;
        Ledger::parse_str(&text, &path.display().to_string())
    }

    #[must_use]
    pub fn lookup(&self, label: &str, degree: usize) -> Option<&LedgerEntry> {
        self.index.get(&(label.to_string(), degree)).map(|&i| &self.entries[i])
    }

    #[must_use]
    pub fn entries(&self) -> &[LedgerEntry] {
        &self.entries
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AppendOutcome {
    Appended,
    /// The ledger already records the same dimension; nothing was written.
    AlreadyPresent,
}

/// Appends one entry to a ledger file, creating the file if needed.
///
/// Appending a value the ledger already holds is a no-op; appending a
/// disagreeing value fails with [`WebbError::Conflict`] and leaves the file
/// untouched.
pub fn ledger_append(path: &Path, entry: &LedgerEntry) -> Result<AppendOutcome, WebbError> {
    let line = render_line(entry);
    let reparsed = parse_line(&line)
        .map_err(|message| WebbError::Parse { origin: line.clone(), line: 1, message })?;
    if &reparsed != entry {
        return Err(WebbError::Parse {
            origin: line,
            line: 1,
            message: "entry does not survive a round trip through the line format".to_string(),
        });
    }
    let io_err = |source| WebbError::Io { path: path.display().to_string(), source };
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => String::new(),
        Err(e) => return Err(io_err(e)),
    };
    let ledger = Ledger::parse_str(&text, &path.display().to_string())?;
    if let Some(existing) = ledger.lookup(&entry.label, entry.degree) {
        if existing.dim == entry.dim {
            return Ok(AppendOutcome::AlreadyPresent);
        }
        return Err(WebbError::Conflict {
            label: entry.label.clone(),
            degree: entry.degree,
            existing: existing.dim,
            incoming: entry.dim,
        });
    }
    let mut out = text;
    if !out.is_empty() && !out.ends_with('\n') {
        out.push('\n');
    }
    out.push_str(&line);
    out.push('\n');
    fs::write(path, out).map_err(io_err)?;
    Ok(AppendOutcome::Appended)
}

/// A recorded or computed dimension together with its provenance.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ResolvedDim {
    pub dim: usize,
    pub source: DimSource,
}

/// Supplies dim H^degree for subgroups named by their label.
pub trait DimResolver {
    fn resolve(&self, label: &str, degree: usize) -> Option<ResolvedDim>;
}

impl DimResolver for Ledger {
    fn resolve(&self, label: &str, degree: usize) -> Option<ResolvedDim> {
        self.lookup(label, degree).map(|e| ResolvedDim { dim: e.dim, source: e.source })
    }
}

/// An in-memory resolver, typically filled by live computation.
#[derive(Default, Debug, Clone)]
pub struct MapResolver {
    map: HashMap<(String, usize), ResolvedDim>,
}

impl MapResolver {
    #[must_use]
    pub fn new() -> Self {
        MapResolver::default()
    }

    pub fn insert(&mut self, label: &str, degree: usize, value: ResolvedDim) {
        self.map.insert((label.to_string(), degree), value);
    }
}

impl DimResolver for MapResolver {
    fn resolve(&self, label: &str, degree: usize) -> Option<ResolvedDim> {
        self.map.get(&(label.to_string(), degree)).copied()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// What a parity run establishes. An even total establishes nothing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    NonzeroCertified,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NonzeroCertified => "nonzero-certified",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// One summand of the parity total.
#[derive(Clone, Debug)]
pub struct ReportRow {
    pub composition: Composition,
    pub order: BigUint,
    pub dim: usize,
    pub source: DimSource,
}

/// The full outcome of a parity run for one rank and degree.
#[derive(Clone, Debug)]
pub struct ParityReport {
    pub q: u64,
    pub rank: u32,
    pub degree: usize,
    pub rows: Vec<ReportRow>,
    pub total: usize,
}

impl ParityReport {
    #[must_use]
    pub fn parity(&self) -> Parity {
        if self.total % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    #[must_use]
    pub fn verdict(&self) -> Verdict {
        match self.parity() {
            Parity::Odd => Verdict::NonzeroCertified,
            Parity::Even => Verdict::Inconclusive,
        }
    }
}

/// Sums dim H^degree over the parabolic subgroups of GL_rank attached to
/// palindromic compositions other than the full rank itself.
///
/// Fails with [`WebbError::MissingDimensions`] listing every label the
/// resolver could not supply. Rank 1 has no proper parabolic subgroups, so
/// its total is 0 and the verdict is inconclusive.
pub fn parity_sum(
    rank: u32,
    q: u64,
    degree: usize,
    resolver: &dyn DimResolver,
) -> Result<ParityReport, WebbError> {
    assert!(rank >= 1, "rank must be positive");
    let mut rows = Vec::new();
    let mut missing = Vec::new();
    for composition in symmetric_compositions(rank, true) {
        let spec = ParabolicSpec::new(composition.clone(), q);
        match resolver.resolve(spec.label().as_str(), degree) {
            Some(found) => rows.push(ReportRow {
                composition,
                order: spec.order(),
                dim: found.dim,
                source: found.source,
            }),
            None => missing.push(spec.label().as_str().to_string()),
        }
    }
    if !missing.is_empty() {
        return Err(WebbError::MissingDimensions { labels: missing });
    }
    let total = rows.iter().map(|r| r.dim).sum();
    Ok(ParityReport { q, rank, degree, rows, total })
}

fn to_u64(n: &BigUint) -> Option<u64> {
    let digits = n.to_u64_digits();
    match digits.len() {
        0 => Some(0),
        1 => Some(digits[0]),
        _ => None,
    }
}

/// Renders an order as `value=factorization`, e.g. `192=2^6*3`. Values too
/// large for trial division in u64, and values whose factorization would
/// just repeat them, stay plain.
#[must_use]
pub fn factored_order(n: &BigUint) -> String {
    let plain = n.to_string();
    let Some(mut v) = to_u64(n) else { return plain };
    if v <= 1 {
        return plain;
    }
    let mut parts: Vec<String> = Vec::new();
    let push = |p: u64, e: u32, parts: &mut Vec<String>| {
        if e == 1 {
            parts.push(p.to_string());
        } else {
            parts.push(format!("{p}^{e}"));
        }
    };
    let mut e2 = 0u32;
    while v % 2 == 0 {
        v /= 2;
        e2 += 1;
    }
    if e2 > 0 {
        push(2, e2, &mut parts);
    }
    let mut p = 3u64;
    while v > 1 && p <= v / p {
        let mut e = 0u32;
        while v % p == 0 {
            v /= p;
            e += 1;
        }
        if e > 0 {
            push(p, e, &mut parts);
        }
        p += 2;
    }
    if v > 1 {
        push(v, 1, &mut parts);
    }
    let factorization = parts.join("*");
    if factorization == plain {
        plain
    } else {
        format!("{plain}={factorization}")
    }
}

/// Human-readable report: one line per summand, then the verdict line.
#[must_use]
pub fn render_report(report: &ParityReport) -> String {
    let mut out = String::new();
    for row in &report.rows {
        out.push_str(&format!(
            "P({})  order={}  dim={}  source={}\n",
            row.composition.plus_joined(),
            factored_order(&row.order),
            row.dim,
            row.source
        ));
    }
    out.push_str(&format!(
        "total={} parity={} verdict={}\n",
        report.total,
        report.parity(),
        report.verdict()
    ));
    out
}

/// Tab-separated report: a header, one row per summand with the order in
/// plain decimal, and a TOTAL row.
#[must_use]
pub fn render_report_tsv(report: &ParityReport) -> String {
    let mut out = String::from("composition\torder\tdim\tsource\n");
    for row in &report.rows {
        out.push_str(&format!(
            "P({})\t{}\t{}\t{}\n",
            row.composition.plus_joined(),
            row.order,
            row.dim,
            row.source
        ));
    }
    out.push_str(&format!(
        "TOTAL\t{}\t{}\t{}\n",
        report.total,
        report.parity(),
        report.verdict()
    ));
    out
}
