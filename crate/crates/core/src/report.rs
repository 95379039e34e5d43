//! Machine-readable reports: property verdicts with re-verifiable
//! witnesses, plus the versioned document the CLI emits.
//!
//! A witness never just restates a verdict: it carries the concrete
//! elements needed to re-check the claim against the raw tables without
//! re-running the procedure that found it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "semiring-lab/report/v1";

/// Stable names for the analyzable properties. The serialized forms are
/// part of the report schema and of the search filter language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PropertyKey {
    Commutative,
    CentrallyEssential,
    Reduced,
    AddCancellative,
    AddIdempotent,
    MultIdempotent,
    Semisubtractive,
    Semiprime,
    ZeroSums,
    ZeroDivisorFree,
    NonzeroNilpotents,
    MultCancellativeLeft,
    MultCancellativeRight,
    DivisionSemiring,
}

impl PropertyKey {
    pub const ALL: [PropertyKey; 14] = [
        PropertyKey::Commutative,
        PropertyKey::CentrallyEssential,
        PropertyKey::Reduced,
        PropertyKey::AddCancellative,
        PropertyKey::AddIdempotent,
        PropertyKey::MultIdempotent,
        PropertyKey::Semisubtractive,
        PropertyKey::Semiprime,
        PropertyKey::ZeroSums,
        PropertyKey::ZeroDivisorFree,
        PropertyKey::NonzeroNilpotents,
        PropertyKey::MultCancellativeLeft,
        PropertyKey::MultCancellativeRight,
        PropertyKey::DivisionSemiring,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PropertyKey::Commutative => "commutative",
            PropertyKey::CentrallyEssential => "centrally_essential",
            PropertyKey::Reduced => "reduced",
            PropertyKey::AddCancellative => "add_cancellative",
            PropertyKey::AddIdempotent => "add_idempotent",
            PropertyKey::MultIdempotent => "mult_idempotent",
            PropertyKey::Semisubtractive => "semisubtractive",
            PropertyKey::Semiprime => "semiprime",
            PropertyKey::ZeroSums => "zero_sums",
            PropertyKey::ZeroDivisorFree => "zero_divisor_free",
            PropertyKey::NonzeroNilpotents => "nonzero_nilpotents",
            PropertyKey::MultCancellativeLeft => "mult_cancellative_left",
            PropertyKey::MultCancellativeRight => "mult_cancellative_right",
            PropertyKey::DivisionSemiring => "division_semiring",
        }
    }
}

impl fmt::Display for PropertyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        PropertyKey::ALL
            .iter()
            .copied()
            .find(|k| k.name() == t)
            .ok_or_else(|| format!("unknown property name {t:?}"))
    }
}

/// One entry of a centrality certificate: for element `x`, the central
/// `y` with `x*y = z` central and nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CeCertEntry {
    pub x: String,
    pub y: String,
    pub z: String,
}

/// A concrete, independently checkable piece of evidence for a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A tuple of element labels (counterexample pair/triple etc.).
    Elements { labels: Vec<String> },
    /// Full centrality certificate: one entry per nonzero element.
    CeCertificate { entries: Vec<CeCertEntry> },
    /// Element for which no nonzero central multiplier yields a nonzero
    /// central product.
    CeFailure { x: String },
    /// Left/right zero-divisor sets.
    ZeroDivisorSets { left: Vec<String>, right: Vec<String> },
    /// Generator of a nilpotent two-sided ideal, and the power at which
    /// the ideal vanishes.
    NilpotentIdeal { generator: String, power: usize },
    /// Nilpotent element with its vanishing exponent.
    NilpotentElement { x: String, power: usize },
    /// Idempotent structure: all idempotents, complemented ones with the
    /// complement, central ones.
    Idempotents {
        idempotents: Vec<String>,
        complemented: Vec<(String, String)>,
        central: Vec<String>,
    },
    /// Element set (e.g. a computed center).
    ElementSet { labels: Vec<String> },
    /// Outcome of a seeded randomized probe.
    Probe { seed: u64, trials: u64, found: Option<String> },
    /// Class-sum identities produced by the nilpotence-class-2 check.
    Identities { lines: Vec<String> },
    /// Basis vectors of a subspace, rendered per coordinate.
    Basis { vectors: Vec<Vec<String>>, coordinates: Vec<String> },
    /// Free-form note for findings that have no element content.
    Note { text: String },
}

/// Verdict for one property, with supporting evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: PropertyKey,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl PropertyReport {
    pub fn new(property: PropertyKey, verdict: bool, witness: Option<Witness>) -> Self {
        PropertyReport { property, verdict, witness }
    }
}

/// What a report is about, in enough detail for `verify` to rebuild it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Subject {
    File { path: String },
    Example { id: String },
    Group {
        name: String,
        action: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        coeff: Option<String>,
    },
    Search { order: usize },
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::File { path } => write!(f, "file {path}"),
            Subject::Example { id } => write!(f, "example {id}"),
            Subject::Group { name, action, coeff: Some(c) } => {
                write!(f, "group {name} over {c} ({action})")
            }
            Subject::Group { name, action, coeff: None } => write!(f, "group {name} ({action})"),
            Subject::Search { order } => write!(f, "search order {order}"),
        }
    }
}

/// One line of a report: a named check with verdict and witness. The
/// `expected` field is set when the check was diffed against a manifest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub name: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl ReportEntry {
    pub fn from_property(r: &PropertyReport) -> Self {
        ReportEntry {
            name: r.property.name().to_string(),
            verdict: r.verdict,
            expected: None,
            witness: r.witness.clone(),
        }
    }

    pub fn matches_expectation(&self) -> bool {
        self.expected.map(|e| e == self.verdict).unwrap_or(true)
    }
}

/// The versioned document every CLI command emits. Serialization is
/// stable: two runs with the same inputs and seed produce identical bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub tool_version: String,
    pub subject: Subject,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trials: Option<u64>,
    pub entries: Vec<ReportEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subject: Subject) -> Self {
        Report {
            schema: REPORT_SCHEMA.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            subject,
            seed: None,
            trials: None,
            entries: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn all_expectations_met(&self) -> bool {
        self.entries.iter().all(|e| e.matches_expectation())
    }

    /// Human-readable rendering; a view over the same data as the JSON.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("subject: {}\n", self.subject));
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed: {seed}\n"));
        }
        if let Some(trials) = self.trials {
            out.push_str(&format!("trials: {trials}\n"));
        }
        for e in &self.entries {
            let mark = match e.expected {
                Some(exp) if exp != e.verdict => " MISMATCH",
                Some(_) => " (matches manifest)",
                None => "",
            };
            out.push_str(&format!("{}: {}{}\n", e.name, e.verdict, mark));
            if let Some(w) = &e.witness {
                out.push_str(&format!("  witness: {}\n", render_witness(w)));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

pub fn render_witness(w: &Witness) -> String {
    match w {
        Witness::Elements { labels } => format!("({})", labels.join(", ")),
        Witness::CeCertificate { entries } => {
            format!("certificate covering {} elements", entries.len())
        }
        Witness::CeFailure { x } => format!("fails at x = {x}"),
        Witness::ZeroDivisorSets { left, right } => {
            format!("left = {{{}}}, right = {{{}}}", left.join(", "), right.join(", "))
        }
        Witness::NilpotentIdeal { generator, power } => {
            format!("ideal({generator})^{power} = 0")
        }
        Witness::NilpotentElement { x, power } => format!("{x}^{power} = 0"),
        Witness::Idempotents { idempotents, complemented, central } => format!(
            "{} idempotents, {} complemented, {} central",
            idempotents.len(),
            complemented.len(),
            central.len()
        ),
        Witness::ElementSet { labels } => format!("{{{}}}", labels.join(", ")),
        Witness::Probe { seed, trials, found } => match found {
            Some(f) => format!("probe(seed={seed}, trials={trials}) found {f}"),
            None => format!("probe(seed={seed}, trials={trials}) found nothing"),
        },
        Witness::Identities { lines } => lines.join("; "),
        Witness::Basis { vectors, .. } => format!("basis of dimension {}", vectors.len()),
        Witness::Note { text } => text.clone(),
    }
}
