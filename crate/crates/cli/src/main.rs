//! Command-line interface: validate structure files, run property
//! analyses (with manifest diffing for the named examples), group
//! analyses, the small-order census, and witness re-verification.
//!
//! Exit codes: 0 success/verified, 1 property mismatch or refuted,
//! 2 usage or parse error, 3 resource cap exceeded.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use semiring_lab::analysis::{self, AnalysisError};
use semiring_lab::arith::CoeffDomain;
use semiring_lab::group_semiring::{certify_centrally_essential, CeCertification};
use semiring_lab::groups::{
    builtin_group, conjugacy_classes, group_center, nilpotence_class, upper_central_series,
    FiniteGroup, Nilpotence,
};
use semiring_lab::registry;
use semiring_lab::report::{PropertyKey, PropertyReport, Report, ReportEntry, Subject, Witness};
use semiring_lab::search::{enumerate, SearchSpec};
use semiring_lab::tables::FiniteSemiring;
use semiring_lab::textfmt::{self, Construct};

const EXIT_OK: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "semiring-lab", version, about = "Construct, validate, and analyze semirings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupAction {
    Classes,
    Center,
    Series,
    Prop31,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure file (semiring, magma, or group)
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run property analyses on a semiring file or a named example
    Analyze {
        /// Semiring file in the text format
        file: Option<PathBuf>,
        /// Named example id (1.1, 2.5, 2.6, 3.2, fq8); diffs results
        /// against the example's manifest
        #[arg(long, conflicts_with = "file")]
        example: Option<String>,
        /// `all` or a comma-separated list of property names
        #[arg(long, default_value = "all")]
        properties: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Group analyses: conjugacy classes, center, upper central series,
    /// or the group-semiring centrality certificate
    Group {
        /// Builtin name (q8, c<n>, d<2n>) or a group file
        name: String,
        #[arg(long, value_enum)]
        action: GroupAction,
        /// Coefficient domain for prop31 (nat, qplus, q, f<p>, z<m>)
        #[arg(long, default_value = "qplus")]
        coeff: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate small semirings with property filters
    Search {
        #[arg(long)]
        order: usize,
        /// Comma-separated property names records must satisfy
        #[arg(long)]
        require: Option<String>,
        /// Comma-separated property names records must violate
        #[arg(long)]
        forbid: Option<String>,
        /// Cap on emitted records
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        time_budget_secs: Option<u64>,
        /// Resume a truncated run from this branch index
        #[arg(long, default_value_t = 0)]
        resume: usize,
        /// Order 5 is hours-scale and needs this explicit opt-in
        #[arg(long)]
        allow_order_5: bool,
        /// Emit all valid tables instead of canonical representatives
        #[arg(long)]
        all_tables: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Re-check every witness in a previously produced report
    Verify { report: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Validate { file, format } => cmd_validate(&file, format),
        Command::Analyze { file, example, properties, seed, trials, format } => {
            cmd_analyze(file.as_deref(), example.as_deref(), &properties, seed, trials, format)
        }
        Command::Group { name, action, coeff, format } => {
            cmd_group(&name, action, &coeff, format)
        }
        Command::Search {
            order,
            require,
            forbid,
            cap,
            time_budget_secs,
            resume,
            allow_order_5,
            all_tables,
            format,
        } => cmd_search(
            order,
            require.as_deref(),
            forbid.as_deref(),
            cap,
            time_budget_secs,
            resume,
            allow_order_5,
            all_tables,
            format,
        ),
        Command::Verify { report } => cmd_verify(&report),
    };
    ExitCode::from(code)
}

fn usage_error(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Structured => println!("{}", report.to_json()),
    }
}

fn load_construct(path: &Path) -> Result<Construct, u8> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_error(format!("cannot read {}: {e}", path.display())))?;
    textfmt::parse(&text).map_err(|e| usage_error(format!("{}: {e}", path.display())))
}

fn cmd_validate(path: &Path, format: Format) -> u8 {
    let construct = match load_construct(path) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let mut report = Report::new(Subject::File { path: path.display().to_string() });
    let valid = match &construct {
        Construct::Semiring(s) => {
            let v = semiring_lab::tables::validate_semiring(s);
            if v.is_valid() {
                report.entries.push(ReportEntry {
                    name: "semiring_axioms".into(),
                    verdict: true,
                    expected: None,
                    witness: None,
                });
                if v.trivial {
                    report.notes.push("order-1 semiring: valid but trivial (zero = one)".into());
                }
            } else {
                for violation in &v.violations {
                    report.entries.push(ReportEntry {
                        name: format!("axiom[{}]", serde_json::to_string(&violation.axiom)
                            .unwrap_or_default()
                            .trim_matches('"')),
                        verdict: false,
                        expected: Some(true),
                        witness: Some(Witness::Elements {
                            labels: s.labels_of(&violation.witness),
                        }),
                    });
                }
            }
            v.is_valid()
        }
        Construct::Magma(m) => {
            report.entries.push(ReportEntry {
                name: "well_formed".into(),
                verdict: true,
                expected: None,
                witness: None,
            });
            // Light's test when a generating set is declared, the naive
            // cubic scan otherwise
            let mut ok = true;
            let assoc = match &m.generators {
                Some(gens) => match semiring_lab::tables::lights_test(&m.table, Some(gens)) {
                    Ok(v) => Some(v.holds()),
                    Err(e) => {
                        ok = false;
                        report.entries.push(ReportEntry {
                            name: "generators_generate".into(),
                            verdict: false,
                            expected: Some(true),
                            witness: Some(Witness::Note { text: e.to_string() }),
                        });
                        None
                    }
                },
                None => Some(semiring_lab::tables::naive_associativity(&m.table).holds()),
            };
            if let Some(assoc) = assoc {
                report.entries.push(ReportEntry {
                    name: "associative".into(),
                    verdict: assoc,
                    expected: None,
                    witness: None,
                });
            }
            ok
        }
        Construct::Group(_) => {
            // group files are fully validated at parse time
            report.entries.push(ReportEntry {
                name: "group_axioms".into(),
                verdict: true,
                expected: None,
                witness: None,
            });
            true
        }
    };
    emit(&report, format);
    if valid {
        EXIT_OK
    } else {
        EXIT_REFUTED
    }
}

fn parse_keys(spec: &str) -> Result<Vec<PropertyKey>, u8> {
    if spec.trim() == "all" {
        return Ok(PropertyKey::ALL.to_vec());
    }
    spec.split(',')
        .map(|part| part.trim().parse::<PropertyKey>().map_err(usage_error))
        .collect()
}

fn cmd_analyze(
    file: Option<&Path>,
    example: Option<&str>,
    properties: &str,
    seed: u64,
    trials: u64,
    format: Format,
) -> u8 {
    match (file, example) {
        (Some(path), None) => {
            let keys = match parse_keys(properties) {
                Ok(k) => k,
                Err(code) => return code,
            };
            let construct = match load_construct(path) {
                Ok(c) => c,
                Err(code) => return code,
            };
            let Construct::Semiring(s) = construct else {
                return usage_error("analyze expects a semiring file; use `validate` for magmas and groups");
            };
            let mut report = Report::new(Subject::File { path: path.display().to_string() });
            for key in keys {
                match analysis::property_report(&s, key) {
                    Ok(r) => report.entries.push(ReportEntry::from_property(&r)),
                    Err(AnalysisError::OrderBound { op, order, max }) => {
                        report.notes.push(format!("skipped {key}: {op} capped at {max}, order is {order}"));
                    }
                    Err(e) => return usage_error(e),
                }
            }
            emit(&report, format);
            EXIT_OK
        }
        (None, Some(id)) => {
            let ex = match registry::named_example(id) {
                Ok(ex) => ex,
                Err(e) => return usage_error(e),
            };
            let entries = match ex.evaluate(seed, trials) {
                Ok(entries) => entries,
                Err(e) => return usage_error(e),
            };
            let mut report = Report::new(Subject::Example { id: id.to_string() });
            report.seed = Some(seed);
            report.trials = Some(trials);
            report.entries = entries;
            let ok = report.all_expectations_met();
            if !ok {
                report.notes.push("manifest mismatch".into());
            }
            emit(&report, format);
            if ok {
                EXIT_OK
            } else {
                EXIT_REFUTED
            }
        }
        _ => usage_error("provide exactly one of a semiring file or --example <id>"),
    }
}

fn load_group(name: &str) -> Result<FiniteGroup, u8> {
    match builtin_group(name) {
        Ok(g) => Ok(g),
        Err(e) => {
            let path = Path::new(name);
            if path.exists() {
                match load_construct(path)? {
                    Construct::Group(g) => Ok(g),
                    other => Err(usage_error(format!(
                        "{name} is a {} file, expected a group",
                        other.kind()
                    ))),
                }
            } else {
                Err(usage_error(e))
            }
        }
    }
}

fn group_report(
    group: &FiniteGroup,
    subject_name: &str,
    action: GroupAction,
    coeff: &str,
) -> Result<Report, u8> {
    let action_name = match action {
        GroupAction::Classes => "classes",
        GroupAction::Center => "center",
        GroupAction::Series => "series",
        GroupAction::Prop31 => "prop31",
    };
    let mut report = Report::new(Subject::Group {
        name: subject_name.to_string(),
        action: action_name.to_string(),
        coeff: (action == GroupAction::Prop31).then(|| coeff.to_string()),
    });
    match action {
        GroupAction::Classes => {
            for class in conjugacy_classes(group) {
                report.entries.push(ReportEntry {
                    name: format!("class[{}]", group.labels[class.representative]),
                    verdict: true,
                    expected: None,
                    witness: Some(Witness::ElementSet {
                        labels: class.members.iter().map(|&m| group.labels[m].clone()).collect(),
                    }),
                });
            }
        }
        GroupAction::Center => {
            let center = group_center(group);
            report.entries.push(ReportEntry {
                name: "center".into(),
                verdict: true,
                expected: None,
                witness: Some(Witness::ElementSet {
                    labels: center.iter().map(|&m| group.labels[m].clone()).collect(),
                }),
            });
        }
        GroupAction::Series => {
            for (i, level) in upper_central_series(group).iter().enumerate() {
                report.entries.push(ReportEntry {
                    name: format!("C{i}"),
                    verdict: true,
                    expected: None,
                    witness: Some(Witness::ElementSet {
                        labels: level.iter().map(|&m| group.labels[m].clone()).collect(),
                    }),
                });
            }
            let class = match nilpotence_class(group) {
                Nilpotence::Class(c) => c.to_string(),
                Nilpotence::NotNilpotent => "not nilpotent".to_string(),
            };
            report.entries.push(ReportEntry {
                name: "nilpotence_class".into(),
                verdict: true,
                expected: None,
                witness: Some(Witness::Note { text: class }),
            });
        }
        GroupAction::Prop31 => {
            let domain: CoeffDomain = coeff.parse().map_err(usage_error)?;
            let outcome = certify_centrally_essential(group, domain).map_err(usage_error)?;
            match outcome {
                CeCertification::AbelianTriviallyCe => {
                    report.entries.push(ReportEntry {
                        name: "centrally_essential".into(),
                        verdict: true,
                        expected: None,
                        witness: Some(Witness::Note {
                            text: "abelian, trivially centrally essential".into(),
                        }),
                    });
                }
                CeCertification::CertifiedClass2 { identities } => {
                    report.entries.push(ReportEntry {
                        name: "centrally_essential".into(),
                        verdict: true,
                        expected: None,
                        witness: Some(Witness::Identities {
                            lines: identities.iter().map(|i| i.rendered()).collect(),
                        }),
                    });
                    report.notes.push("centrally essential (nilpotence class 2 certificate)".into());
                }
                CeCertification::HypothesesNotMet { class } => {
                    let text = match class {
                        Some(c) => format!("hypotheses not met (class {c})"),
                        None => "hypotheses not met (not nilpotent)".into(),
                    };
                    report.entries.push(ReportEntry {
                        name: "certificate_applicable".into(),
                        verdict: false,
                        expected: None,
                        witness: Some(Witness::Note { text }),
                    });
                    report.notes.push(
                        "sufficient condition does not apply; no conclusion at this scale".into(),
                    );
                }
            }
        }
    }
    Ok(report)
}

fn cmd_group(name: &str, action: GroupAction, coeff: &str, format: Format) -> u8 {
    let group = match load_group(name) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let report = match group_report(&group, name, action, coeff) {
        Ok(r) => r,
        Err(code) => return code,
    };
    emit(&report, format);
    EXIT_OK
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    order: usize,
    require: Option<&str>,
    forbid: Option<&str>,
    cap: Option<usize>,
    time_budget_secs: Option<u64>,
    resume: usize,
    allow_order_5: bool,
    all_tables: bool,
    format: Format,
) -> u8 {
    let parse_list = |spec: Option<&str>| -> Result<Vec<PropertyKey>, u8> {
        match spec {
            None => Ok(Vec::new()),
            Some(s) => s
                .split(',')
                .map(|part| part.trim().parse::<PropertyKey>().map_err(usage_error))
                .collect(),
        }
    };
    let require = match parse_list(require) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let forbid = match parse_list(forbid) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let spec = SearchSpec {
        order,
        require: require.clone(),
        forbid,
        canonical_only: !all_tables,
        cap,
        time_budget: time_budget_secs.map(Duration::from_secs),
        allow_order_5,
        resume_branch: resume,
    };
    let census = match enumerate(&spec) {
        Ok(c) => c,
        Err(e) => return usage_error(e),
    };

    // summary counts per property vector, in first-occurrence order
    let mut vector_counts: Vec<(Vec<(PropertyKey, bool)>, usize)> = Vec::new();
    for r in &census.records {
        match vector_counts.iter_mut().find(|(v, _)| *v == r.properties) {
            Some((_, count)) => *count += 1,
            None => vector_counts.push((r.properties.clone(), 1)),
        }
    }

    match format {
        Format::Text => {
            for r in &census.records {
                let line = r.to_line();
                let props: Vec<String> = line
                    .properties
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                println!(
                    "#{} order={} add={:?} mul={:?} {}",
                    line.discovery_index,
                    line.order,
                    line.add,
                    line.mul,
                    props.join(",")
                );
            }
            println!("records: {}", census.records.len());
            for (vector, count) in &vector_counts {
                let props: Vec<String> =
                    vector.iter().filter(|(_, v)| *v).map(|(k, _)| k.to_string()).collect();
                println!("  {count} with {{{}}}", props.join(", "));
            }
            if census.truncated {
                println!(
                    "truncated: resume with --resume {}",
                    census.resume_branch.unwrap_or(census.branches_total)
                );
            }
            if census.records.is_empty() && !require.is_empty() && !census.truncated {
                println!(
                    "none found at order {order}: a desk-scale finding, no conclusion at this scale"
                );
            }
        }
        Format::Structured => {
            for r in &census.records {
                println!("{}", serde_json::to_string(&r.to_line()).expect("census line"));
            }
            let summary = serde_json::json!({
                "schema": "semiring-lab/census/v1",
                "order": order,
                "records": census.records.len(),
                "truncated": census.truncated,
                "resume_branch": census.resume_branch,
                "branches_total": census.branches_total,
                "vector_counts": vector_counts.iter().map(|(v, c)| {
                    serde_json::json!({
                        "properties": v.iter().map(|(k, val)| (k.name(), val)).collect::<BTreeMap<_, _>>(),
                        "count": c,
                    })
                }).collect::<Vec<_>>(),
                "note": if census.records.is_empty() && !require.is_empty() && !census.truncated {
                    Some("none found at this order: a desk-scale finding, no conclusion at this scale")
                } else {
                    None
                },
            });
            println!("{summary}");
        }
    }
    if census.truncated {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    }
}

fn verify_semiring_entries(s: &FiniteSemiring, entries: &[ReportEntry]) -> Vec<String> {
    let mut failures = Vec::new();
    for e in entries {
        match e.name.parse::<PropertyKey>() {
            Ok(key) => {
                let pr = PropertyReport::new(key, e.verdict, e.witness.clone());
                if let Err(err) = analysis::verify_property_report(s, &pr) {
                    failures.push(format!("{}: {err}", e.name));
                }
            }
            Err(_) => failures.push(format!("{}: not re-verifiable against a plain file", e.name)),
        }
    }
    failures
}

fn cmd_verify(path: &Path) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("cannot read {}: {e}", path.display())),
    };
    let report = match Report::from_json(&text) {
        Ok(r) => r,
        Err(e) => return usage_error(format!("{}: {e}", path.display())),
    };
    let failures: Vec<String> = match &report.subject {
        Subject::File { path } => {
            let construct = match load_construct(Path::new(path)) {
                Ok(c) => c,
                Err(code) => return code,
            };
            match construct {
                Construct::Semiring(s) => verify_semiring_entries(&s, &report.entries),
                _ => vec!["subject is not a semiring file".into()],
            }
        }
        Subject::Example { id } => {
            let ex = match registry::named_example(id) {
                Ok(ex) => ex,
                Err(e) => return usage_error(e),
            };
            let fresh = match ex.evaluate(report.seed.unwrap_or(1), report.trials.unwrap_or(1000))
            {
                Ok(entries) => entries,
                Err(e) => return usage_error(e),
            };
            diff_entries(&report.entries, &fresh)
        }
        Subject::Group { name, action, coeff } => {
            let group = match load_group(name) {
                Ok(g) => g,
                Err(code) => return code,
            };
            let action = match action.as_str() {
                "classes" => GroupAction::Classes,
                "center" => GroupAction::Center,
                "series" => GroupAction::Series,
                "prop31" => GroupAction::Prop31,
                other => return usage_error(format!("unknown group action {other:?}")),
            };
            let fresh =
                match group_report(&group, name, action, coeff.as_deref().unwrap_or("qplus")) {
                    Ok(r) => r,
                    Err(code) => return code,
                };
            diff_entries(&report.entries, &fresh.entries)
        }
        Subject::Search { .. } => vec!["census output is not a verifiable report".into()],
    };
    if failures.is_empty() {
        println!("verified: {} entries", report.entries.len());
        EXIT_OK
    } else {
        for f in &failures {
            println!("FAILED {f}");
        }
        EXIT_REFUTED
    }
}

/// Compare stored entries against freshly recomputed ones by name;
/// verdicts and witnesses must match exactly.
fn diff_entries(stored: &[ReportEntry], fresh: &[ReportEntry]) -> Vec<String> {
    let mut failures = Vec::new();
    for e in stored {
        match fresh.iter().find(|f| f.name == e.name) {
            None => failures.push(format!("{}: no such check", e.name)),
            Some(f) => {
                if f.verdict != e.verdict {
                    failures.push(format!(
                        "{}: recomputed verdict {} differs from stored {}",
                        e.name, f.verdict, e.verdict
                    ));
                } else if f.witness != e.witness {
                    failures.push(format!("{}: witness does not match recomputation", e.name));
                }
            }
        }
    }
    failures
}
