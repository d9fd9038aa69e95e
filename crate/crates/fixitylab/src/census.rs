//! Census harness: exhaustive lists of transitive groups at small degree,
//! dataset files for the shipped degrees, and the sweep that runs the
//! classifiers and the structural check suite over every record.

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::classify::{
    classify_fixity2, classify_fixity3, revalidate_report, CaseTag, ClassificationReport,
    ClassifyError,
};
use crate::enumerate::transitive_classes;
use crate::fixity::{fixity_profile, ActionInstance, FixityProfile};
use crate::group::{span_gens, Group, GroupError};
use crate::lemmas::{
    check_minimal_normal_dichotomy, check_normalizer_bounds, check_quotient_fixity_bound,
    check_supporting_constraints, LemmaCheckResult, LemmaStatus,
};
use crate::perm::Perm;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("degree {degree} outside the self-enumeration range 2..=7")]
    DegreeOutOfRange { degree: u32 },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("line {line}: record is not transitive")]
    NotTransitive { line: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// One transitive group of the census: a degree, a positional identifier
/// within the degree, a free-form label, and generators in cycle notation.
#[derive(Clone, Debug, Serialize)]
pub struct TransitiveGroupRecord {
    pub degree: u32,
    pub id: u32,
    pub label: String,
    pub generators: Vec<String>,
}

impl TransitiveGroupRecord {
    pub fn build_group(&self) -> Result<Group, CensusError> {
        let gens: Result<Vec<Perm>, _> = self
            .generators
            .iter()
            .map(|s| Perm::parse_cycles(s, self.degree))
            .collect();
        let gens = gens.map_err(|e| CensusError::Format {
            line: 0,
            msg: format!("record {}/{}: {e}", self.degree, self.id),
        })?;
        Ok(Group::new(gens, self.degree)?)
    }
}

/// Self-enumerates all transitive subgroups of `Sym(degree)` up to conjugacy,
/// for `2 <= degree <= 7`. Completeness is by construction (cyclic extension
/// from prime cyclic and perfect seeds).
pub fn enumerate_transitive_subgroups(
    degree: u32,
) -> Result<Vec<TransitiveGroupRecord>, CensusError> {
    if !(2..=7).contains(&degree) {
        return Err(CensusError::DegreeOutOfRange { degree });
    }
    Ok(records_from_groups(degree, &transitive_classes(degree)))
}

/// Converts enumerated class representatives to census records with reduced
/// generator lists and positional identifiers.
pub fn records_from_groups(degree: u32, groups: &[Group]) -> Vec<TransitiveGroupRecord> {
    groups
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let gens = span_gens(degree, g.generators());
            TransitiveGroupRecord {
                degree,
                id: i as u32 + 1,
                label: format!("{}T{} ord={}", degree, i + 1, g.order()),
                generators: gens.iter().map(|p| p.to_cycle_string()).collect(),
            }
        })
        .collect()
}

pub fn dataset_file_name(degree: u32) -> String {
    format!("transitive_{degree}.tsv")
}

/// Serializes records in the dataset format: one record per line,
/// `degree<TAB>id<TAB>label<TAB>gen[;gen]*`, `#` comment lines allowed.
pub fn format_dataset(records: &[TransitiveGroupRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            r.degree,
            r.id,
            r.label,
            r.generators.join(";")
        ));
    }
    out
}

/// Loads and fully validates a dataset file: every generator must parse at
/// the stated degree and every record must generate a transitive group.
pub fn load_dataset(path: &Path) -> Result<Vec<TransitiveGroupRecord>, CensusError> {
    let text = std::fs::read_to_string(path).map_err(|source| CensusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_dataset(&text)
}

pub fn parse_dataset(text: &str) -> Result<Vec<TransitiveGroupRecord>, CensusError> {
    let mut records = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() != 4 {
            return Err(CensusError::Format {
                line,
                msg: format!("expected 4 tab-separated fields, found {}", fields.len()),
            });
        }
        let degree: u32 = fields[0].parse().map_err(|_| CensusError::Format {
            line,
            msg: "degree is not a positive integer".to_owned(),
        })?;
        let id: u32 = fields[1].parse().map_err(|_| CensusError::Format {
            line,
            msg: "id is not a positive integer".to_owned(),
        })?;
        let gen_strings: Vec<String> = fields[3].split(';').map(str::to_owned).collect();
        let mut gens = Vec::new();
        for s in &gen_strings {
            let p = Perm::parse_cycles(s, degree).map_err(|e| CensusError::Format {
                line,
                msg: e.to_string(),
            })?;
            gens.push(p);
        }
        let group = Group::new(gens, degree)?;
        if !group.is_transitive() {
            return Err(CensusError::NotTransitive { line });
        }
        records.push(TransitiveGroupRecord {
            degree,
            id,
            label: fields[2].to_owned(),
            generators: gen_strings,
        });
    }
    Ok(records)
}

/// Options for a census sweep. The solubility filter runs before the fixity
/// filter (it is cheaper); the structural check suite, when enabled, runs on
/// every record of fixity 1..=3 independently of the classification filter.
#[derive(Clone, Debug, Serialize)]
pub struct CensusOptions {
    pub degrees: (u32, u32),
    pub fixity: u32,
    pub require_soluble: bool,
    pub lemma_suite: bool,
    #[serde(skip)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordOutcome {
    PreconditionSkip,
    Classified,
    Violation,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecordDiagnostics {
    pub order: u64,
    pub transitive: bool,
    pub soluble: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixity: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<FixityProfile>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecordReport {
    pub degree: u32,
    pub id: u32,
    pub label: String,
    pub outcome: RecordOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    pub diagnostics: RecordDiagnostics,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases: Option<Vec<CaseTag>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<ClassificationReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub lemmas: Vec<LemmaCheckResult>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CensusSummary {
    pub total: u64,
    pub skipped: u64,
    pub matched_by_case: BTreeMap<String, u64>,
    pub violations: u64,
    pub lemma_holds: u64,
    pub lemma_fails: u64,
    pub lemma_skipped: u64,
    pub kernel_exceeds_n_logged: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusMeta {
    pub tool_version: String,
    pub filters: CensusOptions,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub meta: CensusMeta,
    pub records: Vec<RecordReport>,
    pub summary: CensusSummary,
}

impl CensusReport {
    /// Canonical serialization; identical runs produce identical bytes.
    pub fn to_json_bytes(&self) -> Vec<u8> {
        let mut bytes = serde_json::to_vec_pretty(self).expect("report serializes");
        bytes.push(b'\n');
        bytes
    }
}

/// Runs the classifier (and, when enabled, the structural check suite) over
/// the records. Per-record work is independent and runs on a thread pool of
/// `jobs` threads (0 = default); the report is a deterministic reduction
/// sorted by (degree, id), independent of the parallelism level.
pub fn run_census(records: &[TransitiveGroupRecord], options: &CensusOptions) -> CensusReport {
    let filtered: Vec<&TransitiveGroupRecord> = records
        .iter()
        .filter(|r| r.degree >= options.degrees.0 && r.degree <= options.degrees.1)
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .expect("thread pool");
    let mut reports: Vec<RecordReport> = pool.install(|| {
        filtered
            .par_iter()
            .map(|r| analyze_record(r, options))
            .collect()
    });
    reports.sort_by_key(|r| (r.degree, r.id));

    let mut summary = CensusSummary {
        total: reports.len() as u64,
        ..CensusSummary::default()
    };
    for r in &reports {
        match r.outcome {
            RecordOutcome::PreconditionSkip => summary.skipped += 1,
            RecordOutcome::Violation => summary.violations += 1,
            RecordOutcome::Classified => {
                for case in r.cases.as_deref().unwrap_or(&[]) {
                    *summary
                        .matched_by_case
                        .entry(format!("{case:?}"))
                        .or_insert(0) += 1;
                }
            }
        }
        for l in &r.lemmas {
            match l.status {
                LemmaStatus::Holds => summary.lemma_holds += 1,
                LemmaStatus::Fails => summary.lemma_fails += 1,
                LemmaStatus::Skipped => summary.lemma_skipped += 1,
            }
            if l.evidence.get("kernel_exceeds_n") == Some(&serde_json::Value::Bool(true)) {
                summary.kernel_exceeds_n_logged += 1;
            }
        }
    }
    CensusReport {
        meta: CensusMeta {
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            filters: options.clone(),
        },
        records: reports,
        summary,
    }
}

fn skip(
    record: &TransitiveGroupRecord,
    diagnostics: RecordDiagnostics,
    reason: String,
    lemmas: Vec<LemmaCheckResult>,
) -> RecordReport {
    RecordReport {
        degree: record.degree,
        id: record.id,
        label: record.label.clone(),
        outcome: RecordOutcome::PreconditionSkip,
        skip_reason: Some(reason),
        diagnostics,
        cases: None,
        report: None,
        lemmas,
    }
}

fn analyze_record(record: &TransitiveGroupRecord, options: &CensusOptions) -> RecordReport {
    let group = record
        .build_group()
        .expect("census records are validated at load");
    let action = ActionInstance::natural(group.clone());
    let soluble = group.is_soluble();
    let order = group.order();
    let mut diagnostics = RecordDiagnostics {
        order: order as u64,
        transitive: true,
        soluble,
        fixity: None,
        profile: None,
    };

    // solubility filter first (cheaper than the profile)
    if options.require_soluble && !soluble {
        return skip(
            record,
            diagnostics,
            "group is not soluble".to_owned(),
            Vec::new(),
        );
    }

    let profile = match fixity_profile(&action) {
        Ok(p) => p,
        Err(GroupError::TooLarge { order }) => {
            return skip(
                record,
                diagnostics,
                format!("order {order} exceeds the enumeration bound"),
                Vec::new(),
            );
        }
        Err(e) => unreachable!("profile on validated record: {e}"),
    };
    diagnostics.fixity = Some(profile.fixity);
    diagnostics.profile = Some(profile.clone());

    let lemmas = if options.lemma_suite && (1..=3).contains(&profile.fixity) {
        lemma_suite_for(&action, profile.fixity, soluble)
    } else {
        Vec::new()
    };

    if profile.fixity != options.fixity {
        return skip(
            record,
            diagnostics,
            format!("fixity {} does not match filter {}", profile.fixity, options.fixity),
            lemmas,
        );
    }

    let classified = match options.fixity {
        2 => classify_fixity2(&action),
        3 => classify_fixity3(&action),
        k => Err(ClassifyError::Precondition {
            failed: vec![format!("unsupported fixity filter {k}")],
        }),
    };
    match classified {
        Ok(report) => {
            let sound = !report.is_violation() && revalidate_report(&action, &report);
            RecordReport {
                degree: record.degree,
                id: record.id,
                label: record.label.clone(),
                outcome: if sound {
                    RecordOutcome::Classified
                } else {
                    RecordOutcome::Violation
                },
                skip_reason: None,
                diagnostics,
                cases: Some(report.cases.clone()),
                report: Some(report),
                lemmas,
            }
        }
        Err(ClassifyError::Precondition { failed }) => {
            skip(record, diagnostics, failed.join("; "), lemmas)
        }
        Err(ClassifyError::Group(GroupError::TooLarge { order })) => skip(
            record,
            diagnostics,
            format!("order {order} exceeds the enumeration bound"),
            lemmas,
        ),
        Err(ClassifyError::Group(e)) => unreachable!("validated record: {e}"),
    }
}

/// The structural check suite for one record: normalizer bounds always, and
/// for fixity 2 or 3 the per-minimal-normal-subgroup checks. Checker
/// precondition failures are recorded as SKIPPED results.
pub fn lemma_suite_for(
    action: &ActionInstance,
    fixity: u32,
    soluble: bool,
) -> Vec<LemmaCheckResult> {
    let mut out = Vec::new();
    push_checked(
        &mut out,
        "normaliser-bounds",
        check_normalizer_bounds(action, fixity),
    );
    if fixity != 2 && fixity != 3 {
        return out;
    }
    let minimals = match action.group().minimal_normal_subgroups() {
        Ok(m) => m,
        Err(GroupError::TooLarge { .. }) => return out,
        Err(e) => unreachable!("validated record: {e}"),
    };
    for n in &minimals {
        if soluble {
            push_checked(
                &mut out,
                "minimal-normal-dichotomy",
                check_minimal_normal_dichotomy(action, n, fixity),
            );
        } else {
            out.push(skipped_result(
                "minimal-normal-dichotomy",
                "group is not soluble",
            ));
        }
        push_checked(
            &mut out,
            "quotient-fixity-bound",
            check_quotient_fixity_bound(action, n),
        );
        match check_supporting_constraints(action, n) {
            Ok(results) => out.extend(results),
            Err(ClassifyError::Precondition { failed }) => {
                out.push(skipped_result("supporting-constraints", &failed.join("; ")));
            }
            Err(ClassifyError::Group(e)) => unreachable!("validated record: {e}"),
        }
    }
    out
}

fn push_checked(
    out: &mut Vec<LemmaCheckResult>,
    lemma: &str,
    result: Result<LemmaCheckResult, ClassifyError>,
) {
    match result {
        Ok(r) => out.push(r),
        Err(ClassifyError::Precondition { failed }) => {
            out.push(skipped_result(lemma, &failed.join("; ")));
        }
        Err(ClassifyError::Group(e)) => unreachable!("validated record: {e}"),
    }
}

fn skipped_result(lemma: &str, hypothesis: &str) -> LemmaCheckResult {
    LemmaCheckResult {
        lemma: lemma.to_owned(),
        status: LemmaStatus::Skipped,
        skipped_hypothesis: Some(hypothesis.to_owned()),
        evidence: serde_json::Value::Null,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_census_has_one_record() {
        let records = enumerate_transitive_subgroups(2).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].build_group().unwrap().order(), 2);
        assert!(matches!(
            enumerate_transitive_subgroups(8),
            Err(CensusError::DegreeOutOfRange { degree: 8 })
        ));
        assert!(matches!(
            enumerate_transitive_subgroups(1),
            Err(CensusError::DegreeOutOfRange { degree: 1 })
        ));
    }

    #[test]
    fn degree_six_census_contains_the_named_groups() {
        use crate::structure::NamedGroupTag;
        let records = enumerate_transitive_subgroups(6).unwrap();
        assert_eq!(records.len(), 16);
        let mut alt4_sym4 = 0;
        let mut order36_match = 0;
        for r in &records {
            let g = r.build_group().unwrap();
            if g.matches_named_group(NamedGroupTag::Alt4).unwrap()
                || g.matches_named_group(NamedGroupTag::Sym4).unwrap()
            {
                alt4_sym4 += 1;
            }
            if g.matches_named_group(NamedGroupTag::C3xC3ColonC4).unwrap() {
                order36_match += 1;
                let a = ActionInstance::natural(g);
                assert_eq!(fixity_profile(&a).unwrap().fixity, 3);
            }
        }
        assert_eq!(alt4_sym4, 3);
        assert_eq!(order36_match, 1);
    }

    #[test]
    fn dataset_roundtrip_and_validation() {
        let records = enumerate_transitive_subgroups(5).unwrap();
        let text = format_dataset(&records);
        let parsed = parse_dataset(&text).unwrap();
        assert_eq!(parsed.len(), records.len());
        assert!(parse_dataset("").unwrap().is_empty());
        assert!(matches!(
            parse_dataset("9\t1\tx\t(1,2,10)"),
            Err(CensusError::Format { line: 1, .. })
        ));
        assert!(matches!(
            parse_dataset("4\t1\tx\t(1,2)"),
            Err(CensusError::NotTransitive { line: 1 })
        ));
        assert!(matches!(
            parse_dataset("4\t1\tx"),
            Err(CensusError::Format { line: 1, .. })
        ));
    }

    #[test]
    fn census_over_degrees_up_to_five_has_no_violations() {
        let mut records = Vec::new();
        for d in 2..=5 {
            records.extend(enumerate_transitive_subgroups(d).unwrap());
        }
        for fixity in [2u32, 3] {
            let options = CensusOptions {
                degrees: (2, 5),
                fixity,
                require_soluble: true,
                lemma_suite: true,
                jobs: 1,
            };
            let report = run_census(&records, &options);
            assert_eq!(report.summary.violations, 0);
            assert_eq!(report.summary.lemma_fails, 0);
            assert_eq!(report.summary.total, records.len() as u64);
        }
    }

    #[test]
    fn summary_aggregates_match_record_outcomes() {
        let mut records = Vec::new();
        for d in 2..=6 {
            records.extend(enumerate_transitive_subgroups(d).unwrap());
        }
        let options = CensusOptions {
            degrees: (2, 6),
            fixity: 3,
            require_soluble: true,
            lemma_suite: true,
            jobs: 2,
        };
        let report = run_census(&records, &options);
        let classified = report
            .records
            .iter()
            .filter(|r| r.outcome == RecordOutcome::Classified)
            .count() as u64;
        let skipped = report
            .records
            .iter()
            .filter(|r| r.outcome == RecordOutcome::PreconditionSkip)
            .count() as u64;
        let violations = report
            .records
            .iter()
            .filter(|r| r.outcome == RecordOutcome::Violation)
            .count() as u64;
        assert_eq!(report.summary.total, classified + skipped + violations);
        assert_eq!(report.summary.skipped, skipped);
        assert_eq!(report.summary.violations, violations);
    }

    #[test]
    fn census_reports_are_deterministic_across_parallelism() {
        let mut records = Vec::new();
        for d in 2..=6 {
            records.extend(enumerate_transitive_subgroups(d).unwrap());
        }
        let mk = |jobs: usize| {
            let options = CensusOptions {
                degrees: (2, 6),
                fixity: 2,
                require_soluble: true,
                lemma_suite: true,
                jobs,
            };
            run_census(&records, &options).to_json_bytes()
        };
        assert_eq!(mk(1), mk(8));
    }
}
