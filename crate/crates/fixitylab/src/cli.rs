//! Command-line front end. Text output is human-oriented; JSON is the stable
//! interface. Exit codes: 0 success, 1 precondition failure, 2 parse or data
//! error, 3 group too large, 4 violation.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::census::{
    self, enumerate_transitive_subgroups, CensusOptions, TransitiveGroupRecord,
};
use crate::classify::{classify_fixity2, classify_fixity3, ClassifyError};
use crate::fixity::{fixity_profile, ActionInstance};
use crate::group::{Group, GroupError};
use crate::io::parse_group_file;
use crate::lemmas::LemmaStatus;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

/// Environment variable naming the default dataset directory.
pub const DATA_DIR_ENV: &str = "FIXITYLAB_DATA";

#[derive(Parser)]
#[command(
    name = "fixitylab",
    version,
    about = "Fixed-point analysis and classification of finite permutation group actions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the fixity and fixed-point profile of a group action
    Fixity(FixityArgs),
    /// Classify a transitive soluble action of fixity 2 or 3
    Classify(ClassifyArgs),
    /// Run the structural check suite on a group action
    Lemma(LemmaArgs),
    /// Self-enumerate the transitive groups of a degree (2..=7)
    Enumerate(EnumerateArgs),
    /// Sweep the classifier over a census of transitive groups
    Census(CensusArgs),
}

#[derive(Args)]
struct FixityArgs {
    /// Group file: line 1 `degree <n>`, then one generator per line
    file: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    file: PathBuf,
    /// Which classification to run: 2 or 3
    #[arg(long)]
    theorem: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LemmaArgs {
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    degree: u32,
    /// Write records as a dataset file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    /// Degree range `a..b` (inclusive)
    #[arg(long)]
    degrees: String,
    /// Fixity filter: 2 or 3
    #[arg(long)]
    fixity: u32,
    /// Dataset directory for degrees above 7 (default: $FIXITYLAB_DATA)
    #[arg(long)]
    data: Option<PathBuf>,
    /// Worker threads (0 = default)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write the JSON report to this path
    #[arg(long)]
    json: Option<PathBuf>,
    /// Disable the structural check suite
    #[arg(long)]
    no_lemmas: bool,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Fixity(args) => cmd_fixity(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Lemma(args) => cmd_lemma(&args),
        Command::Enumerate(args) => cmd_enumerate(&args),
        Command::Census(args) => cmd_census(&args),
    }
}

fn load_group(path: &Path) -> Result<Group, i32> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_DATA
    })?;
    parse_group_file(&text)
        .map(|(g, _)| g)
        .map_err(|e| {
            eprintln!("error: {}: {e}", path.display());
            EXIT_DATA
        })
}

fn group_error_exit(e: &GroupError) -> i32 {
    match e {
        GroupError::TooLarge { .. } => EXIT_TOO_LARGE,
        _ => EXIT_DATA,
    }
}

fn cmd_fixity(args: &FixityArgs) -> i32 {
    let group = match load_group(&args.file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let action = ActionInstance::natural(group);
    match fixity_profile(&action) {
        Ok(profile) => {
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&profile).expect("profile serializes")
                );
            } else {
                println!("fixity {}", profile.fixity);
                for (count, elements) in &profile.counts {
                    println!("  {elements} nonidentity elements fix exactly {count} points");
                }
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            group_error_exit(&e)
        }
    }
}

fn cmd_classify(args: &ClassifyArgs) -> i32 {
    let group = match load_group(&args.file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let action = ActionInstance::natural(group);
    let result = match args.theorem {
        2 => classify_fixity2(&action),
        3 => classify_fixity3(&action),
        other => {
            eprintln!("error: --theorem must be 2 or 3, got {other}");
            return EXIT_DATA;
        }
    };
    match result {
        Ok(report) => {
            if args.json {
                println!("{}", report.to_json());
            } else {
                println!(
                    "theorem={:?} degree={} order={} fixity={}",
                    report.theorem,
                    report.diagnostics.degree,
                    report.diagnostics.order,
                    report.diagnostics.fixity
                );
                if report.cases.is_empty() {
                    println!("no case matched: VIOLATION");
                } else {
                    for case in &report.cases {
                        println!("matched {case:?}");
                    }
                    for w in &report.witnesses {
                        println!(
                            "  witness {:?}: index {} orbits {:?} generators {}",
                            w.case,
                            w.index,
                            w.orbit_sizes,
                            w.generators.join(" ")
                        );
                    }
                }
            }
            if report.cases.is_empty() {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            }
        }
        Err(ClassifyError::Precondition { failed }) => {
            eprintln!("precondition failed: {}", failed.join("; "));
            EXIT_PRECONDITION
        }
        Err(ClassifyError::Group(e)) => {
            eprintln!("error: {e}");
            group_error_exit(&e)
        }
    }
}

fn cmd_lemma(args: &LemmaArgs) -> i32 {
    let group = match load_group(&args.file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let action = ActionInstance::natural(group.clone());
    let profile = match fixity_profile(&action) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return group_error_exit(&e);
        }
    };
    if !(1..=3).contains(&profile.fixity) {
        eprintln!(
            "precondition failed: fixity {} outside the checked range 1..=3",
            profile.fixity
        );
        return EXIT_PRECONDITION;
    }
    let results = crate::census::lemma_suite_for(&action, profile.fixity, group.is_soluble());
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&results).expect("results serialize")
        );
    } else {
        for r in &results {
            match r.status {
                LemmaStatus::Holds => println!("HOLDS   {}", r.lemma),
                LemmaStatus::Fails => println!("FAILS   {}", r.lemma),
                LemmaStatus::Skipped => println!(
                    "SKIPPED {} ({})",
                    r.lemma,
                    r.skipped_hypothesis.as_deref().unwrap_or("hypothesis")
                ),
            }
        }
    }
    if results.iter().all(|r| r.holds_or_skipped()) {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn cmd_enumerate(args: &EnumerateArgs) -> i32 {
    match enumerate_transitive_subgroups(args.degree) {
        Ok(records) => {
            let text = census::format_dataset(&records);
            match &args.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return EXIT_DATA;
                    }
                    println!("wrote {} records to {}", records.len(), path.display());
                }
                None => print!("{text}"),
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DATA
        }
    }
}

fn parse_degree_range(text: &str) -> Option<(u32, u32)> {
    let (a, b) = text.split_once("..")?;
    let lo: u32 = a.parse().ok()?;
    let hi: u32 = b.parse().ok()?;
    (lo >= 2 && hi >= lo).then_some((lo, hi))
}

/// Collects census records for a degree range: self-enumeration through
/// degree 7, dataset files beyond.
pub fn collect_census_records(
    degrees: (u32, u32),
    data_dir: Option<&Path>,
) -> Result<Vec<TransitiveGroupRecord>, String> {
    let mut records = Vec::new();
    for degree in degrees.0..=degrees.1 {
        if degree <= 7 {
            records.extend(
                enumerate_transitive_subgroups(degree).map_err(|e| e.to_string())?,
            );
        } else {
            let dir = data_dir
                .map(Path::to_path_buf)
                .or_else(|| std::env::var_os(DATA_DIR_ENV).map(PathBuf::from))
                .ok_or_else(|| {
                    format!(
                        "degree {degree} needs a dataset directory (--data or ${DATA_DIR_ENV})"
                    )
                })?;
            let path = dir.join(census::dataset_file_name(degree));
            if !path.exists() {
                return Err(format!(
                    "dataset file {} for degree {degree} is missing",
                    path.display()
                ));
            }
            records.extend(census::load_dataset(&path).map_err(|e| e.to_string())?);
        }
    }
    Ok(records)
}

fn cmd_census(args: &CensusArgs) -> i32 {
    let Some(degrees) = parse_degree_range(&args.degrees) else {
        eprintln!("error: --degrees expects `a..b` with 2 <= a <= b");
        return EXIT_DATA;
    };
    if args.fixity != 2 && args.fixity != 3 {
        eprintln!("error: --fixity must be 2 or 3");
        return EXIT_DATA;
    }
    let records = match collect_census_records(degrees, args.data.as_deref()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_DATA;
        }
    };
    let options = CensusOptions {
        degrees,
        fixity: args.fixity,
        require_soluble: true,
        lemma_suite: !args.no_lemmas,
        jobs: args.jobs,
    };
    let report = census::run_census(&records, &options);
    let bytes = report.to_json_bytes();
    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, &bytes) {
            eprintln!("error: {}: {e}", path.display());
            return EXIT_DATA;
        }
    }
    println!(
        "census degrees {}..{} fixity {}: {} records, {} skipped, {} violations, lemma checks {} holds / {} fails / {} skipped",
        degrees.0,
        degrees.1,
        args.fixity,
        report.summary.total,
        report.summary.skipped,
        report.summary.violations,
        report.summary.lemma_holds,
        report.summary.lemma_fails,
        report.summary.lemma_skipped,
    );
    if report.summary.violations == 0 && report.summary.lemma_fails == 0 {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}
