//! Offline regeneration of the shipped transitive-group dataset files.
//!
//! Degrees 8..=10 run the same subgroup-lattice enumeration the library uses
//! for degrees <= 7 (complete by construction); degree 11 is built from the
//! classical classification of transitive groups of prime degree, with every
//! entry machine-verified. See data/README.md for provenance notes.

use std::path::PathBuf;

use clap::Parser;

use fixitylab::census::{format_dataset, records_from_groups};
use fixitylab::datagen::classical_degree_11;
use fixitylab::enumerate::transitive_classes;

#[derive(Parser)]
#[command(name = "fixitylab-datagen", version)]
struct Cli {
    /// Degree to regenerate (8, 9, 10 or 11)
    #[arg(long)]
    degree: u32,
    /// Output dataset file
    #[arg(long)]
    out: PathBuf,
}

fn main() {
    let cli = Cli::parse();
    let started = std::time::Instant::now();
    let groups = match cli.degree {
        8..=10 => transitive_classes(cli.degree),
        11 => classical_degree_11(),
        other => {
            eprintln!("error: unsupported degree {other} (expected 8..=11)");
            std::process::exit(2);
        }
    };
    let records = records_from_groups(cli.degree, &groups);
    if let Err(e) = std::fs::write(&cli.out, format_dataset(&records)) {
        eprintln!("error: {}: {e}", cli.out.display());
        std::process::exit(2);
    }
    eprintln!(
        "degree {}: wrote {} records to {} in {:?}",
        cli.degree,
        records.len(),
        cli.out.display(),
        started.elapsed()
    );
}
