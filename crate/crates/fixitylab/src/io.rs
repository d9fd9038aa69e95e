//! Group input files: line 1 `degree <n>`, then one generator per line in
//! cycle notation. Blank lines are ignored.

use thiserror::Error;

use crate::group::{Group, GroupError};
use crate::perm::{Perm, PermError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupFileError {
    #[error("line {line}: {source}")]
    Perm { line: usize, source: PermError },
    #[error("line {line}: expected `degree <n>`")]
    Header { line: usize },
    #[error("missing `degree <n>` header")]
    MissingHeader,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Parses a group file into a group plus the original generator strings.
pub fn parse_group_file(text: &str) -> Result<(Group, Vec<String>), GroupFileError> {
    let mut degree: Option<u32> = None;
    let mut gens: Vec<Perm> = Vec::new();
    let mut gen_strings: Vec<String> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let mut parts = line.split_whitespace();
                match (parts.next(), parts.next(), parts.next()) {
                    (Some("degree"), Some(n), None) => {
                        degree = Some(
                            n.parse::<u32>()
                                .map_err(|_| GroupFileError::Header { line: line_no })?,
                        );
                    }
                    _ => return Err(GroupFileError::Header { line: line_no }),
                }
            }
            Some(n) => {
                let perm = Perm::parse_cycles(line, n).map_err(|source| GroupFileError::Perm {
                    line: line_no,
                    source,
                })?;
                gen_strings.push(perm.to_cycle_string());
                gens.push(perm);
            }
        }
    }
    let degree = degree.ok_or(GroupFileError::MissingHeader)?;
    let group = Group::new(gens, degree)?;
    Ok((group, gen_strings))
}

/// Renders a group in the group-file format with canonical generator strings.
pub fn format_group_file(group: &Group) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_cycle_string());
        out.push('\n');
    }
    out
}
