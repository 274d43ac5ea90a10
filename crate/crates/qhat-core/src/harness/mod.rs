//! Fixture-driven verification suite and report assembly.

pub mod checks;
pub mod fixtures;
pub mod report;

pub use checks::{Log, CHECKS};
pub use fixtures::Fixtures;
pub use report::{CheckEntry, Report, Status};

use crate::error::{Error, Result};
use rayon::prelude::*;
use serde_json::json;
use std::path::Path;

pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|c| c.1)
}

/// Runs one named check, or all of them when `only` is `None`. Checks run in
/// parallel and are joined in their fixed order. With a witness directory,
/// each check's witnesses are written to `<dir>/<check>.json`.
pub fn verify(f: &Fixtures, only: Option<&str>, witness_dir: Option<&Path>) -> Result<Report> {
    let selected: Vec<_> = match only {
        Some(name) => {
            let c = CHECKS.iter().find(|c| c.1 == name).ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
            vec![c]
        }
        None => CHECKS.iter().collect(),
    };
    if let Some(dir) = witness_dir {
        std::fs::create_dir_all(dir).map_err(|e| Error::Invalid(format!("witness directory: {e}")))?;
    }
    let entries = selected
        .par_iter()
        .map(|&&(criterion, name, run)| {
            let log = run(f).unwrap_or_else(|e| {
                let mut l = Log::new();
                l.check_with("check ran to completion", false, json!(e.to_string()));
                l
            });
            let witness = match witness_dir {
                Some(dir) if !log.witnesses.is_empty() => {
                    let path = dir.join(format!("{name}.json"));
                    let text = serde_json::to_string_pretty(&log.witnesses).expect("witnesses serialize");
                    std::fs::write(&path, text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
                    Some(path.display().to_string())
                }
                _ => None,
            };
            Ok(CheckEntry {
                check: name.to_string(),
                criterion,
                status: if log.ok { Status::Pass } else { Status::Fail },
                witness,
                detail: json!({"subchecks": log.subs}),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(crate::sampling::seed(), f.hash.clone(), entries))
}
