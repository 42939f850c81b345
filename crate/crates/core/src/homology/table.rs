use std::path::Path;

use num_bigint::BigInt;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::linalg::AbelianGroupStructure;

/// A Schur multiplier (`H_2`) entry from the external table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H2Entry {
    Known(AbelianGroupStructure),
    Unknown,
}

/// An `H_3` entry from the external table. `Constraint` records a bounding
/// statement only (the Monster) and is unusable as vanishing evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H3Entry {
    Known(AbelianGroupStructure),
    Unknown,
    Constraint(String),
}

/// One cited record: a sporadic group, its known low homology, and the primes
/// `p` with `He_3(p) <= G` and `p` coprime to `|H_3(G)|`.
#[derive(Clone, Debug)]
pub struct SporadicRecord {
    pub name: String,
    pub h2: H2Entry,
    pub h3: H3Entry,
    pub usable_he3_primes: Vec<u64>,
    pub citation: String,
}

/// The versioned external data table, plus the hash of the bytes it was
/// parsed from so certificates can pin their inputs.
#[derive(Clone, Debug)]
pub struct SporadicTable {
    pub version: u32,
    pub records: Vec<SporadicRecord>,
    pub source_sha256: String,
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("missing `version` line")]
    MissingVersion,
    #[error("line {0}: {1}")]
    BadLine(usize, String),
    #[error("duplicate record for `{0}`")]
    Duplicate(String),
}

fn parse_structure(text: &str, lineno: usize) -> Result<AbelianGroupStructure, TableError> {
    let text = text.trim();
    if text == "0" {
        return Ok(AbelianGroupStructure::trivial());
    }
    let factors: Result<Vec<BigInt>, _> = text
        .split('+')
        .map(|t| t.trim().parse::<u64>().map(BigInt::from))
        .collect();
    match factors {
        Ok(f) => Ok(AbelianGroupStructure::new(0, f)),
        Err(_) => Err(TableError::BadLine(
            lineno,
            format!("cannot parse group notation `{text}`"),
        )),
    }
}

impl SporadicTable {
    pub fn load(path: &Path) -> Result<SporadicTable, TableError> {
        let bytes = std::fs::read(path).map_err(|source| TableError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let text = String::from_utf8_lossy(&bytes).into_owned();
        let mut table = Self::parse(&text)?;
        table.source_sha256 = hex::encode(Sha256::digest(&bytes));
        Ok(table)
    }

    pub fn parse(text: &str) -> Result<SporadicTable, TableError> {
        let mut version: Option<u32> = None;
        let mut records: Vec<SporadicRecord> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("version ") {
                version = Some(rest.trim().parse().map_err(|_| {
                    TableError::BadLine(lineno, "bad version number".to_string())
                })?);
                continue;
            }
            let fields: Vec<&str> = line.split('|').map(str::trim).collect();
            if fields.len() != 5 {
                return Err(TableError::BadLine(
                    lineno,
                    format!("expected 5 `|`-separated fields, got {}", fields.len()),
                ));
            }
            let name = fields[0].to_string();
            if records.iter().any(|r| r.name == name) {
                return Err(TableError::Duplicate(name));
            }
            let h2 = match fields[1] {
                "unknown" => H2Entry::Unknown,
                s => H2Entry::Known(parse_structure(s, lineno)?),
            };
            let h3 = match fields[2] {
                "unknown" => H3Entry::Unknown,
                s if s.starts_with("constraint:") => {
                    H3Entry::Constraint(s["constraint:".len()..].trim().to_string())
                }
                s => H3Entry::Known(parse_structure(s, lineno)?),
            };
            let usable_he3_primes: Vec<u64> = if fields[3] == "-" {
                Vec::new()
            } else {
                fields[3]
                    .split(',')
                    .map(|t| {
                        t.trim().parse::<u64>().map_err(|_| {
                            TableError::BadLine(lineno, format!("bad prime `{t}`"))
                        })
                    })
                    .collect::<Result<_, _>>()?
            };
            records.push(SporadicRecord {
                name,
                h2,
                h3,
                usable_he3_primes,
                citation: fields[4].to_string(),
            });
        }
        Ok(SporadicTable {
            version: version.ok_or(TableError::MissingVersion)?,
            records,
            source_sha256: String::new(),
        })
    }

    /// Looks a group up by name, tolerating case differences, the `Monster`
    /// alias, and the apostrophe in O'N.
    pub fn get(&self, name: &str) -> Option<&SporadicRecord> {
        let norm = |s: &str| s.replace('\'', "").to_ascii_lowercase();
        let mut wanted = norm(name);
        if wanted == "monster" {
            wanted = "m".to_string();
        }
        self.records.iter().find(|r| norm(&r.name) == wanted)
    }
}
