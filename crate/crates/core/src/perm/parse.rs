use std::path::Path;

use thiserror::Error;

use super::group::PermGroup;
use super::permutation::{PermError, Permutation};

/// A permutation group loaded from a generator data file, together with the
/// metadata the file declared. The declared order is a check value: it has
/// been verified against the computed order by the time this struct exists.
#[derive(Debug)]
pub struct LoadedGroup {
    pub name: String,
    pub degree: usize,
    pub declared_order: u128,
    pub group: PermGroup,
}

#[derive(Debug, Error)]
pub enum PermFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("missing `{0}` header line")]
    MissingHeader(&'static str),
    #[error("line {0}: {1}")]
    BadPermutation(usize, PermError),
    #[error("line {0}: malformed header")]
    BadHeader(usize),
    #[error("declared order {declared} but computed order {computed}: corrupt data file")]
    OrderMismatch { declared: u128, computed: u128 },
}

/// Loads a generator data file.
///
/// Format: `name`, `degree` and `order` header lines, then one permutation
/// per line in 1-based disjoint-cycle notation:
///
/// ```text
/// name M11
/// degree 11
/// order 7920
/// (1,2,3,4,5,6,7,8,9,10,11)
/// (3,7,11,8)(4,10,5,6)
/// ```
///
/// The declared order is verified against the computed one; a mismatch is a
/// hard failure (corrupt data).
pub fn load_perm_group_file(path: &Path) -> Result<LoadedGroup, PermFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| PermFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_perm_group(&text)
}

pub(crate) fn parse_perm_group(text: &str) -> Result<LoadedGroup, PermFileError> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut order: Option<u128> = None;
    let mut gens: Vec<Permutation> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name ") {
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("degree ") {
            degree = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| PermFileError::BadHeader(lineno))?,
            );
        } else if let Some(rest) = line.strip_prefix("order ") {
            order = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| PermFileError::BadHeader(lineno))?,
            );
        } else {
            let d = degree.ok_or(PermFileError::MissingHeader("degree"))?;
            let p = Permutation::parse_cycles(line, d)
                .map_err(|e| PermFileError::BadPermutation(lineno, e))?;
            gens.push(p);
        }
    }

    let name = name.ok_or(PermFileError::MissingHeader("name"))?;
    let degree = degree.ok_or(PermFileError::MissingHeader("degree"))?;
    let declared_order = order.ok_or(PermFileError::MissingHeader("order"))?;
    let group = PermGroup::new(degree, gens).expect("degrees enforced during parse");
    let computed = group.order();
    if computed != declared_order {
        return Err(PermFileError::OrderMismatch {
            declared: declared_order,
            computed,
        });
    }
    Ok(LoadedGroup {
        name,
        degree,
        declared_order,
        group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_verifies_a_small_group() {
        let text = "name S3\ndegree 3\norder 6\n(1,2,3)\n(1,2)\n";
        let loaded = parse_perm_group(text).unwrap();
        assert_eq!(loaded.name, "S3");
        assert_eq!(loaded.group.order(), 6);
    }

    #[test]
    fn order_mismatch_is_fatal() {
        let text = "name bogus\ndegree 3\norder 7\n(1,2,3)\n";
        assert!(matches!(
            parse_perm_group(text),
            Err(PermFileError::OrderMismatch {
                declared: 7,
                computed: 3
            })
        ));
    }
}
