use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::perm::{load_perm_group_file, PermFileError, PermGroup};

/// The Mathieu groups this crate ships generator data for. Everything bigger
/// among the sporadic groups is handled through cited table entries only.
pub const MATHIEU_NAMES: [&str; 4] = ["M11", "M12", "M22", "M23"];

/// A Mathieu group loaded from its shipped generator file, with the file
/// hash pinned for certificates.
#[derive(Debug)]
pub struct MathieuGroup {
    pub name: String,
    pub group: PermGroup,
    pub file_name: String,
    pub file_sha256: String,
}

#[derive(Debug, Error)]
pub enum MathieuError {
    #[error("unknown Mathieu group `{0}` (have M11, M12, M22, M23)")]
    UnknownName(String),
    #[error(transparent)]
    File(#[from] PermFileError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("file declares group `{declared}` but `{requested}` was requested")]
    NameMismatch { declared: String, requested: String },
}

/// The data file name for a Mathieu group, relative to the data directory.
pub fn mathieu_file_name(name: &str) -> Option<String> {
    MATHIEU_NAMES
        .iter()
        .find(|n| n.eq_ignore_ascii_case(name))
        .map(|n| format!("{}.perm", n.to_ascii_lowercase()))
}

/// Loads standard generators for a Mathieu group from `data_dir`. The file's
/// declared order is verified against the Schreier–Sims order during parsing;
/// any mismatch means corrupt data and is a hard failure.
pub fn load_mathieu(name: &str, data_dir: &Path) -> Result<MathieuGroup, MathieuError> {
    let file_name =
        mathieu_file_name(name).ok_or_else(|| MathieuError::UnknownName(name.to_string()))?;
    let path: PathBuf = data_dir.join(&file_name);
    let bytes = std::fs::read(&path).map_err(|source| MathieuError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let loaded = load_perm_group_file(&path)?;
    let canonical = MATHIEU_NAMES
        .iter()
        .find(|n| n.eq_ignore_ascii_case(name))
        .expect("checked by mathieu_file_name");
    if !loaded.name.eq_ignore_ascii_case(canonical) {
        return Err(MathieuError::NameMismatch {
            declared: loaded.name,
            requested: canonical.to_string(),
        });
    }
    Ok(MathieuGroup {
        name: loaded.name,
        group: loaded.group,
        file_name,
        file_sha256: hex::encode(Sha256::digest(&bytes)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data_dir() -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
    }

    #[test]
    fn all_four_load_with_their_atlas_orders() {
        let want: [(&str, u128, usize); 4] = [
            ("M11", 7920, 11),
            ("M12", 95040, 12),
            ("M22", 443520, 22),
            ("M23", 10200960, 23),
        ];
        for (name, order, degree) in want {
            let m = load_mathieu(name, &data_dir()).unwrap();
            assert_eq!(m.group.order(), order, "{name}");
            assert_eq!(m.group.degree(), degree, "{name}");
            assert!(!m.file_sha256.is_empty());
        }
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(
            load_mathieu("M24", &data_dir()),
            Err(MathieuError::UnknownName(_))
        ));
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let m = load_mathieu("M11", Path::new("/nonexistent"));
        assert!(matches!(m, Err(MathieuError::Io { .. })));
    }
}
