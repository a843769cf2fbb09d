//! Stage and pipeline data files.
//!
//! Every file starts with a kind line and `version 1`; `#` lines are
//! comments. Kinds:
//!
//! ```text
//! signed-perm              structural            block-diag
//! version 1                version 1             version 1
//! size 24                  dims 28 24            dim 30
//! transpose (optional)     expr kron(T32, I4)    shared c1_1 +0 +5
//! block 8 order 1 2 4 ...                        block S4_0 4 half
//! block 8 identity signs + - ...                 row +0 +5 +10 +15, ...
//! ```
//!
//! Permutation orders are one-based; `output[i] = sign[i] · input[order[i]]`,
//! and `transpose` applies the inverse instead. Structural expressions
//! combine `H2`, `T23`, `T32` and `I<n>` with `kron(a, b)` and
//! `dirsum(a, b, ...)`. A block entry is a signed list of `b` indices,
//! optionally followed by `= ±name ± name` to fix which shared sums build it.
//!
//! Pipelines list `stage NAME` lines in execution order, input first.

use std::fs;
use std::path::{Path, PathBuf};

use super::FastMultError;

macro_rules! builtin {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../assets/", $name)))),*]
    };
}

/// Every shipped asset file, by file name.
pub const BUILTIN_ASSETS: &[(&str, &str)] = builtin!(
    "P16_1.stage",
    "Wt24x16_1.stage",
    "P24_3.stage",
    "Wt28x24_2.stage",
    "D28_2.stage",
    "W24x28_2.stage",
    "P24_4.stage",
    "W16x24_1.stage",
    "P16_2.stage",
    "E16_1.stage",
    "P28_5.stage",
    "Wt30x28_3.stage",
    "D30_3.stage",
    "W28x30_3.stage",
    "P28_6.stage",
    "Wt30_4.stage",
    "D30_4.stage",
    "W30_4.stage",
    "P30.stage",
    "level1.pipeline",
    "level2.pipeline",
    "level3.pipeline",
    "printed_table.txt",
    "printed_b16.txt",
);

pub const ASSET_DIR_ENV: &str = "DIRAC_ASSET_DIR";

pub fn builtin_asset(file: &str) -> Option<&'static str> {
    BUILTIN_ASSETS.iter().find(|(n, _)| *n == file).map(|(_, t)| *t)
}

/// Where stage files come from. A directory source falls back to the
/// builtin copy for files it does not contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssetSource {
    Builtin,
    Dir(PathBuf),
}

impl AssetSource {
    /// `DIRAC_ASSET_DIR` if set, else the builtin assets.
    pub fn from_env() -> Self {
        match std::env::var_os(ASSET_DIR_ENV) {
            Some(d) if !d.is_empty() => Self::Dir(PathBuf::from(d)),
            _ => Self::Builtin,
        }
    }

    pub fn read(&self, file: &str) -> Result<String, FastMultError> {
        if let Self::Dir(dir) = self {
            let path = dir.join(file);
            if path.exists() {
                return fs::read_to_string(&path).map_err(|e| FastMultError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                });
            }
        }
        builtin_asset(file)
            .map(str::to_string)
            .ok_or_else(|| FastMultError::MissingAsset(file.to_string()))
    }

    /// Stage names whose file here differs from the builtin one.
    pub fn stages_differing_from_builtin(&self) -> Vec<String> {
        let Self::Dir(_) = self else {
            return Vec::new();
        };
        BUILTIN_ASSETS
            .iter()
            .filter(|(name, text)| {
                name.ends_with(".stage") && self.read(name).map_or(true, |t| t != *text)
            })
            .map(|(name, _)| name.trim_end_matches(".stage").to_string())
            .collect()
    }
}

/// Writes every builtin asset into `dir` (created if needed).
pub fn write_builtin_assets(dir: &Path) -> Result<(), FastMultError> {
    let io = |e: std::io::Error| FastMultError::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    };
    fs::create_dir_all(dir).map_err(io)?;
    for (name, text) in BUILTIN_ASSETS {
        fs::write(dir.join(name), text).map_err(io)?;
    }
    Ok(())
}

/// A data file split into significant lines with their line numbers.
pub(crate) struct AssetLines<'a> {
    pub file: String,
    pub kind: &'a str,
    pub lines: Vec<(usize, &'a str)>,
}

impl<'a> AssetLines<'a> {
    pub fn parse(file: &str, text: &'a str) -> Result<Self, FastMultError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let err = |line, msg: &str| FastMultError::asset(file, line, msg);
        let (_, kind) = lines.next().ok_or_else(|| err(0, "empty file"))?;
        match lines.next() {
            Some((_, "version 1")) => {}
            Some((n, v)) => return Err(err(n, &format!("unsupported version line {v:?}"))),
            None => return Err(err(0, "missing version line")),
        }
        Ok(Self {
            file: file.to_string(),
            kind,
            lines: lines.collect(),
        })
    }

    pub fn err(&self, line: usize, msg: impl AsRef<str>) -> FastMultError {
        FastMultError::asset(&self.file, line, msg.as_ref())
    }
}
