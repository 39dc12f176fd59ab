use std::path::{Path, PathBuf};

use soclelab::group::io::{construct_family, read_group_file};
use soclelab::group::FiniteGroup;
use soclelab::{Error, Result};

use crate::catalog;

/// Where a group comes from: a family expression or a group file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Family(String),
    File(PathBuf),
}

/// A built group together with the prime suggested by its file header.
pub struct Loaded {
    pub group: FiniteGroup,
    pub prime_hint: Option<u64>,
}

impl Source {
    /// An existing file path wins over a family expression of the same text.
    pub fn resolve(text: &str) -> Source {
        let path = Path::new(text);
        if path.is_file() {
            Source::File(path.to_path_buf())
        } else {
            Source::Family(text.to_string())
        }
    }

    pub fn label(&self) -> String {
        match self {
            Source::Family(s) => s.clone(),
            Source::File(p) => p.display().to_string(),
        }
    }

    pub fn load(&self, max_order: usize) -> Result<Loaded> {
        match self {
            Source::Family(s) => Ok(Loaded {
                group: construct_family(s, max_order)?,
                prime_hint: None,
            }),
            Source::File(p) => {
                let f = read_group_file(p, max_order)?;
                Ok(Loaded {
                    group: f.group,
                    prime_hint: f.prime,
                })
            }
        }
    }
}

/// Expands scan arguments: `builtin`, `synthetic`, a directory (its regular
/// files in name order), a file, or a family expression.
pub fn expand_scan_sources(args: &[String]) -> Result<Vec<Source>> {
    let mut out = Vec::new();
    for a in args {
        match a.as_str() {
            "builtin" => out.extend(
                catalog::BUILTIN
                    .iter()
                    .map(|s| Source::Family(s.to_string())),
            ),
            "synthetic" => out.extend(
                catalog::SYNTHETIC
                    .iter()
                    .map(|s| Source::Family(s.to_string())),
            ),
            _ if Path::new(a).is_dir() => {
                let mut files: Vec<PathBuf> = std::fs::read_dir(a)
                    .map_err(|e| Error::Io(format!("{a}: {e}")))?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.is_file())
                    .collect();
                files.sort();
                out.extend(files.into_iter().map(Source::File));
            }
            _ => out.push(Source::resolve(a)),
        }
    }
    Ok(out)
}
