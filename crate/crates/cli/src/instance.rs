use std::path::{Path, PathBuf};

use decant_core::{Distribution, Jug, PuzzleInstance, Quadruple};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{what}: expected {expected} comma-separated non-negative integers, got {value:?}")]
    Syntax {
        what: &'static str,
        expected: usize,
        value: String,
    },
    #[error("jug {jug} starts with {content} gallons but holds only {capacity}")]
    Overfull {
        jug: Jug,
        content: u32,
        capacity: u32,
    },
    #[error(transparent)]
    Puzzle(#[from] decant_core::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed puzzle file: {0}")]
    File(#[from] toml::de::Error),
    #[error("{0}")]
    Usage(String),
}

/// On-disk puzzle description, in TOML:
///
/// ```toml
/// capacities = [10, 7, 3]
/// start = [10, 0, 0]
/// target = [5, 0]   # optional, defaults to [d/2, 0]
/// ```
///
/// `start` lists the contents of A, B and C; the total `d` is their sum.
/// `target` is the `(B, C)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PuzzleSpecFile {
    pub capacities: [u32; 3],
    pub start: [u32; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<[u32; 2]>,
}

impl PuzzleSpecFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        Ok(toml::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn to_instance(&self) -> Result<PuzzleInstance, InputError> {
        parse_instance(self.capacities, self.start, self.target)
    }
}

/// Builds a validated instance from jug capacities, starting jug contents and
/// an optional target pair. The total is always the sum of the contents.
pub fn parse_instance(
    capacities: [u32; 3],
    start: [u32; 3],
    target: Option<[u32; 2]>,
) -> Result<PuzzleInstance, InputError> {
    let [a, b, c] = capacities;
    let total: u64 = start.iter().map(|&x| x as u64).sum();
    let d = u32::try_from(total)
        .map_err(|_| InputError::Usage(format!("total {total} is too large")))?;
    let q = Quadruple::new(a, b, c, d)?;
    for (jug, content) in Jug::ALL.into_iter().zip(start) {
        if content > q.capacity(jug) {
            return Err(InputError::Overfull {
                jug,
                content,
                capacity: q.capacity(jug),
            });
        }
    }
    let start = Distribution::new(start[1], start[2]);
    let instance = match target {
        Some([i, j]) => PuzzleInstance::new(q, start, Distribution::new(i, j))?,
        None => PuzzleInstance::halving(q, start)?,
    };
    Ok(instance)
}

/// Parses `"x,y,z"` into exactly `N` integers.
pub fn parse_list<const N: usize>(what: &'static str, value: &str) -> Result<[u32; N], InputError> {
    let syntax = || InputError::Syntax {
        what,
        expected: N,
        value: value.to_owned(),
    };
    let parts = value
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| syntax())?;
    parts.try_into().map_err(|_| syntax())
}
