//! Conjugacy-class data: class sizes, the squaring map, seed
//! McKay–Thompson coefficients and optional character values.
//!
//! # File format
//!
//! A JSON document:
//!
//! ```json
//! {
//!   "group_order": "1",
//!   "classes": [
//!     { "name": "1A", "class_size": "1", "power2": "1A",
//!       "seeds": { "-1": "1", "1": "196884", "2": "21493760",
//!                  "3": "864299970", "5": "333202640600" } }
//!   ],
//!   "characters": { "1": { "1A": "1" } }
//! }
//! ```
//!
//! Every integer is a decimal string. `group_order` and `characters` are
//! optional; when `group_order` is absent it is the sum of class sizes.
//! Seed keys are `-1`, `1`, `2`, `3`, `5` (`\u{2212}1` is accepted for `-1`).
//! The first class listed is the identity class.

mod validate;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qseries::j_coefficients;

pub use validate::{validate_dataset, ValidationReport, Violation};

/// Indices whose coefficients are stored rather than computed.
pub const SEED_INDICES: [i64; 5] = [-1, 1, 2, 3, 5];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRecord {
    pub name: String,
    pub class_size: BigInt,
    /// Name of the class of `g^2`.
    pub power2: String,
    /// `C(g, j)` for `j` in [`SEED_INDICES`].
    pub seeds: BTreeMap<i64, BigInt>,
}

impl ClassRecord {
    pub fn seed(&self, j: i64) -> Option<&BigInt> {
        self.seeds.get(&j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dataset {
    pub classes: Vec<ClassRecord>,
    pub group_order: BigInt,
    /// `chi_k(g)` keyed by irreducible index `k >= 1`, then class name.
    pub characters: Option<BTreeMap<u32, BTreeMap<String, BigInt>>>,
}

#[derive(Debug, Error)]
pub enum DataError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("class {class}: {field} = {value:?} is not a decimal integer")]
    Number { class: String, field: String, value: String },
    #[error("class {class}: seed key {key:?} is not one of -1, 1, 2, 3, 5")]
    SeedKey { class: String, key: String },
    #[error("invalid dataset: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

#[derive(Serialize, Deserialize)]
struct RawClass {
    name: String,
    class_size: String,
    power2: String,
    seeds: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct RawDataset {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group_order: Option<String>,
    classes: Vec<RawClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    characters: Option<BTreeMap<String, BTreeMap<String, String>>>,
}

fn parse_int(class: &str, field: &str, value: &str) -> Result<BigInt, DataError> {
    BigInt::from_str(value.trim()).map_err(|_| DataError::Number {
        class: class.to_string(),
        field: field.to_string(),
        value: value.to_string(),
    })
}

fn parse_seed_key(class: &str, key: &str) -> Result<i64, DataError> {
    let normalized = key.trim().replace('\u{2212}', "-");
    match normalized.parse::<i64>() {
        Ok(j) if SEED_INDICES.contains(&j) => Ok(j),
        _ => Err(DataError::SeedKey { class: class.to_string(), key: key.to_string() }),
    }
}

impl Dataset {
    /// Parses without validating.
    pub fn from_json_str(text: &str) -> Result<Self, DataError> {
        let raw: RawDataset = serde_json::from_str(text).map_err(|e| DataError::Parse(e.to_string()))?;
        let mut classes = Vec::with_capacity(raw.classes.len());
        for c in raw.classes {
            let class_size = parse_int(&c.name, "class_size", &c.class_size)?;
            let mut seeds = BTreeMap::new();
            for (k, v) in &c.seeds {
                let j = parse_seed_key(&c.name, k)?;
                seeds.insert(j, parse_int(&c.name, &format!("seeds[{k}]"), v)?);
            }
            classes.push(ClassRecord { name: c.name, class_size, power2: c.power2, seeds });
        }
        let sum = sum_sizes(&classes);
        let group_order = match raw.group_order {
            Some(s) => parse_int("<dataset>", "group_order", &s)?,
            None => sum,
        };
        let characters = match raw.characters {
            None => None,
            Some(table) => {
                let mut out = BTreeMap::new();
                for (k, row) in table {
                    let index: u32 = k
                        .trim()
                        .parse()
                        .map_err(|_| DataError::Parse(format!("character index {k:?} is not a positive integer")))?;
                    let mut values = BTreeMap::new();
                    for (class, v) in row {
                        let value = parse_int(&class, &format!("characters[{k}]"), &v)?;
                        values.insert(class, value);
                    }
                    out.insert(index, values);
                }
                Some(out)
            }
        };
        Ok(Self { classes, group_order, characters })
    }

    pub fn to_json_string(&self) -> String {
        let raw = RawDataset {
            group_order: Some(self.group_order.to_string()),
            classes: self
                .classes
                .iter()
                .map(|c| RawClass {
                    name: c.name.clone(),
                    class_size: c.class_size.to_string(),
                    power2: c.power2.clone(),
                    seeds: c.seeds.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
                })
                .collect(),
            characters: self.characters.as_ref().map(|table| {
                table
                    .iter()
                    .map(|(k, row)| (k.to_string(), row.iter().map(|(c, v)| (c.clone(), v.to_string())).collect()))
                    .collect()
            }),
        };
        serde_json::to_string_pretty(&raw).expect("dataset serializes")
    }

    pub fn identity(&self) -> Option<&ClassRecord> {
        self.classes.first()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn class(&self, name: &str) -> Option<&ClassRecord> {
        self.classes.iter().find(|c| c.name == name)
    }

    /// Position of the class of `g^2` for every class, in order.
    pub fn power2_indices(&self) -> Option<Vec<usize>> {
        self.classes.iter().map(|c| self.index_of(&c.power2)).collect()
    }

    pub fn sum_of_class_sizes(&self) -> BigInt {
        sum_sizes(&self.classes)
    }

    /// `chi_k(g)`; the trivial character is `1` even without a table.
    pub fn character(&self, k: u32, class: &str) -> Option<BigInt> {
        if let Some(v) = self.characters.as_ref().and_then(|t| t.get(&k)).and_then(|row| row.get(class)) {
            return Some(v.clone());
        }
        (k == 1).then(|| BigInt::from(1))
    }

    /// The trivial group: one class whose seeds are the coefficients of `J`.
    pub fn trivial_group() -> Self {
        let c = j_coefficients(5).expect("J coefficients up to q^5");
        let seeds = SEED_INDICES.iter().map(|&j| (j, c[(j + 1) as usize].clone())).collect();
        Self {
            classes: vec![ClassRecord {
                name: "1A".to_string(),
                class_size: BigInt::from(1),
                power2: "1A".to_string(),
                seeds,
            }],
            group_order: BigInt::from(1),
            characters: None,
        }
    }
}

fn sum_sizes(classes: &[ClassRecord]) -> BigInt {
    classes.iter().map(|c| &c.class_size).sum()
}

/// Reads and validates a dataset file.
pub fn load_dataset(path: impl AsRef<Path>) -> Result<Dataset, DataError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| DataError::Io { path: path.to_path_buf(), source })?;
    let d = Dataset::from_json_str(&text)?;
    let report = validate_dataset(&d);
    if report.is_valid() {
        Ok(d)
    } else {
        Err(DataError::Invalid(report.violations))
    }
}

pub fn save_dataset(d: &Dataset, path: impl AsRef<Path>) -> Result<(), DataError> {
    let path = path.as_ref();
    fs::write(path, d.to_json_string()).map_err(|source| DataError::Io { path: path.to_path_buf(), source })
}
