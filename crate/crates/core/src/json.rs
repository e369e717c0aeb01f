//! JSON formats for semigroups, expansions and free-product forms.
//!
//! A semigroup file looks like
//!
//! ```json
//! {"order": 2, "table": [[0, 1], [1, 1]], "names": ["a", "b"],
//!  "generators": {"a": 0, "b": "b"}}
//! ```
//!
//! `names`, `generators` and `adjoined_identity` are optional. Generator
//! targets may be indices or element names; letters keep file order.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::alphabet::{AlphabetError, GeneratingMap};
use crate::freeprod::AlternatingForm;
use crate::kr::KrExpansion;
use crate::semigroup::{Element, FiniteSemigroup, SemigroupError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("\"order\" is {order} but the table has {rows} rows")]
    OrderMismatch { order: usize, rows: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("generator {letter:?} refers to unknown element {target}")]
    UnknownGenerator { letter: String, target: String },
    #[error("adjoined_identity {0} is not an identity element")]
    NotAnIdentity(Element),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemigroupFile {
    pub order: usize,
    pub table: Vec<Vec<Element>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Map<String, Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjoined_identity: Option<Element>,
}

/// A parsed semigroup with its generating map, if the file gave one.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub semigroup: FiniteSemigroup,
    pub generators: Option<GeneratingMap>,
}

impl Loaded {
    /// The file's generators, or the identity generating map.
    pub fn generating_map(&self) -> GeneratingMap {
        self.generators.clone().unwrap_or_else(|| GeneratingMap::identity(&self.semigroup))
    }
}

pub fn parse_semigroup(text: &str) -> Result<Loaded, JsonError> {
    let file: SemigroupFile = serde_json::from_str(text)?;
    file.into_semigroup()
}

pub fn load_semigroup(path: &Path) -> Result<Loaded, JsonError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| JsonError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_semigroup(&text)
}

impl SemigroupFile {
    pub fn into_semigroup(self) -> Result<Loaded, JsonError> {
        if self.order != self.table.len() {
            return Err(JsonError::OrderMismatch { order: self.order, rows: self.table.len() });
        }
        if let Some(names) = &self.names {
            for (i, n) in names.iter().enumerate() {
                if names[..i].contains(n) {
                    return Err(JsonError::DuplicateName(n.clone()));
                }
            }
        }
        let s = FiniteSemigroup::from_table(self.table, self.names)?;
        let s = match self.adjoined_identity {
            Some(e) if e >= s.order() || s.elements().any(|x| s.mul(e, x) != x || s.mul(x, e) != x) => {
                return Err(JsonError::NotAnIdentity(e));
            }
            flag => s.with_adjoined_identity_flag(flag),
        };
        let generators = match self.generators {
            None => None,
            Some(map) => {
                let mut letters = Vec::with_capacity(map.len());
                let mut targets = Vec::with_capacity(map.len());
                for (letter, value) in map {
                    let target = match &value {
                        Value::Number(n) => n.as_u64().map(|n| n as usize).filter(|&n| n < s.order()),
                        Value::String(name) => s.element_by_name(name),
                        _ => None,
                    };
                    let Some(target) = target else {
                        return Err(JsonError::UnknownGenerator { letter, target: value.to_string() });
                    };
                    letters.push(letter);
                    targets.push(target);
                }
                Some(GeneratingMap::new(&s, letters, targets)?)
            }
        };
        Ok(Loaded { semigroup: s, generators })
    }

    pub fn from_semigroup(s: &FiniteSemigroup, generators: Option<&GeneratingMap>) -> Self {
        let generators = generators.map(|g| {
            g.letters().iter().cloned().zip(g.targets().iter().map(|&t| Value::from(t))).collect::<Map<_, _>>()
        });
        Self {
            order: s.order(),
            table: s.table_rows(),
            names: s.names().map(<[String]>::to_vec),
            generators,
            adjoined_identity: s.adjoined_identity(),
        }
    }
}

/// The expansion as a semigroup file (generators = `φ^KR` on letters) plus
/// its projection and representatives.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpansionFile {
    #[serde(flatten)]
    pub semigroup: SemigroupFile,
    pub projection: Vec<Element>,
    pub letter_map: Map<String, Value>,
    pub representatives: Vec<String>,
}

impl ExpansionFile {
    pub fn new(exp: &KrExpansion) -> Self {
        let letter_map = exp.letter_map();
        let base = exp.base_map();
        Self {
            semigroup: SemigroupFile::from_semigroup(exp.result(), Some(letter_map)),
            projection: exp.projection().map().to_vec(),
            letter_map: letter_map.letters().iter().cloned().zip(letter_map.targets().iter().map(|&t| Value::from(t))).collect(),
            representatives: exp.representatives().iter().map(|w| base.format_word(w.letters())).collect(),
        }
    }
}

/// `[[factor, element], ...]`.
pub fn form_to_json(form: &AlternatingForm) -> Value {
    Value::Array(form.entries().iter().map(|&(f, x)| Value::from(vec![f, x])).collect())
}

pub fn form_from_json(value: &Value) -> Result<Vec<(usize, Element)>, JsonError> {
    let pairs: Vec<(usize, Element)> = serde_json::from_value(value.clone())?;
    Ok(pairs)
}
