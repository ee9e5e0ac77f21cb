//! JSON payloads printed by `--json`. Every type parses back into itself and
//! re-serializes to the same bytes.

use serde::{Deserialize, Serialize};

pub use seesaw_core::glhat::{GlDecompositionJson, TermJson};
pub use seesaw_core::winfinity::{WDecompositionJson, WFactorJson, WTermJson};
use seesaw_core::{EnumerationBox, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrJson {
    pub lam: Vec<i64>,
    pub mu: Vec<i64>,
    pub nu: Vec<i64>,
    pub coefficient: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictJson {
    pub lam: Vec<i64>,
    pub m: usize,
    pub n: usize,
    pub terms: Vec<RestrictTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictTermJson {
    pub mu: Vec<i64>,
    pub nu: Vec<i64>,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentsJson {
    pub charge: u64,
    pub exponents: Vec<ExponentJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentJson {
    pub r: String,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiJson {
    pub charge: u64,
    pub xi: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoJson {
    pub a: String,
    pub b: String,
    pub isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub lam: Vec<i64>,
    pub series: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharJson {
    pub sign: Sign,
    pub order: usize,
    pub lam: Vec<i64>,
    pub series: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockJson {
    pub n: usize,
    pub sign: Sign,
    pub order: usize,
    pub window: u32,
    pub residual_terms: Vec<usize>,
    pub passed: bool,
    pub labels: Vec<SeriesJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorCharJson {
    pub mu: Vec<i64>,
    pub nu: Vec<i64>,
    pub sign: Sign,
    pub order: usize,
    #[serde(rename = "box")]
    pub bx: EnumerationBox,
    pub lhs: Vec<i64>,
    pub terms: Vec<TensorCharTermJson>,
    pub residual: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorCharTermJson {
    pub lam: Vec<i64>,
    pub mult: u64,
    pub series: Vec<i64>,
}
