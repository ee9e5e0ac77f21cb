//! Partitions and generalized partitions.
//!
//! A [`GeneralizedPartition`] is a weakly decreasing integer tuple of a fixed
//! width `N`; it labels the rational irreducible representations of `GL(N)`
//! and, through the maps of [`crate::glhat`], the highest weights of the
//! modules this crate decomposes. Widths are never inferred: `2:[1,0]` and
//! `3:[1,0,0]` are different labels.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<i64>),
    #[error("padding {parts:?} with zeros to width {width} breaks the order; supply all {width} parts")]
    PadViolation { parts: Vec<i64>, width: usize },
    #[error("{len} parts do not fit in width {width}")]
    TooManyParts { len: usize, width: usize },
    #[error("partition parts must be non-negative, got {0:?}")]
    NegativePart(Vec<i64>),
    #[error("cannot parse partition literal `{0}`")]
    Parse(String),
}

impl PartitionError {
    pub fn name(&self) -> &'static str {
        match self {
            PartitionError::NotWeaklyDecreasing(_) => "NotWeaklyDecreasing",
            PartitionError::PadViolation { .. } => "PadViolation",
            PartitionError::TooManyParts { .. } => "TooManyParts",
            PartitionError::NegativePart(_) => "NegativePart",
            PartitionError::Parse(_) => "ParseError",
        }
    }
}

fn is_weakly_decreasing(parts: &[i64]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// An ordinary partition: non-negative, weakly decreasing, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self, PartitionError> {
        if !is_weakly_decreasing(&parts) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        if parts.last().is_some_and(|&p| p < 0) {
            return Err(PartitionError::NegativePart(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Pads with zeros to `width`.
    pub fn to_generalized(&self, width: usize) -> Result<GeneralizedPartition, PartitionError> {
        if self.len() > width {
            return Err(PartitionError::TooManyParts { len: self.len(), width });
        }
        let mut parts = self.0.clone();
        parts.resize(width, 0);
        Ok(GeneralizedPartition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// An element of `P^N_+`: a weakly decreasing integer `N`-tuple.
///
/// The width is part of the identity of the value. Width zero is admitted and
/// has exactly one value, the empty tuple.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGeneralized", into = "RawGeneralized")]
pub struct GeneralizedPartition(Vec<i64>);

#[derive(Serialize, Deserialize)]
struct RawGeneralized {
    width: usize,
    parts: Vec<i64>,
}

impl TryFrom<RawGeneralized> for GeneralizedPartition {
    type Error = PartitionError;

    fn try_from(raw: RawGeneralized) -> Result<Self, Self::Error> {
        normalize_generalized(&raw.parts, raw.width)
    }
}

impl From<GeneralizedPartition> for RawGeneralized {
    fn from(g: GeneralizedPartition) -> Self {
        RawGeneralized { width: g.width(), parts: g.0 }
    }
}

/// Validates `raw` as an element of `P^width_+`, padding with trailing zeros.
pub fn normalize_generalized(raw: &[i64], width: usize) -> Result<GeneralizedPartition, PartitionError> {
    if raw.len() > width {
        return Err(PartitionError::TooManyParts { len: raw.len(), width });
    }
    if !is_weakly_decreasing(raw) {
        return Err(PartitionError::NotWeaklyDecreasing(raw.to_vec()));
    }
    if raw.len() < width && raw.last().is_some_and(|&p| p < 0) {
        return Err(PartitionError::PadViolation { parts: raw.to_vec(), width });
    }
    let mut parts = raw.to_vec();
    parts.resize(width, 0);
    Ok(GeneralizedPartition(parts))
}

impl GeneralizedPartition {
    /// Full-width constructor; the tuple length is the width.
    pub fn new(parts: Vec<i64>) -> Result<Self, PartitionError> {
        if !is_weakly_decreasing(&parts) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        Ok(GeneralizedPartition(parts))
    }

    /// The single label of width zero.
    pub fn trivial() -> Self {
        GeneralizedPartition(Vec::new())
    }

    /// `(k, k, ..., k)` of the given width.
    pub fn constant(width: usize, k: i64) -> Self {
        GeneralizedPartition(vec![k; width])
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<i64> {
        self.0
    }

    /// Sum of the parts.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn first(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn is_polynomial(&self) -> bool {
        self.last().is_none_or(|p| p >= 0)
    }

    /// `λ + k·1`, the label of `V(λ) ⊗ det^k`.
    pub fn shift(&self, k: i64) -> Self {
        GeneralizedPartition(self.0.iter().map(|p| p + k).collect())
    }

    /// Concatenation; the result is a label only if the order is kept.
    pub fn concat(&self, other: &GeneralizedPartition) -> Result<Self, PartitionError> {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        GeneralizedPartition::new(parts)
    }

    /// Lies inside the window `lo ≤ λ_N ≤ λ_1 ≤ hi`.
    pub fn within(&self, lo: i64, hi: i64) -> bool {
        self.first().is_none_or(|f| f <= hi) && self.last().is_none_or(|l| l >= lo)
    }

    /// Drops trailing zeros; `None` if a part is negative.
    pub fn to_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }
}

impl fmt::Display for GeneralizedPartition {
    /// The text literal `N:[a,b,c]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[", self.width())?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl GeneralizedPartition {
    /// Tuple form `(a,b,c)`, used in decomposition listings.
    pub fn tuple(&self) -> String {
        struct T<'a>(&'a [i64]);
        impl fmt::Display for T<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_tuple(f, self.0)
            }
        }
        T(&self.0).to_string()
    }
}

fn parse_list(s: &str) -> Result<Vec<i64>, PartitionError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| PartitionError::Parse(s.to_string())))
        .collect()
}

impl FromStr for GeneralizedPartition {
    type Err = PartitionError;

    /// Accepts `N:[a,b]` (padded to width `N`), `[a,b]` and `a,b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (width, body) = match t.split_once(':') {
            Some((w, rest)) => {
                let w = w.trim().parse::<usize>().map_err(|_| PartitionError::Parse(s.to_string()))?;
                (Some(w), rest.trim())
            }
            None => (None, t),
        };
        let body = match (body.strip_prefix('['), width) {
            (Some(b), _) => b.strip_suffix(']').ok_or_else(|| PartitionError::Parse(s.to_string()))?,
            (None, None) => body,
            (None, Some(_)) => return Err(PartitionError::Parse(s.to_string())),
        };
        let parts = parse_list(body)?;
        let width = width.unwrap_or(parts.len());
        normalize_generalized(&parts, width)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let body = t.strip_prefix('[').and_then(|b| b.strip_suffix(']')).unwrap_or(t);
        Partition::new(parse_list(body)?)
    }
}

/// Splits `λ` into a polynomial label and the twist: `λ = result − k·1`.
pub fn polynomial_reduction(lam: &GeneralizedPartition) -> (Partition, i64) {
    let k = lam.last().map_or(0, |l| (-l).max(0));
    let shifted = lam.shift(k);
    let partition = shifted.to_partition().expect("shifted label is polynomial");
    (partition, k)
}

/// Dimension of the `GL(N)` irreducible with highest weight `λ`, by Weyl's
/// product formula. Width zero gives 1.
pub fn weyl_dimension(lam: &GeneralizedPartition) -> BigUint {
    let parts = lam.parts();
    let n = parts.len();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in i + 1..n {
            let gap = parts[i] - parts[j] + (j - i) as i64;
            num *= BigUint::from(gap as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    num / den
}

/// All labels of the given width with parts in `[lo, hi]`, in ascending lex
/// order, optionally restricted to a fixed part sum.
pub fn labels_in_window(width: usize, lo: i64, hi: i64, sum: Option<i64>) -> Vec<GeneralizedPartition> {
    fn rec(
        out: &mut Vec<GeneralizedPartition>,
        cur: &mut Vec<i64>,
        width: usize,
        lo: i64,
        cap: i64,
        remaining: Option<i64>,
    ) {
        let left = width - cur.len();
        if left == 0 {
            if remaining.is_none_or(|r| r == 0) {
                out.push(GeneralizedPartition(cur.clone()));
            }
            return;
        }
        for v in lo..=cap {
            if let Some(r) = remaining {
                let rest = (left - 1) as i64;
                // remaining parts lie in [lo, v]
                if v + rest * lo > r || v + rest * v < r {
                    continue;
                }
            }
            cur.push(v);
            rec(out, cur, width, lo, v, remaining.map(|r| r - v));
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo > hi && width > 0 {
        return out;
    }
    rec(&mut out, &mut Vec::with_capacity(width), width, lo, hi, sum);
    out
}
