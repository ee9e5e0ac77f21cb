//! Primitive `W(1+∞)` modules and their tensor products.
//!
//! A primitive module is a product of factors `L_n(κ(λ), s)` whose `s`
//! values are pairwise non-congruent mod ℤ. Since `(λ + l·1, s + l)` gives
//! the same module for every integer `l`, each factor is stored with
//! `s ∈ [0, 1)`, and factors are sorted by `s`; two modules are isomorphic
//! exactly when their canonical forms agree.
//!
//! Tensor products only interact inside a shared congruence class, where
//! they follow the `gl∞` rule with the branching multiplicities of
//! [`crate::lr`]; classes present on one side pass through.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::glhat::lambda_plus;
use crate::lr::{induced_window, EnumerationBox};
use crate::partitions::{normalize_generalized, GeneralizedPartition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WError {
    #[error("factor level must be positive")]
    ZeroLevel,
    #[error("exponents {} and {} are congruent mod Z", .0.0, .0.1)]
    CongruentExponents(Box<(BigRational, BigRational)>),
    #[error("module is not in canonical form: {0}")]
    NonCanonicalInput(String),
    #[error("multiplicities sum to {sum}, central charge is {charge}")]
    ChargeMismatch { sum: i64, charge: i64 },
    #[error("multiplicity overflow")]
    Overflow,
    #[error("cannot parse module literal `{0}`")]
    Parse(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

impl WError {
    pub fn name(&self) -> &'static str {
        match self {
            WError::ZeroLevel => "ZeroLevel",
            WError::CongruentExponents(..) => "CongruentExponents",
            WError::NonCanonicalInput(_) => "NonCanonicalInput",
            WError::ChargeMismatch { .. } => "ChargeMismatch",
            WError::Overflow => "Overflow",
            WError::Parse(_) => "ParseError",
            WError::Partition(e) => e.name(),
        }
    }
}

/// One factor `L_n(κ(λ), s)`, `n = width(λ) ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WFactor {
    s: BigRational,
    lam: GeneralizedPartition,
}

impl WFactor {
    pub fn new(lam: GeneralizedPartition, s: BigRational) -> Result<Self, WError> {
        if lam.width() == 0 {
            return Err(WError::ZeroLevel);
        }
        Ok(WFactor { s, lam })
    }

    pub fn level(&self) -> usize {
        self.lam.width()
    }

    pub fn lam(&self) -> &GeneralizedPartition {
        &self.lam
    }

    pub fn s(&self) -> &BigRational {
        &self.s
    }

    /// The same module with `s` moved into `[0, 1)`.
    pub fn reduced(&self) -> WFactor {
        let l = self.s.floor().to_integer();
        let l_small = l.to_i64().expect("shift fits in i64");
        WFactor { s: &self.s - BigRational::from_integer(l), lam: self.lam.shift(-l_small) }
    }

    fn class(&self) -> BigRational {
        self.s.fract_positive()
    }
}

trait FractPositive {
    fn fract_positive(&self) -> BigRational;
}

impl FractPositive for BigRational {
    fn fract_positive(&self) -> BigRational {
        self - self.floor()
    }
}

impl fmt::Display for WFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L(n={}, lam=[", self.level())?;
        for (i, p) in self.lam.parts().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "], s={})", self.s)
    }
}

/// A finite product of factors; empty means the trivial module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveWModule {
    factors: Vec<WFactor>,
}

impl PrimitiveWModule {
    /// Factors as given, not yet canonicalized.
    pub fn from_factors(factors: Vec<WFactor>) -> Self {
        PrimitiveWModule { factors }
    }

    pub fn trivial() -> Self {
        PrimitiveWModule::default()
    }

    pub fn factors(&self) -> &[WFactor] {
        &self.factors
    }

    pub fn central_charge(&self) -> usize {
        self.factors.iter().map(WFactor::level).sum()
    }

    pub fn is_canonical(&self) -> bool {
        let in_domain = self.factors.iter().all(|f| !f.s.is_negative() && f.s < BigRational::one());
        let sorted = self.factors.windows(2).all(|w| w[0].s < w[1].s);
        in_domain && sorted
    }

    fn check_canonical(&self) -> Result<(), WError> {
        if self.is_canonical() {
            Ok(())
        } else {
            Err(WError::NonCanonicalInput(self.to_string()))
        }
    }
}

impl fmt::Display for PrimitiveWModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

pub fn parse_rational(s: &str) -> Result<BigRational, WError> {
    let t = s.trim();
    let bad = || WError::Parse(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for WFactor {
    type Err = WError;

    /// `L(n=2, lam=[1,0], s=1/3)`; `n` may be omitted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WError::Parse(s.to_string());
        let body = s
            .trim()
            .strip_prefix("L(")
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (mut n, mut lam, mut shift) = (None, None, None);
        for field in split_top_level(body, ',') {
            let (key, value) = field.split_once('=').ok_or_else(bad)?;
            let value = value.trim();
            match key.trim() {
                "n" => n = Some(value.parse::<usize>().map_err(|_| bad())?),
                "lam" => {
                    let inner = value.strip_prefix('[').and_then(|v| v.strip_suffix(']')).ok_or_else(bad)?;
                    let parts = if inner.trim().is_empty() {
                        Vec::new()
                    } else {
                        inner
                            .split(',')
                            .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                            .collect::<Result<Vec<_>, _>>()?
                    };
                    lam = Some(parts);
                }
                "s" => shift = Some(parse_rational(value)?),
                _ => return Err(bad()),
            }
        }
        let parts = lam.ok_or_else(bad)?;
        let width = n.unwrap_or(parts.len());
        WFactor::new(normalize_generalized(&parts, width)?, shift.ok_or_else(bad)?)
    }
}

impl FromStr for PrimitiveWModule {
    type Err = WError;

    /// Factors joined by `*`; `1` or an empty string is the trivial module.
    /// The result is not canonicalized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "1" {
            return Ok(PrimitiveWModule::trivial());
        }
        let factors = split_top_level(t, '*')
            .into_iter()
            .map(str::parse)
            .collect::<Result<Vec<WFactor>, _>>()?;
        Ok(PrimitiveWModule::from_factors(factors))
    }
}

/// Moves every `s` into `[0, 1)` and sorts the factors.
pub fn canonicalize(m: &PrimitiveWModule) -> Result<PrimitiveWModule, WError> {
    let mut factors: Vec<WFactor> = m.factors.iter().map(WFactor::reduced).collect();
    factors.sort();
    for w in factors.windows(2) {
        if w[0].s == w[1].s {
            let originals: Vec<&WFactor> = m.factors.iter().filter(|f| f.class() == w[0].s).collect();
            return Err(WError::CongruentExponents(Box::new((originals[0].s.clone(), originals[1].s.clone()))));
        }
    }
    Ok(PrimitiveWModule { factors })
}

pub fn is_isomorphic(a: &PrimitiveWModule, b: &PrimitiveWModule) -> Result<bool, WError> {
    Ok(canonicalize(a)? == canonicalize(b)?)
}

/// Exponents `r` with positive integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExponentMultiset {
    entries: BTreeMap<BigRational, u64>,
}

impl ExponentMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, r: BigRational, mult: u64) {
        if mult > 0 {
            *self.entries.entry(r).or_insert(0) += mult;
        }
    }

    pub fn entries(&self) -> &BTreeMap<BigRational, u64> {
        &self.entries
    }

    pub fn charge(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Multiplicity summed over the congruence class of `class` mod ℤ.
    pub fn class_total(&self, class: &BigRational) -> u64 {
        let c = class.fract_positive();
        self.entries
            .iter()
            .filter(|(r, _)| r.fract_positive() == c)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn union(&self, other: &ExponentMultiset) -> ExponentMultiset {
        let mut out = self.clone();
        for (r, &m) in &other.entries {
            out.insert(r.clone(), m);
        }
        out
    }

    pub fn delta(&self) -> DeltaSeries {
        DeltaSeries {
            exponents: self.entries.iter().map(|(r, &m)| (r.clone(), m as i64)).collect(),
            charge: self.charge() as i64,
        }
    }
}

/// A factor `(n, λ, s)` has exponents `s − j` with multiplicity `h_j`, where
/// `h` belongs to `Λ̂_{λ_1} + ⋯ + Λ̂_{λ_n}`.
pub fn exponents(m: &PrimitiveWModule) -> ExponentMultiset {
    let mut out = ExponentMultiset::new();
    for factor in &m.factors {
        let w = lambda_plus(&factor.lam);
        for (&j, &hj) in w.h() {
            out.insert(&factor.s - BigRational::from_integer(j.into()), hj as u64);
        }
    }
    out
}

/// `Δ(x) = (Σ_i m_i e^{r_i x} − c) / (e^x − 1) = Σ_n ξ_n xⁿ/n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSeries {
    exponents: BTreeMap<BigRational, i64>,
    charge: i64,
}

fn factorials(n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    for k in 1..=n {
        acc *= k;
        out.push(acc.clone());
    }
    out
}

impl DeltaSeries {
    pub fn new(exponents: BTreeMap<BigRational, i64>, charge: i64) -> Result<Self, WError> {
        let sum: i64 = exponents.values().sum();
        if sum != charge {
            return Err(WError::ChargeMismatch { sum, charge });
        }
        Ok(DeltaSeries { exponents, charge })
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn exponents(&self) -> &BTreeMap<BigRational, i64> {
        &self.exponents
    }

    /// `ξ_0 … ξ_upto` by exact power-series division.
    pub fn xi(&self, upto: usize) -> Vec<BigRational> {
        let fact = factorials(upto + 2);
        // numerator / x: coefficient n is Σ m r^{n+1} / (n+1)!
        let numer: Vec<BigRational> = (0..=upto)
            .map(|n| {
                let s: BigRational = self
                    .exponents
                    .iter()
                    .map(|(r, &m)| r.pow((n + 1) as i32) * BigRational::from_integer(m.into()))
                    .sum();
                s / BigRational::from_integer(fact[n + 1].clone())
            })
            .collect();
        // (e^x − 1)/x: coefficient n is 1/(n+1)!
        let denom: Vec<BigRational> = (0..=upto)
            .map(|n| BigRational::new(BigInt::one(), fact[n + 1].clone()))
            .collect();
        let mut quot: Vec<BigRational> = Vec::with_capacity(upto + 1);
        for n in 0..=upto {
            let mut acc = numer[n].clone();
            for k in 1..=n {
                acc -= &denom[k] * &quot[n - k];
            }
            quot.push(acc);
        }
        quot.into_iter()
            .enumerate()
            .map(|(n, q)| q * BigRational::from_integer(fact[n].clone()))
            .collect()
    }

    /// `ξ_n = Σ_i m_i (B_{n+1}(r_i) − B_{n+1}(0)) / (n+1)` with Bernoulli
    /// polynomials; independent of [`DeltaSeries::xi`].
    pub fn xi_bernoulli(&self, upto: usize) -> Vec<BigRational> {
        let b = bernoulli_numbers(upto + 1);
        let binom = |n: usize, k: usize| -> BigInt {
            let mut acc = BigInt::one();
            for i in 0..k {
                acc = acc * (n - i) / (i + 1);
            }
            acc
        };
        (0..=upto)
            .map(|n| {
                let deg = n + 1;
                let mut total = BigRational::zero();
                for (r, &m) in &self.exponents {
                    let mut diff = BigRational::zero();
                    for (k, bk) in b.iter().enumerate().take(deg) {
                        diff += bk * BigRational::from_integer(binom(deg, k)) * r.pow((deg - k) as i32);
                    }
                    total += diff * BigRational::from_integer(m.into());
                }
                total / BigRational::from_integer(deg.into())
            })
            .collect()
    }
}

/// `B_0 … B_n` with `B_1 = −1/2`.
fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=n {
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(m+1, k)
        for (k, bk) in b.iter().enumerate() {
            acc += bk * BigRational::from_integer(binom.clone());
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b.push(-acc / BigRational::from_integer((m + 1).into()));
    }
    b
}

/// A tensor product decomposition, complete inside `bx` for each shared class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WDecomposition {
    pub shared_classes: Vec<BigRational>,
    pub bx: EnumerationBox,
    pub terms: BTreeMap<PrimitiveWModule, u64>,
}

impl WDecomposition {
    pub fn to_json(&self) -> WDecompositionJson {
        WDecompositionJson {
            classes: self.shared_classes.iter().map(|s| s.to_string()).collect(),
            bx: self.bx,
            terms: self
                .terms
                .iter()
                .map(|(m, &mult)| WTermJson {
                    factors: m
                        .factors
                        .iter()
                        .map(|f| WFactorJson { n: f.level(), lam: f.lam.parts().to_vec(), s: f.s.to_string() })
                        .collect(),
                    mult,
                })
                .collect(),
        }
    }
}

/// Wire form of a [`WDecomposition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WDecompositionJson {
    pub classes: Vec<String>,
    #[serde(rename = "box")]
    pub bx: EnumerationBox,
    pub terms: Vec<WTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WTermJson {
    pub factors: Vec<WFactorJson>,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WFactorJson {
    pub n: usize,
    pub lam: Vec<i64>,
    pub s: String,
}

/// Decomposes `a ⊗ b` for canonical primitive modules.
pub fn tensor_w(a: &PrimitiveWModule, b: &PrimitiveWModule, bx: EnumerationBox) -> Result<WDecomposition, WError> {
    a.check_canonical()?;
    b.check_canonical()?;
    let b_by_class: BTreeMap<&BigRational, &WFactor> = b.factors.iter().map(|f| (&f.s, f)).collect();
    let shared: Vec<(&WFactor, &WFactor)> = a
        .factors
        .iter()
        .filter_map(|fa| b_by_class.get(&fa.s).map(|fb| (fa, *fb)))
        .collect();

    let mut passthrough: Vec<WFactor> = a
        .factors
        .iter()
        .chain(&b.factors)
        .filter(|f| !shared.iter().any(|(fa, _)| fa.s == f.s))
        .cloned()
        .collect();
    passthrough.sort();

    if shared.is_empty() {
        return Ok(WDecomposition {
            shared_classes: Vec::new(),
            bx,
            terms: BTreeMap::from([(PrimitiveWModule { factors: passthrough }, 1)]),
        });
    }

    let expansions: Vec<(BigRational, Vec<(GeneralizedPartition, u64)>)> = shared
        .iter()
        .map(|(fa, fb)| (fa.s.clone(), induced_window(&fa.lam, &fb.lam, bx).into_iter().collect()))
        .collect();

    let mut terms = BTreeMap::new();
    let mut choice = vec![0usize; expansions.len()];
    if expansions.iter().all(|(_, e)| !e.is_empty()) {
        'outer: loop {
            let mut factors = passthrough.clone();
            let mut mult: u64 = 1;
            for (slot, (s, options)) in choice.iter().zip(&expansions) {
                let (lam, c) = &options[*slot];
                factors.push(WFactor { s: s.clone(), lam: lam.clone() });
                mult = mult.checked_mul(*c).ok_or(WError::Overflow)?;
            }
            factors.sort();
            *terms.entry(PrimitiveWModule { factors }).or_insert(0) += mult;

            for (slot, (_, options)) in choice.iter_mut().zip(&expansions).rev() {
                *slot += 1;
                if *slot < options.len() {
                    continue 'outer;
                }
                *slot = 0;
            }
            break;
        }
    }
    Ok(WDecomposition { shared_classes: expansions.into_iter().map(|(s, _)| s).collect(), bx, terms })
}

/// `num/den` in lowest terms.
pub fn small_rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        small_rational(n, d)
    }

    fn g(parts: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(parts.to_vec()).unwrap()
    }

    fn factor(parts: &[i64], s: BigRational) -> WFactor {
        WFactor::new(g(parts), s).unwrap()
    }

    fn module(lit: &str) -> PrimitiveWModule {
        canonicalize(&lit.parse().unwrap()).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let m = PrimitiveWModule::from_factors(vec![factor(&[1, 0], q(7, 3))]);
        let c = canonicalize(&m).unwrap();
        assert_eq!(c.factors(), &[factor(&[-1, -2], q(1, 3))]);

        let m = PrimitiveWModule::from_factors(vec![factor(&[0], q(1, 2))]);
        assert_eq!(canonicalize(&m).unwrap(), m);

        let m = PrimitiveWModule::from_factors(vec![factor(&[0], q(1, 3)), factor(&[0], q(4, 3))]);
        assert_eq!(canonicalize(&m), Err(WError::CongruentExponents(Box::new((q(1, 3), q(4, 3))))));

        let neg = PrimitiveWModule::from_factors(vec![factor(&[0], q(-1, 3))]);
        assert_eq!(canonicalize(&neg).unwrap().factors(), &[factor(&[1], q(2, 3))]);
        assert_eq!(exponents(&neg), exponents(&canonicalize(&neg).unwrap()));
    }

    #[test]
    fn literal_parsing() {
        let m: PrimitiveWModule = "L(n=2, lam=[1,0], s=1/3) * L(n=1, lam=[0], s=1/2)".parse().unwrap();
        assert_eq!(m.factors().len(), 2);
        assert_eq!(m.to_string(), "L(n=2, lam=[1,0], s=1/3) * L(n=1, lam=[0], s=1/2)");
        let padded: WFactor = "L(n=3, lam=[2], s=0)".parse().unwrap();
        assert_eq!(padded.lam().parts(), &[2, 0, 0]);
        assert_eq!("1".parse::<PrimitiveWModule>().unwrap(), PrimitiveWModule::trivial());
        assert!("L(n=0, lam=[], s=0)".parse::<PrimitiveWModule>().is_err());
        assert!("L(lam=[0,1], s=0)".parse::<PrimitiveWModule>().is_err());
        assert!("L(n=1, lam=[0])".parse::<PrimitiveWModule>().is_err());
        assert!("L(n=1, lam=[0], s=1/0)".parse::<PrimitiveWModule>().is_err());
    }

    #[test]
    fn exponent_examples() {
        let s = q(2, 5);
        let e = exponents(&PrimitiveWModule::from_factors(vec![factor(&[0], s.clone())]));
        assert_eq!(e.entries(), &BTreeMap::from([(s.clone(), 1)]));
        assert_eq!(e.charge(), 1);

        let e = exponents(&PrimitiveWModule::from_factors(vec![factor(&[2, 0], s.clone())]));
        assert_eq!(e.entries(), &BTreeMap::from([(&s - q(2, 1), 1), (s.clone(), 1)]));
        assert_eq!(e.charge(), 2);

        let e = exponents(&module("L(n=1, lam=[0], s=0) * L(n=1, lam=[0], s=1/2)"));
        assert_eq!(e.entries(), &BTreeMap::from([(q(0, 1), 1), (q(1, 2), 1)]));
    }

    #[test]
    fn exponents_invariant_under_relabeling() {
        let a = PrimitiveWModule::from_factors(vec![factor(&[3, 1, -2], q(5, 4))]);
        let b = PrimitiveWModule::from_factors(vec![factor(&[4, 2, -1], q(9, 4))]);
        assert_eq!(exponents(&a), exponents(&b));
        assert_eq!(exponents(&a), exponents(&canonicalize(&a).unwrap()));
    }

    #[test]
    fn xi_examples() {
        let s = q(1, 2);
        let d = DeltaSeries::new(BTreeMap::from([(s.clone(), 1)]), 1).unwrap();
        let xi = d.xi(1);
        assert_eq!(xi[0], s);
        assert_eq!(xi[1], &s * (&s - q(1, 1)) / q(2, 1));
        assert_eq!(xi[1], q(-1, 8));

        let vacuum = DeltaSeries::new(BTreeMap::from([(q(0, 1), 1)]), 1).unwrap();
        assert!(vacuum.xi(12).iter().all(Zero::is_zero));
        assert!(vacuum.xi_bernoulli(12).iter().all(Zero::is_zero));

        assert_eq!(
            DeltaSeries::new(BTreeMap::from([(q(0, 1), 2)]), 1),
            Err(WError::ChargeMismatch { sum: 2, charge: 1 })
        );
    }

    #[test]
    fn xi_integer_exponent_is_power_sum() {
        // e^{3x}-1 over e^x-1 is 1 + e^x + e^{2x}: ξ_n = 0^n + 1^n + 2^n
        let d = DeltaSeries::new(BTreeMap::from([(q(3, 1), 1)]), 1).unwrap();
        let xi = d.xi(6);
        for (n, v) in xi.iter().enumerate() {
            let expected = (0..3i64).map(|j| j.pow(n as u32)).sum::<i64>();
            assert_eq!(*v, q(expected, 1), "n = {n}");
        }
        assert_eq!(d.xi_bernoulli(6), xi);
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(6);
        assert_eq!(b[..5], [q(1, 1), q(-1, 2), q(1, 6), q(0, 1), q(-1, 30)]);
        assert_eq!(b[6], q(1, 42));
    }

    #[test]
    fn isomorphism_examples() {
        let lam = g(&[2, 0, -1]);
        let a = PrimitiveWModule::from_factors(vec![WFactor::new(lam.clone(), q(1, 3)).unwrap()]);
        let b = PrimitiveWModule::from_factors(vec![WFactor::new(lam.shift(1), q(4, 3)).unwrap()]);
        assert!(is_isomorphic(&a, &b).unwrap());
        let c = PrimitiveWModule::from_factors(vec![WFactor::new(g(&[2, 1, -1]), q(1, 3)).unwrap()]);
        assert!(!is_isomorphic(&a, &c).unwrap());
        let x: PrimitiveWModule = "L(n=1, lam=[0], s=1/2) * L(n=1, lam=[0], s=1/3)".parse().unwrap();
        let y: PrimitiveWModule = "L(n=1, lam=[0], s=1/3) * L(n=1, lam=[0], s=1/2)".parse().unwrap();
        assert!(is_isomorphic(&x, &y).unwrap());
    }

    #[test]
    fn tensor_disjoint_classes() {
        let a = module("L(n=1, lam=[0], s=1/3)");
        let b = module("L(n=1, lam=[0], s=1/2)");
        let d = tensor_w(&a, &b, EnumerationBox::symmetric(2)).unwrap();
        assert!(d.shared_classes.is_empty());
        assert_eq!(d.terms, BTreeMap::from([(module("L(n=1, lam=[0], s=1/3) * L(n=1, lam=[0], s=1/2)"), 1)]));
    }

    #[test]
    fn tensor_shared_class() {
        let a = module("L(n=1, lam=[0], s=1/3)");
        let d = tensor_w(&a, &a, EnumerationBox::symmetric(2)).unwrap();
        let expected: BTreeMap<_, _> = (0..=2)
            .map(|k| (PrimitiveWModule { factors: vec![factor(&[k, -k], q(1, 3))] }, 1))
            .collect();
        assert_eq!(d.terms, expected);
        assert_eq!(d.shared_classes, vec![q(1, 3)]);
    }

    #[test]
    fn tensor_mixed_classes() {
        let a = module("L(n=1, lam=[0], s=0) * L(n=1, lam=[1], s=1/2)");
        let b = module("L(n=1, lam=[0], s=1/2)");
        let d = tensor_w(&a, &b, EnumerationBox::symmetric(2)).unwrap();
        let expected: BTreeMap<_, _> = [[1, 0], [2, -1]]
            .iter()
            .map(|lam| (PrimitiveWModule { factors: vec![factor(&[0], q(0, 1)), factor(lam, q(1, 2))] }, 1))
            .collect();
        assert_eq!(d.terms, expected);
    }

    #[test]
    fn tensor_rejects_raw_input() {
        let raw: PrimitiveWModule = "L(n=1, lam=[0], s=4/3)".parse().unwrap();
        let ok = module("L(n=1, lam=[0], s=0)");
        assert!(matches!(tensor_w(&raw, &ok, EnumerationBox::symmetric(1)), Err(WError::NonCanonicalInput(_))));
        let unsorted = PrimitiveWModule::from_factors(vec![factor(&[0], q(1, 2)), factor(&[0], q(1, 3))]);
        assert!(tensor_w(&ok, &unsorted, EnumerationBox::symmetric(1)).is_err());
    }

    #[test]
    fn tensor_with_trivial() {
        let a = module("L(n=2, lam=[1,-1], s=1/4)");
        let d = tensor_w(&a, &PrimitiveWModule::trivial(), EnumerationBox::symmetric(1)).unwrap();
        assert_eq!(d.terms, BTreeMap::from([(a, 1)]));
    }
}
