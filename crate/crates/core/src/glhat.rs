//! Highest weights of `gl∞` at integral central charge and the tensor
//! categories built from them.
//!
//! A weight is stored either as raw data ([`GlHatWeight`]: the charge `c` and
//! the values `h_i = λ_i − λ_{i+1} + δ_{i,0} c`) or canonically as a
//! [`PrimitiveLabel`] `(sign, N, λ)`. The maps [`lambda_plus`] and
//! [`lambda_minus`] go from labels to weights, [`classify_primitive`] goes
//! back.
//!
//! Tensor products of primitive modules decompose with the branching
//! multiplicities `C^λ_{μν}` of `GL(M+N) ↓ GL(M) × GL(N)`; the same
//! coefficients describe the charge `+`, charge `−` and `GL` (`⊙`) products,
//! which is what [`equivalence_map`] transports. Under this correspondence
//! the charge `−` image of `λ` is taken at central charge `−N`, where its
//! `h` values sum to.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lr::{induced_window, EnumerationBox};
use crate::partitions::GeneralizedPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlHatError {
    #[error("weight is not primitive: {0}")]
    NotPrimitive(Violation),
    #[error("cannot tensor labels of signs {0} and {1}")]
    SignMismatch(Sign, Sign),
    #[error("cannot tensor objects of categories {0} and {1}")]
    CategoryMismatch(Category, Category),
    #[error("the determinant twist is defined for charge + labels only")]
    TwistOnMinus,
    #[error("cannot parse sign `{0}`")]
    ParseSign(String),
}

impl GlHatError {
    pub fn name(&self) -> &'static str {
        match self {
            GlHatError::NotPrimitive(_) => "NotPrimitive",
            GlHatError::SignMismatch(..) => "SignMismatch",
            GlHatError::CategoryMismatch(..) => "CategoryMismatch",
            GlHatError::TwistOnMinus => "TwistOnMinus",
            GlHatError::ParseSign(_) => "ParseError",
        }
    }
}

/// The first primitivity condition a weight fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NegativeH { index: i64, value: i64 },
    SumMismatch { sum: i64, charge: i64 },
    SupportTooWide { low: i64, high: i64, level: usize },
    NotInImage,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NegativeH { index, value } => write!(f, "h_{index} = {value} is negative"),
            Violation::SumMismatch { sum, charge } => write!(f, "h values sum to {sum}, charge is {charge}"),
            Violation::SupportTooWide { low, high, level } => {
                write!(f, "support width |{low} - {high}| = {} exceeds {level}", high - low)
            }
            Violation::NotInImage => f.write_str("labels are not of the form Λ₋(λ)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = GlHatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(GlHatError::ParseSign(other.to_string())),
        }
    }
}

/// A `gl∞` highest weight: central charge and finitely supported `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlHatWeight {
    central_charge: i64,
    h: BTreeMap<i64, i64>,
    labels: Option<BTreeMap<i64, i64>>,
}

fn drop_zeros(map: BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    map.into_iter().filter(|&(_, v)| v != 0).collect()
}

impl GlHatWeight {
    pub fn from_h(central_charge: i64, h: BTreeMap<i64, i64>) -> Self {
        GlHatWeight { central_charge, h: drop_zeros(h), labels: None }
    }

    /// Builds the weight from finitely supported labels `λ_i = Λ(E_ii)`.
    pub fn from_labels(central_charge: i64, labels: BTreeMap<i64, i64>) -> Self {
        let labels = drop_zeros(labels);
        let at = |i: i64| labels.get(&i).copied().unwrap_or(0);
        let mut h = BTreeMap::new();
        let indices = labels.keys().flat_map(|&i| [i - 1, i]).chain([0]);
        for i in indices {
            let v = at(i) - at(i + 1) + if i == 0 { central_charge } else { 0 };
            h.insert(i, v);
        }
        GlHatWeight { central_charge, h: drop_zeros(h), labels: Some(labels) }
    }

    pub fn central_charge(&self) -> i64 {
        self.central_charge
    }

    pub fn h(&self) -> &BTreeMap<i64, i64> {
        &self.h
    }

    pub fn h_at(&self, i: i64) -> i64 {
        self.h.get(&i).copied().unwrap_or(0)
    }

    pub fn h_sum(&self) -> i64 {
        self.h.values().sum()
    }

    /// Labels, materialized or recovered from `h`. Finitely supported
    /// labels exist only when `Σ h_i = c`.
    pub fn labels(&self) -> Option<BTreeMap<i64, i64>> {
        if let Some(l) = &self.labels {
            return Some(l.clone());
        }
        if self.h_sum() != self.central_charge {
            return None;
        }
        let (Some(&lo), Some(&hi)) = (self.h.keys().next(), self.h.keys().next_back()) else {
            return Some(BTreeMap::new());
        };
        let mut labels = BTreeMap::new();
        let mut acc = 0;
        for i in (lo.min(0)..=hi.max(0)).rev() {
            acc += self.h_at(i) - if i == 0 { self.central_charge } else { 0 };
            if acc != 0 {
                labels.insert(i, acc);
            }
        }
        Some(labels)
    }

    /// `ν̂^k` pulled back: `h_i ↦ h_{i-k}` (the support moves up by `k`).
    pub fn nu_shift(&self, k: i64) -> GlHatWeight {
        GlHatWeight::from_h(self.central_charge, self.h.iter().map(|(&i, &v)| (i + k, v)).collect())
    }
}

/// Equality on `(c, h)`; materialized labels are derived data.
pub fn same_weight(a: &GlHatWeight, b: &GlHatWeight) -> bool {
    a.central_charge == b.central_charge && a.h == b.h
}

/// `Λ̂_{λ_1} + ⋯ + Λ̂_{λ_N}` at central charge `N`.
pub fn lambda_plus(lam: &GeneralizedPartition) -> GlHatWeight {
    let mut labels = BTreeMap::new();
    for &j in lam.parts() {
        // Λ_j(E_ii) = 1 on 0 < i ≤ j, −1 on j < i ≤ 0
        if j > 0 {
            for i in 1..=j {
                *labels.entry(i).or_insert(0) += 1;
            }
        } else {
            for i in j + 1..=0 {
                *labels.entry(i).or_insert(0) -= 1;
            }
        }
    }
    let w = GlHatWeight::from_labels(lam.width() as i64, labels);
    debug_assert!(lam.parts().iter().all(|&j| w.h_at(j) > 0));
    w
}

/// Positive parts go to slots `1..=p`, the rest to the slots ending at `0`.
fn minus_labels(lam: &GeneralizedPartition) -> BTreeMap<i64, i64> {
    let parts = lam.parts();
    let p = parts.iter().take_while(|&&x| x > 0).count();
    let n = parts.len();
    let mut labels = BTreeMap::new();
    for (a, &v) in parts[..p].iter().enumerate() {
        labels.insert(a as i64 + 1, v);
    }
    for (b, &v) in parts[p..].iter().enumerate() {
        labels.insert(b as i64 - (n - p - 1) as i64, v);
    }
    labels
}

/// The charge `−N` weight with label sequence
/// `(…, 0, λ_{p+1}, …, λ_N; λ_1, …, λ_p, 0, …)`.
pub fn lambda_minus(lam: &GeneralizedPartition) -> GlHatWeight {
    GlHatWeight::from_labels(-(lam.width() as i64), minus_labels(lam))
}

/// Canonical label of a primitive weight: `(sign, N, λ)` with `λ ∈ P^N_+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveLabel {
    pub sign: Sign,
    pub lam: GeneralizedPartition,
}

impl PrimitiveLabel {
    pub fn new(sign: Sign, lam: GeneralizedPartition) -> Self {
        PrimitiveLabel { sign, lam }
    }

    /// The trivial module at level zero.
    pub fn trivial(sign: Sign) -> Self {
        PrimitiveLabel { sign, lam: GeneralizedPartition::trivial() }
    }

    pub fn level(&self) -> usize {
        self.lam.width()
    }

    pub fn weight(&self) -> GlHatWeight {
        match self.sign {
            Sign::Plus => lambda_plus(&self.lam),
            Sign::Minus => lambda_minus(&self.lam),
        }
    }
}

impl fmt::Display for PrimitiveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.sign, self.level(), self.lam.tuple())
    }
}

/// Recovers `(sign, N, λ)` from a weight. Charge zero with `h ≡ 0` is the
/// trivial module and is reported with sign `+`.
pub fn classify_primitive(w: &GlHatWeight) -> Result<PrimitiveLabel, GlHatError> {
    let c = w.central_charge();
    let bad = |v| Err(GlHatError::NotPrimitive(v));
    if c >= 0 {
        if let Some((&index, &value)) = w.h().iter().find(|&(_, &v)| v < 0) {
            return bad(Violation::NegativeH { index, value });
        }
        let sum = w.h_sum();
        if sum != c {
            return bad(Violation::SumMismatch { sum, charge: c });
        }
        let mut parts = Vec::with_capacity(c as usize);
        for (&j, &mult) in w.h().iter().rev() {
            parts.extend(std::iter::repeat_n(j, mult as usize));
        }
        return Ok(PrimitiveLabel::new(Sign::Plus, GeneralizedPartition::new(parts).expect("sorted")));
    }

    let n = (-c) as usize;
    if let Some((&index, &value)) = w.h().iter().find(|&(&i, &v)| i != 0 && v < 0) {
        return bad(Violation::NegativeH { index, value });
    }
    if let (Some(&low), Some(&high)) = (w.h().keys().next(), w.h().keys().next_back()) {
        if high - low > n as i64 {
            return bad(Violation::SupportTooWide { low, high, level: n });
        }
    }
    let sum = w.h_sum();
    if sum != c {
        return bad(Violation::SumMismatch { sum, charge: c });
    }
    let labels = w.labels().expect("h sums to the charge");
    let positive: Vec<i64> = labels.range(1..).map(|(_, &v)| v).collect();
    let nonpositive: Vec<i64> = labels.range(..=0).map(|(_, &v)| v).collect();
    if positive.len() + nonpositive.len() > n {
        return bad(Violation::NotInImage);
    }
    let mut parts = positive;
    parts.resize(n - nonpositive.len(), 0);
    parts.extend(nonpositive);
    let lam = match GeneralizedPartition::new(parts) {
        Ok(lam) => lam,
        Err(_) => return bad(Violation::NotInImage),
    };
    if !same_weight(&lambda_minus(&lam), w) {
        return bad(Violation::NotInImage);
    }
    Ok(PrimitiveLabel::new(Sign::Minus, lam))
}

/// Pull-back by `ν̂^{-k}`, i.e. `λ ↦ λ + k·1` (tensoring with `det^k`).
pub fn nu_twist(p: &PrimitiveLabel, k: i64) -> Result<PrimitiveLabel, GlHatError> {
    if p.sign == Sign::Minus {
        return Err(GlHatError::TwistOnMinus);
    }
    Ok(PrimitiveLabel::new(Sign::Plus, p.lam.shift(k)))
}

/// The three equivalent tensor categories: charge `+`, charge `−`, and
/// `GL(N)`-modules for all `N` under `⊙`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Plus,
    Minus,
    Finite,
}

impl Category {
    pub fn tag(&self) -> &'static str {
        match self {
            Category::Plus => "+",
            Category::Minus => "-",
            Category::Finite => "f",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Category {
    type Err = GlHatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "f" | "finite" => Ok(Category::Finite),
            other => other.parse::<Sign>().map(Category::from),
        }
    }
}

impl From<Sign> for Category {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => Category::Plus,
            Sign::Minus => Category::Minus,
        }
    }
}

/// A simple object of one of the three categories.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CategoryLabel {
    pub category: Category,
    pub lam: GeneralizedPartition,
}

impl From<&PrimitiveLabel> for CategoryLabel {
    fn from(p: &PrimitiveLabel) -> Self {
        CategoryLabel { category: p.sign.into(), lam: p.lam.clone() }
    }
}

impl CategoryLabel {
    pub fn as_primitive(&self) -> Option<PrimitiveLabel> {
        match self.category {
            Category::Plus => Some(PrimitiveLabel::new(Sign::Plus, self.lam.clone())),
            Category::Minus => Some(PrimitiveLabel::new(Sign::Minus, self.lam.clone())),
            Category::Finite => None,
        }
    }
}

/// The equivalences on simple objects: identity on `(N, λ)`, new tag.
pub fn equivalence_map(label: &CategoryLabel, target: Category) -> CategoryLabel {
    CategoryLabel { category: target, lam: label.lam.clone() }
}

/// A tensor product decomposition, complete inside `bx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlDecomposition {
    pub category: Category,
    pub level: usize,
    pub bx: EnumerationBox,
    pub terms: BTreeMap<GeneralizedPartition, u64>,
}

impl GlDecomposition {
    /// Summands as simple objects of the decomposition's category.
    pub fn labels(&self) -> impl Iterator<Item = (CategoryLabel, u64)> + '_ {
        self.terms
            .iter()
            .map(|(lam, &m)| (CategoryLabel { category: self.category, lam: lam.clone() }, m))
    }

    pub fn to_json(&self) -> GlDecompositionJson {
        GlDecompositionJson {
            sign: self.category.tag().to_string(),
            level: self.level,
            bx: self.bx,
            terms: self
                .terms
                .iter()
                .map(|(lam, &mult)| TermJson { lam: lam.parts().to_vec(), mult })
                .collect(),
        }
    }
}

/// Wire form: `{"sign":"+","level":2,"box":{"hi":3,"lo":-3},"terms":[{"lam":[0,0],"mult":1}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlDecompositionJson {
    pub sign: String,
    pub level: usize,
    #[serde(rename = "box")]
    pub bx: EnumerationBox,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub lam: Vec<i64>,
    pub mult: u64,
}

fn decompose(category: Category, mu: &GeneralizedPartition, nu: &GeneralizedPartition, bx: EnumerationBox) -> GlDecomposition {
    GlDecomposition {
        category,
        level: mu.width() + nu.width(),
        bx,
        terms: induced_window(mu, nu, bx),
    }
}

/// `L(μ) ⊗ L(ν) = ⊕ C^λ_{μν} L(λ)` over `λ ∈ P^{M+N}_+` inside `bx`.
pub fn tensor_category(a: &PrimitiveLabel, b: &PrimitiveLabel, bx: EnumerationBox) -> Result<GlDecomposition, GlHatError> {
    if a.sign != b.sign {
        return Err(GlHatError::SignMismatch(a.sign, b.sign));
    }
    Ok(decompose(a.sign.into(), &a.lam, &b.lam, bx))
}

/// `V(μ) ⊙ V(ν)` for `GL(M)`- and `GL(N)`-modules.
pub fn odot(mu: &GeneralizedPartition, nu: &GeneralizedPartition, bx: EnumerationBox) -> GlDecomposition {
    decompose(Category::Finite, mu, nu, bx)
}

/// Tensor product in any of the three categories.
pub fn tensor_labels(a: &CategoryLabel, b: &CategoryLabel, bx: EnumerationBox) -> Result<GlDecomposition, GlHatError> {
    if a.category != b.category {
        return Err(GlHatError::CategoryMismatch(a.category, b.category));
    }
    Ok(decompose(a.category, &a.lam, &b.lam, bx))
}

/// Left-nested product of several simples; every intermediate summand is
/// confined to `bx`, which loses nothing since restriction interlaces.
pub fn tensor_many(factors: &[CategoryLabel], bx: EnumerationBox) -> Result<GlDecomposition, GlHatError> {
    let Some(first) = factors.first() else {
        return Ok(GlDecomposition {
            category: Category::Plus,
            level: 0,
            bx,
            terms: BTreeMap::from([(GeneralizedPartition::trivial(), 1)]),
        });
    };
    let mut acc = GlDecomposition {
        category: first.category,
        level: first.lam.width(),
        bx,
        terms: if bx.contains(&first.lam) { BTreeMap::from([(first.lam.clone(), 1)]) } else { BTreeMap::new() },
    };
    for next in &factors[1..] {
        let mut terms = BTreeMap::new();
        for (lam, mult) in acc.labels() {
            let part = tensor_labels(&lam, next, bx)?;
            for (l, m) in part.terms {
                *terms.entry(l).or_insert(0) += m * mult;
            }
        }
        acc = GlDecomposition { category: acc.category, level: acc.level + next.lam.width(), bx, terms };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(parts: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(parts.to_vec()).unwrap()
    }

    fn hmap(pairs: &[(i64, i64)]) -> BTreeMap<i64, i64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn lambda_plus_examples() {
        for j in -3..=3 {
            let w = lambda_plus(&g(&[j]));
            assert_eq!((w.central_charge(), w.h().clone()), (1, hmap(&[(j, 1)])));
        }
        let w = lambda_plus(&g(&[2, 0, 0]));
        assert_eq!((w.central_charge(), w.h().clone()), (3, hmap(&[(2, 1), (0, 2)])));
        let w = lambda_plus(&g(&[1, -1]));
        assert_eq!((w.central_charge(), w.h().clone()), (2, hmap(&[(1, 1), (-1, 1)])));
    }

    #[test]
    fn lambda_minus_examples() {
        let w = lambda_minus(&g(&[2, -1]));
        assert_eq!(w.labels().unwrap(), hmap(&[(0, -1), (1, 2)]));
        assert_eq!(w.h().clone(), hmap(&[(-1, 1), (0, -5), (1, 2)]));
        assert_eq!(w.h_sum(), -2);

        let w = lambda_minus(&g(&[-1]));
        assert_eq!(w.labels().unwrap(), hmap(&[(0, -1)]));
        assert_eq!(w.h().clone(), hmap(&[(-1, 1), (0, -2)]));

        let w = lambda_minus(&g(&[1, 1]));
        assert_eq!(w.labels().unwrap(), hmap(&[(1, 1), (2, 1)]));
        assert_eq!(w.h().clone(), hmap(&[(0, -3), (2, 1)]));
        assert_eq!(w.h_sum(), -2);
    }

    #[test]
    fn labels_recovered_from_h() {
        for lam in [g(&[2, -1]), g(&[3, 1, 0]), g(&[-1, -2]), g(&[0, 0])] {
            for w in [lambda_plus(&lam), lambda_minus(&lam)] {
                let bare = GlHatWeight::from_h(w.central_charge(), w.h().clone());
                assert_eq!(bare.labels(), w.labels(), "{lam}");
            }
        }
        assert_eq!(GlHatWeight::from_h(1, hmap(&[(0, 2)])).labels(), None);
    }

    #[test]
    fn classify_examples() {
        let w = GlHatWeight::from_h(3, hmap(&[(2, 1), (0, 2)]));
        assert_eq!(classify_primitive(&w), Ok(PrimitiveLabel::new(Sign::Plus, g(&[2, 0, 0]))));
        let w = GlHatWeight::from_h(-2, hmap(&[(-1, 1), (0, -5), (1, 2)]));
        assert_eq!(classify_primitive(&w), Ok(PrimitiveLabel::new(Sign::Minus, g(&[2, -1]))));
        let w = GlHatWeight::from_h(-2, hmap(&[(-2, 1), (0, -5), (3, 1)]));
        assert_eq!(
            classify_primitive(&w),
            Err(GlHatError::NotPrimitive(Violation::SupportTooWide { low: -2, high: 3, level: 2 }))
        );
        let w = GlHatWeight::from_h(2, hmap(&[(0, 3), (1, -1)]));
        assert!(matches!(
            classify_primitive(&w),
            Err(GlHatError::NotPrimitive(Violation::NegativeH { index: 1, value: -1 }))
        ));
        let w = GlHatWeight::from_h(2, hmap(&[(0, 1)]));
        assert!(matches!(classify_primitive(&w), Err(GlHatError::NotPrimitive(Violation::SumMismatch { .. }))));
        let trivial = GlHatWeight::from_h(0, BTreeMap::new());
        assert_eq!(classify_primitive(&trivial), Ok(PrimitiveLabel::trivial(Sign::Plus)));
    }

    #[test]
    fn twist_examples() {
        let p = PrimitiveLabel::new(Sign::Plus, g(&[1, 0]));
        assert_eq!(nu_twist(&p, 1).unwrap().lam, g(&[2, 1]));
        assert_eq!(nu_twist(&p, 0).unwrap(), p);
        assert_eq!(nu_twist(&p, -2).unwrap().lam, g(&[-1, -2]));
        assert_eq!(nu_twist(&PrimitiveLabel::new(Sign::Minus, g(&[1, 0])), 1), Err(GlHatError::TwistOnMinus));
        // on weights: every h moves up by k
        let w = nu_twist(&p, 3).unwrap().weight();
        assert!(same_weight(&w, &p.weight().nu_shift(3)));
    }

    #[test]
    fn tensor_examples() {
        let plus = |parts: &[i64]| PrimitiveLabel::new(Sign::Plus, g(parts));
        let d = tensor_category(&plus(&[0]), &plus(&[0]), EnumerationBox::symmetric(3)).unwrap();
        let expected: BTreeMap<_, _> = (0..=3).map(|a| (g(&[a, -a]), 1)).collect();
        assert_eq!(d.terms, expected);
        assert_eq!(d.level, 2);

        let d = tensor_category(&plus(&[1]), &plus(&[1]), EnumerationBox::symmetric(3)).unwrap();
        let expected: BTreeMap<_, _> = (1..=3).map(|k| (g(&[k, 2 - k]), 1)).collect();
        assert_eq!(d.terms, expected);

        let mu = plus(&[2, -1]);
        let d = tensor_category(&mu, &PrimitiveLabel::trivial(Sign::Plus), EnumerationBox::symmetric(3)).unwrap();
        assert_eq!(d.terms, BTreeMap::from([(g(&[2, -1]), 1)]));

        let minus = PrimitiveLabel::new(Sign::Minus, g(&[0]));
        assert_eq!(
            tensor_category(&plus(&[0]), &minus, EnumerationBox::symmetric(1)),
            Err(GlHatError::SignMismatch(Sign::Plus, Sign::Minus))
        );
    }

    #[test]
    fn equivalence_examples() {
        let p = CategoryLabel::from(&PrimitiveLabel::new(Sign::Plus, g(&[1, 0])));
        let m = equivalence_map(&p, Category::Minus);
        assert_eq!(m.as_primitive(), Some(PrimitiveLabel::new(Sign::Minus, g(&[1, 0]))));
        assert_eq!(equivalence_map(&m, Category::Plus), p);
        let t = CategoryLabel::from(&PrimitiveLabel::trivial(Sign::Plus));
        let f = equivalence_map(&t, Category::Finite);
        assert_eq!((f.category, f.lam.width()), (Category::Finite, 0));
        assert_eq!(f.as_primitive(), None);
    }

    #[test]
    fn json_shape() {
        let d = tensor_category(
            &PrimitiveLabel::new(Sign::Plus, g(&[0])),
            &PrimitiveLabel::new(Sign::Plus, g(&[0])),
            EnumerationBox::symmetric(1),
        )
        .unwrap();
        let s = serde_json::to_string(&d.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"sign":"+","level":2,"box":{"hi":1,"lo":-1},"terms":[{"lam":[0,0],"mult":1},{"lam":[1,-1],"mult":1}]}"#
        );
    }
}
