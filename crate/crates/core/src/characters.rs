//! Truncated graded characters of the `N`-pair Fock spaces.
//!
//! Sign `+` is `N` pairs of charged fermions `(c, b)`, sign `−` is `N`
//! bosonic `(γ, β)` pairs; pair `p` carries the GL(N) weight `z_p` on `c`/`γ`
//! and `z_p⁻¹` on `b`/`β`. The vacuum is killed by `c_n (n ≥ 0)` and
//! `b_{n+1} (n ≥ 0)`, so the creators are `c_{−m}` with `m ≥ 1` and `b_{−m}`
//! with `m ≥ 0`. A creator of mode `−m` has energy `m`.
//!
//! At a fixed energy the fermionic space is finite. The bosonic one is not,
//! because `β_0` costs no energy, but a fixed energy and fixed total charge
//! `Q` leave finitely many states. All computations therefore run one
//! total-charge sector at a time, and a charge window means a bound on `|Q|`.
//! Schur polynomials are homogeneous, so a sector decomposes on its own and
//! the coefficient of `s_λ` only depends on the sector `Q = |λ|`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::glhat::Sign;
use crate::lr::{induced_window, product_expansion, EnumerationBox, LrError};
use crate::partitions::GeneralizedPartition;
use crate::symfunc::{
    schur_decompose_alternant, schur_decompose_with, LaurentSchurExpansion, SchurCache, SymError, SymPolynomial,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("charge {charge} of the requested label lies outside the window ±{window}")]
    WindowTooSmall { charge: i64, window: i64 },
    #[error("no box up to ±{cap} makes the residual vanish through degree {order}")]
    BoxCapExceeded { cap: u32, order: usize, residual: Vec<i64> },
    #[error("series have different truncation or width")]
    Incompatible,
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Lr(#[from] LrError),
}

impl CharError {
    pub fn name(&self) -> &'static str {
        match self {
            CharError::WindowTooSmall { .. } => "WindowTooSmall",
            CharError::BoxCapExceeded { .. } => "BoxCapExceeded",
            CharError::Incompatible => "Incompatible",
            CharError::Sym(e) => e.name(),
            CharError::Lr(e) => e.name(),
        }
    }
}

/// Counts of one pair's states, `table[d][a − lo]` for energy `d` and charge `a`.
struct PairTable {
    lo: i64,
    counts: Vec<Vec<i64>>,
}

impl PairTable {
    fn get(&self, d: usize, a: i64) -> i64 {
        let i = a - self.lo;
        if i < 0 {
            return 0;
        }
        self.counts[d].get(i as usize).copied().unwrap_or(0)
    }

    fn new(sign: Sign, order: usize, charge_lo: i64) -> PairTable {
        let hi = order as i64;
        // intermediate charges can undershoot the final one by at most `order`
        let lo = charge_lo.min(0) - hi;
        let width = (hi - lo + 1) as usize;
        let mut counts = vec![vec![0i64; width]; order + 1];
        let idx = |a: i64| (a - lo) as usize;
        counts[0][idx(0)] = 1;
        // (energy, charge) of each creator
        let mut modes: Vec<(usize, i64)> = vec![(0, -1)];
        for m in 1..=order {
            modes.push((m, 1));
            modes.push((m, -1));
        }
        for (e, ch) in modes {
            match sign {
                Sign::Plus => {
                    // b_0 reads its own row at charge a + 1, still unvisited
                    for d in (e..=order).rev() {
                        for a in lo..=hi {
                            let from = a - ch;
                            if (lo..=hi).contains(&from) {
                                counts[d][idx(a)] += counts[d - e][idx(from)];
                            }
                        }
                    }
                }
                Sign::Minus => {
                    for d in e..=order {
                        // a zero-energy mode feeds on its own row, so walk
                        // away from the direction it moves the charge
                        let charges: Vec<i64> = if ch > 0 { (lo..=hi).collect() } else { (lo..=hi).rev().collect() };
                        for a in charges {
                            let from = a - ch;
                            if (lo..=hi).contains(&from) {
                                counts[d][idx(a)] += counts[d - e][idx(from)];
                            }
                        }
                    }
                }
            }
        }
        PairTable { lo, counts }
    }
}

/// Monomial expansion of the Fock character, one polynomial per energy
/// `0..=order`, keeping only states with total charge in `[q_lo, q_hi]`.
pub fn fock_polynomials(n: usize, sign: Sign, order: usize, q_lo: i64, q_hi: i64) -> Vec<SymPolynomial> {
    let mut out = vec![SymPolynomial::zero(n); order + 1];
    if n == 0 {
        if q_lo <= 0 && 0 <= q_hi {
            out[0] = SymPolynomial::one(0);
        }
        return out;
    }
    let max = order as i64;
    let entry_lo = q_lo - (n as i64 - 1) * max;
    let table = PairTable::new(sign, order, entry_lo);
    let table_lo = entry_lo.max(table.lo);

    // partial states: (exponent prefix, energy used, count)
    let mut partial: Vec<(Vec<i64>, usize, i64)> = vec![(Vec::new(), 0, 1)];
    for p in 0..n {
        let left_after = (n - p - 1) as i64;
        let mut next = Vec::new();
        for (prefix, used, count) in &partial {
            let charge: i64 = prefix.iter().sum();
            for d in 0..=(order - used) {
                let budget = (order - used - d) as i64;
                for a in table_lo..=max {
                    let c = table.get(d, a);
                    if c == 0 {
                        continue;
                    }
                    let total = charge + a;
                    // later pairs add at most `budget` and at least `left_after · entry_lo`
                    if total + budget < q_lo || total + left_after * entry_lo.min(0) > q_hi {
                        continue;
                    }
                    let mut e = prefix.clone();
                    e.push(a);
                    next.push((e, used + d, count.checked_mul(c).expect("state count overflow")));
                }
            }
        }
        partial = next;
    }
    for (e, d, c) in partial {
        let q: i64 = e.iter().sum();
        if (q_lo..=q_hi).contains(&q) {
            out[d].add_term(e, c);
        }
    }
    out
}

/// A truncated q-series with coefficients in the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    nvars: usize,
    coeffs: Vec<LaurentSchurExpansion>,
}

impl QSeries {
    pub fn zero(nvars: usize, order: usize) -> Self {
        QSeries { nvars, coeffs: vec![LaurentSchurExpansion::new(nvars); order + 1] }
    }

    pub fn from_coeffs(nvars: usize, coeffs: Vec<LaurentSchurExpansion>) -> Self {
        assert!(!coeffs.is_empty() && coeffs.iter().all(|c| c.nvars() == nvars));
        QSeries { nvars, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeff(&self, d: usize) -> &LaurentSchurExpansion {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[LaurentSchurExpansion] {
        &self.coeffs
    }

    /// `[q^0..q^D]` of the coefficient of `s_λ`.
    pub fn branching(&self, lam: &GeneralizedPartition) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.coefficient(lam)).collect()
    }

    /// All labels with a nonzero coefficient at some degree.
    pub fn labels(&self) -> Vec<GeneralizedPartition> {
        let mut out: Vec<_> = self.coeffs.iter().flat_map(|c| c.coeffs().keys().cloned()).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries, CharError> {
        if self.nvars != other.nvars || self.order() != other.order() {
            return Err(CharError::Incompatible);
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_scaled(b, 1);
        }
        Ok(out)
    }

    /// Product, truncated at the common order.
    pub fn mul(&self, other: &QSeries) -> Result<QSeries, CharError> {
        if self.nvars != other.nvars || self.order() != other.order() {
            return Err(CharError::Incompatible);
        }
        let order = self.order();
        let mut out = QSeries::zero(self.nvars, order);
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                for (mu, &ca) in a.coeffs() {
                    for (nu, &cb) in b.coeffs() {
                        for (lam, c) in product_expansion(mu, nu)? {
                            let c = (c as i64).checked_mul(ca * cb).expect("coefficient overflow");
                            out.coeffs[i + j].add_term(lam, c);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The Fock character through `q^order`, restricted to `|Q| ≤ window`, in the
/// Schur basis. Each coefficient is obtained by peeling with
/// [`schur_decompose_with`].
pub fn fock_series(n: usize, sign: Sign, order: usize, window: u32) -> Result<QSeries, CharError> {
    let w = window as i64;
    let mut cache = SchurCache::new();
    let polys = fock_polynomials(n, sign, order, -w, w);
    let coeffs = polys
        .iter()
        .map(|p| schur_decompose_with(p, &mut cache))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QSeries::from_coeffs(n, coeffs))
}

/// Graded multiplicity of `s_λ` in the Fock space of width `N = width(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingFunction {
    pub lam: GeneralizedPartition,
    pub sign: Sign,
    pub series: Vec<i64>,
}

impl BranchingFunction {
    pub fn is_nonnegative(&self) -> bool {
        self.series.iter().all(|&c| c >= 0)
    }

    /// `b_0 + b_1 q + ⋯`, dropping zero terms; `0` if all vanish.
    pub fn render(&self) -> String {
        render_series(&self.series)
    }
}

pub fn render_series(series: &[i64]) -> String {
    let mut out = String::new();
    for (d, &c) in series.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        match d {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if mag != 1 {
                    out.push_str(&mag.to_string());
                }
                out.push('q');
                if d > 1 {
                    out.push('^');
                    out.push_str(&d.to_string());
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

type SectorKey = (usize, Sign, usize, i64);
type Sector = Arc<BTreeMap<GeneralizedPartition, Vec<i64>>>;

fn sector_cache() -> &'static Mutex<HashMap<SectorKey, Sector>> {
    static CACHE: OnceLock<Mutex<HashMap<SectorKey, Sector>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Branching functions of every `λ` with `|λ| = charge`, through `q^order`.
///
/// Each degree of the sector is decomposed completely with
/// [`schur_decompose_alternant`], which fails unless the sector is
/// symmetric; when it succeeds the sector equals `Σ_λ b_λ[d] s_λ` exactly.
pub fn sector_branching(n: usize, sign: Sign, order: usize, charge: i64) -> Result<Sector, CharError> {
    let key = (n, sign, order, charge);
    if let Some(hit) = sector_cache().lock().expect("cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let polys = fock_polynomials(n, sign, order, charge, charge);
    let mut table: BTreeMap<GeneralizedPartition, Vec<i64>> = BTreeMap::new();
    for (d, p) in polys.iter().enumerate() {
        for (lam, &c) in schur_decompose_alternant(p)?.coeffs() {
            table.entry(lam.clone()).or_insert_with(|| vec![0; order + 1])[d] = c;
        }
    }
    let table = Arc::new(table);
    sector_cache().lock().expect("cache poisoned").insert(key, table.clone());
    Ok(table)
}

pub fn branching_function(lam: &GeneralizedPartition, sign: Sign, order: usize) -> Result<BranchingFunction, CharError> {
    let sector = sector_branching(lam.width(), sign, order, lam.size())?;
    let series = sector.get(lam).cloned().unwrap_or_else(|| vec![0; order + 1]);
    Ok(BranchingFunction { lam: lam.clone(), sign, series })
}

/// [`branching_function`] under an explicit charge window.
pub fn branching_function_in(
    lam: &GeneralizedPartition,
    sign: Sign,
    order: usize,
    window: u32,
) -> Result<BranchingFunction, CharError> {
    if lam.size().abs() > window as i64 {
        return Err(CharError::WindowTooSmall { charge: lam.size(), window: window as i64 });
    }
    branching_function(lam, sign, order)
}

fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().min(b.len())];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            if i + j < out.len() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Outcome of checking `B_μ · B_ν = Σ_λ C^λ_{μν} B_λ` through `q^order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorCharReport {
    pub mu: GeneralizedPartition,
    pub nu: GeneralizedPartition,
    pub sign: Sign,
    pub order: usize,
    /// Smallest box at which the residual vanished and stayed zero one step further.
    #[serde(rename = "box")]
    pub bx: EnumerationBox,
    pub lhs: Vec<i64>,
    pub terms: Vec<TensorCharTerm>,
    pub residual: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorCharTerm {
    pub lam: GeneralizedPartition,
    pub mult: u64,
    pub series: Vec<i64>,
}

impl TensorCharReport {
    pub fn passed(&self) -> bool {
        self.residual.iter().all(|&r| r == 0)
    }
}

/// Grows a symmetric box from `±start` until the residual is zero at two
/// consecutive sizes. Terms whose branching function vanishes through
/// `q^order` are dropped from the report.
pub fn verify_tensor_characters(
    mu: &GeneralizedPartition,
    nu: &GeneralizedPartition,
    sign: Sign,
    order: usize,
    start: u32,
    cap: u32,
) -> Result<TensorCharReport, CharError> {
    let lhs = convolve(&branching_function(mu, sign, order)?.series, &branching_function(nu, sign, order)?.series);
    let mut last_zero: Option<u32> = None;
    let mut last_residual = lhs.clone();
    for b in start..=cap {
        let bx = EnumerationBox::symmetric(b);
        let mut residual = lhs.clone();
        for (lam, c) in induced_window(mu, nu, bx) {
            let series = branching_function(&lam, sign, order)?.series;
            for (r, s) in residual.iter_mut().zip(&series) {
                *r -= c as i64 * s;
            }
        }
        let zero = residual.iter().all(|&r| r == 0);
        match (zero, last_zero) {
            (true, Some(first)) => return report(mu, nu, sign, order, first, lhs, residual),
            (true, None) => last_zero = Some(b),
            (false, Some(first)) => {
                // the residual left zero again: the identity fails at this box
                return report(mu, nu, sign, order, first + 1, lhs, residual);
            }
            (false, None) => {}
        }
        last_residual = residual;
    }
    Err(CharError::BoxCapExceeded { cap, order, residual: last_residual })
}

fn report(
    mu: &GeneralizedPartition,
    nu: &GeneralizedPartition,
    sign: Sign,
    order: usize,
    b: u32,
    lhs: Vec<i64>,
    residual: Vec<i64>,
) -> Result<TensorCharReport, CharError> {
    let bx = EnumerationBox::symmetric(b);
    let mut terms = Vec::new();
    for (lam, mult) in induced_window(mu, nu, bx) {
        let series = branching_function(&lam, sign, order)?.series;
        if series.iter().any(|&s| s != 0) {
            terms.push(TensorCharTerm { lam, mult, series });
        }
    }
    Ok(TensorCharReport { mu: mu.clone(), nu: nu.clone(), sign, order, bx, lhs, terms, residual })
}

/// The graded duality check for one Fock space: the peeled Schur expansion of
/// every sector `|Q| ≤ window`, its explicit residual, and agreement with the
/// alternant branching functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub n: usize,
    pub sign: Sign,
    pub order: usize,
    pub window: u32,
    pub branching: BTreeMap<GeneralizedPartition, Vec<i64>>,
    /// Number of monomials left in `fock − Σ_λ b_λ s_λ`, per degree.
    pub residual_terms: Vec<usize>,
    /// Labels whose two extractions disagree.
    pub mismatches: Vec<GeneralizedPartition>,
}

impl DualityReport {
    pub fn residual_is_zero(&self) -> bool {
        self.residual_terms.iter().all(|&r| r == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.branching.values().flatten().all(|&c| c >= 0)
    }

    pub fn passed(&self) -> bool {
        self.residual_is_zero() && self.mismatches.is_empty() && self.is_nonnegative()
    }
}

pub fn verify_duality(n: usize, sign: Sign, order: usize, window: u32) -> Result<DualityReport, CharError> {
    let w = window as i64;
    let polys = fock_polynomials(n, sign, order, -w, w);
    let series = fock_series(n, sign, order, window)?;
    let mut cache = SchurCache::new();
    let residual_terms = polys
        .iter()
        .zip(series.coeffs())
        .map(|(p, c)| {
            let mut r = p.clone();
            r.add_scaled(&c.to_polynomial(&mut cache), -1);
            r.len()
        })
        .collect();
    let mut branching = BTreeMap::new();
    let mut mismatches = Vec::new();
    for lam in series.labels() {
        let b = series.branching(&lam);
        if branching_function(&lam, sign, order)?.series != b {
            mismatches.push(lam.clone());
        }
        branching.insert(lam, b);
    }
    Ok(DualityReport { n, sign, order, window, branching, residual_terms, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(parts: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn empty_fock_space() {
        let s = fock_series(0, Sign::Plus, 4, 3).unwrap();
        assert_eq!(s.branching(&g(&[])), vec![1, 0, 0, 0, 0]);
        assert_eq!(branching_function(&g(&[]), Sign::Minus, 3).unwrap().series, vec![1, 0, 0, 0]);
    }

    #[test]
    fn single_fermion_low_degrees() {
        let polys = fock_polynomials(1, Sign::Plus, 1, -5, 5);
        assert_eq!(polys[0].terms(), &BTreeMap::from([(vec![0], 1), (vec![-1], 1)]));
        assert_eq!(
            polys[1].terms(),
            &BTreeMap::from([(vec![1], 1), (vec![0], 1), (vec![-1], 1), (vec![-2], 1)])
        );
    }

    #[test]
    fn branching_examples() {
        assert_eq!(branching_function(&g(&[0]), Sign::Plus, 3).unwrap().series, vec![1, 1, 2, 3]);
        assert_eq!(branching_function(&g(&[-1]), Sign::Plus, 0).unwrap().series, vec![1]);
        assert_eq!(branching_function(&g(&[0]), Sign::Minus, 1).unwrap().series, vec![1, 1]);
        assert_eq!(
            branching_function_in(&g(&[3, 0]), Sign::Plus, 2, 2),
            Err(CharError::WindowTooSmall { charge: 3, window: 2 })
        );
    }

    #[test]
    fn peeling_and_alternant_agree() {
        for sign in [Sign::Plus, Sign::Minus] {
            let series = fock_series(2, sign, 5, 3).unwrap();
            for lam in series.labels() {
                assert_eq!(series.branching(&lam), branching_function(&lam, sign, 5).unwrap().series, "{lam}");
            }
        }
    }

    #[test]
    fn duality_small() {
        // charge 3 costs energy 6 for fermions but 3 for bosons
        for (sign, count) in [(Sign::Plus, 6), (Sign::Minus, 7)] {
            let r = verify_duality(1, sign, 4, 3).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.branching.len(), count);
        }
    }

    #[test]
    fn series_arithmetic() {
        let a = fock_series(1, Sign::Plus, 2, 4).unwrap();
        let sum = a.add(&a).unwrap();
        assert_eq!(sum.branching(&g(&[0])), vec![2, 2, 4]);
        let sq = a.mul(&a).unwrap();
        // (1 + z⁻¹)² at q⁰
        assert_eq!(sq.coeff(0).coefficient(&g(&[-2])), 1);
        assert_eq!(sq.coeff(0).coefficient(&g(&[-1])), 2);
        assert_eq!(sq.coeff(0).coefficient(&g(&[0])), 1);
        assert!(a.mul(&QSeries::zero(1, 3)).is_err());
    }

    #[test]
    fn render() {
        assert_eq!(render_series(&[1, 1, 2, 3]), "1 + q + 2q^2 + 3q^3");
        assert_eq!(render_series(&[0, -1, 0]), "-q");
        assert_eq!(render_series(&[0, 0]), "0");
    }

    #[test]
    fn tensor_examples() {
        let r = verify_tensor_characters(&g(&[0]), &g(&[0]), Sign::Plus, 6, 0, 12).unwrap();
        assert!(r.passed());
        assert!(r.terms.iter().all(|t| t.lam.parts()[0] == -t.lam.parts()[1] && t.mult == 1));

        let r = verify_tensor_characters(&g(&[1]), &g(&[1]), Sign::Plus, 6, 0, 12).unwrap();
        assert!(r.passed());
        assert!(r.terms.iter().all(|t| t.lam.size() == 2 && t.lam.parts()[0] >= 1));

        let r = verify_tensor_characters(&g(&[1, -1]), &g(&[]), Sign::Minus, 4, 0, 12).unwrap();
        assert!(r.passed());
        assert_eq!(r.terms.len(), 1);
        assert_eq!(r.lhs, branching_function(&g(&[1, -1]), Sign::Minus, 4).unwrap().series);
    }
}
