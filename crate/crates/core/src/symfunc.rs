//! Schur polynomials in finitely many variables, computed by brute force.
//!
//! Everything here works on explicit monomial expansions. It is slow on
//! purpose and shares no code with [`crate::lr`]: it is the reference that the
//! fast multiplicity engine is checked against.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::partitions::{polynomial_reduction, GeneralizedPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("polynomial is not symmetric at exponent {0:?}")]
    NotSymmetric(Vec<i64>),
    #[error("leading-term subtraction did not terminate within {0} steps")]
    NonTerminating(usize),
    #[error("variable counts differ: {0} vs {1}")]
    VariableMismatch(usize, usize),
}

impl SymError {
    pub fn name(&self) -> &'static str {
        match self {
            SymError::NotSymmetric(_) => "NotSymmetric",
            SymError::NonTerminating(_) => "NonTerminating",
            SymError::VariableMismatch(..) => "VariableMismatch",
        }
    }
}

/// A Laurent polynomial with integer coefficients in `nvars` variables.
///
/// Symmetry is checked on demand ([`SymPolynomial::is_symmetric`]); products
/// of polynomials in disjoint variable sets ([`SymPolynomial::outer`]) are
/// representable but generally not symmetric.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl SymPolynomial {
    pub fn zero(nvars: usize) -> Self {
        SymPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exponent: Vec<i64>, coeff: i64) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_term(exponent, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: &[i64]) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, coeff: i64) {
        debug_assert_eq!(exponent.len(), self.nvars);
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exponent);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let c = o.get().checked_add(coeff).expect("coefficient overflow");
                if c == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, other: &SymPolynomial, scale: i64) {
        assert_eq!(self.nvars, other.nvars);
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), c.checked_mul(scale).expect("coefficient overflow"));
        }
    }

    pub fn mul(&self, other: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = SymPolynomial::zero(self.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.checked_mul(cb).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Product in disjoint variable sets: `self(z) · other(w)` in `z ++ w`.
    pub fn outer(&self, other: &SymPolynomial) -> SymPolynomial {
        let mut out = SymPolynomial::zero(self.nvars + other.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let mut e = ea.clone();
                e.extend_from_slice(eb);
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplies by `(z_1 ⋯ z_N)^k`.
    pub fn shift_exponents(&self, k: i64) -> SymPolynomial {
        SymPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| (e.iter().map(|x| x + k).collect(), c))
                .collect(),
        }
    }

    /// Value at `z_1 = ⋯ = z_N = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, &c| acc + c)
    }

    /// Returns the first exponent witnessing asymmetry, if any.
    pub fn symmetry_violation(&self) -> Option<Vec<i64>> {
        let mut orbit_sizes: HashMap<Vec<i64>, usize> = HashMap::new();
        for (e, &c) in &self.terms {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if self.coefficient(&sorted) != c {
                return Some(e.clone());
            }
            *orbit_sizes.entry(sorted).or_default() += 1;
        }
        for (dominant, seen) in orbit_sizes {
            if seen != distinct_permutations(&dominant) {
                return Some(dominant);
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }
}

/// Number of distinct rearrangements of a sorted sequence.
fn distinct_permutations(sorted: &[i64]) -> usize {
    let mut count: u128 = 1;
    let mut run = 0u128;
    for i in 0..sorted.len() {
        run = if i > 0 && sorted[i] == sorted[i - 1] { run + 1 } else { 1 };
        count = count * (i as u128 + 1) / run;
    }
    count as usize
}

/// Expansion `Σ c_λ s_λ` over labels of one fixed width.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentSchurExpansion {
    nvars: usize,
    coeffs: BTreeMap<GeneralizedPartition, i64>,
}

impl LaurentSchurExpansion {
    pub fn new(nvars: usize) -> Self {
        LaurentSchurExpansion { nvars, coeffs: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<GeneralizedPartition, i64> {
        &self.coeffs
    }

    pub fn coefficient(&self, lam: &GeneralizedPartition) -> i64 {
        self.coeffs.get(lam).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lam: GeneralizedPartition, coeff: i64) {
        assert_eq!(lam.width(), self.nvars, "label width must match variable count");
        if coeff == 0 {
            return;
        }
        let c = self.coeffs.entry(lam.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.coeffs.remove(&lam);
        }
    }

    pub fn add_scaled(&mut self, other: &LaurentSchurExpansion, scale: i64) {
        for (lam, &c) in &other.coeffs {
            self.add_term(lam.clone(), c * scale);
        }
    }

    /// Expands back into monomials.
    pub fn to_polynomial(&self, cache: &mut SchurCache) -> SymPolynomial {
        let mut p = SymPolynomial::zero(self.nvars);
        for (lam, &c) in &self.coeffs {
            p.add_scaled(cache.get(lam), c);
        }
        p
    }
}

impl FromIterator<(GeneralizedPartition, i64)> for LaurentSchurExpansion {
    fn from_iter<I: IntoIterator<Item = (GeneralizedPartition, i64)>>(iter: I) -> Self {
        let mut iter = iter.into_iter().peekable();
        let nvars = iter.peek().map_or(0, |(l, _)| l.width());
        let mut out = LaurentSchurExpansion::new(nvars);
        for (lam, c) in iter {
            out.add_term(lam, c);
        }
        out
    }
}

/// Memo table for Schur polynomials, keyed by label.
#[derive(Default)]
pub struct SchurCache {
    polys: HashMap<GeneralizedPartition, SymPolynomial>,
    polynomial_part: HashMap<Vec<i64>, BTreeMap<Vec<i64>, i64>>,
}

impl SchurCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, lam: &GeneralizedPartition) -> &SymPolynomial {
        if !self.polys.contains_key(lam) {
            let p = self.compute(lam);
            self.polys.insert(lam.clone(), p);
        }
        &self.polys[lam]
    }

    fn compute(&mut self, lam: &GeneralizedPartition) -> SymPolynomial {
        let n = lam.width();
        let (partition, k) = polynomial_reduction(lam);
        let mut parts = partition.parts().to_vec();
        parts.resize(n, 0);
        let terms = self.tableau_sum(&parts).clone();
        SymPolynomial { nvars: n, terms }.shift_exponents(-k)
    }

    /// Monomial sum over semistandard tableaux of polynomial shape `lam`
    /// with entries in `1..=lam.len()`. Tableaux are peeled one letter at a
    /// time: the cells holding the largest letter form a horizontal strip,
    /// so removing them leaves a shape interlacing `lam`.
    fn tableau_sum(&mut self, lam: &[i64]) -> &BTreeMap<Vec<i64>, i64> {
        if !self.polynomial_part.contains_key(lam) {
            let n = lam.len();
            let mut out = BTreeMap::new();
            if n == 0 {
                out.insert(Vec::new(), 1);
            } else {
                let total: i64 = lam.iter().sum();
                let mut inner = Vec::with_capacity(n - 1);
                let mut inners = Vec::new();
                interlacing(lam, &mut inner, &mut inners);
                for mu in inners {
                    let strip = total - mu.iter().sum::<i64>();
                    let sub = self.tableau_sum(&mu).clone();
                    for (e, c) in sub {
                        let mut e = e;
                        e.push(strip);
                        *out.entry(e).or_insert(0) += c;
                    }
                }
            }
            self.polynomial_part.insert(lam.to_vec(), out);
        }
        &self.polynomial_part[lam]
    }
}

/// All `mu` of length `lam.len() - 1` with `lam[i+1] ≤ mu[i] ≤ lam[i]`.
fn interlacing(lam: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let i = cur.len();
    if i + 1 == lam.len() {
        out.push(cur.clone());
        return;
    }
    for v in lam[i + 1]..=lam[i] {
        cur.push(v);
        interlacing(lam, cur, out);
        cur.pop();
    }
}

/// The Schur polynomial `s_λ(z_1, …, z_N)` with `N = width(λ)`.
pub fn schur_polynomial(lam: &GeneralizedPartition) -> SymPolynomial {
    SchurCache::new().get(lam).clone()
}

/// Writes a symmetric Laurent polynomial in the Schur basis.
pub fn schur_decompose(p: &SymPolynomial) -> Result<LaurentSchurExpansion, SymError> {
    schur_decompose_with(p, &mut SchurCache::new())
}

/// [`schur_decompose`] reusing a caller-owned cache.
///
/// Repeatedly removes `c · s_λ` where `z^λ` is the lexicographically
/// greatest remaining monomial; by symmetry that exponent is dominant.
pub fn schur_decompose_with(p: &SymPolynomial, cache: &mut SchurCache) -> Result<LaurentSchurExpansion, SymError> {
    if let Some(e) = p.symmetry_violation() {
        return Err(SymError::NotSymmetric(e));
    }
    let bound = p.len();
    let mut rest = p.clone();
    let mut out = LaurentSchurExpansion::new(p.nvars);
    let mut steps = 0;
    while let Some((lead, &c)) = rest.terms.last_key_value() {
        if steps == bound {
            return Err(SymError::NonTerminating(bound));
        }
        steps += 1;
        let lam = GeneralizedPartition::new(lead.clone()).map_err(|_| SymError::NotSymmetric(lead.clone()))?;
        rest.add_scaled(cache.get(&lam), -c);
        out.add_term(lam, c);
    }
    Ok(out)
}

/// Signed permutations of `0..n`, as `(sign, image)`.
fn signed_permutations(n: usize) -> Vec<(i64, Vec<usize>)> {
    let mut out = vec![(1, Vec::new())];
    for k in 0..n {
        let mut next = Vec::with_capacity(out.len() * (k + 1));
        for (sign, perm) in &out {
            // inserting k at position i passes over k - i larger-indexed slots
            for i in 0..=k {
                let mut p = perm.clone();
                p.insert(i, k);
                let flips = (k - i) as i64;
                next.push((if flips % 2 == 0 { *sign } else { -*sign }, p));
            }
        }
        out = next;
    }
    out
}

/// Schur coefficients by antisymmetrization: `c_λ = [z^{λ+δ}] a_δ · p`.
///
/// Coefficients are read off for every dominant `λ` whose entries lie in the
/// range spanned by the support, which by unitriangularity of the Kostka
/// matrix contains every `λ` with `c_λ ≠ 0`. Agrees with
/// [`schur_decompose`] but never expands a Schur polynomial.
pub fn schur_decompose_alternant(p: &SymPolynomial) -> Result<LaurentSchurExpansion, SymError> {
    if let Some(e) = p.symmetry_violation() {
        return Err(SymError::NotSymmetric(e));
    }
    let n = p.nvars;
    let mut out = LaurentSchurExpansion::new(n);
    if p.is_zero() {
        return Ok(out);
    }
    if n == 0 {
        out.add_term(GeneralizedPartition::trivial(), p.coefficient(&[]));
        return Ok(out);
    }
    let lo = p.terms.keys().flatten().copied().min().unwrap_or(0);
    let hi = p.terms.keys().flatten().copied().max().unwrap_or(0);
    let degrees: std::collections::BTreeSet<i64> = p.terms.keys().map(|e| e.iter().sum()).collect();
    let perms = signed_permutations(n);
    let delta: Vec<i64> = (0..n as i64).rev().collect();
    let mut probe = vec![0i64; n];
    for size in degrees {
        for lam in crate::partitions::labels_in_window(n, lo, hi, Some(size)) {
            let mut c = 0i64;
            for (sign, perm) in &perms {
                for i in 0..n {
                    probe[i] = lam.parts()[i] + delta[i] - delta[perm[i]];
                }
                c += sign * p.coefficient(&probe);
            }
            out.add_term(lam, c);
        }
    }
    Ok(out)
}
