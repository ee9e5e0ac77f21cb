//! Littlewood–Richardson coefficients and `GL(M+N) ↓ GL(M) × GL(N)` branching.
//!
//! Coefficients are counted by backtracking over LR fillings of the skew
//! shape `λ/μ`, visited in reverse reading order (rows top to bottom, each
//! row right to left) so the ballot condition is checked as each cell is
//! placed. Rational weights are reduced to polynomial ones by a common
//! determinant twist, which the restriction preserves.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{labels_in_window, GeneralizedPartition, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LrError {
    #[error("width {total} does not split as {m} + {n}")]
    WidthMismatch { total: usize, m: usize, n: usize },
    #[error("enumeration box has lo {lo} > hi {hi}")]
    EmptyBox { lo: i64, hi: i64 },
}

impl LrError {
    pub fn name(&self) -> &'static str {
        match self {
            LrError::WidthMismatch { .. } => "WidthMismatch",
            LrError::EmptyBox { .. } => "EmptyBox",
        }
    }
}

/// The finite window `lo ≤ λ_N ≤ λ_1 ≤ hi` an infinite direct sum is
/// enumerated over. Within the window the enumeration is complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumerationBox {
    pub hi: i64,
    pub lo: i64,
}

impl EnumerationBox {
    pub fn new(lo: i64, hi: i64) -> Result<Self, LrError> {
        if lo > hi {
            return Err(LrError::EmptyBox { lo, hi });
        }
        Ok(EnumerationBox { hi, lo })
    }

    /// `[-b, b]`.
    pub fn symmetric(b: u32) -> Self {
        EnumerationBox { hi: b as i64, lo: -(b as i64) }
    }

    pub fn contains(&self, lam: &GeneralizedPartition) -> bool {
        lam.within(self.lo, self.hi)
    }
}

/// One summand `C · V(μ) ⊗ V(ν)` of a restricted `V(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingMultiplicity {
    pub lambda: GeneralizedPartition,
    pub mu: GeneralizedPartition,
    pub nu: GeneralizedPartition,
    pub mult: u64,
}

/// Backtracking over LR fillings of `outer / inner`.
struct Filler<'a> {
    outer: &'a [i64],
    inner: Vec<i64>,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<u64>,
    content: Option<&'a [i64]>,
    max_letter: usize,
}

impl<'a> Filler<'a> {
    fn new(outer: &'a [i64], inner: &[i64], content: Option<&'a [i64]>, max_letter: usize) -> Self {
        let mut padded = inner.to_vec();
        padded.resize(outer.len(), 0);
        let mut cells = Vec::new();
        for r in 0..outer.len() {
            for c in (padded[r]..outer[r]).rev() {
                cells.push((r, c as usize));
            }
        }
        Filler {
            outer,
            grid: outer.iter().map(|&len| vec![0; len as usize]).collect(),
            inner: padded,
            cells,
            counts: vec![0; max_letter + 1],
            content,
            max_letter,
        }
    }

    fn run(&mut self, idx: usize, done: &mut dyn FnMut(&[u64])) {
        if idx == self.cells.len() {
            done(&self.counts[1..]);
            return;
        }
        let (r, c) = self.cells[idx];
        let mut lo = 1;
        if r > 0 && (c as i64) >= self.inner[r - 1] {
            lo = self.grid[r - 1][c] + 1;
        }
        let mut hi = self.max_letter.min(r + 1);
        if ((c + 1) as i64) < self.outer[r] {
            hi = hi.min(self.grid[r][c + 1]);
        }
        for v in lo..=hi {
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            if let Some(target) = self.content {
                if self.counts[v] as i64 + 1 > target[v - 1] {
                    continue;
                }
            }
            self.counts[v] += 1;
            self.grid[r][c] = v;
            self.run(idx + 1, done);
            self.counts[v] -= 1;
        }
    }
}

type Key = (Vec<i64>, Vec<i64>, Vec<i64>);

fn cache() -> &'static RwLock<HashMap<Key, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// [`lr_coefficient`] without the shared memo table.
pub fn lr_coefficient_uncached(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lam.contains(mu) || lam.size() != mu.size() + nu.size() {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    let mut filler = Filler::new(lam.parts(), mu.parts(), Some(nu.parts()), nu.len());
    let mut count = 0u64;
    filler.run(0, &mut |_| count += 1);
    count
}

/// `c^λ_{μν}`: the number of LR tableaux of shape `λ/μ` and content `ν`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lam.contains(mu) || lam.size() != mu.size() + nu.size() {
        return 0;
    }
    let key = (lam.parts().to_vec(), mu.parts().to_vec(), nu.parts().to_vec());
    if let Some(&c) = cache().read().unwrap().get(&key) {
        return c;
    }
    let c = lr_coefficient_uncached(lam, mu, nu);
    cache().write().unwrap().insert(key, c);
    c
}

/// `s_{λ/μ} = Σ_ν c^λ_{μν} s_ν`, keeping only `ν` with at most `max_rows` rows.
pub fn skew_expansion(lam: &Partition, mu: &Partition, max_rows: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if !lam.contains(mu) {
        return out;
    }
    if lam == mu {
        out.insert(Partition::empty(), 1);
        return out;
    }
    if max_rows == 0 {
        return out;
    }
    let mut filler = Filler::new(lam.parts(), mu.parts(), None, max_rows);
    filler.run(0, &mut |content| {
        let nu = Partition::new(content.iter().map(|&c| c as i64).collect()).expect("ballot content is a partition");
        *out.entry(nu).or_insert(0) += 1;
    });
    out
}

/// `C^λ_{μν}` for rational weights of widths `M+N`, `M`, `N`.
pub fn rational_multiplicity(
    lam: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    nu: &GeneralizedPartition,
) -> Result<u64, LrError> {
    if lam.width() != mu.width() + nu.width() {
        return Err(LrError::WidthMismatch { total: lam.width(), m: mu.width(), n: nu.width() });
    }
    if lam.size() != mu.size() + nu.size() {
        return Ok(0);
    }
    let k = [lam.last(), mu.last(), nu.last()]
        .into_iter()
        .flatten()
        .map(|p| -p)
        .fold(0, i64::max);
    let poly = |g: &GeneralizedPartition| g.shift(k).to_partition().expect("twisted label is polynomial");
    Ok(lr_coefficient(&poly(lam), &poly(mu), &poly(nu)))
}

/// Restriction of `V(λ)` from `GL(M+N)` to `GL(M) × GL(N)`, with `M = m`.
///
/// The result is the complete list of nonzero multiplicities, ordered by
/// `μ` then `ν`, both descending.
pub fn restrict(lam: &GeneralizedPartition, m: usize, n: usize) -> Result<Vec<BranchingMultiplicity>, LrError> {
    if lam.width() != m + n {
        return Err(LrError::WidthMismatch { total: lam.width(), m, n });
    }
    let k = lam.last().map_or(0, |l| (-l).max(0));
    let shifted = lam.shift(k);
    let outer = shifted.to_partition().expect("twisted label is polynomial");
    let parts = shifted.parts();

    // μ_i interlaces n steps down: λ_{i+n} ≤ μ_i ≤ λ_i
    let mut mus = Vec::new();
    fn rec(parts: &[i64], m: usize, n: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = cur.len();
        if i == m {
            out.push(cur.clone());
            return;
        }
        let hi = match cur.last() {
            Some(&prev) => parts[i].min(prev),
            None => parts[i],
        };
        for v in parts[i + n]..=hi {
            cur.push(v);
            rec(parts, m, n, cur, out);
            cur.pop();
        }
    }
    rec(parts, m, n, &mut Vec::with_capacity(m), &mut mus);

    let mut out = Vec::new();
    for mu_parts in mus {
        let inner = Partition::new(mu_parts.clone()).expect("interlacing gives a partition");
        for (nu, mult) in skew_expansion(&outer, &inner, n) {
            let mu = GeneralizedPartition::new(mu_parts.clone()).unwrap().shift(-k);
            let nu = nu.to_generalized(n).expect("row bound respected").shift(-k);
            out.push(BranchingMultiplicity { lambda: lam.clone(), mu, nu, mult });
        }
    }
    out.sort_by(|a, b| (&b.mu, &b.nu).cmp(&(&a.mu, &a.nu)));
    Ok(out)
}

/// All `λ ∈ P^{M+N}_+` inside `bx` with `C^λ_{μν} > 0`, ascending.
pub fn induced_window(
    mu: &GeneralizedPartition,
    nu: &GeneralizedPartition,
    bx: EnumerationBox,
) -> BTreeMap<GeneralizedPartition, u64> {
    let width = mu.width() + nu.width();
    labels_in_window(width, bx.lo, bx.hi, Some(mu.size() + nu.size()))
        .into_iter()
        .filter_map(|lam| {
            let c = rational_multiplicity(&lam, mu, nu).expect("widths consistent by construction");
            (c > 0).then_some((lam, c))
        })
        .collect()
}

/// `s_μ · s_ν` in `N` variables, `N` the common width, via LR coefficients.
pub fn product_expansion(mu: &GeneralizedPartition, nu: &GeneralizedPartition) -> Result<BTreeMap<GeneralizedPartition, u64>, LrError> {
    let n = mu.width();
    if nu.width() != n {
        return Err(LrError::WidthMismatch { total: n, m: mu.width(), n: nu.width() });
    }
    let km = mu.last().map_or(0, |l| (-l).max(0));
    let kn = nu.last().map_or(0, |l| (-l).max(0));
    let a = mu.shift(km).to_partition().unwrap();
    let b = nu.shift(kn).to_partition().unwrap();
    let b1 = b.part(0);
    let total = a.size() + b.size();

    // λ ⊇ μ with λ_i ≤ μ_i + ν_1, at most n rows
    let mut lams = Vec::new();
    fn rec(a: &Partition, b1: i64, n: usize, remaining: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = cur.len();
        if i == n {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut hi = a.part(i) + b1;
        if let Some(&prev) = cur.last() {
            hi = hi.min(prev);
        }
        hi = hi.min(remaining);
        for v in a.part(i)..=hi {
            cur.push(v);
            rec(a, b1, n, remaining - v, cur, out);
            cur.pop();
        }
    }
    rec(&a, b1, n, total, &mut Vec::new(), &mut lams);

    let mut out = BTreeMap::new();
    for parts in lams {
        let lam = Partition::new(parts).unwrap();
        let c = lr_coefficient(&lam, &a, &b);
        if c > 0 {
            out.insert(lam.to_generalized(n).unwrap().shift(-km - kn), c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn g(parts: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[3, 1]), &p(&[3, 1]), &p(&[])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1]), &p(&[])), 0);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2])), 0);
    }

    #[test]
    fn rational_examples() {
        assert_eq!(rational_multiplicity(&g(&[1, -1]), &g(&[0]), &g(&[0])), Ok(1));
        assert_eq!(rational_multiplicity(&g(&[2, 0]), &g(&[1]), &g(&[1])), Ok(1));
        assert_eq!(rational_multiplicity(&g(&[1, 1]), &g(&[1]), &g(&[-1])), Ok(0));
        assert!(rational_multiplicity(&g(&[1, 1]), &g(&[1]), &g(&[])).is_err());
        // level-zero factor is the identity
        assert_eq!(rational_multiplicity(&g(&[2, -1]), &g(&[2, -1]), &g(&[])), Ok(1));
        assert_eq!(rational_multiplicity(&g(&[2, -1]), &g(&[2, 0]), &g(&[])), Ok(0));
    }

    #[test]
    fn restrict_examples() {
        let r = restrict(&g(&[1, 0]), 1, 1).unwrap();
        let got: Vec<_> = r.iter().map(|b| (b.mu.parts().to_vec(), b.nu.parts().to_vec(), b.mult)).collect();
        assert_eq!(got, vec![(vec![1], vec![0], 1), (vec![0], vec![1], 1)]);

        let r = restrict(&g(&[2, 1, 0]), 2, 1).unwrap();
        let got: Vec<_> = r.iter().map(|b| (b.mu.parts().to_vec(), b.nu.parts().to_vec(), b.mult)).collect();
        assert_eq!(
            got,
            vec![
                (vec![2, 1], vec![0], 1),
                (vec![2, 0], vec![1], 1),
                (vec![1, 1], vec![1], 1),
                (vec![1, 0], vec![2], 1),
            ]
        );

        for a in 0..5 {
            let r = restrict(&g(&[a, -a]), 1, 1).unwrap();
            assert!(r.iter().any(|b| b.mu == g(&[0]) && b.nu == g(&[0]) && b.mult == 1));
            assert_eq!(r.len() as i64, 2 * a + 1);
        }
    }

    #[test]
    fn restrict_degenerate_splits() {
        let lam = g(&[2, -1]);
        let r = restrict(&lam, 0, 2).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].mu.width(), &r[0].nu, r[0].mult), (0, &lam, 1));
        let r = restrict(&lam, 2, 0).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!((&r[0].mu, r[0].nu.width()), (&lam, 0));
        assert!(restrict(&lam, 1, 2).is_err());
    }

    #[test]
    fn window_and_product() {
        let w = induced_window(&g(&[0]), &g(&[0]), EnumerationBox::symmetric(3));
        let keys: Vec<_> = w.keys().map(|l| l.parts().to_vec()).collect();
        assert_eq!(keys, vec![vec![0, 0], vec![1, -1], vec![2, -2], vec![3, -3]]);
        assert!(w.values().all(|&c| c == 1));

        let prod = product_expansion(&g(&[1, 0]), &g(&[0, -1])).unwrap();
        // V ⊗ V* = adjoint + trivial
        assert_eq!(prod.len(), 2);
        assert_eq!(prod[&g(&[1, -1])], 1);
        assert_eq!(prod[&g(&[0, 0])], 1);
    }

    #[test]
    fn skew_expansion_of_straight_shape() {
        let e = skew_expansion(&p(&[2, 1]), &p(&[]), 3);
        assert_eq!(e.len(), 1);
        assert_eq!(e[&p(&[2, 1])], 1);
        let e = skew_expansion(&p(&[2, 1]), &p(&[1]), 3);
        assert_eq!(e[&p(&[2])], 1);
        assert_eq!(e[&p(&[1, 1])], 1);
        let e = skew_expansion(&p(&[2, 1]), &p(&[1]), 1);
        assert_eq!(e.len(), 1);
    }
}
