//! Brute-force lattice point counting in lecture hall cones.
//!
//! Everything here is computed by walking the partitions
//! `0 <= l_1/s_1 <= ... <= l_n/s_n` one coordinate at a time, so the results
//! serve as an independent check on the closed forms elsewhere in the crate.
//!
//! The walk fixes `l_1, ..., l_{n-1}` explicitly. The last coordinate only
//! ever contributes a contiguous range, which is recorded in a difference
//! array instead of being iterated.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{DensePoly, ExactInt, TruncatedSeries};
use crate::gorenstein::lecture_hall_gorenstein;

/// Environment variable holding the node budget used by [`Budget::from_env`].
pub const BUDGET_ENV: &str = "LHCONE_BUDGET";

const DEFAULT_DEGREE_LIMIT: usize = 2000;
const FLUSH_EVERY: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("the sequence is empty")]
    Empty,
    #[error("term s_{index} = {value} is not positive")]
    NonPositiveTerm { index: usize, value: ExactInt },
    #[error("term s_{index} = {value} is too large to enumerate")]
    TermTooLarge { index: usize, value: ExactInt },
    #[error("degree {0} is too large to enumerate")]
    DegreeTooLarge(ExactInt),
    #[error("enumeration visited more than {limit} nodes")]
    BudgetExceeded { limit: u64 },
    #[error("needs series through degree {needed}, limit is {limit}")]
    DegreeBudgetExceeded { needed: usize, limit: usize },
    #[error("invalid node budget {0:?}")]
    InvalidBudget(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
    #[error("verdicts disagree: {0:?}")]
    Disagreement(CrossCheckReport),
}

/// Cap on the number of enumeration nodes. A node is one fixed choice of a
/// coordinate below the last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    max_nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_nodes: None }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
        }
    }

    /// Reads [`BUDGET_ENV`]; unset or empty means unlimited.
    pub fn from_env() -> Result<Self, EnumerationError> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) if !v.trim().is_empty() => v
                .trim()
                .parse::<u64>()
                .map(Budget::nodes)
                .map_err(|_| EnumerationError::InvalidBudget(v)),
            _ => Ok(Budget::unlimited()),
        }
    }

    pub fn max_nodes(&self) -> Option<u64> {
        self.max_nodes
    }
}

/// Generating function `sum q^{|l|}` over the cone, truncated.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSeries {
    pub series: TruncatedSeries,
}

/// `f = H / prod (1 - q^{d_i})` with `d_i = s_i + ... + s_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numerator {
    pub h: DensePoly,
    /// `d_1, ..., d_n`, largest first.
    pub denominator_exponents: Vec<ExactInt>,
}

/// `sum_t i(R, t) x^t = Q(x) / (1 - x^{s_n})^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HStarVector {
    pub coeffs: DensePoly,
    pub denominator_exponent: ExactInt,
    pub power: usize,
    pub symmetric: bool,
    pub unimodal: bool,
}

/// Three routes to the same yes/no answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub cone_gorenstein: bool,
    pub h_palindromic: bool,
    pub q_palindromic: bool,
}

impl CrossCheckReport {
    pub fn agree(&self) -> bool {
        self.cone_gorenstein == self.h_palindromic && self.h_palindromic == self.q_palindromic
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    budget: Budget,
    degree_limit: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            budget: Budget::unlimited(),
            degree_limit: DEFAULT_DEGREE_LIMIT,
        }
    }
}

#[derive(Clone, Copy)]
enum Bound {
    /// `|l| <= m`
    Weight(u64),
    /// `l_n <= t`
    Height(u64),
}

impl Bound {
    fn limit(self) -> u64 {
        match self {
            Bound::Weight(m) | Bound::Height(m) => m,
        }
    }
}

fn ceil_ratio(prev: u64, num: u64, den: u64) -> u128 {
    (prev as u128 * num as u128).div_ceil(den as u128)
}

struct Walk<'a> {
    s: &'a [u64],
    bound: Bound,
    max_nodes: Option<u64>,
    visited: AtomicU64,
    abort: AtomicBool,
}

struct Acc {
    diff: Vec<u64>,
    pending: u64,
}

impl<'a> Walk<'a> {
    fn new(s: &'a [u64], bound: Bound, budget: Budget) -> Self {
        Walk {
            s,
            bound,
            max_nodes: budget.max_nodes,
            visited: AtomicU64::new(0),
            abort: AtomicBool::new(false),
        }
    }

    fn acc(&self) -> Acc {
        Acc {
            diff: vec![0; self.bound.limit() as usize + 2],
            pending: 0,
        }
    }

    fn tick(&self, acc: &mut Acc) {
        acc.pending += 1;
        if acc.pending >= FLUSH_EVERY {
            self.flush(acc);
        }
    }

    fn flush(&self, acc: &mut Acc) {
        let total = self.visited.fetch_add(acc.pending, Ordering::Relaxed) + acc.pending;
        acc.pending = 0;
        if self.max_nodes.is_some_and(|m| total > m) {
            self.abort.store(true, Ordering::Relaxed);
        }
    }

    /// Smallest value of the bounded quantity over all completions once
    /// coordinate `i` is fixed to `v` on top of weight `partial`.
    fn min_cost(&self, i: usize, v: u64, partial: u64) -> u128 {
        let cap = self.bound.limit() as u128 + 1;
        let mut cur = v as u128;
        let mut weight = partial as u128 + cur;
        for j in i + 1..self.s.len() {
            // Intermediate coordinates may exceed a height bound when the
            // terms are not monotone, so only weights can stop early.
            if matches!(self.bound, Bound::Weight(_)) && cur >= cap {
                return cap;
            }
            cur = ceil_ratio(cur as u64, self.s[j], self.s[j - 1]);
            weight += cur;
        }
        match self.bound {
            Bound::Weight(_) => weight.min(cap),
            Bound::Height(_) => cur.min(cap),
        }
    }

    fn lower(&self, i: usize, prev: u64) -> u128 {
        if i == 0 {
            0
        } else {
            ceil_ratio(prev, self.s[i], self.s[i - 1])
        }
    }

    fn visit(&self, i: usize, prev: u64, partial: u64, acc: &mut Acc) {
        let limit = self.bound.limit() as u128;
        let lo = self.lower(i, prev);
        if i + 1 == self.s.len() {
            let start = match self.bound {
                Bound::Weight(_) => partial as u128 + lo,
                Bound::Height(_) => lo,
            };
            if start <= limit {
                acc.diff[start as usize] += 1;
            }
            return;
        }
        let mut v = lo as u64;
        while self.min_cost(i, v, partial) <= limit {
            if self.abort.load(Ordering::Relaxed) {
                return;
            }
            self.tick(acc);
            self.visit(i + 1, v, partial + v, acc);
            v += 1;
        }
    }

    /// Histogram of the bounded quantity's starting points, one entry per
    /// leaf range.
    fn run(&self) -> Result<Vec<u64>, EnumerationError> {
        let mut acc = if self.s.len() == 1 {
            let mut acc = self.acc();
            self.visit(0, 0, 0, &mut acc);
            acc
        } else {
            let limit = self.bound.limit() as u128;
            let mut top = 0u64;
            while self.min_cost(0, top, 0) <= limit {
                top += 1;
            }
            (0..top)
                .into_par_iter()
                .fold(
                    || self.acc(),
                    |mut acc, v| {
                        if !self.abort.load(Ordering::Relaxed) {
                            self.tick(&mut acc);
                            self.visit(1, v, v, &mut acc);
                        }
                        acc
                    },
                )
                .reduce(
                    || self.acc(),
                    |mut a, mut b| {
                        self.flush(&mut b);
                        for (x, y) in a.diff.iter_mut().zip(&b.diff) {
                            *x += y;
                        }
                        a
                    },
                )
        };
        self.flush(&mut acc);
        if let Some(limit) = self.max_nodes {
            if self.visited.load(Ordering::Relaxed) > limit {
                return Err(EnumerationError::BudgetExceeded { limit });
            }
        }
        acc.diff.truncate(self.bound.limit() as usize + 1);
        Ok(acc.diff)
    }
}

fn prefix_sums(v: &[u128]) -> Vec<u128> {
    v.iter()
        .scan(0u128, |run, &x| {
            *run += x;
            Some(*run)
        })
        .collect()
}

fn to_terms(s: &[ExactInt]) -> Result<Vec<u64>, EnumerationError> {
    if s.is_empty() {
        return Err(EnumerationError::Empty);
    }
    s.iter()
        .enumerate()
        .map(|(i, x)| {
            if !x.is_positive() {
                return Err(EnumerationError::NonPositiveTerm {
                    index: i + 1,
                    value: x.clone(),
                });
            }
            // Keep products of two terms with a coordinate inside u128.
            x.to_u64().filter(|&v| v <= u32::MAX as u64).ok_or_else(|| {
                EnumerationError::TermTooLarge {
                    index: i + 1,
                    value: x.clone(),
                }
            })
        })
        .collect()
}

fn to_series(counts: Vec<u128>) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(counts.into_iter().map(ExactInt::from).collect())
}

fn check_degree(needed: usize, limit: usize) -> Result<(), EnumerationError> {
    if needed > limit {
        return Err(EnumerationError::DegreeBudgetExceeded { needed, limit });
    }
    Ok(())
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    /// Largest series degree [`Enumerator::cross_check_gorenstein`] will
    /// compute.
    pub fn with_degree_limit(mut self, degree_limit: usize) -> Self {
        self.degree_limit = degree_limit;
        self
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn degree_limit(&self) -> usize {
        self.degree_limit
    }

    /// Number of partitions of each weight `0..=m`.
    pub fn weight_series(
        &self,
        s: &[ExactInt],
        m: usize,
    ) -> Result<WeightSeries, EnumerationError> {
        let terms = to_terms(s)?;
        let starts = Walk::new(&terms, Bound::Weight(m as u64), self.budget).run()?;
        let counts = prefix_sums(&starts.iter().map(|&x| x as u128).collect::<Vec<_>>());
        Ok(WeightSeries {
            series: to_series(counts),
        })
    }

    /// `#{l : l_n <= t}` for `t = 0..=t_max`.
    pub fn ehrhart_counts(
        &self,
        s: &[ExactInt],
        t_max: usize,
    ) -> Result<Vec<ExactInt>, EnumerationError> {
        let terms = to_terms(s)?;
        let starts = Walk::new(&terms, Bound::Height(t_max as u64), self.budget).run()?;
        let per_height = prefix_sums(&starts.iter().map(|&x| x as u128).collect::<Vec<_>>());
        Ok(prefix_sums(&per_height)
            .into_iter()
            .map(ExactInt::from)
            .collect())
    }

    pub fn numerator_h(&self, s: &[ExactInt]) -> Result<Numerator, EnumerationError> {
        let terms = to_terms(s)?;
        let d: Vec<u64> = (0..terms.len()).map(|i| terms[i..].iter().sum()).collect();
        let total: u64 = d.iter().sum();
        let top = usize::try_from(total)
            .map_err(|_| EnumerationError::DegreeTooLarge(ExactInt::from(total)))?;

        let mut f = self.weight_series(s, top)?.series;
        for &e in &d {
            f.mul_one_minus_q_pow(e as usize);
        }
        let h = f.to_poly();
        // H sums over a half-open parallelepiped, so its degree stays below D.
        if h.degree().is_some_and(|deg| deg >= top) {
            return Err(EnumerationError::InvariantViolated(format!(
                "numerator has degree {} >= {top}",
                h.degree().unwrap_or(0)
            )));
        }
        if !h.has_nonnegative_coeffs() {
            return Err(EnumerationError::InvariantViolated(format!(
                "numerator {h} has a negative coefficient"
            )));
        }
        let product: ExactInt = s.iter().product();
        if h.eval_at_one() != product {
            return Err(EnumerationError::InvariantViolated(format!(
                "H(1) = {} but the terms multiply to {product}",
                h.eval_at_one()
            )));
        }
        Ok(Numerator {
            h,
            denominator_exponents: d.into_iter().map(ExactInt::from).collect(),
        })
    }

    pub fn h_star(&self, s: &[ExactInt]) -> Result<HStarVector, EnumerationError> {
        let terms = to_terms(s)?;
        let n = terms.len();
        let sn = *terms.last().expect("nonempty") as usize;
        let expected_len = (n + 1) * sn;
        // One extra period past the expected degree, which must come out zero.
        let top = expected_len + sn;

        let counts = self.ehrhart_counts(s, top)?;
        let mut e = TruncatedSeries::from_coeffs(counts);
        for _ in 0..=n {
            e.mul_one_minus_q_pow(sn);
        }
        if let Some(k) = (expected_len..=top).find(|&k| !e.coeff(k).is_zero()) {
            return Err(EnumerationError::InvariantViolated(format!(
                "h* coefficient at degree {k} is {} but should vanish",
                e.coeff(k)
            )));
        }
        let q = e.truncate(expected_len.saturating_sub(1)).to_poly();
        if !q.has_nonnegative_coeffs() {
            return Err(EnumerationError::InvariantViolated(format!(
                "h* vector {q} has a negative entry"
            )));
        }
        let last = s.last().expect("nonempty");
        let want: ExactInt = last * s.iter().product::<ExactInt>();
        if q.eval_at_one() != want {
            return Err(EnumerationError::InvariantViolated(format!(
                "Q(1) = {} but s_n times the product of terms is {want}",
                q.eval_at_one()
            )));
        }
        Ok(HStarVector {
            symmetric: q.is_palindromic(),
            unimodal: q.is_unimodal(),
            coeffs: q,
            denominator_exponent: last.clone(),
            power: n + 1,
        })
    }

    /// Compares the cone test with palindromicity of both numerators. A
    /// disagreement comes back as an error carrying the report.
    pub fn cross_check_gorenstein(
        &self,
        s: &[ExactInt],
    ) -> Result<CrossCheckReport, EnumerationError> {
        let terms = to_terms(s)?;
        let n = terms.len() as u128;
        let d_total: u128 = terms
            .iter()
            .enumerate()
            .map(|(i, &x)| (i as u128 + 1) * x as u128)
            .sum();
        let q_top = (n + 2) * *terms.last().expect("nonempty") as u128;
        let needed = usize::try_from(d_total.max(q_top)).unwrap_or(usize::MAX);
        check_degree(needed, self.degree_limit)?;

        let report = CrossCheckReport {
            cone_gorenstein: lecture_hall_gorenstein(s).is_gorenstein(),
            h_palindromic: self.numerator_h(s)?.h.is_palindromic(),
            q_palindromic: self.h_star(s)?.symmetric,
        };
        if !report.agree() {
            return Err(EnumerationError::Disagreement(report));
        }
        Ok(report)
    }
}

pub fn weight_series(s: &[ExactInt], m: usize) -> Result<WeightSeries, EnumerationError> {
    Enumerator::default().weight_series(s, m)
}

pub fn ehrhart_counts(s: &[ExactInt], t_max: usize) -> Result<Vec<ExactInt>, EnumerationError> {
    Enumerator::default().ehrhart_counts(s, t_max)
}

pub fn numerator_h(s: &[ExactInt]) -> Result<Numerator, EnumerationError> {
    Enumerator::default().numerator_h(s)
}

pub fn h_star(s: &[ExactInt]) -> Result<HStarVector, EnumerationError> {
    Enumerator::default().h_star(s)
}

pub fn cross_check_gorenstein(s: &[ExactInt]) -> Result<CrossCheckReport, EnumerationError> {
    Enumerator::default().cross_check_gorenstein(s)
}

/// Peels off `n` factors `1/(1 - q^e)`, always taking the lowest nonzero
/// positive degree. Succeeds when what is left is `1` through the truncation
/// degree; the exponents come back sorted.
pub fn detect_product_form(f: &TruncatedSeries, n: usize) -> Option<Vec<ExactInt>> {
    if !f.coeff(0).is_one() {
        return None;
    }
    let top = f.truncation_degree();
    let mut rest = f.clone();
    let mut exponents = Vec::with_capacity(n);
    for _ in 0..n {
        let e = (1..=top).find(|&k| !rest.coeff(k).is_zero())?;
        if rest.coeff(e).is_negative() {
            return None;
        }
        rest.mul_one_minus_q_pow(e);
        exponents.push(ExactInt::from(e));
    }
    if !rest.is_one() {
        return None;
    }
    exponents.sort();
    Some(exponents)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::product_form_series;

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().map(|&x| ExactInt::from(x)).collect()
    }

    fn coeffs(series: &TruncatedSeries) -> Vec<ExactInt> {
        series.coeffs().to_vec()
    }

    #[test]
    fn weight_series_small() {
        let f = weight_series(&ints(&[1, 2]), 6).unwrap();
        assert_eq!(coeffs(&f.series), ints(&[1, 1, 1, 2, 2, 2, 3]));
        assert_eq!(f.series, product_form_series(&ints(&[1, 3]), 6).unwrap());
        let f = weight_series(&ints(&[1]), 4).unwrap();
        assert_eq!(coeffs(&f.series), ints(&[1, 1, 1, 1, 1]));
        let f = weight_series(&ints(&[5]), 0).unwrap();
        assert_eq!(coeffs(&f.series), ints(&[1]));
    }

    #[test]
    fn weight_series_counts_both_named_partitions() {
        // (0,3,1,2) and (0,2,1,3) both lie in the (1,9,3,4) cone at weight 6.
        let f = weight_series(&ints(&[1, 9, 3, 4]), 6).unwrap();
        assert!(f.series.coeff(6) >= &ExactInt::from(2));
    }

    #[test]
    fn ehrhart_small() {
        assert_eq!(ehrhart_counts(&ints(&[1]), 3).unwrap(), ints(&[1, 2, 3, 4]));
        assert_eq!(ehrhart_counts(&ints(&[1, 3, 5]), 0).unwrap(), ints(&[1]));
        // Only (0,0) and (0,1): l_1 <= l_2 / 2 forces l_1 = 0.
        assert_eq!(ehrhart_counts(&ints(&[1, 2]), 1).unwrap(), ints(&[1, 2]));
    }

    #[test]
    fn numerator_of_odd_sequence() {
        let num = numerator_h(&ints(&[1, 3, 5, 7])).unwrap();
        // The middle coefficient is 7: H(1) has to be 1*3*5*7 = 105, and a
        // middle 1 would leave the sum at 99.
        assert_eq!(
            num.h,
            DensePoly::from_i64s(&[
                1, 1, 1, 2, 2, 3, 4, 3, 4, 5, 5, 6, 6, 6, 7, 6, 6, 6, 5, 5, 4, 3, 4, 3, 2, 2, 1, 1,
                1
            ])
        );
        assert_eq!(num.denominator_exponents, ints(&[16, 15, 12, 7]));
        assert_eq!(numerator_h(&ints(&[1])).unwrap().h, DensePoly::one());
    }

    #[test]
    fn numerator_of_identity_sequence_cancels() {
        for n in 1..=5i64 {
            let s: Vec<ExactInt> = (1..=n).map(ExactInt::from).collect();
            let num = numerator_h(&s).unwrap();
            let d: Vec<usize> = num
                .denominator_exponents
                .iter()
                .map(|e| e.to_usize().unwrap())
                .collect();
            let odd: Vec<ExactInt> = (1..=n).map(|i| ExactInt::from(2 * i - 1)).collect();
            let top: usize = d.iter().sum();
            let mut f = product_form_series(&odd, top).unwrap();
            for e in d {
                f.mul_one_minus_q_pow(e);
            }
            assert_eq!(f.to_poly(), num.h, "n = {n}");
        }
    }

    #[test]
    fn h_star_examples() {
        let h = h_star(&ints(&[1, 3, 5])).unwrap();
        assert_eq!(
            h.coeffs,
            DensePoly::from_i64s(&[1, 2, 4, 6, 9, 10, 11, 10, 9, 6, 4, 2, 1])
        );
        assert_eq!(h.coeffs.eval_at_one(), ExactInt::from(75));
        assert_eq!((h.denominator_exponent, h.power), (ExactInt::from(5), 4));
        assert!(h.symmetric && h.unimodal);
        assert_eq!(h_star(&ints(&[1])).unwrap().coeffs, DensePoly::one());
    }

    #[test]
    fn cross_check_examples() {
        let all = CrossCheckReport {
            cone_gorenstein: true,
            h_palindromic: true,
            q_palindromic: true,
        };
        let none = CrossCheckReport {
            cone_gorenstein: false,
            h_palindromic: false,
            q_palindromic: false,
        };
        assert_eq!(cross_check_gorenstein(&ints(&[1, 3, 5, 7])).unwrap(), all);
        assert_eq!(
            cross_check_gorenstein(&ints(&[1, 1, 2, 3, 5])).unwrap(),
            none
        );
        assert_eq!(
            cross_check_gorenstein(&ints(&[1, 3, 2, 1, 3, 2])).unwrap(),
            all
        );
    }

    #[test]
    fn cross_check_degree_guard() {
        let e = Enumerator::new().with_degree_limit(10);
        assert!(matches!(
            e.cross_check_gorenstein(&ints(&[1, 3, 5, 7])),
            Err(EnumerationError::DegreeBudgetExceeded { limit: 10, .. })
        ));
    }

    #[test]
    fn product_form_detection() {
        let f = weight_series(&ints(&[1, 2, 3, 4]), 64).unwrap();
        assert_eq!(detect_product_form(&f.series, 4), Some(ints(&[1, 3, 5, 7])));
        let f = weight_series(&ints(&[1, 3, 8]), 64).unwrap();
        assert_eq!(detect_product_form(&f.series, 3), Some(ints(&[1, 4, 11])));
        let f = weight_series(&ints(&[1, 3, 5, 7]), 100).unwrap();
        assert_eq!(detect_product_form(&f.series, 4), None);
    }

    #[test]
    fn product_form_detection_edge_cases() {
        assert_eq!(
            detect_product_form(&TruncatedSeries::one(5), 0),
            Some(vec![])
        );
        assert_eq!(detect_product_form(&TruncatedSeries::one(5), 1), None);
        assert_eq!(detect_product_form(&TruncatedSeries::zero(5), 0), None);
        let twice = product_form_series(&ints(&[2, 2]), 10).unwrap();
        assert_eq!(detect_product_form(&twice, 2), Some(ints(&[2, 2])));
    }

    #[test]
    fn budget_is_enforced() {
        let s = ints(&[1, 2, 3, 4]);
        let tight = Enumerator::new().with_budget(Budget::nodes(10));
        assert_eq!(
            tight.weight_series(&s, 64),
            Err(EnumerationError::BudgetExceeded { limit: 10 })
        );
        let loose = Enumerator::new().with_budget(Budget::nodes(1_000_000));
        assert_eq!(
            loose.weight_series(&s, 64).unwrap(),
            weight_series(&s, 64).unwrap()
        );
    }

    #[test]
    fn rejects_bad_terms() {
        assert_eq!(weight_series(&[], 3), Err(EnumerationError::Empty));
        assert!(matches!(
            weight_series(&ints(&[1, 0]), 3),
            Err(EnumerationError::NonPositiveTerm { index: 2, .. })
        ));
        let huge = vec![ExactInt::one(), ExactInt::from(u64::MAX)];
        assert!(matches!(
            weight_series(&huge, 3),
            Err(EnumerationError::TermTooLarge { index: 2, .. })
        ));
    }
}
