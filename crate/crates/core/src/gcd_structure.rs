//! How `l` and `b` control `gcd(s_{n+1}, s_n)` for `s_j = l s_{j-1} + b s_{j-2}`.
//!
//! With `r = gcd(l, b)`, `t = gcd(l^2/r, b/r)` and `sigma = r/t`, the
//! consecutive gcds are sandwiched as
//! `t^{n-1} sigma^{floor(n/2)} | gcd(s_{n+1}, s_n) | t^n sigma^{floor(n/2)}`,
//! which bounds how long a non-`l`-sequence can keep its cone Gorenstein.

use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use thiserror::Error;

use crate::arith::{gcd, ExactInt};
use crate::gorenstein::gorenstein_fail_index;
use crate::sequences::{generate_recurrence, validate_positivity, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcdError {
    #[error("l and b must both be nonzero (l={ell}, b={b})")]
    ZeroParameter { ell: ExactInt, b: ExactInt },
    #[error("l={ell}, b={b} does not give a positive sequence")]
    NotPositive { ell: ExactInt, b: ExactInt },
    #[error("b = {0} is excluded here")]
    ExcludedB(ExactInt),
    #[error("no stable window of width {horizon} starts at or before index {horizon}")]
    HorizonTooSmall { horizon: usize },
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// `r = gcd(l, b)`, `t = gcd(l^2/r, b/r)`, `sigma = r/t`, `l = sigma t gamma`,
/// `b = sigma t^2 beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdProfile {
    pub r: ExactInt,
    pub t: ExactInt,
    pub sigma: ExactInt,
    pub gamma: ExactInt,
    pub beta: ExactInt,
}

impl GcdProfile {
    /// `t (r + |b|)`, the bound that `s_n / (t^{n-2} sigma^{floor((n-1)/2)})`
    /// has to exceed.
    pub fn n0_threshold(&self, b: &ExactInt) -> ExactInt {
        &self.t * (&self.r + b.abs())
    }

    /// `t^{n-1} sigma^{floor(n/2)}`.
    pub fn normalizer(&self, n: usize) -> ExactInt {
        Pow::pow(&self.t, n - 1) * Pow::pow(&self.sigma, n / 2)
    }
}

fn check_nonzero(ell: &ExactInt, b: &ExactInt) -> Result<(), GcdError> {
    if ell.is_zero() || b.is_zero() {
        return Err(GcdError::ZeroParameter {
            ell: ell.clone(),
            b: b.clone(),
        });
    }
    Ok(())
}

fn check_positive(ell: &ExactInt, b: &ExactInt) -> Result<(), GcdError> {
    check_nonzero(ell, b)?;
    if !validate_positivity(ell, b) {
        return Err(GcdError::NotPositive {
            ell: ell.clone(),
            b: b.clone(),
        });
    }
    Ok(())
}

pub fn gcd_profile(ell: &ExactInt, b: &ExactInt) -> Result<GcdProfile, GcdError> {
    check_nonzero(ell, b)?;
    let r = gcd(ell, b);
    let t = gcd(&(ell * ell / &r), &(b / &r));
    let sigma = &r / &t;
    let gamma = ell / &r;
    let beta = b / (&r * &t);
    let p = GcdProfile {
        r,
        t,
        sigma,
        gamma,
        beta,
    };

    let identities = [
        (p.r == &p.sigma * &p.t, "r = sigma t"),
        (
            gcd(&(ell * ell), b) == &p.sigma * &p.t * &p.t,
            "gcd(l^2, b) = sigma t^2",
        ),
        (*ell == &p.sigma * &p.t * &p.gamma, "l = sigma t gamma"),
        (*b == &p.sigma * &p.t * &p.t * &p.beta, "b = sigma t^2 beta"),
        (gcd(&p.gamma, &p.beta).is_one(), "gcd(gamma, beta) = 1"),
        (gcd(&p.gamma, &p.t).is_one(), "gcd(gamma, t) = 1"),
        (gcd(&p.sigma, &p.beta).is_one(), "gcd(sigma, beta) = 1"),
    ];
    if let Some((_, what)) = identities.iter().find(|(ok, _)| !ok) {
        return Err(GcdError::InvariantViolated(format!(
            "{what} fails for l={ell}, b={b}"
        )));
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioRow {
    pub n: usize,
    /// `gcd(s_{n+1}, s_n)`
    pub gcd: ExactInt,
    /// `t^{n-1} sigma^{floor(n/2)}`
    pub normalizer: ExactInt,
    /// `gcd / normalizer`, a positive divisor of `t`
    pub u: ExactInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioTable {
    pub ell: ExactInt,
    pub b: ExactInt,
    pub profile: GcdProfile,
    pub rows: Vec<RatioRow>,
}

impl RatioTable {
    pub fn ratios(&self) -> Vec<ExactInt> {
        self.rows.iter().map(|r| r.u.clone()).collect()
    }

    /// Columns `n,gcd,normalizer,u_n`, header included.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,gcd,normalizer,u_n\n");
        for row in &self.rows {
            let _ = writeln!(out, "{},{},{},{}", row.n, row.gcd, row.normalizer, row.u);
        }
        out
    }
}

/// `u_n = gcd(s_{n+1}, s_n) / (t^{n-1} sigma^{floor(n/2)})` for `n = 1..count`,
/// each checked to be a positive integer dividing `t`.
pub fn ratio_table(ell: &ExactInt, b: &ExactInt, count: usize) -> Result<RatioTable, GcdError> {
    check_positive(ell, b)?;
    let profile = gcd_profile(ell, b)?;
    let s = generate_recurrence(ell, b, count + 1)?;
    let mut rows = Vec::with_capacity(count);
    for n in 1..=count {
        let g = gcd(&s[n], &s[n - 1]);
        let normalizer = profile.normalizer(n);
        let (u, rem) = g.div_rem(&normalizer);
        if !rem.is_zero() || !u.is_positive() || !profile.t.is_multiple_of(&u) {
            return Err(GcdError::InvariantViolated(format!(
                "gcd(s_{}, s_{n}) = {g} is not normalizer {normalizer} times a divisor of t = {}",
                n + 1,
                profile.t
            )));
        }
        rows.push(RatioRow {
            n,
            gcd: g,
            normalizer,
            u,
        });
    }
    Ok(RatioTable {
        ell: ell.clone(),
        b: b.clone(),
        profile,
        rows,
    })
}

/// `f_1..f_n` of `f_j = (l/t) f_{j-1} + (b/t^2) f_{j-2}` with `f_0 = 0, f_1 = 1`.
///
/// Checks `s_j = t^{j-1} f_j` and `gcd(f_{j+1}, f_j) = sigma^{floor(j/2)}`
/// along the way.
pub fn f_sequence(ell: &ExactInt, b: &ExactInt, n: usize) -> Result<Vec<ExactInt>, GcdError> {
    check_positive(ell, b)?;
    let p = gcd_profile(ell, b)?;
    let ell_f = ell / &p.t;
    let b_f = b / (&p.t * &p.t);
    let f = generate_recurrence(&ell_f, &b_f, n)?;
    let s = generate_recurrence(ell, b, n)?;
    for j in 1..=n {
        if s[j - 1] != Pow::pow(&p.t, j - 1) * &f[j - 1] {
            return Err(GcdError::InvariantViolated(format!(
                "s_{j} != t^{} f_{j}",
                j - 1
            )));
        }
        if j < n && gcd(&f[j], &f[j - 1]) != Pow::pow(&p.sigma, j / 2) {
            return Err(GcdError::InvariantViolated(format!(
                "gcd(f_{}, f_{j}) != sigma^{}",
                j + 1,
                j / 2
            )));
        }
    }
    Ok(f)
}

/// Upper limit on the index scanned while looking for the first hit.
const FIRST_HIT_SCAN_LIMIT: usize = 100_000;

struct GrowthCheck {
    profile: GcdProfile,
    bound: ExactInt,
    ell: ExactInt,
    b: ExactInt,
    prev: ExactInt,
    cur: ExactInt,
    n: usize,
}

impl GrowthCheck {
    fn new(ell: &ExactInt, b: &ExactInt) -> Result<Self, GcdError> {
        check_positive(ell, b)?;
        let profile = gcd_profile(ell, b)?;
        let bound = profile.n0_threshold(b);
        Ok(GrowthCheck {
            profile,
            bound,
            ell: ell.clone(),
            b: b.clone(),
            prev: ExactInt::zero(),
            cur: ExactInt::one(),
            n: 1,
        })
    }

    /// Whether `s_n / (t^{n-2} sigma^{floor((n-1)/2)}) > t (r + |b|)` at the
    /// current `n`, then advance to `n + 1`.
    fn step(&mut self) -> (usize, bool) {
        let n = self.n;
        let t = &self.profile.t;
        // s_n t^2 > bound t^n sigma^{floor((n-1)/2)}
        let lhs = &self.cur * t * t;
        let rhs = &self.bound * Pow::pow(t, n) * Pow::pow(&self.profile.sigma, (n - 1) / 2);
        let holds = lhs > rhs;
        let next = &self.ell * &self.cur + &self.b * &self.prev;
        self.prev = std::mem::replace(&mut self.cur, next);
        self.n += 1;
        (n, holds)
    }
}

/// First index at which the growth inequality holds at all.
fn first_hit(ell: &ExactInt, b: &ExactInt) -> Result<usize, GcdError> {
    let mut check = GrowthCheck::new(ell, b)?;
    loop {
        let (n, holds) = check.step();
        if holds {
            return Ok(n);
        }
        if n >= FIRST_HIT_SCAN_LIMIT {
            return Err(GcdError::HorizonTooSmall { horizon: n });
        }
    }
}

/// Window width used when the caller does not choose one:
/// `max(64, 4 * first index where the inequality holds)`.
pub fn default_n0_horizon(ell: &ExactInt, b: &ExactInt) -> Result<usize, GcdError> {
    Ok(64.max(4 * first_hit(ell, b)?))
}

/// Smallest `n0 <= horizon` such that
/// `s_n / (t^{n-2} sigma^{floor((n-1)/2)}) > t (r + |b|)` for every `n` in
/// `[n0, n0 + horizon]`.
pub fn find_n0(ell: &ExactInt, b: &ExactInt, horizon: usize) -> Result<usize, GcdError> {
    let mut check = GrowthCheck::new(ell, b)?;
    let mut run_start: Option<usize> = None;
    loop {
        let (n, holds) = check.step();
        if holds {
            let start = *run_start.get_or_insert(n);
            if n - start >= horizon {
                return Ok(start);
            }
        } else {
            run_start = None;
            if n >= horizon {
                return Err(GcdError::HorizonTooSmall { horizon });
            }
        }
    }
}

/// Outcome of checking the universal failure threshold for recurrences with
/// `gcd(l, b) = gcd(l^2, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cor311Verdict {
    Applicable {
        /// 5 when `b > 0`, 6 when `b < -1`.
        threshold: usize,
        /// First failing dimension, searched up to `threshold`.
        actual: Option<usize>,
        holds: bool,
    },
    NotApplicable {
        gcd_l_b: ExactInt,
        gcd_l2_b: ExactInt,
    },
}

pub fn corollary_311_check(ell: &ExactInt, b: &ExactInt) -> Result<Cor311Verdict, GcdError> {
    check_positive(ell, b)?;
    if *b == ExactInt::from(-1) {
        return Err(GcdError::ExcludedB(b.clone()));
    }
    let gcd_l_b = gcd(ell, b);
    let gcd_l2_b = gcd(&(ell * ell), b);
    if gcd_l_b != gcd_l2_b {
        return Ok(Cor311Verdict::NotApplicable { gcd_l_b, gcd_l2_b });
    }
    let threshold = if b.is_positive() { 5 } else { 6 };
    let actual = gorenstein_fail_index(ell, b, threshold)?;
    Ok(Cor311Verdict::Applicable {
        threshold,
        actual,
        holds: actual.is_some_and(|a| a <= threshold),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> ExactInt {
        ExactInt::from(x)
    }

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().map(|&x| ExactInt::from(x)).collect()
    }

    #[test]
    fn profile_examples() {
        let p = gcd_profile(&int(6), &int(36)).unwrap();
        assert_eq!(
            (p.r, p.t, p.sigma, p.gamma, p.beta),
            (int(6), int(6), int(1), int(1), int(1))
        );
        let p = gcd_profile(&int(90), &int(-756)).unwrap();
        assert_eq!((p.r, p.t, p.sigma), (int(18), int(6), int(3)));
        assert_eq!((p.gamma, p.beta), (int(5), int(-7)));
        let p = gcd_profile(&int(2), &int(-1)).unwrap();
        assert_eq!(
            (p.r, p.t, p.sigma, p.gamma, p.beta),
            (int(1), int(1), int(1), int(2), int(-1))
        );
    }

    #[test]
    fn profile_rejects_zero() {
        assert!(matches!(
            gcd_profile(&int(3), &int(0)),
            Err(GcdError::ZeroParameter { .. })
        ));
        assert!(matches!(
            gcd_profile(&int(0), &int(3)),
            Err(GcdError::ZeroParameter { .. })
        ));
    }

    #[test]
    fn ratio_tables() {
        let t = ratio_table(&int(6), &int(36), 24).unwrap();
        assert_eq!(
            t.ratios(),
            ints(&[1, 1, 2, 3, 1, 2, 1, 3, 2, 1, 1, 6, 1, 1, 2, 3, 1, 2, 1, 3, 2, 1, 1, 6])
        );
        let t = ratio_table(&int(90), &int(-756), 24).unwrap();
        let block = [1, 1, 2, 1, 1, 6];
        let want: Vec<i64> = block.iter().cycle().take(24).copied().collect();
        assert_eq!(t.ratios(), ints(&want));
        let t = ratio_table(&int(2), &int(-1), 5).unwrap();
        assert_eq!(t.ratios(), ints(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn ratio_table_csv() {
        let t = ratio_table(&int(6), &int(36), 3).unwrap();
        assert_eq!(
            t.to_csv(),
            "n,gcd,normalizer,u_n\n1,1,1,1\n2,6,6,1\n3,72,36,2\n"
        );
    }

    #[test]
    fn ratio_table_preconditions() {
        assert!(matches!(
            ratio_table(&int(2), &int(-2), 3),
            Err(GcdError::NotPositive { .. })
        ));
        assert!(matches!(
            ratio_table(&int(2), &int(0), 3),
            Err(GcdError::ZeroParameter { .. })
        ));
    }

    #[test]
    fn f_sequences() {
        assert_eq!(
            f_sequence(&int(6), &int(36), 8).unwrap(),
            ints(&[1, 1, 2, 3, 5, 8, 13, 21])
        );
        assert_eq!(
            f_sequence(&int(2), &int(-1), 5).unwrap(),
            ints(&[1, 2, 3, 4, 5])
        );
        assert_eq!(f_sequence(&int(90), &int(-756), 3).unwrap()[1], int(15));
    }

    #[test]
    fn n0_examples() {
        assert_eq!(find_n0(&int(2), &int(-1), 32).unwrap(), 3);
        assert_eq!(find_n0(&int(1), &int(1), 32).unwrap(), 4);
        let p = gcd_profile(&int(2), &int(-1)).unwrap();
        assert_eq!(p.n0_threshold(&int(-1)), int(2));
    }

    #[test]
    fn n0_horizon_too_small() {
        // s = 2^n - 1 grows, but the inequality first holds well after n = 1.
        let first = first_hit(&int(3), &int(-2)).unwrap();
        assert!(first > 1);
        assert_eq!(
            find_n0(&int(3), &int(-2), first - 1),
            Err(GcdError::HorizonTooSmall { horizon: first - 1 })
        );
        assert!(default_n0_horizon(&int(3), &int(-2)).unwrap() >= 64);
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(
            corollary_311_check(&int(1), &int(1)).unwrap(),
            Cor311Verdict::Applicable {
                threshold: 5,
                actual: Some(5),
                holds: true
            }
        );
        assert_eq!(
            corollary_311_check(&int(5), &int(-5)).unwrap(),
            Cor311Verdict::Applicable {
                threshold: 6,
                actual: Some(6),
                holds: true
            }
        );
        match corollary_311_check(&int(2), &int(1)).unwrap() {
            Cor311Verdict::Applicable {
                threshold,
                actual,
                holds,
            } => {
                assert_eq!(threshold, 5);
                assert!(holds);
                assert!(actual.unwrap() <= 5);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            corollary_311_check(&int(6), &int(36)).unwrap(),
            Cor311Verdict::NotApplicable { .. }
        ));
        assert!(matches!(
            corollary_311_check(&int(3), &int(-1)),
            Err(GcdError::ExcludedB(_))
        ));
    }

    #[test]
    fn corollary_tightness_points() {
        use crate::gorenstein::lecture_hall_gorenstein;
        let s = generate_recurrence(&int(5), &int(-5), 5).unwrap();
        assert_eq!(
            lecture_hall_gorenstein(&s).point().unwrap(),
            ints(&[1, 6, 25, 94, 345]).as_slice()
        );
    }
}
