//! Brute-force oracles shared by the integration tests.
//!
//! These deliberately avoid the library's pruning and closed forms: points
//! are checked against the defining inequalities by cross-multiplication and
//! polynomials are plain `i128` vectors.

#![allow(dead_code)]

use lhcone::ExactInt;
use num_traits::ToPrimitive;

pub fn ints(v: &[i64]) -> Vec<ExactInt> {
    v.iter().map(|&x| ExactInt::from(x)).collect()
}

pub fn small(v: &[ExactInt]) -> Vec<i128> {
    v.iter()
        .map(|x| x.to_i128().expect("small value"))
        .collect()
}

/// `l_{i-1} / s_{i-1} <= l_i / s_i`, cross-multiplied.
fn ordered(prev: u64, s_prev: u64, cur: u64, s_cur: u64) -> bool {
    prev as u128 * s_cur as u128 <= cur as u128 * s_prev as u128
}

fn strictly_ordered(prev: u64, s_prev: u64, cur: u64, s_cur: u64) -> bool {
    (prev as u128 * s_cur as u128) < cur as u128 * s_prev as u128
}

/// Every lattice point of the cone with `|l| <= m`, counted by weight.
pub fn box_weight_counts(s: &[u64], m: usize) -> Vec<i128> {
    fn go(s: &[u64], i: usize, prev: u64, weight: usize, m: usize, out: &mut [i128]) {
        if i == s.len() {
            out[weight] += 1;
            return;
        }
        for v in 0..=(m - weight) as u64 {
            if i == 0 || ordered(prev, s[i - 1], v, s[i]) {
                go(s, i + 1, v, weight + v as usize, m, out);
            }
        }
    }
    let mut out = vec![0; m + 1];
    go(s, 0, 0, 0, m, &mut out);
    out
}

/// `#{l : l_n <= t}` for `t = 0..=t_max`, scanning the box
/// `l_i <= t_max * s_i / s_n`.
pub fn box_ehrhart_counts(s: &[u64], t_max: u64) -> Vec<i128> {
    let n = s.len();
    let sn = s[n - 1];
    let caps: Vec<u64> = s.iter().map(|&x| t_max * x / sn).collect();
    let mut by_last = vec![0i128; t_max as usize + 1];
    let mut point = vec![0u64; n];
    fn go(s: &[u64], caps: &[u64], i: usize, point: &mut [u64], by_last: &mut [i128]) {
        if i == s.len() {
            let last = point[s.len() - 1] as usize;
            if last < by_last.len() {
                by_last[last] += 1;
            }
            return;
        }
        for v in 0..=caps[i] {
            if i == 0 || ordered(point[i - 1], s[i - 1], v, s[i]) {
                point[i] = v;
                go(s, caps, i + 1, point, by_last);
            }
        }
    }
    go(s, &caps, 0, &mut point, &mut by_last);
    by_last
        .iter()
        .scan(0i128, |run, &x| {
            *run += x;
            Some(*run)
        })
        .collect()
}

/// Interior lattice points (all inequalities strict) with `l_n <= k`.
fn interior_points(s: &[u64], k: u64) -> Vec<Vec<u64>> {
    let n = s.len();
    let sn = s[n - 1];
    let caps: Vec<u64> = s.iter().map(|&x| k * x / sn).collect();
    let mut out = Vec::new();
    let mut point = vec![0u64; n];
    fn go(s: &[u64], caps: &[u64], i: usize, point: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == s.len() {
            out.push(point.clone());
            return;
        }
        let start = if i == 0 { 1 } else { 0 };
        for v in start..=caps[i] {
            if i == 0 || strictly_ordered(point[i - 1], s[i - 1], v, s[i]) {
                point[i] = v;
                go(s, caps, i + 1, point, out);
            }
        }
    }
    go(s, &caps, 0, &mut point, &mut out);
    out
}

fn in_cone(s: &[u64], p: &[i128]) -> bool {
    if p[0] < 0 {
        return false;
    }
    (1..s.len()).all(|i| p[i - 1] * s[i] as i128 <= p[i] * s[i - 1] as i128)
}

/// The cone is Gorenstein exactly when its interior has a single minimal
/// point under the cone order. Minimal interior points all lie in the
/// half-open parallelepiped on the rays, whose last coordinate is at most
/// `n * s_n`, so a box of that height decides the question.
pub fn box_gorenstein_point(s: &[u64]) -> Option<Vec<u64>> {
    let k = (s.len() as u64 + 1) * s[s.len() - 1];
    let mut pts = interior_points(s, k);
    pts.sort_by_key(|p| p.iter().sum::<u64>());
    let mut minimal: Vec<&Vec<u64>> = Vec::new();
    for p in &pts {
        let dominated = minimal.iter().any(|q| {
            let diff: Vec<i128> = p
                .iter()
                .zip(q.iter())
                .map(|(&a, &b)| a as i128 - b as i128)
                .collect();
            in_cone(s, &diff)
        });
        if !dominated {
            minimal.push(p);
        }
    }
    match minimal.as_slice() {
        [only] => Some((*only).clone()),
        _ => None,
    }
}

/// Number of ways to write each `m <= top` as a nonnegative combination of
/// the exponents (each exponent is a distinct slot, repeats allowed).
pub fn multiset_counts(exponents: &[u64], top: usize) -> Vec<i128> {
    fn go(e: &[u64], i: usize, weight: usize, top: usize, out: &mut [i128]) {
        if i == e.len() {
            out[weight] += 1;
            return;
        }
        let mut w = weight;
        while w <= top {
            go(e, i + 1, w, top, out);
            w += e[i] as usize;
        }
    }
    let mut out = vec![0; top + 1];
    go(exponents, 0, 0, top, &mut out);
    out
}

/// `p * (1 - q^e)`, keeping the length of `p`.
pub fn times_one_minus(p: &[i128], e: usize) -> Vec<i128> {
    (0..p.len())
        .map(|i| p[i] - if i >= e { p[i - e] } else { 0 })
        .collect()
}

pub fn strip(mut p: Vec<i128>) -> Vec<i128> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Every sequence of length `n` with entries in `1..=max`.
pub fn all_sequences(n: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=max).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn big(v: &[u64]) -> Vec<ExactInt> {
    v.iter().map(|&x| ExactInt::from(x)).collect()
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}
