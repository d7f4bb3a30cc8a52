//! Positive integer sequences: second-order recurrences, `(k, l)`-sequences,
//! `u`-generated sequences and their recognizer.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{gcd, ExactInt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence length must be at least 1")]
    ZeroLength,
    #[error(
        "recurrence (l={ell}, b={b}) does not produce positive terms: need l > 0 and l^2 + 4b >= 0"
    )]
    NotPositive { ell: ExactInt, b: ExactInt },
    #[error("(k, l)-sequence needs k >= 2 and l >= 2, got k={k}, l={ell}")]
    KlParameters { k: ExactInt, ell: ExactInt },
    #[error("l-sequence needs l >= 2, got {0}")]
    EllParameter(ExactInt),
    #[error("1 mod k sequence needs k >= 1, got {0}")]
    OneModKParameter(ExactInt),
    #[error("term s_{index} = {value} is not positive")]
    NonPositiveTerm { index: usize, value: ExactInt },
    #[error("u has {got} entries but length {needed} needs at least {needed_u}", needed_u = needed - 1)]
    ShortGenerator { needed: usize, got: usize },
    #[error("requested length {requested} exceeds the {available} listed terms")]
    ListTooShort { requested: usize, available: usize },
    #[error("consecutive terms s_{index} and s_{next} share the factor {common}", next = index + 1)]
    NotCoprime { index: usize, common: ExactInt },
    #[error(transparent)]
    Parse(#[from] SpecParseError),
}

/// Malformed sequence text; `position` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {message}")]
pub struct SpecParseError {
    pub position: usize,
    pub message: String,
}

impl SpecParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        SpecParseError {
            position,
            message: message.into(),
        }
    }
}

/// `l > 0` and `l^2 + 4b >= 0`; with `b = 0` this reduces to `l > 0`.
pub fn validate_positivity(ell: &ExactInt, b: &ExactInt) -> bool {
    ell.is_positive() && !(ell * ell + b * ExactInt::from(4)).is_negative()
}

/// `s_1..s_n` of `s_j = l s_{j-1} + b s_{j-2}` seeded with `s_0 = 0, s_1 = 1`.
pub fn generate_recurrence(
    ell: &ExactInt,
    b: &ExactInt,
    n: usize,
) -> Result<Vec<ExactInt>, SequenceError> {
    if n == 0 {
        return Err(SequenceError::ZeroLength);
    }
    if !validate_positivity(ell, b) {
        return Err(SequenceError::NotPositive {
            ell: ell.clone(),
            b: b.clone(),
        });
    }
    if b.is_zero() {
        let mut out = Vec::with_capacity(n);
        let mut p = ExactInt::one();
        for _ in 0..n {
            out.push(p.clone());
            p *= ell;
        }
        return Ok(out);
    }
    let mut out = Vec::with_capacity(n);
    let (mut prev, mut cur) = (ExactInt::zero(), ExactInt::one());
    for _ in 0..n {
        out.push(cur.clone());
        let next = ell * &cur + b * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(out)
}

fn check_kl(k: &ExactInt, ell: &ExactInt) -> Result<(), SequenceError> {
    let two = ExactInt::from(2);
    if *k < two || *ell < two {
        return Err(SequenceError::KlParameters {
            k: k.clone(),
            ell: ell.clone(),
        });
    }
    Ok(())
}

/// `a_0..a_n` of the `(k, l)`-sequence; index 0 included.
fn kl_with_zero(k: &ExactInt, ell: &ExactInt, n: usize) -> Vec<ExactInt> {
    let mut a = Vec::with_capacity(n + 1);
    a.push(ExactInt::zero());
    if n >= 1 {
        a.push(ExactInt::one());
    }
    for i in 2..=n {
        let mult = if i % 2 == 0 { ell } else { k };
        let next = mult * &a[i - 1] - &a[i - 2];
        a.push(next);
    }
    a
}

/// `a_1..a_n` of the `(k, l)`-sequence:
/// `a_{2i} = l a_{2i-1} - a_{2i-2}`, `a_{2i+1} = k a_{2i} - a_{2i-1}`.
pub fn generate_kl(k: &ExactInt, ell: &ExactInt, n: usize) -> Result<Vec<ExactInt>, SequenceError> {
    if n == 0 {
        return Err(SequenceError::ZeroLength);
    }
    check_kl(k, ell)?;
    Ok(kl_with_zero(k, ell, n).split_off(1))
}

/// Exponents `e_1..e_n` with `f_n = prod 1/(1 - q^{e_i})` for the
/// `(k, l)`-sequence `a`, with `b` the `(l, k)`-sequence:
/// `a_i + b_{i-1}` for even `n`, `b_i + a_{i-1}` for odd `n`.
pub fn kl_product_exponents(
    k: &ExactInt,
    ell: &ExactInt,
    n: usize,
) -> Result<Vec<ExactInt>, SequenceError> {
    if n == 0 {
        return Err(SequenceError::ZeroLength);
    }
    check_kl(k, ell)?;
    let a = kl_with_zero(k, ell, n);
    let b = kl_with_zero(ell, k, n);
    let (x, y) = if n.is_multiple_of(2) {
        (&a, &b)
    } else {
        (&b, &a)
    };
    Ok((1..=n).map(|i| &x[i] + &y[i - 1]).collect())
}

/// `1, k+1, 2k+1, ...`
pub fn generate_one_mod_k(k: &ExactInt, n: usize) -> Result<Vec<ExactInt>, SequenceError> {
    if n == 0 {
        return Err(SequenceError::ZeroLength);
    }
    if !k.is_positive() {
        return Err(SequenceError::OneModKParameter(k.clone()));
    }
    Ok((0..n).map(|i| k * ExactInt::from(i) + 1).collect())
}

/// A witness that a sequence is `u`-generated:
/// `s_2 = u_1 s_1 - 1` and `s_{i+1} = u_i s_i - s_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGeneration {
    pub u: Vec<ExactInt>,
}

/// Outcome of [`recognize_u_generated`] when the coprimality hypothesis holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum URecognition {
    Generated(UGeneration),
    /// `u_index` would have to be `numerator / divisor`, which is not a
    /// positive integer.
    NotGenerated {
        index: usize,
        numerator: ExactInt,
        divisor: ExactInt,
    },
}

impl URecognition {
    pub fn generation(&self) -> Option<&UGeneration> {
        match self {
            URecognition::Generated(g) => Some(g),
            URecognition::NotGenerated { .. } => None,
        }
    }
}

/// Index (1-based) of the first consecutive pair sharing a factor.
pub fn first_non_coprime(s: &[ExactInt]) -> Option<(usize, ExactInt)> {
    s.windows(2).enumerate().find_map(|(i, w)| {
        let g = gcd(&w[0], &w[1]);
        (!g.is_one()).then_some((i + 1, g))
    })
}

/// Recover `u` from a sequence whose consecutive terms are coprime.
///
/// A shared factor between neighbours is reported as
/// [`SequenceError::NotCoprime`]; that is a hypothesis violation, not a
/// negative answer.
pub fn recognize_u_generated(s: &[ExactInt]) -> Result<URecognition, SequenceError> {
    if s.is_empty() {
        return Err(SequenceError::ZeroLength);
    }
    if let Some((index, value)) = s.iter().enumerate().find(|(_, v)| !v.is_positive()) {
        return Err(SequenceError::NonPositiveTerm {
            index: index + 1,
            value: value.clone(),
        });
    }
    if let Some((index, common)) = first_non_coprime(s) {
        return Err(SequenceError::NotCoprime { index, common });
    }
    let mut u = Vec::with_capacity(s.len().saturating_sub(1));
    for i in 0..s.len() - 1 {
        let numerator = if i == 0 {
            &s[1] + 1
        } else {
            &s[i + 1] + &s[i - 1]
        };
        let (q, r) = numerator.div_rem(&s[i]);
        if !r.is_zero() || !q.is_positive() {
            return Ok(URecognition::NotGenerated {
                index: i + 1,
                numerator,
                divisor: s[i].clone(),
            });
        }
        u.push(q);
    }
    Ok(URecognition::Generated(UGeneration { u }))
}

/// The `u`-generated sequence of length `n` starting at `s1`.
pub fn generate_from_u(
    u: &[ExactInt],
    s1: &ExactInt,
    n: usize,
) -> Result<Vec<ExactInt>, SequenceError> {
    if n == 0 {
        return Err(SequenceError::ZeroLength);
    }
    if u.len() + 1 < n {
        return Err(SequenceError::ShortGenerator {
            needed: n,
            got: u.len(),
        });
    }
    if !s1.is_positive() {
        return Err(SequenceError::NonPositiveTerm {
            index: 1,
            value: s1.clone(),
        });
    }
    let mut s = Vec::with_capacity(n);
    s.push(s1.clone());
    for i in 1..n {
        let next = if i == 1 {
            &u[0] * &s[0] - 1
        } else {
            &u[i - 1] * &s[i - 1] - &s[i - 2]
        };
        if !next.is_positive() {
            return Err(SequenceError::NonPositiveTerm {
                index: i + 1,
                value: next,
            });
        }
        s.push(next);
    }
    Ok(s)
}

/// A sequence family in its textual form, without a length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceKind {
    /// `list:s1,s2,...`
    Explicit(Vec<ExactInt>),
    /// `rec:l,b`
    Recurrence { ell: ExactInt, b: ExactInt },
    /// `kl:k,l`
    Kl { k: ExactInt, ell: ExactInt },
    /// `ell:l`
    Ell(ExactInt),
    /// `u:u1,u2,...;s1`
    UGenerated { u: Vec<ExactInt>, s1: ExactInt },
    /// `onemodk:k`
    OneModK(ExactInt),
}

impl SequenceKind {
    /// Length implied by the text itself, for families that carry one.
    pub fn natural_len(&self) -> Option<usize> {
        match self {
            SequenceKind::Explicit(v) => Some(v.len()),
            SequenceKind::UGenerated { u, .. } => Some(u.len() + 1),
            _ => None,
        }
    }

    pub fn terms(&self, n: usize) -> Result<Vec<ExactInt>, SequenceError> {
        if n == 0 {
            return Err(SequenceError::ZeroLength);
        }
        match self {
            SequenceKind::Explicit(v) => {
                if n > v.len() {
                    return Err(SequenceError::ListTooShort {
                        requested: n,
                        available: v.len(),
                    });
                }
                if let Some((i, value)) = v[..n].iter().enumerate().find(|(_, x)| !x.is_positive())
                {
                    return Err(SequenceError::NonPositiveTerm {
                        index: i + 1,
                        value: value.clone(),
                    });
                }
                Ok(v[..n].to_vec())
            }
            SequenceKind::Recurrence { ell, b } => generate_recurrence(ell, b, n),
            SequenceKind::Kl { k, ell } => generate_kl(k, ell, n),
            SequenceKind::Ell(ell) => {
                if *ell < ExactInt::from(2) {
                    return Err(SequenceError::EllParameter(ell.clone()));
                }
                generate_kl(ell, ell, n)
            }
            SequenceKind::UGenerated { u, s1 } => generate_from_u(u, s1, n),
            SequenceKind::OneModK(k) => generate_one_mod_k(k, n),
        }
    }
}

fn join(v: &[ExactInt]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::Explicit(v) => write!(f, "list:{}", join(v)),
            SequenceKind::Recurrence { ell, b } => write!(f, "rec:{ell},{b}"),
            SequenceKind::Kl { k, ell } => write!(f, "kl:{k},{ell}"),
            SequenceKind::Ell(ell) => write!(f, "ell:{ell}"),
            SequenceKind::UGenerated { u, s1 } => write!(f, "u:{};{s1}", join(u)),
            SequenceKind::OneModK(k) => write!(f, "onemodk:{k}"),
        }
    }
}

/// Parse a comma-separated integer list starting at byte `offset` of the
/// original input.
fn parse_ints(text: &str, offset: usize) -> Result<Vec<ExactInt>, SpecParseError> {
    let mut out = Vec::new();
    let mut pos = offset;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let token = piece.trim();
        if token.is_empty() {
            return Err(SpecParseError::new(pos + lead, "expected an integer"));
        }
        let value = token
            .parse::<ExactInt>()
            .map_err(|_| SpecParseError::new(pos + lead, format!("`{token}` is not an integer")))?;
        out.push(value);
        pos += piece.len() + 1;
    }
    Ok(out)
}

fn exactly<const N: usize>(
    values: Vec<ExactInt>,
    offset: usize,
    what: &str,
) -> Result<[ExactInt; N], SpecParseError> {
    let got = values.len();
    values.try_into().map_err(|_| {
        SpecParseError::new(offset, format!("{what} takes {N} parameter(s), got {got}"))
    })
}

impl FromStr for SequenceKind {
    type Err = SpecParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let colon = text
            .find(':')
            .ok_or_else(|| SpecParseError::new(0, "expected `<family>:<parameters>`"))?;
        let tag = text[..colon].trim();
        let body = &text[colon + 1..];
        let at = colon + 1;
        match tag {
            "list" => Ok(SequenceKind::Explicit(parse_ints(body, at)?)),
            "rec" => {
                let [ell, b] = exactly(parse_ints(body, at)?, at, "rec")?;
                Ok(SequenceKind::Recurrence { ell, b })
            }
            "kl" => {
                let [k, ell] = exactly(parse_ints(body, at)?, at, "kl")?;
                Ok(SequenceKind::Kl { k, ell })
            }
            "ell" => {
                let [ell] = exactly(parse_ints(body, at)?, at, "ell")?;
                Ok(SequenceKind::Ell(ell))
            }
            "onemodk" => {
                let [k] = exactly(parse_ints(body, at)?, at, "onemodk")?;
                Ok(SequenceKind::OneModK(k))
            }
            "u" => {
                let semi = body.find(';').ok_or_else(|| {
                    SpecParseError::new(at + body.len(), "expected `;s1` after the u list")
                })?;
                let u_text = &body[..semi];
                let u = if u_text.trim().is_empty() {
                    Vec::new()
                } else {
                    parse_ints(u_text, at)?
                };
                let s1_at = at + semi + 1;
                let [s1] = exactly(parse_ints(&body[semi + 1..], s1_at)?, s1_at, "s1")?;
                Ok(SequenceKind::UGenerated { u, s1 })
            }
            other => Err(SpecParseError::new(
                text.find(other).unwrap_or(0),
                format!("unknown sequence family `{other}`"),
            )),
        }
    }
}

/// A sequence family together with its realized, validated terms `s_1..s_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    kind: SequenceKind,
    terms: Vec<ExactInt>,
}

impl SequenceSpec {
    pub fn new(kind: SequenceKind, n: usize) -> Result<Self, SequenceError> {
        let terms = kind.terms(n)?;
        Ok(SequenceSpec { kind, terms })
    }

    /// Parse the text form; `n` defaults to the length the text implies.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self, SequenceError> {
        let kind: SequenceKind = text.parse()?;
        let n = match (n, kind.natural_len()) {
            (Some(n), _) => n,
            (None, Some(n)) => n,
            (None, None) => return Err(SequenceError::ZeroLength),
        };
        Self::new(kind, n)
    }

    pub fn explicit(terms: Vec<ExactInt>) -> Result<Self, SequenceError> {
        let n = terms.len();
        Self::new(SequenceKind::Explicit(terms), n)
    }

    pub fn kind(&self) -> &SequenceKind {
        &self.kind
    }

    pub fn terms(&self) -> &[ExactInt] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().map(|&x| ExactInt::from(x)).collect()
    }

    fn int(x: i64) -> ExactInt {
        ExactInt::from(x)
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(
            generate_recurrence(&int(3), &int(9), 6).unwrap(),
            ints(&[1, 3, 18, 81, 405, 1944])
        );
        assert_eq!(
            generate_recurrence(&int(2), &int(-1), 5).unwrap(),
            ints(&[1, 2, 3, 4, 5])
        );
        assert_eq!(
            generate_recurrence(&int(1), &int(1), 5).unwrap(),
            ints(&[1, 1, 2, 3, 5])
        );
    }

    #[test]
    fn recurrence_b_zero_is_powers() {
        assert_eq!(
            generate_recurrence(&int(3), &int(0), 5).unwrap(),
            ints(&[1, 3, 9, 27, 81])
        );
    }

    #[test]
    fn positivity() {
        assert!(validate_positivity(&int(1), &int(1)));
        assert!(!validate_positivity(&int(-2), &int(1)));
        assert!(!validate_positivity(&int(2), &int(-2)));
        assert!(validate_positivity(&int(4), &int(-4)));
        assert!(validate_positivity(&int(1), &int(0)));
        assert!(!validate_positivity(&int(0), &int(0)));
        assert!(matches!(
            generate_recurrence(&int(2), &int(-2), 3),
            Err(SequenceError::NotPositive { .. })
        ));
    }

    #[test]
    fn kl_examples() {
        assert_eq!(
            generate_kl(&int(2), &int(2), 4).unwrap(),
            ints(&[1, 2, 3, 4])
        );
        assert_eq!(
            generate_kl(&int(3), &int(3), 4).unwrap(),
            ints(&[1, 3, 8, 21])
        );
        assert_eq!(
            generate_kl(&int(2), &int(3), 4).unwrap(),
            ints(&[1, 3, 5, 12])
        );
        assert!(matches!(
            generate_kl(&int(1), &int(3), 4),
            Err(SequenceError::KlParameters { .. })
        ));
    }

    #[test]
    fn kl_exponent_examples() {
        assert_eq!(
            kl_product_exponents(&int(2), &int(2), 4).unwrap(),
            ints(&[1, 3, 5, 7])
        );
        assert_eq!(
            kl_product_exponents(&int(3), &int(3), 3).unwrap(),
            ints(&[1, 4, 11])
        );
        assert_eq!(
            kl_product_exponents(&int(2), &int(2), 1).unwrap(),
            ints(&[1])
        );
        // a = (0,1,3,5,...), b = (0,1,2,5,...): n = 2 uses a_i + b_{i-1}.
        assert_eq!(
            kl_product_exponents(&int(2), &int(3), 2).unwrap(),
            ints(&[1, 4])
        );
    }

    #[test]
    fn ell_sequence_matches_recurrence_with_b_minus_one() {
        for ell in 2..7 {
            assert_eq!(
                generate_kl(&int(ell), &int(ell), 12).unwrap(),
                generate_recurrence(&int(ell), &int(-1), 12).unwrap()
            );
        }
    }

    #[test]
    fn recognize_examples() {
        let r = recognize_u_generated(&ints(&[1, 3, 2, 1, 3, 2])).unwrap();
        assert_eq!(r.generation().unwrap().u, ints(&[4, 1, 2, 5, 1]));

        for k in 1..6 {
            let s = ints(&[1, k + 1, 2 * k + 1, 3 * k + 1]);
            let r = recognize_u_generated(&s).unwrap();
            assert_eq!(r.generation().unwrap().u, ints(&[k + 2, 2, 2]));
        }

        let r = recognize_u_generated(&ints(&[1, 1, 2, 3, 5])).unwrap();
        assert_eq!(
            r,
            URecognition::NotGenerated {
                index: 4,
                numerator: int(7),
                divisor: int(3)
            }
        );
    }

    #[test]
    fn recognize_distinguishes_hypothesis_violation() {
        let err = recognize_u_generated(&ints(&[1, 3, 18])).unwrap_err();
        assert_eq!(
            err,
            SequenceError::NotCoprime {
                index: 2,
                common: int(3)
            }
        );
    }

    #[test]
    fn generate_from_u_examples() {
        assert_eq!(
            generate_from_u(&ints(&[4, 1, 2, 5, 1]), &int(1), 6).unwrap(),
            ints(&[1, 3, 2, 1, 3, 2])
        );
        assert_eq!(
            generate_from_u(&ints(&[3]), &int(1), 2).unwrap(),
            ints(&[1, 2])
        );
        for (k, ell) in [(2, 2), (2, 3), (3, 2), (4, 3)] {
            let u: Vec<_> = (0..9)
                .map(|i| match i {
                    0 => int(ell + 1),
                    i if i % 2 == 1 => int(k),
                    _ => int(ell),
                })
                .collect();
            assert_eq!(
                generate_from_u(&u, &int(1), 10).unwrap(),
                generate_kl(&int(k), &int(ell), 10).unwrap()
            );
        }
    }

    #[test]
    fn generate_from_u_rejects_nonpositive_term() {
        let err = generate_from_u(&ints(&[1, 5]), &int(1), 3).unwrap_err();
        assert_eq!(
            err,
            SequenceError::NonPositiveTerm {
                index: 2,
                value: int(0)
            }
        );
        assert!(matches!(
            generate_from_u(&ints(&[3]), &int(1), 4),
            Err(SequenceError::ShortGenerator { .. })
        ));
    }

    #[test]
    fn parse_all_families() {
        let cases = [
            ("rec:3,9", 4, ints(&[1, 3, 18, 81])),
            ("kl:2,3", 4, ints(&[1, 3, 5, 12])),
            ("ell:3", 3, ints(&[1, 3, 8])),
            ("u:4,1,2,5,1;1", 6, ints(&[1, 3, 2, 1, 3, 2])),
            ("onemodk:3", 4, ints(&[1, 4, 7, 10])),
            ("list:1,9,3,4", 4, ints(&[1, 9, 3, 4])),
            ("rec: 1, 1", 5, ints(&[1, 1, 2, 3, 5])),
        ];
        for (text, n, want) in cases {
            let spec = SequenceSpec::parse(text, Some(n)).unwrap();
            assert_eq!(spec.terms(), want.as_slice(), "{text}");
        }
        assert_eq!(SequenceSpec::parse("list:1,3,5", None).unwrap().len(), 3);
        assert_eq!(SequenceSpec::parse("u:4,1;1", None).unwrap().len(), 3);
        assert_eq!(
            SequenceSpec::parse("rec:1,1", None),
            Err(SequenceError::ZeroLength)
        );
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "rec:3,-9",
            "kl:2,3",
            "ell:4",
            "u:4,1,2;2",
            "onemodk:5",
            "list:1,3,5",
        ] {
            let kind: SequenceKind = text.parse().unwrap();
            assert_eq!(kind.to_string(), text);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = "rec:3,x".parse::<SequenceKind>().unwrap_err();
        assert_eq!(err.position, 6);
        let err = "list:1,,3".parse::<SequenceKind>().unwrap_err();
        assert_eq!(err.position, 7);
        let err = "foo:1".parse::<SequenceKind>().unwrap_err();
        assert_eq!(err.position, 0);
        let err = "rec:1".parse::<SequenceKind>().unwrap_err();
        assert_eq!(err.position, 4);
        let err = "u:1,2".parse::<SequenceKind>().unwrap_err();
        assert_eq!(err.position, 5);
        assert!("nocolon".parse::<SequenceKind>().is_err());
    }

    #[test]
    fn explicit_list_validates_terms() {
        assert!(matches!(
            SequenceSpec::parse("list:1,0,3", None),
            Err(SequenceError::NonPositiveTerm { index: 2, .. })
        ));
        assert!(matches!(
            SequenceSpec::parse("list:1,2", Some(3)),
            Err(SequenceError::ListTooShort { .. })
        ));
        assert!(matches!(
            SequenceSpec::parse("ell:1", Some(3)),
            Err(SequenceError::EllParameter(_))
        ));
    }
}
