use serde::Serialize;

use lhcone::gcd_structure::{default_n0_horizon, Cor311Verdict};
use lhcone::sequences::first_non_coprime;
use lhcone::{
    corollary_311_check, detect_product_form, find_n0, gcd_profile, lecture_hall_gorenstein,
    product_form_series, ratio_table, recognize_u_generated, simple_cone_gorenstein, Budget,
    EnumerationError, Enumerator, ExactInt, GcdProfile, GorensteinResult, RatMatrix, SequenceError,
    SequenceKind, SequenceSpec, URecognition,
};

use crate::render::{coefficient_table, Output, Table};
use crate::{CliError, Command, RecArgs, SeqArgs, SCHEMA_VERSION};

type Outcome = Result<(Output, bool), CliError>;

fn strs(v: &[ExactInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

impl SeqArgs {
    fn resolve(&self) -> Result<SequenceSpec, CliError> {
        let need_n = |what: &str| {
            self.n
                .ok_or_else(|| CliError::Usage(format!("--n is required with {what}")))
        };
        match (&self.seq, &self.k, &self.ell, &self.b) {
            (Some(text), None, None, None) => Ok(SequenceSpec::parse(text, self.n)?),
            (None, Some(k), Some(ell), None) => Ok(SequenceSpec::new(
                SequenceKind::Kl {
                    k: k.clone(),
                    ell: ell.clone(),
                },
                need_n("--k/--l")?,
            )?),
            (None, None, Some(ell), Some(b)) => Ok(SequenceSpec::new(
                SequenceKind::Recurrence {
                    ell: ell.clone(),
                    b: b.clone(),
                },
                need_n("--l/--b")?,
            )?),
            _ => Err(CliError::Usage(
                "give a sequence as --seq TEXT, --l L --b B --n N, or --k K --l L --n N".into(),
            )),
        }
    }
}

fn enumerator() -> Result<Enumerator, CliError> {
    Ok(Enumerator::new().with_budget(Budget::from_env()?))
}

pub(crate) fn execute(command: Command) -> Outcome {
    match command {
        Command::Gor { seq, matrix } => match matrix {
            Some(path) => gor_matrix(&path),
            None => gor(&seq.resolve()?),
        },
        Command::Series { seq, m, t } => match (m, t) {
            (Some(m), _) => series(&seq.resolve()?, m),
            (None, Some(t)) => ehrhart(&seq.resolve()?, t),
            (None, None) => Err(CliError::Usage("series needs --m or --t".into())),
        },
        Command::Hstar { seq } => hstar(&seq.resolve()?),
        Command::Numerator { seq } => numerator(&seq.resolve()?),
        Command::Product { seq, m } => product(&seq.resolve()?, m),
        Command::GcdTable { rec, n } => gcd_table(&rec, n),
        Command::Profile { rec } => profile(&rec),
        Command::N0 { rec, horizon } => n0(&rec, horizon),
        Command::Classify { seq } => classify(&seq.resolve()?),
        Command::Crosscheck { seq } => crosscheck(&seq.resolve()?),
    }
}

#[derive(Serialize)]
struct Verdict {
    gorenstein: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fails_at: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

impl From<&GorensteinResult> for Verdict {
    fn from(r: &GorensteinResult) -> Self {
        match r {
            GorensteinResult::Gorenstein { point } => Verdict {
                gorenstein: true,
                point: Some(strs(point)),
                fails_at: None,
                witness: None,
            },
            GorensteinResult::FailsAt { index, witness } => Verdict {
                gorenstein: false,
                point: None,
                fails_at: Some(*index),
                witness: Some(witness.to_string()),
            },
        }
    }
}

fn gor(spec: &SequenceSpec) -> Outcome {
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        sequence: Vec<String>,
        #[serde(flatten)]
        verdict: Verdict,
    }
    let result = lecture_hall_gorenstein(spec.terms());
    let out = Out {
        schema: SCHEMA_VERSION,
        sequence: strs(spec.terms()),
        verdict: Verdict::from(&result),
    };
    Ok((Output::new(out), result.is_gorenstein()))
}

fn gor_matrix(path: &std::path::Path) -> Outcome {
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        dimension: usize,
        #[serde(flatten)]
        verdict: Verdict,
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let matrix: RatMatrix = text.parse()?;
    let result = simple_cone_gorenstein(&matrix)?;
    let out = Out {
        schema: SCHEMA_VERSION,
        dimension: matrix.dim(),
        verdict: Verdict::from(&result),
    };
    Ok((Output::new(out), result.is_gorenstein()))
}

fn series(spec: &SequenceSpec, m: usize) -> Outcome {
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        sequence: Vec<String>,
        truncation: usize,
        coeffs: Vec<String>,
    }
    let f = enumerator()?.weight_series(spec.terms(), m)?;
    let coeffs = strs(f.series.coeffs());
    let table = coefficient_table("count", &coeffs);
    let out = Out {
        schema: SCHEMA_VERSION,
        sequence: strs(spec.terms()),
        truncation: m,
        coeffs,
    };
    Ok((Output::new(out).with_table(table), true))
}

fn ehrhart(spec: &SequenceSpec, t_max: usize) -> Outcome {
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        sequence: Vec<String>,
        t_max: usize,
        counts: Vec<String>,
    }
    let counts = strs(&enumerator()?.ehrhart_counts(spec.terms(), t_max)?);
    let table = Table {
        header: vec!["t", "count"],
        rows: counts
            .iter()
            .enumerate()
            .map(|(t, c)| vec![t.to_string(), c.clone()])
            .collect(),
    };
    let out = Out {
        schema: SCHEMA_VERSION,
        sequence: strs(spec.terms()),
        t_max,
        counts,
    };
    Ok((Output::new(out).with_table(table), true))
}

fn hstar(spec: &SequenceSpec) -> Outcome {
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        sequence: Vec<String>,
        coeffs: Vec<String>,
        denominator_exponent: String,
        power: usize,
        value_at_one: String,
        symmetric: bool,
        unimodal: bool,
    }
    let h = enumerator()?.h_star(spec.terms())?;
    let coeffs = strs(h.coeffs.coeffs());
    let table = coefficient_table("coeff", &coeffs);
    let out = Out {
        schema: SCHEMA_VERSION,
        sequence: strs(spec.terms()),
        coeffs,
        denominator_exponent: h.denominator_exponent.to_string(),
        power: h.power,
        value_at_one: h.coeffs.eval_at_one().to_string(),
        symmetric: h.symmetric,
        unimodal: h.unimodal,
    };
    Ok((Output::new(out).with_table(table), true))
}

fn numerator(spec: &SequenceSpec) -> Outcome {
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        sequence: Vec<String>,
        coeffs: Vec<String>,
        denominator_exponents: Vec<String>,
        value_at_one: String,
        palindromic: bool,
    }
    let num = enumerator()?.numerator_h(spec.terms())?;
    let coeffs = strs(num.h.coeffs());
    let table = coefficient_table("coeff", &coeffs);
    let out = Out {
        schema: SCHEMA_VERSION,
        sequence: strs(spec.terms()),
        coeffs,
        denominator_exponents: strs(&num.denominator_exponents),
        value_at_one: num.h.eval_at_one().to_string(),
        palindromic: num.h.is_palindromic(),
    };
    Ok((Output::new(out).with_table(table), true))
}

fn product(spec: &SequenceSpec, m: Option<usize>) -> Outcome {
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        sequence: Vec<String>,
        truncation: usize,
        product_form: bool,
        exponents: Option<Vec<String>>,
    }
    let m = match m {
        Some(m) => m,
        None => {
            // d_i = s_i + ... + s_n, so their sum is sum_i i * s_i.
            let total: ExactInt = spec
                .terms()
                .iter()
                .enumerate()
                .map(|(i, s)| s * ExactInt::from(i + 1))
                .sum();
            usize::try_from(&(total * 2u32)).map_err(|_| {
                CliError::Usage("default truncation degree is too large; pass --m".into())
            })?
        }
    };
    let f = enumerator()?.weight_series(spec.terms(), m)?;
    let exponents = detect_product_form(&f.series, spec.len());
    if let Some(e) = &exponents {
        // The detected form must reproduce the enumerated series exactly.
        let rebuilt = product_form_series(e, m).expect("detected exponents are positive");
        if rebuilt != f.series {
            return Err(EnumerationError::InvariantViolated(
                "detected product form does not reproduce the series".into(),
            )
            .into());
        }
    }
    let out = Out {
        schema: SCHEMA_VERSION,
        sequence: strs(spec.terms()),
        truncation: m,
        product_form: exponents.is_some(),
        exponents: exponents.as_deref().map(strs),
    };
    let found = exponents.is_some();
    Ok((Output::new(out), found))
}

#[derive(Serialize)]
struct ProfileOut {
    r: String,
    t: String,
    sigma: String,
    gamma: String,
    beta: String,
}

impl From<&GcdProfile> for ProfileOut {
    fn from(p: &GcdProfile) -> Self {
        ProfileOut {
            r: p.r.to_string(),
            t: p.t.to_string(),
            sigma: p.sigma.to_string(),
            gamma: p.gamma.to_string(),
            beta: p.beta.to_string(),
        }
    }
}

fn gcd_table(rec: &RecArgs, n: usize) -> Outcome {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        gcd: String,
        normalizer: String,
        u_n: String,
    }
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        l: String,
        b: String,
        profile: ProfileOut,
        rows: Vec<Row>,
    }
    let table = ratio_table(&rec.ell, &rec.b, n)?;
    let rows: Vec<Row> = table
        .rows
        .iter()
        .map(|r| Row {
            n: r.n,
            gcd: r.gcd.to_string(),
            normalizer: r.normalizer.to_string(),
            u_n: r.u.to_string(),
        })
        .collect();
    let csv = Table {
        header: vec!["n", "gcd", "normalizer", "u_n"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.gcd.clone(),
                    r.normalizer.clone(),
                    r.u_n.clone(),
                ]
            })
            .collect(),
    };
    let out = Out {
        schema: SCHEMA_VERSION,
        l: rec.ell.to_string(),
        b: rec.b.to_string(),
        profile: ProfileOut::from(&table.profile),
        rows,
    };
    Ok((Output::new(out).with_table(csv), true))
}

fn profile(rec: &RecArgs) -> Outcome {
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        l: String,
        b: String,
        #[serde(flatten)]
        profile: ProfileOut,
    }
    let p = gcd_profile(&rec.ell, &rec.b)?;
    let out = Out {
        schema: SCHEMA_VERSION,
        l: rec.ell.to_string(),
        b: rec.b.to_string(),
        profile: ProfileOut::from(&p),
    };
    Ok((Output::new(out), true))
}

fn n0(rec: &RecArgs, horizon: Option<usize>) -> Outcome {
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        l: String,
        b: String,
        threshold: String,
        horizon: usize,
        n0: usize,
    }
    let horizon = match horizon {
        Some(h) => h,
        None => default_n0_horizon(&rec.ell, &rec.b)?,
    };
    let n0 = find_n0(&rec.ell, &rec.b, horizon)?;
    let p = gcd_profile(&rec.ell, &rec.b)?;
    let out = Out {
        schema: SCHEMA_VERSION,
        l: rec.ell.to_string(),
        b: rec.b.to_string(),
        threshold: p.n0_threshold(&rec.b).to_string(),
        horizon,
        n0,
    };
    Ok((Output::new(out), true))
}

fn classify(spec: &SequenceSpec) -> Outcome {
    #[derive(Serialize)]
    struct Cor311Out {
        applicable: bool,
        threshold: Option<usize>,
        actual: Option<usize>,
        holds: Option<bool>,
    }
    #[derive(Serialize)]
    struct RecurrenceOut {
        l: String,
        b: String,
        profile: ProfileOut,
        universal_failure: Option<Cor311Out>,
    }
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        family: String,
        sequence: Vec<String>,
        coprime_consecutive: bool,
        u_recognition: &'static str,
        u: Option<Vec<String>>,
        #[serde(flatten)]
        verdict: Verdict,
        recurrence: Option<RecurrenceOut>,
    }

    let terms = spec.terms();
    let (u_recognition, u) = match recognize_u_generated(terms) {
        Ok(URecognition::Generated(g)) => ("generated", Some(strs(&g.u))),
        Ok(URecognition::NotGenerated { .. }) => ("not-generated", None),
        Err(SequenceError::NotCoprime { .. }) => ("hypothesis-violated", None),
        Err(e) => return Err(e.into()),
    };
    let params = match spec.kind() {
        SequenceKind::Recurrence { ell, b } => Some((ell.clone(), b.clone())),
        SequenceKind::Ell(ell) => Some((ell.clone(), ExactInt::from(-1))),
        _ => None,
    };
    let recurrence = match params {
        Some((ell, b)) if b != ExactInt::from(0) => {
            let universal_failure = if b == ExactInt::from(-1) {
                None
            } else {
                Some(match corollary_311_check(&ell, &b)? {
                    Cor311Verdict::Applicable {
                        threshold,
                        actual,
                        holds,
                    } => Cor311Out {
                        applicable: true,
                        threshold: Some(threshold),
                        actual,
                        holds: Some(holds),
                    },
                    Cor311Verdict::NotApplicable { .. } => Cor311Out {
                        applicable: false,
                        threshold: None,
                        actual: None,
                        holds: None,
                    },
                })
            };
            Some(RecurrenceOut {
                l: ell.to_string(),
                b: b.to_string(),
                profile: ProfileOut::from(&gcd_profile(&ell, &b)?),
                universal_failure,
            })
        }
        _ => None,
    };
    let out = Out {
        schema: SCHEMA_VERSION,
        family: spec.kind().to_string(),
        sequence: strs(terms),
        coprime_consecutive: first_non_coprime(terms).is_none(),
        u_recognition,
        u,
        verdict: Verdict::from(&lecture_hall_gorenstein(terms)),
        recurrence,
    };
    Ok((Output::new(out), true))
}

fn crosscheck(spec: &SequenceSpec) -> Outcome {
    #[derive(Serialize)]
    struct Out {
        schema: u32,
        sequence: Vec<String>,
        cone_gorenstein: bool,
        h_palindromic: bool,
        q_palindromic: bool,
        agree: bool,
    }
    let report = match enumerator()?.cross_check_gorenstein(spec.terms()) {
        Ok(r) => r,
        Err(EnumerationError::Disagreement(r)) => r,
        Err(e) => return Err(e.into()),
    };
    let out = Out {
        schema: SCHEMA_VERSION,
        sequence: strs(spec.terms()),
        cone_gorenstein: report.cone_gorenstein,
        h_palindromic: report.h_palindromic,
        q_palindromic: report.q_palindromic,
        agree: report.agree(),
    };
    Ok((Output::new(out), report.agree()))
}
