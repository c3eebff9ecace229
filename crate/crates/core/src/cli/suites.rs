//! `verify` subcommand: identity, Bell, transform, Chebyshev and family
//! suites.

use std::io::Write;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{budget, usage, CmdResult, Failure, Suite, VerifyArgs, EXIT_MISMATCH, EXIT_OK};
use crate::args::parse_range;
use crate::bellpoly::{bell_oracle, BellArgs, BellTable, Identity};
use crate::families::{
    chebyshev_identity_check, cross_verify, cross_verify_reduced, Family, FamilyParams,
    VerifyReport,
};
use crate::seqtransform::{invert, invert_inverse, invert_m, invert_m_via_bell, Seq};
use crate::Error;

const SEED: u64 = 0x5eed_be11;
const FAMILY_LIMIT: u64 = 10_000_000;

#[derive(Debug, Serialize)]
struct Check {
    check: String,
    range: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

impl Check {
    fn new(check: impl Into<String>, range: impl Into<String>, failure: Option<String>) -> Self {
        Check {
            check: check.into(),
            range: range.into(),
            passed: failure.is_none(),
            detail: failure,
        }
    }

    fn from_report(report: &VerifyReport) -> Self {
        let range = match (report.cells.first(), report.cells.last()) {
            (Some(a), Some(b)) => format!("m={}..{} n={}..{}", a.m, b.m, a.n, b.n),
            _ => String::new(),
        };
        let detail = (!report.passed()).then(|| report.to_string());
        Check::new(format!("family {}", report.family), range, detail)
    }
}

fn random_vectors(rng: &mut ChaCha8Rng, count: usize, len: usize, bound: i64) -> Vec<Vec<BigInt>> {
    (0..count)
        .map(|_| {
            (0..len)
                .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                .collect()
        })
        .collect()
}

fn identity_suite(n_max: usize) -> Result<Vec<Check>, Error> {
    let mut ids: Vec<Identity> = Vec::new();
    ids.extend((1..=4).map(|ell| Identity::TruncatedFactorials { ell }));
    ids.extend((2..=4).map(|ell| Identity::Sparse { ell }));
    ids.extend((1..=4).map(|ell| Identity::Gap { ell }));
    ids.extend((0..=3).map(|r| Identity::Figurate { r }));
    ids.into_iter()
        .map(|id| {
            let z = id.args(n_max.max(1))?;
            let mut failure = None;
            'outer: for n in 1..=n_max {
                for k in 1..=n {
                    let (closed, oracle) = (id.closed_form(n, k)?, bell_oracle(n, k, &z)?);
                    if closed != oracle {
                        failure = Some(format!(
                            "n={n} k={k}: closed form {closed}, oracle {oracle}"
                        ));
                        break 'outer;
                    }
                }
            }
            Ok(Check::new(
                format!("identity {id:?}"),
                format!("n<={n_max}"),
                failure,
            ))
        })
        .collect()
}

fn bell_suite(n_max: usize) -> Result<Vec<Check>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let vectors = random_vectors(&mut rng, 200, n_max.max(1), 10);
    let mut equal = None;
    let mut homogeneous = None;
    for (i, v) in vectors.into_iter().enumerate() {
        let z = BellArgs::new(v)?;
        let table = BellTable::new(z.clone(), n_max);
        let scaled: Vec<(i64, BellTable)> = (-5..=5)
            .map(|a| (a, BellTable::new(z.scaled(&BigInt::from(a)), n_max)))
            .collect();
        for n in 1..=n_max {
            for k in 1..=n {
                let rec = table.get(n, k)?;
                if equal.is_none() && *rec != bell_oracle(n, k, &z)? {
                    equal = Some(format!("vector {i}, n={n}, k={k}"));
                }
                for (a, t) in &scaled {
                    let expect = num_traits::pow::pow(BigInt::from(*a), k) * rec;
                    if homogeneous.is_none() && *t.get(n, k)? != expect {
                        homogeneous = Some(format!("vector {i}, a={a}, n={n}, k={k}"));
                    }
                }
            }
        }
    }
    let range = format!("n<={n_max}, 200 vectors, |z|<=10");
    Ok(vec![
        Check::new("bell recurrence == oracle", range.clone(), equal),
        Check::new("bell homogeneity |a|<=5", range, homogeneous),
    ])
}

fn transform_suite(len: usize, m_max: u32) -> Result<Vec<Check>, Error> {
    if len == 0 {
        return Err(Error::invalid("--len must be >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let vectors = random_vectors(&mut rng, 100, len, 9);
    let (mut routes, mut scaling, mut round_trip) = (None, None, None);
    for (i, v) in vectors.into_iter().enumerate() {
        let x = Seq::new(v)?;
        let once = invert(&x);
        if round_trip.is_none() && (invert_inverse(&once) != x || invert(&invert_inverse(&x)) != x)
        {
            round_trip = Some(format!("vector {i}"));
        }
        let mut composed = x.clone();
        for m in 1..=m_max {
            composed = invert(&composed);
            let direct = invert_m(&x, m as i64)?;
            let bell = invert_m_via_bell(&x, m as i64)?;
            if routes.is_none() && (direct != bell || direct != composed) {
                routes = Some(format!("vector {i}, m={m}"));
            }
            let mm = BigInt::from(m);
            let scaled = invert(&x.scaled(&mm)).div_exact(&mm);
            if scaling.is_none() && scaled.as_ref() != Some(&direct) {
                scaling = Some(format!("vector {i}, m={m}"));
            }
        }
    }
    let range = format!("100 vectors, N={len}, m<={m_max}, |x|<=9");
    Ok(vec![
        Check::new(
            "invert_m == bell route == composition",
            range.clone(),
            routes,
        ),
        Check::new("invert_m(x) == invert(m x)/m", range.clone(), scaling),
        Check::new("invert_inverse round trip", range, round_trip),
    ])
}

fn chebyshev_suite(n_max: usize) -> Vec<Check> {
    let xs: Vec<i64> = (-3..=10).collect();
    let ok = chebyshev_identity_check(n_max, &xs);
    vec![Check::new(
        "chebyshev recurrence",
        format!("n<={n_max}, x in -3..10"),
        (!ok).then(|| "recurrence violated".to_string()),
    )]
}

fn families_suite() -> Result<Vec<Check>, Error> {
    let mut checks = Vec::new();
    for param in 1..=3 {
        for family in Family::catalog(param)? {
            for report in cross_verify_reduced(&family, 1..=3, 12, FAMILY_LIMIT)? {
                checks.push(Check::from_report(&report));
            }
        }
    }
    Ok(checks)
}

pub(super) fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let budget = budget(a.budget)?;
    let checks: Vec<Check> = if let Some(name) = &a.family {
        let family = Family::from_name(
            name,
            FamilyParams {
                ell: a.ell,
                r: a.r,
                q: a.q,
            },
        )?;
        let ms = parse_range::<u32>(a.m.as_deref().unwrap_or("1..3"))?;
        let ns = match &a.n {
            Some(s) => parse_range::<usize>(s)?,
            None => family.min_n()..=10,
        };
        vec![Check::from_report(&cross_verify(&family, ms, ns, budget)?)]
    } else {
        let suite = a.suite.unwrap_or(Suite::All);
        let mut checks = Vec::new();
        let want = |s: Suite| suite == s || suite == Suite::All;
        if want(Suite::Identities) {
            checks.extend(identity_suite(a.n_max.unwrap_or(12))?);
        }
        if want(Suite::Bell) {
            checks.extend(bell_suite(a.n_max.unwrap_or(12))?);
        }
        if want(Suite::Transforms) {
            checks.extend(transform_suite(a.len, a.m_max)?);
        }
        if want(Suite::Chebyshev) {
            checks.extend(chebyshev_suite(a.n_max.unwrap_or(30).max(2)));
        }
        if want(Suite::Families) {
            checks.extend(families_suite()?);
        }
        checks
    };
    let all_passed = checks.iter().all(|c| c.passed);
    let text = if a.json {
        serde_json::to_string_pretty(&checks).map_err(|e| usage(e.to_string()))? + "\n"
    } else {
        checks
            .iter()
            .map(|c| {
                let status = if c.passed { "PASS" } else { "FAIL" };
                match &c.detail {
                    Some(d) => format!("{status} {} [{}]: {d}\n", c.check, c.range),
                    None => format!("{status} {} [{}]\n", c.check, c.range),
                }
            })
            .collect()
    };
    write!(out, "{text}").map_err(|e| Failure {
        code: super::EXIT_USAGE,
        message: e.to_string(),
    })?;
    Ok(if all_passed { EXIT_OK } else { EXIT_MISMATCH })
}
