use std::fmt::Write as _;

use denumerant::counting::{count_table, Count};
use denumerant::part_set::{make_part_set, PartSet};
use denumerant::poly::rational_string;
use denumerant::quasipoly::{
    decimal_string, interpolate_with_degree, leading_coefficient_expected, limit_constant,
    ratio_to_estimate,
};
use denumerant::recurrences::{run_identity_suite, IdentityReport, Instance, SuiteEntry};
use denumerant::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::output::Rendered;

/// Largest argument the table-based commands will sweep up to.
pub const MAX_TABLE_N: i64 = 50_000_000;

pub enum CliError {
    /// Exit 2.
    Invalid(String),
    /// Exit 3.
    Residual(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResidualNonZero { .. } => CliError::Residual(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

pub struct Output {
    pub rendered: Rendered,
    /// Set when an identity check failed (exit 4).
    pub identity_failure: bool,
}

impl From<Rendered> for Output {
    fn from(rendered: Rendered) -> Self {
        Output {
            rendered,
            identity_failure: false,
        }
    }
}

fn part_set(raw: &[i64]) -> CliResult<PartSet> {
    Ok(make_part_set(raw)?)
}

fn coprime_part_set(raw: &[i64], command: &str) -> CliResult<PartSet> {
    let set = part_set(raw)?;
    if set.gcd_all() != 1 {
        return Err(CliError::Invalid(format!(
            "{command} needs parts with gcd 1, got gcd {g}; counts for this set follow from the \
             reduction p_A(n) = p_(A/{g})(n/{g}) when {g} | n and 0 otherwise",
            g = set.gcd_all()
        )));
    }
    Ok(set)
}

fn check_table_size(n: i64) -> CliResult<()> {
    if n > MAX_TABLE_N {
        return Err(CliError::Invalid(format!(
            "n = {n} exceeds the supported table size {MAX_TABLE_N}"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct CountInput<'a> {
    parts: &'a [u64],
    n: i64,
}

pub fn count(raw: &[i64], n: i64) -> CliResult<Output> {
    let set = part_set(raw)?;
    let value = if n < 0 {
        Count::from(0u32)
    } else {
        check_table_size(n / set.gcd_all() as i64)?;
        denumerant::count(&set, n)
    };
    let value = value.to_string();
    let input = CountInput {
        parts: set.parts(),
        n,
    };
    Ok(Rendered::new("count", input, &value, true)
        .csv(vec!["n", "p_A_n"], vec![vec![n.to_string(), value.clone()]])
        .plain(value)
        .into())
}

#[derive(Serialize)]
struct TableInput<'a> {
    parts: &'a [u64],
    n_max: i64,
}

#[derive(Serialize)]
struct TableRow {
    n: u64,
    #[serde(rename = "p_A_n")]
    p_a_n: String,
}

pub fn table(raw: &[i64], n_max: i64) -> CliResult<Output> {
    let set = part_set(raw)?;
    check_table_size(n_max)?;
    let values = count_table(&set, n_max)?;
    let rows: Vec<TableRow> = values
        .iter()
        .enumerate()
        .map(|(n, v)| TableRow {
            n: n as u64,
            p_a_n: v.to_string(),
        })
        .collect();
    let csv_rows = rows
        .iter()
        .map(|r| vec![r.n.to_string(), r.p_a_n.clone()])
        .collect();
    let mut plain = String::new();
    for r in &rows {
        let _ = writeln!(plain, "{} {}", r.n, r.p_a_n);
    }
    let input = TableInput {
        parts: set.parts(),
        n_max,
    };
    Ok(Rendered::new("table", input, &rows, true)
        .csv(vec!["n", "p_A_n"], csv_rows)
        .plain(plain)
        .into())
}

#[derive(Serialize)]
struct QuasipolyInput<'a> {
    parts: &'a [u64],
    extra_samples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    assume_degree: Option<usize>,
}

#[derive(Serialize)]
struct Constituent {
    residue: u64,
    degree: isize,
    coeffs: Vec<String>,
    leading_matches: bool,
}

#[derive(Serialize)]
struct QuasipolyResult {
    period: String,
    k: usize,
    expected_leading: String,
    verified_l_range: [u64; 2],
    constituents: Vec<Constituent>,
    all_match: bool,
}

pub fn quasipoly(
    raw: &[i64],
    extra_samples: u64,
    assume_degree: Option<usize>,
    threads: usize,
) -> CliResult<Output> {
    let set = coprime_part_set(raw, "quasipoly")?;
    let degree = assume_degree.unwrap_or(set.k() - 1);
    let samples = (degree as u64 + 1).saturating_add(extra_samples);
    check_table_size(
        set.period_u64()?
            .saturating_mul(samples)
            .min(i64::MAX as u64) as i64,
    )?;
    let qp = interpolate_with_degree(&set, degree, extra_samples, threads)?;
    let lead = leading_coefficient_expected(&set)?;
    let constituents: Vec<Constituent> = qp
        .constituents()
        .iter()
        .enumerate()
        .map(|(r, c)| Constituent {
            residue: r as u64,
            degree: c.degree(),
            coeffs: c.coeffs().iter().map(rational_string).collect(),
            leading_matches: qp.constituent_matches(r, &lead),
        })
        .collect();
    let all_match = constituents.iter().all(|c| c.leading_matches);
    let range = qp.verified_l_range();

    let mut csv_rows = Vec::new();
    let mut plain = format!(
        "period {}\nexpected leading coefficient {}\n",
        qp.period(),
        rational_string(&lead)
    );
    for (c, poly) in constituents.iter().zip(qp.constituents()) {
        for (power, coeff) in c.coeffs.iter().enumerate() {
            csv_rows.push(vec![
                c.residue.to_string(),
                power.to_string(),
                coeff.clone(),
                c.leading_matches.to_string(),
            ]);
        }
        let mark = if c.leading_matches { "ok" } else { "MISMATCH" };
        let _ = writeln!(plain, "r={}: {} [{}]", c.residue, poly, mark);
    }

    let result = QuasipolyResult {
        period: qp.period().to_string(),
        k: set.k(),
        expected_leading: rational_string(&lead),
        verified_l_range: [*range.start(), *range.end()],
        constituents,
        all_match,
    };
    let input = QuasipolyInput {
        parts: set.parts(),
        extra_samples,
        assume_degree,
    };
    Ok(Rendered::new("quasipoly", input, result, true)
        .csv(
            vec!["residue", "power", "coefficient", "leading_matches"],
            csv_rows,
        )
        .plain(plain)
        .into())
}

#[derive(Serialize)]
struct VerifyInput<'a> {
    parts: &'a [u64],
    l_max: u64,
    seed: u64,
}

#[derive(Serialize)]
struct InstanceJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    removed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<u64>,
}

impl From<&Instance> for InstanceJson {
    fn from(i: &Instance) -> Self {
        InstanceJson {
            removed: i.removed,
            modulus: i.modulus,
            n: i.n,
            l: i.l,
            r: i.r,
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum EntryJson {
    Checked {
        identity: &'static str,
        instance: InstanceJson,
        lhs: String,
        rhs: String,
        holds: bool,
        below_bound: bool,
    },
    Skipped {
        identity: &'static str,
        skipped: bool,
        reason: String,
    },
}

#[derive(Serialize)]
struct VerifyResult {
    checked: usize,
    failed: usize,
    skipped: usize,
    all_hold: bool,
    reports: Vec<EntryJson>,
}

fn instance_label(i: &Instance) -> String {
    let mut parts = Vec::new();
    if let Some(a) = i.removed {
        parts.push(format!("a={a}"));
    }
    if let Some(m) = i.modulus {
        parts.push(format!("mod={m}"));
    }
    if let Some(n) = i.n {
        parts.push(format!("n={n}"));
    }
    if let Some(l) = i.l {
        parts.push(format!("l={l}"));
    }
    if let Some(r) = i.r {
        parts.push(format!("r={r}"));
    }
    parts.join(" ")
}

pub fn verify(raw: &[i64], l_max: u64, seed: u64) -> CliResult<Output> {
    let set = coprime_part_set(raw, "verify")?;
    let reach = set.period_u64()?.saturating_mul(l_max.saturating_add(2));
    check_table_size(reach.min(i64::MAX as u64) as i64)?;
    let entries = run_identity_suite(&set, l_max, seed)?;

    let mut reports = Vec::with_capacity(entries.len());
    let mut csv_rows = Vec::with_capacity(entries.len());
    let mut plain = String::new();
    let (mut checked, mut failed, mut skipped) = (0, 0, 0);
    for entry in &entries {
        match entry {
            SuiteEntry::Checked(IdentityReport {
                identity,
                instance,
                lhs,
                rhs,
                holds,
                below_bound,
            }) => {
                checked += 1;
                if !holds {
                    failed += 1;
                }
                let label = instance_label(instance);
                let verdict = if *holds { "PASS" } else { "FAIL" };
                let _ = writeln!(plain, "{verdict} {identity} {label} lhs={lhs} rhs={rhs}");
                csv_rows.push(vec![
                    identity.name().to_string(),
                    label,
                    lhs.to_string(),
                    rhs.to_string(),
                    holds.to_string(),
                    String::new(),
                ]);
                reports.push(EntryJson::Checked {
                    identity: identity.name(),
                    instance: instance.into(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                    holds: *holds,
                    below_bound: *below_bound,
                });
            }
            SuiteEntry::Skipped { identity, reason } => {
                skipped += 1;
                let _ = writeln!(plain, "SKIP {identity} ({reason})");
                csv_rows.push(vec![
                    identity.name().to_string(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    format!("skipped: {reason}"),
                ]);
                reports.push(EntryJson::Skipped {
                    identity: identity.name(),
                    skipped: true,
                    reason: reason.clone(),
                });
            }
        }
    }
    let _ = writeln!(
        plain,
        "{checked} checked, {failed} failed, {skipped} skipped"
    );

    let result = VerifyResult {
        checked,
        failed,
        skipped,
        all_hold: failed == 0,
        reports,
    };
    let input = VerifyInput {
        parts: set.parts(),
        l_max,
        seed,
    };
    let rendered = Rendered::new("verify", input, result, true)
        .csv(
            vec!["identity", "instance", "lhs", "rhs", "holds", "note"],
            csv_rows,
        )
        .plain(plain);
    Ok(Output {
        rendered,
        identity_failure: failed > 0,
    })
}

#[derive(Serialize)]
struct AsymptoteInput<'a> {
    parts: &'a [u64],
    n_points: u32,
}

#[derive(Serialize)]
struct AsymptotePoint {
    j: u32,
    n: String,
    #[serde(rename = "p_A_n")]
    p_a_n: String,
    /// `p_A(n) / n^(k-1)`, which tends to the limit constant.
    scaled: String,
    ratio: String,
    ratio_decimal: String,
}

#[derive(Serialize)]
struct AsymptoteResult {
    period: String,
    limit_constant: String,
    points: Vec<AsymptotePoint>,
}

pub fn asymptote(raw: &[i64], n_points: u32) -> CliResult<Output> {
    let set = coprime_part_set(raw, "asymptote")?;
    if n_points < 1 {
        return Err(CliError::Invalid("--n-points must be at least 1".into()));
    }
    let t = set.period_u64()? as i64;
    let n_last = 2i64
        .checked_pow(n_points)
        .and_then(|p| p.checked_mul(t))
        .filter(|&n| n <= MAX_TABLE_N)
        .ok_or_else(|| {
            CliError::Invalid(format!(
                "T * 2^{n_points} exceeds the supported table size {MAX_TABLE_N}"
            ))
        })?;
    let values = count_table(&set, n_last)?;
    let limit = limit_constant(&set)?;
    let exponent = set.k() - 1;

    let mut points = Vec::new();
    for j in 1..=n_points {
        let n = t << j;
        let value = &values[n as usize];
        let ratio = ratio_to_estimate(&set, n, value)?;
        let scaled = BigRational::new(
            BigInt::from(value.clone()),
            num_traits::pow(BigInt::from(n), exponent),
        );
        points.push(AsymptotePoint {
            j,
            n: n.to_string(),
            p_a_n: value.to_string(),
            scaled: rational_string(&scaled),
            ratio: rational_string(&ratio),
            ratio_decimal: decimal_string(&ratio, 12),
        });
    }

    let csv_rows = points
        .iter()
        .map(|p| {
            vec![
                p.j.to_string(),
                p.n.clone(),
                p.p_a_n.clone(),
                p.ratio.clone(),
                p.ratio_decimal.clone(),
            ]
        })
        .collect();
    let mut plain = format!("limit constant {}\n", rational_string(&limit));
    for p in &points {
        let _ = writeln!(plain, "{} {} {}", p.n, p.ratio, p.ratio_decimal);
    }
    let result = AsymptoteResult {
        period: t.to_string(),
        limit_constant: rational_string(&limit),
        points,
    };
    let input = AsymptoteInput {
        parts: set.parts(),
        n_points,
    };
    // Decimal annotations are rounded, so the payload is not purely exact.
    Ok(Rendered::new("asymptote", input, result, false)
        .csv(vec!["j", "n", "p_A_n", "ratio", "ratio_decimal"], csv_rows)
        .plain(plain)
        .into())
}
