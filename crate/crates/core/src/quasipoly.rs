//! Quasi-polynomial structure of `p_A`.
//!
//! For `gcd(A) = 1` with `k` parts and `T = a_1 a_2 ... a_k`, each residue
//! class `n = T*l + r` is governed by a polynomial in `l` of degree `k - 1`
//! whose leading coefficient is `T^(k-2) / (k-1)!`. Constituents are recovered
//! here by exact interpolation from sampled counts and then checked against
//! further samples, so every returned constituent is backed by data.

use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::counting::{count_table, Count, Counter};
use crate::error::{Error, Result};
use crate::part_set::PartSet;
use crate::poly::{rational_string, Polynomial, Rational};

/// Samples past the `k` needed for interpolation, used only for checking.
pub const DEFAULT_EXTRA_SAMPLES: u64 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    part_set: PartSet,
    period: u64,
    constituents: Vec<Polynomial>,
    verified_l_range: RangeInclusive<u64>,
}

impl QuasiPolynomial {
    pub fn part_set(&self) -> &PartSet {
        &self.part_set
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Constituent `r` is the polynomial `l -> p_A(T*l + r)`.
    pub fn constituents(&self) -> &[Polynomial] {
        &self.constituents
    }

    pub fn verified_l_range(&self) -> &RangeInclusive<u64> {
        &self.verified_l_range
    }

    /// Whether constituent `r` has degree `k - 1` and the expected leading
    /// coefficient.
    pub fn constituent_matches(&self, r: usize, expected_leading: &Rational) -> bool {
        let c = &self.constituents[r];
        c.degree() == self.part_set.k() as isize - 1 && c.leading() == Some(expected_leading)
    }

    pub fn eval(&self, n: i64) -> Result<Count> {
        eval_quasipoly(self, n)
    }
}

fn factorial(m: usize) -> BigUint {
    (1..=m as u64).fold(BigUint::one(), |acc, i| acc * i)
}

fn period_rational(set: &PartSet) -> Rational {
    Rational::from_integer(BigInt::from(set.period().clone()))
}

/// Fits every constituent from `p_A(T*l + r)` at `l = 0, ..., k-1` and checks
/// it against `extra_samples` further values of `l`.
pub fn interpolate_constituents(set: &PartSet, extra_samples: u64) -> Result<QuasiPolynomial> {
    interpolate_constituents_with_threads(set, extra_samples, 1)
}

/// Same as [`interpolate_constituents`], fitting residues on up to `threads`
/// workers. The result does not depend on the thread count.
pub fn interpolate_constituents_with_threads(
    set: &PartSet,
    extra_samples: u64,
    threads: usize,
) -> Result<QuasiPolynomial> {
    interpolate_with_degree(set, set.k() - 1, extra_samples, threads)
}

/// Fits constituents of degree at most `degree` from `degree + 1` samples per
/// residue, then checks `extra_samples` more. With `degree < k - 1` this fails
/// with [`Error::ResidualNonZero`], which is how a lower-degree claim is refuted.
pub fn interpolate_with_degree(
    set: &PartSet,
    degree: usize,
    extra_samples: u64,
    threads: usize,
) -> Result<QuasiPolynomial> {
    set.require_gcd_one()?;
    let period = set.period_u64()?;
    let k = degree as u64 + 1;
    let samples = k
        .checked_add(extra_samples)
        .ok_or_else(|| Error::InvalidArgument("too many extra samples".into()))?;
    let n_max = period
        .checked_mul(samples)
        .and_then(|n| i64::try_from(n - 1).ok())
        .ok_or(Error::PeriodTooLarge)?;
    let table = count_table(set, n_max)?;

    let nodes: Vec<Rational> = (0..k as i64)
        .map(|l| Rational::from_integer(BigInt::from(l)))
        .collect();
    let fit = |r: u64| -> Result<Polynomial> {
        let value =
            |l: u64| Rational::from_integer(BigInt::from(table[(period * l + r) as usize].clone()));
        let head: Vec<Rational> = (0..k).map(value).collect();
        let poly = Polynomial::interpolate(&nodes, &head);
        for l in k..samples {
            if poly.eval_int(l as i64) != value(l) {
                return Err(Error::ResidualNonZero { residue: r, l });
            }
        }
        Ok(poly)
    };

    let fitted: Vec<Result<Polynomial>> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        pool.install(|| (0..period).into_par_iter().map(fit).collect())
    } else {
        (0..period).map(fit).collect()
    };
    let constituents = fitted.into_iter().collect::<Result<Vec<_>>>()?;

    Ok(QuasiPolynomial {
        part_set: set.clone(),
        period,
        constituents,
        verified_l_range: 0..=samples - 1,
    })
}

/// `p_A(n)` read off the constituent for `n mod T` at `l = n div T`.
///
/// Fails rather than rounding if the constituent does not produce a
/// nonnegative integer there.
pub fn eval_quasipoly(q: &QuasiPolynomial, n: i64) -> Result<Count> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!(
            "quasi-polynomial evaluation needs n >= 0, got {n}"
        )));
    }
    let (l, r) = (n as u64).div_rem(&q.period);
    let value = q.constituents[r as usize].eval_int(l as i64);
    if !value.is_integer() {
        return Err(Error::NonIntegerValue {
            n,
            value: rational_string(&value),
        });
    }
    value
        .to_integer()
        .to_biguint()
        .ok_or_else(|| Error::InvalidArgument(format!("constituent value at n = {n} is negative")))
}

/// `T^(k-2) / (k-1)!`, the leading coefficient every constituent should have.
pub fn leading_coefficient_expected(set: &PartSet) -> Result<Rational> {
    set.require_gcd_one()?;
    let k = set.k();
    let period = period_rational(set);
    // k = 1 forces A = {1}, where T^(-1) is 1.
    let power = if k >= 2 {
        num_traits::pow(period, k - 2)
    } else {
        period.recip()
    };
    Ok(power / Rational::from_integer(BigInt::from(factorial(k - 1))))
}

/// `1 / (T * (k-1)!)`, the limit of `p_A(n) / n^(k-1)`.
pub fn limit_constant(set: &PartSet) -> Result<Rational> {
    set.require_gcd_one()?;
    let denom = BigInt::from(set.period() * factorial(set.k() - 1));
    Ok(Rational::new(BigInt::one(), denom))
}

/// `p_A(n) * T * (k-1)! / n^(k-1)` given a known value of `p_A(n)`.
pub fn ratio_to_estimate(set: &PartSet, n: i64, value: &Count) -> Result<Rational> {
    set.require_gcd_one()?;
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "asymptotic ratio needs n >= 1, got {n}"
        )));
    }
    let numer = BigInt::from(value * set.period() * factorial(set.k() - 1));
    let denom = num_traits::pow(BigInt::from(n), set.k() - 1);
    Ok(Rational::new(numer, denom))
}

/// Ratio of the true count to the estimate `n^(k-1) / (T * (k-1)!)`.
pub fn asymptotic_ratio(set: &PartSet, n: i64) -> Result<Rational> {
    set.require_gcd_one()?;
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "asymptotic ratio needs n >= 1, got {n}"
        )));
    }
    let value = Counter::new(set).get(n)?;
    ratio_to_estimate(set, n, &value)
}

/// `p_A(T*l + r) / (T*l + r)^(k-1)` for each requested `l`.
pub fn limit_check(set: &PartSet, r: u64, l_values: &[u64]) -> Result<Vec<Rational>> {
    set.require_gcd_one()?;
    let period = set.period_u64()?;
    if r >= period {
        return Err(Error::InvalidArgument(format!(
            "residue {r} is not below the period {period}"
        )));
    }
    if l_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "l values must be strictly increasing".into(),
        ));
    }
    let exponent = set.k() - 1;
    let ns = l_values
        .iter()
        .map(|&l| {
            period
                .checked_mul(l)
                .and_then(|n| n.checked_add(r))
                .and_then(|n| i64::try_from(n).ok())
                .ok_or_else(|| Error::InvalidArgument(format!("l = {l} is out of range")))
        })
        .collect::<Result<Vec<i64>>>()?;
    if exponent > 0 && ns.first() == Some(&0) {
        return Err(Error::InvalidArgument(
            "n = 0 has no defined ratio for k >= 2".into(),
        ));
    }
    let mut counter = Counter::new(set);
    if let Some(&last) = ns.last() {
        counter.reserve(last)?;
    }
    ns.into_iter()
        .map(|n| {
            let value = BigInt::from(counter.get(n)?);
            Ok(Rational::new(
                value,
                num_traits::pow(BigInt::from(n), exponent),
            ))
        })
        .collect()
}

/// `|x - 1|`
pub fn distance_from_one(x: &Rational) -> Rational {
    (x - Rational::one()).abs()
}

/// Best-effort decimal rendering with `digits` significant digits, display only.
pub fn decimal_string(x: &Rational, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let negative = x.is_negative();
    let x = x.abs();
    // Scale so that the integer part has exactly `digits` digits.
    let mut exp10: i64 = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    let ten = BigInt::from(10);
    let scaled = |e: i64| -> BigInt {
        let shift = digits as i64 - 1 - e;
        let v = if shift >= 0 {
            &x * Rational::from_integer(num_traits::pow(ten.clone(), shift as usize))
        } else {
            &x / Rational::from_integer(num_traits::pow(ten.clone(), (-shift) as usize))
        };
        v.round().to_integer()
    };
    let mut mant = scaled(exp10);
    let bound = num_traits::pow(ten.clone(), digits);
    let lower = num_traits::pow(ten.clone(), digits - 1);
    while mant >= bound {
        exp10 += 1;
        mant = scaled(exp10);
    }
    while mant < lower {
        exp10 -= 1;
        mant = scaled(exp10);
    }
    let digits_str = mant.to_string();
    let sign = if negative { "-" } else { "" };
    let point = exp10 + 1;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits_str)
    } else if point as usize >= digits_str.len() {
        format!(
            "{}{}",
            digits_str,
            "0".repeat(point as usize - digits_str.len())
        )
    } else {
        let (a, b) = digits_str.split_at(point as usize);
        format!("{a}.{b}")
    };
    let body = if body.contains('.') {
        body.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        body
    };
    format!("{sign}{body}")
}
