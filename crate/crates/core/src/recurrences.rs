//! Checks of the recurrence identities satisfied by `p_A`.
//!
//! Every checker evaluates both sides independently from exact counts and
//! returns an [`IdentityReport`]; none of them assume the identity.
//!
//! - Lemma 1 split: `p_A(n) = p_A(n - a) + p_{A \ {a}}(n)` for `a <= n`.
//! - Telescoped difference: `p_A(Tl + r) - p_A(T(l-1) + r)` equals the sum of
//!   `p_{A \ {a}}(Tl + r - i*a)` over `0 <= i < T/a` with `s | (r - i*a)`,
//!   `s = gcd(A \ {a})`. For two parts this sum is always 1.
//! - Closed form for two coprime parts: `p_A(a_1 a_2 l + r) = l + p_A(r)`.
//! - Sertöz–Özlük: `sum_{m=0}^{k-2} (-1)^m C(k-2, m) [p_A(n-m) - p_A(n-m-T)] = 1`
//!   for `n > T - sum(A) + k - 2`.
//! - Congruence counts: `c*x = r (mod s)` has `gcd(c, s)` solutions when
//!   `gcd(c, s) | r` and none otherwise.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counting::Counter;
use crate::error::{Error, Result};
use crate::part_set::PartSet;

/// All incongruent solutions of `coefficient * x = target (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceResult {
    pub coefficient: i64,
    pub target: i64,
    pub modulus: u64,
    pub solvable: bool,
    pub solution_count: u64,
    /// Representatives in `[0, modulus)`, ascending.
    pub solutions: Vec<u64>,
}

impl CongruenceResult {
    pub fn satisfies(&self, x: u64) -> bool {
        let m = self.modulus as i128;
        (self.coefficient as i128 * x as i128 - self.target as i128).rem_euclid(m) == 0
    }
}

pub fn solve_congruence(coefficient: i64, target: i64, modulus: u64) -> Result<CongruenceResult> {
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be at least 1".into()));
    }
    let m = modulus as i128;
    let a = (coefficient as i128).rem_euclid(m);
    let b = (target as i128).rem_euclid(m);
    let g = a.gcd(&m);
    let mut result = CongruenceResult {
        coefficient,
        target,
        modulus,
        solvable: false,
        solution_count: 0,
        solutions: Vec::new(),
    };
    if b % g != 0 {
        return Ok(result);
    }
    let step = m / g;
    // a/g is invertible modulo m/g.
    let inverse = (a / g).extended_gcd(&step).x.rem_euclid(step);
    let base = ((b / g) * inverse).rem_euclid(step);
    result.solvable = true;
    result.solution_count = g as u64;
    result.solutions = (0..g).map(|t| (base + t * step) as u64).collect();
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    Lemma1Split,
    TelescopedDifference,
    /// The filtered and unfiltered telescoped sums agree.
    DivisibilityFilter,
    K2ClosedForm,
    SertozOzluk,
    CongruenceCount,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Lemma1Split => "lemma1_split",
            Identity::TelescopedDifference => "telescoped_difference",
            Identity::DivisibilityFilter => "divisibility_filter",
            Identity::K2ClosedForm => "k2_closed_form",
            Identity::SertozOzluk => "sertoz_ozluk",
            Identity::CongruenceCount => "congruence_count",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The parameters one identity was evaluated at. Unused fields are `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Instance {
    pub parts: Vec<u64>,
    /// The part removed by Lemma 1, or the congruence coefficient.
    pub removed: Option<u64>,
    pub n: Option<i64>,
    pub l: Option<u64>,
    pub r: Option<u64>,
    /// Congruence modulus.
    pub modulus: Option<u64>,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={:?}", self.parts)?;
        if let Some(a) = self.removed {
            write!(f, " a={a}")?;
        }
        if let Some(m) = self.modulus {
            write!(f, " mod={m}")?;
        }
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let Some(l) = self.l {
            write!(f, " l={l}")?;
        }
        if let Some(r) = self.r {
            write!(f, " r={r}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub instance: Instance,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
    /// Evaluated outside the range where the identity is claimed.
    pub below_bound: bool,
}

impl IdentityReport {
    fn new(identity: Identity, instance: Instance, lhs: BigInt, rhs: BigInt) -> Self {
        let holds = lhs == rhs;
        IdentityReport {
            identity,
            instance,
            lhs,
            rhs,
            holds,
            below_bound: false,
        }
    }
}

/// One entry of [`run_identity_suite`]: a report, or a check that does not
/// apply to this set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteEntry {
    Checked(IdentityReport),
    Skipped { identity: Identity, reason: String },
}

impl SuiteEntry {
    pub fn is_failure(&self) -> bool {
        matches!(self, SuiteEntry::Checked(r) if !r.holds)
    }
}

/// Shared count tables for `A` and each `A \ {a}`.
pub struct IdentityChecker {
    set: PartSet,
    counter: Counter,
    without: BTreeMap<u64, (Option<PartSet>, Counter)>,
}

impl IdentityChecker {
    pub fn new(set: &PartSet) -> Self {
        IdentityChecker {
            set: set.clone(),
            counter: Counter::new(set),
            without: BTreeMap::new(),
        }
    }

    pub fn set(&self) -> &PartSet {
        &self.set
    }

    fn count(&mut self, n: i64) -> Result<BigInt> {
        Ok(BigInt::from(self.counter.get(n)?))
    }

    fn instance(&self) -> Instance {
        Instance {
            parts: self.set.parts().to_vec(),
            ..Instance::default()
        }
    }

    fn without(&mut self, a: u64) -> &mut (Option<PartSet>, Counter) {
        let set = &self.set;
        self.without.entry(a).or_insert_with(|| {
            let rest = set.without(a);
            let counter = Counter::for_optional(rest.as_ref());
            (rest, counter)
        })
    }

    fn require_part(&self, a: i64) -> Result<u64> {
        if self.set.contains(a) {
            Ok(a as u64)
        } else {
            Err(Error::PartNotInSet(a))
        }
    }

    fn period_i64(&self) -> Result<i64> {
        i64::try_from(self.set.period_u64()?).map_err(|_| Error::PeriodTooLarge)
    }

    fn residue_in_range(&self, r: u64) -> Result<()> {
        let t = self.set.period_u64()?;
        if r < t {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "residue {r} is not below the period {t}"
            )))
        }
    }

    /// `n = period * l + r`, checked.
    fn point(&self, l: u64, r: u64) -> Result<i64> {
        let t = self.period_i64()?;
        i64::try_from(l)
            .ok()
            .and_then(|l| t.checked_mul(l))
            .and_then(|n| n.checked_add(r as i64))
            .ok_or_else(|| Error::InvalidArgument(format!("l = {l} is out of range")))
    }

    pub fn lemma1(&mut self, a: i64, n: i64) -> Result<IdentityReport> {
        let part = self.require_part(a)?;
        if a > n {
            return Err(Error::PartExceedsN { part: a, n });
        }
        let lhs = self.count(n)?;
        let with_a = self.count(n - a)?;
        let without_a = BigInt::from(self.without(part).1.get(n)?);
        let instance = Instance {
            removed: Some(part),
            n: Some(n),
            ..self.instance()
        };
        Ok(IdentityReport::new(
            Identity::Lemma1Split,
            instance,
            lhs,
            with_a + without_a,
        ))
    }

    /// The telescoped sum, optionally keeping only terms with `s | (r - i*a)`.
    fn telescoped_sum(&mut self, a: u64, l: u64, r: u64, filtered: bool) -> Result<BigInt> {
        let t = self.set.period_u64()?;
        let top = self.point(l, r)?;
        let (rest, counter) = self.without(a);
        // gcd of the empty set is 0, and 0 divides only 0.
        let s = rest.as_ref().map_or(0, |p| p.gcd_all()) as i64;
        let mut sum = BigInt::zero();
        for i in 0..(t / a) as i64 {
            let offset = r as i64 - i * a as i64;
            let divisible = if s == 0 { offset == 0 } else { offset % s == 0 };
            if filtered && !divisible {
                continue;
            }
            sum += BigInt::from(counter.get(top - i * a as i64)?);
        }
        Ok(sum)
    }

    pub fn telescoped_difference(
        &mut self,
        removed: i64,
        l: u64,
        r: u64,
    ) -> Result<IdentityReport> {
        self.set.require_gcd_one()?;
        let a = self.require_part(removed)?;
        self.residue_in_range(r)?;
        if l < 1 {
            return Err(Error::InvalidArgument(
                "telescoped difference needs l >= 1".into(),
            ));
        }
        let t = self.period_i64()?;
        let n = self.point(l, r)?;
        let lhs = self.count(n)? - self.count(n - t)?;
        let rhs = self.telescoped_sum(a, l, r, true)?;
        let instance = Instance {
            removed: Some(a),
            l: Some(l),
            r: Some(r),
            ..self.instance()
        };
        Ok(IdentityReport::new(
            Identity::TelescopedDifference,
            instance,
            lhs,
            rhs,
        ))
    }

    /// Compares the filtered telescoped sum with the sum over every `i`.
    pub fn divisibility_filter(&mut self, removed: i64, l: u64, r: u64) -> Result<IdentityReport> {
        self.set.require_gcd_one()?;
        let a = self.require_part(removed)?;
        self.residue_in_range(r)?;
        let filtered = self.telescoped_sum(a, l, r, true)?;
        let unfiltered = self.telescoped_sum(a, l, r, false)?;
        let instance = Instance {
            removed: Some(a),
            l: Some(l),
            r: Some(r),
            ..self.instance()
        };
        Ok(IdentityReport::new(
            Identity::DivisibilityFilter,
            instance,
            filtered,
            unfiltered,
        ))
    }

    pub fn k2_closed_form(&mut self, l: u64, r: u64) -> Result<IdentityReport> {
        if self.set.k() != 2 {
            return Err(Error::WrongCardinality {
                found: self.set.k(),
                needed: "exactly 2",
            });
        }
        self.set.require_gcd_one()?;
        self.residue_in_range(r)?;
        let lhs = self.count(self.point(l, r)?)?;
        let rhs = BigInt::from(l) + self.count(r as i64)?;
        let instance = Instance {
            l: Some(l),
            r: Some(r),
            ..self.instance()
        };
        Ok(IdentityReport::new(
            Identity::K2ClosedForm,
            instance,
            lhs,
            rhs,
        ))
    }

    /// Evaluates the Sertöz–Özlük sum at `n`. Below the validity bound this
    /// fails unless `force` is set, in which case the report is flagged.
    pub fn sertoz_ozluk(&mut self, n: i64, force: bool) -> Result<IdentityReport> {
        self.set.require_gcd_one()?;
        let k = self.set.k();
        if k < 2 {
            return Err(Error::WrongCardinality {
                found: k,
                needed: "at least 2",
            });
        }
        let bound = sertoz_ozluk_bound(&self.set)?;
        let below = n <= bound;
        if below && !force {
            return Err(Error::BelowValidityBound { n, bound });
        }
        let t = self.period_i64()?;
        let weights = alternating_binomials(k - 2);
        let mut rhs = BigInt::zero();
        for (m, w) in weights.iter().enumerate() {
            let i = n - m as i64;
            rhs += w * (self.count(i)? - self.count(i - t)?);
        }
        let instance = Instance {
            n: Some(n),
            ..self.instance()
        };
        let mut report = IdentityReport::new(Identity::SertozOzluk, instance, BigInt::one(), rhs);
        report.below_bound = below;
        Ok(report)
    }
}

/// `C_m = (-1)^m * binom(d, m)` for `m = 0..=d`; all other `C_m` are zero.
fn alternating_binomials(d: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(d + 1);
    let mut c = BigInt::one();
    for m in 0..=d {
        out.push(if m % 2 == 0 { c.clone() } else { -c.clone() });
        c = c * (d - m) / (m + 1);
    }
    out
}

/// `T - sum(A) + k - 2`; the recurrence is claimed for `n` strictly above it.
pub fn sertoz_ozluk_bound(set: &PartSet) -> Result<i64> {
    let t = i64::try_from(set.period_u64()?).map_err(|_| Error::PeriodTooLarge)?;
    Ok(t - set.sum() as i64 + set.k() as i64 - 2)
}

pub fn telescoped_difference_sides(
    set: &PartSet,
    removed: i64,
    l: u64,
    r: u64,
) -> Result<IdentityReport> {
    IdentityChecker::new(set).telescoped_difference(removed, l, r)
}

pub fn k2_closed_form(set: &PartSet, l: u64, r: u64) -> Result<IdentityReport> {
    IdentityChecker::new(set).k2_closed_form(l, r)
}

pub fn sertoz_ozluk_check(set: &PartSet, n: i64, force: bool) -> Result<IdentityReport> {
    IdentityChecker::new(set).sertoz_ozluk(n, force)
}

/// Solution count of `a*x = r (mod s)` against `gcd(a, s)`, where `s` is the
/// gcd of the other parts.
fn congruence_report(set: &PartSet, a: u64, s: u64, r: u64) -> Result<IdentityReport> {
    let solved = solve_congruence(a as i64, r as i64, s)?;
    let g = a.gcd(&s);
    let predicted = if r.is_multiple_of(g) { g } else { 0 };
    let all_valid = solved.solutions.iter().all(|&x| solved.satisfies(x));
    let instance = Instance {
        parts: set.parts().to_vec(),
        removed: Some(a),
        r: Some(r),
        modulus: Some(s),
        ..Instance::default()
    };
    let mut report = IdentityReport::new(
        Identity::CongruenceCount,
        instance,
        BigInt::from(solved.solution_count),
        BigInt::from(predicted),
    );
    report.holds &= all_valid && solved.solutions.len() as u64 == solved.solution_count;
    Ok(report)
}

fn with_context<T>(result: Result<T>, identity: Identity, detail: impl fmt::Display) -> Result<T> {
    result.map_err(|e| Error::InInstance {
        context: format!("{identity} at {detail}"),
        source: Box::new(e),
    })
}

/// Runs every checker over a deterministic family of instances.
///
/// Order: congruence counts, Lemma 1 splits at seeded random points,
/// telescoped differences with their filter comparison, the two-part closed
/// form, then Sertöz–Özlük over `T * l_max` consecutive `n` above the bound.
pub fn run_identity_suite(set: &PartSet, l_max: u64, seed: u64) -> Result<Vec<SuiteEntry>> {
    set.require_gcd_one()?;
    if l_max < 1 {
        return Err(Error::InvalidArgument("l_max must be at least 1".into()));
    }
    let t = set.period_u64()?;
    let k = set.k();
    let mut checker = IdentityChecker::new(set);
    let mut out = Vec::new();
    let skip = |identity: Identity, reason: &str| SuiteEntry::Skipped {
        identity,
        reason: reason.to_string(),
    };
    const ONE_PART: &str = "needs at least 2 parts";

    if k >= 2 {
        for &a in set.parts() {
            let s = set.without(a).map_or(0, |rest| rest.gcd_all());
            for r in 0..s {
                let report = congruence_report(set, a, s, r);
                out.push(SuiteEntry::Checked(with_context(
                    report,
                    Identity::CongruenceCount,
                    format!("a={a} s={s} r={r}"),
                )?));
            }
        }
    } else {
        out.push(skip(Identity::CongruenceCount, ONE_PART));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_hi = i64::try_from(t.saturating_mul(l_max + 1)).map_err(|_| Error::PeriodTooLarge)?;
    for _ in 0..(t * l_max).max(8) {
        let a = set.parts()[rng.gen_range(0..k)] as i64;
        let n = rng.gen_range(a..=n_hi.max(a));
        let report = checker.lemma1(a, n);
        out.push(SuiteEntry::Checked(with_context(
            report,
            Identity::Lemma1Split,
            format!("a={a} n={n}"),
        )?));
    }

    if k >= 2 {
        for &a in set.parts() {
            for r in 0..t {
                for l in 1..=l_max {
                    let detail = format!("a={a} l={l} r={r}");
                    let report = checker.telescoped_difference(a as i64, l, r);
                    out.push(SuiteEntry::Checked(with_context(
                        report,
                        Identity::TelescopedDifference,
                        &detail,
                    )?));
                    let report = checker.divisibility_filter(a as i64, l, r);
                    out.push(SuiteEntry::Checked(with_context(
                        report,
                        Identity::DivisibilityFilter,
                        &detail,
                    )?));
                }
            }
        }
    } else {
        out.push(skip(Identity::TelescopedDifference, ONE_PART));
        out.push(skip(Identity::DivisibilityFilter, ONE_PART));
    }

    if k == 2 {
        for r in 0..t {
            for l in 0..=l_max {
                let report = checker.k2_closed_form(l, r);
                out.push(SuiteEntry::Checked(with_context(
                    report,
                    Identity::K2ClosedForm,
                    format!("l={l} r={r}"),
                )?));
            }
        }
    } else {
        out.push(skip(Identity::K2ClosedForm, "needs exactly 2 parts"));
    }

    if k >= 2 {
        let start = sertoz_ozluk_bound(set)? + 1;
        for n in start..start + (t * l_max) as i64 {
            let report = checker.sertoz_ozluk(n, false);
            out.push(SuiteEntry::Checked(with_context(
                report,
                Identity::SertozOzluk,
                format!("n={n}"),
            )?));
        }
    } else {
        out.push(skip(Identity::SertozOzluk, ONE_PART));
    }

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part_set::make_part_set;

    fn set(raw: &[i64]) -> PartSet {
        make_part_set(raw).unwrap()
    }

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn congruence_examples() {
        let c = solve_congruence(3, 2, 4).unwrap();
        assert!(c.solvable);
        assert_eq!(c.solutions, vec![2]);
        let c = solve_congruence(2, 3, 4).unwrap();
        assert!(!c.solvable);
        assert_eq!(c.solution_count, 0);
        let c = solve_congruence(0, 0, 5).unwrap();
        assert_eq!(c.solutions, vec![0, 1, 2, 3, 4]);
        let c = solve_congruence(-4, 6, 10).unwrap();
        assert_eq!(c.solutions, vec![1, 6]);
        assert!(solve_congruence(1, 1, 0).is_err());
    }

    #[test]
    fn binomial_weights() {
        assert_eq!(alternating_binomials(0), vec![int(1)]);
        assert_eq!(alternating_binomials(2), vec![int(1), int(-2), int(1)]);
        assert_eq!(
            alternating_binomials(4),
            vec![int(1), int(-4), int(6), int(-4), int(1)]
        );
    }

    #[test]
    fn telescoped_examples() {
        let r = telescoped_difference_sides(&set(&[2, 3]), 3, 2, 1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(1), int(1)));
        assert!(r.holds);
        let r = telescoped_difference_sides(&set(&[1, 2, 3]), 3, 1, 0).unwrap();
        assert_eq!(r.lhs, int(6));
        assert!(r.holds);
        // Two coprime parts: the right side is always 1.
        let mut c = IdentityChecker::new(&set(&[5, 7]));
        for r in 0..35 {
            for l in 1..4 {
                for a in [5, 7] {
                    assert_eq!(c.telescoped_difference(a, l, r).unwrap().rhs, int(1));
                }
            }
        }
    }

    #[test]
    fn telescoped_errors() {
        let a = set(&[2, 3]);
        assert_eq!(
            telescoped_difference_sides(&a, 4, 1, 0),
            Err(Error::PartNotInSet(4))
        );
        assert_eq!(
            telescoped_difference_sides(&set(&[2, 4]), 2, 1, 0),
            Err(Error::GcdNotOne(2))
        );
        assert!(telescoped_difference_sides(&a, 2, 0, 0).is_err());
        assert!(telescoped_difference_sides(&a, 2, 1, 6).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let a = set(&[2, 3]);
        let r = k2_closed_form(&a, 2, 1).unwrap();
        assert_eq!((r.lhs, r.rhs), (int(2), int(2)));
        for r in 0..6 {
            let rep = k2_closed_form(&a, 0, r).unwrap();
            assert!(rep.holds);
        }
        let r = k2_closed_form(&set(&[3, 4]), 5, 7).unwrap();
        assert_eq!((r.lhs, r.rhs), (int(6), int(6)));
        assert!(matches!(
            k2_closed_form(&set(&[1, 2, 3]), 1, 0),
            Err(Error::WrongCardinality { found: 3, .. })
        ));
        assert_eq!(
            k2_closed_form(&set(&[2, 4]), 1, 0),
            Err(Error::GcdNotOne(2))
        );
    }

    #[test]
    fn sertoz_ozluk_examples() {
        let a = set(&[2, 3]);
        assert_eq!(sertoz_ozluk_bound(&a).unwrap(), 1);
        let r = sertoz_ozluk_check(&a, 7, false).unwrap();
        assert_eq!(r.rhs, int(1));
        assert!(r.holds && !r.below_bound);
        assert!(sertoz_ozluk_check(&a, 8, false).unwrap().holds);
        assert!(
            sertoz_ozluk_check(&set(&[1, 2, 3]), 10, false)
                .unwrap()
                .holds
        );
        assert_eq!(
            sertoz_ozluk_check(&a, 1, false),
            Err(Error::BelowValidityBound { n: 1, bound: 1 })
        );
        let forced = sertoz_ozluk_check(&a, 1, true).unwrap();
        assert!(forced.below_bound);
        // p(1) - p(-5) = 0
        assert!(!forced.holds);
    }

    #[test]
    fn sertoz_ozluk_needs_pairwise_coprime_parts() {
        // 2 and 4 share the factor 2, which leaves a (-1)^n term in the
        // differenced sequence.
        let r = sertoz_ozluk_check(&set(&[1, 2, 3, 4]), 17, false).unwrap();
        assert_eq!(r.rhs, int(-2));
        assert!(!r.holds);
    }

    #[test]
    fn lemma1_report_sums() {
        let mut c = IdentityChecker::new(&set(&[7]));
        let r = c.lemma1(7, 7).unwrap();
        assert_eq!((r.lhs, r.rhs), (int(1), int(1)));
        assert_eq!(c.lemma1(7, 3), Err(Error::PartExceedsN { part: 7, n: 3 }));
    }

    #[test]
    fn suite_for_pair() {
        let entries = run_identity_suite(&set(&[2, 3]), 3, 0).unwrap();
        let count = |id: Identity| {
            entries
                .iter()
                .filter(|e| matches!(e, SuiteEntry::Checked(r) if r.identity == id))
                .count()
        };
        assert!(count(Identity::TelescopedDifference) >= 18);
        assert_eq!(count(Identity::K2ClosedForm), 24);
        assert!(entries.iter().all(|e| !e.is_failure()));
    }

    #[test]
    fn suite_for_single_part_skips() {
        let entries = run_identity_suite(&set(&[1]), 1, 0).unwrap();
        let skipped: Vec<Identity> = entries
            .iter()
            .filter_map(|e| match e {
                SuiteEntry::Skipped { identity, .. } => Some(*identity),
                _ => None,
            })
            .collect();
        for id in [
            Identity::TelescopedDifference,
            Identity::K2ClosedForm,
            Identity::SertozOzluk,
        ] {
            assert!(skipped.contains(&id));
        }
        assert!(entries.iter().all(|e| !e.is_failure()));
    }

    #[test]
    fn suite_is_deterministic() {
        let a = set(&[1, 2, 3]);
        let first = run_identity_suite(&a, 2, 1).unwrap();
        assert_eq!(first, run_identity_suite(&a, 2, 1).unwrap());
        assert!(first.iter().all(|e| !e.is_failure()));
        assert_ne!(first, run_identity_suite(&a, 2, 2).unwrap());
    }
}
