//! Exact values of the restricted partition function `p_A(n)`.
//!
//! `p_A(n)` is the coefficient of `x^n` in `prod_{a in A} 1/(1 - x^a)`. The
//! table is built one part at a time with an ascending inner sweep, so each
//! multiset of parts is counted exactly once. Sets with a common factor `g`
//! are reduced first: `p_A(n) = p_{A/g}(n/g)` when `g | n` and 0 otherwise.
//!
//! Conventions: `p_A(0) = 1`, `p_A(n) = 0` for `n < 0`, and the empty set
//! counts only the empty partition of 0.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::part_set::PartSet;

/// A value of `p_A(n)`.
pub type Count = BigUint;

/// Refuse to enumerate when more than this many partitions would be produced.
pub const ORACLE_LIMIT: u64 = 1_000_000;

fn to_index(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::InvalidArgument(format!("{n} is out of range")))
}

/// Coefficients `0..=n_max` of `prod 1/(1 - x^a)` over `parts` (which may be empty).
fn dp_table(parts: &[u64], n_max: usize) -> Vec<Count> {
    let mut table = vec![Count::zero(); n_max + 1];
    table[0] = Count::from(1u32);
    for &a in parts {
        let Some(a) = a.to_usize().filter(|&a| a <= n_max) else {
            continue;
        };
        for i in a..=n_max {
            let (lo, hi) = table.split_at_mut(i);
            hi[0] += &lo[i - a];
        }
    }
    table
}

/// Memoized counts for one part set, grown on demand.
///
/// Verifiers ask for many values of the same `p_A`; this keeps one table per
/// set instead of re-running the sweep for every argument.
#[derive(Debug, Clone)]
pub struct Counter {
    reduced: Vec<u64>,
    gcd: u64,
    table: Vec<Count>,
}

impl Counter {
    pub fn new(set: &PartSet) -> Self {
        Counter {
            reduced: set.reduced().parts().to_vec(),
            gcd: set.gcd_all(),
            table: vec![Count::from(1u32)],
        }
    }

    /// Counter for `A` or, when `set` is `None`, for the empty set.
    pub fn for_optional(set: Option<&PartSet>) -> Self {
        match set {
            Some(s) => Self::new(s),
            None => Counter {
                reduced: Vec::new(),
                gcd: 1,
                table: vec![Count::from(1u32)],
            },
        }
    }

    /// Make sure every `n <= n_max` can be answered from the table.
    pub fn reserve(&mut self, n_max: i64) -> Result<()> {
        if n_max < 0 {
            return Ok(());
        }
        let needed = to_index(n_max)? / self.gcd as usize;
        if needed >= self.table.len() {
            let target = needed.max(2 * self.table.len());
            self.table = dp_table(&self.reduced, target);
        }
        Ok(())
    }

    pub fn get(&mut self, n: i64) -> Result<Count> {
        if n < 0 || !(n as u64).is_multiple_of(self.gcd) {
            return Ok(Count::zero());
        }
        self.reserve(n)?;
        Ok(self.table[n as usize / self.gcd as usize].clone())
    }
}

/// `p_A(n)` for any integer `n`.
pub fn count(set: &PartSet, n: i64) -> Count {
    if n < 0 || !(n as u64).is_multiple_of(set.gcd_all()) {
        return Count::zero();
    }
    let m = (n as u64 / set.gcd_all()) as usize;
    let mut table = dp_table(set.reduced().parts(), m);
    table.swap_remove(m)
}

/// `[p_A(0), p_A(1), ..., p_A(n_max)]` from a single sweep.
pub fn count_table(set: &PartSet, n_max: i64) -> Result<Vec<Count>> {
    if n_max < 0 {
        return Err(Error::NegativeBound(n_max));
    }
    let n_max = to_index(n_max)?;
    let g = set.gcd_all() as usize;
    if g == 1 {
        return Ok(dp_table(set.parts(), n_max));
    }
    let reduced = dp_table(set.reduced().parts(), n_max / g);
    Ok((0..=n_max)
        .map(|i| {
            if i % g == 0 {
                reduced[i / g].clone()
            } else {
                Count::zero()
            }
        })
        .collect())
}

/// One partition, parts in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u64>);

impl Partition {
    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Lists every partition of `n` with parts in `set` by backtracking.
///
/// Independent of the table sweep, and used as its oracle on small inputs.
/// Partitions come out in reverse lexicographic order, largest first part
/// first.
pub fn enumerate_partitions(set: &PartSet, n: i64) -> Result<Vec<Partition>> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!(
            "cannot enumerate partitions of negative n = {n}"
        )));
    }
    let expected = count(set, n);
    if expected > Count::from(ORACLE_LIMIT) {
        return Err(Error::OracleBoundExceeded {
            count: expected.to_string(),
            limit: ORACLE_LIMIT,
        });
    }

    fn descend(parts: &[u64], remaining: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        // `parts` is ascending; only parts no larger than the last one chosen remain.
        for (idx, &a) in parts.iter().enumerate().rev() {
            if a > remaining {
                continue;
            }
            current.push(a);
            descend(&parts[..=idx], remaining - a, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    descend(set.parts(), n as u64, &mut Vec::new(), &mut out);
    Ok(out)
}

/// The two terms of `p_A(n) = p_A(n - a) + p_{A \ {a}}(n)`.
///
/// The first counts partitions using `a` at least once, the second those that
/// avoid it.
pub fn lemma1_split(set: &PartSet, a: i64, n: i64) -> Result<(Count, Count)> {
    if !set.contains(a) {
        return Err(Error::PartNotInSet(a));
    }
    if a > n {
        return Err(Error::PartExceedsN { part: a, n });
    }
    let with_a = count(set, n - a);
    let without_a = match set.without(a as u64) {
        Some(rest) => count(&rest, n),
        None if n == 0 => Count::from(1u32),
        None => Count::zero(),
    };
    Ok((with_a, without_a))
}
