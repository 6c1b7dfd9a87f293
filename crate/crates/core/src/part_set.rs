//! Validated sets of allowed parts.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// A finite set of positive integer parts `a_1 < a_2 < ... < a_k`.
///
/// The gcd and product of the parts are computed once at construction. The
/// product is the quasi period used by [`crate::quasipoly`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartSet {
    parts: Vec<u64>,
    gcd_all: u64,
    period: BigUint,
}

impl PartSet {
    /// Builds a set from raw input, dropping duplicates and sorting.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&bad) = raw.iter().find(|&&a| a < 1) {
            return Err(Error::NonPositivePart(bad));
        }
        let mut parts: Vec<u64> = raw.iter().map(|&a| a as u64).collect();
        parts.sort_unstable();
        parts.dedup();
        Ok(Self::from_sorted(parts))
    }

    fn from_sorted(parts: Vec<u64>) -> Self {
        let gcd_all = parts.iter().fold(0u64, |g, &a| g.gcd(&a));
        let period = parts
            .iter()
            .fold(BigUint::one(), |acc, &a| acc * BigUint::from(a));
        PartSet {
            parts,
            gcd_all,
            period,
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn gcd_all(&self) -> u64 {
        self.gcd_all
    }

    /// Product of all parts.
    pub fn period(&self) -> &BigUint {
        &self.period
    }

    /// The period as a machine integer, for callers that index tables by it.
    pub fn period_u64(&self) -> Result<u64> {
        self.period.to_u64().ok_or(Error::PeriodTooLarge)
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn contains(&self, a: i64) -> bool {
        a >= 1 && self.parts.binary_search(&(a as u64)).is_ok()
    }

    /// The set with `a` removed, or `None` if nothing would remain.
    pub fn without(&self, a: u64) -> Option<PartSet> {
        let rest: Vec<u64> = self.parts.iter().copied().filter(|&p| p != a).collect();
        if rest.is_empty() {
            None
        } else {
            Some(Self::from_sorted(rest))
        }
    }

    /// `A / gcd(A)`.
    pub fn reduced(&self) -> PartSet {
        if self.gcd_all == 1 {
            return self.clone();
        }
        Self::from_sorted(self.parts.iter().map(|&a| a / self.gcd_all).collect())
    }

    pub(crate) fn require_gcd_one(&self) -> Result<()> {
        if self.gcd_all == 1 {
            Ok(())
        } else {
            Err(Error::GcdNotOne(self.gcd_all))
        }
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

pub fn make_part_set(raw: &[i64]) -> Result<PartSet> {
    PartSet::new(raw)
}
