//! Dense polynomials over exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// Renders a rational as `p/q`, or `p` when the denominator is 1.
pub fn rational_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Coefficients in ascending powers of the variable, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Highest power with a nonzero coefficient; -1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(BigInt::from(x)))
    }

    /// The unique polynomial of degree below `nodes.len()` through the points
    /// `(nodes[i], values[i])`, by Newton divided differences.
    ///
    /// Panics if the lengths differ or two nodes coincide.
    pub fn interpolate(nodes: &[Rational], values: &[Rational]) -> Self {
        assert_eq!(nodes.len(), values.len(), "one value per node");
        let m = nodes.len();

        // In-place divided differences: after pass j, diffs[i] = f[x_{i-j}, ..., x_i].
        let mut diffs = values.to_vec();
        for j in 1..m {
            for i in (j..m).rev() {
                let span = &nodes[i] - &nodes[i - j];
                assert!(!span.is_zero(), "interpolation nodes must be distinct");
                diffs[i] = (&diffs[i] - &diffs[i - 1]) / span;
            }
        }

        // Expand sum_j diffs[j] * prod_{i<j} (x - x_i) into monomial form.
        let mut coeffs = vec![Rational::zero(); m];
        let mut basis = vec![Rational::one()];
        for (j, d) in diffs.iter().enumerate() {
            for (c, b) in coeffs.iter_mut().zip(&basis) {
                *c += d * b;
            }
            if j + 1 < m {
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (p, b) in basis.iter().enumerate() {
                    next[p + 1] += b;
                    next[p] -= b * &nodes[j];
                }
                basis = next;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = rational_string(c);
            match p {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*l")?,
                _ => write!(f, "({c})*l^{p}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn degree_conventions() {
        assert_eq!(Polynomial::zero().degree(), -1);
        assert_eq!(Polynomial::new(ints(&[0, 0, 0])).degree(), -1);
        assert_eq!(Polynomial::new(ints(&[5, 0, 2, 0])).degree(), 2);
    }

    #[test]
    fn recovers_triangular_numbers() {
        // (l+1)(l+2)/2 = 1 + 3l/2 + l^2/2
        let p = Polynomial::interpolate(&ints(&[0, 1, 2]), &ints(&[1, 3, 6]));
        assert_eq!(p.coeffs(), &[q(1, 1), q(3, 2), q(1, 2)]);
        assert_eq!(p.eval_int(10), q(66, 1));
        assert_eq!(p.to_string(), "(1/2)*l^2 + (3/2)*l + 1");
    }

    #[test]
    fn constant_data_gives_constant() {
        let p = Polynomial::interpolate(&ints(&[0, 1, 2, 3]), &ints(&[4, 4, 4, 4]));
        assert_eq!(p.coeffs(), &[q(4, 1)]);
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(rational_string(&q(6, 2)), "3");
        assert_eq!(rational_string(&q(-2, 4)), "-1/2");
    }

    proptest! {
        #[test]
        fn interpolation_reproduces_its_source(
            coeffs in prop::collection::vec((-50i64..50, 1i64..7), 1..6),
            shift in -5i64..5,
        ) {
            let source = Polynomial::new(coeffs.iter().map(|&(n, d)| q(n, d)).collect());
            let nodes: Vec<Rational> = (0..coeffs.len() as i64).map(|i| q(2 * i + shift, 1)).collect();
            let values: Vec<Rational> = nodes.iter().map(|x| source.eval(x)).collect();
            prop_assert_eq!(Polynomial::interpolate(&nodes, &values), source);
        }
    }
}
