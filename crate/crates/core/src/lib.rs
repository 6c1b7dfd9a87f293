//! Exact computation of the restricted partition function `p_A(n)`, the number
//! of ways to write `n` as a sum of parts drawn (with repetition) from a finite
//! set `A`, together with its quasi-polynomial constituents and checks of the
//! recurrence identities it satisfies.

pub mod counting;
pub mod error;
pub mod part_set;
pub mod poly;
pub mod quasipoly;
pub mod recurrences;

pub use counting::{
    count, count_table, enumerate_partitions, lemma1_split, Count, Counter, Partition,
};
pub use error::{Error, Result};
pub use part_set::{make_part_set, PartSet};
pub use poly::{rational_string, Polynomial, Rational};
pub use quasipoly::{
    asymptotic_ratio, eval_quasipoly, interpolate_constituents, leading_coefficient_expected,
    limit_check, QuasiPolynomial,
};
pub use recurrences::{
    k2_closed_form, run_identity_suite, sertoz_ozluk_check, solve_congruence,
    telescoped_difference_sides, CongruenceResult, Identity, IdentityReport, SuiteEntry,
};
