use denumerant::counting::{count, count_table, enumerate_partitions, lemma1_split, Count};
use denumerant::part_set::{make_part_set, PartSet};
use denumerant::poly::Rational;
use denumerant::quasipoly::{
    asymptotic_ratio, distance_from_one, interpolate_constituents, leading_coefficient_expected,
    ratio_to_estimate,
};
use denumerant::recurrences::{solve_congruence, IdentityChecker};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn part_set_strategy(max_k: usize, max_part: i64) -> impl Strategy<Value = PartSet> {
    prop::collection::btree_set(1..=max_part, 1..=max_k)
        .prop_map(|s| make_part_set(&s.into_iter().collect::<Vec<_>>()).unwrap())
}

fn coprime_set_strategy(max_k: usize, max_part: i64) -> impl Strategy<Value = PartSet> {
    part_set_strategy(max_k, max_part).prop_filter("gcd 1", |a| a.gcd_all() == 1)
}

fn pairwise_coprime(a: &PartSet) -> bool {
    let p = a.parts();
    (0..p.len()).all(|i| (i + 1..p.len()).all(|j| p[i].gcd(&p[j]) == 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_count(a in part_set_strategy(4, 12), n in 0i64..=40) {
        let listed = enumerate_partitions(&a, n).unwrap();
        prop_assert_eq!(Count::from(listed.len()), count(&a, n));
        for p in &listed {
            prop_assert_eq!(p.total(), n as u64);
            prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(p.parts().iter().all(|&x| a.contains(x as i64)));
        }
        let mut dedup = listed.clone();
        dedup.sort();
        dedup.dedup();
        prop_assert_eq!(dedup.len(), listed.len());
    }

    #[test]
    fn lemma1_terms_sum_to_count(a in part_set_strategy(5, 15), pick in 0usize..5, extra in 0i64..200) {
        let part = a.parts()[pick % a.k()] as i64;
        let n = part + extra;
        let (with_a, without_a) = lemma1_split(&a, part, n).unwrap();
        prop_assert_eq!(with_a + without_a, count(&a, n));
    }

    #[test]
    fn common_factor_reduces(a in part_set_strategy(4, 10), g in 2u64..6, n in 0i64..300) {
        let scaled: Vec<i64> = a.parts().iter().map(|&x| (x * g) as i64).collect();
        let b = make_part_set(&scaled).unwrap();
        prop_assert_eq!(b.gcd_all() % g, 0);
        let bg = b.gcd_all() as i64;
        if n % bg == 0 {
            prop_assert_eq!(count(&b, n), count(&b.reduced(), n / bg));
        } else {
            prop_assert_eq!(count(&b, n), Count::from(0u32));
        }
    }

    #[test]
    fn positive_from_period_on(a in coprime_set_strategy(4, 7), extra in 0i64..50) {
        let n = a.period_u64().unwrap() as i64 + extra;
        prop_assert!(count(&a, n) >= Count::from(1u32));
    }

    #[test]
    fn table_agrees_with_pointwise(a in part_set_strategy(4, 12), n_max in 0i64..400, probes in prop::collection::vec(0.0f64..1.0, 5)) {
        let table = count_table(&a, n_max).unwrap();
        prop_assert_eq!(table.len() as i64, n_max + 1);
        for u in probes {
            let i = (u * n_max as f64) as usize;
            prop_assert_eq!(&table[i], &count(&a, i as i64));
        }
    }

    #[test]
    fn congruence_matches_search(m in 1u64..=50, c in 0i64..50, r in 0i64..50) {
        let (c, r) = (c % m as i64, r % m as i64);
        let found = solve_congruence(c, r, m).unwrap();
        let brute: Vec<u64> = (0..m).filter(|&x| (c * x as i64 - r).rem_euclid(m as i64) == 0).collect();
        prop_assert_eq!(&found.solutions, &brute);
        prop_assert_eq!(found.solution_count, brute.len() as u64);
        prop_assert_eq!(found.solvable, !brute.is_empty());
        if (c as u64).gcd(&m) == 1 {
            prop_assert_eq!(found.solution_count, 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constituents_are_exact(a in coprime_set_strategy(4, 9)) {
        let qp = interpolate_constituents(&a, 6).unwrap();
        let t = qp.period();
        let k = a.k() as isize;
        let lead = leading_coefficient_expected(&a).unwrap();
        let table = count_table(&a, (t * (a.k() as u64 + 6)) as i64).unwrap();
        for (r, c) in qp.constituents().iter().enumerate() {
            prop_assert_eq!(c.degree(), k - 1);
            prop_assert_eq!(c.leading(), Some(&lead));
            for l in 0..=(a.k() as u64 + 5) {
                let want = Rational::from_integer(BigInt::from(table[(t * l) as usize + r].clone()));
                prop_assert_eq!(c.eval_int(l as i64), want);
            }
        }
    }

    #[test]
    fn quasipoly_eval_matches_count(a in coprime_set_strategy(3, 7), seeds in prop::collection::vec(0.0f64..1.0, 20)) {
        let qp = interpolate_constituents(&a, 3).unwrap();
        let n_max = 50 * qp.period() as i64;
        let table = count_table(&a, n_max).unwrap();
        for u in seeds {
            let n = (u * n_max as f64) as i64;
            prop_assert_eq!(qp.eval(n).unwrap(), table[n as usize].clone());
        }
    }

    #[test]
    fn telescoped_difference_holds(a in coprime_set_strategy(3, 6), l in 1u64..=4) {
        let mut checker = IdentityChecker::new(&a);
        let t = a.period_u64().unwrap();
        for &part in a.parts() {
            for r in 0..t {
                let rep = checker.telescoped_difference(part as i64, l, r).unwrap();
                prop_assert!(rep.holds, "{} {} {}", rep.instance, rep.lhs, rep.rhs);
                prop_assert!(checker.divisibility_filter(part as i64, l, r).unwrap().holds);
            }
        }
    }

    #[test]
    fn sertoz_ozluk_for_pairwise_coprime(a in coprime_set_strategy(4, 9).prop_filter("pairwise coprime, k >= 2", |a| a.k() >= 2 && pairwise_coprime(a))) {
        let mut checker = IdentityChecker::new(&a);
        let start = denumerant::recurrences::sertoz_ozluk_bound(&a).unwrap() + 1;
        for n in start..start + 50 {
            let rep = checker.sertoz_ozluk(n, false).unwrap();
            prop_assert!(rep.holds, "{} gives {}", rep.instance, rep.rhs);
        }
    }
}

#[test]
fn closed_form_for_all_small_coprime_pairs() {
    for a1 in 1..=12i64 {
        for a2 in a1 + 1..=12 {
            if a1.gcd(&a2) != 1 {
                continue;
            }
            let set = make_part_set(&[a1, a2]).unwrap();
            let mut checker = IdentityChecker::new(&set);
            for r in 0..(a1 * a2) as u64 {
                for l in 0..=50 {
                    assert!(checker.k2_closed_form(l, r).unwrap().holds);
                }
            }
        }
    }
}

#[test]
fn ratio_gap_shrinks_along_doublings() {
    for raw in [&[1, 2][..], &[2, 3], &[3, 4], &[1, 2, 3], &[2, 3, 5]] {
        let a = make_part_set(raw).unwrap();
        let t = a.period_u64().unwrap() as i64;
        let table = count_table(&a, t * 1024 + t).unwrap();
        for r in 0..t {
            let gaps: Vec<Rational> = (3..=10)
                .map(|j| {
                    let n = t * (1 << j) + r;
                    distance_from_one(&ratio_to_estimate(&a, n, &table[n as usize]).unwrap())
                })
                .collect();
            assert!(
                gaps.windows(2).all(|w| w[1] <= w[0]),
                "ratio gap grew for {a} residue {r}"
            );
        }
    }
}

#[test]
fn ratio_at_a_thousand() {
    let a = make_part_set(&[1, 2, 3]).unwrap();
    let gap = distance_from_one(&asymptotic_ratio(&a, 1000).unwrap());
    assert!(gap < Rational::new(BigInt::from(1), BigInt::from(100)));
}
