mod common;

use common::*;
use idealkit::certify::{is_regular_sequence, relation_from_binomial, smallest_valuation_vector, Status};
use idealkit::ideal::kernel_of_map;
use idealkit::{Field, Polynomial, Ring};
use num_integer::Integer;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config(0x5eed_0004))]

    #[test]
    fn pure_powers_are_regular(powers in exps(3, 3), perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let r = ring(Field::Rational, 3);
        let vars = r.variables();
        let seq: Vec<Polynomial> = perm.iter().map(|&v| vars[v].pow(powers[v] + 1)).collect();
        let report = is_regular_sequence(&seq).unwrap();
        prop_assert_eq!(report.status, Status::Verified);
        prop_assert!(report.replay());
    }

    /// Unit factors can share global components, so the global colon test may
    /// give up, but it must never refute a locally regular sequence.
    #[test]
    fn unit_multiples_are_never_refuted(
        powers in exps(3, 1),
        units in prop::collection::vec(raw_poly_in_m(3, 1, 1), 3),
    ) {
        let r = ring(Field::Rational, 3);
        let vars = r.variables();
        let seq: Vec<Polynomial> = (0..3)
            .map(|v| {
                let u = &Polynomial::one(&r) + &build(&r, &units[v]);
                &vars[v].pow(powers[v] + 1) * &u
            })
            .collect();
        let report = is_regular_sequence(&seq).unwrap();
        prop_assert_ne!(report.status, Status::Refuted);
        prop_assert!(report.replay());
    }

    #[test]
    fn repeated_element_is_never_regular(f in raw_poly_in_m(3, 2, 3)) {
        let r = ring(Field::Rational, 3);
        let f = build(&r, &f);
        let report = is_regular_sequence(&[f.clone(), f]).unwrap();
        prop_assert_ne!(report.status, Status::Verified);
        prop_assert!(report.replay());
    }

    #[test]
    fn monomial_curve_valuation(a in 2u32..=5, b in 2u32..=7, c in 2u32..=9) {
        prop_assume!(a < b && b < c);
        let params = Ring::rational(&["s"]);
        let images = params.parse_all(&[&format!("s^{a}"), &format!("s^{b}"), &format!("s^{c}")]).unwrap();
        let target = Ring::new(Field::Rational, &["x", "y", "z"]);
        let kernel = kernel_of_map(&target, &images).unwrap();
        let relations: Vec<Vec<i64>> = kernel.gb().basis().iter().filter_map(relation_from_binomial).collect();
        prop_assert_eq!(relations.len(), kernel.gb().len());
        let g = (a as i64).gcd(&(b as i64)).gcd(&(c as i64));
        let v = smallest_valuation_vector(&relations, 3).unwrap();
        prop_assert_eq!(v, vec![a as i64 / g, b as i64 / g, c as i64 / g]);
    }
}
