mod common;

use common::*;
use idealkit::{buchberger, divide, groebner::divide_with, normal_form, Field, MonomialOrder, Polynomial};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 4] = [3, 5, 7, 101];

fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lf.lcm(lg);
    let a = f.mul_monomial(&l.div(lf).unwrap()).scale(&f.leading_coeff().unwrap().inv());
    let b = g.mul_monomial(&l.div(lg).unwrap()).scale(&g.leading_coeff().unwrap().inv());
    &a - &b
}

/// Buchberger's criterion checked from scratch: every S-polynomial reduces to zero.
fn is_groebner(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !normal_form(&s_poly(&basis[i], &basis[j]), basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

fn scaled_shuffle(gens: &[Polynomial], seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Polynomial> = gens
        .iter()
        .map(|g| {
            // units in every field used here, F_3 included
            let c = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
            g.scale(&g.ring().field().from_i64(c))
        })
        .collect();
    if gens.len() > 1 {
        // a redundant generator
        out.push(&gens[0] + &(&gens[1] * &gens[0].ring().variable(0)));
    }
    for i in (1..out.len()).rev() {
        out.swap(i, rng.gen_range(0..=i));
    }
    out
}

proptest! {
    #![proptest_config(config(0x5eed_0002))]

    #[test]
    fn reduced_basis_is_unique(gens in raw_ideal(3, 2, 3, 3), seed in any::<u64>()) {
        let r = ring(Field::Rational, 3);
        let gens = build_all(&r, &gens);
        let order = MonomialOrder::DegRevLex;
        let a = buchberger(&gens, &order);
        let b = buchberger(&scaled_shuffle(&gens, seed), &order);
        prop_assert_eq!(a.basis(), b.basis());
        prop_assert!(a.is_reduced());
    }

    #[test]
    fn basis_satisfies_buchberger_criterion(gens in raw_ideal(3, 2, 3, 3)) {
        let r = ring(Field::Rational, 3);
        let gens = build_all(&r, &gens);
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let gb = buchberger(&gens, &order);
            prop_assert!(is_groebner(gb.basis(), &order));
            for g in &gens {
                prop_assert!(gb.contains(g));
            }
        }
    }

    #[test]
    fn orders_generate_the_same_ideal(gens in raw_ideal(3, 2, 3, 3)) {
        let r = ring(Field::Rational, 3);
        let gens = build_all(&r, &gens);
        let drl = buchberger(&gens, &MonomialOrder::DegRevLex);
        let lex = buchberger(&gens, &MonomialOrder::Lex);
        for g in lex.basis() {
            prop_assert!(drl.contains(g));
        }
        for g in drl.basis() {
            prop_assert!(lex.contains(g));
        }
    }

    #[test]
    fn division_reconstructs_dividend(gens in raw_ideal(3, 2, 3, 3), f in raw_poly(3, 3, 5)) {
        let r = ring(Field::Rational, 3);
        let gens = build_all(&r, &gens);
        let f = build(&r, &f);
        let order = MonomialOrder::DegRevLex;
        let gb = buchberger(&gens, &order);
        let d = divide(&f, gb.basis(), &order);
        prop_assert_eq!(d.reconstruct(gb.basis()), f.clone());
        prop_assert_eq!(d.remainder.is_zero(), gb.contains(&f));
        // no term of the remainder is divisible by a leading monomial
        let leads = gb.leading_monomials();
        for t in d.remainder.terms() {
            prop_assert!(leads.iter().all(|l| !l.divides(&t.mon)));
        }
    }

    #[test]
    fn combinations_are_members(gens in raw_ideal(3, 2, 3, 3), cofactors in prop::collection::vec(raw_poly(3, 2, 3), 3)) {
        let r = ring(Field::Rational, 3);
        let gens = build_all(&r, &gens);
        let mut f = Polynomial::zero(&r);
        for (g, c) in gens.iter().zip(&cofactors) {
            f = &f + &(g * &build(&r, c));
        }
        let gb = buchberger(&gens, &MonomialOrder::DegRevLex);
        prop_assert!(gb.contains(&f));
    }

    #[test]
    fn reduction_is_confluent_over_a_basis(gens in raw_ideal(3, 2, 3, 3), f in raw_poly(3, 3, 5), seed in any::<u64>()) {
        let r = ring(Field::Rational, 3);
        let gens = build_all(&r, &gens);
        let f = build(&r, &f);
        let order = MonomialOrder::DegRevLex;
        let gb = buchberger(&gens, &order);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = divide_with(&f, gb.basis(), &order, |c| c[rng.gen_range(0..c.len())]);
        prop_assert_eq!(&d.remainder, &gb.normal_form(&f));
        prop_assert_eq!(d.reconstruct(gb.basis()), f);
    }

    #[test]
    fn monomial_ideal_basis_is_minimal_generators(gens in monomial_gens(3, 3, 5)) {
        let r = ring(Field::Rational, 3);
        let polys: Vec<Polynomial> = gens.iter().map(|e| monomial_poly(&r, e)).collect();
        let gb = buchberger(&polys, &MonomialOrder::DegRevLex);
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        for (i, e) in gens.iter().enumerate() {
            let redundant = gens.iter().enumerate().any(|(j, o)| {
                j != i && divides(o, e) && (o != e || j < i)
            });
            if !redundant {
                minimal.push(e.clone());
            }
        }
        let mut got: Vec<Vec<u32>> = gb.basis().iter().map(|p| p.leading_monomial().unwrap().exponents().to_vec()).collect();
        got.sort();
        minimal.sort();
        prop_assert_eq!(got, minimal);
    }

    #[test]
    fn prime_fields_basis_unique_and_sound(gens in raw_ideal(3, 2, 3, 3), seed in any::<u64>(), cof in raw_poly(3, 1, 2)) {
        for p in PRIMES {
            let r = ring(Field::prime(p).unwrap(), 3);
            let gens = build_all(&r, &gens);
            if gens.iter().all(Polynomial::is_zero) {
                continue;
            }
            let order = MonomialOrder::DegRevLex;
            let a = buchberger(&gens, &order);
            let b = buchberger(&scaled_shuffle(&gens, seed), &order);
            prop_assert_eq!(a.basis(), b.basis());
            prop_assert!(is_groebner(a.basis(), &order));
            let f = &gens[0] * &build(&r, &cof);
            prop_assert!(a.contains(&f));
        }
    }
}
