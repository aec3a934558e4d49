mod common;

use common::*;
use idealkit::ideal::{kernel_of_map, rees_ideal};
use idealkit::{Colength, Field, Ideal, MonomialOrder, Polynomial, Ring};
use proptest::prelude::*;

fn ideal_of(raws: &[RawPoly]) -> Ideal {
    let r = ring(Field::Rational, 3);
    Ideal::new(&r, build_all(&r, raws)).unwrap()
}

fn monomial_ideal(gens: &[Vec<u32>]) -> Ideal {
    let r = ring(Field::Rational, 3);
    Ideal::new(&r, gens.iter().map(|e| monomial_poly(&r, e)).collect()).unwrap()
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Monomials with every exponent below `bound`.
fn box_monomials(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..bound).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Brute-force Krull dimension of `k[x]/M` for a monomial ideal `M`: the
/// largest set of variables containing no generator's support.
fn monomial_dim(n: usize, gens: &[Vec<u32>]) -> i64 {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return -1;
    }
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let inside = |g: &Vec<u32>| g.iter().enumerate().all(|(v, &e)| e == 0 || mask & (1 << v) != 0);
        if !gens.iter().any(inside) {
            best = best.max(mask.count_ones() as i64);
        }
    }
    best
}

proptest! {
    #![proptest_config(config(0x5eed_0003))]

    #[test]
    fn intersection_contract(a in raw_ideal(3, 2, 2, 2), b in raw_ideal(3, 2, 2, 2)) {
        let (i, j) = (ideal_of(&a), ideal_of(&b));
        let meet = i.intersect(&j).unwrap();
        prop_assert!(i.contains_ideal(&meet).unwrap());
        prop_assert!(j.contains_ideal(&meet).unwrap());
        prop_assert!(meet.contains_ideal(&i.product(&j).unwrap()).unwrap());
    }

    #[test]
    fn colon_contract(a in raw_ideal(3, 2, 2, 2), f in raw_nonzero(3, 2, 2)) {
        let i = ideal_of(&a);
        let f = build(i.ring(), &f);
        let c = i.colon(&f).unwrap();
        prop_assert!(c.contains_ideal(&i).unwrap());
        for g in c.gb().basis() {
            prop_assert!(i.contains(&(g * &f)).unwrap());
        }
        prop_assert_eq!(c.is_unit(), i.contains(&f).unwrap());
    }

    #[test]
    fn monomial_membership_and_colon(gens in monomial_gens(3, 3, 4), m in exps(3, 4)) {
        let i = monomial_ideal(&gens);
        let r = i.ring().clone();
        let mp = monomial_poly(&r, &m);
        prop_assert_eq!(i.contains(&mp).unwrap(), gens.iter().any(|g| divides(g, &m)));
        let expected: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| g.iter().zip(&m).map(|(a, b)| a.saturating_sub(*b)).collect())
            .collect();
        prop_assert!(i.colon(&mp).unwrap().equals(&monomial_ideal(&expected)).unwrap());
    }

    #[test]
    fn monomial_intersection_is_lcms(a in monomial_gens(3, 3, 3), b in monomial_gens(3, 3, 3)) {
        let lcms: Vec<Vec<u32>> = a.iter().flat_map(|x| b.iter().map(move |y| lcm(x, y))).collect();
        let meet = monomial_ideal(&a).intersect(&monomial_ideal(&b)).unwrap();
        prop_assert!(meet.equals(&monomial_ideal(&lcms)).unwrap());
    }

    #[test]
    fn monomial_colength_and_dim(gens in monomial_gens(3, 3, 4), powers in exps(3, 3)) {
        let dim_gens = gens.clone();
        prop_assert_eq!(monomial_ideal(&dim_gens).krull_dim_quotient(), monomial_dim(3, &dim_gens));

        // add pure powers so the quotient is finite
        let mut gens = gens;
        for (v, &p) in powers.iter().enumerate() {
            let mut e = vec![0; 3];
            e[v] = p + 1;
            gens.push(e);
        }
        let bound = powers.iter().max().unwrap() + 1;
        let count = box_monomials(3, bound)
            .into_iter()
            .filter(|m| !gens.iter().any(|g| divides(g, m)))
            .count();
        prop_assert_eq!(monomial_ideal(&gens).colength(), Colength::Finite(count));
        prop_assert_eq!(monomial_ideal(&gens).krull_dim_quotient(), monomial_dim(3, &gens));
    }

    #[test]
    fn local_membership_ignores_units(a in prop::collection::vec(raw_poly_in_m(3, 2, 2), 1..=2), f in raw_poly_in_m(3, 2, 2), u in raw_poly_in_m(3, 1, 2)) {
        let i = ideal_of(&a);
        let r = i.ring().clone();
        let f = build(&r, &f);
        let unit = &Polynomial::one(&r) + &build(&r, &u);
        let base = i.locally_contains_at_origin(&f).unwrap().verdict;
        prop_assert_eq!(i.locally_contains_at_origin(&(&f * &unit)).unwrap().verdict, base);
        let scaled = Ideal::new(&r, i.gens().iter().map(|g| g * &unit).collect()).unwrap();
        prop_assert_eq!(scaled.locally_contains_at_origin(&f).unwrap().verdict, base);
        // global membership implies local membership
        if i.contains(&f).unwrap() {
            prop_assert!(base);
        }
    }

    #[test]
    fn elimination_is_sound(a in raw_ideal(3, 2, 2, 2)) {
        let i = ideal_of(&a);
        let e = i.eliminate(&[0]).unwrap();
        for g in e.gb().basis() {
            prop_assert!(!g.mentions_var(0));
            prop_assert!(i.contains(g).unwrap());
        }
    }

    #[test]
    fn kernel_vanishes_on_images(images in prop::collection::vec(raw_poly_in_m(1, 3, 2), 2..=3)) {
        let params = Ring::rational(&["s"]);
        let images = build_all(&params, &images);
        let target = Ring::rational(&["x", "y", "z"][..images.len()]);
        let k = kernel_of_map(&target, &images).unwrap();
        for g in k.gb().basis() {
            prop_assert!(g.substitute(&images).unwrap().is_zero());
        }
    }

    #[test]
    fn rees_relations_vanish(a in prop::collection::vec(raw_poly_in_m(2, 2, 2), 1..=2)) {
        let r = ring(Field::Rational, 2);
        let i = Ideal::new(&r, build_all(&r, &a)).unwrap();
        let rees = rees_ideal(&i).unwrap();
        let mut images = r.variables();
        images.extend(i.gens().iter().cloned());
        for g in rees.ideal.gb().basis() {
            prop_assert!(g.substitute(&images).unwrap().is_zero());
        }
    }

    #[test]
    fn lex_elimination_agrees_with_block(a in raw_ideal(3, 2, 2, 2)) {
        let i = ideal_of(&a);
        let lex = i.gb_with(&MonomialOrder::Lex);
        let e = i.eliminate(&[0]).unwrap();
        let lex_part: Vec<Polynomial> = lex.basis().iter().filter(|g| !g.mentions_var(0)).cloned().collect();
        let lex_ideal = Ideal::new(i.ring(), lex_part).unwrap();
        prop_assert!(lex_ideal.equals(&e).unwrap());
    }
}

#[test]
fn box_enumeration_size() {
    assert_eq!(box_monomials(3, 2).len(), 8);
}
