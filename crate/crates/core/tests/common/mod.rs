#![allow(dead_code)]

use idealkit::{Field, Monomial, Polynomial, Ring, RingRef};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

/// Integer-coefficient polynomial data, buildable over any field.
pub type RawPoly = Vec<(i64, Vec<u32>)>;

pub fn config(seed: u64) -> Config {
    Config {
        cases: 256,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn ring(field: Field, n: usize) -> RingRef {
    const NAMES: [&str; 4] = ["x", "y", "z", "w"];
    Ring::new(field, &NAMES[..n])
}

pub fn build(ring: &RingRef, raw: &RawPoly) -> Polynomial {
    let data: Vec<(i64, &[u32])> = raw.iter().map(|(c, e)| (*c, e.as_slice())).collect();
    Polynomial::from_int_terms(ring, &data)
}

pub fn build_all(ring: &RingRef, raws: &[RawPoly]) -> Vec<Polynomial> {
    raws.iter().map(|r| build(ring, r)).collect()
}

pub fn raw_poly(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((-4i64..=4, prop::collection::vec(0..=max_exp, n)), 1..=max_terms)
}

/// Nonzero polynomials with zero constant term.
pub fn raw_poly_in_m(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    raw_poly(n, max_exp, max_terms).prop_filter("nonzero, no constant term", move |r| {
        let p = build(&ring(Field::Rational, n), r);
        !p.is_zero() && p.in_origin_ideal()
    })
}

pub fn raw_nonzero(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    raw_poly(n, max_exp, max_terms).prop_filter("nonzero", move |r| !build(&ring(Field::Rational, n), r).is_zero())
}

pub fn raw_ideal(n: usize, max_exp: u32, max_terms: usize, max_gens: usize) -> impl Strategy<Value = Vec<RawPoly>> {
    prop::collection::vec(raw_nonzero(n, max_exp, max_terms), 1..=max_gens)
}

pub fn exps(n: usize, max_exp: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_exp, n)
}

pub fn monomial_gens(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(exps(n, max_exp), 1..=max_gens)
}

pub fn monomial_poly(ring: &RingRef, e: &[u32]) -> Polynomial {
    Polynomial::monomial(ring, Monomial::new(e.iter().copied()), ring.field().one())
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}
