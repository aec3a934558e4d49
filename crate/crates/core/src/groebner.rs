//! Multivariate division and Buchberger's algorithm.
//!
//! Pairs are processed by the sugar strategy (smallest sugar degree, ties
//! broken by the smaller lcm under the active order). New basis elements go
//! through the Gebauer–Möller update, which applies Buchberger's product and
//! chain criteria. The result is always the reduced basis: minimal leading
//! monomials, monic elements, fully reduced tails, sorted by ascending leading
//! monomial.

use std::cmp::Ordering;

use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Polynomial, Term};
use crate::ring::RingRef;

/// A reduced Gröbner basis together with the ring (and order) it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    basis: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps a list already known to be a reduced basis (sorted, monic).
    pub(crate) fn from_reduced(ring: &RingRef, basis: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            basis,
            reduced: true,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Polynomial> {
        self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    /// True iff the ideal is zero.
    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero").clone())
            .collect()
    }

    /// Remainder of `f` on division by the basis, in this basis' ring.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let f = f.to_ring(&self.ring).expect("polynomial from a different ring");
        reduce(&f, &self.basis, &mut |c| c[0], None)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Quotients and remainder of a division `f = sum q_i g_i + r`.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl Division {
    /// Recomputes `sum q_i g_i + r`, which must equal the dividend.
    pub fn reconstruct(&self, divisors: &[Polynomial]) -> Polynomial {
        let ring = self.remainder.ring().clone();
        let mut acc = self.remainder.clone();
        for (q, g) in self.quotients.iter().zip(divisors) {
            let g = g.to_ring(&ring).expect("divisor ring");
            acc = &acc + &(q * &g);
        }
        acc
    }
}

fn ring_for(f: &Polynomial, order: &MonomialOrder) -> RingRef {
    if f.ring().order() == order {
        f.ring().clone()
    } else {
        f.ring().with_order(order.clone())
    }
}

fn convert_all(ring: &RingRef, polys: &[Polynomial]) -> Vec<Polynomial> {
    polys
        .iter()
        .map(|g| g.to_ring(ring).expect("all polynomials must share a ring"))
        .collect()
}

/// Remainder of `f` modulo the list `g` under `order`. Reducers are tried in
/// list order; the lowest index whose leading monomial divides wins.
pub fn normal_form(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let ring = ring_for(f, order);
    let f = f.to_ring(&ring).expect("same ring");
    let g = convert_all(&ring, g);
    reduce(&f, &g, &mut |c| c[0], None)
}

/// Division with recorded quotients (lowest-index reducer first).
pub fn divide(f: &Polynomial, g: &[Polynomial], order: &MonomialOrder) -> Division {
    divide_with(f, g, order, |candidates| candidates[0])
}

/// Division where `choose` picks the reducer among all eligible indices
/// (given in increasing order). Used to check confluence over a Gröbner basis.
pub fn divide_with(
    f: &Polynomial,
    g: &[Polynomial],
    order: &MonomialOrder,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Division {
    let ring = ring_for(f, order);
    let f = f.to_ring(&ring).expect("same ring");
    let g = convert_all(&ring, g);
    let mut quotients: Vec<Vec<(Monomial, crate::coeff::Coefficient)>> = vec![Vec::new(); g.len()];
    let remainder = reduce(&f, &g, &mut choose, Some(&mut quotients));
    Division {
        quotients: quotients
            .into_iter()
            .map(|q| Polynomial::from_terms(&ring, q))
            .collect(),
        remainder,
    }
}

type QuotientLog<'a> = Option<&'a mut Vec<Vec<(Monomial, crate::coeff::Coefficient)>>>;

fn reduce<P: std::borrow::Borrow<Polynomial>>(
    f: &Polynomial,
    g: &[P],
    choose: &mut dyn FnMut(&[usize]) -> usize,
    mut log: QuotientLog<'_>,
) -> Polynomial {
    let ring = f.ring().clone();
    let leads: Vec<Option<&Term>> = g.iter().map(|p| p.borrow().leading_term()).collect();
    let lead_invs: Vec<Option<crate::coeff::Coefficient>> =
        leads.iter().map(|t| t.map(|t| t.coeff.inv())).collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(&ring);
    let mut candidates = Vec::with_capacity(g.len());
    while let Some(lt) = p.leading_term() {
        candidates.clear();
        for (i, l) in leads.iter().enumerate() {
            if let Some(l) = l {
                if l.mon.divides(&lt.mon) {
                    candidates.push(i);
                }
            }
        }
        if candidates.is_empty() {
            let t = p.pop_leading().expect("nonzero");
            rem.push_trailing(t);
            continue;
        }
        let i = choose(&candidates);
        let l = leads[i].expect("candidate has a leading term");
        let m = lt.mon.div(&l.mon).expect("divisible");
        let c = lt.coeff.mul(lead_invs[i].as_ref().expect("inverse"));
        p.add_scaled_shifted(&c.neg(), &m, g[i].borrow());
        if let Some(q) = log.as_deref_mut() {
            q[i].push((m, c));
        }
    }
    rem
}

struct Entry {
    poly: Polynomial,
    lm: Monomial,
    sugar: u32,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens` under
/// `order`. Zero generators are ignored; an empty or all-zero list yields the
/// zero ideal (the ring is taken from the first generator).
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> GroebnerBasis {
    let first = gens.first().expect("at least one generator is needed to fix the ring");
    buchberger_in(first.ring(), gens, order)
}

/// As [`buchberger`], with the ring given explicitly so that an empty
/// generator list is allowed.
pub fn buchberger_in(ring: &RingRef, gens: &[Polynomial], order: &MonomialOrder) -> GroebnerBasis {
    let ring = if ring.order() == order {
        ring.clone()
    } else {
        ring.with_order(order.clone())
    };
    let gens = convert_all(&ring, gens);
    if !order.is_graded() && !gens.iter().all(Polynomial::is_homogeneous) {
        return via_homogenization(&ring, &gens);
    }

    let mut entries: Vec<Entry> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let unit = |ring: &RingRef| GroebnerBasis {
        ring: ring.clone(),
        basis: vec![Polynomial::one(ring)],
        reduced: true,
    };

    // Inputs in ascending order of leading monomial tend to give fewer reductions.
    let mut inputs: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    inputs.sort_by(|a, b| {
        ring.order()
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });

    for g in inputs {
        let sugar = g.degree().unwrap_or(0);
        let h = reduce_by_active(&g, &entries, &active);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit(&ring);
        }
        insert(&mut entries, &mut active, &mut pairs, h.monic(), sugar);
    }

    while let Some(k) = select_pair(&pairs, ring.order()) {
        let pair = pairs.swap_remove(k);
        let s = s_polynomial(&entries[pair.i], &entries[pair.j], &pair.lcm);
        let h = reduce_by_active(&s, &entries, &active);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return unit(&ring);
        }
        insert(&mut entries, &mut active, &mut pairs, h.monic(), pair.sugar);
    }

    let basis = interreduce(&ring, active.iter().map(|&i| entries[i].poly.clone()).collect());
    GroebnerBasis {
        ring,
        basis,
        reduced: true,
    }
}

/// Computes the basis of the homogenized ideal under a degree-first order
/// that breaks ties by the target order, then dehomogenizes. This bounds the
/// degree of every reduction chain, which plain Buchberger under lex does not.
fn via_homogenization(ring: &RingRef, gens: &[Polynomial]) -> GroebnerBasis {
    let n = ring.nvars();
    let mut names = ring.vars().to_vec();
    let mut h = String::from("h");
    while names.contains(&h) {
        h.push('_');
    }
    names.push(h);
    let order = MonomialOrder::Homogenized {
        inner: Box::new(ring.order().clone()),
    };
    let hring = crate::ring::Ring::with_order_new(ring.field(), &names, order.clone());
    let hgens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.homogenize(&hring)).collect();
    let hbasis = buchberger_in(&hring, &hgens, &order);
    let positions: Vec<usize> = (0..n).collect();
    let basis: Vec<Polynomial> = hbasis
        .basis()
        .iter()
        .map(|g| {
            Polynomial::from_terms(ring, g.terms().iter().map(|t| (t.mon.project(&positions), t.coeff.clone())))
        })
        .collect();
    if basis.iter().any(Polynomial::is_constant) {
        return GroebnerBasis {
            ring: ring.clone(),
            basis: vec![Polynomial::one(ring)],
            reduced: true,
        };
    }
    GroebnerBasis {
        ring: ring.clone(),
        basis: interreduce(ring, basis),
        reduced: true,
    }
}

/// Top-reduction only: tails are left alone until the final interreduction,
/// which keeps intermediate polynomials small under elimination orders.
fn reduce_by_active(f: &Polynomial, entries: &[Entry], active: &[usize]) -> Polynomial {
    let order = f.ring().order().clone();
    let mut p = f.clone();
    while let Some(lt) = p.leading_term() {
        let best = active
            .iter()
            .map(|&i| &entries[i])
            .filter(|e| e.lm.divides(&lt.mon))
            .min_by(|a, b| order.cmp(&a.lm, &b.lm).then(a.poly.len().cmp(&b.poly.len())));
        let Some(e) = best else { break };
        let m = lt.mon.div(&e.lm).expect("divisible");
        let c = lt.coeff.neg();
        p.add_scaled_shifted(&c, &m, &e.poly);
    }
    p
}

fn s_polynomial(a: &Entry, b: &Entry, lcm: &Monomial) -> Polynomial {
    // both monic
    let ma = lcm.div(&a.lm).expect("lcm divisible");
    let mb = lcm.div(&b.lm).expect("lcm divisible");
    let mut s = a.poly.mul_monomial(&ma);
    let one = s.ring().field().one();
    s.add_scaled_shifted(&one.neg(), &mb, &b.poly);
    s
}

fn select_pair(pairs: &[Pair], order: &MonomialOrder) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            a.sugar
                .cmp(&b.sugar)
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
        })
        .map(|(k, _)| k)
}

/// Gebauer–Möller update for a new element.
fn insert(
    entries: &mut Vec<Entry>,
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    poly: Polynomial,
    sugar: u32,
) {
    let lm = poly.leading_monomial().expect("nonzero").clone();
    let h = entries.len();
    entries.push(Entry { poly, lm: lm.clone(), sugar });

    let mut cands: Vec<(usize, Monomial)> = active
        .iter()
        .map(|&g| (g, entries[g].lm.lcm(&lm)))
        .collect();
    // Chain criterion among the new pairs.
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    while let Some((g1, l1)) = cands.pop() {
        let coprime = entries[g1].lm.is_coprime(&lm);
        let dominated = cands.iter().any(|(_, l2)| l2.divides(&l1))
            || kept.iter().any(|(_, l2)| l2.divides(&l1));
        if coprime || !dominated {
            kept.push((g1, l1));
        }
    }
    // Product criterion.
    kept.retain(|(g, _)| !entries[*g].lm.is_coprime(&lm));

    // Old pairs made redundant by the new leading monomial.
    pairs.retain(|p| {
        !(lm.divides(&p.lcm)
            && entries[p.i].lm.lcm(&lm) != p.lcm
            && entries[p.j].lm.lcm(&lm) != p.lcm)
    });

    for (g, lcm) in kept {
        let eg = &entries[g];
        let eh = &entries[h];
        let deg = lcm.degree();
        let sugar = (eg.sugar + deg - eg.lm.degree()).max(eh.sugar + deg - eh.lm.degree());
        pairs.push(Pair {
            i: g,
            j: h,
            lcm,
            sugar,
        });
    }

    active.retain(|&g| !lm.divides(&entries[g].lm));
    active.push(h);
}

/// Turns a minimal basis into the reduced one.
fn interreduce(ring: &RingRef, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j && keep[j] {
                let li = basis[i].leading_monomial().unwrap();
                let lj = basis[j].leading_monomial().unwrap();
                if lj.divides(li) && (li != lj || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let mut it = keep.iter();
    basis.retain(|_| *it.next().unwrap());

    let mut out = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let others: Vec<&Polynomial> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p)
            .collect();
        let mut g = basis[i].clone();
        let lead = g.pop_leading().expect("nonzero");
        let tail = reduce(&g, &others, &mut |c| c[0], None);
        let mut reduced = Polynomial::zero(ring);
        reduced.push_trailing(lead);
        let reduced = &reduced + &tail;
        out.push(reduced.monic());
    }
    out.sort_by(|a, b| {
        ring.order()
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    out
}

/// Sorts polynomials by ascending leading monomial (zero first).
pub fn sort_by_leading(polys: &mut [Polynomial]) {
    polys.sort_by(|a, b| match (a.leading_monomial(), b.leading_monomial()) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) => a.ring().order().cmp(x, y),
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn multiple_of_generator_reduces_to_zero() {
        let r = Ring::rational(&["x", "y"]);
        let g = r.parse_all(&["x^2", "y^2"]).unwrap();
        let f = r.parse("x^2*y").unwrap();
        assert!(normal_form(&f, &g, &MonomialOrder::DegRevLex).is_zero());
    }

    #[test]
    fn xy_is_not_in_squares() {
        let r = Ring::rational(&["x", "y"]);
        let gb = buchberger(&r.parse_all(&["x^2", "y^2"]).unwrap(), &MonomialOrder::DegRevLex);
        let f = r.parse("x*y").unwrap();
        assert_eq!(gb.normal_form(&f), f);
    }

    #[test]
    fn single_division_step() {
        let r = Ring::with_order_new(crate::coeff::Field::Rational, &["x", "y"], MonomialOrder::Lex);
        let g = r.parse_all(&["x^2 - y"]).unwrap();
        let f = r.parse("x^3").unwrap();
        let d = divide(&f, &g, &MonomialOrder::Lex);
        assert_eq!(d.remainder, r.parse("x*y").unwrap());
        assert_eq!(d.quotients[0], r.parse("x").unwrap());
        assert_eq!(d.reconstruct(&g), f);
    }

    #[test]
    fn one_s_pair_by_hand() {
        let r = Ring::rational(&["x", "y"]);
        let gb = buchberger(&r.parse_all(&["x^2 + y", "y"]).unwrap(), &MonomialOrder::Lex);
        assert_eq!(gb.basis(), &r.parse_all(&["y", "x^2"]).unwrap()[..]);
    }

    #[test]
    fn lex_with_long_reduction_chains() {
        let r = Ring::rational(&["x", "y", "z"]);
        let gens = r
            .parse_all(&[
                "-2*x^2*y^2*z^2 + 4*x*z",
                "-2*x^2*y*z^2 + 3*x*y^2*z + z",
                "3*x^2*y*z + 3*x*y^2*z + 2*y",
            ])
            .unwrap();
        let gb = buchberger(&gens, &MonomialOrder::Lex);
        let lex = r.with_order(MonomialOrder::Lex);
        let expected = lex
            .parse_all(&[
                "z^5 + 32912/3375*z^4 + 648/25*z^3 + 3456/125*z^2 + 1296/125*z",
                "y + 1375/1728*z^4 + 170891/23328*z^3 + 31867/1944*z^2 + 43/4*z",
                "x*z + 625/576*z^4 + 154435/15552*z^3 + 14111/648*z^2 + 225/16*z",
            ])
            .unwrap();
        assert_eq!(gb.basis(), &expected[..]);
    }

    #[test]
    fn twisted_cubic_elimination() {
        // t > x > y lex: the t-free part is the cusp y^2 - x^3
        let r = Ring::rational(&["t", "x", "y"]);
        let gb = buchberger(&r.parse_all(&["x - t^2", "y - t^3"]).unwrap(), &MonomialOrder::Lex);
        let free: Vec<_> = gb.basis().iter().filter(|g| !g.mentions_var(0)).collect();
        assert_eq!(free.len(), 1);
        assert_eq!(*free[0], r.parse("x^3 - y^2").unwrap());
    }

    #[test]
    fn monomial_ideal_is_minimalized() {
        let r = Ring::rational(&["x", "y", "z"]);
        let gb = buchberger(
            &r.parse_all(&["x^2*y", "x*y", "y^3*z", "z^2", "0"]).unwrap(),
            &MonomialOrder::DegRevLex,
        );
        assert_eq!(gb.basis(), &r.parse_all(&["z^2", "x*y", "y^3*z"]).unwrap()[..]);
    }

    #[test]
    fn unit_ideal_detected() {
        let r = Ring::rational(&["x", "y"]);
        let gb = buchberger(&r.parse_all(&["x*y - 1", "x"]).unwrap(), &MonomialOrder::DegRevLex);
        assert!(gb.is_unit());
        assert_eq!(gb.basis()[0], Polynomial::one(&r));
    }

    #[test]
    fn zero_ideal() {
        let r = Ring::rational(&["x"]);
        let gb = buchberger(&[Polynomial::zero(&r)], &MonomialOrder::DegRevLex);
        assert!(gb.is_zero_ideal());
        assert_eq!(gb.normal_form(&r.parse("x").unwrap()), r.parse("x").unwrap());
    }
}
