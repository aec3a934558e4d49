//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{check_same_space, RingRef};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub mon: Monomial,
    pub coeff: Coefficient,
}

/// A polynomial in a fixed ring.
///
/// Terms are sorted strictly descending under the ring's order and carry
/// nonzero coefficients, so two polynomials with the same ring are equal iff
/// their term vectors are equal.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &RingRef, c: Coefficient) -> Self {
        Polynomial::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &RingRef, c: i64) -> Self {
        Polynomial::constant(ring, ring.field().from_i64(c))
    }

    pub fn monomial(ring: &RingRef, mon: Monomial, coeff: Coefficient) -> Self {
        assert_eq!(mon.nvars(), ring.nvars(), "monomial arity does not match ring");
        assert!(ring.field().contains(&coeff), "coefficient outside ring field");
        let terms = if coeff.is_zero() {
            Vec::new()
        } else {
            vec![Term { mon, coeff }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, Coefficient)>) -> Self {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(mon, coeff)| {
                assert_eq!(mon.nvars(), ring.nvars(), "monomial arity does not match ring");
                Term { mon, coeff }
            })
            .collect();
        let order = ring.order();
        raw.sort_by(|a, b| order.cmp(&b.mon, &a.mon));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mon == t.mon => {
                    last.coeff = last.coeff.add(&t.coeff);
                }
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds from integer-coefficient exponent data, e.g. `[(1, [2, 0]), (-1, [0, 1])]`.
    pub fn from_int_terms(ring: &RingRef, data: &[(i64, &[u32])]) -> Self {
        let field = ring.field();
        Polynomial::from_terms(
            ring,
            data.iter()
                .map(|(c, e)| (Monomial::new(e.iter().copied()), field.from_i64(*c))),
        )
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|t| t.mon.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mon.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mon)
    }

    pub fn leading_coeff(&self) -> Option<&Coefficient> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Coefficient of the monomial `1`.
    pub fn constant_term(&self) -> Coefficient {
        self.terms
            .iter()
            .rev()
            .find(|t| t.mon.is_one())
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// True iff the polynomial vanishes at the origin.
    pub fn in_origin_ideal(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// True when all terms share one total degree (the zero polynomial included).
    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].mon.degree() == w[1].mon.degree())
    }

    /// Homogenizes into `ring`, whose last variable is the homogenizing one.
    pub fn homogenize(&self, ring: &RingRef) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars() + 1, "ring needs one extra variable");
        let d = self.degree().unwrap_or(0);
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|t| {
                let e = t.mon.exponents().iter().copied().chain([d - t.mon.degree()]);
                (Monomial::new(e), t.coeff.clone())
            }),
        )
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.degree()).max()
    }

    pub fn coefficient_of(&self, mon: &Monomial) -> Coefficient {
        self.terms
            .iter()
            .find(|t| &t.mon == mon)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn mentions_var(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mon.exponents()[var] > 0)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &small.terms {
            acc.add_scaled_shifted(&t.coeff, &t.mon, large);
        }
        Ok(acc)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mon, &b[j].mon) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].coeff.neg() } else { b[j].coeff.clone() };
                    out.push(Term { mon: b[j].mon.clone(), coeff: c });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].coeff.sub(&b[j].coeff)
                    } else {
                        a[i].coeff.add(&b[j].coeff)
                    };
                    if !c.is_zero() {
                        out.push(Term { mon: a[i].mon.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            mon: t.mon.clone(),
            coeff: if negate { t.coeff.neg() } else { t.coeff.clone() },
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `self += c * m * g`, in place. `g` must share this ring.
    pub fn add_scaled_shifted(&mut self, c: &Coefficient, m: &Monomial, g: &Polynomial) {
        debug_assert!(*self.ring == *g.ring);
        if c.is_zero() || g.is_zero() {
            return;
        }
        let order = self.ring.order();
        let a = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(a.len() + g.len());
        let mut ai = a.into_iter().peekable();
        for t in &g.terms {
            let mon = t.mon.mul(m);
            let coeff = t.coeff.mul(c);
            loop {
                match ai.peek() {
                    Some(x) => match order.cmp(&x.mon, &mon) {
                        Ordering::Greater => out.push(ai.next().unwrap()),
                        Ordering::Equal => {
                            let x = ai.next().unwrap();
                            let s = x.coeff.add(&coeff);
                            if !s.is_zero() {
                                out.push(Term { mon, coeff: s });
                            }
                            break;
                        }
                        Ordering::Less => {
                            out.push(Term { mon, coeff });
                            break;
                        }
                    },
                    None => {
                        out.push(Term { mon, coeff });
                        break;
                    }
                }
            }
        }
        out.extend(ai);
        self.terms = out;
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.clone(),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.mul(m),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Sign-normalized representative: leading coefficient positive (rationals only).
    pub fn sign_normalized(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Re-sorts into a ring with the same variables and field but possibly another order.
    pub fn to_ring(&self, ring: &RingRef) -> Result<Polynomial> {
        check_same_space(&self.ring, ring)?;
        if self.ring.order() == ring.order() {
            return Ok(Polynomial {
                ring: ring.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut terms = self.terms.clone();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mon, &a.mon));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Moves variable `i` to position `positions[i]` of `ring`.
    pub fn embed(&self, ring: &RingRef, positions: &[usize]) -> Polynomial {
        assert_eq!(positions.len(), self.ring.nvars());
        assert_eq!(ring.field(), self.ring.field());
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .map(|t| (t.mon.embed(ring.nvars(), positions), t.coeff.clone())),
        )
    }

    /// Inverse of [`embed`](Self::embed): `None` if a dropped variable occurs.
    pub fn project(&self, ring: &RingRef, positions: &[usize]) -> Option<Polynomial> {
        assert_eq!(positions.len(), ring.nvars());
        let dropped_occurs = self.terms.iter().any(|t| {
            t.mon
                .support()
                .any(|v| !positions.contains(&v))
        });
        if dropped_occurs {
            return None;
        }
        Some(Polynomial::from_terms(
            ring,
            self.terms.iter().map(|t| (t.mon.project(positions), t.coeff.clone())),
        ))
    }

    /// Substitutes `images[i]` for variable `i`. All images must share one ring,
    /// which becomes the ring of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .expect("substitution into a ring without variables");
        for im in images {
            if *im.ring != *target {
                return Err(Error::RingMismatch {
                    left: target.to_string(),
                    right: im.ring.to_string(),
                });
            }
        }
        let nv = images.len();
        let max_exp: Vec<u32> = (0..nv)
            .map(|i| self.terms.iter().map(|t| t.mon.exponents()[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Polynomial>> = images
            .iter()
            .zip(&max_exp)
            .map(|(im, &e)| {
                let mut v = vec![Polynomial::one(&target)];
                for k in 1..=e as usize {
                    let next = &v[k - 1] * im;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, t.coeff.clone());
            for (i, &e) in t.mon.exponents().iter().enumerate() {
                if e > 0 {
                    prod = &prod * &powers[i][e as usize];
                }
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }

    /// Maps coefficients into another field over the same variables (e.g. `Q -> F_p`).
    pub fn change_field(&self, ring: &RingRef) -> Result<Polynomial> {
        assert_eq!(ring.vars(), self.ring.vars());
        let field = ring.field();
        let mut terms = Vec::with_capacity(self.len());
        for t in &self.terms {
            let c = match &t.coeff {
                Coefficient::Rational(r) => field.from_rational(r)?,
                Coefficient::Modular { value, .. } => field.from_i64(*value as i64),
            };
            terms.push((t.mon.clone(), c));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Exact quotient `self / divisor`, or `InexactDivision` if there is a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_ring(divisor)?;
        let lead = divisor
            .leading_term()
            .ok_or(Error::ZeroPolynomial("exact division by zero"))?;
        let lead_inv = lead.coeff.inv();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.leading_term() {
            let Some(m) = t.mon.div(&lead.mon) else {
                return Err(Error::InexactDivision);
            };
            let c = t.coeff.mul(&lead_inv);
            rem.add_scaled_shifted(&c.neg(), &m, divisor);
            quot.push((m, c));
        }
        Ok(Polynomial::from_terms(&self.ring, quot))
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Appends a term smaller than every existing term.
    pub(crate) fn push_trailing(&mut self, t: Term) {
        debug_assert!(self
            .terms
            .last()
            .map_or(true, |l| self.ring.order().cmp(&l.mon, &t.mon) == Ordering::Greater));
        self.terms.push(t);
    }

    /// Total order on polynomials of one ring: compare term by term, leading first.
    pub fn cmp_terms(&self, other: &Polynomial) -> Ordering {
        let order = self.ring.order();
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let c = order.cmp(&a.mon, &b.mon);
            if c != Ordering::Equal {
                return c;
            }
            let c = a.coeff.to_string().cmp(&b.coeff.to_string());
            if c != Ordering::Equal {
                return c;
            }
        }
        self.len().cmp(&other.len())
    }

    /// Sum of the exponents of the given variables in the leading monomial.
    pub fn partial_degree(&self, vars: std::ops::Range<usize>) -> u32 {
        self.leading_monomial()
            .map(|m| m.exponents()[vars].iter().sum())
            .unwrap_or(0)
    }

    /// Checks the canonical-form invariants. Used by tests and debug assertions.
    pub fn is_canonical(&self) -> bool {
        let order = self.ring.order();
        self.terms.iter().all(|t| !t.coeff.is_zero() && self.ring.field().contains(&t.coeff))
            && self
                .terms
                .windows(2)
                .all(|w| order.cmp(&w[0].mon, &w[1].mon) == Ordering::Greater)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if !self.ring.same_space(&other.ring) || self.len() != other.len() {
            return false;
        }
        if self.ring.order() == other.ring.order() {
            return self.terms == other.terms;
        }
        match other.to_ring(&self.ring) {
            Ok(o) => self.terms == o.terms,
            Err(_) => false,
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.vars();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = if neg { t.coeff.neg() } else { t.coeff.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.mon.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mon.display(names))?;
            } else {
                write!(f, "{abs}*{}", t.mon.display(names))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.clone(),
                    coeff: t.coeff.neg(),
                })
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
