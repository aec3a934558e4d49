//! Ideals and the operations built on their Gröbner bases.
//!
//! The regular local ring at the origin is modelled implicitly: global
//! computations are performed, and a statement "f ∈ I locally" is decided by
//! whether the colon ideal `(I : f)` escapes the maximal ideal of the origin.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_in, sort_by_leading, GroebnerBasis};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{check_same_space, RingRef};

type BasisCache = Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>;

/// An ideal given by generators, with reduced Gröbner bases cached per order.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    cache: BasisCache,
}

/// Outcome of a membership test in the localization at the origin.
#[derive(Clone, Debug)]
pub struct LocalPredicateResult {
    pub verdict: bool,
    /// Element of `(I : f)` with nonzero constant term, when the verdict is true.
    pub witness: Option<Polynomial>,
    /// The colon ideal the verdict was read from.
    pub colon: Ideal,
}

/// Vector-space dimension of `R/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Colength {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        let gens = gens
            .into_iter()
            .map(|g| g.to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            cache: Arc::default(),
        })
    }

    pub fn parse(ring: &RingRef, gens: &[&str]) -> Result<Self> {
        Ideal::new(ring, ring.parse_all(gens)?)
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal::new(ring, Vec::new()).expect("empty generator list")
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The ideal of the origin, generated by all variables.
    pub fn maximal_at_origin(ring: &RingRef) -> Self {
        Ideal::new(ring, ring.variables()).expect("same ring")
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis under the ring's order.
    pub fn gb(&self) -> Arc<GroebnerBasis> {
        self.gb_with(self.ring.order())
    }

    pub fn gb_with(&self, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(order) {
            return gb.clone();
        }
        let gb = Arc::new(buchberger_in(&self.ring, &self.gens, order));
        // first computation wins; results are identical by determinism
        self.cache
            .lock()
            .expect("cache lock")
            .entry(order.clone())
            .or_insert(gb)
            .clone()
    }

    fn seed(&self, gb: GroebnerBasis) {
        self.cache
            .lock()
            .expect("cache lock")
            .entry(gb.order().clone())
            .or_insert_with(|| Arc::new(gb));
    }

    /// Ideal generated by its own reduced basis.
    pub fn reduced(&self) -> Ideal {
        let gb = self.gb();
        let out = Ideal::new(&self.ring, gb.basis().to_vec()).expect("same ring");
        out.seed((*gb).clone());
        out
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(Polynomial::is_zero)
    }

    /// True iff every generator vanishes at the origin.
    pub fn in_origin_ideal(&self) -> bool {
        self.gens.iter().all(Polynomial::in_origin_ideal)
    }

    fn same_space(&self, f: &Polynomial) -> Result<()> {
        check_same_space(&self.ring, f.ring())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.same_space(f)?;
        Ok(f.is_zero() || self.gb().contains(f))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.same_space(f)?;
        f.to_ring(&self.ring)
            .map(|f| self.gb().normal_form(&f).to_ring(&self.ring).expect("same space"))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        check_same_space(&self.ring, &other.ring)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals: reduced bases under the ring's order coincide.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        check_same_space(&self.ring, &other.ring)?;
        let order = self.ring.order();
        Ok(self.gb_with(order).basis() == other.gb_with(order).basis())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_same_space(&self.ring, &other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generator(&self, f: &Polynomial) -> Result<Ideal> {
        self.same_space(f)?;
        let mut gens = self.gens.clone();
        gens.push(f.clone());
        Ideal::new(&self.ring, gens)
    }

    /// Product ideal, generated by pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_same_space(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                let b = b.to_ring(&self.ring)?;
                let p = a * &b;
                if !p.is_zero() {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J`, by eliminating `u` from `u·I + (1-u)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        check_same_space(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let big = self.ring.prepend_vars(&["u_aux"]);
        let positions: Vec<usize> = (1..=self.ring.nvars()).collect();
        let u = big.variable(0);
        let one_minus_u = &Polynomial::one(&big) - &u;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&u * &f.embed(&big, &positions));
        }
        for g in &other.gens {
            gens.push(&one_minus_u * &g.embed(&big, &positions));
        }
        Ok(eliminate_leading(&big, &gens, 1, &self.ring, &positions))
    }

    /// `(I : f) = {g : g·f ∈ I}`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        self.same_space(f)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial("colon by the zero polynomial"));
        }
        let f = f.to_ring(&self.ring)?;
        if f.is_constant() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|g| g.div_exact(&f))
            .collect::<Result<Vec<_>>>()?;
        let out = Ideal::new(&self.ring, gens)?;
        Ok(out.reduced())
    }

    /// `(I : J)`, the intersection of `(I : g)` over the generators `g` of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        check_same_space(&self.ring, &other.ring)?;
        let mut acc: Option<Ideal> = None;
        for g in other.gens.iter().filter(|g| !g.is_zero()) {
            let q = self.colon(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        acc.ok_or(Error::ZeroPolynomial("colon by the zero ideal"))
    }

    /// Saturation `(I : J^∞)`.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.reduced();
        loop {
            let next = current.colon_ideal(other)?;
            if next.equals(&current)? {
                return Ok(next);
            }
            current = next;
        }
    }

    /// `I ∩ k[other variables]`, returned as an ideal of this ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        for &v in vars {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, bound: n });
            }
        }
        let mut placed: Vec<usize> = vars.to_vec();
        placed.sort_unstable();
        placed.dedup();
        let k = placed.len();
        let rest: Vec<usize> = (0..n).filter(|i| !placed.contains(i)).collect();
        // positions[i] = place of original variable i in the block ring
        let mut positions = vec![0; n];
        let mut names = Vec::with_capacity(n);
        for (p, &v) in placed.iter().chain(rest.iter()).enumerate() {
            positions[v] = p;
            names.push(self.ring.vars()[v].clone());
        }
        let big = crate::ring::Ring::with_order_new(self.ring.field(), &names, MonomialOrder::elimination(k));
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.embed(&big, &positions)).collect();
        Ok(eliminate_leading(&big, &gens, k, &self.ring, &positions))
    }

    pub fn eliminate_named(&self, names: &[&str]) -> Result<Ideal> {
        let vars = names
            .iter()
            .map(|n| {
                self.ring
                    .var_index(n)
                    .ok_or_else(|| Error::UnknownVariable(n.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.eliminate(&vars)
    }

    /// Decides `f ∈ I·R_m` for the maximal ideal `m` of the origin: true iff
    /// `(I : f)` contains an element with nonzero constant term.
    pub fn locally_contains_at_origin(&self, f: &Polynomial) -> Result<LocalPredicateResult> {
        let colon = self.colon(f)?;
        let witness = colon
            .gb()
            .basis()
            .iter()
            .find(|g| !g.in_origin_ideal())
            .map(|g| g.to_ring(&self.ring).expect("same space"));
        Ok(LocalPredicateResult {
            verdict: witness.is_some(),
            witness,
            colon,
        })
    }

    /// Minimal generators of the leading-term ideal under the ring's order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gb().leading_monomials()
    }

    /// Krull dimension of `R/I`: the largest set of variables independent
    /// modulo the leading-term ideal. The unit ideal reports `-1`.
    pub fn krull_dim_quotient(&self) -> i64 {
        let gb = self.gb();
        if gb.is_unit() {
            return -1;
        }
        max_independent_set(self.ring.nvars(), &gb.leading_monomials()) as i64
    }

    /// `nvars - dim(R/I)`; equals the height for the unmixed ideals handled here.
    pub fn height(&self) -> i64 {
        self.ring.nvars() as i64 - self.krull_dim_quotient()
    }

    /// Monomials outside the leading-term ideal, ascending under the ring's order;
    /// `None` when there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let gb = self.gb();
        if gb.is_unit() {
            return Some(Vec::new());
        }
        let mut out = enumerate_standard(self.ring.nvars(), &gb.leading_monomials())?;
        let order = self.ring.order();
        out.sort_by(|a, b| order.cmp(a, b));
        Some(out)
    }

    pub fn colength(&self) -> Colength {
        match self.standard_monomials() {
            Some(v) => Colength::Finite(v.len()),
            None => Colength::Infinite,
        }
    }

    /// Lower bound for the minimal number of generators of `I` in the local
    /// ring at the origin: `dim_k (I + m^n) / (m·I + m^n)`. The bound is
    /// nondecreasing in `n` and equals the local generator count for large `n`.
    pub fn local_generator_lower_bound(&self, n: u32) -> Result<usize> {
        let m = Ideal::maximal_at_origin(&self.ring);
        let mut mn = m.clone();
        for _ in 1..n {
            mn = mn.product(&m)?.reduced();
        }
        let big = self.sum(&mn)?;
        let small = m.product(self)?.sum(&mn)?;
        match (small.colength(), big.colength()) {
            (Colength::Finite(a), Colength::Finite(b)) => Ok(a - b),
            _ => unreachable!("ideals containing a power of m have finite colength"),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Computes the reduced basis of `gens` in `big` (an elimination order for the
/// first `k` variables), keeps the elements free of those variables and maps
/// them to `target`, where target variable `i` sits at `positions[i]`.
fn eliminate_leading(big: &RingRef, gens: &[Polynomial], k: usize, target: &RingRef, positions: &[usize]) -> Ideal {
    let gb = buchberger_in(big, gens, big.order());
    let kept: Vec<Polynomial> = gb
        .basis()
        .iter()
        .filter(|g| (0..k).all(|v| !g.mentions_var(v)))
        .map(|g| g.project(target, positions).expect("free of eliminated variables"))
        .collect();
    let ideal = Ideal::new(target, kept.clone()).expect("same ring");
    // The kept part is already the reduced basis for the trailing block's order.
    if let MonomialOrder::Block { split, second, .. } = big.order() {
        let tail_is_target = positions.iter().enumerate().all(|(i, &p)| p == k + i);
        if *split == k && tail_is_target && **second == *target.order() {
            let mut basis = kept;
            sort_by_leading(&mut basis);
            ideal.seed(GroebnerBasis::from_reduced(target, basis));
        }
    }
    ideal
}

fn max_independent_set(n: usize, leads: &[Monomial]) -> usize {
    let supports: Vec<u64> = leads
        .iter()
        .map(|m| m.support().fold(0u64, |acc, v| acc | (1 << v)))
        .collect();
    let mut best = 0;
    for mask in 0u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !mask != 0) {
            best = size;
        }
    }
    best
}

fn enumerate_standard(n: usize, leads: &[Monomial]) -> Option<Vec<Monomial>> {
    let mut bounds = vec![None; n];
    for m in leads {
        if let Some((v, e)) = m.as_pure_power() {
            bounds[v] = Some(bounds[v].map_or(e, |b: u32| b.min(e)));
        }
    }
    let bounds: Vec<u32> = bounds.into_iter().collect::<Option<Vec<_>>>()?;
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn walk(var: usize, exps: &mut Vec<u32>, bounds: &[u32], leads: &[Monomial], out: &mut Vec<Monomial>) {
        if var == exps.len() {
            let m = Monomial::new(exps.iter().copied());
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            return;
        }
        for e in 0..bounds[var] {
            exps[var] = e;
            // prune: the partial monomial (later variables zero) is already divisible
            let partial = Monomial::new(exps.iter().copied());
            if leads.iter().any(|l| l.divides(&partial)) {
                break;
            }
            walk(var + 1, exps, bounds, leads, out);
        }
        exps[var] = 0;
    }
    walk(0, &mut exps, &bounds, leads, &mut out);
    Some(out)
}

/// Kernel of the substitution map `k[target] -> k[params]`, `x_i ↦ images[i]`.
pub fn kernel_of_map(target: &RingRef, images: &[Polynomial]) -> Result<Ideal> {
    if images.len() != target.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "{} images for a ring with {} variables",
            images.len(),
            target.nvars()
        )));
    }
    let params = images
        .first()
        .map(|p| p.ring().clone())
        .ok_or_else(|| Error::DimensionMismatch("no images".into()))?;
    if params.field() != target.field() {
        return Err(Error::RingMismatch {
            left: params.describe(),
            right: target.describe(),
        });
    }
    let m = params.nvars();
    let param_names: Vec<String> = params.vars().iter().map(|v| format!("{v}_param")).collect();
    let big = target.prepend_vars(&param_names);
    let param_pos: Vec<usize> = (0..m).collect();
    let target_pos: Vec<usize> = (m..m + target.nvars()).collect();
    let mut gens = Vec::with_capacity(images.len());
    for (i, im) in images.iter().enumerate() {
        let im = im.to_ring(&params)?;
        let x = big.variable(m + i);
        gens.push(&x - &im.embed(&big, &param_pos));
    }
    Ok(eliminate_leading(&big, &gens, m, target, &target_pos))
}

/// Presentation ideal of the Rees algebra: the kernel of `R[T_1..T_n] -> R[t]`,
/// `T_i ↦ t·f_i`, for the generators `f_i` of `I`.
#[derive(Clone, Debug)]
pub struct ReesIdeal {
    pub ideal: Ideal,
    /// Number of base-ring variables; the remaining variables are the `T_i`.
    pub base_vars: usize,
}

impl ReesIdeal {
    /// Degree in the `T` variables of a homogeneous element.
    pub fn t_degree(&self, p: &Polynomial) -> u32 {
        let n = self.ideal.ring().nvars();
        p.partial_degree(self.base_vars..n)
    }
}

pub fn rees_ideal(i: &Ideal) -> Result<ReesIdeal> {
    let ring = i.ring();
    let n = ring.nvars();
    let k = i.gens().len();
    let t_names: Vec<String> = (1..=k)
        .map(|j| {
            let mut name = format!("T{j}");
            while ring.var_index(&name).is_some() {
                name = format!("_{name}");
            }
            name
        })
        .collect();
    let rees_ring = ring.append_vars(&t_names);
    let big = rees_ring.prepend_vars(&["t_aux"]);
    let base_pos: Vec<usize> = (1..=n).collect();
    let mut gens = Vec::with_capacity(k);
    let t = big.variable(0);
    for (j, f) in i.gens().iter().enumerate() {
        let tj = big.variable(1 + n + j);
        gens.push(&tj - &(&t * &f.embed(&big, &base_pos)));
    }
    let target_pos: Vec<usize> = (1..=n + k).collect();
    Ok(ReesIdeal {
        ideal: eliminate_leading(&big, &gens, 1, &rees_ring, &target_pos),
        base_vars: n,
    })
}

/// Outcome of comparing the Rees ideal with its degree-one part.
#[derive(Clone, Debug)]
pub struct LinearTypeCheck {
    pub linear_type: bool,
    pub rees: ReesIdeal,
    /// The ideal generated by the `T`-linear elements of the reduced basis.
    pub degree_one: Ideal,
    /// A reduced-basis element of higher `T`-degree outside `degree_one`.
    pub witness: Option<Polynomial>,
}

pub fn check_linear_type(i: &Ideal) -> Result<LinearTypeCheck> {
    let rees = rees_ideal(i)?;
    let gb = rees.ideal.gb();
    let (low, high): (Vec<Polynomial>, Vec<Polynomial>) = gb
        .basis()
        .iter()
        .cloned()
        .partition(|g| rees.t_degree(g) <= 1);
    let degree_one = Ideal::new(rees.ideal.ring(), low)?;
    let mut witness = None;
    for g in high {
        if !degree_one.contains(&g)? {
            witness = Some(g);
            break;
        }
    }
    Ok(LinearTypeCheck {
        linear_type: witness.is_none(),
        rees,
        degree_one,
        witness,
    })
}

/// True iff the Rees ideal is generated in `T`-degree one.
pub fn linear_type_by_rees(i: &Ideal) -> Result<bool> {
    Ok(check_linear_type(i)?.linear_type)
}
