//! Monomial orders.

use std::cmp::Ordering;
use std::fmt;

use crate::monomial::Monomial;

/// A total, multiplicative well-order on exponent vectors.
///
/// Orders act on variable positions: `Lex` treats position 0 as the largest
/// variable, `DegRevLex` breaks degree ties by the last position. `Block`
/// compares the first `split` positions with `first` and only on a tie the
/// remaining positions with `second`; this is the elimination order for the
/// leading block. `Permuted` ranks variables by an explicit permutation before
/// handing the exponents to the inner order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
    Permuted {
        /// `perm[k]` is the variable placed at rank `k`.
        perm: Vec<usize>,
        inner: Box<MonomialOrder>,
    },
    /// Order on `n + 1` variables where the last one is a homogenizing
    /// variable: total degree first, then `inner` on the first `n` positions.
    Homogenized { inner: Box<MonomialOrder> },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::DegRevLex
    }
}

impl MonomialOrder {
    /// Elimination order for the first `split` variables, degrevlex inside each block.
    pub fn elimination(split: usize) -> Self {
        MonomialOrder::block(split, MonomialOrder::DegRevLex, MonomialOrder::DegRevLex)
    }

    pub fn block(split: usize, first: MonomialOrder, second: MonomialOrder) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(first),
            second: Box::new(second),
        }
    }

    /// True when the order refines total degree.
    pub fn is_graded(&self) -> bool {
        match self {
            MonomialOrder::Lex => false,
            MonomialOrder::DegRevLex | MonomialOrder::Homogenized { .. } => true,
            MonomialOrder::Block { .. } => false,
            MonomialOrder::Permuted { inner, .. } => inner.is_graded(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
            MonomialOrder::Block {
                split,
                first,
                second,
            } => {
                let s = (*split).min(a.len());
                first
                    .cmp_exps(&a[..s], &b[..s])
                    .then_with(|| second.cmp_exps(&a[s..], &b[s..]))
            }
            MonomialOrder::Permuted { perm, inner } => {
                let pa: Vec<u32> = perm.iter().map(|&i| a[i]).collect();
                let pb: Vec<u32> = perm.iter().map(|&i| b[i]).collect();
                inner.cmp_exps(&pa, &pb)
            }
            MonomialOrder::Homogenized { inner } => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                let n = a.len().saturating_sub(1);
                da.cmp(&db).then_with(|| inner.cmp_exps(&a[..n], &b[..n]))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Block {
                split,
                first,
                second,
            } => write!(f, "block({split}, {first}, {second})"),
            MonomialOrder::Permuted { perm, inner } => write!(f, "{inner}{perm:?}"),
            MonomialOrder::Homogenized { inner } => write!(f, "homogenized({inner})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn lex_and_degrevlex() {
        // x > y^5 in lex, x < y^5 in degrevlex
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Less);
        // x*z < y^2 in degrevlex on x > y > z
        assert_eq!(
            MonomialOrder::DegRevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn block_eliminates_leading_variables() {
        let order = MonomialOrder::elimination(1);
        // u > x^100
        assert_eq!(order.cmp(&m(&[1, 0]), &m(&[0, 100])), Ordering::Greater);
        assert_eq!(order.cmp(&m(&[1, 2]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn permutation_reranks_variables() {
        let order = MonomialOrder::Permuted {
            perm: vec![2, 0, 1],
            inner: Box::new(MonomialOrder::Lex),
        };
        // z is the largest variable
        assert_eq!(order.cmp(&m(&[5, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn homogenized_is_degree_first() {
        let order = MonomialOrder::Homogenized {
            inner: Box::new(MonomialOrder::Lex),
        };
        // on [x, y, h]: y^6 > x*h^4 > y^5
        assert_eq!(order.cmp(&m(&[0, 6, 0]), &m(&[1, 0, 4])), Ordering::Greater);
        assert_eq!(order.cmp(&m(&[1, 0, 4]), &m(&[0, 5, 0])), Ordering::Greater);
        assert!(order.is_graded());
        assert!(!MonomialOrder::elimination(1).is_graded());
    }
}
