//! Exponent vectors.

use std::fmt;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u32; 8]>;

/// A monomial `x_0^{e_0} ... x_{n-1}^{e_{n-1}}`, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    /// The monomial `x_var^power` in a ring with `nvars` variables.
    pub fn var_power(nvars: usize, var: usize, power: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = power;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    /// If this is a pure power `x_i^e` with `e > 0`, returns `(i, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Embeds into a larger ring: variable `i` moves to position `positions[i]`.
    pub fn embed(&self, nvars: usize, positions: &[usize]) -> Monomial {
        let mut m = Monomial::one(nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            m.exps[positions[i]] = e;
        }
        m
    }

    /// Restricts to the listed variable positions (inverse of `embed` on monomials
    /// free of the dropped variables).
    pub fn project(&self, positions: &[usize]) -> Monomial {
        Monomial {
            exps: positions.iter().map(|&p| self.exps[p]).collect(),
        }
    }

    /// Renders with variable names, `1` for the empty product.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayMonomial { mon: self, names }
    }
}

struct DisplayMonomial<'a> {
    mon: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.mon.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::new([2, 1, 0]);
        let b = Monomial::new([1, 1, 3]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b), Monomial::new([2, 1, 3]));
        assert_eq!(a.gcd(&b), Monomial::new([1, 1, 0]));
        assert_eq!(a.lcm(&b).div(&a), Some(Monomial::new([0, 0, 3])));
        assert!(Monomial::new([1, 0, 0]).is_coprime(&Monomial::new([0, 4, 1])));
    }

    #[test]
    fn pure_powers() {
        assert_eq!(Monomial::new([0, 3, 0]).as_pure_power(), Some((1, 3)));
        assert_eq!(Monomial::new([1, 3, 0]).as_pure_power(), None);
        assert_eq!(Monomial::one(3).as_pure_power(), None);
    }

    #[test]
    fn display_uses_names() {
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(Monomial::new([2, 0, 1]).display(&names).to_string(), "x^2*z");
        assert_eq!(Monomial::one(3).display(&names).to_string(), "1");
    }
}
