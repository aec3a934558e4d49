//! Polynomial rings: coefficient field, variable names, active monomial order.

use std::fmt;
use std::sync::Arc;

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// A polynomial ring `k[x_0, ..., x_{n-1}]` together with the order its
/// polynomials are sorted by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(field: Field, vars: &[S]) -> RingRef {
        Ring::with_order_new(field, vars, MonomialOrder::DegRevLex)
    }

    pub fn with_order_new<S: AsRef<str>>(field: Field, vars: &[S], order: MonomialOrder) -> RingRef {
        Arc::new(Ring {
            vars: vars.iter().map(|s| s.as_ref().to_string()).collect(),
            field,
            order,
        })
    }

    /// `Q[vars]` under degrevlex.
    pub fn rational<S: AsRef<str>>(vars: &[S]) -> RingRef {
        Ring::new(Field::Rational, vars)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Same variables and field, possibly a different order.
    pub fn same_space(&self, other: &Ring) -> bool {
        self.vars == other.vars && self.field == other.field
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring {
            vars: self.vars.clone(),
            field: self.field,
            order,
        })
    }

    pub fn with_field(&self, field: Field) -> RingRef {
        Arc::new(Ring {
            vars: self.vars.clone(),
            field,
            order: self.order.clone(),
        })
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn variable(self: &Arc<Self>, i: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::var_power(self.nvars(), i, 1), self.field.one())
    }

    /// All variables as polynomials, in ring order.
    pub fn variables(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.variable(i)).collect()
    }

    pub fn var(self: &Arc<Self>, name: &str) -> Result<Polynomial> {
        self.var_index(name)
            .map(|i| self.variable(i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        crate::parse::parse_polynomial(self, text)
    }

    pub fn parse_all(self: &Arc<Self>, texts: &[&str]) -> Result<Vec<Polynomial>> {
        texts.iter().map(|t| self.parse(t)).collect()
    }

    /// Ring with `extra` new variables placed before the existing ones. The
    /// order is an elimination order for the new block.
    pub fn prepend_vars<S: AsRef<str>>(&self, extra: &[S]) -> RingRef {
        let mut vars: Vec<String> = extra.iter().map(|s| s.as_ref().to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        Arc::new(Ring {
            vars,
            field: self.field,
            order: MonomialOrder::block(extra.len(), MonomialOrder::DegRevLex, self.order.clone()),
        })
    }

    /// Ring with `extra` new variables appended after the existing ones, under degrevlex.
    pub fn append_vars<S: AsRef<str>>(&self, extra: &[S]) -> RingRef {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Arc::new(Ring {
            vars,
            field: self.field,
            order: MonomialOrder::DegRevLex,
        })
    }

    pub fn describe(&self) -> String {
        format!("{}[{}]", self.field, self.vars.join(","))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.describe(), self.order)
    }
}

pub(crate) fn check_same_space(a: &Ring, b: &Ring) -> Result<()> {
    if a.same_space(b) {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: a.describe(),
            right: b.describe(),
        })
    }
}
