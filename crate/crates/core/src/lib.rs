//! Exact ideal arithmetic over `Q` and `F_p`, built on reduced Gröbner bases,
//! with a certificate layer for free resolutions, grade bounds and the
//! linear-type and syzygetic obstructions.

pub mod certify;
pub mod coeff;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;

pub use coeff::{Coefficient, Field};
pub use error::{Error, Result};
pub use groebner::{buchberger, divide, normal_form, Division, GroebnerBasis};
pub use ideal::{Colength, Ideal, LocalPredicateResult};
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::{Polynomial, Term};
pub use ring::{Ring, RingRef};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    mod groebner {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/local.md")]
    mod local {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
}
