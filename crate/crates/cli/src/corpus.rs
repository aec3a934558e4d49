//! Embedded lemma data, stored in the session-file format.

use std::fmt;
use std::str::FromStr;

use crate::error::CliError;
use crate::input::{Overrides, SessionInput};

pub const LEMMA2: &str = include_str!("../corpus/lemma2.txt");
pub const LEMMA3: &str = include_str!("../corpus/lemma3.txt");
pub const LEMMA4: &str = include_str!("../corpus/lemma4.txt");
pub const HUNEKE: &str = include_str!("../corpus/huneke.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaId {
    Lemma2,
    Lemma3,
    Lemma4,
    Huneke,
}

impl LemmaId {
    pub const ALL: [LemmaId; 4] = [LemmaId::Lemma2, LemmaId::Lemma3, LemmaId::Lemma4, LemmaId::Huneke];

    pub fn source(self) -> &'static str {
        match self {
            LemmaId::Lemma2 => LEMMA2,
            LemmaId::Lemma3 => LEMMA3,
            LemmaId::Lemma4 => LEMMA4,
            LemmaId::Huneke => HUNEKE,
        }
    }

    pub fn load(self, overrides: &Overrides) -> Result<SessionInput, CliError> {
        SessionInput::parse_with(self.source(), overrides)
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LemmaId::Lemma2 => "lemma2",
            LemmaId::Lemma3 => "lemma3",
            LemmaId::Lemma4 => "lemma4",
            LemmaId::Huneke => "huneke",
        };
        write!(f, "{s}")
    }
}

impl FromStr for LemmaId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "2" | "lemma2" => Ok(LemmaId::Lemma2),
            "3" | "lemma3" => Ok(LemmaId::Lemma3),
            "4" | "lemma4" => Ok(LemmaId::Lemma4),
            "huneke" => Ok(LemmaId::Huneke),
            other => Err(CliError::Usage(format!("unknown lemma `{other}` (expected 2, 3, 4 or huneke)"))),
        }
    }
}

/// 1-based `(rows, cols)` of the 7-minors of `phi2` giving `g1` and `g2`.
pub const LEMMA4_G_MINORS: [(&[usize], &[usize]); 2] = [
    (&[1, 2, 3, 4, 5, 7, 8], &[2, 3, 4, 5, 6, 7, 12]),
    (&[1, 3, 4, 5, 6, 7, 8], &[1, 2, 5, 8, 9, 10, 11]),
];

/// 1-based rows of the 5-minors of `phi3` giving `h1`, `h2`, `h3`.
pub const LEMMA4_H_ROWS: [&[usize]; 3] = [&[1, 8, 9, 10, 11], &[3, 4, 6, 7, 12], &[1, 2, 4, 5, 8]];

pub const LEMMA4_RANKS: [usize; 3] = [1, 7, 5];
pub const LEMMA3_RANKS: [usize; 2] = [1, 3];

pub const LEMMA3_X_PLUS_I: [&str; 5] = ["x", "y^3", "y^2*z", "y*z^2", "z^3"];
pub const LEMMA4_X_PLUS_I: [&str; 9] = [
    "x", "y*z", "z^3", "z^2*t", "z*t^2", "t^3", "y^4", "y^3*t", "y^2*t^2",
];
pub const LEMMA4_STANDARD: [&str; 12] = [
    "1", "y", "y*t", "y*t^2", "y^2", "y^2*t", "y^3", "z", "z*t", "z^2", "t", "t^2",
];

/// Right-hand side of the displayed expression of `f8^2` in terms of `f1..f7`.
pub const LEMMA4_F8_SQUARED: &str =
    "x^2*y*z*t*f1^2 - x^4*f1*f5 - x^2*f2*f7 + t*f5*f6 + x^2*f6*f7";

/// Exponents of the parametrization `X, Y, Z, T -> s^12, s^15, s^20, s^23`.
pub const LEMMA4_TORIC: [u32; 4] = [12, 15, 20, 23];

/// Valuation vector as printed next to the three defining relations.
pub const LEMMA4_PRINTED_VALUATION: [i64; 4] = [12, 15, 29, 23];

/// Parametrization of the curve behind the three-variable example.
pub const HUNEKE_CURVE: [&str; 3] = ["s^6", "s^7 + s^10", "s^8"];
