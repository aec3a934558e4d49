//! Certificates for claims about ideals and free complexes.
//!
//! Every verdict carries a list of [`Check`]s: small, self-contained
//! statements (a membership, an ideal equality, a vanishing minor, ...)
//! that can be re-executed from scratch with [`Check::replay`]. A report is
//! trustworthy exactly when its checks replay.

mod complex;
mod obstruction;
mod regseq;
mod valuation;

use std::fmt;
use std::time::Instant;

use serde::Serialize;

pub use complex::{buchsbaum_eisenbud, minimal_generator_count, resolution_minimal, verify_complex, ComplexData};
pub use obstruction::{linear_type_obstruction, syzygetic_obstruction};
pub use regseq::{grade_at_least, is_regular_sequence, GradeCertificate, TargetIdeal};
pub use valuation::{relation_from_binomial, smallest_valuation_vector, valuation_report};

use crate::ideal::{Colength, Ideal};
use crate::matrix::PolyMatrix;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Inconclusive,
}

impl Status {
    /// Swaps verified and refuted; used when a bundle asserts the negation of
    /// the property a certificate tests (e.g. "not syzygetic").
    pub fn negated(self) -> Status {
        match self {
            Status::Verified => Status::Refuted,
            Status::Refuted => Status::Verified,
            Status::Inconclusive => Status::Inconclusive,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

/// A replayable atomic fact.
#[derive(Clone, Debug)]
pub enum Check {
    /// `element ∈ (ideal)` has truth value `expected`.
    Member {
        ideal: Vec<Polynomial>,
        element: Polynomial,
        expected: bool,
    },
    /// Membership in the localization at the origin.
    LocalMember {
        ideal: Vec<Polynomial>,
        element: Polynomial,
        expected: bool,
    },
    IdealEqual {
        left: Vec<Polynomial>,
        right: Vec<Polynomial>,
        expected: bool,
    },
    /// `((base) : by) = (base)`.
    ColonStable { base: Vec<Polynomial>, by: Polynomial },
    /// Constant terms all zero (`expected = true`) or some nonzero.
    InOriginIdeal { polys: Vec<Polynomial>, expected: bool },
    PolyEqual { left: Polynomial, right: Polynomial },
    MatrixProductZero { left: PolyMatrix, right: PolyMatrix },
    /// `minor(rows, cols) = ±value` (sign-insensitive when `up_to_sign`).
    MinorEquals {
        matrix: PolyMatrix,
        rows: Vec<usize>,
        cols: Vec<usize>,
        value: Polynomial,
        up_to_sign: bool,
    },
    MinorNonzero {
        matrix: PolyMatrix,
        rows: Vec<usize>,
        cols: Vec<usize>,
    },
    MinorsVanish { matrix: PolyMatrix, size: usize },
    /// Entries with zero constant term, i.e. the map lands in `m·F`.
    EntriesInOriginIdeal { matrix: PolyMatrix },
    Colength { ideal: Vec<Polynomial>, value: Colength },
    StandardMonomials { ideal: Vec<Polynomial>, monomials: Vec<Monomial> },
    KrullDim { ideal: Vec<Polynomial>, value: i64 },
    /// `dim_k (I + m^n)/(m·I + m^n) >= bound`, a lower bound on the number
    /// of local generators of `I`.
    LocalGeneratorsAtLeast { ideal: Vec<Polynomial>, n: u32, bound: usize },
    /// `lhs > rhs` (integer inequality).
    Exceeds { what: String, lhs: i64, rhs: i64 },
    /// Equality of integers derived from data, e.g. rank bookkeeping.
    IntEqual { what: String, lhs: i64, rhs: i64 },
    /// `solution` satisfies every homogeneous relation, is strictly positive
    /// and primitive.
    Relations { relations: Vec<Vec<i64>>, solution: Vec<i64> },
}

fn ideal_of(gens: &[Polynomial]) -> Option<Ideal> {
    let ring = gens.first()?.ring().clone();
    Ideal::new(&ring, gens.to_vec()).ok()
}

impl Check {
    /// Re-executes the computation behind this check.
    pub fn replay(&self) -> bool {
        match self {
            Check::Member {
                ideal,
                element,
                expected,
            } => {
                let got = if ideal.is_empty() {
                    element.is_zero()
                } else {
                    ideal_of(ideal).and_then(|i| i.contains(element).ok()).unwrap_or(false)
                };
                got == *expected
            }
            Check::LocalMember {
                ideal,
                element,
                expected,
            } => ideal_of(ideal)
                .and_then(|i| i.locally_contains_at_origin(element).ok())
                .is_some_and(|r| r.verdict == *expected),
            Check::IdealEqual {
                left,
                right,
                expected,
            } => match (ideal_of(left), ideal_of(right)) {
                (Some(a), Some(b)) => a.equals(&b).ok() == Some(*expected),
                _ => false,
            },
            Check::ColonStable { base, by } => ideal_of(base)
                .and_then(|b| b.colon(by).ok().and_then(|c| c.equals(&b).ok()))
                .unwrap_or(false),
            Check::InOriginIdeal { polys, expected } => {
                polys.iter().all(Polynomial::in_origin_ideal) == *expected
            }
            Check::PolyEqual { left, right } => left == right,
            Check::MatrixProductZero { left, right } => {
                left.mul(right).map(|p| p.is_zero()).unwrap_or(false)
            }
            Check::MinorEquals {
                matrix,
                rows,
                cols,
                value,
                up_to_sign,
            } => match matrix.minor(rows, cols) {
                Ok(m) => m == *value || (*up_to_sign && m == -value),
                Err(_) => false,
            },
            Check::MinorNonzero { matrix, rows, cols } => {
                matrix.minor(rows, cols).map(|m| !m.is_zero()).unwrap_or(false)
            }
            Check::MinorsVanish { matrix, size } => matrix.minors_vanish(*size),
            Check::EntriesInOriginIdeal { matrix } => {
                matrix.entries().all(|(_, _, p)| p.in_origin_ideal())
            }
            Check::Colength { ideal, value } => {
                ideal_of(ideal).map(|i| i.colength()) == Some(*value)
            }
            Check::StandardMonomials { ideal, monomials } => {
                let Some(i) = ideal_of(ideal) else { return false };
                let mut got = i.standard_monomials().unwrap_or_default();
                let mut want = monomials.clone();
                got.sort();
                want.sort();
                got == want
            }
            Check::KrullDim { ideal, value } => {
                ideal_of(ideal).map(|i| i.krull_dim_quotient()) == Some(*value)
            }
            Check::LocalGeneratorsAtLeast { ideal, n, bound } => ideal_of(ideal)
                .and_then(|i| i.local_generator_lower_bound(*n).ok())
                .is_some_and(|b| b >= *bound),
            Check::Exceeds { lhs, rhs, .. } => lhs > rhs,
            Check::IntEqual { lhs, rhs, .. } => lhs == rhs,
            Check::Relations {
                relations,
                solution,
            } => valuation::satisfies(relations, solution),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Check::Member { .. } => "member",
            Check::LocalMember { .. } => "local_member",
            Check::IdealEqual { .. } => "ideal_equal",
            Check::ColonStable { .. } => "colon_stable",
            Check::InOriginIdeal { .. } => "in_origin_ideal",
            Check::PolyEqual { .. } => "poly_equal",
            Check::MatrixProductZero { .. } => "matrix_product_zero",
            Check::MinorEquals { .. } => "minor_equals",
            Check::MinorNonzero { .. } => "minor_nonzero",
            Check::MinorsVanish { .. } => "minors_vanish",
            Check::EntriesInOriginIdeal { .. } => "entries_in_origin_ideal",
            Check::Colength { .. } => "colength",
            Check::StandardMonomials { .. } => "standard_monomials",
            Check::KrullDim { .. } => "krull_dim",
            Check::LocalGeneratorsAtLeast { .. } => "local_generators_at_least",
            Check::Exceeds { .. } => "exceeds",
            Check::IntEqual { .. } => "int_equal",
            Check::Relations { .. } => "relations",
        }
    }

    /// One-line human/JSON rendering. Matrix indices are printed 1-based.
    pub fn describe(&self) -> String {
        fn gens(g: &[Polynomial]) -> String {
            let inner: Vec<String> = g.iter().map(|p| p.to_string()).collect();
            format!("({})", inner.join(", "))
        }
        fn idx(v: &[usize]) -> String {
            let inner: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", inner.join(","))
        }
        let not = |b: &bool| if *b { "" } else { "not " };
        match self {
            Check::Member {
                ideal,
                element,
                expected,
            } => format!("{element} {}in {}", not(expected), gens(ideal)),
            Check::LocalMember {
                ideal,
                element,
                expected,
            } => format!("{element} {}in {} locally at the origin", not(expected), gens(ideal)),
            Check::IdealEqual {
                left,
                right,
                expected,
            } => format!("{} {} {}", gens(left), if *expected { "=" } else { "!=" }, gens(right)),
            Check::ColonStable { base, by } => format!("{b} : {by} = {b}", b = gens(base)),
            Check::InOriginIdeal { polys, expected } => {
                format!("{} {}contained in the origin ideal", gens(polys), not(expected))
            }
            Check::PolyEqual { left, right } => format!("{left} == {right}"),
            Check::MatrixProductZero { left, right } => format!(
                "({}x{})·({}x{}) = 0",
                left.rows(),
                left.cols(),
                right.rows(),
                right.cols()
            ),
            Check::MinorEquals {
                rows,
                cols,
                value,
                up_to_sign,
                ..
            } => format!(
                "minor rows {} cols {} = {}{value}",
                idx(rows),
                idx(cols),
                if *up_to_sign { "±(" } else { "(" }
            ) + ")",
            Check::MinorNonzero { rows, cols, .. } => {
                format!("minor rows {} cols {} != 0", idx(rows), idx(cols))
            }
            Check::MinorsVanish { matrix, size } => format!(
                "all {} minors of size {size} of the {}x{} matrix vanish",
                matrix.minor_count(*size),
                matrix.rows(),
                matrix.cols()
            ),
            Check::EntriesInOriginIdeal { matrix } => format!(
                "every entry of the {}x{} matrix has zero constant term",
                matrix.rows(),
                matrix.cols()
            ),
            Check::Colength { ideal, value } => format!("colength {} = {value}", gens(ideal)),
            Check::StandardMonomials { ideal, monomials } => {
                let names = ideal.first().map(|p| p.ring().vars().to_vec()).unwrap_or_default();
                let ms: Vec<String> = monomials.iter().map(|m| m.display(&names).to_string()).collect();
                format!("standard monomials of {}: {}", gens(ideal), ms.join(", "))
            }
            Check::KrullDim { ideal, value } => format!("dim R/{} = {value}", gens(ideal)),
            Check::LocalGeneratorsAtLeast { ideal, n, bound } => {
                format!("dim (I + m^{n})/(mI + m^{n}) >= {bound} for I = {}", gens(ideal))
            }
            Check::Exceeds { what, lhs, rhs } => format!("{what}: {lhs} > {rhs}"),
            Check::IntEqual { what, lhs, rhs } => format!("{what}: {lhs} = {rhs}"),
            Check::Relations {
                relations,
                solution,
            } => format!("{solution:?} solves {relations:?}"),
        }
    }
}

/// Structured outcome of one claim.
#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub claim: String,
    pub status: Status,
    pub checks: Vec<Check>,
    /// Where the claim comes from, e.g. `lemma4: (g1,g2,x)=(x,y^10,z^8)`.
    pub anchor: String,
    pub note: Option<String>,
    pub millis: u128,
}

impl CertificateReport {
    pub fn new(claim: impl Into<String>, status: Status, checks: Vec<Check>) -> Self {
        CertificateReport {
            claim: claim.into(),
            status,
            checks,
            anchor: String::new(),
            note: None,
            millis: 0,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_anchor(mut self, anchor: impl Into<String>) -> Self {
        self.anchor = anchor.into();
        self
    }

    pub fn with_claim(mut self, claim: impl Into<String>) -> Self {
        self.claim = claim.into();
        self
    }

    pub fn negated(mut self) -> Self {
        self.status = self.status.negated();
        self
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// True iff every stored check re-executes successfully.
    pub fn replay(&self) -> bool {
        self.checks.iter().all(Check::replay)
    }

    pub fn record(&self) -> ReportRecord {
        ReportRecord {
            claim: self.claim.clone(),
            status: self.status,
            witness: self
                .checks
                .iter()
                .map(|c| WitnessRecord {
                    kind: c.kind(),
                    detail: c.describe(),
                })
                .collect(),
            paper_anchor: self.anchor.clone(),
            note: self.note.clone(),
            millis: self.millis,
        }
    }
}

/// Runs `f` and stamps the elapsed wall time on its report.
pub fn timed(f: impl FnOnce() -> CertificateReport) -> CertificateReport {
    let start = Instant::now();
    let mut r = f();
    r.millis = start.elapsed().as_millis();
    r
}

/// Serializable view of a report.
#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub claim: String,
    pub status: Status,
    pub witness: Vec<WitnessRecord>,
    pub paper_anchor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessRecord {
    pub kind: &'static str,
    pub detail: String,
}
