//! Command-line front end: session-file parsing, the embedded lemma corpus,
//! lemma verification bundles and report rendering.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod input;
pub mod lemmas;
pub mod report;

pub use error::CliError;

use idealkit::{Field, MonomialOrder};

/// Parses `q`, `fp:<p>` (also `Q`, `Fp(<p>)`).
pub fn parse_field(text: &str) -> Result<Field, CliError> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(Field::Rational);
    }
    let p = t
        .strip_prefix("fp:")
        .or_else(|| t.strip_prefix("Fp(").and_then(|r| r.strip_suffix(')')))
        .ok_or_else(|| CliError::Usage(format!("unknown field `{t}` (expected q or fp:<p>)")))?;
    let p: u64 = p
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid characteristic `{p}`")))?;
    Ok(Field::prime(p)?)
}

pub fn parse_order(text: &str) -> Result<MonomialOrder, CliError> {
    match text {
        "lex" => Ok(MonomialOrder::Lex),
        "degrevlex" | "grevlex" | "drl" => Ok(MonomialOrder::DegRevLex),
        other => Err(CliError::Usage(format!("unknown order `{other}` (expected lex or degrevlex)"))),
    }
}

/// Caps the global worker pool from `IDEALKIT_THREADS`, if set.
pub fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("IDEALKIT_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| CliError::Usage(format!("IDEALKIT_THREADS must be a positive integer, got `{v}`")))?;
        // A second initialization (e.g. in tests) keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    Ok(())
}


#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book {}
