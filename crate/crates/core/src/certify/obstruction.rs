//! Obstructions to linear type and to being syzygetic.
//!
//! Both report on the positive property ("I is of linear type", "I is
//! syzygetic"): a firing obstruction gives `Refuted`, otherwise the result is
//! `Inconclusive`.

use super::{timed, CertificateReport, Check, Status};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::Polynomial;

/// An ideal of linear type needs at most `dim R` local generators.
pub fn linear_type_obstruction(mu: usize, dim: usize) -> CertificateReport {
    timed(|| {
        let claim = "ideal is of linear type".to_string();
        let check = Check::Exceeds {
            what: "minimal generators exceed dimension".into(),
            lhs: mu as i64,
            rhs: dim as i64,
        };
        if mu > dim {
            CertificateReport::new(claim, Status::Refuted, vec![check])
        } else {
            CertificateReport::new(claim, Status::Inconclusive, Vec::new())
                .with_note(format!("{mu} generators do not exceed dimension {dim}"))
        }
    })
}

/// Looks for `g` with `g·f² ∈ H·I` and `g ∉ (H : f)` locally, where
/// `I = H + (f)`. Such `g` shows `I` is not syzygetic.
///
/// The fast path tries `g = 1`: `f² ∈ H·I` and `f ∉ H` locally. Otherwise the
/// reduced basis of `(H·I : f²)` is scanned.
pub fn syzygetic_obstruction(h: &Ideal, f: &Polynomial, i: &Ideal) -> Result<CertificateReport> {
    let start = std::time::Instant::now();
    let mut rep = syzygetic_inner(h, f, i)?;
    rep.millis = start.elapsed().as_millis();
    Ok(rep)
}

fn syzygetic_inner(h: &Ideal, f: &Polynomial, i: &Ideal) -> Result<CertificateReport> {
    let claim = "ideal is syzygetic".to_string();
    if f.is_zero() {
        return Ok(CertificateReport::new(claim, Status::Inconclusive, Vec::new()).with_note("f is zero"));
    }
    let hf = h.with_generator(f)?;
    let mut checks = Vec::new();
    let eq = hf.equals(i)?;
    checks.push(Check::IdealEqual {
        left: hf.gens().to_vec(),
        right: i.gens().to_vec(),
        expected: eq,
    });
    if !eq {
        return Ok(CertificateReport::new(claim, Status::Inconclusive, checks).with_note("H + (f) differs from I"));
    }
    let hi = h.product(i)?;
    let f2 = f * f;
    if hi.contains(&f2)? {
        let local = h.locally_contains_at_origin(f)?;
        if !local.verdict {
            checks.push(Check::Member {
                ideal: hi.gens().to_vec(),
                element: f2,
                expected: true,
            });
            checks.push(Check::LocalMember {
                ideal: h.gens().to_vec(),
                element: f.clone(),
                expected: false,
            });
            return Ok(CertificateReport::new(claim, Status::Refuted, checks)
                .with_note("witness g = 1: f^2 in H*I while f is not in H locally"));
        }
    }
    let q = hi.colon(&f2)?;
    let p = h.colon(f)?;
    for g in q.gb().basis() {
        let g = g.to_ring(h.ring())?;
        if !p.locally_contains_at_origin(&g)?.verdict {
            let gf2 = &g * &f2;
            checks.push(Check::Member {
                ideal: hi.gens().to_vec(),
                element: gf2,
                expected: true,
            });
            checks.push(Check::LocalMember {
                ideal: p.gens().to_vec(),
                element: g.clone(),
                expected: false,
            });
            return Ok(CertificateReport::new(claim, Status::Refuted, checks)
                .with_note(format!("witness g = {g}")));
        }
    }
    Ok(CertificateReport::new(claim, Status::Inconclusive, checks).with_note("no obstruction found"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn mu_exceeding_dimension() {
        assert_eq!(linear_type_obstruction(4, 3).status, Status::Refuted);
        assert_eq!(linear_type_obstruction(3, 3).status, Status::Inconclusive);
    }

    #[test]
    fn power_of_maximal_ideal_in_two_variables() {
        // (x^2, xy, y^2) with H = (x^2, y^2), f = xy: f^2 = x^2·y^2 ∈ H·I, and
        // xy is not in (x^2, y^2) locally.
        let r = Ring::rational(&["x", "y"]);
        let h = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        let f = r.parse("x*y").unwrap();
        let rep = syzygetic_obstruction(&h, &f, &i).unwrap();
        assert_eq!(rep.status, Status::Refuted);
        assert!(rep.replay());
    }

    #[test]
    fn complete_intersection_has_no_obstruction() {
        let r = Ring::rational(&["x", "y"]);
        let h = Ideal::parse(&r, &["x"]).unwrap();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let f = r.parse("y").unwrap();
        let rep = syzygetic_obstruction(&h, &f, &i).unwrap();
        assert_eq!(rep.status, Status::Inconclusive);
    }

    #[test]
    fn mismatched_sum_is_inconclusive() {
        let r = Ring::rational(&["x", "y"]);
        let h = Ideal::parse(&r, &["x"]).unwrap();
        let i = Ideal::parse(&r, &["x", "y^2"]).unwrap();
        let f = r.parse("y").unwrap();
        assert_eq!(syzygetic_obstruction(&h, &f, &i).unwrap().status, Status::Inconclusive);
    }
}
