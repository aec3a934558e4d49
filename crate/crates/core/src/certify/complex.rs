//! Free complexes `0 -> F_n -> ... -> F_1 -> F_0` given by their matrices.

use super::regseq::{grade_at_least, GradeCertificate, TargetIdeal};
use super::{timed, CertificateReport, Check, Status};
use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;

/// `matrices[k-1]` is the map `φ_k : F_k -> F_{k-1}`, so consecutive
/// products `φ_k · φ_{k+1}` must vanish. `ranks[k-1]` is the expected rank
/// `r_k` of `φ_k`.
#[derive(Clone, Debug)]
pub struct ComplexData {
    pub matrices: Vec<PolyMatrix>,
    pub ranks: Vec<usize>,
}

impl ComplexData {
    pub fn new(matrices: Vec<PolyMatrix>, ranks: Vec<usize>) -> Result<Self> {
        if matrices.is_empty() {
            return Err(Error::DimensionMismatch("a complex needs at least one map".into()));
        }
        if ranks.len() != matrices.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} ranks for {} maps",
                ranks.len(),
                matrices.len()
            )));
        }
        Ok(ComplexData { matrices, ranks })
    }

    /// `rank F_k`; `F_0` is the target of `φ_1`.
    pub fn free_rank(&self, k: usize) -> usize {
        if k == 0 {
            self.matrices[0].rows()
        } else {
            self.matrices[k - 1].cols()
        }
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }
}

/// Checks shapes and `φ_k · φ_{k+1} = 0` for all `k`.
pub fn verify_complex(c: &ComplexData) -> CertificateReport {
    timed(|| complex_inner(c))
}

fn complex_inner(c: &ComplexData) -> CertificateReport {
    let claim = format!("maps of length {} form a complex", c.len());
    let mut checks = Vec::new();
    for (k, pair) in c.matrices.windows(2).enumerate() {
        let (a, b) = (&pair[0], &pair[1]);
        if a.cols() != b.rows() {
            return CertificateReport::new(claim, Status::Inconclusive, checks)
                .with_note(format!("map {} has {} columns but map {} has {} rows", k + 1, a.cols(), k + 2, b.rows()));
        }
        let check = Check::MatrixProductZero {
            left: a.clone(),
            right: b.clone(),
        };
        let zero = a.mul(b).map(|p| p.is_zero()).unwrap_or(false);
        if !zero {
            return CertificateReport::new(claim, Status::Refuted, vec![check])
                .with_note(format!("product of maps {} and {} is nonzero", k + 1, k + 2));
        }
        checks.push(check);
    }
    CertificateReport::new(claim, Status::Verified, checks)
}

/// Buchsbaum–Eisenbud exactness criterion for a complex over the local ring
/// at the origin. For each `k`:
/// - `rank F_k = r_k + r_{k+1}` (with `r_{n+1} = 0`),
/// - some `r_k`-minor of `φ_k` is nonzero and all `(r_k+1)`-minors vanish,
/// - `grade I_{r_k}(φ_k) >= k`, via `certs[k-1]`.
///
/// Minor indices carried by the grade certificates are tried first when
/// looking for a nonzero minor.
pub fn buchsbaum_eisenbud(c: &ComplexData, certs: &[GradeCertificate]) -> Result<CertificateReport> {
    Ok(timed(|| be_inner(c, certs)))
}

fn be_inner(c: &ComplexData, certs: &[GradeCertificate]) -> CertificateReport {
    let claim = "complex is acyclic".to_string();
    let n = c.len();
    let mut checks = Vec::new();
    for k in 1..=n {
        let next = c.ranks.get(k).copied().unwrap_or(0);
        let lhs = c.free_rank(k) as i64;
        let rhs = (c.ranks[k - 1] + next) as i64;
        let check = Check::IntEqual {
            what: format!("rank F_{k} = r_{k} + r_{}", k + 1),
            lhs,
            rhs,
        };
        if lhs != rhs {
            return CertificateReport::new(claim, Status::Refuted, vec![check])
                .with_note(format!("rank condition fails at k = {k}"));
        }
        checks.push(check);
    }
    if certs.len() != n {
        return CertificateReport::new(claim, Status::Inconclusive, checks)
            .with_note(format!("{} grade certificates for {n} maps", certs.len()));
    }
    let cx = complex_inner(c);
    let cx_status = cx.status;
    checks.extend(cx.checks);
    if cx_status != Status::Verified {
        return CertificateReport::new(claim, cx_status, checks).with_note("maps do not form a complex");
    }
    for k in 1..=n {
        let phi = &c.matrices[k - 1];
        let r = c.ranks[k - 1];
        match nonzero_minor(phi, r, &certs[k - 1]) {
            Some((rows, cols)) => checks.push(Check::MinorNonzero {
                matrix: phi.clone(),
                rows,
                cols,
            }),
            None => {
                return CertificateReport::new(claim, Status::Refuted, checks)
                    .with_note(format!("every {r}-minor of map {k} vanishes"))
            }
        }
        let vanish = Check::MinorsVanish {
            matrix: phi.clone(),
            size: r + 1,
        };
        if !phi.minors_vanish(r + 1) {
            return CertificateReport::new(claim, Status::Refuted, checks)
                .with_note(format!("some {}-minor of map {k} is nonzero", r + 1));
        }
        checks.push(vanish);
        let target = TargetIdeal::Minors {
            matrix: phi.clone(),
            size: r,
        };
        let grade = match grade_at_least(&target, k, &certs[k - 1]) {
            Ok(g) => g,
            Err(e) => return CertificateReport::new(claim, Status::Inconclusive, checks).with_note(e.to_string()),
        };
        let status = grade.status;
        checks.extend(grade.checks);
        if status != Status::Verified {
            let note = grade.note.unwrap_or_default();
            return CertificateReport::new(claim, Status::Inconclusive, checks)
                .with_note(format!("grade of I_{r}(map {k}) >= {k} not certified: {note}"));
        }
    }
    CertificateReport::new(claim, Status::Verified, checks)
}

fn nonzero_minor(phi: &PolyMatrix, r: usize, cert: &GradeCertificate) -> Option<(Vec<usize>, Vec<usize>)> {
    if r == 0 {
        return Some((Vec::new(), Vec::new()));
    }
    if let Some(hints) = &cert.minor_indices {
        for (rows, cols) in hints {
            if rows.len() == r && phi.minor(rows, cols).is_ok_and(|m| !m.is_zero()) {
                return Some((rows.clone(), cols.clone()));
            }
        }
    }
    phi.first_nonzero_minor(r).ok().flatten().map(|(rows, cols, _)| (rows, cols))
}

/// A resolution is minimal iff no matrix entry is a unit at the origin.
pub fn resolution_minimal(c: &ComplexData) -> CertificateReport {
    timed(|| {
        let claim = "resolution is minimal".to_string();
        let mut checks = Vec::new();
        for (k, phi) in c.matrices.iter().enumerate() {
            if let Some((i, j, _)) = phi.entries().find(|(_, _, p)| !p.in_origin_ideal()) {
                let check = Check::InOriginIdeal {
                    polys: vec![phi.get(i, j).clone()],
                    expected: false,
                };
                return CertificateReport::new(claim, Status::Refuted, vec![check])
                    .with_note(format!("map {} entry ({}, {}) is a unit", k + 1, i + 1, j + 1));
            }
            checks.push(Check::EntriesInOriginIdeal { matrix: phi.clone() });
        }
        CertificateReport::new(claim, Status::Verified, checks)
    })
}

/// Minimal number of local generators of the cokernel's annihilating ideal
/// `I = image(φ_1)`, read off a minimal resolution: `rank F_1`.
pub fn minimal_generator_count(c: &ComplexData) -> Option<usize> {
    (resolution_minimal(c).status == Status::Verified).then(|| c.free_rank(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn koszul() -> (crate::ring::RingRef, ComplexData) {
        let r = Ring::rational(&["x", "y"]);
        let d1 = PolyMatrix::parse_rows(&r, &[&["x", "y"]]).unwrap();
        let d2 = PolyMatrix::parse_rows(&r, &[&["-y"], &["x"]]).unwrap();
        (r, ComplexData::new(vec![d1, d2], vec![1, 1]).unwrap())
    }

    #[test]
    fn koszul_complex_is_acyclic() {
        let (r, c) = koszul();
        assert_eq!(verify_complex(&c).status, Status::Verified);
        let certs = vec![
            GradeCertificate::new(r.parse_all(&["x"]).unwrap()),
            GradeCertificate::new(r.parse_all(&["x", "y"]).unwrap()),
        ];
        let rep = buchsbaum_eisenbud(&c, &certs).unwrap();
        assert_eq!(rep.status, Status::Verified, "{:?}", rep.note);
        assert!(rep.replay());
        assert_eq!(minimal_generator_count(&c), Some(2));
    }

    #[test]
    fn rank_rule_violation_refuted() {
        let (r, mut c) = koszul();
        c.ranks = vec![1, 2];
        let certs = vec![GradeCertificate::new(r.parse_all(&["x"]).unwrap()); 2];
        let rep = buchsbaum_eisenbud(&c, &certs).unwrap();
        assert_eq!(rep.status, Status::Refuted);
    }

    #[test]
    fn non_complex_refuted() {
        let r = Ring::rational(&["x", "y"]);
        let d1 = PolyMatrix::parse_rows(&r, &[&["x", "y"]]).unwrap();
        let d2 = PolyMatrix::parse_rows(&r, &[&["y"], &["x"]]).unwrap();
        let c = ComplexData::new(vec![d1, d2], vec![1, 1]).unwrap();
        assert_eq!(verify_complex(&c).status, Status::Refuted);
    }

    #[test]
    fn unit_entry_not_minimal() {
        let r = Ring::rational(&["x"]);
        let d1 = PolyMatrix::parse_rows(&r, &[&["x", "1"]]).unwrap();
        let c = ComplexData::new(vec![d1], vec![1]).unwrap();
        let rep = resolution_minimal(&c);
        assert_eq!(rep.status, Status::Refuted);
        assert!(rep.replay());
        assert_eq!(minimal_generator_count(&c), None);
    }
}
