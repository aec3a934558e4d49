//! Smallest positive integer weight vector solving homogeneous relations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CertificateReport, Check, Status};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Primitive positive integer vector spanning the solution space of
/// `relations · v = 0` in `nsymbols` unknowns.
///
/// Fails with [`Error::SolutionDimension`] unless the solution space is a
/// line, and with [`Error::NoPositiveSolution`] when that line has no
/// strictly positive point.
pub fn smallest_valuation_vector(relations: &[Vec<i64>], nsymbols: usize) -> Result<Vec<i64>> {
    if let Some(r) = relations.iter().find(|r| r.len() != nsymbols) {
        return Err(Error::DimensionMismatch(format!(
            "relation of length {} for {nsymbols} unknowns",
            r.len()
        )));
    }
    let kernel = rational_kernel(relations, nsymbols);
    if kernel.len() != 1 {
        return Err(Error::SolutionDimension(kernel.len()));
    }
    let v = primitive(&kernel[0]);
    let v = if v.iter().all(|x| !x.is_positive()) {
        v.into_iter().map(|x| -x).collect()
    } else {
        v
    };
    if v.iter().any(|x| !x.is_positive()) {
        return Err(Error::NoPositiveSolution);
    }
    v.iter()
        .map(|x| x.to_i64().ok_or(Error::NoPositiveSolution))
        .collect()
}

/// Exponent difference `a - b` of a binomial `c·x^a + d·x^b`.
pub fn relation_from_binomial(f: &Polynomial) -> Option<Vec<i64>> {
    let [a, b] = f.terms() else { return None };
    Some(
        a.mon
            .exponents()
            .iter()
            .zip(b.mon.exponents())
            .map(|(&p, &q)| p as i64 - q as i64)
            .collect(),
    )
}

/// Computes the vector and wraps it in a report whose claim is the printed
/// `expected` vector (if any). A mismatch refutes the printed vector.
pub fn valuation_report(relations: &[Vec<i64>], nsymbols: usize, expected: Option<&[i64]>) -> CertificateReport {
    super::timed(|| {
        let claim = match expected {
            Some(e) => format!("smallest valuation vector is {e:?}"),
            None => "smallest valuation vector exists".to_string(),
        };
        match smallest_valuation_vector(relations, nsymbols) {
            Ok(v) => {
                let check = Check::Relations {
                    relations: relations.to_vec(),
                    solution: v.clone(),
                };
                match expected {
                    Some(e) if e != v.as_slice() => {
                        CertificateReport::new(claim, Status::Refuted, vec![check])
                            .with_note(format!("the relations force {v:?}, not {e:?}"))
                    }
                    _ => CertificateReport::new(claim, Status::Verified, vec![check])
                        .with_note(format!("computed {v:?}")),
                }
            }
            Err(e) => CertificateReport::new(claim, Status::Inconclusive, Vec::new()).with_note(e.to_string()),
        }
    })
}

pub(crate) fn satisfies(relations: &[Vec<i64>], solution: &[i64]) -> bool {
    let homogeneous = relations.iter().all(|r| {
        r.len() == solution.len() && r.iter().zip(solution).map(|(a, b)| (*a as i128) * (*b as i128)).sum::<i128>() == 0
    });
    let g = solution.iter().fold(0i64, |g, x| g.gcd(x));
    homogeneous && g == 1 && solution.iter().all(|x| *x > 0)
}

fn rational_kernel(relations: &[Vec<i64>], n: usize) -> Vec<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> = relations
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in 0..n {
                    let d = &factor * &rows[rank][j];
                    rows[i][j] -= d;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); n];
            v[free] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][free].clone();
            }
            v
        })
        .collect()
}

fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn single_relation() {
        assert_eq!(smallest_valuation_vector(&[vec![2, -3]], 2).unwrap(), vec![3, 2]);
    }

    #[test]
    fn four_symbol_system() {
        // 3c = 5a, 3d = 2a + 3b, 4b = 5a in unknowns (a, b, c, d).
        let rel = vec![vec![-5, 0, 3, 0], vec![-2, -3, 0, 3], vec![-5, 4, 0, 0]];
        assert_eq!(smallest_valuation_vector(&rel, 4).unwrap(), vec![12, 15, 20, 23]);
        let rep = valuation_report(&rel, 4, Some(&[12, 15, 29, 23]));
        assert_eq!(rep.status, Status::Refuted);
        assert!(rep.replay());
    }

    #[test]
    fn errors() {
        assert_eq!(smallest_valuation_vector(&[vec![1, 1]], 2), Err(Error::NoPositiveSolution));
        assert_eq!(smallest_valuation_vector(&[], 2), Err(Error::SolutionDimension(2)));
        assert_eq!(smallest_valuation_vector(&[], 1).unwrap(), vec![1]);
    }

    #[test]
    fn binomial_relation() {
        let r = Ring::rational(&["x", "y"]);
        let f = r.parse("y^2 - x^3").unwrap();
        let rel = relation_from_binomial(&f).unwrap();
        assert_eq!(smallest_valuation_vector(&[rel], 2).unwrap(), vec![2, 3]);
        assert!(relation_from_binomial(&r.parse("x").unwrap()).is_none());
    }
}
