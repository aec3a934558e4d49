//! Dense matrices of polynomials: products, minors, maximal-minor sets.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// Selections of at least this size go through fraction-free elimination.
const BAREISS_THRESHOLD: usize = 4;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    /// Row-major construction. All entries must live in `ring`.
    pub fn new(ring: &RingRef, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let entries = entries
            .into_iter()
            .map(|p| p.to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: &RingRef, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        PolyMatrix::new(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Parses each cell with the ring's polynomial parser.
    pub fn parse_rows(ring: &RingRef, rows: &[&[&str]]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|c| ring.parse(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(ring, parsed)
    }

    pub fn zero(ring: &RingRef, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &RingRef, n: usize) -> Self {
        let mut m = PolyMatrix::zero(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(ring);
        }
        m
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, p)| (k / self.cols, k % self.cols, p))
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn map_entries(&self, ring: &RingRef, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(ring, self.rows, self.cols, entries)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let other = other.map_entries(&self.ring, |p| p.to_ring(&self.ring))?;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Square submatrix on the given rows and columns, taken in the order listed.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<PolyMatrix> {
        for &r in rows {
            if r >= self.rows {
                return Err(Error::IndexOutOfRange { index: r, bound: self.rows });
            }
        }
        for &c in cols {
            if c >= self.cols {
                return Err(Error::IndexOutOfRange { index: c, bound: self.cols });
            }
        }
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        })
    }

    /// Determinant of the submatrix on `rows` x `cols` (0-based). Indices are
    /// sorted ascending first, which fixes the sign.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
        if rows.len() != cols.len() {
            return Err(Error::NonSquareSelection {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        let mut r = rows.to_vec();
        let mut c = cols.to_vec();
        r.sort_unstable();
        c.sort_unstable();
        if r.windows(2).any(|w| w[0] == w[1]) || c.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DimensionMismatch("repeated index in minor selection".into()));
        }
        let sub = self.submatrix(&r, &c)?;
        Ok(sub.det())
    }

    /// Determinant of a square matrix; cofactor expansion below size 4, Bareiss otherwise.
    pub fn det(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        if self.rows < BAREISS_THRESHOLD {
            self.cofactor_det()
        } else {
            self.bareiss_det()
        }
    }

    /// Laplace expansion along `row`, recursing along the first row.
    pub fn laplace_det(&self, row: usize) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        if n == 1 {
            return self.entries[0].clone();
        }
        let mut acc = Polynomial::zero(&self.ring);
        let other_rows: Vec<usize> = (0..n).filter(|&i| i != row).collect();
        for j in 0..n {
            let a = self.get(row, j);
            if a.is_zero() {
                continue;
            }
            let other_cols: Vec<usize> = (0..n).filter(|&k| k != j).collect();
            let sub = self.submatrix(&other_rows, &other_cols).expect("in range");
            let term = a * &sub.laplace_det(0);
            if (row + j) % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }

    fn cofactor_det(&self) -> Polynomial {
        self.laplace_det(0)
    }

    fn bareiss_det(&self) -> Polynomial {
        let n = self.rows;
        let mut m: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = Polynomial::one(&self.ring);
        for k in 0..n.saturating_sub(1) {
            // pivot: sparsest nonzero entry in column k
            let pivot = (k..n)
                .filter(|&i| !m[i][k].is_zero())
                .min_by_key(|&i| m[i][k].len());
            let Some(p) = pivot else {
                return Polynomial::zero(&self.ring);
            };
            if p != k {
                m.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss step divides exactly");
                }
                m[i][k] = Polynomial::zero(&self.ring);
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// All `t`x`t` minors as a canonical set: sign-normalized, deduplicated, sorted.
    pub fn maximal_minors(&self, t: usize) -> Result<Vec<Polynomial>> {
        self.check_size(t)?;
        let selections = minor_selections(self.rows, self.cols, t);
        let mut minors: Vec<Polynomial> = selections
            .par_iter()
            .map(|(r, c)| self.minor(r, c).map(|p| p.sign_normalized()))
            .collect::<Result<Vec<_>>>()?;
        minors.sort_by(|a, b| a.cmp_terms(b));
        minors.dedup();
        Ok(minors)
    }

    /// First `t`x`t` selection (in lexicographic order) with nonzero minor, if any.
    pub fn first_nonzero_minor(&self, t: usize) -> Result<Option<(Vec<usize>, Vec<usize>, Polynomial)>> {
        self.check_size(t)?;
        let selections = minor_selections(self.rows, self.cols, t);
        Ok(selections.into_par_iter().find_map_first(|(r, c)| {
            let m = self.minor(&r, &c).expect("valid selection");
            (!m.is_zero()).then_some((r, c, m))
        }))
    }

    /// True iff every `t`x`t` minor vanishes. Vacuous when `t` exceeds a dimension.
    pub fn minors_vanish(&self, t: usize) -> bool {
        if t > self.rows || t > self.cols {
            return true;
        }
        matches!(self.first_nonzero_minor(t), Ok(None))
    }

    pub fn minor_count(&self, t: usize) -> usize {
        binomial(self.rows, t) * binomial(self.cols, t)
    }

    fn check_size(&self, t: usize) -> Result<()> {
        if t == 0 || t > self.rows.min(self.cols) {
            return Err(Error::DimensionMismatch(format!(
                "minor size {t} for a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix({}x{}) {self}", self.rows, self.cols)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn minor_selections(rows: usize, cols: usize, t: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let rs = combinations(rows, t);
    let cs = combinations(cols, t);
    let mut out = Vec::with_capacity(rs.len() * cs.len());
    for r in &rs {
        for c in &cs {
            out.push((r.clone(), c.clone()));
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(8, 8).len(), 1);
        assert_eq!(combinations(12, 8).len(), 495);
        assert!(combinations(2, 3).is_empty());
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn identity_is_neutral() {
        let r = Ring::rational(&["x", "y"]);
        let a = PolyMatrix::parse_rows(&r, &[&["x", "y", "1"], &["x*y", "0", "x-y"]]).unwrap();
        assert_eq!(PolyMatrix::identity(&r, 2).mul(&a).unwrap(), a);
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn one_by_one_minor_is_entry() {
        let r = Ring::rational(&["x", "y"]);
        let a = PolyMatrix::parse_rows(&r, &[&["x", "y"], &["x*y", "2"]]).unwrap();
        assert_eq!(a.minor(&[1], &[0]).unwrap(), r.parse("x*y").unwrap());
        assert!(matches!(a.minor(&[0, 1], &[0]), Err(Error::NonSquareSelection { .. })));
        assert!(matches!(a.minor(&[2], &[0]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let r = Ring::rational(&["x", "y", "z"]);
        let a = PolyMatrix::parse_rows(
            &r,
            &[
                &["x", "y", "0", "1", "z"],
                &["0", "x*y", "z", "x", "0"],
                &["y", "0", "x^2", "0", "1"],
                &["1", "z", "0", "y", "x"],
                &["z", "0", "1", "0", "y^2"],
            ],
        )
        .unwrap();
        assert_eq!(a.bareiss_det(), a.laplace_det(0));
        assert_eq!(a.laplace_det(2), a.laplace_det(4));
    }

    #[test]
    fn zero_matrix_minors() {
        let r = Ring::rational(&["x"]);
        let z = PolyMatrix::zero(&r, 3, 4);
        assert_eq!(z.maximal_minors(2).unwrap(), vec![Polynomial::zero(&r)]);
        assert!(z.minors_vanish(3));
    }
}
