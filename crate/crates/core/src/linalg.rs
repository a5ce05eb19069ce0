//! Exact rational dense linear algebra.
//!
//! Everything here is exact: entries are arbitrary-precision rationals and
//! determinants are computed by fraction-free (Bareiss) elimination, so there
//! is no tolerance anywhere. Matrices are small and dense by design; the
//! intended scale is a handful of rows.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `numer/denom`. Panics if `denom` is zero; use [`str::parse`]
    /// for fallible construction from text.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! rational_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $imp<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $imp<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $imp<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"` with optional signs. Anything else,
    /// including decimal notation, is rejected: entries must stay exact.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational { input: s.to_string() };
        let t = s.trim();
        let (numer_str, denom_str) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let numer = BigInt::from_str(numer_str).map_err(|_| bad())?;
        let denom = BigInt::from_str(denom_str).map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            if let Some(n) = self.0.numer().to_i64() {
                return serializer.serialize_i64(n);
            }
        }
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RationalVisitor;

        impl Visitor<'_> for RationalVisitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_integer(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational(BigRational::from_integer(BigInt::from(v))))
            }

            fn visit_f64<E: de::Error>(self, _: f64) -> std::result::Result<Rational, E> {
                Err(E::custom(
                    "floating point entries are not accepted; write an integer or \"p/q\"",
                ))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(RationalVisitor)
    }
}

/// A dense matrix of exact rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::Dimension(format!(
                    "ragged rows: expected {} columns, found {}",
                    ncols,
                    r.len()
                )));
            }
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer literals in tests and examples.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| Rational::from_integer(n)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        RationalMatrix { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based position `(i, j)`. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }

    /// The submatrix picked out by 1-based row and column labels, in the
    /// order given. Labels are 1-based throughout the crate so that matrix
    /// columns line up with matroid ground-set elements.
    pub fn submatrix(&self, row_labels: &[usize], col_labels: &[usize]) -> Result<Self> {
        for &r in row_labels {
            if r == 0 || r > self.rows {
                return Err(Error::ElementOutOfRange { element: r, ground: self.rows });
            }
        }
        for &c in col_labels {
            if c == 0 || c > self.cols {
                return Err(Error::ElementOutOfRange { element: c, ground: self.cols });
            }
        }
        let entries = row_labels
            .iter()
            .flat_map(|&r| col_labels.iter().map(move |&c| self.get(r - 1, c - 1).clone()))
            .collect();
        RationalMatrix::new(row_labels.len(), col_labels.len(), entries)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. The empty
    /// matrix has determinant 1.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut m: Vec<Vec<Rational>> = self
            .entries
            .chunks(self.cols)
            .map(|row| row.to_vec())
            .collect();
        let mut negate = false;
        let mut prev = Rational::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            let (head, tail) = m.split_at_mut(k + 1);
            let row_k = &head[k];
            for row_i in tail.iter_mut() {
                for j in k + 1..n {
                    let a = &row_i[j] * &row_k[k];
                    let b = &row_i[k] * &row_k[j];
                    // Bareiss: the previous pivot divides exactly.
                    row_i[j] = (a - b) / &prev;
                }
                row_i[k] = Rational::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Rank over the rationals, by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Rational>> = self
            .entries
            .chunks(self.cols.max(1))
            .map(|row| row.to_vec())
            .collect();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(r) = (pivot_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, r);
            let (head, tail) = m.split_at_mut(pivot_row + 1);
            let pivot = &head[pivot_row];
            for row in tail.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] / &pivot[col];
                for j in col..self.cols {
                    row[j] = &row[j] - &(&factor * &pivot[j]);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// All maximal minors, keyed by the sorted 1-based column labels of the
    /// chosen columns. Requires `rows <= cols`.
    pub fn maximal_minors(&self) -> Result<std::collections::BTreeMap<Vec<usize>, Rational>> {
        if self.rows > self.cols {
            return Err(Error::Dimension(format!(
                "maximal minors of a {}x{} matrix need rows <= cols",
                self.rows, self.cols
            )));
        }
        let all_rows: Vec<usize> = (1..=self.rows).collect();
        let mut minors = std::collections::BTreeMap::new();
        for subset in (1..=self.cols).combinations(self.rows) {
            let d = self.submatrix(&all_rows, &subset)?.det()?;
            minors.insert(subset, d);
        }
        Ok(minors)
    }

    /// True iff the matrix has full row rank and every maximal minor is
    /// nonnegative (the defining property of a positroid's representing
    /// matrix). Requires `rows <= cols`.
    pub fn is_positroid_matrix(&self) -> Result<bool> {
        let minors = self.maximal_minors()?;
        let full_rank = minors.values().any(|d| !d.is_zero());
        let nonnegative = minors.values().all(|d| !d.is_negative());
        Ok(full_rank && nonnegative)
    }

    /// Extends an `n x n` matrix `A` to the `n x 2n` matrix `[ I | R ]`
    /// whose right block carries the rows of `A` bottom-up with alternating
    /// signs: in 1-based indices, `R[i][j] = (-1)^(n-i) * A[n+1-i][j]`. So
    /// the bottom row of the result repeats the first row of `A` unchanged,
    /// and signs alternate moving upward.
    ///
    /// The point of this layout: every minor of `A` on rows `I` and columns
    /// `J` reappears as the maximal minor of the extension on the column set
    /// [`k_set`]`(I, J, n)`.
    pub fn psi(&self) -> Result<RationalMatrix> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "psi of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut entries = vec![Rational::zero(); n * 2 * n];
        for i in 0..n {
            entries[i * 2 * n + i] = Rational::one();
            let src = n - 1 - i;
            let flip = src % 2 == 1;
            for j in 0..n {
                let v = self.get(src, j);
                entries[i * 2 * n + n + j] = if flip { -v } else { v.clone() };
            }
        }
        RationalMatrix::new(n, 2 * n, entries)
    }
}

/// The column set of the extended matrix that carries the `(I, J)` minor of
/// the original `n x n` matrix:
/// `K(I, J) = { n+1-k : k in [n] \ I }  union  { n+j : j in J }`.
///
/// `I` and `J` are subsets of `1..=n` and must have equal size; the result
/// is sorted and always has exactly `n` elements.
pub fn k_set(i_set: &[usize], j_set: &[usize], n: usize) -> Result<Vec<usize>> {
    for &x in i_set.iter().chain(j_set) {
        if x == 0 || x > n {
            return Err(Error::ElementOutOfRange { element: x, ground: n });
        }
    }
    let i_set: BTreeSet<usize> = i_set.iter().copied().collect();
    let j_set: BTreeSet<usize> = j_set.iter().copied().collect();
    if i_set.len() != j_set.len() {
        return Err(Error::SizeMismatch(format!(
            "row set has {} elements but column set has {}",
            i_set.len(),
            j_set.len()
        )));
    }
    let mut k: Vec<usize> = (1..=n)
        .filter(|x| !i_set.contains(x))
        .map(|x| n + 1 - x)
        .chain(j_set.iter().map(|&j| n + j))
        .collect();
    k.sort_unstable();
    debug_assert_eq!(k.len(), n);
    Ok(k)
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[Rational]> = if self.cols == 0 {
            vec![&[]; self.rows]
        } else {
            self.entries.chunks(self.cols).collect()
        };
        let mut s = serializer.serialize_struct("RationalMatrix", 3)?;
        s.serialize_field("rows", &self.rows)?;
        s.serialize_field("cols", &self.cols)?;
        s.serialize_field("entries", &rows)?;
        s.end()
    }
}

#[derive(Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Rational>>,
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        if raw.entries.len() != raw.rows {
            return Err(de::Error::custom(format!(
                "expected {} rows of entries, found {}",
                raw.rows,
                raw.entries.len()
            )));
        }
        for row in &raw.entries {
            if row.len() != raw.cols {
                return Err(de::Error::custom(format!(
                    "expected {} columns per row, found a row with {}",
                    raw.cols,
                    row.len()
                )));
            }
        }
        RationalMatrix::from_rows(raw.entries).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ones(n: usize) -> RationalMatrix {
        let row = vec![1i64; n];
        let rows: Vec<&[i64]> = (0..n).map(|_| row.as_slice()).collect();
        RationalMatrix::from_ints(&rows).unwrap()
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RationalMatrix {
        let entries = (0..rows * cols)
            .map(|_| Rational::from_integer(rng.random_range(-3..=3)))
            .collect();
        RationalMatrix::new(rows, cols, entries).unwrap()
    }

    /// Independent determinant oracle: cofactor expansion along the first row.
    fn cofactor_det(m: &RationalMatrix) -> Rational {
        let n = m.rows();
        assert_eq!(n, m.cols());
        if n == 0 {
            return Rational::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut total = Rational::zero();
        for j in 0..n {
            if m.get(0, j).is_zero() {
                continue;
            }
            let rows: Vec<usize> = (2..=n).collect();
            let cols: Vec<usize> = (1..=n).filter(|&c| c != j + 1).collect();
            let minor = cofactor_det(&m.submatrix(&rows, &cols).unwrap());
            let term = m.get(0, j) * &minor;
            total = if j % 2 == 0 { total + term } else { total - term };
        }
        total
    }

    fn rank2_example() -> RationalMatrix {
        RationalMatrix::from_ints(&[&[1, 0, -1, -1], &[0, 1, 1, 1]]).unwrap()
    }

    #[test]
    fn det_of_identity_is_one() {
        assert_eq!(RationalMatrix::identity(2).det().unwrap(), Rational::one());
        assert_eq!(RationalMatrix::identity(5).det().unwrap(), Rational::one());
    }

    #[test]
    fn det_of_empty_matrix_is_one() {
        let m = RationalMatrix::new(0, 0, vec![]).unwrap();
        assert_eq!(m.det().unwrap(), Rational::one());
    }

    #[test]
    fn det_distinguishes_column_pairs_of_rank2_example() {
        let m = rank2_example();
        let d12 = m.submatrix(&[1, 2], &[1, 2]).unwrap().det().unwrap();
        assert_eq!(d12, Rational::one());
        let d34 = m.submatrix(&[1, 2], &[3, 4]).unwrap().det().unwrap();
        assert!(d34.is_zero());
    }

    #[test]
    fn det_requires_square_input() {
        let m = rank2_example();
        assert!(matches!(m.det(), Err(Error::Dimension(_))));
    }

    #[test]
    fn det_matches_cofactor_oracle_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xB0A7);
        for n in 1..=5 {
            for _ in 0..20 {
                let m = random_matrix(&mut rng, n, n);
                assert_eq!(m.det().unwrap(), cofactor_det(&m), "n={n} matrix {m:?}");
            }
        }
    }

    #[test]
    fn det_handles_zero_pivots_via_row_swaps() {
        let m = RationalMatrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(m.det().unwrap(), Rational::from_integer(-1));
        let m = RationalMatrix::from_ints(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).unwrap();
        assert_eq!(m.det().unwrap(), Rational::from_integer(-1));
    }

    #[test]
    fn rank_of_examples() {
        assert_eq!(rank2_example().rank(), 2);
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
        let zero = RationalMatrix::new(2, 3, vec![Rational::zero(); 6]).unwrap();
        assert_eq!(zero.rank(), 0);
        let dependent = RationalMatrix::from_ints(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(dependent.rank(), 1);
    }

    #[test]
    fn maximal_minors_of_rank2_example() {
        let minors = rank2_example().maximal_minors().unwrap();
        assert_eq!(minors.len(), 6);
        let nonzero: Vec<Vec<usize>> = minors
            .iter()
            .filter(|(_, d)| !d.is_zero())
            .map(|(k, _)| k.clone())
            .collect();
        assert_eq!(
            nonzero,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
        assert!(minors.values().all(|d| !d.is_negative()));
    }

    #[test]
    fn maximal_minors_of_square_matrix_is_single_det() {
        let m = RationalMatrix::from_ints(&[&[2, 1], &[1, 2]]).unwrap();
        let minors = m.maximal_minors().unwrap();
        assert_eq!(minors.len(), 1);
        assert_eq!(minors[&vec![1, 2]], Rational::from_integer(3));
    }

    #[test]
    fn maximal_minors_reject_tall_matrices() {
        let m = RationalMatrix::from_ints(&[&[1], &[2]]).unwrap();
        assert!(matches!(m.maximal_minors(), Err(Error::Dimension(_))));
    }

    #[test]
    fn psi_of_all_ones_has_ten_nonzero_minors_for_n3() {
        let b = ones(3).psi().unwrap();
        let nonzero = b
            .maximal_minors()
            .unwrap()
            .values()
            .filter(|d| !d.is_zero())
            .count();
        assert_eq!(nonzero, 10);
    }

    #[test]
    fn positroid_test_accepts_psi_of_all_ones() {
        assert!(ones(2).psi().unwrap().is_positroid_matrix().unwrap());
        assert_eq!(ones(2).psi().unwrap(), rank2_example());
    }

    #[test]
    fn positroid_test_rejects_negative_minor() {
        let m = RationalMatrix::from_ints(&[&[1, 0], &[0, -1]]).unwrap();
        assert!(!m.is_positroid_matrix().unwrap());
    }

    #[test]
    fn positroid_test_rejects_rank_deficient() {
        let m = RationalMatrix::from_ints(&[&[1, 1], &[1, 1]]).unwrap();
        assert!(!m.is_positroid_matrix().unwrap());
    }

    #[test]
    fn positroid_test_accepts_staircase_antiadjacency() {
        let d = RationalMatrix::from_ints(&[&[1, 1, 0], &[1, 1, 1], &[1, 1, 1]]).unwrap();
        assert!(d.psi().unwrap().is_positroid_matrix().unwrap());
    }

    #[test]
    fn psi_of_all_ones_2x2() {
        assert_eq!(ones(2).psi().unwrap(), rank2_example());
    }

    #[test]
    fn psi_of_all_ones_1x1() {
        let expected = RationalMatrix::from_ints(&[&[1, 1]]).unwrap();
        assert_eq!(ones(1).psi().unwrap(), expected);
    }

    #[test]
    fn psi_sign_pattern_for_n3() {
        let expected = RationalMatrix::from_ints(&[
            &[1, 0, 0, 1, 1, 1],
            &[0, 1, 0, -1, -1, -1],
            &[0, 0, 1, 1, 1, 1],
        ])
        .unwrap();
        assert_eq!(ones(3).psi().unwrap(), expected);
    }

    #[test]
    fn psi_requires_square_input() {
        assert!(matches!(rank2_example().psi(), Err(Error::Dimension(_))));
    }

    #[test]
    fn k_set_examples() {
        assert_eq!(k_set(&[1], &[2], 2).unwrap(), vec![1, 4]);
        assert_eq!(k_set(&[1, 2], &[1, 2], 2).unwrap(), vec![3, 4]);
        assert_eq!(k_set(&[], &[], 2).unwrap(), vec![1, 2]);
    }

    #[test]
    fn k_set_rejects_size_mismatch() {
        assert!(matches!(
            k_set(&[1, 3], &[2], 3),
            Err(Error::SizeMismatch(_))
        ));
    }

    #[test]
    fn k_set_rejects_out_of_range_elements() {
        assert!(matches!(
            k_set(&[4], &[1], 3),
            Err(Error::ElementOutOfRange { element: 4, ground: 3 })
        ));
    }

    #[test]
    fn minor_identity_holds_exhaustively_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1D37);
        for n in 1..=4usize {
            let all_rows: Vec<usize> = (1..=n).collect();
            for _ in 0..20 {
                let a = random_matrix(&mut rng, n, n);
                let b = a.psi().unwrap();
                for k in 0..=n {
                    for i_set in (1..=n).combinations(k) {
                        for j_set in (1..=n).combinations(k) {
                            let lhs = a.submatrix(&i_set, &j_set).unwrap().det().unwrap();
                            let cols = k_set(&i_set, &j_set, n).unwrap();
                            let rhs = b.submatrix(&all_rows, &cols).unwrap().det().unwrap();
                            assert_eq!(lhs, rhs, "n={n} I={i_set:?} J={j_set:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn psi_always_has_identity_left_block() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xF00D);
        for n in 1..=5usize {
            let a = random_matrix(&mut rng, n, n);
            let b = a.psi().unwrap();
            let labels: Vec<usize> = (1..=n).collect();
            let left = b.submatrix(&labels, &labels).unwrap();
            assert_eq!(left, RationalMatrix::identity(n));
        }
    }

    #[test]
    fn rational_parsing_and_display() {
        let half: Rational = "1/2".parse().unwrap();
        assert_eq!(half, Rational::new(1, 2));
        assert_eq!(half.to_string(), "1/2");
        let neg: Rational = "-3/6".parse().unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        let int: Rational = "7".parse().unwrap();
        assert_eq!(int.to_string(), "7");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("0.5".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
    }

    #[test]
    fn rational_arithmetic() {
        let a = Rational::new(1, 2);
        let b = Rational::new(1, 3);
        assert_eq!(&a + &b, Rational::new(5, 6));
        assert_eq!(&a - &b, Rational::new(1, 6));
        assert_eq!(&a * &b, Rational::new(1, 6));
        assert_eq!(&a / &b, Rational::new(3, 2));
        assert_eq!(-&a, Rational::new(-1, 2));
        assert!(Rational::new(-1, 2).is_negative());
        assert!(Rational::new(4, 2).is_integer());
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = RationalMatrix::from_rows(vec![
            vec![Rational::new(1, 2), Rational::from_integer(-3)],
            vec![Rational::zero(), Rational::new(7, 5)],
        ])
        .unwrap();
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(
            text,
            r#"{"rows":2,"cols":2,"entries":[["1/2",-3],[0,"7/5"]]}"#
        );
        let back: RationalMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn matrix_json_rejects_floats_and_bad_shapes() {
        let float = r#"{"rows":1,"cols":1,"entries":[[0.5]]}"#;
        let err = serde_json::from_str::<RationalMatrix>(float).unwrap_err();
        assert!(err.to_string().contains("floating point"), "{err}");
        let ragged = r#"{"rows":2,"cols":2,"entries":[[1,2],[3]]}"#;
        assert!(serde_json::from_str::<RationalMatrix>(ragged).is_err());
        let short = r#"{"rows":3,"cols":1,"entries":[[1]]}"#;
        assert!(serde_json::from_str::<RationalMatrix>(short).is_err());
    }
}
