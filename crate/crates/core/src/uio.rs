//! Unit interval orders and Catalan counting.
//!
//! A unit interval order on `n` elements is a poset admitting a
//! representation by closed unit intervals `[q_i, q_i + 1]` with
//! `i < j` in the order iff `q_i + 1 < q_j`. With the proper (weakly
//! increasing) labeling, the order is captured entirely by its
//! antiadjacency matrix, an n-by-n 0/1 matrix whose zeros sit in a
//! right-justified staircase. The staircase is encoded here as a
//! *zero-profile*: `z_i` counts the zeros in row `i`, and a sequence is a
//! valid profile iff it is weakly decreasing with `z_i <= n - i` (so
//! `z_n = 0`). Profiles of length `n` are counted by the Catalan numbers.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};

/// A Catalan number; arbitrary precision so counting never saturates.
pub type CatalanValue = BigUint;

/// An `n`-element unit interval order, canonically represented by its
/// zero-profile.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitIntervalOrder {
    n: usize,
    profile: Vec<usize>,
}

impl UnitIntervalOrder {
    /// Validates a zero-profile: weakly decreasing and `z_i <= n - i`.
    pub fn new(profile: Vec<usize>) -> Result<Self> {
        let n = profile.len();
        for i in 0..n {
            if profile[i] > n - (i + 1) {
                return Err(Error::InvalidProfile {
                    profile,
                    reason: format!("entry {} exceeds its bound {}", i + 1, n - (i + 1)),
                });
            }
            if i + 1 < n && profile[i] < profile[i + 1] {
                return Err(Error::InvalidProfile {
                    profile,
                    reason: format!("entries {} and {} increase", i + 1, i + 2),
                });
            }
        }
        Ok(UnitIntervalOrder { n, profile })
    }

    /// The antichain: no relations, all-ones antiadjacency matrix.
    pub fn trivial(n: usize) -> Self {
        UnitIntervalOrder { n, profile: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    /// True iff `i` is below `j` in the order (1-based labels).
    pub fn less(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.n && j <= self.n && j > self.n - self.profile[i - 1]
    }

    /// The antiadjacency matrix: row `i` has ones in columns
    /// `1..=n-z_i` and zeros in the trailing `z_i` columns, so entry
    /// `(i, j)` is zero exactly when `i` is below `j` in the order.
    pub fn antiadjacency(&self) -> RationalMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for &z in &self.profile {
            for j in 1..=n {
                entries.push(if j <= n - z { Rational::one() } else { Rational::zero() });
            }
        }
        RationalMatrix::new(n, n, entries).expect("profile length fixes the shape")
    }

    /// A concrete interval representation: left endpoints `q`, weakly
    /// increasing, with `q_i + 1 < q_j` exactly for the order's relations.
    /// All endpoints are exact rationals; the construction is verified
    /// against the profile before returning.
    pub fn interval_realization(&self) -> Vec<Rational> {
        let n = self.n;
        let mut q: Vec<Rational> = Vec::with_capacity(n);
        if n == 0 {
            return q;
        }
        // r[i] = largest column with a one in row i+1 (0-based storage).
        let r: Vec<usize> = self.profile.iter().map(|&z| n - z).collect();
        q.push(Rational::zero());
        let half = Rational::new(1, 2);
        for j in 2..=n {
            // p = how many elements sit below j; they form a prefix.
            let p = (1..j).filter(|&i| r[i - 1] < j).count();
            let prev = q[j - 2].clone();
            let lower_strict = if p >= 1 { Some(&q[p - 1] + Rational::one()) } else { None };
            let upper = if p + 1 < j { Some(&q[p] + Rational::one()) } else { None };
            let strict_over_prev = r[j - 2] < r[j - 1];
            let value = match lower_strict {
                Some(lo) if lo >= prev => {
                    // Must land strictly above lo, at most at the upper bound.
                    match &upper {
                        Some(u) => {
                            assert!(lo < *u, "infeasible profile step");
                            (&lo + u) / Rational::from_integer(2)
                        }
                        None => &lo + &half,
                    }
                }
                _ if strict_over_prev => match &upper {
                    Some(u) => {
                        assert!(prev < *u, "infeasible profile step");
                        (&prev + u) / Rational::from_integer(2)
                    }
                    None => &prev + &half,
                },
                _ => prev,
            };
            q.push(value);
        }
        // The construction is delicate; verify every pair before returning.
        for i in 1..=n {
            for j in 1..=n {
                let related = &q[i - 1] + Rational::one() < q[j - 1];
                assert_eq!(
                    related,
                    self.less(i, j),
                    "realization violates the order at ({i}, {j})"
                );
            }
        }
        q
    }
}

/// The `n`-th Catalan number by the closed form `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> CatalanValue {
    let big_n = BigUint::from(n);
    binomial(&big_n + &big_n, big_n) / BigUint::from(n + 1)
}

/// The `n`-th Catalan number by the convolution recursion
/// `C_{k+1} = sum_i C_i * C_{k-i}` with `C_0 = 1`; an independent
/// cross-check for [`catalan`].
pub fn catalan_convolution(n: usize) -> CatalanValue {
    let mut c: Vec<BigUint> = Vec::with_capacity(n + 1);
    c.push(BigUint::one());
    for k in 0..n {
        let mut next = BigUint::zero();
        for i in 0..=k {
            next += &c[i] * &c[k - i];
        }
        c.push(next);
    }
    c.pop().expect("built n+1 values")
}

/// Every unit interval order on `n` elements, as zero-profiles in ascending
/// lexicographic order. The count is the `n`-th Catalan number.
pub fn enumerate_uios(n: usize) -> Vec<UnitIntervalOrder> {
    fn extend(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<UnitIntervalOrder>) {
        let i = prefix.len();
        if i == n {
            out.push(UnitIntervalOrder { n, profile: prefix.clone() });
            return;
        }
        let cap = (n - (i + 1)).min(prefix.last().copied().unwrap_or(usize::MAX));
        for z in 0..=cap {
            prefix.push(z);
            extend(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

/// Ingests left endpoints of unit intervals (weakly increasing, i.e. a
/// proper labeling) and returns the induced order's zero-profile.
pub fn uio_from_intervals(q: &[Rational]) -> Result<UnitIntervalOrder> {
    for w in q.windows(2) {
        if w[0] > w[1] {
            return Err(Error::UnsortedIntervals(w[1].to_string(), w[0].to_string()));
        }
    }
    let n = q.len();
    let one = Rational::one();
    let profile: Vec<usize> = (0..n)
        .map(|i| {
            let threshold = &q[i] + &one;
            // Sorted input makes {j : q_j > q_i + 1} a suffix of equal length
            // to the zero block of row i+1.
            q.iter().filter(|v| **v > threshold).count()
        })
        .collect();
    UnitIntervalOrder::new(profile)
}

#[derive(Serialize, Deserialize)]
struct UioJson {
    n: usize,
    profile: Vec<usize>,
}

impl Serialize for UnitIntervalOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        UioJson { n: self.n, profile: self.profile.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UnitIntervalOrder {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = UioJson::deserialize(deserializer)?;
        if raw.profile.len() != raw.n {
            return Err(de::Error::custom(format!(
                "declared n = {} but profile has {} entries",
                raw.n,
                raw.profile.len()
            )));
        }
        UnitIntervalOrder::new(raw.profile).map_err(de::Error::custom)
    }
}
