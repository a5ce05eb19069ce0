//! Matroids as explicit basis collections.
//!
//! A matroid is stored by its full list of bases, which is the natural shape
//! for everything downstream: poset construction needs the basis list anyway,
//! matroid equality is list equality, and all instances of interest have at
//! most a few dozen bases. Construction always validates the basis axioms, no
//! matter which code path built the basis list.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

/// A basis or circuit: a sorted list of 1-based ground-set elements.
pub type Subset = Vec<usize>;

/// A matroid `(E, B)` with ground set `E = {1, ..., ground}` and an explicit
/// list of bases, kept sorted (each basis ascending, the list lexicographic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    ground: usize,
    rank: usize,
    bases: Vec<Subset>,
    /// Bitmask per basis, bit `e-1` for element `e`; same order as `bases`.
    masks: Vec<u64>,
}

pub(crate) fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &e| m | 1 << (e - 1))
}

pub(crate) fn set_of(mask: u64) -> Subset {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

impl Matroid {
    /// Validates the basis axioms and builds the matroid: the list must be
    /// nonempty, all bases equal-sized subsets of `1..=ground`, and every
    /// pair must satisfy the exchange property. Duplicate bases are merged.
    pub fn from_bases(ground: usize, bases: Vec<Subset>) -> Result<Self> {
        if ground > 64 {
            return Err(Error::GroundTooLarge(ground));
        }
        if bases.is_empty() {
            return Err(Error::EmptyBases);
        }
        let mut normalized: Vec<Subset> = Vec::with_capacity(bases.len());
        for mut b in bases {
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedElement { basis: b });
            }
            for &e in &b {
                if e == 0 || e > ground {
                    return Err(Error::ElementOutOfRange { element: e, ground });
                }
            }
            normalized.push(b);
        }
        normalized.sort();
        normalized.dedup();
        let rank = normalized[0].len();
        if let Some(other) = normalized.iter().find(|b| b.len() != rank) {
            return Err(Error::UnequalBasisSizes(rank, other.len()));
        }
        let masks: Vec<u64> = normalized.iter().map(|b| mask_of(b)).collect();
        let mask_set: BTreeSet<u64> = masks.iter().copied().collect();
        // Exchange axiom, checked exhaustively over ordered pairs.
        for (i, b1) in normalized.iter().enumerate() {
            for (j, _) in normalized.iter().enumerate() {
                let diff = masks[i] & !masks[j];
                for e in set_of(diff) {
                    let without = masks[i] & !(1 << (e - 1));
                    let candidates = masks[j] & !masks[i];
                    let ok = set_of(candidates)
                        .iter()
                        .any(|&f| mask_set.contains(&(without | 1 << (f - 1))));
                    if !ok {
                        return Err(Error::ExchangeFailure {
                            b1: b1.clone(),
                            b2: normalized[j].clone(),
                            element: e,
                        });
                    }
                }
            }
        }
        Ok(Matroid { ground, rank, bases: normalized, masks })
    }

    /// The matroid realized by a full-row-rank matrix: bases are the column
    /// sets whose maximal minor is nonzero.
    pub fn from_matrix(m: &RationalMatrix) -> Result<Self> {
        let minors = m.maximal_minors()?;
        let bases: Vec<Subset> = minors
            .into_iter()
            .filter(|(_, d)| !d.is_zero())
            .map(|(cols, _)| cols)
            .collect();
        if bases.is_empty() {
            return Err(Error::RankDeficient);
        }
        Self::from_bases(m.cols(), bases)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, s: &[usize]) -> bool {
        let mut s = s.to_vec();
        s.sort_unstable();
        self.bases.binary_search(&s).is_ok()
    }

    /// True iff `s` is contained in some basis.
    pub fn is_independent(&self, s: &[usize]) -> Result<bool> {
        for &e in s {
            if e == 0 || e > self.ground {
                return Err(Error::ElementOutOfRange { element: e, ground: self.ground });
            }
        }
        let m = mask_of(s);
        Ok(self.masks.iter().any(|&b| m & !b == 0))
    }

    fn is_independent_mask(&self, m: u64) -> bool {
        self.masks.iter().any(|&b| m & !b == 0)
    }

    /// All circuits (minimal dependent sets), sorted lexicographically.
    ///
    /// Every circuit has at most `rank + 1` elements, so the scan stops
    /// there; each dependent set is kept only if all its one-element
    /// deletions are independent.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut found: Vec<Subset> = Vec::new();
        let mut circuit_masks: Vec<u64> = Vec::new();
        for size in 1..=self.rank + 1 {
            for cand in (1..=self.ground).combinations(size) {
                let m = mask_of(&cand);
                if self.is_independent_mask(m) {
                    continue;
                }
                // A set strictly containing a smaller circuit is not minimal.
                if circuit_masks.iter().any(|&c| c & !m == 0) {
                    continue;
                }
                let minimal = cand
                    .iter()
                    .all(|&e| self.is_independent_mask(m & !(1 << (e - 1))));
                if minimal {
                    circuit_masks.push(m);
                    found.push(cand);
                }
            }
        }
        found.sort();
        found
    }

    /// Deletes element `e` and relabels the remaining ground set to
    /// `1..=ground-1`, preserving order. Returns the minor together with the
    /// relabeling map: `map[new_label - 1] == old_label`.
    ///
    /// Bases of the minor are the bases avoiding `e`; if every basis
    /// contains `e` (a coloop), the maximal independent sets avoiding `e`
    /// are exactly the sets `B - {e}`, and those are used instead.
    pub fn delete(&self, e: usize) -> Result<(Matroid, Vec<usize>)> {
        if e == 0 || e > self.ground {
            return Err(Error::ElementOutOfRange { element: e, ground: self.ground });
        }
        let avoiding: Vec<Subset> = self
            .bases
            .iter()
            .filter(|b| !b.contains(&e))
            .cloned()
            .collect();
        let new_bases = if avoiding.is_empty() {
            self.bases
                .iter()
                .map(|b| b.iter().copied().filter(|&x| x != e).collect())
                .collect()
        } else {
            avoiding
        };
        self.relabel_without(e, new_bases)
    }

    /// Contracts element `e` and relabels as in [`delete`](Self::delete):
    /// bases become `B - {e}` for each basis containing `e`. A loop (an
    /// element in no basis) cannot be contracted meaningfully, so loops are
    /// deleted instead.
    pub fn contract(&self, e: usize) -> Result<(Matroid, Vec<usize>)> {
        if e == 0 || e > self.ground {
            return Err(Error::ElementOutOfRange { element: e, ground: self.ground });
        }
        let containing: Vec<Subset> = self
            .bases
            .iter()
            .filter(|b| b.contains(&e))
            .map(|b| b.iter().copied().filter(|&x| x != e).collect())
            .collect();
        if containing.is_empty() {
            return self.delete(e);
        }
        self.relabel_without(e, containing)
    }

    fn relabel_without(&self, e: usize, bases: Vec<Subset>) -> Result<(Matroid, Vec<usize>)> {
        let map: Vec<usize> = (1..=self.ground).filter(|&x| x != e).collect();
        let relabeled = bases
            .into_iter()
            .map(|b| b.into_iter().map(|x| if x > e { x - 1 } else { x }).collect())
            .collect();
        let minor = Matroid::from_bases(self.ground - 1, relabeled)?;
        Ok((minor, map))
    }

    /// Brute-force isomorphism test: true iff some bijection of the ground
    /// sets maps bases onto bases. Ground size, rank, basis count, and the
    /// multiset of element degrees are checked first; then all permutations
    /// are scanned. Intended for ground sets of size at most 8.
    pub fn is_isomorphic_to(&self, other: &Matroid) -> bool {
        if self.ground != other.ground
            || self.rank != other.rank
            || self.bases.len() != other.bases.len()
        {
            return false;
        }
        let degree = |m: &Matroid| -> Vec<usize> {
            (1..=m.ground)
                .map(|e| m.masks.iter().filter(|&&b| b >> (e - 1) & 1 == 1).count())
                .collect()
        };
        let deg_self = degree(self);
        let deg_other = degree(other);
        let mut sorted_self = deg_self.clone();
        let mut sorted_other = deg_other.clone();
        sorted_self.sort_unstable();
        sorted_other.sort_unstable();
        if sorted_self != sorted_other {
            return false;
        }
        let mut target: Vec<u64> = other.masks.clone();
        target.sort_unstable();
        let elements: Vec<usize> = (1..=self.ground).collect();
        'perms: for perm in elements.iter().permutations(self.ground) {
            // perm[e-1] is the image of element e.
            for e in 1..=self.ground {
                if deg_self[e - 1] != deg_other[perm[e - 1] - 1] {
                    continue 'perms;
                }
            }
            let mut image: Vec<u64> = self
                .masks
                .iter()
                .map(|&b| set_of(b).iter().fold(0u64, |m, &e| m | 1 << (perm[e - 1] - 1)))
                .collect();
            image.sort_unstable();
            if image == target {
                return true;
            }
        }
        false
    }
}

/// Free-function spellings of the constructors and the isomorphism test.
pub fn matroid_from_bases(ground: usize, bases: Vec<Subset>) -> Result<Matroid> {
    Matroid::from_bases(ground, bases)
}

pub fn matroid_from_matrix(m: &RationalMatrix) -> Result<Matroid> {
    Matroid::from_matrix(m)
}

pub fn are_isomorphic(m1: &Matroid, m2: &Matroid) -> bool {
    m1.is_isomorphic_to(m2)
}

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    ground: usize,
    rank: usize,
    bases: Vec<Subset>,
}

impl Serialize for Matroid {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatroidJson {
            ground: self.ground,
            rank: self.rank,
            bases: self.bases.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matroid {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatroidJson::deserialize(deserializer)?;
        let m = Matroid::from_bases(raw.ground, raw.bases).map_err(de::Error::custom)?;
        if m.rank() != raw.rank {
            return Err(de::Error::custom(format!(
                "declared rank {} does not match basis size {}",
                raw.rank,
                m.rank()
            )));
        }
        Ok(m)
    }
}
