//! The external order on matroid bases.
//!
//! An element `e` is *externally active* for a set `A` when some circuit
//! through `e` lies inside `A ∪ {e}` with `e` as its smallest element.
//! The active elements outside a basis form its external set, and
//!
//! > `A ≤ B`  iff  `A ⊆ B ∪ Ext(B)`
//!
//! is a partial order on the bases. [`external_poset`] materializes it as a
//! [`BasisPoset`] with an explicit relation matrix and Hasse diagram.
//! [`leq_ext_lex`] is an independent formulation of the same relation
//! (`B` is the lexicographically greatest basis inside `A ∪ B`), kept as a
//! cross-check oracle and never used by the poset builder.

use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matroid::{mask_of, set_of, Matroid, Subset};

/// Circuit list in mask form, paired with each circuit's smallest element.
fn circuit_data(m: &Matroid) -> Vec<(u64, usize)> {
    m.circuits().into_iter().map(|c| (mask_of(&c), c[0])).collect()
}

/// Mask of active elements: minima of circuits whose remaining elements
/// all lie in `a`.
fn active_mask(circuits: &[(u64, usize)], a: u64) -> u64 {
    let mut out = 0u64;
    for &(c, min) in circuits {
        if c & !(a | 1 << (min - 1)) == 0 {
            out |= 1 << (min - 1);
        }
    }
    out
}

fn subset_mask(m: &Matroid, a: &[usize]) -> Result<u64> {
    for &e in a {
        if e == 0 || e > m.ground() {
            return Err(Error::ElementOutOfRange { element: e, ground: m.ground() });
        }
    }
    Ok(mask_of(a))
}

fn basis_mask(m: &Matroid, b: &[usize]) -> Result<u64> {
    if !m.is_basis(b) {
        return Err(Error::NotABasis { set: b.to_vec() });
    }
    Ok(mask_of(b))
}

/// Elements `e` for which some circuit `C` satisfies
/// `e ∈ C ⊆ a ∪ {e}` with `e = min(C)`.
pub fn active_set(m: &Matroid, a: &[usize]) -> Result<Subset> {
    let mask = subset_mask(m, a)?;
    Ok(set_of(active_mask(&circuit_data(m), mask)))
}

/// Active elements of `a` that lie outside `a`.
pub fn external_set(m: &Matroid, a: &[usize]) -> Result<Subset> {
    let mask = subset_mask(m, a)?;
    Ok(set_of(active_mask(&circuit_data(m), mask) & !mask))
}

/// The external order relation: `a ⊆ b ∪ external_set(b)`.
/// Both arguments must be bases.
pub fn leq_ext(m: &Matroid, a: &[usize], b: &[usize]) -> Result<bool> {
    let a_mask = basis_mask(m, a)?;
    let b_mask = basis_mask(m, b)?;
    let ext = active_mask(&circuit_data(m), b_mask) & !b_mask;
    Ok(a_mask & !(b_mask | ext) == 0)
}

/// Independent formulation of the same relation: `b` is the
/// lexicographically greatest basis contained in `a ∪ b`, comparing bases
/// as ascending sorted sequences. Cross-check oracle for [`leq_ext`].
pub fn leq_ext_lex(m: &Matroid, a: &[usize], b: &[usize]) -> Result<bool> {
    let a_mask = basis_mask(m, a)?;
    let b_mask = basis_mask(m, b)?;
    let union = a_mask | b_mask;
    // The basis list is sorted ascending, so the last one inside the union
    // is the lexicographic maximum among them.
    let greatest = m
        .bases()
        .iter()
        .rev()
        .find(|basis| mask_of(basis) & !union == 0)
        .expect("a itself is a basis inside the union");
    Ok(mask_of(greatest) == b_mask)
}

/// Number of externally active elements outside the basis `b`; zero
/// exactly for the minimal elements of the external poset.
pub fn epsilon(m: &Matroid, b: &[usize]) -> Result<usize> {
    let mask = basis_mask(m, b)?;
    Ok((active_mask(&circuit_data(m), mask) & !mask).count_ones() as usize)
}

/// A finite poset whose elements are bases, stored with its full relation
/// matrix and cover list. Constructors canonicalize: each element is
/// sorted internally, the element list is sorted, and the relation matrix
/// is permuted to match, so equal posets compare equal field-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPoset {
    elements: Vec<Subset>,
    /// Row-major: `relation[i * len + j]` holds iff `elements[i] ≤ elements[j]`.
    relation: Vec<bool>,
    covers: Vec<(usize, usize)>,
}

impl BasisPoset {
    /// Builds a poset from a full relation matrix, validating reflexivity,
    /// antisymmetry, and transitivity.
    pub fn from_relation(elements: Vec<Subset>, relation: Vec<bool>) -> Result<Self> {
        let k = elements.len();
        if relation.len() != k * k {
            return Err(Error::SizeMismatch(format!(
                "relation has {} entries for {} elements, expected {}",
                relation.len(),
                k,
                k * k
            )));
        }
        let mut sorted_elements: Vec<Subset> = elements
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e
            })
            .collect();
        let mut perm: Vec<usize> = (0..k).collect();
        perm.sort_by(|&i, &j| sorted_elements[i].cmp(&sorted_elements[j]));
        let mut permuted = Vec::with_capacity(k * k);
        for &i in &perm {
            for &j in &perm {
                permuted.push(relation[i * k + j]);
            }
        }
        sorted_elements = perm.iter().map(|&i| sorted_elements[i].clone()).collect();
        if sorted_elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::OrderViolation("duplicate poset element".into()));
        }
        let covers = transitive_reduction(k, &permuted)?;
        Ok(BasisPoset { elements: sorted_elements, relation: permuted, covers })
    }

    /// Builds a poset from cover pairs (indices into `elements`), taking
    /// the reflexive transitive closure and rejecting cycles.
    pub fn from_covers(elements: Vec<Subset>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let k = elements.len();
        for &(i, j) in &covers {
            if i >= k || j >= k {
                return Err(Error::OrderViolation(format!(
                    "cover ({i},{j}) out of range for {k} elements"
                )));
            }
        }
        let relation = transitive_closure(k, &covers)?;
        Self::from_relation(elements, relation)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in canonical (sorted) order.
    pub fn elements(&self) -> &[Subset] {
        &self.elements
    }

    /// Row-major relation matrix, `len() * len()` entries.
    pub fn relation(&self) -> &[bool] {
        &self.relation
    }

    /// Cover pairs `(i, j)` meaning `elements[i]` is covered by `elements[j]`,
    /// sorted ascending.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.relation[i * self.elements.len() + j]
    }

    /// Index of a basis in the canonical element order.
    pub fn index_of(&self, set: &[usize]) -> Option<usize> {
        let mut s = set.to_vec();
        s.sort_unstable();
        self.elements.binary_search(&s).ok()
    }

    pub fn minimal_elements(&self) -> Vec<Subset> {
        let k = self.elements.len();
        (0..k)
            .filter(|&i| (0..k).all(|j| j == i || !self.le(j, i)))
            .map(|i| self.elements[i].clone())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<Subset> {
        let k = self.elements.len();
        (0..k)
            .filter(|&i| (0..k).all(|j| j == i || !self.le(i, j)))
            .map(|i| self.elements[i].clone())
            .collect()
    }

    /// Hasse diagram in DOT syntax: one node per element, one edge per
    /// cover pointing from the lower element to the upper one, drawn
    /// bottom to top.
    pub fn to_dot(&self) -> String {
        self.dot_impl(None)
    }

    /// [`Self::to_dot`] with one DOT color name per element, in canonical
    /// element order.
    pub fn to_dot_colored(&self, colors: &[&str]) -> String {
        assert_eq!(colors.len(), self.elements.len(), "one color per poset element");
        self.dot_impl(Some(colors))
    }

    fn dot_impl(&self, colors: Option<&[&str]>) -> String {
        use std::fmt::Write;
        let mut out = String::from("digraph {\n  rankdir=BT;\n");
        for (i, e) in self.elements.iter().enumerate() {
            let label: Vec<String> = e.iter().map(|x| x.to_string()).collect();
            match colors {
                Some(cs) => {
                    writeln!(out, "  b{i} [label=\"{{{}}}\", color={}];", label.join(","), cs[i])
                }
                None => writeln!(out, "  b{i} [label=\"{{{}}}\"];", label.join(",")),
            }
            .expect("writing to a string cannot fail");
        }
        for &(i, j) in &self.covers {
            writeln!(out, "  b{i} -> b{j};").expect("writing to a string cannot fail");
        }
        out.push_str("}\n");
        out
    }
}

/// Cover pairs of a partial order given as a full relation matrix.
/// Validates the partial order axioms first.
pub fn transitive_reduction(k: usize, relation: &[bool]) -> Result<Vec<(usize, usize)>> {
    if relation.len() != k * k {
        return Err(Error::SizeMismatch(format!(
            "relation has {} entries for {} elements, expected {}",
            relation.len(),
            k,
            k * k
        )));
    }
    let le = |i: usize, j: usize| relation[i * k + j];
    for i in 0..k {
        if !le(i, i) {
            return Err(Error::OrderViolation(format!("relation is not reflexive at {i}")));
        }
        for j in 0..k {
            if i != j && le(i, j) && le(j, i) {
                return Err(Error::OrderViolation(format!(
                    "relation is not antisymmetric on ({i},{j})"
                )));
            }
            for l in 0..k {
                if le(i, j) && le(j, l) && !le(i, l) {
                    return Err(Error::OrderViolation(format!(
                        "relation is not transitive on ({i},{j},{l})"
                    )));
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j
                && le(i, j)
                && !(0..k).any(|l| l != i && l != j && le(i, l) && le(l, j))
            {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    Ok(covers)
}

/// Reflexive transitive closure of a cover list as a full relation matrix.
/// Rejects cycles (which would break antisymmetry).
pub fn transitive_closure(k: usize, covers: &[(usize, usize)]) -> Result<Vec<bool>> {
    let mut relation = vec![false; k * k];
    for i in 0..k {
        relation[i * k + i] = true;
    }
    for &(i, j) in covers {
        if i >= k || j >= k {
            return Err(Error::OrderViolation(format!(
                "cover ({i},{j}) out of range for {k} elements"
            )));
        }
        relation[i * k + j] = true;
    }
    for mid in 0..k {
        for i in 0..k {
            if relation[i * k + mid] {
                for j in 0..k {
                    if relation[mid * k + j] {
                        relation[i * k + j] = true;
                    }
                }
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i != j && relation[i * k + j] && relation[j * k + i] {
                return Err(Error::OrderViolation(format!(
                    "covers contain a cycle through {i} and {j}"
                )));
            }
        }
    }
    Ok(relation)
}

/// Equality of posets: same element sets (after canonical sorting) and the
/// same full relation, not merely the same covers.
pub fn poset_equal(p1: &BasisPoset, p2: &BasisPoset) -> bool {
    p1 == p2
}

/// The poset of all bases of `m` under the external order, with elements
/// in canonical sorted order.
pub fn external_poset(m: &Matroid) -> BasisPoset {
    let circuits = circuit_data(m);
    let bases = m.bases();
    let k = bases.len();
    let masks: Vec<u64> = bases.iter().map(|b| mask_of(b)).collect();
    let closures: Vec<u64> = masks.iter().map(|&b| b | (active_mask(&circuits, b) & !b)).collect();
    let mut relation = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            relation[i * k + j] = masks[i] & !closures[j] == 0;
        }
    }
    BasisPoset::from_relation(bases.to_vec(), relation)
        .expect("the external order satisfies the partial order axioms")
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    elements: Vec<Subset>,
    covers: Vec<(usize, usize)>,
}

impl Serialize for BasisPoset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PosetJson { elements: self.elements.clone(), covers: self.covers.clone() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BasisPoset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PosetJson::deserialize(deserializer)?;
        BasisPoset::from_covers(raw.elements, raw.covers).map_err(de::Error::custom)
    }
}
