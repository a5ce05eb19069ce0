//! The three-step recursion that grows the external poset of one trivial
//! unit interval positroid into the next.
//!
//! Starting from the externally ordered bases of the rank-`n` trivial UIP:
//!
//! 1. **reinforce**: shift every basis up by one and re-adjoin its old
//!    minimum, producing an `(n+1)`-subset;
//! 2. **build up**: where the shifted basis contains `2n+1`, swap it for
//!    `2n+2`; the result covers its input;
//! 3. **grow spine**: where a produced basis has minimum `2`, swap the `2`
//!    for a `1`; the result is covered by its input.
//!
//! The induced order is the transitive closure of the step-1 images of the
//! input order together with the step-2 and step-3 covers, where step-2
//! and step-3 images additionally inherit the order of their sources.
//! [`verify_recursion`] checks the outcome against the independently built
//! external poset of the next trivial UIP.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::external::{external_poset, external_set, poset_equal, BasisPoset};
use crate::matroid::Subset;
use crate::positroid::trivial_uip;

/// Structural test for membership in the trivial UIP of rank `n`: a sorted
/// duplicate-free `n`-subset of `[2n]` with at most one element above `n`.
fn check_trivial_basis(b: &[usize], n: usize) -> Result<()> {
    let ok = b.len() == n
        && b.windows(2).all(|w| w[0] < w[1])
        && b.iter().all(|&e| 1 <= e && e <= 2 * n)
        && b.iter().filter(|&&e| e > n).count() <= 1;
    if ok {
        Ok(())
    } else {
        Err(Error::NotABasis { set: b.to_vec() })
    }
}

/// Step 1: add one to every element of `b` and adjoin the old minimum.
pub fn reinforce(b: &[usize], n: usize) -> Result<Subset> {
    check_trivial_basis(b, n)?;
    let mut out: Subset = b.iter().map(|&x| x + 1).collect();
    out.insert(0, b[0]);
    Ok(out)
}

/// Step 2: if `2n+1` is present, replace it with `2n+2`.
pub fn build_up(b: &[usize], n: usize) -> Option<Subset> {
    let pos = b.iter().position(|&x| x == 2 * n + 1)?;
    let mut out = b.to_vec();
    out[pos] = 2 * n + 2;
    out.sort_unstable();
    Some(out)
}

/// Step 3: if the minimum is `2`, replace it with `1`.
pub fn grow_spine(b: &[usize]) -> Option<Subset> {
    if b.first() != Some(&2) {
        return None;
    }
    let mut out = b.to_vec();
    out[0] = 1;
    Some(out)
}

/// Full provenance of one recursion run: which basis each step produced
/// from which input, plus the induced poset over all produced bases.
#[derive(Debug, Clone)]
pub struct GammaTrace {
    step1_map: BTreeMap<Subset, Subset>,
    step2_map: BTreeMap<Subset, Subset>,
    step3_map: BTreeMap<Subset, Subset>,
    induced: BasisPoset,
}

impl GammaTrace {
    /// Source basis of the input poset → its reinforced image.
    pub fn step1_map(&self) -> &BTreeMap<Subset, Subset> {
        &self.step1_map
    }

    /// Reinforced basis containing the next-to-last ground element → its
    /// built-up image.
    pub fn step2_map(&self) -> &BTreeMap<Subset, Subset> {
        &self.step2_map
    }

    /// Produced basis with minimum `2` → its grown image.
    pub fn step3_map(&self) -> &BTreeMap<Subset, Subset> {
        &self.step3_map
    }

    pub fn induced(&self) -> &BasisPoset {
        &self.induced
    }

    /// Hasse diagram of the induced poset with each node colored by the
    /// step that produced it: blue for step 1, red for step 2, olive for
    /// step 3.
    pub fn to_dot(&self) -> String {
        let step2: BTreeSet<&Subset> = self.step2_map.values().collect();
        let step3: BTreeSet<&Subset> = self.step3_map.values().collect();
        let colors: Vec<&str> = self
            .induced
            .elements()
            .iter()
            .map(|e| {
                if step3.contains(e) {
                    "olive"
                } else if step2.contains(e) {
                    "red"
                } else {
                    "blue"
                }
            })
            .collect();
        self.induced.to_dot_colored(&colors)
    }
}

fn close_in_place(k: usize, relation: &mut [bool]) {
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
}

/// Runs the three steps on the external poset of the rank-`n` trivial UIP
/// and assembles the induced order over the produced bases.
pub fn gamma(ex_pn: &BasisPoset, n: usize) -> Result<GammaTrace> {
    if n == 0 {
        return Err(Error::BadRecursionInput("rank must be at least 1".into()));
    }
    if ex_pn.len() != n * n + 1 {
        return Err(Error::BadRecursionInput(format!(
            "input poset has {} elements, the rank-{n} trivial UIP has {}",
            ex_pn.len(),
            n * n + 1
        )));
    }

    let sources = ex_pn.elements();
    let mut step1_map = BTreeMap::new();
    for src in sources {
        step1_map.insert(src.clone(), reinforce(src, n)?);
    }
    let mut step2_map = BTreeMap::new();
    for img in step1_map.values() {
        if let Some(built) = build_up(img, n) {
            step2_map.insert(img.clone(), built);
        }
    }
    let mut step3_map = BTreeMap::new();
    for b in step1_map.values().chain(step2_map.values()) {
        if let Some(grown) = grow_spine(b) {
            step3_map.insert(b.clone(), grown);
        }
    }

    let mut produced: BTreeSet<Subset> = BTreeSet::new();
    for b in step1_map
        .values()
        .chain(step2_map.values())
        .chain(step3_map.values())
    {
        if !produced.insert(b.clone()) {
            return Err(Error::BadRecursionInput(format!(
                "basis {b:?} was produced twice"
            )));
        }
    }
    let expected = (n + 1) * (n + 1) + 1;
    if produced.len() != expected {
        return Err(Error::BadRecursionInput(format!(
            "recursion produced {} bases, expected {expected}",
            produced.len()
        )));
    }
    let elements: Vec<Subset> = produced.into_iter().collect();
    let idx: BTreeMap<&Subset, usize> = elements.iter().zip(0..).collect();
    let k = elements.len();
    let mut relation = vec![false; k * k];
    for i in 0..k {
        relation[i * k + i] = true;
    }

    // Step-1 images inherit the input order wholesale.
    for (i, a) in sources.iter().enumerate() {
        for (j, b) in sources.iter().enumerate() {
            if ex_pn.le(i, j) {
                relation[idx[&step1_map[a]] * k + idx[&step1_map[b]]] = true;
            }
        }
    }
    // Step-2 results cover their inputs and inherit the order among the
    // inputs they came from.
    for (x, bx) in &step2_map {
        relation[idx[x] * k + idx[bx]] = true;
        for (y, by) in &step2_map {
            if relation[idx[x] * k + idx[y]] {
                relation[idx[bx] * k + idx[by]] = true;
            }
        }
    }
    close_in_place(k, &mut relation);
    // Step-3 results are covered by their inputs and inherit the order
    // among the inputs, taken after the closure above.
    for (x, gx) in &step3_map {
        relation[idx[gx] * k + idx[x]] = true;
        for (y, gy) in &step3_map {
            if relation[idx[x] * k + idx[y]] {
                relation[idx[gx] * k + idx[gy]] = true;
            }
        }
    }
    close_in_place(k, &mut relation);

    let induced = BasisPoset::from_relation(elements, relation)?;
    Ok(GammaTrace { step1_map, step2_map, step3_map, induced })
}

/// Outcome of checking one recursion rank against the oracle.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecursionReport {
    pub n: usize,
    pub equal: bool,
    pub elements: usize,
    pub covers_gamma: usize,
    pub covers_oracle: usize,
    pub missing_relations: Vec<(Subset, Subset)>,
    pub extra_relations: Vec<(Subset, Subset)>,
    pub step1_order_preserved: bool,
}

fn strict_pairs(p: &BasisPoset) -> BTreeSet<(Subset, Subset)> {
    let mut out = BTreeSet::new();
    for i in 0..p.len() {
        for j in 0..p.len() {
            if i != j && p.le(i, j) {
                out.insert((p.elements()[i].clone(), p.elements()[j].clone()));
            }
        }
    }
    out
}

/// Builds the external poset of the rank-`n` trivial UIP, runs the
/// recursion on it, and compares the induced order with the independently
/// built external poset of the rank-`n+1` trivial UIP. Also checks that
/// the step-1 map preserves order under the direct basis-containment
/// formulation in the larger matroid.
pub fn verify_recursion(n: usize) -> RecursionReport {
    let ex_n = external_poset(&trivial_uip(n));
    let trace = gamma(&ex_n, n).expect("the oracle poset is valid recursion input");
    let oracle = external_poset(&trivial_uip(n + 1));

    let induced_pairs = strict_pairs(trace.induced());
    let oracle_pairs = strict_pairs(&oracle);
    let missing_relations: Vec<(Subset, Subset)> =
        oracle_pairs.difference(&induced_pairs).cloned().collect();
    let extra_relations: Vec<(Subset, Subset)> =
        induced_pairs.difference(&oracle_pairs).cloned().collect();

    let m_next = trivial_uip(n + 1);
    let closures: BTreeMap<&Subset, BTreeSet<usize>> = trace
        .step1_map()
        .values()
        .map(|img| {
            let mut c: BTreeSet<usize> = img.iter().copied().collect();
            c.extend(external_set(&m_next, img).expect("step-1 images are bases"));
            (img, c)
        })
        .collect();
    let mut step1_order_preserved = true;
    for (i, a) in ex_n.elements().iter().enumerate() {
        for (j, b) in ex_n.elements().iter().enumerate() {
            if ex_n.le(i, j) {
                let img_a = &trace.step1_map()[a];
                let img_b = &trace.step1_map()[b];
                if !img_a.iter().all(|e| closures[img_b].contains(e)) {
                    step1_order_preserved = false;
                }
            }
        }
    }

    RecursionReport {
        n,
        equal: poset_equal(trace.induced(), &oracle),
        elements: trace.induced().len(),
        covers_gamma: trace.induced().covers().len(),
        covers_oracle: oracle.covers().len(),
        missing_relations,
        extra_relations,
        step1_order_preserved,
    }
}
