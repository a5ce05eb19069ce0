//! End-to-end verification checks.
//!
//! Each check exercises one published property of the library across its
//! full advertised range and reports pass/fail with a measured elapsed
//! time against a pinned wall-clock bound. The checks are self-contained
//! and deterministic: fixed RNG seeds, canonical orderings, and golden
//! files embedded at compile time.

use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::external::{external_poset, external_set, leq_ext_lex};
use crate::gamma::{reinforce, verify_recursion};
use crate::linalg::{k_set, Rational, RationalMatrix};
use crate::matroid::{are_isomorphic, mask_of, Matroid};
use crate::positroid::{trivial_circuits, trivial_uip, trivial_uip_both_routes, uip};
use crate::uio::{catalan, catalan_convolution, enumerate_uios};

/// Outcome of one verification check. `elapsed` and `bound` stay out of
/// the serialized form so reports are byte-identical across runs.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub details: String,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub bound: Duration,
}

pub const BOUND_BASIS_COUNTS: Duration = Duration::from_secs(5);
pub const BOUND_WORKED_EXAMPLE: Duration = Duration::from_secs(1);
pub const BOUND_PSI_IDENTITY: Duration = Duration::from_secs(10);
pub const BOUND_CATALAN: Duration = Duration::from_secs(1);
pub const BOUND_CIRCUITS: Duration = Duration::from_secs(30);
pub const BOUND_ORDER_EQUIVALENCE: Duration = Duration::from_secs(30);
pub const BOUND_MINIMALITY: Duration = Duration::from_secs(10);
pub const BOUND_RECURSION: Duration = Duration::from_secs(30);
pub const BOUND_STEP_ONE: Duration = Duration::from_secs(10);
pub const BOUND_MINOR_SCAN: Duration = Duration::from_secs(30);
pub const BOUND_GOLDEN_DOT: Duration = Duration::from_secs(1);

pub const GOLDEN_EX_P2_DOT: &str = include_str!("../tests/golden/ex_p2.dot");
pub const GOLDEN_EX_P3_DOT: &str = include_str!("../tests/golden/ex_p3.dot");
pub const GOLDEN_MINOR_SCAN_RANK4: &str = include_str!("../tests/golden/minor_scan_rank4.json");

fn run(name: &str, bound: Duration, body: impl FnOnce() -> (bool, String)) -> CheckReport {
    let start = Instant::now();
    let (passed, details) = body();
    CheckReport {
        name: name.to_string(),
        passed,
        details,
        elapsed: start.elapsed(),
        bound,
    }
}

/// Basis counts of the trivial UIP: `n² + 1` for every `n` up to `max_n`,
/// by both the direct and the matrix construction, which must also agree
/// basis-for-basis.
pub fn check_basis_counts(max_n: usize) -> CheckReport {
    run("basis-counts", BOUND_BASIS_COUNTS, || {
        let mut counts = Vec::new();
        for n in 1..=max_n {
            let (direct, via_matrix) = match trivial_uip_both_routes(n) {
                Ok(pair) => pair,
                Err(e) => return (false, format!("construction failed at n={n}: {e}")),
            };
            if direct != via_matrix {
                return (false, format!("constructions disagree at n={n}"));
            }
            if direct.bases().len() != n * n + 1 {
                return (
                    false,
                    format!("n={n}: {} bases, expected {}", direct.bases().len(), n * n + 1),
                );
            }
            counts.push(direct.bases().len().to_string());
        }
        (
            true,
            format!(
                "n=1..{max_n}: {} bases by both constructions, matching n^2+1",
                counts.join(",")
            ),
        )
    })
}

/// The full active/external table of the rank-3 trivial UIP, row for row.
pub fn check_worked_example_table() -> CheckReport {
    run("worked-example-table", BOUND_WORKED_EXAMPLE, || {
        let m = trivial_uip(3);
        let expect: &[(&[usize], &[usize])] = &[
            (&[1, 2, 3], &[]),
            (&[1, 2, 4], &[]),
            (&[1, 2, 5], &[4]),
            (&[1, 2, 6], &[4, 5]),
            (&[1, 3, 4], &[]),
            (&[1, 3, 5], &[4]),
            (&[1, 3, 6], &[4, 5]),
            (&[2, 3, 4], &[1]),
            (&[2, 3, 5], &[1, 4]),
            (&[2, 3, 6], &[1, 4, 5]),
        ];
        for (basis, want) in expect {
            let active = match crate::external::active_set(&m, basis) {
                Ok(a) => a,
                Err(e) => return (false, format!("active set failed on {basis:?}: {e}")),
            };
            let external = match external_set(&m, basis) {
                Ok(x) => x,
                Err(e) => return (false, format!("external set failed on {basis:?}: {e}")),
            };
            // A basis is independent, so no circuit fits inside it and the
            // active and external sets coincide.
            if active != *want || external != *want {
                return (
                    false,
                    format!("basis {basis:?}: active {active:?}, external {external:?}, expected {want:?}"),
                );
            }
        }
        (true, "all 10 rows of the rank-3 active/external table reproduced".to_string())
    })
}

/// The minor identity of the extension map: every maximal minor of the
/// original matrix equals the corresponding full-row minor of its
/// extension, over `per_n` seeded random integer matrices for each size.
pub fn check_psi_identity(min_n: usize, max_n: usize, per_n: usize) -> CheckReport {
    run("psi-identity", BOUND_PSI_IDENTITY, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xBA5E5);
        let mut checked = 0usize;
        for n in min_n..=max_n {
            for trial in 0..per_n {
                let rows: Vec<Vec<Rational>> = (0..n)
                    .map(|_| (0..n).map(|_| Rational::from(rng.random_range(-9..=9i64))).collect())
                    .collect();
                let a = RationalMatrix::from_rows(rows).expect("square shape by construction");
                let b = a.psi().expect("input is square");
                let labels: Vec<usize> = (1..=n).collect();
                for k in 0..=n {
                    for i_set in labels.iter().copied().combinations(k) {
                        for j_set in labels.iter().copied().combinations(k) {
                            let lhs = a
                                .submatrix(&i_set, &j_set)
                                .and_then(|s| s.det())
                                .expect("labels in range");
                            let kk = k_set(&i_set, &j_set, n).expect("valid index sets");
                            let rhs = b
                                .submatrix(&labels, &kk)
                                .and_then(|s| s.det())
                                .expect("labels in range");
                            if lhs != rhs {
                                return (
                                    false,
                                    format!(
                                        "n={n} trial={trial} I={i_set:?} J={j_set:?}: {lhs} != {rhs}"
                                    ),
                                );
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
        (
            true,
            format!(
                "{checked} minor identities hold over {per_n} random matrices per n={min_n}..{max_n}"
            ),
        )
    })
}

/// Catalan counting: enumeration sizes match the closed form, the closed
/// form matches the convolution recursion, and the rank-4 count is 14.
pub fn check_catalan_counts(max_enumerate: usize, max_closed: usize) -> CheckReport {
    run("catalan-counts", BOUND_CATALAN, || {
        for n in 1..=max_enumerate {
            let count = enumerate_uios(n).len();
            let expected = catalan(n);
            if expected != count.into() {
                return (false, format!("n={n}: enumerated {count}, Catalan number is {expected}"));
            }
        }
        if max_enumerate >= 4 && enumerate_uios(4).len() != 14 {
            return (false, "rank-4 count is not 14".to_string());
        }
        for n in 0..=max_closed {
            let closed = catalan(n);
            let convolved = catalan_convolution(n);
            if closed != convolved {
                return (false, format!("n={n}: closed form {closed} != convolution {convolved}"));
            }
        }
        (
            true,
            format!(
                "enumeration matches Catalan numbers for n=1..{max_enumerate}; closed form matches convolution for n=0..{max_closed}"
            ),
        )
    })
}

/// The direct circuit description of the trivial UIP against the
/// brute-force minimal-dependent-set scan.
pub fn check_circuit_descriptions(max_n: usize) -> CheckReport {
    run("circuit-descriptions", BOUND_CIRCUITS, || {
        let mut totals = Vec::new();
        for n in 1..=max_n {
            let scanned = trivial_uip(n).circuits();
            let direct = trivial_circuits(n);
            if scanned != direct {
                return (false, format!("circuit lists differ at n={n}"));
            }
            totals.push(scanned.len().to_string());
        }
        (true, format!("circuit lists agree for n=1..{max_n} ({} circuits)", totals.join(",")))
    })
}

/// Agreement of the two order formulations (basis-containment and
/// lexicographic-greatest) on every ordered basis pair of every UIP of
/// rank up to `max_rank`, plus monotonicity of the closure whenever the
/// relation holds.
pub fn check_order_condition_equivalence(max_rank: usize) -> CheckReport {
    run("order-condition-equivalence", BOUND_ORDER_EQUIVALENCE, || {
        let mut pairs = 0usize;
        let mut positroids = 0usize;
        for n in 1..=max_rank {
            for u in enumerate_uios(n) {
                let m = uip(&u).matroid().clone();
                positroids += 1;
                let closures: Vec<u64> = m
                    .bases()
                    .iter()
                    .map(|b| {
                        let ext = external_set(&m, b).expect("bases lie in the ground set");
                        mask_of(b) | mask_of(&ext)
                    })
                    .collect();
                for (i, a) in m.bases().iter().enumerate() {
                    for (j, b) in m.bases().iter().enumerate() {
                        let via_containment = mask_of(a) & !closures[j] == 0;
                        let via_lex =
                            leq_ext_lex(&m, a, b).expect("both arguments are bases");
                        if via_containment != via_lex {
                            return (
                                false,
                                format!(
                                    "profile {:?}: formulations disagree on {a:?} vs {b:?}",
                                    u.profile()
                                ),
                            );
                        }
                        if via_containment && closures[i] & !closures[j] != 0 {
                            return (
                                false,
                                format!(
                                    "profile {:?}: closure not monotone on {a:?} <= {b:?}",
                                    u.profile()
                                ),
                            );
                        }
                        pairs += 1;
                    }
                }
            }
        }
        (
            true,
            format!(
                "{pairs} ordered basis pairs across {positroids} positroids of rank 1..{max_rank}: both formulations agree and closures are monotone"
            ),
        )
    })
}

/// Zero external count if and only if minimal in the external poset, both
/// directions, every basis of every trivial UIP up to `max_n`.
pub fn check_minimality_characterization(max_n: usize) -> CheckReport {
    run("minimality-characterization", BOUND_MINIMALITY, || {
        for n in 1..=max_n {
            let m = trivial_uip(n);
            let poset = external_poset(&m);
            let minimal = poset.minimal_elements();
            for b in m.bases() {
                let eps = crate::external::epsilon(&m, b).expect("basis of m");
                let is_min = minimal.contains(b);
                if (eps == 0) != is_min {
                    return (
                        false,
                        format!("n={n} basis {b:?}: epsilon={eps}, minimal={is_min}"),
                    );
                }
            }
        }
        (
            true,
            format!("epsilon=0 coincides with poset minimality for every basis, n=1..{max_n}"),
        )
    })
}

/// The recursion against the oracle: induced poset equals the next
/// external poset, with the expected element count, for each rank.
pub fn check_recursion_against_oracle(max_n: usize) -> CheckReport {
    run("recursion-against-oracle", BOUND_RECURSION, || {
        let mut sizes = Vec::new();
        for n in 1..=max_n {
            let report = verify_recursion(n);
            let expected = (n + 1) * (n + 1) + 1;
            if !report.equal {
                return (
                    false,
                    format!(
                        "n={n}: posets differ; {} missing and {} extra relations",
                        report.missing_relations.len(),
                        report.extra_relations.len()
                    ),
                );
            }
            if report.elements != expected {
                return (false, format!("n={n}: {} elements, expected {expected}", report.elements));
            }
            if !report.step1_order_preserved {
                return (false, format!("n={n}: step-1 map does not preserve order"));
            }
            sizes.push(report.elements.to_string());
        }
        (
            true,
            format!("recursion output equals the oracle poset for n=1..{max_n} ({} elements)", sizes.join(",")),
        )
    })
}

/// Order preservation of the first step alone: whenever `A ≤ B` in the
/// current external poset, the shifted images satisfy the containment
/// formulation of the relation in the next trivial UIP.
pub fn check_step_one_order_preservation(max_n: usize) -> CheckReport {
    run("step-one-order-preservation", BOUND_STEP_ONE, || {
        let mut checked = 0usize;
        for n in 1..=max_n {
            let ex_n = external_poset(&trivial_uip(n));
            let m_next = trivial_uip(n + 1);
            let images: Vec<Vec<usize>> = ex_n
                .elements()
                .iter()
                .map(|b| reinforce(b, n).expect("poset elements are bases"))
                .collect();
            let closures: Vec<u64> = images
                .iter()
                .map(|img| {
                    let ext = external_set(&m_next, img).expect("images are bases");
                    mask_of(img) | mask_of(&ext)
                })
                .collect();
            for i in 0..ex_n.len() {
                for j in 0..ex_n.len() {
                    if ex_n.le(i, j) {
                        if mask_of(&images[i]) & !closures[j] != 0 {
                            return (
                                false,
                                format!(
                                    "n={n}: {:?} <= {:?} but images violate the relation",
                                    ex_n.elements()[i],
                                    ex_n.elements()[j]
                                ),
                            );
                        }
                        checked += 1;
                    }
                }
            }
        }
        (true, format!("{checked} ordered pairs map to ordered images for n=1..{max_n}"))
    })
}

/// One delete-then-contract minor record: the element deleted, the element
/// contracted (both original labels), and the profiles of all catalog
/// positroids one rank down that the minor is isomorphic to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorScanEntry {
    pub delete: usize,
    pub contract: usize,
    pub isomorphic_to: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorScanReport {
    pub rank: usize,
    pub results: Vec<MinorScanEntry>,
}

/// Deletes one element and contracts another (every ordered pair of
/// distinct ground elements) in the trivial UIP of the given rank, and
/// tests each minor for isomorphism against every UIP of the next rank
/// down.
pub fn minor_scan(rank: usize) -> Result<MinorScanReport> {
    if rank < 2 {
        return Err(Error::Dimension(format!(
            "minor scan needs rank at least 2, got {rank}"
        )));
    }
    let m = trivial_uip(rank);
    let catalog: Vec<(Vec<usize>, Matroid)> = enumerate_uios(rank - 1)
        .iter()
        .map(|u| (u.profile().to_vec(), uip(u).matroid().clone()))
        .collect();
    let mut results = Vec::new();
    for del in 1..=2 * rank {
        let (after_delete, labels) = m.delete(del)?;
        for con in 1..=2 * rank {
            if con == del {
                continue;
            }
            let relabeled = labels
                .iter()
                .position(|&old| old == con)
                .expect("every surviving element appears in the relabeling map")
                + 1;
            let (minor, _) = after_delete.contract(relabeled)?;
            let isomorphic_to: Vec<Vec<usize>> = catalog
                .iter()
                .filter(|(_, c)| are_isomorphic(&minor, c))
                .map(|(profile, _)| profile.clone())
                .collect();
            results.push(MinorScanEntry { delete: del, contract: con, isomorphic_to });
        }
    }
    Ok(MinorScanReport { rank, results })
}

/// The rank-4 minor scan: every delete/contract pair tested against the
/// five rank-3 catalog positroids, at least one isomorphism found, and
/// the full mapping byte-identical to the recorded golden file.
pub fn check_minor_scan() -> CheckReport {
    run("minor-scan", BOUND_MINOR_SCAN, || {
        let report = match minor_scan(4) {
            Ok(r) => r,
            Err(e) => return (false, format!("scan failed: {e}")),
        };
        if report.results.len() != 56 {
            return (false, format!("{} minors scanned, expected 56", report.results.len()));
        }
        let hits = report.results.iter().filter(|r| !r.isomorphic_to.is_empty()).count();
        if hits == 0 {
            return (false, "no minor is isomorphic to any catalog positroid".to_string());
        }
        let rendered = to_pretty_json(&report);
        if rendered != GOLDEN_MINOR_SCAN_RANK4 {
            return (
                false,
                format!(
                    "scan output diverges from the recorded golden file ({} vs {} bytes)",
                    rendered.len(),
                    GOLDEN_MINOR_SCAN_RANK4.len()
                ),
            );
        }
        (true, format!("56 minors scanned, {hits} isomorphic to a catalog positroid; golden file matches"))
    })
}

/// Byte-stability of the Hasse diagram exports for the rank-2 and rank-3
/// trivial UIPs against their golden files, rendered twice.
pub fn check_hasse_goldens() -> CheckReport {
    run("hasse-goldens", BOUND_GOLDEN_DOT, || {
        for (n, golden) in [(2, GOLDEN_EX_P2_DOT), (3, GOLDEN_EX_P3_DOT)] {
            let first = external_poset(&trivial_uip(n)).to_dot();
            let second = external_poset(&trivial_uip(n)).to_dot();
            if first != second {
                return (false, format!("rank-{n} export is not stable across runs"));
            }
            if first != golden {
                return (false, format!("rank-{n} export diverges from its golden file"));
            }
        }
        (true, "rank-2 and rank-3 Hasse exports are byte-stable and match their golden files".to_string())
    })
}

/// Serializes a value as pretty-printed JSON with a trailing newline, the
/// format used for golden files and command output.
pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

/// Runs the full verification suite. Ranged checks are clamped to
/// `max_n` where it is below their default range; fixed-shape checks
/// (worked example, minor scan, goldens) always run in full.
pub fn run_all(max_n: usize) -> Vec<CheckReport> {
    vec![
        check_basis_counts(max_n.min(6)),
        check_worked_example_table(),
        check_psi_identity(2, max_n.clamp(2, 4), 50),
        check_catalan_counts(max_n.min(7), 20),
        check_circuit_descriptions(max_n.min(5)),
        check_order_condition_equivalence(max_n.min(4)),
        check_minimality_characterization(max_n.min(5)),
        check_recursion_against_oracle(max_n.min(5)),
        check_step_one_order_preservation(max_n.min(4)),
        check_minor_scan(),
        check_hasse_goldens(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_reports_serialize_without_timing_fields() {
        let report = check_worked_example_table();
        assert!(report.passed);
        let text = serde_json::to_string(&report).unwrap();
        assert!(text.contains("\"name\":\"worked-example-table\""));
        assert!(!text.contains("elapsed"));
        assert!(!text.contains("bound"));
    }

    #[test]
    fn minor_scan_rejects_rank_below_two() {
        assert!(minor_scan(1).is_err());
    }

    #[test]
    fn minor_scan_of_rank_two_hits_the_single_rank_one_positroid() {
        let report = minor_scan(2).unwrap();
        assert_eq!(report.results.len(), 12);
        assert!(report.results.iter().any(|r| !r.isomorphic_to.is_empty()));
        for entry in &report.results {
            for profile in &entry.isomorphic_to {
                assert_eq!(profile, &vec![0]);
            }
        }
    }

    #[test]
    fn rank_four_minor_scan_hits_exactly_the_upper_lower_pairs() {
        let report = minor_scan(4).unwrap();
        assert_eq!(report.results.len(), 56);
        for entry in &report.results {
            let upper_delete = entry.delete > 4 && entry.contract <= 4;
            if upper_delete {
                // Removing one surplus column and contracting one identity
                // column collapses the trivial rank-4 positroid onto the
                // trivial rank-3 one.
                assert_eq!(entry.isomorphic_to, vec![vec![0, 0, 0]], "{entry:?}");
            } else {
                assert!(entry.isomorphic_to.is_empty(), "{entry:?}");
            }
        }
        assert_eq!(
            report.results.iter().filter(|r| !r.isomorphic_to.is_empty()).count(),
            16
        );
    }

    #[test]
    fn fast_checks_pass() {
        assert!(check_worked_example_table().passed);
        assert!(check_catalan_counts(5, 10).passed);
        assert!(check_basis_counts(3).passed);
        assert!(check_circuit_descriptions(3).passed);
        assert!(check_psi_identity(2, 2, 3).passed);
        assert!(check_order_condition_equivalence(2).passed);
        assert!(check_minimality_characterization(3).passed);
        assert!(check_recursion_against_oracle(2).passed);
        assert!(check_step_one_order_preservation(2).passed);
        assert!(check_hasse_goldens().passed);
    }
}
