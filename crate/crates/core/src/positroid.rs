//! Unit interval positroids.
//!
//! Extending a unit interval order's antiadjacency matrix with
//! [`RationalMatrix::psi`] yields a totally nonnegative full-rank `n x 2n`
//! matrix, whose matroid is the *unit interval positroid* (UIP) of the
//! order. The positroid of the antichain is the *trivial* UIP; its bases
//! and circuits also have direct combinatorial descriptions, implemented
//! here independently of the matrix route so each construction can audit
//! the other.

use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::matroid::{Matroid, Subset};
use crate::uio::UnitIntervalOrder;

/// A positroid on `[2n]` of rank `n`, tagged with the unit interval order
/// that induced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIntervalPositroid {
    source: UnitIntervalOrder,
    matroid: Matroid,
}

impl UnitIntervalPositroid {
    pub fn source(&self) -> &UnitIntervalOrder {
        &self.source
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }
}

/// Builds the unit interval positroid of an order: antiadjacency matrix,
/// then the `[I | flipped]` extension, then the realized matroid.
pub fn uip(u: &UnitIntervalOrder) -> UnitIntervalPositroid {
    let b = u
        .antiadjacency()
        .psi()
        .expect("antiadjacency matrices are square");
    let matroid =
        Matroid::from_matrix(&b).expect("the identity left block guarantees full row rank");
    UnitIntervalPositroid { source: u.clone(), matroid }
}

/// The trivial UIP of rank `n`, constructed directly: its bases are
/// `{1..n}` together with `({1..n} - {i}) U {j}` for every `i` in `[n]`
/// and `j` in `[n+1, 2n]`, giving `n^2 + 1` bases in total.
pub fn trivial_uip(n: usize) -> Matroid {
    let mut bases: Vec<Subset> = vec![(1..=n).collect()];
    for i in 1..=n {
        for j in n + 1..=2 * n {
            let mut b: Subset = (1..=n).filter(|&x| x != i).collect();
            b.push(j);
            bases.push(b);
        }
    }
    Matroid::from_bases(2 * n, bases).expect("the direct construction satisfies the basis axioms")
}

/// The circuits of the trivial UIP of rank `n`, constructed directly:
/// `[n] U {i}` for each `i` in `[n+1, 2n]`, plus every pair inside
/// `[n+1, 2n]`; sorted lexicographically.
pub fn trivial_circuits(n: usize) -> Vec<Subset> {
    let mut out: Vec<Subset> = Vec::new();
    for i in n + 1..=2 * n {
        let mut c: Subset = (1..=n).collect();
        c.push(i);
        out.push(c);
    }
    for i in n + 1..=2 * n {
        for j in i + 1..=2 * n {
            out.push(vec![i, j]);
        }
    }
    out.sort();
    out
}

#[derive(Serialize, Deserialize)]
struct UipJson {
    source: UnitIntervalOrder,
    matroid: Matroid,
}

impl Serialize for UnitIntervalPositroid {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        UipJson { source: self.source.clone(), matroid: self.matroid.clone() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UnitIntervalPositroid {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = UipJson::deserialize(deserializer)?;
        let rebuilt = uip(&raw.source);
        if rebuilt.matroid != raw.matroid {
            return Err(de::Error::custom(
                "matroid does not match the positroid of the declared source order",
            ));
        }
        Ok(rebuilt)
    }
}

/// Convenience: the positroids of every order on `n` elements, in the
/// enumeration order of the profiles.
pub fn all_uips(n: usize) -> Vec<UnitIntervalPositroid> {
    crate::uio::enumerate_uios(n).iter().map(uip).collect()
}

/// Result shape shared by callers that need both routes: the direct
/// construction must equal the matrix construction exactly.
pub fn trivial_uip_both_routes(n: usize) -> Result<(Matroid, Matroid)> {
    let direct = trivial_uip(n);
    let via_matrix = Matroid::from_matrix(&UnitIntervalOrder::trivial(n).antiadjacency().psi()?)?;
    Ok((direct, via_matrix))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_uip_of_rank_one() {
        let m = trivial_uip(1);
        assert_eq!(m.bases(), &[vec![1], vec![2]]);
    }

    #[test]
    fn trivial_uip_of_rank_two() {
        let m = trivial_uip(2);
        assert_eq!(
            m.bases(),
            &[vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
    }

    #[test]
    fn trivial_uip_of_rank_three_lists_all_ten_bases() {
        let m = trivial_uip(3);
        assert_eq!(
            m.bases(),
            &[
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 2, 5],
                vec![1, 2, 6],
                vec![1, 3, 4],
                vec![1, 3, 5],
                vec![1, 3, 6],
                vec![2, 3, 4],
                vec![2, 3, 5],
                vec![2, 3, 6],
            ]
        );
    }

    #[test]
    fn trivial_uip_basis_count_is_n_squared_plus_one() {
        for n in 1..=5 {
            assert_eq!(trivial_uip(n).bases().len(), n * n + 1, "n={n}");
        }
    }

    #[test]
    fn both_routes_to_the_trivial_uip_agree() {
        for n in 1..=4 {
            let (direct, via_matrix) = trivial_uip_both_routes(n).unwrap();
            assert_eq!(direct, via_matrix, "n={n}");
        }
    }

    #[test]
    fn uip_of_the_antichain_matches_the_direct_construction() {
        for n in 1..=3 {
            let p = uip(&UnitIntervalOrder::trivial(n));
            assert_eq!(p.matroid(), &trivial_uip(n));
        }
    }

    #[test]
    fn uip_of_the_two_chain_differs_from_the_trivial_one() {
        let chain = UnitIntervalOrder::new(vec![1, 0]).unwrap();
        let p = uip(&chain);
        assert_eq!(
            p.matroid().bases(),
            &[vec![1, 2], vec![1, 3], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert_ne!(p.matroid(), &trivial_uip(2));
    }

    #[test]
    fn trivial_circuits_of_small_ranks() {
        assert_eq!(trivial_circuits(1), vec![vec![1, 2]]);
        assert_eq!(
            trivial_circuits(2),
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![3, 4]]
        );
        assert_eq!(
            trivial_circuits(3),
            vec![
                vec![1, 2, 3, 4],
                vec![1, 2, 3, 5],
                vec![1, 2, 3, 6],
                vec![4, 5],
                vec![4, 6],
                vec![5, 6],
            ]
        );
    }

    #[test]
    fn trivial_circuits_match_the_matroid_scan() {
        for n in 1..=4 {
            assert_eq!(trivial_uip(n).circuits(), trivial_circuits(n), "n={n}");
        }
    }

    #[test]
    fn uips_have_rank_n_on_ground_2n() {
        for n in 1..=4 {
            for p in all_uips(n) {
                assert_eq!(p.matroid().rank(), n);
                assert_eq!(p.matroid().ground(), 2 * n);
            }
        }
    }

    #[test]
    fn rank_four_uips_are_pairwise_distinct() {
        let uips = all_uips(4);
        assert_eq!(uips.len(), 14);
        for (i, a) in uips.iter().enumerate() {
            for b in &uips[i + 1..] {
                assert_ne!(a.matroid(), b.matroid());
            }
        }
    }

    #[test]
    fn uip_json_round_trip() {
        let p = uip(&UnitIntervalOrder::new(vec![1, 0]).unwrap());
        let text = serde_json::to_string(&p).unwrap();
        let back: UnitIntervalPositroid = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn uip_json_rejects_mismatched_matroids() {
        let p = uip(&UnitIntervalOrder::trivial(2));
        let mut v = serde_json::to_value(&p).unwrap();
        v["source"]["profile"] = serde_json::json!([1, 0]);
        assert!(serde_json::from_value::<UnitIntervalPositroid>(v).is_err());
    }
}
