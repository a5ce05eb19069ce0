//! Unit interval positroids from first principles.
//!
//! The crate builds positroids out of unit interval orders with exact
//! rational linear algebra, orders their bases by external activity, and
//! implements the three-step recursion that carries the externally ordered
//! basis poset of the rank-n trivial positroid to the rank-(n+1) one. A
//! verification module re-derives every structural claim against brute-force
//! oracles at desk scale.

pub mod error;
pub mod external;
pub mod gamma;
pub mod linalg;
pub mod matroid;
pub mod positroid;
pub mod uio;
pub mod verify;

pub use error::{Error, Result};
pub use external::{
    active_set, epsilon, external_poset, external_set, leq_ext, leq_ext_lex, poset_equal,
    transitive_closure, transitive_reduction, BasisPoset,
};
pub use gamma::{build_up, gamma, grow_spine, reinforce, verify_recursion, GammaTrace, RecursionReport};
pub use linalg::{k_set, Rational, RationalMatrix};
pub use matroid::{are_isomorphic, matroid_from_bases, matroid_from_matrix, Matroid, Subset};
pub use positroid::{all_uips, trivial_circuits, trivial_uip, uip, UnitIntervalPositroid};
pub use uio::{
    catalan, catalan_convolution, enumerate_uios, uio_from_intervals, CatalanValue,
    UnitIntervalOrder,
};
pub use verify::{minor_scan, run_all, to_pretty_json, CheckReport, MinorScanReport};
