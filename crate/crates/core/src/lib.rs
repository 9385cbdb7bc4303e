//! Exchanged 3-ary n-cubes: graph model, disjoint-path routing and
//! brute-force verification oracles.

pub mod e3c;
pub mod error;
pub mod oracles;
pub mod qn3;
pub mod router;
pub mod trits;

pub use e3c::{E3CParams, E3CVertex, EdgeClass, Isomorphism, SubcubeClass, SubcubeId};
pub use error::{Error, Result};
pub use qn3::{QPath, QPathProfile, QnkVertex};
pub use router::{
    classify_pair, construct_normalized, construct_path_system, BoundExpr, CaseLabel, FaultWitness, PathSystem,
};
pub use trits::{hamming_distance, lee_distance, lee_weight, TritString};
