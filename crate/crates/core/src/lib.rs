//! Exact-arithmetic verification of singular rank-one period identities.
//!
//! The library computes both sides of the local comparison for the two
//! catalogued singular pairs: the automorphic side as an unfolded Whittaker
//! sum over a cone of coweights, the spectral side as a torus trace on the
//! graded coordinate ring of the dual cone. Everything is exact rational
//! arithmetic; every headline computation has an independent oracle next to
//! it (ideal quotients, valuation criteria, tensor models, classical
//! unfoldings).
//!
//! Data-parallel enumeration and evaluation run on rayon when the default
//! `parallel` feature is enabled; disabling it gives a sequential build with
//! byte-identical outputs.

pub mod acceptance;
pub mod classical;
pub mod cones;
pub mod engine;
pub mod error;
pub mod integrality;
pub mod invariants;
pub mod lfactors;
pub mod linalg;
pub mod oracles;
pub mod par;
pub mod rat;
pub mod reptheory;
pub mod rootdata;
pub mod sampling;
pub mod series;

pub use error::{Error, Result};
pub use par::Exec;
pub use rat::Q;
pub use reptheory::SatakePoint;
pub use rootdata::{case, load_case, CaseData, CaseId, CoweightVector, WeightVector, MAIN_CASES};

/// Version tag stamped into every machine-readable report.
pub const SCHEMA_VERSION: &str = "1";
