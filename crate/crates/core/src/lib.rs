//! Finite ideal topological spaces.
//!
//! A finite topology is stored with its minimal open neighbourhoods, which
//! turns every quantifier over "all open sets around x" into a single subset
//! test. On top of that sit ideals, the local function and the expanded
//! topology `τ*`, the ideal constructions `I_A`, `I'_A`, `I_A^max` and `I_D`,
//! exhaustive enumeration of small topologies, and a verifier that checks the
//! expansion theorems on every instance it enumerates.
//!
//! ```
//! use idealtop::{constructions, IdealSpace, PointSet, Topology};
//!
//! // {∅, {0}, {0,1}, X} on three points
//! let chain = Topology::from_opens(3, [
//!     PointSet::EMPTY,
//!     PointSet::from_points([0]),
//!     PointSet::from_points([0, 1]),
//!     PointSet::full(3),
//! ]).unwrap();
//! let a = PointSet::from_points([0, 2]);
//! let ideal = constructions::ideal_ia_prime(&chain, a);
//! let expanded = IdealSpace::new(chain.clone(), ideal).unwrap().star_topology();
//! assert!(expanded.is_open(a));
//! assert!(expanded.is_connected());
//! ```

pub mod cli;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod ideal;
pub mod json;
pub mod pointset;
pub mod topology;
pub mod verifier;

pub use error::{Error, Result};
pub use ideal::{Ideal, IdealSpace};
pub use pointset::PointSet;
pub use topology::Topology;
