//! Exact halving lines of planar point sets.
//!
//! Given an even number of points in general position, a *halving line*
//! passes through two of them and leaves the same number of the remaining
//! points on each side. Joining every such pair gives the *underlying
//! geograph*. This crate computes it with exact rational arithmetic, splits
//! it into connected components, builds new configurations whose underlying
//! graph is a prescribed disjoint union ([`cross`]), and audits the known
//! structural results (degree excess, chains, component subtraction,
//! component halves) on concrete inputs ([`audit`]).
//!
//! ```
//! use halving_core::{halving_edges, Point, PointConfig};
//!
//! let square = PointConfig::new(vec![
//!     Point::from_ints(0, 0),
//!     Point::from_ints(2, 0),
//!     Point::from_ints(2, 2),
//!     Point::from_ints(0, 2),
//! ])
//! .unwrap();
//! assert_eq!(halving_edges(&square).edges(), &[(0, 2), (1, 3)]);
//! ```

pub mod audit;
pub mod chains;
pub mod config;
pub mod construct;
pub mod error;
pub mod exact;
pub mod format;
pub mod halving;
mod kernel;
pub mod orientation;

pub use audit::{
    audit, verify_balance_theorem, verify_component_halves, verify_componentmix, verify_leftright, verify_subtraction,
    AuditReport, CheckRecord, Status, Witness,
};
pub use chains::{chain_decomposition, Chain, ChainDecomposition};
pub use config::PointConfig;
pub use construct::{cross, generate, segmentarize, CrossResult, GeneratorSpec, Shape};
pub use error::Error;
pub use exact::{affine_apply, g_balance, orient, side_of, AffineMap, DirectedLine, Point, Scalar, Side};
pub use halving::{components, halving_edges, halving_edges_reference, is_halving_pair, ComponentPartition, Geograph};
pub use orientation::{choose_direction, direction_candidates, Direction, OrientedGeograph};
