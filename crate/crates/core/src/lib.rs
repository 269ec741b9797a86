//! Exhaustive enumeration of plane graphs on small point sets, with exact
//! degree statistics and verifiers for bounds on the expected number of
//! low-degree vertices of a uniformly random plane graph.

pub mod analytic;
pub mod certified;
pub mod charging;
pub mod cli;
pub mod constructions;
pub mod crossing;
pub mod dyadic;
pub mod edgeset;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod pts;
pub mod verify;

pub use crossing::Universe;
pub use edgeset::EdgeSet;
pub use enumerate::EnumConfig;
pub use error::Error;
pub use geometry::{Point, PointSet};
