//! Temporal graphs, strict journeys and temporal resolving sets.
//!
//! A temporal graph assigns each edge a set of time labels, either a finite
//! set or residues repeating with a fixed period. A strict journey uses edges
//! at strictly increasing times, and the distance from `u` to `v` is the
//! earliest arrival time at `v`. A resolving set is a set of landmarks that
//! reaches every vertex and gives every vertex a distinct vector of arrival
//! times.
//!
//! The crate provides a verifier, an exhaustive oracle, exact solvers for
//! paths, stars, subdivided stars and several periodic classes, the
//! hardness-reduction gadgets, random generators and a text format.

pub mod dispatch;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod path;
pub mod periodic;
pub mod reductions;
pub mod shape;
pub mod star;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Dist, Edge, Mode, StaticGraph, TemporalGraph, Time, TimeLabelSet, Vertex};
pub use shape::{classify_shape, ShapeClass};
pub use verify::{check_resolving, DistanceTable, DistanceVector, ResolutionCertificate, Verdict};
