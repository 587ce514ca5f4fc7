//! Alpha-spectral analysis of k-uniform hypergraphs: the spectral radius
//! and Perron vector of `A_alpha = alpha*D + (1-alpha)*A` by shifted power
//! iteration, degree-based upper bounds with equality diagnostics,
//! radius-increasing rewirings, extremal family generators, and an
//! exhaustive small-scale verification harness.

pub mod bounds;
pub mod cli;
pub mod families;
pub mod hypergraph;
pub mod spectral;
pub mod transforms;
pub mod verify;

pub use bounds::{BoundName, BoundReport, BoundsError, EqualityCase};
pub use families::{FamilyError, FamilySpec};
pub use hypergraph::{Classification, HypergraphError, PathWitness, UniformHypergraph};
pub use spectral::{Alpha, SpectralError, SpectralOptions, SpectralResult};
pub use transforms::{TransformError, TransformOutcome};
pub use verify::{EnumerationReport, FamilyConstraint, VerifyError};
