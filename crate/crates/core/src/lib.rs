//! Orbit spaces of Hamiltonian torus actions from fixed-point data.
//!
//! A [`HamSpec`] lists the fixed components of the action with their moments
//! and isotropy weights. From it the crate rebuilds the momentum polytope,
//! labels every face with its complexity, names the topology of `M/T` for
//! complexity at most one, and checks the answer against the homology of a
//! simplicial model.

pub mod classify;
pub mod error;
pub mod exactq;
pub mod gallery;
pub mod hamspace;
pub mod polytope;
pub mod simplicial;

pub use classify::{classify, classify_m4, join_presentation, Fiber, Provenance, TopologyReport, Verdict};
pub use error::{Error, Result};
pub use exactq::{IntMatrix, QVector, RatMatrix, Rational};
pub use hamspace::{
    general_position, stratify, validate, CheckStatus, ComponentKind, FixedComponent, HamSpec, StratifiedPolytope,
    ValidationReport, WeightVector,
};
pub use polytope::{convex_hull, face_lattice, Face, FaceLattice, RationalPolytope};
pub use simplicial::{verify_report, HomologyProfile, OrderedComplex, VerificationResult, VerificationStatus};
