//! Exact symbolic invariants of Shilov boundaries of bounded symmetric domains.
//!
//! Irreducible bounded symmetric domains come in six Cartan families,
//! `I(p,q)`, `II(n)`, `III(n)`, `IV(n)`, `V`, `VI`. Each has a distinguished
//! compact subset of its topological boundary, the Shilov boundary, which is
//! a homogeneous space of a compact group (a complex Stiefel manifold, a
//! Lagrangian-type quotient, a Lie sphere, ...). This crate models those
//! boundaries symbolically, attaches to each a vector of homotopy invariants
//! (dimension, fundamental group, low homotopy groups, cohomology torsion,
//! the Poincaré polynomial of a canonical cover), and decides, with an
//! explicit certificate, which invariant separates any two non-isomorphic
//! irreducible domains.
//!
//! All arithmetic is exact: parameters are integers, Poincaré polynomials
//! have arbitrary-precision integer coefficients, and every comparison is an
//! equality test. Homotopy facts that cannot be computed from dimension
//! arithmetic are stored as cited table entries, never derived numerically.
//!
//! Modules:
//! - [`domains`]: domain specs, canonical parameter ranges, dimension/rank tables
//! - [`boundary`]: symbolic Shilov boundary models and their dimensions
//! - [`graded`]: exact Poincaré polynomial arithmetic and exterior-algebra factorization
//! - [`invariants`]: the invariant vector and its fact table, with citations
//! - [`mod@distinguish`]: the certificate-producing decision procedure
//! - [`verify`]: bounded exhaustive sweeps and coincidence hunting

pub mod boundary;
pub mod distinguish;
pub mod domains;
pub mod graded;
pub mod invariants;
pub mod verify;

pub use boundary::{
    lie_sphere_bundle_trivial, lie_sphere_orientable, shilov_dim, shilov_model, CompactGroup,
    ShilovModel,
};
pub use distinguish::{distinguish, explain, Certificate, SeparationStep};
pub use domains::{DomainError, DomainSpec, Family, Irreducible, TubeClass};
pub use graded::{
    exterior_poincare, kunneth, recover_generators, DegreeMultiset, GradedPoly, NotExteriorForm,
};
pub use invariants::{
    agrees_on_known, invariant_vector, type_v_alexander_check, CoverKind, InvariantVector, Pi1Desc,
    TriState,
};
pub use verify::{
    enumerate_domains, find_coincidences, verify_theorem, Coincidence, VerificationReport,
};
