//! Exact combinatorial chain topology: delta-complexes with rational
//! chains, l1-seminorms of homology classes computed by exact linear
//! programming with dual certificates, signed-measure chains, cyclic
//! covers with transfer, barycentric subdivision, and finite smearing.
//!
//! Every number that leaves this crate is an exact `BigRational`; there
//! are no floating-point code paths.

pub mod chain;
pub mod covering;
pub mod delta_complex;
pub mod error;
pub mod linalg;
pub mod lp;
pub mod lp_oracle;
pub mod measure;
pub mod par;
pub mod paths;
pub mod rational;
pub mod seminorm;
pub mod smearing;
pub mod subdivision;

pub use chain::{
    boundary, coboundary, homology_class_decompose, kronecker, l1_norm, pull_cochain, push_chain,
    sup_norm, RationalChain, RationalCochain, SimplicialMap,
};
pub use covering::{
    auto_cocycle, build_cyclic_cover, cover_is_connected, covering_multiplicativity_check,
    degree, project_chain, transfer, CoveringMap, EdgeCocycle,
};
pub use delta_complex::{
    build_circle, build_polygon_surface, build_solid_simplex, build_sphere, ComplexReport,
    DeltaComplex,
};
pub use error::{ComplexId, Error, Result};
pub use measure::{
    chain_from_measure, hahn_decompose, include_chain, integrate, measure_boundary,
    measure_kronecker, pushforward, total_variation, Carrier, HahnJordan, MeasureChain,
    SignedMeasure,
};
pub use paths::{
    circle_winding, path_class, path_norm_bound, path_norm_bound_search, wrap_path, EdgePath,
    PathChain,
};
pub use rational::{format_rational, parse_rational, Rational};
pub use smearing::{
    class_from_integration, integrate_volume, proportionality_check, smear, volume, CoverTower,
    ProportionalityReport, VolumeCochain,
};
pub use subdivision::{barycentric_subdivide, is_simplicial, Subdivision};
pub use seminorm::{
    class_norm, dual_norm, verify_certificate, CertificateIssue, DualNorm, LpCertificate,
};
