//! Triangulated 2- and 3-manifolds with exact combinatorial certificates
//! and numerical contact-geometry checks.
//!
//! The crate is organized around a small set of explicit triangulations
//! (spheres, solid tori, the Walkup complex, periodic cube meshes) together
//! with the machinery needed to verify their advertised properties:
//!
//! * [`complex`] — abstract simplicial complexes, face enumeration, links,
//!   boundaries, manifold/surface certificates, and the facet-list text
//!   format;
//! * [`collapse`] — greedy free-face collapsing and 3-ball certificates;
//! * [`algebra`] — integer boundary matrices, Smith normal form, homology,
//!   cycle classes, and edge-path group presentations;
//! * [`generators`] — deterministic constructors for every named complex,
//!   with geometric realizations where coordinates are available;
//! * [`blocks`] — the five-, ten-, and twelve-tetrahedron cube blocks and
//!   the glued periodic assemblies built from them;
//! * [`surgery`] — elementary connected sums, iterated sum chains, and
//!   vertex-identification quotients;
//! * [`symmetry`] — automorphism groups, orbits, and isomorphism search;
//! * [`geometry`] — realizations, metric measurements, Legendrian and
//!   tangency checks, twist profiles, and the meridional-disk fit;
//! * [`ledger`] — writhe/self-linking bookkeeping and the vertex-count
//!   formulas for twisted contact structures.
//!
//! All operations are pure functions over immutable values; outputs are
//! deterministic and byte-stable.

pub mod algebra;
pub mod blocks;
pub mod collapse;
pub mod complex;
pub mod generators;
pub mod geometry;
pub mod ledger;
pub mod surgery;
pub mod symmetry;

pub use complex::{FVector, ManifoldCertificate, SimplicialComplex, SurfaceCertificate};
pub use generators::NamedComplex;
