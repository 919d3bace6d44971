//! Bier spheres of simplicial complexes: construction, classification of
//! full subcomplexes, bigraded Betti numbers and real toric invariants.
//!
//! Everything is exact. Rational ranks use fraction-free elimination with a
//! big-integer fallback; torsion comes from an integral diagonal form.

pub mod betti;
pub mod bier;
pub mod check;
pub mod classify;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod fixtures;
pub mod homology;
pub mod io;
mod linalg;
pub mod report;
pub mod subset;
pub mod toric;

pub use bier::{bier_sphere, build_a, cover_pieces, deleted_join, BierComplex, BierIndex};
pub use complex::{Complex, FVector, HVector};
pub use error::{Error, Result};
pub use homology::{integral_homology, reduced_betti_q, HomologyResult, ReducedBetti};
pub use subset::VertexSet;
