//! Geometric and gauge chain complexes.

pub mod graded;
pub mod model;
pub mod resolution;
pub mod simplicial;

pub use graded::{betti_and_torsion, homology_of_chain, GradedChain};
pub use model::GaugeModel;
pub use resolution::{cyclic_group_ring_resolution, cyclic_resolution_chain};
pub use simplicial::{from_simplicial, SimplicialComplex};
