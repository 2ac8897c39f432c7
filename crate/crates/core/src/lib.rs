//! Exact engine for abelian higher gauge models on chain complexes.
//!
//! The homological path (Smith forms, hom complexes, (co)homology, UCT) is
//! exact over arbitrary-precision integers. The simulator builds the
//! configuration Hilbert space of a finite model and checks the operator
//! algebra numerically against it.

pub mod abelian;
pub mod calculus;
pub mod chain;
pub mod error;
pub mod io;
pub mod library;
pub mod sim;

pub use abelian::{
    dual_group, dual_hom, ext_group, hom_group, smith_normal_form, subquotient, Character,
    CyclicSum, FgAbelianGroup, GroupElement, GroupHomomorphism, IntMatrix,
};
pub use calculus::{
    cohomology, differential, dual_differential, gauge_orbits, gsd, hom_space, homology,
    p_character, uct_decomposition, CohomologyResult, HomSpace, PMap, PRep,
};
pub use chain::{
    cyclic_resolution_chain, from_simplicial, homology_of_chain, GaugeModel, GradedChain,
    SimplicialComplex,
};
pub use error::{Error, Result};
pub use io::ModelFile;
pub use sim::{Simulator, DEFAULT_MAX_DIM};
