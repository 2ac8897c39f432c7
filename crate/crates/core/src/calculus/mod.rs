//! The hom complex `hom(C, G)`, its differentials and (co)homology.

pub mod cohomology;
pub mod differential;
pub mod orbits;
pub mod orthogonality;
pub mod space;
pub mod uct;

pub use cohomology::{
    cohomology, duality_rung, gsd, homology, CohomologyResult, DualityRung, Gsd, Side,
};
pub use differential::{differential, dual_differential, factored_dual_differential};
pub use orbits::{gauge_orbits, GaugeOrbits, DEFAULT_ENUM_CAP};
pub use orthogonality::{orthogonality_sweep, OrthogonalityReport};
pub use space::{hom_space, p_character, HomSpace, PMap, PRep, Site};
pub use uct::{uct_decomposition, uct_decomposition_at, UctDecomposition, UctTerm};
