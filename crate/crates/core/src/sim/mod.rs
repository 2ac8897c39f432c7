//! Exact simulation of the configuration Hilbert space `H^0 = ℓ²(hom^0)`.
//!
//! Basis states are 0-maps indexed in mixed radix. Shifts, clocks, the
//! fake-gauge and fake-holonomy operators, the Hamiltonian and the ground
//! projector are built from the hom-calculus differentials and compared
//! against the exact homological results.

pub mod basis;
pub mod checks;
pub mod ground;
pub mod operator;
pub mod simulator;

pub use basis::{BasisIndexer, StateVector};
pub use checks::{run_checks, Check, SimReport, Status, Suite};
pub use ground::{
    basis_change_matrix, ground_basis, ground_density, mixed_overlaps, povm_check, thermodynamics,
    GroundDensity, GroundSpace, GroundState, PovmReport, Thermodynamics,
};
pub use operator::{apply_clock, apply_shift, Operator};
pub use simulator::{LocalKind, LocalProjector, Simulator, TraceGsd, DEFAULT_MAX_DIM, TOLERANCE};
