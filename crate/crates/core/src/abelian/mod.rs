//! Exact arithmetic for finitely generated abelian groups.

pub mod character;
pub mod group;
pub mod hom;
pub mod matrix;
pub mod quotient;
pub mod small;
pub mod snf;

pub use character::Character;
pub use group::{CyclicSum, FgAbelianGroup, GroupElement};
pub use hom::{ext_group, hom_group, GroupHomomorphism};
pub use matrix::IntMatrix;
pub use quotient::{cokernel, image_order, kernel, subquotient, Subquotient};
pub use small::{PhaseTable, Radix, SmallHom};
pub use snf::{integer_kernel, smith_normal_form, SmithForm};

/// Pontryagin dual of a finite group.
pub fn dual_group(g: &FgAbelianGroup) -> crate::error::Result<FgAbelianGroup> {
    g.dual_group()
}

/// Dual of a homomorphism between finite groups.
pub fn dual_hom(f: &GroupHomomorphism) -> crate::error::Result<GroupHomomorphism> {
    f.dual()
}
