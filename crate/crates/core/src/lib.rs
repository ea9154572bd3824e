//! Exact Schur-ring computations over the infinite cyclic group `ℤ = ⟨z⟩` and
//! the infinite dihedral group `D∞ = ⟨z, s : s² = 1, s⁻¹zs = z⁻¹⟩`.
//!
//! Partitions of these infinite groups into finite classes are described by
//! finitely many affine templates ([`scheme`]). On top of that the crate
//! verifies the Schur-ring axioms exactly on a window of classes ([`verify`]),
//! and computes subgroup-level invariants, classifications, quotients onto
//! finite dihedral groups, and evidence for or against the traditional
//! constructions ([`analysis`]).
//!
//! All coefficients are exact rationals and all exponents use checked
//! arithmetic.

pub mod algebra;
pub mod analysis;
pub mod dihedral;
pub mod finite;
pub mod report;
pub mod scheme;
pub mod subgroup;
pub mod verify;

pub use algebra::{AlgebraElement, CoeffFn, Rational};
pub use dihedral::{Elem, Sign};
pub use finite::{quotient_map, FiniteElem};
pub use report::{CheckOutcome, VerificationReport, Witness};
pub use scheme::{automorphism_orbit_scheme, builtin_scheme, orbit_scheme, BasicSet, Builtin, GroupKind, PartitionScheme};
pub use subgroup::{finite_subgroups_up_to, generated_subgroup, Subgroup};
pub use verify::verify_axioms;
