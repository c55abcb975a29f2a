//! Finite abelian groups, their duals, acting groups and Haar bookkeeping.

pub mod abelian;
pub mod acting;
pub mod action;
pub mod measure;

pub use abelian::{make_abelian_group, AbelianElement, Character, FiniteAbelianGroup, RootsOfUnity};
pub use acting::ActingGroup;
pub use action::{automorphism_from_matrix, check_automorphism, dual_action, make_action, Action, AutomorphismTable};
pub use measure::MeasureWeights;
