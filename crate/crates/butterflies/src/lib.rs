//! Exact computations with finite crossed-modules and the weak morphisms
//! between them, represented as butterflies: a single group `E` with four
//! structure maps whose NE-SW diagonal is a short exact sequence.
//!
//! The crate covers validation of all the structures involved, homotopy
//! invariants, composition, kernels and cokernels, long exact sequences,
//! the cocycle dictionary for weak morphisms, braided and abelian variants,
//! group cohomology up to degree 3 via the normalized bar resolution, and
//! Schreier enumeration of group extensions with their second-cohomology
//! torsor structure.
//!
//! Everything is desk-scale by design: groups are multiplication tables with
//! dense element indices, all constructions re-validate their outputs, and
//! the enumerative operations are exhaustive rather than clever.

pub mod error;
pub mod group;
pub mod hom;
pub mod action;
pub mod semidirect;
pub mod extension;
pub mod xmod;

pub use error::{Error, Result};
pub use group::{make_group, set_size_limit, size_limit, FiniteGroup, IDENTITY};
pub use hom::{
    all_homs, constrained_hom_search, constrained_isomorphism_search, isomorphism_search,
    make_hom, quotient_by_normal, subgroup_group, GroupHom,
};
pub use action::{make_action, RightAction};
pub use semidirect::{generalized_semidirect, theta_pushforward, SemidirectData, SemidirectProduct};
pub use extension::{extension_isomorphism, make_extension, split_extension, Extension};
pub use xmod::{
    compose_transformations, enumerate_strict_morphisms, homotopy_groups, invert_transformation,
    is_equivalence_strict, make_crossed_module, make_strict_morphism, pushout_xmod, split_model,
    validate_transformation, CrossedModule, HomotopyGroups, SplitModel, StrictMorphism,
    Transformation,
};
