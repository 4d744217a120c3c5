//! A quantum symmetric pair coideal subalgebra of U_q(gl4), concretely:
//! the subalgebra generated by `B-1, B0, B1` and the invertible Cartan-like
//! elements `Dd, D1`, together with its representation theory at desk scale.
//!
//! - [`element`]: free words in the generators, alias expansion for the
//!   derived elements X, Y, Z, W, Khat, and the defining relations.
//! - [`pbw`]: PBW normal forms via a faithful representation, products,
//!   identity checking, the grading, and the involution tau.
//! - [`verma`]: Verma modules, weight tables, raising/lowering operators,
//!   hom classification, finite-dimensional quotients, BGG resolutions.
//! - [`tensor`]: the natural 4-dimensional module, tensor powers, the
//!   type-B Hecke action, Jucys-Murphy spectra, and decomposition.
//! - [`center`]: central elements, central characters, and the
//!   Harish-Chandra-style projection with its Weyl-group symmetry.
//! - [`expr`]: the expression grammar shared with the command-line tool.

pub mod center;
pub mod element;
pub mod expr;
pub mod matrix;
pub mod par;
pub mod pbw;
pub mod tensor;
pub mod verma;

pub use center::{
    central_character, central_character_of, central_elements, embed_cartan, hc_project,
    hw_scalar_action, is_central, w_gl2, ws_extended_check, ws_reflect, weyl_hom_test,
    weyl_weight_dictionary, CartanElement, CenterError, CentralCharacter, CentralElement,
    CentralName, ExtIndex, ExtendedCartan, WsReport,
};
pub use element::{alias_expand, defining_relations, khat_bracket0, Alias, Element, Generator, Word};
pub use matrix::{Matrix, Span};
pub use pbw::{check_identity, midx, multiply, normal_form, p_act, PBWElement, PBWIndex};
pub use verma::{
    bgg_resolution, epm_scalar, exceptional_probe, exceptional_probe_with_depth, f_basis_vector,
    fd_quotient, hom_exists, magical_apply, magical_element, verma_act, weight_of, weight_table,
    HighestWeight, HomCase, IrreducibleModule, MagicalDir, Sign, VermaError, VermaVector, Weight,
};
