//! Hardness constructions: the `D_a` and `D_a^+` measures, coordinate
//! values, the alignment gadget, the OR-composition and the reduction from
//! orthogonal vectors.
//!
//! Symbols are fixed so instances are byte-reproducible: coordinate values
//! use `0, 1`; vector gadgets use `A, B = 2, 3`; set gadgets use
//! `A, B = 4, 5`; the OR-composition uses `A, B, C = 6, 7, 8` and `D = 10`;
//! `$ = 11` pads inside `D_a^+`.

mod alignment;
mod measure;
mod or_comp;
mod ov;

pub use alignment::{alignment_gadget, gadget_x, gadget_y, AlignmentGadget};
pub use measure::{coordinate_x, coordinate_y, d_a, d_plus, eda_value, pad_dollar, PAD};
pub use or_comp::{or_composition, or_composition_with, OrComposition, OrSymbols};
pub use ov::{ov_reduce, GadgetInstance, GadgetMeta, OvInstance, OvReduction, ReferenceValues};
