//! Exact computations in module categories of Nakayama algebras: extension closures and
//! generation times, Orlov spectra, radical layer lengths for torsion pairs, and ghost and
//! coghost maps, with an independent linear-algebra oracle over the two-element field.

pub mod algebra;
pub mod closure;
pub mod error;
pub mod extprod;
pub mod homext;
pub mod indecset;
pub mod layers;
pub mod morphism;
pub mod oracle;
pub mod verify;

pub use algebra::{Algebra, AlgebraDescriptor, ModuleSum, Relation, Shape, SpiClass, Uniserial};
pub use closure::{orlov_spectrum, ExtensionClosure, OrlovSpectrum, SpectrumOptions};
pub use error::{Error, Result};
pub use homext::{
    ar_quiver, ext1_nonzero, fac_closure, hom_dim, sub_closure, ArArrow, ArQuiver, ArrowKind,
};
pub use indecset::IndecSet;
pub use layers::{
    algebra_llts, finite_pd_simples, injective_dimension, layer_generation_times,
    projective_dimension, radical_layer_length, torsion_radical, wd_generator, TorsionSpec,
};
pub use morphism::{compose, is_coghost, is_ghost, is_radical_morphism, Morphism};
