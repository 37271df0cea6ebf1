//! The cubic Hecke algebras H3 and H4: irreducible models, braid-word families,
//! restrictions, the relations cutting out the Links-Gould quotient, and ranks.

pub mod element;
pub mod expansions;
pub mod labels;
pub mod models;
pub mod quotient;
pub mod rank;
pub mod relations;
pub mod restriction;
pub mod words;

pub use element::AlgebraElement;
pub use labels::{h3_labels, h4_labels, IrrepKind, IrrepLabel};
pub use models::{build_h4_irreps, build_model, IrrepModel, ModPoint};
