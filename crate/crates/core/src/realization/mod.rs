//! Free-field generator tables inside the Fock space and the identities they
//! satisfy: Virasoro decompositions, singular vectors, the `Delta_3`
//! determinant and the classification polynomials.

mod classify;
mod decompositions;
mod singular;
mod tables;

pub use classify::{classification_polys, classify_box, delta3_terms, delta3_vector, PolyValues};
pub use decompositions::{virasoro_decompositions, IdentityCheck};
pub use singular::{singular_check, AffineWeight, SingularReport};
pub use tables::{cartan_elements, estar, CartanElements, EntryKind, GeneratorTable, TableEntry, TableKind};
