// SPDX-License-Identifier: Apache-2.0

//! Prime and extension finite fields with canonical moduli and embeddings.

mod element;
mod embed;
mod field;

pub use element::{element_arith, ElementOp, FieldElement};
pub use embed::{embed, Embedding};
pub use field::{is_prime, Field, DEFAULT_MAX_ORDER};

pub(crate) use field::{canonical_irreducible, prime_factors};
