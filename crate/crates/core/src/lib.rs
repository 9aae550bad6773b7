// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic over finite fields and the rational function field
//! `F_q(x)`, ramification analysis of rational covers of the projective
//! line, explicit wild and tame Belyi maps, and the characteristic-2
//! pseudo-tame toolkit.

pub mod belyi;
pub mod cover;
pub mod error;
pub mod funcfield;
pub mod galois;
pub mod polyring;
pub mod pseudotame;
pub mod text;

pub use error::{Error, ErrorKind, Result};
pub use galois::{Field, FieldElement};
pub use polyring::{Factorization, Polynomial};
