// SPDX-License-Identifier: Apache-2.0

//! Dense univariate polynomials over finite fields and their factorization.

mod factor;
mod poly;

pub use factor::{
    distinct_degree, equal_degree, factor, irreducible_poly, irreducibles, is_irreducible, roots,
    squarefree_decompose, Factorization,
};
pub use poly::Polynomial;
