// SPDX-License-Identifier: Apache-2.0

//! The rational function field `F_q(x)`: functions, places, divisors,
//! Laurent expansions and Riemann-Roch spaces.

mod differential;
mod divisor;
mod laurent;
mod place;
mod rational;
mod riemann_roch;

pub use differential::{differential_divisor, pth_power_test};
pub use divisor::Divisor;
pub use laurent::{default_precision, laurent_expand, laurent_expand_in, LaurentSeries, LocalChart};
pub use place::{places_of_degree, places_up_to_degree, Place};
pub use rational::{rf_normalize, RationalFunction};
pub use riemann_roch::{prescribed_element, rr_basis, rr_dimension, SEARCH_LIMIT};
