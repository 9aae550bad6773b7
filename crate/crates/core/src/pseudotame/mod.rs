// SPDX-License-Identifier: Apache-2.0

//! Pseudo-tameness in characteristic 2 over `F_{2^m}(w)`: quartic
//! decompositions, the invariant `a(x, y)`, Laurent tests at places, and
//! constructive square completion and pole reduction.

mod lemmas;
mod local;
mod quartic;

pub use lemmas::{default_pole_budget, quartic_pole_reduction, square_completion};
pub use local::{
    apply_quartic_moebius, critical_places, differential_valuation, is_pseudotame_at,
    is_pseudotame_everywhere, is_tame_at, pseudotame_obstructions, ramification_at,
    regular_mod_squares,
};
pub use quartic::{a_invariant, cocycle_defect, quartic_decompose, verify_a_solution, QuarticDecomposition};

use crate::error::{Error, Result};
use crate::galois::Field;

fn require_char2(field: &Field) -> Result<()> {
    if field.p() != 2 {
        return Err(Error::Precondition(format!(
            "pseudo-tame tools need characteristic 2, got {}",
            field.p()
        )));
    }
    Ok(())
}
