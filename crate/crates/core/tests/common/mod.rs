// SPDX-License-Identifier: Apache-2.0
#![allow(dead_code)]

use proptest::prelude::*;
use ramforge::funcfield::{Place, RationalFunction};
use ramforge::{Field, Polynomial};

pub const SMALL_FIELDS: &[(u64, usize)] = &[(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];
pub const CHAR2_FIELDS: &[(u64, usize)] = &[(2, 1), (2, 2), (2, 3)];

pub fn field(pm: (u64, usize)) -> Field {
    Field::create(pm.0, pm.1).unwrap()
}

pub fn fields(list: &'static [(u64, usize)]) -> impl Strategy<Value = Field> {
    prop::sample::select(list).prop_map(field)
}

pub fn raw_coeffs(max_deg: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(any::<u64>(), 1..=max_deg + 1)
}

pub fn poly_from(f: &Field, raw: &[u64]) -> Polynomial {
    Polynomial::from_coeffs(f, raw.iter().map(|c| c % f.order()).collect())
}

/// Nonzero polynomial of degree at most `max_deg`.
pub fn nonzero_poly(f: &Field, raw: &[u64]) -> Polynomial {
    let p = poly_from(f, raw);
    if p.is_zero() {
        Polynomial::one(f)
    } else {
        p
    }
}

pub fn rational_from(f: &Field, num: &[u64], den: &[u64]) -> RationalFunction {
    RationalFunction::new(poly_from(f, num), nonzero_poly(f, den)).unwrap()
}

/// Field with a nonzero rational function of bounded degree.
pub fn field_and_function(
    list: &'static [(u64, usize)],
    max_deg: usize,
) -> impl Strategy<Value = (Field, RationalFunction)> {
    (fields(list), raw_coeffs(max_deg), raw_coeffs(max_deg)).prop_map(|(f, n, d)| {
        let r = rational_from(&f, &n, &d);
        let r = if r.is_zero() { RationalFunction::one(&f) } else { r };
        (f, r)
    })
}

/// Places of degree at most 2, infinity included.
pub fn place_of(f: &Field, index: usize) -> Place {
    let all = ramforge::funcfield::places_up_to_degree(f, 2);
    all[index % all.len()].clone()
}
