// SPDX-License-Identifier: Apache-2.0

mod common;

use common::*;
use proptest::prelude::*;
use ramforge::funcfield::{laurent_expand, pth_power_test, Place, RationalFunction};
use ramforge::pseudotame::{
    a_invariant, apply_quartic_moebius, cocycle_defect, differential_valuation, is_pseudotame_at,
    quartic_decompose,
};
use ramforge::Field;

fn non_square(max_deg: usize) -> impl Strategy<Value = (Field, RationalFunction)> {
    field_and_function(CHAR2_FIELDS, max_deg).prop_filter("square", |(_, x)| !x.derivative().is_zero())
}

fn another(f: &Field, n: &[u64], d: &[u64]) -> Option<RationalFunction> {
    let y = rational_from(f, n, d);
    (!y.derivative().is_zero()).then_some(y)
}

/// Coefficients of `(1 + c u)^k` up to `u^(len-1)`.
fn binomial_series(f: &Field, c: u64, k: i64, len: usize) -> Vec<u64> {
    let base: Vec<u64> = if k >= 0 {
        let mut v = vec![0; len];
        v[0] = 1;
        if len > 1 {
            v[1] = c;
        }
        v
    } else {
        // 1 / (1 + c u) = sum (-c)^j u^j
        let mut v = vec![0; len];
        let mut acc = 1;
        for slot in v.iter_mut() {
            *slot = acc;
            acc = f.mul(acc, f.neg(c));
        }
        v
    };
    let mut out = vec![0; len];
    out[0] = 1;
    for _ in 0..k.unsigned_abs() {
        let mut next = vec![0; len];
        for (i, &a) in out.iter().enumerate() {
            for (j, &b) in base.iter().enumerate().take(len - i) {
                next[i + j] = f.add(next[i + j], f.mul(a, b));
            }
        }
        out = next;
    }
    out
}

/// Laurent criterion evaluated against the prime element `u (1 + c u)`.
fn criterion_in_shifted_prime(x: &RationalFunction, place: &Place, c: u64) -> bool {
    let f = x.field();
    let bound = differential_valuation(x, place).unwrap() + 1;
    let v = x.valuation(place).unwrap();
    if v >= bound {
        return true;
    }
    let len = (bound - v) as usize;
    let s = laurent_expand(x, place, len).unwrap();
    let mut r: Vec<u64> = (v..bound).map(|k| s.coeff(k)).collect();
    let mut ok = true;
    for k in v..bound {
        let i = (k - v) as usize;
        let b = r[i];
        if b == 0 {
            continue;
        }
        if k.rem_euclid(4) != 0 {
            ok = false;
        }
        let series = binomial_series(f, c, k, len - i);
        for (j, &sj) in series.iter().enumerate() {
            r[i + j] = f.sub(r[i + j], f.mul(b, sj));
        }
    }
    ok
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn decomposition_round_trip((f, x) in field_and_function(CHAR2_FIELDS, 6), n in raw_coeffs(6), d in raw_coeffs(6)) {
        let Some(y) = another(&f, &n, &d) else { return Ok(()) };
        let dec = quartic_decompose(&x, &y).unwrap();
        prop_assert_eq!(dec.expand(), x);
    }

    #[test]
    fn invariant_vanishes_on_diagonal((_f, x) in non_square(6)) {
        prop_assert!(a_invariant(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn cocycle_defect_is_a_square(
        (f, x) in non_square(4),
        n1 in raw_coeffs(4), d1 in raw_coeffs(4), n2 in raw_coeffs(4), d2 in raw_coeffs(4),
    ) {
        let (Some(y), Some(t)) = (another(&f, &n1, &d1), another(&f, &n2, &d2)) else { return Ok(()) };
        prop_assert!(cocycle_defect(&x, &y, &t).unwrap().derivative().is_zero());
    }

    #[test]
    fn invariant_symmetric_mod_squares((f, x) in non_square(5), n in raw_coeffs(5), d in raw_coeffs(5)) {
        let Some(y) = another(&f, &n, &d) else { return Ok(()) };
        let s = &a_invariant(&x, &y).unwrap() + &a_invariant(&y, &x).unwrap();
        prop_assert!(pth_power_test(&s).is_some());
    }

    #[test]
    fn pgl_invariance(
        (f, x) in non_square(4),
        entries in prop::collection::vec((raw_coeffs(1), raw_coeffs(1)), 4),
        idx in 0usize..64,
    ) {
        let m: Vec<RationalFunction> = entries.iter().map(|(n, d)| rational_from(&f, n, d)).collect();
        let det = &(&m[0] * &m[3]) - &(&m[1] * &m[2]);
        prop_assume!(!det.is_zero());
        let gx = apply_quartic_moebius(&x, &m[0], &m[1], &m[2], &m[3]).unwrap();
        let place = place_of(&f, idx);
        prop_assert_eq!(is_pseudotame_at(&x, &place).unwrap(), is_pseudotame_at(&gx, &place).unwrap());
    }

    #[test]
    fn prime_element_independence((f, x) in non_square(6), c in any::<u64>(), a in any::<u64>()) {
        let place = Place::rational(&f, a % f.order());
        let c = c % f.order();
        prop_assert_eq!(is_pseudotame_at(&x, &place).unwrap(), criterion_in_shifted_prime(&x, &place, c));
    }
}
