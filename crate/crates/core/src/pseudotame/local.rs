// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use super::require_char2;
use crate::error::{Error, Result};
use crate::funcfield::{differential_divisor, laurent_expand, Place, RationalFunction};

/// `v_P(dx)`, taking `dw` as the reference differential: `v_P(x')` plus `-2`
/// at infinity.
pub fn differential_valuation(x: &RationalFunction, place: &Place) -> Result<i64> {
    let dx = x.derivative();
    let v = dx.valuation(place).ok_or(Error::Inseparable)?;
    Ok(if place.is_infinite() { v - 2 } else { v })
}

/// Ramification index at `P` of `F_q(w)` over `F_q(x)`.
pub fn ramification_at(x: &RationalFunction, place: &Place) -> Result<u64> {
    let vdx = differential_valuation(x, place)?;
    let v = x.valuation(place).ok_or(Error::ZeroFunction)?;
    if v < 0 {
        return Ok((-v) as u64);
    }
    // the first nonconstant term sits at an exponent at most v_P(dx) + 1
    let prec = (vdx + 2 - v).max(1) as usize;
    let s = laurent_expand(x, place, prec)?;
    let first = s.terms().find(|&(k, _)| k > 0).map(|(k, _)| k as u64);
    first.ok_or_else(|| Error::Internal("no nonconstant Laurent term below v_P(dx) + 2".into()))
}

/// Whether the characteristic does not divide the ramification index at `P`.
pub fn is_tame_at(x: &RationalFunction, place: &Place) -> Result<bool> {
    Ok(ramification_at(x, place)? % x.field().p() != 0)
}

fn require_non_square(x: &RationalFunction) -> Result<()> {
    require_char2(x.field())?;
    if x.derivative().is_zero() {
        return Err(Error::PthPower(2));
    }
    Ok(())
}

/// Laurent test: every nonzero term of exponent below `v_P(dx) + 1` has an
/// exponent divisible by 4.
pub fn is_pseudotame_at(x: &RationalFunction, place: &Place) -> Result<bool> {
    require_non_square(x)?;
    let bound = differential_valuation(x, place)? + 1;
    let v = x.valuation(place).ok_or(Error::ZeroFunction)?;
    if v >= bound {
        return Ok(true);
    }
    let s = laurent_expand(x, place, (bound - v) as usize)?;
    let ok = s.terms().filter(|&(k, _)| k < bound).all(|(k, _)| k.rem_euclid(4) == 0);
    Ok(ok)
}

/// Places where the Laurent test could fail: poles of `x` and zeros of `dx`.
pub fn critical_places(x: &RationalFunction) -> Result<Vec<Place>> {
    require_non_square(x)?;
    let mut out: BTreeSet<Place> = BTreeSet::new();
    out.extend(x.pole_divisor()?.support().cloned());
    out.extend(
        differential_divisor(x)?
            .iter()
            .filter(|(_, n)| *n > 0)
            .map(|(p, _)| p.clone()),
    );
    Ok(out.into_iter().collect())
}

/// Places where `x` fails to be pseudo-tame.
pub fn pseudotame_obstructions(x: &RationalFunction) -> Result<Vec<Place>> {
    let mut bad = Vec::new();
    for p in critical_places(x)? {
        if !is_pseudotame_at(x, &p)? {
            bad.push(p);
        }
    }
    Ok(bad)
}

/// Pseudo-tameness at every place; elsewhere `v_P(dx) = 0` and the test is void.
pub fn is_pseudotame_everywhere(x: &RationalFunction) -> Result<bool> {
    Ok(pseudotame_obstructions(x)?.is_empty())
}

/// `(a^4 x + b^4) / (c^4 x + d^4)`.
pub fn apply_quartic_moebius(
    x: &RationalFunction,
    a: &RationalFunction,
    b: &RationalFunction,
    c: &RationalFunction,
    d: &RationalFunction,
) -> Result<RationalFunction> {
    require_char2(x.field())?;
    let det = &(a * d) - &(b * c);
    if det.is_zero() {
        return Err(Error::Precondition("singular transformation: ad + bc = 0".into()));
    }
    let q = |f: &RationalFunction| {
        let s = f * f;
        &s * &s
    };
    let num = &(&q(a) * x) + &q(b);
    let den = &(&q(c) * x) + &q(d);
    num.div(&den)
}

/// A representative of `a` modulo squares that is regular at `P`, if any.
/// Odd negative exponents in the expansion of `a` cannot be removed; even
/// ones are cancelled by subtracting `c u^k`, a square.
pub fn regular_mod_squares(a: &RationalFunction, place: &Place) -> Result<Option<RationalFunction>> {
    require_char2(a.field())?;
    if place.degree() != 1 {
        return Err(Error::Precondition(format!(
            "{} is not a degree-1 place",
            place.label('w')
        )));
    }
    let v = match a.valuation(place) {
        None => return Ok(Some(a.clone())),
        Some(v) => v,
    };
    if v >= 0 {
        return Ok(Some(a.clone()));
    }
    let s = laurent_expand(a, place, (-v) as usize)?;
    let field = a.field();
    let u = place.prime_element(field);
    let mut out = a.clone();
    for (k, c) in s.terms().filter(|&(k, _)| k < 0) {
        if k % 2 != 0 {
            return Ok(None);
        }
        let term = &u.pow(k)? * &RationalFunction::constant(field, c);
        out = &out - &term;
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;
    use crate::polyring::Polynomial;

    fn rf(field: &Field, n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(field, n), Polynomial::from_ints(field, d)).unwrap()
    }

    #[test]
    fn laurent_criterion_examples() {
        let f2 = Field::prime(2).unwrap();
        let zero = Place::rational(&f2, 0);
        assert!(!is_pseudotame_at(&rf(&f2, &[0, 0, 1, 0, 0, 1], &[1]), &zero).unwrap());
        assert!(is_pseudotame_at(&rf(&f2, &[0, 0, 0, 0, 1, 1], &[1]), &zero).unwrap());
        assert!(is_pseudotame_at(&rf(&f2, &[0, 0, 0, 1], &[1]), &zero).unwrap());
        assert!(is_pseudotame_at(&rf(&f2, &[1, 0, 1], &[1]), &zero).is_err());
    }

    #[test]
    fn moebius_examples() {
        let f2 = Field::prime(2).unwrap();
        let one = RationalFunction::one(&f2);
        let zero = RationalFunction::zero(&f2);
        let x = rf(&f2, &[0, 1], &[1]);
        assert_eq!(
            apply_quartic_moebius(&x, &one, &one, &zero, &one).unwrap(),
            rf(&f2, &[1, 1], &[1])
        );
        let w5 = rf(&f2, &[0, 0, 0, 0, 0, 1], &[1]);
        let inv = apply_quartic_moebius(&w5, &zero, &one, &one, &zero).unwrap();
        assert_eq!(inv, rf(&f2, &[1], &[0, 0, 0, 0, 0, 1]));
        let zp = Place::rational(&f2, 0);
        assert!(is_pseudotame_at(&w5, &zp).unwrap());
        assert!(is_pseudotame_at(&inv, &zp).unwrap());
        assert_eq!(apply_quartic_moebius(&x, &one, &zero, &zero, &one).unwrap(), x);
        assert!(apply_quartic_moebius(&x, &one, &one, &one, &one).is_err());
    }

    #[test]
    fn regular_mod_squares_examples() {
        let f2 = Field::prime(2).unwrap();
        let zp = Place::rational(&f2, 0);
        let r = regular_mod_squares(&rf(&f2, &[1], &[0, 0, 1]), &zp).unwrap();
        assert_eq!(r, Some(RationalFunction::zero(&f2)));
        assert_eq!(regular_mod_squares(&rf(&f2, &[1], &[0, 1]), &zp).unwrap(), None);
        assert_eq!(regular_mod_squares(&rf(&f2, &[1, 1], &[0, 0, 0, 0, 1]), &zp).unwrap(), None);
        let a = rf(&f2, &[1, 0, 1, 0, 0, 1], &[0, 0, 0, 0, 1]);
        let r = regular_mod_squares(&a, &zp).unwrap().unwrap();
        assert!(r.valuation(&zp).unwrap() >= 0);
        assert!(crate::funcfield::pth_power_test(&(&r - &a)).is_some());
    }

    #[test]
    fn tameness() {
        let f2 = Field::prime(2).unwrap();
        let zp = Place::rational(&f2, 0);
        assert!(is_tame_at(&rf(&f2, &[0, 0, 0, 1], &[1]), &zp).unwrap());
        assert!(!is_tame_at(&rf(&f2, &[1, 0, 1, 1], &[1]), &zp).unwrap());
        assert!(is_tame_at(&rf(&f2, &[0, 0, 0, 1], &[1]), &Place::Infinite).unwrap());
        assert!(is_pseudotame_everywhere(&rf(&f2, &[0, 1], &[1])).unwrap());
        assert!(!is_pseudotame_everywhere(&rf(&f2, &[0, 0, 1, 0, 0, 1], &[1])).unwrap());
    }
}
