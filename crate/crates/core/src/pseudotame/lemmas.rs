// SPDX-License-Identifier: Apache-2.0

use super::local::{differential_valuation, is_pseudotame_at, is_tame_at, ramification_at};
use super::require_char2;
use crate::error::{Error, Result};
use crate::funcfield::{
    laurent_expand, places_of_degree, prescribed_element, rr_basis, Divisor, Place, RationalFunction,
};
use crate::galois::Field;

/// Iterations allowed in the completion loops before reporting a bug.
const MAX_STEPS: usize = 256;

/// Default size of the auxiliary pole divisor: `deg x + 4` places.
pub fn default_pole_budget(x: &RationalFunction) -> usize {
    x.degree() + 4
}

/// `count` distinct places outside `exclude`: infinity first, then finite
/// places by degree.
fn fresh_places(field: &Field, exclude: &[&Place], count: usize) -> Vec<Place> {
    let mut out = Vec::with_capacity(count);
    if !exclude.contains(&&Place::Infinite) && count > 0 {
        out.push(Place::Infinite);
    }
    let mut d = 1;
    while out.len() < count {
        for p in places_of_degree(field, d) {
            if out.len() == count {
                break;
            }
            if !exclude.contains(&&p) {
                out.push(p);
            }
        }
        d += 1;
    }
    out
}

fn require_separating(x: &RationalFunction) -> Result<()> {
    require_char2(x.field())?;
    if x.derivative().is_zero() {
        return Err(Error::PthPower(2));
    }
    Ok(())
}

fn require_rational(place: &Place) -> Result<()> {
    if place.degree() != 1 {
        return Err(Error::Precondition(format!(
            "{} is not a degree-1 place",
            place.label('w')
        )));
    }
    Ok(())
}

fn leading(f: &RationalFunction, place: &Place, k: i64) -> Result<u64> {
    let v = f.valuation(place).ok_or(Error::ZeroFunction)?;
    let s = laurent_expand(f, place, (k - v + 1).max(1) as usize)?;
    Ok(s.coeff(k))
}

/// Finds `z` with simple poles, `v_Q(z) >= 0`, and `x + z^2` tame at `P`.
///
/// While `x + z^2 - (x + z^2)(P)` vanishes to even order `2n` at `P`, adds a
/// multiple of some `z0` in `L(R - nP)` with `v_P(z0) = n`, where `R` is a sum
/// of the first places of a pool of `pole_budget` distinct places avoiding
/// `P` and `Q`. Over small fields the pool runs into places of degree above 1.
pub fn square_completion(
    x: &RationalFunction,
    p: &Place,
    q: &Place,
    pole_budget: usize,
) -> Result<RationalFunction> {
    require_separating(x)?;
    require_rational(p)?;
    if p == q {
        return Err(Error::Precondition("P and Q coincide".into()));
    }
    for place in [p, q] {
        if x.valuation(place).is_some_and(|v| v < 0) {
            return Err(Error::Precondition(format!(
                "{} is a pole of x",
                place.label('w')
            )));
        }
    }
    let field = x.field();
    if is_tame_at(x, p)? {
        return Ok(RationalFunction::one(field));
    }
    let pool = fresh_places(field, &[p, q], pole_budget);
    let mut z = RationalFunction::zero(field);
    for _ in 0..MAX_STEPS {
        let w = x + &(&z * &z);
        let j = ramification_at(&w, p)? as i64;
        if j % 2 == 1 {
            return Ok(z);
        }
        let n = j / 2;
        let mut r = Divisor::new();
        for place in &pool {
            if r.degree() >= n {
                break;
            }
            r.add_place(place.clone(), 1);
        }
        if r.degree() < n {
            return Err(Error::Infeasible(format!(
                "pole budget of {pole_budget} places has degree {} < {n}",
                r.degree()
            )));
        }
        r.add_place(p.clone(), -n);
        let z0 = rr_basis(field, &r)
            .into_iter()
            .find(|f| f.valuation(p) == Some(n))
            .ok_or_else(|| Error::Internal("no element of exact order n in L(R - nP)".into()))?;
        let a = leading(&w, p, j)?;
        let b = leading(&z0, p, n)?;
        let gamma = field.div(field.pth_root(a), b).expect("nonzero leading coefficient");
        z = &z + &z0.scale(gamma);
    }
    Err(Error::Internal("square completion did not terminate".into()))
}

/// For `x` with poles only at `Q` and pseudo-tame there, finds `z` with
/// poles only at `Q` such that `-v_Q(x + z^4) = -v_Q(dx) - 1`.
/// Returns `(z, x + z^4)`.
pub fn quartic_pole_reduction(
    x: &RationalFunction,
    q: &Place,
) -> Result<(RationalFunction, RationalFunction)> {
    require_separating(x)?;
    require_rational(q)?;
    let poles = x.pole_divisor()?;
    if poles.is_zero() || poles.support().any(|p| p != q) {
        return Err(Error::Precondition(format!(
            "x must have poles exactly at {}",
            q.label('w')
        )));
    }
    if !is_pseudotame_at(x, q)? {
        return Err(Error::NotPseudoTame(format!("x at {}", q.label('w'))));
    }
    let field = x.field();
    let target = -differential_valuation(x, q)? - 1;
    let mut z = RationalFunction::zero(field);
    for _ in 0..MAX_STEPS {
        let z2 = &z * &z;
        let w = x + &(&z2 * &z2);
        let m = -w.valuation(q).ok_or(Error::ZeroFunction)?;
        if m <= target {
            if m != target || !is_tame_at(&w, q)? {
                return Err(Error::Internal(format!(
                    "reduction stopped at pole order {m}, expected {target}"
                )));
            }
            return Ok((z, w));
        }
        if m % 4 != 0 {
            return Err(Error::Internal(format!(
                "pole order {m} above the tame bound is not a multiple of 4"
            )));
        }
        let k = m / 4;
        let z0 = prescribed_element(field, &Divisor::new(), q, Some(k), &[], None)?;
        let cw = leading(&w, q, -m)?;
        let cz = leading(&z0, q, -k)?;
        let ratio = field.div(cw, field.pow(cz, 4)).expect("nonzero leading coefficient");
        let alpha = field.pth_root(field.pth_root(ratio));
        z = &z + &z0.scale(alpha);
    }
    Err(Error::Internal("pole reduction did not terminate".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Polynomial;

    fn w(field: &Field, c: &[i64]) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::from_ints(field, c))
    }

    #[test]
    fn square_completion_examples() {
        let f2 = Field::prime(2).unwrap();
        let p = Place::rational(&f2, 0);
        let q = Place::rational(&f2, 1);
        let x = w(&f2, &[0, 0, 0, 1]);
        assert_eq!(square_completion(&x, &p, &q, 4).unwrap(), RationalFunction::one(&f2));

        let x = w(&f2, &[0, 0, 1, 0, 0, 1]);
        let z = square_completion(&x, &p, &q, 4).unwrap();
        assert_eq!(z, w(&f2, &[0, 1]));
        assert_eq!(&x + &(&z * &z), w(&f2, &[0, 0, 0, 0, 0, 1]));

        let x = w(&f2, &[0, 0, 0, 0, 1, 0, 1, 1]);
        let z = square_completion(&x, &p, &q, default_pole_budget(&x)).unwrap();
        let sum = &x + &(&z * &z);
        assert!(is_tame_at(&sum, &p).unwrap());
        assert_eq!(ramification_at(&sum, &p).unwrap(), 7);
        assert!(z.valuation(&q).unwrap() >= 0);
        let poles = z.pole_divisor().unwrap();
        assert!(poles.iter().all(|(_, n)| n == 1));
    }

    #[test]
    fn square_completion_budget() {
        let f2 = Field::prime(2).unwrap();
        let p = Place::rational(&f2, 0);
        let q = Place::rational(&f2, 1);
        let x = w(&f2, &[0, 0, 0, 0, 1, 0, 1, 1]);
        assert!(matches!(
            square_completion(&x, &p, &q, 1),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn pole_reduction_examples() {
        let f2 = Field::prime(2).unwrap();
        let inf = Place::Infinite;
        let (z, r) = quartic_pole_reduction(&w(&f2, &[0, 0, 0, 1, 1]), &inf).unwrap();
        assert_eq!(z, w(&f2, &[0, 1]));
        assert_eq!(r, w(&f2, &[0, 0, 0, 1]));

        let (z, r) = quartic_pole_reduction(&w(&f2, &[0, 0, 0, 1]), &inf).unwrap();
        assert!(z.is_zero());
        assert_eq!(r, w(&f2, &[0, 0, 0, 1]));

        let (z, r) = quartic_pole_reduction(&w(&f2, &[0, 0, 0, 0, 0, 1, 0, 0, 1]), &inf).unwrap();
        assert_eq!(z, w(&f2, &[0, 0, 1]));
        assert_eq!(r, w(&f2, &[0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn pole_reduction_rejects() {
        let f2 = Field::prime(2).unwrap();
        let inf = Place::Infinite;
        // w^6 + w: pole order 6 is not a multiple of 4 and lies below v(dx) + 1
        assert!(matches!(
            quartic_pole_reduction(&w(&f2, &[0, 1, 0, 0, 0, 0, 1]), &inf),
            Err(Error::NotPseudoTame(_))
        ));
        let x = RationalFunction::new(Polynomial::from_ints(&f2, &[1]), Polynomial::from_ints(&f2, &[0, 1]))
            .unwrap();
        assert!(quartic_pole_reduction(&x, &inf).is_err());
    }

    #[test]
    fn fresh_place_pool() {
        let f2 = Field::prime(2).unwrap();
        let p = Place::rational(&f2, 0);
        let q = Place::rational(&f2, 1);
        let pool = fresh_places(&f2, &[&p, &q], 3);
        assert_eq!(pool[0], Place::Infinite);
        assert_eq!(pool[1].degree(), 2);
        assert_eq!(pool[2].degree(), 3);
    }
}
