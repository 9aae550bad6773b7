// SPDX-License-Identifier: Apache-2.0

use super::{Divisor, Place, RationalFunction};
use crate::error::{Error, Result};

/// Divisor of `f' dx`, that is `(f') - 2(inf)`. Always of degree -2.
pub fn differential_divisor(f: &RationalFunction) -> Result<Divisor> {
    let df = f.derivative();
    if df.is_zero() {
        return Err(Error::Inseparable);
    }
    let mut d = df.divisor()?;
    d.add_place(Place::Infinite, -2);
    Ok(d)
}

/// The `p`-th root of `f` when `f` is a `p`-th power, which happens exactly
/// when `df/dx = 0`.
pub fn pth_power_test(f: &RationalFunction) -> Option<RationalFunction> {
    if f.is_zero() {
        return Some(f.clone());
    }
    let num = f.num().pth_root()?;
    let den = f.den().pth_root()?;
    let root = RationalFunction::new(num, den).ok()?;
    debug_assert_eq!(&root.pow(f.field().p() as i64).ok()?, f);
    Some(root)
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
    fn differential_examples() {
        let f2 = Field::prime(2).unwrap();
        let inf2 = Divisor::from_place(Place::Infinite, -2);
        assert_eq!(differential_divisor(&RationalFunction::x(&f2)).unwrap(), inf2);
        assert_eq!(differential_divisor(&rf(&f2, &[0, 1, 1], &[1])).unwrap(), inf2);
        let d = differential_divisor(&rf(&f2, &[1, 0, 0, 1], &[0, 1])).unwrap();
        assert_eq!(d, Divisor::from_place(Place::rational(&f2, 0), -2));
        assert_eq!(
            differential_divisor(&rf(&f2, &[1, 0, 1], &[1])),
            Err(Error::Inseparable)
        );
    }

    #[test]
    fn pth_power_examples() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(pth_power_test(&rf(&f2, &[1, 0, 1], &[1])), Some(rf(&f2, &[1, 1], &[1])));
        assert_eq!(pth_power_test(&rf(&f2, &[0, 0, 0, 1], &[1])), None);
        assert_eq!(
            pth_power_test(&rf(&f2, &[0, 0, 1, 0, 1], &[0, 0, 0, 0, 0, 0, 1])),
            Some(rf(&f2, &[0, 1, 1], &[0, 0, 0, 1]))
        );
        let f3 = Field::prime(3).unwrap();
        let g = rf(&f3, &[1, 2], &[0, 1, 1]);
        assert_eq!(pth_power_test(&g.pow(3).unwrap()), Some(g));
    }
}
