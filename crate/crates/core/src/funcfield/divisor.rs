// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::Place;

/// A finite formal sum `sum n_P P`; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    coeffs: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn new() -> Self {
        Divisor::default()
    }

    pub fn from_place(place: Place, n: i64) -> Self {
        let mut d = Divisor::new();
        d.add_place(place, n);
        d
    }

    pub fn add_place(&mut self, place: Place, n: i64) {
        if n == 0 {
            return;
        }
        let e = self.coeffs.entry(place).or_insert(0);
        *e += n;
        if *e == 0 {
            self.coeffs.retain(|_, v| *v != 0);
        }
    }

    pub fn coeff(&self, place: &Place) -> i64 {
        self.coeffs.get(place).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.coeffs.iter().map(|(p, &n)| (p, n))
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.coeffs
            .iter()
            .map(|(p, &n)| n * p.degree() as i64)
            .sum()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&n| n > 0)
    }

    /// `self >= other` coefficientwise.
    pub fn dominates(&self, other: &Divisor) -> bool {
        (self - other).is_effective()
    }

    pub fn positive_part(&self) -> Divisor {
        Divisor {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(_, &n)| n > 0)
                .map(|(p, &n)| (p.clone(), n))
                .collect(),
        }
    }

    pub fn negative_part(&self) -> Divisor {
        Divisor {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(_, &n)| n < 0)
                .map(|(p, &n)| (p.clone(), n))
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Divisor {
        let mut out = Divisor::new();
        for (p, n) in self.iter() {
            out.add_place(p.clone(), n * k);
        }
        out
    }

    /// `3*(x) - 1*(x+1) - 2*(inf)`; the zero divisor prints as `0`.
    pub fn to_text(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, n)) in self.iter().enumerate() {
            let body = format!("{}*({})", n.abs(), p.to_text(var));
            match (i, n < 0) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl FromIterator<(Place, i64)> for Divisor {
    fn from_iter<I: IntoIterator<Item = (Place, i64)>>(iter: I) -> Self {
        let mut d = Divisor::new();
        for (p, n) in iter {
            d.add_place(p, n);
        }
        d
    }
}

impl Add for &Divisor {
    type Output = Divisor;

    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, n) in rhs.iter() {
            out.add_place(p.clone(), n);
        }
        out
    }
}

impl Sub for &Divisor {
    type Output = Divisor;

    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &(-rhs)
    }
}

impl Neg for &Divisor {
    type Output = Divisor;

    fn neg(self) -> Divisor {
        self.scale(-1)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text('x'))
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text('x'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::RationalFunction;
    use crate::galois::Field;
    use crate::polyring::Polynomial;

    #[test]
    fn principal_divisor_examples() {
        let f2 = Field::prime(2).unwrap();
        let p = |c: &[i64]| Polynomial::from_ints(&f2, c);
        let r = RationalFunction::new(p(&[0, 0, 0, 1]), p(&[1, 1])).unwrap();
        let d = r.divisor().unwrap();
        assert_eq!(d.to_text('x'), "3*(x) - 1*(x+1) - 2*(inf)");
        assert_eq!(d.degree(), 0);

        let r = RationalFunction::from_poly(p(&[1, 1, 1]));
        let d = r.divisor().unwrap();
        assert_eq!(d.to_text('x'), "1*(x^2+x+1) - 2*(inf)");
        assert_eq!(d.degree(), 0);

        assert!(RationalFunction::one(&f2).divisor().unwrap().is_zero());
        assert!(RationalFunction::zero(&f2).divisor().is_err());
    }

    #[test]
    fn arithmetic_cancels() {
        let f2 = Field::prime(2).unwrap();
        let a = Divisor::from_place(Place::Infinite, 2);
        let b = Divisor::from_place(Place::Infinite, 2);
        assert!((&a - &b).is_zero());
        assert_eq!((&a + &b).coeff(&Place::Infinite), 4);
        let x = Place::rational(&f2, 0);
        let c: Divisor = [(x.clone(), 1), (Place::Infinite, -1)].into_iter().collect();
        assert_eq!(c.positive_part(), Divisor::from_place(x, 1));
        assert!(!c.is_effective());
    }
}
