// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use super::RationalFunction;
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::polyring::{irreducibles, is_irreducible, Polynomial};

/// A closed point of the projective line over `F_q`.
///
/// Finite places sort before the infinite one; finite places are ordered by
/// degree and then by the encoding of their monic polynomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Finite(Polynomial),
    Infinite,
}

impl Place {
    /// The place of a monic irreducible polynomial.
    pub fn finite(poly: Polynomial) -> Result<Place> {
        if !poly.is_monic() || !is_irreducible(&poly) {
            return Err(Error::Precondition(format!(
                "{} is not a monic irreducible polynomial",
                poly.to_text('x')
            )));
        }
        Ok(Place::Finite(poly))
    }

    /// `(x = a)`.
    pub fn rational(field: &Field, a: u64) -> Place {
        Place::Finite(Polynomial::linear(field, a))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0),
            Place::Infinite => 1,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Place::Infinite)
    }

    pub fn poly(&self) -> Option<&Polynomial> {
        match self {
            Place::Finite(p) => Some(p),
            Place::Infinite => None,
        }
    }

    /// For a finite place of degree 1, the `a` with place `(x = a)`.
    pub fn rational_point(&self) -> Option<u64> {
        match self {
            Place::Finite(p) if p.degree() == Some(1) => Some(p.field().neg(p.coeff(0))),
            _ => None,
        }
    }

    /// The canonical prime element over the base field: the monic polynomial
    /// itself, or `1/x` at infinity.
    pub fn prime_element(&self, field: &Field) -> RationalFunction {
        match self {
            Place::Finite(p) => RationalFunction::from_poly(p.clone()),
            Place::Infinite => RationalFunction::x(field).inv().expect("x is nonzero"),
        }
    }

    /// Machine form: the polynomial or `inf`.
    pub fn to_text(&self, var: char) -> String {
        match self {
            Place::Finite(p) => p.to_text(var),
            Place::Infinite => "inf".to_string(),
        }
    }

    /// Display form: `(x=a)`, `(x^2+x+1)` or `(x=inf)`.
    pub fn label(&self, var: char) -> String {
        match self {
            Place::Infinite => format!("({var}=inf)"),
            Place::Finite(p) => match self.rational_point() {
                Some(a) => format!("({var}={})", p.field().format(a)),
                None => format!("({})", p.to_text(var)),
            },
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text('x'))
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label('x'))
    }
}

/// All finite places of degree `d`, in order.
pub fn places_of_degree(field: &Field, d: usize) -> Vec<Place> {
    irreducibles(field, d).into_iter().map(Place::Finite).collect()
}

/// All places of degree at most `d`, the infinite place last.
pub fn places_up_to_degree(field: &Field, d: usize) -> Vec<Place> {
    let mut out: Vec<Place> = (1..=d).flat_map(|k| places_of_degree(field, k)).collect();
    out.push(Place::Infinite);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_ordering() {
        let f2 = Field::prime(2).unwrap();
        let x = Place::rational(&f2, 0);
        let x1 = Place::rational(&f2, 1);
        let q = Place::finite(Polynomial::from_ints(&f2, &[1, 1, 1])).unwrap();
        assert_eq!(x.label('t'), "(t=0)");
        assert_eq!(x1.to_text('x'), "x+1");
        assert_eq!(q.label('x'), "(x^2+x+1)");
        assert_eq!(Place::Infinite.label('u'), "(u=inf)");
        let mut v = vec![Place::Infinite, q.clone(), x1.clone(), x.clone()];
        v.sort();
        assert_eq!(v, vec![x, x1, q, Place::Infinite]);
    }

    #[test]
    fn rejects_reducible() {
        let f2 = Field::prime(2).unwrap();
        assert!(Place::finite(Polynomial::from_ints(&f2, &[1, 0, 1])).is_err());
    }

    #[test]
    fn place_counts() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(places_of_degree(&f3, 1).len(), 3);
        assert_eq!(places_of_degree(&f3, 2).len(), 3);
        assert_eq!(places_up_to_degree(&f3, 2).len(), 7);
    }
}
