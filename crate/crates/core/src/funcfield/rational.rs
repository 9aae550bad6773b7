// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Divisor, Place};
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::polyring::{factor, Polynomial};

/// An element `num/den` of `F_q(x)` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Cancels the gcd and makes the denominator monic.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = num.field().clone();
        if num.is_zero() {
            return Ok(RationalFunction::zero(&field));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc_inv = field.inv(den.lc()).expect("nonzero");
        if lc_inv != 1 {
            num = num.scale(lc_inv);
            den = den.scale(lc_inv);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(num: Polynomial) -> Self {
        let den = Polynomial::one(num.field());
        RationalFunction { num, den }
    }

    pub fn zero(field: &Field) -> Self {
        RationalFunction::from_poly(Polynomial::zero(field))
    }

    pub fn one(field: &Field) -> Self {
        RationalFunction::constant(field, 1)
    }

    pub fn constant(field: &Field, c: u64) -> Self {
        RationalFunction::from_poly(Polynomial::constant(field, c))
    }

    /// The generator `x` of `F_q(x)`.
    pub fn x(field: &Field) -> Self {
        RationalFunction::from_poly(Polynomial::x(field))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `max(deg num, deg den)`, the degree of the induced map on the projective line.
    pub fn degree(&self) -> usize {
        self.num.deg().max(self.den.deg()).max(0) as usize
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: u64) -> Self {
        RationalFunction::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RationalFunction {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// `d/dx`.
    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &RationalFunction) -> Self {
        let k = self.num.deg().max(self.den.deg()).max(0) as usize;
        let num = homogenize(&self.num, inner, k);
        let den = homogenize(&self.den, inner, k);
        RationalFunction::new(num, den).expect("composition with a nonconstant map")
    }

    /// `v_P(self)`, or `None` for the zero function.
    pub fn valuation(&self, place: &Place) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(match place {
            Place::Infinite => self.den.deg() - self.num.deg(),
            Place::Finite(pi) => self.num.multiplicity(pi) as i64 - self.den.multiplicity(pi) as i64,
        })
    }

    /// The principal divisor `(f)`.
    pub fn divisor(&self) -> Result<Divisor> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let mut d = Divisor::new();
        for (pi, e) in factor(&self.num)?.factors {
            d.add_place(Place::Finite(pi), e as i64);
        }
        for (pi, e) in factor(&self.den)?.factors {
            d.add_place(Place::Finite(pi), -(e as i64));
        }
        d.add_place(Place::Infinite, self.den.deg() - self.num.deg());
        Ok(d)
    }

    pub fn zero_divisor(&self) -> Result<Divisor> {
        Ok(self.divisor()?.positive_part())
    }

    pub fn pole_divisor(&self) -> Result<Divisor> {
        Ok(-&self.divisor()?.negative_part())
    }

    pub fn to_text(&self, var: char) -> String {
        if self.den.is_one() {
            return self.num.to_text(var);
        }
        let wrap = |p: &Polynomial| {
            let s = p.to_text(var);
            if s.contains('+') || s.contains('*') {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// `h^k * P(g/h)` for `inner = g/h`.
fn homogenize(p: &Polynomial, inner: &RationalFunction, k: usize) -> Polynomial {
    let field = p.field();
    let g = inner.num();
    let h = inner.den();
    let mut acc = Polynomial::zero(field);
    let mut gpow = Polynomial::one(field);
    for i in 0..=k {
        let c = p.coeff(i);
        if c != 0 {
            let term = &gpow * &h.pow((k - i) as u64);
            acc = &acc + &term.scale(c);
        }
        if i < k {
            gpow = &gpow * g;
        }
    }
    acc
}

/// Normalizes `num/den`; the standalone form of [`RationalFunction::new`].
pub fn rf_normalize(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    RationalFunction::new(num, den)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text('x'))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.to_text('x'), self.field())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}
