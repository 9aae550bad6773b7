// SPDX-License-Identifier: Apache-2.0

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};

/// Dense univariate polynomial over a [`Field`], lowest degree first.
///
/// Coefficients are raw field encodings. The zero polynomial has no
/// coefficients and the leading coefficient is never zero.
#[derive(Clone)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|&c| field.is_valid(c)));
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds from signed integers reduced into the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Field) -> Self {
        Polynomial::from_coeffs(field, Vec::new())
    }

    pub fn one(field: &Field) -> Self {
        Polynomial::constant(field, 1)
    }

    pub fn constant(field: &Field, c: u64) -> Self {
        Polynomial::from_coeffs(field, vec![c])
    }

    /// `c * T^k`.
    pub fn monomial(field: &Field, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Polynomial::from_coeffs(field, coeffs)
    }

    /// The variable `T`.
    pub fn x(field: &Field) -> Self {
        Polynomial::monomial(field, 1, 1)
    }

    /// `T - a`.
    pub fn linear(field: &Field, a: u64) -> Self {
        Polynomial::from_coeffs(field, vec![field.neg(a), 1])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeff_element(&self, i: usize) -> FieldElement {
        FieldElement::new(&self.field, self.coeff(i))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    fn same_field(&self, other: &Polynomial) {
        assert!(
            self.field.same(&other.field),
            "polynomials over different fields: {:?} vs {:?}",
            self.field,
            other.field
        );
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(&self.field);
        }
        let f = &self.field;
        Polynomial::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> Polynomial {
        match self.field.inv(self.lc()) {
            Some(inv) if inv != 1 => self.scale(inv),
            _ => self.clone(),
        }
    }

    /// Multiplication by `T^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial::from_coeffs(&self.field, coeffs)
    }

    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.same_field(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let n = divisor.coeffs.len();
        if self.coeffs.len() < n {
            return Ok((Polynomial::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.lc()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - n + 1];
        for i in (0..quot.len()).rev() {
            let c = rem[i + n - 1];
            if c == 0 {
                continue;
            }
            let c = f.mul(c, lead_inv);
            quot[i] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                if d != 0 {
                    rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
                }
            }
        }
        rem.truncate(n - 1);
        Ok((Polynomial::from_coeffs(f, quot), Polynomial::from_coeffs(f, rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    /// Exact quotient; panics when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.divmod(divisor).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        self.same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
        self.same_field(other);
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Polynomial::one(f), Polynomial::zero(f));
        let (mut t0, mut t1) = (Polynomial::zero(f), Polynomial::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match f.inv(r0.lc()) {
            Some(inv) => (r0.scale(inv), s0.scale(inv), t0.scale(inv)),
            None => (r0, s0, t0),
        }
    }

    /// Formal derivative; may vanish in characteristic `p`.
    pub fn derivative(&self) -> Polynomial {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int((i as u64 % f.p()) as i64)))
            .collect();
        Polynomial::from_coeffs(f, coeffs)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        self.same_field(inner);
        let f = &self.field;
        let mut acc = Polynomial::zero(f);
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(f, c);
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mul_mod(&self, other: &Polynomial, modulus: &Polynomial) -> Polynomial {
        (self * other).rem(modulus).expect("nonzero modulus")
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Polynomial) -> Polynomial {
        let mut base = self.rem(modulus).expect("nonzero modulus");
        let mut acc = Polynomial::one(&self.field).rem(modulus).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus);
            }
        }
        acc
    }

    /// Applies the `p`-th root coefficientwise to a polynomial in `T^p`.
    /// Returns `None` if some exponent is not a multiple of `p`.
    pub fn pth_root(&self) -> Option<Polynomial> {
        let f = &self.field;
        let p = f.p() as usize;
        let mut out = Vec::with_capacity(self.coeffs.len() / p + 1);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                out.push(f.pth_root(c));
            } else if c != 0 {
                return None;
            }
        }
        Some(Polynomial::from_coeffs(f, out))
    }

    /// Multiplicity of `factor` in `self` (`self` nonzero, `factor` non-constant).
    pub fn multiplicity(&self, factor: &Polynomial) -> usize {
        let mut n = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divmod(factor).expect("nonzero divisor");
            if !r.is_zero() || cur.is_zero() {
                return n;
            }
            n += 1;
            cur = q;
        }
    }

    /// Text form, descending degree, variable `var`.
    pub fn to_text(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let coef = f.format(c);
            let coef = if coef.contains('+') {
                format!("({coef})")
            } else {
                coef
            };
            terms.push(match (c, k) {
                (_, 0) => coef,
                (1, _) => mono,
                _ => format!("{coef}*{mono}"),
            });
        }
        terms.join("+")
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

/// Ordered by degree, then by the encoding `sum enc(c_i) q^i`.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text('x'))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.to_text('x'), self.field)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.same_field(rhs);
        let f = &self.field;
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = f.add(*c, s);
        }
        Polynomial::from_coeffs(f, coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let f = &self.field;
        Polynomial::from_coeffs(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.same_field(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(f);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
        }
        Polynomial::from_coeffs(f, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn p(field: &Field, c: &[i64]) -> Polynomial {
        Polynomial::from_ints(field, c)
    }

    #[test]
    fn gcd_of_square() {
        let f = f2();
        assert_eq!(p(&f, &[1, 0, 1]).gcd(&p(&f, &[1, 1])), p(&f, &[1, 1]));
    }

    #[test]
    fn derivative_vanishes_on_even_exponents() {
        let f = f2();
        assert!(p(&f, &[1, 0, 1, 0, 1]).derivative().is_zero());
    }

    #[test]
    fn divmod_exact() {
        let f = f2();
        let (q, r) = p(&f, &[0, 1, 0, 1]).divmod(&p(&f, &[1, 1])).unwrap();
        assert_eq!(q, p(&f, &[0, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(
            p(&f, &[1]).divmod(&Polynomial::zero(&f)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn ext_gcd_bezout() {
        let f = Field::prime(7).unwrap();
        let a = p(&f, &[3, 0, 2, 1, 5]);
        let b = p(&f, &[1, 6, 0, 2]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, a.gcd(&b));
    }

    #[test]
    fn ordering_by_degree_then_encoding() {
        let f = Field::prime(3).unwrap();
        let a = p(&f, &[1, 0, 1]); // encoding 10
        let b = p(&f, &[2, 1, 1]); // encoding 14
        let c = p(&f, &[0, 0, 0, 1]);
        assert!(a < b && b < c);
    }

    #[test]
    fn text_form() {
        let f = Field::prime(5).unwrap();
        assert_eq!(p(&f, &[3, 0, 3]).to_text('x'), "3*x^2+3");
        assert_eq!(p(&f, &[0, 1]).to_text('t'), "t");
        let f4 = Field::create(2, 2).unwrap();
        let g = Polynomial::from_coeffs(&f4, vec![3, 2, 1]);
        assert_eq!(g.to_text('x'), "x^2+z*x+(z+1)");
    }

    #[test]
    fn compose_and_eval() {
        let f = Field::prime(5).unwrap();
        let g = p(&f, &[1, 2, 1]);
        let shift = p(&f, &[3, 1]);
        let h = g.compose(&shift);
        for a in 0..5 {
            assert_eq!(h.eval(a), g.eval(f.add(a, 3)));
        }
    }
}
