// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use super::Field;
use crate::error::{Error, Result};

/// An element of a [`Field`] together with its owner.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    value: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow(u64),
    Frobenius,
    PthRoot,
}

impl FieldElement {
    /// Wraps a raw encoding, reducing it into range.
    pub fn new(field: &Field, value: u64) -> Self {
        let value = if field.order() == u64::MAX {
            value
        } else {
            value % field.order()
        };
        FieldElement {
            field: field.clone(),
            value,
        }
    }

    pub fn from_coords(field: &Field, coords: &[u64]) -> Result<Self> {
        if coords.len() != field.m() || coords.iter().any(|&c| c >= field.p()) {
            return Err(Error::Precondition(format!(
                "expected {} residues below {}",
                field.m(),
                field.p()
            )));
        }
        Ok(FieldElement::new(field, field.from_coords(coords)))
    }

    pub fn zero(field: &Field) -> Self {
        FieldElement::new(field, 0)
    }

    pub fn one(field: &Field) -> Self {
        FieldElement::new(field, 1)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Encoding `sum c_i p^i` of the coordinate vector.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Coordinates in the basis `1, z, ..., z^{m-1}`.
    pub fn coords(&self) -> Vec<u64> {
        self.field.coords(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn wrap(&self, value: u64) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        self.field
            .inv(self.value)
            .map(|v| self.wrap(v))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.wrap(self.field.pow(self.value, e))
    }

    pub fn frobenius(&self) -> FieldElement {
        self.wrap(self.field.frobenius(self.value))
    }

    pub fn pth_root(&self) -> FieldElement {
        self.wrap(self.field.pth_root(self.value))
    }
}

/// Dispatches a single field operation. Unary operations ignore `b`.
pub fn element_arith(
    a: &FieldElement,
    b: Option<&FieldElement>,
    op: ElementOp,
) -> Result<FieldElement> {
    let rhs = || b.ok_or_else(|| Error::Precondition("binary operation needs two operands".into()));
    match op {
        ElementOp::Add => a.add(rhs()?),
        ElementOp::Sub => a.sub(rhs()?),
        ElementOp::Mul => a.mul(rhs()?),
        ElementOp::Inv => a.inv(),
        ElementOp::Pow(e) => Ok(a.pow(e)),
        ElementOp::Frobenius => Ok(a.frobenius()),
        ElementOp::PthRoot => Ok(a.pth_root()),
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format(self.value))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.format(self.value), self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::create(2, 2).unwrap()
    }

    #[test]
    fn f4_product_and_frobenius() {
        let f = f4();
        let z = FieldElement::new(&f, 2);
        let z1 = FieldElement::new(&f, 3);
        assert_eq!(z.mul(&z1).unwrap(), FieldElement::one(&f));
        assert_eq!(z.frobenius(), z1);
        assert_eq!(z1.pth_root(), z);
    }

    #[test]
    fn inverse_of_one_and_zero() {
        for (p, m) in [(2, 1), (2, 3), (3, 2), (7, 1), (5, 3)] {
            let f = Field::create(p, m).unwrap();
            let one = FieldElement::one(&f);
            assert_eq!(one.inv().unwrap(), one);
            assert_eq!(FieldElement::zero(&f).inv(), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn mismatched_fields_rejected() {
        let a = FieldElement::one(&f4());
        let b = FieldElement::one(&Field::create(2, 3).unwrap());
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(
            element_arith(&a, Some(&b), ElementOp::Mul),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn fermat_exhaustive_small_fields() {
        for (p, m) in [(2, 1), (2, 4), (2, 9), (3, 2), (3, 5), (5, 3), (7, 3), (23, 1)] {
            let f = Field::create(p, m).unwrap();
            if f.order() > 512 {
                continue;
            }
            for a in 1..f.order() {
                assert_eq!(f.pow(a, f.order() - 1), 1, "{f:?} {a}");
                assert_eq!(f.pth_root(f.frobenius(a)), a);
            }
        }
    }

    #[test]
    fn coords_round_trip() {
        let f = Field::create(3, 3).unwrap();
        let e = FieldElement::from_coords(&f, &[2, 0, 1]).unwrap();
        assert_eq!(e.value(), 2 + 9);
        assert_eq!(e.coords(), vec![2, 0, 1]);
        assert!(FieldElement::from_coords(&f, &[3, 0, 0]).is_err());
    }
}
