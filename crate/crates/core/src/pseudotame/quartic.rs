// SPDX-License-Identifier: Apache-2.0

use super::require_char2;
use crate::error::{Error, Result};
use crate::funcfield::{pth_power_test, RationalFunction};
use crate::polyring::Polynomial;

/// `x = x0^4 + x1^4 y + x2^4 y^2 + x3^4 y^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticDecomposition {
    pub x: RationalFunction,
    pub y: RationalFunction,
    pub coords: [RationalFunction; 4],
}

impl QuarticDecomposition {
    /// Re-expands the coordinates.
    pub fn expand(&self) -> RationalFunction {
        let field = self.x.field();
        let mut acc = RationalFunction::zero(field);
        let mut ypow = RationalFunction::one(field);
        for c in &self.coords {
            acc = &acc + &(&fourth_power(c) * &ypow);
            ypow = &ypow * &self.y;
        }
        acc
    }
}

fn fourth_power(f: &RationalFunction) -> RationalFunction {
    let sq = f * f;
    &sq * &sq
}

/// Coordinates `(c0, c1, c2, c3)` with `f = sum c_i^4 w^i`.
fn fourth_root_coords(f: &RationalFunction) -> [RationalFunction; 4] {
    let field = f.field();
    // f = N D^3 / D^4
    let den = f.den();
    let p = f.num() * &den.pow(3);
    let mut parts: [Vec<u64>; 4] = Default::default();
    for (k, &c) in p.coeffs().iter().enumerate() {
        let part = &mut parts[k % 4];
        let j = k / 4;
        if part.len() <= j {
            part.resize(j + 1, 0);
        }
        part[j] = field.pth_root(field.pth_root(c));
    }
    parts.map(|c| {
        RationalFunction::new(Polynomial::from_coeffs(field, c), den.clone()).expect("nonzero denominator")
    })
}

fn not_square(f: &RationalFunction, name: &str) -> Result<()> {
    if f.derivative().is_zero() {
        return Err(Error::Precondition(format!(
            "{name} = {} is a square",
            f.to_text('w')
        )));
    }
    Ok(())
}

/// Solves for the coordinates of `x` in the basis `1, y, y^2, y^3` over the
/// subfield of fourth powers.
pub fn quartic_decompose(x: &RationalFunction, y: &RationalFunction) -> Result<QuarticDecomposition> {
    require_char2(x.field())?;
    not_square(y, "y")?;
    let field = x.field();
    // column k holds the coordinates of y^k
    let mut cols = Vec::with_capacity(4);
    let mut ypow = RationalFunction::one(field);
    for _ in 0..4 {
        cols.push(fourth_root_coords(&ypow));
        ypow = &ypow * y;
    }
    let rhs = fourth_root_coords(x);
    let mut m: Vec<Vec<RationalFunction>> = (0..4)
        .map(|i| {
            let mut row: Vec<RationalFunction> = (0..4).map(|k| cols[k][i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let sol = solve(&mut m).ok_or_else(|| {
        Error::Internal("basis 1, y, y^2, y^3 is dependent for a non-square y".into())
    })?;
    let dec = QuarticDecomposition {
        x: x.clone(),
        y: y.clone(),
        coords: [sol[0].clone(), sol[1].clone(), sol[2].clone(), sol[3].clone()],
    };
    if &dec.expand() != x {
        return Err(Error::Internal("quartic decomposition does not re-expand".into()));
    }
    Ok(dec)
}

/// Gauss-Jordan elimination on an augmented `n x (n+1)` matrix.
fn solve(m: &mut [Vec<RationalFunction>]) -> Option<Vec<RationalFunction>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].inv().ok()?;
        for j in col..=n {
            m[col][j] = &m[col][j] * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for j in col..=n {
                    let t = &factor * &m[col][j];
                    m[r][j] = &m[r][j] - &t;
                }
            }
        }
    }
    Some(m.iter().map(|row| row[n].clone()).collect())
}

/// `a(x, y) = ((x1^2 x3^2 + x2^4) y) / (x3^4 y^2 + x1^4)`.
pub fn a_invariant(x: &RationalFunction, y: &RationalFunction) -> Result<RationalFunction> {
    not_square(x, "x")?;
    let dec = quartic_decompose(x, y)?;
    let [_, x1, x2, x3] = &dec.coords;
    let x1s = x1 * x1;
    let x3s = x3 * x3;
    let num = &(&(&x1s * &x3s) + &fourth_power(x2)) * y;
    let den = &(&fourth_power(x3) * &(y * y)) + &fourth_power(x1);
    num.div(&den)
        .map_err(|_| Error::Internal("a(x, y) has a vanishing denominator".into()))
}

/// Whether `a(x, y) + a` is a square.
pub fn verify_a_solution(
    x: &RationalFunction,
    y: &RationalFunction,
    a: &RationalFunction,
) -> Result<bool> {
    let sum = &a_invariant(x, y)? + a;
    Ok(pth_power_test(&sum).is_some())
}

/// `a(x, y) + a(y, t) + a(t, x)`, always a square.
pub fn cocycle_defect(
    x: &RationalFunction,
    y: &RationalFunction,
    t: &RationalFunction,
) -> Result<RationalFunction> {
    let s = &a_invariant(x, y)? + &a_invariant(y, t)?;
    Ok(&s + &a_invariant(t, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Field;

    fn w(field: &Field, c: &[i64]) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::from_ints(field, c))
    }

    #[test]
    fn decompositions() {
        let f2 = Field::prime(2).unwrap();
        let y = w(&f2, &[0, 1]);
        let zero = RationalFunction::zero(&f2);
        let one = RationalFunction::one(&f2);

        let d = quartic_decompose(&w(&f2, &[0, 0, 0, 0, 0, 1]), &y).unwrap();
        assert_eq!(d.coords, [zero.clone(), y.clone(), zero.clone(), zero.clone()]);

        let d = quartic_decompose(&w(&f2, &[0, 0, 0, 1]), &y).unwrap();
        assert_eq!(d.coords, [zero.clone(), zero.clone(), zero.clone(), one.clone()]);

        let d = quartic_decompose(&w(&f2, &[0, 0, 0, 1, 0, 0, 1]), &y).unwrap();
        assert_eq!(d.coords, [zero.clone(), zero.clone(), y.clone(), one.clone()]);

        assert!(quartic_decompose(&y, &w(&f2, &[1, 0, 1])).is_err());
    }

    #[test]
    fn a_invariant_examples() {
        let f2 = Field::prime(2).unwrap();
        let y = w(&f2, &[0, 1]);
        assert!(a_invariant(&w(&f2, &[0, 0, 0, 0, 0, 1]), &y).unwrap().is_zero());
        assert!(a_invariant(&w(&f2, &[0, 0, 0, 1]), &y).unwrap().is_zero());
        let x = w(&f2, &[0, 0, 0, 1, 0, 0, 1]);
        assert_eq!(a_invariant(&x, &y).unwrap(), w(&f2, &[0, 0, 0, 1]));
        assert!(a_invariant(&w(&f2, &[1, 0, 1]), &y).is_err());
    }

    #[test]
    fn verify_examples() {
        let f2 = Field::prime(2).unwrap();
        let y = w(&f2, &[0, 1]);
        let x = w(&f2, &[0, 0, 0, 1, 0, 0, 1]);
        assert!(verify_a_solution(&x, &y, &w(&f2, &[0, 0, 0, 1])).unwrap());
        assert!(verify_a_solution(&x, &y, &w(&f2, &[0, 0, 1, 1])).unwrap());
        assert!(!verify_a_solution(&x, &y, &w(&f2, &[0, 1])).unwrap());
    }

    #[test]
    fn cocycle_examples() {
        let f2 = Field::prime(2).unwrap();
        let x = w(&f2, &[0, 1]);
        assert!(cocycle_defect(&x, &x, &x).unwrap().is_zero());
        let d = cocycle_defect(&w(&f2, &[0, 0, 0, 0, 0, 1]), &x, &w(&f2, &[0, 0, 0, 1])).unwrap();
        assert!(pth_power_test(&d).is_some());
        let d = cocycle_defect(&x, &w(&f2, &[1, 1]), &w(&f2, &[0, 0, 0, 1])).unwrap();
        assert!(pth_power_test(&d).is_some());
    }
}
