// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use super::{Place, RationalFunction};
use crate::error::{Error, Result};
use crate::galois::{Embedding, Field};
use crate::polyring::{roots, Polynomial};

/// Where a place sits after base change to its residue field.
#[derive(Clone, Debug)]
pub struct LocalChart {
    /// Residue field `F_{q^d}` of the place.
    pub field: Field,
    pub embedding: Embedding,
    /// Canonical root of the place polynomial in the residue field; `None` at infinity.
    pub alpha: Option<u64>,
}

impl LocalChart {
    pub fn new(base: &Field, place: &Place) -> Result<LocalChart> {
        match place {
            Place::Infinite => Ok(LocalChart {
                field: base.clone(),
                embedding: Embedding::new(base, base)?,
                alpha: None,
            }),
            Place::Finite(pi) => {
                let d = place.degree();
                let field = if d == 1 {
                    base.clone()
                } else {
                    Field::create(base.p(), base.m() * d)?
                };
                let embedding = Embedding::new(base, &field)?;
                let lifted = embedding.apply_poly(pi);
                let alpha = roots(&lifted)
                    .first()
                    .copied()
                    .ok_or_else(|| Error::Internal("place polynomial has no root".into()))?;
                Ok(LocalChart {
                    field,
                    embedding,
                    alpha: Some(alpha),
                })
            }
        }
    }
}

/// Truncated expansion `sum_{k >= start} c_k u^k` in the canonical prime element.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    pub place: Place,
    /// Field holding the coefficients.
    pub field: Field,
    pub start: i64,
    pub coeffs: Vec<u64>,
    /// Exponents below `start + precision` are exact.
    pub precision: usize,
}

impl LaurentSeries {
    pub fn coeff(&self, k: i64) -> u64 {
        if k < self.start {
            return 0;
        }
        self.coeffs.get((k - self.start) as usize).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.start + i as i64, c))
    }

    pub fn to_text(&self, var: char) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.terms() {
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let coef = self.field.format(c);
            let coef = if coef.contains('+') {
                format!("({coef})")
            } else {
                coef
            };
            parts.push(match (coef.as_str(), mono.is_empty()) {
                (_, true) => coef,
                ("1", false) => mono,
                (_, false) => format!("{coef}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text('u'))
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(u^{})", self.to_text('u'), self.start + self.precision as i64)
    }
}

/// Default number of exact terms: `2 * max(deg num, deg den) + 8`.
pub fn default_precision(f: &RationalFunction) -> usize {
    2 * f.degree() + 8
}

/// Coefficients of `p(alpha + u)` in powers of `u`.
fn taylor_shift(field: &Field, coeffs: &[u64], alpha: u64) -> Vec<u64> {
    let mut c = coeffs.to_vec();
    let n = c.len();
    if alpha == 0 {
        return c;
    }
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            c[j] = field.add(c[j], field.mul(alpha, c[j + 1]));
        }
    }
    c
}

fn strip_low(c: &mut Vec<u64>) -> usize {
    let k = c.iter().take_while(|&&x| x == 0).count();
    c.drain(..k);
    k
}

/// `a / b` as a power series to `prec` terms; `b[0]` must be nonzero.
fn series_div(field: &Field, a: &[u64], b: &[u64], prec: usize) -> Vec<u64> {
    let b0_inv = field.inv(b[0]).expect("unit constant term");
    let mut out = Vec::with_capacity(prec);
    for k in 0..prec {
        let mut acc = a.get(k).copied().unwrap_or(0);
        for j in 1..=k.min(b.len().saturating_sub(1)) {
            acc = field.sub(acc, field.mul(b[j], out[k - j]));
        }
        out.push(field.mul(acc, b0_inv));
    }
    out
}

/// Expansion of `f` at `place` with at least `precision` exact terms.
pub fn laurent_expand(f: &RationalFunction, place: &Place, precision: usize) -> Result<LaurentSeries> {
    let chart = LocalChart::new(f.field(), place)?;
    laurent_expand_in(f, place, &chart, precision)
}

/// As [`laurent_expand`] with a precomputed chart.
pub fn laurent_expand_in(
    f: &RationalFunction,
    place: &Place,
    chart: &LocalChart,
    precision: usize,
) -> Result<LaurentSeries> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let field = &chart.field;
    let lift = |p: &Polynomial| chart.embedding.apply_poly(p).coeffs().to_vec();
    let (mut a, mut b) = match chart.alpha {
        Some(alpha) => (
            taylor_shift(field, &lift(f.num()), alpha),
            taylor_shift(field, &lift(f.den()), alpha),
        ),
        None => {
            let mut a = lift(f.num());
            let mut b = lift(f.den());
            a.reverse();
            b.reverse();
            (a, b)
        }
    };
    let va = strip_low(&mut a) as i64;
    let vb = strip_low(&mut b) as i64;
    let start = match chart.alpha {
        Some(_) => va - vb,
        None => (f.den().deg() - f.num().deg()) + (va - vb),
    };
    let coeffs = series_div(field, &a, &b, precision);
    Ok(LaurentSeries {
        place: place.clone(),
        field: field.clone(),
        start,
        coeffs,
        precision,
    })
}
