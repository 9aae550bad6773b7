// SPDX-License-Identifier: Apache-2.0

use super::{Divisor, Place, RationalFunction};
use crate::error::{Error, Result};
use crate::galois::Field;
use crate::polyring::Polynomial;

/// Candidates examined by [`prescribed_element`] per pole order before giving up.
pub const SEARCH_LIMIT: usize = 1 << 16;

/// Pole orders tried past the minimal one when the order is left automatic.
const AUTO_EXTRA_ORDERS: i64 = 16;

/// `L(D) = { N(x) * A_- / A_+ : deg N <= deg D }` where `A_+`, `A_-` collect
/// the positive and negative finite parts of `D`.
struct RrSpace {
    field: Field,
    scale_num: Polynomial,
    scale_den: Polynomial,
    dim: usize,
}

impl RrSpace {
    fn new(field: &Field, d: &Divisor) -> RrSpace {
        let mut scale_num = Polynomial::one(field);
        let mut scale_den = Polynomial::one(field);
        for (place, n) in d.iter() {
            if let Place::Finite(pi) = place {
                if n > 0 {
                    scale_den = &scale_den * &pi.pow(n as u64);
                } else {
                    scale_num = &scale_num * &pi.pow((-n) as u64);
                }
            }
        }
        let deg = d.degree();
        RrSpace {
            field: field.clone(),
            scale_num,
            scale_den,
            dim: if deg < 0 { 0 } else { deg as usize + 1 },
        }
    }

    fn element(&self, coeffs: &[u64]) -> RationalFunction {
        let n = Polynomial::from_coeffs(&self.field, coeffs.to_vec());
        RationalFunction::new(&n * &self.scale_num, self.scale_den.clone()).expect("monic denominator")
    }
}

/// A basis of `L(D) = { f : (f) >= -D } ∪ {0}` over the base field.
pub fn rr_basis(field: &Field, d: &Divisor) -> Vec<RationalFunction> {
    let space = RrSpace::new(field, d);
    (0..space.dim)
        .map(|i| {
            let mut c = vec![0; i + 1];
            c[i] = 1;
            space.element(&c)
        })
        .collect()
}

/// `dim L(D)`.
pub fn rr_dimension(d: &Divisor) -> usize {
    let deg = d.degree();
    if deg < 0 {
        0
    } else {
        deg as usize + 1
    }
}

/// Finds `f` with `D <= (f)_0`, `(f)_inf = nP`, `v_R(f) = 0` for every `R` in
/// `avoid`, and `v_Q(f) >= k` for `zero_at = (Q, k)`.
///
/// With `order = None` the least feasible `n` is used. Candidates are scanned
/// in order of increasing support size in the basis of `L(nP - D - kQ)`.
pub fn prescribed_element(
    field: &Field,
    d: &Divisor,
    pole: &Place,
    order: Option<i64>,
    avoid: &[Place],
    zero_at: Option<(&Place, i64)>,
) -> Result<RationalFunction> {
    if !d.is_effective() {
        return Err(Error::Precondition(format!(
            "divisor {} is not effective",
            d.to_text('x')
        )));
    }
    if d.coeff(pole) != 0 {
        return Err(Error::Precondition(format!(
            "pole place {} lies in the support of D",
            pole.label('x')
        )));
    }
    for r in avoid.iter().chain(zero_at.map(|(q, _)| q)) {
        if r == pole || d.coeff(r) != 0 {
            return Err(Error::Precondition(format!(
                "constraint place {} collides with the pole place or supp D",
                r.label('x')
            )));
        }
    }
    let mut target = d.clone();
    if let Some((q, k)) = zero_at {
        if k < 0 {
            return Err(Error::Precondition(format!("negative zero order {k}")));
        }
        if avoid.contains(q) && k > 0 {
            return Err(Error::Infeasible(format!(
                "{} is both avoided and a prescribed zero",
                q.label('x')
            )));
        }
        target.add_place(q.clone(), k);
    }
    let pdeg = pole.degree() as i64;
    let need = target.degree();
    let least = ((need + pdeg - 1) / pdeg).max(1);
    let orders: Vec<i64> = match order {
        Some(n) => {
            if n * pdeg < need || n < 1 {
                return Err(Error::Infeasible(format!(
                    "pole order {n} at {} is below the degree bound {need}",
                    pole.label('x')
                )));
            }
            vec![n]
        }
        None => (least..=least + AUTO_EXTRA_ORDERS).collect(),
    };
    let mut failure = String::new();
    for n in orders {
        let space_div = &Divisor::from_place(pole.clone(), n) - &target;
        let space = RrSpace::new(field, &space_div);
        let mut exact_pole_seen = false;
        let found = search_combinations(space.dim, field.order(), SEARCH_LIMIT, |c| {
            let f = space.element(c);
            if f.valuation(pole) != Some(-n) {
                return false;
            }
            exact_pole_seen = true;
            avoid.iter().all(|r| f.valuation(r) == Some(0))
        });
        if let Some(c) = found {
            return Ok(space.element(&c));
        }
        failure = if exact_pole_seen {
            format!(
                "every candidate with pole order {n} at {} vanishes at an avoided place",
                pole.label('x')
            )
        } else {
            format!("no candidate has exact pole order {n} at {}", pole.label('x'))
        };
    }
    Err(Error::Infeasible(failure))
}

/// Scans nonzero coefficient vectors of length `len` by increasing weight, with
/// the first nonzero entry fixed to 1. Returns the first vector accepted.
fn search_combinations<F: FnMut(&[u64]) -> bool>(
    len: usize,
    q: u64,
    limit: usize,
    mut accept: F,
) -> Option<Vec<u64>> {
    let mut seen = 0usize;
    let mut vec = vec![0u64; len];
    for w in 1..=len {
        let mut idx: Vec<usize> = (0..w).collect();
        loop {
            // coefficients on idx[1..] run over the nonzero field elements
            let mut digits = vec![1u64; w];
            loop {
                vec.iter_mut().for_each(|c| *c = 0);
                for (&i, &c) in idx.iter().zip(&digits) {
                    vec[i] = c;
                }
                if accept(&vec) {
                    return Some(vec);
                }
                seen += 1;
                if seen >= limit {
                    return None;
                }
                let mut advanced = false;
                for k in (1..w).rev() {
                    if digits[k] + 1 < q {
                        digits[k] += 1;
                        advanced = true;
                        break;
                    }
                    digits[k] = 1;
                }
                if !advanced {
                    break;
                }
            }
            // next w-subset of 0..len in lexicographic order
            let mut i = w;
            while i > 0 && idx[i - 1] == len - w + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..w {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}
