// SPDX-License-Identifier: Apache-2.0

//! Rational covers `F_q(x) / F_q(t)` with `t = g(x)/h(x)` and their
//! ramification data.

mod report;

pub use report::{chain_multiplicativity, Checks, Fiber, RamPoint, RamificationReport, TameDifferent};

use crate::error::{Error, Result};
use crate::funcfield::{Place, RationalFunction};
use crate::galois::Field;
use crate::polyring::{factor, Polynomial};

/// A place above `Q` with its ramification index and relative degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberPoint {
    pub place: Place,
    pub e: u64,
    pub f: u64,
}

/// The extension `F_q(x) / F_q(t)` given by `t = g(x)/h(x)`, normalized so
/// that `deg g > deg h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCover {
    map: RationalFunction,
    normalization: Option<u64>,
    up: char,
    down: char,
}

impl RationalCover {
    /// Builds the cover `t = g/h`. When `deg g <= deg h` the map is replaced by
    /// `1/(t + alpha)`, with `alpha = -lc(g)/lc(h)` for equal degrees and
    /// `alpha = 0` otherwise; `alpha` is recorded in [`Self::normalization`].
    pub fn new(g: Polynomial, h: Polynomial) -> Result<RationalCover> {
        if h.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if g.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let map = RationalFunction::new(g, h)?;
        RationalCover::from_map(map)
    }

    pub fn from_map(map: RationalFunction) -> Result<RationalCover> {
        if map.is_zero() {
            return Err(Error::ZeroFunction);
        }
        if map.is_constant() {
            return Err(Error::Precondition("constant map has no cover".into()));
        }
        if map.derivative().is_zero() {
            return Err(Error::Inseparable);
        }
        let field = map.field().clone();
        let (dg, dh) = (map.num().deg(), map.den().deg());
        let (map, normalization) = if dg > dh {
            (map, None)
        } else {
            let alpha = if dg == dh {
                field.neg(field.div(map.num().lc(), map.den().lc()).expect("nonzero"))
            } else {
                0
            };
            let shifted = &map + &RationalFunction::constant(&field, alpha);
            (shifted.inv()?, Some(alpha))
        };
        Ok(RationalCover {
            map,
            normalization,
            up: 'x',
            down: 't',
        })
    }

    /// Renames the upstairs and downstairs variables used in labels.
    pub fn with_vars(mut self, up: char, down: char) -> RationalCover {
        self.up = up;
        self.down = down;
        self
    }

    pub fn field(&self) -> &Field {
        self.map.field()
    }

    pub fn map(&self) -> &RationalFunction {
        &self.map
    }

    pub fn g(&self) -> &Polynomial {
        self.map.num()
    }

    pub fn h(&self) -> &Polynomial {
        self.map.den()
    }

    pub fn degree(&self) -> usize {
        self.map.degree()
    }

    /// `Some(alpha)` when the input map `s` was replaced by `1/(s + alpha)`.
    pub fn normalization(&self) -> Option<u64> {
        self.normalization
    }

    pub fn up_var(&self) -> char {
        self.up
    }

    pub fn down_var(&self) -> char {
        self.down
    }

    /// The places above `q` with `e` and `f`, sorted by place.
    pub fn fiber(&self, q: &Place) -> Result<Vec<FiberPoint>> {
        let mut out = Vec::new();
        match q {
            Place::Infinite => {
                out.push(FiberPoint {
                    place: Place::Infinite,
                    e: (self.g().deg() - self.h().deg()) as u64,
                    f: 1,
                });
                for (pi, e) in factor(self.h())?.factors {
                    let f = pi.deg() as u64;
                    out.push(FiberPoint {
                        place: Place::Finite(pi),
                        e: e as u64,
                        f,
                    });
                }
            }
            Place::Finite(qpoly) => {
                let k = qpoly.deg() as usize;
                let n = pullback_numerator(qpoly, self.g(), self.h());
                for (pi, e) in factor(&n)?.factors {
                    let dp = pi.deg() as usize;
                    if dp % k != 0 {
                        return Err(Error::Internal(format!(
                            "place {} above a degree-{k} place has degree {dp}",
                            pi.to_text(self.up)
                        )));
                    }
                    out.push(FiberPoint {
                        place: Place::Finite(pi),
                        e: e as u64,
                        f: (dp / k) as u64,
                    });
                }
            }
        }
        out.sort_by(|a, b| a.place.cmp(&b.place));
        Ok(out)
    }

    /// The place of `F_q(t)` below `p`.
    pub fn pushforward(&self, p: &Place) -> Place {
        let field = self.field();
        match p {
            Place::Infinite => {
                let (dg, dh) = (self.g().deg(), self.h().deg());
                if dg > dh {
                    Place::Infinite
                } else if dg < dh {
                    Place::rational(field, 0)
                } else {
                    Place::rational(field, field.div(self.g().lc(), self.h().lc()).expect("nonzero"))
                }
            }
            Place::Finite(pi) => {
                let hr = self.h().rem(pi).expect("nonzero modulus");
                if hr.is_zero() {
                    return Place::Infinite;
                }
                let (_, s, _) = hr.ext_gcd(pi);
                let beta = self.g().mul_mod(&s, pi);
                Place::Finite(min_poly_mod(&beta, pi))
            }
        }
    }

    /// `e(P | pushforward(P))` read off as the valuation at `P` of the pulled
    /// back prime element.
    pub fn ramification_index(&self, p: &Place) -> u64 {
        let q = self.pushforward(p);
        let pulled = q.prime_element(self.field()).compose(&self.map);
        pulled.valuation(p).expect("nonzero pullback") as u64
    }

    /// `outer ∘ self`: the cover `x -> y` through `t`.
    pub fn compose(&self, outer: &RationalCover) -> Result<RationalCover> {
        if !self.field().same(outer.field()) {
            return Err(Error::FieldMismatch);
        }
        if self.down != outer.up {
            return Err(Error::Precondition(format!(
                "inner cover lands in {} but outer cover starts from {}",
                self.down, outer.up
            )));
        }
        let map = outer.map.compose(&self.map);
        Ok(RationalCover::from_map(map)?.with_vars(self.up, outer.down))
    }

    /// `t = g/h` in the upstairs variable.
    pub fn to_text(&self) -> String {
        format!("{}={}", self.down, self.map.to_text(self.up))
    }
}

/// `h^k q(g/h)` for `q` of degree `k`.
fn pullback_numerator(q: &Polynomial, g: &Polynomial, h: &Polynomial) -> Polynomial {
    let field = q.field();
    let k = q.deg() as usize;
    let mut acc = Polynomial::zero(field);
    let mut gpow = Polynomial::one(field);
    for i in 0..=k {
        let c = q.coeff(i);
        if c != 0 {
            acc = &acc + &(&gpow * &h.pow((k - i) as u64)).scale(c);
        }
        if i < k {
            gpow = &gpow * g;
        }
    }
    acc
}

/// Minimal polynomial over the base field of `beta` in `F_q[x]/(modulus)`.
fn min_poly_mod(beta: &Polynomial, modulus: &Polynomial) -> Polynomial {
    let field = modulus.field();
    let d = modulus.deg() as usize;
    let pad = |p: &Polynomial| {
        let mut v = p.coeffs().to_vec();
        v.resize(d, 0);
        v
    };
    let mut rows: Vec<(Vec<u64>, Vec<u64>, usize)> = Vec::new();
    let mut power = Polynomial::one(field);
    for k in 0..=d {
        let mut v = pad(&power);
        let mut combo = vec![0u64; k + 1];
        combo[k] = 1;
        for (rv, rc, piv) in &rows {
            let c = v[*piv];
            if c == 0 {
                continue;
            }
            for (a, b) in v.iter_mut().zip(rv) {
                *a = field.sub(*a, field.mul(c, *b));
            }
            for (a, b) in combo.iter_mut().zip(rc) {
                *a = field.sub(*a, field.mul(c, *b));
            }
        }
        match v.iter().position(|&a| a != 0) {
            None => return Polynomial::from_coeffs(field, combo).monic(),
            Some(piv) => {
                let inv = field.inv(v[piv]).expect("nonzero pivot");
                v.iter_mut().for_each(|a| *a = field.mul(*a, inv));
                combo.iter_mut().for_each(|a| *a = field.mul(*a, inv));
                rows.push((v, combo, piv));
            }
        }
        power = power.mul_mod(beta, modulus);
    }
    unreachable!("d + 1 powers in a d-dimensional space are dependent")
}
