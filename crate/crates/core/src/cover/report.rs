// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use super::RationalCover;
use crate::error::{Error, Result};
use crate::funcfield::{Divisor, Place};
use crate::polyring::factor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamPoint {
    pub above: Place,
    pub below: Place,
    pub e: u64,
    pub f: u64,
    pub d: i64,
    pub wild: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub below: Place,
    pub points: Vec<RamPoint>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    pub fundamental_equality: bool,
    pub dedekind: bool,
    pub hurwitz: bool,
    /// `None` for wild covers, where the tame count does not apply.
    pub tame_different: Option<bool>,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.fundamental_equality && self.dedekind && self.hurwitz && self.tame_different != Some(false)
    }
}

/// Branch-point count for a tame cover, taken over the algebraic closure:
/// `deg Diff = k n - sum_i N_i` with `k` branch points and `N_i` points above
/// the `i`-th.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TameDifferent {
    pub k: u64,
    pub fiber_total: u64,
    pub expected_degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub cover: RationalCover,
    /// Fibers over every candidate branch place, sorted by the place below.
    pub fibers: Vec<Fiber>,
    pub different: Divisor,
    pub branch_locus: Vec<Place>,
    pub tame: bool,
    pub checks: Checks,
    pub tame_different: Option<TameDifferent>,
}

impl RamificationReport {
    pub fn different_degree(&self) -> i64 {
        self.different.degree()
    }

    pub fn fiber(&self, below: &Place) -> Option<&Fiber> {
        self.fibers.iter().find(|f| &f.below == below)
    }

    pub fn point(&self, above: &Place) -> Option<&RamPoint> {
        self.fibers
            .iter()
            .flat_map(|f| f.points.iter())
            .find(|p| &p.above == above)
    }

    pub fn is_unramified(&self) -> bool {
        self.branch_locus.is_empty()
    }
}

impl RationalCover {
    /// Ramification data over every place where ramification is possible.
    ///
    /// Fibers come from factoring pulled-back place polynomials, while the
    /// different is computed independently as `(t') - 2(inf) + 2 (t)_inf`,
    /// so the recorded checks compare two separate computations.
    pub fn report(&self) -> Result<RamificationReport> {
        let field = self.field();
        let n = self.degree() as u64;
        let p = field.p();
        let dt = self.map().derivative();
        if dt.is_zero() {
            return Err(Error::Inseparable);
        }

        let mut candidates: BTreeSet<Place> = BTreeSet::new();
        candidates.insert(Place::Infinite);
        for (pi, _) in factor(dt.num())?.factors {
            candidates.insert(Place::Finite(pi));
        }
        for (pi, _) in factor(self.h())?.factors {
            candidates.insert(Place::Finite(pi));
        }
        let below: BTreeSet<Place> = candidates.iter().map(|c| self.pushforward(c)).collect();

        let mut different = dt.divisor()?;
        different.add_place(Place::Infinite, -2);
        different = &different + &self.map().pole_divisor()?;
        different = &different + &self.map().pole_divisor()?;

        let mut fibers = Vec::new();
        let mut fundamental = true;
        let mut dedekind = true;
        let mut covered = Divisor::new();
        for q in below {
            let mut points = Vec::new();
            let mut sum_ef = 0;
            for fp in self.fiber(&q)? {
                let d = different.coeff(&fp.place);
                let wild = fp.e % p == 0;
                sum_ef += fp.e * fp.f;
                dedekind &= (fp.e > 1) == (d > 0);
                dedekind &= if wild { d >= fp.e as i64 } else { d == fp.e as i64 - 1 };
                covered.add_place(fp.place.clone(), d);
                points.push(RamPoint {
                    above: fp.place,
                    below: q.clone(),
                    e: fp.e,
                    f: fp.f,
                    d,
                    wild,
                });
            }
            fundamental &= sum_ef == n;
            fibers.push(Fiber { below: q, points });
        }

        let branch_locus: Vec<Place> = fibers
            .iter()
            .filter(|f| f.points.iter().any(|pt| pt.e > 1))
            .map(|f| f.below.clone())
            .collect();
        let tame = fibers.iter().all(|f| f.points.iter().all(|pt| !pt.wild));
        let hurwitz = different.degree() == 2 * n as i64 - 2 && covered == different;

        let tame_different = tame.then(|| {
            let mut k = 0;
            let mut fiber_total = 0;
            for f in fibers.iter().filter(|f| branch_locus.contains(&f.below)) {
                k += f.below.degree() as u64;
                fiber_total += f.points.iter().map(|pt| pt.above.degree() as u64).sum::<u64>();
            }
            TameDifferent {
                k,
                fiber_total,
                expected_degree: (k * n) as i64 - fiber_total as i64,
            }
        });
        let tame_different_ok = tame_different.map(|r| {
            let formula = r.expected_degree == different.degree();
            let two_or_more = n == 1 || r.k >= 2;
            let total_when_two = r.k != 2
                || fibers
                    .iter()
                    .filter(|f| branch_locus.contains(&f.below))
                    .all(|f| f.points.len() == 1 && f.points[0].e == n);
            formula && two_or_more && total_when_two
        });

        Ok(RamificationReport {
            cover: self.clone(),
            fibers,
            different,
            branch_locus,
            tame,
            checks: Checks {
                fundamental_equality: fundamental,
                dedekind,
                hurwitz,
                tame_different: tame_different_ok,
            },
            tame_different,
        })
    }
}

/// `e(P | R)` multiplied along the chain for every place `P` above the
/// composite's branch fibers, compared with the composite's own report.
/// Returns the first mismatch as `(place, chain product, composite e)`.
pub fn chain_multiplicativity(
    steps: &[RationalCover],
    composite: &RamificationReport,
) -> Option<(Place, u64, u64)> {
    for fiber in &composite.fibers {
        for pt in &fiber.points {
            let mut place = pt.above.clone();
            let mut product = 1;
            for step in steps {
                product *= step.ramification_index(&place);
                place = step.pushforward(&place);
            }
            if product != pt.e || place != fiber.below {
                return Some((pt.above.clone(), product, pt.e));
            }
        }
    }
    None
}
