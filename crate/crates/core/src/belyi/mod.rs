// SPDX-License-Identifier: Apache-2.0

//! Explicit Belyi maps: the tame map `t = 1 - x^(q^r - 1)`, the wild step
//! `u = (t^(p+1) + 1)/t`, and certified chains built from them.

use std::fmt;

use crate::cover::{chain_multiplicativity, RamificationReport, RationalCover};
use crate::error::{Error, Result};
use crate::funcfield::Place;
use crate::galois::Field;
use crate::polyring::Polynomial;

/// Environment variable overriding [`BelyiOptions::max_degree`].
pub const MAX_DEGREE_ENV: &str = "RAMFORGE_MAX_DEGREE";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BelyiOptions {
    /// Largest admissible `q^r - 1`.
    pub max_degree: u64,
}

impl Default for BelyiOptions {
    fn default() -> Self {
        BelyiOptions { max_degree: 1 << 16 }
    }
}

impl BelyiOptions {
    /// Defaults, with the degree cap read from `RAMFORGE_MAX_DEGREE` if set.
    pub fn from_env() -> Result<Self> {
        let mut opts = BelyiOptions::default();
        if let Ok(v) = std::env::var(MAX_DEGREE_ENV) {
            opts.max_degree = v.trim().parse().map_err(|_| {
                Error::Precondition(format!("{MAX_DEGREE_ENV}={v} is not a nonnegative integer"))
            })?;
        }
        Ok(opts)
    }
}

/// One named verification outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, ok: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            ok,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainKind {
    Wild,
    Tame,
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainKind::Wild => "wild",
            ChainKind::Tame => "tame",
        })
    }
}

/// A cover with its report and the checks run on it.
#[derive(Clone, Debug)]
pub struct CertifiedCover {
    pub cover: RationalCover,
    pub report: RamificationReport,
    pub certificate: Vec<Check>,
}

impl CertifiedCover {
    pub fn ok(&self) -> bool {
        self.certificate.iter().all(|c| c.ok)
    }
}

#[derive(Clone, Debug)]
pub struct BelyiChain {
    pub steps: Vec<RationalCover>,
    pub composite: RationalCover,
    pub kind: ChainKind,
    pub report: RamificationReport,
    pub certificate: Vec<Check>,
}

impl BelyiChain {
    pub fn ok(&self) -> bool {
        self.certificate.iter().all(|c| c.ok)
    }
}

fn labels(places: &[Place], var: char) -> String {
    places
        .iter()
        .map(|p| p.label(var))
        .collect::<Vec<_>>()
        .join(", ")
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// `q^r - 1` for `r` the lcm of the place degrees, checked against the cap.
fn lemma_degree(field: &Field, places: &[Place], opts: &BelyiOptions) -> Result<(u64, u64)> {
    let r = places.iter().fold(1u64, |acc, p| lcm(acc, p.degree() as u64));
    let q = field.order();
    let too_big = || Error::DegreeBound {
        degree: u64::MAX,
        limit: opts.max_degree,
    };
    let qr = u32::try_from(r)
        .ok()
        .and_then(|r| q.checked_pow(r))
        .ok_or_else(too_big)?;
    if qr - 1 > opts.max_degree {
        return Err(Error::DegreeBound {
            degree: qr - 1,
            limit: opts.max_degree,
        });
    }
    Ok((r, qr - 1))
}

fn validate_places(places: &[Place]) -> Result<()> {
    if places.is_empty() {
        return Err(Error::Precondition("the place set S is empty".into()));
    }
    for p in places {
        match p {
            Place::Infinite => {
                return Err(Error::Precondition(
                    "S contains (x=inf); translate the places first".into(),
                ))
            }
            Place::Finite(pi) if pi.degree() == Some(1) && pi.coeff(0) == 0 => {
                return Err(Error::Precondition(
                    "S contains (x=0); translate the places first".into(),
                ))
            }
            _ => {}
        }
    }
    Ok(())
}

/// `P(x) -> P(x - c)`: moves every finite place by `c`, fixing infinity.
/// Pulling a cover back along `x -> x - c` lets callers move `(x=0)` out of `S`.
pub fn translate_place(place: &Place, c: u64) -> Place {
    match place {
        Place::Infinite => Place::Infinite,
        Place::Finite(pi) => {
            let field = pi.field();
            let shifted = pi.compose(&Polynomial::linear(field, c));
            Place::Finite(shifted)
        }
    }
}

/// The tame map `t = 1 - x^(q^r - 1)` with `r` the lcm of the degrees in `S`.
pub fn lemma_main_map(field: &Field, places: &[Place], opts: &BelyiOptions) -> Result<CertifiedCover> {
    validate_places(places)?;
    let (r, n) = lemma_degree(field, places, opts)?;
    let g = &Polynomial::one(field) - &Polynomial::monomial(field, 1, n as usize);
    let cover = RationalCover::new(g, Polynomial::one(field))?.with_vars('x', 't');
    let report = cover.report()?;
    let t0 = Place::rational(field, 0);
    let t1 = Place::rational(field, 1);
    let x0 = Place::rational(field, 0);

    let mut certificate = Vec::new();
    let fiber0 = cover.fiber(&t0)?;
    let s_ok = places
        .iter()
        .all(|p| fiber0.iter().any(|fp| &fp.place == p && fp.e == 1));
    certificate.push(Check::new(
        "s_unramified_over_t0",
        s_ok,
        format!("r={r}; {} over (t=0) with e=1", labels(places, 'x')),
    ));
    let e0 = (cover.pushforward(&x0) == t1).then(|| cover.ramification_index(&x0));
    certificate.push(Check::new(
        "x0_totally_ramified_over_t1",
        e0 == Some(n),
        format!("e((x=0)|(t=1))={} expected {n}", e0.unwrap_or(0)),
    ));
    let einf = Some(cover.ramification_index(&Place::Infinite));
    certificate.push(Check::new(
        "xinf_totally_ramified_over_tinf",
        einf == Some(n),
        format!("e((x=inf)|(t=inf))={} expected {n}", einf.unwrap_or(0)),
    ));
    let others = report
        .fibers
        .iter()
        .flat_map(|f| f.points.iter())
        .filter(|pt| pt.e > 1 && pt.above != x0 && pt.above != Place::Infinite)
        .count();
    let branch_ok = report.branch_locus.iter().all(|b| b == &t1 || b.is_infinite());
    certificate.push(Check::new(
        "no_other_ramification",
        others == 0 && branch_ok,
        format!("branch locus {{{}}}", labels(&report.branch_locus, 't')),
    ));
    certificate.push(Check::new(
        "tame",
        report.tame,
        format!("gcd({n}, {}) = 1", field.p()),
    ));
    certificate.push(Check::new(
        "report_identities",
        report.checks.all(),
        "fundamental equality, Dedekind, Hurwitz, branch count",
    ));
    Ok(CertifiedCover {
        cover,
        report,
        certificate,
    })
}

/// `v = ((s - c)^(p+1) + 1)/(s - c)`, a degree `p + 1` cover branched only
/// over `v = inf`. Labels use `s = t`, `v = u`.
pub fn wild_step(field: &Field, shift: u64) -> Result<RationalCover> {
    let p = field.p();
    let lin = Polynomial::linear(field, shift);
    let g = &lin.pow(p + 1) + &Polynomial::one(field);
    Ok(RationalCover::new(g, lin)?.with_vars('t', 'u'))
}

/// `T^(p+1) - beta T + 1` is squarefree for every `beta` in `field`.
pub fn f_beta_separable(field: &Field) -> bool {
    let p = field.p();
    field.elements().all(|beta| {
        let mut c = vec![0u64; p as usize + 2];
        c[0] = 1;
        c[1] = field.neg(beta);
        c[p as usize + 1] = 1;
        let f = Polynomial::from_coeffs(field, c);
        f.gcd(&f.derivative()).is_one()
    })
}

/// Checks a wild step: one branch place, two points above it with indices
/// `1` and `p`, different exponent `2p` at the wild point, and separable
/// fibers `f_beta` over the base field and its quadratic extension.
pub fn certify_wild_step(cover: &RationalCover, shift: u64) -> Result<CertifiedCover> {
    let field = cover.field().clone();
    let p = field.p();
    let report = cover.report()?;
    let (up, down) = (cover.up_var(), cover.down_var());
    let mut certificate = Vec::new();
    certificate.push(Check::new(
        "single_branch_place",
        report.branch_locus == vec![Place::Infinite],
        format!("branch locus {{{}}}", labels(&report.branch_locus, down)),
    ));
    let fiber = report.fiber(&Place::Infinite);
    let shifted = Place::rational(&field, shift);
    let pts: Vec<(Place, u64, i64)> = fiber
        .map(|f| f.points.iter().map(|pt| (pt.above.clone(), pt.e, pt.d)).collect())
        .unwrap_or_default();
    let shape_ok = pts.len() == 2
        && pts.contains(&(shifted.clone(), 1, 0))
        && pts.iter().any(|(pl, e, _)| pl.is_infinite() && *e == p);
    certificate.push(Check::new(
        "fiber_indices_1_and_p",
        shape_ok,
        pts.iter()
            .map(|(pl, e, _)| format!("{} e={e}", pl.label(up)))
            .collect::<Vec<_>>()
            .join(", "),
    ));
    let d = pts.iter().find(|(pl, _, _)| pl.is_infinite()).map(|x| x.2);
    certificate.push(Check::new(
        "different_exponent_2p",
        d == Some(2 * p as i64),
        format!("d({}) = {} expected {}", Place::Infinite.label(up), d.unwrap_or(0), 2 * p),
    ));
    let ext = Field::create(p, field.m() * 2)?;
    let sep = f_beta_separable(&field) && f_beta_separable(&ext);
    certificate.push(Check::new(
        "f_beta_separable",
        sep,
        format!("T^{}-bT+1 squarefree for all b in {field} and {ext}", p + 1),
    ));
    certificate.push(Check::new(
        "report_identities",
        report.checks.all(),
        "fundamental equality, Dedekind, Hurwitz",
    ));
    Ok(CertifiedCover {
        cover: cover.clone(),
        report,
        certificate,
    })
}

fn compose_all(steps: &[RationalCover]) -> Result<RationalCover> {
    let mut it = steps.iter();
    let mut acc = it.next().expect("nonempty chain").clone();
    for s in it {
        acc = acc.compose(s)?;
    }
    Ok(acc)
}

fn push_through(steps: &[RationalCover], place: &Place) -> Place {
    steps.iter().fold(place.clone(), |p, s| s.pushforward(&p))
}

fn step_checks(certificate: &mut Vec<Check>, name: &str, c: &CertifiedCover) {
    let failed: Vec<&str> = c
        .certificate
        .iter()
        .filter(|x| !x.ok)
        .map(|x| x.name.as_str())
        .collect();
    certificate.push(Check::new(
        name,
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} checks passed", c.certificate.len())
        } else {
            format!("failed: {}", failed.join(", "))
        },
    ));
}

/// The wild tower `x -> t -> u -> y`: the tame map followed by two wild
/// steps with shifts `0` and `2`. The composite is branched only over
/// `(y=inf)`. With `S` empty the tame map is left out.
pub fn wild_belyi(field: &Field, places: &[Place], opts: &BelyiOptions) -> Result<BelyiChain> {
    let p = field.p();
    let mut certificate = Vec::new();
    let mut steps = Vec::new();
    let mut lemma_degree = 1;
    if places.is_empty() {
        certificate.push(Check::new(
            "lemma_step",
            true,
            "S is empty; the tame step is omitted",
        ));
    } else {
        let lemma = lemma_main_map(field, places, opts)?;
        lemma_degree = lemma.cover.degree() as u64;
        step_checks(&mut certificate, "lemma_step", &lemma);
        steps.push(lemma.cover);
    }
    let w1 = wild_step(field, 0)?;
    let shift2 = field.from_int(2);
    let w2 = wild_step(field, shift2)?.with_vars('u', 'y');
    step_checks(&mut certificate, "wild_step_shift_0", &certify_wild_step(&w1, 0)?);
    step_checks(&mut certificate, "wild_step_shift_2", &certify_wild_step(&w2, shift2)?);
    steps.push(w1);
    steps.push(w2);

    let composite = compose_all(&steps)?;
    let report = composite.report()?;
    let up = composite.up_var();

    let branch_ok = report.branch_locus.iter().all(|b| b.is_infinite());
    certificate.push(Check::new(
        "branch_locus_at_infinity",
        branch_ok,
        format!("branch locus {{{}}}", labels(&report.branch_locus, 'y')),
    ));
    let expected = lemma_degree * (p + 1) * (p + 1);
    certificate.push(Check::new(
        "composite_degree",
        composite.degree() as u64 == expected,
        format!("degree {} expected {expected}", composite.degree()),
    ));
    let mut special: Vec<Place> = places.to_vec();
    if !places.is_empty() {
        special.push(Place::rational(field, 0));
    }
    special.push(Place::Infinite);
    let stray: Vec<Place> = special
        .iter()
        .filter(|pl| !push_through(&steps, pl).is_infinite())
        .cloned()
        .collect();
    certificate.push(Check::new(
        "special_points_over_infinity",
        stray.is_empty(),
        if stray.is_empty() {
            format!("{} map to (y=inf)", labels(&special, up))
        } else {
            format!("{} miss (y=inf)", labels(&stray, up))
        },
    ));
    let wild_ok = composite.degree() == 1 || !report.tame;
    certificate.push(Check::new(
        "composite_wild",
        wild_ok,
        if report.tame { "tame" } else { "wild ramification present" },
    ));
    let mult = chain_multiplicativity(&steps, &report);
    certificate.push(Check::new(
        "e_multiplicative",
        mult.is_none(),
        match &mult {
            None => "ramification indices multiply along the chain".to_string(),
            Some((pl, a, b)) => format!("{}: chain {a} vs composite {b}", pl.label(up)),
        },
    ));
    certificate.push(Check::new(
        "report_identities",
        report.checks.all(),
        "fundamental equality, Dedekind, Hurwitz",
    ));
    Ok(BelyiChain {
        steps,
        composite,
        kind: ChainKind::Wild,
        report,
        certificate,
    })
}

/// The single tame step, branched over `(t=1)` and `(t=inf)` only, both
/// totally ramified.
pub fn tame_belyi_genus0(field: &Field, places: &[Place], opts: &BelyiOptions) -> Result<BelyiChain> {
    let lemma = lemma_main_map(field, places, opts)?;
    let mut certificate = lemma.certificate.clone();
    let report = lemma.report.clone();
    let n = lemma.cover.degree() as u64;
    let t1 = Place::rational(field, 1);
    let allowed = [Place::rational(field, 0), t1.clone(), Place::Infinite];
    certificate.push(Check::new(
        "branch_in_0_1_inf",
        report.branch_locus.iter().all(|b| allowed.contains(b)),
        format!("branch locus {{{}}}", labels(&report.branch_locus, 't')),
    ));
    let two_total = if n == 1 {
        report.branch_locus.is_empty()
    } else {
        report.branch_locus == vec![t1, Place::Infinite]
            && report
                .branch_locus
                .iter()
                .all(|b| report.fiber(b).is_some_and(|f| f.points.len() == 1 && f.points[0].e == n))
    };
    certificate.push(Check::new(
        "two_totally_ramified_branch_points",
        two_total,
        format!("k = {} with n = {n}", report.branch_locus.len()),
    ));
    Ok(BelyiChain {
        steps: vec![lemma.cover.clone()],
        composite: lemma.cover,
        kind: ChainKind::Tame,
        report,
        certificate,
    })
}
