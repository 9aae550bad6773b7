// SPDX-License-Identifier: Apache-2.0

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ramforge::belyi::{tame_belyi_genus0, wild_belyi, BelyiChain, BelyiOptions};
use ramforge::cover::{RamificationReport, RationalCover};
use ramforge::funcfield::{default_precision, laurent_expand, Place, RationalFunction};
use ramforge::polyring::factor;
use ramforge::pseudotame::{
    a_invariant, default_pole_budget, differential_valuation, is_pseudotame_at, is_pseudotame_everywhere,
    pseudotame_obstructions, quartic_pole_reduction, ramification_at, square_completion,
};
use ramforge::text::{parse_function, parse_place, parse_place_list, parse_polynomial};
use ramforge::{Error, Field, Polynomial};

use crate::{json, plain, CliError, Command, FieldArgs, Output};

type CliResult<T> = std::result::Result<T, CliError>;

fn tagged<T>(r: ramforge::Result<T>, name: &'static str, src: &str) -> CliResult<T> {
    r.map_err(|error| CliError {
        error,
        arg: Some((name, src.to_string())),
    })
}

fn make_field(args: &FieldArgs) -> CliResult<Field> {
    Ok(Field::create(args.p, args.m)?)
}

pub fn run(cmd: Command) -> CliResult<Output> {
    match cmd {
        Command::Analyze { field, num, den, seed } => analyze(&field, num, den, seed),
        Command::BelyiWild { field, places } => belyi(&field, &places, true),
        Command::BelyiTame { field, places } => belyi(&field, &places, false),
        Command::Pseudotame { field, x, y, at, budget } => pseudotame(&field, &x, y.as_deref(), at.as_deref(), budget),
        Command::Laurent { field, f, at, prec } => laurent(&field, &f, &at, prec),
        Command::Factor { field, poly } => factor_cmd(&field, &poly),
        Command::Field { field } => field_cmd(&field),
    }
}

fn random_cover(field: &Field, seed: u64) -> CliResult<RationalCover> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let poly = |rng: &mut ChaCha8Rng| {
            let deg = rng.gen_range(0..=8);
            let coeffs = (0..=deg).map(|_| rng.gen_range(0..field.order())).collect();
            Polynomial::from_coeffs(field, coeffs)
        };
        let (g, h) = (poly(&mut rng), poly(&mut rng));
        if h.is_zero() || g.is_zero() {
            continue;
        }
        let map = RationalFunction::new(g, h)?;
        if map.is_constant() || map.derivative().is_zero() {
            continue;
        }
        return Ok(RationalCover::from_map(map)?);
    }
}

fn read_cover(field: &Field, num: &str, den: Option<&str>) -> CliResult<RationalCover> {
    let g = tagged(parse_function(field, num), "num", num)?;
    let mut var = g.var;
    let mut map = g.value;
    if let Some(den) = den {
        let h = tagged(parse_function(field, den), "den", den)?;
        if let (Some(a), Some(b)) = (var, h.var) {
            if a != b {
                return tagged(
                    Err(Error::Precondition(format!("numerator uses {a} but denominator uses {b}"))),
                    "den",
                    den,
                );
            }
        }
        var = var.or(h.var);
        map = tagged(map.div(&h.value), "den", den)?;
    }
    let up = var.unwrap_or('x');
    let down = if up == 't' { 'u' } else { 't' };
    Ok(RationalCover::from_map(map)?.with_vars(up, down))
}

fn analyze(args: &FieldArgs, num: Option<String>, den: Option<String>, seed: Option<u64>) -> CliResult<Output> {
    let field = make_field(args)?;
    let cover = match (num, seed) {
        (Some(num), None) => read_cover(&field, &num, den.as_deref())?,
        (None, Some(seed)) => random_cover(&field, seed)?,
        (None, None) => return Err(Error::Precondition("give a map or --seed".into()).into()),
        (Some(_), Some(_)) => return Err(Error::Precondition("--seed draws the map; omit the map arguments".into()).into()),
    };
    let report = cover.report()?;
    Ok(Output {
        json: json::report(&report),
        text: plain::report(&report),
        failed: failed_checks(&report),
    })
}

fn failed_checks(r: &RamificationReport) -> Vec<String> {
    let c = &r.checks;
    [
        ("fundamental_equality", c.fundamental_equality),
        ("dedekind", c.dedekind),
        ("hurwitz", c.hurwitz),
        ("tame_different", c.tame_different.unwrap_or(true)),
    ]
    .iter()
    .filter(|(_, ok)| !ok)
    .map(|(n, _)| n.to_string())
    .collect()
}

fn belyi(args: &FieldArgs, places: &str, wild: bool) -> CliResult<Output> {
    let field = make_field(args)?;
    let list = tagged(parse_place_list(&field, places), "--places", places)?;
    let opts = BelyiOptions::from_env()?;
    let chain: BelyiChain = if wild {
        wild_belyi(&field, &list, &opts)?
    } else {
        tame_belyi_genus0(&field, &list, &opts)?
    };
    let steps = chain
        .steps
        .iter()
        .map(|s| s.report())
        .collect::<ramforge::Result<Vec<_>>>()?;
    let mut failed: Vec<String> = chain.certificate.iter().filter(|c| !c.ok).map(|c| c.name.clone()).collect();
    for r in steps.iter().chain(std::iter::once(&chain.report)) {
        failed.extend(failed_checks(r));
    }
    Ok(Output {
        json: json::chain(&chain, &steps),
        text: plain::chain(&chain, &steps),
        failed,
    })
}

/// Per-place data of the pseudo-tame report.
pub struct PlaceStatus {
    pub place: Place,
    pub valuation: i64,
    pub v_dx: i64,
    pub e: u64,
    pub tame: bool,
    pub pseudotame: bool,
}

pub struct SquareCompletion {
    pub p: Place,
    pub q: Place,
    pub budget: usize,
    pub z: RationalFunction,
    pub result: RationalFunction,
    pub e: u64,
}

pub struct PoleReduction {
    pub q: Place,
    pub z: RationalFunction,
    pub result: RationalFunction,
    pub pole_order: i64,
}

pub struct PseudotameReport {
    pub field: Field,
    pub var: char,
    pub x: RationalFunction,
    pub places: Vec<PlaceStatus>,
    pub everywhere: bool,
    pub obstructions: Vec<Place>,
    pub a_invariant: Option<RationalFunction>,
    pub square_completion: Option<SquareCompletion>,
    pub pole_reduction: Option<PoleReduction>,
}

fn status(x: &RationalFunction, place: &Place) -> ramforge::Result<PlaceStatus> {
    let e = ramification_at(x, place)?;
    Ok(PlaceStatus {
        place: place.clone(),
        valuation: x.valuation(place).ok_or(Error::ZeroFunction)?,
        v_dx: differential_valuation(x, place)?,
        e,
        tame: e % 2 != 0,
        pseudotame: is_pseudotame_at(x, place)?,
    })
}

fn pseudotame(
    args: &FieldArgs,
    x_src: &str,
    y_src: Option<&str>,
    at: Option<&str>,
    budget: Option<usize>,
) -> CliResult<Output> {
    let field = make_field(args)?;
    if field.p() != 2 {
        return Err(Error::Precondition(format!("pseudotame needs --p 2, got {}", field.p())).into());
    }
    let parsed = tagged(parse_function(&field, x_src), "x", x_src)?;
    let var = parsed.var.unwrap_or('w');
    let x = parsed.value;
    if x.derivative().is_zero() {
        return tagged(Err(Error::PthPower(2)), "x", x_src);
    }
    let at = match at {
        Some(src) => Some(tagged(parse_place(&field, src), "--at", src)?),
        None => None,
    };
    let obstructions = pseudotame_obstructions(&x)?;
    let everywhere = is_pseudotame_everywhere(&x)?;
    let examined = match &at {
        Some(p) => vec![p.clone()],
        None => ramforge::pseudotame::critical_places(&x)?,
    };
    let places = examined
        .iter()
        .map(|p| status(&x, p))
        .collect::<ramforge::Result<Vec<_>>>()?;
    let a = match y_src {
        Some(src) => {
            let y = tagged(parse_function(&field, src), "y", src)?.value;
            Some(tagged(a_invariant(&x, &y), "y", src)?)
        }
        None => None,
    };
    let square = match &at {
        Some(p) if p.degree() == 1 && x.valuation(p).is_some_and(|v| v >= 0) => {
            let q = ramforge::funcfield::places_up_to_degree(&field, 1)
                .into_iter()
                .find(|q| q != p && x.valuation(q).is_some_and(|v| v >= 0));
            match q {
                Some(q) => {
                    let budget = budget.unwrap_or_else(|| default_pole_budget(&x));
                    let z = square_completion(&x, p, &q, budget)?;
                    let result = &x + &(&z * &z);
                    let e = ramification_at(&result, p)?;
                    Some(SquareCompletion {
                        p: p.clone(),
                        q,
                        budget,
                        z,
                        result,
                        e,
                    })
                }
                None => None,
            }
        }
        _ => None,
    };
    let poles = x.pole_divisor()?;
    let mut support = poles.support();
    let reduction = match (support.next(), support.next()) {
        (Some(q), None) if q.degree() == 1 && !obstructions.contains(q) => {
            let (z, result) = quartic_pole_reduction(&x, q)?;
            let pole_order = -result.valuation(q).ok_or(Error::ZeroFunction)?;
            Some(PoleReduction {
                q: q.clone(),
                z,
                result,
                pole_order,
            })
        }
        _ => None,
    };
    let report = PseudotameReport {
        field,
        var,
        x,
        places,
        everywhere,
        obstructions,
        a_invariant: a,
        square_completion: square,
        pole_reduction: reduction,
    };
    Ok(Output {
        json: json::pseudotame(&report),
        text: plain::pseudotame(&report),
        failed: Vec::new(),
    })
}

pub struct LaurentReport {
    pub f: RationalFunction,
    pub var: char,
    pub series: ramforge::funcfield::LaurentSeries,
}

fn laurent(args: &FieldArgs, f_src: &str, at: &str, prec: Option<usize>) -> CliResult<Output> {
    let field = make_field(args)?;
    let parsed = tagged(parse_function(&field, f_src), "f", f_src)?;
    let place = tagged(parse_place(&field, at), "--at", at)?;
    let f = parsed.value;
    let prec = prec.unwrap_or_else(|| default_precision(&f));
    let series = laurent_expand(&f, &place, prec)?;
    let report = LaurentReport {
        f,
        var: parsed.var.unwrap_or('x'),
        series,
    };
    Ok(Output {
        json: json::laurent(&report),
        text: plain::laurent(&report),
        failed: Vec::new(),
    })
}

fn factor_cmd(args: &FieldArgs, src: &str) -> CliResult<Output> {
    let field = make_field(args)?;
    let var = tagged(parse_function(&field, src), "poly", src)?.var.unwrap_or('x');
    let poly = tagged(parse_polynomial(&field, src), "poly", src)?;
    let fac = factor(&poly)?;
    Ok(Output {
        json: json::factorization(&poly, &fac, var),
        text: plain::factorization(&poly, &fac, var),
        failed: Vec::new(),
    })
}

fn field_cmd(args: &FieldArgs) -> CliResult<Output> {
    let field = make_field(args)?;
    Ok(Output {
        json: json::field_info(&field),
        text: plain::field_info(&field),
        failed: Vec::new(),
    })
}
