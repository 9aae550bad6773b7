// SPDX-License-Identifier: Apache-2.0

//! JSON emitters. `serde_json` maps keep keys sorted, so output is canonical.

use ramforge::belyi::BelyiChain;
use ramforge::cover::RamificationReport;
use ramforge::{Error, ErrorKind, Factorization, Field, Polynomial};
use serde_json::{json, Value};

use crate::commands::{LaurentReport, PseudotameReport};
use crate::CliError;

fn field(f: &Field) -> Value {
    json!({ "p": f.p(), "m": f.m() })
}

pub fn report(r: &RamificationReport) -> Value {
    let cover = &r.cover;
    let (up, down) = (cover.up_var(), cover.down_var());
    let fibers: Vec<Value> = r
        .fibers
        .iter()
        .map(|fiber| {
            let points: Vec<Value> = fiber
                .points
                .iter()
                .map(|pt| json!({ "above": pt.above.label(up), "e": pt.e, "f": pt.f, "d": pt.d }))
                .collect();
            json!({ "below": fiber.below.label(down), "points": points })
        })
        .collect();
    let different: Vec<Value> = r
        .different
        .iter()
        .map(|(p, n)| json!({ "place": p.label(up), "d": n }))
        .collect();
    let branch: Vec<String> = r.branch_locus.iter().map(|p| p.label(down)).collect();
    json!({
        "field": field(cover.field()),
        "map": { "num": cover.g().to_text(up), "den": cover.h().to_text(up) },
        "degree": cover.degree(),
        "fibers": fibers,
        "different": different,
        "different_degree": r.different_degree(),
        "branch_locus": branch,
        "tame": r.tame,
        "checks": {
            "fundamental_equality": r.checks.fundamental_equality,
            "dedekind": r.checks.dedekind,
            "hurwitz": r.checks.hurwitz,
            "remark4": r.checks.tame_different,
        },
    })
}

pub fn chain(c: &BelyiChain, steps: &[RamificationReport]) -> Value {
    let certificate: Vec<Value> = c
        .certificate
        .iter()
        .map(|k| json!({ "name": k.name, "ok": k.ok, "detail": k.detail }))
        .collect();
    json!({
        "steps": steps.iter().map(report).collect::<Vec<_>>(),
        "composite": report(&c.report),
        "kind": c.kind.to_string(),
        "certificate": certificate,
    })
}

pub fn pseudotame(r: &PseudotameReport) -> Value {
    let v = r.var;
    let places: Vec<Value> = r
        .places
        .iter()
        .map(|s| {
            json!({
                "place": s.place.label(v),
                "valuation": s.valuation,
                "v_dx": s.v_dx,
                "e": s.e,
                "tame": s.tame,
                "pseudotame": s.pseudotame,
            })
        })
        .collect();
    let square = r.square_completion.as_ref().map(|s| {
        json!({
            "p": s.p.label(v),
            "q": s.q.label(v),
            "budget": s.budget,
            "z": s.z.to_text(v),
            "x_plus_z2": s.result.to_text(v),
            "e": s.e,
        })
    });
    let reduction = r.pole_reduction.as_ref().map(|s| {
        json!({
            "q": s.q.label(v),
            "z": s.z.to_text(v),
            "x_plus_z4": s.result.to_text(v),
            "pole_order": s.pole_order,
        })
    });
    json!({
        "field": field(&r.field),
        "x": r.x.to_text(v),
        "places": places,
        "pseudotame_everywhere": r.everywhere,
        "obstructions": r.obstructions.iter().map(|p| p.label(v)).collect::<Vec<_>>(),
        "a_invariant": r.a_invariant.as_ref().map(|a| a.to_text(v)),
        "square_completion": square,
        "pole_reduction": reduction,
    })
}

pub fn laurent(r: &LaurentReport) -> Value {
    let s = &r.series;
    let terms: Vec<Value> = s
        .terms()
        .map(|(k, c)| json!({ "exponent": k, "coeff": s.field.format(c) }))
        .collect();
    json!({
        "field": field(r.f.field()),
        "coefficient_field": field(&s.field),
        "function": r.f.to_text(r.var),
        "place": s.place.label(r.var),
        "start": s.start,
        "precision": s.precision,
        "terms": terms,
        "series": s.to_text('u'),
    })
}

pub fn factorization(p: &Polynomial, fac: &Factorization, var: char) -> Value {
    let factors: Vec<Value> = fac
        .factors
        .iter()
        .map(|(g, e)| json!({ "factor": g.to_text(var), "multiplicity": e }))
        .collect();
    json!({
        "field": field(p.field()),
        "poly": p.to_text(var),
        "unit": p.field().format(fac.unit.value()),
        "factors": factors,
    })
}

pub fn field_info(f: &Field) -> Value {
    json!({
        "p": f.p(),
        "m": f.m(),
        "order": f.order(),
        "modulus": f.modulus().map(|m| m.to_text('z')),
        "generator": f.format(f.generator()),
    })
}

pub fn kind_name(kind: ErrorKind) -> &'static str {
    match kind {
        ErrorKind::Parse => "parse",
        ErrorKind::Precondition => "precondition",
        ErrorKind::SizeBound => "size_bound",
        ErrorKind::Internal => "internal",
    }
}

pub fn error(e: &CliError) -> Value {
    let pos = match &e.error {
        Error::Parse { pos, .. } => Some(*pos),
        _ => None,
    };
    json!({
        "error": {
            "code": e.error.code(),
            "kind": kind_name(e.error.kind()),
            "message": e.error.to_string(),
            "argument": e.arg.as_ref().map(|(n, _)| *n),
            "input": e.arg.as_ref().map(|(_, s)| s.as_str()),
            "pos": pos,
        }
    })
}
