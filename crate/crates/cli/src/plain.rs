// SPDX-License-Identifier: Apache-2.0

//! Text emitters: fiber diagrams as indented lists.

use std::fmt::Write;

use ramforge::belyi::BelyiChain;
use ramforge::cover::RamificationReport;
use ramforge::{Error, Factorization, Field, Polynomial};

use crate::commands::{LaurentReport, PseudotameReport};
use crate::CliError;

fn field_name(f: &Field) -> String {
    if f.m() == 1 {
        format!("F_{}", f.p())
    } else {
        format!("F_{}^{}", f.p(), f.m())
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

pub fn report(r: &RamificationReport) -> String {
    let cover = &r.cover;
    let (up, down) = (cover.up_var(), cover.down_var());
    let mut out = String::new();
    writeln!(out, "cover {} over {}", cover.to_text(), field_name(cover.field())).unwrap();
    if let Some(alpha) = cover.normalization() {
        writeln!(out, "normalized by s -> 1/(s+{})", cover.field().format(alpha)).unwrap();
    }
    writeln!(out, "degree {}", cover.degree()).unwrap();
    for fiber in &r.fibers {
        writeln!(out, "  over {}", fiber.below.label(down)).unwrap();
        for pt in &fiber.points {
            let tag = if pt.wild { " wild" } else { "" };
            writeln!(out, "    {} | e={} f={} d={}{}", pt.above.label(up), pt.e, pt.f, pt.d, tag).unwrap();
        }
    }
    writeln!(out, "different {} (degree {})", r.different.to_text(up), r.different_degree()).unwrap();
    if r.branch_locus.is_empty() {
        writeln!(out, "unramified cover").unwrap();
    } else {
        let labels: Vec<String> = r.branch_locus.iter().map(|p| p.label(down)).collect();
        writeln!(out, "branch locus {}", labels.join(", ")).unwrap();
    }
    writeln!(out, "{}", if r.tame { "tame" } else { "wild" }).unwrap();
    let c = &r.checks;
    writeln!(
        out,
        "checks fundamental_equality={} dedekind={} hurwitz={} tame_different={}",
        yes_no(c.fundamental_equality),
        yes_no(c.dedekind),
        yes_no(c.hurwitz),
        c.tame_different.map_or("n/a", yes_no)
    )
    .unwrap();
    out
}

pub fn chain(c: &BelyiChain, steps: &[RamificationReport]) -> String {
    let mut out = String::new();
    writeln!(out, "{} Belyi chain with {} step(s)", c.kind, steps.len()).unwrap();
    for (i, r) in steps.iter().enumerate() {
        writeln!(out, "\nstep {}", i + 1).unwrap();
        out.push_str(&report(r));
    }
    writeln!(out, "\ncomposite").unwrap();
    out.push_str(&report(&c.report));
    writeln!(out, "\ncertificate").unwrap();
    for k in &c.certificate {
        writeln!(out, "  [{}] {}: {}", if k.ok { "ok" } else { "FAILED" }, k.name, k.detail).unwrap();
    }
    out
}

pub fn pseudotame(r: &PseudotameReport) -> String {
    let v = r.var;
    let mut out = String::new();
    writeln!(out, "x = {} over {}", r.x.to_text(v), field_name(&r.field)).unwrap();
    for s in &r.places {
        writeln!(
            out,
            "  {} | v={} v(dx)={} e={} {} {}",
            s.place.label(v),
            s.valuation,
            s.v_dx,
            s.e,
            if s.tame { "tame" } else { "wild" },
            if s.pseudotame { "pseudo-tame" } else { "not pseudo-tame" }
        )
        .unwrap();
    }
    if r.everywhere {
        writeln!(out, "pseudo-tame everywhere").unwrap();
    } else {
        let bad: Vec<String> = r.obstructions.iter().map(|p| p.label(v)).collect();
        writeln!(out, "obstructions {}", bad.join(", ")).unwrap();
    }
    if let Some(a) = &r.a_invariant {
        writeln!(out, "a(x, y) = {}", a.to_text(v)).unwrap();
    }
    if let Some(s) = &r.square_completion {
        writeln!(
            out,
            "square completion at {} avoiding {}: z = {}, x+z^2 = {} (e={})",
            s.p.label(v),
            s.q.label(v),
            s.z.to_text(v),
            s.result.to_text(v),
            s.e
        )
        .unwrap();
    }
    if let Some(s) = &r.pole_reduction {
        writeln!(
            out,
            "pole reduction at {}: z = {}, x+z^4 = {} (pole order {})",
            s.q.label(v),
            s.z.to_text(v),
            s.result.to_text(v),
            s.pole_order
        )
        .unwrap();
    }
    out
}

pub fn laurent(r: &LaurentReport) -> String {
    let s = &r.series;
    format!(
        "{} at {} = {} + O(u^{})\n",
        r.f.to_text(r.var),
        s.place.label(r.var),
        s.to_text('u'),
        s.start + s.precision as i64
    )
}

pub fn factorization(p: &Polynomial, fac: &Factorization, var: char) -> String {
    let field = p.field();
    let mut parts = Vec::new();
    if fac.unit.value() != 1 || fac.factors.is_empty() {
        parts.push(field.format(fac.unit.value()));
    }
    for (g, e) in &fac.factors {
        let body = format!("({})", g.to_text(var));
        parts.push(if *e == 1 { body } else { format!("{body}^{e}") });
    }
    format!("{} = {}\n", p.to_text(var), parts.join("*"))
}

pub fn field_info(f: &Field) -> String {
    let mut out = format!("{} of order {}\n", field_name(f), f.order());
    if let Some(m) = f.modulus() {
        writeln!(out, "modulus {}", m.to_text('z')).unwrap();
    }
    writeln!(out, "generator {}", f.format(f.generator())).unwrap();
    out
}

pub fn error(e: &CliError) -> String {
    let mut out = format!("error[{}]: {}", e.error.code(), e.error);
    if let Some((name, src)) = &e.arg {
        write!(out, "\n  in {name}: {src}").unwrap();
        if let Error::Parse { pos, .. } = &e.error {
            let width = 6 + name.len() + src[..(*pos).min(src.len())].chars().count();
            write!(out, "\n{}^", " ".repeat(width)).unwrap();
        }
    }
    out
}
