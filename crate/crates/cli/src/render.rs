//! Plain-text rendering of the report shapes.

use std::fmt::Write;

use crate::dto::{AnalyzeOut, CorpusOut, DedekindOut, FactorOut, PolygonOut, QuarticOut};
use crate::sketch::sketch;

fn factors(fs: &[FactorOut]) -> String {
    if fs.is_empty() {
        return "1".into();
    }
    fs.iter()
        .map(|f| if f.multiplicity == 1 { format!("({})", f.factor) } else { format!("({})^{}", f.factor, f.multiplicity) })
        .collect::<Vec<_>>()
        .join(" ")
}

fn or_none(v: &[String]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.join(", ")
    }
}

pub fn analyze(r: &AnalyzeOut) -> String {
    let mut o = String::new();
    let disc_parts: Vec<String> = r
        .disc_factors
        .iter()
        .map(|pp| if pp.e == 1 { pp.p.clone() } else { format!("{}^{}", pp.p, pp.e) })
        .chain((r.disc_cofactor != "1").then(|| format!("[{}]", r.disc_cofactor)))
        .collect();
    writeln!(o, "f = {}", r.polynomial).unwrap();
    writeln!(o, "degree {}, D(f) = {}", r.degree, r.discriminant).unwrap();
    writeln!(o, "|D(f)| = {}", if disc_parts.is_empty() { "1".into() } else { disc_parts.join(" * ") }).unwrap();
    if r.disc_cofactor != "1" {
        writeln!(o, "unfactored part: {} ({})", r.disc_cofactor, r.cofactor_status).unwrap();
    }
    writeln!(o, "irreducibility: {}", r.irreducibility).unwrap();
    writeln!(o).unwrap();
    writeln!(o, "{:>12}  {:>6}  {:<11}  {:<14}  splitting", "p", "v_p(D)", "method", "v_p(ind)").unwrap();
    for row in &r.ledger {
        writeln!(
            o,
            "{:>12}  {:>6}  {:<11}  {:<14}  {}",
            row.p,
            row.disc_exponent,
            row.method,
            row.nu_index.to_string(),
            row.splitting.as_deref().unwrap_or("-")
        )
        .unwrap();
    }
    writeln!(o).unwrap();
    match r.verdict.kind {
        "NotMonogenicPoly" => writeln!(o, "verdict: NotMonogenicPoly (index divisible by {})", r.verdict.primes.join(", ")),
        "Inconclusive" => writeln!(o, "verdict: Inconclusive"),
        k => writeln!(o, "verdict: {k}"),
    }
    .unwrap();
    for reason in &r.verdict.reasons {
        writeln!(o, "  - {reason}").unwrap();
    }
    writeln!(o, "ind(f): {}", r.index.as_deref().unwrap_or("unresolved")).unwrap();
    match &r.field_discriminant {
        Some(d) => writeln!(o, "field discriminant: {d}").unwrap(),
        None => writeln!(o, "field discriminant: unresolved at {}", or_none(&r.field_disc_unresolved)).unwrap(),
    }
    writeln!(o, "common index divisors: {}", or_none(&r.common_index_divisors)).unwrap();
    if !r.common_index_divisors.is_empty() {
        writeln!(o, "  the field has no power integral basis").unwrap();
    }
    for n in &r.notes {
        writeln!(o, "note: {n}").unwrap();
    }
    o
}

pub fn dedekind(r: &DedekindOut) -> String {
    let mut o = String::new();
    writeln!(o, "f = {}, p = {}", r.polynomial, r.p).unwrap();
    writeln!(o, "f mod p = {}", factors(&r.factors_mod_p)).unwrap();
    writeln!(o, "M(x) = {}", r.m_poly).unwrap();
    if r.divides_index {
        writeln!(o, "p divides ind(f): {} divides both the repeated part and M mod p", r.witness.as_deref().unwrap_or("?")).unwrap();
    } else {
        writeln!(o, "p does not divide ind(f)").unwrap();
        if let Some(s) = &r.splitting {
            writeln!(o, "splitting (e, f): {s}").unwrap();
        }
    }
    o
}

pub fn polygon(r: &PolygonOut) -> String {
    let mut o = String::new();
    writeln!(o, "f = {}, p = {}", r.polynomial, r.p).unwrap();
    for phi in &r.phis {
        writeln!(o).unwrap();
        writeln!(o, "phi = {} (multiplicity {})", phi.phi, phi.multiplicity).unwrap();
        let verts: Vec<String> = phi.vertices.iter().map(|p| format!("({}, {})", p.i, p.v)).collect();
        writeln!(o, "  vertices: {}", if verts.is_empty() { "none".into() } else { verts.join(" ") }).unwrap();
        for (k, s) in phi.sides.iter().enumerate() {
            writeln!(
                o,
                "  side {}: ({}, {}) to ({}, {}), slope {}, degree {}",
                k + 1,
                s.start.i,
                s.start.v,
                s.end.i,
                s.end.v,
                s.slope,
                s.degree
            )
            .unwrap();
            let kind = if s.residual_factors.len() == 1 && s.residual_factors[0].multiplicity == 1 {
                "irreducible"
            } else if s.residual_squarefree {
                "squarefree"
            } else {
                "not squarefree"
            };
            writeln!(o, "    residual {} = {} ({kind})", s.residual, factors(&s.residual_factors)).unwrap();
        }
        writeln!(o, "  ind_phi = {}, {}", phi.phi_index, if phi.regular { "regular" } else { "not regular" }).unwrap();
        for line in sketch(phi).lines() {
            writeln!(o, "  {line}").unwrap();
        }
    }
    writeln!(o).unwrap();
    if let Some(v) = &r.index_valuation {
        writeln!(o, "v_p(ind(f)) = {v}").unwrap();
    }
    if let Some(s) = &r.splitting {
        writeln!(o, "splitting (e, f): {s}").unwrap();
    }
    writeln!(o, "{}", if r.regular { "f is p-regular" } else { "f is not p-regular" }).unwrap();
    o
}

fn fmt_triple(t: &[String; 3]) -> String {
    format!("({}, {}, {})", t[0], t[1], t[2])
}

fn opt_bool(b: Option<bool>, yes: &str, no: &str) -> String {
    match b {
        Some(true) => yes.into(),
        Some(false) => no.into(),
        None => "undecided".into(),
    }
}

pub fn quartic(r: &QuarticOut) -> String {
    let mut o = String::new();
    writeln!(o, "f = {}, d = {}, I(xi) = {}, m = {}, i_m = {}", r.polynomial, r.d, r.n_xi, r.m, r.i_m).unwrap();
    writeln!(o, "field discriminant: {}", r.field_discriminant.as_deref().unwrap_or("unresolved")).unwrap();
    writeln!(o, "boxes: cubic {}, pq {}, xyz {}, q0 {}", r.bounds.cubic, r.bounds.pq, r.bounds.xyz, r.bounds.q0).unwrap();
    writeln!(o, "F(u, v) = {} ({})", r.cubic, opt_bool(r.cubic_reducible, "reducible", "irreducible")).unwrap();
    writeln!(o, "Q1 = {}", r.q1).unwrap();
    writeln!(o, "Q2 = {}", r.q2).unwrap();
    for b in &r.branches {
        writeln!(o).unwrap();
        writeln!(o, "branch (u, v) = ({}, {}): Q0 = {}", b.u, b.v, b.q0).unwrap();
        if let Some(base) = &b.base {
            writeln!(o, "  base zero {}", fmt_triple(base)).unwrap();
        }
        if let (Some(c), Some(det)) = (&b.c, &b.det) {
            writeln!(o, "  c = ({}), det C = {}, d0 = {}", c.join(", "), det, b.d0.as_deref().unwrap_or("?")).unwrap();
        }
        if let Some(f1) = &b.f1 {
            writeln!(o, "  F1 = {} ({})", f1, opt_bool(b.f1_reducible, "reducible", "irreducible")).unwrap();
        }
        if let Some(f2) = &b.f2 {
            writeln!(o, "  F2 = {} ({})", f2, opt_bool(b.f2_reducible, "reducible", "irreducible")).unwrap();
        }
        if let Some(why) = &b.fallback_reason {
            writeln!(o, "  direct search: {why}").unwrap();
        }
        for s in &b.solutions {
            let k = match (&s.k, s.k_admissible) {
                (Some(k), Some(false)) => format!(", k = {k} (not a divisor of det C / d0^2)"),
                (Some(k), _) => format!(", k = {k}"),
                _ => String::new(),
            };
            writeln!(o, "  {} via {}{k}", fmt_triple(&s.xyz), s.source).unwrap();
        }
        if b.solutions.is_empty() {
            writeln!(o, "  no solutions in the box").unwrap();
        }
    }
    writeln!(o).unwrap();
    writeln!(o, "{} canonical solution(s):", r.solutions.len()).unwrap();
    for s in &r.solutions {
        let check = match (&s.oracle_index, s.oracle_ok) {
            (Some(i), Some(true)) => format!("I = {i}, confirmed"),
            (Some(i), _) => format!("I = {i}, MISMATCH"),
            (None, _) => "oracle unavailable".into(),
        };
        writeln!(o, "  {}  {check}", fmt_triple(&s.xyz)).unwrap();
    }
    o
}

pub fn corpus(r: &CorpusOut) -> String {
    let mut o = String::new();
    writeln!(o, "family {}", r.family).unwrap();
    let width = r.instances.iter().map(|i| i.label.len()).max().unwrap_or(5).max(5);
    writeln!(o, "{:<width$}  {:<17}  {:<13}  {:<14}  polynomial", "case", "verdict", "oracle", "status").unwrap();
    for i in &r.instances {
        writeln!(o, "{:<width$}  {:<17}  {:<13}  {:<14}  {}", i.label, i.verdict, i.oracle, i.status, i.polynomial).unwrap();
    }
    let s = &r.summary;
    writeln!(
        o,
        "{} instances: {} match, {} mismatches, {} not applicable, {} errors",
        s.total, s.matches, s.mismatches, s.not_applicable, s.errors
    )
    .unwrap();
    o
}
