//! Subcommand drivers. Each returns the rendered output and a status; any
//! error is an input error (exit 2).

use anyhow::{anyhow, bail, Context, Result};
use monogen::arith::is_prime_u64;
use monogen::dedekind::dedekind_test;
use monogen::monogenity::{analyze, FieldDisc, Verdict};
use monogen::newton::{ore_analysis, phi_report};
use monogen::poly::factor_mod_p;
use monogen::quartic::{find_generators, index_of_element, Bounds, QuarticSetup};
use monogen::{parse_poly, Effort, IntPoly};
use num_bigint::BigInt;
use serde::Serialize;

use crate::corpus::{self, Sweep};
use crate::dto::{self, AnalyzeOut, DedekindOut, PhiOut, PolygonOut, QuarticOut, SolutionOut, Valuation};
use crate::render;
use crate::{Cli, Command, Global, Status};

fn effort(g: &Global) -> Effort {
    let mut e = Effort::default();
    if let Some(t) = g.trial_limit {
        e.trial_limit = t;
    }
    if let Some(s) = g.seed {
        e.seed = s;
    }
    e
}

fn bounds(g: &Global) -> Bounds {
    let mut b = Bounds::default();
    if let Some(n) = g.bound {
        b.cubic = n;
        b.pq = n;
        b.xyz = n.min(100);
        b.q0 = n.min(100);
    }
    b
}

fn poly(text: &str) -> Result<IntPoly> {
    parse_poly(text).with_context(|| format!("cannot parse polynomial {text:?}"))
}

fn monic_poly(text: &str) -> Result<IntPoly> {
    let f = poly(text)?;
    if !f.is_monic() {
        bail!("{f} is not monic");
    }
    if f.degree().unwrap_or(0) < 2 {
        bail!("{f} must have degree at least 2");
    }
    Ok(f)
}

fn prime(p: u64) -> Result<u64> {
    if !is_prime_u64(p) {
        bail!("{p} is not a prime");
    }
    Ok(p)
}

fn emit<T: Serialize>(g: &Global, value: &T, text: impl FnOnce(&T) -> String) -> String {
    if g.json {
        let mut s = serde_json::to_string_pretty(value).expect("serializable");
        s.push('\n');
        s
    } else {
        text(value)
    }
}

pub fn run(cli: &Cli) -> Result<(String, Status)> {
    let g = &cli.global;
    let effort = effort(g);
    match &cli.command {
        Command::Analyze { poly } => {
            let f = monic_poly(poly)?;
            let report = analyze(&f, &effort)?;
            let status = if report.verdict.is_definite() { Status::Definite } else { Status::Inconclusive };
            Ok((emit(g, &AnalyzeOut::from(&report), render::analyze), status))
        }
        Command::Dedekind { poly, p } => {
            let f = monic_poly(poly)?;
            let p = prime(*p)?;
            let result = dedekind_test(&f, p)?;
            let factors = factor_mod_p(&f, p)?;
            Ok((emit(g, &DedekindOut::new(&f, &factors, &result), render::dedekind), Status::Definite))
        }
        Command::Polygon { poly, p, phi } => {
            let f = monic_poly(poly)?;
            let p = prime(*p)?;
            let out = match phi {
                Some(text) => {
                    let phi = self::poly(text)?;
                    if !phi.is_monic() || phi.degree().unwrap_or(0) < 1 {
                        bail!("phi = {phi} must be monic of positive degree");
                    }
                    let rep = phi_report(&f, &phi, p)?;
                    PolygonOut {
                        schema: dto::SCHEMA_POLYGON,
                        polynomial: f.to_string(),
                        p: p.to_string(),
                        regular: rep.regular,
                        phis: vec![PhiOut::from(&rep)],
                        index_valuation: None,
                        splitting: None,
                    }
                }
                None => {
                    let ore = ore_analysis(&f, p)?;
                    PolygonOut {
                        schema: dto::SCHEMA_POLYGON,
                        polynomial: f.to_string(),
                        p: p.to_string(),
                        regular: ore.is_regular(),
                        phis: ore.reports.iter().map(PhiOut::from).collect(),
                        index_valuation: Some(Valuation::from(ore.verdict)),
                        splitting: ore.splitting().ok().map(|s| s.to_string()),
                    }
                }
            };
            let status = if out.regular { Status::Definite } else { Status::Inconclusive };
            Ok((emit(g, &out, render::polygon), status))
        }
        Command::Quartic { poly, m, d, n_xi } => quartic(g, &effort, poly, *m, *d, *n_xi),
        Command::Corpus { family, n, m, k, l, exp, a, b } => {
            let sweep = Sweep {
                family: *family,
                n: n.clone(),
                m: m.clone(),
                k: *k,
                l: *l,
                exp: *exp,
                a: a.clone(),
                b: b.clone(),
            };
            let out = corpus::run(&sweep, &effort)?;
            let status = if out.summary.mismatches == 0 { Status::Definite } else { Status::Inconclusive };
            Ok((emit(g, &out, render::corpus), status))
        }
    }
}

fn quartic(g: &Global, effort: &Effort, text: &str, m: u64, d: u64, n_xi: Option<u64>) -> Result<(String, Status)> {
    let f = poly(text)?;
    if f.degree() != Some(4) || !f.is_monic() {
        bail!("{f} is not a monic quartic");
    }
    let report = analyze(&f, effort)?;
    let field_disc = match &report.field_disc {
        FieldDisc::Exact(dk) => Some(dk.clone()),
        FieldDisc::Unknown(_) => None,
    };
    let n_xi = match n_xi {
        Some(n) => BigInt::from(n),
        None => match report.index() {
            Some(ind) => BigInt::from(ind),
            None => {
                let why = match &report.verdict {
                    Verdict::Inconclusive(rs) => rs.join("; "),
                    _ => "index not fully resolved".into(),
                };
                return Err(anyhow!("ind(f) is not known exactly ({why}); pass --n-xi"));
            }
        },
    };
    let setup = QuarticSetup::new(f, BigInt::from(d), n_xi, BigInt::from(m))?;
    let gens = find_generators(&setup, &bounds(g), effort)?;
    let m_big = BigInt::from(m);
    let solutions: Vec<SolutionOut> = gens
        .solutions
        .iter()
        .map(|xyz| {
            let idx = field_disc.as_ref().map(|dk| index_of_element(&setup.f, xyz, &setup.d, dk));
            let (oracle_index, oracle_ok) = match idx {
                Some(Ok(i)) => {
                    let ok = BigInt::from(i.clone()) == m_big;
                    (Some(i.to_string()), Some(ok))
                }
                Some(Err(_)) => (None, Some(false)),
                None => (None, None),
            };
            SolutionOut { xyz: dto::triple(xyz), oracle_index, oracle_ok }
        })
        .collect();
    let all_ok = solutions.iter().all(|s| s.oracle_ok != Some(false));
    let out = QuarticOut::new(&gens, field_disc.as_ref(), solutions);
    let status = if all_ok { Status::Definite } else { Status::Inconclusive };
    Ok((emit(g, &out, render::quartic), status))
}
