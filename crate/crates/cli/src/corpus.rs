//! Family sweeps checked against the closed-form oracles.

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use monogen::monogenity::{analyze, family_oracle, Expected, Family, Verdict};
use monogen::Effort;
use rayon::prelude::*;

use crate::dto::{CorpusOut, CorpusSummary, InstanceOut, SCHEMA_CORPUS};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyName {
    /// x^n - x - 1 over a range of n.
    #[value(name = "xn-x-1")]
    XnMinusXMinus1,
    /// x^12 - m over a range of m.
    #[value(name = "binomial12")]
    Binomial12,
    /// x^(2^k 3^l) - m over a range of m.
    #[value(name = "binomial")]
    Binomial,
    /// x^n + A x^exp + B over ranges of A and B.
    #[value(name = "jones-white")]
    JonesWhite,
}

impl FamilyName {
    pub fn label(self) -> &'static str {
        match self {
            FamilyName::XnMinusXMinus1 => "xn-x-1",
            FamilyName::Binomial12 => "binomial12",
            FamilyName::Binomial => "binomial",
            FamilyName::JonesWhite => "jones-white",
        }
    }
}

/// Inclusive range `a..b`; a single integer is a one-element range.
pub fn parse_range(text: &str) -> Result<(i64, i64)> {
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let a: i64 = a.trim().parse().with_context(|| format!("bad range start in {text:?}"))?;
    let b: i64 = b.trim().parse().with_context(|| format!("bad range end in {text:?}"))?;
    if a > b {
        bail!("empty range {text:?}");
    }
    if b - a > 100_000 {
        bail!("range {text:?} is too long");
    }
    Ok((a, b))
}

pub struct Sweep {
    pub family: FamilyName,
    pub n: Option<String>,
    pub m: Option<String>,
    pub k: u32,
    pub l: u32,
    pub exp: Option<u32>,
    pub a: Option<String>,
    pub b: Option<String>,
}

fn range_or(arg: &Option<String>, default: (i64, i64)) -> Result<(i64, i64)> {
    arg.as_deref().map(parse_range).unwrap_or(Ok(default))
}

/// Instances in sweep order.
pub fn instances(sw: &Sweep) -> Result<Vec<(String, Family)>> {
    let mut out = Vec::new();
    match sw.family {
        FamilyName::XnMinusXMinus1 => {
            let (a, b) = range_or(&sw.n, (2, 9))?;
            if a < 2 || b > 200 {
                bail!("n must lie in 2..200");
            }
            for n in a..=b {
                out.push((format!("n={n}"), Family::XnMinusXMinus1 { n: n as u32 }));
            }
        }
        FamilyName::Binomial12 | FamilyName::Binomial => {
            let (k, l) = if sw.family == FamilyName::Binomial12 { (2, 1) } else { (sw.k, sw.l) };
            if 2u64.pow(k.min(20)) * 3u64.pow(l.min(20)) > 216 {
                bail!("degree 2^k 3^l must be at most 216");
            }
            let (a, b) = range_or(&sw.m, (-50, 50))?;
            for m in a..=b {
                // the oracle needs m squarefree with |m| >= 2
                if m.abs() < 2 || !is_squarefree(m) {
                    continue;
                }
                out.push((format!("m={m}"), Family::BinomialElFadilNajim { k, l, m }));
            }
        }
        FamilyName::JonesWhite => {
            let (n0, n1) = range_or(&sw.n, (6, 6))?;
            let Some(exp) = sw.exp else {
                bail!("jones-white needs --exp");
            };
            let (a0, a1) = range_or(&sw.a, (1, 10))?;
            let (b0, b1) = range_or(&sw.b, (1, 10))?;
            if n0 < 2 || n1 > 60 {
                bail!("n must lie in 2..60");
            }
            for n in n0..=n1 {
                for a in a0..=a1 {
                    for b in b0..=b1 {
                        let fam = Family::TrinomialJonesWhite { n: n as u32, m: exp, a, b };
                        out.push((format!("n={n} A={a} B={b}"), fam));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn is_squarefree(m: i64) -> bool {
    let m = m.unsigned_abs();
    (2u64..).take_while(|p| p * p <= m).all(|p| !m.is_multiple_of(p * p))
}

fn expected_label(e: Expected) -> &'static str {
    match e {
        Expected::Monogenic => "Monogenic",
        Expected::NotMonogenic => "NotMonogenic",
        Expected::NotApplicable => "NotApplicable",
    }
}

fn run_one(label: String, fam: &Family, effort: &Effort) -> InstanceOut {
    let f = fam.polynomial();
    let expected = family_oracle(fam, effort);
    let (verdict, detail, agrees) = match analyze(&f, effort) {
        Ok(r) => {
            let agrees = matches!(
                (&r.verdict, expected),
                (Verdict::MonogenicPoly, Expected::Monogenic) | (Verdict::NotMonogenicPoly(_), Expected::NotMonogenic)
            );
            let detail = match &r.verdict {
                Verdict::NotMonogenicPoly(ps) => {
                    Some(format!("index primes {}", ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")))
                }
                Verdict::Inconclusive(rs) => Some(rs.join("; ")),
                Verdict::MonogenicPoly => None,
            };
            let kind = match r.verdict {
                Verdict::MonogenicPoly => "MonogenicPoly",
                Verdict::NotMonogenicPoly(_) => "NotMonogenicPoly",
                Verdict::Inconclusive(_) => "Inconclusive",
            };
            (kind.to_string(), detail, Some(agrees))
        }
        Err(e) => ("error".to_string(), Some(e.to_string()), None),
    };
    let status = match (expected, agrees) {
        (Expected::NotApplicable, None) => "error",
        (Expected::NotApplicable, Some(_)) => "not-applicable",
        (_, Some(true)) => "match",
        _ => "mismatch",
    };
    InstanceOut {
        label,
        polynomial: f.to_string(),
        verdict,
        oracle: expected_label(expected),
        status,
        detail,
    }
}

pub fn run(sw: &Sweep, effort: &Effort) -> Result<CorpusOut> {
    let list = instances(sw)?;
    // par_iter + collect keeps input order
    let results: Vec<InstanceOut> = list.into_par_iter().map(|(label, fam)| run_one(label, &fam, effort)).collect();
    let count = |st: &str| results.iter().filter(|r| r.status == st).count();
    let summary = CorpusSummary {
        total: results.len(),
        matches: count("match"),
        mismatches: count("mismatch"),
        not_applicable: count("not-applicable"),
        errors: count("error"),
    };
    Ok(CorpusOut { schema: SCHEMA_CORPUS, family: sw.family.label().to_string(), instances: results, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..9").unwrap(), (2, 9));
        assert_eq!(parse_range("-50..50").unwrap(), (-50, 50));
        assert_eq!(parse_range("-5..=-1").unwrap(), (-5, -1));
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn binomial_instances_skip_non_squarefree() {
        let sw = Sweep { family: FamilyName::Binomial12, n: None, m: Some("-4..4".into()), k: 1, l: 1, exp: None, a: None, b: None };
        let labels: Vec<String> = instances(&sw).unwrap().into_iter().map(|(l, _)| l).collect();
        assert_eq!(labels, vec!["m=-3", "m=-2", "m=2", "m=3"]);
    }
}
