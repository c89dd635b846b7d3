//! Serializable report shapes. Big integers are decimal strings and field
//! order is fixed by declaration order.

use monogen::dedekind::{DedekindResult, SplittingType};
use monogen::monogenity::{FieldDisc, Irreducibility, MonogenityReport, PrimeLedger, Verdict};
use monogen::newton::{IndexValuation, LatticePoint, PhiReport, ResidualReport, Side};
use monogen::poly::ModPoly;
use monogen::quartic::{Branch, GeneratorReport, SolutionSource};
use monogen::SquarefreeStatus;
use num_bigint::BigInt;
use serde::Serialize;

pub const SCHEMA_ANALYZE: &str = "monogen.analyze/1";
pub const SCHEMA_DEDEKIND: &str = "monogen.dedekind/1";
pub const SCHEMA_POLYGON: &str = "monogen.polygon/1";
pub const SCHEMA_QUARTIC: &str = "monogen.quartic/1";
pub const SCHEMA_CORPUS: &str = "monogen.corpus/1";
pub const SCHEMA_ERROR: &str = "monogen.error/1";

fn s<T: ToString>(v: T) -> String {
    v.to_string()
}

pub fn triple(v: &[BigInt; 3]) -> [String; 3] {
    v.clone().map(s)
}

#[derive(Serialize)]
pub struct ErrorOut {
    pub schema: &'static str,
    pub error: String,
}

pub fn error_json(e: &anyhow::Error) -> String {
    serde_json::to_string_pretty(&ErrorOut { schema: SCHEMA_ERROR, error: format!("{e:#}") }).expect("serializable")
}

#[derive(Serialize, Clone, Copy)]
pub struct Valuation {
    pub kind: &'static str,
    pub value: u64,
}

impl From<IndexValuation> for Valuation {
    fn from(v: IndexValuation) -> Self {
        match v {
            IndexValuation::Exact(value) => Valuation { kind: "Exact", value },
            IndexValuation::LowerBound(value) => Valuation { kind: "LowerBound", value },
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}({})", self.kind, self.value)
    }
}

#[derive(Serialize)]
pub struct PrimePower {
    pub p: String,
    pub e: u32,
}

#[derive(Serialize)]
pub struct LedgerRow {
    pub p: String,
    pub disc_exponent: u32,
    pub method: String,
    pub nu_index: Valuation,
    pub splitting: Option<String>,
}

impl From<&PrimeLedger> for LedgerRow {
    fn from(r: &PrimeLedger) -> Self {
        LedgerRow {
            p: s(&r.p),
            disc_exponent: r.disc_exponent,
            method: s(r.method),
            nu_index: r.nu_index.into(),
            splitting: r.splitting.as_ref().map(SplittingType::to_string),
        }
    }
}

#[derive(Serialize)]
pub struct VerdictOut {
    pub kind: &'static str,
    /// Primes dividing the index, for NotMonogenicPoly.
    pub primes: Vec<String>,
    /// Unresolved points, for Inconclusive.
    pub reasons: Vec<String>,
}

impl From<&Verdict> for VerdictOut {
    fn from(v: &Verdict) -> Self {
        match v {
            Verdict::MonogenicPoly => VerdictOut { kind: "MonogenicPoly", primes: vec![], reasons: vec![] },
            Verdict::NotMonogenicPoly(ps) => {
                VerdictOut { kind: "NotMonogenicPoly", primes: ps.iter().map(s).collect(), reasons: vec![] }
            }
            Verdict::Inconclusive(rs) => VerdictOut { kind: "Inconclusive", primes: vec![], reasons: rs.clone() },
        }
    }
}

#[derive(Serialize)]
pub struct AnalyzeOut {
    pub schema: &'static str,
    pub polynomial: String,
    pub degree: usize,
    pub discriminant: String,
    pub disc_factors: Vec<PrimePower>,
    /// Unfactored part of |D(f)|, "1" when fully factored.
    pub disc_cofactor: String,
    pub cofactor_status: String,
    pub irreducibility: String,
    pub ledger: Vec<LedgerRow>,
    pub verdict: VerdictOut,
    pub index: Option<String>,
    pub field_discriminant: Option<String>,
    pub field_disc_unresolved: Vec<String>,
    pub common_index_divisors: Vec<String>,
    pub notes: Vec<String>,
}

pub fn squarefree_label(st: &SquarefreeStatus) -> String {
    match st {
        SquarefreeStatus::Squarefree => "Squarefree".into(),
        SquarefreeStatus::NotSquarefree(q) => format!("NotSquarefree({q})"),
        SquarefreeStatus::Unknown => "Unknown".into(),
    }
}

pub fn irreducibility_label(i: &Irreducibility) -> String {
    match i {
        Irreducibility::Certified(why) => format!("certified ({why})"),
        Irreducibility::Assumed => "assumed".into(),
    }
}

impl From<&MonogenityReport> for AnalyzeOut {
    fn from(r: &MonogenityReport) -> Self {
        let (field_discriminant, field_disc_unresolved) = match &r.field_disc {
            FieldDisc::Exact(d) => (Some(s(d)), vec![]),
            FieldDisc::Unknown(ps) => (None, ps.iter().map(s).collect()),
        };
        AnalyzeOut {
            schema: SCHEMA_ANALYZE,
            polynomial: s(&r.f),
            degree: r.degree(),
            discriminant: s(&r.disc.value),
            disc_factors: r.disc.factors.iter().map(|(p, e)| PrimePower { p: s(p), e: *e }).collect(),
            disc_cofactor: s(&r.disc.cofactor),
            cofactor_status: squarefree_label(&r.cofactor_status),
            irreducibility: irreducibility_label(&r.irreducibility),
            ledger: r.ledger.iter().map(LedgerRow::from).collect(),
            verdict: (&r.verdict).into(),
            index: r.index().map(s),
            field_discriminant,
            field_disc_unresolved,
            common_index_divisors: r.common_index_divisors.iter().map(s).collect(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct FactorOut {
    pub factor: String,
    pub multiplicity: u32,
}

#[derive(Serialize)]
pub struct DedekindOut {
    pub schema: &'static str,
    pub polynomial: String,
    pub p: String,
    pub factors_mod_p: Vec<FactorOut>,
    pub m_poly: String,
    pub divides_index: bool,
    pub witness: Option<String>,
    pub splitting: Option<String>,
}

impl DedekindOut {
    pub fn new(f: &monogen::IntPoly, factors: &[(ModPoly, u32)], r: &DedekindResult) -> Self {
        DedekindOut {
            schema: SCHEMA_DEDEKIND,
            polynomial: s(f),
            p: s(r.p),
            factors_mod_p: factors.iter().map(|(g, e)| FactorOut { factor: s(g), multiplicity: *e }).collect(),
            m_poly: s(&r.m_poly),
            divides_index: r.divides_index,
            witness: r.witness.as_ref().map(s),
            splitting: r.splitting.as_ref().map(s),
        }
    }
}

#[derive(Serialize, Clone, Copy)]
pub struct Point {
    pub i: u32,
    pub v: u32,
}

impl From<LatticePoint> for Point {
    fn from(p: LatticePoint) -> Self {
        Point { i: p.i, v: p.v }
    }
}

#[derive(Serialize)]
pub struct SideOut {
    pub start: Point,
    pub end: Point,
    pub slope: String,
    pub length: u32,
    pub height: u32,
    pub degree: u32,
    pub residual: String,
    pub residual_factors: Vec<FactorOut>,
    pub residual_squarefree: bool,
}

impl SideOut {
    fn new(side: &Side, rr: &ResidualReport) -> Self {
        SideOut {
            start: side.start.into(),
            end: side.end.into(),
            slope: side.slope(),
            length: side.length,
            height: side.height,
            degree: side.degree,
            residual: s(&rr.residual.poly),
            residual_factors: rr.factors.iter().map(|(g, e)| FactorOut { factor: s(g), multiplicity: *e }).collect(),
            residual_squarefree: rr.is_squarefree(),
        }
    }
}

#[derive(Serialize)]
pub struct PhiOut {
    pub phi: String,
    pub multiplicity: u32,
    pub points: Vec<Point>,
    pub vertices: Vec<Point>,
    pub sides: Vec<SideOut>,
    pub phi_index: u64,
    pub regular: bool,
}

impl From<&PhiReport> for PhiOut {
    fn from(r: &PhiReport) -> Self {
        PhiOut {
            phi: s(r.phi()),
            multiplicity: r.multiplicity,
            points: r.points.iter().map(|&p| p.into()).collect(),
            vertices: r.polygon.vertices().into_iter().map(Point::from).collect(),
            sides: r.polygon.sides.iter().zip(&r.residuals).map(|(sd, rr)| SideOut::new(sd, rr)).collect(),
            phi_index: r.phi_index,
            regular: r.regular,
        }
    }
}

#[derive(Serialize)]
pub struct PolygonOut {
    pub schema: &'static str,
    pub polynomial: String,
    pub p: String,
    pub phis: Vec<PhiOut>,
    /// Ore's valuation of the index; absent when a single phi was given.
    pub index_valuation: Option<Valuation>,
    pub splitting: Option<String>,
    pub regular: bool,
}

#[derive(Serialize)]
pub struct BoundsOut {
    pub cubic: u64,
    pub pq: u64,
    pub xyz: u64,
    pub q0: u64,
}

#[derive(Serialize)]
pub struct BranchSolution {
    pub xyz: [String; 3],
    pub source: &'static str,
    pub k: Option<String>,
    pub k_admissible: Option<bool>,
}

#[derive(Serialize)]
pub struct BranchOut {
    pub u: String,
    pub v: String,
    pub q0: String,
    pub base: Option<[String; 3]>,
    pub c: Option<[String; 5]>,
    pub det: Option<String>,
    pub d0: Option<String>,
    pub f1: Option<String>,
    pub f2: Option<String>,
    pub f1_reducible: Option<bool>,
    pub f2_reducible: Option<bool>,
    pub fallback_reason: Option<String>,
    pub solutions: Vec<BranchSolution>,
}

fn source_label(src: SolutionSource) -> &'static str {
    match src {
        SolutionSource::Thue => "Thue",
        SolutionSource::BasePoint => "BasePoint",
        SolutionSource::Direct => "Direct",
    }
}

impl From<&Branch> for BranchOut {
    fn from(b: &Branch) -> Self {
        let par = b.parametrization.as_ref();
        let thue = b.thue.as_ref();
        BranchOut {
            u: s(&b.u),
            v: s(&b.v),
            q0: s(&b.q0),
            base: b.base.as_ref().map(triple),
            c: par.map(|p| p.c.clone().map(s)),
            det: par.map(|p| s(&p.det)),
            d0: par.map(|p| s(&p.d0)),
            f1: thue.map(|t| t.f1.to_string_vars("p", "q")),
            f2: thue.map(|t| t.f2.to_string_vars("p", "q")),
            f1_reducible: thue.and_then(|t| t.f1_reducible),
            f2_reducible: thue.and_then(|t| t.f2_reducible),
            fallback_reason: b.fallback_reason.clone(),
            solutions: b
                .solutions
                .iter()
                .map(|sol| BranchSolution {
                    xyz: triple(&sol.xyz),
                    source: source_label(sol.source),
                    k: sol.k.as_ref().map(s),
                    k_admissible: sol.k_admissible,
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SolutionOut {
    pub xyz: [String; 3],
    /// Index of `(x xi + y xi^2 + z xi^3) / d` from the discriminant oracle.
    pub oracle_index: Option<String>,
    /// Whether the oracle index equals m; absent without an exact D_K.
    pub oracle_ok: Option<bool>,
}

#[derive(Serialize)]
pub struct QuarticOut {
    pub schema: &'static str,
    pub polynomial: String,
    pub d: String,
    pub n_xi: String,
    pub m: String,
    pub i_m: String,
    pub field_discriminant: Option<String>,
    pub bounds: BoundsOut,
    pub cubic: String,
    pub cubic_reducible: Option<bool>,
    pub q1: String,
    pub q2: String,
    pub branches: Vec<BranchOut>,
    pub solutions: Vec<SolutionOut>,
}

impl QuarticOut {
    pub fn new(r: &GeneratorReport, field_disc: Option<&BigInt>, solutions: Vec<SolutionOut>) -> Self {
        let st = &r.setup;
        QuarticOut {
            schema: SCHEMA_QUARTIC,
            polynomial: s(&st.f),
            d: s(&st.d),
            n_xi: s(&st.n_xi),
            m: s(&st.m),
            i_m: s(&st.i_m),
            field_discriminant: field_disc.map(s),
            bounds: BoundsOut { cubic: r.bounds.cubic, pq: r.bounds.pq, xyz: r.bounds.xyz, q0: r.bounds.q0 },
            cubic: s(&r.cubic),
            cubic_reducible: r.cubic_reducible,
            q1: s(&r.q1),
            q2: s(&r.q2),
            branches: r.branches.iter().map(BranchOut::from).collect(),
            solutions,
        }
    }
}

#[derive(Serialize)]
pub struct InstanceOut {
    pub label: String,
    pub polynomial: String,
    pub verdict: String,
    pub oracle: &'static str,
    /// "match", "mismatch", "not-applicable" or "error".
    pub status: &'static str,
    pub detail: Option<String>,
}

#[derive(Serialize)]
pub struct CorpusSummary {
    pub total: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub not_applicable: usize,
    pub errors: usize,
}

#[derive(Serialize)]
pub struct CorpusOut {
    pub schema: &'static str,
    pub family: String,
    pub instances: Vec<InstanceOut>,
    pub summary: CorpusSummary,
}
