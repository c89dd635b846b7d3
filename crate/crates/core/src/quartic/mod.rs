//! Generators of power integral bases in quartic fields.
//!
//! For `f = x^4 + a1 x^3 + a2 x^2 + a3 x + a4` with root `xi`, an element
//! `alpha = (a + x xi + y xi^2 + z xi^3) / d` has index `m` iff some `(u, v)`
//! solves the resolvent cubic `F(u, v) = ±i_m` with `Q1(x,y,z) = u` and
//! `Q2(x,y,z) = v`, where `i_m = d^6 m / I(xi)`. Cubic and quartic Thue
//! equations are solved by bounded enumeration only.

mod forms;
mod oracle;
mod param;
mod search;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::arith::Effort;
use crate::monogenity::irreducibility_screen;
use crate::poly::IntPoly;

pub use forms::{BinaryForm, TernaryQuadraticForm};
pub use oracle::{charpoly, companion_matrix, index_of_element};
pub use param::{parametrize, quartic_thue_forms, ParamError, Parametrization, ThueForms};
pub use search::{q0_solution, solve_cubic_thue_small};

use search::exact_sqrt_i128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuarticError {
    #[error("polynomial must be a monic quartic")]
    NotQuartic,
    #[error("d, I(xi) and m must be positive")]
    NonPositive,
    #[error("i_m = d^6 m / I(xi) = {num}/{den} is not an integer")]
    NonIntegralIm { num: BigInt, den: BigInt },
    #[error("polynomial is reducible: {0}")]
    Reducible(String),
    #[error("element is not primitive (degenerate characteristic polynomial)")]
    NotPrimitive,
    #[error("index oracle: {0}")]
    Oracle(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticSetup {
    pub f: IntPoly,
    pub d: BigInt,
    pub n_xi: BigInt,
    pub m: BigInt,
    pub i_m: BigInt,
}

impl QuarticSetup {
    pub fn new(f: IntPoly, d: BigInt, n_xi: BigInt, m: BigInt) -> Result<Self, QuarticError> {
        if f.degree() != Some(4) || !f.is_monic() {
            return Err(QuarticError::NotQuartic);
        }
        if !d.is_positive() || !n_xi.is_positive() || !m.is_positive() {
            return Err(QuarticError::NonPositive);
        }
        let num = d.pow(6) * &m;
        if !num.is_multiple_of(&n_xi) {
            return Err(QuarticError::NonIntegralIm { num, den: n_xi });
        }
        let i_m = &num / &n_xi;
        Ok(QuarticSetup { f, d, n_xi, m, i_m })
    }

    /// `[a1, a2, a3, a4]`.
    pub fn a(&self) -> [BigInt; 4] {
        std::array::from_fn(|i| self.f.coeff(3 - i))
    }
}

/// `F(u,v) = u^3 - a2 u^2 v + (a1 a3 - 4 a4) u v^2 + (4 a2 a4 - a3^2 - a1^2 a4) v^3`.
pub fn resolvent_cubic(setup: &QuarticSetup) -> BinaryForm {
    let [a1, a2, a3, a4] = setup.a();
    BinaryForm::new(vec![
        BigInt::from(1),
        -&a2,
        &a1 * &a3 - &a4 * 4,
        &a2 * &a4 * 4 - &a3 * &a3 - &a1 * &a1 * &a4,
    ])
}

/// `(Q1, Q2)` with `Q1(1,0,0) = 1` and `Q2(1,0,0) = 0`.
pub fn quadratic_forms(setup: &QuarticSetup) -> (TernaryQuadraticForm, TernaryQuadraticForm) {
    let [a1, a2, a3, a4] = setup.a();
    let q1 = TernaryQuadraticForm::new([
        BigInt::from(1),
        -&a1,
        a2.clone(),
        &a1 * &a1 - &a2 * 2,
        &a3 - &a1 * &a2,
        -&a1 * &a3 + &a2 * &a2 + &a4,
    ]);
    let q2 = TernaryQuadraticForm::new([
        BigInt::zero(),
        BigInt::zero(),
        BigInt::from(1),
        BigInt::from(-1),
        -&a1,
        a2,
    ]);
    (q1, q2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// `max(|u|, |v|)` for the cubic equation.
    pub cubic: u64,
    /// `max(|p|, |q|)` for the quartic Thue enumeration.
    pub pq: u64,
    /// `max(|x|, |y|, |z|)` for the direct fallback.
    pub xyz: u64,
    /// Box for the zero of `Q0`.
    pub q0: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { cubic: 1000, pq: 1000, xyz: 100, q0: 100 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionSource {
    /// From `(p, q)` on the parametrized conic.
    Thue,
    /// A multiple of the base zero of `Q0`.
    BasePoint,
    /// Direct enumeration of the `(x, y, z)` box.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSolution {
    /// Canonical: first nonzero coordinate positive.
    pub xyz: [BigInt; 3],
    pub u: BigInt,
    pub v: BigInt,
    pub source: SolutionSource,
    /// `|k|` and whether it divides `det C / d0^2` (Thue solutions only).
    pub k: Option<BigInt>,
    pub k_admissible: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub u: BigInt,
    pub v: BigInt,
    pub q0: TernaryQuadraticForm,
    pub base: Option<[BigInt; 3]>,
    pub parametrization: Option<Parametrization>,
    pub thue: Option<ThueForms>,
    /// Why the parametrized search was not used, if it was not.
    pub fallback_reason: Option<String>,
    pub solutions: Vec<GeneratorSolution>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorReport {
    pub setup: QuarticSetup,
    pub bounds: Bounds,
    pub cubic: BinaryForm,
    pub cubic_reducible: Option<bool>,
    pub q1: TernaryQuadraticForm,
    pub q2: TernaryQuadraticForm,
    pub branches: Vec<Branch>,
    /// Deduplicated canonical triples, sorted.
    pub solutions: Vec<[BigInt; 3]>,
}

/// Sign-normalizes so the first nonzero coordinate is positive.
pub fn canonical(v: &[BigInt; 3]) -> [BigInt; 3] {
    match v.iter().find(|c| !c.is_zero()) {
        Some(c) if c.is_negative() => v.clone().map(|c| -c),
        _ => v.clone(),
    }
}

fn canonical_key(v: &[BigInt; 3]) -> (Vec<BigInt>, Vec<BigInt>) {
    // absolute values first, then signs
    (v.iter().map(|c| c.abs()).collect(), v.to_vec())
}

/// Coprime `(p, q)` with `q >= 0`, and `p > 0` when `q = 0`; each projective
/// point appears once up to sign.
fn coprime_pairs(bound: i64) -> impl ParallelIterator<Item = (i64, i64)> {
    (0..=bound).into_par_iter().flat_map_iter(move |q| {
        let lo = if q == 0 { 1 } else { -bound };
        (lo..=bound).filter(move |p| p.gcd(&q) == 1).map(move |p| (p, q))
    })
}

fn small_matrix(m: &[[BigInt; 3]; 3]) -> Option<[[i128; 3]; 3]> {
    let mut out = [[0i128; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = m[i][j].to_i64()? as i128;
        }
    }
    Some(out)
}

/// k with `Q1(V) = k^2 u` and `Q2(V) = k^2 v`, k > 0 dividing every entry.
fn k_for(values: (&BigInt, &BigInt), uv: (&BigInt, &BigInt), v: &[BigInt; 3]) -> Option<BigInt> {
    let (f1, f2) = values;
    let (u, w) = uv;
    let k2 = if !u.is_zero() {
        if !f1.is_multiple_of(u) {
            return None;
        }
        f1 / u
    } else {
        if !f1.is_zero() || !f2.is_multiple_of(w) {
            return None;
        }
        f2 / w
    };
    if !k2.is_positive() || &(&k2 * w) != f2 || &(&k2 * u) != f1 {
        return None;
    }
    let k = crate::arith::perfect_square_root(&k2)?;
    v.iter().all(|c| c.is_multiple_of(&k)).then_some(k)
}

fn thue_search(
    par: &Parametrization,
    forms: &ThueForms,
    u: &BigInt,
    v: &BigInt,
    bound: u64,
) -> Vec<(Vec<BigInt>, BigInt)> {
    let fast = match (small_matrix(&par.matrix), forms.f1.small_coeffs(), forms.f2.small_coeffs(), u.to_i128(), v.to_i128()) {
        (Some(m), Some(f1), Some(f2), Some(u), Some(v)) => Some((m, f1, f2, u, v)),
        _ => None,
    };
    coprime_pairs(bound as i64)
        .filter_map(|(p, q)| {
            if let Some((m, f1c, f2c, us, vs)) = &fast {
                let (pi, qi) = (p as i128, q as i128);
                let mono = [pi * pi, pi * qi, qi * qi];
                let ev = |c: &[i128]| -> Option<i128> {
                    // quartic form at (p, q) via the quadratic monomials
                    let mut acc: i128 = 0;
                    for (i, ci) in c.iter().enumerate() {
                        let term = ci.checked_mul(pi.checked_pow(4 - i as u32)?)?.checked_mul(qi.checked_pow(i as u32)?)?;
                        acc = acc.checked_add(term)?;
                    }
                    Some(acc)
                };
                if let (Some(a), Some(b)) = (ev(f1c), ev(f2c)) {
                    // quick rejection before any big integer work
                    let k2 = if *us != 0 {
                        if a % us != 0 {
                            return None;
                        }
                        a / us
                    } else {
                        if a != 0 || b % vs != 0 {
                            return None;
                        }
                        b / vs
                    };
                    if k2 <= 0 || k2.checked_mul(*vs) != Some(b) || k2.checked_mul(*us) != Some(a) {
                        return None;
                    }
                    let k = exact_sqrt_i128(k2)?;
                    let mut out = Vec::with_capacity(3);
                    for row in m {
                        let c = row[0] * mono[0] + row[1] * mono[1] + row[2] * mono[2];
                        if c % k != 0 {
                            return None;
                        }
                        out.push(BigInt::from(c / k));
                    }
                    return Some((out, BigInt::from(k)));
                }
            }
            let (pb, qb) = (BigInt::from(p), BigInt::from(q));
            let point = par.point(&pb, &qb);
            let a = forms.f1.eval(&pb, &qb);
            let b = forms.f2.eval(&pb, &qb);
            let k = k_for((&a, &b), (u, v), &point)?;
            Some((point.iter().map(|c| c / &k).collect(), k))
        })
        .collect()
}

fn direct_search(q1: &TernaryQuadraticForm, q2: &TernaryQuadraticForm, u: &BigInt, v: &BigInt, bound: u64) -> Vec<[BigInt; 3]> {
    let b = bound as i128;
    let (Some(us), Some(vs)) = (u.to_i128(), v.to_i128()) else {
        return Vec::new();
    };
    (-b..=b)
        .into_par_iter()
        .flat_map_iter(|x| {
            (-b..=b).flat_map(move |y| {
                (-b..=b).filter_map(move |z| {
                    let t = [x, y, z];
                    (q2.eval_i128(t) == Some(vs) && q1.eval_i128(t) == Some(us))
                        .then(|| [BigInt::from(x), BigInt::from(y), BigInt::from(z)])
                })
            })
        })
        .collect()
}

fn solve_branch(
    q1: &TernaryQuadraticForm,
    q2: &TernaryQuadraticForm,
    u: BigInt,
    v: BigInt,
    bounds: &Bounds,
    effort: &Effort,
) -> Branch {
    // Q0 = u Q2 - v Q1
    let q0 = q2.combine(&u, q1, &(-&v));
    let base = q0_solution(&q0, bounds.q0);
    let mut branch = Branch {
        u: u.clone(),
        v: v.clone(),
        q0: q0.clone(),
        base: base.clone(),
        parametrization: None,
        thue: None,
        fallback_reason: None,
        solutions: Vec::new(),
    };
    let param = match &base {
        None => Err(format!("no zero of Q0 with z != 0 in the box {}", bounds.q0)),
        Some(b) => parametrize(&q0, b, effort).map_err(|e| e.to_string()),
    };
    let mut found: Vec<GeneratorSolution> = Vec::new();
    match param {
        Ok(par) => {
            let forms = quartic_thue_forms(&par, q1, q2, effort);
            for (xyz, k) in thue_search(&par, &forms, &u, &v, bounds.pq) {
                let xyz: [BigInt; 3] = [xyz[0].clone(), xyz[1].clone(), xyz[2].clone()];
                found.push(GeneratorSolution {
                    xyz,
                    u: u.clone(),
                    v: v.clone(),
                    source: SolutionSource::Thue,
                    k_admissible: par.is_admissible(&k),
                    k: Some(k),
                });
            }
            // multiples s * base lie on the conic but are not reached by (p, q)
            let b = &par.base;
            let (b1, b2) = (q1.eval(b), q2.eval(b));
            if let Some(s) = multiple_of_base(&b1, &b2, &u, &v) {
                found.push(GeneratorSolution {
                    xyz: b.clone().map(|c| c * &s),
                    u: u.clone(),
                    v: v.clone(),
                    source: SolutionSource::BasePoint,
                    k: None,
                    k_admissible: None,
                });
            }
            branch.parametrization = Some(par);
            branch.thue = Some(forms);
        }
        Err(reason) => {
            for xyz in direct_search(q1, q2, &u, &v, bounds.xyz) {
                found.push(GeneratorSolution {
                    xyz,
                    u: u.clone(),
                    v: v.clone(),
                    source: SolutionSource::Direct,
                    k: None,
                    k_admissible: None,
                });
            }
            branch.fallback_reason = Some(reason);
        }
    }
    for s in &mut found {
        s.xyz = canonical(&s.xyz);
    }
    found.sort_by_key(|a| canonical_key(&a.xyz));
    found.dedup_by(|a, b| a.xyz == b.xyz);
    branch.solutions = found;
    branch
}

/// Integer `s > 0` with `s^2 (b1, b2) = (u, v)`.
fn multiple_of_base(b1: &BigInt, b2: &BigInt, u: &BigInt, v: &BigInt) -> Option<BigInt> {
    let pick = if !b1.is_zero() { (u, b1) } else { (v, b2) };
    if pick.1.is_zero() || !pick.0.is_multiple_of(pick.1) {
        return None;
    }
    let s2 = pick.0 / pick.1;
    if !s2.is_positive() || &(&s2 * b1) != u || &(&s2 * b2) != v {
        return None;
    }
    crate::arith::perfect_square_root(&s2)
}

/// Every `(x, y, z)` in the search boxes with `Q1 = u`, `Q2 = v` for some
/// small solution `(u, v)` of `F(u, v) = ±i_m`, up to sign.
pub fn find_generators(setup: &QuarticSetup, bounds: &Bounds, effort: &Effort) -> Result<GeneratorReport, QuarticError> {
    irreducibility_screen(&setup.f, effort).map_err(QuarticError::Reducible)?;
    let cubic = resolvent_cubic(setup);
    let cubic_reducible = cubic.reducibility(effort);
    let (q1, q2) = quadratic_forms(setup);
    let uv = solve_cubic_thue_small(&cubic, &setup.i_m, bounds.cubic);
    let branches: Vec<Branch> = uv
        .into_iter()
        .map(|(u, v)| solve_branch(&q1, &q2, BigInt::from(u), BigInt::from(v), bounds, effort))
        .collect();

    let mut solutions: Vec<[BigInt; 3]> = Vec::new();
    for br in &branches {
        for s in &br.solutions {
            // post hoc re-check of both equations and the cubic
            assert_eq!(q1.eval(&s.xyz), br.u, "Q1 mismatch for {:?}", s.xyz);
            assert_eq!(q2.eval(&s.xyz), br.v, "Q2 mismatch for {:?}", s.xyz);
            assert_eq!(cubic.eval(&br.u, &br.v).abs(), setup.i_m);
            solutions.push(s.xyz.clone());
        }
    }
    solutions.sort_by_key(canonical_key);
    solutions.dedup();
    Ok(GeneratorReport {
        setup: setup.clone(),
        bounds: *bounds,
        cubic,
        cubic_reducible,
        q1,
        q2,
        branches,
        solutions,
    })
}

/// `F(Q1(x,y,z), Q2(x,y,z))`, the index form up to the factor `I(xi) / d^6`.
pub fn index_form_value(setup: &QuarticSetup, xyz: &[BigInt; 3]) -> BigInt {
    let (q1, q2) = quadratic_forms(setup);
    resolvent_cubic(setup).eval(&q1.eval(xyz), &q2.eval(xyz))
}
