//! Principal phi-Newton polygons and Ore's index theorem.
//!
//! For each irreducible factor `phi` of `f mod p`, `f` is expanded
//! phi-adically, the points `(i, v_p(a_i))` are hulled, and the
//! negative-slope part of the lower hull is kept. Each side carries a
//! residual polynomial over `F_phi`. The phi-index counts lattice points
//! under the polygon; summed over all phi it bounds `v_p(ind f)` from below,
//! with equality when every residual polynomial is squarefree.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use thiserror::Error;

use crate::arith::valuation_unchecked;
use crate::dedekind::SplittingType;
use crate::poly::{factor_mod_p, factor_residual, IntPoly, ModPoly, PolyError, ResiduePoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NewtonError {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("side {0} does not belong to the polygon of this expansion")]
    SideMismatch(String),
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("{phi} divides f exactly; f is reducible")]
    PhiDividesF { phi: String },
    #[error("f is not p-regular at p = {0}; factorization shape not certified")]
    NotRegular(u64),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub i: u32,
    pub v: u32,
}

impl LatticePoint {
    pub fn new(i: u32, v: u32) -> Self {
        LatticePoint { i, v }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.v)
    }
}

/// One side of a principal polygon, with slope `-h/e` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub start: LatticePoint,
    pub end: LatticePoint,
    pub h: u32,
    pub e: u32,
    pub length: u32,
    pub height: u32,
    /// gcd(length, height), also `length / e`.
    pub degree: u32,
}

impl Side {
    fn between(start: LatticePoint, end: LatticePoint) -> Side {
        let length = end.i - start.i;
        let height = start.v - end.v;
        let degree = length.gcd(&height);
        Side {
            start,
            end,
            h: height / degree,
            e: length / degree,
            length,
            height,
            degree,
        }
    }

    pub fn slope(&self) -> String {
        format!("-{}/{}", self.h, self.e)
    }

    /// Ramification index of the primes attached to this side.
    pub fn ramification(&self) -> u32 {
        self.e
    }

    /// `floor` of the side's height above abscissa `x` (`x` within the side).
    fn floor_at(&self, x: u32) -> i64 {
        let num = self.start.v as i64 * self.e as i64 - (x - self.start.i) as i64 * self.h as i64;
        num.div_euclid(self.e as i64)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} slope {}", self.start, self.end, self.slope())
    }
}

/// Lower convex hull by monotone chain; only negative-slope sides are
/// returned. Collinear interior points are not vertices.
pub fn principal_polygon(points: &[LatticePoint]) -> Result<Vec<Side>, NewtonError> {
    if points.is_empty() {
        return Err(NewtonError::EmptyPointSet);
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup_by_key(|p| p.i); // keeps the lowest v for each i

    let cross = |o: &LatticePoint, a: &LatticePoint, b: &LatticePoint| -> i64 {
        (a.i as i64 - o.i as i64) * (b.v as i64 - o.v as i64)
            - (a.v as i64 - o.v as i64) * (b.i as i64 - o.i as i64)
    };
    let mut hull: Vec<LatticePoint> = Vec::new();
    for p in pts {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    Ok(hull
        .windows(2)
        .take_while(|w| w[1].v < w[0].v)
        .map(|w| Side::between(w[0], w[1]))
        .collect())
}

/// Number of points with positive integer coordinates on or under the
/// polygon, times `deg_phi`.
pub fn phi_index(sides: &[Side], deg_phi: u32) -> u64 {
    let Some(first) = sides.first() else {
        return 0;
    };
    let mut count: i64 = 0;
    if first.start.i >= 1 {
        count += first.start.v as i64;
    }
    for side in sides {
        for x in (side.start.i + 1).max(1)..=side.end.i {
            count += side.floor_at(x).max(0);
        }
    }
    count as u64 * deg_phi as u64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub phi: IntPoly,
    pub p: u64,
    pub sides: Vec<Side>,
}

impl NewtonPolygon {
    pub fn vertices(&self) -> Vec<LatticePoint> {
        let mut out: Vec<LatticePoint> = self.sides.iter().map(|s| s.start).collect();
        if let Some(last) = self.sides.last() {
            out.push(last.end);
        }
        out
    }

    /// Sum of side lengths; equals the multiplicity of `phi` in `f mod p`.
    pub fn length(&self) -> u32 {
        self.sides.iter().map(|s| s.length).sum()
    }
}

/// Residual polynomial `t_d y^d + ... + t_0` of one side, over `F_phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualPoly {
    pub side: Side,
    pub poly: ResiduePoly,
}

/// Points `(i, v_p(a_i))` of a phi-expansion, omitting zero digits.
pub fn expansion_points(expansion: &[IntPoly], p: u64) -> Vec<LatticePoint> {
    let pb = BigUint::from(p);
    expansion
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| {
            let v = valuation_unchecked(a.content().magnitude(), &pb);
            LatticePoint::new(i as u32, v)
        })
        .collect()
}

/// Residual polynomial of `side` computed from a phi-expansion.
pub fn residual_from_expansion(
    expansion: &[IntPoly],
    phi_bar: &ModPoly,
    side: &Side,
) -> Result<ResidualPoly, NewtonError> {
    let p = phi_bar.p();
    let field = phi_bar.residue_field()?;
    let points = expansion_points(expansion, p);
    let on_side = |pt: LatticePoint| points.contains(&pt);
    if !on_side(side.start) || !on_side(side.end) {
        return Err(NewtonError::SideMismatch(side.to_string()));
    }
    let pb = BigInt::from(p);
    let coeffs = (0..=side.degree)
        .map(|k| {
            let i = side.start.i + k * side.e;
            let v = side.start.v - k * side.h;
            let a = &expansion[i as usize];
            if a.is_zero() || !on_side(LatticePoint::new(i, v)) {
                return Vec::new();
            }
            let scaled = a.div_exact_scalar(&pb.pow(v)).expect("valuation is exact");
            field.reduce(ModPoly::from_int_poly(&scaled, p).coeffs())
        })
        .collect();
    let poly = ResiduePoly::new(field, coeffs);
    debug_assert_eq!(poly.degree(), Some(side.degree as usize));
    Ok(ResidualPoly { side: side.clone(), poly })
}

pub fn residual_polynomial(f: &IntPoly, phi: &IntPoly, p: u64, side: &Side) -> Result<ResidualPoly, NewtonError> {
    let expansion = f.phi_expansion(phi)?;
    residual_from_expansion(&expansion, &ModPoly::from_int_poly(phi, p), side)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    pub residual: ResidualPoly,
    pub factors: Vec<(ResiduePoly, u32)>,
}

impl ResidualReport {
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }
}

/// Everything Ore's theorem needs from one irreducible factor `phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    pub phi_bar: ModPoly,
    /// Multiplicity of `phi` in `f mod p`.
    pub multiplicity: u32,
    pub points: Vec<LatticePoint>,
    pub polygon: NewtonPolygon,
    pub residuals: Vec<ResidualReport>,
    pub phi_index: u64,
    pub regular: bool,
}

impl PhiReport {
    pub fn phi(&self) -> &IntPoly {
        &self.polygon.phi
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexValuation {
    Exact(u64),
    LowerBound(u64),
}

impl IndexValuation {
    pub fn value(&self) -> u64 {
        match self {
            IndexValuation::Exact(v) | IndexValuation::LowerBound(v) => *v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, IndexValuation::Exact(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreAnalysis {
    pub p: u64,
    pub reports: Vec<PhiReport>,
    pub verdict: IndexValuation,
}

impl OreAnalysis {
    pub fn is_regular(&self) -> bool {
        self.reports.iter().all(|r| r.regular)
    }

    /// One prime per irreducible residual factor, `e` from the side slope
    /// and `f = deg phi * deg psi`.
    pub fn splitting(&self) -> Result<SplittingType, NewtonError> {
        if !self.is_regular() {
            return Err(NewtonError::NotRegular(self.p));
        }
        let mut primes = Vec::new();
        for report in &self.reports {
            let deg_phi = report.phi_bar.degree().unwrap() as u32;
            if report.polygon.sides.is_empty() {
                // phi equals f: a single unramified prime
                debug_assert_eq!(report.multiplicity, 1);
                primes.push((1, deg_phi));
            }
            for rr in &report.residuals {
                for (psi, _) in &rr.factors {
                    primes.push((rr.residual.side.ramification(), deg_phi * psi.degree().unwrap() as u32));
                }
            }
        }
        Ok(SplittingType::new(primes))
    }
}

fn analyze_phi(f: &IntPoly, phi_bar: &ModPoly, multiplicity: u32) -> Result<PhiReport, NewtonError> {
    let p = phi_bar.p();
    let phi = phi_bar.lift();
    let expansion = f.phi_expansion(&phi)?;
    if expansion[0].is_zero() && multiplicity > 1 {
        return Err(NewtonError::PhiDividesF { phi: phi.to_string() });
    }
    let points = expansion_points(&expansion, p);
    let sides = principal_polygon(&points)?;
    let deg_phi = phi.degree().unwrap() as u32;
    let residuals = sides
        .iter()
        .map(|side| {
            let residual = residual_from_expansion(&expansion, phi_bar, side)?;
            let factors = factor_residual(&residual.poly.coeffs, phi_bar)?;
            Ok(ResidualReport { residual, factors })
        })
        .collect::<Result<Vec<_>, NewtonError>>()?;
    let regular = residuals.iter().all(ResidualReport::is_squarefree);
    let phi_index = phi_index(&sides, deg_phi);
    Ok(PhiReport {
        phi_bar: phi_bar.clone(),
        multiplicity,
        points,
        polygon: NewtonPolygon { phi, p, sides },
        residuals,
        phi_index,
        regular,
    })
}

/// Ore's theorem at `p`: `Exact(sum ind_phi)` when `f` is p-regular,
/// otherwise `LowerBound(sum ind_phi)`.
pub fn ore_analysis(f: &IntPoly, p: u64) -> Result<OreAnalysis, NewtonError> {
    if !f.is_monic() {
        return Err(NewtonError::NotMonic);
    }
    let reports = factor_mod_p(f, p)?
        .iter()
        .map(|(phi_bar, l)| analyze_phi(f, phi_bar, *l))
        .collect::<Result<Vec<_>, _>>()?;
    let total: u64 = reports.iter().map(|r| r.phi_index).sum();
    let verdict = if reports.iter().all(|r| r.regular) {
        IndexValuation::Exact(total)
    } else {
        IndexValuation::LowerBound(total)
    };
    Ok(OreAnalysis { p, reports, verdict })
}

/// Analysis for a single supplied `phi` (which must be monic and irreducible
/// mod p).
pub fn phi_report(f: &IntPoly, phi: &IntPoly, p: u64) -> Result<PhiReport, NewtonError> {
    if !f.is_monic() || !phi.is_monic() {
        return Err(NewtonError::NotMonic);
    }
    let phi_bar = ModPoly::from_int_poly(phi, p);
    if !phi_bar.is_irreducible() {
        return Err(PolyError::Reducible(phi_bar.to_string()).into());
    }
    let fbar = ModPoly::from_int_poly(f, p);
    let multiplicity = fbar
        .factor()
        .into_iter()
        .find(|(g, _)| *g == phi_bar)
        .map(|(_, l)| l)
        .unwrap_or(0);
    analyze_phi(f, &phi_bar, multiplicity)
}

pub fn ore_factorization(f: &IntPoly, p: u64) -> Result<SplittingType, NewtonError> {
    ore_analysis(f, p)?.splitting()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dedekind::dedekind_test;

    fn lp(v: &[(u32, u32)]) -> Vec<LatticePoint> {
        v.iter().map(|&(i, v)| LatticePoint::new(i, v)).collect()
    }

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn figure_points() -> Vec<LatticePoint> {
        // vertices plus points strictly above the hull
        lp(&[(0, 5), (1, 3), (2, 4), (3, 3), (4, 2), (5, 1), (6, 3), (7, 1), (8, 2), (9, 0)])
    }

    #[test]
    fn figure_polygon() {
        let sides = principal_polygon(&figure_points()).unwrap();
        let slopes: Vec<String> = sides.iter().map(Side::slope).collect();
        assert_eq!(slopes, vec!["-2/1", "-1/2", "-1/4"]);
        assert_eq!(sides[0].start, LatticePoint::new(0, 5));
        assert_eq!(sides[2].end, LatticePoint::new(9, 0));
        assert_eq!(phi_index(&sides, 1), 9);
        assert_eq!(phi_index(&sides, 3), 27);
    }

    #[test]
    fn eisenstein_shape() {
        for n in 1..8 {
            let sides = principal_polygon(&lp(&[(0, 1), (n, 0)])).unwrap();
            assert_eq!(sides.len(), 1);
            assert_eq!((sides[0].h, sides[0].e, sides[0].degree), (1, n, 1));
            assert_eq!(phi_index(&sides, 1), 0);
        }
    }

    #[test]
    fn collinear_side() {
        let sides = principal_polygon(&lp(&[(0, 2), (1, 1), (2, 0)])).unwrap();
        assert_eq!(sides.len(), 1);
        let s = &sides[0];
        assert_eq!((s.length, s.height, s.e, s.degree), (2, 2, 1, 2));
        assert_eq!(phi_index(&sides, 1), 1);
    }

    #[test]
    fn zero_and_positive_slopes_dropped() {
        let sides = principal_polygon(&lp(&[(0, 3), (1, 1), (2, 0), (3, 0), (4, 2)])).unwrap();
        assert_eq!(sides.len(), 2);
        assert_eq!(sides[1].end, LatticePoint::new(2, 0));
        assert!(principal_polygon(&lp(&[(0, 0), (1, 0)])).unwrap().is_empty());
        assert_eq!(principal_polygon(&[]), Err(NewtonError::EmptyPointSet));
    }

    #[test]
    fn residual_examples() {
        let side = principal_polygon(&lp(&[(0, 2), (1, 1), (2, 0)])).unwrap().remove(0);
        let r = residual_polynomial(&ip(&[-5, 0, 1]), &ip(&[1, 1]), 2, &side).unwrap();
        assert_eq!(r.poly.to_string(), "y^2 + y + 1");

        let side = principal_polygon(&lp(&[(0, 1), (2, 0)])).unwrap().remove(0);
        let r = residual_polynomial(&ip(&[-2, 0, 1]), &ip(&[0, 1]), 2, &side).unwrap();
        assert_eq!(r.poly.to_string(), "y + 1");
        assert_eq!((side.e, side.degree), (2, 1));

        // side not from this expansion
        let bogus = principal_polygon(&lp(&[(0, 3), (2, 0)])).unwrap().remove(0);
        assert!(matches!(
            residual_polynomial(&ip(&[-2, 0, 1]), &ip(&[0, 1]), 2, &bogus),
            Err(NewtonError::SideMismatch(_))
        ));
    }

    #[test]
    fn ore_examples() {
        let a = ore_analysis(&ip(&[-5, 0, 1]), 2).unwrap();
        assert_eq!(a.verdict, IndexValuation::Exact(1));
        assert_eq!(a.splitting().unwrap(), SplittingType::new(vec![(1, 2)]));

        let a = ore_analysis(&ip(&[-2, 0, 1]), 2).unwrap();
        assert_eq!(a.verdict, IndexValuation::Exact(0));
        assert_eq!(a.splitting().unwrap(), SplittingType::new(vec![(2, 1)]));

        let a = ore_analysis(&ip(&[-8, -2, -1, 1]), 2).unwrap();
        assert_eq!(a.verdict, IndexValuation::Exact(1));
        assert_eq!(a.reports.len(), 2);
        let slopes: Vec<String> = a.reports[0].polygon.sides.iter().map(Side::slope).collect();
        assert_eq!(slopes, vec!["-2/1", "-1/1"]);
        assert_eq!(a.reports[1].phi_index, 0);
        assert_eq!(a.splitting().unwrap(), SplittingType::new(vec![(1, 1); 3]));
    }

    #[test]
    fn non_regular_is_lower_bound() {
        // x^2 + 4 at 2: residual (y+1)^2 over F_2
        let a = ore_analysis(&ip(&[4, 0, 1]), 2).unwrap();
        assert!(!a.is_regular());
        assert_eq!(a.verdict, IndexValuation::LowerBound(1));
        assert_eq!(ore_factorization(&ip(&[4, 0, 1]), 2), Err(NewtonError::NotRegular(2)));
    }

    #[test]
    fn degree_two_phi() {
        // f = (x^2+x+1)^2 + 2 : phi = x^2+x+1 mod 2, Eisenstein-like in phi
        let phi = ip(&[1, 1, 1]);
        let f = phi.mul(&phi).add(&ip(&[2]));
        let a = ore_analysis(&f, 2).unwrap();
        assert_eq!(a.verdict, IndexValuation::Exact(0));
        assert_eq!(a.splitting().unwrap(), SplittingType::new(vec![(2, 2)]));
        // phi^2 + 4: one side of degree 2 with residual over F_4
        let g = phi.mul(&phi).add(&ip(&[4]));
        let a = ore_analysis(&g, 2).unwrap();
        assert_eq!(a.reports[0].phi_index, 2);
        assert_eq!(a.reports[0].residuals[0].residual.poly.degree(), Some(2));
    }

    #[test]
    fn phi_equal_to_f() {
        // x^2 + x + 1 is irreducible mod 2 and its own lift
        let a = ore_analysis(&ip(&[1, 1, 1]), 2).unwrap();
        assert_eq!(a.verdict, IndexValuation::Exact(0));
        assert_eq!(a.splitting().unwrap(), SplittingType::new(vec![(1, 2)]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_points() -> impl Strategy<Value = Vec<LatticePoint>> {
            (1u32..12, prop::collection::vec(0u32..10, 1..12)).prop_map(|(v0, rest)| {
                let mut pts = vec![LatticePoint::new(0, v0)];
                for (k, v) in rest.into_iter().enumerate() {
                    pts.push(LatticePoint::new(k as u32 + 1, v));
                }
                pts
            })
        }

        fn lattice_count_brute(points: &[LatticePoint], sides: &[Side]) -> u64 {
            // brute force: (x, y) counted iff y*e_k <= line_k(x) for the side over x
            let max_x = points.iter().map(|p| p.i).max().unwrap();
            let max_y = points.iter().map(|p| p.v).max().unwrap();
            let mut count = 0;
            for x in 1..=max_x {
                for y in 1..=max_y {
                    let below = sides.iter().any(|s| {
                        x >= s.start.i
                            && x <= s.end.i
                            && (y as i64) * (s.e as i64)
                                <= s.start.v as i64 * s.e as i64 - (x - s.start.i) as i64 * s.h as i64
                    });
                    if below {
                        count += 1;
                    }
                }
            }
            count
        }

        proptest! {
            #[test]
            fn hull_is_valid(points in arb_points()) {
                let sides = principal_polygon(&points).unwrap();
                for w in sides.windows(2) {
                    prop_assert_eq!(w[0].end, w[1].start);
                    // strictly increasing slopes: -h0/e0 < -h1/e1
                    prop_assert!((w[0].h as u64) * (w[1].e as u64) > (w[1].h as u64) * (w[0].e as u64));
                }
                for s in &sides {
                    prop_assert!(points.contains(&s.start) && points.contains(&s.end));
                    prop_assert_eq!(s.length, s.e * s.degree);
                    prop_assert_eq!(s.height, s.h * s.degree);
                    prop_assert_eq!(s.degree, s.length.gcd(&s.height));
                    for p in &points {
                        // on or above the side's line
                        let lhs = p.v as i64 * s.e as i64;
                        let rhs = s.start.v as i64 * s.e as i64 - (p.i as i64 - s.start.i as i64) * s.h as i64;
                        prop_assert!(lhs >= rhs);
                    }
                }
            }

            #[test]
            fn index_matches_brute_force(points in arb_points()) {
                let sides = principal_polygon(&points).unwrap();
                prop_assert_eq!(phi_index(&sides, 1), lattice_count_brute(&points, &sides));
            }

            #[test]
            fn index_invariant_under_points_above(points in arb_points(), extra in prop::collection::vec((0u32..12, 0u32..4), 0..6)) {
                let sides = principal_polygon(&points).unwrap();
                let base = phi_index(&sides, 1);
                let mut more = points.clone();
                for (i, lift) in extra {
                    // a point strictly above the hull at abscissa i
                    let top = points.iter().map(|p| p.v).max().unwrap();
                    more.push(LatticePoint::new(i, top + 1 + lift));
                }
                let sides2 = principal_polygon(&more).unwrap();
                prop_assert_eq!(phi_index(&sides2, 1), base);
            }

            #[test]
            fn eisenstein_polynomials(c in prop::collection::vec(-5i64..=5, 1..6), u in 1i64..5, pi in 0usize..6) {
                let p = [2i64, 3, 5, 7, 11, 13][pi];
                prop_assume!(u % p != 0);
                let mut coeffs: Vec<i64> = c.iter().map(|v| v * p).collect();
                coeffs[0] = u * p;
                coeffs.push(1);
                let f = ip(&coeffs);
                let n = f.degree().unwrap() as u32;
                let a = ore_analysis(&f, p as u64).unwrap();
                prop_assert_eq!(a.verdict, IndexValuation::Exact(0));
                prop_assert_eq!(a.splitting().unwrap(), SplittingType::new(vec![(n, 1)]));
            }

            #[test]
            fn regular_splitting_has_full_degree(c in prop::collection::vec(-20i64..=20, 2..7), pi in 0usize..6) {
                let p = [2u64, 3, 5, 7, 11, 13][pi];
                let mut coeffs = c;
                prop_assume!(coeffs[0] != 0);
                coeffs.push(1);
                let f = ip(&coeffs);
                let a = match ore_analysis(&f, p) {
                    Ok(a) => a,
                    Err(e) => {
                        // only a reducible f can have a repeated phi dividing it
                        let is_phi_divides = matches!(e, NewtonError::PhiDividesF { .. });
                        prop_assert!(is_phi_divides);
                        return Ok(());
                    }
                };
                if a.is_regular() {
                    prop_assert_eq!(a.splitting().unwrap().degree() as usize, f.degree().unwrap());
                    let d = dedekind_test(&f, p).unwrap();
                    prop_assert_eq!(a.verdict == IndexValuation::Exact(0), !d.divides_index);
                }
            }
        }
    }
}
