//! Rational parametrization of a conic `Q0 = 0` from one integer zero, and
//! the quartic Thue forms it induces.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::forms::{BinaryForm, TernaryQuadraticForm};
use crate::arith::{divisors, factorize, Effort};
use crate::poly::bareiss_determinant;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("base point is not a zero of the form")]
    NotAZero,
    #[error("base point must have z != 0")]
    ZeroZ,
    #[error("degenerate parametrization ({0})")]
    Degenerate(&'static str),
}

/// `x = r x0 + p, y = r y0 + q, z = r z0` turns `Q0 = 0` into
/// `r (c1 p + c2 q) = c3 p^2 + c4 pq + c5 q^2`; clearing `r` gives
/// `k (x, y, z) = C (p^2, pq, q^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    pub q0: TernaryQuadraticForm,
    /// Primitive base zero.
    pub base: [BigInt; 3],
    pub c: [BigInt; 5],
    /// Rows give x, y, z as forms in `p^2, pq, q^2`.
    pub matrix: [[BigInt; 3]; 3],
    pub d0: BigInt,
    pub det: BigInt,
    /// Positive divisors of `|det C| / d0^2`, when that number factors.
    pub admissible_k: Option<Vec<BigUint>>,
}

impl Parametrization {
    /// `C (p^2, pq, q^2)`.
    pub fn point(&self, p: &BigInt, q: &BigInt) -> [BigInt; 3] {
        let m = [p * p, p * q, q * q];
        std::array::from_fn(|i| (0..3).map(|j| &self.matrix[i][j] * &m[j]).sum())
    }

    pub fn is_admissible(&self, k: &BigInt) -> Option<bool> {
        let k = k.magnitude();
        self.admissible_k.as_ref().map(|ds| ds.binary_search(k).is_ok())
    }
}

pub fn parametrize(q0: &TernaryQuadraticForm, base: &[BigInt; 3], effort: &Effort) -> Result<Parametrization, ParamError> {
    if base[2].is_zero() {
        return Err(ParamError::ZeroZ);
    }
    if !q0.eval(base).is_zero() {
        return Err(ParamError::NotAZero);
    }
    let g = base.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let base: [BigInt; 3] = std::array::from_fn(|i| &base[i] / &g);

    let grad = q0.gradient(&base);
    let c1 = -&grad[0];
    let c2 = -&grad[1];
    let [a, b, c, ..] = &q0.coeffs;
    let (c3, c4, c5) = (a.clone(), b.clone(), c.clone());
    if c1.is_zero() && c2.is_zero() {
        return Err(ParamError::Degenerate("c1 = c2 = 0"));
    }
    let [x0, y0, z0] = &base;
    let matrix = [
        [x0 * &c3 + &c1, x0 * &c4 + &c2, x0 * &c5],
        [y0 * &c3, y0 * &c4 + &c1, y0 * &c5 + &c2],
        [z0 * &c3, z0 * &c4, z0 * &c5],
    ];
    let det = bareiss_determinant(matrix.iter().map(|r| r.to_vec()).collect());
    if det.is_zero() {
        return Err(ParamError::Degenerate("det C = 0"));
    }
    let d0 = matrix.iter().flatten().fold(BigInt::zero(), |g, e| g.gcd(e));
    let quotient = det.abs() / (&d0 * &d0);
    let admissible_k = divisors(&factorize(&quotient, effort));
    Ok(Parametrization {
        q0: q0.clone(),
        base,
        c: [c1, c2, c3, c4, c5],
        matrix,
        d0,
        det,
        admissible_k,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThueForms {
    pub f1: BinaryForm,
    pub f2: BinaryForm,
    /// `Some(true)` reducible, `Some(false)` irreducible, `None` undecided.
    pub f1_reducible: Option<bool>,
    pub f2_reducible: Option<bool>,
}

/// `F1 = Q1 ∘ C`, `F2 = Q2 ∘ C` as quartic forms in `(p, q)`; integer
/// solutions satisfy `F1 = k^2 u`, `F2 = k^2 v`.
pub fn quartic_thue_forms(
    param: &Parametrization,
    q1: &TernaryQuadraticForm,
    q2: &TernaryQuadraticForm,
    effort: &Effort,
) -> ThueForms {
    let f1 = q1.compose(&param.matrix);
    let f2 = q2.compose(&param.matrix);
    let f1_reducible = f1.reducibility(effort);
    let f2_reducible = f2.reducibility(effort);
    ThueForms { f1, f2, f1_reducible, f2_reducible }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn conic() -> TernaryQuadraticForm {
        TernaryQuadraticForm::from_i64s([0, 0, 1, -1, 0, 0])
    }

    #[test]
    fn conic_at_one_one_one() {
        let e = Effort::default();
        let par = parametrize(&conic(), &[b(1), b(1), b(1)], &e).unwrap();
        assert_eq!(par.c, [b(1), b(-2), b(0), b(0), b(1)]);
        assert_eq!(par.matrix, [[b(1), b(-2), b(1)], [b(0), b(1), b(-1)], [b(0), b(0), b(1)]]);
        assert_eq!(par.det, b(1));
        assert_eq!(par.admissible_k, Some(vec![BigUint::from(1u32)]));

        let scaled = parametrize(&conic(), &[b(2), b(2), b(2)], &e).unwrap();
        assert_eq!(scaled, par);

        let flipped = parametrize(&conic(), &[b(1), b(-1), b(1)], &e).unwrap();
        assert_eq!(flipped.c, [b(1), b(2), b(0), b(0), b(1)]);
        assert_eq!(flipped.matrix[0], [b(1), b(2), b(1)]);
    }

    #[test]
    fn thue_forms_for_x4_minus_2() {
        let e = Effort::default();
        let q1 = TernaryQuadraticForm::from_i64s([1, 0, 0, 0, 0, -2]);
        let par = parametrize(&conic(), &[b(1), b(1), b(1)], &e).unwrap();
        let forms = quartic_thue_forms(&par, &q1, &conic(), &e);
        // (p - q)^4 - 2 q^4
        assert_eq!(forms.f1, BinaryForm::from_i64s(&[1, -4, 6, -4, -1]));
        assert!(forms.f2.is_zero());
        assert_eq!(forms.f1.eval(&b(1), &b(0)), b(1));
        assert_eq!(forms.f1.eval(&b(2), &b(1)), b(-1));
        assert_eq!(par.point(&b(2), &b(1)), [b(1), b(1), b(1)]);
        assert_eq!(forms.f1_reducible, Some(false));
    }

    #[test]
    fn errors() {
        let e = Effort::default();
        assert_eq!(parametrize(&conic(), &[b(1), b(0), b(0)], &e), Err(ParamError::ZeroZ));
        assert_eq!(parametrize(&conic(), &[b(1), b(2), b(1)], &e), Err(ParamError::NotAZero));
        // xy is singular along the z axis
        let lines = TernaryQuadraticForm::from_i64s([0, 1, 0, 0, 0, 0]);
        assert!(matches!(parametrize(&lines, &[b(0), b(0), b(1)], &e), Err(ParamError::Degenerate(_))));
    }

    proptest! {
        #[test]
        fn substitution_vanishes(
            xy in prop::array::uniform2(-6i64..=6),
            z0 in prop::sample::select(vec![-1i64, 1]),
            scale in 1i64..4,
            extra in prop::array::uniform3(-4i64..=4),
            p in -20i64..=20, q in -20i64..=20,
        ) {
            // the z^2 coefficient is chosen so that Q0 vanishes at the base
            let [x0, y0] = xy;
            let mut c = [extra[0], extra[1], extra[2], 1, -1, 0];
            c[5] = -(c[0]*x0*x0 + c[1]*x0*y0 + c[2]*y0*y0 + c[3]*x0*z0 + c[4]*y0*z0) * z0 * z0;
            let base = [x0 * scale, y0 * scale, z0 * scale];
            let q0 = TernaryQuadraticForm::from_i64s(c);
            let bb = base.map(BigInt::from);
            let Ok(par) = parametrize(&q0, &bb, &Effort::default()) else { return Ok(()); };
            let v = par.point(&b(p), &b(q));
            prop_assert!(q0.eval(&v).is_zero());
            // and the symbolic composition is the zero form
            prop_assert!(q0.compose(&par.matrix).is_zero());
        }
    }
}
