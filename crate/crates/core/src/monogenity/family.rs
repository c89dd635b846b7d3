//! Closed-form monogenity results for a few polynomial families, used to
//! cross-check `analyze`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{radical, squarefree_status, Effort, SquarefreeStatus};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `x^(2^k 3^l) - m`, m squarefree (El Fadil and Najim).
    BinomialElFadilNajim { k: u32, l: u32, m: i64 },
    /// `x^n + A x^m + B` (Jones and White).
    TrinomialJonesWhite { n: u32, m: u32, a: i64, b: i64 },
    /// `x^n - x - 1` (Jhorar and Khanduja).
    XnMinusXMinus1 { n: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    /// The polynomial's root generates a power integral basis.
    Monogenic,
    /// The polynomial is not monogenic. For the binomial family the field
    /// itself is not monogenic.
    NotMonogenic,
    NotApplicable,
}

impl Family {
    pub fn polynomial(&self) -> IntPoly {
        match *self {
            Family::BinomialElFadilNajim { k, l, m } => {
                let n = 2usize.pow(k) * 3usize.pow(l);
                IntPoly::monomial(BigInt::from(1), n).sub(&IntPoly::constant(BigInt::from(m)))
            }
            Family::TrinomialJonesWhite { n, m, a, b } => IntPoly::monomial(BigInt::from(1), n as usize)
                .add(&IntPoly::monomial(BigInt::from(a), m as usize))
                .add(&IntPoly::constant(BigInt::from(b))),
            Family::XnMinusXMinus1 { n } => {
                IntPoly::monomial(BigInt::from(1), n as usize).sub(&IntPoly::from_i64s(&[1, 1]))
            }
        }
    }
}

/// `|D(x^n - x - 1)|`, which is `n^n + (-1)^n (n-1)^(n-1)`.
pub fn xn_minus_x_minus_1_abs_disc(n: u32) -> BigInt {
    let nn = BigInt::from(n).pow(n);
    let mm = BigInt::from(n - 1).pow(n - 1);
    if n.is_multiple_of(2) {
        nn + mm
    } else {
        nn - mm
    }
}

fn is_squarefree(n: &BigInt, effort: &Effort) -> Option<bool> {
    if n.is_zero() {
        return Some(false);
    }
    match squarefree_status(n, effort) {
        SquarefreeStatus::Squarefree => Some(true),
        SquarefreeStatus::NotSquarefree(_) => Some(false),
        SquarefreeStatus::Unknown => None,
    }
}

pub fn family_oracle(family: &Family, effort: &Effort) -> Expected {
    match *family {
        Family::BinomialElFadilNajim { k, l, m } => {
            if k == 0 || l == 0 || m.abs() < 2 || is_squarefree(&BigInt::from(m), effort) != Some(true) {
                return Expected::NotApplicable;
            }
            let m4 = m.rem_euclid(4);
            let m9 = m.rem_euclid(9);
            if m4 != 1 && m9 != 1 && m9 != 8 {
                Expected::Monogenic
            } else if m4 == 1 || m9 == 1 || (k == 2 && m9 == 8) {
                Expected::NotMonogenic
            } else {
                Expected::NotApplicable
            }
        }
        Family::TrinomialJonesWhite { n, m, a, b } => {
            if n < 2 || m == 0 || m >= n || n % m != 0 || a <= 0 || b <= 0 {
                return Expected::NotApplicable;
            }
            let g = a.gcd(&b);
            if g <= 1 {
                return Expected::NotApplicable;
            }
            let t = n / m;
            let num = BigInt::from(t).pow(t) * BigInt::from(b).pow(t - 1)
                + BigInt::from(1 - t as i64).pow(t - 1) * BigInt::from(a).pow(t);
            let den = BigInt::from(g).pow(t - 1);
            if !num.is_multiple_of(&den) {
                return Expected::NotApplicable;
            }
            let d = (num / den).abs();
            let kappa = radical(m as u64) as i64;
            let ok = is_squarefree(&BigInt::from(b), effort) == Some(true)
                && is_squarefree(&d, effort) == Some(true)
                && g % kappa == 0;
            if ok {
                Expected::Monogenic
            } else {
                Expected::NotApplicable
            }
        }
        Family::XnMinusXMinus1 { n } => {
            if n < 2 {
                return Expected::NotApplicable;
            }
            match is_squarefree(&xn_minus_x_minus_1_abs_disc(n), effort) {
                Some(true) => Expected::Monogenic,
                Some(false) => Expected::NotMonogenic,
                None => Expected::NotApplicable,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::discriminant;

    #[test]
    fn binomial_examples() {
        let e = Effort::default();
        let fam = |m| Family::BinomialElFadilNajim { k: 2, l: 1, m };
        assert_eq!(family_oracle(&fam(2), &e), Expected::Monogenic);
        assert_eq!(family_oracle(&fam(5), &e), Expected::NotMonogenic);
        assert_eq!(family_oracle(&fam(-1), &e), Expected::NotApplicable);
        assert_eq!(family_oracle(&fam(12), &e), Expected::NotApplicable);
        // m = 17 = -1 mod 9 with k = 1 is not covered
        let k1 = Family::BinomialElFadilNajim { k: 1, l: 1, m: 17 };
        assert_eq!(family_oracle(&k1, &e), Expected::NotMonogenic); // 17 = 1 mod 4
        let k1 = Family::BinomialElFadilNajim { k: 1, l: 1, m: 35 };
        assert_eq!(family_oracle(&k1, &e), Expected::NotApplicable);
        assert_eq!(fam(2).polynomial().to_string(), "x^12 - 2");
    }

    #[test]
    fn jones_white_example() {
        let fam = Family::TrinomialJonesWhite { n: 6, m: 2, a: 2, b: 2 };
        assert_eq!(family_oracle(&fam, &Effort::default()), Expected::Monogenic);
        assert_eq!(fam.polynomial().to_string(), "x^6 + 2x^2 + 2");
        let coprime = Family::TrinomialJonesWhite { n: 6, m: 2, a: 3, b: 2 };
        assert_eq!(family_oracle(&coprime, &Effort::default()), Expected::NotApplicable);
    }

    #[test]
    fn xn_family_discriminant() {
        for n in 2..12u32 {
            let f = Family::XnMinusXMinus1 { n }.polynomial();
            assert_eq!(discriminant(&f).unwrap().abs(), xn_minus_x_minus_1_abs_disc(n), "n = {n}");
        }
        assert_eq!(family_oracle(&Family::XnMinusXMinus1 { n: 5 }, &Effort::default()), Expected::Monogenic);
        assert_eq!(xn_minus_x_minus_1_abs_disc(5), BigInt::from(2869));
    }
}
