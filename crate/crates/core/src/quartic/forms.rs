//! Binary forms and ternary quadratic forms with big integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::Effort;
use crate::monogenity::{irreducibility_screen, Irreducibility};
use crate::poly::IntPoly;

/// Homogeneous form in two variables. Coefficient `i` belongs to
/// `s^(deg - i) t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    pub coeffs: Vec<BigInt>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs a degree");
        BinaryForm { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        BinaryForm::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn eval(&self, s: &BigInt, t: &BigInt) -> BigInt {
        let n = self.degree() as u32;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * s.pow(n - i as u32) * t.pow(i as u32))
            .sum()
    }

    /// Coefficients as `i128`, when they fit.
    pub fn small_coeffs(&self) -> Option<Vec<i128>> {
        self.coeffs.iter().map(|c| c.to_i128()).collect()
    }

    /// Dehomogenization `F(x, 1)` as a polynomial in x.
    pub fn dehomogenize(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `Some(true)` when reducible over Q, `Some(false)` when certified
    /// irreducible, `None` when undecided.
    pub fn reducibility(&self, effort: &Effort) -> Option<bool> {
        if self.degree() <= 1 {
            return Some(false);
        }
        let content = self.content();
        if content.is_zero() {
            return Some(true);
        }
        if self.coeffs[0].is_zero() || self.coeffs[self.degree()].is_zero() {
            // divisible by t or by s
            return Some(true);
        }
        let primitive = IntPoly::new(self.coeffs.iter().rev().map(|c| c / &content).collect());
        match irreducibility_screen(&primitive, effort) {
            Err(_) => Some(true),
            Ok(Irreducibility::Certified(_)) => Some(false),
            Ok(Irreducibility::Assumed) => None,
        }
    }

    pub fn to_string_vars(&self, s: &str, t: &str) -> String {
        let n = self.degree();
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = monomial(&[(s, n - i), (t, i)]);
            push_term(&mut out, c, &mono);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_vars("u", "v"))
    }
}

fn monomial(parts: &[(&str, usize)]) -> String {
    let mut m = String::new();
    for &(var, e) in parts {
        match e {
            0 => {}
            1 => m.push_str(var),
            _ => m.push_str(&format!("{var}^{e}")),
        }
    }
    m
}

fn push_term(out: &mut String, c: &BigInt, mono: &str) {
    let neg = c.sign() == num_bigint::Sign::Minus;
    let mag = c.magnitude();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() || *mag != 1u32.into() {
        out.push_str(&mag.to_string());
    }
    out.push_str(mono);
}

/// Index of the `x_i x_j` coefficient in `[x^2, xy, y^2, xz, yz, z^2]`.
const PAIR: [[usize; 3]; 3] = [[0, 1, 3], [1, 2, 4], [3, 4, 5]];

/// Quadratic form in (x, y, z), coefficients ordered
/// `[x^2, xy, y^2, xz, yz, z^2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryQuadraticForm {
    pub coeffs: [BigInt; 6],
}

impl TernaryQuadraticForm {
    pub fn new(coeffs: [BigInt; 6]) -> Self {
        TernaryQuadraticForm { coeffs }
    }

    pub fn from_i64s(c: [i64; 6]) -> Self {
        TernaryQuadraticForm::new(c.map(BigInt::from))
    }

    pub fn eval(&self, v: &[BigInt; 3]) -> BigInt {
        let mut acc = BigInt::zero();
        for i in 0..3 {
            for j in i..3 {
                acc += &self.coeffs[PAIR[i][j]] * &v[i] * &v[j];
            }
        }
        acc
    }

    pub fn eval_i128(&self, v: [i128; 3]) -> Option<i128> {
        let mut acc: i128 = 0;
        for i in 0..3 {
            for j in i..3 {
                let c = self.coeffs[PAIR[i][j]].to_i128()?;
                let term = c.checked_mul(v[i])?.checked_mul(v[j])?;
                acc = acc.checked_add(term)?;
            }
        }
        Some(acc)
    }

    /// Gradient at `v`.
    pub fn gradient(&self, v: &[BigInt; 3]) -> [BigInt; 3] {
        std::array::from_fn(|i| {
            let mut g = BigInt::zero();
            for j in 0..3 {
                let c = &self.coeffs[PAIR[i][j]];
                g += if i == j { c * 2 * &v[j] } else { c * &v[j] };
            }
            g
        })
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: &BigInt, other: &TernaryQuadraticForm, b: &BigInt) -> TernaryQuadraticForm {
        TernaryQuadraticForm::new(std::array::from_fn(|i| a * &self.coeffs[i] + b * &other.coeffs[i]))
    }

    /// `self(V(s, t))` where each coordinate of `V` is a binary quadratic
    /// form given by a row `[c_1, c_2, c_3]` of `s^2, st, t^2`.
    pub fn compose(&self, rows: &[[BigInt; 3]; 3]) -> BinaryForm {
        let mut out = vec![BigInt::zero(); 5];
        for i in 0..3 {
            for j in i..3 {
                let c = &self.coeffs[PAIR[i][j]];
                if c.is_zero() {
                    continue;
                }
                for a in 0..3 {
                    for b in 0..3 {
                        out[a + b] += c * &rows[i][a] * &rows[j][b];
                    }
                }
            }
        }
        BinaryForm::new(out)
    }
}

impl fmt::Display for TernaryQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monos = ["x^2", "xy", "y^2", "xz", "yz", "z^2"];
        let mut out = String::new();
        for (c, m) in self.coeffs.iter().zip(monos) {
            if !c.is_zero() {
                push_term(&mut out, c, m);
            }
        }
        f.write_str(if out.is_empty() { "0" } else { &out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn display() {
        assert_eq!(BinaryForm::from_i64s(&[1, 0, 8, 0]).to_string(), "u^3 + 8uv^2");
        assert_eq!(BinaryForm::from_i64s(&[-1, 2, 0, 0, -3]).to_string_vars("p", "q"), "-p^4 + 2p^3q - 3q^4");
        assert_eq!(TernaryQuadraticForm::from_i64s([0, 0, 1, -1, 0, 0]).to_string(), "y^2 - xz");
    }

    #[test]
    fn reducibility() {
        let e = Effort::default();
        assert_eq!(BinaryForm::from_i64s(&[1, 0, 8, 0]).reducibility(&e), Some(true));
        assert_eq!(BinaryForm::from_i64s(&[1, 0, 0, -2]).reducibility(&e), Some(false));
        assert_eq!(BinaryForm::from_i64s(&[1, 0, 0, 0, -2]).reducibility(&e), Some(false));
        assert_eq!(BinaryForm::from_i64s(&[2, 0, -3, 0, 1]).reducibility(&e), Some(true));
    }

    #[test]
    fn gradient_of_conic() {
        let q = TernaryQuadraticForm::from_i64s([0, 0, 1, -1, 0, 0]);
        assert_eq!(q.gradient(&[b(1), b(1), b(1)]), [b(-1), b(2), b(-1)]);
    }

    proptest! {
        #[test]
        fn eval_matches_coefficients(c in prop::array::uniform6(-9i64..=9), v in prop::array::uniform3(-30i64..=30)) {
            let q = TernaryQuadraticForm::from_i64s(c);
            let (x, y, z) = (v[0], v[1], v[2]);
            let expect = c[0]*x*x + c[1]*x*y + c[2]*y*y + c[3]*x*z + c[4]*y*z + c[5]*z*z;
            prop_assert_eq!(q.eval(&v.map(BigInt::from)), b(expect));
            prop_assert_eq!(q.eval_i128([x as i128, y as i128, z as i128]), Some(expect as i128));
        }

        #[test]
        fn compose_matches_pointwise(
            c in prop::array::uniform6(-5i64..=5),
            rows in prop::array::uniform3(prop::array::uniform3(-4i64..=4)),
            s in -9i64..=9, t in -9i64..=9,
        ) {
            let q = TernaryQuadraticForm::from_i64s(c);
            let rows_b = rows.map(|r| r.map(BigInt::from));
            let form = q.compose(&rows_b);
            let v = rows.map(|r| b(r[0]*s*s + r[1]*s*t + r[2]*t*t));
            prop_assert_eq!(form.eval(&b(s), &b(t)), q.eval(&v));
        }
    }
}
