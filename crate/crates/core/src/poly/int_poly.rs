use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

/// Dense univariate polynomial over Z, coefficients in ascending degree.
///
/// The stored sequence never has a trailing zero; the zero polynomial is the
/// empty sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::from_i64s(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact division of every coefficient by `d`; `None` if some
    /// coefficient is not divisible.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntPoly::new(out))
    }

    /// gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Euclidean division by a monic divisor.
    pub fn divrem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly), PolyError> {
        if !divisor.is_monic() {
            return Err(PolyError::NotMonic);
        }
        let dd = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// phi-adic expansion `f = sum a_i * phi^i` with `deg a_i < deg phi`.
    pub fn phi_expansion(&self, phi: &IntPoly) -> Result<Vec<IntPoly>, PolyError> {
        if !phi.is_monic() {
            return Err(PolyError::NotMonic);
        }
        if phi.degree() == Some(0) {
            return Err(PolyError::DegreeTooSmall { needed: 1, got: 0 });
        }
        let mut digits = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let (q, r) = cur.divrem_monic(phi)?;
            digits.push(r);
            cur = q;
        }
        Ok(digits)
    }

    /// Inverse of [`IntPoly::phi_expansion`].
    pub fn from_phi_expansion(digits: &[IntPoly], phi: &IntPoly) -> IntPoly {
        digits
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, a| acc.mul(phi).add(a))
    }

    /// Composition `self(inner(x))`.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, c| acc.mul(inner).add(&IntPoly::constant(c.clone())))
    }

    /// Renders with an arbitrary variable name, same rules as `Display`.
    pub fn to_string_var(&self, var: &str) -> String {
        let terms: Vec<(BigInt, usize)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), i))
            .collect();
        format_terms(&terms, var)
    }

    /// Coefficients as `i64` when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

/// Formats `(coefficient, exponent)` pairs in the given order: explicit
/// signs, unit coefficients elided, no `*`.
pub(crate) fn format_terms(terms: &[(BigInt, usize)], var: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, i)) in terms.iter().enumerate() {
        let mag = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let unit = mag.is_one();
        match i {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !unit {
                    out.push_str(&mag.to_string());
                }
                out.push_str(var);
                if *i > 1 {
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
    }
    out
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Resultant via the Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    if m == 0 {
        return f.coeffs[0].pow(n as u32);
    }
    if n == 0 {
        return g.coeffs[0].pow(m as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    // rows hold descending coefficients, shifted
    for r in 0..n {
        for (j, c) in f.coeffs.iter().rev().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in g.coeffs.iter().rev().enumerate() {
            mat[n + r][r + j] = c.clone();
        }
    }
    bareiss_determinant(mat)
}

/// `(-1)^(n(n-1)/2) * Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPoly) -> Result<BigInt, PolyError> {
    let n = f.degree().unwrap_or(0);
    if n < 2 {
        return Err(PolyError::DegreeTooSmall { needed: 2, got: n });
    }
    let res = resultant(f, &f.derivative());
    let lc = f.leading().unwrap();
    let d = res / lc;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&p(&[-5, 0, 1])).unwrap(), BigInt::from(20));
        assert_eq!(discriminant(&p(&[-1, -1, 0, 1])).unwrap(), BigInt::from(-23));
        assert_eq!(discriminant(&p(&[-2, 0, 0, 0, 1])).unwrap(), BigInt::from(-2048));
        assert!(matches!(discriminant(&p(&[1, 1])), Err(PolyError::DegreeTooSmall { .. })));
    }

    #[test]
    fn discriminant_binomial_closed_form() {
        // disc(x^n + a) = (-1)^(n(n-1)/2) n^n a^(n-1)
        for n in 2..=9u32 {
            for a in [-7i64, -3, -2, 1, 2, 5, 12] {
                let mut c = vec![0i64; n as usize + 1];
                c[0] = a;
                c[n as usize] = 1;
                let expected = BigInt::from(n).pow(n) * BigInt::from(a).pow(n - 1);
                let expected = if (n * (n - 1) / 2) % 2 == 1 { -expected } else { expected };
                assert_eq!(discriminant(&p(&c)).unwrap(), expected, "x^{n} + {a}");
            }
        }
    }

    #[test]
    fn discriminant_against_floating_roots() {
        // product of squared root differences for polynomials with real,
        // well separated roots
        let cases: [&[i64]; 3] = [&[-6, 11, -6, 1], &[24, -50, 35, -10, 1], &[-2, -1, 2, 1]];
        for c in cases {
            let f = p(c);
            let deg = f.degree().unwrap();
            // roots 1..deg for the first two, {1,-1,-2} for the third
            let roots: Vec<f64> = match deg {
                3 if c[0] == -6 => vec![1.0, 2.0, 3.0],
                4 => vec![1.0, 2.0, 3.0, 4.0],
                _ => vec![1.0, -1.0, -2.0],
            };
            let mut prod = 1.0;
            for i in 0..roots.len() {
                for j in i + 1..roots.len() {
                    prod *= (roots[i] - roots[j]).powi(2);
                }
            }
            let d = discriminant(&f).unwrap().to_f64().unwrap();
            assert!((d - prod).abs() < 1e-6, "{f}: {d} vs {prod}");
        }
    }

    #[test]
    fn phi_expansion_examples() {
        let e = p(&[-2, 0, 1]).phi_expansion(&p(&[0, 1])).unwrap();
        assert_eq!(e, vec![p(&[-2]), p(&[]), p(&[1])]);
        let e = p(&[-5, 0, 1]).phi_expansion(&p(&[1, 1])).unwrap();
        assert_eq!(e, vec![p(&[-4]), p(&[-2]), p(&[1])]);
        let e = p(&[-8, -2, -1, 1]).phi_expansion(&p(&[0, 1])).unwrap();
        assert_eq!(e, vec![p(&[-8]), p(&[-2]), p(&[-1]), p(&[1])]);
        assert_eq!(p(&[1, 2]).phi_expansion(&p(&[1, 2])), Err(PolyError::NotMonic));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-8, -2, -1, 1]).to_string(), "x^3 - x^2 - 2x - 8");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[1, 0, -3]).to_string(), "-3x^2 + 1");
        assert_eq!(p(&[1, 1, 1]).to_string_var("y"), "y^2 + y + 1");
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m: Vec<Vec<BigInt>> = [[2, -1, 3], [0, 4, 5], [1, 0, -2]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        // 2(-8-0) - (-1)(0-5) + 3(0-4) = -16 - 5 - 12 = -33
        assert_eq!(bareiss_determinant(m), BigInt::from(-33));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
            prop::collection::vec(-30i64..=30, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
        }

        fn arb_monic(max_deg: usize) -> impl Strategy<Value = IntPoly> {
            prop::collection::vec(-10i64..=10, 1..=max_deg).prop_map(|mut c| {
                c.push(1);
                IntPoly::from_i64s(&c)
            })
        }

        proptest! {
            #[test]
            fn expansion_reassembles(f in arb_poly(9), phi in arb_monic(3)) {
                let digits = f.phi_expansion(&phi).unwrap();
                let dphi = phi.degree().unwrap();
                for a in &digits {
                    prop_assert!(a.degree().is_none_or(|d| d < dphi));
                }
                prop_assert_eq!(IntPoly::from_phi_expansion(&digits, &phi), f);
            }

            #[test]
            fn divrem_identity(f in arb_poly(8), g in arb_monic(4)) {
                let (q, r) = f.divrem_monic(&g).unwrap();
                prop_assert_eq!(q.mul(&g).add(&r), f);
            }

            #[test]
            fn discriminant_of_product_vanishes_with_repeated_factor(g in arb_monic(3)) {
                prop_assume!(g.degree().unwrap() >= 1);
                let f = g.mul(&g);
                prop_assert_eq!(discriminant(&f).unwrap(), BigInt::zero());
            }
        }
    }
}
