//! Index of an element from its discriminant: `D(alpha) = I(alpha)^2 D_K`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::QuarticError;
use crate::arith::perfect_square_root;
use crate::poly::{discriminant, IntPoly};

type Matrix = Vec<Vec<BigInt>>;

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

/// Matrix of multiplication by `xi` on the basis `1, xi, ..., xi^(n-1)`
/// (column j is the image of `xi^j`).
pub fn companion_matrix(f: &IntPoly) -> Matrix {
    let n = f.degree().unwrap();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for j in 0..n {
        if j + 1 < n {
            m[j + 1][j] = BigInt::one();
        } else {
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = -f.coeff(i);
            }
        }
    }
    m
}

/// Characteristic polynomial `det(t I - M)` by Faddeev-LeVerrier; all
/// divisions are exact for integer matrices.
pub fn charpoly(m: &Matrix) -> IntPoly {
    let n = m.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = identity(n); // M_1 = I
    for k in 1..=n {
        let am = mat_mul(m, &mk);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let (c, r) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[n - k] = c.clone();
        mk = am;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c;
        }
    }
    IntPoly::new(coeffs)
}

/// `I(alpha)` for `alpha = (x xi + y xi^2 + z xi^3) / d`, given the exact
/// field discriminant.
pub fn index_of_element(f: &IntPoly, xyz: &[BigInt; 3], d: &BigInt, field_disc: &BigInt) -> Result<BigUint, QuarticError> {
    if f.degree() != Some(4) || !f.is_monic() {
        return Err(QuarticError::NotQuartic);
    }
    if d.is_zero() || field_disc.is_zero() {
        return Err(QuarticError::Oracle("d and D_K must be nonzero".into()));
    }
    let a = companion_matrix(f);
    let a2 = mat_mul(&a, &a);
    let a3 = mat_mul(&a2, &a);
    let m: Matrix = (0..4)
        .map(|i| (0..4).map(|j| &xyz[0] * &a[i][j] + &xyz[1] * &a2[i][j] + &xyz[2] * &a3[i][j]).collect())
        .collect();
    let chi = charpoly(&m);
    let disc_m = discriminant(&chi).map_err(|e| QuarticError::Oracle(e.to_string()))?;
    if disc_m.is_zero() {
        return Err(QuarticError::NotPrimitive);
    }
    // D(M / d) = D(M) / d^12
    let scale = d.pow(12);
    if !disc_m.is_multiple_of(&scale) {
        return Err(QuarticError::Oracle(format!("D(alpha) = {disc_m}/{scale} is not an integer")));
    }
    let disc_alpha = disc_m / scale;
    if !disc_alpha.is_multiple_of(field_disc) {
        return Err(QuarticError::Oracle(format!("D_K = {field_disc} does not divide D(alpha) = {disc_alpha}")));
    }
    let ratio = disc_alpha / field_disc;
    match perfect_square_root(&ratio) {
        Some(r) => Ok(r.abs().to_biguint().unwrap()),
        None => Err(QuarticError::Oracle(format!("D(alpha)/D_K = {ratio} is not a square"))),
    }
}
