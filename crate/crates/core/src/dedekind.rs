//! Dedekind's criterion and Dedekind's factorization theorem.
//!
//! With `f = prod phi_i^l_i (mod p)` and monic lifts `phi_i` (coefficients in
//! `[0, p)`), set `M = (f - prod phi_i^l_i) / p`. Then `p ∤ ind(f)` iff no
//! `phi_i` with `l_i >= 2` divides `M mod p`. In that case
//! `p Z_K = prod P_i^l_i` with residue degrees `deg phi_i`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{factor_mod_p, IntPoly, ModPoly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DedekindError {
    #[error("polynomial must be monic")]
    NotMonic,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Multiset of `(e, f)` = (ramification index, residue degree), one entry
/// per prime ideal above p, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplittingType(Vec<(u32, u32)>);

impl SplittingType {
    pub fn new(mut primes: Vec<(u32, u32)>) -> Self {
        primes.sort();
        SplittingType(primes)
    }

    pub fn primes(&self) -> &[(u32, u32)] {
        &self.0
    }

    /// `sum e_i * f_i`, which equals the field degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(e, f)| e * f).sum()
    }

    pub fn is_unramified(&self) -> bool {
        self.0.iter().all(|(e, _)| *e == 1)
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(e, fd)| format!("({e},{fd})")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedekindResult {
    pub p: u64,
    pub divides_index: bool,
    /// A repeated factor of `f mod p` that divides `M mod p`.
    pub witness: Option<ModPoly>,
    /// Present exactly when `divides_index` is false.
    pub splitting: Option<SplittingType>,
    /// `M(x)` as computed from the `[0, p)` lifts.
    pub m_poly: IntPoly,
}

pub fn dedekind_test(f: &IntPoly, p: u64) -> Result<DedekindResult, DedekindError> {
    if !f.is_monic() {
        return Err(DedekindError::NotMonic);
    }
    let factors = factor_mod_p(f, p)?;
    let product = factors
        .iter()
        .fold(IntPoly::one(), |acc, (phi, l)| acc.mul(&phi.lift().pow(*l)));
    let m_poly = f
        .sub(&product)
        .div_exact_scalar(&BigInt::from(p))
        .expect("f - prod phi_i^l_i vanishes mod p");
    let m_bar = ModPoly::from_int_poly(&m_poly, p);

    let witness = factors
        .iter()
        .find(|(phi, l)| *l >= 2 && phi.divides(&m_bar))
        .map(|(phi, _)| phi.clone());

    let splitting = match witness {
        Some(_) => None,
        None => Some(SplittingType::new(
            factors
                .iter()
                .map(|(phi, l)| (*l, phi.degree().unwrap() as u32))
                .collect(),
        )),
    };

    Ok(DedekindResult {
        p,
        divides_index: witness.is_some(),
        witness,
        splitting,
        m_poly,
    })
}
