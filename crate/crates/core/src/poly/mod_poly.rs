use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ffpoly;
use super::field::{FiniteField, PrimeField, ResidueField};
use super::int_poly::format_terms;
use super::{IntPoly, PolyError};

/// Default seed for the Cantor-Zassenhaus splitting randomness. Factor
/// lists are sorted canonically, so the seed never shows in results.
pub const DEFAULT_SPLIT_SEED: u64 = 0x00c0_ffee;

/// Polynomial over F_p with residues in `[0, p)`, ascending degree, no
/// trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| c % p).collect();
        ModPoly { p, coeffs: ffpoly::trim(coeffs) }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let r = ((c % &pb) + &pb) % &pb;
                r.to_u64().unwrap()
            })
            .collect();
        ModPoly::new(p, coeffs)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p)
    }

    pub fn degree(&self) -> Option<usize> {
        ffpoly::degree(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Lift to Z[x] with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        ModPoly { p: self.p, coeffs: ffpoly::mul(&self.field(), &self.coeffs, &other.coeffs) }
    }

    pub fn pow(&self, e: u32) -> ModPoly {
        (0..e).fold(ModPoly::new(self.p, vec![1]), |acc, _| acc.mul(self))
    }

    pub fn divides(&self, other: &ModPoly) -> bool {
        ffpoly::rem(&self.field(), &other.coeffs, &self.coeffs).is_empty()
    }

    /// Monic irreducible factors with multiplicities, canonical order.
    pub fn factor(&self) -> Vec<(ModPoly, u32)> {
        self.factor_seeded(DEFAULT_SPLIT_SEED)
    }

    pub fn factor_seeded(&self, seed: u64) -> Vec<(ModPoly, u32)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        ffpoly::factor(&self.field(), &self.coeffs, &mut rng)
            .into_iter()
            .map(|(g, m)| (ModPoly { p: self.p, coeffs: g }, m))
            .collect()
    }

    pub fn is_irreducible(&self) -> bool {
        if self.degree().unwrap_or(0) == 0 {
            return false;
        }
        let f = self.field();
        let sqf = ffpoly::squarefree_decomposition(&f, &ffpoly::monic(&f, &self.coeffs));
        if sqf.len() != 1 || sqf[0].1 != 1 {
            return false;
        }
        let ddf = ffpoly::distinct_degree(&f, &sqf[0].0);
        ddf.len() == 1 && ddf[0].0 == self.degree().unwrap()
    }

    /// Residue field F_p[x]/(self); errors if `self` is not monic
    /// irreducible.
    pub fn residue_field(&self) -> Result<ResidueField, PolyError> {
        if !self.is_monic() || !self.is_irreducible() {
            return Err(PolyError::Reducible(self.to_string()));
        }
        Ok(ResidueField::new(self.p, self.coeffs.clone()))
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.lift().to_string())
    }
}

/// Polynomial in y over a residue field F_phi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResiduePoly {
    pub field: ResidueField,
    /// Ascending in y, no trailing zero.
    pub coeffs: Vec<Vec<u64>>,
}

impl ResiduePoly {
    pub fn new(field: ResidueField, coeffs: Vec<Vec<u64>>) -> Self {
        let coeffs = coeffs.iter().map(|c| field.reduce(c)).collect();
        let coeffs = ffpoly::normalize(&field, coeffs);
        ResiduePoly { field, coeffs }
    }

    pub fn degree(&self) -> Option<usize> {
        ffpoly::degree(&self.coeffs)
    }

    pub fn mul(&self, other: &ResiduePoly) -> ResiduePoly {
        ResiduePoly {
            field: self.field.clone(),
            coeffs: ffpoly::mul(&self.field, &self.coeffs, &other.coeffs),
        }
    }
}

impl fmt::Display for ResiduePoly {
    /// Over a prime field coefficients print as integers; over an extension
    /// each coefficient is a polynomial in x written in brackets.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            let terms: Vec<(BigInt, usize)> = self
                .coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_empty())
                .map(|(i, c)| (BigInt::from(c[0]), i))
                .collect();
            return f.write_str(&format_terms(&terms, "y"));
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_empty() {
                continue;
            }
            let coeff = ModPoly::new(self.field.characteristic(), c.clone());
            let mono = match i {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{i}"),
            };
            if c == &vec![1] && i > 0 {
                parts.push(mono);
            } else {
                parts.push(format!("[{coeff}]{mono}"));
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Factors a polynomial over F_phi into monic irreducibles.
///
/// `phi` is checked for irreducibility first.
pub fn factor_residual(g: &[Vec<u64>], phi: &ModPoly) -> Result<Vec<(ResiduePoly, u32)>, PolyError> {
    let field = phi.residue_field()?;
    let g = ResiduePoly::new(field.clone(), g.to_vec());
    if g.coeffs.is_empty() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SPLIT_SEED);
    Ok(ffpoly::factor(&field, &g.coeffs, &mut rng)
        .into_iter()
        .map(|(h, m)| (ResiduePoly { field: field.clone(), coeffs: h }, m))
        .collect())
}

/// Factorization of `f mod p` into monic irreducibles with multiplicities.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<Vec<(ModPoly, u32)>, PolyError> {
    if !crate::arith::is_prime(&BigUint::from(p)) {
        return Err(PolyError::NotPrime(p));
    }
    let fbar = ModPoly::from_int_poly(f, p);
    if fbar.is_zero() {
        return Err(PolyError::ZeroModP(p));
    }
    Ok(fbar.factor())
}
