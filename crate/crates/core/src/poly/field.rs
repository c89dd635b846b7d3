//! Finite fields used by the factorization routines: prime fields F_p and
//! residue fields F_p[x]/(phi).

use std::fmt::Debug;

use num_bigint::BigUint;
use rand::Rng;

use super::ffpoly;

pub trait FiniteField {
    type Elem: Clone + Eq + Ord + Debug;

    fn characteristic(&self) -> u64;
    /// Degree over the prime field.
    fn degree(&self) -> usize;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_u64(&self, n: u64) -> Self::Elem;
    fn random<R: Rng>(&self, rng: &mut R) -> Self::Elem;

    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.degree() as u32)
    }

    fn pow(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// Inverse Frobenius: the unique `b` with `b^p = a`.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        if self.degree() == 1 {
            return a.clone();
        }
        let e = BigUint::from(self.characteristic()).pow(self.degree() as u32 - 1);
        self.pow(a, &e)
    }
}

/// The prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be prime; callers validate.
    pub fn new(p: u64) -> Self {
        PrimeField { p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }
}

impl FiniteField for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn degree(&self) -> usize {
        1
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on i128
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        self.reduce_i128(t0)
    }
    fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }
    fn random<R: Rng>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// The residue field F_phi = F_p[x]/(phi) for a monic irreducible `phi`.
/// Elements are reduced coefficient vectors (ascending, no trailing zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    base: PrimeField,
    phi: Vec<u64>,
}

/// Element of a [`ResidueField`]: a polynomial in x of degree below
/// `deg phi`, coefficients in `[0, p)`.
pub type ResidueFieldElem = Vec<u64>;

impl ResidueField {
    /// `phi` must be monic and irreducible over F_p; see
    /// [`super::ModPoly::is_irreducible`].
    pub fn new(p: u64, phi: Vec<u64>) -> Self {
        ResidueField { base: PrimeField::new(p), phi }
    }

    pub fn phi(&self) -> &[u64] {
        &self.phi
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn reduce(&self, a: &[u64]) -> ResidueFieldElem {
        let a: Vec<u64> = a.iter().map(|c| c % self.base.p()).collect();
        ffpoly::rem(&self.base, &ffpoly::trim(a), &self.phi)
    }
}

impl FiniteField for ResidueField {
    type Elem = ResidueFieldElem;

    fn characteristic(&self) -> u64 {
        self.base.p()
    }
    fn degree(&self) -> usize {
        self.phi.len() - 1
    }
    fn zero(&self) -> Vec<u64> {
        Vec::new()
    }
    fn one(&self) -> Vec<u64> {
        ffpoly::trim(vec![self.base.one()])
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        ffpoly::add(&self.base, a, b)
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        ffpoly::sub(&self.base, a, b)
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        ffpoly::neg(&self.base, a)
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        ffpoly::rem(&self.base, &ffpoly::mul(&self.base, a, b), &self.phi)
    }
    fn inv(&self, a: &Vec<u64>) -> Vec<u64> {
        assert!(!a.is_empty(), "inverse of zero in residue field");
        let (g, s, _) = ffpoly::xgcd(&self.base, a, &self.phi);
        debug_assert_eq!(g, self.one(), "phi is not irreducible");
        ffpoly::rem(&self.base, &s, &self.phi)
    }
    fn from_u64(&self, n: u64) -> Vec<u64> {
        ffpoly::trim(vec![n % self.base.p()])
    }
    fn random<R: Rng>(&self, rng: &mut R) -> Vec<u64> {
        let coeffs = (0..self.degree()).map(|_| self.base.random(rng)).collect();
        ffpoly::trim(coeffs)
    }
}
