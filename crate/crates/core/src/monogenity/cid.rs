//! Common index divisors by the counting obstruction.
//!
//! A generator of `Z_K` yields, for every prime P above p, a distinct monic
//! irreducible factor mod p of degree `f(P)`. When the splitting type asks
//! for more distinct irreducibles of some degree than `F_p` has, p divides
//! the index of every element.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::dedekind::SplittingType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CidError {
    #[error("splitting type {splitting} has total degree {got}, expected {n}")]
    Uncertified { splitting: String, got: u32, n: u32 },
    #[error("internal inconsistency: common index divisor {p} is not below the degree {n}")]
    HenselBound { p: u64, n: u32 },
}

fn mobius(n: u32) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            n /= q;
            if n.is_multiple_of(q) {
                return 0;
            }
            sign = -sign;
        }
        q += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of monic irreducible polynomials of degree `d` over `F_p`.
pub fn count_irreducibles(p: u64, d: u32) -> BigUint {
    assert!(d >= 1, "degree must be positive");
    let pb = BigInt::from(p);
    let total: BigInt = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .map(|e| BigInt::from(mobius(d / e)) * pb.pow(e))
        .sum();
    (total / BigInt::from(d)).abs().to_biguint().unwrap()
}

/// True when the residue degrees in `splitting` cannot be matched to
/// distinct monic irreducibles mod `p`.
pub fn common_index_divisor(splitting: &SplittingType, p: u64, n: u32) -> Result<bool, CidError> {
    let got = splitting.degree();
    if got != n {
        return Err(CidError::Uncertified { splitting: splitting.to_string(), got, n });
    }
    let mut needed: BTreeMap<u32, u64> = BTreeMap::new();
    for &(_, f) in splitting.primes() {
        *needed.entry(f).or_default() += 1;
    }
    let obstructed = needed
        .iter()
        .any(|(&f, &count)| count_irreducibles(p, f).to_u64().is_some_and(|avail| count > avail));
    if obstructed && p >= n as u64 {
        return Err(CidError::HenselBound { p, n });
    }
    Ok(obstructed)
}
