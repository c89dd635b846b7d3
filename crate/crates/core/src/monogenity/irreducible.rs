//! Cheap irreducibility screen over Q for integer polynomials.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{divisors, factorize, is_prime_u64, Effort};
use crate::poly::{FiniteField, IntPoly, ModPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// Proven by an Eisenstein prime, a factorization pattern mod p, or (in
    /// degree <= 3) absence of rational roots.
    Certified(String),
    /// Nothing found against irreducibility; the caller's claim is accepted.
    Assumed,
}

impl Irreducibility {
    pub fn is_certified(&self) -> bool {
        matches!(self, Irreducibility::Certified(_))
    }
}

const PATTERN_PRIMES: usize = 40;
const MAX_PRIME_TRIED: u64 = 2_000;
const MAX_ROOT_CANDIDATES: usize = 20_000;

fn is_eisenstein(f: &IntPoly, p: &BigUint) -> bool {
    let p = BigInt::from(p.clone());
    let n = f.degree().unwrap();
    let c = f.coeffs();
    !(&c[n] % &p).is_zero()
        && c[..n].iter().all(|a| (a % &p).is_zero())
        && !(&c[0] % (&p * &p)).is_zero()
}

/// Degrees reachable as the degree of a factor of `f mod p`.
fn factor_degree_set(factors: &[(ModPoly, u32)], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for (g, m) in factors {
        let d = g.degree().unwrap();
        for _ in 0..*m {
            for s in (d..=n).rev() {
                if reach[s - d] {
                    reach[s] = true;
                }
            }
        }
    }
    reach
}

/// Searches for a rational root `r/s` with `r | a_0`, `s | a_n`. `Ok(false)`
/// means the search was skipped.
fn rational_root(f: &IntPoly, effort: &Effort) -> Result<bool, String> {
    let n = f.degree().unwrap();
    let (Some(num), Some(den)) = (
        divisors(&factorize(&f.coeff(0), effort)),
        divisors(&factorize(&f.coeff(n), effort)),
    ) else {
        return Ok(false);
    };
    if num.len() * den.len() > MAX_ROOT_CANDIDATES {
        return Ok(false);
    }
    for s in &den {
        for r in &num {
            if !r.gcd(s).is_one() {
                continue;
            }
            let s = BigInt::from(s.clone());
            for r in [BigInt::from(r.clone()), -BigInt::from(r.clone())] {
                // s^n f(r/s)
                let value = f
                    .coeffs()
                    .iter()
                    .enumerate()
                    .fold(BigInt::zero(), |acc, (i, c)| acc + c * r.pow(i as u32) * s.pow((n - i) as u32));
                if value.is_zero() {
                    return Err(format!("root {r}/{s}"));
                }
            }
        }
    }
    Ok(true)
}

/// Screens a primitive polynomial of degree >= 1. `Err(reason)` when `f` is
/// found reducible over Q.
pub fn screen(f: &IntPoly, effort: &Effort) -> Result<Irreducibility, String> {
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return Ok(Irreducibility::Certified("linear".into()));
    }
    if f.coeff(0).is_zero() {
        return Err("x divides f".into());
    }
    let roots_excluded = rational_root(f, effort).map_err(|r| format!("rational {r}"))?;
    if roots_excluded && n <= 3 {
        return Ok(Irreducibility::Certified("no rational root".into()));
    }

    let a0_fact = factorize(&f.coeff(0), effort);
    if let Some((p, _)) = a0_fact.factors.iter().find(|(p, _)| is_eisenstein(f, p)) {
        return Ok(Irreducibility::Certified(format!("Eisenstein at {p}")));
    }

    // intersect reachable factor degrees over primes where f stays squarefree
    // of full degree
    let lead = f.coeff(n);
    let mut possible = vec![true; n + 1];
    let mut used = 0;
    let mut p = 1u64;
    while used < PATTERN_PRIMES && p < MAX_PRIME_TRIED {
        p += 1;
        if !is_prime_u64(p) || (&lead % BigInt::from(p)).is_zero() {
            continue;
        }
        let raw = ModPoly::from_int_poly(f, p);
        let field = raw.field();
        let inv = field.inv(raw.coeffs().last().unwrap());
        let fbar = ModPoly::new(p, raw.coeffs().iter().map(|c| field.mul(c, &inv)).collect());
        let factors = fbar.factor();
        if factors.iter().any(|(_, m)| *m > 1) {
            continue;
        }
        used += 1;
        if factors.len() == 1 {
            return Ok(Irreducibility::Certified(format!("irreducible mod {p}")));
        }
        let reach = factor_degree_set(&factors, n);
        for d in 1..n {
            possible[d] &= reach[d];
        }
        if (1..n).all(|d| !possible[d] || (roots_excluded && (d == 1 || d == n - 1))) {
            return Ok(Irreducibility::Certified(format!("factor degree patterns mod primes up to {p}")));
        }
    }
    Ok(Irreducibility::Assumed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn reducible_detected() {
        let e = Effort::default();
        assert!(screen(&ip(&[0, 1, 1]), &e).is_err());
        assert!(screen(&ip(&[-10, -3, 1]), &e).is_err());
        assert!(screen(&ip(&[-2, 0, 0, 1]), &e).unwrap().is_certified());
        // 2x^2 - 3x + 1 = (2x - 1)(x - 1), and 4x^2 - 1
        assert!(screen(&ip(&[1, -3, 2]), &e).is_err());
        assert!(screen(&ip(&[-1, 0, 4]), &e).is_err());
        assert_eq!(screen(&ip(&[1, 0, 1]).pow(2), &e).unwrap(), Irreducibility::Assumed);
    }

    #[test]
    fn certificates() {
        let e = Effort::default();
        assert_eq!(
            screen(&ip(&[2, 0, 2, 0, 0, 0, 1]), &e).unwrap(),
            Irreducibility::Certified("Eisenstein at 2".into())
        );
        // x^4 + 1 splits mod every prime, so only the root test applies
        assert_eq!(screen(&ip(&[1, 0, 0, 0, 1]), &e).unwrap(), Irreducibility::Assumed);
        assert!(screen(&ip(&[-1, -1, 0, 0, 0, 1]), &e).unwrap().is_certified());
        // non-monic: 3x^4 - 2 is irreducible mod 5
        assert!(screen(&ip(&[-2, 0, 0, 0, 3]), &e).unwrap().is_certified());
    }

    #[test]
    fn quadratic_product_not_certified() {
        // (x^2 + 1)(x^2 + 2) has no rational root
        let f = ip(&[1, 0, 1]).mul(&ip(&[2, 0, 1]));
        assert_eq!(screen(&f, &Effort::default()).unwrap(), Irreducibility::Assumed);
    }
}
