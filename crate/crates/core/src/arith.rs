//! Integer arithmetic at desk scale: primality, factorization, p-adic
//! valuations and squarefree testing.
//!
//! Factorization runs trial division up to a configurable limit, then a
//! bounded Brent/Pollard-rho stage. Anything that survives both stages is
//! kept as an unfactored cofactor rather than reported as an error.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("valuation of zero is infinite")]
    ZeroValuation,
    #[error("{0} is not a prime")]
    NotPrime(BigUint),
}

/// Limits for the factorization stages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Effort {
    /// Trial division covers every prime below this bound.
    pub trial_limit: u64,
    /// Iteration budget for a single Pollard-rho attempt.
    pub rho_iterations: u64,
    /// Number of rho attempts (distinct polynomial constants) per composite.
    pub rho_attempts: u32,
    /// Seed for the rho constants and the probabilistic primality bases.
    pub seed: u64,
}

impl Default for Effort {
    fn default() -> Self {
        Effort {
            trial_limit: 1_000_000,
            rho_iterations: 200_000,
            rho_attempts: 8,
            seed: 0,
        }
    }
}

/// Prime decomposition of a nonzero integer, possibly with an unfactored
/// cofactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub value: BigInt,
    pub factors: Vec<(BigUint, u32)>,
    pub cofactor: BigUint,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }

    /// Multiplies the recorded prime powers and the cofactor back together.
    pub fn reconstruct(&self) -> BigUint {
        self.factors
            .iter()
            .fold(self.cofactor.clone(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquarefreeStatus {
    Squarefree,
    NotSquarefree(BigUint),
    Unknown,
}

const SMALL_PRIMES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

// Miller-Rabin with the first 13 prime bases is deterministic below this.
fn deterministic_mr_limit() -> BigUint {
    "3317044064679887385961981".parse().unwrap()
}

fn miller_rabin_round(n: &BigUint, n_minus_one: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if &x == n_minus_one {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

/// Primality test: deterministic below 3.3e24, probabilistic (20 extra
/// seeded bases) above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for p in SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    for p in SMALL_PRIMES {
        if !miller_rabin_round(n, &n_minus_one, &d, s, &BigUint::from(p)) {
            return false;
        }
    }
    if n < &deterministic_mr_limit() {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_5eed);
    let two = BigUint::from(2u32);
    let span = n - 3u32;
    for _ in 0..20 {
        let a = BigUint::from(rng.gen::<u64>()) % &span + &two;
        if !miller_rabin_round(n, &n_minus_one, &d, s, &a) {
            return false;
        }
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in SMALL_PRIMES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite `n`, or `None` when the iteration budget runs out.
fn pollard_brent(n: &BigUint, c: &BigUint, y0: &BigUint, max_iter: u64) -> Option<BigUint> {
    let one = BigUint::one();
    let step = |v: &BigUint| (v * v + c) % n;
    let mut y = y0.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = one.clone();
    let mut g = one.clone();
    let mut r: u64 = 1;
    let m: u64 = 128;
    let mut iters: u64 = 0;

    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = step(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += m;
            iters += m.min(r);
            if iters > max_iter {
                return None;
            }
        }
        r *= 2;
    }
    if &g == n {
        // Backtrack one step at a time over the last block.
        for _ in 0..=m {
            ys = step(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n || g.is_one() {
        None
    } else {
        Some(g)
    }
}

fn push_factor(out: &mut Vec<(BigUint, u32)>, p: BigUint, e: u32) {
    if let Some(entry) = out.iter_mut().find(|(q, _)| *q == p) {
        entry.1 += e;
    } else {
        out.push((p, e));
    }
}

/// Splits `n` (no prime factor below the trial limit) with rho. Primes go to
/// `found`, composites that resist are multiplied into the returned cofactor.
fn rho_split(n: BigUint, effort: &Effort, rng: &mut ChaCha8Rng, found: &mut Vec<(BigUint, u32)>) -> BigUint {
    if n.is_one() {
        return n;
    }
    if is_prime(&n) {
        push_factor(found, n, 1);
        return BigUint::one();
    }
    if let Some(root) = exact_sqrt(&n) {
        let rest_a = rho_split(root.clone(), effort, rng, found);
        let rest_b = rho_split(root, effort, rng, found);
        return rest_a * rest_b;
    }
    for _ in 0..effort.rho_attempts {
        let c = BigUint::from(rng.gen_range(1u64..u64::MAX)) % &n;
        let y0 = BigUint::from(rng.gen::<u64>()) % &n;
        if let Some(d) = pollard_brent(&n, &c, &y0, effort.rho_iterations) {
            let other = &n / &d;
            let rest_a = rho_split(d, effort, rng, found);
            let rest_b = rho_split(other, effort, rng, found);
            return rest_a * rest_b;
        }
    }
    n
}

fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Candidate divisors 2, 3, then 6k +- 1, all below `limit`.
fn trial_candidates(limit: u64) -> impl Iterator<Item = u64> {
    [2u64, 3]
        .into_iter()
        .chain((5..).step_by(6).flat_map(|d| [d, d + 2]))
        .take_while(move |&d| d < limit)
}

// Both trial routines return the prime powers found and the remaining part.
// The remainder is 1, a prime (when the candidates ran past its square
// root), or a number with no prime factor below `limit`.
fn trial_divide_u128(mut rest: u128, limit: u64) -> (Vec<(BigUint, u32)>, u128) {
    let mut factors = Vec::new();
    for d in trial_candidates(limit) {
        let d = d as u128;
        if d * d > rest {
            if rest > 1 {
                factors.push((BigUint::from(rest), 1));
                rest = 1;
            }
            break;
        }
        let mut e = 0;
        while rest.is_multiple_of(d) {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((BigUint::from(d), e));
        }
    }
    (factors, rest)
}

fn trial_divide_big(mut rest: BigUint, limit: u64) -> (Vec<(BigUint, u32)>, BigUint) {
    let mut factors = Vec::new();
    for d in trial_candidates(limit) {
        if let Some(small) = rest.to_u128() {
            let (more, r) = trial_divide_u128(small, limit);
            factors.extend(more);
            return (factors, BigUint::from(r));
        }
        let mut e = 0;
        while (&rest % d).is_zero() {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((BigUint::from(d), e));
        }
    }
    (factors, rest)
}

/// Factors `n` as far as `effort` allows.
///
/// Panics if `n` is zero.
pub fn factorize(n: &BigInt, effort: &Effort) -> Factorization {
    assert!(!n.is_zero(), "factorize: zero has no factorization");
    let limit = effort.trial_limit.max(2);
    let (mut factors, rest) = match n.magnitude().to_u128() {
        Some(small) => {
            let (factors, rest) = trial_divide_u128(small, limit);
            (factors, BigUint::from(rest))
        }
        None => trial_divide_big(n.magnitude().clone(), limit),
    };

    let mut cofactor = BigUint::one();
    if !rest.is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(effort.seed);
        let mut found = Vec::new();
        cofactor = rho_split(rest, effort, &mut rng, &mut found);
        for (p, e) in found {
            push_factor(&mut factors, p, e);
        }
    }
    factors.sort();

    Factorization {
        value: n.clone(),
        factors,
        cofactor,
    }
}

/// Largest k with p^k | n.
pub fn valuation(n: &BigInt, p: &BigUint) -> Result<u32, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p.clone()));
    }
    Ok(valuation_unchecked(n.magnitude(), p))
}

/// Valuation without the primality check; `n` must be nonzero.
pub(crate) fn valuation_unchecked(n: &BigUint, p: &BigUint) -> u32 {
    let mut k = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        m = q;
        k += 1;
    }
}

/// Squarefree status of a factorization's value. The cofactor (which has no
/// prime factor below the trial limit L) is verified squarefree when it is
/// below L^3 and not a perfect square: such a number has at most two prime
/// factors.
pub fn squarefree_of(fact: &Factorization, effort: &Effort) -> SquarefreeStatus {
    if let Some((p, _)) = fact.factors.iter().find(|(_, e)| *e >= 2) {
        return SquarefreeStatus::NotSquarefree(p.clone());
    }
    if fact.cofactor.is_one() {
        return SquarefreeStatus::Squarefree;
    }
    if let Some(root) = exact_sqrt(&fact.cofactor) {
        if is_prime(&root) {
            return SquarefreeStatus::NotSquarefree(root);
        }
        return SquarefreeStatus::Unknown;
    }
    let limit = BigUint::from(effort.trial_limit.max(2));
    if fact.cofactor < limit.pow(3) {
        SquarefreeStatus::Squarefree
    } else {
        SquarefreeStatus::Unknown
    }
}

/// Panics if `n` is zero.
pub fn squarefree_status(n: &BigInt, effort: &Effort) -> SquarefreeStatus {
    squarefree_of(&factorize(n, effort), effort)
}

/// Positive divisors of a completely factored number, ascending.
pub fn divisors(fact: &Factorization) -> Option<Vec<BigUint>> {
    if !fact.is_complete() {
        return None;
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in &fact.factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Exact integer square root of a non-negative integer.
pub fn perfect_square_root(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    exact_sqrt(n.magnitude()).map(BigInt::from)
}

/// Squarefree kernel (radical) of a positive integer of desk size.
pub fn radical(n: u64) -> u64 {
    let fact = factorize(&BigInt::from(n), &Effort::default());
    fact.factors
        .iter()
        .map(|(p, _)| p.to_u64().unwrap())
        .product()
}
