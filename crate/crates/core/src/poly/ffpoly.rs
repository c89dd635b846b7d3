//! Dense polynomial arithmetic and factorization over a [`FiniteField`].
//!
//! Polynomials are coefficient vectors in ascending degree with no trailing
//! zero. Factorization is squarefree decomposition, distinct-degree
//! factorization, then Cantor-Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use super::field::FiniteField;

/// Strips trailing zeros from a vector of prime-field residues.
pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn normalize<F: FiniteField>(k: &F, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
    while v.last().is_some_and(|c| k.is_zero(c)) {
        v.pop();
    }
    v
}

pub fn degree<T>(a: &[T]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add<F: FiniteField>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let zero = k.zero();
    let out = (0..n)
        .map(|i| k.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    normalize(k, out)
}

pub fn sub<F: FiniteField>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let zero = k.zero();
    let out = (0..n)
        .map(|i| k.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    normalize(k, out)
}

pub fn neg<F: FiniteField>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|c| k.neg(c)).collect()
}

pub fn scale<F: FiniteField>(k: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    normalize(k, a.iter().map(|x| k.mul(x, c)).collect())
}

pub fn mul<F: FiniteField>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    normalize(k, out)
}

/// Euclidean division. Panics if `b` is zero.
pub fn divrem<F: FiniteField>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = k.inv(&b[db]);
    let mut quot = vec![k.zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = k.mul(&rem[i + db], &lead_inv);
        if k.is_zero(&c) {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[i + j] = k.sub(&rem[i + j], &k.mul(&c, bc));
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (normalize(k, quot), normalize(k, rem))
}

pub fn rem<F: FiniteField>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    divrem(k, a, b).1
}

pub fn monic<F: FiniteField>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(lc) => scale(k, a, &k.inv(lc)),
    }
}

/// Monic gcd (zero if both inputs are zero).
pub fn gcd<F: FiniteField>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = rem(k, &x, &y);
        x = y;
        y = r;
    }
    monic(k, &x)
}

/// Returns `(g, s, t)` with `g = s*a + t*b` and `g` monic.
pub fn xgcd<F: FiniteField>(
    k: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>, Vec<F::Elem>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![k.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![k.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1);
        let s = sub(k, &s0, &mul(k, &q, &s1));
        let t = sub(k, &t0, &mul(k, &q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
        (t0, t1) = (t1, t);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(lc) => {
            let inv = k.inv(lc);
            (scale(k, &r0, &inv), scale(k, &s0, &inv), scale(k, &t0, &inv))
        }
    }
}

pub fn derivative<F: FiniteField>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| k.mul(c, &k.from_u64(i as u64)))
        .collect();
    normalize(k, out)
}

pub fn powmod<F: FiniteField>(k: &F, base: &[F::Elem], e: &BigUint, m: &[F::Elem]) -> Vec<F::Elem> {
    let base = rem(k, base, m);
    let mut acc = rem(k, &[k.one()], m);
    for i in (0..e.bits()).rev() {
        acc = rem(k, &mul(k, &acc, &acc), m);
        if e.bit(i) {
            acc = rem(k, &mul(k, &acc, &base), m);
        }
    }
    acc
}

/// `b` with `b^p = a`, for `a` whose nonzero terms all have exponent
/// divisible by p.
fn pth_root_poly<F: FiniteField>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let p = k.characteristic() as usize;
    let out = a.iter().step_by(p).map(|c| k.pth_root(c)).collect();
    normalize(k, out)
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, m)` with
/// pairwise coprime squarefree `g` and `a = prod g^m`.
pub fn squarefree_decomposition<F: FiniteField>(k: &F, a: &[F::Elem]) -> Vec<(Vec<F::Elem>, u32)> {
    let mut out = Vec::new();
    if degree(a).unwrap_or(0) == 0 {
        return out;
    }
    let p = k.characteristic() as u32;
    let da = derivative(k, a);
    if da.is_empty() {
        for (g, m) in squarefree_decomposition(k, &pth_root_poly(k, a)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = gcd(k, a, &da);
    let mut w = divrem(k, a, &c).0;
    let mut i = 1;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(k, &w, &c);
        let z = divrem(k, &w, &y).0;
        if degree(&z).unwrap_or(0) > 0 {
            out.push((monic(k, &z), i));
        }
        i += 1;
        w = y;
        c = divrem(k, &c, &w).0;
    }
    if degree(&c).unwrap_or(0) > 0 {
        for (g, m) in squarefree_decomposition(k, &pth_root_poly(k, &c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// `(d, g)` where `g` is the product of all irreducible factors of degree d.
pub fn distinct_degree<F: FiniteField>(k: &F, a: &[F::Elem]) -> Vec<(usize, Vec<F::Elem>)> {
    let q = k.order();
    let x = vec![k.zero(), k.one()];
    let mut rest = a.to_vec();
    let mut h = rem(k, &x, &rest);
    let mut out = Vec::new();
    let mut d = 0;
    while degree(&rest).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = powmod(k, &h, &q, &rest);
        let g = gcd(k, &rest, &sub(k, &h, &x));
        if degree(&g).unwrap_or(0) > 0 {
            out.push((d, g.clone()));
            rest = divrem(k, &rest, &g).0;
            h = rem(k, &h, &rest);
        }
    }
    if let Some(dr) = degree(&rest) {
        if dr > 0 {
            out.push((dr, monic(k, &rest)));
        }
    }
    out
}

/// Splits a monic squarefree product of irreducibles of degree `d`.
pub fn equal_degree<F: FiniteField, R: Rng>(k: &F, a: &[F::Elem], d: usize, rng: &mut R) -> Vec<Vec<F::Elem>> {
    let n = degree(a).unwrap_or(0);
    if n == d {
        return vec![monic(k, a)];
    }
    let q = k.order();
    let char_two = k.characteristic() == 2;
    loop {
        let r: Vec<F::Elem> = normalize(k, (0..n).map(|_| k.random(rng)).collect());
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let g = if char_two {
            // absolute trace from F_{q^d} to F_2
            let steps = k.degree() * d;
            let mut t = r.clone();
            let mut acc = r.clone();
            for _ in 1..steps {
                t = rem(k, &mul(k, &t, &t), a);
                acc = add(k, &acc, &t);
            }
            gcd(k, a, &acc)
        } else {
            let e = (q.pow(d as u32) - BigUint::one()) >> 1;
            let b = powmod(k, &r, &e, a);
            gcd(k, a, &sub(k, &b, &[k.one()]))
        };
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let other = divrem(k, a, &g).0;
            let mut out = equal_degree(k, &g, d, rng);
            out.extend(equal_degree(k, &other, d, rng));
            return out;
        }
    }
}

/// Canonical order: by degree, then coefficients compared from the top.
pub fn canonical_cmp<T: Ord>(a: &[T], b: &[T]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// Complete factorization of a nonzero polynomial into monic irreducibles
/// with multiplicities, in canonical order. The leading unit is dropped.
pub fn factor<F: FiniteField, R: Rng>(k: &F, a: &[F::Elem], rng: &mut R) -> Vec<(Vec<F::Elem>, u32)> {
    let a = monic(k, a);
    let mut out: Vec<(Vec<F::Elem>, u32)> = Vec::new();
    for (sqf, m) in squarefree_decomposition(k, &a) {
        for (d, g) in distinct_degree(k, &sqf) {
            for h in equal_degree(k, &g, d, rng) {
                match out.iter_mut().find(|(f, _)| *f == h) {
                    Some(entry) => entry.1 += m,
                    None => out.push((h, m)),
                }
            }
        }
    }
    out.sort_by(|x, y| canonical_cmp(&x.0, &y.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{PrimeField, ResidueField};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn squarefree_in_char_p() {
        // (x+1)^2 * x^3 over F_3: x^3 has zero derivative part
        let k = PrimeField::new(3);
        let a = mul(&k, &mul(&k, &[1, 1], &[1, 1]), &[0, 0, 0, 1]);
        let mut d = squarefree_decomposition(&k, &a);
        d.sort();
        assert_eq!(d, vec![(vec![0, 1], 3), (vec![1, 1], 2)]);
    }

    #[test]
    fn factor_over_f2() {
        let k = PrimeField::new(2);
        // x^4 + x = x (x+1) (x^2+x+1)
        let f = factor(&k, &[0, 1, 0, 0, 1], &mut rng());
        assert_eq!(f, vec![(vec![0, 1], 1), (vec![1, 1], 1), (vec![1, 1, 1], 1)]);
    }

    #[test]
    fn factor_over_gf4() {
        // y^2 + y + 1 splits over F_4
        let k = ResidueField::new(2, vec![1, 1, 1]);
        let one = vec![1u64];
        let f = factor(&k, &[one.clone(), one.clone(), one], &mut rng());
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(g, m)| g.len() == 2 && *m == 1));
    }

    #[test]
    fn factor_over_gf9_repeated() {
        // (y - w)^2 (y^2 + w) style input built from known factors
        let k = ResidueField::new(3, vec![1, 0, 1]);
        let w = vec![0u64, 1];
        let lin = vec![k.neg(&w), k.one()];
        let a = mul(&k, &lin, &lin);
        let f = factor(&k, &a, &mut rng());
        assert_eq!(f, vec![(lin, 2)]);
    }
}
