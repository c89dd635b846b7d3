//! Bounded searches: small solutions of cubic Thue equations and a small
//! nontrivial zero of a ternary quadratic form.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use super::forms::{BinaryForm, TernaryQuadraticForm};

fn t_powers(t: i128, n: usize) -> Option<Vec<i128>> {
    let mut tp = vec![1i128; n + 1];
    for i in 1..=n {
        tp[i] = tp[i - 1].checked_mul(t)?;
    }
    Some(tp)
}

// Horner in s against precomputed powers of t
fn eval_small(c: &[i128], s: i128, tp: &[i128]) -> Option<i128> {
    let mut acc: i128 = 0;
    for (ci, t) in c.iter().zip(tp) {
        acc = acc.checked_mul(s)?.checked_add(ci.checked_mul(*t)?)?;
    }
    Some(acc)
}

/// All `(u, v)` with `max(|u|, |v|) <= bound` and `F(u, v) = ±rhs`, sorted.
pub fn solve_cubic_thue_small(form: &BinaryForm, rhs: &BigInt, bound: u64) -> Vec<(i64, i64)> {
    let b = bound as i64;
    let target = rhs.abs();
    let small = form.small_coeffs();
    let small_rhs = target.to_i128();
    let n = form.degree();
    let mut out: Vec<(i64, i64)> = (-b..=b)
        .into_par_iter()
        .flat_map_iter(|v| {
            let tp = t_powers(v as i128, n);
            let target = &target;
            let small = &small;
            (-b..=b).filter_map(move |u| {
                let fast = match (small, small_rhs, &tp) {
                    (Some(c), Some(r), Some(tp)) => eval_small(c, u as i128, tp).map(|val| val.abs() == r),
                    _ => None,
                };
                let hit = fast.unwrap_or_else(|| form.eval(&BigInt::from(u), &BigInt::from(v)).abs() == *target);
                hit.then_some((u, v))
            })
        })
        .collect();
    out.sort();
    out
}

/// Integer roots of `a x^2 + b x + c`; the zero polynomial yields `[0]`.
fn integer_roots(a: i128, b: i128, c: i128) -> Vec<i128> {
    if a == 0 {
        if b == 0 {
            return if c == 0 { vec![0] } else { Vec::new() };
        }
        return if c % b == 0 { vec![-c / b] } else { Vec::new() };
    }
    let Some(disc) = b.checked_mul(b).and_then(|bb| a.checked_mul(c)?.checked_mul(4).and_then(|ac| bb.checked_sub(ac))) else {
        return Vec::new();
    };
    if disc < 0 {
        return Vec::new();
    }
    let s = disc.sqrt();
    if s * s != disc {
        return Vec::new();
    }
    let mut roots = Vec::new();
    for num in [-b + s, -b - s] {
        if num % (2 * a) == 0 {
            roots.push(num / (2 * a));
        }
    }
    roots
}

/// Smallest zero `(x, y, z)` of `q` with `z != 0`, all coordinates within
/// `bound`, under the order `(|z|, |y|, |x|, sign)`. Only `z > 0` is
/// searched since `q(-v) = q(v)`. Coefficients must fit in `i64`.
pub fn q0_solution(q: &TernaryQuadraticForm, bound: u64) -> Option<[BigInt; 3]> {
    let c: Option<Vec<i128>> = q.coeffs.iter().map(|c| c.to_i64().map(i128::from)).collect();
    let c = c?;
    let bound = bound as i128;
    for z in 1..=bound {
        for ay in 0..=bound {
            for y in if ay == 0 { vec![0] } else { vec![ay, -ay] } {
                // c0 x^2 + (c1 y + c3 z) x + (c2 y^2 + c4 y z + c5 z^2)
                let lin = c[1] * y + c[3] * z;
                let cst = c[2] * y * y + c[4] * y * z + c[5] * z * z;
                let mut xs: Vec<i128> = integer_roots(c[0], lin, cst)
                    .into_iter()
                    .filter(|x| x.abs() <= bound)
                    .collect();
                xs.sort_by_key(|x| (x.abs(), *x < 0));
                if let Some(&x) = xs.first() {
                    debug_assert_eq!(q.eval_i128([x, y, z]), Some(0));
                    return Some([BigInt::from(x), BigInt::from(y), BigInt::from(z)]);
                }
            }
        }
    }
    None
}

/// Exact integer square root of a nonnegative integer.
pub(crate) fn exact_sqrt_i128(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cubic_examples() {
        let f = BinaryForm::from_i64s(&[1, 0, 8, 0]);
        assert_eq!(solve_cubic_thue_small(&f, &b(1), 100), vec![(-1, 0), (1, 0)]);
        let g = BinaryForm::from_i64s(&[1, 0, -4, 0]);
        assert_eq!(solve_cubic_thue_small(&g, &b(1), 100), vec![(-1, 0), (1, 0)]);
        assert!(solve_cubic_thue_small(&BinaryForm::from_i64s(&[2, 0, 0, 4]), &b(1), 50).is_empty());
        // x^3 - 2 y^3 = ±1 has (1,0), (1,1), (-1,-1), (-1,0) in any box
        let h = BinaryForm::from_i64s(&[1, 0, 0, -2]);
        assert_eq!(solve_cubic_thue_small(&h, &b(1), 30), vec![(-1, -1), (-1, 0), (1, 0), (1, 1)]);
    }

    #[test]
    fn cubic_matches_bigint_brute_force() {
        let f = BinaryForm::from_i64s(&[3, -7, 2, 5]);
        for rhs in [1, 3, 5, 29] {
            let expect: Vec<(i64, i64)> = (-20i64..=20)
                .flat_map(|u| (-20i64..=20).map(move |v| (u, v)))
                .filter(|&(u, v)| f.eval(&b(u), &b(v)).abs() == b(rhs))
                .collect();
            let mut expect = expect;
            expect.sort();
            assert_eq!(solve_cubic_thue_small(&f, &b(rhs), 20), expect);
        }
    }

    #[test]
    fn q0_examples() {
        let conic = TernaryQuadraticForm::from_i64s([0, 0, 1, -1, 0, 0]);
        assert_eq!(q0_solution(&conic, 100), Some([b(0), b(0), b(1)]));
        assert_eq!(q0_solution(&TernaryQuadraticForm::from_i64s([1, 0, 1, 0, 0, 1]), 30), None);
        // x^2 + y^2 - 2 z^2 = 0 at (1, 1, 1)
        let q = TernaryQuadraticForm::from_i64s([1, 0, 1, 0, 0, -2]);
        assert_eq!(q0_solution(&q, 10), Some([b(1), b(1), b(1)]));
        // x^2 - 2 y^2 - z^2: the first hit has y = 0
        let q = TernaryQuadraticForm::from_i64s([1, 0, -2, 0, 0, -1]);
        assert_eq!(q0_solution(&q, 10), Some([b(1), b(0), b(1)]));
    }

    #[test]
    fn roots_helper() {
        assert_eq!(integer_roots(1, 0, -4), vec![2, -2]);
        assert_eq!(integer_roots(0, 2, -4), vec![2]);
        assert_eq!(integer_roots(0, 0, 0), vec![0]);
        assert!(integer_roots(1, 0, 2).is_empty());
        assert_eq!(integer_roots(2, -3, 1), vec![1]);
    }
}
