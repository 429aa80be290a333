//! Bernoulli numbers and polynomials, exact over the rationals.
//!
//! Convention: generating function t e^{tx}/(e^t - 1), so B_1 = -1/2 and
//! B_n(x) = sum_k C(n,k) B_k x^{n-k}.

use once_cell::sync::Lazy;
use rug::{Integer, Rational};
use std::sync::Mutex;

static CACHE: Lazy<Mutex<Vec<Rational>>> = Lazy::new(|| Mutex::new(vec![Rational::from(1)]));

pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(n).binomial(k as u32)
}

/// B_n as an exact rational, from the recurrence
/// sum_{j=0}^{n} C(n+1, j) B_j = 0.
pub fn bernoulli_number(n: u32) -> Rational {
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= n as usize {
        let m = cache.len() as u64; // computing B_m
        let mut acc = Rational::new();
        for (j, bj) in cache.iter().enumerate() {
            acc += Rational::from(binomial(m + 1, j as u64)) * bj;
        }
        acc /= -Rational::from(m + 1);
        cache.push(acc);
    }
    cache[n as usize].clone()
}

/// B_n(x) exactly.
pub fn bernoulli_poly(n: u32, x: &Rational) -> Rational {
    let mut acc = Rational::new();
    let mut xpow = Rational::from(1); // x^0, built up to x^n
    let mut powers = Vec::with_capacity(n as usize + 1);
    powers.push(xpow.clone());
    for _ in 0..n {
        xpow *= x;
        powers.push(xpow.clone());
    }
    for k in 0..=n {
        acc += Rational::from(binomial(n as u64, k as u64))
            * bernoulli_number(k)
            * &powers[(n - k) as usize];
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bernoulli_numbers() {
        assert_eq!(bernoulli_number(0), Rational::from(1));
        assert_eq!(bernoulli_number(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli_number(2), Rational::from((1, 6)));
        assert_eq!(bernoulli_number(3), Rational::new());
        assert_eq!(bernoulli_number(4), Rational::from((-1, 30)));
        assert_eq!(bernoulli_number(12), Rational::from((-691, 2730)));
    }

    #[test]
    fn poly_constant_and_linear() {
        let x = Rational::from((3, 7));
        assert_eq!(bernoulli_poly(0, &x), Rational::from(1));
        let want = Rational::from((3, 7)) - Rational::from((1, 2));
        assert_eq!(bernoulli_poly(1, &x), want);
        assert_eq!(bernoulli_poly(2, &Rational::new()), Rational::from((1, 6)));
    }

    #[test]
    fn difference_recurrence_oracle() {
        // B_n(x+1) - B_n(x) = n x^{n-1}, the independent characterization
        for n in 1..=10u32 {
            for num in [-3i64, 0, 2, 5] {
                let x = Rational::from((num, 4));
                let x1 = x.clone() + Rational::from(1);
                let lhs = bernoulli_poly(n, &x1) - bernoulli_poly(n, &x);
                let mut xp = Rational::from(1);
                for _ in 0..n - 1 {
                    xp *= &x;
                }
                assert_eq!(lhs, Rational::from(n) * xp, "n={n} x={x}");
            }
        }
    }
}
