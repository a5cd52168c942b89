//! Truncated power series in one variable with rational coefficients.
//!
//! Everything in the Chow ring used here is a polynomial in the hyperplane
//! class, so `Q[H]/(H^{n+1})` arithmetic is all that is needed.

use num_traits::{One, Zero};

use crate::rational::{factorial, Q};

pub fn mul(a: &[Q], b: &[Q], len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Multiplicative inverse; the constant term must be nonzero.
pub fn inverse(a: &[Q], len: usize) -> Vec<Q> {
    assert!(
        !a[0].is_zero(),
        "series with zero constant term has no inverse"
    );
    let mut out = vec![Q::zero(); len];
    out[0] = a[0].recip();
    for k in 1..len {
        let mut acc = Q::zero();
        for j in 1..=k.min(a.len() - 1) {
            acc += &a[j] * &out[k - j];
        }
        out[k] = -acc * &out[0];
    }
    out
}

pub fn pow(a: &[Q], exp: u32, len: usize) -> Vec<Q> {
    let mut out = one(len);
    for _ in 0..exp {
        out = mul(&out, a, len);
    }
    out
}

pub fn one(len: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); len];
    out[0] = Q::one();
    out
}

/// `exp(t*H)` truncated.
pub fn exp(t: &Q, len: usize) -> Vec<Q> {
    let mut out = Vec::with_capacity(len);
    let mut power = Q::one();
    for k in 0..len {
        out.push(&power / factorial(k));
        power *= t;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn inverse_of_geometric() {
        let a = vec![qi(1), qi(3)];
        let inv = inverse(&a, 5);
        assert_eq!(inv, vec![qi(1), qi(-3), qi(9), qi(-27), qi(81)]);
        assert_eq!(mul(&a, &inv, 5), one(5));
    }

    #[test]
    fn exp_adds_exponents() {
        let a = exp(&q(1, 2), 5);
        let b = exp(&q(-3, 4), 5);
        assert_eq!(mul(&a, &b, 5), exp(&q(-1, 4), 5));
    }
}
