//! Exact arithmetic substrate: arbitrary-precision integers and rationals,
//! and the combinatorial primitives everything else is built from.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer. Exact at every input size the suite
/// produces.
pub type Integer = num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for building an [`Integer`] from a machine integer.
pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

/// Shorthand for an integral [`Rational`].
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(int(v))
}

pub fn factorial(n: u32) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(n, k), zero when `k < 0` or `k > n`.
pub fn binomial(n: u32, k: i64) -> Integer {
    if k < 0 || k > n as i64 {
        return Integer::zero();
    }
    let k = (k as u32).min(n - k as u32);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial C(a,k) = a(a-1)…(a-k+1)/k! for any integer a
/// (C(-1,0) = 1, C(-1,k) = (-1)^k, …).
pub fn binomial_gen(a: &Integer, k: u32) -> Integer {
    gen_falling(a, &Integer::one(), k) / factorial(k)
}

/// Multinomial coefficient n! / (parts_0! · parts_1! · …).
///
/// The parts must sum to `n`; anything else is rejected rather than silently
/// renormalized.
pub fn multinomial(n: u32, parts: &[u32]) -> Result<Integer> {
    let sum: u32 = parts.iter().sum();
    if sum != n {
        return Err(Error::PartsSumMismatch { n, sum });
    }
    let mut acc = factorial(n);
    for &p in parts {
        acc /= factorial(p);
    }
    Ok(acc)
}

/// Generalized falling factorial (m|α)_k = ∏_{i=0}^{k-1} (m − iα).
///
/// (m|α)_0 = 1 and (m|0)_k = m^k.
pub fn gen_falling(m: &Integer, alpha: &Integer, k: u32) -> Integer {
    let mut acc = Integer::one();
    let mut term = m.clone();
    for _ in 0..k {
        acc *= &term;
        term -= alpha;
    }
    acc
}

/// True when the rational is an integer; used before lossless narrowing.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Narrow a rational known to be integral, erroring (never rounding) otherwise.
pub fn to_integer(r: &Rational, context: &str) -> Result<Integer> {
    if is_integer(r) {
        Ok(r.numer().clone())
    } else {
        Err(Error::NonIntegral {
            context: context.to_string(),
            value: r.to_string(),
        })
    }
}

/// Render an exact rational as a decimal string with `sig` significant digits.
///
/// The conversion is exact integer arithmetic (scaled division with one
/// half-up rounding at the last kept digit); no floating point is involved.
/// Output uses scientific notation, e.g. `1.0499023437500000…e-2`.
pub fn decimal_string(r: &Rational, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();

    // exponent: the unique E with 10^{E-1} <= |r| < 10^E
    let ten = int(10);
    let mut exp: i64 = 0;
    if num >= den {
        let mut pw = den.clone();
        while num >= pw {
            pw *= &ten;
            exp += 1;
        }
    } else {
        let mut pn = num.clone();
        let mut t: i64 = 0;
        while pn < den {
            pn *= &ten;
            t += 1;
        }
        exp = 1 - t;
    }
    // extract `sig` digits of num/den * 10^{sig-exp}
    let shift = sig as i64 - exp;
    let (mut n2, mut d2) = (num, den);
    if shift >= 0 {
        n2 *= ten.pow(shift as u32);
    } else {
        d2 *= ten.pow((-shift) as u32);
    }
    // round half-up
    let mut digits = (&n2 + &d2 / int(2)) / &d2;
    let bound = ten.pow(sig as u32);
    let mut exp10 = exp;
    if digits >= bound {
        digits /= &ten;
        exp10 += 1;
    }
    let ds = digits.to_string();
    debug_assert_eq!(ds.len(), sig);
    let mantissa = if sig == 1 {
        ds
    } else {
        format!("{}.{}", &ds[..1], &ds[1..])
    };
    format!("{}{}e{}", if neg { "-" } else { "" }, mantissa, exp10 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(7, 0), int(1));
        assert_eq!(binomial(4, 6), int(0));
        assert_eq!(binomial(4, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(3, &[1, 1, 1]).unwrap(), int(6));
        assert_eq!(multinomial(4, &[4]).unwrap(), int(1));
        assert_eq!(multinomial(4, &[2, 2]).unwrap(), int(6));
        assert!(multinomial(4, &[2, 1]).is_err());
    }

    #[test]
    fn gen_falling_values() {
        assert_eq!(gen_falling(&int(3), &int(1), 3), int(6));
        assert_eq!(gen_falling(&int(5), &int(0), 3), int(125));
        assert_eq!(gen_falling(&int(7), &int(-2), 0), int(1));
        // (2|2)_2 = 2 * 0
        assert_eq!(gen_falling(&int(2), &int(2), 2), int(0));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1), 4), "1.000e0");
        assert_eq!(decimal_string(&(rat(1) / rat(3)), 5), "3.3333e-1");
        assert_eq!(decimal_string(&(rat(-1) / rat(8)), 3), "-1.25e-1");
        assert_eq!(decimal_string(&rat(0), 10), "0");
        assert_eq!(decimal_string(&rat(1030100), 7), "1.030100e6");
        // rounding carries across a power of ten
        assert_eq!(decimal_string(&(rat(9999) / rat(10000)), 3), "1.00e0");
    }
}
