//! Truncated exponential generating functions over exact rationals.
//!
//! A series is stored by its Hurwitz coefficients `c_n = n!·[z^n] f`, so the
//! product of two series is the binomial convolution
//! `c_n(ab) = Σ_k C(n,k)·a_k·b_{n-k}` and every counting sequence stays in
//! integers. Arithmetic never reads beyond the truncation order.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, gen_falling, Integer, Rational};

/// Default truncation order used by callers that do not size the series
/// from a specific n_max.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzSeries {
    // length = order + 1
    coeffs: Vec<Rational>,
}

impl HurwitzSeries {
    /// Build from explicit Hurwitz coefficients `c_0..c_N`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least c_0");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series of `e^z`: every Hurwitz coefficient is 1.
    pub fn exp_z(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::one(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Hurwitz coefficient `c_n = n!·[z^n]`; `n` beyond the truncation order
    /// is an error rather than a silent zero.
    pub fn coeff(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(Error::CoefficientBeyondOrder {
            n,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Binomial convolution product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n_max = self.order();
        let mut out = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = Rational::zero();
            for k in 0..=n {
                let b = binomial(n as u32, k as i64);
                acc += Rational::from_integer(b) * &self.coeffs[k] * &other.coeffs[n - k];
            }
            out.push(acc);
        }
        Ok(Self { coeffs: out })
    }

    /// Series exponential via
    /// `c_n(e^a) = Σ_{k=1}^{n} C(n-1,k-1)·a_k·c_{n-k}(e^a)`, `c_0 = 1`.
    ///
    /// Requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm {
                found: self.coeffs[0].to_string(),
            });
        }
        let n_max = self.order();
        let mut out = vec![Rational::zero(); n_max + 1];
        out[0] = Rational::one();
        for n in 1..=n_max {
            let mut acc = Rational::zero();
            for k in 1..=n {
                let b = binomial(n as u32 - 1, k as i64 - 1);
                acc += Rational::from_integer(b) * &self.coeffs[k] * &out[n - k];
            }
            out[n] = acc;
        }
        Ok(Self { coeffs: out })
    }

    /// Integer power by binary powering; exponents up to the 10^6 range used
    /// by the asymptotic reference values stay cheap (O(log e) products).
    pub fn pow(&self, e: u64) -> Self {
        let order = self.order();
        let mut result = Self::one(order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("orders agree");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("orders agree");
            }
        }
        result
    }

    /// The degenerate exponential `e_α^r(z) = (1+αz)^{r/α}` (plain `e^{rz}`
    /// when `α = 0`), whose Hurwitz coefficients are the generalized falling
    /// factorials `c_n = (r|α)_n`.
    pub fn deg_exp(alpha: &Integer, r: &Integer, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|n| Rational::from_integer(gen_falling(r, alpha, n as u32)))
            .collect();
        Self { coeffs }
    }

    /// The barred-preferential-arrangement series `1/(2-e^z)^{l+1}`,
    /// obtained by solving `(2-e^z)^{l+1} · f = 1` coefficient by coefficient.
    pub fn bpa(bars: u32, order: usize) -> Self {
        // 2 - e^z has Hurwitz coefficients c_0 = 1, c_n = -1 (n >= 1)
        let mut two_minus_exp = vec![-Rational::one(); order + 1];
        two_minus_exp[0] = Rational::one();
        let g = Self {
            coeffs: two_minus_exp,
        };
        let mut gp = Self::one(order);
        for _ in 0..=bars {
            gp = gp.mul(&g).expect("orders agree");
        }
        // solve gp * f = 1; gp_0 = 1
        let mut f = vec![Rational::zero(); order + 1];
        for n in 0..=order {
            let mut acc = if n == 0 {
                Rational::one()
            } else {
                Rational::zero()
            };
            for k in 1..=n {
                let b = binomial(n as u32, k as i64);
                acc -= Rational::from_integer(b) * &gp.coeffs[k] * &f[n - k];
            }
            f[n] = acc / &gp.coeffs[0];
        }
        Self { coeffs: f }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, to_integer};

    #[test]
    fn product_of_exponentials() {
        let e = HurwitzSeries::exp_z(8);
        let sq = e.mul(&e).unwrap();
        for n in 0..=8usize {
            assert_eq!(*sq.coeff(n).unwrap(), rat(1 << n));
        }
        let one = HurwitzSeries::one(8);
        assert_eq!(e.mul(&one).unwrap(), e);
        let em = HurwitzSeries::deg_exp(&int(0), &int(-1), 8);
        let prod = e.mul(&em).unwrap();
        assert_eq!(*prod.coeff(0).unwrap(), rat(1));
        for n in 1..=8usize {
            assert!(prod.coeff(n).unwrap().is_zero());
        }
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = HurwitzSeries::one(4);
        let b = HurwitzSeries::one(5);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn exp_of_z_and_zero() {
        let mut z = HurwitzSeries::zero(6);
        z.coeffs[1] = rat(1);
        let e = z.exp().unwrap();
        for n in 0..=6usize {
            assert_eq!(*e.coeff(n).unwrap(), rat(1));
        }
        let e0 = HurwitzSeries::zero(6).exp().unwrap();
        assert_eq!(e0, HurwitzSeries::one(6));
        assert!(HurwitzSeries::one(6).exp().is_err());
    }

    #[test]
    fn exp_of_exp_z_minus_one_gives_bell_numbers() {
        // frozen from the set-partition enumeration oracle (see oracle tests)
        let mut a = HurwitzSeries::exp_z(5);
        a.coeffs[0] = rat(0);
        let bell = a.exp().unwrap();
        let want = [1, 1, 2, 5, 15, 52];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(*bell.coeff(n).unwrap(), rat(*w));
        }
    }

    #[test]
    fn deg_exp_examples() {
        let s = HurwitzSeries::deg_exp(&int(1), &int(3), 5);
        let want = [1, 3, 6, 6, 0, 0];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(*s.coeff(n).unwrap(), rat(*w));
        }
        let s = HurwitzSeries::deg_exp(&int(0), &int(2), 5);
        for n in 0..=5usize {
            assert_eq!(*s.coeff(n).unwrap(), rat(1 << n));
        }
        let s = HurwitzSeries::deg_exp(&int(2), &int(2), 4);
        assert_eq!(*s.coeff(0).unwrap(), rat(1));
        assert_eq!(*s.coeff(1).unwrap(), rat(2));
        assert_eq!(*s.coeff(2).unwrap(), rat(0));
    }

    #[test]
    fn bpa_series_values() {
        // l = 0: Fubini numbers (frozen from the ordered-set-partition oracle)
        let s = HurwitzSeries::bpa(0, 6);
        let want = [1, 1, 3, 13, 75, 541, 4683];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(*s.coeff(n).unwrap(), rat(*w));
        }
        let s1 = HurwitzSeries::bpa(1, 4);
        let want1 = [1, 2, 8, 44, 308];
        for (n, w) in want1.iter().enumerate() {
            assert_eq!(*s1.coeff(n).unwrap(), rat(*w));
        }
        assert!(s1.coeff(5).is_err());
    }

    #[test]
    fn bpa_defining_relation_holds_exactly() {
        // (2-e^z)^{l+1} * bpa(l) = 1 up to the truncation order
        for bars in 0..=4u32 {
            let order = 12;
            let mut g1 = vec![-rat(1); order + 1];
            g1[0] = rat(1);
            let g1 = HurwitzSeries::from_coeffs(g1);
            let mut gp = HurwitzSeries::one(order);
            for _ in 0..=bars {
                gp = gp.mul(&g1).unwrap();
            }
            let prod = gp.mul(&HurwitzSeries::bpa(bars, order)).unwrap();
            assert_eq!(prod, HurwitzSeries::one(order));
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let s = HurwitzSeries::bpa(0, 6);
        let mut by_hand = HurwitzSeries::one(6);
        for _ in 0..5 {
            by_hand = by_hand.mul(&s).unwrap();
        }
        assert_eq!(s.pow(5), by_hand);
        assert_eq!(s.pow(0), HurwitzSeries::one(6));
    }

    #[test]
    fn integral_sequences_stay_integral() {
        let s = HurwitzSeries::bpa(3, 10);
        for n in 0..=10usize {
            assert!(to_integer(s.coeff(n).unwrap(), "bpa").is_ok());
        }
    }
}
