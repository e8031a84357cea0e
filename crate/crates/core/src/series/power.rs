use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{rat, Rational};
use crate::error::{Error, Result};

/// Dense truncated series `a_0 + a_1 z + ... + a_N z^N` with `N = order()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Builds a series from explicit coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty: every series knows at least its constant term.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a power series needs at least one coefficient"
        );
        PowerSeries { coeffs }
    }

    /// Integer coefficients, padded with zeros (or truncated) to `order`.
    pub fn from_ints(values: &[i64], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|n| values.get(n).map_or_else(Rational::zero, |&v| rat(v)))
            .collect();
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `z` (which is `0` at order 0).
    pub fn var(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`. Panics if `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops every coefficient above `order`. Panics if `order > self.order()`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    ///
    /// Both operands are brought to a common denominator first so the
    /// convolution runs on integers and each output is reduced once.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let (a, da) = scaled(&self.coeffs[..=n]);
        let (b, db) = scaled(&other.coeffs[..=n]);
        let denom = da * db;
        let coeffs = (0..=n)
            .map(|k| {
                let mut acc = BigInt::zero();
                for i in 0..=k {
                    let (x, y) = (&a[i], &b[k - i]);
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                Rational::new(acc, denom.clone())
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Multiplication by `z`, keeping the truncation order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(Rational::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        PowerSeries { coeffs }
    }

    /// Exact quotient `self / other`, truncated at the smaller order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(Error::DivisionByNonUnit);
        }
        let inv_b0 = b0.recip();
        let n = self.order().min(other.order());
        let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                let b = &other.coeffs[i];
                if !b.is_zero() {
                    acc -= b * &q[k - i];
                }
            }
            q.push(acc * &inv_b0);
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// The Euler operator `z d/dz`: `a_n -> n a_n`.
    pub fn theta(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| a * rat(n as i64))
            .collect();
        PowerSeries { coeffs }
    }

    /// `exp(self)` for a series without constant term.
    ///
    /// Uses `theta(b) = theta(a) * b`, i.e. `n b_n = sum_k k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm(self.coeffs[0].clone()));
        }
        let n = self.order();
        let mut b = Vec::with_capacity(n + 1);
        b.push(Rational::one());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &b[m - k] * rat(k as i64);
                }
            }
            b.push(acc / rat(m as i64));
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// `log(self)` for a series with constant term 1; the result vanishes at 0.
    pub fn ln(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne(self.coeffs[0].clone()));
        }
        let n = self.order();
        let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
        b.push(Rational::zero());
        for m in 1..=n {
            let mut acc = &self.coeffs[m] * rat(m as i64);
            for (k, bk) in b.iter().enumerate().take(m).skip(1) {
                let a = &self.coeffs[m - k];
                if !a.is_zero() {
                    acc -= bk * a * rat(k as i64);
                }
            }
            b.push(acc / rat(m as i64));
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// `self(inner(z))`, truncated at the smaller order. Horner evaluation.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InnerConstantTermNonzero(inner.coeffs[0].clone()));
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = PowerSeries::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse `g` with `self(g(z)) = z`.
    ///
    /// Lagrange inversion: `g_n = [z^{n-1}] (z / f(z))^n / n`.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotReversible("constant term is nonzero"));
        }
        let n = self.order();
        let mut g = PowerSeries::zero(n);
        if n == 0 {
            return Ok(g);
        }
        if self.coeffs[1].is_zero() {
            return Err(Error::NotReversible("linear coefficient is zero"));
        }
        // f(z) / z, known through z^{n-1}
        let quotient = PowerSeries {
            coeffs: self.coeffs[1..].to_vec(),
        };
        let phi = PowerSeries::one(n - 1).div(&quotient)?;
        let mut power = PowerSeries::one(n - 1);
        for m in 1..=n {
            power = power.mul(&phi);
            g.coeffs[m] = &power.coeffs[m - 1] / rat(m as i64);
        }
        Ok(g)
    }
}

/// Integer numerators over the least common denominator.
fn scaled(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let denom = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| c.numer() * (&denom / c.denom()))
        .collect();
    (nums, denom)
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: Self) -> PowerSeries {
        PowerSeries::add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: Self) -> PowerSeries {
        PowerSeries::sub(self, rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: Self) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::neg(self)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::super::ratio;
    use super::*;

    fn series(values: &[Rational]) -> PowerSeries {
        PowerSeries::from_coeffs(values.to_vec())
    }

    #[test]
    fn add_identity_and_cancellation() {
        let a = PowerSeries::from_ints(&[1, 1], 3);
        assert_eq!(&a + &PowerSeries::zero(3), a);

        let b = PowerSeries::from_ints(&[0, 6, 45], 2);
        let c = PowerSeries::from_ints(&[0, -6], 2);
        assert_eq!(&b + &c, PowerSeries::from_ints(&[0, 0, 45], 2));

        let x = series(&[ratio(1, 2), ratio(1, 3)]);
        let y = series(&[ratio(1, 2), ratio(2, 3)]);
        assert_eq!(&x + &y, PowerSeries::from_ints(&[1, 1], 1));
    }

    #[test]
    fn add_truncates_to_smaller_order() {
        let a = PowerSeries::from_ints(&[1, 2, 3, 4], 3);
        let b = PowerSeries::from_ints(&[1], 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn mul_examples() {
        let p = PowerSeries::from_ints(&[1, 1], 4);
        let m = PowerSeries::from_ints(&[1, -1], 4);
        assert_eq!(&p * &m, PowerSeries::from_ints(&[1, 0, -1], 4));

        let f = PowerSeries::from_ints(&[3, -2, 7, 11], 3);
        assert_eq!(&f * &PowerSeries::one(3), f);

        let s = PowerSeries::from_ints(&[0, 6, 45], 2);
        assert_eq!(&s * &s, PowerSeries::from_ints(&[0, 0, 36], 2));
    }

    #[test]
    fn div_geometric() {
        let one = PowerSeries::one(3);
        let d = PowerSeries::from_ints(&[1, -27], 3);
        // sum (27 z)^n
        let oracle: Vec<i64> = (0..4).map(|n| 27i64.pow(n)).collect();
        assert_eq!(one.div(&d).unwrap(), PowerSeries::from_ints(&oracle, 3));

        let alt = PowerSeries::one(2)
            .div(&PowerSeries::from_ints(&[1, 1], 2))
            .unwrap();
        assert_eq!(alt, PowerSeries::from_ints(&[1, -1, 1], 2));

        let f = PowerSeries::from_ints(&[2, 5, -1, 4], 3);
        assert_eq!(f.div(&f).unwrap(), PowerSeries::one(3));
    }

    #[test]
    fn div_by_non_unit_fails() {
        let a = PowerSeries::one(2);
        let b = PowerSeries::var(2);
        assert_eq!(a.div(&b), Err(Error::DivisionByNonUnit));
    }

    #[test]
    fn theta_examples() {
        assert!(PowerSeries::one(3).theta().is_zero());
        let s = PowerSeries::from_ints(&[0, 6, 45], 2);
        assert_eq!(s.theta(), PowerSeries::from_ints(&[0, 6, 90], 2));
        let cube = PowerSeries::from_ints(&[0, 0, 0, 1], 3);
        assert_eq!(cube.theta(), PowerSeries::from_ints(&[0, 0, 0, 3], 3));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(PowerSeries::zero(4).exp().unwrap(), PowerSeries::one(4));
        // 45 + 6^2/2 = 63
        let s = PowerSeries::from_ints(&[0, 6, 45], 2);
        assert_eq!(s.exp().unwrap(), PowerSeries::from_ints(&[1, 6, 63], 2));
    }

    #[test]
    fn exp_rejects_constant_term() {
        let s = PowerSeries::from_ints(&[1, 1], 2);
        assert!(matches!(s.exp(), Err(Error::NonzeroConstantTerm(_))));
    }

    #[test]
    fn ln_examples() {
        assert!(PowerSeries::one(3).ln().unwrap().is_zero());
        let g = PowerSeries::one(2)
            .div(&PowerSeries::from_ints(&[1, -27], 2))
            .unwrap();
        // -log(1 - u) = u + u^2/2 + ...
        let expected = series(&[rat(0), rat(27), ratio(729, 2)]);
        assert_eq!(g.ln().unwrap(), expected);
        assert!(matches!(
            PowerSeries::from_ints(&[2, 1], 1).ln(),
            Err(Error::ConstantTermNotOne(_))
        ));
    }

    #[test]
    fn compose_examples() {
        let f = PowerSeries::from_ints(&[4, -1, 3, 8], 3);
        assert_eq!(f.compose(&PowerSeries::var(3)).unwrap(), f);

        let sq = PowerSeries::from_ints(&[0, 0, 1], 3);
        let inner = PowerSeries::from_ints(&[0, 1, 1], 3);
        assert_eq!(
            sq.compose(&inner).unwrap(),
            PowerSeries::from_ints(&[0, 0, 1, 2], 3)
        );
    }

    #[test]
    fn compose_rejects_inner_constant() {
        let f = PowerSeries::var(2);
        let g = PowerSeries::from_ints(&[1, 1], 2);
        assert!(matches!(
            f.compose(&g),
            Err(Error::InnerConstantTermNonzero(_))
        ));
    }

    #[test]
    fn compose_caps_at_inner_order() {
        let f = PowerSeries::from_ints(&[1, 1, 1, 1, 1], 4);
        let g = PowerSeries::var(2);
        assert_eq!(f.compose(&g).unwrap().order(), 2);
    }

    #[test]
    fn revert_examples() {
        assert_eq!(PowerSeries::var(5).revert().unwrap(), PowerSeries::var(5));
        let f = PowerSeries::from_ints(&[0, 1, 1], 3);
        assert_eq!(
            f.revert().unwrap(),
            PowerSeries::from_ints(&[0, 1, -1, 2], 3)
        );
    }

    #[test]
    fn revert_matches_catalan_numbers() {
        // The inverse of z + z^2 is sum (-1)^{n-1} C_{n-1} z^n.
        fn catalan(n: u64) -> i64 {
            let mut c: u128 = 1;
            for k in 0..n as u128 {
                c = c * 2 * (2 * k + 1) / (k + 2);
            }
            c as i64
        }
        let order = 15;
        let f = PowerSeries::from_ints(&[0, 1, 1], order);
        let g = f.revert().unwrap();
        for n in 1..=order {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(g.coeff(n), &rat(sign * catalan(n as u64 - 1)), "n = {n}");
        }
    }

    #[test]
    fn revert_rejects_degenerate_input() {
        assert!(matches!(
            PowerSeries::from_ints(&[1, 1], 2).revert(),
            Err(Error::NotReversible(_))
        ));
        assert!(matches!(
            PowerSeries::from_ints(&[0, 0, 1], 2).revert(),
            Err(Error::NotReversible(_))
        ));
    }

    #[test]
    fn shift_up_keeps_order() {
        let s = PowerSeries::from_ints(&[1, 2, 3], 2);
        assert_eq!(s.shift_up(), PowerSeries::from_ints(&[0, 1, 2], 2));
    }

    #[test]
    fn display() {
        let s = series(&[rat(0), rat(6), ratio(17325, 2)]);
        assert_eq!(s.to_string(), "6*z + 17325/2*z^2 + O(z^3)");
    }
}
