use std::fmt;

use super::{rat, PowerSeries, Rational};
use crate::error::{Error, Result};

/// `P0 + P1 λ + P2 λ²` with `λ = log z`; all parts share one truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogSeries {
    parts: [PowerSeries; 3],
}

impl LogSeries {
    /// Panics if the parts disagree on truncation order.
    pub fn new(p0: PowerSeries, p1: PowerSeries, p2: PowerSeries) -> Self {
        assert!(
            p0.order() == p1.order() && p1.order() == p2.order(),
            "log series parts must share one truncation order"
        );
        LogSeries {
            parts: [p0, p1, p2],
        }
    }

    /// A holomorphic series with no log terms.
    pub fn pure(p0: PowerSeries) -> Self {
        let order = p0.order();
        Self::new(p0, PowerSeries::zero(order), PowerSeries::zero(order))
    }

    /// The series `λ = log z`.
    pub fn log(order: usize) -> Self {
        Self::new(
            PowerSeries::zero(order),
            PowerSeries::one(order),
            PowerSeries::zero(order),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::pure(PowerSeries::zero(order))
    }

    pub fn order(&self) -> usize {
        self.parts[0].order()
    }

    /// Coefficient series of `λ^degree`, for `degree <= 2`.
    pub fn part(&self, degree: usize) -> &PowerSeries {
        &self.parts[degree]
    }

    pub fn parts(&self) -> &[PowerSeries; 3] {
        &self.parts
    }

    /// Highest power of `λ` with a nonzero coefficient; 0 for the zero series.
    pub fn log_degree(&self) -> usize {
        (0..3)
            .rev()
            .find(|&j| !self.parts[j].is_zero())
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(PowerSeries::is_zero)
    }

    /// The holomorphic part, provided every log term vanishes.
    pub fn into_pure(self) -> Option<PowerSeries> {
        if self.parts[1].is_zero() && self.parts[2].is_zero() {
            let [p0, _, _] = self.parts;
            Some(p0)
        } else {
            None
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        self.map(|p| p.truncate(order))
    }

    fn map(&self, f: impl Fn(&PowerSeries) -> PowerSeries) -> Self {
        let [a, b, c] = &self.parts;
        LogSeries {
            parts: [f(a), f(b), f(c)],
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&PowerSeries, &PowerSeries) -> PowerSeries) -> Self {
        let [a0, a1, a2] = &self.parts;
        let [b0, b1, b2] = &other.parts;
        LogSeries {
            parts: [f(a0, b0), f(a1, b1), f(a2, b2)],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, PowerSeries::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, PowerSeries::sub)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Multiplication by a holomorphic series.
    pub fn mul_series(&self, s: &PowerSeries) -> Self {
        self.map(|p| p.mul(s))
    }

    /// Division by a holomorphic unit series.
    pub fn div_series(&self, s: &PowerSeries) -> Result<Self> {
        let [a, b, c] = &self.parts;
        Ok(LogSeries {
            parts: [a.div(s)?, b.div(s)?, c.div(s)?],
        })
    }

    /// Multiplication by `z`, keeping the truncation order.
    pub fn shift_up(&self) -> Self {
        self.map(PowerSeries::shift_up)
    }

    /// Product of two log series; fails when the product needs `λ³` or higher.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let total = self.log_degree() + other.log_degree();
        if total > 2 && !(self.is_zero() || other.is_zero()) {
            return Err(Error::LogDegreeOverflow(total));
        }
        let order = self.order().min(other.order());
        let mut out = [
            PowerSeries::zero(order),
            PowerSeries::zero(order),
            PowerSeries::zero(order),
        ];
        for i in 0..3 {
            for j in 0..3 - i {
                if self.parts[i].is_zero() || other.parts[j].is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&self.parts[i].mul(&other.parts[j]));
            }
        }
        Ok(LogSeries { parts: out })
    }

    /// `θ = z d/dz` with `θλ = 1`:
    /// `θ(P0 + P1 λ + P2 λ²) = (θP0 + P1) + (θP1 + 2 P2) λ + (θP2) λ²`.
    pub fn theta(&self) -> Self {
        let [p0, p1, p2] = &self.parts;
        LogSeries {
            parts: [
                p0.theta().add(p1),
                p1.theta().add(&p2.scale(&rat(2))),
                p2.theta(),
            ],
        }
    }
}

impl fmt::Display for LogSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = ["", " * log(z)", " * log(z)^2"];
        let mut first = true;
        for (p, label) in self.parts.iter().zip(labels) {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({p}){label}")?;
        }
        if first {
            write!(f, "O(z^{})", self.order() + 1)?;
        }
        Ok(())
    }
}

impl From<PowerSeries> for LogSeries {
    fn from(p: PowerSeries) -> Self {
        LogSeries::pure(p)
    }
}

#[cfg(test)]
mod tests {
    use super::super::ratio;
    use super::*;

    #[test]
    fn theta_of_log_is_one() {
        let l = LogSeries::log(4);
        assert_eq!(l.theta(), LogSeries::pure(PowerSeries::one(4)));
    }

    #[test]
    fn theta_of_log_squared() {
        let sq = LogSeries::new(
            PowerSeries::zero(3),
            PowerSeries::zero(3),
            PowerSeries::one(3),
        );
        assert_eq!(sq.theta(), LogSeries::log(3).scale(&rat(2)));

        let half_sq = sq.scale(&ratio(1, 2));
        assert_eq!(half_sq.theta(), LogSeries::log(3));
    }

    #[test]
    fn theta_agrees_with_power_series_on_pure_input() {
        let p = PowerSeries::from_ints(&[3, 1, -4, 1, 5], 4);
        assert_eq!(
            LogSeries::pure(p.clone()).theta(),
            LogSeries::pure(p.theta())
        );
    }

    #[test]
    fn mul_respects_log_degree_cap() {
        let l = LogSeries::log(3);
        let sq = l.mul(&l).unwrap();
        assert_eq!(sq.log_degree(), 2);
        assert_eq!(sq.part(2), &PowerSeries::one(3));
        assert_eq!(sq.mul(&l), Err(Error::LogDegreeOverflow(3)));
        assert!(sq.mul(&LogSeries::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn into_pure() {
        assert!(LogSeries::log(2).into_pure().is_none());
        let p = PowerSeries::from_ints(&[1, 2], 2);
        assert_eq!(LogSeries::pure(p.clone()).into_pure(), Some(p));
    }
}
